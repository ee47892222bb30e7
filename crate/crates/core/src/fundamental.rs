//! The fundamental-theorem pipeline: `A ⊗_B M` as a quotient of `A ⊗ M`,
//! the comparison map `α: A ⊗_B M^{AcoH} → M`, the sufficient conditions for
//! it to be invertible, the inverse `β` and the adjunction between
//! `N ↦ A ⊗_B N` and `M ↦ M^{AcoH}`.

use std::fmt;

use thiserror::Error;

use crate::exactlin::{add_scaled, tensor_vec, unit_vec, vec_sub, zero_vec, Matrix, Rational, Subspace, Vector};
use crate::hopfcore::{HopfAlgebra, StructureTensor};
use crate::invariants::{coinvariants, invariant_report, projection_p, ColinearAlgebraMap, InvariantReport};
use crate::repcat::{
    check_map, hom_space, verify_tp_hopf_module, verify_tp_module, ComoduleData, ComoduleTPAlgebra, HomFlags,
    MapSpace, ModuleView, RepError, TPHopfModule, TPModule,
};
use crate::report::{Law, Report, Witness};
use crate::tpalg::Subalgebra;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FundamentalError {
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error("{map} does not descend to A⊗_B M: {witness}")]
    NotWellDefined { map: String, witness: Witness },
}

/// `A ⊗_B N` realised as `(A ⊗ N) / R` with
/// `R = span{(a·b)⊗n - a⊗(b·n)}`. Classes are written against the standard
/// basis vectors of `A ⊗ N` at the non-pivot columns of `R`.
#[derive(Debug, Clone)]
pub struct TensorOverB {
    pub a_dim: usize,
    pub n_dim: usize,
    pub relations: Subspace,
    /// Ambient index `i·dim N + k` (for `e_i ⊗ n_k`) of each quotient basis vector.
    pub representatives: Vec<usize>,
    pub module: TPHopfModule,
}

impl TensorOverB {
    pub fn ambient_dim(&self) -> usize {
        self.a_dim * self.n_dim
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Class of an element of `A ⊗ N`.
    pub fn class(&self, v: &[Rational]) -> Vector {
        self.relations.quotient_coordinates(v)
    }

    /// Class of `x ⊗ y`.
    pub fn class_of(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.class(&tensor_vec(x, y))
    }

    /// `(i, k)` such that quotient basis vector `c` is the class of `e_i ⊗ n_k`.
    pub fn representative(&self, c: usize) -> (usize, usize) {
        let p = self.representatives[c];
        (p / self.n_dim, p % self.n_dim)
    }
}

/// A `B`-module `N` (a `TPModule` over `B` whose Lie action must vanish,
/// since the bracket of `B` does) turned into the Hopf module `A ⊗_B N`.
/// Every structure map is checked to preserve the relations before it is
/// pushed to the quotient, and the result is run through the Hopf-module
/// verifier.
pub fn tensor_over_b(
    a: &ComoduleTPAlgebra,
    h: &HopfAlgebra,
    b: &Subalgebra,
    n: &TPModule,
) -> Result<TensorOverB, FundamentalError> {
    let (da, dn, dh, db) = (a.dim(), n.dim, h.dim(), b.dim());
    if n.acting_dim() != db {
        return Err(RepError::Shape(format!("module is over a {}-dimensional algebra, B has dimension {db}", n.acting_dim())).into());
    }
    if b.carrier.ambient_dim() != da {
        return Err(RepError::Shape("B is not a subalgebra of A".into()).into());
    }
    let module_report = verify_tp_module(n, &b.tp())?;
    if !module_report.pass() {
        return Err(RepError::Hypothesis(format!("N is not a transposed Poisson B-module:\n{module_report}")).into());
    }
    let n_act = n.act()?;
    let amb = da * dn;

    let mut gens = Vec::with_capacity(da * db * dn);
    for i in 0..da {
        let ei = a.tp.e(i);
        for q in 0..db {
            let ab = a.tp.mul(&ei, b.element(q));
            for k in 0..dn {
                let ek = unit_vec(dn, k);
                gens.push(vec_sub(
                    &tensor_vec(&ab, &ek),
                    &tensor_vec(&ei, n_act.get(q, k)),
                ));
            }
        }
    }
    let relations = Subspace::span(amb, &gens);

    let id_n = Matrix::identity(dn);
    let act_ops: Vec<Matrix> = (0..da).map(|i| a.tp.algebra.mult.left_matrix(i).kron(&id_n)).collect();
    let lie_ops: Vec<Matrix> = (0..da).map(|i| a.tp.bracket.left_matrix(i).kron(&id_n)).collect();
    // e_r ⊗ n_k ↦ Σ c e_r' ⊗ n_k ⊗ h_s for ρ(e_r) = Σ c e_r' ⊗ h_s
    let mut coaction = Matrix::zeros(amb * dh, amb);
    for r in 0..da {
        for (c, r2, s) in a.comodule.terms(r) {
            for k in 0..dn {
                coaction[(((r2 * dn) + k) * dh + s, r * dn + k)] += &c;
            }
        }
    }
    let ambient = ComoduleData::new(amb, dh, coaction)?;

    for (name, ops) in [("the algebra action", &act_ops), ("the Lie action", &lie_ops)] {
        for (i, op) in ops.iter().enumerate() {
            for (p, rel) in relations.basis().iter().enumerate() {
                let img = op.mul_vec(rel);
                if !relations.contains(&img) {
                    return Err(FundamentalError::NotWellDefined {
                        map: format!("{name} of basis element {i}"),
                        witness: Witness {
                            law: Law::WellDefined,
                            indices: vec![i, p],
                            rhs: relations.reduce(&img),
                            lhs: img,
                        },
                    });
                }
            }
        }
    }
    let stable = ambient.is_stable(&relations);
    if let Some(w) = stable.witnesses.into_iter().next() {
        return Err(FundamentalError::NotWellDefined {
            map: "the coaction".into(),
            witness: Witness {
                law: Law::WellDefined,
                ..w
            },
        });
    }

    let representatives = relations.free_columns();
    let dq = representatives.len();
    let descend = |op: &Matrix| -> Matrix {
        let cols: Vec<Vector> = representatives
            .iter()
            .map(|&p| relations.quotient_coordinates(&op.column(p)))
            .collect();
        Matrix::from_columns(&cols, dq).expect("descended operator shape")
    };
    let act = StructureTensor::from_left_matrices(&act_ops.iter().map(&descend).collect::<Vec<_>>(), dq, dq);
    let lie_act = StructureTensor::from_left_matrices(&lie_ops.iter().map(&descend).collect::<Vec<_>>(), dq, dq);
    let mut q_coaction = Matrix::zeros(dq * dh, dq);
    for (c, &p) in representatives.iter().enumerate() {
        let img = ambient.coact(&unit_vec(amb, p));
        for (s, slice) in ambient.slices(&img).into_iter().enumerate() {
            for (k, x) in relations.quotient_coordinates(&slice).into_iter().enumerate() {
                q_coaction[(k * dh + s, c)] = x;
            }
        }
    }
    let module = TPHopfModule::new(
        format!("{} ⊗_B N", a.name),
        TPModule::new(dq, Some(act), lie_act)?,
        ComoduleData::new(dq, dh, q_coaction)?,
    )?;
    let post = verify_tp_hopf_module(&module, a, h)?;
    if !post.pass() {
        return Err(RepError::PostCheck(post).into());
    }
    Ok(TensorOverB {
        a_dim: da,
        n_dim: dn,
        relations,
        representatives,
        module,
    })
}

/// `M^{AcoH}` as a module over `B`, in the coordinates of `joint`'s RREF
/// basis, with zero Lie action.
pub fn invariant_module(m: &TPHopfModule, b: &Subalgebra, joint: &Subspace) -> Result<TPModule, FundamentalError> {
    let act = m.act()?;
    let (db, dj) = (b.dim(), joint.dim());
    let mut entries = Vec::with_capacity(db);
    for q in 0..db {
        let mut row = Vec::with_capacity(dj);
        for (k, x) in joint.basis().iter().enumerate() {
            let bx = act.apply(b.element(q), x);
            let c = joint.coordinates(&bx).ok_or_else(|| FundamentalError::NotWellDefined {
                map: "the B-action on the invariants".into(),
                witness: Witness {
                    law: Law::ClosedUnderProduct,
                    indices: vec![q, k],
                    rhs: joint.reduce(&bx),
                    lhs: bx.clone(),
                },
            })?;
            row.push(c);
        }
        entries.push(row);
    }
    let act = StructureTensor::from_nested(entries, db, dj, dj).map_err(|e| RepError::Shape(e.to_string()))?;
    Ok(TPModule::with_zero_lie(act))
}

/// `a ⊗_B n ↦ a·ι(n)` for an embedding `ι: N → M` given by the columns of
/// `embed` (vectors of `M`).
fn multiply_out(t: &TensorOverB, m: &TPHopfModule, embed: &[Vector]) -> Result<Matrix, FundamentalError> {
    let act = m.act()?;
    let cols: Vec<Vector> = (0..t.dim())
        .map(|c| {
            let (i, k) = t.representative(c);
            act.apply(&unit_vec(t.a_dim, i), &embed[k])
        })
        .collect();
    Ok(Matrix::from_columns(&cols, m.dim()).expect("multiplication map shape"))
}

/// `α: a ⊗_B m ↦ a·m` on `t = A ⊗_B M^{AcoH}` built over `joint`'s basis,
/// with the check that it vanishes on the relations.
pub fn alpha(t: &TensorOverB, m: &TPHopfModule, joint: &Subspace) -> Result<(Matrix, Report), FundamentalError> {
    let act = m.act()?;
    let matrix = multiply_out(t, m, joint.basis())?;
    let mut report = Report::new();
    for (p, rel) in t.relations.basis().iter().enumerate() {
        let mut img = zero_vec(m.dim());
        for (idx, c) in rel.iter().enumerate() {
            let (i, k) = (idx / t.n_dim, idx % t.n_dim);
            add_scaled(&mut img, c, &act.apply(&unit_vec(t.a_dim, i), &joint.basis()[k]));
        }
        report.compare(Law::WellDefined, &[p], img, zero_vec(m.dim()));
    }
    Ok((matrix, report))
}

/// Outcome of evaluating the two sufficient conditions on all basis triples.
#[derive(Debug, Clone)]
pub struct Conditions {
    pub on_module: Report,
    pub on_algebra: Report,
    /// `M^{coH} = M^{AcoH}`, computed independently of the conditions.
    pub coincidence: bool,
}

impl Conditions {
    pub fn pass(&self) -> bool {
        self.on_module.pass() && self.on_algebra.pass()
    }

    /// Passing the module condition must force the coincidence.
    pub fn implication_holds(&self) -> bool {
        !self.on_module.pass() || self.coincidence
    }
}

/// `{1,aa'}·p(m) = φ(a'1)⋄(a·p(a'0·m))` for basis `a`, `a'`, `m`.
fn condition(
    m: &TPHopfModule,
    p: &Matrix,
    a: &ComoduleTPAlgebra,
    phi: &ColinearAlgebraMap,
    law: Law,
) -> Result<Report, FundamentalError> {
    let act = m.act()?;
    let n = a.dim();
    let one = a.tp.one();
    let dh = a.comodule.h_dim;
    let mut r = Report::new();
    for i in 0..n {
        let ei = a.tp.e(i);
        for j in 0..n {
            let scalar = a.tp.br(&one, a.tp.algebra.mul_basis(i, j));
            let terms = a.comodule.terms(j);
            for k in 0..m.dim() {
                let ek = unit_vec(m.dim(), k);
                let lhs = act.apply(&scalar, &p.mul_vec(&ek));
                let mut rhs = zero_vec(m.dim());
                for (c, r2, s) in &terms {
                    let inner = p.mul_vec(&act.apply(&a.tp.e(*r2), &ek));
                    let moved = act.apply(&ei, &inner);
                    let phis = phi.apply(&unit_vec(dh, *s));
                    add_scaled(&mut rhs, c, &m.lie().apply(&phis, &moved));
                }
                r.compare(law, &[i, j, k], lhs, rhs);
            }
        }
    }
    Ok(r)
}

pub fn check_conditions(
    a: &ComoduleTPAlgebra,
    h: &HopfAlgebra,
    m: &TPHopfModule,
    phi: &ColinearAlgebraMap,
    joint: &Subspace,
) -> Result<Conditions, FundamentalError> {
    let missing = missing_phi_flags(phi);
    if !missing.is_empty() {
        return Err(RepError::Hypothesis(format!("φ fails: {}", missing.join(", "))).into());
    }
    let pm = projection_p(m, phi, h)?.matrix;
    let reg = TPHopfModule::regular(a);
    let pa = projection_p(&reg, phi, h)?.matrix;
    Ok(Conditions {
        on_module: condition(m, &pm, a, phi, Law::ConditionModule)?,
        on_algebra: condition(&reg, &pa, a, phi, Law::ConditionAlgebra)?,
        coincidence: coinvariants(&m.comodule, h) == *joint,
    })
}

fn missing_phi_flags(phi: &ColinearAlgebraMap) -> Vec<&'static str> {
    let f = phi.flags;
    [
        ("image in the center", f.lands_in_center),
        ("H-colinearity", f.colinear),
        ("multiplicativity", f.algebra_map),
        ("φ(1) = 1", f.unit_preserving),
    ]
    .into_iter()
    .filter(|(_, ok)| !ok)
    .map(|(n, _)| n)
    .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// Hypotheses hold, `α` and `β` are mutually inverse morphisms.
    Valid,
    /// Some hypothesis failed; the remaining fields describe what was found.
    Diagnostic,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Valid => "VALID",
            Status::Diagnostic => "DIAGNOSTIC",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankData {
    pub dim_a: usize,
    pub dim_b: usize,
    pub dim_m: usize,
    pub dim_coinvariants: usize,
    pub dim_joint: usize,
    pub dim_tensor: usize,
}

#[derive(Debug, Clone)]
pub struct IsoCertificate {
    pub status: Status,
    pub failed_hypotheses: Vec<String>,
    pub invariants: InvariantReport,
    pub tensor: TensorOverB,
    pub alpha: Matrix,
    pub alpha_bijective: bool,
    pub beta: Option<Matrix>,
    pub alpha_beta: Option<Matrix>,
    pub beta_alpha: Option<Matrix>,
    /// `α` and `β` against `A`-linearity, Lie `A`-linearity and
    /// `H`-colinearity, plus `α` vanishing on the relations.
    pub morphism_report: Report,
    pub conditions: Option<Conditions>,
    pub rank: RankData,
    /// When the certificate is valid and `B ≅ Q`: a basis of `M^{AcoH}` that
    /// is a free `A`-basis of `M`.
    pub free_basis: Option<Vec<Vector>>,
}

impl IsoCertificate {
    /// Hypotheses holding without a valid certificate contradicts the
    /// theorem; callers treat `false` as a defect.
    pub fn consistent_with_theorem(&self) -> bool {
        !self.failed_hypotheses.is_empty() || self.status == Status::Valid
    }
}

/// Builds `A ⊗_B M^{AcoH}` and `α`, evaluates the hypotheses and, where the
/// coinvariants coincide with `M^{AcoH}`, `β(m) = φ(m1) ⊗_B p(m0)` and both
/// composites. `b` defaults to the computed `A^{AcoH}`; a smaller subalgebra
/// may be passed.
pub fn beta_and_certify(
    a: &ComoduleTPAlgebra,
    h: &HopfAlgebra,
    m: &TPHopfModule,
    phi: Option<&ColinearAlgebraMap>,
    b: Option<&Subalgebra>,
) -> Result<IsoCertificate, FundamentalError> {
    let base = verify_tp_hopf_module(m, a, h)?;
    if !base.pass() {
        return Err(RepError::Upstream(format!("M is not a transposed Poisson Hopf module:\n{base}")).into());
    }
    let inv = invariant_report(m, a, h)?;
    let b = match b {
        Some(b) => {
            if !inv.algebra.b.carrier.contains_subspace(&b.carrier) {
                return Err(RepError::Hypothesis("the given B is not contained in A^{AcoH}".into()).into());
            }
            b.clone()
        }
        None => inv.algebra.b.clone(),
    };
    let joint = inv.joint.clone();
    let g = invariant_module(m, &b, &joint)?;
    let tensor = tensor_over_b(a, h, &b, &g)?;
    let (alpha_m, mut morphism_report) = alpha(&tensor, m, &joint)?;
    let alpha_bijective = alpha_m.rows() == alpha_m.cols() && alpha_m.rank() == alpha_m.rows();

    let t_view = ModuleView::of_hopf_module(&tensor.module);
    let m_view = ModuleView::of_hopf_module(m);
    morphism_report.merge(check_map(&alpha_m, &t_view, &m_view, HomFlags::HOPF_MODULE));

    let mut failed = Vec::new();
    let mut conditions = None;
    match phi {
        None => failed.push("no φ: H → A supplied".to_string()),
        Some(phi) => {
            let missing = missing_phi_flags(phi);
            if missing.is_empty() {
                let c = check_conditions(a, h, m, phi, &joint)?;
                if !c.on_module.pass() {
                    failed.push("condition on M fails".into());
                }
                if !c.on_algebra.pass() {
                    failed.push("condition on A fails".into());
                }
                conditions = Some(c);
            } else {
                failed.extend(missing.into_iter().map(|s| format!("φ fails: {s}")));
            }
        }
    }

    let coincide = inv.coinvariants == joint;
    let usable_phi = phi.filter(|p| p.flags.unit_preserving && p.flags.colinear);
    let mut beta = None;
    if let (Some(phi), true) = (usable_phi, coincide) {
        let p = projection_p(m, phi, h)?.matrix;
        let dh = h.dim();
        let cols: Vec<Vector> = (0..m.dim())
            .map(|k| {
                let mut acc = zero_vec(tensor.dim());
                for (c, r, s) in m.comodule.terms(k) {
                    let pr = p.column(r);
                    let coords = joint.coordinates(&pr).expect("p lands in the coinvariants, which equal M^{AcoH}");
                    let class = tensor.class_of(&phi.apply(&unit_vec(dh, s)), &coords);
                    add_scaled(&mut acc, &c, &class);
                }
                acc
            })
            .collect();
        let beta_m = Matrix::from_columns(&cols, tensor.dim()).expect("beta shape");
        morphism_report.merge(check_map(&beta_m, &m_view, &t_view, HomFlags::HOPF_MODULE));
        beta = Some(beta_m);
    }
    let alpha_beta = beta.as_ref().map(|bm| alpha_m.mul(bm));
    let beta_alpha = beta.as_ref().map(|bm| bm.mul(&alpha_m));
    let inverse = matches!((&alpha_beta, &beta_alpha), (Some(x), Some(y)) if x.is_identity() && y.is_identity());
    let status = if failed.is_empty() && inverse && morphism_report.pass() {
        Status::Valid
    } else {
        Status::Diagnostic
    };
    let rank = RankData {
        dim_a: a.dim(),
        dim_b: b.dim(),
        dim_m: m.dim(),
        dim_coinvariants: inv.coinvariants.dim(),
        dim_joint: joint.dim(),
        dim_tensor: tensor.dim(),
    };
    let free_basis = (status == Status::Valid && b.dim() == 1 && rank.dim_m == rank.dim_a * rank.dim_joint)
        .then(|| joint.basis().to_vec());
    Ok(IsoCertificate {
        status,
        failed_hypotheses: failed,
        invariants: inv,
        tensor,
        alpha: alpha_m,
        alpha_bijective,
        beta,
        alpha_beta,
        beta_alpha,
        morphism_report,
        conditions,
        rank,
        free_basis,
    })
}

/// `ψ(f) = f(1 ⊗_B −)` between the computed spaces
/// `Hom^H(A ⊗_B N, M)` and `Hom_B(N, M^{AcoH})`, its inverse
/// `ψ'(g)(a ⊗_B n) = a·g(n)`, the unit `η_N(n) = 1 ⊗_B n`, the counit `ε_M`
/// and both triangle identities on this instance.
#[derive(Debug, Clone)]
pub struct Adjunction {
    pub hopf_hom: MapSpace,
    pub b_hom: MapSpace,
    /// Coordinate matrices between the two hom-spaces.
    pub psi: Matrix,
    pub psi_prime: Matrix,
    /// `N → (A ⊗_B N)^{AcoH}` in the coordinates of that subspace's basis.
    pub eta: Matrix,
    /// `A ⊗_B M^{AcoH} → M`.
    pub epsilon: Matrix,
    pub inverse_pair: bool,
    pub triangle_f: bool,
    pub triangle_g: bool,
    pub verified: bool,
}

pub fn adjunction_psi(
    a: &ComoduleTPAlgebra,
    h: &HopfAlgebra,
    b: &Subalgebra,
    n: &TPModule,
    m: &TPHopfModule,
) -> Result<Adjunction, FundamentalError> {
    let one = a.tp.one();
    let fn_ = tensor_over_b(a, h, b, n)?;
    let inv_m = invariant_report(m, a, h)?;
    let joint = &inv_m.joint;
    let gm = invariant_module(m, b, joint)?;

    let hopf_hom = hom_space(
        &ModuleView::of_hopf_module(&fn_.module),
        &ModuleView::of_hopf_module(m),
        HomFlags::HOPF_MODULE,
    )?;
    let b_flags = HomFlags {
        b_linear: true,
        ..HomFlags::NONE
    };
    let n_view = ModuleView::bare(n.dim).with_b_act(n.act()?.left_matrices());
    let gm_view = ModuleView::bare(gm.dim).with_b_act(gm.act()?.left_matrices());
    let b_hom = hom_space(&n_view, &gm_view, b_flags)?;

    // ι: n ↦ 1 ⊗_B n
    let iota_cols: Vec<Vector> = (0..n.dim).map(|k| fn_.class_of(&one, &unit_vec(n.dim, k))).collect();
    let iota = Matrix::from_columns(&iota_cols, fn_.dim()).expect("iota shape");

    let mut inverse_pair = hopf_hom.dim() == b_hom.dim();
    let mut psi_cols = Vec::with_capacity(hopf_hom.dim());
    for f in hopf_hom.basis_maps() {
        let fi = f.mul(&iota);
        let coords: Option<Vec<Vector>> = fi.columns().iter().map(|c| joint.coordinates(c)).collect();
        let g = coords
            .and_then(|cols| Matrix::from_columns(&cols, joint.dim()).ok())
            .and_then(|g| b_hom.coordinates(&g));
        match g {
            Some(c) => psi_cols.push(c),
            None => {
                inverse_pair = false;
                psi_cols.push(zero_vec(b_hom.dim()));
            }
        }
    }
    let mut psi_prime_cols = Vec::with_capacity(b_hom.dim());
    for g in b_hom.basis_maps() {
        let images: Vec<Vector> = g.columns().iter().map(|c| joint.embed(c)).collect();
        let f = multiply_out(&fn_, m, &images)?;
        match hopf_hom.coordinates(&f) {
            Some(c) => psi_prime_cols.push(c),
            None => {
                inverse_pair = false;
                psi_prime_cols.push(zero_vec(hopf_hom.dim()));
            }
        }
    }
    let psi = Matrix::from_columns(&psi_cols, b_hom.dim()).expect("psi shape");
    let psi_prime = Matrix::from_columns(&psi_prime_cols, hopf_hom.dim()).expect("psi' shape");
    inverse_pair = inverse_pair && psi.mul(&psi_prime).is_identity() && psi_prime.mul(&psi).is_identity();

    // η_N lands in (A ⊗_B N)^{AcoH}
    let inv_fn = invariant_report(&fn_.module, a, h)?;
    let joint_fn = &inv_fn.joint;
    let eta_cols: Option<Vec<Vector>> = iota.columns().iter().map(|c| joint_fn.coordinates(c)).collect();
    let eta = match eta_cols {
        Some(cols) => Matrix::from_columns(&cols, joint_fn.dim()).expect("eta shape"),
        None => {
            return Ok(Adjunction {
                hopf_hom,
                b_hom,
                psi,
                psi_prime,
                eta: Matrix::zeros(joint_fn.dim(), n.dim),
                epsilon: Matrix::zeros(m.dim(), 0),
                inverse_pair,
                triangle_f: false,
                triangle_g: false,
                verified: false,
            });
        }
    };

    // ε_{F N} ∘ F(η_N) = id on A ⊗_B N
    let gfn = invariant_module(&fn_.module, b, joint_fn)?;
    let fgfn = tensor_over_b(a, h, b, &gfn)?;
    let f_eta_cols: Vec<Vector> = (0..fn_.dim())
        .map(|c| {
            let (i, k) = fn_.representative(c);
            fgfn.class_of(&a.tp.e(i), &eta.column(k))
        })
        .collect();
    let f_eta = Matrix::from_columns(&f_eta_cols, fgfn.dim()).expect("F(eta) shape");
    let (eps_fn, eps_fn_report) = alpha(&fgfn, &fn_.module, joint_fn)?;
    let triangle_f = eps_fn_report.pass() && eps_fn.mul(&f_eta).is_identity();

    // G(ε_M) ∘ η_{G M} = id on M^{AcoH}
    let fgm = tensor_over_b(a, h, b, &gm)?;
    let (epsilon, eps_report) = alpha(&fgm, m, joint)?;
    let mut triangle_g = eps_report.pass();
    for k in 0..joint.dim() {
        let unit_class = fgm.class_of(&one, &unit_vec(joint.dim(), k));
        let back = epsilon.mul_vec(&unit_class);
        triangle_g &= joint.coordinates(&back) == Some(unit_vec(joint.dim(), k));
    }
    let verified = inverse_pair && triangle_f && triangle_g;
    Ok(Adjunction {
        hopf_hom,
        b_hom,
        psi,
        psi_prime,
        eta,
        epsilon,
        inverse_pair,
        triangle_f,
        triangle_g,
        verified,
    })
}

/// `B^d` with `B` acting diagonally by its own product.
pub fn free_b_module(b: &Subalgebra, copies: usize) -> TPModule {
    let db = b.dim();
    let d = db * copies;
    let act = StructureTensor::from_fn(db, d, d, |q, p| {
        let (copy, r) = (p / db, p % db);
        let prod = b.algebra.mul_basis(q, r);
        let mut v = zero_vec(d);
        for (s, c) in prod.iter().enumerate() {
            v[copy * db + s] = c.clone();
        }
        v
    });
    TPModule::with_zero_lie(act)
}

/// `Q^d` as a `B`-module when `B = Q·1`: the unit acts as the identity.
pub fn scalar_b_module(b: &Subalgebra, d: usize) -> Result<TPModule, FundamentalError> {
    if b.dim() != 1 {
        return Err(RepError::Hypothesis(format!("Q^d is a B-module this way only when B = Q, not dim {}", b.dim())).into());
    }
    let act = StructureTensor::from_fn(1, d, d, |_, k| unit_vec(d, k));
    Ok(TPModule::with_zero_lie(act))
}

/// The zero `B`-module.
pub fn zero_b_module(b: &Subalgebra) -> TPModule {
    TPModule::with_zero_lie(StructureTensor::zero(b.dim(), 0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::{group_algebra, truncated_polynomial};
    use crate::tpalg::{derivation_bracket, x_power_ddx, TPAlgebra};

    fn c2() -> (HopfAlgebra, ComoduleTPAlgebra, TPHopfModule, ColinearAlgebraMap) {
        let h = group_algebra(&[2]);
        let a = ComoduleTPAlgebra::new(
            "Q[C2]",
            TPAlgebra::zero_bracket(h.algebra.clone()),
            ComoduleData::regular(&h),
        )
        .unwrap();
        let m = TPHopfModule::regular(&a);
        let phi = ColinearAlgebraMap::new(Matrix::identity(2), &a, &h).unwrap();
        (h, a, m, phi)
    }

    fn a3(euler: bool) -> (HopfAlgebra, ComoduleTPAlgebra, TPHopfModule, ColinearAlgebraMap) {
        let h = HopfAlgebra::trivial();
        let alg = truncated_polynomial(3);
        let tp = if euler {
            derivation_bracket(&alg, &x_power_ddx(3, 1)).unwrap()
        } else {
            TPAlgebra::zero_bracket(alg)
        };
        let a = ComoduleTPAlgebra::new("A3", tp, ComoduleData::trivial(3, &h)).unwrap();
        let m = TPHopfModule::regular(&a);
        let phi = ColinearAlgebraMap::unit_map(&a, &h).unwrap();
        (h, a, m, phi)
    }

    #[test]
    fn tensor_over_unit_does_not_collapse() {
        let (h, a, _, _) = c2();
        let inv = crate::invariants::algebra_invariants(&a, &h).unwrap();
        let n = scalar_b_module(&inv.b, 3).unwrap();
        let t = tensor_over_b(&a, &h, &inv.b, &n).unwrap();
        assert_eq!(t.dim(), 6);
        assert!(t.relations.is_zero());
    }

    #[test]
    fn tensor_over_larger_b_collapses() {
        // B = A: A ⊗_A A ≅ A
        let (h, a, _, _) = a3(false);
        let b = Subalgebra::induced(&a.tp, Subspace::full(3)).unwrap();
        let n = free_b_module(&b, 1);
        let t = tensor_over_b(&a, &h, &b, &n).unwrap();
        assert_eq!(t.dim(), 3);
    }

    #[test]
    fn tensor_over_noncentral_b_is_rejected() {
        // B = A with a nonzero bracket: the Lie action does not descend
        let (h, a, _, _) = a3(true);
        let b = Subalgebra::induced(&a.tp, Subspace::full(3)).unwrap();
        let zero_b = b.tp();
        let n = TPModule::with_zero_lie(zero_b.algebra.mult.clone());
        match tensor_over_b(&a, &h, &b, &n) {
            Err(FundamentalError::Rep(RepError::Hypothesis(_))) | Err(FundamentalError::NotWellDefined { .. }) => {}
            other => panic!("expected rejection, got {other:?}"),
        }
    }

    #[test]
    fn c2_certificate_is_valid() {
        let (h, a, m, phi) = c2();
        let cert = beta_and_certify(&a, &h, &m, Some(&phi), None).unwrap();
        assert_eq!(cert.status, Status::Valid, "{:?}", cert.failed_hypotheses);
        assert!(cert.alpha_beta.as_ref().unwrap().is_identity());
        assert!(cert.beta_alpha.as_ref().unwrap().is_identity());
        assert_eq!(cert.rank.dim_tensor, 2);
        assert_eq!(cert.rank.dim_joint, 1);
        assert_eq!(cert.free_basis, Some(vec![unit_vec(2, 0)]));
        assert!(cert.consistent_with_theorem());
    }

    #[test]
    fn euler_a3_is_diagnostic_but_alpha_is_bijective() {
        let (h, a, m, phi) = a3(true);
        let cert = beta_and_certify(&a, &h, &m, Some(&phi), None).unwrap();
        assert_eq!(cert.status, Status::Diagnostic);
        let c = cert.conditions.as_ref().unwrap();
        let w = c.on_module.first(Law::ConditionModule).unwrap();
        assert_eq!(w.indices, vec![0, 0, 1]);
        assert_eq!(w.lhs, zero_vec(3));
        assert_eq!(w.rhs, unit_vec(3, 1));
        assert!(!c.coincidence);
        assert_eq!(cert.rank.dim_coinvariants, 3);
        assert_eq!(cert.rank.dim_joint, 1);
        assert!(cert.alpha_bijective);
        assert!(cert.beta.is_none());
        assert!(cert.morphism_report.pass(), "{}", cert.morphism_report);
    }

    #[test]
    fn zero_bracket_trivial_h_is_valid() {
        let (h, a, m, phi) = a3(false);
        let cert = beta_and_certify(&a, &h, &m, Some(&phi), None).unwrap();
        assert_eq!(cert.status, Status::Valid);
        // B = A here, so the free-basis statement does not apply
        assert_eq!(cert.rank.dim_b, 3);
        assert!(cert.free_basis.is_none());
    }

    #[test]
    fn adjunction_instances() {
        let (h, a, m, _) = c2();
        let inv = crate::invariants::algebra_invariants(&a, &h).unwrap();
        for n in [zero_b_module(&inv.b), scalar_b_module(&inv.b, 1).unwrap(), scalar_b_module(&inv.b, 2).unwrap()] {
            let adj = adjunction_psi(&a, &h, &inv.b, &n, &m).unwrap();
            assert!(adj.verified, "{adj:?}");
            assert_eq!(adj.hopf_hom.dim(), adj.b_hom.dim());
        }
        let n = scalar_b_module(&inv.b, 1).unwrap();
        let adj = adjunction_psi(&a, &h, &inv.b, &n, &m).unwrap();
        assert_eq!(adj.b_hom.dim(), 1);
    }

    #[test]
    fn adjunction_over_nontrivial_b() {
        let (h, a, m, _) = a3(false);
        let inv = crate::invariants::algebra_invariants(&a, &h).unwrap();
        for n in [zero_b_module(&inv.b), free_b_module(&inv.b, 1), free_b_module(&inv.b, 2)] {
            let adj = adjunction_psi(&a, &h, &inv.b, &n, &m).unwrap();
            assert!(adj.verified, "{adj:?}");
        }
    }
}
