//! Comodules, comodule transposed Poisson algebras and transposed Poisson
//! (A,H)-Hopf modules, plus the induced module `N ⊗ H`, hom-space solving and
//! the isomorphism `γ: Hom^H(M, N⊗H) → Hom(M, N)`.
//!
//! Coactions are stored as matrices of shape `(dim·dim H) × dim`: column `i`
//! is `ρ(e_i)` flattened with the module index varying slowest.

use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::{
    add_scaled, rat, stacked_kernel, tensor_vec, unit_vec, vec_scale, vec_sub, zero_vec, Matrix,
    Rational, Subspace, Vector,
};
use crate::hopfcore::{AlgebraData, HopfAlgebra, StructureTensor};
use crate::report::{Law, Report};
use crate::tpalg::{verify_tp_algebra, CenterSubspace, TPAlgebra, TpError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("malformed data: {0}")]
    Shape(String),
    #[error("upstream structure invalid: {0}")]
    Upstream(String),
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("module carries no algebra action")]
    MissingAction,
    #[error("constructed object failed its own verification:\n{0}")]
    PostCheck(Report),
}

impl From<TpError> for RepError {
    fn from(e: TpError) -> Self {
        RepError::Upstream(e.to_string())
    }
}

/// A right `H`-comodule structure on a based space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComoduleData {
    pub dim: usize,
    pub h_dim: usize,
    pub coaction: Matrix,
}

impl ComoduleData {
    pub fn new(dim: usize, h_dim: usize, coaction: Matrix) -> Result<Self, RepError> {
        if coaction.rows() != dim * h_dim || coaction.cols() != dim {
            return Err(RepError::Shape(format!(
                "coaction is {}x{} (expected {}x{dim})",
                coaction.rows(),
                coaction.cols(),
                dim * h_dim
            )));
        }
        Ok(Self {
            dim,
            h_dim,
            coaction,
        })
    }

    /// `m ↦ m ⊗ 1_H`.
    pub fn trivial(dim: usize, h: &HopfAlgebra) -> Self {
        let coaction = Matrix::identity(dim).kron(&Matrix::from_columns(&[h.one()], h.dim()).expect("unit column"));
        Self {
            dim,
            h_dim: h.dim(),
            coaction,
        }
    }

    /// `H` coacting on itself through `Δ`.
    pub fn regular(h: &HopfAlgebra) -> Self {
        Self {
            dim: h.dim(),
            h_dim: h.dim(),
            coaction: h.coalgebra.comult.clone(),
        }
    }

    pub fn coact(&self, v: &[Rational]) -> Vector {
        self.coaction.mul_vec(v)
    }

    /// Nonzero terms `(c, r, s)` of `ρ(e_i) = Σ c · e_r ⊗ h_s`.
    pub fn terms(&self, i: usize) -> Vec<(Rational, usize, usize)> {
        (0..self.dim * self.h_dim)
            .filter_map(|p| {
                let c = &self.coaction[(p, i)];
                (!c.is_zero()).then(|| (c.clone(), p / self.h_dim, p % self.h_dim))
            })
            .collect()
    }

    /// The `H`-components of `t ∈ M ⊗ H`: `t = Σ_s slice_s ⊗ h_s`.
    pub fn slices(&self, t: &[Rational]) -> Vec<Vector> {
        (0..self.h_dim)
            .map(|s| (0..self.dim).map(|r| t[r * self.h_dim + s].clone()).collect())
            .collect()
    }

    /// The coaction restricted to the subspace, when it is a subcomodule.
    pub fn is_stable(&self, s: &Subspace) -> Report {
        let mut r = Report::new();
        for (k, v) in s.basis().iter().enumerate() {
            let img = self.coact(v);
            for (j, slice) in self.slices(&img).into_iter().enumerate() {
                let reduced = s.reduce(&slice);
                r.compare(Law::SubcomoduleStable, &[k, j], reduced, zero_vec(self.dim));
            }
        }
        r
    }

    /// Induced coaction on a subcomodule, in the subspace's coordinates.
    pub fn restrict(&self, s: &Subspace) -> Option<ComoduleData> {
        let d = s.dim();
        let mut cols = Vec::with_capacity(d);
        for v in s.basis() {
            let img = self.coact(v);
            let mut col = zero_vec(d * self.h_dim);
            for (j, slice) in self.slices(&img).into_iter().enumerate() {
                let c = s.coordinates(&slice)?;
                for (k, x) in c.into_iter().enumerate() {
                    col[k * self.h_dim + j] = x;
                }
            }
            cols.push(col);
        }
        Some(ComoduleData {
            dim: d,
            h_dim: self.h_dim,
            coaction: Matrix::from_columns(&cols, d * self.h_dim).expect("restricted coaction"),
        })
    }
}

pub fn verify_comodule(m: &ComoduleData, h: &HopfAlgebra) -> Result<Report, RepError> {
    if m.h_dim != h.dim() {
        return Err(RepError::Shape(format!(
            "coaction targets a {}-dimensional H, got H of dimension {}",
            m.h_dim,
            h.dim()
        )));
    }
    let id_m = Matrix::identity(m.dim);
    let id_h = Matrix::identity(h.dim());
    let lhs = id_m.kron(&h.coalgebra.comult).mul(&m.coaction);
    let rhs = m.coaction.kron(&id_h).mul(&m.coaction);
    let counit = id_m.kron(&h.coalgebra.counit_row()).mul(&m.coaction);
    let mut r = Report::new();
    for i in 0..m.dim {
        r.compare(Law::ComoduleCoassociativity, &[i], lhs.column(i), rhs.column(i));
        r.compare(Law::ComoduleCounit, &[i], counit.column(i), unit_vec(m.dim, i));
    }
    Ok(r)
}

/// `Σ x[(r,s)] y[(r',s')] op(e_r, e_r') ⊗ h_s h_s'` for `x ∈ X⊗H`, `y ∈ Y⊗H`.
pub fn twisted_apply(op: &StructureTensor, h: &AlgebraData, x: &[Rational], y: &[Rational]) -> Vector {
    let dh = h.dim();
    let mut acc = zero_vec(op.out_dim() * dh);
    for (p, xp) in x.iter().enumerate() {
        if xp.is_zero() {
            continue;
        }
        let (r, s) = (p / dh, p % dh);
        for (q, yq) in y.iter().enumerate() {
            if yq.is_zero() {
                continue;
            }
            let (r2, s2) = (q / dh, q % dh);
            let term = tensor_vec(op.get(r, r2), h.mul_basis(s, s2));
            add_scaled(&mut acc, &(xp * yq), &term);
        }
    }
    acc
}

/// A transposed Poisson algebra with a compatible right `H`-coaction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComoduleTPAlgebra {
    pub name: String,
    pub tp: TPAlgebra,
    pub comodule: ComoduleData,
}

impl ComoduleTPAlgebra {
    pub fn new(name: impl Into<String>, tp: TPAlgebra, comodule: ComoduleData) -> Result<Self, RepError> {
        if comodule.dim != tp.dim() {
            return Err(RepError::Shape(format!(
                "coaction on a {}-dimensional space for a {}-dimensional algebra",
                comodule.dim,
                tp.dim()
            )));
        }
        Ok(Self {
            name: name.into(),
            tp,
            comodule,
        })
    }

    pub fn dim(&self) -> usize {
        self.tp.dim()
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.tp.algebra
    }

    pub fn coact(&self, v: &[Rational]) -> Vector {
        self.comodule.coact(v)
    }
}

/// Checks that the coaction is a unital algebra map and that
/// `ρ{a,a'} = {a0,a'0} ⊗ a1a'1` on basis pairs. The algebra and the comodule
/// must be valid on their own.
pub fn verify_comodule_tp_algebra(a: &ComoduleTPAlgebra, h: &HopfAlgebra) -> Result<Report, RepError> {
    let tp_report = verify_tp_algebra(&a.tp)?;
    if !tp_report.pass() {
        return Err(RepError::Upstream(format!("transposed Poisson axioms fail:\n{tp_report}")));
    }
    let co = verify_comodule(&a.comodule, h)?;
    if !co.pass() {
        return Err(RepError::Upstream(format!("comodule axioms fail:\n{co}")));
    }
    let n = a.dim();
    let mut r = Report::new();
    for i in 0..n {
        for j in 0..n {
            let (ri, rj) = (a.coact(&a.tp.e(i)), a.coact(&a.tp.e(j)));
            let lhs = a.coact(a.tp.algebra.mul_basis(i, j));
            let rhs = twisted_apply(&a.tp.algebra.mult, &h.algebra, &ri, &rj);
            r.compare(Law::CoactionMultiplicative, &[i, j], lhs, rhs);
            let lhs = a.coact(a.tp.br_basis(i, j));
            let rhs = twisted_apply(&a.tp.bracket, &h.algebra, &ri, &rj);
            r.compare(Law::BracketColinear, &[i, j], lhs, rhs);
        }
    }
    r.compare(
        Law::CoactionUnital,
        &[],
        a.coact(&a.tp.one()),
        tensor_vec(&a.tp.one(), &h.one()),
    );
    Ok(r)
}

/// A module for a transposed Poisson algebra: an associative action `a·m`
/// (absent for Lie-only modules) and a Lie action `a⋄m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPModule {
    pub dim: usize,
    pub act: Option<StructureTensor>,
    pub lie_act: StructureTensor,
}

impl TPModule {
    pub fn new(dim: usize, act: Option<StructureTensor>, lie_act: StructureTensor) -> Result<Self, RepError> {
        let check = |t: &StructureTensor, what: &str| {
            if t.right_dim() != dim || t.out_dim() != dim || t.left_dim() != lie_act.left_dim() {
                Err(RepError::Shape(format!(
                    "{what} tensor is {}x{}->{} on a {dim}-dimensional module",
                    t.left_dim(),
                    t.right_dim(),
                    t.out_dim()
                )))
            } else {
                Ok(())
            }
        };
        check(&lie_act, "Lie action")?;
        if let Some(t) = &act {
            check(t, "action")?;
        }
        Ok(Self { dim, act, lie_act })
    }

    /// `A` acting on itself by product and bracket.
    pub fn regular(a: &TPAlgebra) -> Self {
        Self {
            dim: a.dim(),
            act: Some(a.algebra.mult.clone()),
            lie_act: a.bracket.clone(),
        }
    }

    /// An `A`-module with vanishing Lie action.
    pub fn with_zero_lie(act: StructureTensor) -> Self {
        let lie_act = StructureTensor::zero(act.left_dim(), act.right_dim(), act.out_dim());
        Self {
            dim: act.out_dim(),
            act: Some(act),
            lie_act,
        }
    }

    pub fn acting_dim(&self) -> usize {
        self.lie_act.left_dim()
    }

    pub fn act(&self) -> Result<&StructureTensor, RepError> {
        self.act.as_ref().ok_or(RepError::MissingAction)
    }

    pub fn e(&self, k: usize) -> Vector {
        unit_vec(self.dim, k)
    }
}

/// Lie-module law `{a,b}⋄m = a⋄(b⋄m) - b⋄(a⋄m)`.
fn lie_module_law(m: &TPModule, a: &TPAlgebra, r: &mut Report) {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..m.dim {
                let mk = m.e(k);
                let lhs = m.lie_act.apply(a.br_basis(i, j), &mk);
                let rhs = vec_sub(
                    &m.lie_act.apply(&a.e(i), m.lie_act.get(j, k)),
                    &m.lie_act.apply(&a.e(j), m.lie_act.get(i, k)),
                );
                r.compare(Law::LieModule, &[i, j, k], lhs, rhs);
            }
        }
    }
}

/// Checks the module laws and both mixed identities
/// `2{a,b}·m = a⋄(b·m) - b⋄(a·m)` and `2a·(b⋄m) = ab⋄m + b⋄(a·m)` on all
/// basis triples.
pub fn verify_tp_module(m: &TPModule, a: &TPAlgebra) -> Result<Report, RepError> {
    let act = m.act()?;
    if m.acting_dim() != a.dim() {
        return Err(RepError::Shape(format!(
            "module is over a {}-dimensional algebra, got {}",
            m.acting_dim(),
            a.dim()
        )));
    }
    let n = a.dim();
    let mut r = Report::new();
    for k in 0..m.dim {
        let mk = m.e(k);
        r.compare(Law::ActionUnital, &[k], act.apply(&a.one(), &mk), mk);
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..m.dim {
                let lhs = act.apply(a.algebra.mul_basis(i, j), &m.e(k));
                let rhs = act.apply(&a.e(i), act.get(j, k));
                r.compare(Law::ActionAssociative, &[i, j, k], lhs, rhs);
            }
        }
    }
    lie_module_law(m, a, &mut r);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m.dim {
                let mk = m.e(k);
                let lhs = vec_scale(&rat(2), &act.apply(a.br_basis(i, j), &mk));
                let rhs = vec_sub(
                    &m.lie_act.apply(&a.e(i), act.get(j, k)),
                    &m.lie_act.apply(&a.e(j), act.get(i, k)),
                );
                r.compare(Law::BracketThroughAction, &[i, j, k], lhs, rhs);

                let lhs = vec_scale(&rat(2), &act.apply(&a.e(i), m.lie_act.get(j, k)));
                let mut rhs = m.lie_act.apply(a.algebra.mul_basis(i, j), &mk);
                add_scaled(&mut rhs, &rat(1), &m.lie_act.apply(&a.e(j), act.get(i, k)));
                r.compare(Law::ActionThroughLie, &[i, j, k], lhs, rhs);
            }
        }
    }
    Ok(r)
}

/// `(ab)⋄m = b·(a⋄m)` for basis `a`, every basis element `b` of the center
/// and basis `m`.
pub fn check_associative_actions(m: &TPModule, a: &TPAlgebra, center: &CenterSubspace) -> Result<Report, RepError> {
    let act = m.act()?;
    let mut r = Report::new();
    for i in 0..a.dim() {
        for (q, b) in center.carrier.basis().iter().enumerate() {
            let ab = a.mul(&a.e(i), b);
            for k in 0..m.dim {
                let mk = m.e(k);
                let lhs = m.lie_act.apply(&ab, &mk);
                let rhs = act.apply(b, m.lie_act.get(i, k));
                r.compare(Law::AssociativeActions, &[i, q, k], lhs, rhs);
            }
        }
    }
    Ok(r)
}

/// A transposed Poisson (A,H)-Hopf module, or, when `module.act` is absent,
/// a Lie module with a compatible coaction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPHopfModule {
    pub name: String,
    pub module: TPModule,
    pub comodule: ComoduleData,
}

impl TPHopfModule {
    pub fn new(name: impl Into<String>, module: TPModule, comodule: ComoduleData) -> Result<Self, RepError> {
        if module.dim != comodule.dim {
            return Err(RepError::Shape(format!(
                "module dimension {} but coaction on dimension {}",
                module.dim, comodule.dim
            )));
        }
        Ok(Self {
            name: name.into(),
            module,
            comodule,
        })
    }

    pub fn regular(a: &ComoduleTPAlgebra) -> Self {
        Self {
            name: format!("{} (regular)", a.name),
            module: TPModule::regular(&a.tp),
            comodule: a.comodule.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    pub fn act(&self) -> Result<&StructureTensor, RepError> {
        self.module.act()
    }

    pub fn lie(&self) -> &StructureTensor {
        &self.module.lie_act
    }

    pub fn coact(&self, v: &[Rational]) -> Vector {
        self.comodule.coact(v)
    }
}

/// Checks `ρ(op(a, m)) = op(a0, m0) ⊗ a1m1` on basis pairs.
fn hopf_compatibility(
    op: &StructureTensor,
    law: Law,
    m: &TPHopfModule,
    a: &ComoduleTPAlgebra,
    h: &HopfAlgebra,
    r: &mut Report,
) {
    for i in 0..a.dim() {
        let ra = a.coact(&a.tp.e(i));
        for k in 0..m.dim() {
            let lhs = m.coact(op.get(i, k));
            let rhs = twisted_apply(op, &h.algebra, &ra, &m.coact(&m.module.e(k)));
            r.compare(law, &[i, k], lhs, rhs);
        }
    }
}

/// Lie module law, comodule laws and `ρ(a⋄m) = a0⋄m0 ⊗ a1m1`.
pub fn verify_lie_comodule(m: &TPHopfModule, a: &ComoduleTPAlgebra, h: &HopfAlgebra) -> Result<Report, RepError> {
    check_same_base(m, a, h)?;
    let mut r = Report::new();
    lie_module_law(&m.module, &a.tp, &mut r);
    r.merge(verify_comodule(&m.comodule, h)?);
    hopf_compatibility(&m.module.lie_act, Law::HopfModuleLie, m, a, h, &mut r);
    Ok(r)
}

/// Every law of a transposed Poisson (A,H)-Hopf module, on basis tuples.
/// `A` itself must be a valid comodule transposed Poisson algebra.
pub fn verify_tp_hopf_module(m: &TPHopfModule, a: &ComoduleTPAlgebra, h: &HopfAlgebra) -> Result<Report, RepError> {
    check_same_base(m, a, h)?;
    let base = verify_comodule_tp_algebra(a, h)?;
    if !base.pass() {
        return Err(RepError::Upstream(format!("comodule algebra laws fail:\n{base}")));
    }
    let act = m.act()?.clone();
    let mut r = verify_tp_module(&m.module, &a.tp)?;
    r.merge(verify_comodule(&m.comodule, h)?);
    hopf_compatibility(&act, Law::HopfModuleAction, m, a, h, &mut r);
    hopf_compatibility(&m.module.lie_act, Law::HopfModuleLie, m, a, h, &mut r);
    Ok(r)
}

fn check_same_base(m: &TPHopfModule, a: &ComoduleTPAlgebra, h: &HopfAlgebra) -> Result<(), RepError> {
    if m.module.acting_dim() != a.dim() {
        return Err(RepError::Shape(format!(
            "module is over a {}-dimensional algebra, got {}",
            m.module.acting_dim(),
            a.dim()
        )));
    }
    if m.comodule.h_dim != h.dim() || a.comodule.h_dim != h.dim() {
        return Err(RepError::Shape("coactions target different Hopf algebras".into()));
    }
    Ok(())
}

/// How much structure `induce_tensor_h` builds on `N ⊗ H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InductionLevel {
    /// Lie action and coaction only; any `H`.
    Lie,
    /// Also the algebra action `a·(n⊗h) = a0·n ⊗ a1h`; needs `H` commutative.
    Full,
}

/// `N ⊗ H` with `a⋄(n⊗h) = a0⋄n ⊗ a1h`, coaction `n⊗h ↦ n⊗h1⊗h2` and, at
/// the full level, `a·(n⊗h) = a0·n ⊗ a1h`.
pub fn induce_tensor_h(
    n: &TPModule,
    a: &ComoduleTPAlgebra,
    h: &HopfAlgebra,
    level: InductionLevel,
) -> Result<TPHopfModule, RepError> {
    if n.acting_dim() != a.dim() {
        return Err(RepError::Shape(format!(
            "module is over a {}-dimensional algebra, got {}",
            n.acting_dim(),
            a.dim()
        )));
    }
    if level == InductionLevel::Full {
        if let Some((i, j)) = h.algebra.commutativity_witness() {
            return Err(RepError::Hypothesis(format!(
                "the algebra action on N⊗H needs H commutative, but {}·{} ≠ {}·{} in {}",
                h.algebra.basis[i], h.algebra.basis[j], h.algebra.basis[j], h.algebra.basis[i], h.name
            )));
        }
        n.act()?;
    }
    let (dn, dh) = (n.dim, h.dim());
    let lift = |op: &StructureTensor| -> StructureTensor {
        StructureTensor::from_fn(a.dim(), dn * dh, dn * dh, |i, p| {
            let ra = a.coact(&a.tp.e(i));
            twisted_apply(op, &h.algebra, &ra, &unit_vec(dn * dh, p))
        })
    };
    let lie_act = lift(&n.lie_act);
    let act = match level {
        InductionLevel::Full => Some(lift(n.act()?)),
        InductionLevel::Lie => None,
    };
    let coaction = Matrix::identity(dn).kron(&h.coalgebra.comult);
    let out = TPHopfModule {
        name: "N⊗H".into(),
        module: TPModule {
            dim: dn * dh,
            act,
            lie_act,
        },
        comodule: ComoduleData {
            dim: dn * dh,
            h_dim: dh,
            coaction,
        },
    };
    let post = match level {
        InductionLevel::Full => {
            let tp = verify_tp_module(n, &a.tp)?;
            if !tp.pass() {
                return Err(RepError::Hypothesis(format!("N is not a transposed Poisson A-module:\n{tp}")));
            }
            verify_tp_hopf_module(&out, a, h)?
        }
        InductionLevel::Lie => verify_lie_comodule(&out, a, h)?,
    };
    if !post.pass() {
        return Err(RepError::PostCheck(post));
    }
    Ok(out)
}

/// Which intertwining laws a hom-space imposes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HomFlags {
    pub a_linear: bool,
    pub lie_linear: bool,
    pub h_colinear: bool,
    pub b_linear: bool,
}

impl HomFlags {
    pub const NONE: HomFlags = HomFlags {
        a_linear: false,
        lie_linear: false,
        h_colinear: false,
        b_linear: false,
    };
    /// Morphisms of transposed Poisson (A,H)-Hopf modules.
    pub const HOPF_MODULE: HomFlags = HomFlags {
        a_linear: true,
        lie_linear: true,
        h_colinear: true,
        b_linear: false,
    };
}

/// The pieces of structure a hom-space can be asked to respect. Actions are
/// listed as one `dim × dim` matrix per basis element of the acting algebra.
#[derive(Debug, Clone, Default)]
pub struct ModuleView {
    pub dim: usize,
    pub a_act: Option<Vec<Matrix>>,
    pub lie_act: Option<Vec<Matrix>>,
    pub b_act: Option<Vec<Matrix>>,
    pub coaction: Option<Matrix>,
}

impl ModuleView {
    pub fn bare(dim: usize) -> Self {
        Self {
            dim,
            ..Default::default()
        }
    }

    pub fn of_module(m: &TPModule) -> Self {
        Self {
            dim: m.dim,
            a_act: m.act.as_ref().map(|t| t.left_matrices()),
            lie_act: Some(m.lie_act.left_matrices()),
            b_act: None,
            coaction: None,
        }
    }

    pub fn of_hopf_module(m: &TPHopfModule) -> Self {
        Self {
            coaction: Some(m.comodule.coaction.clone()),
            ..Self::of_module(&m.module)
        }
    }

    /// Adds the `B`-action obtained by restricting the `A`-action to the
    /// given elements of `A`.
    pub fn with_b_from(mut self, act: &StructureTensor, b_elements: &[Vector]) -> Self {
        self.b_act = Some(b_elements.iter().map(|b| act.left_operator(b)).collect());
        self
    }

    pub fn with_b_act(mut self, mats: Vec<Matrix>) -> Self {
        self.b_act = Some(mats);
        self
    }
}

/// A space of linear maps `src → tgt` cut out by intertwining laws; maps are
/// `dim(tgt) × dim(src)` matrices, vectorised row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapSpace {
    pub src_dim: usize,
    pub tgt_dim: usize,
    pub flags: HomFlags,
    pub solution: Subspace,
}

impl MapSpace {
    pub fn dim(&self) -> usize {
        self.solution.dim()
    }

    pub fn to_matrix(&self, v: &[Rational]) -> Matrix {
        Matrix::from_rows(
            v.chunks(self.src_dim.max(1)).take(self.tgt_dim).map(|c| c.to_vec()).collect(),
            self.src_dim,
        )
        .expect("vectorised map shape")
    }

    pub fn basis_maps(&self) -> Vec<Matrix> {
        self.solution.basis().iter().map(|v| self.to_matrix(v)).collect()
    }

    pub fn contains(&self, f: &Matrix) -> bool {
        self.solution.contains(f.entries())
    }

    pub fn coordinates(&self, f: &Matrix) -> Option<Vector> {
        self.solution.coordinates(f.entries())
    }

    pub fn from_coordinates(&self, c: &[Rational]) -> Matrix {
        self.to_matrix(&self.solution.embed(c))
    }
}

/// Constraint rows for `L∘f = (f⊗id_d)∘R`, with `L: T → T⊗K`, `R: S → S⊗K`
/// and `d = dim K`. Plain commutation with operators is the case `d = 1`.
fn intertwiner_block(left: &Matrix, right: &Matrix, d: usize, s_dim: usize, t_dim: usize) -> Matrix {
    let mut block = Matrix::zeros(t_dim * d * s_dim, t_dim * s_dim);
    for t2 in 0..t_dim {
        for k in 0..d {
            for s2 in 0..s_dim {
                let row = (t2 * d + k) * s_dim + s2;
                for t in 0..t_dim {
                    let c = &left[(t2 * d + k, t)];
                    if !c.is_zero() {
                        block[(row, t * s_dim + s2)] += c;
                    }
                }
                for s in 0..s_dim {
                    let c = &right[(s * d + k, s2)];
                    if !c.is_zero() {
                        block[(row, t2 * s_dim + s)] -= c;
                    }
                }
            }
        }
    }
    block
}

fn require<'a, T>(x: &'a Option<T>, what: &str) -> Result<&'a T, RepError> {
    x.as_ref().ok_or_else(|| RepError::Shape(format!("flag requires {what}, which the endpoint lacks")))
}

/// Solves the stacked intertwining constraints for the flagged laws.
pub fn hom_space(src: &ModuleView, tgt: &ModuleView, flags: HomFlags) -> Result<MapSpace, RepError> {
    let (s, t) = (src.dim, tgt.dim);
    let mut blocks = Vec::new();
    let mut ops = |a: &[Matrix], b: &[Matrix], what: &str| -> Result<(), RepError> {
        if a.len() != b.len() {
            return Err(RepError::Shape(format!("{what}: acting algebras differ in dimension")));
        }
        for (l, r) in b.iter().zip(a) {
            blocks.push(intertwiner_block(l, r, 1, s, t));
        }
        Ok(())
    };
    if flags.a_linear {
        ops(require(&src.a_act, "an A-action")?, require(&tgt.a_act, "an A-action")?, "A-action")?;
    }
    if flags.lie_linear {
        ops(require(&src.lie_act, "a Lie action")?, require(&tgt.lie_act, "a Lie action")?, "Lie action")?;
    }
    if flags.b_linear {
        ops(require(&src.b_act, "a B-action")?, require(&tgt.b_act, "a B-action")?, "B-action")?;
    }
    if flags.h_colinear {
        let rs = require(&src.coaction, "a coaction")?;
        let rt = require(&tgt.coaction, "a coaction")?;
        let d = rs.rows().checked_div(s).or(rt.rows().checked_div(t)).unwrap_or(1);
        blocks.push(intertwiner_block(rt, rs, d.max(1), s, t));
    }
    let solution = stacked_kernel(s * t, &blocks);
    Ok(MapSpace {
        src_dim: s,
        tgt_dim: t,
        flags,
        solution,
    })
}

/// Evaluates each flagged law on `f` directly, basis element by basis element.
pub fn check_map(f: &Matrix, src: &ModuleView, tgt: &ModuleView, flags: HomFlags) -> Report {
    let mut r = Report::new();
    let mut pairs = |law: Law, a: &Option<Vec<Matrix>>, b: &Option<Vec<Matrix>>| {
        if let (Some(a), Some(b)) = (a, b) {
            for (i, (sa, ta)) in a.iter().zip(b).enumerate() {
                for k in 0..src.dim {
                    let e = unit_vec(src.dim, k);
                    let lhs = f.mul_vec(&sa.mul_vec(&e));
                    let rhs = ta.mul_vec(&f.mul_vec(&e));
                    r.compare(law, &[i, k], lhs, rhs);
                }
            }
        } else {
            r.fail(law, &[], vec![], vec![]);
        }
    };
    if flags.a_linear {
        pairs(Law::ALinear, &src.a_act, &tgt.a_act);
    }
    if flags.lie_linear {
        pairs(Law::LieLinear, &src.lie_act, &tgt.lie_act);
    }
    if flags.b_linear {
        pairs(Law::BLinear, &src.b_act, &tgt.b_act);
    }
    if flags.h_colinear {
        match (&src.coaction, &tgt.coaction) {
            (Some(rs), Some(rt)) => {
                let d = rs.rows().checked_div(src.dim).unwrap_or(1);
                let lifted = f.kron(&Matrix::identity(d));
                for k in 0..src.dim {
                    let e = unit_vec(src.dim, k);
                    let lhs = rt.mul_vec(&f.mul_vec(&e));
                    let rhs = lifted.mul_vec(&rs.mul_vec(&e));
                    r.compare(Law::HColinear, &[k], lhs, rhs);
                }
            }
            _ => r.fail(Law::HColinear, &[], vec![], vec![]),
        }
    }
    r
}

/// `γ(f) = (id⊗ε)∘f` and `γ'(g) = (g⊗id)∘ρ_M` realised as coordinate matrices
/// between the two computed hom-spaces.
#[derive(Debug, Clone)]
pub struct GammaIso {
    pub induced: TPHopfModule,
    pub equivariant: MapSpace,
    pub plain: MapSpace,
    pub gamma: Matrix,
    pub gamma_prime: Matrix,
    pub verified: bool,
}

pub fn gamma_iso(
    m: &TPHopfModule,
    n: &TPModule,
    a: &ComoduleTPAlgebra,
    h: &HopfAlgebra,
    level: InductionLevel,
) -> Result<GammaIso, RepError> {
    let induced = induce_tensor_h(n, a, h, level)?;
    let full = level == InductionLevel::Full;
    let mut src = ModuleView::of_hopf_module(m);
    let mut tgt = ModuleView::of_hopf_module(&induced);
    let mut plain_tgt = ModuleView::of_module(n);
    if !full {
        src.a_act = None;
        tgt.a_act = None;
        plain_tgt.a_act = None;
    }
    let eq_flags = HomFlags {
        a_linear: full,
        lie_linear: true,
        h_colinear: true,
        b_linear: false,
    };
    let plain_flags = HomFlags {
        h_colinear: false,
        ..eq_flags
    };
    let equivariant = hom_space(&src, &tgt, eq_flags)?;
    let plain_src = ModuleView {
        coaction: None,
        ..src.clone()
    };
    let plain = hom_space(&plain_src, &plain_tgt, plain_flags)?;

    let drop_h = Matrix::identity(n.dim).kron(&h.coalgebra.counit_row());
    let lift_h = Matrix::identity(h.dim());
    let rho_m = &m.comodule.coaction;
    let mut verified = equivariant.dim() == plain.dim();

    let mut gamma_cols = Vec::new();
    for f in equivariant.basis_maps() {
        match plain.coordinates(&drop_h.mul(&f)) {
            Some(c) => gamma_cols.push(c),
            None => {
                verified = false;
                gamma_cols.push(zero_vec(plain.dim()));
            }
        }
    }
    let mut gamma_prime_cols = Vec::new();
    for g in plain.basis_maps() {
        match equivariant.coordinates(&g.kron(&lift_h).mul(rho_m)) {
            Some(c) => gamma_prime_cols.push(c),
            None => {
                verified = false;
                gamma_prime_cols.push(zero_vec(equivariant.dim()));
            }
        }
    }
    let gamma = Matrix::from_columns(&gamma_cols, plain.dim()).expect("gamma shape");
    let gamma_prime = Matrix::from_columns(&gamma_prime_cols, equivariant.dim()).expect("gamma' shape");
    if verified {
        verified = gamma.mul(&gamma_prime).is_identity() && gamma_prime.mul(&gamma).is_identity();
    }
    Ok(GammaIso {
        induced,
        equivariant,
        plain,
        gamma,
        gamma_prime,
        verified,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::{group_algebra, sweedler_h4, truncated_polynomial};
    use crate::tpalg::{derivation_bracket, tp_center, x_power_ddx};

    fn c2_regular() -> (HopfAlgebra, ComoduleTPAlgebra) {
        let h = group_algebra(&[2]);
        let a = ComoduleTPAlgebra::new(
            "Q[C2]",
            TPAlgebra::zero_bracket(h.algebra.clone()),
            ComoduleData::regular(&h),
        )
        .unwrap();
        (h, a)
    }

    fn graded_a3(shift: usize) -> (HopfAlgebra, ComoduleTPAlgebra) {
        let h = group_algebra(&[2]);
        let tp = derivation_bracket(&truncated_polynomial(3), &x_power_ddx(3, shift)).unwrap();
        // x^k ↦ x^k ⊗ g^(k mod 2)
        let cols: Vec<Vector> = (0..3).map(|k| unit_vec(6, k * 2 + k % 2)).collect();
        let co = ComoduleData::new(3, 2, Matrix::from_columns(&cols, 6).unwrap()).unwrap();
        (h, ComoduleTPAlgebra::new("A3 graded", tp, co).unwrap())
    }

    #[test]
    fn comodule_examples() {
        let h = group_algebra(&[2]);
        assert!(verify_comodule(&ComoduleData::regular(&h), &h).unwrap().pass());
        assert!(verify_comodule(&ComoduleData::trivial(3, &h), &h).unwrap().pass());
        // m ↦ m ⊗ (1 + g)
        let bad = ComoduleData::new(1, 2, Matrix::from_i64(&[&[1], &[1]])).unwrap();
        let r = verify_comodule(&bad, &h).unwrap();
        let w = r.first(Law::ComoduleCounit).unwrap();
        assert_eq!(w.lhs, vec![rat(2)]);
        assert_eq!(w.rhs, vec![rat(1)]);
    }

    #[test]
    fn regular_c2_is_comodule_tp_algebra() {
        let (h, a) = c2_regular();
        assert!(verify_comodule_tp_algebra(&a, &h).unwrap().pass());
    }

    #[test]
    fn euler_bracket_is_graded() {
        let (h, a) = graded_a3(1);
        assert!(verify_comodule_tp_algebra(&a, &h).unwrap().pass());
    }

    #[test]
    fn nonhomogeneous_bracket_breaks_colinearity() {
        let (h, a) = graded_a3(2);
        let r = verify_comodule_tp_algebra(&a, &h).unwrap();
        assert!(!r.violates(Law::CoactionMultiplicative));
        let w = r.first(Law::BracketColinear).unwrap();
        assert_eq!(w.indices, vec![0, 1]);
        // ρ{1,x} = x²⊗1 but {1,x}⊗g = x²⊗g
        assert_eq!(w.lhs, unit_vec(6, 4));
        assert_eq!(w.rhs, unit_vec(6, 5));
    }

    #[test]
    fn regular_module_is_tp_module() {
        let (_, a) = graded_a3(1);
        let m = TPModule::regular(&a.tp);
        assert!(verify_tp_module(&m, &a.tp).unwrap().pass());
        let c = tp_center(&a.tp).unwrap();
        assert!(check_associative_actions(&m, &a.tp, &c).unwrap().pass());
    }

    #[test]
    fn forcing_lie_action_to_zero_breaks_bracket_law() {
        let (_, a) = graded_a3(1);
        let m = TPModule::with_zero_lie(a.tp.algebra.mult.clone());
        let r = verify_tp_module(&m, &a.tp).unwrap();
        let w = r
            .witnesses
            .iter()
            .find(|w| w.law == Law::BracketThroughAction && w.indices == vec![0, 1, 0])
            .expect("witness (1,x,1)");
        assert_eq!(w.lhs, vec_scale(&rat(2), &unit_vec(3, 1)));
        assert_eq!(w.rhs, zero_vec(3));
    }

    #[test]
    fn zero_structures_are_modules() {
        let a = TPAlgebra::zero_bracket(truncated_polynomial(3));
        let m = TPModule::with_zero_lie(a.algebra.mult.clone());
        assert!(verify_tp_module(&m, &a).unwrap().pass());
    }

    #[test]
    fn regular_hopf_modules_pass() {
        for (h, a) in [c2_regular(), graded_a3(1)] {
            let m = TPHopfModule::regular(&a);
            assert!(verify_tp_hopf_module(&m, &a, &h).unwrap().pass());
        }
    }

    #[test]
    fn induced_module_passes_and_untwisted_fails() {
        let (h, a) = graded_a3(1);
        let n = TPModule::regular(&a.tp);
        let good = induce_tensor_h(&n, &a, &h, InductionLevel::Full).unwrap();
        assert_eq!(good.dim(), 6);
        assert!(verify_tp_hopf_module(&good, &a, &h).unwrap().pass());

        // a⋄(n⊗h) := (a⋄n)⊗h
        let untwisted = StructureTensor::from_fn(3, 6, 6, |i, p| {
            let (k, s) = (p / 2, p % 2);
            tensor_vec(n.lie_act.get(i, k), &unit_vec(2, s))
        });
        let mut bad = good.clone();
        bad.module.lie_act = untwisted;
        let r = verify_tp_hopf_module(&bad, &a, &h).unwrap();
        assert!(r.violates(Law::HopfModuleLie));
    }

    #[test]
    fn induction_over_noncommutative_h_is_refused() {
        let h = sweedler_h4();
        let a = ComoduleTPAlgebra::new(
            "Q",
            TPAlgebra::zero_bracket(group_algebra(&[]).algebra),
            ComoduleData::trivial(1, &h),
        )
        .unwrap();
        let n = TPModule::regular(&a.tp);
        assert!(matches!(
            induce_tensor_h(&n, &a, &h, InductionLevel::Full),
            Err(RepError::Hypothesis(_))
        ));
        let lie = induce_tensor_h(&n, &a, &h, InductionLevel::Lie).unwrap();
        assert_eq!(lie.dim(), 4);
        assert!(lie.module.act.is_none());
    }

    #[test]
    fn induced_from_trivial_is_regular_h() {
        let h = group_algebra(&[2]);
        let a = ComoduleTPAlgebra::new(
            "Q",
            TPAlgebra::zero_bracket(group_algebra(&[]).algebra),
            ComoduleData::trivial(1, &h),
        )
        .unwrap();
        let n = TPModule::regular(&a.tp);
        let nh = induce_tensor_h(&n, &a, &h, InductionLevel::Full).unwrap();
        assert_eq!(nh.comodule.coaction, h.coalgebra.comult);
    }

    #[test]
    fn hom_space_examples() {
        let (h, a) = c2_regular();
        let m = TPHopfModule::regular(&a);
        let view = ModuleView::of_hopf_module(&m);
        let hom = hom_space(&view, &view, HomFlags::HOPF_MODULE).unwrap();
        assert_eq!(hom.dim(), 1);
        assert!(hom.basis_maps()[0].is_identity());
        let all = hom_space(&view, &view, HomFlags::NONE).unwrap();
        assert_eq!(all.dim(), 4);

        let q = ComoduleTPAlgebra::new(
            "Q",
            TPAlgebra::zero_bracket(group_algebra(&[]).algebra),
            ComoduleData::trivial(1, &h),
        )
        .unwrap();
        let triv = ModuleView::of_hopf_module(&TPHopfModule::regular(&q));
        assert_eq!(hom_space(&triv, &triv, HomFlags::HOPF_MODULE).unwrap().dim(), 1);
    }

    #[test]
    fn gamma_on_trivial_and_regular() {
        let (h, a) = c2_regular();
        let m = TPHopfModule::regular(&a);
        let n = TPModule::regular(&a.tp);
        for level in [InductionLevel::Lie, InductionLevel::Full] {
            let g = gamma_iso(&m, &n, &a, &h, level).unwrap();
            assert!(g.verified, "{level:?}");
            assert_eq!(g.equivariant.dim(), g.plain.dim());
        }
    }
}
