//! Invariant subspaces of Hopf modules, the projection onto coinvariants,
//! the splitting `λ` of the coaction, Poisson `H`-ideal closure and the field
//! test for `B = A^{AcoH}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactlin::{
    add_scaled, is_zero_vec, rat, stacked_kernel, unit_vec, zero_vec, Matrix, Rational,
    Subspace, Vector,
};
use crate::hopfcore::{AlgebraData, HopfAlgebra};
use crate::poly::{self, Poly};
use crate::repcat::{
    check_associative_actions, check_map, induce_tensor_h, ComoduleData, ComoduleTPAlgebra,
    HomFlags, InductionLevel, ModuleView, RepError, TPHopfModule,
};
use crate::report::{Law, Report};
use crate::tpalg::{tp_center, CenterSubspace, Subalgebra};

/// Which hypotheses on `φ: H → A` were found to hold.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PhiFlags {
    pub colinear: bool,
    pub algebra_map: bool,
    pub unit_preserving: bool,
    pub lands_in_center: bool,
}

/// A linear map `φ: H → A` (a `dim A × dim H` matrix) together with the
/// properties computed for it. The flags are always recomputed from `phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColinearAlgebraMap {
    pub phi: Matrix,
    pub flags: PhiFlags,
    pub report: Report,
}

impl ColinearAlgebraMap {
    pub fn new(phi: Matrix, a: &ComoduleTPAlgebra, h: &HopfAlgebra) -> Result<Self, RepError> {
        let (da, dh) = (a.dim(), h.dim());
        if phi.rows() != da || phi.cols() != dh {
            return Err(RepError::Shape(format!(
                "φ is {}x{} (expected {da}x{dh})",
                phi.rows(),
                phi.cols()
            )));
        }
        let center = tp_center(&a.tp)?;
        let mut unit = Report::new();
        unit.compare(Law::MapUnital, &[], phi.mul_vec(&h.one()), a.tp.one());

        let mut colinear = Report::new();
        let lifted = phi.kron(&Matrix::identity(dh));
        for s in 0..dh {
            let lhs = a.coact(&phi.column(s));
            let rhs = lifted.mul_vec(&h.coalgebra.comult.column(s));
            colinear.compare(Law::MapColinear, &[s], lhs, rhs);
        }

        let mut mult = Report::new();
        for s in 0..dh {
            for t in 0..dh {
                let lhs = phi.mul_vec(h.algebra.mul_basis(s, t));
                let rhs = a.tp.mul(&phi.column(s), &phi.column(t));
                mult.compare(Law::MapMultiplicative, &[s, t], lhs, rhs);
            }
        }

        let mut central = Report::new();
        for s in 0..dh {
            let v = phi.column(s);
            let reduced = center.carrier.reduce(&v);
            central.compare(Law::MapInCenter, &[s], reduced, zero_vec(da));
        }

        let flags = PhiFlags {
            colinear: colinear.pass(),
            algebra_map: mult.pass(),
            unit_preserving: unit.pass(),
            lands_in_center: central.pass(),
        };
        let mut report = unit;
        report.merge(colinear);
        report.merge(mult);
        report.merge(central);
        Ok(Self { phi, flags, report })
    }

    /// `h ↦ ε(h)·1_A`.
    pub fn unit_map(a: &ComoduleTPAlgebra, h: &HopfAlgebra) -> Result<Self, RepError> {
        let one = a.tp.one();
        let cols: Vec<Vector> = (0..h.dim())
            .map(|s| one.iter().map(|u| u * &h.coalgebra.counit[s]).collect())
            .collect();
        Self::new(Matrix::from_columns(&cols, a.dim()).expect("unit map shape"), a, h)
    }

    pub fn apply(&self, h: &[Rational]) -> Vector {
        self.phi.mul_vec(h)
    }

    fn require(&self, needed: &[(&str, bool)]) -> Result<(), RepError> {
        let missing: Vec<&str> = needed.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
        if missing.is_empty() {
            Ok(())
        } else {
            Err(RepError::Hypothesis(format!("φ fails: {}", missing.join(", "))))
        }
    }
}

/// `M^{coH}`: the kernel of `m ↦ ρ(m) - m⊗1_H`.
pub fn coinvariants(m: &ComoduleData, h: &HopfAlgebra) -> Subspace {
    let trivial = ComoduleData::trivial(m.dim, h);
    m.coaction.sub(&trivial.coaction).kernel()
}

/// `A^{coH}` with its induced product and bracket; fails with a witness if
/// the coinvariants are not closed.
pub fn coinvariant_subalgebra(a: &ComoduleTPAlgebra, h: &HopfAlgebra) -> Result<Subalgebra, RepError> {
    Ok(Subalgebra::induced(&a.tp, coinvariants(&a.comodule, h))?)
}

/// `M^A`: the solutions of `{e_i,e_j}·m = e_i⋄(e_j·m)` over all basis pairs.
pub fn lie_invariants(m: &TPHopfModule, a: &ComoduleTPAlgebra) -> Result<Subspace, RepError> {
    let act = m.act()?;
    let n = a.dim();
    let mut blocks = Vec::with_capacity(n * n);
    for i in 0..n {
        let lie_i = m.lie().left_matrix(i);
        for j in 0..n {
            let lhs = act.left_operator(a.tp.br_basis(i, j));
            blocks.push(lhs.sub(&lie_i.mul(&act.left_matrix(j))));
        }
    }
    Ok(stacked_kernel(m.dim(), &blocks))
}

/// `A^A`, `A^{coH}` and `B = A^{AcoH}` as subalgebras of `A`.
#[derive(Debug, Clone)]
pub struct AlgebraInvariants {
    pub center: CenterSubspace,
    pub coinvariants: Subalgebra,
    pub b: Subalgebra,
}

pub fn algebra_invariants(a: &ComoduleTPAlgebra, h: &HopfAlgebra) -> Result<AlgebraInvariants, RepError> {
    let center = tp_center(&a.tp)?;
    let coinvariants = coinvariant_subalgebra(a, h)?;
    let carrier = center
        .carrier
        .intersect(&coinvariants.carrier)
        .map_err(|e| RepError::Shape(e.to_string()))?;
    let b = Subalgebra::induced(&a.tp, carrier)?;
    Ok(AlgebraInvariants {
        center,
        coinvariants,
        b,
    })
}

/// The invariant subspaces of a Hopf module, with the checks that tie them
/// together: `ρ(M^A) ⊆ M^A⊗H`, `b⋄m = 0` for `b ∈ A^A` and `m ∈ M^{AcoH}`,
/// and `B·M^{AcoH} ⊆ M^{AcoH}`.
#[derive(Debug, Clone)]
pub struct InvariantReport {
    pub coinvariants: Subspace,
    pub lie_invariants: Subspace,
    pub joint: Subspace,
    pub algebra: AlgebraInvariants,
    pub checks: Report,
}

pub fn invariant_report(m: &TPHopfModule, a: &ComoduleTPAlgebra, h: &HopfAlgebra) -> Result<InvariantReport, RepError> {
    let coinv = coinvariants(&m.comodule, h);
    let lie = lie_invariants(m, a)?;
    let joint = lie
        .intersect(&coinv)
        .map_err(|e| RepError::Shape(e.to_string()))?;
    let algebra = algebra_invariants(a, h)?;
    let act = m.act()?;

    let mut checks = m.comodule.is_stable(&lie);
    for (p, b) in algebra.center.carrier.basis().iter().enumerate() {
        for (q, x) in joint.basis().iter().enumerate() {
            checks.compare(
                Law::InvariantBracketVanishes,
                &[p, q],
                m.lie().apply(b, x),
                zero_vec(m.dim()),
            );
        }
    }
    for (p, b) in algebra.b.carrier.basis().iter().enumerate() {
        for (q, x) in joint.basis().iter().enumerate() {
            let bx = act.apply(b, x);
            let reduced = joint.reduce(&bx);
            checks.compare(Law::ClosedUnderProduct, &[p, q], reduced, zero_vec(m.dim()));
        }
    }
    Ok(InvariantReport {
        coinvariants: coinv,
        lie_invariants: lie,
        joint,
        algebra,
        checks,
    })
}

/// `p_M(m) = φ(S⁻¹(m1))·m0` with the checks `P² = P` and `Im P = M^{coH}`.
#[derive(Debug, Clone)]
pub struct Projection {
    pub matrix: Matrix,
    pub report: Report,
}

pub fn projection_p(m: &TPHopfModule, phi: &ColinearAlgebraMap, h: &HopfAlgebra) -> Result<Projection, RepError> {
    phi.require(&[
        ("φ(1) = 1", phi.flags.unit_preserving),
        ("H-colinearity", phi.flags.colinear),
    ])?;
    let act = m.act()?;
    let d = m.dim();
    let cols: Vec<Vector> = (0..d)
        .map(|k| {
            let mut acc = zero_vec(d);
            for (c, r, s) in m.comodule.terms(k) {
                let coeff = phi.apply(&h.s_inv(&unit_vec(h.dim(), s)));
                add_scaled(&mut acc, &c, &act.apply(&coeff, &unit_vec(d, r)));
            }
            acc
        })
        .collect();
    let matrix = Matrix::from_columns(&cols, d).expect("projection shape");
    let mut report = Report::new();
    let square = matrix.mul(&matrix);
    for k in 0..d {
        report.compare(Law::Idempotent, &[k], square.column(k), matrix.column(k));
    }
    let image = matrix.column_space();
    let coinv = coinvariants(&m.comodule, h);
    report.compare(Law::ImageIsCoinvariants, &[], flatten(&image), flatten(&coinv));
    Ok(Projection { matrix, report })
}

fn flatten(s: &Subspace) -> Vector {
    s.basis().iter().flatten().cloned().collect()
}

/// `λ(m⊗h) = φ(h S⁻¹(m1))·m0` as a `dim M × (dim M · dim H)` matrix, with
/// the certificate that it retracts `ρ_M`, is `H`-colinear and Lie
/// `A`-linear (and `A`-linear when `H` is commutative) for the induced
/// structure on `M⊗H`.
#[derive(Debug, Clone)]
pub struct Splitting {
    pub lambda: Matrix,
    pub induced: TPHopfModule,
    pub report: Report,
}

pub fn lambda_map(
    m: &TPHopfModule,
    phi: &ColinearAlgebraMap,
    a: &ComoduleTPAlgebra,
    h: &HopfAlgebra,
) -> Result<Splitting, RepError> {
    let commutative = h.is_commutative();
    phi.require(&[
        ("image in the center", phi.flags.lands_in_center),
        ("φ(1) = 1", phi.flags.unit_preserving),
        ("H-colinearity", phi.flags.colinear),
        (
            "multiplicativity (needed because H is not commutative)",
            commutative || phi.flags.algebra_map,
        ),
    ])?;
    let center = tp_center(&a.tp)?;
    let assoc = check_associative_actions(&m.module, &a.tp, &center)?;
    if !assoc.pass() {
        return Err(RepError::Hypothesis(format!(
            "the Lie action and the algebra action are not associative:\n{assoc}"
        )));
    }
    let act = m.act()?;
    let (d, dh) = (m.dim(), h.dim());
    let mut cols = Vec::with_capacity(d * dh);
    for r in 0..d {
        for s in 0..dh {
            let hs = unit_vec(dh, s);
            let mut acc = zero_vec(d);
            for (c, u, t) in m.comodule.terms(r) {
                let arg = h.mul(&hs, &h.s_inv(&unit_vec(dh, t)));
                add_scaled(&mut acc, &c, &act.apply(&phi.apply(&arg), &unit_vec(d, u)));
            }
            cols.push(acc);
        }
    }
    let lambda = Matrix::from_columns(&cols, d).expect("lambda shape");

    let mut report = Report::new();
    let retraction = lambda.mul(&m.comodule.coaction);
    for k in 0..d {
        report.compare(Law::Retraction, &[k], retraction.column(k), unit_vec(d, k));
    }
    let level = if commutative {
        InductionLevel::Full
    } else {
        InductionLevel::Lie
    };
    let induced = induce_tensor_h(&m.module, a, h, level)?;
    let mut src = ModuleView::of_hopf_module(&induced);
    let mut tgt = ModuleView::of_hopf_module(m);
    if !commutative {
        src.a_act = None;
        tgt.a_act = None;
    }
    let flags = HomFlags {
        a_linear: commutative,
        lie_linear: true,
        h_colinear: true,
        b_linear: false,
    };
    report.merge(check_map(&lambda, &src, &tgt, flags));
    Ok(Splitting {
        lambda,
        induced,
        report,
    })
}

/// The least Poisson `H`-ideal containing `seed`, and the number of rounds
/// the fixpoint iteration took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    pub ideal: Subspace,
    pub rounds: usize,
}

pub fn ideal_closure(a: &ComoduleTPAlgebra, seed: &Subspace) -> Result<Closure, RepError> {
    let n = a.dim();
    if seed.ambient_dim() != n {
        return Err(RepError::Shape(format!(
            "seed lives in Q^{} but the algebra has dimension {n}",
            seed.ambient_dim()
        )));
    }
    let mut current = seed.clone();
    let mut rounds = 0;
    loop {
        let mut gens: Vec<Vector> = current.basis().to_vec();
        for v in current.basis() {
            for i in 0..n {
                let ei = a.tp.e(i);
                gens.push(a.tp.mul(&ei, v));
                gens.push(a.tp.br(&ei, v));
            }
            gens.extend(a.comodule.slices(&a.coact(v)));
        }
        let next = Subspace::span(n, &gens);
        rounds += 1;
        if next.dim() == current.dim() {
            return Ok(Closure {
                ideal: next,
                rounds,
            });
        }
        current = next;
    }
}

/// What sampling says about Poisson `H`-simplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Simplicity {
    /// `dim A = 1`: every nonzero element generates `A`.
    Proven,
    /// A nonzero element whose closure is a proper ideal.
    NotSimple { generator: Vector, ideal: Subspace },
    /// Every sampled line generated all of `A`; not a proof.
    NoProperIdealFound { lines: usize },
}

/// Closes the line through every basis element and `samples` seeded random
/// elements (coefficients in `[-3, 3]`).
pub fn simplicity_evidence(a: &ComoduleTPAlgebra, seed: u64, samples: usize) -> Result<Simplicity, RepError> {
    let n = a.dim();
    if n == 1 {
        return Ok(Simplicity::Proven);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<Vector> = (0..n).map(|i| unit_vec(n, i)).collect();
    candidates.extend((0..samples).map(|_| random_vector(&mut rng, n)));
    let mut lines = 0;
    for v in candidates {
        if is_zero_vec(&v) {
            continue;
        }
        lines += 1;
        let c = ideal_closure(a, &Subspace::span(n, std::slice::from_ref(&v)))?;
        if !c.ideal.is_full() {
            return Ok(Simplicity::NotSimple {
                generator: v,
                ideal: c.ideal,
            });
        }
    }
    Ok(Simplicity::NoProperIdealFound { lines })
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| rat(rng.gen_range(-3..=3))).collect()
}

/// Why an algebra is not a field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotFieldWitness {
    /// `element^order = 0` with `element ≠ 0`.
    Nilpotent { element: Vector, order: usize },
    /// Two nonzero elements with zero product.
    ZeroDivisor { left: Vector, right: Vector },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldVerdict {
    /// `element` has an irreducible minimal polynomial of degree `dim`, so
    /// the algebra is `Q[t]/(minimal_polynomial)`. `prime` is a prime modulo
    /// which the polynomial stays irreducible.
    Field {
        element: Vector,
        minimal_polynomial: Vec<Rational>,
        prime: Option<u64>,
    },
    NotField(NotFieldWitness),
    Inconclusive { trials: usize },
}

pub const DEFAULT_FIELD_TRIALS: usize = 32;

/// Decides whether a commutative unital algebra is a field: trace-form
/// radical, zero basis products and singular multiplications first, then
/// minimal polynomials of the basis and of `trials` seeded random elements.
pub fn is_field(b: &AlgebraData, seed: u64, trials: usize) -> FieldVerdict {
    let n = b.dim();
    if n == 0 {
        return FieldVerdict::Inconclusive { trials: 0 };
    }
    if let Some(w) = nilpotent_in_radical(b) {
        return FieldVerdict::NotField(w);
    }
    for i in 0..n {
        for j in i..n {
            if is_zero_vec(b.mul_basis(i, j)) {
                return FieldVerdict::NotField(NotFieldWitness::ZeroDivisor {
                    left: b.basis_vec(i),
                    right: b.basis_vec(j),
                });
            }
        }
    }
    for i in 0..n {
        let x = b.basis_vec(i);
        let kernel = b.left_mul(&x).kernel();
        if let Some(y) = kernel.basis().first() {
            return FieldVerdict::NotField(NotFieldWitness::ZeroDivisor {
                left: x,
                right: y.clone(),
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<Vector> = (0..n).map(|i| b.basis_vec(i)).collect();
    candidates.extend((0..trials).map(|_| random_vector(&mut rng, n)));
    for x in candidates {
        if is_zero_vec(&x) {
            continue;
        }
        let f = minimal_polynomial(b, &x);
        if let Some(w) = split_witness(b, &x, &f) {
            return FieldVerdict::NotField(w);
        }
        if poly::degree(&f) == Some(n) {
            if let Some(prime) = poly::irreducibility_prime(&f) {
                return FieldVerdict::Field {
                    element: x,
                    minimal_polynomial: f,
                    prime: (n > 1).then_some(prime),
                };
            }
        }
    }
    FieldVerdict::Inconclusive { trials }
}

/// Monic minimal polynomial of `x`: the first linear relation among
/// `1, x, x², …`.
pub fn minimal_polynomial(b: &AlgebraData, x: &[Rational]) -> Vec<Rational> {
    let n = b.dim();
    let mut powers = vec![b.one()];
    loop {
        let next = b.mul(powers.last().expect("nonempty"), x);
        powers.push(next);
        let m = Matrix::from_columns(&powers, n).expect("power columns");
        let ker = m.kernel();
        if let Some(rel) = ker.basis().first() {
            return poly::monic(rel.clone());
        }
        assert!(powers.len() <= n + 1, "powers of an element are dependent by dimension");
    }
}

fn eval_at(b: &AlgebraData, f: &[Rational], x: &[Rational]) -> Vector {
    let mut acc = zero_vec(b.dim());
    for c in f.iter().rev() {
        acc = b.mul(&acc, x);
        add_scaled(&mut acc, c, &b.one());
    }
    acc
}

/// A nontrivial factorisation `f = g·q` gives `g(x)·q(x) = 0` with both
/// factors nonzero, since `f` is the minimal polynomial.
fn split_witness(b: &AlgebraData, x: &[Rational], f: &Poly) -> Option<NotFieldWitness> {
    let factor = |g: Poly| -> NotFieldWitness {
        let (q, _) = poly::divmod(f, &g);
        NotFieldWitness::ZeroDivisor {
            left: eval_at(b, &g, x),
            right: eval_at(b, &q, x),
        }
    };
    let g = poly::gcd(f, &poly::derivative(f));
    if poly::degree(&g).is_some_and(|d| d > 0) {
        return Some(factor(g));
    }
    if poly::degree(f).is_some_and(|d| d > 1) {
        if let Some(r) = poly::rational_roots(f).and_then(|r| r.into_iter().next()) {
            return Some(factor(vec![-r, rat(1)]));
        }
    }
    None
}

/// A nonzero vector in the radical of the trace form `(x, y) ↦ tr(L_{xy})`,
/// which in characteristic zero is the nilradical.
fn nilpotent_in_radical(b: &AlgebraData) -> Option<NotFieldWitness> {
    let n = b.dim();
    let traces: Vec<Rational> = (0..n)
        .map(|k| {
            let l = b.left_mul(&b.basis_vec(k));
            (0..n).fold(rat(0), |acc, i| acc + &l[(i, i)])
        })
        .collect();
    let rows: Vec<Vector> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    b.mul_basis(i, j)
                        .iter()
                        .zip(&traces)
                        .fold(rat(0), |acc, (c, t)| acc + c * t)
                })
                .collect()
        })
        .collect();
    let form = Matrix::from_rows(rows, n).expect("trace form shape");
    let radical = form.kernel();
    let element = radical.basis().first()?.clone();
    let mut power = element.clone();
    for order in 1..=n + 1 {
        if is_zero_vec(&power) {
            return Some(NotFieldWitness::Nilpotent { element, order });
        }
        power = b.mul(&power, &element);
    }
    // Not nil: the input was not commutative and associative.
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::ratio;
    use crate::hopfcore::{group_algebra, monic_quotient, sweedler_h4, truncated_polynomial};
    use crate::tpalg::{derivation_bracket, x_power_ddx, TPAlgebra};

    fn c2_regular() -> (HopfAlgebra, ComoduleTPAlgebra, TPHopfModule, ColinearAlgebraMap) {
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

    fn a3_euler_trivial() -> (HopfAlgebra, ComoduleTPAlgebra, TPHopfModule) {
        let h = HopfAlgebra::trivial();
        let tp = derivation_bracket(&truncated_polynomial(3), &x_power_ddx(3, 1)).unwrap();
        let a = ComoduleTPAlgebra::new("A3", tp, ComoduleData::trivial(3, &h)).unwrap();
        let m = TPHopfModule::regular(&a);
        (h, a, m)
    }

    #[test]
    fn phi_flags_are_computed() {
        let (h, a, _, phi) = c2_regular();
        assert_eq!(
            phi.flags,
            PhiFlags {
                colinear: true,
                algebra_map: true,
                unit_preserving: true,
                lands_in_center: true
            }
        );
        // the unit map is not colinear for nontrivial H
        let u = ColinearAlgebraMap::unit_map(&a, &h).unwrap();
        assert!(!u.flags.colinear);
        assert!(u.flags.unit_preserving && u.flags.algebra_map);
        // g ↦ 2g breaks multiplicativity
        let bad = ColinearAlgebraMap::new(Matrix::from_i64(&[&[1, 0], &[0, 2]]), &a, &h).unwrap();
        assert!(!bad.flags.algebra_map);
        assert!(bad.flags.colinear);
    }

    #[test]
    fn coinvariant_examples() {
        let h = group_algebra(&[2]);
        assert!(coinvariants(&ComoduleData::trivial(3, &h), &h).is_full());
        let reg = coinvariants(&ComoduleData::regular(&h), &h);
        assert_eq!(reg, Subspace::span(2, &[unit_vec(2, 0)]));
        let h4 = sweedler_h4();
        let reg = coinvariants(&ComoduleData::regular(&h4), &h4);
        assert_eq!(reg, Subspace::span(4, &[unit_vec(4, 0)]));
    }

    #[test]
    fn lie_invariant_examples() {
        let (_, a, m) = a3_euler_trivial();
        assert_eq!(lie_invariants(&m, &a).unwrap(), Subspace::span(3, &[unit_vec(3, 0)]));
        let (_, a, m, _) = c2_regular();
        assert!(lie_invariants(&m, &a).unwrap().is_full());
    }

    #[test]
    fn invariant_checks_hold() {
        let (h, a, m) = a3_euler_trivial();
        let r = invariant_report(&m, &a, &h).unwrap();
        assert!(r.checks.pass(), "{}", r.checks);
        assert_eq!(r.coinvariants.dim(), 3);
        assert_eq!(r.joint.dim(), 1);
        assert_eq!(r.algebra.b.dim(), 1);
    }

    #[test]
    fn projection_examples() {
        let (h, _, m, phi) = c2_regular();
        let p = projection_p(&m, &phi, &h).unwrap();
        assert!(p.report.pass(), "{}", p.report);
        assert_eq!(p.matrix, Matrix::from_i64(&[&[1, 1], &[0, 0]]));

        let (h, a, m) = a3_euler_trivial();
        let u = ColinearAlgebraMap::unit_map(&a, &h).unwrap();
        let p = projection_p(&m, &u, &h).unwrap();
        assert!(p.matrix.is_identity());
    }

    #[test]
    fn projection_refuses_noncolinear_phi() {
        let (h, a, m, _) = c2_regular();
        let u = ColinearAlgebraMap::unit_map(&a, &h).unwrap();
        assert!(matches!(projection_p(&m, &u, &h), Err(RepError::Hypothesis(_))));
    }

    #[test]
    fn lambda_on_c2() {
        let (h, a, m, phi) = c2_regular();
        let s = lambda_map(&m, &phi, &a, &h).unwrap();
        assert!(s.report.pass(), "{}", s.report);
        // columns: 1⊗1, 1⊗g, g⊗1, g⊗g
        assert_eq!(s.lambda.column(2), unit_vec(2, 0));
        assert_eq!(s.lambda.column(3), unit_vec(2, 1));
        assert!(s.report.checked > 4);
    }

    #[test]
    fn lambda_with_trivial_h_is_identity() {
        let (h, a, m) = a3_euler_trivial();
        let u = ColinearAlgebraMap::unit_map(&a, &h).unwrap();
        let s = lambda_map(&m, &u, &a, &h).unwrap();
        assert!(s.lambda.is_identity());
        assert!(s.report.pass(), "{}", s.report);
    }

    #[test]
    fn lambda_names_the_failed_flag() {
        let (h, a, m, _) = c2_regular();
        let bad = ColinearAlgebraMap::new(Matrix::from_i64(&[&[1, 1], &[0, 0]]), &a, &h).unwrap();
        match lambda_map(&m, &bad, &a, &h) {
            Err(RepError::Hypothesis(msg)) => assert!(msg.contains("colinear"), "{msg}"),
            other => panic!("expected a hypothesis error, got {other:?}"),
        }
    }

    #[test]
    fn ideal_closure_examples() {
        let h = HopfAlgebra::trivial();
        let a = ComoduleTPAlgebra::new(
            "A3",
            TPAlgebra::zero_bracket(truncated_polynomial(3)),
            ComoduleData::trivial(3, &h),
        )
        .unwrap();
        let zero = ideal_closure(&a, &Subspace::zero(3)).unwrap();
        assert!(zero.ideal.is_zero());
        assert!(ideal_closure(&a, &Subspace::span(3, &[unit_vec(3, 0)])).unwrap().ideal.is_full());
        let x = ideal_closure(&a, &Subspace::span(3, &[unit_vec(3, 1)])).unwrap();
        assert_eq!(x.ideal, Subspace::span(3, &[unit_vec(3, 1), unit_vec(3, 2)]));
        assert!(x.rounds <= 3);
    }

    #[test]
    fn simplicity_sampling() {
        let (_, a, _) = a3_euler_trivial();
        match simplicity_evidence(&a, 7, 8).unwrap() {
            Simplicity::NotSimple { ideal, .. } => assert!(!ideal.is_full()),
            other => panic!("A3 has the proper ideal (x, x²): {other:?}"),
        }
        let h = HopfAlgebra::trivial();
        let q = ComoduleTPAlgebra::new(
            "Q",
            TPAlgebra::zero_bracket(group_algebra(&[]).algebra),
            ComoduleData::trivial(1, &h),
        )
        .unwrap();
        assert_eq!(simplicity_evidence(&q, 0, 4).unwrap(), Simplicity::Proven);
        // Q[C2] coacting on itself has no proper coaction-stable ideal
        let (_, c2, _, _) = c2_regular();
        assert!(matches!(
            simplicity_evidence(&c2, 1, 8).unwrap(),
            Simplicity::NoProperIdealFound { .. }
        ));
    }

    #[test]
    fn field_examples() {
        let q = group_algebra(&[]).algebra;
        assert!(matches!(is_field(&q, 0, 32), FieldVerdict::Field { .. }));

        let sqrt2 = monic_quotient("g", &[rat(-2), rat(0)]);
        match is_field(&sqrt2, 0, 32) {
            FieldVerdict::Field { minimal_polynomial, .. } => {
                assert_eq!(minimal_polynomial, vec![rat(-2), rat(0), rat(1)])
            }
            other => panic!("{other:?}"),
        }

        let c2 = group_algebra(&[2]).algebra;
        match is_field(&c2, 0, 32) {
            FieldVerdict::NotField(NotFieldWitness::ZeroDivisor { left, right }) => {
                assert!(!is_zero_vec(&left) && !is_zero_vec(&right));
                assert!(is_zero_vec(&c2.mul(&left, &right)));
                // (g - 1)(g + 1)
                assert_eq!(left, vec![rat(-1), rat(1)]);
                assert_eq!(right, vec![rat(1), rat(1)]);
            }
            other => panic!("{other:?}"),
        }

        let dual = truncated_polynomial(2);
        match is_field(&dual, 0, 32) {
            FieldVerdict::NotField(NotFieldWitness::Nilpotent { element, order }) => {
                assert_eq!(element, unit_vec(2, 1));
                assert_eq!(order, 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn field_test_is_deterministic_and_handles_larger_fields() {
        // Q(2^(1/3))
        let cubic = monic_quotient("t", &[rat(-2), rat(0), rat(0)]);
        let a = is_field(&cubic, 3, 32);
        assert!(matches!(a, FieldVerdict::Field { .. }));
        assert_eq!(a, is_field(&cubic, 3, 32));
        // Q[C3] = Q × Q(ω) is not a field
        let c3 = group_algebra(&[3]).algebra;
        assert!(matches!(is_field(&c3, 0, 32), FieldVerdict::NotField(_)));
        // Q[t]/(t² + t + 1/2) is a field with a non-integral minimal polynomial
        let f = monic_quotient("t", &[ratio(1, 2), rat(1)]);
        assert!(matches!(is_field(&f, 0, 32), FieldVerdict::Field { .. }));
    }
}
