//! Named fixtures: a Hopf algebra, a comodule transposed Poisson algebra, a
//! Hopf module over it and, where one exists, a map `φ: H → A`.

use crate::exactlin::{rat, unit_vec, Matrix, Vector};
use crate::hopfcore::{group_algebra, monic_quotient, sweedler_h4, truncated_polynomial, HopfAlgebra, StructureTensor};
use crate::invariants::ColinearAlgebraMap;
use crate::repcat::{ComoduleData, ComoduleTPAlgebra, TPHopfModule, TPModule};
use crate::tpalg::{derivation_bracket, x_power_ddx, TPAlgebra};

#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: String,
    pub summary: String,
    pub hopf: HopfAlgebra,
    pub algebra: ComoduleTPAlgebra,
    pub module: TPHopfModule,
    pub phi: Option<ColinearAlgebraMap>,
}

pub fn names() -> Vec<String> {
    let mut out = Vec::new();
    out.extend((2..=6).map(|n| format!("c{n}-regular")));
    out.extend((2..=6).map(|n| format!("a{n}-derivation")));
    out.extend((2..=6).map(|n| format!("a{n}-zero")));
    out.push("a3-euler-c2".into());
    out.push("q-sqrt2".into());
    out.push("sweedler-h4".into());
    out
}

pub fn fixture(name: &str) -> Option<Fixture> {
    if let Some(n) = parse_indexed(name, "c", "-regular") {
        return (2..=6).contains(&n).then(|| cyclic_regular(n));
    }
    if let Some(n) = parse_indexed(name, "a", "-derivation") {
        return (2..=6).contains(&n).then(|| truncated(n, true));
    }
    if let Some(n) = parse_indexed(name, "a", "-zero") {
        return (2..=6).contains(&n).then(|| truncated(n, false));
    }
    match name {
        "a3-euler-c2" => Some(graded_euler()),
        "q-sqrt2" => Some(quadratic_field()),
        "sweedler-h4" => Some(sweedler()),
        _ => None,
    }
}

pub fn all() -> Vec<Fixture> {
    names().iter().map(|n| fixture(n).expect("listed fixture")).collect()
}

fn parse_indexed(name: &str, prefix: &str, suffix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.strip_suffix(suffix)?.parse().ok()
}

fn build(
    name: String,
    summary: String,
    hopf: HopfAlgebra,
    algebra: ComoduleTPAlgebra,
    module: TPHopfModule,
    phi: Option<Matrix>,
) -> Fixture {
    let phi = phi.map(|p| ColinearAlgebraMap::new(p, &algebra, &hopf).expect("fixture φ shape"));
    Fixture {
        name,
        summary,
        hopf,
        algebra,
        module,
        phi,
    }
}

/// `A = M = H = Q[C_n]` with zero bracket and `φ = id`.
fn cyclic_regular(n: usize) -> Fixture {
    let h = group_algebra(&[n]);
    let a = ComoduleTPAlgebra::new(
        h.name.clone(),
        TPAlgebra::zero_bracket(h.algebra.clone()),
        ComoduleData::regular(&h),
    )
    .expect("regular comodule shape");
    let m = TPHopfModule::regular(&a);
    build(
        format!("c{n}-regular"),
        format!("A = M = H = Q[C{n}], zero bracket, φ = id"),
        h,
        a,
        m,
        Some(Matrix::identity(n)),
    )
}

/// `Q[x]/(x^n)` over the trivial Hopf algebra, with the bracket of the
/// Euler derivation `x·d/dx` or the zero bracket, and `φ` the unit map.
fn truncated(n: usize, euler: bool) -> Fixture {
    let h = HopfAlgebra::trivial();
    let alg = truncated_polynomial(n);
    let (tp, label, what) = if euler {
        (
            derivation_bracket(&alg, &x_power_ddx(n, 1)).expect("Euler derivation"),
            "derivation",
            "bracket {a,b} = aD(b) - D(a)b for D = x·d/dx",
        )
    } else {
        (TPAlgebra::zero_bracket(alg), "zero", "zero bracket")
    };
    let a = ComoduleTPAlgebra::new(format!("A{n}"), tp, ComoduleData::trivial(n, &h)).expect("trivial coaction shape");
    let m = TPHopfModule::regular(&a);
    build(
        format!("a{n}-{label}"),
        format!("A = M = Q[x]/(x^{n}) with {what}, H = Q, φ = unit"),
        h,
        a,
        m,
        Some(Matrix::from_columns(&[unit_vec(n, 0)], n).expect("unit column")),
    )
}

/// `Q[x]/(x³)` with the Euler bracket, graded by `C2` through
/// `x^k ↦ x^k ⊗ g^(k mod 2)`; `φ(1) = 1`, `φ(g) = 0` is colinear and central
/// but not multiplicative.
fn graded_euler() -> Fixture {
    let h = group_algebra(&[2]);
    let tp = derivation_bracket(&truncated_polynomial(3), &x_power_ddx(3, 1)).expect("Euler derivation");
    let cols: Vec<Vector> = (0..3).map(|k| unit_vec(6, k * 2 + k % 2)).collect();
    let co = ComoduleData::new(3, 2, Matrix::from_columns(&cols, 6).expect("grading shape")).expect("grading");
    let a = ComoduleTPAlgebra::new("A3 graded", tp, co).expect("graded algebra");
    let m = TPHopfModule::regular(&a);
    build(
        "a3-euler-c2".into(),
        "A = M = Q[x]/(x^3) with the Euler bracket, C2-graded by parity, φ(g) = 0".into(),
        h,
        a,
        m,
        Some(Matrix::from_i64(&[&[1, 0], &[0, 0], &[0, 0]])),
    )
}

/// `Q(√2) = Q[g]/(g² - 2)` over the trivial Hopf algebra.
fn quadratic_field() -> Fixture {
    let h = HopfAlgebra::trivial();
    let alg = monic_quotient("g", &[rat(-2), rat(0)]);
    let a = ComoduleTPAlgebra::new("Q(sqrt2)", TPAlgebra::zero_bracket(alg), ComoduleData::trivial(2, &h))
        .expect("trivial coaction shape");
    let m = TPHopfModule::regular(&a);
    build(
        "q-sqrt2".into(),
        "A = M = Q[g]/(g^2 - 2), zero bracket, H = Q, φ = unit".into(),
        h,
        a,
        m,
        Some(Matrix::from_i64(&[&[1], &[0]])),
    )
}

/// `H = H4`, `A = span{1, g} ≅ Q[C2]` coacting through `Δ`, and `M = H4`
/// with `A` acting by left multiplication. No colinear `φ` with `φ(1) = 1`
/// exists here.
fn sweedler() -> Fixture {
    let h = sweedler_h4();
    let c2 = group_algebra(&[2]);
    // ρ(1) = 1⊗1, ρ(g) = g⊗g inside A ⊗ H4
    let co = ComoduleData::new(2, 4, Matrix::from_columns(&[unit_vec(8, 0), unit_vec(8, 5)], 8).expect("shape"))
        .expect("coaction shape");
    let a = ComoduleTPAlgebra::new("span{1,g}", TPAlgebra::zero_bracket(c2.algebra), co).expect("sub-Hopf algebra");
    // a·m = am for a ∈ {1, g}
    let act = StructureTensor::from_fn(2, 4, 4, |i, j| h.algebra.mul_basis(i, j).to_vec());
    let module = TPHopfModule::new("H4", TPModule::with_zero_lie(act), ComoduleData::regular(&h)).expect("module shape");
    build(
        "sweedler-h4".into(),
        "H = H4, A = span{1,g}, M = H4 by left multiplication and Δ, no φ".into(),
        h,
        a,
        module,
        None,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcat::verify_tp_hopf_module;

    #[test]
    fn every_fixture_passes_its_verifiers() {
        for f in all() {
            assert!(f.hopf.verify().pass(), "{}", f.name);
            let r = verify_tp_hopf_module(&f.module, &f.algebra, &f.hopf).unwrap();
            assert!(r.pass(), "{}: {r}", f.name);
        }
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(fixture("c7-regular").is_none());
        assert!(fixture("nope").is_none());
        assert_eq!(names().len(), 18);
    }

    #[test]
    fn phi_flags_match_descriptions() {
        let f = fixture("a3-euler-c2").unwrap();
        let flags = f.phi.unwrap().flags;
        assert!(flags.colinear && flags.unit_preserving && flags.lands_in_center);
        assert!(!flags.algebra_map);
        for n in 2..=6 {
            let f = fixture(&format!("c{n}-regular")).unwrap();
            assert!(f.phi.unwrap().report.pass());
        }
    }
}
