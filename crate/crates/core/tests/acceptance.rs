//! Acceptance criteria, one line each. Runs as a plain binary so the lines
//! are printed on every run; exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use tphopf::exactlin::{is_zero_vec, unit_vec, vec_scale, zero_vec};
use tphopf::fundamental::{adjunction_psi, beta_and_certify, free_b_module, zero_b_module, Status};
use tphopf::gallery::{self, Fixture};
use tphopf::hopfcore::{
    group_algebra, monic_quotient, sweedler_h4, truncated_polynomial, verify_hopf, HopfAlgebra, StructureTensor,
};
use tphopf::invariants::{
    algebra_invariants, coinvariant_subalgebra, invariant_report, is_field, lambda_map, projection_p, FieldVerdict,
    NotFieldWitness, DEFAULT_FIELD_TRIALS,
};
use tphopf::repcat::{gamma_iso, InductionLevel};
use tphopf::tpalg::{bracket_vanishes_on, derivation_bracket, tp_center, verify_tp_algebra, x_power_ddx, TPAlgebra};
use tphopf::{rat, Law, Matrix, Rational, Subspace};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Products of `Q[C_n]` recomputed from exponent arithmetic.
fn cyclic_oracle(h: &HopfAlgebra, n: usize) -> Result<(), String> {
    for i in 0..n {
        for j in 0..n {
            let want = unit_vec(n, (i + j) % n);
            ensure(h.algebra.mul_basis(i, j) == &want[..], || format!("C{n}: g^{i}·g^{j}"))?;
        }
        let want = unit_vec(n, (n - i) % n);
        ensure(h.antipode.column(i) == want, || format!("C{n}: S(g^{i})"))?;
    }
    Ok(())
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for n in 2..=6 {
        let h = group_algebra(&[n]);
        let r = h.verify();
        ensure(r.pass(), || format!("Q[C{n}]:\n{r}"))?;
        cyclic_oracle(&h, n)?;
    }
    let h4 = sweedler_h4();
    let r = h4.verify();
    ensure(r.pass(), || format!("H4:\n{r}"))?;
    let s2 = h4.antipode.mul(&h4.antipode);
    let x = unit_vec(4, 2);
    let s2x = s2.mul_vec(&x);
    ensure(s2x == vec_scale(&rat(-1), &x), || "S²(x) ≠ -x".into())?;
    ensure(h4.antipode_inverse.mul(&h4.antipode).is_identity(), || "S⁻¹S ≠ id".into())?;
    let s4 = s2.mul(&s2);
    ensure(s4.is_identity(), || "S⁴ ≠ id".into())?;

    // every single-entry mutation of Q[C2] is caught
    let c2 = group_algebra(&[2]);
    let mut mutations = 0;
    let bump = |q: &mut Rational| *q += rat(1);
    let caught = |a: &tphopf::hopfcore::AlgebraData, c: &tphopf::hopfcore::CoalgebraData, s: &Matrix| {
        match verify_hopf(a, c, s) {
            Ok(check) => !check.report.pass(),
            Err(_) => true,
        }
    };
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let mut a = c2.algebra.clone();
                bump(&mut a.mult.get_mut(i, j)[k]);
                ensure(caught(&a, &c2.coalgebra, &c2.antipode), || format!("mult[{i}][{j}][{k}]"))?;
                mutations += 1;
            }
        }
    }
    for k in 0..2 {
        let mut a = c2.algebra.clone();
        bump(&mut a.unit[k]);
        ensure(caught(&a, &c2.coalgebra, &c2.antipode), || format!("unit[{k}]"))?;
        let mut c = c2.coalgebra.clone();
        bump(&mut c.counit[k]);
        ensure(caught(&c2.algebra, &c, &c2.antipode), || format!("counit[{k}]"))?;
        mutations += 2;
    }
    for r in 0..4 {
        for col in 0..2 {
            let mut c = c2.coalgebra.clone();
            bump(&mut c.comult[(r, col)]);
            ensure(caught(&c2.algebra, &c, &c2.antipode), || format!("comult[{r}][{col}]"))?;
            mutations += 1;
        }
    }
    for r in 0..2 {
        for col in 0..2 {
            let mut s = c2.antipode.clone();
            bump(&mut s[(r, col)]);
            ensure(caught(&c2.algebra, &c2.coalgebra, &s), || format!("antipode[{r}][{col}]"))?;
            mutations += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed.as_secs_f64() < 1.0, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "Q[C2..C6] and H4 verified, S²(x) = -x, {mutations} mutations caught, {:.0} ms",
        elapsed.as_secs_f64() * 1000.0
    ))
}

/// Brute-force check of `{x^i, x^j} = (j - i) x^(i+j)` on `Q[x]/(x^n)` and of
/// the three identities, using integer coefficient arrays only.
fn euler_oracle(tp: &TPAlgebra, n: usize) -> Result<(), String> {
    let br = |i: usize, j: usize| -> Vec<i64> {
        let mut v = vec![0; n];
        if i + j < n {
            v[i + j] = j as i64 - i as i64;
        }
        v
    };
    let mul_mono = |i: usize, v: &[i64]| -> Vec<i64> {
        let mut out = vec![0; n];
        for (k, c) in v.iter().enumerate() {
            if i + k < n {
                out[i + k] += c;
            }
        }
        out
    };
    let br_vec = |i: usize, v: &[i64]| -> Vec<i64> {
        let mut out = vec![0; n];
        for (k, c) in v.iter().enumerate() {
            for (p, d) in br(i, k).iter().enumerate() {
                out[p] += c * d;
            }
        }
        out
    };
    let add = |a: Vec<i64>, b: Vec<i64>| -> Vec<i64> { a.iter().zip(&b).map(|(x, y)| x + y).collect() };
    for i in 0..n {
        for j in 0..n {
            let engine: Vec<Rational> = tp.br_basis(i, j).to_vec();
            let oracle: Vec<Rational> = br(i, j).into_iter().map(rat).collect();
            ensure(engine == oracle, || format!("n = {n}: bracket ({i},{j}) differs from oracle"))?;
            for k in 0..n {
                let jac = add(add(br_vec(i, &br(j, k)), br_vec(j, &br(k, i))), br_vec(k, &br(i, j)));
                ensure(jac.iter().all(|&c| c == 0), || format!("n = {n}: oracle Jacobi ({i},{j},{k})"))?;
                let lhs: Vec<i64> = mul_mono(i, &br(j, k)).iter().map(|c| 2 * c).collect();
                let mut xk = vec![0; n];
                if i + k < n {
                    xk[i + k] = 1;
                }
                let rhs = add(
                    if i + j < n { br(i + j, k) } else { vec![0; n] },
                    br_vec(j, &xk),
                );
                ensure(lhs == rhs, || format!("n = {n}: oracle transposed Leibniz ({i},{j},{k})"))?;
            }
        }
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    for n in 2..=6 {
        let tp = derivation_bracket(&truncated_polynomial(n), &x_power_ddx(n, 1)).map_err(|e| e.to_string())?;
        let r = verify_tp_algebra(&tp).map_err(|e| e.to_string())?;
        ensure(r.pass(), || format!("n = {n}:\n{r}"))?;
        euler_oracle(&tp, n)?;
    }
    let mut br = StructureTensor::zero(3, 3, 3);
    br.get_mut(1, 2).clone_from_slice(&unit_vec(3, 0));
    br.get_mut(2, 1).clone_from_slice(&vec_scale(&rat(-1), &unit_vec(3, 0)));
    let broken = TPAlgebra::new(truncated_polynomial(3), br).map_err(|e| e.to_string())?;
    let r = verify_tp_algebra(&broken).map_err(|e| e.to_string())?;
    let w = r
        .witnesses
        .iter()
        .find(|w| w.law == Law::TransposedLeibniz && w.indices == vec![1, 1, 2])
        .ok_or("broken bracket has no witness (x,x,x²)")?;
    ensure(w.lhs == vec_scale(&rat(2), &unit_vec(3, 1)) && is_zero_vec(&w.rhs), || format!("witness {w}"))?;
    Ok(format!(
        "Euler brackets on Q[x]/(x^n), n = 2..6, pass and match the oracle; broken bracket: {w}"
    ))
}

fn criterion_3(fixtures: &[Fixture]) -> Outcome {
    let a3 = derivation_bracket(&truncated_polynomial(3), &x_power_ddx(3, 1)).map_err(|e| e.to_string())?;
    let c = tp_center(&a3).map_err(|e| e.to_string())?;
    ensure(c.carrier == Subspace::span(3, &[unit_vec(3, 0)]), || format!("center {:?}", c.carrier))?;
    let zero = TPAlgebra::zero_bracket(truncated_polynomial(3));
    ensure(tp_center(&zero).map_err(|e| e.to_string())?.carrier.is_full(), || "zero-bracket center ≠ A".into())?;
    for f in fixtures {
        let c = tp_center(&f.algebra.tp).map_err(|e| e.to_string())?;
        let r = bracket_vanishes_on(&f.algebra.tp, &c.carrier);
        ensure(r.pass(), || format!("{}: bracket on the center\n{r}", f.name))?;
    }
    Ok(format!("center(A3) = span{{1}}, center(zero) = A, bracket vanishes on {} centers", fixtures.len()))
}

fn criterion_4(fixtures: &[Fixture]) -> Outcome {
    let mut count = 0;
    for f in fixtures {
        let Some(phi) = &f.phi else { continue };
        if !(phi.flags.unit_preserving && phi.flags.colinear) {
            continue;
        }
        let p = projection_p(&f.module, phi, &f.hopf).map_err(|e| format!("{}: {e}", f.name))?;
        ensure(p.report.pass(), || format!("{}:\n{}", f.name, p.report))?;
        ensure(p.matrix.mul(&p.matrix) == p.matrix, || format!("{}: P² ≠ P", f.name))?;
        count += 1;
    }
    ensure(count >= 10, || format!("only {count} fixtures with a valid φ"))?;
    Ok(format!("P² = P and Im P = M^coH on {count} fixtures"))
}

fn criterion_5() -> Outcome {
    let f = gallery::fixture("c2-regular").ok_or("missing c2-regular")?;
    let phi = f.phi.as_ref().ok_or("c2-regular has no φ")?;
    let s = lambda_map(&f.module, phi, &f.algebra, &f.hopf).map_err(|e| e.to_string())?;
    ensure(s.report.pass(), || format!("{}", s.report))?;
    for law in [Law::Retraction, Law::HColinear, Law::LieLinear] {
        ensure(!s.report.violates(law), || format!("{law} fails"))?;
    }
    // λ(g⊗1) = 1, λ(g⊗g) = g
    ensure(s.lambda.column(2) == unit_vec(2, 0), || "λ(g⊗1) ≠ 1".into())?;
    ensure(s.lambda.column(3) == unit_vec(2, 1), || "λ(g⊗g) ≠ g".into())?;
    ensure(s.lambda.mul(&f.module.comodule.coaction).is_identity(), || "λρ ≠ id".into())?;
    Ok(format!("λ∘ρ = id, H-colinear, Lie A-linear and A-linear ({} instances)", s.report.checked))
}

fn criterion_6(fixtures: &[Fixture]) -> Outcome {
    let mut names = Vec::new();
    for f in fixtures {
        let classical = f.algebra.tp.bracket.is_zero() || f.hopf.dim() == 1;
        let zero_lie = f.module.lie().is_zero();
        if !(f.name.starts_with('c') || (classical && zero_lie && f.phi.is_some())) {
            continue;
        }
        let cert = beta_and_certify(&f.algebra, &f.hopf, &f.module, f.phi.as_ref(), None)
            .map_err(|e| format!("{}: {e}", f.name))?;
        let conditions = cert.conditions.as_ref().ok_or_else(|| format!("{}: conditions not evaluated", f.name))?;
        ensure(conditions.pass(), || format!("{}: conditions fail", f.name))?;
        ensure(cert.status == Status::Valid, || {
            format!("{}: {} {:?}\n{}", f.name, cert.status, cert.failed_hypotheses, cert.morphism_report)
        })?;
        ensure(cert.alpha_beta.as_ref().is_some_and(Matrix::is_identity), || format!("{}: αβ", f.name))?;
        ensure(cert.beta_alpha.as_ref().is_some_and(Matrix::is_identity), || format!("{}: βα", f.name))?;
        if cert.rank.dim_b == 1 {
            ensure(cert.rank.dim_m == cert.rank.dim_joint * cert.rank.dim_a, || format!("{}: rank", f.name))?;
            ensure(cert.free_basis.is_some(), || format!("{}: no free basis", f.name))?;
        }
        names.push(f.name.clone());
    }
    ensure(names.iter().any(|n| n == "c2-regular"), || "c2-regular not covered".into())?;
    Ok(format!("VALID with αβ = id and βα = id on {}", names.join(", ")))
}

fn criterion_7() -> Outcome {
    let f = gallery::fixture("a3-derivation").ok_or("missing a3-derivation")?;
    let cert = beta_and_certify(&f.algebra, &f.hopf, &f.module, f.phi.as_ref(), None).map_err(|e| e.to_string())?;
    ensure(cert.status == Status::Diagnostic, || "certificate is not DIAGNOSTIC".into())?;
    let c = cert.conditions.as_ref().ok_or("conditions not evaluated")?;
    let w = c.on_module.first(Law::ConditionModule).ok_or("condition on M passes")?;
    ensure(w.indices == vec![0, 0, 1], || format!("first witness at {:?}", w.indices))?;
    // lhs {1,1}·x = 0, rhs 1⋄x = {1,x} = x
    ensure(w.lhs == zero_vec(3) && w.rhs == unit_vec(3, 1), || format!("witness {w}"))?;
    ensure(cert.rank.dim_coinvariants == 3 && cert.rank.dim_joint == 1, || format!("{:?}", cert.rank))?;
    ensure(cert.alpha_bijective, || "α is not bijective".into())?;
    ensure(cert.morphism_report.pass(), || format!("{}", cert.morphism_report))?;
    Ok(format!(
        "DIAGNOSTIC: {w}; dim M^coH = 3, dim M^AcoH = 1, α bijective"
    ))
}

fn criterion_8(fixtures: &[Fixture]) -> Outcome {
    let mut gammas = 0;
    let mut adjunctions = 0;
    for f in fixtures {
        let level = if f.hopf.is_commutative() {
            InductionLevel::Full
        } else {
            InductionLevel::Lie
        };
        let g = gamma_iso(&f.module, &f.module.module, &f.algebra, &f.hopf, level)
            .map_err(|e| format!("{}: {e}", f.name))?;
        ensure(g.verified, || format!("{}: γ not verified", f.name))?;
        gammas += 1;

        let inv = algebra_invariants(&f.algebra, &f.hopf).map_err(|e| e.to_string())?;
        for n in [zero_b_module(&inv.b), free_b_module(&inv.b, 1), free_b_module(&inv.b, 2)] {
            let adj = adjunction_psi(&f.algebra, &f.hopf, &inv.b, &n, &f.module)
                .map_err(|e| format!("{}: {e}", f.name))?;
            ensure(adj.verified, || {
                format!(
                    "{}: ψ inverse {} triangles {} {}",
                    f.name, adj.inverse_pair, adj.triangle_f, adj.triangle_g
                )
            })?;
            adjunctions += 1;
        }
    }
    Ok(format!("γ verified on {gammas} fixtures, ψ and triangles verified on {adjunctions} (N, M) pairs"))
}

fn criterion_9(fixtures: &[Fixture]) -> Outcome {
    for f in fixtures {
        let inv = invariant_report(&f.module, &f.algebra, &f.hopf).map_err(|e| format!("{}: {e}", f.name))?;
        ensure(inv.checks.pass(), || format!("{}:\n{}", f.name, inv.checks))?;
        coinvariant_subalgebra(&f.algebra, &f.hopf).map_err(|e| format!("{}: A^coH not closed: {e}", f.name))?;
    }
    Ok(format!("M^A stable, b⋄m = 0 and A^coH closed on {} fixtures", fixtures.len()))
}

fn criterion_10() -> Outcome {
    let seed = 20;
    let q = group_algebra(&[]).algebra;
    let sqrt2 = monic_quotient("g", &[rat(-2), rat(0)]);
    let c2 = group_algebra(&[2]).algebra;
    let dual = truncated_polynomial(2);
    ensure(matches!(is_field(&q, seed, DEFAULT_FIELD_TRIALS), FieldVerdict::Field { .. }), || "Q".into())?;
    ensure(matches!(is_field(&sqrt2, seed, DEFAULT_FIELD_TRIALS), FieldVerdict::Field { .. }), || "Q(√2)".into())?;
    for (name, alg) in [("Q[C2]", &c2), ("Q[x]/(x²)", &dual)] {
        let v = is_field(alg, seed, DEFAULT_FIELD_TRIALS);
        match &v {
            FieldVerdict::NotField(NotFieldWitness::ZeroDivisor { left, right }) => {
                ensure(!is_zero_vec(left) && !is_zero_vec(right) && is_zero_vec(&alg.mul(left, right)), || {
                    format!("{name}: bad zero divisor")
                })?;
            }
            FieldVerdict::NotField(NotFieldWitness::Nilpotent { element, order }) => {
                ensure(!is_zero_vec(element) && is_zero_vec(&alg.pow(element, *order)), || {
                    format!("{name}: bad nilpotent")
                })?;
            }
            other => return Err(format!("{name}: {other:?}")),
        }
        ensure(v == is_field(alg, seed, DEFAULT_FIELD_TRIALS), || format!("{name}: not deterministic"))?;
    }
    // B of the c2-regular fixture is span{1}
    let f = gallery::fixture("c2-regular").ok_or("missing c2-regular")?;
    let b = algebra_invariants(&f.algebra, &f.hopf).map_err(|e| e.to_string())?.b;
    ensure(matches!(is_field(&b.algebra, seed, DEFAULT_FIELD_TRIALS), FieldVerdict::Field { .. }), || "B".into())?;
    Ok("Field for Q and Q(√2), verified witnesses for Q[C2] and Q[x]/(x²), reproducible".into())
}

fn main() -> ExitCode {
    let fixtures = gallery::all();
    let results: Vec<(usize, Outcome)> = vec![
        (1, criterion_1()),
        (2, criterion_2()),
        (3, criterion_3(&fixtures)),
        (4, criterion_4(&fixtures)),
        (5, criterion_5()),
        (6, criterion_6(&fixtures)),
        (7, criterion_7()),
        (8, criterion_8(&fixtures)),
        (9, criterion_9(&fixtures)),
        (10, criterion_10()),
    ];
    let mut failed = 0;
    for (n, r) in &results {
        match r {
            Ok(msg) => println!("criterion {n:>2}: PASS  {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n:>2}: FAIL  {msg}");
            }
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
