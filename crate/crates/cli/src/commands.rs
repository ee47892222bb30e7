//! Command implementations. Each returns an `Outcome` holding a JSON result
//! and a text rendering; `pass` decides the exit code.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use tphopf::exactlin::parse_rational;
use tphopf::fundamental::{adjunction_psi, beta_and_certify, free_b_module, scalar_b_module, zero_b_module, Status};
use tphopf::gallery;
use tphopf::hopfcore::{format_combination, verify_algebra, verify_hopf, HopfAlgebra, HopfError};
use tphopf::invariants::{
    algebra_invariants, coinvariant_subalgebra, coinvariants, ideal_closure, invariant_report, is_field, lambda_map,
    projection_p, simplicity_evidence, FieldVerdict, NotFieldWitness, PhiFlags, Simplicity, DEFAULT_FIELD_TRIALS,
};
use tphopf::repcat::{
    verify_comodule, verify_comodule_tp_algebra, verify_tp_hopf_module, verify_tp_module, ComoduleTPAlgebra,
    TPHopfModule, TPModule,
};
use tphopf::tpalg::{bracket_vanishes_on, tp_center, verify_tp_algebra, Subalgebra, TpError};
use tphopf::{Matrix, Report, Subspace, Vector};

use crate::cli::{CheckKind, Cli, Command, Compute, InputArgs};
use crate::error::CliError;
use crate::format::{canonical_json, ComoduleFile, Document};
use crate::render::{self, generic_names, matrix_text, span_text};
use crate::workspace::{self, fixture_documents, gallery_source, read_document, Inputs, Source, Workspace};

/// Samples used by the simplicity evidence of `compute B`.
const SIMPLICITY_SAMPLES: usize = 16;

#[derive(Debug, Clone)]
pub struct Outcome {
    pub command: String,
    pub pass: bool,
    pub result: Value,
    pub text: String,
    pub sources: Vec<Source>,
}

impl Outcome {
    /// Canonical JSON envelope; identical inputs give identical bytes.
    pub fn to_json(&self, seed: u64) -> String {
        let value = json!({
            "command": self.command,
            "pass": self.pass,
            "seed": seed,
            "inputs": self.sources.iter().map(render::source).collect::<Vec<_>>(),
            "result": self.result,
        });
        canonical_json(&value)
    }

    pub fn exit_code(&self) -> u8 {
        if self.pass {
            0
        } else {
            1
        }
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Check {
            kind,
            target,
            hopf,
            algebra,
        } => check(*kind, target, hopf.clone(), algebra.clone()),
        Command::Compute { what } => compute(what, cli.seed),
        Command::Fundamental { inputs, b } => fundamental(inputs, b),
        Command::Adjunction { inputs, n, b } => adjunction(inputs, n, b),
        Command::Example { name, out } => example(name.as_deref(), out.as_deref()),
    }
}

fn check_outcome(command: String, label: String, report: Report, extra: Value, notes: Vec<String>, sources: Vec<Source>) -> Outcome {
    let mut text = format!("{label}: {report}");
    for n in notes {
        text.push('\n');
        text.push_str(&n);
    }
    let mut result = json!({ "object": label, "report": render::report(&report) });
    if let (Value::Object(r), Value::Object(e)) = (&mut result, extra) {
        r.extend(e);
    }
    Outcome {
        command,
        pass: report.pass(),
        result,
        text,
        sources,
    }
}

/// Smallest `k ≤ limit` with `S^k = id`.
fn antipode_order(h: &HopfAlgebra, limit: usize) -> Option<usize> {
    let mut p = h.antipode.clone();
    for k in 1..=limit {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul(&h.antipode);
    }
    None
}

fn is_example(target: &str) -> bool {
    !Path::new(target).exists() && gallery::fixture(target).is_some()
}

fn check(kind: CheckKind, target: &str, hopf: Option<PathBuf>, algebra: Option<PathBuf>) -> Result<Outcome, CliError> {
    let command = format!("check {}", kind_name(kind));
    let example = is_example(target);
    let path = PathBuf::from(target);
    match kind {
        CheckKind::Hopf => {
            let (name, parts, sources) = if example {
                let f = workspace::fixture(target)?;
                let doc = Document::Hopf(crate::format::HopfFile::from_hopf(&f.hopf));
                let parts = (f.hopf.algebra.clone(), f.hopf.coalgebra.clone(), f.hopf.antipode.clone());
                (f.hopf.name.clone(), parts, vec![gallery_source(target, &doc)])
            } else {
                let (doc, src) = read_document(&path)?;
                let Document::Hopf(file) = doc else {
                    return Err(wrong_kind(&path, "hopf", &src.kind));
                };
                (file.name.clone(), file.parts()?, vec![src])
            };
            let (a, c, s) = parts;
            let (report, extra, notes) = match verify_hopf(&a, &c, &s) {
                Ok(check) if check.report.pass() => {
                    let h = HopfAlgebra::new(name.clone(), a, c, s).map_err(|e| CliError::Verification(e.to_string()))?;
                    let order = antipode_order(&h, 4 * h.dim().max(1) + 4);
                    let extra = json!({
                        "commutative": h.is_commutative(),
                        "cocommutative": h.is_cocommutative(),
                        "antipode_order": order,
                        "antipode_inverse": render::matrix(&h.antipode_inverse),
                    });
                    let notes = vec![
                        format!("commutative: {}, cocommutative: {}", h.is_commutative(), h.is_cocommutative()),
                        match order {
                            Some(k) => format!("antipode order: {k}"),
                            None => "antipode order: not found".into(),
                        },
                    ];
                    (check.report, extra, notes)
                }
                Ok(check) => (check.report, json!({}), vec![]),
                Err(HopfError::Bijectivity) => {
                    let mut r = Report::new();
                    r.fail(tphopf::Law::AntipodeBijective, &[], vec![], vec![]);
                    (r, json!({}), vec!["antipode is singular".into()])
                }
                Err(e) => return Err(CliError::Input(e.to_string())),
            };
            Ok(check_outcome(command, format!("Hopf algebra `{name}`"), report, extra, notes, sources))
        }
        CheckKind::Algebra | CheckKind::Tp => {
            let (name, file_tp, sources) = if example {
                let f = workspace::fixture(target)?;
                let doc = Document::Algebra(crate::format::AlgebraFile::from_algebra(&f.algebra, &f.hopf.name));
                (f.algebra.name.clone(), Ok(f.algebra.tp.clone()), vec![gallery_source(target, &doc)])
            } else {
                let (doc, src) = read_document(&path)?;
                let Document::Algebra(file) = doc else {
                    return Err(wrong_kind(&path, "algebra", &src.kind));
                };
                let tp = if kind == CheckKind::Tp {
                    file.tp()
                } else {
                    file.algebra_data().map(tphopf::tpalg::TPAlgebra::zero_bracket)
                };
                (file.name.clone(), tp, vec![src])
            };
            let tp = file_tp?;
            if kind == CheckKind::Algebra {
                let r = verify_algebra(&tp.algebra);
                let extra = json!({ "commutative": tp.algebra.is_commutative() });
                let notes = vec![format!("commutative: {}", tp.algebra.is_commutative())];
                return Ok(check_outcome(command, format!("algebra `{name}`"), r, extra, notes, sources));
            }
            let r = match verify_tp_algebra(&tp) {
                Ok(r) => r,
                Err(TpError::InvalidAlgebra(r)) => r,
                Err(e) => return Err(e.into()),
            };
            Ok(check_outcome(
                command,
                format!("transposed Poisson algebra `{name}`"),
                r,
                json!({}),
                vec![],
                sources,
            ))
        }
        CheckKind::Comodule => {
            if example {
                let ws = Workspace::load(&example_inputs(target))?;
                let m = ws.module()?;
                let r = verify_comodule(&m.comodule, &ws.hopf)?;
                return Ok(check_outcome(command, format!("comodule `{}`", m.name), r, json!({}), vec![], ws.sources));
            }
            let ws = Workspace::load(&Inputs {
                hopf,
                ..Inputs::default()
            })?;
            let (doc, src) = read_document(&path)?;
            let Document::Comodule(file) = doc else {
                return Err(wrong_kind(&path, "comodule", &src.kind));
            };
            let file: ComoduleFile = file;
            if let Some(h) = &file.over_hopf {
                if h != &ws.hopf.name {
                    return Err(CliError::Input(format!(
                        "comodule `{}` is declared over Hopf algebra `{h}`, but `{}` is loaded",
                        file.name, ws.hopf.name
                    )));
                }
            }
            let co = file.build(&ws.hopf)?;
            let r = verify_comodule(&co, &ws.hopf)?;
            let mut sources = ws.sources;
            sources.push(src);
            Ok(check_outcome(command, format!("comodule `{}`", file.name), r, json!({}), vec![], sources))
        }
        CheckKind::Module | CheckKind::HopfModule => {
            let inputs = if example {
                example_inputs(target)
            } else {
                if algebra.is_none() {
                    return Err(CliError::Input("checking a module file needs --algebra".into()));
                }
                Inputs {
                    hopf,
                    algebra,
                    module: Some(path),
                    ..Inputs::default()
                }
            };
            let ws = Workspace::load(&inputs)?;
            let a = ws.algebra()?;
            let m = ws.module()?;
            let r = if kind == CheckKind::Module {
                verify_tp_module(&m.module, &a.tp)?
            } else {
                let ra = verify_comodule_tp_algebra(a, &ws.hopf)?;
                if !ra.pass() {
                    return Err(CliError::Verification(format!("algebra `{}`:\n{ra}", a.name)));
                }
                verify_tp_hopf_module(m, a, &ws.hopf)?
            };
            let label = if kind == CheckKind::Module {
                format!("transposed Poisson module `{}`", m.name)
            } else {
                format!("transposed Poisson Hopf module `{}`", m.name)
            };
            Ok(check_outcome(command, label, r, json!({}), vec![], ws.sources))
        }
    }
}

fn kind_name(kind: CheckKind) -> &'static str {
    match kind {
        CheckKind::Algebra => "algebra",
        CheckKind::Hopf => "hopf",
        CheckKind::Tp => "tp",
        CheckKind::Comodule => "comodule",
        CheckKind::Module => "module",
        CheckKind::HopfModule => "hopf-module",
    }
}

fn example_inputs(name: &str) -> Inputs {
    Inputs {
        fixture: Some(name.to_string()),
        ..Inputs::default()
    }
}

fn wrong_kind(path: &Path, want: &str, found: &str) -> CliError {
    CliError::Input(format!("{}: expected a `{want}` document, found `{found}`", path.display()))
}

fn load_verified(inputs: &InputArgs) -> Result<Workspace, CliError> {
    let ws = Workspace::load(&inputs.inputs())?;
    ws.verify()?;
    Ok(ws)
}

fn flags_json(f: &PhiFlags) -> Value {
    json!({
        "algebra_map": f.algebra_map,
        "colinear": f.colinear,
        "lands_in_center": f.lands_in_center,
        "unit_preserving": f.unit_preserving,
    })
}

fn field_json(v: &FieldVerdict) -> Value {
    match v {
        FieldVerdict::Field {
            element,
            minimal_polynomial,
            prime,
        } => json!({
            "verdict": "field",
            "element": render::vector(element),
            "minimal_polynomial": render::vector(minimal_polynomial),
            "prime": prime,
        }),
        FieldVerdict::NotField(NotFieldWitness::Nilpotent { element, order }) => json!({
            "verdict": "not-field",
            "nilpotent": { "element": render::vector(element), "order": order },
        }),
        FieldVerdict::NotField(NotFieldWitness::ZeroDivisor { left, right }) => json!({
            "verdict": "not-field",
            "zero_divisor": { "left": render::vector(left), "right": render::vector(right) },
        }),
        FieldVerdict::Inconclusive { trials } => json!({ "verdict": "inconclusive", "trials": trials }),
    }
}

fn field_text(v: &FieldVerdict, names: &[String]) -> String {
    let show = |x: &Vector| format_combination(names, x);
    match v {
        FieldVerdict::Field {
            element,
            minimal_polynomial,
            prime,
        } => {
            let coeffs: Vec<String> = minimal_polynomial.iter().map(|c| c.to_string()).collect();
            let cert = prime.map(|p| format!(", irreducible mod {p}")).unwrap_or_default();
            format!("field: {} has minimal polynomial [{}] (constant term first){cert}", show(element), coeffs.join(", "))
        }
        FieldVerdict::NotField(NotFieldWitness::Nilpotent { element, order }) => {
            format!("not a field: ({})^{order} = 0", show(element))
        }
        FieldVerdict::NotField(NotFieldWitness::ZeroDivisor { left, right }) => {
            format!("not a field: ({})·({}) = 0", show(left), show(right))
        }
        FieldVerdict::Inconclusive { trials } => format!("inconclusive after {trials} random elements"),
    }
}

fn compute(what: &Compute, seed: u64) -> Result<Outcome, CliError> {
    match what {
        Compute::Center(inputs) => {
            let ws = Workspace::load(&inputs.inputs())?;
            let a = ws.algebra()?;
            let c = tp_center(&a.tp)?;
            let r = bracket_vanishes_on(&a.tp, &c.carrier);
            let names = &a.algebra().basis;
            Ok(Outcome {
                command: "compute center".into(),
                pass: r.pass(),
                result: json!({ "center": render::subspace(&c.carrier), "bracket_vanishes": render::report(&r) }),
                text: format!(
                    "A^A = {} (dim {})\nbracket on A^A vanishes: {r}",
                    span_text(names, &c.carrier),
                    c.dim()
                ),
                sources: ws.sources,
            })
        }
        Compute::Coinvariants(inputs) => {
            let ws = load_verified(inputs)?;
            let a = ws.algebra()?;
            let m = ws.module()?;
            let ac = coinvariant_subalgebra(a, &ws.hopf)?;
            let mc = coinvariants(&m.comodule, &ws.hopf);
            Ok(Outcome {
                command: "compute coinvariants".into(),
                pass: true,
                result: json!({ "algebra": render::subspace(&ac.carrier), "module": render::subspace(&mc) }),
                text: format!(
                    "A^coH = {} (dim {})\nM^coH = {} (dim {})",
                    span_text(&a.algebra().basis, &ac.carrier),
                    ac.dim(),
                    span_text(&generic_names("m", m.dim()), &mc),
                    mc.dim()
                ),
                sources: ws.sources,
            })
        }
        Compute::LieInvariants(inputs) => {
            let ws = load_verified(inputs)?;
            let a = ws.algebra()?;
            let m = ws.module()?;
            let inv = invariant_report(m, a, &ws.hopf)?;
            let names = generic_names("m", m.dim());
            Ok(Outcome {
                command: "compute lie-invariants".into(),
                pass: inv.checks.pass(),
                result: json!({
                    "lie_invariants": render::subspace(&inv.lie_invariants),
                    "joint": render::subspace(&inv.joint),
                    "checks": render::report(&inv.checks),
                }),
                text: format!(
                    "M^A = {} (dim {})\nM^AcoH = {} (dim {})\ninvariant checks: {}",
                    span_text(&names, &inv.lie_invariants),
                    inv.lie_invariants.dim(),
                    span_text(&names, &inv.joint),
                    inv.joint.dim(),
                    inv.checks
                ),
                sources: ws.sources,
            })
        }
        Compute::B(inputs) => {
            let ws = load_verified(inputs)?;
            let a = ws.algebra()?;
            let inv = algebra_invariants(a, &ws.hopf)?;
            let b = &inv.b;
            let verdict = is_field(&b.algebra, seed, DEFAULT_FIELD_TRIALS);
            let simple = simplicity_evidence(a, seed, SIMPLICITY_SAMPLES)?;
            let names = &a.algebra().basis;
            let b_names: Vec<String> = (0..b.dim()).map(|k| format_combination(names, b.element(k))).collect();
            let (simple_json, simple_text) = match &simple {
                Simplicity::Proven => (json!({ "verdict": "proven" }), "Poisson H-simple (dim A = 1)".to_string()),
                Simplicity::NotSimple { generator, ideal } => (
                    json!({
                        "verdict": "not-simple",
                        "generator": render::vector(generator),
                        "ideal": render::subspace(ideal),
                    }),
                    format!(
                        "not Poisson H-simple: {} generates the proper ideal {}",
                        format_combination(names, generator),
                        span_text(names, ideal)
                    ),
                ),
                Simplicity::NoProperIdealFound { lines } => (
                    json!({ "verdict": "no-proper-ideal-found", "lines": lines }),
                    format!("no proper Poisson H-ideal found from {lines} sampled lines (evidence, not proof)"),
                ),
            };
            Ok(Outcome {
                command: "compute B".into(),
                pass: true,
                result: json!({
                    "center": render::subspace(&inv.center.carrier),
                    "coinvariants": render::subspace(&inv.coinvariants.carrier),
                    "b": render::subspace(&b.carrier),
                    "field": field_json(&verdict),
                    "simplicity": simple_json,
                }),
                text: format!(
                    "A^A = {}\nA^coH = {}\nB = A^AcoH = {} (dim {})\nB: {}\nA: {}",
                    span_text(names, &inv.center.carrier),
                    span_text(names, &inv.coinvariants.carrier),
                    span_text(names, &b.carrier),
                    b.dim(),
                    field_text(&verdict, &b_names),
                    simple_text
                ),
                sources: ws.sources,
            })
        }
        Compute::P(inputs) => {
            let ws = load_verified(inputs)?;
            let m = ws.module()?;
            let phi = ws.phi()?;
            let p = projection_p(m, phi, &ws.hopf)?;
            Ok(Outcome {
                command: "compute p".into(),
                pass: p.report.pass(),
                result: json!({
                    "p": render::matrix(&p.matrix),
                    "phi_flags": flags_json(&phi.flags),
                    "report": render::report(&p.report),
                }),
                text: format!("p_M =\n{}\nlaws: {}", matrix_text(&p.matrix), p.report),
                sources: ws.sources,
            })
        }
        Compute::Lambda(inputs) => {
            let ws = load_verified(inputs)?;
            let a = ws.algebra()?;
            let m = ws.module()?;
            let phi = ws.phi()?;
            let s = lambda_map(m, phi, a, &ws.hopf)?;
            Ok(Outcome {
                command: "compute lambda".into(),
                pass: s.report.pass(),
                result: json!({
                    "lambda": render::matrix(&s.lambda),
                    "phi_flags": flags_json(&phi.flags),
                    "report": render::report(&s.report),
                }),
                text: format!("λ (columns indexed by m_k ⊗ h_s) =\n{}\nlaws: {}", matrix_text(&s.lambda), s.report),
                sources: ws.sources,
            })
        }
        Compute::IdealClosure { inputs, seed: gens } => {
            let ws = load_verified(inputs)?;
            let a = ws.algebra()?;
            let gens = parse_vectors(gens, a.dim())?;
            let start = Subspace::span(a.dim(), &gens);
            let c = ideal_closure(a, &start)?;
            let names = &a.algebra().basis;
            Ok(Outcome {
                command: "compute ideal-closure".into(),
                pass: true,
                result: json!({
                    "generators": render::subspace(&start),
                    "ideal": render::subspace(&c.ideal),
                    "proper": !c.ideal.is_full(),
                    "rounds": c.rounds,
                }),
                text: format!(
                    "ideal generated by {} = {} (dim {}, {} rounds)",
                    span_text(names, &start),
                    span_text(names, &c.ideal),
                    c.ideal.dim(),
                    c.rounds
                ),
                sources: ws.sources,
            })
        }
    }
}

/// `"1,0,-1/2;0,1,0"` into vectors of length `dim`.
pub fn parse_vectors(text: &str, dim: usize) -> Result<Vec<Vector>, CliError> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|part| {
            let v: Vector = part
                .split(',')
                .map(|c| parse_rational(c).map_err(|e| CliError::Input(e.to_string())))
                .collect::<Result<_, _>>()?;
            if v.len() != dim {
                return Err(CliError::Input(format!("vector `{part}` has {} entries (expected {dim})", v.len())));
            }
            Ok(v)
        })
        .collect()
}

fn with_b(inputs: &InputArgs, b: &str) -> Result<Workspace, CliError> {
    let mut i = inputs.inputs();
    if b != "auto" {
        i.subalgebra = Some(PathBuf::from(b));
    }
    let ws = Workspace::load(&i)?;
    ws.verify()?;
    Ok(ws)
}

fn fundamental(inputs: &InputArgs, b: &str) -> Result<Outcome, CliError> {
    let ws = with_b(inputs, b)?;
    let a = ws.algebra()?;
    let m = ws.module()?;
    let cert = beta_and_certify(a, &ws.hopf, m, ws.phi.as_ref(), ws.subalgebra.as_ref())?;
    let r = &cert.rank;
    let rank_equality = r.dim_m == r.dim_joint * r.dim_a;
    let mut witnesses: Vec<Value> = Vec::new();
    if let Some(c) = &cert.conditions {
        witnesses.extend(c.on_module.witnesses.iter().chain(&c.on_algebra.witnesses).map(render::witness));
    }
    witnesses.extend(cert.morphism_report.witnesses.iter().map(render::witness));
    let is_id = |m: &Option<Matrix>| m.as_ref().map(Matrix::is_identity);
    let result = json!({
        "status": cert.status.to_string(),
        "failed_hypotheses": cert.failed_hypotheses,
        "dims": {
            "a": r.dim_a,
            "b": r.dim_b,
            "m": r.dim_m,
            "coinvariants": r.dim_coinvariants,
            "joint": r.dim_joint,
            "tensor": r.dim_tensor,
        },
        "rank_data": {
            "rank_equality": rank_equality,
            "free_basis": cert.free_basis.as_ref().map(|v| v.iter().map(|x| render::vector(x)).collect::<Vec<_>>()),
        },
        "alpha": render::matrix(&cert.alpha),
        "alpha_bijective": cert.alpha_bijective,
        "beta": cert.beta.as_ref().map(render::matrix),
        "alpha_beta_identity": is_id(&cert.alpha_beta),
        "beta_alpha_identity": is_id(&cert.beta_alpha),
        "conditions": cert.conditions.as_ref().map(|c| json!({
            "module": render::report(&c.on_module),
            "algebra": render::report(&c.on_algebra),
            "coincidence": c.coincidence,
        })),
        "morphisms": render::report(&cert.morphism_report),
        "witnesses": witnesses,
    });

    let yes = |b: bool| if b { "yes" } else { "no" };
    let mut text = vec![format!("status: {}", cert.status)];
    if !cert.failed_hypotheses.is_empty() {
        text.push(format!("failed hypotheses: {}", cert.failed_hypotheses.join("; ")));
    }
    text.push(format!(
        "dim A = {}, dim B = {}, dim M = {}, dim M^coH = {}, dim M^AcoH = {}, dim A⊗_B M^AcoH = {}",
        r.dim_a, r.dim_b, r.dim_m, r.dim_coinvariants, r.dim_joint, r.dim_tensor
    ));
    text.push(format!("α bijective: {}", yes(cert.alpha_bijective)));
    text.push(match (&cert.alpha_beta, &cert.beta_alpha) {
        (Some(x), Some(y)) => format!("αβ = id: {}, βα = id: {}", yes(x.is_identity()), yes(y.is_identity())),
        _ => "β not built (M^coH ≠ M^AcoH or no usable φ)".into(),
    });
    if let Some(c) = &cert.conditions {
        let a_names = &a.algebra().basis;
        let m_names = module_names(a, m);
        for (label, rep, last) in [("M", &c.on_module, &m_names), ("A", &c.on_algebra, a_names)] {
            if rep.pass() {
                text.push(format!("condition on {label}: {rep}"));
                continue;
            }
            text.push(format!("condition on {label}: FAIL ({} of {} instances)", rep.witnesses.len(), rep.checked));
            for w in &rep.witnesses {
                let idx = [&a_names[w.indices[0]], &a_names[w.indices[1]], &last[w.indices[2]]];
                text.push(format!(
                    "  at (a, a', m) = ({}, {}, {}): lhs {}, rhs {}",
                    idx[0],
                    idx[1],
                    idx[2],
                    format_combination(last, &w.lhs),
                    format_combination(last, &w.rhs)
                ));
            }
        }
    }
    text.push(format!("α, β morphisms: {}", cert.morphism_report.to_string().trim_end()));
    if let Some(basis) = &cert.free_basis {
        let names = module_names(a, m);
        let parts: Vec<String> = basis.iter().map(|v| format_combination(&names, v)).collect();
        text.push(format!("M is free over A on {{{}}}", parts.join(", ")));
    }
    Ok(Outcome {
        command: "fundamental".into(),
        pass: cert.status == Status::Valid,
        result,
        text: text.join("\n"),
        sources: ws.sources,
    })
}

/// Basis names for `M`: those of `A` when `M` is the regular module.
fn module_names(a: &ComoduleTPAlgebra, m: &TPHopfModule) -> Vec<String> {
    if m.module.act.as_ref() == Some(&a.algebra().mult) && m.module.lie_act == a.tp.bracket {
        a.algebra().basis.clone()
    } else {
        generic_names("m", m.dim())
    }
}

fn b_module(spec: &str, b: &Subalgebra) -> Result<TPModule, CliError> {
    let count = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| CliError::Input(format!("bad module size in `{spec}`")))
    };
    match spec.split_once(':') {
        None if spec == "zero" => Ok(zero_b_module(b)),
        Some(("free", k)) => Ok(free_b_module(b, count(k)?)),
        Some(("scalar", k)) => scalar_b_module(b, count(k)?).map_err(CliError::from),
        _ => Err(CliError::Input(format!("unknown B-module `{spec}` (use zero, free:K or scalar:K)"))),
    }
}

fn adjunction(inputs: &InputArgs, specs: &[String], b: &str) -> Result<Outcome, CliError> {
    let ws = with_b(inputs, b)?;
    let a = ws.algebra()?;
    let m = ws.module()?;
    let bsub = match &ws.subalgebra {
        Some(s) => s.clone(),
        None => algebra_invariants(a, &ws.hopf)?.b,
    };
    let specs: Vec<String> = if specs.is_empty() {
        vec!["zero".into(), "free:1".into(), "free:2".into()]
    } else {
        specs.to_vec()
    };
    let mut rows = Vec::new();
    let mut lines = Vec::new();
    let mut all = true;
    for spec in &specs {
        let n = b_module(spec, &bsub)?;
        let adj = adjunction_psi(a, &ws.hopf, &bsub, &n, m)?;
        all &= adj.verified;
        rows.push(json!({
            "n": spec,
            "dim_n": n.dim,
            "dim_hom_hopf": adj.hopf_hom.dim(),
            "dim_hom_b": adj.b_hom.dim(),
            "inverse_pair": adj.inverse_pair,
            "triangle_f": adj.triangle_f,
            "triangle_g": adj.triangle_g,
            "verified": adj.verified,
        }));
        lines.push(format!(
            "N = {spec}: dim Hom(A⊗_B N, M) = {}, dim Hom_B(N, M^AcoH) = {}, ψψ' = id and ψ'ψ = id: {}, triangles: {} {}",
            adj.hopf_hom.dim(),
            adj.b_hom.dim(),
            adj.inverse_pair,
            adj.triangle_f,
            adj.triangle_g
        ));
    }
    Ok(Outcome {
        command: "adjunction".into(),
        pass: all,
        result: json!({ "b_dim": bsub.dim(), "instances": rows }),
        text: lines.join("\n"),
        sources: ws.sources,
    })
}

fn example(name: Option<&str>, out: Option<&Path>) -> Result<Outcome, CliError> {
    let Some(name) = name else {
        let list: Vec<Value> = gallery::all()
            .iter()
            .map(|f| json!({ "name": f.name, "summary": f.summary }))
            .collect();
        let text = gallery::all()
            .iter()
            .map(|f| format!("{:<16} {}", f.name, f.summary))
            .collect::<Vec<_>>()
            .join("\n");
        return Ok(Outcome {
            command: "example".into(),
            pass: true,
            result: json!({ "examples": list }),
            text,
            sources: vec![],
        });
    };
    let f = workspace::fixture(name)?;
    let hopf = f.hopf.verify();
    let algebra = verify_comodule_tp_algebra(&f.algebra, &f.hopf)?;
    let module = verify_tp_hopf_module(&f.module, &f.algebra, &f.hopf)?;
    let order = antipode_order(&f.hopf, 4 * f.hopf.dim() + 4);
    let docs = fixture_documents(&f);
    let mut written = Vec::new();
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|source| CliError::Io {
            path: dir.display().to_string(),
            source,
        })?;
        for (role, doc) in &docs {
            let path = dir.join(format!("{role}.json"));
            fs::write(&path, doc.to_canonical()).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            written.push(path.display().to_string());
        }
    }
    let sources: Vec<Source> = docs.iter().map(|(_, d)| gallery_source(name, d)).collect();
    let mut text = vec![
        format!("{}: {}", f.name, f.summary),
        format!("Hopf algebra `{}`: {}", f.hopf.name, hopf.to_string().trim_end()),
        format!("antipode order: {}", order.map_or("not found".into(), |k| k.to_string())),
        format!("algebra `{}`: {}", f.algebra.name, algebra.to_string().trim_end()),
        format!("module `{}`: {}", f.module.name, module.to_string().trim_end()),
    ];
    match &f.phi {
        Some(phi) => text.push(format!(
            "φ: colinear {}, algebra map {}, unital {}, central {}",
            phi.flags.colinear, phi.flags.algebra_map, phi.flags.unit_preserving, phi.flags.lands_in_center
        )),
        None => text.push("φ: none".into()),
    }
    for w in &written {
        text.push(format!("wrote {w}"));
    }
    Ok(Outcome {
        command: "example".into(),
        pass: hopf.pass() && algebra.pass() && module.pass(),
        result: json!({
            "name": f.name,
            "summary": f.summary,
            "antipode_order": order,
            "hopf": render::report(&hopf),
            "algebra": render::report(&algebra),
            "module": render::report(&module),
            "phi_flags": f.phi.as_ref().map(|p| flags_json(&p.flags)),
            "written": written,
        }),
        text: text.join("\n"),
        sources,
    })
}
