//! JSON values for engine results. Rationals become `"p/q"` strings.

use serde_json::{json, Value};
use tphopf::exactlin::format_rational;
use tphopf::hopfcore::format_combination;
use tphopf::{Matrix, Rational, Report, Subspace, Witness};

use crate::workspace::Source;

pub fn q(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(q).collect())
}

pub fn matrix(m: &Matrix) -> Value {
    Value::Array(m.row_vectors().iter().map(|r| vector(r)).collect())
}

pub fn subspace(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis().iter().map(|v| vector(v)).collect::<Vec<_>>(),
    })
}

pub fn witness(w: &Witness) -> Value {
    json!({
        "law": w.law.name(),
        "indices": w.indices,
        "lhs": vector(&w.lhs),
        "rhs": vector(&w.rhs),
    })
}

pub fn report(r: &Report) -> Value {
    json!({
        "pass": r.pass(),
        "checked": r.checked,
        "witnesses": r.witnesses.iter().map(witness).collect::<Vec<_>>(),
    })
}

pub fn source(s: &Source) -> Value {
    json!({
        "kind": s.kind,
        "name": s.name,
        "origin": s.origin,
        "sha256": s.sha256,
    })
}

/// Basis vectors written as combinations of the named basis.
pub fn span_text(names: &[String], s: &Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = s.basis().iter().map(|v| format_combination(names, v)).collect();
    format!("span{{{}}}", parts.join(", "))
}

pub fn generic_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn matrix_text(m: &Matrix) -> String {
    m.row_vectors()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(format_rational).collect();
            format!("  [{}]", cells.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}
