//! JSON documents for structure-constant data.
//!
//! Every file is one object with a `"kind"` tag. Rationals are strings
//! `"p/q"` (integers are accepted on input). Tensors are nested lists:
//! `mult[i][j]` is the coefficient vector of `e_i·e_j`, `comult[i]` of
//! `Δ(e_i)` and `coaction[i]` of `ρ(e_i)`, both flattened with the left
//! factor slowest. Linear maps (`antipode`, `matrix`) are lists of rows.
//!
//! Writing goes through `serde_json::Value`, whose maps are ordered, so saved
//! files have sorted keys and canonical rationals.

use std::fmt;

use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize, Serializer};
use tphopf::exactlin::{format_rational, parse_rational};
use tphopf::hopfcore::{AlgebraData, CoalgebraData, HopfAlgebra, StructureTensor};
use tphopf::invariants::{ColinearAlgebraMap, PhiFlags};
use tphopf::repcat::{ComoduleData, ComoduleTPAlgebra, TPHopfModule, TPModule};
use tphopf::tpalg::TPAlgebra;
use tphopf::{Matrix, Rational, Vector};

use crate::error::CliError;

/// A rational in its text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Q(pub Rational);

impl Serialize for Q {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Q {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct Visitor;
        impl de::Visitor<'_> for Visitor {
            type Value = Q;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational string \"p/q\" or an integer")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<Q, E> {
                parse_rational(v).map(Q).map_err(E::custom)
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Q, E> {
                Ok(Q(Rational::from_integer(v.into())))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Q, E> {
                Ok(Q(Rational::from_integer(v.into())))
            }
        }
        d.deserialize_any(Visitor)
    }
}

type QVec = Vec<Q>;
type QTensor = Vec<Vec<QVec>>;

fn to_q(v: &[Rational]) -> QVec {
    v.iter().cloned().map(Q).collect()
}

fn from_q(v: &[Q]) -> Vector {
    v.iter().map(|q| q.0.clone()).collect()
}

fn tensor_to_q(t: &StructureTensor) -> QTensor {
    t.to_nested().iter().map(|row| row.iter().map(|v| to_q(v)).collect()).collect()
}

fn rows_to_q(m: &Matrix) -> Vec<QVec> {
    m.row_vectors().iter().map(|r| to_q(r)).collect()
}

fn columns_to_q(m: &Matrix) -> Vec<QVec> {
    m.columns().iter().map(|c| to_q(c)).collect()
}

fn shape(field: &str, msg: impl fmt::Display) -> CliError {
    CliError::Input(format!("field `{field}`: {msg}"))
}

fn tensor(field: &str, t: &QTensor, left: usize, right: usize, out: usize) -> Result<StructureTensor, CliError> {
    for (i, row) in t.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if v.len() != out {
                return Err(shape(field, format!("entry [{i}][{j}] has {} coefficients (expected {out})", v.len())));
            }
        }
    }
    let nested = t.iter().map(|row| row.iter().map(|v| from_q(v)).collect()).collect();
    StructureTensor::from_nested(nested, left, right, out).map_err(|e| shape(field, e))
}

fn matrix_from_rows(field: &str, rows: &[QVec], nrows: usize, ncols: usize) -> Result<Matrix, CliError> {
    if rows.len() != nrows {
        return Err(shape(field, format!("{} rows (expected {nrows})", rows.len())));
    }
    for (r, row) in rows.iter().enumerate() {
        if row.len() != ncols {
            return Err(shape(field, format!("row [{r}] has {} entries (expected {ncols})", row.len())));
        }
    }
    Matrix::from_rows(rows.iter().map(|r| from_q(r)).collect(), ncols).map_err(|e| shape(field, e))
}

/// Columns `cols[i]`, each of length `len`.
fn matrix_from_columns(field: &str, cols: &[QVec], ncols: usize, len: usize) -> Result<Matrix, CliError> {
    if cols.len() != ncols {
        return Err(shape(field, format!("{} entries (expected {ncols})", cols.len())));
    }
    for (i, c) in cols.iter().enumerate() {
        if c.len() != len {
            return Err(shape(field, format!("entry [{i}] has {} coefficients (expected {len})", c.len())));
        }
    }
    let cols: Vec<Vector> = cols.iter().map(|c| from_q(c)).collect();
    Matrix::from_columns(&cols, len).map_err(|e| shape(field, e))
}

fn check_dim(declared: usize, basis: &[String]) -> Result<(), CliError> {
    if declared != basis.len() {
        return Err(shape("dim", format!("declared {declared} but {} basis names given", basis.len())));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: QTensor,
    pub unit: QVec,
    pub comult: Vec<QVec>,
    pub counit: QVec,
    pub antipode: Vec<QVec>,
}

impl HopfFile {
    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        Self {
            name: h.name.clone(),
            dim: h.dim(),
            basis: h.algebra.basis.clone(),
            mult: tensor_to_q(&h.algebra.mult),
            unit: to_q(&h.algebra.unit),
            comult: columns_to_q(&h.coalgebra.comult),
            counit: to_q(&h.coalgebra.counit),
            antipode: rows_to_q(&h.antipode),
        }
    }

    /// The raw structure maps, shape-checked but not verified.
    pub fn parts(&self) -> Result<(AlgebraData, CoalgebraData, Matrix), CliError> {
        let n = self.dim;
        check_dim(n, &self.basis)?;
        let mult = tensor("mult", &self.mult, n, n, n)?;
        if self.unit.len() != n {
            return Err(shape("unit", format!("{} coefficients (expected {n})", self.unit.len())));
        }
        let algebra = AlgebraData::new(self.basis.clone(), mult, from_q(&self.unit)).map_err(|e| shape("mult", e))?;
        let comult = matrix_from_columns("comult", &self.comult, n, n * n)?;
        if self.counit.len() != n {
            return Err(shape("counit", format!("{} coefficients (expected {n})", self.counit.len())));
        }
        let coalgebra = CoalgebraData::new(comult, from_q(&self.counit)).map_err(|e| shape("comult", e))?;
        let antipode = matrix_from_rows("antipode", &self.antipode, n, n)?;
        Ok((algebra, coalgebra, antipode))
    }

    pub fn build(&self) -> Result<HopfAlgebra, CliError> {
        let (a, c, s) = self.parts()?;
        HopfAlgebra::new(self.name.clone(), a, c, s).map_err(|e| CliError::Verification(format!("{}: {e}", self.name)))
    }
}

/// A commutative algebra; the bracket and the coaction are optional and
/// default to zero and to `a ↦ a⊗1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: QTensor,
    pub unit: QVec,
    #[serde(default)]
    pub commutative: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<QTensor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<QVec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over_hopf: Option<String>,
}

impl AlgebraFile {
    pub fn from_algebra(a: &ComoduleTPAlgebra, over_hopf: &str) -> Self {
        let alg = a.algebra();
        Self {
            name: a.name.clone(),
            dim: a.dim(),
            basis: alg.basis.clone(),
            mult: tensor_to_q(&alg.mult),
            unit: to_q(&alg.unit),
            commutative: alg.claims_commutative,
            bracket: Some(tensor_to_q(&a.tp.bracket)),
            coaction: Some(columns_to_q(&a.comodule.coaction)),
            over_hopf: Some(over_hopf.to_string()),
        }
    }

    pub fn algebra_data(&self) -> Result<AlgebraData, CliError> {
        let n = self.dim;
        check_dim(n, &self.basis)?;
        let mult = tensor("mult", &self.mult, n, n, n)?;
        if self.unit.len() != n {
            return Err(shape("unit", format!("{} coefficients (expected {n})", self.unit.len())));
        }
        Ok(AlgebraData::new(self.basis.clone(), mult, from_q(&self.unit))
            .map_err(|e| shape("mult", e))?
            .with_commutative_claim(self.commutative))
    }

    pub fn tp(&self) -> Result<TPAlgebra, CliError> {
        let alg = self.algebra_data()?;
        match &self.bracket {
            None => Ok(TPAlgebra::zero_bracket(alg)),
            Some(b) => {
                let n = self.dim;
                TPAlgebra::new(alg, tensor("bracket", b, n, n, n)?).map_err(|e| shape("bracket", e))
            }
        }
    }

    pub fn build(&self, h: &HopfAlgebra) -> Result<ComoduleTPAlgebra, CliError> {
        let tp = self.tp()?;
        let co = match &self.coaction {
            None => ComoduleData::trivial(self.dim, h),
            Some(c) => coaction("coaction", c, self.dim, h.dim())?,
        };
        ComoduleTPAlgebra::new(self.name.clone(), tp, co).map_err(|e| shape("coaction", e))
    }
}

fn coaction(field: &str, c: &[QVec], dim: usize, h_dim: usize) -> Result<ComoduleData, CliError> {
    let m = matrix_from_columns(field, c, dim, dim * h_dim)?;
    ComoduleData::new(dim, h_dim, m).map_err(|e| shape(field, e))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleFile {
    pub name: String,
    pub dim: usize,
    pub coaction: Vec<QVec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over_hopf: Option<String>,
}

impl ComoduleFile {
    pub fn build(&self, h: &HopfAlgebra) -> Result<ComoduleData, CliError> {
        coaction("coaction", &self.coaction, self.dim, h.dim())
    }
}

/// `act[i][k]` is `e_i·m_k`, `lie_act[i][k]` is `e_i⋄m_k`. A missing Lie
/// action is zero; a missing coaction is `m ↦ m⊗1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub act: Option<QTensor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lie_act: Option<QTensor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<QVec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over_algebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over_hopf: Option<String>,
}

impl ModuleFile {
    pub fn from_module(m: &TPHopfModule, over_algebra: &str, over_hopf: &str) -> Self {
        Self {
            name: m.name.clone(),
            dim: m.dim(),
            act: m.module.act.as_ref().map(tensor_to_q),
            lie_act: Some(tensor_to_q(&m.module.lie_act)),
            coaction: Some(columns_to_q(&m.comodule.coaction)),
            over_algebra: Some(over_algebra.to_string()),
            over_hopf: Some(over_hopf.to_string()),
        }
    }

    pub fn module(&self, a_dim: usize) -> Result<TPModule, CliError> {
        let d = self.dim;
        let act = self.act.as_ref().map(|t| tensor("act", t, a_dim, d, d)).transpose()?;
        let lie = match &self.lie_act {
            Some(t) => tensor("lie_act", t, a_dim, d, d)?,
            None => StructureTensor::zero(a_dim, d, d),
        };
        TPModule::new(d, act, lie).map_err(|e| shape("act", e))
    }

    pub fn build(&self, a_dim: usize, h: &HopfAlgebra) -> Result<TPHopfModule, CliError> {
        let module = self.module(a_dim)?;
        let co = match &self.coaction {
            None => ComoduleData::trivial(self.dim, h),
            Some(c) => coaction("coaction", c, self.dim, h.dim())?,
        };
        TPHopfModule::new(self.name.clone(), module, co).map_err(|e| shape("coaction", e))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FlagsFile {
    pub algebra_map: bool,
    pub colinear: bool,
    pub lands_in_center: bool,
    pub unit_preserving: bool,
}

impl From<PhiFlags> for FlagsFile {
    fn from(f: PhiFlags) -> Self {
        Self {
            algebra_map: f.algebra_map,
            colinear: f.colinear,
            lands_in_center: f.lands_in_center,
            unit_preserving: f.unit_preserving,
        }
    }
}

/// `φ: H → A` as a `dim A × dim H` matrix. Declared flags are compared with
/// recomputed ones; a flag claimed but false is rejected.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhiFile {
    pub name: String,
    pub matrix: Vec<QVec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flags: Option<FlagsFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from_hopf: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub to_algebra: Option<String>,
}

impl PhiFile {
    pub fn from_phi(name: &str, phi: &ColinearAlgebraMap, from_hopf: &str, to_algebra: &str) -> Self {
        Self {
            name: name.to_string(),
            matrix: rows_to_q(&phi.phi),
            flags: Some(phi.flags.into()),
            from_hopf: Some(from_hopf.to_string()),
            to_algebra: Some(to_algebra.to_string()),
        }
    }

    pub fn build(&self, a: &ComoduleTPAlgebra, h: &HopfAlgebra) -> Result<ColinearAlgebraMap, CliError> {
        let m = matrix_from_rows("matrix", &self.matrix, a.dim(), h.dim())?;
        let phi = ColinearAlgebraMap::new(m, a, h).map_err(|e| shape("matrix", e))?;
        if let Some(declared) = self.flags {
            let actual = FlagsFile::from(phi.flags);
            let claims = [
                ("algebra_map", declared.algebra_map, actual.algebra_map),
                ("colinear", declared.colinear, actual.colinear),
                ("lands_in_center", declared.lands_in_center, actual.lands_in_center),
                ("unit_preserving", declared.unit_preserving, actual.unit_preserving),
            ];
            let false_claims: Vec<&str> = claims.iter().filter(|(_, d, a)| *d && !*a).map(|(n, _, _)| *n).collect();
            if !false_claims.is_empty() {
                return Err(CliError::Verification(format!(
                    "{}: declared flags do not hold: {}\n{}",
                    self.name,
                    false_claims.join(", "),
                    phi.report
                )));
            }
        }
        Ok(phi)
    }
}

/// Generators of a subalgebra of `A`, in `A`'s coordinates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubalgebraFile {
    pub name: String,
    pub generators: Vec<QVec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inside: Option<String>,
}

impl SubalgebraFile {
    pub fn generators(&self, dim: usize) -> Result<Vec<Vector>, CliError> {
        self.generators
            .iter()
            .enumerate()
            .map(|(i, g)| {
                if g.len() == dim {
                    Ok(from_q(g))
                } else {
                    Err(shape("generators", format!("entry [{i}] has {} coefficients (expected {dim})", g.len())))
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Document {
    Hopf(HopfFile),
    Algebra(AlgebraFile),
    Comodule(ComoduleFile),
    Module(ModuleFile),
    Phi(PhiFile),
    Subalgebra(SubalgebraFile),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Hopf(_) => "hopf",
            Document::Algebra(_) => "algebra",
            Document::Comodule(_) => "comodule",
            Document::Module(_) => "module",
            Document::Phi(_) => "phi",
            Document::Subalgebra(_) => "subalgebra",
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Document::Hopf(d) => &d.name,
            Document::Algebra(d) => &d.name,
            Document::Comodule(d) => &d.name,
            Document::Module(d) => &d.name,
            Document::Phi(d) => &d.name,
            Document::Subalgebra(d) => &d.name,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))
    }

    /// Canonical text: sorted keys, two-space indent, trailing newline.
    pub fn to_canonical(&self) -> String {
        let value = serde_json::to_value(self).expect("documents serialize");
        canonical_json(&value)
    }
}

pub fn canonical_json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use tphopf::gallery;

    #[test]
    fn rationals_are_normalised() {
        let q: Q = serde_json::from_str("\"2/4\"").unwrap();
        assert_eq!(serde_json::to_string(&q).unwrap(), "\"1/2\"");
        let q: Q = serde_json::from_str("-3").unwrap();
        assert_eq!(serde_json::to_string(&q).unwrap(), "\"-3\"");
        assert!(serde_json::from_str::<Q>("\"1/0\"").is_err());
    }

    #[test]
    fn gallery_documents_round_trip() {
        for f in gallery::all() {
            let docs = [
                Document::Hopf(HopfFile::from_hopf(&f.hopf)),
                Document::Algebra(AlgebraFile::from_algebra(&f.algebra, &f.hopf.name)),
                Document::Module(ModuleFile::from_module(&f.module, &f.algebra.name, &f.hopf.name)),
            ];
            for d in docs {
                let text = d.to_canonical();
                let back = Document::parse(&text).unwrap();
                assert_eq!(back.to_canonical(), text, "{}", f.name);
            }
            let h = HopfFile::from_hopf(&f.hopf).build().unwrap();
            assert_eq!(h.antipode, f.hopf.antipode);
            let a = AlgebraFile::from_algebra(&f.algebra, &f.hopf.name).build(&h).unwrap();
            assert_eq!(a.tp, f.algebra.tp);
            assert_eq!(a.comodule, f.algebra.comodule);
        }
    }

    #[test]
    fn shape_errors_name_the_field() {
        let h = HopfFile::from_hopf(&tphopf::hopfcore::group_algebra(&[2]));
        let mut bad = h.clone();
        bad.mult[1].pop();
        let err = bad.parts().unwrap_err().to_string();
        assert!(err.contains("`mult`"), "{err}");
        let mut bad = h;
        bad.antipode[0].push(Q(Rational::from_integer(0.into())));
        let err = bad.parts().unwrap_err().to_string();
        assert!(err.contains("`antipode`") && err.contains("row [0]"), "{err}");
    }
}
