//! Transposed Poisson algebras: a commutative associative product together
//! with a Lie bracket satisfying `2a{b,c} = {ab,c} + {b,ac}`.
//!
//! Note that `{1, a}` is in general nonzero here, unlike for classical
//! Poisson algebras; nothing in this module assumes otherwise.

use thiserror::Error;

use crate::exactlin::{
    add_scaled, rat, stacked_kernel, vec_scale, vec_sub, zero_vec, Matrix, Rational, Subspace,
    Vector,
};
use crate::hopfcore::{verify_algebra, AlgebraData, HopfError, StructureTensor};
use crate::report::{Law, Report, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TpError {
    #[error("malformed data: {0}")]
    Shape(String),
    #[error("underlying algebra is not a commutative associative unital algebra:\n{0}")]
    InvalidAlgebra(Report),
    #[error("map is not a derivation: {0}")]
    Derivation(Witness),
    #[error("constructed bracket is not transposed Poisson:\n{0}")]
    NotTransposedPoisson(Report),
    #[error("subspace is not closed: {0}")]
    NotClosed(Witness),
}

impl From<HopfError> for TpError {
    fn from(e: HopfError) -> Self {
        TpError::Shape(e.to_string())
    }
}

/// A commutative algebra with a bracket, as structure constants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TPAlgebra {
    pub algebra: AlgebraData,
    pub bracket: StructureTensor,
}

impl TPAlgebra {
    pub fn new(algebra: AlgebraData, bracket: StructureTensor) -> Result<Self, TpError> {
        let n = algebra.dim();
        if bracket.left_dim() != n || bracket.right_dim() != n || bracket.out_dim() != n {
            return Err(TpError::Shape(format!(
                "bracket tensor is {}x{}->{} for a {n}-dimensional algebra",
                bracket.left_dim(),
                bracket.right_dim(),
                bracket.out_dim()
            )));
        }
        Ok(Self { algebra, bracket })
    }

    /// The same algebra with the zero bracket.
    pub fn zero_bracket(algebra: AlgebraData) -> Self {
        let n = algebra.dim();
        Self {
            algebra,
            bracket: StructureTensor::zero(n, n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn one(&self) -> Vector {
        self.algebra.one()
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.algebra.mul(x, y)
    }

    pub fn br(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.bracket.apply(x, y)
    }

    pub fn br_basis(&self, i: usize, j: usize) -> &[Rational] {
        self.bracket.get(i, j)
    }

    pub fn e(&self, i: usize) -> Vector {
        self.algebra.basis_vec(i)
    }
}

/// Checks antisymmetry, Jacobi and the transposed Leibniz identity on all
/// basis tuples. The underlying algebra must be commutative.
pub fn verify_tp_algebra(a: &TPAlgebra) -> Result<Report, TpError> {
    let alg = a.algebra.clone().with_commutative_claim(true);
    let base = verify_algebra(&alg);
    if !base.pass() {
        return Err(TpError::InvalidAlgebra(base));
    }
    let n = a.dim();
    let mut r = Report::new();
    for i in 0..n {
        for j in i..n {
            let neg: Vector = a.br_basis(j, i).iter().map(|x| -x).collect();
            r.compare(Law::Antisymmetry, &[i, j], a.br_basis(i, j).to_vec(), neg);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (x, y, z) = (a.e(i), a.e(j), a.e(k));
                let mut jac = a.br(&x, a.br_basis(j, k));
                add_scaled(&mut jac, &rat(1), &a.br(&y, a.br_basis(k, i)));
                add_scaled(&mut jac, &rat(1), &a.br(&z, a.br_basis(i, j)));
                r.compare(Law::Jacobi, &[i, j, k], jac, zero_vec(n));

                let lhs = vec_scale(&rat(2), &a.mul(&x, a.br_basis(j, k)));
                let mut rhs = a.br(a.algebra.mul_basis(i, j), &z);
                add_scaled(&mut rhs, &rat(1), &a.br(&y, a.algebra.mul_basis(i, k)));
                r.compare(Law::TransposedLeibniz, &[i, j, k], lhs, rhs);
            }
        }
    }
    Ok(r)
}

/// A subspace closed under the product (and the bracket), with the induced
/// structure constants written against the subspace's RREF basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subalgebra {
    pub carrier: Subspace,
    pub algebra: AlgebraData,
    pub bracket: StructureTensor,
}

impl Subalgebra {
    /// Restricts product and bracket to `carrier`; fails with a witness if
    /// the carrier is not closed or does not contain the unit.
    pub fn induced(a: &TPAlgebra, carrier: Subspace) -> Result<Self, TpError> {
        let n = a.dim();
        if carrier.ambient_dim() != n {
            return Err(TpError::Shape(format!(
                "subspace lives in Q^{} but the algebra has dimension {n}",
                carrier.ambient_dim()
            )));
        }
        let unit = carrier.coordinates(&a.one()).ok_or_else(|| {
            TpError::NotClosed(Witness {
                law: Law::ClosedUnderProduct,
                indices: vec![],
                lhs: a.one(),
                rhs: carrier.reduce(&a.one()),
            })
        })?;
        let basis = carrier.basis().to_vec();
        let d = basis.len();
        let mut mult = Vec::with_capacity(d);
        let mut brak = Vec::with_capacity(d);
        for (p, x) in basis.iter().enumerate() {
            let mut mrow = Vec::with_capacity(d);
            let mut brow = Vec::with_capacity(d);
            for (q, y) in basis.iter().enumerate() {
                let prod = a.mul(x, y);
                let c = carrier.coordinates(&prod).ok_or_else(|| {
                    TpError::NotClosed(Witness {
                        law: Law::ClosedUnderProduct,
                        indices: vec![p, q],
                        lhs: prod.clone(),
                        rhs: carrier.reduce(&prod),
                    })
                })?;
                mrow.push(c);
                let b = a.br(x, y);
                let c = carrier.coordinates(&b).ok_or_else(|| {
                    TpError::NotClosed(Witness {
                        law: Law::ClosedUnderBracket,
                        indices: vec![p, q],
                        lhs: b.clone(),
                        rhs: carrier.reduce(&b),
                    })
                })?;
                brow.push(c);
            }
            mult.push(mrow);
            brak.push(brow);
        }
        let names = basis.iter().map(|v| a.algebra.format(v)).collect();
        let algebra = AlgebraData::new(names, StructureTensor::from_nested(mult, d, d, d)?, unit)?
            .with_commutative_claim(true);
        let bracket = StructureTensor::from_nested(brak, d, d, d)?;
        Ok(Self {
            carrier,
            algebra,
            bracket,
        })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn tp(&self) -> TPAlgebra {
        TPAlgebra {
            algebra: self.algebra.clone(),
            bracket: self.bracket.clone(),
        }
    }

    /// Ambient vector of the `k`-th basis element.
    pub fn element(&self, k: usize) -> &[Rational] {
        &self.carrier.basis()[k]
    }
}

/// The transposed Poisson center `{b : b{a,a'} = {ba,a'} for all a, a'}`.
pub type CenterSubspace = Subalgebra;

/// Solves the stacked linear conditions defining the center and attaches the
/// induced product table.
pub fn tp_center(a: &TPAlgebra) -> Result<CenterSubspace, TpError> {
    let n = a.dim();
    let mut blocks = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            // column k: e_k{e_i,e_j} - {e_k e_i, e_j}
            let cols: Vec<Vector> = (0..n)
                .map(|k| {
                    let ek = a.e(k);
                    vec_sub(
                        &a.mul(&ek, a.br_basis(i, j)),
                        &a.br(a.algebra.mul_basis(k, i), &a.e(j)),
                    )
                })
                .collect();
            blocks.push(Matrix::from_columns(&cols, n).expect("center block shape"));
        }
    }
    let carrier = stacked_kernel(n, &blocks);
    Subalgebra::induced(a, carrier)
}

/// Bracket `{a,b} = a·D(b) - D(a)·b` for a derivation `D` of a commutative
/// algebra. The result is run through `verify_tp_algebra` before returning.
pub fn derivation_bracket(a: &AlgebraData, d: &Matrix) -> Result<TPAlgebra, TpError> {
    let n = a.dim();
    if d.rows() != n || d.cols() != n {
        return Err(TpError::Shape(format!(
            "derivation is {}x{} on a {n}-dimensional algebra",
            d.rows(),
            d.cols()
        )));
    }
    let base = verify_algebra(&a.clone().with_commutative_claim(true));
    if !base.pass() {
        return Err(TpError::InvalidAlgebra(base));
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = d.mul_vec(a.mul_basis(i, j));
            let mut rhs = a.mul(&d.column(i), &a.basis_vec(j));
            add_scaled(&mut rhs, &rat(1), &a.mul(&a.basis_vec(i), &d.column(j)));
            if lhs != rhs {
                return Err(TpError::Derivation(Witness {
                    law: Law::DerivationLeibniz,
                    indices: vec![i, j],
                    lhs,
                    rhs,
                }));
            }
        }
    }
    let bracket = StructureTensor::from_fn(n, n, n, |i, j| {
        vec_sub(
            &a.mul(&a.basis_vec(i), &d.column(j)),
            &a.mul(&d.column(i), &a.basis_vec(j)),
        )
    });
    let tp = TPAlgebra::new(a.clone(), bracket)?;
    let report = verify_tp_algebra(&tp)?;
    if !report.pass() {
        return Err(TpError::NotTransposedPoisson(report));
    }
    Ok(tp)
}

/// `x^k ↦ k·x^(k + shift - 1)` on `Q[x]/(x^n)`, i.e. the matrix of
/// `x^shift · d/dx`. `shift = 1` is the Euler derivation; `shift = 0` is
/// `d/dx`, which is not a derivation of the truncated ring.
pub fn x_power_ddx(n: usize, shift: usize) -> Matrix {
    let mut d = Matrix::zeros(n, n);
    for k in 1..n {
        let target = k + shift - 1;
        if target < n {
            d[(target, k)] = rat(k as i64);
        }
    }
    d
}

/// Whether every bracket of two carrier elements vanishes.
pub fn bracket_vanishes_on(a: &TPAlgebra, s: &Subspace) -> Report {
    let mut r = Report::new();
    for (p, x) in s.basis().iter().enumerate() {
        for (q, y) in s.basis().iter().enumerate() {
            r.compare(Law::ClosedUnderBracket, &[p, q], a.br(x, y), zero_vec(a.dim()));
        }
    }
    r
}
