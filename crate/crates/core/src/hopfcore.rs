//! Based algebras, coalgebras and Hopf algebras given by structure constants.

use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::{
    add_scaled, is_zero_vec, rat, tensor_vec, unit_vec, zero_vec, Matrix, Rational, TensorIndex,
    Vector,
};
use crate::report::{Law, Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("malformed structure data: {0}")]
    Shape(String),
    #[error("antipode is singular; a bijective antipode is required")]
    Bijectivity,
    #[error("Hopf algebra axioms fail:\n{0}")]
    Axioms(Report),
}

/// Coefficients of a bilinear map `X × Y → Z` on based spaces:
/// `apply(i, j)` is the image of `(x_i, y_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureTensor {
    left: usize,
    right: usize,
    out: usize,
    data: Vec<Rational>,
}

impl StructureTensor {
    pub fn zero(left: usize, right: usize, out: usize) -> Self {
        Self {
            left,
            right,
            out,
            data: vec![Rational::zero(); left * right * out],
        }
    }

    /// `entries[i][j]` is the coefficient vector of the image of `(x_i, y_j)`.
    pub fn from_nested(
        entries: Vec<Vec<Vector>>,
        left: usize,
        right: usize,
        out: usize,
    ) -> Result<Self, HopfError> {
        if entries.len() != left {
            return Err(HopfError::Shape(format!(
                "tensor has {} outer entries (expected {left})",
                entries.len()
            )));
        }
        let mut data = Vec::with_capacity(left * right * out);
        for (i, row) in entries.into_iter().enumerate() {
            if row.len() != right {
                return Err(HopfError::Shape(format!(
                    "tensor entry [{i}] has {} items (expected {right})",
                    row.len()
                )));
            }
            for (j, v) in row.into_iter().enumerate() {
                if v.len() != out {
                    return Err(HopfError::Shape(format!(
                        "tensor entry [{i}][{j}] has {} coefficients (expected {out})",
                        v.len()
                    )));
                }
                data.extend(v);
            }
        }
        Ok(Self {
            left,
            right,
            out,
            data,
        })
    }

    /// Builds the tensor by evaluating `f` on every pair of basis indices.
    pub fn from_fn(left: usize, right: usize, out: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut data = Vec::with_capacity(left * right * out);
        for i in 0..left {
            for j in 0..right {
                let v = f(i, j);
                assert_eq!(v.len(), out, "structure tensor entry length");
                data.extend(v);
            }
        }
        Self {
            left,
            right,
            out,
            data,
        }
    }

    /// Tensor whose left slices are the given `out × right` matrices.
    pub fn from_left_matrices(mats: &[Matrix], right: usize, out: usize) -> Self {
        Self::from_fn(mats.len(), right, out, |i, j| mats[i].column(j))
    }

    pub fn left_dim(&self) -> usize {
        self.left
    }

    pub fn right_dim(&self) -> usize {
        self.right
    }

    pub fn out_dim(&self) -> usize {
        self.out
    }

    pub fn get(&self, i: usize, j: usize) -> &[Rational] {
        let start = (i * self.right + j) * self.out;
        &self.data[start..start + self.out]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut [Rational] {
        let start = (i * self.right + j) * self.out;
        &mut self.data[start..start + self.out]
    }

    pub fn to_nested(&self) -> Vec<Vec<Vector>> {
        (0..self.left)
            .map(|i| (0..self.right).map(|j| self.get(i, j).to_vec()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn apply(&self, x: &[Rational], y: &[Rational]) -> Vector {
        let mut acc = zero_vec(self.out);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                add_scaled(&mut acc, &(xi * yj), self.get(i, j));
            }
        }
        acc
    }

    /// `y ↦ apply(e_i, y)` as an `out × right` matrix.
    pub fn left_matrix(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.right).map(|j| self.get(i, j).to_vec()).collect();
        Matrix::from_columns(&cols, self.out).expect("slice shape")
    }

    /// `y ↦ apply(x, y)`.
    pub fn left_operator(&self, x: &[Rational]) -> Matrix {
        let cols: Vec<Vector> = (0..self.right)
            .map(|j| {
                let mut acc = zero_vec(self.out);
                for (i, xi) in x.iter().enumerate() {
                    add_scaled(&mut acc, xi, self.get(i, j));
                }
                acc
            })
            .collect();
        Matrix::from_columns(&cols, self.out).expect("slice shape")
    }

    pub fn left_matrices(&self) -> Vec<Matrix> {
        (0..self.left).map(|i| self.left_matrix(i)).collect()
    }
}

/// A based finite-dimensional unital algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraData {
    pub basis: Vec<String>,
    pub mult: StructureTensor,
    pub unit: Vector,
    /// Declared commutativity. Only ever used as a claim to be checked.
    pub claims_commutative: bool,
}

impl AlgebraData {
    pub fn new(basis: Vec<String>, mult: StructureTensor, unit: Vector) -> Result<Self, HopfError> {
        let n = basis.len();
        if mult.left_dim() != n || mult.right_dim() != n || mult.out_dim() != n {
            return Err(HopfError::Shape(format!(
                "multiplication tensor is {}x{}->{} for a {n}-dimensional algebra",
                mult.left_dim(),
                mult.right_dim(),
                mult.out_dim()
            )));
        }
        if unit.len() != n {
            return Err(HopfError::Shape(format!(
                "unit has {} coefficients (expected {n})",
                unit.len()
            )));
        }
        Ok(Self {
            basis,
            mult,
            unit,
            claims_commutative: false,
        })
    }

    pub fn with_commutative_claim(mut self, claim: bool) -> Self {
        self.claims_commutative = claim;
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn one(&self) -> Vector {
        self.unit.clone()
    }

    pub fn basis_vec(&self, i: usize) -> Vector {
        unit_vec(self.dim(), i)
    }

    pub fn mul(&self, x: &[Rational], y: &[Rational]) -> Vector {
        self.mult.apply(x, y)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[Rational] {
        self.mult.get(i, j)
    }

    pub fn left_mul(&self, x: &[Rational]) -> Matrix {
        self.mult.left_operator(x)
    }

    pub fn pow(&self, x: &[Rational], k: usize) -> Vector {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Human-readable linear combination of basis names, e.g. `1 - 2*x^2`.
    pub fn format(&self, v: &[Rational]) -> String {
        format_combination(&self.basis, v)
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_witness().is_none()
    }

    pub fn commutativity_witness(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.mul_basis(i, j) != self.mul_basis(j, i))
    }

    /// Product on `A ⊗ B`: `(a⊗b)(a'⊗b') = aa' ⊗ bb'`.
    pub fn tensor_mul(&self, other: &AlgebraData, x: &[Rational], y: &[Rational]) -> Vector {
        let (da, db) = (self.dim(), other.dim());
        let idx = TensorIndex::new(&[da, db]);
        let mut acc = zero_vec(da * db);
        for (p, xp) in x.iter().enumerate() {
            if xp.is_zero() {
                continue;
            }
            let pi = idx.unflatten(p);
            for (q, yq) in y.iter().enumerate() {
                if yq.is_zero() {
                    continue;
                }
                let qi = idx.unflatten(q);
                let prod = tensor_vec(self.mul_basis(pi[0], qi[0]), other.mul_basis(pi[1], qi[1]));
                add_scaled(&mut acc, &(xp * yq), &prod);
            }
        }
        acc
    }
}

/// A based coalgebra. Column `i` of `comult` is `Δ(e_i)` in the tensor square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraData {
    pub comult: Matrix,
    pub counit: Vector,
}

impl CoalgebraData {
    pub fn new(comult: Matrix, counit: Vector) -> Result<Self, HopfError> {
        let n = counit.len();
        if comult.cols() != n || comult.rows() != n * n {
            return Err(HopfError::Shape(format!(
                "comultiplication is {}x{} for a {n}-dimensional coalgebra",
                comult.rows(),
                comult.cols()
            )));
        }
        Ok(Self { comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.counit.len()
    }

    pub fn delta(&self, x: &[Rational]) -> Vector {
        self.comult.mul_vec(x)
    }

    pub fn epsilon(&self, x: &[Rational]) -> Rational {
        x.iter()
            .zip(&self.counit)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn counit_row(&self) -> Matrix {
        Matrix::from_rows(vec![self.counit.clone()], self.dim()).expect("counit row")
    }

    pub fn is_cocommutative(&self) -> bool {
        self.cocommutativity_witness().is_none()
    }

    pub fn cocommutativity_witness(&self) -> Option<usize> {
        let n = self.dim();
        let idx = TensorIndex::new(&[n, n]);
        (0..n).find(|&i| {
            let d = self.comult.column(i);
            (0..n * n).any(|p| {
                let pq = idx.unflatten(p);
                d[p] != d[idx.flatten(&[pq[1], pq[0]])]
            })
        })
    }
}

pub fn verify_algebra(a: &AlgebraData) -> Report {
    let n = a.dim();
    let mut r = Report::new();
    for i in 0..n {
        let e = a.basis_vec(i);
        r.compare(Law::LeftUnit, &[i], a.mul(&a.unit, &e), e.clone());
        r.compare(Law::RightUnit, &[i], a.mul(&e, &a.unit), e);
    }
    for i in 0..n {
        for j in 0..n {
            let ij = a.mul_basis(i, j).to_vec();
            for k in 0..n {
                let lhs = a.mul(&ij, &a.basis_vec(k));
                let rhs = a.mul(&a.basis_vec(i), a.mul_basis(j, k));
                r.compare(Law::Associativity, &[i, j, k], lhs, rhs);
            }
        }
    }
    if a.claims_commutative {
        for i in 0..n {
            for j in i + 1..n {
                r.compare(
                    Law::Commutativity,
                    &[i, j],
                    a.mul_basis(i, j).to_vec(),
                    a.mul_basis(j, i).to_vec(),
                );
            }
        }
    }
    r
}

pub fn verify_coalgebra(c: &CoalgebraData) -> Report {
    let n = c.dim();
    let id = Matrix::identity(n);
    let left = c.comult.kron(&id).mul(&c.comult);
    let right = id.kron(&c.comult).mul(&c.comult);
    let eps_left = c.counit_row().kron(&id).mul(&c.comult);
    let eps_right = id.kron(&c.counit_row()).mul(&c.comult);
    let mut r = Report::new();
    for i in 0..n {
        r.compare(Law::Coassociativity, &[i], left.column(i), right.column(i));
        r.compare(Law::LeftCounit, &[i], eps_left.column(i), unit_vec(n, i));
        r.compare(Law::RightCounit, &[i], eps_right.column(i), unit_vec(n, i));
    }
    r
}

/// Δ and ε are unital algebra maps.
pub fn verify_bialgebra(a: &AlgebraData, c: &CoalgebraData) -> Report {
    let n = a.dim();
    let mut r = Report::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = c.delta(a.mul_basis(i, j));
            let rhs = a.tensor_mul(a, &c.comult.column(i), &c.comult.column(j));
            r.compare(Law::ComultMultiplicative, &[i, j], lhs, rhs);
            let lhs = vec![c.epsilon(a.mul_basis(i, j))];
            let rhs = vec![&c.counit[i] * &c.counit[j]];
            r.compare(Law::CounitMultiplicative, &[i, j], lhs, rhs);
        }
    }
    r.compare(
        Law::ComultUnital,
        &[],
        c.delta(&a.unit),
        tensor_vec(&a.unit, &a.unit),
    );
    r.compare(Law::CounitUnital, &[], vec![c.epsilon(&a.unit)], vec![rat(1)]);
    r
}

/// `Σ t[p,q] f(e_p) g(e_q)` for `t` in the tensor square.
pub fn multiply_legs(a: &AlgebraData, f: &Matrix, g: &Matrix, t: &[Rational]) -> Vector {
    let n = a.dim();
    let mut acc = zero_vec(n);
    for (p, tp) in t.iter().enumerate() {
        if tp.is_zero() {
            continue;
        }
        let (i, j) = (p / n, p % n);
        let prod = a.mul(&f.column(i), &g.column(j));
        add_scaled(&mut acc, tp, &prod);
    }
    acc
}

pub fn verify_antipode(a: &AlgebraData, c: &CoalgebraData, s: &Matrix) -> Report {
    let n = a.dim();
    let id = Matrix::identity(n);
    let mut r = Report::new();
    for i in 0..n {
        let d = c.comult.column(i);
        let expected: Vector = a.unit.iter().map(|u| u * &c.counit[i]).collect();
        r.compare(Law::AntipodeLeft, &[i], multiply_legs(a, s, &id, &d), expected.clone());
        r.compare(Law::AntipodeRight, &[i], multiply_legs(a, &id, s, &d), expected);
    }
    r
}

/// Result of `verify_hopf`: the full axiom report and, when the antipode is
/// invertible, its inverse.
#[derive(Debug, Clone)]
pub struct HopfCheck {
    pub report: Report,
    pub antipode_inverse: Option<Matrix>,
}

/// Checks every Hopf algebra axiom on basis tuples. Axiom failures are
/// reported as witnesses; a singular antipode on otherwise valid data is an
/// error.
pub fn verify_hopf(a: &AlgebraData, c: &CoalgebraData, s: &Matrix) -> Result<HopfCheck, HopfError> {
    let n = a.dim();
    if c.dim() != n || s.rows() != n || s.cols() != n {
        return Err(HopfError::Shape(format!(
            "algebra dim {n}, coalgebra dim {}, antipode {}x{}",
            c.dim(),
            s.rows(),
            s.cols()
        )));
    }
    let mut report = verify_algebra(a);
    report.merge(verify_coalgebra(c));
    report.merge(verify_bialgebra(a, c));
    report.merge(verify_antipode(a, c, s));
    let antipode_inverse = s.inverse();
    if report.pass() && antipode_inverse.is_none() {
        return Err(HopfError::Bijectivity);
    }
    Ok(HopfCheck {
        report,
        antipode_inverse,
    })
}

/// A verified Hopf algebra with bijective antipode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub name: String,
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
    pub antipode: Matrix,
    pub antipode_inverse: Matrix,
}

impl HopfAlgebra {
    pub fn new(
        name: impl Into<String>,
        algebra: AlgebraData,
        coalgebra: CoalgebraData,
        antipode: Matrix,
    ) -> Result<Self, HopfError> {
        let check = verify_hopf(&algebra, &coalgebra, &antipode)?;
        if !check.report.pass() {
            return Err(HopfError::Axioms(check.report));
        }
        Ok(Self {
            name: name.into(),
            algebra,
            coalgebra,
            antipode,
            antipode_inverse: check.antipode_inverse.expect("checked invertible"),
        })
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

    pub fn delta(&self, x: &[Rational]) -> Vector {
        self.coalgebra.delta(x)
    }

    pub fn epsilon(&self, x: &[Rational]) -> Rational {
        self.coalgebra.epsilon(x)
    }

    pub fn s_inv(&self, x: &[Rational]) -> Vector {
        self.antipode_inverse.mul_vec(x)
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra.is_commutative()
    }

    pub fn is_cocommutative(&self) -> bool {
        self.coalgebra.is_cocommutative()
    }

    /// Re-runs every axiom, including the inverse-antipode identity
    /// `m(S⁻¹⊗id)Δ^op = uε`.
    pub fn verify(&self) -> Report {
        let mut r = match verify_hopf(&self.algebra, &self.coalgebra, &self.antipode) {
            Ok(check) => check.report,
            Err(_) => {
                let mut r = Report::new();
                r.fail(Law::AntipodeBijective, &[], vec![], vec![]);
                r
            }
        };
        let n = self.dim();
        let id = Matrix::identity(n);
        for i in 0..n {
            let d = self.coalgebra.comult.column(i);
            let expected: Vector = self.algebra.unit.iter().map(|u| u * &self.coalgebra.counit[i]).collect();
            // Σ S⁻¹(x2) x1
            r.compare(
                Law::AntipodeLeft,
                &[i],
                multiply_legs(&self.algebra, &self.antipode_inverse, &id, &flip(n, &d)),
                expected,
            );
        }
        let prod = self.antipode.mul(&self.antipode_inverse);
        r.compare(Law::AntipodeBijective, &[], prod.entries().to_vec(), Matrix::identity(n).entries().to_vec());
        r
    }

    /// The trivial one-dimensional Hopf algebra `Q`.
    pub fn trivial() -> Self {
        group_algebra(&[])
    }
}

pub fn format_combination(names: &[String], v: &[Rational]) -> String {
    let mut out = String::new();
    for (name, c) in names.iter().zip(v) {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Rational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if mag == rat(1) {
            out.push_str(name);
        } else if name == "1" {
            out.push_str(&mag.to_string());
        } else {
            out.push_str(&format!("{mag}*{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Swaps the legs of an element of `V ⊗ V`.
pub fn flip(n: usize, t: &[Rational]) -> Vector {
    let mut out = zero_vec(n * n);
    for (p, x) in t.iter().enumerate() {
        out[(p % n) * n + p / n] = x.clone();
    }
    out
}

/// `Q[G]` for `G = C_{n1} × … × C_{nk}`, basis ordered lexicographically by
/// exponent tuple (so `e_0 = 1`). An empty list gives the trivial group.
pub fn group_algebra(orders: &[usize]) -> HopfAlgebra {
    let orders: Vec<usize> = orders.iter().copied().filter(|&n| n > 1).collect();
    let idx = TensorIndex::new(&orders);
    let n = idx.size();
    let names: Vec<String> = (0..n)
        .map(|k| {
            let exps = idx.unflatten(k);
            let parts: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(g, &e)| {
                    let sym = if orders.len() == 1 { "g".to_string() } else { format!("g{}", g + 1) };
                    if e == 1 { sym } else { format!("{sym}^{e}") }
                })
                .collect();
            if parts.is_empty() { "1".to_string() } else { parts.join("") }
        })
        .collect();
    let combine = |a: usize, b: usize, sign: bool| -> usize {
        let (x, y) = (idx.unflatten(a), idx.unflatten(b));
        let z: Vec<usize> = x
            .iter()
            .zip(&y)
            .zip(&orders)
            .map(|((&p, &q), &o)| if sign { (p + q) % o } else { (p + o - q) % o })
            .collect();
        idx.flatten(&z)
    };
    let mult = StructureTensor::from_fn(n, n, n, |i, j| unit_vec(n, combine(i, j, true)));
    let algebra = AlgebraData::new(names, mult, unit_vec(n, 0))
        .expect("group algebra shape")
        .with_commutative_claim(true);
    let mut comult = Matrix::zeros(n * n, n);
    for i in 0..n {
        comult[(i * n + i, i)] = rat(1);
    }
    let coalgebra = CoalgebraData::new(comult, vec![rat(1); n]).expect("group coalgebra shape");
    let mut s = Matrix::zeros(n, n);
    for i in 0..n {
        s[(combine(0, i, false), i)] = rat(1);
    }
    let name = if orders.is_empty() {
        "Q".to_string()
    } else {
        let parts: Vec<String> = orders.iter().map(|o| format!("C{o}")).collect();
        format!("Q[{}]", parts.join("x"))
    };
    HopfAlgebra::new(name, algebra, coalgebra, s).expect("group algebras are Hopf algebras")
}

/// Sweedler's four-dimensional Hopf algebra on the basis `{1, g, x, gx}`.
pub fn sweedler_h4() -> HopfAlgebra {
    // basis words as (g-exponent, x-exponent); products reorder xg = -gx
    let words = [(0u8, 0u8), (1, 0), (0, 1), (1, 1)];
    let index = |g: u8, x: u8| words.iter().position(|&w| w == (g, x)).expect("word");
    let mult = StructureTensor::from_fn(4, 4, 4, |i, j| {
        let (g1, x1) = words[i];
        let (g2, x2) = words[j];
        if x1 + x2 > 1 {
            return zero_vec(4);
        }
        // g^g1 x^x1 g^g2 x^x2 = (-1)^(x1*g2) g^(g1+g2) x^(x1+x2)
        let sign = if x1 == 1 && g2 == 1 { -1 } else { 1 };
        let mut v = zero_vec(4);
        v[index((g1 + g2) % 2, x1 + x2)] = rat(sign);
        v
    });
    let names = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    let algebra = AlgebraData::new(names, mult, unit_vec(4, 0)).expect("H4 algebra shape");
    let t = |a: usize, b: usize| unit_vec(16, a * 4 + b);
    let sum = |u: Vector, v: Vector| -> Vector { u.iter().zip(&v).map(|(p, q)| p + q).collect() };
    let columns = vec![
        t(0, 0),
        t(1, 1),
        sum(t(2, 0), t(1, 2)),
        sum(t(3, 1), t(0, 3)),
    ];
    let comult = Matrix::from_columns(&columns, 16).expect("H4 comult shape");
    let coalgebra = CoalgebraData::new(comult, vec![rat(1), rat(1), rat(0), rat(0)]).expect("H4 counit");
    // S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x
    let s = Matrix::from_i64(&[
        &[1, 0, 0, 0],
        &[0, 1, 0, 0],
        &[0, 0, 0, 1],
        &[0, 0, -1, 0],
    ]);
    HopfAlgebra::new("H4", algebra, coalgebra, s).expect("H4 is a Hopf algebra")
}

/// `Q[t]/(f)` for a monic `f = t^n + c_{n-1} t^{n-1} + … + c_0`, given as
/// `[c_0, …, c_{n-1}]`, on the basis `1, t, …, t^{n-1}`.
pub fn monic_quotient(var: &str, lower_coeffs: &[Rational]) -> AlgebraData {
    let n = lower_coeffs.len();
    assert!(n > 0, "quotient by a constant polynomial");
    // reduce t^k for k < 2n - 1 into the basis
    let mut powers: Vec<Vector> = (0..n).map(|k| unit_vec(n, k)).collect();
    for k in n..2 * n - 1 {
        let prev = &powers[k - 1];
        let mut next = zero_vec(n);
        next[1..].clone_from_slice(&prev[..n - 1]);
        let top = prev[n - 1].clone();
        for i in 0..n {
            next[i] -= &top * &lower_coeffs[i];
        }
        powers.push(next);
    }
    let mult = StructureTensor::from_fn(n, n, n, |i, j| powers[i + j].clone());
    let names = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        })
        .collect();
    AlgebraData::new(names, mult, unit_vec(n, 0))
        .expect("quotient algebra shape")
        .with_commutative_claim(true)
}

/// `Q[x]/(x^n)`.
pub fn truncated_polynomial(n: usize) -> AlgebraData {
    monic_quotient("x", &vec![Rational::zero(); n])
}
