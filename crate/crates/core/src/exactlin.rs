//! Exact rational linear algebra.
//!
//! Everything here works over `BigRational` with dense row-major storage.
//! Subspaces are kept in reduced row echelon form so that equality of
//! subspaces is plain structural equality of their basis matrices.
//!
//! Tensor products of based spaces are flattened lexicographically with the
//! leftmost factor varying slowest: `e_i ⊗ f_j` sits at `i * dim(F) + j`.
//! Every module in the crate relies on that single convention.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact scalar of the ground field.
pub type Rational = BigRational;

/// A coefficient vector in some based space.
pub type Vector = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`; the result is reduced to lowest terms.
pub fn parse_rational(s: &str) -> Result<Rational, LinalgError> {
    let t = s.trim();
    let bad = || LinalgError::ParseRational(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// Canonical text form: `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_scaled(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn vec_sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Rational, v: &[Rational]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Kronecker product of coefficient vectors, left factor slowest.
pub fn tensor_vec(a: &[Rational], b: &[Rational]) -> Vector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// Lexicographic flattening of multi-indices, leftmost factor slowest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorIndex {
    dims: Vec<usize>,
}

impl TensorIndex {
    pub fn new(dims: &[usize]) -> Self {
        Self {
            dims: dims.to_vec(),
        }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn size(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn flatten(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.dims.len());
        idx.iter()
            .zip(&self.dims)
            .fold(0, |acc, (&i, &d)| {
                debug_assert!(i < d);
                acc * d + i
            })
    }

    pub fn unflatten(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for (slot, &d) in out.iter_mut().zip(&self.dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        out
    }
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>, cols: usize) -> Result<Self, LinalgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(LinalgError::Shape(format!(
                    "row {i} has length {} (expected {cols})",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Ok(Self {
            rows: n,
            cols,
            data,
        })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vector], rows: usize) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(LinalgError::Shape(format!(
                    "column {j} has length {} (expected {rows})",
                    c.len()
                )));
            }
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| rat(x))
            })
            .collect();
        Self {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn columns(&self) -> Vec<Vector> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    /// Kronecker product with the left factor's indices varying slowest.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = &self[(r1, c1)];
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = &other[(r2, c2)];
                        if !b.is_zero() {
                            out[(r1 * other.rows + r2, c1 * other.cols + c2)] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Vertical concatenation. All blocks must share a column count.
    pub fn vstack(blocks: &[Matrix], cols: usize) -> Result<Matrix, LinalgError> {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(LinalgError::Shape(format!(
                    "block has {} columns (expected {cols})",
                    b.cols
                )));
            }
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn rref(&self) -> Rref {
        let mut builder = RowReducer::new(self.cols);
        for r in 0..self.rows {
            builder.push(self.row(r));
        }
        builder.finish()
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)].clone();
            }
            aug[(r, n + r)] = Rational::one();
        }
        let red = aug.rref();
        if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = red.rows[r][n + c].clone();
            }
        }
        Some(inv)
    }

    pub fn kernel(&self) -> Subspace {
        kernel(self)
    }

    pub fn column_space(&self) -> Subspace {
        Subspace::span(self.rows, &self.columns())
    }
}

/// Reduced row echelon form: nonzero rows with their pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub cols: usize,
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
}

/// Incremental Gauss-Jordan reduction. Rows are folded in one at a time and
/// the accumulated basis is kept fully reduced and sorted by pivot.
#[derive(Debug, Clone)]
pub struct RowReducer {
    cols: usize,
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` against the current basis; returns the normal form.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = w[p].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        w
    }

    /// Adds a row; returns `true` when it raised the rank.
    pub fn push(&mut self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.cols, "row length mismatch");
        if self.pivots.len() == self.cols || is_zero_vec(v) {
            return false;
        }
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = w[p].clone();
        if !lead.is_one() {
            for x in w.iter_mut() {
                if !x.is_zero() {
                    *x /= &lead;
                }
            }
        }
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (x, y) in row.iter_mut().zip(&w) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }

    pub fn finish(self) -> Rref {
        Rref {
            cols: self.cols,
            rows: self.rows,
            pivots: self.pivots,
        }
    }
}

/// Full solution space of `m · x = 0`.
pub fn kernel(m: &Matrix) -> Subspace {
    kernel_of_rref(&m.rref())
}

fn kernel_of_rref(red: &Rref) -> Subspace {
    let n = red.cols;
    let mut is_pivot = vec![false; n];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let gens: Vec<Vector> = free
        .iter()
        .map(|&f| {
            let mut v = unit_vec(n, f);
            for (row, &p) in red.rows.iter().zip(&red.pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    Subspace::span(n, &gens)
}

/// A subspace of `Q^n` stored as an RREF basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| {
                let r: Vec<String> = r.iter().map(format_rational).collect();
                format!("({})", r.join(", "))
            })
            .collect();
        write!(
            f,
            "Subspace(dim {} in Q^{}: span{{{}}})",
            self.basis.len(),
            self.ambient_dim,
            rows.join(", ")
        )
    }
}

/// Everything `subspace_ops` reports about a pair of subspaces.
#[derive(Debug, Clone)]
pub struct SubspacePair {
    pub intersect: Subspace,
    pub sum: Subspace,
    /// `b ⊆ a`.
    pub contains: bool,
    /// Coset representatives spanning `ambient / a`.
    pub quotient_basis: Vec<Vector>,
}

pub fn subspace_ops(a: &Subspace, b: &Subspace) -> Result<SubspacePair, LinalgError> {
    if a.ambient_dim != b.ambient_dim {
        return Err(LinalgError::DimensionMismatch {
            left: a.ambient_dim,
            right: b.ambient_dim,
        });
    }
    Ok(SubspacePair {
        intersect: a.intersect(b)?,
        sum: a.sum(b)?,
        contains: a.contains_subspace(b),
        quotient_basis: a.quotient_representatives(),
    })
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Self {
            ambient_dim: n,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            ambient_dim: n,
            basis: (0..n).map(|i| unit_vec(n, i)).collect(),
            pivots: (0..n).collect(),
        }
    }

    pub fn span(n: usize, gens: &[Vector]) -> Self {
        let mut red = RowReducer::new(n);
        for g in gens {
            red.push(g);
        }
        Self::from_rref(red.finish())
    }

    fn from_rref(r: Rref) -> Self {
        Self {
            ambient_dim: r.cols,
            basis: r.rows,
            pivots: r.pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.basis.clone(), self.ambient_dim).expect("basis rows have ambient length")
    }

    /// Normal form of `v` modulo this subspace: zero at every pivot column.
    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !w[p].is_zero() {
                let c = w[p].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        v.len() == self.ambient_dim && is_zero_vec(&self.reduce(v))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` against the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Inverse of `coordinates`.
    pub fn embed(&self, coords: &[Rational]) -> Vector {
        let mut v = zero_vec(self.ambient_dim);
        for (c, row) in coords.iter().zip(&self.basis) {
            add_scaled(&mut v, c, row);
        }
        v
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let gens: Vec<Vector> = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Subspace::span(self.ambient_dim, &gens))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        // a ∩ b = ann(ann(a) + ann(b))
        let ann_a = self.annihilator();
        let ann_b = other.annihilator();
        let gens: Vec<Vector> = ann_a.basis.iter().chain(&ann_b.basis).cloned().collect();
        let n = self.ambient_dim;
        let m = Matrix::from_rows(gens, n)?;
        Ok(kernel(&m))
    }

    /// Vectors `w` with `w · v = 0` for every `v` in the subspace.
    pub fn annihilator(&self) -> Subspace {
        kernel(&self.basis_matrix())
    }

    /// Standard basis vectors at the non-pivot columns; their classes form a
    /// basis of `ambient / self`.
    pub fn quotient_representatives(&self) -> Vec<Vector> {
        self.free_columns()
            .into_iter()
            .map(|c| unit_vec(self.ambient_dim, c))
            .collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim).filter(|&c| !is_pivot[c]).collect()
    }

    /// Coordinates of the class of `v` in `ambient / self` against
    /// `quotient_representatives`.
    pub fn quotient_coordinates(&self, v: &[Rational]) -> Vector {
        let w = self.reduce(v);
        self.free_columns().into_iter().map(|c| w[c].clone()).collect()
    }

    /// Image of the subspace under a linear map given as a matrix.
    pub fn image(&self, map: &Matrix) -> Subspace {
        let gens: Vec<Vector> = self.basis.iter().map(|v| map.mul_vec(v)).collect();
        Subspace::span(map.rows(), &gens)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(())
    }
}

/// Solution set of a stacked system `M_k · x = t_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionSet {
    Empty,
    Affine {
        particular: Vector,
        directions: Subspace,
    },
}

impl SolutionSet {
    pub fn homogeneous(&self) -> Option<&Subspace> {
        match self {
            SolutionSet::Empty => None,
            SolutionSet::Affine { directions, .. } => Some(directions),
        }
    }
}

pub fn solve_linear_system(
    cols: usize,
    constraints: &[(Matrix, Vector)],
) -> Result<SolutionSet, LinalgError> {
    let mut red = RowReducer::new(cols + 1);
    for (m, t) in constraints {
        if m.cols() != cols {
            return Err(LinalgError::Shape(format!(
                "constraint has {} columns (expected {cols})",
                m.cols()
            )));
        }
        if t.len() != m.rows() {
            return Err(LinalgError::Shape(format!(
                "target has length {} (expected {})",
                t.len(),
                m.rows()
            )));
        }
        for (r, tr) in t.iter().enumerate() {
            let mut row = m.row(r).to_vec();
            row.push(tr.clone());
            red.push(&row);
        }
    }
    let red = red.finish();
    if red.pivots.last() == Some(&cols) {
        return Ok(SolutionSet::Empty);
    }
    let mut particular = zero_vec(cols);
    for (row, &p) in red.rows.iter().zip(&red.pivots) {
        particular[p] = row[cols].clone();
    }
    let homog = Rref {
        cols,
        rows: red.rows.iter().map(|r| r[..cols].to_vec()).collect(),
        pivots: red.pivots.clone(),
    };
    Ok(SolutionSet::Affine {
        particular,
        directions: kernel_of_rref(&homog),
    })
}

/// Kernel of several constraint blocks stacked vertically.
pub fn stacked_kernel(cols: usize, blocks: &[Matrix]) -> Subspace {
    let mut red = RowReducer::new(cols);
    for b in blocks {
        assert_eq!(b.cols(), cols, "constraint block column mismatch");
        for r in 0..b.rows() {
            red.push(b.row(r));
        }
    }
    kernel_of_rref(&red.finish())
}

/// Clears denominators and content; the leading nonzero entry becomes positive.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = ints
        .iter()
        .find(|x| !x.is_zero())
        .map_or(BigInt::one(), |x| if x.is_negative() { -BigInt::one() } else { BigInt::one() });
    ints.into_iter().map(|x| (x / &g) * &sign).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert_eq!(kernel(&Matrix::identity(2)).dim(), 0);
    }

    #[test]
    fn kernel_of_zero_row_is_everything() {
        let k = kernel(&Matrix::zeros(1, 2));
        assert!(k.is_full());
        assert_eq!(k, Subspace::full(2));
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = kernel(&Matrix::from_i64(&[&[1, 1], &[2, 2]]));
        assert_eq!(k, Subspace::span(2, &[v(&[1, -1])]));
    }

    #[test]
    fn lattice_examples() {
        let x = Subspace::span(2, &[v(&[1, 0])]);
        let y = Subspace::span(2, &[v(&[0, 1])]);
        let ops = subspace_ops(&x, &y).unwrap();
        assert_eq!(ops.intersect.dim(), 0);
        assert!(ops.sum.is_full());
        assert!(!ops.contains);

        let diag = Subspace::span(2, &[v(&[1, 1])]);
        let full = Subspace::full(2);
        let ops = subspace_ops(&diag, &full).unwrap();
        assert_eq!(ops.quotient_basis.len(), 1);
        assert_eq!(ops.intersect, diag);
    }

    #[test]
    fn mismatched_ambients_are_rejected() {
        let err = subspace_ops(&Subspace::full(2), &Subspace::full(3)).unwrap_err();
        assert_eq!(err, LinalgError::DimensionMismatch { left: 2, right: 3 });
    }

    #[test]
    fn linear_systems() {
        let all = solve_linear_system(3, &[]).unwrap();
        assert_eq!(all.homogeneous().unwrap(), &Subspace::full(3));

        let m = Matrix::from_i64(&[&[1, -1, 0], &[0, 1, -1]]);
        let sol = solve_linear_system(3, &[(m, zero_vec(2))]).unwrap();
        assert_eq!(sol.homogeneous().unwrap(), &Subspace::span(3, &[v(&[1, 1, 1])]));

        let a = Matrix::from_i64(&[&[1, 1]]);
        let sol = solve_linear_system(2, &[(a.clone(), v(&[1])), (a, v(&[2]))]).unwrap();
        assert_eq!(sol, SolutionSet::Empty);
    }

    #[test]
    fn affine_particular_solution() {
        let a = Matrix::from_i64(&[&[2, 0], &[0, 3]]);
        match solve_linear_system(2, &[(a.clone(), v(&[1, 1]))]).unwrap() {
            SolutionSet::Affine { particular, directions } => {
                assert_eq!(a.mul_vec(&particular), v(&[1, 1]));
                assert_eq!(directions.dim(), 0);
            }
            SolutionSet::Empty => panic!("system is consistent"),
        }
    }

    #[test]
    fn rationals_parse_canonically() {
        assert_eq!(format_rational(&parse_rational("2/4").unwrap()), "1/2");
        assert_eq!(format_rational(&parse_rational("-6/3").unwrap()), "-2");
        assert_eq!(format_rational(&parse_rational("3/-6").unwrap()), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(&[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn tensor_index_convention() {
        let t = TensorIndex::new(&[2, 3]);
        assert_eq!(t.flatten(&[1, 0]), 3);
        assert_eq!(t.unflatten(5), vec![1, 2]);
        let a = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        let b = Matrix::identity(3);
        // (a ⊗ b)(e_0 ⊗ f_2) = a(e_0) ⊗ f_2 = e_1 ⊗ f_2
        let img = a.kron(&b).mul_vec(&unit_vec(6, t.flatten(&[0, 2])));
        assert_eq!(img, unit_vec(6, t.flatten(&[1, 2])));
    }

    #[test]
    fn quotient_coordinates_vanish_on_subspace() {
        let s = Subspace::span(3, &[v(&[1, 1, 0])]);
        assert!(is_zero_vec(&s.quotient_coordinates(&v(&[2, 2, 0]))));
        assert_eq!(s.quotient_coordinates(&v(&[0, 1, 0])).len(), 2);
    }
}
