//! Dense vectors, matrices and 3-tensors over a [`Field`], plus exact
//! row reduction.
//!
//! Matrices represent linear maps in the column convention:
//! `f(e_j) = Σ_i m[i][j] e_i`. A [`Matrix`] is also used for elements of a
//! tensor product `V ⊗ W`, with entry `(i, j)` the coefficient of `e_i ⊗ f_j`.

use std::ops::{Add, Index, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl Vector {
    pub fn zeros(field: Field, len: usize) -> Self {
        Vector { field, coeffs: vec![field.zero(); len] }
    }

    pub fn unit(field: Field, len: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, len);
        v.coeffs[i] = field.one();
        v
    }

    pub fn from_scalars(field: Field, coeffs: Vec<Scalar>) -> Result<Self> {
        if let Some(bad) = coeffs.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Vector { field, coeffs })
    }

    pub fn from_i64s(field: Field, coeffs: &[i64]) -> Self {
        Vector { field, coeffs: coeffs.iter().map(|&c| field.from_i64(c)).collect() }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Scalar> {
        self.coeffs.iter()
    }

    /// `(index, coefficient)` for every nonzero coordinate.
    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn set(&mut self, i: usize, value: Scalar) {
        self.coeffs[i] = value;
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &Vector) {
        debug_assert_eq!(self.len(), other.len());
        if c.is_zero() {
            return;
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a = &*a + &(c * b);
            }
        }
    }

    pub fn add_at(&mut self, i: usize, c: &Scalar) {
        self.coeffs[i] = &self.coeffs[i] + c;
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector { field: self.field, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        self.coeffs.iter().zip(&other.coeffs).fold(self.field.zero(), |acc, (a, b)| acc + a * b)
    }

    /// `self ⊗ other` as a `len(self) × len(other)` matrix.
    pub fn outer(&self, other: &Vector) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.len(), other.len());
        for (i, a) in self.support() {
            for (j, b) in other.support() {
                m.data[i * m.cols + j] = a * b;
            }
        }
        m
    }

    /// Kronecker product with `self` as the major index.
    pub fn kron(&self, other: &Vector) -> Vector {
        let mut out = Vector::zeros(self.field, self.len() * other.len());
        for (i, a) in self.support() {
            for (j, b) in other.support() {
                out.coeffs[i * other.len() + j] = a * b;
            }
        }
        out
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.coeffs[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&self.field.one(), rhs);
        out
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&-self.field.one(), rhs);
        out
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        let n = rows.len();
        let data: Vec<Scalar> = rows.into_iter().flatten().collect();
        if let Some(bad) = data.iter().find(|c| c.field() != field) {
            return Err(Error::FieldMismatch(field, bad.field()));
        }
        Ok(Matrix { field, rows: n, cols, data })
    }

    pub fn from_i64_rows(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(field, rows.len(), cols, |i, j| field.from_i64(rows[i][j]))
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vector]) -> Self {
        Self::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        let k = i * self.cols + j;
        self.data[k] = &self.data[k] + v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector { field: self.field, coeffs: self.data[i * self.cols..(i + 1) * self.cols].to_vec() }
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector { field: self.field, coeffs: (0..self.rows).map(|i| self.get(i, j).clone()).collect() }
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let cols = self.cols;
        self.data.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (k / cols, k % cols, c))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        debug_assert_eq!(self.cols, v.len());
        let mut out = Vector::zeros(self.field, self.rows);
        for (j, c) in v.support() {
            for i in 0..self.rows {
                let m = self.get(i, j);
                if !m.is_zero() {
                    out.add_at(i, &(m * c));
                }
            }
        }
        out
    }

    /// Composition `self ∘ rhs`.
    pub fn compose(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix shapes do not compose");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for (k, j, b) in rhs.support() {
            for i in 0..self.rows {
                let a = self.get(i, k);
                if !a.is_zero() {
                    out.add_at(i, j, &(a * b));
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { field: self.field, rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn add_scaled(&mut self, c: &Scalar, other: &Matrix) {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a = &*a + &(c * b);
            }
        }
    }

    /// Flattened row-major coefficients as a vector of length `rows·cols`.
    pub fn flatten(&self) -> Vector {
        Vector { field: self.field, coeffs: self.data.clone() }
    }

    pub fn rref(&self) -> Rref {
        let (rows, pivots) = rref_rows(self.field, self.cols, self.row_vectors_raw());
        let matrix =
            Matrix { field: self.field, rows: rows.len(), cols: self.cols, data: rows.into_iter().flatten().collect() };
        Rref { matrix, pivots }
    }

    fn row_vectors_raw(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[Scalar]>::to_vec).collect()
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{v : M v = 0}` in reduced echelon form.
    pub fn kernel(&self) -> SubspaceBasis {
        let rref = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !rref.pivots.contains(c)).collect();
        let vectors = free
            .iter()
            .map(|&f| {
                let mut v = Vector::unit(self.field, self.cols, f);
                for (r, &p) in rref.pivots.iter().enumerate() {
                    v.coeffs[p] = -rref.matrix.get(r, f);
                }
                v
            })
            .collect();
        SubspaceBasis::span(self.field, self.cols, vectors)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let augmented: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                let mut row = self.data[i * n..(i + 1) * n].to_vec();
                row.extend((0..n).map(|j| if i == j { self.field.one() } else { self.field.zero() }));
                row
            })
            .collect();
        let (rows, pivots) = rref_rows(self.field, 2 * n, augmented);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(self.field, n, n, |i, j| rows[i][n + j].clone()))
    }

    /// Solves `M x = b`. Returns a particular solution together with the
    /// kernel, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &Vector) -> Option<(Vector, SubspaceBasis)> {
        let augmented: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|i| {
                let mut row = self.data[i * self.cols..(i + 1) * self.cols].to_vec();
                row.push(b[i].clone());
                row
            })
            .collect();
        let (rows, pivots) = rref_rows(self.field, self.cols + 1, augmented);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = Vector::zeros(self.field, self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x.coeffs[p] = rows[r][self.cols].clone();
        }
        Some((x, self.kernel()))
    }
}

/// Reduced row echelon form: nonzero rows only, with their pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

/// Gauss–Jordan elimination. Pivots are the first nonzero entry in column
/// order. Over ℚ the elimination runs fraction-free on integer rows (with
/// content removal) and divides by the pivots only at the end; over F_p it is
/// plain elimination.
fn rref_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    match field {
        Field::Prime(_) => rref_prime(cols, rows),
        Field::Rational => rref_rational(cols, rows),
    }
}

fn rref_prime(cols: usize, mut rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let t = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&t * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

fn rref_rational(cols: usize, rows: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut int_rows: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let lcm = row
                .iter()
                .map(|s| s.as_rational().expect("rational entry").denom().clone())
                .fold(BigInt::one(), |acc, d| acc.lcm(&d));
            row.iter()
                .map(|s| {
                    let q = s.as_rational().unwrap();
                    q.numer() * (&lcm / q.denom())
                })
                .collect()
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..int_rows.len()).find(|&i| !int_rows[i][c].is_zero()) else {
            continue;
        };
        int_rows.swap(r, p);
        let pivot_row = int_rows[r].clone();
        let pivot = pivot_row[c].clone();
        for (i, row) in int_rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let t = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &pivot - &t * y;
            }
            remove_content(row);
        }
        pivots.push(c);
        r += 1;
        if r == int_rows.len() {
            break;
        }
    }
    int_rows.truncate(r);
    let out = int_rows
        .into_iter()
        .zip(&pivots)
        .map(|(row, &c)| {
            let pivot = row[c].clone();
            row.into_iter().map(|x| Scalar::Rational(Box::new(BigRational::new(x, pivot.clone())))).collect()
        })
        .collect();
    (out, pivots)
}

fn remove_content(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// A subspace stored by a basis in reduced row echelon form, so two equal
/// subspaces always have identical bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    field: Field,
    ambient: usize,
    vectors: Vec<Vector>,
    pivots: Vec<usize>,
}

impl SubspaceBasis {
    pub fn zero(field: Field, ambient: usize) -> Self {
        SubspaceBasis { field, ambient, vectors: Vec::new(), pivots: Vec::new() }
    }

    /// Echelon basis of the span of `vectors`.
    pub fn span(field: Field, ambient: usize, vectors: Vec<Vector>) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = Matrix::from_fn(field, vectors.len(), ambient, |i, j| vectors[i][j].clone());
        let rref = m.rref();
        SubspaceBasis { field, ambient, vectors: rref.matrix.row_vectors(), pivots: rref.pivots }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vector] {
        &self.vectors
    }

    /// Exact membership test against the echelon basis.
    pub fn contains(&self, v: &Vector) -> bool {
        let mut rest = v.clone();
        for (b, &p) in self.vectors.iter().zip(&self.pivots) {
            let c = rest[p].clone();
            if !c.is_zero() {
                rest.add_scaled(&-c, b);
            }
        }
        rest.is_zero()
    }

    /// Every linear combination of the basis. Only meaningful over F_p;
    /// returns `p^dim` vectors in lexicographic coefficient order.
    pub fn elements(&self) -> Vec<Vector> {
        let elems = self.field.elements();
        let mut out = vec![Vector::zeros(self.field, self.ambient)];
        for b in &self.vectors {
            let mut next = Vec::with_capacity(out.len() * elems.len());
            for v in &out {
                for c in &elems {
                    let mut w = v.clone();
                    w.add_scaled(c, b);
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }

    pub fn intersect(&self, other: &SubspaceBasis) -> SubspaceBasis {
        // v = Σ a_i s_i = Σ b_j o_j  ⇔  [S | -O] (a, b) = 0
        let cols = self.dim() + other.dim();
        let m = Matrix::from_fn(self.field, self.ambient, cols, |i, j| {
            if j < self.dim() {
                self.vectors[j][i].clone()
            } else {
                -&other.vectors[j - self.dim()][i]
            }
        });
        let kernel = m.kernel();
        let vectors = kernel
            .vectors
            .iter()
            .map(|k| {
                let mut v = Vector::zeros(self.field, self.ambient);
                for (i, s) in self.vectors.iter().enumerate() {
                    v.add_scaled(&k[i], s);
                }
                v
            })
            .collect();
        SubspaceBasis::span(self.field, self.ambient, vectors)
    }
}

/// Dense three-index array `t[i][j][k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor3 {
    field: Field,
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: Field, dims: [usize; 3]) -> Self {
        Tensor3 { field, dims, data: vec![field.zero(); dims[0] * dims[1] * dims[2]] }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let o = self.offset(i, j, k);
        self.data[o] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let o = self.offset(i, j, k);
        self.data[o] = &self.data[o] + v;
    }

    /// The vector `t[i][j][·]`.
    pub fn fiber(&self, i: usize, j: usize) -> Vector {
        let o = self.offset(i, j, 0);
        Vector { field: self.field, coeffs: self.data[o..o + self.dims[2]].to_vec() }
    }

    pub fn set_fiber(&mut self, i: usize, j: usize, v: &Vector) {
        let o = self.offset(i, j, 0);
        self.data[o..o + self.dims[2]].clone_from_slice(v.coeffs());
    }

    /// The matrix `t[i][·][·]`.
    pub fn slice(&self, i: usize) -> Matrix {
        let o = self.offset(i, 0, 0);
        let n = self.dims[1] * self.dims[2];
        Matrix { field: self.field, rows: self.dims[1], cols: self.dims[2], data: self.data[o..o + n].to_vec() }
    }

    /// Nonzero entries as `(i, j, k, value)` in lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        let [_, d1, d2] = self.dims;
        self.data
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(o, c)| (o / (d1 * d2), (o / d2) % d1, o % d2, c))
    }

    /// Swaps the first two indices.
    pub fn swap_first(&self) -> Tensor3 {
        let [a, b, c] = self.dims;
        let mut out = Tensor3::zeros(self.field, [b, a, c]);
        for (i, j, k, v) in self.support() {
            out.set(j, i, k, v.clone());
        }
        out
    }

    /// Swaps the last two indices.
    pub fn swap_last(&self) -> Tensor3 {
        let [a, b, c] = self.dims;
        let mut out = Tensor3::zeros(self.field, [a, c, b]);
        for (i, j, k, v) in self.support() {
            out.set(i, k, j, v.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn kernel_is_in_echelon_form() {
        // x + y + z = 0, 2x + 2y + 2z = 0
        let m = Matrix::from_i64_rows(q(), &[&[1, 1, 1], &[2, 2, 2]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        assert_eq!(k.vectors()[0], Vector::from_i64s(q(), &[1, 0, -1]));
        assert_eq!(k.vectors()[1], Vector::from_i64s(q(), &[0, 1, -1]));
    }

    #[test]
    fn fraction_free_matches_prime_path_on_integer_input() {
        let rows: &[&[i64]] = &[&[2, 4, 1, 3], &[1, 0, 5, 2], &[3, 4, 6, 5]];
        let mq = Matrix::from_i64_rows(q(), rows);
        let f7 = Field::prime(7).unwrap();
        let mp = Matrix::from_i64_rows(f7, rows);
        assert_eq!(mq.rank(), 2);
        assert_eq!(mp.rank(), 2);
        let rq = mq.rref();
        assert_eq!(rq.pivots, vec![0, 1]);
        assert_eq!(
            rq.matrix.row(0),
            Vector::from_scalars(q(), vec![q().from_i64(1), q().from_i64(0), q().from_i64(5), q().from_i64(2),])
                .unwrap()
        );
        assert_eq!(rq.matrix.get(1, 2).to_string(), "-9/4");
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64_rows(q(), &[&[2, 1], &[7, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv), Matrix::identity(q(), 2));
        assert!(Matrix::from_i64_rows(q(), &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn solve_detects_inconsistency() {
        let m = Matrix::from_i64_rows(q(), &[&[1, 1], &[1, 1]]);
        assert!(m.solve(&Vector::from_i64s(q(), &[1, 2])).is_none());
        let (x, k) = m.solve(&Vector::from_i64s(q(), &[3, 3])).unwrap();
        assert_eq!(m.apply(&x), Vector::from_i64s(q(), &[3, 3]));
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn subspace_membership_and_intersection() {
        let s =
            SubspaceBasis::span(q(), 3, vec![Vector::from_i64s(q(), &[1, 1, 0]), Vector::from_i64s(q(), &[0, 1, 1])]);
        assert!(s.contains(&Vector::from_i64s(q(), &[1, 2, 1])));
        assert!(!s.contains(&Vector::from_i64s(q(), &[1, 0, 0])));
        let t =
            SubspaceBasis::span(q(), 3, vec![Vector::from_i64s(q(), &[1, 0, 0]), Vector::from_i64s(q(), &[0, 0, 1])]);
        let i = s.intersect(&t);
        assert_eq!(i.vectors(), &[Vector::from_i64s(q(), &[1, 0, -1])]);
    }

    #[test]
    fn subspace_elements_over_prime_field() {
        let f3 = Field::prime(3).unwrap();
        let s = SubspaceBasis::span(f3, 2, vec![Vector::from_i64s(f3, &[1, 1])]);
        assert_eq!(s.elements().len(), 3);
    }
}
