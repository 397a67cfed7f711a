//! Exact dense linear algebra over ℚ and prime fields 𝔽_p.
//!
//! Scalars are [`BigRational`] values. Over 𝔽_p they are kept as integers in
//! `[0, p)`; every operation goes through a [`FieldSpec`] so that the
//! canonical form is restored after each step.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Scalar = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    BadScalar(String),
    #[error("vectors are linearly dependent")]
    Dependent,
}

/// The ground field: ℚ or 𝔽_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, LinAlgError> {
        if is_prime(p) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(LinAlgError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.normalize(Scalar::from_integer(BigInt::from(n)))
    }

    /// Brings an arbitrary rational into canonical form for this field.
    ///
    /// Panics over 𝔽_p if the denominator is divisible by p.
    pub fn normalize(&self, x: Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => x,
            FieldSpec::Prime(p) => {
                if x.is_integer() && !x.is_negative() && x.numer() < &BigInt::from(*p) {
                    return x;
                }
                let p = BigInt::from(*p);
                let num = x.numer().mod_floor(&p);
                let den = x.denom().mod_floor(&p);
                assert!(!den.is_zero(), "denominator vanishes modulo {p}");
                let inv = mod_inverse(&den, &p);
                Scalar::from_integer((num * inv).mod_floor(&p))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        self.reduce_int(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if b.is_zero() {
            return a.clone();
        }
        self.reduce_int(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() || b.is_zero() {
            return Scalar::zero();
        }
        if a.is_one() {
            return b.clone();
        }
        if b.is_one() {
            return a.clone();
        }
        self.reduce_int(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.reduce_int(-a)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            FieldSpec::Rationals => Some(a.recip()),
            FieldSpec::Prime(p) => {
                let p = BigInt::from(*p);
                Some(Scalar::from_integer(mod_inverse(a.numer(), &p)))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Option<Scalar> {
        self.inv(b).map(|ib| self.mul(a, &ib))
    }

    /// `acc += a * b`, the inner loop of elimination.
    pub fn add_mul_assign(&self, acc: &mut Scalar, a: &Scalar, b: &Scalar) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let prod = a * b;
        *acc = self.reduce_int(&*acc + prod);
    }

    /// Parses `"3"`, `"-1"`, `"2/3"` exactly.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar, LinAlgError> {
        let t = s.trim();
        let bad = || LinAlgError::BadScalar(s.to_string());
        let value = match t.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Scalar::new(n, d)
            }
            None => Scalar::from_integer(t.parse::<BigInt>().map_err(|_| bad())?),
        };
        if let FieldSpec::Prime(p) = self {
            if (value.denom() % BigInt::from(*p)).is_zero() {
                return Err(bad());
            }
        }
        Ok(self.normalize(value))
    }

    /// Integer representative used to enumerate 𝔽_p.
    pub fn element(&self, k: u64) -> Scalar {
        self.normalize(Scalar::from_integer(BigInt::from(k)))
    }

    fn reduce_int(&self, x: Scalar) -> Scalar {
        match self {
            FieldSpec::Rationals => x,
            FieldSpec::Prime(_) => self.normalize(x),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let e = a.extended_gcd(p);
    assert!(e.gcd.is_one(), "{a} is not invertible modulo {p}");
    e.x.mod_floor(p)
}

/// Formats a scalar the way the report prints it (`"3"`, `"-2/5"`).
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn scalar_to_i64(x: &Scalar) -> Option<i64> {
    if x.is_integer() {
        x.numer().to_i64()
    } else {
        None
    }
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Dense row-major matrix over a [`FieldSpec`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Result of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self, LinAlgError> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(field, rows, cols)
    }

    /// Like [`Matrix::from_rows`] but keeps the column count when there are no rows.
    pub fn from_rows_with_cols(
        field: FieldSpec,
        rows: Vec<Vec<Scalar>>,
        cols: usize,
    ) -> Result<Self, LinAlgError> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinAlgError::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r.into_iter().map(|x| field.normalize(x)));
        }
        Ok(Matrix { field, rows: n, cols, data })
    }

    pub fn from_i64_rows(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let v = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Self::from_rows_with_cols(field, v, cols).expect("ragged rows")
    }

    pub fn from_columns(field: FieldSpec, rows: usize, cols: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = self.field.normalize(x);
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let x = self.get(r, c);
                if !x.is_zero() {
                    t.data[c * self.rows + r] = x.clone();
                }
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    f.add_mul_assign(&mut out.data[idx], a, b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    f.add_mul_assign(&mut acc, a, b);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.add(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Matrix { field: f, rows: self.rows, cols: self.cols, data }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Scalar, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        let f = self.field;
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            f.add_mul_assign(a, c, b);
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                m.data[i * cols.len() + j] = self.get(r, c).clone();
            }
        }
        m
    }

    /// Places `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.get(r, c).clone();
            }
        }
    }

    /// Reduced row echelon form, pivoting on the first nonzero entry of each column.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut rows: Vec<Vec<Scalar>> = self.to_rows();
        let pivot_cols = rref_in_place(f, &mut rows, self.cols);
        let rank = pivot_cols.len();
        let reduced = Matrix::from_rows_with_cols(f, rows, self.cols).expect("shape preserved");
        Rref { reduced, rank, pivot_cols }
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_rows();
        rref_in_place(self.field, &mut rows, self.cols).len()
    }

    /// Basis of the right null space. Each vector has a 1 in its own free
    /// column and 0 in the other free columns.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let f = self.field;
        let mut rows = self.to_rows();
        let pivots = rref_in_place(f, &mut rows, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &p) in pivots.iter().enumerate() {
                let x = &rows[r][free];
                if !x.is_zero() {
                    v[p] = f.neg(x);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Some `x` with `self · x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinAlgError> {
        if b.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let f = self.field;
        let mut rows: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(f.normalize(b[r].clone()));
                row
            })
            .collect();
        let pivots = rref_in_place(f, &mut rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = rows[r][self.cols].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let f = self.field;
        let mut rows: Vec<Vec<Scalar>> = (0..n)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.extend((0..n).map(|c| if c == r { Scalar::one() } else { Scalar::zero() }));
                row
            })
            .collect();
        let pivots = rref_in_place(f, &mut rows, 2 * n);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let inv = rows.into_iter().map(|r| r[n..].to_vec()).collect();
        Some(Matrix::from_rows_with_cols(f, inv, n).expect("square"))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(format_scalar).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Row reduces `rows` (each of length `cols`) in place and returns the pivot
/// columns. Zero rows end up at the bottom.
pub(crate) fn rref_in_place(f: FieldSpec, rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]).expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = f.mul(x, &inv);
                }
            }
        }
        let support: Vec<usize> = (c..cols).filter(|&j| !rows[r][j].is_zero()).collect();
        let (before, rest) = rows.split_at_mut(r);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row");
        for other in before.iter_mut().chain(after.iter_mut()) {
            if other[c].is_zero() {
                continue;
            }
            let factor = other[c].clone();
            for &j in &support {
                let prod = f.mul(&factor, &pivot_row[j]);
                other[j] = f.sub(&other[j], &prod);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A subspace of `F^n`, stored as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit_vector(ambient, i)).collect();
        Subspace { field, ambient, basis, pivots: (0..ambient).collect() }
    }

    pub fn from_spanning(field: FieldSpec, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let mut rows: Vec<Vec<Scalar>> = vectors
            .into_iter()
            .filter(|v| !is_zero_vec(v))
            .inspect(|v| assert_eq!(v.len(), ambient, "vector of wrong length"))
            .collect();
        let pivots = rref_in_place(field, &mut rows, ambient);
        rows.truncate(pivots.len());
        Subspace { field, ambient, basis: rows, pivots }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of `v` modulo the subspace (zero on pivot columns).
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    let prod = f.mul(&c, x);
                    *o = f.sub(o, &prod);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut recon = vec![Scalar::zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            for (o, x) in recon.iter_mut().zip(row) {
                self.field.add_mul_assign(o, c, x);
            }
        }
        (recon == v).then_some(coords)
    }

    /// Indices of the standard basis vectors that span a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Subspace::from_spanning(self.field, self.ambient, v)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.field, self.ambient);
        }
        // x = Σ a_i u_i = Σ b_j w_j: solve [U | -W] (a, b) = 0.
        let f = self.field;
        let k = self.dim();
        let cols: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .cloned()
            .chain(other.basis.iter().map(|w| w.iter().map(|x| f.neg(x)).collect()))
            .collect();
        let m = Matrix::from_columns(f, self.ambient, &cols);
        let vectors = m
            .kernel_basis()
            .into_iter()
            .map(|sol| {
                let mut x = vec![Scalar::zero(); self.ambient];
                for (a, u) in sol[..k].iter().zip(&self.basis) {
                    for (o, y) in x.iter_mut().zip(u) {
                        f.add_mul_assign(o, a, y);
                    }
                }
                x
            })
            .collect();
        Subspace::from_spanning(f, self.ambient, vectors)
    }

    /// Adds `v` to the subspace; returns false if it was already contained.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let f = self.field;
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("nonzero");
        for x in r.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for row in self.basis.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (o, x) in row.iter_mut().zip(&r) {
                if !x.is_zero() {
                    let prod = f.mul(&c, x);
                    *o = f.sub(o, &prod);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, r);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// Coordinates with respect to a fixed list of independent vectors.
#[derive(Clone, Debug)]
pub struct CoordinateMap {
    rows: Vec<usize>,
    inverse: Matrix,
    basis: Vec<Vec<Scalar>>,
}

impl CoordinateMap {
    pub fn new(field: FieldSpec, ambient: usize, basis: Vec<Vec<Scalar>>) -> Result<Self, LinAlgError> {
        let k = basis.len();
        if k == 0 {
            return Ok(CoordinateMap { rows: Vec::new(), inverse: Matrix::zeros(field, 0, 0), basis });
        }
        let bt = Matrix::from_rows_with_cols(field, basis.clone(), ambient)?;
        let r = bt.rref();
        if r.rank < k {
            return Err(LinAlgError::Dependent);
        }
        let rows = r.pivot_cols;
        let b = Matrix::from_columns(field, ambient, &basis);
        let inverse = b.submatrix(&rows, &(0..k).collect::<Vec<_>>()).inverse().ok_or(LinAlgError::Dependent)?;
        Ok(CoordinateMap { rows, inverse, basis })
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Coordinates of `v`; the caller guarantees `v` is in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Vec<Scalar> {
        let picked: Vec<Scalar> = self.rows.iter().map(|&r| v[r].clone()).collect();
        self.inverse.mul_vec(&picked)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn q(n: i64) -> Scalar {
        Q.from_i64(n)
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = Matrix::identity(Q, 2);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivot_cols, vec![0, 1]);

        let z = Matrix::zeros(Q, 2, 2);
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert_eq!(r.rank, 0);
        assert!(r.pivot_cols.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64_rows(Q, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.reduced, Matrix::from_i64_rows(Q, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_cols, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert!(Matrix::identity(Q, 3).kernel_basis().is_empty());
        let f2 = FieldSpec::prime(2).unwrap();
        let m = Matrix::from_i64_rows(f2, &[&[1, 1]]);
        assert_eq!(m.kernel_basis(), vec![vec![f2.from_i64(1), f2.from_i64(1)]]);
        let k = Matrix::zeros(Q, 2, 2).kernel_basis();
        assert_eq!(k.len(), 2);
        assert_eq!(Subspace::from_spanning(Q, 2, k).dim(), 2);
    }

    #[test]
    fn solve_examples() {
        let b = vec![q(3), q(-4)];
        assert_eq!(Matrix::identity(Q, 2).solve(&b).unwrap(), Some(b.clone()));

        let a = Matrix::from_i64_rows(Q, &[&[1, 1]]);
        let x = a.solve(&[q(1)]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x), vec![q(1)]);

        let z = Matrix::from_i64_rows(Q, &[&[0, 0]]);
        assert_eq!(z.solve(&[q(1)]).unwrap(), None);

        assert!(matches!(a.solve(&[q(1), q(2)]), Err(LinAlgError::DimensionMismatch { .. })));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = FieldSpec::prime(5).unwrap();
        assert_eq!(f5.parse_scalar("-1").unwrap(), f5.from_i64(4));
        assert_eq!(f5.parse_scalar("1/2").unwrap(), f5.from_i64(3));
        assert_eq!(f5.inv(&f5.from_i64(2)).unwrap(), f5.from_i64(3));
        assert!(f5.parse_scalar("1/5").is_err());
        assert!(FieldSpec::prime(6).is_err());
        assert_eq!(Q.parse_scalar(" 2/3 ").unwrap(), Scalar::new(2.into(), 3.into()));
        assert!(Q.parse_scalar("x").is_err());
    }

    #[test]
    fn inverse_and_coordinates() {
        let m = Matrix::from_i64_rows(Q, &[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Q, 2));
        assert!(Matrix::from_i64_rows(Q, &[&[1, 2], &[2, 4]]).inverse().is_none());

        let basis = vec![vec![q(1), q(1), q(0)], vec![q(0), q(1), q(1)]];
        let cm = CoordinateMap::new(Q, 3, basis).unwrap();
        let v = vec![q(2), q(5), q(3)];
        assert_eq!(cm.coordinates(&v), vec![q(2), q(3)]);
    }

    #[test]
    fn subspace_operations() {
        let u = Subspace::from_spanning(Q, 3, vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]);
        let w = Subspace::from_spanning(Q, 3, vec![vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]]);
        assert_eq!(u.intersection(&w).dim(), 1);
        assert_eq!(u.sum(&w).dim(), 3);
        assert!(u.contains(&[q(3), q(-1), q(0)]));
        assert_eq!(u.coordinates(&[q(3), q(-1), q(0)]), Some(vec![q(3), q(-1)]));
        assert_eq!(u.coordinates(&[q(3), q(-1), q(1)]), None);
        assert_eq!(u.complement_indices(), vec![2]);

        let mut grown = Subspace::zero(Q, 3);
        assert!(grown.insert(&[q(0), q(2), q(1)]));
        assert!(grown.insert(&[q(1), q(1), q(0)]));
        assert!(!grown.insert(&[q(1), q(3), q(1)]));
        let direct = Subspace::from_spanning(Q, 3, vec![vec![q(0), q(2), q(1)], vec![q(1), q(1), q(0)]]);
        assert_eq!(grown, direct);
    }

    fn small_matrix(field: FieldSpec) -> impl Strategy<Value = Matrix> {
        (1usize..6, 1usize..6).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                let rows: Vec<Vec<Scalar>> =
                    v.chunks(c).map(|ch| ch.iter().map(|&x| field.from_i64(x)).collect()).collect();
                Matrix::from_rows(field, rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix(Q)) {
            let r = m.rref();
            prop_assert_eq!(r.reduced.rref().reduced, r.reduced.clone());
            prop_assert!(r.pivot_cols.windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn rank_nullity(m in small_matrix(Q)) {
            let k = m.kernel_basis();
            prop_assert_eq!(m.rank() + k.len(), m.cols());
            for v in &k {
                prop_assert!(is_zero_vec(&m.mul_vec(v)));
            }
        }

        #[test]
        fn prime_field_entries_are_canonical(m in small_matrix(FieldSpec::Prime(3))) {
            let p = BigInt::from(3);
            let r = m.rref();
            let k = m.kernel_basis();
            let entries = r.reduced.to_rows().into_iter().flatten().chain(k.into_iter().flatten());
            for x in entries {
                prop_assert!(x.is_integer() && !x.is_negative() && x.numer() < &p);
            }
        }

        #[test]
        fn solve_satisfies_system(m in small_matrix(Q), seed in proptest::collection::vec(-3i64..4, 6)) {
            let x0: Vec<Scalar> = (0..m.cols()).map(|i| Q.from_i64(seed[i % seed.len()])).collect();
            let b = m.mul_vec(&x0);
            let x = m.solve(&b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&x), b);
        }
    }
}
