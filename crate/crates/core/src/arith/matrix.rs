use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ArithError, Int, Rat};

/// Dense row-major matrix. Empty (0x0, 0xn, nx0) matrices are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<Int>;
pub type RatMatrix = Matrix<Rat>;

/// Ring operations needed by the generic matrix routines.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, ArithError> {
        if data.len() != rows * cols {
            return Err(ArithError::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, ArithError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != c) {
            return Err(ArithError::DimensionMismatch(format!(
                "row {i} has {} entries, expected {c}",
                row.len()
            )));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub(crate) fn require_square(&self) -> Result<(), ArithError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(ArithError::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        self.row_iter().map(<[T]>::to_vec).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, ArithError> {
        self.same_shape(other)?;
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + other[(i, j)].clone()
        }))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, ArithError> {
        self.same_shape(other)?;
        Ok(Matrix::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        }))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithError> {
        if self.cols != other.rows {
            return Err(ArithError::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product: the block matrix whose (i, j) block is `self[i][j] * other`.
    pub fn kronecker(&self, other: &Self) -> Self {
        let (r2, c2) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * r2, self.cols * c2, |i, j| {
            self[(i / r2, j / c2)].clone() * other[(i % r2, j % c2)].clone()
        })
    }

    /// Orthogonal (block diagonal) sum.
    pub fn block_diag(&self, other: &Self) -> Self {
        let (r, c) = (self.rows, self.cols);
        Matrix::from_fn(r + other.rows, c + other.cols, |i, j| match (i < r, j < c) {
            (true, true) => self[(i, j)].clone(),
            (false, false) => other[(i - r, j - c)].clone(),
            _ => T::zero(),
        })
    }

    /// Bilinear form value `x^T M y`.
    pub fn bilinear(&self, x: &[T], y: &[T]) -> T {
        let mut acc = T::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    acc = acc + xi.clone() * self[(i, j)].clone() * yj.clone();
                }
            }
        }
        acc
    }

    fn same_shape(&self, other: &Self) -> Result<(), ArithError> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(ArithError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )))
        }
    }
}

impl IntMatrix {
    pub fn from_i64<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self, ArithError> {
        Matrix::from_rows(
            rows.iter().map(|r| r.as_ref().iter().map(|&v| Int::from(v)).collect()).collect(),
        )
    }

    /// Exact determinant by fraction-free (Bareiss) elimination. `det` of 0x0 is 1.
    pub fn det(&self) -> Result<Int, ArithError> {
        self.require_square()?;
        let n = self.rows;
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(p) => {
                        m.swap_rows(k, p);
                        sign = -sign;
                    }
                    None => return Ok(Int::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                    m[(i, j)] = v / &prev;
                }
            }
            prev = m[(k, k)].clone();
        }
        Ok(if n == 0 { sign } else { sign * prev })
    }

    pub fn to_rat(&self) -> RatMatrix {
        self.map(|v| Rat::from_integer(v.clone()))
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.to_rat().rank()
    }

    pub fn max_abs(&self) -> Int {
        self.data.iter().map(Signed::abs).max().unwrap_or_else(Int::zero)
    }
}

impl RatMatrix {
    pub fn det(&self) -> Result<Rat, ArithError> {
        self.require_square()?;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !m[(i, k)].is_zero()) else {
                return Ok(Rat::zero());
            };
            if p != k {
                m.swap_rows(k, p);
                det = -det;
            }
            let pivot = m[(k, k)].clone();
            det *= &pivot;
            for i in k + 1..n {
                if m[(i, k)].is_zero() {
                    continue;
                }
                let f = &m[(i, k)] / &pivot;
                for j in k..n {
                    let v = &m[(i, j)] - &f * &m[(k, j)];
                    m[(i, j)] = v;
                }
            }
        }
        Ok(det)
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<RatMatrix, ArithError> {
        self.require_square()?;
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = RatMatrix::identity(n);
        for k in 0..n {
            let p = (k..n).find(|&i| !m[(i, k)].is_zero()).ok_or(ArithError::Singular)?;
            m.swap_rows(k, p);
            inv.swap_rows(k, p);
            let pivot = m[(k, k)].recip();
            if !pivot.is_one() {
                for j in 0..n {
                    m[(k, j)] = &m[(k, j)] * &pivot;
                    inv[(k, j)] = &inv[(k, j)] * &pivot;
                }
            }
            let m_cols: Vec<usize> = (0..n).filter(|&j| !m[(k, j)].is_zero()).collect();
            let inv_cols: Vec<usize> = (0..n).filter(|&j| !inv[(k, j)].is_zero()).collect();
            for i in 0..n {
                if i == k || m[(i, k)].is_zero() {
                    continue;
                }
                let f = m[(i, k)].clone();
                for &j in &m_cols {
                    let a = &m[(i, j)] - &f * &m[(k, j)];
                    m[(i, j)] = a;
                }
                for &j in &inv_cols {
                    let b = &inv[(i, j)] - &f * &inv[(k, j)];
                    inv[(i, j)] = b;
                }
            }
        }
        Ok(inv)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            let pivot = m[(rank, col)].clone();
            for i in rank + 1..m.rows {
                if m[(i, col)].is_zero() {
                    continue;
                }
                let f = &m[(i, col)] / &pivot;
                for j in col..m.cols {
                    let v = &m[(i, j)] - &f * &m[(rank, j)];
                    m[(i, j)] = v;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Integer matrix if every entry is integral.
    pub fn to_int(&self) -> Option<IntMatrix> {
        if self.data.iter().all(Rat::is_integer) {
            Some(self.map(|v| v.to_integer()))
        } else {
            None
        }
    }

    /// Least common multiple of all denominators.
    pub fn common_denominator(&self) -> Int {
        self.data.iter().fold(Int::one(), |acc, v| acc.lcm(v.denom()))
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    /// Rows separated by `; `, entries by spaces: `[1 0; -1 1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}{}", self.rows, self.cols, self)
    }
}
