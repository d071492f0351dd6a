//! Dense matrices over an exact scalar ring.
//!
//! The group arithmetic runs over [`num_bigint::BigInt`] and the cocycle
//! evaluation over [`num_rational::BigRational`]; both share this one
//! implementation through the [`Scalar`] / [`FieldScalar`] bounds. No
//! floating point instantiation exists anywhere in this crate: every
//! computed value is exact.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Exact ring scalar. Implemented by `BigInt`, `BigRational` and the
/// built-in integers.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// Scalar living in a field; unlocks elimination-based routines.
pub trait FieldScalar: Scalar + Div<Output = Self> {}
impl<T> FieldScalar for T where T: Scalar + Div<Output = T> {}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Mat::identity(self.rows)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() + other[(i, j)].clone()
        })
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        })
    }

    pub fn neg(&self) -> Self {
        Mat::from_fn(self.rows, self.cols, |i, j| -self[(i, j)].clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out: Mat<T> = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a.clone() * other[(k, j)].clone();
                    out[(i, j)] = out[(i, j)].clone() + t;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Entrywise map, used for scalar-type conversions.
    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat::from_fn(self.rows, self.cols, |i, j| f(&self[(i, j)]))
    }
}

impl<T: FieldScalar> Mat<T> {
    /// Inverse by Gauss-Jordan elimination. Returns `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv: Mat<T> = Mat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                a.swap_rows(col, pivot);
                inv.swap_rows(col, pivot);
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = a[(col, j)].clone() / p.clone();
                inv[(col, j)] = inv[(col, j)].clone() / p.clone();
            }
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    for j in 0..n {
                        let t = f.clone() * a[(col, j)].clone();
                        a[(r, j)] = a[(r, j)].clone() - t;
                        let t = f.clone() * inv[(col, j)].clone();
                        inv[(r, j)] = inv[(r, j)].clone() - t;
                    }
                }
            }
        }
        Some(inv)
    }

    /// Basis of the right kernel `{ v : M v = 0 }`.
    pub fn nullspace(&self) -> Vec<Vec<T>> {
        let (nr, nc) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut pivots: Vec<usize> = Vec::new();
        let mut r = 0;
        for c in 0..nc {
            if r == nr {
                break;
            }
            let Some(pivot) = (r..nr).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(r, pivot);
            let p = a[(r, c)].clone();
            for j in 0..nc {
                a[(r, j)] = a[(r, j)].clone() / p.clone();
            }
            for i in 0..nr {
                if i != r && !a[(i, c)].is_zero() {
                    let f = a[(i, c)].clone();
                    for j in 0..nc {
                        if a[(r, j)].is_zero() {
                            continue;
                        }
                        let t = f.clone() * a[(r, j)].clone();
                        a[(i, j)] = a[(i, j)].clone() - t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut basis = Vec::new();
        for free in (0..nc).filter(|c| !pivots.contains(c)) {
            let mut v = vec![T::zero(); nc];
            v[free] = T::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[(i, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Mat<T> {
    /// Rows separated by `;`, entries by `,` -- the CLI text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ";")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn rat(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    #[test]
    fn product_and_identity() {
        let a = Mat::from_rows(vec![vec![bi(1), bi(2)], vec![bi(3), bi(4)]]);
        let i = Mat::identity(2);
        assert_eq!(a.mul(&i), a);
        assert_eq!(i.mul(&a), a);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = Mat::from_rows(vec![
            vec![rat(2), rat(1), rat(0)],
            vec![rat(1), rat(1), rat(1)],
            vec![rat(0), rat(3), rat(1)],
        ]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
    }

    #[test]
    fn singular_has_no_inverse() {
        let a = Mat::from_rows(vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]]);
        assert!(a.inverse().is_none());
    }

    #[test]
    fn nullspace_of_rank_one() {
        let a = Mat::from_rows(vec![vec![rat(1), rat(2), rat(3)]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            let image = a.mul_vec(&v);
            assert!(image.iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn display_matrix_format() {
        let a = Mat::from_rows(vec![vec![bi(1), bi(-1)], vec![bi(0), bi(1)]]);
        assert_eq!(a.to_string(), "1,-1;0,1");
    }
}
