//! Exact arithmetic in Sp(2h, Z).
//!
//! The homology of the reference fiber carries the standard symplectic
//! form over the ordered basis (x1, y1, ..., xh, yh); Dehn twists act as
//! transvections. Everything here is arbitrary-precision integer
//! arithmetic: entries of long products grow and are never truncated.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::mat::Mat;
use crate::{IntMat, RatMat};

/// Sign convention for the transvection of a right-handed Dehn twist.
///
/// Both choices land in Sp(2h, Z); which one matches the composition
/// conventions of a given monodromy calculus is settled by calibration
/// against known signatures, and the calibrated choice is recorded in
/// every report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TwistSign {
    /// `T_c = I + c c^T J`
    Plus,
    /// `T_c = I - c c^T J`
    Minus,
}

impl TwistSign {
    pub fn flipped(self) -> TwistSign {
        match self {
            TwistSign::Plus => TwistSign::Minus,
            TwistSign::Minus => TwistSign::Plus,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TwistSign::Plus => "plus",
            TwistSign::Minus => "minus",
        }
    }
}

/// The intersection form of the closed genus-h surface: block diagonal
/// J with h blocks [[0,1],[-1,0]].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    h: usize,
    j: IntMat,
}

impl IntersectionForm {
    pub fn new(h: usize) -> Self {
        assert!(h >= 1, "genus must be positive");
        let mut j = Mat::zero(2 * h, 2 * h);
        for i in 0..h {
            j[(2 * i, 2 * i + 1)] = BigInt::one();
            j[(2 * i + 1, 2 * i)] = -BigInt::one();
        }
        IntersectionForm { h, j }
    }

    pub fn genus(&self) -> usize {
        self.h
    }

    pub fn dim(&self) -> usize {
        2 * self.h
    }

    pub fn matrix(&self) -> &IntMat {
        &self.j
    }

    /// Algebraic intersection number `<u, v> = u^T J v`.
    pub fn pairing(&self, u: &HomologyVector, v: &HomologyVector) -> Result<BigInt, Error> {
        if u.len() != self.dim() || v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: if u.len() != self.dim() { u.len() } else { v.len() },
            });
        }
        let jv = self.j.mul_vec(v.coords());
        Ok(u.coords()
            .iter()
            .zip(&jv)
            .fold(BigInt::zero(), |acc, (a, b)| acc + a * b))
    }
}

/// Homology class of a curve on the reference fiber, in the fixed basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomologyVector(Vec<BigInt>);

impl HomologyVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        HomologyVector(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        HomologyVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        HomologyVector(vec![BigInt::zero(); dim])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// gcd of the entries is 1; zero vectors are not primitive.
    pub fn is_primitive(&self) -> bool {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = num_integer::gcd(g, c.abs());
        }
        g.is_one()
    }

    /// Zero-pad to the homology of a larger-genus surface.
    pub fn stabilized(&self, dim: usize) -> Self {
        assert!(dim >= self.len());
        let mut v = self.0.clone();
        v.resize(dim, BigInt::zero());
        HomologyVector(v)
    }

    /// Same unoriented class: equal up to global sign.
    pub fn same_class(&self, other: &HomologyVector) -> bool {
        self == other || self.0.iter().zip(&other.0).all(|(a, b)| *a == -b)
    }
}

/// Element of Sp(2h, Z).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticMatrix {
    h: usize,
    m: IntMat,
}

impl SymplecticMatrix {
    /// Validating constructor; rejects non-symplectic input.
    pub fn try_new(m: IntMat) -> Result<Self, Error> {
        if !m.is_square() || m.rows() % 2 != 0 || m.rows() == 0 {
            return Err(Error::NotSymplectic(
                "matrix must be square of even positive dimension".into(),
            ));
        }
        let h = m.rows() / 2;
        if !is_symplectic(&m, &IntersectionForm::new(h)) {
            return Err(Error::NotSymplectic(format!(
                "M^T J M != J for the 2h x 2h matrix (h = {h})"
            )));
        }
        Ok(SymplecticMatrix { h, m })
    }

    pub fn identity(h: usize) -> Self {
        SymplecticMatrix {
            h,
            m: Mat::identity(2 * h),
        }
    }

    pub fn genus(&self) -> usize {
        self.h
    }

    pub fn matrix(&self) -> &IntMat {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity()
    }

    pub fn mul(&self, other: &SymplecticMatrix) -> SymplecticMatrix {
        assert_eq!(self.h, other.h, "genus mismatch");
        SymplecticMatrix {
            h: self.h,
            m: self.m.mul(&other.m),
        }
    }

    /// Exact inverse via J: for symplectic M, M^-1 = J^-1 M^T J = -J M^T J.
    pub fn inverse(&self) -> SymplecticMatrix {
        let j = IntersectionForm::new(self.h);
        let jm = j.matrix();
        let inv = jm.neg().mul(&self.m.transpose()).mul(jm);
        SymplecticMatrix { h: self.h, m: inv }
    }

    pub fn pow(&self, e: i64) -> SymplecticMatrix {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = SymplecticMatrix::identity(self.h);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn apply(&self, v: &HomologyVector) -> HomologyVector {
        HomologyVector::new(self.m.mul_vec(v.coords()))
    }

    /// Embed into Sp(2h', Z) acting as the identity on the added block.
    pub fn stabilized(&self, h_new: usize) -> SymplecticMatrix {
        assert!(h_new >= self.h);
        let n = 2 * self.h;
        let m = Mat::from_fn(2 * h_new, 2 * h_new, |i, j| {
            if i < n && j < n {
                self.m[(i, j)].clone()
            } else if i == j {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        });
        SymplecticMatrix { h: h_new, m }
    }

    pub fn to_rational(&self) -> RatMat {
        self.m.map(|x| BigRational::from_integer(x.clone()))
    }
}

/// `M^T J M == J`, exactly.
pub fn is_symplectic(m: &IntMat, j: &IntersectionForm) -> bool {
    if !m.is_square() || m.rows() != j.dim() {
        return false;
    }
    m.transpose().mul(j.matrix()).mul(m) == *j.matrix()
}

/// The transvection `T_c^power` along the class c. `T_c = I +/- c c^T J`
/// per the sign convention; a zero class (separating curve) gives the
/// identity for every power.
pub fn transvection(
    c: &HomologyVector,
    power: i64,
    j: &IntersectionForm,
    sign: TwistSign,
) -> Result<SymplecticMatrix, Error> {
    if c.len() != j.dim() {
        return Err(Error::DimensionMismatch {
            expected: j.dim(),
            got: c.len(),
        });
    }
    let s = match sign {
        TwistSign::Plus => BigInt::from(power),
        TwistSign::Minus => BigInt::from(-power),
    };
    // (c c^T J) is nilpotent of square zero since <c,c> = 0, so
    // T_c^power = I + power * (+/- c c^T J).
    let n = j.dim();
    let jc: Vec<BigInt> = (0..n)
        .map(|col| {
            (0..n).fold(BigInt::zero(), |acc, k| {
                acc + c.coords()[k].clone() * j.matrix()[(k, col)].clone()
            })
        })
        .collect();
    let m = Mat::from_fn(n, n, |i, jx| {
        let mut e = if i == jx { BigInt::one() } else { BigInt::zero() };
        e += &s * &c.coords()[i] * &jc[jx];
        e
    });
    Ok(SymplecticMatrix { h: j.genus(), m })
}

/// Product in word order: leftmost factor is the leftmost matrix.
pub fn product(ms: &[SymplecticMatrix], h: usize) -> SymplecticMatrix {
    ms.iter()
        .fold(SymplecticMatrix::identity(h), |acc, m| acc.mul(m))
}

/// `[A, B] = A B A^-1 B^-1`.
pub fn commutator(a: &SymplecticMatrix, b: &SymplecticMatrix) -> SymplecticMatrix {
    a.mul(b).mul(&a.inverse()).mul(&b.inverse())
}
