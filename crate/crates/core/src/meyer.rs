//! Meyer's signature cocycle on Sp(2h, Z), evaluated by exact rational
//! linear algebra.
//!
//! For A, B in Sp(2h, Z) the cocycle value is the signature of a
//! symmetric bilinear form on the subspace
//!
//! ```text
//! V_{A,B} = { (x, y) in Q^2h + Q^2h : (A^-1 - I) x + (B - I) y = 0 }
//! ```
//!
//! with pairing `Phi((x1,y1),(x2,y2)) = (x1 + y1)^T J (I - B) y2`. The
//! pairing is symmetric on V; an exact assertion guards this before the
//! Gram matrix is symmetrized, so a convention bug upstream surfaces as
//! an error instead of a silently wrong signature. There is no numeric
//! tolerance anywhere in this module: the value is an integer computed
//! over arbitrary-precision rationals.


use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::mat::Mat;
use crate::sympl::{IntersectionForm, SymplecticMatrix};
use crate::RatMat;

/// Symmetric rational Gram matrix of the Meyer pairing restricted to a
/// basis of V_{A,B}.
#[derive(Debug, Clone)]
pub struct SymmetricForm {
    gram: RatMat,
}

impl SymmetricForm {
    pub fn new(gram: RatMat) -> Result<Self> {
        if gram != gram.transpose() {
            return Err(Error::ConventionViolation(
                "gram matrix is not symmetric".into(),
            ));
        }
        Ok(SymmetricForm { gram })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &RatMat {
        &self.gram
    }
}

/// Rational basis of `V_{A,B}`; always has dimension >= 2h.
pub fn kernel_space(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Vec<Vec<BigRational>> {
    assert_eq!(a.genus(), b.genus(), "genus mismatch");
    let n = 2 * a.genus();
    let ai = a.inverse().to_rational();
    let br = b.to_rational();
    let id: RatMat = Mat::identity(n);
    let left = ai.sub(&id);
    let right = br.sub(&id);
    // rows of the n x 2n system [ A^-1 - I | B - I ]
    let system = Mat::from_fn(n, 2 * n, |i, j| {
        if j < n {
            left[(i, j)].clone()
        } else {
            right[(i, j - n)].clone()
        }
    });
    // scale each basis vector to a primitive integer vector; the form
    // signature is congruence-invariant, and integral entries keep the
    // rational arithmetic downstream cheap
    system.nullspace().into_iter().map(integerize).collect()
}

fn integerize(v: Vec<BigRational>) -> Vec<BigRational> {
    use num_traits::One;
    let mut scale = BigInt::one();
    for x in &v {
        scale = num_integer::lcm(scale, x.denom().clone());
    }
    let mut content = BigInt::zero();
    let scaled: Vec<BigInt> = v
        .iter()
        .map(|x| {
            let n = x.numer() * (&scale / x.denom());
            content = num_integer::gcd(content.clone(), n.clone());
            n
        })
        .collect();
    if content.is_zero() {
        return v;
    }
    scaled
        .into_iter()
        .map(|n| BigRational::from_integer(n / &content))
        .collect()
}

/// Gram matrix of the Meyer pairing on the given basis of `V_{A,B}`.
///
/// Fails with `ConventionViolation` if the raw pairing has a nonzero
/// antisymmetric part on V, which cannot happen for genuine symplectic
/// input under the shipped kernel construction.
pub fn meyer_form(
    b: &SymplecticMatrix,
    basis: &[Vec<BigRational>],
) -> Result<SymmetricForm> {
    let n = 2 * b.genus();
    let j = IntersectionForm::new(b.genus());
    let jr = j.matrix().map(|x| BigRational::from_integer(x.clone()));
    let id: RatMat = Mat::identity(n);
    let weight = jr.mul(&id.sub(&b.to_rational()));
    let d = basis.len();
    // row vectors w_i = (x_i + y_i)^T J (I - B), so that the Gram entry
    // is the single contraction w_i . y_j
    let rows: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|v| {
            let (x, y) = v.split_at(n);
            (0..n)
                .map(|q| {
                    let mut acc = BigRational::zero();
                    for p in 0..n {
                        if weight[(p, q)].is_zero() {
                            continue;
                        }
                        let s = &x[p] + &y[p];
                        if !s.is_zero() {
                            acc += s * &weight[(p, q)];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let raw = Mat::from_fn(d, d, |r, c| {
        let y2 = &basis[c][n..];
        rows[r]
            .iter()
            .zip(y2)
            .filter(|(w, y)| !w.is_zero() && !y.is_zero())
            .fold(BigRational::zero(), |acc, (w, y)| acc + w * y)
    });
    if raw != raw.transpose() {
        return Err(Error::ConventionViolation(
            "Meyer pairing is not symmetric on V_{A,B}".into(),
        ));
    }
    SymmetricForm::new(raw)
}

/// Signature of a possibly degenerate symmetric rational form, by
/// recursive symmetric Gaussian reduction. A nonzero diagonal pivot
/// contributes its sign; an all-zero diagonal with a nonzero
/// off-diagonal entry splits off a hyperbolic block contributing 0.
pub fn form_signature(form: &SymmetricForm) -> i64 {
    signature_rec(form.gram().clone())
}

fn signature_rec(g: RatMat) -> i64 {
    let n = g.rows();
    if n == 0 {
        return 0;
    }
    if let Some(p) = (0..n).find(|&i| !g[(i, i)].is_zero()) {
        let d = g[(p, p)].clone();
        let sgn = if d.is_positive() { 1 } else { -1 };
        let rest: Vec<usize> = (0..n).filter(|&i| i != p).collect();
        let sub = Mat::from_fn(n - 1, n - 1, |i, j| {
            let (ri, rj) = (rest[i], rest[j]);
            &g[(ri, rj)] - &(&g[(ri, p)] * &g[(p, rj)]) / &d
        });
        return sgn + signature_rec(sub);
    }
    // zero diagonal: hunt for an off-diagonal entry
    let mut hy = None;
    'outer: for i in 0..n {
        for j in i + 1..n {
            if !g[(i, j)].is_zero() {
                hy = Some((i, j));
                break 'outer;
            }
        }
    }
    let Some((i0, j0)) = hy else {
        return 0; // zero matrix
    };
    let b = g[(i0, j0)].clone();
    let rest: Vec<usize> = (0..n).filter(|&i| i != i0 && i != j0).collect();
    // split off the hyperbolic plane spanned by e_i0, e_j0 (signature 0)
    let sub = Mat::from_fn(n - 2, n - 2, |i, j| {
        let (ri, rj) = (rest[i], rest[j]);
        &g[(ri, rj)] - &(&g[(ri, i0)] * &g[(j0, rj)]) / &b - &(&g[(ri, j0)] * &g[(i0, rj)]) / &b
    });
    signature_rec(sub)
}

/// Meyer cocycle value `tau_h(A, B)`; an integer with |tau| <= 2h.
pub fn tau(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<i64> {
    let basis = kernel_space(a, b);
    let form = meyer_form(b, &basis)?;
    Ok(form_signature(&form))
}
