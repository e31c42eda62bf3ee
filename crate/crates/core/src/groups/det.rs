//! Fraction-free (Bareiss) determinants over exact integral domains.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub trait ExactRing: Clone {
    fn ring_zero() -> Self;
    fn ring_one() -> Self;
    fn ring_is_zero(&self) -> bool;
    fn ring_mul(&self, other: &Self) -> Self;
    fn ring_sub(&self, other: &Self) -> Self;
    fn ring_neg(&self) -> Self;
    /// Division known to be exact.
    fn ring_exact_div(&self, other: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn ring_zero() -> Self {
        Zero::zero()
    }
    fn ring_one() -> Self {
        One::one()
    }
    fn ring_is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn ring_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn ring_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn ring_neg(&self) -> Self {
        -self
    }
    fn ring_exact_div(&self, other: &Self) -> Self {
        self / other
    }
}

/// Determinant of a square matrix by Bareiss elimination.
pub fn determinant<R: ExactRing>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::ring_one();
    }
    let mut sign_flip = false;
    let mut prev = R::ring_one();
    for k in 0..n - 1 {
        if m[k][k].ring_is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].ring_is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign_flip = !sign_flip;
                }
                None => return R::ring_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].ring_mul(&m[k][k]).ring_sub(&m[i][k].ring_mul(&m[k][j]));
                m[i][j] = v.ring_exact_div(&prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        d.ring_neg()
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(big(&[&[-2, 1], &[1, -2]])), BigInt::from(3));
        assert_eq!(determinant(big(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(determinant(big(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])), BigInt::from(-3));
        assert_eq!(determinant(big(&[&[1, 2], &[2, 4]])), BigInt::from(0));
        assert_eq!(determinant::<BigInt>(vec![]), BigInt::from(1));
    }
}
