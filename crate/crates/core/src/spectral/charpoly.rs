use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{IntPolynomial, SpectralError};
use crate::matrix::IntMatrix;

type BigMat = Vec<Vec<BigInt>>;

fn big_mul(a: &BigMat, b: &BigMat) -> BigMat {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// `det(xI - M)` by the Faddeev-LeVerrier recursion. Every division by `k`
/// is exact over the integers, so the computation never leaves ℤ.
pub fn char_poly(matrix: &IntMatrix) -> Result<IntPolynomial, SpectralError> {
    if !matrix.is_square() {
        return Err(SpectralError::NotSquare {
            rows: matrix.rows(),
            cols: matrix.cols(),
        });
    }
    let n = matrix.rows();
    let a: BigMat = (0..n)
        .map(|i| matrix.row(i).iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: BigMat = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = big_mul(&a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        let am = big_mul(&a, &next);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = -q;
        m = next;
    }
    Ok(IntPolynomial::new(coeffs))
}
