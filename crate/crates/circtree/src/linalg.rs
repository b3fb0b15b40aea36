//! Fraction-free integer linear algebra.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Determinant by Bareiss fraction-free elimination. Consumes the matrix.
/// All intermediate divisions are exact, so no rational arithmetic appears.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (q, r) = num_integer::Integer::div_rem(&t, &prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Natural logarithm of |x| for a big integer, usable far beyond f64 range.
pub fn ln_abs_bigint(x: &BigInt) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 900 {
        return x
            .abs()
            .to_string()
            .parse::<f64>()
            .map(|v| v.ln())
            .unwrap_or(f64::INFINITY);
    }
    // keep the top 128 bits as mantissa
    let shift = bits - 128;
    let top: BigInt = x.abs() >> shift;
    let mantissa = top.to_string().parse::<f64>().unwrap_or(f64::INFINITY);
    mantissa.ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det_bareiss(mat(&[])), BigInt::from(1));
        assert_eq!(det_bareiss(mat(&[&[7]])), BigInt::from(7));
        assert_eq!(det_bareiss(mat(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(
            det_bareiss(mat(&[&[2, 0, 1], &[1, 1, 0], &[0, 3, 1]])),
            BigInt::from(5)
        );
    }

    #[test]
    fn det_needs_pivot_swap() {
        assert_eq!(det_bareiss(mat(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            det_bareiss(mat(&[&[0, 2, 1], &[0, 0, 3], &[4, 5, 6]])),
            BigInt::from(24)
        );
    }

    #[test]
    fn det_singular() {
        assert_eq!(
            det_bareiss(mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])),
            BigInt::from(0)
        );
    }

    #[test]
    fn ln_abs_matches_f64_for_moderate_values() {
        let x = BigInt::from(12345678u64);
        assert!((ln_abs_bigint(&x) - (12345678f64).ln()).abs() < 1e-12);
        let big = BigInt::from(10u32).pow(500);
        assert!((ln_abs_bigint(&big) - 500.0 * 10f64.ln()).abs() < 1e-6);
    }
}
