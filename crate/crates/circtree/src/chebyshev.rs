//! Chebyshev polynomials of the first kind, exact and symbolic forms.

use num_rational::BigRational;
use num_traits::One;

use crate::poly::IntPoly;

/// T_n(x) at an exact rational point, by the three-term recurrence
/// T₀ = 1, T₁ = x, T_{m+1} = 2x·T_m − T_{m−1}.
pub fn chebyshev_t(n: usize, x: &BigRational) -> BigRational {
    match n {
        0 => BigRational::one(),
        1 => x.clone(),
        _ => {
            let two_x = x + x;
            let mut prev = BigRational::one();
            let mut cur = x.clone();
            for _ in 2..=n {
                let next = &two_x * &cur - &prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// T_n as an integer polynomial.
pub fn chebyshev_t_poly(n: usize) -> IntPoly {
    match n {
        0 => IntPoly::one(),
        1 => IntPoly::from_i64(&[0, 1]),
        _ => {
            let two_x = IntPoly::from_i64(&[0, 2]);
            let mut prev = IntPoly::one();
            let mut cur = IntPoly::from_i64(&[0, 1]);
            for _ in 2..=n {
                let next = &(&two_x * &cur) - &prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// T_n at a complex point via T_n(w) = (v^n + v^{−n})/2 with v = w + √(w²−1).
/// Numerically stable for the |w| ≥ 1 regions the τ cross-check visits.
pub fn chebyshev_t_complex(n: u64, w: num_complex::Complex64) -> num_complex::Complex64 {
    use num_complex::Complex64;
    let disc = (w * w - Complex64::new(1.0, 0.0)).sqrt();
    let mut v = w + disc;
    if v.norm() < 1.0 {
        v = w - disc;
    }
    let vn = v.powi(n as i32);
    (vn + vn.inv()) * 0.5
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn value_one_is_fixed_point() {
        for n in 0..=10 {
            assert_eq!(chebyshev_t(n, &q(1, 1)), q(1, 1));
        }
    }

    #[test]
    fn small_integer_values() {
        assert_eq!(chebyshev_t(3, &q(2, 1)), q(26, 1));
        assert_eq!(chebyshev_t(2, &q(2, 1)), q(7, 1));
        assert_eq!(chebyshev_t(4, &q(2, 1)), q(97, 1));
    }

    #[test]
    fn half_sum_identity_at_z_three() {
        // T₄(½(z+1/z)) = ½(z⁴+z⁻⁴) at z = 3: T₄(5/3) = ½(81 + 1/81) = 3281/81
        assert_eq!(chebyshev_t(4, &q(5, 3)), q(3281, 81));
    }

    #[test]
    fn half_sum_identity_random_rationals() {
        // T_n(½(z+1/z)) = ½(zⁿ+z⁻ⁿ) for rational z, n ≤ 12
        let cases = [q(3, 1), q(2, 5), q(-7, 2), q(1, 3), q(9, 4), q(-1, 6)];
        let half = q(1, 2);
        for z in &cases {
            let w = &half * &(z + &z.recip());
            for n in 0..=12usize {
                let zn = num_traits::pow::pow(z.clone(), n);
                let expected = &half * &(&zn + &zn.recip());
                assert_eq!(chebyshev_t(n, &w), expected, "z={z} n={n}");
            }
        }
    }

    #[test]
    fn poly_form_matches_pointwise() {
        for n in 0..=8usize {
            let p = chebyshev_t_poly(n);
            for x in [-3i64, -1, 0, 2, 5] {
                let at = p.eval(&BigInt::from(x));
                let via = chebyshev_t(n, &q(x, 1));
                assert_eq!(BigRational::from_integer(at), via);
            }
        }
    }
}
