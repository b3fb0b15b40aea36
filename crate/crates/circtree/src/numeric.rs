//! Floating-point cross-checks: the Chebyshev-root τ formulas and the Mahler
//! measure of the associated Laurent polynomial.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive};

use crate::chebyshev::{chebyshev_t_complex, chebyshev_t_poly};
use crate::error::ClosedFormError;
use crate::family::{CirculantFamily, FamilyKind};
use crate::linalg::ln_abs_bigint;
use crate::poly::IntPoly;
use crate::spectral::q_poly_cleared;

/// Numeric Mahler measure together with the polynomial it was taken of.
#[derive(Clone, Debug)]
pub struct MahlerEstimate {
    pub value: f64,
    pub polynomial: IntPoly,
}

/// All complex roots by Aberth–Ehrlich iteration. Degrees here stay tiny
/// (≤ 2·s_k), so simultaneous iteration to near machine precision is cheap.
pub fn complex_roots(p: &IntPoly) -> Result<Vec<Complex64>, ClosedFormError> {
    let d = p.degree().unwrap_or(0);
    if d == 0 {
        return Ok(vec![]);
    }
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
        .collect();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(ClosedFormError::RootFinder);
    }
    // Cauchy-style radius bound
    let lead = coeffs[d].abs();
    let radius = 1.0
        + coeffs[..d]
            .iter()
            .map(|c| (c / lead).abs())
            .fold(0.0f64, f64::max);
    let mut roots: Vec<Complex64> = (0..d)
        .map(|i| {
            let angle = 2.0 * std::f64::consts::PI * (i as f64 + 0.25) / d as f64;
            Complex64::from_polar(radius * 0.7 + 0.1 * i as f64 / d as f64, angle)
        })
        .collect();
    let eval = |z: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            dv = dv * z + v;
            v = v * z + c;
        }
        (v, dv)
    };
    for _ in 0..400 {
        let mut shift_max = 0.0f64;
        let snapshot = roots.clone();
        for i in 0..d {
            let z = snapshot[i];
            let (v, dv) = eval(z);
            if v.norm() == 0.0 {
                continue;
            }
            let newton = v / dv;
            let mut repulse = Complex64::new(0.0, 0.0);
            for (j, &w) in snapshot.iter().enumerate() {
                if j != i {
                    repulse += (z - w).inv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * repulse;
            let step = newton / denom;
            roots[i] = z - step;
            shift_max = shift_max.max(step.norm());
        }
        if shift_max < 1e-14 * radius.max(1.0) {
            return Ok(roots);
        }
    }
    // accept slow convergence only if residuals are already tiny
    let scale = coeffs.iter().map(|c| c.abs()).fold(0.0f64, f64::max);
    if roots
        .iter()
        .all(|&z| eval(z).0.norm() <= 1e-8 * scale * radius.powi(d as i32 / 2))
    {
        Ok(roots)
    } else {
        Err(ClosedFormError::RootFinder)
    }
}

/// P(w) of the even-valency Chebyshev product formula,
/// Σ (T_{s_j}(w)−1)/(w−1): an integer polynomial of degree s_k − 1 whose
/// roots w_p drive τ(n) = ±(n/q)·∏(2T_n(w_p)−2).
pub fn even_root_poly(family: &CirculantFamily) -> IntPoly {
    let w_minus_1 = IntPoly::from_i64(&[-1, 1]);
    let mut acc = IntPoly::zero();
    for &s in family.jumps() {
        let t = chebyshev_t_poly(s as usize);
        let num = &t - &IntPoly::one();
        let quotient = num
            .div_exact(&w_minus_1)
            .expect("T_s(w) - 1 is divisible by w - 1");
        acc = &acc + &quotient;
    }
    acc
}

/// P(w) of the odd-valency product formula: 2k+1 − 2·Σ T_{s_i}(w).
/// The roots of P−1 (other than w = 1) and of P+1 drive the τ product.
pub fn odd_root_poly(family: &CirculantFamily) -> IntPoly {
    let k = family.jumps().len() as i64;
    let mut acc = IntPoly::from_i64(&[2 * k + 1]);
    for &s in family.jumps() {
        let t = chebyshev_t_poly(s as usize).scale(&BigInt::from(2));
        acc = &acc - &t;
    }
    acc
}

/// Floating-point τ(n) through the Chebyshev-root product formulas.
/// Expected to match the exact value to ~1e−8 relative for n ≤ 30, s_k ≤ 5.
pub fn tau_numeric_check(family: &CirculantFamily, n: u64) -> Result<f64, ClosedFormError> {
    match family.kind() {
        FamilyKind::EvenValency => {
            let p = even_root_poly(family);
            let roots = complex_roots(&p)?;
            let mut prod = Complex64::new(1.0, 0.0);
            for w in roots {
                prod *= 2.0 * chebyshev_t_complex(n, w) - 2.0;
            }
            let s_max = family.s_max();
            let sign = if (n * (s_max - 1)) % 2 == 1 {
                -1.0
            } else {
                1.0
            };
            Ok(sign * n as f64 / family.q() as f64 * prod.re)
        }
        FamilyKind::OddValency => {
            let p = odd_root_poly(family);
            let w_minus_1 = IntPoly::from_i64(&[-1, 1]);
            // P(u) − 1 contains the root u = 1 exactly; remove it
            let pm1 = &p - &IntPoly::one();
            let pm1_reduced = pm1
                .div_exact(&w_minus_1)
                .expect("u = 1 is a root of P(u) - 1");
            let u_roots = complex_roots(&pm1_reduced)?;
            let v_roots = complex_roots(&(&p + &IntPoly::one()))?;
            let mut prod = Complex64::new(1.0, 0.0);
            for u in u_roots {
                prod *= chebyshev_t_complex(n, u) - 1.0;
            }
            for v in v_roots {
                prod *= chebyshev_t_complex(n, v) + 1.0;
            }
            let s_max = family.s_max();
            let scale = 4f64.powi(s_max as i32 - 1) * n as f64 / family.q() as f64;
            Ok(scale * prod.re)
        }
    }
}

/// Numeric Mahler measure of z^{s_k}·L(z), L(z) = 2k − Σ(z^{s_j}+z^{−s_j}).
///
/// z^{s_k}L(z) = −(z−1)²·r1(z), so the product over roots outside the unit
/// circle can be taken over the roots of r1 alone (|leading| = 1 and the
/// unit roots contribute nothing).
pub fn mahler_measure(family: &CirculantFamily) -> Result<MahlerEstimate, ClosedFormError> {
    let zl = q_poly_cleared(family);
    let spectral = crate::spectral::build_spectral(family)?;
    let roots = complex_roots(&spectral.r1)?;
    let mut value = 1.0f64;
    for z in roots {
        let m = z.norm();
        if m > 1.0 + 1e-9 {
            value *= m;
        }
    }
    Ok(MahlerEstimate {
        value,
        polynomial: zl,
    })
}

/// (τ(n)·q/n)^{1/n}, the finite-n approximation to the Mahler measure.
pub fn tau_growth_rate(tau: &BigInt, q: u64, n: u64) -> f64 {
    assert!(tau.is_positive());
    let ln = ln_abs_bigint(tau) + (q as f64).ln() - (n as f64).ln();
    (ln / n as f64).exp()
}
