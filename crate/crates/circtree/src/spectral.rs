//! Exact τ(n) through resultants of the spectral polynomials.
//!
//! For a family with jumps s₁<…<s_k set Q(z) = Σ (z^{s_j}−1)(z^{−s_j}−1),
//! a Laurent polynomial with a double root at z = 1. Clearing denominators
//! with z^{s_k} and splitting off (z−1)² exactly leaves `r1`, the monic
//! integer polynomial of degree 2s_k−2 carrying the nonunit spectrum; the
//! odd-valency construction additionally needs `r2`, the monic form of
//! −z^{s_k}(Q(z)+2), of degree 2s_k. Both are palindromic.
//!
//! τ(n) is then an integer multiple of resultants against zⁿ ∓ 1, which are
//! evaluated after reducing zⁿ modulo the (monic) spectral polynomial, so a
//! single τ costs O(log n) small polynomial products.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::ClosedFormError;
use crate::family::{CirculantFamily, FamilyKind};
use crate::poly::IntPoly;

/// The exact root data of a family: r1 (and r2 for odd valency).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralPolys {
    pub r1: IntPoly,
    pub r2: Option<IntPoly>,
    pub q: u64,
    pub s_max: u64,
}

/// z^{s_k}·Q(z) as an integer polynomial (degree 2s_k, leading coefficient −1).
pub fn q_poly_cleared(family: &CirculantFamily) -> IntPoly {
    let s_max = family.s_max() as usize;
    let k = family.jumps().len() as i64;
    let mut coeffs = vec![BigInt::zero(); 2 * s_max + 1];
    coeffs[s_max] = BigInt::from(2 * k);
    for &s in family.jumps() {
        let s = s as usize;
        coeffs[s_max + s] -= 1;
        coeffs[s_max - s] -= 1;
    }
    IntPoly::new(coeffs)
}

/// Builds the spectral polynomials, verifying the exact (z−1)² division.
pub fn build_spectral(family: &CirculantFamily) -> Result<SpectralPolys, ClosedFormError> {
    let zq = q_poly_cleared(family);
    let one_sq = IntPoly::from_i64(&[1, -2, 1]); // (z−1)²
    let quotient = (-&zq).div_exact(&one_sq).ok_or_else(|| {
        ClosedFormError::Internal(format!("(z-1)^2 does not divide z^s_max*Q(z) for {family}"))
    })?;
    // leading coefficient of −z^{s_k}Q is +1, so the quotient is already monic
    if !quotient.is_monic() {
        return Err(ClosedFormError::Internal(format!(
            "spectral polynomial for {family} is not monic"
        )));
    }
    if !quotient.is_palindromic() {
        return Err(ClosedFormError::Internal(format!(
            "r1 for {family} is not palindromic"
        )));
    }
    if quotient.eval(&BigInt::one()).is_zero() {
        return Err(ClosedFormError::Internal(format!(
            "r1 for {family} still vanishes at 1"
        )));
    }
    let r2 = match family.kind() {
        FamilyKind::EvenValency => None,
        FamilyKind::OddValency => {
            let s_max = family.s_max() as usize;
            let two_z = IntPoly::monomial(BigInt::from(2), s_max);
            let p = -&(&zq + &two_z); // −z^{s_k}(Q+2)
            if !p.is_monic() || !p.is_palindromic() || p.eval(&BigInt::one()).is_zero() {
                return Err(ClosedFormError::Internal(format!(
                    "r2 for {family} fails shape checks"
                )));
            }
            Some(p)
        }
    };
    Ok(SpectralPolys {
        r1: quotient,
        r2,
        q: family.q(),
        s_max: family.s_max(),
    })
}

/// ∏ (ξⁿ − c) over the roots of monic `r`, i.e. Res(r, zⁿ − c), evaluated by
/// first reducing zⁿ mod r.
fn root_power_product(r: &IntPoly, n: u64, c: i64) -> Result<BigInt, ClosedFormError> {
    match r.degree() {
        None => return Err(ClosedFormError::Internal("zero spectral polynomial".into())),
        Some(0) => return Ok(BigInt::one()), // empty root set
        Some(_) => {}
    }
    let zn = IntPoly::pow_z_mod_monic(n, r);
    let reduced = &zn - &IntPoly::constant(BigInt::from(c));
    if reduced.is_zero() {
        return Ok(BigInt::zero());
    }
    Ok(r.resultant(&reduced)?)
}

/// τ(n) for an even-valency family:
/// (−1)^{(n+1)(s_k−1)} · (n/q) · ∏(z_pⁿ−1)(z_p^{−n}−1) over the roots of r1.
pub fn tau_even(family: &CirculantFamily, n: u64) -> Result<BigInt, ClosedFormError> {
    if family.kind() != FamilyKind::EvenValency {
        return Err(ClosedFormError::KindMismatch(
            "tau_even requires an even-valency family",
        ));
    }
    let sp = build_spectral(family)?;
    tau_even_from(&sp, n)
}

/// Same as [`tau_even`] but reusing precomputed spectral data.
pub fn tau_even_from(sp: &SpectralPolys, n: u64) -> Result<BigInt, ClosedFormError> {
    assert!(n >= 1);
    let prod = root_power_product(&sp.r1, n, 1)?;
    let sign_negative = (n + 1) * (sp.s_max - 1) % 2 == 1;
    let signed = if sign_negative { -prod } else { prod };
    finish_tau(signed * BigInt::from(n), BigInt::from(sp.q))
}

/// τ(n) for an odd-valency family:
/// (−1)^{s_k−1} · (n/2q) · ∏(z_pⁿ−1)(z_p^{−n}−1) · ∏(ζ_pⁿ+1)(ζ_p^{−n}+1).
pub fn tau_odd(family: &CirculantFamily, n: u64) -> Result<BigInt, ClosedFormError> {
    if family.kind() != FamilyKind::OddValency {
        return Err(ClosedFormError::KindMismatch(
            "tau_odd requires an odd-valency family",
        ));
    }
    let sp = build_spectral(family)?;
    tau_odd_from(&sp, n)
}

pub fn tau_odd_from(sp: &SpectralPolys, n: u64) -> Result<BigInt, ClosedFormError> {
    assert!(n >= 1);
    let r2 = sp
        .r2
        .as_ref()
        .ok_or(ClosedFormError::KindMismatch("missing r2"))?;
    let prod1 = root_power_product(&sp.r1, n, 1)?;
    let prod2 = root_power_product(r2, n, -1)?;
    let sign_negative = (sp.s_max - 1) % 2 == 1;
    let mut acc = prod1 * prod2 * BigInt::from(n);
    if sign_negative {
        acc = -acc;
    }
    finish_tau(acc, BigInt::from(2 * sp.q))
}

/// Divides by q (or 2q), checking exactness and non-negativity.
fn finish_tau(numerator: BigInt, divisor: BigInt) -> Result<BigInt, ClosedFormError> {
    let (tau, rem) = numerator.div_rem(&divisor);
    if !rem.is_zero() {
        return Err(ClosedFormError::Internal(format!(
            "tau numerator {numerator} not divisible by {divisor}"
        )));
    }
    if tau.is_negative() {
        return Err(ClosedFormError::Internal(format!(
            "negative tau {tau}: sign convention bug"
        )));
    }
    Ok(tau)
}

/// Dispatches on the family kind.
pub fn tau_closed_form(family: &CirculantFamily, n: u64) -> Result<BigInt, ClosedFormError> {
    match family.kind() {
        FamilyKind::EvenValency => tau_even(family, n),
        FamilyKind::OddValency => tau_odd(family, n),
    }
}
