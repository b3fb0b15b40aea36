//! Construction of F(x) = Σ τ(n)xⁿ as a reduced rational function, the
//! x ↔ 1/x symmetry check, conversion to the w = ½(x+1/x) form, and the
//! independent series-fit reconstruction.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

use crate::error::GenFuncError;
use crate::family::{CirculantFamily, FamilyKind};
use crate::modp::{berlekamp_massey, poly_mod, rational_reconstruct, PrimeStream};
use crate::poly::IntPoly;
use crate::ratfun::RatPoly;
use crate::spectral::{build_spectral, tau_even_from, tau_odd_from};
use crate::symfunc::{composed_product, subset_product_poly_capped, DEFAULT_DIM_CAP};

/// A built generating function with its cross-checked prefix length.
#[derive(Clone, Debug)]
pub struct GenFuncResult {
    pub f_x: RatPoly,
    pub f_w: Option<RatPoly>,
    pub family: CirculantFamily,
    pub verified_terms: usize,
}

/// Number of series coefficients every build is checked against.
pub const VERIFIED_TERMS: usize = 12;

/// Σ ±(−x·Wᵢ′/Wᵢ) for a list of (Wᵢ, sign) with Wᵢ(0) = 1, computed through
/// the two signed products so only one large cancellation is needed:
/// with U = ∏₊Wᵢ and V = ∏₋Wᵢ the sum is −x(U′V − UV′)/(UV).
fn signed_log_derivative_sum(terms: &[(IntPoly, bool)]) -> Result<RatPoly, GenFuncError> {
    let mut u = IntPoly::one();
    let mut v = IntPoly::one();
    for (w, positive) in terms {
        debug_assert!(w.coeff(0).is_one());
        if *positive {
            u = &u * w;
        } else {
            v = &v * w;
        }
    }
    let num = &(&u.derivative() * &v) - &(&u * &v.derivative());
    let den = &u * &v;
    Ok(RatPoly::new((-&num).shift_up(1), den)?)
}

/// Generating function Σ_{n≥1} n·∏(ξⁿ−1)·xⁿ over the roots ξ of monic `r`,
/// assembled from the subset-product polynomials with alternating signs and
/// one Euler-operator application.
pub fn prod_minus_one_genfunc(r: &IntPoly) -> Result<RatPoly, GenFuncError> {
    prod_minus_one_genfunc_capped(r, DEFAULT_DIM_CAP)
}

pub fn prod_minus_one_genfunc_capped(r: &IntPoly, cap: u64) -> Result<RatPoly, GenFuncError> {
    let d = r.degree().expect("spectral polynomial is nonzero");
    let mut terms = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let subset = subset_product_poly_capped(r, k, cap)?;
        let positive = (d - k).is_multiple_of(2);
        terms.push((subset.reverse(), positive));
    }
    Ok(signed_log_derivative_sum(&terms)?.x_d_dx())
}

/// Generating function Σ_{n≥1} n·∏(ξⁿ−1)·∏(ζⁿ+1)·xⁿ for the root sets of
/// monic `r1`, `r2`: the (k,l) grid of subset products composed pairwise,
/// signs (−1)^{deg r1 − k}, then x·d/dx.
pub fn prod_mixed_genfunc(r1: &IntPoly, r2: &IntPoly) -> Result<RatPoly, GenFuncError> {
    prod_mixed_genfunc_capped(r1, r2, DEFAULT_DIM_CAP)
}

pub fn prod_mixed_genfunc_capped(
    r1: &IntPoly,
    r2: &IntPoly,
    cap: u64,
) -> Result<RatPoly, GenFuncError> {
    let d1 = r1.degree().expect("spectral polynomial is nonzero");
    let d2 = r2.degree().expect("spectral polynomial is nonzero");
    // ∏(ζⁿ+1) = Σ_l σ_l(ζⁿ) needs the roots of r2 negated nowhere: the sign
    // pattern is all-plus because (ζⁿ+1) expands without alternation.
    let subsets1: Vec<IntPoly> = (0..=d1)
        .map(|k| subset_product_poly_capped(r1, k, cap))
        .collect::<Result<_, _>>()?;
    let subsets2: Vec<IntPoly> = (0..=d2)
        .map(|l| subset_product_poly_capped(r2, l, cap))
        .collect::<Result<_, _>>()?;
    let mut terms = Vec::with_capacity((d1 + 1) * (d2 + 1));
    for (k, a) in subsets1.iter().enumerate() {
        let positive = (d1 - k).is_multiple_of(2);
        for b in &subsets2 {
            let w = composed_product(a, b)?;
            terms.push((w.reverse(), positive));
        }
    }
    Ok(signed_log_derivative_sum(&terms)?.x_d_dx())
}

/// Builds F(x) for a family and verifies the structural invariants:
/// the first [`VERIFIED_TERMS`] coefficients against the closed form,
/// palindromy, and integrality of the reduced form.
pub fn build_genfunc(family: &CirculantFamily) -> Result<GenFuncResult, GenFuncError> {
    build_genfunc_capped(family, DEFAULT_DIM_CAP)
}

pub fn build_genfunc_capped(
    family: &CirculantFamily,
    cap: u64,
) -> Result<GenFuncResult, GenFuncError> {
    let sp = build_spectral(family)?;
    let q = BigInt::from(sp.q);
    let sign_negative = (sp.s_max - 1) % 2 == 1;
    let f_x = match family.kind() {
        FamilyKind::EvenValency => {
            let phi = prod_minus_one_genfunc_capped(&sp.r1, cap)?;
            let substituted = phi.substitute_signed(if sign_negative { -1 } else { 1 });
            let numer_sign = if sign_negative {
                -BigInt::one()
            } else {
                BigInt::one()
            };
            substituted.scale_rational(&numer_sign, &q)
        }
        FamilyKind::OddValency => {
            let r2 = sp.r2.as_ref().expect("odd family has r2");
            let psi = prod_mixed_genfunc_capped(&sp.r1, r2, cap)?;
            let numer_sign = if sign_negative {
                -BigInt::one()
            } else {
                BigInt::one()
            };
            psi.scale_rational(&numer_sign, &(BigInt::from(2) * &q))
        }
    };
    // invariant checks; a failure here is an implementation bug
    if !f_x.denom().content().is_one() {
        return Err(GenFuncError::Integrality(format!(
            "denominator content {} for {family}",
            f_x.denom().content()
        )));
    }
    let window = f_x
        .expand_series(VERIFIED_TERMS)
        .map_err(|e| GenFuncError::Integrality(format!("{e} for {family}")))?;
    for n in 1..=VERIFIED_TERMS {
        let closed = match family.kind() {
            FamilyKind::EvenValency => tau_even_from(&sp, n as u64)?,
            FamilyKind::OddValency => tau_odd_from(&sp, n as u64)?,
        };
        if window.at(n) != &closed {
            return Err(GenFuncError::SeriesMismatch {
                n,
                got: window.at(n).to_string(),
                want: closed.to_string(),
            });
        }
    }
    if !check_palindromy(&f_x) {
        return Err(GenFuncError::Palindromy(family.to_string()));
    }
    Ok(GenFuncResult {
        f_x,
        f_w: None,
        family: family.clone(),
        verified_terms: VERIFIED_TERMS,
    })
}

/// Attaches the w-form to a built result.
pub fn attach_w_form(mut result: GenFuncResult) -> Result<GenFuncResult, GenFuncError> {
    result.f_w = Some(to_w_form(&result.f_x)?);
    Ok(result)
}

/// True iff f(x) = f(1/x) after clearing powers of x.
pub fn check_palindromy(f: &RatPoly) -> bool {
    match substitute_reciprocal(f) {
        Some(g) => &g == f,
        None => false,
    }
}

/// f(1/x) as a rational function (None only for the zero denominator, which
/// cannot occur for a normal-form input).
fn substitute_reciprocal(f: &RatPoly) -> Option<RatPoly> {
    let dn = f.numer().degree().unwrap_or(0);
    let dd = f.denom().degree().unwrap_or(0);
    let m = dn.max(dd);
    let num = f.numer().reverse().shift_up(m - dn);
    let den = f.denom().reverse().shift_up(m - dd);
    RatPoly::new(num, den).ok()
}

/// Rewrites a palindromic rational function of x as a rational function of
/// w = ½(x + 1/x), by reduction modulo x² − 2wx + 1 and rationalization with
/// the conjugate root 2w − x. The x-linear component must vanish.
pub fn to_w_form(f: &RatPoly) -> Result<RatPoly, GenFuncError> {
    let (n0, n1) = reduce_mod_quadratic(f.numer());
    let (d0, d1) = reduce_mod_quadratic(f.denom());
    // numerator × conjugate: using x·(2w − x) ≡ 1,
    //   (n0 + n1·x)(d0 + d1·(2w − x)) = n0·d0 + 2w·n0·d1 + n1·d1 + (n1·d0 − n0·d1)·x
    let cross = &(&n1 * &d0) - &(&n0 * &d1);
    if !cross.is_zero() {
        return Err(GenFuncError::NotPalindromic);
    }
    let two_w = IntPoly::from_i64(&[0, 2]);
    let num = &(&(&n0 * &d0) + &(&(&two_w * &n0) * &d1)) + &(&n1 * &d1);
    let den = &(&(&d0 * &d0) + &(&(&two_w * &d0) * &d1)) + &(&d1 * &d1);
    Ok(RatPoly::new(num, den)?)
}

/// p(x) mod (x² − 2wx + 1) as a pair (a(w), b(w)) with p ≡ a + b·x.
fn reduce_mod_quadratic(p: &IntPoly) -> (IntPoly, IntPoly) {
    // x^{i+1} = x·(a + b·x) = −b + (a + 2w·b)·x
    let two_w = IntPoly::from_i64(&[0, 2]);
    let mut a = IntPoly::zero();
    let mut b = IntPoly::zero();
    for c in p.coeffs().iter().rev() {
        // multiply accumulator by x, then add the next coefficient
        let new_a = &(-&b) + &IntPoly::constant(c.clone());
        let new_b = &a + &(&two_w * &b);
        a = new_a;
        b = new_b;
    }
    (a, b)
}

/// Substitutes w = ½(x + 1/x) back into a rational function of w,
/// producing a rational function of x (used by the round-trip checks).
pub fn w_form_to_x(g: &RatPoly) -> RatPoly {
    let dn = g.numer().degree().unwrap_or(0);
    let dd = g.denom().degree().unwrap_or(0);
    let m = dn.max(dd);
    let num = substitute_half_sum(g.numer(), m);
    let den = substitute_half_sum(g.denom(), m);
    RatPoly::new(num, den).expect("denominator stays nonzero")
}

/// p(½(x+1/x)) · (2x)^m for deg p ≤ m, as an integer polynomial in x.
fn substitute_half_sum(p: &IntPoly, m: usize) -> IntPoly {
    let x2_plus_1 = IntPoly::from_i64(&[1, 0, 1]);
    let two_x = IntPoly::from_i64(&[0, 2]);
    let mut acc = IntPoly::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        // c · (x²+1)^i · (2x)^{m−i}
        let mut term = IntPoly::constant(c.clone());
        for _ in 0..i {
            term = &term * &x2_plus_1;
        }
        for _ in 0..m - i {
            term = &term * &two_x;
        }
        acc = &acc + &term;
    }
    acc
}

/// Reconstructs F(x) from exact series values by a Berlekamp–Massey fit over
/// word-size primes, CRT lifting and rational reconstruction; the candidate
/// is verified exactly against the full series plus five held-out terms, so
/// a returned function is provably the unique rational function of
/// denominator degree ≤ `degree_bound` matching the data.
pub fn fit_genfunc(family: &CirculantFamily, degree_bound: usize) -> Result<RatPoly, GenFuncError> {
    let sp = build_spectral(family)?;
    let fit_terms = 2 * degree_bound + 2;
    let total = fit_terms + 5;
    let mut taus = Vec::with_capacity(total);
    for n in 1..=total {
        let tau = match family.kind() {
            FamilyKind::EvenValency => tau_even_from(&sp, n as u64)?,
            FamilyKind::OddValency => tau_odd_from(&sp, n as u64)?,
        };
        taus.push(tau);
    }
    fit_series(&taus, degree_bound, fit_terms)
}

/// Core of [`fit_genfunc`]: fits `values[0..fit_terms]` (the coefficients of
/// x¹, x², …) and verifies against all of `values`.
pub fn fit_series(
    values: &[BigInt],
    degree_bound: usize,
    fit_terms: usize,
) -> Result<RatPoly, GenFuncError> {
    assert!(values.len() >= fit_terms);
    let series = IntPoly::new(values[..fit_terms].to_vec()); // index j = τ(j+1)
    let mut primes = PrimeStream::new();
    let mut connections: Vec<(u64, Vec<u64>)> = Vec::new();
    let mut batch = 8usize;
    loop {
        while connections.len() < batch {
            let p = primes.next().expect("prime stream is infinite");
            let s = {
                let mut v = poly_mod(&series, p);
                v.resize(fit_terms, 0);
                v
            };
            connections.push((p, berlekamp_massey(&s, p)));
        }
        // modal recurrence length across primes
        let mut by_len: BTreeMap<usize, usize> = BTreeMap::new();
        for (_, c) in &connections {
            *by_len.entry(c.len() - 1).or_insert(0) += 1;
        }
        let (&order, _) = by_len.iter().max_by_key(|(_, &count)| count).unwrap();
        if order > degree_bound {
            return Err(GenFuncError::FitFailed(format!(
                "minimal recurrence order {order} exceeds degree bound {degree_bound}"
            )));
        }
        if let Some(candidate) = reconstruct_denominator(&connections, order) {
            if let Some(fitted) = verify_fit(&candidate, values, order) {
                return Ok(fitted);
            }
        }
        batch *= 2;
        if batch > 512 {
            return Err(GenFuncError::FitFailed(
                "no consistent fit after 512 primes (degree bound too small?)".into(),
            ));
        }
    }
}

/// CRT + rational reconstruction of the connection polynomial into a
/// primitive integer denominator with positive constant-term sign.
fn reconstruct_denominator(connections: &[(u64, Vec<u64>)], order: usize) -> Option<IntPoly> {
    let usable: Vec<&(u64, Vec<u64>)> = connections
        .iter()
        .filter(|(_, c)| c.len() - 1 == order)
        .collect();
    let mut modulus = BigInt::one();
    let mut residues = vec![BigInt::zero(); order + 1];
    for (p, c) in &usable {
        let p_big = BigInt::from(*p);
        for (i, r) in residues.iter_mut().enumerate() {
            // incremental CRT
            let cur = num_integer::Integer::mod_floor(&*r, &p_big);
            let target = BigInt::from(c[i]);
            let delta = num_integer::Integer::mod_floor(&(&target - &cur), &p_big);
            let inv = mod_inv_big(&modulus, &p_big)?;
            let t = num_integer::Integer::mod_floor(&(&delta * &inv), &p_big);
            *r += &modulus * t;
        }
        modulus *= p_big;
    }
    // coefficients are d_i/d_0 in lowest terms; find a common integer form
    let mut numers = Vec::with_capacity(order + 1);
    let mut denoms = Vec::with_capacity(order + 1);
    for r in &residues {
        let (n, d) = rational_reconstruct(r, &modulus)?;
        numers.push(n);
        denoms.push(d);
    }
    let mut lcm = BigInt::one();
    for d in &denoms {
        lcm = num_integer::Integer::lcm(&lcm, d);
    }
    let coeffs: Vec<BigInt> = numers
        .iter()
        .zip(&denoms)
        .map(|(n, d)| n * (&lcm / d))
        .collect();
    Some(IntPoly::new(coeffs).primitive_part())
}

fn mod_inv_big(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = num_integer::Integer::extended_gcd(a, m);
    if e.gcd.is_one() {
        Some(num_integer::Integer::mod_floor(&e.x, m))
    } else {
        None
    }
}

/// Exact check: D·F must be a polynomial of degree ≤ order over the whole
/// supplied window. Returns the normalized fit when it is.
fn verify_fit(denominator: &IntPoly, values: &[BigInt], order: usize) -> Option<RatPoly> {
    if denominator.coeff(0).is_zero() {
        return None;
    }
    let mut numer_coeffs = vec![BigInt::zero(); order + 1];
    for j in 0..values.len() {
        // coefficient of x^{j+1} in D(x)·Σ τ(n)xⁿ
        let mut acc = BigInt::zero();
        for i in 0..=order.min(j + 1) {
            let di = denominator.coeff(i);
            if di.is_zero() {
                continue;
            }
            let n = j + 1 - i;
            if n >= 1 {
                acc += di * &values[n - 1];
            }
        }
        if j < order {
            numer_coeffs[j + 1] = acc;
        } else if !acc.is_zero() {
            return None;
        }
    }
    RatPoly::new(IntPoly::new(numer_coeffs), denominator.clone()).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfun::RatPoly;

    fn rp(n: &[i64], d: &[i64]) -> RatPoly {
        RatPoly::new(IntPoly::from_i64(n), IntPoly::from_i64(d)).unwrap()
    }

    #[test]
    fn prod_minus_one_degenerate_is_euler_series() {
        // r = 1: only the empty product, Σ n xⁿ = x/(1−x)²
        let f = prod_minus_one_genfunc(&IntPoly::one()).unwrap();
        assert_eq!(f, rp(&[0, 1], &[1, -2, 1]));
    }

    #[test]
    fn prod_minus_one_single_root_two() {
        // Σ n(2ⁿ−1)xⁿ = 2x/(1−2x)² − x/(1−x)²
        let f = prod_minus_one_genfunc(&IntPoly::from_i64(&[-2, 1])).unwrap();
        let a = rp(&[0, 2], &[1, -4, 4]);
        let b = rp(&[0, 1], &[1, -2, 1]);
        assert_eq!(f, &a - &b);
    }

    #[test]
    fn prod_minus_one_matches_resultants() {
        // coefficient at xⁿ must equal n · Res(r, zⁿ−1)
        let r = IntPoly::from_i64(&[1, 3, 1]);
        let f = prod_minus_one_genfunc(&r).unwrap();
        let window = f.expand_series(10).unwrap();
        for n in 1..=10usize {
            let zn_minus_1 = &IntPoly::monomial(BigInt::one(), n) - &IntPoly::one();
            let res = r.resultant(&zn_minus_1).unwrap();
            assert_eq!(window.at(n), &(BigInt::from(n) * res), "n = {n}");
        }
    }

    #[test]
    fn prod_mixed_moebius_series() {
        // r1 = 1, r2 = z²−4z+1: coefficients n·(ζⁿ+1)(ζ⁻ⁿ+1) = 2n(T_n(2)+1)
        let f = prod_mixed_genfunc(&IntPoly::one(), &IntPoly::from_i64(&[1, -4, 1])).unwrap();
        let window = f.expand_series(4).unwrap();
        assert_eq!(window.at(2), &BigInt::from(32));
        assert_eq!(window.at(3), &BigInt::from(162));
    }

    #[test]
    fn prod_mixed_series_tracks_tau_odd() {
        // for the odd family {1,2}: Ψ_n = (−1)^{s_k−1}·2q·τ(n) = −10·τ(n)
        let family = CirculantFamily::odd(&[1, 2]).unwrap();
        let sp = crate::spectral::build_spectral(&family).unwrap();
        let psi = prod_mixed_genfunc(&sp.r1, sp.r2.as_ref().unwrap()).unwrap();
        let window = psi.expand_series(8).unwrap();
        for n in 1..=8usize {
            let tau = crate::spectral::tau_odd_from(&sp, n as u64).unwrap();
            assert_eq!(window.at(n), &(BigInt::from(-10) * tau), "n = {n}");
        }
    }

    #[test]
    fn prod_mixed_reduces_to_minus_one_when_r2_constant() {
        let r1 = IntPoly::from_i64(&[-2, 1]);
        let mixed = prod_mixed_genfunc(&r1, &IntPoly::one()).unwrap();
        let plain = prod_minus_one_genfunc(&r1).unwrap();
        assert_eq!(mixed, plain);
    }

    #[test]
    fn build_cycle_family() {
        let family = CirculantFamily::even(&[1]).unwrap();
        let result = build_genfunc(&family).unwrap();
        assert_eq!(result.f_x, rp(&[0, 1], &[1, -2, 1]));
        assert_eq!(result.verified_terms, VERIFIED_TERMS);
    }

    #[test]
    fn palindromy_examples() {
        assert!(check_palindromy(&rp(&[0, 1], &[1, -2, 1]))); // x/(1−x)²
        assert!(!check_palindromy(&rp(&[0, 1], &[1, -1]))); // x/(1−x)
        assert!(check_palindromy(&rp(&[0, 0, 1], &[1, 0, 0, 0, 1]))); // x²/(1+x⁴)
    }

    #[test]
    fn w_form_of_euler_series() {
        // x/(1−x)² = 1/((x+1/x) − 2) = 1/(2w−2)
        let g = to_w_form(&rp(&[0, 1], &[1, -2, 1])).unwrap();
        assert_eq!(g, rp(&[1], &[-2, 2]));
    }

    #[test]
    fn w_form_rejects_asymmetric_input() {
        assert!(matches!(
            to_w_form(&rp(&[0, 1], &[1, -1])),
            Err(GenFuncError::NotPalindromic)
        ));
    }

    #[test]
    fn w_form_round_trip() {
        let f = rp(&[0, 1], &[1, -2, 1]);
        let g = to_w_form(&f).unwrap();
        assert_eq!(w_form_to_x(&g), f);
    }

    #[test]
    fn fit_cycle_family() {
        let family = CirculantFamily::even(&[1]).unwrap();
        let fitted = fit_genfunc(&family, 2).unwrap();
        assert_eq!(fitted, rp(&[0, 1], &[1, -2, 1]));
    }

    #[test]
    fn fit_rejects_too_small_bound() {
        let family = CirculantFamily::even(&[1, 2]).unwrap();
        assert!(fit_genfunc(&family, 2).is_err());
    }

    #[test]
    fn fit_series_of_powers() {
        // τ(n) = 3ⁿ: F = 3x/(1−3x)
        let values: Vec<BigInt> = (1..=15u32).map(|n| BigInt::from(3).pow(n)).collect();
        let fitted = fit_series(&values, 3, 10).unwrap();
        assert_eq!(fitted, rp(&[0, 3], &[1, -3]));
    }
}
