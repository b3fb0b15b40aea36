//! Dense univariate polynomials over the arbitrary-precision integers.
//!
//! Coefficients are stored lowest degree first; the zero polynomial is the
//! empty coefficient vector and its degree is `None`. The trailing (highest
//! index) coefficient of a nonzero polynomial is always nonzero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::AlgError;
use crate::linalg::det_bareiss;

/// Dense integer polynomial, coefficients indexed by degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from coefficients (lowest degree first),
    /// trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial c·z^k.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a polynomial known to be nonzero.
    pub fn degree_nonzero(&self) -> usize {
        debug_assert!(!self.is_zero());
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of z^k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Coefficient reversal: z^deg · p(1/z). For monic p = ∏(z−μ) this is
    /// ∏(1−μz), the form expected by the generating-function builders.
    pub fn reverse(&self) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        IntPoly::new(coeffs)
    }

    /// True if the coefficient sequence equals its own reversal.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// GCD of all coefficients (non-negative); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content; the zero polynomial is returned unchanged.
    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact division by an integer; `None` if any coefficient is not divisible.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<IntPoly> {
        if c.is_zero() {
            return None;
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(IntPoly { coeffs })
    }

    /// Substitutes z ↦ −z (negates odd-degree coefficients).
    pub fn substitute_neg(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Multiplies by z^k.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    /// Pseudo-division: returns (q, r) with lc(b)^(deg a − deg b + 1)·a = q·b + r
    /// and deg r < deg b. For monic `b` this is plain euclidean division.
    ///
    /// Errors on a zero divisor.
    pub fn pseudo_divrem(&self, b: &IntPoly) -> Result<(IntPoly, IntPoly), AlgError> {
        if b.is_zero() {
            return Err(AlgError::DivisionByZeroPoly);
        }
        let db = b.degree_nonzero();
        if self.is_zero() || self.degree_nonzero() < db {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let da = self.degree_nonzero();
        let lc = b.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for step in (0..=da - db).rev() {
            // multiply the not-yet-reduced part by lc so the leading term divides
            for c in rem.iter_mut().take(db + step) {
                *c = &*c * &lc;
            }
            for q in quot.iter_mut() {
                *q = &*q * &lc;
            }
            let head = std::mem::replace(&mut rem[db + step], BigInt::zero());
            quot[step] = head.clone();
            for i in 0..db {
                rem[step + i] -= &head * &b.coeffs[i];
            }
        }
        rem.truncate(db);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact division: returns `Some(q)` with `self = q·b` when `b` divides
    /// `self` over the integers, `None` otherwise.
    pub fn div_exact(&self, b: &IntPoly) -> Option<IntPoly> {
        if b.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let da = self.degree_nonzero();
        let db = b.degree_nonzero();
        if da < db {
            return None;
        }
        let lc = b.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for step in (0..=da - db).rev() {
            let head = std::mem::replace(&mut rem[db + step], BigInt::zero());
            if head.is_zero() {
                continue;
            }
            let (q, r) = head.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for i in 0..db {
                rem[step + i] -= &q * &b.coeffs[i];
            }
            quot[step] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    /// Remainder of `self` modulo a monic polynomial (exact over ℤ).
    pub fn rem_monic(&self, m: &IntPoly) -> IntPoly {
        debug_assert!(m.is_monic());
        let dm = m.degree_nonzero();
        if self.is_zero() || self.degree_nonzero() < dm {
            return self.clone();
        }
        let mut rem = self.coeffs.clone();
        for step in (0..=rem.len() - 1 - dm).rev() {
            let head = std::mem::replace(&mut rem[dm + step], BigInt::zero());
            if head.is_zero() {
                continue;
            }
            for i in 0..dm {
                rem[step + i] -= &head * &m.coeffs[i];
            }
        }
        rem.truncate(dm);
        IntPoly::new(rem)
    }

    /// z^n mod m for monic m, by binary exponentiation.
    pub fn pow_z_mod_monic(n: u64, m: &IntPoly) -> IntPoly {
        debug_assert!(m.is_monic());
        if m.degree_nonzero() == 0 {
            unreachable!("modulus must have positive degree");
        }
        let mut result = IntPoly::one();
        let mut base = IntPoly::from_i64(&[0, 1]).rem_monic(m);
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = (&result * &base).rem_monic(m);
            }
            base = (&base * &base).rem_monic(m);
            e >>= 1;
        }
        result
    }

    /// Polynomial GCD over ℤ, primitive with positive leading coefficient.
    ///
    /// Contents are split off and handled separately; the primitive parts go
    /// through a small-degree subresultant remainder sequence or, past a size
    /// threshold, the modular algorithm in [`crate::modp`].
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return normalize_sign(other.clone());
        }
        if other.is_zero() {
            return normalize_sign(self.clone());
        }
        let ca = self.content();
        let cb = other.content();
        let content_gcd = ca.gcd(&cb);
        let pa = self.primitive_part();
        let pb = other.primitive_part();
        let prim = if pa.degree_nonzero().min(pb.degree_nonzero()) == 0 {
            IntPoly::one()
        } else if pa.degree_nonzero().max(pb.degree_nonzero()) > 24 {
            crate::modp::gcd_modular(&pa, &pb)
        } else {
            gcd_subresultant(pa, pb)
        };
        normalize_sign(prim.scale(&content_gcd))
    }

    /// Resultant under the convention Res(a,b) = lc(a)^deg(b) · ∏ b(ξ) over
    /// the roots ξ of a, realized as the Sylvester-matrix determinant
    /// (fraction-free). Res(a, c) = c^deg(a) for constant c; Res of two
    /// constants is 1.
    pub fn resultant(&self, other: &IntPoly) -> Result<BigInt, AlgError> {
        if self.is_zero() || other.is_zero() {
            return Err(AlgError::ResultantOfZero);
        }
        let m = self.degree_nonzero();
        let n = other.degree_nonzero();
        if m == 0 {
            return Ok(self.coeffs[0].clone().pow(n as u32));
        }
        if n == 0 {
            return Ok(other.coeffs[0].clone().pow(m as u32));
        }
        let size = m + n;
        let mut mat = vec![vec![BigInt::zero(); size]; size];
        for row in 0..n {
            for (j, c) in self.coeffs.iter().rev().enumerate() {
                mat[row][row + j] = c.clone();
            }
        }
        for row in 0..m {
            for (j, c) in other.coeffs.iter().rev().enumerate() {
                mat[n + row][row + j] = c.clone();
            }
        }
        Ok(det_bareiss(mat))
    }
}

/// Flips the sign so the leading coefficient is positive.
fn normalize_sign(p: IntPoly) -> IntPoly {
    if p.leading().is_negative() {
        -&p
    } else {
        p
    }
}

/// Subresultant PRS gcd of two primitive polynomials of positive degree.
fn gcd_subresultant(mut a: IntPoly, mut b: IntPoly) -> IntPoly {
    if a.degree_nonzero() < b.degree_nonzero() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let (_, r) = a.pseudo_divrem(&b).expect("nonzero divisor");
        if r.is_zero() {
            return b.primitive_part();
        }
        if r.degree_nonzero() == 0 {
            return IntPoly::one();
        }
        a = b;
        b = r.primitive_part();
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::new(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", crate::render::poly_plain(self, "z"))
    }
}
