//! Rational functions as reduced quotients of integer polynomials, plus
//! formal power-series expansion.
//!
//! Normal form: the polynomial gcd of numerator and denominator is trivial,
//! the integer contents of numerator and denominator are coprime, and the
//! denominator has positive leading coefficient. This makes equality a
//! coefficient-wise comparison. (A rational function such as x/(2+2x) has no
//! representation with a primitive denominator and integer numerator, so the
//! content is balanced between the two sides instead.)

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::AlgError;
use crate::poly::IntPoly;

/// Reduced quotient of two integer polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    numer: IntPoly,
    denom: IntPoly,
}

/// Exact series prefix τ(1..N) of a rational function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesWindow {
    values: Vec<BigInt>,
}

impl SeriesWindow {
    pub fn new(values: Vec<BigInt>) -> Self {
        assert!(!values.is_empty(), "series window must have length >= 1");
        SeriesWindow { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty() // never true: length >= 1 by construction
    }

    /// Coefficient at exponent n, 1-based.
    pub fn at(&self, n: usize) -> &BigInt {
        &self.values[n - 1]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

impl RatPoly {
    /// Builds numer/denom and reduces to normal form.
    pub fn new(numer: IntPoly, denom: IntPoly) -> Result<RatPoly, AlgError> {
        if denom.is_zero() {
            return Err(AlgError::DivisionByZeroRatFun);
        }
        Ok(Self::normalized(numer, denom))
    }

    fn normalized(mut numer: IntPoly, mut denom: IntPoly) -> RatPoly {
        debug_assert!(!denom.is_zero());
        if numer.is_zero() {
            return RatPoly {
                numer: IntPoly::zero(),
                denom: IntPoly::one(),
            };
        }
        let g = numer.gcd(&denom);
        if !g.is_one() {
            numer = numer.div_exact(&g).expect("gcd divides numerator");
            denom = denom.div_exact(&g).expect("gcd divides denominator");
        }
        let cn = numer.content();
        let cd = denom.content();
        let c = cn.gcd(&cd);
        if !c.is_one() {
            numer = numer.div_scalar_exact(&c).expect("content divides");
            denom = denom.div_scalar_exact(&c).expect("content divides");
        }
        if denom.leading().is_negative() {
            numer = -&numer;
            denom = -&denom;
        }
        RatPoly { numer, denom }
    }

    pub fn zero() -> RatPoly {
        RatPoly {
            numer: IntPoly::zero(),
            denom: IntPoly::one(),
        }
    }

    pub fn one() -> RatPoly {
        RatPoly {
            numer: IntPoly::one(),
            denom: IntPoly::one(),
        }
    }

    pub fn from_poly(p: IntPoly) -> RatPoly {
        RatPoly {
            numer: p,
            denom: IntPoly::one(),
        }
    }

    pub fn constant(c: BigInt) -> RatPoly {
        RatPoly::from_poly(IntPoly::constant(c))
    }

    pub fn from_rational(q: &BigRational) -> RatPoly {
        Self::normalized(
            IntPoly::constant(q.numer().clone()),
            IntPoly::constant(q.denom().clone()),
        )
    }

    pub fn numer(&self) -> &IntPoly {
        &self.numer
    }

    pub fn denom(&self) -> &IntPoly {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// Multiplies by the rational scalar a/b (b nonzero).
    pub fn scale_rational(&self, a: &BigInt, b: &BigInt) -> RatPoly {
        assert!(!b.is_zero());
        Self::normalized(self.numer.scale(a), self.denom.scale(b))
    }

    /// x·d/dx, the Euler operator. Takes Σ aₙxⁿ to Σ n·aₙxⁿ.
    pub fn x_d_dx(&self) -> RatPoly {
        let n_prime = self.numer.derivative();
        let d_prime = self.denom.derivative();
        let num = &(&n_prime * &self.denom) - &(&self.numer * &d_prime);
        let num_x = num.shift_up(1);
        let den = &self.denom * &self.denom;
        Self::normalized(num_x, den)
    }

    /// f(sign·x) in normal form; sign must be ±1.
    pub fn substitute_signed(&self, sign: i8) -> RatPoly {
        match sign {
            1 => self.clone(),
            -1 => Self::normalized(self.numer.substitute_neg(), self.denom.substitute_neg()),
            _ => panic!("sign must be +1 or -1"),
        }
    }

    /// For A(x) = ∏(1 − μᵢx) with A(0) = 1, returns Σ μᵢx/(1−μᵢx) = −x·A′(x)/A(x).
    pub fn log_derivative_genfunc(a: &IntPoly) -> Result<RatPoly, AlgError> {
        if !a.coeff(0).is_one() {
            return Err(AlgError::ConstantTermNotOne);
        }
        let num = (-&a.derivative()).shift_up(1);
        Ok(Self::normalized(num, a.clone()))
    }

    /// Exact Taylor coefficients for n = 1..N by the denominator recurrence.
    /// Errors on a pole at x = 0 and on any non-integer coefficient.
    ///
    /// When the denominator has unit constant term the whole recurrence runs
    /// over plain integers; otherwise rational arithmetic is used and
    /// integrality is checked per coefficient.
    pub fn expand_series(&self, n_terms: usize) -> Result<SeriesWindow, AlgError> {
        assert!(n_terms >= 1);
        let d0 = self.denom.coeff(0);
        if d0.is_zero() {
            return Err(AlgError::PoleAtZero);
        }
        if d0.is_one() || (-&d0).is_one() {
            return self.expand_series_integer(n_terms, &d0);
        }
        let mut coeffs: Vec<BigRational> = Vec::with_capacity(n_terms + 1);
        let d0q = BigRational::from_integer(d0);
        for j in 0..=n_terms {
            let mut acc = BigRational::from_integer(self.numer.coeff(j));
            for i in 1..=j {
                let di = self.denom.coeff(i);
                if di.is_zero() {
                    continue;
                }
                acc -= BigRational::from_integer(di) * &coeffs[j - i];
            }
            coeffs.push(acc / &d0q);
        }
        let mut values = Vec::with_capacity(n_terms);
        for (j, c) in coeffs.into_iter().enumerate().skip(1) {
            if !c.is_integer() {
                return Err(AlgError::NonIntegerCoefficient { n: j });
            }
            values.push(c.to_integer());
        }
        Ok(SeriesWindow::new(values))
    }

    fn expand_series_integer(&self, n_terms: usize, d0: &BigInt) -> Result<SeriesWindow, AlgError> {
        let negate = !d0.is_one();
        let den = self.denom.coeffs();
        let mut coeffs: Vec<BigInt> = Vec::with_capacity(n_terms + 1);
        for j in 0..=n_terms {
            let mut acc = self.numer.coeff(j);
            for i in 1..=j.min(den.len().saturating_sub(1)) {
                let di = &den[i];
                if di.is_zero() {
                    continue;
                }
                acc -= di * &coeffs[j - i];
            }
            coeffs.push(if negate { -acc } else { acc });
        }
        coeffs.remove(0);
        Ok(SeriesWindow::new(coeffs))
    }

    /// Division that reports a zero divisor instead of panicking.
    pub fn try_div(&self, rhs: &RatPoly) -> Result<RatPoly, AlgError> {
        if rhs.is_zero() {
            return Err(AlgError::DivisionByZeroRatFun);
        }
        Ok(self / rhs)
    }

    /// Constant term f(0); errors on a pole at x = 0.
    pub fn eval_at_zero(&self) -> Result<BigRational, AlgError> {
        let d0 = self.denom.coeff(0);
        if d0.is_zero() {
            return Err(AlgError::PoleAtZero);
        }
        Ok(BigRational::new(self.numer.coeff(0), d0))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let num = &(&self.numer * &rhs.denom) + &(&rhs.numer * &self.denom);
        let den = &self.denom * &rhs.denom;
        RatPoly::normalized(num, den)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let num = &(&self.numer * &rhs.denom) - &(&rhs.numer * &self.denom);
        let den = &self.denom * &rhs.denom;
        RatPoly::normalized(num, den)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::normalized(&self.numer * &rhs.numer, &self.denom * &rhs.denom)
    }
}

impl Div for &RatPoly {
    type Output = RatPoly;
    fn div(self, rhs: &RatPoly) -> RatPoly {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatPoly::normalized(&self.numer * &rhs.denom, &self.denom * &rhs.numer)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({})", crate::render::ratfun_plain(self, "x"))
    }
}
