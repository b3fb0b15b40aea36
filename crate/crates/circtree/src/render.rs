//! Plain-text, LaTeX and JSON rendering of polynomials and rational
//! functions. Terms are printed in ascending degree with explicit signs;
//! the exact shapes are pinned by golden tests.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::IntPoly;
use crate::ratfun::RatPoly;

fn poly_terms(p: &IntPoly, var: &str, braced_powers: bool) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.abs();
        let body = if k == 0 {
            mag.to_string()
        } else {
            let power = if k == 1 {
                var.to_string()
            } else if braced_powers {
                format!("{var}^{{{k}}}")
            } else {
                format!("{var}^{k}")
            };
            if mag.is_one() {
                power
            } else {
                format!("{mag}{power}")
            }
        };
        out.push_str(&body);
    }
    out
}

pub fn poly_plain(p: &IntPoly, var: &str) -> String {
    poly_terms(p, var, false)
}

pub fn poly_latex(p: &IntPoly, var: &str) -> String {
    poly_terms(p, var, true)
}

pub fn ratfun_plain(f: &RatPoly, var: &str) -> String {
    if f.denom().is_one() {
        return poly_plain(f.numer(), var);
    }
    format!(
        "({}) / ({})",
        poly_plain(f.numer(), var),
        poly_plain(f.denom(), var)
    )
}

pub fn ratfun_latex(f: &RatPoly, var: &str) -> String {
    if f.denom().is_one() {
        return poly_latex(f.numer(), var);
    }
    format!(
        "\\frac{{{}}}{{{}}}",
        poly_latex(f.numer(), var),
        poly_latex(f.denom(), var)
    )
}

/// Coefficients as decimal strings, lowest degree first.
pub fn poly_decimal_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(BigInt::to_string).collect()
}

/// Formats with exactly `sig` significant digits (for Mahler reports).
pub fn significant_digits(value: f64, sig: usize) -> String {
    if value == 0.0 || !value.is_finite() {
        return format!("{value:.*}", sig.saturating_sub(1));
    }
    let magnitude = value.abs().log10().floor() as i32;
    let decimals = (sig as i32 - 1 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}
