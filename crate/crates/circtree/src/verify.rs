//! Cross-check orchestration: certificates for single τ values and the full
//! per-family verification table.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::collections::BTreeMap;

use crate::error::GenFuncError;
use crate::family::{CirculantFamily, GraphInstance, TauCertificate, TauPath};
use crate::genfunc::{build_genfunc_capped, check_palindromy, fit_genfunc};
use crate::graph::tau_oracle;
use crate::linalg::ln_abs_bigint;
use crate::numeric::tau_numeric_check;
use crate::spectral::tau_closed_form;

/// Relative tolerance of the Chebyshev-root floating-point path.
pub const NUMERIC_REL_TOL: f64 = 1e-8;

/// τ by closed form and determinant oracle, with the numeric path alongside.
pub struct VerifiedTau {
    pub certificate: TauCertificate,
    pub numeric: f64,
    pub numeric_ok: bool,
}

/// Relative agreement of the numeric path with an exact value.
pub fn numeric_agrees(numeric: f64, exact: &BigInt) -> bool {
    if exact.to_f64().map(f64::is_finite).unwrap_or(false) {
        let e = exact.to_f64().unwrap();
        (numeric - e).abs() <= NUMERIC_REL_TOL * e.abs().max(1.0)
    } else {
        // compare in log space when the exact value overflows f64
        numeric > 0.0 && (numeric.ln() - ln_abs_bigint(exact)).abs() <= 2.0 * NUMERIC_REL_TOL
    }
}

/// Runs closed form + oracle (+ numeric) for one instance.
pub fn verified_tau(
    family: &CirculantFamily,
    n: u64,
    vertex_cap: u64,
) -> Result<VerifiedTau, GenFuncError> {
    let closed = tau_closed_form(family, n)?;
    let instance = GraphInstance::with_vertex_cap(family.clone(), n, vertex_cap)
        .map_err(|e| GenFuncError::FitFailed(e.to_string()))?;
    let oracle = tau_oracle(&instance);
    let numeric = tau_numeric_check(family, n)?;
    let numeric_ok = numeric_agrees(numeric, &closed);
    let mut paths = BTreeMap::new();
    paths.insert(TauPath::ClosedForm, closed);
    paths.insert(TauPath::DeterminantOracle, oracle);
    Ok(VerifiedTau {
        certificate: TauCertificate::new(n, paths),
        numeric,
        numeric_ok,
    })
}

/// One row of the verification table.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

/// The full invariant suite for one family: closed form vs oracle for
/// n = 1..N, series-vs-genfunc coefficients, palindromy, integrality,
/// fit-vs-build equality, and the Chebyshev-root numeric check.
pub fn verify_family(
    family: &CirculantFamily,
    n_max: u64,
    vertex_cap: u64,
    dim_cap: u64,
) -> Result<Vec<CheckResult>, GenFuncError> {
    let mut rows = Vec::new();

    let mut closed_values = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        closed_values.push(tau_closed_form(family, n)?);
    }

    // closed form vs determinant oracle
    let mut oracle_fail = None;
    for n in 1..=n_max {
        let instance = GraphInstance::with_vertex_cap(family.clone(), n, vertex_cap)
            .map_err(|e| GenFuncError::FitFailed(e.to_string()))?;
        let oracle = tau_oracle(&instance);
        if oracle != closed_values[(n - 1) as usize] {
            oracle_fail = Some((n, oracle));
            break;
        }
    }
    rows.push(match oracle_fail {
        None => CheckResult {
            check: "closed-form vs oracle".into(),
            passed: true,
            detail: format!("n = 1..{n_max}"),
        },
        Some((n, oracle)) => CheckResult {
            check: "closed-form vs oracle".into(),
            passed: false,
            detail: format!(
                "first mismatch at n = {n}: oracle {oracle}, closed form {}",
                closed_values[(n - 1) as usize]
            ),
        },
    });

    // generating function: series, palindromy, integrality
    let built = build_genfunc_capped(family, dim_cap)?;
    let window = built.f_x.expand_series(n_max as usize)?;
    let series_fail = (1..=n_max as usize).find(|&n| window.at(n) != &closed_values[n - 1]);
    rows.push(match series_fail {
        None => CheckResult {
            check: "series vs closed form".into(),
            passed: true,
            detail: format!("n = 1..{n_max}"),
        },
        Some(n) => CheckResult {
            check: "series vs closed form".into(),
            passed: false,
            detail: format!(
                "first mismatch at n = {n}: series {}, closed form {}",
                window.at(n),
                closed_values[n - 1]
            ),
        },
    });
    rows.push(CheckResult {
        check: "palindromy F(x) = F(1/x)".into(),
        passed: check_palindromy(&built.f_x),
        detail: String::new(),
    });
    let denominator_content = built.f_x.denom().content();
    rows.push(CheckResult {
        check: "integrality of reduced form".into(),
        passed: denominator_content == BigInt::from(1),
        detail: format!("denominator content {denominator_content}"),
    });

    // independent reconstruction from series values
    let bound = built.f_x.denom().degree().unwrap_or(0);
    let fitted = fit_genfunc(family, bound)?;
    rows.push(CheckResult {
        check: "fit vs build".into(),
        passed: fitted == built.f_x,
        detail: format!("denominator degree {bound}"),
    });

    // Chebyshev-root numeric path
    let mut numeric_fail = None;
    for n in 1..=n_max {
        let numeric = tau_numeric_check(family, n)?;
        if !numeric_agrees(numeric, &closed_values[(n - 1) as usize]) {
            numeric_fail = Some((n, numeric));
            break;
        }
    }
    rows.push(match numeric_fail {
        None => CheckResult {
            check: "numeric Chebyshev-root check".into(),
            passed: true,
            detail: format!("relative tolerance {NUMERIC_REL_TOL:e}"),
        },
        Some((n, numeric)) => CheckResult {
            check: "numeric Chebyshev-root check".into(),
            passed: false,
            detail: format!("first mismatch at n = {n}: numeric {numeric}"),
        },
    });

    Ok(rows)
}
