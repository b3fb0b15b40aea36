//! `circtree` — spanning-tree counts and generating functions of circulant
//! graph families from the command line.

use clap::{Parser, Subcommand, ValueEnum};

use serde_json::json;
use std::process::ExitCode;

use circtree::error::{ClosedFormError, GenFuncError};
use circtree::family::{CirculantFamily, GraphInstance, DEFAULT_VERTEX_CAP};
use circtree::famspec::parse_family_spec;
use circtree::genfunc::{attach_w_form, build_genfunc_capped};
use circtree::graph::tau_oracle;
use circtree::numeric::{mahler_measure, tau_growth_rate};
use circtree::render;
use circtree::spectral::tau_closed_form;
use circtree::symfunc::DEFAULT_DIM_CAP;
use circtree::verify::{verified_tau, verify_family};

/// Default cap on the largest jump; subset-product sizes grow as C(2s_k−2, k).
const DEFAULT_S_MAX_CAP: u64 = 6;
/// Default cap on series length.
const DEFAULT_SERIES_CAP: u64 = 500;

#[derive(Parser)]
#[command(
    name = "circtree",
    about = "Exact spanning-tree counts and rational generating functions for circulant graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Var {
    X,
    W,
}

#[derive(Subcommand)]
enum Command {
    /// Print τ(n) for one instance of a family
    Tau {
        /// Family spec, e.g. "C[1,2]" or "C2[1]"
        spec: String,
        /// Instance parameter n (n ≥ 1)
        n: u64,
        /// Also run the determinant oracle and the numeric cross-check
        #[arg(long)]
        verify: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        /// Lift the jump-size, series-length and vertex-count caps
        #[arg(long)]
        unsafe_limits: bool,
    },
    /// Print τ(1..N)
    Series {
        spec: String,
        /// Number of terms
        #[arg(default_value_t = 20)]
        n: u64,
        /// Add a determinant-oracle column and mismatch flags
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        #[arg(long)]
        unsafe_limits: bool,
    },
    /// Print the generating function F as a reduced rational function
    Genfunc {
        spec: String,
        /// Variable: x, or w = (x + 1/x)/2
        #[arg(long, value_enum, default_value = "x")]
        var: Var,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        #[arg(long)]
        unsafe_limits: bool,
    },
    /// Run the full cross-check suite for one family
    Verify {
        spec: String,
        /// Check τ(1..N)
        #[arg(default_value_t = 12)]
        n: u64,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        #[arg(long)]
        unsafe_limits: bool,
    },
    /// Print the Mahler measure of the associated Laurent polynomial
    Mahler {
        spec: String,
        /// Also print the ratio (τ(N)·q/N)^(1/N) / M
        #[arg(long, value_name = "N")]
        asymptotic: Option<u64>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
}

const EXIT_DISAGREE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

fn fail(code: u8, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("circtree: {message}");
    ExitCode::from(code)
}

fn classify_closed(e: &ClosedFormError) -> u8 {
    match e {
        ClosedFormError::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

fn classify_error(e: &GenFuncError) -> u8 {
    match e {
        GenFuncError::Integrality(_)
        | GenFuncError::Palindromy(_)
        | GenFuncError::SeriesMismatch { .. } => EXIT_INTERNAL,
        GenFuncError::ClosedForm(ClosedFormError::Internal(_)) => EXIT_INTERNAL,
        GenFuncError::Alg(_) | GenFuncError::NotPalindromic | GenFuncError::FitFailed(_) => {
            EXIT_USAGE
        }
        GenFuncError::ClosedForm(_) => EXIT_USAGE,
    }
}

struct Limits {
    vertex_cap: u64,
    dim_cap: u64,
    s_max_cap: u64,
    series_cap: u64,
}

fn limits(unsafe_limits: bool) -> Limits {
    let dim_cap = std::env::var("CIRCTREE_MAX_DIM")
        .ok()
        .and_then(|v| v.parse::<u64>().ok())
        .unwrap_or(DEFAULT_DIM_CAP);
    if unsafe_limits {
        Limits {
            vertex_cap: u64::MAX,
            dim_cap,
            s_max_cap: u64::MAX,
            series_cap: u64::MAX,
        }
    } else {
        Limits {
            vertex_cap: DEFAULT_VERTEX_CAP,
            dim_cap,
            s_max_cap: DEFAULT_S_MAX_CAP,
            series_cap: DEFAULT_SERIES_CAP,
        }
    }
}

fn parse_or_exit(spec: &str, lim: &Limits) -> Result<CirculantFamily, ExitCode> {
    let family = parse_family_spec(spec).map_err(|e| fail(EXIT_USAGE, e))?;
    if family.s_max() > lim.s_max_cap {
        return Err(fail(
            EXIT_USAGE,
            format!(
                "largest jump {} exceeds the default cap {} (use --unsafe-limits)",
                family.s_max(),
                lim.s_max_cap
            ),
        ));
    }
    Ok(family)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Tau {
            spec,
            n,
            verify,
            format,
            unsafe_limits,
        } => cmd_tau(&spec, n, verify, format, unsafe_limits),
        Command::Series {
            spec,
            n,
            oracle,
            format,
            unsafe_limits,
        } => cmd_series(&spec, n, oracle, format, unsafe_limits),
        Command::Genfunc {
            spec,
            var,
            format,
            unsafe_limits,
        } => cmd_genfunc(&spec, var, format, unsafe_limits),
        Command::Verify {
            spec,
            n,
            format,
            unsafe_limits,
        } => cmd_verify(&spec, n, format, unsafe_limits),
        Command::Mahler {
            spec,
            asymptotic,
            format,
        } => cmd_mahler(&spec, asymptotic, format),
    }
}

fn reject_latex(format: Format) -> Result<(), ExitCode> {
    if format == Format::Latex {
        Err(fail(
            EXIT_USAGE,
            "latex output is only available for the genfunc command",
        ))
    } else {
        Ok(())
    }
}

fn cmd_tau(spec: &str, n: u64, verify: bool, format: Format, unsafe_limits: bool) -> ExitCode {
    let lim = limits(unsafe_limits);
    let family = match parse_or_exit(spec, &lim) {
        Ok(f) => f,
        Err(code) => return code,
    };
    if let Err(code) = reject_latex(format) {
        return code;
    }
    if n == 0 {
        return fail(EXIT_USAGE, "n must be at least 1");
    }
    if !verify {
        let tau = match tau_closed_form(&family, n) {
            Ok(t) => t,
            Err(e) => return fail(classify_closed(&e), e),
        };
        match format {
            Format::Plain => println!("{tau}"),
            Format::Json => println!(
                "{}",
                json!({
                    "command": "tau",
                    "family": family.to_string(),
                    "results": [{"n": n, "tau": tau.to_string()}],
                })
            ),
            Format::Latex => unreachable!(),
        }
        return ExitCode::SUCCESS;
    }
    let v = match verified_tau(&family, n, lim.vertex_cap) {
        Ok(v) => v,
        Err(e) => return fail(classify_error(&e), e),
    };
    let agree = v.certificate.agree && v.numeric_ok;
    match format {
        Format::Plain => {
            println!("{}", v.certificate.tau);
            for (path, value) in &v.certificate.paths {
                println!("{path}: {value}");
            }
            println!(
                "numeric: {:.6e} ({})",
                v.numeric,
                if v.numeric_ok { "ok" } else { "MISMATCH" }
            );
            println!(
                "{}",
                if agree {
                    "all paths agree"
                } else {
                    "PATHS DISAGREE"
                }
            );
        }
        Format::Json => {
            let paths: serde_json::Map<String, serde_json::Value> = v
                .certificate
                .paths
                .iter()
                .map(|(k, val)| (k.to_string(), json!(val.to_string())))
                .collect();
            println!(
                "{}",
                json!({
                    "command": "tau",
                    "family": family.to_string(),
                    "results": [{
                        "n": n,
                        "tau": v.certificate.tau.to_string(),
                        "paths": paths,
                        "numeric": v.numeric,
                        "agree": agree,
                    }],
                })
            );
        }
        Format::Latex => unreachable!(),
    }
    if agree {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DISAGREE)
    }
}

fn cmd_series(spec: &str, n: u64, oracle: bool, format: Format, unsafe_limits: bool) -> ExitCode {
    let lim = limits(unsafe_limits);
    let family = match parse_or_exit(spec, &lim) {
        Ok(f) => f,
        Err(code) => return code,
    };
    if let Err(code) = reject_latex(format) {
        return code;
    }
    if n == 0 {
        return fail(EXIT_USAGE, "series length must be at least 1");
    }
    if n > lim.series_cap {
        return fail(
            EXIT_USAGE,
            format!(
                "series length {n} exceeds the cap {} (use --unsafe-limits)",
                lim.series_cap
            ),
        );
    }
    let mut rows = Vec::with_capacity(n as usize);
    let mut any_mismatch = false;
    for i in 1..=n {
        let tau = match tau_closed_form(&family, i) {
            Ok(t) => t,
            Err(e) => return fail(classify_closed(&e), e),
        };
        let oracle_value = if oracle {
            let instance = match GraphInstance::with_vertex_cap(family.clone(), i, lim.vertex_cap) {
                Ok(g) => g,
                Err(e) => return fail(EXIT_USAGE, e),
            };
            let o = tau_oracle(&instance);
            if o != tau {
                any_mismatch = true;
            }
            Some(o)
        } else {
            None
        };
        rows.push((i, tau, oracle_value));
    }
    match format {
        Format::Plain => {
            for (_, tau, oracle_value) in &rows {
                match oracle_value {
                    None => println!("{tau}"),
                    Some(o) => println!("{tau} {o} {}", if o == tau { "ok" } else { "MISMATCH" }),
                }
            }
        }
        Format::Json => {
            let results: Vec<serde_json::Value> = rows
                .iter()
                .map(|(i, tau, oracle_value)| match oracle_value {
                    None => json!({"n": i, "tau": tau.to_string()}),
                    Some(o) => json!({
                        "n": i,
                        "tau": tau.to_string(),
                        "oracle": o.to_string(),
                        "agree": o == tau,
                    }),
                })
                .collect();
            println!(
                "{}",
                json!({
                    "command": "series",
                    "family": family.to_string(),
                    "results": results,
                })
            );
        }
        Format::Latex => unreachable!(),
    }
    if any_mismatch {
        ExitCode::from(EXIT_DISAGREE)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_genfunc(spec: &str, var: Var, format: Format, unsafe_limits: bool) -> ExitCode {
    let lim = limits(unsafe_limits);
    let family = match parse_or_exit(spec, &lim) {
        Ok(f) => f,
        Err(code) => return code,
    };
    let built = match build_genfunc_capped(&family, lim.dim_cap) {
        Ok(b) => b,
        Err(e) => return fail(classify_error(&e), e),
    };
    let (f, var_name) = match var {
        Var::X => (built.f_x.clone(), "x"),
        Var::W => {
            let with_w = match attach_w_form(built.clone()) {
                Ok(r) => r,
                Err(e) => return fail(classify_error(&e), e),
            };
            (with_w.f_w.unwrap(), "w")
        }
    };
    match format {
        Format::Plain => println!("{}", render::ratfun_plain(&f, var_name)),
        Format::Latex => println!("{}", render::ratfun_latex(&f, var_name)),
        Format::Json => println!(
            "{}",
            json!({
                "family": family.to_string(),
                "var": var_name,
                "numerator": render::poly_decimal_strings(f.numer()),
                "denominator": render::poly_decimal_strings(f.denom()),
                "verified_terms": built.verified_terms,
            })
        ),
    }
    ExitCode::SUCCESS
}

fn cmd_verify(spec: &str, n: u64, format: Format, unsafe_limits: bool) -> ExitCode {
    let lim = limits(unsafe_limits);
    let family = match parse_or_exit(spec, &lim) {
        Ok(f) => f,
        Err(code) => return code,
    };
    if let Err(code) = reject_latex(format) {
        return code;
    }
    if n == 0 {
        return fail(EXIT_USAGE, "N must be at least 1");
    }
    let rows = match verify_family(&family, n, lim.vertex_cap, lim.dim_cap) {
        Ok(rows) => rows,
        Err(e) => return fail(classify_error(&e), e),
    };
    let all_passed = rows.iter().all(|r| r.passed);
    match format {
        Format::Plain => {
            for row in &rows {
                println!(
                    "{:<34} {:<4} {}",
                    row.check,
                    if row.passed { "pass" } else { "FAIL" },
                    row.detail
                );
            }
            println!(
                "{}",
                if all_passed {
                    "all checks passed"
                } else {
                    "VERIFICATION FAILED"
                }
            );
        }
        Format::Json => {
            let results: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| json!({"check": r.check, "passed": r.passed, "detail": r.detail}))
                .collect();
            println!(
                "{}",
                json!({
                    "command": "verify",
                    "family": family.to_string(),
                    "results": results,
                })
            );
        }
        Format::Latex => unreachable!(),
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_DISAGREE)
    }
}

fn cmd_mahler(spec: &str, asymptotic: Option<u64>, format: Format) -> ExitCode {
    let lim = limits(false);
    let family = match parse_or_exit(spec, &lim) {
        Ok(f) => f,
        Err(code) => return code,
    };
    if let Err(code) = reject_latex(format) {
        return code;
    }
    let estimate = match mahler_measure(&family) {
        Ok(m) => m,
        Err(e) => return fail(classify_closed(&e), e),
    };
    let ratio = match asymptotic {
        None => None,
        Some(n) => {
            if n == 0 {
                return fail(EXIT_USAGE, "asymptotic N must be at least 1");
            }
            let tau = match tau_closed_form(&family, n) {
                Ok(t) => t,
                Err(e) => return fail(classify_closed(&e), e),
            };
            if num_traits::Zero::is_zero(&tau) {
                return fail(EXIT_USAGE, "asymptotic ratio undefined: tau = 0");
            }
            Some((n, tau_growth_rate(&tau, family.q(), n) / estimate.value))
        }
    };
    match format {
        Format::Plain => {
            println!("{}", render::significant_digits(estimate.value, 10));
            if let Some((n, r)) = ratio {
                println!("asymptotic ratio at n = {n}: {r:.6}");
            }
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("command".into(), json!("mahler"));
            obj.insert("family".into(), json!(family.to_string()));
            let mut result = serde_json::Map::new();
            result.insert(
                "mahler".into(),
                json!(render::significant_digits(estimate.value, 10)),
            );
            if let Some((n, r)) = ratio {
                result.insert("asymptotic_n".into(), json!(n));
                result.insert("ratio".into(), json!(r));
            }
            obj.insert("results".into(), json!([result]));
            println!("{}", serde_json::Value::Object(obj));
        }
        Format::Latex => unreachable!(),
    }
    ExitCode::SUCCESS
}
