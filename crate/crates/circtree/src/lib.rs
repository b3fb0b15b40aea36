//! Exact spanning-tree counts τ(n) for circulant graph families and their
//! generating functions F(x) = Σ τ(n)xⁿ as reduced rational functions with
//! integer coefficients, satisfying F(x) = F(1/x).
//!
//! The library keeps several independent routes to the same numbers and
//! cross-checks them: a resultant-based closed form, a Matrix-Tree
//! determinant oracle, series coefficients of the built generating function,
//! a Chebyshev-root floating-point formula, and a recurrence fit
//! reconstructed from the series alone.

pub mod chebyshev;
pub mod error;
pub mod family;
pub mod famspec;
pub mod genfunc;
pub mod graph;
pub mod linalg;
pub mod modp;
pub mod numeric;
pub mod poly;
pub mod ratfun;
pub mod render;
pub mod spectral;
pub mod symfunc;
pub mod verify;

pub use error::{AlgError, ClosedFormError, GenFuncError, GraphError};
pub use family::{CirculantFamily, FamilyKind, GraphInstance, TauCertificate, TauPath};
pub use genfunc::{build_genfunc, check_palindromy, fit_genfunc, to_w_form, GenFuncResult};
pub use poly::IntPoly;
pub use ratfun::{RatPoly, SeriesWindow};
pub use spectral::{tau_closed_form, tau_even, tau_odd, SpectralPolys};
