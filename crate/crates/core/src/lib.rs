//! Exact verification of m-versions of Rogers-Ramanujan-Slater type identities.
//!
//! Both sides of each identity are expanded as truncated Laurent series in `q`
//! with rational coefficients and compared coefficient by coefficient.

pub mod error;
pub mod fps;
pub mod qkit;
pub mod cfrac;
pub mod polyfam;
pub mod hyperseries;
pub mod catalog;
pub mod cli;

pub use error::{Error, Result};
pub use fps::{eq_to_order, LaurentSeries, Monomial, Precision};
