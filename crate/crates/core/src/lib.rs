//! Exact truncated q-series arithmetic for studying mock theta functions
//! modulo 4.
//!
//! The crate is organised bottom-up:
//!
//! - [`series`]: truncated Laurent q-series over `BigInt`, rank series with
//!   coefficients in `Z[z]/(z^4 - 1)`, eta and theta builders.
//! - [`arith`]: factorisation, Kronecker symbols and the small sign tables
//!   used throughout.
//! - [`hurwitz`]: Hurwitz class numbers (scaled by 12) and Humbert-type
//!   generating functions.
//! - [`mocktheta`]: the mock theta functions, Appell-Lerch sums and `spt`.
//! - [`heckerogers`]: the indefinite double-sum engine.
//! - [`pell`]: representation counts for `u^2 - 6v^2 = m`.
//! - [`verify`]: identity registry, congruence sweeps and classification
//!   cross-checks producing deterministic JSON reports.
//! - [`cli`]: the `mockmod4` command line front-end.

pub mod arith;
pub mod cli;
pub mod error;
pub mod heckerogers;
pub mod hurwitz;
pub mod mocktheta;
pub mod pell;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use series::{QSeries, RankSeries};
