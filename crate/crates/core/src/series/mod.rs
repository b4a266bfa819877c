//! Truncated q-series and their builders.

mod build;
mod qseries;
mod rank;

pub use build::{
    convex_range, eta_product, eta_quotient, jacobi_product, pentagonal_terms, pochhammer,
    pochhammer_inf, theta_j, theta_valuation,
};
pub use qseries::QSeries;
pub use rank::{rank_build, RankKind, RankSeries, ZVec};
