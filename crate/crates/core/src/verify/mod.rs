//! Finite-depth verification: identities, congruence sweeps and
//! classification cross-checks, each producing a [`VerifyReport`].

pub mod cache;
pub mod classify;
pub mod congruence;
pub mod identities;
pub mod nptwid;
pub mod report;

pub use classify::check_classification;
pub use congruence::check_congruence;
pub use identities::check_identity;
pub use nptwid::nptwid_hecke_check;
pub use report::{Counterexample, Kind, Status, VerifyReport};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;

/// Depth profile for [`verify_all`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Quick,
    Full,
}

impl Profile {
    /// Lower bound on identity depth.
    pub fn depth(self) -> i64 {
        match self {
            Profile::Quick => 200,
            Profile::Full => 900,
        }
    }
}

/// The congruence instances run by [`verify_all`].
pub const CONGRUENCE_PLAN: &[(&str, &[i64])] = &[
    ("theA4", &[3, 5, 13]),
    ("thmV1mod4", &[5, 13]),
    ("Nphimmod4", &[5, 7, 13]),
    ("Nsigmamod4", &[5, 7, 13]),
    ("thev4", &[3, 5, 13]),
    ("thepsic", &[5, 7, 11, 13, 17]),
    ("conjuA", &[7, 11, 13]),
    ("conjuB", &[7, 11, 13]),
    ("conjuC", &[7, 11, 13]),
    ("conjuCstrong", &[5, 7]),
    ("sptconj", &[5, 7]),
    ("sptmod72", &[5, 7]),
];

/// One line of a [`verify_all`] run: a report, or the reason none was
/// produced.
#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Entry {
    Report(VerifyReport),
    Error { name: String, error: String },
}

impl Entry {
    fn from(name: String, r: Result<VerifyReport>) -> Entry {
        match r {
            Ok(rep) => Entry::Report(rep),
            Err(e) => Entry::Error {
                name,
                error: e.to_string(),
            },
        }
    }

    pub fn passed(&self) -> bool {
        matches!(self, Entry::Report(r) if r.passed())
    }
}

/// Runs every identity, the standard congruence instances, every
/// classification family and the `Ñ` relations for `l = 5, 7`. Entries come
/// back in a fixed order regardless of scheduling.
pub fn verify_all(profile: Profile) -> Vec<Entry> {
    let full = profile == Profile::Full;
    let mut jobs: Vec<Box<dyn Fn() -> Entry + Send + Sync>> = Vec::new();
    for id in identities::REGISTRY {
        let depth = id.default_depth.max(profile.depth());
        jobs.push(Box::new(move || {
            Entry::from(id.name.into(), check_identity(id.name, depth))
        }));
    }
    for &(name, primes) in CONGRUENCE_PLAN {
        let depth = if full {
            congruence::theorem(name).map_or(0, |t| t.default_depth)
        } else {
            500
        };
        for &p in primes {
            jobs.push(Box::new(move || {
                Entry::from(format!("{name}@{p}"), check_congruence(name, p, depth))
            }));
        }
    }
    for &(name, family) in classify::FAMILIES {
        let n_max = if full {
            family.default_nmax()
        } else {
            family.default_nmax().min(2000)
        };
        jobs.push(Box::new(move || {
            Entry::from(name.into(), check_classification(name, n_max))
        }));
    }
    for l in [5, 7] {
        let n_max = if full { nptwid::DEFAULT_NMAX } else { 100 };
        jobs.push(Box::new(move || {
            Entry::from(format!("nptwid@{l}"), nptwid_hecke_check(l, n_max))
        }));
    }
    jobs.par_iter().map(|job| job()).collect()
}
