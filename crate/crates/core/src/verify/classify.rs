//! Cross-checks of the mod-4 classification theorems: the residue class of a
//! coefficient is predicted from the factorisation shape of `a n - 1` (or of
//! `n` itself for `3H(n)`) and compared with the directly computed value.

use num_bigint::BigInt;
use serde::Serialize;

use super::cache;
use super::report::{mod4_class, Kind, Outcome, VerifyReport};
use crate::arith::signs::varepsilon;
use crate::arith::{kronecker, shape_one_prime, shape_two_primes};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Family {
    NA,
    NV1,
    Nphi,
    Nsigma,
    NpsiParity,
    NpsiMod4,
    HParity,
    HMod4,
}

pub const FAMILIES: &[(&str, Family)] = &[
    ("NA", Family::NA),
    ("NV1", Family::NV1),
    ("Nphi", Family::Nphi),
    ("Nsigma", Family::Nsigma),
    ("Npsi-parity", Family::NpsiParity),
    ("Npsi-mod4", Family::NpsiMod4),
    ("H-parity", Family::HParity),
    ("H-mod4", Family::HMod4),
];

impl Family {
    pub fn from_name(name: &str) -> Result<Family> {
        FAMILIES
            .iter()
            .find(|(n, _)| *n == name)
            .map(|&(_, f)| f)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn name(self) -> &'static str {
        FAMILIES
            .iter()
            .find(|&&(_, f)| f == self)
            .map(|&(n, _)| n)
            .expect("listed")
    }

    /// Default `n_max`.
    pub fn default_nmax(self) -> i64 {
        match self {
            Family::HParity | Family::HMod4 => 20000,
            _ => 500,
        }
    }
}

type Pair = fn(u64, u64) -> bool;

/// `p1^{4a+1} p2^{4b+1} m^2` with `(p1 | p2) = -1`.
fn plain_pair(p1: u64, p2: u64) -> bool {
    kronecker(p1 as i64, p2 as i64) == -1
}

/// `p1^{4a+1} p2^{4b+1} m^2` with `(p1 | p2) = -eps(p2)`.
fn twisted_pair(p1: u64, p2: u64) -> bool {
    i64::from(kronecker(p1 as i64, p2 as i64)) == -varepsilon(p2 as i64)
}

/// Predicted class of a coefficient attached to `m`.
fn predict(m: u64, pair: Pair, parity_only: bool) -> &'static str {
    if shape_one_prime(m).is_some() {
        "odd"
    } else if parity_only {
        "even"
    } else if shape_two_primes(m, pair).is_some() {
        "2 mod 4"
    } else {
        "0 mod 4"
    }
}

fn observed(c: &BigInt, parity_only: bool) -> &'static str {
    match mod4_class(c) {
        "odd" => "odd",
        _ if parity_only => "even",
        class => class,
    }
}

/// Runs `family` for `1 <= n <= n_max` (for the `H` families, `n = 3 (mod 4)`).
pub fn check_classification(name: &str, n_max: i64) -> Result<VerifyReport> {
    let family = Family::from_name(name)?;
    if n_max < 1 {
        return Err(Error::InvalidArgument(format!(
            "n_max must be positive, got {n_max}"
        )));
    }
    let out = match family {
        Family::HParity | Family::HMod4 => hurwitz_family(n_max, family == Family::HParity),
        _ => {
            let (series, a, pair, parity_only): (&str, i64, Pair, bool) = match family {
                Family::NA => ("A", 8, plain_pair, false),
                Family::NV1 => ("V1", 4, plain_pair, false),
                Family::Nphi => ("phiminus", 24, plain_pair, false),
                Family::Nsigma => ("sigma", 12, plain_pair, false),
                Family::NpsiParity => ("psi", 24, plain_pair, true),
                _ => ("psi", 24, twisted_pair, false),
            };
            let s = cache::series(series, n_max + 1)?;
            let mut out = Outcome::empty(1, n_max + 1);
            for n in 1..=n_max {
                let c = s.coeff(n);
                let expected = predict((a * n - 1) as u64, pair, parity_only);
                let actual = observed(&c, parity_only);
                out.record(n, expected, format!("{actual} ({c})"), expected == actual);
            }
            out
        }
    };
    Ok(VerifyReport::new(family.name(), Kind::Classification, out))
}

fn hurwitz_family(n_max: i64, parity_only: bool) -> Outcome {
    let table = cache::hurwitz(n_max as u64);
    let mut out = Outcome::empty(3, n_max + 1);
    for n in (3..=n_max).step_by(4) {
        let h12 = table.get(n as u64);
        let expected = predict(n as u64, plain_pair, parity_only);
        match h12.three_h() {
            Some(t) => {
                let actual = observed(&BigInt::from(t), parity_only);
                out.record(
                    n,
                    expected,
                    format!("{actual} (3H = {t})"),
                    expected == actual,
                );
            }
            None => out.record(n, expected, format!("12H = {}", h12.value()), false),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families_pass() {
        for &(name, _) in FAMILIES {
            let r = check_classification(name, 200).unwrap();
            assert!(r.passed(), "{name}: {:?}", r.first_counterexample);
        }
    }

    #[test]
    fn twisted_condition_matters() {
        // 24*16 - 1 = 383 is prime; 24*6 - 1 = 143 = 11 * 13 with (11|13) = -1
        // and eps(13) = 1, so N_psi(6) = 2 (mod 4) under both conditions.
        assert_eq!(predict(143, twisted_pair, false), "2 mod 4");
        assert_eq!(predict(383, twisted_pair, false), "odd");
        // 5 * 19 = 95: (19|5) = 1 and eps(5) = -1, so only the twisted form fires.
        assert_eq!(predict(95, plain_pair, false), "0 mod 4");
        assert_eq!(predict(95, twisted_pair, false), "2 mod 4");
    }

    #[test]
    fn unknown_family() {
        assert!(matches!(
            check_classification("NB", 10),
            Err(Error::UnknownName(_))
        ));
    }
}
