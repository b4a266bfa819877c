//! Counting inequivalent solutions of `u^2 - 6 v^2 = m`.
//!
//! Each class of solutions with `m > 0` has exactly one member with `u > 0`
//! and `-u/3 < v <= u/3`. On that strip `6 v^2 <= 2u^2/3`, so
//! `m = u^2 - 6 v^2 >= u^2 / 3` and every representative has `u^2 <= 3m`.

use serde::Serialize;

use crate::arith::factorize;
use crate::series::QSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PellCount {
    pub m: u64,
    pub count: u64,
}

/// `v` ranges over `-u/3 < v <= u/3`, written with integer bounds.
fn strip(u: i64) -> std::ops::RangeInclusive<i64> {
    let hi = u.div_euclid(3);
    let lo = -((u - 1).div_euclid(3));
    lo..=hi
}

/// Counts strip representatives directly.
pub fn pell_count_bruteforce(m: u64) -> PellCount {
    assert!(m >= 1, "m must be positive");
    let m_i = i64::try_from(m).expect("m fits in i64");
    let mut count = 0;
    let mut u = 1i64;
    while u * u <= 3 * m_i {
        for v in strip(u) {
            if u * u - 6 * v * v == m_i {
                count += 1;
            }
        }
        u += 1;
    }
    PellCount { m, count }
}

/// Multiplicative formula from the prime classes of `m` modulo 24.
pub fn pell_count_lovejoy(m: u64) -> PellCount {
    assert!(m >= 1, "m must be positive");
    let f = factorize(m);
    let mut parity = 0u32;
    let mut count = 1u64;
    for &(p, e) in f.factors() {
        match p {
            2 => parity += e,
            3 => {}
            _ => match p % 24 {
                7 | 17 | 11 | 13 => {
                    if e % 2 == 1 {
                        return PellCount { m, count: 0 };
                    }
                }
                1 | 19 => count *= u64::from(e) + 1,
                5 | 23 => {
                    parity += e;
                    count *= u64::from(e) + 1;
                }
                _ => unreachable!("prime above 3 is coprime to 24"),
            },
        }
    }
    if parity % 2 == 1 {
        count = 0;
    }
    PellCount { m, count }
}

/// `sum_m H_sqrt6(m) q^m` over the strip representatives, to precision `prec`.
pub fn h_sqrt6_series(prec: i64) -> QSeries {
    let mut terms = Vec::new();
    let mut u = 1i64;
    while u * u < 3 * prec {
        for v in strip(u) {
            let e = u * u - 6 * v * v;
            if e < prec {
                terms.push((e, 1));
            }
        }
        u += 1;
    }
    QSeries::from_terms(terms, prec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strip_bounds() {
        assert_eq!(strip(1), 0..=0);
        assert_eq!(strip(3), 0..=1);
        assert_eq!(strip(4), -1..=1);
        assert_eq!(strip(6), -1..=2);
    }

    #[test]
    fn small_counts() {
        for (m, want) in [(1, 1), (2, 0), (19, 2), (25, 3), (46, 2), (10, 2), (14, 0)] {
            assert_eq!(pell_count_bruteforce(m).count, want, "m = {m}");
            assert_eq!(pell_count_lovejoy(m).count, want, "m = {m}");
        }
    }

    #[test]
    fn series_matches_counts() {
        let s = h_sqrt6_series(400);
        for m in 1..400u64 {
            assert_eq!(s.coeff(m as i64), pell_count_bruteforce(m).count.into());
        }
    }
}
