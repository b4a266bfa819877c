//! Hecke-type relations for `N_psi` modulo 4, stated both on `n` and on the
//! rescaled function `Ñ(m) = N_psi((m + 1)/24)` for `m = 23 (mod 24)`.

use num_bigint::BigInt;
use num_integer::Integer;

use super::cache;
use super::report::{Kind, Outcome, VerifyReport};
use crate::arith::{is_prime, kronecker, s_of};
use crate::error::{Error, Result};
use crate::series::QSeries;

/// Default range for the raw relation; the series depth is `l^2 n_max + 1`.
pub const DEFAULT_NMAX: i64 = 300;

struct Tilde<'a> {
    psi: &'a QSeries,
}

impl Tilde<'_> {
    /// `Ñ(m)`, or `None` when the needed coefficient is beyond the depth.
    fn at(&self, m: i64) -> Option<BigInt> {
        if m < 23 || (m + 1) % 24 != 0 {
            return Some(BigInt::from(0));
        }
        let n = (m + 1) / 24;
        (n < self.psi.precision()).then(|| self.psi.coeff(n))
    }

    /// `Ñ(m / d)`, zero when `d` does not divide `m`.
    fn at_div(&self, m: i64, d: i64) -> Option<BigInt> {
        if m % d == 0 {
            self.at(m / d)
        } else {
            Some(BigInt::from(0))
        }
    }
}

fn cong4(a: &BigInt, b: &BigInt) -> bool {
    (a - b).is_multiple_of(&BigInt::from(4))
}

/// Checks the raw relation for `1 <= n <= n_max` and parts (i)-(iii) on
/// every `m = 24k - 1` whose required coefficients lie within the depth.
pub fn nptwid_hecke_check(l: i64, n_max: i64) -> Result<VerifyReport> {
    if l < 5 || !is_prime(l as u64) {
        return Err(Error::NotApplicable(format!("needs a prime >= 5, got {l}")));
    }
    if n_max < 1 {
        return Err(Error::InvalidArgument(format!(
            "n_max must be positive, got {n_max}"
        )));
    }
    let l2 = l * l;
    let depth = l2 * n_max + 1;
    let psi = cache::series("psi", depth)?;
    let psi = psi.as_ref();
    let s = s_of(l);
    let sign = if s % 2 == 0 { 1 } else { -1 };
    let chi3 = i64::from(kronecker(3, l));
    let at = |n: i64| {
        if n >= 0 {
            psi.coeff(n)
        } else {
            BigInt::from(0)
        }
    };

    let mut raw = Outcome::empty(1, n_max + 1);
    for n in 1..=n_max {
        let tail = if (n + s) % l2 == 0 {
            at((n + s) / l2) * l
        } else {
            BigInt::from(0)
        };
        let lhs =
            at(l2 * n - s) + at(n) * (sign * chi3 * i64::from(kronecker(1 - 24 * n, l))) + tail;
        let rhs = at(n) * (sign * chi3 * (1 + l));
        out_record(&mut raw, n, "raw", &rhs, &lhs, cong4(&lhs, &rhs));
    }

    let t = Tilde { psi };
    let mut parts = Outcome::empty(23, 24 * depth);
    for k in 1..depth {
        let m = 24 * k - 1;
        let Some(base) = t.at(m) else { break };
        if let (Some(up), Some(down)) = (t.at(l2 * m), t.at_div(m, l2)) {
            let lhs = up + &base * (sign * i64::from(kronecker(-3 * m, l))) + down * l;
            let rhs = &base * (sign * chi3 * (1 + l));
            out_record(&mut parts, m, "(i)", &rhs, &lhs, cong4(&lhs, &rhs));
        }
        if m % l != 0 && base.is_even() {
            if let Some(up) = t.at(l2 * m) {
                out_record(&mut parts, m, "(ii)(a)", &base, &up, cong4(&up, &base));
            }
            if let Some(up3) = t.at(l2 * l * m) {
                let zero = BigInt::from(0);
                out_record(&mut parts, m, "(ii)(b)", &zero, &up3, cong4(&up3, &zero));
            }
        }
        if let Some(up4) = t.at(l2 * l2 * m) {
            out_record(&mut parts, m, "(iii)", &base, &up4, cong4(&up4, &base));
        }
    }
    let mut out = Outcome::combine([raw, parts]);
    out.from = 1;
    Ok(VerifyReport::new(
        format!("nptwid@{l}"),
        Kind::Congruence,
        out,
    ))
}

fn out_record(out: &mut Outcome, n: i64, part: &str, expected: &BigInt, actual: &BigInt, ok: bool) {
    out.record(n, format!("{part}: {expected} mod 4"), actual, ok);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes_pass() {
        for l in [5, 7] {
            let r = nptwid_hecke_check(l, 40).unwrap();
            assert!(r.passed(), "{l}: {:?}", r.first_counterexample);
        }
    }

    #[test]
    fn rejects_small_primes() {
        assert!(matches!(
            nptwid_hecke_check(3, 10),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            nptwid_hecke_check(9, 10),
            Err(Error::NotApplicable(_))
        ));
    }
}
