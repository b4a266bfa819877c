use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::{QSeries, RankSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Identity,
    Congruence,
    Classification,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: i64,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one finite-depth check. A pass means "checked on `range`",
/// nothing more.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub kind: Kind,
    /// Half-open range `[from, to)` of indices that were examined.
    pub range: [i64; 2],
    /// Number of individual comparisons made.
    pub checked: u64,
    pub status: Status,
    pub first_counterexample: Option<Counterexample>,
}

impl VerifyReport {
    pub fn new(name: impl Into<String>, kind: Kind, outcome: Outcome) -> Self {
        let status = if outcome.first.is_none() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerifyReport {
            name: name.into(),
            kind,
            range: [outcome.from, outcome.to],
            checked: outcome.checked,
            status,
            first_counterexample: outcome.first,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }
}

/// Raw result of a comparison before it is labelled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub from: i64,
    pub to: i64,
    pub checked: u64,
    pub first: Option<Counterexample>,
}

impl Outcome {
    pub fn empty(from: i64, to: i64) -> Self {
        Outcome {
            from,
            to,
            checked: 0,
            first: None,
        }
    }

    /// Merges several checks over the same nominal range; the earliest
    /// counterexample (by index) wins.
    pub fn combine(parts: impl IntoIterator<Item = Outcome>) -> Outcome {
        let mut out: Option<Outcome> = None;
        for p in parts {
            out = Some(match out {
                None => p,
                Some(mut acc) => {
                    acc.from = acc.from.min(p.from);
                    acc.to = acc.to.max(p.to);
                    acc.checked += p.checked;
                    acc.first = match (acc.first, p.first) {
                        (Some(a), Some(b)) => Some(if b.n < a.n { b } else { a }),
                        (a, b) => a.or(b),
                    };
                    acc
                }
            });
        }
        out.unwrap_or_else(|| Outcome::empty(0, 0))
    }

    pub fn record(&mut self, n: i64, expected: impl ToString, actual: impl ToString, ok: bool) {
        self.checked += 1;
        if !ok && self.first.as_ref().is_none_or(|c| n < c.n) {
            self.first = Some(Counterexample {
                n,
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }
}

fn need(s: &QSeries, prec: i64) -> Result<()> {
    if s.precision() < prec {
        return Err(Error::Precision {
            needed: prec,
            have: s.precision(),
        });
    }
    Ok(())
}

/// Coefficientwise comparison of `actual` against `expected` on `[lo, prec)`,
/// where `lo` is the lower of the two starting exponents.
pub fn series_eq(expected: &QSeries, actual: &QSeries, prec: i64) -> Result<Outcome> {
    compare(expected, actual, prec, None)
}

/// Like [`series_eq`] but modulo `m`.
pub fn series_cong(expected: &QSeries, actual: &QSeries, m: u32, prec: i64) -> Result<Outcome> {
    compare(expected, actual, prec, Some(m))
}

fn compare(expected: &QSeries, actual: &QSeries, prec: i64, m: Option<u32>) -> Result<Outcome> {
    need(expected, prec)?;
    need(actual, prec)?;
    let (a, b) = (expected.truncate(prec), actual.truncate(prec));
    let from = a.start().min(b.start()).min(prec);
    let hit = match m {
        None => a.first_mismatch(&b),
        Some(m) => a.first_mismatch_mod(&b, m),
    };
    let first = hit.map(|(n, x, y)| Counterexample {
        n,
        expected: x.to_string(),
        actual: y.to_string(),
    });
    Ok(Outcome {
        from,
        to: prec,
        checked: (prec - from) as u64,
        first,
    })
}

/// Equality of two rank series on `[0, prec)`.
pub fn rank_eq(expected: &RankSeries, actual: &RankSeries, prec: i64) -> Result<Outcome> {
    for s in [expected, actual] {
        if s.precision() < prec {
            return Err(Error::Precision {
                needed: prec,
                have: s.precision(),
            });
        }
    }
    let fmt = |v: &[BigInt; 4]| format!("[{}, {}, {}, {}]", v[0], v[1], v[2], v[3]);
    let first = (0..prec).find_map(|n| {
        let (x, y) = (expected.coeff(n), actual.coeff(n));
        (x != y).then(|| Counterexample {
            n,
            expected: fmt(x),
            actual: fmt(y),
        })
    });
    Ok(Outcome {
        from: 0,
        to: prec,
        checked: prec as u64,
        first,
    })
}

/// Residue class used by the classification theorems.
pub fn mod4_class(c: &BigInt) -> &'static str {
    match c
        .mod_floor(&BigInt::from(4))
        .to_u32_digits()
        .1
        .first()
        .copied()
        .unwrap_or(0)
    {
        0 => "0 mod 4",
        2 => "2 mod 4",
        _ => "odd",
    }
}
