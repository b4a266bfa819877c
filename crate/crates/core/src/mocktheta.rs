//! Mock theta functions as truncated q-series, the Appell-Lerch sums they
//! relate to, and the smallest parts function `spt`.
//!
//! Every Eulerian sum is built incrementally: the running quotient of
//! Pochhammer symbols is updated in place by sparse binomial factors, so a
//! series to depth `N` costs `O(N^2)` big-integer additions at most.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::series::{
    eta_product, pochhammer_inf, rank_build, theta_j, theta_valuation, QSeries, RankKind,
};

/// `sign * q^exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QMonomial {
    pub sign: i64,
    pub exp: i64,
}

impl QMonomial {
    pub fn new(sign: i64, exp: i64) -> Self {
        assert!(sign == 1 || sign == -1);
        QMonomial { sign, exp }
    }
}

/// `sum_{n >= first} sign(n) q^{shift(n)} R_n`, where `R_first = init` and
/// `step` turns `R_{n-1}` into `R_n`. `shift` must be increasing.
fn eulerian(
    prec: i64,
    init: QSeries,
    first: i64,
    shift: impl Fn(i64) -> (i64, i64),
    mut step: impl FnMut(&mut QSeries, i64),
) -> QSeries {
    let mut total = QSeries::zeros(0, prec);
    let mut running = init;
    let mut n = first;
    loop {
        if n > first {
            step(&mut running, n);
        }
        let (e, sign) = shift(n);
        if e >= prec {
            break;
        }
        total.add_scaled_shifted(&running, e, sign);
        n += 1;
    }
    total
}

fn geometric(k: i64, prec: i64) -> QSeries {
    let mut s = QSeries::one(prec);
    s.div_one_minus(1, k);
    s
}

/// `psi(q) = sum_{n >= 1} q^{n^2} / (q; q^2)_n`.
pub fn psi_series(prec: i64) -> QSeries {
    eulerian(
        prec,
        geometric(1, prec),
        1,
        |n| (n * n, 1),
        |r, n| r.div_one_minus(1, 2 * n - 1),
    )
}

/// `A(q) = sum_{n >= 0} q^{n+1} (-q^2; q^2)_n / (q; q^2)_{n+1}`.
pub fn a_series(prec: i64) -> QSeries {
    eulerian(
        prec,
        geometric(1, prec),
        0,
        |n| (n + 1, 1),
        |r, n| {
            r.mul_one_plus(1, 2 * n);
            r.div_one_minus(1, 2 * n + 1);
        },
    )
}

/// `A(q) = sum_{n >= 0} q^{(n+1)^2} (-q; q^2)_n / (q; q^2)_{n+1}^2`.
pub fn a_series_squares(prec: i64) -> QSeries {
    let mut init = geometric(1, prec);
    init.div_one_minus(1, 1);
    eulerian(
        prec,
        init,
        0,
        |n| ((n + 1) * (n + 1), 1),
        |r, n| {
            r.mul_one_plus(1, 2 * n - 1);
            r.div_one_minus(1, 2 * n + 1);
            r.div_one_minus(1, 2 * n + 1);
        },
    )
}

/// `V_1(q) = sum_{n >= 0} q^{(n+1)^2} (-q; q^2)_n / (q; q^2)_{n+1}`.
pub fn v1_series(prec: i64) -> QSeries {
    eulerian(
        prec,
        geometric(1, prec),
        0,
        |n| ((n + 1) * (n + 1), 1),
        |r, n| {
            r.mul_one_plus(1, 2 * n - 1);
            r.div_one_minus(1, 2 * n + 1);
        },
    )
}

/// `phi_(q) = sum_{n >= 1} q^n (-q; q)_{2n-1} / (q; q^2)_n`.
pub fn phiminus_series(prec: i64) -> QSeries {
    let mut init = geometric(1, prec);
    init.mul_one_plus(1, 1);
    eulerian(
        prec,
        init,
        1,
        |n| (n, 1),
        |r, n| {
            r.mul_one_plus(1, 2 * n - 2);
            r.mul_one_plus(1, 2 * n - 1);
            r.div_one_minus(1, 2 * n - 1);
        },
    )
}

/// `sigma(q) = sum_{n >= 0} q^{(n+1)(n+2)/2} (-q; q)_n / (q; q^2)_{n+1}`.
pub fn sigma_series(prec: i64) -> QSeries {
    eulerian(
        prec,
        geometric(1, prec),
        0,
        |n| ((n + 1) * (n + 2) / 2, 1),
        |r, n| {
            r.mul_one_plus(1, n);
            r.div_one_minus(1, 2 * n + 1);
        },
    )
}

/// `U(q) = sum_{n >= 0} (-q; q)_n^2 q^{n+1}`, strongly unimodal sequences.
pub fn u_series(prec: i64) -> QSeries {
    eulerian(
        prec,
        QSeries::one(prec),
        0,
        |n| (n + 1, 1),
        |r, n| {
            r.mul_one_plus(1, n);
            r.mul_one_plus(1, n);
        },
    )
}

/// `V(q) = sum_{n >= 0} (-q; q)_n^2 q^n / (q; q^2)_{n+1}`, odd-balanced
/// unimodal sequences.
pub fn v_series(prec: i64) -> QSeries {
    eulerian(
        prec,
        geometric(1, prec),
        0,
        |n| (n, 1),
        |r, n| {
            r.mul_one_plus(1, n);
            r.mul_one_plus(1, n);
            r.div_one_minus(1, 2 * n + 1);
        },
    )
}

/// `S*(q) = sum_{n >= 1} (-1)^n q^{n^2} / (q; q^2)_n`.
pub fn sstar_series(prec: i64) -> QSeries {
    eulerian(
        prec,
        geometric(1, prec),
        1,
        |n| (n * n, if n % 2 == 0 { 1 } else { -1 }),
        |r, n| r.div_one_minus(1, 2 * n - 1),
    )
}

/// `P(q) = J_4^3 / (J_1 J_2)`.
pub fn p_series(prec: i64) -> QSeries {
    eta_product(&[(4, 3), (1, -1), (2, -1)], prec)
}

/// `P(q)` as `(-q; q)_inf (-q^2; q^2)_inf^2 (q^4; q^4)_inf`.
pub fn p_series_product(prec: i64) -> QSeries {
    let a = pochhammer_inf(-1, 1, 1, prec);
    let b = pochhammer_inf(-1, 2, 2, prec);
    let c = pochhammer_inf(1, 4, 4, prec);
    &(&(&a * &b) * &b) * &c
}

/// `P_3(q) = J_6^2 J_2^2 / (J_3 J_1^2)`.
pub fn p3_series(prec: i64) -> QSeries {
    eta_product(&[(6, 2), (2, 2), (3, -1), (1, -2)], prec)
}

/// `P_3(q)` as `(-q; q)_inf^2 (-q^3; q^3)_inf^2 (q^3; q^3)_inf`.
pub fn p3_series_product(prec: i64) -> QSeries {
    let a = pochhammer_inf(-1, 1, 1, prec);
    let b = pochhammer_inf(-1, 3, 3, prec);
    let c = pochhammer_inf(1, 3, 3, prec);
    &(&(&(&a * &a) * &b) * &b) * &c
}

/// The Appell-Lerch sum `m(x, q^base, z)`,
/// `(1 / j(z; q^base)) sum_r (-1)^r q^{base r(r-1)/2} z^r / (1 - q^{base(r-1)} x z)`.
///
/// Each denominator is expanded as a geometric series in whichever of
/// `w` or `1/w` has positive q-order.
pub fn appell_m(x: QMonomial, base: i64, z: QMonomial, prec: i64) -> Result<QSeries> {
    assert!(base >= 1);
    let Some(vj) = theta_valuation(z.sign, z.exp, base) else {
        return Err(Error::InvalidArgument(format!(
            "j(z; q^{base}) vanishes at z = {}q^{}",
            z.sign, z.exp
        )));
    };
    let sum_prec = prec + vj;
    let numer_exp = |r: i64| base * (r * (r - 1) / 2) + z.exp * r;
    let w_exp = |r: i64| base * (r - 1) + x.exp + z.exp;
    // numer_exp(r) >= base r(r-1)/2 - |z.exp| |r|, which passes sum_prec
    // for |r| >= reach and keeps growing from there.
    let floor = |t: i64| base * (t * (t - 1) / 2) - z.exp.abs() * t;
    let mut reach = z.exp.abs() / base + 1;
    while floor(reach) < sum_prec {
        reach += 1;
    }
    let mut terms: Vec<(i64, i64)> = Vec::new();
    for r in -reach..=reach {
        let sign_r = if r % 2 == 0 { 1 } else { -z.sign };
        let ws = x.sign * z.sign;
        let d = w_exp(r);
        let e0 = numer_exp(r);
        match d.signum() {
            1 => {
                let (mut e, mut c) = (e0, sign_r);
                while e < sum_prec {
                    terms.push((e, c));
                    e += d;
                    c *= ws;
                }
            }
            -1 => {
                // 1/(1-w) = -w^{-1} / (1 - w^{-1})
                let (mut e, mut c) = (e0 - d, -sign_r * ws);
                while e < sum_prec {
                    terms.push((e, c));
                    e -= d;
                    c *= ws;
                }
            }
            _ if ws == 1 => return Err(Error::VanishingDenominator { r }),
            _ => return Err(Error::NonIntegral { r }),
        }
    }
    let sum = QSeries::from_terms(terms, sum_prec).normalized();
    let Some(vs) = sum.valuation() else {
        return Ok(QSeries::zero(prec));
    };
    let j = theta_j(z.sign, z.exp, base, prec - vs + 2 * vj);
    let out = &sum * &j.invert()?;
    debug_assert!(out.precision() >= prec);
    Ok(out.truncate(prec))
}

/// `A(q) = -m(q, q^4, q^2)`.
pub fn a_series_appell(prec: i64) -> Result<QSeries> {
    Ok(-appell_m(
        QMonomial::new(1, 1),
        4,
        QMonomial::new(1, 2),
        prec,
    )?)
}

/// `A(q) = q (-q; q^2)_inf / (q^2; q^2)_inf sum_{n >= 0} (-1)^n q^{2n^2 + 3n} / (1 - q^{2n+1})`.
pub fn a_series_ramanujan(prec: i64) -> QSeries {
    let inner = prec - 1;
    let mut terms = Vec::new();
    let mut n = 0;
    while 2 * n * n + 3 * n < inner {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let mut e = 2 * n * n + 3 * n;
        while e < inner {
            terms.push((e, sign));
            e += 2 * n + 1;
        }
        n += 1;
    }
    let sum = QSeries::from_terms(terms, inner);
    let front = &pochhammer_inf(-1, 1, 2, inner) * &eta_product(&[(2, -1)], inner);
    (&front * &sum).shift(1)
}

/// Generating function of `spt(n)`,
/// `sum_{n >= 1} q^n / ((1 - q^n)^2 (q^{n+1}; q)_inf)`.
pub fn spt_series(prec: i64) -> QSeries {
    let mut total = QSeries::zeros(0, prec);
    // tail = 1 / (q^{n+1}; q)_inf, truncated.
    let mut tail = QSeries::one(prec);
    for n in (1..prec).rev() {
        let mut term = tail.truncate(prec - n);
        term.div_one_minus(1, n);
        term.div_one_minus(1, n);
        total.add_scaled_shifted(&term, n, 1);
        tail.div_one_minus(1, n);
    }
    total
}

/// `spt(n)` by walking every partition of `n` and adding the multiplicity
/// of its smallest part.
pub fn spt_enumerate(n: u64) -> u64 {
    fn walk(rest: u64, max_part: u64, last: u64, count: u64) -> u64 {
        if rest == 0 {
            return count;
        }
        (1..=rest.min(max_part))
            .map(|p| walk(rest - p, p, p, if p == last { count + 1 } else { 1 }))
            .sum()
    }
    if n == 0 {
        0
    } else {
        walk(n, n, 0, 0)
    }
}

/// Named series for the command line and the verifier.
pub fn series_by_name(name: &str, prec: i64) -> Result<QSeries> {
    let rank_component = |kind, a| rank_build(kind, prec).component(a);
    Ok(match name {
        "psi" => psi_series(prec),
        "A" => a_series(prec),
        "V1" => v1_series(prec),
        "phiminus" => phiminus_series(prec),
        "sigma" => sigma_series(prec),
        "u" | "U" => u_series(prec),
        "v" | "V" => v_series(prec),
        "spt" => spt_series(prec),
        "Sstar" => sstar_series(prec),
        "P" => p_series(prec),
        "P3" => p3_series(prec),
        "u04" => rank_component(RankKind::U, 0),
        "u14" => rank_component(RankKind::U, 1),
        "u24" => rank_component(RankKind::U, 2),
        "u34" => rank_component(RankKind::U, 3),
        "v04" => rank_component(RankKind::V, 0),
        "v14" => rank_component(RankKind::V, 1),
        "v24" => rank_component(RankKind::V, 2),
        "v34" => rank_component(RankKind::V, 3),
        _ => return Err(Error::UnknownName(name.to_string())),
    })
}

pub const SERIES_NAMES: &[&str] = &[
    "psi", "A", "V1", "phiminus", "sigma", "u", "v", "spt", "Sstar", "P", "P3", "u04", "u14",
    "u24", "u34", "v04", "v14", "v24", "v34",
];

/// Coefficient helper for small tests and the CLI.
pub fn coeff_of(name: &str, n: i64) -> Result<BigInt> {
    Ok(series_by_name(name, n + 1)?.coeff(n))
}
