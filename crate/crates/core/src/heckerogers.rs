//! Indefinite (Hecke-Rogers type) double sums.
//!
//! A [`DoubleSumSpec`] names a region of the lattice, an integer quadratic
//! exponent, a weight and an optional `(1 ± q^k)` cofactor. The engine walks
//! rows in order of increasing `|outer|` and stops once the row's certified
//! lower bound passes the requested precision. Each visited term is checked
//! against that bound, so a wrong bound is reported instead of silently
//! truncating the sum.

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::signs::{eps1, eps_mn, eps_r, sg};
use crate::error::{Error, Result};
use crate::mocktheta::{a_series, phiminus_series, psi_series, u_series, v_series};
use crate::series::{eta_product, pochhammer_inf, QSeries, RankSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    /// `n >= 1`, `1 - n <= m <= n`.
    Hecke,
    /// `n != 0`, `1 - |n| <= m <= |n|`.
    HeckeBilateral,
    /// `n >= outer_first`, `inner_first <= r <= n`.
    Triangle { outer_first: i64, inner_first: i64 },
    /// `n, r >= 0` with sign `+1` and `n, r < 0` with sign `-1`.
    Quadrants,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cofactor {
    One,
    /// `1 + q^{2n}`
    OnePlusQ2n,
    /// `1 - q^{2n}`
    OneMinusQ2n,
}

#[derive(Clone, Copy)]
pub enum Weight {
    Plain(fn(i64, i64) -> i64),
    /// `(sign, power of z)`
    Rank(fn(i64, i64) -> (i64, i64)),
}

/// A double sum `sum_{(n, m) in region} w(n, m) q^{Q(n, m)} * cofactor`.
/// Arguments are always `(outer, inner)`.
#[derive(Clone, Copy)]
pub struct DoubleSumSpec {
    pub name: &'static str,
    pub region: Region,
    pub exponent: fn(i64, i64) -> i64,
    pub weight: Weight,
    pub cofactor: Cofactor,
    /// Lower bound for the exponent over row `outer`; must be nondecreasing
    /// in `|outer|` (checked as the rows are walked).
    pub row_floor: fn(i64) -> i64,
}

#[derive(Clone, Copy, Debug)]
struct Term {
    outer: i64,
    inner: i64,
    exp: i64,
    sign: i64,
}

const MAX_ROWS: i64 = 10_000_000;

fn certificate(spec: &DoubleSumSpec, detail: String) -> Error {
    Error::LoopBound {
        name: spec.name.to_string(),
        detail,
    }
}

fn rows_at(region: Region, t: i64) -> Vec<i64> {
    match region {
        Region::Hecke => vec![t + 1],
        Region::HeckeBilateral => vec![t + 1, -(t + 1)],
        Region::Triangle { outer_first, .. } => vec![outer_first + t],
        Region::Quadrants => vec![t, -(t + 1)],
    }
}

fn lattice(spec: &DoubleSumSpec, limit: i64) -> Result<Vec<Term>> {
    let mut out = Vec::new();
    let mut prev_floor = i64::MIN;
    for t in 0.. {
        if t > MAX_ROWS {
            return Err(certificate(spec, format!("no row bound reached {limit}")));
        }
        let rows = rows_at(spec.region, t);
        let floors: Vec<i64> = rows.iter().map(|&n| (spec.row_floor)(n)).collect();
        let floor = *floors.iter().min().unwrap();
        if floor < prev_floor {
            return Err(certificate(
                spec,
                format!("row floor decreased at |outer| index {t}"),
            ));
        }
        prev_floor = floor;
        if floor >= limit {
            break;
        }
        for (&n, &f) in rows.iter().zip(&floors) {
            if f >= limit {
                continue;
            }
            visit_row(spec, n, f, limit, &mut out)?;
        }
    }
    Ok(out)
}

fn visit_row(
    spec: &DoubleSumSpec,
    n: i64,
    floor: i64,
    limit: i64,
    out: &mut Vec<Term>,
) -> Result<()> {
    let push = |m: i64, sign: i64, out: &mut Vec<Term>| -> Result<i64> {
        let e = (spec.exponent)(n, m);
        if e < floor {
            return Err(certificate(
                spec,
                format!("exponent {e} at ({n}, {m}) is below the row bound {floor}"),
            ));
        }
        if e < limit {
            out.push(Term {
                outer: n,
                inner: m,
                exp: e,
                sign,
            });
        }
        Ok(e)
    };
    match spec.region {
        Region::Hecke | Region::HeckeBilateral => {
            for m in (1 - n.abs())..=n.abs() {
                push(m, 1, out)?;
            }
        }
        Region::Triangle { inner_first, .. } => {
            for r in inner_first..=n {
                push(r, 1, out)?;
            }
        }
        Region::Quadrants => {
            let (mut r, step, sign) = if n >= 0 { (0, 1, 1) } else { (-1, -1, -1) };
            let mut last = i64::MIN;
            loop {
                let e = push(r, sign, out)?;
                if e <= last {
                    return Err(certificate(
                        spec,
                        format!("exponent not increasing along row {n} at inner {r}"),
                    ));
                }
                if e >= limit {
                    break;
                }
                last = e;
                r += step;
            }
        }
    }
    Ok(())
}

/// Cofactor terms as `(multiple of outer, sign)`.
fn cofactor_shifts(c: Cofactor) -> &'static [(i64, i64)] {
    match c {
        Cofactor::One => &[(0, 1)],
        Cofactor::OnePlusQ2n => &[(0, 1), (2, 1)],
        Cofactor::OneMinusQ2n => &[(0, 1), (2, -1)],
    }
}

/// Evaluates a plain-weighted double sum to precision `prec`.
pub fn eval_double_sum(spec: &DoubleSumSpec, prec: i64) -> Result<QSeries> {
    let Weight::Plain(w) = spec.weight else {
        return Err(Error::InvalidArgument(format!(
            "`{}` has rank weights",
            spec.name
        )));
    };
    let mut acc = vec![0i64; prec.max(0) as usize];
    for t in lattice(spec, prec)? {
        let c = t.sign * w(t.outer, t.inner);
        for &(k, s) in cofactor_shifts(spec.cofactor) {
            let e = t.exp + k * t.outer;
            if (0..prec).contains(&e) {
                acc[e as usize] += s * c;
            } else if e < 0 {
                return Err(certificate(spec, format!("negative exponent {e}")));
            }
        }
    }
    Ok(QSeries::from_coeffs(
        0,
        acc.into_iter().map(BigInt::from).collect(),
    ))
}

/// Evaluates a double sum with weights in `Z[z]/(z^4 - 1)`.
pub fn eval_rank_sum(spec: &DoubleSumSpec, prec: i64) -> Result<RankSeries> {
    let Weight::Rank(w) = spec.weight else {
        return Err(Error::InvalidArgument(format!(
            "`{}` has plain weights",
            spec.name
        )));
    };
    let mut out = RankSeries::zero(prec);
    for t in lattice(spec, prec)? {
        let (s, zpow) = w(t.outer, t.inner);
        for &(k, cs) in cofactor_shifts(spec.cofactor) {
            let e = t.exp + k * t.outer;
            if e < 0 {
                return Err(certificate(spec, format!("negative exponent {e}")));
            }
            out.add_term(e, zpow, t.sign * s * cs);
        }
    }
    Ok(out)
}

fn pm(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn q_hecke(n: i64, m: i64) -> i64 {
    n * (3 * n - 1) - 2 * m * m + m
}

// On 1 - |n| <= m <= |n| the subtracted 2m^2 - m peaks at m = |n|, so
// Q >= n(3n - 1) - 2n^2 + |n| = n^2 - n + |n|.
fn floor_hecke(n: i64) -> i64 {
    n * n - n + n.abs()
}

fn q_tri_psi(n: i64, r: i64) -> i64 {
    2 * n * n - n - r * (r - 1) / 2
}

// r <= n gives Q >= 2n^2 - n - n(n - 1)/2 = (3n^2 - n)/2.
fn floor_tri_psi(n: i64) -> i64 {
    (3 * n * n - n) / 2
}

fn q_v(n: i64, r: i64) -> i64 {
    n * n + 2 * n - r * (r + 1) / 2
}

// r <= n gives Q >= (n^2 + 3n)/2.
fn floor_v(n: i64) -> i64 {
    (n * n + 3 * n) / 2
}

fn q_uzq(n: i64, r: i64) -> i64 {
    n * (3 * n + 5) / 2 + 2 * n * r + r * (r + 3) / 2
}

// Rows start at r = 0 (n >= 0) or r = -1 (n < 0); along a row the exponent
// increases with |r| since its r-derivative is 2n + r + 3/2, positive on
// both quadrants for n, r >= 0 or n, r <= -1 with |r| >= 1.
fn floor_uzq(n: i64) -> i64 {
    q_uzq(n, if n >= 0 { 0 } else { -1 })
}

fn q_vzq(n: i64, r: i64) -> i64 {
    n * n + 2 * n + (2 * n + 1) * r + r * (r + 1) / 2
}

fn floor_vzq(n: i64) -> i64 {
    q_vzq(n, if n >= 0 { 0 } else { -1 })
}

/// `(J_1^2/J_2) phi_(q)`.
pub const PHI_HEC: DoubleSumSpec = DoubleSumSpec {
    name: "phi-hec",
    region: Region::Hecke,
    exponent: q_hecke,
    weight: Weight::Plain(|n, _| pm(n - 1)),
    cofactor: Cofactor::OneMinusQ2n,
    row_floor: floor_hecke,
};

/// `(J_1^2/J_2) psi(q)`.
pub const PSI_HEC: DoubleSumSpec = DoubleSumSpec {
    name: "psihec",
    region: Region::Hecke,
    exponent: q_hecke,
    weight: Weight::Plain(|_, m| pm(m - 1)),
    cofactor: Cofactor::OneMinusQ2n,
    row_floor: floor_hecke,
};

/// `J_1 psi(q)`.
pub const J1_PSI: DoubleSumSpec = DoubleSumSpec {
    name: "J1psiid",
    region: Region::Triangle {
        outer_first: 1,
        inner_first: 1,
    },
    exponent: q_tri_psi,
    weight: Weight::Plain(|n, _| pm(n - 1)),
    cofactor: Cofactor::OneMinusQ2n,
    row_floor: floor_tri_psi,
};

/// `J_1 U(q)`.
pub const ALT_U_HEC: DoubleSumSpec = DoubleSumSpec {
    name: "altuhec",
    region: Region::Triangle {
        outer_first: 1,
        inner_first: 1,
    },
    exponent: q_tri_psi,
    weight: Weight::Plain(|_, r| pm(r - 1)),
    cofactor: Cofactor::OnePlusQ2n,
    row_floor: floor_tri_psi,
};

/// `(J_1^2/J_2) U(q)`.
pub const U_HEC: DoubleSumSpec = DoubleSumSpec {
    name: "uhec",
    region: Region::Hecke,
    exponent: q_hecke,
    weight: Weight::Plain(|n, m| sg(m) * pm(n - 1)),
    cofactor: Cofactor::OnePlusQ2n,
    row_floor: floor_hecke,
};

/// `V(1, q) (q; q)_inf / (-q; q)_inf`.
pub const V_HR: DoubleSumSpec = DoubleSumSpec {
    name: "VHR",
    region: Region::Triangle {
        outer_first: 0,
        inner_first: 0,
    },
    exponent: q_v,
    weight: Weight::Plain(|n, r| pm(n + r)),
    cofactor: Cofactor::One,
    row_floor: floor_v,
};

/// `(A(q)/q) (q; q)_inf / (-q; q)_inf`.
pub const A_HR: DoubleSumSpec = DoubleSumSpec {
    name: "AHR",
    region: Region::Triangle {
        outer_first: 0,
        inner_first: 0,
    },
    exponent: q_v,
    weight: Weight::Plain(|n, r| pm(n + r + r * (r + 1) / 2)),
    cofactor: Cofactor::One,
    row_floor: floor_v,
};

/// The `eps(r)`-weighted companion of [`V_HR`].
pub const D0_QV: DoubleSumSpec = DoubleSumSpec {
    name: "d0qv",
    region: Region::Triangle {
        outer_first: 0,
        inner_first: 0,
    },
    exponent: q_v,
    weight: Weight::Plain(|n, r| pm(n + r) * eps_r(r)),
    cofactor: Cofactor::One,
    row_floor: floor_v,
};

pub const D_V: DoubleSumSpec = DoubleSumSpec {
    name: "Dv",
    region: Region::Triangle {
        outer_first: 0,
        inner_first: 0,
    },
    exponent: q_v,
    weight: Weight::Plain(|_, _| 1),
    cofactor: Cofactor::One,
    row_floor: floor_v,
};

pub const D_0: DoubleSumSpec = DoubleSumSpec {
    name: "D0",
    region: Region::HeckeBilateral,
    exponent: q_hecke,
    weight: Weight::Plain(|_, _| 1),
    cofactor: Cofactor::One,
    row_floor: floor_hecke,
};

pub const D_1: DoubleSumSpec = DoubleSumSpec {
    name: "D1",
    weight: Weight::Plain(|n, m| 1 - eps_mn(m, n)),
    ..D_0
};

pub const D_2: DoubleSumSpec = DoubleSumSpec {
    name: "D2",
    weight: Weight::Plain(|n, m| eps_mn(m, n)),
    ..D_0
};

pub const D_U: DoubleSumSpec = DoubleSumSpec {
    name: "Du",
    weight: Weight::Plain(|n, m| eps1(m, n)),
    ..D_0
};

/// `sum S*(n) q^n` in Hecke form.
pub const SSTAR_HEC: DoubleSumSpec = DoubleSumSpec {
    name: "Sstar-hec",
    region: Region::Hecke,
    exponent: q_hecke,
    weight: Weight::Plain(|n, _| pm(n)),
    cofactor: Cofactor::OnePlusQ2n,
    row_floor: floor_hecke,
};

/// `(1 + z) U(z; q) (q; q)_inf / q`.
pub const U_ZQ: DoubleSumSpec = DoubleSumSpec {
    name: "Uzq",
    region: Region::Quadrants,
    exponent: q_uzq,
    weight: Weight::Rank(|n, r| (pm(n), -r)),
    cofactor: Cofactor::One,
    row_floor: floor_uzq,
};

/// `(1 + 1/z) V(z; q) (q; q)_inf / (-q; q)_inf`.
pub const V_ZQ: DoubleSumSpec = DoubleSumSpec {
    name: "Vzqid",
    region: Region::Quadrants,
    exponent: q_vzq,
    weight: Weight::Rank(|n, r| (pm(n), r)),
    cofactor: Cofactor::One,
    row_floor: floor_vzq,
};

pub const SPECS: &[DoubleSumSpec] = &[
    PHI_HEC, PSI_HEC, J1_PSI, ALT_U_HEC, U_HEC, V_HR, A_HR, D0_QV, D_V, D_0, D_1, D_2, D_U,
    SSTAR_HEC, U_ZQ, V_ZQ,
];

pub fn spec_by_name(name: &str) -> Result<&'static DoubleSumSpec> {
    SPECS
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// `(-q; q)_inf / (q; q)_inf`.
pub fn overpartition_factor(prec: i64) -> QSeries {
    let mut s = pochhammer_inf(-1, 1, 1, prec);
    let j1 = crate::series::pentagonal_terms(1, prec);
    s.div_sparse(&j1);
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZCase {
    One,
    I,
}

/// `V(1, q)` or `A(q)/q` from the Hecke-type expansion.
pub fn mortenson_v(zcase: ZCase, prec: i64) -> Result<QSeries> {
    let spec = match zcase {
        ZCase::One => &V_HR,
        ZCase::I => &A_HR,
    };
    Ok(&overpartition_factor(prec) * &eval_double_sum(spec, prec)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DKind {
    D0,
    D1,
    D2,
    Dv,
    Du,
}

pub fn d_series(which: DKind, prec: i64) -> Result<QSeries> {
    let spec = match which {
        DKind::D0 => &D_0,
        DKind::D1 => &D_1,
        DKind::D2 => &D_2,
        DKind::Dv => &D_V,
        DKind::Du => &D_U,
    };
    eval_double_sum(spec, prec)
}

/// `s(n) = d_1(n) - d_2(n)`.
pub fn sdiff(n: i64) -> Result<i64> {
    let d1 = eval_double_sum(&D_1, n + 1)?.coeff(n);
    let d2 = eval_double_sum(&D_2, n + 1)?.coeff(n);
    Ok(i64::try_from(d1 - d2).expect("small coefficient"))
}

/// One of the three mod 4 difference checks.
#[derive(Clone, Debug, Serialize)]
pub struct DiffCheck {
    pub name: &'static str,
    /// The difference of mock theta series.
    #[serde(skip)]
    pub lhs: QSeries,
    /// Twice the matching double sum.
    #[serde(skip)]
    pub rhs: QSeries,
    pub first_mismatch: Option<i64>,
}

/// `phi_ - psi = 2 D_1`, `U - psi = 2 D_u` and `V(1) - A/q = 2 sum eps(r) ...`,
/// all mod 4.
pub fn congruence_diffs(prec: i64) -> Result<[DiffCheck; 3]> {
    let psi = psi_series(prec);
    let check = |name, lhs: QSeries, spec: &DoubleSumSpec| -> Result<DiffCheck> {
        let rhs = eval_double_sum(spec, prec)?.scale_i64(2);
        let first_mismatch = lhs.first_mismatch_mod(&rhs, 4).map(|m| m.0);
        Ok(DiffCheck {
            name,
            lhs,
            rhs,
            first_mismatch,
        })
    };
    let a_over_q = a_series(prec + 1).shift(-1);
    Ok([
        check("lemD1", &phiminus_series(prec) - &psi, &D_1)?,
        check("Upsimod4", &u_series(prec) - &psi, &D_U)?,
        check("d0qv", &v_series(prec) - &a_over_q, &D0_QV)?,
    ])
}

/// `J_1^2 / J_2`, the cofactor of the Hecke forms.
pub fn theta_cofactor(prec: i64) -> QSeries {
    eta_product(&[(1, 2), (2, -1)], prec)
}
