//! The named identity registry. Each entry compares two independently built
//! sides coefficientwise (or modulo 4) on exponents below the requested
//! depth.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use super::cache;
use super::report::{rank_eq, series_cong, series_eq, Kind, Outcome, VerifyReport};
use crate::arith::{factorize, kronecker, signs::chi};
use crate::error::{Error, Result};
use crate::heckerogers::{
    congruence_diffs, d_series, eval_double_sum, eval_rank_sum, mortenson_v, overpartition_factor,
    theta_cofactor, DKind, ZCase, ALT_U_HEC, J1_PSI, PHI_HEC, PSI_HEC, SSTAR_HEC, U_HEC, U_ZQ,
    V_ZQ,
};
use crate::hurwitz::{genseries_h, h83_eta, humbert_h2423, humbert_h87, ternary_t};
use crate::mocktheta::{
    a_series, a_series_appell, a_series_ramanujan, a_series_squares, appell_m, p3_series,
    p3_series_product, p_series, p_series_product, phiminus_series, psi_series, sigma_series,
    spt_enumerate, spt_series, sstar_series, u_series, v1_series, v_series, QMonomial,
};
use crate::pell::h_sqrt6_series;
use crate::series::{
    convex_range, eta_product, eta_quotient, pochhammer_inf, theta_j, QSeries, RankKind,
};

/// A registered identity.
#[derive(Clone, Copy, Serialize)]
pub struct Identity {
    pub name: &'static str,
    /// `"equal"` or `"mod 4"`, describing the headline relation.
    pub relation: &'static str,
    /// Depth used when none is given; also the depth the acceptance run
    /// requires.
    pub default_depth: i64,
    #[serde(skip)]
    pub check: fn(i64) -> Result<Outcome>,
}

const ETA: i64 = 500;
const GENERAL: i64 = 200;
const DISSECTION: i64 = 150;

macro_rules! entry {
    ($name:expr, $rel:expr, $depth:expr, $f:expr) => {
        Identity {
            name: $name,
            relation: $rel,
            default_depth: $depth,
            check: $f,
        }
    };
}

pub const REGISTRY: &[Identity] = &[
    entry!("pentprod", "equal", ETA, pentprod),
    entry!("triangprod", "equal", ETA, triangprod),
    entry!("quinpapp", "equal", ETA, quinpapp),
    entry!("theta_mod4", "mod 4", ETA, theta_mod4),
    entry!("H83", "equal", ETA, h83),
    entry!("p11", "equal", ETA, p11),
    entry!("p19", "equal", ETA, p19),
    entry!("p7", "equal", ETA, p7),
    entry!("p7a", "equal", GENERAL, p7a),
    entry!("H87", "equal", GENERAL, h87),
    entry!("H2423", "equal", GENERAL, h2423),
    entry!("Aqdef-two-forms", "equal", GENERAL, aqdef),
    entry!("Aqap", "equal", GENERAL, aqap),
    entry!("Aqm", "equal", GENERAL, aqm),
    entry!("phi-qm", "equal", GENERAL, phi_qm),
    entry!("m-complement", "equal", GENERAL, m_complement),
    entry!("V1q", "equal", GENERAL, v1q),
    entry!("Pq1-negq-mod4", "mod 4", ETA, pq1),
    entry!("sigmaq", "equal", GENERAL, sigmaq),
    entry!("Pq2-mod4", "mod 4", ETA, pq2),
    entry!("mpG", "equal", DISSECTION, mpg),
    entry!("lmphi", "equal", DISSECTION, lmphi),
    entry!("lmphi2", "equal", DISSECTION, lmphi2),
    entry!("mqp5", "equal", ETA, mqp5),
    entry!("NAH-mod4", "mod 4", GENERAL, nah),
    entry!("NV1H-mod4", "mod 4", GENERAL, nv1h),
    entry!("NphiH-mod4", "mod 4", GENERAL, nphih),
    entry!("NsigmaH-mod4", "mod 4", GENERAL, nsigmah),
    entry!("Vzqid", "equal", GENERAL, vzqid),
    entry!("Vzqid(z=1)", "equal", GENERAL, vzqid_one),
    entry!("Vzqid(z=i)", "equal", GENERAL, vzqid_i),
    entry!("VHR", "equal", GENERAL, vhr),
    entry!("AHR", "equal", GENERAL, ahr),
    entry!("AVi", "equal", GENERAL, avi),
    entry!("phi-hec", "equal", GENERAL, phi_hec),
    entry!("psihec", "equal", GENERAL, psihec),
    entry!("J1psiid", "equal", GENERAL, j1psi),
    entry!("altuhec", "equal", GENERAL, altuhec),
    entry!("uhec", "equal", GENERAL, uhec),
    entry!("Uzq", "equal", GENERAL, uzq),
    entry!("Upsiid", "equal", GENERAL, upsiid),
    entry!("D0-split", "equal", GENERAL, d0_split),
    entry!("lemD1-mod4", "mod 4", GENERAL, lemd1),
    entry!("Upsimod4-mod4", "mod 4", GENERAL, upsimod4),
    entry!("d0qv-mod4", "mod 4", GENERAL, d0qv),
    entry!("u024psi", "equal", GENERAL, u024psi),
    entry!("un0124", "equal", GENERAL, un0124),
    entry!("unpsi", "equal", GENERAL, unpsi),
    entry!("H6d0id", "equal", GENERAL, h6d0id),
    entry!("corpell1", "equal", GENERAL, corpell1),
    entry!("lempell2", "equal", GENERAL, lempell2),
    entry!("Sstar-hec", "equal", GENERAL, sstar_hec),
    entry!("lemdv", "equal", GENERAL, lemdv),
    entry!("sptPsimod4", "mod 4", GENERAL, spt_psi),
    entry!("spt-genfun-vs-oracle", "equal", GENERAL, spt_oracle),
];

pub fn identity(name: &str) -> Result<&'static Identity> {
    REGISTRY
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Runs the named identity on exponents `< depth`.
pub fn check_identity(name: &str, depth: i64) -> Result<VerifyReport> {
    let entry = identity(name)?;
    if depth < 1 {
        return Err(Error::InvalidArgument(format!(
            "depth must be positive, got {depth}"
        )));
    }
    Ok(VerifyReport::new(
        name,
        Kind::Identity,
        (entry.check)(depth)?,
    ))
}

fn eta(f: &[(i64, i32)], n: i64) -> QSeries {
    eta_product(f, n)
}

fn sum_over(f: impl Fn(i64) -> i64, vertex: i64, sign: impl Fn(i64) -> i64, n: i64) -> QSeries {
    QSeries::from_terms(
        convex_range(&f, vertex, n)
            .into_iter()
            .map(|k| (f(k), sign(k))),
        n,
    )
}

fn alt(k: i64) -> i64 {
    if k.is_even() {
        1
    } else {
        -1
    }
}

/// `sum_{k in Z} q^{k(3k+1)/2}`.
fn pent_sum(n: i64) -> QSeries {
    sum_over(|k| k * (3 * k + 1) / 2, 0, |_| 1, n)
}

/// `sum_{k >= 0} q^{b k(k+1)/2}`.
fn tri_sum(b: i64, n: i64) -> QSeries {
    let terms = (0..)
        .map(|k| b * k * (k + 1) / 2)
        .take_while(|&e| e < n)
        .map(|e| (e, 1));
    QSeries::from_terms(terms, n)
}

fn one(n: i64) -> QSeries {
    QSeries::one(n)
}

fn pentprod(n: i64) -> Result<Outcome> {
    let euler = sum_over(|k| k * (3 * k + 1) / 2, 0, alt, n);
    Ok(Outcome::combine([
        series_eq(
            &eta(&[(3, 2), (2, 1), (6, -1), (1, -1)], n),
            &pent_sum(n),
            n,
        )?,
        series_eq(&eta(&[(1, 1)], n), &euler, n)?,
    ]))
}

fn triangprod(n: i64) -> Result<Outcome> {
    series_eq(&eta(&[(2, 2), (1, -1)], n), &tri_sum(1, n), n)
}

fn quinpapp(n: i64) -> Result<Outcome> {
    let lhs = &theta_j(1, 5, 12, n) + &theta_j(1, 1, 12, n - 1).shift(1);
    let rhs = &pochhammer_inf(-1, 1, 2, n) * &eta(&[(2, 1)], n);
    series_eq(&rhs, &lhs, n)
}

fn theta_mod4(n: i64) -> Result<Outcome> {
    let a = eta(&[(1, 2), (2, -1)], n);
    let b = eta(&[(2, 5), (4, -2), (1, -2)], n);
    let c = eta(&[(1, 4), (2, -2)], n);
    // the bilateral sum counts each k != 0 twice, which is the 2 in 1 + 2 sum
    let squares = |sign: fn(i64) -> i64| sum_over(|k| k * k, 0, sign, n);
    let two = |s: &QSeries| s.scale_i64(2);
    Ok(Outcome::combine([
        series_eq(&squares(alt), &a, n)?,
        series_eq(&squares(|_| 1), &b, n)?,
        // mod 2 statements, doubled so every part is read modulo 4
        series_cong(&two(&one(n)), &two(&a), 4, n)?,
        series_cong(&two(&one(n)), &two(&b), 4, n)?,
        series_cong(&one(n), &c, 4, n)?,
    ]))
}

fn h_gen(a: u64, b: u64, n: i64) -> Result<QSeries> {
    genseries_h(a, b, n)
}

fn h83(n: i64) -> Result<Outcome> {
    let h = h_gen(8, 3, n)?;
    Ok(Outcome::combine([
        series_eq(&h83_eta(n), &h, n)?,
        series_eq(&tri_sum(1, n).pow(3).scale_i64(4), &h, n)?,
    ]))
}

fn p11(n: i64) -> Result<Outcome> {
    let h = h_gen(24, 11, n)?;
    let theta = &pent_sum(n).pow(2) * &tri_sum(3, n);
    Ok(Outcome::combine([
        series_eq(&eta(&[(3, 3), (2, 2), (1, -2)], n).scale_i64(12), &h, n)?,
        series_eq(&theta.scale_i64(12), &h, n)?,
    ]))
}

fn p19(n: i64) -> Result<Outcome> {
    let h = h_gen(24, 19, n)?;
    let theta = &pent_sum(n) * &tri_sum(3, n).pow(2);
    Ok(Outcome::combine([
        series_eq(&eta(&[(6, 3), (2, 1), (1, -1)], n).scale_i64(12), &h, n)?,
        series_eq(&theta.scale_i64(12), &h, n)?,
    ]))
}

fn p7(n: i64) -> Result<Outcome> {
    let h = h_gen(24, 7, n)?;
    let theta = &pent_sum(n) * &tri_sum(1, n).pow(2);
    Ok(Outcome::combine([
        series_eq(
            &eta(&[(3, 2), (2, 5), (6, -1), (1, -3)], n).scale_i64(12),
            &h,
            n,
        )?,
        series_eq(&theta.scale_i64(12), &h, n)?,
    ]))
}

/// `t(m) = 8 (1 + (m|3)) H(m)` for `m = 8k + 7`, `k < depth`, `9 ∤ m`,
/// compared as `3 t(m) = 2 (1 + (m|3)) 12H(m)`.
fn p7a(n: i64) -> Result<Outcome> {
    let table = cache::hurwitz(8 * n as u64 + 7);
    let mut out = Outcome::empty(0, n);
    for k in 0..n {
        let m = 8 * k + 7;
        if m % 9 == 0 {
            continue;
        }
        let expected = 2 * (1 + kronecker(m, 3) as i64) * table.get(m as u64).0;
        let actual = 3 * ternary_t(m as u64) as i64;
        out.record(k, expected, actual, expected == actual);
    }
    Ok(out)
}

fn h87(n: i64) -> Result<Outcome> {
    series_eq(&h_gen(8, 7, n)?, &humbert_h87(n), n)
}

fn h2423(n: i64) -> Result<Outcome> {
    series_eq(&h_gen(24, 23, n)?, &humbert_h2423(n), n)
}

fn aqdef(n: i64) -> Result<Outcome> {
    series_eq(&a_series(n), &a_series_squares(n), n)
}

fn aqap(n: i64) -> Result<Outcome> {
    series_eq(&a_series(n), &a_series_ramanujan(n), n)
}

fn aqm(n: i64) -> Result<Outcome> {
    series_eq(&a_series(n), &a_series_appell(n)?, n)
}

fn m(xs: i64, xe: i64, base: i64, zs: i64, ze: i64, n: i64) -> Result<QSeries> {
    appell_m(QMonomial::new(xs, xe), base, QMonomial::new(zs, ze), n)
}

fn phi_qm(n: i64) -> Result<Outcome> {
    let rhs = &(-m(1, 1, 3, 1, 1, n)?) - &eta_quotient(1, &[(6, 6), (2, -2), (3, -3)], n);
    series_eq(&phiminus_series(n), &rhs, n)
}

/// `m(x, q, z) + m(q/x, q, q/z) = 1` at the two specialisations used for the
/// dissection of `A(-q)`.
fn m_complement(n: i64) -> Result<Outcome> {
    let first = &m(1, 2, 3, 1, 2, n)? + &m(1, 1, 3, 1, 1, n)?;
    let second = &m(-1, 7, 12, 1, 8, n)? + &m(-1, 5, 12, 1, 4, n)?;
    Ok(Outcome::combine([
        series_eq(&one(n), &first, n)?,
        series_eq(&one(n), &second, n)?,
    ]))
}

fn half_up(n: i64) -> i64 {
    n / 2 + 1
}

fn v1q(n: i64) -> Result<Outcome> {
    let h = half_up(n);
    let rhs = &a_series(h).dilate(2) + &p_series(h).dilate(2).shift(1);
    series_eq(&v1_series(n), &rhs, n)
}

fn pq1(n: i64) -> Result<Outcome> {
    let p = p_series(n);
    Ok(Outcome::combine([
        series_eq(&p, &p_series_product(n), n)?,
        series_cong(&eta(&[(2, 6), (1, -3)], n), &p.negate_q(), 4, n)?,
    ]))
}

fn sigmaq(n: i64) -> Result<Outcome> {
    let h = half_up(n);
    let rhs = &phiminus_series(h).dilate(2) + &p3_series(h).dilate(2).shift(1);
    Ok(Outcome::combine([
        series_eq(&sigma_series(n), &rhs, n)?,
        series_eq(&p3_series(n), &p3_series_product(n), n)?,
    ]))
}

fn pq2(n: i64) -> Result<Outcome> {
    series_cong(&eta(&[(3, 3), (2, 2), (1, -2)], n), &p3_series(n), 4, n)
}

const G1_RESULT: &[(i64, i32)] = &[(12, 2), (6, 1), (4, 2), (2, 1), (24, -2), (8, -2), (1, -1)];
const G2_RESULT: &[(i64, i32)] = &[(6, 2), (4, 10), (1, 6), (8, -4), (3, -1), (2, -12)];

/// The four `U_3` evaluations behind the dissection of `A(-q)`.
fn mpg(n: i64) -> Result<Outcome> {
    let n3 = 3 * n;
    let g1 = eta_quotient(
        -3,
        &[
            (36, 1),
            (24, 1),
            (12, 1),
            (6, 1),
            (2, 1),
            (72, -2),
            (8, -1),
            (3, -1),
        ],
        n3,
    );
    let g2 = eta(&[(4, 10), (1, 1), (8, -4), (2, -6)], n3);
    let u1 = eta(
        &[(24, 3), (2, 1), (36, -1), (18, -1), (12, -1), (8, -1)],
        n3,
    );
    let u2 = eta(
        &[
            (24, 4),
            (4, 10),
            (9, 1),
            (6, 12),
            (1, 1),
            (18, -2),
            (12, -10),
            (8, -4),
            (3, -6),
            (2, -6),
        ],
        n3,
    );
    Ok(Outcome::combine([
        series_eq(&eta_quotient(-1, G1_RESULT, n), &g1.up(3), n)?,
        series_eq(&eta(G2_RESULT, n), &g2.up(3), n)?,
        series_eq(&one(n), &u1.up(3), n)?,
        series_eq(&one(n), &u2.up(3), n)?,
    ]))
}

/// `q J_6^2 J_4^8 J_1^2 / (J_3 J_2^10)`.
fn lmphi_tail(n: i64) -> QSeries {
    eta_quotient(1, &[(6, 2), (4, 8), (1, 2), (3, -1), (2, -10)], n)
}

fn lmphi(n: i64) -> Result<Outcome> {
    let lhs = cache::series("A", 3 * n)?.truncate(3 * n).negate_q().up(3);
    let rhs = &phiminus_series(n) - &lmphi_tail(n).scale_i64(4);
    series_eq(&rhs, &lhs, n)
}

const MQP5_RESULT: &[(i64, i32)] = &[
    (12, 5),
    (8, 1),
    (3, 3),
    (2, 4),
    (24, -3),
    (6, -4),
    (4, -3),
    (1, -2),
];

/// The eta-quotient identity closing the dissection, multiplied through by 2.
fn lmphi2(n: i64) -> Result<Outcome> {
    let t1 = eta_quotient(-1, G1_RESULT, n);
    let t2 = eta(G2_RESULT, n);
    let t3 = eta_quotient(1, &[(6, 6), (3, -3), (2, -2)], n).scale_i64(2);
    let t4 = eta_quotient(-1, MQP5_RESULT, n);
    let t5 = eta_quotient(1, &[(12, 3), (3, 3), (2, 1), (6, -3), (4, -1), (1, -2)], n).scale_i64(4);
    let lhs = &(&(&(&t1 + &t2) + &t3) - &t4) - &t5;
    series_eq(&lmphi_tail(n).scale_i64(-8), &lhs, n)
}

/// `2 P_1(q) + 2 P_2(q) / q` against its eta-quotient, using
/// `j(-1; q^12) / 2 = J_24^2 / J_12`.
fn mqp5(n: i64) -> Result<Outcome> {
    let w = n + 1;
    let half_j = eta(&[(24, 2), (12, -1)], w);
    let numer = &(&eta(&[(12, 3)], w) * &theta_j(-1, 4, 12, w)) * &theta_j(1, 9, 12, w);
    let denom = &(&theta_j(1, 4, 12, w) * &half_j) * &theta_j(-1, 9, 12, w);
    let common = numer.div(&denom)?;
    let p1 = common.div(&theta_j(1, 5, 12, w))?;
    let p2 = common.div(&theta_j(1, 1, 12, w))?.shift(-1);
    Ok(Outcome::combine([
        series_eq(&theta_j(-1, 0, 12, n), &half_j.scale_i64(2), n)?,
        series_eq(&eta_quotient(-1, MQP5_RESULT, n), &(&p1 + &p2), n)?,
    ]))
}

/// `c(n) ≡ sign(n) H(a n - 1) (mod 4)` for `1 <= n < depth`, compared as
/// `3 c(n) ≡ sign(n) 3H (mod 4)` so that `3H(3) = 1` stays integral.
fn against_hurwitz(series: &QSeries, a: i64, sign: impl Fn(i64) -> i64, n: i64) -> Result<Outcome> {
    let table = cache::hurwitz((a * n) as u64);
    let four = BigInt::from(4);
    let mut out = Outcome::empty(1, n);
    for k in 1..n {
        let h12 = table.get((a * k - 1) as u64);
        let Some(three_h) = h12.three_h() else {
            out.record(
                k,
                format!("12H = {}", h12.value()),
                "non-integral 3H",
                false,
            );
            continue;
        };
        let expected = BigInt::from(sign(k) * three_h).mod_floor(&four);
        let actual = (series.coeff(k) * BigInt::from(3)).mod_floor(&four);
        out.record(k, &expected, &actual, expected == actual);
    }
    Ok(out)
}

fn nah(n: i64) -> Result<Outcome> {
    against_hurwitz(&a_series(n), 8, |k| -alt(k), n)
}

fn nv1h(n: i64) -> Result<Outcome> {
    against_hurwitz(&v1_series(n), 4, chi, n)
}

fn nphih(n: i64) -> Result<Outcome> {
    against_hurwitz(&phiminus_series(n), 24, |_| -1, n)
}

fn nsigmah(n: i64) -> Result<Outcome> {
    against_hurwitz(&sigma_series(n), 12, |k| -alt(k), n)
}

/// Both sides of the Mortenson expansion as elements of `Z[z]/(z^4-1)[[q]]`:
/// `(1 + 1/z) V(z; q)` and the product with the quadrant sum.
fn vzq_sides(n: i64) -> Result<(crate::RankSeries, crate::RankSeries)> {
    let v = cache::rank(RankKind::V, n)?;
    let lhs = v.add(&v.mul_z(-1));
    let rhs = eval_rank_sum(&V_ZQ, n)?.mul_series(&overpartition_factor(n));
    Ok((lhs, rhs))
}

fn vzqid(n: i64) -> Result<Outcome> {
    let (lhs, rhs) = vzq_sides(n)?;
    rank_eq(&rhs, &lhs, n)
}

/// At `z = 1`: `2 V(1; q)` against the one-variable `v` series.
fn vzqid_one(n: i64) -> Result<Outcome> {
    let (_, rhs) = vzq_sides(n)?;
    series_eq(&v_series(n).scale_i64(2), &rhs.at_one(), n)
}

/// At `z = i`: `(1 - i) A(q)/q`, real part `A/q` and imaginary part `-A/q`.
fn vzqid_i(n: i64) -> Result<Outcome> {
    let (_, rhs) = vzq_sides(n)?;
    let (re, im) = rhs.at_i();
    let a_over_q = a_series(n + 1).shift(-1);
    Ok(Outcome::combine([
        series_eq(&a_over_q, &re, n)?,
        series_eq(&-&a_over_q, &im, n)?,
    ]))
}

fn vhr(n: i64) -> Result<Outcome> {
    series_eq(&v_series(n), &mortenson_v(ZCase::One, n)?, n)
}

fn ahr(n: i64) -> Result<Outcome> {
    series_eq(&a_series(n + 1).shift(-1), &mortenson_v(ZCase::I, n)?, n)
}

/// `q V(i; q) = A(q)` straight from the rank series.
fn avi(n: i64) -> Result<Outcome> {
    let (re, im) = cache::rank(RankKind::V, n)?.at_i();
    Ok(Outcome::combine([
        series_eq(&a_series(n + 1).shift(-1), &re, n)?,
        series_eq(&QSeries::zero(n), &im, n)?,
    ]))
}

fn hecke(spec: &crate::heckerogers::DoubleSumSpec, lhs: QSeries, n: i64) -> Result<Outcome> {
    series_eq(&eval_double_sum(spec, n)?, &lhs, n)
}

fn phi_hec(n: i64) -> Result<Outcome> {
    hecke(&PHI_HEC, &theta_cofactor(n) * &phiminus_series(n), n)
}

fn psihec(n: i64) -> Result<Outcome> {
    hecke(&PSI_HEC, &theta_cofactor(n) * &psi_series(n), n)
}

fn j1psi(n: i64) -> Result<Outcome> {
    hecke(&J1_PSI, &eta(&[(1, 1)], n) * &psi_series(n), n)
}

fn altuhec(n: i64) -> Result<Outcome> {
    hecke(&ALT_U_HEC, &eta(&[(1, 1)], n) * &u_series(n), n)
}

fn uhec(n: i64) -> Result<Outcome> {
    hecke(&U_HEC, &theta_cofactor(n) * &u_series(n), n)
}

/// `(1 + z) U(z; q) = q / (q; q)_inf * (quadrant sum)` in `Z[z]/(z^4-1)`.
fn uzq(n: i64) -> Result<Outcome> {
    let u = cache::rank(RankKind::U, n)?;
    let lhs = u.add(&u.mul_z(1));
    let rhs = eval_rank_sum(&U_ZQ, n)?
        .shift(1)
        .mul_series(&eta(&[(1, -1)], n));
    rank_eq(&rhs, &lhs, n)
}

/// `U(±i; q) = psi(q)`.
fn upsiid(n: i64) -> Result<Outcome> {
    let (re, im) = cache::rank(RankKind::U, n)?.at_i();
    Ok(Outcome::combine([
        series_eq(&psi_series(n), &re, n)?,
        series_eq(&QSeries::zero(n), &im, n)?,
    ]))
}

fn d0_split(n: i64) -> Result<Outcome> {
    let sum = &d_series(DKind::D1, n)? + &d_series(DKind::D2, n)?;
    series_eq(&d_series(DKind::D0, n)?, &sum, n)
}

fn diff(n: i64, which: usize) -> Result<Outcome> {
    let c = &congruence_diffs(n)?[which];
    series_cong(&c.rhs, &c.lhs, 4, n)
}

fn lemd1(n: i64) -> Result<Outcome> {
    diff(n, 0)
}

fn upsimod4(n: i64) -> Result<Outcome> {
    diff(n, 1)
}

fn d0qv(n: i64) -> Result<Outcome> {
    diff(n, 2)
}

fn u_components(n: i64) -> Result<[QSeries; 4]> {
    let u = cache::rank(RankKind::U, n)?;
    Ok(std::array::from_fn(|a| u.component(a).truncate(n)))
}

fn u024psi(n: i64) -> Result<Outcome> {
    let [u0, u1, u2, u3] = u_components(n)?;
    Ok(Outcome::combine([
        series_eq(&psi_series(n), &(&u0 - &u2), n)?,
        series_eq(&u1, &u3, n)?,
    ]))
}

fn un0124(n: i64) -> Result<Outcome> {
    let [u0, u1, u2, _] = u_components(n)?;
    series_eq(&u_series(n), &(&(&u0 + &u1.scale_i64(2)) + &u2), n)
}

fn unpsi(n: i64) -> Result<Outcome> {
    let [u0, u1, _, _] = u_components(n)?;
    let lhs = &u_series(n) + &psi_series(n);
    series_eq(&(&u0 + &u1).scale_i64(2), &lhs, n)
}

/// `H_sqrt6(48k - 2) = 2 d_0(k)` for `1 <= k < depth`.
fn h6d0id(n: i64) -> Result<Outcome> {
    let h = h_sqrt6_series(48 * n);
    let d0 = d_series(DKind::D0, n)?;
    let mut out = Outcome::empty(1, n);
    for k in 1..n {
        let expected = d0.coeff(k) * 2;
        let actual = h.coeff(48 * k - 2);
        out.record(k, &expected, &actual, expected == actual);
    }
    Ok(out)
}

/// Splits `24k - 1` by a residue predicate on its primes: returns the
/// exponents of primes satisfying `keep`, or `None` if some other prime has
/// odd exponent.
fn split_exponents(m: u64, keep: impl Fn(u64) -> bool) -> Option<Vec<u32>> {
    let mut kept = Vec::new();
    for &(p, e) in factorize(m).factors() {
        if keep(p % 24) {
            kept.push(e);
        } else if e % 2 == 1 {
            return None;
        }
    }
    Some(kept)
}

/// `d_0(k)` equals the prime-class formula for `1 <= k < depth`.
fn corpell1(n: i64) -> Result<Outcome> {
    let d0 = d_series(DKind::D0, n)?;
    let mut out = Outcome::empty(1, n);
    for k in 1..n {
        let expected = match split_exponents(24 * k as u64 - 1, |r| matches!(r, 1 | 5 | 19 | 23)) {
            None => BigInt::from(0),
            Some(es) => BigInt::from(es.iter().map(|&e| u64::from(e) + 1).product::<u64>() / 2),
        };
        let actual = d0.coeff(k);
        out.record(k, &expected, &actual, expected == actual);
    }
    Ok(out)
}

/// `|s(k)|` equals the prime-class formula, and `s(k) = (-1)^{k+1} S*(k)`.
fn lempell2(n: i64) -> Result<Outcome> {
    let s = &d_series(DKind::D1, n)? - &d_series(DKind::D2, n)?;
    let sstar = sstar_series(n);
    let mut formula = Outcome::empty(1, n);
    let mut relation = Outcome::empty(1, n);
    for k in 1..n {
        let expected = match split_exponents(24 * k as u64 - 1, |r| matches!(r, 1 | 23)) {
            None => BigInt::from(0),
            Some(es) => BigInt::from(es.iter().map(|&e| u64::from(e) + 1).product::<u64>() / 2),
        };
        let actual = s.coeff(k);
        let abs = if actual < BigInt::from(0) {
            -&actual
        } else {
            actual.clone()
        };
        formula.record(k, &expected, &abs, expected == abs);
        let signed = sstar.coeff(k) * -alt(k);
        relation.record(k, &signed, &actual, signed == actual);
    }
    Ok(Outcome::combine([formula, relation]))
}

fn sstar_hec(n: i64) -> Result<Outcome> {
    series_eq(&eval_double_sum(&SSTAR_HEC, n)?, &sstar_series(n), n)
}

/// `d_v(k) = 0` whenever a prime `p = 3, 5 (mod 8)` divides `8k + 7` exactly once.
fn lemdv(n: i64) -> Result<Outcome> {
    let dv = d_series(DKind::Dv, n)?;
    let mut out = Outcome::empty(0, n);
    for k in 0..n {
        let f = factorize(8 * k as u64 + 7);
        if f.factors()
            .iter()
            .any(|&(p, e)| e == 1 && matches!(p % 8, 3 | 5))
        {
            let actual = dv.coeff(k);
            out.record(k, 0, &actual, actual == BigInt::from(0));
        }
    }
    Ok(out)
}

/// `spt(k) ≡ (-1)^{k-1} N_psi(k) (mod 4)`.
fn spt_psi(n: i64) -> Result<Outcome> {
    let psi = psi_series(n);
    series_cong(&-&psi.negate_q(), &spt_series(n), 4, n)
}

/// Exhaustive partition walk for `k <= 60`, and above that a count by
/// smallest part: `spt(k) = sum_{s, j >= 1} j p_{>s}(k - j s)`.
fn spt_oracle(n: i64) -> Result<Outcome> {
    let gen = spt_series(n);
    let by_part = spt_by_smallest_part(n.max(1) as usize - 1);
    let mut out = Outcome::empty(1, n);
    for k in 1..n {
        let expected = if k <= 60 {
            BigInt::from(spt_enumerate(k as u64))
        } else {
            BigInt::from(by_part[k as usize])
        };
        let actual = gen.coeff(k);
        out.record(k, &expected, &actual, expected == actual);
    }
    Ok(out)
}

fn spt_by_smallest_part(nmax: usize) -> Vec<u128> {
    // bigger[m] = partitions of m into parts > s, for the current s
    let mut bigger = vec![0u128; nmax + 1];
    bigger[0] = 1;
    let mut spt = vec![0u128; nmax + 1];
    for s in (1..=nmax).rev() {
        for (k, slot) in spt.iter_mut().enumerate().skip(s) {
            let mut j = 1;
            while j * s <= k {
                *slot += j as u128 * bigger[k - j * s];
                j += 1;
            }
        }
        for m in s..=nmax {
            bigger[m] += bigger[m - s];
        }
    }
    spt
}

pub fn names() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|e| e.name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_by_part_small() {
        let v = spt_by_smallest_part(10);
        for (k, &count) in v.iter().enumerate().skip(1) {
            assert_eq!(count, u128::from(spt_enumerate(k as u64)));
        }
    }

    #[test]
    fn registry_names_unique() {
        let mut names: Vec<_> = names().collect();
        names.sort_unstable();
        let len = names.len();
        names.dedup();
        assert_eq!(names.len(), len);
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(
            check_identity("nope", 10),
            Err(Error::UnknownName(_))
        ));
    }

    #[test]
    fn every_identity_small_depth() {
        for e in REGISTRY {
            let r = check_identity(e.name, 40).unwrap();
            assert!(r.passed(), "{}: {:?}", e.name, r.first_counterexample);
        }
    }

    #[test]
    fn broken_identity_fails() {
        let a = a_series(30);
        let b = &a + &QSeries::monomial(1, 17, 30);
        let out = series_eq(&a, &b, 30).unwrap();
        assert_eq!(out.first.unwrap().n, 17);
    }
}
