//! Instantiated congruence theorems. For a prime `p` each theorem fixes a
//! set of residue classes modulo `p^2` (one per admissible `k`); every index
//! in those classes below the depth is checked.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use super::cache;
use super::report::{Kind, Outcome, VerifyReport};
use crate::arith::signs::{eptwid, varepsilon};
use crate::arith::{delta_p, is_prime, kronecker, s_of};
use crate::error::{Error, Result};
use crate::series::{QSeries, RankKind};

/// One sweep request.
#[derive(Clone, Copy, Debug)]
pub struct Sweep {
    pub p: i64,
    /// Indices `< depth` are examined.
    pub depth: i64,
    /// Restricts the sweep to a single `k` when set.
    pub k: Option<i64>,
}

#[derive(Clone, Copy, Serialize)]
pub struct Theorem {
    pub name: &'static str,
    pub default_depth: i64,
    #[serde(skip)]
    run: fn(&Sweep) -> Result<Outcome>,
}

const SERIES_DEPTH: i64 = 4000;
const RANK_DEPTH: i64 = 1500;
const SPT_DEPTH: i64 = 6000;

pub const THEOREMS: &[Theorem] = &[
    Theorem {
        name: "theA4",
        default_depth: SERIES_DEPTH,
        run: the_a4,
    },
    Theorem {
        name: "thmV1mod4",
        default_depth: SERIES_DEPTH,
        run: the_v1,
    },
    Theorem {
        name: "Nphimmod4",
        default_depth: SERIES_DEPTH,
        run: the_phi,
    },
    Theorem {
        name: "Nsigmamod4",
        default_depth: SERIES_DEPTH,
        run: the_sigma,
    },
    Theorem {
        name: "thev4",
        default_depth: SERIES_DEPTH,
        run: the_v,
    },
    Theorem {
        name: "thev4-falsified-original",
        default_depth: SERIES_DEPTH,
        run: v_original,
    },
    Theorem {
        name: "thepsic",
        default_depth: SERIES_DEPTH,
        run: the_psi,
    },
    Theorem {
        name: "conjuA",
        default_depth: SERIES_DEPTH,
        run: conj_a,
    },
    Theorem {
        name: "conjuB",
        default_depth: RANK_DEPTH,
        run: conj_b,
    },
    Theorem {
        name: "conjuC",
        default_depth: RANK_DEPTH,
        run: conj_c,
    },
    Theorem {
        name: "conjuCstrong",
        default_depth: RANK_DEPTH,
        run: conj_c_strong,
    },
    Theorem {
        name: "sptconj",
        default_depth: SPT_DEPTH,
        run: spt_conj,
    },
    Theorem {
        name: "sptmod72",
        default_depth: SPT_DEPTH,
        run: spt_mod72,
    },
];

pub fn theorem(name: &str) -> Result<&'static Theorem> {
    THEOREMS
        .iter()
        .find(|t| t.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Runs `name` at prime `p` over indices `< depth`.
pub fn check_congruence(name: &str, p: i64, depth: i64) -> Result<VerifyReport> {
    check_congruence_k(name, Sweep { p, depth, k: None })
}

pub fn check_congruence_k(name: &str, sweep: Sweep) -> Result<VerifyReport> {
    let t = theorem(name)?;
    if sweep.p < 2 || !is_prime(sweep.p as u64) {
        return Err(Error::NotApplicable(format!("{} is not prime", sweep.p)));
    }
    if sweep.depth < 1 {
        return Err(Error::InvalidArgument(format!(
            "depth must be positive, got {}",
            sweep.depth
        )));
    }
    let out = (t.run)(&sweep)?;
    if out.checked == 0 {
        return Err(Error::Precision {
            needed: sweep.depth + 1,
            have: sweep.depth,
        });
    }
    Ok(VerifyReport::new(
        format!("{name}@{}", sweep.p),
        Kind::Congruence,
        out,
    ))
}

fn require(ok: bool, why: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::NotApplicable(why()))
    }
}

/// `k` in `[1, p)` with `(k | p) = want`.
fn ks(p: i64, want: i64) -> Vec<i64> {
    (1..p)
        .filter(|&k| i64::from(kronecker(k, p)) == want)
        .collect()
}

/// A residue class `r (mod step)` tagged with the `k` that produced it.
struct Class {
    k: i64,
    r: i64,
}

/// Walks every index below the depth in each class, in increasing index
/// order per class.
fn sweep_classes(
    sw: &Sweep,
    step: i64,
    classes: Vec<Class>,
    mut test: impl FnMut(i64, &mut Outcome),
) -> Outcome {
    let mut out = Outcome::empty(0, sw.depth);
    for c in classes
        .into_iter()
        .filter(|c| sw.k.is_none_or(|k| k == c.k))
    {
        let mut m = c.r.rem_euclid(step);
        while m < sw.depth {
            test(m, &mut out);
            m += step;
        }
    }
    out
}

fn zero_mod(s: &QSeries, m: i64, modulus: u32, out: &mut Outcome) {
    let c = s.coeff(m);
    let ok = c.is_multiple_of(&BigInt::from(modulus));
    out.record(m, format!("0 mod {modulus}"), c, ok);
}

/// The `(pk + offset) delta_p` family shared by the mod-4 theorems.
fn delta_classes(p: i64, modulus: u64, offset: i64, want: i64) -> Result<Vec<Class>> {
    let delta = delta_p(modulus, p as u64)? as i64;
    let p2 = p * p;
    Ok(ks(p, want)
        .into_iter()
        .map(|k| Class {
            k,
            r: ((p * k + offset) % p2 * delta).rem_euclid(p2),
        })
        .collect())
}

fn delta_sweep(sw: &Sweep, name: &str, modulus: u64, offset: i64, want: i64) -> Result<Outcome> {
    let s = cache::series(name, sw.depth)?;
    let p = sw.p;
    let classes = delta_classes(p, modulus, offset, want)?;
    Ok(sweep_classes(sw, p * p, classes, |m, out| {
        zero_mod(&s, m, 4, out)
    }))
}

fn the_a4(sw: &Sweep) -> Result<Outcome> {
    let p = sw.p;
    require(p % 2 == 1 && p % 8 != 7, || {
        format!("needs an odd prime not 7 mod 8, got {p}")
    })?;
    delta_sweep(sw, "A", 8, 1, 1)
}

fn the_v1(sw: &Sweep) -> Result<Outcome> {
    let p = sw.p;
    require(p % 2 == 1 && p % 4 != 3, || {
        format!("needs an odd prime not 3 mod 4, got {p}")
    })?;
    delta_sweep(sw, "V1", 4, 1, 1)
}

fn the_phi(sw: &Sweep) -> Result<Outcome> {
    let p = sw.p;
    require(p > 3 && p % 24 != 23, || {
        format!("needs a prime > 3 not 23 mod 24, got {p}")
    })?;
    delta_sweep(sw, "phiminus", 24, 1, 1)
}

fn the_sigma(sw: &Sweep) -> Result<Outcome> {
    let p = sw.p;
    require(p > 3 && p % 12 != 11, || {
        format!("needs a prime > 3 not 11 mod 12, got {p}")
    })?;
    delta_sweep(sw, "sigma", 12, 1, 1)
}

fn the_v(sw: &Sweep) -> Result<Outcome> {
    let p = sw.p;
    require(p % 2 == 1 && !matches!(p % 8, 1 | 7), || {
        format!("needs an odd prime not ±1 mod 8, got {p}")
    })?;
    delta_sweep(sw, "v", 8, -7, 1)
}

/// The uncorrected statement: `v(l^2 n + k) = 0 (mod 4)` whenever `l ‖ 8k+7`
/// and `(8k+7)/l` is a square mod `l`. It fails for `l = 1 (mod 8)`.
fn v_original(sw: &Sweep) -> Result<Outcome> {
    let l = sw.p;
    require(l % 8 != 7, || {
        format!("needs a prime not -1 mod 8, got {l}")
    })?;
    let l2 = l * l;
    let classes = (1..=l2)
        .filter(|&k| {
            let m = 8 * k + 7;
            m % l == 0 && (m / l) % l != 0 && kronecker(m / l, l) == 1
        })
        .map(|k| Class { k, r: k })
        .collect();
    let s = cache::series("v", sw.depth)?;
    Ok(sweep_classes(sw, l2, classes, |m, out| {
        zero_mod(&s, m, 4, out)
    }))
}

fn psi_hypothesis(p: i64) -> Result<()> {
    require(p > 3 && p % 24 != 23, || {
        format!("needs a prime > 3 not 23 mod 24, got {p}")
    })
}

fn the_psi(sw: &Sweep) -> Result<Outcome> {
    let p = sw.p;
    psi_hypothesis(p)?;
    let want = varepsilon(p);
    let psi = cache::series("psi", sw.depth)?;
    let spt = cache::series("spt", sw.depth)?;
    let classes = || delta_classes(p, 24, 1, want);
    Ok(Outcome::combine([
        sweep_classes(sw, p * p, classes()?, |m, out| zero_mod(&psi, m, 4, out)),
        sweep_classes(sw, p * p, classes()?, |m, out| zero_mod(&spt, m, 4, out)),
    ]))
}

/// Classes `k l - s(l) (mod l^2)` with `(k | l) = want`.
fn unimodal_classes(l: i64, want: i64) -> Vec<Class> {
    let s = s_of(l);
    ks(l, want)
        .into_iter()
        .map(|k| Class { k, r: k * l - s })
        .collect()
}

fn conj_hypothesis(l: i64) -> Result<()> {
    require(matches!(l % 24, 7 | 11 | 13 | 17), || {
        format!("needs a prime 7, 11, 13 or 17 mod 24, got {l}")
    })
}

fn conj_a(sw: &Sweep) -> Result<Outcome> {
    let l = sw.p;
    conj_hypothesis(l)?;
    let u = cache::series("u", sw.depth)?;
    Ok(sweep_classes(
        sw,
        l * l,
        unimodal_classes(l, -1),
        |m, out| zero_mod(&u, m, 4, out),
    ))
}

fn rank_parts(depth: i64) -> Result<[QSeries; 4]> {
    let u = cache::rank(RankKind::U, depth)?;
    Ok(std::array::from_fn(|a| u.component(a).truncate(depth)))
}

fn conj_b(sw: &Sweep) -> Result<Outcome> {
    let l = sw.p;
    conj_hypothesis(l)?;
    let parts = rank_parts(sw.depth)?;
    Ok(Outcome::combine(parts.iter().map(|part| {
        sweep_classes(sw, l * l, unimodal_classes(l, -1), |m, out| {
            zero_mod(part, m, 2, out)
        })
    })))
}

fn zero_two_mod4(parts: &[QSeries; 4], m: i64, out: &mut Outcome) {
    let (a, b) = (parts[0].coeff(m), parts[2].coeff(m));
    let ok = (&a - &b).is_multiple_of(&BigInt::from(4));
    out.record(m, format!("{a} mod 4"), b, ok);
}

fn conj_c(sw: &Sweep) -> Result<Outcome> {
    let l = sw.p;
    conj_hypothesis(l)?;
    let parts = rank_parts(sw.depth)?;
    Ok(sweep_classes(
        sw,
        l * l,
        unimodal_classes(l, -1),
        |m, out| zero_two_mod4(&parts, m, out),
    ))
}

fn conj_c_strong(sw: &Sweep) -> Result<Outcome> {
    let l = sw.p;
    psi_hypothesis(l)?;
    let parts = rank_parts(sw.depth)?;
    let classes = unimodal_classes(l, eptwid(l));
    Ok(sweep_classes(sw, l * l, classes, |m, out| {
        zero_two_mod4(&parts, m, out)
    }))
}

/// `spt(l n - s(l)) = 0 (mod 4)` when `(n | l) = eptwid(l)`; with
/// `n = k + l t` these are the classes `k l - s(l) (mod l^2)`.
fn spt_conj(sw: &Sweep) -> Result<Outcome> {
    let l = sw.p;
    psi_hypothesis(l)?;
    let spt = cache::series("spt", sw.depth)?;
    let classes = unimodal_classes(l, eptwid(l));
    Ok(sweep_classes(sw, l * l, classes, |m, out| {
        zero_mod(&spt, m, 4, out)
    }))
}

/// The Hecke-type relation for `spt` modulo 72, for every `n >= 1` with
/// `l^2 n - s(l)` below the depth. The index reported is `n`.
fn spt_mod72(sw: &Sweep) -> Result<Outcome> {
    let l = sw.p;
    require(l >= 5, || format!("needs a prime >= 5, got {l}"))?;
    let spt = cache::series("spt", sw.depth)?;
    let s = s_of(l);
    let l2 = l * l;
    let at = |m: i64| {
        if m >= 0 {
            spt.coeff(m)
        } else {
            BigInt::from(0)
        }
    };
    let chi3 = i64::from(kronecker(3, l));
    let mut out = Outcome::empty(1, (sw.depth + s) / l2 + 1);
    let mut n = 1;
    while l2 * n - s < sw.depth {
        let tail = if (n + s) % l2 == 0 {
            at((n + s) / l2) * l
        } else {
            BigInt::from(0)
        };
        let lhs = at(l2 * n - s) + at(n) * chi3 * i64::from(kronecker(1 - 24 * n, l)) + tail;
        let rhs = at(n) * (chi3 * (1 + l));
        let ok = (&lhs - &rhs).is_multiple_of(&BigInt::from(72));
        out.record(n, format!("{rhs} mod 72"), lhs, ok);
        n += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_n_plus_four() {
        let classes = delta_classes(3, 8, -7, 1).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].r, 4);
    }

    #[test]
    fn twenty_five_n_classes() {
        let mut rs: Vec<_> = delta_classes(5, 8, -7, 1)
            .unwrap()
            .iter()
            .map(|c| c.r)
            .collect();
        rs.sort_unstable();
        assert_eq!(rs, vec![6, 11]);
    }

    #[test]
    fn hypotheses_rejected() {
        for (name, p) in [
            ("theA4", 7),
            ("thev4", 17),
            ("thepsic", 23),
            ("conjuA", 5),
            ("theA4", 9),
        ] {
            assert!(
                matches!(check_congruence(name, p, 200), Err(Error::NotApplicable(_))),
                "{name} at {p}"
            );
        }
    }

    #[test]
    fn original_v_conjecture_fails_at_99() {
        let r = check_congruence_k(
            "thev4-falsified-original",
            Sweep {
                p: 17,
                depth: 120,
                k: Some(99),
            },
        )
        .unwrap();
        assert!(!r.passed());
        assert_eq!(r.first_counterexample.unwrap().actual, "81474897186");
    }

    #[test]
    fn small_sweeps_pass() {
        for (name, p) in [
            ("theA4", 3),
            ("thev4", 3),
            ("thepsic", 5),
            ("conjuA", 7),
            ("sptmod72", 5),
        ] {
            let r = check_congruence(name, p, 300).unwrap();
            assert!(r.passed(), "{name}@{p}: {:?}", r.first_counterexample);
        }
    }
}
