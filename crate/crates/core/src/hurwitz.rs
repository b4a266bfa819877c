//! Hurwitz class numbers, kept as the integer `12 H(N)`, together with the
//! generating functions `sum 12 H(an + b) q^n` and the Humbert-type
//! formulas used to cross-check them.

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{factorize, kronecker, moebius, sigma1};
use crate::error::{Error, Result};
use crate::series::{eta_product, QSeries};

/// `12 H(N)`, always an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Hurwitz12(pub i64);

impl Hurwitz12 {
    pub fn value(self) -> i64 {
        self.0
    }

    /// `3 H(N)`, when integral.
    pub fn three_h(self) -> Option<i64> {
        (self.0 % 4 == 0).then_some(self.0 / 4)
    }

    /// `H(N)`, when integral.
    pub fn h(self) -> Option<i64> {
        (self.0 % 12 == 0).then_some(self.0 / 12)
    }
}

/// Weight in twelfths of the reduced form `(a, b, c)`, `0 <= b <= a <= c`,
/// counting `(a, -b, c)` as well when it is a distinct reduced form.
fn form_weight(a: i64, b: i64, c: i64) -> i64 {
    if a == b && b == c {
        4
    } else if b == 0 && a == c {
        6
    } else if b == 0 || b == a || a == c {
        12
    } else {
        24
    }
}

/// `12 H(N)` by counting reduced forms of discriminant `-N`.
pub fn hurwitz12_forms(n: u64) -> Hurwitz12 {
    if n == 0 {
        return Hurwitz12(-1);
    }
    if matches!(n % 4, 1 | 2) {
        return Hurwitz12(0);
    }
    let n = n as i64;
    let mut total = 0;
    let mut b = n % 2;
    while 3 * b * b <= n {
        let t = (b * b + n) / 4;
        let mut a = b.max(1);
        while a * a <= t {
            if t % a == 0 {
                total += form_weight(a, b, t / a);
            }
            a += 1;
        }
        b += 2;
    }
    Hurwitz12(total)
}

/// Number of primitive reduced forms of discriminant `d < 0`.
pub fn class_number(d: i64) -> u64 {
    assert!(
        d < 0 && d.rem_euclid(4) <= 1,
        "not a negative discriminant: {d}"
    );
    let n = -d;
    let mut count = 0;
    let mut b = n % 2;
    while 3 * b * b <= n {
        let t = (b * b + n) / 4;
        let mut a = b.max(1);
        while a * a <= t {
            if t % a == 0 {
                let c = t / a;
                if a.gcd(&b).gcd(&c) == 1 {
                    count += if b == 0 || b == a || a == c { 1 } else { 2 };
                }
            }
            a += 1;
        }
        b += 2;
    }
    count
}

/// Fundamental discriminant `D` and conductor `f` with `-N = D f^2`.
pub fn fundamental_part(n: u64) -> (i64, u64) {
    let fac = factorize(n);
    let (mut core, mut root) = (1u64, 1u64);
    for &(p, e) in fac.factors() {
        if e % 2 == 1 {
            core *= p;
        }
        root *= p.pow(e / 2);
    }
    if core % 4 == 3 {
        (-(core as i64), root)
    } else {
        (-4 * core as i64, root / 2)
    }
}

/// `12 H(N)` from `H(N) = (2 h(D) / w(D)) sum_{d | f} mu(d) (D | d) sigma(f / d)`.
pub fn hurwitz12_formula(n: u64) -> Hurwitz12 {
    if n == 0 {
        return Hurwitz12(-1);
    }
    if matches!(n % 4, 1 | 2) {
        return Hurwitz12(0);
    }
    let (d, f) = fundamental_part(n);
    let h = class_number(d) as i64;
    let units = match d {
        -3 => 6,
        -4 => 4,
        _ => 2,
    };
    let g: i64 = factorize(f)
        .divisors()
        .into_iter()
        .map(|e| moebius(e) as i64 * kronecker(d, e as i64) as i64 * sigma1(f / e) as i64)
        .sum();
    Hurwitz12(24 * h / units * g)
}

/// `12 H(N)` for all `N <= nmax`, by sweeping reduced forms once.
#[derive(Clone, Debug)]
pub struct HurwitzTable {
    values: Vec<i64>,
}

impl HurwitzTable {
    pub fn new(nmax: u64) -> Self {
        let nmax = nmax as i64;
        let mut values = vec![0i64; nmax as usize + 1];
        values[0] = -1;
        let mut a = 1;
        while 3 * a * a <= nmax {
            for b in 0..=a {
                let mut c = a;
                loop {
                    let n = 4 * a * c - b * b;
                    if n > nmax {
                        break;
                    }
                    values[n as usize] += form_weight(a, b, c);
                    c += 1;
                }
            }
            a += 1;
        }
        HurwitzTable { values }
    }

    pub fn max(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn get(&self, n: u64) -> Hurwitz12 {
        Hurwitz12(self.values[n as usize])
    }
}

/// The Hecke relation
/// `12H(p^2 n) + (-n | p) 12H(n) + p 12H(n / p^2) = (p + 1) 12H(n)`.
pub fn eigen_check(p: u64, n: u64) -> bool {
    eigen_check_with(&hurwitz12_forms, p, n)
}

pub fn eigen_check_with(h12: &impl Fn(u64) -> Hurwitz12, p: u64, n: u64) -> bool {
    let p2 = p * p;
    let lhs = h12(p2 * n).0
        + kronecker(-(n as i64), p as i64) as i64 * h12(n).0
        + if n.is_multiple_of(p2) {
            p as i64 * h12(n / p2).0
        } else {
            0
        };
    lhs == (p as i64 + 1) * h12(n).0
}

/// `sum_{r=1}^{(n-1)/2} (r | n)` for square-free `n = 3 (mod 4)`, `n > 3`.
pub fn kronecker_sum_h(n: u64) -> Result<i64> {
    if n <= 3 || n % 4 != 3 || !factorize(n).is_squarefree() {
        return Err(Error::InvalidArgument(format!(
            "{n} is not a square-free integer > 3 congruent to 3 mod 4"
        )));
    }
    Ok((1..=(n - 1) / 2)
        .map(|r| kronecker(r as i64, n as i64) as i64)
        .sum())
}

/// `sum_{n < N} 12 H(a n + b) q^n`.
pub fn genseries_h(a: u64, b: u64, prec: i64) -> Result<QSeries> {
    if a == 0 || 24 % a != 0 || a.gcd(&b) != 1 {
        return Err(Error::InvalidArgument(format!(
            "progression {a}n + {b} needs a dividing 24 and gcd(a, b) = 1"
        )));
    }
    let coeffs: Vec<BigInt> = (0..prec.max(0) as u64)
        .into_par_iter()
        .map(|n| BigInt::from(hurwitz12_forms(a * n + b).0))
        .collect();
    Ok(QSeries::from_coeffs(0, coeffs))
}

/// `12 sum H(8n + 7) q^n` from
/// `(1 / (q J_1^3)) sum_{n >= 1} (-1)^{n+1} n^2 q^{n(n+1)/2} / (1 + q^n)`.
pub fn humbert_h87(prec: i64) -> QSeries {
    let inner = prec + 1;
    let mut acc = vec![BigInt::from(0); inner.max(0) as usize];
    let mut n = 1i64;
    while n * (n + 1) / 2 < inner {
        let c = if n.is_odd() { n * n } else { -n * n };
        let mut e = n * (n + 1) / 2;
        let mut sign = 1;
        while e < inner {
            acc[e as usize] += c * sign;
            e += n;
            sign = -sign;
        }
        n += 1;
    }
    let mut s = QSeries::from_coeffs(0, acc).shift(-1).truncate(prec);
    let j1 = crate::series::pentagonal_terms(1, s.precision() - s.start());
    for _ in 0..3 {
        s.div_sparse(&j1);
    }
    s.scale_i64(12)
}

/// `12 sum H(24n + 23) q^n` by counting lattice points
/// `0 < 3z < 2x`, `-x < 3y < x` with `2x^2 - 3z^2 - 6y^2 = 24n + 23`.
pub fn humbert_h2423(prec: i64) -> QSeries {
    let qmax = 24 * prec - 1;
    // Writing 3z = 2x - s, 3|y| = x - t with s, t >= 1 gives
    // 9Q = 3s(4x - s) + 6t(2x - t) >= 24x - 9, so x <= (9Q + 9) / 24.
    let xmax = (9 * qmax + 9) / 24;
    let mut acc = vec![0i64; prec.max(0) as usize];
    for x in 1..=xmax {
        let ymax = (x - 1) / 3;
        let zmax = (2 * x - 1) / 3;
        for y in -ymax..=ymax {
            let base = 2 * x * x - 6 * y * y;
            if base < 23 {
                continue;
            }
            // 3z^2 in [base - qmax, base - 23]
            let lo = (base - qmax).max(0);
            let mut z = isqrt(lo / 3).max(1);
            while z > 1 && 3 * (z - 1) * (z - 1) >= lo {
                z -= 1;
            }
            while z <= zmax {
                let q = base - 3 * z * z;
                if q < 23 {
                    break;
                }
                if q <= qmax && q % 24 == 23 {
                    acc[((q - 23) / 24) as usize] += 1;
                }
                z += 1;
            }
        }
    }
    QSeries::from_coeffs(0, acc.into_iter().map(|c| BigInt::from(12 * c)).collect())
}

fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Number of `(x, y, z)` with `x^2 + 3y^2 + 3z^2 = n`.
pub fn ternary_t(n: u64) -> u64 {
    let n = n as i64;
    let mut count = 0;
    let ymax = isqrt(n / 3);
    for y in -ymax..=ymax {
        for z in -ymax..=ymax {
            let rest = n - 3 * (y * y + z * z);
            if rest < 0 {
                continue;
            }
            let x = isqrt(rest);
            if x * x == rest {
                count += if x == 0 { 1 } else { 2 };
            }
        }
    }
    count
}

/// `12 H(8n + 3) q^n` through `3 sum H(8n + 3) q^n = J_2^6 / J_1^3`.
pub fn h83_eta(prec: i64) -> QSeries {
    eta_product(&[(2, 6), (1, -3)], prec).scale_i64(4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tabulated_values() {
        let cases = [
            (0, -1),
            (3, 4),
            (4, 6),
            (7, 12),
            (15, 24),
            (23, 36),
            (27, 16),
            (47, 60),
        ];
        for (n, v) in cases {
            assert_eq!(hurwitz12_forms(n).0, v, "forms N={n}");
            assert_eq!(hurwitz12_formula(n).0, v, "formula N={n}");
        }
        assert_eq!(hurwitz12_forms(5).0, 0);
        assert_eq!(hurwitz12_forms(6).0, 0);
    }

    #[test]
    fn table_matches_per_n() {
        let t = HurwitzTable::new(2000);
        for n in 0..=2000 {
            assert_eq!(t.get(n), hurwitz12_forms(n), "N={n}");
        }
    }

    #[test]
    fn ternary_examples() {
        assert_eq!(ternary_t(7), 16);
        assert_eq!(ternary_t(31), 48);
    }

    #[test]
    fn kronecker_sums() {
        assert_eq!(kronecker_sum_h(7).unwrap(), 1);
        assert_eq!(kronecker_sum_h(23).unwrap(), 3);
        assert_eq!(kronecker_sum_h(11).unwrap(), 3);
        assert!(kronecker_sum_h(3).is_err());
        assert!(kronecker_sum_h(27).is_err());
    }

    #[test]
    fn humbert_series_agree_with_forms() {
        let n = 60;
        assert_eq!(humbert_h87(n), genseries_h(8, 7, n).unwrap());
        assert_eq!(humbert_h2423(n), genseries_h(24, 23, n).unwrap());
        assert_eq!(h83_eta(n), genseries_h(8, 3, n).unwrap());
    }
}
