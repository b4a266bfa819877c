//! Series whose coefficients live in `Z[z]/(z^4 - 1)`.
//!
//! Coefficient `n` is stored as `[c0, c1, c2, c3]` where `ca` counts
//! objects of size `n` whose rank is congruent to `a` mod 4. Evaluating at
//! `z = 1` gives the plain count and at `z = i` gives `(c0 - c2) + i(c1 - c3)`.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::QSeries;

pub type ZVec = [BigInt; 4];

fn zvec_zero() -> ZVec {
    [
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
        BigInt::zero(),
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub struct RankSeries {
    prec: i64,
    coeffs: Vec<ZVec>,
}

/// Which unimodal family to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankKind {
    /// Strongly unimodal sequences, `sum (-zq;q)_n (-q/z;q)_n q^{n+1}`.
    U,
    /// Odd-balanced unimodal sequences,
    /// `sum (-zq;q)_n (-q/z;q)_n q^n / (q;q^2)_{n+1}`.
    V,
}

impl RankSeries {
    pub fn zero(prec: i64) -> Self {
        RankSeries {
            prec,
            coeffs: (0..prec.max(0)).map(|_| zvec_zero()).collect(),
        }
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    pub fn coeff(&self, n: i64) -> &ZVec {
        &self.coeffs[n as usize]
    }

    pub fn coeff_mut(&mut self, n: i64) -> &mut ZVec {
        &mut self.coeffs[n as usize]
    }

    /// Adds `sign * z^zpow * q^e`.
    pub fn add_term(&mut self, e: i64, zpow: i64, sign: i64) {
        if e < 0 || e >= self.prec {
            return;
        }
        let slot = &mut self.coeffs[e as usize][zpow.rem_euclid(4) as usize];
        *slot += sign;
    }

    /// The series of counts with rank congruent to `a` mod 4.
    pub fn component(&self, a: usize) -> QSeries {
        QSeries::from_coeffs(0, self.coeffs.iter().map(|v| v[a].clone()).collect())
    }

    pub fn at_one(&self) -> QSeries {
        QSeries::from_coeffs(
            0,
            self.coeffs
                .iter()
                .map(|v| &v[0] + &v[1] + &v[2] + &v[3])
                .collect(),
        )
    }

    /// Real and imaginary parts of the specialisation `z = i`.
    pub fn at_i(&self) -> (QSeries, QSeries) {
        let re = self.coeffs.iter().map(|v| &v[0] - &v[2]).collect();
        let im = self.coeffs.iter().map(|v| &v[1] - &v[3]).collect();
        (QSeries::from_coeffs(0, re), QSeries::from_coeffs(0, im))
    }

    /// Multiplication by `z^k`.
    pub fn mul_z(&self, k: i64) -> Self {
        let k = k.rem_euclid(4) as usize;
        let coeffs = self
            .coeffs
            .iter()
            .map(|v| std::array::from_fn(|a| v[(a + 4 - k) % 4].clone()))
            .collect();
        RankSeries {
            prec: self.prec,
            coeffs,
        }
    }

    pub fn add(&self, other: &RankSeries) -> Self {
        let prec = self.prec.min(other.prec);
        let coeffs = (0..prec as usize)
            .map(|n| std::array::from_fn(|a| &self.coeffs[n][a] + &other.coeffs[n][a]))
            .collect();
        RankSeries { prec, coeffs }
    }

    pub fn sub(&self, other: &RankSeries) -> Self {
        let prec = self.prec.min(other.prec);
        let coeffs = (0..prec as usize)
            .map(|n| std::array::from_fn(|a| &self.coeffs[n][a] - &other.coeffs[n][a]))
            .collect();
        RankSeries { prec, coeffs }
    }

    /// Product with an ordinary power series (valuation `>= 0`).
    pub fn mul_series(&self, s: &QSeries) -> Self {
        assert!(s.start() >= 0, "scalar factor must be a power series");
        let prec = self.prec.min(s.precision());
        let mut out = RankSeries::zero(prec);
        for (e, c) in s.iter() {
            if e >= prec || c.is_zero() {
                continue;
            }
            for n in 0..(prec - e) as usize {
                for a in 0..4 {
                    let x = &self.coeffs[n][a];
                    if !x.is_zero() {
                        out.coeffs[n + e as usize][a] += c * x;
                    }
                }
            }
        }
        out
    }

    /// Multiplication by `q^k`, `k >= 0`, keeping the precision.
    pub fn shift(&self, k: i64) -> Self {
        let mut out = RankSeries::zero(self.prec);
        for n in 0..(self.prec - k).max(0) as usize {
            out.coeffs[n + k as usize] = self.coeffs[n].clone();
        }
        out
    }

    /// In-place multiplication by `1 + z^zpow q^k`, `k > 0`.
    pub fn mul_one_plus(&mut self, zpow: i64, k: i64) {
        let k = k as usize;
        let zp = zpow.rem_euclid(4) as usize;
        for i in (k..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            for a in 0..4 {
                let src = &lo[i - k][(a + 4 - zp) % 4];
                if !src.is_zero() {
                    hi[0][a] += src;
                }
            }
        }
    }

    /// In-place multiplication by `1 / (1 - q^k)`, `k > 0`.
    pub fn div_one_minus(&mut self, k: i64) {
        let k = k as usize;
        for i in k..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            for a in 0..4 {
                if !lo[i - k][a].is_zero() {
                    hi[0][a] += &lo[i - k][a];
                }
            }
        }
    }

    /// Adds `q^k * other` in place.
    pub fn add_shifted(&mut self, other: &RankSeries, k: i64) {
        if other.prec + k < self.prec {
            self.prec = other.prec + k;
            self.coeffs.truncate(self.prec as usize);
        }
        for n in (k.max(0) as usize)..self.coeffs.len() {
            let src = &other.coeffs[n - k as usize];
            for (dst, x) in self.coeffs[n].iter_mut().zip(src) {
                if !x.is_zero() {
                    *dst += x;
                }
            }
        }
    }

    pub fn first_mismatch(&self, other: &RankSeries) -> Option<(i64, ZVec, ZVec)> {
        let prec = self.prec.min(other.prec);
        (0..prec as usize).find_map(|n| {
            (self.coeffs[n] != other.coeffs[n])
                .then(|| (n as i64, self.coeffs[n].clone(), other.coeffs[n].clone()))
        })
    }
}

/// Builds the rank generating function of the given family to precision `prec`.
pub fn rank_build(kind: RankKind, prec: i64) -> RankSeries {
    let mut total = RankSeries::zero(prec);
    let mut running = RankSeries::zero(prec);
    if prec > 0 {
        running.coeffs[0][0] = BigInt::from(1);
    }
    match kind {
        RankKind::U => {
            let mut n = 0;
            while n < prec - 1 {
                if n > 0 {
                    running.mul_one_plus(1, n);
                    running.mul_one_plus(-1, n);
                }
                total.add_shifted(&running, n + 1);
                n += 1;
            }
        }
        RankKind::V => {
            running.div_one_minus(1);
            let mut n = 0;
            while n < prec {
                if n > 0 {
                    running.mul_one_plus(1, n);
                    running.mul_one_plus(-1, n);
                    running.div_one_minus(2 * n + 1);
                }
                total.add_shifted(&running, n);
                n += 1;
            }
        }
    }
    total
}

#[derive(Serialize)]
struct RankDump {
    precision: i64,
    components: [Vec<String>; 4],
}

impl Serialize for RankSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RankDump {
            precision: self.prec,
            components: std::array::from_fn(|a| {
                self.coeffs.iter().map(|v| v[a].to_string()).collect()
            }),
        }
        .serialize(s)
    }
}
