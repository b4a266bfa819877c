use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A truncated Laurent series `sum c_e q^e` known exactly for `e < precision`.
///
/// Coefficients are stored densely from `start` up to `precision - 1`.
/// Everything below `start` is zero.
#[derive(Clone, Debug)]
pub struct QSeries {
    start: i64,
    prec: i64,
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(prec: i64) -> Self {
        QSeries {
            start: prec,
            prec,
            coeffs: Vec::new(),
        }
    }

    /// Dense zero coefficients on `[start, prec)`, handy as an accumulator.
    pub fn zeros(start: i64, prec: i64) -> Self {
        let len = (prec - start).max(0) as usize;
        QSeries {
            start: start.min(prec),
            prec,
            coeffs: vec![BigInt::zero(); len],
        }
    }

    pub fn one(prec: i64) -> Self {
        Self::monomial(1, 0, prec)
    }

    pub fn monomial(c: impl Into<BigInt>, e: i64, prec: i64) -> Self {
        if e >= prec {
            return Self::zero(prec);
        }
        let mut s = Self::zeros(e, prec);
        s.coeffs[0] = c.into();
        s
    }

    /// Series with coefficients `coeffs` starting at `start`; precision is
    /// one past the last stored coefficient.
    pub fn from_coeffs(start: i64, coeffs: Vec<BigInt>) -> Self {
        let prec = start + coeffs.len() as i64;
        QSeries {
            start,
            prec,
            coeffs,
        }
    }

    pub fn from_i64s(start: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(start, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Sum of the given terms, keeping those below `prec`.
    pub fn from_terms<I, C>(terms: I, prec: i64) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms
            .into_iter()
            .filter(|(e, _)| *e < prec)
            .map(|(e, c)| (e, c.into()))
            .collect();
        let start = terms.iter().map(|t| t.0).min().unwrap_or(prec);
        let mut s = Self::zeros(start, prec);
        for (e, c) in terms {
            s.coeffs[(e - start) as usize] += c;
        }
        s
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    /// Exponent of the first non-zero coefficient, if any.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.start + i as i64)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Coefficient of `q^e`. Panics when `e` is beyond the precision.
    pub fn coeff(&self, e: i64) -> BigInt {
        assert!(
            e < self.prec,
            "coefficient q^{e} requested beyond precision {}",
            self.prec
        );
        self.get(e).cloned().unwrap_or_default()
    }

    pub fn get(&self, e: i64) -> Option<&BigInt> {
        if e < self.start || e >= self.prec {
            None
        } else {
            Some(&self.coeffs[(e - self.start) as usize])
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.start + i as i64, c))
    }

    /// Drops leading zero coefficients so that `start` is the valuation.
    pub fn normalized(mut self) -> Self {
        let lead = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(self.coeffs.len());
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.start += lead as i64;
        }
        self
    }

    pub fn truncate(&self, prec: i64) -> Self {
        let prec = prec.min(self.prec);
        if prec <= self.start {
            return Self::zero(prec);
        }
        QSeries {
            start: self.start,
            prec,
            coeffs: self.coeffs[..(prec - self.start) as usize].to_vec(),
        }
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        QSeries {
            start: self.start + k,
            prec: self.prec + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        QSeries {
            start: self.start,
            prec: self.prec,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    /// Divides every coefficient by `d`, failing unless all divisions are exact.
    pub fn exact_div_scalar(&self, d: i64) -> Result<Self> {
        let d = BigInt::from(d);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (e, c) in self.iter() {
            let (quo, rem) = c.div_rem(&d);
            if !rem.is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "coefficient of q^{e} is not divisible by {d}"
                )));
            }
            coeffs.push(quo);
        }
        Ok(QSeries {
            start: self.start,
            prec: self.prec,
            coeffs,
        })
    }

    /// Coefficients reduced to `[0, m)`.
    pub fn reduce_mod(&self, m: u32) -> Self {
        let m = BigInt::from(m);
        QSeries {
            start: self.start,
            prec: self.prec,
            coeffs: self.coeffs.iter().map(|c| c.mod_floor(&m)).collect(),
        }
    }

    /// Substitution `q -> q^k` for `k >= 1`.
    pub fn dilate(&self, k: i64) -> Self {
        assert!(k >= 1, "dilation factor must be positive");
        if k == 1 {
            return self.clone();
        }
        let start = self.start * k;
        let prec = self.prec * k;
        let mut out = Self::zeros(start, prec);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i * k as usize] = c.clone();
        }
        out
    }

    /// Substitution `q -> -q`.
    pub fn negate_q(&self) -> Self {
        let mut out = self.clone();
        for (i, c) in out.coeffs.iter_mut().enumerate() {
            if (self.start + i as i64).is_odd() {
                *c = -&*c;
            }
        }
        out
    }

    /// The Atkin operator `sum a(n) q^n -> sum a(pn) q^n`.
    pub fn up(&self, p: i64) -> Self {
        assert!(p >= 1, "U_p needs p >= 1");
        let start = Integer::div_ceil(&self.start, &p);
        let prec = Integer::div_ceil(&self.prec, &p);
        let coeffs = (start..prec)
            .map(|n| self.get(n * p).cloned().unwrap_or_default())
            .collect();
        QSeries {
            start,
            prec,
            coeffs,
        }
    }

    /// In-place multiplication by `1 + c q^k` with `k > 0`.
    pub fn mul_one_plus(&mut self, c: i64, k: i64) {
        assert!(k > 0);
        let k = k as usize;
        for i in (k..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if lo[i - k].is_zero() {
                continue;
            }
            match c {
                1 => hi[0] += &lo[i - k],
                -1 => hi[0] -= &lo[i - k],
                _ => hi[0] += &lo[i - k] * c,
            }
        }
    }

    /// In-place multiplication by `1 / (1 - c q^k)` with `k > 0`.
    pub fn div_one_minus(&mut self, c: i64, k: i64) {
        assert!(k > 0);
        let k = k as usize;
        for i in k..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(i);
            if lo[i - k].is_zero() {
                continue;
            }
            match c {
                1 => hi[0] += &lo[i - k],
                -1 => hi[0] -= &lo[i - k],
                _ => hi[0] += &lo[i - k] * c,
            }
        }
    }

    /// In-place multiplication by the sparse series `sum c_j q^{e_j}`
    /// (exponents ascending, `e_0 = 0`). Terms must be supplied up to the
    /// relative length of `self`.
    pub fn mul_sparse(&mut self, terms: &[(i64, i64)]) {
        debug_assert!(terms.first().is_some_and(|t| t.0 == 0));
        let c0 = terms[0].1;
        for i in (0..self.coeffs.len()).rev() {
            let mut acc = &self.coeffs[i] * c0;
            for &(e, c) in &terms[1..] {
                let e = e as usize;
                if e > i {
                    break;
                }
                let x = &self.coeffs[i - e];
                if !x.is_zero() {
                    match c {
                        1 => acc += x,
                        -1 => acc -= x,
                        _ => acc += x * c,
                    }
                }
            }
            self.coeffs[i] = acc;
        }
    }

    /// In-place division by a sparse series with constant term `±1`.
    pub fn div_sparse(&mut self, terms: &[(i64, i64)]) {
        let c0 = terms[0].1;
        assert!(
            terms[0].0 == 0 && c0.abs() == 1,
            "sparse divisor needs unit constant term"
        );
        for i in 0..self.coeffs.len() {
            let mut acc = std::mem::take(&mut self.coeffs[i]);
            for &(e, c) in &terms[1..] {
                let e = e as usize;
                if e > i {
                    break;
                }
                let x = &self.coeffs[i - e];
                if !x.is_zero() {
                    match c {
                        1 => acc -= x,
                        -1 => acc += x,
                        _ => acc -= x * c,
                    }
                }
            }
            self.coeffs[i] = if c0 == 1 { acc } else { -acc };
        }
    }

    /// Adds `c * q^k * other` into `self`. The precision drops if `other`
    /// is not known far enough.
    pub fn add_scaled_shifted(&mut self, other: &QSeries, k: i64, c: i64) {
        let other_prec = other.prec + k;
        if other_prec < self.prec {
            self.prec = other_prec.max(self.start);
            self.coeffs.truncate((self.prec - self.start) as usize);
        }
        let other_start = other.start + k;
        if other_start < self.start {
            let extra = (self.start - other_start) as usize;
            let mut coeffs = vec![BigInt::zero(); extra];
            coeffs.append(&mut self.coeffs);
            self.coeffs = coeffs;
            self.start = other_start;
        }
        for (i, x) in other.coeffs.iter().enumerate() {
            let e = other_start + i as i64;
            if e >= self.prec {
                break;
            }
            if x.is_zero() {
                continue;
            }
            let slot = &mut self.coeffs[(e - self.start) as usize];
            match c {
                1 => *slot += x,
                -1 => *slot -= x,
                _ => *slot += x * c,
            }
        }
    }

    /// Multiplicative inverse. The leading coefficient must be `±1`.
    pub fn invert(&self) -> Result<Self> {
        let a = self.clone().normalized();
        if a.coeffs.is_empty() {
            return Err(Error::ZeroSeries);
        }
        let lead = a.coeffs[0].clone();
        if !lead.abs().is_one() {
            return Err(Error::NonUnitLeading(lead.to_string()));
        }
        let len = a.coeffs.len();
        let mut b: Vec<BigInt> = Vec::with_capacity(len);
        b.push(lead.clone());
        for k in 1..len {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                if !a.coeffs[i].is_zero() && !b[k - i].is_zero() {
                    acc += &a.coeffs[i] * &b[k - i];
                }
            }
            b.push(if lead.is_positive() { -acc } else { acc });
        }
        let v = a.start;
        Ok(QSeries {
            start: -v,
            prec: a.prec - 2 * v,
            coeffs: b,
        })
    }

    pub fn div(&self, other: &QSeries) -> Result<Self> {
        Ok(self * &other.invert()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return QSeries::one(self.prec - self.start);
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = &acc * self;
        }
        acc
    }

    /// First exponent where the two series differ on their common range.
    pub fn first_mismatch(&self, other: &QSeries) -> Option<(i64, BigInt, BigInt)> {
        let lo = self.start.min(other.start);
        let hi = self.prec.min(other.prec);
        (lo..hi).find_map(|e| {
            let a = self.get(e).cloned().unwrap_or_default();
            let b = other.get(e).cloned().unwrap_or_default();
            (a != b).then_some((e, a, b))
        })
    }

    /// Like [`first_mismatch`](Self::first_mismatch) but comparing residues mod `m`.
    pub fn first_mismatch_mod(&self, other: &QSeries, m: u32) -> Option<(i64, BigInt, BigInt)> {
        let m = BigInt::from(m);
        let lo = self.start.min(other.start);
        let hi = self.prec.min(other.prec);
        (lo..hi).find_map(|e| {
            let a = self.get(e).cloned().unwrap_or_default().mod_floor(&m);
            let b = other.get(e).cloned().unwrap_or_default().mod_floor(&m);
            (a != b).then_some((e, a, b))
        })
    }
}

impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }
}

fn add_impl(a: &QSeries, b: &QSeries, sign: i64) -> QSeries {
    let prec = a.prec.min(b.prec);
    let start = a.start.min(b.start).min(prec);
    let mut out = QSeries::zeros(start, prec);
    for (e, c) in a.iter().take_while(|(e, _)| *e < prec) {
        out.coeffs[(e - start) as usize] += c;
    }
    for (e, c) in b.iter().take_while(|(e, _)| *e < prec) {
        if sign > 0 {
            out.coeffs[(e - start) as usize] += c;
        } else {
            out.coeffs[(e - start) as usize] -= c;
        }
    }
    out
}

fn mul_impl(a: &QSeries, b: &QSeries) -> QSeries {
    let a_lead = a.coeffs.iter().position(|c| !c.is_zero());
    let b_lead = b.coeffs.iter().position(|c| !c.is_zero());
    let (Some(ai), Some(bi)) = (a_lead, b_lead) else {
        // One factor vanishes on its known range.
        let va = a.valuation().unwrap_or(a.prec);
        let vb = b.valuation().unwrap_or(b.prec);
        return QSeries::zero((a.prec + vb).min(b.prec + va));
    };
    let va = a.start + ai as i64;
    let vb = b.start + bi as i64;
    let prec = (a.prec + vb).min(b.prec + va);
    let start = va + vb;
    let len = (prec - start).max(0) as usize;
    let mut out = vec![BigInt::zero(); len];
    let bs = &b.coeffs[bi..];
    for (i, x) in a.coeffs[ai..].iter().enumerate() {
        if i >= len {
            break;
        }
        if x.is_zero() {
            continue;
        }
        for (j, y) in bs.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    QSeries {
        start: start.min(prec),
        prec,
        coeffs: out,
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        add_impl(self, rhs, 1)
    }
}

impl Sub for &QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        add_impl(self, rhs, -1)
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        mul_impl(self, rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            start: self.start,
            prec: self.prec,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QSeries> for QSeries {
            type Output = QSeries;
            fn $m(self, rhs: &QSeries) -> QSeries {
                (&self).$m(rhs)
            }
        }
        impl $tr<QSeries> for &QSeries {
            type Output = QSeries;
            fn $m(self, rhs: QSeries) -> QSeries {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.iter().filter(|(_, c)| !c.is_zero()) {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || e == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{}q", if show_mag { "*" } else { "" })?,
                _ => write!(f, "{}q^{e}", if show_mag { "*" } else { "" })?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.prec)
    }
}

#[derive(Serialize, Deserialize)]
struct Dump {
    valuation: i64,
    precision: i64,
    coeffs: Vec<String>,
}

impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.clone().normalized();
        Dump {
            valuation: n.start,
            precision: n.prec,
            coeffs: n.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let dump = Dump::deserialize(d)?;
        if dump.precision - dump.valuation != dump.coeffs.len() as i64 {
            return Err(D::Error::custom(
                "coefficient count does not match precision - valuation",
            ));
        }
        let coeffs = dump
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(QSeries {
            start: dump.valuation,
            prec: dump.precision,
            coeffs,
        })
    }
}
