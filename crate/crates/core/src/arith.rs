//! Elementary number theory: factorisation, Kronecker symbols, divisor
//! functions and the shapes `p^{4a+1} m^2` / `p1^{4a+1} p2^{4b+1} m^2`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// Prime factorisation `n = prod p^e`, primes ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn product(&self) -> u64 {
        self.factors.iter().map(|&(p, e)| p.pow(e)).product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.iter().find(|f| f.0 == p).map_or(0, |f| f.1)
    }

    /// Primes appearing to an odd power.
    pub fn odd_part_primes(&self) -> Vec<(u64, u32)> {
        self.factors
            .iter()
            .copied()
            .filter(|&(_, e)| e % 2 == 1)
            .collect()
    }

    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Brent's variant of Pollard rho; `n` must be odd and composite.
fn pollard_rho(n: u64) -> u64 {
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
        }
        if d != n {
            return d;
        }
    }
    unreachable!()
}

fn factor_into(n: u64, out: &mut BTreeMap<u64, u32>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        *out.entry(n).or_default() += 1;
        return;
    }
    let d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

/// Factorises `n >= 1`. Small primes are removed by trial division, the
/// cofactor is split with Pollard rho.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize needs a positive integer");
    let mut map = BTreeMap::new();
    let mut m = n;
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while m.is_multiple_of(p) {
            *map.entry(p).or_default() += 1;
            m /= p;
        }
    }
    let mut p = 53;
    while p * p <= m && p < 1000 {
        while m.is_multiple_of(p) {
            *map.entry(p).or_default() += 1;
            m /= p;
        }
        p += 2;
    }
    factor_into(m, &mut map);
    Factorization {
        n,
        factors: map.into_iter().collect(),
    }
}

/// The Kronecker symbol `(a | n)`, extended to all integers.
pub fn kronecker(a: i64, n: i64) -> i32 {
    const TAB: [i32; 8] = [0, 1, 0, -1, 0, -1, 0, 1];
    let (mut a, mut b) = (a as i128, n as i128);
    if b == 0 {
        return i32::from(a.abs() == 1);
    }
    if a % 2 == 0 && b % 2 == 0 {
        return 0;
    }
    let v = b.trailing_zeros();
    b >>= v;
    let mut k = if v % 2 == 0 {
        1
    } else {
        TAB[a.rem_euclid(8) as usize]
    };
    if b < 0 {
        b = -b;
        if a < 0 {
            k = -k;
        }
    }
    loop {
        if a == 0 {
            return if b > 1 { 0 } else { k };
        }
        let v = a.trailing_zeros();
        a >>= v;
        if v % 2 == 1 {
            k *= TAB[(b % 8) as usize];
        }
        if a & b & 2 != 0 {
            k = -k;
        }
        let r = a.abs();
        a = b % r;
        b = r;
    }
}

pub fn moebius(n: u64) -> i32 {
    let f = factorize(n);
    if f.is_squarefree() {
        if f.factors.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

pub fn sigma1(n: u64) -> u64 {
    factorize(n)
        .factors
        .iter()
        .map(|&(p, e)| (p.pow(e + 1) - 1) / (p - 1))
        .product()
}

/// Least positive `delta` with `modulus * delta = 1 (mod p^2)`.
pub fn delta_p(modulus: u64, p: u64) -> Result<u64> {
    if !is_prime(p) || modulus.is_multiple_of(p) {
        return Err(Error::InvalidArgument(format!(
            "{modulus} has no inverse modulo the square of {p}"
        )));
    }
    let p2 = p * p;
    let m = modulus % p2;
    // p^2 is small enough that the Euler totient exponent is immediate.
    let inv = pow_mod(m, p * (p - 1) - 1, p2);
    Ok(if inv == 0 { p2 } else { inv })
}

/// Closed form `((m - 1) p^2 + 1) / m`, valid for `m` in {4, 8, 12, 24}
/// and primes `p > 3`, where `p^2 = 1 (mod m)`.
pub fn delta_p_closed_form(modulus: u64, p: u64) -> Result<u64> {
    let p2 = p * p;
    if p2 % modulus != 1 {
        return Err(Error::InvalidArgument(format!(
            "square of {p} is not 1 modulo {modulus}"
        )));
    }
    Ok(((modulus - 1) * p2 + 1) / modulus)
}

/// `s(l) = (l^2 - 1) / 24` for `l` coprime to 6.
pub fn s_of(ell: i64) -> i64 {
    (ell * ell - 1) / 24
}

/// `M = p^{4a+1} m^2` with `p` prime and `p` not dividing `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OnePrimeShape {
    pub p: u64,
    pub a: u32,
    pub m: u64,
}

/// `M = p1^{4a+1} p2^{4b+1} m^2` with distinct primes not dividing `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoPrimeShape {
    pub p1: u64,
    pub a: u32,
    pub p2: u64,
    pub b: u32,
    pub m: u64,
}

fn square_cofactor(f: &Factorization, skip: &[u64]) -> u64 {
    f.factors
        .iter()
        .filter(|(p, _)| !skip.contains(p))
        .map(|&(p, e)| p.pow(e / 2))
        .product()
}

pub fn shape_one_prime(n: u64) -> Option<OnePrimeShape> {
    if n == 0 {
        return None;
    }
    let f = factorize(n);
    match f.odd_part_primes()[..] {
        [(p, e)] if e % 4 == 1 => Some(OnePrimeShape {
            p,
            a: (e - 1) / 4,
            m: square_cofactor(&f, &[p]),
        }),
        _ => None,
    }
}

/// Two-prime shape subject to `cond(p1, p2)`; both orderings of the pair
/// are tried and the first satisfying one is returned.
pub fn shape_two_primes(n: u64, cond: impl Fn(u64, u64) -> bool) -> Option<TwoPrimeShape> {
    if n == 0 {
        return None;
    }
    let f = factorize(n);
    match f.odd_part_primes()[..] {
        [(p, e), (q, g)] if e % 4 == 1 && g % 4 == 1 => {
            let m = square_cofactor(&f, &[p, q]);
            if cond(p, q) {
                Some(TwoPrimeShape {
                    p1: p,
                    a: (e - 1) / 4,
                    p2: q,
                    b: (g - 1) / 4,
                    m,
                })
            } else if cond(q, p) {
                Some(TwoPrimeShape {
                    p1: q,
                    a: (g - 1) / 4,
                    p2: p,
                    b: (e - 1) / 4,
                    m,
                })
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Small sign functions shared by the double sums and the theorems.
pub mod signs {
    /// 1 if `r = 1, 2 (mod 4)`, else 0.
    pub fn eps_r(r: i64) -> i64 {
        i64::from(matches!(r.rem_euclid(4), 1 | 2))
    }

    /// 1 if `m = n (mod 2)`, else 0.
    pub fn eps_mn(m: i64, n: i64) -> i64 {
        i64::from((m - n).rem_euclid(2) == 0)
    }

    /// 1 for positive arguments, -1 otherwise.
    pub fn sg(m: i64) -> i64 {
        if m > 0 {
            1
        } else {
            -1
        }
    }

    /// Sign with `sg_tilde(0) = 0`.
    pub fn sg_tilde(m: i64) -> i64 {
        m.signum()
    }

    fn neg_one_pow(k: i64) -> i64 {
        if k.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// `(sg(m) (-1)^{n-1} - sg(n) (-1)^{m-1}) / 2`, always in {-1, 0, 1}.
    pub fn eps1(m: i64, n: i64) -> i64 {
        (sg(m) * neg_one_pow(n - 1) - sg(n) * neg_one_pow(m - 1)) / 2
    }

    /// -1 if `n = 0, 1 (mod 4)`, 1 if `n = 2, 3 (mod 4)`.
    pub fn chi(n: i64) -> i64 {
        if n.rem_euclid(4) < 2 {
            -1
        } else {
            1
        }
    }

    /// -1 if `p = ±5 (mod 24)`, else 1.
    pub fn varepsilon(p: i64) -> i64 {
        if matches!(p.rem_euclid(24), 5 | 19) {
            -1
        } else {
            1
        }
    }

    /// 1 if `l = 1 (mod 24)`, else -1.
    pub fn eptwid(ell: i64) -> i64 {
        if ell.rem_euclid(24) == 1 {
            1
        } else {
            -1
        }
    }
}
