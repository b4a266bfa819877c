//! Builders for the standard products and theta series.

use num_bigint::BigInt;
use num_integer::Integer;

use super::QSeries;

/// All integers `n` with `f(n) < limit`, for `f` convex with its minimum
/// near `vertex`.
pub fn convex_range(f: impl Fn(i64) -> i64, vertex: i64, limit: i64) -> Vec<i64> {
    let mut out = Vec::new();
    let mut n = vertex;
    while f(n) < limit {
        out.push(n);
        n -= 1;
    }
    out.reverse();
    let mut n = vertex + 1;
    while f(n) < limit {
        out.push(n);
        n += 1;
    }
    out
}

/// Sparse expansion of `(q^k; q^k)_inf` via the pentagonal number theorem,
/// exponents below `limit`, sorted ascending.
pub fn pentagonal_terms(k: i64, limit: i64) -> Vec<(i64, i64)> {
    let f = |j: i64| k * (j * (3 * j - 1) / 2);
    let mut terms: Vec<(i64, i64)> = convex_range(f, 0, limit)
        .into_iter()
        .map(|j| (f(j), if j.is_even() { 1 } else { -1 }))
        .collect();
    terms.sort_unstable();
    terms
}

/// `prod_k J_k^{e_k}` to precision `prec`, where `J_k = (q^k; q^k)_inf`.
pub fn eta_product(factors: &[(i64, i32)], prec: i64) -> QSeries {
    let mut s = QSeries::one(prec);
    if prec <= 0 {
        return s;
    }
    for &(k, e) in factors {
        assert!(k >= 1, "eta factor index must be positive");
        let terms = pentagonal_terms(k, prec);
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                s.mul_sparse(&terms);
            } else {
                s.div_sparse(&terms);
            }
        }
    }
    s
}

/// `q^shift * prod_k J_k^{e_k}` to precision `prec`.
pub fn eta_quotient(shift: i64, factors: &[(i64, i32)], prec: i64) -> QSeries {
    if prec - shift <= 0 {
        return QSeries::zero(prec);
    }
    eta_product(factors, prec - shift).shift(shift)
}

/// The theta function `j(x; q^b) = sum_n (-1)^n x^n q^{b n(n-1)/2}` with
/// `x = sign * q^a`, to precision `prec`.
pub fn theta_j(sign: i64, a: i64, b: i64, prec: i64) -> QSeries {
    assert!(b >= 1 && sign.abs() == 1);
    let f = |n: i64| b * (n * (n - 1) / 2) + a * n;
    let vertex = Integer::div_floor(&(b - 2 * a), &(2 * b));
    let terms = convex_range(f, vertex, prec).into_iter().map(|n| {
        let neg = n.is_odd() && sign == 1;
        (f(n), if neg { -1 } else { 1 })
    });
    QSeries::from_terms(terms, prec)
}

/// Lowest exponent appearing in `j(±q^a; q^b)`, or `None` when the theta
/// function vanishes identically.
///
/// Equal exponents only occur in pairs symmetric about the vertex. Either
/// every pair cancels (the function is zero) or none does, so checking the
/// pair at the minimum is enough.
pub fn theta_valuation(sign: i64, a: i64, b: i64) -> Option<i64> {
    let f = |n: i64| b * (n * (n - 1) / 2) + a * n;
    let vertex = Integer::div_floor(&(b - 2 * a), &(2 * b));
    let (lo, hi) = (f(vertex), f(vertex + 1));
    if lo == hi {
        let s = |n: i64| if n.is_odd() && sign == 1 { -1 } else { 1 };
        if s(vertex) + s(vertex + 1) == 0 {
            return None;
        }
    }
    Some(lo.min(hi))
}

/// Finite product `prod_{k<n} (1 - sign q^{a + k step})`.
pub fn pochhammer(sign: i64, a: i64, step: i64, n: i64, prec: i64) -> QSeries {
    assert!(sign.abs() == 1);
    // Factors with non-positive exponent e are rewritten as
    // -sign q^e (1 - sign q^{-e}).
    let mut scalar = BigInt::from(1);
    let mut shift = 0;
    let mut positive = Vec::new();
    for k in 0..n {
        let e = a + k * step;
        if e > 0 {
            positive.push(e);
        } else if e == 0 {
            scalar *= 1 - sign;
        } else {
            scalar *= -sign;
            shift += e;
            positive.push(-e);
        }
    }
    let mut s = QSeries::one(prec - shift);
    for e in positive {
        s.mul_one_plus(-sign, e);
    }
    s.shift(shift).scale(&scalar)
}

/// Infinite product `(sign q^a; q^step)_inf` for `a >= 1`.
pub fn pochhammer_inf(sign: i64, a: i64, step: i64, prec: i64) -> QSeries {
    assert!(a >= 1 && step >= 1);
    let mut s = QSeries::one(prec);
    let mut e = a;
    while e < prec {
        s.mul_one_plus(-sign, e);
        e += step;
    }
    s
}

/// Product side of the triple product, `(x; q^b)(q^b/x; q^b)(q^b; q^b)` with
/// `x = sign q^a` and `0 < a < b`.
pub fn jacobi_product(sign: i64, a: i64, b: i64, prec: i64) -> QSeries {
    assert!(0 < a && a < b);
    let x = pochhammer_inf(sign, a, b, prec);
    let y = pochhammer_inf(sign, b - a, b, prec);
    let z = pochhammer_inf(1, b, b, prec);
    &(&x * &y) * &z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euler_product_first_terms() {
        let j1 = eta_product(&[(1, 1)], 13);
        assert_eq!(
            j1,
            QSeries::from_i64s(0, &[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1])
        );
    }

    #[test]
    fn pentagonal_matches_product() {
        let n = 200;
        assert_eq!(eta_product(&[(1, 1)], n), pochhammer_inf(1, 1, 1, n));
        assert_eq!(eta_product(&[(3, 1)], n), pochhammer_inf(1, 3, 3, n));
    }

    #[test]
    fn theta_ratio_example() {
        let s = eta_product(&[(1, 2), (2, -1)], 10);
        assert_eq!(s, QSeries::from_i64s(0, &[1, -2, 0, 0, 2, 0, 0, 0, 0, -2]));
    }

    #[test]
    fn finite_pochhammer() {
        let s = pochhammer(-1, 1, 1, 3, 20);
        assert_eq!(s, QSeries::from_i64s(0, &[1, 1, 1, 2, 1, 1, 1]).truncate(7));
        assert_eq!(s.coeff(7), 0.into());
        assert!(pochhammer(1, 0, 1, 3, 10).is_zero());
    }

    #[test]
    fn triple_product_small_bases() {
        for b in 1..8 {
            for a in 1..b {
                for sign in [1, -1] {
                    assert_eq!(theta_j(sign, a, b, 150), jacobi_product(sign, a, b, 150));
                }
            }
        }
    }

    #[test]
    fn theta_at_minus_one() {
        // j(-1; q) = 2 J_2^2 / J_1
        let lhs = theta_j(-1, 0, 1, 100);
        let rhs = eta_product(&[(2, 2), (1, -1)], 100).scale_i64(2);
        assert_eq!(lhs, rhs);
        assert_eq!(theta_valuation(-1, 0, 1), Some(0));
        assert_eq!(theta_valuation(1, 12, 12), None);
        assert_eq!(theta_valuation(1, -3, 12), Some(-3));
        assert!(theta_j(1, 0, 1, 50).is_zero());
    }
}
