use num_bigint::BigInt;
use proptest::prelude::*;

use mockmod4::arith::{factorize, is_prime, kronecker};
use mockmod4::QSeries;

fn series(start: i64, coeffs: Vec<i64>) -> QSeries {
    QSeries::from_i64s(start, &coeffs)
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u128;
    let m128 = m as u128;
    let mut b128 = (b % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b128 % m128;
        }
        b128 = b128 * b128 % m128;
        e >>= 1;
    }
    b = r as u64;
    b
}

fn odd_prime() -> impl Strategy<Value = u64> {
    (3u64..5000).prop_filter("prime", |&p| is_prime(p))
}

proptest! {
    #[test]
    fn factorize_round_trip(n in 1u64..1_000_000_000_000) {
        let f = factorize(n);
        let mut prod = 1u64;
        for &(p, e) in f.factors() {
            prop_assert!(is_prime(p));
            prod *= p.pow(e);
        }
        prop_assert_eq!(prod, n);
    }

    #[test]
    fn euler_criterion(a in -10_000i64..10_000, p in odd_prime()) {
        let r = pow_mod(a.rem_euclid(p as i64) as u64, (p - 1) / 2, p);
        let want = match r { 0 => 0, 1 => 1, _ => -1 };
        prop_assert_eq!(kronecker(a, p as i64), want);
    }

    #[test]
    fn quadratic_reciprocity(p in odd_prime(), q in odd_prime()) {
        prop_assume!(p != q);
        let sign = if (p % 4 == 3) && (q % 4 == 3) { -1 } else { 1 };
        prop_assert_eq!(kronecker(p as i64, q as i64) * kronecker(q as i64, p as i64), sign);
    }

    #[test]
    fn kronecker_multiplicative_top(a in -500i64..500, b in -500i64..500, n in 1i64..2000) {
        prop_assert_eq!(kronecker(a * b, n), kronecker(a, n) * kronecker(b, n));
    }

    #[test]
    fn product_commutes(
        s1 in -3i64..3, c1 in prop::collection::vec(-20i64..20, 1..30),
        s2 in -3i64..3, c2 in prop::collection::vec(-20i64..20, 1..30),
    ) {
        let (a, b) = (series(s1, c1), series(s2, c2));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn product_distributes(
        c1 in prop::collection::vec(-9i64..9, 1..20),
        c2 in prop::collection::vec(-9i64..9, 1..20),
        c3 in prop::collection::vec(-9i64..9, 1..20),
    ) {
        let (a, b, c) = (series(0, c1), series(0, c2), series(0, c3));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn unit_inverse(
        lead in prop::sample::select(vec![-1i64, 1]),
        start in -4i64..4,
        tail in prop::collection::vec(-50i64..50, 0..40),
    ) {
        let mut c = vec![lead];
        c.extend(tail);
        let a = series(start, c);
        let inv = a.invert().unwrap();
        let prod = &a * &inv;
        prop_assert_eq!(prod.precision(), a.precision() - start);
        let one = QSeries::one(prod.precision());
        prop_assert_eq!(prod, one);
    }

    #[test]
    fn negate_q_is_involution(c in prop::collection::vec(-99i64..99, 1..40)) {
        let a = series(0, c);
        prop_assert_eq!(a.negate_q().negate_q(), a);
    }

    #[test]
    fn dilate_then_up(c in prop::collection::vec(-99i64..99, 1..40), k in 1i64..5) {
        let a = series(0, c);
        prop_assert_eq!(a.dilate(k).up(k), a);
    }
}

#[test]
fn non_unit_leading_is_rejected() {
    let a = series(0, vec![2, 1, 1]);
    assert!(a.invert().is_err());
    assert!(QSeries::zero(5).invert().is_err());
}

#[test]
fn json_round_trip() {
    let a = series(-2, vec![1, -3, 0, 7]);
    let text = serde_json::to_string(&a).unwrap();
    let b: QSeries = serde_json::from_str(&text).unwrap();
    assert_eq!(a, b);
    let big = QSeries::monomial(BigInt::from(10).pow(40), 1, 3);
    let text = serde_json::to_string(&big).unwrap();
    assert!(text.contains("\"10000000000000000000000000000000000000000\""));
}
