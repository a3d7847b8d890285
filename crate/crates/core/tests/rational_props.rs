//! Exact arithmetic against an integer cross-multiplication oracle.

use fujita::qlinalg::{format_rat, parse_rat, rat, MatQ};
use fujita::{Rat, VecQ};
use num_bigint::BigInt;
use proptest::prelude::*;

/// `p1/q1 == p2/q2` decided by cross-multiplication.
fn same(r: &Rat, p: &BigInt, q: &BigInt) -> bool {
    r.numer() * q == p * r.denom()
}

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-1000i64..=-1, 1i64..=1000]
}

proptest! {
    #[test]
    fn field_operations(a in -1000i64..=1000, b in nonzero(), c in -1000i64..=1000, d in nonzero()) {
        let (x, y) = (rat(a, b), rat(c, d));
        let (a, b, c, d) = (BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d));
        prop_assert!(same(&(&x + &y), &(&a * &d + &c * &b), &(&b * &d)));
        prop_assert!(same(&(&x - &y), &(&a * &d - &c * &b), &(&b * &d)));
        prop_assert!(same(&(&x * &y), &(&a * &c), &(&b * &d)));
        if c != BigInt::from(0) {
            prop_assert!(same(&(&x / &y), &(&a * &d), &(&b * &c)));
        }
        // canonical form: positive denominator, coprime
        let s = &x + &y;
        prop_assert!(s.denom() > &BigInt::from(0));
        let g = num_integer::Integer::gcd(s.numer(), s.denom());
        prop_assert!(g == BigInt::from(1) || s.numer() == &BigInt::from(0));
    }

    #[test]
    fn string_round_trip(a in -10_000i64..=10_000, b in nonzero()) {
        let x = rat(a, b);
        prop_assert_eq!(parse_rat(&format_rat(&x)), Some(x));
    }

    #[test]
    fn rank_nullity(rows in proptest::collection::vec(proptest::collection::vec(-5i64..=5, 4), 1..6)) {
        let m = MatQ::from_int_rows(&rows);
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), 4);
        for k in &kernel {
            prop_assert!(m.mul_vec(k).unwrap().is_zero());
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn primitive_is_scale_invariant(v in proptest::collection::vec(-20i64..=20, 3), k in 1i64..=9) {
        let a = VecQ::from_ints(&v);
        let b = a.scale(&rat(k, 7));
        prop_assert_eq!(a.primitive(), b.primitive());
    }
}
