use artinchar::cyclotomic::totient;
use artinchar::{Cyclotomic, Rational};
use proptest::prelude::*;

const ORDERS: [usize; 7] = [1, 2, 3, 4, 6, 8, 12];

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (
        prop::sample::select(ORDERS.to_vec()),
        prop::collection::vec(small_rational(), 12),
    )
        .prop_map(|(e, c)| Cyclotomic::from_exponent_coeffs(e, &c[..e]))
}

proptest! {
    #[test]
    fn ring_axioms(a in cyclotomic(), b in cyclotomic(), c in cyclotomic()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Cyclotomic::zero());
        prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
    }

    #[test]
    fn nonzero_elements_invert(a in cyclotomic()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.inv().unwrap(), Cyclotomic::one());
    }

    #[test]
    fn galois_action_is_a_ring_map(a in cyclotomic(), b in cyclotomic(), t in 1usize..24) {
        prop_assume!(num_integer::gcd(t, 24) == 1);
        let (a, b) = (a.lift(24), b.lift(24));
        prop_assert_eq!((&a * &b).galois(t), &a.galois(t) * &b.galois(t));
        prop_assert_eq!((&a + &b).galois(t), &a.galois(t) + &b.galois(t));
    }

    #[test]
    fn norm_is_multiplicative(a in cyclotomic(), b in cyclotomic()) {
        let (a, b) = (a.lift(24), b.lift(24));
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn representation_is_canonical(e in prop::sample::select(ORDERS.to_vec()), k in 0i64..60, m in 1usize..5) {
        let z = Cyclotomic::root_of_unity(e, k);
        prop_assert_eq!(z.lift(e * m), z.clone());
        prop_assert_eq!(z.pow(e as u32), Cyclotomic::one());
        prop_assert_eq!(z.normalized(), z);
    }
}

#[test]
fn roots_of_unity_sum_to_mobius() {
    let mu = |n: usize| -> i64 {
        let (mut n, mut sign, mut p) = (n, 1, 2);
        while p * p <= n {
            if n % p == 0 {
                n /= p;
                if n % p == 0 {
                    return 0;
                }
                sign = -sign;
            }
            p += 1;
        }
        if n > 1 {
            -sign
        } else {
            sign
        }
    };
    for e in 1..=30usize {
        let primitive: Cyclotomic = (0..e as i64)
            .filter(|&k| num_integer::gcd(k as usize, e) == 1)
            .map(|k| Cyclotomic::root_of_unity(e, k))
            .sum();
        assert_eq!(primitive, Cyclotomic::from_int(mu(e)), "e = {e}");
        let count = (1..=e).filter(|&k| num_integer::gcd(k, e) == 1).count();
        assert_eq!(totient(e), count);
    }
}
