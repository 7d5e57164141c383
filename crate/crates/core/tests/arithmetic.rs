mod common;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use dedekind::arith::{factor_integer, gcd_ext, int, Fp, Integer, Rational};
use dedekind::poly::{factor_mod_p, fpoly, qpoly, rational_roots, zpoly, Polynomial};

#[test]
fn gcd_ext_exhaustive() {
    for a in -50i64..=50 {
        for b in -50i64..=50 {
            let (g, u, v) = gcd_ext(&int(a), &int(b));
            assert_eq!(&u * int(a) + &v * int(b), g, "a = {a}, b = {b}");
            if !g.is_zero() {
                assert!((int(a) % &g).is_zero() && (int(b) % &g).is_zero());
            } else {
                assert_eq!((a, b), (0, 0));
            }
        }
    }
}

#[test]
fn factor_integer_round_trips() {
    for n in 1..=100_000i64 {
        let f = factor_integer(&int(n)).unwrap();
        let oracle = common::factor_small(n as u64);
        assert_eq!(f.len(), oracle.len(), "n = {n}");
        let product = f.iter().fold(Integer::one(), |acc, (p, e)| acc * p.pow(*e));
        assert_eq!(product, int(n));
        for (p, e) in &f {
            assert_eq!(oracle.get(&(p.to_string().parse::<u64>().unwrap())), Some(e));
        }
    }
}

#[test]
fn factor_mod_p_round_trips_exhaustively() {
    for p in [2u64, 3] {
        for deg in 1..=4usize {
            let total = p.pow(deg as u32);
            for k in 0..total {
                let mut c: Vec<i64> = (0..deg).map(|i| ((k / p.pow(i as u32)) % p) as i64).collect();
                c.push(1);
                let f = fpoly(&c, p);
                let factors = factor_mod_p(&f).unwrap();
                let product = factors
                    .iter()
                    .fold(Polynomial::constant(Fp::one(p)), |acc, (g, e)| acc.mul(&g.pow(*e)));
                assert_eq!(product, f);
                for (g, _) in &factors {
                    assert!(g.is_monic() && g.degree().unwrap() >= 1);
                }
            }
        }
    }
}

fn small_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1)
}

proptest! {
    #[test]
    fn rational_normalization_is_canonical(a in -200i64..200, b in 1i64..200, c in -200i64..200, d in 1i64..200) {
        let x = Rational::new(int(a), int(b));
        let y = Rational::new(int(c), int(d));
        prop_assert_eq!(x == y, a * d == b * c);
        let again = Rational::new(x.numer().clone(), x.denom().clone());
        prop_assert_eq!(&again, &x);
        prop_assert!(x.denom() > &BigInt::zero());
    }

    #[test]
    fn polynomial_division_round_trips(a in small_poly(8, 20), b in small_poly(8, 20)) {
        let a = qpoly(&a);
        let b = qpoly(&b);
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b).unwrap();
        prop_assert_eq!(q.mul(&b).add(&r), a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn polynomial_gcd_divides_and_is_bezout(a in small_poly(6, 20), b in small_poly(6, 20)) {
        let (a, b) = (qpoly(&a), qpoly(&b));
        prop_assume!(!a.is_zero() || !b.is_zero());
        let (g, u, v) = a.gcd_ext(&b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(a.rem(&g).unwrap().is_zero() && b.rem(&g).unwrap().is_zero());
        prop_assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
    }

    #[test]
    fn rational_roots_match_brute_force(c in small_poly(5, 30)) {
        prop_assume!(c.iter().any(|x| *x != 0));
        let mut roots = rational_roots(&zpoly(&c)).unwrap();
        roots.sort();
        prop_assert_eq!(roots, common::brute_force_rational_roots(&c));
    }
}
