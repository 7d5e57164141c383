mod common;

use std::sync::Arc;

use proptest::prelude::*;

use dedekind::arith::{int, is_prime_u64, Integer};
use dedekind::domain::Integers;
use dedekind::ideals::{factor_ideal, ideals_of_norm, primes_above, IntegralIdeal};
use dedekind::order::{Order, OrderBasis};
use dedekind::Error;

fn order(d: i64) -> OrderBasis {
    OrderBasis::quadratic_maximal(d).unwrap()
}

fn ideal(o: &OrderBasis, gens: &[(i64, i64)]) -> IntegralIdeal<Integers> {
    let gens: Vec<Vec<Integer>> = gens.iter().map(|(a, b)| o.element(&[*a, *b])).collect();
    IntegralIdeal::from_generators(o.order(), &gens)
}

fn ideals_up_to(o: &Arc<Order<Integers>>, bound: i64) -> Vec<IntegralIdeal<Integers>> {
    (1..=bound).flat_map(|n| ideals_of_norm(o, &int(n)).unwrap()).collect()
}

fn gens() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-30i64..=30, -30i64..=30), 1..=3)
}

fn field() -> impl Strategy<Value = i64> {
    prop::sample::select(vec![-1i64, -5, -23, 2, 5])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hnf_is_canonical(d in field(), g in gens(), seed in any::<u64>(), extra in (-5i64..=5, -5i64..=5)) {
        let o = order(d);
        let base = ideal(&o, &g);
        let mut shuffled = g.clone();
        let n = shuffled.len();
        shuffled.rotate_left((seed as usize) % n);
        prop_assert_eq!(&ideal(&o, &shuffled), &base);
        // A combination of the generators is redundant.
        let combo = g.iter().fold((0, 0), |acc, (a, b)| (acc.0 + extra.0 * a, acc.1 + extra.0 * b));
        let mut more = g.clone();
        more.push(combo);
        prop_assert_eq!(&ideal(&o, &more), &base);
        let mut doubled = g.clone();
        doubled.extend(g.iter().map(|(a, b)| (a * extra.1, b * extra.1)));
        prop_assert_eq!(&ideal(&o, &doubled), &base);
    }

    #[test]
    fn norm_is_multiplicative(d in field(), g in gens(), h in gens()) {
        let o = order(d);
        let (i, j) = (ideal(&o, &g), ideal(&o, &h));
        prop_assert_eq!(i.mul(&j).unwrap().abs_norm(), i.abs_norm() * j.abs_norm());
    }

    #[test]
    fn factorization_is_unique(d in prop::sample::select(vec![-1i64, -5, -23, 5]), g in gens()) {
        let o = order(d);
        let i = ideal(&o, &g);
        prop_assume!(!i.is_zero());
        let f = factor_ideal(&i).unwrap();
        let product = f.product(o.order()).unwrap();
        prop_assert_eq!(&product, &i);
        let mut reversed = IntegralIdeal::unit(o.order());
        for (p, e) in f.factors.iter().rev() {
            reversed = reversed.mul(&p.ideal.pow(*e).unwrap()).unwrap();
        }
        prop_assert_eq!(factor_ideal(&reversed).unwrap(), f);
    }
}

#[test]
fn divisibility_is_containment() {
    for d in [-1, -5] {
        let o = order(d);
        let ideals = ideals_up_to(o.order(), 50);
        for i in &ideals {
            let fi = factor_ideal(i).unwrap();
            for j in &ideals {
                let fj = factor_ideal(j).unwrap();
                // J / I from the exponent vectors, when they dominate.
                let mut h = Some(IntegralIdeal::unit(o.order()));
                for (p, e) in &fi.factors {
                    let ej = fj.factors.iter().find(|(q, _)| q.ideal == p.ideal).map_or(0, |x| x.1);
                    if ej < *e {
                        h = None;
                    }
                }
                if let Some(acc) = h.as_mut() {
                    for (q, ej) in &fj.factors {
                        let ei = fi.factors.iter().find(|(p, _)| p.ideal == q.ideal).map_or(0, |x| x.1);
                        *acc = acc.mul(&q.ideal.pow(ej - ei).unwrap()).unwrap();
                    }
                    assert_eq!(&i.mul(acc).unwrap(), j);
                }
                assert_eq!(h.is_some(), i.contains_ideal(j), "d = {d}");
                assert_eq!(i.divides(j).unwrap(), i.contains_ideal(j));
            }
        }
    }
}

#[test]
fn gaussian_ideal_counts() {
    let o = order(-1);
    for n in 1..=60 {
        assert_eq!(
            ideals_of_norm(o.order(), &int(n)).unwrap().len() as i64,
            common::gaussian_ideal_count(n),
            "n = {n}"
        );
    }
}

#[test]
fn primes_above_small_primes() {
    for d in [-1, -5, -23, 2, 5, 13] {
        let o = order(d);
        for p in (2..=100u64).filter(|p| is_prime_u64(*p)) {
            let p = int(p as i64);
            let primes = primes_above(o.order(), &p).unwrap();
            let total: u32 = primes.iter().map(|q| q.ramification * q.residue_degree).sum();
            assert_eq!(total, 2, "d = {d}, p = {p}");
            let mut product = IntegralIdeal::unit(o.order());
            for q in &primes {
                assert_eq!(q.ideal.abs_norm(), p.pow(q.residue_degree));
                product = product.mul(&q.ideal.pow(q.ramification).unwrap()).unwrap();
                // Maximal: P + (x) = (1) for every x outside P in a box.
                for a in -6..=6 {
                    for b in -6..=6 {
                        let x = o.element(&[a, b]);
                        if !q.ideal.contains(&x) {
                            let sum = q.ideal.add(&IntegralIdeal::principal(o.order(), &x)).unwrap();
                            assert!(sum.is_unit(), "d = {d}, P over {p}, x = {x:?}");
                        }
                    }
                }
            }
            assert_eq!(product, IntegralIdeal::scalar(o.order(), &p));
        }
    }
}

#[test]
fn degenerate_inputs() {
    let o = order(-5);
    let zero = IntegralIdeal::zero(o.order());
    assert!(matches!(factor_ideal(&zero), Err(Error::ZeroIdeal(_))));
    assert!(factor_ideal(&IntegralIdeal::unit(o.order()))
        .unwrap()
        .factors
        .is_empty());
    let other = order(-1);
    let mixed = ideal(&o, &[(2, 0)]).mul(&ideal(&other, &[(2, 0)]));
    assert!(matches!(mixed, Err(Error::MixedOrders)));
    let k = dedekind::number_field::NumberField::quadratic(-3).unwrap();
    let z = OrderBasis::from_basis(&k, &[k.one(), k.gen()])
        .unwrap()
        .with_certified_maximality()
        .unwrap();
    let i = IntegralIdeal::from_generators(z.order(), &[z.element(&[2, 0])]);
    assert!(matches!(factor_ideal(&i), Err(Error::NotMaximal(_))));
}
