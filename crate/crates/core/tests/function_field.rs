mod common;

use dedekind::domain::{EuclideanDomain, PolyRingFp};
use dedekind::function_field::FunctionFieldQuadratic;
use dedekind::ideals::{factor_ideal, primes_above, IntegralIdeal};
use dedekind::Error;

#[test]
fn class_numbers_match_point_counts() {
    for q in [3, 5] {
        for f in common::squarefree_monic_cubics(q)
            .into_iter()
            .step_by(if q == 3 { 1 } else { 7 })
        {
            let ff = FunctionFieldQuadratic::parse(q, &common::format_fq_poly(&f)).unwrap();
            assert_eq!(
                ff.class_number().unwrap() as u64,
                common::projective_points(q, &f),
                "q = {q}, f = {f:?}"
            );
        }
    }
}

#[test]
fn primes_above_irreducibles() {
    let ff = FunctionFieldQuadratic::parse(5, "t^3 + t + 1").unwrap();
    let o = ff.order().unwrap();
    let r = ff.ring();
    for p in (1..=2).flat_map(|k| r.monic_of_degree(k)).filter(|p| r.is_prime(p)) {
        let primes = primes_above(&o, &p).unwrap();
        assert_eq!(primes.iter().map(|q| q.ramification * q.residue_degree).sum::<u32>(), 2);
        for q in &primes {
            assert_eq!(q.ideal.norm().unwrap(), r.pow(&p, q.residue_degree));
        }
    }
    let y = vec![r.zero(), r.one()];
    let fact = factor_ideal(&IntegralIdeal::principal(&o, &y)).unwrap();
    assert_eq!(fact.product(&o).unwrap(), IntegralIdeal::principal(&o, &y));
}

#[test]
fn rejected_inputs() {
    assert!(matches!(
        FunctionFieldQuadratic::parse(2, "t^3+t+1"),
        Err(Error::Unsupported(_))
    ));
    assert!(matches!(
        FunctionFieldQuadratic::parse(5, "t^5+t+1"),
        Err(Error::Unsupported(_))
    ));
    assert!(matches!(
        FunctionFieldQuadratic::parse(5, "2*t^3+1"),
        Err(Error::InvalidInput(_))
    ));
    assert!(matches!(
        FunctionFieldQuadratic::parse(3, "t^3+t^2"),
        Err(Error::InvalidInput(_))
    ));
    assert!(PolyRingFp::new(9).is_err());
}
