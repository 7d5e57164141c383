//! Admissible absolute values: partitions of remainders and the finite set
//! of multipliers that drives the finiteness of the class group.

use dedekind::admissible::{finset_approx, norm_reduction_step, verify_partition, Admissible};
use dedekind::arith::{int, rat};
use dedekind::domain::{EuclideanDomain, Integers, PolyRingFp};
use dedekind::order::OrderBasis;

fn main() -> dedekind::Result<()> {
    let eps = rat(1, 4);
    let values: Vec<_> = (0..10).map(int).collect();
    let parts = Integers.partition(&eps, &int(10), &values)?;
    println!("Z, eps 1/4, b = 10: card {}, parts {:?}", Integers.card(&eps)?, parts);
    println!(
        "verified: {}",
        verify_partition(&Integers, &eps, &int(10), &values, &parts)?
    );

    let f3 = PolyRingFp::new(3)?;
    println!("F3[t], eps 1/9: card {}", f3.card(&rat(1, 9))?);

    let o = OrderBasis::quadratic_maximal(-5)?;
    let approx = finset_approx(&**o.order())?;
    let set: Vec<String> = approx.set.iter().map(|x| x.to_string()).collect();
    println!("Z[sqrt(-5)]: eps {}, set {{{}}}", approx.epsilon, set.join(", "));
    let (a, b) = (o.element(&[7, 3]), o.element(&[2, -1]));
    let (q, r) = norm_reduction_step(o.order(), &approx, &a, &b)?;
    let rem = o.order().sub(&o.order().scale(&r, &a), &o.order().mul(&q, &b));
    println!(
        "|N({r}a - qb)| = {} < |N(b)| = {}",
        Integers.abv(&o.order().norm(&rem)),
        Integers.abv(&o.order().norm(&b))
    );
    Ok(())
}
