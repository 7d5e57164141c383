//! Class groups of imaginary quadratic fields and a bound for a real one.

use dedekind::class_group::{class_group_compute, ClassGroupOptions, ClassGroupResult};
use dedekind::order::OrderBasis;

fn main() -> dedekind::Result<()> {
    let options = ClassGroupOptions::default();
    for d in [-1, -5, -21, -23, -47, -14, 10] {
        let o = OrderBasis::quadratic_maximal(d)?;
        match class_group_compute(o.order(), &options)? {
            ClassGroupResult::Exact(g) => {
                let norms: Vec<String> = g.representatives.iter().map(|r| r.abs_norm().to_string()).collect();
                println!(
                    "Q(sqrt({d})): h = {}, invariants {:?}, representative norms [{}]",
                    g.class_number(),
                    g.invariant_factors,
                    norms.join(", ")
                );
            }
            ClassGroupResult::BoundOnly(b) => println!("Q(sqrt({d})): h <= {} ({})", b.upper_bound, b.reason),
        }
    }
    Ok(())
}
