//! The curve y^2 = t^3 + t + 1 over F_5: its coordinate ring is the maximal
//! order of F_5(t)(y), and its class number equals the number of points.

use dedekind::class_group::{class_group_compute, ClassGroupOptions};
use dedekind::domain::EuclideanDomain;
use dedekind::function_field::FunctionFieldQuadratic;

fn main() -> dedekind::Result<()> {
    let ff = FunctionFieldQuadratic::parse(5, "t^3 + t + 1")?;
    let order = ff.order()?;
    println!("{}: {:?}", order.label(), order.maximality());
    let g = class_group_compute(&order, &ClassGroupOptions::default())?.exact()?;
    println!("h = {}, invariants {:?}", g.class_number(), g.invariant_factors);
    for r in &g.representatives {
        println!("  norm {}: {:?}", ff.ring().format(&r.norm()?), r.format_hnf());
    }
    Ok(())
}
