//! Orders given by a basis: discriminant, index and a maximality
//! certificate, for a cubic field and for quadratic fields.

use dedekind::arith::rat;
use dedekind::number_field::NumberField;
use dedekind::order::OrderBasis;
use dedekind::poly::parse_poly;

fn main() -> dedekind::Result<()> {
    let k = NumberField::new(parse_poly("x^3 + x^2 - 2x + 8", 'x')?)?;
    let a = k.gen();
    let half = k.scale(&rat(1, 2), &k.add(&a, &k.pow(&a, 2)));
    for (name, basis) in [("Z[a]", k.power_basis()), ("Z[a, (a+a^2)/2]", vec![k.one(), a, half])] {
        let o = OrderBasis::from_basis(&k, &basis)?.with_certified_maximality()?;
        println!(
            "{name}: disc {}, index {}, {:?}",
            o.discriminant(),
            o.index(),
            o.order().maximality()
        );
    }

    for d in [-5, -3, 5, 10] {
        let o = OrderBasis::quadratic_maximal(d)?;
        let basis: Vec<String> = o.basis().iter().map(|b| b.to_string()).collect();
        println!(
            "Q(sqrt({d})): basis {{{}}}, disc {}",
            basis.join(", "),
            o.discriminant()
        );
    }
    Ok(())
}
