//! `H_I ∩ H_J` for a poset ideal and coideal: generators, dual and
//! regularity against the rank of the lattice.

use meet_ideal::duality::intersect_ideal_coideal;
use meet_ideal::fixtures;
use meet_ideal::Field;

fn main() -> Result<(), meet_ideal::Error> {
    for (name, l) in [("L8", fixtures::l8()), ("B3", fixtures::boolean(3))] {
        let all = l.poset().all();
        let ideal = all & !(1 << l.top().expect("lattice"));
        let coideal = all & !(1 << l.bottom());
        let r = intersect_ideal_coideal(&l, ideal, coideal, Field::Rationals)?;
        println!("{name}: {}", r.intersection.render().join(" "));
        print!("{}", r.betti.render());
        println!(
            "linear {}, reg {}, rank {}, formula agrees {}\n",
            r.linear,
            r.regularity,
            r.rank,
            r.formula_matches()
        );
    }
    Ok(())
}
