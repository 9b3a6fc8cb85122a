//! Grafting whiskers onto a complex makes its facet ideal Cohen-Macaulay.

use meet_ideal::duality::{graft_report, SimplicialComplex};
use meet_ideal::Field;

fn main() -> Result<(), meet_ideal::Error> {
    let labels: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
    let path = SimplicialComplex::new(labels, vec![0b0011, 0b0110, 0b1100])?;
    let r = graft_report(&path, Field::Rationals)?;
    println!("grafted: {:?}", r.grafted.to_file().facets);
    println!("facet ideal: {}", r.facet_ideal.render().join(" "));
    println!("Cohen-Macaulay {}, pure {}", r.cohen_macaulay, r.sigma_pure);
    Ok(())
}
