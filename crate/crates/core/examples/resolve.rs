//! Build the mapping-cone resolution of `H_L`, check it is exact and
//! minimal, and print its Betti table.

use meet_ideal::fixtures;
use meet_ideal::monomial::lattice_ideal;
use meet_ideal::resolution::{mapping_cone_resolution, BettiTable, DEFAULT_BASIS_CAP};
use meet_ideal::Field;

fn main() -> Result<(), meet_ideal::Error> {
    let l = fixtures::l11();
    let cone = mapping_cone_resolution(&l, DEFAULT_BASIS_CAP)?;
    cone.verify_resolution(&lattice_ideal(&l), Field::Rationals)?;
    println!("ranks {:?}, minimal {}", cone.ranks(), cone.is_minimal());

    // The top basis element and its boundary.
    let last = cone.length();
    println!("{} ->", cone.module(last)[0].label);
    for term in cone.boundary_terms(last, 0) {
        println!("    {term}");
    }
    print!("{}", BettiTable::from_minimal_complex(&cone, Field::Rationals)?.render());
    Ok(())
}
