//! Meet-distributive lattices have a minimal resolution given by a closed
//! formula. Compare it with the mapping cone on the Boolean lattice `B_3`.

use meet_ideal::fixtures;
use meet_ideal::monomial::lattice_ideal;
use meet_ideal::resolution::{mapping_cone_resolution, meet_distributive_differential, DEFAULT_BASIS_CAP};
use meet_ideal::Field;

fn main() -> Result<(), meet_ideal::Error> {
    let l = fixtures::boolean(3);
    let closed = meet_distributive_differential(&l)?;
    closed.verify_resolution(&lattice_ideal(&l), Field::Rationals)?;
    let cone = mapping_cone_resolution(&l, DEFAULT_BASIS_CAP)?;
    println!("closed form ranks {:?}, minimal {}", closed.ranks(), closed.is_minimal());
    println!("mapping cone ranks {:?}, minimal {}", cone.ranks(), cone.is_minimal());

    let redundant = fixtures::redundant();
    match meet_distributive_differential(&redundant) {
        Ok(_) => println!("unexpected closed form"),
        Err(e) => println!("non-meet-distributive input: {e}"),
    }
    Ok(())
}
