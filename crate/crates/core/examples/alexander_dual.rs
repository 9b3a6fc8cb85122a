//! Alexander duals of complexes and ideals, computed three ways.

use meet_ideal::duality::{
    dual_ideal, dual_ideal_by_complement, dual_ideal_by_nonfaces, height2_classification, is_flag_dual,
    SimplicialComplex,
};
use meet_ideal::fixtures;
use meet_ideal::monomial::lattice_ideal;

fn main() -> Result<(), meet_ideal::Error> {
    let labels: Vec<String> = ["1", "2", "3"].iter().map(|s| s.to_string()).collect();
    let boundary = SimplicialComplex::new(labels, vec![0b011, 0b101, 0b110])?;
    let dual = boundary.alexander_dual();
    println!("dual of the triangle boundary: {:?}", dual.to_file().facets);
    assert_eq!(dual.alexander_dual(), boundary);

    for (name, l) in [("B2", fixtures::boolean(2)), ("L8", fixtures::l8()), ("L11", fixtures::l11())] {
        let h = lattice_ideal(&l);
        let dual = dual_ideal(&h)?;
        assert_eq!(dual, dual_ideal_by_complement(&h)?);
        assert_eq!(dual, dual_ideal_by_nonfaces(&h)?);
        let report = height2_classification(&l)?;
        println!(
            "{name}: {} dual generators, flag {}, higher prime {}",
            dual.len(),
            is_flag_dual(&l)?,
            report.has_higher_prime
        );
        println!("    {}", dual.render().join(" "));
    }
    Ok(())
}
