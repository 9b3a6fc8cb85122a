//! The dual of `H_I` for a poset ideal `I` of a distributive lattice, by
//! formula and by brute force.

use meet_ideal::duality::{dual_by_one_cogenerated, dual_ideal, poset_ideal_dual};
use meet_ideal::fixtures;
use meet_ideal::monomial::subfamily_ideal;

fn main() -> Result<(), meet_ideal::Error> {
    let l = fixtures::l9();
    let poset = l.poset();
    for ideal in poset.enumerate_ideals(64)?.into_iter().filter(|i| i.0 != 0).take(8) {
        let h = subfamily_ideal(&l, ideal.0);
        if h.is_unit() {
            continue;
        }
        let formula = poset_ideal_dual(&l, ideal.0)?;
        assert_eq!(formula, dual_ideal(&h)?);
        assert!(formula.same_ideal(&dual_by_one_cogenerated(&l, ideal.0)?));
        println!("I = {{{}}}", poset.labels_of(ideal.0).join(","));
        println!("    {}", formula.render().join(" "));
    }
    Ok(())
}
