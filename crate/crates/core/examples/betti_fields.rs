//! Betti tables over `Q` and over prime fields, from the subset oracle
//! and from Hochster's formula.

use meet_ideal::fixtures;
use meet_ideal::monomial::lattice_ideal;
use meet_ideal::resolution::{betti_oracle, hochster_betti};
use meet_ideal::Field;

fn main() -> Result<(), meet_ideal::Error> {
    let h = lattice_ideal(&fixtures::l7());
    for field in ["Q", "2", "3"] {
        let field: Field = field.parse().expect("valid field");
        let oracle = betti_oracle(&h, field)?;
        assert_eq!(oracle, hochster_betti(&h, field)?);
        print!("{}", oracle.render());
        println!("regularity {:?}\n", oracle.regularity());
    }
    Ok(())
}
