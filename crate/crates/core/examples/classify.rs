//! Classify a meet-semilattice and print its generators `u_q` in the
//! total order used by the resolution.

use meet_ideal::fixtures;
use meet_ideal::monomial::{generator_monomial, lattice_variables};

fn main() {
    let l = fixtures::l11();
    let c = l.classify();
    println!("join-irreducibles: {}", l.irreducible_labels().join(" "));
    println!("lattice {}, graded {}", c.is_lattice, c.is_graded);
    println!("meet-distributive {}, meet-irredundant {}", c.is_meet_distributive, c.is_meet_irredundant);
    let vars = lattice_variables(&l);
    for &q in l.order() {
        println!("  u_{:<2} = {}", l.label(q), vars.render(&generator_monomial(&l, q)));
    }
}
