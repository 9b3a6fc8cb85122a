//! Count meet-semilattices and distributive lattices up to isomorphism.

use meet_ideal::generate;

fn main() {
    for n in 1..=7 {
        let semilattices = generate::meet_semilattices(n);
        let md = semilattices.iter().filter(|l| l.is_meet_distributive()).count();
        let mi = semilattices.iter().filter(|l| l.is_meet_irredundant()).count();
        println!("{n} elements: {} semilattices, {md} meet-distributive, {mi} meet-irredundant", semilattices.len());
    }
    println!("distributive lattices with at most 4 irreducibles: {}", generate::distributive_lattices(4).len());
}
