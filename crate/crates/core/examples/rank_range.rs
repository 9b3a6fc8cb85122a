//! Betti tables of the ideals generated by the elements of rank `r..=s`.

use meet_ideal::fixtures;
use meet_ideal::monomial::subfamily_ideal;
use meet_ideal::resolution::betti_table;
use meet_ideal::Field;

fn main() -> Result<(), meet_ideal::Error> {
    let l = fixtures::l11();
    for (r, s) in [(0, 1), (1, 2), (2, 3), (3, 4)] {
        let set = (0..l.len()).filter(|&q| (r..=s).contains(&l.rank(q))).fold(0u64, |acc, q| acc | 1 << q);
        let betti = betti_table(&subfamily_ideal(&l, set), Field::Rationals)?;
        println!("ranks {r}..={s}: elements {}", l.poset().labels_of(set).join(" "));
        print!("{}", betti.render());
    }
    Ok(())
}
