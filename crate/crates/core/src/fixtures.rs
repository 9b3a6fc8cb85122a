//! Small named semilattices used by the examples, the CLI and the tests.
//!
//! The JSON sources live in `fixtures/` at the crate root and are embedded at
//! compile time, so they are always available.

use crate::bits;
use crate::poset::{Poset, PosetFile};
use crate::semilattice::MeetSemilattice;

pub const L11_JSON: &str = include_str!("../fixtures/l11.json");
pub const L7_JSON: &str = include_str!("../fixtures/l7.json");
pub const L8_JSON: &str = include_str!("../fixtures/l8.json");
pub const L9_JSON: &str = include_str!("../fixtures/l9.json");
pub const B2_JSON: &str = include_str!("../fixtures/b2.json");
pub const B3_JSON: &str = include_str!("../fixtures/b3.json");
pub const REDUNDANT_JSON: &str = include_str!("../fixtures/redundant.json");
pub const COMPLEX_TRIANGLE_JSON: &str = include_str!("../fixtures/complex_triangle.json");
pub const COMPLEX_POSET_IDEAL_JSON: &str = include_str!("../fixtures/complex_poset_ideal.json");
pub const GRAPH_CHAIN2_JSON: &str = include_str!("../fixtures/graph_chain2.json");

pub fn from_json(json: &str) -> MeetSemilattice {
    let file: PosetFile = serde_json::from_str(json).expect("fixture parses");
    MeetSemilattice::new(Poset::from_file(&file).expect("fixture is a poset")).expect("fixture is a semilattice")
}

/// Eleven-element lattice with six join-irreducibles; meet-irredundant
/// but neither meet-distributive nor semimodular.
pub fn l11() -> MeetSemilattice {
    from_json(L11_JSON)
}

/// Seven-element meet-irredundant lattice with four join-irreducibles.
pub fn l7() -> MeetSemilattice {
    from_json(L7_JSON)
}

/// `J(P)` for `P = (a < c, a < d, b < d)`. Join-irreducibles carry the
/// labels of the elements of `P`.
pub fn l8() -> MeetSemilattice {
    from_json(L8_JSON)
}

/// `J(P)` for `P = (a < c, b < d)`.
pub fn l9() -> MeetSemilattice {
    from_json(L9_JSON)
}

/// Lattice whose top has three lower neighbors with a common pairwise meet,
/// so it is not meet-irredundant.
pub fn redundant() -> MeetSemilattice {
    from_json(REDUNDANT_JSON)
}

/// Boolean lattice of rank `n`, elements labeled by their subsets of `a, b, ...`.
pub fn boolean(n: usize) -> MeetSemilattice {
    match n {
        2 => from_json(B2_JSON),
        3 => from_json(B3_JSON),
        _ => {
            let names: Vec<String> = (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
            let labels: Vec<String> = (0..1u64 << n)
                .map(|s| if s == 0 { "0".to_string() } else { bits::members(s).map(|i| names[i].as_str()).collect() })
                .collect();
            let mut relation = Vec::new();
            for s in 0..1usize << n {
                for i in 0..n {
                    if s & 1 << i == 0 {
                        relation.push((s, s | 1 << i));
                    }
                }
            }
            MeetSemilattice::new(Poset::from_labeled_relation(labels, &relation).unwrap()).unwrap()
        }
    }
}

/// Chain `0 < 1 < ... < n-1`.
pub fn chain(n: usize) -> MeetSemilattice {
    let relation: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    MeetSemilattice::new(Poset::from_relation(n, &relation).unwrap()).unwrap()
}

/// Every named fixture.
pub fn all() -> Vec<MeetSemilattice> {
    vec![l11(), l7(), l8(), l9(), boolean(2), boolean(3), redundant(), chain(1), chain(3)]
}

/// Looks up a fixture by name: `l11`, `l7`, `l8`, `l9`, `b2`, `b3`,
/// `redundant`, `complex_triangle`, `complex_poset_ideal` or `graph_chain2`.
pub fn json_by_name(name: &str) -> Option<&'static str> {
    Some(match name {
        "l11" => L11_JSON,
        "l7" => L7_JSON,
        "l8" => L8_JSON,
        "l9" => L9_JSON,
        "b2" => B2_JSON,
        "b3" => B3_JSON,
        "redundant" => REDUNDANT_JSON,
        "complex_triangle" => COMPLEX_TRIANGLE_JSON,
        "graph_chain2" => GRAPH_CHAIN2_JSON,
        "complex_poset_ideal" => COMPLEX_POSET_IDEAL_JSON,
        _ => return None,
    })
}
