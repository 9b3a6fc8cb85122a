//! Cohen-Macaulay bipartite graphs come from posets. Recover the poset
//! from a graph, then test a complex for being the dual of a poset ideal.

use meet_ideal::duality::{bipartite_lattice, poset_ideal_complex_check, BipartiteGraph, SimplicialComplex};
use meet_ideal::fixtures::{COMPLEX_POSET_IDEAL_JSON, GRAPH_CHAIN2_JSON};
use meet_ideal::poset::DEFAULT_IDEAL_LIMIT;
use meet_ideal::Field;

fn main() -> Result<(), meet_ideal::Error> {
    let graph = BipartiteGraph::from_file(&serde_json::from_str(GRAPH_CHAIN2_JSON).expect("fixture"))?;
    let r = bipartite_lattice(&graph)?;
    println!("poset covers: {:?}", r.poset.to_file().covers);
    println!("edges reproduced {}, dual is the edge ideal {}", r.reproduces_edges, r.dual_matches);

    let complex = SimplicialComplex::from_file(&serde_json::from_str(COMPLEX_POSET_IDEAL_JSON).expect("fixture"))?;
    let left: Vec<String> = complex.vertices().iter().filter(|v| v.starts_with("x_")).cloned().collect();
    let t = poset_ideal_complex_check(&complex, &left, Field::Rationals, DEFAULT_IDEAL_LIMIT)?;
    println!("CM {}, pure {}, poset ideal {:?}", t.cohen_macaulay, t.pure, t.poset_ideal);
    println!("witness: {:?}", t.witness);
    Ok(())
}
