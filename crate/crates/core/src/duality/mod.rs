//! Simplicial complexes, Alexander duality and the dual ideals attached to
//! lattices, poset ideals and bipartite graphs.

mod complex;
mod graph;
mod lattice;

pub use complex::{
    dual_ideal, dual_ideal_by_complement, dual_ideal_by_nonfaces, facet_complex, minimal_primes, minimal_transversals,
    sort_sets, stanley_reisner_complex, ComplexFile, SimplicialComplex, BRUTE_FORCE_VERTEX_LIMIT,
};
pub use graph::{
    bipartite_lattice, eagon_reiner_cm, graft, graft_report, is_shellable, poset_ideal_complex_check, BipartiteGraph,
    BipartiteLattice, GraftReport, GraphFile, PosetIdealComplexReport,
};
pub use lattice::{
    dual_by_one_cogenerated, height2_classification, ideal_by_one_cogenerated, intersect_ideal_coideal, is_flag_dual,
    poset_ideal_dual, rank_range_ideal, HeightTwoPrime, HeightTwoReport, IntersectionReport,
};

#[cfg(test)]
mod tests;
