//! Cohen–Macaulay tests through Eagon–Reiner, grafted complexes, and the
//! distributive lattice of a Cohen–Macaulay bipartite graph.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::monomial::{lattice_ideal, linear_quotients_search, MonomialIdeal, SquarefreeMonomial, Variables};
use crate::poset::{Poset, DEFAULT_IDEAL_LIMIT};
use crate::resolution::has_linear_resolution;
use crate::semilattice::MeetSemilattice;

use super::complex::{dual_ideal, stanley_reisner_complex, SimplicialComplex};
use super::lattice::poset_ideal_dual;

/// `K[Δ]` is Cohen–Macaulay, where `I = I_Δ`: the dual `I*` has a linear
/// resolution over `field`.
pub fn eagon_reiner_cm(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    let dual = dual_ideal(ideal)?;
    match has_linear_resolution(&dual, field) {
        Err(Error::MixedDegrees) => Ok(false),
        other => other,
    }
}

/// `Δ` is shellable: `I_{Δ∨}` has linear quotients.
pub fn is_shellable(complex: &SimplicialComplex, budget: u64) -> Result<bool> {
    let dual = dual_ideal(&complex.stanley_reisner_ideal())?;
    Ok(linear_quotients_search(&dual, 63, budget)?.is_some())
}

/// Adds a whisker `{v, v'}` at every vertex `v`.
pub fn graft(complex: &SimplicialComplex) -> Result<SimplicialComplex> {
    let n = complex.vertices().len();
    let mut vertices = complex.vertices().to_vec();
    vertices.extend(complex.vertices().iter().map(|v| format!("{v}'")));
    let mut facets = complex.facets().to_vec();
    facets.extend((0..n).map(|i| 1u64 << i | 1u64 << (n + i)));
    SimplicialComplex::new(vertices, facets)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraftReport {
    pub field: Field,
    pub grafted: SimplicialComplex,
    /// `I(Γ)`.
    pub facet_ideal: MonomialIdeal,
    /// `Σ` with `I_Σ = I(Γ)`.
    pub sigma: SimplicialComplex,
    pub cohen_macaulay: bool,
    pub sigma_pure: bool,
    /// Every facet of `Σ` has `n` vertices.
    pub sigma_facet_size: bool,
}

impl GraftReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "field": self.field.to_string(),
            "grafted": self.grafted.to_file(),
            "facet_ideal": self.facet_ideal.render(),
            "sigma_facets": self.sigma.facets().iter().map(|f| self.sigma.labels_of(*f)).collect::<Vec<_>>(),
            "cohen_macaulay": self.cohen_macaulay,
            "sigma_pure": self.sigma_pure,
            "sigma_facet_size": self.sigma_facet_size,
        })
    }
}

pub fn graft_report(complex: &SimplicialComplex, field: Field) -> Result<GraftReport> {
    let grafted = graft(complex)?;
    let facet_ideal = grafted.facet_ideal();
    let sigma = stanley_reisner_complex(&facet_ideal)?;
    let n = complex.vertices().len() as u32;
    Ok(GraftReport {
        field,
        cohen_macaulay: eagon_reiner_cm(&facet_ideal, field)?,
        sigma_pure: sigma.is_pure(),
        sigma_facet_size: sigma.facets().iter().all(|f| f.count_ones() == n),
        grafted,
        facet_ideal,
        sigma,
    })
}

/// A bipartite graph with vertex classes `left` and `right`; edges are
/// pairs of indices into them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: Vec<String>,
    right: Vec<String>,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl BipartiteGraph {
    pub fn new(left: Vec<String>, right: Vec<String>, mut edges: Vec<(usize, usize)>) -> Result<BipartiteGraph> {
        if left.len() != right.len() {
            return Err(Error::Invalid(format!("classes have sizes {} and {}", left.len(), right.len())));
        }
        if left.len() > 32 {
            return Err(Error::TooLarge { size: left.len(), limit: 32 });
        }
        let mut seen = std::collections::HashSet::new();
        for v in left.iter().chain(&right) {
            if !seen.insert(v) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        if let Some(&(i, j)) = edges.iter().find(|(i, j)| *i >= left.len() || *j >= right.len()) {
            return Err(Error::Invalid(format!("edge ({i}, {j}) out of range")));
        }
        edges.sort();
        edges.dedup();
        Ok(BipartiteGraph { left, right, edges })
    }

    pub fn from_file(file: &GraphFile) -> Result<BipartiteGraph> {
        let find =
            |side: &[String], v: &str| side.iter().position(|s| s == v).ok_or_else(|| Error::UnknownLabel(v.into()));
        let edges = file
            .edges
            .iter()
            .map(|(l, r)| Ok((find(&file.left, l)?, find(&file.right, r)?)))
            .collect::<Result<Vec<_>>>()?;
        BipartiteGraph::new(file.left.clone(), file.right.clone(), edges)
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            left: self.left.clone(),
            right: self.right.clone(),
            edges: self.edges.iter().map(|&(i, j)| (self.left[i].clone(), self.right[j].clone())).collect(),
        }
    }

    pub fn left(&self) -> &[String] {
        &self.left
    }

    pub fn right(&self) -> &[String] {
        &self.right
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.binary_search(&(i, j)).is_ok()
    }

    /// Some vertex lies on no edge.
    pub fn has_isolated_vertex(&self) -> bool {
        let l = self.edges.iter().fold(0u64, |acc, (i, _)| acc | 1 << i);
        let r = self.edges.iter().fold(0u64, |acc, (_, j)| acc | 1 << j);
        let all = bits::full(self.left.len());
        l != all || r != all
    }

    /// Variables: the left vertices, then the right vertices.
    pub fn variables(&self) -> Variables {
        Variables::Plain(self.left.iter().chain(&self.right).cloned().collect())
    }

    pub fn edge_ideal(&self) -> MonomialIdeal {
        let vars = self.variables();
        let n = self.left.len();
        let gens = self.edges.iter().map(|&(i, j)| vars.from_flat(1 << i | 1 << (n + j))).collect();
        MonomialIdeal::new(vars, gens)
    }

    /// A perfect matching by augmenting paths, as the right partner of each
    /// left vertex.
    pub fn perfect_matching(&self) -> Result<Vec<usize>> {
        let n = self.left.len();
        let mut adjacency = vec![Vec::new(); n];
        for &(i, j) in &self.edges {
            adjacency[i].push(j);
        }
        let mut partner_of_right: Vec<Option<usize>> = vec![None; n];
        fn augment(i: usize, adjacency: &[Vec<usize>], visited: &mut [bool], partner: &mut [Option<usize>]) -> bool {
            for &j in &adjacency[i] {
                if visited[j] {
                    continue;
                }
                visited[j] = true;
                if partner[j].is_none_or(|k| augment(k, adjacency, visited, partner)) {
                    partner[j] = Some(i);
                    return true;
                }
            }
            false
        }
        for i in 0..n {
            let mut visited = vec![false; n];
            if !augment(i, &adjacency, &mut visited, &mut partner_of_right) {
                return Err(Error::NoPerfectMatching);
            }
        }
        let mut matching = vec![0; n];
        for (j, i) in partner_of_right.into_iter().enumerate() {
            matching[i.expect("perfect")] = j;
        }
        Ok(matching)
    }
}

#[derive(Debug, Clone)]
pub struct BipartiteLattice {
    /// `P` on the left vertices, `p_i <= p_j` iff `{x_i, y_m(j)}` is an edge.
    pub poset: Poset,
    pub lattice: MeetSemilattice,
    pub matching: Vec<usize>,
    /// Left index of the join-irreducible at each position of `P` in `L(G)`.
    pub left_of_position: Vec<usize>,
    /// Every edge arises from a relation `p_i <= p_j` and vice versa.
    pub reproduces_edges: bool,
    /// `H_{L(G)}* = I(G)`.
    pub dual_matches: bool,
}

impl BipartiteLattice {
    pub fn to_json(&self, graph: &BipartiteGraph) -> serde_json::Value {
        serde_json::json!({
            "matching": self.matching.iter().enumerate().map(|(i, j)| (graph.left[i].clone(), graph.right[*j].clone())).collect::<Vec<_>>(),
            "poset": self.poset.to_file(),
            "lattice_size": self.lattice.len(),
            "reproduces_edges": self.reproduces_edges,
            "dual_matches": self.dual_matches,
        })
    }

    /// Flat set over `left ++ right` of a monomial in the lattice variables.
    fn to_graph_set(&self, m: &SquarefreeMonomial) -> u64 {
        let n = self.matching.len();
        let left = |i: usize| self.left_of_position[i];
        let x = bits::members(m.x).fold(0u64, |acc, i| acc | 1 << left(i));
        let y = bits::members(m.y).fold(0u64, |acc, i| acc | 1 << (n + self.matching[left(i)]));
        x | y
    }

    /// Rewrites an ideal in the variables of `L(G)` over `graph` vertices.
    pub fn to_graph_ideal(&self, graph: &BipartiteGraph, ideal: &MonomialIdeal) -> MonomialIdeal {
        let vars = graph.variables();
        let gens = ideal.generators().iter().map(|m| vars.from_flat(self.to_graph_set(m))).collect();
        MonomialIdeal::new(vars, gens)
    }
}

/// `L(G) = J(P)` for the order read off the edges after matching `x_i`
/// with `y_m(i)`.
pub fn bipartite_lattice(graph: &BipartiteGraph) -> Result<BipartiteLattice> {
    let matching = graph.perfect_matching()?;
    let n = matching.len();
    let mut right_to_left = vec![0; n];
    for (i, &j) in matching.iter().enumerate() {
        right_to_left[j] = i;
    }
    let relation: Vec<(usize, usize)> =
        graph.edges.iter().map(|&(i, j)| (i, right_to_left[j])).filter(|(i, j)| i != j).collect();
    for &(i, j) in &relation {
        if relation.contains(&(j, i)) {
            return Err(Error::NotAPartialOrder(format!(
                "{} and {} are mutually related",
                graph.left[i], graph.left[j]
            )));
        }
        for &(k, l) in &relation {
            if k == j && l != i && !relation.contains(&(i, l)) {
                return Err(Error::NotAPartialOrder(format!(
                    "{} <= {} <= {} is not transitive",
                    graph.left[i], graph.left[j], graph.left[l]
                )));
            }
        }
    }
    let poset = Poset::from_labeled_relation(graph.left.clone(), &relation)?;
    let reproduces_edges = (0..n).all(|i| (0..n).all(|j| poset.leq(i, j) == graph.has_edge(i, matching[j])));
    let lattice = MeetSemilattice::ideal_lattice(&poset, DEFAULT_IDEAL_LIMIT)?;
    let left_of_position = lattice
        .irreducible_labels()
        .iter()
        .map(|l| graph.left.iter().position(|v| v == l).expect("principal ideals carry generator labels"))
        .collect();
    let mut out =
        BipartiteLattice { poset, lattice, matching, left_of_position, reproduces_edges, dual_matches: false };
    let dual = dual_ideal(&lattice_ideal(&out.lattice))?;
    out.dual_matches = out.to_graph_ideal(graph, &dual).same_ideal(&graph.edge_ideal());
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetIdealComplexReport {
    pub field: Field,
    /// `S/I(Δ)` is Cohen–Macaulay.
    pub cohen_macaulay: bool,
    /// `Γ` with `I_Γ = I(Δ)` is pure.
    pub pure: bool,
    /// Some poset ideal of `L(G)` containing every join-irreducible has
    /// `H_I* = I(Δ)`; `None` when `L(G)` exceeds the search cap.
    pub poset_ideal: Option<bool>,
    /// The members of such an ideal, by label.
    pub witness: Option<Vec<String>>,
}

impl PosetIdealComplexReport {
    /// The three conditions agree (ignoring an unknown third).
    pub fn equivalent(&self) -> bool {
        self.cohen_macaulay == self.pure && self.poset_ideal.is_none_or(|c| c == self.pure)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "field": self.field.to_string(),
            "cohen_macaulay": self.cohen_macaulay,
            "pure": self.pure,
            "poset_ideal": self.poset_ideal,
            "witness": self.witness,
            "equivalent": self.equivalent(),
        })
    }
}

/// Checks the hypotheses on `Δ` with vertex classes `left` and the rest,
/// then evaluates the three equivalent conditions separately.
pub fn poset_ideal_complex_check(
    complex: &SimplicialComplex,
    left: &[String],
    field: Field,
    limit: usize,
) -> Result<PosetIdealComplexReport> {
    let index: HashMap<&str, usize> = complex.vertices().iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let mut v = 0u64;
    for l in left {
        v |= 1 << index.get(l.as_str()).ok_or_else(|| Error::UnknownLabel(l.clone()))?;
    }
    let v_prime = complex.all_vertices() & !v;
    if v.count_ones() != v_prime.count_ones() {
        return Err(Error::Invalid("the two vertex classes differ in size".into()));
    }
    if let Some(f) = complex.facets().iter().find(|f| bits::is_subset(**f, v)) {
        return Err(Error::HypothesisViolated(
            1,
            format!("facet {{{}}} lies in the first class", complex.labels_of(*f).join(",")),
        ));
    }
    let left_ids: Vec<usize> = bits::members(v).collect();
    let right_ids: Vec<usize> = bits::members(v_prime).collect();
    let mut edges = Vec::new();
    for &f in complex.facets() {
        if f & v != 0 && f & v_prime != 0 {
            if f.count_ones() != 2 {
                return Err(Error::HypothesisViolated(
                    2,
                    format!("facet {{{}}} is not an edge", complex.labels_of(f).join(",")),
                ));
            }
            let a = (f & v).trailing_zeros() as usize;
            let b = (f & v_prime).trailing_zeros() as usize;
            edges.push((
                left_ids.iter().position(|&x| x == a).unwrap(),
                right_ids.iter().position(|&x| x == b).unwrap(),
            ));
        }
    }
    let names = |ids: &[usize]| ids.iter().map(|&i| complex.vertices()[i].clone()).collect::<Vec<_>>();
    let graph = BipartiteGraph::new(names(&left_ids), names(&right_ids), edges)?;
    if graph.has_isolated_vertex() {
        return Err(Error::HypothesisViolated(2, "the graph has an isolated vertex".into()));
    }
    if !eagon_reiner_cm(&graph.edge_ideal(), field)? {
        return Err(Error::HypothesisViolated(2, "the graph is not Cohen-Macaulay".into()));
    }
    let lg = bipartite_lattice(&graph)?;

    // I(Δ) in the graph's variable order (left class, then right class).
    let vars = graph.variables();
    let order: Vec<usize> = left_ids.iter().chain(&right_ids).copied().collect();
    let facet_ideal = MonomialIdeal::new(
        vars.clone(),
        complex
            .facets()
            .iter()
            .map(|&f| {
                vars.from_flat(
                    order
                        .iter()
                        .enumerate()
                        .filter(|(_, o)| bits::contains(f, **o))
                        .fold(0, |acc, (k, _)| acc | 1 << k),
                )
            })
            .collect(),
    );
    let cohen_macaulay = eagon_reiner_cm(&facet_ideal, field)?;
    let pure = stanley_reisner_complex(&facet_ideal)?.is_pure();

    let irreducibles = bits::from_indices(lg.lattice.irreducibles().iter().copied());
    let (poset_ideal, witness) = match lg.lattice.poset().enumerate_ideals(limit) {
        Err(Error::TooLarge { .. }) => (None, None),
        Err(e) => return Err(e),
        Ok(ideals) => {
            let found = ideals.into_iter().filter(|i| bits::is_subset(irreducibles, i.0)).find_map(|i| {
                poset_ideal_dual(&lg.lattice, i.0)
                    .map(|d| lg.to_graph_ideal(&graph, &d).same_ideal(&facet_ideal).then_some(i))
                    .transpose()
            });
            match found.transpose()? {
                Some(i) => (Some(true), Some(lg.lattice.poset().labels_of(i.0))),
                None => (Some(false), None),
            }
        }
    };
    Ok(PosetIdealComplexReport { field, cohen_macaulay, pure, poset_ideal, witness })
}
