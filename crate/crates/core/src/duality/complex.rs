//! Simplicial complexes given by facets, their Stanley–Reisner and facet
//! ideals, vertex covers and Alexander duals.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, Variables};

/// Vertex count up to which the brute-force dual route is run.
pub const BRUTE_FORCE_VERTEX_LIMIT: usize = 20;

/// A simplicial complex on a labeled vertex set, stored by its facets
/// (bitsets over vertex indices). The void complex has no facets; the
/// complex `{∅}` has the single facet `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

/// Orders vertex sets by size, then lexicographically on their members.
pub fn sort_sets(sets: &mut [u64]) {
    sets.sort_by_key(|s| (s.count_ones(), std::cmp::Reverse(s.reverse_bits())));
}

/// Keeps the inclusion-maximal sets, sorted.
fn maximal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_by_key(|s| std::cmp::Reverse(s.count_ones()));
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| bits::is_subset(s, *k)) {
            kept.push(s);
        }
    }
    sort_sets(&mut kept);
    kept
}

/// Keeps the inclusion-minimal sets, sorted.
fn minimal_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sort_sets(&mut sets);
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| bits::is_subset(*k, s)) {
            kept.push(s);
        }
    }
    kept
}

/// All inclusion-minimal sets meeting every member of `family`, by
/// adding one member at a time and discarding dominated candidates.
pub fn minimal_transversals(family: &[u64]) -> Vec<u64> {
    if family.contains(&0) {
        return Vec::new();
    }
    let mut family = minimal_sets(family.to_vec());
    family.sort_by_key(|s| s.count_ones());
    let mut covers: Vec<u64> = vec![0];
    for &edge in &family {
        let (hit, missed): (Vec<u64>, Vec<u64>) = covers.into_iter().partition(|c| c & edge != 0);
        let mut next = hit.clone();
        for c in missed {
            for v in bits::members(edge) {
                let candidate = c | 1 << v;
                // Dominated if some cover already meeting this edge is contained in it.
                if !hit.iter().any(|h| bits::is_subset(*h, candidate)) {
                    next.push(candidate);
                }
            }
        }
        covers = minimal_sets(next);
    }
    covers
}

impl SimplicialComplex {
    /// Facets are reduced to the inclusion-maximal ones.
    pub fn new(vertices: Vec<String>, facets: Vec<u64>) -> Result<SimplicialComplex> {
        if vertices.len() > 64 {
            return Err(Error::TooLarge { size: vertices.len(), limit: 64 });
        }
        let mut seen = std::collections::HashSet::new();
        for v in &vertices {
            if !seen.insert(v) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let all = bits::full(vertices.len());
        if let Some(f) = facets.iter().find(|f| !bits::is_subset(**f, all)) {
            return Err(Error::Invalid(format!("facet {f:#b} uses unknown vertices")));
        }
        Ok(SimplicialComplex { vertices, facets: maximal_sets(facets) })
    }

    pub fn void(vertices: Vec<String>) -> SimplicialComplex {
        SimplicialComplex { vertices, facets: Vec::new() }
    }

    pub fn simplex(vertices: Vec<String>) -> SimplicialComplex {
        let all = bits::full(vertices.len());
        SimplicialComplex { vertices, facets: vec![all] }
    }

    pub fn from_file(file: &ComplexFile) -> Result<SimplicialComplex> {
        let index: HashMap<&str, usize> = file.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut facets = Vec::with_capacity(file.facets.len());
        for f in &file.facets {
            let mut set = 0u64;
            for v in f {
                let i = index.get(v.as_str()).ok_or_else(|| Error::UnknownLabel(v.clone()))?;
                set |= 1 << i;
            }
            facets.push(set);
        }
        SimplicialComplex::new(file.vertices.clone(), facets)
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            vertices: self.vertices.clone(),
            facets: self.facets.iter().map(|f| self.labels_of(*f)).collect(),
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn labels_of(&self, set: u64) -> Vec<String> {
        bits::members(set).map(|i| self.vertices[i].clone()).collect()
    }

    pub fn variables(&self) -> Variables {
        Variables::Plain(self.vertices.clone())
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, face: u64) -> bool {
        self.facets.iter().any(|f| bits::is_subset(face, *f))
    }

    pub fn all_vertices(&self) -> u64 {
        bits::full(self.vertices.len())
    }

    /// All facets have the same size.
    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].count_ones() == w[1].count_ones())
    }

    /// Dimension (`None` for the void complex).
    pub fn dimension(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.count_ones() as isize - 1).max()
    }

    /// Inclusion-minimal vertex sets that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<u64> {
        let all = self.all_vertices();
        let complements: Vec<u64> = self.facets.iter().map(|f| all & !f).collect();
        minimal_transversals(&complements)
    }

    /// `I_Δ`, generated by the minimal nonfaces.
    pub fn stanley_reisner_ideal(&self) -> MonomialIdeal {
        let vars = self.variables();
        let gens = self.minimal_nonfaces().into_iter().map(|s| vars.from_flat(s)).collect();
        MonomialIdeal::new(vars, gens)
    }

    /// `I(Δ)`, generated by the facets.
    pub fn facet_ideal(&self) -> MonomialIdeal {
        let vars = self.variables();
        let gens = self.facets.iter().map(|f| vars.from_flat(*f)).collect();
        MonomialIdeal::new(vars, gens)
    }

    /// Inclusion-minimal sets meeting every facet.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<u64>> {
        if self.facets.is_empty() {
            return Err(Error::NoFacets);
        }
        Ok(minimal_transversals(&self.facets))
    }

    /// `Δ∨ = { V \ F : F not in Δ }`, with facets the complements of the
    /// minimal nonfaces. The simplex has the void complex as its dual and
    /// vice versa.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        let all = self.all_vertices();
        let facets = self.minimal_nonfaces().into_iter().map(|s| all & !s).collect();
        SimplicialComplex { vertices: self.vertices.clone(), facets: maximal_sets(facets) }
    }

    /// `Δ^c`, whose facets are the complements of the facets of `Δ`.
    pub fn complement(&self) -> SimplicialComplex {
        let all = self.all_vertices();
        let facets = self.facets.iter().map(|f| all & !f).collect();
        SimplicialComplex { vertices: self.vertices.clone(), facets: maximal_sets(facets) }
    }

    /// The same complex on `vertices`, which must extend the current list.
    pub fn with_vertices(&self, vertices: Vec<String>) -> Result<SimplicialComplex> {
        if !vertices.starts_with(&self.vertices) {
            return Err(Error::Invalid("vertex list must extend the current one".into()));
        }
        SimplicialComplex::new(vertices, self.facets.clone())
    }
}

fn flat_supports(ideal: &MonomialIdeal) -> Vec<u64> {
    let vars = ideal.vars();
    ideal.minimal_generators().generators().iter().map(|g| vars.flat(g)).collect()
}

fn check_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// `Δ` with `I_Δ = I`: facets are the complements of the minimal
/// transversals of the generator supports.
pub fn stanley_reisner_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let names = ideal.vars().names();
    let all = bits::full(names.len());
    let facets = minimal_transversals(&flat_supports(ideal)).into_iter().map(|c| all & !c).collect();
    SimplicialComplex::new(names, facets)
}

/// `Γ` with `I(Γ) = I`: facets are the generator supports.
pub fn facet_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    SimplicialComplex::new(ideal.vars().names(), flat_supports(ideal))
}

fn ideal_from_sets(vars: &Variables, sets: Vec<u64>) -> MonomialIdeal {
    MonomialIdeal::new(vars.clone(), sets.into_iter().map(|s| vars.from_flat(s)).collect())
}

/// `I*`, generated by the minimal vertex covers of the facet complex of `I`.
pub fn dual_ideal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    check_proper(ideal)?;
    Ok(ideal_from_sets(ideal.vars(), minimal_transversals(&flat_supports(ideal))))
}

/// `I*` as the facet ideal of `Δ^c`, where `I = I_Δ`.
pub fn dual_ideal_by_complement(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    check_proper(ideal)?;
    let complement = stanley_reisner_complex(ideal)?.complement();
    Ok(ideal_from_sets(ideal.vars(), complement.facets().to_vec()))
}

/// `I*` straight from the definition: `S` is a face of `Δ∨` iff its
/// complement lies in `I`; the generators are the minimal non-faces.
pub fn dual_ideal_by_nonfaces(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    check_proper(ideal)?;
    let vars = ideal.vars();
    let n = vars.count();
    if n > BRUTE_FORCE_VERTEX_LIMIT {
        return Err(Error::TooLarge { size: n, limit: BRUTE_FORCE_VERTEX_LIMIT });
    }
    let all = bits::full(n);
    let nonfaces: Vec<u64> = (0..=all).filter(|&s| !ideal.contains(&vars.from_flat(all & !s))).collect();
    Ok(ideal_from_sets(vars, minimal_sets(nonfaces)))
}

/// Minimal primes of `I`, as variable sets: the minimal vertex covers of
/// its facet complex.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<u64>> {
    check_proper(ideal)?;
    Ok(minimal_transversals(&flat_supports(ideal)))
}
