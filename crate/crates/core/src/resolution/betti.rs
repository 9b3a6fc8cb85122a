//! Betti numbers of squarefree monomial ideals.
//!
//! [`betti_oracle`] takes the homology of the Taylor complex tensored with
//! the residue field, one multidegree at a time. [`hochster_betti`] uses the
//! reduced homology of restrictions of the Stanley–Reisner complex and
//! handles ideals with too many generators for the Taylor complex.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::bits;
use crate::error::{Error, Result};
use crate::linalg::{self, Field, SparseRow};
use crate::monomial::{MonomialIdeal, SquarefreeMonomial, Variables};

use super::complex::FreeComplex;
use super::taylor::subset_lcm;

pub const ORACLE_LIMIT: usize = 16;
pub const HOCHSTER_VARIABLE_LIMIT: usize = 20;

/// Graded and multigraded Betti numbers `β_{i,a}` of an ideal (not the
/// quotient), so `β_{0,*}` counts minimal generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub field: Field,
    pub vars: Variables,
    pub multigraded: BTreeMap<(usize, SquarefreeMonomial), usize>,
}

impl BettiTable {
    /// `β_{i,j}`, summed over multidegrees of total degree `j`.
    pub fn graded(&self) -> BTreeMap<(usize, usize), usize> {
        let mut out = BTreeMap::new();
        for ((i, a), b) in &self.multigraded {
            *out.entry((*i, a.degree())).or_insert(0) += b;
        }
        out
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.graded().get(&(i, j)).copied().unwrap_or(0)
    }

    /// Total Betti numbers `β_i`.
    pub fn ranks(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for ((i, _), b) in &self.multigraded {
            if out.len() <= *i {
                out.resize(i + 1, 0);
            }
            out[*i] += b;
        }
        out
    }

    /// `max { j - i : β_{i,j} != 0 }`; `None` for the zero ideal.
    pub fn regularity(&self) -> Option<usize> {
        self.multigraded.keys().map(|(i, a)| a.degree() - i).max()
    }

    /// All nonzero `β_{i,j}` have `j = i + d`.
    pub fn is_linear(&self, d: usize) -> bool {
        self.multigraded.keys().all(|(i, a)| a.degree() == i + d)
    }

    /// Reads the Betti numbers off a minimal complex.
    pub fn from_minimal_complex(complex: &FreeComplex, field: Field) -> Result<BettiTable> {
        if !complex.is_minimal() {
            return Err(Error::NotMinimal);
        }
        let mut multigraded = BTreeMap::new();
        for (i, m) in complex.modules().iter().enumerate() {
            for b in m {
                *multigraded.entry((i, b.multidegree)).or_insert(0) += 1;
            }
        }
        Ok(BettiTable { field, vars: complex.vars().clone(), multigraded })
    }

    /// Macaulay-style table: one row per homological degree `i`, one
    /// column per `j - i`, dots for zeros, and the row totals.
    pub fn render(&self) -> String {
        let graded = self.graded();
        let mut out = format!("field: {}\n", self.field);
        if graded.is_empty() {
            out.push_str("zero ideal\n");
            return out;
        }
        let rows = graded.keys().map(|(i, _)| *i).max().unwrap_or(0);
        let lo = graded.keys().map(|(i, j)| j - i).min().unwrap_or(0);
        let hi = graded.keys().map(|(i, j)| j - i).max().unwrap_or(0);
        let width = graded.values().map(|b| b.to_string().len()).max().unwrap_or(1).max(hi.to_string().len()) + 1;
        let _ = write!(out, "{:>6}", "j-i:");
        for s in lo..=hi {
            let _ = write!(out, "{s:>width$}");
        }
        out.push_str("   total\n");
        for i in 0..=rows {
            let _ = write!(out, "{:>6}", format!("{i}:"));
            let mut total = 0;
            for s in lo..=hi {
                match graded.get(&(i, i + s)) {
                    Some(b) => {
                        total += b;
                        let _ = write!(out, "{b:>width$}");
                    }
                    None => {
                        let _ = write!(out, "{:>width$}", ".");
                    }
                }
            }
            let _ = writeln!(out, "   {total}");
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let graded: Vec<Value> = self.graded().iter().map(|((i, j), b)| json!([i, j, b])).collect();
        let multigraded: Vec<Value> =
            self.multigraded.iter().map(|((i, a), b)| json!([i, self.vars.render(a), b])).collect();
        json!({
            "field": self.field.to_string(),
            "ranks": self.ranks(),
            "graded": graded,
            "multigraded": multigraded,
            "regularity": self.regularity(),
        })
    }
}

/// Ranks of the maps of a complex of vector spaces given by, for each
/// degree, a list of basis keys and the boundary of each key.
fn homology_dims(levels: &[Vec<u64>], boundary: impl Fn(u64) -> Vec<(u64, i64)> + Sync, field: Field) -> Vec<usize> {
    let index: Vec<HashMap<u64, usize>> =
        levels.iter().map(|l| l.iter().enumerate().map(|(k, s)| (*s, k)).collect()).collect();
    let mut ranks = vec![0; levels.len() + 1];
    for d in 1..levels.len() {
        let rows: Vec<SparseRow<i64>> = levels[d]
            .iter()
            .map(|&s| {
                let mut row: SparseRow<i64> =
                    boundary(s).into_iter().filter_map(|(f, v)| index[d - 1].get(&f).map(|&k| (k, v))).collect();
                row.sort_by_key(|(k, _)| *k);
                row
            })
            .collect();
        ranks[d] = linalg::rank_integer(&rows, field);
    }
    (0..levels.len()).map(|d| levels[d].len() - ranks[d] - ranks[d + 1]).collect()
}

fn signed_faces(s: u64) -> Vec<(u64, i64)> {
    bits::members(s).enumerate().map(|(k, v)| (s & !(1 << v), if k % 2 == 0 { 1 } else { -1 })).collect()
}

/// `β_{i,a}` from the Taylor complex tensored with the field: at each
/// multidegree `a`, the subsets of generators with lcm exactly `a` and the
/// differential entries between them that have unit monomials.
pub fn betti_oracle(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    let gens = ideal.minimal_generators().generators().to_vec();
    if gens.len() > ORACLE_LIMIT {
        return Err(Error::TooLarge { size: gens.len(), limit: ORACLE_LIMIT });
    }
    let mut strands: HashMap<SquarefreeMonomial, Vec<Vec<u64>>> = HashMap::new();
    for s in 1..=bits::full(gens.len()) {
        let levels = strands.entry(subset_lcm(&gens, s)).or_default();
        let i = s.count_ones() as usize - 1;
        if levels.len() <= i {
            levels.resize(i + 1, Vec::new());
        }
        levels[i].push(s);
    }
    let mut strands: Vec<(SquarefreeMonomial, Vec<Vec<u64>>)> = strands.into_iter().collect();
    strands.sort_by_key(|(a, _)| *a);
    let results: Vec<(SquarefreeMonomial, Vec<usize>)> =
        strands.par_iter().map(|(a, levels)| (*a, homology_dims(levels, signed_faces, field))).collect();
    Ok(collect_table(ideal, field, results))
}

fn collect_table(ideal: &MonomialIdeal, field: Field, results: Vec<(SquarefreeMonomial, Vec<usize>)>) -> BettiTable {
    let mut multigraded = BTreeMap::new();
    for (a, dims) in results {
        for (i, b) in dims.into_iter().enumerate() {
            if b > 0 {
                multigraded.insert((i, a), b);
            }
        }
    }
    BettiTable { field, vars: ideal.vars().clone(), multigraded }
}

/// `β_{i,σ}(I) = dim H̃_{|σ|-i-2}(Δ_σ)` where `Δ` is the Stanley–Reisner
/// complex of `I` and `σ` runs over the lcm lattice.
pub fn hochster_betti(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    let ideal = ideal.minimal_generators();
    let vars = ideal.vars().clone();
    if ideal.is_unit() {
        let mut multigraded = BTreeMap::new();
        multigraded.insert((0, SquarefreeMonomial::UNIT), 1);
        return Ok(BettiTable { field, vars, multigraded });
    }
    let support = ideal.generators().iter().fold(0u64, |acc, g| acc | vars.flat(g));
    let n = support.count_ones() as usize;
    if n > HOCHSTER_VARIABLE_LIMIT {
        return Err(Error::TooLarge { size: n, limit: HOCHSTER_VARIABLE_LIMIT });
    }
    let degrees = ideal.lcm_lattice(usize::MAX)?;
    let results: Vec<(SquarefreeMonomial, Vec<usize>)> = degrees
        .par_iter()
        .map(|a| {
            let sigma = vars.flat(a);
            let size = sigma.count_ones() as usize;
            // levels[d] holds the faces with d elements, d = 0 being the empty face.
            let mut levels: Vec<Vec<u64>> = vec![Vec::new(); size + 1];
            for tau in bits::subsets(sigma) {
                if !ideal.contains(&vars.from_flat(tau)) {
                    levels[tau.count_ones() as usize].push(tau);
                }
            }
            // h[d] = dim H̃_{d-1}(Δ_σ); β_{i,σ} = h[|σ| - i - 1].
            let h = homology_dims(&levels, signed_faces, field);
            let dims = (0..size).map(|i| h[size - i - 1]).collect();
            (*a, dims)
        })
        .collect();
    Ok(collect_table(&ideal, field, results))
}

/// Betti table by the Taylor oracle when the generator count allows it,
/// otherwise by the Stanley–Reisner route.
pub fn betti_table(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    if ideal.minimal_generators().len() <= ORACLE_LIMIT {
        betti_oracle(ideal, field)
    } else {
        hochster_betti(ideal, field)
    }
}

pub fn regularity(ideal: &MonomialIdeal, field: Field) -> Result<usize> {
    betti_table(ideal, field)?.regularity().ok_or(Error::ZeroIdeal)
}

/// `β_{i,j} = 0` unless `j = i + d`, `d` the common generator degree.
pub fn has_linear_resolution(ideal: &MonomialIdeal, field: Field) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let d = ideal.common_degree().ok_or(Error::MixedDegrees)?;
    Ok(betti_table(ideal, field)?.is_linear(d))
}
