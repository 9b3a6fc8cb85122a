//! Finite posets stored as down-set bitsets, plus poset ideals and coideals.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};

/// Hard ceiling on the number of elements: sets are `u64` bitsets.
pub const MAX_ELEMENTS: usize = 64;

/// Default ceiling for enumerating all poset ideals.
pub const DEFAULT_IDEAL_LIMIT: usize = 20;

/// A finite poset. Elements are indexed `0..n` in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// `down[i]` holds every `j <= i`.
    down: Vec<u64>,
    /// `up[i]` holds every `j >= i`.
    up: Vec<u64>,
    /// `lower[i]` holds the elements covered by `i`.
    lower: Vec<u64>,
    upper: Vec<u64>,
}

/// Downward closed subset of a poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosetIdeal(pub u64);

/// Upward closed subset of a poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosetCoideal(pub u64);

/// On-disk poset format: `{"elements": [...], "covers": [[child, parent], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
}

impl Poset {
    /// Builds a poset from labels and an arbitrary relation. The relation is
    /// closed reflexively and transitively, then stored by its cover relation.
    pub fn new<S: AsRef<str>>(elements: &[S], relation: &[(S, S)]) -> Result<Poset> {
        let mut index = HashMap::new();
        let mut labels = Vec::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            let label = e.as_ref().to_string();
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label));
            }
            labels.push(label);
        }
        let lookup = |s: &str| index.get(s).copied().ok_or_else(|| Error::UnknownLabel(s.to_string()));
        let mut pairs = Vec::with_capacity(relation.len());
        for (a, b) in relation {
            pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Self::build(labels, index, &pairs)
    }

    /// Builds a poset on `0..n` with labels `"0"`, `"1"`, ...
    pub fn from_relation(n: usize, relation: &[(usize, usize)]) -> Result<Poset> {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Self::from_labeled_relation(labels, relation)
    }

    pub fn from_labeled_relation(labels: Vec<String>, relation: &[(usize, usize)]) -> Result<Poset> {
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        for &(a, b) in relation {
            if a >= labels.len() || b >= labels.len() {
                return Err(Error::UnknownLabel(format!("#{}", a.max(b))));
            }
        }
        Self::build(labels, index, relation)
    }

    pub fn from_file(file: &PosetFile) -> Result<Poset> {
        Self::new(&file.elements, &file.covers)
    }

    pub fn to_file(&self) -> PosetFile {
        PosetFile {
            elements: self.labels.clone(),
            covers: self.covers().into_iter().map(|(a, b)| (self.labels[a].clone(), self.labels[b].clone())).collect(),
        }
    }

    fn build(labels: Vec<String>, index: HashMap<String, usize>, relation: &[(usize, usize)]) -> Result<Poset> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooLarge { size: n, limit: MAX_ELEMENTS });
        }
        let mut down: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for &(a, b) in relation {
            down[b] |= 1 << a;
        }
        // Fixpoint of down[i] |= down[j] for j in down[i].
        loop {
            let mut changed = false;
            for i in 0..n {
                let mut acc = down[i];
                for j in bits::members(down[i]) {
                    acc |= down[j];
                }
                if acc != down[i] {
                    down[i] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for i in 0..n {
            for j in bits::members(down[i]) {
                if j != i && bits::contains(down[j], i) {
                    return Err(Error::CycleDetected(labels[i].clone()));
                }
            }
        }
        let mut up = vec![0u64; n];
        for i in 0..n {
            for j in bits::members(down[i]) {
                up[j] |= 1 << i;
            }
        }
        let mut lower = vec![0u64; n];
        let mut upper = vec![0u64; n];
        for b in 0..n {
            let strict = down[b] & !(1 << b);
            for a in bits::members(strict) {
                // a is covered by b iff nothing strictly between them.
                let between = strict & up[a] & !(1 << a);
                if between == 0 {
                    lower[b] |= 1 << a;
                    upper[a] |= 1 << b;
                }
            }
        }
        Ok(Poset { labels, index, down, up, lower, upper })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index.get(label).copied().ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Resolves a list of labels to a bitset.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<u64> {
        let mut set = 0;
        for l in labels {
            set |= 1 << self.index_of(l.as_ref())?;
        }
        Ok(set)
    }

    pub fn labels_of(&self, set: u64) -> Vec<String> {
        bits::members(set).map(|i| self.labels[i].clone()).collect()
    }

    pub fn all(&self) -> u64 {
        bits::full(self.len())
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        bits::contains(self.down[b], a)
    }

    #[inline]
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Principal down-set of `i` (including `i`).
    #[inline]
    pub fn down(&self, i: usize) -> u64 {
        self.down[i]
    }

    #[inline]
    pub fn up(&self, i: usize) -> u64 {
        self.up[i]
    }

    /// Elements covered by `i`.
    #[inline]
    pub fn lower_covers(&self, i: usize) -> u64 {
        self.lower[i]
    }

    #[inline]
    pub fn upper_covers(&self, i: usize) -> u64 {
        self.upper[i]
    }

    /// Cover pairs `(child, parent)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for b in 0..self.len() {
            for a in bits::members(self.lower[b]) {
                out.push((a, b));
            }
        }
        out.sort_unstable();
        out
    }

    /// Number of pairs `a <= b`, including the reflexive ones.
    pub fn relation_size(&self) -> usize {
        self.down.iter().map(|d| d.count_ones() as usize).sum()
    }

    pub fn maximal(&self, set: u64) -> u64 {
        bits::members(set).filter(|&i| self.up[i] & set == 1 << i).fold(0, |acc, i| acc | 1 << i)
    }

    pub fn minimal(&self, set: u64) -> u64 {
        bits::members(set).filter(|&i| self.down[i] & set == 1 << i).fold(0, |acc, i| acc | 1 << i)
    }

    pub fn downset(&self, set: u64) -> PosetIdeal {
        PosetIdeal(bits::members(set).fold(0, |acc, i| acc | self.down[i]))
    }

    pub fn upset(&self, set: u64) -> PosetCoideal {
        PosetCoideal(bits::members(set).fold(0, |acc, i| acc | self.up[i]))
    }

    pub fn is_ideal(&self, set: u64) -> bool {
        self.downset(set).0 == set
    }

    pub fn is_coideal(&self, set: u64) -> bool {
        self.upset(set).0 == set
    }

    pub fn ideal(&self, set: u64) -> Result<PosetIdeal> {
        if self.is_ideal(set) {
            Ok(PosetIdeal(set))
        } else {
            Err(Error::NotPosetIdeal(self.labels_of(set).join(",")))
        }
    }

    pub fn coideal(&self, set: u64) -> Result<PosetCoideal> {
        if self.is_coideal(set) {
            Ok(PosetCoideal(set))
        } else {
            Err(Error::NotPosetCoideal(self.labels_of(set).join(",")))
        }
    }

    /// Maximal members of an ideal.
    pub fn generators(&self, ideal: PosetIdeal) -> u64 {
        self.maximal(ideal.0)
    }

    /// Minimal members of a coideal.
    pub fn cogenerators(&self, coideal: PosetCoideal) -> u64 {
        self.minimal(coideal.0)
    }

    /// All poset ideals, ordered by size and then by sorted member indices.
    pub fn enumerate_ideals(&self, limit: usize) -> Result<Vec<PosetIdeal>> {
        if self.len() > limit {
            return Err(Error::TooLarge { size: self.len(), limit });
        }
        // Deciding elements along a linear extension means every strict
        // predecessor is already decided when an element is considered.
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| (self.down[i].count_ones(), i));
        let mut out = Vec::new();
        self.extend_ideals(&order, 0, &mut out);
        out.sort_by(|a, b| ideal_order(*a, *b));
        Ok(out.into_iter().map(PosetIdeal).collect())
    }

    fn extend_ideals(&self, order: &[usize], current: u64, out: &mut Vec<u64>) {
        let Some((&i, rest)) = order.split_first() else {
            out.push(current);
            return;
        };
        self.extend_ideals(rest, current, out);
        if bits::is_subset(self.down[i] & !(1 << i), current) {
            self.extend_ideals(rest, current | 1 << i, out);
        }
    }
}

/// Size first, then lexicographic on the sorted member indices.
pub fn ideal_order(a: u64, b: u64) -> std::cmp::Ordering {
    a.count_ones().cmp(&b.count_ones()).then_with(|| bits::members(a).cmp(bits::members(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(elements: &[&str], covers: &[(&str, &str)]) -> Poset {
        Poset::new(elements, covers).unwrap()
    }

    fn final_example() -> Poset {
        p(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "d")])
    }

    // Brute force: every subset, filtered by the defining property.
    fn brute_ideals(poset: &Poset) -> Vec<u64> {
        (0..1u64 << poset.len())
            .filter(|&s| bits::members(s).all(|i| (0..poset.len()).all(|j| !poset.leq(j, i) || bits::contains(s, j))))
            .collect()
    }

    fn brute_downset(poset: &Poset, set: u64) -> u64 {
        // Smallest closed superset: intersect all closed supersets.
        brute_ideals(poset).into_iter().filter(|&s| bits::is_subset(set, s)).fold(poset.all(), |acc, s| acc & s)
    }

    fn brute_maximal(poset: &Poset, set: u64) -> u64 {
        bits::members(set)
            .filter(|&i| bits::members(set).all(|j| j == i || !poset.leq(i, j)))
            .fold(0, |acc, i| acc | 1 << i)
    }

    #[test]
    fn singleton_and_chain() {
        let one = p(&["a"], &[]);
        assert_eq!(one.relation_size(), 1);
        let chain = p(&["a", "c"], &[("a", "c")]);
        assert!(chain.leq(0, 1));
        assert_eq!(chain.relation_size(), 3);
    }

    #[test]
    fn two_disjoint_relations() {
        let poset = p(&["a", "b", "c", "d"], &[("a", "c"), ("b", "d")]);
        assert_eq!(poset.relation_size() - poset.len(), 2);
        assert!(poset.lt(0, 2) && poset.lt(1, 3));
    }

    #[test]
    fn input_relation_is_closed_then_reduced() {
        let poset = p(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("a", "c")]);
        assert_eq!(poset.covers(), vec![(0, 1), (1, 2)]);
        assert!(poset.leq(0, 2));
    }

    #[test]
    fn errors() {
        assert_eq!(Poset::new(&["a", "a"], &[]).unwrap_err(), Error::DuplicateLabel("a".into()));
        assert_eq!(Poset::new(&["a"], &[("a", "z")]).unwrap_err(), Error::UnknownLabel("z".into()));
        assert!(matches!(Poset::new(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err(), Error::CycleDetected(_)));
    }

    #[test]
    fn downset_upset() {
        let poset = p(&["a", "b", "c", "d"], &[("a", "c"), ("b", "d")]);
        let c = poset.set_of(&["c"]).unwrap();
        assert_eq!(poset.downset(c).0, brute_downset(&poset, c));
        assert_eq!(poset.labels_of(poset.downset(c).0), vec!["a", "c"]);
        assert_eq!(poset.downset(0).0, 0);
        let a = poset.set_of(&["a"]).unwrap();
        // upset of {a} in a<c, b<d is {a, c}; in the final example it is {a, c, d}.
        assert_eq!(poset.labels_of(poset.upset(a).0), vec!["a", "c"]);
        let fin = final_example();
        assert_eq!(fin.labels_of(fin.upset(a).0), vec!["a", "c", "d"]);
    }

    #[test]
    fn generators_match_maximality_oracle() {
        let poset = final_example();
        let abd = poset.set_of(&["a", "b", "d"]).unwrap();
        let gens = poset.generators(poset.ideal(abd).unwrap());
        assert_eq!(gens, brute_maximal(&poset, abd));
        assert_eq!(poset.labels_of(gens), vec!["d"]);
        assert_eq!(poset.generators(PosetIdeal(0)), 0);
        let all = poset.generators(PosetIdeal(poset.all()));
        assert_eq!(poset.labels_of(all), vec!["c", "d"]);
        assert!(poset.ideal(poset.set_of(&["c"]).unwrap()).is_err());
    }

    #[test]
    fn ideal_enumeration() {
        let anti = p(&["a", "b"], &[]);
        assert_eq!(anti.enumerate_ideals(20).unwrap().len(), 4);
        let chain = p(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        assert_eq!(chain.enumerate_ideals(20).unwrap().len(), 4);

        let poset = final_example();
        let ideals: Vec<String> =
            poset.enumerate_ideals(20).unwrap().into_iter().map(|i| poset.labels_of(i.0).concat()).collect();
        assert_eq!(ideals, vec!["", "a", "b", "ab", "ac", "abc", "abd", "abcd"]);
        assert_eq!(poset.enumerate_ideals(3), Err(Error::TooLarge { size: 4, limit: 3 }));
    }

    #[test]
    fn ideal_count_matches_brute_force() {
        let posets = [
            final_example(),
            p(&["a", "b", "c", "d", "e"], &[("a", "c"), ("b", "c"), ("c", "d"), ("c", "e")]),
            p(&["a", "b", "c", "d", "e"], &[]),
        ];
        for poset in &posets {
            let mut fast: Vec<u64> = poset.enumerate_ideals(20).unwrap().into_iter().map(|i| i.0).collect();
            fast.sort_unstable();
            assert_eq!(fast, brute_ideals(poset));
        }
    }

    #[test]
    fn generators_reproduce_ideal() {
        let poset = p(&["a", "b", "c", "d", "e"], &[("a", "c"), ("b", "c"), ("c", "d"), ("b", "e")]);
        for ideal in poset.enumerate_ideals(20).unwrap() {
            assert_eq!(poset.downset(poset.generators(ideal)), ideal);
            let co = PosetCoideal(poset.all() & !ideal.0);
            assert!(poset.is_coideal(co.0));
            assert_eq!(poset.upset(poset.cogenerators(co)), co);
        }
    }

    #[test]
    fn transitivity_as_matrix_identity() {
        let poset = p(&["a", "b", "c", "d", "e"], &[("a", "c"), ("b", "c"), ("c", "d"), ("b", "e")]);
        let n = poset.len();
        for a in 0..n {
            for b in 0..n {
                let composed = (0..n).any(|c| poset.leq(a, c) && poset.leq(c, b));
                assert_eq!(composed, poset.leq(a, b));
            }
        }
    }
}
