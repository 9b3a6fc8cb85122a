//! Meet-semilattices: meets, join-irreducibles, the canonical embedding into
//! the Boolean lattice on the join-irreducibles, and the classification
//! predicates (meet-distributive, meet-irredundant, graded, ...).

use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::poset::{Poset, PosetIdeal};

/// A finite meet-semilattice together with its join-irreducible elements
/// `P` and the embedding `ell(q) = { p in P : p <= q }`.
///
/// Elements are also totally ordered by `(deg, index)`; this order extends
/// the partial order and is used everywhere an ordering of `L` or `P` is
/// needed. `P` is stored in that order, and `ell(q)` is a bitset over
/// positions in `P`.
#[derive(Debug, Clone)]
pub struct MeetSemilattice {
    poset: Poset,
    meet: Vec<usize>,
    bottom: usize,
    top: Option<usize>,
    irreducibles: Vec<usize>,
    irreducible_position: Vec<Option<usize>>,
    ell: Vec<u64>,
    order: Vec<usize>,
    position: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_lattice: bool,
    pub is_graded: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_distributive: Option<bool>,
    pub is_meet_distributive: bool,
    pub is_meet_irredundant: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_upper_semimodular: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_lower_semimodular: Option<bool>,
    pub deg: Vec<usize>,
    pub rank: Vec<usize>,
}

/// The distributive lattice of poset ideals of `P`, with `L` embedded by `ell`.
#[derive(Debug, Clone)]
pub struct BirkhoffCompletion {
    pub lattice: MeetSemilattice,
    /// `embedding[q]` is the element of `lattice` that `q` maps to.
    pub embedding: Vec<usize>,
}

impl MeetSemilattice {
    pub fn new(poset: Poset) -> Result<MeetSemilattice> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let mut meet = vec![0usize; n * n];
        for a in 0..n {
            for b in a..n {
                let common = poset.down(a) & poset.down(b);
                let max = poset.maximal(common);
                if max.count_ones() != 1 {
                    return Err(Error::NotMeetSemilattice(poset.label(a).to_string(), poset.label(b).to_string()));
                }
                let m = max.trailing_zeros() as usize;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
            }
        }
        let bottom = (0..n).fold(0, |acc, i| meet[acc * n + i]);
        let maximal = poset.maximal(poset.all());
        let top = (maximal.count_ones() == 1).then(|| maximal.trailing_zeros() as usize);

        let mut lattice = MeetSemilattice {
            poset,
            meet,
            bottom,
            top,
            irreducibles: Vec::new(),
            irreducible_position: vec![None; n],
            ell: vec![0; n],
            order: Vec::new(),
            position: vec![0; n],
        };

        let irreducible: Vec<usize> = (0..n).filter(|&p| lattice.is_join_irreducible(p)).collect();
        debug_assert!(irreducible.iter().all(|&p| lattice.poset.lower_covers(p).count_ones() == 1));
        let irr_set = bits::from_indices(irreducible.iter().copied());
        let degree: Vec<u32> = (0..n).map(|q| (lattice.poset.down(q) & irr_set).count_ones()).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&q| (degree[q], q));
        for (pos, &q) in order.iter().enumerate() {
            lattice.position[q] = pos;
        }
        lattice.irreducibles = order.iter().copied().filter(|q| bits::contains(irr_set, *q)).collect();
        for (pos, &p) in lattice.irreducibles.iter().enumerate() {
            lattice.irreducible_position[p] = Some(pos);
        }
        for q in 0..n {
            lattice.ell[q] = bits::members(lattice.poset.down(q) & irr_set)
                .map(|p| 1u64 << lattice.irreducible_position[p].unwrap())
                .fold(0, |a, b| a | b);
        }
        lattice.order = order;
        Ok(lattice)
    }

    /// The distributive lattice `J(P)` of poset ideals of `poset`.
    ///
    /// A principal ideal is labeled by its generator, every other ideal by
    /// its members in braces.
    pub fn ideal_lattice(poset: &Poset, limit: usize) -> Result<MeetSemilattice> {
        let ideals = poset.enumerate_ideals(limit)?;
        let labels: Vec<String> = ideals.iter().map(|i| ideal_label(poset, i.0)).collect();
        let mut relation = Vec::new();
        for (a, ia) in ideals.iter().enumerate() {
            for (b, ib) in ideals.iter().enumerate() {
                if bits::is_subset(ia.0, ib.0) && (ib.0 & !ia.0).count_ones() == 1 {
                    relation.push((a, b));
                }
            }
        }
        MeetSemilattice::new(Poset::from_labeled_relation(labels, &relation)?)
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self, q: usize) -> &str {
        self.poset.label(q)
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.poset.index_of(label)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    /// Iterated meet of a nonempty set of elements.
    pub fn meet_set(&self, set: u64) -> Result<usize> {
        let mut it = bits::members(set);
        let first = it.next().ok_or(Error::EmptySet)?;
        Ok(it.fold(first, |acc, q| self.meet(acc, q)))
    }

    /// Least upper bound of `set`, when one exists. The empty set has join `0̂`.
    pub fn join_set(&self, set: u64) -> Option<usize> {
        let upper = bits::members(set).fold(self.poset.all(), |acc, q| acc & self.poset.up(q));
        if upper == 0 {
            return None;
        }
        let m = self.meet_set(upper).ok()?;
        bits::contains(upper, m).then_some(m)
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join_set(1 << a | 1 << b)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn is_lattice(&self) -> bool {
        self.top.is_some()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    /// `p != 0̂` and `p` is not the join of the elements strictly below it.
    pub fn is_join_irreducible(&self, p: usize) -> bool {
        if p == self.bottom {
            return false;
        }
        let strict = self.poset.down(p) & !(1 << p);
        self.join_set(strict) != Some(p)
    }

    /// Join-irreducible elements in the fixed total order.
    pub fn irreducibles(&self) -> &[usize] {
        &self.irreducibles
    }

    /// Position of `p` in `irreducibles()`, if `p` is join-irreducible.
    pub fn irreducible_position(&self, p: usize) -> Option<usize> {
        self.irreducible_position[p]
    }

    pub fn irreducible_labels(&self) -> Vec<String> {
        self.irreducibles.iter().map(|&p| self.label(p).to_string()).collect()
    }

    /// `ell(q)` as a bitset over positions in `irreducibles()`.
    #[inline]
    pub fn ell(&self, q: usize) -> u64 {
        self.ell[q]
    }

    pub fn deg(&self, q: usize) -> usize {
        self.ell[q].count_ones() as usize
    }

    /// All elements in the total order (degree, then index).
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Position of `q` in `order()`.
    pub fn position(&self, q: usize) -> usize {
        self.position[q]
    }

    /// Lower neighbors `N(p)`.
    pub fn lower_neighbors(&self, p: usize) -> u64 {
        self.poset.lower_covers(p)
    }

    pub fn rank(&self, p: usize) -> usize {
        self.chain_lengths().1[p]
    }

    /// Shortest and longest maximal chain length from `0̂` to each element.
    fn chain_lengths(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.len();
        let mut shortest = vec![0; n];
        let mut longest = vec![0; n];
        for &q in &self.topological_order() {
            let lower = self.lower_neighbors(q);
            if lower != 0 {
                shortest[q] = 1 + bits::members(lower).map(|c| shortest[c]).min().unwrap();
                longest[q] = 1 + bits::members(lower).map(|c| longest[c]).max().unwrap();
            }
        }
        (shortest, longest)
    }

    fn topological_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&q| (self.poset.down(q).count_ones(), q));
        order
    }

    /// Elements of the closed interval `[x, y]`.
    pub fn interval(&self, x: usize, y: usize) -> u64 {
        self.poset.up(x) & self.poset.down(y)
    }

    /// Whether `[x, y]` is a Boolean lattice.
    pub fn is_boolean_interval(&self, x: usize, y: usize) -> bool {
        if !self.leq(x, y) {
            return false;
        }
        let interval = self.interval(x, y);
        let atoms = self.poset.upper_covers(x) & interval;
        let k = atoms.count_ones();
        if k >= 64 || interval.count_ones() as u64 != 1u64 << k {
            return false;
        }
        let image = |z: usize| self.poset.down(z) & atoms;
        let mut seen = std::collections::HashSet::new();
        for z in bits::members(interval) {
            if !seen.insert(image(z)) {
                return false;
            }
        }
        bits::members(interval)
            .all(|z| bits::members(interval).all(|w| self.leq(z, w) == bits::is_subset(image(z), image(w))))
    }

    pub fn is_graded(&self) -> bool {
        let (shortest, longest) = self.chain_lengths();
        shortest == longest
    }

    /// Every interval `[x, y]` whose bottom is the meet of the lower
    /// neighbors of `y` inside the interval is Boolean.
    pub fn is_meet_distributive(&self) -> bool {
        let n = self.len();
        for y in 0..n {
            for x in bits::members(self.poset.down(y)) {
                if x == y {
                    continue;
                }
                let inside = self.lower_neighbors(y) & self.poset.up(x);
                if self.meet_set(inside).ok() == Some(x) && !self.is_boolean_interval(x, y) {
                    return false;
                }
            }
        }
        true
    }

    /// Shortcut form: `[meet N(y), y]` is Boolean of rank `|N(y)|` for every `y`.
    pub fn is_meet_distributive_by_neighbors(&self) -> bool {
        (0..self.len()).filter(|&y| y != self.bottom).all(|y| {
            let neighbors = self.lower_neighbors(y);
            let m = self.meet_set(neighbors).expect("non-bottom has lower neighbors");
            self.is_boolean_interval(m, y) && self.interval(m, y).count_ones() == 1 << neighbors.count_ones()
        })
    }

    /// For every `p` and every proper nonempty `S ⊂ N(p)`, `meet S > meet N(p)`.
    pub fn is_meet_irredundant(&self) -> bool {
        (0..self.len()).all(|p| {
            let neighbors = self.lower_neighbors(p);
            if neighbors.count_ones() < 2 {
                return true;
            }
            let full = self.meet_set(neighbors).unwrap();
            bits::subsets(neighbors).filter(|&s| s != 0 && s != neighbors).all(|s| self.meet_set(s).unwrap() != full)
        })
    }

    /// Poset of join-irreducibles, labeled as in `L`, indexed by position in `P`.
    pub fn irreducible_poset(&self) -> Poset {
        let mut relation = Vec::new();
        for (i, &a) in self.irreducibles.iter().enumerate() {
            for (j, &b) in self.irreducibles.iter().enumerate() {
                if i != j && self.leq(a, b) {
                    relation.push((i, j));
                }
            }
        }
        Poset::from_labeled_relation(self.irreducible_labels(), &relation).expect("restriction of a partial order")
    }

    /// Birkhoff test: `|L|` equals the number of poset ideals of `P`.
    /// Only meaningful for lattices.
    pub fn is_distributive_by_count(&self, limit: usize) -> Result<bool> {
        Ok(self.irreducible_poset().enumerate_ideals(limit)?.len() == self.len())
    }

    /// `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)` for all triples. `None` if not a lattice.
    pub fn satisfies_distributive_law(&self) -> Option<bool> {
        if !self.is_lattice() {
            return None;
        }
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let left = self.meet(a, self.join(b, c)?);
                    let right = self.join(self.meet(a, b), self.meet(a, c))?;
                    if left != right {
                        return Some(false);
                    }
                }
            }
        }
        Some(true)
    }

    fn covers(&self, upper: usize, lower: usize) -> bool {
        bits::contains(self.lower_neighbors(upper), lower)
    }

    /// `None` unless `L` is a lattice.
    pub fn is_upper_semimodular(&self) -> Option<bool> {
        if !self.is_lattice() {
            return None;
        }
        let n = self.len();
        for p in 0..n {
            for q in p + 1..n {
                let m = self.meet(p, q);
                if self.covers(p, m) && self.covers(q, m) {
                    let j = self.join(p, q)?;
                    if !(self.covers(j, p) && self.covers(j, q)) {
                        return Some(false);
                    }
                }
            }
        }
        Some(true)
    }

    pub fn is_lower_semimodular(&self) -> Option<bool> {
        if !self.is_lattice() {
            return None;
        }
        let n = self.len();
        for p in 0..n {
            for q in p + 1..n {
                let j = self.join(p, q)?;
                if self.covers(j, p) && self.covers(j, q) {
                    let m = self.meet(p, q);
                    if !(self.covers(p, m) && self.covers(q, m)) {
                        return Some(false);
                    }
                }
            }
        }
        Some(true)
    }

    pub fn classify(&self) -> Classification {
        let is_lattice = self.is_lattice();
        let (_, rank) = self.chain_lengths();
        let is_distributive = if is_lattice {
            let by_count =
                self.is_distributive_by_count(crate::poset::MAX_ELEMENTS).expect("P has at most 64 elements");
            debug_assert_eq!(Some(by_count), self.satisfies_distributive_law());
            Some(by_count)
        } else {
            None
        };
        let is_meet_distributive = self.is_meet_distributive();
        debug_assert_eq!(is_meet_distributive, self.is_meet_distributive_by_neighbors());
        Classification {
            is_lattice,
            is_graded: self.is_graded(),
            is_distributive,
            is_meet_distributive,
            is_meet_irredundant: self.is_meet_irredundant(),
            is_upper_semimodular: self.is_upper_semimodular(),
            is_lower_semimodular: self.is_lower_semimodular(),
            deg: (0..self.len()).map(|q| self.deg(q)).collect(),
            rank,
        }
    }

    /// The lattice of poset ideals of `P` and the embedding `q -> ell(q)`.
    pub fn birkhoff_completion(&self, limit: usize) -> Result<BirkhoffCompletion> {
        let p = self.irreducible_poset();
        let ideals = p.enumerate_ideals(limit)?;
        let lattice = MeetSemilattice::ideal_lattice(&p, limit)?;
        let embedding = (0..self.len())
            .map(|q| ideals.iter().position(|i| i.0 == self.ell[q]).expect("ell(q) is a poset ideal of P"))
            .collect();
        Ok(BirkhoffCompletion { lattice, embedding })
    }

    /// Poset ideal of `L` (as a semilattice of its own right, it is the
    /// down-closed subset itself).
    pub fn ideal(&self, set: u64) -> Result<PosetIdeal> {
        self.poset.ideal(set)
    }

    /// 1-cogenerated ideal `{ q : q not >= p }`.
    pub fn one_cogenerated(&self, p: usize) -> PosetIdeal {
        PosetIdeal(self.poset.all() & !self.poset.up(p))
    }

    /// The induced sub-semilattice on a poset ideal of `L`.
    pub fn restrict(&self, ideal: PosetIdeal) -> Result<MeetSemilattice> {
        let members: Vec<usize> = bits::members(ideal.0).collect();
        if members.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        let labels = members.iter().map(|&q| self.label(q).to_string()).collect();
        let mut relation = Vec::new();
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                if i != j && self.leq(a, b) {
                    relation.push((i, j));
                }
            }
        }
        MeetSemilattice::new(Poset::from_labeled_relation(labels, &relation)?)
    }
}

fn ideal_label(poset: &Poset, ideal: u64) -> String {
    let gens = poset.maximal(ideal);
    if gens.count_ones() == 1 {
        poset.label(gens.trailing_zeros() as usize).to_string()
    } else {
        format!("{{{}}}", poset.labels_of(ideal).join(","))
    }
}
