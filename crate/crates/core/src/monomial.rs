//! Squarefree monomials in the variables `x_p, y_p` (one pair per
//! join-irreducible `p`), monomial ideals, colon ideals and linear quotients.
//!
//! Ideals over a plain vertex set reuse the same representation and leave
//! the `y` half empty.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::bits;
use crate::error::{Error, Result};
use crate::semilattice::MeetSemilattice;

/// Default cap on generator counts for exponential searches.
pub const DEFAULT_GENERATOR_LIMIT: usize = 20;
/// Default step budget for the linear-quotients search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 50_000_000;

/// `prod_{p in x} x_p * prod_{p in y} y_p`. The two supports may overlap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SquarefreeMonomial {
    pub x: u64,
    pub y: u64,
}

impl SquarefreeMonomial {
    pub const UNIT: SquarefreeMonomial = SquarefreeMonomial { x: 0, y: 0 };

    pub fn new(x: u64, y: u64) -> Self {
        SquarefreeMonomial { x, y }
    }

    pub fn degree(&self) -> usize {
        (self.x.count_ones() + self.y.count_ones()) as usize
    }

    pub fn is_unit(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn is_variable(&self) -> bool {
        self.degree() == 1
    }

    pub fn divides(&self, other: &Self) -> bool {
        bits::is_subset(self.x, other.x) && bits::is_subset(self.y, other.y)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        SquarefreeMonomial::new(self.x | other.x, self.y | other.y)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        SquarefreeMonomial::new(self.x & other.x, self.y & other.y)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn quotient(&self, other: &Self) -> Option<Self> {
        other.divides(self).then(|| SquarefreeMonomial::new(self.x & !other.x, self.y & !other.y))
    }

    /// `self / gcd(self, other)`.
    pub fn strip(&self, other: &Self) -> Self {
        SquarefreeMonomial::new(self.x & !other.x, self.y & !other.y)
    }

    /// Packs into one bitset: `x_i` at bit `i`, `y_i` at bit `n + i`.
    pub fn flat(&self, n: usize) -> u64 {
        self.x | self.y << n
    }

    pub fn from_flat(flat: u64, n: usize) -> Self {
        SquarefreeMonomial::new(flat & bits::full(n), flat >> n)
    }
}

impl Ord for SquarefreeMonomial {
    /// Degree, then `x` support read with index 0 most significant, then `y`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.x.reverse_bits().cmp(&other.x.reverse_bits()))
            .then_with(|| self.y.reverse_bits().cmp(&other.y.reverse_bits()))
    }
}

impl PartialOrd for SquarefreeMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Names of the variables of the polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Variables {
    /// Variables `x_l, y_l` for every label `l`.
    Paired(Vec<String>),
    /// One variable per label; monomials use the `x` half only.
    Plain(Vec<String>),
}

impl Variables {
    pub fn count(&self) -> usize {
        match self {
            Variables::Paired(l) => 2 * l.len(),
            Variables::Plain(l) => l.len(),
        }
    }

    /// Width of one half (the `n` in `flat`).
    pub fn half(&self) -> usize {
        match self {
            Variables::Paired(l) | Variables::Plain(l) => l.len(),
        }
    }

    /// Name of the variable with flat index `i`.
    pub fn name(&self, i: usize) -> String {
        match self {
            Variables::Paired(l) if i < l.len() => format!("x_{}", l[i]),
            Variables::Paired(l) => format!("y_{}", l[i - l.len()]),
            Variables::Plain(l) => l[i].clone(),
        }
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.count()).map(|i| self.name(i)).collect()
    }

    pub fn flat(&self, m: &SquarefreeMonomial) -> u64 {
        m.flat(self.half())
    }

    pub fn from_flat(&self, flat: u64) -> SquarefreeMonomial {
        SquarefreeMonomial::from_flat(flat, self.half())
    }

    /// Every variable, as a monomial.
    pub fn all(&self) -> SquarefreeMonomial {
        self.from_flat(bits::full(self.count()))
    }

    /// Text form: factors concatenated in flat-index order, `1` for the unit.
    pub fn render(&self, m: &SquarefreeMonomial) -> String {
        if m.is_unit() {
            return "1".to_string();
        }
        bits::members(self.flat(m)).map(|i| self.name(i)).collect()
    }
}

/// A monomial ideal given by a list of squarefree generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    vars: Variables,
    gens: Vec<SquarefreeMonomial>,
}

impl MonomialIdeal {
    /// Keeps the generators exactly as given.
    pub fn from_generators(vars: Variables, gens: Vec<SquarefreeMonomial>) -> Self {
        MonomialIdeal { vars, gens }
    }

    /// Minimized and sorted.
    pub fn new(vars: Variables, gens: Vec<SquarefreeMonomial>) -> Self {
        MonomialIdeal { vars, gens: minimize(gens) }
    }

    pub fn zero(vars: Variables) -> Self {
        MonomialIdeal { vars, gens: Vec::new() }
    }

    pub fn unit(vars: Variables) -> Self {
        MonomialIdeal { vars, gens: vec![SquarefreeMonomial::UNIT] }
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn generators(&self) -> &[SquarefreeMonomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_unit())
    }

    /// The unique minimal generating set, in the deterministic order.
    pub fn minimal_generators(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.vars.clone(), self.gens.clone())
    }

    pub fn is_minimally_generated(&self) -> bool {
        minimize(self.gens.clone()).len() == self.gens.len()
    }

    pub fn contains(&self, m: &SquarefreeMonomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Same ideal (compared through minimal generators).
    pub fn same_ideal(&self, other: &MonomialIdeal) -> bool {
        minimize(self.gens.clone()) == minimize(other.gens.clone())
    }

    /// `(I : u)`, minimally generated.
    pub fn colon(&self, u: &SquarefreeMonomial) -> MonomialIdeal {
        MonomialIdeal::new(self.vars.clone(), self.gens.iter().map(|g| g.strip(u)).collect())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        MonomialIdeal::new(self.vars.clone(), gens)
    }

    /// Intersection via pairwise lcms.
    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.vars.clone(), gens)
    }

    /// Common degree of the minimal generators, if they share one.
    pub fn common_degree(&self) -> Option<usize> {
        let gens = minimize(self.gens.clone());
        let d = gens.first()?.degree();
        gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub fn render(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.vars.render(g)).collect()
    }

    /// Distinct lcms of nonempty subsets of the minimal generators, sorted.
    pub fn lcm_lattice(&self, limit: usize) -> Result<Vec<SquarefreeMonomial>> {
        let gens = minimize(self.gens.clone());
        if gens.len() > limit {
            return Err(Error::TooLarge { size: gens.len(), limit });
        }
        let mut seen: HashSet<SquarefreeMonomial> = HashSet::new();
        for g in &gens {
            let new: Vec<SquarefreeMonomial> = seen.iter().map(|s| s.lcm(g)).collect();
            seen.insert(*g);
            seen.extend(new);
        }
        let mut out: Vec<SquarefreeMonomial> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render().join(", "))
    }
}

/// Drops every generator divisible by another one (and duplicates), then sorts.
pub fn minimize(mut gens: Vec<SquarefreeMonomial>) -> Vec<SquarefreeMonomial> {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<SquarefreeMonomial> = Vec::with_capacity(gens.len());
    // Sorted by degree, so a divisor always comes first.
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

/// Variables `x_p, y_p` over the join-irreducibles of `lattice`.
pub fn lattice_variables(lattice: &MeetSemilattice) -> Variables {
    Variables::Paired(lattice.irreducible_labels())
}

/// `u_q = prod_{p in ell(q)} x_p * prod_{p not in ell(q)} y_p`.
pub fn generator_monomial(lattice: &MeetSemilattice, q: usize) -> SquarefreeMonomial {
    let ell = lattice.ell(q);
    SquarefreeMonomial::new(ell, bits::full(lattice.irreducibles().len()) & !ell)
}

/// `H_Q = (u_q : q in Q)`.
pub fn subfamily_ideal(lattice: &MeetSemilattice, subset: u64) -> MonomialIdeal {
    MonomialIdeal::new(
        lattice_variables(lattice),
        bits::members(subset).map(|q| generator_monomial(lattice, q)).collect(),
    )
}

/// `H_L`.
pub fn lattice_ideal(lattice: &MeetSemilattice) -> MonomialIdeal {
    subfamily_ideal(lattice, lattice.poset().all())
}

/// `H_L(≺ p)`: generators `u_q` for the elements strictly before `p`.
pub fn preceding_ideal(lattice: &MeetSemilattice, p: usize) -> MonomialIdeal {
    let before = lattice.order()[..lattice.position(p)].iter().fold(0u64, |acc, &q| acc | 1 << q);
    subfamily_ideal(lattice, before)
}

/// `(y_{ell(p) \ ell(t)} : t in N(p))`, the colon `H_L(≺ p) : u_p`.
pub fn colon_formula(lattice: &MeetSemilattice, p: usize) -> Result<MonomialIdeal> {
    if p == lattice.bottom() {
        return Err(Error::NotApplicable("colon at the bottom element".into()));
    }
    let gens = bits::members(lattice.lower_neighbors(p))
        .map(|t| SquarefreeMonomial::new(0, lattice.ell(p) & !lattice.ell(t)))
        .collect();
    Ok(MonomialIdeal::new(lattice_variables(lattice), gens))
}

fn check_order(ideal: &MonomialIdeal, order: &[SquarefreeMonomial]) -> Result<()> {
    let mut given = order.to_vec();
    given.sort();
    if given != minimize(ideal.gens.clone()) {
        return Err(Error::NotMinimal);
    }
    Ok(())
}

/// Each colon `(u_1..u_{i-1}) : u_i` is generated by variables, tested by
/// computing the colon ideal.
pub fn linear_quotients_by_colons(ideal: &MonomialIdeal, order: &[SquarefreeMonomial]) -> Result<bool> {
    check_order(ideal, order)?;
    Ok((1..order.len()).all(|i| {
        let prefix = MonomialIdeal::from_generators(ideal.vars.clone(), order[..i].to_vec());
        prefix.colon(&order[i]).gens.iter().all(|g| g.is_variable())
    }))
}

/// Squarefree criterion: for each `i` and `j < i` there is `k < i` with
/// `u_k / [u_k, u_i]` a variable dividing `u_j`.
pub fn linear_quotients_by_criterion(ideal: &MonomialIdeal, order: &[SquarefreeMonomial]) -> Result<bool> {
    check_order(ideal, order)?;
    Ok((1..order.len()).all(|i| {
        (0..i).all(|j| {
            (0..i).any(|k| {
                let q = order[k].strip(&order[i]);
                q.is_variable() && q.divides(&order[j])
            })
        })
    }))
}

/// Checks a generator order for linear quotients. Both tests are run and
/// must agree.
pub fn linear_quotients_check(ideal: &MonomialIdeal, order: &[SquarefreeMonomial]) -> Result<bool> {
    let by_colons = linear_quotients_by_colons(ideal, order)?;
    let by_criterion = linear_quotients_by_criterion(ideal, order)?;
    debug_assert_eq!(by_colons, by_criterion);
    Ok(by_colons)
}

/// Whether appending `next` after the generators in `chosen` keeps linear
/// quotients.
fn extends_linearly(gens: &[SquarefreeMonomial], chosen: u64, next: usize) -> bool {
    let quotients: Vec<SquarefreeMonomial> = bits::members(chosen).map(|j| gens[j].strip(&gens[next])).collect();
    let linear = quotients.iter().filter(|q| q.is_variable()).fold(SquarefreeMonomial::UNIT, |acc, q| acc.lcm(q));
    quotients.iter().all(|q| q.gcd(&linear) != SquarefreeMonomial::UNIT)
}

/// Searches for an order of the minimal generators with linear quotients.
/// Whether a prefix can be extended depends only on its set of generators,
/// so dead sets are memoized. Returns `None` when no order exists.
pub fn linear_quotients_search(
    ideal: &MonomialIdeal,
    limit: usize,
    budget: u64,
) -> Result<Option<Vec<SquarefreeMonomial>>> {
    let gens = minimize(ideal.gens.clone());
    if gens.len() > limit || gens.len() > 63 {
        return Err(Error::TooLarge { size: gens.len(), limit });
    }
    if gens.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let full = bits::full(gens.len());
    let mut dead: HashSet<u64> = HashSet::new();
    let mut steps = 0u64;
    let mut order = Vec::with_capacity(gens.len());
    fn dfs(
        gens: &[SquarefreeMonomial],
        full: u64,
        chosen: u64,
        order: &mut Vec<usize>,
        dead: &mut HashSet<u64>,
        steps: &mut u64,
        budget: u64,
    ) -> Result<bool> {
        if chosen == full {
            return Ok(true);
        }
        if dead.contains(&chosen) {
            return Ok(false);
        }
        *steps += 1;
        if *steps > budget {
            return Err(Error::Timeout(budget));
        }
        for next in 0..gens.len() {
            if bits::contains(chosen, next) || !extends_linearly(gens, chosen, next) {
                continue;
            }
            order.push(next);
            if dfs(gens, full, chosen | 1 << next, order, dead, steps, budget)? {
                return Ok(true);
            }
            order.pop();
        }
        dead.insert(chosen);
        Ok(false)
    }
    if dfs(&gens, full, 0, &mut order, &mut dead, &mut steps, budget)? {
        Ok(Some(order.into_iter().map(|i| gens[i]).collect()))
    } else {
        Ok(None)
    }
}
