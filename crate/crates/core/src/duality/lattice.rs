//! Alexander duals of the ideals `H_L`, `H_I` and `H_I ∩ H_J` for
//! lattices, computed by closed formulas and checked against the cover route.

use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::monomial::{lattice_ideal, lattice_variables, subfamily_ideal, MonomialIdeal, SquarefreeMonomial};
use crate::poset::Poset;
use crate::resolution::{betti_table, BettiTable};
use crate::semilattice::MeetSemilattice;

use super::complex::{dual_ideal, minimal_primes};

/// A prime `(x_p, y_q)` in labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HeightTwoPrime {
    pub x: String,
    pub y: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HeightTwoReport {
    pub height_two: Vec<HeightTwoPrime>,
    /// The height-2 primes are exactly `(x_p, y_q)` with `p <= q` in `P`.
    pub matches_order: bool,
    pub max_height: usize,
    pub has_higher_prime: bool,
    pub is_distributive: bool,
    /// `has_higher_prime` holds iff `L` is not distributive.
    pub consistent: bool,
}

pub(crate) fn is_distributive(lattice: &MeetSemilattice) -> bool {
    lattice.is_lattice() && lattice.satisfies_distributive_law() == Some(true)
}

fn require_distributive(lattice: &MeetSemilattice) -> Result<()> {
    if is_distributive(lattice) {
        Ok(())
    } else {
        Err(Error::NotDistributive)
    }
}

/// `(x_p, y_q)` for `p <= q` in `P`, as `(position of p, position of q)`.
fn order_pairs(lattice: &MeetSemilattice) -> Vec<(usize, usize)> {
    let ps = lattice.irreducibles();
    let mut out = Vec::new();
    for (i, &a) in ps.iter().enumerate() {
        for (j, &b) in ps.iter().enumerate() {
            if lattice.leq(a, b) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Minimal primes of `H_L` sorted by height, compared with the pattern
/// `(x_p, y_q)`, `p <= q`.
pub fn height2_classification(lattice: &MeetSemilattice) -> Result<HeightTwoReport> {
    if !lattice.is_lattice() {
        return Err(Error::NotLattice);
    }
    let distributive = is_distributive(lattice);
    let n = lattice.irreducibles().len();
    if n == 0 {
        return Ok(HeightTwoReport {
            height_two: Vec::new(),
            matches_order: true,
            max_height: 0,
            has_higher_prime: false,
            is_distributive: distributive,
            consistent: distributive,
        });
    }
    let primes = minimal_primes(&lattice_ideal(lattice))?;
    let labels = lattice.irreducible_labels();
    let mut pairs: Vec<(usize, usize)> = primes
        .iter()
        .filter(|s| s.count_ones() == 2)
        .filter_map(|&s| {
            let x = s & bits::full(n);
            let y = s >> n;
            (x.count_ones() == 1 && y.count_ones() == 1)
                .then(|| (x.trailing_zeros() as usize, y.trailing_zeros() as usize))
        })
        .collect();
    pairs.sort();
    let height_two_total = primes.iter().filter(|s| s.count_ones() == 2).count();
    let mut expected = order_pairs(lattice);
    expected.sort();
    let max_height = primes.iter().map(|s| s.count_ones() as usize).max().unwrap_or(0);
    let has_higher_prime = max_height > 2;
    Ok(HeightTwoReport {
        height_two: pairs
            .iter()
            .map(|&(i, j)| HeightTwoPrime { x: format!("x_{}", labels[i]), y: format!("y_{}", labels[j]) })
            .collect(),
        matches_order: pairs == expected && height_two_total == pairs.len(),
        max_height,
        has_higher_prime,
        is_distributive: distributive,
        consistent: has_higher_prime != distributive,
    })
}

/// Every minimal generator of `H_L*` has degree 2, i.e. the dual of the
/// Stanley–Reisner complex of `H_L` is flag.
pub fn is_flag_dual(lattice: &MeetSemilattice) -> Result<bool> {
    if !lattice.is_lattice() {
        return Err(Error::NotLattice);
    }
    if lattice.irreducibles().is_empty() {
        return Ok(true);
    }
    Ok(dual_ideal(&lattice_ideal(lattice))?.generators().iter().all(|g| g.degree() == 2))
}

/// `∏_{r in G(ell(q))} y_r`, over the maximal elements of `ell(q)` in `P`.
fn generator_y_monomial(lattice: &MeetSemilattice, poset_p: &Poset, q: usize) -> SquarefreeMonomial {
    SquarefreeMonomial::new(0, poset_p.maximal(lattice.ell(q)))
}

/// `∏_{r in G(ell(q)^c)} x_r`, over the minimal elements of `P \ ell(q)`.
fn cogenerator_x_monomial(lattice: &MeetSemilattice, poset_p: &Poset, q: usize) -> SquarefreeMonomial {
    let rest = bits::full(lattice.irreducibles().len()) & !lattice.ell(q);
    SquarefreeMonomial::new(poset_p.minimal(rest), 0)
}

fn check_ideal(lattice: &MeetSemilattice, ideal: u64) -> Result<()> {
    if ideal == 0 {
        return Err(Error::EmptyIdeal);
    }
    lattice.poset().ideal(ideal).map(|_| ())
}

/// `H_I* = (H_L*, ∏_{r in G(ell(q))} y_r : q not in I)` for a poset ideal
/// `I` of a distributive lattice.
pub fn poset_ideal_dual(lattice: &MeetSemilattice, ideal: u64) -> Result<MonomialIdeal> {
    require_distributive(lattice)?;
    check_ideal(lattice, ideal)?;
    let base = lattice_dual(lattice)?;
    let p = lattice.irreducible_poset();
    let extra = bits::members(lattice.poset().all() & !ideal).map(|q| generator_y_monomial(lattice, &p, q)).collect();
    Ok(base.sum(&MonomialIdeal::new(lattice_variables(lattice), extra)))
}

/// `H_L*`; the zero ideal when `P` is empty and `H_L` is the unit ideal.
fn lattice_dual(lattice: &MeetSemilattice) -> Result<MonomialIdeal> {
    let h = lattice_ideal(lattice);
    if h.is_unit() {
        return Ok(MonomialIdeal::zero(lattice_variables(lattice)));
    }
    dual_ideal(&h)
}

/// `H_I` as the intersection of the `H_{I_q}` over `q` outside `I`, where
/// `I_q = { r : r not >= q }`; `H_L` when `I = L`.
pub fn ideal_by_one_cogenerated(lattice: &MeetSemilattice, ideal: u64) -> MonomialIdeal {
    let all = lattice.poset().all();
    bits::members(all & !ideal)
        .map(|q| subfamily_ideal(lattice, lattice.one_cogenerated(q).0))
        .fold(lattice_ideal(lattice), |acc, h| acc.intersection(&h))
}

/// `H_I*` as the sum of the `H_{I_q}*` over `q` outside `I`.
pub fn dual_by_one_cogenerated(lattice: &MeetSemilattice, ideal: u64) -> Result<MonomialIdeal> {
    let all = lattice.poset().all();
    let mut acc = lattice_dual(lattice)?;
    for q in bits::members(all & !ideal) {
        acc = acc.sum(&dual_ideal(&subfamily_ideal(lattice, lattice.one_cogenerated(q).0))?);
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionReport {
    pub field: Field,
    /// `H_I ∩ H_J`, minimally generated.
    pub intersection: MonomialIdeal,
    /// `H_I ∩ H_J = H_{I ∩ J}`.
    pub equals_meet_ideal: bool,
    pub dual_formula: MonomialIdeal,
    pub dual_brute_force: MonomialIdeal,
    pub betti: BettiTable,
    pub regularity: usize,
    pub linear: bool,
    pub rank: usize,
    /// `I ∪ J = L`.
    pub covers_lattice: bool,
    /// `rank L <= reg <= rank L + 1`, checked when `I ∪ J = L`.
    pub regularity_in_range: Option<bool>,
}

impl IntersectionReport {
    pub fn formula_matches(&self) -> bool {
        self.dual_formula.same_ideal(&self.dual_brute_force)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "field": self.field.to_string(),
            "generators": self.intersection.render(),
            "equals_meet_ideal": self.equals_meet_ideal,
            "dual_formula": self.dual_formula.render(),
            "dual_brute_force": self.dual_brute_force.render(),
            "formula_matches": self.formula_matches(),
            "betti": self.betti.to_json(),
            "regularity": self.regularity,
            "linear": self.linear,
            "rank": self.rank,
            "covers_lattice": self.covers_lattice,
            "regularity_in_range": self.regularity_in_range,
        })
    }
}

/// `H_I ∩ H_J` for a poset ideal `I` and coideal `J` of a distributive
/// lattice, with its dual by formula and by covers, and its resolution data.
pub fn intersect_ideal_coideal(
    lattice: &MeetSemilattice,
    ideal: u64,
    coideal: u64,
    field: Field,
) -> Result<IntersectionReport> {
    require_distributive(lattice)?;
    check_ideal(lattice, ideal)?;
    if coideal == 0 {
        return Err(Error::EmptyIdeal);
    }
    lattice.poset().coideal(coideal)?;
    let vars = lattice_variables(lattice);
    let intersection = subfamily_ideal(lattice, ideal).intersection(&subfamily_ideal(lattice, coideal));
    let equals_meet_ideal = intersection.same_ideal(&subfamily_ideal(lattice, ideal & coideal));
    let all = lattice.poset().all();
    let p = lattice.irreducible_poset();
    let mut extra: Vec<SquarefreeMonomial> =
        bits::members(all & !ideal).map(|q| generator_y_monomial(lattice, &p, q)).collect();
    extra.extend(bits::members(all & !coideal).map(|q| cogenerator_x_monomial(lattice, &p, q)));
    let dual_formula = lattice_dual(lattice)?.sum(&MonomialIdeal::new(vars, extra));
    let dual_brute_force = dual_ideal(&intersection)?;
    let betti = betti_table(&intersection, field)?;
    let regularity = betti.regularity().ok_or(Error::ZeroIdeal)?;
    let linear = intersection.common_degree().is_some_and(|d| betti.is_linear(d));
    let rank = lattice.top().map(|t| lattice.deg(t)).unwrap_or(0);
    let covers_lattice = ideal | coideal == all;
    Ok(IntersectionReport {
        field,
        intersection,
        equals_meet_ideal,
        dual_formula,
        dual_brute_force,
        betti,
        regularity,
        linear,
        rank,
        covers_lattice,
        regularity_in_range: covers_lattice.then_some(rank <= regularity && regularity <= rank + 1),
    })
}

/// `(u_q : q in L)` in rank-range form `r <= rank q <= s`.
pub fn rank_range_ideal(lattice: &MeetSemilattice, r: usize, s: usize) -> MonomialIdeal {
    let members = (0..lattice.len()).filter(|&q| (r..=s).contains(&lattice.rank(q)));
    subfamily_ideal(lattice, bits::from_indices(members))
}
