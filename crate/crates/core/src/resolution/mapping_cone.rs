//! The resolution of `H_L` with basis `b(p;S)`, `S ⊆ N(p)`, built by
//! iterated mapping cones along the total order of `L`, and its closed
//! form for meet-distributive `L`.

use std::collections::HashMap;

use crate::bits;
use crate::error::{Error, Result};
use crate::linalg::{self, q, SparseRow, Q};
use crate::monomial::{lattice_variables, SquarefreeMonomial};
use crate::semilattice::MeetSemilattice;

use super::complex::{BasisElement, FreeComplex};

pub const DEFAULT_BASIS_CAP: usize = 1 << 18;

/// `N(p)` ordered by `ell(p) \ ell(t)` read as a bitset over positions in
/// `P`. For meet-distributive `L` this is the order of the single elements
/// `p \ t` in the total order on `P`.
pub fn ordered_neighbors(lattice: &MeetSemilattice, p: usize) -> Vec<usize> {
    let mut nb: Vec<usize> = bits::members(lattice.lower_neighbors(p)).collect();
    nb.sort_by_key(|&t| (lattice.ell(p) & !lattice.ell(t), t));
    nb
}

/// `mdeg b(p;S) = x^{ell(p)} y^{P \ ell(∧S)}`, with `∧∅ = p`.
pub fn cone_multidegree(lattice: &MeetSemilattice, p: usize, subset: u64) -> SquarefreeMonomial {
    let meet = if subset == 0 { p } else { lattice.meet_set(subset).expect("nonempty") };
    SquarefreeMonomial::new(lattice.ell(p), bits::full(lattice.irreducibles().len()) & !lattice.ell(meet))
}

/// Number of basis elements `Σ_p 2^{|N(p)|}`.
pub fn basis_size(lattice: &MeetSemilattice) -> usize {
    (0..lattice.len()).map(|p| 1usize << lattice.lower_neighbors(p).count_ones()).sum()
}

struct ConeBasis {
    neighbors: Vec<Vec<usize>>,
    modules: Vec<Vec<BasisElement>>,
    /// `(p, local subset of N(p))` to `(degree, index)`.
    index: HashMap<(usize, u64), (usize, usize)>,
    /// Index in `F_i` of the first basis element of each element `p`.
    start: Vec<Vec<usize>>,
}

impl ConeBasis {
    fn new(lattice: &MeetSemilattice, cap: usize) -> Result<ConeBasis> {
        let size = basis_size(lattice);
        if size > cap {
            return Err(Error::TooLarge { size, limit: cap });
        }
        let neighbors: Vec<Vec<usize>> = (0..lattice.len()).map(|p| ordered_neighbors(lattice, p)).collect();
        let width = neighbors.iter().map(|n| n.len()).max().unwrap_or(0);
        let mut modules: Vec<Vec<BasisElement>> = vec![Vec::new(); width + 1];
        let mut index = HashMap::with_capacity(size);
        let mut start = vec![vec![0; lattice.len()]; width + 1];
        for &p in lattice.order() {
            for (i, m) in modules.iter().enumerate() {
                start[i][p] = m.len();
            }
            let nb = &neighbors[p];
            for local in 0..1u64 << nb.len() {
                let subset = bits::members(local).fold(0u64, |acc, j| acc | 1 << nb[j]);
                let names: Vec<&str> = bits::members(local).map(|j| lattice.label(nb[j])).collect();
                let degree = local.count_ones() as usize;
                index.insert((p, local), (degree, modules[degree].len()));
                modules[degree].push(BasisElement {
                    label: format!("b({};{{{}}})", lattice.label(p), names.join(",")),
                    multidegree: cone_multidegree(lattice, p, subset),
                    cone: Some((p, subset)),
                });
            }
        }
        Ok(ConeBasis { neighbors, modules, index, start })
    }

    fn at(&self, p: usize, local: u64) -> usize {
        self.index[&(p, local)].1
    }

    /// Local bits of a subset of `N(p)` given as a bitset of elements.
    fn local(&self, p: usize, subset: u64) -> u64 {
        self.neighbors[p]
            .iter()
            .enumerate()
            .filter(|(_, t)| bits::contains(subset, **t))
            .fold(0, |acc, (j, _)| acc | 1 << j)
    }

    /// Local subsets of size `1..=k`, by size and then bit value.
    fn nonempty_subsets(k: usize) -> Vec<u64> {
        let mut all: Vec<u64> = (1..1u64 << k).collect();
        all.sort_by_key(|s| (s.count_ones(), *s));
        all
    }

    /// Taylor part of `∂ b(p;S)`: `Σ_j (-1)^j b(p; S minus its j-th element)`.
    fn taylor_part(&self, p: usize, local: u64) -> SparseRow<Q> {
        bits::members(local)
            .enumerate()
            .map(|(j, bit)| (self.at(p, local & !(1 << bit)), q(if j % 2 == 0 { 1 } else { -1 })))
            .collect()
    }
}

fn add_into(acc: &mut HashMap<usize, Q>, row: &SparseRow<Q>, factor: &Q) {
    for (r, v) in row {
        *acc.entry(*r).or_insert_with(|| q(0)) += v * factor;
    }
}

fn to_sorted(acc: HashMap<usize, Q>) -> SparseRow<Q> {
    let mut out: SparseRow<Q> = acc.into_iter().filter(|(_, v)| *v != q(0)).collect();
    out.sort_by_key(|(r, _)| *r);
    out
}

/// The resolution of `H_L` by iterated mapping cones.
///
/// Elements are added in the total order of `L`. For `p` with neighbors
/// `N(p)`, the Taylor complex on `y^{ell(p) \ ell(t)}`, `t in N(p)`, is
/// attached through a comparison map `α` with `α_1(e_t) = x^{ell(p) \ ell(t)}
/// b(t;∅)`; higher `α_k(e_S)` solve `∂v = α_{k-1}(∂ e_S)` in the strand of
/// `mdeg b(p;S)` spanned by earlier basis elements (first pivots, free
/// variables zero). Then `∂ b(p;S) = ∂^T e_S + (-1)^k α_k(e_S)`.
pub fn mapping_cone_resolution(lattice: &MeetSemilattice, cap: usize) -> Result<FreeComplex> {
    let basis = ConeBasis::new(lattice, cap)?;
    let mut differentials: Vec<Vec<SparseRow<Q>>> =
        basis.modules.iter().skip(1).map(|m| vec![Vec::new(); m.len()]).collect();
    for &p in lattice.order() {
        let nb = &basis.neighbors[p];
        let mut alpha: HashMap<u64, SparseRow<Q>> = HashMap::new();
        for local in ConeBasis::nonempty_subsets(nb.len()) {
            let k = local.count_ones() as usize;
            let lift = if k == 1 {
                let t = nb[local.trailing_zeros() as usize];
                vec![(basis.at(t, 0), q(1))]
            } else {
                let mut rhs = HashMap::new();
                for (j, bit) in bits::members(local).enumerate() {
                    let sign = q(if j % 2 == 0 { 1 } else { -1 });
                    add_into(&mut rhs, &alpha[&(local & !(1 << bit))], &sign);
                }
                let rhs = to_sorted(rhs);
                let m = basis.modules[k][basis.at(p, local)].multidegree;
                let candidates: Vec<usize> =
                    (0..basis.start[k - 1][p]).filter(|&c| basis.modules[k - 1][c].multidegree.divides(&m)).collect();
                let columns: Vec<SparseRow<Q>> = candidates.iter().map(|&c| differentials[k - 2][c].clone()).collect();
                let solution = linalg::solve(&columns, &rhs)
                    .ok_or_else(|| Error::LiftFailed(basis.modules[k][basis.at(p, local)].label.clone()))?;
                candidates.into_iter().zip(solution).filter(|(_, v)| *v != q(0)).collect()
            };
            let mut column = basis.taylor_part(p, local);
            let sign = if k % 2 == 0 { q(1) } else { q(-1) };
            column.extend(lift.iter().map(|(r, v)| (*r, v * &sign)));
            column.sort_by_key(|(r, _)| *r);
            differentials[k - 1][basis.at(p, local)] = column;
            alpha.insert(local, lift);
        }
    }
    let n0 = basis.modules[0].len();
    Ok(FreeComplex::new(lattice_variables(lattice), basis.modules, differentials, vec![q(1); n0]))
}

/// The closed-form differential for meet-distributive `L`:
/// `∂ b(p;S) = Σ_{q in S} (-1)^{σ} (y_{p∖q} b(p;S∖q) - x_{p∖q} b(q; q∧(S∖q)))`,
/// where `σ` counts the elements of `S` before `q`.
pub fn meet_distributive_differential(lattice: &MeetSemilattice) -> Result<FreeComplex> {
    if !lattice.is_meet_distributive() {
        return Err(Error::NotMeetDistributive);
    }
    let basis = ConeBasis::new(lattice, usize::MAX)?;
    let mut differentials: Vec<Vec<SparseRow<Q>>> =
        basis.modules.iter().skip(1).map(|m| vec![Vec::new(); m.len()]).collect();
    for p in 0..lattice.len() {
        let nb = &basis.neighbors[p];
        for local in 1..1u64 << nb.len() {
            let k = local.count_ones() as usize;
            let mut column = Vec::with_capacity(2 * k);
            for (sigma, bit) in bits::members(local).enumerate() {
                let sign = if sigma % 2 == 0 { 1 } else { -1 };
                let qq = nb[bit];
                let rest = bits::members(local & !(1 << bit)).fold(0u64, |acc, j| acc | 1 << lattice.meet(qq, nb[j]));
                column.push((basis.at(p, local & !(1 << bit)), q(sign)));
                column.push((basis.at(qq, basis.local(qq, rest)), q(-sign)));
            }
            column.sort_by_key(|(r, _)| *r);
            differentials[k - 1][basis.at(p, local)] = column;
        }
    }
    let n0 = basis.modules[0].len();
    Ok(FreeComplex::new(lattice_variables(lattice), basis.modules, differentials, vec![q(1); n0]))
}

/// Bounds on `reg H_L`: `|P| + max (deg p - deg ∧S - |S|)` over
/// all `S ⊆ N(p)`, and the same maximum over `S = N(p)` only, which is the
/// exact value for meet-irredundant `L`.
pub fn regularity_bounds(lattice: &MeetSemilattice) -> (usize, usize) {
    let n = lattice.irreducibles().len() as isize;
    let value = |p: usize, subset: u64| {
        let meet = if subset == 0 { p } else { lattice.meet_set(subset).expect("nonempty") };
        lattice.deg(p) as isize - lattice.deg(meet) as isize - subset.count_ones() as isize
    };
    let mut upper = 0isize;
    let mut full = 0isize;
    for p in 0..lattice.len() {
        let nb = lattice.lower_neighbors(p);
        for s in bits::subsets(nb) {
            upper = upper.max(value(p, s));
        }
        full = full.max(value(p, nb));
    }
    ((n + upper) as usize, (n + full) as usize)
}
