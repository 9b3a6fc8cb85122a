//! Multigraded free complexes over the polynomial ring, stored as scalar
//! matrices: the monomial part of every entry is implied by the
//! multidegrees of its source and target.

use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{self, Field, SparseRow, Q};
use crate::monomial::{MonomialIdeal, SquarefreeMonomial, Variables, DEFAULT_GENERATOR_LIMIT};

/// A basis element of a free module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub label: String,
    pub multidegree: SquarefreeMonomial,
    /// `(p, S)` for the basis element `b(p;S)`, with `S` a bitset of elements.
    pub cone: Option<(usize, u64)>,
}

#[derive(Debug, Clone)]
pub struct FreeComplex {
    vars: Variables,
    modules: Vec<Vec<BasisElement>>,
    /// `differentials[i]` maps `F_{i+1}` to `F_i`; one sparse column per
    /// basis element of `F_{i+1}`, indexed by rows of `F_i`.
    differentials: Vec<Vec<SparseRow<Q>>>,
    augmentation: Vec<Q>,
}

impl FreeComplex {
    /// Assembles a complex. Trailing zero modules are dropped.
    pub fn new(
        vars: Variables,
        mut modules: Vec<Vec<BasisElement>>,
        mut differentials: Vec<Vec<SparseRow<Q>>>,
        augmentation: Vec<Q>,
    ) -> FreeComplex {
        while modules.len() > 1 && modules.last().is_some_and(|m| m.is_empty()) {
            modules.pop();
        }
        differentials.truncate(modules.len().saturating_sub(1));
        assert_eq!(differentials.len() + 1, modules.len().max(1));
        assert_eq!(augmentation.len(), modules.first().map_or(0, |m| m.len()));
        FreeComplex { vars, modules, differentials, augmentation }
    }

    pub fn vars(&self) -> &Variables {
        &self.vars
    }

    pub fn modules(&self) -> &[Vec<BasisElement>] {
        &self.modules
    }

    pub fn module(&self, i: usize) -> &[BasisElement] {
        self.modules.get(i).map_or(&[], |m| m.as_slice())
    }

    /// Columns of `∂_i : F_i -> F_{i-1}` for `i >= 1`.
    pub fn differential(&self, i: usize) -> &[SparseRow<Q>] {
        match i {
            0 => &[],
            _ => self.differentials.get(i - 1).map_or(&[], |d| d.as_slice()),
        }
    }

    pub fn augmentation(&self) -> &[Q] {
        &self.augmentation
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.len()).collect()
    }

    /// Largest `i` with `F_i != 0`.
    pub fn length(&self) -> usize {
        self.modules.len().saturating_sub(1)
    }

    /// Monomial of the entry of `∂_i` in row `row` and column `col`.
    pub fn entry_monomial(&self, i: usize, row: usize, col: usize) -> Option<SquarefreeMonomial> {
        self.module(i)[col].multidegree.quotient(&self.module(i - 1)[row].multidegree)
    }

    /// Scalar of the entry of `∂_i` in row `row` and column `col`.
    pub fn entry(&self, i: usize, row: usize, col: usize) -> Q {
        self.differential(i)[col].iter().find(|(r, _)| *r == row).map_or_else(Q::zero, |(_, v)| v.clone())
    }

    /// Changes one scalar entry (used to build negative controls).
    pub fn set_entry(&mut self, i: usize, row: usize, col: usize, value: Q) {
        let column = &mut self.differentials[i - 1][col];
        column.retain(|(r, _)| *r != row);
        if !value.is_zero() {
            column.push((row, value));
            column.sort_by_key(|(r, _)| *r);
        }
    }

    /// The ideal generated by the image of the augmentation.
    pub fn augmentation_image(&self) -> MonomialIdeal {
        let gens = self
            .module(0)
            .iter()
            .zip(&self.augmentation)
            .filter(|(_, a)| !a.is_zero())
            .map(|(b, _)| b.multidegree)
            .collect();
        MonomialIdeal::new(self.vars.clone(), gens)
    }

    /// Checks multihomogeneity and `∂∘∂ = 0`, including the augmentation.
    pub fn verify_complex(&self) -> Result<()> {
        for i in 1..=self.length() {
            for (col, column) in self.differential(i).iter().enumerate() {
                for (row, _) in column {
                    if self.entry_monomial(i, *row, col).is_none() {
                        return Err(Error::NotHomogeneous { degree: i, row: *row, col });
                    }
                }
            }
        }
        // Monomials compose consistently, so scalars suffice.
        for (col, column) in self.differential(1).iter().enumerate() {
            let sum: Q = column.iter().map(|(r, v)| v * &self.augmentation[*r]).sum();
            if !sum.is_zero() {
                return Err(Error::NotAComplex { degree: 0, row: 0, col });
            }
        }
        for i in 1..self.length() {
            let lower = self.differential(i);
            for (col, column) in self.differential(i + 1).iter().enumerate() {
                let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
                for (mid, v) in column {
                    for (row, w) in &lower[*mid] {
                        *acc.entry(*row).or_insert_with(Q::zero) += v * w;
                    }
                }
                if let Some((row, _)) = acc.iter().find(|(_, v)| !v.is_zero()) {
                    return Err(Error::NotAComplex { degree: i, row: *row, col });
                }
            }
        }
        Ok(())
    }

    /// Dimensions of the homology of the strand at `a`, without augmentation.
    pub fn strand_homology(&self, a: &SquarefreeMonomial, field: Field) -> Result<Vec<usize>> {
        let dims: Vec<usize> =
            self.modules.iter().map(|m| m.iter().filter(|b| b.multidegree.divides(a)).count()).collect();
        let mut ranks = vec![0; self.modules.len() + 1];
        for i in 1..self.modules.len() {
            let columns: Vec<SparseRow<Q>> = self
                .differential(i)
                .iter()
                .zip(&self.modules[i])
                .filter(|(_, b)| b.multidegree.divides(a))
                .map(|(c, _)| c.clone())
                .collect();
            ranks[i] = linalg::rank_rational(&columns, field)?;
        }
        Ok((0..dims.len()).map(|i| dims[i] - ranks[i] - ranks[i + 1]).collect())
    }

    /// Checks that this complex resolves `ideal`: it is a complex, the
    /// augmentation generates `ideal`, and every relevant strand is exact.
    pub fn verify_resolution(&self, ideal: &MonomialIdeal, field: Field) -> Result<()> {
        self.verify_complex()?;
        if !self.augmentation_image().same_ideal(ideal) {
            return Err(Error::WrongAugmentation);
        }
        let mut degrees: HashSet<SquarefreeMonomial> =
            ideal.lcm_lattice(DEFAULT_GENERATOR_LIMIT)?.into_iter().collect();
        degrees.extend(self.modules.iter().flatten().map(|b| b.multidegree));
        let mut degrees: Vec<SquarefreeMonomial> = degrees.into_iter().collect();
        degrees.sort();
        let failures: Vec<Error> =
            degrees.par_iter().filter_map(|a| self.check_strand(a, ideal, field).err()).collect();
        match failures.into_iter().next() {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    fn check_strand(&self, a: &SquarefreeMonomial, ideal: &MonomialIdeal, field: Field) -> Result<()> {
        let h = self.strand_homology(a, field)?;
        let expected = usize::from(ideal.contains(a));
        if h.first().copied().unwrap_or(0) != expected {
            return Err(Error::WrongH0(self.vars.render(a)));
        }
        match h.iter().skip(1).position(|&d| d != 0) {
            Some(i) => Err(Error::NotExact { multidegree: self.vars.render(a), degree: i + 1 }),
            None => Ok(()),
        }
    }

    /// No nonzero entry has the unit monomial.
    pub fn is_minimal(&self) -> bool {
        self.unit_entry(1).is_none()
    }

    /// First `(i, row, col)` with `i >= from` whose entry is a nonzero scalar.
    fn unit_entry(&self, from: usize) -> Option<(usize, usize, usize)> {
        (from.max(1)..=self.length()).find_map(|i| {
            self.differential(i).iter().enumerate().find_map(|(col, column)| {
                let m = self.modules[i][col].multidegree;
                column
                    .iter()
                    .find(|(row, v)| !v.is_zero() && self.modules[i - 1][*row].multidegree == m)
                    .map(|(row, _)| (i, *row, col))
            })
        })
    }

    /// Cancels unit entries one at a time until the complex is minimal.
    ///
    /// For a unit entry `c` of `∂_i` at `(r, j)`, the entry at `(r', j')`
    /// becomes `d - a b / c` where `a = ∂_i[r', j]` and `b = ∂_i[r, j']`;
    /// then `b_j` and `b_r` are dropped.
    pub fn minimize(&self) -> FreeComplex {
        let mut columns: Vec<Vec<BTreeMap<usize, Q>>> =
            self.differentials.iter().map(|d| d.iter().map(|c| c.iter().cloned().collect()).collect()).collect();
        let mut alive: Vec<Vec<bool>> = self.modules.iter().map(|m| vec![true; m.len()]).collect();
        let degree = |i: usize, k: usize| self.modules[i][k].multidegree;
        let mut i = 1;
        while i < self.modules.len() {
            let found = (0..columns[i - 1].len()).filter(|&j| alive[i][j]).find_map(|j| {
                columns[i - 1][j]
                    .iter()
                    .find(|(r, v)| !v.is_zero() && degree(i - 1, **r) == degree(i, j))
                    .map(|(r, v)| (j, *r, v.clone()))
            });
            let Some((j, r, c)) = found else {
                i += 1;
                continue;
            };
            let pivot = std::mem::take(&mut columns[i - 1][j]);
            for (k, column) in columns[i - 1].iter_mut().enumerate() {
                if k == j || !alive[i][k] {
                    continue;
                }
                let Some(b) = column.remove(&r) else { continue };
                let f = b / &c;
                for (row, a) in &pivot {
                    if *row == r {
                        continue;
                    }
                    let entry = column.entry(*row).or_insert_with(Q::zero);
                    *entry -= a * &f;
                    if entry.is_zero() {
                        column.remove(row);
                    }
                }
            }
            alive[i][j] = false;
            alive[i - 1][r] = false;
            if let Some(next) = columns.get_mut(i) {
                for column in next.iter_mut() {
                    column.remove(&j);
                }
            }
            if i >= 2 {
                columns[i - 2][r].clear();
            }
        }
        self.compress(&alive, &columns)
    }

    fn compress(&self, alive: &[Vec<bool>], columns: &[Vec<BTreeMap<usize, Q>>]) -> FreeComplex {
        let reindex: Vec<Vec<Option<usize>>> = alive
            .iter()
            .map(|a| {
                let mut next = 0;
                a.iter()
                    .map(|&keep| {
                        keep.then(|| {
                            next += 1;
                            next - 1
                        })
                    })
                    .collect()
            })
            .collect();
        let modules: Vec<Vec<BasisElement>> = self
            .modules
            .iter()
            .zip(alive)
            .map(|(m, a)| m.iter().zip(a).filter(|(_, k)| **k).map(|(b, _)| b.clone()).collect())
            .collect();
        let differentials = columns
            .iter()
            .enumerate()
            .map(|(i, d)| {
                d.iter()
                    .enumerate()
                    .filter(|(j, _)| alive[i + 1][*j])
                    .map(|(_, c)| {
                        c.iter()
                            .filter(|(_, v)| !v.is_zero())
                            .map(|(r, v)| (reindex[i][*r].expect("row of a live column survives"), v.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let augmentation =
            self.augmentation.iter().zip(&alive[0]).filter(|(_, k)| **k).map(|(a, _)| a.clone()).collect();
        FreeComplex::new(self.vars.clone(), modules, differentials, augmentation)
    }

    /// JSON dump: basis labels with multidegrees, and each differential as
    /// `[row, col, scalar, monomial]` triplets.
    pub fn to_json(&self) -> Value {
        let modules: Vec<Value> = self
            .modules
            .iter()
            .enumerate()
            .map(|(i, m)| {
                json!({
                    "degree": i,
                    "basis": m.iter().map(|b| json!({
                        "label": b.label,
                        "multidegree": self.vars.render(&b.multidegree),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        let differentials: Vec<Value> = (1..=self.length())
            .map(|i| {
                let entries: Vec<Value> = self
                    .differential(i)
                    .iter()
                    .enumerate()
                    .flat_map(|(col, column)| {
                        column.iter().map(move |(row, v)| {
                            let m = self.entry_monomial(i, *row, col).unwrap_or_default();
                            json!([row, col, linalg::render(v), self.vars.render(&m)])
                        })
                    })
                    .collect();
                json!({ "degree": i, "entries": entries })
            })
            .collect();
        json!({
            "ranks": self.ranks(),
            "modules": modules,
            "differentials": differentials,
            "augmentation": self.augmentation.iter().map(linalg::render).collect::<Vec<_>>(),
        })
    }

    /// `∂ b` as readable terms `±scalar·monomial·label`.
    pub fn boundary_terms(&self, i: usize, col: usize) -> Vec<String> {
        self.differential(i)[col]
            .iter()
            .map(|(row, v)| {
                let m = self.entry_monomial(i, *row, col).unwrap_or_default();
                let sign = if v < &Q::zero() { "-" } else { "+" };
                let abs = if v < &Q::zero() { -v.clone() } else { v.clone() };
                let scalar = if abs.is_one() { String::new() } else { format!("{}*", linalg::render(&abs)) };
                let mono = if m.is_unit() { String::new() } else { format!("{}*", self.vars.render(&m)) };
                format!("{sign}{scalar}{mono}{}", self.modules[i - 1][*row].label)
            })
            .collect()
    }
}
