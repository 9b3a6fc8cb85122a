//! Exact linear algebra: ranks of sparse matrices over `Q` or `GF(p)` and
//! a deterministic solver over `Q`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Q = BigRational;

/// A sparse row: `(column, value)` pairs with strictly increasing columns.
pub type SparseRow<T> = Vec<(usize, T)>;

pub const DEFAULT_PRIME: u64 = 32003;

/// Coefficient field for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`, `0`, a prime `p` or `GF(p)`.
    fn from_str(s: &str) -> Result<Field> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t == "0" {
            return Ok(Field::Rationals);
        }
        let digits =
            t.strip_prefix("GF(").or_else(|| t.strip_prefix("gf(")).and_then(|r| r.strip_suffix(')')).unwrap_or(t);
        let p: u64 = digits.parse().map_err(|_| Error::Invalid(format!("unknown field `{s}`")))?;
        if p < 2 || p >= 1 << 31 || !(2..).take_while(|d| d * d <= p).all(|d| p % d != 0) {
            return Err(Error::Invalid(format!("`{s}` is not a prime below 2^31")));
        }
        Ok(Field::Prime(p))
    }
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rank of a matrix with integer entries.
pub fn rank_integer(rows: &[SparseRow<i64>], field: Field) -> usize {
    match field {
        Field::Prime(p) => rank_mod_p(rows.iter().map(|r| reduce_row(r, p)), p),
        Field::Rationals => {
            let wide = rows.iter().map(|r| r.iter().map(|&(c, v)| (c, v as i128)).collect());
            rank_i128(wide).unwrap_or_else(|| {
                rank_bigint(rows.iter().map(|r| r.iter().map(|&(c, v)| (c, BigInt::from(v))).collect()))
            })
        }
    }
}

/// Rank of a matrix with rational entries. Over `GF(p)` every denominator
/// must be invertible.
pub fn rank_rational(rows: &[SparseRow<Q>], field: Field) -> Result<usize> {
    match field {
        Field::Prime(p) => {
            let mut reduced = Vec::with_capacity(rows.len());
            for row in rows {
                let mut out = Vec::with_capacity(row.len());
                for (c, v) in row {
                    let num = mod_big(v.numer(), p);
                    let den = mod_big(v.denom(), p);
                    if den == 0 {
                        return Err(Error::Invalid(format!("denominator of {v} vanishes mod {p}")));
                    }
                    let x = num * inverse(den, p) % p;
                    if x != 0 {
                        out.push((*c, x));
                    }
                }
                reduced.push(out);
            }
            Ok(rank_mod_p(reduced.into_iter(), p))
        }
        Field::Rationals => {
            let integral: Vec<SparseRow<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
            let small: Option<Vec<SparseRow<i128>>> =
                integral.iter().map(|r| r.iter().map(|(c, v)| v.to_i128().map(|x| (*c, x))).collect()).collect();
            Ok(small.and_then(|s| rank_i128(s.into_iter())).unwrap_or_else(|| rank_bigint(integral.into_iter())))
        }
    }
}

fn clear_denominators(row: &[(usize, Q)]) -> SparseRow<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    row.iter().map(|(c, v)| (*c, v.numer() * (&l / v.denom()))).collect()
}

fn mod_big(v: &BigInt, p: u64) -> u64 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

fn reduce_row(row: &[(usize, i64)], p: u64) -> SparseRow<u64> {
    row.iter()
        .filter_map(|&(c, v)| {
            let x = v.rem_euclid(p as i64) as u64;
            (x != 0).then_some((c, x))
        })
        .collect()
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inverse(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn rank_mod_p(rows: impl Iterator<Item = SparseRow<u64>>, p: u64) -> usize {
    let mut pivots: BTreeMap<usize, SparseRow<u64>> = BTreeMap::new();
    for mut row in rows {
        while let Some(&(lead, a)) = row.first() {
            match pivots.get(&lead) {
                Some(pivot) => {
                    // Pivot rows are monic: row -= a * pivot.
                    row = combine(&row, pivot, |x, y| (x + (p - a) * y % p) % p);
                }
                None => {
                    let inv = inverse(a, p);
                    let monic = row.iter().map(|&(c, v)| (c, v * inv % p)).collect();
                    pivots.insert(lead, monic);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Merges two sparse rows with `f(row_value, pivot_value)`, dropping zeros.
fn combine<T: Clone + Default + PartialEq>(
    row: &[(usize, T)],
    pivot: &[(usize, T)],
    mut f: impl FnMut(T, T) -> T,
) -> SparseRow<T> {
    let zero = T::default();
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let (c, v) = match (row.get(i), pivot.get(j)) {
            (Some((ci, vi)), Some((cj, vj))) if ci == cj => {
                i += 1;
                j += 1;
                (*ci, f(vi.clone(), vj.clone()))
            }
            (Some((ci, vi)), Some((cj, _))) if ci < cj => {
                i += 1;
                (*ci, f(vi.clone(), zero.clone()))
            }
            (Some((ci, vi)), None) => {
                i += 1;
                (*ci, f(vi.clone(), zero.clone()))
            }
            (_, Some((cj, vj))) => {
                j += 1;
                (*cj, f(zero.clone(), vj.clone()))
            }
            (None, None) => unreachable!(),
        };
        if v != zero {
            out.push((c, v));
        }
    }
    out
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Fraction-free elimination; `None` on overflow.
fn rank_i128(rows: impl Iterator<Item = SparseRow<i128>>) -> Option<usize> {
    let mut pivots: BTreeMap<usize, SparseRow<i128>> = BTreeMap::new();
    for mut row in rows {
        while let Some(&(lead, a)) = row.first() {
            match pivots.get(&lead) {
                Some(pivot) => {
                    let b = pivot[0].1;
                    let g = gcd_i128(a, b);
                    let (ra, rb) = (b / g, a / g);
                    let mut overflow = false;
                    let next = combine(&row, pivot, |x, y| match (x.checked_mul(ra), y.checked_mul(rb)) {
                        (Some(s), Some(t)) => s.checked_sub(t).unwrap_or_else(|| {
                            overflow = true;
                            0
                        }),
                        _ => {
                            overflow = true;
                            0
                        }
                    });
                    if overflow {
                        return None;
                    }
                    let content = next.iter().fold(0, |acc, (_, v)| gcd_i128(acc, *v));
                    row = if content > 1 { next.into_iter().map(|(c, v)| (c, v / content)).collect() } else { next };
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

fn rank_bigint(rows: impl Iterator<Item = SparseRow<BigInt>>) -> usize {
    let mut pivots: BTreeMap<usize, SparseRow<BigInt>> = BTreeMap::new();
    for mut row in rows {
        while let Some((lead, a)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(pivot) => {
                    let b = &pivot[0].1;
                    let g = a.gcd(b);
                    let (ra, rb) = (b / &g, &a / &g);
                    let next = combine(&row, pivot, |x, y| x * &ra - y * &rb);
                    let content = next.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
                    row = if content > BigInt::one() {
                        next.into_iter().map(|(c, v)| (c, v / &content)).collect()
                    } else {
                        next
                    };
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Solves `A v = b` over `Q`, where `columns[j]` is column `j` of `A` as a
/// sparse vector over row indices. Reduced row echelon form with the first
/// available pivot in each column; free variables are set to zero, so the
/// answer is deterministic. `None` if the system is inconsistent.
pub fn solve(columns: &[SparseRow<Q>], rhs: &SparseRow<Q>) -> Option<Vec<Q>> {
    let mut row_ids: Vec<usize> = columns.iter().flatten().chain(rhs.iter()).map(|(r, _)| *r).collect();
    row_ids.sort_unstable();
    row_ids.dedup();
    let index: BTreeMap<usize, usize> = row_ids.iter().enumerate().map(|(i, r)| (*r, i)).collect();
    let n = columns.len();
    // Augmented dense matrix.
    let mut m: Vec<Vec<Q>> = vec![vec![Q::zero(); n + 1]; row_ids.len()];
    for (j, col) in columns.iter().enumerate() {
        for (r, v) in col {
            m[index[r]][j] = v.clone();
        }
    }
    for (r, v) in rhs {
        m[index[r]][n] = v.clone();
    }
    let mut pivot_cols = Vec::new();
    let mut next_row = 0;
    for j in 0..n {
        let Some(pr) = (next_row..m.len()).find(|&r| !m[r][j].is_zero()) else {
            continue;
        };
        m.swap(next_row, pr);
        let inv = m[next_row][j].recip();
        for v in m[next_row].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[next_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != next_row && !row[j].is_zero() {
                let f = row[j].clone();
                for (k, v) in row.iter_mut().enumerate() {
                    if !pivot_row[k].is_zero() {
                        *v = &*v - &f * &pivot_row[k];
                    }
                }
            }
        }
        pivot_cols.push(j);
        next_row += 1;
    }
    if m[next_row..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![Q::zero(); n];
    for (r, &j) in pivot_cols.iter().enumerate() {
        x[j] = m[r][n].clone();
    }
    Some(x)
}

/// Renders a rational compactly (`-3`, `1/2`).
pub fn render(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense_rank_q(m: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for j in 0..cols {
            let Some(p) = (rank..m.len()).find(|&r| !m[r][j].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            for r in rank + 1..m.len() {
                let f = &m[r][j] / &m[rank][j];
                for k in 0..cols {
                    let t = &f * &m[rank][k];
                    m[r][k] -= t;
                }
            }
            rank += 1;
        }
        rank
    }

    fn sparse(m: &[Vec<i64>]) -> Vec<SparseRow<i64>> {
        m.iter().map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0).map(|(c, v)| (c, *v)).collect()).collect()
    }

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank_integer(&sparse(&m), Field::Rationals), 2);
        let m = vec![vec![2, 0], vec![0, 2]];
        assert_eq!(rank_integer(&sparse(&m), Field::Prime(2)), 0);
        assert_eq!(rank_integer(&sparse(&m), Field::Prime(3)), 2);
    }

    #[test]
    fn huge_entries_fall_back_to_bigint() {
        let big = i64::MAX / 3;
        let m = vec![vec![big, big - 1, 7], vec![big - 5, big, 11], vec![3, big, big]];
        assert_eq!(rank_integer(&sparse(&m), Field::Rationals), dense_rank_q(&m));
        let rows: Vec<SparseRow<Q>> =
            sparse(&m).into_iter().map(|r| r.into_iter().map(|(c, v)| (c, q(v))).collect()).collect();
        assert_eq!(rank_rational(&rows, Field::Rationals).unwrap(), 3);
    }

    #[test]
    fn field_parsing() {
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("32003".parse::<Field>().unwrap(), Field::Prime(32003));
        assert_eq!("GF(2)".parse::<Field>().unwrap(), Field::Prime(2));
        assert!("4".parse::<Field>().is_err());
        assert_eq!(Field::Prime(5).to_string(), "GF(5)");
    }

    #[test]
    fn solve_picks_first_pivots() {
        // x0 + x1 = 2, x1 + x2 = 3.
        let cols = vec![vec![(0, q(1))], vec![(0, q(1)), (1, q(1))], vec![(1, q(1))]];
        let x = solve(&cols, &vec![(0, q(2)), (1, q(3))]).unwrap();
        assert_eq!(x, vec![q(-1), q(3), q(0)]);
        assert!(solve(&[vec![(0, q(1))]], &vec![(1, q(1))]).is_none());
        assert_eq!(solve(&[], &vec![]).unwrap(), Vec::<Q>::new());
    }

    proptest! {
        #[test]
        fn sparse_rank_matches_dense(m in prop::collection::vec(prop::collection::vec(-3i64..4, 5), 0..7)) {
            prop_assert_eq!(rank_integer(&sparse(&m), Field::Rationals), dense_rank_q(&m));
        }

        #[test]
        fn rational_rank_is_scale_invariant(m in prop::collection::vec(prop::collection::vec(-3i64..4, 4), 1..6), d in 1i64..7) {
            let rows: Vec<SparseRow<Q>> = sparse(&m)
                .into_iter()
                .map(|r| r.into_iter().map(|(c, v)| (c, Q::new(BigInt::from(v), BigInt::from(d)))).collect())
                .collect();
            prop_assert_eq!(rank_rational(&rows, Field::Rationals).unwrap(), dense_rank_q(&m));
        }

        #[test]
        fn solutions_satisfy_system(m in prop::collection::vec(prop::collection::vec(-2i64..3, 4), 1..5), x in prop::collection::vec(-2i64..3, 4)) {
            let cols: Vec<SparseRow<Q>> = (0..4)
                .map(|j| m.iter().enumerate().filter(|(_, r)| r[j] != 0).map(|(i, r)| (i, q(r[j]))).collect())
                .collect();
            let b: SparseRow<Q> = m.iter().enumerate()
                .map(|(i, r)| (i, q(r.iter().zip(&x).map(|(a, b)| a * b).sum())))
                .filter(|(_, v)| !v.is_zero())
                .collect();
            let sol = solve(&cols, &b).expect("consistent by construction");
            for (i, r) in m.iter().enumerate() {
                let lhs: Q = r.iter().zip(&sol).map(|(a, s)| q(*a) * s).sum();
                let rhs = b.iter().find(|(k, _)| *k == i).map_or(Q::zero(), |(_, v)| v.clone());
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
