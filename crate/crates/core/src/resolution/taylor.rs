use crate::bits;
use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::monomial::{SquarefreeMonomial, Variables};

use super::complex::{BasisElement, FreeComplex};

pub const TAYLOR_LIMIT: usize = 20;

/// Nonempty subsets of `0..n` grouped by size, each group in increasing
/// bitmask order.
pub(crate) fn subsets_by_size(n: usize) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new(); n];
    for s in 1..=bits::full(n) {
        out[s.count_ones() as usize - 1].push(s);
    }
    out
}

pub(crate) fn subset_lcm(monomials: &[SquarefreeMonomial], s: u64) -> SquarefreeMonomial {
    bits::members(s).fold(SquarefreeMonomial::UNIT, |acc, i| acc.lcm(&monomials[i]))
}

/// The Taylor resolution of the ideal generated by `monomials`: the basis
/// of `T_i` is the `(i+1)`-subsets, with multidegree their lcm and
/// `∂ e_σ = Σ_k (-1)^k (m_σ / m_{σ∖σ_k}) e_{σ∖σ_k}`.
pub fn taylor_complex(vars: &Variables, monomials: &[SquarefreeMonomial]) -> Result<FreeComplex> {
    let n = monomials.len();
    if n == 0 || n > TAYLOR_LIMIT {
        return Err(Error::TooLarge { size: n, limit: TAYLOR_LIMIT });
    }
    let groups = subsets_by_size(n);
    let label = |s: u64| {
        let names: Vec<String> = bits::members(s).map(|i| (i + 1).to_string()).collect();
        format!("e{{{}}}", names.join(","))
    };
    let modules: Vec<Vec<BasisElement>> = groups
        .iter()
        .map(|g| {
            g.iter()
                .map(|&s| BasisElement { label: label(s), multidegree: subset_lcm(monomials, s), cone: None })
                .collect()
        })
        .collect();
    let mut differentials = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let lower = &groups[i - 1];
        let index = |s: u64| lower.binary_search(&s).expect("face is a basis element");
        let columns = groups[i]
            .iter()
            .map(|&s| {
                let mut column: Vec<(usize, Q)> = bits::members(s)
                    .enumerate()
                    .map(|(k, v)| (index(s & !(1 << v)), q(if k % 2 == 0 { 1 } else { -1 })))
                    .collect();
                column.sort_by_key(|(r, _)| *r);
                column
            })
            .collect();
        differentials.push(columns);
    }
    Ok(FreeComplex::new(vars.clone(), modules, differentials, vec![q(1); n]))
}
