//! Exhaustive enumeration of small posets and meet-semilattices up to
//! isomorphism, and seeded random samples of larger inputs.
//!
//! Removing a maximal element from a poset (or from a meet-semilattice with
//! at least two elements) leaves a poset (meet-semilattice). So every object
//! of size `n + 1` arises from one of size `n` by adding a new maximal
//! element above a down-closed set `D`. Duplicates are removed by an
//! isomorphism test within buckets of equal invariants.

use std::collections::HashMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::bits;
use crate::duality::SimplicialComplex;
use crate::poset::{Poset, DEFAULT_IDEAL_LIMIT};
use crate::semilattice::MeetSemilattice;

/// Largest size accepted by the exhaustive enumerators.
pub const MAX_ENUMERATED: usize = 10;

/// A poset on `0..n` stored by down-sets (`down[i]` contains `i`), with
/// every element's strict down-set among the earlier indices.
type Shape = Vec<u64>;

fn up_sets(shape: &Shape) -> Vec<u64> {
    let mut up = vec![0u64; shape.len()];
    for (i, d) in shape.iter().enumerate() {
        for j in bits::members(*d) {
            up[j] |= 1 << i;
        }
    }
    up
}

fn covers_below(shape: &Shape, i: usize) -> u64 {
    let strict = shape[i] & !(1 << i);
    bits::members(strict)
        .filter(|&j| !bits::members(strict).any(|k| k != j && bits::contains(shape[k], j)))
        .fold(0, |acc, j| acc | 1 << j)
}

/// Per-element invariants: sizes of the down-set, up-set and cover sets.
fn invariants(shape: &Shape) -> Vec<(u32, u32, u32, u32)> {
    let up = up_sets(shape);
    let lower: Vec<u64> = (0..shape.len()).map(|i| covers_below(shape, i)).collect();
    let mut upper = vec![0u32; shape.len()];
    for l in &lower {
        for j in bits::members(*l) {
            upper[j] += 1;
        }
    }
    (0..shape.len()).map(|i| (shape[i].count_ones(), up[i].count_ones(), lower[i].count_ones(), upper[i])).collect()
}

fn isomorphic(a: &Shape, inv_a: &[(u32, u32, u32, u32)], b: &Shape, inv_b: &[(u32, u32, u32, u32)]) -> bool {
    fn extend(
        i: usize,
        a: &Shape,
        inv_a: &[(u32, u32, u32, u32)],
        b: &Shape,
        inv_b: &[(u32, u32, u32, u32)],
        map: &mut Vec<usize>,
        used: u64,
    ) -> bool {
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if bits::contains(used, j) || inv_a[i] != inv_b[j] {
                continue;
            }
            let consistent = (0..i).all(|k| {
                bits::contains(a[i], k) == bits::contains(b[j], map[k])
                    && bits::contains(a[k], i) == bits::contains(b[map[k]], j)
            });
            if consistent {
                map.push(j);
                if extend(i + 1, a, inv_a, b, inv_b, map, used | 1 << j) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(0, a, inv_a, b, inv_b, &mut Vec::with_capacity(a.len()), 0)
}

/// Down-closed subsets of a shape, in increasing bit order.
fn down_closed(shape: &Shape) -> Vec<u64> {
    (0..=bits::full(shape.len())).filter(|&s| bits::members(s).all(|i| bits::is_subset(shape[i], s))).collect()
}

/// Adding an element above `d` keeps meets: every `d ∩ down(x)` has a
/// greatest element.
fn keeps_meets(shape: &Shape, d: u64) -> bool {
    d != 0
        && shape.iter().all(|&down| {
            let common = d & down;
            bits::members(common).any(|m| shape[m] == common)
        })
}

/// Isomorphism classes, kept in first-seen order.
struct Classes {
    shapes: Vec<Shape>,
    buckets: HashMap<Vec<(u32, u32, u32, u32)>, Vec<(usize, Vec<(u32, u32, u32, u32)>)>>,
}

impl Classes {
    fn new() -> Classes {
        Classes { shapes: Vec::new(), buckets: HashMap::new() }
    }

    fn insert(&mut self, shape: Shape) {
        let inv = invariants(&shape);
        let mut key = inv.clone();
        key.sort();
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|(k, other)| isomorphic(&shape, &inv, &self.shapes[*k], other)) {
            return;
        }
        bucket.push((self.shapes.len(), inv));
        self.shapes.push(shape);
    }
}

fn grow(from: &[Shape], semilattice: bool) -> Vec<Shape> {
    let mut classes = Classes::new();
    for shape in from {
        let n = shape.len();
        for d in down_closed(shape) {
            if semilattice && !keeps_meets(shape, d) {
                continue;
            }
            let mut next = shape.clone();
            next.push(d | 1 << n);
            classes.insert(next);
        }
    }
    classes.shapes
}

fn shapes(n: usize, semilattice: bool) -> Vec<Shape> {
    assert!(n <= MAX_ENUMERATED, "enumeration is limited to {MAX_ENUMERATED} elements");
    if n == 0 {
        return if semilattice { Vec::new() } else { vec![Vec::new()] };
    }
    let mut level: Vec<Shape> = vec![vec![1]];
    for _ in 1..n {
        level = grow(&level, semilattice);
    }
    level
}

fn shape_relation(shape: &Shape) -> Vec<(usize, usize)> {
    (0..shape.len()).flat_map(|i| bits::members(covers_below(shape, i)).map(move |j| (j, i))).collect()
}

fn letter_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| if i < 26 { ((b'a' + i as u8) as char).to_string() } else { format!("p{i}") }).collect()
}

/// All posets on `n >= 1` elements up to isomorphism, labeled `a, b, ...`.
pub fn posets(n: usize) -> Vec<Poset> {
    shapes(n, false)
        .iter()
        .map(|s| Poset::from_labeled_relation(letter_labels(n), &shape_relation(s)).expect("valid shape"))
        .collect()
}

/// All meet-semilattices on `n` elements up to isomorphism, labeled
/// `0, 1, ...` with `0` the bottom.
pub fn meet_semilattices(n: usize) -> Vec<MeetSemilattice> {
    shapes(n, true)
        .iter()
        .map(|s| {
            let poset = Poset::from_relation(n, &shape_relation(s)).expect("valid shape");
            MeetSemilattice::new(poset).expect("meets preserved")
        })
        .collect()
}

/// Meet-semilattices with `1..=max` elements, smallest first.
pub fn meet_semilattices_up_to(max: usize) -> Vec<MeetSemilattice> {
    (1..=max).flat_map(meet_semilattices).collect()
}

/// `J(P)` for every poset `P` with `1..=max` elements.
pub fn distributive_lattices(max: usize) -> Vec<MeetSemilattice> {
    (1..=max)
        .flat_map(posets)
        .map(|p| MeetSemilattice::ideal_lattice(&p, DEFAULT_IDEAL_LIMIT).expect("small poset"))
        .collect()
}

/// A random poset on `n` elements: each pair `i < j` is related with
/// probability `density`, then closed transitively.
pub fn random_poset(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Poset {
    let mut down: Vec<u64> = (0..n).map(|i| 1 << i).collect();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(density) {
                down[j] |= down[i];
            }
        }
    }
    for j in 0..n {
        for i in 0..j {
            if bits::contains(down[j], i) {
                down[j] |= down[i];
            }
        }
    }
    Poset::from_labeled_relation(letter_labels(n), &shape_relation(&down)).expect("closed relation")
}

pub fn random_distributive_lattice(rng: &mut ChaCha8Rng, max_irreducibles: usize) -> MeetSemilattice {
    let n = rng.gen_range(1..=max_irreducibles);
    let density = rng.gen_range(0.0..0.7);
    MeetSemilattice::ideal_lattice(&random_poset(rng, n, density), DEFAULT_IDEAL_LIMIT).expect("small poset")
}

/// A random complex on `1..=max_vertices` vertices `v1, v2, ...` with up to
/// six nonempty candidate facets.
pub fn random_complex(rng: &mut ChaCha8Rng, max_vertices: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let count = rng.gen_range(1..=6);
    let facets = (0..count).map(|_| rng.gen_range(1..=bits::full(n))).collect();
    SimplicialComplex::new((1..=n).map(|i| format!("v{i}")).collect(), facets).expect("facets within range")
}

/// A random meet-semilattice of size `n`, grown one maximal element at a
/// time above a random admissible down-set.
pub fn random_meet_semilattice(rng: &mut ChaCha8Rng, n: usize) -> MeetSemilattice {
    let mut shape: Shape = vec![1];
    while shape.len() < n {
        let choices: Vec<u64> = down_closed(&shape).into_iter().filter(|&d| keeps_meets(&shape, d)).collect();
        let d = choices[rng.gen_range(0..choices.len())];
        let k = shape.len();
        shape.push(d | 1 << k);
    }
    MeetSemilattice::new(Poset::from_relation(n, &shape_relation(&shape)).expect("valid shape"))
        .expect("meets preserved")
}
