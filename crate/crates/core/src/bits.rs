//! Helpers for `u64` bitsets. Element `i` of a set is bit `i`.

/// Iterates the members of a bitset in increasing order.
pub fn members(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let i = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(i)
        }
    })
}

pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> u64 {
    indices.into_iter().fold(0, |acc, i| acc | (1u64 << i))
}

#[inline]
pub fn contains(set: u64, i: usize) -> bool {
    set >> i & 1 == 1
}

#[inline]
pub fn is_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates all subsets of `set`, starting from the empty set.
pub fn subsets(set: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == set { None } else { Some((cur.wrapping_sub(set)) & set) };
        Some(cur)
    })
}

/// Reverses the low `n` bits, so that bit 0 becomes the most significant.
pub fn big_endian(set: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        set.reverse_bits() >> (64 - n)
    }
}
