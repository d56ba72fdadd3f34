//! Colexicographic ranking of `k`-subsets of `[n] = {1, ..., n}`.
//!
//! The rank of `v_1 < ... < v_k` is `sum_i C(v_i - 1, i)`. This is the only
//! edge indexing used in the crate: colorings, the search, the file format and
//! the path DP all address edges by this rank.

use crate::error::{Error, Result};

/// `C(n, k)`, or `None` on `u64` overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

/// Precomputed `C(a, b)` for `a <= n`, `b <= k`.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    n: usize,
    k: usize,
    table: Vec<u64>,
}

impl BinomialTable {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let width = k + 1;
        let mut table = vec![0u64; (n + 1) * width];
        for a in 0..=n {
            table[a * width] = 1;
            for b in 1..=k.min(a) {
                let v = table[(a - 1) * width + b - 1]
                    .checked_add(table[(a - 1) * width + b])
                    .ok_or_else(|| Error::too_large("binomial coefficient", format!("C({a},{b})"), u64::MAX))?;
                table[a * width + b] = v;
            }
        }
        Ok(Self { n, k, table })
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize) -> u64 {
        debug_assert!(a <= self.n && b <= self.k);
        self.table[a * (self.k + 1) + b]
    }

    pub fn max_n(&self) -> usize {
        self.n
    }

    pub fn max_k(&self) -> usize {
        self.k
    }
}

/// Colex rank of a strictly increasing tuple of 1-based vertices.
pub fn colex_rank(vertices: &[usize], n: usize) -> Result<usize> {
    check_edge(vertices, n)?;
    Ok(rank_unchecked(vertices))
}

/// Rank without validation. Caller guarantees `vertices` is increasing and 1-based.
#[inline]
pub fn rank_unchecked(vertices: &[usize]) -> usize {
    vertices
        .iter()
        .enumerate()
        .map(|(i, &v)| small_binomial(v - 1, i + 1))
        .sum()
}

/// Inverse of [`colex_rank`]: the `k`-subset of rank `rank`.
pub fn colex_unrank(mut rank: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0usize; k];
    for i in (1..=k).rev() {
        // largest v with C(v - 1, i) <= rank
        let mut v = i;
        while small_binomial(v, i) <= rank {
            v += 1;
        }
        rank -= small_binomial(v - 1, i);
        out[i - 1] = v;
    }
    out
}

/// Validate a 1-based strictly increasing tuple over `[n]`.
pub fn check_edge(vertices: &[usize], n: usize) -> Result<()> {
    if vertices.is_empty() {
        return Err(Error::InvalidEdge("empty tuple".into()));
    }
    if vertices[0] < 1 || *vertices.last().unwrap() > n {
        return Err(Error::InvalidEdge(format!("{vertices:?} not within [1, {n}]")));
    }
    if vertices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidEdge(format!("{vertices:?} not strictly increasing")));
    }
    Ok(())
}

#[inline]
fn small_binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Iterates the `k`-subsets of `[n]` in colex order, 1-based.
#[derive(Debug, Clone)]
pub struct ColexSubsets {
    n: usize,
    current: Vec<usize>,
    done: bool,
}

impl ColexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            current: (1..=k).collect(),
            done: k > n,
        }
    }

    /// Advance in place; returns `false` when exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let k = self.current.len();
        if k == 0 {
            self.done = true;
            return false;
        }
        for i in 0..k {
            let limit = if i + 1 < k { self.current[i + 1] } else { self.n + 1 };
            if self.current[i] + 1 < limit {
                self.current[i] += 1;
                for (j, slot) in self.current.iter_mut().enumerate().take(i) {
                    *slot = j + 1;
                }
                return true;
            }
        }
        self.done = true;
        false
    }

    pub fn current(&self) -> &[usize] {
        &self.current
    }
}

impl Iterator for ColexSubsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        self.advance();
        Some(out)
    }
}

/// Ranks of the `k+1` subsets `S^{(i)}` obtained by deleting the i-th smallest
/// element of `set` (a `(k+1)`-subset), listed for i = k+1, k, ..., 1.
pub fn deletion_ranks(set: &[usize], out: &mut Vec<usize>) {
    out.clear();
    let len = set.len();
    for del in (0..len).rev() {
        let mut rank = 0usize;
        let mut pos = 1usize;
        for (j, &v) in set.iter().enumerate() {
            if j == del {
                continue;
            }
            rank += small_binomial(v - 1, pos);
            pos += 1;
        }
        out.push(rank);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(colex_rank(&[1, 2, 3], 3).unwrap(), 0);
        assert_eq!(colex_rank(&[2, 3, 4], 4).unwrap(), 3);
        assert_eq!(colex_rank(&[1, 3], 3).unwrap(), 1);
    }

    #[test]
    fn colex_order_of_triples_in_four() {
        let all: Vec<_> = ColexSubsets::new(4, 3).collect();
        assert_eq!(all, vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]);
        for (i, s) in all.iter().enumerate() {
            assert_eq!(rank_unchecked(s), i);
        }
    }

    #[test]
    fn invalid_edges() {
        assert!(matches!(colex_rank(&[2, 2, 3], 4), Err(Error::InvalidEdge(_))));
        assert!(matches!(colex_rank(&[3, 2], 4), Err(Error::InvalidEdge(_))));
        assert!(matches!(colex_rank(&[0, 2], 4), Err(Error::InvalidEdge(_))));
        assert!(matches!(colex_rank(&[1, 5], 4), Err(Error::InvalidEdge(_))));
    }

    #[test]
    fn unrank_round_trip_small() {
        for n in 1..=12 {
            for k in 1..=5.min(n) {
                let mut count = 0;
                for s in ColexSubsets::new(n, k) {
                    let r = rank_unchecked(&s);
                    assert_eq!(r, count);
                    assert_eq!(colex_unrank(r, k), s);
                    count += 1;
                }
                assert_eq!(count as u64, binomial(n as u64, k as u64).unwrap());
            }
        }
    }

    #[test]
    fn deletion_ranks_order() {
        let mut out = Vec::new();
        deletion_ranks(&[1, 2, 3, 4], &mut out);
        // S^(4) = 123, S^(3) = 124, S^(2) = 134, S^(1) = 234
        assert_eq!(out, vec![0, 1, 2, 3]);
    }

    #[test]
    fn binomial_table_matches() {
        let t = BinomialTable::new(64, 6).unwrap();
        for a in 0..=64u64 {
            for b in 0..=6u64 {
                assert_eq!(t.get(a as usize, b as usize), binomial(a, b).unwrap());
            }
        }
        assert!(binomial(200, 100).is_none());
    }
}
