//! Longest monochromatic monotone paths.
//!
//! A monotone `r`-uniform path on vertices `u_1 < ... < u_k` has the windows
//! `{u_i, ..., u_{i+r-1}}` as edges. Lengths here are **vertex counts**, not
//! edge counts. A sequence of fewer than `r` vertices has no edge and counts
//! as a path of either color, so every report is at least `r - 1`.

use serde::Serialize;

use crate::colex::{self, ColexSubsets};
use crate::coloring::{Sign, SignFunction};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathReport {
    pub best_minus: usize,
    pub best_plus: usize,
    pub witness_minus: Vec<usize>,
    pub witness_plus: Vec<usize>,
}

impl PathReport {
    pub fn best(&self) -> usize {
        self.best_minus.max(self.best_plus)
    }
}

/// Exact longest all-`-` and all-`+` monotone paths, with lexicographically
/// smallest witnesses.
pub fn longest_mono_paths(c: &SignFunction) -> Result<PathReport> {
    if c.has_zero() {
        return Err(Error::TernaryNotAllowed);
    }
    let (best_minus, witness_minus) = longest_for(c, Sign::Minus);
    let (best_plus, witness_plus) = longest_for(c, Sign::Plus);
    Ok(PathReport {
        best_minus,
        best_plus,
        witness_minus,
        witness_plus,
    })
}

/// Whether `c` has a monochromatic monotone path on `m` vertices.
pub fn contains_path(c: &SignFunction, m: usize) -> Result<bool> {
    if m < c.r() {
        return Err(Error::InvalidArgument(format!("path length {m} is below r = {}", c.r())));
    }
    if m > c.n() {
        return Ok(false);
    }
    Ok(longest_mono_paths(c)?.best() >= m)
}

fn longest_for(c: &SignFunction, color: Sign) -> (usize, Vec<usize>) {
    let r = c.r();
    let n = c.n();
    let base = r - 1;
    let tuples = colex::binomial(n as u64, base as u64).expect("bounded by edge count") as usize;

    // ending[t]: longest path whose last r-1 vertices are tuple t.
    // starting[t]: longest path whose first r-1 vertices are tuple t.
    let mut ending = vec![base; tuples];
    let mut starting = vec![base; tuples];
    let mut links = Vec::with_capacity(c.len());
    for (rank, e) in ColexSubsets::new(n, r).enumerate() {
        if c.get(rank) != color {
            continue;
        }
        let head = colex::rank_unchecked(&e[..base]);
        let tail = colex::rank_unchecked(&e[1..]);
        ending[tail] = ending[tail].max(ending[head] + 1);
        links.push((head, tail));
    }
    for &(head, tail) in links.iter().rev() {
        starting[head] = starting[head].max(starting[tail] + 1);
    }
    let best = ending.iter().copied().max().unwrap_or(base);
    debug_assert_eq!(best, starting.iter().copied().max().unwrap_or(base));

    let mut witness = first_lex_tuple(n, base, |t| starting[colex::rank_unchecked(t)] == best);
    let mut remaining = best;
    let mut window = witness.clone();
    while remaining > base {
        let last = *window.last().unwrap_or(&0);
        let next = (last + 1..=n)
            .find(|&w| {
                let mut e = window.clone();
                e.push(w);
                c.get(colex::rank_unchecked(&e)) == color
                    && starting[colex::rank_unchecked(&e[1..])] == remaining - 1
            })
            .expect("suffix table guarantees a continuation");
        witness.push(next);
        window.remove(0);
        window.push(next);
        remaining -= 1;
    }
    (best, witness)
}

/// First increasing `k`-tuple of `[n]` in lexicographic order satisfying `pred`.
fn first_lex_tuple(n: usize, k: usize, mut pred: impl FnMut(&[usize]) -> bool) -> Vec<usize> {
    let mut t: Vec<usize> = (1..=k).collect();
    loop {
        if pred(&t) {
            return t;
        }
        // lexicographic successor
        let mut i = k;
        loop {
            if i == 0 {
                panic!("no tuple satisfies predicate");
            }
            i -= 1;
            if t[i] < n - (k - 1 - i) {
                t[i] += 1;
                for j in i + 1..k {
                    t[j] = t[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Whether `seq` is an increasing vertex sequence whose consecutive
/// `r`-windows all have color `color`.
pub fn is_mono_path(c: &SignFunction, seq: &[usize], color: Sign) -> bool {
    if seq.windows(2).any(|w| w[0] >= w[1]) || seq.first().is_some_and(|&v| v < 1) || seq.last().is_some_and(|&v| v > c.n()) {
        return false;
    }
    seq.windows(c.r()).all(|w| c.get(colex::rank_unchecked(w)) == color)
}
