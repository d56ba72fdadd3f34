//! Sign functions: colorings of all `r`-subsets of `[n]` by `-`, `+` (and,
//! behind an explicit flag, `0`), stored as packed 2-bit codes in colex order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::colex::{self, ColexSubsets};
use crate::error::{Error, Result};

/// Default upper bound on `n` for uniformity `r >= 3`.
pub const DEFAULT_MAX_VERTICES: usize = 64;

/// Upper bound on the number of stored edges, independent of the vertex cap.
pub const MAX_EDGES: u64 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    #[inline]
    fn code(self) -> u64 {
        match self {
            Sign::Minus => 0b00,
            Sign::Plus => 0b01,
            Sign::Zero => 0b10,
        }
    }

    #[inline]
    fn from_code(code: u64) -> Sign {
        match code {
            0b00 => Sign::Minus,
            0b01 => Sign::Plus,
            _ => Sign::Zero,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
            Sign::Zero => Sign::Zero,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            '+' => Some(Sign::Plus),
            _ => None,
        }
    }

    pub fn from_bool(plus: bool) -> Sign {
        if plus {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

const CODES_PER_WORD: usize = 32;

/// A coloring of the edges of the complete ordered `r`-uniform hypergraph on `[n]`.
///
/// Immutable once built. Edge `e` is addressed by its colex rank.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignFunction {
    r: usize,
    n: usize,
    len: usize,
    words: Vec<u64>,
    ternary: bool,
}

impl fmt::Debug for SignFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignFunction(r={}, n={}, {})", self.r, self.n, self.color_string())
    }
}

/// Result of a monotonicity or transitivity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// First violating `(r+1)`-set in colex order, 1-based.
    Violated(Vec<usize>),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&[usize]> {
        match self {
            Verdict::Holds => None,
            Verdict::Violated(w) => Some(w),
        }
    }
}

impl SignFunction {
    /// Build a binary coloring from colors in colex order.
    pub fn new(r: usize, n: usize, colors: &[Sign]) -> Result<Self> {
        Self::build(r, n, colors, false, DEFAULT_MAX_VERTICES)
    }

    /// Build a coloring that may contain `0` entries.
    pub fn new_ternary(r: usize, n: usize, colors: &[Sign]) -> Result<Self> {
        Self::build(r, n, colors, true, DEFAULT_MAX_VERTICES)
    }

    /// As [`SignFunction::new`]/[`SignFunction::new_ternary`] with a custom vertex cap
    /// (only applied for `r >= 3`).
    pub fn with_vertex_cap(r: usize, n: usize, colors: &[Sign], ternary: bool, max_vertices: usize) -> Result<Self> {
        Self::build(r, n, colors, ternary, max_vertices)
    }

    /// Constant coloring.
    pub fn constant(r: usize, n: usize, sign: Sign) -> Result<Self> {
        let len = edge_count(r, n)?;
        Self::build(r, n, &vec![sign; len], sign == Sign::Zero, DEFAULT_MAX_VERTICES)
    }

    /// Build from a closure evaluated on each edge (1-based vertices) in colex order.
    pub fn from_fn(r: usize, n: usize, ternary: bool, mut f: impl FnMut(&[usize]) -> Sign) -> Result<Self> {
        check_shape(r, n, DEFAULT_MAX_VERTICES)?;
        let colors: Vec<Sign> = ColexSubsets::new(n, r).map(|e| f(&e)).collect();
        Self::build(r, n, &colors, ternary, DEFAULT_MAX_VERTICES)
    }

    fn build(r: usize, n: usize, colors: &[Sign], ternary: bool, max_vertices: usize) -> Result<Self> {
        check_shape(r, n, max_vertices)?;
        let len = edge_count(r, n)?;
        if colors.len() != len {
            return Err(Error::InvalidArgument(format!(
                "expected C({n},{r}) = {len} colors, got {}",
                colors.len()
            )));
        }
        if !ternary && colors.contains(&Sign::Zero) {
            return Err(Error::TernaryNotAllowed);
        }
        let mut words = vec![0u64; len.div_ceil(CODES_PER_WORD)];
        for (i, s) in colors.iter().enumerate() {
            words[i / CODES_PER_WORD] |= s.code() << (2 * (i % CODES_PER_WORD));
        }
        Ok(Self { r, n, len, words, ternary })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges, `C(n, r)`.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn ternary_allowed(&self) -> bool {
        self.ternary
    }

    #[inline]
    pub fn get(&self, rank: usize) -> Sign {
        Sign::from_code((self.words[rank / CODES_PER_WORD] >> (2 * (rank % CODES_PER_WORD))) & 0b11)
    }

    /// Color of an edge given by its 1-based vertices.
    pub fn color_of(&self, vertices: &[usize]) -> Result<Sign> {
        if vertices.len() != self.r {
            return Err(Error::InvalidEdge(format!("expected {} vertices, got {}", self.r, vertices.len())));
        }
        Ok(self.get(colex::colex_rank(vertices, self.n)?))
    }

    pub fn colors(&self) -> Vec<Sign> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn color_string(&self) -> String {
        (0..self.len).map(|i| self.get(i).as_char()).collect()
    }

    pub fn has_zero(&self) -> bool {
        self.ternary && (0..self.len).any(|i| self.get(i) == Sign::Zero)
    }

    /// Colex ranks of all `0` entries.
    pub fn zero_positions(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i) == Sign::Zero).collect()
    }

    /// Replace the listed positions, keeping everything else.
    pub fn with_assigned(&self, positions: &[usize], signs: &[Sign]) -> Result<Self> {
        let mut colors = self.colors();
        for (&p, &s) in positions.iter().zip(signs) {
            colors[p] = s;
        }
        let ternary = colors.contains(&Sign::Zero);
        Self::build(self.r, self.n, &colors, ternary, usize::MAX)
    }

    /// Global exchange of `-` and `+`.
    pub fn swapped(&self) -> Self {
        let colors: Vec<Sign> = self.colors().into_iter().map(Sign::flip).collect();
        Self::build(self.r, self.n, &colors, self.ternary, usize::MAX).expect("same shape")
    }

    /// Relabel vertex `v` as `n + 1 - v`.
    pub fn reversed(&self) -> Self {
        let n = self.n;
        let mut colors = vec![Sign::Minus; self.len];
        let mut mirrored = vec![0usize; self.r];
        for (rank, e) in ColexSubsets::new(n, self.r).enumerate() {
            for (i, &v) in e.iter().enumerate() {
                mirrored[self.r - 1 - i] = n + 1 - v;
            }
            colors[colex::rank_unchecked(&mirrored)] = self.get(rank);
        }
        Self::build(self.r, self.n, &colors, self.ternary, usize::MAX).expect("same shape")
    }

    /// Sub-coloring induced on the increasing 1-based `vertices`, relabelled
    /// onto `[vertices.len()]`.
    pub fn restrict(&self, vertices: &[usize]) -> Result<Self> {
        colex::check_edge(vertices, self.n)?;
        let k = vertices.len();
        let mut mapped = vec![0usize; self.r];
        let colors: Vec<Sign> = ColexSubsets::new(k, self.r)
            .map(|e| {
                for (slot, &v) in mapped.iter_mut().zip(&e) {
                    *slot = vertices[v - 1];
                }
                self.get(colex::rank_unchecked(&mapped))
            })
            .collect();
        Self::build(self.r, k, &colors, self.ternary, usize::MAX)
    }

    fn require_binary(&self) -> Result<()> {
        if self.has_zero() {
            Err(Error::TernaryNotAllowed)
        } else {
            Ok(())
        }
    }

    /// `(c(S^{(r+1)}), ..., c(S^{(1)}))` for an `(r+1)`-set `S`.
    pub fn link_sequence(&self, set: &[usize]) -> Result<Vec<Sign>> {
        if set.len() != self.r + 1 {
            return Err(Error::InvalidEdge(format!(
                "expected {} vertices, got {}",
                self.r + 1,
                set.len()
            )));
        }
        colex::check_edge(set, self.n)?;
        let mut ranks = Vec::with_capacity(set.len());
        colex::deletion_ranks(set, &mut ranks);
        Ok(ranks.into_iter().map(|k| self.get(k)).collect())
    }

    /// Every `(r+1)`-set's link sequence changes sign at most once.
    pub fn is_monotone(&self) -> Result<Verdict> {
        self.require_binary()?;
        Ok(self.scan_links(|seq| sign_changes(seq) <= 1))
    }

    /// Equal first and last link colors force a monochromatic `(r+1)`-set.
    ///
    /// In the link sequence the first entry is `c(v_1..v_r)` and the last is
    /// `c(v_2..v_{r+1})`.
    pub fn is_transitive(&self) -> Result<Verdict> {
        self.require_binary()?;
        Ok(self.scan_links(|seq| {
            let first = seq[0];
            first != seq[seq.len() - 1] || seq.iter().all(|&s| s == first)
        }))
    }

    fn scan_links(&self, mut ok: impl FnMut(&[Sign]) -> bool) -> Verdict {
        let mut sets = ColexSubsets::new(self.n, self.r + 1);
        if self.n <= self.r {
            return Verdict::Holds;
        }
        let mut ranks = Vec::with_capacity(self.r + 1);
        let mut seq = Vec::with_capacity(self.r + 1);
        loop {
            let set = sets.current();
            colex::deletion_ranks(set, &mut ranks);
            seq.clear();
            seq.extend(ranks.iter().map(|&k| self.get(k)));
            if !ok(&seq) {
                return Verdict::Violated(set.to_vec());
            }
            if !sets.advance() {
                return Verdict::Holds;
            }
        }
    }
}

/// Number of sign changes in a `±` sequence (zeros are skipped).
pub fn sign_changes(seq: &[Sign]) -> usize {
    let mut last = None;
    let mut changes = 0;
    for &s in seq {
        if s == Sign::Zero {
            continue;
        }
        if let Some(prev) = last {
            if prev != s {
                changes += 1;
            }
        }
        last = Some(s);
    }
    changes
}

fn check_shape(r: usize, n: usize, max_vertices: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidArgument(format!("uniformity r = {r} must be at least 2")));
    }
    if n < r {
        return Err(Error::InvalidArgument(format!("vertex count n = {n} must be at least r = {r}")));
    }
    if r >= 3 && n > max_vertices {
        return Err(Error::too_large("vertex count", n, max_vertices));
    }
    Ok(())
}

/// `C(n, r)` as a `usize`, refusing tables beyond [`MAX_EDGES`].
pub fn edge_count(r: usize, n: usize) -> Result<usize> {
    match colex::binomial(n as u64, r as u64) {
        Some(c) if c <= MAX_EDGES => Ok(c as usize),
        Some(c) => Err(Error::too_large("edge count", c, MAX_EDGES)),
        None => Err(Error::too_large("edge count", format!("C({n},{r})"), MAX_EDGES)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus as M, Plus as P};

    fn all_colorings(r: usize, n: usize) -> Vec<SignFunction> {
        let len = edge_count(r, n).unwrap();
        (0..1u64 << len)
            .map(|mask| {
                let colors: Vec<Sign> = (0..len).map(|i| Sign::from_bool(mask >> i & 1 == 1)).collect();
                SignFunction::new(r, n, &colors).unwrap()
            })
            .collect()
    }

    #[test]
    fn link_sequence_examples() {
        let c = SignFunction::new(2, 3, &[P, P, M]).unwrap();
        assert_eq!(c.link_sequence(&[1, 2, 3]).unwrap(), vec![P, P, M]);

        let c = SignFunction::new(3, 4, &[M, P, M, P]).unwrap();
        assert_eq!(c.link_sequence(&[1, 2, 3, 4]).unwrap(), vec![M, P, M, P]);

        let c = SignFunction::constant(4, 6, M).unwrap();
        assert_eq!(c.link_sequence(&[1, 3, 4, 5, 6]).unwrap(), vec![M; 5]);

        assert!(matches!(c.link_sequence(&[1, 2, 3]), Err(Error::InvalidEdge(_))));
    }

    #[test]
    fn non_monotone_transitive_example() {
        let c = SignFunction::new(3, 4, &[M, P, M, P]).unwrap();
        assert_eq!(c.is_monotone().unwrap(), Verdict::Violated(vec![1, 2, 3, 4]));
        assert!(c.is_transitive().unwrap().holds());
    }

    #[test]
    fn constant_colorings_pass() {
        for r in 2..=4 {
            for s in [M, P] {
                let c = SignFunction::constant(r, 7, s).unwrap();
                assert!(c.is_monotone().unwrap().holds());
                assert!(c.is_transitive().unwrap().holds());
            }
        }
    }

    #[test]
    fn counts_on_r_plus_one_vertices() {
        for r in 2..=6 {
            let all = all_colorings(r, r + 1);
            let mono = all.iter().filter(|c| c.is_monotone().unwrap().holds()).count();
            let trans = all.iter().filter(|c| c.is_transitive().unwrap().holds()).count();
            assert_eq!(mono, 2 * r + 2, "r = {r}");
            assert_eq!(trans, (1 << r) + 2, "r = {r}");
        }
    }

    #[test]
    fn monotone_implies_transitive_exhaustive() {
        for (r, n) in [(2, 5), (3, 5), (4, 6)] {
            for c in all_colorings(r, n) {
                if c.is_monotone().unwrap().holds() {
                    assert!(c.is_transitive().unwrap().holds(), "{c:?}");
                }
            }
        }
    }

    #[test]
    fn ternary_rejected_by_predicates() {
        let c = SignFunction::new_ternary(3, 4, &[M, Sign::Zero, M, P]).unwrap();
        assert_eq!(c.is_monotone(), Err(Error::TernaryNotAllowed));
        assert_eq!(c.is_transitive(), Err(Error::TernaryNotAllowed));
        assert_eq!(SignFunction::new(3, 4, &[M, Sign::Zero, M, P]), Err(Error::TernaryNotAllowed));
    }

    #[test]
    fn shape_errors() {
        assert!(SignFunction::new(3, 4, &[M, P]).is_err());
        assert!(SignFunction::new(1, 4, &[M; 4]).is_err());
        assert!(SignFunction::new(3, 2, &[]).is_err());
        assert!(matches!(SignFunction::constant(3, 65, M), Err(Error::TooLarge { .. })));
        assert!(SignFunction::constant(2, 100, M).is_ok());
    }

    #[test]
    fn reversal_is_involution_and_maps_edges() {
        let c = SignFunction::new(3, 4, &[M, P, M, P]).unwrap();
        let rev = c.reversed();
        // {1,2,3} <-> {2,3,4}, {1,2,4} <-> {1,3,4}
        assert_eq!(rev.colors(), vec![P, M, P, M]);
        assert_eq!(rev.reversed(), c);
    }

    #[test]
    fn packing_crosses_word_boundaries() {
        let colors: Vec<Sign> = (0..105).map(|i| [M, P, Sign::Zero][i % 3]).collect();
        let c = SignFunction::new_ternary(2, 15, &colors).unwrap();
        for i in 0..105 {
            assert_eq!(c.get(i), colors[i]);
        }
    }
}
