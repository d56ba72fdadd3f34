//! Integer compositions, their reduction and sign, and the recursive
//! 3-coloring `c_{r,h}` of `K^r_{r^h}` whose completions are all monotone.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::colex::ColexSubsets;
use crate::coloring::{Sign, SignFunction};
use crate::error::{Error, Result};

/// Name of the generator used by [`CompletionMode::Sample`].
pub const SAMPLER: &str = "chacha8";

/// Cap on the zero count for exhaustive completion.
pub const MAX_EXHAUSTIVE_ZEROS: usize = 20;

/// An ordered tuple of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not a composition")));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// All `2^{m-1}` compositions of `m`, indexed by the set of cut points.
    pub fn all(m: usize) -> Vec<Composition> {
        if m == 0 {
            return Vec::new();
        }
        (0u64..1 << (m - 1))
            .map(|cuts| {
                let mut parts = Vec::new();
                let mut run = 1;
                for i in 0..m - 1 {
                    if cuts >> i & 1 == 1 {
                        parts.push(run);
                        run = 1;
                    } else {
                        run += 1;
                    }
                }
                parts.push(run);
                Composition { parts }
            })
            .collect()
    }

    fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// `(1, ..., 1, 2)` with at least one leading 1, or `(p, 1)` with `p > 1`.
    pub fn is_base_form(&self) -> bool {
        let k = self.parts.len();
        match self.parts.as_slice() {
            [p, 1] if *p > 1 => true,
            [init @ .., 2] if k >= 2 => init.iter().all(|&p| p == 1),
            _ => false,
        }
    }

    /// Decrease the last part, dropping it when it reaches zero.
    pub fn reduction_step(&self) -> Option<Composition> {
        let mut parts = self.parts.clone();
        let last = parts.last_mut()?;
        if *last > 1 {
            *last -= 1;
        } else {
            parts.pop();
        }
        (!parts.is_empty()).then_some(Composition { parts })
    }

    /// The unique base form reached by reduction steps.
    pub fn reduction(&self) -> Result<Composition> {
        let mut cur = self.clone();
        loop {
            if cur.is_base_form() {
                return Ok(cur);
            }
            cur = cur
                .reduction_step()
                .ok_or_else(|| Error::NoReduction(self.to_string()))?;
        }
    }

    /// `Some(-)` for negative, `Some(+)` for positive, `None` for `(1,...,1)`
    /// and `(total)`.
    ///
    /// A composition takes the sign of its reduction. A base form of total
    /// `t` is classified by parity: `(1,...,1,2)` is negative iff `t` is odd,
    /// `(t-1, 1)` is positive iff `t` is odd.
    pub fn sign(&self) -> Result<Option<Sign>> {
        let total = self.total();
        if total < 3 {
            return Err(Error::InvalidArgument(format!("sign needs total >= 3, {self} has {total}")));
        }
        if self.is_all_ones() || self.parts.len() == 1 {
            return Ok(None);
        }
        let base = self.reduction()?;
        let odd = base.total() % 2 == 1;
        let ones_then_two = *base.parts.last().unwrap() == 2;
        Ok(Some(if ones_then_two == odd { Sign::Minus } else { Sign::Plus }))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `c_{r,h}` together with its parameters and zero positions.
#[derive(Debug, Clone)]
pub struct TernaryColoring {
    pub r: usize,
    pub h: usize,
    /// `n = r^h` vertices.
    pub n: usize,
    /// Block size `m = r^{h-1}`.
    pub m: usize,
    pub coloring: SignFunction,
    /// Sorted colex ranks colored 0.
    pub zero_positions: Vec<usize>,
}

impl TernaryColoring {
    /// Zeros on edges meeting every block once (`h >= 2`); all zeros for `h = 1`.
    pub fn transversal_zeros(&self) -> usize {
        if self.h == 1 {
            return self.zero_positions.len();
        }
        let mut count = 0;
        for (rank, e) in ColexSubsets::new(self.n, self.r).enumerate() {
            if self.coloring.get(rank) == Sign::Zero && e.iter().enumerate().all(|(i, &v)| (v - 1) / self.m == i) {
                count += 1;
            }
        }
        count
    }

    /// Restriction to block `V_i` (1-based), relabelled onto `[m]`.
    pub fn block(&self, i: usize) -> Result<SignFunction> {
        if self.h < 2 || i < 1 || i > self.r {
            return Err(Error::InvalidArgument(format!("block {i} does not exist for h = {}", self.h)));
        }
        let vertices: Vec<usize> = ((i - 1) * self.m + 1..=i * self.m).collect();
        self.coloring.restrict(&vertices)
    }

    pub fn completions(&self, mode: CompletionMode) -> Result<Completions<'_>> {
        let zeros = self.zero_positions.len();
        let (limit, rng) = match mode {
            CompletionMode::All => {
                if zeros > MAX_EXHAUSTIVE_ZEROS {
                    return Err(Error::too_large("exhaustive completion zero count", zeros, MAX_EXHAUSTIVE_ZEROS));
                }
                (1u64 << zeros, None)
            }
            CompletionMode::Sample { count, seed } => (count, Some(ChaCha8Rng::seed_from_u64(seed))),
        };
        Ok(Completions {
            source: self,
            next: 0,
            limit,
            rng,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CompletionMode {
    /// Every one of the `2^{#zeros}` replacements, in binary-counter order.
    All,
    /// `count` independent uniform replacements from a seeded generator.
    Sample { count: u64, seed: u64 },
}

/// Stream of binary colorings obtained by replacing each 0 by `-` or `+`.
pub struct Completions<'a> {
    source: &'a TernaryColoring,
    next: u64,
    limit: u64,
    rng: Option<ChaCha8Rng>,
}

impl Iterator for Completions<'_> {
    type Item = SignFunction;

    fn next(&mut self) -> Option<SignFunction> {
        if self.next >= self.limit {
            return None;
        }
        let zeros = &self.source.zero_positions;
        let signs: Vec<Sign> = match self.rng.as_mut() {
            None => (0..zeros.len()).map(|i| Sign::from_bool(self.next >> i & 1 == 1)).collect(),
            Some(rng) => (0..zeros.len()).map(|_| Sign::from_bool(rng.random::<bool>())).collect(),
        };
        self.next += 1;
        Some(
            self.source
                .coloring
                .with_assigned(zeros, &signs)
                .expect("same shape as source"),
        )
    }
}

/// Build `c_{r,h}` on `n = r^h` vertices.
pub fn build_crh(r: usize, h: usize) -> Result<TernaryColoring> {
    if r < 3 {
        return Err(Error::InvalidArgument(format!("c_(r,h) needs r >= 3, got {r}")));
    }
    if h < 1 {
        return Err(Error::InvalidArgument("c_(r,h) needs h >= 1".into()));
    }
    let n = (r as u64)
        .checked_pow(h as u32)
        .filter(|&n| n <= usize::MAX as u64)
        .ok_or_else(|| Error::too_large("vertex count r^h", format!("{r}^{h}"), crate::coloring::DEFAULT_MAX_VERTICES))?
        as usize;
    let m = n / r;
    let signs = CompositionSigns::new(r)?;
    let coloring = SignFunction::from_fn(r, n, true, |e| crh_color(r, h, e, &signs))?;
    let zero_positions = coloring.zero_positions();
    Ok(TernaryColoring {
        r,
        h,
        n,
        m,
        coloring,
        zero_positions,
    })
}

/// Signs of all compositions of `r`, indexed by cut mask.
struct CompositionSigns {
    by_mask: Vec<Option<Sign>>,
}

impl CompositionSigns {
    fn new(r: usize) -> Result<Self> {
        let by_mask = Composition::all(r)
            .iter()
            .map(|c| c.sign())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { by_mask })
    }

    fn lookup(&self, parts_mask: u64) -> Option<Sign> {
        self.by_mask[parts_mask as usize]
    }
}

fn crh_color(r: usize, h: usize, e: &[usize], signs: &CompositionSigns) -> Sign {
    if h == 1 {
        return Sign::Zero;
    }
    let m = r.pow(h as u32 - 1);
    let blocks: Vec<usize> = e.iter().map(|&v| (v - 1) / m).collect();
    let distinct = 1 + blocks.windows(2).filter(|w| w[0] != w[1]).count();
    if distinct == 1 {
        let shift = blocks[0] * m;
        let inner: Vec<usize> = e.iter().map(|&v| v - shift).collect();
        return crh_color(r, h - 1, &inner, signs);
    }
    if distinct == r {
        let (mut even, mut odd) = (0usize, 0usize);
        for (i, &v) in e.iter().enumerate() {
            let local = v - i * m;
            if (i + 1) % 2 == 0 {
                even += local;
            } else {
                odd += local;
            }
        }
        return match even.cmp(&odd) {
            std::cmp::Ordering::Less => Sign::Minus,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Plus,
        };
    }
    // Cut mask: bit i set when positions i and i+1 fall in different blocks,
    // matching the enumeration order of `Composition::all`.
    let mask = blocks
        .windows(2)
        .enumerate()
        .fold(0u64, |acc, (i, w)| if w[0] != w[1] { acc | 1 << i } else { acc });
    signs.lookup(mask).expect("mixed compositions are signed")
}

/// `⌈(⌈m/2⌉^{r-1} - ⌈m/2⌉) / r!⌉` with `m = r^{h-1}`: a lower bound on the
/// number of transversal zeros of `c_{r,h}`.
pub fn zero_lower_bound(r: usize, h: usize) -> Result<u128> {
    if r < 3 || h < 2 {
        return Err(Error::InvalidArgument(format!("zero bound needs r >= 3 and h >= 2, got r = {r}, h = {h}")));
    }
    let overflow = || Error::too_large("zero bound", format!("r={r} h={h}"), u128::MAX);
    let m = (r as u128).checked_pow(h as u32 - 1).ok_or_else(overflow)?;
    let half = m.div_ceil(2);
    let power = half.checked_pow(r as u32 - 1).ok_or_else(overflow)?;
    let factorial: u128 = (1..=r as u128).product();
    Ok((power - half).div_ceil(factorial))
}
