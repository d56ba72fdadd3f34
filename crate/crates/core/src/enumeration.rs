//! Exhaustive generation of monotone colorings, exact counts, projections,
//! and monotone Ramsey numbers of paths.
//!
//! The search assigns edges in colex order. An `(r+1)`-set is checked as soon
//! as its colex-largest `r`-subset (the one missing its smallest vertex) gets
//! a color, so every node of the search tree is a valid partial coloring.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::colex::{self, ColexSubsets};
use crate::coloring::{edge_count, Sign, SignFunction};
use crate::error::{Error, Result};

/// Default node budget for one search.
pub const DEFAULT_MAX_NODES: u64 = 2_000_000_000;

/// Prefix depth used to split the search tree across workers.
const SPLIT_DEPTH: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchLimits {
    pub max_nodes: u64,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Fix the first edge to `-` and double (the color swap has no fixed points).
    pub symmetry: bool,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_nodes: DEFAULT_MAX_NODES,
            workers: None,
            symmetry: false,
        }
    }
}

/// Precomputed constraint layout for `(r, n)`.
#[derive(Debug, Clone)]
struct Plan {
    r: usize,
    n: usize,
    edges: usize,
    /// Link sequences (as edge ranks) that become checkable at each edge.
    check_start: Vec<usize>,
    check_ranks: Vec<u32>,
    /// `(r-1)`-tuple ranks of the first and last `r-1` vertices of each edge.
    head: Vec<u32>,
    tail: Vec<u32>,
    tuples: usize,
}

impl Plan {
    fn new(r: usize, n: usize) -> Result<Self> {
        if r < 2 || n < r {
            return Err(Error::InvalidArgument(format!("need r >= 2 and n >= r, got r = {r}, n = {n}")));
        }
        let edges = edge_count(r, n)?;
        if edges > u32::MAX as usize / 2 {
            return Err(Error::too_large("search edge count", edges, u32::MAX / 2));
        }
        let tuples = colex::binomial(n as u64, (r - 1) as u64).unwrap() as usize;
        let mut check_start = Vec::with_capacity(edges + 1);
        let mut check_ranks = Vec::new();
        let mut head = Vec::with_capacity(edges);
        let mut tail = Vec::with_capacity(edges);
        let mut set = vec![0usize; r + 1];
        let mut ranks = Vec::with_capacity(r + 1);
        for e in ColexSubsets::new(n, r) {
            check_start.push(check_ranks.len());
            for u in 1..e[0] {
                set[0] = u;
                set[1..].copy_from_slice(&e);
                colex::deletion_ranks(&set, &mut ranks);
                check_ranks.extend(ranks.iter().map(|&k| k as u32));
            }
            head.push(colex::rank_unchecked(&e[..r - 1]) as u32);
            tail.push(colex::rank_unchecked(&e[1..]) as u32);
        }
        check_start.push(check_ranks.len());
        Ok(Self {
            r,
            n,
            edges,
            check_start,
            check_ranks,
            head,
            tail,
            tuples,
        })
    }

    /// All link sequences completed by edge `k` change sign at most once.
    #[inline]
    fn consistent(&self, colors: &[Sign], k: usize) -> bool {
        let width = self.r + 1;
        self.check_ranks[self.check_start[k]..self.check_start[k + 1]]
            .chunks_exact(width)
            .all(|link| {
                let mut changes = 0;
                for w in link.windows(2) {
                    if colors[w[0] as usize] != colors[w[1] as usize] {
                        changes += 1;
                    }
                }
                changes <= 1
            })
    }
}

struct Budget<'a> {
    used: &'a AtomicU64,
    max: u64,
    local: u64,
}

impl Budget<'_> {
    const FLUSH: u64 = 1 << 14;

    #[inline]
    fn tick(&mut self) -> Result<()> {
        self.local += 1;
        if self.local == Self::FLUSH {
            self.flush()?;
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<()> {
        let total = self.used.fetch_add(self.local, Ordering::Relaxed) + self.local;
        self.local = 0;
        if total > self.max {
            return Err(Error::too_large("search node count", total, self.max));
        }
        Ok(())
    }
}

const BOTH: [Sign; 2] = [Sign::Minus, Sign::Plus];

fn count_from(plan: &Plan, colors: &mut [Sign], k: usize, budget: &mut Budget<'_>) -> Result<u64> {
    if k == plan.edges {
        return Ok(1);
    }
    let mut total = 0;
    for s in BOTH {
        colors[k] = s;
        budget.tick()?;
        if plan.consistent(colors, k) {
            total += count_from(plan, colors, k + 1, budget)?;
        }
    }
    Ok(total)
}

fn collect_prefixes(plan: &Plan, colors: &mut Vec<Sign>, depth: usize, first: &[Sign], out: &mut Vec<Vec<Sign>>) {
    let k = colors.len();
    if k == depth {
        out.push(colors.clone());
        return;
    }
    let choices: &[Sign] = if k == 0 { first } else { &BOTH };
    for &s in choices {
        colors.push(s);
        if plan.consistent(colors, k) {
            collect_prefixes(plan, colors, depth, first, out);
        }
        colors.pop();
    }
}

/// Number of `r`-monotone colorings of `K^r_n` together with search statistics.
pub fn count_monotone_with(r: usize, n: usize, limits: &SearchLimits) -> Result<(u64, u64)> {
    let plan = Plan::new(r, n)?;
    let first: &[Sign] = if limits.symmetry { &[Sign::Minus] } else { &BOTH };
    let mut prefixes = Vec::new();
    collect_prefixes(&plan, &mut Vec::with_capacity(plan.edges), SPLIT_DEPTH.min(plan.edges), first, &mut prefixes);
    let used = AtomicU64::new(prefixes.len() as u64);
    let run = || {
        prefixes
            .par_iter()
            .map(|prefix| {
                let mut colors = vec![Sign::Minus; plan.edges];
                colors[..prefix.len()].copy_from_slice(prefix);
                let mut budget = Budget {
                    used: &used,
                    max: limits.max_nodes,
                    local: 0,
                };
                let c = count_from(&plan, &mut colors, prefix.len(), &mut budget)?;
                budget.flush()?;
                Ok(c)
            })
            .collect::<Result<Vec<u64>>>()
            .map(|v| v.iter().sum::<u64>())
    };
    let count = match limits.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run)?,
        None => run()?,
    };
    let count = if limits.symmetry { count * 2 } else { count };
    Ok((count, used.load(Ordering::Relaxed)))
}

/// Visit every `r`-monotone coloring of `K^r_n` exactly once, in search order.
/// The visitor may stop early by returning `ControlFlow::Break`.
pub fn enumerate_monotone(
    r: usize,
    n: usize,
    limits: &SearchLimits,
    mut visitor: impl FnMut(&SignFunction) -> ControlFlow<()>,
) -> Result<u64> {
    let plan = Plan::new(r, n)?;
    let used = AtomicU64::new(0);
    let mut budget = Budget {
        used: &used,
        max: limits.max_nodes,
        local: 0,
    };
    let mut colors = vec![Sign::Minus; plan.edges];
    let mut emitted = 0;
    let _ = visit_from(&plan, &mut colors, 0, &mut budget, &mut |colors: &[Sign]| {
        emitted += 1;
        let c = SignFunction::with_vertex_cap(plan.r, plan.n, colors, false, usize::MAX).expect("plan shape");
        visitor(&c)
    })?;
    budget.flush()?;
    Ok(emitted)
}

/// All `r`-monotone colorings of `K^r_n`.
pub fn all_monotone(r: usize, n: usize) -> Result<Vec<SignFunction>> {
    let mut out = Vec::new();
    enumerate_monotone(r, n, &SearchLimits::default(), |c| {
        out.push(c.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

fn visit_from(
    plan: &Plan,
    colors: &mut [Sign],
    k: usize,
    budget: &mut Budget<'_>,
    emit: &mut dyn FnMut(&[Sign]) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    if k == plan.edges {
        return Ok(emit(colors));
    }
    for s in BOTH {
        colors[k] = s;
        budget.tick()?;
        if plan.consistent(colors, k) && visit_from(plan, colors, k + 1, budget, emit)?.is_break() {
            return Ok(ControlFlow::Break(()));
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Exact count with the bound check of the counting theorem.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountReport {
    pub r: usize,
    pub n: usize,
    pub count: u64,
    pub wall_ms: u128,
    pub nodes: u64,
    pub bounds: Option<BoundCheck>,
}

/// `log2` of both sides of `2^{n^{r-1}/r^{4r}} <= S_r(n) <= 2^{2^{r-2} n^{r-1}/(r-1)!}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    pub lower_log2: f64,
    pub upper_log2: f64,
    pub count_log2: f64,
    pub upper_holds: bool,
    /// Whether the lower exponent reaches 1; below that the lower bound says
    /// nothing beyond `S_r(n) >= 2` and is reported as not binding.
    pub lower_binding: bool,
    pub lower_holds: bool,
}

impl BoundCheck {
    /// Bounds for `r >= 3`; `None` otherwise.
    pub fn evaluate(r: usize, n: usize, count: u64) -> Option<Self> {
        if r < 3 {
            return None;
        }
        let nf = n as f64;
        let rf = r as f64;
        let factorial: f64 = (1..r).map(|i| i as f64).product();
        let upper_log2 = 2f64.powi(r as i32 - 2) * nf.powi(r as i32 - 1) / factorial;
        let lower_log2 = nf.powi(r as i32 - 1) / rf.powf(4.0 * rf);
        let count_log2 = (count as f64).log2();
        Some(Self {
            lower_log2,
            upper_log2,
            count_log2,
            upper_holds: count_log2 <= upper_log2,
            lower_binding: lower_log2 >= 1.0,
            lower_holds: count_log2 >= lower_log2,
        })
    }
}

pub fn count_monotone(r: usize, n: usize) -> Result<CountReport> {
    count_monotone_report(r, n, &SearchLimits::default())
}

pub fn count_monotone_report(r: usize, n: usize, limits: &SearchLimits) -> Result<CountReport> {
    let start = Instant::now();
    let (count, nodes) = count_monotone_with(r, n, limits)?;
    Ok(CountReport {
        r,
        n,
        count,
        wall_ms: start.elapsed().as_millis(),
        nodes,
        bounds: BoundCheck::evaluate(r, n, count),
    })
}

/// The `i`-th projection: the `(r-1)`-uniform coloring of `[i-1]` with
/// `p_i(c)(e) = c(e ∪ {i})`.
pub fn project(c: &SignFunction, i: usize) -> Result<SignFunction> {
    let r = c.r();
    if r < 3 {
        return Err(Error::InvalidArgument(format!("projection needs r >= 3, got {r}")));
    }
    if i < r || i > c.n() {
        return Err(Error::InvalidArgument(format!("projection index {i} outside [{r}, {}]", c.n())));
    }
    if c.has_zero() {
        return Err(Error::TernaryNotAllowed);
    }
    let mut edge = vec![0usize; r];
    edge[r - 1] = i;
    let colors: Vec<Sign> = ColexSubsets::new(i - 1, r - 1)
        .map(|sub| {
            edge[..r - 1].copy_from_slice(&sub);
            c.get(colex::rank_unchecked(&edge))
        })
        .collect();
    SignFunction::with_vertex_cap(r - 1, i - 1, &colors, false, usize::MAX)
}

/// `(p_r(c), ..., p_n(c))`.
pub fn projection_signature(c: &SignFunction) -> Result<Vec<SignFunction>> {
    (c.r()..=c.n()).map(|i| project(c, i)).collect()
}

/// Outcome of a monotone Ramsey search for paths.
#[derive(Debug, Clone, PartialEq)]
pub enum RamseyOutcome {
    /// Every monotone coloring of `K^r_value` contains the path; `witness`
    /// avoids it on `value - 1` vertices (absent when `value - 1 < r`).
    Exact { value: usize, witness: Option<SignFunction>, nodes: u64 },
    /// Avoiding colorings exist up to `n_max`; the number exceeds `n_max`.
    LowerBoundOnly { exceeds: usize, witness: Option<SignFunction>, nodes: u64 },
}

impl RamseyOutcome {
    pub fn value(&self) -> Option<usize> {
        match self {
            RamseyOutcome::Exact { value, .. } => Some(*value),
            RamseyOutcome::LowerBoundOnly { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&SignFunction> {
        match self {
            RamseyOutcome::Exact { witness, .. } | RamseyOutcome::LowerBoundOnly { witness, .. } => witness.as_ref(),
        }
    }
}

/// Smallest `N <= n_max` such that every `r`-monotone coloring of `K^r_N` has
/// a monochromatic monotone path on `m` vertices.
pub fn ramsey_number(r: usize, m: usize, n_max: usize) -> Result<RamseyOutcome> {
    ramsey_number_with(r, m, n_max, &SearchLimits::default())
}

pub fn ramsey_number_with(r: usize, m: usize, n_max: usize, limits: &SearchLimits) -> Result<RamseyOutcome> {
    if r < 2 || m < r {
        return Err(Error::InvalidArgument(format!("need r >= 2 and m >= r, got r = {r}, m = {m}")));
    }
    let mut witness = if m - 1 >= r {
        Some(SignFunction::with_vertex_cap(r, m - 1, &vec![Sign::Minus; edge_count(r, m - 1)?], false, usize::MAX)?)
    } else {
        None
    };
    let mut nodes = 0;
    for big_n in m..=n_max {
        let (found, used) = find_avoiding(r, big_n, m, limits)?;
        nodes += used;
        match found {
            Some(c) => witness = Some(c),
            None => {
                return Ok(RamseyOutcome::Exact {
                    value: big_n,
                    witness,
                    nodes,
                })
            }
        }
    }
    Ok(RamseyOutcome::LowerBoundOnly {
        exceeds: n_max,
        witness,
        nodes,
    })
}

/// A monotone coloring of `K^r_n` with no monochromatic path on `m` vertices,
/// found by the monotone search with incremental path lengths.
pub fn find_avoiding(r: usize, n: usize, m: usize, limits: &SearchLimits) -> Result<(Option<SignFunction>, u64)> {
    let plan = Plan::new(r, n)?;
    let used = AtomicU64::new(0);
    let mut budget = Budget {
        used: &used,
        max: limits.max_nodes,
        local: 0,
    };
    let mut state = AvoidState {
        plan: &plan,
        target: m,
        colors: vec![Sign::Minus; plan.edges],
        longest: [vec![r - 1; plan.tuples], vec![r - 1; plan.tuples]],
    };
    let found = state.search(0, &mut budget)?;
    budget.flush()?;
    let witness = found
        .then(|| SignFunction::with_vertex_cap(r, n, &state.colors, false, usize::MAX))
        .transpose()?;
    Ok((witness, used.load(Ordering::Relaxed)))
}

struct AvoidState<'a> {
    plan: &'a Plan,
    target: usize,
    colors: Vec<Sign>,
    /// Longest `-` / `+` path ending in each `(r-1)`-tuple, over assigned edges.
    longest: [Vec<usize>; 2],
}

impl AvoidState<'_> {
    fn search(&mut self, k: usize, budget: &mut Budget<'_>) -> Result<bool> {
        if k == self.plan.edges {
            return Ok(true);
        }
        let head = self.plan.head[k] as usize;
        let tail = self.plan.tail[k] as usize;
        for (slot, s) in BOTH.into_iter().enumerate() {
            self.colors[k] = s;
            budget.tick()?;
            if !self.plan.consistent(&self.colors, k) {
                continue;
            }
            let extended = self.longest[slot][head] + 1;
            if extended >= self.target {
                continue;
            }
            let saved = self.longest[slot][tail];
            self.longest[slot][tail] = saved.max(extended);
            if self.search(k + 1, budget)? {
                return Ok(true);
            }
            self.longest[slot][tail] = saved;
        }
        Ok(false)
    }
}

/// Value of `tow_h(x)`: `tow_1(x) = x`, `tow_h(x) = 2^{tow_{h-1}(x)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TowValue {
    Exact(u128),
    /// Larger than `u128::MAX`.
    Overflow,
}

pub fn tow(h: usize, x: u128) -> Result<TowValue> {
    if h < 1 {
        return Err(Error::InvalidArgument("tower height must be at least 1".into()));
    }
    let mut value = x;
    for _ in 1..h {
        if value >= 128 {
            return Ok(TowValue::Overflow);
        }
        value = 1u128 << value;
    }
    Ok(TowValue::Exact(value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::longest_mono_paths;

    fn brute_force(r: usize, n: usize) -> Vec<SignFunction> {
        let len = edge_count(r, n).unwrap();
        (0..1u64 << len)
            .map(|mask| {
                let colors: Vec<Sign> = (0..len).map(|i| Sign::from_bool(mask >> i & 1 == 1)).collect();
                SignFunction::new(r, n, &colors).unwrap()
            })
            .filter(|c| c.is_monotone().unwrap().holds())
            .collect()
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_monotone(3, 3).unwrap().count, 2);
        assert_eq!(count_monotone(3, 4).unwrap().count, 8);
        assert_eq!(count_monotone(4, 5).unwrap().count, 10);
        assert_eq!(count_monotone(5, 6).unwrap().count, 12);
        assert_eq!(count_monotone(2, 4).unwrap().count, 24);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (r, n) in [(2, 4), (2, 5), (3, 4), (3, 5), (4, 5), (5, 6)] {
            let mut expected: Vec<String> = brute_force(r, n).iter().map(|c| c.color_string()).collect();
            let mut got: Vec<String> = all_monotone(r, n).unwrap().iter().map(|c| c.color_string()).collect();
            expected.sort();
            got.sort();
            assert_eq!(got, expected, "r={r} n={n}");
        }
    }

    #[test]
    fn symmetry_and_workers_agree() {
        let plain = count_monotone(3, 6).unwrap().count;
        for workers in [1, 3] {
            for symmetry in [false, true] {
                let limits = SearchLimits {
                    workers: Some(workers),
                    symmetry,
                    ..SearchLimits::default()
                };
                assert_eq!(count_monotone_report(3, 6, &limits).unwrap().count, plain);
            }
        }
    }

    #[test]
    fn node_budget_trips() {
        let limits = SearchLimits {
            max_nodes: 1000,
            ..SearchLimits::default()
        };
        assert!(matches!(count_monotone_report(3, 7, &limits), Err(Error::TooLarge { .. })));
        assert!(matches!(
            enumerate_monotone(3, 7, &limits, |_| ControlFlow::Continue(())),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn visitor_can_stop() {
        let mut seen = 0;
        enumerate_monotone(3, 5, &SearchLimits::default(), |_| {
            seen += 1;
            if seen == 3 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert_eq!(seen, 3);
    }

    #[test]
    fn projection_examples() {
        let c = SignFunction::constant(3, 4, Sign::Minus).unwrap();
        assert_eq!(project(&c, 4).unwrap(), SignFunction::constant(2, 3, Sign::Minus).unwrap());

        let c = SignFunction::new(3, 4, &[Sign::Minus, Sign::Plus, Sign::Minus, Sign::Plus]).unwrap();
        let p = project(&c, 4).unwrap();
        assert_eq!(p.color_string(), "+-+");
        assert!(!p.is_monotone().unwrap().holds());

        assert!(project(&c, 2).is_err());
        assert!(project(&c, 5).is_err());
        assert!(project(&SignFunction::constant(2, 4, Sign::Plus).unwrap(), 3).is_err());

        let sig = projection_signature(&SignFunction::constant(3, 3, Sign::Plus).unwrap()).unwrap();
        assert_eq!(sig.len(), 1);
    }

    #[test]
    fn small_ramsey_values() {
        assert_eq!(ramsey_number(2, 3, 8).unwrap().value(), Some(5));
        let out = ramsey_number(2, 4, 12).unwrap();
        assert_eq!(out.value(), Some(10));
        let w = out.witness().unwrap();
        assert_eq!(w.n(), 9);
        assert!(w.is_monotone().unwrap().holds());
        assert!(longest_mono_paths(w).unwrap().best() < 4);
    }

    #[test]
    fn ramsey_lower_bound_only() {
        match ramsey_number(2, 4, 8).unwrap() {
            RamseyOutcome::LowerBoundOnly { exceeds, witness, .. } => {
                assert_eq!(exceeds, 8);
                assert_eq!(witness.unwrap().n(), 8);
            }
            other => panic!("{other:?}"),
        }
        assert!(ramsey_number(3, 2, 5).is_err());
    }

    #[test]
    fn tow_values() {
        assert_eq!(tow(1, 7).unwrap(), TowValue::Exact(7));
        assert_eq!(tow(2, 10).unwrap(), TowValue::Exact(1024));
        assert_eq!(tow(3, 4).unwrap(), TowValue::Exact(65536));
        assert_eq!(tow(4, 4).unwrap(), TowValue::Overflow);
        assert!(tow(0, 4).is_err());
    }

    #[test]
    fn bound_report() {
        let rep = count_monotone(3, 4).unwrap();
        let b = rep.bounds.unwrap();
        assert_eq!(b.upper_log2, 16.0);
        assert!(b.upper_holds);
        assert!(!b.lower_binding);
        assert!(count_monotone(2, 4).unwrap().bounds.is_none());
    }
}
