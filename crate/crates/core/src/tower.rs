//! The iterated ground sets `F_1(n), F_2(n), ..., F_r(n)` and the coloring
//! `c_r` built from them by repeated first-difference selection.
//!
//! Every element is stored as its position in the linear order `<_l` of its
//! level `l`:
//!
//! * level 1 holds `-` (index 0) and `+` (index 1);
//! * level 2 holds `2n` pairs; index `j` is the pair `(2n - j, j + 1)` and has
//!   type `-` iff `j < n`;
//! * level `l >= 3` holds all choices of one representative from each of the
//!   `N_{l-1} / 2` equivalence classes of level `l - 1`. Class `k` (in the
//!   class order `≺_{l-1}`) is read from the most significant of the
//!   `N_{l-1} / 2` bits of the index; bit value 0 picks the type `-`
//!   representative, 1 the type `+` one.
//!
//! With this encoding the order `<_l` is numeric order on indices, the
//! involution `σ_l` is `i ↦ N_l - 1 - i`, the equivalence class of `i` is
//! `min(i, N_l - 1 - i)`, and the type `-` member of class `k` sits at index
//! `k`. `γ(A, B)` is found from the leading bit of `A xor B`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::colex::ColexSubsets;
use crate::coloring::{edge_count, Sign, SignFunction, DEFAULT_MAX_VERTICES};
use crate::error::{Error, Result};

/// Default cap on `N_r`.
pub const DEFAULT_MAX_ELEMENTS: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TowerLimits {
    pub max_elements: u64,
    /// Vertex cap handed to the resulting [`SignFunction`].
    pub max_vertices: usize,
}

impl Default for TowerLimits {
    fn default() -> Self {
        Self {
            max_elements: DEFAULT_MAX_ELEMENTS,
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

/// An element of `F_level(n)`, identified by its index in `<_level`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TowerElement {
    pub level: usize,
    pub index: u64,
}

impl TowerElement {
    pub fn new(level: usize, index: u64) -> Self {
        Self { level, index }
    }
}

/// `F_1(n), ..., F_r(n)` with their orders, types and equivalences.
#[derive(Debug, Clone)]
pub struct TowerGroundSet {
    r: usize,
    n: usize,
    /// `sizes[l] = N_l` for `1 <= l <= r`; `sizes[0]` is unused.
    sizes: Vec<u64>,
}

impl TowerGroundSet {
    pub fn build(r: usize, n: usize) -> Result<Self> {
        Self::build_with(r, n, &TowerLimits::default())
    }

    pub fn build_with(r: usize, n: usize, limits: &TowerLimits) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidArgument(format!("level r = {r} must be at least 2")));
        }
        if n < 1 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        let mut sizes = vec![0u64, 2, 2 * n as u64];
        for level in 3..=r {
            let bits = sizes[level - 1] / 2;
            if bits >= 64 || (1u64 << bits) > limits.max_elements {
                return Err(Error::too_large(
                    format!("ground set F_{level}({n})"),
                    format!("2^{bits}"),
                    limits.max_elements,
                ));
            }
            sizes.push(1u64 << bits);
        }
        if sizes[r] > limits.max_elements {
            return Err(Error::too_large(format!("ground set F_{r}({n})"), sizes[r], limits.max_elements));
        }
        Ok(Self { r, n, sizes })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `N_level = |F_level(n)|`.
    pub fn size(&self, level: usize) -> u64 {
        self.sizes[level]
    }

    /// Number of equivalence classes at `level` (half its size).
    pub fn class_count(&self, level: usize) -> u64 {
        self.sizes[level] / 2
    }

    /// Elements of the top level in `<_r` order.
    pub fn elements(&self) -> Vec<TowerElement> {
        self.elements_at(self.r)
    }

    pub fn elements_at(&self, level: usize) -> Vec<TowerElement> {
        (0..self.sizes[level]).map(|i| TowerElement::new(level, i)).collect()
    }

    /// Type `-` (in `F^-`) or `+` (in `F^+`).
    pub fn type_of(&self, e: TowerElement) -> Sign {
        Sign::from_bool(e.index >= self.sizes[e.level] / 2)
    }

    /// `σ`, extended to an involution on the whole level.
    pub fn sigma(&self, e: TowerElement) -> TowerElement {
        TowerElement::new(e.level, self.sizes[e.level] - 1 - e.index)
    }

    /// Position of the equivalence class of `e` in `≺_level`.
    pub fn class_of(&self, e: TowerElement) -> u64 {
        e.index.min(self.sizes[e.level] - 1 - e.index)
    }

    pub fn equivalent(&self, a: TowerElement, b: TowerElement) -> bool {
        a.level == b.level && self.class_of(a) == self.class_of(b)
    }

    /// The level-`l - 1` element of class `class` with the given type.
    pub fn representative(&self, level: usize, class: u64, plus: bool) -> TowerElement {
        let index = if plus { self.sizes[level] - 1 - class } else { class };
        TowerElement::new(level, index)
    }

    /// `(first, second)` coordinates of a level-2 element.
    pub fn pair(&self, e: TowerElement) -> Option<(u64, u64)> {
        (e.level == 2).then(|| (2 * self.n as u64 - e.index, e.index + 1))
    }

    /// Chosen representatives (as level `l - 1` elements) of a level `l >= 3`
    /// element, class 0 first.
    pub fn members(&self, e: TowerElement) -> Option<Vec<TowerElement>> {
        if e.level < 3 {
            return None;
        }
        let below = e.level - 1;
        let width = self.class_count(below);
        Some(
            (0..width)
                .map(|k| {
                    let bit = (e.index >> (width - 1 - k)) & 1 == 1;
                    self.representative(below, k, bit)
                })
                .collect(),
        )
    }

    fn check(&self, e: TowerElement) -> Result<()> {
        if e.level == 0 || e.level > self.r || e.index >= self.sizes[e.level] {
            return Err(Error::InvalidArgument(format!("{e:?} is not in this ground set")));
        }
        Ok(())
    }

    /// `γ(A, B)`: for level `>= 3`, `B`'s representative in the first class on
    /// which `A` and `B` differ; for level 2, `+` iff `A <_2 B`.
    pub fn gamma(&self, a: TowerElement, b: TowerElement) -> Result<TowerElement> {
        self.check(a)?;
        self.check(b)?;
        if a.level != b.level {
            return Err(Error::InvalidArgument(format!("{a:?} and {b:?} lie on different levels")));
        }
        if a == b {
            return Err(Error::InvalidArgument(format!("γ is undefined for equal arguments {a:?}")));
        }
        if a.level < 2 {
            return Err(Error::InvalidArgument("γ needs level at least 2".into()));
        }
        Ok(self.gamma_unchecked(a, b))
    }

    #[inline]
    fn gamma_unchecked(&self, a: TowerElement, b: TowerElement) -> TowerElement {
        if a.level == 2 {
            return TowerElement::new(1, u64::from(a.index < b.index));
        }
        let below = a.level - 1;
        let width = self.class_count(below);
        let top = 63 - (a.index ^ b.index).leading_zeros() as u64;
        let class = width - 1 - top;
        let plus = (b.index >> top) & 1 == 1;
        self.representative(below, class, plus)
    }

    /// `Γ(B_1, ..., B_k) = (γ(B_1, B_2), ..., γ(B_{k-1}, B_k))`.
    pub fn gamma_step(&self, seq: &[TowerElement]) -> Result<Vec<TowerElement>> {
        seq.windows(2).map(|w| self.gamma(w[0], w[1])).collect()
    }

    /// `Γ^i`; `Γ^0` is the identity.
    pub fn gamma_iter(&self, seq: &[TowerElement], i: usize) -> Result<Vec<TowerElement>> {
        let level = seq.first().map_or(0, |e| e.level);
        if seq.is_empty() || i > (seq.len() - 1).min(level - 1) {
            return Err(Error::InvalidArgument(format!(
                "Γ^{i} needs 0 <= i <= min(k - 1, level - 1) for k = {} at level {level}",
                seq.len()
            )));
        }
        let mut cur = seq.to_vec();
        for _ in 0..i {
            cur = self.gamma_step(&cur)?;
        }
        Ok(cur)
    }

    /// `c_r` of the edge `A_1 <_r ... <_r A_r` given by indices, as a `±` sign.
    fn edge_color(&self, indices: &[u64], scratch: &mut Vec<TowerElement>) -> Sign {
        scratch.clear();
        scratch.extend(indices.iter().map(|&i| TowerElement::new(self.r, i)));
        while scratch.len() > 1 {
            for j in 0..scratch.len() - 1 {
                scratch[j] = self.gamma_unchecked(scratch[j], scratch[j + 1]);
            }
            scratch.pop();
        }
        Sign::from_bool(scratch[0].index == 1)
    }

    /// Compare two elements of one level in `<_level`.
    pub fn cmp(&self, a: TowerElement, b: TowerElement) -> Ordering {
        debug_assert_eq!(a.level, b.level);
        a.index.cmp(&b.index)
    }

    /// Compare the classes of two elements in `≺_level`.
    pub fn cmp_class(&self, a: TowerElement, b: TowerElement) -> Ordering {
        self.class_of(a).cmp(&self.class_of(b))
    }

    /// Checks the first-difference deletion rule on `(A, B, C)`.
    ///
    /// Level `>= 3`: `γ(A,C)` is the `≺`-smaller of `γ(A,B)`, `γ(B,C)` when
    /// these are not equivalent, and lies strictly after both in `≺` otherwise.
    /// Level 2: `γ(A,C) = γ(A,B)` whenever `γ(A,B) = γ(B,C)`.
    pub fn check_deletion_lemma(&self, a: TowerElement, b: TowerElement, c: TowerElement) -> Result<bool> {
        if a == b || b == c || a == c {
            return Err(Error::InvalidArgument("deletion check needs three distinct elements".into()));
        }
        let ab = self.gamma(a, b)?;
        let bc = self.gamma(b, c)?;
        let ac = self.gamma(a, c)?;
        if a.level == 2 {
            return Ok(if ab != bc { ac == ab || ac == bc } else { ac == ab });
        }
        Ok(match self.cmp_class(ab, bc) {
            Ordering::Less => ac == ab,
            Ordering::Greater => ac == bc,
            Ordering::Equal => {
                ab != bc
                    && self.cmp_class(ab, ac) == Ordering::Less
                    && self.cmp_class(bc, ac) == Ordering::Less
            }
        })
    }

    /// Checks both monotonicity statements of `γ` in each argument:
    /// `A <= A'` implies `γ(A,B) >= γ(A',B)`, and `B <= B'` implies
    /// `γ(A,B) <= γ(A,B')`. Parts whose distinctness assumption fails are vacuous.
    pub fn check_replacement_lemma(
        &self,
        a: TowerElement,
        b: TowerElement,
        a2: TowerElement,
        b2: TowerElement,
    ) -> Result<bool> {
        if a == b {
            return Err(Error::InvalidArgument("replacement check needs A != B".into()));
        }
        for e in [a, b, a2, b2] {
            self.check(e)?;
            if e.level != a.level {
                return Err(Error::InvalidArgument("replacement check needs a common level".into()));
            }
        }
        let ab = self.gamma(a, b)?;
        let part_one = a2 == b || self.cmp(a, a2) == Ordering::Greater || self.cmp(ab, self.gamma(a2, b)?) != Ordering::Less;
        let part_two = a == b2 || self.cmp(b, b2) == Ordering::Greater || self.cmp(ab, self.gamma(a, b2)?) != Ordering::Greater;
        Ok(part_one && part_two)
    }

    /// `H = (Γ^{s-2}(S^{(s)}), ..., Γ^{s-2}(S^{(1)}))` for an increasing `s`-tuple.
    pub fn profile_sequence(&self, s: &[TowerElement]) -> Result<Vec<TowerElement>> {
        let len = s.len();
        let level = s.first().map_or(0, |e| e.level);
        if level < 3 || len < 3 || len > level + 1 {
            return Err(Error::InvalidArgument(format!(
                "profile check needs level >= 3 and 3 <= s <= level + 1, got s = {len} at level {level}"
            )));
        }
        if s.windows(2).any(|w| self.cmp(w[0], w[1]) != Ordering::Less) {
            return Err(Error::InvalidArgument("profile check needs an increasing tuple".into()));
        }
        let mut h = Vec::with_capacity(len);
        for del in (0..len).rev() {
            let sub: Vec<TowerElement> = s.iter().enumerate().filter(|&(j, _)| j != del).map(|(_, &e)| e).collect();
            let reduced = self.gamma_iter(&sub, len - 2)?;
            h.push(reduced[0]);
        }
        Ok(h)
    }

    /// Whether the sequence `H` of the increasing tuple `s` has an odd profile
    /// `(≤,=,≤,=,...)` or an even profile `(=,≥,=,≥,...)`, where any `≤`/`≥`
    /// may be realized by equality.
    pub fn check_profile_lemma(&self, s: &[TowerElement]) -> Result<bool> {
        let h = self.profile_sequence(s)?;
        let steps: Vec<Ordering> = h.windows(2).map(|w| self.cmp(w[0], w[1])).collect();
        Ok(is_odd_profile(&steps) || is_even_profile(&steps))
    }
}

/// Steps at odd positions (1-based) are `≤`, steps at even positions are `=`.
pub fn is_odd_profile(steps: &[Ordering]) -> bool {
    steps.iter().enumerate().all(|(j, &o)| {
        if j % 2 == 0 {
            o != Ordering::Greater
        } else {
            o == Ordering::Equal
        }
    })
}

/// Steps at odd positions (1-based) are `=`, steps at even positions are `≥`.
pub fn is_even_profile(steps: &[Ordering]) -> bool {
    steps.iter().enumerate().all(|(j, &o)| {
        if j % 2 == 0 {
            o == Ordering::Equal
        } else {
            o != Ordering::Less
        }
    })
}

/// The coloring `c_r` on `N_r` vertices; vertex `i` is the `i`-th element of `<_r`.
pub fn tower_coloring(r: usize, n: usize) -> Result<SignFunction> {
    tower_coloring_with(r, n, &TowerLimits::default())
}

pub fn tower_coloring_with(r: usize, n: usize, limits: &TowerLimits) -> Result<SignFunction> {
    if r < 3 {
        return Err(Error::InvalidArgument(format!("tower coloring needs r >= 3, got {r}")));
    }
    let gs = TowerGroundSet::build_with(r, n, limits)?;
    gs.coloring(limits)
}

impl TowerGroundSet {
    /// `c_r` on this ground set.
    pub fn coloring(&self, limits: &TowerLimits) -> Result<SignFunction> {
        let vertices = self.sizes[self.r] as usize;
        if vertices > limits.max_vertices {
            return Err(Error::too_large("tower coloring vertex count", vertices, limits.max_vertices));
        }
        let len = edge_count(self.r, vertices)?;
        let mut colors = Vec::with_capacity(len);
        let mut scratch = Vec::with_capacity(self.r);
        let mut indices = vec![0u64; self.r];
        for e in ColexSubsets::new(vertices, self.r) {
            for (slot, &v) in indices.iter_mut().zip(&e) {
                *slot = v as u64 - 1;
            }
            colors.push(self.edge_color(&indices, &mut scratch));
        }
        SignFunction::with_vertex_cap(self.r, vertices, &colors, false, limits.max_vertices)
    }
}
