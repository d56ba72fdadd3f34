//! 3-monotone colorings as pseudoline arrangements.
//!
//! Wires `1..n` enter on the left in label order (top to bottom) and every
//! pair swaps exactly once, always as an adjacent transposition. For
//! `i < j < k` the color `c(ijk) = -` means the crossings happen in the order
//! `x_ij, x_ik, x_jk`; `+` means `x_jk, x_ik, x_ij`.

use std::fmt::Write as _;

use petgraph::algo::is_cyclic_directed;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::colex::{self, ColexSubsets};
use crate::coloring::{Sign, SignFunction};
use crate::error::{Error, Result};

/// A sweep of a simple arrangement of `n` wires.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WiringDiagram {
    n: usize,
    sweep: Vec<(usize, usize)>,
    /// `trace[t]` is the top-to-bottom wire order after `t` crossings.
    trace: Vec<Vec<usize>>,
}

impl WiringDiagram {
    /// Validate a crossing sequence; each crossing is an unordered wire pair.
    pub fn from_sweep(n: usize, sweep: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidWiring("needs at least one wire".into()));
        }
        let pairs = n * (n - 1) / 2;
        if sweep.len() != pairs {
            return Err(Error::InvalidWiring(format!("expected {pairs} crossings, got {}", sweep.len())));
        }
        let mut order: Vec<usize> = (1..=n).collect();
        let mut pos: Vec<usize> = (0..=n).map(|w| w.saturating_sub(1)).collect();
        let mut seen = vec![false; pairs];
        let mut trace = Vec::with_capacity(pairs + 1);
        trace.push(order.clone());
        for (t, &(a, b)) in sweep.iter().enumerate() {
            let (lo, hi) = (a.min(b), a.max(b));
            if lo < 1 || hi > n || lo == hi {
                return Err(Error::InvalidWiring(format!("crossing {t}: ({a},{b}) is not a pair of wires in [1,{n}]")));
            }
            let id = colex::rank_unchecked(&[lo, hi]);
            if seen[id] {
                return Err(Error::InvalidWiring(format!("crossing {t}: wires {lo} and {hi} cross twice")));
            }
            seen[id] = true;
            let (p, q) = (pos[lo], pos[hi]);
            if q != p + 1 {
                return Err(Error::InvalidWiring(format!(
                    "crossing {t}: wires {lo} and {hi} are not adjacent with {lo} above"
                )));
            }
            order.swap(p, q);
            pos[lo] = q;
            pos[hi] = p;
            trace.push(order.clone());
        }
        debug_assert!(order.iter().rev().copied().eq(1..=n));
        Ok(Self {
            n,
            sweep: sweep.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect(),
            trace,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sweep(&self) -> &[(usize, usize)] {
        &self.sweep
    }

    pub fn trace(&self) -> &[Vec<usize>] {
        &self.trace
    }

    /// One `i j` line per crossing.
    pub fn sweep_text(&self) -> String {
        self.sweep.iter().map(|(a, b)| format!("{a} {b}\n")).collect()
    }

    /// Parse the sweep text format; `n` is the largest wire label.
    pub fn parse_sweep(text: &str) -> Result<Self> {
        let mut sweep = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse {
                    line: lineno + 1,
                    column: 1,
                    message: format!("expected two wire labels, found {line:?}"),
                })?;
            if nums.len() != 2 {
                return Err(Error::Parse {
                    line: lineno + 1,
                    column: 1,
                    message: format!("expected two wire labels, found {}", nums.len()),
                });
            }
            sweep.push((nums[0], nums[1]));
        }
        let n = sweep.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(1);
        Self::from_sweep(n, &sweep)
    }
}

fn check_signotope(c: &SignFunction) -> Result<()> {
    if c.r() != 3 {
        return Err(Error::InvalidArgument(format!("wiring diagrams need r = 3, got {}", c.r())));
    }
    if let Some(w) = c.is_monotone()?.witness() {
        return Err(Error::NotMonotone { witness: w.to_vec() });
    }
    Ok(())
}

/// Precedence graph on the `C(n,2)` crossings; node `k` is the pair of colex rank `k`.
pub fn crossing_constraints(c: &SignFunction) -> Result<DiGraph<(usize, usize), ()>> {
    check_signotope(c)?;
    let n = c.n();
    let mut g = DiGraph::new();
    for pair in ColexSubsets::new(n, 2) {
        g.add_node((pair[0], pair[1]));
    }
    let node = |a: usize, b: usize| NodeIndex::new(colex::rank_unchecked(&[a, b]));
    for (rank, t) in ColexSubsets::new(n, 3).enumerate() {
        let (i, j, k) = (t[0], t[1], t[2]);
        let chain = match c.get(rank) {
            Sign::Minus => [node(i, j), node(i, k), node(j, k)],
            _ => [node(j, k), node(i, k), node(i, j)],
        };
        g.add_edge(chain[0], chain[1], ());
        g.add_edge(chain[1], chain[2], ());
    }
    Ok(g)
}

pub fn constraints_acyclic(c: &SignFunction) -> Result<bool> {
    Ok(!is_cyclic_directed(&crossing_constraints(c)?))
}

/// Sweep realizing `c`: repeatedly perform the lexicographically smallest
/// adjacent, not yet crossed pair whose predecessors are all done.
pub fn wiring_diagram(c: &SignFunction) -> Result<WiringDiagram> {
    let g = crossing_constraints(c)?;
    let n = c.n();
    let mut pending: Vec<usize> = g
        .node_indices()
        .map(|v| g.neighbors_directed(v, petgraph::Direction::Incoming).count())
        .collect();
    let mut order: Vec<usize> = (1..=n).collect();
    let mut sweep = Vec::with_capacity(g.node_count());
    for _ in 0..g.node_count() {
        let next = order
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] < w[1] && pending[colex::rank_unchecked(w)] == 0)
            .map(|(p, w)| (w[0], w[1], p))
            .min();
        let Some((a, b, p)) = next else {
            return Err(Error::NotRealizable(format!(
                "no admissible crossing after {} of {} steps",
                sweep.len(),
                g.node_count()
            )));
        };
        order.swap(p, p + 1);
        sweep.push((a, b));
        for succ in g.neighbors(NodeIndex::new(colex::rank_unchecked(&[a, b]))) {
            pending[succ.index()] -= 1;
        }
    }
    WiringDiagram::from_sweep(n, &sweep)
}

/// `c(ijk) = -` iff crossing `(i,k)` comes before `(j,k)`.
pub fn signs_from_wiring(w: &WiringDiagram) -> Result<SignFunction> {
    let n = w.n();
    if n < 3 {
        return Err(Error::InvalidWiring(format!("sign functions need at least 3 wires, got {n}")));
    }
    let mut time = vec![0usize; n * (n - 1) / 2];
    for (t, &(a, b)) in w.sweep().iter().enumerate() {
        time[colex::rank_unchecked(&[a, b])] = t;
    }
    SignFunction::from_fn(3, n, false, |e| {
        let ik = time[colex::rank_unchecked(&[e[0], e[2]])];
        let jk = time[colex::rank_unchecked(&[e[1], e[2]])];
        Sign::from_bool(ik > jk)
    })
}

const MARGIN: i64 = 20;
const LABEL: i64 = 20;
const SLOT: i64 = 40;
const GAP: i64 = 30;

/// Render a wiring diagram as a standalone SVG document.
pub fn render_svg(w: &WiringDiagram) -> String {
    let n = w.n() as i64;
    let slots = w.sweep().len() as i64;
    let width = 2 * MARGIN + LABEL + (slots + 1) * SLOT;
    let height = 2 * MARGIN + (n - 1) * GAP;
    let x_at = |b: i64| MARGIN + LABEL + b * SLOT;
    let y_at = |p: usize| MARGIN + p as i64 * GAP;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"  <g fill="none" stroke="black" stroke-width="2" stroke-linejoin="round">"#
    );
    for wire in 1..=w.n() {
        let mut points = Vec::with_capacity(w.trace().len() + 2);
        points.push((MARGIN + LABEL / 2, y_at(wire - 1)));
        for (b, order) in w.trace().iter().enumerate() {
            let p = order.iter().position(|&x| x == wire).expect("every wire is present");
            points.push((x_at(b as i64), y_at(p)));
        }
        let last = points.last().copied().unwrap();
        points.push((last.0 + SLOT, last.1));
        let pts: Vec<String> = points.iter().map(|(x, y)| format!("{x},{y}")).collect();
        let _ = writeln!(out, r#"    <polyline class="wire" data-wire="{wire}" points="{}"/>"#, pts.join(" "));
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, r#"  <g fill="red" stroke="none">"#);
    for (t, &(a, b)) in w.sweep().iter().enumerate() {
        let before = &w.trace()[t];
        let p = before.iter().position(|&x| x == a).expect("wire present");
        let cx = (x_at(t as i64) + x_at(t as i64 + 1)) / 2;
        let cy = (y_at(p) + y_at(p + 1)) / 2;
        let _ = writeln!(
            out,
            r#"    <circle class="crossing" data-slot="{}" data-wires="{a} {b}" cx="{cx}" cy="{cy}" r="3"/>"#,
            t + 1
        );
    }
    let _ = writeln!(out, "  </g>");
    let _ = writeln!(out, r#"  <g font-family="monospace" font-size="12" text-anchor="end">"#);
    for wire in 1..=w.n() {
        let _ = writeln!(
            out,
            r#"    <text x="{}" y="{}">{wire}</text>"#,
            MARGIN + LABEL / 2 - 4,
            y_at(wire - 1) + 4
        );
    }
    let _ = writeln!(out, "  </g>");
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_minus_triangle() {
        let c = SignFunction::constant(3, 3, Sign::Minus).unwrap();
        let g = crossing_constraints(&c).unwrap();
        let edges: Vec<_> = g.raw_edges().iter().map(|e| (g[e.source()], g[e.target()])).collect();
        assert_eq!(edges, vec![((1, 2), (1, 3)), ((1, 3), (2, 3))]);
        let w = wiring_diagram(&c).unwrap();
        assert_eq!(w.sweep(), &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(signs_from_wiring(&w).unwrap(), c);
    }

    #[test]
    fn all_plus_triangle() {
        let c = SignFunction::constant(3, 3, Sign::Plus).unwrap();
        let g = crossing_constraints(&c).unwrap();
        let edges: Vec<_> = g.raw_edges().iter().map(|e| (g[e.source()], g[e.target()])).collect();
        assert_eq!(edges, vec![((2, 3), (1, 3)), ((1, 3), (1, 2))]);
        assert_eq!(wiring_diagram(&c).unwrap().sweep(), &[(2, 3), (1, 3), (1, 2)]);
    }

    #[test]
    fn rejects_bad_input() {
        let c = SignFunction::new(3, 4, &[Sign::Minus, Sign::Plus, Sign::Minus, Sign::Plus]).unwrap();
        assert!(matches!(crossing_constraints(&c), Err(Error::NotMonotone { .. })));
        let c = SignFunction::constant(2, 4, Sign::Minus).unwrap();
        assert!(matches!(wiring_diagram(&c), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn four_wire_mixed_arrangement() {
        // c(123) = -, c(234) = +; choose c(124), c(134) so that the result is monotone.
        let mut found = 0;
        for (a, b) in [(Sign::Minus, Sign::Minus), (Sign::Minus, Sign::Plus), (Sign::Plus, Sign::Minus), (Sign::Plus, Sign::Plus)] {
            let c = SignFunction::new(3, 4, &[Sign::Minus, a, b, Sign::Plus]).unwrap();
            if c.is_monotone().unwrap().holds() {
                let w = wiring_diagram(&c).unwrap();
                assert_eq!(w.sweep().len(), 6);
                assert_eq!(signs_from_wiring(&w).unwrap(), c);
                found += 1;
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn invalid_sweeps() {
        assert!(WiringDiagram::from_sweep(3, &[(1, 2), (1, 3)]).is_err());
        assert!(WiringDiagram::from_sweep(3, &[(1, 3), (1, 2), (2, 3)]).is_err());
        assert!(WiringDiagram::from_sweep(3, &[(1, 2), (1, 2), (2, 3)]).is_err());
        assert!(WiringDiagram::from_sweep(3, &[(1, 2), (1, 4), (2, 3)]).is_err());
        assert!(WiringDiagram::from_sweep(3, &[(2, 1), (3, 1), (3, 2)]).is_ok());
    }

    #[test]
    fn sweep_text_round_trip() {
        let w = WiringDiagram::from_sweep(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(w.sweep_text(), "1 2\n1 3\n2 3\n");
        assert_eq!(WiringDiagram::parse_sweep(&w.sweep_text()).unwrap(), w);
        assert!(matches!(WiringDiagram::parse_sweep("1 x\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn svg_structure() {
        let single = WiringDiagram::from_sweep(1, &[]).unwrap();
        let svg = render_svg(&single);
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert!(svg.contains(r#"points="30,20 40,20 80,20""#));
        assert_eq!(svg.matches(r#"class="crossing""#).count(), 0);

        let c = SignFunction::constant(3, 3, Sign::Minus).unwrap();
        let svg = render_svg(&wiring_diagram(&c).unwrap());
        assert!(svg.starts_with("<svg ") && svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<polyline").count(), 3);
        for slot in 1..=3 {
            assert!(svg.contains(&format!(r#"data-slot="{slot}""#)));
        }
        assert_eq!(svg.matches(r#"class="crossing""#).count(), 3);
        assert_eq!(svg.matches("<g ").count(), svg.matches("</g>").count());
    }
}
