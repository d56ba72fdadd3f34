//! Monotone colorings of ordered hypergraphs: predicates, longest monotone
//! paths, the tower construction, ternary composition colorings, exhaustive
//! enumeration and wiring diagrams for the `r = 3` case.
//!
//! Vertices are 1-based; edges of `K^r_n` are indexed by colex rank.

pub mod acceptance;
pub mod colex;
pub mod coloring;
pub mod compositions;
pub mod enumeration;
pub mod error;
pub mod geometry;
pub mod io;
pub mod paths;
pub mod tower;

pub use colex::{binomial, colex_rank, colex_unrank, ColexSubsets};
pub use coloring::{edge_count, Sign, SignFunction, Verdict};
pub use compositions::{build_crh, zero_lower_bound, CompletionMode, Composition, TernaryColoring};
pub use enumeration::{
    count_monotone, count_monotone_report, count_monotone_with, enumerate_monotone, find_avoiding, project,
    projection_signature, ramsey_number, ramsey_number_with, tow, CountReport, RamseyOutcome, SearchLimits, TowValue,
};
pub use error::{Error, Result};
pub use geometry::{render_svg, signs_from_wiring, wiring_diagram, WiringDiagram};
pub use io::{parse_mono, read_mono, to_mono_string, write_mono};
pub use paths::{contains_path, is_mono_path, longest_mono_paths, PathReport};
pub use tower::{tower_coloring, TowerGroundSet, TowerLimits};
