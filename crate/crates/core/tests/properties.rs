use std::sync::OnceLock;

use proptest::prelude::*;
use signotope::colex::{colex_rank, colex_unrank};
use signotope::compositions::Composition;
use signotope::enumeration::all_monotone;
use signotope::geometry::WiringDiagram;
use signotope::io::{parse_mono, read_mono, to_mono_string, write_mono};
use signotope::tower::TowerGroundSet;
use signotope::{binomial, is_mono_path, longest_mono_paths, wiring_diagram, Sign, SignFunction};

fn monotone_3_6() -> &'static [SignFunction] {
    static CACHE: OnceLock<Vec<SignFunction>> = OnceLock::new();
    CACHE.get_or_init(|| all_monotone(3, 6).unwrap())
}

fn monotone_2_7() -> &'static [SignFunction] {
    static CACHE: OnceLock<Vec<SignFunction>> = OnceLock::new();
    CACHE.get_or_init(|| all_monotone(2, 7).unwrap())
}

fn any_coloring() -> impl Strategy<Value = SignFunction> {
    (2usize..=4, 0usize..=3)
        .prop_flat_map(|(r, extra)| {
            let n = r + extra;
            let len = binomial(n as u64, r as u64).unwrap() as usize;
            (Just(r), Just(n), prop::collection::vec(any::<bool>(), len))
        })
        .prop_map(|(r, n, bits)| {
            let colors: Vec<Sign> = bits.into_iter().map(Sign::from_bool).collect();
            SignFunction::new(r, n, &colors).unwrap()
        })
}

fn mirror(seq: &[usize], n: usize) -> Vec<usize> {
    seq.iter().rev().map(|&v| n + 1 - v).collect()
}

proptest! {
    #[test]
    fn colex_rank_round_trip(n in 1usize..30, k in 1usize..6, seed in any::<u64>()) {
        prop_assume!(k <= n);
        let total = binomial(n as u64, k as u64).unwrap() as usize;
        let rank = (seed % total as u64) as usize;
        let set = colex_unrank(rank, k);
        prop_assert_eq!(set.len(), k);
        prop_assert!(set.windows(2).all(|w| w[0] < w[1]) && *set.last().unwrap() <= n);
        prop_assert_eq!(colex_rank(&set, n).unwrap(), rank);
    }

    #[test]
    fn swap_and_reversal_preserve_predicates(c in any_coloring()) {
        let mono = c.is_monotone().unwrap().holds();
        let trans = c.is_transitive().unwrap().holds();
        for d in [c.swapped(), c.reversed()] {
            prop_assert_eq!(d.is_monotone().unwrap().holds(), mono);
            prop_assert_eq!(d.is_transitive().unwrap().holds(), trans);
        }
        prop_assert!(!mono || trans);
        prop_assert_eq!(c.swapped().swapped(), c.clone());
        prop_assert_eq!(c.reversed().reversed(), c);
    }

    #[test]
    fn paths_under_swap_and_reversal(idx in 0usize..10_000, use_r2 in any::<bool>()) {
        let pool = if use_r2 { monotone_2_7() } else { monotone_3_6() };
        let c = &pool[idx % pool.len()];
        let rep = longest_mono_paths(c).unwrap();
        let swapped = longest_mono_paths(&c.swapped()).unwrap();
        prop_assert_eq!((swapped.best_minus, swapped.best_plus), (rep.best_plus, rep.best_minus));
        let rev = c.reversed();
        let rrep = longest_mono_paths(&rev).unwrap();
        prop_assert_eq!((rrep.best_minus, rrep.best_plus), (rep.best_minus, rep.best_plus));
        prop_assert!(is_mono_path(&rev, &mirror(&rep.witness_minus, c.n()), Sign::Minus));
        prop_assert!(is_mono_path(&rev, &mirror(&rep.witness_plus, c.n()), Sign::Plus));
    }

    #[test]
    fn mono_text_round_trip(c in any_coloring()) {
        prop_assert_eq!(parse_mono(&to_mono_string(&c)).unwrap(), c.clone());
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.mono");
        write_mono(&path, &c).unwrap();
        prop_assert_eq!(read_mono(&path).unwrap(), c);
    }

    #[test]
    fn sweep_text_round_trip(idx in 0usize..10_000) {
        let pool = monotone_3_6();
        let w = wiring_diagram(&pool[idx % pool.len()]).unwrap();
        prop_assert_eq!(WiringDiagram::parse_sweep(&w.sweep_text()).unwrap(), w);
    }

    #[test]
    fn composition_reduction_is_a_base_form(m in 3usize..10, mask in any::<u32>()) {
        let all = Composition::all(m);
        let comp = &all[mask as usize % all.len()];
        let parts = comp.parts();
        let trivial = parts.len() == 1 || parts.iter().all(|&p| p == 1);
        match comp.reduction() {
            Ok(base) => {
                prop_assert!(!trivial);
                prop_assert!(base.is_base_form());
                prop_assert!(parts.starts_with(&base.parts()[..base.parts().len() - 1]));
                prop_assert!(comp.sign().unwrap().is_some());
            }
            Err(_) => {
                prop_assert!(trivial);
                prop_assert!(comp.sign().unwrap().is_none());
            }
        }
    }
}

#[test]
fn sigma_is_an_order_reversing_involution() {
    for (r, n) in [(3, 3), (3, 4), (4, 3)] {
        let gs = TowerGroundSet::build(r, n).unwrap();
        for level in 2..=r {
            let els = gs.elements_at(level);
            for &a in &els {
                let s = gs.sigma(a);
                assert_eq!(gs.sigma(s), a);
                assert_ne!(gs.type_of(a), gs.type_of(s));
                for &b in &els {
                    assert_eq!(gs.cmp(a, b), gs.cmp(gs.sigma(b), s));
                }
            }
        }
    }
}

#[test]
fn composition_counts_by_parts() {
    for m in 1..=10 {
        let all = Composition::all(m);
        assert_eq!(all.len(), 1 << (m - 1));
        for k in 1..=m {
            let with_k = all.iter().filter(|c| c.parts().len() == k).count() as u64;
            assert_eq!(with_k, binomial(m as u64 - 1, k as u64 - 1).unwrap());
        }
    }
}

#[test]
fn swap_and_reversal_act_on_the_enumerated_set() {
    for (r, n) in [(2, 5), (3, 5), (3, 6), (4, 6)] {
        let mut all: Vec<String> = all_monotone(r, n).unwrap().iter().map(|c| c.color_string()).collect();
        all.sort();
        for op in [SignFunction::swapped, SignFunction::reversed] {
            let mut fixed = 0;
            let mut image: Vec<String> = all_monotone(r, n)
                .unwrap()
                .iter()
                .map(|c| {
                    let d = op(c);
                    fixed += (d == *c) as usize;
                    d.color_string()
                })
                .collect();
            image.sort();
            assert_eq!(image, all, "({r},{n}) not closed");
            // Non-fixed colorings come in pairs.
            assert_eq!((all.len() - fixed) % 2, 0);
        }
    }
}
