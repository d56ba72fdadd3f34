use signotope::enumeration::{count_monotone_with, SearchLimits};
use signotope::{count_monotone, tow, TowValue};

#[test]
fn graph_case_counts_permutations() {
    // 2-monotone colorings of K_n correspond to permutations of [n].
    let mut factorial = 1u64;
    for n in 2..=8 {
        factorial *= n as u64;
        assert_eq!(count_monotone(2, n).unwrap().count, factorial, "n = {n}");
    }
}

#[test]
fn three_uniform_seven_vertices() {
    let plain = count_monotone(3, 7).unwrap();
    let (halved, _) = count_monotone_with(3, 7, &SearchLimits { symmetry: true, workers: Some(3), ..SearchLimits::default() }).unwrap();
    assert_eq!(plain.count, 24698);
    assert_eq!(halved, plain.count);
    let b = plain.bounds.unwrap();
    assert!(b.upper_holds && !b.lower_binding);
}

#[test]
fn tow_values() {
    assert_eq!(tow(1, 7).unwrap(), TowValue::Exact(7));
    assert_eq!(tow(2, 10).unwrap(), TowValue::Exact(1024));
    assert_eq!(tow(3, 4).unwrap(), TowValue::Exact(65536));
    assert_eq!(tow(4, 4).unwrap(), TowValue::Overflow);
}
