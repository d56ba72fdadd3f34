use signotope::acceptance::run_criterion;

fn check(id: u8) {
    let result = run_criterion(id).expect("listed criterion");
    println!("{}", result.line());
    assert!(result.pass, "{}", result.line());
}

#[test]
fn criterion_1_small_complete_counts() {
    check(1);
}

#[test]
fn criterion_2_monotone_ramsey_values() {
    check(2);
}

#[test]
fn criterion_3_tower_construction() {
    check(3);
}

#[test]
fn criterion_4_tower_lemma_checkers() {
    check(4);
}

#[test]
fn criterion_5_composition_colorings() {
    check(5);
}

#[test]
fn criterion_6_counting() {
    check(6);
}

#[test]
fn criterion_7_projection_properties() {
    check(7);
}

#[test]
fn criterion_8_path_dp_oracle() {
    check(8);
}

#[test]
fn criterion_9_wiring_diagrams() {
    check(9);
}
