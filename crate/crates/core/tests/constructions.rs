use heffter::construct::five_diag::five_diag_params;
use heffter::construct::tight::two_row_params;
use heffter::construct::{
    build_2xn_even, build_2xn_odd, build_5diag, compose, exhaustive_search, project,
};
use heffter::orderings::is_globally_simple;
use heffter::verify::{check_integer, verify};
use heffter::{fixtures, HeffterParams, SearchBudget, SkeletonConstraint};

#[test]
fn two_row_families_verify() {
    for n in (6..=50).step_by(4) {
        let a = build_2xn_even(n).unwrap();
        assert!(
            verify(&a, &two_row_params(n)).unwrap().is_heffter(),
            "even n = {n}"
        );
        assert!(a.col_sums().iter().all(|&s| s == 0));
    }
    for n in (5..=49).step_by(4) {
        let a = build_2xn_odd(n).unwrap();
        assert!(
            verify(&a, &two_row_params(n)).unwrap().is_heffter(),
            "odd n = {n}"
        );
        assert_eq!(a.row_sums()[0], 2 * n as i64 + 1);
    }
}

#[test]
fn five_diagonal_family() {
    for n in (7..=63).step_by(4) {
        let a = build_5diag(n).unwrap();
        let p = five_diag_params(n);
        assert!(verify(&a, &p).unwrap().is_heffter(), "n = {n}");
        assert!(a.is_cyclically_k_diagonal(5));
        assert!(is_globally_simple(&a, p.modulus()));
    }
}

#[test]
fn search_agrees_with_two_row_constructors() {
    let budget = SearchBudget::nodes(2_000_000).unwrap();
    for n in [5, 6] {
        let p = two_row_params(n);
        let r = exhaustive_search(&p, None, &budget).unwrap();
        assert!(r.certificate.complete);
        let a = r.array.expect("a constructor covers this size");
        assert!(verify(&a, &p).unwrap().is_heffter());
    }
}

#[test]
fn search_finds_the_constructed_skeleton_shape() {
    let p = five_diag_params(7);
    let c = SkeletonConstraint::Cells(build_5diag(7).unwrap().skeleton());
    let r = exhaustive_search(&p, Some(&c), &SearchBudget::nodes(5_000_000).unwrap()).unwrap();
    if let Some(a) = r.array {
        assert!(verify(&a, &p).unwrap().is_heffter());
    } else {
        assert!(!r.certificate.complete, "search contradicts build_5diag(7)");
    }
}

#[test]
fn small_relative_arrays_from_search() {
    let budget = SearchBudget::default();
    for (n, k, t) in [(3, 3, 3), (3, 3, 6), (4, 4, 8)] {
        let p = HeffterParams::square(n, k, 1, t).unwrap();
        let a = exhaustive_search(&p, None, &budget).unwrap().array.unwrap();
        assert!(verify(&a, &p).unwrap().is_heffter());
    }
}

#[test]
fn projection_then_composition() {
    let a = fixtures::relative_13x3();
    let (b, q) = compose(&a.array, &a.params, 2, 2, 2, 2).unwrap();
    assert!(check_integer(&b, &q).unwrap());
    let (c, r) = project(&b, &q, 2).unwrap();
    assert_eq!(r.lambda, 8);
    assert_eq!(r.t, 1);
    assert!(verify(&c, &r).unwrap().is_heffter());
}
