use proptest::prelude::*;

use heffter::construct::project::compose;
use heffter::construct::{project, subset_summing_to};
use heffter::decomp::{canonical_cycle, CycleGraph, DifferenceFamily};
use heffter::orderings::{is_simple, partial_sums};
use heffter::verify::verify;
use heffter::{fixtures, ArrayDoc, HeffterParams, PFArray};

fn fixture_names() -> impl Strategy<Value = &'static str> {
    prop::sample::select(vec![
        "ex17a",
        "ex17b",
        "ex18",
        "ex19",
        "ex46a",
        "ex46b",
        "ex59",
        "h5x3_search",
    ])
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

/// Some run `a_b + … + a_c` with `2 <= b <= c` vanishes mod `v`.
fn has_zero_run(xs: &[i64], v: i64) -> bool {
    (1..xs.len()).any(|b| (b..xs.len()).any(|c| xs[b..=c].iter().sum::<i64>().rem_euclid(v) == 0))
}

proptest! {
    #[test]
    fn symmetries_preserve_verification(
        name in fixture_names(),
        seed_rows in shuffled(15),
        seed_cols in shuffled(15),
        negate in any::<bool>(),
    ) {
        let d = fixtures::load(name).unwrap();
        let rows: Vec<usize> = seed_rows.into_iter().filter(|&i| i <= d.params.m).collect();
        let cols: Vec<usize> = seed_cols.into_iter().filter(|&j| j <= d.params.n).collect();
        let mut b = d.array.permute_rows(&rows).permute_cols(&cols);
        if negate {
            b = b.negated();
        }
        let before = verify(&d.array, &d.params).unwrap();
        let after = verify(&b, &d.params).unwrap();
        prop_assert_eq!(before.passes_a1, after.passes_a1);
        prop_assert_eq!(before.passes_b1, after.passes_b1);
        prop_assert_eq!(before.passes_c1, after.passes_c1);
        prop_assert_eq!(before.is_integer, after.is_integer);
    }

    #[test]
    fn simplicity_matches_zero_runs(xs in prop::collection::vec(-20i64..=20, 1..=8), v in 2i64..30) {
        prop_assert_eq!(is_simple(&xs, v as usize), !has_zero_run(&xs, v));
    }

    #[test]
    fn partial_sums_end_at_the_total(xs in prop::collection::vec(-50i64..=50, 1..=10), v in 1usize..40) {
        let ps = partial_sums(&xs, v);
        prop_assert_eq!(*ps.last().unwrap() as i64, xs.iter().sum::<i64>().rem_euclid(v as i64));
    }

    #[test]
    fn subsets_hit_their_target(n in 1usize..40, frac in 0.0f64..1.0) {
        let max = (n * (n + 1) / 2) as u64;
        let target = 1 + ((max - 1) as f64 * frac) as u64;
        let s = subset_summing_to(n, target).unwrap();
        prop_assert_eq!(s.iter().sum::<usize>() as u64, target);
    }

    #[test]
    fn canonical_cycles_ignore_rotation_and_direction(
        vs in prop::collection::vec(0usize..12, 1..8),
        r in 0usize..8,
        flip in any::<bool>(),
    ) {
        let mut w = vs.clone();
        let len = w.len();
        w.rotate_left(r % len);
        if flip {
            w.reverse();
        }
        prop_assert_eq!(canonical_cycle(&vs), canonical_cycle(&w));
    }

    #[test]
    fn differences_are_translation_invariant(g in 0usize..16, which in 0usize..5) {
        let d = fixtures::two_fold_5x3();
        let op = heffter::orderings::natural_orderings(&d.array);
        let blocks = heffter::decomp::line_cycles(&d.array, &op, heffter::LineKind::Rows, 16).unwrap();
        let f = DifferenceFamily { blocks: blocks.clone(), v: 16, t: 1, lambda: 2 };
        let mut shifted = f.clone();
        shifted.blocks[which] = blocks[which].translate(g);
        prop_assert_eq!(f.difference_counts(), shifted.difference_counts());
        prop_assert!(heffter::decomp::check_difference_family(&shifted));
    }

    #[test]
    fn json_round_trip(cells in prop::collection::btree_map((1usize..6, 1usize..6), -30i64..30, 0..20)) {
        let a = PFArray::from_cells(5, 5, cells).unwrap();
        let doc = ArrayDoc::new(HeffterParams { m: 5, n: 5, s: 3, k: 3, lambda: 2, t: 1 }, a);
        prop_assert_eq!(ArrayDoc::from_json(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn composition_verifies_and_keeps_integrality(
        (l1, l2, a1, a2) in prop::sample::select(vec![
            (1, 1, 1, 1), (2, 2, 1, 1), (2, 2, 2, 2), (3, 3, 2, 2), (2, 4, 2, 1),
            (4, 2, 1, 2), (3, 3, 1, 1), (2, 3, 3, 2), (3, 2, 2, 3), (4, 4, 3, 3),
        ]),
    ) {
        let d = fixtures::relative_13x3();
        let (b, q) = compose(&d.array, &d.params, l1, l2, a1, a2).unwrap();
        let report = verify(&b, &q).unwrap();
        prop_assert!(report.is_heffter());
        prop_assert!(report.is_integer);
    }

    #[test]
    fn chained_projection_equals_single(l1 in 1usize..3, a1 in 1usize..3) {
        // H₆(3;3) over Z₂₄, found once by hand and checked by `verify`.
        let base = PFArray::from_rows(&[
            vec![Some(1), Some(2), Some(-3)],
            vec![Some(5), Some(9), Some(10)],
            vec![Some(-6), Some(-11), Some(-7)],
        ]).unwrap();
        let p = HeffterParams::square(3, 3, 1, 6).unwrap();
        let a1 = a1.min(l1);
        let (a, q) = compose(&base, &p, l1, l1, a1, a1).unwrap();
        let (two, q2) = project(&a, &q, 2).unwrap();
        let (six, _) = project(&two, &q2, 3).unwrap();
        let (direct, q6) = project(&a, &q, 6).unwrap();
        prop_assert_eq!(six, direct);
        prop_assert_eq!(q6.t, 1);
    }
}

#[test]
fn cycle_graph_edges_close_up() {
    let c = CycleGraph::new(vec![1, 3, 0], 10);
    assert_eq!(c.edges().collect::<Vec<_>>(), vec![(1, 3), (0, 3), (0, 1)]);
}
