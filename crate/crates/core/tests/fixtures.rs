use heffter::fixtures;
use heffter::io::ArrayDoc;
use heffter::verify::{check_integer, verify};

#[test]
fn every_fixture_verifies() {
    for (name, doc) in fixtures::all() {
        let report = verify(&doc.array, &doc.params).unwrap();
        assert!(report.is_heffter(), "{name}: {:?}", report.violations);
    }
}

#[test]
fn integer_flags() {
    let expected = [
        ("ex17a", false),
        ("ex17b", true),
        ("ex18", true),
        ("ex19", true),
        ("ex46a", true),
        ("ex46b", false),
    ];
    for (name, flag) in expected {
        let d = fixtures::load(name).unwrap();
        assert_eq!(check_integer(&d.array, &d.params).unwrap(), flag, "{name}");
    }
}

#[test]
fn files_are_canonical() {
    for (name, text) in fixtures::ALL {
        let doc = ArrayDoc::from_json(text).unwrap();
        assert_eq!(format!("{}\n", doc.to_json()), *text, "{name}");
    }
}

#[test]
fn declared_moduli() {
    let moduli: Vec<usize> = ["ex17a", "ex17b", "ex18", "ex19", "ex46a", "ex46b", "ex59"]
        .iter()
        .map(|n| fixtures::load(n).unwrap().params.modulus())
        .collect();
    assert_eq!(moduli, vec![10, 8, 16, 25, 80, 40, 76]);
}

#[test]
fn projected_first_row_sums_to_minus_forty() {
    let d = fixtures::projected_13x3();
    assert_eq!(d.array.row_sums()[0], -40);
}

#[test]
fn csv_round_trip_of_fixtures() {
    for (name, doc) in fixtures::all() {
        let csv = doc.to_csv();
        let back = ArrayDoc::from_csv(&csv, doc.params.lambda, doc.params.t).unwrap();
        assert_eq!(back, doc, "{name}");
    }
}
