use qpolyber::verify::{run_suite, Bounds, Status, SUITES};

fn summary(suite: &str, bounds: Bounds) -> (usize, usize, usize) {
    let reports = run_suite(suite, bounds).unwrap();
    for r in reports.iter().filter(|r| r.failed()) {
        eprintln!("{}", r.to_json_line());
    }
    let count = |s| reports.iter().filter(|r| r.status == s).count();
    (count(Status::Pass), count(Status::Fail), count(Status::Reported))
}

#[test]
fn rook_laws_exhaustive_to_three() {
    let (pass, fail, _) = summary("rook-laws", Bounds { max_n: 5, max_k: 5 });
    assert_eq!(fail, 0);
    assert!(pass > 0);
}

#[test]
fn oracles_default_bounds() {
    let (pass, fail, _) = summary("oracles", Bounds::default());
    assert_eq!(fail, 0);
    assert!(pass > 0);
}

#[test]
fn every_suite_runs_clean_at_small_bounds() {
    let b = Bounds { max_n: 3, max_k: 3 };
    for s in SUITES {
        let (_, fail, _) = summary(s, b);
        assert_eq!(fail, 0, "{s}");
    }
}

#[test]
fn reported_checks_are_only_the_known_ones() {
    let reports = run_suite("all", Bounds { max_n: 3, max_k: 3 }).unwrap();
    let mut ids: Vec<&str> = reports.iter().filter(|r| r.status == Status::Reported).map(|r| r.check_id.as_str()).collect();
    ids.dedup();
    ids.sort();
    ids.dedup();
    assert_eq!(ids, ["at.zeng_b_power_initial_literal", "cenkci_comb", "cross.cenkci_recursion_literal"]);
}

#[test]
fn json_lines_round_trip() {
    for r in run_suite("cenkci-comb", Bounds { max_n: 2, max_k: 2 }).unwrap() {
        let back: qpolyber::verify::CheckReport = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(back, r);
    }
}
