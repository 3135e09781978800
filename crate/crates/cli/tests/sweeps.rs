use c4energy::{run_sweep, RunConfig, SweepKind};
use c4energy_core::enumerate::count_trees;

#[test]
fn sweeps_double_as_moment_checks() {
    for (kind, n) in [(SweepKind::TreeExceptions, 14), (SweepKind::Subcubic, 8), (SweepKind::Dense { d: 4 }, 8)] {
        let o = run_sweep(kind, &RunConfig::new(n)).unwrap();
        assert!(o.max_moment_residual <= 1e-8, "{kind}: {}", o.max_moment_residual);
    }
}

#[test]
fn lists_are_disjoint_and_within_total() {
    let mut cfg = RunConfig::new(12);
    cfg.keep_all = true;
    let o = run_sweep(SweepKind::TreeExceptions, &cfg).unwrap();
    let mut codes: Vec<_> =
        o.counterexamples.iter().chain(&o.borderline).chain(&o.passes).map(|r| (r.order, r.label.clone())).collect();
    let len = codes.len();
    codes.sort();
    codes.dedup();
    assert_eq!(codes.len(), len);
    assert_eq!(len as u64, o.total);
}

#[test]
fn per_order_totals_match_tree_counts() {
    let o = run_sweep(SweepKind::TreeExceptions, &RunConfig::new(15)).unwrap();
    for s in &o.orders {
        assert_eq!(s.total, count_trees(s.order, 3).unwrap(), "order {}", s.order);
        assert!(s.min_ratio.is_finite() && !s.argmin.is_empty());
    }
    // the path-like trees are not the minimisers once the exceptions are past
    let seven = &o.orders[6];
    assert!(seven.min_ratio < 1.0);
}

#[test]
fn k2_is_a_tie_not_an_exception() {
    let o = run_sweep(SweepKind::TreeExceptions, &RunConfig::new(2)).unwrap();
    assert_eq!(o.counterexamples.len(), 1);
    assert_eq!(o.counterexamples[0].order, 1);
    assert!(o.borderline.is_empty());
}

#[test]
fn worker_count_does_not_change_outcome() {
    let run = |jobs| {
        let mut cfg = RunConfig::new(13).with_jobs(jobs).unwrap();
        cfg.keep_all = true;
        let o = run_sweep(SweepKind::Trees, &cfg).unwrap();
        (o.total, o.skipped, o.passes, o.orders)
    };
    assert_eq!(run(1), run(3));
}

#[test]
fn trees_have_energy_at_least_order_up_to_22() {
    let o = run_sweep(SweepKind::Trees, &RunConfig::new(22).with_jobs(2).unwrap()).unwrap();
    assert!(o.counterexamples.is_empty() && o.borderline.is_empty());
    assert_eq!(o.skipped, 4);
}

// several minutes on one core; run with `cargo test -- --ignored`
#[test]
#[ignore]
fn trees_have_energy_at_least_order_up_to_25() {
    let o = run_sweep(SweepKind::Trees, &RunConfig::new(25).with_jobs(4).unwrap()).unwrap();
    assert!(o.counterexamples.is_empty() && o.borderline.is_empty());
    assert_eq!(o.total + o.skipped, (1..=25).map(|n| count_trees(n, 3).unwrap()).sum::<u64>());
}

#[test]
fn h_tree_ties_are_passes() {
    // two adjacent centres with two leaves each: x²(x²−1)(x²−4), so E = 6
    let h = c4energy_core::Graph::from_edge_list(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
    let code = c4energy_core::canonical_code(&h).unwrap().to_string();
    let mut cfg = RunConfig::new(6);
    cfg.keep_all = true;
    for kind in [SweepKind::TreeExceptions, SweepKind::Trees] {
        let o = run_sweep(kind, &cfg).unwrap();
        let r = o.passes.iter().find(|r| r.label == code).expect("H tree examined");
        assert!(r.deficit.abs() < 1e-12, "{}", r.deficit);
        assert_eq!(o.orders.iter().find(|s| s.order == 6).unwrap().argmin, code);
    }
}
