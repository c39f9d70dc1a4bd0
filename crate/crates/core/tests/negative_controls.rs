use std::collections::BTreeSet;

use proptest::prelude::*;

use qgenocchi::exec::Execution;
use qgenocchi::tables::row_len;
use qgenocchi::verify::{
    registry, verify_suite, Perturbation, Profile, Status, VerificationReport,
};

fn run(p: Perturbation) -> VerificationReport {
    let ids: Vec<&str> = registry().iter().map(|s| s.id).collect();
    verify_suite(&ids, &Profile::quick(), Some(p), Execution::Parallel).unwrap()
}

fn assert_detected(p: Perturbation) {
    let report = run(p);
    let fail = report
        .cases
        .iter()
        .find(|c| c.status == Status::Fail)
        .unwrap_or_else(|| panic!("{p:?} went unnoticed"));
    let witness = fail.witness.as_deref().unwrap_or("");
    assert!(
        !witness.is_empty() && !witness.ends_with("= 0"),
        "{p:?}: {witness}"
    );
}

#[test]
fn every_method_kind_has_a_detecting_perturbation() {
    let perturbations = [
        Perturbation::Triangle { i: 5, j: 2 },
        Perturbation::QTriangle { i: 5, j: 2 },
        Perturbation::Genocchi { n: 3 },
        Perturbation::Bernoulli { n: 4 },
        Perturbation::Egf { n: 4 },
        Perturbation::AMatrix { n: 3, k: 1 },
        Perturbation::Fib { n: 6 },
        Perturbation::QFib { n: 6 },
        Perturbation::QFibInv { n: 6 },
    ];
    let mut methods = BTreeSet::new();
    for p in perturbations {
        assert_detected(p);
        for c in run(p).cases.iter().filter(|c| c.status == Status::Fail) {
            methods.insert(c.method.as_str());
        }
    }
    for spec in registry() {
        assert!(
            methods.contains(spec.method.as_str()),
            "{} never fails",
            spec.method.as_str()
        );
    }
}

#[test]
fn unperturbed_suite_is_clean() {
    let ids: Vec<&str> = registry().iter().map(|s| s.id).collect();
    let report = verify_suite(&ids, &Profile::quick(), None, Execution::Parallel).unwrap();
    assert_eq!(report.totals.fail, 0);
}

fn perturbation() -> impl Strategy<Value = Perturbation> {
    // ranges the quick profile reads
    let tri = (1usize..=20).prop_flat_map(|i| (Just(i), 1..=row_len(i)));
    let qtri = (1usize..=12).prop_flat_map(|i| (Just(i), 1..=row_len(i)));
    prop_oneof![
        tri.prop_map(|(i, j)| Perturbation::Triangle { i, j }),
        qtri.prop_map(|(i, j)| Perturbation::QTriangle { i, j }),
        (1usize..=12).prop_map(|n| Perturbation::Genocchi { n }),
        (0usize..=20).prop_map(|n| Perturbation::Bernoulli { n }),
        (1usize..=20).prop_map(|n| Perturbation::Egf { n }),
        (1usize..=10)
            .prop_flat_map(|n| (Just(n), 0..n))
            .prop_map(|(n, k)| Perturbation::AMatrix { n, k }),
        (0i64..=20).prop_map(|n| Perturbation::Fib { n }),
        (0i64..=12).prop_map(|n| Perturbation::QFib { n }),
        (0i64..=12).prop_map(|n| Perturbation::QFibInv { n }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn unit_perturbations_are_detected(p in perturbation()) {
        assert_detected(p);
    }
}
