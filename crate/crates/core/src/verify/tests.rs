use super::*;

fn params(kv: &[(&str, i64)]) -> Params {
    kv.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[test]
fn ids_are_unique() {
    let ids: BTreeSet<&str> = registry().iter().map(|s| s.id).collect();
    assert_eq!(ids.len(), registry().len());
    assert_eq!(registry().len(), 39);
}

#[test]
fn seidel_identity_small() {
    let c = verify_identity("I3_9", &params(&[("n", 2)])).unwrap();
    assert_eq!(c.status, Status::Pass);
    assert_eq!(c.witness, None);
}

#[test]
fn q_seidel_identity_small() {
    let c = verify_identity("I4_17", &params(&[("n", 3)])).unwrap();
    assert_eq!(c.status, Status::Pass, "{c:?}");
}

#[test]
fn errors() {
    assert_eq!(
        verify_identity("NOPE", &Params::new()),
        Err(Error::UnknownIdentity("NOPE".into()))
    );
    assert!(matches!(
        verify_identity("I1_10", &params(&[("n", 1)])),
        Err(Error::ParamOutOfRange { value: 1, .. })
    ));
    assert!(matches!(
        verify_identity("I3_8", &params(&[("n", 3), ("k", 5)])),
        Err(Error::ParamOutOfRange { max: 4, .. })
    ));
    assert!(matches!(
        verify_identity("I2_4", &Params::new()),
        Err(Error::MissingParam { .. })
    ));
    assert!(matches!(
        verify_identity("I2_4", &params(&[("n", 1), ("m", 0)])),
        Err(Error::UnknownParam { .. })
    ));
    assert!(matches!(
        verify_suite(&[], &Profile::quick(), None, Execution::Sequential),
        Err(Error::UnknownIdentity(_))
    ));
}

#[test]
fn case_enumeration() {
    let spec = lookup("I3_8").unwrap();
    let cases = spec.cases(&Profile::quick().with_max_n(2));
    let pairs: Vec<(i64, i64)> = cases.iter().map(|p| (p["n"], p["k"])).collect();
    assert_eq!(
        pairs,
        vec![
            (0, 0),
            (0, 1),
            (1, 0),
            (1, 1),
            (1, 2),
            (2, 0),
            (2, 1),
            (2, 2),
            (2, 3)
        ]
    );
    let spec = lookup("I1_10").unwrap();
    let ns: Vec<i64> = spec
        .cases(&Profile::quick().with_max_n(2))
        .iter()
        .map(|p| p["n"])
        .collect();
    assert_eq!(ns, vec![0, 2, 3, 4]);
}

#[test]
fn readings_note() {
    let c = verify_identity("I4_12_14", &params(&[("n", 3)])).unwrap();
    assert_eq!(c.status, Status::Pass);
    assert!(c.note.unwrap().contains("matches both"));
}

#[test]
fn perturbed_genocchi_fails_with_witness() {
    let profile = Profile::quick().with_max_n(3);
    let r = verify_suite(
        &["I1_9"],
        &profile,
        Some(Perturbation::Genocchi { n: 1 }),
        Execution::Sequential,
    )
    .unwrap();
    let bad: Vec<&IdentityCase> = r
        .cases
        .iter()
        .filter(|c| c.status == Status::Fail)
        .collect();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].params["n"], 1);
    assert_eq!(bad[0].witness.as_deref(), Some("L(F_2n): lhs - rhs = -1"));
}

#[test]
fn modes_agree() {
    let profile = Profile::quick().with_max_n(4);
    let ids = ["I3_8", "I4_TRI", "I5_9"];
    let a = verify_suite(&ids, &profile, None, Execution::Sequential).unwrap();
    let b = verify_suite(&ids, &profile, None, Execution::Parallel).unwrap();
    assert_eq!(a.cases, b.cases);
    assert_eq!(a.totals, b.totals);
    assert_eq!(a.totals.fail, 0);
}

#[test]
fn report_text_and_json() {
    let r = verify_suite(
        &["I2_4"],
        &Profile::quick().with_max_n(2),
        None,
        Execution::Sequential,
    )
    .unwrap();
    let text = r.to_text();
    assert!(text.starts_with("suite quick: 3 cases, 3 pass, 0 fail, 0 anomaly"));
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["cases"][1]["params"]["n"], 1);
    assert_eq!(v["cases"][1]["status"], "pass");
    assert_eq!(v["totals"]["pass"], 3);
}
