//! FAIL reports must re-verify from their serialized form alone, and any
//! altered fact must be rejected.

use std::collections::BTreeSet;

use gkcut::lab::{
    check_lemma, default_catalog, recheck, CheckReport, Fact, LemmaId, LemmaInstance, Params,
};
use gkcut::Bounds;

fn conclusion_only_fails() -> Vec<CheckReport> {
    let bounds = Bounds::default();
    let mut out = Vec::new();
    for g in default_catalog().groups {
        for id in LemmaId::ALL {
            if id.needs_explicit_instance() || id == LemmaId::Vs2 {
                continue;
            }
            let inst = LemmaInstance::new(id, g.clone()).with_params(Params {
                conclusion_only: true,
                ..Default::default()
            });
            if let Ok(r) = check_lemma(&inst, &bounds) {
                if r.is_fail() {
                    out.push(r);
                }
            }
        }
    }
    out
}

fn tamper(f: &mut Fact) {
    match f {
        Fact::ElementOrder { order, .. } => *order += 1,
        Fact::Rationality { rational, .. } => *rational = !*rational,
        Fact::Commute { holds, .. }
        | Fact::Conjugate { holds, .. }
        | Fact::Property { holds, .. }
        | Fact::Contains { holds, .. } => *holds = !*holds,
        Fact::SubgroupOrder { order, .. } => *order += 1,
        Fact::FixedSpaceDim { dim, .. } => *dim += 1,
        Fact::Search { claim } => claim.push_str(" (altered)"),
    }
}

#[test]
fn every_fail_rechecks_and_every_tampered_fact_is_rejected() {
    let bounds = Bounds::default();
    let fails = conclusion_only_fails();
    let ids: BTreeSet<&str> = fails.iter().map(|r| r.lemma_id.as_str()).collect();
    assert!(ids.len() >= 10, "only {ids:?} produce FAIL");
    for r in &fails {
        let text = serde_json::to_string(r).unwrap();
        let back: CheckReport = serde_json::from_str(&text).unwrap();
        assert_eq!(&back, r);
        assert!(recheck(&back, &bounds).unwrap(), "{text}");

        let n = back.counterexample.as_ref().unwrap().facts.len();
        for k in 0..n {
            let mut bad = back.clone();
            tamper(&mut bad.counterexample.as_mut().unwrap().facts[k]);
            assert!(
                !recheck(&bad, &bounds).unwrap(),
                "tampered fact {k} accepted: {text}"
            );
        }
    }
}

#[test]
fn passing_reports_do_not_recheck_as_failures() {
    let inst =
        LemmaInstance::new(LemmaId::GSylowP, "Alt(4)".parse().unwrap()).with_params(Params {
            p: Some(3),
            ..Default::default()
        });
    let r = check_lemma(&inst, &Bounds::default()).unwrap();
    assert!(!r.is_fail());
    assert!(!recheck(&r, &Bounds::default()).unwrap());
}

#[test]
fn module_facts_recheck() {
    // sign module over F_5: the transposition fixes no nonzero vector
    let inst: LemmaInstance = serde_json::from_str(
        r#"{"lemma_id": "L-2.2-FrobFaithful", "subject": "Sym(3)",
            "params": {"module": {"kind": "matrices", "p": 5, "matrices": [[[4]], [[1]]]},
                       "conclusion_only": true}}"#,
    )
    .unwrap();
    let bounds = Bounds::default();
    let r = check_lemma(&inst, &bounds).unwrap();
    assert!(r.is_fail(), "{}", r.detail);
    let facts = &r.counterexample.as_ref().unwrap().facts;
    assert!(matches!(facts[..], [Fact::FixedSpaceDim { dim: 0, .. }]));
    assert!(recheck(&r, &bounds).unwrap());

    let mut plain = inst.clone();
    plain.params.conclusion_only = false;
    let r = check_lemma(&plain, &bounds).unwrap();
    assert_eq!(r.detail, "module is not faithful");
}
