use std::collections::HashMap;

use nspg::harness::{
    check_theorem, default_catalog, run_catalog, Catalog, TheoremId, Value, Verdict,
};
use nspg::subgroup::generated_subgroup;

#[test]
fn report_is_deterministic_and_complete() {
    let cat = default_catalog();
    let a = run_catalog(&cat);
    let b = run_catalog(&cat);
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.to_csv(), b.to_csv());
    assert!(a.errors.is_empty());
    assert!(a.instances >= 50);

    let mut seen: HashMap<(String, String), Vec<TheoremId>> = HashMap::new();
    for r in &a.results {
        seen.entry((r.group.clone(), r.subgroup.clone())).or_default().push(r.theorem);
    }
    assert_eq!(seen.len(), a.instances);
    for ids in seen.values() {
        assert_eq!(ids, &TheoremId::ALL.to_vec());
    }

    for s in &a.summary {
        let c = &s.counts;
        assert_eq!(c.pass + c.fail + c.flagged + c.skipped, a.instances);
    }
    let non_pass = a.results.iter().filter(|r| r.verdict != Verdict::Pass).count();
    assert_eq!(a.non_pass.len(), non_pass);
}

#[test]
fn verdict_rules() {
    let report = run_catalog(&default_catalog());
    for r in &report.results {
        if r.verdict == Verdict::Skipped {
            assert!(!r.hypothesis_met || r.actual == Value::Unknown, "{r:?}");
            assert!(r.note.is_some());
        } else {
            assert!(r.hypothesis_met);
        }
        if r.verdict == Verdict::Flagged {
            assert!(r.theorem.is_report_only());
        }
        if r.verdict == Verdict::Pass {
            assert_eq!(r.predicted, r.actual);
        }
    }
}

#[test]
fn degree_formula_holds_vertex_by_vertex() {
    let report = run_catalog(&Catalog {
        theorems: vec![TheoremId::DegreeFormula],
        ..default_catalog()
    });
    for r in &report.results {
        let (Value::Degrees { power, nsb }, Value::Degrees { power: p2, nsb: n2 }) =
            (&r.predicted, &r.actual)
        else {
            panic!("degree check should report sequences");
        };
        assert_eq!(power, p2, "{} {}", r.group, r.subgroup);
        assert_eq!(nsb, n2, "{} {}", r.group, r.subgroup);
    }
}

#[test]
fn examples_from_small_groups() {
    let z4 = nspg::make_group(&"Z4".parse().unwrap()).unwrap();
    let h = generated_subgroup(&z4, &[2]).unwrap();
    let all: Vec<_> = TheoremId::ALL
        .iter()
        .map(|&id| check_theorem(id, &z4, &h).unwrap())
        .collect();
    assert_eq!(all.len(), 13);
    let edges = &all[8];
    assert_eq!(edges.theorem.as_str(), "EDGES_6_1");
    assert_eq!((&edges.predicted, &edges.actual), (&Value::Int(3), &Value::Int(3)));

    let z8 = nspg::make_group(&"Z8".parse().unwrap()).unwrap();
    let h = generated_subgroup(&z8, &[2]).unwrap();
    let planar = check_theorem(TheoremId::PlanarCharacterization, &z8, &h).unwrap();
    assert_eq!(planar.verdict, Verdict::Pass);
    assert_eq!(planar.actual, Value::Bool(false));
}
