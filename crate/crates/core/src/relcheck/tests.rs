use super::*;
use crate::natrep::GeneratorLabel as G;
use crate::tensorrep::{coproduct_actions, dictionary, tij_coproduct_actions, ComultReading, CoproductRoute};
use proptest::prelude::*;

fn run(s: Suite, n: usize, k: usize) -> SuiteReport {
    run_suite(s, n, k, &SuiteOptions::default()).unwrap().0
}

fn non_pass(r: &SuiteReport) -> Vec<(&str, Status, &str)> {
    r.cases.iter().filter(|c| c.status != Status::Pass).map(|c| (c.case_id.as_str(), c.status, c.reading.as_str())).collect()
}

#[test]
fn suite_names_round_trip() {
    for s in Suite::ALL {
        assert_eq!(s.to_string().parse::<Suite>().unwrap(), s);
        assert_eq!(serde_json::to_value(s).unwrap(), serde_json::Value::String(s.to_string()));
    }
    assert!("nope".parse::<Suite>().is_err());
}

#[test]
fn rank_one_rejected() {
    assert!(run_suite(Suite::Exprel, 1, 1, &SuiteOptions::default()).is_err());
}

#[test]
fn exchange_relations_hold() {
    for (n, k) in [(2, 1), (2, 2), (3, 1)] {
        let r = run(Suite::Exprel, n, k);
        assert!(r.ok(), "n={n} k={k}: {:?}", non_pass(&r));
        let pairs = frt::generator_pairs(n).len();
        assert_eq!(r.cases.len(), pairs * pairs);
    }
}

#[test]
fn dj_relations_only_serre_e2_needs_shifted_index() {
    let r = run(Suite::DjRelations, 2, 2);
    assert_eq!(r.failed, 0, "{:?}", non_pass(&r));
    let r = run(Suite::DjRelations, 3, 2);
    assert_eq!(r.failed, 0, "{:?}", non_pass(&r));
    for (id, st, reading) in non_pass(&r) {
        assert!(id.starts_with("serre_e2"), "{id}");
        assert_eq!(st, Status::Ambiguous);
        assert_eq!(reading, "index-i+1");
    }
    assert!(r.ambiguous > 0);
}

#[test]
fn lemma_alg_and_divided_powers() {
    let r = run(Suite::LemmaAlg, 2, 2);
    assert_eq!(r.failed, 0, "{:?}", non_pass(&r));
    assert!(non_pass(&r).iter().all(|(id, st, _)| id.starts_with("lem_c") && *st == Status::Ambiguous));
    let r = run(Suite::DividedPowers, 2, 2);
    assert_eq!(r.failed, 0, "{:?}", non_pass(&r));
    for (id, st, reading) in non_pass(&r) {
        assert!(id.starts_with("f_e"), "{id}");
        assert_eq!((st, reading), (Status::Ambiguous, "q^{m-1},q/2"));
    }
}

#[test]
fn classical_identification_is_unique() {
    let r = run(Suite::Classical, 2, 1);
    assert_eq!(r.failed, 0, "{:?}", non_pass(&r));
    let passing: Vec<_> = r.identifications.iter().filter(|o| o.failing_cases.is_empty()).collect();
    assert_eq!(passing.len(), 1);
    assert_eq!(passing[0].identification, Identification::Specialized.to_string());
    assert_eq!(r.case("fbar_identification_unique").unwrap().status, Status::Pass);
}

#[test]
fn coproduct_agrees_up_to_printed_f() {
    for (n, k) in [(2, 2), (2, 3), (3, 2)] {
        let r = run(Suite::Coproduct, n, k);
        assert_eq!(r.failed, 0, "n={n} k={k}: {:?}", non_pass(&r));
        for (id, st, reading) in non_pass(&r) {
            assert!(id.starts_with("comult[f") && !id.starts_with("comult[fbar"), "{id}");
            assert_eq!((st, reading), (Status::Ambiguous, "corrected"));
        }
    }
}

#[test]
fn corrected_dj_coproduct_matches_tij_coproduct() {
    let n = 2;
    let gens = G::dj_generators(n);
    for k in 1..=3 {
        let dj = coproduct_actions(n, k, &gens, ComultReading::Corrected, CoproductRoute::Right).unwrap();
        let t = tij_coproduct_actions(n, k).unwrap();
        for g in &gens {
            if let Some((i, j, c)) = dictionary(g) {
                assert!(dj[g].sub(&t[&(i, j)].scale(&c)).unwrap().is_zero(), "{g} at k={k}");
            }
        }
    }
}

#[test]
fn centralizer_small() {
    let r = run(Suite::Centralizer, 2, 2);
    assert!(r.ok(), "{:?}", non_pass(&r));
    assert!(r.case("completeness").is_some());
    assert!(r.case("hecke[1]").is_some());
    // n=2 admits no three-row tableau
    let r = run(Suite::Centralizer, 2, 3);
    assert!(r.ok(), "{:?}", non_pass(&r));
    assert!(r.case("xi[1,2,3]").is_none());
    assert!(r.case("completeness").is_none());
}

#[test]
fn every_mutation_is_caught() {
    for s in Suite::ALL {
        let (r, _) = run_suite(s, 2, 2, &SuiteOptions::mutated()).unwrap();
        assert!(r.mutated);
        assert!(r.failed > 0, "{s} survived its mutation");
    }
}

#[test]
fn family_filter() {
    let opts = SuiteOptions { families: Some(vec!["serre".into()]), ..SuiteOptions::default() };
    let (r, _) = run_suite(Suite::DjRelations, 3, 1, &opts).unwrap();
    assert!(!r.cases.is_empty());
    assert!(r.cases.iter().all(|c| c.family == "serre"));
}

#[test]
fn report_counts_and_json_shape() {
    let (r, tel) = run_suite(Suite::LemmaAlg, 2, 1, &SuiteOptions::default()).unwrap();
    assert_eq!(r.passed + r.failed + r.ambiguous, r.cases.len());
    assert_eq!(tel.cases, r.cases.len());
    let v = serde_json::to_value(&r).unwrap();
    for key in ["suite", "n", "k", "mutated", "passed", "failed", "ambiguous", "cases"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert!(v.get("identifications").is_none());
    let c = &v["cases"][0];
    for key in ["case_id", "family", "n", "k", "status", "reading", "residual_nnz", "residual_nonzero_entries"] {
        assert!(c.get(key).is_some(), "{key}");
    }
    assert_eq!(serde_json::to_string(&r).unwrap(), serde_json::to_string(&run(Suite::LemmaAlg, 2, 1)).unwrap());
}

#[test]
fn status_rules() {
    let zero = || Ok(SuperMatrix::zero(2, 2, 0));
    let one = || Ok(SuperMatrix::identity(2));
    let rd = |name: &str, f: Option<Residual<'static>>| Reading { name: name.into(), residual: f };
    let basis = TensorBasis::new(1, 1);
    let cases = vec![
        Case { id: "p".into(), family: "x".into(), readings: vec![rd("printed", Some(Box::new(zero))), rd("alt", Some(Box::new(one)))] },
        Case { id: "a".into(), family: "x".into(), readings: vec![rd("printed", Some(Box::new(one))), rd("alt", Some(Box::new(zero)))] },
        Case { id: "f".into(), family: "x".into(), readings: vec![rd("printed", Some(Box::new(one))), rd("alt", Some(Box::new(one)))] },
    ];
    let out = run_cases(&cases, 1, 1, basis);
    let st: Vec<_> = out.iter().map(|c| (c.case_id.as_str(), c.status, c.reading.as_str())).collect();
    assert_eq!(st, vec![("p", Status::Pass, "printed"), ("a", Status::Ambiguous, "alt"), ("f", Status::Fail, "printed")]);
    assert_eq!(out[2].residual_nnz, 2);
    assert_eq!(out[2].residual_nonzero_entries.len(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn exchange_relation_holds_on_v(a in 0usize..64, b in 0usize..64) {
        let n = 2;
        let pairs = frt::generator_pairs(n);
        let (i, j) = pairs[a % pairs.len()];
        let (k, l) = pairs[b % pairs.len()];
        let t = tij_coproduct_actions(n, 2).unwrap();
        let ev = Evaluator::new(TensorBasis::new(n, 2).dim(), |g| match g {
            G::T(x, y) => Ok(t[&(*x, *y)].clone()),
            _ => unreachable!(),
        });
        prop_assert!(ev.eval(&frt::exchange_residual(n, i, j, k, l, false)).unwrap().is_zero());
    }
}
