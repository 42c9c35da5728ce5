//! Acceptance criteria, one line each. All tolerances are exact: a check
//! passes only on an identically zero residual over Q(q).

use periplectiq::modtools::*;
use periplectiq::natrep::{dj_matrix, t_matrix, GeneratorLabel as G};
use periplectiq::qbrauer::{Brauer, Convention, StandardTableau};
use periplectiq::qrat::RatFunc;
use periplectiq::relcheck::{run_suite, Status, Suite, SuiteOptions, SuiteReport};
use periplectiq::superlinalg::{Subspace, SuperMatrix, SuperVector};
use periplectiq::tensorrep::{dictionary, TensorModule};
use std::io::Write;
use std::time::Instant;

/// Criteria whose literal statement is false; see `criterion_6`.
const UNATTAINABLE: &[u32] = &[6];

struct Outcome {
    id: u32,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn line(o: &Outcome) {
    let verdict = if o.pass { "PASS" } else { "FAIL" };
    let s = format!("criterion {:>2} [{verdict}] {}: {}\n", o.id, o.title, o.detail);
    // bypass the test harness capture so the line always shows
    let _ = std::io::stdout().write_all(s.as_bytes());
}

fn suite(s: Suite, n: usize, k: usize, families: Option<&[&str]>) -> SuiteReport {
    let opts = SuiteOptions { families: families.map(|f| f.iter().map(|x| x.to_string()).collect()), ..SuiteOptions::default() };
    run_suite(s, n, k, &opts).unwrap().0
}

/// No failures, and every non-printed pass uses one of the allowed readings.
fn clean(r: &SuiteReport, allowed: &[(&str, &str)]) -> Result<(), String> {
    for c in &r.cases {
        match c.status {
            Status::Pass => {}
            Status::Fail => return Err(format!("{} fails at n={} k={}", c.case_id, c.n, c.k)),
            Status::Ambiguous => {
                if !allowed.iter().any(|(prefix, reading)| c.case_id.starts_with(prefix) && c.reading == *reading) {
                    return Err(format!("{} passes only in undocumented reading {:?}", c.case_id, c.reading));
                }
            }
        }
    }
    Ok(())
}

fn run_all(title: &'static str, id: u32, checks: impl FnOnce() -> Result<String, String>) -> Outcome {
    let t0 = Instant::now();
    let (pass, detail) = match checks() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { id, title, pass, detail: format!("{detail} ({:.1}s)", t0.elapsed().as_secs_f64()) }
}

fn rf(s: &str) -> RatFunc {
    s.parse().unwrap()
}

fn tab(rows: &[&[usize]]) -> StandardTableau {
    StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn apply(x: &SuperMatrix, br: &Brauer, t: &[i32]) -> SuperVector {
    x.apply(&SuperVector::from_tuple(br.basis, t).unwrap()).unwrap()
}

fn criterion_1() -> Outcome {
    run_all("presentation sweep", 1, || {
        let t0 = Instant::now();
        let mut cases = 0;
        let mut ambiguous = 0;
        let runs: Vec<(usize, usize, Option<&[&str]>)> =
            vec![(2, 1, None), (2, 2, None), (3, 1, None), (3, 2, None), (3, 3, Some(&["serre", "fbar"]))];
        for (n, k, fam) in runs {
            let r = suite(Suite::DjRelations, n, k, fam);
            clean(&r, &[("serre_e2", "index-i+1")])?;
            cases += r.cases.len();
            ambiguous += r.ambiguous;
        }
        if t0.elapsed().as_secs() >= 300 {
            return Err(format!("took {:?}", t0.elapsed()));
        }
        Ok(format!("{cases} relation instances zero; {ambiguous} pass only in the documented Serre reading index-i+1"))
    })
}

fn criterion_2() -> Outcome {
    run_all("FRT exchange relation", 2, || {
        let mut cases = 0;
        for n in [2, 3] {
            for k in [1, 2] {
                let r = suite(Suite::Exprel, n, k, None);
                clean(&r, &[])?;
                cases += r.cases.len();
            }
        }
        Ok(format!("{cases} index quadruples with zero residual"))
    })
}

fn criterion_3() -> Outcome {
    run_all("dictionary and coproduct consistency", 3, || {
        for n in [2, 3] {
            for g in G::dj_generators(n) {
                let Some((i, j, c)) = dictionary(&g) else { continue };
                if dj_matrix(n, &g).unwrap() != t_matrix(n, i, j).unwrap().scale(&c) {
                    return Err(format!("{g} ≠ {c}·t[{i},{j}] on V, n={n}"));
                }
            }
        }
        let mut checked = 0;
        for n in [2, 3] {
            for k in 1..=3 {
                let r = suite(Suite::Coproduct, n, k, None);
                clean(&r, &[("comult[f", "corrected")])?;
                if r.cases.iter().any(|c| c.status == Status::Ambiguous && c.case_id.starts_with("comult[fbar")) {
                    return Err("fbar row needs a reading".into());
                }
                checked += r.cases.len();
            }
        }
        Ok(format!("{checked} coproduct checks for k ≤ 3; Δ(f_i) agrees in the weight-homogeneous reading F̄_i⊗ē_i"))
    })
}

fn criterion_4() -> Outcome {
    run_all("centralizer and Hecke relations", 4, || {
        let mut cases = 0;
        for n in [2, 3] {
            for k in [2, 3] {
                let r = suite(Suite::Centralizer, n, k, Some(&["commute", "hecke"]));
                clean(&r, &[])?;
                cases += r.cases.len();
            }
        }
        Ok(format!("{cases} commutation, quadratic and braid checks"))
    })
}

fn criterion_5() -> Outcome {
    run_all("Young symmetrizers", 5, || {
        let mut cases = 0;
        let mut expansions = 0;
        for (n, k) in [(2, 2), (3, 2), (3, 3)] {
            let r = suite(Suite::Centralizer, n, k, Some(&["symmetrizer"]));
            clean(&r, &[])?;
            cases += r.cases.len();
            expansions += r.cases.iter().filter(|c| c.case_id.starts_with("expansion")).count();
        }
        if expansions != 2 + 2 + 4 {
            return Err(format!("expected 8 expansion checks, got {expansions}"));
        }
        Ok(format!("{cases} checks: x_T² = ξx_T, y_T² = y_T, displayed expansions, absorption, orthogonality, completeness"))
    })
}

/// The literal statement. It is false at `n = k`: the raising kernel has one
/// extra line of weight `ε_1 + … + ε_{k−1} − ε_k`, so the dimensions are 4
/// and 8. The `n = k + 1` counts and the θ-annihilation checks hold.
fn criterion_6() -> Outcome {
    run_all("maximal vectors", 6, || {
        let mut problems = Vec::new();
        let mut notes = Vec::new();
        for (n, k, expected) in [(2, 2, 3), (3, 2, 3), (3, 3, 7)] {
            let m = TensorModule::new(n, k).unwrap();
            let br = Brauer::new(n, k);
            let thetas: Vec<SuperVector> = if k == 2 {
                vec![
                    SuperVector::from_tuple(br.basis, &[1, 1]).unwrap(),
                    apply(&br.young_symmetrizer(&tab(&[&[1], &[2]])).unwrap().y, &br, &[1, 2]),
                    apply(&br.c[0], &br, &[1, -1]),
                ]
            } else {
                let y = |rows: &[&[usize]]| br.young_symmetrizer(&tab(rows)).unwrap().y;
                vec![
                    apply(&br.c[0], &br, &[1, -1, 1]),
                    apply(&br.t[1].matmul(&br.c[0]).unwrap().matmul(&br.c[1]).unwrap(), &br, &[1, 1, -1]),
                    apply(&br.c[1], &br, &[1, 1, -1]),
                    apply(&y(&[&[1, 2, 3]]), &br, &[1, 1, 1]),
                    apply(&y(&[&[1, 2], &[3]]), &br, &[1, 1, 2]),
                    apply(&y(&[&[1, 3], &[2]]), &br, &[1, 2, 1]),
                    apply(&y(&[&[1], &[2], &[3]]), &br, &[1, 2, 3]),
                ]
            };
            for (i, v) in thetas.iter().enumerate() {
                if v.is_zero() || m.raising().iter().any(|x| !x.apply(v).unwrap().is_zero()) {
                    problems.push(format!("θ_{} not maximal (n={n}, k={k})", i + 1));
                }
            }
            let kernel: Vec<SuperVector> = maximal_vectors(&Subspace::full(m.basis), &m).into_iter().flat_map(|x| x.vectors).collect();
            let ks = Subspace::from_vectors(m.basis, &kernel);
            let ts = Subspace::from_vectors(m.basis, &thetas);
            let spans = ks.contains_subspace(&ts) && ts.dim() == ks.dim();
            notes.push(format!("V⊗{k} n={n}: kernel {}", ks.dim()));
            if ks.dim() != expected || !spans {
                problems.push(format!("V⊗{k}, n={n}: kernel dim {} (claimed {expected}), θ span {}", ks.dim(), ts.dim()));
            }
        }
        if problems.is_empty() {
            Ok(notes.join("; "))
        } else {
            Err(problems.join("; "))
        }
    })
}

fn criterion_7() -> Outcome {
    run_all("decompositions of V⊗2 and V⊗3", 7, || {
        let verdicts = |n: usize, k: usize| -> Result<Vec<SplitnessReport>, String> {
            let m = TensorModule::new(n, k).unwrap();
            let br = Brauer::new(n, k);
            let ys = symmetrizer_summands(&br).unwrap();
            let named: Vec<_> = ys.iter().map(|(t, y)| (summand_name(t), y.clone())).collect();
            let cert = direct_sum_certificate(&named, &m).map_err(|e| e.to_string())?;
            if cert.total != (2 * n).pow(k as u32) {
                return Err(format!("ranks sum to {}", cert.total));
            }
            named
                .iter()
                .map(|(name, p)| Submodule::image(&m, p, name.clone()).map(|s| splitness_report(&s)).map_err(|e| e.to_string()))
                .collect()
        };
        for n in [2, 3] {
            for r in verdicts(n, 2)? {
                if r.verdict != Verdict::ReducibleIndecomposable {
                    return Err(format!("{} at n={n} is {}", r.summand, r.verdict));
                }
            }
        }
        let r = verdicts(3, 3)?;
        let got: Vec<Verdict> = r.iter().map(|x| x.verdict).collect();
        let want = [Verdict::ReducibleIndecomposable, Verdict::Split, Verdict::Split, Verdict::ReducibleIndecomposable];
        if got != want {
            return Err(format!("k=3 verdicts {got:?}"));
        }
        if r[1].rank != r[2].rank || r[1].maximal_weights != r[2].maximal_weights {
            return Err("y_{12,3} and y_{13,2} profiles differ".into());
        }
        let br = Brauer::new(3, 3);
        let c2 = &br.c[1];
        let y = br.young_symmetrizer(&tab(&[&[1, 2], &[3]])).unwrap().y;
        if c2.matmul(&y).unwrap().matmul(c2).unwrap() != c2.scale(&rf("q^-2").div(&rf("q^2 + 1 + q^-2")).unwrap()) {
            return Err("𝖼_2 y_{12,3} 𝖼_2 scalar identity fails".into());
        }
        Ok(format!("certificates hold; k=3 ranks {:?}; y_{{12,3}} ≅ y_{{13,2}}; 𝖼_2y_{{12,3}}𝖼_2 = q⁻²/[3]·𝖼_2", r.iter().map(|x| x.rank).collect::<Vec<_>>()))
    })
}

fn criterion_8() -> Outcome {
    run_all("V⊗k not completely reducible", 8, || {
        let a = contraction_image_analysis(3, 4, Convention::RightToLeft).map_err(|e| e.to_string())?;
        for img in &a.images {
            if !(img.invariant && img.intertwines && img.rank == 36) {
                return Err(format!("c_{{{},{}}}V⊗4: rank {}, invariant {}, intertwines {}", img.r, img.s, img.rank, img.invariant, img.intertwines));
            }
            if img.summands.len() != 2 || img.summands.iter().any(|s| s.verdict != Verdict::ReducibleIndecomposable) {
                return Err(format!("c_{{{},{}}}V⊗4 does not reproduce the k=2 verdicts", img.r, img.s));
            }
        }
        if a.completely_reducible {
            return Err(a.reason);
        }
        Ok(format!("k=2,3 by criterion 7; n=3, k=4: all {} images 𝖼_{{r,s}}V⊗4 ≅ V⊗2, {}", a.images.len(), a.reason))
    })
}

fn criterion_9() -> Outcome {
    run_all("classical limit", 9, || {
        let mut cases = 0;
        for n in [2, 3] {
            let r = suite(Suite::Classical, n, 1, None);
            clean(&r, &[("eb1_e1e", "-ebar_i; Fbar=-2E")])?;
            let passing: Vec<&str> = r.identifications.iter().filter(|o| o.failing_cases.is_empty()).map(|o| o.identification.as_str()).collect();
            if passing.len() != 1 {
                return Err(format!("n={n}: passing identifications {passing:?}"));
            }
            if !r.cases.iter().any(|c| c.case_id.starts_with("supbr")) || !r.cases.iter().any(|c| c.case_id.starts_with("pole_free")) {
                return Err("missing supbr or pole-free checks".into());
            }
            cases += r.cases.len();
        }
        Ok(format!("{cases} checks at q=1; unique identification Fbar=-2E; [ē_{{i+1}},[e_{{i+1}},e_i]] = −ē_i reading"))
    })
}

fn criterion_10() -> Outcome {
    run_all("divided powers", 10, || {
        let opts = SuiteOptions { max_m: 3, ..SuiteOptions::default() };
        let r = run_suite(Suite::DividedPowers, 2, 2, &opts).unwrap().0;
        clean(&r, &[("f_e(m)", "q^{m-1},q/2")])?;
        if r.cases.iter().any(|c| c.case_id.starts_with("e_f") && c.status != Status::Pass) {
            return Err("e f^(m) identity needs a reading".into());
        }
        Ok(format!("{} identities for m ≤ 3; (a) as printed, (b) in reading q^(m-1), q/2", r.cases.len()))
    })
}

fn criterion_11() -> Outcome {
    run_all("negative controls", 11, || {
        let mut counts = Vec::new();
        for s in Suite::ALL {
            let r = run_suite(s, 2, 2, &SuiteOptions::mutated()).unwrap().0;
            if r.failed == 0 {
                return Err(format!("{s} survives --mutate"));
            }
            counts.push(format!("{s}:{}", r.failed));
        }
        Ok(format!("failures under --mutate: {}", counts.join(" ")))
    })
}

#[test]
fn acceptance() {
    let criteria: [fn() -> Outcome; 11] =
        [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9, criterion_10, criterion_11];
    let outcomes: Vec<Outcome> = criteria
        .iter()
        .map(|f| {
            let o = f();
            line(&o);
            o
        })
        .collect();
    let unexpected: Vec<u32> = outcomes.iter().filter(|o| o.pass == UNATTAINABLE.contains(&o.id)).map(|o| o.id).collect();
    let passed = outcomes.iter().filter(|o| o.pass).count();
    let _ = std::io::stdout().write_all(format!("acceptance: {passed}/11 criteria pass; failing as documented: {UNATTAINABLE:?}\n").as_bytes());
    assert!(unexpected.is_empty(), "criteria with unexpected outcome: {unexpected:?}");
}
