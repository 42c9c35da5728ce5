use periplectiq::modtools::*;
use periplectiq::qbrauer::{Brauer, Convention, StandardTableau};
use periplectiq::qrat::RatFunc;
use periplectiq::superlinalg::{Subspace, SuperMatrix, SuperVector};
use periplectiq::tensorrep::TensorModule;

fn rf(s: &str) -> RatFunc {
    s.parse().unwrap()
}

fn tab(rows: &[&[usize]]) -> StandardTableau {
    StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn y(br: &Brauer, rows: &[&[usize]]) -> SuperMatrix {
    br.young_symmetrizer(&tab(rows)).unwrap().y
}

fn image(m: &SuperMatrix, br: &Brauer) -> Subspace {
    let cols: Vec<SuperVector> = (0..m.cols()).map(|c| m.column_vector(br.basis, c)).collect();
    Subspace::from_vectors(br.basis, &cols)
}

fn is_maximal(v: &SuperVector, m: &TensorModule) -> bool {
    !v.is_zero() && m.raising().iter().all(|x| x.apply(v).unwrap().is_zero())
}

fn apply(x: &SuperMatrix, br: &Brauer, t: &[i32]) -> SuperVector {
    x.apply(&SuperVector::from_tuple(br.basis, t).unwrap()).unwrap()
}

#[test]
fn k2_summands_are_indecomposable() {
    for n in [2, 3] {
        let m = TensorModule::new(n, 2).unwrap();
        let br = Brauer::new(n, 2);
        let ys = symmetrizer_summands(&br).unwrap();
        let named: Vec<_> = ys.iter().map(|(t, y)| (summand_name(t), y.clone())).collect();
        let cert = direct_sum_certificate(&named, &m).unwrap();
        assert_eq!(cert.total, (2 * n).pow(2));
        assert_eq!(cert.summands, vec!["y_{12}", "y_{1,2}"]);
        for (name, p) in &named {
            let rep = splitness_report(&Submodule::image(&m, p, name.clone()).unwrap());
            assert_eq!(rep.verdict, Verdict::ReducibleIndecomposable, "{name} n={n}");
        }
    }
}

#[test]
fn k2_maximal_lines_by_summand() {
    let n = 3;
    let m = TensorModule::new(n, 2).unwrap();
    let br = Brauer::new(n, 2);
    let th1 = SuperVector::from_tuple(br.basis, &[1, 1]).unwrap();
    let th2 = apply(&y(&br, &[&[1], &[2]]), &br, &[1, 2]);
    let th3 = apply(&br.c[0], &br, &[1, -1]);
    let sym = Submodule::image(&m, &y(&br, &[&[1, 2]]), "y_{12}").unwrap();
    let alt = Submodule::image(&m, &y(&br, &[&[1], &[2]]), "y_{1,2}").unwrap();
    let span = |ms: &[MaximalSpace]| {
        let vs: Vec<SuperVector> = ms.iter().flat_map(|x| x.vectors.clone()).collect();
        Subspace::from_vectors(br.basis, &vs)
    };
    let s = span(&maximal_vectors(&sym.space, &m));
    assert_eq!(s.dim(), 2);
    assert!(s.contains(&th1) && s.contains(&th3));
    let a = span(&maximal_vectors(&alt.space, &m));
    assert_eq!(a.dim(), 1);
    assert!(a.contains(&th2));
}

/// The seven vectors of weight `≥ ε_1` built from contractions and symmetrizers
/// on `V⊗3`, with the combinations assigned to each summand.
#[test]
fn k3_maximal_combinations_lie_in_their_summands() {
    let n = 3;
    let m = TensorModule::new(n, 3).unwrap();
    let br = Brauer::new(n, 3);
    let (c1, c2, t2) = (&br.c[0], &br.c[1], &br.t[1]);
    let th1 = apply(c1, &br, &[1, -1, 1]);
    let th2 = apply(&t2.matmul(c1).unwrap().matmul(c2).unwrap(), &br, &[1, 1, -1]);
    let th3 = apply(c2, &br, &[1, 1, -1]);
    let (y123, y12_3, y13_2, y1_2_3) = (y(&br, &[&[1, 2, 3]]), y(&br, &[&[1, 2], &[3]]), y(&br, &[&[1, 3], &[2]]), y(&br, &[&[1], &[2], &[3]]));
    let th4 = apply(&y123, &br, &[1, 1, 1]);
    let th5 = apply(&y12_3, &br, &[1, 1, 2]);
    let th6 = apply(&y13_2, &br, &[1, 2, 1]);
    let th7 = apply(&y1_2_3, &br, &[1, 2, 3]);
    let lin = |terms: &[(&str, &SuperVector)]| terms.iter().fold(SuperVector::zero(br.basis), |acc, (c, v)| acc.add(&v.scale(&rf(c))));
    let k1 = lin(&[("1", &th1), ("q", &th2), ("q^2", &th3)]);
    let k2 = lin(&[("-1", &th1), ("-q + q^-1", &th2), ("1", &th3)]);
    let k3 = lin(&[("-q", &th2), ("1", &th3)]);
    let claims: [(&SuperMatrix, Vec<&SuperVector>); 4] =
        [(&y123, vec![&th4, &k1]), (&y12_3, vec![&th5, &k2]), (&y13_2, vec![&th6, &k3]), (&y1_2_3, vec![&th7])];
    for (idx, (p, vs)) in claims.iter().enumerate() {
        let img = image(p, &br);
        for v in vs {
            assert!(is_maximal(v, &m), "summand {idx}");
            assert!(img.contains(v), "summand {idx}");
        }
    }
    // together they span the whole maximal space away from the extra n = k line
    let all = Subspace::from_vectors(br.basis, &[th4, k1, th5, k2, th6, k3, th7]);
    assert_eq!(all.dim(), 7);
}

#[test]
fn k3_contraction_kernel_of_the_symmetric_cube() {
    let br = Brauer::new(3, 3);
    let (c1, c2, t2) = (&br.c[0], &br.c[1], &br.t[1]);
    let c1c2 = c1.matmul(c2).unwrap();
    let kk = c1c2.add(&t2.matmul(&c1c2).unwrap().scale(&rf("q"))).unwrap().add(&c2.scale(&rf("q^2"))).unwrap();
    assert_eq!(y(&br, &[&[1, 2, 3]]).matmul(&kk).unwrap(), kk);
    let th1 = apply(c1, &br, &[1, -1, 1]);
    let th2 = apply(&t2.matmul(&c1c2).unwrap(), &br, &[1, 1, -1]);
    let th3 = apply(c2, &br, &[1, 1, -1]);
    let expected = th1.add(&th2.scale(&rf("q"))).add(&th3.scale(&rf("q^2")));
    assert_eq!(apply(&kk, &br, &[1, 1, -1]), expected);
}

#[test]
fn contraction_sandwich_scalar() {
    let br = Brauer::new(3, 3);
    let c2 = &br.c[1];
    let lhs = c2.matmul(&y(&br, &[&[1, 2], &[3]])).unwrap().matmul(c2).unwrap();
    assert_eq!(lhs, c2.scale(&rf("q^-2").div(&rf("q^2 + 1 + q^-2")).unwrap()));
}

#[test]
fn k3_decomposition_verdicts() {
    let n = 3;
    let m = TensorModule::new(n, 3).unwrap();
    let br = Brauer::new(n, 3);
    let ys = symmetrizer_summands(&br).unwrap();
    let named: Vec<_> = ys.iter().map(|(t, y)| (summand_name(t), y.clone())).collect();
    let cert = direct_sum_certificate(&named, &m).unwrap();
    assert_eq!(cert.total, 216);
    let reps: Vec<SplitnessReport> = named.iter().map(|(name, p)| splitness_report(&Submodule::image(&m, p, name.clone()).unwrap())).collect();
    let verdicts: Vec<(&str, Verdict)> = reps.iter().map(|r| (r.summand.as_str(), r.verdict)).collect();
    assert_eq!(
        verdicts,
        vec![
            ("y_{123}", Verdict::ReducibleIndecomposable),
            ("y_{12,3}", Verdict::Split),
            ("y_{13,2}", Verdict::Split),
            ("y_{1,2,3}", Verdict::ReducibleIndecomposable),
        ]
    );
    assert_eq!(reps[1].rank, reps[2].rank);
    assert_eq!(reps[1].maximal_weights, reps[2].maximal_weights);
    assert_eq!(reps[1].maximal_weights, vec![vec![1, 0, 0], vec![2, 1, 0]]);
}

#[test]
fn orthogonality_of_symmetrizers() {
    let br = Brauer::new(3, 3);
    let y123 = y(&br, &[&[1, 2, 3]]);
    for rows in [&[&[1usize, 2][..], &[3][..]][..], &[&[1, 3], &[2]], &[&[1], &[2], &[3]]] {
        assert!(y123.matmul(&y(&br, rows)).unwrap().is_zero());
    }
    let br2 = Brauer::new(2, 2);
    assert!(y(&br2, &[&[1, 2]]).matmul(&y(&br2, &[&[1], &[2]])).unwrap().is_zero());
}

#[test]
fn v4_is_not_completely_reducible_n2() {
    let a = contraction_image_analysis(2, 4, Convention::RightToLeft).unwrap();
    assert_eq!(a.images.len(), 6);
    for img in &a.images {
        assert!(img.invariant && img.intertwines, "c_{{{},{}}}", img.r, img.s);
        assert_eq!(img.rank, 16);
        assert!(img.summands.iter().all(|s| s.verdict == Verdict::ReducibleIndecomposable));
    }
    assert!(!a.completely_reducible);
}
