use super::*;
use num_rational::BigRational;
use num_traits::Zero;

fn rf(s: &str) -> RatFunc {
    s.parse().unwrap()
}

/// Dense rank over Q after substituting q = 7/3.
fn numeric_rank(rows: Vec<Vec<BigRational>>) -> usize {
    let mut m = rows;
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let piv = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &piv;
                for j in c..ncols {
                    let d = &f * &m[rank][j];
                    m[r][j] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn at_seven_thirds(x: &SuperMatrix) -> Vec<Vec<BigRational>> {
    let q = BigRational::new(7.into(), 3.into());
    let mut d = vec![vec![BigRational::zero(); x.cols()]; x.rows()];
    for (r, c, v) in x.entries() {
        d[r][c] = v.eval(&q).unwrap();
    }
    d
}

fn raising_kernel_dim_numeric(m: &TensorModule) -> usize {
    let mut rows = Vec::new();
    for x in m.raising() {
        rows.extend(at_seven_thirds(x));
    }
    m.dim() - numeric_rank(rows)
}

fn theta3(n: usize) -> SuperVector {
    let b = TensorBasis::new(n, 2);
    SuperVector::from_tuples(b, b.labels().into_iter().map(|a| (vec![a, -a], RatFunc::one()))).unwrap()
}

fn total(ms: &[MaximalSpace]) -> usize {
    ms.iter().map(|x| x.vectors.len()).sum()
}

#[test]
fn maximal_vectors_of_v2() {
    let m = TensorModule::new(3, 2).unwrap();
    let ms = maximal_vectors(&Subspace::full(m.basis), &m);
    assert_eq!(total(&ms), 3);
    assert_eq!(total(&ms), raising_kernel_dim_numeric(&m));
    let ws: Vec<Weight> = ms.iter().map(|x| x.weight.clone()).collect();
    assert_eq!(ws, vec![vec![0, 0, 0], vec![1, 1, 0], vec![2, 0, 0]]);
    for x in &ms {
        for v in &x.vectors {
            for r in m.raising() {
                assert!(r.apply(v).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn extra_maximal_vector_when_n_equals_k() {
    let m = TensorModule::new(2, 2).unwrap();
    let ms = maximal_vectors(&Subspace::full(m.basis), &m);
    assert_eq!(total(&ms), 4);
    assert_eq!(raising_kernel_dim_numeric(&m), 4);
    let extra = ms.iter().find(|x| x.weight == vec![1, -1]).unwrap();
    // u_1⊗u_{−2} − q u_{−2}⊗u_1, up to scale
    let v = SuperVector::from_tuples(m.basis, [(vec![1, -2], rf("1")), (vec![-2, 1], rf("-q"))]).unwrap();
    assert_eq!(extra.vectors[0], v.normalized());
}

#[test]
fn trivial_line_spanned_by_theta3() {
    let m = TensorModule::new(2, 2).unwrap();
    let s = Submodule::new(&m, &[theta3(2)], "θ_3").unwrap();
    let ms = maximal_vectors(&s.space, &m);
    assert_eq!(ms.len(), 1);
    assert_eq!(ms[0].weight, vec![0, 0]);
    assert_eq!(generated_submodule(&[theta3(2)], &m).dim(), 1);
    assert_eq!(generated_submodule(&[], &m).dim(), 0);
    assert_eq!(generated_submodule(&[SuperVector::zero(m.basis)], &m).dim(), 0);
}

#[test]
fn theta1_generates_symmetric_square() {
    let m = TensorModule::new(2, 2).unwrap();
    let br = Brauer::new(2, 2);
    let y = br.young_symmetrizer(&StandardTableau::new(vec![vec![1, 2]]).unwrap()).unwrap().y;
    let img = Submodule::image(&m, &y, "y_12").unwrap();
    let gen = generated_submodule(&[SuperVector::from_tuple(m.basis, &[1, 1]).unwrap()], &m);
    assert_eq!(gen.space, img.space);
    assert_eq!(img.dim(), 8);
}

#[test]
fn invariance_checks() {
    let m = TensorModule::new(2, 2).unwrap();
    let u12 = SuperVector::from_tuple(m.basis, &[1, 2]).unwrap();
    assert!(!is_invariant(&[u12.clone()], &m));
    assert!(matches!(Submodule::new(&m, &[u12], "u_1⊗u_2"), Err(Error::CertificateFailure(_))));
    assert!(is_invariant(&Subspace::full(m.basis).vectors(), &m));
    assert!(is_invariant(&[theta3(2)], &m));
}

#[test]
fn k2_certificate_and_verdicts() {
    for n in [2, 3] {
        let m = TensorModule::new(n, 2).unwrap();
        let br = Brauer::new(n, 2);
        let ys = symmetrizer_summands(&br).unwrap();
        let named: Vec<(String, SuperMatrix)> = ys.iter().map(|(t, y)| (summand_name(t), y.clone())).collect();
        let cert = direct_sum_certificate(&named, &m).unwrap();
        assert_eq!(cert.total, (2 * n) * (2 * n));
        assert_eq!(cert.ranks, vec![2 * n * n, 2 * n * n]);
        for (t, y) in &ys {
            let s = Submodule::image(&m, y, summand_name(t)).unwrap();
            let rep = splitness_report(&s);
            assert_eq!(rep.verdict, Verdict::ReducibleIndecomposable, "n={n} {}", t.label());
        }
    }
}

#[test]
fn certificate_rejects_overlapping_projectors() {
    let m = TensorModule::new(2, 2).unwrap();
    let id = SuperMatrix::identity(16);
    let r = direct_sum_certificate(&[("a".into(), id.clone()), ("b".into(), id)], &m);
    assert!(matches!(r, Err(Error::CertificateFailure(_))));
    let half = SuperMatrix::identity(16).scale(&rf("2"));
    assert!(direct_sum_certificate(&[("2".into(), half)], &m).is_err());
}

#[test]
fn irreducible_trivial_summand() {
    let m = TensorModule::new(2, 2).unwrap();
    let s = Submodule::new(&m, &[theta3(2)], "θ_3").unwrap();
    let rep = splitness_report(&s);
    assert_eq!(rep.verdict, Verdict::Irreducible);
    assert_eq!(rep.rank, 1);
    let j = serde_json::to_value(&rep).unwrap();
    assert_eq!(j["verdict"], "irreducible");
    assert_eq!(j["maximal_weights"], serde_json::json!([[0, 0]]));
}

#[test]
fn theta_embedding_intertwines() {
    let (n, k) = (2, 3);
    let big = TensorModule::new(n, k).unwrap();
    let small = TensorModule::new(n, 1).unwrap();
    let psi = theta_embedding(n, k).unwrap();
    assert_eq!(crate::superlinalg::rank(&psi), 4);
    for (g, x) in small.generators() {
        let xb = big.action_ref(g).unwrap();
        assert_eq!(xb.matmul(&psi).unwrap(), psi.matmul(x).unwrap(), "{g}");
    }
}
