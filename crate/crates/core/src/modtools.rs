//! Submodules of `V⊗k`: maximal vectors, cyclic closures, direct-sum
//! certificates and split/non-split diagnosis.

use crate::error::{Error, Result};
use crate::natrep::GeneratorLabel;
use crate::qbrauer::{Brauer, Convention, StandardTableau};
use crate::qrat::RatFunc;
use crate::superlinalg::{column_relations, SuperMatrix, SuperVector, Subspace, TensorBasis};
use crate::tensorrep::{TensorModule, Weight};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, VecDeque};

/// An action-closed subspace of `V⊗k`.
#[derive(Clone, Debug)]
pub struct Submodule<'m> {
    pub parent: &'m TensorModule,
    pub space: Subspace,
    pub provenance: String,
}

impl<'m> Submodule<'m> {
    /// Span of `vectors`; fails unless the span is invariant.
    pub fn new(parent: &'m TensorModule, vectors: &[SuperVector], provenance: impl Into<String>) -> Result<Self> {
        let space = Subspace::from_vectors(parent.basis, vectors);
        Self::from_subspace(parent, space, provenance)
    }

    pub fn from_subspace(parent: &'m TensorModule, space: Subspace, provenance: impl Into<String>) -> Result<Self> {
        let provenance = provenance.into();
        if let Some(g) = first_escaping_generator(&space, parent) {
            return Err(Error::CertificateFailure(format!("{provenance} is not invariant under {g}")));
        }
        Ok(Self { parent, space, provenance })
    }

    /// Image of a module endomorphism.
    pub fn image(parent: &'m TensorModule, m: &SuperMatrix, provenance: impl Into<String>) -> Result<Self> {
        let cols: Vec<SuperVector> = (0..m.cols()).map(|c| m.column_vector(parent.basis, c)).collect();
        Self::new(parent, &cols, provenance)
    }

    pub fn full(parent: &'m TensorModule) -> Self {
        Self { parent, space: Subspace::full(parent.basis), provenance: format!("V⊗{}", parent.k) }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn vectors(&self) -> Vec<SuperVector> {
        self.space.vectors()
    }
}

fn first_escaping_generator(space: &Subspace, m: &TensorModule) -> Option<GeneratorLabel> {
    let vs = space.vectors();
    m.generators()
        .find(|(_, x)| vs.iter().any(|v| !space.contains(&x.apply(v).unwrap())))
        .map(|(g, _)| g.clone())
}

pub fn is_invariant(basis: &[SuperVector], m: &TensorModule) -> bool {
    first_escaping_generator(&Subspace::from_vectors(m.basis, basis), m).is_none()
}

/// Splits `v` into its weight components.
pub fn weight_components(v: &SuperVector) -> BTreeMap<Weight, SuperVector> {
    let b = v.basis;
    let mut parts: BTreeMap<Weight, Vec<(usize, RatFunc)>> = BTreeMap::new();
    for (i, c) in v.iter() {
        parts.entry(b.weight(i)).or_default().push((i, c.clone()));
    }
    parts.into_iter().map(|(w, es)| (w, SuperVector::from_entries(b, es))).collect()
}

/// Weight spaces `S_μ` of a weight submodule, each in echelon form.
pub fn weight_decomposition(space: &Subspace) -> BTreeMap<Weight, Subspace> {
    let mut out: BTreeMap<Weight, Vec<SuperVector>> = BTreeMap::new();
    for v in space.vectors() {
        for (w, part) in weight_components(&v) {
            out.entry(w).or_default().push(part);
        }
    }
    out.into_iter().map(|(w, vs)| (w, Subspace::from_vectors(space.basis, &vs))).collect()
}

/// Maximal vectors of one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalSpace {
    pub weight: Weight,
    pub vectors: Vec<SuperVector>,
}

/// Per weight, a basis of `{v ∈ S_μ : e_i v = ē_i v = 0}`.
pub fn maximal_vectors(space: &Subspace, m: &TensorModule) -> Vec<MaximalSpace> {
    let raising = m.raising();
    let dim = m.dim();
    let mut out = Vec::new();
    for (w, sw) in weight_decomposition(space) {
        let basis = sw.vectors();
        let stacked: Vec<Vec<(usize, RatFunc)>> = basis.iter().map(|v| stack(&raising, v, dim)).collect();
        let rels = column_relations(&stacked);
        if rels.is_empty() {
            continue;
        }
        let vectors = rels
            .into_iter()
            .map(|c| {
                let mut acc = SuperVector::zero(m.basis);
                for (j, x) in c {
                    acc = acc.add(&basis[j].scale(&x));
                }
                acc
            })
            .collect::<Vec<_>>();
        let vectors = crate::superlinalg::span_union(&vectors);
        out.push(MaximalSpace { weight: w, vectors });
    }
    out
}

/// `(X_1 v, X_2 v, …)` laid out as one sparse column.
fn stack(ops: &[&SuperMatrix], v: &SuperVector, dim: usize) -> Vec<(usize, RatFunc)> {
    let mut es = Vec::new();
    for (o, x) in ops.iter().enumerate() {
        for (i, c) in x.apply(v).unwrap().iter() {
            es.push((o * dim + i, c.clone()));
        }
    }
    es
}

/// Smallest invariant subspace containing `seeds`.
pub fn generated_submodule<'m>(seeds: &[SuperVector], m: &'m TensorModule) -> Submodule<'m> {
    let mut space = Subspace::zero(m.basis);
    let mut queue: VecDeque<SuperVector> = VecDeque::new();
    for s in seeds {
        if space.insert(s) {
            queue.push_back(s.clone());
        }
    }
    let gens: Vec<&SuperMatrix> = m.generators().map(|(_, x)| x).collect();
    while let Some(v) = queue.pop_front() {
        for x in &gens {
            let w = x.apply(&v).unwrap();
            if space.insert(&w) {
                queue.push_back(w);
            }
        }
    }
    Submodule { parent: m, space, provenance: "generated".into() }
}

/// Ranks of the verified summands.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectSumCertificate {
    pub summands: Vec<String>,
    pub ranks: Vec<usize>,
    pub total: usize,
}

/// Checks `p_a p_b = 0` for `a ≠ b`, `p_a² = p_a`, invariant images, and
/// `Σ rank p_a = dim V⊗k`.
pub fn direct_sum_certificate(projectors: &[(String, SuperMatrix)], m: &TensorModule) -> Result<DirectSumCertificate> {
    for (a, (na, pa)) in projectors.iter().enumerate() {
        if pa.matmul(pa)? != *pa {
            return Err(Error::CertificateFailure(format!("{na} is not idempotent")));
        }
        for (b, (nb, pb)) in projectors.iter().enumerate() {
            if a != b && !pa.matmul(pb)?.is_zero() {
                return Err(Error::CertificateFailure(format!("{na}·{nb} ≠ 0")));
            }
        }
    }
    let mut ranks = Vec::new();
    for (name, p) in projectors {
        ranks.push(Submodule::image(m, p, name.clone())?.dim());
    }
    let total: usize = ranks.iter().sum();
    if total != m.dim() {
        return Err(Error::CertificateFailure(format!("ranks sum to {total}, expected {}", m.dim())));
    }
    Ok(DirectSumCertificate { summands: projectors.iter().map(|p| p.0.clone()).collect(), ranks, total })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Irreducible,
    Split,
    ReducibleIndecomposable,
    Undetermined,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Irreducible => "irreducible",
            Verdict::Split => "split",
            Verdict::ReducibleIndecomposable => "reducible-indecomposable",
            Verdict::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: String,
    pub weights: Vec<Weight>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitnessReport {
    pub summand: String,
    pub rank: usize,
    pub maximal_weights: Vec<Weight>,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

/// Decides whether `S` splits, using the maximal lines of `S`.
///
/// With one maximal line per weight, a decomposition `S = X ⊕ Y` puts every
/// maximal line into `X` or `Y`. So `S` is indecomposable if for every
/// bipartition of the lines the generated submodules meet, and split if
/// some bipartition gives complementary submodules.
pub fn splitness_report(s: &Submodule) -> SplitnessReport {
    let m = s.parent;
    let maxes = maximal_vectors(&s.space, m);
    let maximal_weights: Vec<Weight> = maxes.iter().map(|x| x.weight.clone()).collect();
    let mut witnesses = Vec::new();
    let report = |verdict, witnesses| SplitnessReport {
        summand: s.provenance.clone(),
        rank: s.dim(),
        maximal_weights: maximal_weights.clone(),
        verdict,
        witnesses,
    };
    if s.dim() == 0 || maxes.iter().any(|x| x.vectors.len() != 1) {
        for x in &maxes {
            witnesses.push(Witness { kind: "maximal-space".into(), weights: vec![x.weight.clone()], dim: x.vectors.len() });
        }
        return report(Verdict::Undetermined, witnesses);
    }
    let lines: Vec<&SuperVector> = maxes.iter().map(|x| &x.vectors[0]).collect();
    let cyclic: Vec<Subspace> = lines.iter().map(|v| generated_submodule(&[(*v).clone()], m).space).collect();
    for (x, c) in maxes.iter().zip(&cyclic) {
        witnesses.push(Witness { kind: "cyclic".into(), weights: vec![x.weight.clone()], dim: c.dim() });
    }
    let r = lines.len();
    if r == 1 {
        let verdict = if cyclic[0].dim() == s.dim() { Verdict::Irreducible } else { Verdict::ReducibleIndecomposable };
        return report(verdict, witnesses);
    }
    let mut all_meet = true;
    // bipartitions with line 0 on the left
    for mask in 0..(1u32 << (r - 1)) {
        let left: Vec<usize> = (0..r).filter(|&i| i == 0 || (mask >> (i - 1)) & 1 == 0).collect();
        let right: Vec<usize> = (0..r).filter(|i| !left.contains(i)).collect();
        if right.is_empty() {
            continue;
        }
        let gen = |idx: &[usize]| -> Subspace {
            let mut acc = Subspace::zero(m.basis);
            for &i in idx {
                acc = acc.sum(&cyclic[i]);
            }
            acc
        };
        let (a, b) = (gen(&left), gen(&right));
        let meet = a.intersection_dim(&b);
        let ws = |idx: &[usize]| idx.iter().map(|&i| maxes[i].weight.clone()).collect::<Vec<_>>();
        if meet == 0 {
            all_meet = false;
            if a.dim() + b.dim() == s.dim() {
                witnesses.push(Witness { kind: "summand".into(), weights: ws(&left), dim: a.dim() });
                witnesses.push(Witness { kind: "summand".into(), weights: ws(&right), dim: b.dim() });
                return report(Verdict::Split, witnesses);
            }
        } else {
            let mut all = ws(&left);
            all.extend(ws(&right));
            witnesses.push(Witness { kind: "intersection".into(), weights: all, dim: meet });
        }
    }
    report(if all_meet { Verdict::ReducibleIndecomposable } else { Verdict::Undetermined }, witnesses)
}

/// `y_T V⊗k` for every standard tableau of size `k` with at most `n` rows.
pub fn symmetrizer_summands(br: &Brauer) -> Result<Vec<(StandardTableau, SuperMatrix)>> {
    let entries: Vec<usize> = (1..=br.k).collect();
    StandardTableau::all_on(&entries)
        .into_iter()
        .filter(|t| t.rows.len() <= br.n)
        .map(|t| {
            let y = br.young_symmetrizer(&t)?.y;
            Ok((t, y))
        })
        .collect()
}

pub fn summand_name(t: &StandardTableau) -> String {
    format!("y_{{{}}}", t.label())
}

/// One contraction `𝖼_{r,s}` on `V⊗k` viewed as a copy of `V⊗(k−2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionImage {
    pub r: usize,
    pub s: usize,
    pub rank: usize,
    pub invariant: bool,
    pub intertwines: bool,
    pub summands: Vec<SplitnessReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionAnalysis {
    pub n: usize,
    pub k: usize,
    pub images: Vec<ContractionImage>,
    pub completely_reducible: bool,
    pub reason: String,
}

/// For each `r < s`, checks that `𝖼_{r,s}V⊗k` is an invariant subspace of rank
/// `(2n)^{k−2}`, that `φ(v) = h(σ_{r,s})(θ ⊗ v)` intertwines `V⊗(k−2)` with
/// it, and transports the splitness analysis of the `V⊗(k−2)` summands.
pub fn contraction_image_analysis(n: usize, k: usize, conv: Convention) -> Result<ContractionAnalysis> {
    if k < 4 {
        return Err(Error::ShapeError(format!("contraction analysis needs k ≥ 4, got {k}")));
    }
    let big = TensorModule::new(n, k)?;
    let small = TensorModule::new(n, k - 2)?;
    let br = Brauer::new(n, k);
    let small_br = Brauer::new(n, k - 2);
    let summands = symmetrizer_summands(&small_br)?;
    let expected = small.dim();
    let theta_tail = theta_embedding(n, k)?;
    let mut images = Vec::new();
    let mut witness: Option<String> = None;
    for r in 1..=k {
        for s in r + 1..=k {
            let crs = br.c_rs(r, s, conv)?;
            let img = Submodule::image(&big, &crs, format!("c_{{{r},{s}}}V⊗{k}"));
            let (rank, invariant) = match &img {
                Ok(sm) => (sm.dim(), true),
                Err(_) => (crate::superlinalg::rank(&crs), false),
            };
            let sigma = crate::qbrauer::sigma_rs(r, s, k, conv);
            let phi = br.hecke(&sigma).matmul(&theta_tail)?;
            let mut intertwines = true;
            for (g, x) in small.generators() {
                let xb = big.action_ref(g).expect("same generator set");
                if xb.matmul(&phi)? != phi.matmul(x)? {
                    intertwines = false;
                }
            }
            let mut reports = Vec::new();
            if intertwines && invariant {
                for (t, y) in &summands {
                    let vecs: Vec<SuperVector> =
                        (0..y.cols()).map(|c| phi.apply_into(&y.column_vector(small.basis, c), big.basis)).collect::<Result<_>>()?;
                    let name = format!("φ_{{{r},{s}}}({}V⊗{})", summand_name(t), k - 2);
                    let sm = Submodule::new(&big, &vecs, name.clone())?;
                    let rep = splitness_report(&sm);
                    if rep.verdict == Verdict::ReducibleIndecomposable && witness.is_none() {
                        witness = Some(name);
                    }
                    reports.push(rep);
                }
            }
            images.push(ContractionImage { r, s, rank, invariant: invariant && rank == expected, intertwines, summands: reports });
        }
    }
    let completely_reducible = witness.is_none();
    let reason = match witness {
        Some(w) => format!("{w} is a reducible indecomposable submodule, so V⊗{k} is not completely reducible"),
        None => "no reducible indecomposable submodule found".into(),
    };
    Ok(ContractionAnalysis { n, k, images, completely_reducible, reason })
}

/// `ψ : V⊗(k−2) → V⊗k`, `v ↦ (−1)^{p(v)} θ ⊗ v` with `θ = Σ_i u_i ⊗ u_{−i}` in
/// slots 1, 2. `θ` is odd, so the sign makes `ψ` an even module map.
pub fn theta_embedding(n: usize, k: usize) -> Result<SuperMatrix> {
    let big = TensorBasis::new(n, k);
    let small = TensorBasis::new(n, k - 2);
    let labels = TensorBasis::new(n, 1).labels();
    let mut es = Vec::new();
    for c in 0..small.dim() {
        let tail = small.tuple(c);
        let sign = RatFunc::from_int(if small.parity(c) == 1 { -1 } else { 1 });
        for &a in &labels {
            let mut t = vec![a, -a];
            t.extend(&tail);
            es.push((big.index(&t)?, c, sign.clone()));
        }
    }
    Ok(SuperMatrix::from_entries(big.dim(), small.dim(), 0, es))
}

#[cfg(test)]
mod tests;
