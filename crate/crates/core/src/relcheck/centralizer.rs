//! Brauer operators on `V⊗k`: commutation with the action, Hecke relations,
//! and the Young symmetrizers built from them.

use super::{run_cases, Case, Suite, SuiteOptions, SuiteReport};
use crate::error::{Error, Result};
use crate::qbrauer::{Brauer, Convention, StandardTableau, Symmetrizer};
use crate::qrat::RatFunc;
use crate::superlinalg::SuperMatrix;
use crate::tensorrep::TensorModule;

type Expansion = (Vec<(&'static str, Vec<usize>)>, &'static str);

/// Hecke-word expansions of the `k ≤ 3` symmetrizers with their normalizing denominators.
fn known_expansion(t: &StandardTableau) -> Option<Expansion> {
    let terms = |ts: &[(&'static str, &[usize])]| ts.iter().map(|(c, w)| (*c, w.to_vec())).collect::<Vec<_>>();
    Some(match t.label().as_str() {
        "12" => (terms(&[("1", &[]), ("q", &[1])]), "1 + q^2"),
        "1,2" => (terms(&[("1", &[]), ("-q^-1", &[1])]), "1 + q^-2"),
        "123" => (
            terms(&[("1", &[]), ("q", &[1]), ("q", &[2]), ("q^2", &[1, 2]), ("q^2", &[2, 1]), ("q^3", &[1, 2, 1])]),
            "1 + 2q^2 + 2q^4 + q^6",
        ),
        "12,3" => (
            terms(&[("1", &[]), ("q", &[1]), ("q - q^-1", &[2]), ("-1", &[1, 2]), ("q^2 - 1", &[2, 1]), ("-q", &[1, 2, 1])]),
            "q^-2 + 1 + q^2",
        ),
        "13,2" => (terms(&[("1", &[]), ("-q^-1", &[1]), ("-q^2", &[2, 1]), ("q", &[1, 2, 1])]), "q^-2 + 1 + q^2"),
        "1,2,3" => (
            terms(&[("1", &[]), ("-q^-1", &[1]), ("-q^-1", &[2]), ("q^-2", &[1, 2]), ("q^-2", &[2, 1]), ("-q^-3", &[1, 2, 1])]),
            "1 + 2q^-2 + 2q^-4 + q^-6",
        ),
        _ => return None,
    })
}

fn expand(br: &Brauer, (terms, den): &Expansion) -> Result<SuperMatrix> {
    let d = br.basis.dim();
    let mut acc = SuperMatrix::zero(d, d, 0);
    for (c, w) in terms {
        acc = acc.add_scaled(&br.hecke_word(w), &c.parse()?)?;
    }
    Ok(acc.scale(&den.parse::<RatFunc>()?.inv()?))
}

fn sym(s: &Result<Symmetrizer>) -> Result<&Symmetrizer> {
    s.as_ref().map_err(|e| Error::SymmetrizerDegenerate(e.to_string()))
}

pub(crate) fn run(n: usize, k: usize, opts: &SuiteOptions) -> Result<SuiteReport> {
    let module = TensorModule::new(n, k)?;
    let br = Brauer::new(n, k);
    let conv = Convention::default();
    let entries: Vec<usize> = (1..=k).collect();
    let tableaux: Vec<StandardTableau> = if k >= 2 {
        StandardTableau::all_on(&entries).into_iter().filter(|t| t.rows.len() <= n).collect()
    } else {
        Vec::new()
    };
    let complete = tableaux.len() == StandardTableau::all_on(&entries).len();
    let syms: Vec<Result<Symmetrizer>> = tableaux.iter().map(|t| br.young_symmetrizer(t)).collect();
    let (m, b, syms, tableaux) = (&module, &br, &syms, &tableaux);
    let mut cases: Vec<Case> = Vec::new();

    for i in 1..k {
        for (g, _) in m.generators() {
            let (g1, g2) = (g.clone(), g.clone());
            cases.push(Case::single(format!("commute[t{i},{g}]"), "commute", move || b.t[i - 1].supercommutator(m.action_ref(&g1).unwrap())));
            cases.push(Case::single(format!("commute[c{i},{g}]"), "commute", move || b.c[i - 1].supercommutator(m.action_ref(&g2).unwrap())));
        }
        let root = if opts.mutate { "-q^2" } else { "-q" };
        cases.push(Case::single(format!("hecke[{i}]"), "hecke", move || {
            let t = &b.t[i - 1];
            t.add_scaled(&b.id, &root.parse()?)?.matmul(&t.add_scaled(&b.id, &RatFunc::q_pow(-1))?)
        }));
        cases.push(Case::single(format!("contraction_square[{i}]"), "hecke", move || {
            let c = &b.c[i - 1];
            c.matmul(c)
        }));
        if i + 1 < k {
            cases.push(Case::single(format!("braid[{i}]"), "hecke", move || {
                let (x, y) = (&b.t[i - 1], &b.t[i]);
                x.matmul(y)?.matmul(x)?.sub(&y.matmul(x)?.matmul(y)?)
            }));
        }
    }
    for r in 1..=k {
        for s in r + 1..=k {
            cases.push(Case::single(format!("commute[c({r},{s}),all]"), "commute", move || {
                let crs = b.c_rs(r, s, conv)?;
                let mut acc = SuperMatrix::zero(crs.rows(), crs.cols(), 0);
                for (_, x) in m.generators() {
                    let z = crs.supercommutator(x)?;
                    if !z.is_zero() {
                        acc = z;
                        break;
                    }
                }
                Ok(acc)
            }));
        }
    }

    for (idx, t) in tableaux.iter().enumerate() {
        let label = t.label();
        let s = &syms[idx];
        cases.push(Case::single(format!("xi[{label}]"), "symmetrizer", move || {
            let s = sym(s)?;
            s.x.matmul(&s.x)?.sub(&s.x.scale(&s.xi))
        }));
        cases.push(Case::single(format!("idempotent[{label}]"), "symmetrizer", move || {
            let s = sym(s)?;
            s.y.matmul(&s.y)?.sub(&s.y)
        }));
        cases.push(Case::single(format!("absorb_plus[{label}]"), "symmetrizer", move || {
            let s = sym(s)?;
            for p in &s.w_plus {
                let h = b.hecke(p);
                let scaled = s.e_plus.scale(&RatFunc::q_pow(p.length() as i32));
                for z in [h.matmul(&s.e_plus)?.sub(&scaled)?, s.e_plus.matmul(&h)?.sub(&scaled)?] {
                    if !z.is_zero() {
                        return Ok(z);
                    }
                }
            }
            Ok(SuperMatrix::zero(b.id.rows(), b.id.cols(), 0))
        }));
        cases.push(Case::single(format!("absorb_minus[{label}]"), "symmetrizer", move || {
            let s = sym(s)?;
            for p in &s.w_minus {
                let h = b.hecke(p);
                let scaled = s.e_minus.scale(&RatFunc::from_int(-1).div(&RatFunc::q())?.pow(p.length() as i32)?);
                for z in [h.matmul(&s.e_minus)?.sub(&scaled)?, s.e_minus.matmul(&h)?.sub(&scaled)?] {
                    if !z.is_zero() {
                        return Ok(z);
                    }
                }
            }
            Ok(SuperMatrix::zero(b.id.rows(), b.id.cols(), 0))
        }));
        if let Some(exp) = known_expansion(t) {
            cases.push(Case::single(format!("expansion[{label}]"), "symmetrizer", move || sym(s)?.y.sub(&expand(b, &exp)?)));
        }
        for (jdx, u) in tableaux.iter().enumerate() {
            if jdx != idx {
                let s2 = &syms[jdx];
                cases.push(Case::single(format!("orthogonal[{label};{}]", u.label()), "symmetrizer", move || {
                    sym(s)?.y.matmul(&sym(s2)?.y)
                }));
            }
        }
    }
    if complete && !tableaux.is_empty() {
        cases.push(Case::single("completeness", "symmetrizer", move || {
            let mut acc = b.id.neg();
            for s in syms {
                acc = acc.add(&sym(s)?.y)?;
            }
            Ok(acc)
        }));
    }

    let cases: Vec<Case> = cases.into_iter().filter(|c| opts.keep(&c.family)).collect();
    Ok(SuiteReport::from_cases(Suite::Centralizer, n, k, opts.mutate, run_cases(&cases, n, k, br.basis)))
}
