//! Comultiplication: Drinfeld–Jimbo coproduct against the `t_ij` coproduct,
//! the weight rule for `q^h`, and coassociativity.

use super::{run_cases, Case, Reading, Suite, SuiteOptions, SuiteReport};
use crate::error::Result;
use crate::natrep::GeneratorLabel as G;
use crate::qrat::RatFunc;
use crate::superlinalg::TensorBasis;
use crate::tensorrep::{coproduct_actions, dictionary, qh_action, tij_coproduct_actions, ComultReading, CoproductRoute};

pub(crate) fn run(n: usize, k: usize, opts: &SuiteOptions) -> Result<SuiteReport> {
    let basis = TensorBasis::new(n, k);
    let gens: Vec<G> = G::dj_generators(n);
    let corrected = coproduct_actions(n, k, &gens, ComultReading::Corrected, CoproductRoute::Left)?;
    let printed = coproduct_actions(n, k, &gens, ComultReading::Printed, CoproductRoute::Left)?;
    let right = if k >= 3 { Some(coproduct_actions(n, k, &gens, ComultReading::Corrected, CoproductRoute::Right)?) } else { None };
    let tij = tij_coproduct_actions(n, k)?;
    let mut cases: Vec<Case> = Vec::new();

    for j in 1..=n {
        let g = G::k(j, n);
        let (corrected, g2) = (&corrected, g.clone());
        cases.push(Case::single(format!("weight_rule[{g}]"), "weight", move || {
            let h = match &g2 {
                G::QH(h) => h.clone(),
                _ => unreachable!(),
            };
            corrected[&g2].sub(&qh_action(basis, &h))
        }));
    }

    for g in gens.iter().filter(|g| !matches!(g, G::QH(_))) {
        let Some((i, j, c)) = dictionary(g) else { continue };
        let c = if opts.mutate && matches!(g, G::E(_)) { &c * &RatFunc::q() } else { c };
        let t = &tij[&(i, j)];
        let (g1, c1, g2, c2) = (g.clone(), c.clone(), g.clone(), c.clone());
        // Only the f row differs between the tables; other rows are checked on
        // corrected lower levels so the f error does not leak into them.
        let (corr, prin) = (&corrected, if matches!(g, G::F(_)) { &printed } else { &corrected });
        let mut readings = vec![Reading {
            name: "printed".into(),
            residual: Some(Box::new(move || prin[&g1].add_scaled(t, &-c1.clone()))),
        }];
        if matches!(g, G::F(_)) {
            readings.push(Reading { name: "corrected".into(), residual: Some(Box::new(move || corr[&g2].add_scaled(t, &-c2.clone()))) });
        }
        cases.push(Case { id: format!("comult[{g}]"), family: "comult".into(), readings });
    }

    if let Some(right) = &right {
        for g in &gens {
            let (left, g2) = (&corrected, g.clone());
            cases.push(Case::single(format!("coassoc[{g}]"), "coassoc", move || left[&g2].sub(&right[&g2])));
        }
    }

    let cases: Vec<Case> = cases.into_iter().filter(|c| opts.keep(&c.family)).collect();
    Ok(SuiteReport::from_cases(Suite::Coproduct, n, k, opts.mutate, run_cases(&cases, n, k, basis)))
}
