//! Drinfeld–Jimbo relations, derived relations, and divided powers.

use super::expr::{c, g, Expr};
use super::ExprCase;
use crate::natrep::GeneratorLabel as G;
use crate::qrat::{quantum_factorial, RatFunc};
use crate::tensorrep::{alpha, beta, gamma, pairing};

struct Gens {
    n: usize,
}

impl Gens {
    fn e(&self, i: usize) -> Expr {
        g(G::E(i))
    }
    fn f(&self, i: usize) -> Expr {
        g(G::F(i))
    }
    fn eb(&self, i: usize) -> Expr {
        g(G::EBar(i))
    }
    fn fb(&self, i: usize) -> Expr {
        g(G::FBar(i))
    }
    fn ff(&self, j: usize) -> Expr {
        g(G::FFBar(j))
    }
    /// `q^{k_j}`.
    fn k(&self, j: usize) -> Expr {
        g(G::k(j, self.n))
    }
    /// `q^{2k_j}`.
    fn k2(&self, j: usize) -> Expr {
        let mut h = vec![0; self.n];
        h[j - 1] = 2;
        g(G::QH(h))
    }
    fn qh(&self, h: &[i32]) -> Expr {
        g(G::QH(h.to_vec()))
    }
}

fn q(e: i32) -> RatFunc {
    RatFunc::q_pow(e)
}

fn fmt_h(h: &[i32]) -> String {
    h.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn family_of(id: &str, e: &Expr, default: &'static str) -> &'static str {
    let mut ls = Vec::new();
    e.labels(&mut ls);
    if id.starts_with("serre") {
        "serre"
    } else if ls.iter().any(|l| matches!(l, G::FFBar(_))) {
        "fbar"
    } else {
        default
    }
}

fn push(out: &mut Vec<ExprCase>, id: String, default: &'static str, lhs: Expr, rhs: Expr) {
    let r = lhs - rhs;
    let fam = family_of(&id, &r, default);
    out.push(ExprCase::new(id, fam, r));
}

/// The defining relations of the Drinfeld–Jimbo presentation.
pub(crate) fn prop_alg(n: usize, mutate: bool) -> Vec<ExprCase> {
    let x = Gens { n };
    let ii: Vec<usize> = (1..n).collect();
    let jj: Vec<usize> = (1..=n).collect();
    let in_i = |i: usize| (1..n).contains(&i);
    let mut out = Vec::new();

    let mut hs: Vec<Vec<i32>> = jj
        .iter()
        .map(|&j| {
            let mut h = vec![0; n];
            h[j - 1] = 1;
            h
        })
        .collect();
    let mut h = vec![0; n];
    h[0] = 1;
    h[n - 1] = -1;
    hs.push(h);
    let mut h = vec![0; n];
    h[0] = 2;
    h[1] = -1;
    hs.push(h);

    push(&mut out, "q0_identity".into(), "toral", x.qh(&vec![0; n]), Expr::One);
    for a in &hs {
        for b in &hs {
            let sum: Vec<i32> = a.iter().zip(b).map(|(u, v)| u + v).collect();
            push(&mut out, format!("qh_sum[{};{}]", fmt_h(a), fmt_h(b)), "toral", x.qh(&sum), x.qh(a) * x.qh(b));
        }
    }
    for h in &hs {
        let hid = fmt_h(h);
        for &i in &ii {
            let qa = pairing(&alpha(n, i), h);
            let qg = pairing(&gamma(n, i), h);
            push(&mut out, format!("qh_e[h={hid},i={i}]"), "toral", x.qh(h) * x.e(i), (x.e(i) * x.qh(h)).sc(q(qa)));
            push(&mut out, format!("qh_f[h={hid},i={i}]"), "toral", x.qh(h) * x.f(i), (x.f(i) * x.qh(h)).sc(q(-qa)));
            push(&mut out, format!("qh_eb[h={hid},i={i}]"), "toral", x.qh(h) * x.eb(i), (x.eb(i) * x.qh(h)).sc(q(qg)));
            push(&mut out, format!("qh_fb[h={hid},i={i}]"), "toral", x.qh(h) * x.fb(i), (x.fb(i) * x.qh(h)).sc(q(-qg)));
        }
        for &j in &jj {
            let qb = pairing(&beta(n, j), h);
            push(&mut out, format!("qh_F[h={hid},j={j}]"), "toral", x.qh(h) * x.ff(j), (x.ff(j) * x.qh(h)).sc(q(-qb)));
        }
    }

    let m1 = || RatFunc::from_int(-1);
    for &i in &ii {
        for &j in &ii {
            if i.abs_diff(j) > 1 {
                push(&mut out, format!("ee[{i},{j}]"), "commutation", x.e(i) * x.e(j), x.e(j) * x.e(i));
                push(&mut out, format!("ff[{i},{j}]"), "commutation", x.f(i) * x.f(j), x.f(j) * x.f(i));
                push(&mut out, format!("fbfb[{i},{j}]"), "commutation", x.fb(i) * x.fb(j), (x.fb(j) * x.fb(i)).sc(m1()));
                push(&mut out, format!("efb[{i},{j}]"), "commutation", x.e(i) * x.fb(j), x.fb(j) * x.e(i));
                push(&mut out, format!("ffb[{i},{j}]"), "commutation", x.f(i) * x.fb(j), x.fb(j) * x.f(i));
                push(&mut out, format!("ebfb[{i},{j}]"), "commutation", x.eb(i) * x.fb(j), (x.fb(j) * x.eb(i)).sc(m1()));
            }
            if i != j {
                push(&mut out, format!("ebeb[{i},{j}]"), "commutation", x.eb(i) * x.eb(j), (x.eb(j) * x.eb(i)).sc(m1()));
            }
            if j != i && j != i + 1 {
                push(&mut out, format!("ef[{i},{j}]"), "commutation", x.e(i) * x.f(j), x.f(j) * x.e(i));
            }
            if j != i + 1 {
                push(&mut out, format!("eeb[{i},{j}]"), "commutation", x.e(i) * x.eb(j), x.eb(j) * x.e(i));
                push(&mut out, format!("feb[{j},{i}]"), "commutation", x.f(j) * x.eb(i), x.eb(i) * x.f(j));
            }
        }
    }
    for &i in &jj {
        for &j in &jj {
            if i != j {
                push(&mut out, format!("FF[{i},{j}]"), "commutation", x.ff(i) * x.ff(j), (x.ff(j) * x.ff(i)).sc(m1()));
            }
        }
        for &j in &ii {
            if i != j && i != j + 1 {
                push(&mut out, format!("Fe[{i},{j}]"), "commutation", x.ff(i) * x.e(j), x.e(j) * x.ff(i));
                push(&mut out, format!("Ff[{i},{j}]"), "commutation", x.ff(i) * x.f(j), x.f(j) * x.ff(i));
                push(&mut out, format!("Feb[{i},{j}]"), "commutation", x.ff(i) * x.eb(j), (x.eb(j) * x.ff(i)).sc(m1()));
                push(&mut out, format!("Ffb[{i},{j}]"), "commutation", x.ff(i) * x.fb(j), (x.fb(j) * x.ff(i)).sc(m1()));
            }
        }
    }
    for &i in &ii {
        push(&mut out, format!("eb2[{i}]"), "odd-square", x.eb(i) * x.eb(i), Expr::Zero);
        push(&mut out, format!("fb2[{i}]"), "odd-square", x.fb(i) * x.fb(i), Expr::Zero);
    }
    for &j in &jj {
        push(&mut out, format!("F2[{j}]"), "odd-square", x.ff(j) * x.ff(j), Expr::Zero);
    }

    let two = || RatFunc::from_int(2);
    let qq1 = || c("q^2 - 1");
    let bracket = || c("q + q^-1");
    for &i in &ii {
        let ef_coeff = if mutate { c("(q^2 - 1)/q") } else { c("(q^2 - 1)/q^2") };
        push(
            &mut out,
            format!("comm_ef[{i}]"),
            "mixed",
            x.e(i) * x.f(i) - x.f(i) * x.e(i),
            (x.k2(i) - x.k2(i + 1)).sc(-qq1().inv().unwrap()) + (x.fb(i) * x.eb(i)).sc(ef_coeff),
        );
        push(
            &mut out,
            format!("fbeb[{i}]"),
            "mixed",
            x.fb(i) * x.eb(i) + (x.eb(i) * x.fb(i)).sc(q(2)),
            (x.k2(i) - x.k2(i + 1)).sc(c("-q^2/(q^2 - 1)")),
        );
        push(
            &mut out,
            format!("efb_F[{i}]"),
            "mixed",
            (x.e(i) * x.fb(i)).sc(q(1)) - (x.fb(i) * x.e(i)).sc(q(-1)),
            (x.k(i + 1) * x.ff(i + 1)).sc(c("(1 + q^2)/2")),
        );
        push(&mut out, format!("qF_e[{i}]"), "mixed", (x.ff(i + 1) * x.e(i)).sc(q(1)), x.e(i) * x.ff(i + 1));
        push(&mut out, format!("qF_f[{i}]"), "mixed", (x.ff(i) * x.f(i)).sc(q(1)), x.f(i) * x.ff(i));
        push(&mut out, format!("Fe_fb[{i}]"), "mixed", x.ff(i) * x.e(i) - (x.e(i) * x.ff(i)).sc(q(1)), (x.fb(i) * x.k(i)).sc(-two()));
        push(&mut out, format!("Ff_fb[{i}]"), "mixed", (x.ff(i + 1) * x.f(i)).sc(q(-1)) - x.f(i) * x.ff(i + 1), (x.k(i + 1) * x.fb(i)).sc(two()));
        push(&mut out, format!("Feb_f[{i}]"), "mixed", x.ff(i) * x.eb(i) + (x.eb(i) * x.ff(i)).sc(q(1)), (x.f(i) * x.k(i)).sc(two()));
        push(&mut out, format!("Ffb0[{i}]"), "mixed", x.ff(i) * x.fb(i) + (x.fb(i) * x.ff(i)).sc(q(-1)), Expr::Zero);
        push(&mut out, format!("F1eb_e[{i}]"), "mixed", x.ff(i + 1) * x.eb(i) + (x.eb(i) * x.ff(i + 1)).sc(q(1)), (x.e(i) * x.k(i + 1)).sc(two()));
        push(&mut out, format!("F1fb0[{i}]"), "mixed", x.ff(i + 1) * x.fb(i) + (x.fb(i) * x.ff(i + 1)).sc(q(-1)), Expr::Zero);
        if !in_i(i + 1) {
            continue;
        }
        let j = i + 1;
        push(&mut out, format!("ee1[{i}]"), "mixed", x.e(j) * x.e(i) - x.e(i) * x.e(j), x.eb(i) * x.fb(j) + x.fb(j) * x.eb(i));
        push(&mut out, format!("ff1[{i}]"), "mixed", x.f(j) * x.f(i) - x.f(i) * x.f(j), x.fb(i) * x.eb(j) + x.eb(j) * x.fb(i));
        push(&mut out, format!("eb1e[{i}]"), "mixed", x.eb(j) * x.e(i) - x.e(i) * x.eb(j), x.f(j) * x.eb(i) - x.eb(i) * x.f(j));
        push(&mut out, format!("fb1f[{i}]"), "mixed", x.fb(j) * x.f(i) - x.f(i) * x.fb(j), x.e(j) * x.fb(i) - x.fb(i) * x.e(j));
        push(
            &mut out,
            format!("efb_F2[{i}]"),
            "mixed",
            (x.k(j) * x.ff(j)).sc(c("(1 + q^2)/2")),
            (x.fb(j) * x.f(j)).sc(q(-1)) - (x.f(j) * x.fb(j)).sc(q(1)),
        );
        let serre = |a: Expr, b: Expr, lo: RatFunc, hi: RatFunc| {
            (a.clone() * a.clone() * b.clone()).sc(lo) - (a.clone() * b.clone() * a.clone()).sc(bracket()) + (b * a.clone() * a).sc(hi)
        };
        push(&mut out, format!("serre_e1[{i}]"), "serre", serre(x.e(i), x.e(j), q(-1), q(1)), Expr::Zero);
        let corrected = serre(x.e(j), x.e(i), q(1), q(-1));
        let printed = in_i(i + 2).then(|| {
            (x.e(i + 2) * x.e(i + 2) * x.e(i)).sc(q(1)) - (x.e(j) * x.e(i) * x.e(j)).sc(bracket()) + (x.e(i) * x.e(j) * x.e(j)).sc(q(-1))
        });
        out.push(ExprCase::with_readings(format!("serre_e2[{i}]"), "serre", vec![("printed", printed), ("index-i+1", Some(corrected))]));
        push(&mut out, format!("serre_f1[{i}]"), "serre", serre(x.f(i), x.f(j), q(1), q(-1)), Expr::Zero);
        push(&mut out, format!("serre_f2[{i}]"), "serre", serre(x.f(j), x.f(i), q(-1), q(1)), Expr::Zero);
        push(&mut out, format!("serre_eeb[{i}]"), "serre", serre(x.e(i), x.eb(j), q(-1), q(1)), Expr::Zero);
        push(&mut out, format!("serre_ffb[{i}]"), "serre", serre(x.f(i), x.fb(j), q(1), q(-1)), Expr::Zero);
        push(
            &mut out,
            format!("serre_eeeb[{i}]"),
            "serre",
            x.e(j) * x.e(i) * x.eb(j) - x.e(i) * x.e(j) * x.eb(j) - (x.eb(j) * x.e(j) * x.e(i)).sc(q(2)) + (x.eb(j) * x.e(i) * x.e(j)).sc(q(2)),
            x.k2(j) * x.eb(i),
        );
        let cc = || c("1 - q^-2");
        let tq = |s: i64| &RatFunc::from_int(s) * &RatFunc::q();
        push(
            &mut out,
            format!("fbar1[{i}]"),
            "fbar",
            (x.k(j) * (x.f(j) * x.fb(i) - x.fb(i) * x.f(j))).sc(tq(2)),
            (x.ff(j) * (x.f(j) * x.f(i) - x.f(i) * x.f(j))).sc(cc()),
        );
        push(
            &mut out,
            format!("fbar2[{i}]"),
            "fbar",
            (x.k(j) * (x.fb(j) * x.e(i) - x.e(i) * x.fb(j))).sc(tq(-2)),
            (x.ff(j) * (x.e(j) * x.e(i) - x.e(i) * x.e(j))).sc(cc()),
        );
        push(
            &mut out,
            format!("fbar3[{i}]"),
            "fbar",
            (x.k(j) * (x.fb(j) * x.fb(i) + x.fb(i) * x.fb(j))).sc(tq(-2)),
            (x.ff(j) * (x.fb(j) * x.f(i) - x.f(i) * x.fb(j))).sc(cc()),
        );
        push(
            &mut out,
            format!("fbar4[{i}]"),
            "fbar",
            (x.k(j) * (x.f(j) * x.e(i) - x.e(i) * x.f(j))).sc(tq(2)),
            (x.ff(j) * (x.eb(j) * x.e(i) - x.e(i) * x.eb(j))).sc(cc()),
        );
    }
    out
}

/// The three derived relations among `e, f, ē, f̄` and `q^{k}`.
pub(crate) fn lemma_alg(n: usize, mutate: bool) -> Vec<ExprCase> {
    let x = Gens { n };
    let mut out = Vec::new();
    for i in 1..n {
        let rhs = if mutate { x.eb(i) * x.fb(i) - x.fb(i) * x.eb(i) } else { x.eb(i) * x.fb(i) + x.fb(i) * x.eb(i) };
        out.push(ExprCase::new(format!("lem_a[{i}]"), "lemma", x.e(i) * x.f(i) - x.f(i) * x.e(i) - rhs));
        if i + 1 < n {
            let j = i + 1;
            let b = (x.fb(j) * x.f(j) * x.f(i)).sc(c("2/(1 + q^2)"))
                - x.fb(j) * x.f(i) * x.f(j)
                - x.f(j) * x.f(i) * x.fb(j)
                + (x.f(i) * x.f(j) * x.fb(j)).sc(q(2))
                - (x.k2(j) * x.fb(i)).sc(q(2))
                + (x.f(j) * x.fb(j) * x.f(i)).sc(c("(1 - q^2)/(1 + q^2)"));
            out.push(ExprCase::new(format!("lem_b[{i}]"), "lemma", b));
        }
        let lem_c = |kk: Expr| {
            x.f(i) * x.e(i) - x.e(i) * x.f(i) - (x.k2(i) - kk).sc(c("q^2/(q^2 - 1)")) - (x.eb(i) * x.fb(i)).sc(c("q^2 - 1"))
        };
        out.push(ExprCase::with_readings(
            format!("lem_c[{i}]"),
            "lemma",
            vec![("printed", Some(lem_c(x.k(i + 1)))), ("q^{2k_{i+1}}", Some(lem_c(x.k2(i + 1))))],
        ));
    }
    out
}

/// `X^{(m)} = X^m / [m]!`, zero for negative `m`.
fn divided(x: Expr, m: i32) -> Expr {
    if m < 0 {
        return Expr::Zero;
    }
    x.pow(m as u32).sc(quantum_factorial(m as i64).inv().unwrap())
}

/// Commutation of `e_i` with `f_i^{(m)}` and of `f_i` with `e_i^{(m)}`.
pub(crate) fn divided_powers(n: usize, max_m: u32, mutate: bool) -> Vec<ExprCase> {
    let x = Gens { n };
    let mut out = Vec::new();
    for i in 1..n {
        for m in 1..=max_m as i32 {
            let fm = |d: i32| divided(x.f(i), m - d);
            let em = |d: i32| divided(x.e(i), m - d);
            let fbar_exp = if mutate { m } else { m - 1 };
            let a = x.e(i) * fm(0) - fm(0) * x.e(i)
                + (fm(1) * (x.k2(i).sc(q(1 - m)) - x.k2(i + 1).sc(q(m - 1)))).sc(c("1/(q^2 - 1)"))
                - ((fm(1) * x.fb(i)).sc(q(fbar_exp)) + (x.k(i) * x.ff(i) * fm(2)).sc(&q(2 * m - 2) * &c("1/2"))) * x.eb(i).sc(c("1 - q^-2"));
            out.push(ExprCase::new(format!("e_f(m)[i={i},m={m}]"), "divided-power", a));
            let b = |ebfb: RatFunc, half: RatFunc| {
                x.f(i) * em(0)
                    - em(0) * x.f(i)
                    - (em(1) * (x.k2(i).sc(q(m - 1)) - x.k2(i + 1).sc(q(1 - m)))).sc(c("q^2/(q^2 - 1)"))
                    - ((em(1) * x.eb(i) * x.fb(i)).sc(ebfb) - (em(2) * x.k(i + 1) * x.eb(i) * x.ff(i + 1)).sc(half)).sc(c("q^2 - 1"))
            };
            out.push(ExprCase::with_readings(
                format!("f_e(m)[i={i},m={m}]"),
                "divided-power",
                vec![("printed", Some(b(q(2), c("1/2")))), ("q^{m-1},q/2", Some(b(q(m - 1), c("q/2"))))],
            ));
        }
    }
    out
}
