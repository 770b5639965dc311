//! Suites for the polynomial identities, the `m = 1` closed forms and the
//! normalization scalars.

use rayon::prelude::*;
use serde_json::json;

use crate::algebra::{int, Monomial, Polynomial, VarId};
use crate::bernstein::{
    build_e, build_f, check_bs_minor, check_bs_principal, check_det_product, check_e_identity_with,
    check_f_identity_with, check_minor_product,
};
use crate::classical::{build_omega, build_r, check_b_equals_r, transvectant};
use crate::covariant::{build_d, build_h, ParamMode};
use crate::error::Error;
use crate::minors::{subset_pairs, IndexSubset, Sign};
use crate::sampling::Sampler;
use crate::scalars::{d_symbolic, normalization_scalars};
use crate::weyl::{DiffOperator, Shape};

use super::{CheckRecord, Ctx, SuiteName, SuiteReport};

fn subset_text(s: &IndexSubset) -> String {
    s.to_string()
}

pub(super) fn bernstein(ctx: &Ctx<'_>) -> SuiteReport {
    let mut jobs: Vec<(usize, IndexSubset, IndexSubset, i64, &'static str)> = Vec::new();
    for m in ctx.ms() {
        for k in 0..=m {
            for n in 1..=5 {
                jobs.push((m, IndexSubset::range(1, k), IndexSubset::range(1, k), n, "principal"));
            }
        }
        if m <= 2 {
            for k in 0..=m {
                for (i, j) in subset_pairs(m, k).expect("k <= m") {
                    for n in 1..=5 {
                        jobs.push((m, i.clone(), j.clone(), n, "minor"));
                    }
                }
            }
        } else {
            for k in 0..=m {
                let anti = IndexSubset::range(k + 1, m);
                for n in 1..=5 {
                    jobs.push((m, anti.clone(), anti.clone(), n, "anti-principal"));
                }
            }
            let mut s = Sampler::derived(ctx.config.seed, &format!("bernstein/{m}"));
            for _ in 0..20 {
                let k = s.index(m + 1);
                let (i, j) = (s.subset(m, k), s.subset(m, k));
                for n in 1..=5 {
                    jobs.push((m, i.clone(), j.clone(), n, "random-minor"));
                }
            }
        }
    }
    let checks = jobs
        .par_iter()
        .map(|(m, i, j, n, tag)| {
            let id = format!("bs-{tag}/m={m}/I={}/J={}/n={n}", subset_text(i), subset_text(j));
            let outcome = if *tag == "principal" {
                check_bs_principal(*m, i.len(), *n)
            } else {
                check_bs_minor(*m, i, j, *n)
            };
            CheckRecord::from_bool(id, outcome, || {
                json!({ "m": m, "I": subset_text(i), "J": subset_text(j), "n": n })
            })
        })
        .collect();
    SuiteReport::new(SuiteName::Bernstein, vec![], checks)
}

pub(super) fn products(ctx: &Ctx<'_>) -> SuiteReport {
    let mut jobs = Vec::new();
    for m in ctx.ms() {
        let mut s = Sampler::derived(ctx.config.seed, &format!("products/{m}"));
        let vars = VarId::x_block(m, m);
        for idx in 0..ctx.config.samples {
            let f = s.polynomial(&vars, 3, 4);
            let g = s.polynomial(&vars, 3, 4);
            let k = 1 + s.index(m);
            let (i, j) = (s.subset(m, k), s.subset(m, k));
            jobs.push((m, idx, f, g, i, j));
        }
    }
    let checks = jobs
        .par_iter()
        .flat_map_iter(|(m, idx, f, g, i, j)| {
            let inputs = || json!({ "m": m, "f": f.to_string(), "g": g.to_string() });
            let det = CheckRecord::from_bool(format!("det-product/m={m}/sample={idx}"), check_det_product(*m, f, g), inputs);
            let minor = CheckRecord::from_bool(
                format!("minor-product/m={m}/sample={idx}/I={i}/J={j}"),
                check_minor_product(*m, i, j, f, g),
                || json!({ "m": m, "I": subset_text(i), "J": subset_text(j), "f": f.to_string(), "g": g.to_string() }),
            );
            [det, minor]
        })
        .collect();
    SuiteReport::new(SuiteName::Products, vec![], checks)
}

pub(super) fn ef_identity(ctx: &Ctx<'_>) -> SuiteReport {
    let mut checks = Vec::new();
    for m in ctx.ms().into_iter().filter(|&m| m <= 2) {
        let (e, fop) = match (build_e(m), build_f(m)) {
            (Ok(e), Ok(f)) => (e, f),
            (Err(err), _) | (_, Err(err)) => {
                checks.push(CheckRecord::fail(format!("ef-build/m={m}"), json!({ "error": err.to_string() })));
                continue;
            }
        };
        let mut s = Sampler::derived(ctx.config.seed, &format!("ef/{m}"));
        let mut vars = VarId::x_block(m, m);
        vars.extend(VarId::y_block(m, m));
        let mut jobs = Vec::new();
        for n in 1..=3 {
            for p in 1..=3 {
                jobs.push((n, p, s.polynomial(&vars, 2, 4)));
            }
        }
        checks.extend(jobs.par_iter().flat_map_iter(|(n, p, f)| {
            let inputs = || json!({ "m": m, "n": n, "p": p, "f": f.to_string() });
            [
                CheckRecord::from_bool(format!("E-identity/m={m}/n={n}/p={p}"), check_e_identity_with(&e, m, *n, *p, f), inputs),
                CheckRecord::from_bool(format!("F-identity/m={m}/n={n}/p={p}"), check_f_identity_with(&fop, m, *n, *p, f), inputs),
            ]
        }).collect::<Vec<_>>());
    }
    SuiteReport::new(SuiteName::EfIdentity, vec![], checks)
}

fn dx() -> VarId {
    VarId::x(1, 1)
}

fn dy() -> VarId {
    VarId::y(1, 1)
}

fn p(s: &str) -> Polynomial {
    s.parse().expect("literal polynomial")
}

/// The `m = 1` displays with the normalizations used throughout.
pub(crate) fn m1_expected_f() -> DiffOperator {
    let mut op = DiffOperator::zero(Shape::square(1));
    op.add_term(Monomial::one(), p("s*y[1][1] - t*x[1][1]"));
    op.add_term(Monomial::var(dx()), p("x[1][1]*y[1][1]"));
    op.add_term(Monomial::var(dy()), p("-x[1][1]*y[1][1]"));
    op
}

pub(crate) fn m1_expected_h() -> DiffOperator {
    let mut op = DiffOperator::zero(Shape::square(1));
    op.add_term(Monomial::var(dx()), p("t - 1"));
    op.add_term(Monomial::var(dy()), p("1 - s"));
    op.add_term(Monomial::from_pairs([(dx(), 1), (dy(), 1)]), p("x[1][1] - y[1][1]"));
    op
}

fn same(id: &str, got: Result<DiffOperator, Error>, want: &DiffOperator) -> CheckRecord {
    match got {
        Ok(g) if &g == want => CheckRecord::pass(id),
        Ok(g) => CheckRecord::fail(id, json!({ "got": g.to_string(), "expected": want.to_string() })),
        Err(e) => CheckRecord::fail(id, json!({ "error": e.to_string() })),
    }
}

pub(super) fn m1_classical(ctx: &Ctx<'_>) -> SuiteReport {
    let mut checks = vec![
        same("closed-form/F", build_f(1), &m1_expected_f()),
        same("closed-form/H", build_h(1), &m1_expected_h()),
        same("closed-form/D", build_d(1, &ParamMode::Symbolic), &build_omega()),
    ];
    for k in 0..=4u32 {
        let id = format!("B-equals-r/k={k}");
        checks.push(match check_b_equals_r(k) {
            Ok(true) => CheckRecord::pass(id),
            Ok(false) => CheckRecord::fail(id, json!({ "k": k, "r": build_r(k).to_string() })),
            Err(e) => CheckRecord::fail(id, json!({ "k": k, "error": e.to_string() })),
        });
    }
    let mut s = Sampler::derived(ctx.config.seed, "m1-classical");
    let x = [dx()];
    for l in 1..=4u32 {
        for k in (1..=l).step_by(2) {
            let q = s.polynomial(&x, l, 4);
            let id = format!("transvectant-antisymmetry/l={l}/k={k}");
            checks.push(match transvectant(&q, &q, l, l, k) {
                Ok(t) if t.is_zero() => CheckRecord::pass(id),
                Ok(t) => CheckRecord::fail(id, json!({ "p": q.to_string(), "value": t.to_string() })),
                Err(e) => CheckRecord::fail(id, json!({ "p": q.to_string(), "error": e.to_string() })),
            });
        }
        for md in 1..=3u32 {
            for k in 0..=l.min(md) {
                let (a, b) = (s.polynomial(&x, l, 4), s.polynomial(&x, md, 4));
                let id = format!("transvectant-degree/l={l}/md={md}/k={k}");
                let inputs = json!({ "p": a.to_string(), "q": b.to_string() });
                checks.push(match transvectant(&a, &b, l, md, k) {
                    Ok(t) if t.degree().is_none_or(|d| d + 2 * k <= l + md) => CheckRecord::pass(id),
                    Ok(t) => CheckRecord::fail(id, json!({ "inputs": inputs, "value": t.to_string() })),
                    Err(e) => CheckRecord::fail(id, json!({ "inputs": inputs, "error": e.to_string() })),
                });
            }
        }
    }
    checks.extend(super::covariance::rankin_cohen_covariance(ctx));
    SuiteReport::new(SuiteName::M1Classical, vec![], checks)
}

pub(super) fn scalars(ctx: &Ctx<'_>) -> SuiteReport {
    let mut checks = Vec::new();
    let cases = [(Sign::Plus, Sign::Plus), (Sign::Plus, Sign::Minus), (Sign::Minus, Sign::Plus), (Sign::Minus, Sign::Minus)];
    for m in ctx.ms() {
        let mi = m as i64;
        let mut s = Sampler::derived(ctx.config.seed, &format!("scalars/{m}"));
        for (eps, eta) in cases {
            let sym = d_symbolic(m, eps, eta);
            let case = format!("{eps}{eta}");
            let mut drawn = 0;
            while drawn < 10 {
                let (l, u) = (s.int(-6, 9), s.int(-6, 9));
                let poles: Vec<_> = sym
                    .denominator
                    .iter()
                    .filter(|f| (if f.param == VarId::S { l } else { u }) == f.shift)
                    .collect();
                if !poles.is_empty() {
                    continue;
                }
                drawn += 1;
                let id = format!("d-table/m={m}/case={case}/lambda={l}/mu={u}");
                let value = normalization_scalars(m, &int(l), &int(u), eps, eta);
                let den: i64 = sym
                    .denominator
                    .iter()
                    .map(|f| (if f.param == VarId::S { l } else { u }) - f.shift)
                    .product();
                checks.push(match value {
                    Ok(v) if v.rational == int(den).recip()
                        && v.power_of_two == sym.power_of_two
                        && v.power_of_pi == int(sym.power_of_pi) =>
                    {
                        CheckRecord::pass(id)
                    }
                    Ok(v) => CheckRecord::fail(id, json!({ "value": v, "expected-denominator": den })),
                    Err(e) => CheckRecord::fail(id, json!({ "error": e.to_string() })),
                });
            }
            for (param, l, u) in [("lambda", mi, 5 * mi + 1), ("mu", 5 * mi + 1, mi)] {
                let has_factor = match (param, eps, eta) {
                    ("lambda", Sign::Minus, _) | ("mu", _, Sign::Minus) => true,
                    _ => m >= 2,
                };
                let id = format!("d-pole/m={m}/case={case}/{param}=m");
                let got = normalization_scalars(m, &int(l), &int(u), eps, eta);
                let ok = match &got {
                    Err(Error::Pole(f)) => has_factor && f == &format!("({param} - {m})"),
                    Ok(_) => !has_factor,
                    Err(_) => false,
                };
                checks.push(if ok {
                    CheckRecord::pass(id)
                } else {
                    CheckRecord::fail(id, json!({ "lambda": l, "mu": u, "got": format!("{got:?}") }))
                });
            }
        }
    }
    SuiteReport::new(SuiteName::Scalars, vec![], checks)
}
