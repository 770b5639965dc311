//! Pointwise covariance suites and the group-action sanity suite.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::{int, Point, Polynomial, RatMatrix, VarId};
use crate::classical::rankin_cohen;
use crate::covariant::{build_b_from, build_d, check_constant_coefficients, ParamMode};
use crate::minors::Sign;
use crate::projective::{
    alpha, b_covariance_values, cocycle_values, d_covariance_values, jacobian_values, kernel_values,
    m_intertwine_values, pi_action_jet, pi_action_on_jet, act_point, GroupElement, PairJets, Weight,
};
use crate::sampling::{Generator, Sampler};
use crate::weyl::{BiDiffOperator, DiffOperator};

use super::{CheckRecord, Ctx, SuiteConfig, SuiteName, SuiteReport};

/// `(m, k)` pairs whose `B` must have constant coefficients.
pub const CONSTANT_CASES: [(usize, usize); 5] = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)];

const SIGNS: [Sign; 2] = [Sign::Plus, Sign::Minus];

fn params(lambda: i64, mu: i64) -> Point {
    [(VarId::S, int(lambda)), (VarId::T, int(mu))].into_iter().collect()
}

/// Why integer grids certify the covariance identities for all parameters.
pub fn certification_notes(config: &SuiteConfig) -> Vec<String> {
    let grid = config.lambda.len().min(config.mu.len());
    let mut notes = vec![format!(
        "At a fixed point and group element, dividing both sides by the weight factors leaves a polynomial identity in (lambda, mu); it is certified by a grid with more values per parameter than its degree in that parameter. Grid size: {grid} values per parameter."
    )];
    for m in config.m.usizes() {
        let d = 2 * m;
        notes.push(format!(
            "m={m} D: degree <= {d} per parameter; {}",
            if d < grid { "certified" } else { "not certified by this grid" }
        ));
        for k in config.k.usizes() {
            let b = 2 * m * k;
            notes.push(format!(
                "m={m} B k={k}: degree <= {b} per parameter; {}",
                if b < grid { "certified" } else { "not certified by this grid" }
            ));
        }
    }
    notes
}

fn pair_text(x0: &RatMatrix, y0: &RatMatrix) -> Value {
    json!([x0.to_string(), y0.to_string()])
}

struct Sample {
    gen: Generator,
    f: Polynomial,
    points: Vec<(RatMatrix, RatMatrix)>,
}

fn draw_sample(config: &SuiteConfig, m: usize, gen: Generator) -> Sample {
    let mut s = Sampler::derived(config.seed, &format!("covariance/{m}/{}", gen.label));
    let mut vars = VarId::x_block(m, m);
    vars.extend(VarId::y_block(m, m));
    let f = s.polynomial(&vars, 2, 5);
    let h = gen.g.inverse();
    let points = (0..config.points)
        .map(|_| (s.admissible_point(m, &[&h]), s.admissible_point(m, &[&h])))
        .collect();
    Sample { gen, f, points }
}

#[allow(clippy::too_many_arguments)]
fn sample_checks(
    ctx: &Ctx<'_>,
    m: usize,
    sample: &Sample,
    d_sym: &DiffOperator,
    b_syms: &[(usize, BiDiffOperator)],
) -> Vec<CheckRecord> {
    let Sample { gen, f, points } = sample;
    let g = &gen.g;
    let mut out = Vec::new();
    let inputs = |lambda: i64, mu: i64, eps: Sign, eta: Sign, k: Option<usize>, idx: usize| {
        let (x0, y0) = &points[idx];
        json!({
            "m": m, "g": g.matrix().to_string(), "generator": gen.label, "f": f.to_string(),
            "lambda": lambda, "mu": mu, "eps": eps.to_string(), "eta": eta.to_string(),
            "k": k, "point": pair_text(x0, y0),
        })
    };
    let d_jets: Vec<_> = points
        .iter()
        .map(|(x0, y0)| PairJets::new(g, f, x0, y0, m, m))
        .collect();
    let b_jets: Vec<Vec<_>> = b_syms
        .iter()
        .map(|(k, _)| points.iter().map(|(x0, _)| PairJets::new(g, f, x0, x0, m * k, m * k)).collect())
        .collect();
    for lambda in ctx.config.lambda.values() {
        for mu in ctx.config.mu.values() {
            let d = d_sym.specialize(&params(lambda, mu));
            let df = d.apply(f);
            let bs: Vec<_> = b_syms
                .iter()
                .map(|(k, b)| {
                    let b = b.specialize(&params(lambda, mu));
                    let bf = b.apply(f);
                    (*k, b, bf)
                })
                .collect();
            for eps in SIGNS {
                for eta in SIGNS {
                    let (wx, wy) = (Weight::new(lambda, eps), Weight::new(mu, eta));
                    let tag = format!("m={m}/g={}/lambda={lambda}/mu={mu}/eps={eps}/eta={eta}", gen.label);
                    out.push(first_failure(ctx, format!("M-intertwine/{tag}"), points.len(), |i| {
                        let (x0, y0) = &points[i];
                        (m_intertwine_values(wx, wy, g, f, x0, y0), inputs(lambda, mu, eps, eta, None, i))
                    }));
                    out.push(first_failure(ctx, format!("D-covariance/{tag}"), points.len(), |i| {
                        let values = match (&d_jets[i], &df) {
                            (Ok(j), Ok(df)) => d_covariance_values(&d, df, j, g, wx, wy),
                            (Err(e), _) | (_, Err(e)) => Err(e.clone()),
                        };
                        (values, inputs(lambda, mu, eps, eta, None, i))
                    }));
                    for (bi, (k, b, bf)) in bs.iter().enumerate() {
                        out.push(first_failure(ctx, format!("B-covariance/k={k}/{tag}"), points.len(), |i| {
                            let values = match (&b_jets[bi][i], bf) {
                                (Ok(j), Ok(bf)) => b_covariance_values(b, bf, *k, j, g, wx, wy),
                                (Err(e), _) | (_, Err(e)) => Err(e.clone()),
                            };
                            (values, inputs(lambda, mu, eps, eta, Some(*k), i))
                        }));
                    }
                }
            }
        }
    }
    out
}

/// One record for a check over many points; the witness is the first
/// failing point.
fn first_failure(
    ctx: &Ctx<'_>,
    id: String,
    n: usize,
    eval: impl Fn(usize) -> (crate::Result<(crate::algebra::Rational, crate::algebra::Rational)>, Value),
) -> CheckRecord {
    for i in 0..n {
        let (values, inputs) = eval(i);
        let rec = ctx.compare(id.clone(), values, || inputs);
        if rec.is_fail() {
            return rec;
        }
    }
    CheckRecord::pass(id)
}

pub(super) fn covariance(ctx: &Ctx<'_>) -> SuiteReport {
    let config = ctx.config;
    let mut checks = Vec::new();
    for m in ctx.ms() {
        let d_sym = match build_d(m, &ParamMode::Symbolic) {
            Ok(d) => d,
            Err(e) => {
                checks.push(CheckRecord::fail(format!("build-D/m={m}"), json!({ "error": e.to_string() })));
                continue;
            }
        };
        let mut b_syms = Vec::new();
        for k in config.k.usizes() {
            match build_b_from(&d_sym, k, &ParamMode::Symbolic) {
                Ok(b) => b_syms.push((k, b)),
                Err(e) => checks.push(CheckRecord::fail(format!("build-B/m={m}/k={k}"), json!({ "error": e.to_string() }))),
            }
        }
        for &(cm, ck) in CONSTANT_CASES.iter().filter(|(cm, _)| *cm == m) {
            let id = format!("constant-coefficients/m={cm}/k={ck}");
            let b = b_syms
                .iter()
                .find(|(k, _)| *k == ck)
                .map(|(_, b)| Ok(b.clone()))
                .unwrap_or_else(|| build_b_from(&d_sym, ck, &ParamMode::Symbolic));
            checks.push(match b {
                Ok(b) if check_constant_coefficients(&b) => CheckRecord::pass(id),
                Ok(b) => CheckRecord::fail(id, json!({ "m": cm, "k": ck, "operator": b.to_string() })),
                Err(e) => CheckRecord::fail(id, json!({ "m": cm, "k": ck, "error": e.to_string() })),
            });
        }
        let mut s = Sampler::derived(config.seed, &format!("generators/{m}"));
        let samples: Vec<Sample> = s
            .standard_generators(m)
            .into_iter()
            .map(|g| draw_sample(config, m, g))
            .collect();
        let per: Vec<Vec<CheckRecord>> = samples
            .par_iter()
            .map(|smp| sample_checks(ctx, m, smp, &d_sym, &b_syms))
            .collect();
        checks.extend(per.into_iter().flatten());
    }
    SuiteReport::new(SuiteName::Covariance, certification_notes(config), checks)
}

/// Rankin-Cohen brackets inherit covariance with `eps = (-1)^l`,
/// `eta = (-1)^md`.
pub(super) fn rankin_cohen_covariance(ctx: &Ctx<'_>) -> Vec<CheckRecord> {
    let mut s = Sampler::derived(ctx.config.seed, "rankin-cohen");
    let gens = s.standard_generators(1);
    let parity = |v: i64| if v % 2 == 0 { Sign::Plus } else { Sign::Minus };
    let mut jobs = Vec::new();
    for k in 0..=2u32 {
        for l in 1..=3i64 {
            for md in 1..=3i64 {
                let gen = &gens[s.index(gens.len())];
                let h = gen.g.inverse();
                let f = s.polynomial(&[VarId::x(1, 1), VarId::y(1, 1)], 2, 4);
                let pts: Vec<RatMatrix> = (0..ctx.config.points).map(|_| s.admissible_point(1, &[&h])).collect();
                jobs.push((k, l, md, gen.clone(), f, pts));
            }
        }
    }
    jobs.par_iter()
        .map(|(k, l, md, gen, f, pts)| {
            let id = format!("rankin-cohen-covariance/k={k}/l={l}/md={md}/g={}", gen.label);
            let (wx, wy) = (Weight::new(*l, parity(*l)), Weight::new(*md, parity(*md)));
            let rc = match rankin_cohen(*k, *l, *md) {
                Ok(rc) => rc,
                Err(e) => return CheckRecord::fail(id, json!({ "error": e.to_string() })),
            };
            let bf = rc.op.apply(f);
            first_failure(ctx, id, pts.len(), |i| {
                let x0 = &pts[i];
                let values = PairJets::new(&gen.g, f, x0, x0, *k as usize, *k as usize).and_then(|j| {
                    b_covariance_values(&rc.op, bf.as_ref().map_err(|e| e.clone())?, *k as usize, &j, &gen.g, wx, wy)
                });
                let inputs = json!({
                    "k": k, "l": l, "md": md, "g": gen.g.matrix().to_string(),
                    "f": f.to_string(), "point": x0.to_string(),
                });
                (values, inputs)
            })
        })
        .collect()
}

/// A point where `g` is defined and `g'` is defined at it, and more.
fn point_for(s: &mut Sampler, m: usize, need: &[&GroupElement], then: Option<(&GroupElement, &GroupElement)>) -> RatMatrix {
    loop {
        let x = s.admissible_point(m, need);
        match then {
            Some((inner, outer)) => {
                if let Ok(y) = act_point(inner, &x) {
                    if !num_traits::Zero::is_zero(&alpha(outer, &y)) {
                        return x;
                    }
                }
            }
            None => return x,
        }
    }
}

pub(super) fn group_action(ctx: &Ctx<'_>) -> SuiteReport {
    let mut checks = Vec::new();
    for m in ctx.ms() {
        let mut s = Sampler::derived(ctx.config.seed, &format!("group-action/{m}"));
        let mut jobs = Vec::new();
        for idx in 0..ctx.config.samples {
            let g = s.group_element(m);
            let gp = s.group_element(m);
            let x = point_for(&mut s, m, &[&gp, &g], Some((&gp, &g)));
            let y = s.admissible_point(m, &[&g]);
            jobs.push((idx, g, gp, x, y));
        }
        checks.extend(
            jobs.par_iter()
                .flat_map_iter(|(idx, g, gp, x, y)| {
                    let ins = || json!({ "m": m, "g": g.matrix().to_string(), "g'": gp.matrix().to_string(), "x": x.to_string(), "y": y.to_string() });
                    [
                        ctx.compare(format!("cocycle/m={m}/sample={idx}"), cocycle_values(g, gp, x), ins),
                        ctx.compare(format!("jacobian/m={m}/sample={idx}"), jacobian_values(g, x), ins),
                        ctx.compare(format!("kernel/m={m}/sample={idx}"), kernel_values(g, x, y), ins),
                    ]
                })
                .collect::<Vec<_>>(),
        );
        let mut jobs = Vec::new();
        for idx in 0..(ctx.config.samples / 10).max(1) {
            let (g1, g2) = (s.group_element(m), s.group_element(m));
            let (h1, h2, h12) = (g1.inverse(), g2.inverse(), g1.product(&g2).inverse());
            let x0 = point_for(&mut s, m, &[&h1, &h12], Some((&h1, &h2)));
            let lambda = s.int(ctx.config.lambda.lo, ctx.config.lambda.hi);
            let w = Weight::new(lambda, s.sign());
            let f = s.polynomial(&VarId::x_block(m, m), 2, 4);
            jobs.push((idx, g1, g2, x0, w, f));
        }
        checks.extend(
            jobs.par_iter()
                .map(|(idx, g1, g2, x0, w, f)| {
                    let id = format!("pi-action-composition/m={m}/sample={idx}");
                    let inputs = json!({
                        "m": m, "g1": g1.matrix().to_string(), "g2": g2.matrix().to_string(),
                        "x0": x0.to_string(), "lambda": w.lambda, "eps": w.eps.to_string(), "f": f.to_string(),
                    });
                    let both = (|| {
                        let lhs = pi_action_jet(*w, &g1.product(g2), f, x0, 2)?;
                        let mid = act_point(&g1.inverse(), x0)?;
                        let inner = pi_action_jet(*w, g2, f, &mid, 2)?;
                        let rhs = pi_action_on_jet(*w, g1, &inner, x0)?;
                        Ok::<_, crate::Error>((lhs, rhs))
                    })();
                    match both {
                        Ok((l, r)) if l.coeffs().iter().zip(r.coeffs()).all(|(a, b)| ctx.agree(a, b)) => CheckRecord::pass(id),
                        Ok((l, r)) => CheckRecord::fail(
                            id,
                            json!({ "inputs": inputs, "lhs": l.to_polynomial().to_string(), "rhs": r.to_polynomial().to_string() }),
                        ),
                        Err(e) => CheckRecord::fail(id, json!({ "inputs": inputs, "error": e.to_string() })),
                    }
                })
                .collect::<Vec<_>>(),
        );
    }
    SuiteReport::new(SuiteName::GroupAction, vec![], checks)
}
