//! The Cayley operator on the determinantially homogeneous model and its
//! comparison with `D_{lambda,mu}`.
//!
//! A homogeneous point is a pair of `2m x m` matrices `(x1; x2)`, `(y1; y2)`.
//! Row `r` of the x-pair is the variable row `X(r, .)`, so rows `1..=m` are
//! `x1` and rows `m+1..=2m` are `x2`; likewise for `Y`.

use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{int, Jet, JetSpace, Monomial, Point, Polynomial, RatMatrix, Rational, SeparableJet, VarId};
use crate::covariant::{build_d, ParamMode};
use crate::error::{Error, Result};
use crate::projective::{char_pow, jet_adjugate, jet_char_pow, jet_det, jet_matmul, Block, JetMatrix, Weight};
use crate::sampling::Sampler;
use crate::weyl::{DiffOperator, Shape};

pub fn homogeneous_shape(m: usize) -> Shape {
    Shape { rows: 2 * m, cols: m }
}

fn parity(perm: &[usize]) -> usize {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            inv += (perm[i] > perm[j]) as usize;
        }
    }
    inv % 2
}

/// `det` of the `2m x 2m` grid `[d/dX | d/dY]`; `(2m)!` terms.
pub fn cayley_omega(m: usize) -> DiffOperator {
    let shape = homogeneous_shape(m);
    let entry = |r: usize, c: usize| {
        if c < m { VarId::x(r + 1, c + 1) } else { VarId::y(r + 1, c - m + 1) }
    };
    let mut op = DiffOperator::zero(shape);
    for perm in (0..2 * m).permutations(2 * m) {
        let mono = (0..2 * m).fold(Monomial::one(), |acc, r| acc.mul(&Monomial::var(entry(r, perm[r]))));
        let c = if parity(&perm) == 0 { 1 } else { -1 };
        op.add_term(mono, Polynomial::int(c));
    }
    op
}

/// `Omega^k` by repeated composition.
pub fn omega_power(m: usize, k: usize) -> Result<DiffOperator> {
    let omega = cayley_omega(m);
    let mut acc = DiffOperator::identity(omega.shape());
    for _ in 0..k {
        acc = omega.compose(&acc)?;
    }
    Ok(acc)
}

fn stack(top: &RatMatrix, bottom: &RatMatrix) -> Vec<Rational> {
    top.entries().chain(bottom.entries()).map(|(_, v)| v.clone()).collect()
}

fn block_var(block: Block, i: usize, j: usize) -> VarId {
    match block {
        Block::X => VarId::x(i, j),
        Block::Y => VarId::y(i, j),
    }
}

/// Jets of `x1 x2^-1` and `det(x2)` over one homogeneous block at `(x0; 1)`.
struct LiftFrame {
    u: JetMatrix,
    det: Jet,
    template: Jet,
    block: Block,
}

impl LiftFrame {
    fn new(x0: &RatMatrix, block: Block, order: usize) -> Result<Self> {
        let m = x0.rows();
        let vars = match block {
            Block::X => VarId::x_block(2 * m, m),
            Block::Y => VarId::y_block(2 * m, m),
        };
        let space = JetSpace::new(vars, order);
        let base = Arc::new(stack(x0, &RatMatrix::identity(m)));
        let coord = |r: usize, c: usize| Jet::coordinate(&space, &base, r * m + c);
        let top: JetMatrix = (0..m).map(|r| (0..m).map(|c| coord(r, c)).collect()).collect();
        let bottom: JetMatrix = (m..2 * m).map(|r| (0..m).map(|c| coord(r, c)).collect()).collect();
        let det = jet_det(&bottom)?;
        let inv_det = det.recip()?;
        let u = jet_matmul(&top, &jet_adjugate(&bottom)?)?
            .into_iter()
            .map(|row| row.into_iter().map(|e| e.mul(&inv_det)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(LiftFrame { u, det, template: coord(0, 0), block })
    }

    fn compose(&self, f: &Polynomial) -> Result<Jet> {
        let m = self.u.len();
        let mut subs = BTreeMap::new();
        for i in 1..=m {
            for j in 1..=m {
                subs.insert(block_var(self.block, i, j), self.u[i - 1][j - 1].clone());
            }
        }
        Jet::eval_polynomial(f, &subs, &self.template)
    }
}

/// Separable jet at `((x0; 1), (y0; 1))` of
/// `F = det(x2)^{-lambda,eps} det(y2)^{-mu,eta} f(x1 x2^-1, y1 y2^-1)`.
pub fn lift_jet(
    wx: Weight,
    wy: Weight,
    f: &Polynomial,
    x0: &RatMatrix,
    y0: &RatMatrix,
    order: usize,
) -> Result<SeparableJet> {
    let fx = LiftFrame::new(x0, Block::X, order)?;
    let fy = LiftFrame::new(y0, Block::Y, order)?;
    let (ax, ay) = (jet_char_pow(&fx.det, -wx.lambda, wx.eps)?, jet_char_pow(&fy.det, -wy.lambda, wy.eps)?);
    let mut parts = Vec::new();
    for (ymono, xpoly) in f.split_by(VarId::is_y) {
        let a = fx.compose(&xpoly)?.mul(&ax)?;
        let b = fy.compose(&Polynomial::term(Rational::one(), ymono))?.mul(&ay)?;
        parts.push((a, b));
    }
    if parts.is_empty() {
        parts.push((fx.template.zero_like(), fy.template.zero_like()));
    }
    Ok(SeparableJet::new(parts))
}

fn lifted_point(x0: &RatMatrix, y0: &RatMatrix) -> Point {
    let m = x0.rows();
    let mut p = Point::new();
    for (block, top) in [(Block::X, x0), (Block::Y, y0)] {
        for (k, v) in stack(top, &RatMatrix::identity(m)).into_iter().enumerate() {
            p.insert(block_var(block, k / m + 1, k % m + 1), v);
        }
    }
    p
}

/// `(Omega^k F)((x0, 1), (y0, 1))` with `omega_k = Omega^k` prebuilt.
pub fn lift_and_apply_with(
    omega_k: &DiffOperator,
    wx: Weight,
    wy: Weight,
    f: &Polynomial,
    x0: &RatMatrix,
    y0: &RatMatrix,
) -> Result<Rational> {
    let order = omega_k.order_x().max(omega_k.order_y());
    let jet = lift_jet(wx, wy, f, x0, y0, order)?;
    omega_k.apply_at_separable(&jet, &lifted_point(x0, y0))
}

/// `(Omega^k F)((x0, 1), (y0, 1))`. Near an identity second block the sign
/// characters are trivial, so only the integer weights matter.
pub fn lift_and_apply(
    m: usize,
    lambda: i64,
    mu: i64,
    f: &Polynomial,
    x0: &RatMatrix,
    y0: &RatMatrix,
    k: usize,
) -> Result<Rational> {
    let w = |l| Weight::new(l, crate::minors::Sign::Plus);
    lift_and_apply_with(&omega_power(m, k)?, w(lambda), w(mu), f, x0, y0)
}

/// `F` at an arbitrary homogeneous point; `xh`, `yh` are `2m x m`.
pub fn lift_value(wx: Weight, wy: Weight, f: &Polynomial, xh: &RatMatrix, yh: &RatMatrix) -> Result<Rational> {
    let m = xh.cols();
    let mut value = Rational::one();
    let mut pt = Point::new();
    for (h, w, block) in [(xh, wx, Block::X), (yh, wy, Block::Y)] {
        let (top, bottom) = (h.block(0, 0, m, m), h.block(m, 0, m, m));
        let d = bottom.det();
        if d.is_zero() {
            return Err(Error::NotDefined("singular second block".into()));
        }
        value *= char_pow(&d, -w.lambda, w.eps)?;
        let u = &top * &bottom.inverse()?;
        for ((i, j), v) in u.entries() {
            pt.insert(block_var(block, i + 1, j + 1), v.clone());
        }
    }
    Ok(value * f.eval(&pt)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Verdict {
    Proportional { ratio: String },
    NotProportional,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct SamplePair {
    pub f: String,
    pub x0: String,
    pub y0: String,
    pub omega: String,
    pub d: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub m: usize,
    pub lambda: i64,
    pub mu: i64,
    pub seed: u64,
    pub samples: Vec<SamplePair>,
    pub resampled: usize,
    pub zero_mismatches: usize,
    pub distinct_ratios: Vec<String>,
    pub verdict: Verdict,
}

struct Candidate {
    f: Polynomial,
    x0: RatMatrix,
    y0: RatMatrix,
}

/// Samples `(Omega F, D f)` at random points and decides proportionality.
/// Test functions have degree `2m + 1` so that every order of `D` is seen.
/// Samples where both values vanish carry no information and are redrawn.
pub fn compare_omega_vs_d(m: usize, lambda: i64, mu: i64, count: usize, seed: u64) -> Result<ComparisonReport> {
    let omega = cayley_omega(m);
    let params: Point = [(VarId::S, int(lambda)), (VarId::T, int(mu))].into_iter().collect();
    let d = build_d(m, &ParamMode::Specialized(int(lambda), int(mu)))?;
    debug_assert!(d == build_d(m, &ParamMode::Symbolic)?.specialize(&params));
    let w = |l| Weight::new(l, crate::minors::Sign::Plus);
    let mut sampler = Sampler::derived(seed, &format!("omega-compare/{m}/{lambda}/{mu}"));
    let mut vars = VarId::x_block(m, m);
    vars.extend(VarId::y_block(m, m));

    let mut kept: Vec<(Candidate, Rational, Rational)> = Vec::new();
    let mut resampled = 0;
    let max_rounds = 10;
    for _ in 0..max_rounds {
        let need = count - kept.len();
        if need == 0 {
            break;
        }
        let batch: Vec<Candidate> = (0..need)
            .map(|_| Candidate {
                f: sampler.polynomial(&vars, 2 * m as u32 + 1, 6),
                x0: sampler.matrix(m),
                y0: sampler.matrix(m),
            })
            .collect();
        let values = batch
            .par_iter()
            .map(|c| {
                let lhs = lift_and_apply_with(&omega, w(lambda), w(mu), &c.f, &c.x0, &c.y0)?;
                let mut pt = lifted_point(&c.x0, &c.y0);
                pt.retain(|v, _| matches!(v, VarId::X(i, _) | VarId::Y(i, _) if (*i as usize) <= m));
                let rhs = d.apply(&c.f)?.eval(&pt)?;
                Ok((lhs, rhs))
            })
            .collect::<Result<Vec<_>>>()?;
        for (c, (l, r)) in batch.into_iter().zip(values) {
            if l.is_zero() && r.is_zero() {
                resampled += 1;
            } else {
                kept.push((c, l, r));
            }
        }
    }

    let zero_mismatches = kept.iter().filter(|(_, l, r)| l.is_zero() != r.is_zero()).count();
    let ratios: Vec<Rational> = kept
        .iter()
        .filter(|(_, l, r)| !l.is_zero() && !r.is_zero())
        .map(|(_, l, r)| l / r)
        .sorted()
        .dedup()
        .collect();
    let verdict = if kept.is_empty() {
        Verdict::Inconclusive
    } else if zero_mismatches == 0 && ratios.len() == 1 {
        Verdict::Proportional { ratio: ratios[0].to_string() }
    } else {
        Verdict::NotProportional
    };
    Ok(ComparisonReport {
        m,
        lambda,
        mu,
        seed,
        samples: kept
            .iter()
            .map(|(c, l, r)| SamplePair {
                f: c.f.to_string(),
                x0: c.x0.to_string(),
                y0: c.y0.to_string(),
                omega: l.to_string(),
                d: r.to_string(),
            })
            .collect(),
        resampled,
        zero_mismatches,
        distinct_ratios: ratios.iter().map(|r| r.to_string()).collect(),
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::frac;
    use crate::minors::Sign;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn scalar(v: i64) -> RatMatrix {
        RatMatrix::from_i64(&[&[v]])
    }

    #[test]
    fn omega_m1() {
        let o = cayley_omega(1);
        assert_eq!(o.len(), 2);
        let x1y2 = Monomial::from_pairs([(VarId::x(1, 1), 1), (VarId::y(2, 1), 1)]);
        let x2y1 = Monomial::from_pairs([(VarId::x(2, 1), 1), (VarId::y(1, 1), 1)]);
        assert_eq!(o.coeff(&x1y2), Polynomial::int(1));
        assert_eq!(o.coeff(&x2y1), Polynomial::int(-1));
        let grid = p("x[1][1]*y[2][1] - x[2][1]*y[1][1]");
        assert_eq!(o.apply(&grid).unwrap(), Polynomial::int(2));
    }

    #[test]
    fn omega_m2_size() {
        let o = cayley_omega(2);
        assert_eq!(o.len(), 24);
        assert!(o.terms().all(|(a, c)| a.degree() == 4 && c.as_constant().is_some()));
    }

    #[test]
    fn lift_examples() {
        let f = p("x[1][1]*y[1][1]");
        assert_eq!(lift_and_apply(1, 0, 0, &f, &scalar(1), &scalar(2), 1).unwrap(), int(-1));
        assert_eq!(lift_and_apply(1, 0, 0, &Polynomial::int(5), &scalar(1), &scalar(2), 1).unwrap(), int(0));
        let omega = crate::classical::build_omega();
        let pt: Point = [(VarId::x(1, 1), frac(1, 2)), (VarId::y(1, 1), int(-3))].into_iter().collect();
        let g = p("x[1][1]^2*y[1][1] - 2*y[1][1]^2 + x[1][1]");
        for (l, u) in [(3, -2), (1, 1), (-2, 0)] {
            let params: Point = [(VarId::S, int(l)), (VarId::T, int(u))].into_iter().collect();
            let expected = omega.specialize(&params).apply(&g).unwrap().eval(&pt).unwrap();
            assert_eq!(lift_and_apply(1, l, u, &g, &scalar(1).scale(&frac(1, 2)), &scalar(-3), 1).unwrap(), expected);
        }
    }

    #[test]
    fn homogeneity() {
        let f = p("x[1][1]*y[1][1] + y[1][1]^2");
        let xh = RatMatrix::from_i64(&[&[2], &[3]]);
        let yh = RatMatrix::from_i64(&[&[-1], &[5]]);
        let (wx, wy) = (Weight::new(2, Sign::Minus), Weight::new(-1, Sign::Plus));
        let base = lift_value(wx, wy, &f, &xh, &yh).unwrap();
        let gamma = scalar(-2);
        let moved = lift_value(wx, wy, &f, &(&xh * &gamma), &(&yh * &gamma)).unwrap();
        let factor = char_pow(&int(-2), -2, Sign::Minus).unwrap() * char_pow(&int(-2), 1, Sign::Plus).unwrap();
        assert_eq!(moved, factor * base);
    }

    #[test]
    fn compare_m1_is_identity() {
        let r = compare_omega_vs_d(1, 3, -2, 6, 1).unwrap();
        assert_eq!(r.verdict, Verdict::Proportional { ratio: "1".into() });
        assert_eq!(r.samples.len(), 6);
    }
}
