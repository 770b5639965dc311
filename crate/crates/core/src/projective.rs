//! The projective action of `SL(2m)` on `m x m` matrices, the cocycle
//! `alpha(g, x) = det(cx + d)`, and the twisted actions `pi_{lambda,eps}`
//! evaluated exactly on jets.
//!
//! `pi_{lambda,eps}(g) f (x) = alpha(g^-1, x)^{-lambda,eps} f(g^-1 x)` with
//! `t^{e,eps} = |t|^e` for `eps = +` and `sgn(t) |t|^e` for `eps = -`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::algebra::rational::signum;
use crate::algebra::{Jet, JetSpace, Point, Polynomial, RatMatrix, Rational, SeparableJet, VarId};
use crate::error::{Error, Result};
use crate::minors::Sign;
use crate::weyl::{BiDiffOperator, DiffOperator};

/// `g = [[a, b], [c, d]]` with `det g = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    a: RatMatrix,
    b: RatMatrix,
    c: RatMatrix,
    d: RatMatrix,
}

impl GroupElement {
    pub fn from_blocks(a: RatMatrix, b: RatMatrix, c: RatMatrix, d: RatMatrix) -> Result<Self> {
        let m = a.rows();
        if [&a, &b, &c, &d].iter().any(|x| x.rows() != m || x.cols() != m) {
            return Err(Error::DimensionMismatch("blocks must all be m x m".into()));
        }
        let g = GroupElement { a, b, c, d };
        let det = g.matrix().det();
        if !det.is_one() {
            return Err(Error::OutOfRange(format!("determinant is {det}, not 1")));
        }
        Ok(g)
    }

    pub fn from_matrix(g: &RatMatrix) -> Result<Self> {
        if !g.is_square() || !g.rows().is_multiple_of(2) {
            return Err(Error::DimensionMismatch("need a 2m x 2m matrix".into()));
        }
        let m = g.rows() / 2;
        Self::from_blocks(g.block(0, 0, m, m), g.block(0, m, m, m), g.block(m, 0, m, m), g.block(m, m, m, m))
    }

    pub fn identity(m: usize) -> Self {
        let (i, z) = (RatMatrix::identity(m), RatMatrix::zeros(m, m));
        GroupElement { a: i.clone(), b: z.clone(), c: z, d: i }
    }

    /// `iota = [[0, -1], [1, 0]]`, acting by `x -> -x^-1`.
    pub fn inversion(m: usize) -> Self {
        let (i, z) = (RatMatrix::identity(m), RatMatrix::zeros(m, m));
        GroupElement { a: z.clone(), b: -&i, c: i, d: z }
    }

    /// `[[1, v], [0, 1]]`, acting by `x -> x + v`.
    pub fn translation(v: &RatMatrix) -> Self {
        let m = v.rows();
        let (i, z) = (RatMatrix::identity(m), RatMatrix::zeros(m, m));
        GroupElement { a: i.clone(), b: v.clone(), c: z, d: i }
    }

    /// `[[a, 0], [0, d]]`, acting by `x -> a x d^-1`.
    pub fn levi(a: &RatMatrix, d: &RatMatrix) -> Result<Self> {
        let z = RatMatrix::zeros(a.rows(), a.rows());
        Self::from_blocks(a.clone(), z.clone(), z, d.clone())
    }

    pub fn m(&self) -> usize {
        self.a.rows()
    }

    pub fn blocks(&self) -> (&RatMatrix, &RatMatrix, &RatMatrix, &RatMatrix) {
        (&self.a, &self.b, &self.c, &self.d)
    }

    pub fn matrix(&self) -> RatMatrix {
        RatMatrix::from_blocks(&self.a, &self.b, &self.c, &self.d)
    }

    pub fn product(&self, other: &GroupElement) -> GroupElement {
        Self::from_matrix(&(&self.matrix() * &other.matrix())).expect("product of SL elements")
    }

    pub fn inverse(&self) -> GroupElement {
        let inv = self.matrix().inverse().expect("determinant one");
        Self::from_matrix(&inv).expect("inverse of an SL element")
    }
}

/// A character parameter `(lambda, eps)` with integer `lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Weight {
    pub lambda: i64,
    pub eps: Sign,
}

impl Weight {
    pub fn new(lambda: i64, eps: Sign) -> Self {
        Weight { lambda, eps }
    }
}

/// `t^{e,eps}` for `t != 0`.
pub fn char_pow(t: &Rational, e: i64, eps: Sign) -> Result<Rational> {
    if t.is_zero() {
        return Err(Error::NotDefined("character of zero".into()));
    }
    let v = crate::algebra::rational::pow_i64(t, e)?;
    Ok(if needs_flip(signum(t), e, eps) { -v } else { v })
}

/// `sgn(t)^(e + [eps = -]) = -1`.
fn needs_flip(sign: i32, e: i64, eps: Sign) -> bool {
    sign < 0 && (e + eps.is_minus() as i64).rem_euclid(2) == 1
}

/// `(ax + b)(cx + d)^-1`.
pub fn act_point(g: &GroupElement, x: &RatMatrix) -> Result<RatMatrix> {
    let den = &(&g.c * x) + &g.d;
    let inv = den
        .inverse()
        .map_err(|_| Error::NotDefined(format!("det(cx + d) = 0 at x = {x}")))?;
    Ok(&(&(&g.a * x) + &g.b) * &inv)
}

/// `alpha(g, x) = det(cx + d)`.
pub fn alpha(g: &GroupElement, x: &RatMatrix) -> Rational {
    (&(&g.c * x) + &g.d).det()
}

/// Both sides of `alpha(g g', x) == alpha(g, g'(x)) alpha(g', x)`.
pub fn cocycle_values(g: &GroupElement, gp: &GroupElement, x: &RatMatrix) -> Result<(Rational, Rational)> {
    let gx = act_point(gp, x)?;
    act_point(g, &gx)?;
    Ok((alpha(&g.product(gp), x), alpha(g, &gx) * alpha(gp, x)))
}

pub fn check_cocycle(g: &GroupElement, gp: &GroupElement, x: &RatMatrix) -> Result<bool> {
    let (l, r) = cocycle_values(g, gp, x)?;
    Ok(l == r)
}

/// Both sides of `det(g(x) - g(y)) == alpha(g, x)^-1 det(x - y) alpha(g, y)^-1`.
pub fn kernel_values(g: &GroupElement, x: &RatMatrix, y: &RatMatrix) -> Result<(Rational, Rational)> {
    let (gx, gy) = (act_point(g, x)?, act_point(g, y)?);
    let lhs = (&gx - &gy).det();
    let rhs = (x - y).det() / (alpha(g, x) * alpha(g, y));
    Ok((lhs, rhs))
}

pub fn check_kernel_covariance(g: &GroupElement, x: &RatMatrix, y: &RatMatrix) -> Result<bool> {
    let (l, r) = kernel_values(g, x, y)?;
    Ok(l == r)
}

/// Which block of variables a jet frame lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Block {
    X,
    Y,
}

impl Block {
    fn var(self, i: usize, j: usize) -> VarId {
        match self {
            Block::X => VarId::x(i, j),
            Block::Y => VarId::y(i, j),
        }
    }

    fn vars(self, m: usize) -> Vec<VarId> {
        match self {
            Block::X => VarId::x_block(m, m),
            Block::Y => VarId::y_block(m, m),
        }
    }
}

pub type JetMatrix = Vec<Vec<Jet>>;

pub fn jet_det(a: &[Vec<Jet>]) -> Result<Jet> {
    let n = a.len();
    if n == 1 {
        return Ok(a[0][0].clone());
    }
    let mut acc = a[0][0].zero_like();
    for (c, lead) in a[0].iter().enumerate() {
        if lead.is_zero() {
            continue;
        }
        let sub: Vec<Vec<Jet>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, j)| j.clone()).collect())
            .collect();
        let t = lead.mul(&jet_det(&sub)?)?;
        acc = if c % 2 == 0 { acc.add(&t)? } else { acc.sub(&t)? };
    }
    Ok(acc)
}

pub fn jet_adjugate(a: &[Vec<Jet>]) -> Result<JetMatrix> {
    let n = a.len();
    if n == 1 {
        return Ok(vec![vec![a[0][0].one_like()]]);
    }
    let mut adj = vec![vec![a[0][0].zero_like(); n]; n];
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        for j in 0..n {
            let sub: Vec<Vec<Jet>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| (0..n).filter(|&c| c != j).map(|c| a[r][c].clone()).collect())
                .collect();
            let cof = jet_det(&sub)?;
            adj[j][i] = if (i + j) % 2 == 0 { cof } else { cof.neg() };
        }
    }
    Ok(adj)
}

pub fn jet_matmul(a: &[Vec<Jet>], b: &[Vec<Jet>]) -> Result<JetMatrix> {
    let n = a.len();
    let mut out = vec![vec![a[0][0].zero_like(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = a[0][0].zero_like();
            for k in 0..n {
                acc = acc.add(&a[i][k].mul(&b[k][j])?)?;
            }
            out[i][j] = acc;
        }
    }
    Ok(out)
}

/// `r * X + s` entrywise for rational `r`, `s`.
fn jet_affine(r: &RatMatrix, xs: &[Vec<Jet>], s: &RatMatrix) -> Result<JetMatrix> {
    let n = xs.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = xs[0][0].constant_like(s[(i, j)].clone());
            for k in 0..n {
                if !r[(i, k)].is_zero() {
                    acc = acc.add(&xs[k][j].scale(&r[(i, k)]))?;
                }
            }
            row.push(acc);
        }
        out.push(row);
    }
    Ok(out)
}

/// `g(X)` and `alpha(g, X)` on jets, for a jet matrix `X`.
pub fn mobius_jets(g: &GroupElement, xs: &[Vec<Jet>]) -> Result<(JetMatrix, Jet)> {
    let num = jet_affine(&g.a, xs, &g.b)?;
    let den = jet_affine(&g.c, xs, &g.d)?;
    let det = jet_det(&den)?;
    if det.constant_term().is_zero() {
        return Err(Error::NotDefined("det(cx + d) vanishes at the base point".into()));
    }
    let inv_det = det.recip()?;
    let adj = jet_adjugate(&den)?;
    let u = jet_matmul(&num, &adj)?
        .into_iter()
        .map(|row| row.into_iter().map(|e| e.mul(&inv_det)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok((u, det))
}

/// `t^{e,eps}` on a jet with nonzero constant term.
pub fn jet_char_pow(t: &Jet, e: i64, eps: Sign) -> Result<Jet> {
    let c = t.constant_term();
    if c.is_zero() {
        return Err(Error::NotDefined("character of a jet vanishing at its base".into()));
    }
    let v = t.pow_i64(e)?;
    Ok(if needs_flip(signum(c), e, eps) { v.neg() } else { v })
}

/// Coordinate jets of one `m x m` block at `x0`.
pub fn coordinate_jets(x0: &RatMatrix, block: Block, order: usize) -> Result<JetMatrix> {
    let m = x0.rows();
    let space = JetSpace::new(block.vars(m), order);
    let base: Arc<Vec<Rational>> = Arc::new(x0.entries().map(|(_, v)| v.clone()).collect());
    let mut slot = 0;
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        let mut row = Vec::with_capacity(m);
        for _ in 0..m {
            row.push(Jet::coordinate(&space, &base, slot));
            slot += 1;
        }
        out.push(row);
    }
    Ok(out)
}

fn block_point(x0: &RatMatrix, block: Block) -> Point {
    x0.entries().map(|((i, j), v)| (block.var(i + 1, j + 1), v.clone())).collect()
}

/// Jacobian determinant of `x -> g(x)` at `x` from first-order jets equals
/// `alpha(g, x)^{-2m}`.
pub fn check_jacobian(g: &GroupElement, x: &RatMatrix) -> Result<bool> {
    let (l, r) = jacobian_values(g, x)?;
    Ok(l == r)
}

/// `(jacobian determinant, alpha(g, x)^{-2m})`.
pub fn jacobian_values(g: &GroupElement, x: &RatMatrix) -> Result<(Rational, Rational)> {
    let m = g.m();
    let xs = coordinate_jets(x, Block::X, 1)?;
    let (u, _) = mobius_jets(g, &xs)?;
    let vars = VarId::x_block(m, m);
    let mut jac = RatMatrix::zeros(m * m, m * m);
    for (r, row) in u.iter().flatten().enumerate() {
        for (c, v) in vars.iter().enumerate() {
            jac[(r, c)] = row.derivative_at_base(&crate::algebra::Monomial::var(*v))?;
        }
    }
    let expected = crate::algebra::rational::pow_i64(&alpha(g, x), -2 * m as i64)?;
    Ok((jac.det(), expected))
}

/// The jets `g^-1(X)` and `alpha(g^-1, X)` at one base point, reusable for
/// every weight and every function.
#[derive(Clone, Debug)]
pub struct Frame {
    pub block: Block,
    pub point: RatMatrix,
    pub u: JetMatrix,
    pub alpha: Jet,
    template: Jet,
}

impl Frame {
    pub fn new(g: &GroupElement, x0: &RatMatrix, block: Block, order: usize) -> Result<Self> {
        let xs = coordinate_jets(x0, block, order)?;
        let (u, alpha) = mobius_jets(&g.inverse(), &xs)?;
        let template = xs[0][0].clone();
        Ok(Frame { block, point: x0.clone(), u, alpha, template })
    }

    /// `f(g^-1 X)` for `f` in the variables of `src` block.
    pub fn compose(&self, f: &Polynomial, src: Block) -> Result<Jet> {
        let m = self.point.rows();
        let mut subs = BTreeMap::new();
        for i in 1..=m {
            for j in 1..=m {
                subs.insert(src.var(i, j), self.u[i - 1][j - 1].clone());
            }
        }
        Jet::eval_polynomial(f, &subs, &self.template)
    }

    /// `alpha(g^-1, X)^{-lambda, eps}`.
    pub fn weight(&self, w: Weight) -> Result<Jet> {
        jet_char_pow(&self.alpha, -w.lambda, w.eps)
    }
}

/// Jet at `x0` of `pi_{w}(g) f` for `f` in the x-variables.
pub fn pi_action_jet(
    w: Weight,
    g: &GroupElement,
    f: &Polynomial,
    x0: &RatMatrix,
    order: usize,
) -> Result<Jet> {
    let frame = Frame::new(g, x0, Block::X, order)?;
    frame.weight(w)?.mul(&frame.compose(f, Block::X)?)
}

/// `pi_w(g) F` at jet level, where `F` is itself a jet based at `g^-1(x0)`.
pub fn pi_action_on_jet(w: Weight, g: &GroupElement, f: &Jet, x0: &RatMatrix) -> Result<Jet> {
    let frame = Frame::new(g, x0, Block::X, f.order())?;
    let inner: Vec<Jet> = frame.u.iter().flatten().cloned().collect();
    frame.weight(w)?.mul(&f.compose(&inner)?)
}

/// Value of `pi_w(g) f` at `x0`.
pub fn pi_action_value(w: Weight, g: &GroupElement, f: &Polynomial, x0: &RatMatrix) -> Result<Rational> {
    let h = g.inverse();
    let hx = act_point(&h, x0)?;
    let weight = char_pow(&alpha(&h, x0), -w.lambda, w.eps)?;
    Ok(weight * f.eval(&block_point(&hx, Block::X))?)
}

/// Value at `(x0, y0)` of `(pi_wx(g) (x) pi_wy(g)) f`.
pub fn pair_action_value(
    wx: Weight,
    wy: Weight,
    g: &GroupElement,
    f: &Polynomial,
    x0: &RatMatrix,
    y0: &RatMatrix,
) -> Result<Rational> {
    let h = g.inverse();
    let (hx, hy) = (act_point(&h, x0)?, act_point(&h, y0)?);
    let weight =
        char_pow(&alpha(&h, x0), -wx.lambda, wx.eps)? * char_pow(&alpha(&h, y0), -wy.lambda, wy.eps)?;
    let mut pt = block_point(&hx, Block::X);
    pt.extend(block_point(&hy, Block::Y));
    Ok(weight * f.eval(&pt)?)
}

/// The two frames of a pair point and the unweighted separable pieces of a
/// fixed `f(x, y)`; weights are applied per query.
#[derive(Clone, Debug)]
pub struct PairJets {
    pub fx: Frame,
    pub fy: Frame,
    parts: Vec<(Jet, Jet)>,
}

impl PairJets {
    /// Frames at `x0` (x-block, order `ox`) and `y0` (y-block, order `oy`).
    pub fn new(
        g: &GroupElement,
        f: &Polynomial,
        x0: &RatMatrix,
        y0: &RatMatrix,
        ox: usize,
        oy: usize,
    ) -> Result<Self> {
        let fx = Frame::new(g, x0, Block::X, ox)?;
        let fy = Frame::new(g, y0, Block::Y, oy)?;
        let mut parts = Vec::new();
        for (ymono, xpoly) in f.split_by(VarId::is_y) {
            let a = fx.compose(&xpoly, Block::X)?;
            let b = fy.compose(&Polynomial::term(Rational::one(), ymono), Block::Y)?;
            parts.push((a, b));
        }
        Ok(PairJets { fx, fy, parts })
    }

    /// Separable jet of `(pi_wx(g) (x) pi_wy(g)) f`.
    pub fn weighted(&self, wx: Weight, wy: Weight) -> Result<SeparableJet> {
        let (ax, ay) = (self.fx.weight(wx)?, self.fy.weight(wy)?);
        let parts = self
            .parts
            .iter()
            .map(|(a, b)| Ok((a.mul(&ax)?, b.mul(&ay)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SeparableJet::new(parts))
    }

    pub fn base_point(&self) -> Point {
        let mut p = block_point(&self.fx.point, Block::X);
        p.extend(block_point(&self.fy.point, Block::Y));
        p
    }
}

/// `(lhs, rhs)` of the `M` intertwining relation at one pair point.
pub fn m_intertwine_values(
    wx: Weight,
    wy: Weight,
    g: &GroupElement,
    f: &Polynomial,
    x0: &RatMatrix,
    y0: &RatMatrix,
) -> Result<(Rational, Rational)> {
    let m = g.m();
    let kernel = crate::minors::minor(
        &crate::minors::MatrixSymbol::XMinusY(m),
        &crate::minors::IndexSubset::full(m),
        &crate::minors::IndexSubset::full(m),
    )?;
    let lhs = (x0 - y0).det() * pair_action_value(wx, wy, g, f, x0, y0)?;
    let shifted = |w: Weight| Weight::new(w.lambda - 1, w.eps.flip());
    let rhs = pair_action_value(shifted(wx), shifted(wy), g, &(&kernel * f), x0, y0)?;
    Ok((lhs, rhs))
}

/// `det(x - y) (pi_{l,e} (x) pi_{u,h})(g) f == (pi_{l-1,-e} (x) pi_{u-1,-h})(g) [det(x - y) f]`
/// at every point.
#[allow(clippy::too_many_arguments)]
pub fn check_m_intertwine(
    lambda: i64,
    mu: i64,
    eps: Sign,
    eta: Sign,
    g: &GroupElement,
    f: &Polynomial,
    points: &[(RatMatrix, RatMatrix)],
) -> Result<bool> {
    let (wx, wy) = (Weight::new(lambda, eps), Weight::new(mu, eta));
    for (x0, y0) in points {
        let (l, r) = m_intertwine_values(wx, wy, g, f, x0, y0)?;
        if l != r {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(lhs, rhs)` of `D`-covariance at one pair point. `d` must be specialized
/// at `(wx.lambda, wy.lambda)` and `df = d f`.
pub fn d_covariance_values(
    d: &DiffOperator,
    df: &Polynomial,
    jets: &PairJets,
    g: &GroupElement,
    wx: Weight,
    wy: Weight,
) -> Result<(Rational, Rational)> {
    let lhs = d.apply_at_separable(&jets.weighted(wx, wy)?, &jets.base_point())?;
    let shifted = |w: Weight| Weight::new(w.lambda + 1, w.eps.flip());
    let rhs = pair_action_value(shifted(wx), shifted(wy), g, df, &jets.fx.point, &jets.fy.point)?;
    Ok((lhs, rhs))
}

/// `D_{l,u} o (pi_{l,e} (x) pi_{u,h})(g) == (pi_{l+1,-e} (x) pi_{u+1,-h})(g) o D_{l,u}`
/// pointwise, for the normalized symbolic `d`.
#[allow(clippy::too_many_arguments)]
pub fn check_d_covariance_with(
    d_symbolic: &DiffOperator,
    lambda: i64,
    mu: i64,
    eps: Sign,
    eta: Sign,
    g: &GroupElement,
    f: &Polynomial,
    points: &[(RatMatrix, RatMatrix)],
) -> Result<bool> {
    let params = param_point(lambda, mu);
    let d = d_symbolic.specialize(&params);
    let df = d.apply(f)?;
    let (wx, wy) = (Weight::new(lambda, eps), Weight::new(mu, eta));
    for (x0, y0) in points {
        let jets = PairJets::new(g, f, x0, y0, d.order_x(), d.order_y())?;
        let (l, r) = d_covariance_values(&d, &df, &jets, g, wx, wy)?;
        if l != r {
            return Ok(false);
        }
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
pub fn check_d_covariance(
    m: usize,
    lambda: i64,
    mu: i64,
    eps: Sign,
    eta: Sign,
    g: &GroupElement,
    f: &Polynomial,
    points: &[(RatMatrix, RatMatrix)],
) -> Result<bool> {
    let d = crate::covariant::build_d(m, &crate::covariant::ParamMode::Symbolic)?;
    check_d_covariance_with(&d, lambda, mu, eps, eta, g, f, points)
}

/// `(lhs, rhs)` of `B`-covariance at one diagonal point. `b` is specialized,
/// `bf = b f`, and `jets` sits at `(x0, x0)`.
pub fn b_covariance_values(
    b: &BiDiffOperator,
    bf: &Polynomial,
    k: usize,
    jets: &PairJets,
    g: &GroupElement,
    wx: Weight,
    wy: Weight,
) -> Result<(Rational, Rational)> {
    let x0 = &jets.fx.point;
    let lhs = b.apply_at_separable(&jets.weighted(wx, wy)?, &block_point(x0, Block::X))?;
    let target = Weight::new(wx.lambda + wy.lambda + 2 * k as i64, wx.eps * wy.eps);
    let rhs = pi_action_value(target, g, bf, x0)?;
    Ok((lhs, rhs))
}

/// `B_{l,u;k} o (pi_{l,e} (x) pi_{u,h})(g) == pi_{l+u+2k, e h}(g) o B_{l,u;k}`
/// at every diagonal point, for the normalized symbolic `b`.
#[allow(clippy::too_many_arguments)]
pub fn check_b_covariance_with(
    b_symbolic: &BiDiffOperator,
    k: usize,
    lambda: i64,
    mu: i64,
    eps: Sign,
    eta: Sign,
    g: &GroupElement,
    f: &Polynomial,
    points: &[RatMatrix],
) -> Result<bool> {
    let b = b_symbolic.specialize(&param_point(lambda, mu));
    let bf = b.apply(f)?;
    let (wx, wy) = (Weight::new(lambda, eps), Weight::new(mu, eta));
    for x0 in points {
        let jets = PairJets::new(g, f, x0, x0, b.order_x(), b.order_y())?;
        let (l, r) = b_covariance_values(&b, &bf, k, &jets, g, wx, wy)?;
        if l != r {
            return Ok(false);
        }
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
pub fn check_b_covariance(
    m: usize,
    k: usize,
    lambda: i64,
    mu: i64,
    eps: Sign,
    eta: Sign,
    g: &GroupElement,
    f: &Polynomial,
    points: &[RatMatrix],
) -> Result<bool> {
    let b = crate::covariant::build_b(m, k, &crate::covariant::ParamMode::Symbolic)?;
    check_b_covariance_with(&b, k, lambda, mu, eps, eta, g, f, points)
}

fn param_point(lambda: i64, mu: i64) -> Point {
    [(VarId::S, crate::algebra::int(lambda)), (VarId::T, crate::algebra::int(mu))]
        .into_iter()
        .collect()
}
