//! Differential operators with polynomial coefficients in normal form.
//!
//! A [`DiffOperator`] is `sum_alpha c_alpha(x, y) d^alpha` with every
//! coefficient to the left of every derivative. The derivative multi-index
//! `alpha` is a [`Monomial`] over the x- and y-entries jointly.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::rational::binomial;
use crate::algebra::{Jet, Monomial, Point, Polynomial, Rational, SeparableJet, VarId};
use crate::error::{Error, Result};
use crate::minors::{minor, IndexSubset, MatrixSymbol};

/// Size of each of the two variable blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Shape {
    pub rows: usize,
    pub cols: usize,
}

impl Shape {
    pub fn square(m: usize) -> Self {
        Shape { rows: m, cols: m }
    }

    fn admits(&self, v: VarId) -> bool {
        match v {
            VarId::X(i, j) | VarId::Y(i, j) => {
                (1..=self.rows).contains(&(i as usize)) && (1..=self.cols).contains(&(j as usize))
            }
            _ => true,
        }
    }

    fn check_poly(&self, p: &Polynomial) -> Result<()> {
        match p.variables().into_iter().find(|v| !self.admits(*v)) {
            Some(v) => Err(Error::DimensionMismatch(format!(
                "variable {v} outside a {}x{} block",
                self.rows, self.cols
            ))),
            None => Ok(()),
        }
    }
}

/// `prod_v C(alpha_v, gamma_v)` for `gamma <= alpha`.
pub fn multi_binomial(alpha: &Monomial, gamma: &Monomial) -> Rational {
    gamma
        .iter()
        .fold(Rational::one(), |acc, (v, g)| acc * binomial(alpha.exponent(v), g))
}

/// Derivative part of an operator term restricted to a block.
fn block_degree(alpha: &Monomial, which: impl Fn(VarId) -> bool) -> usize {
    alpha.iter().filter(|(v, _)| which(*v)).map(|(_, e)| e as usize).sum()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiffOperator {
    shape: Shape,
    terms: BTreeMap<Monomial, Polynomial>,
}

/// Which matrix the derivative symbol `Delta_{I,J}(.)` is taken of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaBlock {
    XOnly,
    XMinusY,
}

impl DiffOperator {
    pub fn zero(shape: Shape) -> Self {
        DiffOperator { shape, terms: BTreeMap::new() }
    }

    pub fn identity(shape: Shape) -> Self {
        Self::multiplication(shape, Polynomial::one())
    }

    pub fn multiplication(shape: Shape, p: Polynomial) -> Self {
        let mut op = Self::zero(shape);
        op.add_term(Monomial::one(), p);
        op
    }

    pub fn partial(shape: Shape, v: VarId) -> Self {
        let mut op = Self::zero(shape);
        op.add_term(Monomial::var(v), Polynomial::one());
        op
    }

    /// `c * d^alpha`.
    pub fn term(shape: Shape, alpha: Monomial, c: Polynomial) -> Self {
        let mut op = Self::zero(shape);
        op.add_term(alpha, c);
        op
    }

    /// The constant-coefficient operator `p(d/dx, d/dy)`: every x/y variable of
    /// `p` becomes the matching partial derivative, parameters stay scalars.
    pub fn from_symbol(shape: Shape, p: &Polynomial) -> Self {
        let mut op = Self::zero(shape);
        for (m, c) in p.terms() {
            let alpha = m.filter(|v| !v.is_param());
            let coeff = Polynomial::term(c.clone(), m.filter(VarId::is_param));
            op.add_term(alpha, coeff);
        }
        op
    }

    /// `Delta_{I,J}(d/dx)` or `Delta_{I,J}(d/dx - d/dy)`.
    pub fn delta_partial(
        m: usize,
        i: &IndexSubset,
        j: &IndexSubset,
        block: DeltaBlock,
    ) -> Result<Self> {
        let sym = match block {
            DeltaBlock::XOnly => MatrixSymbol::X(m),
            DeltaBlock::XMinusY => MatrixSymbol::XMinusY(m),
        };
        Ok(Self::from_symbol(Shape::square(m), &minor(&sym, i, j)?))
    }

    pub fn add_term(&mut self, alpha: Monomial, c: Polynomial) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(alpha) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending order of the derivative index.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Polynomial)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &Monomial) -> Polynomial {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    /// Maximum total order of the derivative parts; 0 for the zero operator.
    pub fn order(&self) -> usize {
        self.terms.keys().map(|a| a.degree() as usize).max().unwrap_or(0)
    }

    pub fn order_x(&self) -> usize {
        self.terms.keys().map(|a| block_degree(a, VarId::is_x)).max().unwrap_or(0)
    }

    pub fn order_y(&self) -> usize {
        self.terms.keys().map(|a| block_degree(a, VarId::is_y)).max().unwrap_or(0)
    }

    fn check_shape(&self, other: &DiffOperator) -> Result<()> {
        if self.shape == other.shape {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "operators on {:?} and {:?}",
                self.shape, other.shape
            )))
        }
    }

    pub fn add(&self, other: &DiffOperator) -> Result<DiffOperator> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &DiffOperator) -> Result<DiffOperator> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> DiffOperator {
        let mut out = Self::zero(self.shape);
        for (a, p) in &self.terms {
            out.add_term(a.clone(), p.scale(c));
        }
        out
    }

    /// `p * self` (left multiplication keeps normal form).
    pub fn left_mul(&self, p: &Polynomial) -> DiffOperator {
        let mut out = Self::zero(self.shape);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), c * p);
        }
        out
    }

    /// Maps every coefficient through `f`.
    pub fn map_coeffs(&self, f: impl Fn(&Polynomial) -> Polynomial) -> DiffOperator {
        let mut out = Self::zero(self.shape);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), f(c));
        }
        out
    }

    /// Substitutes polynomials for parameters (or any variables) in the
    /// coefficients.
    pub fn substitute(&self, subst: impl Fn(VarId) -> Option<Polynomial>) -> DiffOperator {
        self.map_coeffs(|c| c.substitute(&subst))
    }

    /// Fixes some coefficient variables to exact values.
    pub fn specialize(&self, values: &Point) -> DiffOperator {
        self.map_coeffs(|c| c.partial_eval(values))
    }

    /// `op f`, exactly.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        self.shape.check_poly(f)?;
        let mut out = Polynomial::zero();
        for (a, c) in &self.terms {
            let d = f.derivative(a);
            if !d.is_zero() {
                out = &out + &(c * &d);
            }
        }
        Ok(out)
    }

    /// Value of `op f` at the jet's base point. Coefficients are evaluated at
    /// the base point extended by `extra` (e.g. parameter values).
    pub fn apply_at_jet_with(&self, f: &Jet, extra: &Point) -> Result<Rational> {
        if self.order() > f.order() {
            return Err(Error::InsufficientOrder { needed: self.order(), have: f.order() });
        }
        let mut point = f.base_point();
        point.extend(extra.iter().map(|(v, c)| (*v, c.clone())));
        let mut acc = Rational::zero();
        for (a, c) in &self.terms {
            if let Some(v) = a.vars().find(|v| !f.vars().contains(v)) {
                return Err(Error::InactiveVariable(v));
            }
            let d = f.derivative_at_base(a)?;
            if d.is_zero() {
                continue;
            }
            acc += c.eval(&point)? * d;
        }
        Ok(acc)
    }

    pub fn apply_at_jet(&self, f: &Jet) -> Result<Rational> {
        self.apply_at_jet_with(f, &Point::new())
    }

    /// Value at `point` of `op F` for a separable `F(x, y)`; block orders are
    /// checked separately.
    pub fn apply_at_separable(&self, f: &SeparableJet, point: &Point) -> Result<Rational> {
        let (ox, oy) = f.orders();
        if self.order_x() > ox {
            return Err(Error::InsufficientOrder { needed: self.order_x(), have: ox });
        }
        if self.order_y() > oy {
            return Err(Error::InsufficientOrder { needed: self.order_y(), have: oy });
        }
        let mut acc = Rational::zero();
        for (a, c) in &self.terms {
            let d = f.derivative_at_base(a)?;
            if d.is_zero() {
                continue;
            }
            acc += c.eval(point)? * d;
        }
        Ok(acc)
    }

    /// Normal form of `self o other` by the Leibniz rule
    /// `d^alpha (b d^beta) = sum_{gamma <= alpha} C(alpha, gamma) (d^gamma b) d^(alpha - gamma + beta)`.
    pub fn compose(&self, other: &DiffOperator) -> Result<DiffOperator> {
        self.check_shape(other)?;
        let mut acc: HashMap<Monomial, Polynomial> = HashMap::new();
        let mut derived: HashMap<(Monomial, Monomial), Polynomial> = HashMap::new();
        for (alpha, a) in &self.terms {
            for gamma in alpha.divisors() {
                let rest = alpha.div(&gamma).expect("divisor");
                let w = multi_binomial(alpha, &gamma);
                for (beta, b) in &other.terms {
                    let d = derived
                        .entry((gamma.clone(), beta.clone()))
                        .or_insert_with(|| b.derivative(&gamma));
                    if d.is_zero() {
                        continue;
                    }
                    let piece = (a * &*d).scale(&w);
                    let key = rest.mul(beta);
                    match acc.get_mut(&key) {
                        Some(p) => *p = &*p + &piece,
                        None => {
                            acc.insert(key, piece);
                        }
                    }
                }
            }
        }
        let mut out = Self::zero(self.shape);
        for (k, c) in acc {
            out.add_term(k, c);
        }
        Ok(out)
    }

    /// Restriction to the diagonal: coefficients with `y := x`.
    pub fn restrict_diagonal(&self) -> BiDiffOperator {
        let mut out = BiDiffOperator::zero(self.shape);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), c.rename(VarId::to_x));
        }
        out
    }

    pub fn to_text(&self, header: &[(String, String)]) -> String {
        write_text(self.shape, header, self.terms.iter())
    }

    pub fn from_text(text: &str) -> Result<(Vec<(String, String)>, DiffOperator)> {
        let (header, shape, terms) = read_text(text)?;
        let mut op = DiffOperator::zero(shape);
        for (a, c) in terms {
            op.add_term(a, c);
        }
        Ok((header, op))
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&[]))
    }
}

/// `phi -> sum_{alpha,beta} a_{alpha,beta}(x) (d_x^alpha d_y^beta phi)(x, x)`.
///
/// The index is a joint monomial: x-variables differentiate the first slot,
/// y-variables the second. Coefficients involve x-variables and parameters
/// only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BiDiffOperator {
    shape: Shape,
    terms: BTreeMap<Monomial, Polynomial>,
}

impl BiDiffOperator {
    pub fn zero(shape: Shape) -> Self {
        BiDiffOperator { shape, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, alpha: Monomial, c: Polynomial) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(alpha.clone()).or_default();
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Polynomial)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &Monomial) -> Polynomial {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn order(&self) -> usize {
        self.terms.keys().map(|a| a.degree() as usize).max().unwrap_or(0)
    }

    pub fn order_x(&self) -> usize {
        self.terms.keys().map(|a| block_degree(a, VarId::is_x)).max().unwrap_or(0)
    }

    pub fn order_y(&self) -> usize {
        self.terms.keys().map(|a| block_degree(a, VarId::is_y)).max().unwrap_or(0)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Polynomial) -> Polynomial) -> BiDiffOperator {
        let mut out = Self::zero(self.shape);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), f(c));
        }
        out
    }

    pub fn specialize(&self, values: &Point) -> BiDiffOperator {
        self.map_coeffs(|c| c.partial_eval(values))
    }

    /// True iff no coefficient involves a matrix entry.
    pub fn has_constant_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.variables().iter().all(|v| v.is_param()))
    }

    /// `(op phi)(x)` for a polynomial `phi(x, y)`.
    pub fn apply(&self, phi: &Polynomial) -> Result<Polynomial> {
        self.shape.check_poly(phi)?;
        let mut out = Polynomial::zero();
        for (a, c) in &self.terms {
            let d = phi.derivative(a);
            if !d.is_zero() {
                out = &out + &(c * &d.rename(VarId::to_x));
            }
        }
        Ok(out)
    }

    /// `op (p(x) q(y))` for polynomials `p`, `q` in the x-variables.
    pub fn apply_pair(&self, p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
        self.apply(&(p * &q.rename(VarId::to_y)))
    }

    /// Value at the diagonal point `x` of `op F` for a separable `F`, whose
    /// jets must both sit at `x`.
    pub fn apply_at_separable(&self, f: &SeparableJet, x: &Point) -> Result<Rational> {
        let (ox, oy) = f.orders();
        if self.order_x() > ox {
            return Err(Error::InsufficientOrder { needed: self.order_x(), have: ox });
        }
        if self.order_y() > oy {
            return Err(Error::InsufficientOrder { needed: self.order_y(), have: oy });
        }
        let mut acc = Rational::zero();
        for (a, c) in &self.terms {
            let d = f.derivative_at_base(a)?;
            if d.is_zero() {
                continue;
            }
            acc += c.eval(x)? * d;
        }
        Ok(acc)
    }

    pub fn to_text(&self, header: &[(String, String)]) -> String {
        write_text(self.shape, header, self.terms.iter())
    }

    pub fn from_text(text: &str) -> Result<(Vec<(String, String)>, BiDiffOperator)> {
        let (header, shape, terms) = read_text(text)?;
        let mut op = BiDiffOperator::zero(shape);
        for (a, c) in terms {
            op.add_term(a, c);
        }
        Ok((header, op))
    }
}

impl fmt::Display for BiDiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(&[]))
    }
}

fn index_text(alpha: &Monomial, shape: Shape, y: bool) -> String {
    let mut parts = Vec::with_capacity(shape.rows * shape.cols);
    for i in 1..=shape.rows {
        for j in 1..=shape.cols {
            let v = if y { VarId::y(i, j) } else { VarId::x(i, j) };
            parts.push(alpha.exponent(v).to_string());
        }
    }
    format!("[{}]", parts.join(","))
}

fn parse_index(text: &str, shape: Shape, y: bool) -> Result<Vec<(VarId, u32)>> {
    let bad = || Error::Parse(format!("bad multi-index {text:?}"));
    let inner = text.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
    let exps: Vec<u32> = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner.split(',').map(|e| e.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
    };
    if exps.len() != shape.rows * shape.cols {
        return Err(bad());
    }
    Ok(exps
        .into_iter()
        .enumerate()
        .map(|(k, e)| {
            let (i, j) = (k / shape.cols + 1, k % shape.cols + 1);
            (if y { VarId::y(i, j) } else { VarId::x(i, j) }, e)
        })
        .collect())
}

/// Header lines `# key: value`, a `# shape: RxC` line, then one term per line
/// `coeff || dx-exponents || dy-exponents` in descending index order.
fn write_text<'a>(
    shape: Shape,
    header: &[(String, String)],
    terms: impl DoubleEndedIterator<Item = (&'a Monomial, &'a Polynomial)>,
) -> String {
    let mut out = String::new();
    for (k, v) in header {
        out.push_str(&format!("# {k}: {v}\n"));
    }
    out.push_str(&format!("# shape: {}x{}\n", shape.rows, shape.cols));
    for (a, c) in terms.rev() {
        out.push_str(&format!(
            "{c} || {} || {}\n",
            index_text(a, shape, false),
            index_text(a, shape, true)
        ));
    }
    out
}

type ParsedText = (Vec<(String, String)>, Shape, Vec<(Monomial, Polynomial)>);

fn read_text(text: &str) -> Result<ParsedText> {
    let mut header = Vec::new();
    let mut shape = None;
    let mut terms = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        if let Some(h) = line.strip_prefix('#') {
            let (k, v) = h
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("bad header line {line:?}")))?;
            let (k, v) = (k.trim(), v.trim());
            if k == "shape" {
                let (r, c) = v
                    .split_once('x')
                    .and_then(|(r, c)| Some((r.parse().ok()?, c.parse().ok()?)))
                    .ok_or_else(|| Error::Parse(format!("bad shape {v:?}")))?;
                shape = Some(Shape { rows: r, cols: c });
            } else {
                header.push((k.to_string(), v.to_string()));
            }
            continue;
        }
        let shape = shape.ok_or_else(|| Error::Parse("term before shape header".into()))?;
        let fields: Vec<&str> = line.split("||").collect();
        if fields.len() != 3 {
            return Err(Error::Parse(format!("expected 3 fields in {line:?}")));
        }
        let c: Polynomial = fields[0].trim().parse()?;
        let mut pairs = parse_index(fields[1], shape, false)?;
        pairs.extend(parse_index(fields[2], shape, true)?);
        terms.push((Monomial::from_pairs(pairs), c));
    }
    let shape = shape.ok_or_else(|| Error::Parse("missing shape header".into()))?;
    Ok((header, shape, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::frac;
    use crate::algebra::{int, JetSpace};
    use std::sync::Arc;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn x() -> VarId {
        VarId::x(1, 1)
    }

    fn y() -> VarId {
        VarId::y(1, 1)
    }

    const S1: Shape = Shape { rows: 1, cols: 1 };

    #[test]
    fn apply_examples() {
        let s2 = Shape::square(2);
        let det = p("x[1][1]*x[2][2] - x[1][2]*x[2][1]");
        assert_eq!(DiffOperator::partial(s2, VarId::x(1, 1)).apply(&det).unwrap(), p("x[2][2]"));
        let full = IndexSubset::full(2);
        let d = DiffOperator::delta_partial(2, &full, &full, DeltaBlock::XOnly).unwrap();
        assert_eq!(d.apply(&det.pow(2)).unwrap(), det.scale(&int(6)));
        assert_eq!(DiffOperator::identity(s2).apply(&det).unwrap(), det);
        assert!(DiffOperator::identity(S1).apply(&det).is_err());
    }

    #[test]
    fn delta_partial_examples() {
        let one = IndexSubset::full(1);
        let d = DiffOperator::delta_partial(1, &one, &one, DeltaBlock::XMinusY).unwrap();
        let mut expect = DiffOperator::partial(S1, x());
        expect.add_term(Monomial::var(y()), Polynomial::int(-1));
        assert_eq!(d, expect);
        let e = IndexSubset::empty();
        assert_eq!(
            DiffOperator::delta_partial(1, &e, &e, DeltaBlock::XOnly).unwrap(),
            DiffOperator::identity(S1)
        );
        let full = IndexSubset::full(2);
        let d = DiffOperator::delta_partial(2, &full, &full, DeltaBlock::XOnly).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(
            d.coeff(&Monomial::from_pairs([(VarId::x(1, 1), 1), (VarId::x(2, 2), 1)])),
            Polynomial::one()
        );
        assert_eq!(
            d.coeff(&Monomial::from_pairs([(VarId::x(1, 2), 1), (VarId::x(2, 1), 1)])),
            Polynomial::int(-1)
        );
    }

    #[test]
    fn compose_examples() {
        let dx = DiffOperator::partial(S1, x());
        let mx = DiffOperator::multiplication(S1, Polynomial::var(x()));
        let c = dx.compose(&mx).unwrap();
        let mut expect = DiffOperator::term(S1, Monomial::var(x()), Polynomial::var(x()));
        expect.add_term(Monomial::one(), Polynomial::one());
        assert_eq!(c, expect);
        assert_eq!(DiffOperator::identity(S1).compose(&c).unwrap(), c);
        let dy = DiffOperator::partial(S1, y());
        let f = p("x[1][1]*y[1][1]");
        let c = dx.compose(&dy).unwrap();
        assert_eq!(c.apply(&f).unwrap(), Polynomial::one());
        assert_eq!(dx.apply(&dy.apply(&f).unwrap()).unwrap(), Polynomial::one());
    }

    #[test]
    fn apply_at_jet_examples() {
        // (x - y) dx dy on 1/(xy) at (1, 2).
        let op = DiffOperator::term(
            S1,
            Monomial::from_pairs([(x(), 1), (y(), 1)]),
            p("x[1][1] - y[1][1]"),
        );
        let space = JetSpace::new(vec![x(), y()], 2);
        let pt: Point = [(x(), int(1)), (y(), int(2))].into_iter().collect();
        let coords = Jet::coordinates(&space, &pt).unwrap();
        let f = coords[&x()].mul(&coords[&y()]).unwrap().recip().unwrap();
        assert_eq!(op.apply_at_jet(&f).unwrap(), frac(-1, 4));
        assert_eq!(op.apply_at_jet(&f.zero_like()).unwrap(), int(0));

        let sx = JetSpace::new(vec![x()], 1);
        let base = Arc::new(vec![int(1)]);
        let inv = Jet::coordinate(&sx, &base, 0).recip().unwrap().neg();
        assert_eq!(DiffOperator::partial(S1, x()).apply_at_jet(&inv).unwrap(), int(1));

        let low = f.truncate(1);
        assert_eq!(
            op.apply_at_jet(&low),
            Err(Error::InsufficientOrder { needed: 2, have: 1 })
        );
        let dy = DiffOperator::partial(S1, y());
        assert_eq!(dy.apply_at_jet(&inv), Err(Error::InactiveVariable(y())));
    }

    #[test]
    fn restrict_examples() {
        let op = DiffOperator::term(
            S1,
            Monomial::from_pairs([(x(), 1), (y(), 1)]),
            p("x[1][1] - y[1][1]"),
        );
        assert!(op.restrict_diagonal().is_empty());
        let mut op = DiffOperator::term(S1, Monomial::var(x()), p("t"));
        op.add_term(Monomial::var(y()), p("-s"));
        let b = op.restrict_diagonal();
        assert_eq!(b.coeff(&Monomial::var(x())), p("t"));
        assert_eq!(b.coeff(&Monomial::var(y())), p("-s"));
        assert!(b.has_constant_coefficients());
        let mut c = BiDiffOperator::zero(S1);
        c.add_term(Monomial::var(x()), p("x[1][1]"));
        assert!(!c.has_constant_coefficients());
    }

    #[test]
    fn text_round_trip() {
        let mut op = DiffOperator::term(S1, Monomial::from_pairs([(x(), 1), (y(), 1)]), p("x[1][1] - y[1][1]"));
        op.add_term(Monomial::var(x()), p("-t"));
        op.add_term(Monomial::var(y()), p("s"));
        let header = vec![("kind".to_string(), "D".to_string())];
        let text = op.to_text(&header);
        assert_eq!(
            text,
            "# kind: D\n# shape: 1x1\n1 * x[1][1] - 1 * y[1][1] || [1] || [1]\n-1 * t || [1] || [0]\n1 * s || [0] || [1]\n"
        );
        let (h, back) = DiffOperator::from_text(&text).unwrap();
        assert_eq!(h, header);
        assert_eq!(back, op);
        assert_eq!(back.to_text(&h), text);
    }
}
