//! Truncated multivariate Taylor expansions with exact coefficients.
//!
//! A jet stores `c_alpha` with `f ~ sum c_alpha (x - base)^alpha` for all
//! `|alpha| <= order`, densely, over a fixed list of active variables.
//! Variables outside the active list are treated as frozen at their base
//! value.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::poly::{Point, Polynomial};
use super::rational::Rational;
use super::var::VarId;
use crate::error::{Error, Result};

/// Index structure shared by all jets with the same variables and order.
pub struct JetSpace {
    vars: Vec<VarId>,
    order: usize,
    monos: Vec<Vec<u16>>,
    degrees: Vec<usize>,
    index: HashMap<Vec<u16>, usize>,
    mul_table: OnceLock<Vec<(u32, u32, u32)>>,
}

impl fmt::Debug for JetSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("JetSpace")
            .field("vars", &self.vars)
            .field("order", &self.order)
            .field("len", &self.monos.len())
            .finish()
    }
}

impl PartialEq for JetSpace {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.order == other.order
    }
}

impl JetSpace {
    pub fn new(vars: Vec<VarId>, order: usize) -> Arc<Self> {
        let n = vars.len();
        let mut monos: Vec<Vec<u16>> = vec![vec![0; n]];
        let mut degrees = vec![0];
        let mut frontier = vec![vec![0u16; n]];
        for d in 1..=order {
            // extend each degree d-1 monomial by a variable at or after its
            // last nonzero slot, so each monomial is produced once
            let mut next = Vec::new();
            for m in &frontier {
                let start = m.iter().rposition(|&e| e > 0).unwrap_or(0);
                for k in start..n {
                    let mut e = m.clone();
                    e[k] += 1;
                    next.push(e);
                }
            }
            next.sort_by(|a, b| b.cmp(a));
            for e in &next {
                monos.push(e.clone());
                degrees.push(d);
            }
            frontier = next;
        }
        let index = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Arc::new(JetSpace { vars, order, monos, degrees, index, mul_table: OnceLock::new() })
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    fn var_slot(&self, v: VarId) -> Option<usize> {
        self.vars.iter().position(|&w| w == v)
    }

    /// Dense index of a monomial, `None` if it uses inactive variables or
    /// exceeds the order.
    pub fn index_of(&self, m: &Monomial) -> Result<Option<usize>> {
        let mut e = vec![0u16; self.vars.len()];
        for (v, k) in m.iter() {
            let slot = self.var_slot(v).ok_or(Error::InactiveVariable(v))?;
            e[slot] = k as u16;
        }
        Ok(self.index.get(&e).copied())
    }

    pub fn monomial(&self, idx: usize) -> Monomial {
        Monomial::from_pairs(
            self.monos[idx].iter().enumerate().map(|(k, &e)| (self.vars[k], e as u32)),
        )
    }

    fn mul_table(&self) -> &[(u32, u32, u32)] {
        self.mul_table.get_or_init(|| {
            let mut table = Vec::new();
            let mut buf = vec![0u16; self.vars.len()];
            for (i, a) in self.monos.iter().enumerate() {
                let da = self.degrees[i];
                for (j, b) in self.monos.iter().enumerate() {
                    if da + self.degrees[j] > self.order {
                        // monos are sorted by degree
                        break;
                    }
                    for k in 0..buf.len() {
                        buf[k] = a[k] + b[k];
                    }
                    table.push((i as u32, j as u32, self.index[&buf] as u32));
                }
            }
            table
        })
    }
}

#[derive(Clone)]
pub struct Jet {
    space: Arc<JetSpace>,
    base: Arc<Vec<Rational>>,
    coeffs: Vec<Rational>,
}

impl fmt::Debug for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Jet(order {}, ", self.space.order)?;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}*[{}]", self.space.monomial(i))?;
        }
        if first {
            f.write_str("0")?;
        }
        f.write_str(")")
    }
}

impl PartialEq for Jet {
    fn eq(&self, other: &Self) -> bool {
        *self.space == *other.space && self.base == other.base && self.coeffs == other.coeffs
    }
}

impl Jet {
    pub fn constant(space: &Arc<JetSpace>, base: &Arc<Vec<Rational>>, c: Rational) -> Jet {
        let mut coeffs = vec![Rational::zero(); space.len()];
        coeffs[0] = c;
        Jet { space: space.clone(), base: base.clone(), coeffs }
    }

    pub fn zero_like(&self) -> Jet {
        Jet::constant(&self.space, &self.base, Rational::zero())
    }

    pub fn one_like(&self) -> Jet {
        Jet::constant(&self.space, &self.base, Rational::one())
    }

    pub fn constant_like(&self, c: Rational) -> Jet {
        Jet::constant(&self.space, &self.base, c)
    }

    /// The jet of the coordinate function `vars[slot]`.
    pub fn coordinate(space: &Arc<JetSpace>, base: &Arc<Vec<Rational>>, slot: usize) -> Jet {
        let mut j = Jet::constant(space, base, base[slot].clone());
        if space.order >= 1 {
            let mut e = vec![0u16; space.vars.len()];
            e[slot] = 1;
            j.coeffs[space.index[&e]] = Rational::one();
        }
        j
    }

    /// Coordinate jets for every active variable of `space` at `point`.
    pub fn coordinates(space: &Arc<JetSpace>, point: &Point) -> Result<BTreeMap<VarId, Jet>> {
        let base = Arc::new(
            space
                .vars
                .iter()
                .map(|v| point.get(v).cloned().ok_or(Error::MissingVariable(*v)))
                .collect::<Result<Vec<_>>>()?,
        );
        Ok(space
            .vars
            .iter()
            .enumerate()
            .map(|(k, v)| (*v, Jet::coordinate(space, &base, k)))
            .collect())
    }

    /// Taylor expansion of `p` at `base` in the variables `active`; other
    /// variables of `p` are frozen at their value in `base`.
    pub fn of_polynomial(
        p: &Polynomial,
        base: &Point,
        active: &[VarId],
        order: usize,
    ) -> Result<Jet> {
        let space = JetSpace::new(active.to_vec(), order);
        let coords = Jet::coordinates(&space, base)?;
        let fixed: Point = base
            .iter()
            .filter(|(v, _)| !active.contains(v))
            .map(|(v, c)| (*v, c.clone()))
            .collect();
        let template = coords
            .values()
            .next()
            .cloned()
            .unwrap_or_else(|| Jet::constant(&space, &Arc::new(Vec::new()), Rational::zero()));
        Jet::eval_polynomial(&p.partial_eval(&fixed), &coords, &template)
    }

    /// Evaluates `p` with each variable replaced by a jet.
    pub fn eval_polynomial(
        p: &Polynomial,
        subs: &BTreeMap<VarId, Jet>,
        template: &Jet,
    ) -> Result<Jet> {
        let mut powers: HashMap<(VarId, u32), Jet> = HashMap::new();
        let mut acc = template.zero_like();
        for (m, c) in p.terms() {
            let mut t = template.constant_like(c.clone());
            for (v, e) in m.iter() {
                let power = match powers.entry((v, e)) {
                    Entry::Occupied(o) => o.into_mut(),
                    Entry::Vacant(slot) => slot.insert(subs.get(&v).ok_or(Error::MissingVariable(v))?.pow(e)),
                };
                t = t.mul(power)?;
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    pub fn space(&self) -> &Arc<JetSpace> {
        &self.space
    }

    pub fn order(&self) -> usize {
        self.space.order
    }

    pub fn vars(&self) -> &[VarId] {
        &self.space.vars
    }

    pub fn base(&self) -> &Arc<Vec<Rational>> {
        &self.base
    }

    pub fn base_point(&self) -> Point {
        self.space.vars.iter().copied().zip(self.base.iter().cloned()).collect()
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Taylor coefficient of `(x - base)^m`; zero beyond the order.
    pub fn coeff(&self, m: &Monomial) -> Result<Rational> {
        Ok(match self.space.index_of(m)? {
            Some(i) => self.coeffs[i].clone(),
            None => Rational::zero(),
        })
    }

    /// `d^m f (base)`.
    pub fn derivative_at_base(&self, m: &Monomial) -> Result<Rational> {
        if m.degree() as usize > self.space.order {
            return Err(Error::InsufficientOrder {
                needed: m.degree() as usize,
                have: self.space.order,
            });
        }
        Ok(self.coeff(m)? * m.factorial())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check_compat(&self, other: &Jet) -> Result<()> {
        if (Arc::ptr_eq(&self.space, &other.space) || *self.space == *other.space)
            && (Arc::ptr_eq(&self.base, &other.base) || self.base == other.base)
        {
            Ok(())
        } else {
            Err(Error::JetMismatch)
        }
    }

    pub fn add(&self, other: &Jet) -> Result<Jet> {
        self.check_compat(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Jet { coeffs, ..self.clone_shell() })
    }

    pub fn sub(&self, other: &Jet) -> Result<Jet> {
        self.check_compat(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Jet { coeffs, ..self.clone_shell() })
    }

    pub fn neg(&self) -> Jet {
        Jet { coeffs: self.coeffs.iter().map(|c| -c).collect(), ..self.clone_shell() }
    }

    pub fn scale(&self, c: &Rational) -> Jet {
        Jet { coeffs: self.coeffs.iter().map(|a| a * c).collect(), ..self.clone_shell() }
    }

    fn clone_shell(&self) -> Jet {
        Jet { space: self.space.clone(), base: self.base.clone(), coeffs: Vec::new() }
    }

    /// Truncated product.
    pub fn mul(&self, other: &Jet) -> Result<Jet> {
        self.check_compat(other)?;
        let mut out = vec![Rational::zero(); self.space.len()];
        if self.space.len() == 1 {
            out[0] = &self.coeffs[0] * &other.coeffs[0];
            return Ok(Jet { coeffs: out, ..self.clone_shell() });
        }
        let table = self.space.mul_table();
        let mut skip_i = u32::MAX;
        for &(i, j, t) in table {
            if i == skip_i {
                continue;
            }
            let a = &self.coeffs[i as usize];
            if a.is_zero() {
                skip_i = i;
                continue;
            }
            let b = &other.coeffs[j as usize];
            if b.is_zero() {
                continue;
            }
            out[t as usize] += a * b;
        }
        Ok(Jet { coeffs: out, ..self.clone_shell() })
    }

    pub fn pow(&self, e: u32) -> Jet {
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same space");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same space");
            }
        }
        acc
    }

    /// `1 / self`, requiring a nonzero constant term.
    pub fn recip(&self) -> Result<Jet> {
        let a0 = self.coeffs[0].clone();
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = a0.recip();
        // 1/(a0 (1 + u)) = inv0 * sum_j (-u)^j
        let mut neg_u = self.scale(&(-inv0.clone()));
        neg_u.coeffs[0] = Rational::zero();
        let mut acc = self.one_like();
        let mut power = self.one_like();
        for _ in 0..self.space.order {
            power = power.mul(&neg_u)?;
            acc = acc.add(&power)?;
        }
        Ok(acc.scale(&inv0))
    }

    /// Integer power; negative exponents go through `recip`.
    pub fn pow_i64(&self, e: i64) -> Result<Jet> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.recip()?.pow(e.unsigned_abs() as u32))
        }
    }

    /// Composition `self(inner_1, ..., inner_n)`, where `inner[k]` is a jet
    /// (on any common space) whose constant term equals the base value of
    /// this jet's `k`-th variable.
    pub fn compose(&self, inner: &[Jet]) -> Result<Jet> {
        if inner.len() != self.space.vars.len() {
            return Err(Error::DimensionMismatch(format!(
                "compose: {} inner jets for {} variables",
                inner.len(),
                self.space.vars.len()
            )));
        }
        let template = match inner.first() {
            Some(j) => j.clone(),
            None => return Err(Error::DimensionMismatch("compose: no variables".into())),
        };
        let mut shifted = Vec::with_capacity(inner.len());
        for (k, j) in inner.iter().enumerate() {
            if j.constant_term() != &self.base[k] {
                return Err(Error::JetMismatch);
            }
            let mut d = j.clone();
            d.coeffs[0] = Rational::zero();
            shifted.push(d);
        }
        let mut powers: Vec<Vec<Jet>> = Vec::with_capacity(shifted.len());
        for d in &shifted {
            let mut row = vec![template.one_like()];
            for _ in 0..self.space.order {
                let next = row.last().unwrap().mul(d)?;
                row.push(next);
            }
            powers.push(row);
        }
        let mut acc = template.zero_like();
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut t = template.constant_like(c.clone());
            for (k, &e) in self.space.monos[idx].iter().enumerate() {
                if e > 0 {
                    t = t.mul(&powers[k][e as usize])?;
                }
            }
            acc = acc.add(&t)?;
        }
        Ok(acc)
    }

    /// The Taylor polynomial `sum c_alpha (x - base)^alpha` in the original
    /// variables.
    pub fn to_polynomial(&self) -> Polynomial {
        let shifted: Vec<Polynomial> = self
            .space
            .vars
            .iter()
            .zip(self.base.iter())
            .map(|(v, b)| &Polynomial::var(*v) - &Polynomial::constant(b.clone()))
            .collect();
        let mut acc = Polynomial::zero();
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut t = Polynomial::constant(c.clone());
            for (k, &e) in self.space.monos[idx].iter().enumerate() {
                if e > 0 {
                    t = &t * &shifted[k].pow(e as u32);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Same jet with the order lowered to `order`.
    pub fn truncate(&self, order: usize) -> Jet {
        let order = order.min(self.space.order);
        let space = JetSpace::new(self.space.vars.clone(), order);
        let coeffs = (0..space.len()).map(|i| self.coeffs[i].clone()).collect();
        Jet { space, base: self.base.clone(), coeffs }
    }
}

/// A function of two disjoint groups of variables given as a finite sum
/// `sum_i a_i(x) * b_i(y)`. Derivatives at the base point factor through the
/// two groups, so mixed derivatives never require a joint expansion.
#[derive(Clone, Debug)]
pub struct SeparableJet {
    pub parts: Vec<(Jet, Jet)>,
}

impl SeparableJet {
    pub fn new(parts: Vec<(Jet, Jet)>) -> Self {
        SeparableJet { parts }
    }

    /// Per-group orders `(x-order, y-order)`.
    pub fn orders(&self) -> (usize, usize) {
        self.parts
            .first()
            .map(|(a, b)| (a.order(), b.order()))
            .unwrap_or((usize::MAX, usize::MAX))
    }

    /// `d^m F (base)` where `m` mixes variables of both groups.
    pub fn derivative_at_base(&self, m: &Monomial) -> Result<Rational> {
        let mut acc = Rational::zero();
        if let Some((a0, _)) = self.parts.first() {
            let left_vars = a0.vars();
            let left = m.filter(|v| left_vars.contains(&v));
            let right = m.filter(|v| !left_vars.contains(&v));
            for (a, b) in &self.parts {
                let da = a.derivative_at_base(&left)?;
                if da.is_zero() {
                    continue;
                }
                acc += da * b.derivative_at_base(&right)?;
            }
        }
        Ok(acc)
    }

    /// Joint jet over the concatenated variables, truncated at `order`.
    pub fn to_jet(&self, order: usize) -> Result<Jet> {
        let (a0, b0) = self
            .parts
            .first()
            .ok_or_else(|| Error::DimensionMismatch("empty separable jet".into()))?;
        let mut vars = a0.vars().to_vec();
        vars.extend_from_slice(b0.vars());
        let mut base = a0.base().as_ref().clone();
        base.extend(b0.base().iter().cloned());
        if order > a0.order() || order > b0.order() {
            return Err(Error::InsufficientOrder { needed: order, have: a0.order().min(b0.order()) });
        }
        let space = JetSpace::new(vars, order);
        let base = Arc::new(base);
        let mut coeffs = vec![Rational::zero(); space.len()];
        let na = a0.vars().len();
        for (idx, e) in space.monos.iter().enumerate() {
            let da: usize = e[..na].iter().map(|&k| k as usize).sum();
            let db: usize = e[na..].iter().map(|&k| k as usize).sum();
            debug_assert!(da <= a0.order() && db <= b0.order());
            let ia = a0.space.index[&e[..na].to_vec()];
            let ib = b0.space.index[&e[na..].to_vec()];
            let mut c = Rational::zero();
            for (a, b) in &self.parts {
                c += &a.coeffs[ia] * &b.coeffs[ib];
            }
            coeffs[idx] = c;
        }
        Ok(Jet { space, base, coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{frac, int};

    fn x() -> VarId {
        VarId::x(1, 1)
    }

    fn pt(pairs: &[(VarId, Rational)]) -> Point {
        pairs.iter().cloned().collect()
    }

    fn univariate(coeffs: &[i64], order: usize) -> Jet {
        // jet at x=1 given coefficients of (x-1)^k
        let space = JetSpace::new(vec![x()], order);
        let base = Arc::new(vec![int(1)]);
        let mut j = Jet::constant(&space, &base, Rational::zero());
        for (k, c) in coeffs.iter().enumerate().take(order + 1) {
            j.coeffs[k] = int(*c);
        }
        j
    }

    #[test]
    fn jet_of_polynomial_examples() {
        let p = Polynomial::var(x());
        let j = Jet::of_polynomial(&p, &pt(&[(x(), int(1))]), &[x()], 2).unwrap();
        assert_eq!(j, univariate(&[1, 1, 0], 2));
        let j2 = Jet::of_polynomial(&p.pow(2), &pt(&[(x(), int(1))]), &[x()], 1).unwrap();
        assert_eq!(j2, univariate(&[1, 2], 1));
    }

    #[test]
    fn det_at_identity_first_order() {
        let v = VarId::x_block(2, 2);
        let det = &(&Polynomial::var(v[0]) * &Polynomial::var(v[3]))
            - &(&Polynomial::var(v[1]) * &Polynomial::var(v[2]));
        let base = pt(&[(v[0], int(1)), (v[1], int(0)), (v[2], int(0)), (v[3], int(1))]);
        let j = Jet::of_polynomial(&det, &base, &v, 1).unwrap();
        assert_eq!(j.constant_term(), &int(1));
        assert_eq!(j.coeff(&Monomial::var(v[0])).unwrap(), int(1));
        assert_eq!(j.coeff(&Monomial::var(v[3])).unwrap(), int(1));
        assert_eq!(j.coeff(&Monomial::var(v[1])).unwrap(), int(0));
        assert_eq!(j.coeffs().len(), 5);
    }

    #[test]
    fn reciprocal_examples() {
        let xj = univariate(&[1, 1], 2);
        assert_eq!(xj.recip().unwrap(), univariate(&[1, -1, 1], 2));
        assert_eq!(xj.recip().unwrap().neg(), univariate(&[-1, 1, -1], 2));
        let v = VarId::x(1, 1);
        let a = Jet::of_polynomial(
            &(&Polynomial::one() + &Polynomial::var(v)),
            &pt(&[(v, frac(1, 3))]),
            &[v],
            3,
        )
        .unwrap();
        let prod = a.mul(&a.recip().unwrap()).unwrap();
        assert_eq!(prod, a.one_like());
        let zero = univariate(&[0, 1], 2);
        assert_eq!(zero.recip().unwrap_err(), Error::ZeroConstantTerm);
    }

    #[test]
    fn composition_matches_direct_expansion() {
        // (1/x) composed with x^2 at x=2: 1/x^2
        let v = x();
        let outer = Jet::of_polynomial(&Polynomial::var(v), &pt(&[(v, int(4))]), &[v], 3)
            .unwrap()
            .recip()
            .unwrap();
        let inner = Jet::of_polynomial(&Polynomial::var(v).pow(2), &pt(&[(v, int(2))]), &[v], 3)
            .unwrap();
        let direct = inner.recip().unwrap();
        assert_eq!(outer.compose(&[inner]).unwrap(), direct);
    }

    #[test]
    fn separable_matches_joint() {
        let (a, b) = (VarId::x(1, 1), VarId::y(1, 1));
        let base = pt(&[(a, int(2)), (b, int(-1))]);
        let pa = &Polynomial::var(a).pow(3) + &Polynomial::int(1);
        let pb = Polynomial::var(b).pow(2);
        let ja = Jet::of_polynomial(&pa, &base, &[a], 3).unwrap();
        let jb = Jet::of_polynomial(&pb, &base, &[b], 3).unwrap();
        let sep = SeparableJet::new(vec![(ja, jb)]);
        let joint = Jet::of_polynomial(&(&pa * &pb), &base, &[a, b], 3).unwrap();
        assert_eq!(sep.to_jet(3).unwrap(), joint);
        let m = Monomial::from_pairs([(a, 1), (b, 2)]);
        assert_eq!(
            sep.derivative_at_base(&m).unwrap(),
            joint.derivative_at_base(&m).unwrap()
        );
    }
}
