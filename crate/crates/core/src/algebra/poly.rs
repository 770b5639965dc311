use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::rational::{int, parse_rational, Rational};
use super::var::VarId;
use crate::error::{Error, Result};

/// An assignment of exact values to variables.
pub type Point = BTreeMap<VarId, Rational>;

/// Multivariate polynomial with rational coefficients in canonical form:
/// no zero coefficients, terms keyed by graded-lex monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(int(n))
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(it: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
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

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Maximum degree counting only the variables accepted by `which`.
    pub fn degree_in(&self, which: impl Fn(VarId) -> bool) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().filter(|(v, _)| which(*v)).map(|(_, e)| e).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.vars().collect::<Vec<_>>()).collect()
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, c: &Rational, mono: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial(&self, v: VarId) -> Polynomial {
        self.derivative(&Monomial::var(v))
    }

    /// `d^alpha p` for a derivative multi-index `alpha`.
    pub fn derivative(&self, alpha: &Monomial) -> Polynomial {
        if alpha.is_one() {
            return self.clone();
        }
        let mut out = Polynomial::zero();
        'terms: for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut pairs = Vec::with_capacity(m.iter().count());
            for (v, e) in m.iter() {
                let d = alpha.exponent(v);
                if d > e {
                    continue 'terms;
                }
                for k in 0..d {
                    coeff *= Rational::from_integer((e - k).into());
                }
                pairs.push((v, e - d));
            }
            for (v, _) in alpha.iter() {
                if m.exponent(v) == 0 {
                    continue 'terms;
                }
            }
            out.add_term(Monomial::from_pairs(pairs), coeff);
        }
        out
    }

    /// Exact value at `point`, which must cover every occurring variable.
    pub fn eval(&self, point: &Point) -> Result<Rational> {
        let mut powers: HashMap<(VarId, u32), Rational> = HashMap::new();
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.iter() {
                let val = point.get(&v).ok_or(Error::MissingVariable(v))?;
                let p = powers
                    .entry((v, e))
                    .or_insert_with(|| num_traits::pow(val.clone(), e as usize));
                t *= &*p;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes values for some variables, keeping the rest symbolic.
    pub fn partial_eval(&self, point: &Point) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in m.iter() {
                match point.get(&v) {
                    Some(val) => coeff *= num_traits::pow(val.clone(), e as usize),
                    None => rest.push((v, e)),
                }
            }
            out.add_term(Monomial::from_pairs(rest), coeff);
        }
        out
    }

    /// Replaces each variable `v` for which `subst(v)` is `Some(q)` by `q`.
    pub fn substitute(&self, subst: impl Fn(VarId) -> Option<Polynomial>) -> Polynomial {
        let mut cache: HashMap<(VarId, u32), Polynomial> = HashMap::new();
        let mut images: HashMap<VarId, Option<Polynomial>> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = Polynomial::one();
            for (v, e) in m.iter() {
                let img = images.entry(v).or_insert_with(|| subst(v)).clone();
                match img {
                    Some(q) => {
                        let pw = cache.entry((v, e)).or_insert_with(|| q.pow(e));
                        factor = &factor * &*pw;
                    }
                    None => kept.push((v, e)),
                }
            }
            let piece = factor.mul_monomial(c, &Monomial::from_pairs(kept));
            out = &out + &piece;
        }
        out
    }

    /// Renames variables; `f` must be injective on the occurring variables
    /// or collisions are merged multiplicatively.
    pub fn rename(&self, f: impl Fn(VarId) -> VarId) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.map_vars(&f), c.clone())))
    }

    /// Splits `self = sum_i c_i(params) * m_i(non-params)` by the non-parameter
    /// part of each monomial.
    pub fn split_by(&self, key: impl Fn(VarId) -> bool) -> BTreeMap<Monomial, Polynomial> {
        let mut out: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let k = m.filter(&key);
            let rest = m.filter(|v| !key(v));
            out.entry(k).or_default().add_term(rest, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Canonical text: terms in descending graded-lex order.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write!(f, "{abs}")?;
            if !m.is_one() {
                write!(f, " * {m}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::polynomial(s)
    }
}

mod parse {
    use super::*;

    struct Cursor<'a> {
        s: &'a [u8],
        pos: usize,
    }

    impl<'a> Cursor<'a> {
        fn skip_ws(&mut self) {
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }

        fn peek(&mut self) -> Option<u8> {
            self.skip_ws();
            self.s.get(self.pos).copied()
        }

        fn err(&self, what: &str) -> Error {
            Error::Parse(format!(
                "{what} at byte {} in {:?}",
                self.pos,
                String::from_utf8_lossy(self.s)
            ))
        }

        fn expect(&mut self, c: u8) -> Result<()> {
            if self.peek() == Some(c) {
                self.pos += 1;
                Ok(())
            } else {
                Err(self.err(&format!("expected '{}'", c as char)))
            }
        }

        fn digits(&mut self) -> Result<&'a str> {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected digits"));
            }
            Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
        }

        fn index(&mut self) -> Result<u8> {
            self.expect(b'[')?;
            let d = self.digits()?;
            self.expect(b']')?;
            d.parse().map_err(|_| self.err("index too large"))
        }

        fn factor(&mut self) -> Result<(Rational, Monomial)> {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.digits()?.to_string();
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let den = self.digits()?;
                        Ok((parse_rational(&format!("{num}/{den}"))?, Monomial::one()))
                    } else {
                        Ok((parse_rational(&num)?, Monomial::one()))
                    }
                }
                Some(b'x') | Some(b'y') => {
                    let c = self.s[self.pos];
                    self.pos += 1;
                    let i = self.index()?;
                    let j = self.index()?;
                    let v = if c == b'x' { VarId::X(i, j) } else { VarId::Y(i, j) };
                    let e = self.exponent()?;
                    Ok((Rational::one(), Monomial::power(v, e)))
                }
                Some(b's') | Some(b't') => {
                    let v = if self.s[self.pos] == b's' { VarId::S } else { VarId::T };
                    self.pos += 1;
                    let e = self.exponent()?;
                    Ok((Rational::one(), Monomial::power(v, e)))
                }
                _ => Err(self.err("expected a number or variable")),
            }
        }

        fn exponent(&mut self) -> Result<u32> {
            if self.peek() == Some(b'^') {
                self.pos += 1;
                self.digits()?.parse().map_err(|_| self.err("bad exponent"))
            } else {
                Ok(1)
            }
        }

        fn term(&mut self) -> Result<(Rational, Monomial)> {
            let (mut c, mut m) = self.factor()?;
            while self.peek() == Some(b'*') {
                self.pos += 1;
                let (c2, m2) = self.factor()?;
                c *= c2;
                m = m.mul(&m2);
            }
            Ok((c, m))
        }
    }

    pub fn polynomial(s: &str) -> Result<Polynomial> {
        let mut cur = Cursor { s: s.as_bytes(), pos: 0 };
        let mut out = Polynomial::zero();
        let mut sign = Rational::one();
        if cur.peek() == Some(b'-') {
            cur.pos += 1;
            sign = -sign;
        }
        loop {
            let (c, m) = cur.term()?;
            out.add_term(m, c * &sign);
            match cur.peek() {
                None => break,
                Some(b'+') => sign = Rational::one(),
                Some(b'-') => sign = -Rational::one(),
                Some(_) => return Err(cur.err("expected '+' or '-'")),
            }
            cur.pos += 1;
        }
        Ok(out)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(x) => *x += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |a, b| &a + &b)
    }
}
