use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::rational::{factorial, Rational};
use super::var::VarId;

/// A power product `prod v^e`, stored sparsely with variables sorted and all
/// exponents positive. Also used as a derivative multi-index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(VarId, u32); 6]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: VarId) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: VarId, e: u32) -> Self {
        let mut m = SmallVec::new();
        if e > 0 {
            m.push((v, e));
        }
        Monomial(m)
    }

    /// Builds from arbitrary `(var, exp)` pairs; repeated variables are merged.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Self {
        let mut v: SmallVec<[(VarId, u32); 6]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        v.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(VarId, u32); 6]> = SmallVec::new();
        for (var, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => out.push((var, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|p| p.1).sum()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.0
            .binary_search_by_key(&v, |p| p.0)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        self.0.iter().map(|p| p.0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = self.0.clone();
        for (v, e) in other.iter() {
            let pos = out.iter().position(|p| p.0 == v)?;
            if out[pos].1 < e {
                return None;
            }
            out[pos].1 -= e;
        }
        out.retain(|p| p.1 > 0);
        Some(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.iter().all(|(v, e)| other.exponent(v) >= e)
    }

    /// `prod e_v!`, the factor relating Taylor coefficients to derivatives.
    pub fn factorial(&self) -> Rational {
        self.iter().fold(Rational::from_integer(1.into()), |acc, (_, e)| acc * factorial(e))
    }

    /// Keeps only the variables satisfying `keep`.
    pub fn filter(&self, keep: impl Fn(VarId) -> bool) -> Monomial {
        Monomial(self.0.iter().copied().filter(|p| keep(p.0)).collect())
    }

    /// Renames variables (e.g. y -> x); merges collisions.
    pub fn map_vars(&self, f: impl Fn(VarId) -> VarId) -> Monomial {
        Monomial::from_pairs(self.iter().map(|(v, e)| (f(v), e)))
    }

    /// All monomials dividing `self`, including `1` and `self`.
    pub fn divisors(&self) -> Vec<Monomial> {
        let mut out = vec![Monomial::one()];
        for (v, e) in self.iter() {
            let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
            for d in &out {
                for k in 0..=e {
                    next.push(d.mul(&Monomial::power(v, k)));
                }
            }
            out = next;
        }
        out
    }
}

/// Graded lexicographic order over the canonical variable order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (Some(&(va, ea)), Some(&(vb, eb))) => {
                    if va == vb {
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                        i += 1;
                        j += 1;
                    } else if va < vb {
                        return Ordering::Greater;
                    } else {
                        return Ordering::Less;
                    }
                }
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize, j: usize) -> VarId {
        VarId::x(i, j)
    }

    #[test]
    fn grlex() {
        let a = Monomial::from_pairs([(x(1, 1), 2)]);
        let b = Monomial::from_pairs([(x(1, 1), 1), (x(1, 2), 1)]);
        let c = Monomial::from_pairs([(x(1, 2), 2)]);
        let d = Monomial::var(x(1, 1));
        assert!(a > b && b > c && c > d && d > Monomial::one());
    }

    #[test]
    fn mul_div_divisors() {
        let a = Monomial::from_pairs([(x(1, 1), 2), (VarId::S, 1)]);
        let b = Monomial::from_pairs([(x(1, 1), 1), (x(2, 2), 1)]);
        let p = a.mul(&b);
        assert_eq!(p.exponent(x(1, 1)), 3);
        assert_eq!(p.div(&b), Some(a.clone()));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.divisors().len(), 6);
        assert_eq!(Monomial::from_pairs([(x(1, 1), 1), (x(1, 1), 2)]).exponent(x(1, 1)), 3);
    }
}
