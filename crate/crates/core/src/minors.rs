//! Index subsets, minors, permutation signs and Pochhammer symbols.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;

use crate::algebra::matrix::RatMatrix;
use crate::algebra::{Polynomial, VarId};
use crate::error::{Error, Result};

/// A strictly increasing set of 1-based indices in `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSubset(Vec<usize>);

impl IndexSubset {
    pub fn empty() -> Self {
        IndexSubset(Vec::new())
    }

    /// `{lo, lo+1, ..., hi}`; empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        IndexSubset((lo..=hi).collect())
    }

    pub fn full(m: usize) -> Self {
        Self::range(1, m)
    }

    /// Validates and sorts; rejects duplicates and entries outside `1..=m`.
    pub fn new(mut elems: Vec<usize>, m: usize) -> Result<Self> {
        elems.sort_unstable();
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::OutOfRange(format!("duplicate index in {elems:?}")));
        }
        if elems.iter().any(|&e| e == 0 || e > m) {
            return Err(Error::OutOfRange(format!("index outside 1..={m} in {elems:?}")));
        }
        Ok(IndexSubset(elems))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &IndexSubset) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    /// Complement in `{1..m}`.
    pub fn complement(&self, m: usize) -> IndexSubset {
        IndexSubset((1..=m).filter(|&i| !self.contains(i)).collect())
    }

    pub fn union(&self, other: &IndexSubset) -> IndexSubset {
        let mut v: Vec<usize> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable();
        v.dedup();
        IndexSubset(v)
    }

    pub fn difference(&self, other: &IndexSubset) -> IndexSubset {
        IndexSubset(self.0.iter().copied().filter(|&i| !other.contains(i)).collect())
    }

    pub fn without(&self, i: usize) -> IndexSubset {
        IndexSubset(self.0.iter().copied().filter(|&e| e != i).collect())
    }

    /// 1-based ranks of the elements of `self` inside `within`.
    pub fn positions_in(&self, within: &IndexSubset) -> Result<Vec<usize>> {
        self.0
            .iter()
            .map(|e| {
                within.0.binary_search(e).map(|p| p + 1).map_err(|_| {
                    Error::NotSubset(self.to_string(), within.to_string())
                })
            })
            .collect()
    }

    /// All `k`-subsets of `self`, lexicographic.
    pub fn subsets_of_size(&self, k: usize) -> Vec<IndexSubset> {
        let n = self.0.len();
        if k > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(IndexSubset(idx.iter().map(|&i| self.0[i]).collect()));
            let Some(p) = (0..k).rev().find(|&p| idx[p] != p + n - k) else {
                break;
            };
            idx[p] += 1;
            for q in p + 1..k {
                idx[q] = idx[q - 1] + 1;
            }
        }
        out
    }
}

impl fmt::Display for IndexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

/// All `k`-subsets of `{1..m}`, lexicographic.
pub fn subsets(m: usize, k: usize) -> Result<Vec<IndexSubset>> {
    if k > m {
        return Err(Error::OutOfRange(format!("subset size {k} exceeds {m}")));
    }
    Ok(IndexSubset::full(m).subsets_of_size(k))
}

/// All `C(m,k)^2` ordered pairs `(I, J)` of `k`-subsets, lexicographic.
pub fn subset_pairs(m: usize, k: usize) -> Result<Vec<(IndexSubset, IndexSubset)>> {
    let s = subsets(m, k)?;
    Ok(s.iter()
        .flat_map(|i| s.iter().map(move |j| (i.clone(), j.clone())))
        .collect())
}

/// A sign `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(n: usize) -> Sign {
        if n.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `(-1)^(sum I + sum J)`.
pub fn sign_ij(i: &IndexSubset, j: &IndexSubset) -> Result<Sign> {
    if i.len() != j.len() {
        return Err(Error::CardinalityMismatch(i.len(), j.len()));
    }
    Ok(Sign::from_parity(i.sum() + j.sum()))
}

/// `(-1)^(sum of ranks of P in I + sum of ranks of Q in J)`.
pub fn sign_relative(
    p: &IndexSubset,
    i: &IndexSubset,
    q: &IndexSubset,
    j: &IndexSubset,
) -> Result<Sign> {
    if p.len() != q.len() {
        return Err(Error::CardinalityMismatch(p.len(), q.len()));
    }
    let pp: usize = p.positions_in(i)?.iter().sum();
    let qq: usize = q.positions_in(j)?.iter().sum();
    Ok(Sign::from_parity(pp + qq))
}

/// `base (base+1) ... (base+n-1)`.
pub fn pochhammer(base: &Polynomial, n: i64) -> Result<Polynomial> {
    if n < 0 {
        return Err(Error::OutOfRange(format!("Pochhammer length {n} is negative")));
    }
    let mut acc = Polynomial::one();
    for r in 0..n {
        acc = &acc * &(base + &Polynomial::int(r));
    }
    Ok(acc)
}

/// The square matrix whose minors are taken.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixSymbol {
    X(usize),
    Y(usize),
    XMinusY(usize),
    YMinusX(usize),
    Explicit(RatMatrix),
    /// Arbitrary polynomial entries, square.
    Entries(Vec<Vec<Polynomial>>),
}

impl MatrixSymbol {
    pub fn dim(&self) -> usize {
        match self {
            MatrixSymbol::X(m)
            | MatrixSymbol::Y(m)
            | MatrixSymbol::XMinusY(m)
            | MatrixSymbol::YMinusX(m) => *m,
            MatrixSymbol::Explicit(a) => a.rows(),
            MatrixSymbol::Entries(e) => e.len(),
        }
    }

    /// Entry `(i, j)`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        let x = || Polynomial::var(VarId::x(i, j));
        let y = || Polynomial::var(VarId::y(i, j));
        match self {
            MatrixSymbol::X(_) => x(),
            MatrixSymbol::Y(_) => y(),
            MatrixSymbol::XMinusY(_) => &x() - &y(),
            MatrixSymbol::YMinusX(_) => &y() - &x(),
            MatrixSymbol::Explicit(a) => Polynomial::constant(a[(i - 1, j - 1)].clone()),
            MatrixSymbol::Entries(e) => e[i - 1][j - 1].clone(),
        }
    }
}

/// Memoized minors of one matrix symbol.
pub struct MinorTable {
    symbol: MatrixSymbol,
    memo: HashMap<(IndexSubset, IndexSubset), Polynomial>,
}

impl MinorTable {
    pub fn new(symbol: MatrixSymbol) -> Result<Self> {
        if let MatrixSymbol::Explicit(a) = &symbol {
            if !a.is_square() {
                return Err(Error::DimensionMismatch(format!(
                    "explicit matrix is {}x{}",
                    a.rows(),
                    a.cols()
                )));
            }
        }
        if let MatrixSymbol::Entries(e) = &symbol {
            if e.iter().any(|r| r.len() != e.len()) {
                return Err(Error::DimensionMismatch("entry grid is not square".into()));
            }
        }
        Ok(MinorTable { symbol, memo: HashMap::new() })
    }

    pub fn symbol(&self) -> &MatrixSymbol {
        &self.symbol
    }

    /// `Delta_{I,J}` by Laplace expansion along the first row of `I`.
    pub fn minor(&mut self, i: &IndexSubset, j: &IndexSubset) -> Result<Polynomial> {
        if i.len() != j.len() {
            return Err(Error::CardinalityMismatch(i.len(), j.len()));
        }
        let m = self.symbol.dim();
        if i.as_slice().last().is_some_and(|&e| e > m) || j.as_slice().last().is_some_and(|&e| e > m)
        {
            return Err(Error::OutOfRange(format!("{i} or {j} exceeds {m}")));
        }
        self.minor_unchecked(i, j)
    }

    fn minor_unchecked(&mut self, i: &IndexSubset, j: &IndexSubset) -> Result<Polynomial> {
        if i.is_empty() {
            return Ok(Polynomial::one());
        }
        let key = (i.clone(), j.clone());
        if let Some(p) = self.memo.get(&key) {
            return Ok(p.clone());
        }
        let row = i.as_slice()[0];
        let rest = i.without(row);
        let mut acc = Polynomial::zero();
        for (r, &col) in j.as_slice().iter().enumerate() {
            let a = self.symbol.entry(row, col);
            if a.is_zero() {
                continue;
            }
            let sub = self.minor_unchecked(&rest, &j.without(col))?;
            let term = &a * &sub;
            acc = if r % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        self.memo.insert(key, acc.clone());
        Ok(acc)
    }
}

/// One-shot `Delta_{I,J}(a)`.
pub fn minor(a: &MatrixSymbol, i: &IndexSubset, j: &IndexSubset) -> Result<Polynomial> {
    MinorTable::new(a.clone())?.minor(i, j)
}

/// `(Delta_k, Delta_k^c)`: minors on `{1..k}` and on `{k+1..m}`.
pub fn principal_minors(k: usize, a: &MatrixSymbol) -> Result<(Polynomial, Polynomial)> {
    let m = a.dim();
    if k > m {
        return Err(Error::OutOfRange(format!("order {k} exceeds {m}")));
    }
    let mut t = MinorTable::new(a.clone())?;
    let lead = IndexSubset::range(1, k);
    let tail = IndexSubset::range(k + 1, m);
    Ok((t.minor(&lead, &lead)?, t.minor(&tail, &tail)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn set(v: &[usize]) -> IndexSubset {
        IndexSubset(v.to_vec())
    }

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn minor_examples() {
        let e = IndexSubset::empty();
        assert_eq!(minor(&MatrixSymbol::X(2), &e, &e).unwrap(), Polynomial::one());
        let f = set(&[1, 2]);
        assert_eq!(
            minor(&MatrixSymbol::X(2), &f, &f).unwrap(),
            p("x[1][1]*x[2][2] - x[1][2]*x[2][1]")
        );
        assert_eq!(minor(&MatrixSymbol::X(2), &set(&[1]), &set(&[2])).unwrap(), p("x[1][2]"));
        assert_eq!(
            minor(&MatrixSymbol::X(2), &set(&[1]), &set(&[1, 2])),
            Err(Error::CardinalityMismatch(1, 2))
        );
    }

    #[test]
    fn principal_examples() {
        assert_eq!(
            principal_minors(1, &MatrixSymbol::X(2)).unwrap(),
            (p("x[1][1]"), p("x[2][2]"))
        );
        let det = p("x[1][1]*x[2][2] - x[1][2]*x[2][1]");
        assert_eq!(principal_minors(2, &MatrixSymbol::X(2)).unwrap(), (det.clone(), Polynomial::one()));
        assert_eq!(principal_minors(2, &MatrixSymbol::X(3)).unwrap(), (det, p("x[3][3]")));
        assert!(principal_minors(3, &MatrixSymbol::X(2)).is_err());
    }

    #[test]
    fn explicit_minor_is_constant() {
        let a = RatMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let d = minor(&MatrixSymbol::Explicit(a), &set(&[1, 2]), &set(&[1, 2])).unwrap();
        assert_eq!(d, Polynomial::int(-2));
    }

    #[test]
    fn signs() {
        assert_eq!(sign_ij(&set(&[1, 3]), &set(&[1, 3])).unwrap(), Sign::Plus);
        assert_eq!(sign_ij(&set(&[1]), &set(&[2])).unwrap(), Sign::Minus);
        assert_eq!(sign_ij(&set(&[1, 3]), &set(&[2, 3])).unwrap(), Sign::Minus);
        let i = set(&[1, 2, 3]);
        assert_eq!(sign_relative(&i, &i, &i, &i).unwrap(), Sign::Plus);
        assert_eq!(
            sign_relative(&set(&[5]), &set(&[2, 5]), &set(&[3]), &set(&[1, 3])).unwrap(),
            Sign::Plus
        );
        assert_eq!(
            sign_relative(&set(&[2]), &set(&[1, 2]), &set(&[1]), &set(&[1, 2])).unwrap(),
            Sign::Minus
        );
        assert!(matches!(
            sign_relative(&set(&[3]), &set(&[1, 2]), &set(&[1]), &set(&[1, 2])),
            Err(Error::NotSubset(..))
        ));
    }

    #[test]
    fn pochhammer_examples() {
        let s = Polynomial::var(VarId::S);
        assert_eq!(pochhammer(&s, 0).unwrap(), Polynomial::one());
        let pt = [(VarId::S, int(3))].into_iter().collect();
        assert_eq!(pochhammer(&s, 2).unwrap().eval(&pt).unwrap(), int(12));
        assert_eq!(pochhammer(&s, 2).unwrap(), p("s^2 + s"));
        assert!(pochhammer(&s, -1).is_err());
    }

    #[test]
    fn pair_enumeration() {
        assert_eq!(subset_pairs(1, 0).unwrap(), vec![(IndexSubset::empty(), IndexSubset::empty())]);
        assert_eq!(
            subset_pairs(2, 1).unwrap(),
            vec![
                (set(&[1]), set(&[1])),
                (set(&[1]), set(&[2])),
                (set(&[2]), set(&[1])),
                (set(&[2]), set(&[2]))
            ]
        );
        assert_eq!(subset_pairs(3, 2).unwrap().len(), 9);
        assert!(subset_pairs(2, 3).is_err());
        assert_eq!(
            subsets(4, 2).unwrap(),
            vec![set(&[1, 2]), set(&[1, 3]), set(&[1, 4]), set(&[2, 3]), set(&[2, 4]), set(&[3, 4])]
        );
    }

    #[test]
    fn subset_ops() {
        let i = set(&[2, 4]);
        assert_eq!(i.complement(4), set(&[1, 3]));
        assert_eq!(i.union(&set(&[1, 4])), set(&[1, 2, 4]));
        assert_eq!(i.difference(&set(&[4])), set(&[2]));
        assert_eq!(set(&[4]).positions_in(&i).unwrap(), vec![2]);
        assert!(IndexSubset::new(vec![3, 1], 3).is_ok());
        assert!(IndexSubset::new(vec![1, 1], 3).is_err());
        assert!(IndexSubset::new(vec![4], 3).is_err());
    }
}
