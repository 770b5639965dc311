//! The covariant families `H_{s,t}`, `D_{lambda,mu} = H_{m-lambda,m-mu}` and
//! `B_{lambda,mu;k}`.
//!
//! Operators are normalized: the scalar prefactor `(i/2pi)^m` of `H` is
//! dropped so that all coefficients stay rational. [`dropped_scalar`] records
//! what was removed. In `D` and `B` the parameter `s` stands for `lambda` and
//! `t` for `mu`.

use crate::algebra::{Point, Polynomial, Rational, VarId};
use crate::bernstein::q_coefficient;
use crate::error::{Error, Result};
use crate::minors::{subset_pairs, MatrixSymbol, MinorTable};
use crate::scalars::NormalizationScalar;
use crate::weyl::{BiDiffOperator, DiffOperator, Shape};

/// Whether `lambda`, `mu` stay symbolic or are fixed to values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamMode {
    Symbolic,
    Specialized(Rational, Rational),
}

impl ParamMode {
    fn point(&self) -> Option<Point> {
        match self {
            ParamMode::Symbolic => None,
            ParamMode::Specialized(l, u) => {
                Some([(VarId::S, l.clone()), (VarId::T, u.clone())].into_iter().collect())
            }
        }
    }
}

/// `(i / 2pi)^(m k)`, the scalar removed from a `k`-fold product of `H`s.
pub fn dropped_scalar(m: usize, k: usize) -> NormalizationScalar {
    let n = (m * k) as i64;
    NormalizationScalar {
        rational: Rational::from_integer(1.into()),
        power_of_two: -n,
        power_of_pi: Rational::from_integer((-n).into()),
        power_of_i: n,
    }
}

/// Normalized `H_{s,t} = sum_k (-1)^k sum_{|I|=|J|=k} h_{I,J}(d/dx, d/dy) o
/// Delta_{I^c,J^c}(x - y)`, with `h_{I,J}` the symbol of `q_{I,J}`.
pub fn build_h(m: usize) -> Result<DiffOperator> {
    let shape = Shape::square(m);
    let mut kernel = MinorTable::new(MatrixSymbol::XMinusY(m))?;
    let mut op = DiffOperator::zero(shape);
    for k in 0..=m {
        for (i, j) in subset_pairs(m, k)? {
            let h = q_coefficient(m, &i, &j)?;
            let mult = kernel.minor(&i.complement(m), &j.complement(m))?;
            let term = DiffOperator::from_symbol(shape, &h)
                .compose(&DiffOperator::multiplication(shape, mult))?;
            op = if k % 2 == 0 { op.add(&term)? } else { op.sub(&term)? };
        }
    }
    Ok(op)
}

/// `D_{lambda,mu} = H_{m-lambda, m-mu}` (normalized).
pub fn build_d(m: usize, mode: &ParamMode) -> Result<DiffOperator> {
    let h = build_h(m)?;
    Ok(d_from_h(&h, m, mode))
}

/// Rewrites a symbolic `H` as `D` in the given parameter mode.
pub fn d_from_h(h: &DiffOperator, m: usize, mode: &ParamMode) -> DiffOperator {
    let mm = Polynomial::int(m as i64);
    let d = h.substitute(|v| match v {
        VarId::S | VarId::T => Some(&mm - &Polynomial::var(v)),
        _ => None,
    });
    match mode.point() {
        Some(p) => d.specialize(&p),
        None => d,
    }
}

/// `D_{lambda+j, mu+j}` from symbolic `D_{lambda,mu}`.
pub fn shift_params(d: &DiffOperator, j: i64) -> DiffOperator {
    d.substitute(|v| match v {
        VarId::S | VarId::T => Some(&Polynomial::var(v) + &Polynomial::int(j)),
        _ => None,
    })
}

/// `D_{lambda+k-1,mu+k-1} o ... o D_{lambda,mu}` before restriction.
pub fn d_chain(m: usize, k: usize, mode: &ParamMode) -> Result<DiffOperator> {
    let d = build_d(m, &ParamMode::Symbolic)?;
    d_chain_from(&d, k, mode)
}

/// As [`d_chain`] from a prebuilt symbolic `D`.
pub fn d_chain_from(d: &DiffOperator, k: usize, mode: &ParamMode) -> Result<DiffOperator> {
    let factor = |j: usize| {
        let dj = shift_params(d, j as i64);
        match mode.point() {
            Some(p) => dj.specialize(&p),
            None => dj,
        }
    };
    let mut acc = DiffOperator::identity(d.shape());
    for j in 0..k {
        acc = factor(j).compose(&acc)?;
    }
    Ok(acc)
}

/// `B_{lambda,mu;k} = res o D_{lambda+k-1,mu+k-1} o ... o D_{lambda,mu}`
/// (normalized). `k = 0` gives the bare restriction.
pub fn build_b(m: usize, k: usize, mode: &ParamMode) -> Result<BiDiffOperator> {
    Ok(d_chain(m, k, mode)?.restrict_diagonal())
}

pub fn build_b_from(d: &DiffOperator, k: usize, mode: &ParamMode) -> Result<BiDiffOperator> {
    Ok(d_chain_from(d, k, mode)?.restrict_diagonal())
}

/// True iff no coefficient of `b` involves a matrix entry.
pub fn check_constant_coefficients(b: &BiDiffOperator) -> bool {
    b.has_constant_coefficients()
}

/// Header lines recording the normalization of a serialized operator.
pub fn scalar_header(s: &NormalizationScalar) -> Vec<(String, String)> {
    vec![("dropped-scalar".into(), s.to_string())]
}

/// Guards the `k >= 1` precondition where callers need it.
pub fn require_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::OutOfRange("k must be at least 1".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, Monomial};

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn x() -> VarId {
        VarId::x(1, 1)
    }

    fn y() -> VarId {
        VarId::y(1, 1)
    }

    fn dxdy() -> Monomial {
        Monomial::from_pairs([(x(), 1), (y(), 1)])
    }

    #[test]
    fn h_m1() {
        let h = build_h(1).unwrap();
        assert_eq!(h.len(), 3);
        assert_eq!(h.coeff(&Monomial::var(x())), p("t - 1"));
        assert_eq!(h.coeff(&Monomial::var(y())), p("1 - s"));
        assert_eq!(h.coeff(&dxdy()), p("x[1][1] - y[1][1]"));
    }

    #[test]
    fn h_orders() {
        assert_eq!(build_h(1).unwrap().order(), 2);
        let h2 = build_h(2).unwrap();
        assert_eq!(h2.order(), 4);
        assert_eq!((h2.order_x(), h2.order_y()), (2, 2));
        for (_, c) in h2.terms() {
            assert!(c.degree_in(|v| v == VarId::S) <= 2);
            assert!(c.degree_in(|v| v == VarId::T) <= 2);
        }
    }

    #[test]
    fn d_m1_is_omega() {
        let d = build_d(1, &ParamMode::Symbolic).unwrap();
        assert_eq!(d.len(), 3);
        assert_eq!(d.coeff(&Monomial::var(x())), p("-t"));
        assert_eq!(d.coeff(&Monomial::var(y())), p("s"));
        assert_eq!(d.coeff(&dxdy()), p("x[1][1] - y[1][1]"));
    }

    #[test]
    fn specialization_commutes() {
        let pt: Point = [(VarId::S, int(2)), (VarId::T, int(3))].into_iter().collect();
        let a = build_d(1, &ParamMode::Specialized(int(2), int(3))).unwrap();
        let b = build_d(1, &ParamMode::Symbolic).unwrap().specialize(&pt);
        assert_eq!(a, b);
    }

    #[test]
    fn b_m1_low_k() {
        let b1 = build_b(1, 1, &ParamMode::Symbolic).unwrap();
        assert_eq!(b1.len(), 2);
        assert_eq!(b1.coeff(&Monomial::var(x())), p("-t"));
        assert_eq!(b1.coeff(&Monomial::var(y())), p("s"));
        let b2 = build_b(1, 2, &ParamMode::Symbolic).unwrap();
        assert_eq!(b2.len(), 3);
        assert_eq!(b2.coeff(&Monomial::power(x(), 2)), p("t^2 + t"));
        assert_eq!(b2.coeff(&dxdy()), p("-2*s*t - 2*s - 2*t - 2"));
        assert_eq!(b2.coeff(&Monomial::power(y(), 2)), p("s^2 + s"));
        assert!(check_constant_coefficients(&b2));
    }

    #[test]
    fn b_m2_k1_constant() {
        let b = build_b(2, 1, &ParamMode::Symbolic).unwrap();
        assert!(!b.is_empty());
        assert!(check_constant_coefficients(&b));
    }

    #[test]
    fn dropped() {
        let s = dropped_scalar(2, 3);
        assert_eq!((s.power_of_i, s.power_of_two), (6, -6));
    }
}
