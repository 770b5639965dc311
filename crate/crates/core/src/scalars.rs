//! Closed-form scalar factors: `Gamma_V`, `gamma(s, eps)`, `rho(s, eps)` and
//! the four-case constant `d((lambda, eps), (mu, eta))`.
//!
//! Gamma values are never evaluated; they are carried as argument lists.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{frac, int, Point, Polynomial, Rational, VarId};
use crate::error::{Error, Result};
use crate::minors::Sign;

/// `rational * 2^power_of_two * pi^power_of_pi * i^power_of_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalizationScalar {
    #[serde(serialize_with = "ser_rational")]
    pub rational: Rational,
    pub power_of_two: i64,
    #[serde(serialize_with = "ser_rational")]
    pub power_of_pi: Rational,
    pub power_of_i: i64,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

impl NormalizationScalar {
    pub fn one() -> Self {
        NormalizationScalar {
            rational: Rational::one(),
            power_of_two: 0,
            power_of_pi: Rational::zero(),
            power_of_i: 0,
        }
    }
}

impl fmt::Display for NormalizationScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} * 2^{} * pi^{} * i^{}",
            self.rational, self.power_of_two, self.power_of_pi, self.power_of_i
        )
    }
}

/// A linear factor `p - shift` with `p` one of the two parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearFactor {
    pub param: VarId,
    pub shift: i64,
}

impl LinearFactor {
    pub fn to_polynomial(self) -> Polynomial {
        &Polynomial::var(self.param) - &Polynomial::int(self.shift)
    }
}

impl fmt::Display for LinearFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = if self.param == VarId::S { "lambda" } else { "mu" };
        write!(f, "({name} - {})", self.shift)
    }
}

/// `d` with symbolic `lambda = s`, `mu = t`: `2^power_of_two pi^power_of_pi /
/// prod(denominator)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicD {
    pub denominator: Vec<LinearFactor>,
    pub power_of_two: i64,
    pub power_of_pi: i64,
}

/// `(p - m)(p - m - 1) ... (p - 2m + 2)`; `m - 1` factors.
fn descending_factors(param: VarId, m: usize) -> Vec<LinearFactor> {
    (m as i64..=2 * m as i64 - 2).map(|shift| LinearFactor { param, shift }).collect()
}

/// The four-case table of `d((lambda, eps), (mu, eta))` with `lambda = s`,
/// `mu = t`.
pub fn d_symbolic(m: usize, eps: Sign, eta: Sign) -> SymbolicD {
    let mi = m as i64;
    let single = |param: VarId| vec![LinearFactor { param, shift: mi }];
    let (lam, two_l) = match eps {
        Sign::Plus => (descending_factors(VarId::S, m), 0),
        Sign::Minus => (single(VarId::S), -mi),
    };
    let (mu, two_m) = match eta {
        Sign::Plus => (descending_factors(VarId::T, m), 0),
        Sign::Minus => (single(VarId::T), -mi),
    };
    SymbolicD {
        denominator: lam.into_iter().chain(mu).collect(),
        power_of_two: two_l + two_m,
        power_of_pi: 4 * mi * mi,
    }
}

/// `d((lambda, eps), (mu, eta))` at rational parameters; errors at a pole.
pub fn normalization_scalars(
    m: usize,
    lambda: &Rational,
    mu: &Rational,
    eps: Sign,
    eta: Sign,
) -> Result<NormalizationScalar> {
    let sym = d_symbolic(m, eps, eta);
    let point: Point = [(VarId::S, lambda.clone()), (VarId::T, mu.clone())].into_iter().collect();
    let mut den = Rational::one();
    for factor in &sym.denominator {
        let v = factor.to_polynomial().eval(&point)?;
        if v.is_zero() {
            return Err(Error::Pole(factor.to_string()));
        }
        den *= v;
    }
    Ok(NormalizationScalar {
        rational: den.recip(),
        power_of_two: sym.power_of_two,
        power_of_pi: int(sym.power_of_pi),
        power_of_i: 0,
    })
}

/// Arguments of `Gamma_V(s) = Gamma((s+1)/2) ... Gamma((s+m)/2)`.
pub fn gamma_v_args(m: usize, s: &Rational) -> Vec<Rational> {
    (1..=m as i64).map(|j| (s + int(j)) * frac(1, 2)).collect()
}

/// `1 / (linear * prod Gamma(args))`; `linear` is absent for `eps = +`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaReciprocal {
    pub linear: Option<Rational>,
    pub gamma_args: Vec<Rational>,
}

/// `gamma(s, +) = 1/Gamma_V(s)`, `gamma(s, -) = 1/(s Gamma_V(s - 1))`.
pub fn gamma_factor(m: usize, s: &Rational, eps: Sign) -> GammaReciprocal {
    match eps {
        Sign::Plus => GammaReciprocal { linear: None, gamma_args: gamma_v_args(m, s) },
        Sign::Minus => GammaReciprocal {
            linear: Some(s.clone()),
            gamma_args: gamma_v_args(m, &(s - int(1))),
        },
    }
}

/// `rho(s, +) = pi^(-m^2/2 - m s)`, `rho(s, -) = -i^m pi^(-m^2/2 - m s)`.
pub fn rho(m: usize, s: &Rational, eps: Sign) -> NormalizationScalar {
    let mr = int(m as i64);
    let power_of_pi = -(&mr * &mr) * frac(1, 2) - &mr * s;
    match eps {
        Sign::Plus => NormalizationScalar { power_of_pi, ..NormalizationScalar::one() },
        Sign::Minus => NormalizationScalar {
            rational: int(-1),
            power_of_two: 0,
            power_of_pi,
            power_of_i: m as i64,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d_example_minus_minus() {
        let d = normalization_scalars(1, &int(2), &int(3), Sign::Minus, Sign::Minus).unwrap();
        assert_eq!(d.rational, frac(1, 2));
        assert_eq!(d.power_of_two, -2);
        assert_eq!(d.power_of_pi, int(4));
    }

    #[test]
    fn d_poles() {
        assert_eq!(
            normalization_scalars(2, &int(2), &int(5), Sign::Plus, Sign::Plus),
            Err(Error::Pole("(lambda - 2)".into()))
        );
        assert!(normalization_scalars(1, &int(1), &int(5), Sign::Minus, Sign::Plus).is_err());
        assert!(normalization_scalars(1, &int(5), &int(1), Sign::Plus, Sign::Minus).is_err());
        // No lambda factor in the ++ case when m = 1.
        assert!(normalization_scalars(1, &int(1), &int(1), Sign::Plus, Sign::Plus).is_ok());
    }

    #[test]
    fn gamma_v() {
        assert_eq!(gamma_v_args(1, &int(3)), vec![int(2)]);
        assert_eq!(gamma_v_args(2, &int(0)), vec![frac(1, 2), int(1)]);
        let g = gamma_factor(2, &int(4), Sign::Minus);
        assert_eq!(g.linear, Some(int(4)));
        assert_eq!(g.gamma_args, vec![int(2), frac(5, 2)]);
    }

    #[test]
    fn rho_values() {
        let r = rho(2, &int(1), Sign::Minus);
        assert_eq!(r.power_of_pi, int(-4));
        assert_eq!(r.power_of_i, 2);
        assert_eq!(r.rational, int(-1));
        assert_eq!(rho(1, &int(0), Sign::Plus).power_of_pi, frac(-1, 2));
    }
}
