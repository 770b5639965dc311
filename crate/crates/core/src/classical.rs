//! The `m = 1` layer: `omega_{lambda,mu}`, the closed form `r_{lambda,mu;k}`,
//! transvectants and Rankin-Cohen brackets.

use num_traits::Zero;

use crate::algebra::rational::factorial;
use crate::algebra::{int, Monomial, Point, Polynomial, Rational, VarId};
use crate::covariant::{build_b, ParamMode};
use crate::error::{Error, Result};
use crate::weyl::{BiDiffOperator, DiffOperator, Shape};

fn dx() -> VarId {
    VarId::x(1, 1)
}

fn dy() -> VarId {
    VarId::y(1, 1)
}

/// `omega = -mu d/dx + lambda d/dy + (x - y) d^2/dxdy` with `s = lambda`,
/// `t = mu`.
pub fn build_omega() -> DiffOperator {
    let shape = Shape::square(1);
    let mut op = DiffOperator::zero(shape);
    op.add_term(Monomial::var(dx()), -Polynomial::var(VarId::T));
    op.add_term(Monomial::var(dy()), Polynomial::var(VarId::S));
    op.add_term(
        Monomial::from_pairs([(dx(), 1), (dy(), 1)]),
        &Polynomial::var(dx()) - &Polynomial::var(dy()),
    );
    op
}

/// `(a choose j) = a (a - 1) ... (a - j + 1) / j!` for polynomial `a`.
pub fn generalized_binomial(a: &Polynomial, j: u32) -> Polynomial {
    let mut acc = Polynomial::one();
    for i in 0..j {
        acc = &acc * &(a - &Polynomial::int(i as i64));
    }
    acc.scale(&factorial(j).recip())
}

/// `r_{lambda,mu;k} = k! sum_{i+j=k} (-1)^j (-lambda-i choose j)
/// (-mu-j choose i) d^i/dx^i d^j/dy^j`.
pub fn build_r(k: u32) -> BiDiffOperator {
    let (s, t) = (Polynomial::var(VarId::S), Polynomial::var(VarId::T));
    let mut op = BiDiffOperator::zero(Shape::square(1));
    for i in 0..=k {
        let j = k - i;
        let a = -&(&s + &Polynomial::int(i as i64));
        let b = -&(&t + &Polynomial::int(j as i64));
        let mut c = (&generalized_binomial(&a, j) * &generalized_binomial(&b, i)).scale(&factorial(k));
        if j % 2 == 1 {
            c = -c;
        }
        op.add_term(Monomial::from_pairs([(dx(), i), (dy(), j)]), c);
    }
    op
}

/// Normalized `B_{lambda,mu;k}` at `m = 1` equals `r_{lambda,mu;k}` term by term.
pub fn check_b_equals_r(k: u32) -> Result<bool> {
    Ok(build_b(1, k as usize, &ParamMode::Symbolic)? == build_r(k))
}

fn params(lambda: i64, mu: i64) -> Point {
    [(VarId::S, int(lambda)), (VarId::T, int(mu))].into_iter().collect()
}

/// The `k`-th transvectant of binary forms of degrees `l` and `md`, written
/// in the affine coordinate `x`: `r_{-l,-md;k}(p(x) q(y))` on the diagonal.
pub fn transvectant(p: &Polynomial, q: &Polynomial, l: u32, md: u32, k: u32) -> Result<Polynomial> {
    let (dp, dq) = (p.degree().unwrap_or(0), q.degree().unwrap_or(0));
    if dp > l || dq > md {
        return Err(Error::OutOfRange(format!("degrees ({dp}, {dq}) exceed ({l}, {md})")));
    }
    if k > l.min(md) {
        return Err(Error::OutOfRange(format!("k = {k} exceeds min({l}, {md})")));
    }
    build_r(k).specialize(&params(-(l as i64), -(md as i64))).apply_pair(p, q)
}

/// A Rankin-Cohen bracket with its output weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankinCohen {
    pub op: BiDiffOperator,
    pub k: u32,
    pub weights: (i64, i64),
    pub output_weight: i64,
}

/// `r_{l,md;k}` for holomorphic weights `l`, `md`; output weight `l + md + 2k`.
pub fn rankin_cohen(k: u32, l: i64, md: i64) -> Result<RankinCohen> {
    if l <= 0 || md <= 0 {
        return Err(Error::OutOfRange("weights must be positive".into()));
    }
    Ok(RankinCohen {
        op: build_r(k).specialize(&params(l, md)),
        k,
        weights: (l, md),
        output_weight: l + md + 2 * k as i64,
    })
}

/// Coefficients of a bracket in ascending `d/dx` order, `i = 0..=k`.
pub fn bracket_coefficients(rc: &RankinCohen) -> Vec<Rational> {
    (0..=rc.k)
        .map(|i| {
            let c = rc.op.coeff(&Monomial::from_pairs([(dx(), i), (dy(), rc.k - i)]));
            c.as_constant().unwrap_or_else(Rational::zero)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn omega_forms() {
        let w = build_omega();
        let zero = w.specialize(&params(0, 0));
        assert_eq!(zero.len(), 1);
        assert_eq!(w, crate::covariant::build_d(1, &ParamMode::Symbolic).unwrap());
        let v = w.specialize(&params(1, 1)).apply(&p("x[1][1]*y[1][1]")).unwrap();
        let pt: Point = [(dx(), int(1)), (dy(), int(2))].into_iter().collect();
        assert_eq!(v.eval(&pt).unwrap(), int(-2));
    }

    #[test]
    fn r_low_k() {
        let r0 = build_r(0);
        assert_eq!(r0.len(), 1);
        assert_eq!(r0.coeff(&Monomial::one()), Polynomial::one());
        let r1 = build_r(1);
        assert_eq!(r1.coeff(&Monomial::var(dx())), p("-t"));
        assert_eq!(r1.coeff(&Monomial::var(dy())), p("s"));
        let r2 = build_r(2);
        assert_eq!(r2.coeff(&Monomial::power(dx(), 2)), p("t^2 + t"));
        assert_eq!(r2.coeff(&Monomial::from_pairs([(dx(), 1), (dy(), 1)])), p("-2*s*t - 2*s - 2*t - 2"));
        assert_eq!(r2.coeff(&Monomial::power(dy(), 2)), p("s^2 + s"));
    }

    #[test]
    fn b_equals_r() {
        for k in 0..=3 {
            assert!(check_b_equals_r(k).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(generalized_binomial(&Polynomial::int(-2), 3), Polynomial::int(-4));
        assert_eq!(generalized_binomial(&Polynomial::int(5), 2), Polynomial::int(10));
        assert_eq!(generalized_binomial(&p("s"), 0), Polynomial::one());
    }

    #[test]
    fn transvectant_examples() {
        let x = p("x[1][1]");
        assert_eq!(transvectant(&x, &p("x[1][1] + 2"), 1, 1, 0).unwrap(), p("x[1][1]^2 + 2*x[1][1]"));
        assert!(transvectant(&x, &x, 1, 1, 1).unwrap().is_zero());
        // -mu p' q + lambda p q' at (lambda, mu) = (-2, -1).
        let (pp, q) = (p("x[1][1]^2"), x.clone());
        let direct = &(&pp.partial(dx()) * &q) + &(&pp * &q.partial(dx())).scale(&int(-2));
        let t = transvectant(&pp, &q, 2, 1, 1).unwrap();
        assert_eq!(t, direct);
        assert!(t.is_zero());
        assert!(transvectant(&pp, &q, 1, 1, 1).is_err());
        assert!(transvectant(&x, &x, 1, 1, 2).is_err());
    }

    #[test]
    fn rankin_cohen_examples() {
        let rc = rankin_cohen(1, 1, 1).unwrap();
        assert_eq!(bracket_coefficients(&rc), vec![int(1), int(-1)]);
        assert_eq!(rc.output_weight, 4);
        let rc0 = rankin_cohen(0, 2, 3).unwrap();
        assert_eq!(rc0.op.coeff(&Monomial::one()), Polynomial::one());
        assert_eq!(rc0.output_weight, 5);
    }
}
