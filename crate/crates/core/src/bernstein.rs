//! Bernstein-Sato identities for minors, product expansions of minor
//! operators, and the operators `E_{s,t}`, `F_{s,t}`.
//!
//! Identities with symbolic exponents are checked at positive integer
//! exponents, where both sides are honest polynomials.

use crate::algebra::{int, Point, Polynomial, VarId};
use crate::error::{Error, Result};
use crate::minors::{
    pochhammer, sign_ij, sign_relative, subset_pairs, IndexSubset, MatrixSymbol, MinorTable, Sign,
};
use crate::weyl::{DeltaBlock, DiffOperator, Shape};

fn signed(p: Polynomial, s: Sign) -> Polynomial {
    match s {
        Sign::Plus => p,
        Sign::Minus => -p,
    }
}

fn det(sym: MatrixSymbol) -> Polynomial {
    let m = sym.dim();
    let full = IndexSubset::full(m);
    MinorTable::new(sym).and_then(|mut t| t.minor(&full, &full)).expect("square symbol")
}

fn require_positive(n: i64) -> Result<u32> {
    if n < 1 {
        return Err(Error::OutOfRange(format!("exponent {n} must be positive")));
    }
    Ok(n as u32)
}

fn param_point(s: i64, t: i64) -> Point {
    [(VarId::S, int(s)), (VarId::T, int(t))].into_iter().collect()
}

/// `Delta_k(d) (det x)^n == (n)_k Delta_k^c(x) (det x)^(n-1)`.
pub fn check_bs_principal(m: usize, k: usize, n: i64) -> Result<bool> {
    if k > m {
        return Err(Error::OutOfRange(format!("order {k} exceeds {m}")));
    }
    let lead = IndexSubset::range(1, k);
    check_bs_minor(m, &lead, &lead, n)
}

/// `Delta_{I,J}(d) (det x)^n == eps(I,J) (n)_k Delta_{I^c,J^c}(x) (det x)^(n-1)`.
pub fn check_bs_minor(m: usize, i: &IndexSubset, j: &IndexSubset, n: i64) -> Result<bool> {
    let n = require_positive(n)?;
    let sign = sign_ij(i, j)?;
    let op = DiffOperator::delta_partial(m, i, j, DeltaBlock::XOnly)?;
    let d = det(MatrixSymbol::X(m));
    let lhs = op.apply(&d.pow(n))?;
    let poch = pochhammer(&Polynomial::int(n as i64), i.len() as i64)?;
    let comp = MinorTable::new(MatrixSymbol::X(m))?.minor(&i.complement(m), &j.complement(m))?;
    let rhs = signed(&(&poch * &comp) * &d.pow(n - 1), sign);
    Ok(lhs == rhs)
}

/// `det(d)(fg) == sum_{I,J} eps(I,J) [Delta_{I,J}(d) f] [Delta_{I^c,J^c}(d) g]`.
pub fn check_det_product(m: usize, f: &Polynomial, g: &Polynomial) -> Result<bool> {
    let full = IndexSubset::full(m);
    check_minor_product(m, &full, &full, f, g)
}

/// `Delta_{I,J}(d)(fg) == sum_{P,Q} eps(P:I,Q:J) [Delta_{P,Q}(d) f] [Delta_{I-P,J-Q}(d) g]`.
pub fn check_minor_product(
    m: usize,
    i: &IndexSubset,
    j: &IndexSubset,
    f: &Polynomial,
    g: &Polynomial,
) -> Result<bool> {
    let lhs = DiffOperator::delta_partial(m, i, j, DeltaBlock::XOnly)?.apply(&(f * g))?;
    let mut rhs = Polynomial::zero();
    for l in 0..=i.len() {
        for p in i.subsets_of_size(l) {
            for q in j.subsets_of_size(l) {
                let sign = sign_relative(&p, i, &q, j)?;
                let df = DiffOperator::delta_partial(m, &p, &q, DeltaBlock::XOnly)?.apply(f)?;
                if df.is_zero() {
                    continue;
                }
                let dg = DiffOperator::delta_partial(
                    m,
                    &i.difference(&p),
                    &j.difference(&q),
                    DeltaBlock::XOnly,
                )?
                .apply(g)?;
                rhs = &rhs + &signed(&df * &dg, sign);
            }
        }
    }
    Ok(lhs == rhs)
}

/// Coefficient family shared by `E` and `F`:
/// `sum_l (-1)^l (s)_(k-l) (t)_l sum_{P,Q} eps(P:I,Q:J) Delta_{I^c+P,J^c+Q}(x) Delta_{P^c,Q^c}(second)`.
fn pq_coefficient(
    m: usize,
    i: &IndexSubset,
    j: &IndexSubset,
    xs: &mut MinorTable,
    second: &mut MinorTable,
) -> Result<Polynomial> {
    let k = i.len();
    let s = Polynomial::var(VarId::S);
    let t = Polynomial::var(VarId::T);
    let (ic, jc) = (i.complement(m), j.complement(m));
    let mut out = Polynomial::zero();
    for l in 0..=k {
        let scalar = &pochhammer(&s, (k - l) as i64)? * &pochhammer(&t, l as i64)?;
        let mut inner = Polynomial::zero();
        for p in i.subsets_of_size(l) {
            for q in j.subsets_of_size(l) {
                let a = xs.minor(&ic.union(&p), &jc.union(&q))?;
                if a.is_zero() {
                    continue;
                }
                let b = second.minor(&p.complement(m), &q.complement(m))?;
                inner = &inner + &signed(&a * &b, sign_relative(&p, i, &q, j)?);
            }
        }
        out = &out + &signed(&scalar * &inner, Sign::from_parity(l));
    }
    Ok(out)
}

/// `p_{I,J}(x, y; s, t)`.
pub fn p_coefficient(m: usize, i: &IndexSubset, j: &IndexSubset) -> Result<Polynomial> {
    let mut xs = MinorTable::new(MatrixSymbol::X(m))?;
    let mut yx = MinorTable::new(MatrixSymbol::YMinusX(m))?;
    pq_coefficient(m, i, j, &mut xs, &mut yx)
}

/// `q_{I,J}(x, y; s, t)`.
pub fn q_coefficient(m: usize, i: &IndexSubset, j: &IndexSubset) -> Result<Polynomial> {
    let mut xs = MinorTable::new(MatrixSymbol::X(m))?;
    let mut ys = MinorTable::new(MatrixSymbol::Y(m))?;
    pq_coefficient(m, i, j, &mut xs, &mut ys)
}

fn build_family(m: usize, second: MatrixSymbol, block: DeltaBlock) -> Result<DiffOperator> {
    let mut xs = MinorTable::new(MatrixSymbol::X(m))?;
    let mut other = MinorTable::new(second)?;
    let mut op = DiffOperator::zero(Shape::square(m));
    for k in 0..=m {
        for (i, j) in subset_pairs(m, k)? {
            let c = pq_coefficient(m, &i, &j, &mut xs, &mut other)?;
            if c.is_zero() {
                continue;
            }
            let d = DiffOperator::delta_partial(m, &i.complement(m), &j.complement(m), block)?;
            op = op.add(&d.left_mul(&c))?;
        }
    }
    Ok(op)
}

/// `E_{s,t}` with symbolic `s`, `t`.
pub fn build_e(m: usize) -> Result<DiffOperator> {
    build_family(m, MatrixSymbol::YMinusX(m), DeltaBlock::XOnly)
}

/// `F_{s,t}` with symbolic `s`, `t`.
pub fn build_f(m: usize) -> Result<DiffOperator> {
    build_family(m, MatrixSymbol::Y(m), DeltaBlock::XMinusY)
}

/// `det(d/dx)[(det x)^n det(y-x)^p f] == (det x)^(n-1) det(y-x)^(p-1) E_{n,p} f`.
pub fn check_e_identity(m: usize, n: i64, p: i64, f: &Polynomial) -> Result<bool> {
    check_e_identity_with(&build_e(m)?, m, n, p, f)
}

/// As [`check_e_identity`] with a prebuilt `E`.
pub fn check_e_identity_with(
    e: &DiffOperator,
    m: usize,
    n: i64,
    p: i64,
    f: &Polynomial,
) -> Result<bool> {
    let (nu, pu) = (require_positive(n)?, require_positive(p)?);
    let dx = det(MatrixSymbol::X(m));
    let dyx = det(MatrixSymbol::YMinusX(m));
    let full = IndexSubset::full(m);
    let det_d = DiffOperator::delta_partial(m, &full, &full, DeltaBlock::XOnly)?;
    let lhs = det_d.apply(&(&(&dx.pow(nu) * &dyx.pow(pu)) * f))?;
    let en = e.specialize(&param_point(n, p));
    let rhs = &(&dx.pow(nu - 1) * &dyx.pow(pu - 1)) * &en.apply(f)?;
    Ok(lhs == rhs)
}

/// `det(d/dx - d/dy)[(det x)^n (det y)^p f] == (det x)^(n-1) (det y)^(p-1) F_{n,p} f`.
pub fn check_f_identity(m: usize, n: i64, p: i64, f: &Polynomial) -> Result<bool> {
    check_f_identity_with(&build_f(m)?, m, n, p, f)
}

pub fn check_f_identity_with(
    fop: &DiffOperator,
    m: usize,
    n: i64,
    p: i64,
    f: &Polynomial,
) -> Result<bool> {
    let (nu, pu) = (require_positive(n)?, require_positive(p)?);
    let dx = det(MatrixSymbol::X(m));
    let dy = det(MatrixSymbol::Y(m));
    let full = IndexSubset::full(m);
    let det_d = DiffOperator::delta_partial(m, &full, &full, DeltaBlock::XMinusY)?;
    let lhs = det_d.apply(&(&(&dx.pow(nu) * &dy.pow(pu)) * f))?;
    let fnp = fop.specialize(&param_point(n, p));
    let rhs = &(&dx.pow(nu - 1) * &dy.pow(pu - 1)) * &fnp.apply(f)?;
    Ok(lhs == rhs)
}

/// Transports an operator with x-only derivatives along `(x, y) -> (x, x + y)`:
/// coefficients get `y := x + y`, and `d/dx` becomes `d/dx - d/dy`.
pub fn transport_to_pair(op: &DiffOperator) -> Result<DiffOperator> {
    let shape = op.shape();
    let mut out = DiffOperator::zero(shape);
    for (alpha, c) in op.terms() {
        if alpha.vars().any(|v| !v.is_x()) {
            return Err(Error::DimensionMismatch(format!(
                "derivative {alpha} is not x-only"
            )));
        }
        let coeff = c.substitute(|v| match v {
            VarId::Y(..) => Some(&Polynomial::var(v.to_x()) + &Polynomial::var(v)),
            _ => None,
        });
        let symbol = Polynomial::term(int(1), alpha.clone()).substitute(|v| match v {
            VarId::X(..) => Some(&Polynomial::var(v) - &Polynomial::var(v.to_y())),
            _ => None,
        });
        out = out.add(&DiffOperator::from_symbol(shape, &symbol).left_mul(&coeff))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> IndexSubset {
        IndexSubset::new(v.to_vec(), 3).unwrap()
    }

    #[test]
    fn bs_examples() {
        assert!(check_bs_principal(2, 1, 1).unwrap());
        assert!(check_bs_principal(2, 2, 2).unwrap());
        assert!(check_bs_principal(3, 2, 1).unwrap());
        assert!(check_bs_minor(2, &set(&[1]), &set(&[1]), 1).unwrap());
        assert!(check_bs_minor(2, &set(&[1]), &set(&[2]), 1).unwrap());
        assert!(check_bs_minor(2, &set(&[1, 2]), &set(&[1, 2]), 3).unwrap());
        assert!(check_bs_principal(2, 3, 1).is_err());
        assert!(check_bs_principal(2, 1, 0).is_err());
    }

    #[test]
    fn bs_detects_wrong_sign() {
        // Delta_{1,2} with the sign dropped would be false; check the raw value.
        let op = DiffOperator::delta_partial(2, &set(&[1]), &set(&[2]), DeltaBlock::XOnly).unwrap();
        let d = p("x[1][1]*x[2][2] - x[1][2]*x[2][1]");
        assert_eq!(op.apply(&d).unwrap(), p("-x[2][1]"));
    }

    #[test]
    fn product_examples() {
        let (f, g) = (p("x[1][1]^2 + 3"), p("x[1][1]^3"));
        assert!(check_det_product(1, &f, &g).unwrap());
        assert!(check_det_product(2, &p("x[1][1]"), &p("x[2][2]")).unwrap());
        let d = p("x[1][1]*x[2][2] - x[1][2]*x[2][1]");
        assert!(check_det_product(2, &d, &d).unwrap());
        let e = IndexSubset::empty();
        assert!(check_minor_product(2, &e, &e, &f, &g).unwrap());
        let full = set(&[1, 2]);
        assert!(check_minor_product(2, &full, &full, &p("x[1][1]"), &p("x[2][1]")).unwrap());
        assert!(check_minor_product(3, &set(&[1, 3]), &set(&[2, 3]), &d, &p("x[3][3]*x[1][2]")).unwrap());
    }

    #[test]
    fn e_m1_closed_form() {
        let e = build_e(1).unwrap();
        assert_eq!(e.len(), 2);
        let dx = Monomial::var(VarId::x(1, 1));
        assert_eq!(e.coeff(&Monomial::one()), p("s*y[1][1] - s*x[1][1] - t*x[1][1]"));
        assert_eq!(e.coeff(&dx), p("x[1][1]*y[1][1] - x[1][1]^2"));
    }

    #[test]
    fn e_identity_examples() {
        assert!(check_e_identity(1, 1, 1, &Polynomial::one()).unwrap());
        assert!(check_e_identity(2, 1, 1, &Polynomial::one()).unwrap());
        assert!(check_e_identity(1, 2, 1, &p("y[1][1]")).unwrap());
    }

    #[test]
    fn f_m1_closed_form() {
        let f = build_f(1).unwrap();
        let (dx, dy) = (Monomial::var(VarId::x(1, 1)), Monomial::var(VarId::y(1, 1)));
        assert_eq!(f.len(), 3);
        assert_eq!(f.coeff(&Monomial::one()), p("s*y[1][1] - t*x[1][1]"));
        assert_eq!(f.coeff(&dx), p("x[1][1]*y[1][1]"));
        assert_eq!(f.coeff(&dy), p("-x[1][1]*y[1][1]"));
        assert_eq!(f.order(), 1);
    }

    #[test]
    fn f_identity_examples() {
        assert!(check_f_identity(1, 1, 1, &Polynomial::one()).unwrap());
        assert!(check_f_identity(2, 1, 1, &Polynomial::one()).unwrap());
        assert!(check_f_identity(1, 1, 2, &p("x[1][1]")).unwrap());
    }

    #[test]
    fn f_is_transported_e() {
        for m in 1..=2 {
            assert_eq!(transport_to_pair(&build_e(m).unwrap()).unwrap(), build_f(m).unwrap());
        }
    }

    #[test]
    fn f_k0_coefficient_and_homogeneity() {
        let e = IndexSubset::empty();
        let q = q_coefficient(2, &e, &e).unwrap();
        assert_eq!(
            q,
            &p("x[1][1]*x[2][2] - x[1][2]*x[2][1]") * &p("y[1][1]*y[2][2] - y[1][2]*y[2][1]")
        );
        let pe = p_coefficient(2, &e, &e).unwrap();
        assert_eq!(
            pe,
            &p("x[1][1]*x[2][2] - x[1][2]*x[2][1]") * &det(MatrixSymbol::YMinusX(2))
        );
        for k in 0..=2 {
            for (i, j) in subset_pairs(2, k).unwrap() {
                let q = q_coefficient(2, &i, &j).unwrap();
                for (mono, _) in q.terms() {
                    let deg: u32 = mono.iter().filter(|(v, _)| !v.is_param()).map(|(_, e)| e).sum();
                    assert_eq!(deg as usize, 2 * 2 - k);
                }
            }
        }
    }
}
