//! Seeded sampling of rationals, matrices, polynomials, group elements and
//! admissible points. Every draw is a deterministic function of the seed.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{frac, int, Monomial, Polynomial, RatMatrix, Rational, VarId};
use crate::minors::{IndexSubset, Sign};
use crate::projective::{alpha, GroupElement};

/// A labelled group element; labels make failure records reproducible.
#[derive(Debug, Clone)]
pub struct Generator {
    pub label: String,
    pub g: GroupElement,
}

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Independent stream derived from `seed` and a label.
    pub fn derived(seed: u64, label: &str) -> Self {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in label.bytes() {
            h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
        }
        Self::new(seed ^ h)
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen()
    }

    pub fn sign(&mut self) -> Sign {
        if self.coin() { Sign::Plus } else { Sign::Minus }
    }

    /// `p / q` with `p in -3..=3`, `q in 1..=3`.
    pub fn rational(&mut self) -> Rational {
        frac(self.int(-3, 3), self.int(1, 3))
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    pub fn matrix(&mut self, m: usize) -> RatMatrix {
        let rows = (0..m).map(|_| (0..m).map(|_| self.rational()).collect()).collect();
        RatMatrix::from_rows(rows).expect("square rows")
    }

    pub fn invertible(&mut self, m: usize) -> RatMatrix {
        loop {
            let a = self.matrix(m);
            if !a.det().is_zero() {
                return a;
            }
        }
    }

    pub fn subset(&mut self, m: usize, k: usize) -> IndexSubset {
        let mut all: Vec<usize> = (1..=m).collect();
        all.shuffle(&mut self.rng);
        IndexSubset::new(all[..k].to_vec(), m).expect("subset of 1..=m")
    }

    /// A polynomial of degree `<= max_degree` in `vars` with `terms` draws of
    /// small integer coefficients; never zero.
    pub fn polynomial(&mut self, vars: &[VarId], max_degree: u32, terms: usize) -> Polynomial {
        loop {
            let mut p = Polynomial::zero();
            for _ in 0..terms {
                let d = self.int(0, max_degree as i64) as u32;
                let mut mono = Monomial::one();
                for _ in 0..d {
                    mono = mono.mul(&Monomial::var(vars[self.index(vars.len())]));
                }
                p.add_term(mono, int(self.int(-3, 3)));
            }
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// `diag(a, d)` with `det a det d = 1`.
    pub fn levi(&mut self, m: usize) -> GroupElement {
        let a = self.invertible(m);
        let mut d = self.invertible(m);
        let fix = (a.det() * d.det()).recip();
        for j in 0..m {
            d[(0, j)] = &d[(0, j)] * &fix;
        }
        GroupElement::levi(&a, &d).expect("determinant normalized")
    }

    pub fn translation(&mut self, m: usize) -> GroupElement {
        GroupElement::translation(&self.matrix(m))
    }

    /// `iota`, `n_levi` Levi elements, `n_trans` translations and `n_prod`
    /// products of two or three of those.
    pub fn generators(&mut self, m: usize, n_levi: usize, n_trans: usize, n_prod: usize) -> Vec<Generator> {
        let mut out = vec![Generator { label: "iota".into(), g: GroupElement::inversion(m) }];
        for i in 0..n_levi {
            out.push(Generator { label: format!("levi{i}"), g: self.levi(m) });
        }
        for i in 0..n_trans {
            out.push(Generator { label: format!("translation{i}"), g: self.translation(m) });
        }
        let base = out.len();
        for i in 0..n_prod {
            let n = self.int(2, 3) as usize;
            let picks: Vec<usize> = (0..n).map(|_| self.index(base)).collect();
            let mut g = GroupElement::identity(m);
            for &p in &picks {
                g = g.product(&out[p].g);
            }
            let names: Vec<&str> = picks.iter().map(|&p| out[p].label.as_str()).collect();
            out.push(Generator { label: format!("product{i}({})", names.join("*")), g });
        }
        out
    }

    /// A product of three fresh factors, each `iota`, Levi or a translation.
    pub fn group_element(&mut self, m: usize) -> GroupElement {
        let mut g = GroupElement::identity(m);
        for _ in 0..3 {
            let factor = match self.index(3) {
                0 => GroupElement::inversion(m),
                1 => self.levi(m),
                _ => self.translation(m),
            };
            g = g.product(&factor);
        }
        g
    }

    /// The standard set: `iota`, 3 Levi, 3 translations, 5 products.
    pub fn standard_generators(&mut self, m: usize) -> Vec<Generator> {
        self.generators(m, 3, 3, 5)
    }

    /// A point where `alpha(h, x) != 0` for every `h` in `avoid`.
    pub fn admissible_point(&mut self, m: usize, avoid: &[&GroupElement]) -> RatMatrix {
        loop {
            let x = self.matrix(m);
            if avoid.iter().all(|h| !alpha(h, &x).is_zero()) {
                return x;
            }
        }
    }
}
