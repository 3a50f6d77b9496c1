//! Seeded random generation of exponents, elements, and tensors.
//!
//! Random exponents are small combinations of the [`GammaSpec`] generators
//! with coefficients from the palette `{−3,…,3, ±1/2}`; with the standard
//! generators this produces coordinates drawn from the palette directly.
//! The stream is ChaCha8 seeded from a `u64`, so identical seeds give
//! identical inputs on every platform.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{BarElement, HElement};
use crate::error::Result;
use crate::exponent::{rational_int, Exponent, GammaSpec, Grade, Rational};
use crate::tensor::TensorElement;

pub struct Sampler {
    spec: GammaSpec,
    rng: ChaCha8Rng,
}

impl Sampler {
    /// Sampler over the standard Γ of the given ambient `n`.
    pub fn new(n: usize, seed: u64) -> Result<Self> {
        Ok(Self::from_spec(GammaSpec::standard(n)?, seed))
    }

    pub fn from_spec(spec: GammaSpec, seed: u64) -> Self {
        Self {
            spec,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    /// A palette scalar: an integer in `−3..=3` or `±1/2`.
    pub fn coefficient(&mut self) -> Rational {
        match self.rng.gen_range(0..9) {
            k @ 0..=6 => rational_int(k - 3),
            7 => Rational::new(1.into(), 2.into()),
            _ => Rational::new((-1).into(), 2.into()),
        }
    }

    pub fn nonzero_coefficient(&mut self) -> Rational {
        loop {
            let c = self.coefficient();
            if !c.is_zero() {
                return c;
            }
        }
    }

    /// A random point of Γ: a palette combination of the generators.
    pub fn exponent(&mut self) -> Exponent {
        let mut out = Exponent::zero(self.n());
        for g in self.spec.generators().to_vec() {
            let c = self.coefficient();
            if c.is_zero() {
                continue;
            }
            let scaled = Exponent::new(g.coords().iter().map(|x| x * &c).collect())
                .expect("generator length is even");
            out = out.add(&scaled).expect("generators share the ambient n");
        }
        out
    }

    pub fn nonzero_exponent(&mut self) -> Exponent {
        loop {
            let e = self.exponent();
            if !e.is_zero() {
                return e;
            }
        }
    }

    /// A monomial of `H` with a nonzero palette coefficient.
    pub fn h_monomial(&mut self) -> HElement {
        let c = self.nonzero_coefficient();
        HElement::monomial(c, self.nonzero_exponent())
    }

    pub fn h_element(&mut self, terms: usize) -> HElement {
        let mut out = HElement::zero(self.n());
        for _ in 0..terms {
            out = out.add(&self.h_monomial()).expect("same ambient");
        }
        out
    }

    pub fn bar_element(&mut self, terms: usize) -> BarElement {
        let mut out = BarElement::zero(self.n());
        for _ in 0..terms {
            let c = self.nonzero_coefficient();
            out = out
                .add(&BarElement::monomial(c, self.exponent()))
                .expect("same ambient");
        }
        out
    }

    pub fn tensor(&mut self, arity: usize, terms: usize) -> TensorElement {
        let raw = (0..terms)
            .map(|_| {
                let c = self.nonzero_coefficient();
                let slots = (0..arity).map(|_| self.nonzero_exponent()).collect();
                (c, slots)
            })
            .collect::<Vec<_>>();
        TensorElement::from_terms(self.n(), arity, raw).expect("slots share the ambient n")
    }

    pub fn nonzero_tensor(&mut self, arity: usize, terms: usize) -> TensorElement {
        loop {
            let t = self.tensor(arity, terms);
            if !t.is_zero() {
                return t;
            }
        }
    }

    /// A skew arity-2 tensor `v − τv` with at most `2·half_terms` terms.
    pub fn skew_tensor(&mut self, half_terms: usize) -> TensorElement {
        let v = self.tensor(2, half_terms);
        let twisted = v.twist().expect("arity 2");
        v.sub(&twisted).expect("same shape")
    }

    /// Shift the barred coordinates of `e` so its grade becomes `target`,
    /// nudging by the grade-neutral `σ_1` if the result would be zero.
    fn retarget(&self, e: &Exponent, target: &Grade) -> Exponent {
        let n = self.n();
        let delta = target
            .components()
            .iter()
            .zip(e.grade().components())
            .map(|(t, g)| t - g)
            .collect::<Vec<_>>();
        let mut coords = e.coords().to_vec();
        for (p, d) in delta.into_iter().enumerate() {
            coords[n + p] += d;
        }
        let adjusted = Exponent::new(coords).expect("length preserved");
        if adjusted.is_zero() {
            adjusted
                .add(&Exponent::sigma(n, 1).expect("n >= 1"))
                .expect("same length")
        } else {
            adjusted
        }
    }

    /// A homogeneous element: the first sampled exponent fixes the grade
    /// and the remaining terms are retargeted onto it.
    pub fn homogeneous_h_element(&mut self, terms: usize) -> HElement {
        let grade = self.nonzero_exponent().grade();
        let mut out = HElement::zero(self.n());
        for _ in 0..terms {
            let raw = self.nonzero_exponent();
            let e = self.retarget(&raw, &grade);
            out = out
                .add(&HElement::monomial(self.nonzero_coefficient(), e))
                .expect("same ambient");
        }
        out
    }

    /// A homogeneous tensor: each term's last slot is retargeted so every
    /// term has the same total grade.
    pub fn homogeneous_tensor(&mut self, arity: usize, terms: usize) -> TensorElement {
        let target = self.nonzero_exponent().grade();
        let raw = (0..terms)
            .map(|_| {
                let mut slots: Vec<Exponent> =
                    (0..arity).map(|_| self.nonzero_exponent()).collect();
                let mut rest = Grade::zero(self.n());
                for slot in &slots[..arity - 1] {
                    rest = rest.add(&slot.grade()).expect("same ambient");
                }
                let last_target = Grade::new(
                    target
                        .components()
                        .iter()
                        .zip(rest.components())
                        .map(|(t, r)| t - r)
                        .collect(),
                );
                let last = self.retarget(&slots[arity - 1], &last_target);
                slots[arity - 1] = last;
                (self.nonzero_coefficient(), slots)
            })
            .collect::<Vec<_>>();
        TensorElement::from_terms(self.n(), arity, raw).expect("slots share the ambient n")
    }
}
