//! Finite-support elements of the tensor powers `H^{⊗m}`, the twist and
//! cyclic permutations, the adjoint diagonal action, skew-symmetry, and the
//! tensor grading.
//!
//! Terms are keyed by `m`-tuples of exponents so that slotwise bracket
//! application and slot permutations stay linear in the support size. Each
//! slot lives in `H`, so the zero exponent never appears in a key.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::algebra::{check_same_dim, monomial_bracket_terms, HElement};
use crate::error::{Error, Result};
use crate::exponent::{coordinate_spread, Exponent, Grade, Rational};

type SlotKey = Vec<Exponent>;
type TensorTermMap = BTreeMap<SlotKey, Rational>;

/// An element of `H^{⊗m}`; `m = 2` realizes `V = H⊗H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    n: usize,
    arity: usize,
    terms: TensorTermMap,
}

fn accumulate(map: &mut TensorTermMap, key: SlotKey, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += coeff;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

impl TensorElement {
    pub fn zero(n: usize, arity: usize) -> Self {
        Self {
            n,
            arity,
            terms: TensorTermMap::new(),
        }
    }

    /// A single basis tensor `coeff · t^{α_1} ⊗ … ⊗ t^{α_m}`. Slots live in
    /// `H`, so a zero exponent in any slot yields the zero element, as does
    /// a zero coefficient.
    pub fn basis(n: usize, coeff: Rational, slots: Vec<Exponent>) -> Result<Self> {
        Self::from_terms(n, slots.len(), [(coeff, slots)])
    }

    pub fn from_terms(
        n: usize,
        arity: usize,
        terms: impl IntoIterator<Item = (Rational, Vec<Exponent>)>,
    ) -> Result<Self> {
        let mut map = TensorTermMap::new();
        for (c, slots) in terms {
            if slots.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: slots.len(),
                });
            }
            for e in &slots {
                check_same_dim(2 * n, e.len())?;
            }
            if slots.iter().any(Exponent::is_zero) {
                continue;
            }
            accumulate(&mut map, slots, c);
        }
        Ok(Self {
            n,
            arity,
            terms: map,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SlotKey, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, key: &SlotKey) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        check_same_dim(self.dim(), other.dim())?;
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        Ok(())
    }

    pub fn check_arity(&self, expected: usize) -> Result<()> {
        if self.arity != expected {
            return Err(Error::ArityMismatch {
                expected,
                found: self.arity,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            accumulate(&mut terms, k.clone(), c.clone());
        }
        Ok(Self {
            n: self.n,
            arity: self.arity,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.n, self.arity);
        }
        Self {
            n: self.n,
            arity: self.arity,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    fn permuted(&self, rearrange: impl Fn(&SlotKey) -> SlotKey) -> Self {
        let mut terms = TensorTermMap::new();
        for (k, c) in &self.terms {
            terms.insert(rearrange(k), c.clone());
        }
        Self {
            n: self.n,
            arity: self.arity,
            terms,
        }
    }

    /// The twist `τ(x⊗y) = y⊗x` on arity-2 tensors.
    pub fn twist(&self) -> Result<Self> {
        self.check_arity(2)?;
        Ok(self.permuted(|k| vec![k[1].clone(), k[0].clone()]))
    }

    /// The cyclic map `ξ: x_1⊗x_2⊗x_3 ↦ x_2⊗x_3⊗x_1` on arity-3 tensors.
    pub fn cyclic(&self) -> Result<Self> {
        self.check_arity(3)?;
        Ok(self.permuted(|k| vec![k[1].clone(), k[2].clone(), k[0].clone()]))
    }

    /// The antisymmetric part `(v − τv)/2`.
    pub fn skew_part(&self) -> Result<Self> {
        let half = Rational::new(1.into(), 2.into());
        Ok(self.sub(&self.twist()?)?.scale(&half))
    }

    /// True iff `v + τv = 0`, which in characteristic zero characterizes
    /// membership in `Im(1⊗1 − τ)`.
    pub fn is_skew(&self) -> Result<bool> {
        Ok(self.add(&self.twist()?)?.is_zero())
    }

    /// Partition terms by the sum of their slot grades; the parts sum back
    /// to the tensor.
    pub fn grade_decompose(&self) -> BTreeMap<Grade, TensorElement> {
        let mut parts: BTreeMap<Grade, TensorElement> = BTreeMap::new();
        for (k, c) in &self.terms {
            let grade = term_grade(self.n, k);
            let part = parts
                .entry(grade)
                .or_insert_with(|| TensorElement::zero(self.n, self.arity));
            part.terms.insert(k.clone(), c.clone());
        }
        parts
    }

    /// The common total grade of all terms, if the tensor is homogeneous.
    /// The zero tensor is homogeneous of grade 0.
    pub fn homogeneous_grade(&self) -> Result<Grade> {
        let mut grade: Option<Grade> = None;
        for (k, _) in &self.terms {
            let g = term_grade(self.n, k);
            match &grade {
                None => grade = Some(g),
                Some(prev) if *prev != g => {
                    return Err(Error::NotHomogeneous {
                        first: prev.to_string(),
                        second: g.to_string(),
                    })
                }
                Some(_) => {}
            }
        }
        Ok(grade.unwrap_or_else(|| Grade::zero(self.n)))
    }

    /// `ceil(max − min)` over all coordinates of all slot exponents in the
    /// support; sizes the `k` bound of the bounded harnesses.
    pub fn coordinate_spread(&self) -> u32 {
        coordinate_spread(self.terms.keys().flatten())
    }
}

fn term_grade(n: usize, key: &SlotKey) -> Grade {
    let mut grade = Grade::zero(n);
    for e in key {
        grade = grade.add(&e.grade()).expect("slots share the ambient n");
    }
    grade
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            for (s, e) in k.iter().enumerate() {
                if s > 0 {
                    write!(f, "(x)")?;
                }
                write!(f, "t^{e}")?;
            }
        }
        Ok(())
    }
}

/// The pure tensor `x_1 ⊗ … ⊗ x_m` of `H` elements (bilinear in every
/// factor).
pub fn tensor_product(factors: &[&HElement]) -> Result<TensorElement> {
    let Some(first) = factors.first() else {
        return Err(Error::ArityMismatch {
            expected: 1,
            found: 0,
        });
    };
    let n = first.n();
    let mut keys: Vec<(Rational, Vec<Exponent>)> = vec![(Rational::one(), Vec::new())];
    for factor in factors {
        check_same_dim(2 * n, factor.dim())?;
        let mut next = Vec::with_capacity(keys.len() * factor.support_len());
        for (c, key) in &keys {
            for (e, fc) in factor.terms() {
                let mut key = key.clone();
                key.push(e.clone());
                next.push((c * fc, key));
            }
        }
        keys = next;
    }
    TensorElement::from_terms(n, factors.len(), keys)
}

/// The adjoint diagonal action of `x ∈ H` on `H^{⊗m}`: the sum over slots
/// of the `H`-bracket applied in that slot.
pub fn diag_action(x: &HElement, v: &TensorElement) -> Result<TensorElement> {
    check_same_dim(x.dim(), v.dim())?;
    let mut terms = TensorTermMap::new();
    for (key, c) in v.terms() {
        for (kappa, d) in x.terms() {
            let scale = c * d;
            for slot in 0..v.arity() {
                for (coeff, e) in monomial_bracket_terms(kappa, &key[slot])? {
                    if e.is_zero() {
                        continue;
                    }
                    let mut new_key = key.clone();
                    new_key[slot] = e;
                    accumulate(&mut terms, new_key, coeff * &scale);
                }
            }
        }
    }
    Ok(TensorElement {
        n: v.n(),
        arity: v.arity(),
        terms,
    })
}

/// Defect of the eigenvalue law `t^{σ_p}|_{V_μ} = μ_p·1`: for homogeneous
/// `v` of grade `μ`, returns `t^{σ_p}·v − μ_p·v` (identically zero).
pub fn sigma_eigen_defect(p: usize, v: &TensorElement) -> Result<TensorElement> {
    let n = v.n();
    if p == 0 || p > n {
        return Err(Error::IndexOutOfRange { p, n });
    }
    let grade = v.homogeneous_grade()?;
    let sigma = HElement::monomial(Rational::one(), Exponent::sigma(n, p)?);
    diag_action(&sigma, v)?.sub(&v.scale(grade.component(p)))
}
