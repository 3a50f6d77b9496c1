//! Elements of the Poisson group algebra `H̄` and of the quotient
//! `H = H̄ / F·1`, together with the product, the Hamiltonian bracket, the
//! grading decomposition, and the defect computations for the Jacobi and
//! Leibniz identities.
//!
//! Both element flavors are canonical sparse maps from exponents to nonzero
//! rational coefficients; `H` elements additionally never store the zero
//! exponent (`t^0 ≡ 0` in the quotient). Exact zero testing on these
//! canonical forms is the verification primitive everything else builds on.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exponent::{Exponent, Grade, Rational};

pub(crate) type TermMap = BTreeMap<Exponent, Rational>;

pub(crate) fn accumulate(map: &mut TermMap, exponent: Exponent, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(exponent) {
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

pub(crate) fn check_same_dim(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch {
            expected: a,
            found: b,
        });
    }
    Ok(())
}

/// The monomial bracket at the `H̄` level:
/// `[t^a, t^b] = Σ_{i=1..n} (a_i b_{ī} − b_i a_{ī}) t^{a+b−σ_i}`.
/// Zero-exponent results are retained; quotient callers drop them.
pub(crate) fn monomial_bracket_terms(
    a: &Exponent,
    b: &Exponent,
) -> Result<Vec<(Rational, Exponent)>> {
    check_same_dim(a.len(), b.len())?;
    let n = a.pairs();
    let sum = a.add(b)?;
    let mut out = Vec::new();
    for i in 1..=n {
        let coeff = a.unbarred(i) * b.barred(i) - b.unbarred(i) * a.barred(i);
        if coeff.is_zero() {
            continue;
        }
        out.push((coeff, sum.sub(&Exponent::sigma(n, i)?)?));
    }
    Ok(out)
}

fn fmt_terms(f: &mut fmt::Formatter<'_>, terms: &TermMap) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (e, c)) in terms.iter().enumerate() {
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
        if mag.is_one() {
            write!(f, "t^{e}")?;
        } else {
            write!(f, "{mag}*t^{e}")?;
        }
    }
    Ok(())
}

/// An element of `H̄`: a finite ℚ-linear combination of monomials `t^α`,
/// including the identity `t^0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarElement {
    n: usize,
    terms: TermMap,
}

impl BarElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: TermMap::new(),
        }
    }

    /// `coeff · t^exponent`; a zero coefficient yields the zero element.
    pub fn monomial(coeff: Rational, exponent: Exponent) -> Self {
        let n = exponent.pairs();
        let mut terms = TermMap::new();
        accumulate(&mut terms, exponent, coeff);
        Self { n, terms }
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Rational, Exponent)>,
    ) -> Result<Self> {
        let mut map = TermMap::new();
        for (c, e) in terms {
            check_same_dim(2 * n, e.len())?;
            accumulate(&mut map, e, c);
        }
        Ok(Self { n, terms: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same_dim(self.dim(), other.dim())?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut terms, e.clone(), c.clone());
        }
        Ok(Self { n: self.n, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    /// The quotient map `H̄ → H = H̄ / F·1`: drop the `t^0` component.
    pub fn project_to_h(&self) -> HElement {
        let mut terms = self.terms.clone();
        terms.remove(&Exponent::zero(self.n));
        HElement { n: self.n, terms }
    }
}

impl fmt::Display for BarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.terms)
    }
}

/// An element of the Hamiltonian Lie algebra `H = H̄ / F·1`: same canonical
/// sparse form, with the zero exponent never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HElement {
    n: usize,
    terms: TermMap,
}

impl HElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: TermMap::new(),
        }
    }

    /// `coeff · t^exponent` in the quotient: the zero exponent maps to the
    /// zero element.
    pub fn monomial(coeff: Rational, exponent: Exponent) -> Self {
        let n = exponent.pairs();
        if exponent.is_zero() {
            return Self::zero(n);
        }
        let mut terms = TermMap::new();
        accumulate(&mut terms, exponent, coeff);
        Self { n, terms }
    }

    /// Build from (coefficient, exponent) pairs, applying the quotient
    /// (zero-exponent terms are dropped).
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Rational, Exponent)>,
    ) -> Result<Self> {
        let mut map = TermMap::new();
        for (c, e) in terms {
            check_same_dim(2 * n, e.len())?;
            if e.is_zero() {
                continue;
            }
            accumulate(&mut map, e, c);
        }
        Ok(Self { n, terms: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_same_dim(self.dim(), other.dim())?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut terms, e.clone(), c.clone());
        }
        Ok(Self { n: self.n, terms })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    /// Partition into homogeneous components `H_μ`; the parts sum back to
    /// the element.
    pub fn grade_decompose(&self) -> BTreeMap<Grade, HElement> {
        let mut parts: BTreeMap<Grade, HElement> = BTreeMap::new();
        for (e, c) in &self.terms {
            let part = parts
                .entry(e.grade())
                .or_insert_with(|| HElement::zero(self.n));
            part.terms.insert(e.clone(), c.clone());
        }
        parts
    }

    /// The common grade of all terms, if the element is homogeneous.
    /// The zero element is homogeneous of grade 0.
    pub fn homogeneous_grade(&self) -> Result<Grade> {
        let mut grade: Option<Grade> = None;
        for (e, _) in &self.terms {
            let g = e.grade();
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
}

impl fmt::Display for HElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.terms)
    }
}

/// The commutative product of `H̄`: bilinear extension of
/// `t^α · t^β = t^{α+β}`.
pub fn product(u: &BarElement, v: &BarElement) -> Result<BarElement> {
    check_same_dim(u.dim(), v.dim())?;
    let mut terms = TermMap::new();
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            accumulate(&mut terms, a.add(b)?, ca * cb);
        }
    }
    Ok(BarElement { n: u.n, terms })
}

/// The Hamiltonian bracket on `H̄`; `t^0` terms are retained.
pub fn bracket_bar(u: &BarElement, v: &BarElement) -> Result<BarElement> {
    check_same_dim(u.dim(), v.dim())?;
    let mut terms = TermMap::new();
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            let scale = ca * cb;
            for (coeff, e) in monomial_bracket_terms(a, b)? {
                accumulate(&mut terms, e, coeff * &scale);
            }
        }
    }
    Ok(BarElement { n: u.n, terms })
}

/// The bracket of `H`: the `H̄` bracket followed by the quotient
/// (`t^0` terms deleted).
pub fn bracket(u: &HElement, v: &HElement) -> Result<HElement> {
    check_same_dim(u.dim(), v.dim())?;
    let mut terms = TermMap::new();
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            let scale = ca * cb;
            for (coeff, e) in monomial_bracket_terms(a, b)? {
                if e.is_zero() {
                    continue;
                }
                accumulate(&mut terms, e, coeff * &scale);
            }
        }
    }
    Ok(HElement { n: u.n, terms })
}

/// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]` — identically zero; exposed as a
/// defect so checks can assert exact vanishing.
pub fn jacobi_defect(x: &HElement, y: &HElement, z: &HElement) -> Result<HElement> {
    let a = bracket(x, &bracket(y, z)?)?;
    let b = bracket(y, &bracket(z, x)?)?;
    let c = bracket(z, &bracket(x, y)?)?;
    a.add(&b)?.add(&c)
}

/// `[u, v·w] − [u,v]·w − v·[u,w]` — identically zero on the Poisson
/// algebra `H̄`.
pub fn leibniz_defect(u: &BarElement, v: &BarElement, w: &BarElement) -> Result<BarElement> {
    let lhs = bracket_bar(u, &product(v, w)?)?;
    let rhs = product(&bracket_bar(u, v)?, w)?.add(&product(v, &bracket_bar(u, w)?)?)?;
    lhs.sub(&rhs)
}
