//! Coboundary cobrackets `Δ_r(x) = x·r`, the classical Yang–Baxter
//! functional `c(r)`, the Lie-coalgebra and bialgebra axiom defects, the
//! identity `(1+ξ+ξ²)(1⊗Δ)Δ(x) = x·c(r)` for skew `r`, the triangular
//! constructor from a pair with `[a,b] = b`, and the ad-invariance witness
//! search.
//!
//! `c(r)` is computed entirely inside `H^{⊗3}`: each of the three
//! commutators `[r^{12},r^{13}]`, `[r^{12},r^{23}]`, `[r^{13},r^{23}]`
//! collapses to a single bracket in the shared slot because the identity
//! slots commute, giving the closed two-index expansion used below.

use crate::algebra::{bracket, check_same_dim, monomial_bracket_terms, HElement};
use crate::error::{Error, Result};
use crate::exponent::{Exponent, Rational};
use crate::tensor::{diag_action, tensor_product, TensorElement};
use crate::verify::annihilator_witness;

use num_traits::One;

/// A candidate r-matrix: an arity-2 tensor over `H`.
///
/// [`RMatrix::new`] verifies skewness (`r + τr = 0`), the form every
/// coboundary structure requires; [`RMatrix::raw`] skips the check so that
/// the defect operations can probe general tensors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RMatrix {
    value: TensorElement,
}

impl RMatrix {
    /// Wrap a skew tensor; fails with the symmetric part when `r + τr ≠ 0`.
    pub fn new(value: TensorElement) -> Result<Self> {
        value.check_arity(2)?;
        let sym = value.add(&value.twist()?)?;
        if !sym.is_zero() {
            return Err(Error::NotSkew {
                defect: sym.to_string(),
            });
        }
        Ok(Self { value })
    }

    /// Wrap an arbitrary arity-2 tensor without the skewness check.
    pub fn raw(value: TensorElement) -> Result<Self> {
        value.check_arity(2)?;
        Ok(Self { value })
    }

    pub fn value(&self) -> &TensorElement {
        &self.value
    }

    pub fn n(&self) -> usize {
        self.value.n()
    }

    pub fn is_skew(&self) -> bool {
        self.value.is_skew().expect("arity checked at construction")
    }
}

/// Structured outcome of an identity check or lemma harness.
///
/// When a `defect` is present it is nonzero and `passed` is false; a
/// `witness` names the probe (an acting monomial or sample element) that
/// produced the defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub passed: bool,
    pub defect: Option<TensorElement>,
    pub witness: Option<HElement>,
    pub description: String,
}

impl CheckReport {
    pub fn pass(description: impl Into<String>) -> Self {
        Self {
            passed: true,
            defect: None,
            witness: None,
            description: description.into(),
        }
    }

    pub fn fail(
        defect: Option<TensorElement>,
        witness: Option<HElement>,
        description: impl Into<String>,
    ) -> Self {
        Self {
            passed: false,
            defect,
            witness,
            description: description.into(),
        }
    }
}

/// The coboundary cobracket `Δ_r(x) = x · r`.
pub fn cobracket(r: &RMatrix, x: &HElement) -> Result<TensorElement> {
    diag_action(x, &r.value)
}

/// The classical Yang–Baxter functional
/// `c(r) = [r^{12},r^{13}] + [r^{12},r^{23}] + [r^{13},r^{23}] ∈ H^{⊗3}`,
/// expanded over the term list of `r = Σ a_i ⊗ b_i` as
/// `Σ_{i,j} [a_i,a_j]⊗b_i⊗b_j + a_i⊗[b_i,a_j]⊗b_j + a_i⊗a_j⊗[b_i,b_j]`.
pub fn cybe(r: &TensorElement) -> Result<TensorElement> {
    r.check_arity(2)?;
    let n = r.n();
    let mut out: Vec<(Rational, Vec<Exponent>)> = Vec::new();
    for (ki, ci) in r.terms() {
        let (ai, bi) = (&ki[0], &ki[1]);
        for (kj, cj) in r.terms() {
            let (aj, bj) = (&kj[0], &kj[1]);
            let scale = ci * cj;
            for (coeff, e) in monomial_bracket_terms(ai, aj)? {
                out.push((coeff * &scale, vec![e, bi.clone(), bj.clone()]));
            }
            for (coeff, e) in monomial_bracket_terms(bi, aj)? {
                out.push((coeff * &scale, vec![ai.clone(), e, bj.clone()]));
            }
            for (coeff, e) in monomial_bracket_terms(bi, bj)? {
                out.push((coeff * &scale, vec![ai.clone(), aj.clone(), e]));
            }
        }
    }
    TensorElement::from_terms(n, 3, out)
}

/// Anti-commutativity defect `Δ_r(x) + τ(Δ_r(x))`; zero whenever `r` is
/// skew, since the diagonal action commutes with the twist.
pub fn anti_commutativity_defect(r: &RMatrix, x: &HElement) -> Result<TensorElement> {
    let cob = cobracket(r, x)?;
    cob.add(&cob.twist()?)
}

/// `(1⊗Δ_r)(v)` for an arity-2 tensor: `Δ_r` is applied to the second slot
/// of every term and the resulting pair occupies slots 2 and 3.
fn one_tensor_cobracket(r: &RMatrix, v: &TensorElement) -> Result<TensorElement> {
    v.check_arity(2)?;
    let mut out: Vec<(Rational, Vec<Exponent>)> = Vec::new();
    for (key, c) in v.terms() {
        let second = HElement::monomial(Rational::one(), key[1].clone());
        for (inner, ci) in cobracket(r, &second)?.terms() {
            out.push((c * ci, vec![key[0].clone(), inner[0].clone(), inner[1].clone()]));
        }
    }
    TensorElement::from_terms(v.n(), 3, out)
}

/// Co-Jacobi defect `(1 + ξ + ξ²)·(1⊗Δ_r)·Δ_r(x)`; zero whenever
/// `c(r) = 0`.
pub fn co_jacobi_defect(r: &RMatrix, x: &HElement) -> Result<TensorElement> {
    let nested = one_tensor_cobracket(r, &cobracket(r, x)?)?;
    let rot1 = nested.cyclic()?;
    let rot2 = rot1.cyclic()?;
    nested.add(&rot1)?.add(&rot2)
}

/// Defect of `(1 + ξ + ξ²)·(1⊗Δ_r)·Δ_r(x) = x·c(r)`, identically zero for
/// every skew `r` (not only Yang–Baxter solutions). The two sides are
/// computed through independent code paths, so this doubles as the
/// module's strongest self-test.
pub fn drinfeld_identity_defect(r: &RMatrix, x: &HElement) -> Result<TensorElement> {
    if !r.is_skew() {
        let sym = r.value.add(&r.value.twist()?)?;
        return Err(Error::NotSkew {
            defect: sym.to_string(),
        });
    }
    let lhs = co_jacobi_defect(r, x)?;
    let rhs = diag_action(x, &cybe(&r.value)?)?;
    lhs.sub(&rhs)
}

/// Cocycle defect `Δ_r([x,y]) − x·Δ_r(y) + y·Δ_r(x)`; identically zero for
/// any `r` — coboundaries are 1-cocycles.
pub fn compatibility_defect(r: &RMatrix, x: &HElement, y: &HElement) -> Result<TensorElement> {
    check_same_dim(x.dim(), y.dim())?;
    let lhs = cobracket(r, &bracket(x, y)?)?;
    let act_x = diag_action(x, &cobracket(r, y)?)?;
    let act_y = diag_action(y, &cobracket(r, x)?)?;
    lhs.sub(&act_x)?.add(&act_y)
}

/// The triangular constructor: given `[a, b] = b`, returns
/// `r = a⊗b − b⊗a`, which is skew and satisfies `c(r) = 0`. Both
/// postconditions are verified before returning.
pub fn triangular_from_pair(a: &HElement, b: &HElement) -> Result<RMatrix> {
    check_same_dim(a.dim(), b.dim())?;
    let defect = bracket(a, b)?.sub(b)?;
    if !defect.is_zero() {
        return Err(Error::BracketConstraint {
            defect: Box::new(defect),
        });
    }
    let value = tensor_product(&[a, b])?.sub(&tensor_product(&[b, a])?)?;
    let r = RMatrix::new(value)?;
    let obstruction = cybe(&r.value)?;
    if !obstruction.is_zero() {
        return Err(Error::Postcondition(format!(
            "triangular construction produced c(r) = {obstruction} != 0"
        )));
    }
    Ok(r)
}

/// Search for `x` with `x·c ≠ 0` among the canonical monomial family
/// `{t^{kε_p}, t^{kε_{p̄}}, t^{kσ_p}}` with `k ≤ k_bound`, in the
/// deterministic order documented on
/// [`canonical_action_monomials`](crate::verify::canonical_action_monomials).
///
/// A `None` result is only "no witness up to the bound": when `c ≠ 0` and
/// `k_bound ≥ coordinate spread + 2` a witness is guaranteed to exist, but
/// absence below that bound proves nothing.
pub fn ad_invariance_witness(c: &TensorElement, k_bound: u32) -> Result<Option<HElement>> {
    c.check_arity(3)?;
    Ok(annihilator_witness(c, k_bound))
}
