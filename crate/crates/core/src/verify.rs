//! Finite-support verification harnesses for the supporting lemmas: inner
//! derivations and the derivation law, `V^p` membership, annihilator
//! witnesses, and skew closure under the diagonal action.
//!
//! The underlying statements quantify over all `k ∈ ℤ` or all of `H`; the
//! harnesses bound the quantifier by `k ≤ K` and report a bounded
//! verification, never a proof. The default bound `K = coordinate spread
//! + 2` mirrors the "choose k ≫ 0" step of the proofs, which only needs
//! `k` beyond the coordinate offsets of the support.

use crate::algebra::{bracket, HElement};
use crate::bialgebra::CheckReport;
use crate::error::{Error, Result};
use crate::exponent::{Exponent, Rational};
use crate::tensor::{diag_action, TensorElement};

use num_traits::{One, Zero};

/// The inner derivation `a_inn : x ↦ x·a` attached to `a ∈ H⊗H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InnerDerivation {
    generator: TensorElement,
}

impl InnerDerivation {
    pub fn new(generator: TensorElement) -> Result<Self> {
        generator.check_arity(2)?;
        Ok(Self { generator })
    }

    pub fn generator(&self) -> &TensorElement {
        &self.generator
    }
}

/// Evaluate the inner derivation: `x ↦ x·a`.
pub fn inner_apply(d: &InnerDerivation, x: &HElement) -> Result<TensorElement> {
    diag_action(x, &d.generator)
}

/// Defect of the derivation law `d([x,y]) = x·d(y) − y·d(x)`; identically
/// zero for inner derivations.
pub fn derivation_defect(d: &InnerDerivation, x: &HElement, y: &HElement) -> Result<TensorElement> {
    let lhs = inner_apply(d, &bracket(x, y)?)?;
    let act_x = diag_action(x, &inner_apply(d, y)?)?;
    let act_y = diag_action(y, &inner_apply(d, x)?)?;
    lhs.sub(&act_x)?.add(&act_y)
}

fn pair_is_clean(e: &Exponent, p: usize) -> bool {
    e.unbarred(p).is_zero() && e.barred(p).is_zero()
}

/// Membership in `V^p = H^p⊗H + H⊗H^p`: every term `t^α ⊗ t^β` must have
/// `α_p = α_{p̄} = 0` or `β_p = β_{p̄} = 0`.
pub fn vp_membership(v: &TensorElement, p: usize) -> Result<bool> {
    v.check_arity(2)?;
    let n = v.n();
    if p == 0 || p > n {
        return Err(Error::IndexOutOfRange { p, n });
    }
    Ok(v.terms()
        .all(|(key, _)| pair_is_clean(&key[0], p) || pair_is_clean(&key[1], p)))
}

/// The three monomial families the harnesses act by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Eps,
    EpsBar,
    Sigma,
}

fn family_monomial(n: usize, family: Family, p: usize, k: u32) -> HElement {
    let base = match family {
        Family::Eps => Exponent::eps(n, p),
        Family::EpsBar => Exponent::eps(n, n + p),
        Family::Sigma => Exponent::sigma(n, p),
    }
    .expect("p validated by caller");
    HElement::monomial(Rational::one(), base.scale(i64::from(k)))
}

fn family_label(family: Family, p: usize, k: u32) -> String {
    match family {
        Family::Eps => format!("t^({k}*eps_{p})"),
        Family::EpsBar => format!("t^({k}*eps_bar_{p})"),
        Family::Sigma => format!("t^({k}*sigma_{p})"),
    }
}

/// The canonical deterministic candidate family for witness searches:
/// monomials are produced family by family — first `t^{k·ε_p}`, then
/// `t^{k·ε_{p̄}}`, then `t^{k·σ_p}` — with `p` ascending within each family
/// and `k` ascending from 1 to `k_bound` within each `p`. Searches report
/// the first hit in this order regardless of how they are executed.
pub fn canonical_action_monomials(n: usize, k_bound: u32) -> Vec<HElement> {
    let mut out = Vec::new();
    for family in [Family::Eps, Family::EpsBar, Family::Sigma] {
        for p in 1..=n {
            for k in 1..=k_bound {
                out.push(family_monomial(n, family, p, k));
            }
        }
    }
    out
}

/// Search the canonical family for `a` with `a·c ≠ 0`. For nonzero `c` the
/// annihilator lemma guarantees a witness once
/// `k_bound ≥ coordinate spread + 2`; `None` below that bound is
/// inconclusive.
pub fn annihilator_witness(c: &TensorElement, k_bound: u32) -> Option<HElement> {
    for a in canonical_action_monomials(c.n(), k_bound) {
        let acted = diag_action(&a, c).expect("candidates share the ambient n");
        if !acted.is_zero() {
            return Some(a);
        }
    }
    None
}

/// Bounded harness for the membership lemma: if `t^{kε_p}·v` and
/// `t^{kε_{p̄}}·v` vanish for all `k`, then `v ∈ V^p`.
///
/// Acts for `k = 1..=k_bound`. A nonzero action reports "hypothesis not
/// met" with the acting monomial as witness and the action as defect.
/// When every action vanishes and `k_bound ≥ spread + 2`, the conclusion
/// is asserted and `passed` reflects the membership test; with a smaller
/// bound the report passes but states that membership was not asserted.
pub fn lemma23_harness(v: &TensorElement, p: usize, k_bound: u32) -> Result<CheckReport> {
    v.check_arity(2)?;
    let n = v.n();
    if p == 0 || p > n {
        return Err(Error::IndexOutOfRange { p, n });
    }
    for family in [Family::Eps, Family::EpsBar] {
        for k in 1..=k_bound {
            let x = family_monomial(n, family, p, k);
            let acted = diag_action(&x, v)?;
            if !acted.is_zero() {
                let label = family_label(family, p, k);
                return Ok(CheckReport::fail(
                    Some(acted),
                    Some(x),
                    format!("hypothesis not met: {label} . v != 0"),
                ));
            }
        }
    }
    let required = v.coordinate_spread() + 2;
    if k_bound < required {
        return Ok(CheckReport::pass(format!(
            "hypothesis met for k = 1..{k_bound}; bound below spread + 2 = {required}, \
             membership not asserted"
        )));
    }
    if vp_membership(v, p)? {
        Ok(CheckReport::pass(format!(
            "hypothesis met for k = 1..{k_bound}; membership in V^{p} verified"
        )))
    } else {
        Ok(CheckReport::fail(
            None,
            None,
            format!("hypothesis met for k = 1..{k_bound} but v is not in V^{p}"),
        ))
    }
}

/// Bounded harness for skew closure: if `a·r` is skew for every `a`, then
/// `r` is skew. Probes the given sample first (in order), then the
/// canonical family with `k ≤ k_bound`.
pub fn skew_closure_harness(
    r: &TensorElement,
    sample: &[HElement],
    k_bound: u32,
) -> Result<CheckReport> {
    r.check_arity(2)?;
    let canonical = canonical_action_monomials(r.n(), k_bound);
    for a in sample.iter().chain(&canonical) {
        let acted = diag_action(a, r)?;
        let sym = acted.add(&acted.twist()?)?;
        if !sym.is_zero() {
            return Ok(CheckReport::fail(
                Some(sym),
                Some(a.clone()),
                format!("hypothesis not met: a.r is not skew for a = {a}"),
            ));
        }
    }
    let required = r.coordinate_spread() + 2;
    if k_bound < required {
        return Ok(CheckReport::pass(format!(
            "hypothesis met on sample and k = 1..{k_bound}; bound below spread + 2 = {required}, \
             skewness not asserted"
        )));
    }
    let sym = r.add(&r.twist()?)?;
    if sym.is_zero() {
        Ok(CheckReport::pass(format!(
            "hypothesis met on sample and k = 1..{k_bound}; r is skew"
        )))
    } else {
        Ok(CheckReport::fail(
            Some(sym),
            None,
            format!("hypothesis met on sample and k = 1..{k_bound} but r is not skew"),
        ))
    }
}
