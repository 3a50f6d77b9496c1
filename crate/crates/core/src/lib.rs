//! Exact symbolic kernel for generalized Hamiltonian (Cartan type H) Lie
//! algebras over ℚ.
//!
//! The crate implements, on finite-support elements with exact rational
//! coefficients:
//!
//! - the group algebra `H̄` with its Poisson structure and the simple
//!   quotient `H = H̄ / F·1` ([`algebra`]);
//! - exponent arithmetic, the grading map, and nondegeneracy of the index
//!   group `Γ ⊂ ℚ^{2n}` ([`exponent`]);
//! - sparse tensor powers `H^{⊗m}` with the twist, the cyclic permutation,
//!   and the adjoint diagonal action ([`tensor`]);
//! - coboundary cobrackets, the classical Yang–Baxter functional `c(r)`,
//!   the Lie-bialgebra axiom defects, and the triangular constructor
//!   ([`bialgebra`]);
//! - bounded verification harnesses for the supporting annihilator and
//!   membership lemmas ([`verify`]);
//! - a canonical JSON wire format for elements, tensors, and check reports
//!   ([`json`]) and seeded random generation of test inputs ([`sampling`]).
//!
//! Everything is an immutable value and every operation is pure, so all
//! types are safe to share across threads. All identity checks are exact:
//! a "defect" function returns an element whose canonical form is empty
//! exactly when the identity holds.

pub mod algebra;
pub mod bialgebra;
pub mod error;
pub mod exponent;
pub mod json;
pub mod sampling;
pub mod tensor;
pub mod verify;

pub use algebra::{
    bracket, bracket_bar, jacobi_defect, leibniz_defect, product, BarElement, HElement,
};
pub use bialgebra::{
    ad_invariance_witness, anti_commutativity_defect, cobracket, co_jacobi_defect, compatibility_defect,
    cybe, drinfeld_identity_defect, triangular_from_pair, CheckReport, RMatrix,
};
pub use error::{Error, Result};
pub use exponent::{Exponent, GammaSpec, Grade, Rational};
pub use sampling::Sampler;
pub use tensor::{diag_action, sigma_eigen_defect, tensor_product, TensorElement};
pub use verify::{
    annihilator_witness, canonical_action_monomials, derivation_defect, inner_apply,
    lemma23_harness, skew_closure_harness, vp_membership, InnerDerivation,
};
