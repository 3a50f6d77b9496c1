//! Brute-force oracle for the Yang–Baxter functional.
//!
//! Computes `c(r) = [r^{12},r^{13}] + [r^{12},r^{23}] + [r^{13},r^{23}]`
//! literally, inside the tensor cube of the universal enveloping algebra:
//! each slot holds a *word* of monomial letters (the empty word is the
//! unit), products concatenate words slotwise, and words are normalized
//! with the rewrite `x·y = y·x + [x,y]` until every word is sorted. The
//! result must collapse to single-letter words in every slot, which is
//! then converted back to a plain tensor.
//!
//! This shares nothing with the library's closed two-index expansion
//! except the monomial bracket itself.

use std::collections::BTreeMap;

use hamlie::exponent::rational_int;
use hamlie::{bracket, Exponent, HElement, Rational, TensorElement};

use num_traits::Zero;

type Word = Vec<Exponent>;
type Key = Vec<Word>;
type Terms = BTreeMap<Key, Rational>;

fn accumulate(map: &mut Terms, key: Key, coeff: Rational) {
    if coeff.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += coeff;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

fn multiply(a: &Terms, b: &Terms) -> Terms {
    let mut out = Terms::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let key: Key = ka
                .iter()
                .zip(kb)
                .map(|(wa, wb)| wa.iter().chain(wb).cloned().collect())
                .collect();
            accumulate(&mut out, key, ca * cb);
        }
    }
    out
}

fn commutator(a: &Terms, b: &Terms) -> Terms {
    let mut out = multiply(a, b);
    for (k, c) in multiply(b, a) {
        accumulate(&mut out, k, -c);
    }
    out
}

/// Embed the arity-2 tensor into slots `(i, j)` of the cube, with the unit
/// in the remaining slot.
fn embed(r: &TensorElement, i: usize, j: usize) -> Terms {
    let mut out = Terms::new();
    for (key, c) in r.terms() {
        let mut slots: Key = vec![Vec::new(), Vec::new(), Vec::new()];
        slots[i] = vec![key[0].clone()];
        slots[j] = vec![key[1].clone()];
        accumulate(&mut out, slots, c.clone());
    }
    out
}

fn first_unsorted(terms: &Terms) -> Option<(Key, usize, usize)> {
    for key in terms.keys() {
        for (slot, word) in key.iter().enumerate() {
            for pos in 0..word.len().saturating_sub(1) {
                if word[pos] > word[pos + 1] {
                    return Some((key.clone(), slot, pos));
                }
            }
        }
    }
    None
}

/// Straighten every word with `x·y = y·x + [x,y]` until sorted.
fn normalize(mut terms: Terms) -> Terms {
    while let Some((key, slot, pos)) = first_unsorted(&terms) {
        let coeff = terms.remove(&key).expect("key just found");
        let x = key[slot][pos].clone();
        let y = key[slot][pos + 1].clone();

        let mut swapped = key.clone();
        swapped[slot].swap(pos, pos + 1);
        accumulate(&mut terms, swapped, coeff.clone());

        let br = bracket(
            &HElement::monomial(rational_int(1), x),
            &HElement::monomial(rational_int(1), y),
        )
        .expect("same ambient");
        for (e, bc) in br.terms() {
            let mut shorter = key.clone();
            shorter[slot].remove(pos + 1);
            shorter[slot][pos] = e.clone();
            accumulate(&mut terms, shorter, &coeff * bc);
        }
    }
    terms
}

/// The Yang–Baxter functional computed the slow way. Panics if the
/// normalized result does not lie in `H ⊗ H ⊗ H`, which would falsify the
/// claim that `c(r)` stays inside the Lie algebra cube.
pub fn cybe_oracle(r: &TensorElement) -> TensorElement {
    let r12 = embed(r, 0, 1);
    let r13 = embed(r, 0, 2);
    let r23 = embed(r, 1, 2);

    let mut total = commutator(&r12, &r13);
    for source in [commutator(&r12, &r23), commutator(&r13, &r23)] {
        for (k, c) in source {
            accumulate(&mut total, k, c);
        }
    }
    let total = normalize(total);

    let terms: Vec<(Rational, Vec<Exponent>)> = total
        .into_iter()
        .map(|(key, c)| {
            let slots: Vec<Exponent> = key
                .into_iter()
                .map(|word| {
                    assert_eq!(word.len(), 1, "c(r) left the Lie algebra cube");
                    word.into_iter().next().expect("length checked")
                })
                .collect();
            (c, slots)
        })
        .collect();
    TensorElement::from_terms(r.n(), 3, terms).expect("slots share the ambient n")
}
