//! Canonical JSON wire format for elements, tensors, and check reports.
//!
//! Elements: `{"n": 1, "terms": [{"c": "4", "e": ["1", "1"]}]}` with
//! rationals as strings in reduced `p/q` form and exponents as arrays of
//! `2n` coordinates in block order. Tensors add the arity:
//! `{"n": 1, "m": 2, "terms": [{"c": "1", "e": [["1","0"], ["0","1"]]}]}`.
//!
//! Serialization emits terms in the canonical order (lexicographic on
//! exponent tuples, slotwise, coordinatewise as exact rationals), so
//! `serialize ∘ parse ∘ serialize = serialize` byte for byte. Parsing
//! rejects duplicate exponents, zero coefficients, wrong coordinate or
//! slot counts, and — for `H` elements and tensor slots — the zero
//! exponent.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{BarElement, HElement};
use crate::bialgebra::CheckReport;
use crate::error::{Error, Result};
use crate::exponent::{format_rational, parse_rational, Exponent, Rational};
use crate::tensor::TensorElement;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDto {
    pub c: String,
    pub e: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementDto {
    pub n: usize,
    pub terms: Vec<TermDto>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorTermDto {
    pub c: String,
    pub e: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDto {
    pub n: usize,
    pub m: usize,
    pub terms: Vec<TensorTermDto>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckReportDto {
    pub passed: bool,
    pub defect: Option<TensorDto>,
    pub witness: Option<ElementDto>,
    pub description: String,
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn coefficient_at(location: &str, text: &str) -> Result<Rational> {
    let value = parse_rational(text)
        .map_err(|e| parse_error(location, e.to_string()))?;
    if value.is_zero() {
        return Err(parse_error(location, "zero coefficient"));
    }
    Ok(value)
}

fn exponent_at(location: &str, n: usize, coords: &[String]) -> Result<Exponent> {
    if coords.len() != 2 * n {
        return Err(parse_error(
            location,
            format!("expected {} coordinates, found {}", 2 * n, coords.len()),
        ));
    }
    let coords = coords
        .iter()
        .enumerate()
        .map(|(i, c)| {
            parse_rational(c).map_err(|e| parse_error(format!("{location}[{i}]"), e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Exponent::new(coords)
}

fn check_positive_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(parse_error("n", "ambient n must be positive"));
    }
    Ok(())
}

fn element_terms(dto: &ElementDto, reject_zero_exponent: bool) -> Result<Vec<(Rational, Exponent)>> {
    check_positive_n(dto.n)?;
    let mut seen = BTreeSet::new();
    let mut terms = Vec::with_capacity(dto.terms.len());
    for (i, term) in dto.terms.iter().enumerate() {
        let c = coefficient_at(&format!("terms[{i}].c"), &term.c)?;
        let e = exponent_at(&format!("terms[{i}].e"), dto.n, &term.e)?;
        if reject_zero_exponent && e.is_zero() {
            return Err(parse_error(
                format!("terms[{i}].e"),
                "zero exponent t^0 is not an element of H",
            ));
        }
        if !seen.insert(e.clone()) {
            return Err(parse_error(format!("terms[{i}].e"), "duplicate exponent"));
        }
        terms.push((c, e));
    }
    Ok(terms)
}

pub fn bar_element_from_dto(dto: &ElementDto) -> Result<BarElement> {
    BarElement::from_terms(dto.n, element_terms(dto, false)?)
}

pub fn h_element_from_dto(dto: &ElementDto) -> Result<HElement> {
    HElement::from_terms(dto.n, element_terms(dto, true)?)
}

pub fn tensor_from_dto(dto: &TensorDto) -> Result<TensorElement> {
    check_positive_n(dto.n)?;
    if dto.m == 0 {
        return Err(parse_error("m", "tensor arity must be positive"));
    }
    let mut seen = BTreeSet::new();
    let mut terms = Vec::with_capacity(dto.terms.len());
    for (i, term) in dto.terms.iter().enumerate() {
        let c = coefficient_at(&format!("terms[{i}].c"), &term.c)?;
        if term.e.len() != dto.m {
            return Err(parse_error(
                format!("terms[{i}].e"),
                format!("expected {} slots, found {}", dto.m, term.e.len()),
            ));
        }
        let mut slots = Vec::with_capacity(dto.m);
        for (s, coords) in term.e.iter().enumerate() {
            let location = format!("terms[{i}].e[{s}]");
            let e = exponent_at(&location, dto.n, coords)?;
            if e.is_zero() {
                return Err(parse_error(location, "zero exponent in a tensor slot"));
            }
            slots.push(e);
        }
        if !seen.insert(slots.clone()) {
            return Err(parse_error(format!("terms[{i}].e"), "duplicate exponent tuple"));
        }
        terms.push((c, slots));
    }
    TensorElement::from_terms(dto.n, dto.m, terms)
}

fn exponent_to_strings(e: &Exponent) -> Vec<String> {
    e.coords().iter().map(format_rational).collect()
}

pub fn bar_element_to_dto(element: &BarElement) -> ElementDto {
    ElementDto {
        n: element.n(),
        terms: element
            .terms()
            .map(|(e, c)| TermDto {
                c: format_rational(c),
                e: exponent_to_strings(e),
            })
            .collect(),
    }
}

pub fn h_element_to_dto(element: &HElement) -> ElementDto {
    ElementDto {
        n: element.n(),
        terms: element
            .terms()
            .map(|(e, c)| TermDto {
                c: format_rational(c),
                e: exponent_to_strings(e),
            })
            .collect(),
    }
}

pub fn tensor_to_dto(tensor: &TensorElement) -> TensorDto {
    TensorDto {
        n: tensor.n(),
        m: tensor.arity(),
        terms: tensor
            .terms()
            .map(|(key, c)| TensorTermDto {
                c: format_rational(c),
                e: key.iter().map(exponent_to_strings).collect(),
            })
            .collect(),
    }
}

pub fn check_report_to_dto(report: &CheckReport) -> CheckReportDto {
    CheckReportDto {
        passed: report.passed,
        defect: report.defect.as_ref().map(tensor_to_dto),
        witness: report.witness.as_ref().map(h_element_to_dto),
        description: report.description.clone(),
    }
}

fn from_json_text<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| parse_error("document", e.to_string()))
}

pub fn parse_bar_element(text: &str) -> Result<BarElement> {
    bar_element_from_dto(&from_json_text(text)?)
}

pub fn parse_h_element(text: &str) -> Result<HElement> {
    h_element_from_dto(&from_json_text(text)?)
}

/// Parse a tensor, optionally insisting on a particular arity.
pub fn parse_tensor(text: &str, expected_arity: Option<usize>) -> Result<TensorElement> {
    let tensor = tensor_from_dto(&from_json_text(text)?)?;
    if let Some(m) = expected_arity {
        tensor.check_arity(m)?;
    }
    Ok(tensor)
}

pub fn to_json_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("DTO serialization cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exponent::rational_int;
    use proptest::prelude::*;

    #[test]
    fn parses_sigma_monomial() {
        let element = parse_h_element(r#"{"n":1,"terms":[{"c":"4","e":["1","1"]}]}"#).unwrap();
        assert_eq!(
            element,
            HElement::monomial(rational_int(4), Exponent::from_ints(&[1, 1]).unwrap())
        );
    }

    #[test]
    fn parses_empty_terms_as_zero() {
        assert!(parse_h_element(r#"{"n":1,"terms":[]}"#).unwrap().is_zero());
        assert!(parse_bar_element(r#"{"n":2,"terms":[]}"#).unwrap().is_zero());
    }

    #[test]
    fn rejects_zero_coefficient() {
        let err = parse_h_element(r#"{"n":1,"terms":[{"c":"0","e":["1","0"]}]}"#).unwrap_err();
        assert!(err.to_string().contains("zero coefficient"), "{err}");
    }

    #[test]
    fn rejects_duplicate_exponent() {
        let text = r#"{"n":1,"terms":[{"c":"1","e":["1","0"]},{"c":"2","e":["1","0"]}]}"#;
        let err = parse_h_element(text).unwrap_err();
        assert!(err.to_string().contains("duplicate"), "{err}");
    }

    #[test]
    fn rejects_malformed_rational() {
        let err = parse_h_element(r#"{"n":1,"terms":[{"c":"1/0","e":["1","0"]}]}"#).unwrap_err();
        assert!(err.to_string().contains("zero denominator"), "{err}");
        let err = parse_h_element(r#"{"n":1,"terms":[{"c":"x","e":["1","0"]}]}"#).unwrap_err();
        assert!(err.to_string().contains("invalid integer"), "{err}");
    }

    #[test]
    fn rejects_wrong_coordinate_count() {
        let err = parse_h_element(r#"{"n":2,"terms":[{"c":"1","e":["1","0"]}]}"#).unwrap_err();
        assert!(err.to_string().contains("expected 4 coordinates"), "{err}");
    }

    #[test]
    fn h_rejects_zero_exponent_but_bar_accepts() {
        let text = r#"{"n":1,"terms":[{"c":"5","e":["0","0"]}]}"#;
        assert!(parse_h_element(text).is_err());
        let bar = parse_bar_element(text).unwrap();
        assert_eq!(bar.coefficient(&Exponent::zero(1)), rational_int(5));
    }

    #[test]
    fn tensor_round_trip_and_validation() {
        let text = r#"{"n":1,"m":2,"terms":[{"c":"-1","e":[["0","1"],["1","0"]]},{"c":"1","e":[["1","0"],["0","1"]]}]}"#;
        let tensor = parse_tensor(text, Some(2)).unwrap();
        assert_eq!(to_json_string(&tensor_to_dto(&tensor)), text);
        assert!(parse_tensor(text, Some(3)).is_err());

        let zero_slot = r#"{"n":1,"m":2,"terms":[{"c":"1","e":[["0","0"],["0","1"]]}]}"#;
        assert!(parse_tensor(zero_slot, None).is_err());

        let bad_arity = r#"{"n":1,"m":2,"terms":[{"c":"1","e":[["1","0"]]}]}"#;
        assert!(parse_tensor(bad_arity, None).is_err());
    }

    #[test]
    fn rejects_unknown_fields_and_zero_n() {
        assert!(parse_h_element(r#"{"n":1,"terms":[],"extra":1}"#).is_err());
        assert!(parse_h_element(r#"{"n":0,"terms":[]}"#).is_err());
        assert!(parse_tensor(r#"{"n":1,"m":0,"terms":[]}"#, None).is_err());
    }

    #[test]
    fn report_serialization_shape() {
        let report = CheckReport::pass("hypothesis met");
        let json = to_json_string(&check_report_to_dto(&report));
        assert_eq!(
            json,
            r#"{"passed":true,"defect":null,"witness":null,"description":"hypothesis met"}"#
        );
    }

    prop_compose! {
        fn arb_coord()(v in -9i64..=9, d in 1i64..=4) -> Rational {
            Rational::new(v.into(), d.into())
        }
    }

    prop_compose! {
        fn arb_exponent(n: usize)(coords in prop::collection::vec(arb_coord(), 2 * n)) -> Exponent {
            Exponent::new(coords).unwrap()
        }
    }

    prop_compose! {
        fn arb_h(n: usize)(
            terms in prop::collection::vec((arb_coord(), arb_exponent(n)), 0..=4)
        ) -> HElement {
            HElement::from_terms(n, terms).unwrap()
        }
    }

    prop_compose! {
        fn arb_tensor(n: usize, m: usize)(
            terms in prop::collection::vec(
                (arb_coord(), prop::collection::vec(arb_exponent(n), m)),
                0..=4,
            )
        ) -> TensorElement {
            TensorElement::from_terms(n, m, terms).unwrap()
        }
    }

    proptest! {
        #[test]
        fn element_round_trips_exactly(x in arb_h(2)) {
            let text = to_json_string(&h_element_to_dto(&x));
            let parsed = parse_h_element(&text).unwrap();
            prop_assert_eq!(&parsed, &x);
            prop_assert_eq!(to_json_string(&h_element_to_dto(&parsed)), text);
        }

        #[test]
        fn tensor_round_trips_exactly(v in arb_tensor(1, 3)) {
            let text = to_json_string(&tensor_to_dto(&v));
            let parsed = parse_tensor(&text, Some(3)).unwrap();
            prop_assert_eq!(&parsed, &v);
            prop_assert_eq!(to_json_string(&tensor_to_dto(&parsed)), text);
        }
    }
}
