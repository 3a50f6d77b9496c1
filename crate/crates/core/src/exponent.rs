//! Exact arithmetic on exponents of the group algebra.
//!
//! An exponent is a point of the additive subgroup `Γ ⊂ ℚ^{2n}`, stored in
//! block order: the unbarred coordinates `α_1, …, α_n` first, then the
//! conjugates `α_{1̄}, …, α_{n̄}` (the conjugate index is `p̄ = n + p`).
//! The grading map sends `α` to the length-`n` vector with entries
//! `α_{p̄} − α_p`, so that `t^{σ_p}` acts on a monomial of grade `μ` with
//! eigenvalue `μ_p`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The scalar field: exact rationals with arbitrary-precision integers.
pub type Rational = BigRational;

/// Parse a rational written as `p/q` or `p` (canonical reduced form is not
/// required on input; output of [`format_rational`] is always canonical).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let malformed = |msg: &str| Error::Parse {
        location: format!("rational \"{text}\""),
        message: msg.to_string(),
    };
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer: BigInt = numer.parse().map_err(|_| malformed("invalid integer"))?;
    let denom: BigInt = match denom {
        Some(d) => d.parse().map_err(|_| malformed("invalid denominator"))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(malformed("zero denominator"));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical text form: `p/q` with positive reduced denominator, or `p` when
/// the denominator is one.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Rational from an integer, for building test and search monomials.
pub fn rational_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// A multi-index `α ∈ ℚ^{2n}`, the exponent of a monomial `t^α`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent {
    coords: Vec<Rational>,
}

impl Exponent {
    /// Wrap a coordinate vector; the length must be even (pairs `p`, `p̄`).
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.len() % 2 != 0 || coords.is_empty() {
            return Err(Error::OddLength { len: coords.len() });
        }
        Ok(Self { coords })
    }

    /// Exponent from integer coordinates, block order.
    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| rational_int(c)).collect())
    }

    /// The zero element of Γ (exponent of `t^0`).
    pub fn zero(n: usize) -> Self {
        Self {
            coords: vec![Rational::zero(); 2 * n],
        }
    }

    /// The unit vector `ε_i` for `1 ≤ i ≤ 2n` (indices above `n` are the
    /// conjugates: `ε_{p̄} = ε_{n+p}`).
    pub fn eps(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > 2 * n {
            return Err(Error::IndexOutOfRange { p: i, n: 2 * n });
        }
        let mut coords = vec![Rational::zero(); 2 * n];
        coords[i - 1] = Rational::one();
        Ok(Self { coords })
    }

    /// `σ_p = ε_p + ε_{p̄}` for `1 ≤ p ≤ n`.
    pub fn sigma(n: usize, p: usize) -> Result<Self> {
        if p == 0 || p > n {
            return Err(Error::IndexOutOfRange { p, n });
        }
        let mut coords = vec![Rational::zero(); 2 * n];
        coords[p - 1] = Rational::one();
        coords[n + p - 1] = Rational::one();
        Ok(Self { coords })
    }

    /// Number of conjugate pairs (the ambient `n`).
    pub fn pairs(&self) -> usize {
        self.coords.len() / 2
    }

    /// Total coordinate count `2n`.
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// `α_p` for `1 ≤ p ≤ n`.
    pub fn unbarred(&self, p: usize) -> &Rational {
        &self.coords[p - 1]
    }

    /// `α_{p̄}` for `1 ≤ p ≤ n`.
    pub fn barred(&self, p: usize) -> &Rational {
        &self.coords[self.pairs() + p - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn check_same_len(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// Componentwise sum (the group operation of Γ).
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_len(other)?;
        Ok(Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    /// Integer multiple `k·α`.
    pub fn scale(&self, k: i64) -> Self {
        let factor = rational_int(k);
        Self {
            coords: self.coords.iter().map(|c| c * &factor).collect(),
        }
    }

    /// The grading map: component `p` is `α_{p̄} − α_p`, chosen so that
    /// `[t^{σ_p}, t^α] = grade(α)_p · t^α`.
    pub fn grade(&self) -> Grade {
        let n = self.pairs();
        Grade(
            (1..=n)
                .map(|p| self.barred(p) - self.unbarred(p))
                .collect(),
        )
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An element `μ` of the grading group `G = π(Γ) ⊂ ℚ^n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Vec<Rational>);

impl Grade {
    pub fn new(components: Vec<Rational>) -> Self {
        Self(components)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![Rational::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn components(&self) -> &[Rational] {
        &self.0
    }

    /// `μ_p` for `1 ≤ p ≤ n`.
    pub fn component(&self, p: usize) -> &Rational {
        &self.0[p - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Self(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Ambient parameters: the pair count `n` and a generating set for Γ.
///
/// Γ itself is represented extensionally — any vector of ℚ^{2n} is accepted
/// as an [`Exponent`] — so the generators only feed the nondegeneracy check
/// and random-element generation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaSpec {
    n: usize,
    generators: Vec<Exponent>,
}

impl GammaSpec {
    /// Γ generated by the `2n` standard unit vectors.
    pub fn standard(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroAmbient);
        }
        let generators = (1..=2 * n)
            .map(|i| Exponent::eps(n, i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, generators })
    }

    /// Γ generated by an explicit list; every generator must have `2n`
    /// coordinates. Nondegeneracy is checked separately.
    pub fn with_generators(n: usize, generators: Vec<Exponent>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroAmbient);
        }
        for g in &generators {
            if g.len() != 2 * n {
                return Err(Error::DimensionMismatch {
                    expected: 2 * n,
                    found: g.len(),
                });
            }
        }
        Ok(Self { n, generators })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn sigma(&self, p: usize) -> Result<Exponent> {
        Exponent::sigma(self.n, p)
    }

    pub fn eps(&self, i: usize) -> Result<Exponent> {
        Exponent::eps(self.n, i)
    }

    /// True iff the generators span ℚ^{2n}, i.e. exact Gaussian elimination
    /// finds rank `2n`.
    pub fn is_nondegenerate(&self) -> bool {
        rank(&self.generators) == 2 * self.n
    }
}

/// Rank of a list of vectors over ℚ by fraction-free-enough elimination
/// (exact rational pivoting; row echelon without back substitution).
pub fn rank(rows: &[Exponent]) -> usize {
    let mut matrix: Vec<Vec<Rational>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..matrix.len()).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(rank, pivot_row);
        let pivot = matrix[rank][col].clone();
        for r in rank + 1..matrix.len() {
            if matrix[r][col].is_zero() {
                continue;
            }
            let factor = &matrix[r][col] / &pivot;
            for c in col..cols {
                let delta = &factor * &matrix[rank][c];
                matrix[r][c] = &matrix[r][c] - &delta;
            }
        }
        rank += 1;
        if rank == matrix.len() {
            break;
        }
    }
    rank
}

/// Largest coordinate range over a set of exponents, rounded up to an
/// integer: `ceil(max coordinate − min coordinate)`, or 0 when empty.
/// Used to size the `k` bound of the bounded lemma harnesses.
pub fn coordinate_spread<'a>(exponents: impl IntoIterator<Item = &'a Exponent>) -> u32 {
    let mut min: Option<Rational> = None;
    let mut max: Option<Rational> = None;
    for e in exponents {
        for c in e.coords() {
            if min.as_ref().is_none_or(|m| c < m) {
                min = Some(c.clone());
            }
            if max.as_ref().is_none_or(|m| c > m) {
                max = Some(c.clone());
            }
        }
    }
    match (min, max) {
        (Some(min), Some(max)) => {
            let spread = (max - min).ceil().to_integer();
            u32::try_from(spread.magnitude().clone()).unwrap_or(u32::MAX)
        }
        _ => 0,
    }
}
