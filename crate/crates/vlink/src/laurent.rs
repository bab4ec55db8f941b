//! Exact integer Laurent polynomials in the bracket variable `A`.
//!
//! All arithmetic is checked: coefficient or exponent overflow is reported as
//! an error, never wrapped. Values are kept in canonical form (no stored zero
//! coefficients), so structural equality is polynomial equality.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("integer overflow in Laurent polynomial arithmetic")]
    Overflow,
    #[error("degree of the zero polynomial is undefined")]
    DegreeOfZero,
}

/// An element of Z[A, A^-1], stored as exponent -> nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// Single-term polynomial `coeff * A^exp`; the zero polynomial if `coeff == 0`.
    pub fn monomial(coeff: i64, exp: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        Self { coeffs }
    }

    /// Canonicalizing constructor: merges duplicate exponents, drops zeros.
    pub fn from_terms<I>(terms: I) -> Result<Self, LaurentError>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut coeffs = BTreeMap::new();
        for (exp, coeff) in terms {
            let entry = coeffs.entry(exp).or_insert(0i64);
            *entry = entry.checked_add(coeff).ok_or(LaurentError::Overflow)?;
        }
        coeffs.retain(|_, c| *c != 0);
        Ok(Self { coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, other: &Self) -> Result<Self, LaurentError> {
        let mut coeffs = self.coeffs.clone();
        for (&exp, &coeff) in &other.coeffs {
            let entry = coeffs.entry(exp).or_insert(0);
            *entry = entry.checked_add(coeff).ok_or(LaurentError::Overflow)?;
        }
        coeffs.retain(|_, c| *c != 0);
        Ok(Self { coeffs })
    }

    pub fn mul(&self, other: &Self) -> Result<Self, LaurentError> {
        let mut coeffs: BTreeMap<i64, i64> = BTreeMap::new();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &other.coeffs {
                let exp = e1.checked_add(e2).ok_or(LaurentError::Overflow)?;
                let prod = c1.checked_mul(c2).ok_or(LaurentError::Overflow)?;
                let entry = coeffs.entry(exp).or_insert(0);
                *entry = entry.checked_add(prod).ok_or(LaurentError::Overflow)?;
            }
        }
        coeffs.retain(|_, c| *c != 0);
        Ok(Self { coeffs })
    }

    pub fn neg(&self) -> Result<Self, LaurentError> {
        let mut coeffs = BTreeMap::new();
        for (&exp, &coeff) in &self.coeffs {
            coeffs.insert(exp, coeff.checked_neg().ok_or(LaurentError::Overflow)?);
        }
        Ok(Self { coeffs })
    }

    pub fn pow(&self, k: u32) -> Result<Self, LaurentError> {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn max_degree(&self) -> Result<i64, LaurentError> {
        self.coeffs
            .keys()
            .next_back()
            .copied()
            .ok_or(LaurentError::DegreeOfZero)
    }

    pub fn min_degree(&self) -> Result<i64, LaurentError> {
        self.coeffs
            .keys()
            .next()
            .copied()
            .ok_or(LaurentError::DegreeOfZero)
    }

    /// `max_degree - min_degree`; errors on the zero polynomial.
    pub fn span(&self) -> Result<u64, LaurentError> {
        let hi = self.max_degree()?;
        let lo = self.min_degree()?;
        Ok(hi.abs_diff(lo))
    }
}

/// Serialized as the ascending list of `[exponent, coefficient]` pairs.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for (&exp, &coeff) in &self.coeffs {
            seq.serialize_element(&(exp, coeff))?;
        }
        seq.end()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&exp, &coeff)) in self.coeffs.iter().rev().enumerate() {
            if i == 0 {
                if coeff < 0 {
                    write!(f, "-")?;
                }
            } else if coeff < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = coeff.unsigned_abs();
            if mag != 1 || exp == 0 {
                write!(f, "{mag}")?;
            }
            if exp == 1 {
                write!(f, "A")?;
            } else if exp != 0 {
                write!(f, "A^{exp}")?;
            }
        }
        Ok(())
    }
}
