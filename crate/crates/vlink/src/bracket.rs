//! The Kauffman bracket state sum and its degree bookkeeping.
//!
//! The bracket is evaluated by brute force over all 2^c states — the
//! enumeration is the definition, and it doubles as the oracle for every
//! span identity checked in the tests. A configurable crossing limit guards
//! the exponential blowup.

use thiserror::Error;

use crate::adequacy::euler_characteristic;
use crate::diagram::{Diagram, DiagramError, Splice, State};
use crate::laurent::{LaurentError, LaurentPoly};

/// Default cap on c(D) for state-sum evaluation.
pub const DEFAULT_MAX_CROSSINGS: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketError {
    #[error("diagram has {crossings} real crossings, over the state-sum limit of {limit}")]
    CrossingLimit { crossings: usize, limit: u32 },
    #[error(transparent)]
    Arithmetic(#[from] LaurentError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// The weight ⟨D/s⟩ of one state together with the quantities that define it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateWeight {
    /// α(s): crossings spliced A.
    pub alpha: usize,
    /// β(s): crossings spliced B.
    pub beta: usize,
    /// ♯D(s): closed curves after splicing.
    pub components: usize,
    /// A^(α-β) · (-A² - A^-2)^(♯D(s)-1).
    pub weight: LaurentPoly,
}

/// -A^2 - A^-2, the value of a closed curve.
fn delta() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)]).expect("small constant")
}

fn weight_poly(alpha: usize, beta: usize, components: usize) -> Result<LaurentPoly, LaurentError> {
    let lead = LaurentPoly::monomial(1, alpha as i64 - beta as i64);
    lead.mul(&delta().pow(components as u32 - 1)?)
}

/// ⟨D/s⟩ together with α, β and the component count.
pub fn state_weight(d: &Diagram, s: &State) -> Result<StateWeight, BracketError> {
    let components = d.splice(s)?.component_count();
    let (alpha, beta) = (s.alpha(), s.beta());
    Ok(StateWeight { alpha, beta, components, weight: weight_poly(alpha, beta, components)? })
}

/// Top degree of ⟨D/s⟩ from the degree formula (α-β) + 2(♯D(s)-1), not from
/// the polynomial.
pub fn max_degree_weight(d: &Diagram, s: &State) -> Result<i64, BracketError> {
    let components = d.splice(s)?.component_count() as i64;
    Ok(s.alpha() as i64 - s.beta() as i64 + 2 * (components - 1))
}

/// Bottom degree of ⟨D/s⟩ from the formula (α-β) - 2(♯D(s)-1).
pub fn min_degree_weight(d: &Diagram, s: &State) -> Result<i64, BracketError> {
    let components = d.splice(s)?.component_count() as i64;
    Ok(s.alpha() as i64 - s.beta() as i64 - 2 * (components - 1))
}

/// ⟨D⟩ = Σ_s ⟨D/s⟩ over all 2^c states, with the default crossing limit.
pub fn bracket(d: &Diagram) -> Result<LaurentPoly, BracketError> {
    bracket_with_limit(d, DEFAULT_MAX_CROSSINGS)
}

/// ⟨D⟩ with an explicit crossing limit.
pub fn bracket_with_limit(d: &Diagram, limit: u32) -> Result<LaurentPoly, BracketError> {
    // the state space must fit in a u64 mask no matter what limit is asked for
    let limit = limit.min(62);
    let c = d.real_crossing_count();
    if c as u64 > limit as u64 {
        return Err(BracketError::CrossingLimit { crossings: c, limit });
    }

    // Powers of delta are shared across states; grow the table on demand.
    let mut delta_pows: Vec<LaurentPoly> = vec![LaurentPoly::one()];
    let mut sum = LaurentPoly::zero();
    // States in lexicographic order over real crossing ids with A < B: bit i
    // of the mask is the splice at the i-th real crossing, 0 = A.
    for mask in 0u64..(1u64 << c) {
        let components = d.component_count_by_index(|i| {
            if mask >> i & 1 == 0 {
                Splice::A
            } else {
                Splice::B
            }
        });
        let beta = mask.count_ones() as usize;
        let alpha = c - beta;
        while delta_pows.len() < components {
            let next = delta_pows.last().expect("nonempty").mul(&delta())?;
            delta_pows.push(next);
        }
        let term = LaurentPoly::monomial(1, alpha as i64 - beta as i64)
            .mul(&delta_pows[components - 1])?;
        sum = sum.add(&term)?;
    }
    Ok(sum)
}

/// span⟨D⟩.
pub fn span_bracket(d: &Diagram) -> Result<u64, BracketError> {
    span_bracket_with_limit(d, DEFAULT_MAX_CROSSINGS)
}

pub fn span_bracket_with_limit(d: &Diagram, limit: u32) -> Result<u64, BracketError> {
    Ok(bracket_with_limit(d, limit)?.span()?)
}

/// The refined KMT bound 4c(D) + 2(χ(D) - 2); span⟨D⟩ never exceeds it.
pub fn kmt_bound(d: &Diagram) -> i64 {
    4 * d.real_crossing_count() as i64 + 2 * (euler_characteristic(d) - 2)
}
