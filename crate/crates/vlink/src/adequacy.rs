//! Adequacy predicates, the Turaev-surface Euler characteristic, admissibility
//! of connecting arcs, span-equality certificates, and the classicality
//! obstruction.
//!
//! Admissibility is checked purely combinatorially: the connecting arc at a
//! real crossing p in D(s) is admissible exactly when flipping the splice at p
//! does not increase the curve count.

use serde::Serialize;

use crate::bracket::{span_bracket_with_limit, BracketError, DEFAULT_MAX_CROSSINGS};
use crate::diagram::{Diagram, DiagramError, Splice, State};

/// χ(D), the Euler characteristic of the Turaev surface, computed from
/// ♯D(s_A) + ♯D(s_B) = χ(D) + c(D).
pub fn euler_characteristic(d: &Diagram) -> i64 {
    let a = d.splice(&d.state_all_a()).expect("s_A is valid").component_count();
    let b = d.splice(&d.state_all_b()).expect("s_B is valid").component_count();
    a as i64 + b as i64 - d.real_crossing_count() as i64
}

/// Whether the connecting arc at real crossing `p` in D(s) is admissible:
/// ♯D(s with p flipped) ≤ ♯D(s).
pub fn is_admissible(d: &Diagram, s: &State, p: usize) -> Result<bool, DiagramError> {
    let before = d.splice(s)?.component_count();
    let after = d.splice(&s.flip(p)?)?.component_count();
    Ok(after <= before)
}

/// Per-diagram adequacy summary.
///
/// `a_adequate` demands a strict drop in the curve count for every single
/// flip away from s_A; `pseudo_adequate` only forbids an increase (on both
/// the A and B sides). The failing lists name the crossings violating the
/// strict test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdequacyReport {
    pub a_adequate: bool,
    pub b_adequate: bool,
    pub adequate: bool,
    pub pseudo_adequate: bool,
    #[serde(rename = "failing_crossings_A")]
    pub failing_crossings_a: Vec<usize>,
    #[serde(rename = "failing_crossings_B")]
    pub failing_crossings_b: Vec<usize>,
}

pub fn adequacy_report(d: &Diagram) -> AdequacyReport {
    let survey = |base: &State| {
        let reference = d.splice(base).expect("constant state is valid").component_count();
        let mut failing = Vec::new();
        let mut pseudo = true;
        for &p in d.real_crossing_ids() {
            let flipped = d
                .splice(&base.flip(p).expect("p is real"))
                .expect("flipped state is valid")
                .component_count();
            if flipped >= reference {
                failing.push(p);
            }
            if flipped > reference {
                pseudo = false;
            }
        }
        (failing, pseudo)
    };
    let (failing_a, pseudo_a) = survey(&d.state_all_a());
    let (failing_b, pseudo_b) = survey(&d.state_all_b());
    let a_adequate = failing_a.is_empty();
    let b_adequate = failing_b.is_empty();
    AdequacyReport {
        a_adequate,
        b_adequate,
        adequate: a_adequate && b_adequate,
        pseudo_adequate: pseudo_a && pseudo_b,
        failing_crossings_a: failing_a,
        failing_crossings_b: failing_b,
    }
}

/// Which adequacy predicate a v-adequacy witness must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AdequacyMode {
    Adequate,
    Pseudo,
}

/// All single realizations of a virtual crossing whose result satisfies the
/// mode's predicate. An empty list means no single realization exhibits D as
/// v-(pseudo-)adequate.
pub fn v_adequacy_witnesses(
    d: &Diagram,
    mode: AdequacyMode,
) -> Vec<(usize, crate::diagram::RealizeChoice)> {
    use crate::diagram::RealizeChoice::{Strand02Under, Strand13Under};
    let mut witnesses = Vec::new();
    for v in d.virtual_crossing_ids() {
        for choice in [Strand02Under, Strand13Under] {
            let realized = d.realize(v, choice).expect("v is virtual");
            let report = adequacy_report(&realized);
            let passes = match mode {
                AdequacyMode::Adequate => report.adequate,
                AdequacyMode::Pseudo => report.pseudo_adequate,
            };
            if passes {
                witnesses.push((v, choice));
            }
        }
    }
    witnesses
}

/// One admissibility check recorded while certifying the span equality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdmissibilityCheck {
    /// Which constant state the arc lives in (A for s_A, B for s_B).
    pub state: Splice,
    pub crossing: usize,
    pub passed: bool,
}

/// Certificate for the span equality on D = virtualize(D', p): D' must be
/// pseudo-adequate, and every connecting arc of D(s_A) (resp. D(s_B)) with
/// both endpoints on a component through the new virtual crossing must be
/// admissible. A valid certificate entails span⟨D⟩ = 4c(D) + 2(χ(D)-2).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem43Certificate {
    /// D', serialized in the `.vlk` text format.
    #[serde(serialize_with = "serialize_diagram")]
    pub source: Diagram,
    pub virtualized_crossing: usize,
    pub pseudo_adequate_source: bool,
    pub admissibility_checks: Vec<AdmissibilityCheck>,
    pub valid: bool,
}

fn serialize_diagram<S: serde::Serializer>(d: &Diagram, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_str(&crate::codec::serialize(d))
}

pub fn check_theorem_43(dprime: &Diagram, p: usize) -> Result<Theorem43Certificate, DiagramError> {
    if dprime.kind(p) != Some(crate::diagram::CrossingKind::Real) {
        return Err(DiagramError::NotReal(p));
    }
    let pseudo_adequate_source = adequacy_report(dprime).pseudo_adequate;
    let d = dprime.virtualize(p)?;

    let mut admissibility_checks = Vec::new();
    for (tag, state) in [(Splice::A, d.state_all_a()), (Splice::B, d.state_all_b())] {
        // Components of D(s) through vp; when the two strands lie on two
        // different components, the condition is enforced for arcs on either.
        let incident = d.incident_components(&state, p)?;
        for &q in d.real_crossing_ids() {
            let (x, y) = d.connecting_arc_components(&state, q)?;
            if x == y && incident.contains(&x) {
                admissibility_checks.push(AdmissibilityCheck {
                    state: tag,
                    crossing: q,
                    passed: is_admissible(&d, &state, q)?,
                });
            }
        }
    }

    let valid = pseudo_adequate_source && admissibility_checks.iter().all(|c| c.passed);
    Ok(Theorem43Certificate {
        source: dprime.clone(),
        virtualized_crossing: p,
        pseudo_adequate_source,
        admissibility_checks,
        valid,
    })
}

/// The span-mod-4 verdict. `NotClassical` is a proof; divisibility by 4 only
/// yields `Inconclusive`, never a classicality claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Classicality {
    NotClassical,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassicalityVerdict {
    pub span: u64,
    pub verdict: Classicality,
}

pub fn classicality_obstruction(d: &Diagram) -> Result<ClassicalityVerdict, BracketError> {
    classicality_obstruction_with_limit(d, DEFAULT_MAX_CROSSINGS)
}

pub fn classicality_obstruction_with_limit(
    d: &Diagram,
    limit: u32,
) -> Result<ClassicalityVerdict, BracketError> {
    let span = span_bracket_with_limit(d, limit)?;
    let verdict = if span % 4 != 0 {
        Classicality::NotClassical
    } else {
        Classicality::Inconclusive
    };
    Ok(ClassicalityVerdict { span, verdict })
}
