//! Kauffman bracket polynomials, spans, Turaev-surface Euler characteristics,
//! and adequacy certificates for virtual link diagrams.
//!
//! A diagram is a rotation system of real and virtual crossings with a
//! perfect matching of ports ([`diagram`]); splicing every real crossing
//! according to a state yields closed curves whose count drives the bracket
//! state sum ([`mod@bracket`]). On top of that sit the adequacy predicates, the
//! refined span bound 4c(D) + 2(χ(D) - 2) with its equality certificates, and
//! the span-mod-4 obstruction to classicality ([`adequacy`]). Diagrams are
//! read and written in a small PD-style text format ([`codec`]), and the
//! example families used throughout the tests live in [`generators`].

pub mod adequacy;
pub mod bracket;
pub mod codec;
pub mod diagram;
pub mod generators;
pub mod laurent;
pub mod report;

pub use adequacy::{
    adequacy_report, check_theorem_43, classicality_obstruction, euler_characteristic,
    is_admissible, v_adequacy_witnesses, AdequacyMode, AdequacyReport, Classicality,
    ClassicalityVerdict, Theorem43Certificate,
};
pub use bracket::{
    bracket, bracket_with_limit, kmt_bound, max_degree_weight, min_degree_weight, span_bracket,
    span_bracket_with_limit, state_weight, BracketError, StateWeight, DEFAULT_MAX_CROSSINGS,
};
pub use codec::{parse, serialize, CodecError};
pub use diagram::{
    CrossingKind, Diagram, DiagramError, Port, RealizeChoice, Splice, SplicedCurves, State,
};
pub use generators::{GeneratorError, Handedness};
pub use laurent::{LaurentError, LaurentPoly};
pub use report::{batch_csv, InvariantReport};
