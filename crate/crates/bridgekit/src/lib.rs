//! A toolkit for knots presented by Dowker-Thistlethwaite codes.
//!
//! The crate covers the whole pipeline from a raw code to verified facts
//! about the diagram it describes:
//!
//! - [`dt`]: parsing and validation, over/under sequences, bridge counts,
//!   and a canonical form under relabeling.
//! - [`realize`]: deciding spherical realizability and extracting a planar
//!   diagram with crossing signs and PD notation.
//! - [`invariants`]: exact Alexander polynomials by Fox calculus, knot
//!   determinants, the Kauffman bracket, and the Jones polynomial.
//! - [`tangles`]: rational tangles from continued fractions, two-bridge
//!   knots, Montesinos diagrams, and Schubert-style fraction equivalence.
//! - [`corpus`]: a bundled catalog of minimal bridge presentations for the
//!   552 prime 11-crossing knots, with machine verification at several
//!   levels of scrutiny.

pub mod corpus;
pub mod dt;
pub mod invariants;
pub mod poly;
pub mod realize;
pub mod tangles;

pub use dt::{parse_dt, DtCode, DtError, OverUnder, OverUnderSequence, Pairing};
pub use poly::LaurentPolynomial;
pub use invariants::{
    alexander, alexander_with, jones_polynomial, jones_polynomial_with_guard,
    kauffman_bracket, kauffman_bracket_with_guard, same_alexander, AlexanderResult, DetStrategy,
    InvariantError,
};
pub use realize::{is_realizable, realize, Crossing, PlanarDiagram, RealizabilityReport};
pub use corpus::{
    builtin_corpus, load_corpus, montesinos_table, verify_all, verify_entry, CorpusEntry,
    CorpusError, FormatError, MontesinosTableEntry, ValidationError, VerificationReport,
    VerifyLevel, FOUR_BRIDGE, TWO_BRIDGE,
};
pub use tangles::{
    cf_to_fraction, fraction_to_cf, montesinos_bridge_index, montesinos_diagram, rational_knot,
    two_bridge_equivalent, two_bridge_fraction, ContinuedFraction, Fraction, MontesinosForm,
    TangleError,
};
