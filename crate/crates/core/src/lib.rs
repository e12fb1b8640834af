//! Combinatorics of Hirzebruch–Jung continued fractions, Riemenschneider dot
//! diagrams, Wahl chains, δ-half chains and mk1A flip sequences.
//!
//! Every routine works on exact integers and produces data that can be
//! re-checked independently: flips are computed both by the closed-form
//! formula and by literal blow-downs, and the two are compared.

pub mod chain;
pub mod cli;
pub mod dot;
pub mod error;
pub mod flips;
pub mod verify;
pub mod wahl;

pub use chain::{
    blow_down, blow_up, dual_chain, evaluate, expand, reduce_zero, reverse, zero_chain, Continuant, GeneralChain,
    HjChain, Rational, ReductionTrace,
};
pub use dot::{delta_half, delta_position, dual_from_diagram, is_symmetric, DeltaPosition, DotDiagram};
pub use error::{Error, Result};
pub use flips::{
    bn1_reduction, contraction_invariant, flip_last, flip_last_by_diagram, flip_oracle_step, flip_sequence,
    flip_sequence_with, full_configuration, ConfigurationChain, FlipOutcome, FlipResult, FlipStep, FlipTrace, Mk1aData,
    Role,
};
pub use wahl::{bn1_kind, generate, is_class_w, wahl_chain, NeighborhoodKind, WahlParams};
