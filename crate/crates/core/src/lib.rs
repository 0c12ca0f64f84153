//! Degree-sequence toolkit: graphicality, potentially H-graphic characterizations
//! for `K_{3,3}`, `K_6 - C_6`, `K_{2,3}` and `K_5 - P_4`, an exhaustive realization
//! oracle, and brute-force `sigma(H, n)` scans.

pub mod characterize;
pub mod cli;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod sequence;
pub mod sigma;
pub mod verify;

pub use characterize::{potential_verdict, ConditionId, PotentialVerdict, Theorem};
pub use error::{DomainError, GraphError, LayOffError, OracleError, ParseError};
pub use graph::{Embedding, LabeledGraph, PatternName, TargetPattern};
pub use oracle::{oracle_potential, OracleConfig, OracleMode, OracleOutcome, RealizationWitness};
pub use sequence::{DegreeSequence, GraphicMethod, SequenceStats, Theorem22};
pub use sigma::{SigmaMethod, SigmaResult};
pub use verify::{verify_range, VerificationReport};
