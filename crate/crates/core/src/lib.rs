//! Certified dichotomy for graphs with bounded clique number: every graph
//! either has a large stable set or contains an induced subdivision of `K_t`
//! whose paths have lengths between 3 and `(log n)^2`.
//!
//! [`extract`] runs the constructive argument and returns one of the two
//! certificates; [`certificates`] checks them without trusting the solver.

pub mod certificates;
pub mod cli;
pub mod extractor;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod search;
pub mod vertex_set;

pub use certificates::{
    verify_stable, verify_subdivision, Certificate, StableSetCertificate, SubdivisionCertificate,
};
pub use extractor::{extract, Certified, Mode, Outcome, Params};
pub use graph::{Graph, GraphError, Path};
pub use vertex_set::VertexSet;
