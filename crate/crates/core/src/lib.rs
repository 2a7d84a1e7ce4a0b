//! Blowup Ramsey toolkit: exact arrowing and multiplicity search on small
//! graphs, closed-form bound arithmetic, local-lemma certificates, canonical
//! blowup extraction and seeded random-graph experiments.

pub mod bounds;
pub mod colouring;
pub mod error;
pub mod extract;
pub mod graph;
pub mod random_lab;
pub mod search;
mod ser;

pub use colouring::{EdgeColouring, SearchOutcome, Verdict};
pub use error::{Error, ParseError, Result};
pub use graph::{BlowupGraph, Graph};
pub use search::SearchConfig;
