//! Geodesic growth of right-angled Coxeter groups defined by trees and
//! triangle-free graphs.
//!
//! The geodesic language is recognised by a finite automaton whose states are
//! the cliques of the defining graph; growth series come out of its transfer
//! matrix as reduced rational functions.

pub mod automaton;
pub mod canon;
pub mod cli;
pub mod error;
pub mod graph;
pub mod growth;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod spectral;
pub mod trees;
pub mod verify;

pub use automaton::GeodesicAutomaton;
pub use error::{Error, Result};
pub use graph::{parse_graph, RootedTree, SimpleGraph};
pub use growth::{geodesic_growth_series, spherical_growth_series, GrowthContext, SeriesMethod};
pub use poly::IntPolynomial;
pub use rational::RationalFunction;
