//! Spectral extremal search over trees with a prescribed matching number.
//!
//! The crate is organised bottom-up:
//!
//! - [`graph`]: simple graphs, matchings, tree distances and canonical forms.
//! - [`spectral`]: exact characteristic polynomials and certified spectral radii.
//! - [`structure`]: connected maximal matchings, dominating control sets and
//!   quasi-adjacency graphs.
//! - [`families`]: the parameterised tree families and predicted minimizers.
//! - [`search`]: exhaustive enumeration, extremal search and transformations.

pub mod error;
pub mod families;
pub mod graph;
pub mod search;
pub mod spectral;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{CanonicalForm, Edge, Graph, Matching};
