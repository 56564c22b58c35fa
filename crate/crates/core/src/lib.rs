//! Strong chordality of digraphs.
//!
//! A digraph is strongly chordal when its adjacency matrix has a symmetric
//! Γ-free ordering (a *strong ordering*). This crate verifies and searches for
//! such orderings, catalogues minimal obstructions, recognises strong
//! chordality with certificates for tournaments, bipartite tournaments,
//! tournaments missing one arc, reflexive multipartite tournaments and balanced
//! digraphs, and solves domination on strongly chordal digraphs.

pub mod bits;
pub mod catalog;
pub mod digraph;
pub mod domination;
pub mod error;
pub mod gamma;
pub mod io;
pub mod recognize;
pub mod suites;

pub use bits::BitMatrix;
pub use digraph::{Bigraph, Digraph, Ordering};
pub use error::{Error, Result};
