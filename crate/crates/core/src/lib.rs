//! Exact twin-width computation: graph types and generators, trigraph
//! contraction semantics, elimination sequences, modular-decomposition
//! preprocessing, combinatorial bounds, and CNF encodings of the
//! bounded-twin-width decision problem.
//!
//! This crate is `no_std` (with `alloc`) and holds everything that does not
//! need a process or a file system. The `tww` companion crate adds the
//! external SAT solver driver, the search pipeline and the CLI.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod bounds;
pub mod cnf;
pub mod corpus;
pub mod elimination;
pub mod encodings;
pub mod gf;
pub mod graph;
pub mod modular;
pub mod oracle;
pub mod trigraph;
mod vset;

pub use graph::Graph;
pub use vset::VertexSet;
