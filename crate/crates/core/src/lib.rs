//! Finite covers of Davis orbicomplexes for right-angled Coxeter groups whose
//! defining graph is a cycle of generalized theta graphs.
//!
//! The crate builds covers of the singular set as edge-labeled multigraphs,
//! attaches jester hats, generates homotopic but non-homeomorphic cover pairs,
//! and audits topological rigidity over finite corpora.

pub mod cli;
pub mod counterexample;
pub mod cover;
pub mod error;
pub mod graph;
pub mod io;
pub mod orbicomplex;
pub mod rigidity;

pub use error::{Error, Result};
