//! Kernelization, exact decision, certificate construction and approximation
//! for (c,k)-Load Coloring: color the vertices of a graph with `c` colors so
//! that every color class spans at least `k` edges.
//!
//! Every "yes" produced here carries a [`Coloring`] that [`verify_coloring`]
//! accepts on the original graph, and every reduction is recorded in a
//! [`ReductionTrace`] that can be replayed and used to lift colorings back.

pub mod bounds;
pub mod dense;
pub mod dimacs;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod par;
pub mod pipeline;
pub mod reduction;
pub mod star_cover;
pub mod two_color;

pub use error::{CertificateError, Error, ParseError, Result};
pub use graph::{verify_coloring, Coloring, Component, Graph, Instance, Verdict};
pub use reduction::{find_obstacle, reduce, Obstacle, ReductionTrace};
pub use pipeline::{approx_general, approx_two, decide, kernelize, Approx, Outcome, Provenance};
