//! Euler genus and partial Petrial polynomials of ribbon graphs.
//!
//! Ribbon graphs are signed rotation systems ([`RibbonGraph`]). The crate
//! computes Euler genus by face tracing and, for bouquets, as the GF(2) rank
//! of a signed intersection matrix. The partial Petrial polynomial
//! `Σ_{A ⊆ E} z^{ε(G^{×|A})}` is available by brute force and through a rank
//! decomposition over a spanning tree. Four-term transforms and relations for
//! framed chord diagrams and signed graphs live in [`four_term`].

pub mod bouquet;
pub mod contraction;
pub mod enumerate;
pub mod error;
pub mod four_term;
pub mod gf2;
pub mod petrial;
pub mod poly;
pub mod random;
pub mod ribbon;
pub mod signed_graph;

pub use bouquet::{genus_via_rank, intersection_graph, join, signed_intersection_graph, Bouquet};
pub use contraction::{aux_bouquet, contract_edge, spanning_tree, twist_edges, SpanningTree};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use gf2::Gf2Matrix;
pub use petrial::{
    bouquet_rank_poly, modified_poly_bouquet, modified_poly_signed_graph, petrial_poly,
    petrial_poly_bruteforce, petrial_poly_rank, Limits, Method,
};
pub use poly::GenusPolynomial;
pub use ribbon::{EdgeSet, FaceTracer, Label, Occurrence, RibbonGraph, Sign};
pub use signed_graph::SignedGraph;
