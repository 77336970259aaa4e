//! Two-jump circulant graphs: structural classification of `C(Z_n, {k1, k2})`
//! and explicit optimal matching book embeddings of `C(n, k) = C(Z_n, {1, k})`.
//!
//! Vertices are labeled `1..=n`; every reduction modulo `n` maps `0` to `n`.
//!
//! The crate is organized bottom-up:
//!
//! * [`numth`]: gcd, linear Diophantine solving, the progression position map
//!   and the remainder-reduction trace used to split the jump cycle.
//! * [`graph`]: circulant graph construction, degree and bipartiteness facts,
//!   cycle decomposition and the matching-book-thickness prediction.
//! * [`classify`]: the four-family classification of two-jump circulants with
//!   checkable isomorphism certificates.
//! * [`partition`]: the ordered vertex sets `P_1..P_t` for coprime `(n, k)`.
//! * [`embed`]: layout + page assignment for every `C(n, k)`.
//! * [`coloring`]: exact and local-search coloring of edge conflict graphs.
//! * [`verify`]: embedding checker and the exhaustive small-instance oracle.
//! * [`document`], [`render`], [`sweep`]: JSON interchange, SVG/DOT output and
//!   the sweep driver used by the CLI.

pub mod classify;
pub mod coloring;
pub mod document;
pub mod embed;
mod error;
pub mod graph;
pub mod numth;
pub mod partition;
pub mod render;
pub mod sweep;
pub mod verify;

pub use classify::{classify, Classification, Family, IsoCertificate};
pub use document::EmbeddingDocument;
pub use embed::{embed, BookEmbedding, Layout, Route};
pub use error::{Error, Result};
pub use graph::{CirculantSpec, Edge};
pub use partition::{build_partition, OrderedPartition, Scheme};
pub use verify::{brute_force_mbt, verify_embedding, VerificationReport};
