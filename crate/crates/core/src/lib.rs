//! Distant graphs of projective lines over finite rings.
//!
//! The crate builds the distant graph `P(R)` for finite rings described
//! structurally (direct sums of local rings and matrix rings over finite
//! fields, optionally blown up by a radical), counts cliques in those
//! graphs exactly, and evaluates the closed-form counting polynomials in
//! `q` so the two can be compared.
//!
//! Module map:
//!
//! * [`field`]: `GF(q)` arithmetic and dense matrices over it.
//! * [`graph`]: bitset graphs, the loop graph `T`, tensor products,
//!   blow-ups and the clique census engine.
//! * [`rings`]: ring specs and the constructions of their distant graphs.
//! * [`poly`] and [`formulas`]: exact integer polynomials in `q` and the
//!   counting formulas.
//! * [`partitions`]: partitions, parity counts and truncated q-series.
//! * [`identities`]: the lacunary binomial congruence.
//! * [`fixtures`]: explicit matrix cliques in `GL_2(3)` and `GL_2(5)`.
//! * [`suite`]: the named verification suites used by the CLI.

pub mod error;
pub mod field;
pub mod fixtures;
pub mod formulas;
pub mod graph;
pub mod identities;
pub mod partitions;
pub mod poly;
pub mod rings;
pub mod suite;

pub use error::{Error, Result};
pub use field::{GaloisField, Matrix, PrimePower};
pub use graph::{CensusOptions, CliqueCensus, Graph, Limits};
pub use poly::IntPoly;
pub use rings::{RingSpec, Summand};
