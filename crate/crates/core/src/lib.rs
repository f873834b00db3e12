//! Minimum embeddings of tournaments as complex spherical 2-codes.
//!
//! A tournament `T` on `n` vertices is representable in the unit sphere of
//! `ℂ^d` when its vertices map to unit vectors whose pairwise inner products
//! are `α` along arcs and `ᾱ` against them. This crate computes the least such
//! `d` from the spectrum and main angles of the Seidel matrix
//! `S = √−1 (A − Aᵀ)`, builds explicit embeddings, and certifies the extremal
//! codes (doubly regular tournaments, skew Hadamard matrices and the
//! block-form case) together with the tight-code counts that follow from them.
//!
//! ```
//! use tourney_codes::{representation::analyze, tournament::paley_tournament, Tolerances};
//!
//! let p7 = paley_tournament(7).unwrap();
//! let report = analyze(&p7, &Tolerances::default()).unwrap();
//! assert_eq!(report.rep_dim, 3);
//! ```

pub mod codes;
pub mod error;
pub mod representation;
pub mod spectral;
pub mod tolerance;
pub mod tournament;

pub use error::{Error, Result};
pub use tolerance::Tolerances;
pub use tournament::Tournament;
