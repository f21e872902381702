//! Generalized Serre conditions `(S_ℓ^j)` for Stanley-Reisner rings.
//!
//! The crate decides `(S_ℓ^j)` for `K[Δ]` over a prime field by several independent routes
//! (depth of links, vanishing of link homology, connectivity of facet graphs, graded Betti numbers
//! of the Alexander dual) and ships the harness that checks them against each other.

pub mod complex;
pub mod error;
pub mod format;
pub mod homology;
pub mod invariants;
pub mod linalg;
pub mod monomial;
pub mod outcome;
pub mod report;
pub mod serre;
pub mod verify;

pub use complex::{ComplexKind, Face, FacetGraph, SimplicialComplex, MAX_VERTICES};
pub use error::{Error, Result};
pub use format::{parse_facets, parse_ideal, parse_input, write_facets, write_ideal, Input};
pub use homology::{reduced_betti, reduced_betti_all, BettiVector};
pub use invariants::{depth, graded_betti, is_cm, BettiTable};
pub use linalg::{rank, ExactMatrix, PrimeField};
pub use monomial::{Monomial, MonomialIdeal, SquarefreeIdeal};
pub use outcome::Outcome;
pub use serre::{Criterion, SerreProfile, SerreVerdict, Witness};
