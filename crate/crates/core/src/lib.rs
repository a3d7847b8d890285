//! Exact computation of the geometric invariants entering Manin's
//! conjecture: the Fujita invariant `a(X, L)`, the `b`-invariant, Zariski
//! decompositions on del Pezzo surfaces, toric rigidity criteria, and
//! balanced-line-bundle verdicts.
//!
//! Varieties are presented by their Néron-Severi lattice, canonical class
//! and a finitely generated effective cone. All arithmetic is over exact
//! rationals.

pub mod cli;
pub mod cones;
pub mod delpezzo;
pub mod error;
pub mod fixtures;
pub mod invariants;
pub mod lp;
pub mod qlinalg;
pub mod toric;

pub use cones::{ConeError, ConeQ, FaceQ, Location};
pub use delpezzo::{DelPezzoModel, ZariskiDecomposition};
pub use error::{Error, Result};
pub use invariants::{
    b_invariant, balanced_verdict, fujita, is_rigid_class, Balance, BalancedVerdict, DivisorClass,
    SubvarietyDatum, VarietyModel,
};
pub use qlinalg::{MatQ, Rat, VecQ};
pub use toric::{Fan, ToricDivisor};
