//! Exact construction and verification of tridiagonal pairs of shape (1,2,1).
//!
//! Everything is computed over an exact [`Field`]: the rationals or a prime
//! field. The main entry points are [`shape121::construct`], which builds the
//! canonical pair for an admissible [`ParameterArray`], and
//! [`tdcore::verify_td_system`], which checks the pair axioms for arbitrary
//! 4×4 input.

pub mod bases;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod invariant;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod sample;
pub mod shape121;
pub mod tdcore;

pub use bases::{BasisId, EtaVectors};
pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use linalg::{Matrix, Subspace, Vector};
pub use shape121::{DerivedParams, ParameterArray};
pub use tdcore::{TdSystem, VerificationReport};
