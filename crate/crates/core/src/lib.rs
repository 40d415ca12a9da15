//! Exact-arithmetic workbench for fusion rings.
//!
//! A fusion ring is a unital based ring with non-negative integer structure
//! constants `N_{ij}^k` and a duality involution. This crate provides:
//!
//! - [`ring`]: the [`FusionRing`] data model, axiom validation, products,
//!   subrings, invertible elements, isomorphism testing and tensor products.
//! - [`spectral`]: exact characteristic polynomials, certified real-root
//!   isolation, Frobenius-Perron dimensions, formal codegrees and exact
//!   arithmetic in real quadratic fields.
//! - [`classifier`]: generators for the rank-4 self-dual families, constrained
//!   searches for each family and an independent brute-force enumerator.

pub mod classifier;
pub mod matrix;
pub mod ring;
pub mod spectral;

pub use classifier::{FamilyParams, SearchResult};
pub use matrix::IntMatrix;
pub use ring::{
    AxiomStatus, FusionRing, ObjectCombination, RingBuilder, RingError, ValidationReport,
    Violation,
};
pub use spectral::{IntPolynomial, QuadraticNumber, RealAlgebraicRoot, SpectralError};
