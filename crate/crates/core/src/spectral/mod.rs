//! Exact spectral layer: characteristic polynomials, certified real roots,
//! Frobenius-Perron dimensions, formal codegrees and quadratic-field checks.
//!
//! Characteristic polynomials and quadratic-field identities are exact. Only
//! root enclosures are approximate, with width bounded by a caller-supplied
//! rational precision (default `10⁻¹²`).

mod charpoly;
mod poly;
mod quadratic;
mod roots;

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use charpoly::char_poly;
pub use poly::IntPolynomial;
pub use quadratic::{eval_quadratic, QuadraticNumber};
pub use roots::{real_roots, ExactValue, RealAlgebraicRoot};

use crate::matrix::IntMatrix;
use crate::ring::{fusion_matrix, FusionRing, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("precision must be a positive rational, got {0}")]
    InvalidPrecision(String),
    #[error("radicand must be a positive integer, got {0}")]
    InvalidRadicand(String),
    #[error("operands live in different quadratic fields (√{left} vs √{right})")]
    FieldMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("expected a positive value, got {0}")]
    NonPositive(String),
    #[error("matrix has a negative entry")]
    NegativeEntry,
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// `10⁻¹²`
pub fn default_precision() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(12))
}

/// Certified rational enclosure `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl Enclosure {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn to_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lo <= *x && *x <= self.hi
    }
}

/// Largest real root of the characteristic polynomial of `x`'s fusion matrix.
pub fn fpdim(ring: &FusionRing, x: usize) -> Result<RealAlgebraicRoot, SpectralError> {
    fpdim_within(ring, x, &default_precision())
}

pub fn fpdim_within(
    ring: &FusionRing,
    x: usize,
    precision: &BigRational,
) -> Result<RealAlgebraicRoot, SpectralError> {
    let m = fusion_matrix(ring, x)?;
    let cp = char_poly(&m)?;
    let root = real_roots(&cp, precision)?
        .pop()
        .expect("a non-negative integer matrix has a real Perron root");
    debug_assert!(root.hi() >= &BigRational::one());
    Ok(root)
}

/// Enclosure of `Σ_x FPdim(x)²` with width at most `precision`.
pub fn global_fpdim(ring: &FusionRing, precision: &BigRational) -> Result<Enclosure, SpectralError> {
    if !precision.is_positive() {
        return Err(SpectralError::InvalidPrecision(precision.to_string()));
    }
    let mut dims = (0..ring.rank())
        .map(|x| fpdim_within(ring, x, precision))
        .collect::<Result<Vec<_>, _>>()?;
    // width(lo², hi²) = (hi - lo)(hi + lo) ≤ w · 2 · max_hi per term
    let max_hi = dims.iter().map(|d| d.hi().clone()).max().unwrap_or_else(BigRational::one);
    let r = BigRational::from_integer(BigInt::from(ring.rank()));
    let two = BigRational::from_integer(BigInt::from(2));
    let w = precision / (r * two * max_hi + BigRational::one());
    let mut lo = BigRational::zero();
    let mut hi = BigRational::zero();
    for d in &mut dims {
        d.refine(&w);
        lo += d.lo() * d.lo();
        hi += d.hi() * d.hi();
    }
    Ok(Enclosure { lo, hi })
}

/// `Σ_z N_z N_{z*}`
pub fn codegree_matrix(ring: &FusionRing) -> IntMatrix {
    let r = ring.rank();
    let mut acc = IntMatrix::zeros(r, r);
    for z in 0..r {
        let a = fusion_matrix(ring, z).expect("index in range");
        let b = fusion_matrix(ring, ring.dual(z)).expect("index in range");
        acc = &acc + &(&a * &b);
    }
    acc
}

/// Characteristic polynomial of the codegree matrix and its real roots with
/// multiplicity. The matrix is symmetric, so the roots are complete.
pub fn formal_codegrees(
    ring: &FusionRing,
    precision: &BigRational,
) -> Result<(IntPolynomial, Vec<RealAlgebraicRoot>), SpectralError> {
    let cp = char_poly(&codegree_matrix(ring))?;
    let roots = real_roots(&cp, precision)?;
    Ok((cp, roots))
}

/// True iff `v` is an eigenvalue of `matrix` and no eigenvalue exceeds it.
///
/// Membership is decided by exact evaluation in `ℚ(√d)`; dominance by a
/// Sturm sequence evaluated exactly at `v`.
pub fn perron_dominant(matrix: &IntMatrix, v: &QuadraticNumber) -> Result<bool, SpectralError> {
    if v.signum() != Ordering::Greater {
        return Err(SpectralError::NonPositive(v.to_string()));
    }
    if !matrix.is_non_negative() {
        return Err(SpectralError::NegativeEntry);
    }
    let cp = char_poly(matrix)?;
    if !eval_quadratic(&cp, v).is_zero() {
        return Ok(false);
    }
    Ok(roots::roots_above_quadratic(&cp, v) == 0)
}
