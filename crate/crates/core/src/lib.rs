//! Exact symbolic computation of local Chern obstructions and related
//! indices for collections of 1-forms on singular complex analytic germs.
//!
//! Everything is computed over an exact coefficient field (arbitrary
//! precision rationals by default) via Gröbner bases for global orders and
//! Mora standard bases for local orders.  The high-level entry points live
//! in [`chern`]; the CLI wrapper in [`cli`].

pub mod chern;
pub mod cli;
pub mod error;
pub mod groebner;
pub mod matmod;
pub mod oracle;
pub mod polyalg;
pub mod rng;
pub mod scalar;

pub use error::Error;
pub use scalar::Scalar;

/// Exact rational coefficients, the default field for every pipeline.
pub type Rat = num_rational::BigRational;

/// Polynomial over the rationals.
pub type QPoly = polyalg::Polynomial<Rat>;
/// Ideal over the rationals.
pub type QIdeal = groebner::Ideal<Rat>;
/// Polynomial matrix over the rationals.
pub type QMatrix = matmod::PolyMatrix<Rat>;
