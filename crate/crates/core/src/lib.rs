//! Integration of even rational functions over `[0, inf)`.
//!
//! Symmetric denominators are reduced exactly to half their degree, quartic
//! and symmetric octic bases have closed forms, and everything else is
//! handled by iterating the rational Landen transformation to its binomial
//! fixed point. An independent double-exponential quadrature serves as an
//! oracle.

pub mod bigfloat;
pub mod binomial;
pub mod closed_form;
pub mod computability;
pub mod error;
pub mod eval;
pub mod expr;
pub mod format;
pub mod integrand;
pub mod landen;
pub mod linsolve;
pub mod oracle;
pub mod poly;
pub mod reduction;
pub mod scalar;

pub use bigfloat::{digits_to_bits, BigFloat};
pub use error::{Error, Result};
pub use eval::{enclose, eval_bigfloat, eval_expression};
pub use expr::Expr;
pub use integrand::EvenRationalIntegrand;
pub use poly::{EvenPoly, Poly};
pub use scalar::{rat, ratio, Real, Scalar};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Even polynomial with exact coefficients.
pub type RationalPoly = EvenPoly<Rational>;
/// Even polynomial with `f64` coefficients.
pub type F64Poly = EvenPoly<f64>;
pub type F32Poly = EvenPoly<f32>;
/// Even polynomial with multiprecision coefficients.
pub type BigFloatPoly = EvenPoly<BigFloat>;
