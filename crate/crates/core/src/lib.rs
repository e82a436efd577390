//! Rank-n non-abelian zeta functions of curves over finite fields.
//!
//! Exact rational-function assembly of the rank-n zeta from Weil data,
//! extraction of its α/β invariants, and certified numerical checks of the
//! Riemann hypothesis and related inequalities.

pub mod curve;
pub mod error;
pub mod exact;
pub mod highrank;
pub mod invariants;
pub mod ranklow;
pub mod rhcheck;
pub mod shell;

pub use curve::{Curve, SpecialValues};
pub use error::{Error, Result};
pub use exact::{Poly, RatFunc, Rational};
pub use highrank::{bundle, sl_n_zeta, ZetaBundle};
