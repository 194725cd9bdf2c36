//! Multi-point Weierstrass semigroups, pure gaps and AG codes at the
//! distinguished points of the Giulietti-Korchmaros curve
//!
//! `Z^(n^2-n+1) = Y h(X)`, `X^n + X = Y^(n+1)` over GF(n^6).
//!
//! Closed forms for the minimal generating set and for families of pure
//! gaps are paired with a Riemann-Roch dimension oracle built from local
//! power-series expansions, so every closed form can be checked.

pub mod agcode;
pub mod cli;
pub mod curve;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod localdata;
pub mod rrspace;
pub mod wsemi;

pub use agcode::{build_code, CodeSummary, GenMatrix};
pub use curve::{enumerate_points, AffinePoint, CurvePoint, GkParams, PointSet};
pub use error::{Error, Result};
pub use gf::{Fe, FieldCtx};
pub use rrspace::{DimOracle, Divisor, Place};
pub use wsemi::PoleVector;
