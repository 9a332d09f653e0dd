//! Exact-arithmetic toolkit for finite-dimensional Lie 2-algebras.
//!
//! A Lie 2-algebra is presented by structure constants over the rationals:
//! a two-term complex `g_{-1} --d--> g_0`, an alternating bracket on `g_0`,
//! a mixed bracket `g_0 (x) g_{-1} -> g_{-1}`, and an alternating ternary
//! homotopy `l3 : /\^3 g_0 -> g_{-1}` correcting the Jacobi identity.
//!
//! The crate provides:
//! - axiom verification for algebras, homomorphisms, and representations
//!   ([`algebra`], [`hom`], [`rep`]);
//! - the cochain complex of a representation and its cohomology
//!   ([`cohomology`]);
//! - one-parameter infinitesimal deformations, their cocycle conditions, and
//!   trivializations ([`deform`]);
//! - Nijenhuis operators, including the quadratic/string-type and
//!   O-operator constructions ([`nijenhuis`]);
//! - abelian extensions and their classification by second cohomology
//!   ([`extension`]);
//! - JSON schemas ([`schema`]), a built-in example catalog ([`catalog`]),
//!   and a CLI ([`cli`]).
//!
//! All arithmetic is exact, over arbitrary-precision rationals ([`rational::Rat`])
//! or polynomials in one formal parameter ([`poly::LambdaPoly`]).

pub mod error;
pub mod rational;
pub mod poly;
pub mod scalar;
pub mod combinat;
pub mod matrix;
pub mod tensor;
pub mod report;
pub mod algebra;
pub mod hom;
pub mod rep;
pub mod cohomology;
pub mod deform;
pub mod nijenhuis;
pub mod extension;
pub mod schema;
pub mod catalog;
pub mod cli;

#[cfg(test)]
pub mod testutil;

pub use error::Error;
pub use rational::Rat;
pub use poly::LambdaPoly;
pub use matrix::Matrix;
pub use algebra::Lie2Algebra;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
