//! The scalar abstraction shared by matrices, tensors, and algebras.
//!
//! Structure constants are generic over a commutative ring scalar so the
//! same axiom-checking code runs over exact rationals ([`crate::Rat`]) and
//! over one-parameter polynomials ([`crate::LambdaPoly`]) for symbolic
//! deformation checks.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// A commutative ring scalar with exact equality.
///
/// Blanket-implemented; [`crate::Rat`] and [`crate::LambdaPoly`] both
/// qualify automatically.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + Debug
        + Display
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
        + Zero
        + One
{
}
