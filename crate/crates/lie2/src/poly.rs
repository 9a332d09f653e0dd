//! Polynomials in one formal parameter, with exact rational coefficients.
//!
//! [`LambdaPoly`] is the scalar type used for *symbolic* one-parameter
//! computations: deforming an algebra with an indeterminate parameter and
//! asking that every axiom residual vanish *identically* (all coefficients
//! zero) rather than at sampled parameter values.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::Rat;

/// A polynomial `c_0 + c_1*t + c_2*t^2 + ...` in one formal parameter `t`,
/// with exact rational coefficients.  Stored dense, trailing zeros trimmed;
/// the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LambdaPoly(Vec<Rat>);

impl LambdaPoly {
    /// Builds a polynomial from coefficients `c_0, c_1, ...` (low degree
    /// first), trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = LambdaPoly(coeffs);
        p.trim();
        p
    }

    /// The constant polynomial `c`.
    pub fn constant(c: Rat) -> Self {
        LambdaPoly::from_coeffs(vec![c])
    }

    /// The monomial `t`.
    pub fn lambda() -> Self {
        LambdaPoly(vec![Rat::zero(), Rat::one()])
    }

    /// Coefficient of `t^k` (zero beyond the stored degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.0.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// All stored coefficients, low degree first (empty for zero).
    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    /// Evaluates at `t = value`.
    pub fn eval(&self, value: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.0.iter().rev() {
            acc = acc * value.clone() + c.clone();
        }
        acc
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }
}

impl From<Rat> for LambdaPoly {
    fn from(c: Rat) -> Self {
        LambdaPoly::constant(c)
    }
}

impl Add for LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: LambdaPoly) -> LambdaPoly {
        let n = self.0.len().max(rhs.0.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + rhs.coeff(k));
        }
        LambdaPoly::from_coeffs(out)
    }
}

impl Sub for LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: LambdaPoly) -> LambdaPoly {
        let n = self.0.len().max(rhs.0.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) - rhs.coeff(k));
        }
        LambdaPoly::from_coeffs(out)
    }
}

impl Mul for LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: LambdaPoly) -> LambdaPoly {
        if self.0.is_empty() || rhs.0.is_empty() {
            return LambdaPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a * b;
            }
        }
        LambdaPoly::from_coeffs(out)
    }
}

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly(self.0.into_iter().map(|c| -c).collect())
    }
}

impl Zero for LambdaPoly {
    fn zero() -> Self {
        LambdaPoly(Vec::new())
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl One for LambdaPoly {
    fn one() -> Self {
        LambdaPoly(vec![Rat::one()])
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*t")?,
                _ => write!(f, "({c})*t^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> LambdaPoly {
        LambdaPoly::from_coeffs(coeffs.iter().map(|&c| Rat::int(c)).collect())
    }

    #[test]
    fn ring_operations() {
        let a = p(&[1, 2]); // 1 + 2t
        let b = p(&[3, 0, 1]); // 3 + t^2
        assert_eq!(a.clone() + b.clone(), p(&[4, 2, 1]));
        assert_eq!(b.clone() - a.clone(), p(&[2, -2, 1]));
        assert_eq!(a.clone() * b.clone(), p(&[3, 6, 1, 2]));
        assert_eq!(-a.clone(), p(&[-1, -2]));
        assert_eq!(a * LambdaPoly::zero(), LambdaPoly::zero());
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let a = p(&[1, 1]);
        let b = p(&[1, -1]);
        let prod = a * b; // 1 - t^2
        assert_eq!(prod, p(&[1, 0, -1]));
        let diff = prod.clone() - p(&[1, 0, -1]);
        assert!(diff.is_zero());
        assert_eq!(diff.degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn evaluation() {
        let q = p(&[1, -3, 2]); // 1 - 3t + 2t^2
        assert_eq!(q.eval(&Rat::int(0)), Rat::int(1));
        assert_eq!(q.eval(&Rat::int(1)), Rat::int(0));
        assert_eq!(q.eval(&Rat::new(1, 2)), Rat::int(0));
        assert_eq!(q.eval(&Rat::int(2)), Rat::int(3));
        assert_eq!(q.coeff(1), Rat::int(-3));
        assert_eq!(q.coeff(7), Rat::int(0));
    }

    #[test]
    fn lambda_monomial() {
        let t = LambdaPoly::lambda();
        let q = LambdaPoly::one() + t.clone() * t; // 1 + t^2
        assert_eq!(q, p(&[1, 0, 1]));
        assert_eq!(format!("{q}"), "1 + (1)*t^2");
        assert_eq!(format!("{}", LambdaPoly::zero()), "0");
    }
}
