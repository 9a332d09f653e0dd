//! Multilinear structure-constant tensors.
//!
//! Three shapes cover everything in a Lie 2-algebra presentation:
//! - [`Alt2Tensor`]: an alternating bilinear map `V ^ V -> W`, stored on
//!   strictly increasing basis pairs;
//! - [`Alt3Tensor`]: an alternating trilinear map `V ^ V ^ V -> W`, stored on
//!   strictly increasing basis triples;
//! - [`MixedTensor`]: a plain bilinear map `U (x) V -> W`, stored on all
//!   basis pairs.
//!
//! Values at arbitrary (unsorted, repeated) basis indices are produced by
//! sign-normalizing; evaluation at general vectors is multilinear expansion.

use crate::combinat::{pair_rank, sort_alternating, triple_rank};
use crate::matrix::{vadd, vneg, vscale, vzero, v_is_zero, vaxpy};
use crate::scalar::Scalar;

/// An alternating bilinear map given by its values on basis pairs `i < j`.
#[derive(Clone, PartialEq, Debug)]
pub struct Alt2Tensor<S> {
    dim_args: usize,
    dim_out: usize,
    vals: Vec<Vec<S>>,
}

impl<S: Scalar> Alt2Tensor<S> {
    /// The zero map.
    pub fn zero(dim_args: usize, dim_out: usize) -> Self {
        let n = if dim_args >= 2 {
            dim_args * (dim_args - 1) / 2
        } else {
            0
        };
        Alt2Tensor {
            dim_args,
            dim_out,
            vals: vec![vzero(dim_out); n],
        }
    }

    /// Builds from a function on strictly increasing pairs.
    pub fn from_fn(
        dim_args: usize,
        dim_out: usize,
        mut f: impl FnMut(usize, usize) -> Vec<S>,
    ) -> Self {
        let mut t = Self::zero(dim_args, dim_out);
        for i in 0..dim_args {
            for j in (i + 1)..dim_args {
                let v = f(i, j);
                assert!(v.len() == dim_out, "tensor value of wrong length");
                t.vals[pair_rank(dim_args, i, j)] = v;
            }
        }
        t
    }

    /// Argument-space dimension.
    pub fn dim_args(&self) -> usize {
        self.dim_args
    }

    /// Value-space dimension.
    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    /// Value on basis vectors `(e_i, e_j)` for arbitrary `i, j` (signed
    /// lookup; zero when `i == j`).
    pub fn value(&self, i: usize, j: usize) -> Vec<S> {
        assert!(i < self.dim_args && j < self.dim_args, "index out of range");
        if i == j {
            return vzero(self.dim_out);
        }
        if i < j {
            self.vals[pair_rank(self.dim_args, i, j)].clone()
        } else {
            vneg(&self.vals[pair_rank(self.dim_args, j, i)])
        }
    }

    /// Sets the value on the strictly increasing pair `i < j`.
    pub fn set(&mut self, i: usize, j: usize, v: Vec<S>) {
        assert!(i < j && j < self.dim_args, "expected a strictly increasing pair");
        assert!(v.len() == self.dim_out, "tensor value of wrong length");
        self.vals[pair_rank(self.dim_args, i, j)] = v;
    }

    /// Multilinear evaluation at vectors.
    pub fn eval(&self, u: &[S], v: &[S]) -> Vec<S> {
        assert!(
            u.len() == self.dim_args && v.len() == self.dim_args,
            "argument of wrong length"
        );
        let mut acc = vzero(self.dim_out);
        for i in 0..self.dim_args {
            for j in (i + 1)..self.dim_args {
                let c = u[i].clone() * v[j].clone() - u[j].clone() * v[i].clone();
                if !c.is_zero() {
                    vaxpy(&mut acc, &c, &self.vals[pair_rank(self.dim_args, i, j)]);
                }
            }
        }
        acc
    }

    /// Entry-wise sum.
    pub fn add(&self, other: &Self) -> Self {
        assert!(
            self.dim_args == other.dim_args && self.dim_out == other.dim_out,
            "tensor shape mismatch"
        );
        Alt2Tensor {
            dim_args: self.dim_args,
            dim_out: self.dim_out,
            vals: self
                .vals
                .iter()
                .zip(&other.vals)
                .map(|(a, b)| vadd(a, b))
                .collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &S) -> Self {
        Alt2Tensor {
            dim_args: self.dim_args,
            dim_out: self.dim_out,
            vals: self.vals.iter().map(|v| vscale(c, v)).collect(),
        }
    }

    /// Maps scalars through `f`.
    pub fn map_scalars<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> Alt2Tensor<T> {
        Alt2Tensor {
            dim_args: self.dim_args,
            dim_out: self.dim_out,
            vals: self
                .vals
                .iter()
                .map(|v| v.iter().map(|x| f(x)).collect())
                .collect(),
        }
    }

    /// Whether every value is zero.
    pub fn is_zero(&self) -> bool {
        self.vals.iter().all(|v| v_is_zero(v))
    }
}

/// An alternating trilinear map given by its values on basis triples
/// `i < j < k`.
#[derive(Clone, PartialEq, Debug)]
pub struct Alt3Tensor<S> {
    dim_args: usize,
    dim_out: usize,
    vals: Vec<Vec<S>>,
}

impl<S: Scalar> Alt3Tensor<S> {
    /// The zero map.
    pub fn zero(dim_args: usize, dim_out: usize) -> Self {
        let n = if dim_args >= 3 {
            dim_args * (dim_args - 1) * (dim_args - 2) / 6
        } else {
            0
        };
        Alt3Tensor {
            dim_args,
            dim_out,
            vals: vec![vzero(dim_out); n],
        }
    }

    /// Builds from a function on strictly increasing triples.
    pub fn from_fn(
        dim_args: usize,
        dim_out: usize,
        mut f: impl FnMut(usize, usize, usize) -> Vec<S>,
    ) -> Self {
        let mut t = Self::zero(dim_args, dim_out);
        for i in 0..dim_args {
            for j in (i + 1)..dim_args {
                for k in (j + 1)..dim_args {
                    let v = f(i, j, k);
                    assert!(v.len() == dim_out, "tensor value of wrong length");
                    t.vals[triple_rank(dim_args, i, j, k)] = v;
                }
            }
        }
        t
    }

    /// Argument-space dimension.
    pub fn dim_args(&self) -> usize {
        self.dim_args
    }

    /// Value-space dimension.
    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    /// Value on basis vectors for arbitrary indices (signed lookup; zero on
    /// repeated indices).
    pub fn value(&self, i: usize, j: usize, k: usize) -> Vec<S> {
        assert!(
            i < self.dim_args && j < self.dim_args && k < self.dim_args,
            "index out of range"
        );
        match sort_alternating(&[i, j, k]) {
            None => vzero(self.dim_out),
            Some((sign, t)) => {
                let v = &self.vals[triple_rank(self.dim_args, t[0], t[1], t[2])];
                if sign > 0 {
                    v.clone()
                } else {
                    vneg(v)
                }
            }
        }
    }

    /// Sets the value on the strictly increasing triple `i < j < k`.
    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Vec<S>) {
        assert!(
            i < j && j < k && k < self.dim_args,
            "expected a strictly increasing triple"
        );
        assert!(v.len() == self.dim_out, "tensor value of wrong length");
        self.vals[triple_rank(self.dim_args, i, j, k)] = v;
    }

    /// Multilinear evaluation at vectors.
    pub fn eval(&self, u: &[S], v: &[S], w: &[S]) -> Vec<S> {
        assert!(
            u.len() == self.dim_args && v.len() == self.dim_args && w.len() == self.dim_args,
            "argument of wrong length"
        );
        let mut acc = vzero(self.dim_out);
        for i in 0..self.dim_args {
            for j in (i + 1)..self.dim_args {
                for k in (j + 1)..self.dim_args {
                    // 3x3 determinant of the (i, j, k) coordinates.
                    let det = u[i].clone()
                        * (v[j].clone() * w[k].clone() - v[k].clone() * w[j].clone())
                        - u[j].clone()
                            * (v[i].clone() * w[k].clone() - v[k].clone() * w[i].clone())
                        + u[k].clone()
                            * (v[i].clone() * w[j].clone() - v[j].clone() * w[i].clone());
                    if !det.is_zero() {
                        vaxpy(&mut acc, &det, &self.vals[triple_rank(self.dim_args, i, j, k)]);
                    }
                }
            }
        }
        acc
    }

    /// Entry-wise sum.
    pub fn add(&self, other: &Self) -> Self {
        assert!(
            self.dim_args == other.dim_args && self.dim_out == other.dim_out,
            "tensor shape mismatch"
        );
        Alt3Tensor {
            dim_args: self.dim_args,
            dim_out: self.dim_out,
            vals: self
                .vals
                .iter()
                .zip(&other.vals)
                .map(|(a, b)| vadd(a, b))
                .collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &S) -> Self {
        Alt3Tensor {
            dim_args: self.dim_args,
            dim_out: self.dim_out,
            vals: self.vals.iter().map(|v| vscale(c, v)).collect(),
        }
    }

    /// Maps scalars through `f`.
    pub fn map_scalars<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> Alt3Tensor<T> {
        Alt3Tensor {
            dim_args: self.dim_args,
            dim_out: self.dim_out,
            vals: self
                .vals
                .iter()
                .map(|v| v.iter().map(|x| f(x)).collect())
                .collect(),
        }
    }

    /// Whether every value is zero.
    pub fn is_zero(&self) -> bool {
        self.vals.iter().all(|v| v_is_zero(v))
    }
}

/// A bilinear map `U (x) V -> W` given by its values on all basis pairs.
#[derive(Clone, PartialEq, Debug)]
pub struct MixedTensor<S> {
    dim_left: usize,
    dim_right: usize,
    dim_out: usize,
    vals: Vec<Vec<S>>,
}

impl<S: Scalar> MixedTensor<S> {
    /// The zero map.
    pub fn zero(dim_left: usize, dim_right: usize, dim_out: usize) -> Self {
        MixedTensor {
            dim_left,
            dim_right,
            dim_out,
            vals: vec![vzero(dim_out); dim_left * dim_right],
        }
    }

    /// Builds from a function on basis pairs.
    pub fn from_fn(
        dim_left: usize,
        dim_right: usize,
        dim_out: usize,
        mut f: impl FnMut(usize, usize) -> Vec<S>,
    ) -> Self {
        let mut t = Self::zero(dim_left, dim_right, dim_out);
        for i in 0..dim_left {
            for j in 0..dim_right {
                let v = f(i, j);
                assert!(v.len() == dim_out, "tensor value of wrong length");
                t.vals[i * dim_right + j] = v;
            }
        }
        t
    }

    /// Left argument-space dimension.
    pub fn dim_left(&self) -> usize {
        self.dim_left
    }

    /// Right argument-space dimension.
    pub fn dim_right(&self) -> usize {
        self.dim_right
    }

    /// Value-space dimension.
    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    /// Value on basis vectors `(e_i, f_j)`.
    pub fn value(&self, i: usize, j: usize) -> Vec<S> {
        assert!(
            i < self.dim_left && j < self.dim_right,
            "index out of range"
        );
        self.vals[i * self.dim_right + j].clone()
    }

    /// Sets the value on a basis pair.
    pub fn set(&mut self, i: usize, j: usize, v: Vec<S>) {
        assert!(
            i < self.dim_left && j < self.dim_right,
            "index out of range"
        );
        assert!(v.len() == self.dim_out, "tensor value of wrong length");
        self.vals[i * self.dim_right + j] = v;
    }

    /// Bilinear evaluation at vectors.
    pub fn eval(&self, u: &[S], a: &[S]) -> Vec<S> {
        assert!(
            u.len() == self.dim_left && a.len() == self.dim_right,
            "argument of wrong length"
        );
        let mut acc = vzero(self.dim_out);
        for i in 0..self.dim_left {
            if u[i].is_zero() {
                continue;
            }
            for j in 0..self.dim_right {
                let c = u[i].clone() * a[j].clone();
                if !c.is_zero() {
                    vaxpy(&mut acc, &c, &self.vals[i * self.dim_right + j]);
                }
            }
        }
        acc
    }

    /// Entry-wise sum.
    pub fn add(&self, other: &Self) -> Self {
        assert!(
            self.dim_left == other.dim_left
                && self.dim_right == other.dim_right
                && self.dim_out == other.dim_out,
            "tensor shape mismatch"
        );
        MixedTensor {
            dim_left: self.dim_left,
            dim_right: self.dim_right,
            dim_out: self.dim_out,
            vals: self
                .vals
                .iter()
                .zip(&other.vals)
                .map(|(a, b)| vadd(a, b))
                .collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &S) -> Self {
        MixedTensor {
            dim_left: self.dim_left,
            dim_right: self.dim_right,
            dim_out: self.dim_out,
            vals: self.vals.iter().map(|v| vscale(c, v)).collect(),
        }
    }

    /// Maps scalars through `f`.
    pub fn map_scalars<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> MixedTensor<T> {
        MixedTensor {
            dim_left: self.dim_left,
            dim_right: self.dim_right,
            dim_out: self.dim_out,
            vals: self
                .vals
                .iter()
                .map(|v| v.iter().map(|x| f(x)).collect())
                .collect(),
        }
    }

    /// Whether every value is zero.
    pub fn is_zero(&self) -> bool {
        self.vals.iter().all(|v| v_is_zero(v))
    }
}
