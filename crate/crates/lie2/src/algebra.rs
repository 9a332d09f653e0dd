//! Lie 2-algebras by structure constants, and their axioms.
//!
//! A Lie 2-algebra here is a two-term graded vector space
//! `g_{-1} --d--> g_0` with three structure maps:
//! - an alternating bracket `[.,.] : g_0 ^ g_0 -> g_0`;
//! - a mixed bracket `[.,.] : g_0 (x) g_{-1} -> g_{-1}` (we write `[x, a]`;
//!   the opposite order is defined by `[a, x] = -[x, a]`, and there is no
//!   bracket on two degree `-1` elements);
//! - an alternating ternary map `l3 : g_0 ^ g_0 ^ g_0 -> g_{-1}` measuring
//!   the failure of the Jacobi identity up to the boundary `d`.
//!
//! [`Lie2Algebra::check_axioms`] verifies the five coherence axioms exactly;
//! each is checked on the minimal set of basis tuples that spans all
//! instances (by multilinearity and the symmetries of both sides).

use crate::matrix::{vadd, vsub, vzero, Matrix};
use crate::report::{format_arguments, ConditionReport, Report};
use crate::scalar::Scalar;
use crate::tensor::{Alt2Tensor, Alt3Tensor, MixedTensor};
use crate::{Error, Rat, Result};

/// Names of the five axiom conditions, in check order.
pub const AXIOM_NAMES: [&str; 5] = [
    "mixed-bracket-chain-rule",
    "boundary-pair-symmetry",
    "jacobi-up-to-boundary",
    "mixed-jacobi-homotopy",
    "jacobiator-coherence",
];

/// A finite-dimensional Lie 2-algebra presented by structure constants.
#[derive(Clone, PartialEq, Debug)]
pub struct Lie2Algebra<S = Rat> {
    /// Dimension of the degree `0` space.
    pub dim0: usize,
    /// Dimension of the degree `-1` space.
    pub dim1: usize,
    /// The differential `d : g_{-1} -> g_0` (a `dim0 x dim1` matrix; column
    /// `j` is `d f_j` in the `e`-basis).
    pub d: Matrix<S>,
    /// The bracket on `g_0`.
    pub l2_00: Alt2Tensor<S>,
    /// The mixed bracket `g_0 (x) g_{-1} -> g_{-1}`.
    pub l2_01: MixedTensor<S>,
    /// The ternary homotopy `/\^3 g_0 -> g_{-1}`.
    pub l3: Alt3Tensor<S>,
}

impl<S: Scalar> Lie2Algebra<S> {
    /// Builds an algebra, validating all component shapes.
    pub fn new(
        dim0: usize,
        dim1: usize,
        d: Matrix<S>,
        l2_00: Alt2Tensor<S>,
        l2_01: MixedTensor<S>,
        l3: Alt3Tensor<S>,
    ) -> Result<Self> {
        if d.nrows() != dim0 || d.ncols() != dim1 {
            return Err(Error::InvalidInput(format!(
                "differential must be {dim0}x{dim1}, got {}x{}",
                d.nrows(),
                d.ncols()
            )));
        }
        if l2_00.dim_args() != dim0 || l2_00.dim_out() != dim0 {
            return Err(Error::InvalidInput(
                "degree-0 bracket has mismatched dimensions".into(),
            ));
        }
        if l2_01.dim_left() != dim0 || l2_01.dim_right() != dim1 || l2_01.dim_out() != dim1 {
            return Err(Error::InvalidInput(
                "mixed bracket has mismatched dimensions".into(),
            ));
        }
        if l3.dim_args() != dim0 || l3.dim_out() != dim1 {
            return Err(Error::InvalidInput(
                "ternary homotopy has mismatched dimensions".into(),
            ));
        }
        Ok(Lie2Algebra {
            dim0,
            dim1,
            d,
            l2_00,
            l2_01,
            l3,
        })
    }

    /// The abelian algebra (all structure maps zero) of the given dimensions.
    pub fn zero(dim0: usize, dim1: usize) -> Self {
        Lie2Algebra {
            dim0,
            dim1,
            d: Matrix::zeros(dim0, dim1),
            l2_00: Alt2Tensor::zero(dim0, dim0),
            l2_01: MixedTensor::zero(dim0, dim1, dim1),
            l3: Alt3Tensor::zero(dim0, dim1),
        }
    }

    /// Basis vector `e_i` of `g_0`.
    pub fn basis0(&self, i: usize) -> Vec<S> {
        let mut v = vzero(self.dim0);
        v[i] = S::one();
        v
    }

    /// Basis vector `f_j` of `g_{-1}`.
    pub fn basis1(&self, j: usize) -> Vec<S> {
        let mut v = vzero(self.dim1);
        v[j] = S::one();
        v
    }

    /// `d a` for `a` in `g_{-1}` coordinates.
    pub fn d_apply(&self, a: &[S]) -> Vec<S> {
        self.d.mul_vec(a)
    }

    /// `[u, v]` for `u, v` in `g_0` coordinates.
    pub fn b00(&self, u: &[S], v: &[S]) -> Vec<S> {
        self.l2_00.eval(u, v)
    }

    /// `[x, a]` for `x` in `g_0`, `a` in `g_{-1}` coordinates.
    pub fn b01(&self, x: &[S], a: &[S]) -> Vec<S> {
        self.l2_01.eval(x, a)
    }

    /// `l3(u, v, w)` for `g_0` coordinate vectors.
    pub fn l3_eval(&self, u: &[S], v: &[S], w: &[S]) -> Vec<S> {
        self.l3.eval(u, v, w)
    }

    /// Maps all structure constants through `f`.
    pub fn map_scalars<T: Scalar>(&self, mut f: impl FnMut(&S) -> T) -> Lie2Algebra<T> {
        Lie2Algebra {
            dim0: self.dim0,
            dim1: self.dim1,
            d: self.d.map(&mut f),
            l2_00: self.l2_00.map_scalars(&mut f),
            l2_01: self.l2_01.map_scalars(&mut f),
            l3: self.l3.map_scalars(&mut f),
        }
    }

    /// Checks the five Lie 2-algebra axioms; exact, basis by basis.
    pub fn check_axioms(&self) -> Report {
        let lists = self.axiom_residuals();
        Report::new(
            "Lie 2-algebra axioms",
            lists
                .into_iter()
                .zip(AXIOM_NAMES)
                .map(|(inst, name)| ConditionReport::from_residuals(name, inst))
                .collect(),
        )
    }

    /// Residuals of all five axioms on every basis instance, in the order of
    /// [`AXIOM_NAMES`].  Each entry pairs a formatted argument label with the
    /// residual vector; the axiom holds on that instance iff the residual is
    /// zero.
    pub fn axiom_residuals(&self) -> [Vec<(String, Vec<S>)>; 5] {
        let m = self.dim0;
        let n = self.dim1;

        // Axiom 1: the differential intertwines the mixed bracket with the
        // degree-0 bracket: d[x, a] = [x, d a].
        let mut inst1 = Vec::new();
        for i in 0..m {
            for j in 0..n {
                let lhs = self.d.mul_vec(&self.l2_01.value(i, j));
                let rhs = self.l2_00.eval(&self.basis0(i), &self.d.col(j));
                inst1.push((format_arguments(&[i], &[j]), vsub(&lhs, &rhs)));
            }
        }

        // Axiom 2: boundaries bracket symmetrically to zero:
        // [d a, b] + [d b, a] = 0 (checked on all pairs a <= b, including
        // a = b since the expression is symmetric).
        let mut inst2 = Vec::new();
        for j in 0..n {
            for k in j..n {
                let t1 = self.l2_01.eval(&self.d.col(j), &self.basis1(k));
                let t2 = self.l2_01.eval(&self.d.col(k), &self.basis1(j));
                inst2.push((format_arguments(&[], &[j, k]), vadd(&t1, &t2)));
            }
        }

        // Axiom 3: Jacobi identity up to boundary:
        // [[x, y], z] + [[y, z], x] + [[z, x], y] + d l3(x, y, z) = 0.
        let mut inst3 = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                for k in (j + 1)..m {
                    let (x, y, z) = (self.basis0(i), self.basis0(j), self.basis0(k));
                    let mut res = self.l2_00.eval(&self.l2_00.value(i, j), &z);
                    res = vadd(&res, &self.l2_00.eval(&self.l2_00.value(j, k), &x));
                    let zx = self.l2_00.value(i, k); // [z, x] = -[x, z]
                    res = vsub(&res, &self.l2_00.eval(&zx, &y));
                    res = vadd(&res, &self.d.mul_vec(&self.l3.value(i, j, k)));
                    inst3.push((format_arguments(&[i, j, k], &[]), res));
                }
            }
        }

        // Axiom 4: mixed Jacobi identity with homotopy correction:
        // [[x, y], a] - [x, [y, a]] + [y, [x, a]] + l3(x, y, d a) = 0.
        let mut inst4 = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                for t in 0..n {
                    let (x, y) = (self.basis0(i), self.basis0(j));
                    let mut res = self.l2_01.eval(&self.l2_00.value(i, j), &self.basis1(t));
                    res = vsub(&res, &self.l2_01.eval(&x, &self.l2_01.value(j, t)));
                    res = vadd(&res, &self.l2_01.eval(&y, &self.l2_01.value(i, t)));
                    res = vadd(&res, &self.l3.eval(&x, &y, &self.d.col(t)));
                    inst4.push((format_arguments(&[i, j], &[t]), res));
                }
            }
        }

        // Axiom 5: coherence of the homotopy with itself.  Both sides are
        // multilinear and alternating in (x, y, z, t), so strictly increasing
        // quadruples suffice.  The left side runs over the six 2+2 splittings
        // with shuffle signs; the right side pairs each l3 value against the
        // omitted argument.
        let mut inst5 = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                for k in (j + 1)..m {
                    for l in (k + 1)..m {
                        let (x, y, z, t) =
                            (self.basis0(i), self.basis0(j), self.basis0(k), self.basis0(l));
                        let mut lhs = self.l3.eval(&self.l2_00.value(i, j), &z, &t);
                        lhs = vsub(&lhs, &self.l3.eval(&self.l2_00.value(i, k), &y, &t));
                        lhs = vadd(&lhs, &self.l3.eval(&self.l2_00.value(i, l), &y, &z));
                        lhs = vadd(&lhs, &self.l3.eval(&self.l2_00.value(j, k), &x, &t));
                        lhs = vsub(&lhs, &self.l3.eval(&self.l2_00.value(j, l), &x, &z));
                        lhs = vadd(&lhs, &self.l3.eval(&self.l2_00.value(k, l), &x, &y));

                        // [l3(x,y,z), t] = -[t, l3(x,y,z)], etc.
                        let mut rhs = vzero(self.dim1);
                        rhs = vsub(&rhs, &self.l2_01.eval(&t, &self.l3.value(i, j, k)));
                        rhs = vadd(&rhs, &self.l2_01.eval(&z, &self.l3.value(i, j, l)));
                        rhs = vsub(&rhs, &self.l2_01.eval(&y, &self.l3.value(i, k, l)));
                        rhs = vadd(&rhs, &self.l2_01.eval(&x, &self.l3.value(j, k, l)));

                        inst5.push((format_arguments(&[i, j, k, l], &[]), vsub(&lhs, &rhs)));
                    }
                }
            }
        }

        [inst1, inst2, inst3, inst4, inst5]
    }
}
