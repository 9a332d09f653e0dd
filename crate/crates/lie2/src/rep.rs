//! Representations of Lie 2-algebras on 2-term chain complexes.
//!
//! A 2-term complex is a linear map `partial : V_{-1} -> V_0`.  Its chain
//! endomorphisms of degree 0 are pairs `(X0, X1)` commuting with `partial`;
//! degree-1 endomorphisms are arbitrary maps `A : V_0 -> V_{-1}`.  These
//! spaces carry a strict Lie 2-algebra structure ([`end_algebra`]) with
//! differential `A |-> (partial A, A partial)` and commutator brackets.
//!
//! A representation sends the algebra into this endomorphism structure up
//! to a binary correction `mu2`, subject to five compatibility conditions
//! checked by [`Representation::check`].  The adjoint representation
//! ([`Representation::adjoint`]) realises the algebra on its own underlying
//! complex.

use crate::algebra::Lie2Algebra;
use crate::matrix::{vneg, Matrix};
use crate::report::{format_arguments, ConditionReport, Report};
use crate::tensor::Alt2Tensor;
use crate::{Error, Rat, Result};

/// Names of the representation conditions, in check order.
pub const REP_CONDITION_NAMES: [&str; 5] = [
    "chain-endomorphism-membership",
    "differential-intertwining",
    "action-bracket-up-to-boundary",
    "mixed-action-compatibility",
    "action-homotopy-coherence",
];

/// A 2-term chain complex `partial : V_{-1} -> V_0`.
#[derive(Clone, PartialEq, Debug)]
pub struct TwoTermComplex {
    pub v0_dim: usize,
    pub v1_dim: usize,
    /// Matrix of `partial`, of shape `v0_dim x v1_dim`.
    pub partial: Matrix<Rat>,
}

impl TwoTermComplex {
    pub fn new(v0_dim: usize, v1_dim: usize, partial: Matrix<Rat>) -> Result<Self> {
        if partial.nrows() != v0_dim || partial.ncols() != v1_dim {
            return Err(Error::InvalidInput(format!(
                "complex differential must be {v0_dim} x {v1_dim}, got {} x {}",
                partial.nrows(),
                partial.ncols()
            )));
        }
        Ok(TwoTermComplex {
            v0_dim,
            v1_dim,
            partial,
        })
    }

    /// The degree-0 differential on endomorphisms: `A |-> (partial A, A partial)`.
    pub fn delta(&self, a: &Matrix<Rat>) -> (Matrix<Rat>, Matrix<Rat>) {
        (self.partial.mul(a), a.mul(&self.partial))
    }
}

/// A representation of a Lie 2-algebra on a [`TwoTermComplex`].
///
/// `mu0[i]` is the pair `(X0, X1)` acting on `(V_0, V_{-1})` for the i-th
/// degree-0 basis element; `mu1[t]` is the degree-1 endomorphism
/// `V_0 -> V_{-1}` for the t-th degree-(-1) basis element; `mu2` stores a
/// degree-1 endomorphism per ordered pair `i < j`, flattened row-major.
#[derive(Clone, PartialEq, Debug)]
pub struct Representation {
    pub complex: TwoTermComplex,
    pub mu0: Vec<(Matrix<Rat>, Matrix<Rat>)>,
    pub mu1: Vec<Matrix<Rat>>,
    pub mu2: Alt2Tensor<Rat>,
}

impl Representation {
    /// Validates shapes against an algebra of dimensions `(dim0, dim1)`.
    pub fn new(
        dim0: usize,
        dim1: usize,
        complex: TwoTermComplex,
        mu0: Vec<(Matrix<Rat>, Matrix<Rat>)>,
        mu1: Vec<Matrix<Rat>>,
        mu2: Alt2Tensor<Rat>,
    ) -> Result<Self> {
        let (v0, v1) = (complex.v0_dim, complex.v1_dim);
        if mu0.len() != dim0 {
            return Err(Error::InvalidInput(format!(
                "expected {dim0} degree-0 actions, got {}",
                mu0.len()
            )));
        }
        for (x0, x1) in &mu0 {
            if x0.nrows() != v0 || x0.ncols() != v0 || x1.nrows() != v1 || x1.ncols() != v1 {
                return Err(Error::InvalidInput(
                    "degree-0 action has wrong shape".into(),
                ));
            }
        }
        if mu1.len() != dim1 {
            return Err(Error::InvalidInput(format!(
                "expected {dim1} degree-1 actions, got {}",
                mu1.len()
            )));
        }
        for a in &mu1 {
            if a.nrows() != v1 || a.ncols() != v0 {
                return Err(Error::InvalidInput(
                    "degree-1 action has wrong shape".into(),
                ));
            }
        }
        if mu2.dim_args() != dim0 || mu2.dim_out() != v1 * v0 {
            return Err(Error::InvalidInput(
                "binary correction has wrong shape".into(),
            ));
        }
        Ok(Representation {
            complex,
            mu0,
            mu1,
            mu2,
        })
    }

    /// A representation with `mu1 = 0` and `mu2 = 0`.
    pub fn strict(
        dim0: usize,
        dim1: usize,
        complex: TwoTermComplex,
        mu0: Vec<(Matrix<Rat>, Matrix<Rat>)>,
    ) -> Result<Self> {
        let (v0, v1) = (complex.v0_dim, complex.v1_dim);
        let mu1 = vec![Matrix::zeros(v1, v0); dim1];
        let mu2 = Alt2Tensor::zero(dim0, v1 * v0);
        Representation::new(dim0, dim1, complex, mu0, mu1, mu2)
    }

    pub fn v0_dim(&self) -> usize {
        self.complex.v0_dim
    }

    pub fn v1_dim(&self) -> usize {
        self.complex.v1_dim
    }

    /// Action of a degree-0 vector, as the pair of matrices on `(V_0, V_{-1})`.
    pub fn mu0_of(&self, u: &[Rat]) -> (Matrix<Rat>, Matrix<Rat>) {
        let mut x0 = Matrix::zeros(self.v0_dim(), self.v0_dim());
        let mut x1 = Matrix::zeros(self.v1_dim(), self.v1_dim());
        for (i, c) in u.iter().enumerate() {
            x0 = x0.add(&self.mu0[i].0.scale(c));
            x1 = x1.add(&self.mu0[i].1.scale(c));
        }
        (x0, x1)
    }

    /// Action of a degree-(-1) vector, as a map `V_0 -> V_{-1}`.
    pub fn mu1_of(&self, a: &[Rat]) -> Matrix<Rat> {
        let mut out = Matrix::zeros(self.v1_dim(), self.v0_dim());
        for (t, c) in a.iter().enumerate() {
            out = out.add(&self.mu1[t].scale(c));
        }
        out
    }

    /// The binary correction on a pair of degree-0 vectors.
    pub fn mu2_of(&self, u: &[Rat], v: &[Rat]) -> Matrix<Rat> {
        Matrix::from_flat(self.v1_dim(), self.v0_dim(), self.mu2.eval(u, v))
    }

    /// The binary correction on basis elements (signed lookup).
    pub fn mu2_value(&self, i: usize, j: usize) -> Matrix<Rat> {
        Matrix::from_flat(self.v1_dim(), self.v0_dim(), self.mu2.value(i, j))
    }

    /// The adjoint representation of an algebra on its own complex.
    pub fn adjoint(alg: &Lie2Algebra<Rat>) -> Representation {
        let (m, n) = (alg.dim0, alg.dim1);
        let complex = TwoTermComplex {
            v0_dim: m,
            v1_dim: n,
            partial: alg.d.clone(),
        };
        let mu0 = (0..m)
            .map(|i| {
                let x0 = Matrix::from_cols(m, &(0..m).map(|j| alg.l2_00.value(i, j)).collect::<Vec<_>>());
                let x1 = Matrix::from_cols(n, &(0..n).map(|t| alg.l2_01.value(i, t)).collect::<Vec<_>>());
                (x0, x1)
            })
            .collect();
        // mu1(a) x = [a, x] = -[x, a].
        let mu1 = (0..n)
            .map(|t| {
                Matrix::from_cols(
                    n,
                    &(0..m).map(|i| vneg(&alg.l2_01.value(i, t))).collect::<Vec<_>>(),
                )
            })
            .collect();
        // mu2(x, y) z = -l3(x, y, z).
        let mu2 = Alt2Tensor::from_fn(m, n * m, |i, j| {
            Matrix::from_cols(n, &(0..m).map(|k| vneg(&alg.l3.value(i, j, k))).collect::<Vec<_>>())
                .flatten()
        });
        Representation {
            complex,
            mu0,
            mu1,
            mu2,
        }
    }

    /// Checks the five representation conditions against `alg`.
    pub fn check(&self, alg: &Lie2Algebra<Rat>) -> Report {
        let m = alg.dim0;
        let n = alg.dim1;

        // (0) Each degree-0 action is a chain endomorphism: X0 partial = partial X1.
        let mut inst0 = Vec::new();
        for i in 0..m {
            let (x0, x1) = &self.mu0[i];
            let res = x0.mul(&self.complex.partial).sub(&self.complex.partial.mul(x1));
            inst0.push((format_arguments(&[i], &[]), res.flatten()));
        }

        // (i) mu0(d a) = delta(mu1(a)).
        let mut inst1 = Vec::new();
        for t in 0..n {
            let (y0, y1) = self.mu0_of(&alg.d.col(t));
            let (d0, d1) = self.complex.delta(&self.mu1[t]);
            let res = y0.sub(&d0).flatten().into_iter().chain(y1.sub(&d1).flatten());
            inst1.push((format_arguments(&[], &[t]), res.collect()));
        }

        // (ii) mu0([x, y]) - [mu0 x, mu0 y] = delta(mu2(x, y)).
        let mut inst2 = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                let (b0, b1) = self.mu0_of(&alg.l2_00.value(i, j));
                let (xi0, xi1) = &self.mu0[i];
                let (xj0, xj1) = &self.mu0[j];
                let c0 = xi0.mul(xj0).sub(&xj0.mul(xi0));
                let c1 = xi1.mul(xj1).sub(&xj1.mul(xi1));
                let (d0, d1) = self.complex.delta(&self.mu2_value(i, j));
                let res0 = b0.sub(&c0).sub(&d0).flatten();
                let res1 = b1.sub(&c1).sub(&d1).flatten();
                inst2.push((
                    format_arguments(&[i, j], &[]),
                    res0.into_iter().chain(res1).collect(),
                ));
            }
        }

        // (iii) mu1([x, a]) - [mu0 x, mu1 a] = mu2(x, d a),
        // where [X, A] = X1 A - A X0.
        let mut inst3 = Vec::new();
        for i in 0..m {
            for t in 0..n {
                let lhs = self.mu1_of(&alg.l2_01.value(i, t));
                let (x0, x1) = &self.mu0[i];
                let comm = x1.mul(&self.mu1[t]).sub(&self.mu1[t].mul(x0));
                let rhs = self.mu2_of(&alg.basis0(i), &alg.d.col(t));
                inst3.push((
                    format_arguments(&[i], &[t]),
                    lhs.sub(&comm).sub(&rhs).flatten(),
                ));
            }
        }

        // (iv) mu2([x,y], z) + c.p. + mu1(l3(x,y,z)) = [mu0 x, mu2(y,z)] + c.p.
        let mut inst4 = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                for k in (j + 1)..m {
                    let (x, y, z) = (alg.basis0(i), alg.basis0(j), alg.basis0(k));
                    let mut lhs = self.mu2_of(&alg.l2_00.value(i, j), &z);
                    lhs = lhs.add(&self.mu2_of(&alg.l2_00.value(j, k), &x));
                    // mu2([z, x], y) = -mu2([x, z], y)
                    lhs = lhs.sub(&self.mu2_of(&alg.l2_00.value(i, k), &y));
                    lhs = lhs.add(&self.mu1_of(&alg.l3.value(i, j, k)));
                    let bracket = |idx: usize, a: Matrix<Rat>| {
                        let (x0, x1) = &self.mu0[idx];
                        x1.mul(&a).sub(&a.mul(x0))
                    };
                    let mut rhs = bracket(i, self.mu2_value(j, k));
                    rhs = rhs.add(&bracket(j, self.mu2_value(k, i)));
                    rhs = rhs.add(&bracket(k, self.mu2_value(i, j)));
                    inst4.push((
                        format_arguments(&[i, j, k], &[]),
                        lhs.sub(&rhs).flatten(),
                    ));
                }
            }
        }

        Report::new(
            "representation conditions",
            vec![
                ConditionReport::from_residuals(REP_CONDITION_NAMES[0], inst0),
                ConditionReport::from_residuals(REP_CONDITION_NAMES[1], inst1),
                ConditionReport::from_residuals(REP_CONDITION_NAMES[2], inst2),
                ConditionReport::from_residuals(REP_CONDITION_NAMES[3], inst3),
                ConditionReport::from_residuals(REP_CONDITION_NAMES[4], inst4),
            ],
        )
    }
}

/// The strict Lie 2-algebra of chain endomorphisms of a 2-term complex,
/// together with the chosen basis of its degree-0 part.
pub struct EndAlgebra {
    pub complex: TwoTermComplex,
    pub algebra: Lie2Algebra<Rat>,
    /// Basis of the degree-0 part: pairs `(X0, X1)` with `X0 partial = partial X1`.
    pub deg0_basis: Vec<(Matrix<Rat>, Matrix<Rat>)>,
}

/// Builds the endomorphism Lie 2-algebra of a complex.
///
/// Degree 0 is the space of chain-endomorphism pairs, degree -1 the space of
/// all maps `V_0 -> V_{-1}` with its standard matrix-unit basis (row-major).
/// The differential sends `A` to `(partial A, A partial)`; both brackets are
/// commutators and the ternary homotopy vanishes.
pub fn end_algebra(complex: &TwoTermComplex) -> Result<EndAlgebra> {
    let v0 = complex.v0_dim;
    let v1 = complex.v1_dim;

    // Solve X0 partial - partial X1 = 0 for flattened (X0, X1).
    let unknowns = v0 * v0 + v1 * v1;
    let rows = v0 * v1;
    let mut constraint: Matrix<Rat> = Matrix::zeros(rows, unknowns);
    for r in 0..v0 {
        for c in 0..v1 {
            let row = r * v1 + c;
            // (X0 partial)[r, c] = sum_k X0[r, k] partial[k, c]
            for k in 0..v0 {
                constraint[(row, r * v0 + k)] =
                    constraint[(row, r * v0 + k)].clone() + complex.partial[(k, c)].clone();
            }
            // (partial X1)[r, c] = sum_k partial[r, k] X1[k, c]
            for k in 0..v1 {
                constraint[(row, v0 * v0 + k * v1 + c)] = constraint
                    [(row, v0 * v0 + k * v1 + c)]
                    .clone()
                    - complex.partial[(r, k)].clone();
            }
        }
    }
    let deg0_flat = constraint.kernel_basis();
    let deg0_basis: Vec<(Matrix<Rat>, Matrix<Rat>)> = deg0_flat
        .iter()
        .map(|v| {
            (
                Matrix::from_flat(v0, v0, v[..v0 * v0].to_vec()),
                Matrix::from_flat(v1, v1, v[v0 * v0..].to_vec()),
            )
        })
        .collect();
    let m = deg0_basis.len();
    let n = v1 * v0;

    // Coordinates of an arbitrary chain endomorphism in the chosen basis.
    let basis_mat = Matrix::from_cols(unknowns, &deg0_flat);
    let coords = |x0: &Matrix<Rat>, x1: &Matrix<Rat>| -> Result<Vec<Rat>> {
        let mut flat = x0.flatten();
        flat.extend(x1.flatten());
        basis_mat.solve_vec(&flat).ok_or_else(|| {
            Error::FailedCheck("endomorphism does not lie in the chain-map subspace".into())
        })
    };

    // Differential: matrix unit A = E[p, q] maps to (partial A, A partial).
    let mut d = Matrix::zeros(m, n);
    for p in 0..v1 {
        for q in 0..v0 {
            let mut a = Matrix::zeros(v1, v0);
            a[(p, q)] = Rat::int(1);
            let (d0, d1) = complex.delta(&a);
            let col = coords(&d0, &d1)?;
            for (r, val) in col.into_iter().enumerate() {
                d[(r, p * v0 + q)] = val;
            }
        }
    }

    let mut l2_00 = Alt2Tensor::zero(m, m);
    for i in 0..m {
        for j in (i + 1)..m {
            let (xi0, xi1) = &deg0_basis[i];
            let (xj0, xj1) = &deg0_basis[j];
            let c0 = xi0.mul(xj0).sub(&xj0.mul(xi0));
            let c1 = xi1.mul(xj1).sub(&xj1.mul(xi1));
            l2_00.set(i, j, coords(&c0, &c1)?);
        }
    }

    let mut l2_01 = crate::tensor::MixedTensor::zero(m, n, n);
    for i in 0..m {
        let (x0, x1) = &deg0_basis[i];
        for p in 0..v1 {
            for q in 0..v0 {
                let mut a = Matrix::zeros(v1, v0);
                a[(p, q)] = Rat::int(1);
                let comm = x1.mul(&a).sub(&a.mul(x0));
                l2_01.set(i, p * v0 + q, comm.flatten());
            }
        }
    }

    let l3 = crate::tensor::Alt3Tensor::zero(m, n);
    let algebra = Lie2Algebra::new(m, n, d, l2_00, l2_01, l3)?;
    Ok(EndAlgebra {
        complex: complex.clone(),
        algebra,
        deg0_basis,
    })
}

impl EndAlgebra {
    /// The tautological representation of the endomorphism algebra on its
    /// own complex: degree-0 basis elements act by themselves, degree-(-1)
    /// matrix units act by themselves, no binary correction.
    pub fn tautological_rep(&self) -> Representation {
        let v0 = self.complex.v0_dim;
        let v1 = self.complex.v1_dim;
        let n = self.algebra.dim1;
        let mu1 = (0..n)
            .map(|idx| {
                let mut a = Matrix::zeros(v1, v0);
                a[(idx / v0, idx % v0)] = Rat::int(1);
                a
            })
            .collect();
        Representation {
            complex: self.complex.clone(),
            mu0: self.deg0_basis.clone(),
            mu1,
            mu2: Alt2Tensor::zero(self.algebra.dim0, v1 * v0),
        }
    }
}
