//! Homomorphisms of Lie 2-algebras.
//!
//! A homomorphism `F = (F0, F1, F2)` from `L` to `L'` consists of linear
//! maps `F0 : g_0 -> g_0'` and `F1 : g_{-1} -> g_{-1}'` together with an
//! alternating correction `F2 : g_0 ^ g_0 -> g_{-1}'` witnessing that `F0`
//! respects brackets only up to the boundary of `F2`.
//!
//! Invertible homomorphisms transport structure: [`Homomorphism::transport`]
//! rebuilds the unique source structure making `F` a homomorphism onto a
//! given target, which is how isomorphic presentations of the same algebra
//! are generated and compared.

use crate::algebra::Lie2Algebra;
use crate::matrix::{vadd, vsub, Matrix};
use num_traits::One;
use crate::report::{format_arguments, ConditionReport, Report};
use crate::scalar::Scalar;
use crate::tensor::Alt2Tensor;
use crate::{Rat, Result};

/// Names of the four homomorphism conditions, in check order.
pub const HOM_CONDITION_NAMES: [&str; 4] = [
    "chain-map",
    "bracket-up-to-boundary",
    "mixed-bracket-compatibility",
    "homotopy-compatibility",
];

/// A homomorphism of Lie 2-algebras.
#[derive(Clone, PartialEq, Debug)]
pub struct Homomorphism<S = Rat> {
    /// Degree-0 component `g_0 -> g_0'`.
    pub f0: Matrix<S>,
    /// Degree-(-1) component `g_{-1} -> g_{-1}'`.
    pub f1: Matrix<S>,
    /// Bracket correction `g_0 ^ g_0 -> g_{-1}'`.
    pub f2: Alt2Tensor<S>,
}

impl<S: Scalar> Homomorphism<S> {
    /// The identity homomorphism of an algebra.
    pub fn identity(alg: &Lie2Algebra<S>) -> Self {
        Homomorphism {
            f0: Matrix::identity(alg.dim0),
            f1: Matrix::identity(alg.dim1),
            f2: Alt2Tensor::zero(alg.dim0, alg.dim1),
        }
    }

    /// A strict homomorphism (no bracket correction).
    pub fn strict(f0: Matrix<S>, f1: Matrix<S>) -> Self {
        let f2 = Alt2Tensor::zero(f0.ncols(), f1.nrows());
        Homomorphism { f0, f1, f2 }
    }

    /// Checks the four homomorphism conditions from `src` to `dst`.
    pub fn check(&self, src: &Lie2Algebra<S>, dst: &Lie2Algebra<S>) -> Report {
        let m = src.dim0;
        let n = src.dim1;

        // Condition 1: F0 d = d' F1 (chain map).
        let mut inst1 = Vec::new();
        let lhs = self.f0.mul(&src.d);
        let rhs = dst.d.mul(&self.f1);
        for j in 0..n {
            inst1.push((
                format_arguments(&[], &[j]),
                vsub(&lhs.col(j), &rhs.col(j)),
            ));
        }

        // Condition 2: F0 [x, y] - [F0 x, F0 y]' = d' F2(x, y).
        let mut inst2 = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                let mut res = self.f0.mul_vec(&src.l2_00.value(i, j));
                res = vsub(&res, &dst.b00(&self.f0.col(i), &self.f0.col(j)));
                res = vsub(&res, &dst.d.mul_vec(&self.f2.value(i, j)));
                inst2.push((format_arguments(&[i, j], &[]), res));
            }
        }

        // Condition 3: F1 [x, a] - [F0 x, F1 a]' = F2(x, d a).
        let mut inst3 = Vec::new();
        for i in 0..m {
            for t in 0..n {
                let mut res = self.f1.mul_vec(&src.l2_01.value(i, t));
                res = vsub(&res, &dst.b01(&self.f0.col(i), &self.f1.col(t)));
                res = vsub(&res, &self.f2.eval(&src.basis0(i), &src.d.col(t)));
                inst3.push((format_arguments(&[i], &[t]), res));
            }
        }

        // Condition 4: F2([x,y], z) + c.p. + F1 l3(x,y,z)
        //            = [F0 x, F2(y,z)]' + c.p. + l3'(F0 x, F0 y, F0 z).
        let mut inst4 = Vec::new();
        for i in 0..m {
            for j in (i + 1)..m {
                for k in (j + 1)..m {
                    let (x, y, z) = (src.basis0(i), src.basis0(j), src.basis0(k));
                    let mut lhs = self.f2.eval(&src.l2_00.value(i, j), &z);
                    lhs = vadd(&lhs, &self.f2.eval(&src.l2_00.value(j, k), &x));
                    // [z, x] = -[x, z]
                    lhs = vsub(&lhs, &self.f2.eval(&src.l2_00.value(i, k), &y));
                    lhs = vadd(&lhs, &self.f1.mul_vec(&src.l3.value(i, j, k)));

                    let mut rhs = dst.b01(&self.f0.col(i), &self.f2.value(j, k));
                    rhs = vadd(&rhs, &dst.b01(&self.f0.col(j), &self.f2.value(k, i)));
                    rhs = vadd(&rhs, &dst.b01(&self.f0.col(k), &self.f2.value(i, j)));
                    rhs = vadd(
                        &rhs,
                        &dst.l3_eval(&self.f0.col(i), &self.f0.col(j), &self.f0.col(k)),
                    );
                    inst4.push((format_arguments(&[i, j, k], &[]), vsub(&lhs, &rhs)));
                }
            }
        }

        Report::new(
            "Lie 2-algebra homomorphism conditions",
            vec![
                ConditionReport::from_residuals(HOM_CONDITION_NAMES[0], inst1),
                ConditionReport::from_residuals(HOM_CONDITION_NAMES[1], inst2),
                ConditionReport::from_residuals(HOM_CONDITION_NAMES[2], inst3),
                ConditionReport::from_residuals(HOM_CONDITION_NAMES[3], inst4),
            ],
        )
    }

    /// Composition `self . inner` (apply `inner` first).
    pub fn compose(&self, inner: &Homomorphism<S>) -> Homomorphism<S> {
        let f0 = self.f0.mul(&inner.f0);
        let f1 = self.f1.mul(&inner.f1);
        let dim_args = inner.f0.ncols();
        let dim_out = self.f1.nrows();
        let f2 = Alt2Tensor::from_fn(dim_args, dim_out, |i, j| {
            vadd(
                &self.f2.eval(&inner.f0.col(i), &inner.f0.col(j)),
                &self.f1.mul_vec(&inner.f2.value(i, j)),
            )
        });
        Homomorphism { f0, f1, f2 }
    }
}

impl Homomorphism<Rat> {
    /// Inverse of an invertible homomorphism:
    /// `(F0^-1, F1^-1, -F1^-1 F2(F0^-1 x, F0^-1 y))`.
    pub fn invert(&self) -> Result<Homomorphism<Rat>> {
        let f0_inv = self.f0.inverse()?;
        let f1_inv = self.f1.inverse()?;
        let f2 = Alt2Tensor::from_fn(self.f0.ncols(), self.f1.nrows(), |i, j| {
            let val = self.f2.eval(&f0_inv.col(i), &f0_inv.col(j));
            f1_inv.mul_vec(&val).iter().map(|x| -x.clone()).collect()
        });
        Ok(Homomorphism {
            f0: f0_inv,
            f1: f1_inv,
            f2,
        })
    }

    /// Pulls the structure of `dst` back along this (invertible) map: builds
    /// the unique algebra on the source spaces making `self` a homomorphism
    /// into `dst`.
    ///
    /// The components are solved in dependency order: differential, then the
    /// two brackets, then the ternary homotopy (whose defining identity uses
    /// the transported brackets).
    pub fn transport(&self, dst: &Lie2Algebra<Rat>) -> Result<Lie2Algebra<Rat>> {
        let m = self.f0.ncols();
        let n = self.f1.ncols();
        let f0_inv = self.f0.inverse()?;
        let f1_inv = self.f1.inverse()?;

        // d = F0^-1 d' F1.
        let d = f0_inv.mul(&dst.d).mul(&self.f1);

        // [x, y] = F0^-1([F0 x, F0 y]' + d' F2(x, y)).
        let l2_00 = Alt2Tensor::from_fn(m, m, |i, j| {
            let mut v = dst.b00(&self.f0.col(i), &self.f0.col(j));
            v = vadd(&v, &dst.d.mul_vec(&self.f2.value(i, j)));
            f0_inv.mul_vec(&v)
        });

        // [x, a] = F1^-1([F0 x, F1 a]' + F2(x, d a)) with the transported d.
        let l2_01 = crate::tensor::MixedTensor::from_fn(m, n, n, |i, t| {
            let mut v = dst.b01(&self.f0.col(i), &self.f1.col(t));
            let mut x = crate::matrix::vzero::<Rat>(m);
            x[i] = Rat::one();
            v = vadd(&v, &self.f2.eval(&x, &d.col(t)));
            f1_inv.mul_vec(&v)
        });

        // l3(x,y,z) = F1^-1([F0 x, F2(y,z)]' + c.p. + l3'(F0 x, F0 y, F0 z)
        //             - F2([x,y], z) - c.p.) with the transported bracket.
        let l3 = transport_l3(self, dst, &l2_00, &f1_inv, m, n);

        Lie2Algebra::new(m, n, d, l2_00, l2_01, l3)
    }
}

use crate::tensor::Alt3Tensor;

fn transport_l3(
    f: &Homomorphism<Rat>,
    dst: &Lie2Algebra<Rat>,
    l2_00: &Alt2Tensor<Rat>,
    f1_inv: &Matrix<Rat>,
    m: usize,
    n: usize,
) -> Alt3Tensor<Rat> {
    Alt3Tensor::from_fn(m, n, |i, j, k| {
        let basis = |t: usize| {
            let mut v = crate::matrix::vzero::<Rat>(m);
            v[t] = Rat::one();
            v
        };
        let (x, y, z) = (basis(i), basis(j), basis(k));
        let mut v = dst.b01(&f.f0.col(i), &f.f2.value(j, k));
        v = vadd(&v, &dst.b01(&f.f0.col(j), &f.f2.value(k, i)));
        v = vadd(&v, &dst.b01(&f.f0.col(k), &f.f2.value(i, j)));
        v = vadd(&v, &dst.l3_eval(&f.f0.col(i), &f.f0.col(j), &f.f0.col(k)));
        v = vsub(&v, &f.f2.eval(&l2_00.value(i, j), &z));
        v = vsub(&v, &f.f2.eval(&l2_00.value(j, k), &x));
        // -F2([z,x], y) = +F2([x,z], y)
        v = vadd(&v, &f.f2.eval(&l2_00.value(i, k), &y));
        f1_inv.mul_vec(&v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{nonabelian_shifted, r, sl2_homotopy};

    #[test]
    fn identity_and_composition() {
        let alg = sl2_homotopy();
        let id = Homomorphism::identity(&alg);
        assert!(id.check(&alg, &alg).passed);
        let id2 = id.compose(&id);
        assert_eq!(id2, id);
    }

    fn rescaling_iso() -> Homomorphism<Rat> {
        // (h, e, f) -> (h, 2e, f/2) is an sl2 automorphism; it rescales
        // l3(h, e, f) by 1, so it also preserves the homotopy.
        let f0 = Matrix::from_rows(vec![
            vec![r(1), r(0), r(0)],
            vec![r(0), r(2), r(0)],
            vec![r(0), r(0), Rat::new(1, 2)],
        ]);
        Homomorphism::strict(f0, Matrix::identity(1))
    }

    #[test]
    fn sl2_rescaling_is_a_homomorphism() {
        let alg = sl2_homotopy();
        let f = rescaling_iso();
        let rep = f.check(&alg, &alg);
        assert!(rep.passed, "{}", rep.summary_line());
    }

    #[test]
    fn broken_map_is_caught() {
        let alg = sl2_homotopy();
        let mut f = rescaling_iso();
        f.f0[(1, 1)] = r(3); // e -> 3e, f -> f/2 no longer preserves [e, f].
        let rep = f.check(&alg, &alg);
        assert!(!rep.passed);
        assert!(!rep.condition(HOM_CONDITION_NAMES[1]).unwrap().passed);
    }

    #[test]
    fn inverse_undoes() {
        let alg = sl2_homotopy();
        let f = rescaling_iso();
        let inv = f.invert().unwrap();
        assert!(inv.check(&alg, &alg).passed);
        let comp = inv.compose(&f);
        assert_eq!(comp, Homomorphism::identity(&alg));
    }

    #[test]
    fn transport_produces_isomorphic_structure() {
        let dst = nonabelian_shifted();
        // A random-looking invertible pair with a nonzero correction term.
        let f0 = Matrix::from_rows(vec![vec![r(1), r(2)], vec![r(1), r(3)]]);
        let f1 = Matrix::from_rows(vec![vec![r(2), r(1)], vec![r(1), r(1)]]);
        let mut f2 = Alt2Tensor::zero(2, 2);
        f2.set(0, 1, vec![r(1), r(-2)]);
        let f = Homomorphism { f0, f1, f2 };
        let src = f.transport(&dst).unwrap();
        // The transported structure satisfies the axioms and F is a
        // homomorphism from it to the target.
        assert!(src.check_axioms().passed);
        assert!(f.check(&src, &dst).passed);
        // Transport along the identity is the identity on structures.
        let id = Homomorphism::identity(&dst);
        assert_eq!(id.transport(&dst).unwrap(), dst);
    }

    #[test]
    fn transport_with_correction_on_sl2() {
        let dst = sl2_homotopy();
        let f0 = Matrix::from_rows(vec![
            vec![r(1), r(1), r(0)],
            vec![r(0), r(1), r(1)],
            vec![r(1), r(0), r(1)],
        ]);
        let f1 = Matrix::from_rows(vec![vec![r(3)]]);
        let mut f2 = Alt2Tensor::zero(3, 1);
        f2.set(0, 1, vec![r(1)]);
        f2.set(1, 2, vec![r(-1)]);
        let f = Homomorphism { f0, f1, f2 };
        assert_eq!(f.f0.rank(), 3);
        let src = f.transport(&dst).unwrap();
        let axioms = src.check_axioms();
        assert!(axioms.passed, "{}", axioms.summary_line());
        let hom = f.check(&src, &dst);
        assert!(hom.passed, "{}", hom.summary_line());
        // Composing with the inverse recovers a homomorphism the other way.
        let inv = f.invert().unwrap();
        assert!(inv.check(&dst, &src).passed);
    }
}
