//! Shared fixtures for unit tests (compiled only under `cfg(test)`).

use crate::matrix::Matrix;
use crate::rational::Rat;
use crate::tensor::{Alt2Tensor, Alt3Tensor, MixedTensor};
use crate::Lie2Algebra;

/// Shorthand integer rational.
pub fn r(x: i64) -> Rat {
    Rat::int(x)
}

/// sl2 with basis (h, e, f) = (e1, e2, e3), zero differential, zero mixed
/// bracket, and the invariant-form ternary homotopy l3(h, e, f) = 8 on a
/// one-dimensional g_{-1}.  Hand-transcribed structure constants; doubles as
/// the oracle for the quadratic-algebra builder.
pub fn sl2_homotopy() -> Lie2Algebra<Rat> {
    let mut l2_00 = Alt2Tensor::zero(3, 3);
    l2_00.set(0, 1, vec![r(0), r(2), r(0)]); // [h, e] = 2e
    l2_00.set(0, 2, vec![r(0), r(0), r(-2)]); // [h, f] = -2f
    l2_00.set(1, 2, vec![r(1), r(0), r(0)]); // [e, f] = h
    let mut l3 = Alt3Tensor::zero(3, 1);
    l3.set(0, 1, 2, vec![r(8)]);
    Lie2Algebra::new(
        3,
        1,
        Matrix::zeros(3, 1),
        l2_00,
        MixedTensor::zero(3, 1, 1),
        l3,
    )
    .unwrap()
}

/// gl2 = sl2 + central z (basis h, e, f, z) acting on a 2-dimensional
/// g_{-1} by the standard representation, z acting as the identity; d = 0,
/// l3 = 0.  A valid algebra with four-dimensional g_0.
pub fn gl2_standard() -> Lie2Algebra<Rat> {
    let mut alg = Lie2Algebra::<Rat>::zero(4, 2);
    alg.l2_00.set(0, 1, vec![r(0), r(2), r(0), r(0)]);
    alg.l2_00.set(0, 2, vec![r(0), r(0), r(-2), r(0)]);
    alg.l2_00.set(1, 2, vec![r(1), r(0), r(0), r(0)]);
    alg.l2_01.set(0, 0, vec![r(1), r(0)]);
    alg.l2_01.set(0, 1, vec![r(0), r(-1)]);
    alg.l2_01.set(1, 1, vec![r(1), r(0)]);
    alg.l2_01.set(2, 0, vec![r(0), r(1)]);
    alg.l2_01.set(3, 0, vec![r(1), r(0)]);
    alg.l2_01.set(3, 1, vec![r(0), r(1)]);
    alg
}

/// A small algebra with nonzero differential and mixed bracket: the
/// two-dimensional nonabelian Lie algebra a = span(x1, x2), [x1, x2] = x2,
/// acting on itself shifted into degree -1 by the adjoint action, with d the
/// identity.  All five axiom families have nontrivial instances except the
/// coherence axiom (dim too small).
pub fn nonabelian_shifted() -> Lie2Algebra<Rat> {
    let mut alg = Lie2Algebra::<Rat>::zero(2, 2);
    alg.d = Matrix::identity(2);
    alg.l2_00.set(0, 1, vec![r(0), r(1)]); // [x1, x2] = x2
    alg.l2_01.set(0, 1, vec![r(0), r(1)]); // [x1, f2] = f2
    alg.l2_01.set(1, 0, vec![r(0), r(-1)]); // [x2, f1] = -f2
    alg
}

/// Direct sum of two algebras: block-diagonal differential, componentwise
/// brackets and homotopy, no cross terms.  Combining fixtures this way
/// yields algebras where every structure map is nonzero at once.
pub fn direct_sum(a: &Lie2Algebra<Rat>, b: &Lie2Algebra<Rat>) -> Lie2Algebra<Rat> {
    let m = a.dim0 + b.dim0;
    let n = a.dim1 + b.dim1;
    let embed0 = |which: usize, v: &[Rat]| -> Vec<Rat> {
        let mut out = vec![r(0); m];
        let off = if which == 0 { 0 } else { a.dim0 };
        for (i, x) in v.iter().enumerate() {
            out[off + i] = x.clone();
        }
        out
    };
    let embed1 = |which: usize, v: &[Rat]| -> Vec<Rat> {
        let mut out = vec![r(0); n];
        let off = if which == 0 { 0 } else { a.dim1 };
        for (i, x) in v.iter().enumerate() {
            out[off + i] = x.clone();
        }
        out
    };
    // Splits a summand index into (side, local index).
    let side0 = |i: usize| if i < a.dim0 { (0, i) } else { (1, i - a.dim0) };
    let side1 = |t: usize| if t < a.dim1 { (0, t) } else { (1, t - a.dim1) };

    let d = Matrix::from_fn(m, n, |i, t| {
        let (si, li) = side0(i);
        let (st, lt) = side1(t);
        if si != st {
            return r(0);
        }
        if si == 0 {
            a.d[(li, lt)].clone()
        } else {
            b.d[(li, lt)].clone()
        }
    });
    let l2_00 = Alt2Tensor::from_fn(m, m, |i, j| {
        let (si, li) = side0(i);
        let (sj, lj) = side0(j);
        if si != sj {
            return vec![r(0); m];
        }
        if si == 0 {
            embed0(0, &a.l2_00.value(li, lj))
        } else {
            embed0(1, &b.l2_00.value(li, lj))
        }
    });
    let l2_01 = MixedTensor::from_fn(m, n, n, |i, t| {
        let (si, li) = side0(i);
        let (st, lt) = side1(t);
        if si != st {
            return vec![r(0); n];
        }
        if si == 0 {
            embed1(0, &a.l2_01.value(li, lt))
        } else {
            embed1(1, &b.l2_01.value(li, lt))
        }
    });
    let l3 = Alt3Tensor::from_fn(m, n, |i, j, k| {
        let (si, li) = side0(i);
        let (sj, lj) = side0(j);
        let (sk, lk) = side0(k);
        if si != sj || sj != sk {
            return vec![r(0); n];
        }
        if si == 0 {
            embed1(0, &a.l3.value(li, lj, lk))
        } else {
            embed1(1, &b.l3.value(li, lj, lk))
        }
    });
    Lie2Algebra::new(m, n, d, l2_00, l2_01, l3).unwrap()
}
