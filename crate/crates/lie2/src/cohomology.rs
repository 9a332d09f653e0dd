//! Cohomology of a Lie 2-algebra with coefficients in a representation.
//!
//! A degree-`n` cochain is a family of multilinear maps indexed by
//! [`ComponentKey`]s `(p, q, s)` with `p + 2q + s = n`: each component takes
//! `p` alternating degree-0 arguments and `q` symmetric degree-(-1)
//! arguments and lands in `V_0` (`s = 0`) or `V_{-1}` (`s = -1`).
//! Components are stored as raw coefficient tables over strictly increasing
//! wedge tuples, weakly increasing symmetric tuples, and the coefficient
//! basis, with no combinatorial normalisation.
//!
//! The differential [`CochainComplex::apply_d`] is assembled from six
//! elementary operators: substitution of the algebra differential into a
//! symmetric slot, postcomposition with the coefficient differential, the
//! action/bracket terms, the action of the degree-(-1) part, the binary
//! action correction, and substitution of the ternary homotopy.  Cohomology
//! dimensions are computed by exact rank arithmetic.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::Lie2Algebra;
use crate::combinat::{sort_alternating, sort_symmetric, TupleTable};
use crate::matrix::{span_quotient_dim, Matrix};
use crate::rep::Representation;
use crate::{Error, Rat, Result};

/// Index of one component of a cochain: `p` wedge arguments, `q` symmetric
/// arguments, values in `V_s` for `s` in `{0, -1}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct ComponentKey {
    pub p: usize,
    pub q: usize,
    pub s: i8,
}

impl ComponentKey {
    pub const fn new(p: usize, q: usize, s: i8) -> Self {
        ComponentKey { p, q, s }
    }

    /// Total degree `p + 2q + s`.
    pub fn degree(&self) -> i64 {
        self.p as i64 + 2 * self.q as i64 + self.s as i64
    }
}

/// Degree-1 component holding a map `g_0 -> V_0`.
pub const KEY_B0: ComponentKey = ComponentKey::new(1, 0, 0);
/// Degree-1 component holding a map `g_{-1} -> V_{-1}`.
pub const KEY_B1: ComponentKey = ComponentKey::new(0, 1, -1);
/// Degree-1 component holding a map `g_0 ^ g_0 -> V_{-1}`.
pub const KEY_B2: ComponentKey = ComponentKey::new(2, 0, -1);
/// Degree-2 component holding a map `g_{-1} -> V_0`.
pub const KEY_PSI: ComponentKey = ComponentKey::new(0, 1, 0);
/// Degree-2 component holding a map `g_0 ^ g_0 -> V_0`.
pub const KEY_OMEGA: ComponentKey = ComponentKey::new(2, 0, 0);
/// Degree-2 component holding a map `g_0 (x) g_{-1} -> V_{-1}`.
pub const KEY_NU: ComponentKey = ComponentKey::new(1, 1, -1);
/// Degree-2 component holding a map `g_0 ^ g_0 ^ g_0 -> V_{-1}`.
pub const KEY_THETA: ComponentKey = ComponentKey::new(3, 0, -1);

/// All component keys of the given total degree, in canonical order.
pub fn keys_of_degree(degree: i64) -> Vec<ComponentKey> {
    let mut keys = Vec::new();
    for s in [-1i8, 0] {
        let rem = degree - s as i64;
        if rem < 0 {
            continue;
        }
        let mut q = 0i64;
        while 2 * q <= rem {
            keys.push(ComponentKey::new((rem - 2 * q) as usize, q as usize, s));
            q += 1;
        }
    }
    keys.sort();
    keys
}

/// Human-readable argument signature of a component, e.g. `(x,y,a)` for two
/// wedge slots and one symmetric slot.
pub fn block_signature(key: &ComponentKey) -> String {
    const XS: [&str; 7] = ["x", "y", "z", "t", "u", "v", "w"];
    const AS: [&str; 5] = ["a", "b", "c", "d", "e"];
    let mut parts: Vec<String> = Vec::new();
    for i in 0..key.p {
        parts.push(XS.get(i).map_or_else(|| format!("x{}", i + 1), |s| s.to_string()));
    }
    for i in 0..key.q {
        parts.push(AS.get(i).map_or_else(|| format!("a{}", i + 1), |s| s.to_string()));
    }
    format!("({})", parts.join(","))
}

/// A cochain: one coefficient table per component key of its degree.
///
/// Entry layout within a component `(p, q, s)`: for wedge tuple of rank `w`,
/// symmetric tuple of rank `y` and coefficient index `t`, the entry sits at
/// `(w * n_sym + y) * t_dim + t`.
#[derive(Clone, PartialEq, Debug)]
pub struct Cochain {
    pub degree: i64,
    pub components: BTreeMap<ComponentKey, Vec<Rat>>,
}

/// The cochain complex of an algebra with coefficients in a representation.
///
/// `max_degree` bounds the degrees in which the differential may be applied;
/// requests beyond it fail with [`Error::DegreeOutOfRange`].
#[derive(Clone, Debug)]
pub struct CochainComplex {
    pub algebra: Lie2Algebra<Rat>,
    pub rep: Representation,
    pub max_degree: i64,
}

/// Default bound on cochain degrees.
pub const DEFAULT_MAX_DEGREE: i64 = 3;

impl CochainComplex {
    /// Builds the complex with the default degree bound.
    pub fn new(algebra: Lie2Algebra<Rat>, rep: Representation) -> Result<Self> {
        Self::with_max_degree(algebra, rep, DEFAULT_MAX_DEGREE)
    }

    /// Builds the complex with an explicit degree bound.
    pub fn with_max_degree(
        algebra: Lie2Algebra<Rat>,
        rep: Representation,
        max_degree: i64,
    ) -> Result<Self> {
        if rep.mu0.len() != algebra.dim0 || rep.mu1.len() != algebra.dim1 {
            return Err(Error::InvalidInput(format!(
                "representation is for an algebra of dimensions ({}, {}), not ({}, {})",
                rep.mu0.len(),
                rep.mu1.len(),
                algebra.dim0,
                algebra.dim1
            )));
        }
        if rep.mu2.dim_args() != algebra.dim0 {
            return Err(Error::InvalidInput(
                "binary action correction has wrong arity".into(),
            ));
        }
        if max_degree < 0 {
            return Err(Error::InvalidInput(
                "maximum degree must be nonnegative".into(),
            ));
        }
        Ok(CochainComplex {
            algebra,
            rep,
            max_degree,
        })
    }

    /// Dimension of the coefficient space `V_s`.
    pub fn value_dim(&self, s: i8) -> usize {
        if s == 0 {
            self.rep.v0_dim()
        } else {
            self.rep.v1_dim()
        }
    }

    /// Dimension of one component.
    pub fn component_dim(&self, key: &ComponentKey) -> usize {
        crate::combinat::binomial(self.algebra.dim0, key.p)
            * crate::combinat::multiset_count(self.algebra.dim1, key.q)
            * self.value_dim(key.s)
    }

    /// Dimensions of all components of a degree, in canonical order.
    pub fn component_dims(&self, degree: i64) -> Vec<(ComponentKey, usize)> {
        keys_of_degree(degree)
            .into_iter()
            .map(|k| (k, self.component_dim(&k)))
            .collect()
    }

    /// Total dimension of the degree-`n` cochain space.
    pub fn dim(&self, degree: i64) -> usize {
        self.component_dims(degree).iter().map(|(_, d)| d).sum()
    }

    fn source_view<'a>(&self, f: &'a Cochain, key: ComponentKey) -> Option<SourceView<'a>> {
        let data = f.components.get(&key)?;
        if data.is_empty() {
            return None;
        }
        Some(SourceView {
            data,
            wt: TupleTable::alternating(self.algebra.dim0, key.p),
            st: TupleTable::symmetric(self.algebra.dim1, key.q),
            t_dim: self.value_dim(key.s),
        })
    }

    /// Applies the differential to a cochain.
    pub fn apply_d(&self, f: &Cochain) -> Result<Cochain> {
        let out_degree = f.degree + 1;
        if out_degree > self.max_degree {
            return Err(Error::DegreeOutOfRange {
                degree: out_degree,
                max_degree: self.max_degree,
            });
        }
        let m = self.algebra.dim0;
        let n = self.algebra.dim1;
        let mut out = Cochain::zero(self, out_degree);

        for key in keys_of_degree(out_degree) {
            let (pp, qq, s) = (key.p, key.q, key.s);
            let wt_out = TupleTable::alternating(m, pp);
            let st_out = TupleTable::symmetric(n, qq);
            let t_out = self.value_dim(s);
            if wt_out.is_empty() || st_out.is_empty() || t_out == 0 {
                continue;
            }
            let mut acc = vec![Rat::zero(); wt_out.len() * st_out.len() * t_out];

            // Views of the up-to-six source components feeding this key.
            let src_dhat = if qq >= 1 {
                self.source_view(f, ComponentKey::new(pp + 1, qq - 1, s))
            } else {
                None
            };
            let src_post = if s == 0 {
                self.source_view(f, ComponentKey::new(pp, qq, -1))
            } else {
                None
            };
            let src_act = if pp >= 1 {
                self.source_view(f, ComponentKey::new(pp - 1, qq, s))
            } else {
                None
            };
            let src_act1 = if s == -1 && qq >= 1 {
                self.source_view(f, ComponentKey::new(pp, qq - 1, 0))
            } else {
                None
            };
            let src_act2 = if s == -1 && pp >= 2 {
                self.source_view(f, ComponentKey::new(pp - 2, qq, 0))
            } else {
                None
            };
            let src_hty = if pp >= 3 {
                self.source_view(f, ComponentKey::new(pp - 3, qq + 1, s))
            } else {
                None
            };

            for w_rank in 0..wt_out.len() {
                let w = wt_out.tuple(w_rank).to_vec();
                for s_rank in 0..st_out.len() {
                    let sy = st_out.tuple(s_rank).to_vec();
                    let base = (w_rank * st_out.len() + s_rank) * t_out;
                    let slot = &mut acc[base..base + t_out];

                    // (1) Substitute the algebra differential into one
                    // symmetric slot, appending the result as the last wedge
                    // argument; overall sign (-1)^(p+1).
                    if let Some(sv) = &src_dhat {
                        let pref = pm(pp + 1);
                        for i in 0..qq {
                            let mut sy_red = sy.clone();
                            sy_red.remove(i);
                            for k in 0..m {
                                let c = &self.algebra.d[(k, sy[i])];
                                if c.is_zero() {
                                    continue;
                                }
                                let mut w_ext = w.clone();
                                w_ext.push(k);
                                if let Some((sgn, val)) = sv.value(&w_ext, &sy_red) {
                                    axpy(slot, &(Rat::int(pref * sgn) * c.clone()), val);
                                }
                            }
                        }
                    }

                    // (2) Postcompose a V_{-1}-valued component with the
                    // coefficient differential; sign (-1)^(p+2q).
                    if let Some(sv) = &src_post {
                        if let Some((sgn, val)) = sv.value(&w, &sy) {
                            axpy_matvec(
                                slot,
                                &Rat::int(pm(pp) * sgn),
                                &self.rep.complex.partial,
                                val,
                            );
                        }
                    }

                    // (3) Action/bracket terms from one fewer wedge slot.
                    if let Some(sv) = &src_act {
                        for i in 0..pp {
                            let xi = w[i];
                            let si = pm(i);
                            let mut w_red = w.clone();
                            w_red.remove(i);
                            // Action of the removed argument on the value.
                            if let Some((sgn, val)) = sv.value(&w_red, &sy) {
                                let mat = if s == 0 {
                                    &self.rep.mu0[xi].0
                                } else {
                                    &self.rep.mu0[xi].1
                                };
                                axpy_matvec(slot, &Rat::int(si * sgn), mat, val);
                            }
                            // Bracket of the removed argument into each
                            // symmetric slot, with opposite sign.
                            for j in 0..qq {
                                let br = self.algebra.l2_01.value(xi, sy[j]);
                                for (k, c) in br.iter().enumerate() {
                                    if c.is_zero() {
                                        continue;
                                    }
                                    let mut sy_rep = sy.clone();
                                    sy_rep[j] = k;
                                    if let Some((sgn, val)) = sv.value(&w_red, &sy_rep) {
                                        axpy(slot, &(Rat::int(-si * sgn) * c.clone()), val);
                                    }
                                }
                            }
                        }
                        // Pairwise brackets, placed in the first wedge slot.
                        for i in 0..pp {
                            for j in (i + 1)..pp {
                                let br = self.algebra.l2_00.value(w[i], w[j]);
                                let sij = pm(i + j);
                                let mut rest = w.clone();
                                rest.remove(j);
                                rest.remove(i);
                                for (k, c) in br.iter().enumerate() {
                                    if c.is_zero() {
                                        continue;
                                    }
                                    let mut args = Vec::with_capacity(pp - 1);
                                    args.push(k);
                                    args.extend_from_slice(&rest);
                                    if let Some((sgn, val)) = sv.value(&args, &sy) {
                                        axpy(slot, &(Rat::int(sij * sgn) * c.clone()), val);
                                    }
                                }
                            }
                        }
                    }

                    // (4) Action of one symmetric argument on a V_0-valued
                    // component; sign (-1)^p.
                    if let Some(sv) = &src_act1 {
                        let pref = pm(pp);
                        for i in 0..qq {
                            let mut sy_red = sy.clone();
                            sy_red.remove(i);
                            if let Some((sgn, val)) = sv.value(&w, &sy_red) {
                                axpy_matvec(
                                    slot,
                                    &Rat::int(pref * sgn),
                                    &self.rep.mu1[sy[i]],
                                    val,
                                );
                            }
                        }
                    }

                    // (5) Binary action correction on a pair of wedge
                    // arguments; sign -(-1)^(p+r+t).
                    if let Some(sv) = &src_act2 {
                        for r in 0..pp {
                            for t in (r + 1)..pp {
                                let mut rest = w.clone();
                                rest.remove(t);
                                rest.remove(r);
                                if let Some((sgn, val)) = sv.value(&rest, &sy) {
                                    let mat = self.rep.mu2_value(w[r], w[t]);
                                    axpy_matvec(
                                        slot,
                                        &Rat::int(-pm(pp + r + t) * sgn),
                                        &mat,
                                        val,
                                    );
                                }
                            }
                        }
                    }

                    // (6) Substitute the ternary homotopy of three wedge
                    // arguments into a new last symmetric slot; sign
                    // (-1)^(r+t+u).
                    if let Some(sv) = &src_hty {
                        for r in 0..pp {
                            for t in (r + 1)..pp {
                                for u in (t + 1)..pp {
                                    let lv = self.algebra.l3.value(w[r], w[t], w[u]);
                                    if lv.iter().all(|c| c.is_zero()) {
                                        continue;
                                    }
                                    let mut rest = w.clone();
                                    rest.remove(u);
                                    rest.remove(t);
                                    rest.remove(r);
                                    let pref = pm(r + t + u);
                                    for (k, c) in lv.iter().enumerate() {
                                        if c.is_zero() {
                                            continue;
                                        }
                                        let mut sy_ext = sy.clone();
                                        sy_ext.push(k);
                                        if let Some((sgn, val)) = sv.value(&rest, &sy_ext) {
                                            axpy(
                                                slot,
                                                &(Rat::int(pref * sgn) * c.clone()),
                                                val,
                                            );
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            out.components.insert(key, acc);
        }
        Ok(out)
    }

    /// The matrix of the differential from degree `n` to degree `n + 1`,
    /// acting on flattened cochains.
    pub fn d_matrix(&self, degree: i64) -> Result<Matrix<Rat>> {
        let dn = self.dim(degree);
        let dn1 = self.dim(degree + 1);
        let mut cols = Vec::with_capacity(dn);
        for idx in 0..dn {
            let mut flat = vec![Rat::zero(); dn];
            flat[idx] = Rat::int(1);
            let basis = Cochain::from_flat(self, degree, flat)?;
            cols.push(self.apply_d(&basis)?.flatten(self));
        }
        Ok(Matrix::from_cols(dn1, &cols))
    }

    /// Dimension of the degree-`n` cohomology.
    ///
    /// Verifies that the differential squares to zero through degree `n`
    /// before quotienting; a failure reports [`Error::BrokenComplex`].
    pub fn cohomology_dim(&self, degree: i64) -> Result<usize> {
        if degree < -1 {
            return Ok(0);
        }
        let d_n = self.d_matrix(degree)?;
        let kernel = d_n.kernel_basis();
        if degree == -1 {
            return Ok(kernel.len());
        }
        let d_prev = self.d_matrix(degree - 1)?;
        if !d_n.mul(&d_prev).is_zero() {
            return Err(Error::BrokenComplex {
                degree,
                detail: "the differential does not square to zero".into(),
            });
        }
        let image: Vec<Vec<Rat>> = (0..d_prev.ncols()).map(|j| d_prev.col(j)).collect();
        span_quotient_dim(&kernel, &image)
    }
}

/// Read-only handle on one source component during differentiation.
struct SourceView<'a> {
    data: &'a [Rat],
    wt: TupleTable,
    st: TupleTable,
    t_dim: usize,
}

impl SourceView<'_> {
    /// Looks up the value on possibly unsorted arguments: wedge arguments
    /// are sorted with a sign (zero on repeats), symmetric arguments are
    /// sorted freely.
    fn value(&self, wedge: &[usize], sym: &[usize]) -> Option<(i64, &[Rat])> {
        let (sign, w_sorted) = sort_alternating(wedge)?;
        let sy_sorted = sort_symmetric(sym);
        let wr = self.wt.rank(&w_sorted)?;
        let sr = self.st.rank(&sy_sorted)?;
        let base = (wr * self.st.len() + sr) * self.t_dim;
        Some((sign as i64, &self.data[base..base + self.t_dim]))
    }
}

fn pm(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn axpy(out: &mut [Rat], c: &Rat, src: &[Rat]) {
    if c.is_zero() {
        return;
    }
    for (o, s) in out.iter_mut().zip(src) {
        *o = o.clone() + c.clone() * s.clone();
    }
}

fn axpy_matvec(out: &mut [Rat], c: &Rat, mat: &Matrix<Rat>, src: &[Rat]) {
    if c.is_zero() {
        return;
    }
    let v = mat.mul_vec(src);
    for (o, s) in out.iter_mut().zip(v) {
        *o = o.clone() + c.clone() * s;
    }
}

impl Cochain {
    /// The zero cochain, with every component of the degree materialised.
    pub fn zero(ctx: &CochainComplex, degree: i64) -> Self {
        let mut components = BTreeMap::new();
        for key in keys_of_degree(degree) {
            components.insert(key, vec![Rat::zero(); ctx.component_dim(&key)]);
        }
        Cochain { degree, components }
    }

    /// Rebuilds a cochain from its flattened coefficient vector.
    pub fn from_flat(ctx: &CochainComplex, degree: i64, data: Vec<Rat>) -> Result<Self> {
        if data.len() != ctx.dim(degree) {
            return Err(Error::InvalidInput(format!(
                "degree-{degree} cochain has dimension {}, got {} coefficients",
                ctx.dim(degree),
                data.len()
            )));
        }
        let mut components = BTreeMap::new();
        let mut offset = 0;
        for key in keys_of_degree(degree) {
            let d = ctx.component_dim(&key);
            components.insert(key, data[offset..offset + d].to_vec());
            offset += d;
        }
        Ok(Cochain { degree, components })
    }

    /// Flattens to a single coefficient vector in canonical component order.
    pub fn flatten(&self, ctx: &CochainComplex) -> Vec<Rat> {
        let mut out = Vec::with_capacity(ctx.dim(self.degree));
        for key in keys_of_degree(self.degree) {
            match self.components.get(&key) {
                Some(v) => out.extend(v.iter().cloned()),
                None => out.extend(vec![Rat::zero(); ctx.component_dim(&key)]),
            }
        }
        out
    }

    pub fn component(&self, key: &ComponentKey) -> Option<&[Rat]> {
        self.components.get(key).map(|v| v.as_slice())
    }

    /// Signed lookup of one component value on basis arguments; wedge
    /// arguments may be unsorted or repeating, symmetric arguments unsorted.
    pub fn value(
        &self,
        ctx: &CochainComplex,
        key: &ComponentKey,
        wedge: &[usize],
        sym: &[usize],
    ) -> Vec<Rat> {
        let t_dim = ctx.value_dim(key.s);
        let zero = vec![Rat::zero(); t_dim];
        let Some(data) = self.components.get(key) else {
            return zero;
        };
        if data.is_empty() {
            return zero;
        }
        let Some((sign, w_sorted)) = sort_alternating(wedge) else {
            return zero;
        };
        let sy_sorted = sort_symmetric(sym);
        let wt = TupleTable::alternating(ctx.algebra.dim0, key.p);
        let st = TupleTable::symmetric(ctx.algebra.dim1, key.q);
        let (Some(wr), Some(sr)) = (wt.rank(&w_sorted), st.rank(&sy_sorted)) else {
            return zero;
        };
        let base = (wr * st.len() + sr) * t_dim;
        data[base..base + t_dim]
            .iter()
            .map(|x| {
                if sign == 1 {
                    x.clone()
                } else {
                    -x.clone()
                }
            })
            .collect()
    }

    /// Writes one component value; arguments must be in canonical order.
    pub fn set_value(
        &mut self,
        ctx: &CochainComplex,
        key: &ComponentKey,
        wedge: &[usize],
        sym: &[usize],
        val: Vec<Rat>,
    ) {
        let t_dim = ctx.value_dim(key.s);
        assert_eq!(val.len(), t_dim, "value has wrong coefficient dimension");
        assert!(
            wedge.windows(2).all(|w| w[0] < w[1]),
            "wedge arguments must be strictly increasing"
        );
        assert!(
            sym.windows(2).all(|w| w[0] <= w[1]),
            "symmetric arguments must be weakly increasing"
        );
        let wt = TupleTable::alternating(ctx.algebra.dim0, key.p);
        let st = TupleTable::symmetric(ctx.algebra.dim1, key.q);
        let wr = wt.rank(wedge).expect("wedge tuple out of range");
        let sr = st.rank(sym).expect("symmetric tuple out of range");
        let entry = self
            .components
            .entry(*key)
            .or_insert_with(|| vec![Rat::zero(); ctx.component_dim(key)]);
        let base = (wr * st.len() + sr) * t_dim;
        entry[base..base + t_dim].clone_from_slice(&val);
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree, "cochain degrees differ");
        let mut components = self.components.clone();
        for (key, vals) in &other.components {
            components
                .entry(*key)
                .and_modify(|v| {
                    for (a, b) in v.iter_mut().zip(vals) {
                        *a = a.clone() + b.clone();
                    }
                })
                .or_insert_with(|| vals.clone());
        }
        Cochain {
            degree: self.degree,
            components,
        }
    }

    pub fn neg(&self) -> Cochain {
        self.scale(&Rat::int(-1))
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Cochain {
        Cochain {
            degree: self.degree,
            components: self
                .components
                .iter()
                .map(|(k, v)| (*k, v.iter().map(|x| c.clone() * x.clone()).collect()))
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components
            .values()
            .all(|v| v.iter().all(|x| x.is_zero()))
    }
}
