//! 2-term Z∞-algebras, their homomorphisms and the skeletal case.
//!
//! A 2-term structure is a complex `d: V₁ → V₀` with a graded binary
//! operation `l₂` (components `V₀×V₀→V₀`, `V₀×V₁→V₁`, `V₁×V₀→V₁`; the
//! `V₁×V₁` component is zero and not stored) and a ternary `l₃: V₀³ → V₁`.
//! The same container carries the `m₂`, `m₃` data of a 2-term A∞-algebra in
//! [`crate::dendriform`].
//!
//! [`check_zinf`] evaluates the conditions below on every basis tuple
//! (`x, y, z, t ∈ V₀`, `h, k ∈ V₁`):
//!
//! ```text
//! b1  d l₂(x,h) = l₂(x,dh)
//! b2  d l₂(h,x) = l₂(dh,x)
//! c   l₂(dh,k)  = l₂(h,dk)
//! d   d l₃(x,y,z) = l₂(x,l₂(y,z)) + l₂(x,l₂(z,y)) − l₂(l₂(x,y),z)
//! e1  l₃(x,y,dh)  = l₂(x,l₂(y,h)) + l₂(x,l₂(h,y)) − l₂(l₂(x,y),h)
//! e2  l₃(x,dh,z)  = l₂(x,l₂(h,z)) + l₂(x,l₂(z,h)) − l₂(l₂(x,h),z)
//! e3  l₃(dh,y,z)  = l₂(h,l₂(y,z)) + l₂(h,l₂(z,y)) − l₂(l₂(h,y),z)
//! f   l₂(x,l₃(y,z,t)) + l₂(x,l₃(z,y,t)) + l₃(x,l₂(y,z)+l₂(z,y),t) + l₂(l₃(x,y,z),t)
//!     − l₂(x,l₃(z,t,y)) − l₂(x,l₃(t,z,y)) − l₃(x,y,l₂(z,t)+l₂(t,z)) − l₃(l₂(x,y),z,t) = 0
//! ```
//!
//! The report also carries reference residuals `e1-literal`, `e2-literal`
//! and `e3-literal` for the alternative sign pattern
//!
//! ```text
//! l₃(x,y,dh) = −l₂(x,l₂(h,y))
//! l₃(x,dh,z) = l₂(l₂(x,h),z) − l₂(x,l₂(h,z)) − l₂(x,l₂(z,h))
//! l₃(dh,y,z) = l₂(l₂(h,y),z) − l₂(h,l₂(y,z)) − l₂(h,l₂(z,y))
//! ```
//!
//! which is incompatible with `d` under application of `d`; it never
//! affects the pass flag.

use crate::algebra::{check_bimodule, check_zinbiel, Algebra, Bimodule};
use crate::cohomology::{coboundary, Cochain};
use crate::error::{ensure_dims, Error, Result};
use crate::linalg::{add_vec, sub_vec, unit, Matrix};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::{input_tuples, Tensor};

/// Graded 2-term data `(d, l₂, l₃)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoTerm<T> {
    d: Matrix<T>,
    l2_00: Tensor<T>,
    l2_01: Tensor<T>,
    l2_10: Tensor<T>,
    l3: Tensor<T>,
}

pub type TwoTermZinf<T> = TwoTerm<T>;

impl<T: Scalar> TwoTerm<T> {
    /// `d` is `dim V₀ × dim V₁`; tensors have shapes `(V₀,V₀,V₀)`,
    /// `(V₀,V₁,V₁)`, `(V₁,V₀,V₁)` and `(V₀,V₀,V₀,V₁)`.
    pub fn new(d: Matrix<T>, l2_00: Tensor<T>, l2_01: Tensor<T>, l2_10: Tensor<T>, l3: Tensor<T>) -> Result<Self> {
        let (n0, n1) = d.shape();
        let want = [
            ("l2_00", l2_00.shape(), vec![n0, n0, n0]),
            ("l2_01", l2_01.shape(), vec![n0, n1, n1]),
            ("l2_10", l2_10.shape(), vec![n1, n0, n1]),
            ("l3", l3.shape(), vec![n0, n0, n0, n1]),
        ];
        for (name, got, expected) in want {
            ensure_dims(got == expected.as_slice(), || {
                format!("{name} has shape {got:?}, expected {expected:?} for d of shape {n0}x{n1}")
            })?;
        }
        Ok(Self { d, l2_00, l2_01, l2_10, l3 })
    }

    pub fn zero(n0: usize, n1: usize) -> Self {
        Self {
            d: Matrix::zeros(n0, n1),
            l2_00: Tensor::zeros(&[n0, n0, n0]),
            l2_01: Tensor::zeros(&[n0, n1, n1]),
            l2_10: Tensor::zeros(&[n1, n0, n1]),
            l3: Tensor::zeros(&[n0, n0, n0, n1]),
        }
    }

    pub fn dim0(&self) -> usize {
        self.d.rows()
    }

    pub fn dim1(&self) -> usize {
        self.d.cols()
    }

    pub fn d(&self) -> &Matrix<T> {
        &self.d
    }

    pub fn l2_00(&self) -> &Tensor<T> {
        &self.l2_00
    }

    pub fn l2_01(&self) -> &Tensor<T> {
        &self.l2_01
    }

    pub fn l2_10(&self) -> &Tensor<T> {
        &self.l2_10
    }

    pub fn l3(&self) -> &Tensor<T> {
        &self.l3
    }

    pub fn is_skeletal(&self) -> bool {
        self.d.is_zero()
    }

    pub fn is_strict(&self) -> bool {
        self.l3.is_zero()
    }

    pub fn with_l3(&self, l3: Tensor<T>) -> Result<Self> {
        Self::new(self.d.clone(), self.l2_00.clone(), self.l2_01.clone(), self.l2_10.clone(), l3)
    }

    pub fn diff(&self, h: &[T]) -> Vec<T> {
        self.d.mul_vec(h)
    }

    pub fn mul00(&self, x: &[T], y: &[T]) -> Vec<T> {
        self.l2_00.apply(&[x, y])
    }

    pub fn mul01(&self, x: &[T], h: &[T]) -> Vec<T> {
        self.l2_01.apply(&[x, h])
    }

    pub fn mul10(&self, h: &[T], x: &[T]) -> Vec<T> {
        self.l2_10.apply(&[h, x])
    }

    pub fn tern(&self, x: &[T], y: &[T], z: &[T]) -> Vec<T> {
        self.l3.apply(&[x, y, z])
    }

    pub(crate) fn basis0(&self) -> Vec<Vec<T>> {
        (0..self.dim0()).map(|i| unit(self.dim0(), i)).collect()
    }

    pub(crate) fn basis1(&self) -> Vec<Vec<T>> {
        (0..self.dim1()).map(|i| unit(self.dim1(), i)).collect()
    }
}

fn sum<T: Scalar>(terms: &[Vec<T>]) -> Vec<T> {
    let mut it = terms.iter();
    let first = it.next().expect("at least one term").clone();
    it.fold(first, |acc, t| add_vec(&acc, t))
}

/// Residuals of `b1, b2, c, d, e1, e2, e3, f` on all basis tuples.
pub fn check_zinf<T: Scalar>(l: &TwoTermZinf<T>) -> CheckReport<T> {
    let mut report = CheckReport::new();
    for id in ["b1", "b2", "c", "d", "e1", "e2", "e3", "f"] {
        report.condition(id);
    }
    for id in ["e1-literal", "e2-literal", "e3-literal"] {
        report.reference_condition(id);
    }
    let (n0, n1) = (l.dim0(), l.dim1());
    let e0 = l.basis0();
    let e1 = l.basis1();
    let dh: Vec<Vec<T>> = e1.iter().map(|h| l.diff(h)).collect();

    for t in input_tuples(&[n0, n1]) {
        let (x, h) = (&e0[t[0]], &e1[t[1]]);
        report.record("b1", &t, sub_vec(&l.diff(&l.mul01(x, h)), &l.mul00(x, &dh[t[1]])));
        report.record("b2", &t, sub_vec(&l.diff(&l.mul10(h, x)), &l.mul00(&dh[t[1]], x)));
    }
    for t in input_tuples(&[n1, n1]) {
        let (h, k) = (&e1[t[0]], &e1[t[1]]);
        report.record("c", &t, sub_vec(&l.mul01(&dh[t[0]], k), &l.mul10(h, &dh[t[1]])));
    }
    for t in input_tuples(&[n0, n0, n0]) {
        let (x, y, z) = (&e0[t[0]], &e0[t[1]], &e0[t[2]]);
        let rhs = sub_vec(
            &add_vec(&l.mul00(x, &l.mul00(y, z)), &l.mul00(x, &l.mul00(z, y))),
            &l.mul00(&l.mul00(x, y), z),
        );
        report.record("d", &t, sub_vec(&l.diff(&l.tern(x, y, z)), &rhs));
    }
    for t in input_tuples(&[n0, n0, n1]) {
        let (x, y, h) = (&e0[t[0]], &e0[t[1]], &e1[t[2]]);
        let xyh = l.mul01(x, &l.mul01(y, h));
        let xhy = l.mul01(x, &l.mul10(h, y));
        let xy_h = l.mul01(&l.mul00(x, y), h);
        let lhs = l.tern(x, y, &dh[t[2]]);
        report.record("e1", &t, sub_vec(&lhs, &sub_vec(&add_vec(&xyh, &xhy), &xy_h)));
        report.record_reference("e1-literal", &t, add_vec(&lhs, &xhy));
    }
    for t in input_tuples(&[n0, n1, n0]) {
        let (x, h, z) = (&e0[t[0]], &e1[t[1]], &e0[t[2]]);
        let xhz = l.mul01(x, &l.mul10(h, z));
        let xzh = l.mul01(x, &l.mul01(z, h));
        let xh_z = l.mul10(&l.mul01(x, h), z);
        let lhs = l.tern(x, &dh[t[1]], z);
        report.record("e2", &t, sub_vec(&lhs, &sub_vec(&add_vec(&xhz, &xzh), &xh_z)));
        report.record_reference("e2-literal", &t, sub_vec(&lhs, &sub_vec(&sub_vec(&xh_z, &xhz), &xzh)));
    }
    for t in input_tuples(&[n1, n0, n0]) {
        let (h, y, z) = (&e1[t[0]], &e0[t[1]], &e0[t[2]]);
        let hyz = l.mul10(h, &l.mul00(y, z));
        let hzy = l.mul10(h, &l.mul00(z, y));
        let hy_z = l.mul10(&l.mul10(h, y), z);
        let lhs = l.tern(&dh[t[0]], y, z);
        report.record("e3", &t, sub_vec(&lhs, &sub_vec(&add_vec(&hyz, &hzy), &hy_z)));
        report.record_reference("e3-literal", &t, sub_vec(&lhs, &sub_vec(&sub_vec(&hy_z, &hyz), &hzy)));
    }
    for t in input_tuples(&[n0, n0, n0, n0]) {
        report.record("f", &t, f_residual(l, &e0[t[0]], &e0[t[1]], &e0[t[2]], &e0[t[3]]));
    }
    report
}

/// The left-hand side of condition `f` at `(x, y, z, t)`.
pub fn f_residual<T: Scalar>(l: &TwoTermZinf<T>, x: &[T], y: &[T], z: &[T], t: &[T]) -> Vec<T> {
    let yz = add_vec(&l.mul00(y, z), &l.mul00(z, y));
    let zt = add_vec(&l.mul00(z, t), &l.mul00(t, z));
    let plus = sum(&[
        l.mul01(x, &l.tern(y, z, t)),
        l.mul01(x, &l.tern(z, y, t)),
        l.tern(x, &yz, t),
        l.mul10(&l.tern(x, y, z), t),
    ]);
    let minus = sum(&[
        l.mul01(x, &l.tern(z, t, y)),
        l.mul01(x, &l.tern(t, z, y)),
        l.tern(x, y, &zt),
        l.tern(&l.mul00(x, y), z, t),
    ]);
    sub_vec(&plus, &minus)
}

/// A Z∞-homomorphism `(f₀, f₁, f₂)`; `f₂` has shape `(V₀, V₀, V₁′)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZinfMorphism<T> {
    pub f0: Matrix<T>,
    pub f1: Matrix<T>,
    pub f2: Tensor<T>,
}

impl<T: Scalar> ZinfMorphism<T> {
    pub fn new(f0: Matrix<T>, f1: Matrix<T>, f2: Tensor<T>) -> Result<Self> {
        let want = [f0.cols(), f0.cols(), f1.rows()];
        ensure_dims(f2.shape() == want, || format!("f2 has shape {:?}, expected {want:?}", f2.shape()))?;
        Ok(Self { f0, f1, f2 })
    }

    pub fn identity(l: &TwoTermZinf<T>) -> Self {
        let n0 = l.dim0();
        Self {
            f0: Matrix::identity(n0),
            f1: Matrix::identity(l.dim1()),
            f2: Tensor::zeros(&[n0, n0, l.dim1()]),
        }
    }

    pub fn strict(f0: Matrix<T>, f1: Matrix<T>) -> Self {
        let n0 = f0.cols();
        let f2 = Tensor::zeros(&[n0, n0, f1.rows()]);
        Self { f0, f1, f2 }
    }

    pub fn is_strict(&self) -> bool {
        self.f2.is_zero()
    }

    fn ensure_between(&self, l: &TwoTermZinf<T>, lp: &TwoTermZinf<T>) -> Result<()> {
        ensure_dims(
            self.f0.shape() == (lp.dim0(), l.dim0()) && self.f1.shape() == (lp.dim1(), l.dim1()),
            || {
                format!(
                    "morphism with f0 {:?}, f1 {:?} does not map ({}, {}) to ({}, {})",
                    self.f0.shape(),
                    self.f1.shape(),
                    l.dim0(),
                    l.dim1(),
                    lp.dim0(),
                    lp.dim1()
                )
            },
        )
    }
}

/// Residuals of the homomorphism equations `i`–`iv`:
///
/// ```text
/// i    f₀ d = d′ f₁
/// ii   f₀ l₂(x,y) − l₂′(f₀x, f₀y) = d′ f₂(x,y)
/// iii  f₁ l₂(x,a) − l₂′(f₀x, f₁a) = f₂(x, da)
/// iv   f₁ l₃(x,y,z) − l₃′(f₀x,f₀y,f₀z)
///        = f₂(x,l₂(y,z)) − f₂(l₂(x,y),z) − f₂(y,l₂(x,z))
///          + l₂′(f₀x,f₂(y,z)) − l₂′(f₂(x,y),f₀z) − l₂′(f₀y,f₂(x,z))
/// ```
///
/// The mirror of `iii`, `f₁ l₂(a,x) − l₂′(f₁a, f₀x) = f₂(da, x)`, is
/// recorded as reference condition `iii-right`.
pub fn check_zinf_morphism<T: Scalar>(
    f: &ZinfMorphism<T>,
    l: &TwoTermZinf<T>,
    lp: &TwoTermZinf<T>,
) -> Result<CheckReport<T>> {
    f.ensure_between(l, lp)?;
    let mut report = CheckReport::new();
    for id in ["i", "ii", "iii", "iv"] {
        report.condition(id);
    }
    report.reference_condition("iii-right");
    let (n0, n1) = (l.dim0(), l.dim1());
    let e0 = l.basis0();
    let e1 = l.basis1();
    let f0x: Vec<Vec<T>> = (0..n0).map(|i| f.f0.column(i)).collect();
    let f2 = |x: &[T], y: &[T]| f.f2.apply(&[x, y]);

    for j in 0..n1 {
        let r = sub_vec(&f.f0.mul_vec(&l.diff(&e1[j])), &lp.diff(&f.f1.column(j)));
        report.record("i", &[j], r);
    }
    for t in input_tuples(&[n0, n0]) {
        let (x, y) = (&e0[t[0]], &e0[t[1]]);
        let lhs = sub_vec(&f.f0.mul_vec(&l.mul00(x, y)), &lp.mul00(&f0x[t[0]], &f0x[t[1]]));
        report.record("ii", &t, sub_vec(&lhs, &lp.diff(&f2(x, y))));
    }
    for t in input_tuples(&[n0, n1]) {
        let (x, a) = (&e0[t[0]], &e1[t[1]]);
        let f1a = f.f1.column(t[1]);
        let da = l.diff(a);
        let lhs = sub_vec(&f.f1.mul_vec(&l.mul01(x, a)), &lp.mul01(&f0x[t[0]], &f1a));
        report.record("iii", &t, sub_vec(&lhs, &f2(x, &da)));
        let lhs = sub_vec(&f.f1.mul_vec(&l.mul10(a, x)), &lp.mul10(&f1a, &f0x[t[0]]));
        report.record_reference("iii-right", &t, sub_vec(&lhs, &f2(&da, x)));
    }
    for t in input_tuples(&[n0, n0, n0]) {
        let (x, y, z) = (&e0[t[0]], &e0[t[1]], &e0[t[2]]);
        let (fx, fy, fz) = (&f0x[t[0]], &f0x[t[1]], &f0x[t[2]]);
        let lhs = sub_vec(&f.f1.mul_vec(&l.tern(x, y, z)), &lp.tern(fx, fy, fz));
        let plus = sum(&[f2(x, &l.mul00(y, z)), lp.mul01(fx, &f2(y, z))]);
        let minus = sum(&[
            f2(&l.mul00(x, y), z),
            f2(y, &l.mul00(x, z)),
            lp.mul10(&f2(x, y), fz),
            lp.mul01(fy, &f2(x, z)),
        ]);
        report.record("iv", &t, sub_vec(&lhs, &sub_vec(&plus, &minus)));
    }
    Ok(report)
}

/// `g · f` with `(g·f)₂(x,y) = g₂(f₀x, f₀y) + g₁ f₂(x,y)`.
pub fn compose_morphisms<T: Scalar>(g: &ZinfMorphism<T>, f: &ZinfMorphism<T>) -> Result<ZinfMorphism<T>> {
    if g.f0.cols() != f.f0.rows() || g.f1.cols() != f.f1.rows() {
        return Err(Error::NotComposable);
    }
    let n0 = f.f0.cols();
    let images: Vec<Vec<T>> = (0..n0).map(|i| f.f0.column(i)).collect();
    let f2 = Tensor::from_fibers(&[n0, n0, g.f1.rows()], |t| {
        add_vec(&g.f2.apply(&[&images[t[0]], &images[t[1]]]), &g.f1.mul_vec(f.f2.fiber(t)))
    });
    Ok(ZinfMorphism { f0: g.f0.mul(&f.f0), f1: g.f1.mul(&f.f1), f2 })
}

fn require_pass<T: Scalar>(check: &'static str, report: &CheckReport<T>) -> Result<()> {
    if report.pass() {
        Ok(())
    } else {
        Err(Error::CheckFailed { check, summary: report.summary() })
    }
}

/// The skeletal structure `d = 0`, `l₂` = product and actions, `l₃ = θ`.
pub fn skeletal_from_cocycle<T: Scalar>(a: &Algebra<T>, v: &Bimodule<T>, theta: &Cochain<T>) -> Result<TwoTermZinf<T>> {
    require_pass("check_zinbiel", &check_zinbiel(a))?;
    require_pass("check_bimodule", &check_bimodule(a, v)?)?;
    if theta.degree() != 3 {
        return Err(Error::UnsupportedDegree(theta.degree()));
    }
    let d3 = coboundary(a, v, theta)?;
    if !d3.is_zero() {
        return Err(Error::Precondition("l3 is not a 3-cocycle".into()));
    }
    TwoTerm::new(
        Matrix::zeros(a.dim(), v.module_dim()),
        a.product().clone(),
        v.left().clone(),
        v.right().clone(),
        theta.map().clone(),
    )
}

/// The data read off a skeletal structure, with the report of the three
/// checks it is expected to satisfy (`zinbiel`, bimodule `left`/`right`/
/// `mixed`, and `cocycle` for `d³l₃`).
#[derive(Debug, Clone, PartialEq)]
pub struct SkeletalData<T> {
    pub algebra: Algebra<T>,
    pub bimodule: Bimodule<T>,
    pub cocycle: Cochain<T>,
    pub report: CheckReport<T>,
}

/// Splits a structure with `d = 0` into algebra, bimodule and 3-cochain.
pub fn classify_skeletal<T: Scalar>(l: &TwoTermZinf<T>) -> Result<SkeletalData<T>> {
    if !l.is_skeletal() {
        return Err(Error::Precondition("classify_skeletal needs d = 0".into()));
    }
    let algebra = Algebra::new(l.l2_00.clone())?;
    let bimodule = Bimodule::new(l.l2_01.clone(), l.l2_10.clone())?;
    let cocycle = Cochain::new(l.l3.clone())?;
    let mut report = check_zinbiel(&algebra);
    report.merge("", check_bimodule(&algebra, &bimodule)?);
    report.condition("cocycle");
    let d3 = coboundary(&algebra, &bimodule, &cocycle)?;
    for t in input_tuples(&[l.dim0(); 4]) {
        report.record("cocycle", &t, d3.at(&t).to_vec());
    }
    Ok(SkeletalData { algebra, bimodule, cocycle, report })
}
