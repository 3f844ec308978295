//! 2-term A∞, C∞ and Dend∞ data, Rota–Baxter operators, and the bridges
//! from 2-term Z∞-algebras.
//!
//! A 2-term A∞-algebra is stored in the same [`TwoTerm`] container as a
//! Z∞-algebra, with `m₂` in the `l2_*` slots and `m₃` in `l3`.
//! [`check_ainf`] evaluates
//!
//! ```text
//! b1  d m₂(x,h) = m₂(x,dh)        b2  d m₂(h,x) = m₂(dh,x)
//! c   m₂(dh,k)  = m₂(h,dk)
//! d   d m₃(x,y,z) = m₂(x,m₂(y,z)) − m₂(m₂(x,y),z)
//! e1  m₃(x,y,dh)  = m₂(x,m₂(y,h)) − m₂(m₂(x,y),h)
//! e2  m₃(x,dh,z)  = m₂(x,m₂(h,z)) − m₂(m₂(x,h),z)
//! e3  m₃(dh,y,z)  = m₂(h,m₂(y,z)) − m₂(m₂(h,y),z)
//! f   m₂(x,m₃(y,z,t)) − m₃(m₂(x,y),z,t) + m₃(x,m₂(y,z),t) − m₃(x,y,m₂(z,t)) + m₂(m₃(x,y,z),t) = 0
//! ```
//!
//! with reference residuals `e1-literal` (`m₃(x,y,dh) = 0`), `e2-literal`,
//! `e3-literal` (the right-hand sides of `e2`, `e3` negated) and
//! `f-literal` (`f` with `m₃(y,z,m₂(x,t))` in place of `m₃(x,y,m₂(z,t))`).

use crate::error::{ensure_dims, Error, Result};
use crate::linalg::{add_vec, sub_vec, Matrix};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::{input_tuples, Tensor};
use crate::zinf::{TwoTerm, TwoTermZinf};

pub type TwoTermAinf<T> = TwoTerm<T>;

/// Residuals of the A∞ conditions listed in the module docs.
pub fn check_ainf<T: Scalar>(a: &TwoTermAinf<T>) -> CheckReport<T> {
    let mut report = CheckReport::new();
    for id in ["b1", "b2", "c", "d", "e1", "e2", "e3", "f"] {
        report.condition(id);
    }
    for id in ["e1-literal", "e2-literal", "e3-literal", "f-literal"] {
        report.reference_condition(id);
    }
    let (n0, n1) = (a.dim0(), a.dim1());
    let e0 = a.basis0();
    let e1 = a.basis1();
    let dh: Vec<Vec<T>> = e1.iter().map(|h| a.diff(h)).collect();

    for t in input_tuples(&[n0, n1]) {
        let (x, h) = (&e0[t[0]], &e1[t[1]]);
        report.record("b1", &t, sub_vec(&a.diff(&a.mul01(x, h)), &a.mul00(x, &dh[t[1]])));
        report.record("b2", &t, sub_vec(&a.diff(&a.mul10(h, x)), &a.mul00(&dh[t[1]], x)));
    }
    for t in input_tuples(&[n1, n1]) {
        report.record("c", &t, sub_vec(&a.mul01(&dh[t[0]], &e1[t[1]]), &a.mul10(&e1[t[0]], &dh[t[1]])));
    }
    for t in input_tuples(&[n0, n0, n0]) {
        let (x, y, z) = (&e0[t[0]], &e0[t[1]], &e0[t[2]]);
        let assoc = sub_vec(&a.mul00(x, &a.mul00(y, z)), &a.mul00(&a.mul00(x, y), z));
        report.record("d", &t, sub_vec(&a.diff(&a.tern(x, y, z)), &assoc));
    }
    for t in input_tuples(&[n0, n0, n1]) {
        let (x, y, h) = (&e0[t[0]], &e0[t[1]], &e1[t[2]]);
        let lhs = a.tern(x, y, &dh[t[2]]);
        let assoc = sub_vec(&a.mul01(x, &a.mul01(y, h)), &a.mul01(&a.mul00(x, y), h));
        report.record("e1", &t, sub_vec(&lhs, &assoc));
        report.record_reference("e1-literal", &t, lhs);
    }
    for t in input_tuples(&[n0, n1, n0]) {
        let (x, h, z) = (&e0[t[0]], &e1[t[1]], &e0[t[2]]);
        let lhs = a.tern(x, &dh[t[1]], z);
        let assoc = sub_vec(&a.mul01(x, &a.mul10(h, z)), &a.mul10(&a.mul01(x, h), z));
        report.record("e2", &t, sub_vec(&lhs, &assoc));
        report.record_reference("e2-literal", &t, add_vec(&lhs, &assoc));
    }
    for t in input_tuples(&[n1, n0, n0]) {
        let (h, y, z) = (&e1[t[0]], &e0[t[1]], &e0[t[2]]);
        let lhs = a.tern(&dh[t[0]], y, z);
        let assoc = sub_vec(&a.mul10(h, &a.mul00(y, z)), &a.mul10(&a.mul10(h, y), z));
        report.record("e3", &t, sub_vec(&lhs, &assoc));
        report.record_reference("e3-literal", &t, add_vec(&lhs, &assoc));
    }
    for q in input_tuples(&[n0; 4]) {
        let (x, y, z, t) = (&e0[q[0]], &e0[q[1]], &e0[q[2]], &e0[q[3]]);
        let common = add_vec(
            &sub_vec(&a.mul01(x, &a.tern(y, z, t)), &a.tern(&a.mul00(x, y), z, t)),
            &add_vec(&a.tern(x, &a.mul00(y, z), t), &a.mul10(&a.tern(x, y, z), t)),
        );
        report.record("f", &q, sub_vec(&common, &a.tern(x, y, &a.mul00(z, t))));
        report.record_reference("f-literal", &q, sub_vec(&common, &a.tern(y, z, &a.mul00(x, t))));
    }
    report
}

/// [`check_ainf`] plus
///
/// * `commutative-00`: `m₂(x,y) = m₂(y,x)`
/// * `commutative-01`: `m₂(x,h) = m₂(h,x)`
/// * `symmetric-m3`: `m₃(x,y,z) = m₃(y,x,z) = m₃(y,z,x)`; the residual is
///   the concatenation of both differences.
pub fn check_cinf<T: Scalar>(a: &TwoTermAinf<T>) -> CheckReport<T> {
    let mut report = check_ainf(a);
    for id in ["commutative-00", "commutative-01", "symmetric-m3"] {
        report.condition(id);
    }
    let (n0, n1) = (a.dim0(), a.dim1());
    for t in input_tuples(&[n0, n0]) {
        let r = sub_vec(a.l2_00().fiber(&t), a.l2_00().fiber(&[t[1], t[0]]));
        report.record("commutative-00", &t, r);
    }
    for t in input_tuples(&[n0, n1]) {
        let r = sub_vec(a.l2_01().fiber(&t), a.l2_10().fiber(&[t[1], t[0]]));
        report.record("commutative-01", &t, r);
    }
    for t in input_tuples(&[n0, n0, n0]) {
        let here = a.l3().fiber(&t);
        let mut r = sub_vec(here, a.l3().fiber(&[t[1], t[0], t[2]]));
        r.extend(sub_vec(here, a.l3().fiber(&[t[1], t[2], t[0]])));
        report.record("symmetric-m3", &t, r);
    }
    report
}

/// The six argument orders averaged by [`symmetrize_zinf`], as input
/// permutations for [`Tensor::permute_inputs`].
const S3: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [2, 1, 0], [0, 2, 1]];

/// `m₂(x,y) = ½(l₂(x,y) + l₂(y,x))`, `m₂(x,h) = m₂(h,x) = ½(l₂(x,h) + l₂(h,x))`,
/// `m₃ = ⅙ Σ_{σ ∈ S₃} l₃ ∘ σ`, `m₁ = d`.
pub fn symmetrize_zinf<T: Scalar>(l: &TwoTermZinf<T>) -> TwoTermAinf<T> {
    let half = T::half();
    let m00 = l.l2_00().add(&l.l2_00().permute_inputs(&[1, 0])).scale(&half);
    let m01 = l.l2_01().add(&l.l2_10().permute_inputs(&[1, 0])).scale(&half);
    let m10 = m01.permute_inputs(&[1, 0]);
    let mut m3 = Tensor::zeros(l.l3().shape());
    for p in S3 {
        m3 = m3.add(&l.l3().permute_inputs(&p));
    }
    let m3 = m3.scale(&(T::one() / T::from_int(6)));
    TwoTerm::new(l.d().clone(), m00, m01, m10, m3).expect("shapes are preserved")
}

/// 2-term Dend∞ data: `d`, the two cells of `μ₂` (`≺` for `[1]`, `≻` for
/// `[2]`), each with components on `V₀×V₀`, `V₀×V₁`, `V₁×V₀`, and the three
/// cells of `μ₃`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoTermDend<T> {
    d: Matrix<T>,
    mu2: [[Tensor<T>; 3]; 2],
    mu3: [Tensor<T>; 3],
}

impl<T: Scalar> TwoTermDend<T> {
    pub fn new(d: Matrix<T>, mu2: [[Tensor<T>; 3]; 2], mu3: [Tensor<T>; 3]) -> Result<Self> {
        let (n0, n1) = d.shape();
        let want = [vec![n0, n0, n0], vec![n0, n1, n1], vec![n1, n0, n1]];
        for (r, cell) in mu2.iter().enumerate() {
            for (c, w) in cell.iter().zip(&want) {
                ensure_dims(c.shape() == w.as_slice(), || {
                    format!("mu2 cell [{}] component has shape {:?}, expected {w:?}", r + 1, c.shape())
                })?;
            }
        }
        for (r, c) in mu3.iter().enumerate() {
            ensure_dims(c.shape() == [n0, n0, n0, n1], || {
                format!("mu3 cell [{}] has shape {:?}, expected {:?}", r + 1, c.shape(), [n0, n0, n0, n1])
            })?;
        }
        Ok(Self { d, mu2, mu3 })
    }

    pub fn d(&self) -> &Matrix<T> {
        &self.d
    }

    /// Components `[00, 01, 10]` of `μ₂` at cell `r ∈ {1, 2}`.
    pub fn mu2(&self, r: usize) -> &[Tensor<T>; 3] {
        &self.mu2[r - 1]
    }

    /// `μ₃` at cell `r ∈ {1, 2, 3}`.
    pub fn mu3(&self, r: usize) -> &Tensor<T> {
        &self.mu3[r - 1]
    }
}

/// `μ₂([1]) = l₂`, `μ₂([2],a,b) = l₂(b,a)` in every graded component,
/// `μ₃([1],x,y,z) = l₃(x,y,z)`, `μ₃([2],x,y,z) = l₃(y,z,x)`,
/// `μ₃([3],x,y,z) = l₃(z,x,y)`.
pub fn dendrify<T: Scalar>(l: &TwoTermZinf<T>) -> TwoTermDend<T> {
    let prec = [l.l2_00().clone(), l.l2_01().clone(), l.l2_10().clone()];
    let succ = [
        l.l2_00().permute_inputs(&[1, 0]),
        l.l2_10().permute_inputs(&[1, 0]),
        l.l2_01().permute_inputs(&[1, 0]),
    ];
    let mu3 = [l.l3().clone(), l.l3().permute_inputs(&[1, 2, 0]), l.l3().permute_inputs(&[2, 0, 1])];
    TwoTermDend::new(l.d().clone(), [prec, succ], mu3).expect("shapes are preserved")
}

/// `m₂ = μ₂[1] + μ₂[2]`, `m₃ = μ₃[1] + μ₃[2] + μ₃[3]`.
pub fn totalize<T: Scalar>(dd: &TwoTermDend<T>) -> TwoTermAinf<T> {
    let [p, s] = &dd.mu2;
    TwoTerm::new(
        dd.d.clone(),
        p[0].add(&s[0]),
        p[1].add(&s[1]),
        p[2].add(&s[2]),
        dd.mu3[0].add(&dd.mu3[1]).add(&dd.mu3[2]),
    )
    .expect("shapes are preserved")
}

/// A weight-zero Rota–Baxter operator `(R₀, R₁)` on a 2-term A∞-algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct RotaBaxter2<T> {
    pub r0: Matrix<T>,
    pub r1: Matrix<T>,
}

impl<T: Scalar> RotaBaxter2<T> {
    pub fn new(r0: Matrix<T>, r1: Matrix<T>) -> Result<Self> {
        ensure_dims(r0.rows() == r0.cols() && r1.rows() == r1.cols(), || {
            format!("operators must be square, got {:?} and {:?}", r0.shape(), r1.shape())
        })?;
        Ok(Self { r0, r1 })
    }

    pub fn zero(n0: usize, n1: usize) -> Self {
        Self { r0: Matrix::zeros(n0, n0), r1: Matrix::zeros(n1, n1) }
    }

    fn fits(&self, a: &TwoTermAinf<T>) -> Result<()> {
        ensure_dims(self.r0.rows() == a.dim0() && self.r1.rows() == a.dim1(), || {
            format!(
                "operators of sizes {} and {} on spaces of dimensions {} and {}",
                self.r0.rows(),
                self.r1.rows(),
                a.dim0(),
                a.dim1()
            )
        })
    }
}

/// Residuals of
///
/// ```text
/// rb0    m₂(R₀x, R₀y) = R₀(m₂(x, R₀y) + m₂(R₀x, y))
/// rb1    m₂(R₀x, R₁h) = R₁(m₂(x, R₁h) + m₂(R₀x, h))
/// rb2    m₂(R₁h, R₀x) = R₁(m₂(h, R₀x) + m₂(R₁h, x))
/// rb3    m₃(R₀x, R₀y, R₀z) = R₁(m₃(x, R₀y, R₀z) + m₃(R₀x, y, R₀z) + m₃(R₀x, R₀y, z))
/// chain  R₀ d = d R₁
/// ```
pub fn check_rota_baxter<T: Scalar>(r: &RotaBaxter2<T>, a: &TwoTermAinf<T>) -> Result<CheckReport<T>> {
    r.fits(a)?;
    let mut report = CheckReport::new();
    for id in ["rb0", "rb1", "rb2", "rb3", "chain"] {
        report.condition(id);
    }
    let (n0, n1) = (a.dim0(), a.dim1());
    let e0 = a.basis0();
    let e1 = a.basis1();
    let r0: Vec<Vec<T>> = (0..n0).map(|i| r.r0.column(i)).collect();
    let r1: Vec<Vec<T>> = (0..n1).map(|i| r.r1.column(i)).collect();
    for t in input_tuples(&[n0, n0]) {
        let (x, y, rx, ry) = (&e0[t[0]], &e0[t[1]], &r0[t[0]], &r0[t[1]]);
        let rhs = r.r0.mul_vec(&add_vec(&a.mul00(x, ry), &a.mul00(rx, y)));
        report.record("rb0", &t, sub_vec(&a.mul00(rx, ry), &rhs));
    }
    for t in input_tuples(&[n0, n1]) {
        let (x, h, rx, rh) = (&e0[t[0]], &e1[t[1]], &r0[t[0]], &r1[t[1]]);
        let rhs = r.r1.mul_vec(&add_vec(&a.mul01(x, rh), &a.mul01(rx, h)));
        report.record("rb1", &t, sub_vec(&a.mul01(rx, rh), &rhs));
        let rhs = r.r1.mul_vec(&add_vec(&a.mul10(h, rx), &a.mul10(rh, x)));
        report.record("rb2", &[t[1], t[0]], sub_vec(&a.mul10(rh, rx), &rhs));
    }
    for t in input_tuples(&[n0, n0, n0]) {
        let (x, y, z) = (&e0[t[0]], &e0[t[1]], &e0[t[2]]);
        let (rx, ry, rz) = (&r0[t[0]], &r0[t[1]], &r0[t[2]]);
        let inner = add_vec(&add_vec(&a.tern(x, ry, rz), &a.tern(rx, y, rz)), &a.tern(rx, ry, z));
        report.record("rb3", &t, sub_vec(&a.tern(rx, ry, rz), &r.r1.mul_vec(&inner)));
    }
    let chain = r.r0.mul(a.d()).sub(&a.d().mul(&r.r1));
    for j in 0..n1 {
        report.record("chain", &[j], chain.column(j));
    }
    Ok(report)
}

/// The 2-term Z∞ data induced by a Rota–Baxter operator on a C∞-algebra:
///
/// ```text
/// l₂(x,y) = m₂(x,R₀y) + m₂(R₀x,y)
/// l₂(x,h) = m₂(x,R₁h) + m₂(R₀x,h)
/// l₂(h,x) = m₂(h,R₀x) + m₂(R₁h,x)
/// l₃(x,y,z) = m₃(x,R₀y,R₀z) + m₃(R₀x,y,R₀z) + m₃(R₀x,R₀y,z)
/// ```
pub fn zinf_from_rb<T: Scalar>(a: &TwoTermAinf<T>, r: &RotaBaxter2<T>) -> Result<TwoTermZinf<T>> {
    let cinf = check_cinf(a);
    if !cinf.pass() {
        return Err(Error::CheckFailed { check: "check_cinf", summary: cinf.summary() });
    }
    let rb = check_rota_baxter(r, a)?;
    if !rb.pass() {
        return Err(Error::CheckFailed { check: "check_rota_baxter", summary: rb.summary() });
    }
    Ok(induced(a, r))
}

/// The formulas of [`zinf_from_rb`] without the precondition checks.
pub fn induced<T: Scalar>(a: &TwoTermAinf<T>, r: &RotaBaxter2<T>) -> TwoTermZinf<T> {
    let (n0, n1) = (a.dim0(), a.dim1());
    let e0 = a.basis0();
    let e1 = a.basis1();
    let r0: Vec<Vec<T>> = (0..n0).map(|i| r.r0.column(i)).collect();
    let r1: Vec<Vec<T>> = (0..n1).map(|i| r.r1.column(i)).collect();
    let l00 = Tensor::from_fibers(&[n0, n0, n0], |t| {
        add_vec(&a.mul00(&e0[t[0]], &r0[t[1]]), &a.mul00(&r0[t[0]], &e0[t[1]]))
    });
    let l01 = Tensor::from_fibers(&[n0, n1, n1], |t| {
        add_vec(&a.mul01(&e0[t[0]], &r1[t[1]]), &a.mul01(&r0[t[0]], &e1[t[1]]))
    });
    let l10 = Tensor::from_fibers(&[n1, n0, n1], |t| {
        add_vec(&a.mul10(&e1[t[0]], &r0[t[1]]), &a.mul10(&r1[t[0]], &e0[t[1]]))
    });
    let l3 = Tensor::from_fibers(&[n0, n0, n0, n1], |t| {
        let (x, y, z) = (&e0[t[0]], &e0[t[1]], &e0[t[2]]);
        let (rx, ry, rz) = (&r0[t[0]], &r0[t[1]], &r0[t[2]]);
        add_vec(&add_vec(&a.tern(x, ry, rz), &a.tern(rx, y, rz)), &a.tern(rx, ry, z))
    });
    TwoTerm::new(a.d().clone(), l00, l01, l10, l3).expect("shapes are preserved")
}

/// Rota–Baxter operators `R₀` on `V₀` of lower-triangular nilpotent shape
/// (`R₀ eᵢ ∈ span(e_{i+1}, …)`) with entries in `coefficients`, `R₁ = 0`,
/// that pass [`check_rota_baxter`], in lexicographic order of their entries
/// below the diagonal. The zero operator is skipped.
pub fn search_shift_operators<T: Scalar>(a: &TwoTermAinf<T>, coefficients: &[i64]) -> Vec<RotaBaxter2<T>> {
    let n0 = a.dim0();
    let slots: Vec<(usize, usize)> = (0..n0).flat_map(|j| (j + 1..n0).map(move |i| (i, j))).collect();
    let mut found = Vec::new();
    for choice in input_tuples(&vec![coefficients.len(); slots.len()]) {
        if choice.iter().all(|&c| coefficients[c] == 0) {
            continue;
        }
        let mut r0 = Matrix::zeros(n0, n0);
        for (&(i, j), &c) in slots.iter().zip(&choice) {
            r0[(i, j)] = T::from_int(coefficients[c]);
        }
        let r = RotaBaxter2 { r0, r1: Matrix::zeros(a.dim1(), a.dim1()) };
        if check_rota_baxter(&r, a).map(|rep| rep.pass()).unwrap_or(false) {
            found.push(r);
        }
    }
    found
}

/// `2 · symmetrize_zinf` at the level of `m₂`, used to compare with
/// `totalize ∘ dendrify`.
pub fn doubled_m2<T: Scalar>(a: &TwoTermAinf<T>) -> [Tensor<T>; 3] {
    let two = T::from_int(2);
    [a.l2_00().scale(&two), a.l2_01().scale(&two), a.l2_10().scale(&two)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{symmetrize, truncated_shuffle, Algebra};
    use crate::fixtures::{nilpotent_plane, idempotent_homotopy};
    use crate::zinf::check_zinf;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    fn strict(a: &Algebra<Q>) -> TwoTerm<Q> {
        let n = a.dim();
        TwoTerm::new(
            Matrix::zeros(n, 0),
            a.product().clone(),
            Tensor::zeros(&[n, 0, 0]),
            Tensor::zeros(&[0, n, 0]),
            Tensor::zeros(&[n, n, n, 0]),
        )
        .unwrap()
    }

    #[test]
    fn strict_bridges() {
        for a in [nilpotent_plane::<Q>(), truncated_shuffle(4)] {
            let l = strict(&a);
            let s = symmetrize_zinf(&l);
            assert!(check_cinf(&s).pass());
            assert_eq!(s.l2_00(), symmetrize(&a).product());
            let t = totalize(&dendrify(&l));
            assert!(check_ainf(&t).pass());
            assert_eq!([t.l2_00().clone(), t.l2_01().clone(), t.l2_10().clone()], doubled_m2(&s));
        }
    }

    #[test]
    fn raw_shuffle_is_not_commutative() {
        let r = check_cinf(&strict(&truncated_shuffle::<Q>(3)));
        assert!(r.failing().contains(&"commutative-00"));
    }

    #[test]
    fn dendrify_cells() {
        let l = idempotent_homotopy::<Q>();
        let dd = dendrify(&l);
        assert_eq!(dd.mu2(1)[0], *l.l2_00());
        assert_eq!(dd.mu3(2), &l.l3().permute_inputs(&[1, 2, 0]));
        assert_eq!(totalize(&dendrify(&TwoTerm::<Q>::zero(2, 1))), TwoTerm::zero(2, 1));
    }

    #[test]
    fn symmetrization_can_break_the_associator_condition() {
        let l = idempotent_homotopy::<Q>();
        assert!(check_zinf(&l).pass());
        let r = check_ainf(&symmetrize_zinf(&l));
        assert!(r.failing().contains(&"d"));
    }

    #[test]
    fn rota_baxter_examples() {
        let a = symmetrize_zinf(&strict(&truncated_shuffle::<Q>(3)));
        assert!(check_rota_baxter(&RotaBaxter2::zero(3, 0), &a).unwrap().pass());
        let id = RotaBaxter2::new(Matrix::identity(3), Matrix::identity(0)).unwrap();
        assert!(!check_rota_baxter(&id, &a).unwrap().pass());
        let found = search_shift_operators(&a, &[-1, 0, 1]);
        assert!(!found.is_empty());
        let l = zinf_from_rb(&a, &found[0]).unwrap();
        assert!(check_zinf(&l).pass());
        let zero = zinf_from_rb(&a, &RotaBaxter2::zero(3, 0)).unwrap();
        assert_eq!(zero, TwoTerm::zero(3, 0));
    }

    #[test]
    fn induced_product_need_not_be_zinbiel() {
        let a = symmetrize_zinf(&strict(&truncated_shuffle::<Q>(3)));
        let r0 = Matrix::from_fn(3, 3, |i, j| if i == j { [q(2), q(1), Q::new(2.into(), 3.into())][i].clone() } else { q(0) });
        let r = RotaBaxter2::new(r0, Matrix::identity(0)).unwrap();
        assert!(check_rota_baxter(&r, &a).unwrap().pass());
        let l = zinf_from_rb(&a, &r).unwrap();
        assert!(!check_zinf(&l).pass());
        assert_eq!(l.l2_00().get(&[0, 0, 1]), &q(4));
    }
}
