//! Crossed modules of Zinbiel algebras and the strict 2-term structures
//! they correspond to.

use crate::algebra::{check_bimodule, check_zinbiel, Algebra, Bimodule};
use crate::error::{ensure_dims, Error, Result};
use crate::linalg::{sub_vec, unit, Matrix};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::{input_tuples, Tensor};
use crate::zinf::{check_zinf, TwoTerm, TwoTermZinf};

/// `φ: H → G` with actions of `G` on the underlying space of `H`.
#[derive(Debug, Clone, PartialEq)]
pub struct CrossedModule<T> {
    pub g: Algebra<T>,
    pub h: Algebra<T>,
    /// `dim G × dim H`.
    pub phi: Matrix<T>,
    pub action: Bimodule<T>,
}

impl<T: Scalar> CrossedModule<T> {
    pub fn new(g: Algebra<T>, h: Algebra<T>, phi: Matrix<T>, action: Bimodule<T>) -> Result<Self> {
        ensure_dims(phi.shape() == (g.dim(), h.dim()), || {
            format!("phi is {:?}, expected {}x{}", phi.shape(), g.dim(), h.dim())
        })?;
        ensure_dims(action.algebra_dim() == g.dim() && action.module_dim() == h.dim(), || {
            format!(
                "actions are of a {}-dimensional algebra on a {}-dimensional space, expected {} on {}",
                action.algebra_dim(),
                action.module_dim(),
                g.dim(),
                h.dim()
            )
        })?;
        Ok(Self { g, h, phi, action })
    }

    /// `φ = id`, both actions the product.
    pub fn identity(g: &Algebra<T>) -> Self {
        let action = Bimodule::new(g.product().clone(), g.product().clone()).unwrap();
        Self { g: g.clone(), h: g.clone(), phi: Matrix::identity(g.dim()), action }
    }

    /// `φ = 0` into `g` from a space with zero product and the given actions.
    pub fn zero_map(g: &Algebra<T>, action: Bimodule<T>) -> Result<Self> {
        let nh = action.module_dim();
        Self::new(g.clone(), Algebra::zero(nh), Matrix::zeros(g.dim(), nh), action)
    }

    /// The isomorphic crossed module obtained by pushing everything along
    /// invertible `α: H → H′` and `β: G → G′`, so that `(α, β)` becomes an
    /// isomorphism onto the result.
    pub fn transport(&self, alpha: &Matrix<T>, beta: &Matrix<T>) -> Result<Self> {
        let (ng, nh) = (self.g.dim(), self.h.dim());
        ensure_dims(alpha.shape() == (nh, nh) && beta.shape() == (ng, ng), || {
            format!("alpha {:?} and beta {:?} do not fit dimensions {nh}, {ng}", alpha.shape(), beta.shape())
        })?;
        let ai = alpha.inverse().ok_or_else(|| Error::Precondition("alpha is not invertible".into()))?;
        let bi = beta.inverse().ok_or_else(|| Error::Precondition("beta is not invertible".into()))?;
        let push = |t: &Tensor<T>, first: &Matrix<T>, second: &Matrix<T>, out: &Matrix<T>| {
            let shape = t.shape().to_vec();
            Tensor::from_fibers(&shape, |i| out.mul_vec(&t.apply(&[&first.column(i[0]), &second.column(i[1])])))
        };
        Ok(Self {
            g: Algebra::with_labels(push(self.g.product(), &bi, &bi, beta), self.g.labels().to_vec())?,
            h: Algebra::with_labels(push(self.h.product(), &ai, &ai, alpha), self.h.labels().to_vec())?,
            phi: beta.mul(&self.phi).mul(&ai),
            action: Bimodule::new(
                push(self.action.left(), &bi, &ai, alpha),
                push(self.action.right(), &ai, &bi, alpha),
            )?,
        })
    }
}

/// Checks `g`, `h` (prefixed `g/`, `h/`), the bimodule axioms of the
/// actions (prefixed `action/`), and
///
/// ```text
/// phi-hom    φ(h·k) = φ(h)·φ(k)
/// phi-left   φ(x▷h) = x·φ(h)
/// phi-right  φ(h◁x) = φ(h)·x
/// peiffer-left   φ(h)▷k = h·k
/// peiffer-right  h◁φ(k) = h·k
/// ```
pub fn check_crossed_module<T: Scalar>(x: &CrossedModule<T>) -> Result<CheckReport<T>> {
    let (ng, nh) = (x.g.dim(), x.h.dim());
    let mut report = CheckReport::new();
    report.merge("g/", check_zinbiel(&x.g));
    report.merge("h/", check_zinbiel(&x.h));
    report.merge("action/", check_bimodule(&x.g, &x.action)?);
    for id in ["phi-hom", "phi-left", "phi-right", "peiffer-left", "peiffer-right"] {
        report.condition(id);
    }
    let phi_h: Vec<Vec<T>> = (0..nh).map(|i| x.phi.column(i)).collect();
    let eh: Vec<Vec<T>> = (0..nh).map(|i| unit(nh, i)).collect();
    for t in input_tuples(&[nh, nh]) {
        let hk = x.h.product().fiber(&t);
        let r = sub_vec(&x.phi.mul_vec(hk), &x.g.mul(&phi_h[t[0]], &phi_h[t[1]]));
        report.record("phi-hom", &t, r);
        report.record("peiffer-left", &t, sub_vec(&x.action.act_left(&phi_h[t[0]], &eh[t[1]]), hk));
        report.record("peiffer-right", &t, sub_vec(&x.action.act_right(&eh[t[0]], &phi_h[t[1]]), hk));
    }
    for t in input_tuples(&[ng, nh]) {
        let g = x.g.basis(t[0]);
        let l = sub_vec(&x.phi.mul_vec(x.action.left().fiber(&t)), &x.g.mul(&g, &phi_h[t[1]]));
        report.record("phi-left", &t, l);
        let r = sub_vec(&x.phi.mul_vec(x.action.right().fiber(&[t[1], t[0]])), &x.g.mul(&phi_h[t[1]], &g));
        report.record("phi-right", &t, r);
    }
    Ok(report)
}

/// `d = φ`, `l₂` from the product of `g` and the actions, `l₃ = 0`.
pub fn strict_from_crossed<T: Scalar>(x: &CrossedModule<T>) -> Result<TwoTermZinf<T>> {
    let report = check_crossed_module(x)?;
    if !report.pass() {
        return Err(Error::CheckFailed { check: "check_crossed_module", summary: report.summary() });
    }
    let (ng, nh) = (x.g.dim(), x.h.dim());
    TwoTerm::new(
        x.phi.clone(),
        x.g.product().clone(),
        x.action.left().clone(),
        x.action.right().clone(),
        Tensor::zeros(&[ng, ng, ng, nh]),
    )
}

/// `g = (V₀, l₂)`, `h = (V₁, h·k = l₂(dh, k))`, `φ = d`.
pub fn crossed_from_strict<T: Scalar>(l: &TwoTermZinf<T>) -> Result<CrossedModule<T>> {
    if !l.is_strict() {
        return Err(Error::Precondition("crossed_from_strict needs l3 = 0".into()));
    }
    let report = check_zinf(l);
    if !report.pass() {
        return Err(Error::CheckFailed { check: "check_zinf", summary: report.summary() });
    }
    let n1 = l.dim1();
    let dh: Vec<Vec<T>> = (0..n1).map(|i| l.d().column(i)).collect();
    let h_product = Tensor::from_fibers(&[n1, n1, n1], |t| l.mul01(&dh[t[0]], &unit(n1, t[1])));
    CrossedModule::new(
        Algebra::new(l.l2_00().clone())?,
        Algebra::new(h_product)?,
        l.d().clone(),
        Bimodule::new(l.l2_01().clone(), l.l2_10().clone())?,
    )
}
