//! Crossed-module extensions `0 → M → V → S → Z → 0` and their class in
//! `H³(Z, M)`.
//!
//! `M = ker ∂` is presented by its canonical kernel basis and `Z = coker ∂`
//! by a complement of `Im ∂` in `S` together with the projection `π` that
//! kills `Im ∂`. Everything on the `Z` side is computed through `π` and the
//! complement.

use crate::algebra::{check_bimodule, check_zinbiel, Algebra, Bimodule};
use crate::cohomology::{coboundary_preimage, cohomology_dim, Cochain, CohomologyResult};
use crate::crossed::{check_crossed_module, CrossedModule};
use crate::error::{ensure_dims, Error, Result};
use crate::linalg::{add_vec, complement_basis, is_zero_vec, sub_vec, unit, Matrix};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::{input_tuples, Tensor};

#[derive(Debug, Clone, PartialEq)]
pub struct CrossedExtension<T> {
    crossed: CrossedModule<T>,
    inclusion: Matrix<T>,
    image: Matrix<T>,
    image_sources: Vec<usize>,
    image_coords: Matrix<T>,
    complement: Matrix<T>,
    projection: Matrix<T>,
    quotient: Algebra<T>,
    module: Bimodule<T>,
}

impl<T: Scalar> CrossedExtension<T> {
    pub fn crossed(&self) -> &CrossedModule<T> {
        &self.crossed
    }

    /// `i: M → V`, columns the canonical basis of `ker ∂`.
    pub fn inclusion(&self) -> &Matrix<T> {
        &self.inclusion
    }

    /// Basis of `Im ∂`: the pivot columns of `∂`.
    pub fn image(&self) -> &Matrix<T> {
        &self.image
    }

    /// Basis of the chosen complement of `Im ∂` in `S`.
    pub fn complement(&self) -> &Matrix<T> {
        &self.complement
    }

    /// `π: S → Z`.
    pub fn projection(&self) -> &Matrix<T> {
        &self.projection
    }

    /// `Z` with the induced product `z·w = π(s z · s w)`.
    pub fn quotient(&self) -> &Algebra<T> {
        &self.quotient
    }

    /// `M` as a bimodule over `Z`: `z ▷ m = s(z) ▷ m`, `m ◁ z = m ◁ s(z)`.
    pub fn module(&self) -> &Bimodule<T> {
        &self.module
    }

    pub fn kernel_dim(&self) -> usize {
        self.inclusion.cols()
    }

    pub fn quotient_dim(&self) -> usize {
        self.complement.cols()
    }

    pub fn boundary(&self) -> &Matrix<T> {
        &self.crossed.phi
    }

    /// Coordinates of `v ∈ ker ∂` in the basis of `M`, `None` if `v ∉ M`.
    pub fn kernel_coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        if !is_zero_vec(&self.boundary().mul_vec(v)) {
            return None;
        }
        self.inclusion.solve(v)
    }
}

/// Computes `M`, `Z`, the maps of the exact sequence and the induced
/// structures.
pub fn extension_from_crossed<T: Scalar>(x: &CrossedModule<T>) -> Result<CrossedExtension<T>> {
    let report = check_crossed_module(x)?;
    if !report.pass() {
        return Err(Error::CheckFailed { check: "check_crossed_module", summary: report.summary() });
    }
    let del = &x.phi;
    let (ns, nv) = del.shape();
    let kernel = del.kernel_basis();
    let inclusion = Matrix::from_columns(nv, &kernel);
    let image_sources = del.rref().pivots;
    let image = del.select_columns(&image_sources);
    let r = image.cols();
    let complement = Matrix::from_columns(ns, &complement_basis(&image.columns(), ns));
    let change = image.hstack(&complement).inverse().expect("image and complement span S");
    let image_coords = change.select_rows(0..r);
    let projection = change.select_rows(r..ns);

    let nz = complement.cols();
    let s: Vec<Vec<T>> = complement.columns();
    let quotient = Algebra::new(Tensor::from_fibers(&[nz, nz, nz], |t| {
        projection.mul_vec(&x.g.mul(&s[t[0]], &s[t[1]]))
    }))?;

    let nm = inclusion.cols();
    let solve_m = |v: Vec<T>| inclusion.solve(&v).expect("actions preserve ker ∂");
    let left = Tensor::from_fibers(&[nz, nm, nm], |t| solve_m(x.action.act_left(&s[t[0]], &kernel[t[1]])));
    let right = Tensor::from_fibers(&[nm, nz, nm], |t| solve_m(x.action.act_right(&kernel[t[0]], &s[t[1]])));
    let module = Bimodule::new(left, right)?;

    Ok(CrossedExtension {
        crossed: x.clone(),
        inclusion,
        image,
        image_sources,
        image_coords,
        complement,
        projection,
        quotient,
        module,
    })
}

/// Exactness of `0 → M → V → S → Z → 0` by rank counts, together with the
/// checks on the induced structures (prefixed `Z/` and `M/`). Each
/// exactness violation carries the two numbers that should agree.
pub fn check_extension<T: Scalar>(e: &CrossedExtension<T>) -> Result<CheckReport<T>> {
    let mut report = CheckReport::new();
    let del = e.boundary();
    let (ns, nv) = del.shape();
    let rank = del.rank();
    let n = |k: usize| T::from_int(k as i64);
    let mut exact = |id: &str, a: usize, b: usize, composite: &Matrix<T>| {
        report.condition(id);
        if a != b || !composite.is_zero() {
            report.record(id, &[], vec![n(a), n(b), if composite.is_zero() { T::zero() } else { T::one() }]);
        }
    };
    exact("i-injective", e.inclusion.rank(), e.kernel_dim(), &Matrix::zeros(0, 0));
    exact("ker-d=im-i", e.kernel_dim(), nv - rank, &del.mul(&e.inclusion));
    exact("ker-pi=im-d", rank, ns - e.quotient_dim(), &e.projection.mul(del));
    exact("pi-surjective", e.projection.rank(), e.quotient_dim(), &Matrix::zeros(0, 0));
    report.merge("Z/", check_zinbiel(&e.quotient));
    report.merge("M/", check_bimodule(&e.quotient, &e.module)?);
    Ok(report)
}

/// `s: Z → S` with `πs = 1` and `q: S → V` with `∂q = 1` on `Im ∂`.
#[derive(Debug, Clone, PartialEq)]
pub struct SectionPair<T> {
    pub s: Matrix<T>,
    pub q: Matrix<T>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SectionStrategy {
    /// `s` is the complement basis; `q` sends the `j`-th image basis vector
    /// to the `j`-th pivot column's basis vector of `V`.
    Pivot,
    /// The pivot sections with `Im ∂`-valued and `M`-valued shifts added:
    /// `s̄(z_k) = s(z_k) + b_{k mod r}` and `q̄(b_k) = q(b_k) + m_{k mod dim M}`.
    Shifted,
}

impl<T: Scalar> SectionPair<T> {
    pub fn new(e: &CrossedExtension<T>, s: Matrix<T>, q: Matrix<T>) -> Result<Self> {
        let (ns, nv) = e.boundary().shape();
        ensure_dims(s.shape() == (ns, e.quotient_dim()) && q.shape() == (nv, ns), || {
            format!("sections of shapes {:?}, {:?}", s.shape(), q.shape())
        })?;
        if e.projection.mul(&s) != Matrix::identity(e.quotient_dim()) {
            return Err(Error::Precondition("s is not a section of pi".into()));
        }
        if e.boundary().mul(&q).mul(&e.image) != e.image {
            return Err(Error::Precondition("q is not a section of the boundary on its image".into()));
        }
        Ok(Self { s, q })
    }
}

pub fn choose_sections<T: Scalar>(e: &CrossedExtension<T>, strategy: SectionStrategy) -> SectionPair<T> {
    let (ns, nv) = e.boundary().shape();
    let r = e.image.cols();
    let lift = Matrix::from_fn(nv, r, |i, j| if i == e.image_sources[j] { T::one() } else { T::zero() });
    let mut s = e.complement.clone();
    let mut q = lift.mul(&e.image_coords);
    if strategy == SectionStrategy::Shifted {
        let nz = e.quotient_dim();
        let nm = e.kernel_dim();
        if r > 0 {
            let shift = Matrix::from_fn(r, nz, |i, k| if i == k % r { T::one() } else { T::zero() });
            s = s.add(&e.image.mul(&shift));
        }
        if nm > 0 {
            let shift = Matrix::from_fn(nm, r, |i, k| if i == k % nm { T::one() } else { T::zero() });
            q = q.add(&e.inclusion.mul(&shift).mul(&e.image_coords));
        }
    }
    debug_assert_eq!(q.shape(), (nv, ns));
    SectionPair { s, q }
}

/// `g(x, y) = q(s(x)·s(y) − s(x·y))` on basis pairs of `Z`, valued in `V`.
pub fn defect<T: Scalar>(e: &CrossedExtension<T>, sp: &SectionPair<T>) -> Tensor<T> {
    let nz = e.quotient_dim();
    let nv = e.boundary().cols();
    let s: Vec<Vec<T>> = sp.s.columns();
    Tensor::from_fibers(&[nz, nz, nv], |t| {
        let prod = e.crossed.g.mul(&s[t[0]], &s[t[1]]);
        let lifted = sp.s.mul_vec(e.quotient.product().fiber(t));
        sp.q.mul_vec(&sub_vec(&prod, &lifted))
    })
}

/// `θ(x,y,z) = s(x)▷(g(y,z)+g(z,y)) − g(x·y,z) + g(x, y·z+z·y) − g(x,y)◁s(z)`
/// in `M` coordinates. A value outside `ker ∂` is an error.
pub fn theta<T: Scalar>(e: &CrossedExtension<T>, sp: &SectionPair<T>) -> Result<Cochain<T>> {
    let nz = e.quotient_dim();
    let nm = e.kernel_dim();
    let g = defect(e, sp);
    let s: Vec<Vec<T>> = sp.s.columns();
    let z: Vec<Vec<T>> = (0..nz).map(|i| unit(nz, i)).collect();
    let zprod = |a: usize, b: usize| e.quotient.product().fiber(&[a, b]).to_vec();
    let act = &e.crossed.action;
    let mut map = Tensor::zeros(&[nz, nz, nz, nm]);
    for t in input_tuples(&[nz, nz, nz]) {
        let (x, y, w) = (t[0], t[1], t[2]);
        let sym = add_vec(&zprod(y, w), &zprod(w, y));
        let mut v = act.act_left(&s[x], &add_vec(g.fiber(&[y, w]), g.fiber(&[w, y])));
        v = sub_vec(&v, &g.apply(&[&zprod(x, y), &z[w]]));
        v = add_vec(&v, &g.apply(&[&z[x], &sym]));
        v = sub_vec(&v, &act.act_right(g.fiber(&[x, y]), &s[w]));
        let coords = e.kernel_coordinates(&v).ok_or(Error::OutsideKernel { tuple: t.clone() })?;
        map.fiber_mut(&t).clone_from_slice(&coords);
    }
    Cochain::new(map)
}

/// The representative `θ` for the pivot sections and the dimensions of
/// `H³(Z, M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Xi<T> {
    pub representative: Cochain<T>,
    pub witness: CohomologyResult,
}

pub fn xi<T: Scalar>(e: &CrossedExtension<T>) -> Result<Xi<T>> {
    xi_with(e, SectionStrategy::Pivot)
}

pub fn xi_with<T: Scalar>(e: &CrossedExtension<T>, strategy: SectionStrategy) -> Result<Xi<T>> {
    let representative = theta(e, &choose_sections(e, strategy))?;
    let witness = cohomology_dim(&e.quotient, &e.module, 3)?;
    Ok(Xi { representative, witness })
}

/// Whether `θ₁ − θ₂` lies in the image of `d²` on `(Z, M)`.
pub fn same_class<T: Scalar>(t1: &Cochain<T>, t2: &Cochain<T>, z: &Algebra<T>, m: &Bimodule<T>) -> Result<bool> {
    ensure_dims(t1.degree() == 3 && t2.degree() == 3, || "same_class compares 3-cochains".into())?;
    ensure_dims(
        t1.map().shape() == t2.map().shape() && t1.algebra_dim() == z.dim() && t1.module_dim() == m.module_dim(),
        || format!("cochains of shapes {:?} and {:?} in different contexts", t1.map().shape(), t2.map().shape()),
    )?;
    Ok(coboundary_preimage(z, m, &t1.sub(t2))?.is_some())
}
