//! The 2-vector-space side: Zinbiel 2-algebras and the functors `T`, `S`
//! relating them to 2-term Z∞-algebras.
//!
//! A 2-term complex `d: V₁ → V₀` gives the 2-vector space with objects `V₀`
//! and morphisms `V₀ ⊕ V₁`, where `(x, h)` has source `x` and target
//! `x + dh`. Composable morphisms compose by `(x+dh, k) ∘ (x, h) = (x, h+k)`;
//! in general `g ∘ f = f + g − 1_{t(f)}`.
//!
//! [`Mor2`] and the free functions work directly in this presentation.
//! [`Zinbiel2`] stores the categorical data as plain linear maps (source,
//! target, identity, product on morphisms, Zinbielator), so [`functor_s`]
//! reads a 2-term structure back from tables alone.

use crate::error::{ensure_dims, Error, Result};
use crate::linalg::{add_vec, sub_vec, unit, Matrix};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::{input_tuples, Tensor};
use crate::zinf::{TwoTerm, TwoTermZinf, ZinfMorphism};

/// A morphism `(x, h)`: source `x`, target `x + dh`.
#[derive(Debug, Clone, PartialEq)]
pub struct Mor2<T> {
    pub x: Vec<T>,
    pub h: Vec<T>,
}

impl<T: Scalar> Mor2<T> {
    pub fn new(x: Vec<T>, h: Vec<T>) -> Self {
        Self { x, h }
    }

    pub fn zero(n0: usize, n1: usize) -> Self {
        Self { x: vec![T::zero(); n0], h: vec![T::zero(); n1] }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { x: add_vec(&self.x, &other.x), h: add_vec(&self.h, &other.h) }
    }

    /// `[x; h]` as one vector of length `dim V₀ + dim V₁`.
    pub fn to_vec(&self) -> Vec<T> {
        [self.x.as_slice(), self.h.as_slice()].concat()
    }

    pub fn from_vec(v: &[T], n0: usize) -> Self {
        Self { x: v[..n0].to_vec(), h: v[n0..].to_vec() }
    }
}

pub fn source<T: Scalar>(f: &Mor2<T>) -> Vec<T> {
    f.x.clone()
}

pub fn target<T: Scalar>(f: &Mor2<T>, l: &TwoTermZinf<T>) -> Vec<T> {
    add_vec(&f.x, &l.diff(&f.h))
}

pub fn identity<T: Scalar>(x: &[T], l: &TwoTermZinf<T>) -> Mor2<T> {
    Mor2 { x: x.to_vec(), h: vec![T::zero(); l.dim1()] }
}

/// `g ∘ f`; fails unless `source(g) = target(f)`.
pub fn compose<T: Scalar>(g: &Mor2<T>, f: &Mor2<T>, l: &TwoTermZinf<T>) -> Result<Mor2<T>> {
    if g.x != target(f, l) {
        return Err(Error::NotComposable);
    }
    Ok(Mor2 { x: f.x.clone(), h: add_vec(&f.h, &g.h) })
}

/// `(x,h)·(y,k) = (l₂(x,y), l₂(x,k) + l₂(h,y) + l₂(dh,k))`.
pub fn product<T: Scalar>(f: &Mor2<T>, g: &Mor2<T>, l: &TwoTermZinf<T>) -> Mor2<T> {
    let h = add_vec(&add_vec(&l.mul01(&f.x, &g.h), &l.mul10(&f.h, &g.x)), &l.mul01(&l.diff(&f.h), &g.h));
    Mor2 { x: l.mul00(&f.x, &g.x), h }
}

/// `J_{x,y,z} = ((x·y)·z, l₃(x,y,z))`.
pub fn zinbielator<T: Scalar>(l: &TwoTermZinf<T>, x: &[T], y: &[T], z: &[T]) -> Mor2<T> {
    Mor2 { x: l.mul00(&l.mul00(x, y), z), h: l.tern(x, y, z) }
}

/// A Zinbiel 2-algebra given by linear structure maps on objects
/// (`dim V₀`) and morphisms (`dim Z₁`).
#[derive(Debug, Clone, PartialEq)]
pub struct Zinbiel2<T> {
    source: Matrix<T>,
    target: Matrix<T>,
    unit: Matrix<T>,
    object_product: Tensor<T>,
    morphism_product: Tensor<T>,
    zinbielator: Tensor<T>,
}

impl<T: Scalar> Zinbiel2<T> {
    /// `source`, `target`: `n0 × N`; `unit`: `N × n0`; products of shapes
    /// `(n0,n0,n0)` and `(N,N,N)`; `zinbielator`: `(n0,n0,n0,N)`.
    pub fn new(
        source: Matrix<T>,
        target: Matrix<T>,
        unit: Matrix<T>,
        object_product: Tensor<T>,
        morphism_product: Tensor<T>,
        zinbielator: Tensor<T>,
    ) -> Result<Self> {
        let (n0, n) = source.shape();
        ensure_dims(
            target.shape() == (n0, n)
                && unit.shape() == (n, n0)
                && object_product.shape() == [n0, n0, n0]
                && morphism_product.shape() == [n, n, n]
                && zinbielator.shape() == [n0, n0, n0, n],
            || format!("Zinbiel 2-algebra tables do not fit {n0} objects and {n} morphisms"),
        )?;
        if source.mul(&unit) != Matrix::identity(n0) || target.mul(&unit) != Matrix::identity(n0) {
            return Err(Error::Precondition("identities must have source and target equal to their object".into()));
        }
        Ok(Self { source, target, unit, object_product, morphism_product, zinbielator })
    }

    pub fn object_dim(&self) -> usize {
        self.source.rows()
    }

    pub fn morphism_dim(&self) -> usize {
        self.source.cols()
    }

    pub fn source_map(&self) -> &Matrix<T> {
        &self.source
    }

    pub fn target_map(&self) -> &Matrix<T> {
        &self.target
    }

    pub fn unit_map(&self) -> &Matrix<T> {
        &self.unit
    }

    pub fn object_product(&self) -> &Tensor<T> {
        &self.object_product
    }

    pub fn morphism_product(&self) -> &Tensor<T> {
        &self.morphism_product
    }

    pub fn zinbielator_table(&self) -> &Tensor<T> {
        &self.zinbielator
    }

    pub fn s(&self, f: &[T]) -> Vec<T> {
        self.source.mul_vec(f)
    }

    pub fn t(&self, f: &[T]) -> Vec<T> {
        self.target.mul_vec(f)
    }

    pub fn id(&self, x: &[T]) -> Vec<T> {
        self.unit.mul_vec(x)
    }

    /// `g ∘ f = f + g − 1_{t(f)}`; fails unless `s(g) = t(f)`.
    pub fn compose(&self, g: &[T], f: &[T]) -> Result<Vec<T>> {
        let tf = self.t(f);
        if self.s(g) != tf {
            return Err(Error::NotComposable);
        }
        Ok(sub_vec(&add_vec(f, g), &self.id(&tf)))
    }

    /// Composition without the composability test.
    fn glue(&self, g: &[T], f: &[T]) -> Vec<T> {
        sub_vec(&add_vec(f, g), &self.id(&self.t(f)))
    }

    pub fn mul_objects(&self, x: &[T], y: &[T]) -> Vec<T> {
        self.object_product.apply(&[x, y])
    }

    pub fn mul(&self, f: &[T], g: &[T]) -> Vec<T> {
        self.morphism_product.apply(&[f, g])
    }

    pub fn j(&self, x: &[T], y: &[T], z: &[T]) -> Vec<T> {
        self.zinbielator.apply(&[x, y, z])
    }

    /// Projection `f ↦ f − 1_{s(f)}` onto `ker s`.
    pub fn p1(&self, f: &[T]) -> Vec<T> {
        sub_vec(f, &self.id(&self.s(f)))
    }

    fn object_basis(&self) -> Vec<Vec<T>> {
        (0..self.object_dim()).map(|i| unit(self.object_dim(), i)).collect()
    }

    fn morphism_basis(&self) -> Vec<Vec<T>> {
        (0..self.morphism_dim()).map(|i| unit(self.morphism_dim(), i)).collect()
    }
}

/// Functoriality of the product:
///
/// * `source`, `target`: `s(f·g) = s f · s g`, `t(f·g) = t f · t g`
/// * `identity`: `1_x · 1_y = 1_{x·y}`
/// * `interchange`: `(f′∘f)·(g′∘g) = (f′·g′)∘(f·g)`, over a spanning set of
///   composable pairs `f′ = 1_{t f} + k` with `k ∈ ker s`.
pub fn check_functor<T: Scalar>(z: &Zinbiel2<T>) -> CheckReport<T> {
    let mut report = CheckReport::new();
    for id in ["source", "target", "identity", "interchange"] {
        report.condition(id);
    }
    let (n0, n) = (z.object_dim(), z.morphism_dim());
    let e0 = z.object_basis();
    let m = z.morphism_basis();
    for t in input_tuples(&[n, n]) {
        let fg = z.mul(&m[t[0]], &m[t[1]]);
        report.record("source", &t, sub_vec(&z.s(&fg), &z.mul_objects(&z.s(&m[t[0]]), &z.s(&m[t[1]]))));
        report.record("target", &t, sub_vec(&z.t(&fg), &z.mul_objects(&z.t(&m[t[0]]), &z.t(&m[t[1]]))));
    }
    for t in input_tuples(&[n0, n0]) {
        let lhs = z.mul(&z.id(&e0[t[0]]), &z.id(&e0[t[1]]));
        report.record("identity", &t, sub_vec(&lhs, &z.id(&z.mul_objects(&e0[t[0]], &e0[t[1]]))));
    }
    // (f, k) runs over (m_a, 0) and (0, p1(m_b)); the law is linear in the pair
    let zero = vec![T::zero(); n];
    let pairs: Vec<(Vec<T>, Vec<T>)> = m
        .iter()
        .map(|f| (f.clone(), zero.clone()))
        .chain(m.iter().map(|f| (zero.clone(), z.p1(f))))
        .collect();
    for t in input_tuples(&[pairs.len(), pairs.len()]) {
        let (f, k) = &pairs[t[0]];
        let (g, l) = &pairs[t[1]];
        let f2 = add_vec(&z.id(&z.t(f)), k);
        let g2 = add_vec(&z.id(&z.t(g)), l);
        let lhs = z.mul(&z.glue(&f2, f), &z.glue(&g2, g));
        let rhs = z.glue(&z.mul(&f2, &g2), &z.mul(f, g));
        report.record("interchange", &t, sub_vec(&lhs, &rhs));
    }
    report
}

/// Naturality of `J`: for basis morphisms `f, g, e`,
/// `J_{tf,tg,te} ∘ ((f·g)·e) = (f·(g·e) + f·(e·g)) ∘ J_{sf,sg,se}`.
/// `naturality-composable` records failures of the source/target match
/// of the two composites.
pub fn check_naturality<T: Scalar>(z: &Zinbiel2<T>) -> CheckReport<T> {
    let mut report = CheckReport::new();
    report.condition("naturality");
    report.condition("naturality-composable");
    let n = z.morphism_dim();
    let m = z.morphism_basis();
    for t in input_tuples(&[n, n, n]) {
        let (f, g, e) = (&m[t[0]], &m[t[1]], &m[t[2]]);
        let fge = z.mul(&z.mul(f, g), e);
        let j_t = z.j(&z.t(f), &z.t(g), &z.t(e));
        let j_s = z.j(&z.s(f), &z.s(g), &z.s(e));
        let right_leg = add_vec(&z.mul(f, &z.mul(g, e)), &z.mul(f, &z.mul(e, g)));
        let mut mismatch = sub_vec(&z.s(&j_t), &z.t(&fge));
        mismatch.extend(sub_vec(&z.s(&right_leg), &z.t(&j_s)));
        report.record("naturality-composable", &t, mismatch);
        let lhs = z.glue(&j_t, &fge);
        let rhs = z.glue(&right_leg, &j_s);
        report.record("naturality", &t, sub_vec(&lhs, &rhs));
    }
    report
}

/// The Zinbielator identity on basis quadruples `(x, y, z, t)`: the two
/// composites from `((x·y)·z)·t` to `P`,
///
/// ```text
/// left   (x·J_{y,z,t} + x·J_{z,y,t} + 1 + 1) ∘ (J_{x,y·z,t} + J_{x,z·y,t}) ∘ (J_{x,y,z}·t)
/// right  (1 + 1 + x·J_{z,t,y} + x·J_{t,z,y}) ∘ (J_{x,y,z·t} + J_{x,y,t·z}) ∘ J_{x·y,z,t}
/// ```
///
/// where `x·J` is `1_x·J`, `J·t` is `J·1_t` and the `1`s are identities on
/// the summands `x·(t·(y·z))`, `x·(t·(z·y))` (left) and `x·(y·(z·t))`,
/// `x·(y·(t·z))` (right). The residual is recorded under `zinbielator`;
/// `left-composable` and `right-composable` record source/target
/// mismatches between consecutive stages.
pub fn check_zinbielator_identity<T: Scalar>(z: &Zinbiel2<T>) -> CheckReport<T> {
    let mut report = CheckReport::new();
    for id in ["zinbielator", "left-composable", "right-composable"] {
        report.condition(id);
    }
    let n0 = z.object_dim();
    let e = z.object_basis();
    let mo = |a: &[T], b: &[T]| z.mul_objects(a, b);
    let one = |a: &[T]| z.id(a);
    let lx = |a: &[T], f: &[T]| z.mul(&z.id(a), f);
    for q in input_tuples(&[n0; 4]) {
        let (x, y, w, t) = (&e[q[0]], &e[q[1]], &e[q[2]], &e[q[3]]);
        let (yw, wy, wt, tw) = (mo(y, w), mo(w, y), mo(w, t), mo(t, w));

        let a = z.mul(&z.j(x, y, w), &one(t));
        let b = add_vec(&z.j(x, &yw, t), &z.j(x, &wy, t));
        let c = [lx(x, &z.j(y, w, t)), lx(x, &z.j(w, y, t)), one(&mo(x, &mo(t, &yw))), one(&mo(x, &mo(t, &wy)))]
            .into_iter()
            .reduce(|p, r| add_vec(&p, &r))
            .unwrap();
        let mut mismatch = sub_vec(&z.s(&b), &z.t(&a));
        mismatch.extend(sub_vec(&z.s(&c), &z.t(&b)));
        report.record("left-composable", &q, mismatch);
        let left = z.glue(&c, &z.glue(&b, &a));

        let a = z.j(&mo(x, y), w, t);
        let b = add_vec(&z.j(x, y, &wt), &z.j(x, y, &tw));
        let c = [one(&mo(x, &mo(y, &wt))), one(&mo(x, &mo(y, &tw))), lx(x, &z.j(w, t, y)), lx(x, &z.j(t, w, y))]
            .into_iter()
            .reduce(|p, r| add_vec(&p, &r))
            .unwrap();
        let mut mismatch = sub_vec(&z.s(&b), &z.t(&a));
        mismatch.extend(sub_vec(&z.s(&c), &z.t(&b)));
        report.record("right-composable", &q, mismatch);
        let right = z.glue(&c, &z.glue(&b, &a));

        report.record("zinbielator", &q, sub_vec(&left, &right));
    }
    report
}

/// `T(L)`: morphisms `V₀ ⊕ V₁` in the `[x; h]` layout.
pub fn functor_t<T: Scalar>(l: &TwoTermZinf<T>) -> Zinbiel2<T> {
    let (n0, n1) = (l.dim0(), l.dim1());
    let n = n0 + n1;
    let source = Matrix::from_fn(n0, n, |i, j| if i == j { T::one() } else { T::zero() });
    let target = source.add(&Matrix::from_fn(n0, n, |i, j| if j >= n0 { l.d()[(i, j - n0)].clone() } else { T::zero() }));
    let unit_map = source.transpose();
    let mors: Vec<Mor2<T>> = (0..n).map(|i| Mor2::from_vec(&unit(n, i), n0)).collect();
    let objs: Vec<Vec<T>> = (0..n0).map(|i| unit(n0, i)).collect();
    let morphism_product = Tensor::from_fibers(&[n, n, n], |t| product(&mors[t[0]], &mors[t[1]], l).to_vec());
    let zinbielator_table =
        Tensor::from_fibers(&[n0, n0, n0, n], |t| zinbielator(l, &objs[t[0]], &objs[t[1]], &objs[t[2]]).to_vec());
    Zinbiel2::new(source, target, unit_map, l.l2_00().clone(), morphism_product, zinbielator_table)
        .expect("T produces consistent tables")
}

/// The canonical basis of `ker s`, used as the basis of `V₁` by [`functor_s`].
pub fn kernel_of_source<T: Scalar>(z: &Zinbiel2<T>) -> Matrix<T> {
    Matrix::from_columns(z.morphism_dim(), &z.source.kernel_basis())
}

fn kernel_coords<T: Scalar>(k: &Matrix<T>, v: &[T]) -> Result<Vec<T>> {
    k.solve(v).ok_or_else(|| Error::Precondition("value does not lie in the kernel of the source map".into()))
}

/// `S(Z)`: `V₀` = objects, `V₁ = ker s`, `dh = t(h)`, `l₂(x,y) = x·y`,
/// `l₂(x,h) = 1_x·h`, `l₂(h,x) = h·1_x`, `l₃ = p₁J`.
pub fn functor_s<T: Scalar>(z: &Zinbiel2<T>) -> Result<TwoTermZinf<T>> {
    let k = kernel_of_source(z);
    let (n0, n1) = (z.object_dim(), k.cols());
    let ks = k.columns();
    let objs: Vec<Vec<T>> = (0..n0).map(|i| unit(n0, i)).collect();
    let d = z.target.mul(&k);
    let mut l2_01 = Tensor::zeros(&[n0, n1, n1]);
    let mut l2_10 = Tensor::zeros(&[n1, n0, n1]);
    for t in input_tuples(&[n0, n1]) {
        let left = kernel_coords(&k, &z.mul(&z.id(&objs[t[0]]), &ks[t[1]]))?;
        l2_01.fiber_mut(&t).clone_from_slice(&left);
        let right = kernel_coords(&k, &z.mul(&ks[t[1]], &z.id(&objs[t[0]])))?;
        l2_10.fiber_mut(&[t[1], t[0]]).clone_from_slice(&right);
    }
    let mut l3 = Tensor::zeros(&[n0, n0, n0, n1]);
    for t in input_tuples(&[n0, n0, n0]) {
        let j = z.j(&objs[t[0]], &objs[t[1]], &objs[t[2]]);
        l3.fiber_mut(&t).clone_from_slice(&kernel_coords(&k, &z.p1(&j))?);
    }
    TwoTerm::new(d, z.object_product.clone(), l2_01, l2_10, l3)
}

/// A homomorphism of Zinbiel 2-algebras: the functor `(F₀, F₁)` and the
/// natural transformation `F₂(x,y): F₀x·F₀y → F₀(x·y)` as a
/// `(n0, n0, N′)` tensor.
#[derive(Debug, Clone, PartialEq)]
pub struct Zinbiel2Morphism<T> {
    pub f0: Matrix<T>,
    pub f1: Matrix<T>,
    pub f2: Tensor<T>,
}

/// `T(f)`: `F₀ = f₀`, `F₁ = f₀ ⊕ f₁`, `F₂(x,y) = (f₀x·f₀y, f₂(x,y))`.
pub fn functor_t_morphism<T: Scalar>(f: &ZinfMorphism<T>, target_structure: &TwoTermZinf<T>) -> Zinbiel2Morphism<T> {
    let (m0, n0) = f.f0.shape();
    let (m1, n1) = f.f1.shape();
    let f1 = Matrix::from_fn(m0 + m1, n0 + n1, |i, j| match (i < m0, j < n0) {
        (true, true) => f.f0[(i, j)].clone(),
        (false, false) => f.f1[(i - m0, j - n0)].clone(),
        _ => T::zero(),
    });
    let images: Vec<Vec<T>> = (0..n0).map(|i| f.f0.column(i)).collect();
    let f2 = Tensor::from_fibers(&[n0, n0, m0 + m1], |t| {
        [target_structure.mul00(&images[t[0]], &images[t[1]]), f.f2.fiber(t).to_vec()].concat()
    });
    Zinbiel2Morphism { f0: f.f0.clone(), f1, f2 }
}

/// `S(F)`: `f₀ = F₀`, `f₁ = F₁` on `ker s`, `f₂ = F₂ − 1_{s F₂}`.
pub fn functor_s_morphism<T: Scalar>(
    f: &Zinbiel2Morphism<T>,
    source_algebra: &Zinbiel2<T>,
    target_algebra: &Zinbiel2<T>,
) -> Result<ZinfMorphism<T>> {
    let k = kernel_of_source(source_algebra);
    let kp = kernel_of_source(target_algebra);
    let images = f.f1.mul(&k);
    let f1_cols = images.columns().iter().map(|c| kernel_coords(&kp, c)).collect::<Result<Vec<_>>>()?;
    let f1 = Matrix::from_columns(kp.cols(), &f1_cols);
    let n0 = f.f0.cols();
    let mut f2 = Tensor::zeros(&[n0, n0, kp.cols()]);
    for t in input_tuples(&[n0, n0]) {
        f2.fiber_mut(&t).clone_from_slice(&kernel_coords(&kp, &target_algebra.p1(f.f2.fiber(&t)))?);
    }
    ZinfMorphism::new(f.f0.clone(), f1, f2)
}

/// `G·F` with `(G·F)₂(x,y) = G₁F₂(x,y) ∘ G₂(F₀x, F₀y)`, composed in `Z″`.
pub fn compose_zinbiel2_morphisms<T: Scalar>(
    g: &Zinbiel2Morphism<T>,
    f: &Zinbiel2Morphism<T>,
    last: &Zinbiel2<T>,
) -> Result<Zinbiel2Morphism<T>> {
    if g.f0.cols() != f.f0.rows() || g.f1.cols() != f.f1.rows() {
        return Err(Error::NotComposable);
    }
    let n0 = f.f0.cols();
    let images: Vec<Vec<T>> = (0..n0).map(|i| f.f0.column(i)).collect();
    let mut f2 = Tensor::zeros(&[n0, n0, g.f1.rows()]);
    for t in input_tuples(&[n0, n0]) {
        let first = g.f2.apply(&[&images[t[0]], &images[t[1]]]);
        let second = g.f1.mul_vec(f.f2.fiber(&t));
        f2.fiber_mut(&t).clone_from_slice(&last.compose(&second, &first)?);
    }
    Ok(Zinbiel2Morphism { f0: g.f0.mul(&f.f0), f1: g.f1.mul(&f.f1), f2 })
}
