//! Small named structures used throughout the tests, the CLI and the docs.

use crate::algebra::{Algebra, Bimodule};
use crate::crossed::CrossedModule;
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::tensor::Tensor;
use crate::zinf::{TwoTerm, TwoTermZinf};

/// Two-dimensional algebra with `e1·e1 = e2` and every other product zero.
pub fn nilpotent_plane<T: Scalar>() -> Algebra<T> {
    let mut product = Tensor::zeros(&[2, 2, 2]);
    product.set(&[0, 0, 1], T::one());
    Algebra::new(product).unwrap()
}

/// One-dimensional algebra with `e·e = e`; not Zinbiel.
pub fn idempotent_line<T: Scalar>() -> Algebra<T> {
    let mut product = Tensor::zeros(&[1, 1, 1]);
    product.set(&[0, 0, 0], T::one());
    Algebra::new(product).unwrap()
}

/// `V₀ = span(e)`, `V₁ = span(h)` with `e·e = e`, `dh = e`,
/// `l₂(e,h) = l₂(h,e) = h` and `l₃(e,e,e) = h`.
///
/// Neither skeletal nor strict, and `V₀` itself is not Zinbiel: the
/// homotopy `l₃` absorbs the failure of the identity.
pub fn idempotent_homotopy<T: Scalar>() -> TwoTermZinf<T> {
    let one = || Tensor::from_vec(&[1, 1, 1], vec![T::one()]);
    TwoTerm::new(
        Matrix::from_i64(1, 1, &[1]),
        one(),
        one(),
        one(),
        Tensor::from_vec(&[1, 1, 1, 1], vec![T::one()]),
    )
    .unwrap()
}

/// `∂: V = span(u, m) → A` with `∂u` the last basis vector, `∂m = 0`,
/// `e₁ ▷ u = m` and every other action and product zero.
///
/// A crossed module when the last basis vector annihilates and is
/// annihilated by everything and `e₁` does not occur in any product, as in
/// [`nilpotent_plane`] and the truncated shuffle algebras of dimension ≥ 2.
pub fn top_extension<T: Scalar>(a: &Algebra<T>) -> CrossedModule<T> {
    let n = a.dim();
    let mut phi = Matrix::zeros(n, 2);
    phi[(n - 1, 0)] = T::one();
    let mut left = Tensor::zeros(&[n, 2, 2]);
    left.set(&[0, 0, 1], T::one());
    let action = Bimodule::new(left, Tensor::zeros(&[2, n, 2])).unwrap();
    let h = Algebra::with_labels(Tensor::zeros(&[2, 2, 2]), vec!["u".into(), "m".into()]).unwrap();
    CrossedModule::new(a.clone(), h, phi, action).unwrap()
}

/// Inclusion of the span of `basis` (assumed a two-sided ideal) with the
/// restricted product and actions.
pub fn ideal_inclusion<T: Scalar>(a: &Algebra<T>, basis: &[usize]) -> CrossedModule<T> {
    let n = a.dim();
    let k = basis.len();
    let phi = Matrix::from_fn(n, k, |i, j| if basis[j] == i { T::one() } else { T::zero() });
    let restrict = |v: &[T]| basis.iter().map(|&b| v[b].clone()).collect::<Vec<T>>();
    let h = Tensor::from_fibers(&[k, k, k], |t| restrict(a.product().fiber(&[basis[t[0]], basis[t[1]]])));
    let left = Tensor::from_fibers(&[n, k, k], |t| restrict(a.product().fiber(&[t[0], basis[t[1]]])));
    let right = Tensor::from_fibers(&[k, n, k], |t| restrict(a.product().fiber(&[basis[t[0]], t[1]])));
    let labels = basis.iter().map(|&b| a.labels()[b].clone()).collect();
    CrossedModule::new(
        a.clone(),
        Algebra::with_labels(h, labels).unwrap(),
        phi,
        Bimodule::new(left, right).unwrap(),
    )
    .unwrap()
}
