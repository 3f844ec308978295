//! Zinbiel algebras, bimodules and algebra morphisms by structure constants.

use crate::error::{ensure_dims, Error, Result};
use crate::linalg::{add_vec, sub_vec, unit, Matrix};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::{input_tuples, Tensor};

/// A finite-dimensional algebra; `product[i][j][k]` is the coefficient of
/// `e_k` in `e_i · e_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra<T> {
    labels: Vec<String>,
    product: Tensor<T>,
}

impl<T: Scalar> Algebra<T> {
    pub fn new(product: Tensor<T>) -> Result<Self> {
        let labels = (1..=product.out_dim()).map(|i| format!("e{i}")).collect();
        Self::with_labels(product, labels)
    }

    pub fn with_labels(product: Tensor<T>, labels: Vec<String>) -> Result<Self> {
        let n = product.out_dim();
        ensure_dims(product.shape() == [n, n, n], || format!("product shape {:?} is not (n, n, n)", product.shape()))?;
        ensure_dims(labels.len() == n, || format!("{} labels for dimension {n}", labels.len()))?;
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(Error::Precondition("basis labels must be distinct".into()));
        }
        Ok(Self { labels, product })
    }

    pub fn zero(dim: usize) -> Self {
        Self::new(Tensor::zeros(&[dim, dim, dim])).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.product.out_dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn product(&self) -> &Tensor<T> {
        &self.product
    }

    pub fn mul(&self, x: &[T], y: &[T]) -> Vec<T> {
        self.product.apply(&[x, y])
    }

    pub fn basis(&self, i: usize) -> Vec<T> {
        unit(self.dim(), i)
    }
}

/// Actions `▷ : Z × V → V` (`left[z][v][w]`) and `◁ : V × Z → V`
/// (`right[v][z][w]`).
#[derive(Debug, Clone, PartialEq)]
pub struct Bimodule<T> {
    left: Tensor<T>,
    right: Tensor<T>,
}

impl<T: Scalar> Bimodule<T> {
    pub fn new(left: Tensor<T>, right: Tensor<T>) -> Result<Self> {
        let (nz, nv) = (left.shape().first().copied().unwrap_or(0), left.out_dim());
        ensure_dims(left.shape() == [nz, nv, nv], || format!("left action shape {:?}", left.shape()))?;
        ensure_dims(right.shape() == [nv, nz, nv], || {
            format!("right action shape {:?} does not match left {:?}", right.shape(), left.shape())
        })?;
        Ok(Self { left, right })
    }

    pub fn zero(algebra_dim: usize, module_dim: usize) -> Self {
        Self {
            left: Tensor::zeros(&[algebra_dim, module_dim, module_dim]),
            right: Tensor::zeros(&[module_dim, algebra_dim, module_dim]),
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.left.shape()[0]
    }

    pub fn module_dim(&self) -> usize {
        self.left.out_dim()
    }

    pub fn left(&self) -> &Tensor<T> {
        &self.left
    }

    pub fn right(&self) -> &Tensor<T> {
        &self.right
    }

    pub fn act_left(&self, x: &[T], v: &[T]) -> Vec<T> {
        self.left.apply(&[x, v])
    }

    pub fn act_right(&self, v: &[T], x: &[T]) -> Vec<T> {
        self.right.apply(&[v, x])
    }
}

/// A linear map between algebras, as a `target × source` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraMorphism<T> {
    pub matrix: Matrix<T>,
}

impl<T: Scalar> AlgebraMorphism<T> {
    pub fn new(matrix: Matrix<T>) -> Self {
        Self { matrix }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(Matrix::identity(dim))
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }
}

/// Residual of the Zinbiel identity `(x·y)·z − x·(y·z) − x·(z·y)` on every
/// basis triple.
pub fn check_zinbiel<T: Scalar>(a: &Algebra<T>) -> CheckReport<T> {
    let mut report = CheckReport::new();
    report.condition("zinbiel");
    let n = a.dim();
    let e: Vec<Vec<T>> = (0..n).map(|i| a.basis(i)).collect();
    for t in input_tuples(&[n, n, n]) {
        let (x, z) = (&e[t[0]], &e[t[2]]);
        let lhs = a.mul(a.product.fiber(&[t[0], t[1]]), z);
        let rhs = add_vec(&a.mul(x, a.product.fiber(&[t[1], t[2]])), &a.mul(x, a.product.fiber(&[t[2], t[1]])));
        report.record("zinbiel", &t, sub_vec(&lhs, &rhs));
    }
    report
}

/// Residual of `(x·y)·z − x·(y·z)` on every basis triple.
pub fn check_associative<T: Scalar>(a: &Algebra<T>) -> CheckReport<T> {
    let mut report = CheckReport::new();
    report.condition("associative");
    let n = a.dim();
    for t in input_tuples(&[n, n, n]) {
        let lhs = a.mul(a.product.fiber(&[t[0], t[1]]), &a.basis(t[2]));
        let rhs = a.mul(&a.basis(t[0]), a.product.fiber(&[t[1], t[2]]));
        report.record("associative", &t, sub_vec(&lhs, &rhs));
    }
    report
}

/// Residual of `x·y − y·x` on every basis pair.
pub fn check_commutative<T: Scalar>(a: &Algebra<T>) -> CheckReport<T> {
    let mut report = CheckReport::new();
    report.condition("commutative");
    let n = a.dim();
    for t in input_tuples(&[n, n]) {
        let r = sub_vec(a.product.fiber(&[t[0], t[1]]), a.product.fiber(&[t[1], t[0]]));
        report.record("commutative", &t, r);
    }
    report
}

/// The three bimodule axioms, one condition each:
///
/// * `left`:  `(x·y) ▷ v = x ▷ (y ▷ v + v ◁ y)`
/// * `right`: `(v ◁ x) ◁ y = v ◁ (x·y + y·x)`
/// * `mixed`: `(x ▷ v) ◁ y = x ▷ (v ◁ y + y ▷ v)`
///
/// Tuples are `(x, y, v)`.
pub fn check_bimodule<T: Scalar>(a: &Algebra<T>, m: &Bimodule<T>) -> Result<CheckReport<T>> {
    ensure_dims(m.algebra_dim() == a.dim(), || {
        format!("bimodule is over a {}-dimensional algebra, got {}", m.algebra_dim(), a.dim())
    })?;
    let (n, nv) = (a.dim(), m.module_dim());
    let mut report = CheckReport::new();
    for id in ["left", "right", "mixed"] {
        report.condition(id);
    }
    for t in input_tuples(&[n, n, nv]) {
        let (x, y, v) = (a.basis(t[0]), a.basis(t[1]), unit::<T>(nv, t[2]));
        let xy = a.product.fiber(&[t[0], t[1]]).to_vec();
        let yx = a.product.fiber(&[t[1], t[0]]).to_vec();
        let yv = m.act_left(&y, &v);
        let vy = m.act_right(&v, &y);

        let lhs = m.act_left(&xy, &v);
        let rhs = m.act_left(&x, &add_vec(&yv, &vy));
        report.record("left", &t, sub_vec(&lhs, &rhs));

        let lhs = m.act_right(&m.act_right(&v, &x), &y);
        let rhs = m.act_right(&v, &add_vec(&xy, &yx));
        report.record("right", &t, sub_vec(&lhs, &rhs));

        let lhs = m.act_right(&m.act_left(&x, &v), &y);
        let rhs = m.act_left(&x, &add_vec(&vy, &yv));
        report.record("mixed", &t, sub_vec(&lhs, &rhs));
    }
    Ok(report)
}

/// The symmetrized product `x ∘ y = ½(x·y + y·x)`.
pub fn symmetrize<T: Scalar>(a: &Algebra<T>) -> Algebra<T> {
    let n = a.dim();
    let half = T::half();
    let product = Tensor::from_fibers(&[n, n, n], |idx| {
        add_vec(a.product.fiber(&[idx[0], idx[1]]), a.product.fiber(&[idx[1], idx[0]]))
            .into_iter()
            .map(|c| c * half.clone())
            .collect()
    });
    Algebra { labels: a.labels.clone(), product }
}

/// Residual of `φ(x·y) − φ(x)·′φ(y)` on every basis pair.
pub fn check_morphism<T: Scalar>(f: &AlgebraMorphism<T>, a: &Algebra<T>, b: &Algebra<T>) -> Result<CheckReport<T>> {
    ensure_dims(f.source_dim() == a.dim() && f.target_dim() == b.dim(), || {
        format!(
            "morphism is {}x{}, algebras have dimensions {} -> {}",
            f.target_dim(),
            f.source_dim(),
            a.dim(),
            b.dim()
        )
    })?;
    let n = a.dim();
    let images: Vec<Vec<T>> = (0..n).map(|i| f.matrix.column(i)).collect();
    let mut report = CheckReport::new();
    report.condition("homomorphism");
    for t in input_tuples(&[n, n]) {
        let lhs = f.matrix.mul_vec(a.product.fiber(&t));
        let rhs = b.mul(&images[t[0]], &images[t[1]]);
        report.record("homomorphism", &t, sub_vec(&lhs, &rhs));
    }
    Ok(report)
}

/// The algebra acting on itself from both sides by its own product.
pub fn regular_bimodule<T: Scalar>(a: &Algebra<T>) -> Result<Bimodule<T>> {
    let report = check_zinbiel(a);
    if !report.pass() {
        return Err(Error::CheckFailed { check: "check_zinbiel", summary: report.summary() });
    }
    Ok(Bimodule { left: a.product.clone(), right: a.product.clone() })
}

/// Basis `x¹..xⁿ` with `xᵐ·xᵏ = C(m+k−1, k)·x^{m+k}` when `m + k ≤ n`.
///
/// This is the one-generator free Zinbiel algebra (the half-shuffle product)
/// cut off above degree `n`.
pub fn truncated_shuffle<T: Scalar>(n: usize) -> Algebra<T> {
    assert!(n >= 1, "truncated_shuffle needs n >= 1");
    let mut product = Tensor::zeros(&[n, n, n]);
    for m in 1..=n {
        for k in 1..=n - m {
            product.set(&[m - 1, k - 1, m + k - 1], T::from_int(binomial(m + k - 1, k)));
        }
    }
    let labels = (1..=n).map(|i| format!("x{i}")).collect();
    Algebra::with_labels(product, labels).unwrap()
}

fn binomial(n: usize, k: usize) -> i64 {
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{nilpotent_plane, idempotent_line};
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_int(n)
    }

    #[test]
    fn zinbiel_examples() {
        assert!(check_zinbiel(&nilpotent_plane::<Q>()).pass());
        assert!(check_zinbiel(&Algebra::<Q>::zero(3)).pass());

        let r = check_zinbiel(&idempotent_line::<Q>());
        let c = r.get("zinbiel").unwrap();
        assert_eq!(c.violations.len(), 1);
        assert_eq!(c.violations[0].tuple, vec![0, 0, 0]);
        assert_eq!(c.violations[0].residual, vec![q(-1)]);
    }

    #[test]
    fn bimodule_examples() {
        let a = nilpotent_plane::<Q>();
        assert!(check_bimodule(&a, &regular_bimodule(&a).unwrap()).unwrap().pass());
        assert!(check_bimodule(&a, &Bimodule::zero(2, 3)).unwrap().pass());
        let left_only = Bimodule::new(a.product().clone(), Tensor::zeros(&[2, 2, 2])).unwrap();
        assert!(check_bimodule(&a, &left_only).unwrap().pass());
        let s4 = truncated_shuffle::<Q>(4);
        assert!(check_bimodule(&s4, &regular_bimodule(&s4).unwrap()).unwrap().pass());
        assert!(regular_bimodule(&Algebra::<Q>::zero(2)).unwrap().left().is_zero());
        assert!(matches!(check_bimodule(&a, &Bimodule::zero(3, 1)), Err(Error::DimensionMismatch(_))));
        assert!(regular_bimodule(&idempotent_line::<Q>()).is_err());
    }

    #[test]
    fn symmetrize_examples() {
        let s = symmetrize(&nilpotent_plane::<Q>());
        let mut expected = Tensor::zeros(&[2, 2, 2]);
        expected.set(&[0, 0, 1], q(1));
        assert_eq!(s.product(), &expected);
        assert!(check_associative(&s).pass() && check_commutative(&s).pass());
        assert!(symmetrize(&Algebra::<Q>::zero(2)).product().is_zero());
        let s3 = symmetrize(&truncated_shuffle::<Q>(3));
        assert!(check_associative(&s3).pass());
    }

    #[test]
    fn morphism_examples() {
        let a = nilpotent_plane::<Q>();
        assert!(check_morphism(&AlgebraMorphism::identity(2), &a, &a).unwrap().pass());
        let s3 = truncated_shuffle::<Q>(3);
        assert!(check_morphism(&AlgebraMorphism::new(Matrix::zeros(3, 2)), &a, &s3).unwrap().pass());
        let f = AlgebraMorphism::new(Matrix::from_i64(2, 2, &[1, 0, 0, 2]));
        let r = check_morphism(&f, &a, &a).unwrap();
        let v = &r.get("homomorphism").unwrap().violations;
        assert_eq!(v.len(), 1);
        assert_eq!((v[0].tuple.clone(), v[0].residual.clone()), (vec![0, 0], vec![q(0), q(1)]));
    }

    #[test]
    fn shuffle_examples() {
        assert!(truncated_shuffle::<Q>(1).product().is_zero());
        assert_eq!(truncated_shuffle::<Q>(2).product(), nilpotent_plane::<Q>().product());
        let s4 = truncated_shuffle::<Q>(4);
        assert_eq!(s4.product().get(&[0, 1, 2]), &q(1));
        assert_eq!(s4.product().get(&[1, 0, 2]), &q(2));
        for n in 1..=8 {
            assert!(check_zinbiel(&truncated_shuffle::<Q>(n)).pass(), "n = {n}");
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(Algebra::<Q>::new(Tensor::zeros(&[2, 3, 2])).is_err());
        assert!(Algebra::<Q>::with_labels(Tensor::zeros(&[2, 2, 2]), vec!["a".into(), "a".into()]).is_err());
    }
}
