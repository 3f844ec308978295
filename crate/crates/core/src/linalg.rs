//! Dense exact matrices and the elimination primitives built on them.

use std::fmt;

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Result of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq)]
pub struct Rref<T> {
    pub reduced: Matrix<T>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from row-major entries. Panics if the length is wrong.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix entries must number rows * cols");
        Self { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self { rows: rows.len(), cols, data: rows.concat() }
    }

    /// Columns of length `rows`; an empty list gives a `rows x 0` matrix.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == rows), "column length mismatch");
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::from_vec(rows, cols, entries.iter().map(|&e| T::from_int(e)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * c.clone()).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape(), other.shape());
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect();
        Self { rows: self.rows, cols: self.cols, data }
    }

    /// Matrix product; zero entries of `self` are skipped.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length differs from column count");
        let mut out = vec![T::zero(); self.rows];
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    *o = o.clone() + a.clone() * vj.clone();
                }
            }
        }
        out
    }

    /// Reduced row echelon form. Pivots are taken leftmost-first from the
    /// topmost eligible row, so the output is deterministic.
    pub fn rref(&self) -> Rref<T> {
        let mut rows: Vec<Vec<T>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == rows.len() {
                break;
            }
            let Some(found) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(pivot_row, found);
            let inv = T::one() / rows[pivot_row][col].clone();
            let support: Vec<usize> = (col..self.cols).filter(|&j| !rows[pivot_row][j].is_zero()).collect();
            for &j in &support {
                rows[pivot_row][j] = rows[pivot_row][j].clone() * inv.clone();
            }
            let pivot = rows[pivot_row].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == pivot_row || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for &j in &support {
                    row[j] = row[j].clone() - factor.clone() * pivot[j].clone();
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let reduced = Self { rows: self.rows, cols: self.cols, data: rows.concat() };
        Rref { reduced, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical null-space basis: one vector per free column, carrying a 1 in
    /// that column and 0 in every other free column.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let Rref { reduced, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&j| !is_pivot[j])
            .map(|free| {
                let mut v = vec![T::zero(); self.cols];
                v[free] = T::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced[(r, free)].clone();
                }
                v
            })
            .collect()
    }

    /// A solution of `self * x = b` with zeros in every free column, or `None`
    /// when the system is inconsistent.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(b.len(), self.rows, "right-hand side length differs from row count");
        let augmented = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let Rref { reduced, pivots, .. } = augmented.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = reduced[(r, self.cols)].clone();
        }
        Some(x)
    }
}

impl<T: Scalar> Matrix<T> {
    /// `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row counts differ");
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let Rref { reduced, pivots, .. } = self.hstack(&Self::identity(n)).rref();
        if pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| reduced[(i, n + j)].clone()))
    }

    /// Columns `cols` of `self`, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |i, j| self[(i, cols[j])].clone())
    }

    /// Rows `range` of `self`.
    pub fn select_rows(&self, rows: std::ops::Range<usize>) -> Self {
        let start = rows.start;
        Self::from_fn(rows.len(), self.cols, |i, j| self[(start + i, j)].clone())
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols].iter().map(|x| format!("{x:?}")).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Standard basis vectors `e_j` for the non-pivot indices of the span's rref.
/// Together with `span` they span the ambient space.
pub fn complement_basis<T: Scalar>(span: &[Vec<T>], ambient: usize) -> Vec<Vec<T>> {
    let pivots = if span.is_empty() { Vec::new() } else { Matrix::from_rows(span).rref().pivots };
    let mut is_pivot = vec![false; ambient];
    for p in pivots {
        is_pivot[p] = true;
    }
    (0..ambient).filter(|&j| !is_pivot[j]).map(|j| unit(ambient, j)).collect()
}

pub fn unit<T: Scalar>(n: usize, j: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[j] = T::one();
    v
}

pub fn is_zero_vec<T: Scalar>(v: &[T]) -> bool {
    v.iter().all(T::is_zero)
}

pub fn add_vec<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

pub fn sub_vec<T: Scalar>(a: &[T], b: &[T]) -> Vec<T> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

pub fn scale_vec<T: Scalar>(c: &T, a: &[T]) -> Vec<T> {
    a.iter().map(|x| c.clone() * x.clone()).collect()
}

/// `acc += c * v`, skipping the work when `c` is zero.
pub fn axpy<T: Scalar>(acc: &mut [T], c: &T, v: &[T]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = a.clone() + c.clone() * x.clone();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type M = Matrix<BigRational>;

    fn q(n: i64) -> BigRational {
        BigRational::from_int(n)
    }

    fn qv(xs: &[i64]) -> Vec<BigRational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let r = M::from_i64(2, 2, &[1, 2, 2, 4]).rref();
        assert_eq!((r.rank, r.pivots.clone()), (1, vec![0]));
        assert_eq!(r.reduced, M::from_i64(2, 2, &[1, 2, 0, 0]));

        let r = M::zeros(3, 3).rref();
        assert_eq!((r.rank, r.pivots), (0, vec![]));

        let r = M::identity(4).rref();
        assert_eq!((r.rank, r.pivots), (4, vec![0, 1, 2, 3]));
    }

    #[test]
    fn kernel_examples() {
        assert!(M::identity(3).kernel_basis().is_empty());
        assert_eq!(M::zeros(2, 3).kernel_basis(), vec![qv(&[1, 0, 0]), qv(&[0, 1, 0]), qv(&[0, 0, 1])]);
        let m = M::from_i64(2, 2, &[1, 2, 2, 4]);
        let k = m.kernel_basis();
        assert_eq!(k, vec![qv(&[-2, 1])]);
        assert!(is_zero_vec(&m.mul_vec(&k[0])));
    }

    #[test]
    fn solve_examples() {
        let b = qv(&[3, -1, 7]);
        assert_eq!(M::identity(3).solve(&b), Some(b));
        let m = M::from_i64(2, 2, &[1, 2, 2, 4]);
        assert_eq!(m.solve(&qv(&[1, 2])), Some(qv(&[1, 0])));
        assert_eq!(m.solve(&qv(&[1, 1])), None);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_basis::<BigRational>(&[], 2), vec![qv(&[1, 0]), qv(&[0, 1])]);
        assert_eq!(complement_basis(&[qv(&[1, 0])], 2), vec![qv(&[0, 1])]);
        assert_eq!(complement_basis(&[qv(&[1, 1, 0])], 3), vec![qv(&[0, 1, 0]), qv(&[0, 0, 1])]);
    }

    #[test]
    fn fractional_pivots() {
        let m = M::from_i64(2, 3, &[2, 1, 0, 0, 3, 1]);
        let r = m.rref();
        assert_eq!(r.reduced.row(0), &[q(1), q(0), -BigRational::new(1.into(), 6.into())][..]);
        let x = m.solve(&qv(&[1, 1])).unwrap();
        assert_eq!(m.mul_vec(&x), qv(&[1, 1]));
    }
}
