//! Structure-constant arrays.
//!
//! A tensor of shape `(n_1, ..., n_k, m)` stores a multilinear map
//! `V_1 x ... x V_k -> W` with `dim W = m`: entry `[i_1, ..., i_k, j]` is the
//! coefficient of the `j`-th output basis vector in the image of the basis
//! tuple `(i_1, ..., i_k)`. Entries are kept in lexicographic (row-major)
//! order, so the output index varies fastest.

use crate::linalg::{axpy, Matrix};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor<T> {
    shape: Vec<usize>,
    data: Vec<T>,
}

impl<T: Scalar> Tensor<T> {
    pub fn zeros(shape: &[usize]) -> Self {
        assert!(!shape.is_empty(), "a tensor needs at least an output index");
        let len = shape.iter().product();
        Self { shape: shape.to_vec(), data: vec![T::zero(); len] }
    }

    pub fn from_vec(shape: &[usize], data: Vec<T>) -> Self {
        assert_eq!(data.len(), shape.iter().product::<usize>(), "tensor entries must match shape");
        Self { shape: shape.to_vec(), data }
    }

    /// Fills every output fiber from a function of the input basis tuple.
    pub fn from_fibers(shape: &[usize], mut fiber: impl FnMut(&[usize]) -> Vec<T>) -> Self {
        let mut t = Self::zeros(shape);
        let out = t.out_dim();
        let input_shape = t.input_shape().to_vec();
        for (pos, idx) in input_tuples(&input_shape).enumerate() {
            let v = fiber(&idx);
            assert_eq!(v.len(), out, "fiber length differs from output dimension");
            t.data[pos * out..(pos + 1) * out].clone_from_slice(&v);
        }
        t
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn input_shape(&self) -> &[usize] {
        &self.shape[..self.shape.len() - 1]
    }

    pub fn arity(&self) -> usize {
        self.shape.len() - 1
    }

    pub fn out_dim(&self) -> usize {
        *self.shape.last().unwrap()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn offset(&self, idx: &[usize]) -> usize {
        assert_eq!(idx.len(), self.shape.len(), "index rank mismatch");
        idx.iter().zip(&self.shape).fold(0, |acc, (&i, &n)| {
            assert!(i < n, "index {i} out of range {n}");
            acc * n + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &T {
        &self.data[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], value: T) {
        let o = self.offset(idx);
        self.data[o] = value;
    }

    /// The output vector of a basis input tuple.
    pub fn fiber(&self, inputs: &[usize]) -> &[T] {
        let start = self.fiber_start(inputs);
        &self.data[start..start + self.out_dim()]
    }

    pub fn fiber_mut(&mut self, inputs: &[usize]) -> &mut [T] {
        let start = self.fiber_start(inputs);
        let out = self.out_dim();
        &mut self.data[start..start + out]
    }

    fn fiber_start(&self, inputs: &[usize]) -> usize {
        assert_eq!(inputs.len(), self.arity(), "input tuple rank mismatch");
        let pos = inputs.iter().zip(self.input_shape()).fold(0, |acc, (&i, &n)| {
            assert!(i < n, "index {i} out of range {n}");
            acc * n + i
        });
        pos * self.out_dim()
    }

    /// Evaluates the multilinear map on arbitrary vectors.
    pub fn apply(&self, args: &[&[T]]) -> Vec<T> {
        assert_eq!(args.len(), self.arity(), "argument count mismatch");
        for (a, &n) in args.iter().zip(self.input_shape()) {
            assert_eq!(a.len(), n, "argument length mismatch");
        }
        let supports: Vec<Vec<(usize, &T)>> =
            args.iter().map(|a| a.iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()).collect();
        let mut out = vec![T::zero(); self.out_dim()];
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        let mut cursor = vec![0usize; supports.len()];
        let mut idx = vec![0usize; supports.len()];
        loop {
            let mut coeff = T::one();
            for (k, &c) in cursor.iter().enumerate() {
                let (i, x) = supports[k][c];
                idx[k] = i;
                coeff = coeff * x.clone();
            }
            axpy(&mut out, &coeff, self.fiber(&idx));
            // advance the odometer, last argument fastest
            let mut k = supports.len();
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                cursor[k] += 1;
                if cursor[k] < supports[k].len() {
                    break;
                }
                cursor[k] = 0;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.shape, other.shape, "shape mismatch");
        Self { shape: self.shape.clone(), data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.shape, other.shape, "shape mismatch");
        Self { shape: self.shape.clone(), data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { shape: self.shape.clone(), data: self.data.iter().map(|x| c.clone() * x.clone()).collect() }
    }

    /// Reorders the inputs: the result `r` satisfies
    /// `r(a_0, ..., a_{k-1}) = self(a_{perm[0]}, ..., a_{perm[k-1]})`.
    pub fn permute_inputs(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.arity(), "permutation length mismatch");
        let in_shape = self.input_shape();
        let mut shape = vec![0; perm.len()];
        for (s, &p) in perm.iter().enumerate() {
            shape[p] = in_shape[s];
        }
        shape.push(self.out_dim());
        Self::from_fibers(&shape, |idx| {
            let src: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
            self.fiber(&src).to_vec()
        })
    }

    /// Groups the inputs into rows and the output index into columns.
    pub fn to_matrix(&self) -> Matrix<T> {
        let cols = self.out_dim();
        Matrix::from_vec(self.data.len() / cols.max(1), cols, self.data.clone())
    }
}

/// All basis tuples of the given input shape in lexicographic order.
pub fn input_tuples(shape: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = shape.iter().product();
    (0..total).map(move |mut pos| {
        let mut idx = vec![0; shape.len()];
        for k in (0..shape.len()).rev() {
            idx[k] = pos % shape[k];
            pos /= shape[k];
        }
        idx
    })
}
