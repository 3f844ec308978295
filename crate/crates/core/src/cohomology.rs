//! The low-degree cochain complex `Cⁿ(Z, V) = Hom(Z^{⊗n}, V)`, `1 ≤ n ≤ 4`.
//!
//! A cochain of degree `n` is a tensor of shape `(dim Z, …, dim Z, dim V)`.
//! Flattening follows the tensor layout: algebra indices in lexicographic
//! order with the module index last (fastest). Coboundary matrices act on
//! flattened cochains in this order.
//!
//! The coboundaries are
//!
//! ```text
//! (d¹ω)(x,y)     = x ▷ ω(y) − ω(x·y) + ω(x) ◁ y
//! (d²ω)(x,y,z)   = x ▷ (ω(y,z) + ω(z,y)) − ω(x·y, z) + ω(x, y·z + z·y) − ω(x,y) ◁ z
//! (d³ω)(x,y,z,t) = x ▷ {ω(y,z,t) − ω(z,t,y) + ω(z,y,t) − ω(t,z,y)}
//!                  − ω(x·y, z, t) + ω(x, y·z + z·y, t) − ω(x, y, z·t + t·z) + ω(x,y,z) ◁ t
//! ```
//!
//! [`coboundary`] evaluates these formulas directly; [`coboundary_matrix`]
//! assembles the same maps entry by entry. The two routes share no code.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{check_bimodule, check_zinbiel, Algebra, Bimodule};
use crate::error::{ensure_dims, Error, Result};
use crate::linalg::{add_vec, scale_vec, sub_vec, unit, Matrix};
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::{input_tuples, Tensor};

/// An element of `Cⁿ(Z, V)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain<T> {
    map: Tensor<T>,
}

impl<T: Scalar> Cochain<T> {
    pub fn new(map: Tensor<T>) -> Result<Self> {
        let deg = map.arity();
        if !(1..=4).contains(&deg) {
            return Err(Error::UnsupportedDegree(deg));
        }
        let nz = map.shape()[0];
        ensure_dims(map.input_shape().iter().all(|&d| d == nz), || {
            format!("cochain inputs must all range over the algebra, got {:?}", map.shape())
        })?;
        Ok(Self { map })
    }

    pub fn zero(degree: usize, algebra_dim: usize, module_dim: usize) -> Self {
        let mut shape = vec![algebra_dim; degree];
        shape.push(module_dim);
        Self::new(Tensor::zeros(&shape)).expect("degree in range")
    }

    pub fn from_flat(degree: usize, algebra_dim: usize, module_dim: usize, flat: Vec<T>) -> Result<Self> {
        let mut shape = vec![algebra_dim; degree];
        shape.push(module_dim);
        ensure_dims(flat.len() == shape.iter().product::<usize>(), || {
            format!("{} entries for a degree-{degree} cochain of shape {shape:?}", flat.len())
        })?;
        Self::new(Tensor::from_vec(&shape, flat))
    }

    pub fn degree(&self) -> usize {
        self.map.arity()
    }

    pub fn algebra_dim(&self) -> usize {
        self.map.shape()[0]
    }

    pub fn module_dim(&self) -> usize {
        self.map.out_dim()
    }

    pub fn map(&self) -> &Tensor<T> {
        &self.map
    }

    pub fn flatten(&self) -> Vec<T> {
        self.map.entries().to_vec()
    }

    pub fn at(&self, tuple: &[usize]) -> &[T] {
        self.map.fiber(tuple)
    }

    pub fn eval(&self, args: &[&[T]]) -> Vec<T> {
        self.map.apply(args)
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { map: self.map.add(&other.map) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self { map: self.map.sub(&other.map) }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { map: self.map.scale(c) }
    }
}

/// Summary of `Hⁿ = Zⁿ / Bⁿ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CohomologyResult {
    pub degree: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

/// `dim Cⁿ(Z, V)`.
pub fn cochain_dim(algebra_dim: usize, module_dim: usize, degree: usize) -> usize {
    algebra_dim.pow(degree as u32) * module_dim
}

fn check_context<T: Scalar>(a: &Algebra<T>, v: &Bimodule<T>) -> Result<()> {
    ensure_dims(v.algebra_dim() == a.dim(), || {
        format!("bimodule is over a {}-dimensional algebra, got {}", v.algebra_dim(), a.dim())
    })
}

fn check_cochain<T: Scalar>(a: &Algebra<T>, v: &Bimodule<T>, w: &Cochain<T>) -> Result<()> {
    check_context(a, v)?;
    ensure_dims(w.algebra_dim() == a.dim() && w.module_dim() == v.module_dim(), || {
        format!(
            "cochain of shape {:?} does not live on a {}-dimensional algebra with {}-dimensional module",
            w.map.shape(),
            a.dim(),
            v.module_dim()
        )
    })
}

/// Applies `dⁿ` for `n = ω.degree() ∈ {1, 2, 3}` by evaluating the defining
/// formula on every basis tuple.
pub fn coboundary<T: Scalar>(a: &Algebra<T>, v: &Bimodule<T>, w: &Cochain<T>) -> Result<Cochain<T>> {
    check_cochain(a, v, w)?;
    let deg = w.degree();
    if !(1..=3).contains(&deg) {
        return Err(Error::UnsupportedDegree(deg));
    }
    let (n, nv) = (a.dim(), v.module_dim());
    let e: Vec<Vec<T>> = (0..n).map(|i| unit(n, i)).collect();
    let prod = |i: usize, j: usize| a.product().fiber(&[i, j]).to_vec();
    let sym = |i: usize, j: usize| add_vec(a.product().fiber(&[i, j]), a.product().fiber(&[j, i]));
    let mut shape = vec![n; deg + 1];
    shape.push(nv);
    let map = Tensor::from_fibers(&shape, |t| match deg {
        1 => {
            let (x, y) = (t[0], t[1]);
            let mut r = v.act_left(&e[x], w.at(&[y]));
            r = sub_vec(&r, &w.eval(&[&prod(x, y)]));
            add_vec(&r, &v.act_right(w.at(&[x]), &e[y]))
        }
        2 => {
            let (x, y, z) = (t[0], t[1], t[2]);
            let mut r = v.act_left(&e[x], &add_vec(w.at(&[y, z]), w.at(&[z, y])));
            r = sub_vec(&r, &w.eval(&[&prod(x, y), &e[z]]));
            r = add_vec(&r, &w.eval(&[&e[x], &sym(y, z)]));
            sub_vec(&r, &v.act_right(w.at(&[x, y]), &e[z]))
        }
        _ => {
            let (x, y, z, u) = (t[0], t[1], t[2], t[3]);
            let mut block = sub_vec(w.at(&[y, z, u]), w.at(&[z, u, y]));
            block = add_vec(&block, w.at(&[z, y, u]));
            block = sub_vec(&block, w.at(&[u, z, y]));
            let mut r = v.act_left(&e[x], &block);
            r = sub_vec(&r, &w.eval(&[&prod(x, y), &e[z], &e[u]]));
            r = add_vec(&r, &w.eval(&[&e[x], &sym(y, z), &e[u]]));
            r = sub_vec(&r, &w.eval(&[&e[x], &e[y], &sym(z, u)]));
            add_vec(&r, &v.act_right(w.at(&[x, y, z]), &e[u]))
        }
    });
    Cochain::new(map)
}

/// Entry-by-entry assembly of the matrix of `dⁿ`, shape `dim Cⁿ⁺¹ × dim Cⁿ`.
pub fn coboundary_matrix<T: Scalar>(a: &Algebra<T>, v: &Bimodule<T>, degree: usize) -> Result<Matrix<T>> {
    check_context(a, v)?;
    if !(1..=3).contains(&degree) {
        return Err(Error::UnsupportedDegree(degree));
    }
    let mut asm = Assembler::new(a, v, degree);
    for t in input_tuples(&vec![a.dim(); degree + 1]) {
        asm.row = t.clone();
        match degree {
            1 => {
                let (x, y) = (t[0], t[1]);
                asm.left(x, 1, &[y]);
                asm.substitute(-1, &[], (x, y), &[]);
                asm.right(1, &[x], y);
            }
            2 => {
                let (x, y, z) = (t[0], t[1], t[2]);
                asm.left(x, 1, &[y, z]);
                asm.left(x, 1, &[z, y]);
                asm.substitute(-1, &[], (x, y), &[z]);
                asm.substitute(1, &[x], (y, z), &[]);
                asm.substitute(1, &[x], (z, y), &[]);
                asm.right(-1, &[x, y], z);
            }
            _ => {
                let (x, y, z, u) = (t[0], t[1], t[2], t[3]);
                asm.left(x, 1, &[y, z, u]);
                asm.left(x, -1, &[z, u, y]);
                asm.left(x, 1, &[z, y, u]);
                asm.left(x, -1, &[u, z, y]);
                asm.substitute(-1, &[], (x, y), &[z, u]);
                asm.substitute(1, &[x], (y, z), &[u]);
                asm.substitute(1, &[x], (z, y), &[u]);
                asm.substitute(-1, &[x, y], (z, u), &[]);
                asm.substitute(-1, &[x, y], (u, z), &[]);
                asm.right(1, &[x, y, z], u);
            }
        }
    }
    Ok(asm.matrix)
}

struct Assembler<'a, T> {
    a: &'a Algebra<T>,
    v: &'a Bimodule<T>,
    matrix: Matrix<T>,
    row: Vec<usize>,
}

impl<'a, T: Scalar> Assembler<'a, T> {
    fn new(a: &'a Algebra<T>, v: &'a Bimodule<T>, degree: usize) -> Self {
        let (n, nv) = (a.dim(), v.module_dim());
        let matrix = Matrix::zeros(cochain_dim(n, nv, degree + 1), cochain_dim(n, nv, degree));
        Self { a, v, matrix, row: Vec::new() }
    }

    fn flat(&self, tuple: &[usize], out: usize) -> usize {
        let n = self.a.dim();
        tuple.iter().fold(0, |acc, &i| acc * n + i) * self.v.module_dim() + out
    }

    fn bump(&mut self, r: usize, c: usize, sign: i64, coeff: &T) {
        let delta = if sign > 0 { coeff.clone() } else { -coeff.clone() };
        self.matrix[(r, c)] = self.matrix[(r, c)].clone() + delta;
    }

    /// `sign · x ▷ ω(arg)`
    fn left(&mut self, x: usize, sign: i64, arg: &[usize]) {
        let nv = self.v.module_dim();
        for m in 0..nv {
            for w in 0..nv {
                let c = self.v.left().get(&[x, m, w]);
                if !c.is_zero() {
                    let (r, col) = (self.flat(&self.row, w), self.flat(arg, m));
                    self.bump(r, col, sign, &c.clone());
                }
            }
        }
    }

    /// `sign · ω(arg) ◁ y`
    fn right(&mut self, sign: i64, arg: &[usize], y: usize) {
        let nv = self.v.module_dim();
        for m in 0..nv {
            for w in 0..nv {
                let c = self.v.right().get(&[m, y, w]);
                if !c.is_zero() {
                    let (r, col) = (self.flat(&self.row, w), self.flat(arg, m));
                    self.bump(r, col, sign, &c.clone());
                }
            }
        }
    }

    /// `sign · ω(prefix, p·q, suffix)`
    fn substitute(&mut self, sign: i64, prefix: &[usize], (p, q): (usize, usize), suffix: &[usize]) {
        let (n, nv) = (self.a.dim(), self.v.module_dim());
        for k in 0..n {
            let c = self.a.product().get(&[p, q, k]).clone();
            if c.is_zero() {
                continue;
            }
            let mut arg = prefix.to_vec();
            arg.push(k);
            arg.extend_from_slice(suffix);
            for w in 0..nv {
                let (r, col) = (self.flat(&self.row, w), self.flat(&arg, w));
                self.bump(r, col, sign, &c);
            }
        }
    }
}

fn require_valid_context<T: Scalar>(a: &Algebra<T>, v: &Bimodule<T>) -> Result<()> {
    let z = check_zinbiel(a);
    if !z.pass() {
        return Err(Error::CheckFailed { check: "check_zinbiel", summary: z.summary() });
    }
    let b = check_bimodule(a, v)?;
    if !b.pass() {
        return Err(Error::CheckFailed { check: "check_bimodule", summary: b.summary() });
    }
    Ok(())
}

/// Dimensions of `Zⁿ`, `Bⁿ` and `Hⁿ` for `n ∈ {2, 3}`.
pub fn cohomology_dim<T: Scalar>(a: &Algebra<T>, v: &Bimodule<T>, degree: usize) -> Result<CohomologyResult> {
    if !(2..=3).contains(&degree) {
        return Err(Error::UnsupportedDegree(degree));
    }
    require_valid_context(a, v)?;
    let dim = cochain_dim(a.dim(), v.module_dim(), degree);
    let cocycles = dim - coboundary_matrix(a, v, degree)?.rank();
    let coboundaries = coboundary_matrix(a, v, degree - 1)?.rank();
    Ok(CohomologyResult { degree, cocycles, coboundaries, cohomology: cocycles - coboundaries })
}

pub fn is_cocycle<T: Scalar>(a: &Algebra<T>, v: &Bimodule<T>, w: &Cochain<T>) -> Result<bool> {
    Ok(coboundary(a, v, w)?.is_zero())
}

/// A cochain `η` with `d η = ω`, or `None` if `ω` is not a coboundary.
pub fn coboundary_preimage<T: Scalar>(a: &Algebra<T>, v: &Bimodule<T>, w: &Cochain<T>) -> Result<Option<Cochain<T>>> {
    check_cochain(a, v, w)?;
    let deg = w.degree();
    if !(2..=4).contains(&deg) {
        return Err(Error::UnsupportedDegree(deg));
    }
    let m = coboundary_matrix(a, v, deg - 1)?;
    Ok(match m.solve(&w.flatten()) {
        Some(x) => Some(Cochain::from_flat(deg - 1, a.dim(), v.module_dim(), x)?),
        None => None,
    })
}

/// A seeded rational combination of the canonical basis of `ker dⁿ`.
pub fn random_cocycle<T: Scalar>(a: &Algebra<T>, v: &Bimodule<T>, degree: usize, seed: u64) -> Result<Cochain<T>> {
    if !(2..=3).contains(&degree) {
        return Err(Error::UnsupportedDegree(degree));
    }
    let basis = coboundary_matrix(a, v, degree)?.kernel_basis();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut flat = vec![T::zero(); cochain_dim(a.dim(), v.module_dim(), degree)];
    for b in &basis {
        let num = T::from_int(rng.gen_range(-4..=4));
        let den = T::from_int(rng.gen_range(1..=3));
        flat = add_vec(&flat, &scale_vec(&(num / den), b));
    }
    Cochain::from_flat(degree, a.dim(), v.module_dim(), flat)
}

/// Entries of `dⁿ⁺¹ ∘ dⁿ` (`n ∈ {1, 2}`), computed by pushing every column of
/// the assembled `dⁿ` through the evaluated `dⁿ⁺¹`. Violations are reported
/// at `(column, row)`; the condition holds exactly when the composite is zero.
///
/// This avoids materializing the matrix of `dⁿ⁺¹`, which is the largest
/// object in the complex.
pub fn check_complex<T: Scalar>(a: &Algebra<T>, v: &Bimodule<T>, degree: usize) -> Result<CheckReport<T>> {
    if !(1..=2).contains(&degree) {
        return Err(Error::UnsupportedDegree(degree));
    }
    let id = format!("d{}d{}", degree + 1, degree);
    let mut report = CheckReport::new();
    report.condition(&id);
    let m = coboundary_matrix(a, v, degree)?;
    for j in 0..m.cols() {
        let column = Cochain::from_flat(degree + 1, a.dim(), v.module_dim(), m.column(j))?;
        let image = coboundary(a, v, &column)?;
        for (r, entry) in image.map().entries().iter().enumerate() {
            if !entry.is_zero() {
                report.record(&id, &[j, r], vec![entry.clone()]);
            }
        }
    }
    Ok(report)
}
