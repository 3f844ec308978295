//! Exact structure-constant computations for Zinbiel algebras and their
//! categorified and homotopy relatives.
//!
//! Every algebraic object is stored as dense arrays of structure constants
//! over an exact field, and every defining identity is checked by evaluating
//! its residual on all basis tuples. The modules mirror the layers of the
//! theory:
//!
//! * [`linalg`], [`tensor`]: exact matrices, tensors and elimination.
//! * [`algebra`]: Zinbiel algebras, bimodules and morphisms.
//! * [`cohomology`]: the cochain complex `Cⁿ(Z, V)` for `n ≤ 4`.
//! * [`zinf`]: 2-term Z∞-algebras, their morphisms and the skeletal case.
//! * [`crossed`]: crossed modules and strict 2-term Z∞-algebras.
//! * [`two_vect`]: the 2-vector-space side (Zinbiel 2-algebras).
//! * [`extension`]: crossed-module extensions and their class in `H³`.
//! * [`dendriform`]: 2-term A∞/C∞/Dend∞ data and Rota–Baxter operators.
//!
//! Code is generic over [`Scalar`]; the aliases at the crate root fix the
//! scalar to arbitrary-precision rationals.

pub mod algebra;
pub mod cohomology;
pub mod crossed;
pub mod dendriform;
pub mod error;
pub mod extension;
pub mod fixtures;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod two_vect;
pub mod zinf;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision rationals.
pub type Q = num_rational::BigRational;

pub type QMatrix = linalg::Matrix<Q>;
pub type QTensor = tensor::Tensor<Q>;
pub type QCheckReport = report::CheckReport<Q>;
pub type QAlgebra = algebra::Algebra<Q>;
pub type QBimodule = algebra::Bimodule<Q>;
pub type QAlgebraMorphism = algebra::AlgebraMorphism<Q>;
pub type QCochain = cohomology::Cochain<Q>;
pub type QTwoTermZinf = zinf::TwoTermZinf<Q>;
pub type QZinfMorphism = zinf::ZinfMorphism<Q>;
pub type QCrossedModule = crossed::CrossedModule<Q>;
pub type QCrossedExtension = extension::CrossedExtension<Q>;
pub type QSectionPair = extension::SectionPair<Q>;
pub type QZinbiel2 = two_vect::Zinbiel2<Q>;
pub type QMor2 = two_vect::Mor2<Q>;
pub type QTwoTermAinf = dendriform::TwoTermAinf<Q>;
pub type QTwoTermDend = dendriform::TwoTermDend<Q>;
pub type QRotaBaxter2 = dendriform::RotaBaxter2<Q>;
