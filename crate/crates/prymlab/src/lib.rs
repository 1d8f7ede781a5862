//! Exact computation of mapping-class actions on the rational first homology
//! of finite regular covers of closed surfaces.
//!
//! The toolkit works entirely symbolically:
//!
//! - [`word`], [`surface`], [`automorphism`] — freely reduced words in the
//!   standard surface-group generators, Dehn's algorithm for the word
//!   problem, and a library of twist automorphisms with stated inverses.
//! - [`perm`], [`cover`] — finite regular covers encoded as homomorphisms
//!   onto permutation groups in regular action, Schreier transversals and
//!   the rewriting of kernel words, and invariance tests for automorphisms.
//! - [`ratmat`], [`homology`] — arbitrary-precision rational matrices and
//!   canonical subspaces; homology charts of covers, the matrices of lifted
//!   automorphisms, inclusion-induced maps, and lifted curve classes.
//! - [`poly`], [`spectra`] — exact characteristic polynomials, cyclotomic
//!   factors, and the maximal subspace on which a matrix acts with finite
//!   orbits.
//! - [`constructions`] — explicit cyclic covers with prescribed lifted-curve
//!   behaviour, mapping-torus homology ranks, characteristic refinements of
//!   regular covers, and end-to-end verification reports.
//!
//! Everything is immutable after construction and safe to share across
//! threads. With the default `parallel` feature, independent matrix columns
//! and kernel blocks are evaluated on a rayon pool; disabling the feature
//! produces identical results on a single thread.

pub mod automorphism;
pub mod constructions;
pub mod cover;
pub mod error;
pub mod homology;
pub mod parallel;
pub mod perm;
pub mod poly;
pub mod ratmat;
pub mod spectra;
pub mod surface;
pub mod word;

pub use automorphism::{AutomorphismPair, GeneratorMap};
pub use cover::{FiniteQuotient, SchreierSystem};
pub use error::{Error, Result};
pub use homology::HomologyChart;
pub use ratmat::{Rat, RatMatrix, RatSubspace};
pub use surface::{SurfaceGroup, surface_relator};
pub use word::{Family, Letter, Word};
