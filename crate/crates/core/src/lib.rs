//! Exact-arithmetic toolkit for exceptional sequences of invertible sheaves
//! on rational surfaces.
//!
//! The central object is the *toric system*: a cyclic list of divisor classes
//! `A_1, ..., A_n` on a rational surface with `A_i . A_{i+1} = 1`, all other
//! pairwise products zero, and `sum A_i = -K`.  Toric systems are the cyclic
//! counterpart of full exceptional sequences of line bundles: consecutive
//! differences of such a sequence form one, and each toric system determines
//! a smooth complete toric surface through Gale duality.
//!
//! Modules:
//! - [`picard`]: divisor classes over fixed bases of the Picard lattice,
//!   intersection products, canonical classes, Euler characteristics.
//! - [`fans`]: smooth complete toric surfaces as 2d fans, blow-ups and
//!   blow-downs, the census of surfaces with nef anticanonical class.
//! - [`cohomology`]: sheaf cohomology of line bundles on toric surfaces by
//!   exact lattice-point counting.
//! - [`systems`]: toric systems, Gale duality, and their symmetries.
//! - [`augment`]: standard augmentation, the inductive construction of toric
//!   systems along chains of blow-ups.
//! - [`sequences`]: exceptionality checks, existence decisions, and the
//!   search for cyclic strongly exceptional toric systems.
//! - [`quivers`]: endomorphism quivers with relations, McKay quivers, path
//!   algebra dimensions.
//! - [`deform`]: Hom-space dimensions for simultaneous blow-ups of the plane
//!   in arbitrary point configurations, and the parameter algebras that
//!   deform the Hirzebruch quivers.
//! - [`reports`]: reference data and the reproduction reports exposed by the
//!   command line tool.
//!
//! All arithmetic is exact: divisor coefficients are arbitrary-precision
//! integers and polygon computations use exact rationals.  No floating point
//! is used anywhere.

pub mod augment;
pub mod cohomology;
pub mod deform;
mod error;
pub mod fans;
pub mod linalg;
pub mod picard;
pub mod quivers;
pub mod reports;
pub mod sequences;
pub mod systems;

pub use error::{Error, Result};
