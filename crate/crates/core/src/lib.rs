//! Gröbner–Shirshov bases for dialgebras.
//!
//! A dialgebra carries two associative products `⊢` and `⊣` tied together by
//! three mixed axioms; its free object has a basis of normal diwords — words
//! with one distinguished center letter. This crate implements the weight
//! ordering on normal diwords, dipolynomial arithmetic, elimination of
//! leading diwords and normal forms, the four composition types with the
//! Gröbner–Shirshov property check and a completion loop, presentation
//! builders for enveloping dialgebras of Leibniz algebras, bar extensions,
//! free products, and Clifford dialgebras, and a brute-force linear-algebra
//! oracle that verifies basis claims by exact rank computation.

pub mod composition;
pub mod constructions;
pub mod diword;
pub mod error;
pub mod io;
mod linalg;
pub mod oracle;
pub mod poly;
pub mod rewrite;
pub mod scalar;

pub use composition::{check_gsb, complete, CompletionStatus, CompositionReport};
pub use diword::{Alphabet, DiOp, Gen, NormalDiword, Normedness};
pub use error::{Error, Result};
pub use poly::DiPolynomial;
pub use rewrite::{irr_enumerate, normal_form, Constraint, Presentation};
pub use scalar::{Field, Scalar};
