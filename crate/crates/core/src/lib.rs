//! Computational abelian categories at desk scale.
//!
//! The crate is layered bottom-up:
//!
//! - [`intlin`] — exact integer linear algebra (Smith normal form, integer
//!   kernels, diophantine solving) on arbitrary-precision matrices;
//! - [`abcat`] — the abelian-category contract and every construction that
//!   can be derived from it alone (classification, images, pullbacks,
//!   pushouts, exactness checks, the opposite category);
//! - [`fgab`] — finitely generated abelian groups as a concrete instance,
//!   built on invariant-factor normal forms;
//! - [`vecfp`] — finite-dimensional vector spaces over a prime field as a
//!   second, independent instance;
//! - [`diagram`] — diagrams, commutativity checking and the lemma verifiers
//!   (short five lemma, its dual, the pullback proof trace, nine lemma);
//! - [`genprop`] — deterministic instance generators and an element-level
//!   brute-force oracle used to cross-check every categorical construction.

pub mod abcat;
pub mod diagram;
pub mod error;
pub mod fgab;
pub mod genprop;
pub mod intlin;
pub mod vecfp;

pub use error::{Error, Result};
