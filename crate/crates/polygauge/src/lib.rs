//! Exact-arithmetic toolkit for finite-dimensional asymmetric normed
//! spaces presented as polyhedral gauges.
//!
//! An asymmetric norm drops the symmetry axiom of a norm: ‖x| and ‖-x| may
//! differ, and one of them may even vanish at x ≠ 0. This crate models such
//! norms on Qⁿ as maxima of finitely many rational linear functionals
//! ("polyhedral gauges") and computes, in exact rational arithmetic:
//!
//! - the index of symmetry c(X) = inf{‖-x| : ‖x| = 1} with an attaining
//!   minimizer, the reverse supremum, and the product identity between them;
//! - the T₁ / type I / type III classification, with a non-T₁ witness
//!   direction whenever one exists;
//! - the dual cone X♭ of upper-semicontinuous functionals: flat norms,
//!   membership certificates, and Hahn–Banach support functionals;
//! - asymmetric operator norms ‖T|, continuity decisions, rank-one
//!   embeddings p⊗e, operators T with -T discontinuous, ε-perturbations
//!   that break symmetry, and the gauge structure of the operator space.
//!
//! Every computed value carries a certificate (an attaining point or a
//! divergence ray) that can be re-checked by plain evaluation. There is no
//! floating point anywhere in a decision path; the only approximate code in
//! the crate lives in test oracles.
//!
//! The [`polyhedra`] module houses the underlying machinery: an exact
//! two-phase simplex solver with unboundedness certificates and a double
//! description vertex enumerator.
//!
//! # Example
//!
//! ```
//! use num_traits::Zero;
//! use polygauge::gauge::fixtures;
//! use polygauge::symmetry;
//!
//! // The upper real line ‖t| = max(0, t): maximally asymmetric.
//! let upper = fixtures::upper_real();
//! let report = symmetry::report(&upper);
//! assert_eq!(report.space_type, symmetry::SpaceType::III);
//! assert!(report.c.is_zero());
//! ```
//!
//! The `examples/` directory exercises every major capability end to end;
//! `polygauge` (the binary) exposes the same operations as CLI subcommands.

pub mod certificate;
pub mod dual;
pub mod error;
pub mod gauge;
pub mod io;
pub mod linalg;
pub mod operators;
pub mod polyhedra;
pub mod report;
pub mod scalar;
pub mod symmetry;
pub mod verify;

pub use certificate::Certificate;
pub use error::{Error, Result};
pub use scalar::{ExtendedRat, Rat};
