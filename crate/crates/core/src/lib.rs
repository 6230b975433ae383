//! Evaluators for higher order Wirtinger, isoperimetric and Chernoff type
//! inequalities on polygons, closed Fourier curves and support functions.
//!
//! Every evaluator returns an [`InequalityReport`] whose `deficit` is
//! nonnegative exactly when the inequality holds, computed from per-mode
//! weights so that equality cases come out at round-off level. The
//! [`oracle`] module recomputes the same quantities by brute force.
//!
//! ```
//! use iso_wirtinger::discrete::{wirtinger_m, EvalOptions};
//! use iso_wirtinger::polygon::random_polygon;
//!
//! let p = random_polygon(9, None, 42).unwrap();
//! let report = wirtinger_m(&p, 3, &EvalOptions::default()).unwrap();
//! assert!(report.holds);
//! ```
//!
//! A longer walkthrough lives in the `book/` directory of the repository.

pub mod chernoff;
pub mod coeff;
pub mod discrete;
pub mod error;
pub mod fourier;
pub mod io;
pub mod oracle;
pub mod polygon;
pub mod report;
pub mod smooth;
pub mod tolerance;

pub use num_complex;

pub use error::{Error, Result};
pub use fourier::{ComplexSeq, Spectrum};
pub use polygon::Polygon;
pub use report::{InequalityReport, TheoremId};

#[cfg(doctest)]
pub mod guide {
    #[doc = include_str!("../../../README.md")]
    pub mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/polygons.md")]
    pub mod polygons {}
    #[doc = include_str!("../../../book/src/discrete.md")]
    pub mod discrete {}
    #[doc = include_str!("../../../book/src/smooth.md")]
    pub mod smooth {}
    #[doc = include_str!("../../../book/src/chernoff.md")]
    pub mod chernoff {}
    #[doc = include_str!("../../../book/src/tolerances.md")]
    pub mod tolerances {}
}
