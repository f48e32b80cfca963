//! Fundamental groups of the classified sextics and of the perturbations of their
//! singular points.

pub mod analyze;
pub mod groups;
pub mod lmn;
pub mod perturb;

pub use analyze::*;
pub use groups::*;
pub use lmn::{fragment_of, lmn_of, lmn_reading, row_reading, Fragment, Lmn, LmnError, LmnReading};
pub use perturb::*;
