//! Exact planar geometry over quadratic number towers, a checker for the
//! equilateral-triangle configuration behind the Pythagorean identity, and a
//! constructive Wallace–Bolyai–Gerwien dissection pipeline whose outputs are
//! verified scissors-congruence certificates.

pub mod construction;
pub mod dissection;
pub mod exactnum;
pub mod geom2d;
pub mod report;
pub mod wbg;

pub use exactnum::{BigRational, FieldElem, Interval};
pub use geom2d::{Point, Polygon, RigidMotion};
pub use report::{CheckResult, VerificationReport, Witness};
