//! Reduced HOMFLY and sl(N) Khovanov-Rozansky homology of braid closures,
//! wall-crossing morphisms between homologies of knots that differ by a
//! crossing change, and the iterated-cone homology of singular knots.

pub mod algebra;
pub mod braid;
pub mod complexes;
pub mod conventions;
pub mod error;
pub mod exec;
pub mod homology;
pub mod laurent;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod soergel;
pub mod wallcross;

pub use error::{Error, Result};
