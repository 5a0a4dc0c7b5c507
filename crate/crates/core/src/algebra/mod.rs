//! Exact graded polynomial arithmetic over `S` and `S ⊗ S`.

pub mod graded;
pub mod matrix;
pub mod poly;

pub use graded::{enumerate_graded_piece, GradedPiece, PieceCache};
pub use matrix::{MatrixEvaluator, PolyMatrix};
pub use poly::{mono_degree, mono_mul, phi, psi_quotient, q_frac, q_int, Mono, Poly, Q, Ring, Side};
