//! Exact arithmetic for alternating sign matrices and the identities that
//! surround them: the six-vertex correspondence with its vertex census,
//! tournament generating functions, the condensation-defined one-parameter
//! determinant deformation, and the partition-function determinant with its
//! Cauchy, permanent, and counting specializations.
//!
//! Everything is computed over arbitrary-precision rationals or over sparse
//! integer-exponent polynomials, so every check in [`report::CheckReport`]
//! is exact: no tolerances, no floating point.
//!
//! The crate doubles as a binary (`altsign`) exposing enumeration,
//! statistics, identity checks, and audit tables; see [`cli`].

pub mod asm;
pub mod cli;
pub mod decorated;
pub mod ik;
pub mod interp;
pub mod lambda_det;
pub mod poly;
pub mod rational;
pub mod report;
pub mod sample;
pub mod six_vertex;
pub mod tournament;

pub use asm::{count_by_enumeration, enumerate_asms, Asm, AsmError};
pub use decorated::{enumerate_decorated, Choice, DecoratedAsm};
pub use ik::{asm_count_formula, ik_lhs, ik_rhs, IkPoint};
pub use lambda_det::{lambda_det_asm_sum, lambda_det_condensation, RatMatrix};
pub use poly::{LaurentMonomial, LaurentPoly, VarId, VarSet};
pub use rational::{int, rat, Rat};
pub use report::{CheckReport, Witness};
pub use six_vertex::{AsmStats, SixVertexConfig, VertexKind};
pub use tournament::{enumerate_tournaments, Tournament};
