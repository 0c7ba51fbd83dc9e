//! Exact computations with quantum matrix algebras on Shilov boundaries
//! and the degenerate principal series built on them.

pub mod freealg;
pub mod prinseries;
pub mod qmatrix;
pub mod qsymmatrix;
pub mod scalars;
pub mod uqaction;
