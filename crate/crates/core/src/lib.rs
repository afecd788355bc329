//! Exact computations for Nichols algebras of diagonal type whose Weyl
//! groupoid carries a super root system.

pub mod braiding;
pub mod classify;
pub mod cli;
pub mod exec;
pub mod nichols;
pub mod scalars;
pub mod superhopf;
pub mod superroots;
pub mod weyl;
