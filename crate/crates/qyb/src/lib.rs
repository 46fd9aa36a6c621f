//! Exact computations with R-matrices of quantum groups and the Hecke and
//! Birman-Murakami-Wenzl algebras they represent.

pub mod baxter;
pub mod chains;
pub mod cli;
pub mod knots;
pub mod matalg;
pub mod qcombin;
pub mod report;
pub mod ring;
pub mod rmatrix;
pub mod tensor;
pub mod towers;
