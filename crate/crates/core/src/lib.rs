//! Evaluation of Gauss, Appell and Lauricella hypergeometric functions with
//! their continuations, elliptic integrals, and a verified catalog of
//! closed-form identities and hyperelliptic reductions.

pub mod elliptic;
pub mod hyperfun;
pub mod identities;
pub mod numerics;
pub mod quadrature;
pub mod reductions;
pub mod report;

pub use numerics::{BranchSide, ComplexValue, DEFAULT_SIDE};
