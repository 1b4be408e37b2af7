//! Exact constructions around the stable ℤ/3ℤ-grading of E8.

pub mod cyclo;
pub mod linalg;
pub mod rootsys;
pub mod snf;
pub mod gradedlie;
pub mod heis;
pub mod vinberg;
pub mod genus2;
pub mod report;
pub mod cache;
