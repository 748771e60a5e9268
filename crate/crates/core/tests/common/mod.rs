#![allow(dead_code)]

// generated high-precision literals
#[allow(clippy::excessive_precision, clippy::approx_constant)]
pub mod golden;
