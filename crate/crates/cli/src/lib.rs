//! Library half of the `baseloci` binary: argument grammar, report
//! rendering, and the verification suites. Kept as a library so the
//! acceptance tests can drive the same code paths the binary uses.

pub mod certificate;
pub mod commands;
pub mod output;
pub mod suites;

pub use commands::run;
