//! Library side of the command-line front end: verification suites and the
//! result cache, shared between the binary and the integration tests.

pub mod cache;
pub mod suites;
