//! Support library for the `genbinom` binary: structured command results
//! and the built-in regression selftest.

pub mod output;
pub mod selftest;
