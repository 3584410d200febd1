//! Command-line driver for `resonance-core`: argument parsing, the parallel
//! scheduler, file formats, class-list caching and report tables.

pub mod app;
pub mod args;
pub mod cache;
pub mod io;
pub mod parallel;
pub mod report;
pub mod verify;
