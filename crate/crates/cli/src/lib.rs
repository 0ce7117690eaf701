//! Command-line front end for `closed-chroma-core`, plus the text formats it
//! reads and writes.

pub mod args;
pub mod commands;
pub mod edgelist;
pub mod family;
pub mod labeling;
pub mod report;

pub use commands::{run, Status};
