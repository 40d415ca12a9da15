//! Command-line surface for the `fusring` workbench: the ring file format,
//! report rendering and command dispatch.

pub mod commands;
pub mod report;
pub mod ringfile;

pub use commands::run;
pub use ringfile::{emit_ring, parse_ring, ParseError};
