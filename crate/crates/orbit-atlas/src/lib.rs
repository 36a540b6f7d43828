//! Command-line companion to `orbit-atlas-core`: JSON/CSV/DOT serialization
//! of the orbit combinatorics and the named verification checks behind the
//! `verify` subcommand.

pub mod checks;
pub mod dot;
pub mod dto;
