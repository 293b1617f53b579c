//! Library side of the `ldikit` binary: file format and command logic,
//! split out so integration tests can exercise them directly.

pub mod codefile;
pub mod commands;
