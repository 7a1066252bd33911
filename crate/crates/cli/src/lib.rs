//! Library surface of the CLI: the output record schema and emitters, kept
//! importable so integration tests can parse command output with full
//! fidelity.

pub mod record;
