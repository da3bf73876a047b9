//! Implementation crate for the `cfgen` binary: flag resolution, text
//! rendering, JSON report schema, the verification suite, and the command
//! bodies. The binary itself only parses arguments and maps outcomes to
//! exit codes (0 all checks passed, 1 a check failed, 2 usage error).

pub mod commands;
pub mod family;
pub mod oracles;
pub mod render;
pub mod report;
pub mod verify;
