//! Front end for `exunit-core`: ring-spec parsing, element literals, the
//! default verification corpus and the command implementations behind the
//! `exunit` binary.

pub mod commands;
pub mod corpus;
pub mod dsl;
pub mod error;
pub mod factor;
pub mod literal;
pub mod verify;

pub use error::{CliError, Exit};
