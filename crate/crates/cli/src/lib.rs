//! Batch front end for `distab-core`: scene files in, deterministic reports out.

pub mod commands;
pub mod report;
pub mod scene;
pub mod suite;

use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SUITE_FAILURE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    /// A problem located at a TOML path such as `ideals.top.generators[1]`.
    #[error("{path}: {message}")]
    Scene { path: String, message: String },
    #[error("invalid scene: {0}")]
    Toml(String),
    #[error("cannot read {0}: {1}")]
    Io(String, std::io::Error),
    #[error("cannot write {0}: {1}")]
    Output(String, String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        EXIT_INPUT_ERROR
    }
}
