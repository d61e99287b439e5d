use thiserror::Error;

use crate::descriptor::DescriptorError;
use crate::modulus_file::ModulusFileError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] qcodes_core::Error),
    #[error(transparent)]
    Descriptor(#[from] DescriptorError),
    #[error(transparent)]
    ModulusFile(#[from] ModulusFileError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl CliError {
    /// 2 for bad input, 3 for internal invariant violations.
    pub fn exit_code(&self) -> i32 {
        use qcodes_core::Error as E;
        match self {
            CliError::Core(E::NonIntegralResult { .. }) | CliError::Internal(_) => 3,
            _ => 2,
        }
    }
}
