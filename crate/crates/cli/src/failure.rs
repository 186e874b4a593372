use std::fmt;

use dnacyclic::{CatalogError, CodeError, ConstraintError, DeletionError, PolyError};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Cap(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
        }
    }

    pub fn usage(msg: impl fmt::Display) -> Self {
        Failure::Usage(msg.to_string())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Cap(m) => f.write_str(m),
        }
    }
}

impl From<CodeError> for Failure {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::usage(e),
        }
    }
}

impl From<DeletionError> for Failure {
    fn from(e: DeletionError) -> Self {
        match e {
            DeletionError::PairCapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::usage(e),
        }
    }
}

impl From<ConstraintError> for Failure {
    fn from(e: ConstraintError) -> Self {
        match e {
            ConstraintError::Code(c) => c.into(),
            _ => Failure::usage(e),
        }
    }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        Failure::usage(e)
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Code(c) => c.into(),
            _ => Failure::usage(e),
        }
    }
}
