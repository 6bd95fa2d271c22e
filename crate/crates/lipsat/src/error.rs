use std::fmt;

use lipsat_core::arccert::ArcError;
use lipsat_core::lipsat::SaturationError;
use lipsat_core::{AffsgError, NumsgError, ToricError};
use serde_json::{json, Value};

/// Process exit status for each failure class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    InvalidInput,
    Unsupported,
    Invariant,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::InvalidInput => 1,
            ErrorKind::Unsupported => 2,
            ErrorKind::Invariant => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ErrorKind::InvalidInput => "invalid_input",
            ErrorKind::Unsupported => "unsupported",
            ErrorKind::Invariant => "invariant_violation",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::InvalidInput,
            message: message.into(),
        }
    }

    pub fn unsupported(message: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::Unsupported,
            message: message.into(),
        }
    }

    pub fn invariant(message: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::Invariant,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        self.kind.exit_code()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "code": self.exit_code(),
            "kind": self.kind.name(),
            "message": self.message,
        })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind.name(), self.message)
    }
}

impl std::error::Error for CliError {}

impl From<NumsgError> for CliError {
    fn from(e: NumsgError) -> Self {
        match e {
            NumsgError::TooLarge { .. } => CliError::unsupported(e.to_string()),
            _ => CliError::invalid(e.to_string()),
        }
    }
}

impl From<AffsgError> for CliError {
    fn from(e: AffsgError) -> Self {
        match e {
            AffsgError::BoxTooLarge { .. }
            | AffsgError::UnsupportedDimension(_)
            | AffsgError::ConeNotFull => CliError::unsupported(e.to_string()),
            _ => CliError::invalid(e.to_string()),
        }
    }
}

impl From<SaturationError> for CliError {
    fn from(e: SaturationError) -> Self {
        match e {
            SaturationError::Numerical(inner) => inner.into(),
            SaturationError::Affine(inner) => inner.into(),
            SaturationError::Invariant(_) => CliError::invariant(e.to_string()),
            _ => CliError::invalid(e.to_string()),
        }
    }
}

impl From<ArcError> for CliError {
    fn from(e: ArcError) -> Self {
        match e {
            ArcError::Saturation(inner) => inner.into(),
            // a witness family failing on a rejected point is a self-check failure
            ArcError::InconclusiveArc { .. } => CliError::invariant(e.to_string()),
            _ => CliError::invalid(e.to_string()),
        }
    }
}

impl From<ToricError> for CliError {
    fn from(e: ToricError) -> Self {
        match e {
            ToricError::IndexOutOfRange { .. } => CliError::invalid(e.to_string()),
            ToricError::BudgetExceeded | ToricError::Overflow => {
                CliError::unsupported(e.to_string())
            }
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::invalid(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lipsat_core::lipsat::InvariantViolation;

    #[test]
    fn exit_codes_by_class() {
        let e: CliError = SaturationError::Invariant(InvariantViolation::NotContained(vec![1, 2])).into();
        assert_eq!(e.exit_code(), 3);
        let e: CliError = AffsgError::BoxTooLarge { cells: 1 << 40 }.into();
        assert_eq!(e.exit_code(), 2);
        let e: CliError = SaturationError::Affine(AffsgError::UnsupportedDimension(4)).into();
        assert_eq!(e.exit_code(), 2);
        let e: CliError = NumsgError::NonCoprime { gcd: 2 }.into();
        assert_eq!(e.exit_code(), 1);
        let e: CliError = ToricError::BudgetExceeded.into();
        assert_eq!(e.exit_code(), 2);
        let e: CliError = ArcError::InconclusiveArc {
            ord_target: lipsat_core::Order::Finite(3),
            ord_ideal: lipsat_core::Order::Finite(3),
        }
        .into();
        assert_eq!(e.exit_code(), 3);
        assert_eq!(e.to_json()["kind"], "invariant_violation");
    }
}
