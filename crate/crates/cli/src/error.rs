use std::fmt;

use ringcode::codes::CodeError;
use ringcode::cyclo::CycloError;
use ringcode::distance::DistanceError;
use ringcode::gf::GfError;
use ringcode::maps::MapError;
use ringcode::quantum::QuantumError;
use serde_json::Value;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARAMETER: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;
pub const EXIT_RESOURCE: i32 = 5;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
    /// Extra JSON for stdout, e.g. a self-orthogonality witness.
    pub detail: Option<Value>,
}

impl CliError {
    pub fn new(code: i32, message: impl Into<String>) -> CliError {
        CliError {
            code,
            message: message.into(),
            detail: None,
        }
    }

    pub fn parameter(message: impl Into<String>) -> CliError {
        Self::new(EXIT_PARAMETER, message)
    }

    pub fn with_detail(mut self, detail: Value) -> CliError {
        self.detail = Some(detail);
        self
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<GfError> for CliError {
    fn from(e: GfError) -> Self {
        Self::parameter(e.to_string())
    }
}

impl From<CycloError> for CliError {
    fn from(e: CycloError) -> Self {
        Self::parameter(e.to_string())
    }
}

impl From<CodeError> for CliError {
    fn from(e: CodeError) -> Self {
        match e {
            CodeError::BudgetExceeded { .. } => Self::new(EXIT_RESOURCE, e.to_string()),
            _ => Self::parameter(e.to_string()),
        }
    }
}

impl From<MapError> for CliError {
    fn from(e: MapError) -> Self {
        match e {
            MapError::Singular | MapError::LengthMismatch(..) => Self::parameter(e.to_string()),
            MapError::NotCharTwo | MapError::Incompatible => Self::new(EXIT_PRECONDITION, e.to_string()),
            MapError::ImageMismatch => Self::new(EXIT_INTERNAL, e.to_string()),
        }
    }
}

impl From<DistanceError> for CliError {
    fn from(e: DistanceError) -> Self {
        match e {
            DistanceError::BudgetExceeded { .. } => Self::new(EXIT_RESOURCE, e.to_string()),
            DistanceError::ZeroCode => Self::new(EXIT_PRECONDITION, e.to_string()),
            _ => Self::new(EXIT_INTERNAL, e.to_string()),
        }
    }
}

impl From<QuantumError> for CliError {
    fn from(e: QuantumError) -> Self {
        match e {
            QuantumError::NotSelfOrthogonal { i, j } => Self::new(EXIT_PRECONDITION, e.to_string())
                .with_detail(serde_json::json!({ "witness": { "i": i, "j": j } })),
            QuantumError::ExponentTest { rep, partner } => Self::new(EXIT_PRECONDITION, e.to_string())
                .with_detail(serde_json::json!({ "witness": { "rep": rep, "partner": partner } })),
            QuantumError::NotQuadratic { .. } => Self::new(EXIT_PRECONDITION, e.to_string()),
            QuantumError::Distance(d) => d.into(),
            QuantumError::SingletonViolated { .. } | QuantumError::SizeMismatch { .. } => {
                Self::new(EXIT_INTERNAL, e.to_string())
            }
        }
    }
}
