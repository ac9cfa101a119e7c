use thiserror::Error;

use crate::blade::Blade;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliffordError {
    #[error("dimension {dim} out of range 1..={max}")]
    DimensionOutOfRange { dim: usize, max: usize },
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },
    #[error("grade {grade} out of range 0..={dim}")]
    GradeOutOfRange { grade: usize, dim: usize },
    #[error("expected {expected} coefficients, got {actual}")]
    CoefficientCount { expected: usize, actual: usize },
    #[error("generator index {index} out of range for dimension {dim}")]
    GeneratorOutOfRange { index: usize, dim: usize },
    #[error("blade {blade} out of range for dimension {dim}")]
    BladeOutOfRange { blade: Blade, dim: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphError {
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("product {a} * {b} is not a single signed blade: {detail}")]
    ClosureViolation { a: Blade, b: Blade, detail: String },
    #[error("product with the unit fails at ({a}, {b})")]
    NotUnital { a: Blade, b: Blade },
    #[error("generator square {blade} * {blade} is not a scalar")]
    NonScalarSquare { blade: Blade },
    #[error("table has {actual} entries, expected {expected}")]
    EntryCount { expected: usize, actual: usize },
    #[error("entry ({a}, {b}) appears out of order or twice")]
    EntryOrder { a: Blade, b: Blade },
    #[error("plan source {plan} does not match table squares {table}")]
    PlanSourceMismatch { plan: String, table: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Morph(#[from] MorphError),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("context does not match the {form} form: {reason}")]
    WrongTable { form: &'static str, reason: String },
    #[error("expected a pure 2-form")]
    NotTwoForm,
    #[error("operation requires dimension {expected}, got {actual}")]
    UnsupportedDimension { expected: usize, actual: usize },
}
