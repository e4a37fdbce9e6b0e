//! Error type shared by every module in the crate.

use thiserror::Error;

/// Everything that can go wrong when constructing or analysing a metric space.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix must have at least one row")]
    EmptyMatrix,

    #[error("d[{i}][{j}] = {a} but d[{j}][{i}] = {b}")]
    AsymmetricMatrix { i: usize, j: usize, a: f64, b: f64 },

    /// Off-diagonal distances must be finite and strictly positive.
    #[error("d[{i}][{j}] = {value} is not a strictly positive distance")]
    NegativeDistance { i: usize, j: usize, value: f64 },

    #[error("d[{i}][{i}] = {value}, diagonal must be zero")]
    NonzeroDiagonal { i: usize, value: f64 },

    #[error("triangle inequality fails: d[{i}][{j}] = {direct} > d[{i}][{k}] + d[{k}][{j}] = {detour}")]
    TriangleViolation {
        i: usize,
        j: usize,
        k: usize,
        direct: f64,
        detour: f64,
    },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("edge {{{u}, {v}}} has weight {weight}, weights must be strictly positive")]
    NonpositiveWeight { u: usize, v: usize, weight: f64 },

    #[error("graph is disconnected: vertex {vertex} is unreachable")]
    DisconnectedGraph { vertex: usize },

    #[error("operands have different sizes: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("entry [{i}][{j}] is not finite")]
    NonFiniteEntry { i: usize, j: usize },

    #[error("point has dimension {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty input, need at least one point")]
    EmptyInput,

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    /// The kernel has a genuinely negative eigenvalue, so the metric admits
    /// no isometric Hilbert-space embedding.
    #[error("metric is not embeddable: kernel eigenvalue {lambda_min} < 0")]
    NotEmbeddable { lambda_min: f64 },

    #[error("expected a space on {expected} points, got {got}")]
    WrongSize { expected: usize, got: usize },

    #[error("vertex {vertex} is isolated")]
    IsolatedVertex { vertex: usize },

    #[error("map is constant, quotient undefined")]
    ConstantMap,

    #[error("maps are defined on different graphs")]
    GraphMismatch,

    #[error("maps have different target metric spaces")]
    TargetMismatch,

    #[error("target metric space must have at least two points")]
    TargetTooSmall,

    #[error("search space of {required} assignments exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("edge {{{u}, {v}}} has weight {weight}, expected unit weights")]
    UnitWeightRequired { u: usize, v: usize, weight: f64 },

    #[error("bad parameters: {reason}")]
    BadParameters { reason: String },
}

impl Error {
    /// Stable machine-readable name of the variant, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotSquare { .. } => "NotSquare",
            Error::EmptyMatrix => "EmptyMatrix",
            Error::AsymmetricMatrix { .. } => "AsymmetricMatrix",
            Error::NegativeDistance { .. } => "NegativeDistance",
            Error::NonzeroDiagonal { .. } => "NonzeroDiagonal",
            Error::TriangleViolation { .. } => "TriangleViolation",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::SelfLoop { .. } => "SelfLoop",
            Error::DuplicateEdge { .. } => "DuplicateEdge",
            Error::NonpositiveWeight { .. } => "NonpositiveWeight",
            Error::DisconnectedGraph { .. } => "DisconnectedGraph",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::NonFiniteEntry { .. } => "NonFiniteEntry",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::EmptyInput => "EmptyInput",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::NotEmbeddable { .. } => "NotEmbeddable",
            Error::WrongSize { .. } => "WrongSize",
            Error::IsolatedVertex { .. } => "IsolatedVertex",
            Error::ConstantMap => "ConstantMap",
            Error::GraphMismatch => "GraphMismatch",
            Error::TargetMismatch => "TargetMismatch",
            Error::TargetTooSmall => "TargetTooSmall",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::UnitWeightRequired { .. } => "UnitWeightRequired",
            Error::BadParameters { .. } => "BadParameters",
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
