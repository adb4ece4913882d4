use thiserror::Error;

/// Errors raised while reading or validating corpus-side artifacts
/// (documents, splits, vocabularies, embedding files).
#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("failed to read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("document {doc_id}: {message}")]
    Validation { doc_id: String, message: String },
    #[error("corpus has {got} documents, need at least {need}")]
    CorpusTooSmall { got: usize, need: usize },
    #[error("embedding file {path}, token {token:?}: expected {expected} values, found {found}")]
    EmbeddingDim {
        path: String,
        token: String,
        expected: usize,
        found: usize,
    },
}

/// Errors raised by model construction, training and evaluation.
#[derive(Debug, Error)]
pub enum ModelError {
    #[error("variant {variant} requires gold labels at run time")]
    LabelsUnavailable { variant: String },
    #[error("signal has {got} rows, document has {expected} clauses")]
    SignalLength { got: usize, expected: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("evaluation mode {mode} is incompatible with variant {variant}")]
    ModeVariant { mode: String, variant: String },
    #[error("non-finite value in loss component {component} (epoch {epoch}, batch {batch})")]
    Diverged {
        component: String,
        epoch: usize,
        batch: usize,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Errors raised by the metric layer.
#[derive(Debug, Error)]
pub enum MetricsError {
    #[error("predicted labels have length {predicted}, gold labels have length {gold}")]
    LengthMismatch { predicted: usize, gold: usize },
    #[error("expected reports for splits {expected:?}, missing {missing:?}")]
    MissingSplits {
        expected: usize,
        missing: Vec<usize>,
    },
}
