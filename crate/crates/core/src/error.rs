//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed CSV row or field.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Two rows for the same (subject, month).
    #[error("duplicate record for subject {subject_id} at month {month} (line {line})")]
    DuplicateRecord {
        subject_id: String,
        month: f64,
        line: usize,
    },

    /// Subject-level fields (arm, age) disagree across rows.
    #[error("inconsistent {field} for subject {subject_id} (line {line})")]
    InconsistentSubject {
        subject_id: String,
        field: &'static str,
        line: usize,
    },

    /// Subject fails the eligibility rule (at least two observed outcomes,
    /// baseline observed).
    #[error("subject {subject_id} is ineligible: {message}")]
    Eligibility { subject_id: String, message: String },

    /// Non-monotone missingness where a monotone pattern is required.
    #[error("intermittent missingness for subject {subject_id}: observed gap at visit {visit}")]
    IntermittentMissingness { subject_id: String, visit: usize },

    /// Invalid visit schedule.
    #[error("invalid visit schedule: {0}")]
    InvalidSchedule(String),

    /// Invalid configuration value.
    #[error("invalid config: {0}")]
    InvalidConfig(String),

    /// Complete-case analysis with zero completers.
    #[error("empty analysis set: no completers in the dataset")]
    EmptyAnalysisSet,

    /// Rank-deficient regression design.
    #[error("singular design{}: collinear columns {columns:?}", visit.map(|v| format!(" at visit {v}")).unwrap_or_default())]
    SingularDesign {
        visit: Option<usize>,
        columns: Vec<String>,
    },

    /// Too few cases to fit a model.
    #[error("insufficient sample at visit {visit}: {n_obs} cases for {n_params} parameters")]
    SampleSize {
        visit: usize,
        n_obs: usize,
        n_params: usize,
    },

    /// Rubin pooling needs at least two imputations.
    #[error("pooling requires K >= 2 fits, got {0}")]
    PoolingTooFew(usize),

    /// Per-imputation fits disagree on coefficient names or dimension.
    #[error("pooling shape mismatch: {0}")]
    PoolingShape(String),

    /// Variance parameter outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Optimizer exhausted its iteration budget. Carries the best iterate.
    #[error("no convergence after {iterations} iterations (best loglik {loglik})")]
    NonConvergence {
        iterations: usize,
        loglik: f64,
        fit: Box<crate::lmm::LmmFit>,
    },

    /// Residual variance collapsed to its floor. Carries the degenerate fit.
    #[error("degenerate variance: residual variance at floor")]
    DegenerateVariance { fit: Box<crate::lmm::LmmFit> },

    /// Standard error of zero makes Wald inference undefined.
    #[error("degenerate inference for coefficient {0}: standard error is zero")]
    DegenerateInference(String),

    /// Logistic outcome has no events or no non-events.
    #[error("degenerate outcome: {0}")]
    DegenerateOutcome(String),

    /// Complete separation in the logistic dropout model.
    #[error("complete separation detected in dropout model (|{term}| diverged)")]
    Separation { term: String },

    /// Pattern covariance submatrix is singular in Little's test.
    #[error("singular covariance for pattern with observed visits {0:?}")]
    SingularCovariance(Vec<usize>),

    /// I/O failure.
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    /// CSV layer failure.
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}
