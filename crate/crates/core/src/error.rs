//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right} in {context}")]
    DimensionMismatch {
        left: usize,
        right: usize,
        context: &'static str,
    },

    #[error("subsystem index {index} out of range for m = {m}")]
    IndexOutOfRange { index: usize, m: usize },

    #[error("hermiticity violation: max |A - A†| entry = {magnitude:.3e}")]
    HermiticityViolation { magnitude: f64 },

    #[error("trace violation: |Tr - 1| = {magnitude:.3e}")]
    TraceViolation { magnitude: f64 },

    #[error("negativity violation: min eigenvalue = -{magnitude:.3e}")]
    NegativityViolation { magnitude: f64 },

    #[error("invalid layout: {reason}")]
    InvalidLayout { reason: String },

    #[error("invalid permutation: {reason}")]
    InvalidPermutation { reason: String },

    #[error("invalid spec: {reason}")]
    InvalidSpec { reason: String },

    #[error("invalid schedule: {reason}")]
    InvalidSchedule { reason: String },

    #[error("enumeration budget exceeded: m = {m} but the cap is {cap}")]
    BudgetExceeded { m: usize, cap: usize },

    #[error("step too large: dt = {dt:.3e} exceeds stability bound {max_dt:.3e}")]
    StepTooLarge { dt: f64, max_dt: f64 },

    #[error("schedule breakpoint {breakpoint} does not fall on the dt = {dt} step grid")]
    ScheduleNotAligned { breakpoint: f64, dt: f64 },

    #[error("invariant breach at t = {time}: {what} = {magnitude:.3e}")]
    InvariantBreach {
        time: f64,
        what: &'static str,
        magnitude: f64,
    },

    #[error("weight-vector norm drift at t = {time}: |sum - 1| = {magnitude:.3e}")]
    NormDrift { time: f64, magnitude: f64 },

    #[error("invalid weight vector: {reason}")]
    InvalidWeights { reason: String },

    #[error("state vector is not normalized: |norm - 1| = {magnitude:.3e}")]
    NonUnitNorm { magnitude: f64 },

    #[error("argument out of range: {reason}")]
    ArgumentRange { reason: String },
}
