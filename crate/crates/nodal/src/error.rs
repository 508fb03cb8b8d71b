use crate::Bc;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Internal scaling of a Bessel evaluation overflowed or the argument
    /// is outside the supported domain. Never a silent wrong value.
    #[error("evaluation of J_{order} at {arg} failed: {reason}")]
    Eval {
        order: u32,
        arg: f64,
        reason: &'static str,
    },

    /// The zero refinement did not converge; carries the last bracket.
    #[error("zero solver failed for {kind} k={k} s={s}: no convergence in bracket [{lo}, {hi}]")]
    Solver {
        kind: Bc,
        k: u32,
        s: u32,
        lo: f64,
        hi: f64,
    },

    /// A computed zero failed its residual certificate or escaped a
    /// rigorous enclosure; the value is not returned.
    #[error("certification failed for {kind} k={k} s={s} at {value}: {reason}")]
    Certificate {
        kind: Bc,
        k: u32,
        s: u32,
        value: f64,
        reason: String,
    },

    #[error("order/index outside configured limits: {0}")]
    LimitExceeded(String),

    #[error("eigenvalue window [{lo}, {hi}] contains no modes")]
    EmptyWindow { lo: f64, hi: f64 },

    /// The Neumann `(k, s) = (0, 1)` constant mode has eigenvalue 0 and
    /// no normalized ratio.
    #[error("the neumann constant mode (k=0, s=1) has eigenvalue 0 and cannot be normalized")]
    ConstantMode,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("cache file {path}: {reason}")]
    Cache { path: String, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
