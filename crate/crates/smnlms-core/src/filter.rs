//! Set-membership NLMS coefficient recursion and a plain NLMS baseline.
//!
//! # Algorithm
//!
//! For input vector `x(k)`, reference sample `d(k)`, coefficient estimate
//! `w(k)`, error bound `γ̄ ≥ 0` and regularizer `δ > 0`:
//!
//! ```text
//! e(k)  = d(k) − wᵀ(k) x(k)               (output error)
//! f(k)  = 1 if |e(k)| > γ̄, else 0         (update indicator)
//! μ̄(k)  = 1 − γ̄ / |e(k)|                  (variable step, used when f = 1)
//! α(k)  = ‖x(k)‖² + δ                     (regularized input power)
//! w(k+1) = w(k) + (μ̄(k)/α(k)) e(k) x(k) f(k)
//! ```
//!
//! The recursion updates only when the error magnitude exceeds the bound;
//! on an update it places the new coefficients on the boundary of the
//! constraint set `{w : |d(k) − wᵀx(k)| ≤ γ̄}` (exactly so as δ → 0).
//! The NLMS baseline is the same recursion with a constant step and `f ≡ 1`.
//!
//! Both step functions are pure: they never mutate their inputs, and a
//! skipped iteration returns the coefficient vector bit-identical. All
//! arithmetic is f64.
//!
//! Reference: S. Gollamudi, S. Nagaraj, S. Kapoor, and Y.-F. Huang,
//! "Set-membership filtering and a set-membership normalized LMS algorithm
//! with an adaptive step size," IEEE Signal Processing Letters, 1998.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{dot, norm_sq};

/// Parameters governing the SM-NLMS recursion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterConfig {
    gamma_bar: f64,
    delta: f64,
    taps: usize,
}

impl FilterConfig {
    /// Validates `gamma_bar ≥ 0`, `delta > 0`, `taps ≥ 1`.
    ///
    /// `gamma_bar = 0` is permitted: the recursion then updates whenever
    /// `e ≠ 0` with unit step, degenerating to NLMS-like behaviour. This is
    /// a supported stress configuration, not an error.
    pub fn new(gamma_bar: f64, delta: f64, taps: usize) -> Result<Self, FilterError> {
        if !gamma_bar.is_finite() || gamma_bar < 0.0 {
            return Err(FilterError::InvalidGammaBar(gamma_bar));
        }
        if !delta.is_finite() || delta <= 0.0 {
            return Err(FilterError::InvalidDelta(delta));
        }
        if taps == 0 {
            return Err(FilterError::ZeroTaps);
        }
        Ok(Self { gamma_bar, delta, taps })
    }

    pub fn gamma_bar(&self) -> f64 {
        self.gamma_bar
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn taps(&self) -> usize {
        self.taps
    }
}

/// Coefficient estimate `w(k)`; plain data, cheap to clone.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterState {
    w: Vec<f64>,
}

impl FilterState {
    /// All-zero coefficients, the standard initialization.
    pub fn zeros(taps: usize) -> Self {
        Self { w: vec![0.0; taps] }
    }

    /// Builds a state from explicit coefficients; every entry must be finite.
    pub fn from_coefficients(w: Vec<f64>) -> Result<Self, FilterError> {
        if w.is_empty() {
            return Err(FilterError::ZeroTaps);
        }
        if !w.iter().all(|c| c.is_finite()) {
            return Err(FilterError::NonFiniteSample { quantity: "coefficient" });
        }
        Ok(Self { w })
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.w
    }

    pub fn taps(&self) -> usize {
        self.w.len()
    }
}

/// Full per-iteration trace of one recursion step.
///
/// Invariants (maintained by the step functions, asserted by the auditor):
/// `e = d − wᵀx` for the pre-update coefficients; `updated ⇔ f = 1`;
/// `f = 1 ⇔ |e| > γ̄`; `0 ≤ mu_bar·f ≤ 1` with `mu_bar·f < 1` whenever
/// `γ̄ > 0` (only the degenerate zero bound reaches a unit step); and when
/// `f = 0` the recorded `w_next` is bit-identical to the pre-update
/// coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct StepRecord {
    pub k: usize,
    pub x: Vec<f64>,
    pub d: f64,
    pub e: f64,
    /// Variable step μ̄(k); 0 on skipped iterations, the constant step for NLMS.
    pub mu_bar: f64,
    /// Update indicator value, 0 or 1.
    pub f: u8,
    /// Regularized input power α(k) = ‖x(k)‖² + δ.
    pub alpha: f64,
    pub updated: bool,
    pub w_next: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FilterError {
    DimensionMismatch { expected: usize, actual: usize },
    NonFiniteSample { quantity: &'static str },
    InvalidGammaBar(f64),
    InvalidDelta(f64),
    InvalidStep(f64),
    ZeroTaps,
}

impl fmt::Display for FilterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FilterError::DimensionMismatch { expected, actual } => {
                write!(f, "dimension mismatch: expected {expected} taps, got {actual}")
            }
            FilterError::NonFiniteSample { quantity } => {
                write!(f, "non-finite {quantity} sample")
            }
            FilterError::InvalidGammaBar(v) => {
                write!(f, "error bound must be finite and non-negative, got {v}")
            }
            FilterError::InvalidDelta(v) => {
                write!(f, "regularizer must be finite and positive, got {v}")
            }
            FilterError::InvalidStep(v) => {
                write!(f, "step size must be finite and positive, got {v}")
            }
            FilterError::ZeroTaps => write!(f, "filter needs at least one tap"),
        }
    }
}

/// Output error `e = d − wᵀx`.
pub fn output_error(state: &FilterState, x: &[f64], d: f64) -> Result<f64, FilterError> {
    check_len(state.taps(), x.len())?;
    Ok(d - dot(state.coefficients(), x))
}

/// Variable step `μ̄ = 1 − γ̄/|e|`.
///
/// At `e = 0` no update is needed, so the division is guarded and the step
/// is defined as 0 regardless of the bound.
pub fn step_size(e: f64, gamma_bar: f64) -> f64 {
    let mag = libm::fabs(e);
    if mag == 0.0 {
        return 0.0;
    }
    1.0 - gamma_bar / mag
}

/// Update indicator: true iff `|e|` strictly exceeds the bound.
pub fn update_indicator(e: f64, gamma_bar: f64) -> bool {
    libm::fabs(e) > gamma_bar
}

/// Regularized input power `α = ‖x‖² + δ`; strictly positive.
pub fn regularized_power(x: &[f64], delta: f64) -> Result<f64, FilterError> {
    if !delta.is_finite() || delta <= 0.0 {
        return Err(FilterError::InvalidDelta(delta));
    }
    Ok(norm_sq(x) + delta)
}

/// Scalar gain multiplying x in the coefficient update.
///
/// Kept as one expression so the auditor can reconstruct the pre-update
/// coefficients from a [`StepRecord`] bit-exactly.
pub(crate) fn update_gain(mu_bar: f64, e: f64, alpha: f64) -> f64 {
    mu_bar * e / alpha
}

/// One SM-NLMS iteration.
///
/// Returns the next state together with the complete [`StepRecord`]. On a
/// skipped iteration (`|e| ≤ γ̄`) the returned state is bit-identical to the
/// input state and the recorded step is 0, matching the zero branch of the
/// variable-step definition.
pub fn sm_nlms_step(
    state: &FilterState,
    x: &[f64],
    d: f64,
    config: &FilterConfig,
    k: usize,
) -> Result<(FilterState, StepRecord), FilterError> {
    check_len(config.taps(), state.taps())?;
    check_len(config.taps(), x.len())?;
    check_finite_inputs(x, d)?;

    let e = d - dot(state.coefficients(), x);
    if !e.is_finite() {
        return Err(FilterError::NonFiniteSample { quantity: "error" });
    }
    let alpha = regularized_power(x, config.delta())?;
    let updated = update_indicator(e, config.gamma_bar());

    let (mu_bar, w_next) = if updated {
        let mu_bar = step_size(e, config.gamma_bar());
        (mu_bar, apply_update(state.coefficients(), x, mu_bar, e, alpha))
    } else {
        (0.0, state.coefficients().to_vec())
    };

    let record = StepRecord {
        k,
        x: x.to_vec(),
        d,
        e,
        mu_bar,
        f: updated as u8,
        alpha,
        updated,
        w_next: w_next.clone(),
    };
    Ok((FilterState { w: w_next }, record))
}

/// One NLMS baseline iteration: constant step, updates unconditionally.
///
/// The record carries `mu_bar = step` and `f = 1` so the same trace format
/// covers both algorithms. No robustness bound is claimed for this
/// recursion; its records are traced but not bound-checked.
pub fn nlms_step(
    state: &FilterState,
    x: &[f64],
    d: f64,
    step: f64,
    delta: f64,
    k: usize,
) -> Result<(FilterState, StepRecord), FilterError> {
    if !step.is_finite() || step <= 0.0 {
        return Err(FilterError::InvalidStep(step));
    }
    check_len(state.taps(), x.len())?;
    check_finite_inputs(x, d)?;

    let e = d - dot(state.coefficients(), x);
    if !e.is_finite() {
        return Err(FilterError::NonFiniteSample { quantity: "error" });
    }
    let alpha = regularized_power(x, delta)?;
    let w_next = apply_update(state.coefficients(), x, step, e, alpha);

    let record = StepRecord {
        k,
        x: x.to_vec(),
        d,
        e,
        mu_bar: step,
        f: 1,
        alpha,
        updated: true,
        w_next: w_next.clone(),
    };
    Ok((FilterState { w: w_next }, record))
}

fn apply_update(w: &[f64], x: &[f64], mu_bar: f64, e: f64, alpha: f64) -> Vec<f64> {
    let gain = update_gain(mu_bar, e, alpha);
    w.iter().zip(x).map(|(wi, xi)| wi + gain * xi).collect()
}

fn check_len(expected: usize, actual: usize) -> Result<(), FilterError> {
    if expected != actual {
        return Err(FilterError::DimensionMismatch { expected, actual });
    }
    Ok(())
}

fn check_finite_inputs(x: &[f64], d: f64) -> Result<(), FilterError> {
    if !x.iter().all(|xi| xi.is_finite()) {
        return Err(FilterError::NonFiniteSample { quantity: "input" });
    }
    if !d.is_finite() {
        return Err(FilterError::NonFiniteSample { quantity: "reference" });
    }
    Ok(())
}
