//! Small dense-vector helpers shared by the filter and the auditor.
//!
//! Accumulation is a plain left-to-right loop, so results are deterministic
//! and the auditor reproduces the filter's arithmetic bit for bit.

/// Inner product `aᵀb`.
///
/// Panics on length mismatch; callers with fallible contracts check first.
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len(), "dot: length mismatch");
    let mut acc = 0.0;
    for (ai, bi) in a.iter().zip(b) {
        acc += ai * bi;
    }
    acc
}

/// Squared Euclidean norm `‖x‖²`.
pub fn norm_sq(x: &[f64]) -> f64 {
    let mut acc = 0.0;
    for xi in x {
        acc += xi * xi;
    }
    acc
}
