//! Set-membership NLMS adaptive filtering with built-in l2-robustness auditing.
//!
//! The crate has four layers:
//!
//! * [`signals`] — seedable, bit-reproducible BPSK and Gaussian sample sources.
//! * [`filter`] — the SM-NLMS coefficient recursion and a plain NLMS baseline,
//!   exposed as pure step functions over explicit [`filter::FilterState`].
//! * [`robustness`] — per-iteration energy accounting for a system-identification
//!   run: deviation norms, the exact update-energy identity, its correction
//!   terms, and the global deviation-to-disturbance energy ratio.
//! * [`sysid`] — an end-to-end system-identification scenario runner that
//!   produces synchronized step and audit traces.
//!
//! The core is `no_std` (alloc required); IO, CSV traces, and the command-line
//! front end live in the companion `smnlms-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod filter;
pub mod linalg;
pub mod robustness;
pub mod signals;
pub mod sysid;

pub use filter::{FilterConfig, FilterState, StepRecord};
pub use robustness::{GlobalReport, RobustnessRecord, TruthContext, Violation};
pub use sysid::{Algorithm, InputMode, RunResult, ScenarioConfig};
