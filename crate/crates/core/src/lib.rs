//! Exact calculus of binary signals over continuous time and the inertial
//! delay buffer.
//!
//! Time values are exact rationals. The core types are generic over any
//! [`Scalar`]; the aliases below fix the arbitrary-precision choice used by
//! the command-line tool.
//!
//! - [`stepfn`]: step functions, left limits, derivatives, signals
//! - [`window`]: sliding-window operators and exact inequality checks
//! - [`buffer`]: deterministic simulation, non-deterministic sampling and
//!   conformance checking of inertial delay buffers
//! - [`litcmp`]: the alternative literature conditions, counterexample
//!   fixtures and a seeded claims campaign
//! - [`waveio`]: `.bsig` waveforms, VCD export, random signals, report
//!   documents
//!
//! ```
//! use inertial::buffer::{nidb, simulate, DelayParams, DetParams, NidbForm};
//! use inertial::{Scalar, Signal, StepFn, Time};
//!
//! let t = Time::from_int;
//! let i = Signal::new(StepFn::pulse(t(0), Some(t(5)))).unwrap();
//! let o = simulate(&i, &DetParams::new(t(1), t(2)).unwrap());
//! assert_eq!(o.switch_points(), vec![t(1), t(7)]);
//!
//! let p = DelayParams::new(t(1), t(2), t(1), t(3)).unwrap();
//! assert!(nidb::verify(&i, &o, &p, NidbForm::SemiDerivative).passed());
//! ```

pub mod buffer;
pub mod cli;
pub mod error;
pub mod interval;
pub mod litcmp;
pub mod report;
pub mod scalar;
pub mod stepfn;
pub mod waveio;
pub mod window;

pub use error::{Error, Result};
pub use interval::{Interval, IntervalSet};
pub use report::{Report, Verdict, Violation};
pub use scalar::Scalar;
pub use stepfn::{Signal, StepFn};

/// Arbitrary-precision rational time.
pub type Time = num_rational::BigRational;

/// Machine-word rational time; faster, but arithmetic panics on overflow.
pub type Time64 = num_rational::Ratio<i64>;

pub type StepFn64 = StepFn<Time64>;
pub type Signal64 = Signal<Time64>;
