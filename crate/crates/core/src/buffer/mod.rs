//! The inertial delay buffer.
//!
//! The output may rise only after the input has been 1 for at least the
//! minimal rise delay, and must rise once the input has been 1 for the
//! maximal rise delay; falls are dual. With equal bounds the buffer is
//! deterministic and [`didb::simulate`] computes its unique output.

pub mod automaton;
pub mod checks;
pub mod didb;
pub mod nidb;
pub mod params;
pub mod sample;

pub use automaton::{trace, AutomatonState};
pub use checks::{check_inertia, check_stability};
pub use didb::{simulate, DidbForm};
pub use nidb::NidbForm;
pub use params::{DelayParams, DetParams};
pub use sample::{sample, Policy};

use crate::interval::{Interval, IntervalSet};
use crate::scalar::Scalar;
use crate::stepfn::StepFn;
use crate::window::{all_over, WindowKind};

/// `⋂_{[t-d, t)} i`: the input has been 1 for the last `d`.
pub(crate) fn held_high<T: Scalar>(i: &StepFn<T>, d: &T) -> StepFn<T> {
    all_over(i, &WindowKind::ClosedOpen.offsets(d))
}

/// `⋂_{[t-d, t)} ¬i`: the input has been 0 for the last `d`.
pub(crate) fn held_low<T: Scalar>(i: &StepFn<T>, d: &T) -> StepFn<T> {
    all_over(&i.not(), &WindowKind::ClosedOpen.offsets(d))
}

/// The output and its left limit, the two ingredients of every condition.
pub(crate) struct OutputTerms<T> {
    pub now: StepFn<T>,
    pub prev: StepFn<T>,
}

impl<T: Scalar> OutputTerms<T> {
    pub fn of(o: &StepFn<T>) -> Self {
        OutputTerms { now: o.clone(), prev: o.left_limit() }
    }

    /// `o'(t-0)·o(t)`
    pub fn rise(&self) -> StepFn<T> {
        self.prev.not().and(&self.now)
    }

    /// `o(t-0)·o'(t)`
    pub fn fall(&self) -> StepFn<T> {
        self.prev.and(&self.now.not())
    }

    pub fn derivative(&self) -> StepFn<T> {
        self.prev.xor(&self.now)
    }

    /// `o'(t-0)·x`
    pub fn was_low_and(&self, x: &StepFn<T>) -> StepFn<T> {
        self.prev.not().and(x)
    }

    /// `o(t-0)·x`
    pub fn was_high_and(&self, x: &StepFn<T>) -> StepFn<T> {
        self.prev.and(x)
    }
}

/// Least point of `set` strictly after `after` (or anywhere when `None`),
/// together with the interval it belongs to.
///
/// Enabling sets computed from signals are unions of closed-below intervals
/// lying entirely after the last output switch, so the least point exists.
pub(crate) fn first_after<'a, T: Scalar>(set: &'a IntervalSet<T>, after: Option<&T>) -> Option<(T, &'a Interval<T>)> {
    use std::ops::Bound::*;
    set.intervals().iter().find_map(|iv| {
        let reaches_past = match (iv.upper(), after) {
            (_, None) | (Unbounded, _) => true,
            (Included(b) | Excluded(b), Some(c)) => b > c,
        };
        if !reaches_past {
            return None;
        }
        match iv.lower() {
            Included(a) if after.is_none_or(|c| a > c) => Some((a.clone(), iv)),
            _ => panic!("enabling set {iv} has no least point after the current instant"),
        }
    })
}
