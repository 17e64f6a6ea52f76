//! Stability and inertia, the two qualitative properties of the buffer.

use std::ops::Bound;

use super::didb::simulate;
use super::params::{DelayParams, DetParams};
use crate::interval::{Interval, IntervalSet};
use crate::report::{Report, Violation};
use crate::scalar::Scalar;
use crate::stepfn::Signal;

/// A stable state persists while the input is constant.
///
/// Fails at every instant where `o` switches although, just before, it
/// agreed with an input that does not switch there. This covers stable
/// states entered in the middle of a constant stretch of `i`, not only
/// those holding at its start. The delays play no part in the property;
/// `_p` is accepted so every checker takes the same arguments.
pub fn check_stability<T: Scalar>(i: &Signal<T>, o: &Signal<T>, _p: &DelayParams<T>) -> Report<T> {
    let mut report = Report::new("stability");
    for b in o.breakpoints() {
        let t = &b.at;
        let input_switches = i.eval_left(t) != i.eval(t);
        if !input_switches && o.eval_left(t) == i.eval(t) {
            report.violations.push(Violation {
                witness: t.clone(),
                span: Interval::point(t.clone()),
                window: None,
                lhs: true,
                rhs: false,
                clause: "hold".into(),
            });
        }
    }
    report.finish()
}

/// Input pulses shorter than the delay never reach the output.
///
/// Every rise of `didb::simulate(i, p)` must be explained by a 1-interval
/// of `i` lasting at least `d_r` and ending no earlier than the rise; falls
/// likewise by 0-intervals of length `d_f`. In particular an input whose
/// 1-intervals are all shorter than `d_r` yields the constant 0.
pub fn check_inertia<T: Scalar>(i: &Signal<T>, p: &DetParams<T>) -> Report<T> {
    let o = simulate(i, p);
    let highs = i.one_set();
    let lows = i.zero_set();
    let mut report = Report::new("inertia");
    for b in o.breakpoints() {
        let (clause, runs, d) = if b.after { ("rise", &highs, p.rise()) } else { ("fall", &lows, p.fall()) };
        if !explained(runs, &b.at, d) {
            report.violations.push(Violation {
                witness: b.at.clone(),
                span: Interval::point(b.at.clone()),
                window: Interval::closed_open(b.at.clone() - d.clone(), b.at.clone()),
                lhs: true,
                rhs: false,
                clause: clause.into(),
            });
        }
    }
    report.finish()
}

/// Whether one run of `runs` covers `[t - d, t)` and is at least `d` long.
fn explained<T: Scalar>(runs: &IntervalSet<T>, t: &T, d: &T) -> bool {
    let start = t.clone() - d.clone();
    runs.intervals().iter().any(|run| {
        let reaches = match run.upper() {
            Bound::Unbounded => true,
            Bound::Included(u) | Bound::Excluded(u) => u >= t,
        };
        let long = run.length().is_none_or(|len| &len >= d);
        run.contains(&start) && reaches && long
    })
}
