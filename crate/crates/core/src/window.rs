//! Sliding-window operators on step functions.
//!
//! A window is described by its offsets relative to the evaluation instant:
//! the window at `t` is `t + K`. Then `ANY_K(f)(t) = 1` exactly when
//! `t ∈ ones(f) + (-K)`, a Minkowski sum of interval sets, and
//! `ALL_K(f) = ¬ANY_K(¬f)`. Both are exact.

use std::ops::Bound;

use crate::error::{Error, Result};
use crate::interval::{bound_value, Interval, IntervalSet};
use crate::scalar::Scalar;
use crate::stepfn::{Signal, StepFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Infimum over the window: 1 iff the function is 1 throughout.
    All,
    /// Supremum over the window: 1 iff the function is 1 somewhere.
    Any,
}

/// Backward window shapes of width `d` ending at `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WindowKind {
    /// `[t - d, t)`
    ClosedOpen,
    /// `(t - d, t)`
    OpenOpen,
    /// `(t - d, t]`
    OpenClosed,
}

impl WindowKind {
    pub fn offsets<T: Scalar>(self, width: &T) -> Interval<T> {
        let (lo, hi) = (-width.clone(), T::zero());
        match self {
            WindowKind::ClosedOpen => Interval::closed_open(lo, hi),
            WindowKind::OpenOpen => Interval::open(lo, hi),
            WindowKind::OpenClosed => Interval::open_closed(lo, hi),
        }
        .expect("positive width gives a nonempty window")
    }
}

/// `t ↦ sup { f(s) : s ∈ t + offsets }`
pub fn any_over<T: Scalar>(f: &StepFn<T>, offsets: &Interval<T>) -> StepFn<T> {
    StepFn::indicator(&f.one_set().sum(&offsets.reflect()))
}

/// `t ↦ inf { f(s) : s ∈ t + offsets }`
pub fn all_over<T: Scalar>(f: &StepFn<T>, offsets: &Interval<T>) -> StepFn<T> {
    // The 0-set of the result is the dilation of the 0-set of f.
    StepFn::indicator(&f.zero_set().sum(&offsets.reflect())).not()
}

fn check_width<T: Scalar>(d: &T) -> Result<()> {
    if d.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositiveWidth(d.to_string()))
    }
}

pub fn window<T: Scalar>(mode: Mode, f: &StepFn<T>, width: &T, kind: WindowKind) -> Result<StepFn<T>> {
    check_width(width)?;
    let offsets = kind.offsets(width);
    Ok(match mode {
        Mode::All => all_over(f, &offsets),
        Mode::Any => any_over(f, &offsets),
    })
}

fn check_range<T: Scalar>(longest: &T, shortest: &T) -> Result<()> {
    if shortest.is_positive() && shortest <= longest {
        Ok(())
    } else {
        Err(Error::InvalidRange { shortest: shortest.to_string(), longest: longest.to_string() })
    }
}

/// 1 at `t` iff some start `t' ∈ [t - longest, t - shortest]` has `f ≡ 1`
/// over the window from `t'` to `t` of the given kind.
///
/// Window-ALL is antitone in the window, so the shortest admissible window
/// decides: this equals `window(All, f, shortest, kind)`.
pub fn window_exists_all<T: Scalar>(f: &StepFn<T>, longest: &T, shortest: &T, kind: WindowKind) -> Result<StepFn<T>> {
    check_range(longest, shortest)?;
    window(Mode::All, f, shortest, kind)
}

/// 1 at `t` iff `f` rose at some `t' ∈ [t - longest, t - shortest]` and has
/// stayed 1 on `[t', t)`, i.e. `⋃_{t'} f'(t' - 0) · ⋂_{[t', t)} f`.
pub fn risen_and_held<T: Scalar>(f: &StepFn<T>, longest: &T, shortest: &T) -> Result<StepFn<T>> {
    check_range(longest, shortest)?;
    let ones = f.one_set();
    let mut spans = Vec::new();
    // Rising edges only happen at breakpoints.
    let mut prev = f.before();
    for bp in f.breakpoints() {
        if !prev && bp.value {
            let run =
                ones.intervals().iter().find(|iv| iv.contains(&bp.at)).expect("a rising instant lies in the 1-set");
            // [r, t) stays inside the run iff t does not pass its upper end.
            let reach = bound_value(run.upper());
            let last = match reach {
                Some(h) if *h < bp.at.clone() + longest.clone() => h.clone(),
                _ => bp.at.clone() + longest.clone(),
            };
            spans.extend(Interval::closed(bp.at.clone() + shortest.clone(), last));
        }
        prev = bp.after;
    }
    Ok(StepFn::indicator(&IntervalSet::from_intervals(spans)))
}

/// Right-hand sides of the hold identities for a signal `x`:
/// `(x(t-0)·¬⋃_{(t-d,t)} Dx, ¬x(t-0)·¬⋃_{(t-d,t)} Dx)`,
/// which equal `⋂_{[t-d,t)} x` and `⋂_{[t-d,t)} ¬x` respectively.
pub fn held_via_derivative<T: Scalar>(x: &Signal<T>, width: &T) -> Result<(StepFn<T>, StepFn<T>)> {
    let quiet = window(Mode::Any, &x.derivative(), width, WindowKind::OpenOpen)?.not();
    let prev = x.left_limit();
    Ok((prev.and(&quiet), prev.not().and(&quiet)))
}

/// A maximal interval (restricted to `t ≥ 0`) on which an inequality fails,
/// with one exact instant inside it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness<T> {
    pub at: T,
    pub span: Interval<T>,
}

/// Every maximal interval of `t ≥ 0` where `lhs(t) ≤ rhs(t)` fails, in order.
pub fn violations<T: Scalar>(lhs: &StepFn<T>, rhs: &StepFn<T>) -> Vec<Witness<T>> {
    let domain = Interval::new(Bound::Included(T::zero()), Bound::Unbounded).expect("nonempty");
    lhs.and(&rhs.not())
        .one_set()
        .intersect_interval(&domain)
        .intervals()
        .iter()
        .map(|span| Witness { at: span.representative(), span: span.clone() })
        .collect()
}

/// Decides `∀t ≥ 0: lhs(t) ≤ rhs(t)`, returning the earliest violation.
pub fn leq<T: Scalar>(lhs: &StepFn<T>, rhs: &StepFn<T>) -> std::result::Result<(), Witness<T>> {
    match violations(lhs, rhs).into_iter().next() {
        Some(w) => Err(w),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Time;

    fn t(n: i64) -> Time {
        Time::from_int(n)
    }

    #[test]
    fn all_window_on_pulse() {
        let f = StepFn::pulse(t(0), Some(t(3)));
        let w = window(Mode::All, &f, &t(1), WindowKind::ClosedOpen).unwrap();
        assert_eq!(w.one_set().intervals(), &[Interval::closed(t(1), t(3)).unwrap()]);
    }

    #[test]
    fn all_window_of_zero_is_zero() {
        for kind in [WindowKind::ClosedOpen, WindowKind::OpenOpen, WindowKind::OpenClosed] {
            let w = window(Mode::All, &StepFn::<Time>::zero(), &t(2), kind).unwrap();
            assert_eq!(w, StepFn::zero());
        }
    }

    #[test]
    fn all_window_with_isolated_zero() {
        let f = StepFn::indicator(&IntervalSet::from_intervals([Interval::point(t(1))])).not();
        let w = window(Mode::All, &f, &t(1), WindowKind::ClosedOpen).unwrap();
        assert_eq!(w.zero_set().intervals(), &[Interval::open_closed(t(1), t(2)).unwrap()]);
    }

    #[test]
    fn width_must_be_positive() {
        let f = StepFn::<Time>::one();
        assert!(matches!(window(Mode::All, &f, &t(0), WindowKind::ClosedOpen), Err(Error::NonPositiveWidth(_))));
        assert!(matches!(window_exists_all(&f, &t(1), &t(2), WindowKind::ClosedOpen), Err(Error::InvalidRange { .. })));
        assert!(risen_and_held(&f, &t(1), &t(0)).is_err());
    }

    #[test]
    fn exists_all_examples() {
        let f = StepFn::pulse(t(0), None);
        let w = window_exists_all(&f, &t(2), &t(1), WindowKind::ClosedOpen).unwrap();
        assert_eq!(w, StepFn::pulse(t(1), None));
        let one = StepFn::<Time>::one();
        assert_eq!(window_exists_all(&one, &t(3), &t(1), WindowKind::OpenOpen).unwrap(), one);
    }

    #[test]
    fn risen_and_held_requires_a_rise() {
        let f = StepFn::pulse(t(0), Some(t(5)));
        // rose at 0: t ∈ [0 + 1, min(0 + 2, 5)]
        let r = risen_and_held(&f, &t(2), &t(1)).unwrap();
        assert_eq!(r.one_set().intervals(), &[Interval::closed(t(1), t(2)).unwrap()]);
        // held past the range does not count: the rise is too old at t = 3
        assert!(!r.eval(&t(3)));
        // a constant 1 never rose
        assert_eq!(risen_and_held(&StepFn::<Time>::one(), &t(2), &t(1)).unwrap(), StepFn::zero());
        // a run shorter than the range is cut at its end
        let short = StepFn::pulse(t(0), Some(t(3) / t(2)));
        let r = risen_and_held(&short, &t(2), &t(1)).unwrap();
        assert_eq!(r.one_set().intervals(), &[Interval::closed(t(1), t(3) / t(2)).unwrap()]);
    }

    #[test]
    fn leq_examples() {
        let f = StepFn::pulse(t(0), Some(t(2)));
        assert_eq!(leq(&f, &f), Ok(()));
        assert_eq!(leq(&StepFn::pulse(t(0), Some(t(1))), &StepFn::one()), Ok(()));
        let w = leq(&f, &StepFn::pulse(t(0), Some(t(1)))).unwrap_err();
        assert_eq!(w.at, t(1));
        assert_eq!(w.span, Interval::closed_open(t(1), t(2)).unwrap());
    }

    #[test]
    fn leq_ignores_negative_time_and_uses_midpoints() {
        let before = StepFn::pulse(t(-3), Some(t(-1)));
        assert_eq!(leq(&before, &StepFn::zero()), Ok(()));
        let open = StepFn::indicator(&IntervalSet::from_intervals([Interval::open(t(1), t(2)).unwrap()]));
        assert_eq!(leq(&open, &StepFn::zero()).unwrap_err().at, Time::from_ratio(3, 2));
        let tail = StepFn::pulse(t(-1), None);
        assert_eq!(leq(&tail, &StepFn::zero()).unwrap_err().at, t(0));
    }
}
