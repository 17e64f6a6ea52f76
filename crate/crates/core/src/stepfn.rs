//! Binary step functions of real time.
//!
//! A [`StepFn`] has finitely many breakpoints and carries an independent value
//! at each breakpoint as well as on each open interval between them. That is
//! enough to represent signals and also the objects derived from them that
//! are not signals: left limits, derivatives, window indicators.

use std::fmt;
use std::ops::{Bound, Deref};

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalSet};
use crate::scalar::Scalar;
use crate::Time;

/// One breakpoint: the value taken at `at` and on the open interval that
/// follows it (up to the next breakpoint).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Breakpoint<T = Time> {
    pub at: T,
    pub value: bool,
    pub after: bool,
}

/// A binary function of time in canonical form.
///
/// Invariants: breakpoints strictly increase, and every breakpoint is
/// essential (its value differs from the interval before or after it).
/// Pointwise equal functions therefore have identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepFn<T = Time> {
    before: bool,
    breaks: Vec<Breakpoint<T>>,
}

/// A piece of the partition of the time line induced by the breakpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Segment<'a, T> {
    Point(&'a T, bool),
    /// Open interval between consecutive breakpoints (`None` = infinite end).
    Open(Option<&'a T>, Option<&'a T>, bool),
}

impl<T: Scalar> StepFn<T> {
    pub fn constant(value: bool) -> Self {
        StepFn { before: value, breaks: Vec::new() }
    }

    pub fn zero() -> Self {
        Self::constant(false)
    }

    pub fn one() -> Self {
        Self::constant(true)
    }

    /// Builds the function from its value before the first breakpoint and a
    /// list of `(time, value at time, value on the following interval)`.
    /// Removable breakpoints are dropped.
    pub fn canonical(before: bool, pieces: impl IntoIterator<Item = (T, bool, bool)>) -> Result<Self> {
        let pieces: Vec<_> = pieces.into_iter().collect();
        if let Some(k) = pieces.windows(2).position(|w| w[0].0 >= w[1].0) {
            return Err(Error::NotIncreasing { index: k + 1 });
        }
        Ok(Self::from_sorted(before, pieces.into_iter().map(|(at, value, after)| Breakpoint { at, value, after })))
    }

    /// Caller guarantees strictly increasing times.
    pub(crate) fn from_sorted(before: bool, raw: impl IntoIterator<Item = Breakpoint<T>>) -> Self {
        let mut prev = before;
        let mut breaks = Vec::new();
        for bp in raw {
            if bp.value != prev || bp.after != prev {
                prev = bp.after;
                breaks.push(bp);
            }
        }
        StepFn { before, breaks }
    }

    /// The indicator function of a set.
    pub fn indicator(set: &IntervalSet<T>) -> Self {
        let mut raw: Vec<Breakpoint<T>> = Vec::new();
        let mut push = |bp: Breakpoint<T>| match raw.last_mut() {
            // Only `(a, b)` followed by `(b, c)` can share an endpoint.
            Some(last) if last.at == bp.at => {
                last.value |= bp.value;
                last.after = bp.after;
            }
            _ => raw.push(bp),
        };
        let ivs = set.intervals();
        for iv in ivs {
            if iv.is_point() {
                if let Bound::Included(c) = iv.lower() {
                    push(Breakpoint { at: c.clone(), value: true, after: false });
                }
                continue;
            }
            match iv.lower() {
                Bound::Included(a) => push(Breakpoint { at: a.clone(), value: true, after: true }),
                Bound::Excluded(a) => push(Breakpoint { at: a.clone(), value: false, after: true }),
                Bound::Unbounded => {}
            }
            match iv.upper() {
                Bound::Included(b) => push(Breakpoint { at: b.clone(), value: true, after: false }),
                Bound::Excluded(b) => push(Breakpoint { at: b.clone(), value: false, after: false }),
                Bound::Unbounded => {}
            }
        }
        let before = ivs.first().is_some_and(|iv| matches!(iv.lower(), Bound::Unbounded));
        Self::from_sorted(before, raw)
    }

    /// `χ_{[a, b)}`; `b = None` means `[a, ∞)`.
    pub fn pulse(a: T, b: Option<T>) -> Self {
        let iv = match b {
            Some(b) => Interval::closed_open(a, b),
            None => Some(Interval::at_least(a)),
        };
        Self::indicator(&IntervalSet::from_intervals(iv))
    }

    pub fn before(&self) -> bool {
        self.before
    }

    pub fn breakpoints(&self) -> &[Breakpoint<T>] {
        &self.breaks
    }

    pub fn breakpoint_times(&self) -> impl Iterator<Item = &T> + '_ {
        self.breaks.iter().map(|bp| &bp.at)
    }

    pub fn is_constant(&self) -> Option<bool> {
        self.breaks.is_empty().then_some(self.before)
    }

    /// Value on the last open interval, i.e. the value held forever.
    pub fn tail(&self) -> bool {
        self.breaks.last().map_or(self.before, |bp| bp.after)
    }

    pub fn eval(&self, t: &T) -> bool {
        let idx = self.breaks.partition_point(|bp| bp.at <= *t);
        if idx == 0 {
            return self.before;
        }
        let bp = &self.breaks[idx - 1];
        if bp.at == *t {
            bp.value
        } else {
            bp.after
        }
    }

    /// Value on the open interval immediately before `t`.
    pub fn eval_left(&self, t: &T) -> bool {
        let idx = self.breaks.partition_point(|bp| bp.at < *t);
        if idx == 0 {
            self.before
        } else {
            self.breaks[idx - 1].after
        }
    }

    /// The partition of the line into open intervals and breakpoints, in order.
    pub fn segments(&self) -> impl Iterator<Item = Segment<'_, T>> + '_ {
        let head = std::iter::once(Segment::Open(None, self.breaks.first().map(|bp| &bp.at), self.before));
        let rest = self.breaks.iter().enumerate().flat_map(move |(k, bp)| {
            let next = self.breaks.get(k + 1).map(|n| &n.at);
            [Segment::Point(&bp.at, bp.value), Segment::Open(Some(&bp.at), next, bp.after)]
        });
        head.chain(rest)
    }

    /// `{t : f(t) = 1}`
    pub fn one_set(&self) -> IntervalSet<T> {
        let mut out = Vec::new();
        let mut start: Option<Bound<T>> = None;
        let mut end: Bound<T> = Bound::Unbounded;
        for seg in self.segments() {
            match seg {
                Segment::Point(t, v) => {
                    if v {
                        start.get_or_insert_with(|| Bound::Included(t.clone()));
                        end = Bound::Included(t.clone());
                    } else if let Some(s) = start.take() {
                        out.extend(Interval::new(s, end.clone()));
                    }
                }
                Segment::Open(lo, hi, v) => {
                    if v {
                        start.get_or_insert_with(|| lo.map_or(Bound::Unbounded, |a| Bound::Excluded(a.clone())));
                        end = hi.map_or(Bound::Unbounded, |b| Bound::Excluded(b.clone()));
                    } else if let Some(s) = start.take() {
                        out.extend(Interval::new(s, end.clone()));
                    }
                }
            }
        }
        if let Some(s) = start {
            out.extend(Interval::new(s, end));
        }
        IntervalSet::from_intervals(out)
    }

    pub fn zero_set(&self) -> IntervalSet<T> {
        self.not().one_set()
    }

    /// Pointwise combination. The result's breakpoints are a subset of the
    /// union of both inputs' breakpoints.
    pub fn zip_with(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        let (a, b) = (&self.breaks, &other.breaks);
        let (mut i, mut j) = (0, 0);
        let (mut fa, mut fb) = (self.before, other.before);
        let mut raw = Vec::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            let pick = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.at.cmp(&y.at),
                (Some(_), None) => std::cmp::Ordering::Less,
                _ => std::cmp::Ordering::Greater,
            };
            let (at, va, vb) = match pick {
                std::cmp::Ordering::Less => {
                    let x = &a[i];
                    i += 1;
                    fa = x.after;
                    (x.at.clone(), x.value, fb)
                }
                std::cmp::Ordering::Greater => {
                    let y = &b[j];
                    j += 1;
                    fb = y.after;
                    (y.at.clone(), fa, y.value)
                }
                std::cmp::Ordering::Equal => {
                    let (x, y) = (&a[i], &b[j]);
                    i += 1;
                    j += 1;
                    fa = x.after;
                    fb = y.after;
                    (x.at.clone(), x.value, y.value)
                }
            };
            raw.push(Breakpoint { at, value: op(va, vb), after: op(fa, fb) });
        }
        Self::from_sorted(op(self.before, other.before), raw)
    }

    pub fn map(&self, op: impl Fn(bool) -> bool) -> Self {
        Self::from_sorted(
            op(self.before),
            self.breaks.iter().map(|bp| Breakpoint { at: bp.at.clone(), value: op(bp.value), after: op(bp.after) }),
        )
    }

    pub fn not(&self) -> Self {
        self.map(|v| !v)
    }

    pub fn and(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x && y)
    }

    pub fn or(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x || y)
    }

    pub fn xor(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x ^ y)
    }

    /// `self ≤ other` read pointwise as an implication `self ⇒ other`.
    pub fn implies(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| !x || y)
    }

    /// `t ↦ f(t - 0)`: the value on the open interval before each instant.
    pub fn left_limit(&self) -> Self {
        let mut prev = self.before;
        let raw: Vec<_> = self
            .breaks
            .iter()
            .map(|bp| {
                let v = prev;
                prev = bp.after;
                Breakpoint { at: bp.at.clone(), value: v, after: bp.after }
            })
            .collect();
        Self::from_sorted(self.before, raw)
    }

    /// Left derivative `f(t - 0) ⊕ f(t)`.
    pub fn derivative(&self) -> Self {
        self.left_limit().xor(self)
    }

    /// `(rise, fall)` with rise = `f'(t - 0)·f(t)` and fall = `f(t - 0)·f'(t)`.
    pub fn semi_derivatives(&self) -> (Self, Self) {
        let prev = self.left_limit();
        (prev.not().and(self), prev.and(&self.not()))
    }

    pub fn rising(&self) -> Self {
        self.semi_derivatives().0
    }

    pub fn falling(&self) -> Self {
        self.semi_derivatives().1
    }

    /// Checks the signal conditions: null before the origin, breakpoints at
    /// non-negative times, right-continuous everywhere.
    pub fn check_signal(&self) -> std::result::Result<(), NotSignal<T>> {
        if self.before {
            return Err(NotSignal::NonzeroBeforeOrigin);
        }
        if let Some(bp) = self.breaks.first() {
            if bp.at < T::zero() {
                return Err(NotSignal::SwitchBeforeOrigin(bp.at.clone()));
            }
        }
        match self.breaks.iter().find(|bp| bp.value != bp.after) {
            Some(bp) => Err(NotSignal::NotRightContinuous(bp.at.clone())),
            None => Ok(()),
        }
    }

    pub fn is_signal(&self) -> bool {
        self.check_signal().is_ok()
    }
}

impl<T: Scalar> fmt::Display for StepFn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1 on {}", self.one_set())
    }
}

/// Why a step function fails to be a signal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotSignal<T = Time> {
    NonzeroBeforeOrigin,
    SwitchBeforeOrigin(T),
    NotRightContinuous(T),
}

impl<T: Scalar> fmt::Display for NotSignal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotSignal::NonzeroBeforeOrigin => write!(f, "nonzero before time 0"),
            NotSignal::SwitchBeforeOrigin(t) => write!(f, "switches at negative time {t}"),
            NotSignal::NotRightContinuous(t) => write!(f, "not right-continuous at {t}"),
        }
    }
}

/// A realizable waveform: a [`StepFn`] that is zero before time 0 and
/// right-continuous. Only finitely many switches exist by construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signal<T = Time>(StepFn<T>);

impl<T: Scalar> Signal<T> {
    pub fn new(f: StepFn<T>) -> Result<Self> {
        match f.check_signal() {
            Ok(()) => Ok(Signal(f)),
            Err(why) => Err(Error::NotSignal(why.to_string())),
        }
    }

    pub fn zero() -> Self {
        Signal(StepFn::zero())
    }

    /// Builds a signal from `(time, new value)` change points; redundant
    /// entries are allowed and dropped.
    pub fn from_changes(changes: impl IntoIterator<Item = (T, bool)>) -> Result<Self> {
        Self::new(StepFn::canonical(false, changes.into_iter().map(|(t, v)| (t, v, v)))?)
    }

    /// Signal switching at each given time, starting with a rise.
    pub fn from_switches(times: impl IntoIterator<Item = T>) -> Result<Self> {
        Self::from_changes(times.into_iter().enumerate().map(|(k, t)| (t, k % 2 == 0)))
    }

    /// The minimal timed sequence: every instant where the signal switches.
    pub fn switch_points(&self) -> Vec<T> {
        self.0.breakpoint_times().cloned().collect()
    }

    pub fn as_stepfn(&self) -> &StepFn<T> {
        &self.0
    }

    pub fn into_stepfn(self) -> StepFn<T> {
        self.0
    }
}

impl<T: Scalar> Deref for Signal<T> {
    type Target = StepFn<T>;

    fn deref(&self) -> &StepFn<T> {
        &self.0
    }
}

impl<T: Scalar> TryFrom<StepFn<T>> for Signal<T> {
    type Error = Error;

    fn try_from(f: StepFn<T>) -> Result<Self> {
        Signal::new(f)
    }
}

impl<T: Scalar> fmt::Display for Signal<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Breakpoint-set switch points of an arbitrary step function, rejecting
/// non-signals.
pub fn switch_points<T: Scalar>(f: &StepFn<T>) -> Result<Vec<T>> {
    Ok(Signal::new(f.clone())?.switch_points())
}
