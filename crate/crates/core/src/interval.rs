//! Intervals of the time line with open, closed or unbounded ends, and
//! normalized unions of them.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Bound::{self, Excluded, Included, Unbounded};

use crate::scalar::Scalar;
use crate::Time;

/// A nonempty interval. Single points are `[c, c]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval<T = Time> {
    lower: Bound<T>,
    upper: Bound<T>,
}

impl<T: Scalar> Interval<T> {
    /// Returns `None` when the bounds describe the empty set.
    pub fn new(lower: Bound<T>, upper: Bound<T>) -> Option<Self> {
        let nonempty = match (&lower, &upper) {
            (Included(a), Included(b)) => a <= b,
            (Included(a) | Excluded(a), Included(b) | Excluded(b)) => a < b,
            _ => true,
        };
        nonempty.then_some(Interval { lower, upper })
    }

    pub fn full() -> Self {
        Interval { lower: Unbounded, upper: Unbounded }
    }

    pub fn point(t: T) -> Self {
        Interval { lower: Included(t.clone()), upper: Included(t) }
    }

    /// `[a, b]`
    pub fn closed(a: T, b: T) -> Option<Self> {
        Self::new(Included(a), Included(b))
    }

    /// `(a, b)`
    pub fn open(a: T, b: T) -> Option<Self> {
        Self::new(Excluded(a), Excluded(b))
    }

    /// `[a, b)`
    pub fn closed_open(a: T, b: T) -> Option<Self> {
        Self::new(Included(a), Excluded(b))
    }

    /// `(a, b]`
    pub fn open_closed(a: T, b: T) -> Option<Self> {
        Self::new(Excluded(a), Included(b))
    }

    /// `[a, ∞)`
    pub fn at_least(a: T) -> Self {
        Interval { lower: Included(a), upper: Unbounded }
    }

    /// `(-∞, b)`
    pub fn below(b: T) -> Self {
        Interval { lower: Unbounded, upper: Excluded(b) }
    }

    pub fn lower(&self) -> &Bound<T> {
        &self.lower
    }

    pub fn upper(&self) -> &Bound<T> {
        &self.upper
    }

    pub fn is_point(&self) -> bool {
        matches!((&self.lower, &self.upper), (Included(a), Included(b)) if a == b)
    }

    pub fn contains(&self, t: &T) -> bool {
        let above = match &self.lower {
            Included(a) => a <= t,
            Excluded(a) => a < t,
            Unbounded => true,
        };
        let below = match &self.upper {
            Included(b) => t <= b,
            Excluded(b) => t < b,
            Unbounded => true,
        };
        above && below
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lower = match cmp_lower(&self.lower, &other.lower) {
            Ordering::Less => other.lower.clone(),
            _ => self.lower.clone(),
        };
        let upper = match cmp_upper(&self.upper, &other.upper) {
            Ordering::Greater => other.upper.clone(),
            _ => self.upper.clone(),
        };
        Self::new(lower, upper)
    }

    /// Minkowski sum `{a + b : a ∈ self, b ∈ other}`.
    ///
    /// An endpoint of the sum is attained iff both summand endpoints are.
    pub fn sum(&self, other: &Self) -> Self {
        fn add<T: Scalar>(x: &Bound<T>, y: &Bound<T>) -> Bound<T> {
            match (x, y) {
                (Unbounded, _) | (_, Unbounded) => Unbounded,
                (Included(a), Included(b)) => Included(a.clone() + b.clone()),
                (Included(a) | Excluded(a), Included(b) | Excluded(b)) => Excluded(a.clone() + b.clone()),
            }
        }
        Interval { lower: add(&self.lower, &other.lower), upper: add(&self.upper, &other.upper) }
    }

    /// `{-a : a ∈ self}`
    pub fn reflect(&self) -> Self {
        let neg = |b: &Bound<T>| match b {
            Included(a) => Included(-a.clone()),
            Excluded(a) => Excluded(-a.clone()),
            Unbounded => Unbounded,
        };
        Interval { lower: neg(&self.upper), upper: neg(&self.lower) }
    }

    pub fn shift(&self, by: &T) -> Self {
        self.sum(&Interval::point(by.clone()))
    }

    /// Length of the interval, `None` when unbounded.
    pub fn length(&self) -> Option<T> {
        match (bound_value(&self.lower), bound_value(&self.upper)) {
            (Some(a), Some(b)) => Some(b.clone() - a.clone()),
            _ => None,
        }
    }

    /// A canonical member: the least point if attained, otherwise the
    /// midpoint, or `lower + 1` when the interval is unbounded above.
    pub fn representative(&self) -> T {
        match (&self.lower, &self.upper) {
            (Included(a), _) => a.clone(),
            (Excluded(a), Included(b) | Excluded(b)) => a.midpoint(b),
            (Excluded(a), Unbounded) => a.clone() + T::one(),
            (Unbounded, Included(b) | Excluded(b)) => b.clone() - T::one(),
            (Unbounded, Unbounded) => T::zero(),
        }
    }
}

pub(crate) fn bound_value<T>(b: &Bound<T>) -> Option<&T> {
    match b {
        Included(a) | Excluded(a) => Some(a),
        Unbounded => None,
    }
}

fn cmp_lower<T: Ord>(x: &Bound<T>, y: &Bound<T>) -> Ordering {
    match (x, y) {
        (Unbounded, Unbounded) => Ordering::Equal,
        (Unbounded, _) => Ordering::Less,
        (_, Unbounded) => Ordering::Greater,
        (Included(a), Included(b)) | (Excluded(a), Excluded(b)) => a.cmp(b),
        (Included(a), Excluded(b)) => a.cmp(b).then(Ordering::Less),
        (Excluded(a), Included(b)) => a.cmp(b).then(Ordering::Greater),
    }
}

fn cmp_upper<T: Ord>(x: &Bound<T>, y: &Bound<T>) -> Ordering {
    match (x, y) {
        (Unbounded, Unbounded) => Ordering::Equal,
        (Unbounded, _) => Ordering::Greater,
        (_, Unbounded) => Ordering::Less,
        (Included(a), Included(b)) | (Excluded(a), Excluded(b)) => a.cmp(b),
        (Included(a), Excluded(b)) => a.cmp(b).then(Ordering::Greater),
        (Excluded(a), Included(b)) => a.cmp(b).then(Ordering::Less),
    }
}

/// Whether `next` (which starts no earlier than `cur`) overlaps or abuts
/// `cur` so that their union is one interval.
fn joins<T: Ord>(cur: &Interval<T>, next: &Interval<T>) -> bool {
    match (&cur.upper, &next.lower) {
        (Unbounded, _) | (_, Unbounded) => true,
        (Included(u) | Excluded(u), Included(l) | Excluded(l)) => match l.cmp(u) {
            Ordering::Less => true,
            Ordering::Equal => matches!(cur.upper, Included(_)) || matches!(next.lower, Included(_)),
            Ordering::Greater => false,
        },
    }
}

fn flip<T: Clone>(b: &Bound<T>) -> Bound<T> {
    match b {
        Included(a) => Excluded(a.clone()),
        Excluded(a) => Included(a.clone()),
        Unbounded => Unbounded,
    }
}

impl<T: Scalar> fmt::Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            if let Included(a) = &self.lower {
                return write!(f, "{{{a}}}");
            }
        }
        match &self.lower {
            Included(a) => write!(f, "[{a}, ")?,
            Excluded(a) => write!(f, "({a}, ")?,
            Unbounded => write!(f, "(-inf, ")?,
        }
        match &self.upper {
            Included(b) => write!(f, "{b}]"),
            Excluded(b) => write!(f, "{b})"),
            Unbounded => write!(f, "+inf)"),
        }
    }
}

/// A finite union of intervals kept sorted, pairwise disjoint and maximal
/// (no two members can be merged into one interval).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalSet<T = Time> {
    intervals: Vec<Interval<T>>,
}

impl<T: Scalar> Default for IntervalSet<T> {
    fn default() -> Self {
        Self::empty()
    }
}

impl<T: Scalar> IntervalSet<T> {
    pub fn empty() -> Self {
        IntervalSet { intervals: Vec::new() }
    }

    pub fn full() -> Self {
        IntervalSet { intervals: vec![Interval::full()] }
    }

    /// Normalizes an arbitrary collection of intervals.
    pub fn from_intervals(items: impl IntoIterator<Item = Interval<T>>) -> Self {
        let mut items: Vec<_> = items.into_iter().collect();
        items.sort_by(|x, y| cmp_lower(&x.lower, &y.lower));
        let mut merged: Vec<Interval<T>> = Vec::with_capacity(items.len());
        for next in items {
            match merged.last_mut() {
                Some(cur) if joins(cur, &next) => {
                    if cmp_upper(&next.upper, &cur.upper) == Ordering::Greater {
                        cur.upper = next.upper;
                    }
                }
                _ => merged.push(next),
            }
        }
        IntervalSet { intervals: merged }
    }

    pub fn intervals(&self) -> &[Interval<T>] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, t: &T) -> bool {
        // First interval whose upper end is not below t.
        let idx = self.intervals.partition_point(|iv| match &iv.upper {
            Included(b) => b < t,
            Excluded(b) => b <= t,
            Unbounded => false,
        });
        self.intervals.get(idx).is_some_and(|iv| iv.contains(t))
    }

    pub fn complement(&self) -> Self {
        let mut out = Vec::with_capacity(self.intervals.len() + 1);
        let mut lower: Bound<T> = Unbounded;
        for iv in &self.intervals {
            if !matches!(iv.lower, Unbounded) {
                if let Some(gap) = Interval::new(lower.clone(), flip(&iv.lower)) {
                    out.push(gap);
                }
            }
            if matches!(iv.upper, Unbounded) {
                return IntervalSet { intervals: out };
            }
            lower = flip(&iv.upper);
        }
        if let Some(tail) = Interval::new(lower, Unbounded) {
            out.push(tail);
        }
        IntervalSet { intervals: out }
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_intervals(self.intervals.iter().chain(&other.intervals).cloned())
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.complement().union(&other.complement()).complement()
    }

    pub fn intersect_interval(&self, window: &Interval<T>) -> Self {
        IntervalSet { intervals: self.intervals.iter().filter_map(|iv| iv.intersect(window)).collect() }
    }

    /// Minkowski sum with a single interval.
    pub fn sum(&self, offsets: &Interval<T>) -> Self {
        Self::from_intervals(self.intervals.iter().map(|iv| iv.sum(offsets)))
    }

    /// Finite endpoints in increasing order, without duplicates.
    pub fn endpoints(&self) -> Vec<T> {
        let mut pts: Vec<T> = Vec::new();
        for iv in &self.intervals {
            for b in [&iv.lower, &iv.upper] {
                if let Some(v) = bound_value(b) {
                    if pts.last() != Some(v) {
                        pts.push(v.clone());
                    }
                }
            }
        }
        pts
    }
}

impl<T: Scalar> FromIterator<Interval<T>> for IntervalSet<T> {
    fn from_iter<I: IntoIterator<Item = Interval<T>>>(iter: I) -> Self {
        Self::from_intervals(iter)
    }
}

impl<T: Scalar> fmt::Display for IntervalSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "{{}}");
        }
        for (k, iv) in self.intervals.iter().enumerate() {
            if k > 0 {
                write!(f, " u ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: i64) -> Time {
        Time::from_int(n)
    }

    #[test]
    fn emptiness() {
        assert!(Interval::open(t(1), t(1)).is_none());
        assert!(Interval::closed_open(t(1), t(1)).is_none());
        assert!(Interval::closed(t(2), t(1)).is_none());
        assert!(Interval::closed(t(1), t(1)).unwrap().is_point());
    }

    #[test]
    fn minkowski_sum_endpoint_flags() {
        let a = Interval::closed_open(t(0), t(1)).unwrap();
        let b = Interval::open_closed(t(0), t(1)).unwrap();
        assert_eq!(a.sum(&b), Interval::open(t(0), t(2)).unwrap());
        let p = Interval::point(t(1));
        assert_eq!(p.sum(&b), Interval::open_closed(t(1), t(2)).unwrap());
    }

    #[test]
    fn merging_respects_missing_points() {
        let s = IntervalSet::from_intervals([Interval::open(t(0), t(1)).unwrap(), Interval::open(t(1), t(2)).unwrap()]);
        assert_eq!(s.intervals().len(), 2);
        let s = IntervalSet::from_intervals([
            Interval::open(t(0), t(1)).unwrap(),
            Interval::open(t(1), t(2)).unwrap(),
            Interval::point(t(1)),
        ]);
        assert_eq!(s.intervals(), &[Interval::open(t(0), t(2)).unwrap()]);
        let s = IntervalSet::from_intervals([
            Interval::closed(t(3), t(5)).unwrap(),
            Interval::closed_open(t(0), t(3)).unwrap(),
            Interval::point(t(4)),
        ]);
        assert_eq!(s.intervals(), &[Interval::closed(t(0), t(5)).unwrap()]);
    }

    #[test]
    fn complement_is_involutive() {
        let s = IntervalSet::from_intervals([
            Interval::closed_open(t(0), t(1)).unwrap(),
            Interval::point(t(2)),
            Interval::at_least(t(3)),
        ]);
        let c = s.complement();
        assert_eq!(
            c.intervals(),
            &[Interval::below(t(0)), Interval::closed_open(t(1), t(2)).unwrap(), Interval::open(t(2), t(3)).unwrap(),]
        );
        assert_eq!(c.complement(), s);
        assert_eq!(IntervalSet::<Time>::empty().complement(), IntervalSet::full());
        assert_eq!(IntervalSet::<Time>::full().complement(), IntervalSet::empty());
    }

    #[test]
    fn membership() {
        let s = IntervalSet::from_intervals([
            Interval::closed_open(t(0), t(1)).unwrap(),
            Interval::open_closed(t(2), t(3)).unwrap(),
        ]);
        assert!(s.contains(&t(0)));
        assert!(!s.contains(&t(1)));
        assert!(!s.contains(&t(2)));
        assert!(s.contains(&t(3)));
        assert!(s.contains(&Time::from_ratio(5, 2)));
    }

    #[test]
    fn display() {
        let s = IntervalSet::from_intervals([Interval::closed_open(t(0), t(1)).unwrap(), Interval::point(t(2))]);
        assert_eq!(s.to_string(), "[0, 1) u {2}");
        assert_eq!(Interval::<Time>::full().to_string(), "(-inf, +inf)");
    }
}
