//! Independent oracles: every value here is computed from point
//! evaluations of the inputs, never from the interval machinery under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use inertial::buffer::DetParams;
use inertial::{Scalar, Signal, StepFn, Time};
use proptest::prelude::*;
use rand::Rng;

pub fn t(n: i64) -> Time {
    Time::from_int(n)
}

pub fn q(n: i64, d: i64) -> Time {
    Time::from_ratio(n, d)
}

pub fn signal(ticks: &[u32], granularity: i64) -> Signal {
    Signal::from_switches(ticks.iter().map(|&k| q(i64::from(k), granularity))).unwrap()
}

/// Strategy: signals switching on the grid `k / granularity`, `k < span`.
pub fn arb_signal(span: u32, max_switches: usize, granularity: i64) -> impl Strategy<Value = Signal> {
    prop::collection::btree_set(0..span, 0..=max_switches)
        .prop_map(move |ticks| signal(&ticks.into_iter().collect::<Vec<_>>(), granularity))
}

/// Strategy: a positive width `k / granularity` with `1 ≤ k ≤ max_ticks`.
pub fn arb_width(max_ticks: u32, granularity: i64) -> impl Strategy<Value = Time> {
    (1..=max_ticks).prop_map(move |k| q(i64::from(k), granularity))
}

pub fn random_signal(rng: &mut impl Rng, span: u32, max_switches: usize, granularity: i64) -> Signal {
    let n = rng.gen_range(0..=max_switches);
    let ticks: BTreeSet<u32> = (0..n).map(|_| rng.gen_range(0..span)).collect();
    signal(&ticks.into_iter().collect::<Vec<_>>(), granularity)
}

/// `x(t - 0)`: the value just below `t`, sampled halfway to the nearest
/// breakpoint underneath.
pub fn left_limit_at(x: &StepFn, at: &Time) -> bool {
    let below = x.breakpoint_times().filter(|b| *b < at).max();
    let probe = match below {
        Some(b) => (b.clone() + at.clone()) / t(2),
        None => at.clone() - t(1),
    };
    x.eval(&probe)
}

pub fn derivative_at(x: &StepFn, at: &Time) -> bool {
    left_limit_at(x, at) != x.eval(at)
}

/// Points that decide the infimum/supremum of `x` over the window from
/// `lo` to `hi`: included ends, breakpoints inside, and midpoints between.
fn window_probes(x: &StepFn, lo: &Time, lo_in: bool, hi: &Time, hi_in: bool) -> Vec<Time> {
    let mut cuts: Vec<Time> = vec![lo.clone()];
    cuts.extend(x.breakpoint_times().filter(|b| *b > lo && *b < hi).cloned());
    cuts.push(hi.clone());
    let mut probes: Vec<Time> = cuts.windows(2).map(|w| (w[0].clone() + w[1].clone()) / t(2)).collect();
    probes.extend(cuts[1..cuts.len() - 1].iter().cloned());
    if lo_in {
        probes.push(lo.clone());
    }
    if hi_in {
        probes.push(hi.clone());
    }
    probes
}

/// Brute-force `inf` (all = true) or `sup` of `x` over `{s : lo ⋄ s ⋄ hi}`.
pub fn over(all: bool, x: &StepFn, lo: &Time, lo_in: bool, hi: &Time, hi_in: bool) -> bool {
    if lo == hi {
        // Only the closed degenerate window is nonempty.
        return x.eval(lo);
    }
    let mut values = window_probes(x, lo, lo_in, hi, hi_in).into_iter().map(|s| x.eval(&s));
    if all {
        values.all(|v| v)
    } else {
        values.any(|v| v)
    }
}

/// Window kinds as `(lower included, upper included)` for `[t-d, t)`,
/// `(t-d, t)`, `(t-d, t]`.
pub const KINDS: [(bool, bool); 3] = [(true, false), (false, false), (false, true)];

pub fn window_at(all: bool, x: &StepFn, d: &Time, kind: (bool, bool), at: &Time) -> bool {
    over(all, x, &(at.clone() - d.clone()), kind.0, at, kind.1)
}

/// `∃ r ∈ [t - longest, t - shortest]`: `x` rose at `r` and `x ≡ 1` on `[r, t)`.
pub fn risen_and_held_at(x: &StepFn, longest: &Time, shortest: &Time, at: &Time) -> bool {
    x.breakpoint_times().any(|r| {
        let rose = !left_limit_at(x, r) && x.eval(r);
        let in_range = *r >= at.clone() - longest.clone() && *r <= at.clone() - shortest.clone();
        rose && in_range && over(true, x, r, true, at, false)
    })
}

/// Test instants: a grid of step `min breakpoint gap / 4` covering all
/// breakpoints widened by `margin`, plus every breakpoint of the given
/// functions shifted by each of `shifts`.
pub fn grid(fs: &[&StepFn], margin: &Time, shifts: &[Time]) -> Vec<Time> {
    let mut points: Vec<Time> = fs.iter().flat_map(|f| f.breakpoint_times().cloned()).collect();
    points.sort();
    points.dedup();
    let gap = points.windows(2).map(|w| w[1].clone() - w[0].clone()).min().unwrap_or_else(|| t(1));
    let step = gap / t(4);
    let lo = points.first().cloned().unwrap_or_else(|| t(0)) - margin.clone() - t(1);
    let hi = points.last().cloned().unwrap_or_else(|| t(0)) + margin.clone() + t(1);
    let mut out = Vec::new();
    let mut at = lo;
    while at <= hi {
        out.push(at.clone());
        at += step.clone();
    }
    for p in &points {
        for s in shifts {
            out.push(p.clone() + s.clone());
        }
    }
    out
}

/// The deterministic buffer, stepped on a grid fine enough that the input,
/// both delays and therefore the output only change at grid points.
///
/// At each grid instant the three-case recursion is applied literally:
/// rise if the output was 0 and the input was 1 on every grid cell of
/// `[t - d_r, t)`, fall dually, else hold.
pub fn grid_simulate(i: &Signal, p: &DetParams, step: &Time, horizon: &Time) -> Signal {
    let cells = |d: &Time| {
        let n = d.clone() / step.clone();
        assert!(n.is_integer(), "delay {d} is not a multiple of the step {step}");
        n.to_integer().try_into().expect("small delay")
    };
    let (nr, nf): (usize, usize) = (cells(p.rise()), cells(p.fall()));
    let steps: usize = (horizon.clone() / step.clone()).ceil().to_integer().try_into().expect("small horizon");
    // Index j holds i on the cell starting at j·step; cells before 0 are 0.
    let input: Vec<bool> = (0..=steps).map(|j| i.eval(&(step.clone() * t(j as i64)))).collect();
    let cell = |j: isize| j >= 0 && input[j as usize];
    let mut level = false;
    let mut changes = Vec::new();
    for k in 0..=steps as isize {
        let held = |n: usize, v: bool| (k - n as isize..k).all(|j| cell(j) == v);
        let next = if !level && held(nr, true) {
            true
        } else if level && held(nf, false) {
            false
        } else {
            level
        };
        if next != level {
            changes.push((step.clone() * t(k as i64), next));
            level = next;
        }
    }
    Signal::from_changes(changes).unwrap()
}
