//! Drawing admissible outputs of the non-deterministic buffer.

use std::ops::Bound;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::params::DelayParams;
use super::{first_after, held_high, held_low};
use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalSet};
use crate::scalar::Scalar;
use crate::stepfn::Signal;

pub const DEFAULT_GRANULARITY: u32 = 16;

/// How to resolve the freedom in each switching instant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Policy {
    /// Switch as soon as allowed (minimal delays).
    Eager,
    /// Switch only when forced (maximal delays).
    Lazy,
    /// Draw each delay uniformly from `{min + k/granularity} ∩ [min, max]`.
    Random { seed: u64, granularity: u32 },
}

/// Produces one output the buffer may exhibit for input `i`.
///
/// A pending switch is dropped if the input changes before the drawn
/// instant. A drawn instant never lies after the forced one.
pub fn sample<T: Scalar>(i: &Signal<T>, p: &DelayParams<T>, policy: Policy) -> Result<Signal<T>> {
    let mut rng = match policy {
        Policy::Random { granularity: 0, .. } => {
            return Err(Error::InvalidConfig("granularity must be positive".into()));
        }
        Policy::Random { seed, .. } => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let granularity = match policy {
        Policy::Random { granularity, .. } => granularity,
        _ => DEFAULT_GRANULARITY,
    };

    let rise = Edge::new(
        held_high(i, p.rise_min()).one_set(),
        held_high(i, p.rise_max()).one_set(),
        p.rise_min(),
        p.rise_max(),
    );
    let fall =
        Edge::new(held_low(i, p.fall_min()).one_set(), held_low(i, p.fall_max()).one_set(), p.fall_min(), p.fall_max());

    let mut level = false;
    let mut switches: Vec<T> = Vec::new();
    'sweep: loop {
        let edge = if level { &fall } else { &rise };
        let mut cursor = switches.last().cloned();
        while let Some((start, run)) = first_after(&edge.allowed, cursor.as_ref()) {
            let forced = first_after(&edge.forced, cursor.as_ref()).map(|(f, _)| f).filter(|f| run.contains(f));
            let chosen = match policy {
                Policy::Eager => Some(start.clone()),
                Policy::Lazy => forced.clone(),
                Policy::Random { .. } => {
                    let rng = rng.as_mut().expect("random policy has a generator");
                    let drawn = start.clone() + edge.draw_slack(rng, granularity);
                    let drawn = match &forced {
                        Some(f) if *f < drawn => f.clone(),
                        _ => drawn,
                    };
                    run.contains(&drawn).then_some(drawn)
                }
            };
            match chosen {
                Some(t) => {
                    switches.push(t);
                    level = !level;
                    continue 'sweep;
                }
                // Cancelled: the input changed before the switch was due.
                None => cursor = Some(upper_value(run)),
            }
        }
        break;
    }
    Signal::from_switches(switches)
}

fn upper_value<T: Scalar>(run: &Interval<T>) -> T {
    match run.upper() {
        Bound::Included(b) | Bound::Excluded(b) => b.clone(),
        Bound::Unbounded => unreachable!("an unbounded enabling run always contains its forced instant"),
    }
}

struct Edge<T> {
    allowed: IntervalSet<T>,
    forced: IntervalSet<T>,
    slack: T,
}

impl<T: Scalar> Edge<T> {
    fn new(allowed: IntervalSet<T>, forced: IntervalSet<T>, min: &T, max: &T) -> Self {
        Edge { allowed, forced, slack: max.clone() - min.clone() }
    }

    /// `k / granularity` with `k` uniform in `0..=floor(slack · granularity)`.
    fn draw_slack(&self, rng: &mut ChaCha8Rng, granularity: u32) -> T {
        let (n, d) = self.slack.to_fraction();
        let steps = (n * BigInt::from(granularity)).div_floor(&d);
        let steps = steps.to_u64().unwrap_or(u64::MAX);
        let k = rng.gen_range(0..=steps);
        T::from_fraction(&BigInt::from(k), &BigInt::from(granularity)).expect("draw fits the scalar")
    }
}
