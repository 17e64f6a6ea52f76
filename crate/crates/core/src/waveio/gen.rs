//! Seeded random signals on a rational grid.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::buffer::DelayParams;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::stepfn::Signal;
use crate::Time;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenConfig<T = Time> {
    /// Switches happen in `[0, horizon]`.
    pub horizon: T,
    pub max_switches: usize,
    /// Switch instants are multiples of `1 / granularity`.
    pub granularity: u32,
    pub seed: u64,
}

impl<T: Scalar> GenConfig<T> {
    pub fn new(horizon: T, max_switches: usize, granularity: u32, seed: u64) -> Result<Self> {
        let cfg = GenConfig { horizon, max_switches, granularity, seed };
        grid_steps(&cfg.horizon, cfg.granularity)?;
        Ok(cfg)
    }
}

/// Number of whole grid steps in `[0, span]`.
fn grid_steps<T: Scalar>(span: &T, granularity: u32) -> Result<u64> {
    if granularity == 0 {
        return Err(Error::InvalidConfig("granularity must be positive".into()));
    }
    if span.is_negative() {
        return Err(Error::InvalidConfig(format!("horizon must be non-negative, got {span}")));
    }
    let (n, d) = span.to_fraction();
    (n * BigInt::from(granularity))
        .div_floor(&d)
        .to_u64()
        .filter(|&s| s < u64::MAX)
        .ok_or_else(|| Error::InvalidConfig(format!("grid over {span} is too fine")))
}

fn grid_point<T: Scalar>(k: u64, granularity: u32) -> T {
    T::from_fraction(&BigInt::from(k), &BigInt::from(granularity)).expect("grid points fit the scalar")
}

/// A signal with at most `cfg.max_switches` switches, uniformly placed on
/// the grid. The same configuration always gives the same signal.
pub fn random_signal<T: Scalar>(cfg: &GenConfig<T>) -> Result<Signal<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    random_signal_from(&mut rng, &cfg.horizon, cfg.max_switches, cfg.granularity)
}

/// Like [`random_signal`], drawing from a caller-owned generator.
pub fn random_signal_from<T: Scalar, R: Rng + ?Sized>(
    rng: &mut R,
    horizon: &T,
    max_switches: usize,
    granularity: u32,
) -> Result<Signal<T>> {
    let points = grid_steps(horizon, granularity)? + 1;
    let most = (max_switches as u64).min(points);
    let count = rng.gen_range(0..=most) as usize;
    let points = usize::try_from(points).map_err(|_| Error::InvalidConfig("grid too large".into()))?;
    let mut picked = index::sample(rng, points, count).into_vec();
    picked.sort_unstable();
    Signal::from_switches(picked.into_iter().map(|k| grid_point(k as u64, granularity)))
}

/// Delay bounds on the grid, each in `[1/granularity, max_delay]`.
pub fn random_delays<T: Scalar, R: Rng + ?Sized>(
    rng: &mut R,
    max_delay: &T,
    granularity: u32,
) -> Result<DelayParams<T>> {
    let steps = grid_steps(max_delay, granularity)?;
    if steps == 0 {
        return Err(Error::InvalidConfig(format!("max delay {max_delay} is below one grid step")));
    }
    let mut bounds = || {
        let lo = rng.gen_range(1..=steps);
        let hi = rng.gen_range(lo..=steps);
        (grid_point(lo, granularity), grid_point(hi, granularity))
    };
    let (rise_min, rise_max) = bounds();
    let (fall_min, fall_max) = bounds();
    DelayParams::new(rise_min, rise_max, fall_min, fall_max)
}

/// A grid point of `[lo, hi]`, uniformly.
pub fn random_between<T: Scalar, R: Rng + ?Sized>(rng: &mut R, lo: &T, hi: &T, granularity: u32) -> Result<T> {
    let first = ceil_steps(lo, granularity);
    let last = grid_steps(hi, granularity)?;
    if first > last {
        return Err(Error::InvalidConfig(format!("no grid point in [{lo}, {hi}]")));
    }
    Ok(grid_point(rng.gen_range(first..=last), granularity))
}

fn ceil_steps<T: Scalar>(t: &T, granularity: u32) -> u64 {
    let (n, d) = t.to_fraction();
    (n * BigInt::from(granularity)).div_ceil(&d).to_u64().unwrap_or(0)
}
