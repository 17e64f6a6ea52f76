use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::Time;

/// Delay bounds of a non-deterministic buffer:
/// `0 < rise_min ≤ rise_max` and `0 < fall_min ≤ fall_max`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DelayParams<T = Time> {
    rise_min: T,
    rise_max: T,
    fall_min: T,
    fall_max: T,
}

impl<T: Scalar> DelayParams<T> {
    pub fn new(rise_min: T, rise_max: T, fall_min: T, fall_max: T) -> Result<Self> {
        for (name, lo, hi) in [("rise", &rise_min, &rise_max), ("fall", &fall_min, &fall_max)] {
            if !lo.is_positive() || lo > hi {
                return Err(Error::InvalidParams(format!("need 0 < {name}_min <= {name}_max, got {lo} and {hi}")));
            }
        }
        Ok(DelayParams { rise_min, rise_max, fall_min, fall_max })
    }

    pub fn rise_min(&self) -> &T {
        &self.rise_min
    }

    pub fn rise_max(&self) -> &T {
        &self.rise_max
    }

    pub fn fall_min(&self) -> &T {
        &self.fall_min
    }

    pub fn fall_max(&self) -> &T {
        &self.fall_max
    }

    pub fn is_deterministic(&self) -> bool {
        self.rise_min == self.rise_max && self.fall_min == self.fall_max
    }

    pub fn deterministic(&self) -> Option<DetParams<T>> {
        self.is_deterministic().then(|| DetParams { rise: self.rise_min.clone(), fall: self.fall_min.clone() })
    }

    /// Whether a deterministic buffer with these delays is one of the
    /// admissible behaviours.
    pub fn admits(&self, p: &DetParams<T>) -> bool {
        self.rise_min <= p.rise && p.rise <= self.rise_max && self.fall_min <= p.fall && p.fall <= self.fall_max
    }
}

/// Delays of a deterministic buffer, both positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DetParams<T = Time> {
    rise: T,
    fall: T,
}

impl<T: Scalar> DetParams<T> {
    pub fn new(rise: T, fall: T) -> Result<Self> {
        if !rise.is_positive() || !fall.is_positive() {
            return Err(Error::InvalidParams(format!("delays must be positive, got {rise} and {fall}")));
        }
        Ok(DetParams { rise, fall })
    }

    pub fn rise(&self) -> &T {
        &self.rise
    }

    pub fn fall(&self) -> &T {
        &self.fall
    }

    pub fn to_bounds(&self) -> DelayParams<T> {
        DelayParams {
            rise_min: self.rise.clone(),
            rise_max: self.rise.clone(),
            fall_min: self.fall.clone(),
            fall_max: self.fall.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: i64) -> Time {
        Time::from_int(n)
    }

    #[test]
    fn validation() {
        assert!(DelayParams::new(t(1), t(2), t(1), t(2)).is_ok());
        assert!(DelayParams::new(t(0), t(2), t(1), t(2)).is_err());
        assert!(DelayParams::new(t(3), t(2), t(1), t(2)).is_err());
        assert!(DelayParams::new(t(1), t(2), t(2), t(1)).is_err());
        assert!(DetParams::new(t(1), t(0)).is_err());
        assert!(DetParams::new(t(-1), t(1)).is_err());
    }

    #[test]
    fn determinism() {
        let p = DelayParams::new(t(2), t(2), t(3), t(3)).unwrap();
        assert_eq!(p.deterministic(), Some(DetParams::new(t(2), t(3)).unwrap()));
        assert_eq!(DetParams::new(t(2), t(3)).unwrap().to_bounds(), p);
        let q = DelayParams::new(t(1), t(2), t(3), t(3)).unwrap();
        assert_eq!(q.deterministic(), None);
        assert!(q.admits(&DetParams::new(Time::from_ratio(3, 2), t(3)).unwrap()));
        assert!(!q.admits(&DetParams::new(t(3), t(3)).unwrap()));
    }
}
