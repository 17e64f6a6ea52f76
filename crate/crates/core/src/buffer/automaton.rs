//! The `(input, output)` automaton view of a buffer run.

use std::fmt;

use crate::scalar::Scalar;
use crate::stepfn::Signal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AutomatonState {
    pub input: bool,
    pub output: bool,
}

impl AutomatonState {
    /// The state every run starts from.
    pub const INITIAL: AutomatonState = AutomatonState { input: false, output: false };

    /// `(0,0)` and `(1,1)` are stable; `(1,0)` and `(0,1)` are not.
    pub fn is_stable(self) -> bool {
        self.input == self.output
    }
}

impl fmt::Display for AutomatonState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{}) {}",
            self.input as u8,
            self.output as u8,
            if self.is_stable() { "stable" } else { "unstable" }
        )
    }
}

/// State changes of the run `t ↦ (i(t), o(t))` after the initial `(0,0)`.
///
/// The transition instants are exactly the union of both switch sets.
pub fn trace<T: Scalar>(i: &Signal<T>, o: &Signal<T>) -> Vec<(T, AutomatonState)> {
    let mut times: Vec<&T> = i.breakpoint_times().chain(o.breakpoint_times()).collect();
    times.sort();
    times.dedup();
    let mut current = AutomatonState::INITIAL;
    let mut out = Vec::with_capacity(times.len());
    for t in times {
        let state = AutomatonState { input: i.eval(t), output: o.eval(t) };
        if state != current {
            out.push((t.clone(), state));
            current = state;
        }
    }
    out
}
