//! Named `(i, o, p)` triples with the verdicts each checker must give.

use std::fmt;
use std::str::FromStr;

use crate::buffer::{didb, nidb, DelayParams, DidbForm, NidbForm};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::litcmp::conditions::{lit_verify, LitCondition};
use crate::report::{Report, Verdict};
use crate::scalar::Scalar;
use crate::stepfn::{Signal, StepFn};
use crate::Time;

/// Any of the conformance checkers, addressed by its condition id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Nidb(NidbForm),
    Didb(DidbForm),
    Lit(LitCondition),
}

impl Check {
    pub fn id(self) -> String {
        match self {
            Check::Nidb(f) => f.id(),
            Check::Didb(f) => f.id(),
            Check::Lit(c) => c.id(),
        }
    }

    /// Runs the checker. The deterministic forms need equal min/max delays.
    pub fn run<T: Scalar>(self, i: &Signal<T>, o: &Signal<T>, p: &DelayParams<T>) -> Result<Report<T>> {
        Ok(match self {
            Check::Nidb(f) => nidb::verify(i, o, p, f),
            Check::Lit(c) => lit_verify(i, o, p, c),
            Check::Didb(f) => {
                let d = p
                    .deterministic()
                    .ok_or_else(|| Error::InvalidParams(format!("{} needs equal min and max delays", f.id())))?;
                didb::verify(i, o, &d, f)
            }
        })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parsed = match s.split_once('-') {
            Some((family, letter)) if letter.chars().count() == 1 => {
                let c = letter.chars().next().unwrap_or_default();
                match family {
                    "nidb" => NidbForm::from_letter(c).map(Check::Nidb),
                    "didb" => DidbForm::from_letter(c).map(Check::Didb),
                    "lit" => LitCondition::from_letter(c).map(Check::Lit),
                    _ => None,
                }
            }
            _ => None,
        };
        parsed.ok_or_else(|| Error::InvalidConfig(format!("unknown condition id `{s}`")))
    }
}

/// The verdict a fixture demands from one checker.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Expectation {
    pub verdict: Verdict,
    /// Required first witness of a failure.
    pub witness: Option<Time>,
    /// Required look-ahead window recorded with that witness.
    pub window: Option<Interval>,
}

impl Expectation {
    pub fn pass() -> Self {
        Expectation { verdict: Verdict::Pass, witness: None, window: None }
    }

    pub fn fail_at(witness: Time) -> Self {
        Expectation { verdict: Verdict::Fail, witness: Some(witness), window: None }
    }

    pub fn searching(mut self, window: Interval) -> Self {
        self.window = Some(window);
        self
    }

    pub fn is_met_by(&self, report: &Report) -> bool {
        if report.verdict() != self.verdict {
            return false;
        }
        let first = report.first_violation();
        let witness_ok = self.witness.as_ref().is_none_or(|w| first.map(|v| &v.witness) == Some(w));
        let window_ok = self.window.as_ref().is_none_or(|w| first.and_then(|v| v.window.as_ref()) == Some(w));
        witness_ok && window_ok
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.verdict)?;
        if let Some(w) = &self.witness {
            write!(f, " at t = {w}")?;
        }
        if let Some(w) = &self.window {
            write!(f, " searching {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub i: Signal,
    pub o: Signal,
    pub p: DelayParams,
    pub expected: Vec<(Check, Expectation)>,
}

/// One checker's result on a fixture, next to what was expected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub check: Check,
    pub report: Report,
    pub expected: Expectation,
}

impl Outcome {
    pub fn matches(&self) -> bool {
        self.expected.is_met_by(&self.report)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.matches() { "ok" } else { "MISMATCH" };
        write!(f, "{} (expected {}) {mark}", self.report, self.expected)
    }
}

impl Fixture {
    /// A held input with a silent output: causal in the literature's sense,
    /// yet the buffer must have risen by `rise_max`.
    pub fn held_input_silent_output(p: DelayParams) -> Self {
        let rise_max = p.rise_max().clone();
        Fixture {
            name: "5.3".into(),
            i: Signal::new(StepFn::pulse(Time::from_int(0), None)).expect("a step at 0 is a signal"),
            o: Signal::zero(),
            p,
            expected: vec![
                (Check::Lit(LitCondition::Causal), Expectation::pass()),
                (Check::Nidb(NidbForm::SemiDerivative), Expectation::fail_at(rise_max)),
            ],
        }
    }

    /// A pulse of length 1 through a buffer with all delays 2: the buffer
    /// filters it, but the literature demands a response to its fall.
    pub fn filtered_pulse() -> Self {
        let t = Time::from_int;
        Fixture {
            name: "5.4".into(),
            i: Signal::new(StepFn::pulse(t(1), Some(t(2)))).expect("a pulse is a signal"),
            o: Signal::zero(),
            p: DelayParams::new(t(2), t(2), t(2), t(2)).expect("valid delays"),
            expected: vec![
                (Check::Nidb(NidbForm::SemiDerivative), Expectation::pass()),
                (
                    Check::Lit(LitCondition::Response),
                    Expectation::fail_at(t(2)).searching(Interval::open_closed(t(2), t(4)).expect("nonempty")),
                ),
            ],
        }
    }

    pub fn reproduce(&self) -> Result<Vec<Outcome>> {
        self.expected
            .iter()
            .map(|(check, expected)| {
                Ok(Outcome { check: *check, report: check.run(&self.i, &self.o, &self.p)?, expected: expected.clone() })
            })
            .collect()
    }

    pub fn holds(&self) -> Result<bool> {
        Ok(self.reproduce()?.iter().all(Outcome::matches))
    }
}

/// The named counterexamples: `"5.3"` (with delays `(1, 2, 1, 2)`) and `"5.4"`.
pub fn counterexample(id: &str) -> Result<Fixture> {
    let t = Time::from_int;
    match id {
        "5.3" => Ok(Fixture::held_input_silent_output(DelayParams::new(t(1), t(2), t(1), t(2))?)),
        "5.4" => Ok(Fixture::filtered_pulse()),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}
