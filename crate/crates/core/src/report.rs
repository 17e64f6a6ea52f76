//! Verification verdicts with exact violation witnesses.

use std::fmt;

use crate::interval::Interval;
use crate::scalar::Scalar;
use crate::stepfn::StepFn;
use crate::window::violations;
use crate::Time;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

/// One failing stretch of one clause.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Violation<T = Time> {
    /// An exact instant at which the clause is false: the first point of
    /// `span` when attained, otherwise an interior point.
    pub witness: T,
    /// The maximal stretch of `t ≥ 0` on which the clause fails.
    pub span: Interval<T>,
    /// For clauses that look ahead, the future window searched at `witness`.
    pub window: Option<Interval<T>>,
    pub lhs: bool,
    pub rhs: bool,
    pub clause: String,
}

/// Outcome of checking one named condition. Fails iff it has violations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Report<T = Time> {
    pub condition: String,
    pub violations: Vec<Violation<T>>,
}

impl<T: Scalar> Report<T> {
    pub fn new(condition: impl Into<String>) -> Self {
        Report { condition: condition.into(), violations: Vec::new() }
    }

    pub fn verdict(&self) -> Verdict {
        if self.violations.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// The earliest witness over all clauses.
    pub fn first_witness(&self) -> Option<&T> {
        self.violations.iter().map(|v| &v.witness).min()
    }

    pub fn first_violation(&self) -> Option<&Violation<T>> {
        self.violations.iter().min_by(|a, b| a.witness.cmp(&b.witness))
    }

    /// Requires `lhs ≤ rhs` for all `t ≥ 0`.
    pub fn require_leq(&mut self, clause: &str, lhs: &StepFn<T>, rhs: &StepFn<T>) -> &mut Self {
        self.require_leq_looking_ahead(clause, lhs, rhs, |_| None)
    }

    /// Like [`Report::require_leq`], recording for each violation the future
    /// window that the right-hand side inspects at the witness.
    pub fn require_leq_looking_ahead(
        &mut self,
        clause: &str,
        lhs: &StepFn<T>,
        rhs: &StepFn<T>,
        window_at: impl Fn(&T) -> Option<Interval<T>>,
    ) -> &mut Self {
        for w in violations(lhs, rhs) {
            self.violations.push(Violation {
                window: window_at(&w.at),
                witness: w.at,
                span: w.span,
                lhs: true,
                rhs: false,
                clause: clause.to_string(),
            });
        }
        self
    }

    /// Requires `lhs = rhs` for all `t ≥ 0`.
    pub fn require_eq(&mut self, clause: &str, lhs: &StepFn<T>, rhs: &StepFn<T>) -> &mut Self {
        let mut found: Vec<_> = violations(lhs, rhs).into_iter().chain(violations(rhs, lhs)).collect();
        found.sort_by(|a, b| a.at.cmp(&b.at));
        for w in found {
            self.violations.push(Violation {
                lhs: lhs.eval(&w.at),
                rhs: rhs.eval(&w.at),
                witness: w.at,
                span: w.span,
                window: None,
                clause: clause.to_string(),
            });
        }
        self
    }

    /// Requires `f(t) = 0` for `0 ≤ t < until`.
    pub fn require_zero_before(&mut self, clause: &str, f: &StepFn<T>, until: &T) -> &mut Self {
        let early = StepFn::pulse(T::zero(), Some(until.clone()));
        self.require_leq(clause, &f.and(&early), &StepFn::zero())
    }

    pub fn finish(&mut self) -> Self {
        self.violations.sort_by(|a, b| a.witness.cmp(&b.witness));
        std::mem::replace(self, Report::new(String::new()))
    }
}

impl<T: Scalar> fmt::Display for Violation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: violated at t = {} (lhs {}, rhs {}; fails on {})",
            self.clause, self.witness, self.lhs as u8, self.rhs as u8, self.span
        )?;
        if let Some(w) = &self.window {
            write!(f, "; no response in {w}")?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Display for Report<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.condition, self.verdict())?;
        if let Some(t) = self.first_witness() {
            write!(f, " at t = {t}")?;
        }
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}
