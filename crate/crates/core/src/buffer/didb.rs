//! Deterministic inertial delay buffer.

use super::params::DetParams;
use super::{first_after, held_high, held_low, OutputTerms};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::stepfn::{Signal, StepFn};

/// Equivalent characterizations of the deterministic buffer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DidbForm {
    /// (a) each semi-derivative of `o` equals its enabling term.
    SemiDerivative,
    /// (b) `Do` equals the sum of both enabling terms.
    Derivative,
    /// (c) the three-case recursion as inequalities.
    Recursion,
    /// (d) exactly one of rise, fall, hold-low, hold-high describes each instant.
    Exclusive,
}

impl DidbForm {
    pub const ALL: [DidbForm; 4] =
        [DidbForm::SemiDerivative, DidbForm::Derivative, DidbForm::Recursion, DidbForm::Exclusive];

    pub fn letter(self) -> char {
        match self {
            DidbForm::SemiDerivative => 'a',
            DidbForm::Derivative => 'b',
            DidbForm::Recursion => 'c',
            DidbForm::Exclusive => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.letter() == c)
    }

    pub fn id(self) -> String {
        format!("didb-{}", self.letter())
    }
}

/// The unique output of the deterministic buffer:
///
/// ```text
/// o(t) = 1       if o(t-0) = 0 and i ≡ 1 on [t - d_r, t)
/// o(t) = 0       if o(t-0) = 1 and i ≡ 0 on [t - d_f, t)
/// o(t) = o(t-0)  otherwise
/// ```
///
/// Sweeps the two precomputed enabling sets, toggling at the earliest
/// enabling instant for the current output value.
pub fn simulate<T: Scalar>(i: &Signal<T>, p: &DetParams<T>) -> Signal<T> {
    let rise_ok = held_high(i, p.rise()).one_set();
    let fall_ok = held_low(i, p.fall()).one_set();
    let mut level = false;
    let mut switches: Vec<T> = Vec::new();
    loop {
        let enabling = if level { &fall_ok } else { &rise_ok };
        match first_after(enabling, switches.last()) {
            Some((t, _)) => {
                switches.push(t);
                level = !level;
            }
            None => break,
        }
    }
    Signal::from_switches(switches).expect("switch instants are increasing and non-negative")
}

fn enabling_terms<T: Scalar>(i: &StepFn<T>, o: &OutputTerms<T>, p: &DetParams<T>) -> (StepFn<T>, StepFn<T>) {
    let rise_en = o.was_low_and(&held_high(i, p.rise()));
    let fall_en = o.was_high_and(&held_low(i, p.fall()));
    (rise_en, fall_en)
}

/// Checks one characterization, plus the initial condition `o = 0` on `[0, d_r)`.
pub fn verify<T: Scalar>(i: &Signal<T>, o: &Signal<T>, p: &DetParams<T>, form: DidbForm) -> Report<T> {
    let terms = OutputTerms::of(o);
    let mut report = Report::new(form.id());
    report.require_zero_before("init", o, p.rise());
    let (rise_en, fall_en) = enabling_terms(i, &terms, p);
    match form {
        DidbForm::SemiDerivative => {
            report.require_eq("rise", &terms.rise(), &rise_en);
            report.require_eq("fall", &terms.fall(), &fall_en);
        }
        DidbForm::Derivative => {
            report.require_eq("switch", &terms.derivative(), &rise_en.or(&fall_en));
        }
        DidbForm::Recursion => {
            report.require_leq("set", &rise_en, &terms.now);
            report.require_leq("reset", &fall_en, &terms.now.not());
            let neither = rise_en.not().and(&fall_en.not());
            let held = terms.prev.xor(&terms.now).not();
            report.require_leq("hold", &neither, &held);
        }
        DidbForm::Exclusive => {
            let w_r = held_high(i, p.rise());
            let w_f = held_low(i, p.fall());
            let cases = terms
                .rise()
                .and(&w_r)
                .or(&terms.fall().and(&w_f))
                .or(&terms.prev.not().and(&terms.now.not()).and(&w_r.not()))
                .or(&terms.prev.and(&terms.now).and(&w_f.not()));
            report.require_leq("one-case", &StepFn::one(), &cases);
        }
    }
    report.finish()
}

/// All four characterizations; they agree on every input.
pub fn verify_all<T: Scalar>(i: &Signal<T>, o: &Signal<T>, p: &DetParams<T>) -> Vec<Report<T>> {
    DidbForm::ALL.iter().map(|&f| verify(i, o, p, f)).collect()
}
