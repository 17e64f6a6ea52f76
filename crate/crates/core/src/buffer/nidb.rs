//! Conformance of an `(i, o)` pair to the non-deterministic buffer.

use super::params::DelayParams;
use super::{held_high, held_low, OutputTerms};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::stepfn::Signal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NidbForm {
    /// (a) bounds on each semi-derivative of `o` separately.
    SemiDerivative,
    /// (b) bounds on the derivative `Do`.
    Derivative,
}

impl NidbForm {
    pub const ALL: [NidbForm; 2] = [NidbForm::SemiDerivative, NidbForm::Derivative];

    pub fn letter(self) -> char {
        match self {
            NidbForm::SemiDerivative => 'a',
            NidbForm::Derivative => 'b',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.letter() == c)
    }

    pub fn id(self) -> String {
        format!("nidb-{}", self.letter())
    }
}

/// Checks one form together with the initial condition `o = 0` on
/// `[0, rise_min)`.
///
/// Form (a), for all `t ≥ 0`:
///
/// ```text
/// o'(t-0)·⋂_{[t-dr_max,t)} i  ≤ o'(t-0)·o(t) ≤ o'(t-0)·⋂_{[t-dr_min,t)} i
/// o(t-0)·⋂_{[t-df_max,t)} i'  ≤ o(t-0)·o'(t) ≤ o(t-0)·⋂_{[t-df_min,t)} i'
/// ```
///
/// The left inequalities force a switch once the input has held long
/// enough; the right ones forbid switching any earlier.
pub fn verify<T: Scalar>(i: &Signal<T>, o: &Signal<T>, p: &DelayParams<T>, form: NidbForm) -> Report<T> {
    let terms = OutputTerms::of(o);
    let rise_forced = terms.was_low_and(&held_high(i, p.rise_max()));
    let rise_allowed = terms.was_low_and(&held_high(i, p.rise_min()));
    let fall_forced = terms.was_high_and(&held_low(i, p.fall_max()));
    let fall_allowed = terms.was_high_and(&held_low(i, p.fall_min()));

    let mut report = Report::new(form.id());
    report.require_zero_before("init", o, p.rise_min());
    match form {
        NidbForm::SemiDerivative => {
            let (rise, fall) = (terms.rise(), terms.fall());
            report.require_leq("rise-lower", &rise_forced, &rise);
            report.require_leq("rise-upper", &rise, &rise_allowed);
            report.require_leq("fall-lower", &fall_forced, &fall);
            report.require_leq("fall-upper", &fall, &fall_allowed);
        }
        NidbForm::Derivative => {
            let d = terms.derivative();
            report.require_leq("lower", &rise_forced.or(&fall_forced), &d);
            report.require_leq("upper", &d, &rise_allowed.or(&fall_allowed));
        }
    }
    report.finish()
}

pub fn verify_all<T: Scalar>(i: &Signal<T>, o: &Signal<T>, p: &DelayParams<T>) -> Vec<Report<T>> {
    NidbForm::ALL.iter().map(|&f| verify(i, o, p, f)).collect()
}
