//! The literature conditions on an `(i, o)` pair.

use crate::buffer::DelayParams;
use crate::interval::Interval;
use crate::report::Report;
use crate::scalar::Scalar;
use crate::stepfn::{Signal, StepFn};
use crate::window::{any_over, risen_and_held};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LitCondition {
    /// (a) `o = 0` before `rise_min`.
    Init,
    /// (b) every output switch is caused by an input switch that happened
    /// between the min and max delay earlier and has held since.
    Causal,
    /// (c) every input switch is either cancelled within the max delay or
    /// answered by an output switch between the min and max delay later.
    Response,
}

impl LitCondition {
    pub const ALL: [LitCondition; 3] = [LitCondition::Init, LitCondition::Causal, LitCondition::Response];

    pub fn letter(self) -> char {
        match self {
            LitCondition::Init => 'a',
            LitCondition::Causal => 'b',
            LitCondition::Response => 'c',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.letter() == c)
    }

    pub fn id(self) -> String {
        format!("lit-{}", self.letter())
    }
}

/// Checks one literature condition.
///
/// (b), for all `t ≥ 0`, with `t'` ranging over `[t - d_max, t - d_min]`:
///
/// ```text
/// o'(t-0)·o(t) ≤ ⋃_{t'} i'(t'-0)·⋂_{[t',t)} i
/// o(t-0)·o'(t) ≤ ⋃_{t'} i(t'-0)·⋂_{[t',t)} i'
/// ```
///
/// (c), for all `t ≥ 0`:
///
/// ```text
/// i'(t-0)·i(t) ≤ ⋃_{(t, t+dr_max)} i(s-0)·i'(s) ∪ ⋃_{[t+dr_min, t+dr_max]} o'(s-0)·o(s)
/// i(t-0)·i'(t) ≤ ⋃_{(t, t+df_max)} i'(s-0)·i(s) ∪ ⋃_{[t+df_min, t+df_max]} o(s-0)·o'(s)
/// ```
///
/// A (c) violation at `t` records the searched window `(t, t + d_max]`.
pub fn lit_verify<T: Scalar>(i: &Signal<T>, o: &Signal<T>, p: &DelayParams<T>, cond: LitCondition) -> Report<T> {
    let mut report = Report::new(cond.id());
    match cond {
        LitCondition::Init => {
            report.require_zero_before("init", o, p.rise_min());
        }
        LitCondition::Causal => {
            let caused_rise = risen_and_held(i, p.rise_max(), p.rise_min()).expect("validated delays");
            let caused_fall = risen_and_held(&i.not(), p.fall_max(), p.fall_min()).expect("validated delays");
            report.require_leq("rise", &o.rising(), &caused_rise);
            report.require_leq("fall", &o.falling(), &caused_fall);
        }
        LitCondition::Response => {
            let (i_rise, i_fall) = (i.rising(), i.falling());
            let (o_rise, o_fall) = (o.rising(), o.falling());
            let answered = |cancel: &StepFn<T>, reply: &StepFn<T>, min: &T, max: &T| {
                let cancelled = any_over(cancel, &Interval::open(T::zero(), max.clone()).expect("positive delay"));
                let replied = any_over(reply, &Interval::closed(min.clone(), max.clone()).expect("min <= max"));
                cancelled.or(&replied)
            };
            let lookahead = |max: T| move |t: &T| Interval::open_closed(t.clone(), t.clone() + max.clone());
            report.require_leq_looking_ahead(
                "rise",
                &i_rise,
                &answered(&i_fall, &o_rise, p.rise_min(), p.rise_max()),
                lookahead(p.rise_max().clone()),
            );
            report.require_leq_looking_ahead(
                "fall",
                &i_fall,
                &answered(&i_rise, &o_fall, p.fall_min(), p.fall_max()),
                lookahead(p.fall_max().clone()),
            );
        }
    }
    report.finish()
}

pub fn lit_verify_all<T: Scalar>(i: &Signal<T>, o: &Signal<T>, p: &DelayParams<T>) -> Vec<Report<T>> {
    LitCondition::ALL.iter().map(|&c| lit_verify(i, o, p, c)).collect()
}
