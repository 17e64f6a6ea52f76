//! JSON documents for reports and fuzz campaigns.
//!
//! Times are strings `"p/q"` so no consumer ever rounds them. Intervals are
//! strings in the usual notation, e.g. `"[0/1, 1/2)"`, `"{3/1}"`,
//! `"(2/1, +inf)"`.

use std::ops::Bound;

use serde::{Deserialize, Serialize};

use crate::buffer::DelayParams;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::litcmp::{Check, Claim, ClaimTally, Expectation, Fixture, FuzzConfig, FuzzReport, Refutation};
use crate::report::{Report, Verdict, Violation};
use crate::scalar::{fraction_string, parse_time, Scalar};
use crate::stepfn::Signal;
use crate::Time;

fn doc_err(message: impl Into<String>) -> Error {
    Error::Document(message.into())
}

fn time_of<T: Scalar>(s: &str) -> Result<T> {
    parse_time(s).ok_or_else(|| doc_err(format!("bad time `{s}`")))
}

fn verdict_name(v: Verdict) -> String {
    match v {
        Verdict::Pass => "pass".into(),
        Verdict::Fail => "fail".into(),
    }
}

fn verdict_of(s: &str) -> Result<Verdict> {
    match s {
        "pass" => Ok(Verdict::Pass),
        "fail" => Ok(Verdict::Fail),
        other => Err(doc_err(format!("verdict must be pass or fail, got `{other}`"))),
    }
}

fn bit_of(b: u8) -> Result<bool> {
    match b {
        0 => Ok(false),
        1 => Ok(true),
        other => Err(doc_err(format!("bit must be 0 or 1, got {other}"))),
    }
}

pub fn interval_string<T: Scalar>(iv: &Interval<T>) -> String {
    if iv.is_point() {
        if let Bound::Included(a) = iv.lower() {
            return format!("{{{}}}", fraction_string(a));
        }
    }
    let lower = match iv.lower() {
        Bound::Included(a) => format!("[{}", fraction_string(a)),
        Bound::Excluded(a) => format!("({}", fraction_string(a)),
        Bound::Unbounded => "(-inf".into(),
    };
    let upper = match iv.upper() {
        Bound::Included(b) => format!("{}]", fraction_string(b)),
        Bound::Excluded(b) => format!("{})", fraction_string(b)),
        Bound::Unbounded => "+inf)".into(),
    };
    format!("{lower}, {upper}")
}

pub fn parse_interval<T: Scalar>(s: &str) -> Result<Interval<T>> {
    let bad = || doc_err(format!("bad interval `{s}`"));
    if let Some(point) = s.strip_prefix('{').and_then(|r| r.strip_suffix('}')) {
        return Ok(Interval::point(time_of(point)?));
    }
    let (lo, hi) = s.split_once(',').ok_or_else(bad)?;
    let (lo, hi) = (lo.trim(), hi.trim());
    let lower = match (lo.strip_prefix('['), lo.strip_prefix('(')) {
        (_, Some("-inf")) => Bound::Unbounded,
        (Some(a), _) => Bound::Included(time_of(a)?),
        (_, Some(a)) => Bound::Excluded(time_of(a)?),
        _ => return Err(bad()),
    };
    let upper = match (hi.strip_suffix(']'), hi.strip_suffix(')')) {
        (_, Some("+inf")) => Bound::Unbounded,
        (Some(b), _) => Bound::Included(time_of(b)?),
        (_, Some(b)) => Bound::Excluded(time_of(b)?),
        _ => return Err(bad()),
    };
    Interval::new(lower, upper).ok_or_else(bad)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub witness: String,
    pub span: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<String>,
    pub lhs: u8,
    pub rhs: u8,
    pub clause: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    pub verdict: String,
    pub condition: String,
    pub violations: Vec<ViolationDoc>,
}

impl ReportDoc {
    pub fn from_report<T: Scalar>(r: &Report<T>) -> Self {
        ReportDoc {
            verdict: verdict_name(r.verdict()),
            condition: r.condition.clone(),
            violations: r
                .violations
                .iter()
                .map(|v| ViolationDoc {
                    witness: fraction_string(&v.witness),
                    span: interval_string(&v.span),
                    window: v.window.as_ref().map(interval_string),
                    lhs: v.lhs as u8,
                    rhs: v.rhs as u8,
                    clause: v.clause.clone(),
                })
                .collect(),
        }
    }

    pub fn to_report<T: Scalar>(&self) -> Result<Report<T>> {
        let violations = self
            .violations
            .iter()
            .map(|v| {
                Ok(Violation {
                    witness: time_of(&v.witness)?,
                    span: parse_interval(&v.span)?,
                    window: v.window.as_deref().map(parse_interval).transpose()?,
                    lhs: bit_of(v.lhs)?,
                    rhs: bit_of(v.rhs)?,
                    clause: v.clause.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let report = Report { condition: self.condition.clone(), violations };
        if verdict_of(&self.verdict)? != report.verdict() {
            return Err(doc_err(format!("verdict `{}` contradicts the violation list", self.verdict)));
        }
        Ok(report)
    }
}

pub fn write_report<T: Scalar>(r: &Report<T>) -> String {
    serde_json::to_string_pretty(&ReportDoc::from_report(r)).expect("report documents serialize")
}

pub fn parse_report<T: Scalar>(text: &str) -> Result<Report<T>> {
    let doc: ReportDoc = serde_json::from_str(text).map_err(|e| doc_err(e.to_string()))?;
    doc.to_report()
}

/// A header line, then one line per violation.
pub fn report_summary<T: Scalar>(r: &Report<T>) -> String {
    format!("{r}\n")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectationDoc {
    pub check: String,
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsDoc {
    pub rise_min: String,
    pub rise_max: String,
    pub fall_min: String,
    pub fall_max: String,
}

/// A signal as its change points `[time, bit]`.
pub type SignalDoc = Vec<(String, u8)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureDoc {
    pub name: String,
    pub i: SignalDoc,
    pub o: SignalDoc,
    pub params: ParamsDoc,
    pub expected: Vec<ExpectationDoc>,
}

fn signal_doc(x: &Signal) -> SignalDoc {
    x.breakpoints().iter().map(|b| (fraction_string(&b.at), b.after as u8)).collect()
}

fn signal_of(doc: &SignalDoc) -> Result<Signal> {
    let changes = doc.iter().map(|(t, b)| Ok((time_of(t)?, bit_of(*b)?))).collect::<Result<Vec<_>>>()?;
    Signal::from_changes(changes).map_err(|e| doc_err(e.to_string()))
}

impl FixtureDoc {
    pub fn from_fixture(f: &Fixture) -> Self {
        FixtureDoc {
            name: f.name.clone(),
            i: signal_doc(&f.i),
            o: signal_doc(&f.o),
            params: ParamsDoc {
                rise_min: fraction_string(f.p.rise_min()),
                rise_max: fraction_string(f.p.rise_max()),
                fall_min: fraction_string(f.p.fall_min()),
                fall_max: fraction_string(f.p.fall_max()),
            },
            expected: f
                .expected
                .iter()
                .map(|(c, e)| ExpectationDoc {
                    check: c.id(),
                    verdict: verdict_name(e.verdict),
                    witness: e.witness.as_ref().map(fraction_string),
                    window: e.window.as_ref().map(interval_string),
                })
                .collect(),
        }
    }

    pub fn to_fixture(&self) -> Result<Fixture> {
        let p = &self.params;
        let expected = self
            .expected
            .iter()
            .map(|e| {
                let check: Check = e.check.parse().map_err(|_| doc_err(format!("unknown check `{}`", e.check)))?;
                let exp = Expectation {
                    verdict: verdict_of(&e.verdict)?,
                    witness: e.witness.as_deref().map(time_of).transpose()?,
                    window: e.window.as_deref().map(parse_interval).transpose()?,
                };
                Ok((check, exp))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Fixture {
            name: self.name.clone(),
            i: signal_of(&self.i)?,
            o: signal_of(&self.o)?,
            p: DelayParams::new(
                time_of(&p.rise_min)?,
                time_of(&p.rise_max)?,
                time_of(&p.fall_min)?,
                time_of(&p.fall_max)?,
            )?,
            expected,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzConfigDoc {
    pub trials: usize,
    pub seed: u64,
    pub horizon: String,
    pub max_switches: usize,
    pub granularity: u32,
    pub max_delay: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimDoc {
    pub claim: String,
    pub confirmed: usize,
    pub vacuous: usize,
    pub refuted: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutationDoc {
    pub claim: String,
    pub trial: usize,
    pub detail: String,
    pub fixture: FixtureDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FuzzReportDoc {
    pub verdict: String,
    pub config: FuzzConfigDoc,
    pub claims: Vec<ClaimDoc>,
    pub strict: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strict_example: Option<FixtureDoc>,
    pub refutations: Vec<RefutationDoc>,
}

fn claim_of(name: &str) -> Result<Claim> {
    Claim::from_name(name).ok_or_else(|| doc_err(format!("unknown claim `{name}`")))
}

impl FuzzReportDoc {
    pub fn from_report(r: &FuzzReport) -> Self {
        let c = &r.config;
        FuzzReportDoc {
            verdict: verdict_name(r.verdict()),
            config: FuzzConfigDoc {
                trials: c.trials,
                seed: c.seed,
                horizon: fraction_string(&c.horizon),
                max_switches: c.max_switches,
                granularity: c.granularity,
                max_delay: fraction_string(&c.max_delay),
            },
            claims: r
                .tallies
                .iter()
                .map(|(claim, t)| ClaimDoc {
                    claim: claim.name().into(),
                    confirmed: t.confirmed,
                    vacuous: t.vacuous,
                    refuted: t.refuted,
                })
                .collect(),
            strict: r.strict,
            strict_example: r.strict_example.as_ref().map(FixtureDoc::from_fixture),
            refutations: r
                .refutations
                .iter()
                .map(|x| RefutationDoc {
                    claim: x.claim.name().into(),
                    trial: x.trial,
                    detail: x.detail.clone(),
                    fixture: FixtureDoc::from_fixture(&x.fixture),
                })
                .collect(),
        }
    }

    pub fn to_report(&self) -> Result<FuzzReport> {
        let c = &self.config;
        let report = FuzzReport {
            config: FuzzConfig {
                trials: c.trials,
                seed: c.seed,
                horizon: time_of::<Time>(&c.horizon)?,
                max_switches: c.max_switches,
                granularity: c.granularity,
                max_delay: time_of::<Time>(&c.max_delay)?,
            },
            tallies: self
                .claims
                .iter()
                .map(|d| {
                    let tally = ClaimTally { confirmed: d.confirmed, vacuous: d.vacuous, refuted: d.refuted };
                    Ok((claim_of(&d.claim)?, tally))
                })
                .collect::<Result<_>>()?,
            strict: self.strict,
            strict_example: self.strict_example.as_ref().map(FixtureDoc::to_fixture).transpose()?,
            refutations: self
                .refutations
                .iter()
                .map(|d| {
                    Ok(Refutation {
                        claim: claim_of(&d.claim)?,
                        trial: d.trial,
                        detail: d.detail.clone(),
                        fixture: d.fixture.to_fixture()?,
                    })
                })
                .collect::<Result<_>>()?,
        };
        if verdict_of(&self.verdict)? != report.verdict() {
            return Err(doc_err(format!("verdict `{}` contradicts the refutation list", self.verdict)));
        }
        Ok(report)
    }
}

pub fn write_fuzz_report(r: &FuzzReport) -> String {
    serde_json::to_string_pretty(&FuzzReportDoc::from_report(r)).expect("fuzz documents serialize")
}

pub fn parse_fuzz_report(text: &str) -> Result<FuzzReport> {
    let doc: FuzzReportDoc = serde_json::from_str(text).map_err(|e| doc_err(e.to_string()))?;
    doc.to_report()
}

pub fn write_fixture(f: &Fixture) -> String {
    serde_json::to_string_pretty(&FixtureDoc::from_fixture(f)).expect("fixture documents serialize")
}

pub fn parse_fixture(text: &str) -> Result<Fixture> {
    let doc: FixtureDoc = serde_json::from_str(text).map_err(|e| doc_err(e.to_string()))?;
    doc.to_fixture()
}
