//! A seeded campaign checking the positive claims relating the checkers.

use std::fmt;

use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::buffer::{didb, nidb, sample, DelayParams, DetParams, DidbForm, NidbForm, Policy};
use crate::error::{Error, Result};
use crate::litcmp::conditions::{lit_verify, LitCondition};
use crate::litcmp::fixtures::{Check, Expectation, Fixture};
use crate::report::{Report, Verdict};
use crate::scalar::Scalar;
use crate::stepfn::{Signal, StepFn};
use crate::waveio::gen::{random_between, random_delays, random_signal_from};
use crate::window::{held_via_derivative, window, Mode, WindowKind};
use crate::Time;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FuzzConfig {
    pub trials: usize,
    pub seed: u64,
    /// Input and independent output switches lie in `[0, horizon]`.
    pub horizon: Time,
    pub max_switches: usize,
    /// All times and delays are multiples of `1 / granularity`.
    pub granularity: u32,
    pub max_delay: Time,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            trials: 1000,
            seed: 1,
            horizon: Time::from_int(12),
            max_switches: 8,
            granularity: 4,
            max_delay: Time::from_int(3),
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be positive".into()));
        }
        if self.granularity == 0 {
            return Err(Error::InvalidConfig("granularity must be positive".into()));
        }
        if !self.horizon.is_positive() {
            return Err(Error::InvalidConfig(format!("horizon must be positive, got {}", self.horizon)));
        }
        if self.max_delay < Time::from_ratio(1, i64::from(self.granularity)) {
            return Err(Error::InvalidConfig(format!("max delay {} is below one grid step", self.max_delay)));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Claim {
    /// nidb-a passes ⇒ lit-b passes.
    Implication,
    /// nidb-a and nidb-b give the same verdict and first witness.
    NidbFormsAgree,
    /// didb-a..d give the same verdict and first witness.
    DidbFormsAgree,
    /// The simulated output passes every deterministic form.
    DidbSound,
    /// The window-ALL of a signal equals its left limit times "no switch
    /// in the open window".
    HoldIdentity,
    /// With equal delays, the output switches exactly where it disagreed
    /// with the input just before and the input did not switch within
    /// the delay.
    SwitchIdentity,
    /// A deterministic buffer with delays inside the bounds is admissible.
    DidbWithinNidb,
    /// Every sampling policy yields an admissible output.
    SamplerAdmissible,
    /// Eager and lazy sampling coincide with simulation at the min and max delays.
    PolicyExtremes,
    /// With min = max, the only admissible output is the simulated one.
    Uniqueness,
}

impl Claim {
    pub const ALL: [Claim; 10] = [
        Claim::Implication,
        Claim::NidbFormsAgree,
        Claim::DidbFormsAgree,
        Claim::DidbSound,
        Claim::HoldIdentity,
        Claim::SwitchIdentity,
        Claim::DidbWithinNidb,
        Claim::SamplerAdmissible,
        Claim::PolicyExtremes,
        Claim::Uniqueness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::Implication => "nidb-a-implies-lit-b",
            Claim::NidbFormsAgree => "nidb-forms-agree",
            Claim::DidbFormsAgree => "didb-forms-agree",
            Claim::DidbSound => "didb-sound",
            Claim::HoldIdentity => "hold-identity",
            Claim::SwitchIdentity => "switch-identity",
            Claim::DidbWithinNidb => "didb-within-nidb",
            Claim::SamplerAdmissible => "sampler-admissible",
            Claim::PolicyExtremes => "policy-extremes",
            Claim::Uniqueness => "uniqueness",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ClaimTally {
    /// The claim held with a true premise.
    pub confirmed: usize,
    /// The premise was false (only for implications).
    pub vacuous: usize,
    pub refuted: usize,
}

/// A trial on which a claim failed, as a replayable fixture.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refutation {
    pub claim: Claim,
    pub trial: usize,
    pub detail: String,
    pub fixture: Fixture,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FuzzReport {
    pub config: FuzzConfig,
    /// One entry per claim, in [`Claim::ALL`] order.
    pub tallies: Vec<(Claim, ClaimTally)>,
    /// Trials where lit-b passed but nidb-a failed.
    pub strict: usize,
    /// The first such trial.
    pub strict_example: Option<Fixture>,
    pub refutations: Vec<Refutation>,
}

impl FuzzReport {
    pub fn verdict(&self) -> Verdict {
        if self.refutations.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.refutations.is_empty()
    }

    pub fn tally(&self, claim: Claim) -> &ClaimTally {
        &self.tallies.iter().find(|(c, _)| *c == claim).expect("every claim is tallied").1
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fuzz {} ({} trials, seed {})", self.verdict(), self.config.trials, self.config.seed)?;
        for (claim, t) in &self.tallies {
            writeln!(
                f,
                "  {:<22} confirmed {:>5}  vacuous {:>5}  refuted {:>3}",
                claim.name(),
                t.confirmed,
                t.vacuous,
                t.refuted
            )?;
        }
        write!(f, "  lit-b PASS with nidb-a FAIL: {} trials", self.strict)?;
        if let Some(x) = &self.strict_example {
            write!(f, " (first: i = {}, o = {})", x.i, x.o)?;
        }
        for r in &self.refutations {
            write!(f, "\n  REFUTED {} on trial {}: {}", r.claim.name(), r.trial, r.detail)?;
        }
        Ok(())
    }
}

enum Finding {
    Confirmed,
    Vacuous,
    Refuted(String, Box<Fixture>),
}

struct TrialResult {
    findings: Vec<(Claim, Finding)>,
    strict: Option<Fixture>,
}

/// Runs `config.trials` independent trials, in parallel. The report
/// depends only on the configuration.
pub fn fuzz_claims(config: &FuzzConfig) -> Result<FuzzReport> {
    config.validate()?;
    let results: Vec<TrialResult> =
        (0..config.trials).into_par_iter().map(|k| run_trial(config, k)).collect::<Result<_>>()?;

    let mut tallies: Vec<(Claim, ClaimTally)> = Claim::ALL.iter().map(|&c| (c, ClaimTally::default())).collect();
    let mut report = FuzzReport {
        config: config.clone(),
        tallies: Vec::new(),
        strict: 0,
        strict_example: None,
        refutations: Vec::new(),
    };
    for (trial, result) in results.into_iter().enumerate() {
        for (claim, finding) in result.findings {
            let tally = &mut tallies.iter_mut().find(|(c, _)| *c == claim).expect("known claim").1;
            match finding {
                Finding::Confirmed => tally.confirmed += 1,
                Finding::Vacuous => tally.vacuous += 1,
                Finding::Refuted(detail, fixture) => {
                    tally.refuted += 1;
                    report.refutations.push(Refutation { claim, trial, detail, fixture: *fixture });
                }
            }
        }
        if let Some(example) = result.strict {
            report.strict += 1;
            report.strict_example.get_or_insert(example);
        }
    }
    report.tallies = tallies;
    Ok(report)
}

/// The generator for trial `k`: its own stream of the seeded generator.
pub fn trial_rng(seed: u64, k: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k as u64);
    rng
}

fn fixture(name: String, i: &Signal, o: &Signal, p: &DelayParams, expected: Vec<(Check, Expectation)>) -> Fixture {
    Fixture { name, i: i.clone(), o: o.clone(), p: p.clone(), expected }
}

fn agree(reports: &[Report]) -> bool {
    reports.windows(2).all(|w| w[0].verdict() == w[1].verdict() && w[0].first_witness() == w[1].first_witness())
}

fn summary(reports: &[Report]) -> String {
    reports
        .iter()
        .map(|r| match r.first_witness() {
            Some(t) => format!("{} {} at {t}", r.condition, r.verdict()),
            None => format!("{} {}", r.condition, r.verdict()),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn all_pass(reports: &[Report]) -> bool {
    reports.iter().all(Report::passed)
}

fn pass_all<C: Copy>(checks: &[C], wrap: impl Fn(C) -> Check) -> Vec<(Check, Expectation)> {
    checks.iter().map(|&c| (wrap(c), Expectation::pass())).collect()
}

fn run_trial(cfg: &FuzzConfig, k: usize) -> Result<TrialResult> {
    let g = cfg.granularity;
    let mut rng = trial_rng(cfg.seed, k);
    let i = random_signal_from(&mut rng, &cfg.horizon, cfg.max_switches, g)?;
    let p = random_delays(&mut rng, &cfg.max_delay, g)?;
    let d = DetParams::new(
        random_between(&mut rng, p.rise_min(), p.rise_max(), g)?,
        random_between(&mut rng, p.fall_min(), p.fall_max(), g)?,
    )?;
    let o = if k.is_multiple_of(2) {
        sample(&i, &p, Policy::Random { seed: rng.gen(), granularity: g })?
    } else {
        random_signal_from(&mut rng, &cfg.horizon, cfg.max_switches, g)?
    };
    let name = |claim: Claim| format!("trial {k}: {}", claim.name());
    let q = d.to_bounds();
    let sim = didb::simulate(&i, &d);
    let mut findings = Vec::new();
    let mut verdict = |claim: Claim, ok: bool, detail: &dyn Fn() -> String, fx: &dyn Fn() -> Fixture| {
        findings.push((claim, if ok { Finding::Confirmed } else { Finding::Refuted(detail(), Box::new(fx())) }));
    };

    let nidb_reports = nidb::verify_all(&i, &o, &p);
    let lit_b = lit_verify(&i, &o, &p, LitCondition::Causal);
    let nidb_a = nidb_reports[0].passed();
    let implication = match (nidb_a, lit_b.passed()) {
        (false, _) => Finding::Vacuous,
        (true, true) => Finding::Confirmed,
        (true, false) => Finding::Refuted(
            format!("nidb-a PASS but {lit_b}"),
            Box::new(fixture(
                name(Claim::Implication),
                &i,
                &o,
                &p,
                vec![(Check::Lit(LitCondition::Causal), Expectation::pass())],
            )),
        ),
    };
    let strict = (!nidb_a && lit_b.passed()).then(|| {
        fixture(
            format!("trial {k}: strict"),
            &i,
            &o,
            &p,
            vec![
                (Check::Lit(LitCondition::Causal), Expectation::pass()),
                (
                    Check::Nidb(NidbForm::SemiDerivative),
                    Expectation {
                        verdict: Verdict::Fail,
                        witness: nidb_reports[0].first_witness().cloned(),
                        window: None,
                    },
                ),
            ],
        )
    });
    verdict(Claim::NidbFormsAgree, agree(&nidb_reports), &|| summary(&nidb_reports), &|| {
        let first = &nidb_reports[0];
        let exp = Expectation { verdict: first.verdict(), witness: first.first_witness().cloned(), window: None };
        fixture(name(Claim::NidbFormsAgree), &i, &o, &p, vec![(Check::Nidb(NidbForm::Derivative), exp)])
    });

    let didb_reports = didb::verify_all(&i, &o, &d);
    verdict(Claim::DidbFormsAgree, agree(&didb_reports), &|| summary(&didb_reports), &|| {
        let first = &didb_reports[0];
        let exp = Expectation { verdict: first.verdict(), witness: first.first_witness().cloned(), window: None };
        let expected = DidbForm::ALL[1..].iter().map(|&f| (Check::Didb(f), exp.clone())).collect();
        fixture(name(Claim::DidbFormsAgree), &i, &o, &q, expected)
    });

    let sim_reports = didb::verify_all(&i, &sim, &d);
    verdict(Claim::DidbSound, all_pass(&sim_reports), &|| summary(&sim_reports), &|| {
        fixture(name(Claim::DidbSound), &i, &sim, &q, pass_all(&DidbForm::ALL, Check::Didb))
    });

    let hold_ok = [d.rise(), d.fall()].into_iter().all(|w| {
        let (high, low) = held_via_derivative(&i, w).expect("positive delay");
        let all = |f: &StepFn| window(Mode::All, f, w, WindowKind::ClosedOpen).expect("positive delay");
        high == all(&i) && low == all(&i.not())
    });
    verdict(Claim::HoldIdentity, hold_ok, &|| format!("hold identity fails for i = {i}"), &|| {
        fixture(name(Claim::HoldIdentity), &i, &o, &p, Vec::new())
    });

    let same = DetParams::new(d.rise().clone(), d.rise().clone())?;
    let sim_same = didb::simulate(&i, &same);
    let quiet = window(Mode::Any, &i.derivative(), same.rise(), WindowKind::OpenOpen)?.not();
    let predicted = sim_same.left_limit().xor(&i.left_limit()).and(&quiet);
    verdict(
        Claim::SwitchIdentity,
        sim_same.derivative() == predicted,
        &|| format!("switches of {sim_same} differ from {predicted}"),
        &|| fixture(name(Claim::SwitchIdentity), &i, &sim_same, &same.to_bounds(), Vec::new()),
    );

    let within = nidb::verify_all(&i, &sim, &p);
    verdict(Claim::DidbWithinNidb, all_pass(&within), &|| summary(&within), &|| {
        fixture(name(Claim::DidbWithinNidb), &i, &sim, &p, pass_all(&NidbForm::ALL, Check::Nidb))
    });

    let policies = [Policy::Eager, Policy::Lazy, Policy::Random { seed: rng.gen(), granularity: g }];
    let mut samples = Vec::with_capacity(policies.len());
    for policy in policies {
        samples.push((policy, sample(&i, &p, policy)?));
    }
    let inadmissible = samples.iter().find(|(_, s)| !all_pass(&nidb::verify_all(&i, s, &p)));
    verdict(
        Claim::SamplerAdmissible,
        inadmissible.is_none(),
        &|| {
            let (policy, s) = inadmissible.expect("a failing sample");
            format!("{policy:?} gave {s}: {}", summary(&nidb::verify_all(&i, s, &p)))
        },
        &|| {
            let (_, s) = inadmissible.expect("a failing sample");
            fixture(name(Claim::SamplerAdmissible), &i, s, &p, pass_all(&NidbForm::ALL, Check::Nidb))
        },
    );

    let at_min = didb::simulate(&i, &DetParams::new(p.rise_min().clone(), p.fall_min().clone())?);
    let at_max = didb::simulate(&i, &DetParams::new(p.rise_max().clone(), p.fall_max().clone())?);
    verdict(
        Claim::PolicyExtremes,
        samples[0].1 == at_min && samples[1].1 == at_max,
        &|| format!("eager {} vs {at_min}, lazy {} vs {at_max}", samples[0].1, samples[1].1),
        &|| fixture(name(Claim::PolicyExtremes), &i, &samples[0].1, &p, Vec::new()),
    );

    let o_admissible = all_pass(&nidb::verify_all(&i, &o, &q));
    let sim_admissible = all_pass(&nidb::verify_all(&i, &sim, &q));
    verdict(
        Claim::Uniqueness,
        o_admissible == (o == sim) && sim_admissible,
        &|| format!("o = {o} admissible: {o_admissible}, simulated {sim} admissible: {sim_admissible}"),
        &|| fixture(name(Claim::Uniqueness), &i, &o, &q, Vec::new()),
    );

    findings.insert(0, (Claim::Implication, implication));
    Ok(TrialResult { findings, strict })
}
