//! Acceptance criteria. Prints one PASS/FAIL line per criterion, with the
//! measured runtime against its budget, and exits nonzero if any fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::*;
use inertial::buffer::{check_stability, didb, nidb, sample, simulate, DelayParams, DetParams, NidbForm, Policy};
use inertial::litcmp::{counterexample, fuzz_claims, lit_verify, Claim, Fixture, FuzzConfig, LitCondition};
use inertial::waveio::report_io::{parse_report, write_report};
use inertial::waveio::{parse_bsig, write_bsig};
use inertial::window::{held_via_derivative, window, Mode, WindowKind};
use inertial::{Interval, IntervalSet, Report, Signal, StepFn, Time};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(ok: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why())
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_width(rng: &mut impl Rng, max_ticks: i64, g: i64) -> Time {
    q(rng.gen_range(1..=max_ticks), g)
}

fn random_bounds(rng: &mut impl Rng, g: i64) -> DelayParams {
    let a = rng.gen_range(1..=12);
    let b = rng.gen_range(a..=a + 8);
    let c = rng.gen_range(1..=12);
    let d = rng.gen_range(c..=c + 8);
    DelayParams::new(q(a, g), q(b, g), q(c, g), q(d, g)).unwrap()
}

fn random_det(rng: &mut impl Rng, p: &DelayParams, g: i64) -> DetParams {
    let pick = |rng: &mut dyn rand::RngCore, lo: &Time, hi: &Time| {
        let steps = ((hi.clone() - lo.clone()) * t(g)).to_integer();
        let steps: i64 = steps.try_into().unwrap();
        lo.clone() + q(rng.gen_range(0..=steps), g)
    };
    DetParams::new(pick(rng, p.rise_min(), p.rise_max()), pick(rng, p.fall_min(), p.fall_max())).unwrap()
}

/// Half the outputs are admissible samples, half are independent.
fn random_pair(seed: u64, k: usize) -> (Signal, Signal, DelayParams) {
    let mut rng = rng(seed);
    rng.set_stream(k as u64);
    let i = random_signal(&mut rng, 60, 10, 4);
    let p = random_bounds(&mut rng, 4);
    let o = if k.is_multiple_of(2) {
        sample(&i, &p, Policy::Random { seed: rng.gen(), granularity: 4 }).unwrap()
    } else {
        random_signal(&mut rng, 60, 10, 4)
    };
    (i, o, p)
}

fn first_witnesses(reports: &[Report]) -> Vec<Option<Time>> {
    reports.iter().map(|r| r.first_witness().cloned()).collect()
}

fn c1_left_limit_and_derivative() -> Outcome {
    let x = Signal::from_switches([0, 1, 2, 3].map(t)).unwrap();
    let ll = StepFn::indicator(&IntervalSet::from_intervals([
        Interval::open_closed(t(0), t(1)).unwrap(),
        Interval::open_closed(t(2), t(3)).unwrap(),
    ]));
    let support = StepFn::indicator(&IntervalSet::from_intervals([0, 1, 2, 3].map(|k| Interval::point(t(k)))));
    ensure(x.left_limit() == ll, || format!("left limit is {}", x.left_limit()))?;
    ensure(x.derivative() == support, || format!("derivative is {}", x.derivative()))?;
    Ok(format!("left limit {}, derivative {}", ll, support))
}

fn c2_held_input_silent_output() -> Outcome {
    let sets = [(1, 2, 1, 2), (1, 1, 1, 1), (2, 5, 3, 4), (1, 3, 2, 2)];
    for (a, b, c, d) in sets {
        let p = DelayParams::new(t(a), t(b), t(c), t(d)).unwrap();
        let f = Fixture::held_input_silent_output(p.clone());
        let lit = lit_verify(&f.i, &f.o, &p, LitCondition::Causal);
        let nidb_a = nidb::verify(&f.i, &f.o, &p, NidbForm::SemiDerivative);
        ensure(lit.passed(), || format!("{lit}"))?;
        ensure(nidb_a.first_witness() == Some(p.rise_max()), || format!("{nidb_a}"))?;
    }
    Ok(format!("{} parameter sets: lit-b PASS, nidb-a FAIL at t = rise_max", sets.len()))
}

fn c3_filtered_pulse() -> Outcome {
    let f = counterexample("5.4").unwrap();
    let nidb_a = nidb::verify(&f.i, &f.o, &f.p, NidbForm::SemiDerivative);
    ensure(nidb_a.passed(), || format!("{nidb_a}"))?;
    let lit = lit_verify(&f.i, &f.o, &f.p, LitCondition::Response);
    let v = lit.first_violation().ok_or("lit-c passed")?;
    let window = Interval::open_closed(t(2), t(4)).unwrap();
    ensure(v.window.as_ref() == Some(&window), || format!("{v}"))?;
    ensure(v.witness == t(2), || format!("{v}"))?;
    Ok(format!("nidb-a PASS; lit-c FAIL: fall of i at t = {}, no response in {}", v.witness, window))
}

fn c4_nidb_forms_agree() -> Outcome {
    const N: usize = 1000;
    let results: Vec<(bool, bool)> = (0..N)
        .into_par_iter()
        .map(|k| {
            let (i, o, p) = random_pair(4, k);
            let r = nidb::verify_all(&i, &o, &p);
            let w = first_witnesses(&r);
            (r[0].verdict() == r[1].verdict() && w[0] == w[1], r[0].passed())
        })
        .collect();
    let disagree = results.iter().filter(|(ok, _)| !ok).count();
    let passed = results.iter().filter(|(_, p)| *p).count();
    ensure(disagree == 0, || format!("{disagree} disagreements"))?;
    ensure(passed > 0 && passed < N, || format!("degenerate data: {passed} of {N} pass"))?;
    Ok(format!("{N} triples ({passed} PASS, {} FAIL), 0 disagreements", N - passed))
}

fn c5_didb_forms_and_soundness() -> Outcome {
    const N: usize = 1000;
    let results: Vec<(bool, bool, bool)> = (0..N)
        .into_par_iter()
        .map(|k| {
            let (i, o, p) = random_pair(5, k);
            let mut r = rng(500 + k as u64);
            let d = random_det(&mut r, &p, 4);
            let sim = simulate(&i, &d);
            let sound = didb::verify_all(&i, &sim, &d).iter().all(Report::passed);
            let reports = didb::verify_all(&i, &o, &d);
            let w = first_witnesses(&reports);
            let agree =
                reports.windows(2).all(|x| x[0].verdict() == x[1].verdict()) && w.windows(2).all(|x| x[0] == x[1]);
            (sound, agree, reports[0].passed())
        })
        .collect();
    let unsound = results.iter().filter(|r| !r.0).count();
    let disagree = results.iter().filter(|r| !r.1).count();
    let failing = results.iter().filter(|r| !r.2).count();
    ensure(unsound == 0, || format!("{unsound} simulated outputs rejected"))?;
    ensure(disagree == 0, || format!("{disagree} disagreements"))?;
    ensure(failing > 0, || "no mismatched pair was generated".into())?;
    Ok(format!("{N} simulations pass a-d; {N} pairs ({failing} mismatched) with 0 disagreements"))
}

fn c6_implication() -> Outcome {
    let report = fuzz_claims(&FuzzConfig::default()).map_err(|e| e.to_string())?;
    let tally = report.tally(Claim::Implication);
    ensure(tally.refuted == 0, || format!("{report}"))?;
    ensure(report.strict > 0, || "no trial with lit-b PASS and nidb-a FAIL".into())?;
    ensure(report.passed(), || format!("{report}"))?;
    let example = report.strict_example.as_ref().expect("strict > 0");
    ensure(example.holds().unwrap(), || format!("strict example does not replay: {example:?}"))?;
    Ok(format!(
        "{} trials: {} confirmed, {} vacuous, 0 refuted; {} strict (lit-b PASS, nidb-a FAIL); all {} claims hold",
        report.config.trials,
        tally.confirmed,
        tally.vacuous,
        report.strict,
        Claim::ALL.len()
    ))
}

fn c7_hold_identity() -> Outcome {
    const N: usize = 1000;
    let bad = (0..N)
        .into_par_iter()
        .filter(|&k| {
            let mut r = rng(7);
            r.set_stream(k as u64);
            let x = random_signal(&mut r, 80, 12, 4);
            let d = random_width(&mut r, 16, 4);
            let (high, low) = held_via_derivative(&x, &d).unwrap();
            high != window(Mode::All, &x, &d, WindowKind::ClosedOpen).unwrap()
                || low != window(Mode::All, &x.not(), &d, WindowKind::ClosedOpen).unwrap()
        })
        .count();
    ensure(bad == 0, || format!("{bad} of {N} pairs differ"))?;
    Ok(format!("{N} (signal, width) pairs, both identities exact"))
}

fn c8_oracle() -> Outcome {
    const N: usize = 500;
    let kinds = [WindowKind::ClosedOpen, WindowKind::OpenOpen, WindowKind::OpenClosed];
    let checked: Result<Vec<usize>, String> = (0..N)
        .into_par_iter()
        .map(|k| {
            let mut r = rng(8);
            r.set_stream(k as u64);
            let x = random_signal(&mut r, 60, 8, 4);
            let d = random_width(&mut r, 12, 4);
            let ll = x.left_limit();
            let dx = x.derivative();
            let mut points = 0;
            for at in grid(&[&x], &d, &[]) {
                points += 1;
                ensure(ll.eval(&at) == left_limit_at(&x, &at), || format!("left limit of {x} at {at}"))?;
                ensure(dx.eval(&at) == derivative_at(&x, &at), || format!("derivative of {x} at {at}"))?;
            }
            for (kind, bounds) in kinds.into_iter().zip(KINDS) {
                for (mode, all) in [(Mode::All, true), (Mode::Any, false)] {
                    let w = window(mode, &x, &d, kind).unwrap();
                    for at in grid(&[&x], &d, &[]) {
                        ensure(w.eval(&at) == window_at(all, &x, &d, bounds, &at), || {
                            format!("{mode:?} {kind:?} width {d} of {x} at {at}")
                        })?;
                    }
                }
            }
            Ok(points)
        })
        .collect();
    let points: usize = checked?.iter().sum();
    Ok(format!("{N} cases, {points} grid points, 6 window variants plus left limit and derivative"))
}

fn c9_didb_within_nidb() -> Outcome {
    const N: usize = 500;
    let bad = (0..N)
        .into_par_iter()
        .filter(|&k| {
            let mut r = rng(9);
            r.set_stream(k as u64);
            let i = random_signal(&mut r, 60, 10, 4);
            let p = random_bounds(&mut r, 4);
            let d = random_det(&mut r, &p, 4);
            !nidb::verify_all(&i, &simulate(&i, &d), &p).iter().all(Report::passed)
        })
        .count();
    ensure(bad == 0, || format!("{bad} of {N} simulated outputs rejected"))?;
    Ok(format!("{N} inputs, 0 failures"))
}

fn c10_inertia_and_stability() -> Outcome {
    const N: usize = 200;
    let mut r = rng(10);
    let mut nonzero = 0;
    let mut unstable = 0;
    for _ in 0..N {
        // Pulses of width below d_r separated by arbitrary gaps.
        let rise = r.gen_range(2..=12);
        let mut at = r.gen_range(0..8);
        let mut ticks = Vec::new();
        for _ in 0..r.gen_range(0..6) {
            let width = r.gen_range(1..rise);
            ticks.extend([at, at + width]);
            at += width + r.gen_range(1..10);
        }
        let i = signal(&ticks, 4);
        let d = DetParams::new(q(i64::from(rise), 4), random_width(&mut r, 12, 4)).unwrap();
        let o = simulate(&i, &d);
        nonzero += usize::from(o != Signal::zero());
        unstable += usize::from(!check_stability(&i, &o, &d.to_bounds()).passed());
        let j = random_signal(&mut r, 60, 10, 4);
        unstable += usize::from(!check_stability(&j, &simulate(&j, &d), &d.to_bounds()).passed());
    }
    ensure(nonzero == 0, || format!("{nonzero} short-pulse inputs produced output"))?;
    ensure(unstable == 0, || format!("{unstable} simulated outputs unstable"))?;
    Ok(format!("{N} short-pulse inputs give constant 0; {} simulations stable", 2 * N))
}

fn c11_serialization() -> Outcome {
    const N: usize = 1000;
    let mut r = rng(11);
    for _ in 0..N {
        let g = r.gen_range(1..=16);
        let x = random_signal(&mut r, 400, 12, g);
        let back = parse_bsig::<Time>(&write_bsig(&x)).map_err(|e| e.to_string())?;
        ensure(back == x, || format!("{x} came back as {back}"))?;
        let o = random_signal(&mut r, 400, 12, g);
        let p = random_bounds(&mut r, g);
        for rep in nidb::verify_all(&x, &o, &p) {
            let back = parse_report::<Time>(&write_report(&rep)).map_err(|e| e.to_string())?;
            ensure(back == rep, || format!("report {rep} did not round trip"))?;
        }
    }
    for id in ["5.3", "5.4"] {
        let out = Command::new(env!("CARGO_BIN_EXE_ibuf")).args(["counterexample", id]).output().unwrap();
        ensure(out.status.success(), || {
            format!("counterexample {id} exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stdout))
        })?;
    }
    Ok(format!("{N} signals and {} reports round trip; `counterexample 5.3` and `5.4` exit 0", 2 * N))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("left limit and derivative of two pulses", 1, c1_left_limit_and_derivative),
        ("held input, silent output", 1, c2_held_input_silent_output),
        ("filtered pulse", 1, c3_filtered_pulse),
        ("non-deterministic forms agree", 30, c4_nidb_forms_agree),
        ("deterministic forms agree, simulator sound", 60, c5_didb_forms_and_soundness),
        ("buffer conformance implies causality, strictly", 60, c6_implication),
        ("hold identities", 30, c7_hold_identity),
        ("operators match brute force", 60, c8_oracle),
        ("deterministic runs are admissible", 30, c9_didb_within_nidb),
        ("inertia and stability", 30, c10_inertia_and_stability),
        ("serialization and CLI", 10, c11_serialization),
    ];
    let mut failures = 0;
    for (n, (name, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(budget);
        let (verdict, detail) = match (&outcome, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("too slow; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        failures += usize::from(verdict == "FAIL");
        println!("criterion {:>2} {verdict}  {name} [{:.2}s / {budget}s]: {detail}", n + 1, elapsed.as_secs_f64());
    }
    println!("acceptance: {} of 11 criteria pass", 11 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
