//! Step-function and window operators against brute-force evaluation.

mod common;

use common::*;
use inertial::window::{held_via_derivative, risen_and_held, window, window_exists_all, Mode, WindowKind};
use inertial::{IntervalSet, Signal, Signal64, StepFn, StepFn64, Time, Time64};
use proptest::prelude::*;

const WINDOW_KINDS: [WindowKind; 3] = [WindowKind::ClosedOpen, WindowKind::OpenOpen, WindowKind::OpenClosed];

fn arb() -> impl Strategy<Value = Signal> {
    arb_signal(40, 7, 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn equal_functions_have_equal_representations(ticks in prop::collection::vec((0u32..30, any::<bool>()), 0..10)) {
        // Redundant change points collapse to the switch points.
        let mut sorted = ticks.clone();
        sorted.sort_by_key(|(k, _)| *k);
        sorted.dedup_by_key(|(k, _)| *k);
        let noisy = Signal::from_changes(sorted.iter().map(|&(k, v)| (q(i64::from(k), 2), v))).unwrap();
        let clean = Signal::from_switches(noisy.switch_points()).unwrap();
        prop_assert_eq!(&noisy, &clean);
        for at in grid(&[&noisy], &t(1), &[]) {
            let mut level = false;
            for &(k, v) in &sorted {
                if q(i64::from(k), 2) <= at {
                    level = v;
                }
            }
            prop_assert_eq!(noisy.eval(&at), level);
        }
    }

    #[test]
    fn boolean_laws(x in arb(), y in arb()) {
        let (x, y) = (x.as_stepfn(), y.as_stepfn());
        prop_assert_eq!(x.not().not(), x.clone());
        prop_assert_eq!(x.and(y).not(), x.not().or(&y.not()));
        prop_assert_eq!(x.xor(y), x.and(&y.not()).or(&x.not().and(y)));
        prop_assert_eq!(x.implies(y), x.not().or(y));
        prop_assert_eq!(x.and(&x.not()), StepFn::zero());
        prop_assert_eq!(StepFn::indicator(&x.one_set()), x.clone());
        prop_assert_eq!(x.one_set().complement(), x.zero_set());
        for at in grid(&[x, y], &t(1), &[]) {
            prop_assert_eq!(x.and(y).eval(&at), x.eval(&at) && y.eval(&at));
            prop_assert_eq!(x.or(y).eval(&at), x.eval(&at) || y.eval(&at));
        }
    }

    #[test]
    fn left_limit_and_derivatives_match_oracle(x in arb()) {
        let ll = x.left_limit();
        prop_assert_eq!(ll.left_limit(), ll.clone());
        let (rise, fall) = x.semi_derivatives();
        prop_assert_eq!(rise.or(&fall), x.derivative());
        prop_assert_eq!(rise.and(&fall), StepFn::zero());
        prop_assert_eq!(x.derivative().one_set(), IntervalSet::from_intervals(
            x.switch_points().into_iter().map(inertial::Interval::point)));
        for at in grid(&[&x], &t(1), &[]) {
            prop_assert_eq!(ll.eval(&at), left_limit_at(&x, &at), "left limit at {}", at);
            prop_assert_eq!(x.derivative().eval(&at), derivative_at(&x, &at), "derivative at {}", at);
            prop_assert_eq!(rise.eval(&at), !left_limit_at(&x, &at) && x.eval(&at));
        }
    }

    #[test]
    fn windows_match_oracle(x in arb(), d in arb_width(12, 4)) {
        for (kind, bounds) in WINDOW_KINDS.into_iter().zip(KINDS) {
            for (mode, all) in [(Mode::All, true), (Mode::Any, false)] {
                let w = window(mode, &x, &d, kind).unwrap();
                for at in grid(&[&x, &w], &d, &[d.clone(), t(0)]) {
                    prop_assert_eq!(
                        w.eval(&at), window_at(all, &x, &d, bounds, &at),
                        "{:?} {:?} width {} at {}", mode, kind, d, at
                    );
                }
            }
        }
    }

    #[test]
    fn windows_are_monotone_and_dual(x in arb(), a in arb_width(8, 4), b in arb_width(8, 4)) {
        let (short, long) = if a <= b { (a, b) } else { (b, a) };
        for kind in WINDOW_KINDS {
            let all = |d: &Time, f: &StepFn| window(Mode::All, f, d, kind).unwrap();
            let any = |d: &Time, f: &StepFn| window(Mode::Any, f, d, kind).unwrap();
            prop_assert_eq!(all(&long, &x).implies(&all(&short, &x)), StepFn::one());
            prop_assert_eq!(any(&short, &x).implies(&any(&long, &x)), StepFn::one());
            prop_assert_eq!(all(&short, &x), any(&short, &x.not()).not());
            prop_assert_eq!(all(&short, &x).implies(&any(&short, &x)), StepFn::one());
        }
    }

    #[test]
    fn exists_all_matches_definition(x in arb(), a in arb_width(8, 4), b in arb_width(8, 4)) {
        let (short, long) = if a <= b { (a, b) } else { (b, a) };
        let f = window_exists_all(&x, &long, &short, WindowKind::ClosedOpen).unwrap();
        for at in grid(&[&x, &f], &long, &[short.clone(), long.clone()]) {
            // Candidate starts: both ends of the range, breakpoints inside, midpoints.
            let (lo, hi) = (at.clone() - long.clone(), at.clone() - short.clone());
            let mut starts = vec![lo.clone(), hi.clone(), (lo.clone() + hi.clone()) / t(2)];
            starts.extend(x.breakpoint_times().filter(|s| **s > lo && **s < hi).cloned());
            let expected = starts.iter().any(|s| over(true, &x, s, true, &at, false));
            prop_assert_eq!(f.eval(&at), expected, "at {}", at);
        }
    }

    #[test]
    fn risen_and_held_matches_definition(x in arb(), a in arb_width(8, 4), b in arb_width(8, 4)) {
        let (short, long) = if a <= b { (a, b) } else { (b, a) };
        let f = risen_and_held(&x, &long, &short).unwrap();
        for at in grid(&[&x, &f], &long, &[short.clone(), long.clone()]) {
            prop_assert_eq!(f.eval(&at), risen_and_held_at(&x, &long, &short, &at), "at {}", at);
        }
    }

    #[test]
    fn hold_identity(x in arb(), d in arb_width(12, 4)) {
        let (high, low) = held_via_derivative(&x, &d).unwrap();
        prop_assert_eq!(high, window(Mode::All, &x, &d, WindowKind::ClosedOpen).unwrap());
        prop_assert_eq!(low, window(Mode::All, &x.not(), &d, WindowKind::ClosedOpen).unwrap());
    }
}

fn to64(x: &Signal) -> Signal64 {
    let changes = x.breakpoints().iter().map(|b| {
        let (n, d) = (b.at.numer().try_into().unwrap(), b.at.denom().try_into().unwrap());
        (Time64::new(n, d), b.after)
    });
    Signal64::from_changes(changes).unwrap()
}

fn from64(f: &StepFn64) -> StepFn {
    let pieces =
        f.breakpoints().iter().map(|b| (Time::new((*b.at.numer()).into(), (*b.at.denom()).into()), b.value, b.after));
    StepFn::canonical(f.before(), pieces).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn machine_rationals_agree_with_big_ones(x in arb(), d in arb_width(12, 4)) {
        let x64 = to64(&x);
        let d64 = Time64::new((*d.numer()).clone().try_into().unwrap(), (*d.denom()).clone().try_into().unwrap());
        prop_assert_eq!(from64(&x64.left_limit()), x.left_limit());
        prop_assert_eq!(from64(&x64.derivative()), x.derivative());
        for kind in WINDOW_KINDS {
            prop_assert_eq!(
                from64(&window(Mode::All, &x64, &d64, kind).unwrap()),
                window(Mode::All, &x, &d, kind).unwrap()
            );
        }
    }
}
