//! Value change dump export.
//!
//! VCD timestamps are integers, so every breakpoint is multiplied by the
//! least common multiple of all denominators (and shifted when some time is
//! negative). A value held only at an isolated instant is shown for one
//! tick and reverted at the next, which widens it by one tick; this is why
//! `.bsig` and not VCD is the lossless format.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::stepfn::StepFn;

/// Renders the named functions as one VCD module. Names must be unique
/// identifiers (`[A-Za-z_][A-Za-z0-9_]*`).
pub fn export_vcd<T: Scalar>(named: &[(&str, &StepFn<T>)]) -> Result<String> {
    let mut seen = HashSet::new();
    for (name, _) in named {
        let ok = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::InvalidConfig(format!("`{name}` is not an identifier")));
        }
        if !seen.insert(*name) {
            return Err(Error::InvalidConfig(format!("duplicate signal name `{name}`")));
        }
    }

    let fractions: Vec<Vec<(BigInt, BigInt)>> =
        named.iter().map(|(_, f)| f.breakpoint_times().map(Scalar::to_fraction).collect()).collect();
    let scale = fractions.iter().flatten().fold(BigInt::one(), |acc, (_, d)| acc.lcm(d));
    let tick = |(n, d): &(BigInt, BigInt)| n * (&scale / d);
    let offset = fractions.iter().flatten().map(tick).min().filter(|m| m.is_negative()).map_or(BigInt::zero(), |m| -m);

    // Per tick, the value each variable ends up with; later writes win.
    let mut changes: BTreeMap<BigInt, BTreeMap<usize, bool>> = BTreeMap::new();
    for (var, ((_, f), times)) in named.iter().zip(&fractions).enumerate() {
        let ticks: Vec<BigInt> = times.iter().map(|t| tick(t) + &offset).collect();
        for (k, (b, at)) in f.breakpoints().iter().zip(&ticks).enumerate() {
            changes.entry(at.clone()).or_default().insert(var, b.value);
            let next = at + 1;
            if b.value != b.after && ticks.get(k + 1) != Some(&next) {
                changes.entry(next).or_default().insert(var, b.after);
            }
        }
    }

    let id = |var: usize| {
        let mut code = String::new();
        let mut n = var;
        loop {
            code.push(char::from(b'!' + (n % 94) as u8));
            n /= 94;
            if n == 0 {
                break code;
            }
            n -= 1;
        }
    };

    let mut out = String::new();
    out.push_str(&format!("$comment 1 tick = 1/{scale} time units; tick = time * {scale} + {offset} $end\n"));
    out.push_str("$timescale 1 ns $end\n$scope module top $end\n");
    for (var, (name, _)) in named.iter().enumerate() {
        out.push_str(&format!("$var wire 1 {} {name} $end\n", id(var)));
    }
    out.push_str("$upscope $end\n$enddefinitions $end\n#0\n$dumpvars\n");
    let mut current: Vec<bool> = named.iter().map(|(_, f)| f.before()).collect();
    for (var, v) in changes.remove(&BigInt::zero()).unwrap_or_default() {
        current[var] = v;
    }
    for (var, v) in current.iter().enumerate() {
        out.push_str(&format!("{}{}\n", *v as u8, id(var)));
    }
    out.push_str("$end\n");
    for (at, vars) in changes {
        let lines: Vec<String> = vars
            .into_iter()
            .filter(|&(var, v)| std::mem::replace(&mut current[var], v) != v)
            .map(|(var, v)| format!("{}{}", v as u8, id(var)))
            .collect();
        if !lines.is_empty() {
            out.push_str(&format!("#{at}\n{}\n", lines.join("\n")));
        }
    }
    Ok(out)
}
