//! The `.bsig` waveform format.
//!
//! One `<time> <bit>` change point per line, times strictly increasing and
//! written as `p/q`, integers or exact decimals. The signal is 0 before the
//! first entry. `#` starts a comment; blank lines are ignored. Two optional
//! directives may precede the entries:
//!
//! ```text
//! #!bsig 1
//! #!name clk
//! 0 1
//! 1/2 0
//! ```

use crate::error::{Error, Result};
use crate::scalar::{parse_time, Scalar};
use crate::stepfn::{Signal, StepFn};
use crate::Time;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BsigDocument<T = Time> {
    pub version: u32,
    pub name: Option<String>,
    pub signal: Signal<T>,
}

impl<T: Scalar> BsigDocument<T> {
    pub fn new(signal: Signal<T>) -> Self {
        BsigDocument { version: FORMAT_VERSION, name: None, signal }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut version = FORMAT_VERSION;
        let mut name = None;
        let mut entries: Vec<(T, bool)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |message: String| Error::Parse { line, message };
            if let Some(directive) = raw.trim().strip_prefix("#!") {
                match directive.split_once(char::is_whitespace) {
                    Some(("bsig", v)) => {
                        version = v.trim().parse().map_err(|_| err(format!("bad version `{}`", v.trim())))?;
                        if version != FORMAT_VERSION {
                            return Err(err(format!("unsupported version {version}")));
                        }
                    }
                    Some(("name", n)) => name = Some(n.trim().to_string()),
                    _ => return Err(err(format!("unknown directive `#!{directive}`"))),
                }
                continue;
            }
            let content = raw.split('#').next().unwrap_or_default().trim();
            if content.is_empty() {
                continue;
            }
            let mut fields = content.split_whitespace();
            let (Some(time), Some(bit), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(err(format!("expected `<time> <bit>`, got `{content}`")));
            };
            let at: T = parse_time(time).ok_or_else(|| err(format!("bad time `{time}`")))?;
            let value = match bit {
                "0" => false,
                "1" => true,
                _ => return Err(err(format!("bit must be 0 or 1, got `{bit}`"))),
            };
            match entries.last() {
                None if at.is_negative() => return Err(err(format!("negative time {at}"))),
                Some((prev, _)) if *prev >= at => {
                    return Err(err(format!("time {at} does not follow {prev}")));
                }
                _ => {}
            }
            entries.push((at, value));
        }
        let f = StepFn::canonical(false, entries.into_iter().map(|(t, v)| (t, v, v)))
            .expect("entries were checked to increase");
        let signal = Signal::new(f).map_err(|e| Error::Parse { line: 0, message: e.to_string() })?;
        Ok(BsigDocument { version, name, signal })
    }

    pub fn write(&self) -> String {
        let mut out = format!("#!bsig {}\n", self.version);
        if let Some(name) = &self.name {
            out.push_str(&format!("#!name {name}\n"));
        }
        for b in self.signal.breakpoints() {
            out.push_str(&format!("{} {}\n", b.at, b.after as u8));
        }
        out
    }
}

pub fn parse_bsig<T: Scalar>(text: &str) -> Result<Signal<T>> {
    BsigDocument::parse(text).map(|d| d.signal)
}

pub fn write_bsig<T: Scalar>(x: &Signal<T>) -> String {
    BsigDocument::new(x.clone()).write()
}
