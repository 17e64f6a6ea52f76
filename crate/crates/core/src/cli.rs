//! The `ibuf` command line.
//!
//! Exit codes: 0 success or PASS, 1 verification FAIL, 2 usage or I/O error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::buffer::{self, didb, nidb, DelayParams, DetParams, DidbForm, NidbForm, Policy};
use crate::error::Error;
use crate::litcmp::{self, counterexample, FuzzConfig, LitCondition};
use crate::report::Report;
use crate::scalar::parse_time;
use crate::stepfn::{Signal, StepFn};
use crate::waveio::{self, BsigDocument};
use crate::window::{self, Mode, WindowKind};
use crate::Time;

#[derive(Parser, Debug)]
#[command(name = "ibuf", version, about = "Exact binary signal calculus and inertial delay buffers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Simulate the deterministic buffer.
    Sim {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_parser = time_arg)]
        dr: Time,
        #[arg(long, value_parser = time_arg)]
        df: Time,
        #[command(flatten)]
        out: OutFile,
    },
    /// Check an (input, output) pair against a buffer definition.
    Verify {
        #[arg(long, value_enum)]
        mode: VerifyMode,
        /// Form letter, or `all`.
        #[arg(long, default_value = "all")]
        form: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
        /// `rise_min,rise_max,fall_min,fall_max`, or `rise,fall`.
        #[arg(long)]
        params: String,
        #[command(flatten)]
        json: JsonFile,
    },
    /// Print where the derivative or a semi-derivative is 1.
    Derive {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "d")]
        kind: DeriveKind,
    },
    /// Compute a sliding-window ALL or ANY of a signal.
    Window {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        mode: WindowMode,
        #[arg(long, value_parser = time_arg)]
        d: Time,
        #[arg(long, value_enum, default_value = "co")]
        kind: Kind,
        #[command(flatten)]
        out: OutFile,
    },
    /// Draw an admissible output of the non-deterministic buffer.
    Sample {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        params: String,
        #[arg(long, value_enum, default_value = "eager")]
        policy: PolicyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = buffer::sample::DEFAULT_GRANULARITY)]
        granularity: u32,
        #[command(flatten)]
        out: OutFile,
    },
    /// Print the automaton states visited by an (input, output) pair.
    Trace {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long = "out")]
        output: PathBuf,
    },
    /// Reproduce a counterexample (`5.3` or `5.4`) and check its verdicts.
    Counterexample {
        id: String,
        #[command(flatten)]
        json: JsonFile,
    },
    /// Run the seeded claims campaign.
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_parser = time_arg, default_value = "12")]
        horizon: Time,
        #[arg(long, default_value_t = 8)]
        max_switches: usize,
        #[arg(long, default_value_t = 4)]
        granularity: u32,
        #[arg(long, value_parser = time_arg, default_value = "3")]
        max_delay: Time,
        #[command(flatten)]
        json: JsonFile,
    },
    /// Export `.bsig` files as one value change dump.
    ExportVcd {
        /// Input files; each becomes a variable named after its `#!name`
        /// directive or file stem.
        #[arg(long = "in", required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        out: OutFile,
    },
}

#[derive(Args, Debug)]
struct OutFile {
    /// Write here instead of standard output.
    #[arg(short = 'o', long = "write")]
    path: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct JsonFile {
    /// Also write the machine-readable document here.
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VerifyMode {
    Nidb,
    Didb,
    Lit,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DeriveKind {
    #[value(name = "d", alias = "D")]
    Both,
    Rise,
    Fall,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WindowMode {
    All,
    Any,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Co,
    Oo,
    Oc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolicyArg {
    Eager,
    Lazy,
    Random,
}

fn time_arg(s: &str) -> Result<Time, String> {
    parse_time(s).ok_or_else(|| format!("`{s}` is not a rational (use p/q or an exact decimal)"))
}

/// A failure that ends the command with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<std::io::Error> for Usage {
    fn from(e: std::io::Error) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<i32, Usage>;

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Usage(message)) => {
            let _ = writeln!(err, "ibuf: {message}");
            2
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Sim { input, dr, df, out: dest } => {
            let i = read_signal(&input)?;
            let o = didb::simulate(&i, &DetParams::new(dr, df)?);
            emit(out, &dest, &waveio::write_bsig(&o))?;
            Ok(0)
        }
        Command::Verify { mode, form, input, output, params, json } => {
            let i = read_signal(&input)?;
            let o = read_signal(&output)?;
            let p = parse_params(&params)?;
            let reports = verify(mode, &form, &i, &o, &p)?;
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            if matches!(mode, VerifyMode::Didb | VerifyMode::Nidb) && reports.len() > 1 {
                let agree = reports.windows(2).all(|w| w[0].verdict() == w[1].verdict());
                writeln!(out, "forms {}", if agree { "agree" } else { "DISAGREE" })?;
            }
            write_json(&json, || {
                let docs: Vec<_> = reports.iter().map(waveio::ReportDoc::from_report).collect();
                match docs.as_slice() {
                    [one] => serde_json::to_string_pretty(one),
                    _ => serde_json::to_string_pretty(&docs),
                }
                .expect("report documents serialize")
            })?;
            Ok(if reports.iter().all(Report::passed) { 0 } else { 1 })
        }
        Command::Derive { input, kind } => {
            let x = read_signal(&input)?;
            let (label, f) = match kind {
                DeriveKind::Both => ("D", x.derivative()),
                DeriveKind::Rise => ("rise", x.rising()),
                DeriveKind::Fall => ("fall", x.falling()),
            };
            writeln!(out, "{label} = 1 on {}", f.one_set())?;
            Ok(0)
        }
        Command::Window { input, mode, d, kind, out: dest } => {
            let x = read_signal(&input)?;
            let mode = match mode {
                WindowMode::All => Mode::All,
                WindowMode::Any => Mode::Any,
            };
            let kind = match kind {
                Kind::Co => WindowKind::ClosedOpen,
                Kind::Oo => WindowKind::OpenOpen,
                Kind::Oc => WindowKind::OpenClosed,
            };
            let w = window::window(mode, &x, &d, kind)?;
            match Signal::new(w.clone()) {
                Ok(s) => emit(out, &dest, &waveio::write_bsig(&s))?,
                Err(e) if dest.path.is_some() => {
                    return Err(Usage(format!("cannot write {w} as .bsig: {e}")));
                }
                Err(_) => writeln!(out, "{w}")?,
            }
            Ok(0)
        }
        Command::Sample { input, params, policy, seed, granularity, out: dest } => {
            let i = read_signal(&input)?;
            let p = parse_params(&params)?;
            let policy = match policy {
                PolicyArg::Eager => Policy::Eager,
                PolicyArg::Lazy => Policy::Lazy,
                PolicyArg::Random => Policy::Random { seed, granularity },
            };
            let o = buffer::sample(&i, &p, policy)?;
            emit(out, &dest, &waveio::write_bsig(&o))?;
            Ok(0)
        }
        Command::Trace { input, output } => {
            let i = read_signal(&input)?;
            let o = read_signal(&output)?;
            writeln!(out, "start {}", buffer::AutomatonState::INITIAL)?;
            for (t, state) in buffer::trace(&i, &o) {
                writeln!(out, "{t} {state}")?;
            }
            Ok(0)
        }
        Command::Counterexample { id, json } => {
            let fixture = counterexample(&id)?;
            writeln!(out, "counterexample {id}: i = {}, o = {}", fixture.i, fixture.o)?;
            let outcomes = fixture.reproduce()?;
            for o in &outcomes {
                writeln!(out, "{o}")?;
            }
            write_json(&json, || waveio::write_fixture(&fixture))?;
            Ok(if outcomes.iter().all(litcmp::Outcome::matches) { 0 } else { 1 })
        }
        Command::Fuzz { trials, seed, horizon, max_switches, granularity, max_delay, json } => {
            let config = FuzzConfig { trials, seed, horizon, max_switches, granularity, max_delay };
            let report = litcmp::fuzz_claims(&config)?;
            writeln!(out, "{report}")?;
            write_json(&json, || waveio::write_fuzz_report(&report))?;
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::ExportVcd { inputs, out: dest } => {
            let mut docs = Vec::with_capacity(inputs.len());
            for path in &inputs {
                let doc = read_doc(path)?;
                let name = doc
                    .name
                    .clone()
                    .unwrap_or_else(|| path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default());
                docs.push((name, doc.signal));
            }
            let named: Vec<(&str, &StepFn)> = docs.iter().map(|(n, s)| (n.as_str(), s.as_stepfn())).collect();
            emit(out, &dest, &waveio::export_vcd(&named)?)?;
            Ok(0)
        }
    }
}

fn verify(mode: VerifyMode, form: &str, i: &Signal, o: &Signal, p: &DelayParams) -> Result<Vec<Report>, Usage> {
    let letter = match form {
        "all" => None,
        f if f.chars().count() == 1 => f.chars().next(),
        f => return Err(Usage(format!("unknown form `{f}`"))),
    };
    let unknown = |c: char| Usage(format!("mode has no form `{c}`"));
    Ok(match mode {
        VerifyMode::Nidb => match letter {
            None => nidb::verify_all(i, o, p),
            Some(c) => vec![nidb::verify(i, o, p, NidbForm::from_letter(c).ok_or_else(|| unknown(c))?)],
        },
        VerifyMode::Lit => match letter {
            None => litcmp::conditions::lit_verify_all(i, o, p),
            Some(c) => vec![litcmp::lit_verify(i, o, p, LitCondition::from_letter(c).ok_or_else(|| unknown(c))?)],
        },
        VerifyMode::Didb => {
            let d = p.deterministic().ok_or_else(|| Usage("didb needs equal min and max delays".into()))?;
            match letter {
                None => didb::verify_all(i, o, &d),
                Some(c) => vec![didb::verify(i, o, &d, DidbForm::from_letter(c).ok_or_else(|| unknown(c))?)],
            }
        }
    })
}

/// `rise_min,rise_max,fall_min,fall_max`, or `rise,fall` for fixed delays.
fn parse_params(s: &str) -> Result<DelayParams, Usage> {
    let values = s.split(',').map(|v| time_arg(v.trim())).collect::<Result<Vec<Time>, String>>().map_err(Usage)?;
    Ok(match values.as_slice() {
        [r, f] => DetParams::new(r.clone(), f.clone())?.to_bounds(),
        [a, b, c, d] => DelayParams::new(a.clone(), b.clone(), c.clone(), d.clone())?,
        _ => return Err(Usage(format!("--params needs 2 or 4 values, got `{s}`"))),
    })
}

fn read_doc(path: &Path) -> Result<BsigDocument, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    BsigDocument::parse(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn read_signal(path: &Path) -> Result<Signal, Usage> {
    read_doc(path).map(|d| d.signal)
}

fn emit(out: &mut dyn Write, dest: &OutFile, text: &str) -> Result<(), Usage> {
    match &dest.path {
        Some(path) => fs::write(path, text).map_err(|e| Usage(format!("{}: {e}", path.display()))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn write_json(dest: &JsonFile, doc: impl FnOnce() -> String) -> Result<(), Usage> {
    if let Some(path) = &dest.json {
        fs::write(path, doc()).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}
