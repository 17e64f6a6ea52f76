//! Waveform files, VCD export, random signals and report documents.

pub mod bsig;
pub mod gen;
pub mod report_io;
pub mod vcd;

pub use bsig::{parse_bsig, write_bsig, BsigDocument};
pub use gen::{random_between, random_delays, random_signal, random_signal_from, GenConfig};
pub use report_io::{
    parse_fixture, parse_fuzz_report, parse_report, report_summary, write_fixture, write_fuzz_report, write_report,
    FuzzReportDoc, ReportDoc,
};
pub use vcd::export_vcd;
