// SPDX-License-Identifier: Apache-2.0

//! Fault-tolerant Boolean logic built on pole codes in Hamming space.
//!
//! Logic 0 and logic 1 are carried by two `n`-bit pole words. Every other
//! word is attracted to the nearer pole, so a tolerant gate that reads its
//! inputs by class and always emits a pole masks bit errors that reached
//! its inputs. The crate covers the coding layer ([`scheme`], [`metric`]),
//! gate synthesis ([`synth`]), netlists and their rewriting ([`netlist`]),
//! fault-injection simulation ([`fault`]) and report output ([`metrics`]).

pub mod codeword;
pub mod conformance;
pub mod error;
pub mod fault;
pub mod metric;
pub mod metrics;
pub mod netlist;
pub mod scheme;
pub mod synth;

pub use codeword::{hamming_distance, Codeword};
pub use error::{CodingError, Location, NetlistError, ReportError, SimError, SynthError};
pub use fault::{
    default_p_values, inject_and_evaluate, inject_forced, p_range, run_trials, sweep, ErrorProfile,
    FaultPlan, InputSource, SweepConfig, TrialRecord, TrialRun,
};
pub use metric::{generalized_decode, FiniteMetricSpace};
pub use metrics::{
    availability, emit_report, parse_report_csv, report_csv, report_svg, tolerance_rate,
    ChartMetric, Ratio, ReportFormat, SweepPoint, SweepReport,
};
pub use scheme::{
    build_scheme, build_scheme_values, enumerate_schemes, rank_schemes, scheme_quality,
    ClassLabel, CodingScheme, HPolicy, SchemeQuality,
};
pub use synth::{
    minterm_lists, synthesize_function, tolerant_gate, translator, BitMinterms, LogicOp,
    TolerantGateSpec, TranslatorSpec, TruthTable,
};
pub use netlist::{
    build_nmr, parse_netlist, serialize_netlist, substitute, Gate, GateKind, Net, NetId, Netlist,
    NetlistBuilder, SubstituteOptions,
};
