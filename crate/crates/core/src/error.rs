// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodingError {
    #[error("word width {0} outside 1..=16")]
    WidthOutOfRange(u8),
    #[error("value {value} does not fit in {width} bits")]
    ValueOutOfRange { value: u32, width: u8 },
    #[error("width mismatch: {left}-bit word against {right}-bit word")]
    WidthMismatch { left: u8, right: u8 },
    #[error("pole codes must differ (both are {0})")]
    EqualPoles(u32),
    #[error("full enumeration supports 1..=8 bits, got {0}")]
    EnumerationRange(u8),
    #[error("code {0} is equidistant from both poles and cannot be corrected")]
    Uncorrectable(u32),
    #[error("bad scheme notation {0:?}: expected (p0,p1)_n")]
    Notation(String),
    #[error("point not in metric space")]
    UnknownPoint,
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SynthError {
    #[error("operator arity {0} unsupported (expected 1 or 2)")]
    Arity(usize),
    #[error("custom truth table has {found} rows, arity {arity} needs {expected}")]
    TableSize {
        arity: usize,
        expected: usize,
        found: usize,
    },
    #[error("strict policy rejected: scheme {scheme} has {count} equidistant codes")]
    StrictWithClassH { scheme: String, count: usize },
    #[error(transparent)]
    Coding(#[from] CodingError),
}

/// Source position of a netlist problem; `line` is 1-based, `None` for
/// netlists assembled in code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Location {
    pub line: Option<usize>,
    pub col: Option<usize>,
}

impl std::fmt::Display for Location {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.line, self.col) {
            (Some(l), Some(c)) => write!(f, "line {l}, col {c}: "),
            (Some(l), None) => write!(f, "line {l}: "),
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetlistError {
    #[error("{at}{msg}")]
    Syntax { at: Location, msg: String },
    #[error("{at}unknown gate kind {kind:?}")]
    UnknownGateKind { at: Location, kind: String },
    #[error("no outputs declared")]
    NoOutputs,
    #[error("{at}net {net:?} has more than one driver")]
    MultipleDrivers { at: Location, net: String },
    #[error("{at}duplicate gate id {id:?}")]
    DuplicateGate { at: Location, id: String },
    #[error("combinational cycle through gate {gate:?}")]
    Cycle { gate: String },
    #[error("{at}gate {gate:?}: net {net:?} is {found} bits wide, expected {expected}")]
    WidthMismatch {
        at: Location,
        gate: String,
        net: String,
        expected: u8,
        found: u8,
    },
    #[error("{at}gate {gate:?}: expected {expected} inputs, found {found}")]
    Arity {
        at: Location,
        gate: String,
        expected: String,
        found: usize,
    },
    #[error("net {net:?} is never driven")]
    UndrivenNet { net: String },
    #[error("{at}tolerant gate kinds need a `scheme (p0,p1)_n` directive")]
    MissingScheme { at: Location },
    #[error("input {net:?} is {width} bits wide but no scheme of that width is declared")]
    InputCoding { net: String, width: u8 },
    #[error("no value supplied for input {net:?}")]
    MissingInput { net: String },
    #[error("input {net:?} expects a {expected}-bit word, got {found} bits")]
    InputWidth { net: String, expected: u8, found: u8 },
    #[error("gate {gate:?} is not a conventional AND/OR/NOT gate")]
    NotConventional { gate: String },
    #[error("replication factor must be odd and in 3..=7, got {0}")]
    Replication(usize),
    #[error("gate {gate:?} has no textual form")]
    Unserializable { gate: String },
    #[error("{at}{source}")]
    Coding {
        at: Location,
        #[source]
        source: CodingError,
    },
    #[error("{at}{source}")]
    Synth {
        at: Location,
        #[source]
        source: SynthError,
    },
}

impl From<CodingError> for NetlistError {
    fn from(source: CodingError) -> Self {
        NetlistError::Coding {
            at: Location::default(),
            source,
        }
    }
}

impl From<SynthError> for NetlistError {
    fn from(source: SynthError) -> Self {
        NetlistError::Synth {
            at: Location::default(),
            source,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SimError {
    #[error("probability {p} for {what} outside [0, 1]")]
    Probability { what: String, p: f64 },
    #[error("fault plan names unknown gate {0:?}")]
    UnknownGate(String),
    #[error("trial count must be at least 1")]
    NoTrials,
    #[error("probability list is empty")]
    EmptySweep,
    #[error("no netlists to simulate")]
    NoNetlists,
    #[error("netlist {label:?} does not match {reference:?}: {reason}")]
    InterfaceMismatch {
        label: String,
        reference: String,
        reason: String,
    },
    #[error("exhaustive input cycling over {0} inputs is too large")]
    TooManyInputs(usize),
    #[error(transparent)]
    Netlist(#[from] NetlistError),
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("report has no points")]
    Empty,
    #[error("trials must be at least 1")]
    ZeroTrials,
    #[error("{count} exceeds total {total}")]
    CountRange { count: u64, total: u64 },
    #[error("inconsistent counts for {label:?} at p={p}: {reason}")]
    Inconsistent { label: String, p: f64, reason: String },
    #[error("cannot write {path}: {source}", path = path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed report CSV: {0}")]
    Csv(String),
}
