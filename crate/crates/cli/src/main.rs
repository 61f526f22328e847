// SPDX-License-Identifier: Apache-2.0

//! `ftlogic`: pole-code schemes, tolerant gate synthesis, netlist rewriting
//! and fault-injection sweeps from the command line.
//!
//! Exit codes: 0 success, 2 usage, 3 input data, 4 runtime.

mod error;
mod netlist_cmd;
mod reproduce;
mod scheme_cmd;
mod simulate;
mod synth_cmd;

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ftlogic::{
    CodingScheme, HPolicy, InputSource, NetlistError, ReportFormat,
    SubstituteOptions, SweepConfig,
};

use error::{write_text, CliError, CliResult};
use synth_cmd::{SynthFormat, SynthOp};

#[derive(Debug, Parser)]
#[command(name = "ftlogic", version, about = "Fault-tolerant logic over pole codes in Hamming space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Inspect, enumerate or rank coding schemes.
    Scheme {
        #[command(subcommand)]
        action: SchemeAction,
    },
    /// Print minterm lists and truth tables of a tolerant gate or translator.
    Synth {
        /// Scheme in (p0,p1)_n notation.
        scheme: CodingScheme,
        /// and, or, not, xor (optionally prefixed with t), custom:<bits>, or trans.
        op: SynthOp,
        /// Target scheme for trans.
        target: Option<CodingScheme>,
        #[arg(long, value_enum, default_value = "text")]
        format: SynthFormat,
        #[arg(long, default_value = "zero")]
        h_policy: HPolicy,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replace conventional gates with tolerant ones.
    Substitute {
        /// Netlist file, builtin:NAME, or a built-in name.
        netlist: String,
        scheme: CodingScheme,
        #[arg(long, default_value = "zero")]
        h_policy: HPolicy,
        /// Keep 1-bit inputs and encode them through translators.
        #[arg(long)]
        input_translators: bool,
        /// Leave outputs in the tolerant coding.
        #[arg(long)]
        no_output_translator: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build an N-modular redundant copy with majority voters.
    Nmr {
        netlist: String,
        /// Replication factor: 3, 5 or 7.
        r: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded fault-injection sweep over one or more netlists.
    Simulate(SimulateArgs),
    /// Regenerate all tables, lists, profiles and sweeps with a conformance report.
    Reproduce {
        #[arg(long, env = "FTLOGIC_OUT", default_value = "ftlogic-out")]
        out: PathBuf,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        profile_trials: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Write into OUT directly instead of a timestamped subdirectory.
        #[arg(long)]
        no_timestamp: bool,
    },
}

#[derive(Debug, Subcommand)]
enum SchemeAction {
    /// Classes, distances and the transition map of one scheme.
    Inspect {
        scheme: CodingScheme,
        #[arg(long)]
        conformance: bool,
    },
    /// Every scheme of an n-bit space in enumeration order.
    Enumerate {
        n: u8,
        #[arg(long)]
        conformance: bool,
    },
    /// Schemes of an n-bit space, best first.
    Rank {
        n: u8,
        #[arg(long)]
        top: Option<usize>,
        #[arg(long)]
        conformance: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SourceArg {
    Uniform,
    Cycle,
}

#[derive(Debug, Clone, Copy, PartialEq, ValueEnum)]
enum FormatArg {
    Csv,
    Svg,
}

#[derive(Debug, Args)]
struct SimulateArgs {
    /// Netlists to compare (files, builtin:NAME or built-in names).
    netlists: Vec<String>,
    /// Comma-separated netlists, same forms as the positional list.
    #[arg(long, value_delimiter = ',')]
    compare: Vec<String>,
    /// start:stop:step, a comma list, or one probability.
    #[arg(long = "p", default_value = "0.01:0.2:0.01")]
    p: String,
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    #[arg(long, env = "FTLOGIC_OUT", default_value = "ftlogic-out")]
    out: PathBuf,
    /// Inject faults only at these gates.
    #[arg(long = "target-gate")]
    target_gate: Vec<String>,
    /// Never inject at these gates.
    #[arg(long)]
    exclude: Vec<String>,
    /// Let translators and voters fail too.
    #[arg(long)]
    include_boundary: bool,
    #[arg(long, value_enum, default_value = "uniform")]
    input_source: SourceArg,
    /// Write per-trial CSV dumps and per-point error profiles.
    #[arg(long)]
    dump_trials: bool,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "csv,svg")]
    format: Vec<FormatArg>,
}

fn emit(text: &str, out: Option<&Path>) -> CliResult {
    match out {
        Some(path) => write_text(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Runtime(format!("cannot write stdout: {e}")))
        }
    }
}

fn scheme_command(action: SchemeAction) -> CliResult<String> {
    Ok(match action {
        SchemeAction::Inspect { scheme, conformance } => {
            let mut out = scheme_cmd::inspect(&scheme)?;
            if conformance {
                out.push_str(&scheme_cmd::conformance_notes(Some(&scheme), scheme.width()));
            }
            out
        }
        SchemeAction::Enumerate { n, conformance } => {
            let mut out = scheme_cmd::enumerate(n).map_err(usage_if_range)?;
            if conformance {
                out.push_str(&scheme_cmd::conformance_notes(None, n));
            }
            out
        }
        SchemeAction::Rank { n, top, conformance } => {
            let mut out = scheme_cmd::rank(n, top).map_err(usage_if_range)?;
            if conformance {
                out.push_str(&scheme_cmd::conformance_notes(None, n));
            }
            out
        }
    })
}

/// An out-of-range width on the command line is a usage problem.
fn usage_if_range(e: CliError) -> CliError {
    match e {
        CliError::Input(m) if m.contains("enumeration supports") => CliError::Usage(m),
        other => other,
    }
}

fn simulate_command(args: SimulateArgs) -> CliResult<String> {
    let p_values = simulate::parse_p_values(&args.p).map_err(CliError::Usage)?;
    let mut specs = args.compare;
    specs.extend(args.netlists);
    if specs.is_empty() {
        specs.push("builtin:xor_(2,5)_3".into());
    }
    let netlists = specs
        .iter()
        .map(|s| netlist_cmd::load(s))
        .collect::<CliResult<Vec<_>>>()?;
    let mut config = SweepConfig::new(p_values, args.trials, args.seed);
    config.input_source = match args.input_source {
        SourceArg::Uniform => InputSource::SeededUniform,
        SourceArg::Cycle => InputSource::ExhaustiveCycle,
    };
    config.boundary_faults = args.include_boundary;
    config.target_gates = (!args.target_gate.is_empty()).then_some(args.target_gate);
    config.excluded = args.exclude;
    let formats = args
        .format
        .iter()
        .map(|f| match f {
            FormatArg::Csv => ReportFormat::Csv,
            FormatArg::Svg => ReportFormat::Svg,
        })
        .collect();
    simulate::run(&simulate::SimulateJob {
        netlists,
        config,
        out: args.out,
        formats,
        dump_trials: args.dump_trials,
    })
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Scheme { action } => emit(&scheme_command(action)?, None),
        Command::Synth { scheme, op, target, format, h_policy, out } => {
            let text = synth_cmd::run(&scheme, &op, target.as_ref(), h_policy, format)?;
            emit(&text, out.as_deref())
        }
        Command::Substitute {
            netlist,
            scheme,
            h_policy,
            input_translators,
            no_output_translator,
            out,
        } => {
            let options = SubstituteOptions {
                input_translators,
                output_translator: !no_output_translator,
            };
            let (n, text) = netlist_cmd::run_substitute(&netlist, &scheme, h_policy, options)?;
            finish_netlist(&n, &text, out.as_deref())
        }
        Command::Nmr { netlist, r, out } => {
            let (n, text) = netlist_cmd::run_nmr(&netlist, r).map_err(|e| match e {
                CliError::Input(m) if m == NetlistError::Replication(r).to_string() => {
                    CliError::Usage(m)
                }
                other => other,
            })?;
            finish_netlist(&n, &text, out.as_deref())
        }
        Command::Simulate(args) => emit(&simulate_command(args)?, None),
        Command::Reproduce { out, trials, profile_trials, seed, no_timestamp } => {
            let dir = if no_timestamp {
                out
            } else {
                out.join(format!("reproduce-{}", chrono::Utc::now().format("%Y%m%d-%H%M%S")))
            };
            let opts = reproduce::ReproduceOptions { dir, trials, profile_trials, seed };
            emit(&reproduce::run(&opts)?, None)
        }
    }
}

/// Netlist text goes to `out` (summary on stdout) or to stdout (summary on stderr).
fn finish_netlist(n: &ftlogic::Netlist, text: &str, out: Option<&Path>) -> CliResult {
    let summary = netlist_cmd::summary(n);
    match out {
        Some(path) => {
            write_text(path, text)?;
            emit(&format!("{summary}\nwrote {}\n", path.display()), None)
        }
        None => {
            eprintln!("{summary}");
            emit(text, None)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("ftlogic: {e}");
        std::process::exit(e.exit_code());
    }
}
