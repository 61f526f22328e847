// SPDX-License-Identifier: Apache-2.0

//! Regenerates every reference table, minterm list, error profile and
//! availability sweep into one directory.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use ftlogic::conformance::{render_conformance, run_conformance};
use ftlogic::netlist::fixtures;
use ftlogic::{
    build_scheme_values, default_p_values, serialize_netlist, CodingScheme, HPolicy, InputSource,
    LogicOp, Netlist, ReportFormat, SweepConfig,
};

use crate::error::{write_text, CliResult};
use crate::simulate::{file_label, run as simulate, SimulateJob};
use crate::synth_cmd::{self, SynthFormat, SynthOp};
use crate::scheme_cmd;

pub struct ReproduceOptions {
    pub dir: PathBuf,
    pub trials: u64,
    pub profile_trials: u64,
    pub seed: u64,
}

fn fixture(name: &str) -> (String, Netlist) {
    (name.to_string(), fixtures::by_name(name).expect("shipped fixture"))
}

fn tables(dir: &Path) -> CliResult {
    for n in 1..=3 {
        write_text(&dir.join(format!("schemes_{n}bit.txt")), &scheme_cmd::enumerate(n)?)?;
        write_text(&dir.join(format!("rank_{n}bit.txt")), &scheme_cmd::rank(n, None)?)?;
    }
    for (n, p0, p1) in [(3, 2, 5), (3, 0, 7), (3, 0, 3), (3, 1, 3), (5, 10, 21)] {
        let s = build_scheme_values(n, p0, p1)?;
        let text = scheme_cmd::inspect(&s)? + &scheme_cmd::conformance_notes(Some(&s), n);
        write_text(&dir.join(format!("scheme_{}.txt", file_label(&s.to_string()))), &text)?;
    }
    Ok(())
}

fn minterms(dir: &Path) -> CliResult {
    let sc = build_scheme_values(3, 2, 5)?;
    let conv = CodingScheme::conventional();
    let gates = [
        ("t_or", LogicOp::Or),
        ("t_and", LogicOp::And),
        ("t_not", LogicOp::Not),
        ("xor", LogicOp::Xor),
    ];
    for (name, op) in gates {
        let op = SynthOp::Gate(op);
        for (ext, fmt) in [("txt", SynthFormat::Text), ("csv", SynthFormat::Csv)] {
            let text = synth_cmd::run(&sc, &op, None, HPolicy::AsZero, fmt)?;
            write_text(&dir.join(format!("{name}.{ext}")), &text)?;
        }
    }
    for (name, op) in [("and", LogicOp::And), ("or", LogicOp::Or), ("not", LogicOp::Not)] {
        let text = synth_cmd::run(&conv, &SynthOp::Gate(op), None, HPolicy::Strict, SynthFormat::Text)?;
        write_text(&dir.join(format!("conventional_{name}.txt")), &text)?;
    }
    let decode = synth_cmd::run(&sc, &SynthOp::Translator, Some(&conv), HPolicy::AsZero, SynthFormat::Text)?;
    write_text(&dir.join("translator_to_conventional.txt"), &decode)?;
    let encode = synth_cmd::run(&conv, &SynthOp::Translator, Some(&sc), HPolicy::AsZero, SynthFormat::Text)?;
    write_text(&dir.join("translator_from_conventional.txt"), &encode)?;
    Ok(())
}

fn netlists(dir: &Path) -> CliResult {
    for name in fixtures::NAMES {
        let n = fixtures::by_name(name).expect("shipped fixture");
        write_text(&dir.join(format!("{}.net", file_label(name))), &serialize_netlist(&n)?)?;
    }
    Ok(())
}

fn run_job(dir: PathBuf, netlists: Vec<(String, Netlist)>, config: SweepConfig) -> CliResult<String> {
    simulate(&SimulateJob {
        netlists,
        config,
        out: dir,
        formats: vec![ReportFormat::Csv, ReportFormat::Svg],
        dump_trials: false,
    })
}

fn profiles(dir: &Path, opts: &ReproduceOptions) -> CliResult<String> {
    let tol = vec![fixture("xor_(2,5)_3")];
    let mut log = String::new();
    let cases: [(&str, f64, Option<&str>); 3] = [
        ("net3_p0.005", 0.005, Some("g_net3")),
        // no probability is given for the heavier case; 0.05 stands in
        ("net3_p0.05_stand_in", 0.05, Some("g_net3")),
        ("all_gates_p0.005", 0.005, None),
    ];
    for (name, p, target) in cases {
        let mut cfg = SweepConfig::new(vec![p], opts.profile_trials, opts.seed);
        cfg.target_gates = target.map(|g| vec![g.to_string()]);
        let _ = writeln!(log, "[{name}]");
        log.push_str(&run_job(dir.join(name), tol.clone(), cfg)?);
    }
    Ok(log)
}

fn sweeps(dir: &Path, opts: &ReproduceOptions) -> CliResult<String> {
    let mut log = String::new();
    for (name, other) in [
        ("tolerant_vs_conventional", "xor_conventional"),
        ("tolerant_vs_tmr", "xor_tmr"),
        ("tolerant_vs_5mr", "xor_5mr"),
    ] {
        let mut cfg = SweepConfig::new(default_p_values(), opts.trials, opts.seed);
        cfg.input_source = InputSource::SeededUniform;
        let set = vec![fixture("xor_(2,5)_3"), fixture(other)];
        let _ = writeln!(log, "[{name}]");
        log.push_str(&run_job(dir.join(name), set, cfg)?);
    }
    Ok(log)
}

/// Write everything under `opts.dir`; returns a short summary.
pub fn run(opts: &ReproduceOptions) -> CliResult<String> {
    let dir = &opts.dir;
    tables(&dir.join("tables"))?;
    minterms(&dir.join("minterms"))?;
    netlists(&dir.join("netlists"))?;
    let mut log = profiles(&dir.join("error_profiles"), opts)?;
    log.push_str(&sweeps(&dir.join("sweeps"), opts)?);
    write_text(&dir.join("simulation_log.txt"), &log)?;

    let findings = run_conformance();
    let report = render_conformance(&findings);
    write_text(&dir.join("conformance.txt"), &report)?;
    let diverging = findings.iter().filter(|f| !f.is_match()).count();
    write_text(
        &dir.join("run.txt"),
        &format!(
            "seed {}\nsweep trials per point {}\nprofile trials {}\n",
            opts.seed, opts.trials, opts.profile_trials
        ),
    )?;
    Ok(format!(
        "reproduced into {}\nconformance: {} checks, {} diverge (see conformance.txt)\n",
        dir.display(),
        findings.len(),
        diverging
    ))
}
