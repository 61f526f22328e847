// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write as _;
use std::path::PathBuf;

use ftlogic::fault::{check_interfaces, trial_dump_csv};
use ftlogic::{
    emit_report, p_range, run_trials, sweep, Netlist, ReportFormat, SweepConfig, SweepReport,
};

use crate::error::{write_text, CliError, CliResult};

/// `start:stop:step`, a comma list, or a single probability.
pub fn parse_p_values(s: &str) -> Result<Vec<f64>, String> {
    let num = |t: &str| -> Result<f64, String> {
        let v: f64 = t.trim().parse().map_err(|_| format!("not a number: {t:?}"))?;
        if (0.0..=1.0).contains(&v) {
            Ok(v)
        } else {
            Err(format!("probability {v} outside [0, 1]"))
        }
    };
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [start, stop, step] => {
            p_range(num(start)?, num(stop)?, step.trim().parse().map_err(|_| format!("bad step {step:?}"))?)
                .map_err(|e| e.to_string())
        }
        [_] => s.split(',').map(num).collect(),
        _ => Err(format!("expected start:stop:step or a list, got {s:?}")),
    }
}

/// File-name-safe form of a label.
pub fn file_label(label: &str) -> String {
    label
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect()
}

#[derive(Debug, Clone)]
pub struct SimulateJob {
    pub netlists: Vec<(String, Netlist)>,
    pub config: SweepConfig,
    pub out: PathBuf,
    pub formats: Vec<ReportFormat>,
    pub dump_trials: bool,
}

fn check_gate_names(netlists: &[(String, Netlist)], names: &[String], what: &str) -> CliResult {
    for g in names {
        if !netlists.iter().any(|(_, n)| n.gate_index(g).is_some()) {
            return Err(CliError::Input(format!("{what} {g:?} is not a gate of any netlist")));
        }
    }
    Ok(())
}

/// Per-point summary lines for stdout.
pub fn report_lines(report: &SweepReport) -> String {
    let mut out = String::new();
    for pt in &report.points {
        let tol = pt
            .tolerance_rate()
            .map_or_else(|| "-".to_string(), |r| r.to_string());
        let _ = writeln!(
            out,
            "{}\tp={}\tA={}\tTo={}\tcorrect={}/{}\terror_bits={}",
            pt.label,
            pt.p,
            pt.availability(),
            tol,
            pt.correct,
            pt.trials,
            pt.inserted_error_bits
        );
    }
    out
}

/// Run the sweep and write its artifacts. Returns the stdout text.
pub fn run(job: &SimulateJob) -> CliResult<String> {
    check_interfaces(&job.netlists)?;
    if let Some(t) = &job.config.target_gates {
        check_gate_names(&job.netlists, t, "target gate")?;
    }
    check_gate_names(&job.netlists, &job.config.excluded, "excluded gate")?;

    let report = sweep(&job.netlists, &job.config)?;
    let mut written = emit_report(&report, &job.out, &job.formats)?;

    let single_p = job.config.p_values.len() == 1;
    if single_p || job.dump_trials {
        for (label, netlist) in &job.netlists {
            for &p in &job.config.p_values {
                let plan = job.config.plan_for(netlist, p);
                let run = run_trials(netlist, &plan, job.config.trials, job.config.input_source)?;
                let stem = if single_p {
                    file_label(label)
                } else {
                    format!("{}_p{p}", file_label(label))
                };
                let path = job.out.join(format!("profile_{stem}.csv"));
                write_text(&path, &run.profile.to_csv())?;
                written.push(path);
                if job.dump_trials {
                    let path = job.out.join(format!("trials_{stem}.csv"));
                    write_text(&path, &trial_dump_csv(netlist, &run.records))?;
                    written.push(path);
                }
            }
        }
    }
    let mut out = report_lines(&report);
    for path in &written {
        let shown = path.strip_prefix(&job.out).unwrap_or(path);
        let _ = writeln!(out, "wrote {}", shown.display());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p_specs() {
        assert_eq!(parse_p_values("0.01:0.2:0.01").unwrap().len(), 20);
        assert_eq!(parse_p_values("0.005").unwrap(), vec![0.005]);
        assert_eq!(parse_p_values("0.01, 0.1").unwrap(), vec![0.01, 0.1]);
        assert!(parse_p_values("1.5").is_err());
        assert!(parse_p_values("x").is_err());
        assert!(parse_p_values("0.1:0.2").is_err());
        assert!(parse_p_values("0.2:0.1:0.01").is_err());
    }

    #[test]
    fn labels_become_file_names() {
        assert_eq!(file_label("xor_(2,5)_3"), "xor__2_5__3");
    }
}
