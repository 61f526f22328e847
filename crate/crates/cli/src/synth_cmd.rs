// SPDX-License-Identifier: Apache-2.0

use std::str::FromStr;

use ftlogic::synth::{minterms_csv, minterms_text, truth_table_text};
use ftlogic::{tolerant_gate, translator, BitMinterms, CodingScheme, HPolicy, LogicOp, TruthTable};

use crate::error::{CliError, CliResult};

/// Operator selected on the command line.
#[derive(Debug, Clone, PartialEq)]
pub enum SynthOp {
    Gate(LogicOp),
    Translator,
}

impl FromStr for SynthOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let op = match lower.trim_start_matches('t') {
            _ if lower == "trans" || lower == "translator" => return Ok(SynthOp::Translator),
            "and" => LogicOp::And,
            "or" => LogicOp::Or,
            "not" => LogicOp::Not,
            "xor" => LogicOp::Xor,
            _ => match lower.strip_prefix("custom:") {
                Some(bits) => LogicOp::Custom(TruthTable::from_bits(bits).map_err(|e| e.to_string())?),
                None => {
                    return Err(format!(
                        "unknown operator {s:?} (and, or, not, xor, custom:<bits>, trans)"
                    ))
                }
            },
        };
        Ok(SynthOp::Gate(op))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SynthFormat {
    /// Minterm lists followed by the truth table.
    Text,
    /// Minterm lists as CSV.
    Csv,
    /// Truth table only.
    Table,
}

pub fn run(
    scheme: &CodingScheme,
    op: &SynthOp,
    target: Option<&CodingScheme>,
    policy: HPolicy,
    format: SynthFormat,
) -> CliResult<String> {
    let (name, title, lists, in_width, inputs, out_width, table): (
        &str,
        String,
        Vec<BitMinterms>,
        u8,
        usize,
        u8,
        Vec<u32>,
    ) = match op {
        SynthOp::Gate(op) => {
            if target.is_some() {
                return Err(CliError::Usage("a target scheme applies only to trans".into()));
            }
            let spec = tolerant_gate(scheme, op.clone(), policy)?;
            (
                op.name(),
                format!("{} over {scheme}, Class_H read as {policy}", op.name()),
                spec.minterm_lists().to_vec(),
                scheme.width(),
                spec.arity(),
                scheme.width(),
                spec.table().to_vec(),
            )
        }
        SynthOp::Translator => {
            let to = target
                .ok_or_else(|| CliError::Usage("trans needs a target scheme, e.g. (0,1)_1".into()))?;
            let spec = translator(scheme, to, policy)?;
            (
                "Tr",
                format!("translator {scheme} -> {to}, Class_H read as {policy}"),
                spec.minterm_lists().to_vec(),
                scheme.width(),
                1,
                to.width(),
                spec.table().to_vec(),
            )
        }
    };
    Ok(match format {
        SynthFormat::Csv => minterms_csv(&lists),
        SynthFormat::Table => truth_table_text(in_width, inputs, out_width, &table),
        SynthFormat::Text => format!(
            "{title}\n{}\ntruth table:\n{}",
            minterms_text(name, &lists),
            truth_table_text(in_width, inputs, out_width, &table)
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn operator_names() {
        assert_eq!("tnot".parse::<SynthOp>().unwrap(), SynthOp::Gate(LogicOp::Not));
        assert_eq!("AND".parse::<SynthOp>().unwrap(), SynthOp::Gate(LogicOp::And));
        assert_eq!("trans".parse::<SynthOp>().unwrap(), SynthOp::Translator);
        assert!(matches!(
            "custom:0110".parse::<SynthOp>().unwrap(),
            SynthOp::Gate(LogicOp::Custom(_))
        ));
        assert!("nand".parse::<SynthOp>().is_err());
        assert!("custom:011".parse::<SynthOp>().is_err());
    }
}
