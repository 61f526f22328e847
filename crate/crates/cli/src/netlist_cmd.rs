// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use ftlogic::netlist::fixtures;
use ftlogic::{
    build_nmr, parse_netlist, serialize_netlist, substitute, CodingScheme, GateKind, HPolicy,
    Netlist, SubstituteOptions,
};

use crate::error::{CliError, CliResult};

/// Short names accepted for the shipped fixtures.
const ALIASES: [(&str, &str); 4] = [
    ("xor_tol", "xor_(2,5)_3"),
    ("xor_tolerant", "xor_(2,5)_3"),
    ("xor_conv", "xor_conventional"),
    ("xor", "xor_conventional"),
];

fn builtin(name: &str) -> Option<Netlist> {
    let name = ALIASES
        .iter()
        .find(|(alias, _)| *alias == name)
        .map_or(name, |(_, real)| real);
    fixtures::by_name(name)
}

/// Resolve a file path, `builtin:NAME`, or a bare fixture name.
/// Returns a label (file stem or the name as given) and the netlist.
pub fn load(spec: &str) -> CliResult<(String, Netlist)> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let n = builtin(name).ok_or_else(|| {
            CliError::Input(format!(
                "no built-in netlist {name:?} (have {})",
                fixtures::NAMES.join(", ")
            ))
        })?;
        return Ok((name.to_string(), n));
    }
    let path = Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {spec}: {e}")))?;
        let n = parse_netlist(&text).map_err(|e| CliError::Input(format!("{spec}: {e}")))?;
        let label = path
            .file_stem()
            .map_or_else(|| spec.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok((label, n));
    }
    match builtin(spec) {
        Some(n) => Ok((spec.to_string(), n)),
        None => Err(CliError::Input(format!(
            "{spec}: no such file or built-in netlist"
        ))),
    }
}

pub fn summary(n: &Netlist) -> String {
    let count = |f: fn(&GateKind) -> bool| n.gates().iter().filter(|g| f(&g.kind)).count();
    format!(
        "{} gates ({} conventional, {} tolerant, {} translators, {} voters), {} nets, {} inputs, {} outputs, width {}",
        n.gates().len(),
        count(GateKind::is_conventional),
        count(|k| matches!(k, GateKind::Tolerant(_))),
        count(|k| matches!(k, GateKind::Translator(_))),
        count(|k| matches!(k, GateKind::MajorityVoter { .. })),
        n.nets().len(),
        n.inputs().len(),
        n.outputs().len(),
        n.width()
    )
}

pub fn run_substitute(
    source: &str,
    scheme: &CodingScheme,
    policy: HPolicy,
    options: SubstituteOptions,
) -> CliResult<(Netlist, String)> {
    let (_, n) = load(source)?;
    let t = substitute(&n, scheme, policy, options)?;
    let text = serialize_netlist(&t)?;
    Ok((t, text))
}

pub fn run_nmr(source: &str, r: usize) -> CliResult<(Netlist, String)> {
    let (_, n) = load(source)?;
    let t = build_nmr(&n, r)?;
    let text = serialize_netlist(&t)?;
    Ok((t, text))
}
