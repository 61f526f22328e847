// SPDX-License-Identifier: Apache-2.0

//! Line-based netlist format.
//!
//! ```text
//! # comment
//! width 3
//! scheme (2,5)_3
//! hpolicy zero
//! input a
//! output f
//! gate g1 TNOT n1 a
//! gate t1 TRANS f n1 from=(2,5)_3 to=(0,1)_1
//! ```
//!
//! `input <net> <w>` overrides the file width for one input. `hpolicy`
//! is optional and defaults to `zero`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use super::{GateKind, Netlist, NetlistBuilder};
use crate::error::{Location, NetlistError};
use crate::scheme::{CodingScheme, HPolicy};
use crate::synth::{tolerant_gate, translator, LogicOp, TranslatorSpec};

struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let code = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in code.char_indices() {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push(Token {
                    text: &code[s..i],
                    col: code[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &code[s..],
            col: code[..s].chars().count() + 1,
        });
    }
    out
}

fn at(line: usize, col: usize) -> Location {
    Location {
        line: Some(line),
        col: Some(col),
    }
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> NetlistError {
    NetlistError::Syntax {
        at: at(line, col),
        msg: msg.into(),
    }
}

fn parse_scheme(tok: &Token<'_>, text: &str, line: usize) -> Result<CodingScheme, NetlistError> {
    text.parse::<CodingScheme>()
        .map_err(|source| NetlistError::Coding {
            at: at(line, tok.col),
            source,
        })
}

struct GateLine<'a> {
    line: usize,
    tokens: Vec<Token<'a>>,
}

pub fn parse_netlist(text: &str) -> Result<Netlist, NetlistError> {
    let mut width: Option<(u8, usize)> = None;
    let mut scheme: Option<CodingScheme> = None;
    let mut policy = HPolicy::default();
    let mut inputs = Vec::new();
    let mut outputs = Vec::new();
    let mut gate_lines = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let tokens = tokenize(raw);
        let Some(head) = tokens.first() else {
            continue;
        };
        let expect_args = |n: std::ops::RangeInclusive<usize>| {
            if n.contains(&(tokens.len() - 1)) {
                Ok(())
            } else {
                Err(syntax(
                    line,
                    head.col,
                    format!("`{}` takes {:?} arguments", head.text, n),
                ))
            }
        };
        match head.text {
            "width" => {
                expect_args(1..=1)?;
                if width.is_some() {
                    return Err(syntax(line, head.col, "width declared twice"));
                }
                let w = tokens[1]
                    .text
                    .parse::<u8>()
                    .map_err(|_| syntax(line, tokens[1].col, "width must be an integer"))?;
                width = Some((w, tokens[1].col));
            }
            "scheme" => {
                expect_args(1..=1)?;
                if scheme.is_some() {
                    return Err(syntax(line, head.col, "scheme declared twice"));
                }
                scheme = Some(parse_scheme(&tokens[1], tokens[1].text, line)?);
            }
            "hpolicy" => {
                expect_args(1..=1)?;
                policy = tokens[1]
                    .text
                    .parse()
                    .map_err(|e: String| syntax(line, tokens[1].col, e))?;
            }
            "input" => {
                expect_args(1..=2)?;
                let w = match tokens.get(2) {
                    Some(t) => Some(
                        t.text
                            .parse::<u8>()
                            .map_err(|_| syntax(line, t.col, "input width must be an integer"))?,
                    ),
                    None => None,
                };
                inputs.push((tokens[1].text.to_string(), w, at(line, tokens[1].col)));
            }
            "output" => {
                expect_args(1..=1)?;
                outputs.push((tokens[1].text.to_string(), at(line, tokens[1].col)));
            }
            "gate" => {
                if tokens.len() < 5 {
                    return Err(syntax(
                        line,
                        head.col,
                        "expected `gate <id> <KIND> <out_net> <in_net...>`",
                    ));
                }
                gate_lines.push(GateLine { line, tokens });
            }
            other => {
                return Err(syntax(line, head.col, format!("unknown directive {other:?}")));
            }
        }
    }

    if outputs.is_empty() {
        return Err(NetlistError::NoOutputs);
    }

    let width = match (width, &scheme) {
        (Some((w, _)), _) => w,
        (None, Some(s)) => s.width(),
        (None, None) => 1,
    };
    let mut builder = NetlistBuilder::new(width);
    if let Some(s) = &scheme {
        builder.scheme(s.clone());
    }
    builder.policy(policy);
    for (name, w, loc) in &inputs {
        builder.input_at(name, *w, *loc);
    }
    for (name, loc) in &outputs {
        builder.output_at(name, *loc);
    }

    let mut cache: HashMap<&'static str, GateKind> = HashMap::new();
    for gl in &gate_lines {
        let line = gl.line;
        let kind_tok = &gl.tokens[2];
        let (nets, attrs): (Vec<&Token<'_>>, Vec<&Token<'_>>) =
            gl.tokens[3..].iter().partition(|t| !t.text.contains('='));
        let kind = match kind_tok.text {
            "AND" => GateKind::ConvAnd,
            "OR" => GateKind::ConvOr,
            "NOT" => GateKind::ConvNot,
            k @ ("TAND" | "TOR" | "TNOT") => {
                let key: &'static str = match k {
                    "TAND" => "TAND",
                    "TOR" => "TOR",
                    _ => "TNOT",
                };
                if let Some(kind) = cache.get(key) {
                    kind.clone()
                } else {
                    let sc = scheme.as_ref().ok_or(NetlistError::MissingScheme {
                        at: at(line, kind_tok.col),
                    })?;
                    let op = match key {
                        "TAND" => LogicOp::And,
                        "TOR" => LogicOp::Or,
                        _ => LogicOp::Not,
                    };
                    let spec = tolerant_gate(sc, op, policy).map_err(|source| {
                        NetlistError::Synth {
                            at: at(line, kind_tok.col),
                            source,
                        }
                    })?;
                    let kind = GateKind::Tolerant(Arc::new(spec));
                    cache.insert(key, kind.clone());
                    kind
                }
            }
            "TRANS" => {
                let mut from = None;
                let mut to = None;
                for t in &attrs {
                    let (key, value) = t.text.split_once('=').expect("partitioned on '='");
                    match key {
                        "from" => from = Some(parse_scheme(t, value, line)?),
                        "to" => to = Some(parse_scheme(t, value, line)?),
                        other => {
                            return Err(syntax(line, t.col, format!("unknown attribute {other:?}")))
                        }
                    }
                }
                let (Some(from), Some(to)) = (from, to) else {
                    return Err(syntax(
                        line,
                        kind_tok.col,
                        "TRANS needs from=(p0,p1)_n and to=(p0,p1)_n",
                    ));
                };
                let spec = translator(&from, &to, policy).map_err(|source| NetlistError::Synth {
                    at: at(line, kind_tok.col),
                    source,
                })?;
                GateKind::Translator(Arc::new(spec))
            }
            "MAJ" => GateKind::MajorityVoter {
                fan_in: nets.len().saturating_sub(1),
            },
            other => {
                return Err(NetlistError::UnknownGateKind {
                    at: at(line, kind_tok.col),
                    kind: other.to_string(),
                })
            }
        };
        if !matches!(kind, GateKind::Translator(_)) {
            if let Some(t) = attrs.first() {
                return Err(syntax(line, t.col, "attributes are only valid on TRANS gates"));
            }
        }
        if nets.len() < 2 {
            return Err(syntax(line, kind_tok.col, "gate needs an output and at least one input"));
        }
        let ins: Vec<&str> = nets[1..].iter().map(|t| t.text).collect();
        builder.gate_at(
            gl.tokens[1].text,
            kind,
            nets[0].text,
            &ins,
            Location {
                line: Some(line),
                col: Some(gl.tokens[1].col),
            },
        );
    }
    builder.build()
}

fn translator_attrs(spec: &TranslatorSpec) -> String {
    format!("from={} to={}", spec.from_scheme(), spec.to_scheme())
}

/// Render a netlist in the text format; gates keep declaration order.
pub fn serialize_netlist(netlist: &Netlist) -> Result<String, NetlistError> {
    let mut out = String::new();
    let _ = writeln!(out, "width {}", netlist.width());
    if let Some(s) = netlist.scheme() {
        let _ = writeln!(out, "scheme {s}");
    }
    if netlist.policy() != HPolicy::default() {
        let _ = writeln!(out, "hpolicy {}", netlist.policy());
    }
    for &id in netlist.inputs() {
        let net = netlist.net(id);
        if net.width == netlist.width() {
            let _ = writeln!(out, "input {}", net.name);
        } else {
            let _ = writeln!(out, "input {} {}", net.name, net.width);
        }
    }
    for &id in netlist.outputs() {
        let _ = writeln!(out, "output {}", netlist.net(id).name);
    }
    for gate in netlist.gates() {
        let unserializable = || NetlistError::Unserializable {
            gate: gate.id.clone(),
        };
        let (kind, attrs) = match &gate.kind {
            GateKind::ConvAnd => ("AND", None),
            GateKind::ConvOr => ("OR", None),
            GateKind::ConvNot => ("NOT", None),
            GateKind::Tolerant(spec) => {
                if Some(spec.scheme()) != netlist.scheme() || spec.policy() != netlist.policy() {
                    return Err(unserializable());
                }
                match spec.op() {
                    LogicOp::And => ("TAND", None),
                    LogicOp::Or => ("TOR", None),
                    LogicOp::Not => ("TNOT", None),
                    _ => return Err(unserializable()),
                }
            }
            GateKind::Translator(spec) => {
                if spec.policy() != netlist.policy() {
                    return Err(unserializable());
                }
                ("TRANS", Some(translator_attrs(spec)))
            }
            GateKind::MajorityVoter { .. } => ("MAJ", None),
        };
        let _ = write!(
            out,
            "gate {} {} {}",
            gate.id,
            kind,
            netlist.net(gate.output).name
        );
        for &n in &gate.inputs {
            let _ = write!(out, " {}", netlist.net(n).name);
        }
        if let Some(a) = attrs {
            let _ = write!(out, " {a}");
        }
        out.push('\n');
    }
    Ok(out)
}
