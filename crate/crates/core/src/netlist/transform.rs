// SPDX-License-Identifier: Apache-2.0

//! Netlist rewrites: component substitution into a tolerant coding, and
//! N-modular redundancy around a conventional module.

use std::sync::Arc;

use super::{GateKind, Netlist, NetlistBuilder};
use crate::error::NetlistError;
use crate::scheme::{CodingScheme, HPolicy};
use crate::synth::{tolerant_gate, translator, LogicOp};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubstituteOptions {
    /// Keep 1-bit primary inputs and encode each through a translator.
    pub input_translators: bool,
    /// Decode each primary output back to 1 bit through a translator.
    pub output_translator: bool,
}

impl Default for SubstituteOptions {
    fn default() -> Self {
        SubstituteOptions {
            input_translators: false,
            output_translator: true,
        }
    }
}

/// Net driven by the output translator of `net`.
pub fn translated_output_name(net: &str) -> String {
    format!("f_{net}")
}

fn require_conventional(netlist: &Netlist) -> Result<(), NetlistError> {
    if let Some(g) = netlist.gates().iter().find(|g| !g.kind.is_conventional()) {
        return Err(NetlistError::NotConventional { gate: g.id.clone() });
    }
    if netlist.width() != 1 {
        return Err(NetlistError::NotConventional {
            gate: format!("<width {}>", netlist.width()),
        });
    }
    Ok(())
}

/// Replace every AND/OR/NOT with the scheme's T_and/T_or/T_not and widen
/// the nets to the scheme width. Gate ids, net names and edges are kept.
pub fn substitute(
    netlist: &Netlist,
    scheme: &CodingScheme,
    policy: HPolicy,
    options: SubstituteOptions,
) -> Result<Netlist, NetlistError> {
    require_conventional(netlist)?;
    let tand = GateKind::Tolerant(Arc::new(tolerant_gate(scheme, LogicOp::And, policy)?));
    let tor = GateKind::Tolerant(Arc::new(tolerant_gate(scheme, LogicOp::Or, policy)?));
    let tnot = GateKind::Tolerant(Arc::new(tolerant_gate(scheme, LogicOp::Not, policy)?));
    let conv = CodingScheme::conventional();

    let mut b = NetlistBuilder::new(scheme.width());
    b.scheme(scheme.clone()).policy(policy);

    let name = |id: usize| netlist.net(id).name.as_str();
    let encoded = |id: usize| -> String {
        if options.input_translators && netlist.inputs().contains(&id) {
            format!("{}_enc", name(id))
        } else {
            name(id).to_string()
        }
    };

    for &id in netlist.inputs() {
        if options.input_translators {
            b.input_with_width(name(id), 1);
        } else {
            b.input(name(id));
        }
    }
    for &id in netlist.outputs() {
        if options.output_translator {
            b.output(&translated_output_name(&encoded(id)));
        } else {
            b.output(&encoded(id));
        }
    }
    for gate in netlist.gates() {
        let kind = match gate.kind {
            GateKind::ConvAnd => tand.clone(),
            GateKind::ConvOr => tor.clone(),
            GateKind::ConvNot => tnot.clone(),
            _ => unreachable!("checked conventional"),
        };
        let ins: Vec<String> = gate.inputs.iter().map(|&n| encoded(n)).collect();
        let ins: Vec<&str> = ins.iter().map(String::as_str).collect();
        b.gate(&gate.id, kind, name(gate.output), &ins);
    }
    if options.input_translators {
        let enc = GateKind::Translator(Arc::new(translator(&conv, scheme, policy)?));
        for &id in netlist.inputs() {
            b.gate(&format!("tr_{}", name(id)), enc.clone(), &encoded(id), &[name(id)]);
        }
    }
    if options.output_translator {
        let dec = GateKind::Translator(Arc::new(translator(scheme, &conv, policy)?));
        for &id in netlist.outputs() {
            let src = encoded(id);
            b.gate(
                &format!("tr_{src}"),
                dec.clone(),
                &translated_output_name(&src),
                &[&src],
            );
        }
    }
    b.build()
}

/// `r` copies of a conventional module sharing its primary inputs, with a
/// majority voter on every primary output. Copy `k` renames internal nets
/// and gates with an `_m{k}` suffix; voters are `vote_<out>`.
pub fn build_nmr(netlist: &Netlist, r: usize) -> Result<Netlist, NetlistError> {
    if r.is_multiple_of(2) || !(3..=7).contains(&r) {
        return Err(NetlistError::Replication(r));
    }
    require_conventional(netlist)?;
    let mut b = NetlistBuilder::new(1);
    for &id in netlist.inputs() {
        b.input(&netlist.net(id).name);
    }
    for &id in netlist.outputs() {
        b.output(&netlist.net(id).name);
    }
    let copy_name = |id: usize, k: usize| -> String {
        let net = &netlist.net(id).name;
        if netlist.inputs().contains(&id) {
            net.clone()
        } else {
            format!("{net}_m{k}")
        }
    };
    for k in 1..=r {
        for gate in netlist.gates() {
            let ins: Vec<String> = gate.inputs.iter().map(|&n| copy_name(n, k)).collect();
            let ins: Vec<&str> = ins.iter().map(String::as_str).collect();
            b.gate(
                &format!("{}_m{k}", gate.id),
                gate.kind.clone(),
                &copy_name(gate.output, k),
                &ins,
            );
        }
    }
    for &id in netlist.outputs() {
        let ins: Vec<String> = (1..=r).map(|k| copy_name(id, k)).collect();
        let ins: Vec<&str> = ins.iter().map(String::as_str).collect();
        let out = &netlist.net(id).name;
        b.gate(
            &format!("vote_{out}"),
            GateKind::MajorityVoter { fan_in: r },
            out,
            &ins,
        );
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netlist::{fixtures, parse_netlist, serialize_netlist};
    use crate::scheme::{build_scheme, build_scheme_values};
    use crate::Codeword;

    fn xor() -> Netlist {
        fixtures::by_name("xor_conventional").unwrap()
    }

    fn edges(n: &Netlist) -> Vec<(String, Vec<String>, String)> {
        n.gates()
            .iter()
            .map(|g| {
                (
                    g.id.clone(),
                    g.inputs.iter().map(|&i| n.net(i).name.clone()).collect(),
                    n.net(g.output).name.clone(),
                )
            })
            .collect()
    }

    #[test]
    fn substitution_keeps_topology() {
        let sc = build_scheme_values(3, 2, 5).unwrap();
        let opts = SubstituteOptions {
            output_translator: false,
            ..Default::default()
        };
        let t = substitute(&xor(), &sc, HPolicy::AsZero, opts).unwrap();
        assert_eq!(edges(&t), edges(&xor()));
        assert!(t.nets().iter().all(|n| n.width == 3));
        assert!(t.gates().iter().all(|g| matches!(g.kind, GateKind::Tolerant(_))));
    }

    #[test]
    fn substitution_matches_shipped_tolerant_fixture() {
        let sc = build_scheme_values(3, 2, 5).unwrap();
        let t = substitute(&xor(), &sc, HPolicy::AsZero, SubstituteOptions::default()).unwrap();
        assert_eq!(t.gates().len(), 6);
        assert_eq!(t, fixtures::by_name("xor_(2,5)_3").unwrap());
    }

    #[test]
    fn wires_only_changes_width() {
        let n = parse_netlist("input a\noutput a\n").unwrap();
        let sc = build_scheme_values(3, 0, 7).unwrap();
        let opts = SubstituteOptions {
            output_translator: false,
            ..Default::default()
        };
        let t = substitute(&n, &sc, HPolicy::AsZero, opts).unwrap();
        assert!(t.gates().is_empty());
        assert_eq!(t.net(t.inputs()[0]).width, 3);
        assert_eq!(t.net(t.outputs()[0]).name, "a");
    }

    #[test]
    fn substitution_rejects_tolerant_input() {
        let tol = fixtures::by_name("xor_(2,5)_3").unwrap();
        let sc = build_scheme_values(3, 2, 5).unwrap();
        assert!(matches!(
            substitute(&tol, &sc, HPolicy::AsZero, SubstituteOptions::default()),
            Err(NetlistError::NotConventional { .. })
        ));
        let tmr = fixtures::by_name("xor_tmr").unwrap();
        assert!(substitute(&tmr, &sc, HPolicy::AsZero, SubstituteOptions::default()).is_err());
    }

    #[test]
    fn translated_evaluation_equals_conventional_for_all_complement_schemes() {
        let conv = xor();
        for p in Codeword::all(3).unwrap() {
            let sc = build_scheme(3, p, p.complement()).unwrap();
            let opts = SubstituteOptions {
                input_translators: true,
                output_translator: true,
            };
            let t = substitute(&conv, &sc, HPolicy::Strict, opts).unwrap();
            for a in 0..2u32 {
                for b in 0..2u32 {
                    let golden = conv.evaluate_words(&[a, b])[conv.outputs()[0]];
                    let got = t.evaluate_words(&[a, b])[t.outputs()[0]];
                    assert_eq!(got, golden, "{sc} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn nmr_structure() {
        let tmr = build_nmr(&xor(), 3).unwrap();
        assert_eq!(tmr.gates().len(), 16);
        assert_eq!(
            tmr.gates().iter().filter(|g| matches!(g.kind, GateKind::MajorityVoter { .. })).count(),
            1
        );
        assert_eq!(tmr, fixtures::by_name("xor_tmr").unwrap());
        let fmr = build_nmr(&xor(), 5).unwrap();
        assert_eq!(fmr.gates().len(), 26);
        assert_eq!(fmr, fixtures::by_name("xor_5mr").unwrap());
        assert!(matches!(build_nmr(&xor(), 4), Err(NetlistError::Replication(4))));
        assert!(build_nmr(&xor(), 9).is_err());
        assert!(build_nmr(&fixtures::by_name("xor_(2,5)_3").unwrap(), 3).is_err());
    }

    #[test]
    fn nmr_fault_free_equals_module_and_masks_one_copy() {
        let base = xor();
        let tmr = build_nmr(&base, 3).unwrap();
        let copy1_out = tmr.gate_index("g_net7_m1").unwrap();
        for a in 0..2u32 {
            for b in 0..2u32 {
                let golden = base.evaluate_words(&[a, b])[base.outputs()[0]];
                assert_eq!(tmr.evaluate_words(&[a, b])[tmr.outputs()[0]], golden);
                let forced =
                    tmr.evaluate_words_with(&[a, b], |gi, w| if gi == copy1_out { w ^ 1 } else { w });
                assert_eq!(forced[tmr.outputs()[0]], golden);
                let net = tmr.net_id("net7_m1").unwrap();
                assert_ne!(forced[net], golden);
            }
        }
    }

    #[test]
    fn serialized_transform_reparses() {
        let sc = build_scheme_values(3, 1, 6).unwrap();
        let opts = SubstituteOptions {
            input_translators: true,
            output_translator: true,
        };
        let t = substitute(&xor(), &sc, HPolicy::AsOne, opts).unwrap();
        let text = serialize_netlist(&t).unwrap();
        assert!(text.contains("hpolicy one\n"));
        assert!(text.contains("input a 1\n"));
        assert_eq!(parse_netlist(&text).unwrap(), t);
    }
}
