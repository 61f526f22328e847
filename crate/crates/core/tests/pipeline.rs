// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use ftlogic::netlist::fixtures;
use ftlogic::{
    build_nmr, build_scheme_values, generalized_decode, parse_netlist, serialize_netlist,
    substitute, tolerant_gate, Codeword, FiniteMetricSpace, HPolicy, LogicOp, SubstituteOptions,
};

fn word(v: u32, n: u8) -> Codeword {
    Codeword::new(v, n).unwrap()
}

#[test]
fn fixture_files_on_disk_match_embedded_sources() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for name in fixtures::NAMES {
        let text = std::fs::read_to_string(dir.join(format!("{name}.net"))).unwrap();
        assert_eq!(parse_netlist(&text).unwrap(), fixtures::by_name(name).unwrap());
    }
}

#[test]
fn conventional_and_tolerant_xor_evaluate() {
    let conv = fixtures::by_name("xor_conventional").unwrap();
    assert_eq!((conv.gates().len(), conv.inputs().len(), conv.outputs().len()), (5, 2, 1));
    let ins = BTreeMap::from([("a".to_string(), word(1, 1)), ("b".to_string(), word(0, 1))]);
    assert_eq!(conv.evaluate(&ins).unwrap()["net7"], word(1, 1));

    let tol = fixtures::by_name("xor_(2,5)_3").unwrap();
    let ins = BTreeMap::from([("a".to_string(), word(2, 3)), ("b".to_string(), word(2, 3))]);
    let nets = tol.evaluate(&ins).unwrap();
    assert_eq!(nets["net7"], word(2, 3));
    assert_eq!(nets["f_net7"], word(0, 1));
}

#[test]
fn substitute_serialize_reparse_and_replicate() {
    let conv = fixtures::by_name("xor_conventional").unwrap();
    let sc = build_scheme_values(3, 2, 5).unwrap();
    let tol = substitute(&conv, &sc, HPolicy::AsZero, SubstituteOptions::default()).unwrap();
    let text = serialize_netlist(&tol).unwrap();
    assert_eq!(text, fixtures::XOR_2_5_3.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>().join("\n") + "\n");
    assert_eq!(parse_netlist(&text).unwrap(), tol);
    let tmr = build_nmr(&conv, 3).unwrap();
    assert_eq!(tmr.gates().len(), 16);
}

#[test]
fn conventional_gates_are_the_one_bit_case() {
    let conv = ftlogic::CodingScheme::conventional();
    let and = tolerant_gate(&conv, LogicOp::And, HPolicy::Strict).unwrap();
    let or = tolerant_gate(&conv, LogicOp::Or, HPolicy::Strict).unwrap();
    let not = tolerant_gate(&conv, LogicOp::Not, HPolicy::Strict).unwrap();
    assert_eq!(and.table(), [0, 0, 0, 1]);
    assert_eq!(or.table(), [0, 1, 1, 1]);
    assert_eq!(not.table(), [1, 0]);
}

#[test]
fn three_point_metric_decode() {
    let d = |x: &char, y: &char| -> f64 {
        match (x, y) {
            (a, b) if a == b => 0.0,
            ('a', 'b') | ('b', 'a') => 3.0,
            ('c', 'a') | ('a', 'c') => 1.0,
            _ => 2.0,
        }
    };
    let space = FiniteMetricSpace::new(vec!['a', 'b', 'c'], d).unwrap();
    assert_eq!(*generalized_decode(&space, &'a', &'b', &'c').unwrap(), 'a');
    assert_eq!(*generalized_decode(&space, &'a', &'b', &'b').unwrap(), 'b');
}
