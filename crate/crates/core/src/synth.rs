// SPDX-License-Identifier: Apache-2.0

//! Tolerant gates and coding translators as word-level truth tables.
//!
//! Every gate is decode -> operate -> encode: each input word is mapped to
//! the logic value of its class, the Boolean operator is applied, and the
//! result is emitted as the matching pole. The table covers every input
//! word, so a faulty input is corrected as a side effect.
//!
//! Table indices concatenate the input words, first input most
//! significant: `index = a * 2^n + b` for two inputs.

use std::fmt::{self, Write as _};

use crate::codeword::Codeword;
use crate::error::SynthError;
use crate::scheme::{ClassLabel, CodingScheme, HPolicy};

/// Truth table over logic values. Row `i` holds the output for inputs
/// whose bits, first input most significant, spell `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    arity: usize,
    rows: Vec<bool>,
}

impl TruthTable {
    pub fn new(arity: usize, rows: Vec<bool>) -> Result<Self, SynthError> {
        if !(1..=2).contains(&arity) {
            return Err(SynthError::Arity(arity));
        }
        let expected = 1 << arity;
        if rows.len() != expected {
            return Err(SynthError::TableSize {
                arity,
                expected,
                found: rows.len(),
            });
        }
        Ok(TruthTable { arity, rows })
    }

    /// Parse a row string such as `"0110"`.
    pub fn from_bits(bits: &str) -> Result<Self, SynthError> {
        let rows: Vec<bool> = bits
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| c == '1')
            .collect();
        let arity = match rows.len() {
            2 => 1,
            4 => 2,
            n => {
                return Err(SynthError::TableSize {
                    arity: 0,
                    expected: 4,
                    found: n,
                })
            }
        };
        TruthTable::new(arity, rows)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn eval(&self, inputs: &[bool]) -> bool {
        let idx = inputs.iter().fold(0usize, |acc, &b| (acc << 1) | usize::from(b));
        self.rows[idx]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LogicOp {
    And,
    Or,
    Not,
    Xor,
    Custom(TruthTable),
}

impl LogicOp {
    pub fn arity(&self) -> usize {
        match self {
            LogicOp::Not => 1,
            LogicOp::And | LogicOp::Or | LogicOp::Xor => 2,
            LogicOp::Custom(t) => t.arity(),
        }
    }

    pub fn eval(&self, inputs: &[bool]) -> bool {
        match self {
            LogicOp::And => inputs[0] && inputs[1],
            LogicOp::Or => inputs[0] || inputs[1],
            LogicOp::Not => !inputs[0],
            LogicOp::Xor => inputs[0] ^ inputs[1],
            LogicOp::Custom(t) => t.eval(inputs),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LogicOp::And => "T_And",
            LogicOp::Or => "T_Or",
            LogicOp::Not => "T_Not",
            LogicOp::Xor => "T_Xor",
            LogicOp::Custom(_) => "f",
        }
    }
}

/// SOP and POS index lists for one output bit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMinterms {
    /// 1-based, most significant output bit first.
    pub bit: u8,
    /// Indices where the bit is 1.
    pub sop: Vec<u32>,
    /// Indices where the bit is 0.
    pub pos: Vec<u32>,
}

fn minterms_of(table: &[u32], out_width: u8) -> Vec<BitMinterms> {
    (1..=out_width)
        .map(|bit| {
            let shift = out_width - bit;
            let (sop, pos): (Vec<u32>, Vec<u32>) =
                (0..table.len() as u32).partition(|&i| (table[i as usize] >> shift) & 1 == 1);
            BitMinterms { bit, sop, pos }
        })
        .collect()
}

fn check_policy(scheme: &CodingScheme, policy: HPolicy) -> Result<(), SynthError> {
    if policy == HPolicy::Strict && !scheme.class_h_is_empty() {
        return Err(SynthError::StrictWithClassH {
            scheme: scheme.to_string(),
            count: scheme.members(ClassLabel::ClassH).len(),
        });
    }
    Ok(())
}

/// Word-level truth table of a tolerant operator under one scheme.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TolerantGateSpec {
    scheme: CodingScheme,
    op: LogicOp,
    policy: HPolicy,
    table: Vec<u32>,
    minterms: Vec<BitMinterms>,
}

/// Build `T_op` for `scheme`. `Strict` is refused when the scheme has
/// equidistant codes, since the table would be partial.
pub fn tolerant_gate(
    scheme: &CodingScheme,
    op: LogicOp,
    policy: HPolicy,
) -> Result<TolerantGateSpec, SynthError> {
    let arity = op.arity();
    if !(1..=2).contains(&arity) {
        return Err(SynthError::Arity(arity));
    }
    check_policy(scheme, policy)?;
    let n = u32::from(scheme.width());
    let size = 1u32 << (n * arity as u32);
    let word_mask = (1u32 << n) - 1;
    let mut table = Vec::with_capacity(size as usize);
    let mut logic = [false; 2];
    for index in 0..size {
        for (k, slot) in logic.iter_mut().enumerate().take(arity) {
            let word = (index >> (n * (arity - 1 - k) as u32)) & word_mask;
            *slot = scheme.decode_value(word, policy)?;
        }
        table.push(scheme.pole(op.eval(&logic[..arity])).value());
    }
    let minterms = minterms_of(&table, scheme.width());
    Ok(TolerantGateSpec {
        scheme: scheme.clone(),
        op,
        policy,
        table,
        minterms,
    })
}

/// Tolerant form of an arbitrary one- or two-input Boolean function.
pub fn synthesize_function(
    scheme: &CodingScheme,
    function: TruthTable,
    policy: HPolicy,
) -> Result<TolerantGateSpec, SynthError> {
    tolerant_gate(scheme, LogicOp::Custom(function), policy)
}

impl TolerantGateSpec {
    pub fn scheme(&self) -> &CodingScheme {
        &self.scheme
    }

    pub fn op(&self) -> &LogicOp {
        &self.op
    }

    pub fn policy(&self) -> HPolicy {
        self.policy
    }

    pub fn arity(&self) -> usize {
        self.op.arity()
    }

    /// Output word for a concatenated input index.
    pub fn output(&self, index: u32) -> u32 {
        self.table[index as usize]
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// Evaluate on raw input words (one per input, each `n` bits).
    pub fn eval_words(&self, inputs: &[u32]) -> u32 {
        let n = self.scheme.width();
        let index = inputs.iter().fold(0u32, |acc, &w| (acc << n) | w);
        self.table[index as usize]
    }

    pub fn eval(&self, inputs: &[Codeword]) -> Codeword {
        let words: Vec<u32> = inputs.iter().map(|c| c.value()).collect();
        Codeword::new(self.eval_words(&words), self.scheme.width()).expect("table holds poles")
    }

    pub fn minterm_lists(&self) -> &[BitMinterms] {
        &self.minterms
    }

    /// Input tuples (as word values) whose output is the pole for `logic`.
    pub fn input_set(&self, logic: bool) -> Vec<Vec<u32>> {
        let target = self.scheme.pole(logic).value();
        let n = u32::from(self.scheme.width());
        let arity = self.arity();
        let mask = (1u32 << n) - 1;
        self.table
            .iter()
            .enumerate()
            .filter(|(_, &out)| out == target)
            .map(|(idx, _)| {
                (0..arity)
                    .map(|k| (idx as u32 >> (n * (arity - 1 - k) as u32)) & mask)
                    .collect()
            })
            .collect()
    }
}

/// Standalone entry point for the minterm lists of a gate.
pub fn minterm_lists(spec: &TolerantGateSpec) -> Vec<BitMinterms> {
    spec.minterms.clone()
}

/// Converts words of one scheme to the pole of the same logic value in another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslatorSpec {
    from: CodingScheme,
    to: CodingScheme,
    policy: HPolicy,
    table: Vec<u32>,
    minterms: Vec<BitMinterms>,
}

pub fn translator(
    from: &CodingScheme,
    to: &CodingScheme,
    policy: HPolicy,
) -> Result<TranslatorSpec, SynthError> {
    check_policy(from, policy)?;
    let table = (0..(1u32 << from.width()))
        .map(|w| Ok(to.pole(from.decode_value(w, policy)?).value()))
        .collect::<Result<Vec<_>, SynthError>>()?;
    let minterms = minterms_of(&table, to.width());
    Ok(TranslatorSpec {
        from: from.clone(),
        to: to.clone(),
        policy,
        table,
        minterms,
    })
}

impl TranslatorSpec {
    pub fn from_scheme(&self) -> &CodingScheme {
        &self.from
    }

    pub fn to_scheme(&self) -> &CodingScheme {
        &self.to
    }

    pub fn policy(&self) -> HPolicy {
        self.policy
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn eval_word(&self, word: u32) -> u32 {
        self.table[word as usize]
    }

    pub fn eval(&self, c: Codeword) -> Codeword {
        Codeword::new(self.table[c.value() as usize], self.to.width()).expect("table holds poles")
    }

    pub fn minterm_lists(&self) -> &[BitMinterms] {
        &self.minterms
    }
}

/// `Σ(0, 2, 3)` style rendering of an index list.
pub struct IndexList<'a> {
    pub symbol: char,
    pub indices: &'a [u32],
}

impl fmt::Display for IndexList<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.symbol)?;
        for (i, v) in self.indices.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

pub fn sop(indices: &[u32]) -> IndexList<'_> {
    IndexList {
        symbol: 'Σ',
        indices,
    }
}

pub fn pos(indices: &[u32]) -> IndexList<'_> {
    IndexList {
        symbol: 'Π',
        indices,
    }
}

/// One line per output bit: `name_k = Σ(...) = Π(...)`.
pub fn minterms_text(name: &str, lists: &[BitMinterms]) -> String {
    let mut out = String::new();
    for m in lists {
        let _ = writeln!(out, "{name}_{} = {} = {}", m.bit, sop(&m.sop), pos(&m.pos));
    }
    out
}

/// CSV with columns `bit_index,form,indices`; indices are space separated.
pub fn minterms_csv(lists: &[BitMinterms]) -> String {
    let mut out = String::from("bit_index,form,indices\n");
    for m in lists {
        for (form, idx) in [("SOP", &m.sop), ("POS", &m.pos)] {
            let joined: Vec<String> = idx.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "{},{},{}", m.bit, form, joined.join(" "));
        }
    }
    out
}

/// Binary truth table listing: input bits, then output bits.
pub fn truth_table_text(in_width: u8, inputs: usize, out_width: u8, table: &[u32]) -> String {
    let mut out = String::new();
    for (idx, &word) in table.iter().enumerate() {
        let mut fields = Vec::with_capacity(inputs + 1);
        for k in 0..inputs {
            let shift = u32::from(in_width) * (inputs - 1 - k) as u32;
            let w = (idx as u32 >> shift) & ((1u32 << in_width) - 1);
            fields.push(format!("{:0w$b}", w, w = in_width as usize));
        }
        let _ = writeln!(
            out,
            "{} -> {:0w$b}",
            fields.join(" "),
            word,
            w = out_width as usize
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scheme::{build_scheme_values, enumerate_schemes};

    fn s(n: u8, a: u32, b: u32) -> CodingScheme {
        build_scheme_values(n, a, b).unwrap()
    }

    /// Cartesian-product oracle: `{a*2^n + b : a in A, b in B}`.
    fn product(n: u8, a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut v: Vec<u32> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| (x << n) | y))
            .collect();
        v.sort_unstable();
        v
    }

    const C0: [u32; 4] = [0, 2, 3, 6];
    const C1: [u32; 4] = [1, 4, 5, 7];

    #[test]
    fn table_rows_for_2_5() {
        let sc = s(3, 2, 5);
        let not = tolerant_gate(&sc, LogicOp::Not, HPolicy::Strict).unwrap();
        assert_eq!(not.eval_words(&[0b000]), 0b101);
        let or = tolerant_gate(&sc, LogicOp::Or, HPolicy::Strict).unwrap();
        assert_eq!(or.eval_words(&[0b000, 0b010]), 0b010);
        let and = tolerant_gate(&sc, LogicOp::And, HPolicy::Strict).unwrap();
        assert_eq!(and.eval_words(&[0b001, 0b001]), 0b101);
    }

    #[test]
    fn minterm_lists_for_2_5() {
        let sc = s(3, 2, 5);
        let not = tolerant_gate(&sc, LogicOp::Not, HPolicy::AsZero).unwrap();
        assert_eq!(not.minterm_lists()[0].sop, vec![0, 2, 3, 6]);
        assert_eq!(not.minterm_lists()[1].pos, vec![0, 2, 3, 6]);

        let or = tolerant_gate(&sc, LogicOp::Or, HPolicy::AsZero).unwrap();
        let c00 = product(3, &C0, &C0);
        assert_eq!(
            c00,
            vec![0, 2, 3, 6, 16, 18, 19, 22, 24, 26, 27, 30, 48, 50, 51, 54]
        );
        assert_eq!(or.minterm_lists()[1].sop, c00);
        assert_eq!(or.minterm_lists()[0].pos, c00);
        assert_eq!(or.minterm_lists()[2].pos, c00);

        let and = tolerant_gate(&sc, LogicOp::And, HPolicy::AsZero).unwrap();
        let c11 = product(3, &C1, &C1);
        assert_eq!(
            c11,
            vec![9, 12, 13, 15, 33, 36, 37, 39, 41, 44, 45, 47, 57, 60, 61, 63]
        );
        assert_eq!(and.minterm_lists()[0].sop, c11);
        assert_eq!(and.minterm_lists()[1].pos, c11);
        assert_eq!(and.minterm_lists()[2].sop, c11);
    }

    #[test]
    fn xor_synthesis_matches_cartesian_sets() {
        let sc = s(3, 2, 5);
        let xor = synthesize_function(&sc, TruthTable::from_bits("0110").unwrap(), HPolicy::AsZero)
            .unwrap();
        let ones = xor.input_set(true);
        assert_eq!(ones.len(), 32);
        assert!(ones.contains(&vec![0, 1]));
        assert!(ones.contains(&vec![7, 6]));
        assert!(!ones.contains(&vec![7, 7]));
        let mut expected = product(3, &C0, &C1);
        expected.extend(product(3, &C1, &C0));
        expected.sort_unstable();
        assert_eq!(xor.minterm_lists()[0].sop, expected);
        assert_eq!(&expected[28..], &[56, 58, 59, 62]);
        assert_eq!(xor.table(), tolerant_gate(&sc, LogicOp::Xor, HPolicy::AsZero).unwrap().table());
    }

    #[test]
    fn identity_is_transition() {
        let sc = s(3, 1, 6);
        let id = synthesize_function(&sc, TruthTable::from_bits("01").unwrap(), HPolicy::Strict)
            .unwrap();
        for c in Codeword::all(3).unwrap() {
            assert_eq!(Some(id.eval(&[c])), sc.transition(c).unwrap());
        }
    }

    #[test]
    fn strict_rejected_with_equidistant_codes() {
        let sc = s(3, 0, 3);
        assert!(matches!(
            tolerant_gate(&sc, LogicOp::And, HPolicy::Strict),
            Err(SynthError::StrictWithClassH { count: 4, .. })
        ));
        assert!(translator(&sc, &CodingScheme::conventional(), HPolicy::Strict).is_err());
        assert!(tolerant_gate(&sc, LogicOp::And, HPolicy::AsOne).is_ok());
    }

    #[test]
    fn translators() {
        let sc = s(3, 2, 5);
        let conv = CodingScheme::conventional();
        let down = translator(&sc, &conv, HPolicy::Strict).unwrap();
        assert_eq!(down.table(), &[0, 1, 0, 0, 1, 1, 0, 1]);
        assert_eq!(down.minterm_lists()[0].sop, vec![1, 4, 5, 7]);

        let up = translator(&conv, &sc, HPolicy::Strict).unwrap();
        assert_eq!(up.table(), &[0b010, 0b101]);
        // bits 1 and 3 follow a, bit 2 follows not a
        assert_eq!(up.minterm_lists()[0].sop, vec![1]);
        assert_eq!(up.minterm_lists()[1].sop, vec![0]);
        assert_eq!(up.minterm_lists()[2].sop, vec![1]);

        let same = translator(&sc, &sc, HPolicy::Strict).unwrap();
        for c in Codeword::all(3).unwrap() {
            assert_eq!(Some(same.eval(c)), sc.transition(c).unwrap());
        }
    }

    #[test]
    fn conventional_gates_are_plain_logic() {
        let conv = CodingScheme::conventional();
        let and = tolerant_gate(&conv, LogicOp::And, HPolicy::Strict).unwrap();
        let or = tolerant_gate(&conv, LogicOp::Or, HPolicy::Strict).unwrap();
        let not = tolerant_gate(&conv, LogicOp::Not, HPolicy::Strict).unwrap();
        assert_eq!(and.table(), &[0, 0, 0, 1]);
        assert_eq!(or.table(), &[0, 1, 1, 1]);
        assert_eq!(not.table(), &[1, 0]);
    }

    fn all_ops() -> Vec<LogicOp> {
        let mut ops = vec![LogicOp::And, LogicOp::Or, LogicOp::Not, LogicOp::Xor];
        for bits in 0..16u32 {
            let rows = (0..4).map(|i| (bits >> (3 - i)) & 1 == 1).collect();
            ops.push(LogicOp::Custom(TruthTable::new(2, rows).unwrap()));
        }
        for bits in 0..4u32 {
            let rows = (0..2).map(|i| (bits >> (1 - i)) & 1 == 1).collect();
            ops.push(LogicOp::Custom(TruthTable::new(1, rows).unwrap()));
        }
        ops
    }

    #[test]
    fn soundness_and_pole_outputs_exhaustive() {
        for n in 1..=4u8 {
            for sc in enumerate_schemes(n).unwrap().into_iter().filter(|s| s.class_h_is_empty()) {
                for op in all_ops() {
                    let g = tolerant_gate(&sc, op.clone(), HPolicy::Strict).unwrap();
                    let words = 1u32 << n;
                    let arity = op.arity();
                    let combos = if arity == 1 { words } else { words * words };
                    for idx in 0..combos {
                        let ins: Vec<u32> = if arity == 1 { vec![idx] } else { vec![idx / words, idx % words] };
                        let out = g.eval_words(&ins);
                        assert!(out == sc.pole0().value() || out == sc.pole1().value());
                        let logic: Vec<bool> = ins
                            .iter()
                            .map(|&w| sc.decode_value(w, HPolicy::Strict).unwrap())
                            .collect();
                        assert_eq!(out == sc.pole1().value(), op.eval(&logic));
                    }
                    for m in g.minterm_lists() {
                        assert_eq!(m.sop.len() + m.pos.len(), combos as usize);
                        let mut all: Vec<u32> = m.sop.iter().chain(&m.pos).copied().collect();
                        all.sort_unstable();
                        assert!(all.iter().copied().eq(0..combos));
                    }
                }
            }
        }
    }

    #[test]
    fn same_class_substitution_keeps_output() {
        for sc in enumerate_schemes(3).unwrap().into_iter().filter(|s| s.class_h_is_empty()) {
            for op in [LogicOp::And, LogicOp::Or, LogicOp::Xor] {
                let g = tolerant_gate(&sc, op, HPolicy::Strict).unwrap();
                for a in [false, true] {
                    for b in [false, true] {
                        let pa = sc.pole(a).value();
                        let pb = sc.pole(b).value();
                        let reference = g.eval_words(&[pa, pb]);
                        for fa in 0..8u32 {
                            if sc.decode_value(fa, HPolicy::Strict).unwrap() == a {
                                assert_eq!(g.eval_words(&[fa, pb]), reference);
                            }
                            if sc.decode_value(fa, HPolicy::Strict).unwrap() == b {
                                assert_eq!(g.eval_words(&[pa, fa]), reference);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn translator_round_trip_is_identity_on_poles() {
        let schemes = enumerate_schemes(3).unwrap();
        for a in schemes.iter().step_by(5) {
            for b in schemes.iter().step_by(7) {
                let ab = translator(a, b, HPolicy::AsZero).unwrap();
                let ba = translator(b, a, HPolicy::AsZero).unwrap();
                for logic in [false, true] {
                    let p = a.pole(logic);
                    assert_eq!(ba.eval(ab.eval(p)), p);
                }
            }
        }
    }

    #[test]
    fn text_and_csv_rendering() {
        let sc = s(3, 2, 5);
        let not = tolerant_gate(&sc, LogicOp::Not, HPolicy::AsZero).unwrap();
        let text = minterms_text("T_Not", not.minterm_lists());
        assert_eq!(
            text.lines().next().unwrap(),
            "T_Not_1 = Σ(0,2,3,6) = Π(1,4,5,7)"
        );
        let csv = minterms_csv(not.minterm_lists());
        assert!(csv.starts_with("bit_index,form,indices\n1,SOP,0 2 3 6\n1,POS,1 4 5 7\n"));
        let tt = truth_table_text(3, 1, 3, not.table());
        assert_eq!(tt.lines().next().unwrap(), "000 -> 101");
    }
}
