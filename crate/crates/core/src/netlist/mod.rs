// SPDX-License-Identifier: Apache-2.0

//! Combinational gate netlists.
//!
//! Nets carry words of width 1 (conventional) or `n` (tolerant). Gates are
//! kept in declaration order; evaluation walks a topological order fixed at
//! build time.

mod text;
mod transform;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use crate::codeword::{mask, Codeword};
use crate::error::{Location, NetlistError};
use crate::scheme::{ClassLabel, CodingScheme, HPolicy};
use crate::synth::{TolerantGateSpec, TranslatorSpec};

pub use text::{parse_netlist, serialize_netlist};
pub use transform::{build_nmr, substitute, SubstituteOptions};

pub type NetId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Net {
    pub name: String,
    pub width: u8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GateKind {
    ConvAnd,
    ConvOr,
    ConvNot,
    Tolerant(Arc<TolerantGateSpec>),
    Translator(Arc<TranslatorSpec>),
    /// Per-bit majority over an odd number of equal-width inputs.
    MajorityVoter { fan_in: usize },
}

impl GateKind {
    pub fn is_conventional(&self) -> bool {
        matches!(self, GateKind::ConvAnd | GateKind::ConvOr | GateKind::ConvNot)
    }

    /// Gates that sit on the boundary of a design: translators and voters.
    pub fn is_boundary(&self) -> bool {
        matches!(self, GateKind::Translator(_) | GateKind::MajorityVoter { .. })
    }

    fn arity(&self) -> Option<usize> {
        match self {
            GateKind::ConvAnd | GateKind::ConvOr => Some(2),
            GateKind::ConvNot | GateKind::Translator(_) => Some(1),
            GateKind::Tolerant(spec) => Some(spec.arity()),
            GateKind::MajorityVoter { fan_in } => Some(*fan_in),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gate {
    pub id: String,
    pub kind: GateKind,
    pub inputs: Vec<NetId>,
    pub output: NetId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Netlist {
    width: u8,
    scheme: Option<CodingScheme>,
    policy: HPolicy,
    nets: Vec<Net>,
    inputs: Vec<NetId>,
    outputs: Vec<NetId>,
    gates: Vec<Gate>,
    order: Vec<usize>,
}

impl Netlist {
    pub fn width(&self) -> u8 {
        self.width
    }

    pub fn scheme(&self) -> Option<&CodingScheme> {
        self.scheme.as_ref()
    }

    pub fn policy(&self) -> HPolicy {
        self.policy
    }

    pub fn nets(&self) -> &[Net] {
        &self.nets
    }

    pub fn net(&self, id: NetId) -> &Net {
        &self.nets[id]
    }

    pub fn net_id(&self, name: &str) -> Option<NetId> {
        self.nets.iter().position(|n| n.name == name)
    }

    pub fn inputs(&self) -> &[NetId] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[NetId] {
        &self.outputs
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn gate_index(&self, id: &str) -> Option<usize> {
        self.gates.iter().position(|g| g.id == id)
    }

    /// Gate indices in evaluation order.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// True when every gate is a conventional 1-bit AND/OR/NOT.
    pub fn is_conventional(&self) -> bool {
        self.width == 1 && self.gates.iter().all(|g| g.kind.is_conventional())
    }

    /// Evaluate on raw input words (in input order), passing every gate
    /// result through `hook(gate_index, word)` before it reaches the net.
    pub fn evaluate_words_with<F>(&self, inputs: &[u32], mut hook: F) -> Vec<u32>
    where
        F: FnMut(usize, u32) -> u32,
    {
        let mut values = vec![0u32; self.nets.len()];
        for (&net, &v) in self.inputs.iter().zip(inputs) {
            values[net] = v & mask(self.nets[net].width);
        }
        for &gi in &self.order {
            let gate = &self.gates[gi];
            let word = self.gate_word(gate, &values);
            let out_mask = mask(self.nets[gate.output].width);
            values[gate.output] = hook(gi, word) & out_mask;
        }
        values
    }

    pub fn evaluate_words(&self, inputs: &[u32]) -> Vec<u32> {
        self.evaluate_words_with(inputs, |_, w| w)
    }

    fn gate_word(&self, gate: &Gate, values: &[u32]) -> u32 {
        let arg = |k: usize| values[gate.inputs[k]];
        match &gate.kind {
            GateKind::ConvAnd => arg(0) & arg(1) & 1,
            GateKind::ConvOr => (arg(0) | arg(1)) & 1,
            GateKind::ConvNot => !arg(0) & 1,
            GateKind::Tolerant(spec) => {
                if spec.arity() == 1 {
                    spec.eval_words(&[arg(0)])
                } else {
                    spec.eval_words(&[arg(0), arg(1)])
                }
            }
            GateKind::Translator(spec) => spec.eval_word(arg(0)),
            GateKind::MajorityVoter { fan_in } => {
                let width = self.nets[gate.output].width;
                let mut out = 0u32;
                for bit in 0..width {
                    let ones = gate
                        .inputs
                        .iter()
                        .filter(|&&n| (values[n] >> bit) & 1 == 1)
                        .count();
                    if ones * 2 > *fan_in {
                        out |= 1 << bit;
                    }
                }
                out
            }
        }
    }

    /// Evaluate from named input words; returns every net's value.
    pub fn evaluate(
        &self,
        assignment: &BTreeMap<String, Codeword>,
    ) -> Result<BTreeMap<String, Codeword>, NetlistError> {
        let mut words = Vec::with_capacity(self.inputs.len());
        for &id in &self.inputs {
            let net = &self.nets[id];
            let value = assignment
                .get(&net.name)
                .ok_or_else(|| NetlistError::MissingInput {
                    net: net.name.clone(),
                })?;
            if value.width() != net.width {
                return Err(NetlistError::InputWidth {
                    net: net.name.clone(),
                    expected: net.width,
                    found: value.width(),
                });
            }
            words.push(value.value());
        }
        let values = self.evaluate_words(&words);
        Ok(self
            .nets
            .iter()
            .zip(values)
            .map(|(net, v)| {
                (
                    net.name.clone(),
                    Codeword::new(v, net.width).expect("masked to width"),
                )
            })
            .collect())
    }

    fn coding_for(&self, width: u8) -> Option<&CodingScheme> {
        self.scheme.as_ref().filter(|s| s.width() == width)
    }

    /// Encode logic values for the primary inputs: 1-bit inputs carry the
    /// bit, wider inputs carry the scheme pole.
    pub fn encode_inputs(&self, logic: &[bool]) -> Vec<u32> {
        self.inputs
            .iter()
            .zip(logic)
            .map(|(&id, &bit)| match self.coding_for(self.nets[id].width) {
                Some(s) => s.pole(bit).value(),
                None => u32::from(bit),
            })
            .collect()
    }

    /// Logic value of a word on net `id`; `None` when it is equidistant.
    pub fn decode_net(&self, id: NetId, word: u32) -> Option<bool> {
        match self.coding_for(self.nets[id].width) {
            Some(s) => match s.class_of(word) {
                ClassLabel::Class0 => Some(false),
                ClassLabel::Class1 => Some(true),
                ClassLabel::ClassH => None,
            },
            None => Some(word & 1 == 1),
        }
    }

    /// Fault-free logic function: decoded outputs for pole-coded inputs.
    pub fn logic_eval(&self, logic: &[bool]) -> Vec<Option<bool>> {
        let values = self.evaluate_words(&self.encode_inputs(logic));
        self.outputs
            .iter()
            .map(|&o| self.decode_net(o, values[o]))
            .collect()
    }
}

/// Assembles a [`Netlist`] and checks drivers, widths and acyclicity.
#[derive(Debug, Clone)]
pub struct NetlistBuilder {
    width: u8,
    scheme: Option<CodingScheme>,
    policy: HPolicy,
    inputs: Vec<(String, Option<u8>, Location)>,
    outputs: Vec<(String, Location)>,
    gates: Vec<(String, GateKind, String, Vec<String>, Location)>,
}

impl NetlistBuilder {
    pub fn new(width: u8) -> Self {
        NetlistBuilder {
            width,
            scheme: None,
            policy: HPolicy::default(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            gates: Vec::new(),
        }
    }

    pub fn scheme(&mut self, scheme: CodingScheme) -> &mut Self {
        self.scheme = Some(scheme);
        self
    }

    pub fn policy(&mut self, policy: HPolicy) -> &mut Self {
        self.policy = policy;
        self
    }

    pub fn input(&mut self, name: &str) -> &mut Self {
        self.inputs.push((name.to_string(), None, Location::default()));
        self
    }

    pub fn input_with_width(&mut self, name: &str, width: u8) -> &mut Self {
        self.inputs
            .push((name.to_string(), Some(width), Location::default()));
        self
    }

    pub(crate) fn input_at(&mut self, name: &str, width: Option<u8>, at: Location) -> &mut Self {
        self.inputs.push((name.to_string(), width, at));
        self
    }

    pub fn output(&mut self, name: &str) -> &mut Self {
        self.outputs.push((name.to_string(), Location::default()));
        self
    }

    pub(crate) fn output_at(&mut self, name: &str, at: Location) -> &mut Self {
        self.outputs.push((name.to_string(), at));
        self
    }

    pub fn gate(&mut self, id: &str, kind: GateKind, output: &str, inputs: &[&str]) -> &mut Self {
        self.gate_at(id, kind, output, inputs, Location::default())
    }

    pub(crate) fn gate_at(
        &mut self,
        id: &str,
        kind: GateKind,
        output: &str,
        inputs: &[&str],
        at: Location,
    ) -> &mut Self {
        self.gates.push((
            id.to_string(),
            kind,
            output.to_string(),
            inputs.iter().map(|s| s.to_string()).collect(),
            at,
        ));
        self
    }

    pub fn build(&self) -> Result<Netlist, NetlistError> {
        if self.outputs.is_empty() {
            return Err(NetlistError::NoOutputs);
        }
        let mut nets: Vec<Net> = Vec::new();
        let mut index: HashMap<String, NetId> = HashMap::new();
        let mut intern = |name: &str, nets: &mut Vec<Net>| -> NetId {
            *index.entry(name.to_string()).or_insert_with(|| {
                nets.push(Net {
                    name: name.to_string(),
                    width: 0,
                });
                nets.len() - 1
            })
        };

        // driver: None = primary input, Some(g) = gate g
        let mut driver: HashMap<NetId, Option<usize>> = HashMap::new();
        let mut inputs = Vec::new();
        for (name, width, at) in &self.inputs {
            let id = intern(name, &mut nets);
            if driver.insert(id, None).is_some() {
                return Err(NetlistError::MultipleDrivers {
                    at: *at,
                    net: name.clone(),
                });
            }
            let w = width.unwrap_or(self.width);
            crate::codeword::check_width(w).map_err(|source| NetlistError::Coding { at: *at, source })?;
            nets[id].width = w;
            inputs.push(id);
        }

        let mut gates = Vec::with_capacity(self.gates.len());
        let mut seen_ids: HashMap<&str, ()> = HashMap::new();
        for (gi, (id, kind, out, ins, at)) in self.gates.iter().enumerate() {
            if seen_ids.insert(id.as_str(), ()).is_some() {
                return Err(NetlistError::DuplicateGate {
                    at: *at,
                    id: id.clone(),
                });
            }
            if let GateKind::MajorityVoter { fan_in } = kind {
                if *fan_in != ins.len() || fan_in % 2 == 0 {
                    return Err(NetlistError::Arity {
                        at: *at,
                        gate: id.clone(),
                        expected: "an odd number of".into(),
                        found: ins.len(),
                    });
                }
            }
            if let Some(expected) = kind.arity() {
                if expected != ins.len() {
                    return Err(NetlistError::Arity {
                        at: *at,
                        gate: id.clone(),
                        expected: expected.to_string(),
                        found: ins.len(),
                    });
                }
            }
            let output = intern(out, &mut nets);
            if driver.insert(output, Some(gi)).is_some() {
                return Err(NetlistError::MultipleDrivers {
                    at: *at,
                    net: out.clone(),
                });
            }
            let inputs = ins.iter().map(|n| intern(n, &mut nets)).collect();
            gates.push(Gate {
                id: id.clone(),
                kind: kind.clone(),
                inputs,
                output,
            });
        }

        let mut outputs = Vec::new();
        for (name, _) in &self.outputs {
            let id = intern(name, &mut nets);
            outputs.push(id);
        }

        for (id, net) in nets.iter().enumerate() {
            if !driver.contains_key(&id) {
                return Err(NetlistError::UndrivenNet {
                    net: net.name.clone(),
                });
            }
        }

        // Kahn's algorithm, seeded in declaration order
        let mut pending: Vec<usize> = gates
            .iter()
            .map(|g| {
                g.inputs
                    .iter()
                    .filter(|n| driver[n].is_some())
                    .count()
            })
            .collect();
        let mut readers: Vec<Vec<usize>> = vec![Vec::new(); nets.len()];
        for (gi, g) in gates.iter().enumerate() {
            for &n in &g.inputs {
                readers[n].push(gi);
            }
        }
        let mut queue: VecDeque<usize> = (0..gates.len()).filter(|&g| pending[g] == 0).collect();
        let mut order = Vec::with_capacity(gates.len());
        while let Some(gi) = queue.pop_front() {
            order.push(gi);
            for &r in &readers[gates[gi].output] {
                pending[r] -= 1;
                if pending[r] == 0 {
                    queue.push_back(r);
                }
            }
        }
        if order.len() != gates.len() {
            let stuck = (0..gates.len()).find(|g| pending[*g] > 0).expect("cycle member");
            return Err(NetlistError::Cycle {
                gate: gates[stuck].id.clone(),
            });
        }

        for &gi in &order {
            let gate = &gates[gi];
            let at = self.gates[gi].4;
            let expect = |net: NetId, expected: u8, nets: &[Net]| {
                if nets[net].width != expected {
                    Err(NetlistError::WidthMismatch {
                        at,
                        gate: gate.id.clone(),
                        net: nets[net].name.clone(),
                        expected,
                        found: nets[net].width,
                    })
                } else {
                    Ok(())
                }
            };
            let (in_width, out_width) = match &gate.kind {
                GateKind::ConvAnd | GateKind::ConvOr | GateKind::ConvNot => (1, 1),
                GateKind::Tolerant(spec) => (spec.scheme().width(), spec.scheme().width()),
                GateKind::Translator(spec) => {
                    (spec.from_scheme().width(), spec.to_scheme().width())
                }
                GateKind::MajorityVoter { .. } => {
                    let w = nets[gate.inputs[0]].width;
                    (w, w)
                }
            };
            for &n in &gate.inputs {
                expect(n, in_width, &nets)?;
            }
            nets[gate.output].width = out_width;
        }

        let netlist = Netlist {
            width: self.width,
            scheme: self.scheme.clone(),
            policy: self.policy,
            nets,
            inputs,
            outputs,
            gates,
            order,
        };
        for &id in netlist.inputs.iter().chain(&netlist.outputs) {
            let w = netlist.nets[id].width;
            if w != 1 && netlist.coding_for(w).is_none() {
                return Err(NetlistError::InputCoding {
                    net: netlist.nets[id].name.clone(),
                    width: w,
                });
            }
        }
        Ok(netlist)
    }
}

/// Shipped example netlists.
pub mod fixtures {
    use super::{parse_netlist, Netlist};

    pub const XOR_CONVENTIONAL: &str = include_str!("../../fixtures/xor_conventional.net");
    pub const XOR_2_5_3: &str = include_str!("../../fixtures/xor_(2,5)_3.net");
    pub const XOR_TMR: &str = include_str!("../../fixtures/xor_tmr.net");
    pub const XOR_5MR: &str = include_str!("../../fixtures/xor_5mr.net");

    /// Fixture names accepted by [`by_name`].
    pub const NAMES: [&str; 4] = ["xor_conventional", "xor_(2,5)_3", "xor_tmr", "xor_5mr"];

    pub fn source(name: &str) -> Option<&'static str> {
        match name {
            "xor_conventional" => Some(XOR_CONVENTIONAL),
            "xor_(2,5)_3" | "xor_tolerant" => Some(XOR_2_5_3),
            "xor_tmr" => Some(XOR_TMR),
            "xor_5mr" => Some(XOR_5MR),
            _ => None,
        }
    }

    pub fn by_name(name: &str) -> Option<Netlist> {
        source(name).map(|text| parse_netlist(text).expect("shipped fixtures parse"))
    }
}
