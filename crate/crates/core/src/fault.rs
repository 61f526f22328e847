// SPDX-License-Identifier: Apache-2.0

//! Seeded bit-flip fault injection at gate outputs.
//!
//! A faulty gate computes its word correctly, then each output bit flips
//! independently with the gate's probability; downstream gates read the
//! flipped word. Every random draw comes from a ChaCha stream keyed by
//! `(seed, trial, gate id)` or `(seed, trial, "inputs")`, so trials are
//! independent, parallel execution gives the same records, and netlists
//! compared at the same seed see the same input sequence.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::SimError;
use crate::metrics::{SweepPoint, SweepReport};
use crate::netlist::Netlist;

#[derive(Debug, Clone, PartialEq)]
pub struct FaultPlan {
    /// Flip probability for gates without an entry in `per_gate`.
    pub default_probability: f64,
    pub per_gate: BTreeMap<String, f64>,
    /// Gates that never flip (voters, output translators).
    pub excluded: BTreeSet<String>,
    pub seed: u64,
}

impl FaultPlan {
    /// Same probability on every gate.
    pub fn uniform(p: f64, seed: u64) -> Self {
        FaultPlan {
            default_probability: p,
            per_gate: BTreeMap::new(),
            excluded: BTreeSet::new(),
            seed,
        }
    }

    /// Faults on `gate` only.
    pub fn targeted(gate: &str, p: f64, seed: u64) -> Self {
        let mut plan = FaultPlan::uniform(0.0, seed);
        plan.per_gate.insert(gate.to_string(), p);
        plan
    }

    pub fn exclude(mut self, gate: &str) -> Self {
        self.excluded.insert(gate.to_string());
        self
    }

    /// Exclude every translator and majority voter of `netlist`.
    pub fn exclude_boundary(mut self, netlist: &Netlist) -> Self {
        for g in netlist.gates().iter().filter(|g| g.kind.is_boundary()) {
            self.excluded.insert(g.id.clone());
        }
        self
    }

    pub fn probability(&self, gate: &str) -> f64 {
        if self.excluded.contains(gate) {
            0.0
        } else {
            self.per_gate
                .get(gate)
                .copied()
                .unwrap_or(self.default_probability)
        }
    }

    /// Per-gate probabilities in gate order, after checking ranges and names.
    fn resolve(&self, netlist: &Netlist) -> Result<Vec<f64>, SimError> {
        let check = |what: &str, p: f64| {
            if (0.0..=1.0).contains(&p) {
                Ok(())
            } else {
                Err(SimError::Probability {
                    what: what.to_string(),
                    p,
                })
            }
        };
        check("default", self.default_probability)?;
        for (gate, &p) in &self.per_gate {
            check(gate, p)?;
        }
        for gate in self.per_gate.keys().chain(&self.excluded) {
            if netlist.gate_index(gate).is_none() {
                return Err(SimError::UnknownGate(gate.clone()));
            }
        }
        Ok(netlist
            .gates()
            .iter()
            .map(|g| self.probability(&g.id))
            .collect())
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// Seed of the stream for `(seed, trial, tag)`.
pub fn stream_key(seed: u64, trial: u64, tag: &str) -> u64 {
    splitmix64(splitmix64(seed ^ splitmix64(trial)) ^ fnv1a(tag))
}

fn stream(seed: u64, trial: u64, tag: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(stream_key(seed, trial, tag))
}

const INPUT_TAG: &str = "\0inputs";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InputSource {
    /// Trial `t` applies logic input pattern `t mod 2^k`.
    ExhaustiveCycle,
    /// Independent fair bits per input, keyed by `(seed, trial)`.
    #[default]
    SeededUniform,
}

/// Logic input values for one trial, first input first.
pub fn logic_inputs(source: InputSource, seed: u64, trial: u64, count: usize) -> Vec<bool> {
    match source {
        InputSource::ExhaustiveCycle => {
            let idx = if count >= 64 {
                trial
            } else {
                trial % (1u64 << count)
            };
            (0..count)
                .map(|i| (idx >> (count - 1 - i)) & 1 == 1)
                .collect()
        }
        InputSource::SeededUniform => {
            let mut rng = stream(seed, trial, INPUT_TAG);
            (0..count).map(|_| rng.gen::<bool>()).collect()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRecord {
    pub trial: u64,
    /// Primary input words, in input order.
    pub inputs: Vec<u32>,
    /// Fault-free value of every net.
    pub golden: Vec<u32>,
    pub faulty: Vec<u32>,
    /// Bits flipped at each net by injection (zero for primary inputs).
    pub injected: Vec<u8>,
    /// Every primary output decodes to its fault-free logic value.
    pub output_correct: bool,
}

impl TrialRecord {
    pub fn inserted_bits(&self) -> u64 {
        self.injected.iter().map(|&b| u64::from(b)).sum()
    }

    /// Bits of net `id` that differ from the fault-free value.
    pub fn mismatch_bits(&self, id: usize) -> u32 {
        (self.golden[id] ^ self.faulty[id]).count_ones()
    }
}

fn outputs_agree(netlist: &Netlist, golden: &[u32], faulty: &[u32]) -> bool {
    netlist.outputs().iter().all(|&o| {
        let want = netlist.decode_net(o, golden[o]);
        let got = netlist.decode_net(o, faulty[o]);
        got.is_some() && got == want
    })
}

fn run_one(
    netlist: &Netlist,
    inputs: &[u32],
    probabilities: &[f64],
    seed: u64,
    trial: u64,
) -> TrialRecord {
    let golden = netlist.evaluate_words(inputs);
    let mut injected = vec![0u8; netlist.nets().len()];
    let faulty = netlist.evaluate_words_with(inputs, |gi, word| {
        let p = probabilities[gi];
        if p <= 0.0 {
            return word;
        }
        let gate = &netlist.gates()[gi];
        let width = netlist.net(gate.output).width;
        let mut rng = stream(seed, trial, &gate.id);
        let mut flips = 0u32;
        for bit in 0..width {
            if rng.gen_bool(p) {
                flips |= 1 << (width - 1 - bit);
            }
        }
        injected[gate.output] = flips.count_ones() as u8;
        word ^ flips
    });
    let output_correct = outputs_agree(netlist, &golden, &faulty);
    TrialRecord {
        trial,
        inputs: inputs.to_vec(),
        golden,
        faulty,
        injected,
        output_correct,
    }
}

fn check_inputs(netlist: &Netlist, inputs: &[u32]) -> Result<(), SimError> {
    if inputs.len() != netlist.inputs().len() {
        let missing = netlist
            .inputs()
            .get(inputs.len())
            .map(|&id| netlist.net(id).name.clone())
            .unwrap_or_else(|| "<extra input>".into());
        return Err(crate::error::NetlistError::MissingInput { net: missing }.into());
    }
    for (&id, &v) in netlist.inputs().iter().zip(inputs) {
        let w = netlist.net(id).width;
        if u64::from(v) >= 1u64 << w {
            return Err(crate::error::NetlistError::InputWidth {
                net: netlist.net(id).name.clone(),
                expected: w,
                found: (32 - v.leading_zeros()) as u8,
            }
            .into());
        }
    }
    Ok(())
}

/// One faulty evaluation of `netlist` on raw input words.
pub fn inject_and_evaluate(
    netlist: &Netlist,
    inputs: &[u32],
    plan: &FaultPlan,
    trial: u64,
) -> Result<TrialRecord, SimError> {
    check_inputs(netlist, inputs)?;
    let probabilities = plan.resolve(netlist)?;
    Ok(run_one(netlist, inputs, &probabilities, plan.seed, trial))
}

/// Evaluate with fixed XOR masks applied to the named gates' outputs.
pub fn inject_forced(
    netlist: &Netlist,
    inputs: &[u32],
    flips: &[(&str, u32)],
) -> Result<TrialRecord, SimError> {
    check_inputs(netlist, inputs)?;
    let mut masks = vec![0u32; netlist.gates().len()];
    for (gate, mask) in flips {
        let gi = netlist
            .gate_index(gate)
            .ok_or_else(|| SimError::UnknownGate(gate.to_string()))?;
        masks[gi] ^= mask & crate::codeword::mask(netlist.net(netlist.gates()[gi].output).width);
    }
    let golden = netlist.evaluate_words(inputs);
    let mut injected = vec![0u8; netlist.nets().len()];
    let faulty = netlist.evaluate_words_with(inputs, |gi, word| {
        injected[netlist.gates()[gi].output] = masks[gi].count_ones() as u8;
        word ^ masks[gi]
    });
    let output_correct = outputs_agree(netlist, &golden, &faulty);
    Ok(TrialRecord {
        trial: 0,
        inputs: inputs.to_vec(),
        golden,
        faulty,
        injected,
        output_correct,
    })
}

/// Per-net histogram of trials by number of erroneous bits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorProfile {
    pub nets: Vec<String>,
    /// `counts[net][k - 1]`: trials where exactly `k` bits of the net were wrong.
    pub counts: Vec<Vec<u64>>,
    pub trials: u64,
}

impl ErrorProfile {
    fn new(netlist: &Netlist) -> Self {
        ErrorProfile {
            nets: netlist.nets().iter().map(|n| n.name.clone()).collect(),
            counts: netlist
                .nets()
                .iter()
                .map(|n| vec![0; n.width as usize])
                .collect(),
            trials: 0,
        }
    }

    fn add(&mut self, record: &TrialRecord) {
        self.trials += 1;
        for (id, counts) in self.counts.iter_mut().enumerate() {
            let k = record.mismatch_bits(id) as usize;
            if k > 0 {
                counts[k - 1] += 1;
            }
        }
    }

    pub fn net_counts(&self, net: &str) -> Option<&[u64]> {
        self.nets
            .iter()
            .position(|n| n == net)
            .map(|i| self.counts[i].as_slice())
    }

    /// Columns `net,errors_1bit,...,errors_Kbit,trials`, `K >= 3`.
    pub fn to_csv(&self) -> String {
        let k = self.counts.iter().map(Vec::len).max().unwrap_or(0).max(3);
        let mut out = String::from("net");
        for i in 1..=k {
            let _ = write!(out, ",errors_{i}bit");
        }
        out.push_str(",trials\n");
        for (net, counts) in self.nets.iter().zip(&self.counts) {
            out.push_str(net);
            for i in 0..k {
                let _ = write!(out, ",{}", counts.get(i).copied().unwrap_or(0));
            }
            let _ = writeln!(out, ",{}", self.trials);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrialRun {
    pub records: Vec<TrialRecord>,
    pub profile: ErrorProfile,
}

impl TrialRun {
    pub fn correct(&self) -> u64 {
        self.records.iter().filter(|r| r.output_correct).count() as u64
    }

    pub fn inserted_bits(&self) -> u64 {
        self.records.iter().map(TrialRecord::inserted_bits).sum()
    }
}

fn input_count_ok(netlist: &Netlist, source: InputSource) -> Result<(), SimError> {
    let k = netlist.inputs().len();
    if source == InputSource::ExhaustiveCycle && k > 32 {
        return Err(SimError::TooManyInputs(k));
    }
    Ok(())
}

/// `trials` seeded trials; inputs are logic values pole-encoded per net.
pub fn run_trials(
    netlist: &Netlist,
    plan: &FaultPlan,
    trials: u64,
    source: InputSource,
) -> Result<TrialRun, SimError> {
    if trials == 0 {
        return Err(SimError::NoTrials);
    }
    input_count_ok(netlist, source)?;
    let probabilities = plan.resolve(netlist)?;
    let k = netlist.inputs().len();
    let records: Vec<TrialRecord> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let inputs = netlist.encode_inputs(&logic_inputs(source, plan.seed, t, k));
            run_one(netlist, &inputs, &probabilities, plan.seed, t)
        })
        .collect();
    let mut profile = ErrorProfile::new(netlist);
    for r in &records {
        profile.add(r);
    }
    Ok(TrialRun { records, profile })
}

/// Columns `trial,net,golden_value,faulty_value,flipped_bits_injected,mismatch_bits`.
pub fn trial_dump_csv(netlist: &Netlist, records: &[TrialRecord]) -> String {
    let mut out =
        String::from("trial,net,golden_value,faulty_value,flipped_bits_injected,mismatch_bits\n");
    for r in records {
        for (id, net) in netlist.nets().iter().enumerate() {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                r.trial,
                net.name,
                r.golden[id],
                r.faulty[id],
                r.injected[id],
                r.mismatch_bits(id)
            );
        }
    }
    out
}

/// `0.01, 0.02, ..., 0.20`.
pub fn default_p_values() -> Vec<f64> {
    (1..=20).map(|k| f64::from(k) / 100.0).collect()
}

/// Inclusive arithmetic range, each value snapped to 12 decimals so that
/// e.g. the third step of `0.01:0.2:0.01` is exactly `0.03`.
pub fn p_range(start: f64, stop: f64, step: f64) -> Result<Vec<f64>, SimError> {
    let bad = |p: f64| SimError::Probability {
        what: "range".into(),
        p,
    };
    if !(0.0..=1.0).contains(&start) || !(0.0..=1.0).contains(&stop) || stop < start {
        return Err(bad(if (0.0..=1.0).contains(&start) { stop } else { start }));
    }
    if step.is_nan() || step <= 0.0 {
        return Err(bad(step));
    }
    let count = ((stop - start) / step + 1e-9).floor() as u64 + 1;
    Ok((0..count)
        .map(|i| ((start + i as f64 * step) * 1e12).round() / 1e12)
        .collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub p_values: Vec<f64>,
    pub trials: u64,
    pub seed: u64,
    pub input_source: InputSource,
    /// Let translators and voters fail too.
    pub boundary_faults: bool,
    /// When set, only these gates fail (in netlists that have them).
    pub target_gates: Option<Vec<String>>,
    /// Gates that never fail, in addition to the boundary.
    pub excluded: Vec<String>,
}

impl SweepConfig {
    pub fn new(p_values: Vec<f64>, trials: u64, seed: u64) -> Self {
        SweepConfig {
            p_values,
            trials,
            seed,
            input_source: InputSource::default(),
            boundary_faults: false,
            target_gates: None,
            excluded: Vec::new(),
        }
    }

    /// Fault plan for `netlist` at probability `p`.
    pub fn plan_for(&self, netlist: &Netlist, p: f64) -> FaultPlan {
        let mut plan = match &self.target_gates {
            Some(targets) => {
                let mut plan = FaultPlan::uniform(0.0, self.seed);
                for g in targets.iter().filter(|g| netlist.gate_index(g).is_some()) {
                    plan.per_gate.insert(g.clone(), p);
                }
                plan
            }
            None => FaultPlan::uniform(p, self.seed),
        };
        if !self.boundary_faults {
            plan = plan.exclude_boundary(netlist);
        }
        for g in self.excluded.iter().filter(|g| netlist.gate_index(g).is_some()) {
            plan.excluded.insert(g.clone());
        }
        plan
    }
}

/// Every netlist must have the same input and output counts and the same
/// fault-free logic function.
pub fn check_interfaces(netlists: &[(String, Netlist)]) -> Result<(), SimError> {
    let Some((ref_label, reference)) = netlists.first() else {
        return Err(SimError::NoNetlists);
    };
    let k = reference.inputs().len();
    for (label, n) in &netlists[1..] {
        let mismatch = |reason: String| SimError::InterfaceMismatch {
            label: label.clone(),
            reference: ref_label.clone(),
            reason,
        };
        if n.inputs().len() != k {
            return Err(mismatch(format!(
                "{} inputs versus {k}",
                n.inputs().len()
            )));
        }
        if n.outputs().len() != reference.outputs().len() {
            return Err(mismatch(format!(
                "{} outputs versus {}",
                n.outputs().len(),
                reference.outputs().len()
            )));
        }
        if k <= 16 {
            for idx in 0..(1u32 << k) {
                let logic: Vec<bool> = (0..k).map(|i| (idx >> (k - 1 - i)) & 1 == 1).collect();
                if n.logic_eval(&logic) != reference.logic_eval(&logic) {
                    return Err(mismatch(format!("outputs differ on input pattern {idx}")));
                }
            }
        }
    }
    Ok(())
}

/// Availability and tolerance rate for every (netlist, p) pair. All
/// netlists see the same per-trial input stream.
pub fn sweep(netlists: &[(String, Netlist)], config: &SweepConfig) -> Result<SweepReport, SimError> {
    if config.p_values.is_empty() {
        return Err(SimError::EmptySweep);
    }
    if config.trials == 0 {
        return Err(SimError::NoTrials);
    }
    check_interfaces(netlists)?;
    let mut points = Vec::with_capacity(netlists.len() * config.p_values.len());
    for (label, netlist) in netlists {
        input_count_ok(netlist, config.input_source)?;
        let k = netlist.inputs().len();
        for &p in &config.p_values {
            let plan = config.plan_for(netlist, p);
            let probabilities = plan.resolve(netlist)?;
            let (correct, inserted) = (0..config.trials)
                .into_par_iter()
                .map(|t| {
                    let logic = logic_inputs(config.input_source, config.seed, t, k);
                    let inputs = netlist.encode_inputs(&logic);
                    let r = run_one(netlist, &inputs, &probabilities, config.seed, t);
                    (u64::from(r.output_correct), r.inserted_bits())
                })
                .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
            points.push(SweepPoint {
                label: label.clone(),
                p,
                trials: config.trials,
                correct,
                incorrect: config.trials - correct,
                inserted_error_bits: inserted,
            });
        }
    }
    Ok(SweepReport::new(points).expect("counts are consistent by construction"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::netlist::fixtures;

    fn conv() -> Netlist {
        fixtures::by_name("xor_conventional").unwrap()
    }

    fn tol() -> Netlist {
        fixtures::by_name("xor_(2,5)_3").unwrap()
    }

    #[test]
    fn zero_probability_is_fault_free() {
        let n = tol();
        let plan = FaultPlan::uniform(0.0, 1);
        for t in 0..16 {
            let inputs = n.encode_inputs(&logic_inputs(InputSource::ExhaustiveCycle, 1, t, 2));
            let r = inject_and_evaluate(&n, &inputs, &plan, t).unwrap();
            assert_eq!(r.golden, r.faulty);
            assert!(r.output_correct);
            assert_eq!(r.inserted_bits(), 0);
        }
    }

    #[test]
    fn certain_flip_complements_not_gate() {
        let n = crate::netlist::parse_netlist("input x\noutput y\ngate g NOT y x\n").unwrap();
        let plan = FaultPlan::targeted("g", 1.0, 99);
        for t in 0..20 {
            let x = (t % 2) as u32;
            let r = inject_and_evaluate(&n, &[x], &plan, t).unwrap();
            let y = n.net_id("y").unwrap();
            assert_eq!(r.faulty[y], x);
            assert_eq!(r.golden[y], 1 - x);
            assert!(!r.output_correct);
        }
    }

    #[test]
    fn plan_validation() {
        let n = conv();
        assert!(matches!(
            inject_and_evaluate(&n, &[0, 0], &FaultPlan::uniform(1.5, 0), 0),
            Err(SimError::Probability { .. })
        ));
        assert!(matches!(
            inject_and_evaluate(&n, &[0, 0], &FaultPlan::targeted("nope", 0.1, 0), 0),
            Err(SimError::UnknownGate(_))
        ));
        assert!(inject_and_evaluate(&n, &[0], &FaultPlan::uniform(0.1, 0), 0).is_err());
        assert!(inject_and_evaluate(&n, &[0, 2], &FaultPlan::uniform(0.1, 0), 0).is_err());
        assert!(matches!(
            run_trials(&n, &FaultPlan::uniform(0.1, 0), 0, InputSource::SeededUniform),
            Err(SimError::NoTrials)
        ));
    }

    #[test]
    fn excluded_gates_never_flip() {
        let n = tol();
        let plan = FaultPlan::targeted("tr_net7", 1.0, 5).exclude("tr_net7");
        let run = run_trials(&n, &plan, 200, InputSource::SeededUniform).unwrap();
        assert!(run.records.iter().all(|r| r.golden == r.faulty && r.output_correct));
        assert_eq!(run.inserted_bits(), 0);
    }

    #[test]
    fn single_trial_zero_p_profile_is_empty() {
        let run = run_trials(&tol(), &FaultPlan::uniform(0.0, 3), 1, InputSource::SeededUniform)
            .unwrap();
        assert_eq!(run.profile.trials, 1);
        assert!(run.profile.counts.iter().flatten().all(|&c| c == 0));
    }

    #[test]
    fn determinism_and_thread_independence() {
        let n = tol();
        let plan = FaultPlan::uniform(0.1, 42).exclude_boundary(&n);
        let a = run_trials(&n, &plan, 500, InputSource::SeededUniform).unwrap();
        let b = run_trials(&n, &plan, 500, InputSource::SeededUniform).unwrap();
        assert_eq!(a, b);
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| run_trials(&n, &plan, 500, InputSource::SeededUniform).unwrap());
        assert_eq!(a, single);
        let other = run_trials(&n, &FaultPlan { seed: 43, ..plan.clone() }, 500, InputSource::SeededUniform)
            .unwrap();
        assert_ne!(a.records, other.records);
    }

    #[test]
    fn input_streams_are_shared_across_netlists() {
        for t in 0..50 {
            let a = logic_inputs(InputSource::SeededUniform, 7, t, 2);
            assert_eq!(a, logic_inputs(InputSource::SeededUniform, 7, t, 2));
        }
        let cyc: Vec<Vec<bool>> = (0..5).map(|t| logic_inputs(InputSource::ExhaustiveCycle, 0, t, 2)).collect();
        assert_eq!(cyc[0], vec![false, false]);
        assert_eq!(cyc[1], vec![false, true]);
        assert_eq!(cyc[3], vec![true, true]);
        assert_eq!(cyc[4], cyc[0]);
    }

    #[test]
    fn stream_keys_separate_gates_and_trials() {
        let k = stream_key(1, 2, "g_net3");
        assert_ne!(k, stream_key(1, 2, "g_net4"));
        assert_ne!(k, stream_key(1, 3, "g_net3"));
        assert_ne!(k, stream_key(2, 2, "g_net3"));
        assert_eq!(k, stream_key(1, 2, "g_net3"));
    }

    #[test]
    fn injected_bit_mean_within_binomial_bounds() {
        let n = tol();
        let p = 0.05;
        let plan = FaultPlan::uniform(p, 11).exclude_boundary(&n);
        let trials = 10_000u64;
        let run = run_trials(&n, &plan, trials, InputSource::SeededUniform).unwrap();
        // five tolerant gates, three bits each
        let bits = 15.0 * trials as f64;
        let mean = bits * p;
        let sigma = (bits * p * (1.0 - p)).sqrt();
        let got = run.inserted_bits() as f64;
        assert!((got - mean).abs() < 5.0 * sigma, "{got} vs {mean} ± {sigma}");
    }

    #[test]
    fn p_ranges() {
        let r = p_range(0.01, 0.2, 0.01).unwrap();
        assert_eq!(r, default_p_values());
        assert_eq!(r[2], 0.03);
        assert_eq!(p_range(0.005, 0.005, 0.01).unwrap(), vec![0.005]);
        assert!(p_range(0.2, 0.1, 0.01).is_err());
        assert!(p_range(0.1, 0.2, 0.0).is_err());
        assert!(p_range(-0.1, 0.2, 0.1).is_err());
    }

    #[test]
    fn sweep_rejects_empty_and_mismatched() {
        let set = vec![("tol".to_string(), tol()), ("conv".to_string(), conv())];
        assert!(matches!(sweep(&set, &SweepConfig::new(vec![], 10, 0)), Err(SimError::EmptySweep)));
        let not = crate::netlist::parse_netlist("input x\ninput y\noutput z\ngate g AND z x y\n").unwrap();
        let bad = vec![("conv".to_string(), conv()), ("and".to_string(), not)];
        assert!(matches!(
            sweep(&bad, &SweepConfig::new(vec![0.1], 10, 0)),
            Err(SimError::InterfaceMismatch { .. })
        ));
        let one = crate::netlist::parse_netlist("input x\noutput y\ngate g NOT y x\n").unwrap();
        let bad = vec![("conv".to_string(), conv()), ("not".to_string(), one)];
        assert!(sweep(&bad, &SweepConfig::new(vec![0.1], 10, 0)).is_err());
    }

    #[test]
    fn sweep_zero_point_is_fully_available() {
        let set = vec![
            ("tol".to_string(), tol()),
            ("conv".to_string(), conv()),
            ("tmr".to_string(), fixtures::by_name("xor_tmr").unwrap()),
        ];
        let report = sweep(&set, &SweepConfig::new(vec![0.0, 0.1], 200, 9)).unwrap();
        assert_eq!(report.points.len(), 6);
        for pt in report.points.iter().filter(|p| p.p == 0.0) {
            assert_eq!(pt.correct, pt.trials);
            assert_eq!(pt.inserted_error_bits, 0);
            assert_eq!(pt.tolerance_rate(), None);
        }
        assert_eq!(report, sweep(&set, &SweepConfig::new(vec![0.0, 0.1], 200, 9)).unwrap());
    }

    #[test]
    fn dump_and_profile_csv_shapes() {
        let n = tol();
        let run = run_trials(&n, &FaultPlan::targeted("g_net3", 0.3, 1), 4, InputSource::ExhaustiveCycle)
            .unwrap();
        let dump = trial_dump_csv(&n, &run.records);
        assert_eq!(dump.lines().count(), 1 + 4 * n.nets().len());
        let profile = run.profile.to_csv();
        assert!(profile.starts_with("net,errors_1bit,errors_2bit,errors_3bit,trials\n"));
        assert_eq!(profile.lines().count(), 1 + n.nets().len());
    }
}
