// SPDX-License-Identifier: Apache-2.0

use ftlogic::fault::{check_interfaces, logic_inputs, trial_dump_csv};
use ftlogic::netlist::fixtures;
use ftlogic::{
    build_nmr, build_scheme, inject_and_evaluate, inject_forced, run_trials, substitute, sweep,
    Codeword, FaultPlan, GateKind, HPolicy, InputSource, Netlist, SimError, SubstituteOptions,
    SweepConfig,
};
use proptest::prelude::*;

fn fixture(name: &str) -> Netlist {
    fixtures::by_name(name).unwrap()
}

#[test]
fn net3_error_profile_snapshot() {
    let n = fixture("xor_(2,5)_3");
    let plan = FaultPlan::targeted("g_net3", 0.005, 2024).exclude_boundary(&n);
    let run = run_trials(&n, &plan, 1000, InputSource::SeededUniform).unwrap();
    let expected = "\
net,errors_1bit,errors_2bit,errors_3bit,trials
a,0,0,0,1000
b,0,0,0,1000
net3,14,0,0,1000
net4,0,0,0,1000
net5,0,0,0,1000
net6,0,0,0,1000
net7,0,0,0,1000
f_net7,0,0,0,1000
";
    assert_eq!(run.profile.to_csv(), expected);
    assert_eq!(run.correct(), 1000);
    assert_eq!(run.inserted_bits(), 14);
}

#[test]
fn higher_probability_stand_in_shows_multi_bit_errors() {
    let n = fixture("xor_(2,5)_3");
    let plan = FaultPlan::targeted("g_net3", 0.05, 2024).exclude_boundary(&n);
    let run = run_trials(&n, &plan, 1000, InputSource::SeededUniform).unwrap();
    let net3 = run.profile.net_counts("net3").unwrap();
    assert!(net3[0] > 0 && net3[1] > 0);
    // only double flips at net3 can leak past the next gate
    let leaked = 1000 - run.correct();
    assert!(leaked <= net3[1] + net3[2]);
}

#[test]
fn every_interior_single_flip_is_masked_under_each_complement_scheme() {
    let conv = fixture("xor_conventional");
    for p in Codeword::all(3).unwrap() {
        let sc = build_scheme(3, p, p.complement()).unwrap();
        let t = substitute(&conv, &sc, HPolicy::AsZero, SubstituteOptions::default()).unwrap();
        let tolerant: Vec<String> = t
            .gates()
            .iter()
            .filter(|g| matches!(g.kind, GateKind::Tolerant(_)))
            .map(|g| g.id.clone())
            .collect();
        for a in 0..8 {
            for b in 0..8 {
                for g in &tolerant {
                    for bit in 0..3 {
                        let r = inject_forced(&t, &[a, b], &[(g, 1 << bit)]).unwrap();
                        assert!(r.output_correct, "{sc} {g} bit {bit} ({a},{b})");
                    }
                }
            }
        }
    }
}

#[test]
fn two_flips_at_one_gate_can_defeat_masking() {
    let n = fixture("xor_(2,5)_3");
    let last = "g_net7";
    let broken = (0..8)
        .flat_map(|a| (0..8).map(move |b| (a, b)))
        .filter(|&(a, b)| !inject_forced(&n, &[a, b], &[(last, 0b011)]).unwrap().output_correct)
        .count();
    assert!(broken > 0);
}

#[test]
fn tmr_masks_any_single_copy_failure() {
    let tmr = fixture("xor_tmr");
    for a in 0..2 {
        for b in 0..2 {
            for k in 1..=3 {
                let r = inject_forced(&tmr, &[a, b], &[(&format!("g_net7_m{k}"), 1)]).unwrap();
                assert!(r.output_correct);
            }
            let r = inject_forced(&tmr, &[a, b], &[("g_net7_m1", 1), ("g_net7_m2", 1)]).unwrap();
            assert!(!r.output_correct);
        }
    }
}

#[test]
fn paired_sweep_tolerant_dominates_conventional() {
    let set = vec![
        ("tol".to_string(), fixture("xor_(2,5)_3")),
        ("conv".to_string(), fixture("xor_conventional")),
    ];
    let report = sweep(&set, &SweepConfig::new(ftlogic::default_p_values(), 10_000, 3)).unwrap();
    assert_eq!(report.points.len(), 40);
    for p in ftlogic::default_p_values() {
        let tol = report.point("tol", p).unwrap();
        let conv = report.point("conv", p).unwrap();
        assert!(tol.correct >= conv.correct, "p={p}");
    }
}

#[test]
fn availability_decreases_from_low_to_high_p() {
    let set = vec![
        ("tol".to_string(), fixture("xor_(2,5)_3")),
        ("conv".to_string(), fixture("xor_conventional")),
        ("tmr".to_string(), fixture("xor_tmr")),
        ("5mr".to_string(), fixture("xor_5mr")),
    ];
    let trials = 10_000u64;
    let report = sweep(&set, &SweepConfig::new(vec![0.01, 0.2], trials, 17)).unwrap();
    for (label, _) in &set {
        let lo = report.point(label, 0.01).unwrap().availability().to_f64();
        let hi = report.point(label, 0.2).unwrap().availability().to_f64();
        let sigma = |a: f64| (a * (1.0 - a) / trials as f64).sqrt();
        let margin = 3.0 * (sigma(lo) + sigma(hi));
        assert!(lo + margin >= hi, "{label}: {lo} vs {hi}");
    }
}

#[test]
fn target_gate_only_faults_that_gate() {
    let n = fixture("xor_(2,5)_3");
    let mut cfg = SweepConfig::new(vec![0.5], 500, 1);
    cfg.target_gates = Some(vec!["g_net4".into()]);
    let plan = cfg.plan_for(&n, 0.5);
    let run = run_trials(&n, &plan, 500, InputSource::SeededUniform).unwrap();
    for r in &run.records {
        for (id, net) in n.nets().iter().enumerate() {
            if net.name != "net4" {
                assert_eq!(r.injected[id], 0);
            }
        }
    }
    assert!(run.profile.net_counts("net4").unwrap().iter().sum::<u64>() > 0);
}

#[test]
fn boundary_faults_can_be_enabled() {
    let n = fixture("xor_(2,5)_3");
    let mut cfg = SweepConfig::new(vec![1.0], 10, 1);
    cfg.target_gates = Some(vec!["tr_net7".into()]);
    assert_eq!(cfg.plan_for(&n, 1.0).probability("tr_net7"), 0.0);
    cfg.boundary_faults = true;
    let plan = cfg.plan_for(&n, 1.0);
    let run = run_trials(&n, &plan, 10, InputSource::ExhaustiveCycle).unwrap();
    assert_eq!(run.correct(), 0);
}

#[test]
fn interface_checks() {
    let not = ftlogic::parse_netlist("input a\ninput b\noutput y\ngate g OR y a b\n").unwrap();
    let set = vec![("xor".to_string(), fixture("xor_conventional")), ("or".to_string(), not)];
    let err = check_interfaces(&set).unwrap_err();
    assert!(err.to_string().contains("\"or\" does not match \"xor\""), "{err}");
    assert!(matches!(check_interfaces(&[]), Err(SimError::NoNetlists)));
    let nmr = build_nmr(&fixture("xor_conventional"), 7).unwrap();
    check_interfaces(&[("a".into(), fixture("xor_conventional")), ("b".into(), nmr)]).unwrap();
}

#[test]
fn trial_dump_reports_injections() {
    let n = fixture("xor_conventional");
    let r = inject_and_evaluate(&n, &[1, 0], &FaultPlan::targeted("g_net7", 1.0, 0), 0).unwrap();
    let dump = trial_dump_csv(&n, std::slice::from_ref(&r));
    assert!(dump.contains("\n0,net7,1,0,1,1\n"), "{dump}");
    assert!(dump.contains("\n0,a,1,1,0,0\n"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn records_depend_only_on_seed_trial_and_plan(seed in any::<u64>(), trial in 0u64..1_000_000, p in 0.0f64..=1.0) {
        let n = fixture("xor_tmr");
        let plan = FaultPlan::uniform(p, seed).exclude_boundary(&n);
        let inputs = n.encode_inputs(&logic_inputs(InputSource::SeededUniform, seed, trial, 2));
        let a = inject_and_evaluate(&n, &inputs, &plan, trial).unwrap();
        let b = inject_and_evaluate(&n, &inputs, &plan, trial).unwrap();
        prop_assert_eq!(&a, &b);
        for (id, net) in n.nets().iter().enumerate() {
            prop_assert!(u32::from(a.injected[id]) <= u32::from(net.width));
        }
        let vote = n.gate_index("vote_net7").unwrap();
        prop_assert_eq!(a.injected[n.gates()[vote].output], 0);
    }

    #[test]
    fn excluded_only_faults_leave_everything_golden(seed in any::<u64>(), trial in 0u64..10_000) {
        let n = fixture("xor_(2,5)_3");
        let mut plan = FaultPlan::uniform(0.0, seed);
        plan.per_gate.insert("g_net5".into(), 1.0);
        plan.per_gate.insert("tr_net7".into(), 1.0);
        let plan = plan.exclude("g_net5").exclude("tr_net7");
        let inputs = n.encode_inputs(&logic_inputs(InputSource::SeededUniform, seed, trial, 2));
        let r = inject_and_evaluate(&n, &inputs, &plan, trial).unwrap();
        prop_assert_eq!(&r.golden, &r.faulty);
    }

    #[test]
    fn profile_counts_bounded_by_trials(seed in any::<u64>(), p in 0.0f64..0.5, trials in 1u64..200) {
        let n = fixture("xor_(2,5)_3");
        let run = run_trials(&n, &FaultPlan::uniform(p, seed), trials, InputSource::ExhaustiveCycle).unwrap();
        for counts in &run.profile.counts {
            prop_assert!(counts.iter().sum::<u64>() <= trials);
        }
        prop_assert_eq!(run.records.len() as u64, trials);
    }
}
