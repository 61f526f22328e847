// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write as _;

use ftlogic::conformance::{self, Area, Finding};
use ftlogic::scheme::pole_distances;
use ftlogic::{enumerate_schemes, rank_schemes, scheme_quality, ClassLabel, Codeword, CodingScheme};

use crate::error::CliResult;

fn class_list(s: &CodingScheme, label: ClassLabel) -> String {
    let v: Vec<String> = s.members(label).iter().map(|c| c.value().to_string()).collect();
    if v.is_empty() {
        "-".into()
    } else {
        v.join(",")
    }
}

fn braces(s: &CodingScheme, label: ClassLabel) -> String {
    let v: Vec<String> = s.members(label).iter().map(|c| c.value().to_string()).collect();
    format!("{{{}}}", v.join(","))
}

pub fn inspect(s: &CodingScheme) -> CliResult<String> {
    let q = scheme_quality(s);
    let mut out = String::new();
    let _ = writeln!(out, "scheme {s}");
    let _ = writeln!(out, "pole 0: {} ({})", s.pole0().value(), s.pole0().to_binary());
    let _ = writeln!(out, "pole 1: {} ({})", s.pole1().value(), s.pole1().to_binary());
    for label in [ClassLabel::Class0, ClassLabel::Class1, ClassLabel::ClassH] {
        let _ = writeln!(out, "{label} = {}", braces(s, label));
    }
    let _ = writeln!(out, "pole distance: {}", q.pole_distance);
    let _ = writeln!(out, "Class_H empty: {}", if q.class_h_empty { "yes" } else { "no" });
    let _ = writeln!(out, "max correctable distance: {}", q.max_correctable_distance);
    let _ = writeln!(
        out,
        "faulty codes: {} in Class_0, {} in Class_1, {} in Class_H",
        s.faulty_members(ClassLabel::Class0).len(),
        s.faulty_members(ClassLabel::Class1).len(),
        s.faulty_members(ClassLabel::ClassH).len()
    );
    out.push_str("transition:\n");
    for c in Codeword::all(s.width())? {
        let (d0, d1) = pole_distances(s, c)?;
        let target = match s.transition(c)? {
            Some(p) => p.to_binary(),
            None => "?".repeat(usize::from(s.width())),
        };
        let _ = writeln!(
            out,
            "  {} -> {target}  {}  d0={d0} d1={d1}",
            c.to_binary(),
            s.classify(c)?
        );
    }
    Ok(out)
}

const HEADER: &str = "pole0\tpole1\tClass_0\tClass_1\tClass_H\tdistance\tcorrectable";

fn row(s: &CodingScheme) -> String {
    let q = scheme_quality(s);
    format!(
        "{}\t{}\t{}\t{}\t{}\t{}\t{}",
        s.pole0().value(),
        s.pole1().value(),
        class_list(s, ClassLabel::Class0),
        class_list(s, ClassLabel::Class1),
        class_list(s, ClassLabel::ClassH),
        q.pole_distance,
        q.max_correctable_distance
    )
}

pub fn enumerate(n: u8) -> CliResult<String> {
    let all = enumerate_schemes(n)?;
    let mut out = format!("{HEADER}\n");
    for s in &all {
        let _ = writeln!(out, "{}", row(s));
    }
    let _ = writeln!(out, "{} schemes", all.len());
    Ok(out)
}

pub fn rank(n: u8, top: Option<usize>) -> CliResult<String> {
    let ranked = rank_schemes(n)?;
    let shown = top.unwrap_or(ranked.len()).min(ranked.len());
    let mut out = format!("rank\t{HEADER}\n");
    for (i, (s, _)) in ranked.iter().take(shown).enumerate() {
        let _ = writeln!(out, "{}\t{}", i + 1, row(s));
    }
    let _ = writeln!(out, "{shown} of {} schemes", ranked.len());
    Ok(out)
}

fn scheme_related() -> Vec<Finding> {
    conformance::run_conformance()
        .into_iter()
        .filter(|f| matches!(f.area, Area::Enumeration | Area::Classes | Area::FiveBit | Area::Decoding))
        .collect()
}

/// Conformance notes for one scheme, or for every printed row of width `n`.
pub fn conformance_notes(scheme: Option<&CodingScheme>, n: u8) -> String {
    let notation = scheme.map(ToString::to_string);
    let prefix = format!("{n}-bit");
    let picked: Vec<Finding> = scheme_related()
        .into_iter()
        .filter(|f| match &notation {
            Some(s) => f.topic.contains(s.as_str()),
            None => f.topic.starts_with(&prefix) || f.topic.contains(&format!("{n}-bit pole selections")),
        })
        .collect();
    let mut out = String::from("\nconformance:\n");
    if picked.is_empty() {
        out.push_str("  no printed reference data for this selection\n");
    }
    for f in &picked {
        let _ = writeln!(out, "  {f}");
    }
    out
}
