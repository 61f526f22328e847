// SPDX-License-Identifier: Apache-2.0

//! Published reference values and their comparison with computed ones.
//!
//! The reference data below is transcribed as printed, typos included.
//! Each comparison yields a [`Finding`]; divergent findings carry the exact
//! index or set difference so a report can show it verbatim.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use crate::codeword::Codeword;
use crate::scheme::{
    build_scheme_values, enumerate_schemes, rank_schemes, scheme_quality, ClassLabel, CodingScheme,
    HPolicy,
};
use crate::synth::{tolerant_gate, translator, BitMinterms, LogicOp};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Area {
    Enumeration,
    Classes,
    Minterms,
    Translator,
    FiveBit,
    Decoding,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Diverges,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub area: Area,
    pub topic: String,
    pub verdict: Verdict,
    pub printed: String,
    pub computed: String,
    /// Explanation of a divergence; empty for matches.
    pub note: String,
}

impl Finding {
    fn new(area: Area, topic: String, printed: String, computed: String, same: bool) -> Self {
        Finding {
            area,
            topic,
            verdict: if same { Verdict::Match } else { Verdict::Diverges },
            printed,
            computed,
            note: String::new(),
        }
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        if self.verdict == Verdict::Diverges {
            self.note = note.into();
        }
        self
    }

    pub fn is_match(&self) -> bool {
        self.verdict == Verdict::Match
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.verdict {
            Verdict::Match => "match",
            Verdict::Diverges => "DIVERGES",
        };
        write!(
            f,
            "[{tag}] {}: printed {}; computed {}",
            self.topic, self.printed, self.computed
        )?;
        if !self.note.is_empty() {
            write!(f, "; {}", self.note)?;
        }
        Ok(())
    }
}

/// Printed reference data.
pub mod reference {
    /// `(n, number of schemes)`.
    pub const SCHEME_COUNTS: [(u8, usize); 3] = [(1, 2), (2, 12), (3, 56)];

    /// One printed row of a class table: poles, the three class lists as
    /// printed (some rows include the poles, some list faulty codes only),
    /// pole distance and the correctable-distance column (`None` when the
    /// table has no such column).
    #[derive(Debug, Clone, Copy)]
    pub struct ClassRow {
        pub n: u8,
        pub pole0: u32,
        pub pole1: u32,
        pub class0: &'static [u32],
        pub class1: &'static [u32],
        pub class_h: &'static [u32],
        pub distance: u32,
        pub correctable: Option<u32>,
    }

    #[allow(clippy::too_many_arguments)]
    const fn row(
        n: u8,
        pole0: u32,
        pole1: u32,
        class0: &'static [u32],
        class1: &'static [u32],
        class_h: &'static [u32],
        distance: u32,
        correctable: Option<u32>,
    ) -> ClassRow {
        ClassRow {
            n,
            pole0,
            pole1,
            class0,
            class1,
            class_h,
            distance,
            correctable,
        }
    }

    pub const ONE_BIT_ROWS: [ClassRow; 2] = [
        row(1, 0, 1, &[0], &[1], &[], 1, None),
        row(1, 1, 0, &[1], &[0], &[], 1, None),
    ];

    pub const TWO_BIT_ROWS: [ClassRow; 8] = [
        row(2, 0, 3, &[0], &[3], &[1, 2], 2, None),
        row(2, 3, 0, &[3], &[0], &[1, 2], 2, None),
        row(2, 1, 2, &[1], &[2], &[0, 3], 2, None),
        row(2, 2, 1, &[2], &[1], &[0, 3], 2, None),
        row(2, 1, 3, &[1, 0], &[3, 2], &[], 1, None),
        row(2, 3, 1, &[3, 2], &[1, 0], &[], 1, None),
        row(2, 0, 2, &[0, 1], &[2, 3], &[], 1, None),
        row(2, 2, 0, &[2, 3], &[0, 1], &[], 1, None),
    ];

    pub const THREE_BIT_ROWS: [ClassRow; 10] = [
        row(3, 0, 7, &[0, 1, 2, 4], &[3, 5, 6, 7], &[], 3, Some(1)),
        row(3, 7, 0, &[3, 5, 6, 7], &[0, 1, 2, 4], &[], 3, Some(1)),
        row(3, 1, 6, &[0, 1, 3, 5], &[2, 4, 6, 7], &[], 3, Some(1)),
        row(3, 6, 1, &[2, 4, 6, 7], &[0, 1, 3, 5], &[], 3, Some(1)),
        row(3, 2, 5, &[0, 2, 3, 6], &[1, 4, 5, 7], &[], 3, Some(1)),
        row(3, 5, 2, &[1, 4, 5, 7], &[0, 2, 3, 6], &[], 3, Some(1)),
        row(3, 0, 3, &[1, 4], &[7], &[2, 5, 6], 2, Some(1)),
        row(3, 3, 0, &[7], &[1, 4], &[2, 5, 6], 2, Some(1)),
        row(3, 1, 3, &[0, 4, 5], &[2, 7, 6], &[], 1, Some(2)),
        row(3, 3, 1, &[2, 6, 7], &[0, 4, 5], &[], 1, Some(2)),
    ];

    /// Per-width summary: bits, codes, schemes, faulty codes, largest pole
    /// distance, correctable distance (`None` printed as a dash).
    pub const SPACE_SUMMARY: [(u8, u32, usize, u32, u32, Option<u32>); 3] = [
        (1, 2, 2, 0, 1, None),
        (2, 4, 12, 2, 2, Some(1)),
        (3, 8, 56, 6, 3, Some(1)),
    ];

    /// `(gate, bit, form, indices)` for the (2,5)_3 gates; form is 'S' for
    /// a sum of minterms, 'P' for a product of maxterms.
    pub const GATE_MINTERMS: [(&str, u8, char, &[u32]); 9] = [
        ("T_Or", 1, 'P', &TOR),
        ("T_Or", 2, 'S', &TOR),
        ("T_Or", 3, 'P', &TOR),
        ("T_And", 1, 'S', &TAND),
        ("T_And", 2, 'P', &TAND_PRINTED_LOW),
        ("T_And", 3, 'S', &TAND_PRINTED_LOW),
        ("T_Not", 1, 'S', &[0, 2, 3, 6]),
        ("T_Not", 2, 'P', &[0, 2, 3, 6]),
        ("T_Not", 3, 'S', &[0, 2, 3, 6]),
    ];

    const TOR: [u32; 16] = [0, 2, 3, 6, 16, 18, 19, 22, 24, 26, 27, 30, 48, 50, 51, 54];
    const TAND: [u32; 16] = [9, 12, 13, 15, 33, 36, 37, 39, 41, 44, 45, 47, 57, 60, 61, 63];
    const TAND_PRINTED_LOW: [u32; 16] =
        [9, 12, 23, 15, 33, 36, 37, 39, 41, 44, 45, 47, 57, 60, 61, 63];

    /// The (2,5)_3 XOR output lists: bit 1 and 3 as sums, bit 2 as a product.
    pub const XOR_MINTERMS: [u32; 32] = [
        1, 4, 5, 7, 8, 10, 11, 14, 17, 20, 21, 23, 25, 28, 29, 31, 32, 34, 35, 38, 40, 42, 43, 46,
        49, 52, 53, 55, 57, 60, 61, 63,
    ];
    pub const XOR_FORMS: [(u8, char); 3] = [(1, 'S'), (2, 'P'), (3, 'S')];

    /// (2,5)_3 to (0,1)_1 translator: output per 3-bit code, and its sum.
    pub const DECODER_TABLE: [u32; 8] = [0, 1, 0, 0, 1, 1, 0, 1];
    pub const DECODER_SUM: [u32; 4] = [1, 4, 5, 7];
    /// (0,1)_1 to (2,5)_3 translator outputs.
    pub const ENCODER_TABLE: [u32; 2] = [2, 5];

    /// Five-bit example: the scheme named in the text, the poles printed in
    /// its header, and the printed class sets.
    pub const FIVE_BIT_SCHEME: (u32, u32) = (10, 21);
    pub const FIVE_BIT_HEADER_POLES: (u32, u32) = (2, 5);
    pub const FIVE_BIT_CLASS0: [u32; 16] = [0, 2, 3, 4, 6, 8, 9, 11, 12, 14, 15, 18, 24, 26, 27, 30];
    pub const FIVE_BIT_CLASS1: [u32; 14] = [1, 5, 7, 13, 16, 17, 19, 20, 22, 23, 25, 28, 29, 31];
    pub const FIVE_BIT_CORRECTABLE: u32 = 2;
}

fn set_text(values: impl IntoIterator<Item = u32>) -> String {
    let v: Vec<String> = values.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn list_text(values: &[u32]) -> String {
    let v: Vec<String> = values.iter().map(|x| x.to_string()).collect();
    v.join(",")
}

/// `only printed {..}; only computed {..}`.
fn set_diff(printed: &BTreeSet<u32>, computed: &BTreeSet<u32>) -> String {
    let mut parts = Vec::new();
    let p: Vec<u32> = printed.difference(computed).copied().collect();
    let c: Vec<u32> = computed.difference(printed).copied().collect();
    if !p.is_empty() {
        parts.push(format!("only printed {}", set_text(p)));
    }
    if !c.is_empty() {
        parts.push(format!("only computed {}", set_text(c)));
    }
    parts.join("; ")
}

fn values(scheme: &CodingScheme, label: ClassLabel) -> BTreeSet<u32> {
    scheme.members(label).iter().map(|c| c.value()).collect()
}

/// Scheme counts and the per-width summary.
pub fn enumeration_findings() -> Vec<Finding> {
    let mut out = Vec::new();
    for (n, printed) in reference::SCHEME_COUNTS {
        let computed = enumerate_schemes(n).map(|v| v.len()).unwrap_or(0);
        out.push(Finding::new(
            Area::Enumeration,
            format!("number of {n}-bit pole selections"),
            printed.to_string(),
            computed.to_string(),
            printed == computed,
        ));
    }
    for (n, codes, schemes, faulty, largest, correctable) in reference::SPACE_SUMMARY {
        let all = enumerate_schemes(n).expect("n is small");
        let c_codes = 1u32 << n;
        let c_largest = all.iter().map(CodingScheme::pole_distance).max().unwrap_or(0);
        let best = rank_schemes(n).expect("n is small")[0].1.max_correctable_distance;
        let c_correctable = (best > 0).then_some(best);
        let show = |c: Option<u32>| c.map_or("-".to_string(), |v| v.to_string());
        let printed = format!(
            "codes {codes}, selections {schemes}, faulty {faulty}, largest distance {largest}, correctable {}",
            show(correctable)
        );
        let computed = format!(
            "codes {c_codes}, selections {}, faulty {}, largest distance {c_largest}, correctable {}",
            all.len(),
            c_codes - 2,
            show(c_correctable)
        );
        out.push(Finding::new(
            Area::Enumeration,
            format!("{n}-bit space summary"),
            printed.clone(),
            computed.clone(),
            printed == computed,
        ));
    }
    out
}

/// Compare one printed class row. Printed lists are compared by their
/// faulty codes; a printed pole must be the pole of that class.
pub fn class_row_finding(row: &reference::ClassRow) -> Finding {
    let scheme = build_scheme_values(row.n, row.pole0, row.pole1).expect("printed poles are valid");
    let q = scheme_quality(&scheme);
    let poles: BTreeSet<u32> = [row.pole0, row.pole1].into();
    let faulty = |s: &BTreeSet<u32>| -> BTreeSet<u32> { s.difference(&poles).copied().collect() };
    let printed = [row.class0, row.class1, row.class_h].map(|s| s.iter().copied().collect::<BTreeSet<u32>>());
    let computed = [ClassLabel::Class0, ClassLabel::Class1, ClassLabel::ClassH].map(|l| values(&scheme, l));

    let mut diffs = Vec::new();
    for (i, name) in ["Class_0", "Class_1", "Class_H"].iter().enumerate() {
        let stray_pole = printed[i].intersection(&poles).any(|p| !computed[i].contains(p));
        let (pf, cf) = (faulty(&printed[i]), faulty(&computed[i]));
        if pf != cf || stray_pole {
            diffs.push(format!("{name} faulty codes: {}", set_diff(&pf, &cf)));
        }
    }
    if q.pole_distance != row.distance {
        diffs.push(format!("distance {} vs {}", row.distance, q.pole_distance));
    }
    if let Some(c) = row.correctable {
        if c != q.max_correctable_distance {
            diffs.push(format!("correctable {c} vs {}", q.max_correctable_distance));
        }
    }
    let show = |s: &[BTreeSet<u32>; 3]| {
        format!(
            "{} | {} | {}",
            set_text(s[0].iter().copied()),
            set_text(s[1].iter().copied()),
            set_text(s[2].iter().copied())
        )
    };
    let mut printed_text = show(&printed);
    let mut computed_text = show(&computed);
    printed_text.push_str(&format!(" d={}", row.distance));
    computed_text.push_str(&format!(" d={}", q.pole_distance));
    if let Some(c) = row.correctable {
        printed_text.push_str(&format!(" r={c}"));
        computed_text.push_str(&format!(" r={}", q.max_correctable_distance));
    }
    let ties: Vec<u32> = computed[2].iter().copied().collect();
    Finding::new(
        Area::Classes,
        format!("{n}-bit class row {scheme}", n = row.n),
        printed_text,
        computed_text,
        diffs.is_empty(),
    )
    .note(format!(
        "{}; codes {} are equidistant from both poles",
        diffs.join("; "),
        set_text(ties)
    ))
}

pub fn class_findings() -> Vec<Finding> {
    reference::ONE_BIT_ROWS
        .iter()
        .chain(&reference::TWO_BIT_ROWS)
        .chain(&reference::THREE_BIT_ROWS)
        .map(class_row_finding)
        .collect()
}

fn form_list(lists: &[BitMinterms], bit: u8, form: char) -> &[u32] {
    let b = &lists[usize::from(bit) - 1];
    if form == 'S' {
        &b.sop
    } else {
        &b.pos
    }
}

fn list_finding(name: &str, bit: u8, form: char, printed: &[u32], computed: &[u32]) -> Finding {
    let p: BTreeSet<u32> = printed.iter().copied().collect();
    let c: BTreeSet<u32> = computed.iter().copied().collect();
    let symbol = if form == 'S' { 'Σ' } else { 'Π' };
    let diff = set_diff(&p, &c);
    Finding::new(
        Area::Minterms,
        format!("{name}_{bit} {symbol} list"),
        format!("{symbol}({})", list_text(printed)),
        format!("{symbol}({})", list_text(computed)),
        p == c && printed.len() == computed.len(),
    )
    .note(diff)
}

fn scheme_2_5() -> CodingScheme {
    build_scheme_values(3, 2, 5).expect("valid poles")
}

/// T_or, T_and, T_not and XOR lists of the (2,5)_3 scheme.
pub fn minterm_findings() -> Vec<Finding> {
    let sc = scheme_2_5();
    let mut out = Vec::new();
    for (name, bit, form, printed) in reference::GATE_MINTERMS {
        let op = match name {
            "T_Or" => LogicOp::Or,
            "T_And" => LogicOp::And,
            _ => LogicOp::Not,
        };
        let spec = tolerant_gate(&sc, op, HPolicy::AsZero).expect("(2,5)_3 has no ties");
        out.push(list_finding(name, bit, form, printed, form_list(spec.minterm_lists(), bit, form)));
    }
    let xor = tolerant_gate(&sc, LogicOp::Xor, HPolicy::AsZero).expect("(2,5)_3 has no ties");
    for (bit, form) in reference::XOR_FORMS {
        out.push(
            list_finding("f", bit, form, &reference::XOR_MINTERMS, form_list(xor.minterm_lists(), bit, form))
                .note_prefix("the printed tail pairs Class_1 with Class_1, which XOR sends to Pole_0"),
        );
    }
    out
}

impl Finding {
    fn note_prefix(mut self, prefix: &str) -> Self {
        if self.verdict == Verdict::Diverges {
            self.note = format!("{}; {prefix}", self.note);
        }
        self
    }
}

/// Both (2,5)_3 boundary translators.
pub fn translator_findings() -> Vec<Finding> {
    let sc = scheme_2_5();
    let conv = CodingScheme::conventional();
    let dec = translator(&sc, &conv, HPolicy::AsZero).expect("no ties");
    let enc = translator(&conv, &sc, HPolicy::AsZero).expect("no ties");
    vec![
        Finding::new(
            Area::Translator,
            "(2,5)_3 to (0,1)_1 truth table".into(),
            list_text(&reference::DECODER_TABLE),
            list_text(dec.table()),
            dec.table() == reference::DECODER_TABLE,
        ),
        list_finding("Tr", 1, 'S', &reference::DECODER_SUM, &dec.minterm_lists()[0].sop),
        Finding::new(
            Area::Translator,
            "(0,1)_1 to (2,5)_3 truth table".into(),
            list_text(&reference::ENCODER_TABLE),
            list_text(enc.table()),
            enc.table() == reference::ENCODER_TABLE,
        ),
    ]
    .into_iter()
    .map(|mut f| {
        f.area = Area::Translator;
        f
    })
    .collect()
}

/// The five-bit example and the general correction-radius statement.
pub fn five_bit_findings() -> Vec<Finding> {
    let (p0, p1) = reference::FIVE_BIT_SCHEME;
    let sc = build_scheme_values(5, p0, p1).expect("valid poles");
    let q = scheme_quality(&sc);
    let c0 = values(&sc, ClassLabel::Class0);
    let c1 = values(&sc, ClassLabel::Class1);
    let pc0: BTreeSet<u32> = reference::FIVE_BIT_CLASS0.into_iter().collect();
    let pc1: BTreeSet<u32> = reference::FIVE_BIT_CLASS1.into_iter().collect();
    let (h0, h1) = reference::FIVE_BIT_HEADER_POLES;
    let mut out = vec![
        Finding::new(
            Area::FiveBit,
            format!("{sc} header poles"),
            format!("({h0},{h1})"),
            format!("({p0},{p1})"),
            (h0, h1) == (p0, p1),
        )
        .note("the header repeats the poles of the three-bit example"),
        Finding::new(
            Area::FiveBit,
            format!("{sc} class sizes"),
            format!("{}+{}", pc0.len(), pc1.len()),
            format!("{}+{} (15+15 faulty codes and 2 poles)", c0.len(), c1.len()),
            pc0.len() == c0.len() && pc1.len() == c1.len(),
        )
        .note("the printed sets hold 30 codes, two short of the 32-code space"),
        Finding::new(
            Area::FiveBit,
            format!("{sc} Class_0"),
            set_text(pc0.iter().copied()),
            set_text(c0.iter().copied()),
            pc0 == c0,
        )
        .note(set_diff(&pc0, &c0)),
        Finding::new(
            Area::FiveBit,
            format!("{sc} Class_1"),
            set_text(pc1.iter().copied()),
            set_text(c1.iter().copied()),
            pc1 == c1,
        )
        .note(set_diff(&pc1, &c1)),
        Finding::new(
            Area::FiveBit,
            format!("{sc} correctable distance"),
            reference::FIVE_BIT_CORRECTABLE.to_string(),
            format!(
                "{} (pole distance {}, Class_H empty: {})",
                q.max_correctable_distance, q.pole_distance, q.class_h_empty
            ),
            q.max_correctable_distance == reference::FIVE_BIT_CORRECTABLE,
        ),
    ];
    // Correction radius claimed as n/2 for complement schemes.
    for n in 3u8..=5 {
        let radius = scheme_quality(&build_scheme_values(n, 0, (1 << n) - 1).expect("valid"))
            .max_correctable_distance;
        let printed = f64::from(n) / 2.0;
        out.push(
            Finding::new(
                Area::FiveBit,
                format!("{n}-bit complement correction radius"),
                format!("n/2 = {printed}"),
                radius.to_string(),
                f64::from(radius) == printed,
            )
            .note(format!(
                "the tight radius is floor((n-1)/2) = {}",
                (u32::from(n) - 1) / 2
            )),
        );
    }
    out
}

/// The printed decision rule picks `x_0` when `x` is at least as far from
/// `x_0` as from `x_1`; count where that disagrees with the nearest pole.
pub fn decoding_findings() -> Vec<Finding> {
    let sc = scheme_2_5();
    let mut disagree = Vec::new();
    for x in 0..8u32 {
        let d0 = (x ^ 2).count_ones();
        let d1 = (x ^ 5).count_ones();
        let printed_rule = if d0 >= d1 { 2 } else { 5 };
        let nearest = sc
            .correct(Codeword::new(x, 3).expect("3-bit code"), HPolicy::AsZero)
            .expect("no ties")
            .value();
        if printed_rule != nearest {
            disagree.push(x);
        }
    }
    vec![Finding::new(
        Area::Decoding,
        "finite-metric decision rule on (2,5)_3".into(),
        "x_0 when d(x,x_0) >= d(x,x_1)".into(),
        "nearest pole, ties to x_0".into(),
        disagree.is_empty(),
    )
    .note(format!(
        "the printed inequality selects the farther pole for codes {}; the nearest-pole rule is used",
        set_text(disagree)
    ))]
}

/// Every comparison, in area order.
pub fn run_conformance() -> Vec<Finding> {
    let mut out = enumeration_findings();
    out.extend(class_findings());
    out.extend(minterm_findings());
    out.extend(translator_findings());
    out.extend(five_bit_findings());
    out.extend(decoding_findings());
    out
}

/// Plain-text report, divergences listed first.
pub fn render_conformance(findings: &[Finding]) -> String {
    let diverging: Vec<&Finding> = findings.iter().filter(|f| !f.is_match()).collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "conformance: {} checks, {} match, {} diverge",
        findings.len(),
        findings.len() - diverging.len(),
        diverging.len()
    );
    if !diverging.is_empty() {
        out.push_str("\ndivergences:\n");
        for f in &diverging {
            let _ = writeln!(out, "{f}");
        }
    }
    out.push_str("\nmatches:\n");
    for f in findings.iter().filter(|f| f.is_match()) {
        let _ = writeln!(out, "{f}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diverging(f: &[Finding]) -> Vec<String> {
        f.iter().filter(|f| !f.is_match()).map(|f| f.topic.clone()).collect()
    }

    #[test]
    fn enumeration_matches() {
        assert!(enumeration_findings().iter().all(Finding::is_match));
    }

    #[test]
    fn only_the_equidistant_rows_diverge() {
        let d = diverging(&class_findings());
        assert_eq!(d, ["3-bit class row (0,3)_3", "3-bit class row (3,0)_3"]);
        let row = class_row_finding(&reference::THREE_BIT_ROWS[6]);
        assert!(row.note.contains("only printed {1}"), "{}", row.note);
        assert!(row.note.contains("Class_H faulty codes: only computed {1}"), "{}", row.note);
    }

    #[test]
    fn minterm_divergences_are_the_known_typos() {
        let f = minterm_findings();
        assert_eq!(diverging(&f), ["T_And_2 Π list", "T_And_3 Σ list", "f_1 Σ list", "f_2 Π list", "f_3 Σ list"]);
        let and2 = f.iter().find(|x| x.topic == "T_And_2 Π list").unwrap();
        assert!(and2.note.starts_with("only printed {23}; only computed {13}"));
        let f1 = f.iter().find(|x| x.topic == "f_1 Σ list").unwrap();
        assert!(f1
            .note
            .starts_with("only printed {57,60,61,63}; only computed {56,58,59,62}"));
    }

    #[test]
    fn translators_match() {
        assert!(translator_findings().iter().all(Finding::is_match));
    }

    #[test]
    fn five_bit_findings_flag_transcription() {
        let f = five_bit_findings();
        let d = diverging(&f);
        assert!(d.contains(&"(10,21)_5 header poles".to_string()));
        assert!(d.contains(&"(10,21)_5 class sizes".to_string()));
        assert!(f.iter().any(|x| x.topic == "(10,21)_5 correctable distance" && x.is_match()));
        assert!(d.contains(&"3-bit complement correction radius".to_string()));
        assert!(f.iter().any(|x| x.topic == "5-bit complement correction radius" && !x.is_match()));
    }

    #[test]
    fn printed_rule_picks_farther_pole() {
        let f = &decoding_findings()[0];
        assert!(!f.is_match());
        assert!(f.note.contains("{0,1,2,3,4,5,6,7}"), "{}", f.note);
    }

    #[test]
    fn report_lists_divergences_first() {
        let all = run_conformance();
        let text = render_conformance(&all);
        let div = text.find("divergences:").unwrap();
        let mat = text.find("matches:").unwrap();
        assert!(div < mat);
        assert!(text.contains("only printed {57,60,61,63}; only computed {56,58,59,62}"));
        assert_eq!(text, render_conformance(&run_conformance()));
    }
}
