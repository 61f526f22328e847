// SPDX-License-Identifier: Apache-2.0

//! Availability and tolerance-rate statistics, sweep reports, and their CSV
//! and SVG renderings.
//!
//! Availability is correct results over total results. Tolerance rate is
//! incorrect results over injected error bits, so lower is better; it is
//! undefined when no bits were injected.

use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};

use crate::error::ReportError;

/// Exact non-negative fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn numerator(self) -> u64 {
        self.num
    }

    pub fn denominator(self) -> u64 {
        self.den
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Decimal rendering with `places` digits, rounding half to even.
    pub fn render(self, places: u32) -> String {
        let scale = 10u128.pow(places);
        let scaled = u128::from(self.num) * scale;
        let den = u128::from(self.den);
        let mut q = scaled / den;
        let twice_rem = (scaled % den) * 2;
        if twice_rem > den || (twice_rem == den && q % 2 == 1) {
            q += 1;
        }
        let int = q / scale;
        let frac = q % scale;
        if places == 0 {
            int.to_string()
        } else {
            format!("{int}.{frac:0w$}", w = places as usize)
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(DECIMALS))
    }
}

/// Digits after the point in every rendered ratio.
pub const DECIMALS: u32 = 6;

pub fn availability(correct: u64, total: u64) -> Result<Ratio, ReportError> {
    if total == 0 {
        return Err(ReportError::ZeroTrials);
    }
    if correct > total {
        return Err(ReportError::CountRange {
            count: correct,
            total,
        });
    }
    Ok(Ratio {
        num: correct,
        den: total,
    })
}

/// `None` when no error bits were injected.
pub fn tolerance_rate(incorrect: u64, inserted_error_bits: u64) -> Option<Ratio> {
    (inserted_error_bits > 0).then_some(Ratio {
        num: incorrect,
        den: inserted_error_bits,
    })
}

/// Outcome of one (netlist, probability) cell of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPoint {
    pub label: String,
    pub p: f64,
    pub trials: u64,
    pub correct: u64,
    pub incorrect: u64,
    pub inserted_error_bits: u64,
}

impl SweepPoint {
    pub fn availability(&self) -> Ratio {
        availability(self.correct, self.trials).expect("validated point")
    }

    pub fn tolerance_rate(&self) -> Option<Ratio> {
        tolerance_rate(self.incorrect, self.inserted_error_bits)
    }

    fn validate(&self) -> Result<(), ReportError> {
        let bad = |reason: &str| ReportError::Inconsistent {
            label: self.label.clone(),
            p: self.p,
            reason: reason.to_string(),
        };
        if self.trials == 0 {
            return Err(bad("zero trials"));
        }
        if self.correct + self.incorrect != self.trials {
            return Err(bad("correct + incorrect != trials"));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(bad("probability outside [0, 1]"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepReport {
    pub points: Vec<SweepPoint>,
}

impl SweepReport {
    pub fn new(points: Vec<SweepPoint>) -> Result<Self, ReportError> {
        for pt in &points {
            pt.validate()?;
        }
        Ok(SweepReport { points })
    }

    /// Labels in order of first appearance.
    pub fn labels(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for pt in &self.points {
            if !out.contains(&pt.label.as_str()) {
                out.push(&pt.label);
            }
        }
        out
    }

    pub fn series(&self, label: &str) -> impl Iterator<Item = &SweepPoint> {
        let label = label.to_string();
        self.points.iter().filter(move |p| p.label == label)
    }

    pub fn point(&self, label: &str, p: f64) -> Option<&SweepPoint> {
        self.points.iter().find(|pt| pt.label == label && pt.p == p)
    }
}

const CSV_HEADER: [&str; 8] = [
    "label",
    "p",
    "trials",
    "correct",
    "incorrect",
    "inserted_error_bits",
    "availability",
    "tolerance_rate",
];

pub fn report_csv(report: &SweepReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for pt in &report.points {
        w.write_record([
            pt.label.clone(),
            pt.p.to_string(),
            pt.trials.to_string(),
            pt.correct.to_string(),
            pt.incorrect.to_string(),
            pt.inserted_error_bits.to_string(),
            pt.availability().to_string(),
            pt.tolerance_rate().map(|r| r.to_string()).unwrap_or_default(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

/// Inverse of [`report_csv`]; the ratio columns are checked against the counts.
pub fn parse_report_csv(text: &str) -> Result<SweepReport, ReportError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().map_err(|e| ReportError::Csv(e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(ReportError::Csv(format!("unexpected header {header:?}")));
    }
    let mut points = Vec::new();
    for (row, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| ReportError::Csv(e.to_string()))?;
        let field = |i: usize| rec.get(i).unwrap_or("");
        let num = |i: usize| {
            field(i)
                .parse::<u64>()
                .map_err(|_| ReportError::Csv(format!("row {}: bad {}", row + 1, CSV_HEADER[i])))
        };
        let p = field(1)
            .parse::<f64>()
            .map_err(|_| ReportError::Csv(format!("row {}: bad p", row + 1)))?;
        let pt = SweepPoint {
            label: field(0).to_string(),
            p,
            trials: num(2)?,
            correct: num(3)?,
            incorrect: num(4)?,
            inserted_error_bits: num(5)?,
        };
        pt.validate()?;
        let to = pt.tolerance_rate().map(|r| r.to_string()).unwrap_or_default();
        if field(6) != pt.availability().to_string() || field(7) != to {
            return Err(ReportError::Csv(format!(
                "row {}: ratio columns disagree with counts",
                row + 1
            )));
        }
        points.push(pt);
    }
    SweepReport::new(points)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartMetric {
    Availability,
    ToleranceRate,
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
];

const VIEW_W: f64 = 800.0;
const VIEW_H: f64 = 600.0;
const LEFT: f64 = 90.0;
const RIGHT: f64 = 760.0;
const TOP: f64 = 60.0;
const BOTTOM: f64 = 520.0;

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// SVG 1.1 line chart, one polyline per label over `p`.
pub fn report_svg(report: &SweepReport, metric: ChartMetric) -> String {
    let value = |pt: &SweepPoint| match metric {
        ChartMetric::Availability => Some(pt.availability().to_f64()),
        ChartMetric::ToleranceRate => pt.tolerance_rate().map(Ratio::to_f64),
    };
    let ps: Vec<f64> = report.points.iter().map(|p| p.p).collect();
    let (mut x0, mut x1) = (
        ps.iter().copied().fold(f64::INFINITY, f64::min),
        ps.iter().copied().fold(f64::NEG_INFINITY, f64::max),
    );
    if !x0.is_finite() {
        (x0, x1) = (0.0, 1.0);
    }
    if x1 - x0 < 1e-12 {
        let pad = (x0.abs() * 0.5).max(0.01);
        x0 = (x0 - pad).max(0.0);
        x1 += pad;
    }
    let ys: Vec<f64> = report.points.iter().filter_map(value).collect();
    let (y0, y1) = match metric {
        ChartMetric::Availability => {
            let lo = ys.iter().copied().fold(1.0, f64::min);
            let lo = ((lo * 10.0).floor() / 10.0).clamp(0.0, 0.9);
            (lo, 1.0)
        }
        ChartMetric::ToleranceRate => {
            let hi = ys.iter().copied().fold(0.0, f64::max);
            let hi = if hi <= 0.0 { 1.0 } else { (hi * 11.0).ceil() / 10.0 };
            (0.0, hi)
        }
    };
    let sx = |x: f64| LEFT + (x - x0) / (x1 - x0) * (RIGHT - LEFT);
    let sy = |y: f64| BOTTOM - (y - y0) / (y1 - y0) * (BOTTOM - TOP);

    let (title, ylabel) = match metric {
        ChartMetric::Availability => ("Availability versus gate fault probability", "availability A = Cr/Tr"),
        ChartMetric::ToleranceRate => (
            "Tolerance rate versus gate fault probability (lower = better)",
            "tolerance rate To = Icr/Ter",
        ),
    };

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{VIEW_W}" height="{VIEW_H}" viewBox="0 0 {VIEW_W} {VIEW_H}" font-family="sans-serif">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{VIEW_W}" height="{VIEW_H}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="32" text-anchor="middle" font-size="18">{}</text>"#,
        VIEW_W / 2.0,
        escape(title)
    );
    let _ = writeln!(
        s,
        r#"<rect x="{LEFT}" y="{TOP}" width="{:.1}" height="{:.1}" fill="none" stroke="black"/>"#,
        RIGHT - LEFT,
        BOTTOM - TOP
    );
    const TICKS: usize = 5;
    for i in 0..=TICKS {
        let fx = x0 + (x1 - x0) * i as f64 / TICKS as f64;
        let fy = y0 + (y1 - y0) * i as f64 / TICKS as f64;
        let (px, py) = (sx(fx), sy(fy));
        let _ = writeln!(
            s,
            r##"<line x1="{px:.2}" y1="{BOTTOM}" x2="{px:.2}" y2="{:.2}" stroke="#999"/>"##,
            BOTTOM + 6.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{px:.2}" y="{:.2}" text-anchor="middle" font-size="12">{fx:.3}</text>"#,
            BOTTOM + 22.0
        );
        let _ = writeln!(
            s,
            r##"<line x1="{:.2}" y1="{py:.2}" x2="{LEFT}" y2="{py:.2}" stroke="#999"/>"##,
            LEFT - 6.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end" font-size="12">{fy:.3}</text>"#,
            LEFT - 10.0,
            py + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.1}" y="570" text-anchor="middle" font-size="14">gate fault probability p</text>"#,
        (LEFT + RIGHT) / 2.0
    );
    let _ = writeln!(
        s,
        r#"<text x="24" y="{0:.1}" text-anchor="middle" font-size="14" transform="rotate(-90 24 {0:.1})">{1}</text>"#,
        (TOP + BOTTOM) / 2.0,
        escape(ylabel)
    );

    for (k, label) in report.labels().into_iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let pts: Vec<(f64, f64)> = report
            .series(label)
            .filter_map(|pt| value(pt).map(|v| (sx(pt.p), sy(v))))
            .collect();
        if pts.len() > 1 {
            let coords: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
            let _ = writeln!(
                s,
                r#"<polyline fill="none" stroke="{color}" stroke-width="2" points="{}"/>"#,
                coords.join(" ")
            );
        }
        for (x, y) in &pts {
            let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="3" fill="{color}"/>"#);
        }
        let ly = TOP + 20.0 + 20.0 * k as f64;
        let _ = writeln!(
            s,
            r#"<line x1="{:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{color}" stroke-width="2"/>"#,
            RIGHT - 190.0,
            RIGHT - 165.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" font-size="12">{}</text>"#,
            RIGHT - 158.0,
            ly + 4.0,
            escape(label)
        );
    }
    s.push_str("</svg>\n");
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Svg,
}

fn write_file(path: PathBuf, contents: &str) -> Result<PathBuf, ReportError> {
    std::fs::write(&path, contents).map_err(|source| ReportError::Io {
        path: path.clone(),
        source,
    })?;
    Ok(path)
}

/// Write `sweep.csv` and/or `availability.svg` + `tolerance_rate.svg` into `dir`.
pub fn emit_report(
    report: &SweepReport,
    dir: &Path,
    formats: &[ReportFormat],
) -> Result<Vec<PathBuf>, ReportError> {
    if report.points.is_empty() {
        return Err(ReportError::Empty);
    }
    std::fs::create_dir_all(dir).map_err(|source| ReportError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut written = Vec::new();
    if formats.contains(&ReportFormat::Csv) {
        written.push(write_file(dir.join("sweep.csv"), &report_csv(report))?);
    }
    if formats.contains(&ReportFormat::Svg) {
        written.push(write_file(
            dir.join("availability.svg"),
            &report_svg(report, ChartMetric::Availability),
        )?);
        written.push(write_file(
            dir.join("tolerance_rate.svg"),
            &report_svg(report, ChartMetric::ToleranceRate),
        )?);
    }
    Ok(written)
}
