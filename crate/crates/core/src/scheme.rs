// SPDX-License-Identifier: Apache-2.0

//! Pole-code schemes over `n`-bit Hamming space.
//!
//! A scheme reserves two words, the poles, for logic 0 and logic 1. Every
//! other word is a faulty code that belongs to the class of the strictly
//! nearer pole, or to the equidistant class when neither pole is nearer.
//! Correction sends a faulty code to the pole of its class.

use std::fmt;
use std::str::FromStr;

use crate::codeword::{check_width, hamming_distance, Codeword};
use crate::error::CodingError;

/// Widest space [`enumerate_schemes`] will walk in full.
pub const MAX_ENUMERATION_WIDTH: u8 = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    Class0,
    Class1,
    /// Equidistant from both poles: detectable, not correctable.
    ClassH,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassLabel::Class0 => "Class_0",
            ClassLabel::Class1 => "Class_1",
            ClassLabel::ClassH => "Class_H",
        })
    }
}

/// How a code in the equidistant class is treated when a logic value is needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum HPolicy {
    #[default]
    AsZero,
    AsOne,
    /// Refuse; the code is reported as uncorrectable.
    Strict,
}

impl FromStr for HPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "zero" | "as-zero" | "aszero" | "0" => Ok(HPolicy::AsZero),
            "one" | "as-one" | "asone" | "1" => Ok(HPolicy::AsOne),
            "strict" => Ok(HPolicy::Strict),
            other => Err(format!("unknown h-policy {other:?} (zero, one, strict)")),
        }
    }
}

impl fmt::Display for HPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HPolicy::AsZero => "zero",
            HPolicy::AsOne => "one",
            HPolicy::Strict => "strict",
        })
    }
}

/// Two poles in an `n`-bit space and the class partition they induce.
#[derive(Clone, PartialEq, Eq)]
pub struct CodingScheme {
    width: u8,
    pole0: Codeword,
    pole1: Codeword,
    partition: Vec<ClassLabel>,
}

impl fmt::Debug for CodingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CodingScheme{self}")
    }
}

/// `(p0,p1)_n`, decimal poles.
impl fmt::Display for CodingScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})_{}", self.pole0, self.pole1, self.width)
    }
}

impl FromStr for CodingScheme {
    type Err = CodingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (p0, p1, n) = parse_notation(s)?;
        build_scheme_values(n, p0, p1)
    }
}

fn parse_notation(s: &str) -> Result<(u32, u32, u8), CodingError> {
    let bad = || CodingError::Notation(s.to_string());
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let rest = compact.strip_prefix('(').ok_or_else(bad)?;
    let (inner, tail) = rest.split_once(')').ok_or_else(bad)?;
    let n = tail.strip_prefix('_').ok_or_else(bad)?;
    let (a, b) = inner.split_once(',').ok_or_else(bad)?;
    let p0 = a.parse::<u32>().map_err(|_| bad())?;
    let p1 = b.parse::<u32>().map_err(|_| bad())?;
    let n = n.parse::<u8>().map_err(|_| bad())?;
    Ok((p0, p1, n))
}

/// Build the scheme with poles `pole0`, `pole1` in `n`-bit space by the
/// nearest-pole rule.
pub fn build_scheme(
    n: u8,
    pole0: Codeword,
    pole1: Codeword,
) -> Result<CodingScheme, CodingError> {
    check_width(n)?;
    for p in [pole0, pole1] {
        if p.width() != n {
            return Err(CodingError::WidthMismatch {
                left: n,
                right: p.width(),
            });
        }
    }
    if pole0 == pole1 {
        return Err(CodingError::EqualPoles(pole0.value()));
    }
    let partition = Codeword::all(n)?
        .map(|c| {
            let d0 = (c.value() ^ pole0.value()).count_ones();
            let d1 = (c.value() ^ pole1.value()).count_ones();
            match d0.cmp(&d1) {
                std::cmp::Ordering::Less => ClassLabel::Class0,
                std::cmp::Ordering::Greater => ClassLabel::Class1,
                std::cmp::Ordering::Equal => ClassLabel::ClassH,
            }
        })
        .collect();
    Ok(CodingScheme {
        width: n,
        pole0,
        pole1,
        partition,
    })
}

/// [`build_scheme`] from raw pole values.
pub fn build_scheme_values(n: u8, pole0: u32, pole1: u32) -> Result<CodingScheme, CodingError> {
    check_width(n)?;
    build_scheme(n, Codeword::new(pole0, n)?, Codeword::new(pole1, n)?)
}

impl CodingScheme {
    /// The conventional one-bit coding `(0,1)_1`.
    pub fn conventional() -> Self {
        build_scheme_values(1, 0, 1).expect("(0,1)_1 is valid")
    }

    pub fn width(&self) -> u8 {
        self.width
    }

    pub fn pole0(&self) -> Codeword {
        self.pole0
    }

    pub fn pole1(&self) -> Codeword {
        self.pole1
    }

    pub fn pole(&self, logic: bool) -> Codeword {
        if logic {
            self.pole1
        } else {
            self.pole0
        }
    }

    fn check(&self, c: Codeword) -> Result<(), CodingError> {
        if c.width() != self.width {
            return Err(CodingError::WidthMismatch {
                left: self.width,
                right: c.width(),
            });
        }
        Ok(())
    }

    pub fn classify(&self, c: Codeword) -> Result<ClassLabel, CodingError> {
        self.check(c)?;
        Ok(self.partition[c.value() as usize])
    }

    /// Class of a raw value; callers guarantee it fits the width.
    pub(crate) fn class_of(&self, value: u32) -> ClassLabel {
        self.partition[value as usize]
    }

    /// Nearest pole of `c`, or `None` when `c` is equidistant.
    pub fn transition(&self, c: Codeword) -> Result<Option<Codeword>, CodingError> {
        Ok(match self.classify(c)? {
            ClassLabel::Class0 => Some(self.pole0),
            ClassLabel::Class1 => Some(self.pole1),
            ClassLabel::ClassH => None,
        })
    }

    /// Map `c` to a pole; equidistant codes follow `policy`.
    pub fn correct(&self, c: Codeword, policy: HPolicy) -> Result<Codeword, CodingError> {
        self.decode(c, policy).map(|bit| self.pole(bit))
    }

    /// Logic value carried by `c`.
    pub fn decode(&self, c: Codeword, policy: HPolicy) -> Result<bool, CodingError> {
        self.check(c)?;
        self.decode_value(c.value(), policy)
    }

    pub(crate) fn decode_value(&self, value: u32, policy: HPolicy) -> Result<bool, CodingError> {
        match (self.class_of(value), policy) {
            (ClassLabel::Class0, _) | (ClassLabel::ClassH, HPolicy::AsZero) => Ok(false),
            (ClassLabel::Class1, _) | (ClassLabel::ClassH, HPolicy::AsOne) => Ok(true),
            (ClassLabel::ClassH, HPolicy::Strict) => Err(CodingError::Uncorrectable(value)),
        }
    }

    /// Members of `label`, ascending.
    pub fn members(&self, label: ClassLabel) -> Vec<Codeword> {
        self.partition
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == label)
            .map(|(v, _)| Codeword::new(v as u32, self.width).expect("in range"))
            .collect()
    }

    /// Members of `label` other than the poles, ascending.
    pub fn faulty_members(&self, label: ClassLabel) -> Vec<Codeword> {
        self.members(label)
            .into_iter()
            .filter(|c| *c != self.pole0 && *c != self.pole1)
            .collect()
    }

    pub fn class_h_is_empty(&self) -> bool {
        !self.partition.contains(&ClassLabel::ClassH)
    }

    pub fn pole_distance(&self) -> u32 {
        (self.pole0.value() ^ self.pole1.value()).count_ones()
    }
}

/// Ranking attributes of a scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SchemeQuality {
    pub pole_distance: u32,
    pub class_h_empty: bool,
    /// Largest distance at which a faulty code still falls to its own
    /// pole; 0 when the scheme has no correctable faulty code.
    pub max_correctable_distance: u32,
}

pub fn scheme_quality(scheme: &CodingScheme) -> SchemeQuality {
    let max_correctable_distance = Codeword::all(scheme.width)
        .expect("scheme width is valid")
        .filter(|c| *c != scheme.pole0 && *c != scheme.pole1)
        .filter_map(|c| match scheme.class_of(c.value()) {
            ClassLabel::Class0 => Some((c.value() ^ scheme.pole0.value()).count_ones()),
            ClassLabel::Class1 => Some((c.value() ^ scheme.pole1.value()).count_ones()),
            ClassLabel::ClassH => None,
        })
        .max()
        .unwrap_or(0);
    SchemeQuality {
        pole_distance: scheme.pole_distance(),
        class_h_empty: scheme.class_h_is_empty(),
        max_correctable_distance,
    }
}

/// Every ordered pole pair of the `n`-bit space, `pole0` ascending then `pole1` ascending.
pub fn enumerate_schemes(n: u8) -> Result<Vec<CodingScheme>, CodingError> {
    if n == 0 || n > MAX_ENUMERATION_WIDTH {
        return Err(CodingError::EnumerationRange(n));
    }
    let size = 1u32 << n;
    let mut out = Vec::with_capacity((size * (size - 1)) as usize);
    for p0 in 0..size {
        for p1 in (0..size).filter(|&p1| p1 != p0) {
            out.push(build_scheme_values(n, p0, p1)?);
        }
    }
    Ok(out)
}

/// Schemes sorted best-first: empty equidistant class, then wider pole
/// distance, then deeper correction, then enumeration order.
pub fn rank_schemes(n: u8) -> Result<Vec<(CodingScheme, SchemeQuality)>, CodingError> {
    let mut ranked: Vec<_> = enumerate_schemes(n)?
        .into_iter()
        .map(|s| {
            let q = scheme_quality(&s);
            (s, q)
        })
        .collect();
    // sort_by is stable, so ties keep enumeration order
    ranked.sort_by(|(_, a), (_, b)| {
        b.class_h_empty
            .cmp(&a.class_h_empty)
            .then(b.pole_distance.cmp(&a.pole_distance))
            .then(b.max_correctable_distance.cmp(&a.max_correctable_distance))
    });
    Ok(ranked)
}

/// Distance from `c` to each pole; exposed for reports.
pub fn pole_distances(scheme: &CodingScheme, c: Codeword) -> Result<(u32, u32), CodingError> {
    Ok((
        hamming_distance(c, scheme.pole0)?,
        hamming_distance(c, scheme.pole1)?,
    ))
}
