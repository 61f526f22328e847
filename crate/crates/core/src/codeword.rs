// SPDX-License-Identifier: Apache-2.0

//! Fixed-width binary words and the Hamming metric over them.

use std::fmt;

use crate::error::CodingError;

/// Widest word the toolkit handles.
pub const MAX_WIDTH: u8 = 16;

/// An `n`-bit word, `1 <= n <= 16`, with `value < 2^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    value: u32,
    width: u8,
}

impl Codeword {
    pub fn new(value: u32, width: u8) -> Result<Self, CodingError> {
        check_width(width)?;
        if u64::from(value) >= 1u64 << width {
            return Err(CodingError::ValueOutOfRange { value, width });
        }
        Ok(Codeword { value, width })
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn width(self) -> u8 {
        self.width
    }

    /// Bit `k` counted from the most significant end, 1-based (`a1 a2 ... an`).
    pub fn bit(self, k: u8) -> bool {
        debug_assert!(k >= 1 && k <= self.width);
        (self.value >> (self.width - k)) & 1 == 1
    }

    /// Bitwise complement within the word width.
    pub fn complement(self) -> Codeword {
        Codeword {
            value: !self.value & mask(self.width),
            width: self.width,
        }
    }

    /// All `2^n` words of width `n` in ascending order.
    pub fn all(width: u8) -> Result<impl Iterator<Item = Codeword>, CodingError> {
        check_width(width)?;
        Ok((0..(1u32 << width)).map(move |value| Codeword { value, width }))
    }

    /// Binary rendering, most significant bit first.
    pub fn to_binary(self) -> String {
        format!("{:0w$b}", self.value, w = self.width as usize)
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub(crate) fn check_width(width: u8) -> Result<(), CodingError> {
    if width == 0 || width > MAX_WIDTH {
        return Err(CodingError::WidthOutOfRange(width));
    }
    Ok(())
}

pub(crate) fn mask(width: u8) -> u32 {
    ((1u64 << width) - 1) as u32
}

/// Number of positions at which two equal-width words differ.
pub fn hamming_distance(x: Codeword, y: Codeword) -> Result<u32, CodingError> {
    if x.width != y.width {
        return Err(CodingError::WidthMismatch {
            left: x.width,
            right: y.width,
        });
    }
    Ok((x.value ^ y.value).count_ones())
}
