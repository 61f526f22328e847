// SPDX-License-Identifier: Apache-2.0

//! Nearest-pole decoding over an arbitrary finite metric space.

use crate::codeword::Codeword;
use crate::error::CodingError;
use crate::scheme::HPolicy;

/// A finite point set with a symmetric, non-negative distance that is zero
/// on the diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteMetricSpace<P> {
    points: Vec<P>,
    // row-major |points| x |points|
    distance: Vec<f64>,
}

impl<P: PartialEq> FiniteMetricSpace<P> {
    pub fn new<F>(points: Vec<P>, mut distance: F) -> Result<Self, CodingError>
    where
        F: FnMut(&P, &P) -> f64,
    {
        let len = points.len();
        let mut table = Vec::with_capacity(len * len);
        for a in &points {
            for b in &points {
                table.push(distance(a, b));
            }
        }
        for i in 0..len {
            for j in 0..len {
                if points[i] == points[j] && i != j {
                    return Err(CodingError::InvalidMetric("duplicate point".into()));
                }
                let d = table[i * len + j];
                if !d.is_finite() || d < 0.0 {
                    return Err(CodingError::InvalidMetric(format!(
                        "distance ({i},{j}) = {d} is not a finite non-negative value"
                    )));
                }
                if d != table[j * len + i] {
                    return Err(CodingError::InvalidMetric(format!(
                        "distance ({i},{j}) is not symmetric"
                    )));
                }
            }
            if table[i * len + i] != 0.0 {
                return Err(CodingError::InvalidMetric(format!(
                    "self-distance of point {i} is nonzero"
                )));
            }
        }
        Ok(FiniteMetricSpace {
            points,
            distance: table,
        })
    }

    pub fn points(&self) -> &[P] {
        &self.points
    }

    pub fn index_of(&self, p: &P) -> Option<usize> {
        self.points.iter().position(|q| q == p)
    }

    pub fn distance(&self, a: &P, b: &P) -> Result<f64, CodingError> {
        let i = self.index_of(a).ok_or(CodingError::UnknownPoint)?;
        let j = self.index_of(b).ok_or(CodingError::UnknownPoint)?;
        Ok(self.distance[i * self.points.len() + j])
    }

    /// The pole strictly nearer to `x`; on a tie `tie` picks the pole
    /// (`AsZero` -> `pole0`, `AsOne` -> `pole1`, `Strict` -> error).
    pub fn decode<'a>(
        &'a self,
        pole0: &P,
        pole1: &P,
        x: &P,
        tie: HPolicy,
    ) -> Result<&'a P, CodingError> {
        let i0 = self.index_of(pole0).ok_or(CodingError::UnknownPoint)?;
        let i1 = self.index_of(pole1).ok_or(CodingError::UnknownPoint)?;
        let ix = self.index_of(x).ok_or(CodingError::UnknownPoint)?;
        let n = self.points.len();
        let d0 = self.distance[ix * n + i0];
        let d1 = self.distance[ix * n + i1];
        let pick = if d0 < d1 {
            i0
        } else if d1 < d0 {
            i1
        } else {
            match tie {
                HPolicy::AsZero => i0,
                HPolicy::AsOne => i1,
                HPolicy::Strict => return Err(CodingError::Uncorrectable(ix as u32)),
            }
        };
        Ok(&self.points[pick])
    }
}

impl FiniteMetricSpace<Codeword> {
    /// All `n`-bit words under the Hamming distance.
    pub fn hamming(n: u8) -> Result<Self, CodingError> {
        let points: Vec<Codeword> = Codeword::all(n)?.collect();
        FiniteMetricSpace::new(points, |a, b| (a.value() ^ b.value()).count_ones() as f64)
    }
}

/// Free-function form of [`FiniteMetricSpace::decode`] with pole0 on ties.
pub fn generalized_decode<'a, P: PartialEq>(
    space: &'a FiniteMetricSpace<P>,
    pole0: &P,
    pole1: &P,
    x: &P,
) -> Result<&'a P, CodingError> {
    space.decode(pole0, pole1, x, HPolicy::AsZero)
}
