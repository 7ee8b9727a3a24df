// Copyright 2026 The divseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use std::fmt;

use crate::arith::Rational;

/// A set of cut points that all produce the same seat sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CutpointRegion {
    /// The half-open interval `[lo, hi)` with `0 <= lo < hi <= 1`.
    Interval { lo: Rational, hi: Rational },
    /// The single cut point `c = 1` (d'Hondt).
    Point1,
    /// Every cut point in the closed interval `[0, 1]`.
    Whole,
}

impl CutpointRegion {
    /// Builds `[lo, hi)`, returning `None` when it is empty or not inside
    /// `[0, 1]`.
    pub fn interval(lo: Rational, hi: Rational) -> Option<Self> {
        (lo < hi && !lo.is_negative() && hi <= Rational::one()).then_some(CutpointRegion::Interval { lo, hi })
    }

    pub fn contains(&self, c: &Rational) -> bool {
        match self {
            CutpointRegion::Interval { lo, hi } => lo <= c && c < hi,
            CutpointRegion::Point1 => c.is_one(),
            CutpointRegion::Whole => c.in_unit_interval(),
        }
    }

    /// An interior point used to evaluate the region: the midpoint of an
    /// interval, `1` for the d'Hondt point, `1/2` for the whole range.
    pub fn representative(&self) -> Rational {
        match self {
            CutpointRegion::Interval { lo, hi } => lo.midpoint(hi),
            CutpointRegion::Point1 => Rational::one(),
            CutpointRegion::Whole => Rational::new(1, 2),
        }
    }

    pub fn lower(&self) -> Rational {
        match self {
            CutpointRegion::Interval { lo, .. } => lo.clone(),
            CutpointRegion::Point1 => Rational::one(),
            CutpointRegion::Whole => Rational::zero(),
        }
    }

    pub fn intersect(&self, other: &CutpointRegion) -> Option<CutpointRegion> {
        use CutpointRegion::*;
        match (self, other) {
            (Whole, r) | (r, Whole) => Some(r.clone()),
            (Point1, Point1) => Some(Point1),
            (Point1, Interval { .. }) | (Interval { .. }, Point1) => None,
            (Interval { lo: a, hi: b }, Interval { lo: c, hi: d }) => {
                CutpointRegion::interval(a.max(c).clone(), b.min(d).clone())
            }
        }
    }
}

/// `[lo, hi)` for intervals, `1` for the d'Hondt point and `[0/1, 1/1]` for
/// the whole range.
impl fmt::Display for CutpointRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutpointRegion::Interval { lo, hi } => write!(f, "[{lo}, {hi})"),
            CutpointRegion::Point1 => f.write_str("1"),
            CutpointRegion::Whole => f.write_str("[0/1, 1/1]"),
        }
    }
}
