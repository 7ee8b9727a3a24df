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

//! Closed-form structure of two-party sequences.
//!
//! For coprime votes `p1 >= p2`, one period of every stationary sequence is
//! the word `1^k1 2 1^k2 2 ... 1^k_p2 2 1^tail`. The run lengths depend on
//! the cut point only through the cell `[l/(p1-p2), (l+1)/(p1-p2))` that
//! contains it, plus the isolated point `c = 1`.

use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::analysis::rle_encode;
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::region::CutpointRegion;

/// Votes of two parties reduced by their gcd, with `p1 = a * p2 + b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwoPartyDecomposition {
    pub p1: u64,
    pub p2: u64,
    /// gcd of the original votes.
    pub gcd: u64,
    pub a: u64,
    pub b: u64,
}

impl TwoPartyDecomposition {
    /// Number of constant cells in `[0, 1)`: `p1 - p2`, or one when the
    /// votes are equal.
    pub fn cells(&self) -> u64 {
        (self.p1 - self.p2).max(1)
    }
}

/// Reduces `(v1, v2)` by their gcd and splits `p1 = a * p2 + b`.
pub fn decompose(v1: u64, v2: u64) -> Result<TwoPartyDecomposition> {
    if v2 == 0 {
        return Err(Error::ZeroVotes { position: 1 });
    }
    if v1 < v2 {
        return Err(Error::UnorderedPair { first: v1, second: v2 });
    }
    let gcd = v1.gcd(&v2);
    let (p1, p2) = (v1 / gcd, v2 / gcd);
    let (a, b) = p1.div_rem(&p2);
    Ok(TwoPartyDecomposition { p1, p2, gcd, a, b })
}

/// Run lengths of one period: `k[i]` ones precede the `(i+1)`-th seat of
/// party 2, and `tail` ones close the period.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RunLengths {
    pub k: Vec<u64>,
    pub tail: u64,
}

impl RunLengths {
    pub fn new(k: Vec<u64>, tail: u64) -> Self {
        RunLengths { k, tail }
    }

    /// The word over `{1, 2}`.
    pub fn to_word(&self) -> Vec<usize> {
        let mut w = Vec::new();
        for &k in &self.k {
            w.extend(std::iter::repeat_n(1, k as usize));
            w.push(2);
        }
        w.extend(std::iter::repeat_n(1, self.tail as usize));
        w
    }

    /// Reads one period of a word over `{1, 2}` for the reduced pair `d`.
    pub fn from_word(d: &TwoPartyDecomposition, word: &[usize]) -> Result<Self> {
        let mut k = Vec::new();
        let mut run = 0u64;
        for &s in word {
            match s {
                1 => run += 1,
                2 => {
                    k.push(run);
                    run = 0;
                }
                other => return Err(Error::MalformedWord(format!("symbol {other} in a two-party word"))),
            }
        }
        let r = RunLengths { k, tail: run };
        r.check_structure(d)?;
        Ok(r)
    }

    fn ones(&self) -> u64 {
        self.k.iter().sum::<u64>() + self.tail
    }

    fn check_structure(&self, d: &TwoPartyDecomposition) -> Result<()> {
        if self.k.len() as u64 != d.p2 || self.ones() != d.p1 {
            return Err(Error::StructuralMismatch { runs: self.to_string(), ones: d.p1, twos: d.p2 });
        }
        Ok(())
    }
}

/// Caret run-length text of the word, e.g. `1^2 2 1^3 2 1`.
impl fmt::Display for RunLengths {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&rle_encode(&self.to_word()))
    }
}

/// Position of a cell `[l/(p1-p2), (l+1)/(p1-p2))`, with `l = nu * p2 + l'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CellIndex {
    pub ell: u64,
    pub nu: u64,
    pub ell_prime: u64,
}

impl CellIndex {
    pub fn new(d: &TwoPartyDecomposition, ell: u64) -> Result<Self> {
        if ell >= d.cells() {
            return Err(Error::CellOutOfRange { cell: ell, cells: d.cells() });
        }
        Ok(CellIndex { ell, nu: ell / d.p2, ell_prime: ell % d.p2 })
    }

    pub fn region(&self, d: &TwoPartyDecomposition) -> CutpointRegion {
        if d.p1 == d.p2 {
            return CutpointRegion::Whole;
        }
        let m = d.p1 - d.p2;
        CutpointRegion::Interval { lo: Rational::new(self.ell, m), hi: Rational::new(self.ell + 1, m) }
    }
}

fn to_u64(x: num_bigint::BigInt) -> u64 {
    x.to_u64().expect("run-length quantity fits in u64")
}

fn finish(d: &TwoPartyDecomposition, k: Vec<u64>) -> Result<RunLengths> {
    let used: u64 = k.iter().sum();
    let tail =
        d.p1.checked_sub(used)
            .ok_or_else(|| Error::Invariant(format!("run lengths sum to {used} > {}", d.p1)))?;
    Ok(RunLengths { k, tail })
}

/// Run lengths for cut point `c`.
///
/// With `C = (p1 - p2) c / p2`, the first run is `floor(C) + 1`. Later runs
/// are `a`, except `a + 1` at positions `ceil((j - frac(C)) p2 / b) + 1` for
/// `j = 1..=b`. The tail takes whatever ones remain.
pub fn runs_for_cut(d: &TwoPartyDecomposition, c: &Rational) -> Result<RunLengths> {
    if !c.in_unit_interval() {
        return Err(Error::CutOutOfRange(c.clone()));
    }
    let big_c = Rational::from(d.p1 - d.p2) * c / Rational::from(d.p2);
    let floor = big_c.floor();
    let frac = &big_c - &Rational::from_integer(floor.clone());
    let mut k = vec![d.a; d.p2 as usize];
    k[0] = to_u64(floor) + 1;
    let scale = Rational::new(d.p2, d.b.max(1));
    for j in 1..=d.b {
        let i = to_u64(((Rational::from(j) - &frac) * &scale).ceil()) + 1;
        if (2..=d.p2).contains(&i) {
            k[i as usize - 1] = d.a + 1;
        }
    }
    finish(d, k)
}

/// Run lengths shared by every cut point in cell `ell`.
pub fn runs_for_cell(d: &TwoPartyDecomposition, ell: u64) -> Result<RunLengths> {
    let cell = CellIndex::new(d, ell)?;
    let mut k = vec![d.a; d.p2 as usize];
    k[0] = cell.nu + 1;
    for j in 1..=d.b {
        let i = (j * d.p2 - cell.ell_prime).div_ceil(d.b) + 1;
        if i <= d.p2 {
            k[i as usize - 1] = d.a + 1;
        }
    }
    finish(d, k)
}

/// Run lengths of d'Hondt's method (`c = 1`): the first run is `a`, runs at
/// `ceil(j p2 / b)` are `a + 1`, and there is no tail.
pub fn dhondt_runs(d: &TwoPartyDecomposition) -> RunLengths {
    let mut k = vec![d.a; d.p2 as usize];
    for j in 1..=d.b {
        let i = (j * d.p2).div_ceil(d.b);
        k[i as usize - 1] = d.a + 1;
    }
    RunLengths { k, tail: 0 }
}

/// Numerators over `p1 - p2` of the cut-point bounds implied by each
/// prefix of the word: `[max lo, min hi)`.
fn interval_numerators(d: &TwoPartyDecomposition, r: &RunLengths) -> (i128, i128) {
    let (p1, p2) = (d.p1 as i128, d.p2 as i128);
    let mut prefix = 0i128;
    let mut lo = i128::MIN;
    let mut hi = i128::MAX;
    for (i, &k) in r.k.iter().enumerate() {
        prefix += k as i128;
        lo = lo.max(p2 * (prefix - 1) - p1 * i as i128);
        hi = hi.min(p2 * prefix - p1 * i as i128);
    }
    (lo, hi)
}

/// Whether the run lengths come from some stationary cut point.
///
/// Checks the first-run bound `1 <= k1 <= floor(p1/p2)`, the block-sum
/// bounds `floor(m p1/p2) <= k_{i+1} + ... + k_{i+m} <= floor(m p1/p2) + 1`,
/// and that the implied cut-point interval meets `[0, 1]`.
pub fn validate_runs(d: &TwoPartyDecomposition, r: &RunLengths) -> Result<bool> {
    r.check_structure(d)?;
    if d.p1 == d.p2 {
        return Ok(r.k == [1]);
    }
    let (p1, p2) = (d.p1 as u128, d.p2 as u128);
    let k1 = r.k[0] as u128;
    if k1 < 1 || k1 > p1 / p2 {
        return Ok(false);
    }
    let prefix: Vec<u128> = std::iter::once(0)
        .chain(r.k.iter().scan(0u128, |s, &k| {
            *s += k as u128;
            Some(*s)
        }))
        .collect();
    let n = r.k.len();
    for i in 1..n {
        for i2 in i + 1..=n {
            let sum = prefix[i2] - prefix[i];
            let floor = (i2 - i) as u128 * p1 / p2;
            if sum < floor || sum > floor + 1 {
                return Ok(false);
            }
        }
    }
    let (lo, hi) = interval_numerators(d, r);
    let denom = (d.p1 - d.p2) as i128;
    Ok(lo < hi && lo <= denom && hi > 0)
}

/// The cut points that produce the run lengths, or `None` when no
/// stationary method does.
///
/// A word without a tail comes only from `c = 1`.
pub fn infer_cutpoint(d: &TwoPartyDecomposition, r: &RunLengths) -> Result<Option<CutpointRegion>> {
    if !validate_runs(d, r)? {
        return Ok(None);
    }
    if d.p1 == d.p2 {
        return Ok(Some(CutpointRegion::Whole));
    }
    let (lo, hi) = interval_numerators(d, r);
    let denom = (d.p1 - d.p2) as i128;
    let region = if hi > denom {
        if lo != denom {
            return Err(Error::Invariant(format!("runs {r} admit an interval reaching past c = 1")));
        }
        CutpointRegion::Point1
    } else {
        CutpointRegion::Interval { lo: Rational::new(lo.max(0), denom), hi: Rational::new(hi, denom) }
    };
    if (region == CutpointRegion::Point1) != (r.tail == 0) {
        return Err(Error::Invariant(format!("runs {r} inferred as {region}")));
    }
    Ok(Some(region))
}

/// Cell index of a realizable word with a tail, read directly off the run
/// lengths: `nu = k1 - 1`, and `l'` is the largest `j p2 - (i_j - 1) b` over
/// the positions `i_j` of the long runs (at least zero).
///
/// Returns `None` for unrealizable words and for the `c = 1` word.
pub fn cell_for_runs(d: &TwoPartyDecomposition, r: &RunLengths) -> Result<Option<u64>> {
    if !validate_runs(d, r)? || r.tail == 0 || d.p1 == d.p2 {
        return Ok(None);
    }
    let nu = r.k[0] - 1;
    let long = r.k.iter().enumerate().skip(1).filter(|&(_, &k)| k == d.a + 1).map(|(i, _)| i as i128 + 1);
    let ell_prime =
        long.zip(1i128..).map(|(i, j)| j * d.p2 as i128 - (i - 1) * d.b as i128).fold(0, i128::max);
    Ok(Some(nu * d.p2 + ell_prime as u64))
}

/// Every two-party sequence, ordered by increasing cut point.
///
/// Unequal coprime votes give the `p1 - p2` cells of `[0, 1)` followed by
/// the point `c = 1`; equal votes give a single word for all of `[0, 1]`.
pub fn enumerate_two_party(v1: u64, v2: u64) -> Result<Vec<(CutpointRegion, RunLengths)>> {
    let d = decompose(v1, v2)?;
    if d.p1 == d.p2 {
        return Ok(vec![(CutpointRegion::Whole, runs_for_cell(&d, 0)?)]);
    }
    let mut out = Vec::with_capacity(d.cells() as usize + 1);
    for ell in 0..d.cells() {
        let cell = CellIndex::new(&d, ell)?;
        out.push((cell.region(&d), runs_for_cell(&d, ell)?));
    }
    out.push((CutpointRegion::Point1, dhondt_runs(&d)));
    Ok(out)
}
