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

//! n-party sequences built from their two-party projections.
//!
//! Restricting an n-party sequence to two parties gives exactly the
//! two-party sequence of that pair. [`lift`] runs this in reverse, and the
//! cut-point cells of all pairs together refine `[0, 1)` into the cells of
//! the n-party problem.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;

use crate::arith::Rational;
use crate::engine::{PeriodicSequence, VoteProfile};
use crate::error::{Error, Result};
use crate::region::CutpointRegion;
use crate::two_party::{decompose, infer_cutpoint, runs_for_cut, RunLengths};

/// An unordered pair of canonical ranks, stored with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairKey {
    pub i: usize,
    pub j: usize,
}

impl PairKey {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(0 < i && i < j, "pair ranks must satisfy 0 < i < j");
        PairKey { i, j }
    }
}

impl fmt::Display for PairKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.i, self.j)
    }
}

fn pairs(n: usize) -> impl Iterator<Item = PairKey> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| PairKey::new(i, j)))
}

/// The two-party word of `pair` under cut `c`, labelled with the pair's
/// ranks and repeated to length `(p_i + p_j) / gcd(all votes)`.
fn pair_word(profile: &VoteProfile, pair: PairKey, c: &Rational) -> Result<Vec<usize>> {
    let (pi, pj) = (profile.votes_of(pair.i), profile.votes_of(pair.j));
    let d = decompose(pi, pj)?;
    let block: Vec<usize> =
        runs_for_cut(&d, c)?.to_word().into_iter().map(|s| if s == 1 { pair.i } else { pair.j }).collect();
    let repeats = (d.gcd / profile.gcd()) as usize;
    Ok(block.repeat(repeats))
}

/// Two-party words of every pair of ranks for cut point `c`.
pub fn pairwise_tables(profile: &VoteProfile, c: &Rational) -> Result<BTreeMap<PairKey, Vec<usize>>> {
    if !c.in_unit_interval() {
        return Err(Error::CutOutOfRange(c.clone()));
    }
    pairs(profile.len()).map(|p| Ok((p, pair_word(profile, p, c)?))).collect()
}

/// Rebuilds one period of the n-party sequence from the pairwise words.
///
/// At each step exactly one rank leads all `n - 1` words it appears in; it
/// takes the seat and is popped from those words. Every word must be used
/// up after one period.
pub fn lift(profile: &VoteProfile, c: &Rational) -> Result<PeriodicSequence> {
    let tables = pairwise_tables(profile, c)?;
    let n = profile.len();
    let period = profile.period() as usize;
    let words: Vec<(PairKey, Vec<usize>)> = tables.into_iter().collect();
    let mut cursor = vec![0usize; words.len()];
    let mut out = Vec::with_capacity(period);
    let mut leads = vec![0usize; n + 1];

    for step in 0..period {
        leads.iter_mut().for_each(|x| *x = 0);
        for ((_, w), &at) in words.iter().zip(&cursor) {
            if let Some(&s) = w.get(at) {
                leads[s] += 1;
            }
        }
        let mut winners = (1..=n).filter(|&r| leads[r] == n - 1);
        let rank = match (winners.next(), winners.next()) {
            (Some(r), None) => r,
            _ => {
                return Err(Error::Invariant(format!(
                    "step {step}: no unique rank leads {} pairwise words",
                    n - 1
                )))
            }
        };
        for ((key, w), at) in words.iter().zip(cursor.iter_mut()) {
            if (key.i == rank || key.j == rank) && w.get(*at) == Some(&rank) {
                *at += 1;
            }
        }
        out.push(rank);
    }
    if words.iter().zip(&cursor).any(|((_, w), &at)| at != w.len()) {
        return Err(Error::Invariant("pairwise words not drained after one period".into()));
    }
    Ok(PeriodicSequence { profile: profile.clone(), period: out, cut_region: None })
}

/// Cut points where some pair's sequence changes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BreakpointSet {
    /// `(p_i - p_j) / gcd(p_i, p_j)` per pair; zero for equal votes.
    pub moduli: Vec<(PairKey, u64)>,
    /// Sorted union of `{0, 1/m, ..., (m-1)/m}` over the non-zero moduli;
    /// always contains 0.
    pub endpoints: Vec<Rational>,
}

pub fn breakpoints(profile: &VoteProfile) -> BreakpointSet {
    let moduli: Vec<(PairKey, u64)> = pairs(profile.len())
        .map(|p| {
            let (pi, pj) = (profile.votes_of(p.i), profile.votes_of(p.j));
            (p, (pi - pj) / pi.gcd(&pj))
        })
        .collect();
    let distinct: BTreeSet<u64> = moduli.iter().map(|&(_, m)| m).filter(|&m| m > 0).collect();
    let mut endpoints = BTreeSet::from([Rational::zero()]);
    for m in distinct {
        endpoints.extend((1..m).map(|l| Rational::new(l, m)));
    }
    BreakpointSet { moduli, endpoints: endpoints.into_iter().collect() }
}

/// Moduli of the pairs of distinct vote totals, with repeated totals
/// collapsed to a single party.
fn collapsed_moduli(profile: &VoteProfile) -> Vec<u64> {
    let distinct: Vec<u64> = {
        let mut v = profile.canonical_votes().to_vec();
        v.dedup();
        v
    };
    let mut out = Vec::new();
    for (x, &pi) in distinct.iter().enumerate() {
        for &pj in &distinct[x + 1..] {
            out.push((pi - pj) / pi.gcd(&pj));
        }
    }
    out
}

/// `terms[t - 1]` is the sum of `gcd(m_T)` over all `t`-element sets `T` of
/// pairs with distinct votes, so that the number of breakpoints is
/// `terms[0] - terms[1] + terms[2] - ...`.
///
/// The sums are accumulated by subset size and gcd value instead of by
/// listing subsets, so any number of pairs is fine.
pub fn inclusion_exclusion_terms(profile: &VoteProfile) -> Vec<u128> {
    let moduli = collapsed_moduli(profile);
    // by_size[t][g] = number of t-subsets whose moduli have gcd g
    let mut by_size: Vec<BTreeMap<u64, u128>> = vec![BTreeMap::new(); moduli.len() + 1];
    for (seen, &m) in moduli.iter().enumerate() {
        for t in (1..=seen).rev() {
            let grown: Vec<(u64, u128)> = by_size[t].iter().map(|(&g, &n)| (g.gcd(&m), n)).collect();
            for (g, n) in grown {
                *by_size[t + 1].entry(g).or_default() += n;
            }
        }
        *by_size[1].entry(m).or_default() += 1;
    }
    by_size[1..].iter().map(|level| level.iter().map(|(&g, &n)| g as u128 * n).sum()).collect()
}

/// Number of distinct stationary sequences for the profile.
///
/// The breakpoint count is taken both directly and by inclusion-exclusion;
/// disagreement is reported as an invariant violation.
pub fn count_sequences(profile: &VoteProfile) -> Result<u64> {
    if collapsed_moduli(profile).is_empty() {
        return Ok(1);
    }
    let direct = breakpoints(profile).endpoints.len() as i128;
    let alternating: i128 = inclusion_exclusion_terms(profile)
        .iter()
        .enumerate()
        .map(|(t, &s)| if t % 2 == 0 { s as i128 } else { -(s as i128) })
        .sum();
    if direct != alternating {
        return Err(Error::Invariant(format!(
            "union has {direct} breakpoints, inclusion-exclusion gives {alternating}"
        )));
    }
    Ok(direct as u64 + 1)
}

/// Every stationary sequence with its cut-point region, ordered by
/// increasing cut point.
pub fn enumerate_n_party(profile: &VoteProfile) -> Result<Vec<(CutpointRegion, PeriodicSequence)>> {
    let regions: Vec<CutpointRegion> = if collapsed_moduli(profile).is_empty() {
        vec![CutpointRegion::Whole]
    } else {
        let ends = breakpoints(profile).endpoints;
        let mut regions: Vec<CutpointRegion> = ends
            .iter()
            .zip(ends.iter().skip(1).chain(std::iter::once(&Rational::one())))
            .map(|(lo, hi)| CutpointRegion::Interval { lo: lo.clone(), hi: hi.clone() })
            .collect();
        regions.push(CutpointRegion::Point1);
        regions
    };
    regions
        .into_iter()
        .map(|region| {
            let mut seq = lift(profile, &region.representative())?;
            seq.cut_region = Some(region.clone());
            Ok((region, seq))
        })
        .collect()
}

/// The cut points whose sequence has `word` as its period, or `None` when
/// no stationary method produces it.
///
/// Each pairwise projection is checked and inverted separately; the
/// intersection of the resulting regions is then confirmed by lifting at
/// its representative point.
pub fn verify_sequence(profile: &VoteProfile, word: &[usize]) -> Result<Option<CutpointRegion>> {
    let n = profile.len();
    let period = profile.period() as usize;
    if word.len() != period {
        return Err(Error::LengthMismatch { expected: period, actual: word.len() });
    }
    if let Some(&rank) = word.iter().find(|&&r| r == 0 || r > n) {
        return Err(Error::RankOutOfRange { rank, parties: n });
    }
    let mut region = CutpointRegion::Whole;
    for pair in pairs(n) {
        let Some(r) = pair_region(profile, pair, word)? else {
            return Ok(None);
        };
        match region.intersect(&r) {
            Some(x) => region = x,
            None => return Ok(None),
        }
    }
    let lifted = lift(profile, &region.representative())?;
    Ok((lifted.period == word).then_some(region))
}

fn pair_region(profile: &VoteProfile, pair: PairKey, word: &[usize]) -> Result<Option<CutpointRegion>> {
    let (pi, pj) = (profile.votes_of(pair.i), profile.votes_of(pair.j));
    let d = decompose(pi, pj)?;
    let sub: Vec<usize> = word
        .iter()
        .filter(|&&s| s == pair.i || s == pair.j)
        .map(|&s| if s == pair.i { 1 } else { 2 })
        .collect();
    let block = (d.p1 + d.p2) as usize;
    if sub.len() != ((pi + pj) / profile.gcd()) as usize {
        return Ok(None);
    }
    if sub.iter().enumerate().any(|(t, &s)| s != sub[t % block]) {
        return Ok(None);
    }
    match RunLengths::from_word(&d, &sub[..block]) {
        Ok(runs) => infer_cutpoint(&d, &runs),
        Err(Error::StructuralMismatch { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}
