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

//! Published fixtures and shared helpers for the integration tests.

#![allow(dead_code)]

use std::collections::BTreeSet;

use divseq_core::{breakpoints, generate, rle_decode, Rational, SignpostRule, TieBreakPolicy, VoteProfile};

/// Words for votes (16, 7): index `l` holds the cell `[l/9, (l+1)/9)`, the
/// last entry is `c = 1`.
pub const TABLE_16_7: [&str; 10] = [
    "1 2 1^2 2 1^2 2 1^2 2 1^3 2 1^2 2 1^2 2 1^2",
    "1 2 1^2 2 1^2 2 1^3 2 1^2 2 1^2 2 1^2 2 1^2",
    "1 2 1^2 2 1^2 2 1^3 2 1^2 2 1^2 2 1^3 2 1",
    "1 2 1^2 2 1^3 2 1^2 2 1^2 2 1^2 2 1^3 2 1",
    "1 2 1^2 2 1^3 2 1^2 2 1^2 2 1^3 2 1^2 2 1",
    "1 2 1^3 2 1^2 2 1^2 2 1^2 2 1^3 2 1^2 2 1",
    "1 2 1^3 2 1^2 2 1^2 2 1^3 2 1^2 2 1^2 2 1",
    "1^2 2 1^2 2 1^2 2 1^2 2 1^3 2 1^2 2 1^2 2 1",
    "1^2 2 1^2 2 1^2 2 1^3 2 1^2 2 1^2 2 1^2 2 1",
    "1^2 2 1^2 2 1^2 2 1^3 2 1^2 2 1^2 2 1^3 2",
];

/// Lower endpoints of the sixteen cells for votes (16, 11, 7).
pub const TABLE_16_11_7_LOWER: [(i64, i64); 16] = [
    (0, 1),
    (1, 9),
    (1, 5),
    (2, 9),
    (1, 4),
    (3, 9),
    (2, 5),
    (4, 9),
    (2, 4),
    (5, 9),
    (3, 5),
    (6, 9),
    (3, 4),
    (7, 9),
    (4, 5),
    (8, 9),
];

/// Words for votes (16, 11, 7): the sixteen cells in order, then `c = 1`.
pub const TABLE_16_11_7: [&str; 17] = [
    "1231213211231213121213121321123121",
    "1231213211231211321213121321123121",
    "1231213121231211321213121321123121",
    "1231213121231211321213121321121321",
    "1231213121231211321213121231121321",
    "1231213121213211321213121231121321",
    "1231213121213121321213121231121321",
    "1231213121213121321213121213121321",
    "1231213121213121231213121213121321",
    "1231211321213121231213121213121321",
    "1231211321213121231123121213121321",
    "1231211321213121231121321213121321",
    "1231211231213121231121321213121321",
    "1213211231213121231121321213121321",
    "1213211231213121231121321123121321",
    "1213211231213121213121321123121321",
    "1213211231213121213121321123121123",
];

/// Pairwise words for votes (16, 11, 7) with `c` in `[0, 1/9)`.
pub const PAIRS_16_11_7: [(usize, usize, &str); 3] =
    [(1, 2, "121212112121121211212112121"), (1, 3, "13113113113111311311311"), (2, 3, "232322323223232232")];

/// d'Hondt word for (32, 14) over one period of 23 seats.
pub const DHONDT_32_14: &str = "1^2 2 1^2 2 1^2 2 1^3 2 1^2 2 1^2 2 1^3 2";

/// Hill-Huntington words for (23, 4).
pub const HH_23_4_27: &str = "1 2 1^7 2 1^6 2 1^6 2 1^3";
pub const HH_23_4_54: &str = "1 2 1^7 2 1^6 2 1^6 2 1^3 1^3 2 1^5 2 1^6 2 1^6 2 1^3";

/// Northern Ireland 2022 seats, in the order the parties are listed.
pub const NI_LABELS: [&str; 8] = ["SF", "DUP", "AP", "UUP", "SDLP", "IND", "TUV", "PBP"];
pub const NI_SEATS: [u64; 8] = [27, 25, 17, 9, 8, 2, 1, 1];

pub fn word(text: &str) -> Vec<usize> {
    rle_decode(text).unwrap()
}

pub fn digits(text: &str) -> Vec<usize> {
    text.bytes().map(|b| (b - b'0') as usize).collect()
}

pub fn profile(votes: &[u64]) -> VoteProfile {
    VoteProfile::new(votes.to_vec()).unwrap()
}

pub fn engine(profile: &VoteProfile, c: &Rational, house: usize) -> Vec<usize> {
    let rule = SignpostRule::stationary(c.clone()).unwrap();
    generate(profile, &rule, house, None, TieBreakPolicy::default()).unwrap()
}

/// All non-increasing vote vectors with `1..=max_parties` entries in
/// `1..=max_votes`.
pub fn profiles(max_parties: usize, max_votes: u64) -> Vec<Vec<u64>> {
    fn rec(prefix: &mut Vec<u64>, cap: u64, left: usize, out: &mut Vec<Vec<u64>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        if left == 0 {
            return;
        }
        for v in 1..=cap {
            prefix.push(v);
            rec(prefix, v, left - 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), max_votes, max_parties, &mut out);
    out
}

/// Cut points that hit every sequence of the profile: every cell midpoint
/// plus 0 and 1, sorted.
pub fn probe_cuts(profile: &VoteProfile) -> Vec<Rational> {
    let ends = breakpoints(profile).endpoints;
    let mut cuts: BTreeSet<Rational> = [Rational::zero(), Rational::one()].into();
    for (i, lo) in ends.iter().enumerate() {
        let hi = ends.get(i + 1).cloned().unwrap_or_else(Rational::one);
        cuts.insert(lo.midpoint(&hi));
    }
    cuts.into_iter().collect()
}

/// Sum of `gcd` over every non-empty subset, by size, listing subsets.
pub fn subset_gcd_sums(moduli: &[u64]) -> Vec<u128> {
    let mut sums = vec![0u128; moduli.len()];
    for mask in 1u64..(1 << moduli.len()) {
        let mut g = 0u64;
        for (i, &m) in moduli.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g = gcd(g, m);
            }
        }
        sums[mask.count_ones() as usize - 1] += g as u128;
    }
    sums
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
