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

//! Sequential seat allocation.
//!
//! Parties are identified by canonical rank: rank 1 has the most votes, and
//! parties with equal votes keep the order in which they were given.

use std::cmp::Ordering;

use num_integer::Integer;

use crate::arith::{ClaimComparator, Rational, SignpostRule};
use crate::error::{Error, Result};
use crate::region::CutpointRegion;

/// Vote totals together with their canonical (descending) ordering.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VoteProfile {
    votes: Vec<u64>,
    canonical: Vec<u64>,
    /// `user_of[r - 1]` is the user position of rank `r`.
    user_of: Vec<usize>,
    /// `rank_of[u]` is the rank of user position `u`.
    rank_of: Vec<usize>,
    gcd: u64,
    period: u64,
}

impl VoteProfile {
    pub fn new(votes: Vec<u64>) -> Result<Self> {
        if votes.is_empty() {
            return Err(Error::EmptyProfile);
        }
        if let Some(position) = votes.iter().position(|&v| v == 0) {
            return Err(Error::ZeroVotes { position });
        }
        let total = votes.iter().try_fold(0u64, |acc, &v| acc.checked_add(v)).ok_or(Error::VoteOverflow)?;
        let gcd = votes.iter().fold(0u64, |g, &v| g.gcd(&v));

        let mut user_of: Vec<usize> = (0..votes.len()).collect();
        // stable, so equal votes keep user order
        user_of.sort_by(|&x, &y| votes[y].cmp(&votes[x]));
        let mut rank_of = vec![0; votes.len()];
        for (r, &u) in user_of.iter().enumerate() {
            rank_of[u] = r + 1;
        }
        let canonical = user_of.iter().map(|&u| votes[u]).collect();
        Ok(VoteProfile { votes, canonical, user_of, rank_of, gcd, period: total / gcd })
    }

    /// Number of parties.
    pub fn len(&self) -> usize {
        self.votes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Votes in the order they were supplied.
    pub fn votes(&self) -> &[u64] {
        &self.votes
    }

    /// Votes sorted non-increasingly; index `r - 1` holds rank `r`.
    pub fn canonical_votes(&self) -> &[u64] {
        &self.canonical
    }

    /// Votes of the party with canonical rank `rank` (1-based).
    pub fn votes_of(&self, rank: usize) -> u64 {
        self.canonical[rank - 1]
    }

    /// Canonical rank of the party at user position `position` (0-based).
    pub fn rank_of(&self, position: usize) -> usize {
        self.rank_of[position]
    }

    /// User position (0-based) of canonical rank `rank`.
    pub fn position_of(&self, rank: usize) -> usize {
        self.user_of[rank - 1]
    }

    /// Ranks listed by user position.
    pub fn ranks(&self) -> &[usize] {
        &self.rank_of
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    /// Sum of the votes divided by their gcd: the exact period of every
    /// stationary sequence.
    pub fn period(&self) -> u64 {
        self.period
    }

    /// Seats per party after one full period, in canonical order.
    pub fn reduced_votes(&self) -> Vec<u64> {
        self.canonical.iter().map(|v| v / self.gcd).collect()
    }
}

/// Seats held per party, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Apportionment {
    seats: Vec<u64>,
}

impl Apportionment {
    pub fn new(seats: Vec<u64>) -> Self {
        Apportionment { seats }
    }

    pub fn zeros(parties: usize) -> Self {
        Apportionment { seats: vec![0; parties] }
    }

    /// Reorders seat counts given in user order into canonical order.
    pub fn from_user_order(profile: &VoteProfile, seats: &[u64]) -> Result<Self> {
        check_len(profile.len(), seats.len())?;
        Ok(Apportionment { seats: (1..=profile.len()).map(|r| seats[profile.position_of(r)]).collect() })
    }

    /// Seat counts in user order.
    pub fn to_user_order(&self, profile: &VoteProfile) -> Vec<u64> {
        (0..self.seats.len()).map(|u| self.seats[profile.rank_of(u) - 1]).collect()
    }

    pub fn seats(&self) -> &[u64] {
        &self.seats
    }

    /// Seats held by canonical rank `rank`.
    pub fn of(&self, rank: usize) -> u64 {
        self.seats[rank - 1]
    }

    pub fn house(&self) -> u64 {
        self.seats.iter().sum()
    }

    fn award(&mut self, rank: usize) {
        self.seats[rank - 1] += 1;
    }
}

/// Who wins an exact tie between claims.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TieBreakPolicy {
    /// The party with more votes wins.
    #[default]
    FavorLargerVotes,
    /// The party with fewer votes wins.
    FavorSmallerVotes,
}

/// One period of a stationary seat sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicSequence {
    pub profile: VoteProfile,
    /// Canonical ranks, one per seat; its length is the profile's period.
    pub period: Vec<usize>,
    /// The cut points this sequence was produced for, when known.
    pub cut_region: Option<CutpointRegion>,
}

impl PeriodicSequence {
    pub fn len(&self) -> usize {
        self.period.len()
    }

    pub fn is_empty(&self) -> bool {
        self.period.is_empty()
    }
}

fn check_len(expected: usize, actual: usize) -> Result<()> {
    if expected != actual {
        return Err(Error::LengthMismatch { expected, actual });
    }
    Ok(())
}

fn pick(
    profile: &VoteProfile,
    current: &Apportionment,
    claims: &ClaimComparator,
    tie: TieBreakPolicy,
) -> usize {
    let votes = profile.canonical_votes();
    let seats = current.seats();
    let mut best = 0;
    for r in 1..votes.len() {
        let ord = claims.compare(votes[r], seats[r], votes[best], seats[best]);
        // equal votes never displace the earlier rank
        let wins = match ord {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => match tie {
                TieBreakPolicy::FavorLargerVotes => votes[r] > votes[best],
                TieBreakPolicy::FavorSmallerVotes => votes[r] < votes[best],
            },
        };
        if wins {
            best = r;
        }
    }
    best + 1
}

/// Rank of the party awarded the next seat.
pub fn next_seat(
    profile: &VoteProfile,
    current: &Apportionment,
    rule: &SignpostRule,
    tie: TieBreakPolicy,
) -> Result<usize> {
    check_len(profile.len(), current.seats().len())?;
    Ok(pick(profile, current, &ClaimComparator::new(rule), tie))
}

/// The first `house` seat awards, starting from `initial` (all zeros when
/// `None`). Pre-assigned seats are not part of the returned sequence.
pub fn generate(
    profile: &VoteProfile,
    rule: &SignpostRule,
    house: usize,
    initial: Option<&Apportionment>,
    tie: TieBreakPolicy,
) -> Result<Vec<usize>> {
    let mut current = match initial {
        Some(a) => {
            check_len(profile.len(), a.seats().len())?;
            a.clone()
        }
        None => Apportionment::zeros(profile.len()),
    };
    let claims = ClaimComparator::new(rule);
    let mut out = Vec::with_capacity(house);
    for _ in 0..house {
        let r = pick(profile, &current, &claims, tie);
        current.award(r);
        out.push(r);
    }
    Ok(out)
}

/// One full period of the stationary sequence with cut point `cut`.
pub fn generate_period(
    profile: &VoteProfile,
    cut: &Rational,
    tie: TieBreakPolicy,
) -> Result<PeriodicSequence> {
    let rule = SignpostRule::stationary(cut.clone())?;
    let period = generate(profile, &rule, profile.period() as usize, None, tie)?;
    Ok(PeriodicSequence { profile: profile.clone(), period, cut_region: None })
}

/// Seats per rank in `sequence`.
pub fn totals(sequence: &[usize], parties: usize) -> Result<Apportionment> {
    let mut a = Apportionment::zeros(parties);
    for &rank in sequence {
        if rank == 0 || rank > parties {
            return Err(Error::RankOutOfRange { rank, parties });
        }
        a.award(rank);
    }
    Ok(a)
}
