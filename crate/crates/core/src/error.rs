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

use thiserror::Error;

use crate::arith::Rational;

/// Errors raised by the library.
///
/// Every variant except [`Error::Invariant`] describes bad input. An
/// `Invariant` error means a computed result contradicted a property the
/// algorithms guarantee, and always indicates a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a vote profile needs at least one party")]
    EmptyProfile,
    #[error("vote totals must be positive integers (party {position} has 0)")]
    ZeroVotes { position: usize },
    #[error("sum of vote totals overflows 64 bits")]
    VoteOverflow,
    #[error("cut point {0} lies outside [0, 1]")]
    CutOutOfRange(Rational),
    #[error("expected {expected} entries, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("rank {rank} is outside 1..={parties}")]
    RankOutOfRange { rank: usize, parties: usize },
    #[error("the first vote total must not be smaller than the second ({first} < {second})")]
    UnorderedPair { first: u64, second: u64 },
    #[error("cell index {cell} is outside 0..{cells}")]
    CellOutOfRange { cell: u64, cells: u64 },
    #[error("run lengths {runs} do not describe {ones} seats for party 1 and {twos} for party 2")]
    StructuralMismatch { runs: String, ones: u64, twos: u64 },
    #[error("word must not be empty")]
    EmptyWord,
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("malformed rational: {0}")]
    MalformedRational(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
