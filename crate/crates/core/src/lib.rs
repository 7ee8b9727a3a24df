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

//! Seat-award sequences of stationary divisor apportionment methods.
//!
//! A stationary divisor method with cut point `c` in `[0, 1]` awards each
//! next seat to the party maximizing `votes / (seats + c)`: `c = 0` is
//! Adams, `c = 1/2` Sainte-Laguë/Webster, `c = 1` d'Hondt/Jefferson. With
//! integer votes every such sequence is periodic with period
//! `sum(votes) / gcd(votes)`, and only finitely many sequences occur as `c`
//! ranges over `[0, 1]`.
//!
//! The crate generates these sequences, derives them in closed form for two
//! parties, lifts pairwise sequences to n parties, counts and enumerates
//! them, and maps a given sequence back to the cut points that produce it.
//! All arithmetic is exact.

pub mod analysis;
pub mod arith;
pub mod engine;
pub mod error;
pub mod multi_party;
pub mod region;
pub mod two_party;

pub use analysis::{
    adams_from_dhondt, format_word, lex_compare, minimal_period, parse_word, rle_decode, rle_encode,
    LexOrdering,
};
pub use arith::{compare_claims, ClaimComparator, Rational, SignpostRule};
pub use engine::{
    generate, generate_period, next_seat, totals, Apportionment, PeriodicSequence, TieBreakPolicy,
    VoteProfile,
};
pub use error::{Error, Result};
pub use multi_party::{
    breakpoints, count_sequences, enumerate_n_party, inclusion_exclusion_terms, lift, pairwise_tables,
    verify_sequence, BreakpointSet, PairKey,
};
pub use region::CutpointRegion;
pub use two_party::{
    cell_for_runs, decompose, dhondt_runs, enumerate_two_party, infer_cutpoint, runs_for_cell, runs_for_cut,
    validate_runs, CellIndex, RunLengths, TwoPartyDecomposition,
};
