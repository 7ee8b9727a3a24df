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

//! Word utilities: minimal periods, lexicographic comparison, the Adams
//! prefix identity and run-length text.

use std::cmp::Ordering;

use crate::arith::SignpostRule;
use crate::engine::{generate, TieBreakPolicy, VoteProfile};
use crate::error::{Error, Result};

/// Result of comparing two words of equal length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LexOrdering {
    pub ordering: Ordering,
    /// 1-based position of the first difference, `None` when equal.
    pub first_difference: Option<usize>,
}

/// Smallest `q` dividing `word.len()` with `word[k + q] == word[k]`.
pub fn minimal_period<T: PartialEq>(word: &[T]) -> Result<usize> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let len = word.len();
    let q = (1..=len)
        .filter(|q| len.is_multiple_of(*q))
        .find(|&q| word.iter().zip(&word[q..]).all(|(x, y)| x == y))
        .unwrap_or(len);
    Ok(q)
}

pub fn lex_compare(s: &[usize], t: &[usize]) -> Result<LexOrdering> {
    if s.len() != t.len() {
        return Err(Error::LengthMismatch { expected: s.len(), actual: t.len() });
    }
    Ok(match s.iter().zip(t).position(|(x, y)| x != y) {
        Some(at) => LexOrdering { ordering: s[at].cmp(&t[at]), first_difference: Some(at + 1) },
        None => LexOrdering { ordering: Ordering::Equal, first_difference: None },
    })
}

/// The first `house` seats of Adams' method, built as one seat per rank in
/// order followed by the d'Hondt sequence.
pub fn adams_from_dhondt(profile: &VoteProfile, house: usize) -> Vec<usize> {
    let n = profile.len();
    let mut out: Vec<usize> = (1..=n.min(house)).collect();
    if house > n {
        let rest = generate(profile, &SignpostRule::dhondt(), house - n, None, TieBreakPolicy::default())
            .expect("fresh apportionment matches the profile");
        out.extend(rest);
    }
    out
}

/// Caret run-length text: `1,1,2` becomes `1^2 2`.
pub fn rle_encode(word: &[usize]) -> String {
    let mut parts = Vec::new();
    let mut i = 0;
    while i < word.len() {
        let run = word[i..].iter().take_while(|&&s| s == word[i]).count();
        parts.push(if run == 1 { word[i].to_string() } else { format!("{}^{}", word[i], run) });
        i += run;
    }
    parts.join(" ")
}

/// Inverse of [`rle_encode`]. Runs of length one may also be written
/// `s^1`.
pub fn rle_decode(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for token in text.split_whitespace() {
        let bad = || Error::MalformedWord(format!("bad token {token:?}"));
        let (sym, count) = match token.split_once('^') {
            Some((s, k)) => (s, k.parse::<usize>().map_err(|_| bad())?),
            None => (token, 1),
        };
        let sym: usize = sym.parse().map_err(|_| bad())?;
        if count == 0 {
            return Err(bad());
        }
        out.extend(std::iter::repeat_n(sym, count));
    }
    Ok(out)
}

/// Reads either the flat comma form `1,1,2` or caret run-length text.
pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    if !text.contains(',') {
        return rle_decode(text);
    }
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::MalformedWord(format!("bad symbol {t:?}"))))
        .collect()
}

/// Flat comma form.
pub fn format_word(word: &[usize]) -> String {
    word.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
}
