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

//! Sequential allocator properties.

mod common;

use std::cmp::Ordering;

use common::*;
use divseq_core::*;
use num_rational::BigRational;
use proptest::prelude::*;

fn rule(c: &Rational) -> SignpostRule {
    SignpostRule::stationary(c.clone()).unwrap()
}

fn claim(p: u64, a: u64, c: &Rational) -> Option<BigRational> {
    let den = Rational::from(a) + c;
    (!den.is_zero()).then(|| (Rational::from(p) / den).as_big_rational().clone())
}

#[test]
fn next_seat_examples() {
    let p = profile(&[32, 14]);
    let tie = TieBreakPolicy::default();
    assert_eq!(next_seat(&p, &Apportionment::zeros(2), &SignpostRule::dhondt(), tie).unwrap(), 1);
    assert_eq!(next_seat(&p, &Apportionment::new(vec![1, 0]), &SignpostRule::adams(), tie).unwrap(), 2);
    let q = profile(&[7, 7]);
    assert_eq!(next_seat(&q, &Apportionment::zeros(2), &SignpostRule::webster(), tie).unwrap(), 1);
    assert_eq!(
        next_seat(&q, &Apportionment::zeros(2), &SignpostRule::webster(), TieBreakPolicy::FavorSmallerVotes)
            .unwrap(),
        1
    );
    assert!(matches!(
        next_seat(&p, &Apportionment::zeros(3), &SignpostRule::dhondt(), tie),
        Err(Error::LengthMismatch { expected: 2, actual: 3 })
    ));
}

#[test]
fn first_seats_of_32_14() {
    let p = profile(&[32, 14]);
    assert_eq!(engine(&p, &Rational::zero(), 5), vec![1, 2, 1, 1, 2]);
    // 32/4 = 8 beats 14/2 = 7 for the fifth d'Hondt seat
    assert_eq!(engine(&p, &Rational::one(), 5), vec![1, 1, 2, 1, 1]);
    let period = generate_period(&p, &Rational::one(), TieBreakPolicy::default()).unwrap();
    assert_eq!(period.len(), 23);
    assert_eq!(period.period, word(DHONDT_32_14));
    assert_eq!(totals(&period.period, 2).unwrap().seats(), &[16, 7]);
    assert_eq!(totals(&[1, 2, 1, 1, 2], 2).unwrap().seats(), &[3, 2]);
    assert_eq!(totals(&[], 3).unwrap().seats(), &[0, 0, 0]);
    assert!(totals(&[1, 3], 2).is_err());
}

#[test]
fn northern_ireland_executive() {
    let p = profile(&NI_SEATS);
    let mut initial = vec![0; 8];
    initial[2] = 1;
    let initial = Apportionment::from_user_order(&p, &initial).unwrap();
    let run = |tie| generate(&p, &SignpostRule::dhondt(), 7, Some(&initial), tie).unwrap();
    let labels =
        |w: Vec<usize>| -> Vec<&str> { w.into_iter().map(|r| NI_LABELS[p.position_of(r)]).collect() };
    assert_eq!(labels(run(TieBreakPolicy::FavorSmallerVotes)), ["SF", "DUP", "SF", "DUP", "UUP", "SF", "AP"]);
    assert_eq!(run(TieBreakPolicy::FavorLargerVotes), vec![1, 2, 1, 2, 1, 4, 3]);
}

#[test]
fn hill_huntington_is_not_periodic() {
    let p = profile(&[23, 4]);
    let hh = |h| generate(&p, &SignpostRule::GeometricMean, h, None, TieBreakPolicy::default()).unwrap();
    let short = hh(27);
    let long = hh(54);
    assert_eq!(short, word(HH_23_4_27));
    assert_eq!(long, word(HH_23_4_54));
    assert_eq!(long[..27], short[..]);
    assert_ne!(long[27..], short[..]);
    assert_eq!(totals(&short, 2).unwrap().seats(), &[23, 4]);
}

#[test]
fn profiles_are_canonical() {
    let p = profile(&[4, 9, 4, 12]);
    assert_eq!(p.canonical_votes(), &[12, 9, 4, 4]);
    assert_eq!(p.ranks(), &[3, 2, 4, 1]);
    assert_eq!(p.gcd(), 1);
    assert_eq!(p.period(), 29);
    let q = profile(&[6, 3, 9]);
    assert_eq!((q.gcd(), q.period(), q.reduced_votes()), (3, 6, vec![3, 2, 1]));
    assert_eq!(VoteProfile::new(vec![]), Err(Error::EmptyProfile));
    assert_eq!(VoteProfile::new(vec![3, 0]), Err(Error::ZeroVotes { position: 1 }));
}

#[test]
fn sequences_over_small_profiles() {
    for votes in profiles(3, 9) {
        let p = profile(&votes);
        let n = p.len();
        let period = p.period() as usize;
        let reduced = p.reduced_votes();
        let cuts = probe_cuts(&p);
        let mut previous: Option<Vec<usize>> = None;
        for c in &cuts {
            let s = engine(&p, c, 3 * period);
            // periodic with minimal period P
            assert_eq!(s[period..], s[..2 * period], "{votes:?} at {c}");
            assert_eq!(minimal_period(&s).unwrap(), period, "{votes:?} at {c}");
            // weak proportionality
            let per = totals(&s[..period], n).unwrap();
            assert_eq!(per.seats(), &reduced[..], "{votes:?} at {c}");
            for m in 1..=3 {
                let a = totals(&s[..m * period], n).unwrap();
                assert!(a.seats().iter().zip(&reduced).all(|(&x, &r)| x == m as u64 * r));
            }
            // never two seats for a strictly smaller party in between
            let cyc = [&s[..period], &s[..period]].concat();
            for k in 1..=n {
                for l in 1..=n {
                    if p.votes_of(k) <= p.votes_of(l) {
                        continue;
                    }
                    let at: Vec<usize> = (0..cyc.len()).filter(|&i| cyc[i] == k).collect();
                    for w in at.windows(2) {
                        let between = cyc[w[0] + 1..w[1]].iter().filter(|&&x| x == l).count();
                        assert!(between <= 1, "{votes:?} at {c}: {l} twice between {k}s");
                    }
                }
            }
            // larger cut points give lexicographically smaller words
            if let Some(prev) = &previous {
                assert_ne!(lex_compare(prev, &s).unwrap().ordering, Ordering::Less, "{votes:?} at {c}");
            }
            previous = Some(s);
        }
    }
}

#[test]
fn adams_starts_with_everyone_then_dhondt() {
    for votes in profiles(4, 7) {
        let p = profile(&votes);
        let h = 3 * p.period() as usize;
        let adams = engine(&p, &Rational::zero(), h);
        assert_eq!(adams_from_dhondt(&p, h), adams, "{votes:?}");
        let mut expected: Vec<usize> = (1..=p.len()).collect();
        expected.extend(engine(&p, &Rational::one(), h - p.len()));
        assert_eq!(adams, expected);
    }
}

#[test]
fn prefixes_and_initial_seats() {
    let p = profile(&[16, 11, 7]);
    let r = rule(&Rational::new(1, 3));
    let long = generate(&p, &r, 60, None, TieBreakPolicy::default()).unwrap();
    for h in 0..60 {
        let s = generate(&p, &r, h, None, TieBreakPolicy::default()).unwrap();
        assert_eq!(s[..], long[..h]);
        let start = totals(&long[..h], 3).unwrap();
        let rest = generate(&p, &r, 60 - h, Some(&start), TieBreakPolicy::default()).unwrap();
        assert_eq!(rest[..], long[h..]);
    }
}

#[test]
fn table_16_11_7_first_row() {
    let p = profile(&[16, 11, 7]);
    let s = generate_period(&p, &Rational::zero(), TieBreakPolicy::default()).unwrap();
    assert_eq!(s.period, digits(TABLE_16_11_7[0]));
    assert_eq!(totals(&s.period, 3).unwrap().seats(), &[16, 11, 7]);
    let one = generate_period(&profile(&[1, 1]), &Rational::new(2, 5), TieBreakPolicy::default()).unwrap();
    assert_eq!(one.period, vec![1, 2]);
}

proptest! {
    #[test]
    fn claims_match_exact_quotients(
        pi in 1u64..=u64::MAX, ai in 0u64..1000, pj in 1u64..=u64::MAX, aj in 0u64..1000,
        num in 0u64..=97, den in 1u64..=97,
    ) {
        let c = Rational::new(num.min(den), den);
        let expected = match (claim(pi, ai, &c), claim(pj, aj, &c)) {
            (Some(x), Some(y)) => x.cmp(&y),
            (None, Some(_)) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (None, None) => pi.cmp(&pj),
        };
        let r = rule(&c);
        prop_assert_eq!(compare_claims(pi, ai, pj, aj, &r), expected);
        prop_assert_eq!(compare_claims(pj, aj, pi, ai, &r), expected.reverse());
    }

    #[test]
    fn geometric_claims_match_squares(pi in 1u64..100_000, ai in 0u64..500, pj in 1u64..100_000, aj in 0u64..500) {
        let sq = |p: u64, a: u64| (a > 0).then(|| BigRational::new((p as u128 * p as u128).into(), (a as u128 * (a as u128 + 1)).into()));
        let expected = match (sq(pi, ai), sq(pj, aj)) {
            (Some(x), Some(y)) => x.cmp(&y),
            (None, Some(_)) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (None, None) => pi.cmp(&pj),
        };
        prop_assert_eq!(compare_claims(pi, ai, pj, aj, &SignpostRule::GeometricMean), expected);
    }

    #[test]
    fn scaling_votes_keeps_the_sequence(
        votes in prop::collection::vec(1u64..30, 1..5), lambda in 2u64..50, num in 0u64..=12, den in 1u64..=12,
    ) {
        let c = Rational::new(num.min(den), den);
        let p = profile(&votes);
        let scaled = profile(&votes.iter().map(|v| v * lambda).collect::<Vec<_>>());
        let h = 2 * p.period() as usize + 3;
        prop_assert_eq!(engine(&p, &c, h), engine(&scaled, &c, h));
        prop_assert_eq!(scaled.period(), p.period());
    }

    #[test]
    fn smaller_cut_is_never_lexicographically_smaller(
        votes in prop::collection::vec(1u64..40, 2..5), a in 0u64..=60, b in 0u64..=60,
    ) {
        let (lo, hi) = (a.min(b), a.max(b));
        let p = profile(&votes);
        let h = p.period() as usize;
        let s_lo = engine(&p, &Rational::new(lo, 60), h);
        let s_hi = engine(&p, &Rational::new(hi, 60), h);
        prop_assert_ne!(lex_compare(&s_hi, &s_lo).unwrap().ordering, Ordering::Greater);
    }
}
