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

//! Exact rationals and exact comparison of seat claims.
//!
//! A party holding `a` seats with `p` votes claims the next seat with
//! strength `p / f(a)`, where `f` is the signpost of the rule. All
//! comparisons are done by cross-multiplication over integers, so ties are
//! detected exactly.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact fraction in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer / denom`, reducing to lowest terms.
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Largest integer not above `self`.
    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    /// Smallest integer not below `self`.
    pub fn ceil(&self) -> BigInt {
        self.numer().div_ceil(self.denom())
    }

    /// `(self + other) / 2`.
    pub fn midpoint(&self, other: &Rational) -> Rational {
        (self + other) / Rational::from_integer(2)
    }

    /// True when `0 <= self <= 1`.
    pub fn in_unit_interval(&self) -> bool {
        !self.is_negative() && self.numer() <= self.denom()
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    /// Numerator and denominator as machine integers, when both fit.
    pub fn to_u128_parts(&self) -> Option<(u128, u128)> {
        Some((self.numer().to_u128()?, self.denom().to_u128()?))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<Rational> for BigRational {
    fn from(r: Rational) -> Self {
        r.0
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

/// Always `num/den`, even for integers.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

/// Accepts `num/den`, an integer, or an exact decimal such as `0.125`.
/// Decimals are read digit by digit and never pass through binary floating
/// point.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let bad = || Error::MalformedRational(s.to_string());
        if text.is_empty() {
            return Err(bad());
        }
        if let Some((n, d)) = text.split_once('/') {
            let numer = parse_int(n.trim()).ok_or_else(bad)?;
            let denom = parse_int(d.trim()).ok_or_else(bad)?;
            if denom.is_zero() {
                return Err(bad());
            }
            return Ok(Rational::new(numer, denom));
        }
        let (negative, body) = match text.as_bytes()[0] {
            b'-' => (true, &text[1..]),
            b'+' => (false, &text[1..]),
            _ => (false, text),
        };
        let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
        if whole.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{whole}{frac}");
        let mut numer: BigInt = digits.parse().map_err(|_| bad())?;
        if negative {
            numer = -numer;
        }
        let denom = num_traits::pow(BigInt::from(10u32), frac.len());
        Ok(Rational::new(numer, denom))
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// How the signpost `f(a)` between `a` and `a + 1` seats is placed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SignpostRule {
    /// `f(a) = a + c` for a fixed cut point `c` in `[0, 1]`.
    Stationary(Rational),
    /// `f(a) = sqrt(a (a + 1))` (Hill-Huntington).
    GeometricMean,
}

impl SignpostRule {
    /// A stationary rule, rejecting cut points outside `[0, 1]`.
    pub fn stationary(cut: Rational) -> Result<Self> {
        if !cut.in_unit_interval() {
            return Err(Error::CutOutOfRange(cut));
        }
        Ok(SignpostRule::Stationary(cut))
    }

    pub fn adams() -> Self {
        SignpostRule::Stationary(Rational::zero())
    }

    pub fn webster() -> Self {
        SignpostRule::Stationary(Rational::new(1, 2))
    }

    pub fn dhondt() -> Self {
        SignpostRule::Stationary(Rational::one())
    }
}

/// Exact ordering of the next-seat claims of two parties.
///
/// Returns `Greater` when party `i` has the stronger claim. A zero signpost
/// is an infinite claim; two infinite claims are ordered by raw votes and are
/// `Equal` when the votes match.
pub fn compare_claims(p_i: u64, a_i: u64, p_j: u64, a_j: u64, rule: &SignpostRule) -> Ordering {
    ClaimComparator::new(rule).compare(p_i, a_i, p_j, a_j)
}

/// [`compare_claims`] with the rule unpacked once, for use in hot loops.
#[derive(Clone, Debug)]
pub struct ClaimComparator {
    kind: Kind,
}

#[derive(Clone, Debug)]
enum Kind {
    Small { num: u128, den: u128 },
    Big { num: BigUint, den: BigUint },
    Geometric,
}

impl ClaimComparator {
    pub fn new(rule: &SignpostRule) -> Self {
        let kind = match rule {
            SignpostRule::GeometricMean => Kind::Geometric,
            SignpostRule::Stationary(c) => match c.to_u128_parts() {
                Some((num, den)) if num <= u64::MAX as u128 && den <= u64::MAX as u128 => {
                    Kind::Small { num, den }
                }
                _ => Kind::Big { num: c.numer().magnitude().clone(), den: c.denom().magnitude().clone() },
            },
        };
        ClaimComparator { kind }
    }

    pub fn compare(&self, p_i: u64, a_i: u64, p_j: u64, a_j: u64) -> Ordering {
        match &self.kind {
            Kind::Small { num, den } => {
                // a * den + num < 2^128 because den, num < 2^64.
                let d_i = a_i as u128 * den + num;
                let d_j = a_j as u128 * den + num;
                match (d_i == 0, d_j == 0) {
                    (true, true) => p_i.cmp(&p_j),
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    (false, false) => products_cmp(&[p_i as u128, d_j], &[p_j as u128, d_i]),
                }
            }
            Kind::Big { num, den } => {
                let d_i = BigUint::from(a_i) * den + num;
                let d_j = BigUint::from(a_j) * den + num;
                match (d_i.is_zero(), d_j.is_zero()) {
                    (true, true) => p_i.cmp(&p_j),
                    (true, false) => Ordering::Greater,
                    (false, true) => Ordering::Less,
                    (false, false) => (BigUint::from(p_i) * d_j).cmp(&(BigUint::from(p_j) * d_i)),
                }
            }
            Kind::Geometric => match (a_i == 0, a_j == 0) {
                (true, true) => p_i.cmp(&p_j),
                (true, false) => Ordering::Greater,
                (false, true) => Ordering::Less,
                (false, false) => {
                    let (p_i, a_i, p_j, a_j) = (p_i as u128, a_i as u128, p_j as u128, a_j as u128);
                    products_cmp(&[p_i, p_i, a_j, a_j + 1], &[p_j, p_j, a_i, a_i + 1])
                }
            },
        }
    }
}

/// Compares two products of non-negative factors exactly.
fn products_cmp(lhs: &[u128], rhs: &[u128]) -> Ordering {
    let checked = |fs: &[u128]| fs.iter().try_fold(1u128, |acc, &f| acc.checked_mul(f));
    match (checked(lhs), checked(rhs)) {
        (Some(l), Some(r)) => l.cmp(&r),
        _ => {
            let big = |fs: &[u128]| fs.iter().fold(BigUint::one(), |acc, &f| acc * f);
            big(lhs).cmp(&big(rhs))
        }
    }
}
