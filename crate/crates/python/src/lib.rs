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

//! Python bindings. Cut points go in as `fractions.Fraction`, `int` or
//! text such as `"1/3"`, and come back as `fractions.Fraction`. Words are
//! lists of canonical ranks, 1 for the party with the most votes.

use std::collections::BTreeMap;

use num_rational::BigRational;
use pyo3::exceptions::{PyRuntimeError, PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyFloat, PyString};

use divseq_core as core;
use divseq_core::{Rational, SignpostRule, TieBreakPolicy};

fn py_err(e: core::Error) -> PyErr {
    match e {
        core::Error::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if let Ok(s) = obj.cast::<PyString>() {
        return s.to_str()?.parse::<Rational>().map_err(py_err);
    }
    if obj.is_instance_of::<PyFloat>() {
        return Err(PyTypeError::new_err("floats are inexact; pass a Fraction, an int or a string"));
    }
    Ok(Rational::from(obj.extract::<BigRational>()?))
}

fn cut(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    let c = rational(obj)?;
    if !c.in_unit_interval() {
        return Err(py_err(core::Error::CutOutOfRange(c)));
    }
    Ok(c)
}

fn tie_policy(tie: &str) -> PyResult<TieBreakPolicy> {
    match tie {
        "larger" => Ok(TieBreakPolicy::FavorLargerVotes),
        "smaller" => Ok(TieBreakPolicy::FavorSmallerVotes),
        other => Err(PyValueError::new_err(format!("tie must be 'larger' or 'smaller', not {other:?}"))),
    }
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    r.as_big_rational().into_pyobject(py)
}

/// Vote totals, sorted into canonical ranks by decreasing votes.
#[pyclass(name = "VoteProfile", module = "divseq", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyVoteProfile {
    inner: core::VoteProfile,
}

#[pymethods]
impl PyVoteProfile {
    #[new]
    fn new(votes: Vec<u64>) -> PyResult<Self> {
        Ok(PyVoteProfile { inner: core::VoteProfile::new(votes).map_err(py_err)? })
    }

    /// Votes in the order given.
    #[getter]
    fn votes(&self) -> Vec<u64> {
        self.inner.votes().to_vec()
    }

    #[getter]
    fn canonical_votes(&self) -> Vec<u64> {
        self.inner.canonical_votes().to_vec()
    }

    /// Canonical rank of each party, in the order given.
    #[getter]
    fn ranks(&self) -> Vec<usize> {
        self.inner.ranks().to_vec()
    }

    #[getter]
    fn gcd(&self) -> u64 {
        self.inner.gcd()
    }

    #[getter]
    fn period(&self) -> u64 {
        self.inner.period()
    }

    fn position_of(&self, rank: usize) -> PyResult<usize> {
        self.check_rank(rank)?;
        Ok(self.inner.position_of(rank))
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("VoteProfile({:?})", self.inner.votes())
    }
}

impl PyVoteProfile {
    fn check_rank(&self, rank: usize) -> PyResult<()> {
        if rank == 0 || rank > self.inner.len() {
            return Err(py_err(core::Error::RankOutOfRange { rank, parties: self.inner.len() }));
        }
        Ok(())
    }
}

/// Cut points that share one sequence: `[lower, upper)`, the point 1, or
/// all of `[0, 1]`.
#[pyclass(name = "CutpointRegion", module = "divseq", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyCutpointRegion {
    inner: core::CutpointRegion,
}

#[pymethods]
impl PyCutpointRegion {
    /// One of "interval", "point" or "whole".
    #[getter]
    fn kind(&self) -> &'static str {
        match self.inner {
            core::CutpointRegion::Interval { .. } => "interval",
            core::CutpointRegion::Point1 => "point",
            core::CutpointRegion::Whole => "whole",
        }
    }

    #[getter]
    fn lower<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.lower())
    }

    #[getter]
    fn upper<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let hi = match &self.inner {
            core::CutpointRegion::Interval { hi, .. } => hi.clone(),
            _ => Rational::one(),
        };
        fraction(py, &hi)
    }

    fn representative<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &self.inner.representative())
    }

    fn __contains__(&self, c: &Bound<'_, PyAny>) -> PyResult<bool> {
        Ok(self.inner.contains(&rational(c)?))
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CutpointRegion('{}')", self.inner)
    }
}

fn region(r: Option<core::CutpointRegion>) -> Option<PyCutpointRegion> {
    r.map(|inner| PyCutpointRegion { inner })
}

/// Compares the claims of two parties: 1 if the first is stronger, -1 if
/// the second is, 0 on an exact tie.
#[pyfunction]
fn compare_claims(p_i: u64, a_i: u64, p_j: u64, a_j: u64, cut: &Bound<'_, PyAny>) -> PyResult<i8> {
    let rule = SignpostRule::stationary(self::cut(cut)?).map_err(py_err)?;
    Ok(core::compare_claims(p_i, a_i, p_j, a_j, &rule) as i8)
}

/// Rank of the next seat given canonical seat counts `current`.
#[pyfunction]
#[pyo3(signature = (profile, current, cut, tie = "larger"))]
fn next_seat(
    profile: &PyVoteProfile,
    current: Vec<u64>,
    cut: &Bound<'_, PyAny>,
    tie: &str,
) -> PyResult<usize> {
    let rule = SignpostRule::stationary(self::cut(cut)?).map_err(py_err)?;
    core::next_seat(&profile.inner, &core::Apportionment::new(current), &rule, tie_policy(tie)?)
        .map_err(py_err)
}

/// The first `seats` awards (one period by default). `initial` lists seats
/// already held, in the order the votes were given. `method` is
/// "stationary" or "hill-huntington"; the latter ignores `cut`.
#[pyfunction]
#[pyo3(signature = (profile, cut = None, seats = None, initial = None, tie = "larger", method = "stationary"))]
fn generate(
    profile: &PyVoteProfile,
    cut: Option<&Bound<'_, PyAny>>,
    seats: Option<usize>,
    initial: Option<Vec<u64>>,
    tie: &str,
    method: &str,
) -> PyResult<Vec<usize>> {
    let p = &profile.inner;
    let rule = match (method, cut) {
        ("hill-huntington", _) => SignpostRule::GeometricMean,
        ("stationary", Some(c)) => SignpostRule::stationary(self::cut(c)?).map_err(py_err)?,
        ("stationary", None) => {
            return Err(PyValueError::new_err("cut is required for the stationary method"))
        }
        (other, _) => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
    };
    let initial = initial.map(|s| core::Apportionment::from_user_order(p, &s)).transpose().map_err(py_err)?;
    let seats = seats.unwrap_or(p.period() as usize);
    core::generate(p, &rule, seats, initial.as_ref(), tie_policy(tie)?).map_err(py_err)
}

/// Seats per canonical rank.
#[pyfunction]
fn totals(sequence: Vec<usize>, parties: usize) -> PyResult<Vec<u64>> {
    Ok(core::totals(&sequence, parties).map_err(py_err)?.seats().to_vec())
}

/// Every distinct sequence as `(region, word)` pairs ordered by cut point.
#[pyfunction]
fn enumerate(profile: &PyVoteProfile) -> PyResult<Vec<(PyCutpointRegion, Vec<usize>)>> {
    let rows = core::enumerate_n_party(&profile.inner).map_err(py_err)?;
    Ok(rows.into_iter().map(|(r, s)| (PyCutpointRegion { inner: r }, s.period)).collect())
}

#[pyfunction]
fn count_sequences(profile: &PyVoteProfile) -> PyResult<u64> {
    core::count_sequences(&profile.inner).map_err(py_err)
}

/// Sorted cut points at which some pairwise sequence changes.
#[pyfunction]
fn breakpoints<'py>(py: Python<'py>, profile: &PyVoteProfile) -> PyResult<Vec<Bound<'py, PyAny>>> {
    core::breakpoints(&profile.inner).endpoints.iter().map(|e| fraction(py, e)).collect()
}

/// Sums of gcds over subsets of pairwise moduli, by subset size.
#[pyfunction]
fn inclusion_exclusion_terms(profile: &PyVoteProfile) -> Vec<u128> {
    core::inclusion_exclusion_terms(&profile.inner)
}

/// Run lengths `(k, tail)` of the two-party word for votes `v1 >= v2`.
#[pyfunction]
fn runs_for_cut(v1: u64, v2: u64, cut: &Bound<'_, PyAny>) -> PyResult<(Vec<u64>, u64)> {
    let d = core::decompose(v1, v2).map_err(py_err)?;
    let r = core::runs_for_cut(&d, &self::cut(cut)?).map_err(py_err)?;
    Ok((r.k, r.tail))
}

/// Cut points producing a two-party word, or None.
#[pyfunction]
fn infer_cutpoint(v1: u64, v2: u64, word: Vec<usize>) -> PyResult<Option<PyCutpointRegion>> {
    let d = core::decompose(v1, v2).map_err(py_err)?;
    let runs = match core::RunLengths::from_word(&d, &word) {
        Ok(r) => r,
        Err(core::Error::StructuralMismatch { .. }) => return Ok(None),
        Err(e) => return Err(py_err(e)),
    };
    Ok(region(core::infer_cutpoint(&d, &runs).map_err(py_err)?))
}

/// Pairwise words keyed by `(i, j)` with `i < j`.
#[pyfunction]
fn pairwise_tables(
    profile: &PyVoteProfile,
    cut: &Bound<'_, PyAny>,
) -> PyResult<BTreeMap<(usize, usize), Vec<usize>>> {
    let tables = core::pairwise_tables(&profile.inner, &self::cut(cut)?).map_err(py_err)?;
    Ok(tables.into_iter().map(|(k, w)| ((k.i, k.j), w)).collect())
}

/// One period rebuilt from the pairwise words.
#[pyfunction]
fn lift(profile: &PyVoteProfile, cut: &Bound<'_, PyAny>) -> PyResult<Vec<usize>> {
    Ok(core::lift(&profile.inner, &self::cut(cut)?).map_err(py_err)?.period)
}

/// The region whose cut points produce `word`, or None.
#[pyfunction]
fn verify_sequence(profile: &PyVoteProfile, word: Vec<usize>) -> PyResult<Option<PyCutpointRegion>> {
    Ok(region(core::verify_sequence(&profile.inner, &word).map_err(py_err)?))
}

#[pyfunction]
fn minimal_period(word: Vec<usize>) -> PyResult<usize> {
    core::minimal_period(&word).map_err(py_err)
}

/// `(sign, first differing position)`; positions count from 1.
#[pyfunction]
fn lex_compare(s: Vec<usize>, t: Vec<usize>) -> PyResult<(i8, Option<usize>)> {
    let o = core::lex_compare(&s, &t).map_err(py_err)?;
    Ok((o.ordering as i8, o.first_difference))
}

#[pyfunction]
fn adams_from_dhondt(profile: &PyVoteProfile, seats: usize) -> Vec<usize> {
    core::adams_from_dhondt(&profile.inner, seats)
}

#[pyfunction]
fn rle_encode(word: Vec<usize>) -> String {
    core::rle_encode(&word)
}

/// Reads `1,1,2` or `1^2 2`.
#[pyfunction]
fn parse_word(text: &str) -> PyResult<Vec<usize>> {
    core::parse_word(text).map_err(py_err)
}

#[pymodule]
fn divseq(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyVoteProfile>()?;
    m.add_class::<PyCutpointRegion>()?;
    m.add_function(wrap_pyfunction!(compare_claims, m)?)?;
    m.add_function(wrap_pyfunction!(next_seat, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(totals, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(count_sequences, m)?)?;
    m.add_function(wrap_pyfunction!(breakpoints, m)?)?;
    m.add_function(wrap_pyfunction!(inclusion_exclusion_terms, m)?)?;
    m.add_function(wrap_pyfunction!(runs_for_cut, m)?)?;
    m.add_function(wrap_pyfunction!(infer_cutpoint, m)?)?;
    m.add_function(wrap_pyfunction!(pairwise_tables, m)?)?;
    m.add_function(wrap_pyfunction!(lift, m)?)?;
    m.add_function(wrap_pyfunction!(verify_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(minimal_period, m)?)?;
    m.add_function(wrap_pyfunction!(lex_compare, m)?)?;
    m.add_function(wrap_pyfunction!(adams_from_dhondt, m)?)?;
    m.add_function(wrap_pyfunction!(rle_encode, m)?)?;
    m.add_function(wrap_pyfunction!(parse_word, m)?)?;
    Ok(())
}
