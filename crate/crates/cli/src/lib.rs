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

//! Command implementations for the `divseq` binary.
//!
//! Every command builds one JSON document. The text format is a flat
//! `key: value` rendering of that same document.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use divseq_core::{
    breakpoints, count_sequences, decompose, enumerate_n_party, format_word, generate,
    inclusion_exclusion_terms, infer_cutpoint, lift, pairwise_tables, parse_word, rle_encode, runs_for_cut,
    totals, verify_sequence, Apportionment, CutpointRegion, Error, Rational, Result, RunLengths,
    SignpostRule, TieBreakPolicy, VoteProfile,
};

pub const FORMAT_VERSION: u64 = 1;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Usage(&'static str),
}

impl CliError {
    /// 1 for a broken internal invariant, 2 for bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Invariant(_)) => 1,
            _ => 2,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl std::error::Error for CliError {}

#[derive(Parser, Debug)]
#[command(name = "divseq", version, about = "Seat-award sequences for stationary divisor methods")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Award seats one at a time.
    Sequence(SequenceArgs),
    /// List every sequence over the cut points, one row per region.
    Enumerate(CommonArgs),
    /// Count the distinct sequences and list the breakpoints.
    Count(CommonArgs),
    /// Recover the cut points that produce a two-party word.
    Infer(WordArgs),
    /// Build the sequence from its pairwise words.
    Lift(LiftArgs),
    /// Check whether a word comes from some cut point.
    Verify(WordArgs),
}

#[derive(Args, Debug)]
pub struct CommonArgs {
    /// Votes per party, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub votes: Vec<u64>,
    /// Party names, comma separated, in the same order as --votes.
    #[arg(long, value_delimiter = ',')]
    pub labels: Option<Vec<String>>,
    /// Print words as caret run-length text.
    #[arg(long)]
    pub rle: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SequenceArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Cut point in [0, 1], e.g. 1/2, 0.5 or 1.
    #[arg(long)]
    pub cut: Option<String>,
    /// Number of seats to award; one period by default.
    #[arg(long)]
    pub seats: Option<usize>,
    /// Seats held before the first award, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub initial: Option<Vec<u64>>,
    #[arg(long, value_enum, default_value_t = Tie::Larger)]
    pub tie: Tie,
    #[arg(long, value_enum, default_value_t = Method::Stationary)]
    pub method: Method,
}

#[derive(Args, Debug)]
pub struct LiftArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long)]
    pub cut: String,
}

#[derive(Args, Debug)]
pub struct WordArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Canonical ranks, either `1,1,2` or `1^2 2`.
    #[arg(long)]
    pub word: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Tie {
    Larger,
    Smaller,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Stationary,
    HillHuntington,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Sequence(_) => "sequence",
            Command::Enumerate(_) => "enumerate",
            Command::Count(_) => "count",
            Command::Infer(_) => "infer",
            Command::Lift(_) => "lift",
            Command::Verify(_) => "verify",
        }
    }

    fn common(&self) -> &CommonArgs {
        match self {
            Command::Sequence(a) => &a.common,
            Command::Enumerate(a) | Command::Count(a) => a,
            Command::Infer(a) | Command::Verify(a) => &a.common,
            Command::Lift(a) => &a.common,
        }
    }

    pub fn format(&self) -> Format {
        self.common().format
    }
}

struct Context {
    profile: VoteProfile,
    labels: Vec<String>,
    rle: bool,
}

impl Context {
    fn new(args: &CommonArgs) -> Result<Self> {
        let profile = VoteProfile::new(args.votes.clone())?;
        let labels = match &args.labels {
            None => (1..=profile.len()).map(|i| i.to_string()).collect(),
            Some(l) if l.len() != profile.len() => {
                return Err(Error::LengthMismatch { expected: profile.len(), actual: l.len() })
            }
            Some(l) if l.iter().any(|s| s.trim().is_empty()) => {
                return Err(Error::MalformedWord("empty party label".into()))
            }
            Some(l) => l.iter().map(|s| s.trim().to_string()).collect(),
        };
        Ok(Context { profile, labels, rle: args.rle })
    }

    fn label(&self, rank: usize) -> &str {
        &self.labels[self.profile.position_of(rank)]
    }

    fn word(&self, w: &[usize]) -> Value {
        Value::String(if self.rle { rle_encode(w) } else { format_word(w) })
    }

    fn labelled(&self, w: &[usize]) -> Value {
        w.iter().map(|&r| self.label(r)).collect()
    }

    fn profile_json(&self) -> Value {
        let p = &self.profile;
        let canonical: Vec<Value> = (1..=p.len())
            .map(|r| json!({ "rank": r, "label": self.label(r), "votes": p.votes_of(r) }))
            .collect();
        json!({
            "labels": self.labels,
            "votes": p.votes(),
            "canonical": canonical,
            "gcd": p.gcd(),
            "period": p.period(),
        })
    }

    fn apportionment_json(&self, a: &Apportionment) -> Value {
        let seats = a.to_user_order(&self.profile);
        self.labels.iter().zip(seats).map(|(l, s)| json!({ "label": l, "seats": s })).collect()
    }
}

fn region_json(region: &CutpointRegion) -> Value {
    let (lo, hi) = match region {
        CutpointRegion::Interval { lo, hi } => (lo.clone(), hi.clone()),
        CutpointRegion::Point1 => (Rational::one(), Rational::one()),
        CutpointRegion::Whole => (Rational::zero(), Rational::one()),
    };
    json!({ "text": region.to_string(), "lower": lo.to_string(), "upper": hi.to_string() })
}

fn parse_cut(text: &str) -> Result<Rational> {
    let c: Rational = text.trim().parse()?;
    if !c.in_unit_interval() {
        return Err(Error::CutOutOfRange(c));
    }
    Ok(c)
}

fn check_ranks(word: &[usize], parties: usize) -> Result<()> {
    match word.iter().find(|&&r| r == 0 || r > parties) {
        Some(&rank) => Err(Error::RankOutOfRange { rank, parties }),
        None => Ok(()),
    }
}

/// Runs `cli` and returns the output document. `argv` is echoed as given.
pub fn run(cli: &Cli, argv: &[String]) -> Result<Value, CliError> {
    let ctx = Context::new(cli.command.common())?;
    let result = match &cli.command {
        Command::Sequence(a) => sequence(&ctx, a)?,
        Command::Enumerate(_) => enumerate(&ctx)?,
        Command::Count(_) => count(&ctx)?,
        Command::Infer(a) => infer(&ctx, a)?,
        Command::Lift(a) => lift_cmd(&ctx, a)?,
        Command::Verify(a) => verify(&ctx, a)?,
    };
    Ok(json!({
        "format_version": FORMAT_VERSION,
        "command": cli.command.name(),
        "arguments": argv,
        "profile": ctx.profile_json(),
        "result": result,
    }))
}

fn sequence(ctx: &Context, a: &SequenceArgs) -> Result<Value, CliError> {
    let p = &ctx.profile;
    let (rule, cut) = match a.method {
        Method::HillHuntington => (SignpostRule::GeometricMean, Value::Null),
        Method::Stationary => {
            let text =
                a.cut.as_deref().ok_or(CliError::Usage("--cut is required for the stationary method"))?;
            let c = parse_cut(text)?;
            (SignpostRule::stationary(c.clone())?, Value::String(c.to_string()))
        }
    };
    let initial = match &a.initial {
        Some(seats) => Apportionment::from_user_order(p, seats)?,
        None => Apportionment::zeros(p.len()),
    };
    let tie = match a.tie {
        Tie::Larger => TieBreakPolicy::FavorLargerVotes,
        Tie::Smaller => TieBreakPolicy::FavorSmallerVotes,
    };
    let seats = a.seats.unwrap_or(p.period() as usize);
    let word = generate(p, &rule, seats, Some(&initial), tie)?;
    let awarded = totals(&word, p.len())?;
    let finals =
        Apportionment::new(initial.seats().iter().zip(awarded.seats()).map(|(x, y)| x + y).collect());
    Ok(json!({
        "method": match a.method { Method::Stationary => "stationary", Method::HillHuntington => "hill-huntington" },
        "cut": cut,
        "tie": match a.tie { Tie::Larger => "larger", Tie::Smaller => "smaller" },
        "seats": seats,
        "initial": ctx.apportionment_json(&initial),
        "sequence": ctx.labelled(&word),
        "canonical": ctx.word(&word),
        "totals": ctx.apportionment_json(&finals),
    }))
}

fn enumerate(ctx: &Context) -> Result<Value> {
    let rows: Vec<Value> = enumerate_n_party(&ctx.profile)?
        .into_iter()
        .map(|(region, s)| json!({ "region": region_json(&region), "word": ctx.word(&s.period) }))
        .collect();
    Ok(json!({ "count": rows.len(), "rows": rows }))
}

fn count(ctx: &Context) -> Result<Value> {
    let bp = breakpoints(&ctx.profile);
    let moduli: Vec<Value> =
        bp.moduli.iter().map(|(k, m)| json!({ "pair": k.to_string(), "modulus": m })).collect();
    let terms: Vec<String> = inclusion_exclusion_terms(&ctx.profile).iter().map(|t| t.to_string()).collect();
    Ok(json!({
        "count": count_sequences(&ctx.profile)?,
        "breakpoints": bp.endpoints.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
        "moduli": moduli,
        "inclusion_exclusion": terms,
    }))
}

fn infer(ctx: &Context, a: &WordArgs) -> Result<Value> {
    let p = &ctx.profile;
    if p.len() != 2 {
        return Err(Error::LengthMismatch { expected: 2, actual: p.len() });
    }
    let word = parse_word(&a.word)?;
    check_ranks(&word, 2)?;
    let d = decompose(p.votes_of(1), p.votes_of(2))?;
    let expected = (d.p1 + d.p2) as usize;
    if word.len() != expected {
        return Err(Error::LengthMismatch { expected, actual: word.len() });
    }
    let (runs, region) = match RunLengths::from_word(&d, &word) {
        Ok(r) => {
            let region = infer_cutpoint(&d, &r)?;
            (Value::String(r.to_string()), region)
        }
        Err(Error::StructuralMismatch { .. }) => (Value::Null, None),
        Err(e) => return Err(e),
    };
    Ok(json!({
        "word": ctx.word(&word),
        "runs": runs,
        "realizable": region.is_some(),
        "region": region.as_ref().map(region_json),
    }))
}

fn lift_cmd(ctx: &Context, a: &LiftArgs) -> Result<Value> {
    let p = &ctx.profile;
    let c = parse_cut(&a.cut)?;
    let tables = pairwise_tables(p, &c)?;
    let mut pairs = Vec::new();
    let mut cell = Some(CutpointRegion::Whole);
    for (key, w) in &tables {
        let d = decompose(p.votes_of(key.i), p.votes_of(key.j))?;
        let region = infer_cutpoint(&d, &runs_for_cut(&d, &c)?)?
            .ok_or_else(|| Error::Invariant(format!("pair {key} word has no region")))?;
        cell = cell.and_then(|r| r.intersect(&region));
        pairs.push(json!({
            "pair": key.to_string(),
            "labels": [ctx.label(key.i), ctx.label(key.j)],
            "region": region_json(&region),
            "word": ctx.word(w),
        }));
    }
    let cell = cell.ok_or_else(|| Error::Invariant("pairwise regions do not meet".into()))?;
    let lifted = lift(p, &c)?;
    Ok(json!({
        "cut": c.to_string(),
        "pairs": pairs,
        "region": region_json(&cell),
        "canonical": ctx.word(&lifted.period),
        "sequence": ctx.labelled(&lifted.period),
    }))
}

fn verify(ctx: &Context, a: &WordArgs) -> Result<Value> {
    let word = parse_word(&a.word)?;
    let region = verify_sequence(&ctx.profile, &word)?;
    Ok(json!({
        "word": ctx.word(&word),
        "realizable": region.is_some(),
        "region": region.as_ref().map(region_json),
    }))
}

/// Flat `key: value` lines. Scalar arrays are joined with commas, nested
/// values use dotted paths, `null` prints as `none`.
pub fn render_text(doc: &Value) -> String {
    fn scalar(v: &Value) -> Option<String> {
        match v {
            Value::Null => Some("none".into()),
            Value::Bool(b) => Some(b.to_string()),
            Value::Number(n) => Some(n.to_string()),
            Value::String(s) => Some(s.clone()),
            _ => None,
        }
    }
    fn walk(path: &str, v: &Value, out: &mut String) {
        let key = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
        match v {
            Value::Object(map) => map.iter().for_each(|(k, v)| walk(&key(k), v, out)),
            Value::Array(items) if items.iter().all(|x| scalar(x).is_some()) => {
                let joined: Vec<String> = items.iter().filter_map(scalar).collect();
                out.push_str(&format!("{path}: {}\n", joined.join(",")));
            }
            Value::Array(items) => {
                items.iter().enumerate().for_each(|(i, v)| walk(&key(&i.to_string()), v, out))
            }
            other => out.push_str(&format!("{path}: {}\n", scalar(other).unwrap_or_default())),
        }
    }
    let mut out = String::new();
    walk("", doc, &mut out);
    out
}
