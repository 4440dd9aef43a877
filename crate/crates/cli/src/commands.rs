//! Subcommand bodies. Each returns the text for stdout; `main` handles I/O.

use kmajority::constructions::{
    gamma_realization, gap_realization, half_gap_construction, min_vertices_formula, three_vertex_construction,
};
use kmajority::search::{is_realizable, min_vertices_search, MinVertices, Realizability, SearchBudget};
use kmajority::{
    approval_gap, max_approval_gap, tournament_from_profile, Profile, Rational, SearchLimits, VertexSet, Vertices,
    WeightedTournament,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::format::{parse_ballots, parse_tournament, print_ballots, print_tournament, ParseError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0} (use --limit-override)")]
    OverLimit(kmajority::Error),
    #[error(transparent)]
    Core(#[from] kmajority::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn parse(path: &str, source: ParseError) -> CliError {
        CliError::Parse { path: path.to_string(), source }
    }
}

fn core(e: kmajority::Error) -> CliError {
    match e {
        kmajority::Error::OverLimit { .. } => CliError::OverLimit(e),
        e => CliError::Core(e),
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    Gamma,
    Gap,
    Half,
    Three,
}

pub fn limits(override_limit: bool) -> SearchLimits {
    SearchLimits { override_limit, ..SearchLimits::default() }
}

pub fn format_set(vertices: &Vertices, set: &VertexSet) -> String {
    let names: Vec<&str> = set.iter().map(|v| vertices.name(kmajority::VertexId(v))).collect();
    format!("{{{}}}", names.join(", "))
}

fn load_ballots(path: &str, text: &str) -> Result<Profile> {
    parse_ballots(text).map_err(|e| CliError::parse(path, e))
}

/// Parses a list of names given as separate words or as `{a, d}` / `a,d`.
pub fn parse_name_set(vertices: &Vertices, words: &[String]) -> Result<VertexSet> {
    let joined = words.join(" ");
    let inner = joined.trim().trim_start_matches('{').trim_end_matches('}');
    let mut members = Vec::new();
    for name in inner.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
        members.push(vertices.id(name)?.0);
    }
    Ok(VertexSet::new(members))
}

pub fn gamma(path: &str, text: &str, limits: &SearchLimits) -> Result<String> {
    let t = tournament_from_profile(&load_ballots(path, text)?);
    let g = max_approval_gap(&t, limits).map_err(core)?;
    Ok(format!("{}gamma_w = {}\nwitness = {}\n", print_tournament(&t), g.gap, format_set(t.vertices(), &g.set)))
}

pub fn gap(path: &str, text: &str, names: &[String]) -> Result<String> {
    let t = tournament_from_profile(&load_ballots(path, text)?);
    let d = parse_name_set(t.vertices(), names)?;
    Ok(format!("W = {}\n", approval_gap(&t, &d)?))
}

pub fn construct(q: Option<Rational>, k: u32, which: Which) -> Result<String> {
    let need_q = || q.ok_or_else(|| CliError::Usage("this construction needs a value for q".into()));
    let out = match which {
        Which::Gamma => {
            let q = need_q()?;
            format!("# gamma_w = {q}\n{}", print_ballots(&gamma_realization(q, k)?))
        }
        Which::Gap => {
            let q = need_q()?;
            let (p, d) = gap_realization(q, k)?;
            format!("# W = {q} for D = {}\n{}", format_set(p.vertices(), &d), print_ballots(&p))
        }
        Which::Half => {
            let p = half_gap_construction(k)?;
            format!("# gamma_w = {}\n{}", Rational::new(2 * k as i64 - 1, 2), print_ballots(&p))
        }
        Which::Three => {
            let q = need_q()?;
            format!("# gamma_w = {q}\n{}", print_ballots(&three_vertex_construction(q, k)?))
        }
    };
    Ok(out)
}

pub fn clockwise(n: usize, k: u32) -> Result<String> {
    Ok(print_ballots(&kmajority::clockwise::clockwise_profile(n, k)?))
}

/// Returns the report and whether the recomputed value equals `q`.
pub fn verify(path: &str, text: &str, q: Rational, limits: &SearchLimits) -> Result<(String, bool)> {
    let t = tournament_from_profile(&load_ballots(path, text)?);
    let g = max_approval_gap(&t, limits).map_err(core)?;
    let ok = g.gap == q;
    let verdict = if ok { "pass" } else { "fail" };
    Ok((format!("gamma_w = {}\nexpected = {q}\n{verdict}\n", g.gap), ok))
}

pub fn search_m(q: Rational, k: u32, n_max: usize, budget: &SearchBudget) -> Result<String> {
    let found = match min_vertices_search(q, k, n_max, budget)? {
        MinVertices::Exact(n) => format!("m(q,k) = {n}"),
        MinVertices::GreaterThan(n) => format!("m(q,k) > {n}"),
    };
    let formula = match min_vertices_formula(q, k)? {
        Some(m) => m.to_string(),
        None => "unknown".to_string(),
    };
    Ok(format!("{found}\nformula = {formula}\n"))
}

pub fn realize(path: &str, text: &str, budget: &SearchBudget) -> Result<(String, bool)> {
    let t: WeightedTournament = parse_tournament(text).map_err(|e| CliError::parse(path, e))?;
    Ok(match is_realizable(&t, budget)? {
        Realizability::Realizable(p) => (print_ballots(&p), true),
        Realizability::NotRealizable => ("# not realizable\n".to_string(), false),
    })
}

/// A uniformly random profile on `v1..vn`, reproducible from `seed`.
pub fn random_profile(n: usize, k: u32, seed: u64) -> Result<Profile> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let voters = 2 * k.max(1) as usize - 1;
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let orders: Vec<Vec<&str>> = (0..voters)
        .map(|_| {
            let mut o: Vec<&str> = names.iter().map(String::as_str).collect();
            o.shuffle(&mut rng);
            o
        })
        .collect();
    Ok(Profile::from_named_orders(k, &orders)?)
}

pub fn random(n: usize, k: u32, seed: u64) -> Result<String> {
    Ok(print_ballots(&random_profile(n, k, seed)?))
}
