//! Ballot and tournament text formats.
//!
//! Ballot file:
//!
//! ```text
//! # comment
//! k 3
//! order a d c b
//! order d c b a
//! ...
//! ```
//!
//! exactly `2k-1` `order` lines, most preferred first. Tournament file:
//!
//! ```text
//! tournament k=3 n=4
//! arc a b 3
//! ...
//! ```
//!
//! one `arc <u> <v> <w>` line per pair, sorted by name. A vertex that
//! appears in no arc (only when `n = 1`) is declared with `vertex <name>`;
//! without it the lone vertex is called `v1`. Names compare with
//! digit runs taken numerically (`v2 < v10`) in both formats, and parsed
//! vertex tables follow that order.

use std::collections::HashSet;

use kmajority::profile::natural_cmp;
use kmajority::{Arc, Profile, Vertices, WeightedTournament};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// Non-blank, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_ballots(text: &str) -> Result<Profile, ParseError> {
    let mut lines = content_lines(text);
    let Some((hline, header)) = lines.next() else {
        return err(1, "empty ballot file, expected `k <integer>`");
    };
    let k: u32 = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["k", v] => match v.parse() {
            Ok(k) if k >= 1 => k,
            _ => return err(hline, format!("invalid k `{v}`")),
        },
        _ => return err(hline, format!("expected `k <integer>`, found `{header}`")),
    };
    let voters = 2 * k as usize - 1;

    let mut orders: Vec<Vec<&str>> = Vec::with_capacity(voters);
    let mut reference: Option<HashSet<&str>> = None;
    let mut last_line = hline;
    for (line, l) in lines {
        last_line = line;
        let mut words = l.split_whitespace();
        if words.next() != Some("order") {
            return err(line, format!("expected `order <name> ...`, found `{l}`"));
        }
        let names: Vec<&str> = words.collect();
        let mut seen = HashSet::with_capacity(names.len());
        for n in &names {
            if !seen.insert(*n) {
                return err(line, format!("candidate `{n}` listed twice"));
            }
        }
        match &reference {
            None => reference = Some(seen),
            Some(r) => {
                if let Some(n) = names.iter().find(|n| !r.contains(*n)) {
                    return err(line, format!("unknown candidate `{n}`"));
                }
                if names.len() != r.len() {
                    return err(line, format!("order lists {} of {} candidates", names.len(), r.len()));
                }
            }
        }
        if orders.len() == voters {
            return err(line, format!("more than {voters} orders for k={k}"));
        }
        orders.push(names);
    }
    if orders.len() != voters {
        return err(last_line, format!("expected {voters} orders for k={k}, found {}", orders.len()));
    }
    Profile::from_named_orders(k, &orders).or_else(|e| err(hline, e.to_string()))
}

pub fn print_ballots(profile: &Profile) -> String {
    let mut out = format!("k {}\n", profile.k());
    for order in profile.named_orders() {
        out.push_str("order");
        for name in order {
            out.push(' ');
            out.push_str(name);
        }
        out.push('\n');
    }
    out
}

pub fn print_tournament(t: &WeightedTournament) -> String {
    let v = t.vertices();
    let mut arcs = t.arcs();
    arcs.sort_by(|a, b| {
        natural_cmp(v.name(a.from), v.name(b.from)).then_with(|| natural_cmp(v.name(a.to), v.name(b.to)))
    });
    let mut out = format!("tournament k={} n={}\n", t.k(), t.n());
    if t.n() == 1 {
        out.push_str(&format!("vertex {}\n", v.name(kmajority::VertexId(0))));
    }
    for a in arcs {
        out.push_str(&format!("arc {} {} {}\n", v.name(a.from), v.name(a.to), a.weight));
    }
    out
}

fn header_field<'a>(field: &'a str, key: &str) -> Option<&'a str> {
    field.strip_prefix(key)?.strip_prefix('=')
}

pub fn parse_tournament(text: &str) -> Result<WeightedTournament, ParseError> {
    let mut lines = content_lines(text);
    let Some((hline, header)) = lines.next() else {
        return err(1, "empty tournament file");
    };
    let (k, n) = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["tournament", kf, nf] => {
            let k = header_field(kf, "k").and_then(|s| s.parse::<u32>().ok()).filter(|&k| k >= 1);
            let n = header_field(nf, "n").and_then(|s| s.parse::<usize>().ok());
            match (k, n) {
                (Some(k), Some(n)) => (k, n),
                _ => return err(hline, format!("malformed header `{header}`")),
            }
        }
        _ => return err(hline, format!("expected `tournament k=<k> n=<n>`, found `{header}`")),
    };

    let mut raw = Vec::new();
    let mut declared = Vec::new();
    let mut last_line = hline;
    for (line, l) in lines {
        last_line = line;
        let (u, v, w) = match l.split_whitespace().collect::<Vec<_>>()[..] {
            ["vertex", name] => {
                declared.push(name);
                continue;
            }
            ["arc", u, v, w] => match w.parse::<u32>() {
                Ok(w) => (u, v, w),
                Err(_) => return err(line, format!("invalid weight `{w}`")),
            },
            _ => return err(line, format!("expected `arc <u> <v> <w>`, found `{l}`")),
        };
        if w < k || w > 2 * k - 1 {
            return err(line, format!("weight {w} outside [{k}, {}]", 2 * k - 1));
        }
        if u == v {
            return err(line, format!("self-loop on `{u}`"));
        }
        raw.push((line, u, v, w));
    }
    let expected_arcs = n * n.saturating_sub(1) / 2;
    if raw.len() != expected_arcs {
        return err(last_line, format!("expected {expected_arcs} arcs for n={n}, found {}", raw.len()));
    }

    let mut names: Vec<&str> = raw.iter().flat_map(|&(_, u, v, _)| [u, v]).chain(declared).collect();
    names.sort_by(|a, b| natural_cmp(a, b));
    names.dedup();
    if n == 1 && names.is_empty() {
        names.push("v1");
    }
    if names.len() != n {
        return err(hline, format!("header says n={n} but arcs name {} vertices", names.len()));
    }
    let vertices = Vertices::new(names.iter().copied()).or_else(|e| err(hline, e.to_string()))?;
    let mut seen = HashSet::new();
    let mut arcs = Vec::with_capacity(raw.len());
    for (line, u, v, w) in raw {
        let (from, to) = (vertices.id(u).unwrap(), vertices.id(v).unwrap());
        if !seen.insert((from.min(to), from.max(to))) {
            return err(line, format!("second arc between `{u}` and `{v}`"));
        }
        arcs.push(Arc { from, to, weight: w });
    }
    WeightedTournament::from_arcs(k, vertices, arcs).or_else(|e| err(hline, e.to_string()))
}
