//! `name[:p1[,p2]]` family descriptors and integer list arguments.

use closed_chroma_core::graphs::{FamilyDescriptor, Tiling};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}` takes {expected} parameter(s), got {found}")]
    ParamCount { family: String, expected: usize, found: usize },
    #[error("invalid number `{0}`")]
    Number(String),
    #[error("unknown tiling `{0}` (expected r3, r4 or r6)")]
    Tiling(String),
    #[error("empty range `{0}`")]
    EmptyRange(String),
    #[error("{0}")]
    Domain(String),
}

/// Family names accepted by [`parse_family`], with their parameter count.
pub const FAMILIES: &[(&str, usize)] = &[
    ("complete", 1),
    ("star", 1),
    ("friendship", 1),
    ("path", 1),
    ("cycle", 1),
    ("bipartite", 2),
    ("caterpillar", 2),
    ("binary-tree", 1),
    ("mary-tree", 1),
    ("petersen", 2),
    ("tiling", 1),
];

pub fn param_count(name: &str) -> Option<usize> {
    FAMILIES.iter().find(|(f, _)| *f == name).map(|&(_, c)| c)
}

/// Parses `cycle:6`, `petersen:7,2`, `tiling:r4` and the like. The result
/// has a validated parameter domain.
pub fn parse_family(text: &str) -> Result<FamilyDescriptor, ParseError> {
    let (name, params) = match text.split_once(':') {
        Some((name, rest)) => (name.trim(), rest.split(',').map(str::trim).collect::<Vec<_>>()),
        None => (text.trim(), Vec::new()),
    };
    let expected = param_count(name).ok_or_else(|| ParseError::UnknownFamily(name.to_string()))?;
    if params.len() != expected {
        return Err(ParseError::ParamCount { family: name.to_string(), expected, found: params.len() });
    }
    if name == "tiling" {
        let t = match params[0].to_ascii_lowercase().as_str() {
            "r3" => Tiling::R3,
            "r4" => Tiling::R4,
            "r6" => Tiling::R6,
            other => return Err(ParseError::Tiling(other.to_string())),
        };
        return Ok(FamilyDescriptor::Tiling(t));
    }
    let nums = params.iter().map(|p| p.parse::<usize>().map_err(|_| ParseError::Number(p.to_string()))).collect::<Result<Vec<_>, _>>()?;
    build(name, &nums)
}

/// A descriptor from a family name and numeric parameters.
pub fn build(name: &str, p: &[usize]) -> Result<FamilyDescriptor, ParseError> {
    use FamilyDescriptor::*;
    let desc = match (name, p) {
        ("complete", &[m]) => Complete(m),
        ("star", &[m]) => Star(m),
        ("friendship", &[m]) => Friendship(m),
        ("path", &[m]) => Path(m),
        ("cycle", &[m]) => Cycle(m),
        ("bipartite", &[i, j]) => CompleteBipartite(i, j),
        ("caterpillar", &[a, b]) => Caterpillar(a, b),
        ("binary-tree", &[d]) => PerfectBinaryTree(d),
        ("mary-tree", &[m]) => MAryTreeInfinite(m),
        ("petersen", &[m, j]) => Petersen(m, j),
        _ => {
            return Err(match param_count(name) {
                None => ParseError::UnknownFamily(name.to_string()),
                Some(expected) => ParseError::ParamCount { family: name.to_string(), expected, found: p.len() },
            })
        }
    };
    desc.validate().map_err(|e| ParseError::Domain(e.to_string()))?;
    Ok(desc)
}

/// Comma-separated items, each a number or an inclusive range `a..b` /
/// `a..=b`. Order of first appearance is kept, repeats dropped.
pub fn parse_list<T: TryFrom<i64>>(text: &str) -> Result<Vec<T>, ParseError> {
    let number = |s: &str| s.trim().parse::<i64>().map_err(|_| ParseError::Number(s.trim().to_string()));
    let mut out: Vec<i64> = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (lo, hi) = match item.split_once("..") {
            Some((lo, hi)) => (number(lo)?, number(hi.strip_prefix('=').unwrap_or(hi))?),
            None => (number(item)?, number(item)?),
        };
        if lo > hi {
            return Err(ParseError::EmptyRange(item.to_string()));
        }
        for v in lo..=hi {
            if !out.contains(&v) {
                out.push(v);
            }
        }
    }
    if out.is_empty() {
        return Err(ParseError::EmptyRange(text.to_string()));
    }
    out.into_iter().map(|v| T::try_from(v).map_err(|_| ParseError::Number(v.to_string()))).collect()
}
