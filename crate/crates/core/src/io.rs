//! Text formats for filtrations, pairs, and maps.
//!
//! A filtration is one simplex per line, `<value> <v0> <v1> ...`, with values
//! written `3`, `1/2`, or `inf`. `#` starts a comment. A pair file has an
//! `[X]` section and an optional `[A]` section; triples, covers and triads
//! use the same layout with other section names. A map file starts with
//! `domain: <path>` and `codomain: <path>` (relative to the map file) and
//! continues with `<v> -> <w>` lines.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::filtered::{FilteredSet, RelativeFilteredPair};
use crate::maps::PreservingMap;
use crate::simplex::{Simplex, Vertex};
use crate::value::{fmt_rational, FiltValue};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// Entries of one filtration block, each with its line number.
fn parse_entries<'a>(lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Vec<(usize, Simplex, FiltValue)>> {
    let mut out = Vec::new();
    for (n, line) in lines {
        let mut words = line.split_whitespace();
        let value: FiltValue = words.next().unwrap().parse().map_err(|e: String| parse_err(n, e))?;
        let names: Vec<&str> = words.collect();
        let distinct: BTreeSet<&str> = names.iter().copied().collect();
        if distinct.len() != names.len() {
            return Err(parse_err(n, "repeated vertex"));
        }
        let s =
            Simplex::new(names.iter().copied()).ok_or_else(|| parse_err(n, "a simplex needs at least one vertex"))?;
        out.push((n, s, value));
    }
    Ok(out)
}

/// Validates entries, reporting the line of the first offending simplex.
fn build(entries: Vec<(usize, Simplex, FiltValue)>) -> Result<FilteredSet> {
    let mut seen: BTreeMap<Simplex, usize> = BTreeMap::new();
    for (n, s, _) in &entries {
        if let Some(first) = seen.insert(s.clone(), *n) {
            return Err(parse_err(*n, format!("{s} already given on line {first}")));
        }
    }
    let vertices: BTreeSet<Vertex> = entries
        .iter()
        .flat_map(|(_, s, _)| s.vertices().iter().cloned())
        .collect();
    FilteredSet::validate(entries.into_iter().map(|(_, s, v)| (s, v)), vertices).map_err(|e| {
        let line = match &e {
            Error::MissingFace(f) => seen.iter().filter(|(s, _)| f.is_subset_of(s)).map(|(_, n)| *n).min(),
            Error::MonotonicityViolation { coface, .. } => seen.get(coface).copied(),
            _ => None,
        };
        parse_err(line.unwrap_or(0), e.to_string())
    })
}

pub fn parse_filtration_str(text: &str) -> Result<FilteredSet> {
    if let Some((n, _)) = content_lines(text).find(|(_, l)| l.starts_with('[')) {
        return Err(parse_err(n, "section headers belong in pair files"));
    }
    build(parse_entries(content_lines(text))?)
}

/// Groups content lines under `[Name]` headers drawn from `allowed`.
fn split_sections<'a>(
    lines: Vec<(usize, &'a str)>,
    allowed: &[&str],
) -> Result<BTreeMap<String, Vec<(usize, &'a str)>>> {
    let mut sections: BTreeMap<String, Vec<(usize, &str)>> = BTreeMap::new();
    let mut current: Option<String> = None;
    for (n, l) in lines {
        if l.starts_with('[') {
            let name = l
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .filter(|name| allowed.contains(name))
                .ok_or_else(|| parse_err(n, format!("unknown section {l}")))?;
            if sections.insert(name.to_string(), Vec::new()).is_some() {
                return Err(parse_err(n, format!("section {l} given twice")));
            }
            current = Some(name.to_string());
        } else {
            let sec = current
                .as_ref()
                .ok_or_else(|| parse_err(n, "entry before the first section"))?;
            sections.get_mut(sec).unwrap().push((n, l));
        }
    }
    Ok(sections)
}

/// A pair file; a file without sections is read as `(X, ∅)`.
pub fn parse_pair_str(text: &str) -> Result<RelativeFilteredPair> {
    let lines: Vec<(usize, &str)> = content_lines(text).collect();
    if !lines.iter().any(|(_, l)| l.starts_with('[')) {
        return Ok(RelativeFilteredPair::absolute(build(parse_entries(
            lines.into_iter(),
        )?)?));
    }
    let mut sections = split_sections(lines, &["X", "A"])?;
    let x_lines = sections
        .remove("X")
        .ok_or_else(|| parse_err(0, "missing [X] section"))?;
    let x = build(parse_entries(x_lines.into_iter())?)?;
    let a_lines = sections.remove("A").unwrap_or_default();
    let a_entries = parse_entries(a_lines.into_iter())?;
    let lines_of: BTreeMap<Simplex, usize> = a_entries.iter().map(|(n, s, _)| (s.clone(), *n)).collect();
    let a = build(a_entries)?;
    RelativeFilteredPair::new(x, a).map_err(|e| {
        let line = match &e {
            Error::SubBelowTotal(s) => lines_of.get(s).copied(),
            Error::UnknownVertex(v) => lines_of.iter().find(|(s, _)| s.contains(v)).map(|(_, n)| *n),
            _ => None,
        };
        parse_err(line.unwrap_or(0), e.to_string())
    })
}

/// Filtrations in the named sections, all of which must be present, in the
/// order of `names`. Used for triples `[X] [A] [B]`, covers `[X1] [X2]`, and
/// triads `[X] [X1] [X2]`.
pub fn parse_sections_str(text: &str, names: &[&str]) -> Result<Vec<FilteredSet>> {
    let mut sections = split_sections(content_lines(text).collect(), names)?;
    names
        .iter()
        .map(|name| {
            let lines = sections
                .remove(*name)
                .ok_or_else(|| parse_err(0, format!("missing [{name}] section")))?;
            build(parse_entries(lines.into_iter())?)
        })
        .collect()
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn in_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        other => other,
    })
}

pub fn parse_filtration(path: &Path) -> Result<FilteredSet> {
    in_file(path, parse_filtration_str(&read(path)?))
}

pub fn parse_pair(path: &Path) -> Result<RelativeFilteredPair> {
    in_file(path, parse_pair_str(&read(path)?))
}

pub fn parse_sections(path: &Path, names: &[&str]) -> Result<Vec<FilteredSet>> {
    in_file(path, parse_sections_str(&read(path)?, names))
}

/// Sections `[X] [A] [B]` with `B ⊆ A ⊆ X` as filtered sets.
pub fn parse_triple(path: &Path) -> Result<(FilteredSet, FilteredSet, FilteredSet)> {
    let mut v = parse_sections(path, &["X", "A", "B"])?;
    let (b, a, x) = (v.pop().unwrap(), v.pop().unwrap(), v.pop().unwrap());
    RelativeFilteredPair::new(x.clone(), a.clone())?;
    RelativeFilteredPair::new(a.clone(), b.clone())?;
    Ok((x, a, b))
}

/// Header paths and vertex assignments of a map file.
pub struct MapSpec {
    pub domain: PathBuf,
    pub codomain: PathBuf,
    pub vertex_map: BTreeMap<Vertex, Vertex>,
}

pub fn parse_map_spec(text: &str, base: &Path) -> Result<MapSpec> {
    let mut domain = None;
    let mut codomain = None;
    let mut vertex_map = BTreeMap::new();
    for (n, l) in content_lines(text) {
        if let Some(p) = l.strip_prefix("domain:") {
            domain = Some(base.join(p.trim()));
        } else if let Some(p) = l.strip_prefix("codomain:") {
            codomain = Some(base.join(p.trim()));
        } else if let Some((v, w)) = l.split_once("->") {
            let (v, w) = (v.trim(), w.trim());
            if v.is_empty() || w.is_empty() || v.contains(char::is_whitespace) || w.contains(char::is_whitespace) {
                return Err(parse_err(n, "expected `<v> -> <w>`"));
            }
            if vertex_map.insert(Vertex::new(v), Vertex::new(w)).is_some() {
                return Err(parse_err(n, format!("{v} mapped twice")));
            }
        } else {
            return Err(parse_err(n, format!("unrecognised line `{l}`")));
        }
    }
    Ok(MapSpec {
        domain: domain.ok_or_else(|| parse_err(0, "missing `domain:` header"))?,
        codomain: codomain.ok_or_else(|| parse_err(0, "missing `codomain:` header"))?,
        vertex_map,
    })
}

pub fn parse_map(path: &Path) -> Result<PreservingMap> {
    let base = path.parent().unwrap_or(Path::new("."));
    let spec = in_file(path, parse_map_spec(&read(path)?, base))?;
    let domain = parse_pair(&spec.domain)?;
    let codomain = parse_pair(&spec.codomain)?;
    PreservingMap::validate(spec.vertex_map, domain, codomain)
}

/// Canonical text: by dimension, then vertices; vertices without a finite
/// value are kept as `inf` lines.
pub fn serialize_filtration(x: &FilteredSet) -> String {
    let mut items: Vec<(&Simplex, &crate::value::Rational)> = x.support().collect();
    items.sort_by(|a, b| a.0.dim().cmp(&b.0.dim()).then(a.0.cmp(b.0)));
    let mut out = String::new();
    let listed: BTreeSet<&Vertex> = items
        .iter()
        .filter(|(s, _)| s.dim() == 0)
        .map(|(s, _)| &s.vertices()[0])
        .collect();
    let hidden: Vec<&Vertex> = x.vertex_set().iter().filter(|v| !listed.contains(v)).collect();
    let mut emitted_hidden = false;
    for (s, v) in items {
        if s.dim() > 0 && !emitted_hidden {
            push_hidden(&mut out, &hidden);
            emitted_hidden = true;
        }
        out.push_str(&fmt_rational(v));
        for u in s.vertices() {
            out.push(' ');
            out.push_str(u.name());
        }
        out.push('\n');
    }
    if !emitted_hidden {
        push_hidden(&mut out, &hidden);
    }
    out
}

fn push_hidden(out: &mut String, hidden: &[&Vertex]) {
    for v in hidden {
        out.push_str("inf ");
        out.push_str(v.name());
        out.push('\n');
    }
}

pub fn serialize_pair(pair: &RelativeFilteredPair) -> String {
    format!(
        "[X]\n{}[A]\n{}",
        serialize_filtration(pair.total()),
        serialize_filtration(pair.sub())
    )
}

pub fn serialize_map(f: &PreservingMap, domain: &str, codomain: &str) -> String {
    let mut out = format!("domain: {domain}\ncodomain: {codomain}\n");
    for (v, w) in f.vertex_map() {
        out.push_str(&format!("{v} -> {w}\n"));
    }
    out
}
