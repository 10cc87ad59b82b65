//! Filtered sets, relative pairs, and the combinatorial constructions on them.
//!
//! A [`FilteredSet`] stores only its support: every subset of the vertex set
//! that is not listed carries the value `inf` and never appears in a sublevel
//! complex. Validation rejects inputs whose support is not downward closed or
//! whose values decrease along an inclusion.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::simplex::{Simplex, Vertex};
use crate::value::{fmt_rational, FiltValue, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FilteredSet {
    vertices: BTreeSet<Vertex>,
    values: BTreeMap<Simplex, Rational>,
}

impl FilteredSet {
    /// Validates a raw assignment. `inf` entries are accepted and dropped.
    pub fn validate<I>(raw: I, vertices: impl IntoIterator<Item = Vertex>) -> Result<Self>
    where
        I: IntoIterator<Item = (Simplex, FiltValue)>,
    {
        let vertices: BTreeSet<Vertex> = vertices.into_iter().collect();
        let mut values = BTreeMap::new();
        for (s, v) in raw {
            if let Some(u) = s.vertices().iter().find(|u| !vertices.contains(*u)) {
                return Err(Error::UnknownVertex(u.clone()));
            }
            match v {
                FiltValue::Finite(r) => {
                    values.insert(s, r);
                }
                FiltValue::Inf => {
                    values.remove(&s);
                }
            }
        }
        for (s, v) in &values {
            for (_, face) in s.facets() {
                match values.get(&face) {
                    None => return Err(Error::MissingFace(face)),
                    Some(fv) if fv > v => {
                        return Err(Error::MonotonicityViolation {
                            face,
                            coface: s.clone(),
                        })
                    }
                    _ => {}
                }
            }
        }
        Ok(FilteredSet { vertices, values })
    }

    /// Like [`validate`](Self::validate) with the vertex set taken from the listed simplices.
    pub fn from_simplices<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Simplex, FiltValue)>,
    {
        let raw: Vec<_> = raw.into_iter().collect();
        let vertices: BTreeSet<Vertex> = raw.iter().flat_map(|(s, _)| s.vertices().iter().cloned()).collect();
        Self::validate(raw, vertices)
    }

    pub fn empty() -> Self {
        FilteredSet {
            vertices: BTreeSet::new(),
            values: BTreeMap::new(),
        }
    }

    /// Every nonempty subset of `vertices` at value `alpha`.
    pub fn full_simplex(vertices: &[Vertex], alpha: Rational) -> Self {
        let top = Simplex::new(vertices.iter().cloned()).expect("nonempty vertex list");
        FilteredSet {
            vertices: vertices.iter().cloned().collect(),
            values: top.faces().into_iter().map(|f| (f, alpha)).collect(),
        }
    }

    /// The full simplex with its top cell removed.
    pub fn simplex_boundary(vertices: &[Vertex], alpha: Rational) -> Self {
        let mut s = Self::full_simplex(vertices, alpha);
        let top = Simplex::new(vertices.iter().cloned()).unwrap();
        s.values.remove(&top);
        s
    }

    /// Closed star of `omitted` in the boundary of the simplex on `vertices`:
    /// the top cell and the face opposite `omitted` are removed.
    pub fn closed_star(vertices: &[Vertex], alpha: Rational, omitted: &Vertex) -> Self {
        let mut s = Self::simplex_boundary(vertices, alpha);
        if let Some(opp) = Simplex::new(vertices.iter().filter(|v| *v != omitted).cloned()) {
            s.values.remove(&opp);
        }
        s
    }

    pub fn vertex_set(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn contains_vertex(&self, v: &Vertex) -> bool {
        self.vertices.contains(v)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Supported simplices and their values, in canonical order.
    pub fn support(&self) -> impl Iterator<Item = (&Simplex, &Rational)> {
        self.values.iter()
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }

    pub fn value(&self, s: &Simplex) -> FiltValue {
        self.values
            .get(s)
            .map(|r| FiltValue::Finite(*r))
            .unwrap_or(FiltValue::Inf)
    }

    pub fn is_supported(&self, s: &Simplex) -> bool {
        self.values.contains_key(s)
    }

    pub fn contains_at(&self, s: &Simplex, level: Rational) -> bool {
        self.values.get(s).is_some_and(|v| *v <= level)
    }

    /// Sublevel complex `F^{-1}((-inf, level])`.
    pub fn complex_at(&self, level: Rational) -> BTreeSet<Simplex> {
        self.values
            .iter()
            .filter(|(_, v)| **v <= level)
            .map(|(s, _)| s.clone())
            .collect()
    }

    /// `dim`-simplices present at `level`, in canonical order.
    pub fn simplices_at(&self, dim: usize, level: Rational) -> Vec<Simplex> {
        self.values
            .iter()
            .filter(|(s, v)| s.dim() == dim && **v <= level)
            .map(|(s, _)| s.clone())
            .collect()
    }

    pub fn top_dim(&self) -> Option<usize> {
        self.values.keys().map(Simplex::dim).max()
    }

    pub fn min_value(&self) -> Option<Rational> {
        self.values.values().min().copied()
    }

    /// Sorted, deduplicated finite values of the support.
    pub fn critical_values(&self) -> Vec<Rational> {
        let set: BTreeSet<Rational> = self.values.values().copied().collect();
        set.into_iter().collect()
    }

    /// Union of filtered sets: minimum on subsets of both vertex sets, the
    /// one-sided value on subsets of exactly one, `inf` otherwise.
    pub fn union(&self, other: &FilteredSet) -> FilteredSet {
        let vertices: BTreeSet<Vertex> = self.vertices.union(&other.vertices).cloned().collect();
        let in_all = |set: &BTreeSet<Vertex>, s: &Simplex| s.vertices().iter().all(|v| set.contains(v));
        let mut values = BTreeMap::new();
        for s in self.values.keys().chain(other.values.keys()) {
            let in_x = in_all(&self.vertices, s);
            let in_y = in_all(&other.vertices, s);
            let v = match (in_x, in_y) {
                (true, true) => self.value(s).min(other.value(s)),
                (true, false) => self.value(s),
                (false, true) => other.value(s),
                (false, false) => FiltValue::Inf,
            };
            if let FiltValue::Finite(r) = v {
                values.insert(s.clone(), r);
            }
        }
        FilteredSet { vertices, values }
    }

    /// Intersection: maximum of the two values on common subsets.
    pub fn intersection(&self, other: &FilteredSet) -> FilteredSet {
        let vertices: BTreeSet<Vertex> = self.vertices.intersection(&other.vertices).cloned().collect();
        let values = self
            .values
            .iter()
            .filter_map(|(s, v)| other.values.get(s).map(|w| (s.clone(), *v.max(w))))
            .collect();
        FilteredSet { vertices, values }
    }

    /// `q`-skeleton: simplices of dimension at most `q` keep their value.
    /// `q = -1` leaves nothing supported.
    pub fn skeleton(&self, q: isize) -> FilteredSet {
        let values = self
            .values
            .iter()
            .filter(|(s, _)| (s.dim() as isize) <= q)
            .map(|(s, v)| (s.clone(), *v))
            .collect();
        FilteredSet {
            vertices: self.vertices.clone(),
            values,
        }
    }

    /// Same values over a larger vertex set.
    pub fn with_vertices(&self, extra: impl IntoIterator<Item = Vertex>) -> FilteredSet {
        let mut out = self.clone();
        out.vertices.extend(extra);
        out
    }

    /// True when `self` is a filtered subset of `other`: vertices contained
    /// and `F_self >= F_other` on the support of `self`.
    pub fn is_filtered_subset_of(&self, other: &FilteredSet) -> bool {
        self.vertices.is_subset(&other.vertices)
            && self.values.iter().all(|(s, v)| other.value(s) <= FiltValue::Finite(*v))
    }

    /// Whether every nonempty sublevel complex over `interval` is a cone
    /// neighbourhood of `apex`.
    pub fn is_star_shaped(&self, apex: &Vertex, interval: &Interval) -> Result<bool> {
        if !self.vertices.contains(apex) {
            return Err(Error::UnknownVertex(apex.clone()));
        }
        for level in interval.levels(&self.critical_values()) {
            let complex = self.complex_at(level);
            if complex.is_empty() {
                continue;
            }
            let star_ok = complex.iter().all(|s| complex.contains(&s.with_vertex(apex)));
            if !star_ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for FilteredSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<_> = self.values.iter().collect();
        items.sort_by(|a, b| a.0.dim().cmp(&b.0.dim()).then(a.0.cmp(b.0)));
        for (i, (s, v)) in items.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}:{}", s, fmt_rational(v))?;
        }
        Ok(())
    }
}

/// Names `v0, v1, ..` padded so that lexicographic order matches index order.
pub fn standard_vertices(q: usize) -> Vec<Vertex> {
    let width = q.to_string().len();
    (0..=q).map(|i| Vertex::new(format!("v{i:0width$}"))).collect()
}

/// The `(q, alpha)`-simplex on the standard vertices.
pub fn standard_simplex(q: usize, alpha: Rational) -> FilteredSet {
    FilteredSet::full_simplex(&standard_vertices(q), alpha)
}

/// Boundary of the standard `(q, alpha)`-simplex.
pub fn standard_boundary(q: usize, alpha: Rational) -> FilteredSet {
    FilteredSet::simplex_boundary(&standard_vertices(q), alpha)
}

/// Closed star of the standard vertex with index `omitted` in the boundary of
/// the standard `(q, alpha)`-simplex.
pub fn standard_closed_star(q: usize, alpha: Rational, omitted: usize) -> FilteredSet {
    let vs = standard_vertices(q);
    FilteredSet::closed_star(&vs, alpha, &vs[omitted])
}

/// One-point filtered set born at `alpha`.
pub fn point(alpha: Rational) -> FilteredSet {
    standard_simplex(0, alpha)
}

/// Closed interval `[lo, hi]` of finite levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInterval {
                lo: fmt_rational(&lo),
                hi: fmt_rational(&hi),
            });
        }
        Ok(Interval { lo, hi })
    }

    pub fn ints(lo: i64, hi: i64) -> Result<Self> {
        Self::new(Rational::from_integer(lo), Rational::from_integer(hi))
    }

    pub fn degenerate(level: Rational) -> Self {
        Interval { lo: level, hi: level }
    }

    pub fn lo(&self) -> Rational {
        self.lo
    }

    pub fn hi(&self) -> Rational {
        self.hi
    }

    pub fn contains(&self, level: Rational) -> bool {
        self.lo <= level && level <= self.hi
    }

    /// The endpoints together with every critical value inside the interval;
    /// sublevel complexes are constant between consecutive entries.
    pub fn levels(&self, critical: &[Rational]) -> Vec<Rational> {
        let mut out: BTreeSet<Rational> = critical.iter().copied().filter(|c| self.contains(*c)).collect();
        out.insert(self.lo);
        out.insert(self.hi);
        out.into_iter().collect()
    }

    /// All intervals `[c_i, c_j]` with `c_i <= c_j` drawn from `critical`.
    pub fn all_over(critical: &[Rational]) -> Vec<Interval> {
        let mut out = Vec::new();
        for (i, lo) in critical.iter().enumerate() {
            for hi in &critical[i..] {
                out.push(Interval { lo: *lo, hi: *hi });
            }
        }
        out
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", fmt_rational(&self.lo), fmt_rational(&self.hi))
    }
}

/// A filtered set with a filtered subset whose values dominate it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelativeFilteredPair {
    total: FilteredSet,
    sub: FilteredSet,
}

impl RelativeFilteredPair {
    pub fn new(total: FilteredSet, sub: FilteredSet) -> Result<Self> {
        if let Some(v) = sub.vertices.iter().find(|v| !total.vertices.contains(*v)) {
            return Err(Error::UnknownVertex(v.clone()));
        }
        for (s, v) in &sub.values {
            if total.value(s) > FiltValue::Finite(*v) {
                return Err(Error::SubBelowTotal(s.clone()));
            }
        }
        Ok(RelativeFilteredPair { total, sub })
    }

    /// The pair `(X, empty)`.
    pub fn absolute(total: FilteredSet) -> Self {
        RelativeFilteredPair {
            total,
            sub: FilteredSet::empty(),
        }
    }

    pub fn total(&self) -> &FilteredSet {
        &self.total
    }

    pub fn sub(&self) -> &FilteredSet {
        &self.sub
    }

    pub fn is_absolute(&self) -> bool {
        self.sub.vertices.is_empty()
    }

    /// Simplex is in the relative chain basis at `level`: present in the
    /// total complex and absent from the subcomplex.
    pub fn is_relative_basis(&self, s: &Simplex, level: Rational) -> bool {
        self.total.contains_at(s, level) && !self.sub.contains_at(s, level)
    }

    pub fn critical_values(&self) -> Vec<Rational> {
        let set: BTreeSet<Rational> = self
            .total
            .critical_values()
            .into_iter()
            .chain(self.sub.critical_values())
            .collect();
        set.into_iter().collect()
    }

    pub fn top_dim(&self) -> usize {
        self.total.top_dim().unwrap_or(0)
    }
}

impl fmt::Display for RelativeFilteredPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X: {} | A: {}", self.total, self.sub)
    }
}
