use std::fmt;
use std::sync::Arc;

/// Opaque, totally ordered vertex token.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(Arc<str>);

impl Vertex {
    pub fn new(name: impl AsRef<str>) -> Self {
        Vertex(Arc::from(name.as_ref()))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Vertex {
    fn from(s: &str) -> Self {
        Vertex::new(s)
    }
}

/// A nonempty set of vertices, stored sorted without repeats.
///
/// The derived order is lexicographic on the sorted vertex sequence and is
/// the canonical basis order everywhere downstream.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<Vertex>);

impl Simplex {
    /// Builds the simplex spanned by `vertices`; duplicates collapse.
    /// Returns `None` for an empty input.
    pub fn new<I, V>(vertices: I) -> Option<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<Vertex>,
    {
        let mut vs: Vec<Vertex> = vertices.into_iter().map(Into::into).collect();
        vs.sort();
        vs.dedup();
        if vs.is_empty() {
            None
        } else {
            Some(Simplex(vs))
        }
    }

    pub fn vertex(v: impl Into<Vertex>) -> Self {
        Simplex(vec![v.into()])
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(v))
    }

    /// Codimension-one faces with their boundary signs; `(i, face)` omits the
    /// `i`-th vertex and carries sign `(-1)^i`.
    pub fn facets(&self) -> impl Iterator<Item = (usize, Simplex)> + '_ {
        let n = self.0.len();
        (0..if n > 1 { n } else { 0 }).map(move |i| {
            let mut vs = self.0.clone();
            vs.remove(i);
            (i, Simplex(vs))
        })
    }

    /// All nonempty subsets, including the simplex itself.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        (1u64..(1u64 << n))
            .map(|mask| {
                Simplex(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i].clone())
                        .collect(),
                )
            })
            .collect()
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut vs = self.0.clone();
        vs.extend(other.0.iter().cloned());
        vs.sort();
        vs.dedup();
        Simplex(vs)
    }

    pub fn with_vertex(&self, v: &Vertex) -> Simplex {
        self.union(&Simplex::vertex(v.clone()))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(v.name())?;
        }
        f.write_str("}")
    }
}

/// Sign of the permutation that sorts `items`, or `None` if two are equal.
pub fn sort_sign<T: Ord>(items: &[T]) -> Option<i8> {
    let mut sign = 1i8;
    for i in 0..items.len() {
        for j in (i + 1)..items.len() {
            match items[i].cmp(&items[j]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Greater => sign = -sign,
                std::cmp::Ordering::Less => {}
            }
        }
    }
    Some(sign)
}
