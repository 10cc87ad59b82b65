use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::filtered::{FilteredSet, RelativeFilteredPair};
use crate::simplex::{Simplex, Vertex};
use crate::value::FiltValue;

/// A vertex map between relative pairs that does not raise filtration
/// values, on the total sets and on the subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreservingMap {
    domain: RelativeFilteredPair,
    codomain: RelativeFilteredPair,
    vertex_map: BTreeMap<Vertex, Vertex>,
}

impl PreservingMap {
    pub fn validate(
        vertex_map: BTreeMap<Vertex, Vertex>,
        domain: RelativeFilteredPair,
        codomain: RelativeFilteredPair,
    ) -> Result<Self> {
        for v in domain.total().vertex_set() {
            match vertex_map.get(v) {
                None => return Err(Error::IncompleteMap(v.clone())),
                Some(w) if !codomain.total().contains_vertex(w) => return Err(Error::UnknownVertex(w.clone())),
                _ => {}
            }
        }
        let map = PreservingMap {
            domain,
            codomain,
            vertex_map,
        };
        for (s, v) in map.domain.total().support() {
            if map.codomain.total().value(&map.image(s)) > FiltValue::Finite(*v) {
                return Err(Error::NotFiltrationPreserving(s.clone()));
            }
        }
        for v in map.domain.sub().vertex_set() {
            if !map.codomain.sub().contains_vertex(&map.vertex_map[v]) {
                return Err(Error::SubNotMappedIntoSub);
            }
        }
        for (s, v) in map.domain.sub().support() {
            if map.codomain.sub().value(&map.image(s)) > FiltValue::Finite(*v) {
                return Err(Error::NotFiltrationPreserving(s.clone()));
            }
        }
        Ok(map)
    }

    pub fn identity(pair: &RelativeFilteredPair) -> Self {
        let vertex_map = pair
            .total()
            .vertex_set()
            .iter()
            .map(|v| (v.clone(), v.clone()))
            .collect();
        PreservingMap {
            domain: pair.clone(),
            codomain: pair.clone(),
            vertex_map,
        }
    }

    /// The inclusion `domain -> codomain` that fixes every vertex.
    pub fn inclusion(domain: &RelativeFilteredPair, codomain: &RelativeFilteredPair) -> Result<Self> {
        let vertex_map = domain
            .total()
            .vertex_set()
            .iter()
            .map(|v| (v.clone(), v.clone()))
            .collect();
        Self::validate(vertex_map, domain.clone(), codomain.clone())
    }

    /// Inclusion of filtered sets viewed as absolute pairs.
    pub fn set_inclusion(domain: &FilteredSet, codomain: &FilteredSet) -> Result<Self> {
        Self::inclusion(
            &RelativeFilteredPair::absolute(domain.clone()),
            &RelativeFilteredPair::absolute(codomain.clone()),
        )
    }

    /// Every vertex of `domain` sent to `target`.
    pub fn constant(domain: &RelativeFilteredPair, codomain: &RelativeFilteredPair, target: &Vertex) -> Result<Self> {
        let vertex_map = domain
            .total()
            .vertex_set()
            .iter()
            .map(|v| (v.clone(), target.clone()))
            .collect();
        Self::validate(vertex_map, domain.clone(), codomain.clone())
    }

    pub fn domain(&self) -> &RelativeFilteredPair {
        &self.domain
    }

    pub fn codomain(&self) -> &RelativeFilteredPair {
        &self.codomain
    }

    pub fn vertex_map(&self) -> &BTreeMap<Vertex, Vertex> {
        &self.vertex_map
    }

    pub fn apply(&self, v: &Vertex) -> &Vertex {
        &self.vertex_map[v]
    }

    /// Image of a simplex as a set (repeated images collapse).
    pub fn image(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|v| self.vertex_map[v].clone())).unwrap()
    }

    /// Images of the vertices of `s`, in the order of `s`.
    pub fn image_sequence(&self, s: &Simplex) -> Vec<Vertex> {
        s.vertices().iter().map(|v| self.vertex_map[v].clone()).collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PreservingMap) -> Result<Self> {
        if inner.codomain != self.domain {
            return Err(Error::MalformedInstance("maps are not composable".into()));
        }
        let vertex_map = inner
            .vertex_map
            .iter()
            .map(|(v, w)| (v.clone(), self.vertex_map[w].clone()))
            .collect();
        Self::validate(vertex_map, inner.domain.clone(), self.codomain.clone())
    }

    /// The restriction `(A, ∅) -> (B, ∅)`.
    pub fn restrict_to_sub(&self) -> Self {
        let vertex_map = self
            .domain
            .sub()
            .vertex_set()
            .iter()
            .map(|v| (v.clone(), self.vertex_map[v].clone()))
            .collect();
        PreservingMap {
            domain: RelativeFilteredPair::absolute(self.domain.sub().clone()),
            codomain: RelativeFilteredPair::absolute(self.codomain.sub().clone()),
            vertex_map,
        }
    }

    /// Same vertex map between different pairs, re-validated.
    pub fn retarget(&self, domain: RelativeFilteredPair, codomain: RelativeFilteredPair) -> Result<Self> {
        let vertex_map = domain
            .total()
            .vertex_set()
            .iter()
            .map(|v| {
                self.vertex_map
                    .get(v)
                    .cloned()
                    .ok_or_else(|| Error::IncompleteMap(v.clone()))
                    .map(|w| (v.clone(), w))
            })
            .collect::<Result<_>>()?;
        Self::validate(vertex_map, domain, codomain)
    }
}
