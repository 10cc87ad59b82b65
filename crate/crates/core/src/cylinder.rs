//! Prism over an ordered filtered set.
//!
//! The cylinder lives on two copies of the vertex set. A subset is present
//! iff its primed vertices all come no later (in the given order) than its
//! unprimed ones, and then it carries the value of its collapsed image in
//! the base.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::filtered::{FilteredSet, RelativeFilteredPair};
use crate::maps::PreservingMap;
use crate::simplex::{Simplex, Vertex};
use crate::value::FiltValue;

#[derive(Debug, Clone)]
pub struct Cylinder {
    pub set: FilteredSet,
    /// `s -> s`
    pub h0: PreservingMap,
    /// `s -> s'`
    pub h1: PreservingMap,
    /// collapse `s, s' -> s`
    pub k: PreservingMap,
    primes: BTreeMap<Vertex, Vertex>,
}

impl Cylinder {
    /// Primed copy of a base vertex.
    pub fn primed(&self, v: &Vertex) -> &Vertex {
        &self.primes[v]
    }
}

fn prime_suffix(x: &FilteredSet) -> String {
    let mut suffix = String::from("'");
    loop {
        let clash = x
            .vertex_set()
            .iter()
            .any(|v| x.contains_vertex(&Vertex::new(format!("{}{}", v.name(), suffix))));
        if !clash {
            return suffix;
        }
        suffix.push('\'');
    }
}

pub fn cylinder(x: &FilteredSet, order: &[Vertex]) -> Result<Cylinder> {
    let position: HashMap<&Vertex, usize> = order.iter().enumerate().map(|(i, v)| (v, i)).collect();
    if let Some(v) = x.vertex_set().iter().find(|v| !position.contains_key(v)) {
        return Err(Error::UnknownVertex(v.clone()));
    }
    let suffix = prime_suffix(x);
    let primes: BTreeMap<Vertex, Vertex> = x
        .vertex_set()
        .iter()
        .map(|v| (v.clone(), Vertex::new(format!("{}{}", v.name(), suffix))))
        .collect();

    let mut values: BTreeMap<Simplex, FiltValue> = BTreeMap::new();
    for (tau, value) in x.support() {
        let mut ordered: Vec<&Vertex> = tau.vertices().iter().collect();
        ordered.sort_by_key(|v| position[v]);
        let k = ordered.len();
        for pivot in 0..k {
            // pivot vertex primed, unprimed, or both
            for mode in 0..3 {
                let mut vs = Vec::with_capacity(k + 1);
                for (i, v) in ordered.iter().enumerate() {
                    if i < pivot {
                        vs.push(primes[*v].clone());
                    } else if i > pivot {
                        vs.push((*v).clone());
                    } else {
                        if mode != 1 {
                            vs.push(primes[*v].clone());
                        }
                        if mode != 0 {
                            vs.push((*v).clone());
                        }
                    }
                }
                let s = Simplex::new(vs).unwrap();
                values.insert(s, FiltValue::Finite(*value));
            }
        }
    }
    let vertices: BTreeSet<Vertex> = x.vertex_set().iter().cloned().chain(primes.values().cloned()).collect();
    let set = FilteredSet::validate(values, vertices)?;

    let base = RelativeFilteredPair::absolute(x.clone());
    let cyl = RelativeFilteredPair::absolute(set.clone());
    let ident: BTreeMap<Vertex, Vertex> = x.vertex_set().iter().map(|v| (v.clone(), v.clone())).collect();
    let h0 = PreservingMap::validate(ident, base.clone(), cyl.clone())?;
    let h1 = PreservingMap::validate(primes.clone(), base.clone(), cyl.clone())?;
    let collapse: BTreeMap<Vertex, Vertex> = x
        .vertex_set()
        .iter()
        .flat_map(|v| [(v.clone(), v.clone()), (primes[v].clone(), v.clone())])
        .collect();
    let k = PreservingMap::validate(collapse, cyl, base)?;
    Ok(Cylinder { set, h0, h1, k, primes })
}

/// The map `G` on the cylinder that agrees with `f` on the base copy and with
/// `g` on the primed copy. Validation succeeds when `f` and `g` are
/// contiguous; its failure pinpoints a simplex where they are not.
pub fn cylinder_map(cyl: &Cylinder, f: &PreservingMap, g: &PreservingMap) -> Result<PreservingMap> {
    let mut vertex_map = BTreeMap::new();
    for (v, p) in &cyl.primes {
        vertex_map.insert(v.clone(), f.apply(v).clone());
        vertex_map.insert(p.clone(), g.apply(v).clone());
    }
    PreservingMap::validate(
        vertex_map,
        RelativeFilteredPair::absolute(cyl.set.clone()),
        f.codomain().clone(),
    )
}
