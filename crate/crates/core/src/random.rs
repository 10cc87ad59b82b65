//! Seeded generation of small random instances.
//!
//! Everything is drawn from a ChaCha stream, so a seed fixes every instance,
//! map, and cover on every platform.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::contiguity::are_contiguous_everywhere;
use crate::filtered::{FilteredSet, RelativeFilteredPair};
use crate::maps::PreservingMap;
use crate::simplex::{Simplex, Vertex};
use crate::value::{FiltValue, Rational};

/// Supported simplices allowed in one generated filtration.
pub const MAX_SUPPORT: usize = 12;

const NAMES: [&str; 5] = ["a", "b", "c", "d", "e"];

/// `0, 1/2, 1, 2, inf`.
pub fn palette() -> [FiltValue; 5] {
    [
        FiltValue::int(0),
        FiltValue::ratio(1, 2),
        FiltValue::int(1),
        FiltValue::int(2),
        FiltValue::Inf,
    ]
}

/// `X = X' ∪ A` and `A' = X' ∩ A`, with the inclusion `(X', A') -> (X, A)`.
#[derive(Debug, Clone)]
pub struct ExcisionConfig {
    pub small: RelativeFilteredPair,
    pub large: RelativeFilteredPair,
}

pub struct Fuzzer {
    rng: ChaCha8Rng,
}

impl Fuzzer {
    pub fn new(seed: u64) -> Self {
        Fuzzer {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn value(&mut self) -> FiltValue {
        *palette().choose(&mut self.rng).unwrap()
    }

    fn finite_value(&mut self) -> Rational {
        palette()[..4].choose(&mut self.rng).unwrap().finite().unwrap()
    }

    /// Values on random top simplices, faces taking the minimum over their
    /// cofaces, with at most [`MAX_SUPPORT`] supported simplices.
    fn closure(&mut self, vertices: &[Vertex], tops: usize, max_size: usize) -> FilteredSet {
        loop {
            let mut values: BTreeMap<Simplex, Rational> = BTreeMap::new();
            for _ in 0..tops {
                let size = self.rng.gen_range(1..=max_size.min(vertices.len()));
                let chosen: Vec<Vertex> = vertices.choose_multiple(&mut self.rng, size).cloned().collect();
                let FiltValue::Finite(v) = self.value() else { continue };
                for face in Simplex::new(chosen).unwrap().faces() {
                    let e = values.entry(face).or_insert(v);
                    *e = (*e).min(v);
                }
            }
            if values.len() <= MAX_SUPPORT {
                let raw = values.into_iter().map(|(s, v)| (s, FiltValue::Finite(v)));
                return FilteredSet::validate(raw, vertices.iter().cloned()).expect("closure is a filtration");
            }
        }
    }

    /// A filtration on 3 to 5 vertices with simplices of dimension at most 3.
    pub fn filtration(&mut self) -> FilteredSet {
        let n = self.rng.gen_range(3..=5);
        let vertices: Vec<Vertex> = NAMES[..n].iter().map(|s| Vertex::new(*s)).collect();
        let tops = self.rng.gen_range(1..=4);
        self.closure(&vertices, tops, 4)
    }

    /// A filtered subset of `x`: random simplices of `x` closed downward,
    /// with values at least those of `x`.
    pub fn subset(&mut self, x: &FilteredSet) -> FilteredSet {
        let support: Vec<(Simplex, Rational)> = x.support().map(|(s, v)| (s.clone(), *v)).collect();
        if support.is_empty() {
            return FilteredSet::empty();
        }
        let mut values: BTreeMap<Simplex, Rational> = BTreeMap::new();
        let picks = self.rng.gen_range(0..=3);
        for _ in 0..picks {
            let (top, floor) = support.choose(&mut self.rng).unwrap().clone();
            let v = if self.rng.gen_bool(0.5) {
                floor
            } else {
                floor.max(self.finite_value())
            };
            for face in top.faces() {
                let e = values.entry(face).or_insert(v);
                *e = (*e).min(v);
            }
        }
        let raw = values.into_iter().map(|(s, v)| (s, FiltValue::Finite(v)));
        FilteredSet::from_simplices(raw).expect("closure is a filtration")
    }

    pub fn pair(&mut self) -> RelativeFilteredPair {
        let x = self.filtration();
        let a = self.subset(&x);
        RelativeFilteredPair::new(x, a).expect("subset values dominate")
    }

    /// `X ⊇ A ⊇ B` as filtered sets.
    pub fn triple(&mut self) -> (FilteredSet, FilteredSet, FilteredSet) {
        let x = self.filtration();
        let a = self.subset(&x);
        let b = self.subset(&a);
        (x, a, b)
    }

    /// Two filtered sets over a common vertex pool whose union has at most
    /// [`MAX_SUPPORT`] simplices.
    pub fn cover(&mut self) -> (FilteredSet, FilteredSet) {
        loop {
            let n = self.rng.gen_range(3..=5);
            let vertices: Vec<Vertex> = NAMES[..n].iter().map(|s| Vertex::new(*s)).collect();
            let (t1, t2) = (self.rng.gen_range(1..=3), self.rng.gen_range(1..=3));
            let x1 = self.closure(&vertices, t1, 3);
            let x2 = self.closure(&vertices, t2, 3);
            if x1.union(&x2).support_len() <= MAX_SUPPORT {
                return (x1, x2);
            }
        }
    }

    /// A random vertex map that passes validation, if one is found within a
    /// bounded number of draws.
    pub fn map(&mut self, domain: &RelativeFilteredPair, codomain: &RelativeFilteredPair) -> Option<PreservingMap> {
        let sources: Vec<Vertex> = domain.total().vertex_set().iter().cloned().collect();
        let targets: Vec<Vertex> = codomain.total().vertex_set().iter().cloned().collect();
        if targets.is_empty() {
            return None;
        }
        for attempt in 0..64 {
            let vm: BTreeMap<Vertex, Vertex> = sources
                .iter()
                .map(|v| {
                    // early draws stay close to the identity
                    let keep = attempt < 32 && targets.contains(v) && self.rng.gen_bool(0.6);
                    (
                        v.clone(),
                        if keep {
                            v.clone()
                        } else {
                            targets.choose(&mut self.rng).unwrap().clone()
                        },
                    )
                })
                .collect();
            if let Ok(f) = PreservingMap::validate(vm, domain.clone(), codomain.clone()) {
                return Some(f);
            }
        }
        None
    }

    /// A map together with a second one contiguous to it everywhere.
    pub fn contiguous_pair(&mut self, pair: &RelativeFilteredPair) -> Option<(PreservingMap, PreservingMap)> {
        let f = self.map(pair, pair)?;
        for _ in 0..32 {
            let Some(g) = self.map(pair, pair) else { continue };
            if are_contiguous_everywhere(&f, &g).unwrap_or(false) {
                return Some((f, g));
            }
        }
        Some((f.clone(), f))
    }

    /// An excision configuration built from two random filtered sets on a
    /// common vertex pool.
    pub fn excision(&mut self) -> ExcisionConfig {
        let (xp, a) = self.cover();
        let large = RelativeFilteredPair::new(xp.union(&a), a.clone()).expect("union lies below its parts");
        let small =
            RelativeFilteredPair::new(xp.clone(), xp.intersection(&a)).expect("intersection lies above its parts");
        ExcisionConfig { small, large }
    }

    /// A random total order on the vertices of `x`.
    pub fn order(&mut self, x: &FilteredSet) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = x.vertex_set().iter().cloned().collect();
        vs.shuffle(&mut self.rng);
        vs
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }
}
