//! Barcodes by the standard column reduction, used as an independent check
//! on the interval-indexed groups.
//!
//! A relative pair is turned into a single filtration by coning off the
//! subset: a new vertex `w` is born before everything else and every simplex
//! `σ` of `A` gets a cone cell `w * σ` at `F_A(σ)`. The reduced homology of
//! `K^ε ∪ w * A^ε` is `H(K^ε, A^ε)` at every level, naturally in `ε`, so bars
//! of the cone filtration, minus the one infinite bar of `w`, count the
//! persistent relative Betti numbers. Nothing here touches the chain spaces
//! of the direct computation.

use std::collections::{BTreeMap, HashMap};

use crate::filtered::{Interval, RelativeFilteredPair};
use crate::linalg::Field;
use crate::simplex::Simplex;
use crate::value::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Bar {
    pub degree: usize,
    pub birth: Rational,
    /// `None` for an essential class.
    pub death: Option<Rational>,
}

impl Bar {
    /// Born by `lo` and still alive at `hi`.
    pub fn spans(&self, interval: &Interval) -> bool {
        self.birth <= interval.lo() && self.death.is_none_or(|d| d > interval.hi())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Cell {
    Apex,
    Base(Simplex),
    Cone(Simplex),
}

impl Cell {
    fn dim(&self) -> usize {
        match self {
            Cell::Apex => 0,
            Cell::Base(s) => s.dim(),
            Cell::Cone(s) => s.dim() + 1,
        }
    }

    /// Faces with signs, the apex written first in a cone cell.
    fn boundary(&self) -> Vec<(Cell, i64)> {
        match self {
            Cell::Apex => Vec::new(),
            Cell::Base(s) => s
                .facets()
                .map(|(i, f)| (Cell::Base(f), if i % 2 == 0 { 1 } else { -1 }))
                .collect(),
            Cell::Cone(s) => {
                let mut out = vec![(Cell::Base(s.clone()), 1)];
                if s.len() == 1 {
                    out.push((Cell::Apex, -1));
                } else {
                    out.extend(
                        s.facets()
                            .map(|(i, f)| (Cell::Cone(f), if i % 2 == 0 { -1 } else { 1 })),
                    );
                }
                out
            }
        }
    }
}

/// Barcode of the cone filtration of `pair`, without the apex bar.
pub fn barcode(field: Field, pair: &RelativeFilteredPair) -> Vec<Bar> {
    let Some(min) = pair.critical_values().first().copied() else {
        return Vec::new();
    };
    let apex_value = min - Rational::from_integer(1);
    let mut cells: Vec<(Rational, Cell)> = vec![(apex_value, Cell::Apex)];
    cells.extend(pair.total().support().map(|(s, v)| (*v, Cell::Base(s.clone()))));
    cells.extend(pair.sub().support().map(|(s, v)| (*v, Cell::Cone(s.clone()))));
    cells.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.dim().cmp(&b.1.dim())).then(a.1.cmp(&b.1)));
    let position: HashMap<&Cell, usize> = cells.iter().enumerate().map(|(i, (_, c))| (c, i)).collect();

    let mut columns: Vec<BTreeMap<usize, u32>> = Vec::with_capacity(cells.len());
    let mut owner: HashMap<usize, usize> = HashMap::new();
    let mut killed = vec![false; cells.len()];
    let mut bars = Vec::new();
    for (j, (value, cell)) in cells.iter().enumerate() {
        let mut col: BTreeMap<usize, u32> = BTreeMap::new();
        for (face, sign) in cell.boundary() {
            let i = position[&face];
            let e = col.entry(i).or_insert(0);
            *e = field.add(*e, field.from_i64(sign));
        }
        col.retain(|_, c| *c != 0);
        while let Some((&low, &c)) = col.iter().next_back() {
            let Some(&k) = owner.get(&low) else { break };
            let pivot = columns[k][&low];
            let factor = field.mul(c, field.inv(pivot));
            for (&i, &x) in &columns[k] {
                let e = col.entry(i).or_insert(0);
                *e = field.sub(*e, field.mul(factor, x));
            }
            col.retain(|_, c| *c != 0);
        }
        if let Some((&low, _)) = col.iter().next_back() {
            owner.insert(low, j);
            killed[low] = true;
            let (birth, born) = &cells[low];
            if born != &Cell::Apex {
                bars.push(Bar {
                    degree: born.dim(),
                    birth: *birth,
                    death: Some(*value),
                });
            }
        }
        columns.push(col);
    }
    for (j, (value, cell)) in cells.iter().enumerate() {
        if columns[j].is_empty() && !killed[j] && cell != &Cell::Apex {
            bars.push(Bar {
                degree: cell.dim(),
                birth: *value,
                death: None,
            });
        }
    }
    bars.sort();
    bars
}

/// Number of bars of degree `n` spanning the interval.
pub fn persistent_betti(bars: &[Bar], n: usize, interval: &Interval) -> usize {
    bars.iter().filter(|b| b.degree == n && b.spans(interval)).count()
}
