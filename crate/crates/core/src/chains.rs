//! Relative chain spaces and the matrices between them.
//!
//! `C_n(K^ε, A^ε)` is represented by the simplices of `K^ε` that are not in
//! `A^ε`, in canonical order. Quotienting by `A^ε` is then coordinate deletion.

use std::collections::HashMap;

use crate::filtered::{Interval, RelativeFilteredPair};
use crate::linalg::{Field, Matrix};
use crate::maps::PreservingMap;
use crate::simplex::{sort_sign, Simplex};
use crate::value::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSpace {
    degree: usize,
    level: Rational,
    basis: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
}

impl ChainSpace {
    pub fn new(pair: &RelativeFilteredPair, degree: usize, level: Rational) -> Self {
        let basis: Vec<Simplex> = pair
            .total()
            .simplices_at(degree, level)
            .into_iter()
            .filter(|s| !pair.sub().contains_at(s, level))
            .collect();
        Self::from_basis(degree, level, basis)
    }

    pub(crate) fn from_basis(degree: usize, level: Rational, basis: Vec<Simplex>) -> Self {
        let index = basis.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        ChainSpace {
            degree,
            level,
            basis,
            index,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn level(&self) -> Rational {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Simplex] {
        &self.basis
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Coordinate vector of a formal sum; terms outside the basis are dropped.
    pub fn vector(&self, field: Field, terms: &[(Simplex, i64)]) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        for (s, c) in terms {
            if let Some(i) = self.index_of(s) {
                v[i] = field.add(v[i], field.from_i64(*c));
            }
        }
        v
    }

    /// Readable form of a chain, e.g. `{a,b} - {b,c}`.
    pub fn format_chain(&self, field: Field, v: &[u32]) -> String {
        let mut out = String::new();
        for (s, c) in self.basis.iter().zip(v) {
            let c = field.signed(*c);
            if c == 0 {
                continue;
            }
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            if c.abs() != 1 {
                out.push_str(&format!("{}", c.abs()));
            }
            out.push_str(&s.to_string());
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// `∂_n` on `C_n(K^ε, A^ε)`; faces inside `A^ε` project to zero.
pub fn boundary_matrix(field: Field, pair: &RelativeFilteredPair, n: usize, level: Rational) -> Matrix {
    let src = ChainSpace::new(pair, n, level);
    if n == 0 {
        return Matrix::zeros(field, 0, src.dim());
    }
    let tgt = ChainSpace::new(pair, n - 1, level);
    boundary_between(field, &src, &tgt)
}

pub(crate) fn boundary_between(field: Field, src: &ChainSpace, tgt: &ChainSpace) -> Matrix {
    let mut m = Matrix::zeros(field, tgt.dim(), src.dim());
    for (j, s) in src.basis().iter().enumerate() {
        for (i, face) in s.facets() {
            if let Some(r) = tgt.index_of(&face) {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                m.set(r, j, field.from_i64(sign));
            }
        }
    }
    m
}

/// `k_n^I`: level `ε` chains into level `ε'` chains.
pub fn inclusion_matrix(field: Field, pair: &RelativeFilteredPair, n: usize, interval: &Interval) -> Matrix {
    let src = ChainSpace::new(pair, n, interval.lo());
    let tgt = ChainSpace::new(pair, n, interval.hi());
    inclusion_between(field, &src, &tgt)
}

pub(crate) fn inclusion_between(field: Field, src: &ChainSpace, tgt: &ChainSpace) -> Matrix {
    let mut m = Matrix::zeros(field, tgt.dim(), src.dim());
    for (j, s) in src.basis().iter().enumerate() {
        if let Some(i) = tgt.index_of(s) {
            m.set(i, j, 1);
        }
    }
    m
}

/// `f_#` on `n`-chains at `level`.
pub fn chain_map_matrix(field: Field, f: &PreservingMap, n: usize, level: Rational) -> Matrix {
    let src = ChainSpace::new(f.domain(), n, level);
    let tgt = ChainSpace::new(f.codomain(), n, level);
    chain_map_between(field, f, &src, &tgt)
}

pub(crate) fn chain_map_between(field: Field, f: &PreservingMap, src: &ChainSpace, tgt: &ChainSpace) -> Matrix {
    let mut m = Matrix::zeros(field, tgt.dim(), src.dim());
    for (j, s) in src.basis().iter().enumerate() {
        let images = f.image_sequence(s);
        let Some(sign) = sort_sign(&images) else {
            continue;
        };
        let image = Simplex::new(images).unwrap();
        if let Some(i) = tgt.index_of(&image) {
            m.set(i, j, field.from_i64(sign as i64));
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtered::standard_simplex;
    use crate::filtered::tests::{fs, s};
    use crate::simplex::Vertex;
    use crate::testing::arb_filtered;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn edge_boundary() {
        let f = Field::new(3).unwrap();
        let pair = RelativeFilteredPair::absolute(fs(&[(&["a"], 0), (&["b"], 0), (&["a", "b"], 0)]));
        let d = boundary_matrix(f, &pair, 1, r(0));
        assert_eq!(d.column(0), vec![f.from_i64(-1), 1]);
        assert_eq!(boundary_matrix(f, &pair, 0, r(0)).rows(), 0);
    }

    #[test]
    fn triangle_face_over_gf2() {
        let x = standard_simplex(2, r(0));
        let pair = RelativeFilteredPair::absolute(x);
        let d = boundary_matrix(Field::GF2, &pair, 2, r(0));
        assert_eq!(d.column(0), vec![1, 1, 1]);
    }

    #[test]
    fn sub_absorbs_at_upper_level() {
        let x = fs(&[(&["a"], 0), (&["b"], 0)]);
        let a = fs(&[(&["a"], 1)]);
        let pair = RelativeFilteredPair::new(x, a).unwrap();
        let k = inclusion_matrix(Field::GF2, &pair, 0, &Interval::ints(0, 1).unwrap());
        assert_eq!(k.cols(), 2);
        assert_eq!(k.rows(), 1);
        assert_eq!(k.column(0), vec![0]);
        assert_eq!(k.column(1), vec![1]);
    }

    #[test]
    fn swap_sign_depends_on_characteristic() {
        let x = fs(&[(&["a"], 0), (&["b"], 0), (&["a", "b"], 0)]);
        let px = RelativeFilteredPair::absolute(x);
        let swap: BTreeMap<Vertex, Vertex> = [("a", "b"), ("b", "a")]
            .into_iter()
            .map(|(u, v)| (Vertex::new(u), Vertex::new(v)))
            .collect();
        let f = PreservingMap::validate(swap, px.clone(), px).unwrap();
        assert_eq!(chain_map_matrix(Field::GF2, &f, 1, r(0)).get(0, 0), 1);
        assert_eq!(chain_map_matrix(Field::new(3).unwrap(), &f, 1, r(0)).get(0, 0), 2);
    }

    #[test]
    fn collapsed_edge_maps_to_zero() {
        let x = fs(&[(&["a"], 0), (&["b"], 0), (&["a", "b"], 0)]);
        let px = RelativeFilteredPair::absolute(x);
        let m: BTreeMap<Vertex, Vertex> = [("a", "a"), ("b", "a")]
            .into_iter()
            .map(|(u, v)| (Vertex::new(u), Vertex::new(v)))
            .collect();
        let f = PreservingMap::validate(m, px.clone(), px).unwrap();
        assert!(chain_map_matrix(Field::GF2, &f, 1, r(0)).is_zero());
    }

    proptest! {
        #[test]
        fn boundary_squares_to_zero(x in arb_filtered(), level in 0i64..4, p in prop::sample::select(vec![2u32, 3, 5])) {
            let f = Field::new(p).unwrap();
            let a = x.skeleton(0);
            let pair = RelativeFilteredPair::new(x.clone(), a).unwrap();
            for pr in [RelativeFilteredPair::absolute(x), pair] {
                for n in 1..4 {
                    let d1 = boundary_matrix(f, &pr, n, r(level));
                    let d2 = boundary_matrix(f, &pr, n + 1, r(level));
                    prop_assert!(d1.mul(&d2).unwrap().is_zero());
                }
            }
        }

        #[test]
        fn inclusion_is_natural(x in arb_filtered(), lo in 0i64..4, span in 0i64..3) {
            let f = Field::new(3).unwrap();
            let pr = RelativeFilteredPair::absolute(x);
            let i = Interval::ints(lo, lo + span).unwrap();
            for n in 1..4 {
                let lhs = inclusion_matrix(f, &pr, n - 1, &i).mul(&boundary_matrix(f, &pr, n, i.lo())).unwrap();
                let rhs = boundary_matrix(f, &pr, n, i.hi()).mul(&inclusion_matrix(f, &pr, n, &i)).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn chain_maps_commute_with_boundary(x in arb_filtered(), level in 0i64..4, target in 0usize..5) {
            // fold the highest vertex onto another one when that stays preserving
            let f = Field::new(5).unwrap();
            let px = RelativeFilteredPair::absolute(x.clone());
            let vs: Vec<Vertex> = x.vertex_set().iter().cloned().collect();
            let last = vs.last().unwrap().clone();
            let to = vs[target % vs.len()].clone();
            let m: BTreeMap<Vertex, Vertex> = vs.iter().map(|v| (v.clone(), if *v == last { to.clone() } else { v.clone() })).collect();
            if let Ok(map) = PreservingMap::validate(m, px.clone(), px) {
                for n in 1..4 {
                    let lhs = chain_map_matrix(f, &map, n - 1, r(level)).mul(&boundary_matrix(f, map.domain(), n, r(level))).unwrap();
                    let rhs = boundary_matrix(f, map.codomain(), n, r(level)).mul(&chain_map_matrix(f, &map, n, r(level))).unwrap();
                    prop_assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn chain_formatting() {
        let f = Field::new(3).unwrap();
        let pair = RelativeFilteredPair::absolute(fs(&[(&["a"], 0), (&["b"], 0)]));
        let c = ChainSpace::new(&pair, 0, r(0));
        let v = c.vector(f, &[(s(&["a"]), 1), (s(&["b"]), -1)]);
        assert_eq!(c.format_chain(f, &v), "{a} - {b}");
        assert_eq!(c.format_chain(f, &[0, 0]), "0");
    }
}
