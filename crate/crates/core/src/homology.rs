//! Interval-indexed homology groups and the maps between them.
//!
//! For `I = [ε, ε']` the group is `k(Z_n^ε) / (B_n^{ε'} ∩ k(Z_n^ε))`, computed
//! inside the level-`ε'` chain space. A group carries representative cycles
//! for a basis; maps are matrices in those bases.

use std::fmt;

use rayon::prelude::*;

use crate::chains::{boundary_between, chain_map_between, inclusion_between, ChainSpace};
use crate::error::{Error, Result};
use crate::filtered::{point, FilteredSet, Interval, RelativeFilteredPair};
use crate::linalg::{Field, Matrix, Subspace};
use crate::maps::PreservingMap;
use crate::simplex::{Simplex, Vertex};
use crate::value::Rational;

#[derive(Debug, Clone)]
pub struct HomologyGroup {
    field: Field,
    pair: RelativeFilteredPair,
    degree: isize,
    interval: Interval,
    space: ChainSpace,
    cycles_image: Subspace,
    boundaries: Subspace,
    reps: Vec<Vec<u32>>,
}

impl HomologyGroup {
    fn zero(field: Field, pair: &RelativeFilteredPair, degree: isize, interval: &Interval) -> Self {
        HomologyGroup {
            field,
            pair: pair.clone(),
            degree,
            interval: *interval,
            space: ChainSpace::from_basis(0, interval.hi(), Vec::new()),
            cycles_image: Subspace::zero(field, 0),
            boundaries: Subspace::zero(field, 0),
            reps: Vec::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn pair(&self) -> &RelativeFilteredPair {
        &self.pair
    }

    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn interval(&self) -> &Interval {
        &self.interval
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Level-`ε'` chain space the representatives live in.
    pub fn space(&self) -> &ChainSpace {
        &self.space
    }

    pub fn reps(&self) -> &[Vec<u32>] {
        &self.reps
    }

    /// `k(Z_n^ε)` inside the level-`ε'` chains.
    pub fn cycles_image(&self) -> &Subspace {
        &self.cycles_image
    }

    /// `B_n^{ε'}`.
    pub fn boundaries(&self) -> &Subspace {
        &self.boundaries
    }

    /// Coordinates of the class of `v` over the representatives. Fails when
    /// `v` is not in `k(Z_n^ε) + B_n^{ε'}`.
    pub fn coords(&self, v: &[u32]) -> Result<Vec<u32>> {
        if v.len() != self.space.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.space.dim(),
                found: v.len(),
            });
        }
        Subspace::coords_in_quotient(v, &self.reps, &self.boundaries).ok_or(Error::ClassNotInTarget)
    }

    /// Chain representing the class with the given coordinates.
    pub fn chain_of(&self, coords: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut v = vec![0; self.space.dim()];
        for (c, rep) in coords.iter().zip(&self.reps) {
            for (x, r) in v.iter_mut().zip(rep) {
                *x = f.add(*x, f.mul(*c, *r));
            }
        }
        v
    }

    /// Same group with a different choice of representatives; `reps` must
    /// lie in `k(Z_n^ε)` and form a basis modulo boundaries.
    pub fn with_reps(&self, reps: Vec<Vec<u32>>) -> Result<Self> {
        if reps.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: reps.len(),
            });
        }
        let mut acc = self.boundaries.intersect(&self.cycles_image);
        for r in &reps {
            if !self.cycles_image.contains(r) || acc.contains(r) {
                return Err(Error::ClassNotInTarget);
            }
            acc = acc.insert(r);
        }
        Ok(HomologyGroup { reps, ..self.clone() })
    }

    /// Subgroup spanned by the classes whose coordinates lie in `coords`.
    pub fn subgroup(&self, coords: &Subspace) -> Self {
        let reps = coords.basis().iter().map(|c| self.chain_of(c)).collect();
        HomologyGroup { reps, ..self.clone() }
    }

    pub fn format_reps(&self) -> Vec<String> {
        self.reps
            .iter()
            .map(|r| self.space.format_chain(self.field, r))
            .collect()
    }
}

/// `H_n^I(X, A)`.
pub fn homology(field: Field, pair: &RelativeFilteredPair, n: isize, interval: &Interval) -> HomologyGroup {
    if n < 0 {
        return HomologyGroup::zero(field, pair, n, interval);
    }
    let n = n as usize;
    let lo = ChainSpace::new(pair, n, interval.lo());
    let hi = ChainSpace::new(pair, n, interval.hi());
    let cycles = if n == 0 {
        Subspace::full(field, lo.dim())
    } else {
        let below = ChainSpace::new(pair, n - 1, interval.lo());
        Subspace::kernel(&boundary_between(field, &lo, &below))
    };
    let cycles_image = cycles.map(&inclusion_between(field, &lo, &hi));
    let above = ChainSpace::new(pair, n + 1, interval.hi());
    let boundaries = Subspace::image(&boundary_between(field, &above, &hi));
    let dead = cycles_image.intersect(&boundaries);
    let reps = cycles_image.complement(&dead).expect("intersection is contained");
    HomologyGroup {
        field,
        pair: pair.clone(),
        degree: n as isize,
        interval: *interval,
        space: hi,
        cycles_image,
        boundaries,
        reps,
    }
}

/// All degrees `0..=n_max`.
pub fn homology_upto(
    field: Field,
    pair: &RelativeFilteredPair,
    interval: &Interval,
    n_max: usize,
) -> Vec<HomologyGroup> {
    (0..=n_max as isize)
        .map(|n| homology(field, pair, n, interval))
        .collect()
}

/// Homomorphism between computed groups, as a matrix in their rep bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        LinearMap::new(Matrix::identity(field, n))
    }

    pub fn zero(field: Field, source_dim: usize, target_dim: usize) -> Self {
        LinearMap::new(Matrix::zeros(field, target_dim, source_dim))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target_dim()
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        self.matrix.apply(v)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> Result<LinearMap> {
        Ok(LinearMap::new(self.matrix.mul(&inner.matrix)?))
    }

    pub fn inverse(&self) -> Result<LinearMap> {
        self.matrix.inverse().map(LinearMap::new).ok_or(Error::NotInvertible)
    }

    pub fn negate(&self) -> LinearMap {
        let f = self.matrix.field();
        LinearMap::new(self.matrix.scale(f.neg(1)))
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::kernel(&self.matrix)
    }

    pub fn image(&self) -> Subspace {
        Subspace::image(&self.matrix)
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

/// `f_*` between already computed groups of its domain and codomain.
pub fn induced_between(f: &PreservingMap, src: &HomologyGroup, tgt: &HomologyGroup) -> Result<LinearMap> {
    let field = src.field;
    if src.degree < 0 {
        return Ok(LinearMap::zero(field, src.dim(), tgt.dim()));
    }
    let chain = chain_map_between(field, f, &src.space, &tgt.space);
    let cols = src
        .reps
        .iter()
        .map(|r| tgt.coords(&chain.apply(r)))
        .collect::<Result<Vec<_>>>()?;
    Ok(LinearMap::new(Matrix::from_columns(field, tgt.dim(), &cols)))
}

/// `f_*^I` in degree `n`.
pub fn induced_map(field: Field, f: &PreservingMap, n: isize, interval: &Interval) -> Result<LinearMap> {
    let src = homology(field, f.domain(), n, interval);
    let tgt = homology(field, f.codomain(), n, interval);
    induced_between(f, &src, &tgt)
}

/// `∂: H_n(X, A) -> H_{n-1}(A)` between computed groups; `tgt` must be a
/// group of the pair `(A, ∅)`.
pub fn connecting_between(src: &HomologyGroup, tgt: &HomologyGroup) -> Result<LinearMap> {
    let field = src.field;
    if src.degree <= 0 || src.dim() == 0 {
        return Ok(LinearMap::zero(field, src.dim(), tgt.dim()));
    }
    let n = src.degree as usize;
    let level = src.interval.hi();
    let absolute = RelativeFilteredPair::absolute(src.pair.total().clone());
    let top = ChainSpace::new(&absolute, n, level);
    let below = ChainSpace::new(&absolute, n - 1, level);
    let d = boundary_between(field, &top, &below);
    let mut cols = Vec::with_capacity(src.dim());
    for rep in &src.reps {
        let mut lifted = vec![0; top.dim()];
        for (s, c) in src.space.basis().iter().zip(rep) {
            lifted[top.index_of(s).expect("relative basis lies in the total complex")] = *c;
        }
        let b = d.apply(&lifted);
        let mut restricted = vec![0; tgt.space.dim()];
        for (s, c) in below.basis().iter().zip(&b) {
            match tgt.space.index_of(s) {
                Some(i) => restricted[i] = *c,
                None => debug_assert_eq!(*c, 0, "boundary of a relative cycle leaves the subcomplex"),
            }
        }
        cols.push(
            tgt.coords(&restricted)
                .map_err(|_| Error::NotRepresentableAtLowerEndpoint)?,
        );
    }
    Ok(LinearMap::new(Matrix::from_columns(field, tgt.dim(), &cols)))
}

/// The connecting homomorphism `H_n^I(X, A) -> H_{n-1}^I(A)`.
pub fn connecting(field: Field, pair: &RelativeFilteredPair, n: isize, interval: &Interval) -> Result<LinearMap> {
    let src = homology(field, pair, n, interval);
    let tgt = homology(
        field,
        &RelativeFilteredPair::absolute(pair.sub().clone()),
        n - 1,
        interval,
    );
    connecting_between(&src, &tgt)
}

/// The constant map from `x` to the one-point set at its minimum value.
pub fn augmentation(x: &FilteredSet) -> Result<PreservingMap> {
    let alpha = x.min_value().ok_or(Error::EmptySet)?;
    let p = RelativeFilteredPair::absolute(point(alpha));
    let target = p.total().vertex_set().iter().next().unwrap().clone();
    PreservingMap::constant(&RelativeFilteredPair::absolute(x.clone()), &p, &target)
}

/// Reduced homology: the kernel of the augmentation in degree 0, ordinary
/// homology elsewhere. An empty set has all groups zero.
pub fn reduced_homology(field: Field, x: &FilteredSet, n: isize, interval: &Interval) -> HomologyGroup {
    let pair = RelativeFilteredPair::absolute(x.clone());
    let h = homology(field, &pair, n, interval);
    if n != 0 || h.dim() == 0 {
        return h;
    }
    let aug = augmentation(x).expect("nonempty set has a minimum");
    let tgt = homology(field, aug.codomain(), 0, interval);
    let m = induced_between(&aug, &h, &tgt).expect("constant map is well defined on classes");
    h.subgroup(&m.kernel())
}

/// Reduced homology of a pair: relative homology when the subset has
/// vertices, the reduced absolute group otherwise.
pub fn reduced_pair_homology(
    field: Field,
    pair: &RelativeFilteredPair,
    n: isize,
    interval: &Interval,
) -> HomologyGroup {
    if pair.is_absolute() {
        reduced_homology(field, pair.total(), n, interval)
    } else {
        homology(field, pair, n, interval)
    }
}

/// `G^I` for a point born at `alpha`: one-dimensional iff `ε >= alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoefficientGroup {
    pub interval: Interval,
    pub birth: Rational,
    pub dim: usize,
}

pub fn coefficient_group(field: Field, alpha: Rational, interval: &Interval) -> CoefficientGroup {
    let h = homology(field, &RelativeFilteredPair::absolute(point(alpha)), 0, interval);
    CoefficientGroup {
        interval: *interval,
        birth: alpha,
        dim: h.dim(),
    }
}

/// Coordinates in `H_0^I(X)` of the class `(g x)_X`.
pub fn point_class(field: Field, g: u32, x: &Vertex, set: &FilteredSet, interval: &Interval) -> Result<Vec<u32>> {
    let h = homology(field, &RelativeFilteredPair::absolute(set.clone()), 0, interval);
    point_class_in(g, x, &h)
}

fn point_class_in(g: u32, x: &Vertex, h: &HomologyGroup) -> Result<Vec<u32>> {
    let set = h.pair.total();
    let alpha = match set.value(&Simplex::vertex(x.clone())).finite() {
        Some(a) if a <= h.interval.lo() => a,
        _ if !set.contains_vertex(x) => return Err(Error::UnknownVertex(x.clone())),
        _ => return Err(Error::VertexNotPresent(x.clone())),
    };
    let p = RelativeFilteredPair::absolute(point(alpha));
    let v0 = p.total().vertex_set().iter().next().unwrap().clone();
    let inc = PreservingMap::validate([(v0, x.clone())].into_iter().collect(), p.clone(), h.pair.clone())?;
    let hp = homology(h.field, &p, 0, &h.interval);
    let m = induced_between(&inc, &hp, h)?;
    let g = g % h.field.characteristic();
    Ok(m.apply(&[g]))
}

/// Splitting `H_0 = H̃_0 ⊕ (G x)`: returns `(dim H̃_0, 1)` after checking the
/// dimensions add up and the point class meets the reduced group trivially.
pub fn h0_decomposition(field: Field, set: &FilteredSet, x: &Vertex, interval: &Interval) -> Result<(usize, usize)> {
    let h = homology(field, &RelativeFilteredPair::absolute(set.clone()), 0, interval);
    let class = point_class_in(1, x, &h)?;
    let aug = augmentation(set)?;
    let hp = homology(field, aug.codomain(), 0, interval);
    let reduced = induced_between(&aug, &h, &hp)?.kernel();
    let line = Subspace::span(field, h.dim(), &[class]);
    if line.dim() != 1 || !reduced.intersect(&line).is_zero() || reduced.dim() + 1 != h.dim() {
        return Err(Error::HypothesisViolated("point class does not split H_0".into()));
    }
    Ok((reduced.dim(), 1))
}

/// Persistent Betti numbers over all pairs of critical values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiGrid {
    pub degree: isize,
    pub critical: Vec<Rational>,
    /// `(interval, dim)` in row-major order over `(lo, hi)` with `lo <= hi`.
    pub cells: Vec<(Interval, usize)>,
}

impl BettiGrid {
    pub fn get(&self, lo: Rational, hi: Rational) -> Option<usize> {
        self.cells
            .iter()
            .find(|(i, _)| i.lo() == lo && i.hi() == hi)
            .map(|(_, d)| *d)
    }
}

pub fn betti_grid(field: Field, pair: &RelativeFilteredPair, n: isize) -> BettiGrid {
    let critical = pair.critical_values();
    let cells = Interval::all_over(&critical)
        .into_par_iter()
        .map(|i| (i, homology(field, pair, n, &i).dim()))
        .collect();
    BettiGrid {
        degree: n,
        critical,
        cells,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtered::tests::{fs, s, triangle_boundary};
    use crate::filtered::{standard_boundary, standard_simplex};
    use crate::value::FiltValue;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn iv(lo: i64, hi: i64) -> Interval {
        Interval::ints(lo, hi).unwrap()
    }

    fn abs(x: FilteredSet) -> RelativeFilteredPair {
        RelativeFilteredPair::absolute(x)
    }

    const F2: Field = Field::GF2;

    #[test]
    fn point_dimension() {
        let p = abs(point(r(1)));
        assert_eq!(homology(F2, &p, 0, &iv(1, 3)).dim(), 1);
        assert_eq!(homology(F2, &p, 0, &iv(0, 3)).dim(), 0);
        assert_eq!(homology(F2, &p, 1, &iv(1, 3)).dim(), 0);
    }

    #[test]
    fn pair_with_itself_is_zero() {
        let x = triangle_boundary();
        let pair = RelativeFilteredPair::new(x.clone(), x).unwrap();
        for n in 0..3 {
            for i in [iv(0, 0), iv(0, 1), iv(1, 2)] {
                assert_eq!(homology(F2, &pair, n, &i).dim(), 0);
            }
        }
    }

    /// Rank of `H(K^ε) -> H(K^ε')` by brute force over GF(2): enumerate all
    /// chains, keep cycles, push forward, and count classes modulo boundaries.
    fn brute_rank(x: &FilteredSet, n: usize, i: &Interval) -> usize {
        let at = |level: Rational, d: usize| x.simplices_at(d, level);
        let lo = at(i.lo(), n);
        let hi = at(i.hi(), n);
        let hi_above = at(i.hi(), n + 1);
        let boundary_of = |chain: &[Simplex]| -> Vec<Simplex> {
            let mut counts: BTreeMap<Simplex, u32> = BTreeMap::new();
            for s in chain {
                for (_, face) in s.facets() {
                    *counts.entry(face).or_default() += 1;
                }
            }
            counts.into_iter().filter(|(_, c)| c % 2 == 1).map(|(s, _)| s).collect()
        };
        let subsets = |basis: &[Simplex]| -> Vec<Vec<Simplex>> {
            (0u32..(1 << basis.len()))
                .map(|m| {
                    (0..basis.len())
                        .filter(|k| m & (1 << k) != 0)
                        .map(|k| basis[k].clone())
                        .collect()
                })
                .collect()
        };
        let encode = |chain: &[Simplex]| -> u64 {
            chain
                .iter()
                .fold(0, |acc, s| acc | 1 << hi.iter().position(|t| t == s).unwrap())
        };
        let cycles: Vec<u64> = subsets(&lo)
            .into_iter()
            .filter(|c| n == 0 || boundary_of(c).is_empty())
            .map(|c| encode(&c))
            .collect();
        let bounds: std::collections::BTreeSet<u64> =
            subsets(&hi_above).iter().map(|c| encode(&boundary_of(c))).collect();
        let mut classes = std::collections::BTreeSet::new();
        for z in cycles {
            let class: std::collections::BTreeSet<u64> = bounds.iter().map(|b| b ^ z).collect();
            classes.insert(class);
        }
        classes.len().trailing_zeros() as usize
    }

    #[test]
    fn triangle_boundary_table() {
        let x = abs(triangle_boundary());
        assert_eq!(homology(F2, &x, 1, &iv(1, 2)).dim(), 1);
        assert_eq!(homology(F2, &x, 1, &iv(0, 1)).dim(), 0);
        assert_eq!(homology(F2, &x, 0, &iv(0, 1)).dim(), 1);
        for n in 0..2 {
            for i in [iv(0, 0), iv(0, 1), iv(1, 1), iv(1, 2), iv(0, 2)] {
                assert_eq!(homology(F2, &x, n, &i).dim(), brute_rank(x.total(), n as usize, &i));
            }
        }
    }

    #[test]
    fn identity_induces_identity() {
        let x = abs(triangle_boundary());
        let id = PreservingMap::identity(&x);
        for n in 0..3 {
            let m = induced_map(F2, &id, n, &iv(1, 2)).unwrap();
            assert_eq!(m, LinearMap::identity(F2, m.source_dim()));
        }
    }

    #[test]
    fn connecting_on_edge_pair() {
        let f = Field::new(3).unwrap();
        let pair = RelativeFilteredPair::new(standard_simplex(1, r(0)), standard_boundary(1, r(0))).unwrap();
        let i = iv(0, 1);
        let d = connecting(f, &pair, 1, &i).unwrap();
        assert_eq!(d.source_dim(), 1);
        assert_eq!(d.target_dim(), 2);
        let tgt = homology(f, &abs(standard_boundary(1, r(0))), 0, &i);
        let image = tgt.chain_of(&d.apply(&[1]));
        // a multiple of v1 - v0
        assert_eq!(f.add(image[0], image[1]), 0);
        assert_ne!(image[0], 0);
    }

    #[test]
    fn connecting_into_empty_sub() {
        let pair = abs(triangle_boundary());
        assert!(connecting(F2, &pair, 1, &iv(1, 2)).unwrap().target_dim() == 0);
    }

    #[test]
    fn reduced_groups() {
        assert_eq!(reduced_homology(F2, &point(r(0)), 0, &iv(0, 1)).dim(), 0);
        let two = fs(&[(&["a"], 0), (&["b"], 0)]);
        assert_eq!(reduced_homology(F2, &two, 0, &iv(0, 1)).dim(), 1);
        let x = standard_boundary(3, r(0));
        assert_eq!(
            reduced_homology(F2, &x, 2, &iv(0, 1)).dim(),
            homology(F2, &abs(x), 2, &iv(0, 1)).dim()
        );
        assert_eq!(reduced_homology(F2, &FilteredSet::empty(), 0, &iv(0, 1)).dim(), 0);
    }

    #[test]
    fn point_classes() {
        let p = point(r(0));
        let v0 = p.vertex_set().iter().next().unwrap().clone();
        assert_eq!(point_class(F2, 1, &v0, &p, &iv(0, 1)).unwrap(), vec![1]);
        assert_eq!(point_class(F2, 0, &v0, &p, &iv(0, 1)).unwrap(), vec![0]);
        let two = fs(&[(&["a"], 0), (&["b"], 0)]);
        let a = point_class(F2, 1, &"a".into(), &two, &iv(0, 1)).unwrap();
        let b = point_class(F2, 1, &"b".into(), &two, &iv(0, 1)).unwrap();
        assert_eq!(Subspace::span(F2, 2, &[a, b]).dim(), 2);
        let late = fs(&[(&["a"], 2)]);
        assert_eq!(
            point_class(F2, 1, &"a".into(), &late, &iv(0, 3)),
            Err(Error::VertexNotPresent("a".into()))
        );
    }

    #[test]
    fn h0_splitting() {
        let p = point(r(0));
        let v0 = p.vertex_set().iter().next().unwrap().clone();
        assert_eq!(h0_decomposition(F2, &p, &v0, &iv(0, 0)).unwrap(), (0, 1));
        let three = fs(&[(&["a"], 0), (&["b"], 0), (&["c"], 0)]);
        assert_eq!(h0_decomposition(F2, &three, &"b".into(), &iv(0, 1)).unwrap(), (2, 1));
        let x = triangle_boundary();
        assert_eq!(h0_decomposition(F2, &x, &"a".into(), &iv(1, 1)).unwrap(), (0, 1));
    }

    #[test]
    fn grid_of_triangle_boundary() {
        let g = betti_grid(F2, &abs(triangle_boundary()), 1);
        assert_eq!(g.get(r(0), r(0)), Some(0));
        assert_eq!(g.get(r(0), r(1)), Some(0));
        assert_eq!(g.get(r(1), r(1)), Some(1));
        let g3 = betti_grid(F2, &abs(triangle_boundary()), 3);
        assert!(g3.cells.iter().all(|(_, d)| *d == 0));
    }

    #[test]
    fn coefficient_group_birth() {
        assert_eq!(coefficient_group(F2, r(1), &iv(1, 2)).dim, 1);
        assert_eq!(coefficient_group(F2, r(1), &iv(0, 2)).dim, 0);
    }

    #[test]
    fn simplex_and_boundary_tables() {
        for q in 0..=3usize {
            for alpha in [0, 1] {
                let sq = abs(standard_simplex(q, r(alpha)));
                let pair =
                    RelativeFilteredPair::new(standard_simplex(q, r(alpha)), standard_boundary(q, r(alpha))).unwrap();
                for lo in 0..3 {
                    let i = iv(lo, lo + 1);
                    let g = usize::from(lo >= alpha);
                    for k in 0..=(q as isize + 1) {
                        assert_eq!(homology(F2, &sq, k, &i).dim(), if k == 0 { g } else { 0 });
                        let expect = if k == q as isize { g } else { 0 };
                        assert_eq!(homology(F2, &pair, k, &i).dim(), expect, "q={q} k={k} lo={lo}");
                    }
                }
            }
        }
    }

    #[test]
    fn values_outside_support_are_ignored() {
        let x = FilteredSet::from_simplices([(s(&["a"]), FiltValue::int(0)), (s(&["a", "b"]), FiltValue::Inf)]);
        assert!(x.is_ok());
    }

    fn arb_small() -> impl Strategy<Value = FilteredSet> {
        crate::testing::arb_filtered()
    }

    fn swap_map(x: &FilteredSet) -> Option<PreservingMap> {
        let vs: Vec<Vertex> = x.vertex_set().iter().cloned().collect();
        if vs.len() < 2 {
            return None;
        }
        let m: BTreeMap<Vertex, Vertex> = vs
            .iter()
            .map(|v| {
                let w = if *v == vs[0] {
                    vs[1].clone()
                } else if *v == vs[1] {
                    vs[0].clone()
                } else {
                    v.clone()
                };
                (v.clone(), w)
            })
            .collect();
        PreservingMap::validate(m, abs(x.clone()), abs(x.clone())).ok()
    }

    proptest! {
        #[test]
        fn matches_brute_force(x in arb_small(), lo in 0i64..4, span in 0i64..3) {
            let pair = abs(x.clone());
            let i = iv(lo, lo + span);
            for n in 0..3 {
                prop_assert_eq!(homology(F2, &pair, n, &i).dim(), brute_rank(&x, n as usize, &i));
            }
        }

        #[test]
        fn diagonal_bounds_grid(x in arb_small()) {
            let pair = abs(x);
            for n in 0..3 {
                let g = betti_grid(F2, &pair, n);
                for (i, d) in &g.cells {
                    let lo = g.get(i.lo(), i.lo()).unwrap();
                    let hi = g.get(i.hi(), i.hi()).unwrap();
                    prop_assert!(*d <= lo.min(hi));
                }
            }
        }

        #[test]
        fn maps_do_not_depend_on_representatives(x in arb_small(), lo in 0i64..4, span in 0i64..3, mix in 1u32..3) {
            let f = Field::new(3).unwrap();
            let Some(m) = swap_map(&x) else { return Ok(()); };
            let i = iv(lo, lo + span);
            for n in 0..3 {
                let src = homology(f, m.domain(), n, &i);
                let tgt = homology(f, m.codomain(), n, &i);
                let base = induced_between(&m, &src, &tgt).unwrap();
                // rebase the source: rep_j += mix * rep_{j+1}, plus a boundary
                let d = src.dim();
                if d == 0 { continue; }
                let mut change = Matrix::identity(f, d);
                for j in 0..d.saturating_sub(1) {
                    change.set(j + 1, j, mix);
                }
                let noise = src.boundaries().basis().first().cloned();
                let reps: Vec<Vec<u32>> = (0..d)
                    .map(|j| {
                        let mut v = src.chain_of(&change.column(j));
                        if let Some(b) = &noise {
                            if src.cycles_image().contains(b) {
                                for (x, y) in v.iter_mut().zip(b) { *x = f.add(*x, *y); }
                            }
                        }
                        v
                    })
                    .collect();
                let rebased = src.with_reps(reps).unwrap();
                let other = induced_between(&m, &rebased, &tgt).unwrap();
                prop_assert_eq!(other.matrix(), &base.matrix().mul(&change).unwrap());
            }
        }

        #[test]
        fn functorial_on_swaps(x in arb_small(), lo in 0i64..4, span in 0i64..3) {
            let f = Field::new(3).unwrap();
            let Some(m) = swap_map(&x) else { return Ok(()); };
            let i = iv(lo, lo + span);
            let mm = m.compose(&m).unwrap();
            for n in 0..3 {
                let a = induced_map(f, &m, n, &i).unwrap();
                let b = induced_map(f, &mm, n, &i).unwrap();
                prop_assert_eq!(a.compose(&a).unwrap(), b.clone());
                prop_assert_eq!(b, LinearMap::identity(f, a.source_dim()));
            }
        }
    }
}
