//! Homology rebuilt from skeletal chain groups.
//!
//! `C_q^I(X, A) = H_q^I(X^(q) ∪ A, X^(q-1) ∪ A)` with its basis of generators
//! `g A^0 … A^q`, one per `q`-simplex outside `A` taken in sorted vertex
//! order. The boundary is the connecting map of the skeletal triple, and the
//! homology of the resulting complex is compared with the direct groups
//! through `theta`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::filtered::{standard_vertices, FilteredSet, Interval, RelativeFilteredPair};
use crate::homology::{connecting_between, homology, induced_between, point_class, HomologyGroup, LinearMap};
use crate::linalg::{Field, Matrix, Subspace};
use crate::maps::PreservingMap;
use crate::sequences::{check_exact, Arrow, ExactSequence, ExactnessReport, Node};
use crate::simplex::{Simplex, Vertex};
use crate::value::Rational;

/// `(X^(q) ∪ A, X^(q-1) ∪ A)`.
pub fn skeletal_pair(pair: &RelativeFilteredPair, q: isize) -> RelativeFilteredPair {
    let a = pair.sub();
    RelativeFilteredPair::new(pair.total().skeleton(q).union(a), pair.total().skeleton(q - 1).union(a))
        .expect("lower skeleton is a filtered subset")
}

#[derive(Debug, Clone)]
pub struct SkeletalChainGroup {
    degree: isize,
    generators: Vec<Simplex>,
    group: HomologyGroup,
}

impl SkeletalChainGroup {
    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.generators.len()
    }

    /// Simplices whose generators form the basis, in canonical order.
    pub fn generators(&self) -> &[Simplex] {
        &self.generators
    }

    /// The underlying group of the skeletal pair.
    pub fn group(&self) -> &HomologyGroup {
        &self.group
    }

    /// Coefficients over the generators of the class of a chain of the
    /// skeletal pair at the upper level.
    pub fn decompose(&self, chain: &[u32]) -> Result<Vec<u32>> {
        self.group.coords(chain)
    }
}

/// `C_q^I(X, A)`; zero for `q < 0` and above the top dimension.
pub fn skeletal_chain_group(
    field: Field,
    pair: &RelativeFilteredPair,
    q: isize,
    interval: &Interval,
) -> SkeletalChainGroup {
    let sp = skeletal_pair(pair, q);
    let group = homology(field, &sp, q, interval);
    if q < 0 {
        return SkeletalChainGroup {
            degree: q,
            generators: Vec::new(),
            group,
        };
    }
    let generators: Vec<Simplex> = pair
        .total()
        .simplices_at(q as usize, interval.lo())
        .into_iter()
        .filter(|s| !pair.sub().contains_at(s, interval.hi()))
        .collect();
    let units = generators
        .iter()
        .map(|s| group.space().vector(field, &[(s.clone(), 1)]))
        .collect();
    let group = group
        .with_reps(units)
        .expect("alive simplices outside the subset span the chain group");
    SkeletalChainGroup {
        degree: q,
        generators,
        group,
    }
}

fn ordered_simplex_pair(vs: &[Vertex], alpha: Rational) -> RelativeFilteredPair {
    RelativeFilteredPair::new(
        FilteredSet::full_simplex(vs, alpha),
        FilteredSet::simplex_boundary(vs, alpha),
    )
    .expect("boundary sits inside the simplex")
}

/// `[S^q : S^{q-1}] = (j_*)^{-1} ∘ i_* ∘ ∂` for the ordered simplex on `vs`,
/// where `S^{q-1}` is the face opposite the first vertex.
pub fn incidence_iso_on(field: Field, vs: &[Vertex], alpha: Rational, interval: &Interval) -> Result<LinearMap> {
    let q = vs.len() as isize - 1;
    if q < 1 {
        return Err(Error::MalformedInstance(
            "incidence needs a simplex of dimension at least 1".into(),
        ));
    }
    let top = ordered_simplex_pair(vs, alpha);
    let face = ordered_simplex_pair(&vs[1..], alpha);
    let shell = FilteredSet::simplex_boundary(vs, alpha);
    let star = FilteredSet::closed_star(vs, alpha, &vs[0]);
    let shell_abs = RelativeFilteredPair::absolute(shell.clone());
    let shell_rel = RelativeFilteredPair::new(shell, star)?;
    let h_top = homology(field, &top, q, interval);
    let h_shell = homology(field, &shell_abs, q - 1, interval);
    let h_shell_rel = homology(field, &shell_rel, q - 1, interval);
    let h_face = homology(field, &face, q - 1, interval);
    let d = connecting_between(&h_top, &h_shell)?;
    let i = induced_between(
        &PreservingMap::inclusion(&shell_abs, &shell_rel)?,
        &h_shell,
        &h_shell_rel,
    )?;
    let j = induced_between(&PreservingMap::inclusion(&face, &shell_rel)?, &h_face, &h_shell_rel)?;
    j.inverse()?.compose(&i.compose(&d)?)
}

/// Incidence isomorphism of the standard `(q, alpha)`-simplex.
pub fn incidence_iso(field: Field, q: usize, alpha: Rational, interval: &Interval) -> Result<LinearMap> {
    incidence_iso_on(field, &standard_vertices(q), alpha, interval)
}

/// `g S` in `H_q^I(S, Ṡ)` for the ordered simplex on `vs`, built down the
/// chain of incidence isomorphisms to the last vertex.
pub fn ordered_simplex_class(
    field: Field,
    g: u32,
    vs: &[Vertex],
    alpha: Rational,
    interval: &Interval,
) -> Result<Vec<u32>> {
    if alpha > interval.lo() {
        return Ok(Vec::new());
    }
    if vs.len() == 1 {
        return point_class(field, g, &vs[0], &FilteredSet::full_simplex(vs, alpha), interval);
    }
    let below = ordered_simplex_class(field, g, &vs[1..], alpha, interval)?;
    let inc = incidence_iso_on(field, vs, alpha, interval)?;
    Ok(inc.inverse()?.apply(&below))
}

/// `g A^0 … A^q` as coefficients over the generators of `C_q^I(X, A)`: the
/// pushforward of `g S^q` along `B^i ↦ A^i`.
pub fn generator(
    field: Field,
    g: u32,
    seq: &[Vertex],
    pair: &RelativeFilteredPair,
    interval: &Interval,
) -> Result<Vec<u32>> {
    if let Some(v) = seq.iter().find(|v| !pair.total().contains_vertex(v)) {
        return Err(Error::UnknownVertex(v.clone()));
    }
    let q = seq.len() as isize - 1;
    let target = skeletal_chain_group(field, pair, q, interval);
    let image = Simplex::new(seq.iter().cloned()).ok_or(Error::MalformedInstance("empty vertex sequence".into()))?;
    let Some(alpha) = pair.total().value(&image).finite() else {
        return Ok(vec![0; target.dim()]);
    };
    let vs = standard_vertices(q as usize);
    let source = ordered_simplex_pair(&vs, alpha);
    let map = PreservingMap::validate(
        vs.iter().cloned().zip(seq.iter().cloned()).collect(),
        source.clone(),
        skeletal_pair(pair, q),
    )?;
    let class = ordered_simplex_class(field, g, &vs, alpha, interval)?;
    let pushed = induced_between(&map, &homology(field, &source, q, interval), target.group())?;
    Ok(pushed.apply(&class))
}

/// `∂_q: C_q -> C_{q-1}`, the connecting map `H_q(X^(q) ∪ A, X^(q-1) ∪ A) ->
/// H_{q-1}(X^(q-1) ∪ A)` followed by the projection onto `C_{q-1}`.
pub fn skeletal_boundary(field: Field, pair: &RelativeFilteredPair, q: isize, interval: &Interval) -> Result<Matrix> {
    let src = skeletal_chain_group(field, pair, q, interval);
    let tgt = skeletal_chain_group(field, pair, q - 1, interval);
    boundary_between_groups(field, pair, &src, &tgt, interval)
}

fn boundary_between_groups(
    field: Field,
    pair: &RelativeFilteredPair,
    src: &SkeletalChainGroup,
    tgt: &SkeletalChainGroup,
    interval: &Interval,
) -> Result<Matrix> {
    let q = src.degree;
    if q < 1 {
        return Ok(Matrix::zeros(field, tgt.dim(), src.dim()));
    }
    let middle = RelativeFilteredPair::absolute(skeletal_pair(pair, q - 1).total().clone());
    let h_middle = homology(field, &middle, q - 1, interval);
    let d = connecting_between(src.group(), &h_middle)?;
    let j = induced_between(
        &PreservingMap::inclusion(&middle, tgt.group().pair())?,
        &h_middle,
        tgt.group(),
    )?;
    Ok(j.compose(&d)?.matrix().clone())
}

/// Chain groups in degrees `0..=q_max` and the boundaries between them.
#[derive(Debug, Clone)]
pub struct SkeletalComplex {
    field: Field,
    groups: Vec<SkeletalChainGroup>,
    /// `boundaries[q]` is `∂_q`, with `∂_0` the zero map to nothing.
    boundaries: Vec<Matrix>,
}

impl SkeletalComplex {
    pub fn groups(&self) -> &[SkeletalChainGroup] {
        &self.groups
    }

    pub fn boundary(&self, q: usize) -> &Matrix {
        &self.boundaries[q]
    }

    fn boundary_or_zero(&self, q: usize, src_dim: usize) -> Matrix {
        match self.boundaries.get(q) {
            Some(m) => m.clone(),
            None => Matrix::zeros(self.field, self.groups.get(q - 1).map_or(0, |g| g.dim()), src_dim),
        }
    }

    /// `∂_q ∘ ∂_{q+1} = 0` in every degree.
    pub fn squares_to_zero(&self) -> bool {
        (1..self.boundaries.len().saturating_sub(1)).all(|q| {
            self.boundaries[q]
                .mul(&self.boundaries[q + 1])
                .map(|m| m.is_zero())
                .unwrap_or(false)
        })
    }

    /// `Z_q`, `B_q`, and representatives for `Z_q / B_q`.
    pub fn homology(&self, q: usize) -> SkeletalHomology {
        let dim = self.groups.get(q).map_or(0, |g| g.dim());
        let cycles = Subspace::kernel(&self.boundary_or_zero(q, dim));
        let above = self.groups.get(q + 1).map_or(0, |g| g.dim());
        let boundaries = Subspace::image(&self.boundary_or_zero(q + 1, above));
        let reps = cycles
            .complement(&boundaries)
            .expect("boundaries are cycles when the complex squares to zero");
        SkeletalHomology {
            degree: q as isize,
            cycles,
            boundaries,
            reps,
        }
    }
}

pub fn skeletal_complex(
    field: Field,
    pair: &RelativeFilteredPair,
    interval: &Interval,
    q_max: usize,
) -> Result<SkeletalComplex> {
    let groups: Vec<SkeletalChainGroup> = (0..=q_max as isize)
        .map(|q| skeletal_chain_group(field, pair, q, interval))
        .collect();
    let mut boundaries = vec![Matrix::zeros(field, 0, groups[0].dim())];
    for q in 1..groups.len() {
        boundaries.push(boundary_between_groups(
            field,
            pair,
            &groups[q],
            &groups[q - 1],
            interval,
        )?);
    }
    Ok(SkeletalComplex {
        field,
        groups,
        boundaries,
    })
}

/// `Z_q / B_q` in generator coordinates.
#[derive(Debug, Clone)]
pub struct SkeletalHomology {
    degree: isize,
    cycles: Subspace,
    boundaries: Subspace,
    reps: Vec<Vec<u32>>,
}

impl SkeletalHomology {
    pub fn degree(&self) -> isize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn cycles(&self) -> &Subspace {
        &self.cycles
    }

    pub fn boundaries(&self) -> &Subspace {
        &self.boundaries
    }

    pub fn reps(&self) -> &[Vec<u32>] {
        &self.reps
    }

    pub fn coords(&self, v: &[u32]) -> Result<Vec<u32>> {
        Subspace::coords_in_quotient(v, &self.reps, &self.boundaries).ok_or(Error::ClassNotInTarget)
    }
}

/// The skeletal group in degree `q`; zero for negative degrees.
pub fn skeletal_homology(
    field: Field,
    pair: &RelativeFilteredPair,
    q: isize,
    interval: &Interval,
) -> Result<SkeletalHomology> {
    if q < 0 {
        return Ok(SkeletalHomology {
            degree: q,
            cycles: Subspace::zero(field, 0),
            boundaries: Subspace::zero(field, 0),
            reps: Vec::new(),
        });
    }
    let mut h = skeletal_complex(field, pair, interval, q as usize + 1)?.homology(q as usize);
    h.degree = q;
    Ok(h)
}

/// `f_q` on skeletal chain groups, in generator coordinates.
pub fn skeletal_chain_map(field: Field, f: &PreservingMap, q: isize, interval: &Interval) -> Result<Matrix> {
    let src = skeletal_chain_group(field, f.domain(), q, interval);
    let tgt = skeletal_chain_group(field, f.codomain(), q, interval);
    let g = f.retarget(skeletal_pair(f.domain(), q), skeletal_pair(f.codomain(), q))?;
    Ok(induced_between(&g, src.group(), tgt.group())?.matrix().clone())
}

/// `H_q^I(X, A) -> 𝓗_q^I(X, A)`: lift along `l_*`, push along `j_*` into the
/// cycles, and project to the quotient.
pub fn theta(field: Field, pair: &RelativeFilteredPair, q: isize, interval: &Interval) -> Result<LinearMap> {
    let direct = homology(field, pair, q, interval);
    let skel = skeletal_homology(field, pair, q, interval)?;
    if q < 0 {
        return Ok(LinearMap::zero(field, direct.dim(), skel.dim()));
    }
    let chains = skeletal_chain_group(field, pair, q, interval);
    let middle = RelativeFilteredPair::new(pair.total().skeleton(q).union(pair.sub()), pair.sub().clone())?;
    let h_middle = homology(field, &middle, q, interval);
    let l = induced_between(&PreservingMap::inclusion(&middle, pair)?, &h_middle, &direct)?;
    let j = induced_between(
        &PreservingMap::inclusion(&middle, chains.group().pair())?,
        &h_middle,
        chains.group(),
    )?;
    for k in l.kernel().basis() {
        if !skel.boundaries.contains(&j.apply(k)) {
            return Err(Error::OracleMismatch(format!(
                "kernel of l_* leaves the boundaries in degree {q}"
            )));
        }
    }
    let mut cols = Vec::with_capacity(direct.dim());
    for i in 0..direct.dim() {
        let mut e = vec![0; direct.dim()];
        e[i] = 1;
        let lifted = l
            .matrix()
            .solve(&e)
            .ok_or_else(|| Error::OracleMismatch(format!("l_* is not onto in degree {q}")))?;
        let cycle = j.apply(&lifted);
        if !skel.cycles.contains(&cycle) {
            return Err(Error::OracleMismatch(format!("j_* leaves the cycles in degree {q}")));
        }
        cols.push(skel.coords(&cycle)?);
    }
    let m = LinearMap::new(Matrix::from_columns(field, skel.dim(), &cols));
    if !m.is_isomorphism() {
        return Err(Error::OracleMismatch(format!(
            "degree {q}: direct dim {}, skeletal dim {}, rank {}",
            direct.dim(),
            skel.dim(),
            m.rank()
        )));
    }
    Ok(m)
}

/// `i_q` and `j_q` in `0 -> C_q(A) -> C_q(X) -> C_q(X, A) -> 0`.
fn chain_level_maps(
    field: Field,
    pair: &RelativeFilteredPair,
    q: isize,
    interval: &Interval,
) -> Result<(LinearMap, LinearMap)> {
    let pa = RelativeFilteredPair::absolute(pair.sub().clone());
    let px = RelativeFilteredPair::absolute(pair.total().clone());
    let ca = skeletal_chain_group(field, &pa, q, interval);
    let cx = skeletal_chain_group(field, &px, q, interval);
    let cxa = skeletal_chain_group(field, pair, q, interval);
    let i = induced_between(
        &PreservingMap::inclusion(ca.group().pair(), cx.group().pair())?,
        ca.group(),
        cx.group(),
    )?;
    let j = induced_between(
        &PreservingMap::inclusion(cx.group().pair(), cxa.group().pair())?,
        cx.group(),
        cxa.group(),
    )?;
    Ok((i, j))
}

/// Exactness report for `0 -> C_q(A) -> C_q(X) -> C_q(X, A) -> 0`.
pub fn short_exact_check(
    field: Field,
    pair: &RelativeFilteredPair,
    q: isize,
    interval: &Interval,
) -> Result<ExactnessReport> {
    let (i, j) = chain_level_maps(field, pair, q, interval)?;
    let node = |label: &str, dim| Node {
        label: label.to_string(),
        degree: q,
        dim,
    };
    let seq = ExactSequence::new(
        field,
        vec![
            node("0", 0),
            node("C(A)", i.source_dim()),
            node("C(X)", j.source_dim()),
            node("C(X,A)", j.target_dim()),
            node("0", 0),
        ],
        vec![
            Arrow {
                label: "0".into(),
                map: LinearMap::zero(field, 0, i.source_dim()),
            },
            Arrow {
                label: "i".into(),
                map: i,
            },
            Arrow {
                label: "j".into(),
                map: j.clone(),
            },
            Arrow {
                label: "0".into(),
                map: LinearMap::zero(field, j.target_dim(), 0),
            },
        ],
    )?;
    Ok(check_exact(&seq))
}

/// `j_q^{-1}[Z_q(X, A)]` inside `C_q(X)`.
pub fn preimage_cycles(field: Field, pair: &RelativeFilteredPair, q: isize, interval: &Interval) -> Result<Subspace> {
    let (_, j) = chain_level_maps(field, pair, q, interval)?;
    let z = skeletal_homology(field, pair, q, interval)?;
    Subspace::preimage(j.matrix(), z.cycles())
}

/// `j_q^{-1}[B_q(X, A)]` inside `C_q(X)`.
pub fn preimage_boundaries(
    field: Field,
    pair: &RelativeFilteredPair,
    q: isize,
    interval: &Interval,
) -> Result<Subspace> {
    let (_, j) = chain_level_maps(field, pair, q, interval)?;
    let b = skeletal_homology(field, pair, q, interval)?;
    Subspace::preimage(j.matrix(), b.boundaries())
}

/// Whether the two preimages equal `∂_q^{-1}[i_{q-1} C_{q-1}(A)]` and
/// `B_q(X) + i_q C_q(A)`.
pub fn preimage_identities_hold(
    field: Field,
    pair: &RelativeFilteredPair,
    q: isize,
    interval: &Interval,
) -> Result<bool> {
    if q < 0 {
        return Ok(true);
    }
    let px = RelativeFilteredPair::absolute(pair.total().clone());
    let (i_q, _) = chain_level_maps(field, pair, q, interval)?;
    let (i_below, _) = chain_level_maps(field, pair, q - 1, interval)?;
    let dx = skeletal_boundary(field, &px, q, interval)?;
    let bx = Subspace::image(&skeletal_boundary(field, &px, q + 1, interval)?);
    let cycles_formula = Subspace::preimage(&dx, &i_below.image())?;
    let boundaries_formula = bx.sum(&i_q.image());
    Ok(preimage_cycles(field, pair, q, interval)? == cycles_formula
        && preimage_boundaries(field, pair, q, interval)? == boundaries_formula)
}

/// `H_p^I(X^(q) ∪ A, X^(q-1) ∪ A) = 0` for every `p != q` up to `p_max`.
pub fn off_degree_vanishes(
    field: Field,
    pair: &RelativeFilteredPair,
    q: isize,
    interval: &Interval,
    p_max: usize,
) -> bool {
    let sp = skeletal_pair(pair, q);
    (0..=p_max as isize)
        .filter(|p| *p != q)
        .all(|p| homology(field, &sp, p, interval).dim() == 0)
}

/// `∂(g A^0 … A^q) = Σ (-1)^k g A^0 … Â^k … A^q` for every generator with
/// `g = 1`.
pub fn boundary_formula_holds(
    field: Field,
    pair: &RelativeFilteredPair,
    q: isize,
    interval: &Interval,
) -> Result<bool> {
    if q < 1 {
        return Ok(true);
    }
    let src = skeletal_chain_group(field, pair, q, interval);
    let d = skeletal_boundary(field, pair, q, interval)?;
    for s in src.generators() {
        let lhs = d.apply(&generator(field, 1, s.vertices(), pair, interval)?);
        let mut rhs = vec![0; d.rows()];
        for (k, face) in s.facets() {
            let g = if k % 2 == 0 { 1 } else { field.from_i64(-1) };
            let term = generator(field, g, face.vertices(), pair, interval)?;
            for (x, t) in rhs.iter_mut().zip(term) {
                *x = field.add(*x, t);
            }
        }
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coefficients of a chain over the generators are unique: solving against
/// the generators in reverse order gives the same answer.
pub fn decomposition_is_unique(field: Field, group: &SkeletalChainGroup, chain: &[u32]) -> Result<bool> {
    let first = group.decompose(chain)?;
    let space = group.group().space();
    let reversed: Vec<Vec<u32>> = group
        .generators()
        .iter()
        .rev()
        .map(|s| space.vector(field, &[(s.clone(), 1)]))
        .collect();
    let m = Matrix::from_columns(field, space.dim(), &reversed);
    if m.rank() != reversed.len() {
        return Ok(false);
    }
    let Some(mut second) = m.solve(chain) else {
        return Ok(false);
    };
    second.reverse();
    Ok(first == second)
}

/// Dimensions of one group as computed by the three independent routes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleRow {
    pub degree: isize,
    pub interval: Interval,
    pub direct: usize,
    /// `None` when the skeletal computation raised an error.
    pub skeletal: Option<usize>,
    pub barcode: usize,
    pub theta_invertible: bool,
}

impl OracleRow {
    pub fn dims_agree(&self) -> bool {
        self.skeletal == Some(self.direct) && self.barcode == self.direct
    }

    pub fn agrees(&self) -> bool {
        self.dims_agree() && self.theta_invertible
    }
}

/// Direct, skeletal and barcode dimensions for every degree up to one past
/// the top dimension and every interval over the critical values.
pub fn compare_oracles(field: Field, pair: &RelativeFilteredPair) -> Vec<OracleRow> {
    let bars = crate::barcode::barcode(field, pair);
    let n_max = crate::sequences::default_n_max(pair.total()) as isize;
    let mut critical = pair.critical_values();
    if critical.is_empty() {
        critical.push(Rational::from_integer(0));
    }
    let jobs: Vec<(isize, Interval)> = (0..=n_max)
        .flat_map(|n| Interval::all_over(&critical).into_iter().map(move |i| (n, i)))
        .collect();
    jobs.into_par_iter()
        .map(|(n, i)| OracleRow {
            degree: n,
            interval: i,
            direct: homology(field, pair, n, &i).dim(),
            skeletal: skeletal_homology(field, pair, n, &i).ok().map(|h| h.dim()),
            barcode: crate::barcode::persistent_betti(&bars, n as usize, &i),
            theta_invertible: theta(field, pair, n, &i).map(|t| t.is_isomorphism()).unwrap_or(false),
        })
        .collect()
}
