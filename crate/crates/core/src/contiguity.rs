//! Contiguity of maps, retracts, triviality, and direct-sum decompositions.

use crate::error::{Error, Result};
use crate::filtered::{FilteredSet, Interval, RelativeFilteredPair};
use crate::homology::{homology, induced_between, reduced_pair_homology, LinearMap};
use crate::linalg::{Field, Matrix};
use crate::maps::PreservingMap;
use crate::value::Rational;

fn levels_of(f: &PreservingMap, g: &PreservingMap) -> Vec<Rational> {
    let mut c = f.domain().critical_values();
    c.extend(f.codomain().critical_values());
    c.extend(g.codomain().critical_values());
    c.sort();
    c.dedup();
    c
}

fn check_same_ends(f: &PreservingMap, g: &PreservingMap) -> Result<()> {
    if f.domain() != g.domain() || f.codomain() != g.codomain() {
        return Err(Error::MalformedInstance(
            "contiguity needs maps between the same pairs".into(),
        ));
    }
    Ok(())
}

fn contiguous_at(f: &PreservingMap, g: &PreservingMap, level: Rational) -> bool {
    let (dom, cod) = (f.domain(), f.codomain());
    dom.total().complex_at(level).iter().all(|s| {
        let joint = f.image(s).union(&g.image(s));
        cod.total().contains_at(&joint, level)
            && (!dom.sub().contains_at(s, level) || cod.sub().contains_at(&joint, level))
    })
}

/// Contiguity at every level of `interval` where some sublevel complex
/// changes, together with both endpoints.
pub fn are_contiguous(f: &PreservingMap, g: &PreservingMap, interval: &Interval) -> Result<bool> {
    check_same_ends(f, g)?;
    Ok(interval
        .levels(&levels_of(f, g))
        .into_iter()
        .all(|level| contiguous_at(f, g, level)))
}

/// Contiguity at every critical value of the pairs involved.
pub fn are_contiguous_everywhere(f: &PreservingMap, g: &PreservingMap) -> Result<bool> {
    check_same_ends(f, g)?;
    Ok(levels_of(f, g).into_iter().all(|level| contiguous_at(f, g, level)))
}

/// `g ∘ f ~ id` and `f ∘ g ~ id`.
pub fn are_contiguously_equivalent(f: &PreservingMap, g: &PreservingMap) -> Result<bool> {
    let gf = g.compose(f)?;
    let fg = f.compose(g)?;
    Ok(are_contiguous_everywhere(&gf, &PreservingMap::identity(f.domain()))?
        && are_contiguous_everywhere(&fg, &PreservingMap::identity(f.codomain()))?)
}

/// Whether `r: pair -> subpair` is a retraction whose composite with the
/// inclusion is contiguous to the identity.
pub fn deformation_retract_check(
    pair: &RelativeFilteredPair,
    subpair: &RelativeFilteredPair,
    r: &PreservingMap,
) -> Result<bool> {
    if r.domain() != pair || r.codomain() != subpair {
        return Err(Error::NotARetraction(
            "map does not go from the pair to the subpair".into(),
        ));
    }
    for v in subpair.total().vertex_set() {
        if r.apply(v) != v {
            return Err(Error::NotARetraction(format!("{v} is moved")));
        }
    }
    let inclusion = PreservingMap::inclusion(subpair, pair)?;
    are_contiguous_everywhere(&inclusion.compose(r)?, &PreservingMap::identity(pair))
}

/// Reduced groups vanish in degrees `0..=n_max`.
pub fn is_homologically_trivial(field: Field, pair: &RelativeFilteredPair, interval: &Interval, n_max: usize) -> bool {
    (0..=n_max as isize).all(|n| reduced_pair_homology(field, pair, n, interval).dim() == 0)
}

/// For `X = X_1 ∪ … ∪ X_r ∪ A` with pairwise intersections inside `A`,
/// checks that the maps `H_q(X_i, X_i ∩ A) -> H_q(X, A)` jointly form an
/// isomorphism from the direct sum.
pub fn direct_sum_check(
    field: Field,
    pieces: &[FilteredSet],
    a: &FilteredSet,
    q: isize,
    interval: &Interval,
) -> Result<bool> {
    for (i, xi) in pieces.iter().enumerate() {
        for xj in &pieces[i + 1..] {
            let m = xi.intersection(xj);
            if PreservingMap::set_inclusion(&m, a).is_err() {
                return Err(Error::HypothesisViolated("pieces meet outside the subset".into()));
            }
        }
    }
    let x = pieces.iter().fold(a.clone(), |acc, p| acc.union(p));
    let target = RelativeFilteredPair::new(x, a.clone())?;
    let ht = homology(field, &target, q, interval);
    let mut blocks: Vec<LinearMap> = Vec::new();
    let mut total = 0;
    for xi in pieces {
        let src = RelativeFilteredPair::new(xi.clone(), xi.intersection(a))?;
        let hs = homology(field, &src, q, interval);
        total += hs.dim();
        blocks.push(induced_between(&PreservingMap::inclusion(&src, &target)?, &hs, &ht)?);
    }
    let joint = blocks
        .iter()
        .fold(Matrix::zeros(field, ht.dim(), 0), |acc, b| acc.hstack(b.matrix()));
    Ok(total == ht.dim() && joint.is_invertible())
}
