//! Long sequences of interval-indexed groups and their exactness.
//!
//! A sequence is a chain of nodes with one arrow between consecutive nodes.
//! Builders run from the top degree down to degree 0 and end in a zero node.
//! [`check_exact`] compares image and kernel at every node with an incoming
//! arrow by double inclusion, and returns a witness vector on failure that
//! can be re-verified against the sequence alone.

use std::fmt;

use crate::error::{Error, Result};
use crate::filtered::{FilteredSet, Interval, RelativeFilteredPair};
use crate::homology::{connecting_between, homology, induced_between, reduced_pair_homology, HomologyGroup, LinearMap};
use crate::linalg::{Field, Matrix, Subspace};
use crate::maps::PreservingMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub label: String,
    pub degree: isize,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub map: LinearMap,
}

/// `arrows[i]` goes from `nodes[i]` to `nodes[i + 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactSequence {
    field: Field,
    nodes: Vec<Node>,
    arrows: Vec<Arrow>,
}

impl ExactSequence {
    pub fn new(field: Field, nodes: Vec<Node>, arrows: Vec<Arrow>) -> Result<Self> {
        if nodes.len() != arrows.len() + 1 {
            return Err(Error::MalformedInstance(
                "a sequence needs one arrow between consecutive nodes".into(),
            ));
        }
        for (i, a) in arrows.iter().enumerate() {
            if a.map.source_dim() != nodes[i].dim || a.map.target_dim() != nodes[i + 1].dim {
                return Err(Error::DimensionMismatch {
                    expected: nodes[i].dim,
                    found: a.map.source_dim(),
                });
            }
        }
        Ok(ExactSequence { field, nodes, arrows })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Same sequence with arrow `i` replaced, for negative controls.
    pub fn with_arrow(&self, i: usize, map: LinearMap) -> Result<Self> {
        let mut arrows = self.arrows.clone();
        arrows[i].map = map;
        Self::new(self.field, self.nodes.clone(), arrows)
    }
}

impl fmt::Display for ExactSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.nodes.iter().enumerate() {
            write!(f, "{} [{}]", n.label, n.dim)?;
            if let Some(a) = self.arrows.get(i) {
                write!(f, " --{}--> ", a.label)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessKind {
    /// `vector = incoming(preimage)` but `outgoing(vector) != 0`.
    ImageNotInKernel { preimage: Vec<u32> },
    /// `outgoing(vector) = 0` but `vector` is not hit by the incoming arrow.
    KernelNotInImage,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub node: usize,
    pub vector: Vec<u32>,
    pub kind: WitnessKind,
}

impl Witness {
    /// Confirms the failure using only the arrows of `seq`.
    pub fn recheck(&self, seq: &ExactSequence) -> bool {
        if self.node == 0 || self.node >= seq.nodes.len() {
            return false;
        }
        let incoming = &seq.arrows[self.node - 1].map;
        let out = outgoing(seq, self.node);
        let kills = out.apply(&self.vector).iter().all(|x| *x == 0);
        match &self.kind {
            WitnessKind::ImageNotInKernel { preimage } => incoming.apply(preimage) == self.vector && !kills,
            WitnessKind::KernelNotInImage => kills && incoming.matrix().solve(&self.vector).is_none(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeCheck {
    pub node: usize,
    pub image_rank: usize,
    pub kernel_dim: usize,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactnessReport {
    pub checks: Vec<NodeCheck>,
    /// First failure, if any.
    pub witness: Option<Witness>,
}

impl ExactnessReport {
    pub fn is_exact(&self) -> bool {
        self.checks.iter().all(|c| c.exact)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.exact).count()
    }
}

fn outgoing(seq: &ExactSequence, node: usize) -> LinearMap {
    match seq.arrows.get(node) {
        Some(a) => a.map.clone(),
        None => LinearMap::zero(seq.field, seq.nodes[node].dim, 0),
    }
}

pub fn check_exact(seq: &ExactSequence) -> ExactnessReport {
    let mut checks = Vec::new();
    let mut witness = None;
    for node in 1..seq.nodes.len() {
        let incoming = &seq.arrows[node - 1].map;
        let out = outgoing(seq, node);
        let image = incoming.image();
        let kernel = out.kernel();
        let exact = image == kernel;
        if !exact && witness.is_none() {
            witness = Some(find_witness(seq.field, node, incoming, &out, &image, &kernel));
        }
        checks.push(NodeCheck {
            node,
            image_rank: image.dim(),
            kernel_dim: kernel.dim(),
            exact,
        });
    }
    ExactnessReport { checks, witness }
}

fn find_witness(
    field: Field,
    node: usize,
    incoming: &LinearMap,
    out: &LinearMap,
    image: &Subspace,
    kernel: &Subspace,
) -> Witness {
    let n = incoming.source_dim();
    for k in 0..n {
        let mut e = vec![0; n];
        e[k] = 1;
        let v = incoming.apply(&e);
        if !kernel.contains(&v) {
            return Witness {
                node,
                vector: v,
                kind: WitnessKind::ImageNotInKernel { preimage: e },
            };
        }
    }
    let v = kernel
        .basis()
        .iter()
        .find(|b| !image.contains(b))
        .cloned()
        .expect("image and kernel differ");
    let _ = (field, out);
    Witness {
        node,
        vector: v,
        kind: WitnessKind::KernelNotInImage,
    }
}

struct Builder {
    field: Field,
    nodes: Vec<Node>,
    arrows: Vec<Arrow>,
}

impl Builder {
    fn new(field: Field) -> Self {
        Builder {
            field,
            nodes: Vec::new(),
            arrows: Vec::new(),
        }
    }

    fn node(&mut self, label: String, degree: isize, dim: usize) {
        self.nodes.push(Node { label, degree, dim });
    }

    fn arrow(&mut self, label: &str, map: LinearMap) {
        self.arrows.push(Arrow {
            label: label.to_string(),
            map,
        });
    }

    fn finish(mut self) -> Result<ExactSequence> {
        let last = self.nodes.last().map(|n| n.dim).unwrap_or(0);
        self.arrow("0", LinearMap::zero(self.field, last, 0));
        self.node("0".into(), -1, 0);
        ExactSequence::new(self.field, self.nodes, self.arrows)
    }
}

/// Default truncation: one above the top dimension.
pub fn default_n_max(x: &FilteredSet) -> usize {
    x.top_dim().unwrap_or(0) + 1
}

fn incl(domain: &RelativeFilteredPair, codomain: &RelativeFilteredPair) -> Result<PreservingMap> {
    PreservingMap::inclusion(domain, codomain)
}

fn abs(x: &FilteredSet) -> RelativeFilteredPair {
    RelativeFilteredPair::absolute(x.clone())
}

/// `… → H_n(A) → H_n(X) → H_n(X, A) → H_{n-1}(A) → … → H_0(X, A) → 0`.
pub fn les_pair(field: Field, pair: &RelativeFilteredPair, interval: &Interval, n_max: usize) -> Result<ExactSequence> {
    les_pair_with(field, pair, interval, n_max, false)
}

/// The reduced sequence: degree-0 groups of `A` and `X` replaced by their
/// reduced subgroups, with the arrows restricted.
pub fn les_pair_reduced(
    field: Field,
    pair: &RelativeFilteredPair,
    interval: &Interval,
    n_max: usize,
) -> Result<ExactSequence> {
    les_pair_with(field, pair, interval, n_max, true)
}

fn les_pair_with(
    field: Field,
    pair: &RelativeFilteredPair,
    interval: &Interval,
    n_max: usize,
    reduced: bool,
) -> Result<ExactSequence> {
    let pa = abs(pair.sub());
    let px = abs(pair.total());
    let i = incl(&pa, &px)?;
    let j = incl(&px, pair)?;
    let group = |p: &RelativeFilteredPair, n: isize| {
        if reduced && n == 0 {
            reduced_pair_homology(field, p, n, interval)
        } else {
            homology(field, p, n, interval)
        }
    };
    let mut b = Builder::new(field);
    let mut ha = group(&pa, n_max as isize);
    for n in (0..=n_max as isize).rev() {
        let hx = group(&px, n);
        let hxa = group(pair, n);
        b.node(format!("H{n}(A)"), n, ha.dim());
        b.arrow("i*", induced_between(&i, &ha, &hx)?);
        b.node(format!("H{n}(X)"), n, hx.dim());
        b.arrow("j*", induced_between(&j, &hx, &hxa)?);
        b.node(format!("H{n}(X,A)"), n, hxa.dim());
        if n > 0 {
            let below = group(&pa, n - 1);
            b.arrow("d", connecting_between(&hxa, &below)?);
            ha = below;
        }
    }
    b.finish()
}

/// `… → H_n(A, B) → H_n(X, B) → H_n(X, A) → H_{n-1}(A, B) → …` for
/// filtered subsets `B ⊆ A ⊆ X`.
pub fn les_triple(
    field: Field,
    x: &FilteredSet,
    a: &FilteredSet,
    b: &FilteredSet,
    interval: &Interval,
    n_max: usize,
) -> Result<ExactSequence> {
    let pab = RelativeFilteredPair::new(a.clone(), b.clone())?;
    let pxb = RelativeFilteredPair::new(x.clone(), b.clone())?;
    let pxa = RelativeFilteredPair::new(x.clone(), a.clone())?;
    let pa = abs(a);
    let i = incl(&pab, &pxb)?;
    let j = incl(&pxb, &pxa)?;
    let jj = incl(&pa, &pab)?;
    let mut s = Builder::new(field);
    let mut hab = homology(field, &pab, n_max as isize, interval);
    for n in (0..=n_max as isize).rev() {
        let hxb = homology(field, &pxb, n, interval);
        let hxa = homology(field, &pxa, n, interval);
        s.node(format!("H{n}(A,B)"), n, hab.dim());
        s.arrow("i*", induced_between(&i, &hab, &hxb)?);
        s.node(format!("H{n}(X,B)"), n, hxb.dim());
        s.arrow("j*", induced_between(&j, &hxb, &hxa)?);
        s.node(format!("H{n}(X,A)"), n, hxa.dim());
        if n > 0 {
            let ha = homology(field, &pa, n - 1, interval);
            let below = homology(field, &pab, n - 1, interval);
            let d = connecting_between(&hxa, &ha)?;
            let jd = induced_between(&jj, &ha, &below)?.compose(&d)?;
            s.arrow("d", jd);
            hab = below;
        }
    }
    s.finish()
}

/// Induced maps of `k1: (X1, X1∩X2) → (X1∪X2, X2)` and
/// `k2: (X2, X1∩X2) → (X1∪X2, X1)` in degree `n`.
fn excision_maps(
    field: Field,
    x1: &FilteredSet,
    x2: &FilteredSet,
    n: isize,
    interval: &Interval,
) -> Result<(LinearMap, LinearMap)> {
    let u = x1.union(x2);
    let m = x1.intersection(x2);
    let k = |a: &FilteredSet, b: &FilteredSet| -> Result<LinearMap> {
        let src = RelativeFilteredPair::new(a.clone(), m.clone())?;
        let tgt = RelativeFilteredPair::new(u.clone(), b.clone())?;
        let map = incl(&src, &tgt)?;
        induced_between(
            &map,
            &homology(field, &src, n, interval),
            &homology(field, &tgt, n, interval),
        )
    };
    Ok((k(x1, x2)?, k(x2, x1)?))
}

/// Both excision maps are isomorphisms in degrees `0..=top + 1`.
pub fn is_proper_triad(field: Field, x1: &FilteredSet, x2: &FilteredSet, interval: &Interval) -> Result<bool> {
    let top = default_n_max(&x1.union(x2));
    for n in 0..=top as isize {
        let (k1, k2) = excision_maps(field, x1, x2, n, interval)?;
        if !k1.is_isomorphism() || !k2.is_isomorphism() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `H_n(X1∩X2) → H_n(X1) ⊕ H_n(X2) → H_n(X1∪X2) → H_{n-1}(X1∩X2)`, with
/// `(i1*, -i2*)`, `j1* + j2*`, and the boundary through `k1*^{-1}`.
pub fn mayer_vietoris(
    field: Field,
    x1: &FilteredSet,
    x2: &FilteredSet,
    interval: &Interval,
    n_max: usize,
) -> Result<ExactSequence> {
    if !is_proper_triad(field, x1, x2, interval)? {
        return Err(Error::NotProperTriad);
    }
    let u = x1.union(x2);
    let m = x1.intersection(x2);
    let (pu, pm, p1, p2) = (abs(&u), abs(&m), abs(x1), abs(x2));
    let i1 = incl(&pm, &p1)?;
    let i2 = incl(&pm, &p2)?;
    let j1 = incl(&p1, &pu)?;
    let j2 = incl(&p2, &pu)?;
    let p1m = RelativeFilteredPair::new(x1.clone(), m.clone())?;
    let pu2 = RelativeFilteredPair::new(u.clone(), x2.clone())?;
    let k1 = incl(&p1m, &pu2)?;
    let l = incl(&pu, &pu2)?;

    let mut s = Builder::new(field);
    let mut hm = homology(field, &pm, n_max as isize, interval);
    for n in (0..=n_max as isize).rev() {
        let h1 = homology(field, &p1, n, interval);
        let h2 = homology(field, &p2, n, interval);
        let hu = homology(field, &pu, n, interval);
        let a1 = induced_between(&i1, &hm, &h1)?;
        let a2 = induced_between(&i2, &hm, &h2)?.negate();
        let phi = vstack(field, &a1, &a2);
        let b1 = induced_between(&j1, &h1, &hu)?;
        let b2 = induced_between(&j2, &h2, &hu)?;
        let psi = hstack(&b1, &b2);
        s.node(format!("H{n}(X1∩X2)"), n, hm.dim());
        s.arrow("(i1*,-i2*)", phi);
        s.node(format!("H{n}(X1)+H{n}(X2)"), n, h1.dim() + h2.dim());
        s.arrow("j1*+j2*", psi);
        s.node(format!("H{n}(X1∪X2)"), n, hu.dim());
        if n > 0 {
            let h1m = homology(field, &p1m, n, interval);
            let hu2 = homology(field, &pu2, n, interval);
            let below = homology(field, &pm, n - 1, interval);
            let k_inv = induced_between(&k1, &h1m, &hu2)?.inverse()?;
            let lu = induced_between(&l, &hu, &hu2)?;
            let d = connecting_between(&h1m, &below)?;
            s.arrow("d", d.compose(&k_inv)?.compose(&lu)?);
            hm = below;
        }
    }
    s.finish()
}

/// `H_q(X1, X1∩X2) → H_q(X, X2) → H_q(X, X1∪X2) → H_{q-1}(X1, X1∩X2)`.
pub fn triad_sequence(
    field: Field,
    x: &FilteredSet,
    x1: &FilteredSet,
    x2: &FilteredSet,
    interval: &Interval,
    n_max: usize,
) -> Result<ExactSequence> {
    if !is_proper_triad(field, x1, x2, interval)? {
        return Err(Error::NotProperTriad);
    }
    let u = x1.union(x2);
    let m = x1.intersection(x2);
    let p1m = RelativeFilteredPair::new(x1.clone(), m.clone())?;
    let px2 = RelativeFilteredPair::new(x.clone(), x2.clone())?;
    let pxu = RelativeFilteredPair::new(x.clone(), u.clone())?;
    let pu = abs(&u);
    let pu2 = RelativeFilteredPair::new(u.clone(), x2.clone())?;
    let i = incl(&p1m, &px2)?;
    let j = incl(&px2, &pxu)?;
    let l2 = incl(&pu, &pu2)?;
    let k = incl(&p1m, &pu2)?;

    let mut s = Builder::new(field);
    let mut h1m = homology(field, &p1m, n_max as isize, interval);
    for n in (0..=n_max as isize).rev() {
        let hx2 = homology(field, &px2, n, interval);
        let hxu = homology(field, &pxu, n, interval);
        s.node(format!("H{n}(X1,X1∩X2)"), n, h1m.dim());
        s.arrow("i*", induced_between(&i, &h1m, &hx2)?);
        s.node(format!("H{n}(X,X2)"), n, hx2.dim());
        s.arrow("j*", induced_between(&j, &hx2, &hxu)?);
        s.node(format!("H{n}(X,X1∪X2)"), n, hxu.dim());
        if n > 0 {
            let hu = homology(field, &pu, n - 1, interval);
            let hu2 = homology(field, &pu2, n - 1, interval);
            let below = homology(field, &p1m, n - 1, interval);
            let alpha = connecting_between(&hxu, &hu)?;
            let l = induced_between(&l2, &hu, &hu2)?;
            let k_inv = induced_between(&k, &below, &hu2)?.inverse()?;
            s.arrow("d", k_inv.compose(&l)?.compose(&alpha)?);
            h1m = below;
        }
    }
    s.finish()
}

fn vstack(field: Field, a: &LinearMap, b: &LinearMap) -> LinearMap {
    let cols: Vec<Vec<u32>> = (0..a.source_dim())
        .map(|j| {
            let mut c = a.matrix().column(j);
            c.extend(b.matrix().column(j));
            c
        })
        .collect();
    LinearMap::new(Matrix::from_columns(field, a.target_dim() + b.target_dim(), &cols))
}

fn hstack(a: &LinearMap, b: &LinearMap) -> LinearMap {
    LinearMap::new(a.matrix().hstack(b.matrix()))
}

/// Groups of a sequence's pair at one degree, for callers that need the
/// underlying representatives.
pub fn pair_groups(field: Field, pair: &RelativeFilteredPair, n: isize, interval: &Interval) -> [HomologyGroup; 3] {
    [
        homology(field, &abs(pair.sub()), n, interval),
        homology(field, &abs(pair.total()), n, interval),
        homology(field, pair, n, interval),
    ]
}
