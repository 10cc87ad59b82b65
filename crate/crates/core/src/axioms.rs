//! Mechanical verification of the axiom systems on concrete instances.
//!
//! Every check quantifies over all intervals with endpoints among the
//! critical values of the objects involved and over degrees up to one past
//! the top dimension. A failing check records the first interval, degree and
//! matrices that disagree.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::contiguity::{are_contiguous, direct_sum_check};
use crate::error::{Error, Result};
use crate::filtered::{point, standard_simplex, FilteredSet, Interval, RelativeFilteredPair};
use crate::homology::{coefficient_group, connecting, homology, induced_map, LinearMap};
use crate::io::{serialize_map, serialize_pair};
use crate::linalg::Field;
use crate::maps::PreservingMap;
use crate::random::{palette, ExcisionConfig, Fuzzer};
use crate::sequences::{check_exact, default_n_max, les_pair, les_triple, ExactSequence, WitnessKind};
use crate::value::{fmt_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AxiomId {
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    S1,
    S2,
    S3,
}

impl AxiomId {
    pub const ALL: [AxiomId; 10] = [
        AxiomId::A1,
        AxiomId::A2,
        AxiomId::A3,
        AxiomId::A4,
        AxiomId::A5,
        AxiomId::A6,
        AxiomId::A7,
        AxiomId::S1,
        AxiomId::S2,
        AxiomId::S3,
    ];

    pub fn summary(&self) -> &'static str {
        match self {
            AxiomId::A1 => "identity induces identity",
            AxiomId::A2 => "composition",
            AxiomId::A3 => "naturality of the boundary",
            AxiomId::A4 => "exact sequence of a pair",
            AxiomId::A5 => "contiguous maps agree",
            AxiomId::A6 => "dimension",
            AxiomId::A7 => "excision",
            AxiomId::S1 => "excision by direct sum",
            AxiomId::S2 => "exact triangle",
            AxiomId::S3 => "simplices",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AxiomId::ALL
            .into_iter()
            .find(|a| a.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::MalformedInstance(format!("unknown axiom `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The instance never meets the axiom's hypothesis.
    Inapplicable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inapplicable => "n/a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    /// Hex digest of the serialized instance.
    pub instance: String,
    pub description: String,
    pub verdict: Verdict,
    /// Present exactly when the verdict is a failure.
    pub witness: Option<String>,
    /// Ranks or dimensions of everything compared, in check order.
    pub ranks: Vec<usize>,
}

impl AxiomReport {
    /// `axiom \t instance \t verdict \t ranks`.
    pub fn record(&self) -> String {
        let ranks: Vec<String> = self.ranks.iter().map(|r| r.to_string()).collect();
        format!(
            "{}\t{}\t{}\t{}",
            self.axiom,
            self.instance,
            self.verdict,
            ranks.join(",")
        )
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<28} {} {:<4} {} ({} checks)",
            self.axiom,
            self.axiom.summary(),
            self.instance,
            self.verdict,
            self.description,
            self.ranks.len()
        )?;
        if let Some(w) = &self.witness {
            write!(f, "\n    witness: {w}")?;
        }
        Ok(())
    }
}

/// Everything the axioms quantify over, for one instance.
#[derive(Debug, Clone)]
pub struct Instance {
    pub description: String,
    pub pair: RelativeFilteredPair,
    /// Two self-maps of `pair`, composed as `f ∘ g`.
    pub f: PreservingMap,
    pub g: PreservingMap,
    /// A pair of self-maps of `pair` expected to be contiguous somewhere.
    pub contiguous: (PreservingMap, PreservingMap),
    pub excision: ExcisionConfig,
    /// Value of the point and of the standard simplex.
    pub alpha: Rational,
    /// Dimension of the standard simplex.
    pub q: usize,
}

fn mix(seed: u64, index: u64) -> u64 {
    seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ index.wrapping_add(1).wrapping_mul(0xbf58_476d_1ce4_e5b9)
}

impl Instance {
    /// Instance number `index` of the stream fixed by `seed`.
    pub fn fuzz(seed: u64, index: u64) -> Instance {
        let mut z = Fuzzer::new(mix(seed, index));
        let pair = z.pair();
        let mut inst = Instance::around(pair, &mut z, format!("fuzz seed {seed} #{index}"));
        inst.excision = z.excision();
        inst
    }

    /// Builds the maps and auxiliary objects around a given pair.
    pub fn from_pair(pair: RelativeFilteredPair, description: impl Into<String>, seed: u64) -> Instance {
        let mut z = Fuzzer::new(seed);
        Instance::around(pair, &mut z, description.into())
    }

    fn around(pair: RelativeFilteredPair, z: &mut Fuzzer, description: String) -> Instance {
        let id = PreservingMap::identity(&pair);
        let f = z.map(&pair, &pair).unwrap_or_else(|| id.clone());
        let g = z.map(&pair, &pair).unwrap_or_else(|| id.clone());
        let contiguous = z.contiguous_pair(&pair).unwrap_or_else(|| (id.clone(), id));
        // X' drawn inside X, with A as the excised subset
        let xp = z.subset(pair.total());
        let a = pair.sub().clone();
        let excision = ExcisionConfig {
            large: RelativeFilteredPair::new(xp.union(&a), a.clone()).expect("union lies below its parts"),
            small: RelativeFilteredPair::new(xp.clone(), xp.intersection(&a))
                .expect("intersection lies above its parts"),
        };
        let alpha = palette()[z.below(4)].finite().unwrap();
        let q = z.below(4);
        Instance {
            description,
            pair,
            f,
            g,
            contiguous,
            excision,
            alpha,
            q,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for m in [&self.f, &self.g, &self.contiguous.0, &self.contiguous.1] {
            if m.domain() != &self.pair || m.codomain() != &self.pair {
                return Err(Error::MalformedInstance("maps must be self-maps of the pair".into()));
            }
        }
        PreservingMap::inclusion(&self.excision.small, &self.excision.large)
            .map_err(|e| Error::MalformedInstance(format!("excision configuration: {e}")))?;
        Ok(())
    }

    /// Canonical text of every component.
    pub fn serialize(&self) -> String {
        let mut out = serialize_pair(&self.pair);
        for (name, m) in [
            ("f", &self.f),
            ("g", &self.g),
            ("c0", &self.contiguous.0),
            ("c1", &self.contiguous.1),
        ] {
            out.push_str(&format!("[{name}]\n"));
            out.push_str(&serialize_map(m, "pair", "pair"));
        }
        out.push_str("[excision small]\n");
        out.push_str(&serialize_pair(&self.excision.small));
        out.push_str("[excision large]\n");
        out.push_str(&serialize_pair(&self.excision.large));
        out.push_str(&format!("[simplex]\n{} {}\n", self.q, fmt_rational(&self.alpha)));
        out
    }

    /// First 16 hex digits of the SHA-256 of [`Instance::serialize`].
    pub fn hash(&self) -> String {
        let digest = Sha256::digest(self.serialize().as_bytes());
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn intervals(critical: Vec<Rational>) -> Vec<Interval> {
    let mut c = critical;
    c.sort();
    c.dedup();
    if c.is_empty() {
        c.push(Rational::from_integer(0));
    }
    Interval::all_over(&c)
}

fn at(i: &Interval, n: isize) -> String {
    format!("I={i} n={n}")
}

/// Outcome of a single check: ranks collected so far and the first
/// disagreement, if any.
#[derive(Default)]
struct Tally {
    ranks: Vec<usize>,
    witness: Option<String>,
    applicable: bool,
}

impl Tally {
    fn fail(&mut self, w: String) {
        if self.witness.is_none() {
            self.witness = Some(w);
        }
    }

    fn failed(&self) -> bool {
        self.witness.is_some()
    }

    fn compare(&mut self, lhs: &LinearMap, rhs: &LinearMap, where_: String) {
        self.ranks.push(lhs.rank());
        if lhs != rhs {
            self.fail(format!("{where_}: {} != {}", matrix_text(lhs), matrix_text(rhs)));
        }
    }

    fn exact(&mut self, seq: &ExactSequence, where_: String) {
        let report = check_exact(seq);
        self.ranks.extend(report.checks.iter().map(|c| c.image_rank));
        if let Some(w) = &report.witness {
            let node = &seq.nodes()[w.node];
            let kind = match &w.kind {
                WitnessKind::ImageNotInKernel { preimage } => format!("image of {preimage:?} not killed"),
                WitnessKind::KernelNotInImage => "kernel vector not in image".to_string(),
            };
            self.fail(format!("{where_}: at {} vector {:?}, {kind}", node.label, w.vector));
        }
    }

    fn error(&mut self, e: Error, where_: String) {
        self.fail(format!("{where_}: {e}"));
    }
}

fn matrix_text(m: &LinearMap) -> String {
    m.to_string().replace('\n', ";")
}

/// Checks one axiom on one instance.
pub fn verify_axiom(field: Field, id: AxiomId, instance: &Instance) -> Result<AxiomReport> {
    instance.validate()?;
    let mut t = Tally {
        applicable: true,
        ..Tally::default()
    };
    match id {
        AxiomId::A1 => check_identity(field, instance, &mut t),
        AxiomId::A2 => check_composition(field, instance, &mut t),
        AxiomId::A3 => check_naturality(field, instance, &mut t),
        AxiomId::A4 => check_pair_sequence(field, instance, &mut t),
        AxiomId::A5 => check_contiguity(field, instance, &mut t),
        AxiomId::A6 => check_dimension(field, instance, &mut t),
        AxiomId::A7 => check_excision(field, instance, &mut t),
        AxiomId::S1 => check_excision_sum(field, instance, &mut t),
        AxiomId::S2 => check_triangle(field, instance, &mut t),
        AxiomId::S3 => check_simplex(field, instance, &mut t),
    }
    let verdict = if t.failed() {
        Verdict::Fail
    } else if !t.applicable {
        Verdict::Inapplicable
    } else {
        Verdict::Pass
    };
    Ok(AxiomReport {
        axiom: id,
        instance: instance.hash(),
        description: instance.description.clone(),
        verdict,
        witness: t.witness,
        ranks: t.ranks,
    })
}

fn degrees(pair: &RelativeFilteredPair) -> std::ops::RangeInclusive<isize> {
    0..=default_n_max(pair.total()) as isize
}

fn check_identity(field: Field, inst: &Instance, t: &mut Tally) {
    let id = PreservingMap::identity(&inst.pair);
    for i in intervals(inst.pair.critical_values()) {
        for n in degrees(&inst.pair) {
            match induced_map(field, &id, n, &i) {
                Ok(m) => {
                    let expected = LinearMap::identity(field, m.source_dim());
                    t.compare(&m, &expected, at(&i, n));
                }
                Err(e) => t.error(e, at(&i, n)),
            }
        }
    }
}

fn check_composition(field: Field, inst: &Instance, t: &mut Tally) {
    let fg = match inst.f.compose(&inst.g) {
        Ok(m) => m,
        Err(e) => return t.error(e, "composite".into()),
    };
    for i in intervals(inst.pair.critical_values()) {
        for n in degrees(&inst.pair) {
            let run = || -> Result<(LinearMap, LinearMap)> {
                let lhs = induced_map(field, &fg, n, &i)?;
                let rhs = induced_map(field, &inst.f, n, &i)?.compose(&induced_map(field, &inst.g, n, &i)?)?;
                Ok((lhs, rhs))
            };
            match run() {
                Ok((lhs, rhs)) => t.compare(&lhs, &rhs, at(&i, n)),
                Err(e) => t.error(e, at(&i, n)),
            }
        }
    }
}

fn check_naturality(field: Field, inst: &Instance, t: &mut Tally) {
    let f = &inst.f;
    let fa = f.restrict_to_sub();
    for i in intervals(inst.pair.critical_values()) {
        for n in degrees(&inst.pair).filter(|n| *n > 0) {
            let run = || -> Result<(LinearMap, LinearMap)> {
                let lhs = induced_map(field, &fa, n - 1, &i)?.compose(&connecting(field, f.domain(), n, &i)?)?;
                let rhs = connecting(field, f.codomain(), n, &i)?.compose(&induced_map(field, f, n, &i)?)?;
                Ok((lhs, rhs))
            };
            match run() {
                Ok((lhs, rhs)) => t.compare(&lhs, &rhs, at(&i, n)),
                Err(e) => t.error(e, at(&i, n)),
            }
        }
    }
}

fn check_pair_sequence(field: Field, inst: &Instance, t: &mut Tally) {
    let n_max = default_n_max(inst.pair.total());
    for i in intervals(inst.pair.critical_values()) {
        match les_pair(field, &inst.pair, &i, n_max) {
            Ok(seq) => t.exact(&seq, format!("I={i}")),
            Err(e) => t.error(e, format!("I={i}")),
        }
    }
}

/// The triangle `H(A) -> H(X) -> H(X, A) -> H(A)`, unrolled into the long
/// sequence and built through the triple `(X, A, ∅)`.
fn check_triangle(field: Field, inst: &Instance, t: &mut Tally) {
    let n_max = default_n_max(inst.pair.total());
    let empty = FilteredSet::empty();
    for i in intervals(inst.pair.critical_values()) {
        match les_triple(field, inst.pair.total(), inst.pair.sub(), &empty, &i, n_max) {
            Ok(seq) => t.exact(&seq, format!("I={i}")),
            Err(e) => t.error(e, format!("I={i}")),
        }
    }
}

fn check_contiguity(field: Field, inst: &Instance, t: &mut Tally) {
    let (f, g) = &inst.contiguous;
    t.applicable = false;
    for i in intervals(inst.pair.critical_values()) {
        match are_contiguous(f, g, &i) {
            Ok(true) => {}
            Ok(false) => continue,
            Err(e) => return t.error(e, format!("I={i}")),
        }
        t.applicable = true;
        for n in degrees(&inst.pair) {
            match induced_map(field, f, n, &i).and_then(|a| Ok((a, induced_map(field, g, n, &i)?))) {
                Ok((a, b)) => t.compare(&a, &b, at(&i, n)),
                Err(e) => t.error(e, at(&i, n)),
            }
        }
    }
}

fn point_grid(alpha: Rational) -> Vec<Interval> {
    let mut c: Vec<Rational> = palette().iter().filter_map(|v| v.finite()).collect();
    c.push(alpha);
    c.push(alpha - 1);
    c.push(alpha + 1);
    intervals(c)
}

fn check_dimension(field: Field, inst: &Instance, t: &mut Tally) {
    let p = RelativeFilteredPair::absolute(point(inst.alpha));
    for i in point_grid(inst.alpha) {
        for n in 0..=2 {
            let dim = homology(field, &p, n, &i).dim();
            t.ranks.push(dim);
            let expected = usize::from(n == 0 && i.lo() >= inst.alpha);
            if dim != expected {
                t.fail(format!("{}: dim {dim}, expected {expected}", at(&i, n)));
            }
        }
    }
}

fn check_simplex(field: Field, inst: &Instance, t: &mut Tally) {
    let s = RelativeFilteredPair::absolute(standard_simplex(inst.q, inst.alpha));
    for i in point_grid(inst.alpha) {
        let g = coefficient_group(field, inst.alpha, &i).dim;
        for k in 0..=inst.q as isize + 1 {
            let dim = homology(field, &s, k, &i).dim();
            t.ranks.push(dim);
            let expected = if k == 0 { g } else { 0 };
            if dim != expected {
                t.fail(format!("{}: dim {dim}, expected {expected}", at(&i, k)));
            }
        }
    }
}

fn excision_intervals(e: &ExcisionConfig) -> Vec<Interval> {
    let mut c = e.small.critical_values();
    c.extend(e.large.critical_values());
    intervals(c)
}

fn check_excision(field: Field, inst: &Instance, t: &mut Tally) {
    let e = &inst.excision;
    let inclusion = match PreservingMap::inclusion(&e.small, &e.large) {
        Ok(m) => m,
        Err(err) => return t.error(err, "inclusion".into()),
    };
    for i in excision_intervals(e) {
        for n in degrees(&e.large) {
            match induced_map(field, &inclusion, n, &i) {
                Ok(m) => {
                    t.ranks.push(m.rank());
                    if !m.is_isomorphism() {
                        t.fail(format!(
                            "{}: {}x{} of rank {}",
                            at(&i, n),
                            m.target_dim(),
                            m.source_dim(),
                            m.rank()
                        ));
                    }
                }
                Err(err) => t.error(err, at(&i, n)),
            }
        }
    }
}

fn check_excision_sum(field: Field, inst: &Instance, t: &mut Tally) {
    let e = &inst.excision;
    let pieces = [e.small.total().clone()];
    let a = e.large.sub();
    for i in excision_intervals(e) {
        for n in degrees(&e.large) {
            t.ranks.push(homology(field, &e.large, n, &i).dim());
            match direct_sum_check(field, &pieces, a, n, &i) {
                Ok(true) => {}
                Ok(false) => t.fail(format!("{}: not a direct sum", at(&i, n))),
                Err(err) => t.error(err, at(&i, n)),
            }
        }
    }
}

/// Every axiom in `axioms` on every instance, in parallel; reports come back
/// ordered by instance, then axiom.
pub fn run_suite(field: Field, instances: &[Instance], axioms: &[AxiomId]) -> Result<Vec<AxiomReport>> {
    let jobs: Vec<(&Instance, AxiomId)> = instances
        .iter()
        .flat_map(|i| axioms.iter().map(move |a| (i, *a)))
        .collect();
    jobs.into_par_iter()
        .map(|(inst, a)| verify_axiom(field, a, inst))
        .collect()
}

/// `count` instances from the stream fixed by `seed`.
pub fn fuzz_instances(seed: u64, count: usize) -> Vec<Instance> {
    (0..count as u64)
        .into_par_iter()
        .map(|k| Instance::fuzz(seed, k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtered::tests::fs;
    use std::collections::BTreeMap;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    fn degenerate_only(inst: &mut Instance) {
        // all values equal, so every interval is a single level
        let x = fs(&[
            (&["a"], 0),
            (&["b"], 0),
            (&["c"], 0),
            (&["a", "b"], 0),
            (&["b", "c"], 0),
        ]);
        let a = fs(&[(&["a"], 0), (&["c"], 0)]);
        inst.pair = RelativeFilteredPair::new(x, a).unwrap();
    }

    #[test]
    fn axiom_ids_round_trip() {
        for a in AxiomId::ALL {
            assert_eq!(a.to_string().parse::<AxiomId>().unwrap(), a);
        }
        assert!("A8".parse::<AxiomId>().is_err());
    }

    #[test]
    fn suite_on_a_path_relative_to_its_ends() {
        let mut inst = Instance::fuzz(1, 0);
        degenerate_only(&mut inst);
        let inst = Instance::from_pair(inst.pair, "path", 5);
        let reports = run_suite(Field::GF2, &[inst], &AxiomId::ALL).unwrap();
        assert_eq!(reports.len(), 10);
        for rep in &reports {
            assert!(rep.passed(), "{rep}");
            assert!(rep.witness.is_none());
        }
    }

    #[test]
    fn dimension_axiom_on_points() {
        for alpha in [r(0), r(1), Rational::new(5, 2)] {
            let mut inst = Instance::fuzz(2, 0);
            inst.alpha = alpha;
            let rep = verify_axiom(Field::GF2, AxiomId::A6, &inst).unwrap();
            assert_eq!(rep.verdict, Verdict::Pass);
            assert!(rep.ranks.contains(&1) && rep.ranks.contains(&0));
        }
    }

    #[test]
    fn excision_on_two_glued_triangles() {
        // X = abc ∪ bcd, X' = abc, A = bcd
        let xp = fs(&[
            (&["a"], 0),
            (&["b"], 0),
            (&["c"], 1),
            (&["a", "b"], 1),
            (&["a", "c"], 1),
            (&["b", "c"], 1),
            (&["a", "b", "c"], 2),
        ]);
        let a = fs(&[
            (&["b"], 0),
            (&["c"], 1),
            (&["d"], 0),
            (&["b", "c"], 1),
            (&["b", "d"], 1),
            (&["c", "d"], 2),
            (&["b", "c", "d"], 2),
        ]);
        let mut inst = Instance::fuzz(3, 0);
        inst.excision = ExcisionConfig {
            large: RelativeFilteredPair::new(xp.union(&a), a.clone()).unwrap(),
            small: RelativeFilteredPair::new(xp.clone(), xp.intersection(&a)).unwrap(),
        };
        for id in [AxiomId::A7, AxiomId::S1] {
            let rep = verify_axiom(Field::new(3).unwrap(), id, &inst).unwrap();
            assert_eq!(rep.verdict, Verdict::Pass, "{rep}");
        }
    }

    #[test]
    fn non_contiguous_maps_are_not_claimed_equal() {
        // two points swapped versus fixed: never contiguous, different on H_0
        let two = RelativeFilteredPair::absolute(fs(&[(&["a"], 0), (&["b"], 0)]));
        let id = PreservingMap::identity(&two);
        let vm: BTreeMap<_, _> = [("a", "b"), ("b", "a")]
            .iter()
            .map(|(x, y)| ((*x).into(), (*y).into()))
            .collect();
        let swap = PreservingMap::validate(vm, two.clone(), two.clone()).unwrap();
        let mut inst = Instance::from_pair(two, "two points", 0);
        inst.contiguous = (id.clone(), swap.clone());
        let rep = verify_axiom(Field::GF2, AxiomId::A5, &inst).unwrap();
        assert_eq!(rep.verdict, Verdict::Inapplicable);
        let i = Interval::ints(0, 0).unwrap();
        assert_ne!(
            induced_map(Field::GF2, &id, 0, &i).unwrap(),
            induced_map(Field::GF2, &swap, 0, &i).unwrap()
        );
    }

    #[test]
    fn failures_carry_witnesses() {
        // a class of A dies inside the interval; the pair sequence is not exact
        let x = fs(&[(&["a"], 0), (&["b"], 0), (&["d"], 0), (&["b", "d"], 0)]);
        let a = fs(&[(&["a"], 1)]);
        let inst = Instance::from_pair(RelativeFilteredPair::new(x, a).unwrap(), "split", 0);
        for id in [AxiomId::A4, AxiomId::S2] {
            let rep = verify_axiom(Field::GF2, id, &inst).unwrap();
            assert_eq!(rep.verdict, Verdict::Fail);
            assert!(rep.witness.as_deref().unwrap().contains("I=[0, 1]"), "{rep}");
        }
    }

    #[test]
    fn malformed_bundles_are_rejected() {
        let mut inst = Instance::fuzz(4, 0);
        let other = Instance::fuzz(4, 1);
        if inst.pair != other.pair {
            inst.f = other.f;
            assert!(matches!(
                verify_axiom(Field::GF2, AxiomId::A1, &inst),
                Err(Error::MalformedInstance(_))
            ));
        }
    }

    #[test]
    fn suites_are_deterministic() {
        let a = run_suite(Field::GF2, &fuzz_instances(9, 6), &AxiomId::ALL).unwrap();
        let b = run_suite(Field::GF2, &fuzz_instances(9, 6), &AxiomId::ALL).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            a.iter().map(|r| r.record()).collect::<Vec<_>>(),
            b.iter().map(|r| r.record()).collect::<Vec<_>>()
        );
        assert_eq!(a[0].record().split('\t').count(), 4);
    }
}
