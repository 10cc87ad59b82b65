//! Invariants of the axiom systems on seeded random instances.
//!
//! Statements that rest on exactness of the long sequences are checked on
//! one-level intervals `[ε, ε]`, where the sequences are exact; the general
//! case is exercised by the acceptance suite.

use phax_core::axioms::{verify_axiom, AxiomId, Instance, Verdict};
use phax_core::contiguity::{are_contiguous, is_homologically_trivial};
use phax_core::homology::{connecting, homology, induced_map, LinearMap};
use phax_core::random::Fuzzer;
use phax_core::sequences::{
    check_exact, default_n_max, is_proper_triad, les_pair, les_pair_reduced, les_triple, mayer_vietoris, triad_sequence,
};
use phax_core::{
    cylinder, Field, FiltValue, FilteredSet, Interval, PreservingMap, RelativeFilteredPair, Simplex, Vertex,
};
use proptest::prelude::*;

fn intervals(pair: &RelativeFilteredPair) -> Vec<Interval> {
    let c = pair.critical_values();
    if c.is_empty() {
        return vec![Interval::ints(0, 0).unwrap()];
    }
    Interval::all_over(&c)
}

fn levels(pair: &RelativeFilteredPair) -> Vec<Interval> {
    intervals(pair).into_iter().filter(|i| i.lo() == i.hi()).collect()
}

fn degrees(x: &FilteredSet) -> std::ops::RangeInclusive<isize> {
    0..=default_n_max(x) as isize
}

fn field() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![2u32, 3, 5]).prop_map(|p| Field::new(p).unwrap())
}

/// Cone on `base` with apex `o` born with the earliest simplex.
fn cone(base: &FilteredSet) -> FilteredSet {
    let apex = Vertex::new("o");
    let birth = base.min_value().expect("nonempty base");
    let mut raw: Vec<(Simplex, FiltValue)> = vec![(Simplex::vertex(apex.clone()), FiltValue::Finite(birth))];
    for (s, v) in base.support() {
        raw.push((s.clone(), FiltValue::Finite(*v)));
        raw.push((s.with_vertex(&apex), FiltValue::Finite(*v)));
    }
    FilteredSet::from_simplices(raw).unwrap()
}

fn nonempty(z: &mut Fuzzer) -> FilteredSet {
    loop {
        let x = z.filtration();
        if x.support_len() > 0 {
            return x;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn induced_maps_are_functorial(seed in any::<u64>(), f in field()) {
        let mut z = Fuzzer::new(seed);
        let p = z.pair();
        let (Some(a), Some(b)) = (z.map(&p, &p), z.map(&p, &p)) else { return Ok(()) };
        let ab = a.compose(&b).unwrap();
        let id = PreservingMap::identity(&p);
        for i in intervals(&p) {
            for n in degrees(p.total()) {
                let ma = induced_map(f, &a, n, &i).unwrap();
                let mb = induced_map(f, &b, n, &i).unwrap();
                prop_assert_eq!(induced_map(f, &ab, n, &i).unwrap(), ma.compose(&mb).unwrap());
                let mi = induced_map(f, &id, n, &i).unwrap();
                prop_assert_eq!(&mi, &LinearMap::identity(f, mi.source_dim()));
            }
        }
    }

    #[test]
    fn boundary_is_natural(seed in any::<u64>(), f in field()) {
        let mut z = Fuzzer::new(seed);
        let p = z.pair();
        let Some(m) = z.map(&p, &p) else { return Ok(()) };
        let ma = m.restrict_to_sub();
        for i in intervals(&p) {
            for n in 1..=default_n_max(p.total()) as isize {
                let lhs = induced_map(f, &ma, n - 1, &i).unwrap().compose(&connecting(f, &p, n, &i).unwrap()).unwrap();
                let rhs = connecting(f, &p, n, &i).unwrap().compose(&induced_map(f, &m, n, &i).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn contiguous_maps_induce_equal_maps(seed in any::<u64>(), f in field()) {
        let mut z = Fuzzer::new(seed);
        let p = z.pair();
        let (Some(a), Some(b)) = (z.map(&p, &p), z.map(&p, &p)) else { return Ok(()) };
        for i in intervals(&p) {
            if are_contiguous(&a, &b, &i).unwrap() {
                for n in degrees(p.total()) {
                    prop_assert_eq!(induced_map(f, &a, n, &i).unwrap(), induced_map(f, &b, n, &i).unwrap());
                }
            }
        }
    }

    #[test]
    fn cylinder_ends_agree(seed in any::<u64>(), f in field()) {
        let mut z = Fuzzer::new(seed);
        let x = z.filtration();
        let order = z.order(&x);
        let c = cylinder(&x, &order).unwrap();
        for i in intervals(&RelativeFilteredPair::absolute(x.clone())) {
            for n in degrees(&x) {
                let h0 = induced_map(f, &c.h0, n, &i).unwrap();
                let h1 = induced_map(f, &c.h1, n, &i).unwrap();
                let k = induced_map(f, &c.k, n, &i).unwrap();
                prop_assert_eq!(&h0, &h1);
                prop_assert_eq!(k.inverse().unwrap(), h0);
            }
        }
    }

    #[test]
    fn sequences_are_exact_at_a_level(seed in any::<u64>(), f in field()) {
        let mut z = Fuzzer::new(seed);
        let (x, a, b) = z.triple();
        let p = RelativeFilteredPair::new(x.clone(), a.clone()).unwrap();
        let n = default_n_max(&x);
        let (x1, x2) = z.cover();
        let u = x1.union(&x2);
        let mut all = levels(&p);
        all.extend(levels(&RelativeFilteredPair::absolute(u.clone())));
        for i in all {
            prop_assert!(check_exact(&les_pair(f, &p, &i, n).unwrap()).is_exact());
            prop_assert!(check_exact(&les_triple(f, &x, &a, &b, &i, n).unwrap()).is_exact());
            // a single level has no interval effects, so every triad is proper
            prop_assert!(is_proper_triad(f, &x1, &x2, &i).unwrap());
            let top = default_n_max(&u);
            prop_assert!(check_exact(&mayer_vietoris(f, &x1, &x2, &i, top).unwrap()).is_exact());
            prop_assert!(check_exact(&triad_sequence(f, &u, &x1, &x2, &i, top).unwrap()).is_exact());
            // the reduced sequence ends in H_0(X, A) -> 0, which needs A nonempty
            if !a.complex_at(i.lo()).is_empty() {
                let full = les_pair(f, &p, &i, n).unwrap();
                let red = les_pair_reduced(f, &p, &i, n).unwrap();
                prop_assert!(check_exact(&red).is_exact());
                for (s, t) in full.nodes().iter().zip(red.nodes()) {
                    if s.degree != 0 {
                        prop_assert_eq!(s.dim, t.dim);
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_pairs_give_isomorphisms(seed in any::<u64>(), f in field()) {
        let mut z = Fuzzer::new(seed);
        let (x, a, b) = z.triple();
        let pxa = RelativeFilteredPair::new(x.clone(), a.clone()).unwrap();
        let pab = RelativeFilteredPair::new(a.clone(), b.clone()).unwrap();
        let pxb = RelativeFilteredPair::new(x.clone(), b.clone()).unwrap();
        let n_max = default_n_max(&x);
        for i in levels(&pxa) {
            let seq = les_triple(f, &x, &a, &b, &i, n_max).unwrap();
            // arrows per degree: i* (A,B)->(X,B), j* (X,B)->(X,A), then d
            let arrows = seq.arrows();
            // reduced and unreduced groups agree once the subset is nonempty
            let trivial = |p: &RelativeFilteredPair| {
                !p.sub().complex_at(i.lo()).is_empty() && is_homologically_trivial(f, p, &i, n_max)
            };
            for (k, arrow) in arrows.iter().enumerate() {
                let (label, iso) = (&arrow.label, arrow.map.is_isomorphism());
                let claim = match label.as_str() {
                    "i*" => trivial(&pxa),
                    "j*" => trivial(&pab),
                    "d" => trivial(&pxb),
                    _ => false,
                };
                if claim {
                    prop_assert!(iso, "arrow {} ({}) on {}", k, label, i);
                }
            }
            // conversely, all i* isomorphisms force H(X, A) = 0
            let all_i = arrows.iter().filter(|a| a.label == "i*").all(|a| a.map.is_isomorphism());
            let top = homology(f, &pxa, n_max as isize, &i).dim();
            if all_i && top == 0 {
                for n in 0..=n_max as isize {
                    prop_assert_eq!(homology(f, &pxa, n, &i).dim(), 0);
                }
            }
        }
    }

    #[test]
    fn star_shaped_sets_look_like_their_apex(seed in any::<u64>(), f in field()) {
        let mut z = Fuzzer::new(seed);
        let a = cone(&nonempty(&mut z));
        let apex = Vertex::new("o");
        let birth = a.value(&Simplex::vertex(apex.clone())).finite().unwrap();
        let qa = FilteredSet::from_simplices([(Simplex::vertex(apex.clone()), FiltValue::Finite(birth))]).unwrap();
        let pa = RelativeFilteredPair::absolute(a.clone());
        let inc = PreservingMap::set_inclusion(&qa, &a).unwrap();
        for i in intervals(&pa) {
            prop_assert!(a.is_star_shaped(&apex, &i).unwrap());
            for n in degrees(&a) {
                prop_assert!(induced_map(f, &inc, n, &i).unwrap().is_isomorphism());
            }
        }
        // X = A plus more simplices; the boundary vanishes and dimensions split
        let extra = z.filtration();
        let x = a.union(&extra);
        let p = RelativeFilteredPair::new(x.clone(), a.clone()).unwrap();
        for i in intervals(&p) {
            if !a.is_star_shaped(&apex, &i).unwrap() {
                continue;
            }
            for n in degrees(&x) {
                if n > 0 {
                    prop_assert!(connecting(f, &p, n, &i).unwrap().is_zero());
                }
                let (ha, hx, hxa) = (
                    homology(f, &RelativeFilteredPair::absolute(a.clone()), n, &i).dim(),
                    homology(f, &RelativeFilteredPair::absolute(x.clone()), n, &i).dim(),
                    homology(f, &p, n, &i).dim(),
                );
                if n > 0 {
                    prop_assert_eq!(hx, ha + hxa);
                }
            }
        }
    }

    #[test]
    fn excision_and_direct_sum_agree(seed in any::<u64>(), f in field()) {
        let mut inst = Instance::fuzz(seed, 0);
        inst.excision = Fuzzer::new(seed).excision();
        let a7 = verify_axiom(f, AxiomId::A7, &inst).unwrap();
        let s1 = verify_axiom(f, AxiomId::S1, &inst).unwrap();
        prop_assert_eq!(a7.verdict, Verdict::Pass);
        prop_assert_eq!(s1.verdict, Verdict::Pass);
    }

    #[test]
    fn axioms_other_than_exactness_hold(seed in any::<u64>(), f in field()) {
        let inst = Instance::fuzz(seed, 1);
        for id in [AxiomId::A1, AxiomId::A2, AxiomId::A3, AxiomId::A5, AxiomId::A6, AxiomId::A7, AxiomId::S1, AxiomId::S3] {
            let rep = verify_axiom(f, id, &inst).unwrap();
            prop_assert!(rep.passed(), "{}", rep);
        }
        let a4 = verify_axiom(f, AxiomId::A4, &inst).unwrap();
        let s2 = verify_axiom(f, AxiomId::S2, &inst).unwrap();
        prop_assert_eq!(a4.verdict, s2.verdict);
        prop_assert_eq!(a4.witness.is_some(), a4.verdict == Verdict::Fail);
    }
}
