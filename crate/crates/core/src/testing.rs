//! Generators shared by unit tests.

use std::collections::BTreeMap;

use proptest::prelude::*;

use crate::filtered::FilteredSet;
use crate::simplex::Simplex;
use crate::value::FiltValue;

/// Random filtered set on up to five vertices: values on random top
/// simplices, faces take the minimum over cofaces.
pub(crate) fn arb_filtered() -> impl Strategy<Value = FilteredSet> {
    prop::collection::vec((prop::collection::btree_set(0usize..5, 1..4), 0i64..4), 1..6).prop_map(|tops| {
        let names = ["a", "b", "c", "d", "e"];
        let mut values: BTreeMap<Simplex, i64> = BTreeMap::new();
        for (vs, val) in tops {
            let top = Simplex::new(vs.iter().map(|i| names[*i])).unwrap();
            for face in top.faces() {
                let e = values.entry(face).or_insert(val);
                *e = (*e).min(val);
            }
        }
        FilteredSet::from_simplices(values.into_iter().map(|(s, v)| (s, FiltValue::int(v)))).unwrap()
    })
}
