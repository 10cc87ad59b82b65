//! Fixtures shared by the benchmarks.

use phax_core::filtered::{standard_boundary, standard_simplex};
use phax_core::random::Fuzzer;
use phax_core::{Rational, RelativeFilteredPair};

/// Seeded random pairs of the size used by the fuzz suites.
pub fn fuzzed_pairs(seed: u64, count: usize) -> Vec<RelativeFilteredPair> {
    let mut z = Fuzzer::new(seed);
    (0..count).map(|_| z.pair()).collect()
}

/// `(S^q, boundary of S^q)` with every simplex at `alpha`.
pub fn simplex_pair(q: usize, alpha: i64) -> RelativeFilteredPair {
    let a = Rational::from_integer(alpha);
    RelativeFilteredPair::new(standard_simplex(q, a), standard_boundary(q, a))
        .expect("boundary lies inside the simplex")
}
