//! Shared fixtures for the benchmarks.

use bicross_core::{canonical_pair, Field, MatchedPair};

pub fn fp(p: u64) -> Field {
    Field::prime(p).expect("odd prime")
}

pub fn canonical(field: Field, lambda: i64) -> MatchedPair {
    canonical_pair(field, &field.from_i64(lambda)).expect("canonical pair")
}
