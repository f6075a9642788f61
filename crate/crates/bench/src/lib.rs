//! Criterion benchmarks for antichain-core live in `benches/`.
