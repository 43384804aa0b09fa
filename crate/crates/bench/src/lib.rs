//! Criterion benchmarks for kmt-core; see `benches/`.
