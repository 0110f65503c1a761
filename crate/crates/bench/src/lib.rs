//! Criterion benchmarks for `hayman-core`; see `benches/`.
