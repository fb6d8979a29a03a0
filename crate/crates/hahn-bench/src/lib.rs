//! Criterion benchmarks for `hahn-core`; see `benches/`.
