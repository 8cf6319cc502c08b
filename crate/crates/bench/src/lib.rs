//! Criterion benchmarks for quiverlab live in `benches/`.
