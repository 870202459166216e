//! Benchmark-only package; see `benches/operators.rs`.
