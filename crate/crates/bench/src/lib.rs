//! Benchmarks for the exact-arithmetic kernels live in `benches/`.
