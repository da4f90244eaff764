//! Criterion benchmarks for the exact kernels live in `benches/`; this
//! crate intentionally exports nothing.
