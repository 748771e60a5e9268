//! Benchmarks live in `benches/`; run them with `cargo bench -p robin-bench`.
