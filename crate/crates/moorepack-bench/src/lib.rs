//! Criterion benchmarks for the moorepack pipelines live under `benches/`.
//! Run them with `cargo bench -p moorepack-bench`.
