//! Benchmarks for `dnacyclic` live in `benches/`.
