//! Benchmark-only crate; see `benches/laws.rs`.
