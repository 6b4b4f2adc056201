//! Benchmark-only crate; see `benches/complexity.rs`.

pub use motrec_core as core;
