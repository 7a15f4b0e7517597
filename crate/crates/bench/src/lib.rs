//! Inputs shared by the benchmarks.

use fitfunc_core::{catalog, Group};

/// Catalog groups spanning the sizes the suites see, smallest first.
pub const BENCH_GROUPS: &[&str] = &["S4", "SL(2,3)", "D8xS3", "S5", "C3xA5", "S3xA5"];

pub fn groups() -> Vec<(&'static str, Group)> {
    BENCH_GROUPS
        .iter()
        .map(|&n| (n, catalog::named(n)))
        .collect()
}
