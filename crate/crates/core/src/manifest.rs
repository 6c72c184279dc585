//! Pinned census values, reproduced by the test suite and printed by
//! `switchsep --version`.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PinnedCensus {
    pub q: u32,
    pub n: usize,
    pub classes: u64,
    pub critical_classes: usize,
}

pub const PINNED: &[PinnedCensus] = &[
    PinnedCensus { q: 2, n: 3, classes: 2, critical_classes: 0 },
    PinnedCensus { q: 3, n: 4, classes: 9, critical_classes: 0 },
    PinnedCensus { q: 2, n: 5, classes: 64, critical_classes: 12 },
    PinnedCensus { q: 2, n: 6, classes: 1024, critical_classes: 0 },
    PinnedCensus { q: 2, n: 7, classes: 32768, critical_classes: 720 },
    PinnedCensus { q: 3, n: 5, classes: 243, critical_classes: 0 },
    PinnedCensus { q: 3, n: 6, classes: 19683, critical_classes: 0 },
    PinnedCensus { q: 4, n: 5, classes: 2048, critical_classes: 12 },
    PinnedCensus { q: 5, n: 5, classes: 3125, critical_classes: 0 },
];

#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub name: &'static str,
    pub version: &'static str,
    pub pinned: &'static [PinnedCensus],
}

pub fn manifest() -> Manifest {
    Manifest { name: env!("CARGO_PKG_NAME"), version: env!("CARGO_PKG_VERSION"), pinned: PINNED }
}
