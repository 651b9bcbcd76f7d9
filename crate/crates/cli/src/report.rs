//! Multi-level verification and its JSON summary.

use foldbound::{verify_boundary, BoundarySystem, ExpansionCap, FoldingSystem, VerifyReport};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// One row of the JSON summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub system: String,
    pub level: u32,
    pub pass: bool,
    /// Length of the traced outer boundary.
    pub segments: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mismatch: Option<String>,
}

impl LevelRecord {
    pub fn new(system: &str, r: &VerifyReport) -> LevelRecord {
        LevelRecord {
            system: system.to_string(),
            level: r.level,
            pass: r.passed(),
            segments: r.loop_segments,
            mismatch: r.mismatch.as_ref().map(|m| m.to_string()),
        }
    }
}

#[derive(Debug)]
pub struct LevelRun {
    /// Reports for levels `0..reports.len()`.
    pub reports: Vec<VerifyReport>,
    /// The first level that could not be expanded within the cap.
    pub stopped: Option<(u32, foldbound::Error)>,
}

impl LevelRun {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(VerifyReport::passed)
    }
}

/// Verifies `tau` against `sys` at levels `0..=max_level`, in parallel,
/// stopping at the first level beyond the cap. `tau` need not be derived from
/// `sys`, which lets tests feed in corrupted rules.
pub fn verify_levels(
    sys: &FoldingSystem,
    tau: &BoundarySystem,
    max_level: u32,
    cap: ExpansionCap,
) -> LevelRun {
    let results: Vec<_> = (0..=max_level)
        .into_par_iter()
        .map(|n| verify_boundary(sys, tau, n, cap))
        .collect();
    let mut reports = Vec::new();
    for (n, r) in (0..).zip(results) {
        match r {
            Ok(report) => reports.push(report),
            Err(e) => {
                return LevelRun {
                    reports,
                    stopped: Some((n, e)),
                }
            }
        }
    }
    LevelRun {
        reports,
        stopped: None,
    }
}
