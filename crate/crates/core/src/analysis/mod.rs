//! Structural checks on sequences and words: selfish-2's runs, necessary
//! conditions for runs of FS-double-squares, exhaustive existence search and
//! the optimal `Y_{i,j}` parameters.

mod catalog;
mod runs;
mod search;

use serde::Serialize;

pub use catalog::{
    describe_density, selfish_catalog, CatalogCheck, CatalogEntry, Erratum, ErratumField,
    FieldStatus, MIXED_LENGTHS_SEQUENCE, MIXED_LENGTHS_WORD,
};
pub use runs::{analyze_runs, Run, RunAnalysis, SelfishVerdict};
pub use search::{
    all_prefix_runs, exists_prefix_run, ExistenceQuery, SearchResult, SearchStatus,
    DEFAULT_BUDGET_MS,
};

use crate::constructions::yij_density;
use crate::engine::{Engine, SquareAnalysis};
use crate::error::{Error, Result};
use crate::word::Word;
use crate::Exact;

/// The four length conditions any run of `m` consecutive FS-double-squares
/// with fixed root lengths `|u| < |U|` must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunConditions {
    /// `|U| + m <= 2|u|`
    pub fits_in_double: bool,
    /// `|U| >= |u| + m + 1`
    pub gap_exceeds_run: bool,
    /// `|U| >= 3m + 2`
    pub long_root_bound: bool,
    /// `|u| >= 2m + 1`
    pub short_root_bound: bool,
}

impl RunConditions {
    pub fn all(&self) -> bool {
        self.fits_in_double && self.gap_exceeds_run && self.long_root_bound && self.short_root_bound
    }
}

/// Evaluates the necessary conditions. They are not sufficient; see
/// [`exists_prefix_run`] for the exhaustive check.
pub fn check_run_conditions(m: usize, len_u: usize, len_big_u: usize) -> Result<RunConditions> {
    if m < 1 || len_u < 1 || len_big_u <= len_u {
        return Err(Error::domain(format!(
            "need m >= 1 and 1 <= |u| < |U| (got m = {m}, |u| = {len_u}, |U| = {len_big_u})"
        )));
    }
    Ok(RunConditions {
        fits_in_double: len_big_u + m <= 2 * len_u,
        gap_exceeds_run: len_big_u > len_u + m,
        long_root_bound: len_big_u >= 3 * m + 2,
        short_root_bound: len_u > 2 * m,
    })
}

/// A square right after an FS-double-square whose root length is not allowed there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct NeighborViolation {
    pub position: usize,
    #[serde(rename = "len_u")]
    pub len_u: usize,
    #[serde(rename = "len_U")]
    pub len_big_u: usize,
    pub offending_root_length: usize,
}

/// If `(u, U)` is an FS-double-square at `i`, any square last-occurring at
/// `i + 1` has root length `|u|`, `|U|` or at least `2|u|`. Returns every
/// counterexample in `w` (none are expected).
pub fn check_neighbor_lemma(w: &Word, engine: Engine) -> Result<Vec<NeighborViolation>> {
    let analysis = SquareAnalysis::new(w, engine)?;
    let mut violations = Vec::new();
    for fs in analysis.fs_positions() {
        let (lu, lbu) = (fs.square.u.len(), fs.square.big_u.len());
        for occ in analysis.at(fs.position + 1) {
            let l = occ.root_length;
            if l != lu && l != lbu && l < 2 * lu {
                violations.push(NeighborViolation {
                    position: fs.position,
                    len_u: lu,
                    len_big_u: lbu,
                    offending_root_length: l,
                });
            }
        }
    }
    Ok(violations)
}

/// The `i` in `1..j` maximising the density of `Y_{i,j}`, compared exactly.
/// Ties go to the smaller `i`.
pub fn best_i_for_j(j: usize) -> Result<usize> {
    if j < 2 {
        return Err(Error::domain(format!("need j >= 2 (got {j})")));
    }
    let mut best = (1, yij_density::<Exact>(1, j)?);
    for i in 2..j {
        let d = yij_density::<Exact>(i, j)?;
        if d > best.1 {
            best = (i, d);
        }
    }
    Ok(best.0)
}
