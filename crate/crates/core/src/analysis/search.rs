//! Exhaustive search for words that open with a run of FS-double-squares of
//! fixed root lengths.
//!
//! The two prefix squares at each of the first `m` positions force many
//! letters to be equal. Positions are merged into equality classes first and
//! only class assignments are enumerated, in lexicographic order, so the
//! first hit is the lexicographically least witness.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::engine::{Engine, SquareAnalysis};
use crate::error::{Error, Result};
use crate::word::{Word, MAX_ALPHABET};

/// Wall-clock budget used when the caller does not give one.
pub const DEFAULT_BUDGET_MS: u64 = 30_000;

/// Does some word of `scan_length` letters over `alphabet_size` letters have
/// FS-double-square positions `1..=m`, each with roots of lengths `len_u` and `len_big_u`?
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExistenceQuery {
    pub m: usize,
    pub len_u: usize,
    #[serde(rename = "len_U")]
    pub len_big_u: usize,
    pub alphabet_size: usize,
    pub scan_length: usize,
}

impl ExistenceQuery {
    pub fn new(
        m: usize,
        len_u: usize,
        len_big_u: usize,
        alphabet_size: usize,
        scan_length: usize,
    ) -> Result<Self> {
        if m < 1 {
            return Err(Error::domain("m must be >= 1"));
        }
        if !(len_u < len_big_u && len_big_u < 2 * len_u) {
            return Err(Error::domain(format!(
                "need |u| < |U| < 2|u| (got {len_u}, {len_big_u})"
            )));
        }
        if !(2..=MAX_ALPHABET).contains(&alphabet_size) {
            return Err(Error::domain(format!(
                "alphabet size {alphabet_size} outside 2..={MAX_ALPHABET}"
            )));
        }
        let minimal = Self::minimal_length(m, len_big_u);
        if scan_length < minimal {
            return Err(Error::domain(format!(
                "scan length {scan_length} cannot hold the prefix run (needs {minimal})"
            )));
        }
        Ok(ExistenceQuery {
            m,
            len_u,
            len_big_u,
            alphabet_size,
            scan_length,
        })
    }

    /// Query at the shortest length that can hold the run, `2|U| + m - 1`.
    pub fn at_minimal_length(
        m: usize,
        len_u: usize,
        len_big_u: usize,
        alphabet_size: usize,
    ) -> Result<Self> {
        Self::new(
            m,
            len_u,
            len_big_u,
            alphabet_size,
            Self::minimal_length(m, len_big_u),
        )
    }

    fn minimal_length(m: usize, len_big_u: usize) -> usize {
        2 * len_big_u + m.saturating_sub(1)
    }

    /// Whether `w` opens with the queried run.
    pub fn matches(&self, w: &Word, engine: Engine) -> Result<bool> {
        if w.len() < Self::minimal_length(self.m, self.len_big_u) {
            return Ok(false);
        }
        let analysis = SquareAnalysis::new(w, engine)?;
        Ok((1..=self.m).all(|p| {
            let at = analysis.at(p);
            at.len() == 2 && at[0].root_length == self.len_u && at[1].root_length == self.len_big_u
        }))
    }

    /// Class id per position (first-occurrence numbering) and the class count.
    fn forced_classes(&self) -> (Vec<usize>, usize) {
        let n = self.scan_length;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for start in 0..self.m {
            for len in [self.len_u, self.len_big_u] {
                for t in 0..len {
                    let (x, y) = (
                        find(&mut parent, start + t),
                        find(&mut parent, start + t + len),
                    );
                    if x != y {
                        parent[x.max(y)] = x.min(y);
                    }
                }
            }
        }
        let mut ids = vec![usize::MAX; n];
        let mut next = 0;
        let class_of = (0..n)
            .map(|pos| {
                let root = find(&mut parent, pos);
                if ids[root] == usize::MAX {
                    ids[root] = next;
                    next += 1;
                }
                ids[root]
            })
            .collect();
        (class_of, next)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum SearchStatus {
    Found,
    NotFound,
    Inconclusive,
}

/// Outcome of [`exists_prefix_run`], including the scope actually searched.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SearchResult {
    pub query: ExistenceQuery,
    #[serde(rename = "searched_alphabet")]
    pub searched_alphabet: usize,
    #[serde(rename = "searched_length")]
    pub searched_length: usize,
    pub status: SearchStatus,
    /// `None` when the budget ran out before the search space was exhausted.
    pub found: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Word>,
    pub candidates: u64,
    pub wall_time_ms: u64,
}

/// Visits every class assignment in lexicographic order until `visit` breaks
/// or the budget runs out. Returns `(complete, candidates)`.
fn scan(
    q: &ExistenceQuery,
    budget: Duration,
    mut visit: impl FnMut(&Word) -> Result<ControlFlow<()>>,
) -> Result<(bool, u64)> {
    let started = Instant::now();
    let (class_of, classes) = q.forced_classes();
    let mut assign = vec![0u8; classes];
    let mut candidates = 0u64;
    loop {
        let symbols: Vec<u8> = class_of.iter().map(|&c| assign[c]).collect();
        let w = Word::new(symbols, q.alphabet_size)?;
        candidates += 1;
        if visit(&w)?.is_break() {
            return Ok((true, candidates));
        }
        // odometer, last class least significant
        let mut idx = classes;
        loop {
            if idx == 0 {
                return Ok((true, candidates));
            }
            idx -= 1;
            if usize::from(assign[idx]) + 1 < q.alphabet_size {
                assign[idx] += 1;
                break;
            }
            assign[idx] = 0;
        }
        if candidates.is_multiple_of(1024) && started.elapsed() > budget {
            return Ok((false, candidates));
        }
    }
}

/// Searches all words of `q.scan_length` letters for the queried prefix run.
///
/// A returned witness is re-checked with the oracle engine before being
/// reported; a disagreement is an internal error.
pub fn exists_prefix_run(q: &ExistenceQuery, budget: Duration) -> Result<SearchResult> {
    let started = Instant::now();
    let mut witness = None;
    let (complete, candidates) = scan(q, budget, |w| {
        if q.matches(w, Engine::Fast)? {
            witness = Some(w.clone());
            Ok(ControlFlow::Break(()))
        } else {
            Ok(ControlFlow::Continue(()))
        }
    })?;
    if let Some(w) = &witness {
        if !q.matches(w, Engine::Oracle)? {
            return Err(Error::Internal(format!(
                "witness {w} accepted by the fast engine but rejected by the oracle"
            )));
        }
    }
    let status = match (&witness, complete) {
        (Some(_), _) => SearchStatus::Found,
        (None, true) => SearchStatus::NotFound,
        (None, false) => SearchStatus::Inconclusive,
    };
    Ok(SearchResult {
        query: *q,
        searched_alphabet: q.alphabet_size,
        searched_length: q.scan_length,
        status,
        found: match status {
            SearchStatus::Found => Some(true),
            SearchStatus::NotFound => Some(false),
            SearchStatus::Inconclusive => None,
        },
        witness,
        candidates,
        wall_time_ms: started.elapsed().as_millis() as u64,
    })
}

/// Every word of `q.scan_length` letters opening with the queried run, in
/// lexicographic order. `None` if the budget ran out.
pub fn all_prefix_runs(q: &ExistenceQuery, budget: Duration) -> Result<Option<Vec<Word>>> {
    let mut words = Vec::new();
    let (complete, _) = scan(q, budget, |w| {
        if q.matches(w, Engine::Fast)? {
            words.push(w.clone());
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(complete.then_some(words))
}
