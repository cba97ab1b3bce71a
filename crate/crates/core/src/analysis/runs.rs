use serde::Serialize;

use crate::engine::SquareSequence;
use crate::error::{Error, Result};

/// A maximal block of equal digits; `start` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Run {
    pub digit: u8,
    pub start: usize,
    pub length: usize,
}

/// Strong selfish-rule verdict for one run of 2's.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SelfishVerdict {
    pub start: usize,
    pub two_run_length: usize,
    /// Length of the run right after the 2's if it is a run of 0's, else 0.
    pub following_zero_run_length: usize,
    pub strong_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RunAnalysis {
    pub runs: Vec<Run>,
    pub selfish_verdicts: Vec<SelfishVerdict>,
    /// Every 2 has at least one 0 somewhere to its right.
    pub weak_ok: bool,
}

impl RunAnalysis {
    /// Strong rule holds on every run of 2's.
    pub fn strong_ok(&self) -> bool {
        self.selfish_verdicts.iter().all(|v| v.strong_ok)
    }
}

/// Splits `s` into runs and applies both selfish rules.
///
/// The strong rule asks that a run of 2's be immediately followed by a run
/// of 0's at least twice as long; the weak rule only asks for some 0 to the
/// right of each 2.
pub fn analyze_runs(s: &SquareSequence) -> Result<RunAnalysis> {
    if s.is_empty() {
        return Err(Error::domain("run analysis of an empty sequence"));
    }
    let d = s.digits();
    let mut runs: Vec<Run> = Vec::new();
    for (idx, &digit) in d.iter().enumerate() {
        match runs.last_mut() {
            Some(run) if run.digit == digit => run.length += 1,
            _ => runs.push(Run {
                digit,
                start: idx + 1,
                length: 1,
            }),
        }
    }
    let selfish_verdicts = runs
        .iter()
        .enumerate()
        .filter(|(_, r)| r.digit == 2)
        .map(|(idx, r)| {
            let following = runs
                .get(idx + 1)
                .filter(|next| next.digit == 0)
                .map_or(0, |next| next.length);
            SelfishVerdict {
                start: r.start,
                two_run_length: r.length,
                following_zero_run_length: following,
                strong_ok: following >= 2 * r.length,
            }
        })
        .collect();
    let last_two = d.iter().rposition(|&x| x == 2);
    let last_zero = d.iter().rposition(|&x| x == 0);
    let weak_ok = match (last_two, last_zero) {
        (None, _) => true,
        (Some(t), Some(z)) => z > t,
        (Some(_), None) => false,
    };
    Ok(RunAnalysis {
        runs,
        selfish_verdicts,
        weak_ok,
    })
}
