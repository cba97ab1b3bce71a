//! Quadratic-time square enumeration from longest-common-extension diagonals.
//!
//! Along diagonal `d` the extension `lce(i, i + d)` satisfies
//! `lce(i, i+d) = lce(i+1, i+1+d) + 1` when `w[i] = w[i+d]`, else `0`, so a
//! right-to-left sweep yields every value in O(1) each, exactly.
//!
//! * `xx` with `|x| = d` starts at `i` iff `lce(i, i + d) >= d`.
//! * That occurrence is the last one of its content iff no `j > i` has
//!   `lce(i, j) >= 2d`, i.e. iff `2d > reach[i]` where
//!   `reach[i] = max_{j > i} lce(i, j)`.
//!
//! Both passes touch each diagonal cell once: O(n^2) time, O(n) space.

use rayon::prelude::*;

use super::SquareOccurrence;

const PARALLEL_THRESHOLD: usize = 2048;

pub(super) fn last_occurrences(w: &[u8]) -> Vec<SquareOccurrence> {
    let n = w.len();
    let reach = right_reach(w);
    let half = n / 2;
    let per_root = |d: usize| -> Vec<SquareOccurrence> {
        let mut found = Vec::new();
        let mut run = 0usize;
        for i in (0..n - d).rev() {
            run = if w[i] == w[i + d] { run + 1 } else { 0 };
            if run >= d && 2 * d > reach[i] {
                found.push(SquareOccurrence {
                    position: i + 1,
                    root_length: d,
                });
            }
        }
        found
    };
    if n >= PARALLEL_THRESHOLD {
        (1..=half).into_par_iter().flat_map_iter(per_root).collect()
    } else {
        (1..=half).flat_map(per_root).collect()
    }
}

/// `reach[i] = max_{j > i} lce(i, j)`.
fn right_reach(w: &[u8]) -> Vec<usize> {
    let n = w.len();
    let sweep = |reach: &mut [usize], d: usize| {
        let mut run = 0usize;
        for i in (0..n - d).rev() {
            run = if w[i] == w[i + d] { run + 1 } else { 0 };
            if run > reach[i] {
                reach[i] = run;
            }
        }
    };
    if n >= PARALLEL_THRESHOLD {
        (1..n)
            .into_par_iter()
            .fold(
                || vec![0usize; n],
                |mut acc, d| {
                    sweep(&mut acc, d);
                    acc
                },
            )
            .reduce(
                || vec![0usize; n],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x = (*x).max(y));
                    a
                },
            )
    } else {
        let mut reach = vec![0usize; n];
        for d in 1..n {
            sweep(&mut reach, d);
        }
        reach
    }
}
