//! The distinct squares starting inside one `X_k` block of `Y_{k,k+1}`.

use super::{A, B};
use crate::error::{Error, Result};
use crate::word::{Word, WordBuilder};

/// One set of consecutive distinct squares of equal root length.
///
/// Positions are 1-based within `X_k`. The square at `first + t` has the
/// root of the square at `first` rotated left by `t`. `root == None` marks
/// positions where no distinct square last-occurs; `count` is then the
/// number of such positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XkRow {
    pub first: usize,
    pub last: usize,
    pub count: usize,
    pub root: Option<Word>,
    pub root_length: usize,
    /// Root that actually last-occurs at `first`, when it differs from the
    /// tabulated `root`.
    pub corrected_root: Option<Word>,
}

impl XkRow {
    fn squares(first: usize, last: usize, count: usize, root: Word) -> XkRow {
        XkRow {
            first,
            last,
            count,
            root_length: root.len(),
            root: Some(root),
            corrected_root: None,
        }
    }

    fn none(first: usize, last: usize, count: usize) -> XkRow {
        XkRow {
            first,
            last,
            count,
            root: None,
            root_length: 0,
            corrected_root: None,
        }
    }

    /// Number of distinct squares the row contributes.
    pub fn square_count(&self) -> usize {
        if self.root.is_some() {
            self.count
        } else {
            0
        }
    }

    /// Root whose square last-occurs at `first`, after any correction.
    pub fn effective_root(&self) -> Option<&Word> {
        self.corrected_root.as_ref().or(self.root.as_ref())
    }
}

/// The seven rows for `X_k` as published, with `k - 1` in row three giving an
/// empty row at `k = 1`.
///
/// Row three is tabulated with root `a^{k-1} b a` (length `k + 1`). That
/// square does occur at positions `3k+3 ..= 4k+1`, but it recurs inside
/// `X_{k+1}`; the square that last-occurs there has root `a^{k-1} b a^k b`
/// (length `2k + 1`), recorded in `corrected_root`.
pub fn xk_square_table(k: usize) -> Result<Vec<XkRow>> {
    if k < 1 {
        return Err(Error::domain(format!("X_k table needs k >= 1 (got {k})")));
    }
    let a = |n: usize| WordBuilder::new().run(A, n);
    let row1 = a(k - 1)
        .run(B, 1)
        .run(A, k)
        .run(B, 1)
        .run(A, k - 1)
        .run(B, 1)
        .run(A, 1)
        .build();
    let row3 = a(k - 1).run(B, 1).run(A, 1).build();
    let row3_corrected = a(k - 1).run(B, 1).run(A, k).run(B, 1).build();
    let row4 = WordBuilder::new()
        .run(B, 1)
        .run(A, k)
        .run(B, 1)
        .run(A, k - 1)
        .build();
    let row6 = a(k - 1).run(B, 1).build();
    let row7 = a(k - 1).run(B, 1).run(A, k).run(B, 1).run(A, 2).build();

    let mut third = XkRow::squares(3 * k + 3, 4 * k + 1, k - 1, row3);
    if k >= 2 {
        third.corrected_root = Some(row3_corrected);
    }
    Ok(vec![
        XkRow::squares(1, 2 * k + 1, 2 * k + 1, row1),
        XkRow::none(2 * k + 2, 3 * k + 2, k + 1),
        third,
        XkRow::squares(4 * k + 2, 4 * k + 2, 1, row4),
        XkRow::none(4 * k + 3, 4 * k + 3, 1),
        XkRow::squares(4 * k + 4, 5 * k + 3, k, row6),
        XkRow::squares(5 * k + 4, 6 * k + 3, k, row7),
    ])
}
