//! Definition-driven square enumeration. Direct letter comparison only.

use std::collections::HashMap;

use super::SquareOccurrence;

/// For every root length and start, test the two halves letter by letter;
/// equal root contents of one length keep the largest start.
pub(super) fn last_occurrences(w: &[u8]) -> Vec<SquareOccurrence> {
    let n = w.len();
    let mut out = Vec::new();
    for len in 1..=n / 2 {
        let mut last: HashMap<&[u8], usize> = HashMap::new();
        for start in 0..=n - 2 * len {
            let (left, right) = (&w[start..start + len], &w[start + len..start + 2 * len]);
            if left == right {
                // ascending starts: the final insert per content is its maximum
                last.insert(left, start);
            }
        }
        out.extend(last.into_values().map(|start| SquareOccurrence {
            position: start + 1,
            root_length: len,
        }));
    }
    out
}
