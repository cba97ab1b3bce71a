#![allow(dead_code)]

/// Last-occurrence squares by the definition: every factor `xx` is compared
/// against every later factor of the same length. Returns `(start, root_length)`
/// pairs, 1-based, sorted.
pub fn naive_last_occurrences(w: &[u8]) -> Vec<(usize, usize)> {
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n {
        for d in 1..=(n - i) / 2 {
            let sq = &w[i..i + 2 * d];
            if sq[..d] != sq[d..] {
                continue;
            }
            let later = (i + 1..=n - 2 * d).any(|j| &w[j..j + 2 * d] == sq);
            if !later {
                out.push((i + 1, d));
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn naive_sequence(w: &[u8]) -> String {
    let mut digits = vec![0u8; w.len()];
    for (p, _) in naive_last_occurrences(w) {
        digits[p - 1] += 1;
    }
    digits.iter().map(|d| char::from(b'0' + d)).collect()
}

pub fn letters(text: &str) -> Vec<u8> {
    text.bytes().map(|b| b - b'a').collect()
}
