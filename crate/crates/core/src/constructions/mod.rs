//! Extremal word families and their closed-form predictions.
//!
//! Letter `a` is id 0 and `b` is id 1 throughout. Every builder returns a
//! [`Prediction`] carrying the exact sequence, count and density it should
//! produce, so checking a construction is a plain equality test against the
//! engine.

mod spec;
mod xk_table;

use crate::engine::{FsFactorization, SquareSequence};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::word::{Word, WordBuilder};
use crate::Rational;

pub use spec::ConstructionSpec;
pub use xk_table::{xk_square_table, XkRow};

pub(crate) const A: u8 = 0;
pub(crate) const B: u8 = 1;

/// The FS-double-square prefix a construction guarantees: positions `1..=m`,
/// each with roots of lengths `len_u` and `len_big_u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FsPrefix {
    pub m: usize,
    pub len_u: usize,
    pub len_big_u: usize,
}

/// A constructed word plus what the closed forms say about it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub word: Word,
    pub expected_sequence: Option<SquareSequence>,
    pub expected_count: Option<u64>,
    pub expected_length: usize,
    pub expected_density: Option<Rational>,
    pub expected_fs_prefix: Option<FsPrefix>,
}

impl Prediction {
    fn new(word: Word, expected_length: usize) -> Result<Self> {
        if word.len() != expected_length {
            return Err(Error::Internal(format!(
                "constructed word has length {}, closed form says {expected_length}",
                word.len()
            )));
        }
        Ok(Prediction {
            word,
            expected_sequence: None,
            expected_count: None,
            expected_length,
            expected_density: None,
            expected_fs_prefix: None,
        })
    }

    fn with_counts(mut self, sequence: SquareSequence, count: u64) -> Result<Self> {
        if sequence.len() != self.expected_length || sequence.count() != count {
            return Err(Error::Internal(format!(
                "predicted sequence (length {}, sum {}) disagrees with length {} / count {count}",
                sequence.len(),
                sequence.count(),
                self.expected_length
            )));
        }
        self.expected_density = Some(Rational::new(count as i64, self.expected_length as i64));
        self.expected_sequence = Some(sequence);
        self.expected_count = Some(count);
        Ok(self)
    }

    fn with_fs_prefix(mut self, m: usize, len_u: usize, len_big_u: usize) -> Self {
        self.expected_fs_prefix = Some(FsPrefix {
            m,
            len_u,
            len_big_u,
        });
        self
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg()))
    }
}

fn digits(runs: &[(u8, usize)]) -> SquareSequence {
    let mut d = Vec::new();
    for &(digit, count) in runs {
        d.extend(std::iter::repeat_n(digit, count));
    }
    SquareSequence::from_digits(d).expect("digits are 0..=2")
}

/// `w_m = (a^{m-1} b a a^{m-1} b a^{m-1} b a)^2 a^{m-1}`, length `7m + 3`.
pub fn build_wm(m: usize) -> Result<Prediction> {
    require(m >= 1, || format!("w_m needs m >= 1 (got {m})"))?;
    let root = WordBuilder::new()
        .run(A, m - 1)
        .run(B, 1)
        .run(A, m)
        .run(B, 1)
        .run(A, m - 1)
        .run(B, 1)
        .run(A, 1)
        .build();
    let word = WordBuilder::new()
        .word(&root)
        .word(&root)
        .run(A, m - 1)
        .build();
    Prediction::new(word, 7 * m + 3)?
        .with_counts(expected_sequence_wm(m)?, expected_count_wm(m)?)
        .map(|p| p.with_fs_prefix(m, 2 * m + 1, 3 * m + 2))
}

/// `s(w_m) = 2^m 0^{2m} 1^{m+1} 0 0 1^m 0^{2 floor((m+1)/2)} (10)^{floor(m/2)}`.
pub fn expected_sequence_wm(m: usize) -> Result<SquareSequence> {
    require(m >= 1, || format!("s(w_m) needs m >= 1 (got {m})"))?;
    let head = digits(&[
        (2, m),
        (0, 2 * m),
        (1, m + 1),
        (0, 2),
        (1, m),
        (0, 2 * m.div_ceil(2)),
    ]);
    let tail = digits(&[(1, 1), (0, 1)]);
    Ok((0..m / 2).fold(head, |acc, _| acc.concat(&tail)))
}

/// Distinct squares of `w_m`: `4m + floor(m/2) + 1`.
pub fn expected_count_wm(m: usize) -> Result<u64> {
    require(m >= 1, || format!("w_m needs m >= 1 (got {m})"))?;
    Ok((4 * m + m / 2 + 1) as u64)
}

/// `d(w_m)`: `(4.5m + 1)/(7m + 3)` for even `m`, `(4.5m + 0.5)/(7m + 3)` for odd `m`.
pub fn density_wm_formula<T: Scalar>(m: usize) -> Result<T> {
    require(m >= 1, || format!("d(w_m) needs m >= 1 (got {m})"))?;
    let m = m as u64;
    let twice_numerator = if m.is_multiple_of(2) {
        9 * m + 2
    } else {
        9 * m + 1
    };
    Ok(T::ratio(twice_numerator, 2) / T::from_count(7 * m + 3))
}

/// Limit of `d(w_m)` as `m` grows: `9/14`.
pub fn wm_density_limit<T: Scalar>() -> T {
    T::ratio(9, 14)
}

/// Probability that a uniformly random word of length `7m + 3` starts with
/// the `w_m` run: `(|A|^2 - |A|) / |A|^{7m+3}`.
pub fn prefix_run_probability<T: Scalar>(m: usize, alphabet_size: usize) -> Result<T> {
    require(m >= 1, || format!("m must be >= 1 (got {m})"))?;
    require(alphabet_size >= 2, || {
        format!("alphabet needs >= 2 letters (got {alphabet_size})")
    })?;
    let a = T::from_count(alphabet_size as u64);
    let favourable = T::from_count((alphabet_size * alphabet_size - alphabet_size) as u64);
    Ok(favourable / num_traits::pow(a, 7 * m + 3))
}

/// Generalization to root lengths `2l + 1` and `3l + 2`:
/// `w = U_1^2 a^{m-1}` with `u_1 = a^{m-1} α a a^{m-1} α`, `U_1 = u_1 a^{m-1} α a`,
/// where `α = α_2 ... α_{l-m+2}` are the `l - m + 1` letter choices, none equal to `a`.
/// `None` picks all `b`.
pub fn build_wm_ell(m: usize, ell: usize, letters: Option<&[u8]>) -> Result<Prediction> {
    require(m >= 1, || format!("m must be >= 1 (got {m})"))?;
    require(ell >= m, || {
        format!("l must be >= m (got l = {ell}, m = {m})")
    })?;
    let width = ell - m + 1;
    let alpha: Vec<u8> = match letters {
        Some(l) => l.to_vec(),
        None => vec![B; width],
    };
    if alpha.len() != width {
        return Err(Error::precondition(format!(
            "need l - m + 1 = {width} letter choices, got {}",
            alpha.len()
        )));
    }
    if let Some(pos) = alpha.iter().position(|&c| c == A) {
        return Err(Error::precondition(format!(
            "letter choice {} equals `a`; every choice must differ from the padding letter",
            pos + 2
        )));
    }
    let alpha = Word::from_ids(alpha);
    let u1 = WordBuilder::new()
        .run(A, m - 1)
        .word(&alpha)
        .run(A, m)
        .word(&alpha)
        .build();
    let big_u1 = WordBuilder::new()
        .word(&u1)
        .run(A, m - 1)
        .word(&alpha)
        .run(A, 1)
        .build();
    let word = WordBuilder::new()
        .word(&big_u1)
        .word(&big_u1)
        .run(A, m - 1)
        .build();
    let pred = Prediction::new(word, 6 * ell + m + 3)?.with_fs_prefix(m, 2 * ell + 1, 3 * ell + 2);
    if ell == m && alpha.symbols().iter().all(|&c| c == B) {
        let wm = build_wm(m)?;
        debug_assert_eq!(wm.word, pred.word);
        return Ok(wm);
    }
    Ok(pred)
}

/// `(v1^{e1} v2 v1^{e2})^2 a^{m-1}` with `v1 = a^{m-1} Z a`, `v2 = a^{m-1} Z`.
pub fn build_zword(m: usize, z: &Word, e1: usize, e2: usize) -> Result<Prediction> {
    let f = zword_factorization(m, z, e1, e2)?;
    let (lu, lbig) = (f.u().len(), f.big_u().len());
    let word = f.big_u().pow(2).concat(&Word::from_ids(vec![A; m - 1]));
    let expected = 2 * lbig + m - 1;
    Ok(Prediction::new(word, expected)?.with_fs_prefix(m, lu, lbig))
}

fn zword_factorization(m: usize, z: &Word, e1: usize, e2: usize) -> Result<FsFactorization> {
    require(m >= 1, || format!("m must be >= 1 (got {m})"))?;
    if z.is_empty() {
        return Err(Error::precondition("Z must be non-empty"));
    }
    let v2 = WordBuilder::new().run(A, m - 1).word(z).build();
    let v1 = WordBuilder::new().word(&v2).run(A, 1).build();
    if !v1.is_primitive()? {
        return Err(Error::precondition(format!(
            "a^(m-1) Z a = {v1} must be primitive"
        )));
    }
    FsFactorization::new(v1, v2, e1, e2)
}

/// The roots `(u_i, U_i)` a Z-word carries at position `i`:
/// `u_i = (a^{m-i} Z a^i)^{e1} a^{m-i} Z a^{i-1}`, `U_i = u_i (a^{m-i} Z a^i)^{e2}`.
pub fn zword_roots(m: usize, z: &Word, e1: usize, e2: usize, i: usize) -> Result<(Word, Word)> {
    zword_factorization(m, z, e1, e2)?;
    require((1..=m).contains(&i), || {
        format!("position {i} outside 1..={m}")
    })?;
    let v1i = WordBuilder::new().run(A, m - i).word(z).run(A, i).build();
    let v2i = WordBuilder::new()
        .run(A, m - i)
        .word(z)
        .run(A, i - 1)
        .build();
    let u = v1i.pow(e1).concat(&v2i);
    let big_u = u.concat(&v1i.pow(e2));
    Ok((u, big_u))
}

/// `X_k = a^{k-1} b a a^{k-1} b a^{k-1} b a a^{k-1} b a a^{k-1} b a^{k-1} b`, length `6k + 3`.
pub fn build_xk(k: usize) -> Result<Word> {
    require(k >= 1, || format!("X_k needs k >= 1 (got {k})"))?;
    Ok(xk_builder(WordBuilder::new(), k).build())
}

fn xk_builder(b: WordBuilder, k: usize) -> WordBuilder {
    b.run(A, k - 1)
        .run(B, 1)
        .run(A, k)
        .run(B, 1)
        .run(A, k - 1)
        .run(B, 1)
        .run(A, k)
        .run(B, 1)
        .run(A, k)
        .run(B, 1)
        .run(A, k - 1)
        .run(B, 1)
}

fn require_pair(i: usize, j: usize) -> Result<()> {
    require(1 <= i && i < j, || {
        format!("need 1 <= i < j (got i = {i}, j = {j})")
    })
}

/// `|Y_{i,j}| = 7j + 3 + 3j^2 - 3i^2`.
pub fn yij_length(i: usize, j: usize) -> Result<u64> {
    require_pair(i, j)?;
    let (i, j) = (i as u64, j as u64);
    Ok(7 * j + 3 + 3 * j * j - 3 * i * i)
}

/// `4j + floor(j/2) + 1 + (5j^2 - 3j - 5i^2 + 3i)/2`.
pub fn yij_count_formula(i: usize, j: usize) -> Result<u64> {
    require_pair(i, j)?;
    let (i, j) = (i as u64, j as u64);
    let twice = 5 * j * j + 3 * i - 3 * j - 5 * i * i;
    debug_assert_eq!(twice % 2, 0);
    Ok(4 * j + j / 2 + 1 + twice / 2)
}

/// Closed-form density of `Y_{i,j}`.
pub fn yij_density<T: Scalar>(i: usize, j: usize) -> Result<T> {
    Ok(T::ratio(yij_count_formula(i, j)?, yij_length(i, j)?))
}

/// `1^{2k+1} 0^{k+1} 1^k 0 1^{2k}`, the sequence of one `X_k` block inside `Y_{i,j}`.
pub fn xk_block_sequence(k: usize) -> Result<SquareSequence> {
    require(k >= 1, || format!("X_k needs k >= 1 (got {k})"))?;
    Ok(digits(&[
        (1, 2 * k + 1),
        (0, k + 1),
        (1, k),
        (0, 1),
        (1, 2 * k),
    ]))
}

/// Blocks for `k = i .. j-1` followed by `s(w_j)`.
pub fn expected_sequence_yij(i: usize, j: usize) -> Result<SquareSequence> {
    require_pair(i, j)?;
    let mut seq = SquareSequence::from_digits(Vec::new())?;
    for k in i..j {
        seq = seq.concat(&xk_block_sequence(k)?);
    }
    Ok(seq.concat(&expected_sequence_wm(j)?))
}

/// `Y_{i,j} = X_i X_{i+1} ... X_j a a^{j-1}`.
pub fn build_yij(i: usize, j: usize) -> Result<Prediction> {
    require_pair(i, j)?;
    let builder = (i..=j).fold(WordBuilder::new(), xk_builder);
    let word = builder.run(A, j).build();
    Prediction::new(word, yij_length(i, j)? as usize)?
        .with_counts(expected_sequence_yij(i, j)?, yij_count_formula(i, j)?)
}

/// `(v1^{e1} v2 v1^{e2})^2 a^{tail}`.
pub fn build_raw_fs(f: &FsFactorization, tail: usize) -> Result<Prediction> {
    let word = crate::engine::expand_fs(f)?.concat(&Word::from_ids(vec![A; tail]));
    let expected = 2 * f.big_u().len() + tail;
    Prediction::new(word, expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{Engine, SquareAnalysis};
    use crate::Exact;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    /// Independent instantiation of the w_m template by string formatting.
    fn wm_text(m: usize) -> String {
        let a = "a".repeat(m - 1);
        let root = format!("{a}ba{a}b{a}ba");
        format!("{root}{root}{a}")
    }

    #[test]
    fn wm_examples() {
        assert_eq!(build_wm(1).unwrap().word.to_text(), "babbababba");
        assert_eq!(build_wm(2).unwrap().word.to_text(), "abaababaabaababaa");
        assert_eq!(build_wm(3).unwrap().word.len(), 24);
        for m in 1..=30 {
            assert_eq!(build_wm(m).unwrap().word.to_text(), wm_text(m));
        }
        assert!(matches!(build_wm(0), Err(Error::Domain(_))));
    }

    #[test]
    fn wm_sequence_examples() {
        assert_eq!(
            expected_sequence_wm(2).unwrap().to_string(),
            "22000011100110010"
        );
        assert_eq!(expected_sequence_wm(1).unwrap().to_string(), "2001100100");
        assert_eq!(
            expected_sequence_wm(3).unwrap().to_string(),
            "222000000111100111000010"
        );
        let oracle = SquareAnalysis::new(&build_wm(3).unwrap().word, Engine::Oracle).unwrap();
        assert_eq!(oracle.sequence(), expected_sequence_wm(3).unwrap());
    }

    #[test]
    fn wm_density_examples() {
        assert_eq!(
            density_wm_formula::<Rational>(2).unwrap(),
            Rational::new(10, 17)
        );
        assert_eq!(
            density_wm_formula::<Rational>(1).unwrap(),
            Rational::new(5, 10)
        );
        let oracle = SquareAnalysis::new(&w("babbababba"), Engine::Oracle).unwrap();
        assert_eq!(oracle.distinct_count(), 5);
        let far: f64 = density_wm_formula(100_000).unwrap();
        assert!((far - 0.643).abs() < 5e-4);
        assert_eq!(wm_density_limit::<Rational>(), Rational::new(9, 14));
        for m in 1..=40 {
            let exact: Exact = density_wm_formula(m).unwrap();
            let p = build_wm(m).unwrap();
            assert_eq!(
                exact,
                Exact::ratio(p.expected_count.unwrap(), (7 * m + 3) as u64)
            );
        }
    }

    #[test]
    fn probability_examples() {
        assert_eq!(
            prefix_run_probability::<Exact>(1, 2).unwrap(),
            Exact::ratio(1, 512)
        );
        assert_eq!(
            prefix_run_probability::<Exact>(1, 3).unwrap(),
            Exact::ratio(6, 59049)
        );
        for m in 1..=12 {
            let p: Exact = prefix_run_probability(m, 2).unwrap();
            let expected = Exact::new(
                1.into(),
                num_bigint::BigInt::from(2).pow((7 * m + 2) as u32),
            );
            assert_eq!(p, expected);
        }
        assert!(prefix_run_probability::<f64>(1, 1).is_err());
    }

    #[test]
    fn wm_ell_examples() {
        for m in 1..=6 {
            assert_eq!(build_wm_ell(m, m, None).unwrap(), build_wm(m).unwrap());
        }
        let p = build_wm_ell(1, 2, Some(&[B, B])).unwrap();
        assert_eq!(p.word.len(), 16);
        assert_eq!(p.word.prefix(5).to_text(), "bbabb");
        let a = SquareAnalysis::new(&p.word, Engine::Oracle).unwrap();
        let at1: Vec<usize> = a.at(1).iter().map(|o| o.root_length).collect();
        assert_eq!(at1, vec![5, 8]);
        assert!(build_wm_ell(1, 2, Some(&[A, A])).is_err());
        assert!(build_wm_ell(1, 2, Some(&[B])).is_err());
        assert!(build_wm_ell(3, 2, None).is_err());
    }

    #[test]
    fn zword_examples() {
        for m in 1..=5 {
            assert_eq!(
                build_zword(m, &w("b"), 1, 1).unwrap().word,
                build_wm(m).unwrap().word
            );
        }
        let p = build_zword(1, &w("ab"), 1, 1).unwrap();
        assert_eq!(p.word.to_text(), "abaababaabaababa");
        let a = SquareAnalysis::new(&p.word, Engine::Oracle).unwrap();
        assert_eq!(a.sequence().digits()[0], 2);
        // v1 = aba, v2 = ab: 2 * (2*3 + 2 + 3) + 1
        let p = build_zword(2, &w("b"), 2, 1).unwrap();
        assert_eq!(p.word.len(), 23);
        let fs: Vec<usize> = SquareAnalysis::new(&p.word, Engine::Oracle)
            .unwrap()
            .fs_positions()
            .iter()
            .map(|f| f.position)
            .collect();
        assert!(fs.starts_with(&[1, 2]));
        // a^0 Z a = "aa" is not primitive
        assert!(matches!(
            build_zword(1, &w("a"), 1, 1),
            Err(Error::Precondition { .. })
        ));
        assert!(build_zword(1, &Word::empty(), 1, 1).is_err());
        assert!(build_zword(1, &w("b"), 1, 2).is_err());
    }

    #[test]
    fn xk_examples() {
        assert_eq!(build_xk(1).unwrap().to_text(), "babbababb");
        assert_eq!(build_xk(2).unwrap().len(), 15);
        for k in 1..=20 {
            let x = build_xk(k).unwrap();
            assert_eq!(x.len(), 6 * k + 3);
            assert_eq!(x.symbols().iter().filter(|&&c| c == B).count(), 6);
        }
    }

    #[test]
    fn yij_examples() {
        assert_eq!(build_yij(1, 2).unwrap().word.len(), 26);
        assert_eq!(build_yij(5, 15).unwrap().word.len(), 708);
        assert_eq!(yij_length(19, 64).unwrap(), 11656);
        assert_eq!(yij_count_formula(1, 2).unwrap(), 16);
        assert_eq!(yij_count_formula(2, 5).unwrap(), 71);
        assert_eq!(yij_count_formula(11, 36).unwrap(), 3063);
        assert!(build_yij(3, 3).is_err());
        assert!(yij_count_formula(0, 3).is_err());
        // w_j is the tail of Y_{i,j}
        let y = build_yij(2, 4).unwrap().word;
        let wj = build_wm(4).unwrap().word;
        assert!(y.symbols().ends_with(wj.symbols()));
    }

    #[test]
    fn yij_sequence_shape() {
        let s = expected_sequence_yij(1, 2).unwrap().to_string();
        assert_eq!(s, format!("{}{}", "111001011", "22000011100110010"));
        for k in 1..=30 {
            assert_eq!(xk_block_sequence(k).unwrap().len(), 6 * k + 3);
            assert_eq!(xk_block_sequence(k).unwrap().count(), (5 * k + 1) as u64);
        }
        let oracle = SquareAnalysis::new(&build_yij(1, 2).unwrap().word, Engine::Oracle).unwrap();
        assert_eq!(oracle.sequence().to_string(), s);
    }

    #[test]
    fn count_formula_matches_summation() {
        for j in 2..=80usize {
            for i in 1..j {
                let summed = 4 * j + j / 2 + 1 + (i..j).map(|k| 5 * k + 1).sum::<usize>();
                assert_eq!(yij_count_formula(i, j).unwrap(), summed as u64);
                let len = 7 * j + 3 + (i..j).map(|k| 6 * k + 3).sum::<usize>();
                assert_eq!(yij_length(i, j).unwrap(), len as u64);
            }
        }
    }

    #[test]
    fn raw_fs_builder() {
        let f = FsFactorization::new(w("aba"), w("ab"), 2, 1).unwrap();
        let p = build_raw_fs(&f, 1).unwrap();
        assert_eq!(p.word.len(), 23);
        assert_eq!(p.expected_length, 23);
    }
}
