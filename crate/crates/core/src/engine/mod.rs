//! Distinct squares and their last occurrences.
//!
//! Two engines produce the same observable output: [`Engine::Oracle`]
//! follows the definition literally (every root length, every start, direct
//! letter comparison), [`Engine::Fast`] works in quadratic time from
//! longest-common-extension diagonals. Everything downstream consumes the
//! engine-independent [`SquareAnalysis`].

mod fast;
mod fs;
mod oracle;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{format_thousandths, format_thousandths_decimal, round_half_up_thousandths};
use crate::word::Word;
use crate::Rational;

pub use fs::{expand_fs, fs_factorize, FsFactorization};

/// Which square enumeration strategy to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Engine {
    Oracle,
    #[default]
    Fast,
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Engine::Oracle),
            "fast" => Ok(Engine::Fast),
            other => Err(Error::spec("engine", format!("unknown engine `{other}`"))),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::Oracle => "oracle",
            Engine::Fast => "fast",
        })
    }
}

/// The occurrence of `xx` starting at 1-based `position` with `|x| = root_length`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareOccurrence {
    pub position: usize,
    pub root_length: usize,
}

impl SquareOccurrence {
    pub fn root(&self, w: &Word) -> Word {
        w.slice(self.position - 1..self.position - 1 + self.root_length)
    }
}

/// One distinct square: its root content and the start of its rightmost occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DistinctSquareRecord {
    pub root: Word,
    pub last_position: usize,
}

/// The digit string `s_1 ... s_n`; `s_i` counts distinct squares whose last occurrence starts at `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquareSequence {
    digits: Vec<u8>,
}

impl SquareSequence {
    pub fn from_digits(digits: Vec<u8>) -> Result<Self> {
        if let Some(pos) = digits.iter().position(|&d| d > 2) {
            return Err(Error::domain(format!(
                "digit {} at position {} exceeds 2",
                digits[pos],
                pos + 1
            )));
        }
        Ok(SquareSequence { digits })
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Number of distinct squares, i.e. the digit sum.
    pub fn count(&self) -> u64 {
        self.digits.iter().map(|&d| u64::from(d)).sum()
    }

    /// 1-based positions holding a `2`.
    pub fn double_positions(&self) -> Vec<usize> {
        self.digits
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 2)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn concat(&self, other: &SquareSequence) -> SquareSequence {
        let mut digits = self.digits.clone();
        digits.extend_from_slice(&other.digits);
        SquareSequence { digits }
    }
}

impl FromStr for SquareSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut digits = Vec::with_capacity(s.len());
        for (idx, ch) in s.chars().enumerate() {
            match ch {
                '0'..='2' => digits.push(ch as u8 - b'0'),
                _ => {
                    return Err(Error::Parse {
                        position: idx + 1,
                        found: ch,
                    })
                }
            }
        }
        Ok(SquareSequence { digits })
    }
}

impl fmt::Display for SquareSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SquareSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SquareSequence({self})")
    }
}

impl Serialize for SquareSequence {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Two squares `u^2`, `U^2` starting at the same position, `|u| < |U|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DoubleSquare {
    pub u: Word,
    #[serde(rename = "U")]
    pub big_u: Word,
    pub position: usize,
}

impl DoubleSquare {
    pub fn new(u: Word, big_u: Word, position: usize) -> Result<Self> {
        if u.len() >= big_u.len() || !u.is_prefix_of(&big_u) {
            return Err(Error::precondition("u must be a proper prefix of U"));
        }
        Ok(DoubleSquare { u, big_u, position })
    }

    /// `|u| < |U| < 2|u|`, which every FS-double-square satisfies.
    pub fn has_fs_lengths(&self) -> bool {
        self.u.len() < self.big_u.len() && self.big_u.len() < 2 * self.u.len()
    }
}

/// `d(w) = s / n` together with its three-place rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    pub distinct_count: u64,
    pub length: u64,
    pub density_exact: Rational,
    /// `density_exact` rounded half-up to thousandths.
    pub thousandths: u64,
}

impl DensityReport {
    pub fn new(distinct_count: u64, length: u64) -> Result<Self> {
        if length == 0 {
            return Err(Error::domain("density of the empty word"));
        }
        Ok(DensityReport {
            distinct_count,
            length,
            density_exact: Rational::new(distinct_count as i64, length as i64),
            thousandths: round_half_up_thousandths(distinct_count, length),
        })
    }

    /// `.781` style, as printed in density tables.
    pub fn density_3dp(&self) -> String {
        format_thousandths(self.thousandths)
    }

    /// `0.781` style.
    pub fn density_decimal(&self) -> String {
        format_thousandths_decimal(self.thousandths)
    }

    pub fn density_as<T: crate::Scalar>(&self) -> T {
        T::ratio(self.distinct_count, self.length)
    }
}

/// An FS-double-square position with its two roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FsPosition {
    pub position: usize,
    pub square: DoubleSquare,
}

impl Serialize for FsPosition {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("FsPosition", 3)?;
        st.serialize_field("position", &self.position)?;
        st.serialize_field("u", &self.square.u)?;
        st.serialize_field("U", &self.square.big_u)?;
        st.end()
    }
}

/// The last occurrence of every distinct square of a word.
#[derive(Debug, Clone)]
pub struct SquareAnalysis {
    word: Word,
    /// Sorted by `(position, root_length)`; exactly one entry per distinct square.
    last: Vec<SquareOccurrence>,
}

impl SquareAnalysis {
    pub fn new(word: &Word, engine: Engine) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::domain("square analysis of the empty word"));
        }
        let mut last = match engine {
            Engine::Oracle => oracle::last_occurrences(word.symbols()),
            Engine::Fast => fast::last_occurrences(word.symbols()),
        };
        last.sort_unstable();
        let analysis = SquareAnalysis {
            word: word.clone(),
            last,
        };
        analysis.check_fraenkel_simpson()?;
        Ok(analysis)
    }

    fn check_fraenkel_simpson(&self) -> Result<()> {
        for pair in self.last.windows(3) {
            if pair[0].position == pair[2].position {
                return Err(Error::Internal(format!(
                    "three distinct squares last-occur at position {} of {}",
                    pair[0].position, self.word
                )));
            }
        }
        Ok(())
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn last_occurrences(&self) -> &[SquareOccurrence] {
        &self.last
    }

    pub fn distinct_count(&self) -> u64 {
        self.last.len() as u64
    }

    /// Records sorted by `(last_position, |root|)`.
    pub fn records(&self) -> Vec<DistinctSquareRecord> {
        self.last
            .iter()
            .map(|occ| DistinctSquareRecord {
                root: occ.root(&self.word),
                last_position: occ.position,
            })
            .collect()
    }

    /// Squares whose last occurrence starts at 1-based `position`, shortest root first.
    pub fn at(&self, position: usize) -> &[SquareOccurrence] {
        let lo = self.last.partition_point(|o| o.position < position);
        let hi = self.last.partition_point(|o| o.position <= position);
        &self.last[lo..hi]
    }

    pub fn sequence(&self) -> SquareSequence {
        let mut digits = vec![0u8; self.word.len()];
        for occ in &self.last {
            digits[occ.position - 1] += 1;
        }
        SquareSequence { digits }
    }

    pub fn fs_positions(&self) -> Vec<FsPosition> {
        self.last
            .windows(2)
            .filter(|p| p[0].position == p[1].position)
            .map(|p| FsPosition {
                position: p[0].position,
                square: DoubleSquare {
                    u: p[0].root(&self.word),
                    big_u: p[1].root(&self.word),
                    position: p[0].position,
                },
            })
            .collect()
    }

    pub fn density(&self) -> DensityReport {
        DensityReport::new(self.distinct_count(), self.word.len() as u64)
            .expect("analysis words are non-empty")
    }
}

pub fn enumerate_distinct_squares(w: &Word, engine: Engine) -> Result<Vec<DistinctSquareRecord>> {
    Ok(SquareAnalysis::new(w, engine)?.records())
}

pub fn distinct_square_sequence(w: &Word, engine: Engine) -> Result<SquareSequence> {
    Ok(SquareAnalysis::new(w, engine)?.sequence())
}

pub fn fs_positions(w: &Word, engine: Engine) -> Result<Vec<FsPosition>> {
    Ok(SquareAnalysis::new(w, engine)?.fs_positions())
}

pub fn density(w: &Word, engine: Engine) -> Result<DensityReport> {
    Ok(SquareAnalysis::new(w, engine)?.density())
}
