//! Canonical form `(v1, v2, e1, e2)` of FS-double-squares.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::Word;

/// `u = v1^e1 v2`, `U = v1^e1 v2 v1^e2` with `v1` primitive, `v2` a proper
/// non-empty prefix of `v1` and `1 <= e2 <= e1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FsFactorization {
    pub v1: Word,
    pub v2: Word,
    pub e1: usize,
    pub e2: usize,
}

impl FsFactorization {
    pub fn new(v1: Word, v2: Word, e1: usize, e2: usize) -> Result<Self> {
        let f = FsFactorization { v1, v2, e1, e2 };
        f.validate()?;
        Ok(f)
    }

    /// Checks every invariant, naming the first one that fails.
    pub fn validate(&self) -> Result<()> {
        if self.v1.is_empty() {
            return Err(Error::precondition("v1 must be non-empty"));
        }
        if !self.v1.is_primitive()? {
            return Err(Error::precondition(format!(
                "v1 = {} must be primitive",
                self.v1
            )));
        }
        if self.v2.is_empty() {
            return Err(Error::precondition("v2 must be non-empty"));
        }
        if self.v2.len() >= self.v1.len() || !self.v2.is_prefix_of(&self.v1) {
            return Err(Error::precondition(format!(
                "v2 = {} must be a proper prefix of v1 = {}",
                self.v2, self.v1
            )));
        }
        if self.e2 < 1 || self.e2 > self.e1 {
            return Err(Error::precondition(format!(
                "exponents must satisfy 1 <= e2 <= e1 (got e1 = {}, e2 = {})",
                self.e1, self.e2
            )));
        }
        Ok(())
    }

    /// The shorter root `v1^e1 v2`.
    pub fn u(&self) -> Word {
        self.v1.pow(self.e1).concat(&self.v2)
    }

    /// The longer root `v1^e1 v2 v1^e2`.
    pub fn big_u(&self) -> Word {
        self.u().concat(&self.v1.pow(self.e2))
    }
}

impl fmt::Display for FsFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.v1, self.v2, self.e1, self.e2)
    }
}

/// Builds `U^2 = (v1^e1 v2 v1^e2)^2`.
pub fn expand_fs(f: &FsFactorization) -> Result<Word> {
    f.validate()?;
    Ok(f.big_u().pow(2))
}

/// Recovers the unique factorization of an FS-style double square `(u, U)`.
///
/// Requires `u` a proper prefix of `U`, `|u| < |U| < 2|u|`, and `u^2`
/// occurring in `U^2` only at its start. Candidates are tried for
/// `e2 = 1, 2, ...` with `|v1| = (|U| - |u|) / e2`; more than one success
/// is reported as an internal error.
pub fn fs_factorize(u: &Word, big_u: &Word) -> Result<FsFactorization> {
    let (lu, lbig) = (u.len(), big_u.len());
    if lu == 0 || !(lu < lbig && lbig < 2 * lu) {
        return Err(Error::domain(format!(
            "need |u| < |U| < 2|u| (got |u| = {lu}, |U| = {lbig})"
        )));
    }
    if !u.is_prefix_of(big_u) {
        return Err(Error::domain(format!("{u} is not a prefix of {big_u}")));
    }
    let square = big_u.pow(2);
    let u_square = u.pow(2);
    if square.occurrences(&u_square) != [1] {
        return Err(Error::domain(format!(
            "u^2 = {u_square} occurs in U^2 at positions other than 1"
        )));
    }

    let tail = &big_u.symbols()[lu..];
    let diff = lbig - lu;
    let mut found = Vec::new();
    for e2 in 1..=diff {
        if diff % e2 != 0 {
            continue;
        }
        let period = diff / e2;
        let v1 = Word::from_ids(tail[..period].to_vec());
        if v1.pow(e2).symbols() != tail {
            continue;
        }
        let (e1, rest) = (lu / period, lu % period);
        if rest == 0 || e1 < e2 {
            continue;
        }
        let v2 = v1.prefix(rest);
        if v1.pow(e1).concat(&v2) != *u || !v1.is_primitive()? {
            continue;
        }
        found.push(FsFactorization { v1, v2, e1, e2 });
    }
    match found.len() {
        1 => Ok(found.pop().expect("one candidate")),
        0 => Err(Error::Internal(format!(
            "no factorization found for ({u}, {big_u}) although its preconditions hold"
        ))),
        k => Err(Error::Internal(format!(
            "{k} factorizations found for ({u}, {big_u}); expected exactly one"
        ))),
    }
}
