//! Text form of construction recipes.
//!
//! ```text
//! wm:m=3
//! wml:m=1,l=2,letters=bb        letters optional, default all b
//! zword:m=2,Z=ab,e1=2,e2=1
//! xk:k=4
//! yij:i=5,j=15
//! fs:v1=aba,v2=ab,e1=2,e2=1,tail=1   tail optional, default 0
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{build_raw_fs, build_wm, build_wm_ell, build_xk, build_yij, build_zword, Prediction};
use crate::engine::FsFactorization;
use crate::error::{Error, Result};
use crate::word::Word;

/// A parameterized recipe for one of the word families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionSpec {
    Wm {
        m: usize,
    },
    WmEll {
        m: usize,
        ell: usize,
        letters: Option<Vec<u8>>,
    },
    ZWord {
        m: usize,
        z: Word,
        e1: usize,
        e2: usize,
    },
    Xk {
        k: usize,
    },
    Yij {
        i: usize,
        j: usize,
    },
    RawFs {
        v1: Word,
        v2: Word,
        e1: usize,
        e2: usize,
        tail: usize,
    },
}

impl ConstructionSpec {
    pub fn build(&self) -> Result<Prediction> {
        match self {
            ConstructionSpec::Wm { m } => build_wm(*m),
            ConstructionSpec::WmEll { m, ell, letters } => {
                build_wm_ell(*m, *ell, letters.as_deref())
            }
            ConstructionSpec::ZWord { m, z, e1, e2 } => build_zword(*m, z, *e1, *e2),
            ConstructionSpec::Xk { k } => {
                let word = build_xk(*k)?;
                Prediction::new(word, 6 * k + 3)
            }
            ConstructionSpec::Yij { i, j } => build_yij(*i, *j),
            ConstructionSpec::RawFs {
                v1,
                v2,
                e1,
                e2,
                tail,
            } => {
                let f = FsFactorization::new(v1.clone(), v2.clone(), *e1, *e2)?;
                build_raw_fs(&f, *tail)
            }
        }
    }

    pub fn word(&self) -> Result<Word> {
        Ok(self.build()?.word)
    }
}

struct Params<'a> {
    kind: &'a str,
    values: BTreeMap<&'a str, &'a str>,
}

impl<'a> Params<'a> {
    fn parse(kind: &'a str, body: &'a str, allowed: &[&str]) -> Result<Self> {
        let mut values = BTreeMap::new();
        for item in body.split(',').filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::spec(item, "expected key=value"))?;
            let key = key.trim();
            if !allowed.contains(&key) {
                return Err(Error::spec(key, format!("not a parameter of `{kind}`")));
            }
            if values.insert(key, value.trim()).is_some() {
                return Err(Error::spec(key, "given more than once"));
            }
        }
        Ok(Params { kind, values })
    }

    fn raw(&self, key: &str) -> Result<&'a str> {
        self.values
            .get(key)
            .copied()
            .ok_or_else(|| Error::spec(key, format!("required by `{}`", self.kind)))
    }

    fn int(&self, key: &str) -> Result<usize> {
        let raw = self.raw(key)?;
        raw.parse()
            .map_err(|_| Error::spec(key, format!("`{raw}` is not a non-negative integer")))
    }

    fn int_or(&self, key: &str, default: usize) -> Result<usize> {
        if self.values.contains_key(key) {
            self.int(key)
        } else {
            Ok(default)
        }
    }

    fn word(&self, key: &str) -> Result<Word> {
        let raw = self.raw(key)?;
        Word::parse(raw).map_err(|e| Error::spec(key, e.to_string()))
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, body) = s
            .split_once(':')
            .ok_or_else(|| Error::spec(s, "expected <kind>:<key>=<value>,..."))?;
        let kind = kind.trim();
        match kind {
            "wm" => {
                let p = Params::parse(kind, body, &["m"])?;
                Ok(ConstructionSpec::Wm { m: p.int("m")? })
            }
            "wml" => {
                let p = Params::parse(kind, body, &["m", "l", "letters"])?;
                let letters = if p.values.contains_key("letters") {
                    Some(p.word("letters")?.symbols().to_vec())
                } else {
                    None
                };
                Ok(ConstructionSpec::WmEll {
                    m: p.int("m")?,
                    ell: p.int("l")?,
                    letters,
                })
            }
            "zword" => {
                let p = Params::parse(kind, body, &["m", "Z", "e1", "e2"])?;
                Ok(ConstructionSpec::ZWord {
                    m: p.int("m")?,
                    z: p.word("Z")?,
                    e1: p.int("e1")?,
                    e2: p.int("e2")?,
                })
            }
            "xk" => {
                let p = Params::parse(kind, body, &["k"])?;
                Ok(ConstructionSpec::Xk { k: p.int("k")? })
            }
            "yij" => {
                let p = Params::parse(kind, body, &["i", "j"])?;
                Ok(ConstructionSpec::Yij {
                    i: p.int("i")?,
                    j: p.int("j")?,
                })
            }
            "fs" => {
                let p = Params::parse(kind, body, &["v1", "v2", "e1", "e2", "tail"])?;
                Ok(ConstructionSpec::RawFs {
                    v1: p.word("v1")?,
                    v2: p.word("v2")?,
                    e1: p.int("e1")?,
                    e2: p.int("e2")?,
                    tail: p.int_or("tail", 0)?,
                })
            }
            other => Err(Error::spec(other, "unknown construction kind")),
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionSpec::Wm { m } => write!(f, "wm:m={m}"),
            ConstructionSpec::WmEll { m, ell, letters } => {
                write!(f, "wml:m={m},l={ell}")?;
                if let Some(l) = letters {
                    write!(f, ",letters={}", Word::from_ids(l.clone()))?;
                }
                Ok(())
            }
            ConstructionSpec::ZWord { m, z, e1, e2 } => {
                write!(f, "zword:m={m},Z={z},e1={e1},e2={e2}")
            }
            ConstructionSpec::Xk { k } => write!(f, "xk:k={k}"),
            ConstructionSpec::Yij { i, j } => write!(f, "yij:i={i},j={j}"),
            ConstructionSpec::RawFs {
                v1,
                v2,
                e1,
                e2,
                tail,
            } => {
                write!(f, "fs:v1={v1},v2={v2},e1={e1},e2={e2}")?;
                if *tail > 0 {
                    write!(f, ",tail={tail}")?;
                }
                Ok(())
            }
        }
    }
}
