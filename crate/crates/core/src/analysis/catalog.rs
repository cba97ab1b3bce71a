//! Words whose sequences break (or keep) the selfish-2's pattern, with the
//! sequences and densities printed alongside them.

use serde::Serialize;

use super::runs::analyze_runs;
use crate::constructions::{build_wm, ConstructionSpec};
use crate::engine::{Engine, SquareAnalysis};
use crate::error::Result;
use crate::scalar::{format_thousandths, parse_thousandths};
use crate::word::Word;

/// Which printed value is known to be wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum ErratumField {
    Sequence,
    Density,
}

/// A printed value that cannot be reproduced, and the value the word really has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Erratum {
    pub field: ErratumField,
    pub verified: &'static str,
    pub note: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: String,
    pub spec: Option<ConstructionSpec>,
    pub word: Word,
    pub printed_sequence: Option<&'static str>,
    pub printed_density: Option<&'static str>,
    /// Whether every run of 2's is immediately followed by at least twice as many 0's.
    pub strong_rule_holds: bool,
    pub erratum: Option<Erratum>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum FieldStatus {
    Match,
    /// Differs from the printed value exactly as the recorded erratum says.
    Erratum,
    Mismatch,
    NotPrinted,
}

impl FieldStatus {
    pub fn is_ok(self) -> bool {
        !matches!(self, FieldStatus::Mismatch)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CatalogCheck {
    pub label: String,
    pub word: Word,
    pub computed_sequence: String,
    pub computed_density: String,
    pub distinct_count: u64,
    pub sequence_status: FieldStatus,
    pub density_status: FieldStatus,
    pub strong_ok: bool,
    pub strong_expected: bool,
    pub weak_ok: bool,
}

impl CatalogCheck {
    pub fn passed(&self) -> bool {
        self.sequence_status.is_ok()
            && self.density_status.is_ok()
            && self.strong_ok == self.strong_expected
            && self.weak_ok
    }
}

impl CatalogEntry {
    pub fn check(&self, engine: Engine) -> Result<CatalogCheck> {
        let analysis = SquareAnalysis::new(&self.word, engine)?;
        let sequence = analysis.sequence();
        let density = analysis.density();
        let runs = analyze_runs(&sequence)?;
        let computed_sequence = sequence.to_string();

        let erratum_for = |field: ErratumField| self.erratum.filter(|e| e.field == field);
        let status = |printed: Option<bool>, field: ErratumField, computed: &str| match printed {
            None => FieldStatus::NotPrinted,
            Some(true) if erratum_for(field).is_none() => FieldStatus::Match,
            Some(false) if erratum_for(field).is_some_and(|e| e.verified == computed) => {
                FieldStatus::Erratum
            }
            _ => FieldStatus::Mismatch,
        };
        let sequence_status = status(
            self.printed_sequence.map(|p| p == computed_sequence),
            ErratumField::Sequence,
            &computed_sequence,
        );
        let computed_density = density.density_3dp();
        let density_status = status(
            self.printed_density
                .map(|p| parse_thousandths(p) == Some(density.thousandths)),
            ErratumField::Density,
            &computed_density,
        );
        Ok(CatalogCheck {
            label: self.label.clone(),
            word: self.word.clone(),
            computed_sequence,
            computed_density,
            distinct_count: density.distinct_count,
            sequence_status,
            density_status,
            strong_ok: runs.strong_ok(),
            strong_expected: self.strong_rule_holds,
            weak_ok: runs.weak_ok,
        })
    }
}

fn from_spec(
    spec: &str,
    printed_sequence: &'static str,
    printed_density: Option<&'static str>,
    strong_rule_holds: bool,
) -> CatalogEntry {
    let spec: ConstructionSpec = spec.parse().expect("catalog spec parses");
    let word = spec.word().expect("catalog spec builds");
    let label = match &spec {
        ConstructionSpec::RawFs {
            v1,
            v2,
            e1,
            e2,
            tail,
        } => {
            format!("({v1}, {v2}, {e1}, {e2}){}", "a".repeat(*tail))
        }
        other => other.to_string(),
    };
    CatalogEntry {
        label,
        spec: Some(spec),
        word,
        printed_sequence: Some(printed_sequence),
        printed_density,
        strong_rule_holds,
        erratum: None,
    }
}

fn literal(
    label: &str,
    word: Word,
    printed_sequence: &'static str,
    printed_density: Option<&'static str>,
) -> CatalogEntry {
    CatalogEntry {
        label: label.to_string(),
        spec: None,
        word,
        printed_sequence: Some(printed_sequence),
        printed_density,
        strong_rule_holds: false,
        erratum: None,
    }
}

fn truncated(m: usize) -> Word {
    let w = build_wm(m).expect("w_m builds").word;
    w.prefix(w.len() - 1)
}

fn altered(m: usize) -> Word {
    truncated(m).concat(&Word::parse("b").expect("literal"))
}

/// All selfish-2's fixtures, in the order they are discussed.
pub fn selfish_catalog() -> Vec<CatalogEntry> {
    let mut w2_short = literal(
        "w_2 without its last letter",
        truncated(2),
        "210000111011100",
        None,
    );
    w2_short.erratum = Some(Erratum {
        field: ErratumField::Sequence,
        verified: "2100001110111000",
        note: "printed with 15 digits for a 16-letter word; the true sequence ends in one more 0",
    });

    let mut aaba_3_2 = from_spec(
        "fs:v1=aaba,v2=aab,e1=3,e2=2",
        "2110111000100001100001111000011120011110001000",
        Some(".523"),
        false,
    );
    aaba_3_2.erratum = Some(Erratum {
        field: ErratumField::Density,
        verified: ".522",
        note: "the printed sequence itself sums to 24 over 46 letters, and 24/46 = 0.5217",
    });

    vec![
        from_spec("wm:m=2", "22000011100110010", Some(".588"), true),
        w2_short,
        literal(
            "w_2 with its last letter changed to b",
            altered(2),
            "21000011101011000",
            None,
        ),
        literal(
            "w_3 without its last letter",
            truncated(3),
            "22100000011110011100010",
            Some(".565"),
        ),
        literal(
            "w_3 with its last letter changed to b",
            altered(3),
            "221000000111100011100100",
            Some(".542"),
        ),
        from_spec(
            "fs:v1=aba,v2=ab,e1=2,e2=1,tail=1",
            "22011000100011100110010",
            Some(".565"),
            false,
        ),
        from_spec(
            "fs:v1=aba,v2=ab,e1=3,e2=1,tail=1",
            "22011011000011100011100110010",
            Some(".586"),
            false,
        ),
        from_spec(
            "fs:v1=aba,v2=ab,e1=3,e2=2,tail=1",
            "22011000000100011100001110111100010",
            Some(".514"),
            false,
        ),
        from_spec(
            "fs:v1=aaba,v2=aab,e1=2,e2=1,tail=2",
            "22201110000110000111100111000010",
            Some(".594"),
            false,
        ),
        from_spec(
            "fs:v1=aaba,v2=aab,e1=2,e2=2",
            "21100010000001111000011120011110001000",
            Some(".5"),
            false,
        ),
        from_spec(
            "fs:v1=aaba,v2=aab,e1=2,e2=2,tail=2",
            "2220000000000111100000111101111110000010",
            Some(".525"),
            true,
        ),
        from_spec(
            "fs:v1=aaba,v2=aab,e1=3,e2=1",
            "21101110111000100111100001111001101000",
            Some(".579"),
            false,
        ),
        from_spec(
            "fs:v1=aaba,v2=aab,e1=3,e2=1,tail=1",
            "221011101110000001111000011110011100010",
            Some(".590"),
            false,
        ),
        from_spec(
            "fs:v1=aaba,v2=aab,e1=3,e2=1,tail=2",
            "2220111011100000011110000111100111000010",
            Some(".6"),
            false,
        ),
        aaba_3_2,
        from_spec(
            "fs:v1=aaba,v2=aab,e1=3,e2=2,tail=1",
            "22101110000000011000011110000111110111110000010",
            Some(".532"),
            false,
        ),
        from_spec(
            "fs:v1=aaba,v2=aab,e1=3,e2=2,tail=2",
            "222011100000000110000111100000111101111110000010",
            Some(".542"),
            false,
        ),
    ]
}

/// A word whose first two positions are FS-double-square positions with
/// roots of different lengths, `(bab, babba)` then
/// `(abbababbaa, abbababbaaabbababba)`.
pub const MIXED_LENGTHS_WORD: &str = "babbababbaaabbababbaabbababbaaabbababba";

/// Distinct-square sequence of [`MIXED_LENGTHS_WORD`].
pub const MIXED_LENGTHS_SEQUENCE: &str = "220000000011100010010000000001001100100";

/// Renders a catalog density for reports.
pub fn describe_density(thousandths: u64) -> String {
    format_thousandths(thousandths)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_checks_out_on_both_engines() {
        for engine in [Engine::Oracle, Engine::Fast] {
            for entry in selfish_catalog() {
                let c = entry.check(engine).unwrap();
                assert!(c.passed(), "{c:?}");
            }
        }
    }

    #[test]
    fn exactly_two_errata() {
        let checks: Vec<CatalogCheck> = selfish_catalog()
            .iter()
            .map(|e| e.check(Engine::Fast).unwrap())
            .collect();
        let errata: Vec<&str> = checks
            .iter()
            .filter(|c| {
                c.sequence_status == FieldStatus::Erratum
                    || c.density_status == FieldStatus::Erratum
            })
            .map(|c| c.label.as_str())
            .collect();
        assert_eq!(
            errata,
            vec!["w_2 without its last letter", "(aaba, aab, 3, 2)"]
        );
    }

    #[test]
    fn named_fixtures() {
        let cat = selfish_catalog();
        let find = |label: &str| {
            cat.iter()
                .find(|e| e.label == label)
                .unwrap()
                .check(Engine::Oracle)
                .unwrap()
        };
        assert_eq!(find("(aaba, aab, 3, 1)aa").computed_density, ".600");
        let interior = find("(aaba, aab, 2, 2)");
        let extended = find("(aaba, aab, 2, 2)aa");
        let interior_twos = |s: &str| s[1..].trim_start_matches('2').contains('2');
        assert!(interior_twos(&interior.computed_sequence));
        assert!(!interior_twos(&extended.computed_sequence));
        assert_eq!(
            find("w_2 with its last letter changed to b").computed_sequence,
            "21000011101011000"
        );
    }

    #[test]
    fn mixed_lengths_fixture() {
        let w = Word::parse(MIXED_LENGTHS_WORD).unwrap();
        let a = SquareAnalysis::new(&w, Engine::Oracle).unwrap();
        assert_eq!(a.sequence().to_string(), MIXED_LENGTHS_SEQUENCE);
        let fs = a.fs_positions();
        assert_eq!(fs[0].position, 1);
        assert_eq!(
            (fs[0].square.u.to_text(), fs[0].square.big_u.to_text()),
            ("bab".into(), "babba".into())
        );
        assert_eq!(fs[1].position, 2);
        assert_eq!(fs[1].square.u.to_text(), "abbababbaa");
        assert_eq!(fs[1].square.big_u.to_text(), "abbababbaaabbababba");
    }

    #[test]
    fn unlisted_mismatch_is_caught() {
        let mut entry = selfish_catalog().remove(0);
        entry.printed_sequence = Some("22000011100110011");
        assert_eq!(
            entry.check(Engine::Fast).unwrap().sequence_status,
            FieldStatus::Mismatch
        );
        let mut entry = selfish_catalog().remove(1);
        entry.erratum = None;
        assert!(!entry.check(Engine::Fast).unwrap().passed());
    }
}
