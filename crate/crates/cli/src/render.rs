use serde::Serialize;
use sqscope_core::scalar::format_thousandths;
use sqscope_core::word::letter_glyph;
use sqscope_core::{FsPosition, SquareAnalysis};

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SeqJson<'a> {
    pub word: String,
    pub length: usize,
    pub count: u64,
    pub density: String,
    pub sequence: String,
    pub fs_positions: &'a [FsPosition],
}

/// Word and sequence in paired rows, one column per position, wrapped every
/// `width` columns.
pub fn aligned(analysis: &SquareAnalysis, positions: bool, width: usize) -> String {
    let w = analysis.word();
    let n = w.len();
    let letters: Vec<String> = w.symbols().iter().map(|&c| letter_glyph(c)).collect();
    let digits = analysis.sequence().to_string();
    let cell = letters
        .iter()
        .map(String::len)
        .chain(positions.then(|| n.to_string().len()))
        .max()
        .unwrap_or(1);

    let mut out = String::new();
    let width = width.max(1);
    for block in 0..n.div_ceil(width) {
        if block > 0 {
            out.push('\n');
        }
        let range = block * width..((block + 1) * width).min(n);
        let row = |label: &str, cells: &mut dyn Iterator<Item = String>| {
            let body: Vec<String> = cells.map(|c| format!("{c:>cell$}")).collect();
            format!("{label:<5}| {}\n", body.join(" "))
        };
        if positions {
            out.push_str(&row("i", &mut range.clone().map(|i| (i + 1).to_string())));
        }
        out.push_str(&row("w[i]", &mut letters[range.clone()].iter().cloned()));
        out.push_str(&row("s_i", &mut digits[range].chars().map(String::from)));
    }
    out
}

/// Summary printed under the aligned rows.
pub fn summary(analysis: &SquareAnalysis) -> String {
    let d = analysis.density();
    let mut out = format!(
        "length {}, {} distinct squares, density {} ({}/{})\n",
        d.length,
        d.distinct_count,
        format_thousandths(d.thousandths),
        d.distinct_count,
        d.length
    );
    for fs in analysis.fs_positions() {
        out.push_str(&format!(
            "FS-double-square at {}: ({}, {})\n",
            fs.position, fs.square.u, fs.square.big_u
        ));
    }
    out
}

/// One row per position: `position,letter,digit,roots` with roots separated by `;`.
pub fn csv(analysis: &SquareAnalysis) -> String {
    let w = analysis.word();
    let digits = analysis.sequence();
    let mut out = String::from("position,letter,digit,roots\n");
    for (idx, &c) in w.symbols().iter().enumerate() {
        let roots: Vec<String> = analysis
            .at(idx + 1)
            .iter()
            .map(|o| o.root(w).to_string())
            .collect();
        out.push_str(&format!(
            "{},{},{},{}\n",
            idx + 1,
            letter_glyph(c),
            digits.digits()[idx],
            roots.join(";")
        ));
    }
    out
}
