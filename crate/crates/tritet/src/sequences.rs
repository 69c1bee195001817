//! Named catalog of the integer sequences the tetrahedron over Pascal's
//! triangle generates, OEIS b-file parsing and comparison, and the checks
//! for the zero-extended construction (3-Pascal rows and the Gegenbauer
//! correspondence).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::Error;
use crate::tetrahedron::{
    build_extended, column_sequence, diagonal_sequence, mirrored_column_sequence,
};
use crate::triangle::pascal_triangle;
use crate::Rational;

/// How a catalog sequence is read out of the tetrahedron over Pascal's
/// triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequencePattern {
    /// h(i, j0, i-w) for i = w, w+1, ... (parallel to the edge).
    Diagonal { j0: usize, w: usize },
    /// h(i, j0, k0) for i = j0+k0, j0+k0+1, ... (fixed row and column).
    Column { j0: usize, k0: usize },
    /// h(i, i-(j0+k0), k0), the mirror of `Column` across the symmetry plane.
    MirroredColumn { j0: usize, k0: usize },
}

/// A named sequence with its OEIS id, extraction patterns, and the printed
/// prefix it must reproduce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRecord {
    pub name: String,
    pub oeis_id: String,
    /// One or two patterns; paired patterns generate the same sequence.
    pub patterns: Vec<SequencePattern>,
    pub paper_terms: Vec<BigInt>,
    /// Position of the first generated term within the OEIS listing.
    pub offset_hint: usize,
}

fn record(
    name: &str,
    oeis_id: &str,
    patterns: Vec<SequencePattern>,
    terms: &[i64],
) -> SequenceRecord {
    SequenceRecord {
        name: name.to_string(),
        oeis_id: oeis_id.to_string(),
        patterns,
        paper_terms: terms.iter().map(|&v| BigInt::from(v)).collect(),
        offset_hint: 0,
    }
}

/// The eight catalogued sequences.
pub fn catalog() -> Vec<SequenceRecord> {
    use SequencePattern::*;
    vec![
        record(
            "edge b(n) = h(n,0,n)",
            "A026375",
            vec![Diagonal { j0: 0, w: 0 }],
            &[1, 3, 11, 45, 195, 873, 3989, 18483, 86515],
        ),
        record(
            "h(n,0,n-1) / h(n,1,n-1)",
            "A026378",
            vec![Diagonal { j0: 0, w: 1 }, Diagonal { j0: 1, w: 1 }],
            &[1, 4, 17, 75, 339, 1558, 7247, 34016, 160795],
        ),
        record(
            "h(n,0,n-2) / h(n,2,n-2)",
            "A026388",
            vec![Diagonal { j0: 0, w: 2 }, Diagonal { j0: 2, w: 2 }],
            &[1, 5, 24, 114, 541, 2573, 12275, 58747, 282003],
        ),
        record(
            "h(n,0,n-3) / h(n,3,n-3)",
            "A034942",
            vec![Diagonal { j0: 0, w: 3 }, Diagonal { j0: 3, w: 3 }],
            &[1, 6, 32, 163, 813, 4013, 19703, 96477, 471811],
        ),
        record(
            "h(n,1,n-2)",
            "A085362",
            vec![Diagonal { j0: 1, w: 2 }],
            &[2, 8, 34, 150, 678, 3116, 14494, 68032, 321590],
        ),
        record(
            "h(n,1,1) / h(n,n-2,1)",
            "A034856",
            vec![Column { j0: 1, k0: 1 }, MirroredColumn { j0: 1, k0: 1 }],
            &[4, 8, 13, 19, 26, 34, 43, 53, 64, 76, 89, 103, 118],
        ),
        record(
            "h(n,2,1) / h(n,n-3,1)",
            "A008778",
            vec![Column { j0: 2, k0: 1 }, MirroredColumn { j0: 2, k0: 1 }],
            &[5, 13, 26, 45, 71, 105, 148, 201, 265, 341, 430],
        ),
        record(
            "h(n,1,2) / h(n,n-3,2)",
            "A023545",
            vec![Column { j0: 1, k0: 2 }, MirroredColumn { j0: 1, k0: 2 }],
            &[17, 34, 58, 90, 131, 182, 244, 318, 405, 506, 622],
        ),
    ]
}

/// Look a catalog record up by OEIS id.
pub fn catalog_record(oeis_id: &str) -> Option<SequenceRecord> {
    catalog().into_iter().find(|r| r.oeis_id == oeis_id)
}

fn generate_pattern(pattern: &SequencePattern, count: usize) -> Vec<BigInt> {
    if count == 0 {
        return Vec::new();
    }
    match *pattern {
        SequencePattern::Diagonal { j0, w } => {
            let i_max = w + count - 1;
            diagonal_sequence(&pascal_triangle(i_max), j0, w, i_max)
                .expect("catalog diagonal pattern is valid")
        }
        SequencePattern::Column { j0, k0 } => {
            let i_max = j0 + k0 + count - 1;
            column_sequence(&pascal_triangle(i_max), j0, k0, i_max)
                .expect("catalog column pattern is valid")
        }
        SequencePattern::MirroredColumn { j0, k0 } => {
            let i_max = j0 + k0 + count - 1;
            mirrored_column_sequence(&pascal_triangle(i_max), j0, k0, i_max)
                .expect("catalog column pattern is valid")
        }
    }
}

/// First `count` terms of a record. Every listed pattern is evaluated and
/// they must agree (the symmetry-plane pairing); a disagreement would be an
/// internal bug and panics.
pub fn generate(record: &SequenceRecord, count: usize) -> Vec<BigInt> {
    let mut result: Option<Vec<BigInt>> = None;
    for pattern in &record.patterns {
        let terms = generate_pattern(pattern, count);
        match &result {
            None => result = Some(terms),
            Some(first) => assert_eq!(
                first, &terms,
                "paired index patterns of {} must generate the same sequence",
                record.oeis_id
            ),
        }
    }
    result.unwrap_or_default()
}

/// An OEIS b-file: ordered (index, value) pairs with consecutive indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub id: String,
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    /// Render in b-file format: one "index value" line per entry, LF endings.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for (idx, val) in &self.entries {
            out.push_str(&format!("{idx} {val}\n"));
        }
        out
    }
}

/// Parse b-file text. Lines starting with '#' and blank lines are skipped;
/// data lines are "index value"; indices must increase by exactly one.
pub fn parse_bfile(id: &str, text: &str) -> Result<BFile, Error> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        let mut tokens = s.split_whitespace();
        let idx_tok = tokens.next().expect("trimmed non-empty line has a token");
        let val_tok = tokens.next().ok_or_else(|| Error::Parse {
            line,
            message: "expected \"index value\"".to_string(),
        })?;
        if tokens.next().is_some() {
            return Err(Error::Parse {
                line,
                message: "trailing tokens after value".to_string(),
            });
        }
        let idx: i64 = idx_tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("invalid index {idx_tok:?}"),
        })?;
        let val: BigInt = val_tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("invalid value {val_tok:?}"),
        })?;
        if let Some(&(last, _)) = entries.last() {
            if idx != last + 1 {
                return Err(Error::NonConsecutive {
                    line,
                    expected: last + 1,
                    found: idx,
                });
            }
        }
        entries.push((idx, val));
    }
    Ok(BFile {
        id: id.to_string(),
        entries,
    })
}

/// Where a comparison first went wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    /// 0-based position within the generated terms.
    pub term_index: usize,
    /// The b-file's own index at that position.
    pub bfile_index: i64,
    pub expected: BigInt,
    pub found: BigInt,
}

/// Result of aligning generated terms against a b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchReport {
    pub oeis_id: String,
    /// Alignment chosen: generated term 0 sits at this position of the b-file.
    pub offset: usize,
    /// Consecutive agreeing terms from the alignment start.
    pub matched: usize,
    pub requested: usize,
    pub full_match: bool,
    /// None when the comparison matched fully or ran off the end of the
    /// b-file.
    pub first_mismatch: Option<Mismatch>,
}

/// Align `count` generated terms with the b-file, trying the record's
/// offset hint first and then sliding over offsets 0..=3; reports the best
/// alignment found rather than erroring on mismatch.
pub fn compare(
    record: &SequenceRecord,
    bfile: &BFile,
    count: usize,
) -> Result<MatchReport, Error> {
    if record.oeis_id != bfile.id {
        return Err(Error::IdMismatch {
            expected: record.oeis_id.clone(),
            found: bfile.id.clone(),
        });
    }
    let generated = generate(record, count);
    let mut offsets = vec![record.offset_hint];
    for o in 0..=3usize {
        if o != record.offset_hint {
            offsets.push(o);
        }
    }
    let run_at = |offset: usize| -> usize {
        let mut run = 0;
        while run < count
            && offset + run < bfile.entries.len()
            && bfile.entries[offset + run].1 == generated[run]
        {
            run += 1;
        }
        run
    };
    let mut best_offset = offsets[0];
    let mut best_run = run_at(best_offset);
    for &o in &offsets[1..] {
        if best_run == count {
            break;
        }
        let run = run_at(o);
        if run > best_run {
            best_run = run;
            best_offset = o;
        }
    }
    let first_mismatch = if best_run < count && best_offset + best_run < bfile.entries.len() {
        let (bidx, found) = &bfile.entries[best_offset + best_run];
        Some(Mismatch {
            term_index: best_run,
            bfile_index: *bidx,
            expected: generated[best_run].clone(),
            found: found.clone(),
        })
    } else {
        None
    };
    Ok(MatchReport {
        oeis_id: record.oeis_id.clone(),
        offset: best_offset,
        matched: best_run,
        requested: count,
        full_match: best_run == count,
        first_mismatch,
    })
}

/// Gegenbauer polynomial value C_m^(alpha)(x) in exact rationals, by the
/// classical three-term recurrence
///
/// ```text
/// C_0 = 1,  C_1 = 2*alpha*x,
/// m*C_m = 2x(m+alpha-1)*C_{m-1} - (m+2*alpha-2)*C_{m-2}.
/// ```
pub fn gegenbauer(m: usize, alpha: &Rational, x: &Rational) -> Rational {
    gegenbauer_row(m, alpha, x)
        .pop()
        .expect("row has m+1 values")
}

// C_0..=C_m in one pass.
fn gegenbauer_row(m: usize, alpha: &Rational, x: &Rational) -> Vec<Rational> {
    let one = Rational::one();
    let two = Rational::from_integer(BigInt::from(2));
    let two_x = &two * x;
    let mut row = Vec::with_capacity(m + 1);
    row.push(one.clone());
    if m == 0 {
        return row;
    }
    row.push(&two_x * alpha);
    for mm in 2..=m {
        let mm_rat = Rational::from_integer(BigInt::from(mm as u64));
        let lead = &two_x * &(&mm_rat + alpha - &one);
        let trail = &mm_rat + &(&two * alpha) - &two;
        let next = (&lead * &row[mm - 1] - &trail * &row[mm - 2]) / mm_rat;
        row.push(next);
    }
    row
}

/// A face value that fails to match its Gegenbauer counterpart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GegenbauerMismatch {
    pub i: usize,
    pub k: usize,
    pub face: BigInt,
    pub gegenbauer: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GegenbauerLevel {
    pub i: usize,
    pub checked: usize,
    pub first_mismatch: Option<GegenbauerMismatch>,
}

impl GegenbauerLevel {
    pub fn pass(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GegenbauerReport {
    pub levels: Vec<GegenbauerLevel>,
}

impl GegenbauerReport {
    pub fn all_pass(&self) -> bool {
        self.levels.iter().all(GegenbauerLevel::pass)
    }
}

/// Check, for 0 <= i <= i_max and 0 <= k <= 2i, that face row i of the
/// zero-extended tetrahedron over Pascal's triangle equals
/// C_m^(-i)(-3/2) with m = k for k < i and m = 2i-k otherwise, and that the
/// rational value is an exact integer. A failure is reported, not raised:
/// the correspondence is a conjecture under test.
pub fn check_gegenbauer_conjecture(i_max: usize) -> GegenbauerReport {
    let pascal = pascal_triangle(i_max);
    let extended = build_extended(&pascal, i_max).expect("enough rows by construction");
    let x = Rational::new(BigInt::from(-3), BigInt::from(2));
    let mut levels = Vec::with_capacity(i_max + 1);
    for i in 0..=i_max {
        let face = extended.face_row(i).expect("level built");
        let alpha = Rational::from_integer(BigInt::from(-(i as i64)));
        let row = gegenbauer_row(i, &alpha, &x);
        let mut first_mismatch = None;
        let mut checked = 0;
        for (k, face_val) in face.iter().enumerate() {
            let m = if k < i { k } else { 2 * i - k };
            let gval = &row[m];
            checked += 1;
            let ok = gval.is_integer() && gval.to_integer() == *face_val;
            if !ok {
                first_mismatch = Some(GegenbauerMismatch {
                    i,
                    k,
                    face: face_val.clone(),
                    gegenbauer: gval.clone(),
                });
                break;
            }
        }
        levels.push(GegenbauerLevel {
            i,
            checked,
            first_mismatch,
        });
    }
    GegenbauerReport { levels }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreePascalMismatch {
    pub i: usize,
    /// 0-based position within the row (length i + 2).
    pub position: usize,
    pub expected: BigInt,
    pub found: BigInt,
}

/// Result of checking rows k = 1 of the zero-extended construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreePascalReport {
    pub rows_checked: usize,
    /// Level 0 has no k = 1 row, so checking starts at i = 1.
    pub level0_skipped: bool,
    pub fixture_rows_compared: usize,
    pub first_mismatch: Option<ThreePascalMismatch>,
    pub fixture_mismatch: Option<ThreePascalMismatch>,
}

impl ThreePascalReport {
    pub fn all_pass(&self) -> bool {
        self.first_mismatch.is_none() && self.fixture_mismatch.is_none()
    }
}

/// Check that each extended row {h(i, j, 1)}, j = -1..=i, reads 1 at both
/// ends with interior t(i-1, j) + t(i, j) + t(i, j+1) over Pascal's
/// triangle, and compare against a flat triangle fixture when given (our
/// row i corresponds to fixture row i + 1).
pub fn check_three_pascal(i_max: usize, fixture: Option<&BFile>) -> ThreePascalReport {
    let pascal = pascal_triangle(i_max.max(1));
    let extended = build_extended(&pascal, i_max.max(1)).expect("enough rows by construction");
    let one = BigInt::one();
    let mut rows_checked = 0;
    let mut fixture_rows_compared = 0;
    let mut first_mismatch = None;
    let mut fixture_mismatch = None;
    for i in 1..=i_max {
        let row = extended.row(i, 1); // j = -1..=i, length i + 2
        let mut expected = Vec::with_capacity(i + 2);
        expected.push(one.clone());
        for j in 0..i {
            expected.push(pascal.entry(i - 1, j) + pascal.entry(i, j) + pascal.entry(i, j + 1));
        }
        expected.push(one.clone());
        rows_checked += 1;
        if first_mismatch.is_none() {
            if let Some(pos) = (0..row.len()).find(|&p| row[p] != expected[p]) {
                first_mismatch = Some(ThreePascalMismatch {
                    i,
                    position: pos,
                    expected: expected[pos].clone(),
                    found: row[pos].clone(),
                });
            }
        }
        if let Some(bf) = fixture {
            // Fixture row r occupies flat positions r(r+1)/2 .. +(r+1);
            // our row i lines up with fixture row i + 1.
            let r = i + 1;
            let start = r * (r + 1) / 2;
            if start + r + 1 <= bf.entries.len() {
                fixture_rows_compared += 1;
                if fixture_mismatch.is_none() {
                    if let Some(pos) =
                        (0..row.len()).find(|&p| bf.entries[start + p].1 != row[p])
                    {
                        fixture_mismatch = Some(ThreePascalMismatch {
                            i,
                            position: pos,
                            expected: bf.entries[start + pos].1.clone(),
                            found: row[pos].clone(),
                        });
                    }
                }
            }
        }
    }
    ThreePascalReport {
        rows_checked,
        level0_skipped: true,
        fixture_rows_compared,
        first_mismatch,
        fixture_mismatch,
    }
}
