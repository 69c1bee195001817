//! Finite arithmetical triangles: storage, generators, closed forms, and
//! structural predicates.
//!
//! A triangle holds rows 0..=R; row i has exactly i+1 entries t(i, j). The
//! generators cover Pascal's triangle and the triangles with a constant left
//! diagonal, prescribed right diagonal and Pascal's rule inside.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeffs;
use crate::error::Error;

/// A finite prefix of an arithmetical triangle; immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<BigInt>>,
}

impl Triangle {
    /// Validate user-supplied rows: row i must have exactly i+1 entries.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, Error> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(Error::Shape {
                    row: i,
                    expected: i + 1,
                    found: row.len(),
                });
            }
        }
        Ok(Self { rows })
    }

    /// Number of stored rows (top row index + 1).
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.rows[i]
    }

    /// Entry t(i, j). Panics if out of range; use [`Triangle::get`] to probe.
    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&BigInt> {
        self.rows.get(i).and_then(|r| r.get(j))
    }

    pub fn as_rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<BigInt>> {
        self.rows
    }

    /// True iff t(i, j) = t(i, i-j) for every stored entry.
    pub fn is_vertically_symmetric(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, row)| (0..=i / 2).all(|j| row[j] == row[i - j]))
    }

    /// True iff t(i, j) = t(i-1, j-1) + t(i-1, j) for all interior entries
    /// (i >= 2, 1 <= j <= i-1).
    pub fn satisfies_pascal_rule(&self) -> bool {
        (2..self.rows.len()).all(|i| {
            (1..i).all(|j| self.rows[i][j] == &self.rows[i - 1][j - 1] + &self.rows[i - 1][j])
        })
    }

    /// True iff every t(i, 0) equals t(0, 0).
    pub fn has_constant_left_diagonal(&self) -> bool {
        match self.rows.first() {
            Some(apex) => self.rows.iter().all(|row| row[0] == apex[0]),
            None => true,
        }
    }

    /// Short human description used by transform reports.
    pub fn describe(&self) -> String {
        format!("triangle with {} rows", self.rows())
    }
}

/// Pascal's triangle rows 0..=rows, t(i, j) = C(i, j).
pub fn pascal_triangle(rows: usize) -> Triangle {
    let mut out: Vec<Vec<BigInt>> = Vec::with_capacity(rows + 1);
    for i in 0..=rows {
        let mut row = Vec::with_capacity(i + 1);
        row.push(BigInt::from(1));
        for j in 1..i {
            row.push(&out[i - 1][j - 1] + &out[i - 1][j]);
        }
        if i > 0 {
            row.push(BigInt::from(1));
        }
        out.push(row);
    }
    Triangle { rows: out }
}

/// Constant c on the left diagonal, seeds a_1, a_2, ... on the right.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GatSpec {
    c: BigInt,
    seeds: Vec<BigInt>,
}

impl GatSpec {
    pub fn new(c: BigInt, seeds: Vec<BigInt>) -> Self {
        Self { c, seeds }
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    pub fn seeds(&self) -> &[BigInt] {
        &self.seeds
    }
}

/// Rows 0..=rows with t(i, 0) = c, t(i, i) = a_i for i >= 1, and Pascal's
/// rule for the interior. The apex t(0, 0) is c.
pub fn gat_triangle(spec: &GatSpec, rows: usize) -> Result<Triangle, Error> {
    if spec.seeds.len() < rows {
        return Err(Error::Insufficient {
            what: "GAT seeds",
            required: rows,
            available: spec.seeds.len(),
        });
    }
    let mut out: Vec<Vec<BigInt>> = vec![vec![spec.c.clone()]];
    for i in 1..=rows {
        let mut row = Vec::with_capacity(i + 1);
        row.push(spec.c.clone());
        for j in 1..i {
            row.push(&out[i - 1][j - 1] + &out[i - 1][j]);
        }
        row.push(spec.seeds[i - 1].clone());
        out.push(row);
    }
    Ok(Triangle { rows: out })
}

/// Closed form for a GAT entry:
///
/// t(i, j) = c * sum_{p=0}^{i-j-1} C(i-2-p, j-1)
///         + sum_{q=0}^{j-1} C(i-2-q, j-1-q) * a_{q+1}
///
/// for interior 1 <= j <= i-1; the boundaries return c and a_i directly.
pub fn gat_entry_closed(spec: &GatSpec, i: usize, j: usize) -> Result<BigInt, Error> {
    if j > i {
        return Err(Error::IndexRange {
            what: "GAT column j",
            range: format!("0..={i}"),
        });
    }
    if j == 0 {
        return Ok(spec.c.clone());
    }
    if j == i {
        return match spec.seeds.get(i - 1) {
            Some(a) => Ok(a.clone()),
            None => Err(Error::Insufficient {
                what: "GAT seeds",
                required: i,
                available: spec.seeds.len(),
            }),
        };
    }
    if spec.seeds.len() < j {
        return Err(Error::Insufficient {
            what: "GAT seeds",
            required: j,
            available: spec.seeds.len(),
        });
    }
    let mut acc = BigInt::zero();
    let (i, j) = (i as i64, j as i64);
    for p in 0..=(i - j - 1) {
        acc += coeffs::binomial(i - 2 - p, j - 1)?;
    }
    acc *= &spec.c;
    for q in 0..=(j - 1) {
        acc += coeffs::binomial(i - 2 - q, j - 1 - q)? * &spec.seeds[q as usize];
    }
    Ok(acc)
}
