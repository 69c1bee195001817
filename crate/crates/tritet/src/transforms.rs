//! The trinomial-coefficient transform computed directly from T, the b*
//! probe, the closed forms for the Pascal face, and the Vandermonde-like
//! binomial identity checker.
//!
//! `tetra_transform` is evaluated straight from the defining double sum,
//! deliberately not via the tetrahedron builder, so the edge/transform
//! equality is tested between two independent code paths.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeffs;
use crate::error::Error;
use crate::triangle::Triangle;

// Dense rows of Pascal's triangle, grown additively on demand. Used to keep
// the O(n^2)-term sums below from paying a fresh multiplicative binomial per
// term.
struct BinomialRows {
    rows: Vec<Vec<BigInt>>,
}

impl BinomialRows {
    fn with_max(n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut row = Vec::with_capacity(i + 1);
            row.push(BigInt::one());
            for j in 1..i {
                row.push(&rows[i - 1][j - 1] + &rows[i - 1][j]);
            }
            if i > 0 {
                row.push(BigInt::one());
            }
            rows.push(row);
        }
        Self { rows }
    }

    fn c(&self, n: usize, k: usize) -> &BigInt {
        &self.rows[n][k]
    }
}

/// The transform b_0..b_n of a triangle, with a description of its source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformSequence {
    pub terms: Vec<BigInt>,
    pub source: String,
}

impl TransformSequence {
    pub fn with_source(mut self, source: String) -> Self {
        self.source = source;
        self
    }
}

/// The trinomial-coefficient transform of T:
///
/// ```text
/// b_n = sum_{i=0}^{n} sum_{j=0}^{i} trinomial(n; j, n-i, i-j) * t(i, j)
///     = sum_{i=0}^{n} sum_{j=0}^{i} C(n, j) * C(n-j, n-i) * t(i, j)
/// ```
pub fn tetra_transform(t: &Triangle, n_max: usize) -> Result<TransformSequence, Error> {
    if t.rows() < n_max + 1 {
        return Err(Error::Insufficient {
            what: "triangle rows",
            required: n_max + 1,
            available: t.rows(),
        });
    }
    let table = BinomialRows::with_max(n_max);
    let mut terms = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = BigInt::zero();
        for i in 0..=n {
            for j in 0..=i {
                acc += table.c(n, j) * table.c(n - j, n - i) * t.entry(i, j);
            }
        }
        terms.push(acc);
    }
    Ok(TransformSequence {
        terms,
        source: t.describe(),
    })
}

/// The b* probe next to the reference transform, with the first index where
/// they differ (if any).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarReport {
    pub star: TransformSequence,
    pub base: TransformSequence,
    pub first_disagreement: Option<usize>,
}

impl StarReport {
    pub fn agrees(&self) -> bool {
        self.first_disagreement.is_none()
    }
}

/// Literal evaluation of the alternative transform
///
/// ```text
/// b*_n = sum_{i=0}^{n} sum_{j=0}^{i} trinomial(n; i, j, n-i-j) * t(i, j)
/// ```
///
/// with the zero convention for n-i-j < 0, compared termwise against
/// [`tetra_transform`]. Equality of the two is a reported observation, not
/// an assertion: this probe documents where they agree and where they first
/// split.
pub fn tetra_transform_star(t: &Triangle, n_max: usize) -> Result<StarReport, Error> {
    let base = tetra_transform(t, n_max)?;
    let mut terms = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut acc = BigInt::zero();
        for i in 0..=n {
            for j in 0..=i {
                let coeff = coeffs::trinomial_or_zero(
                    n as i64,
                    i as i64,
                    j as i64,
                    n as i64 - i as i64 - j as i64,
                )?;
                acc += coeff * t.entry(i, j);
            }
        }
        terms.push(acc);
    }
    let first_disagreement = terms
        .iter()
        .zip(base.terms.iter())
        .position(|(a, b)| a != b);
    Ok(StarReport {
        star: TransformSequence {
            terms,
            source: base.source.clone(),
        },
        base,
        first_disagreement,
    })
}

/// Closed form for an entry of the tetrahedron over Pascal's triangle:
///
/// ```text
/// h(i, j, k) = sum_{l=0}^{k} C(2l+i-k, l+j) * C(k, l)
/// ```
pub fn closed_form_entry(i: usize, j: usize, k: usize) -> Result<BigInt, Error> {
    if k > i || j > i - k {
        return Err(Error::IndexRange {
            what: "tetrahedron index (i, j, k)",
            range: format!("0 <= k <= i, 0 <= j <= i-k; got i={i}, j={j}, k={k}"),
        });
    }
    let mut acc = BigInt::zero();
    for l in 0..=k {
        acc += coeffs::binomial((2 * l + i - k) as i64, (l + j) as i64)?
            * coeffs::binomial(k as i64, l as i64)?;
    }
    Ok(acc)
}

/// b_n = sum_i C(n, i) a_i; returns a list the same length as the input.
pub fn binomial_transform(a: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let table = BinomialRows::with_max(a.len() - 1);
    (0..a.len())
        .map(|n| (0..=n).map(|i| table.c(n, i) * &a[i]).sum())
        .collect()
}

/// C(2n, n).
pub fn central_binomial(n: usize) -> BigInt {
    coeffs::binomial(2 * n as i64, n as i64).expect("2n >= 0")
}

/// Both sides of one instance of the identity, for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluate both sides of
///
/// ```text
/// sum_{i=0}^{n} C(n, i) * C(n+m, i+k) = C(2n+m, n+k),    0 <= k <= m,
/// ```
///
/// exactly. Both sides go through the multiplicative binomial, so the sweep
/// doubles as a regression test for it.
pub fn check_vandermonde_like(n: usize, m: usize, k: usize) -> Result<IdentityCheck, Error> {
    if k > m {
        return Err(Error::Domain(format!(
            "identity requires 0 <= k <= m, got k = {k}, m = {m}"
        )));
    }
    let mut lhs = BigInt::zero();
    for i in 0..=n {
        lhs += coeffs::binomial(n as i64, i as i64)?
            * coeffs::binomial((n + m) as i64, (i + k) as i64)?;
    }
    let rhs = coeffs::binomial((2 * n + m) as i64, (n + k) as i64)?;
    Ok(IdentityCheck { lhs, rhs })
}
