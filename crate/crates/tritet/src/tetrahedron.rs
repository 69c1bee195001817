//! The Pascal-like tetrahedron H built over an arithmetical triangle T.
//!
//! Entries h(i, j, k) live at level i, row k parallel to the base face, and
//! column j. Row k = 0 of each level is row i of T; every other entry is the
//! sum of three neighbours:
//!
//! ```text
//! h(i, j, k) = h(i-1, j, k-1) + h(i, j, k-1) + h(i, j+1, k-1)
//! ```
//!
//! Besides the recursive builder this module evaluates single entries by two
//! independent summation formulas, extracts the edge/diagonal/column
//! sequences, verifies the structural identities (rule inheritance, the
//! symmetry plane, and the order-(j+k+1) linear recurrence), and builds the
//! zero-extended variant that admits negative column indices.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coeffs::{self, TrinomialTriple};
use crate::error::Error;
use crate::triangle::Triangle;

// Offset of row k inside the contiguous buffer of level i (standard layout:
// row k holds j = 0..=i-k).
#[inline]
fn offset(i: usize, k: usize) -> usize {
    k * (i + 1) - k * (k - 1) / 2
}

// Offset of row k inside the contiguous buffer of level i (extended layout:
// row k holds j = -k..=i at position j + k).
#[inline]
fn ext_offset(i: usize, k: usize) -> usize {
    k * (i + 1) + k * (k - 1) / 2
}

/// Levels 0..=L of H; level i holds rows k = 0..=i, row k holds j = 0..=i-k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tetrahedron {
    levels: Vec<Vec<BigInt>>,
}

impl Tetrahedron {
    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    /// Entry h(i, j, k). Panics when out of range; use [`Tetrahedron::get`]
    /// to probe.
    pub fn entry(&self, i: usize, j: usize, k: usize) -> &BigInt {
        assert!(
            i < self.levels.len() && k <= i && j <= i - k,
            "tetrahedron entry (i={i}, j={j}, k={k}) out of range"
        );
        &self.levels[i][offset(i, k) + j]
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Option<&BigInt> {
        if i < self.levels.len() && k <= i && j <= i - k {
            Some(&self.levels[i][offset(i, k) + j])
        } else {
            None
        }
    }

    /// Row k of level i as a slice (j = 0..=i-k).
    pub fn row(&self, i: usize, k: usize) -> &[BigInt] {
        let off = offset(i, k);
        &self.levels[i][off..off + (i - k + 1)]
    }

    /// The base face as a triangle (rows k = 0 of every level).
    pub fn face(&self) -> Triangle {
        let rows = (0..self.levels.len())
            .map(|i| self.row(i, 0).to_vec())
            .collect();
        Triangle::from_rows(rows).expect("face rows have valid lengths")
    }
}

/// Build levels 0..=levels of H over T by the three-term recursion.
pub fn build(t: &Triangle, levels: usize) -> Result<Tetrahedron, Error> {
    if t.rows() < levels + 1 {
        return Err(Error::Insufficient {
            what: "triangle rows",
            required: levels + 1,
            available: t.rows(),
        });
    }
    let mut out: Vec<Vec<BigInt>> = Vec::with_capacity(levels + 1);
    for i in 0..=levels {
        let mut lev: Vec<BigInt> = Vec::with_capacity((i + 1) * (i + 2) / 2);
        lev.extend(t.row(i).iter().cloned());
        for k in 1..=i {
            // Row k needs row k-1 of this level and of the previous one.
            let same = offset(i, k - 1);
            let prev = offset(i - 1, k - 1);
            for j in 0..=(i - k) {
                let v = &out[i - 1][prev + j] + &lev[same + j] + &lev[same + j + 1];
                lev.push(v);
            }
        }
        out.push(lev);
    }
    Ok(Tetrahedron { levels: out })
}

fn check_indices(t: &Triangle, i: usize, j: usize, k: usize) -> Result<(), Error> {
    if k > i || j > i - k {
        return Err(Error::IndexRange {
            what: "tetrahedron index (i, j, k)",
            range: format!("0 <= k <= i, 0 <= j <= i-k; got i={i}, j={j}, k={k}"),
        });
    }
    if t.rows() < i + 1 {
        return Err(Error::Insufficient {
            what: "triangle rows",
            required: i + 1,
            available: t.rows(),
        });
    }
    Ok(())
}

/// h(i, j, k) evaluated directly from T:
///
/// ```text
/// h(i, j, k) = sum_{r=0}^{k} sum_{s=0}^{r} trinomial(k; s, k-r, r-s) * t(i-k+r, j+s)
/// ```
///
/// which overlays level k of Pascal's tetrahedron on the matching patch of T.
pub fn entry_explicit(t: &Triangle, i: usize, j: usize, k: usize) -> Result<BigInt, Error> {
    check_indices(t, i, j, k)?;
    let level = coeffs::tetra_level(k);
    let mut acc = BigInt::zero();
    for (s, r, coeff) in level.iter() {
        acc += coeff * t.entry(i - k + r, j + s);
    }
    Ok(acc)
}

/// Same value by the re-indexed sum
///
/// ```text
/// h(i, j, k) = sum_{r=i-k}^{i} sum_{s=j}^{j+k-i+r} trinomial(k; s-j, i-r, k+j+r-s-i) * t(r, s)
/// ```
///
/// kept as an independent implementation for cross-checking.
pub fn entry_explicit_reindexed(
    t: &Triangle,
    i: usize,
    j: usize,
    k: usize,
) -> Result<BigInt, Error> {
    check_indices(t, i, j, k)?;
    let mut acc = BigInt::zero();
    for r in (i - k)..=i {
        for s in j..=(j + k + r - i) {
            let triple = TrinomialTriple::new(
                k as i64,
                (s - j) as i64,
                (i - r) as i64,
                (k + j + r) as i64 - (s + i) as i64,
            )
            .expect("in-range indices always form a valid triple");
            acc += coeffs::trinomial(&triple) * t.entry(r, s);
        }
    }
    Ok(acc)
}

/// The edge sequence b_n = h(n, 0, n) for n = 0..=n_max.
pub fn edge_sequence(t: &Triangle, n_max: usize) -> Result<Vec<BigInt>, Error> {
    let h = build(t, n_max)?;
    Ok((0..=n_max).map(|n| h.entry(n, 0, n).clone()).collect())
}

/// Terms h(i, j0, i-w) for i = w..=i_max (direction parallel to the edge).
pub fn diagonal_sequence(
    t: &Triangle,
    j0: usize,
    w: usize,
    i_max: usize,
) -> Result<Vec<BigInt>, Error> {
    if j0 > w || w > i_max {
        return Err(Error::IndexRange {
            what: "diagonal parameters",
            range: format!("0 <= j0 <= w <= i_max; got j0={j0}, w={w}, i_max={i_max}"),
        });
    }
    let h = build(t, i_max)?;
    Ok((w..=i_max).map(|i| h.entry(i, j0, i - w).clone()).collect())
}

/// Terms h(i, j0, k0) for i = j0+k0..=i_max (fixed row and column).
pub fn column_sequence(
    t: &Triangle,
    j0: usize,
    k0: usize,
    i_max: usize,
) -> Result<Vec<BigInt>, Error> {
    if i_max < j0 + k0 {
        return Err(Error::IndexRange {
            what: "column parameters",
            range: format!("i_max >= j0 + k0; got j0={j0}, k0={k0}, i_max={i_max}"),
        });
    }
    let h = build(t, i_max)?;
    Ok(((j0 + k0)..=i_max)
        .map(|i| h.entry(i, j0, k0).clone())
        .collect())
}

/// Terms h(i, i-(j0+k0), k0) for i = j0+k0..=i_max, the mirror of
/// [`column_sequence`] across the symmetry plane.
pub fn mirrored_column_sequence(
    t: &Triangle,
    j0: usize,
    k0: usize,
    i_max: usize,
) -> Result<Vec<BigInt>, Error> {
    if i_max < j0 + k0 {
        return Err(Error::IndexRange {
            what: "column parameters",
            range: format!("i_max >= j0 + k0; got j0={j0}, k0={k0}, i_max={i_max}"),
        });
    }
    let h = build(t, i_max)?;
    Ok(((j0 + k0)..=i_max)
        .map(|i| h.entry(i, i - j0 - k0, k0).clone())
        .collect())
}

/// A single failed identity instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

/// Outcome of an identity sweep over all stored indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checked: usize,
    pub first_violation: Option<Violation>,
}

impl VerifyReport {
    pub fn holds(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// If the face obeys Pascal's rule, every row of H inherits it:
/// h(i, j, k) = h(i-1, j-1, k) + h(i-1, j, k) for k+2 <= i, 1 <= j <= i-1-k.
///
/// Refuses (hypothesis error) when the face does not obey the rule, since
/// the implication only runs one way.
pub fn verify_pascal_inheritance(h: &Tetrahedron) -> Result<VerifyReport, Error> {
    if !h.face().satisfies_pascal_rule() {
        return Err(Error::Hypothesis(
            "the base triangle satisfies Pascal's rule",
        ));
    }
    let mut checked = 0;
    let mut first_violation = None;
    'sweep: for i in 2..=h.max_level() {
        for k in 0..=(i - 2) {
            for j in 1..=(i - 1 - k) {
                checked += 1;
                let lhs = h.entry(i, j, k);
                let rhs = h.entry(i - 1, j - 1, k) + h.entry(i - 1, j, k);
                if *lhs != rhs {
                    first_violation = Some(Violation {
                        i,
                        j,
                        k,
                        lhs: lhs.clone(),
                        rhs,
                    });
                    break 'sweep;
                }
            }
        }
    }
    Ok(VerifyReport {
        checked,
        first_violation,
    })
}

/// If the face is vertically symmetric, H has a symmetry plane:
/// h(i, j, k) = h(i, i-(j+k), k) at every index.
///
/// Refuses (hypothesis error) when the face is not symmetric.
pub fn verify_symmetry_plane(h: &Tetrahedron) -> Result<VerifyReport, Error> {
    if !h.face().is_vertically_symmetric() {
        return Err(Error::Hypothesis(
            "the base triangle has a vertical symmetry axis",
        ));
    }
    let mut checked = 0;
    let mut first_violation = None;
    'sweep: for i in 0..=h.max_level() {
        for k in 0..=i {
            for j in 0..=(i - k) {
                checked += 1;
                let lhs = h.entry(i, j, k);
                let rhs = h.entry(i, i - j - k, k);
                if lhs != rhs {
                    first_violation = Some(Violation {
                        i,
                        j,
                        k,
                        lhs: lhs.clone(),
                        rhs: rhs.clone(),
                    });
                    break 'sweep;
                }
            }
        }
    }
    Ok(VerifyReport {
        checked,
        first_violation,
    })
}

/// Result of checking the order-m linear recurrence along a (j, k) column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub j: usize,
    pub k: usize,
    /// Always j + k + 1.
    pub order: usize,
    pub i_lo: usize,
    pub i_hi: usize,
    pub holds: bool,
    /// First window start i with a non-zero alternating sum, and the residual.
    pub first_violation: Option<(usize, BigInt)>,
}

/// For T with constant left diagonal obeying Pascal's rule, the sequence
/// {h(i, j, k)}_i is annihilated by the m-th power of the difference
/// operator, m = j + k + 1:
///
/// ```text
/// sum_{l=0}^{m} (-1)^l C(m, l) h(i+l, j, k) = 0    for every i >= j+k.
/// ```
///
/// Checks every window start i in i_lo..=i_hi.
pub fn verify_recurrence(
    t: &Triangle,
    j: usize,
    k: usize,
    i_lo: usize,
    i_hi: usize,
) -> Result<RecurrenceReport, Error> {
    if !t.has_constant_left_diagonal() {
        return Err(Error::Hypothesis(
            "the base triangle has a constant left diagonal",
        ));
    }
    if !t.satisfies_pascal_rule() {
        return Err(Error::Hypothesis(
            "the base triangle satisfies Pascal's rule",
        ));
    }
    let m = j + k + 1;
    if i_lo < j + k || i_hi < i_lo {
        return Err(Error::IndexRange {
            what: "recurrence window",
            range: format!("j+k <= i_lo <= i_hi; got i_lo={i_lo}, i_hi={i_hi}, j+k={}", j + k),
        });
    }
    let h = build(t, i_hi + m)?;
    Ok(recurrence_scan(&h, j, k, m, i_lo, i_hi))
}

/// Same check on an already built tetrahedron (hypotheses taken from its
/// face). The windows must fit: i_hi + j + k + 1 <= max level.
pub fn verify_recurrence_in(
    h: &Tetrahedron,
    j: usize,
    k: usize,
    i_lo: usize,
    i_hi: usize,
) -> Result<RecurrenceReport, Error> {
    let face = h.face();
    if !face.has_constant_left_diagonal() {
        return Err(Error::Hypothesis(
            "the base triangle has a constant left diagonal",
        ));
    }
    if !face.satisfies_pascal_rule() {
        return Err(Error::Hypothesis(
            "the base triangle satisfies Pascal's rule",
        ));
    }
    let m = j + k + 1;
    if i_lo < j + k || i_hi < i_lo {
        return Err(Error::IndexRange {
            what: "recurrence window",
            range: format!("j+k <= i_lo <= i_hi; got i_lo={i_lo}, i_hi={i_hi}, j+k={}", j + k),
        });
    }
    if h.max_level() < i_hi + m {
        return Err(Error::Insufficient {
            what: "tetrahedron levels",
            required: i_hi + m + 1,
            available: h.max_level() + 1,
        });
    }
    Ok(recurrence_scan(h, j, k, m, i_lo, i_hi))
}

fn recurrence_scan(
    h: &Tetrahedron,
    j: usize,
    k: usize,
    m: usize,
    i_lo: usize,
    i_hi: usize,
) -> RecurrenceReport {
    let weights: Vec<BigInt> = (0..=m)
        .map(|l| {
            let c = coeffs::binomial(m as i64, l as i64).expect("m >= 0");
            if l % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    let mut first_violation = None;
    for i in i_lo..=i_hi {
        let mut acc = BigInt::zero();
        for (l, wt) in weights.iter().enumerate() {
            acc += wt * h.entry(i + l, j, k);
        }
        if !acc.is_zero() {
            first_violation = Some((i, acc));
            break;
        }
    }
    RecurrenceReport {
        j,
        k,
        order: m,
        i_lo,
        i_hi,
        holds: first_violation.is_none(),
        first_violation,
    }
}

/// The zero-extended tetrahedron: the same recursion over T zero-extended to
/// all column indices, so level i, row k holds j = -k..=i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedTetrahedron {
    levels: Vec<Vec<BigInt>>,
}

impl ExtendedTetrahedron {
    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    /// Entry h(i, j, k) with signed j. Panics when out of the stored range;
    /// values outside it are identically zero.
    pub fn entry(&self, i: usize, j: i64, k: usize) -> &BigInt {
        assert!(
            i < self.levels.len() && k <= i && j >= -(k as i64) && j <= i as i64,
            "extended entry (i={i}, j={j}, k={k}) out of range"
        );
        &self.levels[i][ext_offset(i, k) + (j + k as i64) as usize]
    }

    pub fn get(&self, i: usize, j: i64, k: usize) -> Option<&BigInt> {
        if i < self.levels.len() && k <= i && j >= -(k as i64) && j <= i as i64 {
            Some(&self.levels[i][ext_offset(i, k) + (j + k as i64) as usize])
        } else {
            None
        }
    }

    /// Row k of level i as a slice ordered j = -k..=i (length i + k + 1).
    pub fn row(&self, i: usize, k: usize) -> &[BigInt] {
        let off = ext_offset(i, k);
        &self.levels[i][off..off + (i + k + 1)]
    }

    /// The face opposite the apex: row k = i of level i, j = -i..=i
    /// (2i + 1 values).
    pub fn face_row(&self, i: usize) -> Result<&[BigInt], Error> {
        if i >= self.levels.len() {
            return Err(Error::IndexRange {
                what: "face row level i",
                range: format!("0..={}", self.max_level()),
            });
        }
        Ok(self.row(i, i))
    }
}

/// Build the zero-extended tetrahedron over T.
///
/// Restricted to 0 <= j <= i-k it reproduces [`build`] exactly; the new
/// entries come from the same recursion with out-of-range neighbours read
/// as zero.
pub fn build_extended(t: &Triangle, levels: usize) -> Result<ExtendedTetrahedron, Error> {
    if t.rows() < levels + 1 {
        return Err(Error::Insufficient {
            what: "triangle rows",
            required: levels + 1,
            available: t.rows(),
        });
    }
    let mut out: Vec<Vec<BigInt>> = Vec::with_capacity(levels + 1);
    for i in 0..=levels {
        let size = (i + 1) * (i + 1) + i * (i + 1) / 2;
        let mut lev: Vec<BigInt> = Vec::with_capacity(size);
        lev.extend(t.row(i).iter().cloned());
        for k in 1..=i {
            // Row k-1 of this level spans j = -(k-1)..=i, of the previous
            // level j = -(k-1)..=i-1; anything outside reads as zero.
            let same = ext_offset(i, k - 1);
            let same_len = i + k;
            let prev = ext_offset(i - 1, k - 1);
            let prev_len = i + k - 1;
            for j in -(k as i64)..=(i as i64) {
                let idx = j + k as i64 - 1; // position of column j in row k-1
                let mut v = BigInt::zero();
                if idx >= 0 && (idx as usize) < prev_len {
                    v += &out[i - 1][prev + idx as usize];
                }
                if idx >= 0 && (idx as usize) < same_len {
                    v += &lev[same + idx as usize];
                }
                let idx1 = idx + 1;
                if idx1 >= 0 && (idx1 as usize) < same_len {
                    v += &lev[same + idx1 as usize];
                }
                lev.push(v);
            }
        }
        out.push(lev);
    }
    Ok(ExtendedTetrahedron { levels: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangle::{gat_triangle, pascal_triangle, GatSpec, Triangle};
    use alloc::vec;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn bigrow(vals: &[i64]) -> Vec<BigInt> {
        vals.iter().map(|&v| big(v)).collect()
    }

    #[test]
    fn build_matches_table_entries() {
        let t = pascal_triangle(6);
        let h = build(&t, 6).unwrap();
        assert_eq!(*h.entry(3, 1, 2), big(17));
        assert_eq!(*h.entry(2, 1, 1), big(4));
        assert_eq!(*h.entry(2, 0, 2), big(11));
        // face copy
        for i in 0..=6 {
            assert_eq!(h.row(i, 0), t.row(i));
        }
    }

    #[test]
    fn build_requires_enough_rows() {
        let t = pascal_triangle(3);
        assert!(matches!(
            build(&t, 5),
            Err(Error::Insufficient {
                required: 6,
                available: 4,
                ..
            })
        ));
    }

    #[test]
    fn explicit_formulas_match_build() {
        let t = Triangle::from_rows(vec![
            bigrow(&[3]),
            bigrow(&[-1, 4]),
            bigrow(&[2, 0, -5]),
            bigrow(&[7, 1, 1, 2]),
            bigrow(&[-3, 6, -2, 9, 4]),
        ])
        .unwrap();
        let h = build(&t, 4).unwrap();
        for i in 0..=4 {
            for k in 0..=i {
                for j in 0..=(i - k) {
                    let want = h.entry(i, j, k);
                    assert_eq!(entry_explicit(&t, i, j, k).unwrap(), *want);
                    assert_eq!(entry_explicit_reindexed(&t, i, j, k).unwrap(), *want);
                }
            }
        }
    }

    #[test]
    fn explicit_at_k0_is_face() {
        let t = pascal_triangle(5);
        for i in 0..=5 {
            for j in 0..=i {
                assert_eq!(entry_explicit(&t, i, j, 0).unwrap(), *t.entry(i, j));
            }
        }
    }

    #[test]
    fn explicit_checks_ranges() {
        let t = pascal_triangle(5);
        assert!(matches!(
            entry_explicit(&t, 3, 2, 2),
            Err(Error::IndexRange { .. })
        ));
        assert!(matches!(
            entry_explicit(&t, 9, 0, 0),
            Err(Error::Insufficient { .. })
        ));
    }

    #[test]
    fn edge_sequence_examples() {
        let t = pascal_triangle(4);
        assert_eq!(
            edge_sequence(&t, 4).unwrap(),
            bigrow(&[1, 3, 11, 45, 195])
        );
        let zeros = Triangle::from_rows(vec![bigrow(&[0]), bigrow(&[0, 0]), bigrow(&[0, 0, 0])])
            .unwrap();
        assert_eq!(edge_sequence(&zeros, 2).unwrap(), bigrow(&[0, 0, 0]));
        let single = Triangle::from_rows(vec![bigrow(&[1])]).unwrap();
        assert_eq!(edge_sequence(&single, 0).unwrap(), bigrow(&[1]));
    }

    #[test]
    fn diagonal_sequence_examples() {
        let t = pascal_triangle(5);
        assert_eq!(
            diagonal_sequence(&t, 0, 1, 5).unwrap(),
            bigrow(&[1, 4, 17, 75, 339])
        );
        assert_eq!(
            diagonal_sequence(&t, 0, 2, 5).unwrap(),
            bigrow(&[1, 5, 24, 114])
        );
        assert_eq!(
            diagonal_sequence(&t, 1, 2, 5).unwrap(),
            bigrow(&[2, 8, 34, 150])
        );
        assert!(matches!(
            diagonal_sequence(&t, 3, 2, 5),
            Err(Error::IndexRange { .. })
        ));
    }

    #[test]
    fn column_sequence_examples() {
        let t = pascal_triangle(6);
        assert_eq!(
            column_sequence(&t, 1, 1, 6).unwrap(),
            bigrow(&[4, 8, 13, 19, 26])
        );
        assert_eq!(
            column_sequence(&t, 2, 1, 6).unwrap(),
            bigrow(&[5, 13, 26, 45])
        );
        assert_eq!(
            column_sequence(&t, 1, 2, 6).unwrap(),
            bigrow(&[17, 34, 58, 90])
        );
        assert!(matches!(
            column_sequence(&t, 4, 3, 6),
            Err(Error::IndexRange { .. })
        ));
    }

    #[test]
    fn inheritance_holds_for_pascal_and_gat() {
        let h = build(&pascal_triangle(10), 10).unwrap();
        assert!(verify_pascal_inheritance(&h).unwrap().holds());

        let spec = GatSpec::new(big(3), bigrow(&[1, 4, 1, 5, 9, 2, 6, 5]));
        let g = gat_triangle(&spec, 8).unwrap();
        let h = build(&g, 8).unwrap();
        assert!(verify_pascal_inheritance(&h).unwrap().holds());
    }

    #[test]
    fn inheritance_refuses_without_hypothesis() {
        let t = Triangle::from_rows(vec![bigrow(&[1]), bigrow(&[1, 1]), bigrow(&[1, 5, 1])])
            .unwrap();
        let h = build(&t, 2).unwrap();
        assert!(matches!(
            verify_pascal_inheritance(&h),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn symmetry_plane_for_pascal() {
        let h = build(&pascal_triangle(8), 8).unwrap();
        let report = verify_symmetry_plane(&h).unwrap();
        assert!(report.holds());
        // direct instance: h(3, 0, 1) = h(3, 2, 1)
        assert_eq!(h.entry(3, 0, 1), h.entry(3, 2, 1));
    }

    #[test]
    fn symmetry_refuses_on_asymmetric_face() {
        let t = Triangle::from_rows(vec![bigrow(&[1]), bigrow(&[1, 2])]).unwrap();
        let h = build(&t, 1).unwrap();
        assert!(matches!(
            verify_symmetry_plane(&h),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn recurrence_orders_on_pascal() {
        let t = pascal_triangle(20);
        // j=0, k=0: order 1, constant edge of ones
        let r = verify_recurrence(&t, 0, 0, 0, 10).unwrap();
        assert_eq!(r.order, 1);
        assert!(r.holds);
        // j=0, k=1: order 2, affine face row
        let r = verify_recurrence(&t, 0, 1, 1, 10).unwrap();
        assert_eq!(r.order, 2);
        assert!(r.holds);
    }

    #[test]
    fn recurrence_on_gat() {
        let spec = GatSpec::new(
            big(3),
            bigrow(&[1, 4, 1, 5, 9, 2, 6, 5, 3, 5, 8, 9, 7, 9, 3, 2, 3, 8, 4, 6, 2, 6, 4]),
        );
        let g = gat_triangle(&spec, 23).unwrap();
        let r = verify_recurrence(&g, 1, 1, 2, 20).unwrap();
        assert_eq!(r.order, 3);
        assert!(r.holds, "violation: {:?}", r.first_violation);
    }

    #[test]
    fn recurrence_refuses_without_hypotheses() {
        let t = Triangle::from_rows(vec![bigrow(&[1]), bigrow(&[2, 1])]).unwrap();
        assert!(matches!(
            verify_recurrence(&t, 0, 0, 0, 0),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn extended_small_rows() {
        let t = pascal_triangle(3);
        let e = build_extended(&t, 3).unwrap();
        assert_eq!(e.row(1, 1), &bigrow(&[1, 3, 1])[..]);
        assert_eq!(e.row(2, 1), &bigrow(&[1, 4, 4, 1])[..]);
        assert_eq!(e.row(2, 2), &bigrow(&[1, 6, 11, 6, 1])[..]);
        assert_eq!(e.face_row(0).unwrap(), &bigrow(&[1])[..]);
        assert_eq!(e.face_row(1).unwrap(), &bigrow(&[1, 3, 1])[..]);
        assert_eq!(e.face_row(2).unwrap(), &bigrow(&[1, 6, 11, 6, 1])[..]);
        assert_eq!(e.face_row(3).unwrap(), &bigrow(&[1, 9, 30, 45, 30, 9, 1])[..]);
        assert!(e.face_row(4).is_err());
    }

    #[test]
    fn extended_restriction_equals_standard() {
        let spec = GatSpec::new(big(2), bigrow(&[5, -1, 3, 2, 8, 1, 1, 4]));
        let t = gat_triangle(&spec, 8).unwrap();
        let h = build(&t, 8).unwrap();
        let e = build_extended(&t, 8).unwrap();
        for i in 0..=8usize {
            for k in 0..=i {
                for j in 0..=(i - k) {
                    assert_eq!(e.entry(i, j as i64, k), h.entry(i, j, k));
                }
            }
        }
    }
}
