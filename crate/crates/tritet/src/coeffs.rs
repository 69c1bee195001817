//! Exact binomial and trinomial coefficients and the triangular levels of
//! Pascal's tetrahedron.
//!
//! The trinomial coefficient used throughout is the tetrahedron one,
//! n!/(p! q! r!) with p + q + r = n, computed as C(n,p)*C(n-p,q). Every value
//! is an arbitrary-precision signed integer; there is no floating point in
//! this crate.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;

/// Binomial coefficient by the multiplicative formula, valid inputs only.
pub(crate) fn binom(n: u64, k: u64) -> BigInt {
    debug_assert!(k <= n);
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // Exact at every step: the partial product is C(n, i+1) * i! / i!.
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// C(n, j) with the zero convention: 0 whenever j is outside 0..=n.
pub fn binomial(n: i64, j: i64) -> Result<BigInt, Error> {
    if n < 0 {
        return Err(Error::Domain(format!("binomial requires n >= 0, got n = {n}")));
    }
    if j < 0 || j > n {
        return Ok(BigInt::zero());
    }
    Ok(binom(n as u64, j as u64))
}

/// Index triple (n; p, q, r) with p + q + r = n, all non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TrinomialTriple {
    n: u64,
    p: u64,
    q: u64,
    r: u64,
}

impl TrinomialTriple {
    pub fn new(n: i64, p: i64, q: i64, r: i64) -> Result<Self, Error> {
        if n < 0 || p < 0 || q < 0 || r < 0 {
            return Err(Error::Domain(format!(
                "trinomial parts must be non-negative, got ({n}; {p}, {q}, {r})"
            )));
        }
        if p + q + r != n {
            return Err(Error::Domain(format!(
                "trinomial parts must sum to n: {p} + {q} + {r} != {n}"
            )));
        }
        Ok(Self {
            n: n as u64,
            p: p as u64,
            q: q as u64,
            r: r as u64,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn parts(&self) -> (u64, u64, u64) {
        (self.p, self.q, self.r)
    }
}

/// n!/(p! q! r!) as C(n,p)*C(n-p,q).
pub fn trinomial(t: &TrinomialTriple) -> BigInt {
    binom(t.n, t.p) * binom(t.n - t.p, t.q)
}

/// Zero-extended trinomial: 0 unless p, q, r >= 0 and p + q + r = n.
///
/// Core formulas use the strict [`trinomial`] so that invalid triples fail
/// loudly; the zero-extended tetrahedron and the b* probe come through here.
pub fn trinomial_or_zero(n: i64, p: i64, q: i64, r: i64) -> Result<BigInt, Error> {
    if n < 0 {
        return Err(Error::Domain(format!(
            "trinomial_or_zero requires n >= 0, got n = {n}"
        )));
    }
    if p < 0 || q < 0 || r < 0 || p + q + r != n {
        return Ok(BigInt::zero());
    }
    Ok(binom(n as u64, p as u64) * binom((n - p) as u64, q as u64))
}

/// Triangular level k of Pascal's tetrahedron.
///
/// Entry (s, r), 0 <= s <= r <= k, holds trinomial(k; s, k-r, r-s); stored
/// densely in row-major (r, then s) order. The three edges of the triangle
/// reproduce binomial row k and every corner is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TetraLevel {
    k: usize,
    entries: Vec<BigInt>,
}

/// Materialize level k. Uses trinomial(k; s, k-r, r-s) = C(k,r)*C(r,s).
pub fn tetra_level(k: usize) -> TetraLevel {
    let mut entries = Vec::with_capacity((k + 1) * (k + 2) / 2);
    for r in 0..=k {
        let ckr = binom(k as u64, r as u64);
        for s in 0..=r {
            entries.push(&ckr * binom(r as u64, s as u64));
        }
    }
    TetraLevel { k, entries }
}

impl TetraLevel {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entry at (s, r). Panics if s > r or r > k.
    pub fn entry(&self, s: usize, r: usize) -> &BigInt {
        assert!(r <= self.k && s <= r, "TetraLevel entry ({s}, {r}) out of range");
        &self.entries[r * (r + 1) / 2 + s]
    }

    /// Iterate entries as (s, r, value) in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        let k = self.k;
        (0..=k)
            .flat_map(move |r| (0..=r).map(move |s| (s, r)))
            .zip(self.entries.iter())
            .map(|((s, r), v)| (s, r, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(4, 2).unwrap(), big(6));
        assert_eq!(binomial(3, -1).unwrap(), big(0));
        assert_eq!(binomial(5, 5).unwrap(), big(1));
        assert_eq!(binomial(5, 6).unwrap(), big(0));
        assert_eq!(binomial(0, 0).unwrap(), big(1));
        assert!(matches!(binomial(-1, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn trinomial_examples() {
        let t = TrinomialTriple::new(1, 0, 1, 0).unwrap();
        assert_eq!(trinomial(&t), big(1));
        let t = TrinomialTriple::new(2, 1, 1, 0).unwrap();
        assert_eq!(trinomial(&t), big(2));
        let t = TrinomialTriple::new(4, 2, 1, 1).unwrap();
        assert_eq!(trinomial(&t), big(12));
    }

    #[test]
    fn trinomial_rejects_invalid_triples() {
        assert!(TrinomialTriple::new(3, 1, 1, 0).is_err());
        assert!(TrinomialTriple::new(2, 1, 1, -1).is_err()); // wrong even though it sums
        assert!(TrinomialTriple::new(-1, 0, 0, -1).is_err());
    }

    #[test]
    fn trinomial_or_zero_examples() {
        assert_eq!(trinomial_or_zero(1, 1, 1, -1).unwrap(), big(0));
        assert_eq!(trinomial_or_zero(2, 0, 0, 2).unwrap(), big(1));
        assert_eq!(trinomial_or_zero(3, 1, 1, 1).unwrap(), big(6));
        assert_eq!(trinomial_or_zero(3, 1, 1, 0).unwrap(), big(0));
        assert!(trinomial_or_zero(-2, 0, 0, -2).is_err());
    }

    #[test]
    fn level_examples() {
        let l0 = tetra_level(0);
        assert_eq!(l0.len(), 1);
        assert_eq!(*l0.entry(0, 0), big(1));

        let l2 = tetra_level(2);
        assert_eq!(*l2.entry(0, 0), big(1));
        assert_eq!(*l2.entry(0, 1), big(2));
        assert_eq!(*l2.entry(1, 1), big(2));
        assert_eq!(*l2.entry(0, 2), big(1));
        assert_eq!(*l2.entry(1, 2), big(2));
        assert_eq!(*l2.entry(2, 2), big(1));

        let l3 = tetra_level(3);
        assert_eq!(*l3.entry(1, 2), big(6)); // trinomial(3; 1, 1, 1)
    }

    #[test]
    fn level_iter_matches_entry() {
        let l = tetra_level(5);
        for (s, r, v) in l.iter() {
            assert_eq!(v, l.entry(s, r));
        }
        assert_eq!(l.iter().count(), l.len());
    }

    #[test]
    fn level_sum_is_power_of_three() {
        for k in 0..=8usize {
            let sum: BigInt = tetra_level(k).iter().map(|(_, _, v)| v).sum();
            assert_eq!(sum, BigInt::from(3u32).pow(k as u32));
        }
    }

    #[test]
    fn level_edges_are_binomial_rows() {
        for k in 0..=7usize {
            let l = tetra_level(k);
            for r in 0..=k {
                let row = binom(k as u64, r as u64);
                // left edge s = 0, right edge s = r, bottom edge r = k
                assert_eq!(*l.entry(0, r), row);
                assert_eq!(*l.entry(r, r), row);
                assert_eq!(*l.entry(r, k), binom(k as u64, r as u64));
            }
        }
    }

    #[test]
    fn trinomial_three_term_recursion() {
        for n in 1..=7i64 {
            for p in 0..=n {
                for q in 0..=(n - p) {
                    let r = n - p - q;
                    let t = TrinomialTriple::new(n, p, q, r).unwrap();
                    let lhs = trinomial(&t);
                    let rhs = trinomial_or_zero(n - 1, p - 1, q, r).unwrap()
                        + trinomial_or_zero(n - 1, p, q - 1, r).unwrap()
                        + trinomial_or_zero(n - 1, p, q, r - 1).unwrap();
                    assert_eq!(lhs, rhs, "({n}; {p}, {q}, {r})");
                }
            }
        }
    }
}
