//! Subsets of `[n] = {1, ..., n}` packed into a machine word.
//!
//! Element `i` maps to bit `i - 1`, so ascending mask value is the
//! colexicographic order on sorted element lists.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_N: u32 = 64;

#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u64);

/// Vertices of `J(n, k)` are subsets of size `k`.
pub type KSubset = Subset;

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Builds a subset from 1-based elements. Duplicates are rejected.
    pub fn from_elements<I>(elements: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<u64>,
    {
        let mut bits = 0u64;
        for e in elements {
            let e: u64 = e.into();
            if e == 0 || e > MAX_N as u64 {
                return Err(Error::InvalidSubset(format!("element {e} outside 1..=64")));
            }
            let bit = 1u64 << (e - 1);
            if bits & bit != 0 {
                return Err(Error::InvalidSubset(format!("duplicate element {e}")));
            }
            bits |= bit;
        }
        Ok(Subset(bits))
    }

    /// `{1, ..., n}`.
    pub fn full(n: u32) -> Self {
        debug_assert!(n <= MAX_N);
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: u32) -> Self {
        debug_assert!((1..=MAX_N).contains(&e));
        Subset(1u64 << (e - 1))
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: u32) -> bool {
        (1..=MAX_N).contains(&e) && self.0 >> (e - 1) & 1 == 1
    }

    pub fn with(self, e: u32) -> Self {
        self | Subset::singleton(e)
    }

    pub fn without(self, e: u32) -> Self {
        Subset(self.0 & !Subset::singleton(e).0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement relative to `[n]`.
    pub fn complement(self, n: u32) -> Self {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn intersection_len(self, other: Subset) -> u32 {
        (self.0 & other.0).count_ones()
    }

    /// Hamming distance between indicator strings.
    pub fn hamming(self, other: Subset) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    /// Largest element, if any.
    pub fn max_element(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn elements(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Image under the relabelling `x -> n + 1 - x`.
    pub fn reflect(self, n: u32) -> Self {
        let mut out = Subset::EMPTY;
        for e in self.iter() {
            out = out.with(n + 1 - e);
        }
        out
    }
}

impl std::ops::BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Subset {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let elements = Vec::<u32>::deserialize(d)?;
        Subset::from_elements(elements).map_err(serde::de::Error::custom)
    }
}

/// Exact binomial coefficient, `None` on `u128` overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiplication
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

fn pascal() -> &'static [[u64; 65]; 65] {
    static TABLE: OnceLock<Box<[[u64; 65]; 65]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = Box::new([[0u64; 65]; 65]);
        for n in 0..=64 {
            t[n][0] = 1;
            for k in 1..=n {
                t[n][k] = t[n - 1][k - 1].saturating_add(t[n - 1][k]);
            }
        }
        t
    })
}

/// `binomial(n, k)` for `n <= 64`; every entry of that range fits a `u64`.
#[inline]
pub fn binom64(n: u32, k: u32) -> u64 {
    if k > n {
        0
    } else {
        pascal()[n as usize][k as usize]
    }
}

/// Position of `s` among all subsets of size `|s|` in colexicographic order.
pub fn colex_rank(s: Subset) -> u64 {
    let t = pascal();
    let mut rank = 0u64;
    for (i, e) in s.iter().enumerate() {
        rank += t[(e - 1) as usize][i + 1];
    }
    rank
}

/// Inverse of [`colex_rank`] for subsets of size `k`.
pub fn colex_unrank(mut rank: u64, k: u32) -> Subset {
    let mut bits = 0u64;
    for i in (1..=k).rev() {
        // largest p with C(p, i) <= rank
        let mut p = i - 1;
        while binom64(p + 1, i) <= rank {
            p += 1;
        }
        rank -= binom64(p, i);
        bits |= 1u64 << p;
    }
    Subset(bits)
}

/// Enumeration order for the `k`-subsets of `[n]`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexOrder {
    /// Ascending indicator-mask value (colexicographic on element lists).
    #[default]
    Colex,
    /// Lexicographic on sorted element tuples.
    Lex,
}

impl VertexOrder {
    pub fn name(self) -> &'static str {
        match self {
            VertexOrder::Colex => "colex",
            VertexOrder::Lex => "lex",
        }
    }
}

impl std::str::FromStr for VertexOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "colex" | "bitmask" => Ok(VertexOrder::Colex),
            "lex" | "lexicographic" => Ok(VertexOrder::Lex),
            other => Err(Error::Precondition(format!("unknown order convention '{other}'"))),
        }
    }
}

/// Streaming iterator over the `k`-subsets of `[n]`.
#[derive(Clone, Debug)]
pub struct Combinations {
    n: u32,
    k: u32,
    order: VertexOrder,
    // Colex: current mask. Lex: 0-based positions.
    mask: u128,
    positions: Vec<u32>,
    done: bool,
}

impl Combinations {
    pub fn new(n: u32, k: u32, order: VertexOrder) -> Self {
        assert!(n <= MAX_N, "ground set larger than 64");
        let done = k > n;
        let mask = if k == 0 { 0 } else { (1u128 << k) - 1 };
        Combinations { n, k, order, mask, positions: (0..k).collect(), done }
    }

    fn advance_colex(&mut self) {
        // Gosper's hack
        let v = self.mask;
        if v == 0 {
            self.done = true;
            return;
        }
        let c = v & v.wrapping_neg();
        let r = v + c;
        let next = (((r ^ v) >> 2) / c) | r;
        if next >> self.n != 0 {
            self.done = true;
        } else {
            self.mask = next;
        }
    }

    fn advance_lex(&mut self) {
        let (n, k) = (self.n, self.k as usize);
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.positions[i] < n - (k - i) as u32 {
                self.positions[i] += 1;
                for j in i + 1..k {
                    self.positions[j] = self.positions[j - 1] + 1;
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for Combinations {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        if self.done {
            return None;
        }
        let current = match self.order {
            VertexOrder::Colex => Subset(self.mask as u64),
            VertexOrder::Lex => Subset(self.positions.iter().fold(0u64, |m, &p| m | 1 << p)),
        };
        match self.order {
            VertexOrder::Colex => self.advance_colex(),
            VertexOrder::Lex => self.advance_lex(),
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements_roundtrip() {
        let s = Subset::from_elements([3u32, 1, 5]).unwrap();
        assert_eq!(s.elements(), vec![1, 3, 5]);
        assert_eq!(s.bits(), 0b10101);
        assert_eq!(s.to_string(), "{1,3,5}");
        assert!(Subset::from_elements([1u32, 1]).is_err());
        assert!(Subset::from_elements([0u32]).is_err());
        assert!(Subset::from_elements([65u32]).is_err());
    }

    #[test]
    fn complement_and_reflect() {
        let s = Subset::from_elements([1u32, 2]).unwrap();
        assert_eq!(s.complement(4).elements(), vec![3, 4]);
        assert_eq!(s.reflect(7).elements(), vec![6, 7]);
        assert_eq!(Subset::full(64).len(), 64);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(32, 16), Some(601_080_390));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binom64(64, 32), 1_832_624_140_942_590_534);
    }

    #[test]
    fn colex_enumeration_matches_rank() {
        for n in 1..=9 {
            for k in 0..=n {
                let all: Vec<_> = Combinations::new(n, k, VertexOrder::Colex).collect();
                assert_eq!(all.len() as u128, binomial(n as u64, k as u64).unwrap());
                for (i, s) in all.iter().enumerate() {
                    assert_eq!(s.len(), k);
                    assert_eq!(colex_rank(*s), i as u64);
                    assert_eq!(colex_unrank(i as u64, k), *s);
                }
                assert!(all.windows(2).all(|w| w[0].bits() < w[1].bits()));
            }
        }
    }

    #[test]
    fn lex_enumeration() {
        let all: Vec<_> = Combinations::new(4, 2, VertexOrder::Lex).map(|s| s.elements()).collect();
        assert_eq!(all, vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
        assert_eq!(Combinations::new(6, 3, VertexOrder::Lex).count(), 20);
        assert_eq!(Combinations::new(3, 0, VertexOrder::Lex).count(), 1);
    }

    #[test]
    fn enumeration_at_full_width() {
        assert_eq!(Combinations::new(64, 1, VertexOrder::Colex).count(), 64);
        assert_eq!(Combinations::new(64, 63, VertexOrder::Colex).count(), 64);
        assert_eq!(Combinations::new(64, 64, VertexOrder::Lex).count(), 1);
    }
}
