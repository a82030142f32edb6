//! Squarefree monomials as bitsets over flat variable indices.
//!
//! A [`Support`] is the set of variables dividing a squarefree monomial. The
//! empty support is the monomial `1`. Supports double as generator sets,
//! characteristic-poset elements and simplicial faces.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest number of variables a [`Support`] can address.
pub const MAX_VARS: usize = 64;

/// Set of variable indices, stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Support(u64);

impl Support {
    pub const EMPTY: Support = Support(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        Support(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The support `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS, "support width {n} exceeds {MAX_VARS}");
        if n == MAX_VARS {
            Support(u64::MAX)
        } else {
            Support((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(i: usize) -> Self {
        assert!(i < MAX_VARS, "variable index {i} out of range");
        Support(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(Support::EMPTY, |acc, i| acc.with(i))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, i: usize) -> bool {
        i < MAX_VARS && (self.0 >> i) & 1 == 1
    }

    #[inline]
    pub const fn is_subset(self, other: Support) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Support) -> Support {
        Support(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Support) -> Support {
        Support(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Support) -> Support {
        Support(self.0 & !other.0)
    }

    #[inline]
    pub fn with(self, i: usize) -> Support {
        self.union(Support::singleton(i))
    }

    #[inline]
    pub fn without(self, i: usize) -> Support {
        self.difference(Support::singleton(i))
    }

    /// Whether every index is below `width`.
    #[inline]
    pub fn fits(self, width: usize) -> bool {
        width >= MAX_VARS || self.0 >> width == 0
    }

    /// Lowest index, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Indices {
        Indices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing numeric order of their masks.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Image under a variable map (`perm[i]` is the new index of `i`).
    pub fn map(self, perm: &[usize]) -> Support {
        self.iter().fold(Support::EMPTY, |acc, i| acc.with(perm[i]))
    }

    /// Generator normal order: cardinality first, then lexicographic on the
    /// ascending index lists.
    pub fn normal_cmp(&self, other: &Support) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let d = diff.trailing_zeros();
        if (self.0 >> d) & 1 == 1 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl Ord for Support {
    fn cmp(&self, other: &Self) -> Ordering {
        self.normal_cmp(other)
    }
}

impl PartialOrd for Support {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromIterator<usize> for Support {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Support::from_indices(iter)
    }
}

impl Serialize for Support {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Support {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let indices = Vec::<usize>::deserialize(deserializer)?;
        let mut s = Support::EMPTY;
        for i in indices {
            if i >= MAX_VARS {
                return Err(serde::de::Error::custom(format!(
                    "variable index {i} exceeds {}",
                    MAX_VARS - 1
                )));
            }
            if s.contains(i) {
                return Err(serde::de::Error::custom(format!(
                    "repeated variable index {i}"
                )));
            }
            s = s.with(i);
        }
        Ok(s)
    }
}

/// Ascending indices of a support.
#[derive(Clone)]
pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Indices {}

/// Subsets of a mask, enumerated by the `(sub - mask) & mask` walk.
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Support;

    fn next(&mut self) -> Option<Support> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(Support(cur))
    }
}

/// All `k`-subsets of `{0, .., n-1}` in increasing mask order (Gosper's hack).
pub fn combinations(n: usize, k: usize) -> Combinations {
    assert!(
        n < MAX_VARS,
        "combinations limited to {} variables",
        MAX_VARS - 1
    );
    let next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u64 << k) - 1)
    };
    Combinations {
        limit: 1u64 << n,
        k,
        next,
    }
}

pub struct Combinations {
    limit: u64,
    k: usize,
    next: Option<u64>,
}

impl Iterator for Combinations {
    type Item = Support;

    fn next(&mut self) -> Option<Support> {
        let cur = self.next?;
        self.next = if self.k == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < self.limit).then_some(nxt)
        };
        Some(Support(cur))
    }
}

/// Binomial coefficient, saturating on overflow.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_order_is_cardinality_then_lex() {
        let a = Support::from_indices([0, 3]);
        let b = Support::from_indices([1, 2]);
        let c = Support::from_indices([5]);
        assert_eq!(a.cmp(&b), Ordering::Less);
        assert_eq!(c.cmp(&a), Ordering::Less);
        let mut v = vec![b, a, c];
        v.sort();
        assert_eq!(v, vec![c, a, b]);
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = Support::from_indices([1, 4, 6]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(s)));
        assert_eq!(Support::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn combinations_match_binomials() {
        for n in 0..10 {
            for k in 0..=n + 1 {
                let got: Vec<_> = combinations(n, k).collect();
                assert_eq!(got.len() as u64, binomial(n, k), "n={n} k={k}");
                assert!(got.iter().all(|s| s.len() == k && s.fits(n)));
            }
        }
    }

    #[test]
    fn serde_rejects_repeats() {
        assert!(serde_json::from_str::<Support>("[1,1]").is_err());
        assert!(serde_json::from_str::<Support>("[64]").is_err());
        let s: Support = serde_json::from_str("[3,0]").unwrap();
        assert_eq!(s, Support::from_indices([0, 3]));
        assert_eq!(serde_json::to_string(&s).unwrap(), "[0,3]");
    }
}
