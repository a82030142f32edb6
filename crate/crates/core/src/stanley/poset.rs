//! Characteristic posets and interval partitions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{ModuleDescriptor, SquarefreeIdeal};
use crate::support::{combinations, Support};

/// Largest ambient ring for which posets and witnesses are enumerated.
pub const MAX_POSET_VARS: usize = 26;

/// The squarefree supports belonging to a module, grouped by cardinality.
#[derive(Clone, Debug)]
pub struct CharPoset {
    descriptor: ModuleDescriptor,
    levels: Vec<Vec<Support>>,
}

impl CharPoset {
    pub fn new(descriptor: &ModuleDescriptor) -> Result<Self> {
        if let ModuleDescriptor::Ideal(i) = descriptor {
            if i.is_zero() {
                return Err(Error::ZeroIdeal);
            }
        }
        let ambient = descriptor.ambient();
        if ambient > MAX_POSET_VARS {
            return Err(Error::TooManyVariables {
                requested: ambient,
                max: MAX_POSET_VARS,
            });
        }
        let mut levels = vec![Vec::new(); ambient + 1];
        match descriptor {
            ModuleDescriptor::Quotient(i) => {
                for face in independent_sets(i) {
                    levels[face.len()].push(face);
                }
            }
            _ => {
                for (k, level) in levels.iter_mut().enumerate() {
                    level.extend(combinations(ambient, k).filter(|&s| descriptor.contains(s)));
                }
            }
        }
        for level in levels.iter_mut() {
            level.sort();
        }
        while levels.len() > 1 && levels.last().is_some_and(|l| l.is_empty()) {
            levels.pop();
        }
        Ok(CharPoset {
            descriptor: descriptor.clone(),
            levels,
        })
    }

    pub fn descriptor(&self) -> &ModuleDescriptor {
        &self.descriptor
    }

    pub fn ambient(&self) -> usize {
        self.descriptor.ambient()
    }

    #[inline]
    pub fn contains(&self, s: Support) -> bool {
        s.fits(self.ambient()) && self.descriptor.contains(s)
    }

    /// Elements of cardinality `k`, in generator normal order.
    pub fn level(&self, k: usize) -> &[Support] {
        self.levels.get(k).map_or(&[], |l| l.as_slice())
    }

    pub fn len(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Largest cardinality of an element.
    pub fn height(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn elements(&self) -> impl Iterator<Item = Support> + '_ {
        self.levels.iter().flatten().copied()
    }

    /// Elements with no one-element extension inside the poset.
    pub fn maximal_elements(&self) -> Vec<Support> {
        let n = self.ambient();
        self.elements()
            .filter(|&s| (0..n).all(|v| s.contains(v) || !self.contains(s.with(v))))
            .collect()
    }
}

/// All supports outside `ideal` (the faces of its Stanley–Reisner complex).
fn independent_sets(ideal: &SquarefreeIdeal) -> Vec<Support> {
    let n = ideal.ambient();
    let blockers: Vec<Vec<Support>> = (0..n)
        .map(|v| {
            ideal
                .gens()
                .iter()
                .filter(|g| g.contains(v))
                .map(|g| g.without(v))
                .collect()
        })
        .collect();
    let mut out = vec![Support::EMPTY];
    let mut stack = vec![(Support::EMPTY, 0usize)];
    while let Some((face, start)) = stack.pop() {
        for (v, blocks) in blockers.iter().enumerate().skip(start) {
            if blocks.iter().any(|b| b.is_subset(face)) {
                continue;
            }
            let next = face.with(v);
            out.push(next);
            stack.push((next, v + 1));
        }
    }
    out
}

/// The interval `[lo, hi]` of all supports between `lo` and `hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Support,
    pub hi: Support,
}

impl Interval {
    pub fn new(lo: Support, hi: Support) -> Self {
        Interval { lo, hi }
    }

    pub fn contains(&self, s: Support) -> bool {
        self.lo.is_subset(s) && s.is_subset(self.hi)
    }

    /// Every member, as `lo ∪ t` for `t ⊆ hi ∖ lo`.
    pub fn members(&self) -> impl Iterator<Item = Support> + '_ {
        self.hi
            .difference(self.lo)
            .subsets()
            .map(move |t| t.union(self.lo))
    }
}

/// A partition of a characteristic poset into intervals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionWitness {
    pub target: ModuleDescriptor,
    pub intervals: Vec<Interval>,
}

impl PartitionWitness {
    /// `min |hi|` over the intervals; the Stanley depth this witness proves.
    pub fn min_top(&self) -> usize {
        self.intervals
            .iter()
            .map(|iv| iv.hi.len())
            .min()
            .unwrap_or(self.target.ambient())
    }

    /// Checks that the intervals are well formed, pairwise disjoint and cover
    /// exactly the supports of the target module, by enumerating all
    /// `2^ambient` supports.
    pub fn verify(&self) -> Result<()> {
        let n = self.target.ambient();
        if n > MAX_POSET_VARS {
            return Err(Error::TooManyVariables {
                requested: n,
                max: MAX_POSET_VARS,
            });
        }
        let bad = |msg: String| Err(Error::InvalidWitness(msg));
        let mut seen = vec![0u64; (1usize << n).div_ceil(64)];
        for iv in &self.intervals {
            if !iv.lo.is_subset(iv.hi) || !iv.hi.fits(n) {
                return bad(format!(
                    "[{}, {}] is not an interval of the ring",
                    iv.lo, iv.hi
                ));
            }
            for s in iv.members() {
                if !self.target.contains(s) {
                    return bad(format!(
                        "{s} in [{}, {}] is not in the module",
                        iv.lo, iv.hi
                    ));
                }
                let b = s.bits() as usize;
                if seen[b / 64] >> (b % 64) & 1 == 1 {
                    return bad(format!("{s} is covered twice"));
                }
                seen[b / 64] |= 1 << (b % 64);
            }
        }
        for b in 0..(1u64 << n) {
            let s = Support::from_bits(b);
            let idx = b as usize;
            if self.target.contains(s) && seen[idx / 64] >> (idx % 64) & 1 == 0 {
                return bad(format!("{s} is not covered"));
            }
        }
        Ok(())
    }

    /// Verify and also require `min |hi| >= k`.
    pub fn verify_at(&self, k: usize) -> Result<()> {
        self.verify()?;
        if self.min_top() < k {
            return Err(Error::InvalidWitness(format!(
                "smallest top has {} elements, needed {k}",
                self.min_top()
            )));
        }
        Ok(())
    }

    /// Intervals in a canonical order, so equal partitions compare equal.
    pub fn normalized(mut self) -> Self {
        self.intervals
            .sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
        self
    }
}
