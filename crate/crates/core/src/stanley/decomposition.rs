//! Stanley decompositions and their exact verification.

use serde::{Deserialize, Serialize};

use super::poset::PartitionWitness;
use crate::error::{Error, Result};
use crate::ideal::ModuleDescriptor;
use crate::support::Support;

/// Largest number of active variables [`verify_decomposition`] handles.
pub const MAX_VERIFY_VARS: usize = 26;

/// The space `x_w · K[x_a : a ∈ free]`. The monomial `w` need not lie in
/// the free set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StanleySpace {
    pub w: Support,
    pub free: Support,
}

impl StanleySpace {
    pub fn new(w: Support, free: Support) -> Self {
        StanleySpace { w, free }
    }

    pub fn dimension(&self) -> usize {
        self.free.len()
    }

    /// Whether the monomial with exponents `exps` lies in the space.
    pub fn contains(&self, exps: &[u8]) -> bool {
        exps.iter().enumerate().all(|(v, &e)| {
            let residual = if self.w.contains(v) {
                e.checked_sub(1)
            } else {
                Some(e)
            };
            match residual {
                None => false,
                Some(0) => true,
                Some(_) => self.free.contains(v),
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleyDecomposition {
    pub target: ModuleDescriptor,
    pub spaces: Vec<StanleySpace>,
}

impl StanleyDecomposition {
    /// Smallest space dimension (the ambient count for an empty list).
    pub fn min_dimension(&self) -> usize {
        self.spaces
            .iter()
            .map(StanleySpace::dimension)
            .min()
            .unwrap_or(self.target.ambient())
    }
}

/// Outcome of [`verify_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verification {
    Ok,
    /// A monomial (exponents capped at 2) covered `count` times where
    /// `expected` (0 or 1) was required.
    Violation {
        pattern: Vec<u8>,
        count: usize,
        expected: usize,
    },
}

impl Verification {
    pub fn is_ok(&self) -> bool {
        matches!(self, Verification::Ok)
    }
}

/// Turns each interval `[A, B]` into the space `x_A K[B]`.
pub fn partition_to_decomposition(w: &PartitionWitness) -> Result<StanleyDecomposition> {
    w.verify()?;
    Ok(StanleyDecomposition {
        target: w.target.clone(),
        spaces: w
            .intervals
            .iter()
            .map(|iv| StanleySpace::new(iv.lo, iv.hi))
            .collect(),
    })
}

/// Checks that every monomial of the target lies in exactly one space and
/// every other monomial in none.
///
/// A monomial is described by `s1`, the variables with exponent at least 1,
/// and `s2 ⊆ s1`, those with exponent at least 2 (higher exponents behave
/// like 2 because every `w` is squarefree). It lies in `x_w K[A]` iff
/// `w ⊆ s1` and `(s1 ∖ w) ∪ s2 ⊆ A`, so the number of spaces containing it
/// can only drop as `s2` grows, while target membership depends on `s1`
/// alone. Checking `s2 = ∅` and `s2 = s1` therefore settles all `3^n`
/// patterns.
pub fn verify_decomposition(dec: &StanleyDecomposition) -> Result<Verification> {
    let n = dec.target.ambient();
    for sp in &dec.spaces {
        for s in [sp.w, sp.free] {
            if !s.fits(n) {
                return Err(Error::WidthMismatch {
                    support: s.to_string(),
                    ambient: n,
                });
            }
        }
    }
    let active = dec
        .spaces
        .iter()
        .fold(dec.target.variables(), |a, sp| a.union(sp.w).union(sp.free));
    if let Some(t) = Support::full(n).difference(active).first() {
        // A variable no space mentions multiplies some target monomial out
        // of every space.
        if let Some(s) = some_member(&dec.target) {
            let mut pattern = exponents(n, s, Support::EMPTY);
            pattern[t] = 1;
            return Ok(Verification::Violation {
                pattern,
                count: 0,
                expected: 1,
            });
        }
    }
    let vars = active.to_vec();
    if vars.len() > MAX_VERIFY_VARS {
        return Err(Error::TooManyVariables {
            requested: vars.len(),
            max: MAX_VERIFY_VARS,
        });
    }
    let mut pos = vec![0usize; n];
    for (t, &v) in vars.iter().enumerate() {
        pos[v] = t;
    }
    let local = |s: Support| -> usize { s.iter().map(|v| 1usize << pos[v]).sum() };
    let size = 1usize << vars.len();
    // counts for s2 = ∅ and for s2 = s1, saturating at 2
    let mut low = vec![0u8; size];
    let mut high = vec![0u8; size];
    let bump = |arr: &mut [u8], lo: usize, hi: usize| {
        let free = hi & !lo;
        let mut t = 0usize;
        loop {
            let c = &mut arr[lo | t];
            *c = c.saturating_add(1).min(2);
            if t == free {
                break;
            }
            t = (t.wrapping_sub(free)) & free;
        }
    };
    for sp in &dec.spaces {
        let (w, a) = (local(sp.w), local(sp.free));
        bump(&mut low, w, w | a);
        if w & !a == 0 {
            bump(&mut high, w, a);
        }
    }
    for mask in 0..size {
        let s1: Support = vars
            .iter()
            .enumerate()
            .filter(|&(t, _)| (mask >> t) & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let expected = usize::from(dec.target.contains(s1));
        for (arr, s2) in [(&low, Support::EMPTY), (&high, s1)] {
            let count = arr[mask] as usize;
            if count != expected {
                return Ok(Verification::Violation {
                    pattern: exponents(n, s1, s2),
                    count,
                    expected,
                });
            }
        }
    }
    Ok(Verification::Ok)
}

fn exponents(n: usize, s1: Support, s2: Support) -> Vec<u8> {
    (0..n)
        .map(|v| u8::from(s1.contains(v)) + u8::from(s2.contains(v)))
        .collect()
}

fn some_member(d: &ModuleDescriptor) -> Option<Support> {
    match d {
        ModuleDescriptor::Quotient(_) => Some(Support::EMPTY),
        ModuleDescriptor::Ideal(i) => i.gens().first().copied(),
        ModuleDescriptor::Pair { inner, outer } => {
            outer.gens().iter().copied().find(|&g| !inner.contains(g))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::SquarefreeIdeal;
    use crate::stanley::poset::Interval;

    fn s(ix: &[usize]) -> Support {
        Support::from_indices(ix.iter().copied())
    }

    fn edge_quotient() -> ModuleDescriptor {
        ModuleDescriptor::Quotient(SquarefreeIdeal::from_index_lists(2, &[&[0, 1]]).unwrap())
    }

    #[test]
    fn witness_to_spaces() {
        let w = PartitionWitness {
            target: edge_quotient(),
            intervals: vec![
                Interval::new(s(&[]), s(&[0])),
                Interval::new(s(&[1]), s(&[1])),
            ],
        };
        let d = partition_to_decomposition(&w).unwrap();
        assert_eq!(
            d.spaces,
            vec![
                StanleySpace::new(s(&[]), s(&[0])),
                StanleySpace::new(s(&[1]), s(&[1]))
            ]
        );
        assert_eq!(d.min_dimension(), 1);
        assert!(verify_decomposition(&d).unwrap().is_ok());
        let bad = PartitionWitness {
            target: edge_quotient(),
            intervals: vec![Interval::new(s(&[]), s(&[0]))],
        };
        assert!(partition_to_decomposition(&bad).is_err());
    }

    #[test]
    fn dropping_a_space_is_caught() {
        let d = StanleyDecomposition {
            target: edge_quotient(),
            spaces: vec![StanleySpace::new(s(&[]), s(&[0]))],
        };
        match verify_decomposition(&d).unwrap() {
            Verification::Violation {
                count, expected, ..
            } => {
                assert_eq!((count, expected), (0, 1))
            }
            Verification::Ok => panic!("incomplete decomposition accepted"),
        }
    }

    #[test]
    fn space_with_w_outside_free_set() {
        // K[x_0, x_1] = K[x_1] ⊕ x_0 K[x_0, x_1]; with x_0 K[x_1] in place
        // of the second space, x_0^2 is missed.
        let target = ModuleDescriptor::Quotient(SquarefreeIdeal::zero(2));
        let good = StanleyDecomposition {
            target: target.clone(),
            spaces: vec![
                StanleySpace::new(s(&[]), s(&[1])),
                StanleySpace::new(s(&[0]), s(&[0, 1])),
            ],
        };
        assert!(verify_decomposition(&good).unwrap().is_ok());
        let broken = StanleyDecomposition {
            target,
            spaces: vec![
                StanleySpace::new(s(&[]), s(&[1])),
                StanleySpace::new(s(&[0]), s(&[1])),
            ],
        };
        match verify_decomposition(&broken).unwrap() {
            Verification::Violation { pattern, count, .. } => {
                assert_eq!(pattern[0], 2);
                assert_eq!(count, 0);
            }
            Verification::Ok => panic!(),
        }
    }

    #[test]
    fn untouched_variable() {
        let target =
            ModuleDescriptor::Ideal(SquarefreeIdeal::from_index_lists(3, &[&[0, 1]]).unwrap());
        let d = StanleyDecomposition {
            target,
            spaces: vec![StanleySpace::new(s(&[0, 1]), s(&[0, 1]))],
        };
        match verify_decomposition(&d).unwrap() {
            Verification::Violation { pattern, .. } => assert_eq!(pattern, vec![1, 1, 1]),
            Verification::Ok => panic!(),
        }
    }

    #[test]
    fn space_membership() {
        let sp = StanleySpace::new(s(&[0]), s(&[1]));
        assert!(sp.contains(&[1, 2]));
        assert!(!sp.contains(&[2, 0]));
        assert!(!sp.contains(&[0, 1]));
    }
}
