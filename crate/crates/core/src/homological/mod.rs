//! Depth of squarefree quotients from multigraded Betti numbers.
//!
//! `β_{i,σ}(S/I) = dim H̃_{|σ|-i-1}(Δ_σ)` where `Δ_σ` is the induced
//! subcomplex of the Stanley–Reisner complex on `σ`; depth then follows from
//! the projective dimension by Auslander–Buchsbaum.

mod complex;
mod rank;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use complex::{reduced_homology_dims, FacesByDim, SimplicialComplexView};
pub use rank::rank_sparse;

use crate::error::{Error, Result};
use crate::ideal::SquarefreeIdeal;
use crate::support::Support;

/// Characteristic of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldChar(u32);

impl FieldChar {
    pub const LARGE: u32 = 32003;

    /// Primes above 2^31 are rejected so products fit in 64 bits.
    pub fn new(p: u32) -> Result<Self> {
        if !(2..=(1 << 31)).contains(&p)
            || (2..)
                .take_while(|d| d * d <= p)
                .any(|d| p.is_multiple_of(d))
        {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldChar(p))
    }

    pub fn p(self) -> u32 {
        self.0
    }
}

impl Default for FieldChar {
    fn default() -> Self {
        FieldChar(2)
    }
}

impl TryFrom<u32> for FieldChar {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        FieldChar::new(p)
    }
}

impl From<FieldChar> for u32 {
    fn from(f: FieldChar) -> u32 {
        f.0
    }
}

/// Nonzero multigraded Betti numbers `β_{i,σ}(S/I)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Support), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, sigma: Support) -> u64 {
        self.entries.get(&(i, sigma)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, Support, u64)> + '_ {
        self.entries.iter().map(|(&(i, s), &r)| (i, s, r))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Some `σ` carrying a nonzero Betti number in the top homological index.
    pub fn pd_witness(&self) -> Option<Support> {
        let pd = self.projective_dimension();
        self.entries
            .keys()
            .find(|&&(i, _)| i == pd)
            .map(|&(_, s)| s)
    }

    /// Total Betti numbers `β_i = Σ_σ β_{i,σ}`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = vec![0; self.projective_dimension() + 1];
        for (&(i, _), &r) in &self.entries {
            out[i] += r;
        }
        out
    }

    fn insert(&mut self, i: usize, sigma: Support, rank: u64) {
        if rank > 0 {
            self.entries.insert((i, sigma), rank);
        }
    }
}

/// Whether some vertex of `sigma` lies in no generator contained in `sigma`,
/// making `Δ_σ` a cone.
fn has_cone_apex(ideal: &SquarefreeIdeal, sigma: Support) -> bool {
    let covered = ideal
        .gens()
        .iter()
        .filter(|g| g.is_subset(sigma))
        .fold(Support::EMPTY, |a, &g| a.union(g));
    covered != sigma
}

/// `(i, β_{i,σ})` for every `i` with a nonzero value at this `σ`.
pub fn betti_at(ideal: &SquarefreeIdeal, sigma: Support, field: FieldChar) -> Vec<(usize, u64)> {
    let layers = SimplicialComplexView::new(ideal).faces_within(sigma);
    let dims = complex::homology_of_layers(&layers, field);
    let size = sigma.len();
    dims.iter()
        .enumerate()
        .filter(|&(_, &r)| r > 0)
        // entry t is H̃_{t-1}, and |σ| - i - 1 = t - 1 gives i = |σ| - t
        .map(|(t, &r)| (size - t, r as u64))
        .collect()
}

/// Multigraded Betti numbers of `S/I` by Hochster's formula, skipping every
/// `σ` whose induced complex is a cone.
pub fn hochster_betti(ideal: &SquarefreeIdeal, field: FieldChar) -> Result<BettiTable> {
    hochster_betti_with(ideal, field, true)
}

/// As [`hochster_betti`]; with `prune = false` every `σ ⊆ [ambient]` is
/// computed, which is only useful for checking the pruning.
pub fn hochster_betti_with(
    ideal: &SquarefreeIdeal,
    field: FieldChar,
    prune: bool,
) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    // Variables outside every generator are cone apexes wherever they occur.
    let active = if prune {
        ideal.variables()
    } else {
        Support::full(ideal.ambient())
    };
    let vars = active.to_vec();
    let count = 1u64 << vars.len();
    let found: Vec<(Support, Vec<(usize, u64)>)> = (0..count)
        .into_par_iter()
        .filter_map(|mask| {
            let sigma: Support = vars
                .iter()
                .enumerate()
                .filter(|&(t, _)| (mask >> t) & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            if prune && has_cone_apex(ideal, sigma) {
                return None;
            }
            let row = betti_at(ideal, sigma, field);
            (!row.is_empty()).then_some((sigma, row))
        })
        .collect();
    let mut table = BettiTable::default();
    for (sigma, row) in found {
        for (i, r) in row {
            table.insert(i, sigma, r);
        }
    }
    Ok(table)
}

/// `depth(S/I)`; the zero ideal gives the full ring, of depth `ambient`.
pub fn depth_quotient(ideal: &SquarefreeIdeal, field: FieldChar) -> Result<usize> {
    if ideal.is_zero() {
        return Ok(ideal.ambient());
    }
    let table = hochster_betti(ideal, field)?;
    Ok(ideal.ambient() - table.projective_dimension())
}

/// `depth(I) = depth(S/I) + 1`.
pub fn depth_ideal(ideal: &SquarefreeIdeal, field: FieldChar) -> Result<usize> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    Ok(depth_quotient(ideal, field)? + 1)
}

/// Depth of `S/I` over several prime fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharSensitivity {
    pub depths: Vec<(u32, usize)>,
    pub agree: bool,
}

pub fn char_sensitivity(ideal: &SquarefreeIdeal, primes: &[FieldChar]) -> Result<CharSensitivity> {
    let depths = primes
        .iter()
        .map(|&f| depth_quotient(ideal, f).map(|d| (f.p(), d)))
        .collect::<Result<Vec<_>>>()?;
    let agree = depths.windows(2).all(|w| w[0].1 == w[1].1);
    Ok(CharSensitivity { depths, agree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_family, build_path, FamilySpec};
    use crate::ideal::edge_ideal;

    fn s(ix: &[usize]) -> Support {
        Support::from_indices(ix.iter().copied())
    }

    fn family_ideal(spec: &str) -> SquarefreeIdeal {
        let spec: FamilySpec = spec.parse().unwrap();
        edge_ideal(&build_family(&spec).unwrap().graph).unwrap()
    }

    #[test]
    fn principal_ideal_canary() {
        let i = SquarefreeIdeal::from_index_lists(2, &[&[0, 1]]).unwrap();
        let t = hochster_betti(&i, FieldChar::default()).unwrap();
        let entries: Vec<_> = t.entries().collect();
        assert_eq!(entries, vec![(0, s(&[]), 1), (1, s(&[0, 1]), 1)]);
        assert_eq!(depth_quotient(&i, FieldChar::default()).unwrap(), 1);
        assert_eq!(depth_ideal(&i, FieldChar::default()).unwrap(), 2);
    }

    #[test]
    fn four_cycle() {
        let i = edge_ideal(&build_cycle(4).unwrap()).unwrap();
        let t = hochster_betti(&i, FieldChar::default()).unwrap();
        assert_eq!(t.projective_dimension(), 3);
        assert_eq!(t.get(3, s(&[0, 1, 2, 3])), 1);
        // Δ on a diagonal pair {0,2} is a full edge; on {0,1,2,3} it is two
        // disjoint edges
        assert_eq!(t.get(2, s(&[0, 1, 2, 3])), 0);
        assert_eq!(t.totals(), vec![1, 4, 4, 1]);
    }

    #[test]
    fn pruning_is_conservative() {
        for spec in ["P:3,2", "C:4,1", "C:3,2", "P:2,3"] {
            let i = family_ideal(spec);
            let f = FieldChar::default();
            assert_eq!(
                hochster_betti_with(&i, f, true).unwrap(),
                hochster_betti_with(&i, f, false).unwrap(),
                "{spec}"
            );
        }
        let extra = SquarefreeIdeal::from_index_lists(4, &[&[0, 1], &[1, 2]]).unwrap();
        let f = FieldChar::new(3).unwrap();
        assert_eq!(
            hochster_betti_with(&extra, f, true).unwrap(),
            hochster_betti_with(&extra, f, false).unwrap()
        );
    }

    #[test]
    fn path_depths() {
        for n in 2..=9 {
            let i = edge_ideal(&build_path(n).unwrap()).unwrap();
            assert_eq!(
                depth_quotient(&i, FieldChar::default()).unwrap(),
                n.div_ceil(3),
                "n={n}"
            );
        }
    }

    #[test]
    fn zero_ideal_conventions() {
        let z = SquarefreeIdeal::zero(3);
        assert_eq!(depth_quotient(&z, FieldChar::default()).unwrap(), 3);
        assert!(depth_ideal(&z, FieldChar::default()).is_err());
        assert!(hochster_betti(&z, FieldChar::default()).is_err());
    }

    #[test]
    fn field_char_validation() {
        assert!(FieldChar::new(2).is_ok());
        assert!(FieldChar::new(32003).is_ok());
        assert!(matches!(FieldChar::new(1), Err(Error::NotPrime(1))));
        assert!(FieldChar::new(9).is_err());
        assert!(serde_json::from_str::<FieldChar>("4").is_err());
    }

    #[test]
    fn char_sensitivity_on_small_ideal() {
        let i = SquarefreeIdeal::from_index_lists(2, &[&[0, 1]]).unwrap();
        let primes: Vec<_> = [2, 3, 5].map(|p| FieldChar::new(p).unwrap()).to_vec();
        let r = char_sensitivity(&i, &primes).unwrap();
        assert!(r.agree);
        assert_eq!(r.depths, vec![(2, 1), (3, 1), (5, 1)]);
    }

    #[test]
    fn real_projective_plane_is_char_sensitive() {
        // Stanley–Reisner ideal of the six-vertex triangulation of RP^2.
        let facets: [[usize; 3]; 10] = [
            [0, 1, 3],
            [0, 1, 5],
            [0, 2, 4],
            [0, 2, 5],
            [0, 3, 4],
            [1, 2, 3],
            [1, 2, 4],
            [1, 4, 5],
            [2, 3, 5],
            [3, 4, 5],
        ];
        let is_face = |f: Support| facets.iter().any(|t| f.is_subset(s(t)));
        let mut gens = Vec::new();
        for mask in 0u64..64 {
            let f = Support::from_bits(mask);
            if !is_face(f) && f.iter().all(|v| is_face(f.without(v))) {
                gens.push(f);
            }
        }
        let i = SquarefreeIdeal::new(6, gens).unwrap();
        let primes = [
            FieldChar::new(2).unwrap(),
            FieldChar::new(FieldChar::LARGE).unwrap(),
        ];
        let r = char_sensitivity(&i, &primes).unwrap();
        assert!(!r.agree);
        assert_eq!(r.depths, vec![(2, 2), (32003, 3)]);
    }
}
