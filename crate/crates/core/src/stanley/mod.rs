//! Stanley depth through interval partitions of characteristic posets, and
//! explicit Stanley decompositions.

mod constructions;
mod decomposition;
mod poset;
mod sdepth;
mod search;

pub use constructions::{paper_decomposition_c2, paper_decomposition_c3, Summand};
pub use decomposition::{
    partition_to_decomposition, verify_decomposition, StanleyDecomposition, StanleySpace,
    Verification,
};
pub use poset::{CharPoset, Interval, PartitionWitness, MAX_POSET_VARS};
pub use sdepth::{sdepth_exact, sdepth_search, SdepthBounds, SdepthResult, SearchOptions};
pub use search::{counting_upper_bound, decide_partition, Decision};

use crate::ideal::SquarefreeIdeal;

/// Okazaki's lower bound on `sdepth(I)` from the ambient count `n` and the
/// number `m` of minimal generators: the printed form `min{1, n - ⌊m/2⌋}`
/// and the form `max{1, n - ⌊m/2⌋}` that the literature proves.
pub fn okazaki_bound(i: &SquarefreeIdeal) -> (i64, i64) {
    let n = i.ambient() as i64;
    let m = i.gens().len() as i64;
    let v = n - m / 2;
    (v.min(1), v.max(1))
}
