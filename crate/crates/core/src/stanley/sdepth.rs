//! Stanley depth by search over `k`.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::poset::{CharPoset, Interval, PartitionWitness};
use super::search::{counting_upper_bound, decide_until, Decision};
use crate::error::Result;
use crate::ideal::ModuleDescriptor;
use crate::support::Support;

/// Bracketing bounds on the Stanley depth of a module.
#[derive(Clone, Debug)]
pub struct SdepthResult {
    /// Proven by `witness`.
    pub lower: usize,
    /// Proven by refutation or a structural bound.
    pub upper: usize,
    pub witness: PartitionWitness,
    pub elapsed: Duration,
    pub budget_hit: bool,
}

impl SdepthResult {
    pub fn exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn value(&self) -> Option<usize> {
        self.exact().then_some(self.lower)
    }
}

/// Summary of an [`SdepthResult`] without its witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdepthBounds {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub budget_hit: bool,
}

impl From<&SdepthResult> for SdepthBounds {
    fn from(r: &SdepthResult) -> Self {
        SdepthBounds {
            lower: r.lower,
            upper: r.upper,
            exact: r.exact(),
            budget_hit: r.budget_hit,
        }
    }
}

/// Search options for [`sdepth_search`].
#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub budget: Duration,
    /// A known partition to start from; its smallest top becomes the first
    /// lower bound.
    pub start: Option<PartitionWitness>,
    /// Stop as soon as a partition with tops of at least this size is found.
    pub goal: Option<usize>,
}

impl SearchOptions {
    pub fn with_budget(budget: Duration) -> Self {
        SearchOptions {
            budget,
            start: None,
            goal: None,
        }
    }
}

/// Exact Stanley depth within `budget`, or bracketing bounds if it runs out.
pub fn sdepth_exact(d: &ModuleDescriptor, budget: Duration) -> Result<SdepthResult> {
    sdepth_search(d, &SearchOptions::with_budget(budget))
}

pub fn sdepth_search(d: &ModuleDescriptor, opts: &SearchOptions) -> Result<SdepthResult> {
    let started = Instant::now();
    let deadline = started.checked_add(opts.budget);
    if let ModuleDescriptor::Quotient(i) = d {
        if i.is_zero() {
            let n = i.ambient();
            return Ok(SdepthResult {
                lower: n,
                upper: n,
                witness: PartitionWitness {
                    target: d.clone(),
                    intervals: vec![Interval::new(Support::EMPTY, Support::full(n))],
                },
                elapsed: started.elapsed(),
                budget_hit: false,
            });
        }
    }
    let poset = CharPoset::new(d)?;
    let upper = counting_upper_bound(&poset);
    let (mut lower, mut witness) = match &opts.start {
        Some(w) if w.verify().is_ok() && w.target == *d => (w.min_top(), w.clone()),
        _ => match decide_until(&poset, 0, None) {
            Decision::Yes(w) => (0, w),
            _ => unreachable!("k = 0 always has the singleton partition"),
        },
    };
    let goal = opts.goal.unwrap_or(usize::MAX);
    let mut proven_upper = upper.max(lower);
    let mut ceiling = proven_upper;
    let mut budget_hit = false;
    let mut probe_top = true;
    let mut try_goal = opts.goal.is_some();
    while lower < ceiling && lower < goal {
        // Try the goal, then the upper bound since the counting bound is
        // often attained, then bisect.
        let k = if try_goal && goal > lower && goal <= ceiling {
            goal
        } else if probe_top {
            ceiling
        } else {
            lower + (ceiling - lower).div_ceil(2)
        };
        if k == goal {
            try_goal = false;
        } else {
            probe_top = false;
        }
        // Halve the remaining time per call so later, usually easier,
        // decisions still get a share after a timeout.
        let call_deadline = deadline.map(|d| {
            let now = Instant::now();
            let left = d.saturating_duration_since(now);
            now + left / 2
        });
        match decide_until(&poset, k, call_deadline) {
            Decision::Yes(w) => {
                lower = k;
                witness = w;
            }
            Decision::No => {
                proven_upper = proven_upper.min(k - 1);
                ceiling = ceiling.min(k - 1);
            }
            Decision::Timeout => {
                budget_hit = true;
                ceiling = k - 1;
                if deadline.is_some_and(|d| Instant::now() >= d) {
                    break;
                }
            }
        }
    }
    Ok(SdepthResult {
        lower,
        upper: proven_upper,
        witness,
        elapsed: started.elapsed(),
        budget_hit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_path;
    use crate::ideal::{edge_ideal, SquarefreeIdeal};

    const LONG: Duration = Duration::from_secs(600);

    #[test]
    fn single_edge() {
        let i = SquarefreeIdeal::from_index_lists(2, &[&[0, 1]]).unwrap();
        let r = sdepth_exact(&ModuleDescriptor::Quotient(i.clone()), LONG).unwrap();
        assert_eq!(r.value(), Some(1));
        r.witness.verify_at(1).unwrap();
        let r = sdepth_exact(&ModuleDescriptor::Ideal(i), LONG).unwrap();
        assert_eq!(r.value(), Some(2));
    }

    #[test]
    fn free_ring() {
        let r = sdepth_exact(&ModuleDescriptor::Quotient(SquarefreeIdeal::zero(4)), LONG).unwrap();
        assert_eq!(r.value(), Some(4));
        r.witness.verify().unwrap();
    }

    #[test]
    fn paths() {
        for n in 2..=7 {
            let i = edge_ideal(&build_path(n).unwrap()).unwrap();
            let q = sdepth_exact(&ModuleDescriptor::Quotient(i.clone()), LONG).unwrap();
            assert_eq!(q.value(), Some(n.div_ceil(3)), "n={n}");
            q.witness.verify_at(q.lower).unwrap();
            let id = sdepth_exact(&ModuleDescriptor::Ideal(i), LONG).unwrap();
            assert!(id.lower > n.div_ceil(3), "n={n}");
            id.witness.verify_at(id.lower).unwrap();
        }
    }

    #[test]
    fn goal_stops_early() {
        let i = edge_ideal(&build_path(6).unwrap()).unwrap();
        let mut opts = SearchOptions::with_budget(LONG);
        opts.goal = Some(1);
        let r = sdepth_search(&ModuleDescriptor::Quotient(i), &opts).unwrap();
        assert!(r.lower >= 1);
    }
}
