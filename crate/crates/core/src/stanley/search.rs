//! Exact search for interval partitions with large tops.
//!
//! A partition of the poset with every top of size at least `k` exists iff
//! the elements of size below `k` can be covered exactly by disjoint
//! intervals whose tops have size exactly `k`: the truncation of a Boolean
//! interval at rank `k` splits into intervals topped at rank `k`, and
//! everything of size `k` or more may stand alone. That reduced problem is an
//! exact cover with the size-`k` elements as optional items, solved with
//! dancing links, minimum-remaining-values branching and a counting bound.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use super::poset::{CharPoset, Interval, PartitionWitness};
use crate::support::{binomial, Support};

/// Outcome of a decision call.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes(PartitionWitness),
    No,
    Timeout,
}

/// Does the poset admit an interval partition whose tops all have at least
/// `k` elements?
pub fn decide_partition(poset: &CharPoset, k: usize, budget: Duration) -> Decision {
    decide_until(poset, k, Instant::now().checked_add(budget))
}

pub(crate) fn decide_until(poset: &CharPoset, k: usize, deadline: Option<Instant>) -> Decision {
    if k == 0 {
        return Decision::Yes(singletons(poset, |_| true));
    }
    if k > poset.ambient() || !counting_feasible(&level_counts(poset, k), k) {
        return Decision::No;
    }
    match ExactCover::build(poset, k, deadline) {
        Build::Ready(mut dlx) => dlx.solve(poset, k, deadline),
        Build::Infeasible => Decision::No,
        Build::Timeout => Decision::Timeout,
    }
}

/// Largest `k` not refuted by the root counting bound, capped by the
/// smallest maximal element (which must be a top of its own interval).
pub fn counting_upper_bound(poset: &CharPoset) -> usize {
    let cap = poset
        .maximal_elements()
        .iter()
        .map(|s| s.len())
        .min()
        .unwrap_or(poset.ambient());
    (1..=cap)
        .find(|&k| !counting_feasible(&level_counts(poset, k), k))
        .map_or(cap, |k| k - 1)
}

fn level_counts(poset: &CharPoset, k: usize) -> Vec<i128> {
    (0..=k).map(|j| poset.level(j).len() as i128).collect()
}

/// With `uncovered[j]` elements of size `j` still to cover, the number of
/// intervals with bottoms of each size below `k` is forced level by level;
/// each must be nonnegative and there must be enough free size-`k` tops.
fn counting_feasible(uncovered: &[i128], k: usize) -> bool {
    let mut bottoms = [0i128; 65];
    let mut total = 0i128;
    for j in 0..k {
        let mut c = uncovered[j];
        for (i, &b) in bottoms.iter().enumerate().take(j) {
            if b != 0 {
                c -= b * binomial(k - i, j - i) as i128;
            }
        }
        if c < 0 {
            return false;
        }
        bottoms[j] = c;
        total += c;
    }
    total <= uncovered[k]
}

/// The partition using `[s, s]` for every element with `keep(s)`.
fn singletons(poset: &CharPoset, keep: impl Fn(Support) -> bool) -> PartitionWitness {
    PartitionWitness {
        target: poset.descriptor().clone(),
        intervals: poset
            .elements()
            .filter(|&s| keep(s))
            .map(|s| Interval::new(s, s))
            .collect(),
    }
}

const SPACER: usize = usize::MAX;

enum Build {
    Ready(Box<ExactCover>),
    Infeasible,
    Timeout,
}

/// Dancing-links exact cover: items `1..=primary` must be covered once,
/// items `primary+1..=items` at most once.
struct ExactCover {
    primary: usize,
    llink: Vec<usize>,
    rlink: Vec<usize>,
    len: Vec<usize>,
    top: Vec<usize>,
    ulink: Vec<usize>,
    dlink: Vec<usize>,
    node_option: Vec<u32>,
    item_level: Vec<usize>,
    options: Vec<Interval>,
    uncovered: Vec<i128>,
}

impl ExactCover {
    fn build(poset: &CharPoset, k: usize, deadline: Option<Instant>) -> Build {
        let mut ids: HashMap<Support, usize> = HashMap::new();
        let mut item_level = vec![0];
        for j in 0..=k {
            for &s in poset.level(j) {
                ids.insert(s, item_level.len());
                item_level.push(j);
            }
        }
        let items = item_level.len() - 1;
        let primary = items - poset.level(k).len();
        let mut dlx = ExactCover {
            primary,
            llink: vec![0; items + 2],
            rlink: vec![0; items + 2],
            len: vec![0; items + 1],
            top: vec![0; items + 2],
            ulink: (0..items + 2).collect(),
            dlink: (0..items + 2).collect(),
            node_option: vec![u32::MAX; items + 2],
            uncovered: (0..=k).map(|j| poset.level(j).len() as i128).collect(),
            item_level,
            options: Vec::new(),
        };
        // two circular header lists: primary items on root 0, secondary
        // items on root items + 1
        let link = |dlx: &mut ExactCover, root: usize, range: std::ops::RangeInclusive<usize>| {
            let mut prev = root;
            for i in range {
                dlx.rlink[prev] = i;
                dlx.llink[i] = prev;
                prev = i;
            }
            dlx.rlink[prev] = root;
            dlx.llink[root] = prev;
        };
        link(&mut dlx, 0, 1..=primary);
        link(&mut dlx, items + 1, primary + 1..=items);
        // node items + 1 doubles as the first spacer
        dlx.top[items + 1] = SPACER;
        let mut prev_spacer = items + 1;
        let tops = poset.level(k);
        for j in 0..k {
            for &lo in poset.level(j) {
                if let Some(d) = deadline {
                    if Instant::now() > d {
                        return Build::Timeout;
                    }
                }
                let mut any = false;
                for &hi in tops.iter().filter(|&&b| lo.is_subset(b)) {
                    any = true;
                    let interval = Interval::new(lo, hi);
                    let first = dlx.top.len();
                    for s in interval.members() {
                        let item = ids[&s];
                        let x = dlx.top.len();
                        dlx.top.push(item);
                        dlx.node_option.push(dlx.options.len() as u32);
                        let up = dlx.ulink[item];
                        dlx.ulink.push(up);
                        dlx.dlink.push(item);
                        dlx.dlink[up] = x;
                        dlx.ulink[item] = x;
                        dlx.len[item] += 1;
                    }
                    let last = dlx.top.len() - 1;
                    dlx.dlink[prev_spacer] = last;
                    let spacer = dlx.top.len();
                    dlx.top.push(SPACER);
                    dlx.node_option.push(u32::MAX);
                    dlx.ulink.push(first);
                    dlx.dlink.push(spacer);
                    prev_spacer = spacer;
                    dlx.options.push(interval);
                }
                if !any {
                    return Build::Infeasible;
                }
            }
        }
        Build::Ready(Box::new(dlx))
    }

    fn hide(&mut self, p: usize) {
        let mut q = p + 1;
        while q != p {
            let x = self.top[q];
            if x == SPACER {
                q = self.ulink[q];
            } else {
                let (u, d) = (self.ulink[q], self.dlink[q]);
                self.dlink[u] = d;
                self.ulink[d] = u;
                self.len[x] -= 1;
                q += 1;
            }
        }
    }

    fn unhide(&mut self, p: usize) {
        let mut q = p - 1;
        while q != p {
            let x = self.top[q];
            if x == SPACER {
                q = self.dlink[q];
            } else {
                let (u, d) = (self.ulink[q], self.dlink[q]);
                self.dlink[u] = q;
                self.ulink[d] = q;
                self.len[x] += 1;
                q -= 1;
            }
        }
    }

    fn cover(&mut self, i: usize) {
        let mut p = self.dlink[i];
        while p != i {
            self.hide(p);
            p = self.dlink[p];
        }
        let (l, r) = (self.llink[i], self.rlink[i]);
        self.rlink[l] = r;
        self.llink[r] = l;
    }

    fn uncover(&mut self, i: usize) {
        let (l, r) = (self.llink[i], self.rlink[i]);
        self.rlink[l] = i;
        self.llink[r] = i;
        let mut p = self.ulink[i];
        while p != i {
            self.unhide(p);
            p = self.ulink[p];
        }
    }

    /// Cover every item of the option through `x` except `top[x]`, and
    /// update the per-level counts for the whole option.
    fn commit(&mut self, x: usize) {
        self.uncovered[self.item_level[self.top[x]]] -= 1;
        let mut p = x + 1;
        while p != x {
            let j = self.top[p];
            if j == SPACER {
                p = self.ulink[p];
            } else {
                self.cover(j);
                self.uncovered[self.item_level[j]] -= 1;
                p += 1;
            }
        }
    }

    fn revert(&mut self, x: usize) {
        let mut p = x - 1;
        while p != x {
            let j = self.top[p];
            if j == SPACER {
                p = self.dlink[p];
            } else {
                self.uncover(j);
                self.uncovered[self.item_level[j]] += 1;
                p -= 1;
            }
        }
        self.uncovered[self.item_level[self.top[x]]] += 1;
    }

    /// Uncovered primary item with the fewest remaining options.
    fn choose(&self) -> usize {
        let mut best = self.rlink[0];
        let mut p = best;
        while p != 0 {
            if self.len[p] < self.len[best] {
                best = p;
                if self.len[p] == 0 {
                    break;
                }
            }
            p = self.rlink[p];
        }
        best
    }

    fn solve(&mut self, poset: &CharPoset, k: usize, deadline: Option<Instant>) -> Decision {
        let mut chosen: Vec<usize> = Vec::new();
        let mut steps: u64 = 0;
        'enter: loop {
            if self.rlink[0] == 0 {
                return Decision::Yes(self.witness(poset, k, &chosen));
            }
            steps += 1;
            if steps.is_multiple_of(1024) {
                if let Some(d) = deadline {
                    if Instant::now() > d {
                        return Decision::Timeout;
                    }
                }
            }
            let mut i = self.choose();
            debug_assert!(i != 0 && i <= self.primary);
            self.cover(i);
            let mut x = self.dlink[i];
            loop {
                if x == i {
                    self.uncover(i);
                    match chosen.pop() {
                        None => return Decision::No,
                        Some(prev) => {
                            self.revert(prev);
                            i = self.top[prev];
                            x = self.dlink[prev];
                            continue;
                        }
                    }
                }
                self.commit(x);
                if counting_feasible(&self.uncovered, k) {
                    chosen.push(x);
                    continue 'enter;
                }
                self.revert(x);
                x = self.dlink[x];
            }
        }
    }

    fn witness(&self, poset: &CharPoset, k: usize, chosen: &[usize]) -> PartitionWitness {
        let mut intervals: Vec<Interval> = chosen
            .iter()
            .map(|&x| self.options[self.node_option[x] as usize])
            .collect();
        let used_tops: HashSet<Support> = intervals.iter().map(|iv| iv.hi).collect();
        let rest = singletons(poset, |s| {
            s.len() > k || (s.len() == k && !used_tops.contains(&s))
        });
        intervals.extend(rest.intervals);
        PartitionWitness {
            target: poset.descriptor().clone(),
            intervals,
        }
    }
}
