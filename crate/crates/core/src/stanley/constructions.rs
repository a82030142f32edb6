//! Explicit Stanley decompositions of `I(C_{n,m}) / I(P_{n,m})` for
//! `m = 2, 3`.

use std::time::Duration;

use super::decomposition::{StanleyDecomposition, StanleySpace};
use super::poset::CharPoset;
use super::sdepth::sdepth_exact;
use crate::error::{Error, Result};
use crate::graph::{FamilySpec, VarIndexer};
use crate::ideal::{generators_formula, ModuleDescriptor, SquarefreeIdeal};
use crate::support::Support;

/// One block `x_prefix · (K[inner_vars] / inner_ideal)[free]` of a direct
/// sum decomposition. `inner_ideal` lives in the full ambient ring and only
/// uses `inner_vars`.
#[derive(Clone, Debug)]
pub struct Summand {
    pub prefix: Support,
    pub free: Support,
    pub inner_vars: Support,
    pub inner_ideal: SquarefreeIdeal,
}

impl Summand {
    /// Spaces from an optimal partition of the inner quotient, multiplied by
    /// the prefix with the free variables adjoined.
    pub fn expand(&self, budget: Duration) -> Result<Vec<StanleySpace>> {
        let (local, map) = self.inner_ideal.compact(self.inner_vars)?;
        let r = sdepth_exact(&ModuleDescriptor::Quotient(local), budget)?;
        Ok(r.witness
            .intervals
            .iter()
            .map(|iv| {
                StanleySpace::new(
                    self.prefix.union(iv.lo.map(&map)),
                    self.free.union(iv.hi.map(&map)),
                )
            })
            .collect())
    }
}

fn pair_target(n: usize, m: usize) -> Result<(ModuleDescriptor, SquarefreeIdeal)> {
    let p = generators_formula(&FamilySpec::p(n, m)?)?;
    let c = generators_formula(&FamilySpec::c(n, m)?)?;
    Ok((ModuleDescriptor::pair(p.clone(), c)?, p))
}

fn sup(vars: &[usize]) -> Support {
    Support::from_indices(vars.iter().copied())
}

/// Column range `lo..=hi` of the given layers.
fn columns(n: usize, layers: &[usize], lo: usize, hi: usize) -> Support {
    let mut s = Support::EMPTY;
    for &j in layers {
        for i in lo..=hi {
            s = s.with(VarIndexer::flat(n, i, j));
        }
    }
    s
}

/// Summands of `I(C_{n,2}) / I(P_{n,2})` for `n >= 5`: one of `x_1, y_1`
/// times one of `x_n, y_n`, times the quotient on columns `3..n-2`.
pub fn c2_summands(n: usize) -> Result<Vec<Summand>> {
    if n < 5 {
        return Err(Error::InvalidShape(format!(
            "C2 summands need n >= 5, got {n}"
        )));
    }
    let (_, p) = pair_target(n, 2)?;
    let x = |i: usize| VarIndexer::flat(n, i, 1);
    let y = |i: usize| VarIndexer::flat(n, i, 2);
    let inner_vars = columns(n, &[1, 2], 3, n - 2);
    let inner_ideal = p.restrict(inner_vars);
    Ok([[x(1), x(n)], [y(1), y(n)], [x(1), y(n)], [y(1), x(n)]]
        .iter()
        .map(|pre| Summand {
            prefix: sup(pre),
            free: sup(pre),
            inner_vars,
            inner_ideal: inner_ideal.clone(),
        })
        .collect())
}

/// A Stanley decomposition of `I(C_{n,2}) / I(P_{n,2})` with every space of
/// dimension at least `⌈(n+2)/3⌉`. For `n >= 6` the inner quotients are
/// decomposed by search within `budget` each.
pub fn paper_decomposition_c2(n: usize, budget: Duration) -> Result<StanleyDecomposition> {
    if n < 3 {
        return Err(Error::InvalidShape(format!(
            "C2 decomposition needs n >= 3, got {n}"
        )));
    }
    let (target, _) = pair_target(n, 2)?;
    let x = |i: usize| VarIndexer::flat(n, i, 1);
    let y = |i: usize| VarIndexer::flat(n, i, 2);
    let spaces = match n {
        3 | 4 => [[x(1), x(n)], [x(1), y(n)], [y(1), x(n)], [y(1), y(n)]]
            .iter()
            .map(|w| StanleySpace::new(sup(w), sup(w)))
            .collect(),
        5 => [
            (vec![x(1), x(5)], vec![x(1), x(3), x(5)]),
            (vec![x(1), y(5)], vec![x(1), x(3), y(5)]),
            (vec![y(1), x(5)], vec![y(1), x(3), x(5)]),
            (vec![y(1), y(5)], vec![y(1), x(3), y(5)]),
            (vec![x(1), y(3), x(5)], vec![x(1), y(3), x(5)]),
            (vec![x(1), y(3), y(5)], vec![x(1), y(3), y(5)]),
            (vec![y(1), y(3), y(5)], vec![y(1), y(3), y(5)]),
            (vec![y(1), y(3), x(5)], vec![y(1), y(3), x(5)]),
        ]
        .iter()
        .map(|(w, f)| StanleySpace::new(sup(w), sup(f)))
        .collect(),
        _ => {
            let mut spaces = Vec::new();
            for s in c2_summands(n)? {
                spaces.extend(s.expand(budget)?);
            }
            spaces
        }
    };
    Ok(StanleyDecomposition { target, spaces })
}

/// Summands of `I(C_{n,3}) / I(P_{n,3})` for `n >= 6`.
///
/// The first seven follow the end-column patterns `y_1y_n`, `x_1y_n`,
/// `z_1y_n`, `y_1x_n`, `y_1z_n`, `x_1x_n`, `z_1z_n`, each over the quotient
/// on columns `3..n-2` enlarged by the compatible vertices of columns
/// `1, 2, n-1, n`. Monomials whose end columns carry `x_1z_1y_n`,
/// `y_1x_nz_n` or `x_1z_1x_nz_n` fall in none of those seven; the last three
/// summands cover them.
pub fn c3_summands(n: usize) -> Result<Vec<Summand>> {
    if n < 6 {
        return Err(Error::InvalidShape(format!(
            "C3 summands need n >= 6, got {n}"
        )));
    }
    let (_, p) = pair_target(n, 3)?;
    let x = |i: usize| VarIndexer::flat(n, i, 1);
    let y = |i: usize| VarIndexer::flat(n, i, 2);
    let z = |i: usize| VarIndexer::flat(n, i, 3);
    let core = columns(n, &[1, 2, 3], 3, n - 2);
    let wrap = |a: usize, b: usize| Support::singleton(a).with(b);
    let blocks: Vec<(Vec<usize>, Vec<usize>, Option<Support>)> = vec![
        (vec![y(1), y(n)], vec![], None),
        (vec![x(1), y(n)], vec![z(2)], None),
        (vec![z(1), y(n)], vec![x(2)], None),
        (vec![y(1), x(n)], vec![z(n - 1)], None),
        (vec![y(1), z(n)], vec![x(n - 1)], None),
        (
            vec![x(1), x(n)],
            vec![z(1), z(2), z(n - 1), z(n)],
            Some(wrap(z(n), z(1))),
        ),
        (
            vec![z(1), z(n)],
            vec![x(1), x(2), x(n - 1), x(n)],
            Some(wrap(x(n), x(1))),
        ),
        (vec![x(1), z(1), y(n)], vec![], None),
        (vec![y(1), x(n), z(n)], vec![], None),
        (vec![x(1), z(1), x(n), z(n)], vec![], None),
    ];
    blocks
        .into_iter()
        .map(|(pre, extra, wrap_gen)| {
            let inner_vars = core.union(sup(&extra));
            let mut inner_ideal = p.restrict(inner_vars);
            if let Some(g) = wrap_gen {
                inner_ideal = inner_ideal.add(g)?;
            }
            Ok(Summand {
                prefix: sup(&pre),
                free: sup(&pre),
                inner_vars,
                inner_ideal,
            })
        })
        .collect()
}

/// A Stanley decomposition of `I(C_{n,3}) / I(P_{n,3})` for `n >= 5`.
pub fn paper_decomposition_c3(n: usize, budget: Duration) -> Result<StanleyDecomposition> {
    if n < 5 {
        return Err(Error::InvalidShape(format!(
            "C3 decomposition needs n >= 5, got {n}"
        )));
    }
    let (target, _) = pair_target(n, 3)?;
    if n > 5 {
        let mut spaces = Vec::new();
        for s in c3_summands(n)? {
            spaces.extend(s.expand(budget)?);
        }
        return Ok(StanleyDecomposition { target, spaces });
    }
    let x = |i: usize| VarIndexer::flat(5, i, 1);
    let y = |i: usize| VarIndexer::flat(5, i, 2);
    let z = |i: usize| VarIndexer::flat(5, i, 3);
    let mut spaces: Vec<StanleySpace> = [
        (vec![x(1), x(5)], vec![x(1), x(3), x(5)]),
        (vec![x(1), y(5)], vec![x(1), x(3), y(5)]),
        (vec![y(1), x(5)], vec![x(3), x(5), y(1)]),
        (vec![y(1), y(5)], vec![x(3), y(1), y(5)]),
        (vec![z(1), y(5)], vec![x(3), y(5), z(1)]),
        (vec![z(1), z(5)], vec![z(1), z(3), z(5)]),
        (vec![y(1), z(5)], vec![y(1), y(3), z(5)]),
    ]
    .iter()
    .map(|(w, f)| StanleySpace::new(sup(w), sup(f)))
    .collect();
    let covered = |s: Support, spaces: &[StanleySpace]| {
        spaces
            .iter()
            .any(|sp| sp.w.is_subset(s) && s.is_subset(sp.w.union(sp.free)))
    };
    let poset = CharPoset::new(&target)?;
    let residual: Vec<Support> = poset.elements().filter(|&v| !covered(v, &spaces)).collect();
    spaces.extend(residual.into_iter().map(|v| StanleySpace::new(v, v)));
    Ok(StanleyDecomposition { target, spaces })
}
