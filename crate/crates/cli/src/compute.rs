//! Depth and Stanley depth through the cache.

use std::time::{Duration, Instant};

use anyhow::{bail, Result};
use sdepth_core::homological::{betti_at, hochster_betti, FieldChar};
use sdepth_core::ideal::ModuleDescriptor;
use sdepth_core::serial::WitnessDoc;
use sdepth_core::stanley::{sdepth_search, PartitionWitness, SearchOptions};

use crate::cache::{Cache, CacheEntry, CacheKey, Computation, Payload};

/// Where a value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Computed,
    Cache,
}

#[derive(Clone, Debug)]
pub struct DepthOutcome {
    pub value: usize,
    pub source: Source,
    pub warnings: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct SdepthOutcome {
    pub lower: usize,
    pub upper: usize,
    pub budget_hit: bool,
    pub witness: PartitionWitness,
    pub source: Source,
    pub warnings: Vec<String>,
}

/// `depth(S/I)` for quotients, `depth(S/I) + 1` for ideals.
pub fn depth(
    d: &ModuleDescriptor,
    field: FieldChar,
    cache: Option<&Cache>,
) -> Result<DepthOutcome> {
    let (ideal, shift) = match d {
        ModuleDescriptor::Quotient(i) => (i, 0),
        ModuleDescriptor::Ideal(i) => (i, 1),
        ModuleDescriptor::Pair { .. } => bail!("depth is computed for ideals and quotients only"),
    };
    let key = CacheKey::new(Computation::Depth, d, field.p());
    let mut warnings = Vec::new();
    if let Some(cache) = cache {
        match cache.load(&key) {
            Ok(Some(entry)) => {
                if let Payload::Depth { value, pd_sigma } = entry.payload {
                    // depth = ambient - pd; the stored σ must still carry a
                    // nonzero Betti number in degree pd.
                    let pd = (ideal.ambient() + shift).checked_sub(value);
                    let ok = match (pd, pd_sigma) {
                        (Some(0), None) => ideal.is_zero(),
                        (Some(pd), Some(sigma)) => betti_at(ideal, sigma, field)
                            .iter()
                            .any(|&(i, r)| i == pd && r > 0),
                        _ => false,
                    };
                    if ok {
                        return Ok(DepthOutcome {
                            value,
                            source: Source::Cache,
                            warnings,
                        });
                    }
                }
                warnings.push("cached depth failed re-verification; recomputing".into());
            }
            Ok(None) => {}
            Err(e) => warnings.push(format!("ignoring cache entry: {e:#}")),
        }
    }
    let started = Instant::now();
    let (value, pd_sigma) = if ideal.is_zero() {
        (ideal.ambient() + shift, None)
    } else {
        let table = hochster_betti(ideal, field)?;
        (
            ideal.ambient() - table.projective_dimension() + shift,
            table.pd_witness(),
        )
    };
    if let Some(cache) = cache {
        let entry = CacheEntry::new(
            key,
            Payload::Depth { value, pd_sigma },
            started.elapsed().as_millis() as u64,
        );
        if let Err(e) = cache.store(&entry) {
            warnings.push(format!("could not write cache: {e:#}"));
        }
    }
    Ok(DepthOutcome {
        value,
        source: Source::Computed,
        warnings,
    })
}

pub fn sdepth(
    d: &ModuleDescriptor,
    budget: Duration,
    goal: Option<usize>,
    cache: Option<&Cache>,
) -> Result<SdepthOutcome> {
    let key = CacheKey::new(Computation::Sdepth, d, 0);
    let mut warnings = Vec::new();
    let mut start = None;
    if let Some(cache) = cache {
        match cache.load(&key) {
            Ok(Some(entry)) => {
                if let Payload::Sdepth {
                    lower,
                    upper,
                    budget_hit,
                    budget_ms,
                    witness,
                } = entry.payload
                {
                    match witness.to_witness() {
                        Ok((w, _)) if w.target == *d && w.verify_at(lower).is_ok() => {
                            let settled = !budget_hit || budget_ms >= budget.as_millis() as u64;
                            let enough = goal.is_some_and(|g| lower >= g);
                            if settled || enough {
                                return Ok(SdepthOutcome {
                                    lower,
                                    upper,
                                    budget_hit,
                                    witness: w,
                                    source: Source::Cache,
                                    warnings,
                                });
                            }
                            start = Some(w);
                        }
                        _ => warnings
                            .push("cached witness failed re-verification; recomputing".into()),
                    }
                }
            }
            Ok(None) => {}
            Err(e) => warnings.push(format!("ignoring cache entry: {e:#}")),
        }
    }
    let opts = SearchOptions {
        budget,
        start,
        goal,
    };
    let r = sdepth_search(d, &opts)?;
    // Only store results that answer the question fully, so a goal-limited
    // run never masks the exact value.
    if let Some(cache) = cache {
        if goal.is_none() {
            let entry = CacheEntry::new(
                key,
                Payload::Sdepth {
                    lower: r.lower,
                    upper: r.upper,
                    budget_hit: r.budget_hit,
                    budget_ms: budget.as_millis() as u64,
                    witness: WitnessDoc::new(&r.witness),
                },
                r.elapsed.as_millis() as u64,
            );
            if let Err(e) = cache.store(&entry) {
                warnings.push(format!("could not write cache: {e:#}"));
            }
        }
    }
    Ok(SdepthOutcome {
        lower: r.lower,
        upper: r.upper,
        budget_hit: r.budget_hit,
        witness: r.witness,
        source: Source::Computed,
        warnings,
    })
}
