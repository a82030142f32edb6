//! Versioned JSON documents for ideals, modules, witnesses, decompositions
//! and Betti tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VarLabel;
use crate::homological::{BettiTable, FieldChar};
use crate::ideal::{ModuleDescriptor, ModuleKind, SquarefreeIdeal};
use crate::stanley::{Interval, PartitionWitness, StanleyDecomposition, StanleySpace};
use crate::support::{Support, MAX_VARS};

pub const IDEAL_SCHEMA: &str = "sdepth-ideal/1";
pub const WITNESS_SCHEMA: &str = "sdepth-witness/1";
pub const DECOMPOSITION_SCHEMA: &str = "sdepth-decomposition/1";
pub const BETTI_SCHEMA: &str = "sdepth-betti/1";

fn check_schema(found: &str, expected: &str) -> Result<()> {
    if found == expected {
        Ok(())
    } else {
        Err(Error::Parse(format!(
            "schema {found:?} is not supported (expected {expected:?})"
        )))
    }
}

fn check_ambient(ambient: usize) -> Result<()> {
    if ambient > MAX_VARS {
        return Err(Error::TooManyVariables {
            requested: ambient,
            max: MAX_VARS,
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdealDoc {
    pub schema: String,
    pub ambient: usize,
    pub generators: Vec<Support>,
    /// Grid position `(i, j)` of each variable, when it has one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<VarLabel>>,
}

impl IdealDoc {
    pub fn new(ideal: &SquarefreeIdeal, labels: Option<Vec<VarLabel>>) -> Self {
        IdealDoc {
            schema: IDEAL_SCHEMA.into(),
            ambient: ideal.ambient(),
            generators: ideal.gens().to_vec(),
            labels,
        }
    }

    pub fn to_ideal(&self) -> Result<SquarefreeIdeal> {
        check_schema(&self.schema, IDEAL_SCHEMA)?;
        check_ambient(self.ambient)?;
        if let Some(labels) = &self.labels {
            if labels.len() != self.ambient {
                return Err(Error::Parse(format!(
                    "{} labels for {} variables",
                    labels.len(),
                    self.ambient
                )));
            }
        }
        SquarefreeIdeal::new(self.ambient, self.generators.iter().copied())
    }
}

pub fn parse_ideal(text: &str) -> Result<SquarefreeIdeal> {
    serde_json::from_str::<IdealDoc>(text)?.to_ideal()
}

/// A module descriptor as plain data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    pub kind: ModuleKind,
    pub ambient: usize,
    pub inner: Vec<Support>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub outer: Option<Vec<Support>>,
}

impl From<&ModuleDescriptor> for ModuleDoc {
    fn from(d: &ModuleDescriptor) -> Self {
        ModuleDoc {
            kind: d.kind(),
            ambient: d.ambient(),
            inner: d.inner().gens().to_vec(),
            outer: d.outer().map(|o| o.gens().to_vec()),
        }
    }
}

impl ModuleDoc {
    pub fn to_descriptor(&self) -> Result<ModuleDescriptor> {
        check_ambient(self.ambient)?;
        let inner = SquarefreeIdeal::new(self.ambient, self.inner.iter().copied())?;
        match (self.kind, &self.outer) {
            (ModuleKind::Ideal, None) => {
                if inner.is_zero() {
                    return Err(Error::ZeroIdeal);
                }
                Ok(ModuleDescriptor::Ideal(inner))
            }
            (ModuleKind::Quotient, None) => Ok(ModuleDescriptor::Quotient(inner)),
            (ModuleKind::Pair, Some(outer)) => {
                let outer = SquarefreeIdeal::new(self.ambient, outer.iter().copied())?;
                ModuleDescriptor::pair(inner, outer)
            }
            (ModuleKind::Pair, None) => Err(Error::Parse("pair module without outer ideal".into())),
            (_, Some(_)) => Err(Error::Parse(
                "outer ideal given for a non-pair module".into(),
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub schema: String,
    pub target: ModuleDoc,
    pub k: usize,
    pub intervals: Vec<Interval>,
}

impl WitnessDoc {
    pub fn new(w: &PartitionWitness) -> Self {
        let w = w.clone().normalized();
        WitnessDoc {
            schema: WITNESS_SCHEMA.into(),
            target: ModuleDoc::from(&w.target),
            k: w.min_top(),
            intervals: w.intervals,
        }
    }

    /// Decodes without checking the partition; call
    /// [`PartitionWitness::verify_at`] with `k` for that.
    pub fn to_witness(&self) -> Result<(PartitionWitness, usize)> {
        check_schema(&self.schema, WITNESS_SCHEMA)?;
        let target = self.target.to_descriptor()?;
        let n = target.ambient();
        for iv in &self.intervals {
            if !iv.hi.fits(n) || !iv.lo.fits(n) {
                return Err(Error::WidthMismatch {
                    support: iv.hi.union(iv.lo).to_string(),
                    ambient: n,
                });
            }
        }
        Ok((
            PartitionWitness {
                target,
                intervals: self.intervals.clone(),
            },
            self.k,
        ))
    }
}

pub fn parse_witness(text: &str) -> Result<(PartitionWitness, usize)> {
    serde_json::from_str::<WitnessDoc>(text)?.to_witness()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionDoc {
    pub schema: String,
    pub target: ModuleDoc,
    pub spaces: Vec<StanleySpace>,
}

impl DecompositionDoc {
    pub fn new(d: &StanleyDecomposition) -> Self {
        DecompositionDoc {
            schema: DECOMPOSITION_SCHEMA.into(),
            target: ModuleDoc::from(&d.target),
            spaces: d.spaces.clone(),
        }
    }

    pub fn to_decomposition(&self) -> Result<StanleyDecomposition> {
        check_schema(&self.schema, DECOMPOSITION_SCHEMA)?;
        let target = self.target.to_descriptor()?;
        let n = target.ambient();
        for sp in &self.spaces {
            if !sp.w.fits(n) || !sp.free.fits(n) {
                return Err(Error::WidthMismatch {
                    support: sp.w.union(sp.free).to_string(),
                    ambient: n,
                });
            }
        }
        Ok(StanleyDecomposition {
            target,
            spaces: self.spaces.clone(),
        })
    }
}

pub fn parse_decomposition(text: &str) -> Result<StanleyDecomposition> {
    serde_json::from_str::<DecompositionDoc>(text)?.to_decomposition()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BettiEntry {
    pub i: usize,
    pub sigma: Support,
    pub rank: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BettiDoc {
    pub schema: String,
    pub field: FieldChar,
    pub entries: Vec<BettiEntry>,
}

impl BettiDoc {
    pub fn new(table: &BettiTable, field: FieldChar) -> Self {
        BettiDoc {
            schema: BETTI_SCHEMA.into(),
            field,
            entries: table
                .entries()
                .map(|(i, sigma, rank)| BettiEntry { i, sigma, rank })
                .collect(),
        }
    }
}

pub fn parse_betti(text: &str) -> Result<BettiDoc> {
    let doc: BettiDoc = serde_json::from_str(text)?;
    check_schema(&doc.schema, BETTI_SCHEMA)?;
    if let Some(e) = doc.entries.iter().find(|e| e.i > e.sigma.len()) {
        return Err(Error::Parse(format!(
            "beta_{{{}, {}}} has index above |sigma|",
            e.i, e.sigma
        )));
    }
    Ok(doc)
}
