//! Colon and sum identities used to reduce one family member to a smaller
//! one, checked on generators and on depth.

use serde::{Deserialize, Serialize};

use super::expectations::{Form, Quantity};
use super::suite::{assemble, depth_measure, family_ideal, make_row, Job, Measured, RowInput};
use super::{Limits, Report, Row, Suite};
use crate::error::{Error, Result};
use crate::graph::{FamilySpec, VarIndexer};
use crate::ideal::{ModuleDescriptor, SquarefreeIdeal};
use crate::serial::ModuleDoc;
use crate::support::Support;

/// A reduction `S/(I : u) ≅ S'/I'[free]` or `(I, u_1, u_2) = (I', u_1, u_2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColonIdentity {
    /// `(I(C_{n,2}) : x_n) ≅ I(P_{n-3,2})`, shifted one column.
    CycleTwoByX,
    /// `(I(C_{n,2}) : y_n) ≅ I(P_{n-3,2})`, shifted one column.
    CycleTwoByY,
    /// `(I(C_{n,3}) : y_n) ≅ I(P_{n-3,3})`, shifted one column.
    CycleThreeByY,
    /// `(I(P_{n,3}) : y_2) ≅ I(P_{n-3,3})`, shifted three columns.
    PathThreeBySecondY,
    /// `(I(P_{n,2}) : y_{n-1}) ≅ I(P_{n-3,2})`.
    PathTwoByPenultimateY,
    /// `(I(P*_{n,3}) : y_n) ≅ I(P_{n-2,3})`.
    PstarByY,
    /// `(I(P**_{n,3}) : y_n) ≅ I(P*_{n-2,3})`, mirrored.
    PstarstarByY,
    /// `(I(C_{n,2}), x_n, y_n) = (I(P_{n-1,2}), x_n, y_n)`.
    CycleTwoPlusLastColumn,
}

impl ColonIdentity {
    pub const ALL: [ColonIdentity; 8] = [
        ColonIdentity::CycleTwoByX,
        ColonIdentity::CycleTwoByY,
        ColonIdentity::CycleThreeByY,
        ColonIdentity::PathThreeBySecondY,
        ColonIdentity::PathTwoByPenultimateY,
        ColonIdentity::PstarByY,
        ColonIdentity::PstarstarByY,
        ColonIdentity::CycleTwoPlusLastColumn,
    ];

    /// Smallest `n` for which both sides exist.
    pub fn min_n(self) -> usize {
        use ColonIdentity::*;
        match self {
            PstarByY => 3,
            CycleTwoPlusLastColumn => 3,
            _ => 4,
        }
    }

    pub fn source(self, n: usize) -> Result<FamilySpec> {
        use ColonIdentity::*;
        match self {
            CycleTwoByX | CycleTwoByY | CycleTwoPlusLastColumn => FamilySpec::c(n, 2),
            CycleThreeByY => FamilySpec::c(n, 3),
            PathThreeBySecondY => FamilySpec::p(n, 3),
            PathTwoByPenultimateY => FamilySpec::p(n, 2),
            PstarByY => FamilySpec::pstar(n),
            PstarstarByY => FamilySpec::pstarstar(n),
        }
    }

    pub fn target(self, n: usize) -> Result<FamilySpec> {
        use ColonIdentity::*;
        let small = |k: usize| {
            n.checked_sub(k)
                .ok_or_else(|| Error::InvalidShape(format!("{self:?} needs n >= {}", self.min_n())))
        };
        match self {
            CycleTwoByX | CycleTwoByY | PathTwoByPenultimateY => FamilySpec::p(small(3)?, 2),
            CycleThreeByY | PathThreeBySecondY => FamilySpec::p(small(3)?, 3),
            PstarByY => FamilySpec::p(small(2)?, 3),
            PstarstarByY => FamilySpec::pstar(small(2)?),
            CycleTwoPlusLastColumn => FamilySpec::p(small(1)?, 2),
        }
    }

    fn describe(self, n: usize) -> String {
        use ColonIdentity::*;
        let (src, tgt) = (
            self.source(n)
                .map_or_else(|_| "?".into(), |s| s.to_string()),
            self.target(n)
                .map_or_else(|_| "?".into(), |s| s.to_string()),
        );
        match self {
            CycleTwoByX => format!("(I({src}) : x{n}) vs I({tgt})"),
            CycleTwoByY | CycleThreeByY | PstarByY | PstarstarByY => {
                format!("(I({src}) : y{n}) vs I({tgt})")
            }
            PathThreeBySecondY => format!("(I({src}) : y2) vs I({tgt})"),
            PathTwoByPenultimateY => format!("(I({src}) : y{}) vs I({tgt})", n - 1),
            CycleTwoPlusLastColumn => format!("(I({src}), x{n}, y{n}) vs (I({tgt}), x{n}, y{n})"),
        }
    }

    /// The source-side ideal, the target family, the map from target
    /// variables to source variables, and the variables expected to be free.
    fn sides(self, n: usize) -> Result<Sides> {
        use ColonIdentity::*;
        let source = self.source(n)?;
        let target = self.target(n)?;
        let big = family_ideal(&source)?;
        let flat = |i: usize, j: usize| VarIndexer::flat(n, i, j);
        let small_n = target.n();
        let shifted = |offset: usize| -> Vec<usize> {
            (1..=target.m())
                .flat_map(|j| (1..=small_n).map(move |i| (i, j)))
                .map(|(i, j)| flat(i + offset, j))
                .collect()
        };
        let (module, map, free) = match self {
            CycleTwoByX => (
                big.colon(Support::singleton(flat(n, 1)))?,
                shifted(1),
                vec![flat(n, 1)],
            ),
            CycleTwoByY | CycleThreeByY => (
                big.colon(Support::singleton(flat(n, 2)))?,
                shifted(1),
                vec![flat(n, 2)],
            ),
            PathThreeBySecondY => (
                big.colon(Support::singleton(flat(2, 2)))?,
                shifted(3),
                vec![flat(2, 2)],
            ),
            PathTwoByPenultimateY => (
                big.colon(Support::singleton(flat(n - 1, 2)))?,
                shifted(0),
                vec![flat(n - 1, 2)],
            ),
            PstarByY => (
                big.colon(Support::singleton(flat(n, 2)))?,
                shifted(0),
                vec![flat(n, 2)],
            ),
            PstarstarByY => {
                // Target column i goes to source column n - 1 - i; the target's
                // extra vertex (index 3(n-2)) goes to the source's far one.
                let mut map: Vec<usize> = (1..=3)
                    .flat_map(|j| (1..=small_n).map(move |i| (i, j)))
                    .map(|(i, j)| flat(n - 1 - i, j))
                    .collect();
                map.push(3 * n + 1);
                (
                    big.colon(Support::singleton(flat(n, 2)))?,
                    map,
                    vec![flat(n, 2)],
                )
            }
            CycleTwoPlusLastColumn => {
                let sum = big
                    .add(Support::singleton(flat(n, 1)))?
                    .add(Support::singleton(flat(n, 2)))?;
                (sum, shifted(0), vec![])
            }
        };
        Ok(Sides {
            source,
            target,
            module,
            map,
            free: Support::from_indices(free),
        })
    }
}

struct Sides {
    source: FamilySpec,
    target: FamilySpec,
    module: SquarefreeIdeal,
    map: Vec<usize>,
    free: Support,
}

/// Generator and free-variable discrepancies between the computed side and
/// the relabeled target plus linear generators.
fn mismatches(sides: &Sides, target_ideal: &SquarefreeIdeal) -> Result<(usize, Support)> {
    let ambient = sides.module.ambient();
    let embedded = target_ideal.embed(&sides.map, ambient)?;
    let (linear, nonlinear): (Vec<Support>, Vec<Support>) =
        sides.module.gens().iter().partition(|g| g.len() == 1);
    let expected: Vec<Support> = embedded.gens().to_vec();
    let mut count = nonlinear.iter().filter(|g| !expected.contains(g)).count()
        + expected.iter().filter(|g| !nonlinear.contains(g)).count();
    let killed: Support = linear.iter().fold(Support::EMPTY, |a, g| a.union(*g));
    let image = Support::from_indices(sides.map.iter().copied());
    count += killed.intersection(image).len();
    let free = Support::full(ambient).difference(killed).difference(image);
    count += free.difference(sides.free).len() + sides.free.difference(free).len();
    Ok((count, free))
}

pub(super) fn identity_rows(
    identity: ColonIdentity,
    n: usize,
    limits: &Limits,
) -> Result<Vec<Row>> {
    let sides = identity.sides(n)?;
    let target_ideal = family_ideal(&sides.target)?;
    let (count, free) = mismatches(&sides, &target_ideal)?;
    let module = ModuleDescriptor::Quotient(sides.module.clone());
    let reference = ModuleDoc::from(&ModuleDescriptor::Quotient(target_ideal.clone()));
    let what = identity.describe(n);
    let fam = Some(sides.source.to_string());

    let generators = Measured {
        note: Some(format!("free variables {free}")),
        ..Measured::exact(count)
    };
    let mut gen_row = make_row(
        RowInput {
            id: format!("{what} generators"),
            check: "colon_generators",
            family: fam.clone(),
            module: &module,
            quantity: Quantity::Mismatches,
            expected: Form::Exact { value: 0 },
            claim: "generators agree after renumbering, up to killed and free variables".into(),
        },
        &generators,
    );
    gen_row.reference = Some(reference.clone());

    let target_depth = depth_measure(&target_ideal, limits);
    let source_depth = depth_measure(&sides.module, limits);
    let mut depth_row = match target_depth.bracket {
        Some(t) => make_row(
            RowInput {
                id: format!("{what} depth"),
                check: "colon_depth",
                family: fam,
                module: &module,
                quantity: Quantity::Depth,
                expected: Form::Exact {
                    value: t.lower + sides.free.len(),
                },
                claim: "depth(S'[free]/I') = depth(S'/I') + |free|".into(),
            },
            &source_depth,
        ),
        None => make_row(
            RowInput {
                id: format!("{what} depth"),
                check: "colon_depth",
                family: fam,
                module: &module,
                quantity: Quantity::Depth,
                expected: Form::Exact { value: 0 },
                claim: "depth(S'[free]/I') = depth(S'/I') + |free|".into(),
            },
            &target_depth,
        ),
    };
    depth_row.reference = Some(reference);
    Ok(vec![gen_row, depth_row])
}

pub(super) fn free_shift_rows(base: &FamilySpec, r: usize, limits: &Limits) -> Result<Vec<Row>> {
    let ideal = family_ideal(base)?;
    let extended = ideal.extend_ambient(r)?;
    let module = ModuleDescriptor::Quotient(extended.clone());
    let base_depth = depth_measure(&ideal, limits);
    let ext_depth = depth_measure(&extended, limits);
    let expected = base_depth.bracket.map_or(0, |b| b.lower) + r;
    let mut row = make_row(
        RowInput {
            id: format!("{base} with {r} free variables depth"),
            check: "free_shift",
            family: Some(base.to_string()),
            module: &module,
            quantity: Quantity::Depth,
            expected: Form::Exact { value: expected },
            claim: "depth(S[y_1..y_r]/IS[y_1..y_r]) = depth(S/I) + r".into(),
        },
        if base_depth.bracket.is_some() {
            &ext_depth
        } else {
            &base_depth
        },
    );
    row.reference = Some(ModuleDoc::from(&ModuleDescriptor::Quotient(ideal)));
    Ok(vec![row])
}

pub(super) fn identity_jobs(max_vars: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    for identity in ColonIdentity::ALL {
        for n in identity.min_n()..=max_vars {
            match identity.source(n) {
                Ok(spec) if spec.variable_count() <= max_vars => {
                    jobs.push(Job::Identity(identity, n))
                }
                _ => {}
            }
        }
    }
    jobs
}

/// Checks every colon and sum identity whose larger side fits in
/// `limits.max_vars` variables.
pub fn colon_identity_checks(limits: &Limits) -> Report {
    assemble(Suite::Identities, &identity_jobs(limits.max_vars), limits)
}
