//! Suite enumeration and row evaluation.

use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;

use super::expectations::{expected_value, Form, Quantity};
use super::identities::{free_shift_rows, identity_jobs, identity_rows, ColonIdentity};
use super::{
    cycle_depth_bound, grid_product_bound, summarize, Bracket, Header, Limits, LimitsDoc, Report,
    Row, Suite, ALGORITHM_VERSION, CHAR_DISAGREEMENT, REPORT_SCHEMA,
};
use crate::error::{Error, Result};
use crate::graph::{build_family, diameter, Family, FamilySpec};
use crate::homological::depth_quotient;
use crate::ideal::{
    build_l, family_edge_ideal, family_module, l_variables, ModuleDescriptor, ModuleKind,
    SquarefreeIdeal,
};
use crate::serial::ModuleDoc;
use crate::stanley::{
    okazaki_bound, paper_decomposition_c2, paper_decomposition_c3, sdepth_search,
    verify_decomposition, SearchOptions, Verification,
};

/// `L_l` rows are kept to ideals on at most this many variables.
const L_VAR_CAP: usize = 14;

/// Shapes whose free-variable extensions are checked.
const SHIFT_BASES: [&str; 3] = ["P:3,1", "C:4,1", "P:2,2"];

#[derive(Clone, Debug)]
pub(super) enum Job {
    Closed(FamilySpec),
    Bounds { spec: FamilySpec, with_depth: bool },
    Conjecture(FamilySpec),
    Pair(FamilySpec),
    Decomposition { layers: usize, n: usize },
    LBound { n: usize, l: usize },
    Identity(ColonIdentity, usize),
    FreeShift { base: FamilySpec, r: usize },
    Stretch { spec: FamilySpec, with_depth: bool },
}

/// A computed bracket, or the reason there is none.
#[derive(Clone, Debug, Default)]
pub(super) struct Measured {
    pub bracket: Option<Bracket>,
    pub budget_hit: bool,
    pub note: Option<String>,
}

impl Measured {
    fn failed(e: Error) -> Self {
        Measured {
            bracket: None,
            budget_hit: false,
            note: Some(format!("computation failed: {e}")),
        }
    }

    pub(super) fn exact(v: usize) -> Self {
        Measured {
            bracket: Some(Bracket::exact(v)),
            ..Measured::default()
        }
    }

    fn with_note(mut self, note: Option<String>) -> Self {
        self.note = match (self.note, note) {
            (Some(a), Some(b)) => Some(format!("{a}; {b}")),
            (a, b) => a.or(b),
        };
        self
    }
}

pub(super) fn family_ideal(spec: &FamilySpec) -> Result<SquarefreeIdeal> {
    family_edge_ideal(spec)
}

/// `depth(S/I)` over the primary field, with a note when the check field
/// disagrees.
pub(super) fn depth_measure(ideal: &SquarefreeIdeal, limits: &Limits) -> Measured {
    let d = match depth_quotient(ideal, limits.field) {
        Ok(d) => d,
        Err(e) => return Measured::failed(e),
    };
    let mut m = Measured::exact(d);
    if let Some(f) = limits.check_field.filter(|&f| f != limits.field) {
        match depth_quotient(ideal, f) {
            Ok(d2) if d2 != d => {
                m.note = Some(format!(
                    "{CHAR_DISAGREEMENT}: depth over GF({}) is {d2}",
                    f.p()
                ))
            }
            Ok(_) => {}
            Err(e) => m.note = Some(format!("check over GF({}) failed: {e}", f.p())),
        }
    }
    m
}

pub(super) fn sdepth_measure(
    d: &ModuleDescriptor,
    limits: &Limits,
    goal: Option<usize>,
) -> Measured {
    let opts = SearchOptions {
        budget: limits.budget,
        start: None,
        goal,
    };
    let r = match sdepth_search(d, &opts) {
        Ok(r) => r,
        Err(e) => return Measured::failed(e),
    };
    if let Err(e) = r.witness.verify_at(r.lower) {
        return Measured::failed(e);
    }
    let mut note = None;
    if goal.is_some() && r.lower < r.upper && !r.budget_hit {
        note = Some(format!(
            "search stopped once tops of size {} were found",
            r.lower
        ));
    }
    Measured {
        bracket: Some(Bracket {
            lower: r.lower,
            upper: r.upper,
        }),
        budget_hit: r.budget_hit,
        note,
    }
}

pub(super) struct RowInput<'a> {
    pub id: String,
    pub check: &'static str,
    pub family: Option<String>,
    pub module: &'a ModuleDescriptor,
    pub quantity: Quantity,
    pub expected: Form,
    pub claim: String,
}

pub(super) fn make_row(input: RowInput<'_>, m: &Measured) -> Row {
    let mut row = Row {
        id: input.id,
        check: input.check.into(),
        family: input.family,
        module: input.module.kind(),
        quantity: input.quantity,
        expected: input.expected,
        claim: input.claim,
        computed: m.bracket,
        budget_hit: m.budget_hit,
        verdict: super::Verdict::Fail,
        note: m.note.clone(),
        input: ModuleDoc::from(input.module),
        reference: None,
    };
    row.verdict = row.judged();
    row
}

fn ceil3(a: usize) -> usize {
    a.div_ceil(3)
}

fn closed_rows(spec: &FamilySpec, limits: &Limits) -> Result<Vec<Row>> {
    let ideal = family_ideal(spec)?;
    let q = ModuleDescriptor::Quotient(ideal.clone());
    let fam = Some(spec.to_string());
    let mut rows = Vec::new();
    let depth_claim = expected_value(spec, ModuleKind::Quotient, Quantity::Depth);
    let has_diameter = matches!(spec.family, Family::P | Family::Pstar | Family::Pstarstar);
    if depth_claim.is_some() || has_diameter {
        let depth = depth_measure(&ideal, limits);
        if let Some(e) = depth_claim {
            rows.push(make_row(
                RowInput {
                    id: format!("{spec} quotient depth"),
                    check: "closed_form",
                    family: fam.clone(),
                    module: &q,
                    quantity: Quantity::Depth,
                    expected: e.form,
                    claim: e.claim,
                },
                &depth,
            ));
        }
        if has_diameter {
            let g = build_family(spec)?.graph;
            if let Some(diam) = diameter(&g) {
                rows.push(make_row(
                    RowInput {
                        id: format!("{spec} quotient depth diameter"),
                        check: "diameter",
                        family: fam.clone(),
                        module: &q,
                        quantity: Quantity::Depth,
                        expected: Form::LowerBound {
                            value: ceil3(diam + 1),
                        },
                        claim: format!(
                            "depth(S/I(G)) >= ceil((diam(G)+1)/3) for connected G; diam = {diam}"
                        ),
                    },
                    &depth,
                ));
            }
        }
    }
    if let Some(e) = expected_value(spec, ModuleKind::Quotient, Quantity::Sdepth) {
        let sd = sdepth_measure(&q, limits, None);
        rows.push(make_row(
            RowInput {
                id: format!("{spec} quotient sdepth"),
                check: "closed_form",
                family: fam,
                module: &q,
                quantity: Quantity::Sdepth,
                expected: e.form,
                claim: e.claim,
            },
            &sd,
        ));
    }
    Ok(rows)
}

fn bounds_rows(spec: &FamilySpec, with_depth: bool, limits: &Limits) -> Result<Vec<Row>> {
    let ideal = family_ideal(spec)?;
    let q = ModuleDescriptor::Quotient(ideal.clone());
    let (n, m) = (spec.n(), spec.m());
    let fam = Some(spec.to_string());
    let grid = grid_product_bound(n, m);
    let mut rows = Vec::new();
    let depth = with_depth.then(|| depth_measure(&ideal, limits));
    let sd = sdepth_measure(&q, limits, None);
    let (depth_bound, depth_claim) = match spec.family {
        Family::C => (
            cycle_depth_bound(n, m),
            "depth of S/I(C_{n,m}) is at most ceil((n-1)/3)+(ceil(m/3)-1)ceil(n/3), or ceil(n/3)ceil(m/3) when 3 | m",
        ),
        _ => (
            grid,
            "depth of S/I(P_{n,m}) is at most ceil(n/3)ceil(m/3)",
        ),
    };
    if let Some(depth) = &depth {
        rows.push(make_row(
            RowInput {
                id: format!("{spec} quotient depth upper_bound"),
                check: "upper_bound",
                family: fam.clone(),
                module: &q,
                quantity: Quantity::Depth,
                expected: Form::UpperBound { value: depth_bound },
                claim: depth_claim.into(),
            },
            depth,
        ));
    }
    let family_word = if spec.family == Family::C { "C" } else { "P" };
    rows.push(make_row(
        RowInput {
            id: format!("{spec} quotient sdepth upper_bound"),
            check: "upper_bound",
            family: fam.clone(),
            module: &q,
            quantity: Quantity::Sdepth,
            expected: Form::UpperBound { value: grid },
            claim: format!("sdepth of S/I({family_word}_{{n,m}}) is at most ceil(n/3)ceil(m/3)"),
        },
        &sd,
    ));
    if spec.family == Family::P {
        let attained = |b: &Option<Bracket>| match b {
            Some(b) if b.lower == b.upper => {
                if b.lower == grid {
                    "equal".to_string()
                } else {
                    format!("{} differs", b.lower)
                }
            }
            Some(b) => format!("{b} unresolved"),
            None => "not computed".into(),
        };
        let mut note = format!("sdepth {}", attained(&sd.bracket));
        if let Some(depth) = &depth {
            note = format!("depth {}; {note}", attained(&depth.bracket));
        }
        let evidence = Measured {
            note: Some(note),
            ..sd.clone()
        };
        rows.push(make_row(
            RowInput {
                id: format!("{spec} quotient sdepth open_question"),
                check: "open_question",
                family: fam,
                module: &q,
                quantity: Quantity::Sdepth,
                expected: Form::Evidence { value: grid },
                claim: "open: is depth = sdepth = ceil(n/3)ceil(m/3) for S/I(P_{n,m})?".into(),
            },
            &evidence,
        ));
    }
    Ok(rows)
}

/// Rows for the closed-form datapoints of a stretch instance, plus its bounds.
fn stretch_rows(spec: &FamilySpec, with_depth: bool, limits: &Limits) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    if with_depth {
        rows.extend(closed_rows(spec, limits)?);
    } else {
        let q = ModuleDescriptor::Quotient(family_ideal(spec)?);
        if let Some(e) = expected_value(spec, ModuleKind::Quotient, Quantity::Sdepth) {
            rows.push(make_row(
                RowInput {
                    id: format!("{spec} quotient sdepth"),
                    check: "closed_form",
                    family: Some(spec.to_string()),
                    module: &q,
                    quantity: Quantity::Sdepth,
                    expected: e.form,
                    claim: e.claim,
                },
                &sdepth_measure(&q, limits, None),
            ));
        }
    }
    Ok(rows)
}

fn conjecture_rows(spec: &FamilySpec, limits: &Limits) -> Result<Vec<Row>> {
    let ideal = family_ideal(spec)?;
    let q = ModuleDescriptor::Quotient(ideal.clone());
    let i = ModuleDescriptor::Ideal(ideal.clone());
    let fam = Some(spec.to_string());
    let strict = spec.family == Family::P;
    let qm = sdepth_measure(&q, limits, None);
    let Some(qb) = qm.bracket else {
        let mut row = make_row(
            RowInput {
                id: format!("{spec} ideal sdepth conjecture"),
                check: "conjecture",
                family: fam,
                module: &i,
                quantity: Quantity::Sdepth,
                expected: Form::LowerBound { value: 0 },
                claim: "sdepth(I) >= sdepth(S/I)".into(),
            },
            &qm,
        );
        row.reference = Some(ModuleDoc::from(&q));
        return Ok(vec![row]);
    };
    let closed = expected_value(spec, ModuleKind::Ideal, Quantity::Sdepth);
    let (literal, corrected) = okazaki_bound(&ideal);
    let corrected = corrected.max(0) as usize;
    let mut goal = if strict { qb.upper + 1 } else { qb.upper };
    goal = goal.max(corrected);
    if let Some(e) = &closed {
        goal = goal.max(match e.form {
            Form::LowerBound { value } => value,
            Form::StrictLowerBound { value } => value + 1,
            _ => 0,
        });
    }
    let im = sdepth_measure(&i, limits, Some(goal));
    let mut rows = Vec::new();

    let mut relational = make_row(
        RowInput {
            id: format!("{spec} ideal sdepth conjecture"),
            check: if strict { "strict_ideal" } else { "conjecture" },
            family: fam.clone(),
            module: &i,
            quantity: Quantity::Sdepth,
            expected: if strict {
                Form::StrictLowerBound { value: qb.upper }
            } else {
                Form::LowerBound { value: qb.upper }
            },
            claim: if strict {
                "sdepth(I(P_{n,m})) > sdepth(S/I(P_{n,m}))".into()
            } else {
                "sdepth(I) >= sdepth(S/I)".into()
            },
        },
        &im.clone().with_note(
            (qb.lower != qb.upper).then(|| format!("quotient sdepth only bracketed as {qb}")),
        ),
    );
    relational.reference = Some(ModuleDoc::from(&q));
    rows.push(relational);

    if let Some(e) = closed {
        rows.push(make_row(
            RowInput {
                id: format!("{spec} ideal sdepth"),
                check: "closed_form",
                family: fam.clone(),
                module: &i,
                quantity: Quantity::Sdepth,
                expected: e.form,
                claim: e.claim,
            },
            &im,
        ));
    }
    rows.push(make_row(
        RowInput {
            id: format!("{spec} ideal sdepth okazaki"),
            check: "okazaki",
            family: fam.clone(),
            module: &i,
            quantity: Quantity::Sdepth,
            expected: Form::LowerBound { value: corrected },
            claim: "sdepth(I) >= max{1, n - floor(g/2)} for g minimal generators in n variables"
                .into(),
        },
        &im.clone().with_note(Some(format!(
            "the min form of the bound evaluates to {literal}"
        ))),
    ));
    let q2 = grid_product_bound(spec.n(), spec.m());
    let reached = match im.bracket {
        Some(b) if b.lower >= q2 => "reached".to_string(),
        Some(b) if b.upper < q2 => "refuted".to_string(),
        Some(b) => format!("unresolved, computed {b}"),
        None => "not computed".into(),
    };
    rows.push(make_row(
        RowInput {
            id: format!("{spec} ideal sdepth open_question"),
            check: "open_question",
            family: fam,
            module: &i,
            quantity: Quantity::Sdepth,
            expected: Form::Evidence { value: q2 },
            claim: "open: is sdepth(I) >= ceil(n/3)ceil(m/3) for I(P_{n,m}) and I(C_{n,m})?".into(),
        },
        &Measured {
            note: Some(reached),
            ..im
        },
    ));
    Ok(rows)
}

fn pair_module(n: usize, m: usize) -> Result<ModuleDescriptor> {
    family_module(&FamilySpec::c(n, m)?, ModuleKind::Pair)
}

fn pair_rows(spec: &FamilySpec, limits: &Limits) -> Result<Vec<Row>> {
    let d = pair_module(spec.n(), spec.m())?;
    let Some(e) = expected_value(spec, ModuleKind::Pair, Quantity::Sdepth) else {
        return Ok(Vec::new());
    };
    let goal = match e.form {
        Form::LowerBound { value } => Some(value),
        _ => None,
    };
    Ok(vec![make_row(
        RowInput {
            id: format!("{spec} pair sdepth"),
            check: "pair_bound",
            family: Some(spec.to_string()),
            module: &d,
            quantity: Quantity::Sdepth,
            expected: e.form,
            claim: e.claim,
        },
        &sdepth_measure(&d, limits, goal),
    )])
}

fn decomposition_rows(layers: usize, n: usize, limits: &Limits) -> Result<Vec<Row>> {
    let target = pair_module(n, layers)?;
    let built = match layers {
        2 => paper_decomposition_c2(n, limits.budget),
        _ => paper_decomposition_c3(n, limits.budget),
    };
    let label = format!("C{layers}quot n={n}");
    let fam = Some(format!("C:{n},{layers}"));
    let need = ceil3(n + 2);
    let (exactness, dimension) = match built.and_then(|dec| Ok((verify_decomposition(&dec)?, dec)))
    {
        Ok((Verification::Ok, dec)) => (Measured::exact(0), Measured::exact(dec.min_dimension())),
        Ok((
            Verification::Violation {
                pattern,
                count,
                expected,
            },
            dec,
        )) => (
            Measured {
                bracket: Some(Bracket::exact(count.abs_diff(expected))),
                note: Some(format!(
                    "monomial with exponents {pattern:?} covered {count} times, expected {expected}"
                )),
                ..Measured::default()
            },
            Measured::exact(dec.min_dimension()),
        ),
        Err(e) => (
            Measured::failed(Error::InvalidModule(e.to_string())),
            Measured::failed(e),
        ),
    };
    Ok(vec![
        make_row(
            RowInput {
                id: format!("{label} decomposition"),
                check: "decomposition_exact",
                family: fam.clone(),
                module: &target,
                quantity: Quantity::Mismatches,
                expected: Form::Exact { value: 0 },
                claim: format!(
                    "the explicit decomposition of I(C_{{n,{layers}}})/I(P_{{n,{layers}}}) covers every monomial once"
                ),
            },
            &exactness,
        ),
        make_row(
            RowInput {
                id: format!("{label} decomposition dimension"),
                check: "decomposition_dimension",
                family: fam,
                module: &target,
                quantity: Quantity::MinDimension,
                expected: Form::LowerBound { value: need },
                claim: format!(
                    "the explicit decomposition of I(C_{{n,{layers}}})/I(P_{{n,{layers}}}) has spaces of dimension >= ceil((n+2)/3)"
                ),
            },
            &dimension,
        ),
    ])
}

fn l_rows(n: usize, l: usize, limits: &Limits) -> Result<Vec<Row>> {
    let (local, _) = build_l(n, l)?.compact(l_variables(n, l))?;
    let d = ModuleDescriptor::Ideal(local);
    let need = ceil3(l + 2) + 1;
    Ok(vec![make_row(
        RowInput {
            id: format!("L_{l} in S_{{{n},3}} ideal sdepth"),
            check: "l_bound",
            family: None,
            module: &d,
            quantity: Quantity::Sdepth,
            expected: Form::LowerBound { value: need },
            claim: "sdepth(L_l) >= ceil((l+2)/3)+1 on its own variables".into(),
        },
        &sdepth_measure(&d, limits, Some(need)),
    )])
}

fn run_job(job: &Job, limits: &Limits) -> Result<Vec<Row>> {
    match job {
        Job::Closed(spec) => closed_rows(spec, limits),
        Job::Bounds { spec, with_depth } => bounds_rows(spec, *with_depth, limits),
        Job::Conjecture(spec) => conjecture_rows(spec, limits),
        Job::Pair(spec) => pair_rows(spec, limits),
        Job::Decomposition { layers, n } => decomposition_rows(*layers, *n, limits),
        Job::LBound { n, l } => l_rows(*n, *l, limits),
        Job::Identity(id, n) => identity_rows(*id, *n, limits),
        Job::FreeShift { base, r } => free_shift_rows(base, *r, limits),
        Job::Stretch { spec, with_depth } => stretch_rows(spec, *with_depth, limits),
    }
}

fn grid_specs(
    families: &[Family],
    layers: std::ops::RangeInclusive<usize>,
    max_vars: usize,
) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for &family in families {
        for m in layers.clone() {
            for n in 1..=max_vars / m {
                if let Ok(spec) = FamilySpec::new(family, n, m) {
                    out.push(spec);
                }
            }
        }
    }
    out
}

fn aux_specs(max_vars: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for family in [Family::Pstar, Family::Pstarstar, Family::Cdiamond] {
        for n in 2..=max_vars {
            if let Ok(spec) = FamilySpec::new(family, n, 3) {
                if spec.variable_count() <= max_vars {
                    out.push(spec);
                }
            }
        }
    }
    out
}

fn stretch_jobs() -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in [4, 5, 6] {
        let spec = FamilySpec::p(n, 4).expect("valid shape");
        let with_depth = n == 4;
        jobs.push(Job::Stretch { spec, with_depth });
        jobs.push(Job::Bounds { spec, with_depth });
    }
    jobs
}

pub(super) fn jobs_for(suite: Suite, limits: &Limits) -> Vec<Job> {
    let max = limits.max_vars;
    let pc = [Family::P, Family::C];
    match suite {
        Suite::M1 => grid_specs(&pc, 1..=1, max)
            .into_iter()
            .map(Job::Closed)
            .collect(),
        Suite::M2 => grid_specs(&pc, 2..=2, max)
            .into_iter()
            .map(Job::Closed)
            .collect(),
        Suite::M3 => grid_specs(&pc, 3..=3, max)
            .into_iter()
            .map(Job::Closed)
            .collect(),
        Suite::Aux => {
            let mut jobs: Vec<Job> = aux_specs(max).into_iter().map(Job::Closed).collect();
            for l in 3.. {
                if 2 * l + 5 > L_VAR_CAP {
                    break;
                }
                for n in [l + 2, l + 3] {
                    jobs.push(Job::LBound { n, l });
                }
            }
            jobs.extend(identity_jobs(max));
            for base in SHIFT_BASES {
                let base: FamilySpec = base.parse().expect("valid shape");
                for r in 1..=2 {
                    jobs.push(Job::FreeShift { base, r });
                }
            }
            jobs
        }
        Suite::Identities => identity_jobs(max),
        Suite::Pairs => {
            let mut jobs: Vec<Job> = grid_specs(&[Family::C], 2..=3, max)
                .into_iter()
                .map(Job::Pair)
                .collect();
            for n in 3..=6 {
                jobs.push(Job::Decomposition { layers: 2, n });
            }
            for n in [5, 6] {
                jobs.push(Job::Decomposition { layers: 3, n });
            }
            jobs
        }
        Suite::Conjecture => grid_specs(&pc, 1..=3, max)
            .into_iter()
            .map(Job::Conjecture)
            .collect(),
        Suite::Bounds => grid_specs(&pc, 1..=max, max)
            .into_iter()
            .map(|spec| Job::Bounds {
                spec,
                with_depth: true,
            })
            .collect(),
        Suite::Stretch => stretch_jobs(),
    }
}

pub(super) fn assemble(suite: Suite, jobs: &[Job], limits: &Limits) -> Report {
    let started = Instant::now();
    let results: Vec<(Vec<Row>, u64)> = jobs
        .par_iter()
        .map(|job| {
            let t = Instant::now();
            let rows = run_job(job, limits).unwrap_or_else(|e| vec![error_row(job, e)]);
            (rows, t.elapsed().as_millis() as u64)
        })
        .collect();
    let mut rows = Vec::new();
    let mut row_elapsed_ms = Vec::new();
    for (job_rows, ms) in results {
        row_elapsed_ms.extend(std::iter::repeat_n(ms, job_rows.len()));
        rows.extend(job_rows);
    }
    let generated_unix = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map_or(0, |d| d.as_secs());
    Report {
        schema: REPORT_SCHEMA.into(),
        header: Header {
            tool_version: env!("CARGO_PKG_VERSION").into(),
            algorithm_version: ALGORITHM_VERSION,
            generated_unix,
            elapsed_ms: started.elapsed().as_millis() as u64,
            row_elapsed_ms,
        },
        suite,
        limits: LimitsDoc::from(limits),
        summary: summarize(&rows),
        rows,
    }
}

fn error_row(job: &Job, e: Error) -> Row {
    let empty = ModuleDescriptor::Quotient(SquarefreeIdeal::zero(0));
    make_row(
        RowInput {
            id: format!("{job:?}"),
            check: "error",
            family: None,
            module: &empty,
            quantity: Quantity::Mismatches,
            expected: Form::Exact { value: 0 },
            claim: "the instance can be built and computed".into(),
        },
        &Measured::failed(e),
    )
}

/// Runs every row of `suite` within `limits`. Computation failures become
/// `Fail` rows; only a refused stretch run is an error.
pub fn run_suite(suite: Suite, limits: &Limits) -> Result<Report> {
    if suite == Suite::Stretch && !limits.allow_stretch {
        return Err(Error::Refused(
            "the stretch suite runs 16 to 24 variable instances; opt in explicitly to run it"
                .into(),
        ));
    }
    Ok(assemble(suite, &jobs_for(suite, limits), limits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::replay::Verdict;
    use std::time::Duration;

    fn quick() -> Limits {
        Limits {
            max_vars: 6,
            budget: Duration::from_secs(30),
            ..Limits::default()
        }
    }

    #[test]
    fn stretch_needs_opt_in() {
        assert!(matches!(
            run_suite(Suite::Stretch, &quick()),
            Err(Error::Refused(_))
        ));
    }

    #[test]
    fn small_m1_passes_and_is_consistent() {
        let r = run_suite(Suite::M1, &quick()).unwrap();
        assert!(!r.rows.is_empty());
        assert!(
            r.rows.iter().all(|row| row.verdict == Verdict::Pass),
            "{:#?}",
            r.rows
        );
        assert!(r.inconsistent_rows().is_empty());
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn bodies_are_deterministic() {
        let a = run_suite(Suite::M2, &quick()).unwrap();
        let b = run_suite(Suite::M2, &quick()).unwrap();
        assert_eq!(a.body_json(), b.body_json());
        assert_eq!(a.to_csv(), b.to_csv());
    }
}
