//! Closed-form values and bounds for the grid families.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Family, FamilySpec};
use crate::ideal::ModuleKind;

/// Which invariant a row is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Depth,
    Sdepth,
    /// Number of discrepancies found by a structural comparison.
    Mismatches,
    /// Smallest Stanley space dimension of an explicit decomposition.
    MinDimension,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Depth => "depth",
            Quantity::Sdepth => "sdepth",
            Quantity::Mismatches => "mismatches",
            Quantity::MinDimension => "min_dimension",
        }
    }
}

/// The shape of a claimed value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum Form {
    Exact {
        value: usize,
    },
    Range {
        lo: usize,
        hi: usize,
    },
    UpperBound {
        value: usize,
    },
    LowerBound {
        value: usize,
    },
    /// Strictly greater than `value`.
    StrictLowerBound {
        value: usize,
    },
    /// A conjectured value; compared and recorded, never failed.
    Evidence {
        value: usize,
    },
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Form::Exact { value } => write!(f, "= {value}"),
            Form::Range { lo, hi } => write!(f, "in [{lo}, {hi}]"),
            Form::UpperBound { value } => write!(f, "<= {value}"),
            Form::LowerBound { value } => write!(f, ">= {value}"),
            Form::StrictLowerBound { value } => write!(f, "> {value}"),
            Form::Evidence { value } => write!(f, "=? {value}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Form {
    /// Compares the form against a computed bracket `lower..=upper`.
    pub fn judge(&self, lower: usize, upper: usize) -> Verdict {
        let within = |lo: usize, hi: usize| {
            if lo <= lower && upper <= hi {
                Verdict::Pass
            } else if upper < lo || lower > hi {
                Verdict::Fail
            } else {
                Verdict::Inconclusive
            }
        };
        match *self {
            Form::Exact { value } => within(value, value),
            Form::Range { lo, hi } => within(lo, hi),
            Form::UpperBound { value } => within(0, value),
            Form::LowerBound { value } => within(value, usize::MAX),
            Form::StrictLowerBound { value } => within(value + 1, usize::MAX),
            Form::Evidence { .. } => Verdict::Pass,
        }
    }
}

/// A claimed value for one family, module and invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub family: String,
    pub module: ModuleKind,
    pub quantity: Quantity,
    #[serde(flatten)]
    pub form: Form,
    /// The published statement this value comes from, in words.
    pub claim: String,
}

fn ceil3(a: usize) -> usize {
    a.div_ceil(3)
}

/// `⌈n/3⌉⌈m/3⌉`.
pub fn grid_product_bound(n: usize, m: usize) -> usize {
    ceil3(n) * ceil3(m)
}

/// The depth bound for `S/I(C_{n,m})`, split on `m mod 3`.
pub fn cycle_depth_bound(n: usize, m: usize) -> usize {
    if m.is_multiple_of(3) {
        ceil3(n) * ceil3(m)
    } else {
        ceil3(n - 1) + (ceil3(m) - 1) * ceil3(n)
    }
}

/// The closed-form claim for `spec`, `kind` and `quantity`, or `None` when
/// nothing is claimed. Bounds that hold for every shape are returned only
/// when no sharper statement exists.
pub fn expected_value(
    spec: &FamilySpec,
    kind: ModuleKind,
    quantity: Quantity,
) -> Option<Expectation> {
    let (n, m) = (spec.n(), spec.m());
    let make = |form: Form, claim: &str| Expectation {
        family: spec.to_string(),
        module: kind,
        quantity,
        form,
        claim: claim.to_string(),
    };
    use Family::*;
    use ModuleKind::*;
    use Quantity::*;
    match (spec.family, kind, quantity) {
        (P, Quotient, _) if m <= 3 => Some(make(
            Form::Exact { value: ceil3(n) },
            "depth and sdepth of S/I(P_{n,m}) equal ceil(n/3) for m <= 3",
        )),
        (P, Quotient, _) if n == 4 && m == 4 => Some(make(
            Form::Exact { value: 4 },
            "computed datapoint: depth and sdepth of S/I(P_{4,4}) equal 4",
        )),
        (P, Quotient, Sdepth) if m == 4 && (n == 5 || n == 6) => Some(make(
            Form::Exact { value: 4 },
            "computed datapoint: sdepth of S/I(P_{5,4}) and S/I(P_{6,4}) equal 4",
        )),
        (P, Quotient, _) => Some(make(
            Form::UpperBound {
                value: grid_product_bound(n, m),
            },
            "depth and sdepth of S/I(P_{n,m}) are at most ceil(n/3)ceil(m/3)",
        )),
        (C, Quotient, Depth) if m <= 2 => Some(make(
            Form::Exact { value: ceil3(n - 1) },
            "depth of S/I(C_{n,m}) equals ceil((n-1)/3) for m <= 2",
        )),
        (C, Quotient, Sdepth) if m == 2 && n == 3 => Some(make(
            Form::Exact { value: 1 },
            "S/I(C_{3,2}) is the quotient by a squarefree Veronese ideal, sdepth 1",
        )),
        (C, Quotient, Sdepth) if m == 1 => Some(make(
            Form::UpperBound { value: ceil3(n) },
            "sdepth of S/I(C_n) is at most ceil(n/3)",
        )),
        (C, Quotient, Sdepth) if m == 2 => Some(make(
            Form::Range {
                lo: ceil3(n - 1),
                hi: ceil3(n),
            },
            "ceil((n-1)/3) <= sdepth(S/I(C_{n,2})) <= ceil(n/3)",
        )),
        (C, Quotient, _) if m == 3 && n % 3 != 1 => Some(make(
            Form::Exact { value: ceil3(n - 1) },
            "depth and sdepth of S/I(C_{n,3}) equal ceil((n-1)/3) when n = 0, 2 mod 3",
        )),
        (C, Quotient, _) if m == 3 => Some(make(
            Form::Range {
                lo: ceil3(n - 1),
                hi: ceil3(n),
            },
            "depth and sdepth of S/I(C_{n,3}) lie in [ceil((n-1)/3), ceil(n/3)] when n = 1 mod 3",
        )),
        (C, Quotient, Depth) => Some(make(
            Form::UpperBound {
                value: cycle_depth_bound(n, m),
            },
            "depth of S/I(C_{n,m}) is at most ceil((n-1)/3)+(ceil(m/3)-1)ceil(n/3), or ceil(n/3)ceil(m/3) when 3 | m",
        )),
        (C, Quotient, Sdepth) => Some(make(
            Form::UpperBound {
                value: grid_product_bound(n, m),
            },
            "sdepth of S/I(C_{n,m}) is at most ceil(n/3)ceil(m/3)",
        )),
        (Pstar, Quotient, _) => Some(make(
            Form::Exact { value: ceil3(n + 1) },
            "depth and sdepth of the quotient by I(P*_{n,3}) equal ceil((n+1)/3)",
        )),
        (Pstarstar, Quotient, _) => Some(make(
            Form::Exact { value: ceil3(n + 2) },
            "depth and sdepth of the quotient by I(P**_{n,3}) equal ceil((n+2)/3)",
        )),
        (Cdiamond, Quotient, Sdepth) if n % 3 == 0 => Some(make(
            Form::Exact { value: ceil3(n - 2) },
            "sdepth of the quotient by I(C◇_{n,3}) equals ceil((n-2)/3) when 3 | n",
        )),
        (Cdiamond, Quotient, Sdepth) => Some(make(
            Form::Range {
                lo: ceil3(n - 2),
                hi: ceil3(n),
            },
            "sdepth of the quotient by I(C◇_{n,3}) lies in [ceil((n-2)/3), ceil(n/3)]",
        )),
        (P, Ideal, Sdepth) if m <= 3 => Some(make(
            Form::StrictLowerBound { value: ceil3(n) },
            "sdepth(I(P_{n,m})) > sdepth(S/I(P_{n,m})) = ceil(n/3) for m <= 3",
        )),
        (C, Ideal, Sdepth) if m == 2 || m == 3 => Some(make(
            Form::LowerBound { value: ceil3(n + 2) },
            "sdepth(I(C_{n,m})) >= ceil((n+2)/3) for m = 2, 3",
        )),
        (C, Pair, Sdepth) if m == 2 || m == 3 => Some(make(
            Form::LowerBound { value: ceil3(n + 2) },
            "sdepth(I(C_{n,m})/I(P_{n,m})) >= ceil((n+2)/3) for m = 2, 3",
        )),
        (_, Ideal, Depth) => {
            let q = expected_value(spec, Quotient, Depth)?;
            let shift = |v: usize| v + 1;
            let form = match q.form {
                Form::Exact { value } => Form::Exact { value: shift(value) },
                Form::Range { lo, hi } => Form::Range {
                    lo: shift(lo),
                    hi: shift(hi),
                },
                Form::UpperBound { value } => Form::UpperBound {
                    value: shift(value),
                },
                Form::LowerBound { value } => Form::LowerBound {
                    value: shift(value),
                },
                Form::StrictLowerBound { value } => Form::StrictLowerBound {
                    value: shift(value),
                },
                Form::Evidence { value } => Form::Evidence {
                    value: shift(value),
                },
            };
            Some(Expectation {
                form,
                module: Ideal,
                claim: format!("depth(I) = depth(S/I) + 1, with {}", q.claim),
                ..q
            })
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> FamilySpec {
        s.parse().unwrap()
    }

    #[test]
    fn documented_examples() {
        let e = expected_value(&spec("P:5,2"), ModuleKind::Quotient, Quantity::Depth).unwrap();
        assert_eq!(e.form, Form::Exact { value: 2 });
        let e = expected_value(&spec("C:4,3"), ModuleKind::Quotient, Quantity::Depth).unwrap();
        assert_eq!(e.form, Form::Range { lo: 1, hi: 2 });
        let e = expected_value(&spec("C:3,2"), ModuleKind::Quotient, Quantity::Sdepth).unwrap();
        assert_eq!(e.form, Form::Exact { value: 1 });
        let e = expected_value(&spec("P:5,2"), ModuleKind::Ideal, Quantity::Depth).unwrap();
        assert_eq!(e.form, Form::Exact { value: 3 });
        let e = expected_value(&spec("C:5,2"), ModuleKind::Ideal, Quantity::Depth).unwrap();
        assert_eq!(e.form, Form::Exact { value: 3 });
        assert!(expected_value(&spec("Pstar:3"), ModuleKind::Pair, Quantity::Sdepth).is_none());
    }

    #[test]
    fn judging() {
        assert_eq!(Form::Exact { value: 2 }.judge(2, 2), Verdict::Pass);
        assert_eq!(Form::Exact { value: 2 }.judge(1, 3), Verdict::Inconclusive);
        assert_eq!(Form::Exact { value: 2 }.judge(3, 5), Verdict::Fail);
        assert_eq!(Form::Range { lo: 1, hi: 2 }.judge(2, 2), Verdict::Pass);
        assert_eq!(
            Form::StrictLowerBound { value: 2 }.judge(2, 9),
            Verdict::Inconclusive
        );
        assert_eq!(
            Form::StrictLowerBound { value: 2 }.judge(3, 9),
            Verdict::Pass
        );
        assert_eq!(
            Form::StrictLowerBound { value: 2 }.judge(1, 2),
            Verdict::Fail
        );
        assert_eq!(Form::UpperBound { value: 4 }.judge(5, 5), Verdict::Fail);
        assert_eq!(Form::Evidence { value: 4 }.judge(5, 5), Verdict::Pass);
    }

    #[test]
    fn bounds_arithmetic() {
        assert_eq!(grid_product_bound(4, 4), 4);
        assert_eq!(cycle_depth_bound(4, 4), 1 + 2);
        assert_eq!(cycle_depth_bound(5, 2), 2);
        assert_eq!(cycle_depth_bound(4, 3), 2);
    }
}
