//! Squarefree monomial ideals and the graded modules built from them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Family, FamilySpec, Graph, VarIndexer};
use crate::support::{Support, MAX_VARS};

/// Removes every support that contains another one, then sorts into
/// generator normal order (cardinality, then lex).
pub fn minimalize(gens: &[Support]) -> Vec<Support> {
    let mut sorted = gens.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut kept: Vec<Support> = Vec::with_capacity(sorted.len());
    for g in sorted {
        if !kept.iter().any(|h| h.is_subset(g)) {
            kept.push(g);
        }
    }
    kept
}

/// A squarefree monomial ideal, stored by its minimal generators.
///
/// The unit ideal is unrepresentable; the zero ideal (no generators) is a
/// valid value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SquarefreeIdeal {
    ambient: usize,
    gens: Vec<Support>,
}

impl SquarefreeIdeal {
    pub fn new(ambient: usize, gens: impl IntoIterator<Item = Support>) -> Result<Self> {
        if ambient > MAX_VARS {
            return Err(Error::TooManyVariables {
                requested: ambient,
                max: MAX_VARS,
            });
        }
        let gens: Vec<Support> = gens.into_iter().collect();
        for g in &gens {
            if !g.fits(ambient) {
                return Err(Error::WidthMismatch {
                    support: g.to_string(),
                    ambient,
                });
            }
            if g.is_empty() {
                return Err(Error::UnitIdeal);
            }
        }
        Ok(SquarefreeIdeal {
            ambient,
            gens: minimalize(&gens),
        })
    }

    pub fn zero(ambient: usize) -> Self {
        assert!(ambient <= MAX_VARS);
        SquarefreeIdeal {
            ambient,
            gens: Vec::new(),
        }
    }

    /// Build from index lists, mostly for tests and fixtures.
    pub fn from_index_lists(ambient: usize, lists: &[&[usize]]) -> Result<Self> {
        Self::new(
            ambient,
            lists
                .iter()
                .map(|l| Support::from_indices(l.iter().copied())),
        )
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn gens(&self) -> &[Support] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Variables appearing in some generator.
    pub fn variables(&self) -> Support {
        self.gens.iter().fold(Support::EMPTY, |a, &g| a.union(g))
    }

    /// Membership of the squarefree monomial with support `s`.
    #[inline]
    pub fn contains(&self, s: Support) -> bool {
        self.gens.iter().any(|g| g.is_subset(s))
    }

    fn check_width(&self, s: Support) -> Result<()> {
        if s.fits(self.ambient) {
            Ok(())
        } else {
            Err(Error::WidthMismatch {
                support: s.to_string(),
                ambient: self.ambient,
            })
        }
    }

    /// `(I : u)` for a squarefree monomial `u` outside `I`.
    pub fn colon(&self, u: Support) -> Result<Self> {
        self.check_width(u)?;
        if self.contains(u) {
            return Err(Error::UnitIdeal);
        }
        let gens: Vec<Support> = self.gens.iter().map(|g| g.difference(u)).collect();
        Ok(SquarefreeIdeal {
            ambient: self.ambient,
            gens: minimalize(&gens),
        })
    }

    /// `I + (u)`.
    pub fn add(&self, u: Support) -> Result<Self> {
        self.check_width(u)?;
        if u.is_empty() {
            return Err(Error::UnitIdeal);
        }
        let mut gens = self.gens.clone();
        gens.push(u);
        Ok(SquarefreeIdeal {
            ambient: self.ambient,
            gens: minimalize(&gens),
        })
    }

    pub fn sum(&self, other: &SquarefreeIdeal) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Ok(SquarefreeIdeal {
            ambient: self.ambient,
            gens: minimalize(&gens),
        })
    }

    /// `I ∩ K[vars]`, kept in the same ambient ring.
    pub fn restrict(&self, vars: Support) -> Self {
        SquarefreeIdeal {
            ambient: self.ambient,
            gens: self
                .gens
                .iter()
                .copied()
                .filter(|g| g.is_subset(vars))
                .collect(),
        }
    }

    /// The two pieces of `I = (I ∩ K[x_v̂]) ⊕ x_v (I : x_v)`.
    pub fn split_by_variable(&self, v: usize) -> Result<(Self, Self)> {
        if v >= self.ambient {
            return Err(Error::WidthMismatch {
                support: format!("{{{v}}}"),
                ambient: self.ambient,
            });
        }
        let x = Support::singleton(v);
        let colon = self.colon(x)?;
        let rest = self.restrict(Support::full(self.ambient).without(v));
        Ok((rest, colon))
    }

    /// Rename variable `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.ambient;
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::NotBijective(n));
        }
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::NotBijective(n));
            }
            seen[p] = true;
        }
        let gens: Vec<Support> = self.gens.iter().map(|g| g.map(perm)).collect();
        Ok(SquarefreeIdeal {
            ambient: n,
            gens: minimalize(&gens),
        })
    }

    /// Same generators in a ring with `extra` more (unused) variables.
    pub fn extend_ambient(&self, extra: usize) -> Result<Self> {
        SquarefreeIdeal::new(self.ambient + extra, self.gens.iter().copied())
    }

    /// Same generators in a ring of `ambient` variables.
    pub fn with_ambient(&self, ambient: usize) -> Result<Self> {
        SquarefreeIdeal::new(ambient, self.gens.iter().copied())
    }

    /// Re-index onto `K[vars]`: variable `vars[t]` (ascending) becomes `t`.
    /// Generators not inside `vars` are an error.
    pub fn compact(&self, vars: Support) -> Result<(Self, Vec<usize>)> {
        let map: Vec<usize> = vars.to_vec();
        let mut pos = vec![usize::MAX; self.ambient.max(map.last().map_or(0, |&v| v + 1))];
        for (t, &v) in map.iter().enumerate() {
            pos[v] = t;
        }
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            if !g.is_subset(vars) {
                return Err(Error::InvalidModule(format!(
                    "generator {g} uses variables outside {vars}"
                )));
            }
            gens.push(g.iter().map(|v| pos[v]).collect::<Support>());
        }
        Ok((SquarefreeIdeal::new(map.len(), gens)?, map))
    }

    /// Inverse of [`compact`](Self::compact): embed into `ambient` variables
    /// via `map[t]`.
    pub fn embed(&self, map: &[usize], ambient: usize) -> Result<Self> {
        SquarefreeIdeal::new(ambient, self.gens.iter().map(|g| g.map(map)))
    }
}

impl fmt::Debug for SquarefreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal[{}](", self.ambient)?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Which graded module is under study.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    Ideal,
    Quotient,
    Pair,
}

impl ModuleKind {
    pub fn name(self) -> &'static str {
        match self {
            ModuleKind::Ideal => "ideal",
            ModuleKind::Quotient => "quotient",
            ModuleKind::Pair => "pair",
        }
    }
}

impl std::str::FromStr for ModuleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ideal" => Ok(ModuleKind::Ideal),
            "quotient" => Ok(ModuleKind::Quotient),
            "pair" => Ok(ModuleKind::Pair),
            _ => Err(Error::Parse(format!("unknown module kind {s:?}"))),
        }
    }
}

/// `I`, `S/I` or `J/I` with `I ⊊ J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ModuleDescriptor {
    Ideal(SquarefreeIdeal),
    Quotient(SquarefreeIdeal),
    Pair {
        inner: SquarefreeIdeal,
        outer: SquarefreeIdeal,
    },
}

impl ModuleDescriptor {
    /// `J/I`; requires `I ⊆ J`, `I ≠ J` and a shared ambient ring.
    pub fn pair(inner: SquarefreeIdeal, outer: SquarefreeIdeal) -> Result<Self> {
        if inner.ambient() != outer.ambient() {
            return Err(Error::AmbientMismatch(inner.ambient(), outer.ambient()));
        }
        if let Some(g) = inner.gens().iter().find(|&&g| !outer.contains(g)) {
            return Err(Error::InvalidModule(format!(
                "generator {g} of the inner ideal is not in the outer ideal"
            )));
        }
        if inner == outer {
            return Err(Error::InvalidModule(
                "J/I with I = J is the zero module".into(),
            ));
        }
        Ok(ModuleDescriptor::Pair { inner, outer })
    }

    pub fn kind(&self) -> ModuleKind {
        match self {
            ModuleDescriptor::Ideal(_) => ModuleKind::Ideal,
            ModuleDescriptor::Quotient(_) => ModuleKind::Quotient,
            ModuleDescriptor::Pair { .. } => ModuleKind::Pair,
        }
    }

    pub fn ambient(&self) -> usize {
        match self {
            ModuleDescriptor::Ideal(i) | ModuleDescriptor::Quotient(i) => i.ambient(),
            ModuleDescriptor::Pair { inner, .. } => inner.ambient(),
        }
    }

    /// The ideal `I` (the numerator for `Ideal`, the modulus otherwise).
    pub fn inner(&self) -> &SquarefreeIdeal {
        match self {
            ModuleDescriptor::Ideal(i) | ModuleDescriptor::Quotient(i) => i,
            ModuleDescriptor::Pair { inner, .. } => inner,
        }
    }

    pub fn outer(&self) -> Option<&SquarefreeIdeal> {
        match self {
            ModuleDescriptor::Pair { outer, .. } => Some(outer),
            _ => None,
        }
    }

    /// Whether monomials with support `s` lie in the module.
    #[inline]
    pub fn contains(&self, s: Support) -> bool {
        match self {
            ModuleDescriptor::Ideal(i) => i.contains(s),
            ModuleDescriptor::Quotient(i) => !i.contains(s),
            ModuleDescriptor::Pair { inner, outer } => outer.contains(s) && !inner.contains(s),
        }
    }

    /// Variables that occur in some generator of the ideals involved.
    pub fn variables(&self) -> Support {
        match self {
            ModuleDescriptor::Ideal(i) | ModuleDescriptor::Quotient(i) => i.variables(),
            ModuleDescriptor::Pair { inner, outer } => inner.variables().union(outer.variables()),
        }
    }
}

/// `I(G)`; errors on an edgeless graph.
pub fn edge_ideal(g: &Graph) -> Result<SquarefreeIdeal> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    SquarefreeIdeal::new(
        g.vertex_count(),
        edges
            .into_iter()
            .map(|(u, v)| Support::singleton(u).with(v)),
    )
}

/// `I(G)` for a family member, built from its graph.
pub fn family_edge_ideal(spec: &FamilySpec) -> Result<SquarefreeIdeal> {
    edge_ideal(&crate::graph::build_family(spec)?.graph)
}

/// The module of `kind` attached to `spec`. A pair is `I(C_{n,m}) / I(P_{n,m})`
/// and needs a cycle spec.
pub fn family_module(spec: &FamilySpec, kind: ModuleKind) -> Result<ModuleDescriptor> {
    match kind {
        ModuleKind::Ideal => Ok(ModuleDescriptor::Ideal(family_edge_ideal(spec)?)),
        ModuleKind::Quotient => Ok(ModuleDescriptor::Quotient(family_edge_ideal(spec)?)),
        ModuleKind::Pair => {
            if spec.family != Family::C {
                return Err(Error::InvalidModule(format!(
                    "pair modules compare C with P of the same shape; got {spec}"
                )));
            }
            let outer = family_edge_ideal(spec)?;
            let inner = family_edge_ideal(&FamilySpec::p(spec.n(), spec.m())?)?;
            ModuleDescriptor::pair(inner, outer)
        }
    }
}

/// Minimal generators of `I(P_{n,m})` or `I(C_{n,m})` written out from the
/// closed-form generator lists rather than from the graph.
pub fn generators_formula(spec: &FamilySpec) -> Result<SquarefreeIdeal> {
    spec.validate()?;
    let (n, m) = (spec.n(), spec.m());
    let x = |i: usize, j: usize| VarIndexer::flat(n, i, j);
    let mono = |a: usize, b: usize| Support::singleton(a).with(b);
    let mut gens = Vec::new();
    match spec.family {
        Family::P | Family::C => {
            for i in 1..n {
                for j in 1..m {
                    gens.push(mono(x(i, j), x(i, j + 1)));
                    gens.push(mono(x(i, j), x(i + 1, j + 1)));
                    gens.push(mono(x(i, j), x(i + 1, j)));
                    gens.push(mono(x(i + 1, j), x(i, j + 1)));
                }
                gens.push(mono(x(i, m), x(i + 1, m)));
            }
            // The last column's vertical edges; inside the i-loop above they
            // would be missed for n = 1.
            for j in 1..m {
                gens.push(mono(x(n, j), x(n, j + 1)));
            }
            if spec.family == Family::C {
                for j in 1..m {
                    gens.push(mono(x(1, j), x(n, j + 1)));
                    gens.push(mono(x(1, j), x(n, j)));
                    gens.push(mono(x(1, j + 1), x(n, j)));
                }
                gens.push(mono(x(1, m), x(n, m)));
            }
        }
        other => {
            return Err(Error::InvalidShape(format!(
                "no generator formula for family {}",
                other.name()
            )))
        }
    }
    SquarefreeIdeal::new(n * m, gens)
}

/// `L_l = I(P'_{l-1}) + I(P''_{l-1}) + J_l` in `S_{n,3}`, for `3 <= l <= n-2`.
pub fn build_l(n: usize, l: usize) -> Result<SquarefreeIdeal> {
    if l < 3 || n < 2 || l > n - 2 {
        return Err(Error::InvalidShape(format!(
            "L_l needs 3 <= l <= n - 2 (n = {n}, l = {l})"
        )));
    }
    if 3 * n > MAX_VARS {
        return Err(Error::TooManyVariables {
            requested: 3 * n,
            max: MAX_VARS,
        });
    }
    let x = |i: usize| VarIndexer::flat(n, i, 1);
    let y = |i: usize| VarIndexer::flat(n, i, 2);
    let z = |i: usize| VarIndexer::flat(n, i, 3);
    let mut gens: Vec<Support> = [
        x(n - l),
        z(n - l),
        x(n - l + 1),
        y(n - l - 1),
        z(n - l + 1),
        x(n - l - 1),
        z(n - l - 1),
    ]
    .into_iter()
    .map(Support::singleton)
    .collect();
    for i in (n - l + 2)..n {
        gens.push(Support::singleton(x(i)).with(x(i + 1)));
        gens.push(Support::singleton(z(i)).with(z(i + 1)));
    }
    SquarefreeIdeal::new(3 * n, gens)
}

/// Variables `D_l ∪ D'_l ∪ D''_l` that `L_l` lives on.
pub fn l_variables(n: usize, l: usize) -> Support {
    let x = |i: usize| VarIndexer::flat(n, i, 1);
    let y = |i: usize| VarIndexer::flat(n, i, 2);
    let z = |i: usize| VarIndexer::flat(n, i, 3);
    let mut s = Support::EMPTY;
    for i in (n - l + 2)..=n {
        s = s.with(x(i)).with(z(i));
    }
    for v in [
        x(n - l),
        z(n - l),
        x(n - l + 1),
        y(n - l - 1),
        z(n - l + 1),
        x(n - l - 1),
        z(n - l - 1),
    ] {
        s = s.with(v);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_cycle, build_family, build_path};

    fn s(ix: &[usize]) -> Support {
        Support::from_indices(ix.iter().copied())
    }

    #[test]
    fn minimalize_basics() {
        assert_eq!(minimalize(&[s(&[0]), s(&[0, 1])]), vec![s(&[0])]);
        assert!(minimalize(&[]).is_empty());
    }

    #[test]
    fn edge_ideals_of_small_graphs() {
        let i = edge_ideal(&build_path(2).unwrap()).unwrap();
        assert_eq!(i.gens(), &[s(&[0, 1])]);
        let c3 = edge_ideal(&build_cycle(3).unwrap()).unwrap();
        assert_eq!(c3.gens(), &[s(&[0, 1]), s(&[0, 2]), s(&[1, 2])]);
        assert!(matches!(
            edge_ideal(&build_path(1).unwrap()),
            Err(Error::ZeroIdeal)
        ));
    }

    #[test]
    fn p_n2_matches_displayed_list() {
        for n in 2..=6 {
            let x = |i: usize| i - 1;
            let y = |i: usize| n + i - 1;
            let mut gens = Vec::new();
            for i in 1..n {
                gens.push(s(&[x(i), y(i)]));
                gens.push(s(&[x(i), y(i + 1)]));
                gens.push(s(&[x(i), x(i + 1)]));
                gens.push(s(&[x(i + 1), y(i)]));
                gens.push(s(&[y(i), y(i + 1)]));
            }
            gens.push(s(&[x(n), y(n)]));
            let displayed = SquarefreeIdeal::new(2 * n, gens).unwrap();
            let spec = FamilySpec::p(n, 2).unwrap();
            let g = build_family(&spec).unwrap();
            assert_eq!(edge_ideal(&g.graph).unwrap(), displayed);
            assert_eq!(generators_formula(&spec).unwrap(), displayed);
        }
    }

    #[test]
    fn cycle_formula_adds_wrap_generators() {
        let c = generators_formula(&FamilySpec::c(3, 2).unwrap()).unwrap();
        let p = generators_formula(&FamilySpec::p(3, 2).unwrap()).unwrap();
        // x1y3, x1x3, y1x3, y1y3 with x_i = i-1, y_i = 3+i-1
        let extra = [s(&[0, 5]), s(&[0, 2]), s(&[3, 2]), s(&[3, 5])];
        let mut expected = p.gens().to_vec();
        expected.extend(extra);
        assert_eq!(c, SquarefreeIdeal::new(6, expected).unwrap());
        assert_eq!(
            generators_formula(&FamilySpec::p(2, 1).unwrap())
                .unwrap()
                .gens(),
            &[s(&[0, 1])]
        );
        assert_eq!(
            generators_formula(&FamilySpec::p(4, 4).unwrap())
                .unwrap()
                .gens()
                .len(),
            4 * 3 * 3 + 3 + 3
        );
        assert!(generators_formula(&FamilySpec::pstar(3).unwrap()).is_err());
    }

    #[test]
    fn formula_handles_single_column() {
        let g = generators_formula(&FamilySpec::p(1, 4).unwrap()).unwrap();
        assert_eq!(g.gens().len(), 3);
    }

    #[test]
    fn membership_and_colon() {
        let i = SquarefreeIdeal::from_index_lists(3, &[&[0, 1]]).unwrap();
        assert!(i.contains(s(&[0, 1, 2])));
        assert!(!i.contains(s(&[0])));
        let c = i.colon(s(&[0])).unwrap();
        assert_eq!(c.gens(), &[s(&[1])]);
        assert!(matches!(i.colon(s(&[0, 1])), Err(Error::UnitIdeal)));
    }

    #[test]
    fn add_and_restrict() {
        let i = SquarefreeIdeal::from_index_lists(2, &[&[0, 1]]).unwrap();
        let a = i.add(s(&[0])).unwrap();
        assert_eq!(a.gens(), &[s(&[0])]);
        assert_eq!(a.add(s(&[0])).unwrap(), a);
        let j = SquarefreeIdeal::from_index_lists(3, &[&[0, 1], &[1, 2]]).unwrap();
        assert_eq!(j.restrict(s(&[0, 1])).gens(), &[s(&[0, 1])]);
    }

    #[test]
    fn split_by_variable_pieces() {
        let i = SquarefreeIdeal::from_index_lists(2, &[&[0, 1]]).unwrap();
        let (rest, colon) = i.split_by_variable(1).unwrap();
        assert!(rest.is_zero());
        assert_eq!(colon.gens(), &[s(&[0])]);
        let j = SquarefreeIdeal::from_index_lists(2, &[&[1]]).unwrap();
        assert!(j.split_by_variable(1).is_err());
    }

    #[test]
    fn relabel_checks_bijection() {
        let i = SquarefreeIdeal::from_index_lists(3, &[&[0, 1]]).unwrap();
        assert_eq!(i.relabel(&[0, 1, 2]).unwrap(), i);
        assert!(matches!(i.relabel(&[0, 0, 2]), Err(Error::NotBijective(3))));
        assert!(i.relabel(&[0, 1]).is_err());
        assert_eq!(i.relabel(&[2, 1, 0]).unwrap().gens(), &[s(&[1, 2])]);
    }

    #[test]
    fn swap_relabeling_of_grid() {
        // (i, j) -> (j, i): flat (j-1)*3 + (i-1) -> (i-1)*2 + (j-1)
        let (n, m) = (3, 2);
        let mut perm = vec![0; n * m];
        for j in 1..=m {
            for i in 1..=n {
                perm[VarIndexer::flat(n, i, j)] = VarIndexer::flat(m, j, i);
            }
        }
        let a = generators_formula(&FamilySpec::p(3, 2).unwrap()).unwrap();
        let b = generators_formula(&FamilySpec::p(2, 3).unwrap()).unwrap();
        assert_eq!(a.relabel(&perm).unwrap(), b);
    }

    #[test]
    fn l_ideal_shapes() {
        // n = 5, l = 3: J_3 = (x2, z2, x3, y1, z3, x1, z1), P' has one vertex pair x4x5
        let n = 5;
        let l = build_l(n, 3).unwrap();
        let x = |i: usize| VarIndexer::flat(n, i, 1);
        let y = |i: usize| VarIndexer::flat(n, i, 2);
        let z = |i: usize| VarIndexer::flat(n, i, 3);
        let linear: Vec<Support> = l.gens().iter().copied().filter(|g| g.len() == 1).collect();
        let expected =
            minimalize(&[x(2), z(2), x(3), y(1), z(3), x(1), z(1)].map(Support::singleton));
        assert_eq!(linear, expected);
        assert_eq!(l.gens().len(), 7 + 2);
        let l6 = build_l(6, 3).unwrap();
        let xx = |i: usize| VarIndexer::flat(6, i, 1);
        assert!(l6.gens().contains(&s(&[xx(5), xx(6)])));
        for n in 5..=9 {
            for l in 3..=n - 2 {
                let ideal = build_l(n, l).unwrap();
                assert_eq!(ideal.gens().len(), 7 + 2 * (l - 2));
                assert!(ideal.variables().is_subset(l_variables(n, l)));
                assert_eq!(l_variables(n, l).len(), 2 * (l - 1) + 7);
            }
        }
        assert!(build_l(5, 4).is_err());
        assert!(build_l(6, 2).is_err());
    }

    #[test]
    fn pair_validation() {
        let p = generators_formula(&FamilySpec::p(3, 2).unwrap()).unwrap();
        let c = generators_formula(&FamilySpec::c(3, 2).unwrap()).unwrap();
        assert!(ModuleDescriptor::pair(p.clone(), c.clone()).is_ok());
        assert!(ModuleDescriptor::pair(c.clone(), p.clone()).is_err());
        assert!(ModuleDescriptor::pair(p.clone(), p).is_err());
    }

    #[test]
    fn compact_round_trip() {
        let i = SquarefreeIdeal::from_index_lists(6, &[&[1, 4], &[4, 5]]).unwrap();
        let vars = s(&[1, 4, 5]);
        let (c, map) = i.compact(vars).unwrap();
        assert_eq!(c.ambient(), 3);
        assert_eq!(c.embed(&map, 6).unwrap(), i);
        assert!(i.compact(s(&[1, 4])).is_err());
    }
}
