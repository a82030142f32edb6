//! Independent reference implementations used as test oracles. Nothing here
//! calls into the library's algorithms; only its plain data types.

#![allow(dead_code)]

use std::collections::BTreeMap;

use sdepth_core::ideal::{ModuleDescriptor, SquarefreeIdeal};
use sdepth_core::Support;

/// Rank of a dense matrix over GF(p) by textbook row reduction.
pub fn rank_mod_p(mut rows: Vec<Vec<i64>>, p: i64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    for row in rows.iter_mut() {
        for x in row.iter_mut() {
            *x = x.rem_euclid(p);
        }
    }
    let inv = |a: i64| {
        // Fermat: a^(p-2).
        let (mut base, mut e, mut acc) = (a, p - 2, 1i64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    };
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let f = inv(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = *x * f % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let c = rows[r][col];
                let pivot_row = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot_row) {
                    *x = (*x - c * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Multigraded Betti numbers of `S/I` from the Taylor resolution: in
/// multidegree `σ`, `Tor_i` is the homology of the complex spanned by
/// the `i`-subsets of generators whose union is `σ`, with the face
/// differential restricted to terms that keep the union.
pub fn taylor_betti(ideal: &SquarefreeIdeal, p: i64) -> BTreeMap<(usize, Support), u64> {
    let gens = ideal.gens();
    let r = gens.len();
    assert!(
        r <= 12,
        "Taylor oracle is exponential in the generator count"
    );
    let union_of = |mask: u32| {
        (0..r)
            .filter(|&j| mask >> j & 1 == 1)
            .fold(Support::EMPTY, |a, j| a.union(gens[j]))
    };
    let mut by_degree: BTreeMap<Support, Vec<Vec<u32>>> = BTreeMap::new();
    for mask in 0u32..(1 << r) {
        let size = mask.count_ones() as usize;
        let cells = by_degree.entry(union_of(mask)).or_default();
        if cells.len() <= size {
            cells.resize(size + 1, Vec::new());
        }
        cells[size].push(mask);
    }
    let mut out = BTreeMap::new();
    for (sigma, cells) in by_degree {
        let top = cells.len();
        let boundary_rank = |i: usize| -> usize {
            // d_i : C_i -> C_{i-1}
            if i == 0 || i >= top || cells[i].is_empty() || cells[i - 1].is_empty() {
                return 0;
            }
            let index: BTreeMap<u32, usize> = cells[i - 1]
                .iter()
                .enumerate()
                .map(|(k, &m)| (m, k))
                .collect();
            let rows: Vec<Vec<i64>> = cells[i]
                .iter()
                .map(|&mask| {
                    let mut row = vec![0i64; cells[i - 1].len()];
                    let mut sign = 1;
                    for j in 0..r {
                        if mask >> j & 1 == 1 {
                            let face = mask & !(1 << j);
                            if let Some(&k) = index.get(&face) {
                                row[k] = sign;
                            }
                            sign = -sign;
                        }
                    }
                    row
                })
                .collect();
            rank_mod_p(rows, p)
        };
        for (i, level) in cells.iter().enumerate() {
            let dim = level.len();
            let b = dim - boundary_rank(i) - boundary_rank(i + 1);
            if b > 0 {
                out.insert((i, sigma), b as u64);
            }
        }
    }
    out
}

/// Largest possible smallest-top over all interval partitions of the
/// characteristic poset, by exhaustive search. The uncovered element of
/// least cardinality must be the bottom of its interval, which makes the
/// recursion complete.
pub fn brute_force_sdepth(d: &ModuleDescriptor) -> usize {
    let n = d.ambient();
    assert!(n <= 5, "brute force is only meant for tiny rings");
    let elems: Vec<Support> = (0u64..1 << n)
        .map(Support::from_bits)
        .filter(|&s| d.contains(s))
        .collect();
    let mut order = elems.clone();
    order.sort_by_key(|s| (s.len(), s.bits()));
    let mut best = 0;
    let mut covered = std::collections::BTreeSet::new();
    fn go(
        order: &[Support],
        elems: &[Support],
        covered: &mut std::collections::BTreeSet<u64>,
        current_min: usize,
        best: &mut usize,
    ) {
        if current_min <= *best {
            return;
        }
        let Some(&a) = order.iter().find(|s| !covered.contains(&s.bits())) else {
            *best = current_min;
            return;
        };
        for &c in elems {
            if !a.is_subset(c) {
                continue;
            }
            let free = c.difference(a);
            let members: Vec<Support> = (0u64..1 << free.len())
                .map(|m| {
                    let mut s = a;
                    for (k, v) in free.iter().enumerate() {
                        if m >> k & 1 == 1 {
                            s = s.with(v);
                        }
                    }
                    s
                })
                .collect();
            if members
                .iter()
                .all(|s| elems.contains(s) && !covered.contains(&s.bits()))
            {
                for s in &members {
                    covered.insert(s.bits());
                }
                go(order, elems, covered, current_min.min(c.len()), best);
                for s in &members {
                    covered.remove(&s.bits());
                }
            }
        }
    }
    if elems.is_empty() {
        return n;
    }
    go(&order, &elems, &mut covered, usize::MAX, &mut best);
    best
}

/// All antichains of nonempty subsets of `{0, .., n-1}`, the empty one
/// included.
pub fn antichains(n: usize) -> Vec<Vec<Support>> {
    let subsets: Vec<Support> = (1u64..1 << n).map(Support::from_bits).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn go(idx: usize, subsets: &[Support], chosen: &mut Vec<Support>, out: &mut Vec<Vec<Support>>) {
        if idx == subsets.len() {
            out.push(chosen.clone());
            return;
        }
        go(idx + 1, subsets, chosen, out);
        let s = subsets[idx];
        if chosen.iter().all(|&c| !c.is_subset(s) && !s.is_subset(c)) {
            chosen.push(s);
            go(idx + 1, subsets, chosen, out);
            chosen.pop();
        }
    }
    go(0, &subsets, &mut chosen, &mut out);
    out
}

/// Faces of the complex generated by `facets`.
pub fn faces_from_facets(facets: &[Support]) -> Vec<Support> {
    let mut all = std::collections::BTreeSet::new();
    for f in facets {
        let bits = f.bits();
        let mut sub = bits;
        loop {
            all.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & bits;
        }
    }
    all.into_iter().map(Support::from_bits).collect()
}

/// `Σ_{faces F} (-1)^{|F|-1}`, the empty face included.
pub fn reduced_euler_characteristic(faces: &[Support]) -> i64 {
    faces
        .iter()
        .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
        .sum()
}

pub fn ideal_from(n: usize, gens: &[Support]) -> SquarefreeIdeal {
    SquarefreeIdeal::new(n, gens.iter().copied()).expect("valid generators")
}

/// Criterion-sized sweep: exact Stanley depth of every quotient and ideal
/// over four variables against [`brute_force_sdepth`]. Returns the number of
/// modules checked.
pub fn sweep_sdepth_against_brute_force(n: usize) -> Result<usize, String> {
    use sdepth_core::stanley::sdepth_exact;
    use std::time::Duration;
    let mut checked = 0;
    for gens in antichains(n) {
        let ideal = ideal_from(n, &gens);
        let mut modules = vec![ModuleDescriptor::Quotient(ideal.clone())];
        if !ideal.is_zero() {
            modules.push(ModuleDescriptor::Ideal(ideal));
        }
        for d in modules {
            let r = sdepth_exact(&d, Duration::from_secs(60)).map_err(|e| e.to_string())?;
            let expected = brute_force_sdepth(&d);
            if r.value() != Some(expected) {
                return Err(format!(
                    "{:?} {:?}: search gave [{}, {}], brute force {expected}",
                    d.kind(),
                    d.inner(),
                    r.lower,
                    r.upper
                ));
            }
            r.witness.verify_at(r.lower).map_err(|e| e.to_string())?;
            checked += 1;
        }
    }
    Ok(checked)
}

/// Hochster's formula against the Taylor oracle on every ideal over `n`
/// variables with at most `max_gens` generators.
pub fn sweep_betti_against_taylor(n: usize, max_gens: usize, p: u32) -> Result<usize, String> {
    use sdepth_core::homological::{hochster_betti, FieldChar};
    let field = FieldChar::new(p).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for gens in antichains(n) {
        if gens.is_empty() || gens.len() > max_gens {
            continue;
        }
        let ideal = ideal_from(n, &gens);
        let table = hochster_betti(&ideal, field).map_err(|e| e.to_string())?;
        let ours: BTreeMap<(usize, Support), u64> =
            table.entries().map(|(i, s, r)| ((i, s), r)).collect();
        let oracle = taylor_betti(&ideal, p as i64);
        if ours != oracle {
            return Err(format!("{ideal:?} over GF({p}): {ours:?} vs {oracle:?}"));
        }
        checked += 1;
    }
    Ok(checked)
}

/// Seeded random complexes: reduced homology must satisfy the Euler
/// relation.
pub fn sweep_euler_characteristic(
    count: usize,
    max_vertices: usize,
    seed: u64,
) -> Result<usize, String> {
    use rand::{Rng, SeedableRng};
    use sdepth_core::homological::{reduced_homology_dims, FieldChar};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for case in 0..count {
        let n = rng.gen_range(1..=max_vertices);
        let facet_count = rng.gen_range(1..=6);
        let facets: Vec<Support> = (0..facet_count)
            .map(|_| {
                let bits = rng.gen_range(1u64..1 << n);
                // Keep facets small so complexes stay varied.
                let mut s = Support::from_bits(bits);
                while s.len() > 5 {
                    s = s.without(s.first().expect("nonempty"));
                }
                s
            })
            .collect();
        let faces = faces_from_facets(&facets);
        for p in [2u32, 3] {
            let dims = reduced_homology_dims(&faces, FieldChar::new(p).unwrap())
                .map_err(|e| e.to_string())?;
            // dims[t] is the dimension of reduced homology in degree t - 1.
            let alternating: i64 = dims
                .iter()
                .enumerate()
                .map(|(t, &d)| if t % 2 == 1 { d as i64 } else { -(d as i64) })
                .sum();
            let chi = reduced_euler_characteristic(&faces);
            if alternating != chi {
                return Err(format!(
                    "case {case}, facets {facets:?}, GF({p}): homology {dims:?} gives {alternating}, faces give {chi}"
                ));
            }
        }
    }
    Ok(count)
}
