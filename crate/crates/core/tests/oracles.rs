mod common;

use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sdepth_core::graph::{build_family, FamilySpec};
use sdepth_core::homological::{depth_quotient, hochster_betti, FieldChar};
use sdepth_core::ideal::{edge_ideal, ModuleDescriptor, SquarefreeIdeal};
use sdepth_core::stanley::{
    partition_to_decomposition, sdepth_exact, verify_decomposition, CharPoset,
};
use sdepth_core::Support;

use common::*;

fn random_ideal(rng: &mut ChaCha8Rng, n: usize, max_gens: usize) -> SquarefreeIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<Support> = (0..count)
        .map(|_| Support::from_bits(rng.gen_range(1u64..1 << n)))
        .collect();
    SquarefreeIdeal::new(n, gens).unwrap()
}

#[test]
fn taylor_agrees_on_random_six_variable_ideals() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let ideal = random_ideal(&mut rng, 6, 6);
        for p in [2u32, 3, 5] {
            let table = hochster_betti(&ideal, FieldChar::new(p).unwrap()).unwrap();
            let ours: std::collections::BTreeMap<_, _> =
                table.entries().map(|(i, s, r)| ((i, s), r)).collect();
            assert_eq!(ours, taylor_betti(&ideal, p as i64), "{ideal:?} GF({p})");
        }
    }
}

#[test]
fn taylor_agrees_on_small_family_members() {
    for spec in ["P:4,1", "C:5,1", "P:2,2", "C:3,2"] {
        let spec: FamilySpec = spec.parse().unwrap();
        let ideal = edge_ideal(&build_family(&spec).unwrap().graph).unwrap();
        if ideal.gens().len() > 12 {
            continue;
        }
        let table = hochster_betti(&ideal, FieldChar::default()).unwrap();
        let ours: std::collections::BTreeMap<_, _> =
            table.entries().map(|(i, s, r)| ((i, s), r)).collect();
        assert_eq!(ours, taylor_betti(&ideal, 2), "{spec}");
    }
}

#[test]
fn oracle_rank_sanity() {
    assert_eq!(rank_mod_p(vec![vec![1, 1], vec![1, 1]], 2), 1);
    assert_eq!(rank_mod_p(vec![vec![1, 1], vec![1, -1]], 2), 1);
    assert_eq!(rank_mod_p(vec![vec![1, 1], vec![1, -1]], 3), 2);
    // The boundary of a triangle has rank 2.
    let d = vec![vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]];
    assert_eq!(rank_mod_p(d, 3), 2);
}

#[test]
fn brute_force_sanity() {
    let edge = SquarefreeIdeal::from_index_lists(2, &[&[0, 1]]).unwrap();
    assert_eq!(
        brute_force_sdepth(&ModuleDescriptor::Quotient(edge.clone())),
        1
    );
    assert_eq!(brute_force_sdepth(&ModuleDescriptor::Ideal(edge)), 2);
    assert_eq!(
        brute_force_sdepth(&ModuleDescriptor::Quotient(SquarefreeIdeal::zero(3))),
        3
    );
    // The maximal ideal of K[x, y, z] has Stanley depth 2.
    let m = SquarefreeIdeal::from_index_lists(3, &[&[0], &[1], &[2]]).unwrap();
    assert_eq!(brute_force_sdepth(&ModuleDescriptor::Ideal(m)), 2);
    assert_eq!(antichains(2).len(), 5);
    assert_eq!(antichains(3).len(), 19);
}

#[test]
fn pair_modules_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut checked = 0;
    while checked < 40 {
        let inner = random_ideal(&mut rng, 4, 3);
        let extra = random_ideal(&mut rng, 4, 2);
        let outer = inner.sum(&extra).unwrap();
        let Ok(d) = ModuleDescriptor::pair(inner, outer) else {
            continue;
        };
        if CharPoset::new(&d).unwrap().is_empty() {
            continue;
        }
        let r = sdepth_exact(&d, Duration::from_secs(30)).unwrap();
        assert_eq!(r.value(), Some(brute_force_sdepth(&d)), "{d:?}");
        checked += 1;
    }
}

#[test]
fn five_variable_quotients_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let ideal = random_ideal(&mut rng, 5, 4);
        let d = ModuleDescriptor::Quotient(ideal);
        let r = sdepth_exact(&d, Duration::from_secs(30)).unwrap();
        assert_eq!(r.value(), Some(brute_force_sdepth(&d)), "{d:?}");
    }
}

#[test]
fn witnesses_give_exact_decompositions() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..30 {
        let ideal = random_ideal(&mut rng, 6, 4);
        for d in [
            ModuleDescriptor::Quotient(ideal.clone()),
            ModuleDescriptor::Ideal(ideal.clone()),
        ] {
            let r = sdepth_exact(&d, Duration::from_secs(30)).unwrap();
            let dec = partition_to_decomposition(&r.witness).unwrap();
            assert!(verify_decomposition(&dec).unwrap().is_ok());
            assert!(dec.min_dimension() >= r.lower);
        }
    }
}

#[test]
fn euler_characteristic_on_larger_complexes() {
    assert_eq!(sweep_euler_characteristic(40, 12, 99), Ok(40));
}

#[test]
fn depth_from_taylor_projective_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..40 {
        let ideal = random_ideal(&mut rng, 6, 5);
        let pd = taylor_betti(&ideal, 2)
            .keys()
            .map(|&(i, _)| i)
            .max()
            .unwrap();
        assert_eq!(
            depth_quotient(&ideal, FieldChar::default()).unwrap(),
            6 - pd,
            "{ideal:?}"
        );
    }
}
