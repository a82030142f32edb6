mod common;

use std::time::Duration;

use proptest::prelude::*;
use sdepth_core::graph::{build_family, Family, FamilySpec};
use sdepth_core::homological::{depth_quotient, FieldChar};
use sdepth_core::ideal::{minimalize, ModuleDescriptor, SquarefreeIdeal};
use sdepth_core::serial::{parse_ideal, parse_witness, IdealDoc, WitnessDoc};
use sdepth_core::stanley::sdepth_exact;
use sdepth_core::Support;

const BUDGET: Duration = Duration::from_secs(30);

fn ideal_strategy(n: usize, max_gens: usize) -> impl Strategy<Value = SquarefreeIdeal> {
    prop::collection::vec(1u64..1 << n, 1..=max_gens).prop_map(move |bits| {
        common::ideal_from(
            n,
            &bits.into_iter().map(Support::from_bits).collect::<Vec<_>>(),
        )
    })
}

fn support_strategy(n: usize) -> impl Strategy<Value = Support> {
    (0u64..1 << n).prop_map(Support::from_bits)
}

/// Krull dimension of `S/I`: the largest support outside `I`.
fn krull_dim(ideal: &SquarefreeIdeal) -> usize {
    (0u64..1 << ideal.ambient())
        .map(Support::from_bits)
        .filter(|&s| !ideal.contains(s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn colon_is_dual_to_membership(ideal in ideal_strategy(6, 5), u in support_strategy(6), s in support_strategy(6)) {
        prop_assume!(!ideal.contains(u));
        let colon = ideal.colon(u).unwrap();
        prop_assert_eq!(colon.contains(s), ideal.contains(s.union(u)));
    }

    #[test]
    fn minimalize_keeps_an_antichain_of_the_same_ideal(bits in prop::collection::vec(1u64..1 << 7, 0..10)) {
        let gens: Vec<Support> = bits.into_iter().map(Support::from_bits).collect();
        let kept = minimalize(&gens);
        for (a, x) in kept.iter().enumerate() {
            prop_assert!(gens.contains(x));
            for y in &kept[a + 1..] {
                prop_assert!(!x.is_subset(*y) && !y.is_subset(*x));
            }
        }
        for g in &gens {
            prop_assert!(kept.iter().any(|k| k.is_subset(*g)));
        }
        prop_assert_eq!(minimalize(&kept), kept);
    }

    #[test]
    fn relabel_then_inverse_is_identity(ideal in ideal_strategy(7, 6), perm in Just((0..7).collect::<Vec<usize>>()).prop_shuffle()) {
        let mut inverse = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        let there = ideal.relabel(&perm).unwrap();
        prop_assert_eq!(there.gens().len(), ideal.gens().len());
        prop_assert_eq!(there.relabel(&inverse).unwrap(), ideal);
    }

    #[test]
    fn witnesses_are_sound_and_bounded_by_dimension(ideal in ideal_strategy(6, 5)) {
        let field = FieldChar::default();
        let dim = krull_dim(&ideal);
        let quotient = ModuleDescriptor::Quotient(ideal.clone());
        let r = sdepth_exact(&quotient, BUDGET).unwrap();
        prop_assert!(r.exact());
        prop_assert!(r.witness.verify_at(r.lower).is_ok());
        prop_assert!(r.lower <= dim);
        prop_assert!(depth_quotient(&ideal, field).unwrap() <= dim);

        let ideal_module = ModuleDescriptor::Ideal(ideal.clone());
        let r = sdepth_exact(&ideal_module, BUDGET).unwrap();
        prop_assert!(r.witness.verify_at(r.lower).is_ok());
        prop_assert!(r.lower <= ideal.ambient());
    }

    #[test]
    fn free_variables_shift_depth_and_sdepth(ideal in ideal_strategy(4, 4), r in 1usize..3) {
        let field = FieldChar::default();
        let wider = ideal.extend_ambient(r).unwrap();
        prop_assert_eq!(
            depth_quotient(&wider, field).unwrap(),
            depth_quotient(&ideal, field).unwrap() + r
        );
        for (narrow, wide) in [
            (ModuleDescriptor::Quotient(ideal.clone()), ModuleDescriptor::Quotient(wider.clone())),
            (ModuleDescriptor::Ideal(ideal.clone()), ModuleDescriptor::Ideal(wider.clone())),
        ] {
            let a = sdepth_exact(&narrow, BUDGET).unwrap().value().unwrap();
            let b = sdepth_exact(&wide, BUDGET).unwrap().value().unwrap();
            prop_assert_eq!(b, a + r);
        }
    }

    #[test]
    fn ideal_documents_round_trip(ideal in ideal_strategy(9, 8)) {
        let text = serde_json::to_string(&IdealDoc::new(&ideal, None)).unwrap();
        prop_assert_eq!(parse_ideal(&text).unwrap(), ideal);
    }

    #[test]
    fn witness_documents_round_trip(ideal in ideal_strategy(5, 4)) {
        let d = ModuleDescriptor::Quotient(ideal);
        let r = sdepth_exact(&d, BUDGET).unwrap();
        let doc = WitnessDoc::new(&r.witness);
        let text = serde_json::to_string(&doc).unwrap();
        let (w, k) = parse_witness(&text).unwrap();
        prop_assert_eq!(k, r.witness.min_top());
        prop_assert_eq!(w, r.witness.normalized());
    }

    #[test]
    fn family_dsl_round_trips(n in 1usize..12, m in 1usize..6, which in 0usize..5) {
        let family = [Family::P, Family::C, Family::Pstar, Family::Pstarstar, Family::Cdiamond][which];
        if let Ok(spec) = FamilySpec::new(family, n, m) {
            let back: FamilySpec = spec.to_string().parse().unwrap();
            prop_assert_eq!(back, spec);
        }
    }

    #[test]
    fn edge_counts_follow_the_closed_forms(n in 2usize..9, m in 1usize..9) {
        let (n, m) = (n.max(m), n.min(m));
        let grid = 4 * (n - 1) * (m - 1) + (n - 1) + (m - 1);
        let p = build_family(&FamilySpec::p(n, m).unwrap()).unwrap();
        prop_assert_eq!(p.graph.edge_count(), grid);
        if n >= 3 {
            let c = build_family(&FamilySpec::c(n, m).unwrap()).unwrap();
            prop_assert_eq!(c.graph.edge_count(), grid + 3 * (m - 1) + 1);
        }
    }
}
