use std::collections::BTreeSet;

use proptest::prelude::*;
use racnshare::fixture::fig1_inferred;
use racnshare::formats::{from_json, to_json, CertificateDoc, ColoringDoc, DisseminationDoc, GraphDoc, LabelingDoc, ReconstructionDoc, ShareDoc};
use racnshare_core::labeling::{edge_weights, family_labeling};
use racnshare_core::protocol::{distribute, simulate_dissemination, simulate_reconstruction, DisseminationOptions, PhasePolicy};
use racnshare_core::rainbow::racn_exact;
use racnshare_core::sharing::Share;
use racnshare_core::{Family, Graph, Labeling};

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![Just(Family::Path), Just(Family::Shadow), Just(Family::Splitting), Just(Family::Mycielski)]
}

fn reparse<T: serde::Serialize + serde::de::DeserializeOwned>(x: &T) -> T {
    from_json(&to_json(x)).unwrap()
}

proptest! {
    #[test]
    fn graph_round_trip(f in family(), p in 2usize..=12) {
        let g = f.build(p).unwrap();
        prop_assert_eq!(reparse(&GraphDoc::from_graph(&g)).to_graph().unwrap(), g);
    }

    #[test]
    fn plain_graph_round_trip(n in 1usize..10, mask in any::<u64>()) {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> (bit % 64) & 1 == 1 {
                    edges.push((u, v));
                }
                bit += 1;
            }
        }
        let g = Graph::from_named((0..n).map(|i| format!("v{i}")), edges).unwrap();
        prop_assert_eq!(reparse(&GraphDoc::from_graph(&g)).to_graph().unwrap(), g);
    }

    #[test]
    fn labeling_and_coloring_round_trip(f in family(), p in 2usize..=12, seed in any::<u64>()) {
        let g = f.build(p).unwrap();
        let mut values: Vec<u32> = family_labeling(f, p).unwrap().values().to_vec();
        let mut s = seed;
        for i in (1..values.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            values.swap(i, (s >> 33) as usize % (i + 1));
        }
        let l = Labeling::new(values);
        prop_assert_eq!(reparse(&LabelingDoc::from_labeling(&g, &l)).to_labeling(&g).unwrap(), l.clone());
        let w = edge_weights(&g, &l).unwrap();
        prop_assert_eq!(reparse(&ColoringDoc::from_coloring(&w)).to_coloring().unwrap(), w);
    }

    #[test]
    fn share_round_trip(index in 1u8.., payload in proptest::collection::vec(any::<u8>(), 0..64)) {
        let s = Share { index, payload };
        prop_assert_eq!(reparse(&ShareDoc::from_share(&s)).to_share().unwrap(), s);
    }

    #[test]
    fn reconstruction_trace_round_trip(f in prop_oneof![Just(Family::Shadow), Just(Family::Splitting), Just(Family::Mycielski)], p in 2usize..=6, seed in any::<u64>()) {
        let g = f.build(p).unwrap();
        let inst = distribute(&g, &family_labeling(f, p).unwrap(), b"payload", seed).unwrap();
        let trace = simulate_reconstruction(&inst, PhasePolicy::Greedy).unwrap();
        let doc = ReconstructionDoc::from_trace(&g, "greedy", inst.k(), b"payload", &trace);
        prop_assert!(doc.matches_secret);
        prop_assert_eq!(reparse(&doc).to_trace(&g).unwrap(), trace);
    }
}

#[test]
fn certificate_round_trip() {
    let g = Family::Shadow.build(2).unwrap();
    let cert = racn_exact(&g, 8).unwrap();
    let doc = CertificateDoc::from_certificate(&g, &cert);
    let v: serde_json::Value = serde_json::to_value(&doc).unwrap();
    assert_eq!(v["value"], 3);
    assert_eq!(v["exhaustive"], true);
    assert_eq!(reparse(&doc).to_certificate(&g).unwrap(), cert);
}

#[test]
fn dissemination_trace_round_trip() {
    let fx = fig1_inferred();
    let g = fx.graph().unwrap();
    let informed: BTreeSet<usize> = [g.find("5").unwrap(), g.find("7").unwrap()].into();
    let opts = DisseminationOptions { max_cycle_len: fx.max_cycle_len, ..Default::default() };
    let trace = simulate_dissemination(&g, &informed, &opts).unwrap();
    let doc = DisseminationDoc::from_trace(&g, fx.max_cycle_len, &trace);
    assert_eq!(doc.rounds[0].informed_after, ["2", "4", "5", "6", "7", "8", "10", "11"]);
    assert_eq!(reparse(&doc).to_trace(&g).unwrap(), trace);
}
