//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
//! All comparisons are exact; runtime limits are checked against wall-clock time.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use racnshare::fixture::fig1_inferred;
use racnshare_core::cover::optimal_cover;
use racnshare_core::formulas::theorem_lower_bound;
use racnshare_core::gf256::{gf_mul, Gf256};
use racnshare_core::graph::path_graph;
use racnshare_core::labeling::{edge_weights, family_labeling};
use racnshare_core::protocol::{distribute, simulate_dissemination, simulate_reconstruction, Circuit, DisseminationOptions, PhasePolicy};
use racnshare_core::rainbow::{is_rainbow_connected, racn_exact};
use racnshare_core::sharing::{reconstruct, split, SecretConfig};
use racnshare_core::{EdgeKind, Family, SchemeFamily, SearchBudget};

struct Outcome {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self { failures: Vec::new(), notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

const FAMILIES: [Family; 3] = [Family::Shadow, Family::Splitting, Family::Mycielski];

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    for f in FAMILIES {
        for p in 2..=10 {
            let expected = match f {
                Family::Shadow if p % 2 == 0 => p + 1,
                Family::Shadow => p + 3,
                Family::Splitting => p + 1,
                _ => 2 * p,
            };
            let g = f.build(p).unwrap();
            let k = edge_weights(&g, &family_labeling(f, p).unwrap()).unwrap().distinct_weight_count();
            o.check(k == expected, || format!("{f} p={p}: {k} colours, expected {expected}"));
        }
    }
    o
}

/// Printed weight of each edge kind, `None` where no formula applies.
fn printed_weight(f: Family, p: usize, kind: EdgeKind) -> Option<usize> {
    let even = |t: usize| t % 2 == 0;
    Some(match (f, kind) {
        (Family::Shadow, EdgeKind::XX(t)) => 4 * t + 1,
        (Family::Shadow, EdgeKind::YY(t)) => 4 * p - 4 * t + 1,
        (Family::Shadow, EdgeKind::XY(_)) if p % 2 == 0 => 2 * p - 1,
        (Family::Shadow, EdgeKind::YX(_)) if p % 2 == 0 => 2 * p + 3,
        (Family::Shadow, EdgeKind::XY(t)) => if even(t) { 2 * p } else { 2 * (p - 1) },
        (Family::Shadow, EdgeKind::YX(t)) => if even(t) { 2 * (p + 1) } else { 2 * (p + 2) },
        (Family::Splitting, EdgeKind::XX(t)) => 2 * t + 1,
        (Family::Splitting, EdgeKind::XY(_)) => 2 * p,
        (Family::Splitting, EdgeKind::YX(_)) => 2 * (p + 1),
        (Family::Mycielski, EdgeKind::XX(t)) => 4 * p - 2 * t + 3,
        (Family::Mycielski, EdgeKind::XY(_)) => 2 * p + 3,
        (Family::Mycielski, EdgeKind::YX(_)) => 2 * p + 1,
        (Family::Mycielski, EdgeKind::ApexY(t)) => p + t + 1,
        _ => return None,
    })
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    let mut edges = 0;
    for f in FAMILIES {
        for p in 2..=10 {
            let g = f.build(p).unwrap();
            let w = edge_weights(&g, &family_labeling(f, p).unwrap()).unwrap();
            for (e, wt) in w.iter() {
                edges += 1;
                let kind = g.edge_kind(e);
                match printed_weight(f, p, kind) {
                    Some(expected) => o.check(wt as usize == expected, || format!("{f} p={p} {kind:?}: weight {wt}, printed {expected}")),
                    None => o.check(false, || format!("{f} p={p}: edge {}-{} has no printed formula", g.name(e.0), g.name(e.1))),
                }
            }
        }
    }
    o.notes.push(format!("{edges} edges checked"));
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    for f in FAMILIES {
        for p in 2..=8 {
            let g = f.build(p).unwrap();
            let w = edge_weights(&g, &family_labeling(f, p).unwrap()).unwrap();
            let rc = is_rainbow_connected(&g, &w).unwrap();
            for &(u, v) in &rc.missing {
                o.check(false, || format!("{f} p={p}: no rainbow path {}-{}", g.name(u), g.name(v)));
            }
            o.check(rc.connected == rc.missing.is_empty(), || format!("{f} p={p}: inconsistent connectivity report"));
        }
    }
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    for (f, p, expected) in [(Family::Shadow, 2, 3), (Family::Splitting, 2, 3), (Family::Shadow, 3, 6), (Family::Mycielski, 2, 4)] {
        let g = f.build(p).unwrap();
        let cert = racn_exact(&g, 8).unwrap();
        o.check(cert.exhaustive && cert.value == expected, || {
            format!("{f} p={p}: exact {} (witness {:?}), expected {expected}", cert.value, cert.witness.values())
        });
    }
    let g = Family::Mycielski.build(3).unwrap();
    let cert = racn_exact(&g, 8).unwrap();
    let bound = theorem_lower_bound(SchemeFamily::Mycielski, 3).unwrap();
    o.check(cert.value <= 6, || format!("mycielski p=3: exact {} exceeds the 6 colours of the closed-form labeling", cert.value));
    o.notes.push(format!("mycielski p=3 exact {} vs 2p = 6 vs printed bound {bound}", cert.value));
    for p in 2..=6 {
        let value = racn_exact(&path_graph(p).unwrap(), 8).unwrap().value;
        o.check(value == p - 1, || format!("path P{p}: exact {value}, expected {}", p - 1));
    }
    o
}

fn reference_mul(a: u8, b: u8) -> u8 {
    let mut prod: u16 = 0;
    for i in 0..8 {
        if b >> i & 1 == 1 {
            prod ^= (a as u16) << i;
        }
    }
    for bit in (8..16).rev() {
        if prod >> bit & 1 == 1 {
            prod ^= 0x11B << (bit - 8);
        }
    }
    prod as u8
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    for seed in 0..128u64 {
        let k = 1 + (seed as usize % 16);
        let count = k + (seed as usize * 7 % 5);
        let secret: Vec<u8> = (0..(1 + seed % 33)).map(|i| (i * 97 + seed * 13) as u8).collect();
        let shares = split(&secret, &SecretConfig::new(k, count, seed)).unwrap();
        let back = reconstruct(&shares[count - k..], k).unwrap();
        o.check(back == secret, || format!("round trip failed for seed {seed}, k={k}, shares={count}"));
    }
    // k = 2: one share (i, y) is consistent with every secret s through exactly one a_1 = (y - s) / i
    for seed in 0..16u64 {
        let shares = split(&[0x5A], &SecretConfig::new(2, 2, seed)).unwrap();
        for share in &shares {
            let (i, y) = (share.index, share.payload[0]);
            for s in 0..=255u8 {
                let consistent = (0..=255u8).filter(|&a1| (Gf256(s) + Gf256(a1) * Gf256(i)).0 == y).count();
                o.check(consistent == 1, || format!("share {i} value {y}: secret {s} has {consistent} consistent polynomials"));
            }
        }
    }
    let mut bad = 0u32;
    for a in 0..=255u8 {
        for b in 0..=255u8 {
            bad += u32::from(gf_mul(Gf256(a), Gf256(b)).0 != reference_mul(a, b));
        }
    }
    o.check(bad == 0, || format!("{bad} of 65536 products disagree with the reference"));
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    for f in FAMILIES {
        for p in 2..=8 {
            let g = f.build(p).unwrap();
            let secret = format!("secret {f} {p}").into_bytes();
            let inst = distribute(&g, &family_labeling(f, p).unwrap(), &secret, p as u64).unwrap();
            let trace = simulate_reconstruction(&inst, PhasePolicy::Greedy).unwrap();
            o.check(trace.recovered == secret, || format!("{f} p={p}: secret not recovered"));
        }
    }
    let expected = |f: Family, p: usize| -> (usize, usize) {
        match f {
            Family::Shadow => (if p % 2 == 0 { 1 } else { 2 }, if p % 2 == 0 { p + 2 } else { p + 3 }),
            Family::Splitting => (if p == 3 { 2 } else { 1 }, if p == 3 { p + 1 } else { p + 2 }),
            _ => ([1, 2, 2][p - 2], 2 * p + 1),
        }
    };
    for f in FAMILIES {
        let ps = if f == Family::Mycielski { 2..=4 } else { 2..=6 };
        for p in ps {
            let g = f.build(p).unwrap();
            let w = edge_weights(&g, &family_labeling(f, p).unwrap()).unwrap();
            let cover = optimal_cover(&g, &w, SearchBudget::default()).unwrap();
            let (rp, m) = expected(f, p);
            o.check(cover.rp == rp, || format!("{f} p={p}: rp {} expected {rp}", cover.rp));
            o.check(cover.m == m, || format!("{f} p={p}: m {} expected {m}", cover.m));
        }
    }
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let fixture = fig1_inferred();
    let g = fixture.graph().unwrap();
    let id = |name: &str| g.find(name).unwrap();
    let set = |names: &[&str]| names.iter().map(|n| id(n)).collect::<BTreeSet<_>>();
    let opts = DisseminationOptions { max_cycle_len: fixture.max_cycle_len, ..DisseminationOptions::default() };
    let trace = simulate_dissemination(&g, &set(&["5", "7"]), &opts).unwrap();
    o.check(trace.round_count() == 3, || format!("{} rounds, expected 3", trace.round_count()));
    if trace.round_count() == 3 {
        let r = &trace.rounds;
        o.check(r[0].informed_after == set(&["2", "4", "5", "6", "7", "8", "10", "11"]), || "round 1 informed set differs".into());
        let added: BTreeSet<_> = r[1].informed_after.difference(&r[0].informed_after).copied().collect();
        o.check(added == set(&["3", "9"]), || format!("round 2 added {added:?}"));
        o.check(r[2].circuits == [Circuit::Path(vec![id("8"), id("12"), id("1")])], || format!("round 3 circuits {:?}", r[2].circuits));
    }
    let uncapped = simulate_dissemination(&g, &set(&["5", "7"]), &DisseminationOptions::default()).unwrap();
    o.notes.push(format!("cycle length limit {:?}; without it {} rounds", fixture.max_cycle_len, uncapped.round_count()));
    o
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Duration); 7] = [
        ("1 closed-form colour counts", criterion_1, Duration::from_secs(1)),
        ("2 edge weight formulas", criterion_2, Duration::from_secs(1)),
        ("3 rainbow connectivity", criterion_3, Duration::from_secs(120)),
        ("4 exact RACN agreement", criterion_4, Duration::from_secs(120)),
        ("5 secret sharing properties", criterion_5, Duration::from_secs(10)),
        ("6 reconstruction phases and participants", criterion_6, Duration::from_secs(120)),
        ("7 dissemination rounds", criterion_7, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if elapsed > limit {
            outcome.failures.push(format!("took {elapsed:.2?}, limit {limit:?}"));
        }
        let verdict = if outcome.failures.is_empty() { "PASS" } else { "FAIL" };
        let mut line = format!("criterion {name}: {verdict} ({elapsed:.2?})");
        if !outcome.failures.is_empty() {
            line.push_str(&format!(" -- {}", outcome.failures.join("; ")));
        }
        if !outcome.notes.is_empty() {
            line.push_str(&format!(" [{}]", outcome.notes.join("; ")));
        }
        println!("{line}");
        failed += usize::from(!outcome.failures.is_empty());
    }
    println!("criterion 8 figure experiment: NOTE (edge weights of the figure are not given; covered by criteria 6 and 7)");
    println!("{failed} of 7 criteria failed");
    if failed > 0 {
        std::process::exit(1);
    }
}
