use std::collections::BTreeMap;

use proptest::prelude::*;
use racnshare_core::gf256::{gf_mul, Gf256};
use racnshare_core::sharing::{reconstruct, split, SecretConfig, Share};
use racnshare_core::Error;

/// Carry-less product followed by long division by x^8 + x^4 + x^3 + x + 1.
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

#[test]
fn multiplication_matches_long_division() {
    for a in 0..=255u8 {
        for b in 0..=255u8 {
            assert_eq!(gf_mul(Gf256(a), Gf256(b)).0, reference_mul(a, b), "{a:#04x} * {b:#04x}");
        }
    }
}

#[test]
fn inverses() {
    assert_eq!(Gf256(0).inv(), None);
    for a in 1..=255u8 {
        let inv = Gf256(a).inv().unwrap();
        assert_eq!(reference_mul(a, inv.0), 1);
    }
}

proptest! {
    #[test]
    fn field_axioms(a in any::<u8>(), b in any::<u8>(), c in any::<u8>()) {
        let (a, b, c) = (Gf256(a), Gf256(b), Gf256(c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!(a + a, Gf256::ZERO);
        prop_assert_eq!(a * Gf256::ONE, a);
    }

    #[test]
    fn any_k_shares_recover(
        secret in proptest::collection::vec(any::<u8>(), 1..48),
        (k, count) in (1usize..=16).prop_flat_map(|k| (Just(k), k..=20)),
        seed in any::<u64>(),
        pick in any::<u64>(),
    ) {
        let shares = split(&secret, &SecretConfig::new(k, count, seed)).unwrap();
        prop_assert_eq!(shares.len(), count);
        prop_assert!(shares.iter().all(|s| s.payload.len() == secret.len()));
        let mut order: Vec<usize> = (0..count).collect();
        let mut s = pick;
        for i in (1..count).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let chosen: Vec<Share> = order[..k].iter().map(|&i| shares[i].clone()).collect();
        prop_assert_eq!(reconstruct(&chosen, k).unwrap(), secret.clone());
        if k > 1 {
            let short = &chosen[..k - 1];
            prop_assert_eq!(reconstruct(short, k).unwrap_err(), Error::InsufficientShares { have: k - 1, need: k });
        }
    }

    #[test]
    fn seeds_are_deterministic(secret in proptest::collection::vec(any::<u8>(), 1..16), seed in any::<u64>()) {
        let cfg = SecretConfig::new(3, 5, seed);
        prop_assert_eq!(split(&secret, &cfg).unwrap(), split(&secret, &cfg).unwrap());
    }
}

#[test]
fn hundred_seeded_round_trips() {
    for seed in 0..100u64 {
        let k = 1 + (seed as usize % 16);
        let count = k + (seed as usize % (21 - k));
        let secret: Vec<u8> = (0..(1 + seed % 40)).map(|i| (i * 31 + seed) as u8).collect();
        let shares = split(&secret, &SecretConfig::new(k, count, seed)).unwrap();
        assert_eq!(reconstruct(&shares[count - k..], k).unwrap(), secret, "seed {seed}");
    }
}

#[test]
fn single_share_below_threshold_is_uniform() {
    // Over every coefficient a_1, share i = s + a_1 * i takes each byte value exactly once.
    for s in [0u8, 0x42, 0xFF] {
        for i in 1..=255u8 {
            let mut counts: BTreeMap<u8, u32> = BTreeMap::new();
            for a1 in 0..=255u8 {
                *counts.entry((Gf256(s) + Gf256(a1) * Gf256(i)).0).or_default() += 1;
            }
            assert_eq!(counts.len(), 256);
        }
    }
}

#[test]
fn two_of_two_single_share_distribution_is_independent_of_secret() {
    let distribution = |secret: u8| {
        let mut counts = [0u32; 256];
        for seed in 0..4096u64 {
            let shares = split(&[secret], &SecretConfig::new(2, 2, seed)).unwrap();
            counts[shares[0].payload[0] as usize] += 1;
        }
        counts
    };
    // both histograms are near-uniform: 16 expected per bucket
    for secret in [0u8, 0xA5] {
        let counts = distribution(secret);
        let chi2: f64 = counts.iter().map(|&c| (c as f64 - 16.0).powi(2) / 16.0).sum();
        assert!(chi2 < 360.0, "chi2 {chi2}");
    }
}
