//! Threshold secret sharing over GF(256), one polynomial per secret byte.
//!
//! Coefficients come from a seeded ChaCha stream so that splits are
//! reproducible: the generator for byte `i` uses stream `i`, and the
//! polynomial's coefficients are read from it in order of degree.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::gf256::Gf256;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Share {
    /// Evaluation point, never zero.
    pub index: u8,
    pub payload: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SecretConfig {
    pub threshold: usize,
    pub share_count: usize,
    pub seed: u64,
}

impl SecretConfig {
    pub fn new(threshold: usize, share_count: usize, seed: u64) -> Self {
        Self { threshold, share_count, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if self.threshold < 1 || self.threshold > self.share_count || self.share_count > 255 {
            return Err(Error::InvalidConfig(format!(
                "need 1 <= threshold <= share_count <= 255, got threshold {} and share_count {}",
                self.threshold, self.share_count
            )));
        }
        Ok(())
    }
}

/// Coefficients `c_1..c_{k-1}` for secret byte `byte_index`.
fn coefficients(seed: u64, byte_index: usize, k: usize) -> Vec<Gf256> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(byte_index as u64);
    (1..k).map(|_| Gf256(rng.next_u32() as u8)).collect()
}

/// Horner evaluation of `secret + c_1 x + ... + c_{k-1} x^{k-1}`.
fn eval(constant: Gf256, coeffs: &[Gf256], x: Gf256) -> Gf256 {
    coeffs.iter().rev().fold(Gf256::ZERO, |acc, &c| acc * x + c) * x + constant
}

pub fn split(secret: &[u8], cfg: &SecretConfig) -> Result<Vec<Share>> {
    cfg.validate()?;
    if secret.is_empty() {
        return Err(Error::InvalidConfig("secret must not be empty".into()));
    }
    let polys: Vec<Vec<Gf256>> = (0..secret.len()).map(|i| coefficients(cfg.seed, i, cfg.threshold)).collect();
    Ok((1..=cfg.share_count as u8)
        .map(|index| Share {
            index,
            payload: secret.iter().zip(&polys).map(|(&s, coeffs)| eval(Gf256(s), coeffs, Gf256(index)).0).collect(),
        })
        .collect())
}

/// Lagrange interpolation at zero from the first `k` shares, after checking
/// every supplied share for duplicate indices and ragged payloads.
pub fn reconstruct(shares: &[Share], k: usize) -> Result<Vec<u8>> {
    if k == 0 {
        return Err(Error::InvalidConfig("threshold must be at least 1".into()));
    }
    if shares.len() < k {
        return Err(Error::InsufficientShares { have: shares.len(), need: k });
    }
    let mut seen = BTreeSet::new();
    for s in shares {
        if s.index == 0 {
            return Err(Error::InvalidConfig("share index 0 is the secret itself".into()));
        }
        if !seen.insert(s.index) {
            return Err(Error::DuplicateIndex(s.index));
        }
    }
    let len = shares[0].payload.len();
    if shares.iter().any(|s| s.payload.len() != len) {
        return Err(Error::LengthMismatch);
    }
    let used = &shares[..k];
    let basis: Vec<Gf256> = used
        .iter()
        .map(|si| {
            let xi = Gf256(si.index);
            used.iter().filter(|sj| sj.index != si.index).fold(Gf256::ONE, |acc, sj| {
                let xj = Gf256(sj.index);
                acc * (xj / (xj - xi))
            })
        })
        .collect();
    Ok((0..len).map(|b| used.iter().zip(&basis).fold(Gf256::ZERO, |acc, (s, &l)| acc + Gf256(s.payload[b]) * l).0).collect())
}
