//! Seeded rejection sampling of stabilizer codes.

use crate::distance::{distance_exact, Distance};
use crate::linalg::rank_mod;
use crate::phi::PhiVector;
use crate::ring::{is_prime, Ring};
use crate::stab::StabilizerCode;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SampleError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("k = {k} exceeds n = {n}")]
    BadParameters { n: usize, k: usize },
    #[error("no code with the requested parameters found within {trials} trials")]
    Exhausted { trials: u64 },
}

/// Draws pairwise-commuting independent rows one at a time, retrying until
/// a full generator set with `distance_exact ≥ d` appears or the trial
/// budget runs out. Identical seeds give identical outputs.
pub fn random_code(
    n: usize,
    k: usize,
    d: usize,
    q: u64,
    trials: u64,
    seed: u64,
    budget: u64,
) -> Result<StabilizerCode, SampleError> {
    if !is_prime(q) {
        return Err(SampleError::NotPrime(q));
    }
    if k > n {
        return Err(SampleError::BadParameters { n, k });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        if let Some(code) = sample_once(n, k, q, &mut rng) {
            let result = distance_exact(&code, d.saturating_sub(1), budget);
            // A clean scan up to d−1 certifies distance ≥ d.
            if matches!(result.distance, Distance::AtLeast(w) if w >= d) {
                return Ok(code);
            }
        }
    }
    Err(SampleError::Exhausted { trials })
}

/// One attempt at `n − k` commuting independent rows; row-level rejection
/// is bounded so a stuck prefix abandons the attempt.
pub fn sample_once(n: usize, k: usize, q: u64, rng: &mut ChaCha8Rng) -> Option<StabilizerCode> {
    let ring = Ring::Mod(q);
    let rows_needed = n - k;
    let mut gens: Vec<PhiVector> = Vec::with_capacity(rows_needed);
    let per_row_attempts = 200;
    while gens.len() < rows_needed {
        let mut placed = false;
        for _ in 0..per_row_attempts {
            let x: Vec<i64> = (0..n).map(|_| rng.gen_range(0..q as i64)).collect();
            let z: Vec<i64> = (0..n).map(|_| rng.gen_range(0..q as i64)).collect();
            let candidate = PhiVector::new(x, z, ring).expect("equal halves");
            if candidate.is_zero() {
                continue;
            }
            let commutes = gens
                .iter()
                .all(|g| g.symplectic(&candidate).unwrap().rem_euclid(q as i64) == 0);
            if !commutes {
                continue;
            }
            let mut rows: Vec<Vec<i64>> = gens.iter().map(PhiVector::to_row).collect();
            rows.push(candidate.to_row());
            if rank_mod(&rows, q) != rows.len() {
                continue;
            }
            gens.push(candidate);
            placed = true;
            break;
        }
        if !placed {
            return None;
        }
    }
    StabilizerCode::from_gens(gens, n, q).ok()
}
