//! Tiny dense-matrix oracle for cross-validating the symplectic product.
//!
//! Realizes an exponent vector as the explicit `q^n × q^n` unitary
//! `⊗_t X^{x_t} Z^{z_t}` with `X|j⟩ = |j+1 mod q⟩` and `Z|j⟩ = ω^j|j⟩`,
//! `ω = e^{2πi/q}`. Capped at `q^n ≤ 64`: this is a test instrument, not a
//! simulator.

use crate::phi::PhiVector;
use num_complex::Complex64;
use thiserror::Error;

pub const DENSE_DIM_CAP: usize = 64;
pub const DENSE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DenseError {
    #[error("q^n = {0} exceeds the dense-oracle cap of {DENSE_DIM_CAP}")]
    DimensionCap(u128),
}

/// Column-major is irrelevant at this size; entries are stored row-major.
#[derive(Debug, Clone)]
pub struct DensePauli {
    pub q: u64,
    pub n: usize,
    dim: usize,
    entries: Vec<Complex64>,
}

impl DensePauli {
    /// Realizes `u` as a dense unitary over local dimension `q`.
    pub fn realize(u: &PhiVector, q: u64) -> Result<DensePauli, DenseError> {
        let dim128 = (q as u128).checked_pow(u.n() as u32).unwrap_or(u128::MAX);
        if dim128 > DENSE_DIM_CAP as u128 {
            return Err(DenseError::DimensionCap(dim128));
        }
        let mut m = identity(1);
        for t in 0..u.n() {
            let (a, b) = u.register(t);
            m = kron(&m, &single_register(a, b, q));
        }
        let dim = dim128 as usize;
        debug_assert_eq!(m.len(), dim * dim);
        Ok(DensePauli {
            q,
            n: u.n(),
            dim,
            entries: m,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn matmul(&self, other: &DensePauli) -> Vec<Complex64> {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut out = vec![Complex64::new(0.0, 0.0); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..d {
                    out[i * d + j] += a * other.entries[k * d + j];
                }
            }
        }
        out
    }

    pub fn is_unitary(&self) -> bool {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..d {
                    acc += self.entries[i * d + k] * self.entries[j * d + k].conj();
                }
                let expect = if i == j { 1.0 } else { 0.0 };
                if (acc - expect).norm() > DENSE_TOLERANCE {
                    return false;
                }
            }
        }
        true
    }
}

fn identity(dim: usize) -> Vec<Complex64> {
    let mut m = vec![Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        m[i * dim + i] = Complex64::new(1.0, 0.0);
    }
    m
}

/// `X^a Z^b` on one register: entry `[(j+a) mod q][j] = ω^{bj}`.
fn single_register(a: i64, b: i64, q: u64) -> Vec<Complex64> {
    let d = q as usize;
    let mut m = vec![Complex64::new(0.0, 0.0); d * d];
    for j in 0..d {
        let row = (j as i64 + a).rem_euclid(q as i64) as usize;
        let phase =
            2.0 * std::f64::consts::PI * ((b * j as i64).rem_euclid(q as i64) as f64) / q as f64;
        m[row * d + j] = Complex64::from_polar(1.0, phase);
    }
    m
}

fn kron(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let da = (a.len() as f64).sqrt().round() as usize;
    let db = (b.len() as f64).sqrt().round() as usize;
    let d = da * db;
    let mut out = vec![Complex64::new(0.0, 0.0); d * d];
    for i1 in 0..da {
        for j1 in 0..da {
            let av = a[i1 * da + j1];
            if av.norm_sqr() == 0.0 {
                continue;
            }
            for i2 in 0..db {
                for j2 in 0..db {
                    out[(i1 * db + i2) * d + (j1 * db + j2)] = av * b[i2 * db + j2];
                }
            }
        }
    }
    out
}

/// True when the dense realizations of `u` and `v` commute to tolerance.
pub fn dense_commute(u: &PhiVector, v: &PhiVector, q: u64) -> Result<bool, DenseError> {
    let mu = DensePauli::realize(u, q)?;
    let mv = DensePauli::realize(v, q)?;
    let uv = mu.matmul(&mv);
    let vu = mv.matmul(&mu);
    Ok(uv
        .iter()
        .zip(&vu)
        .all(|(p, r)| (p - r).norm() <= DENSE_TOLERANCE))
}

/// The phase exponent `c` with `UV = ω^c VU`, recovered numerically.
/// Algebraically `c ≡ −(u ⊙ v) mod q`, i.e. the product taken in the other
/// order; `None` if either matrix product vanishes somewhere unexpected.
pub fn commutation_phase(u: &PhiVector, v: &PhiVector, q: u64) -> Result<Option<u64>, DenseError> {
    let mu = DensePauli::realize(u, q)?;
    let mv = DensePauli::realize(v, q)?;
    let uv = mu.matmul(&mv);
    let vu = mv.matmul(&mu);
    for c in 0..q {
        let phase = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * c as f64 / q as f64);
        if uv
            .iter()
            .zip(&vu)
            .all(|(p, r)| (p - phase * r).norm() <= DENSE_TOLERANCE)
        {
            return Ok(Some(c));
        }
    }
    Ok(None)
}
