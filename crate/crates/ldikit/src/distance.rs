//! Exact code distance by bounded enumeration, block-wise CSS distance,
//! undetectable-error classification, and the minor-determinant scanner.

use crate::ldi::LdiCode;
use crate::linalg::{
    determinant_exact, in_row_space, kernel_basis_mod, next_combination, rref_mod,
};
use crate::phi::PhiVector;
use crate::ring::{is_prime, Ring};
use crate::stab::{CodeError, CssStructure, StabilizerCode};
use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DistanceError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("minor size {w} does not fit a {rows}x{cols} block")]
    BadMinorSize { w: usize, rows: usize, cols: usize },
    #[error("minor scan would examine {required} minors, over the budget of {budget}")]
    BudgetExceeded { required: u64, budget: u64 },
    #[error(transparent)]
    Code(#[from] CodeError),
}

/// Exact distance, or a certified lower bound when the enumeration was
/// capped by `wmax` or the candidate budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Exact(usize),
    AtLeast(usize),
}

impl Distance {
    pub fn lower_bound(&self) -> usize {
        match self {
            Distance::Exact(d) | Distance::AtLeast(d) => *d,
        }
    }

    pub fn exact(&self) -> Option<usize> {
        match self {
            Distance::Exact(d) => Some(*d),
            Distance::AtLeast(_) => None,
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::AtLeast(w) => write!(f, ">={w}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceResult {
    pub distance: Distance,
    /// Lexicographically smallest minimum-weight undetectable error outside
    /// the group, when one was found.
    pub witness: Option<PhiVector>,
    pub prime: u64,
}

/// Hard cap on enumerated candidates; distance searches fall back to
/// `AtLeast` rather than truncating silently.
pub fn candidate_budget() -> u64 {
    std::env::var("LDIKIT_SEARCH_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(100_000_000)
}

/// Enumerates errors by increasing Pauli weight `1..=wmax` and returns the
/// first weight admitting a zero-syndrome error outside the generated
/// group. Scalar multiples share detectability, so patterns are normalized
/// to leading coefficient 1; witnesses are scalar-orbit lex-minimized.
pub fn distance_exact(code: &StabilizerCode, wmax: usize, budget: u64) -> DistanceResult {
    let p = code.q();
    let p_i = p as i64;
    let n = code.n();
    let rows = code.rows();
    let (rref, pivots) = rref_mod(&rows, p);
    let gens: Vec<Vec<i64>> = code.generators().iter().map(PhiVector::to_row).collect();

    let mut counted: u64 = 0;
    for w in 1..=wmax.min(n) {
        let mut best: Option<Vec<i64>> = None;
        let mut support: Vec<usize> = (0..w).collect();
        'supports: loop {
            let mut pattern = vec![(0i64, 0i64); w];
            if enumerate_patterns(&mut pattern, 0, p_i, true, &mut |pat| {
                counted += 1;
                if counted > budget {
                    return false;
                }
                let mut row = vec![0i64; 2 * n];
                for (slot, &t) in support.iter().enumerate() {
                    row[t] = pat[slot].0;
                    row[n + t] = pat[slot].1;
                }
                if syndrome_zero(&gens, &row, p_i) && !in_row_space(&rref, &pivots, &row, p) {
                    consider_witness(&mut best, &row, p_i);
                }
                true
            })
            .is_err()
            {
                // Budget exhausted mid-weight: weights below w are clean.
                return match best {
                    Some(row) => witness_result(row, w, p),
                    None => DistanceResult {
                        distance: Distance::AtLeast(w),
                        witness: None,
                        prime: p,
                    },
                };
            }
            if !next_combination(&mut support, n) {
                break 'supports;
            }
        }
        if let Some(row) = best {
            return witness_result(row, w, p);
        }
    }
    DistanceResult {
        distance: Distance::AtLeast(wmax.min(n) + 1),
        witness: None,
        prime: p,
    }
}

fn witness_result(row: Vec<i64>, w: usize, p: u64) -> DistanceResult {
    let witness = PhiVector::from_row(&row, Ring::Mod(p)).expect("even length");
    debug_assert_eq!(witness.weight(), w);
    DistanceResult {
        distance: Distance::Exact(w),
        witness: Some(witness),
        prime: p,
    }
}

/// Keeps the lex-smallest vector of the scalar orbit of `row`, then the
/// smallest seen overall.
fn consider_witness(best: &mut Option<Vec<i64>>, row: &[i64], p: i64) {
    let mut minimal = row.to_vec();
    for scalar in 2..p {
        let scaled: Vec<i64> = row.iter().map(|&v| (v * scalar).rem_euclid(p)).collect();
        if scaled < minimal {
            minimal = scaled;
        }
    }
    match best {
        Some(existing) if *existing <= minimal => {}
        _ => *best = Some(minimal),
    }
}

fn syndrome_zero(gens: &[Vec<i64>], row: &[i64], p: i64) -> bool {
    let n = row.len() / 2;
    gens.iter().all(|g| {
        let mut acc = 0i64;
        for t in 0..n {
            acc += g[t] * row[n + t] - g[n + t] * row[t];
        }
        acc.rem_euclid(p) == 0
    })
}

/// Calls `visit` for every assignment of non-identity `(x, z)` pairs to the
/// pattern slots. When `normalize` is set the first nonzero coefficient of
/// the flattened pattern is pinned to 1. `visit` returning false aborts
/// (budget); the Err carries that abort.
fn enumerate_patterns(
    pattern: &mut Vec<(i64, i64)>,
    slot: usize,
    p: i64,
    normalize: bool,
    visit: &mut impl FnMut(&[(i64, i64)]) -> bool,
) -> Result<(), ()> {
    if slot == pattern.len() {
        return if visit(pattern) { Ok(()) } else { Err(()) };
    }
    let first = slot == 0 && normalize;
    for x in 0..p {
        for z in 0..p {
            if x == 0 && z == 0 {
                continue;
            }
            if first {
                let leading = if x != 0 { x } else { z };
                if leading != 1 {
                    continue;
                }
            }
            pattern[slot] = (x, z);
            enumerate_patterns(pattern, slot + 1, p, normalize, visit)?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CssDistances {
    /// Minimum-weight x-only error invisible to the Z block.
    pub x: DistanceResult,
    /// Minimum-weight z-only error invisible to the X block.
    pub z: DistanceResult,
}

impl CssDistances {
    /// The code distance is the smaller of the two sides when both are
    /// exact; otherwise only a lower bound survives.
    pub fn overall(&self) -> Distance {
        match (self.x.distance, self.z.distance) {
            (Distance::Exact(a), Distance::Exact(b)) => Distance::Exact(a.min(b)),
            (Distance::Exact(a), Distance::AtLeast(b))
            | (Distance::AtLeast(b), Distance::Exact(a)) => {
                if a <= b {
                    Distance::Exact(a)
                } else {
                    Distance::AtLeast(b)
                }
            }
            (Distance::AtLeast(a), Distance::AtLeast(b)) => Distance::AtLeast(a.min(b)),
        }
    }
}

/// Block-wise CSS distance over `p`: for each support of size `w ≤ wmax`,
/// enumerates the kernel of the active block's restriction and keeps
/// full-support kernel vectors lying outside the partner block's row space.
pub fn css_distance(
    css: &CssStructure,
    p: u64,
    wmax: usize,
    budget: u64,
) -> Result<CssDistances, DistanceError> {
    if !is_prime(p) {
        return Err(DistanceError::NotPrime(p));
    }
    let mut counted = 0u64;
    let z = block_side(
        &css.xblock,
        &css.zblock,
        css.n,
        p,
        wmax,
        budget,
        &mut counted,
        false,
    );
    let x = block_side(
        &css.zblock,
        &css.xblock,
        css.n,
        p,
        wmax,
        budget,
        &mut counted,
        true,
    );
    Ok(CssDistances { x, z })
}

#[allow(clippy::too_many_arguments)]
fn block_side(
    syndrome_block: &[Vec<i64>],
    partner_block: &[Vec<i64>],
    n: usize,
    p: u64,
    wmax: usize,
    budget: u64,
    counted: &mut u64,
    pure_x: bool,
) -> DistanceResult {
    let p_i = p as i64;
    let (partner_rref, partner_pivots) = rref_mod(partner_block, p);

    for w in 1..=wmax.min(n) {
        let mut best: Option<Vec<i64>> = None;
        let mut support: Vec<usize> = (0..w).collect();
        loop {
            let restricted: Vec<Vec<i64>> = syndrome_block
                .iter()
                .map(|row| support.iter().map(|&c| row[c].rem_euclid(p_i)).collect())
                .collect();
            let kernel = kernel_basis_mod(&restricted, w, p);
            if !kernel.is_empty() {
                let mut coeffs = vec![0i64; kernel.len()];
                let aborted = !enumerate_kernel_combos(&mut coeffs, 0, p_i, &mut |cs| {
                    *counted += 1;
                    if *counted > budget {
                        return false;
                    }
                    let mut local = vec![0i64; w];
                    for (ci, &c) in cs.iter().enumerate() {
                        if c != 0 {
                            for (slot, bval) in kernel[ci].iter().enumerate() {
                                local[slot] = (local[slot] + c * bval).rem_euclid(p_i);
                            }
                        }
                    }
                    if local.contains(&0) {
                        return true; // weight < w; found at a smaller support
                    }
                    let mut full = vec![0i64; n];
                    for (slot, &t) in support.iter().enumerate() {
                        full[t] = local[slot];
                    }
                    if !in_row_space(&partner_rref, &partner_pivots, &full, p) {
                        consider_witness(&mut best, &full, p_i);
                    }
                    true
                });
                if aborted {
                    return match best {
                        Some(full) => side_witness(full, w, p, pure_x),
                        None => DistanceResult {
                            distance: Distance::AtLeast(w),
                            witness: None,
                            prime: p,
                        },
                    };
                }
            }
            if !next_combination(&mut support, n) {
                break;
            }
        }
        if let Some(full) = best {
            return side_witness(full, w, p, pure_x);
        }
    }
    DistanceResult {
        distance: Distance::AtLeast(wmax.min(n) + 1),
        witness: None,
        prime: p,
    }
}

fn side_witness(full: Vec<i64>, w: usize, p: u64, pure_x: bool) -> DistanceResult {
    let n = full.len();
    let (x, z) = if pure_x {
        (full, vec![0; n])
    } else {
        (vec![0; n], full)
    };
    let witness = PhiVector::new(x, z, Ring::Mod(p)).expect("equal halves");
    debug_assert_eq!(witness.weight(), w);
    DistanceResult {
        distance: Distance::Exact(w),
        witness: Some(witness),
        prime: p,
    }
}

/// Odometer over kernel coefficients with leading nonzero pinned to 1;
/// returns false when the visitor aborted.
fn enumerate_kernel_combos(
    coeffs: &mut Vec<i64>,
    slot: usize,
    p: i64,
    visit: &mut impl FnMut(&[i64]) -> bool,
) -> bool {
    if slot == coeffs.len() {
        if coeffs.iter().all(|&c| c == 0) {
            return true;
        }
        return visit(coeffs);
    }
    let leading_zero = coeffs[..slot].iter().all(|&c| c == 0);
    let range: Vec<i64> = if leading_zero {
        // First nonzero coefficient is 1; zero stays allowed.
        vec![0, 1]
    } else {
        (0..p).collect()
    };
    for c in range {
        coeffs[slot] = c;
        if !enumerate_kernel_combos(coeffs, slot + 1, p, visit) {
            return false;
        }
    }
    coeffs[slot] = 0;
    true
}

/// Classification of an error against a certified LDI code used over `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ErrorClass {
    /// Some syndrome is nonzero mod p.
    Detectable,
    /// Zero integer syndrome and inside the generated group mod p.
    InGroup,
    /// Zero integer syndrome but outside the group: invisible at every
    /// local dimension.
    Unavoidable,
    /// All syndromes vanish mod p while some are nonzero over the
    /// integers; invisibility is an artifact of this choice of p.
    Artifact { index: usize, value: i64 },
}

pub fn classify_error(ldi: &LdiCode, p: u64, e: &PhiVector) -> Result<ErrorClass, DistanceError> {
    if !is_prime(p) {
        return Err(DistanceError::NotPrime(p));
    }
    let (integer, reduced) = ldi.syndrome(e, p)?;
    if reduced.iter().any(|&v| v != 0) {
        return Ok(ErrorClass::Detectable);
    }
    if let Some(index) = integer.iter().position(|&v| v != 0) {
        return Ok(ErrorClass::Artifact {
            index,
            value: integer[index],
        });
    }
    let rows = ldi.rows();
    let (rref, pivots) = rref_mod(&rows, p);
    let member = in_row_space(&rref, &pivots, &e.reduce_mod(p).to_row(), p);
    Ok(if member {
        ErrorClass::InGroup
    } else {
        ErrorClass::Unavoidable
    })
}

/// Report of an exhaustive scan over all `w × w` minors of a block.
#[derive(Debug, Clone)]
pub struct MinorScanReport {
    pub rows: usize,
    pub cols: usize,
    pub w: usize,
    pub minor_count: u64,
    pub max_abs_det: u128,
    /// `ceil(B^w · w^{w/2})`, with B the block's largest absolute entry.
    pub hadamard_bound: BigUint,
    /// Minors with nonzero determinant divisible by p.
    pub artifact_minors: Vec<(Vec<usize>, Vec<usize>, i128)>,
}

/// Computes every `w × w` minor determinant exactly, flags artifact minors
/// (nonzero yet ≡ 0 mod p), and reports the Hadamard ceiling they all obey.
pub fn minor_scan(
    block: &[Vec<i64>],
    w: usize,
    p: u64,
    budget: u64,
) -> Result<MinorScanReport, DistanceError> {
    let rows = block.len();
    let cols = block.first().map_or(0, Vec::len);
    if w == 0 || w > rows.min(cols) {
        return Err(DistanceError::BadMinorSize { w, rows, cols });
    }
    let required = binomial(rows as u64, w as u64).saturating_mul(binomial(cols as u64, w as u64));
    if required > budget {
        return Err(DistanceError::BudgetExceeded { required, budget });
    }
    let b_block = block
        .iter()
        .flat_map(|r| r.iter().map(|&v| v.unsigned_abs()))
        .max()
        .unwrap_or(0);
    let hadamard_bound =
        ceil_sqrt(BigUint::from(b_block).pow(2 * w as u32) * BigUint::from(w as u64).pow(w as u32));

    let mut report = MinorScanReport {
        rows,
        cols,
        w,
        minor_count: 0,
        max_abs_det: 0,
        hadamard_bound,
        artifact_minors: Vec::new(),
    };
    let p_i = p as i128;
    let mut row_set: Vec<usize> = (0..w).collect();
    loop {
        let mut col_set: Vec<usize> = (0..w).collect();
        loop {
            let sub: Vec<Vec<i64>> = row_set
                .iter()
                .map(|&r| col_set.iter().map(|&c| block[r][c]).collect())
                .collect();
            let det = determinant_exact(&sub);
            report.minor_count += 1;
            report.max_abs_det = report.max_abs_det.max(det.unsigned_abs());
            if det != 0 && det.rem_euclid(p_i) == 0 {
                report
                    .artifact_minors
                    .push((row_set.clone(), col_set.clone(), det));
            }
            if !next_combination(&mut col_set, cols) {
                break;
            }
        }
        if !next_combination(&mut row_set, rows) {
            break;
        }
    }
    debug_assert!(BigUint::from(report.max_abs_det) <= report.hadamard_bound);
    Ok(report)
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

fn ceil_sqrt(x: BigUint) -> BigUint {
    let s = x.sqrt();
    if &s * &s == x {
        s
    } else {
        s + 1u32
    }
}
