//! Local-dimension-invariant forms: certification, the prescriptive
//! canonical-form transform, and a backtracking sign-assignment search.
//!
//! An integer generator matrix is LDI when every pairwise symplectic
//! product vanishes exactly over the integers, not merely mod q. Such a
//! matrix reduces to a valid stabilizer code over every prime modulus.

use crate::linalg::rank_mod;
use crate::phi::PhiVector;
use crate::ring::{is_prime, ResidueSystem, Ring};
use crate::stab::{CanonicalForm, CodeError, CssStructure, StabilizerCode};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LdiError {
    #[error("matrix is not LDI: {0} nonzero pairwise products (first at rows {1}, {2})")]
    Violations(usize, usize, usize),
    #[error("mod-{q} reduction is not a valid stabilizer code: {source}")]
    Reduction { q: u64, source: CodeError },
    #[error("{0} is not prime")]
    NotPrime(u64),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SignSearchError {
    #[error("no sign assignment with entries below the modulus exists")]
    Unsat,
    #[error("sign search exhausted its node budget ({nodes} nodes) before finding a solution")]
    BudgetExceeded { nodes: u64 },
}

/// Certification report for an integer generator matrix.
#[derive(Debug, Clone)]
pub struct LdiReport {
    pub n: usize,
    /// Largest absolute entry.
    pub b: i64,
    /// Full pairwise symplectic Gram matrix (antisymmetric).
    pub gram: Vec<Vec<i64>>,
    /// `(i, j, value)` for every `i < j` with a nonzero product.
    pub violations: Vec<(usize, usize, i64)>,
    /// True when every row is pure-X or pure-Z.
    pub css: bool,
}

impl LdiReport {
    pub fn certified(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Computes the full integer Gram matrix, the maximal entry, and the CSS
/// flag for flat `(x | z)` rows. Panics on ragged or odd-length rows;
/// user-facing input is validated before it reaches this point.
pub fn verify_rows(rows: &[Vec<i64>]) -> LdiReport {
    let width = rows.first().map_or(0, Vec::len);
    assert!(width.is_multiple_of(2), "rows must have even length");
    assert!(rows.iter().all(|r| r.len() == width), "ragged rows");
    let n = width / 2;
    let vectors: Vec<PhiVector> = rows
        .iter()
        .map(|r| PhiVector::from_row(r, Ring::Integers).expect("even length"))
        .collect();
    let r = vectors.len();
    let mut gram = vec![vec![0i64; r]; r];
    let mut violations = Vec::new();
    for i in 0..r {
        for j in 0..r {
            gram[i][j] = vectors[i].symplectic(&vectors[j]).expect("equal lengths");
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            if gram[i][j] != 0 {
                violations.push((i, j, gram[i][j]));
            }
        }
    }
    let b = rows
        .iter()
        .flat_map(|r| r.iter())
        .map(|&v| v.abs())
        .max()
        .unwrap_or(0);
    let css = vectors
        .iter()
        .all(|v| v.x().iter().all(|&e| e == 0) || v.z().iter().all(|&e| e == 0));
    LdiReport {
        n,
        b,
        gram,
        violations,
        css,
    }
}

/// An integer generator matrix certified LDI, remembering the prime it was
/// built over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LdiCode {
    origin_q: u64,
    n: usize,
    gens: Vec<PhiVector>,
}

impl LdiCode {
    /// Certifies flat integer rows: zero integer Gram, and a full-rank
    /// reduction mod `origin_q`.
    pub fn new(rows: Vec<Vec<i64>>, n: usize, origin_q: u64) -> Result<Self, LdiError> {
        if !is_prime(origin_q) {
            return Err(LdiError::NotPrime(origin_q));
        }
        for (idx, row) in rows.iter().enumerate() {
            assert!(row.len() == 2 * n, "row {idx} has wrong length");
        }
        let report = verify_rows(&rows);
        if let Some(&(i, j, _)) = report.violations.first() {
            return Err(LdiError::Violations(report.violations.len(), i, j));
        }
        if rank_mod(&rows, origin_q) != rows.len() {
            return Err(LdiError::Reduction {
                q: origin_q,
                source: CodeError::DependentRows,
            });
        }
        let gens = rows
            .iter()
            .map(|r| PhiVector::from_row(r, Ring::Integers).expect("length checked"))
            .collect();
        Ok(LdiCode { origin_q, n, gens })
    }

    pub fn origin_q(&self) -> u64 {
        self.origin_q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - self.gens.len()
    }

    pub fn generators(&self) -> &[PhiVector] {
        &self.gens
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.gens.iter().map(PhiVector::to_row).collect()
    }

    /// Largest absolute entry of the generator matrix.
    pub fn max_entry(&self) -> i64 {
        self.rows()
            .iter()
            .flat_map(|r| r.iter().map(|&v| v.abs()))
            .max()
            .unwrap_or(0)
    }

    pub fn report(&self) -> LdiReport {
        verify_rows(&self.rows())
    }

    /// Entrywise reduction into `{0, …, p−1}`. Commutation always carries
    /// over; rank can drop at primes other than the origin, which surfaces
    /// as `DependentRows`.
    pub fn reduce_mod(&self, p: u64) -> Result<StabilizerCode, CodeError> {
        StabilizerCode::new(self.rows(), self.n, p)
    }

    /// CSS partition of the integer rows, if every row is pure.
    pub fn css_structure(&self) -> Option<CssStructure> {
        let mut xblock = Vec::new();
        let mut zblock = Vec::new();
        for g in &self.gens {
            let x_zero = g.x().iter().all(|&v| v == 0);
            let z_zero = g.z().iter().all(|&v| v == 0);
            match (z_zero, x_zero) {
                (true, _) => xblock.push(g.x().to_vec()),
                (false, true) => zblock.push(g.z().to_vec()),
                _ => return None,
            }
        }
        Some(CssStructure {
            n: self.n,
            xblock,
            zblock,
            permutation: (0..self.n).collect(),
            dfts: Vec::new(),
        })
    }

    /// Integer syndromes of `e`, with reductions mod `p`.
    pub fn syndrome(&self, e: &PhiVector, p: u64) -> Result<(Vec<i64>, Vec<i64>), CodeError> {
        if e.n() != self.n {
            return Err(CodeError::LengthMismatch {
                expected: self.n,
                actual: e.n(),
            });
        }
        let integer: Vec<i64> = self
            .gens
            .iter()
            .map(|g| g.symplectic(e).expect("length checked"))
            .collect();
        let reduced = integer.iter().map(|&v| v.rem_euclid(p as i64)).collect();
        Ok((integer, reduced))
    }
}

/// Prescriptive transform: canonicalize, lift, then cancel the lower
/// triangle of the Gram matrix through the `Z₁` block. The output reduces
/// mod q to the canonicalized input and always certifies. Inputs whose
/// plain lift already certifies are returned untouched.
pub fn prescriptive_form(code: &StabilizerCode, system: ResidueSystem) -> (LdiCode, CanonicalForm) {
    let direct: Vec<Vec<i64>> = code
        .generators()
        .iter()
        .map(|g| g.lift(system).to_row())
        .collect();
    if verify_rows(&direct).certified() {
        let ldi = LdiCode::new(direct, code.n(), code.q()).expect("verified lift");
        let canonical = CanonicalForm {
            code: code.clone(),
            moves: Vec::new(),
            permutation: (0..code.n()).collect(),
        };
        return (ldi, canonical);
    }

    let canonical = code.canonical_form();
    let lifted: Vec<PhiVector> = canonical
        .code
        .generators()
        .iter()
        .map(|g| g.lift(system))
        .collect();
    let mut rows: Vec<Vec<i64>> = lifted.iter().map(PhiVector::to_row).collect();
    let n = code.n();
    for i in 0..lifted.len() {
        for j in 0..i {
            let product = lifted[i].symplectic(&lifted[j]).expect("equal lengths");
            rows[i][n + j] += product;
        }
    }
    let ldi = LdiCode::new(rows, n, code.q()).expect("prescriptive output always certifies");
    (ldi, canonical)
}

/// Options for the sign-assignment search.
#[derive(Debug, Clone, Copy)]
pub struct SignSearchOptions {
    /// Node budget: one node per candidate entry placement.
    pub budget: u64,
}

impl Default for SignSearchOptions {
    fn default() -> Self {
        SignSearchOptions {
            budget: default_budget(),
        }
    }
}

/// Default search budget, overridable through `LDIKIT_SEARCH_BUDGET`.
pub fn default_budget() -> u64 {
    std::env::var("LDIKIT_SEARCH_BUDGET")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(10_000_000)
}

/// Searches for integer lifts of each entry (same residue, absolute value
/// below q) that zero the whole Gram matrix. Depth-first over rows in
/// increasing index and entries left to right, candidates in ascending
/// numeric order, pruning on partial pair sums. Returns the certified
/// assignment with minimal largest entry, ties broken lexicographically.
pub fn sign_search(
    code: &StabilizerCode,
    opts: SignSearchOptions,
) -> Result<LdiCode, SignSearchError> {
    let rows: Vec<Vec<i64>> = code.rows();
    let searchable: Vec<usize> = (0..rows.len()).collect();
    let found = resign_rows(&rows, code.q(), &searchable, &[], opts)?;
    Ok(LdiCode::new(found, code.n(), code.q()).expect("search output verified"))
}

/// Restricted search: re-lift only `searchable` rows (entries taken mod q
/// first), keeping the rest fixed. `extra_constraints` rows participate in
/// the orthogonality constraints without being part of the output; the
/// family constructor uses this to pin row sums.
pub fn resign_rows(
    rows: &[Vec<i64>],
    q: u64,
    searchable: &[usize],
    extra_constraints: &[Vec<i64>],
    opts: SignSearchOptions,
) -> Result<Vec<Vec<i64>>, SignSearchError> {
    let width = rows.first().map_or(0, Vec::len);
    let n = width / 2;
    let q_i = q as i64;

    // Candidate lifts per searchable entry, ascending numeric order.
    let candidates_for = |v: i64| -> Vec<i64> {
        let residue = v.rem_euclid(q_i);
        if residue == 0 {
            vec![0]
        } else {
            vec![residue - q_i, residue]
        }
    };

    let mut search = Search {
        n,
        rows: rows.to_vec(),
        searchable: searchable.to_vec(),
        extra: extra_constraints.to_vec(),
        candidates: searchable
            .iter()
            .map(|&ri| rows[ri].iter().map(|&v| candidates_for(v)).collect())
            .collect(),
        nodes: 0,
        budget: opts.budget,
        best: None,
        fixed_b: rows
            .iter()
            .enumerate()
            .filter(|(i, _)| !searchable.contains(i))
            .flat_map(|(_, r)| r.iter().map(|&v| v.abs()))
            .max()
            .unwrap_or(0),
    };
    // Best reachable largest entry: used for early exit once attained.
    let floor = search
        .candidates
        .iter()
        .flatten()
        .map(|c| c.iter().map(|v| v.abs()).min().unwrap_or(0))
        .max()
        .unwrap_or(0)
        .max(search.fixed_b);

    let exhausted = search.run(0, 0, floor);
    match search.best {
        Some((_, _, rows)) => Ok(rows),
        None if exhausted => Err(SignSearchError::Unsat),
        None => Err(SignSearchError::BudgetExceeded {
            nodes: search.nodes,
        }),
    }
}

struct Search {
    n: usize,
    rows: Vec<Vec<i64>>,
    searchable: Vec<usize>,
    extra: Vec<Vec<i64>>,
    candidates: Vec<Vec<Vec<i64>>>,
    nodes: u64,
    budget: u64,
    /// (largest entry, lex key, full matrix) of the best solution so far.
    best: Option<(i64, Vec<i64>, Vec<Vec<i64>>)>,
    fixed_b: i64,
}

impl Search {
    /// Coefficient of entry `e` of row `u` in the symplectic product with
    /// row `v`: x-half entries couple to v's z-half, z-half entries couple
    /// to minus v's x-half.
    fn coefficient(&self, v: &[i64], e: usize) -> i64 {
        if e < self.n {
            v[self.n + e]
        } else {
            -v[e - self.n]
        }
    }

    /// Rows every searchable row `si` must be orthogonal to: fixed rows,
    /// extra constraint rows, and searchable rows assigned before it.
    fn constraint_rows(&self, si: usize) -> Vec<Vec<i64>> {
        let mut out: Vec<Vec<i64>> = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            match self.searchable.iter().position(|&s| s == i) {
                None => out.push(row.clone()),
                Some(pos) if pos < si => out.push(row.clone()),
                Some(_) => {}
            }
        }
        out.extend(self.extra.iter().cloned());
        out
    }

    /// Depth-first over searchable rows; returns true when the subtree was
    /// fully explored within budget.
    fn run(&mut self, si: usize, _depth: usize, floor: i64) -> bool {
        if si == self.searchable.len() {
            self.record_solution();
            return true;
        }
        let others = self.constraint_rows(si);
        let width = self.rows[0].len();
        // Remaining |coefficient| · max|candidate| capacity per constraint
        // row, suffix-summed so pruning is O(#constraints) per entry.
        let max_abs: Vec<i64> = (0..width)
            .map(|e| {
                self.candidates[si][e]
                    .iter()
                    .map(|v| v.abs())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let capacity: Vec<Vec<i64>> = others
            .iter()
            .map(|v| {
                let mut suffix = vec![0i64; width + 1];
                for e in (0..width).rev() {
                    suffix[e] = suffix[e + 1] + self.coefficient(v, e).abs() * max_abs[e];
                }
                suffix
            })
            .collect();
        let mut partial = vec![0i64; others.len()];
        let row_index = self.searchable[si];
        let original = self.rows[row_index].clone();
        let exhausted = self.assign_entries(si, 0, &others, &capacity, &mut partial, floor);
        self.rows[row_index] = original;
        exhausted
    }

    #[allow(clippy::too_many_arguments)]
    fn assign_entries(
        &mut self,
        si: usize,
        e: usize,
        others: &[Vec<i64>],
        capacity: &[Vec<i64>],
        partial: &mut Vec<i64>,
        floor: i64,
    ) -> bool {
        let width = self.rows[0].len();
        if e == width {
            if partial.iter().all(|&s| s == 0) {
                return self.run(si + 1, 0, floor);
            }
            return true;
        }
        let row_index = self.searchable[si];
        let cands = self.candidates[si][e].clone();
        let mut exhausted = true;
        for value in cands {
            if self.nodes >= self.budget {
                return false;
            }
            self.nodes += 1;
            let mut feasible = true;
            for (ci, v) in others.iter().enumerate() {
                let s = partial[ci] + self.coefficient(v, e) * value;
                if s.abs() > capacity[ci][e + 1] {
                    feasible = false;
                    break;
                }
            }
            if !feasible {
                continue;
            }
            for (ci, v) in others.iter().enumerate() {
                partial[ci] += self.coefficient(v, e) * value;
            }
            self.rows[row_index][e] = value;
            let sub = self.assign_entries(si, e + 1, others, capacity, partial, floor);
            for (ci, v) in others.iter().enumerate() {
                partial[ci] -= self.coefficient(v, e) * value;
            }
            if !sub {
                exhausted = false;
            }
            // Minimal B reached and lex order guarantees the first solution
            // is the tie-break winner: stop.
            if let Some((b, _, _)) = &self.best {
                if *b <= floor {
                    return exhausted;
                }
            }
        }
        exhausted
    }

    fn record_solution(&mut self) {
        let b = self
            .rows
            .iter()
            .flat_map(|r| r.iter().map(|&v| v.abs()))
            .max()
            .unwrap_or(0);
        let lex: Vec<i64> = self
            .searchable
            .iter()
            .flat_map(|&ri| self.rows[ri].iter().copied())
            .collect();
        let better = match &self.best {
            None => true,
            Some((bb, bl, _)) => b < *bb || (b == *bb && lex < *bl),
        };
        if better {
            self.best = Some((b, lex, self.rows.clone()));
        }
    }
}
