//! Stabilizer codes over a prime local dimension: validation, the
//! parameter-preserving move set, canonical-form reduction, CSS structure,
//! and syndrome computation.

use crate::linalg::{in_row_space, inv_mod, next_combination, rank_mod, rref_mod};
use crate::phi::PhiVector;
use crate::ring::{is_prime, ResidueSystem, Ring};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodeError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("row {row} has {actual} entries, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        actual: usize,
    },
    #[error("generators {i} and {j} do not commute (symplectic product {value} mod q)")]
    NonCommuting { i: usize, j: usize, value: i64 },
    #[error("generators are linearly dependent mod q")]
    DependentRows,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("row scale factor {0} is not in 1..q")]
    ScaleOutOfRange(i64),
    #[error("error vector has {actual} registers, code has {expected}")]
    LengthMismatch { expected: usize, actual: usize },
}

/// One of the parameter-preserving operations on a generator matrix.
///
/// `Dft` uses the convention `(x_i, z_i) → (−z_i, x_i)`: it preserves the
/// integer symplectic product exactly, and the opposite column choice
/// differs from it only by a row scaling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Move {
    RowSwap(usize, usize),
    RegisterSwap(usize, usize),
    RowScale(usize, i64),
    RowAdd { src: usize, dst: usize },
    Dft(usize),
}

impl std::fmt::Display for Move {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Move::RowSwap(i, j) => write!(f, "swap rows {i},{j}"),
            Move::RegisterSwap(i, j) => write!(f, "swap registers {i},{j}"),
            Move::RowScale(i, c) => write!(f, "scale row {i} by {c}"),
            Move::RowAdd { src, dst } => write!(f, "add row {src} to row {dst}"),
            Move::Dft(t) => write!(f, "dft register {t} ((x,z) -> (-z,x))"),
        }
    }
}

/// The result of canonical-form reduction: the code in `[I X₂ | Z₁ Z₂]`
/// shape, the move list that got there, and the register permutation those
/// moves applied (`permutation[new] = old`).
#[derive(Debug, Clone)]
pub struct CanonicalForm {
    pub code: StabilizerCode,
    pub moves: Vec<Move>,
    pub permutation: Vec<usize>,
}

/// CSS partition of a generator set: an X block and a Z block of plain
/// coefficient rows, plus the register permutation and DFT set that led to
/// this presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CssStructure {
    pub n: usize,
    pub xblock: Vec<Vec<i64>>,
    pub zblock: Vec<Vec<i64>>,
    pub permutation: Vec<usize>,
    pub dfts: Vec<usize>,
}

/// Integer syndromes of an error against each generator, with their mod-q
/// reductions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Syndrome {
    pub integer: Vec<i64>,
    pub reduced: Vec<i64>,
}

/// A validated stabilizer code: `n − k` independent, pairwise-commuting
/// generators over `Mod(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerCode {
    q: u64,
    n: usize,
    gens: Vec<PhiVector>,
}

impl StabilizerCode {
    /// Validates flat length-2n rows as a generator set. Entries are
    /// reduced mod q first; commutation is checked mod q and row indices in
    /// errors are 1-based.
    pub fn new(rows: Vec<Vec<i64>>, n: usize, q: u64) -> Result<Self, CodeError> {
        if !is_prime(q) {
            return Err(CodeError::NotPrime(q));
        }
        let ring = Ring::Mod(q);
        let mut gens = Vec::with_capacity(rows.len());
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != 2 * n {
                return Err(CodeError::RowLength {
                    row: idx + 1,
                    expected: 2 * n,
                    actual: row.len(),
                });
            }
            gens.push(PhiVector::from_row(row, ring).expect("even row length"));
        }
        Self::from_gens(gens, n, q)
    }

    pub fn from_gens(gens: Vec<PhiVector>, n: usize, q: u64) -> Result<Self, CodeError> {
        if !is_prime(q) {
            return Err(CodeError::NotPrime(q));
        }
        for (i, u) in gens.iter().enumerate() {
            for (j, v) in gens.iter().enumerate().skip(i + 1) {
                let s = u.symplectic(v).expect("equal lengths") % q as i64;
                if s.rem_euclid(q as i64) != 0 {
                    return Err(CodeError::NonCommuting {
                        i: i + 1,
                        j: j + 1,
                        value: s.rem_euclid(q as i64),
                    });
                }
            }
        }
        let rows: Vec<Vec<i64>> = gens.iter().map(PhiVector::to_row).collect();
        if rank_mod(&rows, q) != gens.len() {
            return Err(CodeError::DependentRows);
        }
        Ok(StabilizerCode { q, n, gens })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Protected qudits; the rank check at construction makes this exact.
    pub fn k(&self) -> usize {
        self.n - self.gens.len()
    }

    pub fn generators(&self) -> &[PhiVector] {
        &self.gens
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.gens.iter().map(PhiVector::to_row).collect()
    }

    /// Applies one move, producing a new code with identical `(n, k, q)`.
    pub fn apply_move(&self, m: Move) -> Result<StabilizerCode, CodeError> {
        let mut gens = self.gens.clone();
        apply_move_raw(&mut gens, self.n, self.q, m)?;
        Ok(StabilizerCode {
            q: self.q,
            n: self.n,
            gens,
        })
    }

    /// Gaussian elimination to `[I X₂ | Z₁ Z₂]` using only allowed moves.
    /// Pivots take the leftmost available x-column; when none exists a DFT
    /// converts a z-pivot. Always succeeds for validated codes.
    pub fn canonical_form(&self) -> CanonicalForm {
        let r = self.gens.len();
        let n = self.n;
        let q = self.q as i64;
        let mut work = self.gens.clone();
        let mut moves: Vec<Move> = Vec::new();
        let mut permutation: Vec<usize> = (0..n).collect();

        let push = |work: &mut Vec<PhiVector>, moves: &mut Vec<Move>, m: Move| {
            apply_move_raw(work, n, self.q, m).expect("internal move in range");
            moves.push(m);
        };

        for i in 0..r {
            let x_col = (i..n).find(|&c| (i..r).any(|row| work[row].x()[c] != 0));
            let col = match x_col {
                Some(c) => c,
                None => {
                    let c = (i..n)
                        .find(|&c| (i..r).any(|row| work[row].z()[c] != 0))
                        .expect("independent commuting rows always admit a pivot");
                    push(&mut work, &mut moves, Move::Dft(c));
                    c
                }
            };
            if col != i {
                push(&mut work, &mut moves, Move::RegisterSwap(i, col));
                permutation.swap(i, col);
            }
            let pivot_row = (i..r)
                .find(|&row| work[row].x()[i] != 0)
                .expect("pivot row");
            if pivot_row != i {
                push(&mut work, &mut moves, Move::RowSwap(i, pivot_row));
            }
            let pivot = work[i].x()[i];
            if pivot != 1 {
                push(
                    &mut work,
                    &mut moves,
                    Move::RowScale(i, inv_mod(pivot, self.q)),
                );
            }
            for j in 0..r {
                if j == i {
                    continue;
                }
                let a = work[j].x()[i];
                if a == 0 {
                    continue;
                }
                let c = (q - a).rem_euclid(q);
                if c == 1 {
                    push(&mut work, &mut moves, Move::RowAdd { src: i, dst: j });
                } else {
                    push(&mut work, &mut moves, Move::RowScale(i, c));
                    push(&mut work, &mut moves, Move::RowAdd { src: i, dst: j });
                    push(&mut work, &mut moves, Move::RowScale(i, inv_mod(c, self.q)));
                }
            }
        }

        CanonicalForm {
            code: StabilizerCode {
                q: self.q,
                n,
                gens: work,
            },
            moves,
            permutation,
        }
    }

    /// The CSS partition if every generator is already pure-X or pure-Z.
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

    /// Searches for a CSS presentation over per-register DFT subsets plus
    /// row elimination. Exhaustive over subsets for n ≤ 20, greedy descent
    /// beyond that; returns the first presentation found with its move
    /// list, or `None` when the search space is exhausted.
    pub fn to_css(&self) -> Option<(StabilizerCode, Vec<Move>)> {
        if self.css_structure().is_some() {
            return Some((self.clone(), Vec::new()));
        }
        if self.n <= 20 {
            // Subsets ordered by size then numeric value: first hit is the
            // smallest DFT set.
            for size in 0..=self.n {
                let mut subset: Vec<usize> = (0..size).collect();
                loop {
                    if let Some(found) = self.try_css_subset(&subset) {
                        return Some(found);
                    }
                    if !next_combination(&mut subset, self.n) {
                        break;
                    }
                }
            }
            None
        } else {
            self.to_css_greedy()
        }
    }

    fn try_css_subset(&self, subset: &[usize]) -> Option<(StabilizerCode, Vec<Move>)> {
        let mut work = self.gens.clone();
        let mut moves = Vec::new();
        for &t in subset {
            apply_move_raw(&mut work, self.n, self.q, Move::Dft(t)).ok()?;
            moves.push(Move::Dft(t));
        }
        if css_eliminate(&mut work, self.n, self.q, &mut moves) {
            Some((
                StabilizerCode {
                    q: self.q,
                    n: self.n,
                    gens: work,
                },
                moves,
            ))
        } else {
            None
        }
    }

    // Beyond the exhaustive range: flip one register at a time while the
    // count of inseparable rows improves. Heuristic only.
    fn to_css_greedy(&self) -> Option<(StabilizerCode, Vec<Move>)> {
        let mut subset: Vec<usize> = Vec::new();
        let mut best = self.css_badness(&subset);
        loop {
            if best == 0 {
                return self.try_css_subset(&subset);
            }
            let mut improved = false;
            for t in 0..self.n {
                let mut trial = subset.clone();
                match trial.binary_search(&t) {
                    Ok(pos) => {
                        trial.remove(pos);
                    }
                    Err(pos) => trial.insert(pos, t),
                }
                let score = self.css_badness(&trial);
                if score < best {
                    best = score;
                    subset = trial;
                    improved = true;
                    break;
                }
            }
            if !improved {
                return None;
            }
        }
    }

    fn css_badness(&self, subset: &[usize]) -> usize {
        let mut work = self.gens.clone();
        for &t in subset {
            apply_move_raw(&mut work, self.n, self.q, Move::Dft(t)).expect("register in range");
        }
        let mut moves = Vec::new();
        css_residual(&mut work, self.n, self.q, &mut moves)
    }

    /// Integer syndromes of `e` against the symmetric integer lifts of the
    /// generators, plus their mod-q reductions.
    pub fn syndrome(&self, e: &PhiVector) -> Result<Syndrome, CodeError> {
        if e.n() != self.n {
            return Err(CodeError::LengthMismatch {
                expected: self.n,
                actual: e.n(),
            });
        }
        let q = self.q as i64;
        let mut integer = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let lifted = g.lift(ResidueSystem::Symmetric);
            integer.push(lifted.symplectic(e).expect("length checked"));
        }
        let reduced = integer.iter().map(|&v| v.rem_euclid(q)).collect();
        Ok(Syndrome { integer, reduced })
    }

    /// Membership of `e` in the generated group mod q.
    pub fn contains(&self, e: &PhiVector) -> bool {
        let rows = self.rows();
        let (rref, pivots) = rref_mod(&rows, self.q);
        in_row_space(&rref, &pivots, &e.reduce_mod(self.q).to_row(), self.q)
    }

    pub fn row_space_equals(&self, other: &StabilizerCode) -> bool {
        self.q == other.q
            && self.n == other.n
            && crate::linalg::row_spaces_equal(&self.rows(), &other.rows(), self.q)
    }
}

/// Applies `m` in place. Shared by the public API and the elimination
/// routines so the same code path is always exercised.
fn apply_move_raw(gens: &mut [PhiVector], n: usize, q: u64, m: Move) -> Result<(), CodeError> {
    let r = gens.len();
    let ring = Ring::Mod(q);
    let row_in_range = |i: usize| -> Result<(), CodeError> {
        if i < r {
            Ok(())
        } else {
            Err(CodeError::IndexOutOfRange(format!("row {i} of {r}")))
        }
    };
    let reg_in_range = |t: usize| -> Result<(), CodeError> {
        if t < n {
            Ok(())
        } else {
            Err(CodeError::IndexOutOfRange(format!("register {t} of {n}")))
        }
    };
    match m {
        Move::RowSwap(i, j) => {
            row_in_range(i)?;
            row_in_range(j)?;
            gens.swap(i, j);
        }
        Move::RegisterSwap(a, b) => {
            reg_in_range(a)?;
            reg_in_range(b)?;
            for g in gens.iter_mut() {
                let mut x = g.x().to_vec();
                let mut z = g.z().to_vec();
                x.swap(a, b);
                z.swap(a, b);
                *g = PhiVector::new(x, z, ring).expect("same lengths");
            }
        }
        Move::RowScale(i, c) => {
            row_in_range(i)?;
            if c.rem_euclid(q as i64) == 0 {
                return Err(CodeError::ScaleOutOfRange(c));
            }
            gens[i] = gens[i].scale(c);
        }
        Move::RowAdd { src, dst } => {
            row_in_range(src)?;
            row_in_range(dst)?;
            if src == dst {
                return Err(CodeError::IndexOutOfRange("row added to itself".into()));
            }
            gens[dst] = gens[dst].compose(&gens[src]).expect("same ring");
        }
        Move::Dft(t) => {
            reg_in_range(t)?;
            for g in gens.iter_mut() {
                let mut x = g.x().to_vec();
                let mut z = g.z().to_vec();
                let (xt, zt) = (x[t], z[t]);
                x[t] = ring.reduce(-zt);
                z[t] = xt;
                *g = PhiVector::new(x, z, ring).expect("same lengths");
            }
        }
    }
    Ok(())
}

/// Row-eliminates `work` into pure-X plus pure-Z rows, logging the moves.
/// Returns false (leaving partial progress in `work`) when no CSS basis
/// exists for this DFT choice.
fn css_eliminate(work: &mut Vec<PhiVector>, n: usize, q: u64, moves: &mut Vec<Move>) -> bool {
    css_residual(work, n, q, moves) == 0
}

/// Same elimination, returning how many rows could not be separated.
fn css_residual(work: &mut Vec<PhiVector>, n: usize, q: u64, moves: &mut Vec<Move>) -> usize {
    let r = work.len();
    let q_i = q as i64;
    let push = |work: &mut Vec<PhiVector>, moves: &mut Vec<Move>, m: Move| {
        apply_move_raw(work, n, q, m).expect("internal move in range");
        moves.push(m);
    };
    // Scaled row addition c·src -> dst out of allowed moves.
    let add_scaled =
        |work: &mut Vec<PhiVector>, moves: &mut Vec<Move>, src: usize, dst: usize, c: i64| {
            let c = c.rem_euclid(q_i);
            if c == 0 {
                return;
            }
            if c == 1 {
                push(work, moves, Move::RowAdd { src, dst });
            } else {
                push(work, moves, Move::RowScale(src, c));
                push(work, moves, Move::RowAdd { src, dst });
                push(work, moves, Move::RowScale(src, inv_mod(c, q)));
            }
        };

    // Phase 1: RREF on the z-halves. Rows used as pivots collect at the
    // top; everything below ends with a zero z-half, i.e. pure X.
    let mut z_rank = 0;
    for col in 0..n {
        let Some(pivot) = (z_rank..r).find(|&row| work[row].z()[col] != 0) else {
            continue;
        };
        if pivot != z_rank {
            push(work, moves, Move::RowSwap(z_rank, pivot));
        }
        let val = work[z_rank].z()[col];
        if val != 1 {
            push(work, moves, Move::RowScale(z_rank, inv_mod(val, q)));
        }
        for row in 0..r {
            if row != z_rank {
                let coeff = work[row].z()[col];
                add_scaled(work, moves, z_rank, row, -coeff);
            }
        }
        z_rank += 1;
        if z_rank == r {
            break;
        }
    }

    // Phase 2: clear the x-halves of the z-pivot rows using the pure-X
    // rows below. First RREF the pure-X rows on their x-halves.
    let mut x_rank = z_rank;
    for col in 0..n {
        let Some(pivot) = (x_rank..r).find(|&row| work[row].x()[col] != 0) else {
            continue;
        };
        if pivot != x_rank {
            push(work, moves, Move::RowSwap(x_rank, pivot));
        }
        let val = work[x_rank].x()[col];
        if val != 1 {
            push(work, moves, Move::RowScale(x_rank, inv_mod(val, q)));
        }
        for row in z_rank..r {
            if row != x_rank {
                let coeff = work[row].x()[col];
                add_scaled(work, moves, x_rank, row, -coeff);
            }
        }
        for row in 0..z_rank {
            let coeff = work[row].x()[col];
            add_scaled(work, moves, x_rank, row, -coeff);
        }
        x_rank += 1;
        if x_rank == r {
            break;
        }
    }

    (0..z_rank)
        .filter(|&row| work[row].x().iter().any(|&v| v != 0))
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steane;

    fn two_register_code() -> StabilizerCode {
        StabilizerCode::new(vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]], 2, 2).unwrap()
    }

    fn steane_css() -> StabilizerCode {
        StabilizerCode::new(steane::css_binary(), 7, 2).unwrap()
    }

    #[test]
    fn new_code_accepts_commuting_rows() {
        let code = two_register_code();
        assert_eq!(code.n(), 2);
        assert_eq!(code.k(), 0);
    }

    #[test]
    fn new_code_rejects_noncommuting_over_three() {
        let err = StabilizerCode::new(vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]], 2, 3).unwrap_err();
        assert_eq!(
            err,
            CodeError::NonCommuting {
                i: 1,
                j: 2,
                value: 2
            }
        );
    }

    #[test]
    fn new_code_rejects_dependent_rows() {
        let err = StabilizerCode::new(vec![vec![1, 1, 0, 0], vec![1, 1, 0, 0]], 2, 2).unwrap_err();
        assert_eq!(err, CodeError::DependentRows);
    }

    #[test]
    fn new_code_rejects_composite_modulus() {
        assert_eq!(
            StabilizerCode::new(vec![], 2, 4).unwrap_err(),
            CodeError::NotPrime(4)
        );
    }

    #[test]
    fn steane_is_a_7_1_code() {
        let code = steane_css();
        assert_eq!((code.n(), code.k(), code.q()), (7, 1, 2));
    }

    #[test]
    fn row_swap_is_involutive() {
        let code = two_register_code();
        let once = code.apply_move(Move::RowSwap(0, 1)).unwrap();
        let twice = once.apply_move(Move::RowSwap(0, 1)).unwrap();
        assert_eq!(code, twice);
        assert_ne!(code, once);
    }

    #[test]
    fn dft_twice_negates_register() {
        let code = steane_css();
        let twice = code
            .apply_move(Move::Dft(3))
            .unwrap()
            .apply_move(Move::Dft(3))
            .unwrap();
        // Over mod 2 negation is the identity.
        assert_eq!(code, twice);

        let code3 = StabilizerCode::new(vec![vec![1, 1, 0, 0], vec![0, 0, 1, 2]], 2, 3).unwrap();
        let twice3 = code3
            .apply_move(Move::Dft(1))
            .unwrap()
            .apply_move(Move::Dft(1))
            .unwrap();
        for (orig, new) in code3.generators().iter().zip(twice3.generators()) {
            let (x0, z0) = orig.register(1);
            let (x1, z1) = new.register(1);
            assert_eq!(x1, (-x0).rem_euclid(3));
            assert_eq!(z1, (-z0).rem_euclid(3));
            assert_eq!(orig.register(0), new.register(0));
        }
    }

    #[test]
    fn dft_preserves_symplectic_products() {
        let code = steane_css();
        let moved = code.apply_move(Move::Dft(4)).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let before = code.generators()[i]
                    .symplectic(&code.generators()[j])
                    .unwrap();
                let after = moved.generators()[i]
                    .symplectic(&moved.generators()[j])
                    .unwrap();
                assert_eq!(
                    before.rem_euclid(2),
                    after.rem_euclid(2),
                    "pair ({i},{j}) changed commutation"
                );
            }
        }
    }

    #[test]
    fn moves_preserve_parameters() {
        let code = steane_css();
        for m in [
            Move::RowSwap(0, 5),
            Move::RegisterSwap(1, 6),
            Move::RowAdd { src: 0, dst: 2 },
            Move::Dft(0),
        ] {
            let moved = code.apply_move(m).unwrap();
            assert_eq!((moved.n(), moved.k(), moved.q()), (7, 1, 2));
        }
    }

    #[test]
    fn move_index_errors() {
        let code = two_register_code();
        assert!(matches!(
            code.apply_move(Move::RowSwap(0, 9)),
            Err(CodeError::IndexOutOfRange(_))
        ));
        assert!(matches!(
            code.apply_move(Move::Dft(2)),
            Err(CodeError::IndexOutOfRange(_))
        ));
        assert!(matches!(
            code.apply_move(Move::RowScale(0, 2)),
            Err(CodeError::ScaleOutOfRange(2))
        ));
    }

    #[test]
    fn canonical_form_of_canonical_input_is_a_fixed_point() {
        let rows: Vec<Vec<i64>> = steane::ldi_canonical()
            .iter()
            .map(|r| r.iter().map(|&v| v.rem_euclid(2)).collect())
            .collect();
        let code = StabilizerCode::new(rows, 7, 2).unwrap();
        let canonical = code.canonical_form();
        assert!(canonical.moves.is_empty());
        assert_eq!(canonical.code, code);
        assert_eq!(canonical.permutation, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn canonical_form_leaves_identity_block_codes_alone() {
        // [I | 0 0 0] with k = 2.
        let rows = vec![vec![1, 0, 0, 0, 0, 0], vec![0, 1, 0, 0, 0, 0]];
        let code = StabilizerCode::new(rows, 3, 5).unwrap();
        let canonical = code.canonical_form();
        assert!(canonical.moves.is_empty());
        assert_eq!(canonical.code, code);
    }

    #[test]
    fn canonical_form_uses_dft_for_pure_z_rows() {
        let code = two_register_code();
        let canonical = code.canonical_form();
        assert!(canonical.moves.iter().any(|m| matches!(m, Move::Dft(_))));
        // Leading 2x2 x-block is the identity.
        for i in 0..2 {
            for j in 0..2 {
                let expected = i64::from(i == j);
                assert_eq!(canonical.code.generators()[i].x()[j], expected);
            }
        }
    }

    #[test]
    fn canonical_form_is_idempotent() {
        for code in [two_register_code(), steane_css()] {
            let first = code.canonical_form();
            let second = first.code.canonical_form();
            assert!(second.moves.is_empty());
            assert_eq!(first.code, second.code);
        }
    }

    #[test]
    fn css_structure_detects_blocks() {
        let css = steane_css().css_structure().expect("pure generators");
        assert_eq!(css.xblock.len(), 3);
        assert_eq!(css.zblock.len(), 3);
        assert_eq!(css.xblock[0], vec![1, 1, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn css_structure_rejects_mixed_rows() {
        let rows: Vec<Vec<i64>> = steane::ldi_canonical()
            .iter()
            .map(|r| r.iter().map(|&v| v.rem_euclid(2)).collect())
            .collect();
        let code = StabilizerCode::new(rows, 7, 2).unwrap();
        assert!(code.css_structure().is_none());
    }

    #[test]
    fn css_structure_of_empty_code() {
        let code = StabilizerCode::new(vec![], 1, 2).unwrap();
        let css = code.css_structure().unwrap();
        assert!(css.xblock.is_empty() && css.zblock.is_empty());
    }

    #[test]
    fn to_css_on_css_input_is_identity() {
        let code = steane_css();
        let (out, moves) = code.to_css().unwrap();
        assert!(moves.is_empty());
        assert_eq!(out, code);
    }

    #[test]
    fn five_qubit_code_has_no_css_presentation() {
        // Cyclic XZZXI.
        let base = [1, 0, 0, 1, 0, /**/ 0, 1, 1, 0, 0];
        let rows: Vec<Vec<i64>> = (0..4)
            .map(|shift| {
                let mut row = vec![0i64; 10];
                for t in 0..5 {
                    row[(t + shift) % 5] = base[t];
                    row[5 + (t + shift) % 5] = base[5 + t];
                }
                row
            })
            .collect();
        let code = StabilizerCode::new(rows, 5, 2).unwrap();
        assert_eq!(code.k(), 1);
        assert!(code.to_css().is_none());
    }

    #[test]
    fn to_css_greedy_handles_large_registers() {
        // 21 registers puts the search past the exhaustive range; a single
        // DFT-scrambled pure-X generator is recovered greedily.
        let n = 21;
        let mut row = vec![0i64; 2 * n];
        row[0] = 1;
        row[1] = 1;
        let code = StabilizerCode::new(vec![row], n, 2).unwrap();
        let scrambled = code.apply_move(Move::Dft(0)).unwrap();
        assert!(scrambled.css_structure().is_none());
        let (fixed, moves) = scrambled.to_css().expect("greedy finds the flip");
        assert!(fixed.css_structure().is_some());
        assert!(moves.iter().any(|m| matches!(m, Move::Dft(0))));
    }

    #[test]
    fn syndrome_values() {
        let code = StabilizerCode::new(vec![vec![1, 1, 0, 0]], 2, 2).unwrap();
        let ring = Ring::Mod(2);
        let detectable = PhiVector::new(vec![0, 0], vec![1, 0], ring).unwrap();
        let s = code.syndrome(&detectable).unwrap();
        assert_eq!((s.integer, s.reduced), (vec![1], vec![1]));

        let hidden = PhiVector::new(vec![0, 0], vec![1, 1], ring).unwrap();
        let s = code.syndrome(&hidden).unwrap();
        assert_eq!((s.integer, s.reduced), (vec![2], vec![0]));
    }

    #[test]
    fn syndrome_of_generator_is_zero_mod_q() {
        let code = steane_css();
        for g in code.generators() {
            let s = code.syndrome(g).unwrap();
            assert!(s.reduced.iter().all(|&v| v == 0));
        }
    }

    #[test]
    fn syndrome_rejects_length_mismatch() {
        let code = two_register_code();
        let e = PhiVector::zero(3, Ring::Mod(2));
        assert!(matches!(
            code.syndrome(&e),
            Err(CodeError::LengthMismatch {
                expected: 2,
                actual: 3
            })
        ));
    }

    #[test]
    fn membership() {
        let code = two_register_code();
        let sum = code.generators()[0].compose(&code.generators()[1]).unwrap();
        assert!(code.contains(&sum));
        let outside = PhiVector::new(vec![1, 0], vec![0, 0], Ring::Mod(2)).unwrap();
        assert!(!code.contains(&outside));
    }
}
