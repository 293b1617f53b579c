//! The binary quantum Hamming family `[[2^N−1, 2^N−1−2N, 3]]` as a B = 1
//! integer-entried family usable over every prime local dimension.
//!
//! The X side is the plain parity-check matrix of the classical Hamming
//! code (columns are the nonzero N-bit strings in ascending order, most
//! significant bit in row 0). The Z side is built inductively: a verified
//! seven-register base, one fresh signed row per level, and doubled copies
//! of the previous level's rows. Every inductive candidate goes through the
//! verifier, and rows it rejects are repaired by a restricted sign search;
//! nothing is trusted by construction alone.

use crate::distance::{css_distance, CssDistances, Distance, DistanceError};
use crate::ldi::{resign_rows, verify_rows, LdiCode, LdiError, SignSearchError, SignSearchOptions};
use crate::stab::{CodeError, StabilizerCode};
use crate::steane;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("family members need at least {required} parity bits, got {got}")]
    BitsTooSmall { required: usize, got: usize },
    #[error("repair search failed at level {bits}: {source}")]
    RepairFailed {
        bits: usize,
        source: SignSearchError,
    },
    #[error("level {bits} candidate still fails verification after repair")]
    Unrepaired { bits: usize },
    #[error(transparent)]
    Ldi(#[from] LdiError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
    #[error("distance anomaly at prime {p}: dX = {dx}, dZ = {dz} (expected exactly 3)")]
    DistanceAnomaly { p: u64, dx: Distance, dz: Distance },
}

/// Parity-check matrix of the classical Hamming code: columns 1..2^bits−1
/// in ascending numeric order, most significant bit in row 0. Any other
/// column order differs by register swaps.
pub fn parity_check_matrix(bits: usize) -> Result<Vec<Vec<i64>>, FamilyError> {
    if bits < 2 {
        return Err(FamilyError::BitsTooSmall {
            required: 2,
            got: bits,
        });
    }
    let n = (1usize << bits) - 1;
    Ok((0..bits)
        .map(|r| {
            (1..=n)
                .map(|value| ((value >> (bits - 1 - r)) & 1) as i64)
                .collect()
        })
        .collect())
}

/// The CSS member over qubits: the parity rows as pure-X generators and
/// again as pure-Z generators.
pub fn hamming_css(bits: usize) -> Result<StabilizerCode, FamilyError> {
    if bits < 3 {
        return Err(FamilyError::BitsTooSmall {
            required: 3,
            got: bits,
        });
    }
    let parity = parity_check_matrix(bits)?;
    let n = (1usize << bits) - 1;
    let zeros = vec![0i64; n];
    let mut rows = Vec::with_capacity(2 * bits);
    for row in &parity {
        let mut flat = row.clone();
        flat.extend_from_slice(&zeros);
        rows.push(flat);
    }
    for row in &parity {
        let mut flat = zeros.clone();
        flat.extend_from_slice(row);
        rows.push(flat);
    }
    Ok(StabilizerCode::new(rows, n, 2)?)
}

/// Which first-row sign pattern certified at a level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowPattern {
    /// Seven-register base member; no fresh row.
    Base,
    /// `(−1 1)` alternation over ascending column positions.
    PositionAlternating,
    /// Sign keyed to the parity of the column value's popcount — the same
    /// alternation transported through the recursive column order.
    ParityKeyed,
}

#[derive(Debug, Clone)]
pub struct LevelLog {
    pub bits: usize,
    pub pattern: RowPattern,
    /// Generator indices the verifier rejected and the sign search
    /// re-signed.
    pub repaired_rows: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct HammingLdi {
    pub code: LdiCode,
    pub levels: Vec<LevelLog>,
}

/// Builds the B = 1 integer member for `bits ≥ 3`, certifying every level.
pub fn hamming_ldi(bits: usize) -> Result<HammingLdi, FamilyError> {
    if bits < 3 {
        return Err(FamilyError::BitsTooSmall {
            required: 3,
            got: bits,
        });
    }
    let mut levels = vec![LevelLog {
        bits: 3,
        pattern: RowPattern::Base,
        repaired_rows: Vec::new(),
    }];
    let mut z_rows: Vec<Vec<i64>> = base_z_rows();

    for level in 4..=bits {
        let half = 1usize << (level - 1);
        let n = 2 * half - 1;
        let doubled: Vec<Vec<i64>> = z_rows
            .iter()
            .map(|z| {
                let mut row = vec![0i64; n];
                for (t, &v) in z.iter().enumerate() {
                    row[t] = v; // value t+1
                    row[half + t] = v; // value half + t + 1
                }
                row
            })
            .collect();

        let mut accepted: Option<(RowPattern, Vec<Vec<i64>>, Vec<usize>)> = None;
        for pattern in [RowPattern::PositionAlternating, RowPattern::ParityKeyed] {
            let fresh = first_row(pattern, half, n);
            let fresh_index = level; // after the `level` pure-X rows
            let mut candidate = assemble(level, n, &fresh, &doubled)?;
            let report = verify_rows(&candidate);
            if report.certified() {
                accepted = Some((pattern, candidate, Vec::new()));
                break;
            }
            let offenders: Vec<usize> = violating_z_rows(&report.violations, level);
            if offenders.contains(&fresh_index) {
                continue; // the fresh row itself fails under this pattern
            }
            // Re-sign only the rejected rows. The extra all-ones pure-X
            // constraint pins their row sums to zero, which the next
            // level's fresh X row will demand anyway.
            let mut all_ones = vec![1i64; n];
            all_ones.extend(std::iter::repeat_n(0, n));
            candidate = resign_rows(
                &candidate,
                2,
                &offenders,
                &[all_ones],
                SignSearchOptions::default(),
            )
            .map_err(|source| FamilyError::RepairFailed {
                bits: level,
                source,
            })?;
            if !verify_rows(&candidate).certified() {
                return Err(FamilyError::Unrepaired { bits: level });
            }
            accepted = Some((pattern, candidate, offenders));
            break;
        }
        let (pattern, candidate, repaired) =
            accepted.ok_or(FamilyError::Unrepaired { bits: level })?;
        z_rows = candidate[level..]
            .iter()
            .map(|row| row[n..].to_vec())
            .collect();
        levels.push(LevelLog {
            bits: level,
            pattern,
            repaired_rows: repaired,
        });
    }

    let n = (1usize << bits) - 1;
    let rows = assemble(bits, n, &[], &z_rows)?;
    let code = LdiCode::new(rows, n, 2)?;
    Ok(HammingLdi { code, levels })
}

/// Stacks parity X rows over the given z-half rows (fresh row first).
fn assemble(
    bits: usize,
    n: usize,
    fresh: &[i64],
    z_rows: &[Vec<i64>],
) -> Result<Vec<Vec<i64>>, FamilyError> {
    let parity = parity_check_matrix(bits)?;
    let zeros = vec![0i64; n];
    let mut rows = Vec::with_capacity(2 * bits);
    for row in &parity {
        let mut flat = row.clone();
        flat.extend_from_slice(&zeros);
        rows.push(flat);
    }
    let push_z = |z: &[i64], rows: &mut Vec<Vec<i64>>| {
        let mut flat = zeros.clone();
        flat.extend_from_slice(z);
        rows.push(flat);
    };
    if !fresh.is_empty() {
        push_z(fresh, &mut rows);
    }
    for z in z_rows {
        push_z(z, &mut rows);
    }
    Ok(rows)
}

/// Fresh first Z row for a level: supported on column values ≥ `half`.
fn first_row(pattern: RowPattern, half: usize, n: usize) -> Vec<i64> {
    let mut row = vec![0i64; n];
    match pattern {
        RowPattern::Base => unreachable!("base level has no fresh row"),
        RowPattern::PositionAlternating => {
            row[half - 1] = 1; // value `half`
            for t in 1..half {
                row[half - 1 + t] = if t % 2 == 1 { -1 } else { 1 };
            }
        }
        RowPattern::ParityKeyed => {
            for value in half..=n {
                row[value - 1] = if (value as u32).count_ones() % 2 == 1 {
                    1
                } else {
                    -1
                };
            }
        }
    }
    row
}

fn violating_z_rows(violations: &[(usize, usize, i64)], bits: usize) -> Vec<usize> {
    let mut rows: Vec<usize> = violations
        .iter()
        .flat_map(|&(i, j, _)| [i, j])
        .filter(|&r| r >= bits) // Z rows sit below the `bits` X rows
        .collect();
    rows.sort_unstable();
    rows.dedup();
    rows
}

/// Z-half rows of the seven-register base: the certified CSS fixture with
/// its registers sorted into ascending column-value order.
fn base_z_rows() -> Vec<Vec<i64>> {
    let fixture = steane::ldi_css();
    let n = 7;
    // Column values read off the three X rows, most significant first.
    let perm = {
        let mut order: Vec<usize> = (0..n).collect();
        let value =
            |col: usize| -> i64 { fixture[0][col] * 4 + fixture[1][col] * 2 + fixture[2][col] };
        order.sort_by_key(|&c| value(c));
        order
    };
    fixture[3..6]
        .iter()
        .map(|row| perm.iter().map(|&c| row[n + c]).collect())
        .collect()
}

/// Per-prime certification of a family member.
#[derive(Debug, Clone)]
pub struct FamilyReport {
    pub bits: usize,
    pub n: usize,
    pub k: usize,
    pub max_entry: i64,
    pub rows: Vec<(u64, CssDistances)>,
}

/// Reduces the member at each prime and demands block distance exactly 3 on
/// both sides. Weight-3 kernel vectors always exist (columns c, c', c⊕c'
/// with coefficients 1, 1, −1), so any other outcome is a hard error.
pub fn certify_family_member(
    bits: usize,
    primes: &[u64],
    wmax: usize,
    budget: u64,
) -> Result<(HammingLdi, FamilyReport), FamilyError> {
    let member = hamming_ldi(bits)?;
    let css = member.code.css_structure().expect("family members are CSS");
    let mut rows = Vec::with_capacity(primes.len());
    for &p in primes {
        let d = css_distance(&css, p, wmax, budget)?;
        if d.x.distance != Distance::Exact(3) || d.z.distance != Distance::Exact(3) {
            return Err(FamilyError::DistanceAnomaly {
                p,
                dx: d.x.distance,
                dz: d.z.distance,
            });
        }
        rows.push((p, d));
    }
    let report = FamilyReport {
        bits,
        n: member.code.n(),
        k: member.code.k(),
        max_entry: member.code.max_entry(),
        rows,
    };
    Ok((member, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::row_spaces_equal;

    #[test]
    fn parity_columns_enumerate_nonzero_strings() {
        for bits in [2usize, 3, 4] {
            let h = parity_check_matrix(bits).unwrap();
            let n = (1 << bits) - 1;
            assert_eq!(h.len(), bits);
            assert_eq!(h[0].len(), n);
            let mut values: Vec<u32> = (0..n)
                .map(|c| (0..bits).fold(0u32, |acc, r| (acc << 1) | h[r][c] as u32))
                .collect();
            values.sort_unstable();
            assert_eq!(values, (1..=n as u32).collect::<Vec<_>>());
        }
    }

    #[test]
    fn parity_check_rejects_tiny_sizes() {
        assert!(matches!(
            parity_check_matrix(1),
            Err(FamilyError::BitsTooSmall {
                required: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn css_member_parameters() {
        let steane = hamming_css(3).unwrap();
        assert_eq!((steane.n(), steane.k(), steane.q()), (7, 1, 2));
        let fifteen = hamming_css(4).unwrap();
        assert_eq!((fifteen.n(), fifteen.k()), (15, 7));
        let thirty_one = hamming_css(5).unwrap();
        assert_eq!((thirty_one.n(), thirty_one.k()), (31, 21));
        assert!(matches!(
            hamming_css(2),
            Err(FamilyError::BitsTooSmall { .. })
        ));
    }

    #[test]
    fn css_member_matches_sorted_fixture() {
        // Sorting the fixture's registers by column value reproduces the
        // ascending-order member exactly, up to the Z-row basis.
        let steane = hamming_css(3).unwrap();
        let fixture = StabilizerCode::new(crate::steane::css_binary(), 7, 2).unwrap();
        // Fixture column order is (4,7,6,5,3,2,1); sort it ascending.
        let perm = [6usize, 5, 4, 0, 3, 2, 1];
        let sorted: Vec<Vec<i64>> = fixture
            .rows()
            .iter()
            .map(|row| {
                let mut out = vec![0i64; 14];
                for (new, &old) in perm.iter().enumerate() {
                    out[new] = row[old];
                    out[7 + new] = row[7 + old];
                }
                out
            })
            .collect();
        let sorted_code = StabilizerCode::new(sorted, 7, 2).unwrap();
        assert!(steane.row_space_equals(&sorted_code));
    }

    #[test]
    fn base_member_is_certified() {
        let member = hamming_ldi(3).unwrap();
        assert_eq!(member.code.max_entry(), 1);
        assert_eq!(member.code.generators().len(), 6);
        assert!(member.code.report().certified());
        assert_eq!(member.levels.len(), 1);
        assert_eq!(member.levels[0].pattern, RowPattern::Base);
    }

    #[test]
    fn level_four_member_certifies_with_one_repair() {
        let member = hamming_ldi(4).unwrap();
        assert_eq!(member.code.max_entry(), 1);
        assert_eq!(member.code.generators().len(), 8);
        assert_eq!(member.code.n(), 15);
        assert_eq!(member.code.k(), 7);
        let level4 = &member.levels[1];
        assert_eq!(level4.pattern, RowPattern::ParityKeyed);
        assert_eq!(level4.repaired_rows, vec![7]);
    }

    #[test]
    fn higher_levels_certify_without_repair() {
        let member = hamming_ldi(5).unwrap();
        assert_eq!(member.code.max_entry(), 1);
        assert_eq!(member.code.generators().len(), 10);
        assert_eq!((member.code.n(), member.code.k()), (31, 21));
        assert!(member.levels[2].repaired_rows.is_empty());
    }

    #[test]
    fn members_reduce_to_the_css_row_space() {
        for bits in [3usize, 4] {
            let member = hamming_ldi(bits).unwrap();
            let css = hamming_css(bits).unwrap();
            let reduced: Vec<Vec<i64>> = member
                .code
                .rows()
                .iter()
                .map(|r| r.iter().map(|&v| v.rem_euclid(2)).collect())
                .collect();
            assert!(
                row_spaces_equal(&reduced, &css.rows(), 2),
                "bits = {bits} member does not present the Hamming code"
            );
        }
    }

    #[test]
    fn weight_three_kernel_vector_exists() {
        // Columns with values 1, 2, 3 and coefficients (1, 1, −1) lie in
        // the kernel of the X block over the integers.
        for bits in [3usize, 4, 5] {
            let member = hamming_ldi(bits).unwrap();
            let css = member.code.css_structure().unwrap();
            for row in &css.xblock {
                let dot = row[0] + row[1] - row[2];
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn certify_steane_member_over_small_primes() {
        let budget = crate::distance::candidate_budget();
        let (_, report) = certify_family_member(3, &[2, 3, 5, 7], 3, budget).unwrap();
        assert_eq!(report.max_entry, 1);
        assert_eq!((report.n, report.k), (7, 1));
        assert_eq!(report.rows.len(), 4);
    }
}
