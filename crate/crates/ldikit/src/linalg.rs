//! Exact linear algebra over GF(p) and small integer determinants.

/// Multiplicative inverse mod prime `p`.
pub fn inv_mod(a: i64, p: u64) -> i64 {
    let a = a.rem_euclid(p as i64) as u64;
    debug_assert!(a != 0, "inverse of zero");
    pow_mod(a, p - 2, p) as i64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Reduced row echelon form mod `p`. Returns the nonzero reduced rows and
/// their pivot columns; input rows may be any integers.
pub fn rref_mod(rows: &[Vec<i64>], p: u64) -> (Vec<Vec<i64>>, Vec<usize>) {
    let p_i = p as i64;
    let mut m: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v.rem_euclid(p_i)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = inv_mod(m[rank][col], p);
        for v in m[rank].iter_mut() {
            *v = (*v * inv).rem_euclid(p_i);
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..cols {
                    m[r][c] = (m[r][c] - factor * m[rank][c]).rem_euclid(p_i);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    (m, pivots)
}

pub fn rank_mod(rows: &[Vec<i64>], p: u64) -> usize {
    rref_mod(rows, p).0.len()
}

/// Reduces `v` against an RREF basis; the remainder is zero iff `v` lies in
/// the row space.
pub fn reduce_against(rref: &[Vec<i64>], pivots: &[usize], v: &[i64], p: u64) -> Vec<i64> {
    let p_i = p as i64;
    let mut w: Vec<i64> = v.iter().map(|&x| x.rem_euclid(p_i)).collect();
    for (row, &col) in rref.iter().zip(pivots) {
        if w[col] != 0 {
            let factor = w[col];
            for c in 0..w.len() {
                w[c] = (w[c] - factor * row[c]).rem_euclid(p_i);
            }
        }
    }
    w
}

pub fn in_row_space(rref: &[Vec<i64>], pivots: &[usize], v: &[i64], p: u64) -> bool {
    reduce_against(rref, pivots, v, p).iter().all(|&x| x == 0)
}

pub fn row_spaces_equal(a: &[Vec<i64>], b: &[Vec<i64>], p: u64) -> bool {
    let (ra, pa) = rref_mod(a, p);
    let (rb, pb) = rref_mod(b, p);
    ra.len() == rb.len()
        && a.iter().all(|v| in_row_space(&rb, &pb, v, p))
        && b.iter().all(|v| in_row_space(&ra, &pa, v, p))
}

/// Basis of the right kernel of an r×c matrix mod `p` (vectors `v` with
/// `M v ≡ 0`).
pub fn kernel_basis_mod(matrix: &[Vec<i64>], cols: usize, p: u64) -> Vec<Vec<i64>> {
    let p_i = p as i64;
    let (rref, pivots) = rref_mod(matrix, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![0i64; cols];
        v[f] = 1;
        for (row, &pc) in rref.iter().zip(&pivots) {
            v[pc] = (-row[f]).rem_euclid(p_i);
        }
        basis.push(v);
    }
    basis
}

/// Exact determinant of a small integer matrix via Bareiss fraction-free
/// elimination. Intermediates are minors of the input, so i128 never
/// overflows at the sizes scanned here.
pub fn determinant_exact(matrix: &[Vec<i64>]) -> i128 {
    let n = matrix.len();
    if n == 0 {
        return 1;
    }
    let mut m: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return 0;
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Advances `subset` to the next k-combination of `0..n` in lexicographic
/// order; false when exhausted.
pub fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    if k == 0 {
        return false;
    }
    let mut i = k;
    while i > 0 {
        i -= 1;
        if subset[i] < n - (k - i) {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
