//! Smith normal form of small integer matrices.

use alloc::vec::Vec;

/// Invariant factors `d_1 | d_2 | …` (non-negative, zeros last) of an
/// integer matrix, `min(rows, cols)` of them.
#[allow(clippy::needless_range_loop)]
pub fn invariant_factors(matrix: &[Vec<i64>]) -> Vec<i64> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|v| *v as i128).collect())
        .collect();
    let n = rows.min(cols);
    for t in 0..n {
        // Pivot: smallest nonzero magnitude in the remaining block.
        loop {
            let mut pivot = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0
                        && pivot
                            .is_none_or(|(pi, pj): (usize, usize)| a[i][j].abs() < a[pi][pj].abs())
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t] / p;
                if q != 0 {
                    for j in t..cols {
                        a[i][j] -= q * a[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j] / p;
                if q != 0 {
                    for i in t..rows {
                        a[i][j] -= q * a[i][t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Enforce divisibility into the rest of the block.
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| a[i][j] % p != 0);
            match bad {
                Some((i, _)) => {
                    for j in t..cols {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
    }
    (0..n).map(|t| a[t][t].abs() as i64).collect()
}

/// Determinant is `±1`.
pub fn is_unimodular(matrix: &[Vec<i64>]) -> bool {
    matrix.len() == matrix.first().map_or(0, Vec::len)
        && invariant_factors(matrix).iter().all(|d| *d == 1)
}
