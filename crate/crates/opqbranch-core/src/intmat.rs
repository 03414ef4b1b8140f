//! Exact rank of integer matrices by fraction-free elimination.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank of the matrix over the rationals, computed exactly.
///
/// Fraction-free (Bareiss) elimination: after k steps every live entry
/// is a (k+1) x (k+1) minor of the input, so the division by the
/// previous pivot is exact and no rationals are ever needed. Within a
/// column the pivot of smallest magnitude is taken to slow growth;
/// columns with no eliminable entry are skipped.
pub fn integer_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivot_row = 0usize;
    for col in 0..ncols {
        if pivot_row == nrows {
            break;
        }
        let mut best: Option<usize> = None;
        for r in pivot_row..nrows {
            if m[r][col].is_zero() {
                continue;
            }
            match best {
                Some(b) if m[b][col].magnitude() <= m[r][col].magnitude() => {}
                _ => best = Some(r),
            }
        }
        let Some(best) = best else { continue };
        m.swap(pivot_row, best);
        // every remaining row is updated, also where the lead is zero:
        // the invariant that entries are minors needs the rescaling
        let (pivot_part, rest) = m.split_at_mut(pivot_row + 1);
        let prow = &pivot_part[pivot_row];
        for row in rest.iter_mut() {
            for c in (col + 1)..ncols {
                let num = &prow[col] * &row[c] - &row[col] * &prow[c];
                row[c] = num / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = m[pivot_row][col].clone();
        pivot_row += 1;
    }
    pivot_row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn identity_has_full_rank() {
        for n in 1..=5usize {
            let rows: Vec<Vec<BigInt>> = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
                .collect();
            assert_eq!(integer_rank(rows), n);
        }
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        assert_eq!(integer_rank(m(&[&[0, 0, 0], &[0, 0, 0]])), 0);
        assert_eq!(integer_rank(Vec::new()), 0);
    }

    #[test]
    fn dependent_rows_collapse() {
        assert_eq!(integer_rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(integer_rank(m(&[&[1, 2, 3], &[4, 5, 6], &[5, 7, 9]])), 2);
        assert_eq!(integer_rank(m(&[&[2, 0, 1], &[0, 3, 0], &[0, 0, 7]])), 3);
    }

    #[test]
    fn zero_columns_are_skipped() {
        assert_eq!(integer_rank(m(&[&[0, 5], &[0, 0]])), 1);
        assert_eq!(integer_rank(m(&[&[0, 1], &[1, 0]])), 2);
        assert_eq!(integer_rank(m(&[&[0, 0, 2], &[0, 0, 4]])), 1);
    }

    #[test]
    fn rectangular_shapes() {
        assert_eq!(integer_rank(m(&[&[1, 0, 0, 2]])), 1);
        assert_eq!(integer_rank(m(&[&[3], &[1], &[4]])), 1);
        assert_eq!(integer_rank(m(&[&[1, 1, 1], &[1, 2, 4], &[1, 3, 9], &[1, 4, 16]])), 3);
    }

    #[test]
    fn rank_is_transpose_invariant() {
        // row 2 = 2 * row 1 and row 4 = row 1 + row 3
        let a = &[
            &[2i64, -1, 0, 3][..],
            &[4, -2, 0, 6],
            &[1, 5, -7, 0],
            &[3, 4, -7, 3],
        ];
        let rows = m(a);
        let cols: Vec<Vec<BigInt>> = (0..4)
            .map(|j| (0..4).map(|i| BigInt::from(a[i][j])).collect())
            .collect();
        assert_eq!(integer_rank(rows), 2);
        assert_eq!(integer_rank(cols), 2);
    }

    #[test]
    fn vandermonde_determinant_nonzero() {
        // 5 distinct nodes: full rank 5
        let nodes = [-2i64, -1, 0, 1, 2];
        let rows: Vec<Vec<BigInt>> = nodes
            .iter()
            .map(|&x| (0..5u32).map(|k| BigInt::from(x.pow(k))).collect())
            .collect();
        assert_eq!(integer_rank(rows), 5);
    }
}
