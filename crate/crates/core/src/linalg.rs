//! Exact rational row reduction for the sign matrices of the restriction step.

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Rational = Ratio<i64>;

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
pub fn rref(m: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= inv;
        }
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c];
                for (v, &pv) in row.iter_mut().zip(&pivot) {
                    *v -= pv * f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    pivots
}

/// Basis of `{v : A v = 0}` for a ±1 matrix given row by row over `ncols` columns.
///
/// One vector per free column, with a 1 in that column.
pub fn kernel_basis(rows: &[Vec<i8>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> =
        rows.iter().map(|r| r.iter().map(|&e| Rational::from_integer(e as i64)).collect()).collect();
    let pivots = rref(&mut m, ncols);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -row[free];
        }
        basis.push(v);
    }
    basis
}

/// Matrix-vector product with exact arithmetic.
pub fn apply(rows: &[Vec<i8>], v: &[Rational]) -> Vec<Rational> {
    rows.iter().map(|r| r.iter().zip(v).fold(Rational::zero(), |acc, (&e, &x)| acc + x * e as i64)).collect()
}

/// Rank of a set of GF(2) row vectors.
pub fn gf2_rank(rows: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &r in rows {
        let mut v = r;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_of_balanced_rows() {
        let rows = vec![vec![1, -1, 1, -1], vec![1, 1, -1, -1]];
        let k = kernel_basis(&rows, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(apply(&rows, v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn full_rank_square_has_trivial_kernel() {
        let rows = vec![vec![1, 1], vec![1, -1]];
        assert!(kernel_basis(&rows, 2).is_empty());
    }

    #[test]
    fn gf2_rank_counts_independent_rows() {
        assert_eq!(gf2_rank(&[0b011, 0b101, 0b110]), 2);
        assert_eq!(gf2_rank(&[0b1, 0b10, 0b100]), 3);
        assert_eq!(gf2_rank(&[0]), 0);
    }
}
