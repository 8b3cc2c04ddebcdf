//! Hermite and Smith normal forms, integer kernels and exact solvers.
//!
//! Hermite convention used throughout the crate (column style): for an
//! `m x n` input `M` we return `(H, U)` with `U` unimodular and `M * U = H`,
//! where
//!
//! * the nonzero columns of `H` come first and the zero columns last;
//! * nonzero column `j` has its first nonzero entry (the pivot) in row
//!   `r_j`, with `r_0 < r_1 < ...` (lower-triangular staircase);
//! * every pivot is positive;
//! * in a pivot row `r_j`, the entries `H[r_j][k]` for `k < j` satisfy
//!   `0 <= H[r_j][k] < H[r_j][j]`, while entries with `k > j` are zero.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::{ext_gcd, IntMatrix};

/// Column Hermite normal form together with the pivot rows of its nonzero columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hermite {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// `pivots[j]` is the pivot row of column `j`; its length is the rank.
    pub pivots: Vec<usize>,
}

impl Hermite {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero columns of `H`, a canonical basis of the column lattice.
    pub fn basis(&self) -> IntMatrix {
        let cols: Vec<usize> = (0..self.rank()).collect();
        self.h.select_columns(&cols)
    }
}

pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let Hermite { h, u, .. } = hermite(m);
    (h, u)
}

pub fn hermite(m: &IntMatrix) -> Hermite {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.cols());
    let mut pivots = Vec::new();
    let mut col = 0;
    for row in 0..h.rows() {
        if col == h.cols() {
            break;
        }
        for k in col + 1..h.cols() {
            if h[(row, k)].is_zero() {
                continue;
            }
            let a = h[(row, col)].clone();
            let b = h[(row, k)].clone();
            let (g, s, t) = ext_gcd(&a, &b);
            let a_g = &a / &g;
            let b_g = &b / &g;
            // (col, k) <- (s*col + t*k, -b/g*col + a/g*k); determinant s*a/g + t*b/g = 1
            h.combine_cols(col, k, &s, &t, &-b_g.clone(), &a_g);
            u.combine_cols(col, k, &s, &t, &-b_g, &a_g);
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        if h[(row, col)].is_negative() {
            h.negate_col(col);
            u.negate_col(col);
        }
        let pivot = h[(row, col)].clone();
        for k in 0..col {
            let q = h[(row, k)].div_floor(&pivot);
            if !q.is_zero() {
                let f = -q;
                h.add_col_multiple(k, col, &f);
                u.add_col_multiple(k, col, &f);
            }
        }
        pivots.push(row);
        col += 1;
    }
    Hermite { h, u, pivots }
}

/// Smith normal form `(S, U, V)` with `U * M * V = S`, `U`, `V` unimodular and
/// the diagonal `d_1 | d_2 | ...` nonnegative.
pub fn snf(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let rows = m.rows();
    let cols = m.cols();
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if s[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            loop {
                for i in t + 1..rows {
                    if s[(i, t)].is_zero() {
                        continue;
                    }
                    let a = s[(t, t)].clone();
                    let b = s[(i, t)].clone();
                    let (g, p, q) = ext_gcd(&a, &b);
                    let a_g = &a / &g;
                    let b_g = -(&b / &g);
                    s.combine_rows(t, i, &p, &q, &b_g, &a_g);
                    u.combine_rows(t, i, &p, &q, &b_g, &a_g);
                }
                for j in t + 1..cols {
                    if s[(t, j)].is_zero() {
                        continue;
                    }
                    let a = s[(t, t)].clone();
                    let b = s[(t, j)].clone();
                    let (g, p, q) = ext_gcd(&a, &b);
                    let a_g = &a / &g;
                    let b_g = -(&b / &g);
                    s.combine_cols(t, j, &p, &q, &b_g, &a_g);
                    v.combine_cols(t, j, &p, &q, &b_g, &a_g);
                }
                if (t + 1..rows).all(|i| s[(i, t)].is_zero()) {
                    break;
                }
            }
            let pivot = s[(t, t)].clone();
            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    (s, u, v)
}

/// Diagonal of a Smith form, truncated to `min(rows, cols)` entries.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let (s, _, _) = snf(m);
    (0..m.rows().min(m.cols())).map(|i| s[(i, i)].clone()).collect()
}

/// Basis (as columns) of the integer kernel `{x in Z^n : M x = 0}`.
///
/// The returned lattice is saturated.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let herm = hermite(m);
    let free: Vec<usize> = (herm.rank()..m.cols()).collect();
    herm.u.select_columns(&free)
}

/// Some rational solution of `M x = b`, or `None` when the system is inconsistent.
pub fn solve_rational(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigRational>> {
    let b: Vec<BigRational> = b.iter().cloned().map(BigRational::from_integer).collect();
    solve_rational_rhs(m, &b)
}

pub fn solve_rational_rhs(m: &IntMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(b.len(), m.rows(), "right-hand side length must equal row count");
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.to_rational();
    for (row, rhs) in a.iter_mut().zip(b) {
        row.push(rhs.clone());
    }
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for k in c..=cols {
                    let sub = &f * &a[r][k];
                    a[i][k] -= sub;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivot_cols.iter().enumerate() {
        x[c] = a[i][cols].clone();
    }
    Some(x)
}

/// Some integer solution of `M x = b` for a rational right-hand side.
pub fn solve_integer(m: &IntMatrix, b: &[BigRational]) -> Option<Vec<BigInt>> {
    assert_eq!(b.len(), m.rows());
    let (s, u, v) = snf(m);
    let ub: Vec<BigRational> = (0..u.rows())
        .map(|i| {
            u.row(i)
                .iter()
                .zip(b)
                .fold(BigRational::zero(), |acc, (x, y)| acc + y * BigRational::from_integer(x.clone()))
        })
        .collect();
    let diag = m.rows().min(m.cols());
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, target) in ub.iter().enumerate() {
        let d = if i < diag { s[(i, i)].clone() } else { BigInt::zero() };
        if d.is_zero() {
            if !target.is_zero() {
                return None;
            }
            continue;
        }
        let q = target / BigRational::from_integer(d);
        if !q.is_integer() {
            return None;
        }
        y[i] = q.to_integer();
    }
    Some(v.mul_vec(&y))
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Gcd of all `k x k` minors. `k = 0` gives 1; if no nonzero minor exists the result is 0.
pub fn gcd_minors(m: &IntMatrix, k: usize) -> BigInt {
    if k == 0 {
        return BigInt::one();
    }
    let mut g = BigInt::zero();
    for rows in combinations(m.rows(), k) {
        let sub = m.select_rows(&rows);
        for cols in combinations(m.cols(), k) {
            let d = sub.select_columns(&cols).det();
            g = g.gcd(&d);
            if g.is_one() {
                return g;
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_unimodular(u: &IntMatrix) -> bool {
        u.det().abs().is_one()
    }

    fn check_hnf_shape(h: &Hermite) {
        for (j, &r) in h.pivots.iter().enumerate() {
            assert!(h.h[(r, j)].is_positive());
            for i in 0..r {
                assert!(h.h[(i, j)].is_zero());
            }
            for k in 0..j {
                assert!(!h.h[(r, k)].is_negative() && h.h[(r, k)] < h.h[(r, j)]);
            }
            if j > 0 {
                assert!(r > h.pivots[j - 1]);
            }
        }
        for j in h.rank()..h.h.cols() {
            assert!(h.h.is_column_zero(j));
        }
    }

    #[test]
    fn hnf_identity() {
        let id = IntMatrix::identity(2);
        let (h, u) = hnf(&id);
        assert_eq!(h, id);
        assert_eq!(u, id);
    }

    #[test]
    fn hnf_det_two() {
        let m = IntMatrix::from_rows(&[[1, 1], [1, -1]]);
        let herm = hermite(&m);
        assert_eq!(&m * &herm.u, herm.h);
        assert!(is_unimodular(&herm.u));
        assert_eq!(herm.h.det().abs(), BigInt::from(2));
        check_hnf_shape(&herm);
        assert_eq!(herm.h, IntMatrix::from_rows(&[[1, 0], [1, 2]]));
    }

    #[test]
    fn hnf_zero() {
        let z = IntMatrix::zeros(2, 3);
        let (h, u) = hnf(&z);
        assert_eq!(h, z);
        assert_eq!(u, IntMatrix::identity(3));
    }

    #[test]
    fn snf_examples() {
        let m = IntMatrix::from_rows(&[[1, 1], [1, -1]]);
        assert_eq!(smith_diagonal(&m), vec![BigInt::from(1), BigInt::from(2)]);
        let m = IntMatrix::from_rows(&[[6, 0], [0, 4]]);
        assert_eq!(smith_diagonal(&m), vec![BigInt::from(2), BigInt::from(12)]);
        let (s, u, v) = snf(&IntMatrix::identity(3));
        assert_eq!(s, IntMatrix::identity(3));
        assert!(is_unimodular(&u) && is_unimodular(&v));
    }

    #[test]
    fn snf_reconstructs() {
        let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
        let (s, u, v) = snf(&m);
        assert_eq!(&(&u * &m) * &v, s);
        assert_eq!(
            smith_diagonal(&m),
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
    }

    #[test]
    fn rational_solutions() {
        let id = IntMatrix::identity(2);
        let x = solve_rational(&id, &[BigInt::from(3), BigInt::from(5)]).unwrap();
        assert_eq!(x, vec![BigRational::from_integer(3.into()), BigRational::from_integer(5.into())]);

        // A^T for the matrix [[1,1,1],[1,-1,0]]: consistent iff b1 + b2 = 2 b3
        let at = IntMatrix::from_rows(&[[1, 1], [1, -1], [1, 0]]);
        for b1 in -3i64..=3 {
            for b2 in -3i64..=3 {
                for b3 in -3i64..=3 {
                    let b = [BigInt::from(b1), BigInt::from(b2), BigInt::from(b3)];
                    let sol = solve_rational(&at, &b);
                    assert_eq!(sol.is_some(), b1 + b2 == 2 * b3, "b = {b:?}");
                    if let Some(x) = sol {
                        let xb: Vec<BigRational> = b.iter().cloned().map(BigRational::from_integer).collect();
                        let ax: Vec<BigRational> = (0..3)
                            .map(|i| {
                                (0..2).fold(BigRational::zero(), |acc, j| {
                                    acc + BigRational::from_integer(at[(i, j)].clone()) * &x[j]
                                })
                            })
                            .collect();
                        assert_eq!(ax, xb);
                    }
                }
            }
        }

        let m = IntMatrix::from_rows(&[[1, 1], [2, 2]]);
        assert!(solve_rational(&m, &[BigInt::from(1), BigInt::from(3)]).is_none());
    }

    #[test]
    fn integer_solutions() {
        let m = IntMatrix::from_rows(&[[2, 0], [0, 3]]);
        let half = BigRational::new(1.into(), 2.into());
        assert!(solve_integer(&m, &[BigRational::from_integer(4.into()), BigRational::from_integer(3.into())]).is_some());
        assert!(solve_integer(&m, &[half, BigRational::zero()]).is_none());
        assert!(solve_integer(&m, &[BigRational::from_integer(1.into()), BigRational::zero()]).is_none());
    }

    #[test]
    fn kernel_is_orthogonal() {
        let m = IntMatrix::from_rows(&[[1, 1, 1], [1, -1, 0]]);
        let k = integer_kernel(&m);
        assert_eq!(k.cols(), 1);
        assert!((&m * &k).is_zero());
        assert_eq!(gcd_minors(&k, 1), BigInt::one());
    }

    #[test]
    fn minors() {
        let m = IntMatrix::from_rows(&[[1, 1], [1, -1]]);
        assert_eq!(gcd_minors(&m, 2), BigInt::from(2));
        let full = IntMatrix::from_rows(&[[1, 1, 1], [1, -1, 0]]);
        assert_eq!(gcd_minors(&full, 2), BigInt::one());
        assert_eq!(gcd_minors(&full, 0), BigInt::one());
        assert_eq!(gcd_minors(&IntMatrix::zeros(2, 2), 1), BigInt::zero());
    }
}
