//! Exact elimination over ℚ. Rows are scaled to primitive integer vectors
//! and combined by integer cross-multiplication, so no fractions appear
//! until the final normalisation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Row = Vec<BigRational>;

fn to_primitive_integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for x in row {
        den = den.lcm(x.denom());
    }
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// Row echelon form computed without fractions.
#[derive(Clone, Debug)]
pub struct Echelon {
    /// Reduced rows (leading entry 1, zeros above and below each pivot).
    pub rows: Vec<Row>,
    /// Pivot column of each row.
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Reduced row echelon form of `m` (rows of equal length `ncols`).
pub fn rref(m: &[Row], ncols: usize) -> Echelon {
    let mut rows: Vec<Vec<BigInt>> = m.iter().map(|r| to_primitive_integer_row(r)).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].magnitude().clone())
        else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let a = rows[r][c].clone();
            let b = rows[i][c].clone();
            let g = a.gcd(&b);
            let (fa, fb) = (&a / &g, &b / &g);
            let (head, tail) = if i < r {
                let (h, t) = rows.split_at_mut(r);
                (&mut h[i], &t[0])
            } else {
                let (h, t) = rows.split_at_mut(i);
                (&mut t[0], &h[r])
            };
            for (x, y) in head.iter_mut().zip(tail.iter()) {
                *x = &*x * &fa - y * &fb;
            }
            make_primitive(head);
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    let rows = rows
        .into_iter()
        .zip(&pivots)
        .map(|(row, &c)| {
            let lead = row[c].clone();
            row.into_iter()
                .map(|x| BigRational::new(x, lead.clone()))
                .collect()
        })
        .collect();
    Echelon { rows, pivots }
}

pub fn rank(m: &[Row], ncols: usize) -> usize {
    rref(m, ncols).rank()
}

/// Basis of `{x : m x = 0}`.
pub fn nullspace(m: &[Row], ncols: usize) -> Vec<Row> {
    let e = rref(m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// One solution of `m x = b` (free variables set to zero), if any.
pub fn solve(m: &[Row], ncols: usize, b: &[BigRational]) -> Option<Row> {
    let augmented: Vec<Row> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let e = rref(&augmented, ncols + 1);
    if e.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); ncols];
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, if it is invertible.
pub fn inverse(m: &[Row]) -> Option<Vec<Row>> {
    let n = m.len();
    let augmented: Vec<Row> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    let e = rref(&augmented, 2 * n);
    if e.rank() < n || e.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(e.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[Row], x: &[BigRational]) -> Row {
    m.iter()
        .map(|row| row.iter().zip(x).fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

pub fn is_integral(x: &BigRational) -> bool {
    x.denom().is_one()
}

pub fn max_abs(xs: &[BigRational]) -> BigRational {
    xs.iter().map(|x| x.abs()).max().unwrap_or_else(BigRational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn mat(rows: &[&[i64]]) -> Vec<Row> {
        rows.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect()
    }

    #[test]
    fn rank_and_nullspace() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&m, 3), 2);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        assert!(mat_vec(&m, &ns[0]).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn solve_and_inverse() {
        let m = vec![vec![q(1, 2), q(1, 3)], vec![q(2, 1), q(-1, 1)]];
        let b = vec![q(1, 1), q(0, 1)];
        let x = solve(&m, 2, &b).unwrap();
        assert_eq!(mat_vec(&m, &x), b);
        let inv = inverse(&m).unwrap();
        let id: Vec<Row> = (0..2).map(|j| mat_vec(&m, &[inv[0][j].clone(), inv[1][j].clone()])).collect();
        assert_eq!(id[0], vec![q(1, 1), q(0, 1)]);
        assert_eq!(id[1], vec![q(0, 1), q(1, 1)]);
        assert!(inverse(&mat(&[&[1, 2], &[2, 4]])).is_none());
        assert!(solve(&mat(&[&[1, 1], &[1, 1]]), 2, &[q(1, 1), q(2, 1)]).is_none());
    }
}
