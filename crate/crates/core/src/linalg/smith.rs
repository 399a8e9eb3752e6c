//! Smith normal form over ℤ with unimodular transforms, and integer
//! linear solving built on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

/// `u · a · v = diag(d)` with `u`, `v` unimodular.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diagonal: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub rows: usize,
    pub cols: usize,
}

impl Smith {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

/// `row[dst] -= q · row[src]`.
fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    let src_row = m[src].clone();
    for (x, y) in m[dst].iter_mut().zip(src_row) {
        *x -= q * y;
    }
}

/// `col[dst] -= q · col[src]`.
fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let y = row[src].clone();
        row[dst] -= q * y;
    }
}

pub fn smith(a: &IntMatrix, cols: usize) -> Smith {
    let rows = a.len();
    let mut m = a.clone();
    let mut u = identity(rows);
    let mut v = identity(cols);
    let steps = rows.min(cols);
    for t in 0..steps {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if !m[i][j].is_zero()
                        && best.is_none_or(|(bi, bj)| m[i][j].magnitude() < m[bi][bj].magnitude())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(m, u, v, rows, cols);
            };
            m.swap(t, pi);
            u.swap(t, pi);
            swap_cols(&mut m, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                row_axpy(&mut m, i, t, &q);
                row_axpy(&mut u, i, t, &q);
                if !m[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                col_axpy(&mut m, j, t, &q);
                col_axpy(&mut v, j, t, &q);
                if !m[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into the pivot row.
            let pivot = m[t][t].clone();
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(&m[i][j] % &pivot).is_zero()));
            match offending {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut m, t, i, &minus_one);
                    row_axpy(&mut u, t, i, &minus_one);
                }
                None => break,
            }
        }
        if m[t][t].is_negative() {
            for x in m[t].iter_mut() {
                *x = -&*x;
            }
            for x in u[t].iter_mut() {
                *x = -&*x;
            }
        }
    }
    finish(m, u, v, rows, cols)
}

fn finish(m: IntMatrix, u: IntMatrix, v: IntMatrix, rows: usize, cols: usize) -> Smith {
    let diagonal = (0..rows.min(cols)).map(|i| m[i][i].clone()).collect();
    Smith { diagonal, u, v, rows, cols }
}

fn mat_vec(m: &IntMatrix, x: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(x).fold(BigInt::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

/// Integral solutions of `a x = b`.
#[derive(Clone, Debug)]
pub struct IntegerSolution {
    pub particular: Vec<BigInt>,
    /// Basis of the integer kernel of `a`.
    pub kernel: Vec<Vec<BigInt>>,
}

/// Solves `a x = b` over ℤ; `None` when no integral solution exists.
pub fn solve_integer(a: &IntMatrix, cols: usize, b: &[BigInt]) -> Option<IntegerSolution> {
    let s = smith(a, cols);
    let ub = mat_vec(&s.u, b);
    let r = s.rank();
    let mut y = vec![BigInt::zero(); cols];
    for i in 0..s.rows {
        if i < r {
            let (q, rem) = ub[i].div_rem(&s.diagonal[i]);
            if !rem.is_zero() {
                return None;
            }
            y[i] = q;
        } else if !ub[i].is_zero() {
            return None;
        }
    }
    let particular = mat_vec(&s.v, &y);
    let kernel = (r..cols)
        .map(|j| s.v.iter().map(|row| row[j].clone()).collect())
        .collect();
    Some(IntegerSolution { particular, kernel })
}

/// Size-reduces a lattice point against kernel vectors, greedily lowering
/// the largest absolute entry.
pub fn reduce_height(x: &mut [BigInt], kernel: &[Vec<BigInt>]) {
    let height = |v: &[BigInt]| v.iter().map(|e| e.abs()).max().unwrap_or_default();
    let l1 = |v: &[BigInt]| v.iter().fold(BigInt::zero(), |acc, e| acc + e.abs());
    loop {
        let (h0, n0) = (height(x), l1(x));
        let mut improved = false;
        for k in kernel {
            for sign in [1i32, -1] {
                let trial: Vec<BigInt> = x.iter().zip(k).map(|(a, b)| a - b * sign).collect();
                let (h1, n1) = (height(&trial), l1(&trial));
                if h1 < h0 || (h1 == h0 && n1 < n0) {
                    x.clone_from_slice(&trial);
                    improved = true;
                    break;
                }
            }
            if improved {
                break;
            }
        }
        if !improved {
            return;
        }
    }
}
