//! Dense linear algebra over a prime field 𝔽_p with `p < 2³¹`.

pub fn add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b) % p
}

pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

pub fn inv(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "zero has no inverse");
    pow(a, p - 2, p)
}

pub fn reduce_signed(a: i64, p: u64) -> u64 {
    a.rem_euclid(p as i64) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest generator of 𝔽_p^×.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = crate::group::structure::prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow(g, (p - 1) / q, p) != 1))
        .expect("prime fields have primitive roots")
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(rows: &mut Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let scale = inv(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * scale % p;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = sub(*x, f * y % p, p);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : m x = 0}` for an `nrows × ncols` matrix.
pub fn nullspace(m: &[Vec<u64>], ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut rows = m.to_vec();
    let pivots = rref(&mut rows, ncols, p);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![0u64; ncols];
            v[f] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = sub(0, row[f], p);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial `det(xI − a)`, coefficients from the constant
/// term upward (monic, length `n + 1`). Uses reduction to Hessenberg form.
pub fn charpoly(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
            continue;
        };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let pivot_inv = inv(h[m][m - 1], p);
        for j in m + 1..n {
            if h[j][m - 1] == 0 {
                continue;
            }
            let u = h[j][m - 1] * pivot_inv % p;
            for c in 0..n {
                h[j][c] = sub(h[j][c], u * h[m][c] % p, p);
            }
            for row in h.iter_mut() {
                row[m] = add(row[m], u * row[j] % p, p);
            }
        }
    }
    // polys[k] is the characteristic polynomial of the leading k×k block.
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let m = k - 1;
        let prev = &polys[k - 1];
        let mut next = vec![0u64; k + 1];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = add(next[d + 1], c, p);
            next[d] = sub(next[d], c * h[m][m] % p, p);
        }
        let mut t = 1u64;
        for i in (0..m).rev() {
            t = t * h[i + 1][i] % p;
            let coeff = t * h[i][m] % p;
            if coeff == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = sub(next[d], coeff * c % p, p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

pub fn eval_poly(coeffs: &[u64], x: u64, p: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, &c| add(acc * x % p, c, p))
}

/// Distinct roots in 𝔽_p, by exhaustive evaluation.
pub fn roots(coeffs: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| eval_poly(coeffs, x, p) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det(m: &[Vec<u64>], p: u64) -> u64 {
        // Gaussian elimination determinant.
        let n = m.len();
        let mut a = m.to_vec();
        let mut d = 1u64;
        for c in 0..n {
            let Some(r) = (c..n).find(|&r| a[r][c] != 0) else { return 0 };
            if r != c {
                a.swap(r, c);
                d = sub(0, d, p);
            }
            d = d * a[c][c] % p;
            let iv = inv(a[c][c], p);
            for r in c + 1..n {
                let f = a[r][c] * iv % p;
                for k in 0..n {
                    a[r][k] = sub(a[r][k], f * a[c][k] % p, p);
                }
            }
        }
        d
    }

    #[test]
    fn charpoly_matches_determinant_evaluation() {
        let p = 101;
        let a = vec![
            vec![3, 1, 4, 1],
            vec![5, 9, 2, 6],
            vec![5, 3, 5, 8],
            vec![9, 7, 9, 3],
        ];
        let cp = charpoly(&a, p);
        assert_eq!(cp.len(), 5);
        for x in [0u64, 1, 7, 50, 100] {
            let shifted: Vec<Vec<u64>> = (0..4)
                .map(|i| (0..4).map(|j| sub(if i == j { x } else { 0 }, a[i][j], p)).collect())
                .collect();
            assert_eq!(eval_poly(&cp, x, p), det(&shifted, p), "x = {x}");
        }
    }

    #[test]
    fn primitive_roots_and_nullspaces() {
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(61), 2);
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(&m, 3, 7);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!((v[0] + 2 * v[1] + 3 * v[2]) % 7, 0);
        }
    }
}
