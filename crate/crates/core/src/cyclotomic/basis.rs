//! Per-conductor data: Φ_e and the reductions of `x^j mod Φ_e`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

pub(crate) struct Basis {
    #[allow(dead_code)]
    pub e: u32,
    pub phi: usize,
    /// Coefficients of Φ_e from the constant term upward (monic).
    pub poly: Vec<i64>,
    /// `powers[j]` = coefficients of `x^j mod Φ_e`, for `0 ≤ j < e`.
    pub powers: Vec<Vec<i64>>,
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dl = den.len();
    let mut q = vec![0i64; num.len() + 1 - dl];
    for i in (0..q.len()).rev() {
        let c = rem[i + dl - 1];
        q[i] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

fn cyclotomic_poly(e: u32) -> Vec<i64> {
    // x^e − 1 = Π_{d | e} Φ_d.
    let mut num = vec![0i64; e as usize + 1];
    num[0] = -1;
    num[e as usize] = 1;
    let mut den = vec![1i64];
    for d in 1..e {
        if e % d == 0 {
            den = poly_mul(&den, &basis(d).poly);
        }
    }
    poly_div_exact(&num, &den)
}

pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

fn build(e: u32) -> Basis {
    let poly = cyclotomic_poly(e);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(e as usize);
    let mut cur = vec![0i64; phi.max(1)];
    cur[0] = 1;
    if phi == 0 {
        unreachable!("Φ_e has positive degree");
    }
    for _ in 0..e {
        powers.push(cur.clone());
        // multiply by x and reduce by the monic Φ_e
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
        for (i, item) in next.iter_mut().enumerate() {
            *item = item.checked_sub(top.checked_mul(poly[i]).expect("overflow")).expect("overflow");
        }
        cur = next;
    }
    Basis { e, phi, poly, powers }
}

pub(crate) fn basis(e: u32) -> Arc<Basis> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Basis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(b) = cache.lock().unwrap().get(&e) {
        return b.clone();
    }
    // Built outside the lock: construction recurses into smaller conductors.
    let b = Arc::new(build(e));
    cache.lock().unwrap().entry(e).or_insert(b).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(basis(1).poly, vec![-1, 1]);
        assert_eq!(basis(2).poly, vec![1, 1]);
        assert_eq!(basis(3).poly, vec![1, 1, 1]);
        assert_eq!(basis(4).poly, vec![1, 0, 1]);
        assert_eq!(basis(6).poly, vec![1, -1, 1]);
        assert_eq!(basis(12).poly, vec![1, 0, -1, 0, 1]);
        // Φ₁₀₅ is the first with a coefficient of absolute value 2.
        assert!(basis(105).poly.contains(&-2));
        assert_eq!(basis(105).phi, euler_phi(105));
    }

    #[test]
    fn power_table_wraps() {
        let b = basis(5);
        assert_eq!(b.powers[0], vec![1, 0, 0, 0]);
        assert_eq!(b.powers[4], vec![-1, -1, -1, -1]);
    }
}
