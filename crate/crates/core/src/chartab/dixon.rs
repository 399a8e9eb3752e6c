//! Dixon–Schneider: irreducible characters as common eigenvectors of the
//! class multiplication matrices over a prime field, lifted to ℚ(ζ_e).

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::class_function::ClassFunction;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::linalg::modp;

/// Seed for the random class-matrix combinations used to split eigenspaces.
pub const SPLIT_SEED: u64 = 0x5eed_d1c5;

/// One irreducible character before sorting.
pub(crate) struct RawCharacter {
    pub degree: u64,
    pub values: Vec<Cyclotomic>,
    /// Per class, the exponents `k` of `ζ_e^k` summing to the value.
    pub exponents: Vec<Vec<u64>>,
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > 2√n`.
pub fn dixon_prime(e: u64, n: u64) -> u64 {
    let mut p = e + 1;
    while !(modp::is_prime(p) && p * p > 4 * n) {
        p += e;
    }
    p
}

/// `classes × classes` matrices; `m[j][l][i]` counts `y ∈ C_l` with
/// `z_i y⁻¹ ∈ C_j`, so that `ω(K_j)` acts on `(ω(K_l))_l` through `m[j]`.
fn class_matrices(g: &Group, p: u64) -> Vec<Vec<Vec<u64>>> {
    let k = g.num_classes();
    let mut m = vec![vec![vec![0u64; k]; k]; k];
    for (i, c) in g.classes().iter().enumerate() {
        let z = c.representative;
        for y in 0..g.order() {
            let j = g.class_of(g.mul(z, g.inv(y)));
            m[j][g.class_of(y)][i] += 1;
        }
    }
    for mj in m.iter_mut() {
        for row in mj.iter_mut() {
            for x in row.iter_mut() {
                *x %= p;
            }
        }
    }
    m
}

fn mat_vec(a: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(0u64, |acc, (x, y)| (acc + x * y) % p))
        .collect()
}

/// Splits an invariant subspace (rows in reduced echelon form) into the
/// eigenspaces of `a`; `None` when `a` is scalar on it.
fn split(basis: &[Vec<u64>], a: &[Vec<u64>], p: u64) -> Option<Vec<Vec<Vec<u64>>>> {
    let dim = basis.len();
    let pivots: Vec<usize> = basis
        .iter()
        .map(|b| b.iter().position(|&x| x != 0).expect("nonzero basis row"))
        .collect();
    let images: Vec<Vec<u64>> = basis.iter().map(|b| mat_vec(a, b, p)).collect();
    let restricted: Vec<Vec<u64>> = (0..dim)
        .map(|r| (0..dim).map(|s| images[s][pivots[r]]).collect())
        .collect();
    let roots = modp::roots(&modp::charpoly(&restricted, p), p);
    if roots.len() < 2 {
        return None;
    }
    let spaces = roots
        .into_iter()
        .map(|lambda| {
            let shifted: Vec<Vec<u64>> = restricted
                .iter()
                .enumerate()
                .map(|(r, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(s, &x)| if r == s { modp::sub(x, lambda, p) } else { x })
                        .collect()
                })
                .collect();
            let mut vectors: Vec<Vec<u64>> = modp::nullspace(&shifted, dim, p)
                .into_iter()
                .map(|c| {
                    let mut v = vec![0u64; basis[0].len()];
                    for (cr, b) in c.iter().zip(basis) {
                        for (x, y) in v.iter_mut().zip(b) {
                            *x = (*x + cr * y) % p;
                        }
                    }
                    v
                })
                .collect();
            let n = vectors[0].len();
            modp::rref(&mut vectors, n, p);
            vectors
        })
        .collect();
    Some(spaces)
}

/// All irreducible characters of `g`, unsorted.
pub(crate) fn irreducibles(g: &Arc<Group>) -> Result<(u64, Vec<RawCharacter>)> {
    let n = g.order() as u64;
    let k = g.num_classes();
    let e = g.exponent();
    let p = dixon_prime(e, n);
    let m = class_matrices(g, p);
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);

    let identity: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|j| (i == j) as u64).collect()).collect();
    let mut pending = vec![identity];
    let mut lines: Vec<Vec<u64>> = Vec::new();
    while let Some(basis) = pending.pop() {
        if basis.len() == 1 {
            lines.push(basis.into_iter().next().unwrap());
            continue;
        }
        let mut parts = None;
        for attempt in 0..(4 + k) {
            let a: Vec<Vec<u64>> = if attempt < 4 {
                let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..p)).collect();
                (0..k)
                    .map(|r| {
                        (0..k)
                            .map(|s| (0..k).fold(0u64, |acc, j| (acc + coeffs[j] * m[j][r][s]) % p))
                            .collect()
                    })
                    .collect()
            } else {
                m[attempt - 4].clone()
            };
            if let Some(spaces) = split(&basis, &a, p) {
                parts = Some(spaces);
                break;
            }
        }
        match parts {
            Some(spaces) => pending.extend(spaces),
            None => {
                return Err(Error::Falsification(format!(
                    "class algebra of a group of order {n} did not split over F_{p}"
                )))
            }
        }
    }
    if lines.len() != k {
        return Err(Error::Falsification(format!("found {} characters for {k} classes", lines.len())));
    }

    let sizes: Vec<u64> = g.classes().iter().map(|c| c.size as u64).collect();
    let root = modp::primitive_root(p);
    let z = modp::pow(root, (p - 1) / e, p);
    let mut out = Vec::with_capacity(k);
    for line in lines {
        let scale = modp::inv(line[0], p);
        let w: Vec<u64> = line.iter().map(|&x| x * scale % p).collect();
        // Σ_j ω_j ω_{j*} / h_j = |G| / d².
        let s = (0..k).fold(0u64, |acc, j| {
            let t = w[j] * w[g.inverse_class(j)] % p * modp::inv(sizes[j] % p, p) % p;
            (acc + t) % p
        });
        let d2 = n % p * modp::inv(s, p) % p;
        let degree = (1..)
            .take_while(|d: &u64| d * d <= n)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| Error::Falsification("no admissible character degree".into()))?;
        let chi: Vec<u64> = (0..k)
            .map(|j| degree % p * w[j] % p * modp::inv(sizes[j] % p, p) % p)
            .collect();

        let mut values = Vec::with_capacity(k);
        let mut exponents = Vec::with_capacity(k);
        for j in 0..k {
            let o = g.element_order(g.classes()[j].representative);
            let zo = modp::pow(z, e / o, p);
            let zo_inv = modp::inv(zo, p);
            let o_inv = modp::inv(o % p, p);
            let powers: Vec<u64> = (0..o).map(|l| chi[g.power_class(j, l as i64)]).collect();
            let mut counts = vec![0i64; e as usize];
            let mut exps = Vec::new();
            for kk in 0..o {
                let step = modp::pow(zo_inv, kk, p);
                let mut acc = 0u64;
                let mut t = 1u64;
                for &v in &powers {
                    acc = (acc + v * t) % p;
                    t = t * step % p;
                }
                let mult = acc * o_inv % p;
                if mult > degree {
                    return Err(Error::Falsification(format!("eigenvalue multiplicity {mult} exceeds degree {degree}")));
                }
                let exp = kk * (e / o);
                counts[exp as usize] += mult as i64;
                exps.extend(std::iter::repeat_n(exp, mult as usize));
            }
            values.push(Cyclotomic::from_exponent_counts(e as u32, &counts));
            exponents.push(exps);
        }
        out.push(RawCharacter {
            degree,
            values,
            exponents,
        });
    }
    Ok((p, out))
}

/// Wraps raw characters as class functions, ordered trivial first, then by
/// degree, then by eigenvalue exponents class by class.
pub(crate) fn sorted(g: &Arc<Group>, mut raw: Vec<RawCharacter>) -> (Vec<ClassFunction>, Vec<u64>) {
    raw.sort_by(|a, b| {
        let ta = a.exponents.iter().all(|x| x.iter().all(|&k| k == 0));
        let tb = b.exponents.iter().all(|x| x.iter().all(|&k| k == 0));
        tb.cmp(&ta)
            .then(a.degree.cmp(&b.degree))
            .then_with(|| a.exponents.cmp(&b.exponents))
    });
    let degrees = raw.iter().map(|r| r.degree).collect();
    let rows = raw
        .into_iter()
        .map(|r| ClassFunction::new(g, r.values).expect("one value per class"))
        .collect();
    (rows, degrees)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        assert_eq!(dixon_prime(6, 6), 7);
        assert_eq!(dixon_prime(2, 1), 3);
        // p ≡ 1 mod 60 and p² > 4·120.
        assert_eq!(dixon_prime(60, 120), 61);
        assert_eq!(dixon_prime(1, 10_000), 211);
    }
}
