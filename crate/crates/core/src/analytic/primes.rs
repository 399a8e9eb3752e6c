use serde::Serialize;

use crate::error::{Error, Result};

/// Primes up to a bound, by the sieve of Eratosthenes.
#[derive(Clone, Debug)]
pub struct Primes {
    bound: u64,
    primes: Vec<u64>,
}

impl Primes {
    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn list(&self) -> &[u64] {
        &self.primes
    }

    /// `π(x)` for `x ≤ bound`.
    pub fn pi(&self, x: u64) -> usize {
        assert!(x <= self.bound, "π({x}) requested beyond sieve bound {}", self.bound);
        self.primes.partition_point(|&p| p <= x)
    }

    pub fn is_prime(&self, n: u64) -> bool {
        self.primes.binary_search(&n).is_ok()
    }
}

pub fn sieve(h: u64) -> Primes {
    let n = h as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    Primes { bound: h, primes }
}

/// `π(h)` by a segmented sieve over blocks of `√h`, sharing no code with
/// [`sieve`].
pub fn segmented_prime_count(h: u64) -> u64 {
    if h < 2 {
        return 0;
    }
    let root = (h as f64).sqrt() as u64 + 1;
    let mut small = Vec::new();
    let mut mark = vec![true; root as usize + 1];
    for i in 2..=root as usize {
        if mark[i] {
            small.push(i as u64);
            for j in (i * i..=root as usize).step_by(i) {
                mark[j] = false;
            }
        }
    }
    let block = root.max(1 << 15);
    let mut count = 0u64;
    let mut lo = 2u64;
    while lo <= h {
        let hi = (lo + block - 1).min(h);
        let mut is_prime = vec![true; (hi - lo + 1) as usize];
        for &p in &small {
            if p * p > hi {
                break;
            }
            let start = (p * p).max(lo.div_ceil(p) * p);
            let mut m = start;
            while m <= hi {
                is_prime[(m - lo) as usize] = false;
                m += p;
            }
        }
        count += is_prime.iter().filter(|&&b| b).count() as u64;
        lo = hi + 1;
    }
    count
}

/// Whether each of `0..=n` is squarefree (`0` is not).
pub fn squarefree_flags(n: u64) -> Vec<bool> {
    let mut flags = vec![true; n as usize + 1];
    flags[0] = false;
    let mut d = 2u64;
    while d * d <= n {
        let sq = (d * d) as usize;
        for j in (sq..=n as usize).step_by(sq) {
            flags[j] = false;
        }
        d += 1;
    }
    flags
}

/// Squarefree flags for `lo..=hi`.
pub fn squarefree_window(lo: u64, hi: u64) -> Vec<bool> {
    let mut flags = vec![true; (hi - lo + 1) as usize];
    if lo == 0 {
        flags[0] = false;
    }
    let mut d = 2u64;
    while d * d <= hi {
        let sq = d * d;
        let mut m = lo.div_ceil(sq) * sq;
        while m <= hi {
            flags[(m - lo) as usize] = false;
            m += sq;
        }
        d += 1;
    }
    flags
}

/// Jacobi symbol `(a/n)` for odd positive `n`.
pub fn jacobi(a: i64, n: u64) -> i32 {
    assert!(n % 2 == 1, "Jacobi symbol needs an odd modulus");
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Kronecker symbol `(d/n)` for `n ≥ 1`.
pub fn kronecker(d: i64, n: u64) -> i32 {
    if n == 0 {
        return (d.abs() == 1) as i32;
    }
    let mut n = n;
    let mut result = 1;
    while n % 2 == 0 {
        n /= 2;
        if d % 2 == 0 {
            return 0;
        }
        if d.rem_euclid(8) == 3 || d.rem_euclid(8) == 5 {
            result = -result;
        }
    }
    result * jacobi(d, n)
}

/// Abelian extensions of ℚ whose Frobenius classes are explicit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ExtensionKind {
    /// `ℚ(ζ_m)`, Frobenius at `p` is `p mod m`.
    Cyclotomic(u64),
    /// The quadratic field of discriminant `D`, Frobenius is `(D/p)`.
    Kronecker(i64),
}

impl ExtensionKind {
    pub fn parse(s: &str) -> Result<ExtensionKind> {
        let s = s.trim();
        let bad = || Error::Input(format!("unknown extension `{s}`; expected cyclotomic(m) or kronecker(D)"));
        let inner = |prefix: &str| s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
        if let Some(m) = inner("cyclotomic(") {
            let m: u64 = m.trim().parse().map_err(|_| bad())?;
            if m == 0 {
                return Err(bad());
            }
            Ok(ExtensionKind::Cyclotomic(m))
        } else if let Some(d) = inner("kronecker(") {
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 || !(d.rem_euclid(4) == 0 || d.rem_euclid(4) == 1) {
                return Err(Error::Input(format!("{d} is not a discriminant")));
            }
            Ok(ExtensionKind::Kronecker(d))
        } else {
            Err(bad())
        }
    }

    /// `|Gal(K/ℚ)|`.
    pub fn degree(&self) -> u64 {
        match *self {
            ExtensionKind::Cyclotomic(m) => crate::cyclotomic::euler_phi(m as u32) as u64,
            ExtensionKind::Kronecker(d) => {
                if d == 1 {
                    1
                } else {
                    2
                }
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            ExtensionKind::Cyclotomic(m) => format!("cyclotomic({m})"),
            ExtensionKind::Kronecker(d) => format!("kronecker({d})"),
        }
    }
}

/// Frobenius class of a prime: a residue mod `m`, a Kronecker sign, or
/// `None` when the prime ramifies.
pub fn frobenius_oracle(kind: ExtensionKind, p: u64) -> Option<i64> {
    match kind {
        ExtensionKind::Cyclotomic(m) => {
            if num_integer::gcd(p, m) != 1 {
                None
            } else {
                Some((p % m) as i64)
            }
        }
        ExtensionKind::Kronecker(d) => match kronecker(d, p) {
            0 => None,
            s => Some(s as i64),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let p = sieve(100);
        assert_eq!(p.pi(10), 4);
        assert_eq!(p.pi(100), 25);
        assert_eq!(p.pi(1), 0);
        assert_eq!(segmented_prime_count(100), 25);
        assert_eq!(segmented_prime_count(2), 1);
    }

    #[test]
    fn kronecker_values() {
        assert_eq!(kronecker(-4, 3), -1);
        assert_eq!(kronecker(-4, 5), 1);
        assert_eq!(kronecker(-4, 2), 0);
        assert_eq!(kronecker(5, 2), -1);
        assert_eq!(kronecker(8, 7), 1);
        assert_eq!(jacobi(2, 15), 1);
    }

    #[test]
    fn squarefree_windows_agree() {
        let all = squarefree_flags(200);
        let w = squarefree_window(150, 200);
        assert_eq!(&all[150..=200], &w[..]);
        assert_eq!(all.iter().filter(|&&b| b).count(), 122);
    }
}
