//! Dirichlet characters stored as exponent tables: `χ(a) = ζ_e^{k(a)}` for
//! units `a mod q`, and `0` otherwise.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use super::interval::{down, up, Interval};
use super::primes::{kronecker, sieve, Primes};
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};

/// Largest modulus accepted by the constructors.
pub const MAX_MODULUS: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    order_of_values: u32,
    exponents: Vec<Option<u32>>,
    label: String,
}

fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn multiplicative_order(a: u64, m: u64) -> u64 {
    let mut x = a % m;
    let mut k = 1;
    while x != 1 % m {
        x = x * a % m;
        k += 1;
    }
    k
}

/// One cyclic factor of `(ℤ/q)^×`: a modulus `m | q`, and the discrete
/// logarithm of every residue mod `m` to a fixed generator.
struct CyclicFactor {
    modulus: u64,
    order: u64,
    logs: Vec<Option<u64>>,
}

impl CyclicFactor {
    fn from_generator(modulus: u64, g: u64, order: u64) -> CyclicFactor {
        let mut logs = vec![None; modulus as usize];
        let mut x = 1 % modulus;
        for k in 0..order {
            logs[x as usize] = Some(k);
            x = x * g % modulus;
        }
        CyclicFactor { modulus, order, logs }
    }

    fn log(&self, a: u64) -> Option<u64> {
        self.logs[(a % self.modulus) as usize]
    }
}

/// Cyclic factors of `(ℤ/q)^×`. For `2^k` with `k ≥ 3` the two factors are
/// `⟨−1⟩` and `⟨5⟩`; both are read off the residue mod `2^k`.
fn unit_group_factors(q: u64) -> Vec<CyclicFactor> {
    let mut out = Vec::new();
    for (p, k) in factor(q) {
        let pk = p.pow(k);
        if p == 2 {
            match k {
                1 => {}
                2 => out.push(CyclicFactor::from_generator(4, 3, 2)),
                _ => {
                    let order5 = pk / 4;
                    let mut sign_logs = vec![None; pk as usize];
                    let mut five_logs = vec![None; pk as usize];
                    let mut x = 1u64;
                    for j in 0..order5 {
                        sign_logs[x as usize] = Some(0);
                        sign_logs[(pk - x) as usize] = Some(1);
                        five_logs[x as usize] = Some(j);
                        five_logs[(pk - x) as usize] = Some(j);
                        x = x * 5 % pk;
                    }
                    out.push(CyclicFactor {
                        modulus: pk,
                        order: 2,
                        logs: sign_logs,
                    });
                    out.push(CyclicFactor {
                        modulus: pk,
                        order: order5,
                        logs: five_logs,
                    });
                }
            }
        } else {
            let phi = pk / p * (p - 1);
            let g = (2..pk)
                .find(|&g| g % p != 0 && multiplicative_order(g, pk) == phi)
                .expect("odd prime powers have primitive roots");
            out.push(CyclicFactor::from_generator(pk, g, phi));
        }
    }
    out
}

fn check_modulus(q: u64) -> Result<()> {
    if q == 0 || q > MAX_MODULUS {
        return Err(Error::Input(format!("modulus {q} outside 1..={MAX_MODULUS}")));
    }
    Ok(())
}

impl DirichletCharacter {
    pub fn trivial(q: u64) -> Result<DirichletCharacter> {
        check_modulus(q)?;
        let exponents = (0..q).map(|a| (a.gcd(&q) == 1).then_some(0)).collect();
        Ok(DirichletCharacter {
            modulus: q,
            order_of_values: 1,
            exponents,
            label: format!("chi_{q}(1)"),
        })
    }

    /// Every character mod `q`, indexed by exponent tuples on the cyclic
    /// factors of `(ℤ/q)^×`. The trivial character comes first.
    pub fn all(q: u64) -> Result<Vec<DirichletCharacter>> {
        check_modulus(q)?;
        let factors = unit_group_factors(q);
        let lambda = factors.iter().fold(1u64, |l, f| l.lcm(&f.order));
        let units: Vec<u64> = (0..q).filter(|a| a.gcd(&q) == 1).collect();
        let logs: Vec<Vec<u64>> = units
            .iter()
            .map(|&a| factors.iter().map(|f| f.log(a).expect("unit")).collect())
            .collect();
        let mut out = Vec::new();
        let mut tuple = vec![0u64; factors.len()];
        loop {
            let mut exponents = vec![None; q as usize];
            for (u, l) in units.iter().zip(&logs) {
                let k = tuple
                    .iter()
                    .zip(l)
                    .zip(&factors)
                    .map(|((c, x), f)| c * x % f.order * (lambda / f.order))
                    .sum::<u64>()
                    % lambda;
                exponents[*u as usize] = Some(k as u32);
            }
            let label = format!(
                "chi_{q}({})",
                tuple.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
            );
            let mut chi = DirichletCharacter {
                modulus: q,
                order_of_values: lambda as u32,
                exponents,
                label,
            };
            chi.reduce();
            out.push(chi);
            let mut i = 0;
            loop {
                if i == tuple.len() {
                    return Ok(out);
                }
                tuple[i] += 1;
                if tuple[i] < factors[i].order {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
        }
    }

    /// The primitive characters mod `q`.
    pub fn primitive(q: u64) -> Result<Vec<DirichletCharacter>> {
        Ok(DirichletCharacter::all(q)?
            .into_iter()
            .filter(|c| c.is_primitive())
            .collect())
    }

    /// `a ↦ (D/a)` with modulus `|D|`, for a fundamental discriminant or `1`.
    pub fn kronecker(d: i64) -> Result<DirichletCharacter> {
        let q = d.unsigned_abs();
        check_modulus(q)?;
        let exponents = (0..q)
            .map(|a| match kronecker(d, a) {
                0 => None,
                1 => Some(0),
                _ => Some(1),
            })
            .collect();
        let mut chi = DirichletCharacter {
            modulus: q,
            order_of_values: 2,
            exponents,
            label: format!("kronecker({d})"),
        };
        chi.reduce();
        Ok(chi)
    }

    /// Shrinks `e` to the order of the character.
    fn reduce(&mut self) {
        let e = self.order_of_values;
        let g = self.exponents.iter().flatten().fold(e, |g, &k| g.gcd(&k));
        if g > 1 {
            for k in self.exponents.iter_mut().flatten() {
                *k /= g;
            }
            self.order_of_values = e / g;
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The order of `χ` in the character group.
    pub fn order(&self) -> u32 {
        self.order_of_values
    }

    pub fn is_trivial(&self) -> bool {
        self.order_of_values == 1
    }

    /// `k` with `χ(a) = ζ_e^k`, `None` when `gcd(a, q) > 1`.
    pub fn exponent(&self, a: u64) -> Option<u32> {
        self.exponents[(a % self.modulus) as usize]
    }

    pub fn value(&self, a: u64) -> Cyclotomic {
        match self.exponent(a) {
            None => Cyclotomic::zero(),
            Some(k) => Cyclotomic::root_of_unity(self.order_of_values, k as i64),
        }
    }

    /// `χ(a)` as a complex float `(re, im)`.
    pub fn complex(&self, a: u64) -> (f64, f64) {
        match self.exponent(a) {
            None => (0.0, 0.0),
            Some(k) => {
                let t = std::f64::consts::TAU * k as f64 / self.order_of_values as f64;
                (t.cos(), t.sin())
            }
        }
    }

    /// The smallest `f | q` such that `χ` is trivial on units `≡ 1 mod f`.
    pub fn conductor(&self) -> u64 {
        let q = self.modulus;
        let mut divisors: Vec<u64> = (1..=q).filter(|f| q % f == 0).collect();
        divisors.sort_unstable();
        for f in divisors {
            let ok = (1..q)
                .step_by(f as usize)
                .all(|a| self.exponent(a).is_none_or(|k| k == 0));
            if ok {
                return f;
            }
        }
        q
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.modulus
    }

    /// Whether the two characters agree on every integer.
    pub fn same_function(&self, other: &DirichletCharacter) -> bool {
        let l = self.modulus.lcm(&other.modulus);
        let e = self.order_of_values.lcm(&other.order_of_values);
        (0..l).all(|a| match (self.exponent(a), other.exponent(a)) {
            (None, None) => true,
            (Some(x), Some(y)) => x * (e / self.order_of_values) == y * (e / other.order_of_values),
            _ => false,
        })
    }
}

/// `(1/φ(L)) Σ χ(a) conj ψ(a)` over units mod `L = lcm(q_χ, q_ψ)`, exactly.
pub fn character_inner_product(chi: &DirichletCharacter, psi: &DirichletCharacter) -> Cyclotomic {
    let l = chi.modulus.lcm(&psi.modulus);
    let e = chi.order_of_values.lcm(&psi.order_of_values);
    let mut counts = vec![0i64; e as usize];
    let mut units = 0i64;
    for a in 0..l {
        if a.gcd(&l) != 1 {
            continue;
        }
        units += 1;
        let x = chi.exponent(a).expect("unit") * (e / chi.order_of_values);
        let y = psi.exponent(a).expect("unit") * (e / psi.order_of_values);
        counts[((x + e - y) % e) as usize] += 1;
    }
    let sum = Cyclotomic::from_exponent_counts(e, &counts);
    sum.scale(&num_rational::BigRational::new(1.into(), units.into()))
}

/// Exponent counts of `χ(p)` over primes `p ≤ h`; ramified primes are skipped.
pub fn prime_exponent_counts(chi: &DirichletCharacter, primes: &Primes, h: u64) -> Vec<i64> {
    let mut counts = vec![0i64; chi.order_of_values as usize];
    for &p in primes.list().iter().take_while(|&&p| p <= h) {
        if let Some(k) = chi.exponent(p) {
            counts[k as usize] += 1;
        }
    }
    counts
}

/// `Σ_{p ≤ h} χ(p)` over primes, exactly.
pub fn char_sum(chi: &DirichletCharacter, h: u64) -> Cyclotomic {
    let primes = sieve(h);
    Cyclotomic::from_exponent_counts(chi.order_of_values, &prime_exponent_counts(chi, &primes, h))
}

/// `|Σ_{p ≤ h} χ(p)|` enclosed from the exact sum.
pub fn char_sum_abs(sum: &Cyclotomic) -> Interval {
    let (lo, hi) = sum.to_complex(20).abs_squared_bounds();
    let f = |q: &num_rational::BigRational| num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::INFINITY);
    Interval::new(down(f(&lo).max(0.0)).max(0.0), up(f(&hi))).sqrt()
}

/// A completely multiplicative function on squarefree integers: a
/// Dirichlet character with the values at finitely many primes replaced by
/// complex numbers of modulus at most `1`.
#[derive(Clone, Debug)]
pub struct AcceptableMultFn {
    pub base: DirichletCharacter,
    pub overrides: BTreeMap<u64, (f64, f64)>,
}

impl AcceptableMultFn {
    pub fn new(base: DirichletCharacter) -> AcceptableMultFn {
        AcceptableMultFn {
            base,
            overrides: BTreeMap::new(),
        }
    }

    pub fn with_override(mut self, p: u64, value: (f64, f64)) -> Result<AcceptableMultFn> {
        if value.0.hypot(value.1) > 1.0 + 1e-12 {
            return Err(Error::Input(format!("override at {p} has modulus above 1")));
        }
        if factor(p).len() != 1 || factor(p)[0].1 != 1 {
            return Err(Error::Input(format!("override index {p} is not prime")));
        }
        self.overrides.insert(p, value);
        Ok(self)
    }

    /// `f(a)` for squarefree `a`.
    pub fn value(&self, a: u64) -> (f64, f64) {
        let mut rest = a;
        let mut acc = (1.0, 0.0);
        for (&p, &(x, y)) in &self.overrides {
            if rest % p == 0 {
                rest /= p;
                acc = (acc.0 * x - acc.1 * y, acc.0 * y + acc.1 * x);
            }
        }
        let (x, y) = self.base.complex(rest);
        (acc.0 * x - acc.1 * y, acc.0 * y + acc.1 * x)
    }

    /// The number of overridden primes, `#S`.
    pub fn exceptional(&self) -> usize {
        self.overrides.len()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterSummary {
    pub label: String,
    pub modulus: u64,
    pub conductor: u64,
    pub order: u32,
}

impl From<&DirichletCharacter> for CharacterSummary {
    fn from(c: &DirichletCharacter) -> CharacterSummary {
        CharacterSummary {
            label: c.label.clone(),
            modulus: c.modulus,
            conductor: c.conductor(),
            order: c.order(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_characters() {
        for q in 1..=60u64 {
            let phi = (1..=q).filter(|a| a.gcd(&q) == 1).count();
            let all = DirichletCharacter::all(q).unwrap();
            assert_eq!(all.len(), phi, "q = {q}");
            assert!(all[0].is_trivial());
            for (i, a) in all.iter().enumerate() {
                for b in &all[i + 1..] {
                    assert!(!a.same_function(b));
                }
            }
        }
    }

    #[test]
    fn multiplicative() {
        for q in [8u64, 15, 16, 36, 45] {
            for chi in DirichletCharacter::all(q).unwrap() {
                let e = chi.order();
                for a in 0..q {
                    for b in 0..q {
                        let ab = chi.exponent(a * b);
                        let prod = chi.exponent(a).zip(chi.exponent(b)).map(|(x, y)| (x + y) % e);
                        assert_eq!(ab, prod);
                    }
                }
            }
        }
    }

    #[test]
    fn kronecker_minus_four() {
        let chi = DirichletCharacter::kronecker(-4).unwrap();
        assert_eq!(chi.conductor(), 4);
        assert_eq!(chi.order(), 2);
        assert_eq!(char_sum(&chi, 10).to_rational().unwrap(), num_rational::BigRational::from_integer((-1).into()));
    }
}
