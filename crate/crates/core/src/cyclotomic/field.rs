use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::basis::{basis, Basis};
use crate::error::{input, Result};
use crate::linalg::rational;

/// An element of ℚ(ζ_e), stored by its coordinates in the power basis
/// `1, ζ, …, ζ^{φ(e)−1}` modulo Φ_e.
///
/// Arithmetic across conductors promotes both operands to the lcm. Equality
/// compares values, not representations. [`Cyclotomic::canonical`] moves a
/// value to the smallest conductor containing it.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Cyclotomic {
    pub fn zero() -> Cyclotomic {
        Cyclotomic::from_rational(BigRational::zero())
    }

    pub fn one() -> Cyclotomic {
        Cyclotomic::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Cyclotomic {
        Cyclotomic::from_rational(rat(n))
    }

    pub fn from_rational(q: BigRational) -> Cyclotomic {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![q],
        }
    }

    /// `ζ_e^k`.
    pub fn root_of_unity(e: u32, k: i64) -> Cyclotomic {
        assert!(e > 0, "conductor must be positive");
        let b = basis(e);
        let j = k.rem_euclid(e as i64) as usize;
        Cyclotomic {
            conductor: e,
            coeffs: b.powers[j].iter().map(|&c| rat(c)).collect(),
        }
    }

    /// `Σ_k counts[k] · ζ_e^k` with integer multiplicities.
    pub fn from_exponent_counts(e: u32, counts: &[i64]) -> Cyclotomic {
        let b = basis(e);
        let mut acc = vec![0i64; b.phi];
        for (k, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (a, &r) in acc.iter_mut().zip(&b.powers[k % e as usize]) {
                *a += c * r;
            }
        }
        Cyclotomic {
            conductor: e,
            coeffs: acc.into_iter().map(rat).collect(),
        }
    }

    /// Builds a value from explicit power-basis coordinates.
    pub fn from_coefficients(e: u32, coeffs: Vec<BigRational>) -> Result<Cyclotomic> {
        if e == 0 {
            return input("conductor must be positive");
        }
        let phi = basis(e).phi;
        if coeffs.len() > phi {
            // Allow any polynomial in ζ_e and reduce it.
            let mut acc = vec![BigRational::zero(); phi];
            let b = basis(e);
            for (k, c) in coeffs.iter().enumerate() {
                for (a, &r) in acc.iter_mut().zip(&b.powers[k % e as usize]) {
                    *a += c * rat(r);
                }
            }
            return Ok(Cyclotomic { conductor: e, coeffs: acc });
        }
        let mut coeffs = coeffs;
        coeffs.resize(phi, BigRational::zero());
        Ok(Cyclotomic { conductor: e, coeffs })
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    fn basis(&self) -> std::sync::Arc<Basis> {
        basis(self.conductor)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Re-expresses the value in ℚ(ζ_m) for a multiple `m` of the conductor.
    pub fn promote(&self, m: u32) -> Cyclotomic {
        assert!(m % self.conductor == 0, "promotion target must be a multiple");
        if m == self.conductor {
            return self.clone();
        }
        let b = basis(m);
        let step = (m / self.conductor) as usize;
        let mut acc = vec![BigRational::zero(); b.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (a, &r) in acc.iter_mut().zip(&b.powers[(j * step) % m as usize]) {
                if r != 0 {
                    *a += c * rat(r);
                }
            }
        }
        Cyclotomic { conductor: m, coeffs: acc }
    }

    fn aligned(&self, other: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let m = self.conductor.lcm(&other.conductor);
        (self.promote(m), other.promote(m))
    }

    /// The automorphism `ζ ↦ ζ^k`; requires `gcd(k, e) = 1`.
    pub fn galois(&self, k: i64) -> Result<Cyclotomic> {
        let e = self.conductor as i64;
        if k.gcd(&e) != 1 {
            return input(format!("galois({k}) is not an automorphism of ℚ(ζ_{e})"));
        }
        let b = self.basis();
        let mut acc = vec![BigRational::zero(); b.phi];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = ((j as i64) * k).rem_euclid(e) as usize;
            for (a, &r) in acc.iter_mut().zip(&b.powers[idx]) {
                if r != 0 {
                    *a += c * rat(r);
                }
            }
        }
        Ok(Cyclotomic {
            conductor: self.conductor,
            coeffs: acc,
        })
    }

    /// Complex conjugation, `galois(−1)`.
    pub fn conj(&self) -> Cyclotomic {
        self.galois(-1).expect("−1 is always a unit")
    }

    pub fn scale(&self, q: &BigRational) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    fn mul_same(&self, other: &Cyclotomic) -> Cyclotomic {
        let b = self.basis();
        let phi = b.phi;
        let mut raw = vec![BigRational::zero(); 2 * phi - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        // Reduce by the monic Φ_e from the top down.
        for d in (phi..raw.len()).rev() {
            let c = std::mem::take(&mut raw[d]);
            if c.is_zero() {
                continue;
            }
            for (i, &p) in b.poly[..phi].iter().enumerate() {
                if p != 0 {
                    raw[d - phi + i] -= &c * rat(p);
                }
            }
        }
        raw.truncate(phi);
        Cyclotomic {
            conductor: self.conductor,
            coeffs: raw,
        }
    }

    /// Multiplicative inverse via the norm: `1/a = Π_{σ≠1} σ(a) / N(a)`.
    pub fn inverse(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return input("zero has no inverse");
        }
        let e = self.conductor as i64;
        let mut others = Cyclotomic::one();
        for k in 2..=e.max(2) {
            if k <= e && k.gcd(&e) == 1 {
                others = &others * &self.galois(k)?;
            }
        }
        let norm = (self * &others)
            .to_rational()
            .expect("norm lies in ℚ");
        Ok(others.scale(&norm.recip()))
    }

    /// The same value in the smallest conductor containing it (conductors
    /// `≡ 2 mod 4` never occur except 2 itself becomes 1).
    pub fn canonical(&self) -> Cyclotomic {
        if self.is_rational() {
            return Cyclotomic::from_rational(self.coeffs[0].clone());
        }
        let e = self.conductor;
        let mut divisors: Vec<u32> = (1..e).filter(|d| e % d == 0).collect();
        divisors.sort_unstable();
        for d in divisors {
            if let Some(v) = self.restrict_to(d) {
                return v;
            }
        }
        self.clone()
    }

    /// The value as an element of ℚ(ζ_d) for `d | e`, if it lies there.
    fn restrict_to(&self, d: u32) -> Option<Cyclotomic> {
        let e = self.conductor;
        let big = basis(e);
        let small = basis(d);
        let step = (e / d) as usize;
        // Columns: images of 1, ζ_d, …, ζ_d^{φ(d)−1} in ℚ(ζ_e).
        let rows: Vec<rational::Row> = (0..big.phi)
            .map(|r| {
                (0..small.phi)
                    .map(|j| rat(big.powers[(j * step) % e as usize][r]))
                    .collect()
            })
            .collect();
        let x = rational::solve(&rows, small.phi, &self.coeffs)?;
        Some(Cyclotomic { conductor: d, coeffs: x })
    }

    /// Lexicographic comparison of coordinates after promotion to a common
    /// conductor. Total on any fixed conductor.
    pub fn cmp_coordinates(&self, other: &Cyclotomic) -> Ordering {
        let (a, b) = self.aligned(other);
        a.coeffs.cmp(&b.coeffs)
    }

    /// `cyclo(e; c₀, c₁, …)` in canonical form.
    pub fn to_text(&self) -> String {
        let c = self.canonical();
        let parts: Vec<String> = c.coeffs.iter().map(|q| q.to_string()).collect();
        format!("cyclo({}; {})", c.conductor, parts.join(", "))
    }

    /// Parses `cyclo(e; c₀, …)`, or a bare rational such as `-3/4`.
    pub fn parse(text: &str) -> Result<Cyclotomic> {
        let t = text.trim();
        let parse_q = |s: &str| -> Result<BigRational> {
            let s = s.trim();
            s.parse::<BigRational>()
                .map_err(|_| crate::Error::Input(format!("bad rational `{s}` in `{text}`")))
        };
        if let Some(body) = t.strip_prefix("cyclo(").and_then(|s| s.strip_suffix(')')) {
            let (e, rest) = match body.split_once(';') {
                Some(x) => x,
                None => return input(format!("missing `;` in `{text}`")),
            };
            let e: u32 = e
                .trim()
                .parse()
                .map_err(|_| crate::Error::Input(format!("bad conductor in `{text}`")))?;
            let coeffs = rest
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(parse_q)
                .collect::<Result<Vec<_>>>()?;
            return Cyclotomic::from_coefficients(e, coeffs);
        }
        Ok(Cyclotomic::from_rational(parse_q(t)?))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonical();
        if let Some(q) = c.to_rational() {
            return write!(f, "{q}");
        }
        let e = c.conductor;
        let mut terms = Vec::new();
        for (j, q) in c.coeffs.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            let mono = match j {
                0 => String::new(),
                1 => format!("z{e}"),
                _ => format!("z{e}^{j}"),
            };
            let term = if mono.is_empty() {
                q.to_string()
            } else if q.is_one() {
                mono
            } else if *q == -BigRational::one() {
                format!("-{mono}")
            } else {
                format!("{q}*{mono}")
            };
            terms.push(term);
        }
        let mut s = terms.join(" + ");
        s = s.replace("+ -", "- ");
        write!(f, "{s}")
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            return Cyclotomic {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
            };
        }
        let (a, b) = self.aligned(rhs);
        &a + &b
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if let Some(q) = rhs.to_rational() {
            return self.scale(&q);
        }
        if let Some(q) = self.to_rational() {
            return rhs.scale(&q);
        }
        if self.conductor == rhs.conductor {
            return self.mul_same(rhs);
        }
        let (a, b) = self.aligned(rhs);
        a.mul_same(&b)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(), |acc, x| &acc + &x)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Cyclotomic {
        Cyclotomic::from_integer(n)
    }
}

impl From<BigRational> for Cyclotomic {
    fn from(q: BigRational) -> Cyclotomic {
        Cyclotomic::from_rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(e: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(e, k)
    }

    #[test]
    fn documented_identities() {
        assert_eq!(&z(3, 1) + &z(3, 2), Cyclotomic::from_integer(-1));
        assert_eq!(z(4, 1).conj(), -z(4, 1));
        assert_eq!(&z(5, 1) * &z(5, 4), Cyclotomic::one());
    }

    #[test]
    fn mixed_conductors_promote() {
        // ζ₄ · ζ₃ = ζ₁₂^{3+4}
        assert_eq!(&z(4, 1) * &z(3, 1), z(12, 7));
        assert_eq!(z(2, 1), Cyclotomic::from_integer(-1));
        assert_eq!(z(6, 2), z(3, 1));
        assert_eq!((&z(12, 4) + &z(3, 2)).canonical().conductor(), 1);
    }

    #[test]
    fn galois_action() {
        assert!(z(6, 1).galois(2).is_err());
        let a = &z(12, 1) + &Cyclotomic::from_integer(3);
        assert_eq!(a.galois(5).unwrap().galois(7).unwrap(), a.galois(35 % 12).unwrap());
        assert_eq!(a.galois(-1).unwrap(), a.conj());
    }

    #[test]
    fn canonical_form_and_text() {
        let a = z(12, 4);
        let c = a.canonical();
        assert_eq!(c.conductor(), 3);
        assert_eq!(c, a);
        assert_eq!(a.to_text(), "cyclo(3; 0, 1)");
        let sqrt_minus_3 = &z(3, 1) - &z(3, 2);
        assert_eq!(Cyclotomic::parse(&sqrt_minus_3.to_text()).unwrap(), sqrt_minus_3);
        assert_eq!(Cyclotomic::parse("-3/4").unwrap().to_text(), "cyclo(1; -3/4)");
        assert!(Cyclotomic::parse("cyclo(3 1)").is_err());
        // √5 = ζ₅ − ζ₅² − ζ₅³ + ζ₅⁴ lies in ℚ(ζ₅), not in a smaller field.
        let s5 = &(&z(5, 1) - &z(5, 2)) + &(&z(5, 4) - &z(5, 3));
        assert_eq!(&s5 * &s5, Cyclotomic::from_integer(5));
        assert_eq!(s5.canonical().conductor(), 5);
    }

    #[test]
    fn inverses() {
        let a = &z(7, 1) + &Cyclotomic::from_integer(2);
        assert_eq!(&a * &a.inverse().unwrap(), Cyclotomic::one());
        assert!(Cyclotomic::zero().inverse().is_err());
    }
}
