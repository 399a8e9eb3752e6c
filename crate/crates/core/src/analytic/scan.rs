//! Prime counts in Frobenius classes and grid scans for large prime sums.

use serde::Serialize;

use super::bounds::{c_epsilon_interval, prime_sum_envelope};
use super::dirichlet::{char_sum_abs, prime_exponent_counts, DirichletCharacter};
use super::interval::Interval;
use super::primes::{frobenius_oracle, sieve, ExtensionKind};
use crate::config::Limits;
use crate::cyclotomic::Cyclotomic;
use crate::error::{gate, Error, Result};

/// Smallest `H` at which the deviation bound is asserted.
pub const PI_C_MIN_H: u64 = 100;

/// `H ≥ (log Δ_K)^{2 + [K:F]/2ε}` as an enclosure of the right side.
pub fn range_gate(log_disc: f64, deg_k_over_f: u64, eps: f64) -> Interval {
    let expo = Interval::point(2.0) + Interval::point(deg_k_over_f as f64) / Interval::point(2.0 * eps);
    (Interval::point(log_disc).ln() * expo).exp()
}

#[derive(Clone, Debug, Serialize)]
pub struct PiCReport {
    pub extension: String,
    pub class: Vec<i64>,
    pub h: u64,
    pub count: u64,
    pub pi: u64,
    /// `|C|/|G|`.
    pub density: f64,
    /// `count − (|C|/|G|) π(H)`.
    pub deviation: Interval,
    /// `(H/log H) exp(−c(ε)√log H)`.
    pub bound: Interval,
    pub gate: Interval,
    pub in_range: bool,
    /// Set when `H ≥ 100` and the range gate holds.
    pub pass: Option<bool>,
}

/// Counts primes `p ≤ H` whose Frobenius lies in `class` and compares the
/// deviation from the expected share with the envelope.
pub fn pi_c(kind: ExtensionKind, class: &[i64], h: u64, eps: f64, log_disc: f64, limits: &Limits) -> Result<PiCReport> {
    if h < 2 {
        return Err(Error::Input("H must be at least 2".into()));
    }
    if h > limits.enumeration_budget {
        return Err(Error::Capacity {
            what: "prime range",
            size: h,
            bound: limits.enumeration_budget,
        });
    }
    let group_order = kind.degree();
    let members: Vec<i64> = match kind {
        ExtensionKind::Cyclotomic(m) => {
            let mut v = Vec::new();
            for &c in class {
                let r = c.rem_euclid(m as i64);
                if num_integer::gcd(r as u64, m) != 1 && m > 1 {
                    return Err(Error::Input(format!("{c} is not a unit mod {m}")));
                }
                if !v.contains(&r) {
                    v.push(r);
                }
            }
            v
        }
        ExtensionKind::Kronecker(d) => {
            let mut v = Vec::new();
            for &c in class {
                if !(c == 1 || (c == -1 && d != 1)) {
                    return Err(Error::Input(format!("{c} is not a Frobenius sign of kronecker({d})")));
                }
                if !v.contains(&c) {
                    v.push(c);
                }
            }
            v
        }
    };
    if members.is_empty() {
        return Err(Error::Input("empty class".into()));
    }
    let primes = sieve(h);
    let count = primes
        .list()
        .iter()
        .filter(|&&p| frobenius_oracle(kind, p).is_some_and(|f| members.contains(&f)))
        .count() as u64;
    let pi = primes.list().len() as u64;
    let density = Interval::point(members.len() as f64) / Interval::point(group_order as f64);
    let deviation = Interval::from_int(count) - density * Interval::from_int(pi);
    let c = c_epsilon_interval(eps, group_order)?;
    let bound = prime_sum_envelope(h as f64, &c);
    let gate_value = range_gate(log_disc, group_order, eps);
    let in_range = gate_value.hi <= h as f64;
    let pass = (h >= PI_C_MIN_H && in_range).then(|| deviation.abs().certainly_le(&bound));
    Ok(PiCReport {
        extension: kind.name(),
        class: members,
        h,
        count,
        pi,
        density: density.mid(),
        deviation,
        bound,
        gate: gate_value,
        in_range,
        pass,
    })
}

/// A source of `|Σ_{p ≤ H} χ(p)|` on an increasing grid.
pub trait PrimeSumOracle {
    fn name(&self) -> String;
    fn is_trivial(&self) -> bool;
    fn abs_sums(&self, grid: &[u64]) -> Vec<Interval>;
}

/// Exact prime sums of a Dirichlet character.
pub struct CharacterOracle(pub DirichletCharacter);

impl PrimeSumOracle for CharacterOracle {
    fn name(&self) -> String {
        self.0.label().to_string()
    }

    fn is_trivial(&self) -> bool {
        self.0.is_trivial()
    }

    fn abs_sums(&self, grid: &[u64]) -> Vec<Interval> {
        let top = grid.iter().copied().max().unwrap_or(2);
        let primes = sieve(top);
        grid.iter()
            .map(|&h| {
                let counts = prime_exponent_counts(&self.0, &primes, h);
                char_sum_abs(&Cyclotomic::from_exponent_counts(self.0.order(), &counts))
            })
            .collect()
    }
}

/// `π(H)`: the prime sum with no cancellation at all.
pub struct NoCancellationOracle;

impl PrimeSumOracle for NoCancellationOracle {
    fn name(&self) -> String {
        "no-cancellation".into()
    }

    fn is_trivial(&self) -> bool {
        false
    }

    fn abs_sums(&self, grid: &[u64]) -> Vec<Interval> {
        let top = grid.iter().copied().max().unwrap_or(2);
        let primes = sieve(top);
        grid.iter().map(|&h| Interval::from_int(primes.pi(h) as u64)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanVerdict {
    Ok,
    Bad,
    Uncertain,
}

impl ScanVerdict {
    pub fn name(&self) -> &'static str {
        match self {
            ScanVerdict::Ok => "ok",
            ScanVerdict::Bad => "bad",
            ScanVerdict::Uncertain => "uncertain",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub h: u64,
    pub lhs: Interval,
    pub rhs: Interval,
    pub ratio: Interval,
    pub verdict: ScanVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub oracle: String,
    pub eps: f64,
    pub c_eps: Interval,
    pub gate: Interval,
    pub rows: Vec<ScanRow>,
    pub max_ratio: f64,
    pub first_flag: Option<u64>,
    pub flagged: bool,
}

impl ScanReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("H,lhs,rhs,ratio,verdict\n");
        for r in &self.rows {
            out.push_str(&format!("{},{},{},{},{}\n", r.h, r.lhs, r.rhs, r.ratio, r.verdict.name()));
        }
        out
    }
}

/// Parses `a:b:step` into `a, a+step, …, ≤ b`.
pub fn parse_grid(spec: &str) -> Result<Vec<u64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let bad = || Error::Input(format!("grid `{spec}` is not a:b:step"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let num = |s: &str| -> Result<u64> {
        let x: f64 = s.trim().parse().map_err(|_| bad())?;
        if x < 0.0 || x.fract() != 0.0 || x > 1e15 {
            return Err(bad());
        }
        Ok(x as u64)
    };
    let (a, b, step) = (num(parts[0])?, num(parts[1])?, num(parts[2])?);
    if step == 0 || a > b {
        return Err(bad());
    }
    Ok((a..=b).step_by(step as usize).collect())
}

/// Compares each grid sum with `(H/log H) exp(−c(ε)√log H)`; any grid point
/// at or above the envelope flags the extension.
pub fn eps_bad_scan(
    oracle: &dyn PrimeSumOracle,
    log_disc: f64,
    deg_k_over_f: u64,
    deg_k_over_q: u64,
    eps: f64,
    grid: &[u64],
    limits: &Limits,
) -> Result<ScanReport> {
    if oracle.is_trivial() || deg_k_over_f < 2 {
        return Err(Error::Input("the scan needs a nontrivial Galois extension".into()));
    }
    if grid.is_empty() || grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Input("grid must be nonempty and increasing".into()));
    }
    let top = *grid.last().expect("nonempty");
    if top > limits.enumeration_budget {
        return Err(Error::Capacity {
            what: "scan range",
            size: top,
            bound: limits.enumeration_budget,
        });
    }
    let c = c_epsilon_interval(eps, deg_k_over_q)?;
    let gate_value = range_gate(log_disc, deg_k_over_f, eps);
    if (grid[0] as f64) < gate_value.hi || grid[0] < 2 {
        return gate(
            "H ≥ (log Δ_K)^{2+[K:F]/2ε}",
            format!("grid starts at {} but the gate is {}", grid[0], gate_value.hi.max(2.0)),
        );
    }
    let sums = oracle.abs_sums(grid);
    let mut rows = Vec::with_capacity(grid.len());
    let mut max_ratio = 0.0f64;
    let mut first_flag = None;
    for (&h, lhs) in grid.iter().zip(sums) {
        let rhs = prime_sum_envelope(h as f64, &c);
        let ratio = lhs / rhs;
        let verdict = if lhs.certainly_lt(&rhs) {
            ScanVerdict::Ok
        } else if rhs.certainly_le(&lhs) {
            ScanVerdict::Bad
        } else {
            ScanVerdict::Uncertain
        };
        if verdict != ScanVerdict::Ok && first_flag.is_none() {
            first_flag = Some(h);
        }
        max_ratio = max_ratio.max(ratio.hi);
        rows.push(ScanRow {
            h,
            lhs,
            rhs,
            ratio,
            verdict,
        });
    }
    Ok(ScanReport {
        oracle: oracle.name(),
        eps,
        c_eps: c,
        gate: gate_value,
        flagged: first_flag.is_some(),
        rows,
        max_ratio,
        first_flag,
    })
}
