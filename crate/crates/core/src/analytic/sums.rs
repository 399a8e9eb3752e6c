//! Brute-force sums over squarefree integers compared with the explicit
//! bounds.

use std::collections::HashMap;

use serde::Serialize;

use super::bounds::{rhs_bounds, BoundKind, BoundParams};
use super::dirichlet::{character_inner_product, AcceptableMultFn, CharacterSummary, DirichletCharacter};
use super::interval::{up, Interval, LogValue};
use super::kernel::{eta, eta_tail_bound};
use super::primes::{sieve, squarefree_window};
use crate::config::Limits;
use crate::error::{Error, Result};

const WINDOW: u64 = 1 << 18;

/// Relative error allowed per evaluation of `η_H` by the closed form.
const ETA_REL_ERR: f64 = 1e-13;

#[derive(Clone, Debug, Serialize)]
pub struct SmoothedSum {
    pub h: f64,
    /// Last integer summed.
    pub cutoff: u64,
    pub terms: u64,
    /// Enclosures of the real and imaginary parts of the truncated sum.
    pub re: Interval,
    pub im: Interval,
    /// Certified bound for the absolute value of the omitted tail.
    pub tail: f64,
    /// Enclosure of `|Σ_a f(a) η_H(log a)|` including the tail.
    pub abs: Interval,
}

fn check_budget(what: &'static str, size: u64, limits: &Limits) -> Result<()> {
    if size > limits.enumeration_budget {
        return Err(Error::Capacity {
            what,
            size,
            bound: limits.enumeration_budget,
        });
    }
    Ok(())
}

/// `Σ_{a squarefree} f(a) η_H(log a)`, summed to `a ≤ cutoff` with the rest
/// bounded by the Gaussian tail of `η_H`.
pub fn smoothed_sum(f: &AcceptableMultFn, h: f64, cutoff: u64, limits: &Limits) -> Result<SmoothedSum> {
    if !(h >= 3.0) || !h.is_finite() {
        return Err(Error::Input(format!("H must be at least 3, got {h}")));
    }
    if (cutoff as f64) < h {
        return Err(Error::Input(format!("cutoff {cutoff} lies below H = {h}")));
    }
    check_budget("smoothed sum terms", cutoff, limits)?;
    let (mut re, mut im, mut err) = (0.0f64, 0.0f64, 0.0f64);
    let mut terms = 0u64;
    let mut lo = 1u64;
    while lo <= cutoff {
        let hi = (lo + WINDOW - 1).min(cutoff);
        let flags = squarefree_window(lo, hi);
        for (i, &sf) in flags.iter().enumerate() {
            if !sf {
                continue;
            }
            let a = lo + i as u64;
            let w = eta(h, (a as f64).ln());
            let (x, y) = f.value(a);
            re += x * w;
            im += y * w;
            err += w * (x.abs() + y.abs()) * ETA_REL_ERR + 4.0 * f64::EPSILON * (re.abs() + im.abs());
            terms += 1;
        }
        lo = hi + 1;
    }
    let err = up(err);
    let tail = up(eta_tail_bound(h, cutoff as f64));
    let re = Interval::new(re - err, re + err);
    let im = Interval::new(im - err, im + err);
    let abs = (re.sqr() + im.sqr()).sqrt();
    let abs = Interval::new((abs.lo - tail).max(0.0), up(abs.hi + tail));
    Ok(SmoothedSum {
        h,
        cutoff,
        terms,
        re,
        im,
        tail,
        abs,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SmoothedCheck {
    pub sum: SmoothedSum,
    pub log_q: f64,
    pub kappa: u8,
    pub rhs: LogValue,
    pub pass: bool,
}

/// Checks `|Σ f(a) η_H(log a)|` against the smoothed-sum bound with `n = d = 1`,
/// analytic conductor `Q` and pole order `r`. The sum runs to `H e²`.
pub fn smoothed_sum_check(f: &AcceptableMultFn, h: f64, q: f64, r: u32, limits: &Limits) -> Result<SmoothedCheck> {
    let params = BoundParams {
        log_q: q.ln(),
        log_h: h.ln(),
        s_count: f.exceptional() as f64,
        r: r as f64,
        ..BoundParams::default()
    };
    let rhs = rhs_bounds(BoundKind::Smoothed, &params)?;
    let cutoff = (h * std::f64::consts::E.powi(2)).floor() as u64;
    let sum = smoothed_sum(f, h, cutoff, limits)?;
    let pass = rhs.certainly_bounds(&sum.abs);
    Ok(SmoothedCheck {
        sum,
        log_q: params.log_q,
        kappa: (r > 0) as u8,
        rhs,
        pass,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BilinearReport {
    pub characters: Vec<CharacterSummary>,
    pub coefficients: Vec<f64>,
    pub h: u64,
    /// `Σ_{a<H squarefree} |Σ aᵢ χᵢ(a)|²`.
    pub lhs: Interval,
    /// Pairs `(i, j)`, `i ≠ j`, with `⟨χᵢ, χⱼ⟩ ≠ 0`.
    pub off_diagonal_pairs: Vec<(usize, usize)>,
    pub r: u64,
    pub trivial: LogValue,
    pub trivial_pass: bool,
    /// The gated bound, or the gate that failed.
    pub gated: std::result::Result<LogValue, String>,
    pub gated_pass: Option<bool>,
}

/// Compares the bilinear sum of a family of primitive characters with the
/// trivial bound and, when its gate holds, the gated bound.
pub fn bilinear_check(family: &[DirichletCharacter], coefficients: &[f64], h: u64, limits: &Limits) -> Result<BilinearReport> {
    if family.is_empty() || family.len() != coefficients.len() {
        return Err(Error::Input("need one coefficient per character".into()));
    }
    if coefficients.iter().any(|c| !c.is_finite()) {
        return Err(Error::Input("coefficients must be finite".into()));
    }
    if h < 2 {
        return Err(Error::Input("H must be at least 2".into()));
    }
    for (i, chi) in family.iter().enumerate() {
        if !chi.is_primitive() {
            return Err(Error::Input(format!("{} is not primitive", chi.label())));
        }
        if family[..i].iter().any(|psi| psi.same_function(chi)) {
            return Err(Error::Input(format!("{} appears twice", chi.label())));
        }
    }
    check_budget("bilinear sum terms", h, limits)?;

    let mut off_diagonal_pairs = Vec::new();
    let mut r = 1u64;
    let mut e_sum = 0.0;
    for i in 0..family.len() {
        for j in 0..family.len() {
            let ip = character_inner_product(&family[i], &family[j]);
            if ip.is_zero() {
                continue;
            }
            if i != j {
                off_diagonal_pairs.push((i, j));
            }
            if let Some(v) = ip.to_rational() {
                if v.is_integer() {
                    r = r.max(num_traits::ToPrimitive::to_u64(&v.to_integer()).unwrap_or(u64::MAX));
                }
            }
            e_sum += (coefficients[i] * coefficients[j]).abs();
        }
    }

    let l1: f64 = coefficients.iter().map(|c| c.abs()).sum();
    let (mut total, mut err) = (0.0f64, 0.0f64);
    let m = family.len() as f64;
    let per_term = (4.0 * m + 8.0) * f64::EPSILON * l1 * l1;
    let mut lo = 1u64;
    while lo < h {
        let hi = (lo + WINDOW - 1).min(h - 1);
        let flags = squarefree_window(lo, hi);
        for (i, &sf) in flags.iter().enumerate() {
            if !sf {
                continue;
            }
            let a = lo + i as u64;
            let (mut x, mut y) = (0.0, 0.0);
            for (chi, c) in family.iter().zip(coefficients) {
                let (u, v) = chi.complex(a);
                x += c * u;
                y += c * v;
            }
            total += x * x + y * y;
            err += per_term + 2.0 * f64::EPSILON * total;
        }
        lo = hi + 1;
    }
    let err = up(err);
    let lhs = Interval::new((total - err).max(0.0), up(total + err));

    let q = family.iter().map(|c| c.modulus()).max().unwrap_or(1);
    let params = BoundParams {
        log_q: (q as f64).ln(),
        log_h: (h as f64).ln(),
        a_l1: l1,
        e_sum,
        r: r as f64,
        ..BoundParams::default()
    };
    let trivial = rhs_bounds(BoundKind::Trivial, &params)?;
    let trivial_pass = trivial.certainly_bounds(&lhs);
    let gated = match rhs_bounds(BoundKind::Bilinear, &params) {
        Ok(v) => Ok(v),
        Err(Error::Gate { gate, detail }) => Err(format!("{gate}: {detail}")),
        Err(e) => return Err(e),
    };
    let gated_pass = gated.as_ref().ok().map(|b| b.certainly_bounds(&lhs));
    Ok(BilinearReport {
        characters: family.iter().map(CharacterSummary::from).collect(),
        coefficients: coefficients.to_vec(),
        h,
        lhs,
        off_diagonal_pairs,
        r,
        trivial,
        trivial_pass,
        gated,
        gated_pass,
    })
}

/// Squarefull integers `≤ h` in increasing order, `1` included.
pub fn squarefull_list(h: u64) -> Vec<u64> {
    let flags_bound = (h as f64).cbrt() as u64 + 2;
    let sf = super::primes::squarefree_flags(flags_bound);
    let mut out = Vec::new();
    let mut b = 1u64;
    while b * b * b <= h {
        if sf[b as usize] {
            let b3 = b * b * b;
            let mut a = 1u64;
            while a * a * b3 <= h {
                out.push(a * a * b3);
                a += 1;
            }
        }
        b += 1;
    }
    out.sort_unstable();
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SquarefullReport {
    pub h: u64,
    pub count: usize,
    /// The list itself when short.
    pub values: Option<Vec<u64>>,
    pub sum_inv_sqrt: Interval,
    pub sum_inv: Interval,
    /// `Σ r^{−1/2} ≤ 81 log H` at every `H' ≤ H` with `H' ≥ 3`.
    pub log_bound_holds: bool,
    /// `Σ r^{−1} ≤ 2` at every `H' ≤ H`.
    pub zeta_bound_holds: bool,
    /// Largest value of `Σ_{r ≤ H'} r^{−1/2} / (81 log H')` seen.
    pub worst_log_ratio: f64,
}

/// Partial sums over squarefull integers, checked at every jump.
pub fn squarefull_sums(h: u64, limits: &Limits) -> Result<SquarefullReport> {
    if h < 1 {
        return Err(Error::Input("H must be at least 1".into()));
    }
    check_budget("squarefull range", h, limits)?;
    let list = squarefull_list(h);
    let mut s_half = Interval::point(0.0);
    let mut s_one = Interval::point(0.0);
    let mut log_ok = true;
    let mut zeta_ok = true;
    let mut worst = 0.0f64;
    let two = Interval::point(2.0);
    for (i, &r) in list.iter().enumerate() {
        let ri = Interval::from_int(r);
        s_half = s_half + ri.sqrt().recip();
        s_one = s_one + ri.recip();
        zeta_ok &= s_one.certainly_le(&two);
        // The partial sum is constant on [r, next), where log H' is smallest at H' = r.
        let next = list.get(i + 1).copied().unwrap_or(h + 1);
        let start = r.max(3);
        if start < next {
            let bound = Interval::from_int(start).ln() * 81.0;
            log_ok &= s_half.certainly_le(&bound);
            worst = worst.max(s_half.hi / bound.lo);
        }
    }
    Ok(SquarefullReport {
        h,
        count: list.len(),
        values: (list.len() <= 64).then(|| list.clone()),
        sum_inv_sqrt: s_half,
        sum_inv: s_one,
        log_bound_holds: log_ok,
        zeta_bound_holds: zeta_ok,
        worst_log_ratio: worst,
    })
}

/// Coefficients `b_a` on squarefree `a < H` for the quantity `A₀t`.
#[derive(Clone, Debug)]
pub struct A0tData {
    pub h: u64,
    pub t: u32,
    pub d: u32,
    pub n: u32,
    /// `(a, |b_a|)` with `a` squarefree.
    pub coefficients: Vec<(u64, f64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum A0tMode {
    ExactBruteforce,
    PrimeSupportBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct A0tValue {
    pub mode: A0tMode,
    pub value: Interval,
    /// In bound mode: `(t! d^{2t} π(H)^t / H^t)^{1/2t}` and `d √t (π(H)/H)^{1/2}`.
    pub intermediate: Vec<Interval>,
}

fn factor_small(mut a: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= a {
        while a % p == 0 {
            out.push(p);
            a /= p;
        }
        p += 1;
    }
    if a > 1 {
        out.push(a);
    }
    out
}

/// `A₀t = (H^{−t} Σ G(r, b)²)^{1/2t}`. Each product `a₁⋯a_t` splits as `b r`
/// with `b` squarefree, `r` squarefull and coprime; `G(r, b)` sums
/// `f(r) |b_{a₁}⋯b_{a_t}|` over ordered tuples, with `f(r) = d^{Ω(r)}`.
pub fn a0t_eval(data: &A0tData, mode: A0tMode, limits: &Limits) -> Result<A0tValue> {
    if data.t == 0 || data.h < 2 {
        return Err(Error::Input("need t ≥ 1 and H ≥ 2".into()));
    }
    for &(a, b) in &data.coefficients {
        if a == 0 || a > data.h || !(b >= 0.0) || !b.is_finite() {
            return Err(Error::Input(format!("coefficient at {a} is outside 1..=H or not a finite magnitude")));
        }
        if factor_small(a).windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Input(format!("{a} is not squarefree")));
        }
    }
    let support: Vec<(Vec<u64>, f64)> = data
        .coefficients
        .iter()
        .filter(|(_, b)| *b != 0.0)
        .map(|&(a, b)| (factor_small(a), b))
        .collect();
    match mode {
        A0tMode::ExactBruteforce => {
            let tuples = (support.len() as f64).powi(data.t as i32);
            if tuples > limits.enumeration_budget as f64 {
                return Err(Error::Capacity {
                    what: "A0t tuples",
                    size: tuples.min(u64::MAX as f64) as u64,
                    bound: limits.enumeration_budget,
                });
            }
            if support.is_empty() {
                return Ok(A0tValue {
                    mode,
                    value: Interval::point(0.0),
                    intermediate: vec![],
                });
            }
            // Products of t-tuples, keyed by their sorted prime multiset.
            let mut level: HashMap<Vec<u64>, f64> = HashMap::new();
            level.insert(Vec::new(), 1.0);
            for _ in 0..data.t {
                let mut next: HashMap<Vec<u64>, f64> = HashMap::new();
                for (key, w) in &level {
                    for (primes, b) in &support {
                        let mut k = key.clone();
                        k.extend_from_slice(primes);
                        k.sort_unstable();
                        *next.entry(k).or_insert(0.0) += w * b;
                    }
                }
                level = next;
            }
            let mut total = 0.0f64;
            let mut keys: Vec<_> = level.into_iter().collect();
            keys.sort_by(|a, b| a.0.cmp(&b.0));
            for (k, w) in keys {
                let mut omega_r = 0i32;
                for run in k.chunk_by(|x, y| x == y) {
                    if run.len() >= 2 {
                        omega_r += run.len() as i32;
                    }
                }
                let g = (data.d as f64).powi(omega_r) * w;
                total += g * g;
            }
            let total = Interval::new(total * (1.0 - 1e-12), up(total * (1.0 + 1e-12)));
            let ht = Interval::from_int(data.h).powi(data.t as i32);
            let value = (total / ht).powf(&(Interval::point(1.0) / Interval::point(2.0 * data.t as f64)));
            Ok(A0tValue {
                mode,
                value,
                intermediate: vec![],
            })
        }
        A0tMode::PrimeSupportBound => {
            if data.h < 100 {
                return Err(Error::Precondition("the prime-support bound needs H ≥ 100".into()));
            }
            if support.iter().any(|(f, b)| f.len() != 1 || *b > 1.0) {
                return Err(Error::Precondition("coefficients must sit on primes with |b_p| ≤ 1".into()));
            }
            let pi = sieve(data.h).pi(data.h) as f64;
            let t = data.t as f64;
            let d = Interval::point(data.d as f64);
            let h = Interval::from_int(data.h);
            let ratio = Interval::point(pi) / h;
            let mut fact = Interval::point(1.0);
            for k in 1..=data.t {
                fact = fact * Interval::point(k as f64);
            }
            let first = (fact * d.powi(2 * data.t as i32) * ratio.powi(data.t as i32))
                .powf(&(Interval::point(1.0) / Interval::point(2.0 * t)));
            let second = d * Interval::point(t).sqrt() * ratio.sqrt();
            let third = d * Interval::point(3.0) * Interval::point(t).sqrt() * Interval::point(data.n as f64).sqrt()
                / h.ln().sqrt();
            Ok(A0tValue {
                mode,
                value: third,
                intermediate: vec![first, second],
            })
        }
    }
}
