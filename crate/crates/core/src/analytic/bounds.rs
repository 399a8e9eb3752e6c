//! Explicit right-hand sides over ℚ, evaluated in interval arithmetic on the
//! logarithmic scale. Each formula checks its domain and fails with a gate
//! error instead of clamping.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::interval::{Interval, LogValue};
use crate::error::{gate, Error, Result};

/// `c(ε) = min(√ε/18, 1/(29√[K:ℚ]))`.
pub fn c_epsilon(eps: f64, deg_k: u64) -> Result<f64> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::Input(format!("ε must be positive, got {eps}")));
    }
    if deg_k == 0 {
        return Err(Error::Input("[K:ℚ] must be at least 1".into()));
    }
    Ok((eps.sqrt() / 18.0).min(1.0 / (29.0 * (deg_k as f64).sqrt())))
}

/// [`c_epsilon`] as an enclosure.
pub fn c_epsilon_interval(eps: f64, deg_k: u64) -> Result<Interval> {
    c_epsilon(eps, deg_k)?;
    let a = Interval::point(eps).sqrt() / Interval::point(18.0);
    let b = Interval::point(1.0) / (Interval::point(deg_k as f64).sqrt() * 29.0);
    Ok(a.min(&b))
}

/// `(H/log H)·exp(−c(ε)√log H)`.
pub fn prime_sum_envelope(h: f64, c: &Interval) -> Interval {
    let l = Interval::point(h).ln();
    Interval::point(h) / l * (-(*c * l.sqrt())).exp()
}

/// Parameters shared by the bound evaluators. Large quantities are stored by
/// their natural logarithm.
#[derive(Clone, Debug, Serialize)]
pub struct BoundParams {
    /// `[F:ℚ]` in the local bounds.
    pub n: f64,
    /// Degree of the characters.
    pub d: f64,
    pub log_q: f64,
    pub log_h: f64,
    pub log_m: f64,
    pub eps: f64,
    pub t: f64,
    pub delta: f64,
    pub sigma: f64,
    pub sigma0: f64,
    /// `#S`.
    pub s_count: f64,
    /// Pole order, or the largest pairing `⟨χᵢ, χⱼ⟩`.
    pub r: f64,
    pub log_delta_f: f64,
    /// `log Δ` for the field-counting bound.
    pub log_disc: f64,
    /// `[F:ℚ]` inside `C(F, d) = 400 d² [F:ℚ]`.
    pub field_degree: f64,
    /// `[K:ℚ]` for `c(ε)`.
    pub deg_k: u64,
    /// `Σ|aᵢ|`.
    pub a_l1: f64,
    /// `Σ_E |aᵢ aⱼ|`.
    pub e_sum: f64,
    /// `log #E`.
    pub log_e_count: f64,
    pub a0t: f64,
}

impl Default for BoundParams {
    fn default() -> BoundParams {
        let ln100 = 100f64.ln();
        BoundParams {
            n: 1.0,
            d: 1.0,
            log_q: ln100,
            log_h: ln100,
            log_m: ln100,
            eps: 0.5,
            t: 1.0,
            delta: 0.25,
            sigma: 0.75,
            sigma0: 0.75,
            s_count: 0.0,
            r: 0.0,
            log_delta_f: 0.0,
            log_disc: 1e6f64.ln(),
            field_degree: 1.0,
            deg_k: 1,
            a_l1: 1.0,
            e_sum: 1.0,
            log_e_count: ln100,
            a0t: 1.0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    /// `3^{2d} e^{nd} δ^{−d} Q^{(1+δ−σ)/2} (3 + log Δ_F/2n)^{nd}`.
    Convexity,
    /// `3n d^{4−4σ}/(2σ−1) + 2dn((2d²+#S)^{1−σ₀} − 1)/(1−σ₀)`.
    LogDerivative,
    /// `(log e³Q)^d (log e³Δ_F)^{nd} Q^{(1−2δ)/4} exp(6nd + 3nd²/δ + 4dn√#S)`.
    Line,
    /// `δ^{−d−r} Q^δ (log e³Δ_F)^{nd} exp(11nd + 2dn((2d²+#S)^δ − 1)/δ)`.
    Circle,
    /// The two-term bound for smoothed sums of an acceptable function.
    Smoothed,
    /// The large-sieve type bound for `Σ_{a<H} |Σ aᵢ fᵢ(a)|²`.
    Bilinear,
    /// `(log e⁴H)^{nd²+1} H (Σ|aᵢ|)²`.
    Trivial,
    /// The Hölder-amplified bilinear bound at exponent `t`.
    Holder,
    /// The constant `c` of the main density estimate.
    MainC,
    /// The `H`-dependent constant `c(H)`.
    MainCH,
    /// `Δ^{ε(1+δ)} (log Δ)^C` with `C = 400 d² [F:ℚ]`, `δ = C (log log Δ)^{−1/2}`.
    Sparse,
    /// `c(ε)`.
    CEps,
}

impl BoundKind {
    pub const ALL: [BoundKind; 12] = [
        BoundKind::Convexity,
        BoundKind::LogDerivative,
        BoundKind::Line,
        BoundKind::Circle,
        BoundKind::Smoothed,
        BoundKind::Bilinear,
        BoundKind::Trivial,
        BoundKind::Holder,
        BoundKind::MainC,
        BoundKind::MainCH,
        BoundKind::Sparse,
        BoundKind::CEps,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::Convexity => "convexity",
            BoundKind::LogDerivative => "log_derivative",
            BoundKind::Line => "line",
            BoundKind::Circle => "circle",
            BoundKind::Smoothed => "smoothed",
            BoundKind::Bilinear => "bilinear",
            BoundKind::Trivial => "trivial",
            BoundKind::Holder => "holder",
            BoundKind::MainC => "main_c",
            BoundKind::MainCH => "main_c_h",
            BoundKind::Sparse => "sparse",
            BoundKind::CEps => "c_eps",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<BoundKind> {
        BoundKind::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = BoundKind::ALL.iter().map(|k| k.name()).collect();
                Error::Input(format!("unknown bound `{s}`; expected one of {}", names.join(", ")))
            })
    }
}

fn require(ok: bool, name: &str, detail: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        gate(name, detail())
    }
}

fn pt(x: f64) -> Interval {
    Interval::point(x)
}

fn validate(p: &BoundParams) -> Result<()> {
    let finite = [
        p.n,
        p.d,
        p.log_q,
        p.log_h,
        p.log_m,
        p.eps,
        p.t,
        p.delta,
        p.sigma,
        p.sigma0,
        p.s_count,
        p.r,
        p.log_delta_f,
        p.log_disc,
        p.field_degree,
        p.a_l1,
        p.e_sum,
        p.log_e_count,
        p.a0t,
    ];
    if finite.iter().any(|x| !x.is_finite()) {
        return Err(Error::Input("bound parameters must be finite".into()));
    }
    if p.n < 1.0 || p.d < 1.0 || p.field_degree < 1.0 {
        return Err(Error::Input("n, d and [F:ℚ] must be at least 1".into()));
    }
    if p.s_count < 0.0 || p.r < 0.0 || p.a_l1 < 0.0 || p.e_sum < 0.0 || p.a0t < 0.0 || p.log_delta_f < 0.0 {
        return Err(Error::Input("#S, r, Σ|aᵢ|, Σ_E|aᵢaⱼ|, A₀t and log Δ_F must be nonnegative".into()));
    }
    Ok(())
}

/// `ln` of a nonnegative quantity, `−∞` at zero.
fn ln_nonneg(x: f64) -> Interval {
    if x == 0.0 {
        pt(f64::NEG_INFINITY)
    } else {
        pt(x).ln()
    }
}

/// Evaluates the chosen right-hand side.
pub fn rhs_bounds(which: BoundKind, p: &BoundParams) -> Result<LogValue> {
    validate(p)?;
    let (n, d) = (pt(p.n), pt(p.d));
    let nd = n * d;
    let lq = pt(p.log_q);
    let lh = pt(p.log_h);
    let lm = pt(p.log_m);
    match which {
        BoundKind::Convexity => {
            require(p.delta > 0.0 && p.delta < 0.5, "0 < δ < 1/2", || format!("δ = {}", p.delta))?;
            require(-p.delta <= p.sigma && p.sigma <= 1.0 + p.delta, "−δ ≤ σ ≤ 1 + δ", || {
                format!("σ = {}, δ = {}", p.sigma, p.delta)
            })?;
            require(p.log_q >= 0.0, "Q ≥ 1", || format!("log Q = {}", p.log_q))?;
            let ln = d * pt(9.0).ln() + nd - d * pt(p.delta).ln()
                + pt(1.0 + p.delta - p.sigma) * lq * 0.5
                + nd * (pt(3.0) + pt(p.log_delta_f) / (n * 2.0)).ln();
            Ok(LogValue::from_ln(ln))
        }
        BoundKind::LogDerivative => {
            require(p.sigma0 > 0.5 && p.sigma0 < 1.0, "1/2 < σ₀ < 1", || format!("σ₀ = {}", p.sigma0))?;
            require(p.sigma >= p.sigma0, "σ ≥ σ₀", || format!("σ = {}, σ₀ = {}", p.sigma, p.sigma0))?;
            let first = n * 3.0 * d.powf(&pt(4.0 - 4.0 * p.sigma)) / pt(2.0 * p.sigma - 1.0);
            let base = d.sqr() * 2.0 + pt(p.s_count);
            let second = d * n * 2.0 * (base.powf(&pt(1.0 - p.sigma0)) - pt(1.0)) / pt(1.0 - p.sigma0);
            Ok(LogValue::from_value(first + second))
        }
        BoundKind::Line => {
            require(p.delta > 0.0 && p.delta <= 0.25, "0 < δ ≤ 1/4", || format!("δ = {}", p.delta))?;
            require(p.log_q >= 0.0, "Q ≥ 1", || format!("log Q = {}", p.log_q))?;
            let ln = d * (lq + 3.0).ln()
                + nd * pt(3.0 + p.log_delta_f).ln()
                + pt(1.0 - 2.0 * p.delta) / pt(4.0) * lq
                + nd * 6.0
                + nd * d * 3.0 / pt(p.delta)
                + d * n * 4.0 * pt(p.s_count).sqrt();
            Ok(LogValue::from_ln(ln))
        }
        BoundKind::Circle => {
            require(p.delta > 0.0 && p.delta <= 0.25, "0 < δ ≤ 1/4", || format!("δ = {}", p.delta))?;
            require(p.log_q >= 0.0, "Q ≥ 1", || format!("log Q = {}", p.log_q))?;
            let delta = pt(p.delta);
            let base = d.sqr() * 2.0 + pt(p.s_count);
            let ln = -(d + pt(p.r)) * delta.ln()
                + delta * lq
                + nd * pt(3.0 + p.log_delta_f).ln()
                + nd * 11.0
                + d * n * 2.0 * (base.powf(&delta) - pt(1.0)) / delta;
            Ok(LogValue::from_ln(ln))
        }
        BoundKind::Smoothed => {
            let floor = (p.n * 2f64.ln()).max(4.0 * p.d.sqrt()).max(0.5 * p.d.sqrt() * p.s_count);
            require(p.log_q >= floor, "Q ≥ max(2ⁿ, exp(4√d), exp(√d·#S/2))", || {
                format!("log Q = {} < {floor}", p.log_q)
            })?;
            require(p.log_h >= 0.5 * p.log_q, "H ≥ Q^{1/2}", || {
                format!("log H = {} < log Q / 2 = {}", p.log_h, 0.5 * p.log_q)
            })?;
            let excess = lh - lq * 0.5;
            require(16.0 * p.n * p.d * p.d <= excess.lo, "16nd² ≤ log(Q^{−1/2}H)", || {
                format!("log(Q^(-1/2) H) = {} < {}", excess.mid(), 16.0 * p.n * p.d * p.d)
            })?;
            let llq = lq.ln();
            let second = lh - excess * 0.5
                + nd * 26.0 * llq
                + n.sqrt() * d * 4.0 * excess.sqrt()
                + n * pt(2f64.sqrt() * 4.0) * d.powf(&pt(0.75)) * lq.sqrt();
            if p.r > 0.0 {
                let first = lh + pt(p.r - 1.0) * lh.ln() + nd * 50.0 * llq;
                Ok(LogValue::from_ln(first).add(&LogValue::from_ln(second)))
            } else {
                Ok(LogValue::from_ln(second))
            }
        }
        BoundKind::Bilinear => {
            let need = p.d * p.log_q + 16.0 * p.n * p.d.powi(4);
            require(p.log_h >= need, "H ≥ Q^d e^{16nd⁴}", || format!("log H = {} < {need}", p.log_h))?;
            require(p.log_q > 0.0, "Q > 1", || format!("log Q = {}", p.log_q))?;
            let d2n = d.sqr() * n;
            let l2dq = (d * 2.0 * lq).ln();
            let excess = lh - d * lq;
            let first = lh + pt(p.r - 1.0) * lh.ln() + d2n * 50.0 * l2dq + ln_nonneg(p.e_sum);
            let log_a = d2n * 26.0 * l2dq + n.sqrt() * d.sqr() * 4.0 * excess.sqrt() + d2n * 8.0 * lq.sqrt();
            let second = log_a + lh - excess * 0.5 + ln_nonneg(p.a_l1) * 2.0;
            Ok(LogValue::from_ln(Interval::log_add_exp(&first, &second)))
        }
        BoundKind::Trivial => {
            require(p.log_h >= 0.0, "H ≥ 1", || format!("log H = {}", p.log_h))?;
            let ln = (nd * d + 1.0) * (lh + 4.0).ln() + lh + ln_nonneg(p.a_l1) * 2.0;
            Ok(LogValue::from_ln(ln))
        }
        BoundKind::Holder => {
            require(p.t >= 1.0 && p.t.fract() == 0.0, "t a positive integer", || format!("t = {}", p.t))?;
            let need = p.d * p.log_q + 16.0 * p.n * p.d.powi(4);
            require(p.t * p.log_h >= need, "H^t ≥ Q^d e^{16nd⁴}", || {
                format!("t log H = {} < {need}", p.t * p.log_h)
            })?;
            require(p.log_h >= 100f64.ln(), "H ≥ 100", || format!("log H = {}", p.log_h))?;
            require(p.log_q > 0.0, "Q > 1", || format!("log Q = {}", p.log_q))?;
            let t = pt(p.t);
            let d2n = d.sqr() * n;
            let excess = t * lh - d * lq;
            let log_a = n.sqrt() * d.sqr() * 4.0 * excess.sqrt() + d2n * 8.0 * lq.sqrt();
            let head = ln_nonneg(p.a0t)
                + pt((p.r - 1.0).max(1.0)) / (t * 2.0) * (t * lh).ln()
                + d2n * 26.0 / t * (d * 2.0 * lq).ln()
                + lh
                + lm;
            let diag = (pt(p.log_e_count) - lm * 2.0) / (t * 2.0);
            let off = -(lh * 0.25) + log_a / (t * 2.0) + d * lq / (t * 4.0);
            Ok(LogValue::from_ln(head + Interval::log_add_exp(&diag, &off)))
        }
        BoundKind::MainC | BoundKind::MainCH => {
            let ln100 = 100f64.ln();
            require(p.log_q >= ln100, "Q ≥ 100", || format!("log Q = {}", p.log_q))?;
            require(p.log_h >= ln100, "H ≥ 100", || format!("log H = {}", p.log_h))?;
            require(p.log_m >= ln100, "M ≥ 100", || format!("log M = {}", p.log_m))?;
            let lead = d.ln() * pt(1.5) * (d + 2.0) + (lq + lm + lh).sqrt().ln() + n.ln();
            let ll = (d * lq + lm + lh).ln();
            let denom = d * lq + lm * 4.0 + lh * 2.0 + n * d.powi(4) * 13.0 * (lq + lm).sqrt();
            if which == BoundKind::MainC {
                let expo = (-lm + n * d.sqr() * 15.0 * ll) * lh / denom;
                Ok(LogValue::from_ln(pt(10f64).ln() + lead + expo))
            } else {
                let shrink = pt(1.0) - lh / (d * lq + lm * 4.0 + lh * 3.0);
                let expo = -(lm - n * d.sqr() * 27.0 * ll) * lh * shrink / denom;
                Ok(LogValue::from_ln(pt(11f64).ln() + lead + expo))
            }
        }
        BoundKind::Sparse => {
            require(p.d >= 2.0, "d ≥ 2", || format!("d = {}", p.d))?;
            require(p.eps > 0.0 && p.eps < 1.0, "0 < ε < 1", || format!("ε = {}", p.eps))?;
            require(p.log_disc >= 3f64.ln(), "Δ ≥ 3", || format!("log Δ = {}", p.log_disc))?;
            let ld = pt(p.log_disc);
            let c = d.sqr() * 400.0 * pt(p.field_degree);
            let delta = c / ld.ln().sqrt();
            let ln = pt(p.eps) * (delta + 1.0) * ld + c * ld.ln();
            Ok(LogValue::from_ln(ln))
        }
        BoundKind::CEps => Ok(LogValue::from_value(c_epsilon_interval(p.eps, p.deg_k)?)),
    }
}

/// The Hölder exponent, the reduced count `M₀`, and the resulting bound.
#[derive(Clone, Debug, Serialize)]
pub struct HolderChoice {
    pub t: u64,
    /// `log M₀`.
    pub log_m0: Interval,
    pub bound: LogValue,
}

/// `t = ⌈(log(Q^d M²) + 100nd⁴√log(QM))/log H⌉`,
/// `M₀ = M²/(#E (log H M Q^{2d})^{60nd²})`, and
/// `2 A₀t H M exp(−log M₀ log H / (2d log Q + 4 log M + 200nd⁴√log(QM) + 2 log H))`.
pub fn holder_params(p: &BoundParams) -> Result<HolderChoice> {
    validate(p)?;
    if !(p.log_q > 0.0 && p.log_h > 0.0 && p.log_m > 0.0) {
        return Err(Error::Input("Q, H and M must exceed 1".into()));
    }
    let (n, d) = (pt(p.n), pt(p.d));
    let lq = pt(p.log_q);
    let lh = pt(p.log_h);
    let lm = pt(p.log_m);
    let d4n = n * d.powi(4);
    let numer = d * lq + lm * 2.0 + d4n * 100.0 * (lq + lm).sqrt();
    let ratio = numer / lh;
    let t = ratio.hi.ceil();
    if ratio.lo.ceil() != t {
        return Err(Error::Precondition(format!(
            "t is undetermined: the ratio {ratio} straddles an integer"
        )));
    }
    let log_m0 = lm * 2.0 - pt(p.log_e_count) - n * d.sqr() * 60.0 * (lh + lm + d * lq * 2.0).ln();
    if !(log_m0.lo > 0.0) {
        return gate("M₀ > 1", format!("log M₀ = {log_m0}"));
    }
    let denom = d * lq * 2.0 + lm * 4.0 + d4n * 200.0 * (lq + lm).sqrt() + lh * 2.0;
    let ln = pt(2f64).ln() + ln_nonneg(p.a0t) + lh + lm - log_m0 * lh / denom;
    Ok(HolderChoice {
        t: t as u64,
        log_m0,
        bound: LogValue::from_ln(ln),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_example() {
        let p = BoundParams {
            log_h: 100f64.ln(),
            a_l1: 2.0,
            ..BoundParams::default()
        };
        let v = rhs_bounds(BoundKind::Trivial, &p).unwrap().value();
        let direct = (4.0 + 100f64.ln()).powi(2) * 100.0 * 4.0;
        assert!(v.contains(direct), "{v} vs {direct}");
    }

    #[test]
    fn names_round_trip() {
        for k in BoundKind::ALL {
            assert_eq!(k.name().parse::<BoundKind>().unwrap(), k);
        }
        assert!("nope".parse::<BoundKind>().is_err());
    }
}
