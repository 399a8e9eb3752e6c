//! The smoothing weight `η_H(x) = e ∫_{−log H}^{log H} e^{−(x−t)²} dt` and its
//! Fourier transform `η̂_H(s) = ∫ η_H(x) e^{−isx} dx`.

use std::f64::consts::{E, PI};

use libm::{erf, erfc};

/// `erf(b) − erf(a)` for `a ≤ b`, avoiding cancellation in the tails.
fn erf_diff(a: f64, b: f64) -> f64 {
    if a >= 0.0 {
        erfc(a) - erfc(b)
    } else if b <= 0.0 {
        erfc(-b) - erfc(-a)
    } else {
        erf(b) - erf(a)
    }
}

/// `η_H(x)` in closed form.
pub fn eta(h: f64, x: f64) -> f64 {
    let l = h.ln();
    E * PI.sqrt() / 2.0 * erf_diff(x - l, x + l)
}

/// `η̂_H(s)` for real `s`: `2e√π sin(s log H)/s · e^{−s²/4}`.
pub fn eta_hat(h: f64, s: f64) -> f64 {
    let l = h.ln();
    let ratio = if s.abs() < 1e-8 { l * (1.0 - (s * l).powi(2) / 6.0) } else { (s * l).sin() / s };
    2.0 * E * PI.sqrt() * ratio * (-s * s / 4.0).exp()
}

/// `η̂_H(−iσ) = ∫ η_H(x) e^{−σx} dx` for real `σ`: `2e√π sinh(σ log H)/σ · e^{σ²/4}`.
pub fn eta_hat_imaginary(h: f64, sigma: f64) -> f64 {
    let l = h.ln();
    let ratio = if sigma.abs() < 1e-8 { l } else { (sigma * l).sinh() / sigma };
    2.0 * E * PI.sqrt() * ratio * (sigma * sigma / 4.0).exp()
}

/// Upper bound for `Σ_{a > n} η_H(log a)` using that the summand decreases
/// for `a ≥ 1`: `∫_{log n}^∞ η_H(u) eᵘ du ≤ e^{log H + 5/4} (√π/2) erfc(log n − log H − 1/2)`.
pub fn eta_tail_bound(h: f64, n: f64) -> f64 {
    let l = h.ln();
    (l + 1.25).exp() * PI.sqrt() / 2.0 * erfc(n.ln() - l - 0.5)
}

/// Adaptive Simpson quadrature of `f` on `[a, b]`.
pub fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn step(f: &dyn Fn(f64) -> f64, a: f64, b: f64, fa: f64, fm: f64, fb: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let m = 0.5 * (a + b);
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = f(lm);
        let frm = f(rm);
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            left + right + delta / 15.0
        } else {
            step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) + step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
        }
    }
    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    step(f, a, b, fa, fm, fb, whole, tol, 48)
}

/// `η_H(x)` by quadrature of the defining integral.
pub fn eta_quadrature(h: f64, x: f64) -> f64 {
    let l = h.ln();
    adaptive_simpson(&|t: f64| (1.0 - (x - t) * (x - t)).exp(), -l, l, 1e-14)
}

/// `η̂_H(s)` by quadrature of `∫ η_H(x) cos(sx) dx` over `|x| ≤ log H + 8`.
pub fn eta_hat_quadrature(h: f64, s: f64) -> f64 {
    let r = h.ln() + 8.0;
    let pieces = 64;
    let w = 2.0 * r / pieces as f64;
    (0..pieces)
        .map(|i| {
            let a = -r + w * i as f64;
            adaptive_simpson(&|x: f64| eta(h, x) * (s * x).cos(), a, a + w, 1e-14)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_match_quadrature() {
        for &h in &[E, 10.0, 100.0] {
            for &x in &[-3.0, 0.0, 0.7, 2.5, 6.0] {
                let a = eta(h, x);
                let b = eta_quadrature(h, x);
                assert!((a - b).abs() <= 1e-10 * a.max(1e-300) + 1e-14, "{h} {x}: {a} {b}");
            }
            for &s in &[0.0, 0.5, 2.0, 4.0] {
                let a = eta_hat(h, s);
                let b = eta_hat_quadrature(h, s);
                assert!((a - b).abs() <= 1e-9, "{h} {s}: {a} {b}");
            }
        }
    }
}
