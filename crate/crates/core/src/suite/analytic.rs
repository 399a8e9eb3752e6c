use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Check;
use crate::analytic::bounds::{c_epsilon, rhs_bounds, BoundKind, BoundParams};
use crate::analytic::dirichlet::DirichletCharacter;
use crate::analytic::kernel::{eta, eta_hat, eta_hat_quadrature, eta_quadrature};
use crate::analytic::scan::{eps_bad_scan, range_gate, CharacterOracle, NoCancellationOracle};
use crate::analytic::sums::{bilinear_check, squarefull_sums};
use crate::config::Limits;
use crate::error::Error;

/// Bound formulas at fixed parameters with `ln` of the value computed
/// independently in 30-digit arithmetic.
pub fn reference_transcriptions() -> Vec<(BoundKind, BoundParams, f64)> {
    let d = BoundParams::default();
    let l = |x: f64| x.ln();
    vec![
        (
            BoundKind::Convexity,
            BoundParams {
                d: 2.0,
                delta: 0.25,
                sigma: 0.5,
                log_q: l(1000.0),
                ..d.clone()
            },
            13.954670683866740781,
        ),
        (
            BoundKind::LogDerivative,
            BoundParams {
                d: 2.0,
                sigma: 0.75,
                sigma0: 0.6,
                s_count: 3.0,
                ..d.clone()
            },
            3.3355911388117293032,
        ),
        (
            BoundKind::Line,
            BoundParams {
                log_q: l(1000.0),
                delta: 0.25,
                s_count: 2.0,
                ..d.clone()
            },
            27.912253760019662028,
        ),
        (
            BoundKind::Circle,
            BoundParams {
                r: 1.0,
                delta: 0.25,
                log_q: l(1000.0),
                ..d.clone()
            },
            18.111796750675193726,
        ),
        (
            BoundKind::Smoothed,
            BoundParams {
                log_q: l(100.0),
                log_h: 30.0,
                r: 1.0,
                ..d.clone()
            },
            106.35898132075116494,
        ),
        (
            BoundKind::Bilinear,
            BoundParams {
                log_q: l(10.0),
                log_h: 40.0,
                r: 1.0,
                e_sum: 2.0,
                a_l1: 2.0,
                ..d.clone()
            },
            117.05212848460991954,
        ),
        (
            BoundKind::Trivial,
            BoundParams {
                log_h: l(100.0),
                a_l1: 2.0,
                ..d.clone()
            },
            10.296190961183431613,
        ),
        (
            BoundKind::Holder,
            BoundParams {
                t: 2.0,
                log_q: l(100.0),
                log_m: l(100.0),
                log_h: 20.0,
                a0t: 1.0,
                r: 1.0,
                log_e_count: l(100.0),
                ..d.clone()
            },
            60.209513148063338916,
        ),
        (
            BoundKind::MainC,
            BoundParams {
                log_q: l(100.0),
                log_m: l(1000.0),
                log_h: l(1e6),
                ..d.clone()
            },
            9.4421370076105118897,
        ),
        (
            BoundKind::MainCH,
            BoundParams {
                log_q: l(100.0),
                log_m: l(1000.0),
                log_h: l(1e6),
                ..d.clone()
            },
            12.688701421707267389,
        ),
        (
            BoundKind::Sparse,
            BoundParams {
                d: 2.0,
                eps: 0.1,
                log_disc: l(1e6),
                ..d.clone()
            },
            5566.7817814636813751,
        ),
    ]
}

/// Parameters on both sides of each domain gate, with whether the gate holds.
pub fn gate_cases() -> Vec<(BoundKind, BoundParams, bool)> {
    let base = BoundParams::default();
    let lq = 100f64.ln();
    let mut out = Vec::new();
    for (delta, ok) in [(0.0, false), (0.1, true), (0.25, true), (0.2500001, false)] {
        for kind in [BoundKind::Line, BoundKind::Circle] {
            out.push((kind, BoundParams { delta, ..base.clone() }, ok));
        }
    }
    for (log_h, ok) in [(lq + 15.999, false), (lq + 16.001, true)] {
        out.push((
            BoundKind::Bilinear,
            BoundParams {
                log_q: lq,
                log_h,
                ..base.clone()
            },
            ok,
        ));
    }
    for (t, log_h, ok) in [(1.0, 20.0, false), (2.0, 10.0, false), (2.0, 10.5, true), (3.0, 4.0, false), (5.0, 4.7, true)] {
        out.push((
            BoundKind::Holder,
            BoundParams {
                t,
                log_q: lq,
                log_h,
                ..base.clone()
            },
            ok,
        ));
    }
    let good = BoundParams {
        log_q: lq,
        log_h: 30.0,
        ..base.clone()
    };
    out.push((BoundKind::Smoothed, good.clone(), true));
    out.push((BoundKind::Smoothed, BoundParams { log_q: 3.9, ..good.clone() }, false));
    out.push((BoundKind::Smoothed, BoundParams { s_count: 10.0, ..good.clone() }, false));
    out.push((BoundKind::Smoothed, BoundParams { log_h: 18.0, ..good }, false));
    out.push((BoundKind::Convexity, BoundParams { sigma: 1.3, ..base.clone() }, false));
    out.push((BoundKind::Convexity, BoundParams { sigma: 1.25, ..base.clone() }, true));
    out.push((
        BoundKind::LogDerivative,
        BoundParams {
            sigma: 0.7,
            sigma0: 0.75,
            ..base.clone()
        },
        false,
    ));
    out.push((BoundKind::MainC, BoundParams { log_m: 4.0, ..base.clone() }, false));
    out.push((BoundKind::Sparse, BoundParams { d: 1.0, ..base.clone() }, false));
    out.push((
        BoundKind::Sparse,
        BoundParams {
            d: 2.0,
            eps: 0.1,
            ..base
        },
        true,
    ));
    out
}

fn eta_checks(out: &mut Vec<Check>) {
    let mut worst = 0.0f64;
    for i in 0..50 {
        let h = [3.0, 5.0, 10.0, 30.0, 100.0][i % 5];
        let s = 0.1 * i as f64;
        worst = worst.max((eta_hat(h, s) - eta_hat_quadrature(h, s)).abs());
    }
    out.push(Check::new(9, "eta_hat vs quadrature", worst <= 1e-9, format!("max difference {worst:.3e} at 50 samples")));
    for h in [3.0f64, 10.0, 100.0] {
        let l = h.ln();
        let mut low = f64::INFINITY;
        for i in 0..=400 {
            let x = -l + 2.0 * l * i as f64 / 400.0;
            low = low.min(eta(h, x)).min(eta_quadrature(h, x));
        }
        out.push(Check::new(9, format!("eta >= 1 at H = {h}"), low >= 1.0, format!("minimum {low:.9}")));
    }
}

/// Primitive characters of modulus at most 50 shuffled into families of
/// sizes 1 to 8, every character used once.
fn bilinear_families(seed: u64) -> Vec<(Vec<DirichletCharacter>, Vec<f64>, u64)> {
    let mut chars: Vec<DirichletCharacter> = (1..=50u64)
        .flat_map(|q| DirichletCharacter::primitive(q).expect("small modulus"))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    chars.shuffle(&mut rng);
    let heights = [1_000u64, 10_000, 100_000, 1_000_000];
    let mut out = Vec::new();
    let mut rest = chars.as_slice();
    while !rest.is_empty() {
        let k = rng.gen_range(1..=8usize).min(rest.len());
        let (family, tail) = rest.split_at(k);
        rest = tail;
        let coefficients = (0..k).map(|_| rng.gen_range(-1.0..=1.0)).collect();
        out.push((family.to_vec(), coefficients, heights[out.len() % heights.len()]));
    }
    out
}

fn bilinear_checks(seed: u64, limits: &Limits, out: &mut Vec<Check>) {
    for (i, (family, coefficients, h)) in bilinear_families(seed).into_iter().enumerate() {
        let subject = format!("family {} ({} characters, H = {h})", i + 1, family.len());
        match bilinear_check(&family, &coefficients, h, limits) {
            Ok(r) => out.push(Check::new(
                10,
                subject,
                r.trivial_pass,
                format!("lhs {} <= trivial {}", r.lhs, r.trivial.to_scientific()),
            )),
            Err(e) => out.push(Check::new(10, subject, false, e.to_string())),
        }
    }
    for (kind, params, ok) in gate_cases() {
        let fired = matches!(rhs_bounds(kind, &params), Err(Error::Gate { .. }));
        out.push(Check::new(
            10,
            format!("gate {kind}"),
            fired != ok,
            format!("expected {}, gate {}", if ok { "open" } else { "closed" }, if fired { "fired" } else { "silent" }),
        ));
    }
    for (kind, params, expected) in reference_transcriptions() {
        let subject = format!("transcription {kind}");
        match rhs_bounds(kind, &params) {
            Ok(v) => {
                let tol = 1e-12 * expected.abs().max(1.0);
                let pass = v.ln.lo - tol <= expected && expected <= v.ln.hi + tol;
                out.push(Check::new(10, subject, pass, format!("ln {} vs {expected}", v.ln)));
            }
            Err(e) => out.push(Check::new(10, subject, false, e.to_string())),
        }
    }
}

fn squarefull_checks(limits: &Limits, out: &mut Vec<Check>) {
    let h = 10_000_000;
    match squarefull_sums(h, limits) {
        Ok(r) => {
            out.push(Check::new(
                11,
                "sum of 1/sqrt(r) <= 81 log H",
                r.log_bound_holds,
                format!("{} squarefull r <= {h}, worst log ratio {:.6}", r.count, r.worst_log_ratio),
            ));
            out.push(Check::new(11, "sum of 1/r <= 2", r.zeta_bound_holds, format!("sum {}", r.sum_inv)));
        }
        Err(e) => out.push(Check::new(11, "squarefull", false, e.to_string())),
    }
}

fn scan_checks(limits: &Limits, out: &mut Vec<Check>) {
    let log_disc = 4f64.ln();
    let chi4 = DirichletCharacter::primitive(4).expect("small modulus").remove(0);
    let start = (range_gate(log_disc, 2, 0.5).hi.ceil() as u64).max(2);
    let grid: Vec<u64> = (start..=1_000_000).step_by(997).collect();
    let r = eps_bad_scan(&CharacterOracle(chi4), log_disc, 2, 2, 0.5, &grid, limits);
    out.push(match r {
        Ok(r) => Check::new(
            12,
            "character mod 4",
            !r.flagged,
            format!("{} grid points from {start}, max ratio {:.6}", r.rows.len(), r.max_ratio),
        ),
        Err(e) => Check::new(12, "character mod 4", false, e.to_string()),
    });
    let grid: Vec<u64> = (7..=10_000).step_by(13).collect();
    let r = eps_bad_scan(&NoCancellationOracle, log_disc, 2, 2, 0.5, &grid, limits);
    out.push(match r {
        Ok(r) => Check::new(
            12,
            "no-cancellation oracle",
            r.first_flag == Some(grid[0]),
            format!("first flag {:?}", r.first_flag),
        ),
        Err(e) => Check::new(12, "no-cancellation oracle", false, e.to_string()),
    });
}

fn c_epsilon_checks(out: &mut Vec<Check>) {
    let cases = [
        (0.01, 1u64, 1.0 / 180.0),
        (1.0, 2, 1.0 / (29.0 * 2f64.sqrt())),
        (0.81, 1, 1.0 / 29.0),
    ];
    for (eps, deg, expected) in cases {
        let v = c_epsilon(eps, deg);
        let pass = v.as_ref().is_ok_and(|&c| (c - expected).abs() <= f64::EPSILON * expected);
        out.push(Check::new(13, format!("c({eps}) at degree {deg}"), pass, format!("{v:?} vs {expected:e}")));
    }
    let eps: Vec<f64> = (1..=60).map(|k| k as f64 * 0.05).collect();
    let mut violations = 0;
    for deg in 1..=40u64 {
        for w in eps.windows(2) {
            violations += (c_epsilon(w[0], deg).unwrap_or(f64::NAN) > c_epsilon(w[1], deg).unwrap_or(f64::NAN)) as usize;
        }
        for &e in &eps {
            violations += (c_epsilon(e, deg + 1).unwrap_or(f64::NAN) > c_epsilon(e, deg).unwrap_or(f64::NAN)) as usize;
        }
    }
    out.push(Check::new(13, "monotonicity lattice", violations == 0, format!("{violations} violations")));
}

/// Criteria 9 to 13.
pub fn analytic_checks(seed: u64, limits: &Limits) -> Vec<Check> {
    let mut out = Vec::new();
    eta_checks(&mut out);
    bilinear_checks(seed, limits, &mut out);
    squarefull_checks(limits, &mut out);
    scan_checks(limits, &mut out);
    c_epsilon_checks(&mut out);
    out
}
