use std::time::Instant;

use anyhow::{bail, Context, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use artin_core::analytic::bounds::{c_epsilon, rhs_bounds, BoundKind, BoundParams};
use artin_core::analytic::dirichlet::DirichletCharacter;
use artin_core::analytic::scan::{eps_bad_scan, parse_grid, range_gate, CharacterOracle, NoCancellationOracle, PrimeSumOracle};
use artin_core::analytic::sums::bilinear_check;
use artin_core::catalog::catalog;
use artin_core::group::families::group_from_spec;
use artin_core::group::structure::normal_subgroups;
use artin_core::induction::{mackey_decompose, subgroup_export, MackeyReport, SpaceReport};
use artin_core::suite::{analytic_checks, check_group, SuiteReport};
use artin_core::{certificate_solve, verify_spaces, Limits, Subgroup, SubgroupFilter, Workspace};

use crate::artifacts::{slug, to_json, Run};
use crate::{BilinearArgs, BoundsArgs, CertifyArgs, MackeyArgs, ScanArgs, SuiteArgs, Verdict, VerifyFaithfulArgs, VerifyTgnArgs};

fn verdict(pass: bool) -> Verdict {
    if pass {
        Verdict::Pass
    } else {
        Verdict::Fail
    }
}

fn workspace(spec: &str, limits: Limits) -> Result<Workspace> {
    let g = group_from_spec(spec, limits)?;
    Ok(Workspace::new(&g)?)
}

/// Prints JSON to stdout, or writes it with a manifest under `out`.
fn emit(out: Option<&std::path::Path>, argv: &[String], name: &str, value: &impl Serialize, params: serde_json::Value, seed: Option<u64>, pass: bool) -> Result<()> {
    let bytes = to_json(value)?;
    match out {
        Some(dir) => {
            let mut run = Run::new(dir, argv);
            run.write(name, bytes)?;
            run.finish(params, seed, pass)?;
        }
        None => print!("{}", String::from_utf8(bytes)?),
    }
    Ok(())
}

pub fn table(spec: &str, as_json: bool, limits: Limits) -> Result<Verdict> {
    let g = group_from_spec(spec, limits)?;
    let t = artin_core::character_table(&g)?;
    let export = t.export();
    if as_json {
        print!("{}", String::from_utf8(to_json(&export)?)?);
        return Ok(Verdict::Pass);
    }
    let mut rows: Vec<Vec<String>> = Vec::new();
    rows.push(std::iter::once("class".to_string()).chain(export.classes.iter().map(|c| c.representative.clone())).collect());
    rows.push(std::iter::once("size".to_string()).chain(export.classes.iter().map(|c| c.size.to_string())).collect());
    rows.push(std::iter::once("order".to_string()).chain(export.classes.iter().map(|c| c.element_order.to_string())).collect());
    for (i, chi) in export.characters.iter().enumerate() {
        rows.push(std::iter::once(format!("chi_{}", i + 1)).chain(chi.iter().cloned()).collect());
    }
    let width: Vec<usize> = (0..rows[0].len())
        .map(|j| rows.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    println!("{spec}: order {}, {} classes", export.order, export.classes.len());
    for (k, r) in rows.iter().enumerate() {
        let line: Vec<String> = r.iter().zip(&width).map(|(s, w)| format!("{s:>w$}")).collect();
        println!("{}", line.join("  "));
        if k == 2 {
            println!("{}", "-".repeat(line.join("  ").chars().count()));
        }
    }
    Ok(verdict(t.orthogonality().holds()))
}

fn constraints(ws: &Workspace, which: &str) -> Result<Vec<Subgroup>> {
    match which {
        "minimal" => Ok(ws.minimal_normals().to_vec()),
        "none" => Ok(Vec::new()),
        other => bail!(artin_core::Error::Input(format!("unknown constraint set `{other}`; use minimal or none"))),
    }
}

pub fn certify(a: CertifyArgs, limits: Limits, argv: &[String]) -> Result<Verdict> {
    let ws = workspace(&a.group, limits)?;
    let family = SubgroupFilter::parse(&a.family)?;
    let normals = constraints(&ws, &a.normals)?;
    let k = ws.table().len();
    if a.character == 0 || a.character > k {
        bail!(artin_core::Error::Input(format!("--char must lie in 1..={k}")));
    }
    let cert = certificate_solve(&ws, ws.table().get(a.character - 1), family, &normals)?;
    let pass = cert.verify();
    let params = json!({"group": a.group, "char": a.character, "family": family.name(), "normals": a.normals});
    emit(a.out.as_deref(), argv, "certificate.json", &cert.export(&a.group), params, None, pass)?;
    Ok(verdict(pass))
}

#[derive(Serialize)]
struct NormalReport {
    order: usize,
    generators: Vec<String>,
    spaces: Vec<SpaceReport>,
}

pub fn verify_tgn(a: VerifyTgnArgs, limits: Limits, argv: &[String]) -> Result<Verdict> {
    let ws = workspace(&a.group, limits)?;
    let mut out = Vec::new();
    let mut pass = true;
    for n in normal_subgroups(ws.group()).into_iter().filter(|n| !n.is_trivial()) {
        let mut spaces = Vec::new();
        for f in [SubgroupFilter::All, SubgroupFilter::Nilpotent] {
            let r = verify_spaces(&ws, std::slice::from_ref(&n), f)?;
            pass &= r.equal;
            if a.out.is_some() {
                eprintln!("|N| = {:>4}  {:<10} {}", n.order(), f.name(), if r.equal { "holds" } else { "fails" });
            }
            spaces.push(r);
        }
        out.push(NormalReport {
            order: n.order(),
            generators: subgroup_export(&n).generators,
            spaces,
        });
    }
    emit(a.out.as_deref(), argv, "normals.json", &out, json!({"group": a.group}), None, pass)?;
    Ok(verdict(pass))
}

#[derive(Serialize)]
struct FaithfulReport {
    group: String,
    faithful: Vec<usize>,
    spaces: Option<SpaceReport>,
    certificates: Vec<artin_core::induction::CertificateExport>,
}

pub fn verify_faithful(a: VerifyFaithfulArgs, limits: Limits, argv: &[String]) -> Result<Verdict> {
    let ws = workspace(&a.group, limits)?;
    let faithful = ws.table().faithful_indices();
    let mut report = FaithfulReport {
        group: a.group.clone(),
        faithful: faithful.iter().map(|i| i + 1).collect(),
        spaces: None,
        certificates: Vec::new(),
    };
    let mut pass = true;
    if !faithful.is_empty() {
        let mn = ws.minimal_normals().to_vec();
        let spaces = verify_spaces(&ws, &mn, SubgroupFilter::Nilpotent)?;
        pass &= spaces.equal;
        report.spaces = Some(spaces);
        for &i in &faithful {
            let cert = certificate_solve(&ws, ws.table().get(i), SubgroupFilter::Nilpotent, &mn)?;
            pass &= cert.verify();
            report.certificates.push(cert.export(&a.group));
        }
    } else {
        eprintln!("{} has no faithful irreducible character", a.group);
    }
    emit(a.out.as_deref(), argv, "certificates.json", &report, json!({"group": a.group}), None, pass)?;
    Ok(verdict(pass))
}

#[derive(Serialize)]
struct MackeyPair {
    first: (usize, Vec<u64>),
    second: (usize, Vec<u64>),
    report: MackeyReport,
}

pub fn mackey(a: MackeyArgs, limits: Limits, argv: &[String]) -> Result<Verdict> {
    let ws = workspace(&a.group, limits)?;
    let all = ws.monomials(SubgroupFilter::All)?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut pairs = Vec::new();
    let mut pass = true;
    for _ in 0..a.pairs {
        let (x, y) = (&all[rng.gen_range(0..all.len())], &all[rng.gen_range(0..all.len())]);
        let report = mackey_decompose(x, y)?.check(x, y)?;
        pass &= report.pointwise && report.degree_sum == report.expected_degree;
        pairs.push(MackeyPair {
            first: (x.subgroup.order(), x.label.clone()),
            second: (y.subgroup.order(), y.label.clone()),
            report,
        });
    }
    let params = json!({"group": a.group, "pairs": a.pairs});
    emit(a.out.as_deref(), argv, "mackey.json", &pairs, params, Some(a.seed), pass)?;
    Ok(verdict(pass))
}

pub fn scan_bad(a: ScanArgs, limits: Limits, argv: &[String]) -> Result<Verdict> {
    if !(a.disc > 1.0) {
        bail!(artin_core::Error::Input("--disc must exceed 1".into()));
    }
    let log_disc = a.disc.ln();
    let chars = DirichletCharacter::primitive(a.modulus)?;
    let chi = chars
        .get(a.character.wrapping_sub(1))
        .cloned()
        .with_context(|| format!("modulus {} has {} primitive characters", a.modulus, chars.len()))?;
    let degree = chi.order() as u64;
    let grid_spec = match a.grid.strip_prefix("gate:") {
        Some(rest) => format!("{}:{rest}", (range_gate(log_disc, degree, a.eps).hi.ceil() as u64).max(2)),
        None => a.grid.clone(),
    };
    let grid = parse_grid(&grid_spec)?;
    let oracle: Box<dyn PrimeSumOracle> = if a.synthetic {
        Box::new(NoCancellationOracle)
    } else {
        Box::new(CharacterOracle(chi))
    };
    let r = eps_bad_scan(oracle.as_ref(), log_disc, degree, degree, a.eps, &grid, &limits)?;
    println!(
        "{}: {} grid points, max ratio {:.6}, {}",
        r.oracle,
        r.rows.len(),
        r.max_ratio,
        match r.first_flag {
            Some(h) => format!("flagged at H = {h}"),
            None => "not flagged".to_string(),
        }
    );
    if let Some(dir) = &a.out {
        let mut run = Run::new(dir, argv);
        run.write("scan.csv", r.to_csv().into_bytes())?;
        run.write("scan.json", to_json(&r)?)?;
        let params = json!({"mod": a.modulus, "char": a.character, "eps": a.eps, "disc": a.disc, "grid": grid_spec, "synthetic": a.synthetic});
        run.finish(params, None, !r.flagged)?;
    }
    Ok(verdict(!r.flagged))
}

pub fn bounds(a: BoundsArgs) -> Result<Verdict> {
    let kind: BoundKind = a.which.parse()?;
    if kind == BoundKind::CEps {
        println!("{}", c_epsilon(a.eps, a.deg_k)?);
        return Ok(Verdict::Pass);
    }
    let p = BoundParams {
        n: a.n,
        d: a.d,
        log_q: a.log_q.unwrap_or(a.q.ln()),
        log_h: a.log_h.unwrap_or(a.h.ln()),
        log_m: a.log_m.unwrap_or(a.m.ln()),
        eps: a.eps,
        t: a.t,
        delta: a.delta,
        sigma: a.sigma,
        sigma0: a.sigma0,
        s_count: a.s_count,
        r: a.r,
        log_delta_f: a.log_delta_f,
        log_disc: a.disc.ln(),
        field_degree: a.field_degree,
        deg_k: a.deg_k,
        a_l1: a.a_l1,
        e_sum: a.e_sum,
        log_e_count: a.e_count.ln(),
        a0t: a.a0t,
    };
    let v = rhs_bounds(kind, &p)?;
    println!("{kind} = {v}");
    Ok(Verdict::Pass)
}

pub fn bilinear(a: BilinearArgs, limits: Limits, argv: &[String]) -> Result<Verdict> {
    if !(a.h >= 2.0 && a.h.fract() == 0.0 && a.h <= 1e15) {
        bail!(artin_core::Error::Input("--H must be an integer of at least 2".into()));
    }
    let mut family = Vec::new();
    for &q in &a.mods {
        family.extend(DirichletCharacter::primitive(q)?);
    }
    if family.is_empty() {
        bail!(artin_core::Error::Input("the moduli have no primitive characters".into()));
    }
    let coefficients = a.coefficients.clone().unwrap_or_else(|| vec![1.0; family.len()]);
    let r = bilinear_check(&family, &coefficients, a.h as u64, &limits)?;
    println!("{} characters, H = {}", r.characters.len(), r.h);
    println!("lhs     = {}", r.lhs);
    println!("trivial = {} ({})", r.trivial, if r.trivial_pass { "holds" } else { "fails" });
    match (&r.gated, r.gated_pass) {
        (Ok(b), Some(p)) => println!("gated   = {b} ({})", if p { "holds" } else { "fails" }),
        (Err(g), _) => println!("gated   = outside gate: {g}"),
        _ => {}
    }
    let pass = r.trivial_pass && r.gated_pass != Some(false);
    if let Some(dir) = &a.out {
        let mut run = Run::new(dir, argv);
        run.write("bilinear.json", to_json(&r)?)?;
        run.finish(json!({"mods": a.mods, "H": r.h, "coefficients": coefficients}), None, pass)?;
    }
    Ok(verdict(pass))
}

pub fn suite(a: SuiteArgs, limits: Limits, argv: &[String]) -> Result<Verdict> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(a.jobs).build()?;
    let specs = catalog();
    let mut run = Run::new(&a.out, argv);
    let ((outcomes, group_seconds), (analytic, analytic_seconds)) = pool.install(|| {
        rayon::join(
            || {
                let t = Instant::now();
                let v: Vec<_> = specs
                    .par_iter()
                    .enumerate()
                    .map(|(i, s)| check_group(i, s, a.seed, limits))
                    .collect();
                (v, t.elapsed().as_secs_f64())
            },
            || {
                let t = Instant::now();
                let v = analytic_checks(a.seed, &limits);
                (v, t.elapsed().as_secs_f64())
            },
        )
    });
    run.phase("groups", group_seconds);
    run.phase("analytic", analytic_seconds);

    let mut groups = Vec::with_capacity(outcomes.len());
    for o in outcomes {
        if !o.certificates.is_empty() {
            let name = format!("certificates/{:02}-{}.json", o.report.index + 1, slug(&o.report.spec));
            run.write(&name, to_json(&o.certificates)?)?;
        }
        groups.push(o.report);
    }
    let report = SuiteReport::new(a.seed, groups, analytic);
    run.write("suite.json", to_json(&report)?)?;

    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["criterion", "title", "checks", "failures", "verdict"])?;
    for c in &report.criteria {
        w.write_record([
            c.id.to_string(),
            c.title.clone(),
            c.checks.to_string(),
            c.failures.to_string(),
            if c.pass { "PASS" } else { "FAIL" }.to_string(),
        ])?;
    }
    run.write("summary.csv", w.into_inner()?)?;

    for c in &report.criteria {
        println!(
            "{:>2}  {:<4}  {:>5} checks  {:<52}{}",
            c.id,
            if c.pass { "PASS" } else { "FAIL" },
            c.checks,
            c.title,
            c.first_failure.as_deref().map(|f| format!("  first failure: {f}")).unwrap_or_default()
        );
    }
    let pass = report.pass();
    run.finish(json!({"catalog": specs, "limits": limits}), Some(a.seed), pass)?;
    Ok(verdict(pass))
}
