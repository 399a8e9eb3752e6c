use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::Check;
use crate::config::Limits;
use crate::error::Result;
use crate::group::families::group_from_spec;
use crate::group::structure::{is_nilpotent, normal_subgroups};
use crate::group::{Subgroup, SubgroupFilter};
use crate::induction::{
    bounded_certificate, certificate_solve, class_indicator_decomposition, mackey_decompose, verify_spaces,
    CertificateExport, Workspace,
};

/// Random monomial pairs checked per group.
pub const MACKEY_PAIRS_PER_GROUP: usize = 4;

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub index: usize,
    pub spec: String,
    pub order: usize,
    pub classes: usize,
    pub faithful_irreducibles: usize,
    pub nilpotent: bool,
    pub checks: Vec<Check>,
}

pub struct GroupOutcome {
    pub report: GroupReport,
    /// One certificate per faithful irreducible, over nilpotent subgroups.
    pub certificates: Vec<CertificateExport>,
}

fn outcome<T>(criterion: u8, subject: String, r: Result<T>, judge: impl FnOnce(T) -> (bool, String)) -> Check {
    match r {
        Ok(v) => {
            let (pass, detail) = judge(v);
            Check::new(criterion, subject, pass, detail)
        }
        Err(e) => Check::new(criterion, subject, false, e.to_string()),
    }
}

/// Runs criteria 1 to 8 on one catalog group. `index` seeds the random
/// Mackey pairs so results do not depend on scheduling.
pub fn check_group(index: usize, spec: &str, seed: u64, limits: Limits) -> GroupOutcome {
    let mut report = GroupReport {
        index,
        spec: spec.to_string(),
        order: 0,
        classes: 0,
        faithful_irreducibles: 0,
        nilpotent: false,
        checks: Vec::new(),
    };
    let mut certificates = Vec::new();
    let ws = match group_from_spec(spec, limits).and_then(|g| Workspace::new(&g)) {
        Ok(ws) => ws,
        Err(e) => {
            report.checks.push(Check::new(1, spec, false, e.to_string()));
            return GroupOutcome { report, certificates };
        }
    };
    let g = ws.group().clone();
    let table = ws.table();
    let faithful = table.faithful_indices();
    let nilpotent = is_nilpotent(&Subgroup::whole(&g));
    report.order = g.order();
    report.classes = g.num_classes();
    report.faithful_irreducibles = faithful.len();
    report.nilpotent = nilpotent;
    let checks = &mut report.checks;

    let o = table.orthogonality();
    checks.push(Check::new(
        1,
        "table",
        o.holds(),
        format!("rows {} columns {} degree squares {}", o.rows, o.columns, o.degree_squares),
    ));

    if !faithful.is_empty() {
        let mn = ws.minimal_normals().to_vec();
        checks.push(outcome(2, "spaces".into(), verify_spaces(&ws, &mn, SubgroupFilter::Nilpotent), |r| {
            (r.equal, format!("dim R {} rank I {}", r.r_dim, r.i_rank))
        }));
        for &i in &faithful {
            let r = certificate_solve(&ws, table.get(i), SubgroupFilter::Nilpotent, &mn);
            if let Ok(cert) = &r {
                certificates.push(cert.export(spec));
            }
            checks.push(outcome(2, format!("chi_{}", i + 1), r, |c| {
                (c.verify(), format!("{} terms", c.terms.len()))
            }));
        }
        if g.order() > 1 {
            checks.push(outcome(5, "bounded".into(), bounded_certificate(&ws), |(certs, r)| {
                let verified = certs.iter().all(|c| c.verify());
                (
                    r.holds() && verified,
                    format!(
                        "d {} m {} max entry {} max degree {} max coefficient {}",
                        r.d, r.m, r.max_entry, r.max_degree, r.max_coefficient
                    ),
                )
            }));
        }
    }

    for (k, n) in normal_subgroups(&g).into_iter().filter(|n| !n.is_trivial()).enumerate() {
        let mut families = vec![SubgroupFilter::All, SubgroupFilter::Nilpotent];
        if nilpotent {
            families.push(SubgroupFilter::ElementaryRankLe2);
        }
        for f in families {
            let subject = format!("N{} (order {}) {}", k + 1, n.order(), f.name());
            checks.push(outcome(3, subject, verify_spaces(&ws, std::slice::from_ref(&n), f), |r| {
                let pass = r.equal && r.dual_check != Some(false) && r.pushforward_vanishes && r.i_within_r;
                (pass, format!("dim R {} rank I {} dual {:?}", r.r_dim, r.i_rank, r.dual_check))
            }));
        }
    }

    let classes = g.num_classes();
    checks.push(outcome(4, "cyclic".into(), verify_spaces(&ws, &[], SubgroupFilter::Cyclic), |r| {
        (r.equal && r.i_rank == classes, format!("rank {} of {classes}", r.i_rank))
    }));

    for c in 0..classes {
        checks.push(outcome(6, format!("class {}", c + 1), class_indicator_decomposition(&ws, c), |d| {
            let r = d.report();
            (d.within_one() && d.reproduces, format!("l1 <= {}", r.l1_upper))
        }));
    }

    match ws.monomials(SubgroupFilter::All) {
        Ok(all) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(index as u64));
            for p in 0..MACKEY_PAIRS_PER_GROUP {
                let (a, b) = (&all[rng.gen_range(0..all.len())], &all[rng.gen_range(0..all.len())]);
                let r = mackey_decompose(a, b).and_then(|d| d.check(a, b));
                checks.push(outcome(7, format!("pair {}", p + 1), r, |r| {
                    (
                        r.pointwise && r.degree_sum == r.expected_degree,
                        format!("{} double cosets, degree {}", r.double_cosets, r.degree_sum),
                    )
                }));
            }
        }
        Err(e) => checks.push(Check::new(7, "monomials", false, e.to_string())),
    }

    checks.push(outcome(8, "kernel filter".into(), ws.kernel_filter_agreement(), |(pairs, bad)| {
        (bad == 0, format!("{pairs} pairs, {bad} disagreements"))
    }));

    GroupOutcome { report, certificates }
}
