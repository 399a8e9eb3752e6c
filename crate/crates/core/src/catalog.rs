//! The reference catalog of small groups used by the verification suite.

/// Group specs in suite order.
pub fn catalog() -> Vec<String> {
    let mut out = Vec::new();
    out.extend((1..=30).map(|n| format!("Cyc({n})")));
    out.extend((1..=20).map(|n| format!("Dih({n})")));
    out.extend((1..=5).map(|n| format!("Sym({n})")));
    out.extend((1..=5).map(|n| format!("Alt({n})")));
    for s in ["Q8", "Q16", "SL23", "F21", "Cyc(3) x Sym(3)", "Q8 x Cyc(3)"] {
        out.push(s.to_string());
    }
    out
}

/// A handful of catalog groups with varied structure, for quick checks.
pub fn sampler() -> Vec<String> {
    ["Cyc(1)", "Cyc(6)", "Dih(4)", "Dih(5)", "Sym(3)", "Sym(4)", "Alt(4)", "Alt(5)", "Q8", "SL23", "F21", "Q8 x Cyc(3)"]
        .iter()
        .map(|s| s.to_string())
        .collect()
}
