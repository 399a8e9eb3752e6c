//! Named permutation groups and the text format for group specs.
//!
//! A spec is a product of factors separated by `x`, each factor one of
//! `Sym(n)`, `Alt(n)`, `Cyc(n)`, `Dih(n)`, `Q8`, `Q16`, `SL23`, `F21`, or an
//! explicit generator list `<(1 2 3), (1 2)>`.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;

use super::finite::Group;
use super::perm::Perm;
use super::schreier::PermGroup;
use crate::config::Limits;
use crate::error::{input, Result};

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Perm {
    Perm::from_cycles(degree, &[points.into_iter().collect()]).expect("valid cycle")
}

pub fn symmetric_perm(n: usize) -> PermGroup {
    if n <= 1 {
        return PermGroup::trivial(1);
    }
    PermGroup::new(n, vec![cycle(n, 1..=n), cycle(n, [1, 2])]).expect("symmetric group")
}

pub fn alternating_perm(n: usize) -> PermGroup {
    if n <= 2 {
        return PermGroup::trivial(n.max(1));
    }
    let gens = (1..=n - 2).map(|i| cycle(n, [i, i + 1, i + 2])).collect();
    PermGroup::new(n, gens).expect("alternating group")
}

pub fn cyclic_perm(n: usize) -> PermGroup {
    if n <= 1 {
        return PermGroup::trivial(1);
    }
    PermGroup::new(n, vec![cycle(n, 1..=n)]).expect("cyclic group")
}

/// Dihedral group of order `2n`.
pub fn dihedral_perm(n: usize) -> PermGroup {
    match n {
        0 | 1 => cyclic_perm(2),
        2 => PermGroup::new(
            4,
            vec![
                Perm::parse("(1 2)(3 4)", Some(4)).unwrap(),
                Perm::parse("(1 3)(2 4)", Some(4)).unwrap(),
            ],
        )
        .unwrap(),
        _ => {
            let reflection: Vec<u32> = (0..n as u32).map(|i| (n as u32 - i) % n as u32).collect();
            PermGroup::new(
                n,
                vec![cycle(n, 1..=n), Perm::from_images(reflection).unwrap()],
            )
            .unwrap()
        }
    }
}

/// Right regular representation of the group generated by `gens` under `mul`.
fn regular<T: Clone + Eq + Hash>(identity: T, gens: &[T], mul: impl Fn(&T, &T) -> T) -> PermGroup {
    let mut elements = vec![identity];
    let mut index: HashMap<T, usize> = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let y = mul(&elements[i], g);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        i += 1;
    }
    let n = elements.len();
    let perms = gens
        .iter()
        .map(|g| {
            let images = elements.iter().map(|x| index[&mul(x, g)] as u32).collect();
            Perm::from_images(images).unwrap()
        })
        .collect();
    PermGroup::new(n, perms).unwrap()
}

/// Quaternion group of order 8 in its regular representation.
pub fn quaternion8_perm() -> PermGroup {
    type Q = [i8; 4];
    fn qmul(a: &Q, b: &Q) -> Q {
        [
            a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
            a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0],
        ]
    }
    regular([1, 0, 0, 0], &[[0, 1, 0, 0], [0, 0, 1, 0]], qmul)
}

/// Generalised quaternion group of order `4m` (`a^{2m} = 1`, `b² = a^m`,
/// `b⁻¹ab = a⁻¹`), regular representation.
pub fn dicyclic_perm(m: i64) -> PermGroup {
    // (i, j) stands for a^i b^j with j ∈ {0, 1}.
    let n = 2 * m;
    let mul = move |x: &(i64, i64), y: &(i64, i64)| -> (i64, i64) {
        let (i, j) = *x;
        let (k, l) = *y;
        let k = if j == 1 { -k } else { k };
        let mut e = i + k;
        let mut b = j + l;
        if b == 2 {
            b = 0;
            e += m;
        }
        (e.rem_euclid(n), b)
    };
    regular((0, 0), &[(1, 0), (0, 1)], mul)
}

pub fn quaternion16_perm() -> PermGroup {
    dicyclic_perm(4)
}

/// SL(2,3) acting on the eight nonzero vectors of 𝔽₃².
pub fn sl23_perm() -> PermGroup {
    let vectors: Vec<(u8, u8)> = (0..3)
        .flat_map(|a| (0..3).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    let act = |m: [u8; 4]| -> Perm {
        let images = vectors
            .iter()
            .map(|&(x, y)| {
                let w = ((m[0] * x + m[1] * y) % 3, (m[2] * x + m[3] * y) % 3);
                vectors.iter().position(|&v| v == w).unwrap() as u32
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    PermGroup::new(8, vec![act([1, 1, 0, 1]), act([0, 2, 1, 0])]).unwrap()
}

/// The Frobenius group C₇ ⋊ C₃ of affine maps `x ↦ ax + b` on 𝔽₇ with `a` a cube.
pub fn frobenius21_perm() -> PermGroup {
    let translate = Perm::from_images((0..7).map(|x| (x + 1) % 7).collect()).unwrap();
    let scale = Perm::from_images((0..7).map(|x| (2 * x) % 7).collect()).unwrap();
    PermGroup::new(7, vec![translate, scale]).unwrap()
}

pub fn direct_product_perm(factors: &[PermGroup]) -> PermGroup {
    let degree: usize = factors.iter().map(|f| f.degree()).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for f in factors {
        for g in f.generators() {
            gens.push(g.shifted(offset, degree));
        }
        offset += f.degree();
    }
    PermGroup::new(degree, gens).unwrap()
}

fn enumerate(p: PermGroup) -> Result<Arc<Group>> {
    Group::new(p, Limits::default())
}

pub fn symmetric(n: usize) -> Result<Arc<Group>> {
    enumerate(symmetric_perm(n))
}

pub fn alternating(n: usize) -> Result<Arc<Group>> {
    enumerate(alternating_perm(n))
}

pub fn cyclic(n: usize) -> Result<Arc<Group>> {
    enumerate(cyclic_perm(n))
}

pub fn dihedral(n: usize) -> Result<Arc<Group>> {
    enumerate(dihedral_perm(n))
}

fn split_factors(spec: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in spec.char_indices() {
        match c {
            '(' | '<' | '[' => depth += 1,
            ')' | '>' | ']' => depth -= 1,
            'x' | '×' if depth == 0 => {
                parts.push(&spec[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
        if depth < 0 {
            return input(format!("unbalanced brackets in `{spec}`"));
        }
    }
    if depth != 0 {
        return input(format!("unbalanced brackets in `{spec}`"));
    }
    parts.push(&spec[start..]);
    Ok(parts.into_iter().map(str::trim).collect())
}

fn family_argument(factor: &str, name: &str) -> Option<Result<usize>> {
    let rest = factor.strip_prefix(name)?;
    let inner = rest.trim().strip_prefix('(')?.strip_suffix(')')?;
    Some(
        inner
            .trim()
            .parse::<usize>()
            .map_err(|_| crate::Error::Input(format!("bad argument in `{factor}`"))),
    )
}

/// Parses an explicit generator list such as `<(1 2 3), (1 2)>`.
pub fn parse_generators(text: &str, degree: Option<usize>) -> Result<(usize, Vec<Perm>)> {
    let t = text.trim();
    let body = t
        .strip_prefix('<')
        .and_then(|s| s.strip_suffix('>'))
        .or_else(|| t.strip_prefix('[').and_then(|s| s.strip_suffix(']')))
        .unwrap_or(t);
    let mut pieces = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in body.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                pieces.push(&body[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    pieces.push(&body[start..]);
    let pieces: Vec<&str> = pieces.into_iter().map(str::trim).filter(|p| !p.is_empty()).collect();
    let mut max_point = 1;
    for p in &pieces {
        let perm = Perm::parse(p, None)?;
        max_point = max_point.max(perm.degree());
    }
    let n = match degree {
        Some(d) if d < max_point => return input(format!("generators of `{text}` exceed degree {d}")),
        Some(d) => d,
        None => max_point,
    };
    let gens = pieces
        .iter()
        .map(|p| Perm::parse(p, Some(n)))
        .collect::<Result<Vec<_>>>()?;
    Ok((n, gens))
}

fn parse_factor(factor: &str) -> Result<PermGroup> {
    let f = factor.trim();
    if f.starts_with('<') || f.starts_with('[') {
        let (n, gens) = parse_generators(f, None)?;
        return PermGroup::new(n, gens);
    }
    let builders: [(&str, fn(usize) -> PermGroup); 4] = [
        ("Sym", symmetric_perm),
        ("Alt", alternating_perm),
        ("Cyc", cyclic_perm),
        ("Dih", dihedral_perm),
    ];
    for (name, build) in builders {
        if let Some(arg) = family_argument(f, name) {
            let n = arg?;
            if n == 0 {
                return input(format!("`{f}` needs a positive argument"));
            }
            if n > 64 {
                return input(format!("`{f}` is too large for this tool"));
            }
            return Ok(build(n));
        }
    }
    match f {
        "Q8" => Ok(quaternion8_perm()),
        "Q16" => Ok(quaternion16_perm()),
        "SL23" | "SL(2,3)" => Ok(sl23_perm()),
        "F21" => Ok(frobenius21_perm()),
        _ => input(format!("unknown group `{f}`")),
    }
}

/// Parses a group spec into a permutation group (no enumeration).
pub fn parse_spec(spec: &str) -> Result<PermGroup> {
    let factors = split_factors(spec)?;
    if factors.iter().any(|f| f.is_empty()) {
        return input(format!("empty factor in `{spec}`"));
    }
    let groups = factors.into_iter().map(parse_factor).collect::<Result<Vec<_>>>()?;
    if groups.len() == 1 {
        return Ok(groups.into_iter().next().unwrap());
    }
    Ok(direct_product_perm(&groups))
}

/// Parses and enumerates a group spec.
pub fn group_from_spec(spec: &str, limits: Limits) -> Result<Arc<Group>> {
    Group::new(parse_spec(spec)?, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(spec: &str) -> u64 {
        parse_spec(spec).unwrap().order_u64().unwrap()
    }

    #[test]
    fn named_family_orders() {
        assert_eq!(order("Sym(5)"), 120);
        assert_eq!(order("Alt(5)"), 60);
        assert_eq!(order("Alt(2)"), 1);
        assert_eq!(order("Cyc(30)"), 30);
        assert_eq!(order("Dih(20)"), 40);
        assert_eq!(order("Dih(2)"), 4);
        assert_eq!(order("Dih(1)"), 2);
        assert_eq!(order("Q8"), 8);
        assert_eq!(order("Q16"), 16);
        assert_eq!(order("SL23"), 24);
        assert_eq!(order("F21"), 21);
        assert_eq!(order("Cyc(3) x Sym(3)"), 18);
        assert_eq!(order("Q8xCyc(3)"), 24);
        assert_eq!(order("<(1 2 3), (1 2)>"), 6);
    }

    #[test]
    fn malformed_specs_are_rejected() {
        for bad in ["Sym(", "Foo(3)", "Sym(0)", "Cyc(3) x", "<(1 2 2)>", "Sym(a)"] {
            assert!(parse_spec(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn quaternion_groups_have_one_involution() {
        for spec in ["Q8", "Q16"] {
            let g = group_from_spec(spec, Limits::default()).unwrap();
            let involutions = (0..g.order()).filter(|&i| g.element_order(i) == 2).count();
            assert_eq!(involutions, 1, "{spec}");
        }
    }

    #[test]
    fn sl23_is_not_s4() {
        let g = group_from_spec("SL23", Limits::default()).unwrap();
        let involutions = (0..g.order()).filter(|&i| g.element_order(i) == 2).count();
        assert_eq!(involutions, 1);
        assert_eq!(g.num_classes(), 7);
    }
}
