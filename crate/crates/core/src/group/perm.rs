use std::fmt;

use num_integer::Integer;

use crate::error::{input, Result};

/// A permutation of `{0, .., n-1}` stored by its image array.
///
/// Products compose left to right: `a.mul(&b)` applies `a` first, then `b`.
/// Text I/O uses 1-based cycle notation such as `(1 2 3)(4 5)`.
/// The derived ordering is lexicographic on image arrays.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u32]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, rejecting non-bijections.
    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return input(format!("image array {images:?} is not a bijection"));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation of the given degree from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut acc = Perm::identity(degree);
        for cycle in cycles {
            let mut seen = std::collections::HashSet::new();
            for &p in cycle {
                if p == 0 || p > degree {
                    return input(format!("point {p} outside 1..{degree}"));
                }
                if !seen.insert(p) {
                    return input(format!("point {p} repeated in a cycle"));
                }
            }
            images.iter_mut().enumerate().for_each(|(i, x)| *x = i as u32);
            for w in 0..cycle.len() {
                let a = cycle[w] - 1;
                let b = cycle[(w + 1) % cycle.len()] - 1;
                images[a] = b as u32;
            }
            let c = Perm {
                images: images.clone().into_boxed_slice(),
            };
            acc = acc.mul(&c);
        }
        Ok(acc)
    }

    /// Parses cycle notation. `degree` pads the result; when absent the
    /// largest point mentioned is used.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Perm> {
        let cycles = parse_cycles(text)?;
        let max_point = cycles.iter().flatten().copied().max().unwrap_or(0);
        let n = match degree {
            Some(d) if d < max_point => {
                return input(format!("point {max_point} exceeds degree {d} in `{text}`"))
            }
            Some(d) => d,
            None => max_point.max(1),
        };
        Perm::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.inverse().mul(self).mul(g)
    }

    pub fn pow(&self, mut e: i64) -> Perm {
        let mut base = if e < 0 {
            e = -e;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Nontrivial cycles, each starting at its smallest point (0-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Places `self` on points `offset..offset+deg` of a larger set.
    pub fn shifted(&self, offset: usize, degree: usize) -> Perm {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset as u32;
        }
        Perm {
            images: images.into_boxed_slice(),
        }
    }

    /// Extends to a larger degree by fixing the new points.
    pub fn padded(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree());
        self.shifted(0, degree)
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return input(format!("expected `(` in cycle notation `{text}`"));
        }
        let close = match rest.find(')') {
            Some(c) => c,
            None => return input(format!("unbalanced parenthesis in `{text}`")),
        };
        let body = &rest[1..close];
        let mut cycle = Vec::new();
        for tok in body.split(|c: char| c == ',' || c.is_whitespace()) {
            if tok.is_empty() {
                continue;
            }
            match tok.parse::<usize>() {
                Ok(p) => cycle.push(p),
                Err(_) => return input(format!("bad point `{tok}` in `{text}`")),
            }
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        let p = Perm::parse("(1 2 3)(4 5)", None).unwrap();
        assert_eq!(p.degree(), 5);
        assert_eq!(p.to_string(), "(1 2 3)(4 5)");
        assert_eq!(p.order(), 6);
        assert_eq!(Perm::parse("()", Some(3)).unwrap(), Perm::identity(3));
    }

    #[test]
    fn products_compose_left_to_right() {
        let a = Perm::parse("(1 2)", Some(3)).unwrap();
        let b = Perm::parse("(2 3)", Some(3)).unwrap();
        // 1 -a-> 2 -b-> 3, so a·b sends 1 to 3.
        assert_eq!(a.mul(&b).image(0), 2);
        assert_eq!(Perm::parse("(1 2)(2 3)", Some(3)).unwrap(), a.mul(&b));
        assert!(a.mul(&a).is_identity());
        assert_eq!(a.mul(&b).inverse(), b.mul(&a));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::parse("(1 1)", None).is_err());
        assert!(Perm::parse("(1 4)", Some(3)).is_err());
        assert!(Perm::parse("1 2", None).is_err());
    }

    #[test]
    fn powers_and_conjugation() {
        let c = Perm::parse("(1 2 3 4 5)", None).unwrap();
        assert_eq!(c.pow(5), Perm::identity(5));
        assert_eq!(c.pow(-1), c.inverse());
        let t = Perm::parse("(1 2)", Some(5)).unwrap();
        assert_eq!(c.conjugate_by(&t).order(), 5);
    }
}
