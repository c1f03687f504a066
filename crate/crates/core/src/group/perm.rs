use std::collections::HashMap;
use std::fmt;

use super::Group;
use crate::error::{Error, Result};

/// A permutation of `0..degree`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::bad(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images.into_iter().map(|i| i as u32).collect()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            out[j as usize] = i as u32;
        }
        Permutation(out)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut i = self.apply(start);
            while i != start {
                seen[i] = true;
                cyc.push(i);
                i = self.apply(i);
            }
            out.push(cyc);
        }
        out
    }

    /// Closure of `generators` by breadth-first search, as an abstract group.
    ///
    /// Element 0 is the identity; the rest follow BFS discovery order with the
    /// generators tried in the order given, so the labeling is reproducible.
    pub fn generate_group(degree: usize, generators: &[Permutation], cap: usize) -> Result<Group> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::bad(format!(
                "generator {g} has degree {} but the declared degree is {degree}",
                g.degree()
            )));
        }
        let cap = cap.min(super::MAX_REPRESENTABLE_ORDER);
        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        // BFS tree: element k = parent[k] * generators[via[k]].
        let mut parent = vec![0usize];
        let mut via = vec![usize::MAX];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut i = 0;
        while i < elements.len() {
            let mut row = Vec::with_capacity(generators.len());
            for (si, s) in generators.iter().enumerate() {
                let x = elements[i].then(s);
                let k = match index.get(&x) {
                    Some(&k) => k,
                    None => {
                        let k = elements.len();
                        if k >= cap {
                            return Err(Error::ClosureTooLarge { cap });
                        }
                        index.insert(x.clone(), k);
                        elements.push(x);
                        parent.push(i);
                        via.push(si);
                        k
                    }
                };
                row.push(k);
            }
            right.push(row);
            i += 1;
        }
        let n = elements.len();
        let mut flat = vec![0u16; n * n];
        for a in 0..n {
            flat[a * n] = a as u16;
        }
        for k in 1..n {
            let (p, s) = (parent[k], via[k]);
            for a in 0..n {
                let ap = flat[a * n + p] as usize;
                flat[a * n + k] = right[ap][s] as u16;
            }
        }
        Group::from_flat(n, flat)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Parses disjoint-cycle notation such as `(0 1 2)(3 4)`; `()` is the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let mut images: Vec<usize> = (0..degree).collect();
    let mut touched = vec![false; degree];
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(Error::Format("empty permutation".into()));
    }
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::Format(format!("expected '(' in {text:?}")));
        };
        let close = body
            .find(')')
            .ok_or_else(|| Error::Format(format!("unclosed cycle in {text:?}")))?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .map_err(|_| Error::Format(format!("bad point {s:?} in {text:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        for (i, &p) in points.iter().enumerate() {
            if p >= degree {
                return Err(Error::Format(format!("point {p} exceeds degree {degree}")));
            }
            if std::mem::replace(&mut touched[p], true) {
                return Err(Error::Format(format!("point {p} repeated in {text:?}")));
            }
            images[p] = points[(i + 1) % points.len()];
        }
        rest = body[close + 1..].trim_start();
    }
    Permutation::from_images(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = parse_cycles("(0 1 2)(3 4)", 5).unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.apply(4), 3);
        assert_eq!(p.to_string(), "(0 1 2)(3 4)");
        assert_eq!(parse_cycles("()", 3).unwrap(), Permutation::identity(3));
        assert!(parse_cycles("(0 5)", 3).is_err());
        assert!(parse_cycles("(0 1)(1 2)", 3).is_err());
        assert!(parse_cycles("0 1", 3).is_err());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let p = parse_cycles("(0 3 1)(2 4)", 5).unwrap();
        assert_eq!(p.then(&p.inverse()), Permutation::identity(5));
    }
}
