use std::fmt;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::Group;

/// A non-trivial partition: proper non-trivial subgroups, at least two,
/// meeting pairwise in the identity and covering their ambient group.
///
/// Components are sorted element lists in the parent group's indexing, kept
/// in canonical order: by cardinality, then by least non-identity element.
/// The ambient group is the parent itself or one of its subgroups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionCover {
    ambient: Vec<usize>,
    components: Vec<Vec<usize>>,
}

impl PartitionCover {
    /// Canonicalizes; does not validate (see [`check_partition`]).
    pub fn new(ambient: Vec<usize>, mut components: Vec<Vec<usize>>) -> Self {
        for c in &mut components {
            c.sort_unstable();
        }
        components.sort_by_key(|c| (c.len(), c.get(1).copied()));
        let mut ambient = ambient;
        ambient.sort_unstable();
        PartitionCover { ambient, components }
    }

    pub fn ambient(&self) -> &[usize] {
        &self.ambient
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component_orders(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    /// One component per line, e.g. `[0 3 5]`.
    pub fn dump(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PartitionCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.components {
            let items: Vec<String> = c.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", items.join(" "))?;
        }
        Ok(())
    }
}

/// Reads a witness dump back into component lists.
pub fn parse_witness_dump(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.lines() {
        let t = line.trim();
        let at = offset + (line.len() - line.trim_start().len());
        offset += line.len() + 1;
        if t.is_empty() {
            continue;
        }
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                position: at,
                expected: vec!["'[' ... ']'".into()],
            })?;
        let comp = inner
            .split_whitespace()
            .map(|w| {
                w.parse::<usize>().map_err(|_| Error::Parse {
                    position: at,
                    expected: vec!["element index".into()],
                })
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(comp);
    }
    Ok(out)
}

/// Independent validation of a claimed partition of `ambient` (a subset of
/// `g`'s elements, the whole group when `None`). Uses only the Cayley table.
pub fn check_partition(g: &Group, ambient: Option<&[usize]>, components: &[Vec<usize>]) -> Result<()> {
    let n = g.order();
    let fail = |msg: String| Err(Error::StructureViolation(format!("invalid partition: {msg}")));
    let ambient_set = match ambient {
        Some(a) => ElementSet::from_indices(n, a.iter().copied()),
        None => ElementSet::full(n),
    };
    if components.len() < 2 {
        return fail(format!("{} component(s), need at least 2", components.len()));
    }
    let mut covered = vec![0u32; n];
    for (i, comp) in components.iter().enumerate() {
        if comp.iter().any(|&x| x >= n) {
            return fail(format!("component {i} has an index out of range"));
        }
        let set = ElementSet::from_indices(n, comp.iter().copied());
        if set.len() != comp.len() {
            return fail(format!("component {i} repeats an element"));
        }
        if !set.contains(0) {
            return fail(format!("component {i} lacks the identity"));
        }
        if !set.is_subset(&ambient_set) {
            return fail(format!("component {i} leaves the ambient group"));
        }
        if set.len() <= 1 || set.len() >= ambient_set.len() {
            return fail(format!(
                "component {i} has order {}, not proper and non-trivial",
                set.len()
            ));
        }
        for &a in comp {
            for &b in comp {
                if !set.contains(g.mul(a, b)) {
                    return fail(format!("component {i} is not closed: {a}*{b}"));
                }
            }
        }
        for &x in comp {
            covered[x] += 1;
        }
    }
    for x in ambient_set.iter().skip(1) {
        match covered[x] {
            1 => {}
            0 => return fail(format!("element {x} is not covered")),
            k => return fail(format!("element {x} lies in {k} components")),
        }
    }
    Ok(())
}
