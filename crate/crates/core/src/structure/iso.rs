//! Isomorphism testing for small groups by generator-image backtracking.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::group::{Group, Limits};

/// Cheap invariants two isomorphic groups must share.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantProfile {
    pub order: usize,
    pub abelian: bool,
    pub order_histogram: BTreeMap<usize, usize>,
    pub center_order: usize,
    pub derived_order: usize,
    pub exponent: usize,
}

impl InvariantProfile {
    pub fn of(g: &Group) -> Self {
        InvariantProfile {
            order: g.order(),
            abelian: g.is_abelian(),
            order_histogram: g.order_histogram(),
            center_order: g.center().order(),
            derived_order: g.derived_subgroup().order(),
            exponent: g.exponent(),
        }
    }
}

pub fn is_isomorphic(a: &Group, b: &Group) -> Result<Option<Vec<usize>>> {
    is_isomorphic_capped(a, b, Limits::default().max_isomorphism_order)
}

/// Returns `map` with `map[x]` the image in `b` of `x` in `a`.
pub fn is_isomorphic_capped(a: &Group, b: &Group, cap: usize) -> Result<Option<Vec<usize>>> {
    for g in [a, b] {
        if g.order() > cap {
            return Err(Error::TooLarge { order: g.order(), cap });
        }
    }
    if a.order() != b.order() || InvariantProfile::of(a) != InvariantProfile::of(b) {
        return Ok(None);
    }
    let gens = a.generators().to_vec();
    let ca = centralizer_orders(a);
    let cb = centralizer_orders(b);
    let mut search = Search {
        a,
        b,
        gens: &gens,
        images: Vec::with_capacity(gens.len()),
        ca: &ca,
        cb: &cb,
    };
    Ok(search.run())
}

fn centralizer_orders(g: &Group) -> Vec<usize> {
    (0..g.order())
        .map(|x| (0..g.order()).filter(|&y| g.mul(x, y) == g.mul(y, x)).count())
        .collect()
}

struct Search<'a> {
    a: &'a Group,
    b: &'a Group,
    gens: &'a [usize],
    images: Vec<usize>,
    ca: &'a [usize],
    cb: &'a [usize],
}

impl Search<'_> {
    fn run(&mut self) -> Option<Vec<usize>> {
        let depth = self.images.len();
        let map = self.extend()?;
        if depth == self.gens.len() {
            return (map.iter().filter(|&&m| m != usize::MAX).count() == self.a.order()).then_some(map);
        }
        let target = self.gens[depth];
        let order = self.a.element_order(target);
        let c = self.ca[target];
        let mut used = vec![false; self.b.order()];
        for &m in &map {
            if m != usize::MAX {
                used[m] = true;
            }
        }
        for (y, &taken) in used.iter().enumerate() {
            if taken || self.b.element_order(y) != order || self.cb[y] != c {
                continue;
            }
            self.images.push(y);
            if let Some(full) = self.run() {
                return Some(full);
            }
            self.images.pop();
        }
        None
    }

    /// Extends the chosen generator images to the subgroup they generate,
    /// failing on any inconsistency or collision.
    fn extend(&self) -> Option<Vec<usize>> {
        let (a, b) = (self.a, self.b);
        let k = self.images.len();
        let mut map = vec![usize::MAX; a.order()];
        let mut hit = vec![false; b.order()];
        map[0] = 0;
        hit[0] = true;
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            for j in 0..k {
                let y = a.mul(x, self.gens[j]);
                let fy = b.mul(map[x], self.images[j]);
                if map[y] == usize::MAX {
                    if std::mem::replace(&mut hit[fy], true) {
                        return None;
                    }
                    map[y] = fy;
                    queue.push(y);
                } else if map[y] != fy {
                    return None;
                }
            }
            i += 1;
        }
        Some(map)
    }
}
