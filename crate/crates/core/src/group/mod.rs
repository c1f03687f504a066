//! Finite groups as validated Cayley tables with the identity at index 0.

mod builders;
mod perm;
mod subgroup;
pub mod text;

use std::collections::BTreeMap;

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, NotAGroupReason, Result};
use crate::numbers::{log_exact, PrimeFactorization};

pub use builders::{
    cyclic, dihedral, direct_product, direct_product_capped, elementary_abelian, generalized_quaternion, metacyclic,
    modular_group, semidihedral, semidirect_product, semidirect_product_capped,
};
pub use perm::{parse_cycles, Permutation};
pub use subgroup::SubgroupSet;

/// Hard ceiling imposed by the compact table storage.
pub const MAX_REPRESENTABLE_ORDER: usize = u16::MAX as usize + 1;

/// Orders up to this bound get an exhaustive associativity check.
pub const EXHAUSTIVE_ASSOCIATIVITY_MAX: usize = 256;

/// Size guards shared by constructors and analyses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest group any constructor may produce.
    pub max_group_order: usize,
    /// Largest group whose subgroup lattice (and exact-cover search) is attempted.
    pub max_lattice_order: usize,
    /// Largest number of subgroups a lattice may hold.
    pub max_subgroups: usize,
    /// Largest order handed to the isomorphism tester.
    pub max_isomorphism_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_group_order: 10_000,
            max_lattice_order: 400,
            max_subgroups: 20_000,
            max_isomorphism_order: 512,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "mode")]
pub enum AssociativityCheck {
    Exhaustive,
    Sampled { triples: u64 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupMeta {
    pub name: Option<String>,
    /// `relabeling[old] = new`, present when the input identity was not index 0.
    pub relabeling: Option<Vec<usize>>,
    /// Set by semidirect products: whether the supplied action was trivial.
    pub action_trivial: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    table: Vec<u16>,
    inverses: Vec<u16>,
    element_orders: Vec<usize>,
    generators: Vec<usize>,
    associativity: AssociativityCheck,
    meta: GroupMeta,
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for Group {}

impl Group {
    /// Validates a square table given as rows.
    pub fn from_cayley_table(rows: &[Vec<usize>]) -> Result<Group> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::bad("empty Cayley table"));
        }
        if n > MAX_REPRESENTABLE_ORDER {
            return Err(Error::ClosureTooLarge {
                cap: MAX_REPRESENTABLE_ORDER,
            });
        }
        if let Some(i) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::bad(format!(
                "row {i} has {} entries, expected {n}",
                rows[i].len()
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::NotAGroup {
                        reason: NotAGroupReason::NotLatinSquare,
                        witness: format!("entry ({a}, {b}) = {v} is out of range"),
                    });
                }
                flat.push(v as u16);
            }
        }
        Self::from_flat(n, flat)
    }

    /// Validates a row-major table; relabels so the identity is index 0.
    pub(crate) fn from_flat(n: usize, mut flat: Vec<u16>) -> Result<Group> {
        check_latin(n, &flat)?;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| flat[e * n + x] as usize == x && flat[x * n + e] as usize == x))
            .ok_or_else(|| Error::NotAGroup {
                reason: NotAGroupReason::NoIdentity,
                witness: "no element acts as a two-sided identity".into(),
            })?;
        let mut relabeling = None;
        if identity != 0 {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(0, identity);
            flat = permute_flat(n, &flat, &perm);
            relabeling = Some(perm);
        }
        let associativity = check_associativity(n, &flat)?;
        let mut g = Self::assemble(n, flat, associativity);
        g.meta.relabeling = relabeling;
        Ok(g)
    }

    /// Builds the derived data for an already validated table.
    fn assemble(n: usize, table: Vec<u16>, associativity: AssociativityCheck) -> Group {
        let mut inverses = vec![0u16; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverses[a] = b as u16;
                    break;
                }
            }
        }
        let mut element_orders = vec![0usize; n];
        for x in 0..n {
            let mut k = 1;
            let mut y = x;
            while y != 0 {
                y = table[y * n + x] as usize;
                k += 1;
            }
            element_orders[x] = k;
        }
        let mut g = Group {
            order: n,
            table,
            inverses,
            element_orders,
            generators: Vec::new(),
            associativity,
            meta: GroupMeta::default(),
        };
        g.generators = g.greedy_generators(&ElementSet::full(n));
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// `b^-1 a b`.
    #[inline]
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(b), a), b)
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        let k = k % self.element_orders[a];
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, x: usize) -> usize {
        self.element_orders[x]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn associativity_check(&self) -> AssociativityCheck {
        self.associativity
    }

    pub fn meta(&self) -> &GroupMeta {
        &self.meta
    }

    pub fn name(&self) -> Option<&str> {
        self.meta.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.meta.name = Some(name.into());
        self
    }

    pub(crate) fn meta_mut(&mut self) -> &mut GroupMeta {
        &mut self.meta
    }

    pub fn factorization(&self) -> PrimeFactorization {
        PrimeFactorization::of(self.order as u64)
    }

    /// Applies `perm[old] = new` to the element labels; `perm[0]` must be 0.
    pub fn relabel(&self, perm: &[usize]) -> Result<Group> {
        let n = self.order;
        if perm.len() != n || perm[0] != 0 {
            return Err(Error::bad("relabeling must be a permutation fixing 0"));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::bad("relabeling is not a permutation"));
            }
        }
        let flat = permute_flat(n, &self.table, perm);
        let mut g = Self::assemble(n, flat, self.associativity);
        g.meta.name = self.meta.name.clone();
        Ok(g)
    }

    // ---------------------------------------------------------------
    // closure

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> SubgroupSet {
        let mut sub = self.trivial_subgroup();
        for &g in gens {
            if !sub.contains(g) {
                sub = self.join_element(&sub, g);
            }
        }
        sub
    }

    /// `<H, g>`.
    pub fn join_element(&self, h: &SubgroupSet, g: usize) -> SubgroupSet {
        if h.contains(g) {
            return h.clone();
        }
        let mut gens = h.generators().to_vec();
        gens.push(g);
        let mut members = h.members().clone();
        let mut elems: Vec<usize> = members.to_vec();
        let mut i = 0;
        while i < elems.len() {
            let e = elems[i];
            for &s in &gens {
                let x = self.mul(e, s);
                if members.insert(x) {
                    elems.push(x);
                }
            }
            i += 1;
        }
        SubgroupSet::from_parts(members, gens)
    }

    /// `<H, K>`.
    pub fn join(&self, h: &SubgroupSet, k: &SubgroupSet) -> SubgroupSet {
        let mut out = h.clone();
        for &g in k.generators() {
            if !out.contains(g) {
                out = self.join_element(&out, g);
            }
        }
        out
    }

    pub fn trivial_subgroup(&self) -> SubgroupSet {
        SubgroupSet::from_parts(ElementSet::from_indices(self.order, [0]), Vec::new())
    }

    pub fn whole(&self) -> SubgroupSet {
        SubgroupSet::from_parts(ElementSet::full(self.order), self.generators.clone())
    }

    pub fn cyclic_subgroup(&self, x: usize) -> SubgroupSet {
        self.generate(&[x])
    }

    /// Checks that `set` is a subgroup and wraps it.
    pub fn subgroup_from_set(&self, set: ElementSet) -> Result<SubgroupSet> {
        if set.capacity() != self.order || !set.contains(0) {
            return Err(Error::bad("set does not contain the identity"));
        }
        for a in set.iter() {
            for b in set.iter() {
                let c = self.mul(a, b);
                if !set.contains(c) {
                    return Err(Error::bad(format!("set not closed: {a}*{b} = {c}")));
                }
            }
        }
        let gens = self.greedy_generators(&set);
        debug_assert!(self.order.is_multiple_of(set.len()));
        Ok(SubgroupSet::from_parts(set, gens))
    }

    /// Small generating set of a subgroup: repeatedly add the highest-order
    /// element outside the current span (ties broken by lowest index).
    pub(crate) fn greedy_generators(&self, set: &ElementSet) -> Vec<usize> {
        let mut sub = self.trivial_subgroup();
        let target = set.len();
        while sub.order() < target {
            let pick = set
                .iter()
                .filter(|&x| !sub.contains(x))
                .max_by(|&a, &b| self.element_orders[a].cmp(&self.element_orders[b]).then(b.cmp(&a)))
                .expect("set larger than span");
            sub = self.join_element(&sub, pick);
        }
        sub.generators().to_vec()
    }

    // ---------------------------------------------------------------
    // elementary structure

    pub fn exponent(&self) -> usize {
        self.element_orders.iter().fold(1, |acc, &o| acc.lcm(&o))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.element_orders.contains(&self.order)
    }

    /// `Some(p)` when the order is a positive power of the prime `p`.
    pub fn is_p_group(&self) -> Option<u64> {
        self.factorization().single_prime()
    }

    pub fn commutes_with_all(&self, x: usize, others: &[usize]) -> bool {
        others.iter().all(|&g| self.mul(x, g) == self.mul(g, x))
    }

    pub fn center(&self) -> SubgroupSet {
        self.centralizer(&self.whole())
    }

    pub fn centralizer(&self, s: &SubgroupSet) -> SubgroupSet {
        let gens = if s.generators().is_empty() && !s.is_trivial() {
            s.elements()
        } else {
            s.generators().to_vec()
        };
        let set = ElementSet::from_indices(
            self.order,
            (0..self.order).filter(|&x| self.commutes_with_all(x, &gens)),
        );
        let gens = self.greedy_generators(&set);
        SubgroupSet::from_parts(set, gens)
    }

    pub fn normalizer(&self, s: &SubgroupSet) -> SubgroupSet {
        let set = ElementSet::from_indices(
            self.order,
            (0..self.order).filter(|&x| s.generators().iter().all(|&h| s.contains(self.conj(h, x)))),
        );
        let gens = self.greedy_generators(&set);
        SubgroupSet::from_parts(set, gens)
    }

    /// Whether `h` is normal in the subgroup `within`.
    pub fn is_normal_in(&self, h: &SubgroupSet, within: &SubgroupSet) -> bool {
        within
            .generators()
            .iter()
            .all(|&g| h.generators().iter().all(|&x| h.contains(self.conj(x, g))))
    }

    pub fn is_normal(&self, h: &SubgroupSet) -> bool {
        self.is_normal_in(h, &self.whole())
    }

    /// Smallest subgroup of `within` containing `seeds` and normal in `within`.
    pub fn normal_closure_in(&self, seeds: &[usize], within: &SubgroupSet) -> SubgroupSet {
        let mut sub = self.generate(seeds);
        loop {
            let missing = within.generators().iter().find_map(|&g| {
                sub.generators()
                    .iter()
                    .map(|&x| self.conj(x, g))
                    .find(|&y| !sub.contains(y))
            });
            match missing {
                Some(y) => sub = self.join_element(&sub, y),
                None => return sub,
            }
        }
    }

    /// `[K, K]` for a subgroup `K`.
    pub fn derived_subgroup_of(&self, k: &SubgroupSet) -> SubgroupSet {
        let gens = k.generators();
        let mut comms = Vec::new();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                let c = self.commutator(a, b);
                if c != 0 {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_in(&comms, k)
    }

    pub fn derived_subgroup(&self) -> SubgroupSet {
        self.derived_subgroup_of(&self.whole())
    }

    pub fn is_solvable_subgroup(&self, k: &SubgroupSet) -> bool {
        let mut cur = k.clone();
        loop {
            if cur.is_trivial() {
                return true;
            }
            let next = self.derived_subgroup_of(&cur);
            if next.order() == cur.order() {
                return false;
            }
            cur = next;
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.is_solvable_subgroup(&self.whole())
    }

    /// Every Sylow subgroup normal.
    pub fn is_nilpotent(&self) -> bool {
        self.is_nilpotent_subgroup(&self.whole())
    }

    pub fn is_nilpotent_subgroup(&self, k: &SubgroupSet) -> bool {
        let f = PrimeFactorization::of(k.order() as u64);
        if f.single_prime().is_some() || k.order() == 1 {
            return true;
        }
        let all_normal = f.primes().all(|p| {
            let sylow = self.sylow_subgroup_in(k, p);
            self.is_normal_in(&sylow, k)
        });
        all_normal
    }

    /// One Sylow p-subgroup, grown inside normalizers; no lattice required.
    pub fn sylow_subgroup(&self, p: u64) -> Result<SubgroupSet> {
        if p < 2 || !(self.order as u64).is_multiple_of(p) {
            return Err(Error::PrimeDoesNotDivide { p, order: self.order });
        }
        Ok(self.sylow_subgroup_in(&self.whole(), p))
    }

    pub(crate) fn sylow_subgroup_in(&self, k: &SubgroupSet, p: u64) -> SubgroupSet {
        let target = PrimeFactorization::of(k.order() as u64).p_part(p) as usize;
        let mut sub = self.trivial_subgroup();
        while sub.order() < target {
            // A p-element normalizing `sub` but outside it always exists
            // while `sub` is not Sylow.
            let x = k
                .members()
                .iter()
                .find(|&x| {
                    !sub.contains(x)
                        && log_exact(self.element_orders[x] as u64, p).is_some()
                        && sub.generators().iter().all(|&h| sub.contains(self.conj(h, x)))
                })
                .expect("Sylow growth step");
            sub = self.join_element(&sub, x);
        }
        sub
    }

    /// Number of Sylow p-subgroups, `|G : N_G(P)|`.
    pub fn sylow_count(&self, p: u64) -> Result<usize> {
        let sylow = self.sylow_subgroup(p)?;
        let count = self.order / self.normalizer(&sylow).order();
        debug_assert_eq!(count as u64 % p, 1);
        Ok(count)
    }

    /// Histogram `order -> number of elements`.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for &o in &self.element_orders {
            *h.entry(o).or_insert(0) += 1;
        }
        h
    }

    /// The subgroup as a standalone group; returns it with `embedding[i]` =
    /// parent index of the subgroup's element `i` (ascending, so 0 stays 0).
    pub fn subgroup_as_group(&self, s: &SubgroupSet) -> (Group, Vec<usize>) {
        let elems = s.elements();
        let m = elems.len();
        let mut pos = vec![usize::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            pos[e] = i;
        }
        let mut flat = Vec::with_capacity(m * m);
        for &a in &elems {
            for &b in &elems {
                flat.push(pos[self.mul(a, b)] as u16);
            }
        }
        let assoc = if m <= EXHAUSTIVE_ASSOCIATIVITY_MAX {
            AssociativityCheck::Exhaustive
        } else {
            self.associativity
        };
        (Self::assemble(m, flat, assoc), elems)
    }

    /// `G/N` together with the projection `element -> coset index`.
    pub fn quotient_group(&self, normal: &SubgroupSet) -> Result<(Group, Vec<usize>)> {
        for &g in &self.generators {
            for &x in normal.generators() {
                let y = self.conj(x, g);
                if !normal.contains(y) {
                    return Err(Error::NotNormal {
                        witness: format!("{g}^-1 * {x} * {g} = {y} lies outside"),
                    });
                }
            }
        }
        let n = self.order;
        let mut proj = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if proj[g] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(g);
            for h in normal.members().iter() {
                proj[self.mul(g, h)] = c;
            }
        }
        let m = reps.len();
        let mut flat = Vec::with_capacity(m * m);
        for &a in &reps {
            for &b in &reps {
                flat.push(proj[self.mul(a, b)] as u16);
            }
        }
        let q = Self::assemble(m, flat, AssociativityCheck::Exhaustive);
        Ok((q, proj))
    }
}

fn permute_flat(n: usize, flat: &[u16], perm: &[usize]) -> Vec<u16> {
    let mut out = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            out[perm[a] * n + perm[b]] = perm[flat[a * n + b] as usize] as u16;
        }
    }
    out
}

fn check_latin(n: usize, flat: &[u16]) -> Result<()> {
    let mut seen = vec![usize::MAX; n];
    for a in 0..n {
        for b in 0..n {
            let v = flat[a * n + b] as usize;
            if v >= n {
                return Err(Error::NotAGroup {
                    reason: NotAGroupReason::NotLatinSquare,
                    witness: format!("entry ({a}, {b}) = {v} is out of range"),
                });
            }
            if seen[v] == a {
                return Err(Error::NotAGroup {
                    reason: NotAGroupReason::NotLatinSquare,
                    witness: format!("row {a} repeats {v}"),
                });
            }
            seen[v] = a;
        }
    }
    seen.fill(usize::MAX);
    for b in 0..n {
        for a in 0..n {
            let v = flat[a * n + b] as usize;
            if seen[v] == b {
                return Err(Error::NotAGroup {
                    reason: NotAGroupReason::NotLatinSquare,
                    witness: format!("column {b} repeats {v}"),
                });
            }
            seen[v] = b;
        }
    }
    Ok(())
}

fn check_associativity(n: usize, flat: &[u16]) -> Result<AssociativityCheck> {
    let m = |a: usize, b: usize| flat[a * n + b] as usize;
    let fail = |a, b, c| Error::NotAGroup {
        reason: NotAGroupReason::NotAssociative,
        witness: format!("({a}*{b})*{c} != {a}*({b}*{c})"),
    };
    if n <= EXHAUSTIVE_ASSOCIATIVITY_MAX {
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(fail(a, b, c));
                    }
                }
            }
        }
        Ok(AssociativityCheck::Exhaustive)
    } else {
        let triples = 10 * (n as u64) * (n as u64);
        let mut rng = ChaCha8Rng::seed_from_u64(0x05ee_d0fa_550c);
        for _ in 0..triples {
            let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            if m(m(a, b), c) != m(a, m(b, c)) {
                return Err(fail(a, b, c));
            }
        }
        Ok(AssociativityCheck::Sampled { triples })
    }
}

#[cfg(test)]
mod tests;
