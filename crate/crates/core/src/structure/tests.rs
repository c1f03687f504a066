use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::bitset::ElementSet;
use crate::group::*;

fn perm_group(degree: usize, cycles: &[&str]) -> Group {
    let gens: Vec<_> = cycles.iter().map(|c| parse_cycles(c, degree).unwrap()).collect();
    Group::from_permutation_generators(degree, &gens).unwrap()
}

fn s3() -> Group {
    perm_group(3, &["(0 1 2)", "(0 1)"])
}

fn s4() -> Group {
    perm_group(4, &["(0 1 2 3)", "(0 1)"])
}

fn a4() -> Group {
    perm_group(4, &["(0 1 2)", "(1 2 3)"])
}

fn q8() -> Group {
    generalized_quaternion(8).unwrap()
}

fn c(n: u64) -> Group {
    cyclic(n).unwrap()
}

fn dp(a: &Group, b: &Group) -> Group {
    direct_product(a, b).unwrap()
}

/// Every subset containing the identity that is closed under multiplication.
fn naive_subgroups(g: &Group) -> Vec<ElementSet> {
    let n = g.order();
    assert!(n <= 12);
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let set = ElementSet::from_indices(
            n,
            std::iter::once(0).chain((1..n).filter(|&i| mask >> (i - 1) & 1 == 1)),
        );
        let closed = set.iter().all(|a| set.iter().all(|b| set.contains(g.mul(a, b))));
        if closed {
            out.push(set);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[test]
fn lattice_counts() {
    let l = all_subgroups(&q8()).unwrap();
    assert_eq!(l.len(), 6);
    let orders: Vec<usize> = l.subgroups().iter().map(|s| s.order()).collect();
    assert_eq!(orders, vec![1, 2, 4, 4, 4, 8]);
    assert_eq!(all_subgroups(&elementary_abelian(2, 2).unwrap()).unwrap().len(), 5);
    assert_eq!(all_subgroups(&s4()).unwrap().len(), 30);
}

#[test]
fn lattice_matches_power_set_filter() {
    for g in [
        q8(),
        c(12),
        dihedral(6).unwrap(),
        a4(),
        elementary_abelian(2, 3).unwrap(),
        s3(),
        dihedral(5).unwrap(),
    ] {
        let l = all_subgroups(&g).unwrap();
        let got: Vec<ElementSet> = l.subgroups().iter().map(|s| s.members().clone()).collect();
        assert_eq!(got, naive_subgroups(&g), "group of order {}", g.order());
    }
}

#[test]
fn lattice_is_independent_of_seed_order() {
    let g = s4();
    let base = all_subgroups(&g).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..2 {
        let mut order: Vec<usize> = (0..g.order()).collect();
        order.shuffle(&mut rng);
        let l = SubgroupLattice::build_with_seed_order(&g, &Limits::default(), Some(&order)).unwrap();
        assert_eq!(l.subgroups(), base.subgroups());
        for i in 0..l.len() {
            assert_eq!(l.is_maximal(i), base.is_maximal(i));
        }
    }
}

#[test]
fn lattice_flags_and_caps() {
    let g = s4();
    let l = all_subgroups(&g).unwrap();
    assert_eq!(l.normal_indices().count(), 4); // 1, V4, A4, S4
                                               // maximal: A4, three D8, four S3
    let max_orders: Vec<usize> = l.maximal_indices().map(|i| l.get(i).order()).collect();
    assert_eq!(max_orders.len(), 8);
    for i in 0..l.len() {
        assert_eq!(g.order() % l.get(i).order(), 0);
        for j in 0..l.len() {
            // closed under intersection
            let meet = l.get(i).members().intersection(l.get(j).members());
            assert!(l.index_of(&meet).is_some());
        }
    }
    let tight = Limits {
        max_subgroups: 10,
        ..Limits::default()
    };
    assert!(matches!(
        SubgroupLattice::build(&g, &tight),
        Err(crate::Error::EnumerationTooLarge { cap: 10 })
    ));
    let small = Limits {
        max_lattice_order: 20,
        ..Limits::default()
    };
    assert!(matches!(
        SubgroupLattice::build(&g, &small),
        Err(crate::Error::EnumerationTooLarge { cap: 20 })
    ));
}

#[test]
fn sylow_in_s4_is_dihedral() {
    let g = s4();
    let p = g.sylow_subgroup(2).unwrap();
    let (p_group, _) = g.subgroup_as_group(&p);
    assert!(is_isomorphic(&p_group, &dihedral(4).unwrap()).unwrap().is_some());
    // brute force over the lattice: count order-8 subgroups
    let l = all_subgroups(&g).unwrap();
    let count = l.subgroups().iter().filter(|s| s.order() == 8).count();
    assert_eq!(count, 3);
    assert_eq!(g.sylow_count(2).unwrap(), 3);
    let a = a4();
    let l = all_subgroups(&a).unwrap();
    assert_eq!(l.subgroups().iter().filter(|s| s.order() == 3).count(), 4);
    assert_eq!(a.sylow_count(3).unwrap(), 4);
}

#[test]
fn hughes_examples() {
    for n in 3..=5u32 {
        let m = 1u64 << (n - 1);
        let d = dihedral(m).unwrap();
        let h = hughes_subgroup(&d, 2);
        assert_eq!(h.order() as u64, m);
        let (hg, _) = d.subgroup_as_group(&h);
        assert!(hg.is_cyclic());
        assert!(d.is_normal(&h));
    }
    assert!(hughes_subgroup(&q8(), 2).is_whole());
    assert!(hughes_subgroup(&elementary_abelian(3, 2).unwrap(), 3).is_trivial());
}

#[test]
fn hughes_thompson_examples() {
    let ht = is_hughes_thompson(&s3()).unwrap().unwrap();
    assert_eq!(ht.p, 2);
    assert_eq!(ht.hughes.order(), 3);
    assert!(is_hughes_thompson(&dp(&q8(), &c(3))).unwrap().is_none());
    let ht = is_hughes_thompson(&dihedral(6).unwrap()).unwrap().unwrap();
    assert_eq!(ht.p, 2);
    assert_eq!(ht.hughes.order(), 6);
    assert!(ht
        .hughes
        .members()
        .iter()
        .any(|x| dihedral(6).unwrap().element_order(x) == 6));
    // p-groups are never of Hughes-Thompson type
    assert!(is_hughes_thompson(&dihedral(4).unwrap()).unwrap().is_none());
}

fn frob(g: &Group) -> Option<FrobeniusStructure> {
    let l = all_subgroups(g).unwrap();
    is_frobenius(g, &l).unwrap()
}

#[test]
fn frobenius_examples() {
    let f = frob(&s3()).unwrap();
    assert_eq!((f.kernel.order(), f.complement.order(), f.is_minimal), (3, 2, true));
    let f = frob(&a4()).unwrap();
    assert_eq!((f.kernel.order(), f.complement.order(), f.is_minimal), (4, 3, true));
    assert!(frob(&c(6)).is_none());
    assert!(frob(&q8()).is_none());
    // D10 is Frobenius and minimal; D(15) is Frobenius but contains D(3), D(5)
    assert!(frob(&dihedral(5).unwrap()).unwrap().is_minimal);
    let f = frob(&dihedral(15).unwrap()).unwrap();
    assert_eq!(f.kernel.order(), 15);
    assert!(!f.is_minimal);
    assert!(frob(&s4()).is_none());
}

/// `{e} ∪ (G \ ⋃ conjugates of H)`
fn kernel_by_complement(g: &Group, h: &SubgroupSet) -> ElementSet {
    let mut covered = ElementSet::new(g.order());
    for x in 0..g.order() {
        for y in h.members().iter() {
            covered.insert(g.conj(y, x));
        }
    }
    let mut k = ElementSet::full(g.order());
    k.difference_with(&covered);
    k.insert(0);
    k
}

#[test]
fn frobenius_kernel_cross_check() {
    let c7 = c(7);
    let c3 = c(3);
    let act: Vec<Vec<usize>> = (0..3u32)
        .map(|k| (0..7).map(|x| c7.pow(x, 2usize.pow(k))).collect())
        .collect();
    let f21 = semidirect_product(&c7, &c3, &act).unwrap();
    for g in [s3(), a4(), dihedral(5).unwrap(), dihedral(15).unwrap(), f21] {
        let f = frob(&g).unwrap();
        let k = kernel_by_complement(&g, &f.complement);
        assert_eq!(&k, f.kernel.members());
        assert!(g.subgroup_from_set(k).is_ok());
    }
}

#[test]
fn quasi_frobenius_examples() {
    let lim = Limits::default();
    let g = dp(&c(2), &a4());
    let q = is_quasi_frobenius(&g, &lim).unwrap().unwrap();
    assert_eq!(q.center.order(), 2);
    assert_eq!(q.quotient.order(), 12);
    assert!(q.quotient_frobenius.is_minimal);
    let g = dp(&c(3), &s3());
    let q = is_quasi_frobenius(&g, &lim).unwrap().unwrap();
    assert_eq!(q.center.order(), 3);
    assert!(q.quotient_frobenius.is_minimal);
    assert!(is_quasi_frobenius(&a4(), &lim).unwrap().is_none());
    assert!(is_quasi_frobenius(&c(6), &lim).unwrap().is_none());
}

fn check_iso_map(a: &Group, b: &Group, map: &[usize]) {
    let mut hit = vec![false; b.order()];
    for x in 0..a.order() {
        assert!(!std::mem::replace(&mut hit[map[x]], true));
        for y in 0..a.order() {
            assert_eq!(map[a.mul(x, y)], b.mul(map[x], map[y]));
        }
    }
}

#[test]
fn isomorphism_examples() {
    let c3 = c(3);
    let inv: Vec<Vec<usize>> = vec![(0..3).collect(), (0..3).map(|x| c3.inv(x)).collect()];
    let sd = semidirect_product(&c3, &c(2), &inv).unwrap();
    let m = is_isomorphic(&sd, &s3()).unwrap().unwrap();
    check_iso_map(&sd, &s3(), &m);
    assert!(is_isomorphic(&q8(), &dihedral(4).unwrap()).unwrap().is_none());

    // S4 as A4 ⋊ C2 with C2 acting by conjugation with a transposition
    let degree = 4;
    let gens = [
        parse_cycles("(0 1 2)", degree).unwrap(),
        parse_cycles("(1 2 3)", degree).unwrap(),
    ];
    let (a4g, a4_perms) = perm_group_with_elements(degree, &gens);
    let t = parse_cycles("(0 1)", degree).unwrap();
    let conj: Vec<usize> = a4_perms
        .iter()
        .map(|p| {
            let img = t.inverse().then(p).then(&t);
            a4_perms.iter().position(|q| *q == img).unwrap()
        })
        .collect();
    let act = vec![(0..12).collect::<Vec<_>>(), conj];
    let s4b = semidirect_product(&a4g, &c(2), &act).unwrap();
    let m = is_isomorphic(&s4(), &s4b).unwrap().unwrap();
    check_iso_map(&s4(), &s4b, &m);
    assert!(matches!(
        is_isomorphic_capped(&s4(), &s4b, 20),
        Err(crate::Error::TooLarge { .. })
    ));
}

/// BFS closure mirroring the group's labeling, returning the permutations too.
fn perm_group_with_elements(degree: usize, gens: &[Permutation]) -> (Group, Vec<Permutation>) {
    let g = Group::from_permutation_generators(degree, gens).unwrap();
    let mut elems = vec![Permutation::identity(degree)];
    let mut i = 0;
    while i < elems.len() {
        for s in gens {
            let x = elems[i].then(s);
            if !elems.contains(&x) {
                elems.push(x);
            }
        }
        i += 1;
    }
    // sanity: labels agree with the table
    for a in 0..elems.len() {
        for b in 0..elems.len() {
            assert_eq!(elems[a].then(&elems[b]), elems[g.mul(a, b)]);
        }
    }
    (g, elems)
}

#[test]
fn isomorphism_is_an_equivalence_on_samples() {
    let groups = [
        dihedral(6).unwrap(),
        dp(&c(2), &s3()),
        dp(&c(3), &elementary_abelian(2, 2).unwrap()),
        dp(&c(6), &c(2)),
        a4(),
    ];
    for a in &groups {
        assert!(is_isomorphic(a, a).unwrap().is_some());
    }
    for a in &groups {
        for b in &groups {
            let ab = is_isomorphic(a, b).unwrap().is_some();
            assert_eq!(ab, is_isomorphic(b, a).unwrap().is_some());
            for cc in &groups {
                if ab && is_isomorphic(b, cc).unwrap().is_some() {
                    assert!(is_isomorphic(a, cc).unwrap().is_some());
                }
            }
        }
    }
    assert!(is_isomorphic(&groups[0], &groups[1]).unwrap().is_some());
    assert!(is_isomorphic(&groups[2], &groups[3]).unwrap().is_some());
}

#[test]
fn cyclic_maximal_classification() {
    use CyclicMaximalKind::*;
    let kind = |g: &Group| classify_cyclic_maximal_p_group(g).unwrap().kind;
    let q = classify_cyclic_maximal_p_group(&q8()).unwrap();
    assert_eq!((q.kind, q.n), (Quaternion, 3));
    assert_eq!(kind(&dp(&c(3), &c(9))), CpTimesCyclic);
    assert_eq!(kind(&elementary_abelian(2, 3).unwrap()), NotApplicable);
    assert_eq!(kind(&c(16)), Cyclic);
    assert_eq!(kind(&dihedral(8).unwrap()), Dihedral);
    assert_eq!(kind(&dihedral(4).unwrap()), Dihedral);
    assert_eq!(kind(&semidihedral(16).unwrap()), Semidihedral);
    assert_eq!(kind(&modular_group(4, 2).unwrap()), Modular);
    assert_eq!(kind(&modular_group(3, 3).unwrap()), Modular);
    assert_eq!(kind(&elementary_abelian(3, 2).unwrap()), CpTimesCyclic);
    assert!(matches!(
        classify_cyclic_maximal_p_group(&s3()),
        Err(crate::Error::NotPGroup)
    ));
}

#[test]
fn normal_subgroups_and_kernel_without_lattice() {
    let c7 = c(7);
    let act: Vec<Vec<usize>> = (0..3u32)
        .map(|k| (0..7).map(|x| c7.pow(x, 2usize.pow(k))).collect())
        .collect();
    let f21 = semidirect_product(&c7, &c(3), &act).unwrap();
    let groups = [
        s3(),
        s4(),
        a4(),
        q8(),
        c(12),
        dihedral(5).unwrap(),
        dihedral(6).unwrap(),
        dihedral(15).unwrap(),
        dp(&c(2), &a4()),
        dp(&c(3), &s3()),
        f21,
        perm_group(5, &["(0 1 2 3 4)", "(1 2 4 3)"]),
    ];
    for g in groups {
        let l = all_subgroups(&g).unwrap();
        let from_lattice: Vec<&ElementSet> = l.normal_indices().map(|i| l.get(i).members()).collect();
        let direct = normal_subgroups(&g);
        let direct: Vec<&ElementSet> = direct.iter().map(|s| s.members()).collect();
        assert_eq!(direct, from_lattice);
        let by_lattice = is_frobenius(&g, &l).unwrap().map(|f| f.kernel.into_members());
        let by_centralizers = frobenius_kernel(&g).map(|k| k.into_members());
        assert_eq!(by_centralizers, by_lattice, "order {}", g.order());
    }
}
