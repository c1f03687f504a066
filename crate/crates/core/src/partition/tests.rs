use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::group::*;
use crate::structure::all_subgroups;

fn perm_group(degree: usize, cycles: &[&str]) -> Group {
    let gens: Vec<_> = cycles.iter().map(|c| parse_cycles(c, degree).unwrap()).collect();
    Group::from_permutation_generators(degree, &gens).unwrap()
}

fn c(n: u64) -> Group {
    cyclic(n).unwrap()
}

fn dp(a: &Group, b: &Group) -> Group {
    direct_product(a, b).unwrap()
}

fn a5() -> Group {
    perm_group(5, &["(0 1 2 3 4)", "(0 1 2)"])
}

fn s4() -> Group {
    perm_group(4, &["(0 1 2 3)", "(0 1)"])
}

fn checked(g: &Group) -> Option<PartitionCover> {
    let w = find_partition(g).unwrap();
    if let Some(w) = &w {
        check_partition(g, None, w.components()).unwrap();
    }
    w
}

#[test]
fn small_examples() {
    let v4 = elementary_abelian(2, 2).unwrap();
    assert_eq!(checked(&v4).unwrap().component_orders(), vec![2, 2, 2]);
    assert!(checked(&generalized_quaternion(8).unwrap()).is_none());
    let ea9 = checked(&elementary_abelian(3, 2).unwrap()).unwrap();
    assert_eq!(ea9.component_orders(), vec![3; 4]);
}

#[test]
fn dihedral_8_rotation_and_reflections() {
    let d8 = dihedral(4).unwrap();
    let w = checked(&d8).unwrap();
    assert_eq!(w.component_orders(), vec![2, 2, 2, 2, 4]);
    let rotation = &w.components()[4];
    assert!(rotation.iter().any(|&x| d8.element_order(x) == 4));
    for refl in &w.components()[..4] {
        // reflections do not commute with the order-4 rotation
        let r = rotation.iter().copied().find(|&x| d8.element_order(x) == 4).unwrap();
        assert_ne!(d8.mul(refl[1], r), d8.mul(r, refl[1]));
    }
}

#[test]
fn a5_partition_has_21_components() {
    let g = a5();
    let w = checked(&g).unwrap();
    let mut sizes = w.component_orders();
    sizes.dedup();
    assert_eq!(sizes, vec![3, 4, 5]);
    let count = |k: usize| w.component_orders().iter().filter(|&&o| o == k).count();
    assert_eq!((count(4), count(3), count(5)), (5, 10, 6));
    assert_eq!(w.len(), 21);
}

#[test]
fn elementary_abelian_rank_two_has_p_plus_one_lines() {
    for p in [2u64, 3, 5, 7] {
        let w = checked(&elementary_abelian(p, 2).unwrap()).unwrap();
        assert_eq!(w.component_orders(), vec![p as usize; p as usize + 1]);
    }
}

#[test]
fn cyclic_groups_never_admit() {
    for n in 1..=100u64 {
        let v = admits_partition_structural(&c(n)).unwrap();
        assert_eq!(v.admits, Some(false), "C{n}");
    }
    for n in 1..=40u64 {
        assert!(checked(&c(n)).is_none(), "C{n}");
    }
}

fn oracle_sample() -> Vec<Group> {
    let mut out = vec![
        perm_group(3, &["(0 1 2)", "(0 1)"]),
        perm_group(4, &["(0 1 2)", "(1 2 3)"]),
        s4(),
        generalized_quaternion(8).unwrap(),
        generalized_quaternion(16).unwrap(),
        semidihedral(16).unwrap(),
        modular_group(4, 2).unwrap(),
        elementary_abelian(2, 3).unwrap(),
        elementary_abelian(2, 4).unwrap(),
        dp(&c(2), &c(4)),
        dp(&c(2), &c(8)),
        dp(&c(4), &c(4)),
        dp(&c(3), &c(6)),
        dp(&c(2), &generalized_quaternion(8).unwrap()),
        dp(&c(2), &perm_group(4, &["(0 1 2)", "(1 2 3)"])),
        dp(&c(3), &perm_group(3, &["(0 1 2)", "(0 1)"])),
        metacyclic(3, 8, 0, 2).unwrap(),
        metacyclic(5, 4, 0, 2).unwrap(),
        metacyclic(3, 4, 0, 2).unwrap(),
    ];
    for m in 2..=12 {
        out.push(dihedral(m).unwrap());
    }
    for n in 2..=24 {
        out.push(c(n));
    }
    out
}

#[test]
fn dancing_links_agrees_with_naive_oracle() {
    for g in oracle_sample() {
        let l = all_subgroups(&g).unwrap();
        let fast = find_partition_with(&g, &l);
        let slow = find_partition_naive(&g, &l);
        assert_eq!(fast.is_some(), slow.is_some(), "order {}", g.order());
        if let Some(w) = slow {
            check_partition(&g, None, w.components()).unwrap();
        }
    }
}

#[test]
fn structural_agrees_with_brute_force() {
    for g in oracle_sample() {
        let v = cross_validate(&g, &Limits::default()).unwrap();
        assert_eq!(v.method, PartitionMethod::Both);
    }
    let frob20 = metacyclic(5, 4, 0, 2).unwrap();
    let v = cross_validate(&frob20, &Limits::default()).unwrap();
    assert_eq!(v.admits, Some(true));
    assert!(v.structural_labels.contains(&StructuralLabel::Frobenius));
    let c14 = dp(&c(7), &c(2));
    let v = cross_validate(&c14, &Limits::default()).unwrap();
    assert_eq!((v.admits, v.witness), (Some(false), None));
}

#[test]
fn structural_labels() {
    let labels = |g: &Group| admits_partition_structural(g).unwrap().structural_labels;
    assert_eq!(
        labels(&dihedral(4).unwrap()),
        vec![StructuralLabel::PGroupWithProperHughes]
    );
    assert!(labels(&s4()).contains(&StructuralLabel::PglSmall));
    assert_eq!(labels(&a5()), vec![StructuralLabel::PslSmall]);
    let v = admits_partition_structural(&dp(&c(3), &c(9))).unwrap();
    assert_eq!((v.admits, v.structural_labels.len()), (Some(false), 0));
    // S3 is Frobenius with a prime-order complement, hence also Hughes-Thompson
    let s3 = labels(&perm_group(3, &["(0 1 2)", "(0 1)"]));
    assert_eq!(s3, vec![StructuralLabel::Frobenius, StructuralLabel::HughesThompson]);
    // S5 is outside the recognizers
    let s5 = admits_partition_structural(&perm_group(5, &["(0 1 2 3 4)", "(0 1)"])).unwrap();
    assert_eq!(s5.admits, None);
    assert_eq!(s5.structural_labels, vec![StructuralLabel::OutOfRecognizerScope]);
}

#[test]
fn subgroup_search_matches_induced_table() {
    for g in [
        s4(),
        dp(&c(2), &dihedral(4).unwrap()),
        dp(&c(3), &perm_group(3, &["(0 1 2)", "(0 1)"])),
    ] {
        let l = all_subgroups(&g).unwrap();
        for k in 0..l.whole_index() {
            let (sub, embed) = g.subgroup_as_group(l.get(k));
            let inside = find_partition_in(&g, &l, k);
            let induced = checked(&sub);
            assert_eq!(inside.is_some(), induced.is_some());
            if let Some(w) = inside {
                check_partition(&g, Some(w.ambient()), w.components()).unwrap();
                assert_eq!(w.ambient().len(), embed.len());
            }
        }
    }
}

fn shuffled(g: &Group, seed: u64) -> Group {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (1..g.order()).collect();
    perm.shuffle(&mut rng);
    perm.insert(0, 0);
    g.relabel(&perm).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn verdict_is_relabeling_invariant(which in 0usize..6, seed in any::<u64>()) {
        let g = [
            s4(),
            generalized_quaternion(8).unwrap(),
            dihedral(6).unwrap(),
            dp(&c(3), &c(9)),
            elementary_abelian(2, 3).unwrap(),
            metacyclic(5, 4, 0, 2).unwrap(),
        ][which].clone();
        let h = shuffled(&g, seed);
        prop_assert_eq!(checked(&g).is_some(), checked(&h).is_some());
        let sg = admits_partition_structural(&g).unwrap();
        let sh = admits_partition_structural(&h).unwrap();
        prop_assert_eq!(sg.admits, sh.admits);
        prop_assert_eq!(sg.structural_labels, sh.structural_labels);
    }
}
