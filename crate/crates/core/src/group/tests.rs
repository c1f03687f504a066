use super::*;
use crate::error::NotAGroupReason;

fn perm_group(degree: usize, cycles: &[&str]) -> Group {
    let gens: Vec<_> = cycles.iter().map(|c| parse_cycles(c, degree).unwrap()).collect();
    Group::from_permutation_generators(degree, &gens).unwrap()
}

fn a4() -> Group {
    perm_group(4, &["(0 1 2)", "(1 2 3)"])
}

fn brute_center_order(g: &Group) -> usize {
    (0..g.order())
        .filter(|&x| (0..g.order()).all(|y| g.mul(x, y) == g.mul(y, x)))
        .count()
}

fn count_orders(g: &Group, k: usize) -> usize {
    g.element_orders().iter().filter(|&&o| o == k).count()
}

#[test]
fn trivial_and_c2_tables() {
    let g = Group::from_cayley_table(&[vec![0]]).unwrap();
    assert_eq!(g.order(), 1);
    assert!(g.is_cyclic());
    let c2 = Group::from_cayley_table(&[vec![0, 1], vec![1, 0]]).unwrap();
    assert_eq!(c2.order(), 2);
    assert_eq!(c2.element_order(1), 2);
}

#[test]
fn non_associative_latin_square_is_rejected() {
    let table = vec![
        vec![0, 1, 2, 3, 4, 5],
        vec![1, 0, 3, 2, 5, 4],
        vec![2, 3, 4, 5, 0, 1],
        vec![3, 2, 5, 4, 1, 0],
        vec![4, 5, 0, 1, 3, 2],
        vec![5, 4, 1, 0, 2, 3],
    ];
    // independent exhaustive check that the square really is non-associative
    let broken = (0..6).any(|a| (0..6).any(|b| (0..6).any(|c| table[table[a][b]][c] != table[a][table[b][c]])));
    assert!(broken);
    match Group::from_cayley_table(&table) {
        Err(Error::NotAGroup { reason, .. }) => assert_eq!(reason, NotAGroupReason::NotAssociative),
        other => panic!("expected NotAGroup, got {other:?}"),
    }
}

#[test]
fn latin_and_identity_failures() {
    let not_latin = vec![vec![0, 1], vec![0, 1]];
    assert!(matches!(
        Group::from_cayley_table(&not_latin),
        Err(Error::NotAGroup {
            reason: NotAGroupReason::NotLatinSquare,
            ..
        })
    ));
    // Latin square without identity
    let no_id = vec![vec![1, 0], vec![0, 1]];
    let r = Group::from_cayley_table(&no_id);
    assert!(r.is_ok(), "this square has identity 1 and must be relabeled");
    let no_id3 = vec![vec![1, 2, 0], vec![2, 0, 1], vec![0, 1, 2]];
    assert!(Group::from_cayley_table(&no_id3).is_ok());
    let none = vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]];
    assert!(matches!(
        Group::from_cayley_table(&none),
        Err(Error::NotAGroup {
            reason: NotAGroupReason::NoIdentity,
            ..
        })
    ));
}

#[test]
fn identity_is_relabeled_to_zero() {
    // C2 with identity at index 1
    let g = Group::from_cayley_table(&[vec![1, 0], vec![0, 1]]).unwrap();
    assert_eq!(g.mul(0, 1), 1);
    assert_eq!(g.meta().relabeling.as_deref(), Some(&[1, 0][..]));
}

#[test]
fn permutation_closures() {
    assert_eq!(perm_group(3, &["(0 1 2)", "(0 1)"]).order(), 6);
    assert_eq!(perm_group(5, &["(0 1 2 3 4)", "(0 1 2)"]).order(), 60);
    assert_eq!(perm_group(4, &["(0 1 2 3)", "(0 1)"]).order(), 24);
    let gens = vec![
        parse_cycles("(0 1 2 3 4 5 6 7)", 8).unwrap(),
        parse_cycles("(0 1)", 8).unwrap(),
    ];
    assert!(matches!(
        Permutation::generate_group(8, &gens, 1000),
        Err(Error::ClosureTooLarge { cap: 1000 })
    ));
}

#[test]
fn builder_element_orders() {
    let q8 = generalized_quaternion(8).unwrap();
    assert_eq!(q8.order(), 8);
    assert_eq!(count_orders(&q8, 2), 1);
    let m = modular_group(3, 5).unwrap();
    assert_eq!(m.order(), 125);
    assert!(!m.is_abelian());
    assert_eq!(m.exponent(), 25);
    let d8 = dihedral(4).unwrap();
    assert_eq!(count_orders(&d8, 4), 2);
    assert_eq!(count_orders(&d8, 2), 5);
    let sd16 = semidihedral(16).unwrap();
    assert_eq!(sd16.order_histogram(), BTreeMap::from([(1, 1), (2, 5), (4, 6), (8, 4)]));
    let q16 = generalized_quaternion(16).unwrap();
    assert_eq!(q16.order_histogram(), BTreeMap::from([(1, 1), (2, 1), (4, 10), (8, 4)]));
    let m4 = modular_group(4, 2).unwrap();
    assert_eq!(m4.order_histogram(), BTreeMap::from([(1, 1), (2, 3), (4, 4), (8, 8)]));
    assert!(matches!(modular_group(2, 3), Err(Error::BadParameters(_))));
    assert!(matches!(elementary_abelian(4, 2), Err(Error::NotPrime(4))));
    assert!(matches!(generalized_quaternion(12), Err(Error::BadParameters(_))));
}

#[test]
fn products() {
    let g = direct_product(&cyclic(3).unwrap(), &cyclic(9).unwrap()).unwrap();
    assert_eq!(g.order(), 27);
    assert!(g.is_abelian());
    assert_eq!(g.exponent(), 9);
    let c2 = cyclic(2).unwrap();
    let t = cyclic(1).unwrap();
    assert_eq!(direct_product(&c2, &t).unwrap(), c2);
    let c2a4 = direct_product(&c2, &a4()).unwrap();
    assert_eq!(c2a4.order(), 24);
    assert_eq!(brute_center_order(&c2a4), 2);
    assert_eq!(c2a4.center().order(), 2);
}

fn power_action(n: &Group, h_order: usize, gen_image: impl Fn(usize) -> usize) -> Vec<Vec<usize>> {
    // action of h = g^k is the k-th iterate of the generator's map
    let phi: Vec<usize> = (0..n.order()).map(&gen_image).collect();
    let mut out = vec![(0..n.order()).collect::<Vec<_>>()];
    for k in 1..h_order {
        let prev = &out[k - 1];
        out.push(prev.iter().map(|&x| phi[x]).collect());
    }
    out
}

#[test]
fn semidirect_examples() {
    let c3 = cyclic(3).unwrap();
    let c2 = cyclic(2).unwrap();
    let s3 = semidirect_product(&c3, &c2, &power_action(&c3, 2, |x| c3.inv(x))).unwrap();
    assert_eq!(s3.order(), 6);
    assert!(!s3.is_abelian());
    assert_eq!(s3.meta().action_trivial, Some(false));

    let c7 = cyclic(7).unwrap();
    let c4 = cyclic(4).unwrap();
    let g28 = semidirect_product(&c7, &c4, &power_action(&c7, 4, |x| c7.pow(x, 6))).unwrap();
    assert_eq!(g28.order(), 28);
    assert_eq!(g28.center().order(), 2);

    let c5 = cyclic(5).unwrap();
    let f20 = semidirect_product(&c5, &c4, &power_action(&c5, 4, |x| c5.pow(x, 2))).unwrap();
    assert_eq!(f20.order(), 20);
    assert_eq!(f20.center().order(), 1);

    // x -> x^2 on C7 has order 3, not dividing 4
    let bad = power_action(&c7, 4, |x| c7.pow(x, 2));
    assert!(matches!(
        semidirect_product(&c7, &c4, &bad),
        Err(Error::NotAHomomorphism { .. })
    ));
    let mut not_auto = power_action(&c3, 2, |x| c3.inv(x));
    not_auto[1] = vec![0, 1, 1];
    assert!(matches!(
        semidirect_product(&c3, &c2, &not_auto),
        Err(Error::NotAnAutomorphism { h: 1, .. })
    ));
}

#[test]
fn trivial_action_matches_direct_product() {
    let a = cyclic(4).unwrap();
    let b = dihedral(3).unwrap();
    let trivial: Vec<Vec<usize>> = (0..b.order()).map(|_| (0..a.order()).collect()).collect();
    let sd = semidirect_product(&a, &b, &trivial).unwrap();
    assert_eq!(sd.meta().action_trivial, Some(true));
    assert_eq!(sd, direct_product(&a, &b).unwrap());
}

#[test]
fn structural_queries() {
    let q8 = generalized_quaternion(8).unwrap();
    assert_eq!(q8.center().order(), 2);
    let a5 = perm_group(5, &["(0 1 2 3 4)", "(0 1 2)"]);
    assert!(!a5.is_solvable());
    assert_eq!(a5.derived_subgroup().order(), 60);
    assert_eq!(elementary_abelian(3, 2).unwrap().exponent(), 3);
    let s4 = perm_group(4, &["(0 1 2 3)", "(0 1)"]);
    assert!(s4.is_solvable());
    assert!(!s4.is_nilpotent());
    assert_eq!(s4.derived_subgroup().order(), 12);
    assert!(q8.is_nilpotent());
    assert_eq!(q8.is_p_group(), Some(2));
    assert_eq!(cyclic(12).unwrap().is_p_group(), None);
    assert!(cyclic(12).unwrap().is_cyclic());
    assert!(!elementary_abelian(2, 2).unwrap().is_cyclic());
}

#[test]
fn sylow_subgroups() {
    let s4 = perm_group(4, &["(0 1 2 3)", "(0 1)"]);
    let p = s4.sylow_subgroup(2).unwrap();
    assert_eq!(p.order(), 8);
    assert_eq!(s4.sylow_count(2).unwrap(), 3);
    assert_eq!(a4().sylow_count(3).unwrap(), 4);
    let c12 = cyclic(12).unwrap();
    assert_eq!(c12.sylow_subgroup(3).unwrap().order(), 3);
    assert!(matches!(c12.sylow_subgroup(5), Err(Error::PrimeDoesNotDivide { .. })));
}

#[test]
fn quotients() {
    let q8 = generalized_quaternion(8).unwrap();
    let (q, proj) = q8.quotient_group(&q8.center()).unwrap();
    assert_eq!(q.order(), 4);
    assert_eq!(q.exponent(), 2);
    for a in 0..8 {
        for b in 0..8 {
            assert_eq!(proj[q8.mul(a, b)], q.mul(proj[a], proj[b]));
        }
    }
    let s4 = perm_group(4, &["(0 1 2 3)", "(0 1)"]);
    let (q, _) = s4.quotient_group(&s4.derived_subgroup()).unwrap();
    assert_eq!(q.order(), 2);
    let not_normal = s4.cyclic_subgroup(s4.generators()[1]);
    if !s4.is_normal(&not_normal) {
        assert!(matches!(s4.quotient_group(&not_normal), Err(Error::NotNormal { .. })));
    }
    let sub = s4.generate(&[1]);
    assert!(matches!(s4.quotient_group(&sub), Err(Error::NotNormal { .. })));
}

#[test]
fn large_tables_are_sampled() {
    let g = cyclic(300).unwrap();
    assert_eq!(
        g.associativity_check(),
        AssociativityCheck::Sampled {
            triples: 10 * 300 * 300
        }
    );
    assert_eq!(
        cyclic(256).unwrap().associativity_check(),
        AssociativityCheck::Exhaustive
    );
}

#[test]
fn subgroup_as_group_keeps_identity() {
    let s4 = perm_group(4, &["(0 1 2 3)", "(0 1)"]);
    let d = s4.derived_subgroup();
    let (a4, emb) = s4.subgroup_as_group(&d);
    assert_eq!(a4.order(), 12);
    assert_eq!(emb[0], 0);
    assert_eq!(a4.center().order(), 1);
}

mod props {
    use super::*;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;

    fn small_groups() -> Vec<Group> {
        vec![
            cyclic(12).unwrap(),
            dihedral(6).unwrap(),
            generalized_quaternion(16).unwrap(),
            a4(),
            direct_product(&cyclic(2).unwrap(), &dihedral(3).unwrap()).unwrap(),
            modular_group(4, 2).unwrap(),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn lagrange_and_relabeling(idx in 0usize..6, seed in any::<u64>()) {
            let g = &small_groups()[idx];
            for x in 0..g.order() {
                prop_assert_eq!(g.order() % g.element_order(x), 0);
            }
            let mut rng = <ChaCha8Rng as SeedableRng>::seed_from_u64(seed);
            let mut perm: Vec<usize> = (1..g.order()).collect();
            perm.shuffle(&mut rng);
            perm.insert(0, 0);
            let h = g.relabel(&perm).unwrap();
            prop_assert_eq!(h.is_abelian(), g.is_abelian());
            prop_assert_eq!(h.is_solvable(), g.is_solvable());
            prop_assert_eq!(h.is_nilpotent(), g.is_nilpotent());
            prop_assert_eq!(h.center().order(), g.center().order());
            prop_assert_eq!(h.derived_subgroup().order(), g.derived_subgroup().order());
            prop_assert_eq!(h.order_histogram(), g.order_histogram());
        }

        #[test]
        fn product_abelian_iff_factors(i in 0usize..6, j in 0usize..6) {
            let gs = small_groups();
            let (a, b) = (&gs[i], &gs[j]);
            prop_assume!(a.order() * b.order() <= 400);
            let p = direct_product(a, b).unwrap();
            prop_assert_eq!(p.is_abelian(), a.is_abelian() && b.is_abelian());
        }
    }

    #[test]
    fn quotient_projection_is_surjective_homomorphism() {
        for g in small_groups() {
            let z = g.center();
            let d = g.derived_subgroup();
            for n in [z, d] {
                let (q, proj) = g.quotient_group(&n).unwrap();
                assert_eq!(q.order(), g.order() / n.order());
                let mut hit = vec![false; q.order()];
                for a in 0..g.order() {
                    hit[proj[a]] = true;
                    for b in 0..g.order() {
                        assert_eq!(proj[g.mul(a, b)], q.mul(proj[a], proj[b]));
                    }
                }
                assert!(hit.into_iter().all(|h| h));
            }
        }
    }
}
