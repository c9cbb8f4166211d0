use std::collections::BTreeSet;

use bicayley::census;
use bicayley::graph::named;
use bicayley::symmetry::{
    automorphism_group, canonical_form, core_of, enumerate_semiregular, normalizer, Permutation, PermGroup,
};
use bicayley::Graph;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn census_graphs() -> Vec<Graph> {
    census::table1_instances(64)
        .into_iter()
        .chain(census::table2_instances())
        .map(|(_, b)| b.graph().clone())
        .collect()
}

/// Group closure by repeated multiplication.
fn closure(degree: usize, gens: &[Permutation]) -> BTreeSet<Vec<usize>> {
    let mut seen = BTreeSet::from([(0..degree).collect::<Vec<_>>()]);
    let mut frontier = vec![Permutation::identity(degree)];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = p.then(g);
            if seen.insert(q.images()) {
                frontier.push(q);
            }
        }
    }
    seen
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn group_strategy() -> impl Strategy<Value = PermGroup> {
    (2usize..=8).prop_flat_map(|n| {
        prop::collection::vec(perm_strategy(n), 1..=3).prop_map(move |gens| PermGroup::new(n, gens).unwrap())
    })
}

#[test]
fn certificates_survive_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in census_graphs() {
        let cert = canonical_form(&g).unwrap().certificate;
        for _ in 0..100 {
            let mut images: Vec<usize> = (0..g.n()).collect();
            images.shuffle(&mut rng);
            assert_eq!(canonical_form(&g.relabeled(&images)).unwrap().certificate, cert);
        }
    }
}

#[test]
fn subgroup_operations_on_automorphism_groups() {
    let graphs = [named::petersen(), named::cube(), census::table1_instances(18).pop().unwrap().1.graph().clone()];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in &graphs {
        let aut = automorphism_group(g).unwrap();
        let elements = aut.elements().unwrap();
        for _ in 0..4 {
            let gens: Vec<Permutation> = elements.choose_multiple(&mut rng, 2).cloned().collect();
            let sub = PermGroup::new(g.n(), gens).unwrap();
            let core = core_of(&sub, &aut).unwrap();
            assert!(core.is_subgroup_of(&sub));
            assert!(core.is_normal_in(&aut));
            let norm = normalizer(&sub, &aut).unwrap();
            assert!(sub.is_subgroup_of(&norm));
            for x in &elements {
                if sub.generators().iter().all(|s| s.then(x) == x.then(s)) {
                    assert!(norm.contains(x));
                }
            }
        }
    }
}

#[test]
fn semiregular_subgroups_have_the_requested_orbits() {
    for (_, b) in census::table1_instances(28) {
        let aut = automorphism_group(b.graph()).unwrap();
        let parts = b.parts().to_vec();
        let found = enumerate_semiregular(&aut, &parts, b.group().size()).unwrap();
        assert!(!found.is_empty());
        for x in &found {
            assert!(x.is_semiregular());
            assert!(x.semiregular_with_orbits(&parts));
            assert_eq!(x.order(), b.group().size() as u128);
        }
    }
}

proptest! {
    #[test]
    fn chain_order_matches_enumeration(group in group_strategy()) {
        let explicit = closure(group.degree(), group.generators());
        prop_assert_eq!(group.order(), explicit.len() as u128);
        let listed: BTreeSet<Vec<usize>> = group.elements().unwrap().iter().map(|p| p.images()).collect();
        prop_assert_eq!(listed, explicit);
    }

    #[test]
    fn membership_matches_enumeration(group in group_strategy(), p in perm_strategy(8)) {
        let n = group.degree();
        let images: Vec<usize> = p.images().into_iter().filter(|&x| x < n).collect();
        let q = Permutation::from_images(images).unwrap();
        let explicit = closure(n, group.generators());
        prop_assert_eq!(group.contains(&q), explicit.contains(&q.images()));
    }
}
