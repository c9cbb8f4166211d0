use bicayley::graph::named;
use bicayley::symmetry::{are_isomorphic, automorphism_group};
use bicayley::voltage::{base_circuits, fig1, spanning_tree, VoltageAssignment};
use bicayley::{AbelianGroup, Graph};
use proptest::prelude::*;

fn bases() -> Vec<Graph> {
    vec![named::complete(4), named::cube(), named::complete_bipartite(3, 3), named::petersen(), fig1::base()]
}

fn assignment_strategy() -> impl Strategy<Value = VoltageAssignment> {
    let groups = prop_oneof![(2usize..=7).prop_map(|n| vec![n]), Just(vec![2, 2]), Just(vec![2, 4]), Just(vec![3, 3])];
    (0..bases().len(), groups, prop::collection::vec(0usize..64, 16)).prop_map(|(i, orders, picks)| {
        let base = bases().swap_remove(i);
        let k = AbelianGroup::new(&orders).unwrap();
        let tree = spanning_tree(&base).unwrap();
        let voltages: Vec<_> = base_circuits(&base, &tree)
            .unwrap()
            .iter()
            .zip(&picks)
            .map(|(c, &p)| (c.cotree.tail, c.cotree.head, k.element_at(p % k.size())))
            .collect();
        VoltageAssignment::new(base, k, &tree, &voltages).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn derived_graph_sizes(v in assignment_strategy()) {
        let d = v.derive();
        let m = v.group().size();
        prop_assert_eq!(d.n(), v.base().n() * m);
        prop_assert_eq!(d.edge_count(), v.base().edge_count() * m);
    }

    #[test]
    fn right_action_is_semiregular(v in assignment_strategy()) {
        let d = v.derive();
        let kr = v.k_right_group();
        for g in kr.generators() {
            prop_assert!(d.is_automorphism(&g.images()));
        }
        prop_assert!(kr.is_semiregular());
        prop_assert_eq!(kr.orbits().len(), v.base().n());
    }

    #[test]
    fn fibre_quotient_is_the_base(v in assignment_strategy()) {
        let d = v.derive();
        let fibres = v.k_right_group().orbits();
        prop_assert!(are_isomorphic(&d.contract(&fibres), v.base()).unwrap());
    }

    #[test]
    fn circuit_voltage_is_rotation_invariant(v in assignment_strategy(), shift in 0usize..16) {
        for c in v.base_circuits() {
            let mut rotated = c.vertices.clone();
            rotated.rotate_left(shift % c.vertices.len());
            prop_assert_eq!(v.closed_walk_voltage(&rotated).unwrap(), v.closed_walk_voltage(&c.vertices).unwrap());
        }
    }

    #[test]
    fn lifts_project_back(v in assignment_strategy()) {
        let aut = automorphism_group(v.base()).unwrap();
        let m = v.group().size();
        for sigma in aut.generators() {
            // voltages that do not generate K are refused
            let Ok(lift) = v.lifts(sigma) else { continue };
            if let Some(lift) = lift {
                prop_assert!(v.derive().is_automorphism(&lift.permutation.images()));
                prop_assert_eq!(&v.projection(&lift.permutation).unwrap(), sigma);
                for w in 0..v.base().n() {
                    for x in 0..m {
                        prop_assert_eq!(lift.permutation.apply(w * m + x) / m, sigma.apply(w));
                    }
                }
            }
        }
    }
}

#[test]
fn fig1_cover_over_z3() {
    let v = fig1::assignment(3).unwrap();
    assert_eq!(v.base_circuits().len(), 5);
    let gp = bicayley::bicayley::generalized_petersen(12, 5).unwrap();
    assert!(are_isomorphic(&v.derive(), gp.graph()).unwrap());
    assert!(v.lifts(&fig1::alpha()).unwrap().is_some());
    for n in [5, 7] {
        let v = fig1::assignment(n).unwrap();
        assert!(v.lifts(&fig1::alpha()).unwrap().is_none());
        assert!(!are_isomorphic(&v.derive(), gp.graph()).unwrap());
    }
}
