//! Randomized properties of closure, group tables, and the spoke group
//! order trichotomy.

use proptest::prelude::*;

use tsg_core::group::{GroupTable, PermGroup};
use tsg_core::perm::Perm;
use tsg_core::petersen::{rho_map, sigma_map};
use tsg_core::registry::{bnk_generators, k2_class, K2Class};

fn perm_strategy(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree as u16).collect::<Vec<u16>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).expect("shuffled identity is a bijection"))
}

fn admissible_pair(max_n: usize) -> impl Strategy<Value = (usize, usize)> {
    (3..=max_n).prop_flat_map(|n| (Just(n), 1..=((n - 1) / 2).max(1)))
}

proptest! {
    /// The closure of any generating set on 5 points is a genuine
    /// subgroup of S_5: contains the identity, closed under inverse and
    /// under every pairwise product, and its order divides 120.
    #[test]
    fn closure_is_a_group(gens in proptest::collection::vec(perm_strategy(5), 1..3)) {
        let g = PermGroup::closure(&gens, 120).unwrap();
        prop_assert!(g.contains(&Perm::identity(5)));
        for p in &gens {
            prop_assert!(g.contains(p));
        }
        for a in g.elements() {
            prop_assert!(g.contains(&a.inverse()));
            for b in g.elements() {
                prop_assert!(g.contains(&a.compose(b).unwrap()));
            }
        }
        prop_assert_eq!(120 % g.order(), 0);
    }

    /// A cyclic closure has exactly the order of its generator.
    #[test]
    fn cyclic_closure_order_is_element_order(p in perm_strategy(7)) {
        let g = PermGroup::closure(std::slice::from_ref(&p), 5040).unwrap();
        prop_assert_eq!(g.order() as u32, p.order());
    }

    /// Conjugating the generators conjugates the closure elementwise.
    #[test]
    fn closure_commutes_with_relabeling(
        gens in proptest::collection::vec(perm_strategy(6), 1..3),
        relabel in perm_strategy(6),
    ) {
        let g = PermGroup::closure(&gens, 720).unwrap();
        let conj_gens: Vec<Perm> = gens.iter().map(|p| p.conjugate_by(&relabel)).collect();
        let h = PermGroup::closure(&conj_gens, 720).unwrap();
        prop_assert_eq!(g.order(), h.order());
        for p in g.elements() {
            prop_assert!(h.contains(&p.conjugate_by(&relabel)));
        }
    }

    /// Rebuilding a group from its element list reproduces it exactly.
    #[test]
    fn from_elements_round_trips(gens in proptest::collection::vec(perm_strategy(5), 1..3)) {
        let g = PermGroup::closure(&gens, 120).unwrap();
        let rebuilt = PermGroup::from_elements(g.elements().to_vec()).unwrap();
        prop_assert_eq!(g.elements(), rebuilt.elements());
        let regen = PermGroup::closure(rebuilt.generators(), 120).unwrap();
        prop_assert_eq!(g.elements(), regen.elements());
    }

    /// The dense table agrees with direct composition everywhere.
    #[test]
    fn table_matches_composition(gens in proptest::collection::vec(perm_strategy(5), 1..3)) {
        let g = PermGroup::closure(&gens, 120).unwrap();
        let t = GroupTable::from_group(&g).unwrap();
        let m = g.order() as u16;
        for a in 0..m {
            prop_assert_eq!(t.order_of(a), g.elements()[a as usize].order());
            for b in 0..m {
                let direct = g.elements()[a as usize].compose(&g.elements()[b as usize]).unwrap();
                let via = &g.elements()[t.mul(a, b) as usize];
                prop_assert_eq!(via, &direct);
            }
        }
    }

    /// The spoke-preserving group has order 2n in the generic residue
    /// class and 4n when k*k = +1 or -1 (mod n).
    #[test]
    fn spoke_group_order_follows_residue_class((n, k) in admissible_pair(30)) {
        let gens: Vec<Perm> = bnk_generators(n, k)
            .unwrap()
            .into_iter()
            .map(|a| a.perm)
            .collect();
        let b = PermGroup::closure(&gens, 4 * n + 1).unwrap();
        let expected = match k2_class(n, k) {
            K2Class::Generic => 2 * n,
            K2Class::PlusOne | K2Class::MinusOne => 4 * n,
        };
        prop_assert_eq!(b.order(), expected);
        // the dihedral part is always inside
        prop_assert!(b.contains(&rho_map(n)));
        prop_assert!(b.contains(&sigma_map(n)));
    }
}
