//! Permutation-group invariants against brute-force closure.

mod common;

use std::collections::{HashSet, VecDeque};

use common::{connected_graph, permutation};
use proptest::prelude::*;
use subdiv_ldt::autsolve::{automorphism_group, Coloring};
use subdiv_ldt::graph::{lift_to_subdivision, subdivision};
use subdiv_ldt::perm::{PermGroup, Permutation};

/// Every element, by closure under right multiplication.
fn closure(n: usize, gens: &[Permutation]) -> HashSet<Vec<usize>> {
    let id = Permutation::identity(n);
    let mut seen = HashSet::from([id.to_vec()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.to_vec()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn generators(max_n: usize) -> impl Strategy<Value = (usize, Vec<Permutation>)> {
    (1..=max_n).prop_flat_map(|n| (Just(n), prop::collection::vec(permutation(n), 1..=3)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn order_matches_closure((n, gens) in generators(7)) {
        let g = PermGroup::new(n, gens.clone()).unwrap();
        prop_assert_eq!(g.order_u64() as usize, closure(n, &gens).len());
    }

    #[test]
    fn orbit_stabilizer((n, gens) in generators(12), x in 0usize..12) {
        let x = x % n;
        let g = PermGroup::new(n, gens).unwrap();
        let stab = g.stabilizer(x);
        prop_assert!(stab.generators().iter().all(|p| p.apply(x) == x));
        prop_assert!(g.contains_group(&stab).unwrap());
        prop_assert_eq!(g.order(), stab.order() * g.orbit(x).len());
    }

    #[test]
    fn order_ignores_generator_order_and_conjugation(
        (n, gens, shuffle, c) in generators(12).prop_flat_map(|(n, gens)| {
            let k = gens.len();
            (Just(n), Just(gens), Just((0..k).collect::<Vec<_>>()).prop_shuffle(), permutation(n))
        })
    ) {
        let g = PermGroup::new(n, gens.clone()).unwrap();
        let shuffled = PermGroup::new(n, shuffle.iter().map(|&i| gens[i].clone()).collect()).unwrap();
        let conj = PermGroup::new(n, gens.iter().map(|p| p.conjugate_by(&c)).collect()).unwrap();
        prop_assert!(g.same_elements(&shuffled).unwrap());
        prop_assert_eq!(conj.order(), g.order());
    }

    #[test]
    fn enumerated_elements_are_distinct_members((n, gens) in generators(7)) {
        let g = PermGroup::new(n, gens.clone()).unwrap();
        let elems = g.enumerate_elements(10_000).unwrap();
        let set: HashSet<Vec<usize>> = elems.iter().map(Permutation::to_vec).collect();
        prop_assert_eq!(set.len(), elems.len());
        prop_assert_eq!(set, closure(n, &gens));
        for e in &elems {
            let (member, residue) = g.sift(e).unwrap();
            prop_assert!(member && residue.is_identity());
        }
    }

    #[test]
    fn membership_matches_closure(gens in prop::collection::vec(permutation(7), 1..=2), p in permutation(7)) {
        let n = 7;
        let g = PermGroup::new(n, gens.clone()).unwrap();
        prop_assert_eq!(g.contains(&p).unwrap(), closure(n, &gens).contains(&p.to_vec()));
    }

    #[test]
    fn derived_subgroup_is_normal((n, gens) in generators(9)) {
        let g = PermGroup::new(n, gens).unwrap();
        let d = g.derived_subgroup();
        prop_assert!(g.contains_group(&d).unwrap());
        for x in g.generators() {
            for y in d.generators() {
                prop_assert!(d.contains(&y.conjugate_by(x)).unwrap());
            }
        }
        for x in g.generators() {
            for y in g.generators() {
                prop_assert!(d.contains(&x.commutator(y)).unwrap());
            }
        }
    }

    #[test]
    fn lifting_is_a_homomorphism(sigma in connected_graph(20)) {
        let aut = automorphism_group(&sigma, &Coloring::unit(sigma.n())).unwrap();
        let (s, map) = subdivision(&sigma);
        let gens = aut.generators();
        for a in gens {
            let la = lift_to_subdivision(a, &sigma, &map).unwrap();
            prop_assert!(s.is_automorphism(&la.to_vec()));
            for b in gens {
                let lab = lift_to_subdivision(&a.then(b), &sigma, &map).unwrap();
                let lb = lift_to_subdivision(b, &sigma, &map).unwrap();
                prop_assert_eq!(lab, la.then(&lb));
            }
        }
    }
}
