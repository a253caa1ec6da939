use proptest::prelude::*;

use prelie::algebra::FreePreLie;
use prelie::checks::iterated_dlaw_defect;
use prelie::coalgebra::{coproduct, delta_k, nap_coalgebra_defect};
use prelie::operads::{act_lin, Composition};
use prelie::prelie::{associator, prelie_product};
use prelie::rigidity::idempotent_e;
use prelie::{parse_tree, Element, Label, LabeledTree, Permutation, Rational, RootedTree};

/// A tree on `a, b, c` with at most `max` vertices, from a heap-ordered
/// parent array.
fn tree(max: usize) -> impl Strategy<Value = RootedTree> {
    prop::collection::vec((0..3u8, any::<prop::sample::Index>()), 1..=max).prop_map(|spec| {
        let parents: Vec<usize> =
            spec.iter().enumerate().map(|(v, (_, i))| if v == 0 { 0 } else { i.index(v) + 1 }).collect();
        let names: Vec<Label> =
            spec.iter().map(|(c, _)| Label::new(["a", "b", "c"][*c as usize]).unwrap()).collect();
        LabeledTree::from_parents(parents).unwrap().to_rooted(&names)
    })
}

fn element(max: usize) -> impl Strategy<Value = Element> {
    prop::collection::vec((tree(max), -4i64..=4, 1i64..=3), 0..4).prop_map(|terms| {
        Element::from_terms(terms.into_iter().map(|(t, n, d)| (t, Rational::new(n.into(), d.into()))))
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

fn labeled(n: usize) -> impl Strategy<Value = LabeledTree> {
    (permutation(n), prop::collection::vec(any::<prop::sample::Index>(), n)).prop_map(move |(sigma, picks)| {
        // a heap-ordered shape, relabeled by σ
        let parents: Vec<usize> =
            picks.iter().enumerate().map(|(v, i)| if v == 0 { 0 } else { i.index(v) + 1 }).collect();
        LabeledTree::from_parents(parents).unwrap().act(&sigma).unwrap()
    })
}

proptest! {
    #[test]
    fn tree_render_parse_roundtrip(t in tree(8)) {
        prop_assert_eq!(parse_tree(t.render()).unwrap(), t);
    }

    #[test]
    fn element_display_parse_roundtrip(x in element(5)) {
        prop_assert_eq!(Element::parse(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn labeled_render_parse_roundtrip(t in (1usize..7).prop_flat_map(labeled)) {
        prop_assert_eq!(LabeledTree::parse(&t.render()).unwrap(), t);
    }

    #[test]
    fn vector_space_axioms(x in element(4), y in element(4), z in element(4), c in -5i64..5, d in 1i64..5) {
        let c = Rational::new(c.into(), d.into());
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!((&x + &y).scale(&c), &x.scale(&c) + &y.scale(&c));
        prop_assert_eq!(x.scale(&Rational::from_integer(1.into())), x.clone());
    }

    #[test]
    fn product_is_bilinear(x in element(3), y in element(3), z in element(3)) {
        prop_assert_eq!(prelie_product(&(&x + &y), &z), prelie_product(&x, &z) + prelie_product(&y, &z));
        prop_assert_eq!(prelie_product(&z, &(&x + &y)), prelie_product(&z, &x) + prelie_product(&z, &y));
    }

    #[test]
    fn prelie_relation(x in element(3), y in element(3), z in element(3)) {
        prop_assert_eq!(associator(&x, &y, &z), associator(&x, &z, &y));
    }

    #[test]
    fn distributive_law(x in element(4), y in element(3), k in 1usize..4) {
        prop_assert!(iterated_dlaw_defect(&FreePreLie::default(), &x, &y, k).is_zero());
    }

    #[test]
    fn coproduct_iterates_are_symmetric(x in element(6), k in 1usize..5) {
        prop_assert!(delta_k(&x, k).is_invariant_1k());
        prop_assert!(nap_coalgebra_defect(&FreePreLie::default(), &x).is_zero());
    }

    #[test]
    fn e_projects_onto_primitives(x in element(5)) {
        let ex = idempotent_e(&x);
        prop_assert!(coproduct(&ex).is_zero());
        prop_assert_eq!(idempotent_e(&ex), ex);
    }

    #[test]
    fn action_is_a_right_action(
        (t, s, u) in (1usize..6).prop_flat_map(|n| (labeled(n), permutation(n), permutation(n))),
    ) {
        // act(σ∘τ, T) = act(τ, act(σ, T))
        prop_assert_eq!(t.act(&s.compose(&u).unwrap()).unwrap(), t.act(&s).unwrap().act(&u).unwrap());
    }

    #[test]
    fn compositions_are_equivariant(
        (t, sigma) in (1usize..5).prop_flat_map(|n| (labeled(n), permutation(n))),
        (s, tau) in (1usize..4).prop_flat_map(|m| (labeled(m), permutation(m))),
        i in any::<prop::sample::Index>(),
    ) {
        let i = i.index(t.size()) + 1;
        for comp in [Composition::Nap, Composition::PreLie] {
            let lhs = comp.compose(&t.act(&sigma).unwrap(), i, &s.act(&tau).unwrap()).unwrap();
            let rhs = act_lin(&comp.compose(&t, sigma.apply(i), &s).unwrap(), &sigma.block_compose(i, &tau).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
