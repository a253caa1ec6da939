//! Results checked against independent brute-force computations and known
//! closed forms.

use std::collections::{BTreeMap, BTreeSet};

use prelie::algebra::PreLieCoalgebra;
use prelie::linear::{filtration_degree, FiltrationDegree};
use prelie::prelie::prelie_product;
use prelie::rigidity::{heap_coefficients, primitives_basis};
use prelie::tree::{enumerate_heap_ordered, enumerate_labeled, enumerate_trees};
use prelie::{Element, FreePreLie, Label, LabeledTree, Permutation, Rational, RootedTree};

// rooted trees with n unlabeled vertices
const ROOTED_TREES: [usize; 8] = [1, 1, 2, 4, 9, 20, 48, 115];

fn labels(names: &[&str]) -> Vec<Label> {
    names.iter().map(|n| Label::new(n).unwrap()).collect()
}

/// Every parent array with `parent[v] < v` (0-based, root 0).
fn heap_parent_arrays(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![usize::MAX]];
    for v in 1..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..v).map(move |q| {
                    let mut p = p.clone();
                    p.push(q);
                    p
                })
            })
            .collect();
    }
    out
}

/// AHU encoding: `(` + sorted child encodings + `)`, prefixed by the color.
fn ahu(parent: &[usize], colors: &[u8], v: usize) -> String {
    let mut kids: Vec<String> =
        (0..parent.len()).filter(|&c| c != v && parent[c] == v).map(|c| ahu(parent, colors, c)).collect();
    kids.sort();
    format!("{}({})", colors[v], kids.concat())
}

fn to_rooted(parent: &[usize], colors: &[u8], names: &[Label]) -> RootedTree {
    let parents: Vec<usize> = parent.iter().map(|&p| if p == usize::MAX { 0 } else { p + 1 }).collect();
    let vertex_labels: Vec<Label> = colors.iter().map(|&c| names[c as usize].clone()).collect();
    LabeledTree::from_parents(parents).unwrap().to_rooted(&vertex_labels)
}

#[test]
fn rooted_tree_counts() {
    let a = labels(&["a"]);
    for n in 1..=8 {
        let brute: BTreeSet<String> = heap_parent_arrays(n).iter().map(|p| ahu(p, &vec![0; n], 0)).collect();
        assert_eq!(brute.len(), ROOTED_TREES[n - 1]);
        assert_eq!(enumerate_trees(&a, n).unwrap().len(), ROOTED_TREES[n - 1]);
    }
}

#[test]
fn canonical_form_agrees_with_ahu_on_two_colors() {
    let ab = labels(&["a", "b"]);
    for n in 1..=5 {
        let mut by_ahu: BTreeMap<String, RootedTree> = BTreeMap::new();
        for p in heap_parent_arrays(n) {
            for mask in 0..(1u32 << n) {
                let colors: Vec<u8> = (0..n).map(|i| ((mask >> i) & 1) as u8).collect();
                let key = ahu(&p, &colors, 0);
                let tree = to_rooted(&p, &colors, &ab);
                // same AHU code <=> same canonical tree
                match by_ahu.get(&key) {
                    Some(t) => assert_eq!(t, &tree),
                    None => {
                        by_ahu.insert(key, tree);
                    }
                }
            }
        }
        let distinct: BTreeSet<&RootedTree> = by_ahu.values().collect();
        assert_eq!(distinct.len(), by_ahu.len());
        let enumerated: BTreeSet<RootedTree> = enumerate_trees(&ab, n).unwrap().into_iter().collect();
        assert_eq!(enumerated, distinct.into_iter().cloned().collect());
    }
}

fn isomorphic(x: &LabeledTree, y: &LabeledTree) -> bool {
    Permutation::all(x.size()).iter().any(|s| &x.act(s).unwrap() == y)
}

#[test]
fn canonical_form_decides_isomorphism() {
    let names = labels(&["a"]);
    for n in 1..=4 {
        let trees = enumerate_labeled(n).unwrap();
        let same = vec![names[0].clone(); n];
        for x in &trees {
            for y in &trees {
                assert_eq!(x.to_rooted(&same) == y.to_rooted(&same), isomorphic(x, y), "{x} vs {y}");
            }
        }
    }
}

/// Every map `{1..n} → {0..n}` that is a rooted tree.
fn brute_labeled(n: usize) -> BTreeSet<LabeledTree> {
    let mut out = BTreeSet::new();
    let total = (n + 1).pow(n as u32);
    for code in 0..total {
        let mut c = code;
        let parent: Vec<usize> = (0..n)
            .map(|_| {
                let p = c % (n + 1);
                c /= n + 1;
                p
            })
            .collect();
        if parent.iter().filter(|&&p| p == 0).count() != 1 {
            continue;
        }
        let reaches_root = (1..=n).all(|start| {
            let mut v = start;
            for _ in 0..=n {
                if parent[v - 1] == 0 {
                    return true;
                }
                v = parent[v - 1];
            }
            false
        });
        if reaches_root {
            out.insert(LabeledTree::from_parents(parent).unwrap());
        }
    }
    out
}

#[test]
fn labeled_trees_by_brute_force() {
    for n in 1..=6 {
        let brute = brute_labeled(n);
        assert_eq!(brute.len(), n.pow(n as u32 - 1));
        let enumerated: BTreeSet<LabeledTree> = enumerate_labeled(n).unwrap().into_iter().collect();
        assert_eq!(enumerated, brute);
        let heap: BTreeSet<LabeledTree> = brute.into_iter().filter(|t| (1..=n).all(|v| t.parent(v).is_none_or(|p| p < v))).collect();
        let factorial: usize = (1..n).product();
        assert_eq!(heap.len(), factorial);
        let enumerated: BTreeSet<LabeledTree> = enumerate_heap_ordered(n).unwrap().into_iter().map(|h| h.into_labeled()).collect();
        assert_eq!(enumerated, heap);
    }
}

#[test]
fn heap_counts_up_to_seven() {
    for (k, expected) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 24), (6, 120), (7, 720)] {
        assert_eq!(enumerate_heap_ordered(k).unwrap().len(), expected);
    }
}

#[test]
fn grafting_on_distinct_labels() {
    // grafting on a tree with distinct labels gives |S| distinct trees,
    // built here directly on parent arrays
    let names = labels(&["a", "b", "c", "d", "e", "f", "g"]);
    for n in 1..=4 {
        for s in enumerate_labeled(n).unwrap() {
            let t = RootedTree::leaf(names[n].clone());
            let product = prelie_product(&Element::basis(s.to_rooted(&names)), &Element::basis(t));
            let mut expected = Element::zero();
            for v in 1..=n {
                let mut parent = s.parents().to_vec();
                parent.push(v);
                let grafted = LabeledTree::from_parents(parent).unwrap().to_rooted(&names);
                expected.add_term(grafted, Rational::from_integer(1.into()));
            }
            assert_eq!(product.len(), n);
            assert_eq!(product, expected);
        }
    }
}

#[test]
fn heap_coefficients_by_hand() {
    let c = |k: usize, parents: &[usize]| {
        let u = LabeledTree::from_parents(parents.to_vec()).unwrap().try_into().unwrap();
        heap_coefficients(k).unwrap().coeff(&u)
    };
    let r = |n: i64| Rational::from_integer(n.into());
    // A_3 = x1∘(x2∘x3) + (x1∘x2)∘x3
    assert_eq!(c(3, &[0, 1, 1]), r(1));
    assert_eq!(c(3, &[0, 1, 2]), r(2));
    // A_4 = x1∘A_3(x2,x3,x4) + 2 (x1∘x2)∘(x3∘x4) + A_3(x1,x2,x3)∘x4
    for (p, v) in [
        ([0, 1, 1, 1], 1),
        ([0, 1, 1, 2], 1),
        ([0, 1, 1, 3], 3),
        ([0, 1, 2, 1], 2),
        ([0, 1, 2, 2], 3),
        ([0, 1, 2, 3], 6),
    ] {
        assert_eq!(c(4, &p), r(v), "{p:?}");
    }
}

#[test]
fn primitives_of_free_algebras_are_the_generators() {
    for names in [&["a"][..], &["a", "b"][..]] {
        let alg = FreePreLie::on(names).unwrap();
        assert_eq!(primitives_basis(&alg, 1).len(), names.len());
        for d in 2..=5 {
            assert!(primitives_basis(&alg, d).is_empty(), "degree {d}");
        }
    }
}

#[test]
fn filtration_degree_of_trees_is_their_degree() {
    let alg = FreePreLie::on(&["a", "b"]).unwrap();
    for d in 1..=5 {
        for t in alg.basis_of_degree(d) {
            let fd = filtration_degree(&Element::basis(t), |b| alg.coproduct_basis(b)).unwrap();
            assert_eq!(fd, FiltrationDegree::Finite(d));
        }
    }
}
