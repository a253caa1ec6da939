//! Products on the free pre-Lie algebra of rooted trees.
//!
//! `S ∘ T` grafts the root of `T` on every vertex of `S` and sums; grafting on
//! two vertices whose subtrees are isomorphic gives the same tree, which then
//! shows up with coefficient 2. `S · T` grafts only on the root.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::One;

use crate::algebra::{self, FreePreLie};
use crate::linear::{Basis, Element, LinComb, Rational, TensorElement};
use crate::tree::{Label, RootedTree};

/// `S ∘ T = Σ_{v ∈ Vertex(S)} S ∘_v T` on basis trees.
pub fn graft_product(s: &RootedTree, t: &RootedTree) -> Element {
    let mut out = Element::zero();
    for grafted in s.graft_everywhere(t) {
        out.add_term(grafted, Rational::one());
    }
    out
}

/// The pre-Lie product of two elements.
pub fn prelie_product(x: &Element, y: &Element) -> Element {
    algebra::product(&FreePreLie::default(), x, y)
}

/// The NAP product `B(r, T1, …, Tn) · S = B(r, T1, …, Tn, S)`.
pub fn nap_product(x: &Element, y: &Element) -> Element {
    let mut out = Element::zero();
    for (s, c) in x.iter() {
        for (t, d) in y.iter() {
            out.add_term(s.graft_root(t), c * d);
        }
    }
    out
}

pub fn bracket(x: &Element, y: &Element) -> Element {
    algebra::bracket(&FreePreLie::default(), x, y)
}

/// `(x1 ⊗ … ⊗ xn) ∘ y` by derivation over the tensor slots.
pub fn module_action(m: &TensorElement, y: &Element) -> TensorElement {
    algebra::module_action(&FreePreLie::default(), m, y)
}

/// The trick-formula right-hand side for `t = B(v, T1, …, Tn)` with `n ≥ 1`:
/// `B(v, T1..T_{n-1}) ∘ Tn − Σ_i B(v, T1, …, Ti ∘ Tn, …, T_{n-1})`,
/// where `Tn` is the root child at `last`.
pub fn trick_expansion(t: &RootedTree, last: usize) -> Element {
    let (rest, tn) = t.remove_child(last);
    let mut out = graft_product(&rest, &tn);
    for i in 0..rest.arity() {
        let grafted = graft_product(&rest.children()[i], &tn);
        for (child, c) in grafted.iter() {
            out.add_term(rest.replace_child(i, child.clone()), -c.clone());
        }
    }
    out
}

type LeafFn<'f, B> = Box<dyn Fn(&Label) -> LinComb<B> + 'f>;
type ProductFn<'f, B> = Box<dyn Fn(&LinComb<B>, &LinComb<B>) -> LinComb<B> + 'f>;

/// Evaluates rooted trees in any pre-Lie algebra, given a value for each
/// vertex label, as the pre-Lie morphism out of the free algebra.
///
/// Trees of root arity `n ≥ 1` are expanded with the trick formula, which
/// only refers to trees of smaller degree or smaller root arity.
pub struct TrickEvaluator<'f, B: Basis> {
    leaf: LeafFn<'f, B>,
    product: ProductFn<'f, B>,
    memo: RefCell<HashMap<RootedTree, LinComb<B>>>,
}

impl<'f, B: Basis> TrickEvaluator<'f, B> {
    pub fn new(
        leaf: impl Fn(&Label) -> LinComb<B> + 'f,
        product: impl Fn(&LinComb<B>, &LinComb<B>) -> LinComb<B> + 'f,
    ) -> Self {
        Self { leaf: Box::new(leaf), product: Box::new(product), memo: RefCell::default() }
    }

    pub fn eval(&self, t: &RootedTree) -> LinComb<B> {
        if let Some(hit) = self.memo.borrow().get(t) {
            return hit.clone();
        }
        let value = if t.arity() == 0 {
            (self.leaf)(t.label())
        } else {
            let (rest, last) = t.remove_child(t.arity() - 1);
            let mut out = (self.product)(&self.eval(&rest), &self.eval(&last));
            for i in 0..rest.arity() {
                for (s, c) in graft_product(&rest.children()[i], &last).iter() {
                    out.add_scaled(&-c.clone(), &self.eval(&rest.replace_child(i, s.clone())));
                }
            }
            out
        };
        self.memo.borrow_mut().insert(t.clone(), value.clone());
        value
    }

    pub fn eval_lin(&self, x: &Element) -> LinComb<B> {
        x.map_linear(|t| self.eval(t))
    }
}

/// Evaluates the associator `(x∘y)∘z − x∘(y∘z)`.
pub fn associator(x: &Element, y: &Element, z: &Element) -> Element {
    prelie_product(&prelie_product(x, y), z) - prelie_product(x, &prelie_product(y, z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{integer, Tensor};
    use crate::tree::parse_tree;

    fn e(s: &str) -> Element {
        Element::parse(s).unwrap()
    }

    fn b(s: &str) -> Element {
        Element::basis(parse_tree(s).unwrap())
    }

    #[test]
    fn prelie_examples() {
        assert_eq!(prelie_product(&b("a"), &b("b")), b("a[b]"));
        assert_eq!(prelie_product(&b("a[b]"), &b("c")), e("1 * a[b,c] + 1 * a[b[c]]"));
        assert_eq!(prelie_product(&b("a[b,b]"), &b("c")), e("1 * a[b,b,c] + 2 * a[b,b[c]]"));
    }

    #[test]
    fn nap_examples() {
        assert_eq!(nap_product(&b("a"), &b("b")), b("a[b]"));
        let abc = nap_product(&nap_product(&b("a"), &b("b")), &b("c"));
        let acb = nap_product(&nap_product(&b("a"), &b("c")), &b("b"));
        assert_eq!(abc, b("a[b,c]"));
        assert_eq!(abc, acb);
        assert_eq!(nap_product(&b("a[b]"), &b("c[d]")), b("a[b,c[d]]"));
    }

    #[test]
    fn bracket_examples() {
        assert!(bracket(&b("a"), &b("a")).is_zero());
        assert_eq!(bracket(&b("a"), &b("b")), e("1 * a[b] - 1 * b[a]"));
        let (x, y, z) = (b("a"), b("b"), b("a[b]"));
        let jacobi = bracket(&x, &bracket(&y, &z)) + bracket(&y, &bracket(&z, &x)) + bracket(&z, &bracket(&x, &y));
        assert!(jacobi.is_zero());
    }

    #[test]
    fn module_action_examples() {
        let ab = Tensor::pure(vec![parse_tree("a").unwrap(), parse_tree("b").unwrap()]);
        let acted = module_action(&ab, &b("c"));
        assert_eq!(acted, TensorElement::parse("1 * a[c] (x) b + 1 * a (x) b[c]", 2).unwrap());
        let x = e("2 * a[b] + 1 * c");
        assert_eq!(module_action(&x.as_tensor(), &b("d")).into_element().unwrap(), prelie_product(&x, &b("d")));
    }

    #[test]
    fn trick_formula_on_a_cherry() {
        let t = parse_tree("a[b,c]").unwrap();
        assert_eq!(trick_expansion(&t, 1), b("a[b,c]"));
        // a[b,b]: a[b]∘b = a[b,b] + a[b[b]], minus b∘b = b[b]
        let t = parse_tree("a[b,b]").unwrap();
        assert_eq!(trick_expansion(&t, 1), b("a[b,b]"));
    }

    #[test]
    fn trick_evaluator_is_the_identity_on_generators() {
        let eval = TrickEvaluator::new(|l: &Label| Element::basis(RootedTree::leaf(l.clone())), prelie_product);
        for s in ["a", "a[b]", "a[b,c[d]]", "a[a,a,a[a]]", "x[y[z,z],y]"] {
            assert_eq!(eval.eval(&parse_tree(s).unwrap()), b(s));
        }
    }

    #[test]
    fn prelie_relation_spot_check() {
        let (x, y, z) = (e("1 * a[a]"), e("1 * b"), e("2 * a - 1 * b[a]"));
        assert_eq!(associator(&x, &y, &z), associator(&x, &z, &y));
        let scaled = prelie_product(&x.scale(&integer(3)), &y);
        assert_eq!(scaled, prelie_product(&x, &y).scale(&integer(3)));
    }
}
