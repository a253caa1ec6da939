//! The NAP coproduct on rooted trees, its iterates, and cooperations built
//! from it.

use num_traits::{One, Zero};

use crate::algebra::{self, FreePreLie, PreLieCoalgebra};
use crate::error::Result;
use crate::linear::{Basis, Element, LinComb, Rational, Tensor, TensorElement};
use crate::tree::RootedTree;

/// `Δ(B(v, T1, …, Tn)) = Σ_i B(v, T1, …, T̂i, …, Tn) ⊗ Ti`.
pub fn tree_coproduct(t: &RootedTree) -> TensorElement {
    let mut out = Tensor::zero(2);
    for i in 0..t.arity() {
        let (rest, removed) = t.remove_child(i);
        out.add_term(vec![rest, removed], Rational::one());
    }
    out
}

pub fn coproduct(x: &Element) -> TensorElement {
    algebra::coproduct(&FreePreLie::default(), x)
}

/// `Δ^k(x)`, a tensor of rank `k + 1`.
pub fn delta_k(x: &Element, k: usize) -> TensorElement {
    algebra::delta_k(&FreePreLie::default(), x, k)
}

/// `δ_y`: inserts `y` after each tensor slot.
pub fn insert_y(y: &Element, x: &TensorElement) -> Result<TensorElement> {
    algebra::insert_after_each(y, x)
}

pub fn is_primitive(x: &Element) -> bool {
    coproduct(x).is_zero()
}

/// Kronecker pairing: `⟨S, T⟩ = 1` iff `S = T`, extended bilinearly.
pub fn pairing<B: Basis>(x: &LinComb<B>, y: &LinComb<B>) -> Rational {
    x.iter().fold(Rational::zero(), |acc, (b, c)| acc + c * y.coeff(b))
}

/// Pairing on tensors of equal rank, slot by slot.
pub fn tensor_pairing<B: Basis>(x: &Tensor<B>, y: &Tensor<B>) -> Rational {
    x.iter().fold(Rational::zero(), |acc, (f, c)| acc + c * y.coeff(f))
}

/// `(Id − τ23)(Δ ⊗ Id)Δ(x)`; zero in a NAP coalgebra.
pub fn nap_coalgebra_defect<A: PreLieCoalgebra>(alg: &A, x: &LinComb<A::Basis>) -> Tensor<A::Basis> {
    let dd = algebra::delta_k(alg, x, 2);
    let swapped = dd.swap_slots(1, 2);
    dd.try_sub(&swapped).expect("equal ranks")
}

/// A cooperation `C → C^{⊗(n+1)}` built from `Δ`: either the identity or
/// `(O1 ⊗ O2) Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cooperation {
    Id,
    Split(Box<Cooperation>, Box<Cooperation>),
}

impl Cooperation {
    /// Number of `Δ`s used; the output rank is one more.
    pub fn order(&self) -> usize {
        match self {
            Cooperation::Id => 0,
            Cooperation::Split(a, b) => 1 + a.order() + b.order(),
        }
    }

    /// Every cooperation using exactly `n` coproducts.
    pub fn all(n: usize) -> Vec<Cooperation> {
        if n == 0 {
            return vec![Cooperation::Id];
        }
        let mut out = Vec::new();
        for m in 0..n {
            for left in Cooperation::all(m) {
                for right in Cooperation::all(n - m - 1) {
                    out.push(Cooperation::Split(Box::new(left.clone()), Box::new(right)));
                }
            }
        }
        out
    }

    pub fn apply<A: PreLieCoalgebra>(&self, alg: &A, x: &LinComb<A::Basis>) -> Tensor<A::Basis> {
        match self {
            Cooperation::Id => x.as_tensor(),
            Cooperation::Split(left, right) => {
                let rank = self.order() + 1;
                let d = algebra::coproduct(alg, x);
                d.map_terms(rank, |f| {
                    let l = left.apply(alg, &LinComb::basis(f[0].clone()));
                    let r = right.apply(alg, &LinComb::basis(f[1].clone()));
                    l.concat(&r)
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::integer;
    use crate::tree::parse_tree;

    fn b(s: &str) -> Element {
        LinComb::basis(parse_tree(s).unwrap())
    }

    fn tensor(s: &str, rank: usize) -> TensorElement {
        TensorElement::parse(s, rank).unwrap()
    }

    #[test]
    fn coproduct_examples() {
        assert!(coproduct(&b("a")).is_zero());
        assert_eq!(coproduct(&b("a[b]")), tensor("1 * a (x) b", 2));
        assert_eq!(coproduct(&b("a[b,c]")), tensor("1 * a[c] (x) b + 1 * a[b] (x) c", 2));
        assert_eq!(coproduct(&b("a[b,b]")), tensor("2 * a[b] (x) b", 2));
    }

    #[test]
    fn delta_k_examples() {
        let x = Element::parse("2 * a[b] - 1 * c").unwrap();
        assert_eq!(delta_k(&x, 0).into_element().unwrap(), x);
        assert_eq!(delta_k(&b("a[b,c]"), 2), tensor("1 * a (x) c (x) b + 1 * a (x) b (x) c", 3));
        assert!(delta_k(&b("a[b[c]]"), 2).is_zero());
        assert_eq!(delta_k(&b("a[b[c]]"), 2).rank(), 3);
    }

    #[test]
    fn delta_bracketings_agree() {
        let alg = FreePreLie::default();
        for s in ["a[b,c[d],e]", "a[a,a,a]", "a[b[c,d]]"] {
            for k in 0..5 {
                assert_eq!(algebra::delta_k(&alg, &b(s), k), algebra::delta_k_right(&alg, &b(s), k));
            }
        }
    }

    #[test]
    fn insertion_examples() {
        assert_eq!(insert_y(&b("b"), &tensor("1 * a", 1)).unwrap(), tensor("1 * a (x) b", 2));
        assert_eq!(
            insert_y(&b("c"), &tensor("1 * a (x) b", 2)).unwrap(),
            tensor("1 * a (x) c (x) b + 1 * a (x) b (x) c", 3)
        );
        assert_eq!(
            insert_y(&b("c"), &coproduct(&b("a[b]"))).unwrap(),
            tensor("1 * a (x) c (x) b + 1 * a (x) b (x) c", 3)
        );
        assert!(insert_y(&b("c"), &Tensor::pure(Vec::new())).is_err());
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&b("a")));
        assert!(!is_primitive(&b("a[b]")));
        assert!(is_primitive(&(b("a") + b("b").scale(&integer(3)))));
    }

    #[test]
    fn cooperation_counts_are_catalan() {
        let counts: Vec<usize> = (0..5).map(|n| Cooperation::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14]);
    }

    #[test]
    fn pairing_is_kronecker() {
        let x = Element::parse("2 * a[b] + 1 * a").unwrap();
        let y = Element::parse("3 * a[b] + 5 * b").unwrap();
        assert_eq!(pairing(&x, &y), integer(6));
    }
}
