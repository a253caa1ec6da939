//! The operators `A_k` and `U_k`, the idempotent `e` onto primitives, and
//! the reconstruction of a connected pre-Lie algebra with a compatible NAP
//! coproduct as the free pre-Lie algebra on its primitives.
//!
//! `A_1 = Id`, and for `m ≥ 2`
//!
//! ```text
//! A_m = Σ_{l=1}^{m-1} C(m-2, l-1) μ(A_l ⊗ A_{m-l})
//! U_m = Σ_{l=1}^{m-1} C(m-2, l-1) A_l ⊗ A_{m-l}        (so A_m = μ U_m)
//! e(x) = x + Σ_{k≥1} (-1)^k / k! · A_{k+1} Δ^k(x)
//! ```
//!
//! The sum defining `e` stops at the first `k` with `Δ^k(x) = 0`; every later
//! term vanishes because `Δ^{k+1} = (Δ ⊗ Id^{⊗k}) Δ^k`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{self, FreePreLie, PreLieCoalgebra};
use crate::error::{Error, Result};
use crate::linear::{span_basis, Element, LinComb, Rational, Tensor, TensorElement};
use crate::tree::{enumerate_heap_ordered, HeapOrderedTree, Label, LabeledTree, RootedTree};

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

type Memo<K, B> = RefCell<HashMap<K, LinComb<B>>>;

/// Evaluates `A_k`, `U_k` and `e` on an algebra, memoizing `A_k` on pure
/// tensors and the product on basis pairs.
pub struct Operators<'a, A: PreLieCoalgebra> {
    alg: &'a A,
    products: Memo<(A::Basis, A::Basis), A::Basis>,
    a_pure: Memo<Vec<A::Basis>, A::Basis>,
}

impl<'a, A: PreLieCoalgebra> Operators<'a, A> {
    pub fn new(alg: &'a A) -> Self {
        Self { alg, products: RefCell::default(), a_pure: RefCell::default() }
    }

    pub fn algebra(&self) -> &'a A {
        self.alg
    }

    pub fn product(&self, x: &LinComb<A::Basis>, y: &LinComb<A::Basis>) -> LinComb<A::Basis> {
        let mut out = LinComb::zero();
        for (a, c) in x.iter() {
            for (b, d) in y.iter() {
                let key = (a.clone(), b.clone());
                let cached = self.products.borrow().get(&key).cloned();
                let p = match cached {
                    Some(p) => p,
                    None => {
                        let p = self.alg.product_basis(a, b);
                        self.products.borrow_mut().insert(key, p.clone());
                        p
                    }
                };
                out.add_scaled(&(c * d), &p);
            }
        }
        out
    }

    /// `A_k(x1 ⊗ … ⊗ xk)` on a pure tensor of basis vectors.
    pub fn a_on_pure(&self, factors: &[A::Basis]) -> LinComb<A::Basis> {
        if factors.len() == 1 {
            return LinComb::basis(factors[0].clone());
        }
        if let Some(hit) = self.a_pure.borrow().get(factors) {
            return hit.clone();
        }
        let m = factors.len();
        let mut out = LinComb::zero();
        for l in 1..m {
            let c = Rational::from_integer(binomial(m - 2, l - 1));
            let left = self.a_on_pure(&factors[..l]);
            let right = self.a_on_pure(&factors[l..]);
            out.add_scaled(&c, &self.product(&left, &right));
        }
        self.a_pure.borrow_mut().insert(factors.to_vec(), out.clone());
        out
    }

    /// `A_k(x)` for a rank-`k` tensor.
    pub fn ak_apply(&self, k: usize, x: &Tensor<A::Basis>) -> Result<LinComb<A::Basis>> {
        if k == 0 || x.rank() != k {
            return Err(Error::RankMismatch { expected: k, found: x.rank() });
        }
        Ok(x.map_to_lincomb(|f| self.a_on_pure(f)))
    }

    /// `U_m(x)` for a rank-`m` tensor, `m ≥ 2`.
    pub fn uk_apply(&self, m: usize, x: &Tensor<A::Basis>) -> Result<Tensor<A::Basis>> {
        if m < 2 || x.rank() != m {
            return Err(Error::RankMismatch { expected: m.max(2), found: x.rank() });
        }
        Ok(x.map_terms(2, |f| {
            let mut out = Tensor::zero(2);
            for l in 1..m {
                let c = Rational::from_integer(binomial(m - 2, l - 1));
                let pair = Tensor::product_of(&[self.a_on_pure(&f[..l]), self.a_on_pure(&f[l..])]);
                out.add_scaled(&c, &pair);
            }
            out
        }))
    }

    /// `μ` applied to a rank-2 tensor.
    pub fn mu(&self, x: &Tensor<A::Basis>) -> LinComb<A::Basis> {
        x.map_to_lincomb(|f| self.product(&LinComb::basis(f[0].clone()), &LinComb::basis(f[1].clone())))
    }

    /// The terms `(k, Δ^k(x))` for `k ≥ 1` up to the last nonzero iterate.
    fn iterates(&self, x: &LinComb<A::Basis>) -> Vec<(usize, Tensor<A::Basis>)> {
        let mut out = Vec::new();
        let mut t = x.as_tensor();
        for k in 1.. {
            t = algebra::coproduct_first_slot(self.alg, &t);
            if t.is_zero() {
                break;
            }
            out.push((k, t.clone()));
        }
        out
    }

    /// `e(x) = x + Σ_{k≥1} (-1)^k/k! · A_{k+1} Δ^k(x)`.
    pub fn idempotent_e(&self, x: &LinComb<A::Basis>) -> LinComb<A::Basis> {
        let mut out = x.clone();
        for (k, dk) in self.iterates(x) {
            let sign = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            let c = Rational::new(sign, factorial(k));
            let a = self.ak_apply(k + 1, &dk).expect("Δ^k has rank k+1");
            out.add_scaled(&c, &a);
        }
        out
    }

    /// A tensor `w ∈ H ⊗ H` with `μ(w) = x − e(x)`:
    /// `w = −Σ_{k≥1} (-1)^k/k! · U_{k+1} Δ^k(x)`.
    pub fn decomposable_witness(&self, x: &LinComb<A::Basis>) -> Tensor<A::Basis> {
        let mut out = Tensor::zero(2);
        for (k, dk) in self.iterates(x) {
            let sign = if k % 2 == 0 { -BigInt::one() } else { BigInt::one() };
            let c = Rational::new(sign, factorial(k));
            out.add_scaled(&c, &self.uk_apply(k + 1, &dk).expect("rank k+1"));
        }
        out
    }

    /// `ΔA_{k+1}(x) − k U_{k+1}(x) − U_{k+2}((Δ ⊗ Id^{⊗k}) x)` for rank-`(k+1)` `x`.
    pub fn coproduct_of_ak_defect(&self, k: usize, x: &Tensor<A::Basis>) -> Result<Tensor<A::Basis>> {
        let lhs = algebra::coproduct(self.alg, &self.ak_apply(k + 1, x)?);
        let first = self.uk_apply(k + 1, x)?.scale(&Rational::from_integer(BigInt::from(k)));
        let split = algebra::coproduct_first_slot(self.alg, x);
        let second = self.uk_apply(k + 2, &split)?;
        lhs.try_sub(&first)?.try_sub(&second)
    }

    /// `(k+1) A_{k+1}(x ∘ y) − A_{k+2}(δ_y(x))` for rank-`(k+1)` `x`.
    pub fn derivation_defect(&self, k: usize, x: &Tensor<A::Basis>, y: &LinComb<A::Basis>) -> Result<LinComb<A::Basis>> {
        let acted = algebra::module_action(self.alg, x, y);
        let lhs = self.ak_apply(k + 1, &acted)?.scale(&Rational::from_integer(BigInt::from(k + 1)));
        let rhs = self.ak_apply(k + 2, &algebra::insert_after_each(y, x)?)?;
        Ok(lhs - rhs)
    }

    /// `Σ_{l=1}^{k+1} C(k, l-1) A_l(x1..xl) ∘ A_{k+2-l}(y ⊗ x_{l+1}..x_{k+1}) − A_{k+1}(x̄ ∘ y)`
    /// for rank-`(k+1)` `x̄`, extended linearly over its terms.
    pub fn split_action_defect(&self, k: usize, xbar: &Tensor<A::Basis>, y: &LinComb<A::Basis>) -> Result<LinComb<A::Basis>> {
        if xbar.rank() != k + 1 {
            return Err(Error::RankMismatch { expected: k + 1, found: xbar.rank() });
        }
        let lhs = xbar.map_to_lincomb(|f| {
            let mut out = LinComb::zero();
            for l in 1..=k + 1 {
                let c = Rational::from_integer(binomial(k, l - 1));
                let left = self.a_on_pure(&f[..l]);
                let right = y.map_linear(|yb| {
                    let mut tail = vec![yb.clone()];
                    tail.extend(f[l..].iter().cloned());
                    self.a_on_pure(&tail)
                });
                out.add_scaled(&c, &self.product(&left, &right));
            }
            out
        });
        let rhs = self.ak_apply(k + 1, &algebra::module_action(self.alg, xbar, y))?;
        Ok(lhs - rhs)
    }
}

/// `A_k` on the free algebra of rooted trees.
pub fn ak_apply(k: usize, x: &TensorElement) -> Result<Element> {
    Operators::new(&FreePreLie::default()).ak_apply(k, x)
}

/// `U_m` on the free algebra of rooted trees.
pub fn uk_apply(m: usize, x: &TensorElement) -> Result<TensorElement> {
    Operators::new(&FreePreLie::default()).uk_apply(m, x)
}

/// The idempotent `e` on the free algebra of rooted trees.
pub fn idempotent_e(x: &Element) -> Element {
    Operators::new(&FreePreLie::default()).idempotent_e(x)
}

/// A basis of `e(H_n)`, the primitives of degree `n`.
pub fn primitives_basis<A: PreLieCoalgebra>(alg: &A, n: usize) -> Vec<LinComb<A::Basis>> {
    let ops = Operators::new(alg);
    let images: Vec<LinComb<A::Basis>> =
        alg.basis_of_degree(n).into_iter().map(|b| ops.idempotent_e(&LinComb::basis(b))).collect();
    span_basis(&images)
}

/// The decomposables `μ(H ⊗ H)_n`, as the products of basis pairs whose
/// degrees add up to `n`.
pub fn decomposables<A: PreLieCoalgebra>(alg: &A, n: usize) -> Vec<LinComb<A::Basis>> {
    let ops = Operators::new(alg);
    let mut out = Vec::new();
    for d in 1..n {
        for x in alg.basis_of_degree(d) {
            for y in alg.basis_of_degree(n - d) {
                out.push(ops.product(&LinComb::basis(x.clone()), &LinComb::basis(y)));
            }
        }
    }
    out
}

/// The coefficients `c(U)` with `A_k = Σ_{U ∈ HO(k)} c(U) U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeapCoefficients {
    pub arity: usize,
    pub coeffs: BTreeMap<HeapOrderedTree, Rational>,
}

impl HeapCoefficients {
    pub fn coeff(&self, u: &HeapOrderedTree) -> Rational {
        self.coeffs.get(u).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Σ c(U) U` as a combination of labeled trees.
    pub fn as_combination(&self) -> LinComb<LabeledTree> {
        LinComb::from_terms(self.coeffs.iter().map(|(u, c)| (u.as_labeled().clone(), c.clone())))
    }
}

/// The labels `x1, …, xk`.
pub fn ordered_generators(k: usize) -> Vec<Label> {
    (1..=k).map(|i| Label::new(&format!("x{i}")).expect("valid label")).collect()
}

pub(crate) fn generator_index(l: &Label) -> Option<usize> {
    l.as_str().strip_prefix('x').and_then(|s| s.parse().ok())
}

/// Expands `A_k(x1 ⊗ … ⊗ xk)` on distinct generators and reads `c(U)` off
/// the resulting labeled trees.
pub fn heap_coefficients(k: usize) -> Result<HeapCoefficients> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    let gens: Vec<RootedTree> = ordered_generators(k).into_iter().map(RootedTree::leaf).collect();
    let free = FreePreLie::default();
    let ops = Operators::new(&free);
    let expansion = ops.a_on_pure(&gens);
    let mut coeffs = BTreeMap::new();
    for (tree, c) in expansion.iter() {
        let labeled = LabeledTree::from_rooted(tree, generator_index)?;
        coeffs.insert(HeapOrderedTree::try_from(labeled)?, c.clone());
    }
    Ok(HeapCoefficients { arity: k, coeffs })
}

/// `T ∘ T'` on labeled trees: `T'` is relabeled to `l+1..l+m` and its root is
/// grafted on each vertex of `T` in turn.
pub fn graft_labeled(t: &LabeledTree, t2: &LabeledTree) -> Vec<LabeledTree> {
    let l = t.size();
    (1..=l)
        .map(|v| {
            let mut parent = t.parents().to_vec();
            parent.extend(t2.parents().iter().map(|&p| if p == 0 { v } else { p + l }));
            LabeledTree::from_parents(parent).expect("grafting keeps a tree")
        })
        .collect()
}

/// `c(U)` by the recursion over heap-ordered trees: for `k ≥ 2`,
/// `c(U) = Σ_{l=1}^{k-1} C(k-2, l-1) Σ_{T ∈ HO(l), T' ∈ HO(k-l)} c(T) c(T') ⟨T ∘ T', U⟩`,
/// with `T'` occupying the labels after those of `T`.
pub fn heap_coefficients_by_recursion(k: usize) -> Result<HeapCoefficients> {
    if k == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut table: Vec<HeapCoefficients> = Vec::with_capacity(k);
    let single = HeapOrderedTree::try_from(LabeledTree::single())?;
    table.push(HeapCoefficients { arity: 1, coeffs: BTreeMap::from([(single, Rational::one())]) });
    for m in 2..=k {
        let mut acc: LinComb<LabeledTree> = LinComb::zero();
        for l in 1..m {
            let c = Rational::from_integer(binomial(m - 2, l - 1));
            for (t, ct) in &table[l - 1].coeffs {
                for (t2, ct2) in &table[m - l - 1].coeffs {
                    for u in graft_labeled(t, t2) {
                        acc.add_term(u, &c * ct * ct2);
                    }
                }
            }
        }
        let mut coeffs = BTreeMap::new();
        for (u, c) in acc.iter() {
            coeffs.insert(HeapOrderedTree::try_from(u.clone())?, c.clone());
        }
        table.push(HeapCoefficients { arity: m, coeffs });
    }
    Ok(table.pop().expect("k ≥ 1"))
}

/// Checks that the support of `c` lies in `HO(k)` and that every heap-ordered
/// tree is accounted for (with coefficient possibly zero).
pub fn support_in_heap_ordered(c: &HeapCoefficients) -> Result<bool> {
    let all = enumerate_heap_ordered(c.arity)?;
    Ok(c.coeffs.keys().all(|u| all.contains(u)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::integer;
    use crate::tree::parse_tree;

    fn b(s: &str) -> Element {
        LinComb::basis(parse_tree(s).unwrap())
    }

    fn pure(names: &[&str]) -> TensorElement {
        Tensor::pure(names.iter().map(|s| parse_tree(s).unwrap()).collect())
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(2, 3), BigInt::from(0));
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn ak_examples() {
        let x = Element::parse("2 * a[b] + 1 * c").unwrap();
        assert_eq!(ak_apply(1, &x.as_tensor()).unwrap(), x);
        assert_eq!(ak_apply(2, &pure(&["a", "b"])).unwrap(), b("a[b]"));
        assert_eq!(ak_apply(3, &pure(&["a", "a", "a"])).unwrap(), Element::parse("1 * a[a,a] + 2 * a[a[a]]").unwrap());
        assert!(matches!(ak_apply(2, &pure(&["a"])), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn uk_examples() {
        assert_eq!(uk_apply(2, &pure(&["a", "b"])).unwrap(), pure(&["a", "b"]));
        let expected = TensorElement::parse("1 * a (x) b[c] + 1 * a[b] (x) c", 2).unwrap();
        assert_eq!(uk_apply(3, &pure(&["a", "b", "c"])).unwrap(), expected);
        assert!(uk_apply(1, &pure(&["a"])).is_err());
        let free = FreePreLie::default();
        let ops = Operators::new(&free);
        let x = pure(&["a[b]", "c", "d"]);
        assert_eq!(ops.mu(&ops.uk_apply(3, &x).unwrap()), ops.ak_apply(3, &x).unwrap());
    }

    #[test]
    fn idempotent_examples() {
        assert_eq!(idempotent_e(&b("a")), b("a"));
        assert!(idempotent_e(&b("a[b]")).is_zero());
        assert!(idempotent_e(&b("a[a,a]")).is_zero());
        assert!(idempotent_e(&b("a[a[a]]")).is_zero());
        let x = Element::parse("3 * a + 1 * b[a]").unwrap();
        assert_eq!(idempotent_e(&x), b("a").scale(&integer(3)));
    }

    #[test]
    fn primitives_in_low_degree() {
        let one = FreePreLie::on(&["a"]).unwrap();
        assert_eq!(primitives_basis(&one, 1), vec![b("a")]);
        assert!(primitives_basis(&one, 2).is_empty());
        let two = FreePreLie::on(&["a", "b"]).unwrap();
        assert_eq!(primitives_basis(&two, 1), vec![b("a"), b("b")]);
    }

    #[test]
    fn heap_coefficients_low_arity() {
        let c1 = heap_coefficients(1).unwrap();
        assert_eq!(c1.coeffs.len(), 1);
        assert_eq!(c1.coeff(&HeapOrderedTree::try_from(LabeledTree::single()).unwrap()), integer(1));
        let c2 = heap_coefficients(2).unwrap();
        let mu = HeapOrderedTree::try_from(LabeledTree::from_parents(vec![0, 1]).unwrap()).unwrap();
        assert_eq!(c2.coeff(&mu), integer(1));
        let c3 = heap_coefficients(3).unwrap();
        let path = HeapOrderedTree::try_from(LabeledTree::from_parents(vec![0, 1, 2]).unwrap()).unwrap();
        let cherry = HeapOrderedTree::try_from(LabeledTree::from_parents(vec![0, 1, 1]).unwrap()).unwrap();
        // A_3(a⊗a⊗a) = a[a,a] + 2·a[a[a]]
        assert_eq!(c3.coeff(&cherry), integer(1));
        assert_eq!(c3.coeff(&path), integer(2));
        assert!(support_in_heap_ordered(&c3).unwrap());
    }
}
