//! Pre-Lie algebras with a coproduct, given by their action on basis vectors.
//!
//! Everything downstream (the operators `A_k`, the projector `e`, validation,
//! reconstruction) works through [`PreLieCoalgebra`], so the free algebra on
//! rooted trees and a presented algebra share one code path.

use num_traits::One;

use crate::error::{Error, Result};
use crate::linear::{Basis, LinComb, Rational, Tensor};
use crate::tree::{enumerate_trees, Label, RootedTree};

/// A vector space with a basis, a product `∘` and a coproduct `Δ`, both
/// given on basis vectors and extended by linearity.
pub trait PreLieCoalgebra {
    type Basis: Basis;

    fn product_basis(&self, x: &Self::Basis, y: &Self::Basis) -> LinComb<Self::Basis>;

    /// Must return a rank-2 tensor.
    fn coproduct_basis(&self, x: &Self::Basis) -> Tensor<Self::Basis>;

    /// Grading of a basis vector (positive).
    fn degree(&self, x: &Self::Basis) -> usize;

    /// Basis of the degree-`n` component.
    fn basis_of_degree(&self, n: usize) -> Vec<Self::Basis>;
}

/// The free pre-Lie algebra `RT(V)` on generators `alphabet`, with its NAP
/// coproduct.
#[derive(Clone, Debug, Default)]
pub struct FreePreLie {
    alphabet: Vec<Label>,
}

impl FreePreLie {
    pub fn new(alphabet: Vec<Label>) -> Self {
        Self { alphabet }
    }

    /// Generators from names, e.g. `FreePreLie::on(&["a", "b"])`.
    pub fn on(names: &[&str]) -> Result<Self> {
        Ok(Self { alphabet: names.iter().map(|n| Label::new(n)).collect::<Result<_>>()? })
    }

    pub fn alphabet(&self) -> &[Label] {
        &self.alphabet
    }
}

impl PreLieCoalgebra for FreePreLie {
    type Basis = RootedTree;

    fn product_basis(&self, x: &RootedTree, y: &RootedTree) -> LinComb<RootedTree> {
        crate::prelie::graft_product(x, y)
    }

    fn coproduct_basis(&self, x: &RootedTree) -> Tensor<RootedTree> {
        crate::coalgebra::tree_coproduct(x)
    }

    fn degree(&self, x: &RootedTree) -> usize {
        x.degree()
    }

    fn basis_of_degree(&self, n: usize) -> Vec<RootedTree> {
        if n == 0 || self.alphabet.is_empty() {
            return Vec::new();
        }
        enumerate_trees(&self.alphabet, n).expect("positive degree and nonempty alphabet")
    }
}

/// `x ∘ y` extended bilinearly.
pub fn product<A: PreLieCoalgebra>(alg: &A, x: &LinComb<A::Basis>, y: &LinComb<A::Basis>) -> LinComb<A::Basis> {
    let mut out = LinComb::zero();
    for (a, c) in x.iter() {
        for (b, d) in y.iter() {
            out.add_scaled(&(c * d), &alg.product_basis(a, b));
        }
    }
    out
}

/// `[x, y] = x∘y − y∘x`.
pub fn bracket<A: PreLieCoalgebra>(alg: &A, x: &LinComb<A::Basis>, y: &LinComb<A::Basis>) -> LinComb<A::Basis> {
    product(alg, x, y) - product(alg, y, x)
}

pub fn coproduct<A: PreLieCoalgebra>(alg: &A, x: &LinComb<A::Basis>) -> Tensor<A::Basis> {
    x.map_to_tensor(2, |b| alg.coproduct_basis(b))
}

/// `(Δ ⊗ Id^{⊗(k-1)})` on a rank-`k` tensor: splits the first slot.
pub fn coproduct_first_slot<A: PreLieCoalgebra>(alg: &A, x: &Tensor<A::Basis>) -> Tensor<A::Basis> {
    x.apply_slot(0, 2, |b| alg.coproduct_basis(b))
}

/// `(Id^{⊗(k-1)} ⊗ Δ)` on a rank-`k` tensor: splits the last slot.
pub fn coproduct_last_slot<A: PreLieCoalgebra>(alg: &A, x: &Tensor<A::Basis>) -> Tensor<A::Basis> {
    x.apply_slot(x.rank() - 1, 2, |b| alg.coproduct_basis(b))
}

/// `Δ^k` with `Δ^0 = Id` and `Δ^{k+1} = (Δ ⊗ Id^{⊗k}) Δ^k`.
pub fn delta_k<A: PreLieCoalgebra>(alg: &A, x: &LinComb<A::Basis>, k: usize) -> Tensor<A::Basis> {
    let mut t = x.as_tensor();
    for _ in 0..k {
        if t.is_zero() {
            return Tensor::zero(k + 1);
        }
        t = coproduct_first_slot(alg, &t);
    }
    t
}

/// `Δ^k` via the other bracketing, `Δ^{k+1} = (Δ^k ⊗ Id) Δ`.
pub fn delta_k_right<A: PreLieCoalgebra>(alg: &A, x: &LinComb<A::Basis>, k: usize) -> Tensor<A::Basis> {
    if k == 0 {
        return x.as_tensor();
    }
    let d = coproduct(alg, x);
    let mut out = Tensor::zero(k + 1);
    for (factors, c) in d.iter() {
        let left = delta_k_right(alg, &LinComb::basis(factors[0].clone()), k - 1);
        let right = Tensor::pure(vec![factors[1].clone()]);
        out.add_scaled(c, &left.concat(&right));
    }
    out
}

/// The right action of `y` on `H^{⊗n}` by derivation:
/// `(x1 ⊗ … ⊗ xn) ∘ y = Σ_i x1 ⊗ … ⊗ (xi ∘ y) ⊗ … ⊗ xn`.
pub fn module_action<A: PreLieCoalgebra>(alg: &A, m: &Tensor<A::Basis>, y: &LinComb<A::Basis>) -> Tensor<A::Basis> {
    let mut out = Tensor::zero(m.rank());
    for slot in 0..m.rank() {
        let acted = m.apply_slot(slot, 1, |b| product(alg, &LinComb::basis(b.clone()), y).as_tensor());
        out.add_scaled(&Rational::one(), &acted);
    }
    out
}

/// `δ_y(x1 ⊗ … ⊗ xk) = Σ_i x1 ⊗ … ⊗ xi ⊗ y ⊗ x_{i+1} ⊗ … ⊗ xk`.
pub fn insert_after_each<B: Basis>(y: &LinComb<B>, x: &Tensor<B>) -> Result<Tensor<B>> {
    if x.rank() == 0 {
        return Err(Error::RankMismatch { expected: 1, found: 0 });
    }
    let k = x.rank();
    let mut out = Tensor::zero(k + 1);
    for (factors, c) in x.iter() {
        for (b, d) in y.iter() {
            let coeff = c * d;
            for i in 1..=k {
                let mut f = factors[..i].to_vec();
                f.push(b.clone());
                f.extend(factors[i..].iter().cloned());
                out.add_term(f, coeff.clone());
            }
        }
    }
    Ok(out)
}
