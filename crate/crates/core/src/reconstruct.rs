//! Rebuilding a validated algebra as the free pre-Lie algebra on its
//! primitives.
//!
//! The primitives of each degree get names `p{degree}_{index}` and become a
//! graded alphabet `V`. The pre-Lie morphism `φ: RT(V) → H` extending the
//! inclusion `V → H` is evaluated tree by tree with the trick formula
//!
//! ```text
//! φ(B(v, T1..Tn)) = φ(B(v, T1..T_{n-1})) ∘ φ(Tn) − Σ_i φ(B(v, T1, …, Ti ∘ Tn, …, T_{n-1}))
//! ```
//!
//! which only refers to trees of smaller root arity or smaller degree.
//! Per degree the report compares dimensions, the rank of `φ`, and checks
//! `(φ ⊗ φ)Δ = Δ_H φ`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{self, PreLieCoalgebra};
use crate::coalgebra::tree_coproduct;
use crate::error::{Error, Result};
use crate::linalg;
use crate::linear::{coefficient_matrix, rank_of, LinComb, Tensor};
use crate::prelie::TrickEvaluator;
use crate::presented::ValidatedAlgebra;
use crate::rigidity::primitives_basis;
use crate::tree::{enumerate_graded, Label, RootedTree};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    /// `dim H_n`.
    pub algebra_dim: usize,
    /// `dim RT(V)_n`.
    pub free_dim: usize,
    /// Rank of `φ` on `RT(V)_n`.
    pub rank: usize,
    /// `(φ ⊗ φ)Δ(T) = Δ_H φ(T)` for every tree `T` of this degree.
    pub coalgebra_morphism: bool,
}

impl DegreeReport {
    pub fn is_isomorphism(&self) -> bool {
        self.algebra_dim == self.free_dim && self.rank == self.algebra_dim && self.coalgebra_morphism
    }
}

#[derive(Clone, Debug)]
pub struct ReconstructionReport {
    pub max_degree: usize,
    /// Primitive basis vectors, by name.
    pub primitives: BTreeMap<Label, LinComb<Label>>,
    pub degrees: Vec<DegreeReport>,
    /// `φ` on every tree of `RT(V)` up to `max_degree`.
    pub images: BTreeMap<RootedTree, LinComb<Label>>,
}

impl ReconstructionReport {
    pub fn is_isomorphism(&self) -> bool {
        self.degrees.iter().all(DegreeReport::is_isomorphism)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.algebra_dim).collect()
    }
}

impl fmt::Display for ReconstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.dims().iter().map(|d| d.to_string()).collect();
        if self.is_isomorphism() {
            write!(f, "isomorphism up to degree {}, dims {}", self.max_degree, dims.join(","))
        } else {
            write!(f, "no isomorphism up to degree {}, dims {}", self.max_degree, dims.join(","))
        }
    }
}

/// Rebuilds `alg` up to `max_degree` as `RT(Prim H)`.
///
/// Fails with [`Error::NotIsomorphic`] naming the first degree where `φ` is
/// not bijective (with a kernel vector or an element outside the image) or
/// does not intertwine the coproducts.
pub fn reconstruct(alg: &ValidatedAlgebra, max_degree: usize) -> Result<ReconstructionReport> {
    if max_degree == 0 {
        return Err(Error::ZeroDegree);
    }
    if max_degree > alg.max_degree() {
        return Err(Error::Format(format!(
            "requested degree {max_degree} exceeds the presented degree {}",
            alg.max_degree()
        )));
    }
    let mut primitives = BTreeMap::new();
    let mut alphabet = Vec::new();
    for d in 1..=max_degree {
        for (i, p) in primitives_basis(alg.inner(), d).into_iter().enumerate() {
            let name = Label::new(&format!("p{d}_{}", i + 1))?;
            alphabet.push((name.clone(), d));
            primitives.insert(name, p);
        }
    }
    let phi = TrickEvaluator::new(|l: &Label| primitives[l].clone(), |x, y| algebra::product(alg.inner(), x, y));
    let mut degrees = Vec::new();
    let mut images = BTreeMap::new();
    for d in 1..=max_degree {
        let trees = if alphabet.is_empty() { Vec::new() } else { enumerate_graded(&alphabet, d)? };
        let values: Vec<LinComb<Label>> = trees.iter().map(|t| phi.eval(t)).collect();
        let rank = rank_of(&values);
        let mut morphism = true;
        for (t, v) in trees.iter().zip(&values) {
            let via_free = tree_coproduct(t).map_terms(2, |f| {
                Tensor::product_of(&[phi.eval(&f[0]), phi.eval(&f[1])])
            });
            if via_free != algebra::coproduct(alg.inner(), v) {
                morphism = false;
            }
        }
        let report = DegreeReport {
            degree: d,
            algebra_dim: alg.dimension(d),
            free_dim: trees.len(),
            rank,
            coalgebra_morphism: morphism,
        };
        if !report.is_isomorphism() {
            return Err(Error::NotIsomorphic { degree: d, detail: defect_detail(&report, &trees, &values, alg) });
        }
        degrees.push(report);
        images.extend(trees.into_iter().zip(values));
    }
    drop(phi);
    Ok(ReconstructionReport { max_degree, primitives, degrees, images })
}

fn defect_detail(report: &DegreeReport, trees: &[RootedTree], values: &[LinComb<Label>], alg: &ValidatedAlgebra) -> String {
    if !report.coalgebra_morphism {
        return "φ does not intertwine the coproducts".into();
    }
    if report.rank < report.free_dim {
        // a kernel vector of φ: rows are trees, so take the left nullspace
        let (matrix, cols) = coefficient_matrix(values);
        let transposed: linalg::Matrix = (0..cols).map(|j| matrix.iter().map(|row| row[j].clone()).collect()).collect();
        let kernel = linalg::nullspace(transposed, trees.len());
        if let Some(k) = kernel.first() {
            let witness = LinComb::from_terms(trees.iter().cloned().zip(k.iter().cloned()));
            return format!("φ has kernel vector {witness}");
        }
    }
    if let Some(missing) = alg.basis_of_degree(report.degree).into_iter().find(|b| {
        let mut extended = values.to_vec();
        extended.push(LinComb::basis(b.clone()));
        rank_of(&extended) > report.rank
    }) {
        return format!("{missing} is not in the image of φ");
    }
    format!("dimension mismatch: dim H = {}, dim RT(V) = {}", report.algebra_dim, report.free_dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FreePreLie;
    use crate::presented::PresentedAlgebra;

    #[test]
    fn self_reconstruction_of_one_generator() {
        let (alg, _) = PresentedAlgebra::from_free(&FreePreLie::on(&["a"]).unwrap(), 4).unwrap();
        let report = reconstruct(&alg.validate().unwrap(), 4).unwrap();
        assert_eq!(report.dims(), vec![1, 1, 2, 4]);
        assert_eq!(report.to_string(), "isomorphism up to degree 4, dims 1,1,2,4");
    }

    #[test]
    fn extra_primitive_in_degree_two() {
        // `q` is primitive in degree 2, so V has a generator in degrees 1 and 2
        let json = r#"{
            "generators": {"1": ["a"], "2": ["aa", "q"]},
            "product": [{"left": "a", "right": "a", "value": "1 * aa"}],
            "coproduct": {"aa": "1 * a (x) a"}
        }"#;
        let alg = PresentedAlgebra::from_json(json).unwrap().validate().unwrap();
        let report = reconstruct(&alg, 2).unwrap();
        assert_eq!(report.primitives.len(), 2);
        assert!(report.is_isomorphism());
    }

    #[test]
    fn degree_bounds_are_checked() {
        let (alg, _) = PresentedAlgebra::from_free(&FreePreLie::on(&["a"]).unwrap(), 2).unwrap();
        let alg = alg.validate().unwrap();
        assert!(matches!(reconstruct(&alg, 0), Err(Error::ZeroDegree)));
        assert!(matches!(reconstruct(&alg, 3), Err(Error::Format(_))));
    }
}
