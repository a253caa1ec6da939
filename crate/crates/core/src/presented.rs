//! Graded algebras given by structure constants, and the JSON document
//! format they are read from.
//!
//! ```json
//! {
//!   "generators": { "1": ["t1_1"], "2": ["t2_1"] },
//!   "product":    [ { "left": "t1_1", "right": "t1_1", "value": "1 * t2_1" } ],
//!   "coproduct":  { "t2_1": "1 * t1_1 (x) t1_1" }
//! }
//! ```
//!
//! `generators` lists the basis names of each graded piece. Values use the
//! linear-combination syntax with rationals `p/q` and `(x)` between tensor
//! factors. Pairs or names that are not listed have product or coproduct zero.
//!
//! A document describes the pieces of degree `≤ D`, where `D` is the largest
//! listed degree. Products landing above `D` are outside the presentation, so
//! each identity is only checked where every term it involves has degree
//! `≤ D`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;

use num_traits::One;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{self, FreePreLie, PreLieCoalgebra};
use crate::coalgebra::nap_coalgebra_defect;
use crate::error::{Error, Result};
use crate::linalg;
use crate::linear::{filtration_degree, FiltrationDegree, LinComb, Rational, Tensor};
use crate::tree::{Label, RootedTree};

/// Which hypothesis a presented algebra failed, with the basis vectors where
/// it failed.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ValidationFailure {
    #[error("grading at {0}")]
    Grading(String),
    #[error("connectedness at {0}")]
    Connectedness(String),
    #[error("NAP coalgebra relation at {0}")]
    NapCoalgebra(String),
    #[error("pre-Lie relation at ({0}, {1}, {2})")]
    PreLie(String, String, String),
    #[error("distributive law at ({0},{1})")]
    DistributiveLaw(String, String),
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub generators: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub product: Vec<ProductEntry>,
    #[serde(default)]
    pub coproduct: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub value: String,
}

/// A graded vector space with named basis vectors, a product and a coproduct.
#[derive(Clone, Debug, PartialEq)]
pub struct PresentedAlgebra {
    degrees: BTreeMap<Label, usize>,
    by_degree: BTreeMap<usize, Vec<Label>>,
    product: HashMap<(Label, Label), LinComb<Label>>,
    coproduct: HashMap<Label, Tensor<Label>>,
}

impl PresentedAlgebra {
    pub fn new(
        by_degree: BTreeMap<usize, Vec<Label>>,
        product: HashMap<(Label, Label), LinComb<Label>>,
        coproduct: HashMap<Label, Tensor<Label>>,
    ) -> Result<Self> {
        let mut degrees = BTreeMap::new();
        for (&d, names) in &by_degree {
            if d == 0 {
                return Err(Error::Format("degree 0 is not allowed".into()));
            }
            for n in names {
                if degrees.insert(n.clone(), d).is_some() {
                    return Err(Error::Format(format!("basis name `{n}` listed twice")));
                }
            }
        }
        let known = |l: &Label| -> Result<()> {
            if degrees.contains_key(l) {
                Ok(())
            } else {
                Err(Error::UnknownBasis(l.to_string()))
            }
        };
        for ((x, y), v) in &product {
            known(x)?;
            known(y)?;
            v.support().try_for_each(known)?;
        }
        for (x, v) in &coproduct {
            known(x)?;
            if !v.is_zero() && v.rank() != 2 {
                return Err(Error::RankMismatch { expected: 2, found: v.rank() });
            }
            v.iter().flat_map(|(f, _)| f.iter()).try_for_each(known)?;
        }
        let product = product.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let coproduct = coproduct.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        Ok(Self { degrees, by_degree, product, coproduct })
    }

    pub fn from_document(doc: &AlgebraDocument) -> Result<Self> {
        let mut by_degree = BTreeMap::new();
        for (d, names) in &doc.generators {
            let d: usize = d.trim().parse().map_err(|_| Error::Format(format!("bad degree key `{d}`")))?;
            let names = names.iter().map(|n| Label::new(n)).collect::<Result<Vec<_>>>()?;
            by_degree.entry(d).or_insert_with(Vec::new).extend(names);
        }
        let mut product = HashMap::new();
        for entry in &doc.product {
            let key = (Label::new(&entry.left)?, Label::new(&entry.right)?);
            let value = LinComb::parse_named(&entry.value)?;
            if product.insert(key, value).is_some() {
                return Err(Error::Format(format!("product ({}, {}) listed twice", entry.left, entry.right)));
            }
        }
        let mut coproduct = HashMap::new();
        for (name, value) in &doc.coproduct {
            coproduct.insert(Label::new(name)?, Tensor::parse_named(value, 2)?);
        }
        Self::new(by_degree, product, coproduct)
    }

    pub fn to_document(&self) -> AlgebraDocument {
        let generators = self
            .by_degree
            .iter()
            .map(|(d, names)| (d.to_string(), names.iter().map(|n| n.to_string()).collect()))
            .collect();
        let mut product: Vec<ProductEntry> = self
            .product
            .iter()
            .map(|((x, y), v)| ProductEntry { left: x.to_string(), right: y.to_string(), value: v.to_string() })
            .collect();
        product.sort_by(|a, b| (&a.left, &a.right).cmp(&(&b.left, &b.right)));
        let coproduct = self.coproduct.iter().map(|(x, v)| (x.to_string(), v.to_string())).collect();
        AlgebraDocument { generators, product, coproduct }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: AlgebraDocument = serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        Self::from_document(&doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("document serializes")
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// The free algebra `RT(alphabet)` truncated at degree `max_degree`.
    ///
    /// Basis vectors are named `t{degree}_{index}` (index from 1 in canonical
    /// tree order); the returned map sends each name to its tree.
    pub fn from_free(alg: &FreePreLie, max_degree: usize) -> Result<(Self, BTreeMap<Label, RootedTree>)> {
        let mut names: BTreeMap<Label, RootedTree> = BTreeMap::new();
        let mut index: HashMap<RootedTree, Label> = HashMap::new();
        let mut by_degree = BTreeMap::new();
        for d in 1..=max_degree {
            let trees = alg.basis_of_degree(d);
            let mut labels = Vec::new();
            for (i, t) in trees.into_iter().enumerate() {
                let l = Label::new(&format!("t{d}_{}", i + 1))?;
                names.insert(l.clone(), t.clone());
                index.insert(t, l.clone());
                labels.push(l);
            }
            by_degree.insert(d, labels);
        }
        let rename = |x: &LinComb<RootedTree>| x.map_linear(|t| LinComb::basis(index[t].clone()));
        let mut product = HashMap::new();
        let mut coproduct = HashMap::new();
        for (l, t) in &names {
            for (m, s) in &names {
                if t.degree() + s.degree() <= max_degree {
                    product.insert((l.clone(), m.clone()), rename(&alg.product_basis(t, s)));
                }
            }
            let d = alg.coproduct_basis(t);
            coproduct.insert(
                l.clone(),
                d.map_terms(2, |f| Tensor::pure(f.iter().map(|x| index[x].clone()).collect())),
            );
        }
        Ok((Self::new(by_degree, product, coproduct)?, names))
    }

    pub fn max_degree(&self) -> usize {
        self.by_degree.keys().next_back().copied().unwrap_or(0)
    }

    pub fn dimension(&self, n: usize) -> usize {
        self.by_degree.get(&n).map_or(0, Vec::len)
    }

    pub fn basis(&self) -> impl Iterator<Item = (&Label, usize)> {
        self.degrees.iter().map(|(l, d)| (l, *d))
    }

    pub fn degree_of(&self, l: &Label) -> Option<usize> {
        self.degrees.get(l).copied()
    }

    /// Degree of a combination, if homogeneous.
    pub fn degree_of_element(&self, x: &LinComb<Label>) -> Option<usize> {
        let mut degs = x.support().filter_map(|l| self.degree_of(l));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Replaces the coproduct of `name` with `value` (for negative controls).
    pub fn with_coproduct(&self, name: &Label, value: Tensor<Label>) -> Self {
        let mut out = self.clone();
        if value.is_zero() {
            out.coproduct.remove(name);
        } else {
            out.coproduct.insert(name.clone(), value);
        }
        out
    }

    /// The same algebra written in a new basis: each graded piece is changed by
    /// a random invertible integer matrix with entries in `-2..=2`. The new
    /// basis vectors keep the old names.
    pub fn change_basis(&self, rng: &mut impl Rng) -> Self {
        let mut new_in_old: HashMap<Label, LinComb<Label>> = HashMap::new();
        let mut old_in_new: HashMap<Label, LinComb<Label>> = HashMap::new();
        for names in self.by_degree.values() {
            let n = names.len();
            let (p, p_inv) = loop {
                let p: linalg::Matrix = (0..n)
                    .map(|_| (0..n).map(|_| Rational::from_integer(rng.gen_range(-2i64..=2).into())).collect())
                    .collect();
                if let Some(inv) = linalg::inverse(&p) {
                    break (p, inv);
                }
            };
            for (j, f) in names.iter().enumerate() {
                new_in_old.insert(f.clone(), LinComb::from_terms(names.iter().cloned().zip(p.iter().map(|row| row[j].clone()))));
                old_in_new
                    .insert(f.clone(), LinComb::from_terms(names.iter().cloned().zip(p_inv.iter().map(|row| row[j].clone()))));
            }
        }
        let to_new = |x: &LinComb<Label>| x.map_linear(|l| old_in_new[l].clone());
        let tensor_to_new = |t: &Tensor<Label>| {
            t.map_terms(2, |f| Tensor::product_of(&[old_in_new[&f[0]].clone(), old_in_new[&f[1]].clone()]))
        };
        let max = self.max_degree();
        let mut product = HashMap::new();
        let mut coproduct = HashMap::new();
        for (a, da) in &self.degrees {
            for (b, db) in &self.degrees {
                if da + db <= max {
                    let v = algebra::product(self, &new_in_old[a], &new_in_old[b]);
                    product.insert((a.clone(), b.clone()), to_new(&v));
                }
            }
            let d = algebra::coproduct(self, &new_in_old[a]);
            coproduct.insert(a.clone(), tensor_to_new(&d));
        }
        Self::new(self.by_degree.clone(), product, coproduct).expect("same basis names")
    }

    /// Checks every hypothesis of the rigidity theorem: grading, then degree
    /// by degree connectedness, the pre-Lie relation, the distributive law
    /// `Δ(x∘y) = x⊗y + Δ(x)∘y` and the NAP coalgebra relation. Identities
    /// are checked where all their terms lie within the presented degrees,
    /// and the reported failure is one of lowest degree.
    pub fn validate(self) -> std::result::Result<ValidatedAlgebra, ValidationFailure> {
        self.check_grading()?;
        for d in 1..=self.max_degree() {
            self.check_connected(d)?;
            self.check_prelie(d)?;
            self.check_distributive_law(d)?;
            self.check_nap_coalgebra(d)?;
        }
        Ok(ValidatedAlgebra(self))
    }

    fn check_grading(&self) -> std::result::Result<(), ValidationFailure> {
        let max = self.max_degree();
        for ((x, y), v) in &self.product {
            let d = self.degrees[x] + self.degrees[y];
            if d > max || v.support().any(|l| self.degrees[l] != d) {
                return Err(ValidationFailure::Grading(format!("product ({x},{y})")));
            }
        }
        for (x, v) in &self.coproduct {
            let d = self.degrees[x];
            if v.iter().any(|(f, _)| self.degrees[&f[0]] + self.degrees[&f[1]] != d) {
                return Err(ValidationFailure::Grading(format!("coproduct of {x}")));
            }
        }
        Ok(())
    }

    fn check_connected(&self, d: usize) -> std::result::Result<(), ValidationFailure> {
        for x in self.basis_of_degree(d) {
            match filtration_degree(&LinComb::basis(x.clone()), |b| self.coproduct_basis(b)) {
                Ok(FiltrationDegree::Finite(_)) => {}
                _ => return Err(ValidationFailure::Connectedness(x.to_string())),
            }
        }
        Ok(())
    }

    fn check_nap_coalgebra(&self, d: usize) -> std::result::Result<(), ValidationFailure> {
        for x in self.basis_of_degree(d) {
            if !nap_coalgebra_defect(self, &LinComb::basis(x.clone())).is_zero() {
                return Err(ValidationFailure::NapCoalgebra(x.to_string()));
            }
        }
        Ok(())
    }

    /// Basis pairs `(x, y)` with `deg x + deg y = d`.
    fn pairs_of_degree(&self, d: usize) -> Vec<(Label, Label)> {
        let mut out = Vec::new();
        for dx in 1..d {
            for x in self.basis_of_degree(dx) {
                for y in self.basis_of_degree(d - dx) {
                    out.push((x.clone(), y));
                }
            }
        }
        out
    }

    fn check_prelie(&self, d: usize) -> std::result::Result<(), ValidationFailure> {
        for (x, yz) in (1..d).flat_map(|dx| self.basis_of_degree(dx).into_iter().map(move |x| (x, d - dx))) {
            for (y, z) in self.pairs_of_degree(yz) {
                if y > z {
                    continue;
                }
                let (xe, ye, ze) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()), LinComb::basis(z.clone()));
                let assoc = |b: &LinComb<Label>, c: &LinComb<Label>| {
                    algebra::product(self, &algebra::product(self, &xe, b), c)
                        - algebra::product(self, &xe, &algebra::product(self, b, c))
                };
                if assoc(&ye, &ze) != assoc(&ze, &ye) {
                    return Err(ValidationFailure::PreLie(x.to_string(), y.to_string(), z.to_string()));
                }
            }
        }
        Ok(())
    }

    fn check_distributive_law(&self, d: usize) -> std::result::Result<(), ValidationFailure> {
        for (x, y) in self.pairs_of_degree(d) {
            let (xe, ye) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()));
            let lhs = algebra::coproduct(self, &algebra::product(self, &xe, &ye));
            let mut rhs = Tensor::pure(vec![x.clone(), y.clone()]);
            rhs.add_scaled(&Rational::one(), &algebra::module_action(self, &algebra::coproduct(self, &xe), &ye));
            if lhs != rhs {
                return Err(ValidationFailure::DistributiveLaw(x.to_string(), y.to_string()));
            }
        }
        Ok(())
    }
}

impl PreLieCoalgebra for PresentedAlgebra {
    type Basis = Label;

    fn product_basis(&self, x: &Label, y: &Label) -> LinComb<Label> {
        self.product.get(&(x.clone(), y.clone())).cloned().unwrap_or_default()
    }

    fn coproduct_basis(&self, x: &Label) -> Tensor<Label> {
        self.coproduct.get(x).cloned().unwrap_or_else(|| Tensor::zero(2))
    }

    fn degree(&self, x: &Label) -> usize {
        self.degrees.get(x).copied().unwrap_or(0)
    }

    fn basis_of_degree(&self, n: usize) -> Vec<Label> {
        self.by_degree.get(&n).cloned().unwrap_or_default()
    }
}

/// A presented algebra that passed [`PresentedAlgebra::validate`].
#[derive(Clone, Debug)]
pub struct ValidatedAlgebra(PresentedAlgebra);

impl ValidatedAlgebra {
    pub fn inner(&self) -> &PresentedAlgebra {
        &self.0
    }
}

impl std::ops::Deref for ValidatedAlgebra {
    type Target = PresentedAlgebra;
    fn deref(&self) -> &PresentedAlgebra {
        &self.0
    }
}

impl fmt::Display for PresentedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = (1..=self.max_degree()).map(|d| self.dimension(d).to_string()).collect();
        write!(f, "presented algebra, dims {}", dims.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn free_a(d: usize) -> PresentedAlgebra {
        PresentedAlgebra::from_free(&FreePreLie::on(&["a"]).unwrap(), d).unwrap().0
    }

    fn l(s: &str) -> Label {
        Label::new(s).unwrap()
    }

    #[test]
    fn free_presentation_validates() {
        let alg = free_a(4);
        assert_eq!(alg.to_string(), "presented algebra, dims 1,1,2,4");
        assert!(alg.validate().is_ok());
    }

    #[test]
    fn json_roundtrip() {
        let alg = free_a(3);
        let back = PresentedAlgebra::from_json(&alg.to_json()).unwrap();
        assert_eq!(back, alg);
    }

    #[test]
    fn unknown_names_are_rejected() {
        let json = r#"{"generators": {"1": ["x"]}, "coproduct": {"x": "1 * x (x) y"}}"#;
        assert!(matches!(PresentedAlgebra::from_json(json), Err(Error::UnknownBasis(n)) if n == "y"));
        assert!(matches!(PresentedAlgebra::from_json("{"), Err(Error::Format(_))));
    }

    #[test]
    fn perturbed_coproduct_breaks_the_distributive_law() {
        // also breaks the NAP coalgebra relation in degree 4, but the
        // lowest-degree failure is reported
        let alg = free_a(5);
        let t2 = l("t2_1");
        let doubled = alg.coproduct_basis(&t2).scale(&Rational::from_integer(2.into()));
        let failure = alg.with_coproduct(&t2, doubled).validate().unwrap_err();
        assert_eq!(failure, ValidationFailure::DistributiveLaw("t1_1".into(), "t1_1".into()));
        assert_eq!(failure.to_string(), "distributive law at (t1_1,t1_1)");
    }

    #[test]
    fn ungraded_coproduct_is_rejected() {
        let alg = free_a(3);
        let bad = alg.with_coproduct(&l("t3_1"), Tensor::pure(vec![l("t1_1"), l("t1_1")]));
        assert!(matches!(bad.validate(), Err(ValidationFailure::Grading(_))));
    }

    #[test]
    fn change_of_basis_preserves_validity() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let alg = free_a(4).change_basis(&mut rng);
        assert!(alg.validate().is_ok());
        assert!(free_a(2).product_basis(&l("t1_1"), &l("t2_1")).is_zero());
    }
}
