//! The NAP operad and the pre-Lie operad on labeled rooted trees.
//!
//! Both partial compositions `T ∘_i S` substitute `S` for the vertex `i` of
//! `T`: the edge leaving `i` now leaves the root of `S`, `S` takes the labels
//! `i..i+m-1` and the labels of `T` above `i` move up by `m - 1`. They differ
//! in where the former children of `i` go: the NAP composition grafts them
//! all on the root of `S`, the pre-Lie composition sums over every way of
//! attaching them to vertices of `S`.
//!
//! `Σ_n` acts on the right through [`LabeledTree::act`]; with that convention
//! the equivariance axiom reads
//! `act(σ, T) ∘_i act(τ, S) = act(σ ∘_i τ, T ∘_{σ(i)} S)`.

use std::fmt;

use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::checks::CheckReport;
use crate::error::{Error, Result};
use crate::linear::{Element, LinComb, Rational};
use crate::perm::Permutation;
use crate::prelie::{nap_product, prelie_product, TrickEvaluator};
use crate::rigidity::{generator_index, ordered_generators};
use crate::tree::{enumerate_labeled, LabeledTree, RootedTree};

pub type LabeledElement = LinComb<LabeledTree>;

/// Label of vertex `v` of `T` (for `v != i`) in `T ∘_i S`.
fn shift_outer(v: usize, i: usize, m: usize) -> usize {
    if v > i {
        v + m - 1
    } else {
        v
    }
}

fn check_slot(t: &LabeledTree, i: usize) -> Result<()> {
    if i == 0 || i > t.size() {
        return Err(Error::VertexOutOfRange { index: i, size: t.size() });
    }
    Ok(())
}

/// Substitutes `S` for `i`, attaching the `q`-th former child of `i` to the
/// vertex `attach[q]` of `S`.
fn substitute(t: &LabeledTree, i: usize, s: &LabeledTree, attach: &[usize]) -> LabeledTree {
    let (n, m) = (t.size(), s.size());
    let inner = |k: usize| i - 1 + k;
    let mut parent = vec![0; n + m - 1];
    let kids = t.children(i);
    for v in (1..=n).filter(|&v| v != i) {
        parent[shift_outer(v, i, m) - 1] = match t.parent(v) {
            None => 0,
            Some(p) if p == i => inner(attach[kids.iter().position(|&c| c == v).expect("child of i")]),
            Some(p) => shift_outer(p, i, m),
        };
    }
    for k in 1..=m {
        parent[inner(k) - 1] = match s.parent(k) {
            Some(p) => inner(p),
            None => t.parent(i).map_or(0, |p| shift_outer(p, i, m)),
        };
    }
    LabeledTree::from_parents(parent).expect("substitution of trees is a tree")
}

/// The NAP composition `T ∘_i S`.
pub fn nap_compose(t: &LabeledTree, i: usize, s: &LabeledTree) -> Result<LabeledTree> {
    check_slot(t, i)?;
    let attach = vec![s.root(); t.children(i).len()];
    Ok(substitute(t, i, s, &attach))
}

/// The pre-Lie composition `T ∘_i S`: the sum over all maps from the
/// children of `i` to the vertices of `S`.
pub fn pl_compose(t: &LabeledTree, i: usize, s: &LabeledTree) -> Result<LabeledElement> {
    check_slot(t, i)?;
    let p = t.children(i).len();
    let m = s.size();
    let mut out = LabeledElement::zero();
    let mut attach = vec![1; p];
    loop {
        out.add_term(substitute(t, i, s, &attach), Rational::one());
        // next map in lexicographic order
        let Some(q) = attach.iter().rposition(|&a| a < m) else { return Ok(out) };
        attach[q] += 1;
        for a in &mut attach[q + 1..] {
            *a = 1;
        }
    }
}

/// A partial composition on labeled trees, extended bilinearly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Composition {
    Nap,
    PreLie,
    /// The NAP composition with the block of `S` labeled in reverse; a
    /// negative control that violates the unit and associativity axioms.
    Corrupted,
}

impl Composition {
    pub fn compose(self, t: &LabeledTree, i: usize, s: &LabeledTree) -> Result<LabeledElement> {
        match self {
            Composition::Nap => Ok(LinComb::basis(nap_compose(t, i, s)?)),
            Composition::PreLie => pl_compose(t, i, s),
            Composition::Corrupted => {
                let m = s.size();
                let reverse = Permutation::new((1..=m).rev().collect())?;
                let composed = nap_compose(t, i, s)?;
                let block = Permutation::identity(t.size()).block_compose(i, &reverse)?;
                Ok(LinComb::basis(composed.act(&block)?))
            }
        }
    }

    pub fn compose_lin(self, x: &LabeledElement, i: usize, y: &LabeledElement) -> Result<LabeledElement> {
        let mut out = LabeledElement::zero();
        for (t, c) in x.iter() {
            for (s, d) in y.iter() {
                out.add_scaled(&(c * d), &self.compose(t, i, s)?);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Composition::Nap => "nap",
            Composition::PreLie => "prelie",
            Composition::Corrupted => "corrupted",
        })
    }
}

pub fn act_lin(x: &LabeledElement, sigma: &Permutation) -> Result<LabeledElement> {
    let mut out = LabeledElement::zero();
    for (t, c) in x.iter() {
        out.add_term(t.act(sigma)?, c.clone());
    }
    Ok(out)
}

fn trees_up_to(n: usize) -> Vec<LabeledTree> {
    (1..=n).flat_map(|k| enumerate_labeled(k).expect("positive size")).collect()
}

/// The axioms of an operad for a single triple of operands.
struct AxiomCase<'a> {
    comp: Composition,
    t: &'a LabeledTree,
    s: &'a LabeledTree,
    r: &'a LabeledTree,
}

impl AxiomCase<'_> {
    fn lin(t: &LabeledTree) -> LabeledElement {
        LinComb::basis(t.clone())
    }

    /// `(T ∘_i S) ∘_{i-1+j} R = T ∘_i (S ∘_j R)`.
    fn sequential(&self, i: usize, j: usize) -> Result<bool> {
        let c = self.comp;
        let lhs = c.compose_lin(&c.compose(self.t, i, self.s)?, i - 1 + j, &Self::lin(self.r))?;
        let rhs = c.compose_lin(&Self::lin(self.t), i, &c.compose(self.s, j, self.r)?)?;
        Ok(lhs == rhs)
    }

    /// `(T ∘_j S) ∘_i R = (T ∘_i R) ∘_{j-1+|R|} S` for `i < j`.
    fn parallel(&self, i: usize, j: usize) -> Result<bool> {
        let c = self.comp;
        let lhs = c.compose_lin(&c.compose(self.t, j, self.s)?, i, &Self::lin(self.r))?;
        let rhs = c.compose_lin(&c.compose(self.t, i, self.r)?, j - 1 + self.r.size(), &Self::lin(self.s))?;
        Ok(lhs == rhs)
    }
}

fn unit_holds(comp: Composition, t: &LabeledTree) -> Result<Option<String>> {
    let one = LabeledTree::single();
    let expected = LinComb::basis(t.clone());
    if comp.compose(&one, 1, t)? != expected {
        return Ok(Some(format!("1 ∘_1 {t} = {}", comp.compose(&one, 1, t)?)));
    }
    for i in 1..=t.size() {
        let got = comp.compose(t, i, &one)?;
        if got != expected {
            return Ok(Some(format!("{t} ∘_{i} 1 = {got}")));
        }
    }
    Ok(None)
}

fn equivariance_holds(
    comp: Composition,
    t: &LabeledTree,
    i: usize,
    s: &LabeledTree,
    sigma: &Permutation,
    tau: &Permutation,
) -> Result<Option<String>> {
    let lhs = comp.compose(&t.act(sigma)?, i, &s.act(tau)?)?;
    let rhs = act_lin(&comp.compose(t, sigma.apply(i), s)?, &sigma.block_compose(i, tau)?)?;
    if lhs == rhs {
        Ok(None)
    } else {
        Ok(Some(format!("σ = {sigma}, τ = {tau}: {t}·σ ∘_{i} {s}·τ = {lhs}, expected {rhs}")))
    }
}

/// Checks the unit, sequential and parallel associativity and equivariance
/// axioms of `comp`.
///
/// Every combination of operands with at most three vertices is checked;
/// with `max_arity = 4` a seeded sample of cases with four-vertex operands
/// is added.
pub fn check_operad_axioms(comp: Composition, max_arity: usize, seed: u64) -> Result<CheckReport> {
    if max_arity > 4 {
        return Err(Error::ArityTooLarge(max_arity));
    }
    if max_arity == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut report = CheckReport::new(format!("operad axioms ({comp})"));
    let small = trees_up_to(max_arity.min(3));

    for t in &small {
        let witness = unit_holds(comp, t)?;
        if !report.record(witness.is_none(), || format!("unit: {}", witness.unwrap_or_default())) {
            return Ok(report);
        }
    }
    for t in &small {
        for s in &small {
            for r in &small {
                if !associativity(&mut report, &AxiomCase { comp, t, s, r })? {
                    return Ok(report);
                }
            }
        }
    }
    for t in &small {
        for s in &small {
            for i in 1..=t.size() {
                for sigma in Permutation::all(t.size()) {
                    for tau in Permutation::all(s.size()) {
                        let witness = equivariance_holds(comp, t, i, s, &sigma, &tau)?;
                        if !report.record(witness.is_none(), || format!("equivariance: {}", witness.unwrap_or_default())) {
                            return Ok(report);
                        }
                    }
                }
            }
        }
    }

    if max_arity == 4 {
        let large = trees_up_to(4);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pick = |rng: &mut ChaCha8Rng| large.choose(rng).expect("nonempty").clone();
        for _ in 0..64 {
            let (t, s, r) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let witness = unit_holds(comp, &t)?;
            if !report.record(witness.is_none(), || format!("unit: {}", witness.unwrap_or_default())) {
                return Ok(report);
            }
            if !associativity(&mut report, &AxiomCase { comp, t: &t, s: &s, r: &r })? {
                return Ok(report);
            }
            let all_sigma = Permutation::all(t.size());
            let all_tau = Permutation::all(s.size());
            let sigma = all_sigma.choose(&mut rng).expect("nonempty");
            let tau = all_tau.choose(&mut rng).expect("nonempty");
            let i = rng.gen_range(1..=t.size());
            let witness = equivariance_holds(comp, &t, i, &s, sigma, tau)?;
            if !report.record(witness.is_none(), || format!("equivariance: {}", witness.unwrap_or_default())) {
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Records all associativity cases for one triple; `false` once a case fails.
fn associativity(report: &mut CheckReport, case: &AxiomCase<'_>) -> Result<bool> {
    let (t, s, r) = (case.t, case.s, case.r);
    for i in 1..=t.size() {
        for j in 1..=s.size() {
            let ok = case.sequential(i, j)?;
            if !report.record(ok, || format!("sequential associativity: ({t} ∘_{i} {s}) ∘_{} {r}", i - 1 + j)) {
                return Ok(false);
            }
        }
        for j in i + 1..=t.size() {
            let ok = case.parallel(i, j)?;
            if !report.record(ok, || format!("parallel associativity: ({t} ∘_{j} {s}) ∘_{i} {r}")) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The binary generator `μ`: root 1 with child 2.
pub fn mu() -> LabeledTree {
    LabeledTree::from_parents(vec![0, 1]).expect("valid")
}

/// The image of the NAP relator `μ ∘_1 μ − (μ ∘_1 μ)·τ23` in `T(3)`.
pub fn nap_relator_image() -> LabeledElement {
    let m = mu();
    let composed = nap_compose(&m, 1, &m).expect("slot 1 exists");
    let tau = Permutation::transposition(3, 2, 3).expect("valid");
    let mut out = LinComb::basis(composed.clone());
    out.add_term(composed.act(&tau).expect("same size"), -Rational::one());
    out
}

/// Splits `T = B(r, T1, …, Tn)` at the root child `c` into `B(r, T1)` and
/// `B(r, T2, …, Tn)` with `T1` the subtree at `c`, and recomposes them with
/// the NAP composition at `r`. The result is relabeled back through the
/// provenance of each vertex, so it equals `T` exactly when the
/// decomposition holds.
pub fn recompose_at_root_child(t: &LabeledTree, c: usize) -> Result<LabeledTree> {
    let r = t.root();
    if t.parent(c) != Some(r) {
        return Err(Error::InvalidLabeledTree(format!("{c} is not a child of the root of {t}")));
    }
    let first: Vec<usize> = (1..=t.size()).filter(|&v| v == r || t.is_descendant(v, c)).collect();
    let rest: Vec<usize> = (1..=t.size()).filter(|&v| v == r || !t.is_descendant(v, c)).collect();
    let a = restrict(t, &first);
    let b = restrict(t, &rest);
    let slot = first.iter().position(|&v| v == r).expect("root kept") + 1;
    let composed = nap_compose(&a, slot, &b)?;
    // provenance: label in the composite -> label in `t`
    let m = b.size();
    let origin = |v: usize| {
        if v < slot {
            first[v - 1]
        } else if v < slot + m {
            rest[v - slot]
        } else {
            first[v - m]
        }
    };
    let mut parent = vec![0; t.size()];
    for v in 1..=composed.size() {
        parent[origin(v) - 1] = composed.parent(v).map_or(0, origin);
    }
    LabeledTree::from_parents(parent)
}

/// The subtree induced on `vertices` (sorted, closed under parents within
/// the set), relabeled `1..k` in increasing order.
fn restrict(t: &LabeledTree, vertices: &[usize]) -> LabeledTree {
    let index = |v: usize| vertices.iter().position(|&w| w == v).map(|p| p + 1);
    let parent = vertices.iter().map(|&v| t.parent(v).and_then(index).unwrap_or(0)).collect();
    LabeledTree::from_parents(parent).expect("restriction to a rooted subset")
}

/// The presentation of the NAP operad by `μ`: the relator dies in `T(3)`,
/// and every labeled tree with at most `max_size` vertices recomposes from
/// `B(r, T1) ∘_r B(r, T2, …, Tn)` for every choice of `T1`.
pub fn nap_presentation_check(max_size: usize) -> CheckReport {
    let mut report = CheckReport::new("nap presentation");
    let relator = nap_relator_image();
    if !report.record(relator.is_zero(), || format!("relator image {relator}")) {
        return report;
    }
    for t in trees_up_to(max_size) {
        for c in t.children(t.root()) {
            let back = recompose_at_root_child(&t, c).expect("c is a root child");
            if !report.record(back == t, || format!("decomposing {t} at {c} gives {back}")) {
                return report;
            }
        }
    }
    report
}

/// Evaluates a labeled tree on `inputs` in the free NAP algebra: vertex `v`
/// carries `inputs[v-1]` and each vertex multiplies its children on the
/// right, `B(v, T1, …, Tn) ↦ ((x_v · T1) · …) · Tn`.
pub fn ev_nap(t: &LabeledTree, inputs: &[Element]) -> Element {
    fn at(t: &LabeledTree, v: usize, inputs: &[Element]) -> Element {
        t.children(v).into_iter().fold(inputs[v - 1].clone(), |acc, c| nap_product(&acc, &at(t, c, inputs)))
    }
    at(t, t.root(), inputs)
}

/// Evaluates a labeled tree on `inputs` in the free pre-Lie algebra, as the
/// pre-Lie morphism sending the generator `x_v` to `inputs[v-1]`.
pub fn ev_pl(t: &LabeledTree, inputs: &[Element]) -> Element {
    let eval = TrickEvaluator::new(
        |l| inputs[generator_index(l).expect("generator label") - 1].clone(),
        prelie_product,
    );
    eval.eval(&t.to_rooted(&ordered_generators(t.size())))
}

pub fn ev_lin(x: &LabeledElement, inputs: &[Element], ev: impl Fn(&LabeledTree, &[Element]) -> Element) -> Element {
    x.map_linear(|t| ev(t, inputs))
}

/// Distinct one-vertex inputs `a, b, c, …`.
pub fn letter_inputs(n: usize) -> Vec<Element> {
    (0..n)
        .map(|k| {
            let name = char::from(b'a' + (k % 26) as u8).to_string();
            Element::basis(RootedTree::leaf(crate::tree::Label::new(&name).expect("letter")))
        })
        .collect()
}

type Evaluator = fn(&LabeledTree, &[Element]) -> Element;

/// Evaluation of compositions against the algebra structure, for all pairs
/// of labeled trees of total size at most `max_size`:
///
/// - `ev((μ ∘_2 S) ∘_1 T) = ev(T) · ev(S)` for the matching product;
/// - `ev(T ∘_i S)(x) = ev(T)(x_1, …, ev(S)(x_i, …), …)`.
pub fn evaluation_check(comp: Composition, max_size: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("evaluation ({comp})"));
    let (ev, product): (Evaluator, fn(&Element, &Element) -> Element) = match comp {
        Composition::PreLie => (ev_pl, prelie_product),
        _ => (ev_nap, nap_product),
    };
    let trees = trees_up_to(max_size.saturating_sub(1).max(1));
    let m = mu();
    for t in &trees {
        for s in &trees {
            let (p, q) = (t.size(), s.size());
            if p + q > max_size {
                continue;
            }
            let x = letter_inputs(p + q);
            let built = comp
                .compose_lin(&comp.compose(&m, 2, s).expect("slot 2"), 1, &LinComb::basis(t.clone()))
                .expect("slot 1");
            let lhs = ev_lin(&built, &x, ev);
            let rhs = product(&ev(t, &x[..p]), &ev(s, &x[p..]));
            if !report.record(lhs == rhs, || format!("(μ ∘_2 {s}) ∘_1 {t}: {lhs} vs {rhs}")) {
                return report;
            }
            let x = letter_inputs(p + q - 1);
            for i in 1..=p {
                let lhs = ev_lin(&comp.compose(t, i, s).expect("valid slot"), &x, ev);
                let mut outer: Vec<Element> = x[..i - 1].to_vec();
                outer.push(ev(s, &x[i - 1..i - 1 + q]));
                outer.extend_from_slice(&x[i - 1 + q..]);
                let rhs = ev(t, &outer);
                if !report.record(lhs == rhs, || format!("{t} ∘_{i} {s}: {lhs} vs {rhs}")) {
                    return report;
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lt(parents: &[usize]) -> LabeledTree {
        LabeledTree::from_parents(parents.to_vec()).unwrap()
    }

    fn e(s: &str) -> Element {
        Element::parse(s).unwrap()
    }

    #[test]
    fn composition_of_the_figure() {
        // root 2 with children 1, 3; composed at 2 with root 1, child 2
        let t = lt(&[2, 0, 2]);
        let s = lt(&[0, 1]);
        assert_eq!(nap_compose(&t, 2, &s).unwrap(), lt(&[2, 0, 2, 2]));
    }

    #[test]
    fn units() {
        let t = lt(&[2, 0, 2]);
        for i in 1..=3 {
            assert_eq!(nap_compose(&t, i, &LabeledTree::single()).unwrap(), t);
        }
        assert_eq!(nap_compose(&LabeledTree::single(), 1, &t).unwrap(), t);
        assert_eq!(pl_compose(&t, 3, &LabeledTree::single()).unwrap(), LinComb::basis(t.clone()));
        assert!(matches!(nap_compose(&t, 4, &t), Err(Error::VertexOutOfRange { index: 4, size: 3 })));
        assert!(pl_compose(&t, 0, &t).is_err());
    }

    #[test]
    fn mu_composed_with_mu() {
        let m = mu();
        let composed = pl_compose(&m, 1, &m).unwrap();
        // the child of slot 1 lands on the root or the leaf of S
        let expected = LinComb::from_terms([(lt(&[0, 1, 1]), Rational::one()), (lt(&[0, 1, 2]), Rational::one())]);
        assert_eq!(composed, expected);
        assert_eq!(composed.coeff(&nap_compose(&m, 1, &m).unwrap()), Rational::one());
        assert_eq!(pl_compose(&m, 2, &m).unwrap(), LinComb::basis(lt(&[0, 1, 2])));
    }

    #[test]
    fn evaluating_mu_compositions() {
        let m = mu();
        let (a, b, c) = (e("1 * a"), e("1 * b"), e("1 * c"));
        let x = [a.clone(), b.clone(), c.clone()];
        let left = ev_lin(&pl_compose(&m, 1, &m).unwrap(), &x, ev_pl);
        assert_eq!(left, prelie_product(&prelie_product(&a, &b), &c));
        let right = ev_lin(&pl_compose(&m, 2, &m).unwrap(), &x, ev_pl);
        assert_eq!(right, prelie_product(&a, &prelie_product(&b, &c)));
        let nap = ev_nap(&nap_compose(&m, 1, &m).unwrap(), &x);
        assert_eq!(nap, nap_product(&nap_product(&a, &b), &c));
    }

    #[test]
    fn relator_vanishes() {
        assert!(nap_relator_image().is_zero());
        assert_eq!(nap_compose(&mu(), 1, &mu()).unwrap(), lt(&[0, 1, 1]));
    }

    #[test]
    fn decomposition_on_three_vertices() {
        let report = nap_presentation_check(3);
        assert!(report.passed(), "{report}");
        // 9 trees; the relator plus one case per root child
        let root_children: usize = trees_up_to(3).iter().map(|t| t.children(t.root()).len()).sum();
        assert_eq!(report.cases, 1 + root_children);
    }

    #[test]
    fn decomposition_is_independent_of_the_choice() {
        for t in enumerate_labeled(4).unwrap() {
            for c in t.children(t.root()) {
                assert_eq!(recompose_at_root_child(&t, c).unwrap(), t);
            }
        }
    }

    #[test]
    fn axioms_hold_up_to_arity_three() {
        for comp in [Composition::Nap, Composition::PreLie] {
            let report = check_operad_axioms(comp, 3, 0).unwrap();
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn corrupted_composition_is_caught() {
        let report = check_operad_axioms(Composition::Corrupted, 3, 0).unwrap();
        assert!(!report.passed());
        assert!(report.failure.unwrap().starts_with("unit"));
        assert!(matches!(check_operad_axioms(Composition::Nap, 5, 0), Err(Error::ArityTooLarge(5))));
    }

    #[test]
    fn evaluation_agrees_with_products() {
        for comp in [Composition::Nap, Composition::PreLie] {
            let report = evaluation_check(comp, 4);
            assert!(report.passed(), "{report}");
        }
    }
}
