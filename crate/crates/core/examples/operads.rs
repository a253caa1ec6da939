//! Partial compositions of the NAP and pre-Lie operads on labeled trees.

use prelie::operads::{
    check_operad_axioms, ev_lin, ev_pl, mu, nap_compose, nap_presentation_check, nap_relator_image, pl_compose,
    Composition,
};
use prelie::prelie::prelie_product;
use prelie::{Element, LabeledTree, Result};

pub fn run_example() -> Result<()> {
    // root 2 with children 1, 3, composed at 2 with the tree 1 → 2
    let t = LabeledTree::parse("3;2;2,0,2")?;
    let s = LabeledTree::parse("2;1;0,1")?;
    println!("{t} ∘_2 {s} = {}", nap_compose(&t, 2, &s)?);

    let m = mu();
    println!("μ ∘_1 μ = {}", pl_compose(&m, 1, &m)?);
    println!("μ ∘_2 μ = {}", pl_compose(&m, 2, &m)?);
    let x: Vec<Element> = ["a", "b", "c"].iter().map(|s| Element::parse(s)).collect::<Result<_>>()?;
    let left = ev_lin(&pl_compose(&m, 1, &m)?, &x, ev_pl);
    assert_eq!(left, prelie_product(&prelie_product(&x[0], &x[1]), &x[2]));
    println!("ev(μ ∘_1 μ)(a, b, c) = {left}");

    assert!(nap_relator_image().is_zero());
    for comp in [Composition::Nap, Composition::PreLie, Composition::Corrupted] {
        println!("{}", check_operad_axioms(comp, 3, 0)?);
    }
    println!("{}", nap_presentation_check(4));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
