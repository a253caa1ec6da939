//! The NAP coproduct, its iterates and the distributive law.

use prelie::algebra::{insert_after_each, module_action};
use prelie::checks::iterated_dlaw_defect;
use prelie::coalgebra::{coproduct, delta_k};
use prelie::prelie::prelie_product;
use prelie::{Element, FreePreLie, Result};

pub fn run_example() -> Result<()> {
    let t = Element::parse("a[b,c[d]]")?;
    for k in 1..=4 {
        println!("Δ^{k}({t}) = {}", delta_k(&t, k));
    }
    // images of Δ^k are symmetric in all but the first slot
    assert!(delta_k(&t, 3).is_invariant_1k());

    let (x, y) = (Element::parse("a[b]")?, Element::parse("c")?);
    let lhs = coproduct(&prelie_product(&x, &y));
    let free = FreePreLie::default();
    let rhs = module_action(&free, &coproduct(&x), &y).try_add(&insert_after_each(&y, &x.as_tensor())?)?;
    assert_eq!(lhs, rhs);
    println!("Δ(x∘y) = {lhs}");
    for k in 1..=3 {
        assert!(iterated_dlaw_defect(&free, &x, &y, k).is_zero());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
