//! The projector `e` onto primitives and the splitting `H = Prim H ⊕ H∘H`.

use prelie::checks::decomposition_dims;
use prelie::coalgebra::is_primitive;
use prelie::rigidity::{idempotent_e, Operators};
use prelie::{Element, FreePreLie, Result};

pub fn run_example() -> Result<()> {
    for s in ["a", "a[a]", "a[b]", "a[b,c]", "a[b[c]]", "b[a,a]"] {
        let x = Element::parse(s)?;
        let ex = idempotent_e(&x);
        assert!(is_primitive(&ex));
        assert_eq!(idempotent_e(&ex), ex);
        println!("e({x}) = {ex}");
    }

    // x − e(x) is an explicit sum of products
    let free = FreePreLie::default();
    let ops = Operators::new(&free);
    let x = Element::parse("a[b,c]")?;
    let w = ops.decomposable_witness(&x);
    assert_eq!(ops.mu(&w), &x - &ops.idempotent_e(&x));
    println!("{x} − e({x}) = μ({w})");

    let one = FreePreLie::on(&["a"])?;
    for d in 1..=6 {
        let dd = decomposition_dims(&one, d);
        println!("degree {d}: dim {} = {} primitive + {} decomposable", dd.total, dd.primitive, dd.decomposable);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
