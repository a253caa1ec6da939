//! Rebuilding a presented algebra as the free pre-Lie algebra on its
//! primitives, before and after a random change of basis.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use prelie::linear::integer;
use prelie::presented::PresentedAlgebra;
use prelie::reconstruct::reconstruct;
use prelie::{FreePreLie, Label, Result, Tensor};

pub fn run_example() -> Result<()> {
    let (alg, names) = PresentedAlgebra::from_free(&FreePreLie::on(&["a"])?, 5)?;
    println!("{alg}; t3_2 is {}", names[&Label::new("t3_2")?]);

    let report = reconstruct(&alg.clone().validate()?, 5)?;
    println!("{report}");
    for (p, v) in &report.primitives {
        println!("  {p} = {v}");
    }

    let shuffled = alg.change_basis(&mut ChaCha8Rng::seed_from_u64(42));
    println!("after a change of basis: {}", reconstruct(&shuffled.validate()?, 5)?);

    // doubling Δ(t2_1) breaks the distributive law
    let t = Label::new("t1_1")?;
    let bad = alg.with_coproduct(&Label::new("t2_1")?, Tensor::pure(vec![t.clone(), t]).scale(&integer(2)));
    match bad.validate() {
        Ok(_) => unreachable!("the perturbed algebra is not a Hopf pre-Lie algebra"),
        Err(e) => println!("perturbed: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
