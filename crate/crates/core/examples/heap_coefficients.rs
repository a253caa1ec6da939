//! `A_k(x1 ⊗ … ⊗ xk)` on distinct generators is a sum over heap-ordered trees.

use prelie::rigidity::{heap_coefficients, heap_coefficients_by_recursion};
use prelie::Result;

pub fn run_example() -> Result<()> {
    for k in 1..=4 {
        let c = heap_coefficients(k)?;
        assert_eq!(c, heap_coefficients_by_recursion(k)?);
        println!("k = {k}:");
        for (u, coeff) in &c.coeffs {
            println!("  c({u}) = {coeff}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
