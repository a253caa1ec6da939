//! The pre-Lie and NAP products on rooted trees.

use prelie::prelie::{associator, bracket, nap_product, prelie_product};
use prelie::{Element, Result};

pub fn run_example() -> Result<()> {
    let (x, y, z) = (Element::parse("a[b]")?, Element::parse("c")?, Element::parse("d")?);
    println!("a[b] ∘ c = {}", prelie_product(&x, &y));
    println!("a[b] · c = {}", nap_product(&x, &y));
    println!("a[b,b] ∘ c = {}", prelie_product(&Element::parse("a[b,b]")?, &y));
    println!("[a, b] = {}", bracket(&Element::parse("a")?, &Element::parse("b")?));

    // the associator is symmetric in its last two arguments
    let xyz = associator(&x, &y, &z);
    assert_eq!(xyz, associator(&x, &z, &y));
    println!("(x∘y)∘z − x∘(y∘z) = {xyz}");

    // elements with rational coefficients
    let u = Element::parse("1/2 * a - 3 * b[a]")?;
    println!("({u}) ∘ ({u}) = {}", prelie_product(&u, &u));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
