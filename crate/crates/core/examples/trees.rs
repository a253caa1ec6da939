//! Canonical rooted trees: parsing, grafting and enumeration.

use prelie::tree::{enumerate_heap_ordered, enumerate_labeled, enumerate_trees};
use prelie::{parse_tree, Label, Result};

pub fn run_example() -> Result<()> {
    // children are unordered, so both spellings give the same tree
    let t = parse_tree("a[c, b[d]]")?;
    assert_eq!(t, parse_tree("a[b[d],c]")?);
    println!("{t}: degree {}, root arity {}", t.degree(), t.arity());

    // vertices are numbered in pre-order from the root
    let s = parse_tree("x")?;
    for v in 0..t.degree() {
        println!("graft {s} at vertex {v}: {}", t.graft(v, &s)?);
    }

    let a = [Label::new("a")?];
    let counts: Vec<usize> = (1..=7).map(|n| enumerate_trees(&a, n).map(|ts| ts.len())).collect::<Result<_>>()?;
    println!("rooted trees on one generator: {counts:?}");
    let labeled: Vec<usize> = (1..=5).map(|n| enumerate_labeled(n).map(|ts| ts.len())).collect::<Result<_>>()?;
    println!("labeled rooted trees: {labeled:?}");
    let heap: Vec<usize> = (1..=6).map(|n| enumerate_heap_ordered(n).map(|ts| ts.len())).collect::<Result<_>>()?;
    println!("heap-ordered trees: {heap:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
