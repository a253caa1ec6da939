//! Permutations of `{1..n}` in one-line notation.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1..n}`, stored as its list of images `σ(1), …, σ(n)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i > n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..{n}")));
            }
            seen[i] = true;
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// The transposition exchanging `a` and `b` in `Σ_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(format!("({a} {b}) outside 1..{n}")));
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Ok(Self(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `σ(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch { expected: self.len(), found: other.len() });
        }
        Ok(Self(other.0.iter().map(|&i| self.apply(i)).collect()))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j - 1] = i + 1;
        }
        Self(inv)
    }

    /// All of `Σ_n` in lexicographic order of the image list.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == n {
                out.push(Permutation(current.clone()));
                return;
            }
            for i in 1..=n {
                if !used[i] {
                    used[i] = true;
                    current.push(i);
                    rec(n, current, used, out);
                    current.pop();
                    used[i] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }

    /// Block composition `σ ∘_i τ ∈ Σ_{n+m-1}`: `τ` acts on the block `i..i+m-1`
    /// that replaces slot `i`, and `σ` permutes the blocks.
    pub fn block_compose(&self, i: usize, tau: &Permutation) -> Result<Self> {
        let n = self.len();
        let m = tau.len();
        if i == 0 || i > n {
            return Err(Error::VertexOutOfRange { index: i, size: n });
        }
        let target = self.apply(i);
        let shift = |old: usize| if old > target { old + m - 1 } else { old };
        let mut images = Vec::with_capacity(n + m - 1);
        for j in 1..i {
            images.push(shift(self.apply(j)));
        }
        for j in 1..=m {
            images.push(target - 1 + tau.apply(j));
        }
        for j in i + 1..=n {
            images.push(shift(self.apply(j)));
        }
        Ok(Self(images))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}
