//! Formal rational linear combinations over a basis, their tensor powers,
//! and the exact linear algebra built on them.
//!
//! Combinations serialize as `c1 * b1 + c2 * b2` with rationals written `p/q`;
//! tensor factors are separated by `(x)`. Terms appear in basis order.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::perm::Permutation;
use crate::tree::{Label, RootedTree, TreeParser};

/// Exact rationals; arbitrary precision, always reduced.
pub type Rational = num_rational::BigRational;

/// A finite linear combination of rooted trees.
pub type Element = LinComb<RootedTree>;

/// A finite linear combination of tuples of rooted trees.
pub type TensorElement = Tensor<RootedTree>;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Anything usable as a basis vector index.
pub trait Basis: Clone + Ord + Hash + Display + Debug {}

impl<T: Clone + Ord + Hash + Display + Debug> Basis for T {}

/// A linear combination `Σ c_b · b` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Basis> {
    terms: BTreeMap<B, Rational>,
}

impl<B: Basis> Default for LinComb<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Basis> LinComb<B> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn basis(b: B) -> Self {
        Self::term(Rational::one(), b)
    }

    pub fn term(c: Rational, b: B) -> Self {
        let mut x = Self::zero();
        x.add_term(b, c);
        x
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (B, Rational)>) -> Self {
        let mut x = Self::zero();
        for (b, c) in terms {
            x.add_term(b, c);
        }
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Rational {
        self.terms.get(b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, b: B, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &LinComb<B>) {
        if c.is_zero() {
            return;
        }
        for (b, d) in &other.terms {
            self.add_term(b.clone(), c * d);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(b, d)| (b.clone(), c * d)).collect() }
    }

    /// Extends a basis map `f` linearly.
    pub fn map_linear<C: Basis>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b));
        }
        out
    }

    /// Extends a basis map into tensors linearly.
    pub fn map_to_tensor<C: Basis>(&self, rank: usize, mut f: impl FnMut(&B) -> Tensor<C>) -> Tensor<C> {
        let mut out = Tensor::zero(rank);
        for (b, c) in &self.terms {
            out.add_scaled(c, &f(b));
        }
        out
    }

    /// The part of `self` supported on basis vectors where `keep` holds.
    pub fn filter(&self, mut keep: impl FnMut(&B) -> bool) -> Self {
        Self { terms: self.terms.iter().filter(|(b, _)| keep(b)).map(|(b, c)| (b.clone(), c.clone())).collect() }
    }

    pub fn as_tensor(&self) -> Tensor<B> {
        Tensor { rank: 1, terms: self.terms.iter().map(|(b, c)| (vec![b.clone()], c.clone())).collect() }
    }
}

impl Element {
    /// Parses `c1 * tree1 + c2 * tree2 …` (or `0`).
    pub fn parse(text: &str) -> Result<Self> {
        let t = parse_tensor_with(text, |p| p.tree())?;
        t.into_element()
    }

    /// Largest tree degree present (0 for the zero element).
    pub fn max_degree(&self) -> usize {
        self.support().map(RootedTree::degree).max().unwrap_or(0)
    }

    /// Homogeneous component of degree `n`.
    pub fn component(&self, n: usize) -> Self {
        self.filter(|t| t.degree() == n)
    }

    pub fn is_homogeneous(&self, n: usize) -> bool {
        self.support().all(|t| t.degree() == n)
    }
}

impl LinComb<Label> {
    pub fn parse_named(text: &str) -> Result<Self> {
        parse_tensor_with(text, |p| p.label())?.into_element()
    }
}

impl<B: Basis> Add for LinComb<B> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<B: Basis> Add<&LinComb<B>> for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), rhs);
        out
    }
}

impl<B: Basis> AddAssign for LinComb<B> {
    fn add_assign(&mut self, rhs: Self) {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
    }
}

impl<B: Basis> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        self.add_scaled(&Rational::one(), rhs);
    }
}

impl<B: Basis> Sub for LinComb<B> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl<B: Basis> Sub<&LinComb<B>> for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), rhs);
        out
    }
}

impl<B: Basis> SubAssign for LinComb<B> {
    fn sub_assign(&mut self, rhs: Self) {
        for (b, c) in rhs.terms {
            self.add_term(b, -c);
        }
    }
}

impl<B: Basis> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        self.add_scaled(&-Rational::one(), rhs);
    }
}

impl<B: Basis> Neg for LinComb<B> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect() }
    }
}

impl<B: Basis> Mul<&LinComb<B>> for &Rational {
    type Output = LinComb<B>;
    fn mul(self, rhs: &LinComb<B>) -> LinComb<B> {
        rhs.scale(self)
    }
}

impl<B: Basis> Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(b, c)| (c, b.to_string())))
    }
}

impl<B: Basis> Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinComb({self})")
    }
}

fn write_terms<'a>(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (&'a Rational, String)>) -> fmt::Result {
    let mut first = true;
    for (c, b) in terms {
        if first {
            write!(f, "{c} * {b}")?;
            first = false;
        } else if c.is_negative() {
            write!(f, " - {} * {b}", -c)?;
        } else {
            write!(f, " + {c} * {b}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// A combination `Σ c · (b1 ⊗ … ⊗ bk)` of fixed rank `k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tensor<B: Basis> {
    rank: usize,
    terms: BTreeMap<Vec<B>, Rational>,
}

impl<B: Basis> Tensor<B> {
    pub fn zero(rank: usize) -> Self {
        Self { rank, terms: BTreeMap::new() }
    }

    pub fn pure(factors: Vec<B>) -> Self {
        Self::pure_scaled(Rational::one(), factors)
    }

    pub fn pure_scaled(c: Rational, factors: Vec<B>) -> Self {
        let mut t = Self::zero(factors.len());
        t.add_term(factors, c);
        t
    }

    /// `x1 ⊗ … ⊗ xk`, distributing over the sums.
    pub fn product_of(factors: &[LinComb<B>]) -> Self {
        let mut acc = Self::pure(Vec::new());
        for x in factors {
            acc = acc.concat(&x.as_tensor());
        }
        acc
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<B>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, factors: &[B]) -> Rational {
        self.terms.get(factors).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, factors: Vec<B>, c: Rational) {
        assert_eq!(factors.len(), self.rank, "tensor term of the wrong rank");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(factors) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`. Both must have the same rank unless `other` is zero.
    pub fn add_scaled(&mut self, c: &Rational, other: &Tensor<B>) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        assert_eq!(self.rank, other.rank, "tensor rank mismatch");
        for (f, d) in &other.terms {
            self.add_term(f.clone(), c * d);
        }
    }

    /// Checked sum.
    pub fn try_add(&self, other: &Tensor<B>) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: other.rank });
        }
        let mut out = self.clone();
        out.add_scaled(&Rational::one(), other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Tensor<B>) -> Result<Self> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: other.rank });
        }
        let mut out = self.clone();
        out.add_scaled(&-Rational::one(), other);
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        Self { rank: self.rank, terms: self.terms.iter().map(|(f, d)| (f.clone(), c * d)).collect() }
    }

    /// `self ⊗ other`.
    pub fn concat(&self, other: &Tensor<B>) -> Self {
        let mut out = Self::zero(self.rank + other.rank);
        for (f, c) in &self.terms {
            for (g, d) in &other.terms {
                let mut h = f.clone();
                h.extend(g.iter().cloned());
                out.add_term(h, c * d);
            }
        }
        out
    }

    /// Applies a linear map to every pure tensor and sums.
    pub fn map_terms<C: Basis>(&self, rank: usize, mut f: impl FnMut(&[B]) -> Tensor<C>) -> Tensor<C> {
        let mut out = Tensor::zero(rank);
        for (factors, c) in &self.terms {
            out.add_scaled(c, &f(factors));
        }
        out
    }

    /// Applies a linear map to every pure tensor, landing in a combination.
    pub fn map_to_lincomb<C: Basis>(&self, mut f: impl FnMut(&[B]) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (factors, c) in &self.terms {
            out.add_scaled(c, &f(factors));
        }
        out
    }

    /// Applies `f` to tensor slot `slot` (0-based), where `f` maps a basis
    /// vector to a tensor of rank `width`.
    pub fn apply_slot(&self, slot: usize, width: usize, mut f: impl FnMut(&B) -> Tensor<B>) -> Self {
        let rank = self.rank - 1 + width;
        self.map_terms(rank, |factors| {
            let image = f(&factors[slot]);
            let mut out = Tensor::zero(rank);
            for (mid, c) in image.iter() {
                let mut h = factors[..slot].to_vec();
                h.extend(mid.iter().cloned());
                h.extend(factors[slot + 1..].iter().cloned());
                out.add_term(h, c.clone());
            }
            out
        })
    }

    /// Left action on slots: `σ·(v1 ⊗ … ⊗ vn) = v_{σ⁻¹(1)} ⊗ … ⊗ v_{σ⁻¹(n)}`.
    pub fn permute(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.len() != self.rank {
            return Err(Error::SizeMismatch { expected: self.rank, found: sigma.len() });
        }
        let inv = sigma.inverse();
        let mut out = Self::zero(self.rank);
        for (f, c) in &self.terms {
            let g = (1..=self.rank).map(|i| f[inv.apply(i) - 1].clone()).collect();
            out.add_term(g, c.clone());
        }
        Ok(out)
    }

    /// Swaps two slots (0-based).
    pub fn swap_slots(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(self.rank);
        for (f, c) in &self.terms {
            let mut g = f.clone();
            g.swap(a, b);
            out.add_term(g, c.clone());
        }
        out
    }

    /// Fixed by every permutation of the last `rank - 1` slots.
    ///
    /// Checked on the adjacent transpositions generating that subgroup.
    pub fn is_invariant_1k(&self) -> bool {
        (1..self.rank.saturating_sub(1)).all(|j| self.swap_slots(j, j + 1) == *self)
    }

    /// Sum over all permutations of the last `rank - 1` slots.
    pub fn symmetrize_1k(&self) -> Self {
        let k = self.rank.saturating_sub(1);
        let mut out = Self::zero(self.rank);
        for tau in Permutation::all(k) {
            let mut images = vec![1];
            images.extend(tau.images().iter().map(|i| i + 1));
            let sigma = Permutation::new(images).expect("block permutation");
            out.add_scaled(&Rational::one(), &self.permute(&sigma).expect("rank matches"));
        }
        out
    }

    pub fn into_element(self) -> Result<LinComb<B>> {
        if self.rank != 1 {
            if self.is_zero() {
                return Ok(LinComb::zero());
            }
            return Err(Error::RankMismatch { expected: 1, found: self.rank });
        }
        Ok(LinComb::from_terms(self.terms.into_iter().map(|(mut f, c)| (f.pop().expect("rank 1"), c))))
    }
}

impl TensorElement {
    /// Parses `c * t1 (x) t2 + …`. The rank is taken from the terms; `0`
    /// alone yields a zero tensor of `default_rank`.
    pub fn parse(text: &str, default_rank: usize) -> Result<Self> {
        let t = parse_tensor_with(text, |p| p.tree())?;
        Ok(if t.is_zero() { Tensor::zero(default_rank) } else { t })
    }
}

impl Tensor<Label> {
    pub fn parse_named(text: &str, default_rank: usize) -> Result<Self> {
        let t = parse_tensor_with(text, |p| p.label())?;
        Ok(if t.is_zero() { Tensor::zero(default_rank) } else { t })
    }
}

impl<B: Basis> Display for Tensor<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().map(|(fs, c)| {
                let parts: Vec<String> = fs.iter().map(|b| b.to_string()).collect();
                (c, parts.join(" (x) "))
            }),
        )
    }
}

impl<B: Basis> Debug for Tensor<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tensor<{}>({self})", self.rank)
    }
}

fn parse_rational(p: &mut TreeParser<'_>) -> Result<Rational> {
    let start = p.position();
    let num = p.token(|c| c.is_ascii_digit());
    if num.is_empty() {
        return Err(p.error("expected a coefficient"));
    }
    let num: BigInt = num.parse().map_err(|_| Error::Syntax { position: start, message: "bad integer".into() })?;
    if p.peek() == Some('/') {
        p.bump();
        let den = p.token(|c| c.is_ascii_digit());
        let den: BigInt = den.parse().map_err(|_| p.error("expected a denominator"))?;
        if den.is_zero() {
            return Err(p.error("zero denominator"));
        }
        Ok(Rational::new(num, den))
    } else {
        Ok(Rational::from_integer(num))
    }
}

pub(crate) fn parse_tensor_with<B: Basis>(
    text: &str,
    mut basis: impl FnMut(&mut TreeParser<'_>) -> Result<B>,
) -> Result<Tensor<B>> {
    let mut p = TreeParser::new(text);
    if p.at_end() {
        return Err(p.error("empty combination"));
    }
    let mut terms: Vec<(Vec<B>, Rational)> = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        match p.peek() {
            Some('+') if !first => p.bump(),
            Some('-') => {
                p.bump();
                negative = true;
            }
            _ if first => {}
            _ => return Err(p.error("expected '+' or '-'")),
        }
        // the coefficient is optional; labels may start with digits, so a
        // number only counts as a coefficient when `*` follows
        let save = p.checkpoint();
        let c = match parse_rational(&mut p) {
            Ok(c) if p.peek() == Some('*') => {
                p.bump();
                c
            }
            Ok(c) if first && !negative && c.is_zero() && p.at_end() => return Ok(Tensor::zero(1)),
            _ => {
                p.rewind(save);
                Rational::one()
            }
        };
        let c = if negative { -c } else { c };
        let mut factors = vec![basis(&mut p)?];
        while p.peek() == Some('(') {
            p.bump();
            p.expect('x')?;
            p.expect(')')?;
            factors.push(basis(&mut p)?);
        }
        terms.push((factors, c));
        first = false;
        if p.at_end() {
            break;
        }
    }
    let rank = terms[0].0.len();
    let mut out = Tensor::zero(rank);
    for (f, c) in terms {
        if f.len() != rank {
            return Err(Error::RankMismatch { expected: rank, found: f.len() });
        }
        out.add_term(f, c);
    }
    Ok(out)
}

/// Exact rank of the coefficient matrix of a family of degree-`n` elements.
pub fn rank_of_family(xs: &[Element], n: usize) -> Result<usize> {
    for x in xs {
        if let Some(t) = x.support().find(|t| t.degree() != n) {
            return Err(Error::Inhomogeneous { expected: n, found: t.degree() });
        }
    }
    Ok(rank_of(xs))
}

/// Rank of a family of combinations over any basis.
pub fn rank_of<B: Basis>(xs: &[LinComb<B>]) -> usize {
    let (matrix, cols) = coefficient_matrix(xs);
    linalg::rank(matrix, cols)
}

/// Rows = elements, columns = the union of their supports (in basis order).
pub fn coefficient_matrix<B: Basis>(xs: &[LinComb<B>]) -> (linalg::Matrix, usize) {
    let columns: BTreeSet<&B> = xs.iter().flat_map(|x| x.support()).collect();
    let index: HashMap<&B, usize> = columns.iter().enumerate().map(|(i, b)| (*b, i)).collect();
    let cols = columns.len();
    let matrix = xs
        .iter()
        .map(|x| {
            let mut row = vec![Rational::zero(); cols];
            for (b, c) in x.iter() {
                row[index[b]] = c.clone();
            }
            row
        })
        .collect();
    (matrix, cols)
}

/// A basis (in reduced echelon form) of the span of `xs`.
pub fn span_basis<B: Basis>(xs: &[LinComb<B>]) -> Vec<LinComb<B>> {
    let columns: Vec<B> = xs.iter().flat_map(|x| x.support().cloned()).collect::<BTreeSet<_>>().into_iter().collect();
    let (matrix, cols) = coefficient_matrix(xs);
    let (rows, _) = linalg::rref(matrix, cols);
    rows.into_iter()
        .map(|row| LinComb::from_terms(columns.iter().cloned().zip(row)))
        .collect()
}

/// Position of `x` in the filtration `C_1 ⊂ C_2 ⊂ …` of a coalgebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiltrationDegree {
    Finite(usize),
    Infinite,
}

impl Display for FiltrationDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiltrationDegree::Finite(n) => write!(f, "{n}"),
            FiltrationDegree::Infinite => f.write_str("infinite"),
        }
    }
}

/// Least `n` with `x ∈ C_n`, where `C_1 = ker Δ` and
/// `C_n = Δ⁻¹(Σ_{i<n} C_i ⊗ C_{n-i})`.
///
/// The computation runs inside the smallest span of basis vectors that
/// contains `x` and is closed under taking tensor factors of `Δ`. With `N`
/// the dimension of that span, levels up to `2N + 1` are examined; an element
/// not reached by then is reported as [`FiltrationDegree::Infinite`].
pub fn filtration_degree<B: Basis>(x: &LinComb<B>, coproduct: impl Fn(&B) -> Tensor<B>) -> Result<FiltrationDegree> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    // closure of the support under Δ factors
    let mut universe: BTreeSet<B> = x.support().cloned().collect();
    let mut frontier: Vec<B> = universe.iter().cloned().collect();
    let mut deltas: HashMap<B, Tensor<B>> = HashMap::new();
    while let Some(b) = frontier.pop() {
        let d = coproduct(&b);
        for (factors, _) in d.iter() {
            for f in factors {
                if universe.insert(f.clone()) {
                    frontier.push(f.clone());
                }
            }
        }
        deltas.insert(b, d);
    }
    let basis: Vec<B> = universe.into_iter().collect();
    let n = basis.len();
    let index: HashMap<&B, usize> = basis.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let pair = |a: &B, b: &B| index[a] * n + index[b];

    // Δ as an (n² × n) matrix, stored as rows over the n columns.
    let mut delta_rows = vec![vec![Rational::zero(); n]; n * n];
    for (j, b) in basis.iter().enumerate() {
        for (factors, c) in deltas[b].iter() {
            if factors.len() != 2 {
                return Err(Error::RankMismatch { expected: 2, found: factors.len() });
            }
            delta_rows[pair(&factors[0], &factors[1])][j] += c.clone();
        }
    }
    let coords: Vec<Rational> = basis.iter().map(|b| x.coeff(b)).collect();

    let mut levels: Vec<linalg::Matrix> = Vec::new();
    let c1 = linalg::nullspace(delta_rows.clone(), n);
    if linalg::in_span(&c1, &coords, n) {
        return Ok(FiltrationDegree::Finite(1));
    }
    levels.push(c1);
    for level in 2..=(2 * n + 1) {
        // spanning set of Σ C_i ⊗ C_{level-i}
        let mut spanning: linalg::Matrix = Vec::new();
        for i in 1..level {
            for u in &levels[i - 1] {
                for v in &levels[level - i - 1] {
                    let mut row = vec![Rational::zero(); n * n];
                    for (a, ua) in u.iter().enumerate().filter(|(_, q)| !q.is_zero()) {
                        for (b, vb) in v.iter().enumerate().filter(|(_, q)| !q.is_zero()) {
                            row[a * n + b] = ua * vb;
                        }
                    }
                    spanning.push(row);
                }
            }
        }
        let (spanning, _) = linalg::rref(spanning, n * n);
        // annihilator of the span, then C_level = ker(annihilator · Δ)
        let annihilator = linalg::nullspace(spanning, n * n);
        let constraints: linalg::Matrix = annihilator
            .iter()
            .map(|q| {
                (0..n)
                    .map(|j| {
                        q.iter()
                            .zip(&delta_rows)
                            .filter(|(qi, _)| !qi.is_zero())
                            .fold(Rational::zero(), |acc, (qi, row)| acc + qi * &row[j])
                    })
                    .collect()
            })
            .collect();
        let c = linalg::nullspace(constraints, n);
        if linalg::in_span(&c, &coords, n) {
            return Ok(FiltrationDegree::Finite(level));
        }
        levels.push(c);
    }
    Ok(FiltrationDegree::Infinite)
}
