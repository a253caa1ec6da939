//! Rooted trees: generator-labeled unordered trees in canonical form, and
//! trees labeled bijectively by `{1..n}`.
//!
//! A [`RootedTree`] keeps its children sorted by canonical rendering, so two
//! isomorphic trees are stored identically and compare equal by their cached
//! rendering. Vertices are addressed by their index in the pre-order traversal
//! that visits children in that canonical order (the root is vertex `0`).

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A generator name: a nonempty token over `[A-Za-z0-9_]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(Arc<str>);

impl Label {
    pub fn new(name: &str) -> Result<Self> {
        if name.is_empty() {
            return Err(Error::Syntax { position: 0, message: "empty label".into() });
        }
        if let Some((pos, c)) = name.char_indices().find(|&(_, c)| !is_label_char(c)) {
            return Err(Error::Syntax { position: pos, message: format!("invalid label character {c:?}") });
        }
        Ok(Self(Arc::from(name)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl FromStr for Label {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Label::new(s)
    }
}

pub(crate) fn is_label_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

struct Node {
    label: Label,
    children: Vec<RootedTree>,
    text: Box<str>,
    degree: usize,
}

/// An unordered rooted tree with generator labels, `B(r, T1, …, Tk)`.
#[derive(Clone)]
pub struct RootedTree(Arc<Node>);

impl RootedTree {
    pub fn leaf(label: Label) -> Self {
        Self::new(label, Vec::new())
    }

    /// Builds `B(label, children…)`; the children are put in canonical order.
    pub fn new(label: Label, mut children: Vec<RootedTree>) -> Self {
        children.sort();
        let degree = 1 + children.iter().map(RootedTree::degree).sum::<usize>();
        let mut text = String::from(label.as_str());
        if !children.is_empty() {
            text.push('[');
            for (i, c) in children.iter().enumerate() {
                if i > 0 {
                    text.push(',');
                }
                text.push_str(c.render());
            }
            text.push(']');
        }
        Self(Arc::new(Node { label, children, text: text.into_boxed_str(), degree }))
    }

    pub fn label(&self) -> &Label {
        &self.0.label
    }

    /// Child subtrees in canonical order.
    pub fn children(&self) -> &[RootedTree] {
        &self.0.children
    }

    /// Number of vertices.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Number of incoming edges at the root.
    pub fn arity(&self) -> usize {
        self.0.children.len()
    }

    /// The canonical rendering in the bracket grammar.
    pub fn render(&self) -> &str {
        &self.0.text
    }

    /// Vertex labels in canonical pre-order.
    pub fn vertex_labels(&self) -> Vec<Label> {
        let mut out = Vec::with_capacity(self.degree());
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut Vec<Label>) {
        out.push(self.label().clone());
        for c in self.children() {
            c.collect_labels(out);
        }
    }

    /// Grafts the root of `other` as a new child of vertex `vertex`.
    pub fn graft(&self, vertex: usize, other: &RootedTree) -> Result<RootedTree> {
        if vertex >= self.degree() {
            return Err(Error::VertexOutOfRange { index: vertex, size: self.degree() });
        }
        Ok(self.graft_unchecked(vertex, other))
    }

    fn graft_unchecked(&self, vertex: usize, other: &RootedTree) -> RootedTree {
        let mut children = self.children().to_vec();
        if vertex == 0 {
            children.push(other.clone());
        } else {
            let mut offset = 1;
            for child in children.iter_mut() {
                if vertex < offset + child.degree() {
                    *child = child.graft_unchecked(vertex - offset, other);
                    break;
                }
                offset += child.degree();
            }
        }
        RootedTree::new(self.label().clone(), children)
    }

    /// All trees `self ∘_v other`, one per vertex `v` in pre-order.
    pub fn graft_everywhere(&self, other: &RootedTree) -> Vec<RootedTree> {
        (0..self.degree()).map(|v| self.graft_unchecked(v, other)).collect()
    }

    /// `B(r, T1, …, Tk, other)`: grafts `other` on the root.
    pub fn graft_root(&self, other: &RootedTree) -> RootedTree {
        self.graft_unchecked(0, other)
    }

    /// The tree with the `i`-th root child removed, together with that child.
    pub fn remove_child(&self, i: usize) -> (RootedTree, RootedTree) {
        let mut children = self.children().to_vec();
        let removed = children.remove(i);
        (RootedTree::new(self.label().clone(), children), removed)
    }

    /// Replaces the `i`-th root child.
    pub fn replace_child(&self, i: usize, child: RootedTree) -> RootedTree {
        let mut children = self.children().to_vec();
        children[i] = child;
        RootedTree::new(self.label().clone(), children)
    }

    /// Degree in a graded alphabet where each label carries a positive weight.
    pub fn weighted_degree(&self, weight: &impl Fn(&Label) -> usize) -> usize {
        weight(self.label()) + self.children().iter().map(|c| c.weighted_degree(weight)).sum::<usize>()
    }
}

impl PartialEq for RootedTree {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.text == other.0.text
    }
}

impl Eq for RootedTree {}

impl PartialOrd for RootedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RootedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.text.cmp(&other.0.text)
    }
}

impl Hash for RootedTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.text.hash(state);
    }
}

impl fmt::Display for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.render())
    }
}

impl fmt::Debug for RootedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootedTree({})", self.render())
    }
}

impl FromStr for RootedTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_tree(s)
    }
}

/// Parses `tree := label ( '[' tree (',' tree)* ']' )?`. Whitespace is ignored.
pub fn parse_tree(text: &str) -> Result<RootedTree> {
    let mut p = TreeParser::new(text);
    let tree = p.tree()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(tree)
}

pub fn render_tree(tree: &RootedTree) -> String {
    tree.render().to_string()
}

pub(crate) struct TreeParser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> TreeParser<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Self { chars: src.char_indices().collect(), pos: 0, src }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    pub(crate) fn error(&self, message: &str) -> Error {
        Error::Syntax { position: self.offset(), message: message.to_string() }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|&(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    pub(crate) fn bump(&mut self) {
        self.pos += 1;
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn checkpoint(&self) -> usize {
        self.pos
    }

    pub(crate) fn rewind(&mut self, checkpoint: usize) {
        self.pos = checkpoint;
    }

    pub(crate) fn position(&self) -> usize {
        self.offset()
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    /// Consumes a run of characters matching `pred` after skipping whitespace.
    pub(crate) fn token(&mut self, pred: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.offset();
        while self.chars.get(self.pos).is_some_and(|&(_, c)| pred(c)) {
            self.pos += 1;
        }
        &self.src[start..self.offset()]
    }

    pub(crate) fn label(&mut self) -> Result<Label> {
        let tok = self.token(is_label_char);
        if tok.is_empty() {
            return Err(self.error("empty label"));
        }
        Label::new(tok)
    }

    pub(crate) fn tree(&mut self) -> Result<RootedTree> {
        let label = self.label()?;
        let mut children = Vec::new();
        if self.peek() == Some('[') {
            self.bump();
            loop {
                children.push(self.tree()?);
                match self.peek() {
                    Some(',') => self.bump(),
                    Some(']') => {
                        self.bump();
                        break;
                    }
                    _ => return Err(self.error("expected ',' or ']'")),
                }
            }
        }
        Ok(RootedTree::new(label, children))
    }
}

/// All distinct trees with `n` vertices and labels drawn from `alphabet`,
/// in lexicographic order of their canonical rendering.
pub fn enumerate_trees(alphabet: &[Label], n: usize) -> Result<Vec<RootedTree>> {
    let graded: Vec<(Label, usize)> = alphabet.iter().map(|l| (l.clone(), 1)).collect();
    enumerate_graded(&graded, n)
}

/// Trees whose total label weight is `n`, for an alphabet of weighted labels.
pub fn enumerate_graded(alphabet: &[(Label, usize)], n: usize) -> Result<Vec<RootedTree>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if alphabet.is_empty() {
        return Err(Error::EmptyAlphabet);
    }
    if alphabet.iter().any(|(_, w)| *w == 0) {
        return Err(Error::ZeroDegree);
    }
    let alphabet: Vec<(Label, usize)> = alphabet
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    // by_degree[d] = all trees of weight d
    let mut by_degree: Vec<Vec<RootedTree>> = vec![Vec::new(); n + 1];
    for d in 1..=n {
        let mut pool: Vec<(usize, RootedTree)> = Vec::new();
        for (w, trees) in by_degree.iter().enumerate().take(d) {
            pool.extend(trees.iter().map(|t| (w, t.clone())));
        }
        let mut out = Vec::new();
        for (label, weight) in &alphabet {
            if *weight > d {
                continue;
            }
            let mut chosen = Vec::new();
            forests(&pool, d - weight, pool.len(), &mut chosen, &mut |kids| {
                out.push(RootedTree::new(label.clone(), kids.to_vec()));
            });
        }
        out.sort();
        out.dedup();
        by_degree[d] = out;
    }
    Ok(std::mem::take(&mut by_degree[n]))
}

/// Multisets from `pool[..limit]` with total weight `remaining`, emitted as
/// non-increasing index sequences.
fn forests(
    pool: &[(usize, RootedTree)],
    remaining: usize,
    limit: usize,
    chosen: &mut Vec<RootedTree>,
    emit: &mut impl FnMut(&[RootedTree]),
) {
    if remaining == 0 {
        emit(chosen);
        return;
    }
    for idx in (0..limit).rev() {
        let (w, ref t) = pool[idx];
        if w <= remaining {
            chosen.push(t.clone());
            forests(pool, remaining - w, idx + 1, chosen, emit);
            chosen.pop();
        }
    }
}

/// A rooted tree whose vertices are exactly `{1..n}`.
///
/// Serialized as `n;root;parent(1),…,parent(n)` with `0` marking the root.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledTree {
    parent: Vec<usize>,
}

impl LabeledTree {
    /// Builds from the parent array (`parent[v-1]` is the parent of `v`, `0` for the root).
    pub fn from_parents(parent: Vec<usize>) -> Result<Self> {
        let n = parent.len();
        if n == 0 {
            return Err(Error::ZeroDegree);
        }
        let roots = parent.iter().filter(|&&p| p == 0).count();
        if roots != 1 {
            return Err(Error::InvalidLabeledTree(format!("expected exactly one root, found {roots}")));
        }
        for (i, &p) in parent.iter().enumerate() {
            if p > n || p == i + 1 {
                return Err(Error::InvalidLabeledTree(format!("vertex {} has invalid parent {p}", i + 1)));
            }
        }
        // every vertex must reach the root within n steps
        for start in 1..=n {
            let mut v = start;
            let mut steps = 0;
            while parent[v - 1] != 0 {
                v = parent[v - 1];
                steps += 1;
                if steps > n {
                    return Err(Error::InvalidLabeledTree(format!("cycle through vertex {start}")));
                }
            }
        }
        Ok(Self { parent })
    }

    pub fn single() -> Self {
        Self { parent: vec![0] }
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.parent.iter().position(|&p| p == 0).map(|i| i + 1).expect("validated tree has a root")
    }

    /// Parent of `v`, `None` for the root.
    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent[v - 1] {
            0 => None,
            p => Some(p),
        }
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    /// Children of `v`, increasing.
    pub fn children(&self, v: usize) -> Vec<usize> {
        (1..=self.size()).filter(|&u| self.parent[u - 1] == v).collect()
    }

    /// Vertices of the subtree hanging from `v` (including `v`), increasing.
    pub fn subtree(&self, v: usize) -> Vec<usize> {
        (1..=self.size()).filter(|&u| self.is_descendant(u, v)).collect()
    }

    /// True if `u` lies in the subtree of `v` (`u == v` counts).
    pub fn is_descendant(&self, mut u: usize, v: usize) -> bool {
        loop {
            if u == v {
                return true;
            }
            match self.parent(u) {
                Some(p) => u = p,
                None => return false,
            }
        }
    }

    /// Every non-root vertex has a smaller parent.
    pub fn is_heap_ordered(&self) -> bool {
        self.parent.iter().enumerate().all(|(i, &p)| p == 0 && i == 0 || p != 0 && p < i + 1)
    }

    /// Right action on labels: vertex `i` of the result is vertex `σ(i)` of `self`.
    pub fn act(&self, sigma: &Permutation) -> Result<LabeledTree> {
        if sigma.len() != self.size() {
            return Err(Error::SizeMismatch { expected: self.size(), found: sigma.len() });
        }
        let inv = sigma.inverse();
        let parent = (1..=self.size())
            .map(|i| match self.parent[sigma.apply(i) - 1] {
                0 => 0,
                p => inv.apply(p),
            })
            .collect();
        Ok(Self { parent })
    }

    /// Replaces vertex `i` by the generator tree `labels[i-1]`.
    pub fn to_rooted(&self, labels: &[Label]) -> RootedTree {
        self.rooted_at(self.root(), labels)
    }

    fn rooted_at(&self, v: usize, labels: &[Label]) -> RootedTree {
        let kids = self.children(v).into_iter().map(|c| self.rooted_at(c, labels)).collect();
        RootedTree::new(labels[v - 1].clone(), kids)
    }

    /// Inverse of [`LabeledTree::to_rooted`] for trees whose labels are
    /// pairwise distinct; `index` maps a label to its vertex id.
    pub fn from_rooted(tree: &RootedTree, index: impl Fn(&Label) -> Option<usize>) -> Result<Self> {
        let n = tree.degree();
        let mut parent = vec![usize::MAX; n];
        fn walk(
            t: &RootedTree,
            up: usize,
            parent: &mut [usize],
            index: &impl Fn(&Label) -> Option<usize>,
        ) -> Result<()> {
            let id = index(t.label())
                .filter(|&i| i >= 1 && i <= parent.len())
                .ok_or_else(|| Error::InvalidLabeledTree(format!("label {} has no vertex id", t.label())))?;
            if parent[id - 1] != usize::MAX {
                return Err(Error::InvalidLabeledTree(format!("vertex id {id} used twice")));
            }
            parent[id - 1] = up;
            for c in t.children() {
                walk(c, id, parent, index)?;
            }
            Ok(())
        }
        walk(tree, 0, &mut parent, &index)?;
        Self::from_parents(parent)
    }

    pub fn render(&self) -> String {
        let ps: Vec<String> = self.parent.iter().map(|p| p.to_string()).collect();
        format!("{};{};{}", self.size(), self.root(), ps.join(","))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let syntax = |message: &str| Error::Syntax { position: 0, message: message.to_string() };
        let mut parts = text.trim().split(';');
        let (Some(n), Some(root), Some(ps), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err(syntax("expected `n;root;parents`"));
        };
        let n: usize = n.trim().parse().map_err(|_| syntax("bad vertex count"))?;
        let root: usize = root.trim().parse().map_err(|_| syntax("bad root"))?;
        let parent = ps
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| syntax("bad parent entry")))
            .collect::<Result<Vec<_>>>()?;
        if parent.len() != n {
            return Err(Error::SizeMismatch { expected: n, found: parent.len() });
        }
        let tree = Self::from_parents(parent)?;
        if tree.root() != root {
            return Err(Error::InvalidLabeledTree(format!("declared root {root}, parent array has root {}", tree.root())));
        }
        Ok(tree)
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledTree({})", self.render())
    }
}

/// A labeled tree whose labels increase away from the root.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HeapOrderedTree(LabeledTree);

impl HeapOrderedTree {
    pub fn as_labeled(&self) -> &LabeledTree {
        &self.0
    }

    pub fn into_labeled(self) -> LabeledTree {
        self.0
    }
}

impl TryFrom<LabeledTree> for HeapOrderedTree {
    type Error = Error;
    fn try_from(tree: LabeledTree) -> Result<Self> {
        if tree.is_heap_ordered() {
            Ok(Self(tree))
        } else {
            Err(Error::InvalidLabeledTree(format!("{tree} is not heap-ordered")))
        }
    }
}

impl std::ops::Deref for HeapOrderedTree {
    type Target = LabeledTree;
    fn deref(&self) -> &LabeledTree {
        &self.0
    }
}

impl fmt::Display for HeapOrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All rooted trees on `{1..n}`, via Prüfer sequences and a choice of root.
pub fn enumerate_labeled(n: usize) -> Result<Vec<LabeledTree>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    if n == 1 {
        return Ok(vec![LabeledTree::single()]);
    }
    let mut out = Vec::new();
    let mut seq = vec![1usize; n - 2];
    loop {
        let edges = prufer_edges(&seq, n);
        for root in 1..=n {
            out.push(orient(&edges, n, root));
        }
        // next sequence in lexicographic order
        let mut i = seq.len();
        loop {
            if i == 0 {
                out.sort();
                return Ok(out);
            }
            i -= 1;
            if seq[i] < n {
                seq[i] += 1;
                for s in seq.iter_mut().skip(i + 1) {
                    *s = 1;
                }
                break;
            }
        }
    }
}

fn prufer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n + 1];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (1..=n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn orient(edges: &[(usize, usize)], n: usize, root: usize) -> LabeledTree {
    let mut adj = vec![Vec::new(); n + 1];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut parent = vec![usize::MAX; n];
    parent[root - 1] = 0;
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if parent[u - 1] == usize::MAX {
                parent[u - 1] = v;
                stack.push(u);
            }
        }
    }
    LabeledTree { parent }
}

/// All heap-ordered trees on `{1..n}`: vertex `v > 1` picks a parent in `1..v`.
pub fn enumerate_heap_ordered(n: usize) -> Result<Vec<HeapOrderedTree>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut out = Vec::new();
    let mut parent = vec![0usize; n];
    fn rec(v: usize, n: usize, parent: &mut Vec<usize>, out: &mut Vec<HeapOrderedTree>) {
        if v > n {
            out.push(HeapOrderedTree(LabeledTree { parent: parent.clone() }));
            return;
        }
        for p in 1..v {
            parent[v - 1] = p;
            rec(v + 1, n, parent, out);
        }
    }
    rec(2, n, &mut parent, &mut out);
    out.sort();
    Ok(out)
}
