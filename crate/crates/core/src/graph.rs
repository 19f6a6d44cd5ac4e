//! Colored complete graphs, subgraphs and subgraph families.
//!
//! Vertices are `0..n`. Colors are dense integers `1..=k`: every color in that
//! range is used by at least one edge.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

pub type Color = u16;

/// Position of the pair `u < v` in the lexicographic list of pairs of `0..n`.
#[inline]
pub(crate) fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

#[inline]
pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// An edge-coloring of the complete graph `K_n`.
///
/// Stored as the upper triangle in lexicographic pair order, so symmetry holds
/// by construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    k: Color,
    colors: Vec<Color>,
}

impl EdgeColoring {
    /// Builds a coloring from its upper triangle in lexicographic pair order
    /// `(0,1), (0,2), ..., (n-2,n-1)`.
    pub fn from_upper_triangle(n: usize, colors: Vec<Color>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidColoring(format!("need at least 2 vertices, got {n}")));
        }
        if colors.len() != pair_count(n) {
            return Err(Error::InvalidColoring(format!(
                "K_{n} has {} edges but {} colors were given",
                pair_count(n),
                colors.len()
            )));
        }
        let k = dense_color_count(&colors)?;
        Ok(Self { n, k, colors })
    }

    /// Builds a coloring by evaluating `f(u, v)` for every pair `u < v`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Color) -> Result<Self> {
        let mut colors = Vec::with_capacity(pair_count(n));
        for u in 0..n {
            for v in u + 1..n {
                colors.push(f(u, v));
            }
        }
        Self::from_upper_triangle(n, colors)
    }

    /// The ordered coloring whose inherited vertex coloring is `seq`: the edge
    /// `uv` with `u < v` gets `seq[u]`. The last two entries must agree.
    pub fn from_inherited(seq: &[Color]) -> Result<Self> {
        let n = seq.len();
        if n >= 2 && seq[n - 1] != seq[n - 2] {
            return Err(Error::InvalidColoring(
                "inherited coloring must give the last two vertices the same color".into(),
            ));
        }
        Self::from_fn(n, |u, _| seq[u])
    }

    pub fn from_blocks(blocks: &BlockSequence) -> Result<Self> {
        Self::from_inherited(&blocks.vertex_colors())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of colors; every color in `1..=k` occurs.
    pub fn k(&self) -> Color {
        self.k
    }

    pub fn color(&self, u: usize, v: usize) -> Color {
        assert!(u != v && u < self.n && v < self.n, "no edge {u}-{v} in K_{}", self.n);
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        self.colors[pair_index(self.n, a, b)]
    }

    /// Upper triangle in lexicographic pair order.
    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    /// All edges as `(u, v, color)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Color)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
            .zip(self.colors.iter().copied())
            .map(|((u, v), c)| (u, v, c))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute_vertices(&self, perm: &[usize]) -> Result<Self> {
        check_permutation(perm, self.n)?;
        let mut colors = vec![0; self.colors.len()];
        for (u, v, c) in self.edges() {
            let (a, b) = (perm[u], perm[v]);
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            colors[pair_index(self.n, a, b)] = c;
        }
        Ok(Self { n: self.n, k: self.k, colors })
    }

    /// Applies the color bijection `c -> map[c - 1]`.
    pub fn permute_colors(&self, map: &[Color]) -> Result<Self> {
        let k = usize::from(self.k);
        let as_perm: Vec<usize> = map.iter().map(|&c| usize::from(c).wrapping_sub(1)).collect();
        check_permutation(&as_perm, k)?;
        let colors = self.colors.iter().map(|&c| map[usize::from(c) - 1]).collect();
        Ok(Self { n: self.n, k: self.k, colors })
    }

    /// The color class of `t` as one neighbor bitmask per vertex. Requires `n <= 64`.
    pub(crate) fn class_masks(&self, t: Color) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        let mut adj = vec![0u64; self.n];
        for (u, v, c) in self.edges() {
            if c == t {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        adj
    }

    /// Color counts at vertex `v`, indexed by color (index 0 unused).
    pub(crate) fn color_degrees(&self, v: usize) -> Vec<usize> {
        let mut counts = vec![0; usize::from(self.k) + 1];
        for u in (0..self.n).filter(|&u| u != v) {
            counts[usize::from(self.color(u, v))] += 1;
        }
        counts
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColoring(n={}, k={}, {:?})", self.n, self.k, self.colors)
    }
}

fn dense_color_count(colors: &[Color]) -> Result<Color> {
    let max = colors.iter().copied().max().unwrap_or(0);
    if colors.contains(&0) {
        return Err(Error::InvalidColoring("colors start at 1".into()));
    }
    let mut seen = vec![false; usize::from(max) + 1];
    for &c in colors {
        seen[usize::from(c)] = true;
    }
    if let Some(gap) = (1..=usize::from(max)).find(|&c| !seen[c]) {
        return Err(Error::InvalidColoring(format!(
            "colors must be dense in 1..={max}, but color {gap} is unused"
        )));
    }
    Ok(max)
}

fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    if perm.len() != n {
        return Err(Error::Precondition(format!("permutation of length {} for {n} items", perm.len())));
    }
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::Precondition(format!("{perm:?} is not a permutation of 0..{n}")));
        }
        seen[p] = true;
    }
    Ok(())
}

/// A simple subgraph given by its edge set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subgraph {
    edges: Vec<(usize, usize)>,
}

impl Subgraph {
    /// Normalizes every edge to `(min, max)` and sorts; loops and repeated edges are rejected.
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut list: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidSubgraph(format!("loop at vertex {u}")));
            }
            list.push(if u < v { (u, v) } else { (v, u) });
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubgraph(format!("edge {}-{} repeated", w[0].0, w[0].1)));
        }
        Ok(Self { edges: list })
    }

    /// The cycle visiting `vertices` in order and closing back to the first.
    pub fn cycle(vertices: &[usize]) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidSubgraph("a cycle needs at least 3 vertices".into()));
        }
        let m = vertices.len();
        Self::new((0..m).map(|i| (vertices[i], vertices[(i + 1) % m])))
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Vertices incident to at least one edge, ascending.
    pub fn vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        set.into_iter().collect()
    }

    pub fn max_vertex(&self) -> Option<usize> {
        self.edges.iter().map(|&(_, v)| v).max()
    }

    fn degrees(&self, n: usize) -> Vec<usize> {
        let mut deg = vec![0; n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    fn is_connected(&self, n: usize) -> bool {
        let support = self.vertices();
        let Some(&start) = support.first() else {
            return true;
        };
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        seen[start] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == support.len()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        Self::new(self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Subgraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Subgraph")?;
        f.debug_list().entries(self.edges.iter()).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    /// Matchings spanning exactly `n - q` vertices.
    Matchings,
    /// Cycles of length exactly `n - q`.
    Cycles,
    /// Disjoint unions of cycles spanning at least `n - q` vertices.
    TwoRegular,
    /// `r`-regular subgraphs spanning exactly `n - q` vertices.
    RRegular,
    /// Connected `r`-regular subgraphs spanning exactly `n - q` vertices.
    ConnectedRRegular,
}

/// A subgraph family of `K_n`, parametrized by the surplus `q` (and degree `r`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub q: usize,
    /// Degree of members. Fixed to 1 for matchings and 2 for cycle families.
    pub r: usize,
}

impl FamilySpec {
    pub fn matchings(q: usize) -> Self {
        Self { kind: FamilyKind::Matchings, q, r: 1 }
    }

    pub fn cycles(q: usize) -> Self {
        Self { kind: FamilyKind::Cycles, q, r: 2 }
    }

    pub fn two_regular(q: usize) -> Self {
        Self { kind: FamilyKind::TwoRegular, q, r: 2 }
    }

    pub fn r_regular(r: usize, q: usize) -> Self {
        Self { kind: FamilyKind::RRegular, q, r }
    }

    pub fn connected_r_regular(r: usize, q: usize) -> Self {
        Self { kind: FamilyKind::ConnectedRRegular, q, r }
    }

    /// Checks that the family is defined and nonempty on `K_n`.
    pub fn validate(&self, n: usize) -> Result<()> {
        let fail = |reason| Err(Error::InvalidFamily { family: *self, n, reason });
        let Some(span) = n.checked_sub(self.q) else {
            return fail("q exceeds n");
        };
        match self.kind {
            FamilyKind::Matchings => {
                if span == 0 || span % 2 == 1 {
                    return fail("n - q must be positive and even");
                }
            }
            FamilyKind::Cycles | FamilyKind::TwoRegular => {
                if span < 3 {
                    return fail("n - q must be at least 3");
                }
            }
            FamilyKind::RRegular | FamilyKind::ConnectedRRegular => {
                if self.r == 0 {
                    return fail("r must be positive");
                }
                if self.kind == FamilyKind::ConnectedRRegular && self.r < 2 {
                    return fail("connected members need r >= 2");
                }
                if span < self.r + 1 {
                    return fail("n - q must be at least r + 1");
                }
                if self.r % 2 == 1 && span % 2 == 1 {
                    return fail("n - q must be even when r is odd");
                }
            }
        }
        Ok(())
    }

    /// Number of vertices a member spans (a lower bound for [`FamilyKind::TwoRegular`]).
    pub fn span(&self, n: usize) -> usize {
        n - self.q
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::Matchings => write!(f, "F_{}", self.q),
            FamilyKind::Cycles => write!(f, "C_{}", self.q),
            FamilyKind::TwoRegular => write!(f, "R_{}", self.q),
            FamilyKind::RRegular => write!(f, "R(r={}, q={})", self.r, self.q),
            FamilyKind::ConnectedRRegular => write!(f, "Conn(r={}, q={})", self.r, self.q),
        }
    }
}

/// Whether `h` is a member of `family` in `K_n`.
pub fn family_member(family: &FamilySpec, n: usize, h: &Subgraph) -> Result<bool> {
    family.validate(n)?;
    if let Some(v) = h.max_vertex().filter(|&v| v >= n) {
        return Err(Error::InvalidSubgraph(format!("vertex {v} is not in K_{n}")));
    }
    let deg = h.degrees(n);
    let support = deg.iter().filter(|&&d| d > 0).count();
    let regular = |r: usize| deg.iter().all(|&d| d == 0 || d == r);
    let span = family.span(n);
    Ok(match family.kind {
        FamilyKind::Matchings => regular(1) && support == span,
        FamilyKind::Cycles => regular(2) && support == span && h.is_connected(n),
        FamilyKind::TwoRegular => regular(2) && support >= span,
        FamilyKind::RRegular => regular(family.r) && support == span,
        FamilyKind::ConnectedRRegular => {
            regular(family.r) && support == span && h.is_connected(n)
        }
    })
}

/// The set of colors appearing on the edges of `h`, ascending.
pub fn colors_on(coloring: &EdgeColoring, h: &Subgraph) -> Vec<Color> {
    let set: BTreeSet<Color> = h.edges().iter().map(|&(u, v)| coloring.color(u, v)).collect();
    set.into_iter().collect()
}

/// Outcome of a polychromatic check: one witness per color some member avoids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub polychromatic: bool,
    pub missing: Vec<(Color, Subgraph)>,
}

impl Verdict {
    pub fn from_missing(missing: Vec<(Color, Subgraph)>) -> Self {
        Self { polychromatic: missing.is_empty(), missing }
    }
}

/// An inherited vertex coloring written as maximal runs `(color, length)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BlockSequence {
    blocks: Vec<(Color, usize)>,
}

impl BlockSequence {
    /// Adjacent blocks must differ in color and every block must be nonempty.
    pub fn new(blocks: Vec<(Color, usize)>) -> Result<Self> {
        if blocks.iter().any(|&(c, len)| len == 0 || c == 0) {
            return Err(Error::Precondition("blocks need a color >= 1 and length >= 1".into()));
        }
        if blocks.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Precondition("adjacent blocks must have different colors".into()));
        }
        Ok(Self { blocks })
    }

    /// Simply-ordered blocks colored `1, 2, ...` from left to right.
    pub fn from_lengths(lengths: &[usize]) -> Result<Self> {
        Self::new(lengths.iter().enumerate().map(|(i, &len)| (i as Color + 1, len)).collect())
    }

    /// Groups a vertex color sequence into maximal runs.
    pub fn from_vertex_colors(seq: &[Color]) -> Result<Self> {
        let mut blocks: Vec<(Color, usize)> = Vec::new();
        for &c in seq {
            match blocks.last_mut() {
                Some((last, len)) if *last == c => *len += 1,
                _ => blocks.push((c, 1)),
            }
        }
        Self::new(blocks)
    }

    pub fn blocks(&self) -> &[(Color, usize)] {
        &self.blocks
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.blocks.iter().map(|&(_, len)| len).collect()
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(|&(_, len)| len).sum()
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn color_count(&self) -> usize {
        self.blocks.iter().map(|&(c, _)| c).collect::<BTreeSet<_>>().len()
    }

    /// Each color occupies exactly one block.
    pub fn is_simply_ordered(&self) -> bool {
        self.block_count() == self.color_count()
    }

    pub fn vertex_colors(&self) -> Vec<Color> {
        self.blocks.iter().flat_map(|&(c, len)| core::iter::repeat(c).take(len)).collect()
    }
}

impl fmt::Debug for BlockSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Blocks")?;
        f.debug_list().entries(self.blocks.iter()).finish()
    }
}
