//! Optimality searches: over simply-ordered block structures, over
//! quasi-simply-ordered structures with a fixed seed, and over all colorings
//! of tiny complete graphs.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{BlockSequence, Color, EdgeColoring, FamilyKind, FamilySpec};
use crate::members::{colex_bit, member_masks};
use crate::oracle::bits;
use crate::structure::{detect_order, quasi_coloring, quasi_sequence, sequence_predicate, OrderKind, ZShape};
use crate::{Budget, Error, Result};

/// Largest `n` for block-composition enumeration.
pub const MAX_EXHAUSTIVE_N: usize = 20;
/// Largest `n` for searches over all colorings.
pub const MAX_FULL_N: usize = 6;
/// Largest `n` for the cyclic Ramsey brute force.
pub const MAX_RAMSEY_N: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchMode {
    /// Blocks left to right, each as small as the characterization allows.
    Greedy,
    /// Every composition of `n` into blocks.
    ExhaustiveBlocks,
    /// Every coloring up to vertex and color symmetry.
    Full,
}

impl SearchMode {
    pub fn name(&self) -> &'static str {
        match self {
            SearchMode::Greedy => "greedy",
            SearchMode::ExhaustiveBlocks => "exhaustive-blocks",
            SearchMode::Full => "full",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub best_k: usize,
    /// Blocks of the inherited sequence (seed first when `seed` is set);
    /// `None` for an unordered optimum found by full search.
    pub best_structure: Option<BlockSequence>,
    pub seed: Option<ZShape>,
    pub mode: SearchMode,
    /// Candidates examined.
    pub explored: u64,
    pub coloring: EdgeColoring,
}

fn simple_sequence(lengths: &[usize]) -> Vec<Color> {
    let mut seq = Vec::new();
    for (i, &len) in lengths.iter().enumerate() {
        seq.extend(core::iter::repeat(i as Color + 1).take(len));
    }
    seq
}

fn supports_characterization(family: &FamilySpec) -> Result<()> {
    match family.kind {
        FamilyKind::Matchings | FamilyKind::Cycles | FamilyKind::TwoRegular => Ok(()),
        _ => Err(Error::OutOfScope("block searches cover matchings, cycles and 2-regular families")),
    }
}

/// The most colors of a polychromatic simply-ordered coloring of `K_n`.
pub fn best_simply_ordered(n: usize, family: &FamilySpec, mode: SearchMode, budget: &Budget) -> Result<SearchReport> {
    family.validate(n)?;
    supports_characterization(family)?;
    let holds = |lengths: &[usize]| sequence_predicate(&simple_sequence(lengths), None, family);
    let mut explored = 0u64;
    let lengths = match mode {
        SearchMode::Greedy => {
            let mut blocks: Vec<usize> = Vec::new();
            let mut used = 0;
            'grow: loop {
                for s in 1..=(n - used).saturating_sub(2) {
                    explored += 1;
                    let mut candidate = blocks.clone();
                    candidate.extend([s, n - used - s]);
                    if holds(&candidate) {
                        blocks.push(s);
                        used += s;
                        continue 'grow;
                    }
                }
                blocks.push(n - used);
                break blocks;
            }
        }
        SearchMode::ExhaustiveBlocks => {
            if n > MAX_EXHAUSTIVE_N {
                return Err(Error::BudgetExceeded { what: "block compositions", limit: MAX_EXHAUSTIVE_N as u64 });
            }
            budget.admit("block compositions", 1 << (n - 2))?;
            let mut best = vec![n];
            for lengths in compositions(n - 1) {
                let mut lengths = lengths;
                *lengths.last_mut().unwrap() += 1;
                explored += 1;
                if lengths.len() > best.len() && holds(&lengths) {
                    best = lengths;
                }
            }
            best
        }
        SearchMode::Full => return search_full(n, family, budget),
    };
    if !holds(&lengths) {
        return Err(Error::NotPolychromatic);
    }
    let blocks = BlockSequence::from_lengths(&lengths)?;
    Ok(SearchReport {
        best_k: lengths.len(),
        coloring: EdgeColoring::from_blocks(&blocks)?,
        best_structure: Some(blocks),
        seed: None,
        mode,
        explored,
    })
}

/// Compositions of `m >= 1` in lexicographic order.
fn compositions(m: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for s in 1..=rest {
            cur.push(s);
            go(rest - s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, &mut Vec::new(), &mut out);
    out
}

/// The most colors of a polychromatic quasi-simply-ordered coloring with the
/// canonical seed (rainbow triangle for `q = 0`, the two-colored `K_4` for
/// `q = 1`). Cycles on 3 of 4 vertices have an unordered optimum, which is
/// found by full search instead.
pub fn best_quasi(n: usize, family: &FamilySpec, budget: &Budget) -> Result<SearchReport> {
    family.validate(n)?;
    let shape = match (family.kind, family.q) {
        (FamilyKind::TwoRegular | FamilyKind::Cycles, 0) => ZShape::Triangle([1, 2, 3]),
        (FamilyKind::TwoRegular | FamilyKind::Cycles, 1) => ZShape::Square([1, 2]),
        _ => return Err(Error::OutOfScope("quasi searches cover R_0, C_0, R_1 and C_1")),
    };
    let z = shape.size();
    if n < z {
        return Err(Error::Precondition(format!("{family} needs n >= {z} for a seeded coloring")));
    }
    if family.kind == FamilyKind::Cycles && family.q == 1 && n == 4 {
        return search_full(n, family, budget);
    }
    if n - z > MAX_EXHAUSTIVE_N {
        return Err(Error::BudgetExceeded { what: "tail compositions", limit: MAX_EXHAUSTIVE_N as u64 });
    }
    let seed_colors = shape.mains().iter().copied().max().unwrap();
    let last_main = *shape.mains().last().unwrap();
    let mut tails: Vec<Vec<Color>> = Vec::new();
    match n - z {
        0 => tails.push(Vec::new()),
        1 => tails.push(vec![last_main]),
        m => {
            for lengths in compositions(m - 1) {
                for reuse in [true, false] {
                    let offset = if reuse { seed_colors - 1 } else { seed_colors };
                    let mut tail: Vec<Color> = Vec::with_capacity(m);
                    for (i, &len) in lengths.iter().enumerate() {
                        let c = if reuse && i == 0 { last_main } else { offset + i as Color + 1 };
                        tail.extend(core::iter::repeat(c).take(len));
                    }
                    tail.push(*tail.last().unwrap());
                    tails.push(tail);
                }
            }
        }
    }
    let mut explored = 0u64;
    let mut best: Option<(usize, Vec<Color>)> = None;
    for tail in tails {
        explored += 1;
        let seq = quasi_sequence(&shape, &tail);
        let k = usize::from(*seq.iter().max().unwrap());
        if best.as_ref().map_or(true, |b| k > b.0) && sequence_predicate(&seq, Some(&shape), family) {
            best = Some((k, tail));
        }
    }
    let (best_k, tail) = best.ok_or(Error::NotPolychromatic)?;
    Ok(SearchReport {
        best_k,
        best_structure: Some(BlockSequence::from_vertex_colors(&quasi_sequence(&shape, &tail))?),
        seed: Some(shape),
        mode: SearchMode::ExhaustiveBlocks,
        explored,
        coloring: quasi_coloring(&shape, &tail)?,
    })
}

/// A polychromatic coloring of `K_n` with exactly `k` colors, if any exists.
/// Enumerates colorings up to vertex permutation and color renaming.
pub fn full_search(n: usize, family: &FamilySpec, k: usize, budget: &Budget) -> Result<Option<EdgeColoring>> {
    full_search_counted(n, family, k, budget).map(|(c, _)| c)
}

fn full_search_counted(
    n: usize,
    family: &FamilySpec,
    k: usize,
    budget: &Budget,
) -> Result<(Option<EdgeColoring>, u64)> {
    family.validate(n)?;
    if n > MAX_FULL_N {
        return Err(Error::BudgetExceeded { what: "full search", limit: MAX_FULL_N as u64 });
    }
    let masks = member_masks(family, n)?;
    rainbow_search(n, k, &masks, k, budget)
}

/// Full search for the largest `k` with a polychromatic `k`-coloring.
pub fn search_full(n: usize, family: &FamilySpec, budget: &Budget) -> Result<SearchReport> {
    let mut explored = 0;
    let mut best = None;
    for k in 1.. {
        let (found, count) = full_search_counted(n, family, k, budget)?;
        explored += count;
        match found {
            Some(c) => best = Some((k, c)),
            None => break,
        }
    }
    let (best_k, coloring) = best.ok_or(Error::NotPolychromatic)?;
    let analysis = detect_order(&coloring);
    let best_structure = if analysis.kind == OrderKind::Unordered { None } else { analysis.inherited() };
    Ok(SearchReport { best_k, best_structure, seed: analysis.shape().copied(), mode: SearchMode::Full, explored, coloring })
}

/// A coloring of `K_n` with exactly `t` colors in which every `s`-cycle
/// uses more than `j` colors, if one exists.
pub fn cyclic_ramsey_coloring(n: usize, s: usize, t: usize, j: usize, budget: &Budget) -> Result<Option<EdgeColoring>> {
    if s < 3 || s > n {
        return Err(Error::Precondition(format!("need 3 <= s <= n (s = {s}, n = {n})")));
    }
    if n > MAX_RAMSEY_N {
        return Err(Error::BudgetExceeded { what: "cyclic Ramsey brute force", limit: MAX_RAMSEY_N as u64 });
    }
    let masks = member_masks(&FamilySpec::cycles(n - s), n)?;
    Ok(rainbow_search(n, t, &masks, j + 1, budget)?.0)
}

/// The smallest `n` in `s..=max_n` such that every `t`-coloring of `K_n` has
/// an `s`-cycle with at most `j` colors, by brute force.
pub fn cyclic_ramsey_number(s: usize, t: usize, j: usize, max_n: usize, budget: &Budget) -> Result<Option<usize>> {
    if t < 2 || j == 0 || j >= t {
        return Err(Error::Precondition(format!("need t >= 2 and 1 <= j < t (t = {t}, j = {j})")));
    }
    for n in s.max(3)..=max_n {
        if cyclic_ramsey_coloring(n, s, t, j, budget)?.is_none() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Orderly search for a coloring of `K_n` with exactly `k` colors in which
/// every member (colex edge mask) sees at least `min_colors` colors.
///
/// Edges are assigned in colex order with colors in first-use order, so after
/// vertex `v` is complete the prefix is a coloring of `K_{v+1}`. A prefix is
/// kept only if no vertex permutation and color renaming makes it
/// lexicographically smaller; every class keeps its minimal representative.
fn rainbow_search(n: usize, k: usize, members: &[u64], min_colors: usize, budget: &Budget) -> Result<(Option<EdgeColoring>, u64)> {
    let edges = n * (n - 1) / 2;
    let smallest = members.iter().map(|m| m.count_ones() as usize).min().unwrap_or(0);
    if k == 0 || k > edges || min_colors > smallest {
        return Ok((None, 0));
    }
    let mut closing = vec![Vec::new(); edges];
    for &m in members {
        closing[63 - m.leading_zeros() as usize].push(m);
    }
    let mut s = Orderly {
        k,
        min_colors,
        edges,
        closing,
        perms: (0..=n).map(permutations).collect(),
        colors: vec![0; edges],
        meter: budget.meter("full coloring search"),
    };
    let found = s.assign(0, 0)?;
    let explored = s.meter.used();
    let coloring = if found {
        let colors = s.colors;
        Some(EdgeColoring::from_fn(n, |u, v| colors[colex_bit(u, v)])?)
    } else {
        None
    };
    Ok((coloring, explored))
}

struct Orderly {
    k: usize,
    min_colors: usize,
    edges: usize,
    /// Members grouped by their last edge.
    closing: Vec<Vec<u64>>,
    /// All permutations of `0..m`, indexed by `m`.
    perms: Vec<Vec<Vec<usize>>>,
    colors: Vec<Color>,
    meter: crate::oracle::Meter,
}

impl Orderly {
    fn assign(&mut self, e: usize, used: usize) -> Result<bool> {
        if e == self.edges {
            return Ok(used == self.k);
        }
        if used + (self.edges - e) < self.k {
            return Ok(false);
        }
        for c in 1..=(used + 1).min(self.k) {
            self.meter.tick()?;
            self.colors[e] = c as Color;
            if !self.members_ok(e) {
                continue;
            }
            // Edge e completes vertex v when it is {v - 1, v}.
            let (u, v) = crate::members::colex_edge(e);
            if u + 1 == v && !self.is_minimal(v + 1) {
                continue;
            }
            if self.assign(e + 1, used.max(c))? {
                return Ok(true);
            }
        }
        self.colors[e] = 0;
        Ok(false)
    }

    fn members_ok(&self, e: usize) -> bool {
        self.closing[e].iter().all(|&m| {
            let seen = bits(m).fold(0u64, |acc, b| acc | 1 << self.colors[b]);
            seen.count_ones() as usize >= self.min_colors
        })
    }

    /// Whether the coloring of `K_m` on the first `m` vertices is minimal.
    fn is_minimal(&self, m: usize) -> bool {
        let len = m * (m - 1) / 2;
        let mut rename = vec![0 as Color; self.k + 1];
        for p in &self.perms[m] {
            rename.iter_mut().for_each(|x| *x = 0);
            let mut next = 1;
            for e in 0..len {
                let (u, v) = crate::members::colex_edge(e);
                let c = self.colors[colex_bit(p[u], p[v])];
                if rename[usize::from(c)] == 0 {
                    rename[usize::from(c)] = next;
                    next += 1;
                }
                let r = rename[usize::from(c)];
                if r != self.colors[e] {
                    if r < self.colors[e] {
                        return false;
                    }
                    break;
                }
            }
        }
        true
    }
}

/// All permutations of `0..m` in lexicographic order.
fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..m).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..m).rev().find(|&i| p[i - 1] < p[i]) else { return out };
        let j = (i..m).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}
