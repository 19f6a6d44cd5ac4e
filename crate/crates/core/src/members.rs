//! Explicit enumeration of family members on small complete graphs.
//!
//! Used by the full searches and as a brute-force cross-check of the oracle.
//! Edge bitmasks use colex order: edge `{u, v}` with `u < v` is bit
//! `v (v - 1) / 2 + u`, so the edges of `K_m` are exactly the low `m (m-1) / 2` bits.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{FamilyKind, FamilySpec, Subgraph};
use crate::{Error, Result};

/// Largest `n` for which members are enumerated.
pub const MAX_ENUMERATION_N: usize = 10;

/// Colex bit position of edge `{u, v}`.
pub fn colex_bit(u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    v * (v - 1) / 2 + u
}

/// Inverse of [`colex_bit`].
pub fn colex_edge(bit: usize) -> (usize, usize) {
    let mut v = 1;
    while (v + 1) * v / 2 <= bit {
        v += 1;
    }
    (bit - v * (v - 1) / 2, v)
}

pub fn colex_mask(h: &Subgraph) -> u64 {
    h.edges().iter().fold(0, |m, &(u, v)| m | 1 << colex_bit(u, v))
}

/// Every member of `family` in `K_n`, grouped by vertex set in lexicographic order.
pub fn members(family: &FamilySpec, n: usize) -> Result<Vec<Subgraph>> {
    family.validate(n)?;
    if n > MAX_ENUMERATION_N {
        return Err(Error::BudgetExceeded { what: "member enumeration", limit: MAX_ENUMERATION_N as u64 });
    }
    let span = family.span(n);
    let sizes = if family.kind == FamilyKind::TwoRegular { span..=n } else { span..=span };
    let connected = matches!(family.kind, FamilyKind::Cycles | FamilyKind::ConnectedRRegular);
    let mut out = Vec::new();
    for size in sizes {
        for support in subsets(n, size) {
            let mut e = Enumerator { r: family.r, support, deg: vec![0; n], edges: Vec::new(), out: Vec::new() };
            e.extend(0);
            for edges in e.out {
                let h = Subgraph::new(edges)?;
                if !connected || is_connected(n, &h) {
                    out.push(h);
                }
            }
        }
    }
    Ok(out)
}

/// Colex edge masks of every member.
pub fn member_masks(family: &FamilySpec, n: usize) -> Result<Vec<u64>> {
    Ok(members(family, n)?.iter().map(colex_mask).collect())
}

/// All `size`-subsets of `0..n` as vertex lists, in lexicographic order.
fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, size: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in from..n {
            if n - v < size - cur.len() {
                break;
            }
            cur.push(v);
            go(n, size, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, size, 0, &mut Vec::with_capacity(size), &mut out);
    out
}

/// All `r`-regular edge sets whose support is exactly `support`.
struct Enumerator {
    r: usize,
    support: Vec<usize>,
    deg: Vec<usize>,
    edges: Vec<(usize, usize)>,
    out: Vec<Vec<(usize, usize)>>,
}

impl Enumerator {
    /// Fills vertex `support[i]` up to degree `r` using later support vertices.
    fn extend(&mut self, i: usize) {
        if i == self.support.len() {
            self.out.push(self.edges.clone());
            return;
        }
        let v = self.support[i];
        let need = self.r - self.deg[v];
        let later: Vec<usize> = self.support[i + 1..].iter().copied().filter(|&w| self.deg[w] < self.r).collect();
        self.choose(i, &later, 0, need);
    }

    fn choose(&mut self, i: usize, later: &[usize], from: usize, need: usize) {
        let v = self.support[i];
        if need == 0 {
            self.deg[v] = self.r;
            self.extend(i + 1);
            return;
        }
        for j in from..later.len() {
            if later.len() - j < need {
                break;
            }
            let w = later[j];
            self.deg[w] += 1;
            self.edges.push((v, w));
            let before = self.deg[v];
            self.deg[v] += 1;
            self.choose(i, later, j + 1, need - 1);
            self.deg[v] = before;
            self.edges.pop();
            self.deg[w] -= 1;
        }
    }
}

fn is_connected(n: usize, h: &Subgraph) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in h.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let verts = h.vertices();
    let Some(&start) = verts.first() else { return true };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == verts.len()
}
