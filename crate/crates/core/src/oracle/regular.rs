//! Backtracking search for `r`-regular subgraphs on a prescribed number of vertices.

use alloc::vec;
use alloc::vec::Vec;

use super::Meter;
use crate::Result;

/// An `r`-regular subgraph of `adj` spanning exactly `size` vertices (and
/// connected if asked), as an edge list. Vertex sets are tried in
/// lexicographic order, edges chosen lowest vertex first.
pub(crate) fn regular_subgraph(
    adj: &[u64],
    r: usize,
    size: usize,
    connected: bool,
    meter: &mut Meter,
) -> Result<Option<Vec<(usize, usize)>>> {
    let mut chosen = Vec::with_capacity(size);
    choose_support(adj, r, size, connected, 0, &mut chosen, meter)
}

fn choose_support(
    adj: &[u64],
    r: usize,
    size: usize,
    connected: bool,
    from: usize,
    chosen: &mut Vec<usize>,
    meter: &mut Meter,
) -> Result<Option<Vec<(usize, usize)>>> {
    if chosen.len() == size {
        let support: u64 = chosen.iter().map(|&v| 1u64 << v).sum();
        // Every vertex needs r neighbors inside the support.
        if chosen.iter().any(|&v| (adj[v] & support).count_ones() < r as u32) {
            return Ok(None);
        }
        let mut search = Factor {
            adj,
            r,
            support,
            connected,
            deg: vec![0; adj.len()],
            edges: Vec::new(),
        };
        return search.run(meter);
    }
    let n = adj.len();
    for v in from..n {
        if n - v < size - chosen.len() {
            break;
        }
        meter.tick()?;
        chosen.push(v);
        if let Some(found) = choose_support(adj, r, size, connected, v + 1, chosen, meter)? {
            return Ok(Some(found));
        }
        chosen.pop();
    }
    Ok(None)
}

struct Factor<'a> {
    adj: &'a [u64],
    r: usize,
    support: u64,
    connected: bool,
    deg: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl Factor<'_> {
    fn run(&mut self, meter: &mut Meter) -> Result<Option<Vec<(usize, usize)>>> {
        let first = self.support.trailing_zeros() as usize;
        if self.extend(first, meter)? {
            Ok(Some(core::mem::take(&mut self.edges)))
        } else {
            Ok(None)
        }
    }

    /// Completes vertex `v` and all later support vertices; earlier ones are full.
    fn extend(&mut self, v: usize, meter: &mut Meter) -> Result<bool> {
        meter.tick()?;
        if v >= self.adj.len() {
            return Ok(!self.connected || self.is_connected());
        }
        if self.support >> v & 1 == 0 {
            return self.extend(v + 1, meter);
        }
        let need = self.r - self.deg[v];
        let later = self.support & !((2u64 << v) - 1);
        let candidates: Vec<usize> = bits(self.adj[v] & later)
            .filter(|&w| self.deg[w] < self.r)
            .collect();
        if candidates.len() < need {
            return Ok(false);
        }
        let mut pick = Vec::with_capacity(need);
        self.choose(v, &candidates, 0, need, &mut pick, meter)
    }

    fn choose(
        &mut self,
        v: usize,
        candidates: &[usize],
        from: usize,
        need: usize,
        pick: &mut Vec<usize>,
        meter: &mut Meter,
    ) -> Result<bool> {
        if pick.len() == need {
            for &w in pick.iter() {
                self.deg[w] += 1;
                self.edges.push((v, w));
            }
            self.deg[v] += need;
            if self.extend(v + 1, meter)? {
                return Ok(true);
            }
            self.deg[v] -= need;
            for &w in pick.iter() {
                self.deg[w] -= 1;
                self.edges.pop();
            }
            return Ok(false);
        }
        for i in from..candidates.len() {
            if candidates.len() - i < need - pick.len() {
                break;
            }
            pick.push(candidates[i]);
            if self.choose(v, candidates, i + 1, need, pick, meter)? {
                return Ok(true);
            }
            pick.pop();
        }
        Ok(false)
    }

    fn is_connected(&self) -> bool {
        let mut nb = vec![0u64; self.adj.len()];
        for &(u, v) in &self.edges {
            nb[u] |= 1 << v;
            nb[v] |= 1 << u;
        }
        let start = self.support.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for u in bits(frontier) {
                next |= nb[u];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == self.support
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}
