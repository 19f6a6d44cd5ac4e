//! Cycles and disjoint unions of cycles via subset dynamic programming.
//!
//! `ends[S]` holds every vertex `e` such that some path starts at `min(S)`,
//! visits exactly the vertices of `S` and stops at `e`. A set `S` with at
//! least three vertices carries a cycle through all of it iff one of those
//! ends is adjacent to `min(S)`.

use alloc::vec;
use alloc::vec::Vec;

pub(crate) struct PathTable<'a> {
    adj: &'a [u64],
    ends: Vec<u32>,
}

impl<'a> PathTable<'a> {
    /// Fills the table for all subsets with at most `max_size` vertices.
    /// Requires `adj.len() <= 32`.
    pub(crate) fn new(adj: &'a [u64], max_size: usize) -> Self {
        let n = adj.len();
        let mut ends = vec![0u32; 1 << n];
        for v in 0..n {
            ends[1 << v] = 1 << v;
        }
        for set in 1usize..(1 << n) {
            let mut e = ends[set];
            if e == 0 || set.count_ones() as usize >= max_size {
                continue;
            }
            let lo = set.trailing_zeros();
            let above_lo = !((2u64 << lo) - 1);
            while e != 0 {
                let v = e.trailing_zeros() as usize;
                e &= e - 1;
                let mut ext = adj[v] & above_lo & !(set as u64);
                while ext != 0 {
                    let x = ext.trailing_zeros() as usize;
                    ext &= ext - 1;
                    ends[set | 1 << x] |= 1 << x;
                }
            }
        }
        Self { adj, ends }
    }

    pub(crate) fn has_cycle(&self, set: usize) -> bool {
        set.count_ones() >= 3 && u64::from(self.ends[set]) & self.adj[set.trailing_zeros() as usize] != 0
    }

    /// The vertices of a cycle through exactly `set`, starting at `min(set)`.
    pub(crate) fn cycle(&self, set: usize) -> Vec<usize> {
        debug_assert!(self.has_cycle(set));
        let lo = set.trailing_zeros() as usize;
        let mut order = Vec::with_capacity(set.count_ones() as usize);
        let mut rest = set;
        let mut allowed = self.adj[lo];
        while rest != 1 << lo {
            let candidates = u64::from(self.ends[rest]) & allowed;
            let e = candidates.trailing_zeros() as usize;
            order.push(e);
            rest &= !(1 << e);
            allowed = self.adj[e];
        }
        order.push(lo);
        order.reverse();
        order
    }
}

/// A cycle of exactly `len` vertices, or `None`.
pub(crate) fn cycle_of_length(adj: &[u64], len: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    if len < 3 || len > n {
        return None;
    }
    let table = PathTable::new(adj, len);
    (1usize..(1 << n))
        .filter(|s| s.count_ones() as usize == len)
        .find(|&s| table.has_cycle(s))
        .map(|s| table.cycle(s))
}

/// Vertex-disjoint cycles covering at least `min_cover` vertices, or `None`.
pub(crate) fn cycle_cover(adj: &[u64], min_cover: usize) -> Option<Vec<Vec<usize>>> {
    let table = PathTable::new(adj, adj.len());
    let (covers, _) = coverable_sets(&table, adj.len(), |_| true);
    let best = (0usize..covers.len())
        .filter(|&s| covers[s] && s.count_ones() as usize >= min_cover)
        .min_by_key(|&s| (core::cmp::Reverse(s.count_ones()), s))?;
    Some(split_cover(&table, &covers, best))
}

/// Vertex-disjoint cycles covering exactly `size` vertices, or `None`.
pub(crate) fn cycle_cover_exact(adj: &[u64], size: usize) -> Option<Vec<Vec<usize>>> {
    let table = PathTable::new(adj, size);
    let (covers, _) = coverable_sets(&table, adj.len(), |s| s.count_ones() as usize <= size);
    let set = (0usize..covers.len()).find(|&s| covers[s] && s.count_ones() as usize == size)?;
    Some(split_cover(&table, &covers, set))
}

/// `covers[S]`: `S` splits into vertex-disjoint cycles (the empty set does).
fn coverable_sets(
    table: &PathTable<'_>,
    n: usize,
    keep: impl Fn(usize) -> bool,
) -> (Vec<bool>, u64) {
    let mut covers = vec![false; 1 << n];
    covers[0] = true;
    let mut work = 0u64;
    for set in 1usize..(1 << n) {
        if !keep(set) {
            continue;
        }
        let lo = set & set.wrapping_neg();
        let rest = set ^ lo;
        // Submasks of `rest`, each joined with `lo`, form the cycle through min(set).
        let mut sub = rest;
        loop {
            work += 1;
            let cyc = sub | lo;
            if covers[set ^ cyc] && table.has_cycle(cyc) {
                covers[set] = true;
                break;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    (covers, work)
}

fn split_cover(table: &PathTable<'_>, covers: &[bool], mut set: usize) -> Vec<Vec<usize>> {
    let mut cycles = Vec::new();
    while set != 0 {
        let lo = set & set.wrapping_neg();
        let rest = set ^ lo;
        let mut sub = rest;
        loop {
            let cyc = sub | lo;
            if covers[set ^ cyc] && table.has_cycle(cyc) {
                cycles.push(table.cycle(cyc));
                set ^= cyc;
                break;
            }
            debug_assert!(sub != 0, "cover table inconsistent");
            sub = (sub - 1) & rest;
        }
    }
    cycles
}

/// Estimated work for [`cycle_cover`] on `n` vertices (about `3^n` submask steps).
pub(crate) fn cover_cost(n: usize) -> u64 {
    3u64.saturating_pow(n as u32)
}

/// Estimated work for the path table on `n` vertices.
pub(crate) fn path_cost(n: usize) -> u64 {
    (1u64 << n.min(63)).saturating_mul(n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Vec<u64> {
        (0..n).map(|v| ((1u64 << n) - 1) & !(1 << v)).collect()
    }

    fn is_cycle(adj: &[u64], cyc: &[usize]) -> bool {
        let m = cyc.len();
        m >= 3 && (0..m).all(|i| adj[cyc[i]] >> cyc[(i + 1) % m] & 1 == 1)
    }

    #[test]
    fn complete_graph_has_every_length() {
        let adj = complete(7);
        for len in 3..=7 {
            let c = cycle_of_length(&adj, len).unwrap();
            assert_eq!(c.len(), len);
            assert!(is_cycle(&adj, &c));
        }
        assert!(cycle_of_length(&adj, 8).is_none());
    }

    #[test]
    fn bipartite_graph_has_no_odd_cycle() {
        // K_{3,4}
        let mut adj = vec![0u64; 7];
        for a in 0..3 {
            for b in 3..7 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        assert!(cycle_of_length(&adj, 5).is_none());
        assert!(cycle_of_length(&adj, 6).is_some());
        assert!(cycle_cover(&adj, 7).is_none());
        assert_eq!(cycle_cover(&adj, 6).unwrap().concat().len(), 6);
    }

    #[test]
    fn two_triangles_cover_but_no_hamiltonian_cycle() {
        let mut adj = vec![0u64; 6];
        for &(u, v) in &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        assert!(cycle_of_length(&adj, 6).is_none());
        let cover = cycle_cover(&adj, 6).unwrap();
        assert_eq!(cover.len(), 2);
        assert!(cover.iter().all(|c| is_cycle(&adj, c)));
        assert!(cycle_cover_exact(&adj, 3).is_some());
        assert!(cycle_cover_exact(&adj, 5).is_none());
    }
}
