//! Maximum matching in general graphs (Edmonds' blossom algorithm).

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

const NONE: usize = usize::MAX;

/// A maximum matching of the graph with neighbor bitmasks `adj`, as a mate
/// array (`NONE` for exposed vertices). Deterministic: vertices and neighbors
/// are scanned in increasing order.
pub(crate) fn maximum_matching(adj: &[u64]) -> Vec<usize> {
    let n = adj.len();
    let mut m = Blossom {
        adj,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    for root in 0..n {
        if m.mate[root] != NONE {
            continue;
        }
        let mut v = m.find_augmenting_path(root);
        while v != NONE {
            let pv = m.parent[v];
            let next = m.mate[pv];
            m.mate[v] = pv;
            m.mate[pv] = v;
            v = next;
        }
    }
    m.mate
}

pub(crate) fn matching_size(mate: &[usize]) -> usize {
    mate.iter().filter(|&&m| m != NONE).count() / 2
}

/// Matched pairs `(u, mate[u])` with `u < mate[u]`, ascending.
pub(crate) fn matched_pairs(mate: &[usize]) -> Vec<(usize, usize)> {
    mate.iter()
        .enumerate()
        .filter(|&(u, &m)| m != NONE && u < m)
        .map(|(u, &m)| (u, m))
        .collect()
}

struct Blossom<'a> {
    adj: &'a [u64],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lowest_common_ancestor(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> usize {
        let n = self.adj.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let mut nb = self.adj[v];
            while nb != 0 {
                let to = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lowest_common_ancestor(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        NONE
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn masks(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    /// Largest matching by trying every edge subset.
    fn brute_force(n: usize, edges: &[(usize, usize)]) -> usize {
        let mut best = 0;
        for subset in 0u32..(1 << edges.len()) {
            let mut covered = 0u64;
            let mut ok = true;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if subset >> i & 1 == 1 {
                    if covered >> u & 1 == 1 || covered >> v & 1 == 1 {
                        ok = false;
                        break;
                    }
                    covered |= 1 << u | 1 << v;
                }
            }
            if ok {
                best = best.max(subset.count_ones() as usize);
            }
        }
        let _ = n;
        best
    }

    #[test]
    fn odd_cycle_with_pendant_needs_blossom() {
        // A 5-cycle 0..4 with pendants 5-0 and 6-2: perfect matching impossible, size 3.
        let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (6, 3)];
        let mate = maximum_matching(&masks(7, &edges));
        assert_eq!(matching_size(&mate), 3);
    }

    #[test]
    fn petersen_graph_has_perfect_matching() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        let mate = maximum_matching(&masks(10, &edges));
        assert_eq!(matching_size(&mate), 5);
        for (u, v) in matched_pairs(&mate) {
            assert!(edges.contains(&(u, v)) || edges.contains(&(v, u)));
        }
    }

    #[test]
    fn agrees_with_brute_force_on_pseudo_random_graphs() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        for _ in 0..300 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let n = 2 + (state % 7) as usize;
            let mut edges = Vec::new();
            let mut bits = state >> 8;
            for u in 0..n {
                for v in u + 1..n {
                    if bits & 1 == 1 && edges.len() < 16 {
                        edges.push((u, v));
                    }
                    bits = bits.rotate_right(1) ^ (u as u64 * 31 + v as u64);
                }
            }
            let mate = maximum_matching(&masks(n, &edges));
            assert_eq!(matching_size(&mate), brute_force(n, &edges), "n={n} {edges:?}");
        }
    }
}
