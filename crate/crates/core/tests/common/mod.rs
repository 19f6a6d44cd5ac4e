//! Brute-force reference: members found by scanning every edge subset of `K_n`.

#![allow(dead_code)]

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use polychrome_core::{Color, EdgeColoring, FamilyKind, FamilySpec};

pub fn edge_list(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

/// A regular edge subset: degree, support size, connectivity.
#[derive(Clone, Copy)]
struct Regular {
    mask: u32,
    r: usize,
    support: usize,
    connected: bool,
}

fn regular_subsets(n: usize) -> Vec<Regular> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Vec<Regular>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(found) = cache.lock().unwrap().get(&n) {
        return found.clone();
    }
    assert!(n <= 7, "brute force is limited to K_7");
    let edges = edge_list(n);
    let mut out = Vec::new();
    for mask in 1u32..(1 << edges.len()) {
        let mut deg = [0usize; 8];
        let mut adj = [0u32; 8];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let r = *deg[..n].iter().max().unwrap();
        if deg[..n].iter().any(|&d| d != 0 && d != r) {
            continue;
        }
        let support_mask: u32 = (0..n).filter(|&v| deg[v] > 0).map(|v| 1 << v).sum();
        let start = support_mask.trailing_zeros();
        let mut seen = 1u32 << start;
        loop {
            let mut next = seen;
            for v in 0..n {
                if seen >> v & 1 == 1 {
                    next |= adj[v];
                }
            }
            if next == seen {
                break;
            }
            seen = next;
        }
        out.push(Regular {
            mask,
            r,
            support: support_mask.count_ones() as usize,
            connected: seen == support_mask,
        });
    }
    cache.lock().unwrap().insert(n, out.clone());
    out
}

/// Every member of `family` on `K_n` as a list of edges.
pub fn brute_members(family: &FamilySpec, n: usize) -> Vec<Vec<(usize, usize)>> {
    let span = n - family.q;
    let edges = edge_list(n);
    regular_subsets(n)
        .into_iter()
        .filter(|s| match family.kind {
            FamilyKind::Matchings => s.r == 1 && s.support == span,
            FamilyKind::Cycles => s.r == 2 && s.support == span && s.connected,
            FamilyKind::TwoRegular => s.r == 2 && s.support >= span,
            FamilyKind::RRegular => s.r == family.r && s.support == span,
            FamilyKind::ConnectedRRegular => s.r == family.r && s.support == span && s.connected,
        })
        .map(|s| (0..edges.len()).filter(|&i| s.mask >> i & 1 == 1).map(|i| edges[i]).collect())
        .collect()
}

/// Colors avoided by some member, ascending.
pub fn brute_missing(c: &EdgeColoring, family: &FamilySpec) -> Vec<Color> {
    let members = brute_members(family, c.n());
    (1..=c.k())
        .filter(|&t| members.iter().any(|m| m.iter().all(|&(u, v)| c.color(u, v) != t)))
        .collect()
}

pub fn brute_polychromatic(c: &EdgeColoring, family: &FamilySpec) -> bool {
    brute_missing(c, family).is_empty()
}

/// Families defined on `K_n` with `q <= max_q`.
pub fn families(n: usize, max_q: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for q in 0..=max_q {
        let mut fs = vec![FamilySpec::matchings(q), FamilySpec::cycles(q), FamilySpec::two_regular(q)];
        fs.push(FamilySpec::r_regular(3, q));
        fs.push(FamilySpec::connected_r_regular(3, q));
        fs.push(FamilySpec::r_regular(2, q));
        fs.push(FamilySpec::connected_r_regular(2, q));
        fs.push(FamilySpec::r_regular(1, q));
        out.extend(fs.into_iter().filter(|f| f.validate(n).is_ok()));
    }
    out
}
