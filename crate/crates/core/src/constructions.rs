//! Explicit colorings: the optimal simply-ordered and quasi-simply-ordered
//! colorings, seed colorings for `r`-regular families, and the bipartite
//! two-color colorings without a monochromatic `s`-cycle.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{BlockSequence, Color, EdgeColoring, FamilyKind, FamilySpec};
use crate::numbers;
use crate::structure::{quasi_coloring, ZShape};
use crate::{Error, Result};

/// Class sizes `(q+1) 2^{i-1}` with the last class taking the remainder.
/// Requires `n >= q + 1`.
pub fn doubling_blocks(n: usize, q: usize) -> Result<Vec<usize>> {
    if n < q + 1 {
        return Err(Error::Precondition(format!("need n >= q + 1 (n = {n}, q = {q})")));
    }
    let mut sizes = Vec::new();
    let mut used = 0;
    let mut next = q + 1;
    // Open a new class while the remainder can still hold a class twice as large.
    while n - used >= next + 2 * next {
        sizes.push(next);
        used += next;
        next *= 2;
    }
    sizes.push(n - used);
    Ok(sizes)
}

/// Class sizes `q+1`, `2^{i-1} q + 2^{i-2}` for middle classes, remainder last.
fn cycle_blocks(n: usize, q: usize) -> Vec<usize> {
    let k = numbers::cycle_k(n, q);
    let mut sizes = Vec::with_capacity(k);
    if k > 1 {
        sizes.push(q + 1);
    }
    for i in 2..k {
        sizes.push((1 << (i - 1)) * q + (1 << (i - 2)));
    }
    sizes.push(n - sizes.iter().sum::<usize>());
    sizes
}

/// The optimal simply-ordered coloring for matchings (`q >= 0`), 2-regular
/// subgraphs (`q >= 2`) or cycles (`q >= 2`), with its blocks.
pub fn construct_simply_ordered(family: &FamilySpec, n: usize) -> Result<(EdgeColoring, BlockSequence)> {
    family.validate(n)?;
    let q = family.q;
    let sizes = match family.kind {
        FamilyKind::Matchings => doubling_blocks(n, q)?,
        FamilyKind::TwoRegular if q >= 2 => doubling_blocks(n, q)?,
        FamilyKind::Cycles if q >= 2 => {
            let odd_band = (n - q) % 2 == 1 && 2 * q + 2 <= n && n <= 3 * q + 2;
            if odd_band || (q == 2 && n == 5) {
                return Err(Error::NoSimplyOrderedOptimum { n, q });
            }
            cycle_blocks(n, q)
        }
        FamilyKind::TwoRegular | FamilyKind::Cycles => {
            return Err(Error::Precondition(format!(
                "{family} has quasi-simply-ordered optima; use the seeded construction"
            )))
        }
        _ => return Err(Error::OutOfScope("simply-ordered constructions cover matchings, cycles and 2-regular families")),
    };
    let blocks = BlockSequence::from_lengths(&sizes)?;
    Ok((EdgeColoring::from_blocks(&blocks)?, blocks))
}

/// A quasi-simply-ordered coloring: seed on vertices `0..|Z|`, tail after it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiConstruction {
    pub coloring: EdgeColoring,
    pub shape: ZShape,
    /// Inherited colors of the tail vertices.
    pub tail: Vec<Color>,
    /// Size of each color class, by color; seed vertices count toward their main color.
    pub classes: Vec<usize>,
}

fn assemble(shape: ZShape, tail_classes: &[usize], tail_len: usize) -> Result<QuasiConstruction> {
    let mains = shape.mains();
    let seed_colors = *mains.iter().max().unwrap();
    let mut tail: Vec<Color> = Vec::with_capacity(tail_len);
    if tail_classes.is_empty() {
        tail.resize(tail_len, *mains.last().unwrap());
    } else {
        for (i, &len) in tail_classes.iter().enumerate() {
            tail.extend(core::iter::repeat(seed_colors + i as Color + 1).take(len));
        }
    }
    let coloring = quasi_coloring(&shape, &tail)?;
    let mut classes = vec![0; usize::from(coloring.k())];
    for &c in mains.iter().chain(&tail) {
        classes[usize::from(c) - 1] += 1;
    }
    Ok(QuasiConstruction { coloring, shape, tail, classes })
}

/// Tail class sizes: `first` for color `|seed colors| + 1`, each following
/// class `ratio` times larger, the last taking the remainder.
fn geometric_tail(tail_len: usize, k: usize, seed_colors: usize, first: usize) -> Vec<usize> {
    let count = k - seed_colors;
    let mut sizes: Vec<usize> = (0..count.saturating_sub(1)).map(|i| first << i).collect();
    if count > 0 {
        sizes.push(tail_len - sizes.iter().sum::<usize>());
    }
    sizes
}

/// The optimal quasi-simply-ordered coloring for 2-regular subgraphs or
/// cycles with `q` in `{0, 1}`.
pub fn construct_quasi(family: &FamilySpec, n: usize) -> Result<QuasiConstruction> {
    family.validate(n)?;
    let (kind, q) = (family.kind, family.q);
    let small = |lo: usize, hi: usize| (lo..=hi).contains(&n);
    match (kind, q) {
        (FamilyKind::TwoRegular, 0) | (FamilyKind::Cycles, 0) => {
            let shape = ZShape::Triangle([1, 2, 3]);
            if small(3, 6) {
                return assemble(shape, &[], n - 3);
            }
            let (k, first) = if kind == FamilyKind::TwoRegular {
                (numbers::p_r(n, 0)?.value, 4)
            } else {
                (numbers::p_c(n, 0)?.value, 3)
            };
            assemble(shape, &geometric_tail(n - 3, k, 3, first), n - 3)
        }
        (FamilyKind::TwoRegular, 1) | (FamilyKind::Cycles, 1) => {
            let shape = ZShape::Square([1, 2]);
            if kind == FamilyKind::Cycles && n == 4 {
                return Err(Error::Precondition(
                    "cycles on 3 of 4 vertices: the optimum (3 colors) is a proper edge-coloring of K_4, not quasi-ordered".into(),
                ));
            }
            if small(4, 9) {
                return assemble(shape, &[], n - 4);
            }
            let (k, first) = if kind == FamilyKind::TwoRegular {
                (numbers::p_r(n, 1)?.value, 6)
            } else {
                (numbers::p_c(n, 1)?.value, 5)
            };
            assemble(shape, &geometric_tail(n - 4, k, 2, first), n - 4)
        }
        _ => Err(Error::OutOfScope("quasi-simply-ordered constructions cover R_0, C_0, R_1 and C_1")),
    }
}

/// A seed for `r`-regular families: `k` parts of `q + 1` vertices each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedColoring {
    pub r: usize,
    pub q: usize,
    /// Parts `S_1..S_k`; part `j` is the contiguous range of vertices with main color `j`.
    pub parts: Vec<Vec<usize>>,
    /// Coloring of the complete graph on the seed.
    pub internal: EdgeColoring,
}

impl SeedColoring {
    pub fn z(&self) -> usize {
        self.internal.n()
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn main(&self, v: usize) -> Color {
        (v / (self.q + 1)) as Color + 1
    }
}

/// The canonical seed with `k = floor((2r-2)/(q+1)) + 1` parts.
///
/// Vertex `i` of part `a` gets the circulant label `g = i k + a` modulo
/// `z = k(q+1)`. Vertex `x` owns the edge to `y` when `g(y) - g(x) mod z` lies
/// in `[1, floor((z-1)/2)]` and is not a multiple of `k`; for even `z` the
/// diametral edge is owned by its endpoint with the smaller label. Owned edges
/// take the owner's main color, edges inside a part take the part's color.
pub fn build_seed(r: usize, q: usize) -> Result<SeedColoring> {
    if r < 2 || q + 3 > 2 * r {
        return Err(Error::NoSeed { r, q });
    }
    let p = q + 1;
    let k = (2 * r - 2) / p + 1;
    let z = k * p;
    let label = |v: usize| (v % p) * k + v / p;
    let main = |v: usize| (v / p) as Color + 1;
    let owns = |x: usize, y: usize| {
        let d = (label(y) + z - label(x)) % z;
        let half = z % 2 == 0 && d == z / 2 && d % k != 0 && label(x) < z / 2;
        (1..=(z - 1) / 2).contains(&d) && d % k != 0 || half
    };
    let internal = EdgeColoring::from_fn(z, |x, y| {
        if x / p == y / p || owns(x, y) {
            main(x)
        } else {
            debug_assert!(owns(y, x));
            main(y)
        }
    })?;
    let parts = (0..k).map(|a| (a * p..(a + 1) * p).collect()).collect();
    Ok(SeedColoring { r, q, parts, internal })
}

/// Class sizes for the tail after a seed of `z` vertices.
///
/// For 2-regular-type families each new class needs at least `q + 1` more
/// vertices than all earlier classes together (seed included); for cycle-type
/// families `q` more, plus one extra vertex in the last class. Uses as many
/// classes as fit; the last takes the remainder.
pub fn seed_tail_classes(z: usize, q: usize, tail_len: usize, kind: FamilyKind) -> Vec<usize> {
    let minimal = |count: usize| -> Vec<usize> {
        let mut sizes = Vec::with_capacity(count);
        let mut total = z;
        for i in 0..count {
            let mut need = total + q + usize::from(kind != FamilyKind::Cycles);
            if kind == FamilyKind::Cycles && i + 1 == count {
                need += 1;
            }
            sizes.push(need);
            total += need;
        }
        sizes
    };
    let mut count = 0;
    while minimal(count + 1).iter().sum::<usize>() <= tail_len {
        count += 1;
    }
    let mut sizes = minimal(count);
    if count > 0 {
        sizes[count - 1] = tail_len - sizes[..count - 1].iter().sum::<usize>();
    }
    sizes
}

/// Extends `seed` to `K_n`: seed vertex `v` joins every new vertex in its main
/// color, and the new vertices form a simply-ordered coloring with
/// [`seed_tail_classes`]. When no class fits, the new vertices take the last
/// seed color. `kind` selects the cycle-type or 2-regular-type size rule.
pub fn extend_seed(seed: &SeedColoring, n: usize, kind: FamilyKind) -> Result<(EdgeColoring, Vec<usize>)> {
    let z = seed.z();
    if n < z {
        return Err(Error::Precondition(format!("n = {n} is smaller than the seed ({z} vertices)")));
    }
    let k = seed.k() as Color;
    let tail_classes = seed_tail_classes(z, seed.q, n - z, kind);
    let mut tail: Vec<Color> = Vec::with_capacity(n - z);
    for (i, &len) in tail_classes.iter().enumerate() {
        tail.extend(core::iter::repeat(k + 1 + i as Color).take(len));
    }
    tail.resize(n - z, k);
    let coloring = EdgeColoring::from_fn(n, |u, v| {
        if v < z {
            seed.internal.color(u, v)
        } else if u < z {
            seed.main(u)
        } else {
            tail[u - z]
        }
    })?;
    let mut classes = vec![seed.q + 1; seed.k()];
    if tail_classes.is_empty() {
        *classes.last_mut().unwrap() += n - z;
    }
    classes.extend_from_slice(&tail_classes);
    Ok((coloring, classes))
}

/// A 2-coloring of `K_n` with no monochromatic `s`-cycle: color 2 on a
/// complete bipartite graph with parts `A` (the first vertices) and `B`,
/// color 1 inside the parts. For odd `s` the parts are balanced (`n <= 2s-2`);
/// for even `s`, `|A| = s/2 - 1` (`n <= 3s/2 - 2`).
pub fn construct_bipartite_witness(s: usize, n: usize) -> Result<EdgeColoring> {
    let max = if s % 2 == 1 { 2 * s - 2 } else { 3 * s / 2 - 2 };
    if s < 5 || n < s || n > max {
        return Err(Error::Precondition(format!(
            "bipartite witness needs s >= 5 and s <= n <= {max} (s = {s}, n = {n})"
        )));
    }
    let a = if s % 2 == 1 { n / 2 } else { s / 2 - 1 };
    EdgeColoring::from_fn(n, |u, v| if (u < a) == (v < a) { 1 } else { 2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{detect_order, OrderKind};

    #[test]
    fn matching_constructions() {
        let (_, b) = construct_simply_ordered(&FamilySpec::matchings(2), 14).unwrap();
        assert_eq!(b.lengths(), vec![3, 11]);
        let (_, b) = construct_simply_ordered(&FamilySpec::matchings(0), 8).unwrap();
        assert_eq!(b.lengths(), vec![1, 2, 5]);
        let (c, b) = construct_simply_ordered(&FamilySpec::matchings(0), 2).unwrap();
        assert_eq!((b.lengths(), c.k()), (vec![2], 1));
        assert!(construct_simply_ordered(&FamilySpec::matchings(0), 7).is_err());
        assert_eq!(doubling_blocks(7, 0).unwrap(), vec![1, 2, 4]);
    }

    #[test]
    fn cycle_constructions() {
        let (_, b) = construct_simply_ordered(&FamilySpec::cycles(2), 19).unwrap();
        assert_eq!(b.lengths(), vec![3, 5, 11]);
        assert_eq!(
            construct_simply_ordered(&FamilySpec::cycles(3), 8).unwrap_err(),
            Error::NoSimplyOrderedOptimum { n: 8, q: 3 }
        );
        assert!(construct_simply_ordered(&FamilySpec::cycles(2), 5).is_err());
        let (_, b) = construct_simply_ordered(&FamilySpec::cycles(2), 6).unwrap();
        assert_eq!(b.lengths(), vec![6]);
    }

    #[test]
    fn block_counts_match_closed_forms() {
        for q in 0..6 {
            for n in q + 2..300 {
                if (n - q) % 2 == 0 {
                    let sizes = doubling_blocks(n, q).unwrap();
                    assert_eq!(sizes.len(), numbers::p_f(n, q).unwrap().value, "F n={n} q={q}");
                    assert_eq!(sizes.iter().sum::<usize>(), n);
                }
                if q >= 2 && n >= q + 3 {
                    if let Ok((_, b)) = construct_simply_ordered(&FamilySpec::cycles(q), n) {
                        assert_eq!(b.block_count(), numbers::p_c(n, q).unwrap().value, "C n={n} q={q}");
                    }
                }
            }
        }
    }

    #[test]
    fn quasi_class_sizes() {
        let r0 = construct_quasi(&FamilySpec::two_regular(0), 7).unwrap();
        assert_eq!((r0.classes.clone(), r0.coloring.k()), (vec![1, 1, 1, 4], 4));
        let r1 = construct_quasi(&FamilySpec::two_regular(1), 10).unwrap();
        assert_eq!(r1.classes, vec![2, 2, 6]);
        let c1 = construct_quasi(&FamilySpec::cycles(1), 5).unwrap();
        assert_eq!((c1.classes.clone(), c1.coloring.k()), (vec![2, 3], 2));
        assert!(construct_quasi(&FamilySpec::cycles(1), 4).is_err());
        let c0 = construct_quasi(&FamilySpec::cycles(0), 13).unwrap();
        assert_eq!(c0.classes, vec![1, 1, 1, 3, 7]);
    }

    #[test]
    fn quasi_colorings_are_detected() {
        for n in 3..14 {
            let c = construct_quasi(&FamilySpec::two_regular(0), n).unwrap();
            let a = detect_order(&c.coloring);
            assert_eq!(a.kind, OrderKind::QuasiSimplyOrdered, "n={n}");
            assert_eq!(a.shape(), Some(&c.shape));
        }
    }

    #[test]
    fn pentagon_seed() {
        let s = build_seed(3, 0).unwrap();
        assert_eq!((s.z(), s.k()), (5, 5));
        for i in 0..5 {
            let c = (i + 1) as Color;
            assert_eq!(s.internal.color(i, (i + 1) % 5), c);
            assert_eq!(s.internal.color(i, (i + 2) % 5), c);
        }
    }

    #[test]
    fn small_seeds_match_quasi_shapes() {
        let tri = build_seed(2, 0).unwrap();
        let shape = ZShape::Triangle([1, 2, 3]);
        for a in 0..3 {
            for b in a + 1..3 {
                assert_eq!(tri.internal.color(a, b), shape.internal_color(a, b));
            }
        }
        let sq = build_seed(2, 1).unwrap();
        let shape = ZShape::Square([1, 2]);
        for a in 0..4 {
            for b in a + 1..4 {
                assert_eq!(sq.internal.color(a, b), shape.internal_color(a, b));
            }
        }
        assert_eq!(build_seed(2, 2).unwrap_err(), Error::NoSeed { r: 2, q: 2 });
    }

    #[test]
    fn seed_degrees_are_balanced() {
        for r in 2..7 {
            for q in 0..=2 * r - 3 {
                let s = build_seed(r, q).unwrap();
                let z = s.z();
                assert_eq!(z, s.k() * (q + 1));
                let off = (q + 1) * (s.k() - 1);
                for v in 0..z {
                    let other = (0..z).filter(|&w| w != v && s.internal.color(v, w) != s.main(v)).count();
                    assert!(other == off / 2 || other == (off + 1) / 2, "r={r} q={q} v={v}: {other}");
                    for w in 0..z {
                        if w != v {
                            let c = s.internal.color(v, w);
                            assert!(c == s.main(v) || c == s.main(w));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn seed_extension_classes() {
        let (_, classes) = extend_seed(&build_seed(4, 2).unwrap(), 45, FamilyKind::TwoRegular).unwrap();
        assert_eq!(classes, vec![3, 3, 3, 12, 24]);
        let (c, classes) = extend_seed(&build_seed(2, 0).unwrap(), 7, FamilyKind::TwoRegular).unwrap();
        assert_eq!(classes, vec![1, 1, 1, 4]);
        assert_eq!(c, construct_quasi(&FamilySpec::two_regular(0), 7).unwrap().coloring);
        assert!(extend_seed(&build_seed(3, 0).unwrap(), 4, FamilyKind::TwoRegular).is_err());
    }

    #[test]
    fn seed_extensions_reproduce_quasi_constructions() {
        for n in 4..40 {
            for (family, seed) in [
                (FamilySpec::two_regular(0), build_seed(2, 0).unwrap()),
                (FamilySpec::cycles(0), build_seed(2, 0).unwrap()),
                (FamilySpec::two_regular(1), build_seed(2, 1).unwrap()),
                (FamilySpec::cycles(1), build_seed(2, 1).unwrap()),
            ] {
                let Ok(quasi) = construct_quasi(&family, n) else { continue };
                let (c, classes) = extend_seed(&seed, n, family.kind).unwrap();
                assert_eq!(c, quasi.coloring, "{family} n={n}");
                assert_eq!(classes, quasi.classes, "{family} n={n}");
            }
        }
    }

    #[test]
    fn bipartite_witnesses() {
        let c = construct_bipartite_witness(5, 7).unwrap();
        let red: usize = (0..7).map(|v| (0..7).filter(|&w| w != v && c.color(v, w) == 2).count()).sum();
        assert_eq!(red / 2, 12);
        assert_eq!(construct_bipartite_witness(5, 8).unwrap().as_slice().iter().filter(|&&x| x == 2).count(), 16);
        assert_eq!(construct_bipartite_witness(6, 7).unwrap().as_slice().iter().filter(|&&x| x == 2).count(), 10);
        assert!(construct_bipartite_witness(5, 9).is_err());
        assert!(construct_bipartite_witness(4, 5).is_err());
    }
}
