//! Order structure of colorings: detection, the prefix-count characterization
//! of polychromatic ordered colorings, and block-shift normalization.
//!
//! An ordered coloring is described by its inherited vertex sequence. For a
//! quasi-ordered coloring the seed vertices come first (with their main colors),
//! followed by the inherited sequence of the ordered remainder. Positions `j`
//! below are 1-based prefix lengths of that sequence and `M_t(j)` counts the
//! vertices of color `t` among the first `j`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{BlockSequence, Color, EdgeColoring, FamilyKind, FamilySpec};
use crate::{Error, Result};

/// The two possible seeds of a quasi-ordered coloring, by main colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZShape {
    /// Three seed vertices `z0, z1, z2` with distinct main colors `[a, b, c]`;
    /// `z0z1` has color `a`, `z1z2` color `b`, `z2z0` color `c`.
    Triangle([Color; 3]),
    /// Four seed vertices `u, v, y, z` where `u, v` have main color `i` and `y, z`
    /// main color `j`; `uv, uy, vz` have color `i`, `yz, yv, zu` color `j`.
    Square([Color; 2]),
}

impl ZShape {
    pub fn size(&self) -> usize {
        match self {
            ZShape::Triangle(_) => 3,
            ZShape::Square(_) => 4,
        }
    }

    /// Main colors in listing order (`[a, b, c]` or `[i, i, j, j]`).
    pub fn mains(&self) -> Vec<Color> {
        match *self {
            ZShape::Triangle(m) => m.to_vec(),
            ZShape::Square([i, j]) => vec![i, i, j, j],
        }
    }

    /// Whether `t` is the color of some edge inside the seed.
    pub fn has_color(&self, t: Color) -> bool {
        self.mains().contains(&t)
    }

    /// Color of the seed edge between listing positions `a != b`.
    pub fn internal_color(&self, a: usize, b: usize) -> Color {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        match *self {
            ZShape::Triangle(m) => match (a, b) {
                (0, 1) => m[0],
                (1, 2) => m[1],
                _ => m[2],
            },
            ZShape::Square([i, j]) => match (a, b) {
                (0, 1) | (0, 2) | (1, 3) => i,
                _ => j,
            },
        }
    }
}

/// The coloring with `shape` on the first vertices and the inherited
/// sequence `tail` on the rest. A one-vertex tail carries no edge color of
/// its own, so its entry is ignored.
pub fn quasi_coloring(shape: &ZShape, tail: &[Color]) -> Result<EdgeColoring> {
    let z = shape.size();
    let m = tail.len();
    if m >= 2 && tail[m - 1] != tail[m - 2] {
        return Err(Error::InvalidColoring(
            "inherited coloring must give the last two vertices the same color".into(),
        ));
    }
    let mains = shape.mains();
    EdgeColoring::from_fn(z + m, |u, v| {
        if v < z {
            shape.internal_color(u, v)
        } else if u < z {
            mains[u]
        } else {
            tail[u - z]
        }
    })
}

/// The full inherited sequence of a quasi-ordered coloring: main colors,
/// then the tail. A one-vertex tail gets the last main color.
pub fn quasi_sequence(shape: &ZShape, tail: &[Color]) -> Vec<Color> {
    let mut seq = shape.mains();
    if tail.len() == 1 {
        seq.push(*seq.last().unwrap());
    } else {
        seq.extend_from_slice(tail);
    }
    seq
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Unordered,
    Ordered,
    SimplyOrdered,
    QuasiOrdered,
    QuasiSimplyOrdered,
}

impl OrderKind {
    pub fn is_quasi(&self) -> bool {
        matches!(self, OrderKind::QuasiOrdered | OrderKind::QuasiSimplyOrdered)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seed {
    pub shape: ZShape,
    /// Seed vertices in listing order.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderAnalysis {
    pub kind: OrderKind,
    /// Vertices in order (seed first for quasi-ordered colorings); empty if unordered.
    pub order: Vec<usize>,
    pub seed: Option<Seed>,
    /// Inherited colors along `order`.
    pub sequence: Vec<Color>,
}

impl OrderAnalysis {
    fn unordered() -> Self {
        Self { kind: OrderKind::Unordered, order: Vec::new(), seed: None, sequence: Vec::new() }
    }

    pub fn shape(&self) -> Option<&ZShape> {
        self.seed.as_ref().map(|s| &s.shape)
    }

    /// Blocks of the inherited sequence (including the seed), if ordered or quasi-ordered.
    pub fn inherited(&self) -> Option<BlockSequence> {
        if self.kind == OrderKind::Unordered {
            return None;
        }
        BlockSequence::from_vertex_colors(&self.sequence).ok()
    }

    /// Blocks of the part outside the seed.
    pub fn tail_blocks(&self) -> Option<BlockSequence> {
        let z = self.shape().map_or(0, ZShape::size);
        if self.kind == OrderKind::Unordered || self.sequence.len() <= z {
            return None;
        }
        BlockSequence::from_vertex_colors(&self.sequence[z..]).ok()
    }
}

/// Greedy order of `vertices`: repeatedly remove the lowest vertex whose edges
/// to the rest are monochromatic. `None` when the restriction is not ordered.
fn greedy_order(c: &EdgeColoring, vertices: &[usize]) -> Option<(Vec<usize>, Vec<Color>)> {
    let mut rest: Vec<usize> = vertices.to_vec();
    let mut order = Vec::with_capacity(rest.len());
    let mut seq = Vec::with_capacity(rest.len());
    while rest.len() > 2 {
        let pos = (0..rest.len()).find(|&i| {
            let v = rest[i];
            let mut others = rest.iter().filter(|&&w| w != v);
            let first = c.color(v, *others.next().unwrap());
            others.all(|&w| c.color(v, w) == first)
        })?;
        let v = rest.remove(pos);
        seq.push(c.color(v, rest[0]));
        order.push(v);
    }
    if rest.len() == 2 {
        let col = c.color(rest[0], rest[1]);
        order.extend_from_slice(&rest);
        seq.extend_from_slice(&[col, col]);
    } else {
        order.extend_from_slice(&rest);
    }
    Some((order, seq))
}

fn is_simply(seq: &[Color]) -> bool {
    BlockSequence::from_vertex_colors(seq).map_or(true, |b| b.is_simply_ordered())
}

/// Classifies `c` and returns a certifying order. Ties go to the lowest vertex
/// index; ordered colorings are never quasi-ordered, so the classes do not overlap.
pub fn detect_order(c: &EdgeColoring) -> OrderAnalysis {
    let all: Vec<usize> = (0..c.n()).collect();
    if let Some((order, sequence)) = greedy_order(c, &all) {
        let kind = if is_simply(&sequence) { OrderKind::SimplyOrdered } else { OrderKind::Ordered };
        return OrderAnalysis { kind, order, seed: None, sequence };
    }
    detect_quasi(c).unwrap_or_else(OrderAnalysis::unordered)
}

fn detect_quasi(c: &EdgeColoring) -> Option<OrderAnalysis> {
    let n = c.n();
    if n < 3 {
        return None;
    }
    // Seed vertices see exactly one edge off their main color.
    let candidates: Vec<usize> = (0..n)
        .filter(|&v| c.color_degrees(v).iter().any(|&d| d == n - 2))
        .collect();
    for size in [3, 4] {
        let mut pick = Vec::with_capacity(size);
        if let Some(found) = seed_subsets(c, &candidates, size, 0, &mut pick) {
            return Some(found);
        }
    }
    None
}

fn seed_subsets(
    c: &EdgeColoring,
    candidates: &[usize],
    size: usize,
    from: usize,
    pick: &mut Vec<usize>,
) -> Option<OrderAnalysis> {
    if pick.len() == size {
        return try_seed(c, pick);
    }
    for i in from..candidates.len() {
        pick.push(candidates[i]);
        if let Some(found) = seed_subsets(c, candidates, size, i + 1, pick) {
            return Some(found);
        }
        pick.pop();
    }
    None
}

fn try_seed(c: &EdgeColoring, z: &[usize]) -> Option<OrderAnalysis> {
    let n = c.n();
    let tail: Vec<usize> = (0..n).filter(|v| !z.contains(v)).collect();
    let (shape, listing) = if z.len() == 3 {
        triangle_seed(c, z, &tail)?
    } else {
        square_seed(c, z, &tail)?
    };
    // Every seed edge must match the shape, every seed-to-tail edge the main color.
    let mains = shape.mains();
    for a in 0..listing.len() {
        for b in a + 1..listing.len() {
            if c.color(listing[a], listing[b]) != shape.internal_color(a, b) {
                return None;
            }
        }
        if tail.iter().any(|&w| c.color(listing[a], w) != mains[a]) {
            return None;
        }
    }
    let (tail_order, tail_seq) = match tail.len() {
        0 => (Vec::new(), Vec::new()),
        1 => (tail.clone(), vec![*mains.last().unwrap()]),
        _ => greedy_order(c, &tail)?,
    };
    let kind = if is_simply(&tail_seq) { OrderKind::QuasiSimplyOrdered } else { OrderKind::QuasiOrdered };
    let mut order = listing.clone();
    order.extend_from_slice(&tail_order);
    let mut sequence = mains;
    sequence.extend_from_slice(&tail_seq);
    Some(OrderAnalysis { kind, order, seed: Some(Seed { shape, vertices: listing }), sequence })
}

fn main_toward(c: &EdgeColoring, v: usize, tail: &[usize]) -> Option<Color> {
    let first = c.color(v, *tail.first()?);
    tail.iter().all(|&w| c.color(v, w) == first).then_some(first)
}

fn triangle_seed(c: &EdgeColoring, z: &[usize], tail: &[usize]) -> Option<(ZShape, Vec<usize>)> {
    let z0 = z[0];
    let (z1, z2) = match main_toward(c, z0, tail) {
        // The edge of z0 in its main color leads to z1.
        Some(m0) if c.color(z0, z[1]) == m0 => (z[1], z[2]),
        Some(_) => (z[2], z[1]),
        None if tail.is_empty() => (z[1], z[2]),
        None => return None,
    };
    let shape = ZShape::Triangle([c.color(z0, z1), c.color(z1, z2), c.color(z2, z0)]);
    let ZShape::Triangle(m) = shape else { unreachable!() };
    (m[0] != m[1] && m[1] != m[2] && m[0] != m[2]).then_some((shape, vec![z0, z1, z2]))
}

fn square_seed(c: &EdgeColoring, z: &[usize], tail: &[usize]) -> Option<(ZShape, Vec<usize>)> {
    // Inside the seed each vertex has two edges of its main color and one other.
    let main_in_seed = |v: usize| -> Option<Color> {
        let cols: Vec<Color> = z.iter().filter(|&&w| w != v).map(|&w| c.color(v, w)).collect();
        cols.iter().copied().find(|&x| cols.iter().filter(|&&y| y == x).count() == 2)
    };
    let u = z[0];
    let i = main_in_seed(u)?;
    if !tail.is_empty() && main_toward(c, u, tail) != Some(i) {
        return None;
    }
    let v = *z[1..].iter().find(|&&w| main_in_seed(w) == Some(i))?;
    let y = *z[1..].iter().find(|&&w| w != v && c.color(u, w) == i)?;
    let zz = *z[1..].iter().find(|&&w| w != v && w != y)?;
    let j = c.color(y, zz);
    (i != j).then_some((ZShape::Square([i, j]), vec![u, v, y, zz]))
}

/// `M_t(j)` for `j = 0..=n`.
fn prefix_counts(seq: &[Color], t: Color) -> Vec<usize> {
    let mut pc = Vec::with_capacity(seq.len() + 1);
    pc.push(0);
    let mut m = 0;
    for &x in seq {
        m += usize::from(x == t);
        pc.push(m);
    }
    pc
}

/// Colors served by a seed: a cycle or 2-factor avoiding a main color must
/// use two edges at enough seed vertices, and one of them has that color.
fn seed_guarantees(shape: Option<&ZShape>, kind: FamilyKind, q: usize, t: Color) -> bool {
    let Some(shape) = shape else { return false };
    matches!(kind, FamilyKind::Cycles | FamilyKind::TwoRegular)
        && shape.has_color(t)
        && (q == 0 || (q == 1 && shape.size() == 4))
}

fn check_family(family: &FamilySpec) -> Result<()> {
    match family.kind {
        FamilyKind::Matchings | FamilyKind::Cycles | FamilyKind::TwoRegular => Ok(()),
        _ => Err(Error::OutOfScope("the prefix-count characterization covers matchings, cycles and 2-regular families")),
    }
}

/// The witness index for color `t`, or `None` when the color is not guaranteed.
fn witness(seq: &[Color], shape: Option<&ZShape>, family: &FamilySpec, t: Color) -> Option<Witness> {
    let n = seq.len();
    let q = family.q;
    let z = shape.map_or(0, ZShape::size);
    if seed_guarantees(shape, family.kind, q, t) {
        return Some(Witness::Index(z));
    }
    let pc = prefix_counts(seq, t);
    match family.kind {
        FamilyKind::Matchings => {
            // With a seed, prefixes ending inside it do not count.
            let jmin = if shape.is_some() { z + 1 } else { 1 };
            (jmin..=n).find(|&j| 2 * pc[j] > j + q).map(Witness::Index)
        }
        FamilyKind::Cycles => ((q + 1).max(1)..n).find(|&j| 2 * pc[j] >= j + q).map(Witness::Index),
        FamilyKind::TwoRegular => {
            if let Some(j) = (1..=n).find(|&j| 2 * pc[j] > j + q) {
                return Some(Witness::Index(j));
            }
            let tight = |j: usize| 2 * pc[j] == j + q;
            if (1..=n).any(|j| tight(j) && (j == 2 + q || j + 2 == n)) {
                let j = (1..=n).find(|&j| tight(j) && (j == 2 + q || j + 2 == n)).unwrap();
                return Some(Witness::Index(j));
            }
            (4 + q..=n.saturating_sub(3)).find(|&j| tight(j) && tight(j + 2)).map(Witness::Pair)
        }
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Witness {
    /// `M_t(j)` is large enough at `j`.
    Index(usize),
    /// `M_t(j)` and `M_t(j + 2)` are both tight.
    Pair(usize),
}

/// Whether color `t` meets the characterization for `family` on the inherited
/// sequence `seq` (seed listed first when `shape` is given).
pub fn color_condition(seq: &[Color], shape: Option<&ZShape>, family: &FamilySpec, t: Color) -> bool {
    witness(seq, shape, family, t).is_some()
}

/// The characterization over every color of `seq`.
pub fn sequence_predicate(seq: &[Color], shape: Option<&ZShape>, family: &FamilySpec) -> bool {
    let colors: BTreeSet<Color> = seq.iter().copied().collect();
    colors.into_iter().all(|t| color_condition(seq, shape, family, t))
}

/// Decides polychromaticity of an ordered or quasi-ordered coloring from its
/// inherited sequence alone.
pub fn structure_predicate(analysis: &OrderAnalysis, family: &FamilySpec) -> Result<bool> {
    if analysis.kind == OrderKind::Unordered {
        return Err(Error::OutOfScope("coloring is neither ordered nor quasi-ordered"));
    }
    check_family(family)?;
    family.validate(analysis.sequence.len())?;
    Ok(sequence_predicate(&analysis.sequence, analysis.shape(), family))
}

/// Block count of the part after the seed.
fn tail_block_count(seq: &[Color], z: usize) -> usize {
    let tail = &seq[z.min(seq.len())..];
    tail.windows(2).filter(|w| w[0] != w[1]).count() + usize::from(!tail.is_empty())
}

/// Maximal runs of color `t` after the seed, as half-open index ranges.
fn tail_runs(seq: &[Color], z: usize, t: Color) -> Vec<(usize, usize)> {
    let mut runs = Vec::new();
    let mut i = z;
    while i < seq.len() {
        let start = i;
        while i < seq.len() && seq[i] == seq[start] {
            i += 1;
        }
        if seq[start] == t {
            runs.push((start, i));
        }
    }
    runs
}

/// Deletes `run` and pads the end with the color of the new last vertex.
fn delete_and_append(seq: &[Color], run: (usize, usize)) -> Vec<Color> {
    let mut out: Vec<Color> = seq[..run.0].iter().chain(&seq[run.1..]).copied().collect();
    let fill = *out.last().unwrap_or(&seq[run.0]);
    out.resize(seq.len(), fill);
    out
}

/// Moves `from` so that it ends right where `to` starts (`from` left of `to`).
fn move_next_to(seq: &[Color], from: (usize, usize), to: (usize, usize)) -> Vec<Color> {
    let mut out = Vec::with_capacity(seq.len());
    out.extend_from_slice(&seq[..from.0]);
    out.extend_from_slice(&seq[from.1..to.0]);
    out.extend_from_slice(&seq[from.0..from.1]);
    out.extend_from_slice(&seq[to.0..]);
    out
}

/// The block-shift step for color `t`, following the witness for `t`.
fn prescribed_step(seq: &[Color], z: usize, t: Color, w: Witness) -> Option<Vec<Color>> {
    let runs = tail_runs(seq, z, t);
    match w {
        Witness::Pair(j) => {
            // Positions j and j + 2 (1-based) have color t, j + 1 does not.
            let (a, b) = (j, j + 1);
            if a < z || seq[b] != t || seq[a] == t {
                return None;
            }
            let mut out = seq.to_vec();
            out.swap(a, b);
            Some(out)
        }
        Witness::Index(j) => {
            if let Some(&run) = runs.iter().find(|r| r.0 + 1 > j) {
                return Some(delete_and_append(seq, run));
            }
            let at = runs.iter().rposition(|r| r.0 < j.max(1))?;
            (at > 0).then(|| move_next_to(seq, runs[at - 1], runs[at]))
        }
    }
}

/// Every other single block operation on color `t`, in a fixed order.
fn alternative_steps(seq: &[Color], z: usize, t: Color) -> Vec<Vec<Color>> {
    let runs = tail_runs(seq, z, t);
    let mut out = Vec::new();
    for &run in runs.iter().rev() {
        out.push(delete_and_append(seq, run));
    }
    for a in 0..runs.len() {
        for b in a + 1..runs.len() {
            out.push(move_next_to(seq, runs[a], runs[b]));
        }
    }
    out
}

fn color_set(seq: &[Color]) -> BTreeSet<Color> {
    seq.iter().copied().collect()
}

/// Rewrites an inherited sequence satisfying the characterization into one
/// where every color outside the seed forms a single block. Works on the
/// leftmost color with more than one block first.
pub fn normalize_sequence(seq: &[Color], shape: Option<&ZShape>, family: &FamilySpec) -> Result<Vec<Color>> {
    check_family(family)?;
    if !sequence_predicate(seq, shape, family) {
        return Err(Error::NotPolychromatic);
    }
    let z = shape.map_or(0, ZShape::size);
    let colors = color_set(seq);
    let mut cur = seq.to_vec();
    loop {
        let blocks = tail_block_count(&cur, z);
        let split = cur[z..].iter().copied().find(|&c| tail_runs(&cur, z, c).len() > 1);
        let Some(t) = split else { return Ok(cur) };
        let w = witness(&cur, shape, family, t).expect("predicate holds for every color");
        let accept = |next: &Vec<Color>| {
            tail_block_count(next, z) < blocks
                && color_set(next) == colors
                && sequence_predicate(next, shape, family)
        };
        let next = prescribed_step(&cur, z, t, w)
            .filter(|s| accept(s))
            .or_else(|| alternative_steps(&cur, z, t).into_iter().find(|s| accept(s)));
        match next {
            Some(s) => cur = s,
            None => return Err(Error::Precondition(alloc::format!("no block shift applies to {cur:?}"))),
        }
    }
}

/// Turns an ordered (quasi-ordered) polychromatic coloring into a simply-ordered
/// (quasi-simply-ordered) one with the same number of colors. The result is
/// relabeled so that its order is `0..n`.
pub fn block_shift_normalize(c: &EdgeColoring, family: &FamilySpec) -> Result<EdgeColoring> {
    let analysis = detect_order(c);
    if analysis.kind == OrderKind::Unordered {
        return Err(Error::OutOfScope("coloring is neither ordered nor quasi-ordered"));
    }
    family.validate(c.n())?;
    let seq = normalize_sequence(&analysis.sequence, analysis.shape(), family)?;
    match analysis.shape() {
        None => EdgeColoring::from_inherited(&seq),
        Some(shape) => quasi_coloring(shape, &seq[shape.size()..]),
    }
}
