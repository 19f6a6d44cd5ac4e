//! Exact deciders: does some family member avoid a color?
//!
//! Every decider is exact. Instances too large for the configured [`Budget`]
//! fail with [`Error::BudgetExceeded`] instead of returning a guess.
//!
//! - matchings: maximum matching of the graph left after deleting the banned
//!   color (blossom algorithm, any `n <= 64`);
//! - cycles and 2-regular subgraphs: subset dynamic programming over paths
//!   that start at the smallest vertex of their set (`n <= 24`);
//! - `r`-regular subgraphs with `r >= 3`: backtracking over supports and
//!   degree-constrained edge choices.

mod cycles;
mod matching;
mod regular;

use alloc::vec::Vec;

use crate::graph::{family_member, Color, EdgeColoring, FamilyKind, FamilySpec, Subgraph, Verdict};
use crate::{Error, Result};

pub(crate) use regular::bits;

/// Work limit for exact searches, in elementary steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub limit: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Self { limit: 1_000_000_000 }
    }
}

impl Budget {
    pub const fn new(limit: u64) -> Self {
        Self { limit }
    }

    pub const fn unlimited() -> Self {
        Self { limit: u64::MAX }
    }

    pub(crate) fn meter(&self, what: &'static str) -> Meter {
        Meter { used: 0, limit: self.limit, what }
    }

    /// Fails up front when an estimated cost is over the limit.
    pub(crate) fn admit(&self, what: &'static str, cost: u64) -> Result<()> {
        if cost > self.limit {
            Err(Error::BudgetExceeded { what, limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Step counter for backtracking searches.
pub(crate) struct Meter {
    used: u64,
    limit: u64,
    what: &'static str,
}

impl Meter {
    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::BudgetExceeded { what: self.what, limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}

/// Largest `n` handled by the subset dynamic programs.
const MAX_SUBSET_N: usize = 24;

/// Asks whether some member of `family` in the colored `K_n` has no edge of color `banned`.
#[derive(Debug, Clone, Copy)]
pub struct AvoidanceQuery<'a> {
    pub coloring: &'a EdgeColoring,
    pub family: FamilySpec,
    pub banned: Color,
}

/// Neighbor masks of the graph formed by all edges not colored `banned`.
fn avoiding_masks(coloring: &EdgeColoring, banned: Color) -> Vec<u64> {
    let n = coloring.n();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    coloring
        .class_masks(banned)
        .into_iter()
        .enumerate()
        .map(|(v, m)| full & !m & !(1 << v))
        .collect()
}

/// A member of the family avoiding the banned color, if any.
pub fn exists_avoiding(query: &AvoidanceQuery<'_>, budget: &Budget) -> Result<Option<Subgraph>> {
    let AvoidanceQuery { coloring, family, banned } = *query;
    let n = coloring.n();
    family.validate(n)?;
    if banned == 0 || banned > coloring.k() {
        return Err(Error::Precondition(alloc::format!(
            "banned color {banned} is not in 1..={}",
            coloring.k()
        )));
    }
    if n > 64 {
        return Err(Error::BudgetExceeded { what: "graphs beyond 64 vertices", limit: 64 });
    }
    let adj = avoiding_masks(coloring, banned);
    let span = family.span(n);
    let edges = match (family.kind, family.r) {
        (FamilyKind::Matchings, _) | (FamilyKind::RRegular, 1) => matching_edges(&adj, span / 2),
        (FamilyKind::Cycles, _) | (FamilyKind::ConnectedRRegular, 2) => {
            subset_dp_allowed(n, budget, cycles::path_cost(n))?;
            cycles::cycle_of_length(&adj, span).map(|c| cycle_edges(&c))
        }
        (FamilyKind::TwoRegular, _) => {
            subset_dp_allowed(n, budget, cycles::cover_cost(n))?;
            cycles::cycle_cover(&adj, span).map(|cs| cs.iter().flat_map(|c| cycle_edges(c)).collect())
        }
        (FamilyKind::RRegular, 2) => {
            subset_dp_allowed(n, budget, cycles::cover_cost(n))?;
            cycles::cycle_cover_exact(&adj, span)
                .map(|cs| cs.iter().flat_map(|c| cycle_edges(c)).collect())
        }
        (FamilyKind::RRegular, r) | (FamilyKind::ConnectedRRegular, r) => {
            let connected = family.kind == FamilyKind::ConnectedRRegular;
            let mut meter = budget.meter("regular subgraph search");
            regular::regular_subgraph(&adj, r, span, connected, &mut meter)?
        }
    };
    let Some(edges) = edges else {
        return Ok(None);
    };
    let witness = Subgraph::new(edges)?;
    assert!(
        family_member(&family, n, &witness)? && witness.edges().iter().all(|&(u, v)| coloring.color(u, v) != banned),
        "oracle produced an invalid witness {witness:?} for {family}"
    );
    Ok(Some(witness))
}

fn subset_dp_allowed(n: usize, budget: &Budget, cost: u64) -> Result<()> {
    if n > MAX_SUBSET_N {
        return Err(Error::BudgetExceeded {
            what: "subset dynamic program beyond 24 vertices",
            limit: MAX_SUBSET_N as u64,
        });
    }
    budget.admit("subset dynamic program", cost)
}

fn matching_edges(adj: &[u64], need: usize) -> Option<Vec<(usize, usize)>> {
    let mate = matching::maximum_matching(adj);
    let pairs = matching::matched_pairs(&mate);
    (pairs.len() >= need).then(|| pairs[..need].to_vec())
}

fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    let m = cycle.len();
    (0..m).map(|i| (cycle[i], cycle[(i + 1) % m])).collect()
}

/// Size of a maximum matching among the edges not colored `banned`.
pub fn matching_number(coloring: &EdgeColoring, banned: Color) -> usize {
    matching::matching_size(&matching::maximum_matching(&avoiding_masks(coloring, banned)))
}

/// Checks every color; `missing` lists each color some member avoids, with a witness.
pub fn verify(coloring: &EdgeColoring, family: &FamilySpec, budget: &Budget) -> Result<Verdict> {
    family.validate(coloring.n())?;
    let mut missing = Vec::new();
    for banned in 1..=coloring.k() {
        let query = AvoidanceQuery { coloring, family: *family, banned };
        if let Some(w) = exists_avoiding(&query, budget)? {
            missing.push((banned, w));
        }
    }
    Ok(Verdict::from_missing(missing))
}

/// Bitmask of the cycle lengths present among edges not colored `banned`.
fn cycle_lengths_avoiding(coloring: &EdgeColoring, banned: Color) -> u64 {
    let adj = avoiding_masks(coloring, banned);
    let n = adj.len();
    let table = cycles::PathTable::new(&adj, n);
    let mut lengths = 0u64;
    for set in 1usize..(1 << n) {
        if table.has_cycle(set) {
            lengths |= 1 << set.count_ones();
        }
    }
    lengths
}

/// Whether every cycle of exactly `len` vertices sees all colors.
pub fn cycles_polychromatic(coloring: &EdgeColoring, len: usize, budget: &Budget) -> Result<bool> {
    let family = FamilySpec::cycles(coloring.n().saturating_sub(len));
    Ok(verify(coloring, &family, budget)?.polychromatic)
}

/// For colorings with at least three colors: if all `j`-cycles see every
/// color then so do all longer cycles. Returns whether that implication holds.
pub fn check_cycle_monotonicity(coloring: &EdgeColoring, j: usize, budget: &Budget) -> Result<bool> {
    let n = coloring.n();
    if coloring.k() < 3 {
        return Err(Error::Precondition("cycle monotonicity needs at least 3 colors".into()));
    }
    if j < 4 || j > n {
        return Err(Error::Precondition(alloc::format!("cycle length {j} is not in 4..={n}")));
    }
    subset_dp_allowed(n, budget, cycles::path_cost(n).saturating_mul(u64::from(coloring.k())))?;
    // Lengths at which some cycle misses some color.
    let mut failing = 0u64;
    for t in 1..=coloring.k() {
        failing |= cycle_lengths_avoiding(coloring, t);
    }
    let polychromatic_at = |len: usize| failing >> len & 1 == 0;
    Ok(!polychromatic_at(j) || (j..=n).all(polychromatic_at))
}
