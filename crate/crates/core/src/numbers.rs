//! Closed forms for polychromatic numbers and cyclic Ramsey numbers.
//!
//! Every branch is an integer interval test; no floating-point logarithms.
//!
//! - `p_f(n, q)`: most colors such that every matching on `n - q` vertices sees all of them.
//! - `p_c(n, q)`: same for cycles of length `n - q`.
//! - `p_r(n, q)`: same for 2-regular subgraphs on at least `n - q` vertices.
//! - `classical_c(s)`: smallest `n` forcing a monochromatic `s`-cycle in every 2-coloring of `K_n`.
//! - `pr_t(s, t)`: smallest `n >= s` such that every `t`-coloring of `K_n` has an
//!   `s`-cycle missing a color.

use core::fmt;

use alloc::format;

use crate::{Error, Result};

/// Which formula produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// Doubling classes `(q+1) 2^{i-1}`: `(q+1)(2^k-1) <= n < (q+1)(2^{k+1}-1)`.
    MatchingDoubling,
    /// 2-regular subgraphs with `q >= 2`, same interval as matchings.
    TwoRegularDoubling,
    /// 2-regular subgraphs with `q = 0`: `2^{k-1}-1 <= n <= 2^k-2`.
    TwoRegularTriangleSeed,
    /// 2-regular subgraphs with `q = 1`: `3 2^{k-1}-2 <= n < 3 2^k-2`.
    TwoRegularSquareSeed,
    /// Cycles with `q >= 2`: `(2^k-1)q + 2^{k-1} < n <= (2^{k+1}-1)q + 2^k`.
    CycleInterval,
    /// Cycles with `q >= 2`, `n - q` odd and `2q+2 <= n <= 3q+2`: two colors
    /// via a bipartite coloring, no simply-ordered optimum.
    CycleOddBand,
    /// `K_5` split into two monochromatic 5-cycles (`q = 2`).
    CycleTwoPentagons,
    /// Cycles with `q = 0`, `n >= 4`: `3 2^{k-3} < n <= 3 2^{k-2}`.
    CycleTriangleSeed,
    /// Rainbow triangle, `n = 3`, `q = 0`; confirmed by exhaustive search.
    CycleRainbowTriangle,
    /// Cycles with `q = 1`, `n >= 5`: `5 2^{k-2} <= n < 5 2^{k-1}`.
    CycleSquareSeed,
    /// Proper 3-edge-coloring of `K_4`, `q = 1`; confirmed by exhaustive search.
    CycleProperK4,
    /// `c(3) = c(4) = 6`.
    ClassicalSmall,
    /// `c(s) = 2s - 1` for odd `s >= 5`.
    ClassicalOdd,
    /// `c(s) = 3s/2 - 1` for even `s >= 6`.
    ClassicalEven,
    /// `pr_2(s) = c(s)`.
    RamseyTwoColors,
    /// `3 < s <= 3 2^{t-3}`: `pr_t(s) = s`.
    RamseyEqual,
    /// `3 2^{t-3} + 1 <= s <= 5 2^{t-2} - 2`: `s + 1`.
    RamseyPlusOne,
    /// `5 2^{t-2} - 1 <= s <= 5 2^{t-1} - 4`: `s + 2`.
    RamseyPlusTwo,
    /// `s >= 5 2^{t-1} - 3`: `s + round((s-2)/(2^t-2))`, halves rounded up.
    RamseyRounded,
    /// Triangles with three colors: `pr_3(3) = 5`, outside every band.
    RamseyTriangle,
}

impl Branch {
    pub fn name(&self) -> &'static str {
        match self {
            Branch::MatchingDoubling => "matching_doubling",
            Branch::TwoRegularDoubling => "two_regular_doubling",
            Branch::TwoRegularTriangleSeed => "two_regular_triangle_seed",
            Branch::TwoRegularSquareSeed => "two_regular_square_seed",
            Branch::CycleInterval => "cycle_interval",
            Branch::CycleOddBand => "cycle_odd_band",
            Branch::CycleTwoPentagons => "cycle_two_pentagons",
            Branch::CycleTriangleSeed => "cycle_triangle_seed",
            Branch::CycleRainbowTriangle => "cycle_rainbow_triangle",
            Branch::CycleSquareSeed => "cycle_square_seed",
            Branch::CycleProperK4 => "cycle_proper_k4",
            Branch::ClassicalSmall => "classical_small",
            Branch::ClassicalOdd => "classical_odd",
            Branch::ClassicalEven => "classical_even",
            Branch::RamseyTwoColors => "ramsey_two_colors",
            Branch::RamseyEqual => "ramsey_equal",
            Branch::RamseyPlusOne => "ramsey_plus_one",
            Branch::RamseyPlusTwo => "ramsey_plus_two",
            Branch::RamseyRounded => "ramsey_rounded",
            Branch::RamseyTriangle => "ramsey_triangle",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NumberResult {
    pub value: usize,
    pub provenance: Branch,
}

fn result(value: usize, provenance: Branch) -> Result<NumberResult> {
    Ok(NumberResult { value, provenance })
}

fn pow2(k: usize) -> usize {
    1usize << k
}

/// Smallest `k >= start` with `inside(k)`, given that the intervals for
/// consecutive `k` tile the range of valid `n`.
fn first_k(start: usize, inside: impl Fn(usize) -> bool) -> usize {
    (start..usize::BITS as usize - 2).find(|&k| inside(k)).expect("intervals tile every valid n")
}

/// `k` with `(q+1)(2^k-1) <= n < (q+1)(2^{k+1}-1)`; requires `n >= q + 1`.
fn doubling_k(n: usize, q: usize) -> usize {
    first_k(1, |k| (q + 1) * (pow2(k) - 1) <= n && n < (q + 1) * (pow2(k + 1) - 1))
}

pub fn p_f(n: usize, q: usize) -> Result<NumberResult> {
    if n <= q || (n - q) % 2 == 1 {
        return Err(Error::Precondition(format!("n - q = {} must be positive and even", n as i64 - q as i64)));
    }
    result(doubling_k(n, q), Branch::MatchingDoubling)
}

pub fn p_c(n: usize, q: usize) -> Result<NumberResult> {
    if n < q + 3 {
        return Err(Error::Precondition(format!("cycles need n - q >= 3 (n = {n}, q = {q})")));
    }
    match q {
        0 if n == 3 => result(3, Branch::CycleRainbowTriangle),
        0 => result(first_k(3, |k| 3 * pow2(k - 3) < n && n <= 3 * pow2(k - 2)), Branch::CycleTriangleSeed),
        1 if n == 4 => result(3, Branch::CycleProperK4),
        1 => result(first_k(2, |k| 5 * pow2(k - 2) <= n && n < 5 * pow2(k - 1)), Branch::CycleSquareSeed),
        _ if q == 2 && n == 5 => result(2, Branch::CycleTwoPentagons),
        _ if (n - q) % 2 == 1 && 2 * q + 2 <= n && n <= 3 * q + 2 => result(2, Branch::CycleOddBand),
        _ => result(cycle_k(n, q), Branch::CycleInterval),
    }
}

/// `k` with `(2^k-1)q + 2^{k-1} < n <= (2^{k+1}-1)q + 2^k`.
pub(crate) fn cycle_k(n: usize, q: usize) -> usize {
    first_k(1, |k| (pow2(k) - 1) * q + pow2(k - 1) < n && n <= (pow2(k + 1) - 1) * q + pow2(k))
}

pub fn p_r(n: usize, q: usize) -> Result<NumberResult> {
    let min = q + 3;
    if n < min {
        return Err(Error::Precondition(format!("2-regular subgraphs need n >= {min} for q = {q}")));
    }
    match q {
        0 => result(first_k(3, |k| pow2(k - 1) - 1 <= n && n <= pow2(k) - 2), Branch::TwoRegularTriangleSeed),
        1 => result(first_k(2, |k| 3 * pow2(k - 1) - 2 <= n && n < 3 * pow2(k) - 2), Branch::TwoRegularSquareSeed),
        _ => result(doubling_k(n, q), Branch::TwoRegularDoubling),
    }
}

pub fn classical_c(s: usize) -> Result<NumberResult> {
    match s {
        0..=2 => Err(Error::Precondition(format!("cycle length {s} is below 3"))),
        3 | 4 => result(6, Branch::ClassicalSmall),
        _ if s % 2 == 1 => result(2 * s - 1, Branch::ClassicalOdd),
        _ => result(3 * s / 2 - 1, Branch::ClassicalEven),
    }
}

/// Nearest integer to `a / b`, halves rounded up.
fn round_half_up(a: usize, b: usize) -> usize {
    (2 * a + b) / (2 * b)
}

pub fn pr_t(s: usize, t: usize) -> Result<NumberResult> {
    if t < 2 || s < 3 || s < t {
        return Err(Error::Precondition(format!("need t >= 2, s >= 3 and s >= t (s = {s}, t = {t})")));
    }
    if t == 2 {
        return result(classical_c(s)?.value, Branch::RamseyTwoColors);
    }
    if t >= usize::BITS as usize - 4 {
        return Err(Error::Precondition(format!("t = {t} is too large")));
    }
    let a = 3 * pow2(t - 3);
    let b = 5 * pow2(t - 2);
    let c = 5 * pow2(t - 1);
    if s == 3 {
        // Only t = 3 reaches here (s >= t); no band covers it.
        return result(5, Branch::RamseyTriangle);
    }
    if s <= a {
        result(s, Branch::RamseyEqual)
    } else if s + 2 <= b {
        result(s + 1, Branch::RamseyPlusOne)
    } else if s + 4 <= c {
        result(s + 2, Branch::RamseyPlusTwo)
    } else {
        result(s + round_half_up(s - 2, pow2(t) - 2), Branch::RamseyRounded)
    }
}

/// Cross-check of `pr_t` against `p_c`: `pr_t(s) = s + min { q : p_c(s+q, q) < t }`.
pub fn pr_consistency(s: usize, t: usize) -> bool {
    let Ok(pr) = pr_t(s, t) else { return false };
    if t == 2 {
        return pr.value == classical_c(s).map_or(0, |c| c.value);
    }
    let q = (0..).find(|&q| p_c(s + q, q).map_or(true, |r| r.value < t)).unwrap();
    pr.value == s + q
}
