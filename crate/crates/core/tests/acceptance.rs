//! Acceptance criteria, one `[PASS]`/`[FAIL]` line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use polychrome_core::constructions::{
    build_seed, construct_bipartite_witness, construct_quasi, construct_simply_ordered, extend_seed,
};
use polychrome_core::numbers::{p_c, p_f, p_r, pr_consistency, pr_t};
use polychrome_core::oracle::{check_cycle_monotonicity, exists_avoiding, verify, AvoidanceQuery};
use polychrome_core::search::{best_quasi, best_simply_ordered, cyclic_ramsey_coloring, full_search, SearchMode};
use polychrome_core::structure::{
    block_shift_normalize, detect_order, structure_predicate, quasi_coloring, OrderKind, ZShape,
};
use polychrome_core::{Budget, Color, EdgeColoring, Error, FamilyKind, FamilySpec};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn budget() -> Budget {
    Budget::default()
}

fn polychromatic(c: &EdgeColoring, f: &FamilySpec) -> Result<bool, String> {
    verify(c, f, &budget()).map(|v| v.polychromatic).map_err(|e| format!("{f} n={}: {e}", c.n()))
}

fn closed_form(f: &FamilySpec, n: usize) -> Result<usize, Error> {
    Ok(match f.kind {
        FamilyKind::Matchings => p_f(n, f.q)?.value,
        FamilyKind::Cycles => p_c(n, f.q)?.value,
        FamilyKind::TwoRegular => p_r(n, f.q)?.value,
        _ => unreachable!(),
    })
}

/// The construction for `f` on `K_n`, falling back to the two-color witnesses
/// where no simply-ordered optimum exists.
fn construct(f: &FamilySpec, n: usize) -> Result<EdgeColoring, String> {
    let err = |e: Error| format!("{f} n={n}: {e}");
    if f.q <= 1 && f.kind != FamilyKind::Matchings {
        if f.kind == FamilyKind::Cycles && f.q == 1 && n == 4 {
            return best_quasi(n, f, &budget()).map(|r| r.coloring).map_err(err);
        }
        return construct_quasi(f, n).map(|q| q.coloring).map_err(err);
    }
    match construct_simply_ordered(f, n) {
        Ok((c, _)) => Ok(c),
        Err(Error::NoSimplyOrderedOptimum { .. }) if n - f.q >= 5 => {
            construct_bipartite_witness(n - f.q, n).map_err(err)
        }
        Err(Error::NoSimplyOrderedOptimum { .. }) => full_search(n, f, 2, &budget())
            .map_err(err)?
            .ok_or_else(|| format!("{f} n={n}: no 2-coloring found")),
        Err(e) => Err(err(e)),
    }
}

fn criterion_1() -> Outcome {
    let mut families = Vec::new();
    for q in [0, 2, 4] {
        families.push(FamilySpec::matchings(q));
    }
    for q in [2, 3, 4] {
        families.push(FamilySpec::cycles(q));
        families.push(FamilySpec::two_regular(q));
    }
    for q in [0, 1] {
        families.push(FamilySpec::cycles(q));
        families.push(FamilySpec::two_regular(q));
    }
    let mut checked = 0;
    for f in &families {
        for n in 2..=12 {
            let Ok(expected) = closed_form(f, n) else { continue };
            if f.validate(n).is_err() {
                continue;
            }
            let c = construct(f, n)?;
            if !polychromatic(&c, f)? {
                return Err(format!("{f} n={n}: construction is not polychromatic"));
            }
            if usize::from(c.k()) != expected {
                return Err(format!("{f} n={n}: {} colors, closed form {expected}", c.k()));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (family, n) pairs"))
}

/// Adjacent-distinct color patterns for `blocks` blocks, new colors in order,
/// drawing on `base` pre-existing colors.
fn color_patterns(blocks: usize, base: Color, first_prev: Option<Color>) -> Vec<Vec<Color>> {
    fn go(left: usize, prev: Option<Color>, top: Color, cur: &mut Vec<Color>, out: &mut Vec<Vec<Color>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for c in 1..=top + 1 {
            if Some(c) == prev {
                continue;
            }
            cur.push(c);
            go(left - 1, Some(c), top.max(c), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(blocks, first_prev, base, &mut Vec::new(), &mut out);
    out
}

fn compositions(m: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max_parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() == max_parts {
            return;
        }
        for s in 1..=rest {
            cur.push(s);
            go(rest - s, max_parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, max_parts, &mut Vec::new(), &mut out);
    out
}

/// Inherited sequences of length `m` (last two entries equal) with at most four
/// blocks over `base` existing colors plus new ones.
fn sequences(m: usize, base: Color) -> Vec<Vec<Color>> {
    match m {
        0 => return vec![Vec::new()],
        1 => return vec![vec![base.max(1)]],
        _ => {}
    }
    let mut out = Vec::new();
    for lengths in compositions(m - 1, 4) {
        for colors in color_patterns(lengths.len(), base, None) {
            let mut seq = Vec::with_capacity(m);
            for (&len, &c) in lengths.iter().zip(&colors) {
                seq.extend(std::iter::repeat(c).take(len));
            }
            seq.push(*seq.last().unwrap());
            out.push(seq);
        }
    }
    out
}

/// The ordered and seeded test colorings on `K_n`.
fn suite(n: usize) -> Vec<EdgeColoring> {
    let mut out: Vec<EdgeColoring> =
        sequences(n, 0).iter().map(|s| EdgeColoring::from_inherited(s).unwrap()).collect();
    for shape in [ZShape::Triangle([1, 2, 3]), ZShape::Square([1, 2])] {
        if n < shape.size() {
            continue;
        }
        let base = *shape.mains().iter().max().unwrap();
        for tail in sequences(n - shape.size(), base) {
            out.push(quasi_coloring(&shape, &tail).unwrap());
        }
    }
    out
}

fn families(n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for q in 0..=3 {
        for f in [FamilySpec::matchings(q), FamilySpec::cycles(q), FamilySpec::two_regular(q)] {
            if f.validate(n).is_ok() {
                out.push(f);
            }
        }
    }
    out
}

fn criterion_2() -> Outcome {
    let mut compared = 0;
    let mut mismatches = Vec::new();
    for n in 2..=10 {
        for c in suite(n) {
            let analysis = detect_order(&c);
            for f in families(n) {
                let predicted = structure_predicate(&analysis, &f).map_err(|e| format!("{f} {c:?}: {e}"))?;
                if predicted != polychromatic(&c, &f)? {
                    mismatches.push(format!("{f} n={n} sequence {:?}", analysis.sequence));
                }
                compared += 1;
            }
        }
    }
    if mismatches.is_empty() {
        Ok(format!("{compared} comparisons, 0 mismatches"))
    } else {
        Err(format!("{} mismatches, first: {}", mismatches.len(), mismatches[0]))
    }
}

fn criterion_3() -> Outcome {
    for s in [3, 4] {
        if cyclic_ramsey_coloring(5, s, 2, 1, &budget()).map_err(|e| e.to_string())?.is_none() {
            return Err(format!("K_5 has no 2-coloring without a monochromatic C_{s}"));
        }
        if let Some(c) = cyclic_ramsey_coloring(6, s, 2, 1, &budget()).map_err(|e| e.to_string())? {
            return Err(format!("K_6 coloring {c:?} avoids monochromatic C_{s}"));
        }
    }
    Ok("c(3) = c(4) = 6".into())
}

fn criterion_4() -> Outcome {
    let mut cases = Vec::new();
    for q in [2, 3, 4] {
        for n in 2 * q + 2..=(3 * q + 2).min(11) {
            if (n - q) % 2 == 0 {
                continue;
            }
            let f = FamilySpec::cycles(q);
            let c = construct_bipartite_witness(n - q, n).map_err(|e| e.to_string())?;
            if c.k() != 2 || !polychromatic(&c, &f)? {
                return Err(format!("{f} n={n}: bipartite witness fails"));
            }
            for mode in [SearchMode::Greedy, SearchMode::ExhaustiveBlocks] {
                let r = best_simply_ordered(n, &f, mode, &budget()).map_err(|e| e.to_string())?;
                if r.best_k != 1 {
                    return Err(format!("{f} n={n}: {} search finds k = {}", mode.name(), r.best_k));
                }
            }
            cases.push(format!("(q={q}, n={n})"));
        }
    }
    Ok(cases.join(" "))
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checks = 0;
    let mut nonvacuous = 0;
    for _ in 0..200 {
        let n = rng.gen_range(6..=9);
        let c = loop {
            if let Ok(c) = EdgeColoring::from_fn(n, |_, _| rng.gen_range(1..=3)) {
                break c;
            }
        };
        let holds: Vec<bool> = (3..=n)
            .map(|len| polychromatic(&c, &FamilySpec::cycles(n - len)))
            .collect::<Result<_, _>>()?;
        for j in 4..n {
            if holds[j - 3] {
                nonvacuous += 1;
                if !holds[j - 2] {
                    return Err(format!("{c:?}: all {j}-cycles polychromatic, some {}-cycle not", j + 1));
                }
            }
            if !check_cycle_monotonicity(&c, j, &budget()).map_err(|e| e.to_string())? {
                return Err(format!("{c:?}: monotonicity fails from j = {j}"));
            }
            checks += 1;
        }
    }
    // For n <= 9 and j < n no 3-coloring has all j-cycles polychromatic
    // (p_c(n, n - j) <= 2), so every premise here is false.
    Ok(format!("{checks} implications, {nonvacuous} with a polychromatic premise, 0 violations"))
}

fn criterion_6() -> Outcome {
    let mut checked = Vec::new();
    for n in 2..=5 {
        for q in 0..n {
            for f in [FamilySpec::matchings(q), FamilySpec::cycles(q), FamilySpec::two_regular(q)] {
                if f.validate(n).is_err() {
                    continue;
                }
                let Ok(expected) = closed_form(&f, n) else { continue };
                let found = full_search(n, &f, expected, &budget()).map_err(|e| e.to_string())?;
                let beyond = full_search(n, &f, expected + 1, &budget()).map_err(|e| e.to_string())?;
                if found.is_none() || beyond.is_some() {
                    return Err(format!("{f} n={n}: full search disagrees with {expected}"));
                }
                checked.push(format!("{f}({n})={expected}"));
            }
        }
    }
    for (n, f, v) in [(5, FamilySpec::cycles(2), 2), (4, FamilySpec::cycles(1), 3), (3, FamilySpec::cycles(0), 3)] {
        if !checked.contains(&format!("{f}({n})={v}")) {
            return Err(format!("special case {f}({n})={v} not confirmed"));
        }
    }
    Ok(format!("{} values", checked.len()))
}

fn criterion_7() -> Outcome {
    let mut count = 0;
    for t in 3..=5 {
        for s in t.max(3)..=500 {
            if !pr_consistency(s, t) {
                return Err(format!("pr_{t}({s}) is inconsistent"));
            }
            count += 1;
        }
    }
    for (s, t, v) in [(17, 3, 20), (5, 4, 5), (10, 3, 12)] {
        let got = pr_t(s, t).map_err(|e| e.to_string())?.value;
        if got != v {
            return Err(format!("pr_{t}({s}) = {got}, expected {v}"));
        }
    }
    Ok(format!("{count} (s, t) pairs consistent; spot values reproduced"))
}

fn criterion_8() -> Outcome {
    let mut normalized = 0;
    for n in 2..=9 {
        for c in suite(n) {
            let kind = detect_order(&c).kind;
            for f in families(n) {
                if !polychromatic(&c, &f)? {
                    continue;
                }
                let out = block_shift_normalize(&c, &f).map_err(|e| format!("{f} {c:?}: {e}"))?;
                let want = if kind.is_quasi() { OrderKind::QuasiSimplyOrdered } else { OrderKind::SimplyOrdered };
                let got = detect_order(&out).kind;
                if got != want || out.k() != c.k() || !polychromatic(&out, &f)? {
                    return Err(format!("{f} {c:?}: normalized to {got:?} with k = {}", out.k()));
                }
                normalized += 1;
            }
        }
    }
    Ok(format!("{normalized} polychromatic colorings normalized"))
}

fn criterion_9() -> Outcome {
    let pentagon = build_seed(3, 0).map_err(|e| e.to_string())?;
    for i in 0..5 {
        for d in [1, 2] {
            let c = pentagon.internal.color(i, (i + d) % 5);
            if c != i as Color + 1 {
                return Err(format!("pentagon edge ({i}, {}) has color {c}", (i + d) % 5));
            }
        }
    }
    let seed = build_seed(4, 2).map_err(|e| e.to_string())?;
    let (_, classes) = extend_seed(&seed, 45, FamilyKind::TwoRegular).map_err(|e| e.to_string())?;
    if classes != [3, 3, 3, 12, 24] {
        return Err(format!("seed(4, 2) extended to 45 vertices has classes {classes:?}"));
    }
    let mut probes = 0;
    for n in 5..=9 {
        for f in [FamilySpec::r_regular(3, 0), FamilySpec::connected_r_regular(3, 0)] {
            if f.validate(n).is_err() {
                continue;
            }
            let (c, _) = extend_seed(&pentagon, n, FamilyKind::TwoRegular).map_err(|e| e.to_string())?;
            for t in 1..=5 {
                let query = AvoidanceQuery { coloring: &c, family: f, banned: t };
                if let Some(w) = exists_avoiding(&query, &budget()).map_err(|e| e.to_string())? {
                    return Err(format!("{f} n={n}: member {w:?} misses seed color {t}"));
                }
                probes += 1;
            }
        }
    }
    Ok(format!("pentagon and classes [3, 3, 3, 12, 24] reproduced; {probes} seed-color probes"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 9] = [
        ("construction soundness", criterion_1, Duration::from_secs(300)),
        ("prefix-count characterization equals oracle", criterion_2, Duration::MAX),
        ("classical cycle Ramsey numbers", criterion_3, Duration::from_secs(60)),
        ("odd band: bipartite witnesses, simply-ordered k = 1", criterion_4, Duration::MAX),
        ("cycle monotonicity on random 3-colorings", criterion_5, Duration::MAX),
        ("full search confirms closed forms", criterion_6, Duration::from_secs(600)),
        ("cyclic Ramsey band consistency", criterion_7, Duration::MAX),
        ("block-shift normalization", criterion_8, Duration::MAX),
        ("r-regular seed probe", criterion_9, Duration::MAX),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > *limit => Err(format!("took {elapsed:.1?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("[PASS] {} {name}: {detail} ({elapsed:.1?})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {} {name}: {detail} ({elapsed:.1?})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
