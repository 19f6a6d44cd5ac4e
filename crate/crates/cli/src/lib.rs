//! File formats, parallel verification and the `polychrome` command line.

pub mod cli;
pub mod format;

use polychrome_core::oracle::{exists_avoiding, AvoidanceQuery};
use polychrome_core::{Budget, Color, EdgeColoring, FamilySpec, Result, Subgraph, Verdict};

/// Same result as [`polychrome_core::oracle::verify`], with colors split
/// across `jobs` threads. Witnesses and errors are reported in color order.
pub fn verify_parallel(coloring: &EdgeColoring, family: &FamilySpec, budget: &Budget, jobs: usize) -> Result<Verdict> {
    family.validate(coloring.n())?;
    let k = coloring.k();
    let jobs = jobs.clamp(1, usize::from(k).max(1));
    let query = |t: Color| exists_avoiding(&AvoidanceQuery { coloring, family: *family, banned: t }, budget);
    let mut results: Vec<(Color, Result<Option<Subgraph>>)> = if jobs == 1 {
        (1..=k).map(|t| (t, query(t))).collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|w| {
                    let query = &query;
                    scope.spawn(move || {
                        (1..=k).skip(w).step_by(jobs).map(|t| (t, query(t))).collect::<Vec<_>>()
                    })
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("verification worker panicked")).collect()
        })
    };
    results.sort_by_key(|(t, _)| *t);
    let mut missing = Vec::new();
    for (t, r) in results {
        if let Some(w) = r? {
            missing.push((t, w));
        }
    }
    Ok(Verdict::from_missing(missing))
}
