//! Inputs shared by the benchmarks.

use tunnelcalc::{SplittingKind, SplittingSpec, TorusKnot};

/// Normalized nontrivial torus knots `T(a,b)` with `a <= max_a`.
pub fn normalized_bases(max_a: i64) -> Vec<TorusKnot> {
    (3..=max_a)
        .flat_map(|a| (2..a).filter_map(move |b| TorusKnot::new(a, b).ok()))
        .collect()
}

/// Every splitting on `bases` with twist count in `[-twists, twists]`, `n != 0`.
pub fn splitting_grid(bases: &[TorusKnot], twists: i64) -> Vec<SplittingSpec> {
    let mut specs = Vec::new();
    for &base in bases {
        for kind in SplittingKind::ALL {
            for n in (-twists..=twists).filter(|&n| n != 0) {
                specs.push(SplittingSpec { base, kind, n });
            }
        }
    }
    specs
}
