//! Parallel batch drivers. Each decision is independent and side-effect
//! free, so the cell lists are mapped with rayon; collecting an indexed
//! parallel iterator preserves input order, which keeps output
//! deterministic regardless of thread count.

use monoid_core::complex::{build_complex_with, survey_cell};
use monoid_core::omission::tightness_cell;
use monoid_core::{
    ArithmeticalMonoid, ComplexOptions, LengthDecider, OmissionComplex, Result, SurveyRow,
    TightnessRow,
};
use rayon::prelude::*;

/// Builds the omission complex, deciding subsets in parallel.
///
/// The shortcut path costs nothing and the pruning path is inherently
/// sequential (each verdict can retire later subsets), so both are left to
/// the serial construction in monoid-core.
pub fn complex(m: &ArithmeticalMonoid, options: ComplexOptions) -> Result<OmissionComplex> {
    let w = m.w();
    let shortcut_fires = options.use_shortcut && m.a() >= w * (w - 3);
    if shortcut_fires || options.prune_supersets || w < 4 {
        return build_complex_with(m, options);
    }
    let decider = LengthDecider::new(m)?;
    let ground: Vec<u64> = (2..=w - 2).collect();
    let mut masks: Vec<u32> = (0..1u32 << ground.len()).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let faces = masks
        .par_iter()
        .map(|&mask| {
            let subset: Vec<u64> = ground
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &r)| r)
                .collect();
            let verdict = decider.decide(&subset)?;
            Ok((verdict.lengths_equal == Some(true)).then_some(subset))
        })
        .collect::<Result<Vec<_>>>()?;
    OmissionComplex::from_faces(m, &faces.into_iter().flatten().collect::<Vec<_>>())
}

/// All (w, d) tightness cells, ordered by (w, d).
pub fn tightness(
    w_range: std::ops::RangeInclusive<u64>,
    d_range: std::ops::RangeInclusive<u64>,
) -> Result<Vec<TightnessRow>> {
    let mut cells = Vec::new();
    for w in w_range {
        for d in d_range.clone() {
            cells.push((w, d));
        }
    }
    cells
        .par_iter()
        .map(|&(w, d)| tightness_cell(w, d))
        .collect()
}

/// All valid (a, d, w) survey cells, ordered by (a, d, w). Cells that do
/// not define an arithmetical monoid are skipped, like in the serial
/// survey.
pub fn survey(
    a_range: std::ops::RangeInclusive<u64>,
    d_range: std::ops::RangeInclusive<u64>,
    w_range: std::ops::RangeInclusive<u64>,
) -> Vec<SurveyRow> {
    let mut cells = Vec::new();
    for a in a_range {
        for d in d_range.clone() {
            for w in w_range.clone() {
                if w >= 4 && w < a && gcd(a, d) == 1 {
                    cells.push((a, d, w));
                }
            }
        }
    }
    cells
        .par_iter()
        .map(|&(a, d, w)| survey_cell(a, d, w).expect("cell validated before dispatch"))
        .collect()
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
