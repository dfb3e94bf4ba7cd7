//! Enumeration of the omission sets that preserve the length-set collection,
//! viewed as a simplicial complex.
//!
//! For `S = <a, a+d, ..., a+wd>` the interior indices `{2, ..., w-2}` can be
//! dropped in any combination; the subsets whose omission keeps `L(S') =
//! L(S)` form a family conjectured (and so far always observed) to be closed
//! under taking subsets. This module enumerates all `2^(w-3)` subsets with
//! one shared [`LengthDecider`], derives the two antichains that summarize
//! the family (maximal faces, minimal non-faces), and checks downward
//! closure. A failure of closure would answer an open question, so the
//! default enumeration never assumes it: every subset is decided on its own,
//! and superset pruning is a separate opt-in for bulk surveys.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::arithmetical::ArithmeticalMonoid;
use crate::error::{Error, Result};
use crate::monoid::gcd;
use crate::omission::{len_shortcut_applies, LengthDecider};

/// Knobs for [`build_complex_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexOptions {
    /// Declare the full powerset without deciding anything when
    /// `a >= w^2 - 3w`. On by default; turn off to cross-check the bound.
    pub use_shortcut: bool,
    /// Skip (and count as non-faces) all supersets of discovered non-faces.
    /// Sound only if the family really is downward closed, which is exactly
    /// the open question, so this is off by default and meant for large
    /// surveys where speed matters more than counterexample hunting.
    pub prune_supersets: bool,
}

impl Default for ComplexOptions {
    fn default() -> Self {
        ComplexOptions {
            use_shortcut: true,
            prune_supersets: false,
        }
    }
}

/// A face with a proper subset that is not a face; the family is not a
/// simplicial complex when any of these exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub face: Vec<u64>,
    pub missing_subset: Vec<u64>,
}

/// The family of length-set-preserving omission sets over `{2, ..., w-2}`.
///
/// All lists are ascending; families are ordered by cardinality, then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmissionComplex {
    ground_set: Vec<u64>,
    faces: Vec<Vec<u64>>,
    maximal_faces: Vec<Vec<u64>>,
    minimal_nonfaces: Vec<Vec<u64>>,
    downward_closed: bool,
}

impl OmissionComplex {
    /// Assembles the full structure from an already-evaluated face family
    /// (for callers that distribute the per-subset decisions themselves).
    /// Faces are canonicalized and must be subsets of `{2, ..., w-2}`.
    pub fn from_faces(m: &ArithmeticalMonoid, faces: &[Vec<u64>]) -> Result<Self> {
        let ground = ground_set(m)?;
        let mut face_masks = BTreeSet::new();
        for face in faces {
            face_masks.insert(mask_of(face, &ground)?);
        }
        Ok(Self::from_parts(ground, face_masks))
    }

    fn from_parts(ground_set: Vec<u64>, face_masks: BTreeSet<u64>) -> Self {
        let k = ground_set.len();
        let all_masks = 1u64 << k;
        let nonface_masks: Vec<u64> = (0..all_masks).filter(|m| !face_masks.contains(m)).collect();
        let maximal: Vec<u64> = face_masks
            .iter()
            .copied()
            .filter(|&f| !face_masks.iter().any(|&g| g != f && g & f == f))
            .collect();
        let minimal: Vec<u64> = nonface_masks
            .iter()
            .copied()
            .filter(|&n| !nonface_masks.iter().any(|&g| g != n && g & n == g))
            .collect();
        // closure under removing one element implies closure under subsets
        let downward_closed = face_masks
            .iter()
            .all(|&f| (0..k).all(|b| f & (1 << b) == 0 || face_masks.contains(&(f & !(1 << b)))));
        OmissionComplex {
            faces: sorted_family(&face_masks.iter().copied().collect::<Vec<_>>(), &ground_set),
            maximal_faces: sorted_family(&maximal, &ground_set),
            minimal_nonfaces: sorted_family(&minimal, &ground_set),
            downward_closed,
            ground_set,
        }
    }

    /// The interior indices `{2, ..., w-2}`, ascending.
    pub fn ground_set(&self) -> &[u64] {
        &self.ground_set
    }

    pub fn faces(&self) -> &[Vec<u64>] {
        &self.faces
    }

    pub fn maximal_faces(&self) -> &[Vec<u64>] {
        &self.maximal_faces
    }

    pub fn minimal_nonfaces(&self) -> &[Vec<u64>] {
        &self.minimal_nonfaces
    }

    pub fn downward_closed(&self) -> bool {
        self.downward_closed
    }

    pub fn is_face(&self, subset: &[u64]) -> bool {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        self.faces.binary_search_by(|f| cmp_sets(f, &s)).is_ok()
    }

    /// Every pair (face, proper subset outside the family). Empty exactly
    /// when the family is downward closed.
    pub fn downward_closure_violations(&self) -> Vec<Violation> {
        let face_masks: BTreeSet<u64> = self
            .faces
            .iter()
            .map(|f| mask_of(f, &self.ground_set).expect("own faces are valid"))
            .collect();
        let mut out = Vec::new();
        for &f in &face_masks {
            if f == 0 {
                continue;
            }
            // walk every proper submask of f
            let mut s = (f - 1) & f;
            loop {
                if !face_masks.contains(&s) {
                    out.push(Violation {
                        face: list_of(f, &self.ground_set),
                        missing_subset: list_of(s, &self.ground_set),
                    });
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & f;
            }
        }
        out.sort_by(|x, y| {
            cmp_sets(&x.face, &y.face).then_with(|| cmp_sets(&x.missing_subset, &y.missing_subset))
        });
        out
    }
}

/// Orders set lists by cardinality, then lexicographically.
fn cmp_sets(x: &[u64], y: &[u64]) -> core::cmp::Ordering {
    x.len().cmp(&y.len()).then_with(|| x.cmp(y))
}

fn ground_set(m: &ArithmeticalMonoid) -> Result<Vec<u64>> {
    if m.w() < 4 {
        return Err(Error::WTooSmall { w: m.w(), min: 4 });
    }
    Ok((2..=m.w() - 2).collect())
}

/// Bit `i - 2` stands for interior index `i` (the ground set is contiguous).
fn mask_of(subset: &[u64], ground: &[u64]) -> Result<u64> {
    let (lo, hi) = (ground[0], ground[ground.len() - 1]);
    let mut mask = 0u64;
    for &i in subset {
        if i < lo || i > hi {
            return Err(Error::IndexOutOfRange { index: i, lo, hi });
        }
        mask |= 1 << (i - lo);
    }
    Ok(mask)
}

fn list_of(mask: u64, ground: &[u64]) -> Vec<u64> {
    ground
        .iter()
        .enumerate()
        .filter(|(b, _)| mask & (1 << b) != 0)
        .map(|(_, &i)| i)
        .collect()
}

fn sorted_family(masks: &[u64], ground: &[u64]) -> Vec<Vec<u64>> {
    let mut family: Vec<Vec<u64>> = masks.iter().map(|&m| list_of(m, ground)).collect();
    family.sort_by(|x, y| cmp_sets(x, y));
    family
}

pub fn build_complex(m: &ArithmeticalMonoid) -> Result<OmissionComplex> {
    build_complex_with(m, ComplexOptions::default())
}

/// Decides all `2^(w-3)` interior subsets (ascending by cardinality) with
/// one shared decider and assembles the family. Exponential in `w`, by
/// nature; the examples worth running stay small.
pub fn build_complex_with(
    m: &ArithmeticalMonoid,
    options: ComplexOptions,
) -> Result<OmissionComplex> {
    let ground = ground_set(m)?;
    let k = ground.len();
    assert!(
        k < 26,
        "{k} interior indices means 2^{k} subsets; not enumerable"
    );
    let mut face_masks = BTreeSet::new();
    if options.use_shortcut && len_shortcut_applies(m) {
        face_masks.extend(0..1u64 << k);
        return Ok(OmissionComplex::from_parts(ground, face_masks));
    }
    let decider = LengthDecider::new(m)?;
    let mut order: Vec<u64> = (0..1u64 << k).collect();
    order.sort_by_key(|mask| (mask.count_ones(), *mask));
    let mut nonface_masks: Vec<u64> = Vec::new();
    for mask in order {
        if options.prune_supersets && nonface_masks.iter().any(|&n| n & !mask == 0) {
            continue;
        }
        let verdict = decider.decide(&list_of(mask, &ground))?;
        if verdict.lengths_equal == Some(true) {
            face_masks.insert(mask);
        } else {
            nonface_masks.push(mask);
        }
    }
    Ok(OmissionComplex::from_parts(ground, face_masks))
}

/// One surveyed monoid, summarized by its complex structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyRow {
    pub a: u64,
    pub d: u64,
    pub w: u64,
    pub downward_closed: bool,
    pub face_count: u64,
    pub maximal_face_count: u64,
    pub minimal_nonface_count: u64,
    /// Non-empty only on a downward-closure counterexample.
    pub violations: Vec<Violation>,
}

pub fn survey_cell(a: u64, d: u64, w: u64) -> Result<SurveyRow> {
    let m = ArithmeticalMonoid::new(a, d, w)?;
    let complex = build_complex(&m)?;
    Ok(SurveyRow {
        a,
        d,
        w,
        downward_closed: complex.downward_closed(),
        face_count: complex.faces().len() as u64,
        maximal_face_count: complex.maximal_faces().len() as u64,
        minimal_nonface_count: complex.minimal_nonfaces().len() as u64,
        violations: complex.downward_closure_violations(),
    })
}

/// Builds a complex for every cell in the ranges, silently skipping
/// parameters that do not define one (`gcd(a, d) > 1`, `w >= a`, `w < 4`).
/// Rows are ordered by `(a, d, w)`.
pub fn complex_survey(
    a_range: core::ops::RangeInclusive<u64>,
    d_range: core::ops::RangeInclusive<u64>,
    w_range: core::ops::RangeInclusive<u64>,
) -> Vec<SurveyRow> {
    let mut rows = Vec::new();
    for a in a_range {
        for d in d_range.clone() {
            for w in w_range.clone() {
                if w < 4 || w >= a || gcd(a, d) != 1 {
                    continue;
                }
                rows.push(survey_cell(a, d, w).expect("cell parameters validated"));
            }
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn am(a: u64, d: u64, w: u64) -> ArithmeticalMonoid {
        ArithmeticalMonoid::new(a, d, w).unwrap()
    }

    #[test]
    fn small_dense_progression() {
        let c = build_complex(&am(11, 1, 7)).unwrap();
        assert_eq!(c.ground_set(), &[2, 3, 4, 5]);
        assert_eq!(c.faces().len(), 14);
        assert_eq!(c.minimal_nonfaces(), &[vec![3, 4, 5]]);
        assert_eq!(
            c.maximal_faces(),
            &[vec![2, 3, 4], vec![2, 3, 5], vec![2, 4, 5]]
        );
        assert!(c.downward_closed());
        assert!(c.downward_closure_violations().is_empty());
        assert!(c.is_face(&[]));
        assert!(c.is_face(&[2, 4]));
        assert!(!c.is_face(&[3, 4, 5]));
        assert!(!c.is_face(&[2, 3, 4, 5]));
    }

    #[test]
    fn shortcut_and_enumeration_agree() {
        let m = am(51, 2, 8);
        let c = build_complex(&m).unwrap();
        assert_eq!(c.faces().len(), 32);
        assert!(c.minimal_nonfaces().is_empty());
        assert_eq!(c.maximal_faces(), &[vec![2, 3, 4, 5, 6]]);
        let full = build_complex_with(
            &m,
            ComplexOptions {
                use_shortcut: false,
                prune_supersets: false,
            },
        )
        .unwrap();
        assert_eq!(c, full);
    }

    #[test]
    fn pruned_enumeration_agrees_when_closed() {
        let m = am(11, 1, 7);
        let plain = build_complex(&m).unwrap();
        let pruned = build_complex_with(
            &m,
            ComplexOptions {
                use_shortcut: true,
                prune_supersets: true,
            },
        )
        .unwrap();
        assert_eq!(plain, pruned);
    }

    #[test]
    fn assembled_from_external_decisions() {
        let m = am(11, 1, 7);
        let direct = build_complex(&m).unwrap();
        let faces: Vec<Vec<u64>> = direct.faces().to_vec();
        let rebuilt = OmissionComplex::from_faces(&m, &faces).unwrap();
        assert_eq!(direct, rebuilt);
        assert!(OmissionComplex::from_faces(&m, &[vec![1]]).is_err());
    }

    #[test]
    fn wide_progression_antichains() {
        let c = build_complex(&am(23, 3, 11)).unwrap();
        assert_eq!(c.faces().len(), 253);
        assert_eq!(c.maximal_faces().len(), 7);
        assert_eq!(
            c.minimal_nonfaces(),
            &[vec![2, 3, 4, 5, 6, 7, 8], vec![3, 4, 5, 6, 7, 8, 9]]
        );
        assert!(c.downward_closed());
    }

    #[test]
    fn rejects_degenerate_ground_set() {
        assert_eq!(
            build_complex(&am(5, 1, 3)),
            Err(Error::WTooSmall { w: 3, min: 4 })
        );
    }

    #[test]
    fn survey_counts_and_filters() {
        let row = survey_cell(11, 1, 7).unwrap();
        assert!(row.downward_closed);
        assert_eq!(row.face_count, 14);
        assert_eq!(row.maximal_face_count, 3);
        assert_eq!(row.minimal_nonface_count, 1);
        assert!(row.violations.is_empty());
        let rows = complex_survey(10..=12, 1..=2, 4..=5);
        // (10,*,*) keeps only gcd-1 d; w=4,5 < a everywhere here
        let cells: Vec<(u64, u64, u64)> = rows.iter().map(|r| (r.a, r.d, r.w)).collect();
        assert_eq!(
            cells,
            [
                (10, 1, 4),
                (10, 1, 5),
                (11, 1, 4),
                (11, 1, 5),
                (11, 2, 4),
                (11, 2, 5),
                (12, 1, 4),
                (12, 1, 5),
            ]
        );
        assert!(rows.iter().all(|r| r.downward_closed));
    }
}
