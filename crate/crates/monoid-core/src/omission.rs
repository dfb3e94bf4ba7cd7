//! Equality tests for length-set collections and Frobenius numbers under
//! generator omission.
//!
//! Dropping generators from `S = <a, a+d, ..., a+wd>` leaves a submonoid
//! `S'`. Two questions about the damage are decidable cheaply:
//!
//! * does the collection of length sets survive, `L(S') = L(S)`?
//! * does the Frobenius number survive, `F(S') = F(S)`?
//!
//! For interior omission sets `G ⊆ {2, ..., w-2}` the length-set question
//! reduces to a finite comparison. Every length set whose minimum is at most
//! `w - 3` is realized only below `(w-3)(a+wd)` (a factorization into `m`
//! generators bounds its element by `m(a+wd)`), and above that threshold the
//! full monoid and every interior submonoid agree element by element. So the
//! collections are equal iff their filtered fragments
//! `{L(n) : min L(n) <= w-3}` are, and those fragments are complete within
//! the threshold. [`LengthDecider`] precomputes the full monoid's fragment
//! once and answers per-`G` queries against it.
//!
//! Two sufficient conditions skip the scan outright: `a >= w^2 - 3w` forces
//! length-set equality for every interior `G`, and `a > w^2 - 3w + 1` forces
//! Frobenius equality. Dropping a single generator needs no scan at all and
//! is classified in closed form by [`classify_single_omission`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::arithmetical::ArithmeticalMonoid;
use crate::error::{Error, Result};
use crate::length::{LengthSet, LengthTable};
use crate::monoid::gcd;

/// Which rule, if any, answered without running a full comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shortcut {
    /// No shortcut: the answer came from direct computation.
    None,
    /// `a >= w^2 - 3w`, so every interior omission preserves the collection.
    LenBound,
    /// `a > w^2 - 3w + 1`, so every interior omission preserves `F`.
    FrobBound,
    /// Single interior generator: only that one element disappears.
    SingleMiddle,
    /// Omission touches index 1 or `w-1`: the collection always changes.
    SingleEdge,
}

impl Shortcut {
    pub fn name(&self) -> &'static str {
        match self {
            Shortcut::None => "none",
            Shortcut::LenBound => "len_bound",
            Shortcut::FrobBound => "frob_bound",
            Shortcut::SingleMiddle => "single_middle",
            Shortcut::SingleEdge => "single_edge",
        }
    }
}

/// Outcome of comparing a monoid with one of its omission submonoids.
///
/// A field is `None` when that question was not evaluated. `witness`, when
/// present, is a number illustrating a reported inequality: an element whose
/// length set appears in only one of the two collections, or the larger of
/// the two Frobenius numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OmissionVerdict {
    pub lengths_equal: Option<bool>,
    pub frobenius_equal: Option<bool>,
    pub shortcut_used: Shortcut,
    pub witness: Option<u64>,
}

/// Sorts, deduplicates, and range-checks an index set.
fn canonical_indices(indices: &[u64], lo: u64, hi: u64) -> Result<Vec<u64>> {
    let mut v = indices.to_vec();
    v.sort_unstable();
    v.dedup();
    for &i in &v {
        if i < lo || i > hi {
            return Err(Error::IndexOutOfRange { index: i, lo, hi });
        }
    }
    Ok(v)
}

/// The generator list with the given (sorted) indices left out.
fn omitted_generators(m: &ArithmeticalMonoid, indices: &[u64]) -> Vec<u64> {
    (0..=m.w())
        .filter(|i| !indices.contains(i))
        .map(|i| m.generator(i))
        .collect()
}

/// Decides `L(S') = L(S)` for interior omission sets of one fixed monoid,
/// sharing the expensive side of the comparison across queries.
///
/// Construction computes the reference fragment
/// `{L_S(n) : n in S, min L_S(n) <= w-3}` from the coordinate formulas,
/// keyed by length set with the smallest realizer of each set as the value.
/// Each [`LengthDecider::decide`] call then only has to fill one table for
/// the omitted generator list.
pub struct LengthDecider {
    m: ArithmeticalMonoid,
    bound: u64,
    s_collection: BTreeMap<LengthSet, u64>,
}

impl LengthDecider {
    pub fn new(m: &ArithmeticalMonoid) -> Result<Self> {
        if m.w() < 4 {
            return Err(Error::WTooSmall { w: m.w(), min: 4 });
        }
        let bound = (m.w() - 3) * m.top();
        let cutoff = (m.w() - 3) as usize;
        let mut s_collection = BTreeMap::new();
        for n in 0..=bound {
            if let Some(ls) = m.length_set(n as i64) {
                if ls.min_length() <= cutoff {
                    s_collection.entry(ls).or_insert(n);
                }
            }
        }
        Ok(LengthDecider {
            m: *m,
            bound,
            s_collection,
        })
    }

    /// The scan threshold `(w-3)(a+wd)`; both fragments are complete below it.
    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Runs the fragment comparison for `G ⊆ {2, ..., w-2}`, no shortcuts.
    ///
    /// On inequality the witness is the smallest realizer of any length set
    /// present in exactly one fragment.
    pub fn decide(&self, indices: &[u64]) -> Result<OmissionVerdict> {
        let g = canonical_indices(indices, 2, self.m.w() - 2)?;
        let table = LengthTable::for_generators(&omitted_generators(&self.m, &g), self.bound)
            .expect("interior omissions keep a non-empty generator list");
        let cutoff = (self.m.w() - 3) as usize;
        let mut g_collection = BTreeMap::new();
        for (n, row) in table.iter_rows() {
            if let Some(ls) = row {
                if ls.min_length() <= cutoff {
                    g_collection.entry(ls.clone()).or_insert(n);
                }
            }
        }
        let mut witness: Option<u64> = None;
        for (side, other) in [
            (&self.s_collection, &g_collection),
            (&g_collection, &self.s_collection),
        ] {
            for (ls, &n) in side {
                if !other.contains_key(ls) {
                    witness = Some(witness.map_or(n, |p| p.min(n)));
                }
            }
        }
        Ok(OmissionVerdict {
            lengths_equal: Some(witness.is_none()),
            frobenius_equal: None,
            shortcut_used: Shortcut::None,
            witness,
        })
    }
}

/// Does `a >= w^2 - 3w` hold? Callers must have checked `w >= 4`.
pub(crate) fn len_shortcut_applies(m: &ArithmeticalMonoid) -> bool {
    debug_assert!(m.w() >= 4);
    m.a() >= m.w() * (m.w() - 3)
}

/// Decides `L(S') = L(S)` for `G ⊆ {2, ..., w-2}`, trying the `a >= w^2-3w`
/// shortcut before building any table.
pub fn decide_length_sets_equal(
    m: &ArithmeticalMonoid,
    indices: &[u64],
) -> Result<OmissionVerdict> {
    if m.w() < 4 {
        return Err(Error::WTooSmall { w: m.w(), min: 4 });
    }
    let g = canonical_indices(indices, 2, m.w() - 2)?;
    if len_shortcut_applies(m) {
        return Ok(OmissionVerdict {
            lengths_equal: Some(true),
            frobenius_equal: None,
            shortcut_used: Shortcut::LenBound,
            witness: None,
        });
    }
    LengthDecider::new(m)?.decide(&g)
}

/// Decides `F(S') = F(S)` for any omission set `G ⊆ {1, ..., w-1}`.
///
/// The `a > w^2 - 3w + 1` shortcut applies only to interior `G`; anything
/// touching an edge index is computed directly by the Apery route on both
/// monoids. The witness on inequality is the larger Frobenius number.
/// Omitting generators can break coprimality (only when `G` touches an
/// edge index), in which case no Frobenius number exists and the error
/// from the submonoid constructor is passed through.
pub fn decide_frobenius_equal(m: &ArithmeticalMonoid, indices: &[u64]) -> Result<OmissionVerdict> {
    let w = m.w();
    let g = canonical_indices(indices, 1, w - 1)?;
    let interior = g.iter().all(|&i| i >= 2 && i + 2 <= w);
    if interior && m.a() + 3 * w > w * w + 1 {
        return Ok(OmissionVerdict {
            lengths_equal: None,
            frobenius_equal: Some(true),
            shortcut_used: Shortcut::FrobBound,
            witness: None,
        });
    }
    let f_full = m.expand().frobenius();
    let f_omitted = m.omit(&g)?.frobenius();
    Ok(OmissionVerdict {
        lengths_equal: None,
        frobenius_equal: Some(f_full == f_omitted),
        shortcut_used: Shortcut::None,
        witness: (f_full != f_omitted).then(|| f_omitted.max(f_full) as u64),
    })
}

/// Classifies the omission of the single generator `a + rd` in closed form,
/// no tables built.
///
/// * Interior `r`: only the generator itself disappears, so the collection
///   of length sets survives, and `F` survives exactly when the lost
///   generator was below `F(S)` already. (For very small `a` the generator
///   can exceed `F(S)`, and then it becomes the new Frobenius number.)
/// * `r = 1`: the lost elements are `c1*a + d` for `c1*w <= a + wd`; the
///   largest of them, `(floor(a/w) + d)a + d`, always exceeds `F(S)`, so
///   both the collection and `F` change.
/// * `r = w-1`: the lost elements are `c1*a + (c1*w - 1)d` for `c1*w <= a`;
///   the collection always changes, and the largest lost element
///   `floor(a/w)*a + (floor(a/w)*w - 1)d` exceeds `F(S)` exactly when
///   `w | a`, or `w | a-1` with `d < a`.
/// * `w = 2`: the sole interior index leaves the two-term monoid
///   `<a, a+2d>`; both answers are "changed". For odd `a` the witness is its
///   Frobenius number; for even `a` the remainder is not cofinite and there
///   is no finite witness to report.
pub fn classify_single_omission(m: &ArithmeticalMonoid, r: u64) -> Result<OmissionVerdict> {
    let (a, d, w) = (m.a(), m.d(), m.w());
    if r < 1 || r > w - 1 {
        return Err(Error::IndexOutOfRange {
            index: r,
            lo: 1,
            hi: w - 1,
        });
    }
    if r > 1 && r < w - 1 {
        let lost = m.generator(r);
        let equal = (lost as i64) < m.frobenius();
        return Ok(OmissionVerdict {
            lengths_equal: Some(true),
            frobenius_equal: Some(equal),
            shortcut_used: Shortcut::SingleMiddle,
            witness: if equal { None } else { Some(lost) },
        });
    }
    let (frobenius_equal, witness) = if r == 1 {
        if w == 2 {
            if a % 2 == 1 {
                let two_step = ArithmeticalMonoid::new(a, 2 * d, 1).expect("odd a stays coprime");
                (false, Some(two_step.frobenius() as u64))
            } else {
                (false, None)
            }
        } else {
            (false, Some((a / w + d) * a + d))
        }
    } else {
        let grows = a % w == 0 || ((a - 1) % w == 0 && d < a);
        let new_frobenius = (a / w) * a + ((a / w) * w - 1) * d;
        (!grows, grows.then_some(new_frobenius))
    };
    Ok(OmissionVerdict {
        lengths_equal: Some(false),
        frobenius_equal: Some(frobenius_equal),
        shortcut_used: Shortcut::SingleEdge,
        witness,
    })
}

/// One call answering "what does omitting `G` change?" for the CLI.
///
/// Empty `G` is trivially equal on both counts. A single index goes through
/// [`classify_single_omission`] with the unrequested half masked off (the
/// closed-form witness certifies the Frobenius gap, so it is dropped
/// together with that half). A larger `G` containing an edge index changes
/// the collection without any computation; otherwise the interior deciders
/// run. When both halves are requested the reported shortcut is the one
/// that settled the length-set half, falling back to the Frobenius one.
pub fn omission_verdict(
    m: &ArithmeticalMonoid,
    indices: &[u64],
    check_lengths: bool,
    check_frobenius: bool,
) -> Result<OmissionVerdict> {
    let w = m.w();
    let g = canonical_indices(indices, 1, w - 1)?;
    if g.is_empty() {
        return Ok(OmissionVerdict {
            lengths_equal: check_lengths.then_some(true),
            frobenius_equal: check_frobenius.then_some(true),
            shortcut_used: Shortcut::None,
            witness: None,
        });
    }
    if let [r] = g[..] {
        let mut verdict = classify_single_omission(m, r)?;
        if !check_lengths {
            verdict.lengths_equal = None;
        }
        if !check_frobenius {
            verdict.frobenius_equal = None;
            verdict.witness = None;
        }
        return Ok(verdict);
    }
    let touches_edge = g.iter().any(|&i| i == 1 || i == w - 1);
    let lengths = if !check_lengths {
        None
    } else if touches_edge {
        Some(OmissionVerdict {
            lengths_equal: Some(false),
            frobenius_equal: None,
            shortcut_used: Shortcut::SingleEdge,
            witness: None,
        })
    } else {
        Some(decide_length_sets_equal(m, &g)?)
    };
    let frobenius = if check_frobenius {
        Some(decide_frobenius_equal(m, &g)?)
    } else {
        None
    };
    let shortcut_used = match (&lengths, &frobenius) {
        (Some(l), _) if l.shortcut_used != Shortcut::None => l.shortcut_used,
        (_, Some(f)) => f.shortcut_used,
        _ => Shortcut::None,
    };
    Ok(OmissionVerdict {
        lengths_equal: lengths.and_then(|l| l.lengths_equal),
        frobenius_equal: frobenius.and_then(|f| f.frobenius_equal),
        shortcut_used,
        witness: lengths
            .and_then(|l| l.witness)
            .or(frobenius.and_then(|f| f.witness)),
    })
}

/// One unmatched element in the reflection check between the two edge
/// submonoids: `n` is a member of one of them (of `S_1` when `in_first`)
/// whose length set is shared by no member of the other within `3d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryMismatch {
    pub n: u64,
    pub in_first: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryReport {
    /// Members examined, counting both directions.
    pub checked: u64,
    pub failures: Vec<BoundaryMismatch>,
}

/// Tests the reflection between the two edge omissions: every member of
/// `S_1` up to `bound` should see a member of `S_{w-1}` within distance
/// `3d` carrying the identical length set, and vice versa. Both tables are
/// built out to `bound + 3d` so matches beyond the bound are still seen.
/// No failures are expected for any valid monoid; `L(S_1) = L(S_{w-1})`.
///
/// `w = 2` is allowed (the two omissions coincide and every member matches
/// itself); `w < 2` has no interior generator to drop.
pub fn check_boundary_lenset_match(m: &ArithmeticalMonoid, bound: u64) -> Result<BoundaryReport> {
    let w = m.w();
    if w < 2 {
        return Err(Error::WTooSmall { w, min: 2 });
    }
    let radius = 3 * m.d();
    let first = LengthTable::for_generators(&omitted_generators(m, &[1]), bound + radius)
        .expect("omitting one generator of w >= 2 leaves some");
    let last = LengthTable::for_generators(&omitted_generators(m, &[w - 1]), bound + radius)
        .expect("omitting one generator of w >= 2 leaves some");
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 0..=bound {
        for (mine, other, in_first) in [(&first, &last, true), (&last, &first, false)] {
            let Some(ls) = mine.row(n) else { continue };
            checked += 1;
            let matched =
                (n.saturating_sub(radius)..=n + radius).any(|n2| other.row(n2) == Some(ls));
            if !matched {
                failures.push(BoundaryMismatch { n, in_first });
            }
        }
    }
    Ok(BoundaryReport { checked, failures })
}

/// Result of scanning one `(w, d)` cell for the largest `a` whose monoid
/// changes its Frobenius number when all middle generators are dropped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TightnessRow {
    pub w: u64,
    pub d: u64,
    /// Largest `a <= scan_bound` with `F(S) != F(S_*)`, if any.
    pub largest_bad_a: Option<u64>,
    /// `w^2 - 3w + 1`; no `a` above it can differ.
    pub scan_bound: u64,
}

/// Scans `a` from `w+1` to `w^2 - 3w + 1` (skipping `gcd(a, d) > 1`),
/// comparing `F(S)` against `F(S_*)` where `S_*` keeps only the generators
/// at indices `0, 1, w-1, w`. Both numbers come from the Apery route.
pub fn tightness_cell(w: u64, d: u64) -> Result<TightnessRow> {
    if w < 4 {
        return Err(Error::WTooSmall { w, min: 4 });
    }
    if d == 0 {
        return Err(Error::ZeroGenerator);
    }
    let scan_bound = w * (w - 3) + 1;
    let middles: Vec<u64> = (2..=w - 2).collect();
    let mut largest_bad_a = None;
    for a in (w + 1)..=scan_bound {
        if gcd(a, d) != 1 {
            continue;
        }
        let m = ArithmeticalMonoid::new(a, d, w).expect("parameters validated");
        let f_full = m.expand().frobenius();
        let f_star = m
            .omit(&middles)
            .expect("edge generators keep gcd 1")
            .frobenius();
        if f_full != f_star {
            largest_bad_a = Some(a);
        }
    }
    Ok(TightnessRow {
        w,
        d,
        largest_bad_a,
        scan_bound,
    })
}

/// Runs [`tightness_cell`] over inclusive ranges, rows ordered by `(w, d)`.
pub fn tightness_scan(
    w_range: core::ops::RangeInclusive<u64>,
    d_range: core::ops::RangeInclusive<u64>,
) -> Result<Vec<TightnessRow>> {
    let mut rows = Vec::new();
    for w in w_range {
        for d in d_range.clone() {
            rows.push(tightness_cell(w, d)?);
        }
    }
    Ok(rows)
}
