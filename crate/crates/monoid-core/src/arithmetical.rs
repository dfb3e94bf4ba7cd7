//! Closed forms for monoids generated by an arithmetic progression.
//!
//! For `S = <a, a+d, ..., a+wd>` with `gcd(a, d) = 1` and `w < a`, every
//! integer has unique canonical coordinates `n = c1*a + c2*d` with
//! `0 <= c2 < a`, and the whole factorization theory collapses onto them:
//!
//! * `n` is a member iff `n >= 0` and `c2 <= c1*w`;
//! * the factorization lengths of a member are `c1 - k*d` for
//!   `0 <= k <= (c1*w - c2) / (a + wd)`, so the largest length is `c1` and
//!   the cardinality is the floor quotient plus one;
//! * the Frobenius number is `(ceil((a-1)/w) - 1)*a + (a-1)*d`.
//!
//! Everything here is O(size of the answer); the table route in
//! [`crate::length`] exists to cross-check these formulas and to handle
//! monoids that are not progressions.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::length::LengthSet;
use crate::monoid::{gcd, NumericalMonoid};

/// Coordinates of `n` in the progression basis: `n = c1*a + c2*d` with
/// `0 <= c2 < a`. `c1` may be negative for values outside the monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CanonicalCoords {
    pub c1: i64,
    pub c2: u64,
}

/// The monoid generated by `a, a+d, ..., a+wd`.
///
/// Requires `gcd(a, d) = 1` and `1 <= w < a`; those conditions make the
/// progression the minimal generating set of a numerical monoid. `w = 1`
/// and `w = 2` are degenerate but legal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ArithmeticalMonoid {
    a: u64,
    d: u64,
    w: u64,
    /// Inverse of `d` modulo `a`, fixed at construction.
    d_inv: u64,
}

impl ArithmeticalMonoid {
    pub fn new(a: u64, d: u64, w: u64) -> Result<Self> {
        if w == 0 {
            return Err(Error::WTooSmall { w, min: 1 });
        }
        if w >= a {
            // also rejects a = 0 and a = 1
            return Err(Error::IndexOutOfRange {
                index: w,
                lo: 1,
                hi: a.saturating_sub(1),
            });
        }
        let g = gcd(a, d);
        if g != 1 {
            return Err(Error::GcdNotOne { gcd: g });
        }
        Ok(ArithmeticalMonoid {
            a,
            d,
            w,
            d_inv: mod_inverse(d % a, a),
        })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn w(&self) -> u64 {
        self.w
    }

    /// The generator `a + i*d`. Panics when `i > w`.
    pub fn generator(&self, i: u64) -> u64 {
        assert!(i <= self.w, "generator index {i} exceeds w = {}", self.w);
        self.a + i * self.d
    }

    /// Largest generator `a + w*d`.
    pub fn top(&self) -> u64 {
        self.a + self.w * self.d
    }

    pub fn generators(&self) -> Vec<u64> {
        (0..=self.w).map(|i| self.generator(i)).collect()
    }

    /// The same monoid as a plain generator list.
    pub fn expand(&self) -> NumericalMonoid {
        NumericalMonoid::new(&self.generators()).expect("progression is a valid generating set")
    }

    /// Canonical coordinates of any integer, members or not.
    pub fn coords(&self, n: i64) -> CanonicalCoords {
        let a = self.a as i128;
        let c2 = ((n as i128).rem_euclid(a) * self.d_inv as i128).rem_euclid(a);
        let c1 = (n as i128 - c2 * self.d as i128) / a;
        CanonicalCoords {
            c1: i64::try_from(c1).expect("c1 fits i64"),
            c2: u64::try_from(c2).expect("c2 in [0, a)"),
        }
    }

    /// Membership by coordinates alone: `n >= 0` and `c2 <= c1*w`.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let c = self.coords(n);
        c.c2 as i128 <= c.c1 as i128 * self.w as i128
    }

    /// Length set straight from the coordinate formula; `None` on gaps.
    pub fn length_set(&self, n: i64) -> Option<LengthSet> {
        if !self.contains(n) {
            return None;
        }
        let c = self.coords(n);
        let k_max = (c.c1 as i128 * self.w as i128 - c.c2 as i128) / self.top() as i128;
        let lengths: Vec<usize> = (0..=k_max)
            .map(|k| usize::try_from(c.c1 as i128 - k * self.d as i128).expect("length >= 0"))
            .collect();
        LengthSet::from_lengths(&lengths)
    }

    /// Frobenius number in closed form.
    pub fn frobenius(&self) -> i64 {
        let steps = (self.a - 1).div_ceil(self.w) - 1;
        (steps * self.a + (self.a - 1) * self.d) as i64
    }

    /// Drops the generators `a + i*d` for each `i` in `indices` and
    /// canonicalizes what remains. Only interior indices `1..=w-1` may be
    /// dropped; the result can fail coprimality (e.g. dropping every
    /// interior generator of `<14, 15, ..., 21>` leaves gcd 7).
    pub fn omit(&self, indices: &[u64]) -> Result<NumericalMonoid> {
        self.check_indices(indices, 1, self.w - 1)?;
        let gens: Vec<u64> = (0..=self.w)
            .filter(|i| !indices.contains(i))
            .map(|i| self.generator(i))
            .collect();
        NumericalMonoid::new(&gens)
    }

    fn check_indices(&self, indices: &[u64], lo: u64, hi: u64) -> Result<()> {
        for &i in indices {
            if i < lo || i > hi {
                return Err(Error::IndexOutOfRange { index: i, lo, hi });
            }
        }
        Ok(())
    }

    /// For `w = 2` the single interior omission leaves `<a, a+2d>`, which is
    /// again a two-term progression: step `2d` when `a` is odd, and twice
    /// `<a/2, a/2 + d>` when `a` is even. The general interior/edge formulas
    /// assume `w >= 3`, so this case is answered by reduction instead.
    fn w2_reduced(&self) -> W2Reduction {
        if self.a % 2 == 1 {
            W2Reduction::Direct(
                ArithmeticalMonoid::new(self.a, 2 * self.d, 1).expect("odd a stays coprime"),
            )
        } else {
            W2Reduction::Halved(
                ArithmeticalMonoid::new(self.a / 2, self.d, 1).expect("halved pair is coprime"),
            )
        }
    }

    /// Membership of `n` in the monoid with generator `a + r*d` dropped.
    ///
    /// Decided from the complete description of what an omission removes:
    /// an interior omission removes exactly the dropped generator, while
    /// dropping `a + d` removes the members with `c2 = 1` and
    /// `c1*w <= a + wd`, and dropping `a + (w-1)d` removes those with
    /// `c2 = c1*w - 1` and `c1*w <= a`.
    pub fn sr_contains(&self, r: u64, n: i64) -> Result<bool> {
        self.check_indices(&[r], 1, self.w - 1)?;
        if self.w == 2 {
            return Ok(match self.w2_reduced() {
                W2Reduction::Direct(t) => t.contains(n),
                W2Reduction::Halved(t) => n % 2 == 0 && t.contains(n / 2),
            });
        }
        if !self.contains(n) {
            return Ok(false);
        }
        let c = self.coords(n);
        let c1w = c.c1 as i128 * self.w as i128;
        let removed = if r == 1 {
            c.c2 == 1 && c1w <= self.top() as i128
        } else if r == self.w - 1 {
            c.c2 as i128 == c1w - 1 && c1w <= self.a as i128
        } else {
            n as i128 == self.generator(r) as i128
        };
        Ok(!removed)
    }

    /// Length set of `n` after dropping generator `a + r*d`; `None` on gaps.
    ///
    /// Membership is settled first (see [`Self::sr_contains`]); for members,
    /// an interior omission never changes the length set, dropping `a + d`
    /// removes the maximum length exactly when `n ≡ d (mod a)`, and dropping
    /// `a + (w-1)d` removes the minimum exactly when `n ≡ -d (mod a + wd)`.
    pub fn sr_length_set(&self, r: u64, n: i64) -> Result<Option<LengthSet>> {
        if !self.sr_contains(r, n)? {
            return Ok(None);
        }
        if self.w == 2 {
            return Ok(match self.w2_reduced() {
                W2Reduction::Direct(t) => t.length_set(n),
                W2Reduction::Halved(t) => t.length_set(n / 2),
            });
        }
        let full = self.length_set(n).expect("member has a length set");
        let c = self.coords(n);
        let out = if r == 1 && c.c2 == 1 {
            full.without_max()
        } else if r == self.w - 1
            && r != 1
            && (n + self.d as i64).rem_euclid(self.top() as i64) == 0
        {
            full.without_min()
        } else {
            Some(full)
        };
        Ok(out)
    }

    /// The complete, finite list of elements lost by dropping `a + r*d`,
    /// in increasing order, capped at `bound`.
    ///
    /// `bound` is a safety cap only; pass anything at least as large as the
    /// natural bounds (`a(a+wd)/w + ad + d` suffices) to get the whole list.
    /// For `w = 2` with even `a` the lost set is infinite (the remaining
    /// generators are not coprime), reported as [`Error::GcdNotOne`].
    pub fn sr_removed_elements(&self, r: u64, bound: u64) -> Result<Vec<u64>> {
        self.check_indices(&[r], 1, self.w - 1)?;
        if self.w == 2 {
            let t = match self.w2_reduced() {
                W2Reduction::Halved(_) => return Err(Error::GcdNotOne { gcd: 2 }),
                W2Reduction::Direct(t) => t,
            };
            // finite here: everything above the reduced Frobenius number stays
            let hi = bound.min(t.frobenius() as u64);
            return Ok((0..=hi)
                .filter(|&n| self.contains(n as i64) && !t.contains(n as i64))
                .collect());
        }
        let mut out = Vec::new();
        if r == 1 {
            let mut c1 = 1u64;
            while c1 * self.w <= self.top() {
                out.push(c1 * self.a + self.d);
                c1 += 1;
            }
        } else if r == self.w - 1 {
            let mut c1 = 1u64;
            while c1 * self.w <= self.a {
                out.push(c1 * self.a + (c1 * self.w - 1) * self.d);
                c1 += 1;
            }
        } else {
            out.push(self.generator(r));
        }
        out.retain(|&n| n <= bound);
        Ok(out)
    }

    /// Evaluates both sides of the residue identity
    /// `n ≡ -d (mod a + wd)  <=>  c1*w ≡ c2 + 1 (mod a + wd)`
    /// independently, so callers can observe that they agree.
    pub fn congruence_pair(&self, n: i64) -> (bool, bool) {
        let top = self.top() as i128;
        let lhs = (n as i128 + self.d as i128).rem_euclid(top) == 0;
        let c = self.coords(n);
        let rhs = (c.c1 as i128 * self.w as i128 - (c.c2 as i128 + 1)).rem_euclid(top) == 0;
        (lhs, rhs)
    }
}

enum W2Reduction {
    /// `<a, a+2d>` itself, as a step-`2d` progression (odd `a`).
    Direct(ArithmeticalMonoid),
    /// `<a, a+2d> = 2 * <a/2, a/2 + d>` (even `a`); query at `n / 2`.
    Halved(ArithmeticalMonoid),
}

/// Inverse of `x` modulo `m` for coprime `x`, by the extended Euclidean
/// algorithm.
fn mod_inverse(x: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (x as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "inputs must be coprime");
    u64::try_from(old_s.rem_euclid(m as i128)).expect("inverse in [0, m)")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn am(a: u64, d: u64, w: u64) -> ArithmeticalMonoid {
        ArithmeticalMonoid::new(a, d, w).unwrap()
    }

    #[test]
    fn construction_validation() {
        assert!(ArithmeticalMonoid::new(11, 1, 7).is_ok());
        assert!(ArithmeticalMonoid::new(2, 1, 1).is_ok());
        assert_eq!(
            ArithmeticalMonoid::new(10, 4, 3),
            Err(Error::GcdNotOne { gcd: 2 })
        );
        assert_eq!(
            ArithmeticalMonoid::new(5, 1, 0),
            Err(Error::WTooSmall { w: 0, min: 1 })
        );
        assert!(ArithmeticalMonoid::new(5, 1, 5).is_err());
        assert!(ArithmeticalMonoid::new(0, 1, 1).is_err());
    }

    #[test]
    fn coordinates() {
        assert_eq!(am(11, 1, 7).coords(36), CanonicalCoords { c1: 3, c2: 3 });
        assert_eq!(am(11, 1, 7).coords(11), CanonicalCoords { c1: 1, c2: 0 });
        assert_eq!(am(23, 3, 11).coords(56), CanonicalCoords { c1: 1, c2: 11 });
        // negative c1 outside the monoid
        let c = am(11, 13, 7).coords(5);
        assert_eq!(c.c1 * 11 + c.c2 as i64 * 13, 5);
        assert!(c.c2 < 11);
    }

    #[test]
    fn coordinate_identity_holds_everywhere() {
        let m = am(23, 3, 11);
        for n in -200..400 {
            let c = m.coords(n);
            assert_eq!(c.c1 * 23 + c.c2 as i64 * 3, n);
            assert!(c.c2 < 23);
        }
    }

    #[test]
    fn membership_closed_form() {
        let m = am(11, 1, 7);
        assert!(!m.contains(21));
        assert!(m.contains(22));
        assert!(m.contains(0));
        assert!(!m.contains(-5));
    }

    #[test]
    fn length_sets_closed_form() {
        let m = am(11, 1, 7);
        assert_eq!(m.length_set(36).unwrap().to_vec(), vec![2, 3]);
        assert_eq!(m.length_set(34).unwrap().to_vec(), vec![2, 3]);
        assert_eq!(m.length_set(0).unwrap().to_vec(), vec![0]);
        assert!(m.length_set(21).is_none());
        // lengths step by d, not by 1
        let m = am(5, 3, 2);
        let ls = m.length_set(55).unwrap(); // c1 = 11, c2 = 0, k <= 2
        assert_eq!(ls.to_vec(), vec![5, 8, 11]);
    }

    #[test]
    fn frobenius_closed_form() {
        assert_eq!(am(11, 1, 7).frobenius(), 21);
        assert_eq!(am(14, 1, 7).frobenius(), 27);
        assert_eq!(am(2, 1, 1).frobenius(), 1);
        assert_eq!(am(23, 3, 11).frobenius(), 23 + 22 * 3);
    }

    #[test]
    fn expansion_round_trip() {
        let m = am(11, 1, 7);
        let s = m.expand();
        assert_eq!(s.generators(), (11..=18).collect::<Vec<_>>().as_slice());
        assert_eq!(s.frobenius(), 21);
    }

    #[test]
    fn omission_validation() {
        let m = am(11, 1, 7);
        assert_eq!(
            m.omit(&[0]),
            Err(Error::IndexOutOfRange {
                index: 0,
                lo: 1,
                hi: 6
            })
        );
        assert_eq!(
            m.omit(&[7]),
            Err(Error::IndexOutOfRange {
                index: 7,
                lo: 1,
                hi: 6
            })
        );
        let s = m.omit(&[3, 4, 5]).unwrap();
        assert_eq!(s.generators(), &[11, 12, 13, 17, 18]);
        // dropping every interior generator can break coprimality
        let m = am(14, 1, 7);
        assert_eq!(
            m.omit(&(1..=6).collect::<Vec<_>>()),
            Err(Error::GcdNotOne { gcd: 7 })
        );
    }

    #[test]
    fn omitted_length_sets() {
        let m = am(11, 1, 7);
        // dropping a+d removes the maximum length exactly on c2 = 1
        assert_eq!(m.sr_length_set(1, 34).unwrap().unwrap().to_vec(), vec![2]);
        assert_eq!(
            m.sr_length_set(1, 36).unwrap().unwrap().to_vec(),
            vec![2, 3]
        );
        // interior omissions never change length sets of members
        assert_eq!(
            m.sr_length_set(3, 36).unwrap().unwrap().to_vec(),
            vec![2, 3]
        );
        assert_eq!(m.sr_length_set(3, 14).unwrap(), None); // the dropped generator itself
        assert_eq!(m.sr_length_set(3, 10).unwrap(), None); // gap of the full monoid
        assert!(m.sr_length_set(0, 3).is_err());
    }

    #[test]
    fn omitted_membership_edges() {
        let m = am(11, 1, 7);
        assert!(!m.sr_contains(1, 12).unwrap());
        assert!(!m.sr_contains(1, 23).unwrap());
        assert!(m.sr_contains(1, 34).unwrap());
        let m = am(14, 1, 7);
        assert!(!m.sr_contains(6, 41).unwrap());
        assert!(m.sr_contains(6, 34).unwrap());
    }

    #[test]
    fn removed_element_lists() {
        assert_eq!(am(11, 1, 7).sr_removed_elements(3, 1000).unwrap(), vec![14]);
        assert_eq!(
            am(11, 1, 7).sr_removed_elements(1, 1000).unwrap(),
            vec![12, 23]
        );
        assert_eq!(
            am(14, 1, 7).sr_removed_elements(6, 1000).unwrap(),
            vec![20, 41]
        );
        // the cap truncates
        assert_eq!(am(11, 1, 7).sr_removed_elements(1, 15).unwrap(), vec![12]);
    }

    #[test]
    fn degenerate_w2_reduction() {
        // odd a: <5, 6, 7> minus 6 is <5, 7>
        let m = am(5, 1, 2);
        assert!(!m.sr_contains(1, 6).unwrap());
        assert!(!m.sr_contains(1, 13).unwrap());
        assert!(m.sr_contains(1, 12).unwrap());
        assert_eq!(
            m.sr_length_set(1, 35).unwrap().unwrap().to_vec(),
            vec![5, 7]
        );
        assert_eq!(
            m.sr_removed_elements(1, 10_000).unwrap(),
            vec![6, 11, 13, 16, 18, 23]
        );
        // even a: <4, 5, 6> minus 5 is <4, 6>, which is not cofinite
        let m = am(4, 1, 2);
        assert!(m.sr_contains(1, 10).unwrap());
        assert!(!m.sr_contains(1, 11).unwrap()); // 11 = 5 + 6 needs the dropped generator
        assert_eq!(
            m.sr_length_set(1, 16).unwrap().unwrap().to_vec(),
            vec![3, 4]
        );
        assert_eq!(
            m.sr_removed_elements(1, 10_000),
            Err(Error::GcdNotOne { gcd: 2 })
        );
    }

    #[test]
    fn congruence_sides_agree() {
        let m = am(11, 1, 7);
        assert_eq!(m.congruence_pair(17), (true, true));
        assert_eq!(m.congruence_pair(36), (false, false));
        for n in -100..500 {
            let (lhs, rhs) = m.congruence_pair(n);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }
}
