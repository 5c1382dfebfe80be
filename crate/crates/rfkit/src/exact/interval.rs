//! Intervals with exact rational endpoints.
//!
//! Endpoints stay rational through ring operations, so the only rounding
//! happens in [`sqrt_enclosure`], which brackets a square root between two
//! rationals using exact integer square roots at a chosen precision.
//! Quantities mixing incompatible roots (such as `y(a)`, which involves
//! both `√a` and `√(2b)`) are enclosed this way instead of living in a
//! single quadratic field.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatInterval {
    lo: Rat,
    hi: Rat,
}

impl RatInterval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn point(r: Rat) -> Self {
        RatInterval {
            lo: r.clone(),
            hi: r,
        }
    }

    pub fn lo(&self) -> &Rat {
        &self.lo
    }

    pub fn hi(&self) -> &Rat {
        &self.hi
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn contains(&self, r: &Rat) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_strictly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn max_abs(&self) -> Rat {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RatInterval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Self) -> Self {
        RatInterval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Self {
        RatInterval::new(-&self.hi, -&self.lo)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RatInterval::new(lo, hi)
    }

    /// Reciprocal of an interval that excludes zero.
    pub fn recip(&self) -> Self {
        assert!(
            !self.contains_zero(),
            "reciprocal of an interval containing zero"
        );
        RatInterval::new(self.hi.recip(), self.lo.recip())
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.recip())
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_negative() {
            RatInterval::new(&self.hi * r, &self.lo * r)
        } else {
            RatInterval::new(&self.lo * r, &self.hi * r)
        }
    }

    pub fn shift(&self, r: &Rat) -> Self {
        RatInterval::new(&self.lo + r, &self.hi + r)
    }
}

/// Encloses `√x` (for `x ≥ 0`) between rationals with denominator scale
/// `2^bits`: if `s = ⌊√(n·d·4^bits)⌋` then `s/(d·2^bits) ≤ √(n/d) ≤ (s+1)/(d·2^bits)`.
pub fn sqrt_enclosure(x: &Rat, bits: u32) -> RatInterval {
    assert!(!x.is_negative(), "square root of a negative rational");
    if x.is_zero() {
        return RatInterval::point(Rat::zero());
    }
    let n = x.numer();
    let d = x.denom();
    let scale = BigInt::from(1) << bits;
    let t = n * d * (&scale * &scale);
    let s = t.sqrt();
    let den = d * &scale;
    let lo = Rat::new(s.clone(), den.clone());
    let hi = Rat::new(s + 1, den);
    RatInterval::new(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat;

    #[test]
    fn sqrt_brackets_tightly() {
        let enc = sqrt_enclosure(&rat(2, 1), 64);
        assert!(enc.lo() * enc.lo() <= rat(2, 1));
        assert!(enc.hi() * enc.hi() >= rat(2, 1));
        assert!(enc.width() < rat(1, 1_000_000_000_000_000));
        // Exact square still brackets (never asserts exactness).
        let enc = sqrt_enclosure(&rat(9, 4), 32);
        assert!(enc.contains(&rat(3, 2)));
    }

    #[test]
    fn arithmetic_encloses() {
        let a = RatInterval::new(rat(1, 2), rat(2, 3));
        let b = RatInterval::new(rat(-1, 3), rat(1, 4));
        let s = a.add(&b);
        assert_eq!(s, RatInterval::new(rat(1, 6), rat(11, 12)));
        let m = a.mul(&b);
        assert_eq!(m, RatInterval::new(rat(-2, 9), rat(1, 6)));
        let d = a.div(&RatInterval::new(rat(2, 1), rat(3, 1)));
        assert_eq!(d, RatInterval::new(rat(1, 6), rat(1, 3)));
        assert_eq!(a.scale(&rat(-2, 1)), RatInterval::new(rat(-4, 3), rat(-1, 1)));
    }

    #[test]
    #[should_panic(expected = "containing zero")]
    fn recip_through_zero_panics() {
        RatInterval::new(rat(-1, 2), rat(1, 2)).recip();
    }
}
