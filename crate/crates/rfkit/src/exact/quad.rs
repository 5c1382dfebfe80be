//! Elements `r + c·√D` of a real quadratic field, with exact ordering.
//!
//! Every reduction run fixes a single discriminant `D ≥ 0`; rationals are
//! the special case `c = 0`. Values whose discriminant is a perfect
//! rational square collapse to rational form on construction, so a
//! nonzero `root_coef` always denotes an irrational value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::interval::{sqrt_enclosure, RatInterval};
use super::rat::{sqrt_exact, Rat};
use super::ExactError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quad {
    rat: Rat,
    coef: Rat,
    disc: Rat,
}

impl Quad {
    /// Normalized `rat + coef·√disc`. A perfect-square discriminant folds
    /// into the rational part; a zero coefficient drops the discriminant.
    pub fn new(rat: Rat, coef: Rat, disc: Rat) -> Result<Self, ExactError> {
        if disc.is_negative() {
            return Err(ExactError::InvalidDiscriminant(disc.to_string()));
        }
        if coef.is_zero() || disc.is_zero() {
            return Ok(Self::from_rat(rat));
        }
        if let Some(s) = sqrt_exact(&disc) {
            return Ok(Self::from_rat(rat + coef * s));
        }
        Ok(Quad { rat, coef, disc })
    }

    pub fn from_rat(rat: Rat) -> Self {
        Quad {
            rat,
            coef: Rat::zero(),
            disc: Rat::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(n)))
    }

    /// `√disc` itself.
    pub fn sqrt_of(disc: Rat) -> Result<Self, ExactError> {
        Self::new(Rat::zero(), Rat::from_integer(BigInt::from(1)), disc)
    }

    pub fn zero() -> Self {
        Self::from_rat(Rat::zero())
    }

    pub fn rat_part(&self) -> &Rat {
        &self.rat
    }

    pub fn root_coef(&self) -> &Rat {
        &self.coef
    }

    pub fn disc(&self) -> &Rat {
        &self.disc
    }

    pub fn is_rational(&self) -> bool {
        self.coef.is_zero()
    }

    /// The rational value, when there is no irrational part.
    pub fn as_rat(&self) -> Option<&Rat> {
        if self.is_rational() {
            Some(&self.rat)
        } else {
            None
        }
    }

    /// Exact sign of the real value: case analysis on the signs of the two
    /// parts, with ties broken by comparing `rat²` against `coef²·disc`.
    pub fn sign(&self) -> i8 {
        let sr = rat_sign(&self.rat);
        if self.coef.is_zero() {
            return sr;
        }
        let sc = rat_sign(&self.coef);
        if sr == 0 {
            return sc;
        }
        if sr == sc {
            return sr;
        }
        // Opposite signs: |rat| vs |coef|·√disc.
        let lhs = &self.rat * &self.rat;
        let rhs = &self.coef * &self.coef * &self.disc;
        match lhs.cmp(&rhs) {
            Ordering::Greater => sr,
            Ordering::Less => sc,
            Ordering::Equal => 0,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.coef.is_zero()
    }

    /// Total order consistent with the real embedding; the operands must
    /// share a discriminant or one must be rational.
    pub fn try_cmp(&self, other: &Quad) -> Result<Ordering, ExactError> {
        let diff = self.try_sub(other)?;
        Ok(match diff.sign() {
            1 => Ordering::Greater,
            -1 => Ordering::Less,
            _ => Ordering::Equal,
        })
    }

    fn unify_disc(&self, other: &Quad) -> Result<Rat, ExactError> {
        if self.coef.is_zero() {
            Ok(other.disc.clone())
        } else if other.coef.is_zero() || self.disc == other.disc {
            Ok(self.disc.clone())
        } else {
            Err(ExactError::IncompatibleField(
                self.disc.to_string(),
                other.disc.to_string(),
            ))
        }
    }

    pub fn try_add(&self, other: &Quad) -> Result<Quad, ExactError> {
        let disc = self.unify_disc(other)?;
        Quad::new(&self.rat + &other.rat, &self.coef + &other.coef, disc)
    }

    pub fn try_sub(&self, other: &Quad) -> Result<Quad, ExactError> {
        let disc = self.unify_disc(other)?;
        Quad::new(&self.rat - &other.rat, &self.coef - &other.coef, disc)
    }

    pub fn try_mul(&self, other: &Quad) -> Result<Quad, ExactError> {
        let disc = self.unify_disc(other)?;
        let rat = &self.rat * &other.rat + &self.coef * &other.coef * &disc;
        let coef = &self.rat * &other.coef + &self.coef * &other.rat;
        Quad::new(rat, coef, disc)
    }

    pub fn scale(&self, r: &Rat) -> Quad {
        Quad::new(&self.rat * r, &self.coef * r, self.disc.clone())
            .expect("scaling keeps the discriminant")
    }

    pub fn shift(&self, r: &Rat) -> Quad {
        Quad::new(&self.rat + r, self.coef.clone(), self.disc.clone())
            .expect("shifting keeps the discriminant")
    }

    pub fn square(&self) -> Quad {
        self.try_mul(self).expect("same field")
    }

    /// Largest integer `n ≤` value, decided exactly.
    pub fn floor_int(&self) -> BigInt {
        if let Some(r) = self.as_rat() {
            return r.floor().to_integer();
        }
        let mut n = BigInt::from(self.to_f64().floor() as i64);
        while self.cmp_int(&(&n + 1)) != Ordering::Less {
            n += 1;
        }
        while self.cmp_int(&n) == Ordering::Less {
            n -= 1;
        }
        n
    }

    /// Smallest integer `n ≥` value, decided exactly.
    pub fn ceil_int(&self) -> BigInt {
        if let Some(r) = self.as_rat() {
            return r.ceil().to_integer();
        }
        // Irrational, so floor + 1.
        self.floor_int() + 1
    }

    fn cmp_int(&self, n: &BigInt) -> Ordering {
        self.try_cmp(&Quad::from_rat(Rat::from_integer(n.clone())))
            .expect("integer is compatible with any field")
    }

    /// Approximate value for display; never used in decisions.
    pub fn to_f64(&self) -> f64 {
        let r = self.rat.to_f64().unwrap_or(f64::NAN);
        if self.coef.is_zero() {
            return r;
        }
        let c = self.coef.to_f64().unwrap_or(f64::NAN);
        let d = self.disc.to_f64().unwrap_or(f64::NAN);
        r + c * d.sqrt()
    }

    /// Rigorous rational enclosure, tightening with `bits` of root precision.
    pub fn enclosure(&self, bits: u32) -> RatInterval {
        if self.is_rational() {
            return RatInterval::point(self.rat.clone());
        }
        let root = sqrt_enclosure(&self.disc, bits);
        root.scale(&self.coef).shift(&self.rat)
    }

    /// Decimal rendering of the exact real value: the enclosure is refined
    /// until both endpoints agree on `sig` significant digits.
    pub fn decimal_string(&self, sig: usize) -> String {
        if let Some(r) = self.as_rat() {
            return super::rat::decimal_string(r, sig);
        }
        let mut bits = 64;
        loop {
            let enc = self.enclosure(bits);
            let lo = super::rat::decimal_string(enc.lo(), sig);
            let hi = super::rat::decimal_string(enc.hi(), sig);
            if lo == hi {
                return lo;
            }
            bits *= 2;
            assert!(bits <= 4096, "enclosure refinement did not converge");
        }
    }
}

fn rat_sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_negative() {
        -1
    } else {
        1
    }
}

impl Add for &Quad {
    type Output = Quad;
    fn add(self, rhs: &Quad) -> Quad {
        self.try_add(rhs).expect("incompatible quadratic fields")
    }
}

impl Sub for &Quad {
    type Output = Quad;
    fn sub(self, rhs: &Quad) -> Quad {
        self.try_sub(rhs).expect("incompatible quadratic fields")
    }
}

impl Mul for &Quad {
    type Output = Quad;
    fn mul(self, rhs: &Quad) -> Quad {
        self.try_mul(rhs).expect("incompatible quadratic fields")
    }
}

impl Neg for &Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad::new(-&self.rat, -&self.coef, self.disc.clone()).expect("negation keeps the field")
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coef.is_zero() {
            return write!(f, "{}", self.rat);
        }
        if self.rat.is_zero() {
            return write!(f, "{}*sqrt({})", self.coef, self.disc);
        }
        write!(f, "{} + {}*sqrt({})", self.rat, self.coef, self.disc)
    }
}

impl Serialize for Quad {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Quad", 3)?;
        st.serialize_field("rat", &self.rat.to_string())?;
        st.serialize_field("coef", &self.coef.to_string())?;
        st.serialize_field("disc", &self.disc.to_string())?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat, rat_int};

    #[test]
    fn perfect_square_collapses() {
        let q = Quad::new(rat_int(0), rat_int(1), rat_int(4)).unwrap();
        assert_eq!(q.as_rat(), Some(&rat_int(2)));
        // lambda = 11/8 at b = 3, a = 363/32: disc 121/64 collapses.
        let l = Quad::sqrt_of(rat(121, 64)).unwrap();
        assert_eq!(l.as_rat(), Some(&rat(11, 8)));
        let c = Quad::new(rat_int(1), rat_int(1), rat(121, 64)).unwrap();
        assert_eq!(c.as_rat(), Some(&rat(19, 8)));
    }

    #[test]
    fn negative_discriminant_rejected() {
        assert!(matches!(
            Quad::new(rat_int(0), rat_int(1), rat_int(-1)),
            Err(ExactError::InvalidDiscriminant(_))
        ));
    }

    #[test]
    fn signs_by_square_comparison() {
        // 1 - sqrt(1/2) > 0 since 1 > 1/2.
        let q = Quad::new(rat_int(1), rat_int(-1), rat(1, 2)).unwrap();
        assert_eq!(q.sign(), 1);
        // 3 - 2*sqrt(2) > 0 since 9 > 8.
        let q = Quad::new(rat_int(3), rat_int(-2), rat_int(2)).unwrap();
        assert_eq!(q.sign(), 1);
        // -1 + sqrt(1/2) < 0 since 1 > 1/2.
        let q = Quad::new(rat_int(-1), rat_int(1), rat(1, 2)).unwrap();
        assert_eq!(q.sign(), -1);
        assert_eq!(Quad::zero().sign(), 0);
        let q = Quad::new(rat_int(0), rat_int(3), rat_int(5)).unwrap();
        assert_eq!(q.sign(), 1);
    }

    #[test]
    fn cmp_mixed_rational_and_root() {
        // 3/2 vs sqrt(2): 9/4 > 2.
        let a = Quad::from_rat(rat(3, 2));
        let b = Quad::sqrt_of(rat_int(2)).unwrap();
        assert_eq!(a.try_cmp(&b).unwrap(), Ordering::Greater);
        assert_eq!(b.try_cmp(&b).unwrap(), Ordering::Equal);
        let s3 = Quad::sqrt_of(rat_int(3)).unwrap();
        assert!(b.try_cmp(&s3).is_err());
    }

    #[test]
    fn field_arithmetic() {
        let s2 = Quad::sqrt_of(rat_int(2)).unwrap();
        let x = Quad::new(rat_int(3), rat_int(-2), rat_int(2)).unwrap();
        let sum = &x + &s2;
        assert_eq!(sum, Quad::new(rat_int(3), rat_int(-1), rat_int(2)).unwrap());
        // (3 - 2*sqrt2)(3 + 2*sqrt2) = 9 - 8 = 1.
        let conj = Quad::new(rat_int(3), rat_int(2), rat_int(2)).unwrap();
        assert_eq!(x.try_mul(&conj).unwrap(), Quad::from_int(1));
        // sqrt2 * sqrt2 = 2 collapses to rational.
        assert_eq!(s2.square(), Quad::from_int(2));
    }

    #[test]
    fn floor_and_ceil() {
        let s6 = Quad::sqrt_of(rat_int(6)).unwrap();
        assert_eq!(s6.floor_int(), BigInt::from(2));
        assert_eq!(s6.ceil_int(), BigInt::from(3));
        assert_eq!(Quad::from_rat(rat(7, 2)).floor_int(), BigInt::from(3));
        assert_eq!(Quad::from_rat(rat(7, 2)).ceil_int(), BigInt::from(4));
        assert_eq!(Quad::from_int(4).ceil_int(), BigInt::from(4));
        let neg = Quad::new(rat_int(0), rat_int(-1), rat_int(6)).unwrap();
        assert_eq!(neg.floor_int(), BigInt::from(-3));
        assert_eq!(neg.ceil_int(), BigInt::from(-2));
    }

    #[test]
    fn enclosure_brackets_value() {
        let q = Quad::new(rat_int(1), rat_int(3), rat(1, 2)).unwrap();
        let enc = q.enclosure(80);
        // lo <= 1 + 3*sqrt(1/2) <= hi, checked by exact squaring.
        let lo_rem = (enc.lo() - rat_int(1)) / rat_int(3);
        let hi_rem = (enc.hi() - rat_int(1)) / rat_int(3);
        assert!(&lo_rem * &lo_rem <= rat(1, 2));
        assert!(&hi_rem * &hi_rem >= rat(1, 2));
        assert!(enc.width() < rat(1, 1_000_000_000));
        assert_eq!(q.decimal_string(6), "3.12132");
    }

    #[test]
    fn serializes_as_disc_object() {
        let q = Quad::new(rat(1, 2), rat(-3, 4), rat(5, 6)).unwrap();
        let js = serde_json::to_value(&q).unwrap();
        assert_eq!(js["rat"], "1/2");
        assert_eq!(js["coef"], "-3/4");
        assert_eq!(js["disc"], "5/6");
    }
}
