//! Rational helpers: construction, parsing, exact square roots, and
//! decimal rendering derived from the exact value.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactError;

/// The base scalar everywhere: an arbitrary-precision rational, always in
/// lowest terms with positive denominator.
pub type Rat = BigRational;

/// `p/q` from machine integers.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    let t = s.trim();
    Rat::from_str(t).map_err(|_| ExactError::ParseRat(s.to_string()))
}

/// Renders as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

pub fn floor_int(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

pub fn ceil_int(r: &Rat) -> BigInt {
    r.ceil().to_integer()
}

/// Exact square root, if `r` is the square of a rational.
///
/// Both numerator and denominator must be perfect squares; decided with
/// exact integer square roots.
pub fn sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rat::zero());
    }
    let n = r.numer();
    let d = r.denom();
    let sn = n.sqrt();
    if &(&sn * &sn) != n {
        return None;
    }
    let sd = d.sqrt();
    if &(&sd * &sd) != d {
        return None;
    }
    Some(Rat::new(sn, sd))
}

/// Decimal rendering with `sig` significant digits, rounded half away
/// from zero, trailing zeros stripped. The digits come from exact integer
/// division of the rational; nothing is recomputed in floating point.
pub fn decimal_string(r: &Rat, sig: usize) -> String {
    assert!(sig > 0);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let n = r.numer().abs();
    let d = r.denom().clone();

    // e = floor(log10(n/d)), found from digit counts and fixed up exactly.
    let mut e = n.to_string().len() as i64 - d.to_string().len() as i64;
    while !pow10_le(e, &n, &d) {
        e -= 1;
    }
    while pow10_le(e + 1, &n, &d) {
        e += 1;
    }

    // Round n/d * 10^(sig-1-e) to the nearest integer (half away from zero).
    let shift = sig as i64 - 1 - e;
    let (num, den) = if shift >= 0 {
        (&n * pow10(shift), d)
    } else {
        (n, &d * pow10(-shift))
    };
    let (mut q, rem) = num.div_rem(&den);
    if &rem * 2 >= den {
        q += 1;
    }
    if q == pow10(sig as i64) {
        q = pow10(sig as i64 - 1);
        e += 1;
    }

    let digits = q.to_string();
    debug_assert_eq!(digits.len(), sig);
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if e >= 0 {
        let e = e as usize;
        if e + 1 >= sig {
            out.push_str(&digits);
            out.push_str(&"0".repeat(e + 1 - sig));
        } else {
            out.push_str(&digits[..=e]);
            let frac = digits[e + 1..].trim_end_matches('0');
            if !frac.is_empty() {
                out.push('.');
                out.push_str(frac);
            }
        }
    } else {
        out.push_str("0.");
        out.push_str(&"0".repeat((-e - 1) as usize));
        out.push_str(digits.trim_end_matches('0'));
    }
    out
}

fn pow10(e: i64) -> BigInt {
    debug_assert!(e >= 0, "pow10 of negative exponent");
    BigInt::from(10u32).pow(e.to_u32().expect("exponent fits u32"))
}

// 10^e <= n/d, for any sign of e.
fn pow10_le(e: i64, n: &BigInt, d: &BigInt) -> bool {
    if e >= 0 {
        pow10(e) * d <= *n
    } else {
        *d <= n * pow10(-e)
    }
}

/// Serde adapter: a `Rat` as its `"p/q"` string.
pub mod rat_serde {
    use super::Rat;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        Rat::from_str(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for vectors of `Rat`.
pub mod rat_vec_serde {
    use super::Rat;
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&r.to_string())?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-7/2", "5", "0", "363/32"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(format_rat(&parse_rat("6/4").unwrap()), "3/2");
        assert!(parse_rat("abc").is_err());
        assert!(parse_rat("1/0").is_err());
    }

    #[test]
    fn exact_square_roots() {
        assert_eq!(sqrt_exact(&rat(121, 64)), Some(rat(11, 8)));
        assert_eq!(sqrt_exact(&rat(289, 144)), Some(rat(17, 12)));
        assert_eq!(sqrt_exact(&rat(4, 1)), Some(rat(2, 1)));
        assert_eq!(sqrt_exact(&rat(0, 1)), Some(rat(0, 1)));
        assert_eq!(sqrt_exact(&rat(1, 2)), None);
        assert_eq!(sqrt_exact(&rat(2, 1)), None);
        assert_eq!(sqrt_exact(&rat(-4, 1)), None);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&rat(11, 8), 12), "1.375");
        assert_eq!(decimal_string(&rat(1, 3), 5), "0.33333");
        assert_eq!(decimal_string(&rat(2, 3), 5), "0.66667");
        assert_eq!(decimal_string(&rat(-1, 8), 12), "-0.125");
        assert_eq!(decimal_string(&rat(1000, 1), 3), "1000");
        assert_eq!(decimal_string(&rat(999999, 1000), 3), "1000");
        assert_eq!(decimal_string(&rat(1, 1000), 3), "0.001");
        assert_eq!(decimal_string(&rat(0, 5), 12), "0");
    }
}
