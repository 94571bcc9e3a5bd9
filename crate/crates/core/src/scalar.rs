//! Exact arithmetic over the Gaussian rationals `Q(i)`.
//!
//! A [`Scalar`] is a pair of reduced big-integer fractions. Every operation
//! returns a value in canonical form (positive denominators, coprime
//! numerator and denominator, zero stored as `0/1`), so structural equality
//! coincides with field equality and scalars can be hashed and sorted.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseScalarError {
    #[error("empty scalar literal")]
    Empty,
    #[error("malformed scalar literal `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("non-canonical scalar tuple: {0}")]
    NonCanonical(String),
}

/// An element `re + im*i` of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        // BigRational normalizes on construction, so both parts are canonical.
        Scalar { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// `num/den`, real.
    pub fn frac(num: i64, den: i64) -> Self {
        Scalar::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    /// `(re_num/re_den) + (im_num/im_den) i`.
    pub fn gaussian(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Scalar::new(
            BigRational::new(re_num.into(), re_den.into()),
            BigRational::new(im_num.into(), im_den.into()),
        )
    }

    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, ArithmeticError> {
        if self.is_zero() {
            return Err(ArithmeticError::DivisionByZero);
        }
        let n = self.norm();
        Ok(Scalar::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self, ArithmeticError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// A square root in `Q(i)` when one exists.
    ///
    /// The returned root is canonical: `re > 0`, or `re == 0` and `im >= 0`.
    pub fn sqrt(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        // (x + yi)^2 = a + bi  <=>  x^2 - y^2 = a, 2xy = b, x^2 + y^2 = |s|.
        let modulus = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        let x2 = (&modulus + &self.re) / &two;
        let y2 = (&modulus - &self.re) / &two;
        let mut x = rational_sqrt(&x2)?;
        let mut y = rational_sqrt(&y2)?;
        if self.im.is_negative() {
            y = -y;
        }
        if x.is_zero() && y.is_negative() {
            y = -y;
        }
        if x.is_negative() {
            x = -x;
            y = -y;
        }
        let root = Scalar::new(x, y);
        debug_assert_eq!(&(&root * &root), self);
        Some(root)
    }

    /// The bit-exact JSON tuple `[re_num, re_den, im_num, im_den]`.
    pub fn to_tuple(&self) -> [BigInt; 4] {
        [
            self.re.numer().clone(),
            self.re.denom().clone(),
            self.im.numer().clone(),
            self.im.denom().clone(),
        ]
    }

    /// Inverse of [`Scalar::to_tuple`]; rejects non-reduced fractions and
    /// non-positive denominators.
    pub fn from_tuple(t: [BigInt; 4]) -> Result<Self, ParseScalarError> {
        let [rn, rd, in_, id] = t;
        for (n, d) in [(&rn, &rd), (&in_, &id)] {
            if !d.is_positive() || !n.gcd(d).is_one() {
                return Err(ParseScalarError::NonCanonical(format!("[{rn}, {rd}, {in_}, {id}]")));
            }
        }
        Ok(Scalar::new(BigRational::new_raw(rn, rd), BigRational::new_raw(in_, id)))
    }

    /// Sort key used for deterministic orderings; not a field ordering.
    pub fn canonical_cmp(&self, other: &Scalar) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(BigRational::new(n, d))
    } else {
        None
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::new(q, BigRational::zero())
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        Scalar::new(add_part(&self.re, &rhs.re), add_part(&self.im, &rhs.im))
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        self + &-rhs
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        // Most scalars met in practice are real and small; these shortcuts
        // avoid the gcd reductions of a full complex product.
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => return Scalar::new(&self.re * &rhs.re, BigRational::zero()),
            (true, false) => return Scalar::new(mul_part(&self.re, &rhs.re), mul_part(&self.re, &rhs.im)),
            (false, true) => return Scalar::new(mul_part(&self.re, &rhs.re), mul_part(&self.im, &rhs.re)),
            (false, false) => {}
        }
        Scalar::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if !rhs.re.is_zero() {
            self.re += &rhs.re;
        }
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if !rhs.re.is_zero() {
            self.re -= &rhs.re;
        }
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

fn add_part(a: &BigRational, b: &BigRational) -> BigRational {
    if b.is_zero() {
        a.clone()
    } else if a.is_zero() {
        b.clone()
    } else {
        a + b
    }
}

fn mul_part(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_zero() || b.is_zero() {
        BigRational::zero()
    } else {
        a * b
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Self {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

impl fmt::Display for Scalar {
    /// `0`, `-3/2`, `i`, `-1/2i`, `1+i`, `1/2-3/4i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re_zero = self.re.is_zero();
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if !re_zero {
            write!(f, "{}", self.re)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.im.is_one() {
            f.write_str("i")
        } else if (-&self.im).is_one() {
            f.write_str("-i")
        } else {
            write!(f, "{}i", self.im)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str, whole: &str) -> Result<BigRational, ParseScalarError> {
    let bad = || ParseScalarError::Malformed(whole.to_string());
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ParseScalarError::ZeroDenominator(whole.to_string()));
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    /// Parses the [`Display`](fmt::Display) rendering.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseScalarError::Empty);
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Scalar::from(parse_rational(s, s)?));
        };
        // Split at the sign that separates the real and imaginary parts.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (parse_rational(&body[..k], s)?, &body[k..]),
            None => (BigRational::zero(), body),
        };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other), s)?,
        };
        Ok(Scalar::new(re, im))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut tup = serializer.serialize_tuple(4)?;
        for n in self.to_tuple() {
            let num: serde_json::Number = n.to_string().parse().map_err(serde::ser::Error::custom)?;
            tup.serialize_element(&num)?;
        }
        tup.end()
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct TupleVisitor;
        impl<'de> Visitor<'de> for TupleVisitor {
            type Value = Scalar;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a [re_num, re_den, im_num, im_den] integer tuple")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Scalar, A::Error> {
                let mut parts: Vec<BigInt> = Vec::with_capacity(4);
                while let Some(n) = seq.next_element::<serde_json::Number>()? {
                    let v: BigInt = n
                        .to_string()
                        .parse()
                        .map_err(|_| de::Error::custom(format!("not an integer: {n}")))?;
                    parts.push(v);
                }
                let t: [BigInt; 4] = parts.try_into().map_err(|_| de::Error::invalid_length(4, &self))?;
                Scalar::from_tuple(t).map_err(de::Error::custom)
            }
        }
        deserializer.deserialize_seq(TupleVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(x: &str) -> Scalar {
        x.parse().unwrap()
    }

    #[test]
    fn norm_of_one_plus_i() {
        assert_eq!(s("1+i") * s("1-i"), Scalar::from_int(2));
    }

    #[test]
    fn inverse_of_one_plus_i() {
        assert_eq!(s("1+i").inv().unwrap(), s("1/2-1/2i"));
        assert_eq!(s("1/2") + s("1/2"), Scalar::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::zero().inv(), Err(ArithmeticError::DivisionByZero));
        assert!(Scalar::one().checked_div(&Scalar::zero()).is_err());
    }

    #[test]
    fn canonical_storage() {
        let x = Scalar::gaussian(2, -4, 0, 7);
        assert_eq!(x.to_tuple().map(|b| b.to_string()), ["-1", "2", "0", "1"]);
    }

    #[test]
    fn square_roots() {
        assert_eq!(Scalar::from_int(-1).sqrt(), Some(Scalar::i()));
        assert_eq!(Scalar::frac(1, 4).sqrt(), Some(Scalar::frac(1, 2)));
        // (1+i)^2 = 2i
        let two_i = s("2i");
        assert_eq!(s("1+i") * s("1+i"), two_i);
        assert_eq!(two_i.sqrt(), Some(s("1+i")));
        assert_eq!(Scalar::from_int(2).sqrt(), None);
        assert_eq!(Scalar::i().sqrt(), None);
        assert_eq!(Scalar::from_int(-4).sqrt(), Some(s("2i")));
        assert_eq!(s("-2i").sqrt(), Some(s("1-i")));
    }

    #[test]
    fn display_forms() {
        for lit in ["0", "-3/2", "i", "-i", "-1/2i", "1+i", "1/2-3/4i", "7"] {
            assert_eq!(s(lit).to_string(), lit);
        }
    }

    #[test]
    fn json_tuple() {
        let x = s("-1/2+3i");
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(j, "[-1,2,3,1]");
        assert_eq!(serde_json::from_str::<Scalar>(&j).unwrap(), x);
        assert!(serde_json::from_str::<Scalar>("[2,4,0,1]").is_err());
        assert!(serde_json::from_str::<Scalar>("[1,-2,0,1]").is_err());
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| Scalar::gaussian(a, b, c, d))
    }

    proptest! {
        #[test]
        fn render_parse_round_trip(x in arb_scalar()) {
            prop_assert_eq!(x.to_string().parse::<Scalar>().unwrap(), x.clone());
            let j = serde_json::to_string(&x).unwrap();
            prop_assert_eq!(serde_json::from_str::<Scalar>(&j).unwrap(), x);
        }

        #[test]
        fn multiplicative_inverse(x in arb_scalar()) {
            prop_assume!(!x.is_zero());
            prop_assert_eq!(&x * &x.inv().unwrap(), Scalar::one());
        }

        #[test]
        fn sqrt_of_square(x in arb_scalar()) {
            let r = (&x * &x).sqrt().unwrap();
            prop_assert!(r == x || r == -x.clone());
        }

        #[test]
        fn field_distributivity(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(x.conj().conj(), x);
        }
    }
}
