//! Exact scalars: the rationals and prime fields GF(p).
//!
//! A [`FieldElement`] carries enough information to know which field it lives
//! in, so matrices and polynomials never need a separate field handle to do
//! arithmetic. The operator impls (`+`, `-`, `*`, `/`) panic on a field
//! mismatch or a zero divisor; the `checked_*` methods report those as errors.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which exact field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "FieldRepr", into = "FieldRepr")]
pub enum Field {
    Rationals,
    Prime(u64),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum FieldRepr {
    Q,
    Fp { p: u64 },
}

impl TryFrom<FieldRepr> for Field {
    type Error = Error;

    fn try_from(repr: FieldRepr) -> Result<Self> {
        match repr {
            FieldRepr::Q => Ok(Field::Rationals),
            FieldRepr::Fp { p } => Field::prime(p),
        }
    }
}

impl From<Field> for FieldRepr {
    fn from(field: Field) -> Self {
        match field {
            Field::Rationals => FieldRepr::Q,
            Field::Prime(p) => FieldRepr::Fp { p },
        }
    }
}

impl Field {
    /// GF(p); fails unless `p` is prime.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(n.into())),
            Field::Prime(p) => FieldElement::Residue {
                value: (n as i128).rem_euclid(p as i128) as u64,
                p,
            },
        }
    }

    /// `num / den` as a field element.
    pub fn ratio(self, num: i64, den: i64) -> Result<FieldElement> {
        self.from_i64(num).checked_div(&self.from_i64(den))
    }

    /// Maps an arbitrary-precision integer into the field.
    pub fn from_bigint(self, n: &BigInt) -> FieldElement {
        match self {
            Field::Rationals => FieldElement::Rational(BigRational::from_integer(n.clone())),
            Field::Prime(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                let value = u64::try_from(r).expect("residue below p fits in u64");
                FieldElement::Residue { value, p }
            }
        }
    }

    /// Parses `"a"` or `"a/b"` with decimal integers `a`, `b`.
    pub fn parse(self, text: &str) -> Result<FieldElement> {
        let malformed = || Error::Malformed(text.to_string());
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let parse_int = |s: &str| -> Result<BigInt> {
            let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            s.parse::<BigInt>().map_err(|_| malformed())
        };
        let num = parse_int(num)?;
        let Some(den) = den else {
            return Ok(self.from_bigint(&num));
        };
        let den = parse_int(den)?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let den = self.from_bigint(&den);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.from_bigint(&num) / &den)
    }

    /// Every element of a prime field in residue order; `None` for the rationals.
    pub fn elements(self) -> Option<impl Iterator<Item = FieldElement>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some((0..p).map(move |value| FieldElement::Residue { value, p })),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// An element of [`Field`] in canonical form: a reduced fraction with
/// positive denominator, or a residue in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElement {
    Rational(BigRational),
    Residue { value: u64, p: u64 },
}

impl FieldElement {
    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rationals,
            FieldElement::Residue { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Residue { value, .. } => *value == 1,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q),
            FieldElement::Residue { .. } => None,
        }
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field() == other.field() {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field(), other.field()))
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a + b),
            (FieldElement::Residue { value: a, p }, FieldElement::Residue { value: b, .. }) => {
                FieldElement::Residue { value: ((*a as u128 + *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        self.checked_add(&-rhs)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => FieldElement::Rational(a * b),
            (FieldElement::Residue { value: a, p }, FieldElement::Residue { value: b, .. }) => {
                FieldElement::Residue { value: ((*a as u128 * *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => unreachable!(),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        self.checked_mul(&rhs.inv()?)
    }

    /// Multiplicative inverse; residues use the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(q) => FieldElement::Rational(q.recip()),
            FieldElement::Residue { value, p } => FieldElement::Residue { value: inv_mod(*value, *p), p: *p },
        })
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            FieldElement::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(q) => FieldElement::Rational(-q),
            FieldElement::Residue { value, p } => FieldElement::Residue { value: (p - value) % p, p: *p },
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        -&self
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;

            fn $method(self, rhs: &FieldElement) -> FieldElement {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }

        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;

            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;

            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }

        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;

            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(p as i128) as u64
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; these bases are exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(text: &str) -> FieldElement {
        Field::Rationals.parse(text).unwrap()
    }

    #[test]
    fn parse_reduces_fractions() {
        assert_eq!(q("3/6").to_string(), "1/2");
        assert_eq!(q("-4/-8").to_string(), "1/2");
        assert_eq!(q("6/-4").to_string(), "-3/2");
        assert_eq!(q(" 7 ").to_string(), "7");
    }

    #[test]
    fn parse_prime_field() {
        let f = Field::prime(13).unwrap();
        assert_eq!(f.parse("5").unwrap().to_string(), "5");
        assert_eq!(f.parse("-1").unwrap().to_string(), "12");
        // 1/2 = 7 mod 13
        assert_eq!(f.parse("1/2").unwrap().to_string(), "7");
        assert_eq!(f.parse("27").unwrap().to_string(), "1");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Field::Rationals.parse("1/0"), Err(Error::ZeroDenominator)));
        let f = Field::prime(13).unwrap();
        assert!(matches!(f.parse("1/26"), Err(Error::DivisionByZero)));
        for bad in ["", "x", "1/", "/2", "1.5", "1/2/3", "--1", "+"] {
            assert!(matches!(Field::Rationals.parse(bad), Err(Error::Malformed(_))), "{bad}");
        }
    }

    #[test]
    fn exact_rational_sum() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
    }

    #[test]
    fn prime_division_matches_exhaustive_search() {
        let f = Field::prime(13).unwrap();
        let seven = f.from_i64(7);
        let two = f.from_i64(2);
        // oracle: the unique x with 2x = 7 (mod 13)
        let x = (0..13u64).find(|x| (2 * x) % 13 == 7).unwrap();
        assert_eq!(x, 10);
        assert_eq!((&seven / &two).to_string(), x.to_string());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(q("3").checked_div(&q("0")), Err(Error::DivisionByZero)));
        let f = Field::prime(7).unwrap();
        assert!(matches!(f.one().checked_div(&f.zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn field_mismatch_is_an_error() {
        let f = Field::prime(7).unwrap();
        assert!(matches!(q("1").checked_add(&f.one()), Err(Error::FieldMismatch(..))));
        let g = Field::prime(5).unwrap();
        assert!(matches!(g.one().checked_mul(&f.one()), Err(Error::FieldMismatch(..))));
    }

    #[test]
    fn from_i64_wraps_negatives() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.from_i64(-1).to_string(), "4");
        assert_eq!(f.from_i64(-10).to_string(), "0");
        assert_eq!(f.from_i64(i64::MIN), f.from_bigint(&BigInt::from(i64::MIN)));
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1_000_000_007 * 3));
        assert!(is_prime(18446744073709551557));
        assert!(matches!(Field::prime(91), Err(Error::NotPrime(91))));
    }

    #[test]
    fn descriptor_json() {
        let f: Field = serde_json::from_str(r#"{"kind":"Fp","p":13}"#).unwrap();
        assert_eq!(f, Field::Prime(13));
        let q: Field = serde_json::from_str(r#"{"kind":"Q"}"#).unwrap();
        assert_eq!(q, Field::Rationals);
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"kind":"Fp","p":13}"#);
        assert!(serde_json::from_str::<Field>(r#"{"kind":"Fp","p":12}"#).is_err());
        assert!(serde_json::from_str::<Field>(r#"{"kind":"R"}"#).is_err());
    }

    #[test]
    fn large_prime_arithmetic_does_not_overflow() {
        let p = 18446744073709551557u64;
        let f = Field::prime(p).unwrap();
        let a = f.from_i64(-2);
        let b = &a * &a;
        assert_eq!(b, f.from_i64(4));
        assert_eq!(&(&a + &a) - &a, a);
        assert!((&a * &a.inv().unwrap()).is_one());
    }
}
