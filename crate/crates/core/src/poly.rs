//! Univariate polynomials over a [`Field`], with exact root finding.
//!
//! Roots over GF(p) come from trial evaluation for small `p` and from
//! `gcd(f, x^p - x)` plus equal-degree splitting otherwise. Roots over the
//! rationals come from Sturm-sequence bisection on an integer-coefficient
//! monic transform of the square-free part, so no integer factoring is needed.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::{Field, FieldElement};

/// Coefficients are stored lowest degree first with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

/// Above this characteristic, roots are found by gcd and splitting instead of trial.
const TRIAL_LIMIT: u64 = 1 << 16;

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElement) -> Self {
        Poly::new(c.field(), vec![c])
    }

    /// `x - root`
    pub fn linear(root: &FieldElement) -> Self {
        let field = root.field();
        Poly::new(field, vec![-root, field.one()])
    }

    pub fn x(field: Field) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Poly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => self.scale(&lead.inv().expect("leading coefficient is nonzero")),
            None => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.field.from_i64(i as i64))
            .collect();
        Poly::new(self.field, coeffs)
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let d = divisor.degree().expect("polynomial division by zero");
        let lead_inv = divisor.coeffs[d].inv().expect("leading coefficient is nonzero");
        let mut rem = self.coeffs.clone();
        let Some(n) = self.degree().filter(|&n| n >= d) else {
            return (Poly::zero(self.field), self.clone());
        };
        let mut quot = vec![self.field.zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let c = &rem[k + d] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * b);
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (Poly::new(self.field, quot), Poly::new(self.field, rem))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Poly {
        (self * other).div_rem(modulus).1
    }

    fn pow_mod(&self, mut exp: u64, modulus: &Poly) -> Poly {
        let mut base = self.div_rem(modulus).1;
        let mut acc = Poly::constant(self.field.one()).div_rem(modulus).1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            base = base.mul_mod(&base, modulus);
            exp >>= 1;
        }
        acc
    }

    /// Distinct roots in the field, ascending, each with its multiplicity.
    pub fn roots(&self) -> Vec<(FieldElement, usize)> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut distinct = match self.field {
            Field::Rationals => rational_roots(self),
            Field::Prime(p) if p <= TRIAL_LIMIT => {
                let elements = self.field.elements().expect("prime field");
                elements.filter(|x| self.eval(x).is_zero()).collect()
            }
            Field::Prime(p) => {
                let f = self.monic();
                let x = Poly::x(self.field);
                let frobenius = &x.pow_mod(p, &f) - &x;
                let mut out = Vec::new();
                split_linear(&f.gcd(&frobenius), p, &mut out);
                out
            }
        };
        distinct.sort();
        distinct
            .into_iter()
            .map(|r| {
                let m = self.multiplicity(&r);
                (r, m)
            })
            .collect()
    }

    fn multiplicity(&self, root: &FieldElement) -> usize {
        let lin = Poly::linear(root);
        let mut f = self.clone();
        let mut m = 0;
        loop {
            let (q, r) = f.div_rem(&lin);
            if !r.is_zero() || f.is_zero() {
                return m;
            }
            m += 1;
            f = q;
        }
    }
}

/// Collects the roots of a monic product of distinct linear factors over GF(p), p odd.
fn split_linear(g: &Poly, p: u64, out: &mut Vec<FieldElement>) {
    let field = g.field();
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(-&g.coeffs[0]),
        Some(k) => {
            let half = (p - 1) / 2;
            for a in 0.. {
                let shift = Poly::new(field, vec![field.from_i64(a), field.one()]);
                let t = &shift.pow_mod(half, g) - &Poly::constant(field.one());
                let h = g.gcd(&t);
                let dh = h.degree().unwrap_or(0);
                if dh > 0 && dh < k {
                    split_linear(&h, p, out);
                    split_linear(&g.div_rem(&h).0, p, out);
                    return;
                }
            }
        }
    }
}

fn rational_roots(f: &Poly) -> Vec<FieldElement> {
    let field = Field::Rationals;
    let square_free = f.div_rem(&f.gcd(&f.derivative())).0.monic();
    let mut g = square_free;
    let mut roots = Vec::new();
    if g.coeff(0).is_zero() {
        roots.push(field.zero());
        g = g.div_rem(&Poly::x(field)).0;
    }
    let Some(n) = g.degree().filter(|&n| n > 0) else {
        return roots;
    };

    // Clear denominators, then substitute x = y / a_n to get a monic integer polynomial
    // whose integer roots y give the rational roots y / a_n.
    let lcm = g
        .coeffs
        .iter()
        .map(|c| c.as_rational().expect("rational coefficient").denom().clone())
        .fold(BigInt::one(), |acc, d| acc.lcm(&d));
    let ints: Vec<BigInt> = g
        .coeffs
        .iter()
        .map(|c| (c.as_rational().unwrap() * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let lead = ints[n].clone();
    let monic_int: Vec<BigInt> = (0..=n)
        .map(|i| if i == n { BigInt::one() } else { &ints[i] * lead.pow((n - 1 - i) as u32) })
        .collect();
    let h = Poly::new(
        field,
        monic_int.iter().map(|c| field.from_bigint(c)).collect(),
    );

    if SIEVE_PRIMES.iter().any(|&q| !has_root_mod(&monic_int, q)) {
        return roots;
    }
    let bound = fujiwara_bound(&monic_int);
    let chain: Vec<Vec<BigInt>> = sturm_chain(&h).iter().map(integer_multiple).collect();
    let variations = |y: &BigInt| sign_variations(&chain, y);
    let lo = -bound.clone();
    let hi = bound;
    let (v_lo, v_hi) = (variations(&(&lo - 1)), variations(&hi));
    let mut int_roots = Vec::new();
    isolate_integer_roots(&monic_int, &variations, lo, hi, v_lo, v_hi, &mut int_roots);
    let lead = FieldElement::Rational(BigRational::from_integer(lead));
    roots.extend(int_roots.into_iter().map(|y| &field.from_bigint(&y) / &lead));
    roots
}

fn sturm_chain(f: &Poly) -> Vec<Poly> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let len = chain.len();
        let (_, r) = chain[len - 2].div_rem(&chain[len - 1]);
        if r.is_zero() {
            return chain;
        }
        chain.push(r.scale(&Field::Rationals.from_i64(-1)));
    }
}

/// A positive integer multiple of `f`, which has the same signs everywhere.
fn integer_multiple(f: &Poly) -> Vec<BigInt> {
    let rationals: Vec<BigRational> = f.coeffs.iter().map(|c| c.as_rational().expect("rational coefficient").clone()).collect();
    let lcm = rationals.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    rationals.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect()
}

/// Sign changes along the chain at `y + 1/2`. Each member is evaluated as
/// `2^d f((2y+1)/2)`, which keeps the arithmetic in the integers.
fn sign_variations(chain: &[Vec<BigInt>], y: &BigInt) -> usize {
    let x: BigInt = y * 2 + 1;
    let signs: Vec<bool> = chain
        .iter()
        .map(|c| {
            let mut pow2 = BigInt::one();
            let mut acc = BigInt::zero();
            for (k, ci) in c.iter().rev().enumerate() {
                if k > 0 {
                    pow2 <<= 1;
                }
                acc = acc * &x + ci * &pow2;
            }
            acc
        })
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Fujiwara's bound on the absolute value of the roots of a monic polynomial,
/// rounded up to an integer.
fn fujiwara_bound(monic: &[BigInt]) -> BigInt {
    let n = monic.len() - 1;
    let term = |i: usize| {
        let c = if i == 0 { monic[0].abs() / 2 + 1 } else { monic[i].abs() };
        c.nth_root((n - i) as u32) + 1
    };
    (0..n).map(term).max().unwrap_or_default() * 2
}

const SIEVE_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Whether the integer polynomial has a root modulo `q`. Integer roots survive
/// reduction, so `false` rules them out entirely.
fn has_root_mod(coeffs: &[BigInt], q: u64) -> bool {
    let qb = BigInt::from(q);
    let reduced: Vec<u64> = coeffs.iter().map(|c| c.mod_floor(&qb).try_into().expect("below q")).collect();
    (0..q).any(|r| reduced.iter().rev().fold(0, |acc, &c| (acc * r + c) % q) == 0)
}

fn eval_int(coeffs: &[BigInt], y: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * y + c)
}

/// Searches the integers in `[lo, hi]`; the Sturm counts are taken at the
/// half-integers `lo - 1/2` and `hi + 1/2`, which are never integer roots.
/// Once a single root is isolated the search continues on the sign of `h`.
fn isolate_integer_roots(
    h: &[BigInt],
    variations: &dyn Fn(&BigInt) -> usize,
    lo: BigInt,
    hi: BigInt,
    v_lo: usize,
    v_hi: usize,
    out: &mut Vec<BigInt>,
) {
    if v_lo <= v_hi {
        return;
    }
    if v_lo - v_hi == 1 {
        out.extend(single_integer_root(h, lo, hi));
        return;
    }
    let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
    let v_mid = variations(&mid);
    isolate_integer_roots(h, variations, lo, mid.clone(), v_lo, v_mid, out);
    isolate_integer_roots(h, variations, mid + 1, hi, v_mid, v_hi, out);
}

/// The integer root in `[lo, hi]` of a square-free `h` with exactly one real
/// root in `(lo - 1/2, hi + 1/2)`, if that root is an integer.
fn single_integer_root(h: &[BigInt], mut lo: BigInt, mut hi: BigInt) -> Option<BigInt> {
    let (f_lo, f_hi) = (eval_int(h, &lo), eval_int(h, &hi));
    if f_lo.is_zero() {
        return Some(lo);
    }
    if f_hi.is_zero() {
        return Some(hi);
    }
    let s_lo = f_lo.is_positive();
    if s_lo == f_hi.is_positive() {
        return None;
    }
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        let f = eval_int(h, &mid);
        if f.is_zero() {
            return Some(mid);
        }
        if f.is_positive() == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    None
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(self.field, (0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(self.field, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_roots(field: Field, roots: &[FieldElement]) -> Poly {
        roots.iter().fold(Poly::constant(field.one()), |acc, r| &acc * &Poly::linear(r))
    }

    fn q(n: i64, d: i64) -> FieldElement {
        Field::Rationals.ratio(n, d).unwrap()
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        let roots = [q(1, 2), q(1, 2), q(-3, 7), q(0, 1)];
        let f = from_roots(Field::Rationals, &roots).scale(&q(-5, 3));
        assert_eq!(f.roots(), vec![(q(-3, 7), 1), (q(0, 1), 1), (q(1, 2), 2)]);
    }

    #[test]
    fn irreducible_quadratic_has_no_rational_roots() {
        // x^2 - 2 and x^2 + 1
        let f = Poly::new(Field::Rationals, vec![q(-2, 1), q(0, 1), q(1, 1)]);
        assert!(f.roots().is_empty());
        let g = Poly::new(Field::Rationals, vec![q(1, 1), q(0, 1), q(1, 1)]);
        assert!(g.roots().is_empty());
        // (x^2 - 2)(x - 5/4): only the rational root survives
        let h = &f * &Poly::linear(&q(5, 4));
        assert_eq!(h.roots(), vec![(q(5, 4), 1)]);
    }

    #[test]
    fn large_rational_roots() {
        let big = q(123_456_789, 1024);
        let close = q(123_456_790, 1024);
        let f = from_roots(Field::Rationals, &[big.clone(), close.clone(), q(-1, 99_991)]);
        assert_eq!(f.roots(), vec![(q(-1, 99_991), 1), (big, 1), (close, 1)]);
    }

    #[test]
    fn prime_field_roots_trial_and_split() {
        for p in [2u64, 13, 1_000_000_007] {
            let field = Field::prime(p).unwrap();
            let roots = [field.from_i64(1), field.from_i64(-1), field.from_i64(-1)];
            let f = from_roots(field, &roots);
            let got = f.roots();
            let mut expected = vec![(field.from_i64(-1), 2), (field.from_i64(1), 1)];
            if p == 2 {
                expected = vec![(field.from_i64(1), 3)];
            }
            expected.sort();
            assert_eq!(got, expected, "p = {p}");
        }
        // x^2 + 1 has no roots mod 1_000_000_007 (p = 3 mod 4)
        let field = Field::prime(1_000_000_007).unwrap();
        let f = Poly::new(field, vec![field.one(), field.zero(), field.one()]);
        assert!(f.roots().is_empty());
        let g = &f * &from_roots(field, &[field.from_i64(5), field.from_i64(77), field.from_i64(123_456)]);
        let roots: Vec<_> = g.roots().into_iter().map(|(r, _)| r.to_string()).collect();
        assert_eq!(roots, vec!["5", "77", "123456"]);
    }

    #[test]
    fn div_rem_reconstructs() {
        let f = Poly::new(Field::Rationals, vec![q(1, 1), q(2, 3), q(-1, 1), q(4, 1)]);
        let g = Poly::new(Field::Rationals, vec![q(-1, 2), q(1, 1)]);
        let (quot, rem) = f.div_rem(&g);
        assert_eq!(&(&quot * &g) + &rem, f);
        assert!(rem.degree().unwrap_or(0) < 1);
    }
}
