//! Exact scalars: arbitrary-precision rationals and the radical ring
//! `ℚ[√d : d squarefree]`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Default trial-division bound used when extracting square factors.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// Starting precision (fractional bits) for interval sign determination.
pub const SIGN_START_BITS: u64 = 64;
/// Number of precision doublings before sign determination gives up.
pub const SIGN_MAX_ROUNDS: u32 = 16;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let parse_int = |s: &str| -> Result<BigInt> {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(alloc::format!("bad integer {s:?}")))
    };
    match text.split_once('/') {
        Some((p, q)) => {
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::Parse(alloc::format!("zero denominator in {text:?}")));
            }
            Ok(Rational::new(parse_int(p)?, q))
        }
        None => Ok(Rational::from_integer(parse_int(text)?)),
    }
}

/// Exact square root when `r` is the square of a rational.
pub fn rational_sqrt_exact(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().magnitude();
    let d = r.denom().magnitude();
    let sn = n.sqrt();
    let sd = d.sqrt();
    if &sn * &sn == *n && &sd * &sd == *d {
        Some(Rational::new(BigInt::from(sn), BigInt::from(sd)))
    } else {
        None
    }
}

/// Splits `m = outer² · core` with `core` squarefree.
///
/// Trial division runs up to `bound`. A residual factor that is neither
/// certified prime nor a perfect square is kept in `core` and assumed
/// squarefree; a warning is logged in that case.
pub fn squarefree_split(m: &BigUint, bound: u64) -> (BigUint, BigUint) {
    if m.is_zero() {
        return (BigUint::zero(), BigUint::one());
    }
    let root = m.sqrt();
    if &root * &root == *m {
        return (root, BigUint::one());
    }
    let mut rem = m.clone();
    let mut outer = BigUint::one();
    let mut core = BigUint::one();
    let mut p: u64 = 2;
    let mut certified = false;
    while p <= bound {
        let pp = BigUint::from(p) * p;
        if pp > rem {
            certified = true;
            break;
        }
        if (&rem % p).is_zero() {
            let mut e = 0u32;
            while (&rem % p).is_zero() {
                rem /= p;
                e += 1;
            }
            outer *= BigUint::from(p).pow(e / 2);
            if e % 2 == 1 {
                core *= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !rem.is_one() {
        let r = rem.sqrt();
        if &r * &r == rem {
            outer *= r;
        } else {
            if !certified && BigUint::from(p) * p <= rem {
                log::warn!(
                    "residual factor {rem} exceeds the trial-division bound {bound}; assuming squarefree"
                );
            }
            core *= rem;
        }
    }
    (outer, core)
}

/// Exact real number `Σ q_d √d` over squarefree `d`.
///
/// The map from `d` to `q_d` never stores zero coefficients, so the
/// representation is canonical and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RadicalScalar {
    terms: BTreeMap<BigUint, Rational>,
}

impl RadicalScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(BigUint::one(), q);
        }
        Self { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// `q·√d` for a squarefree `d`; the caller vouches for squarefreeness.
    pub fn from_term(q: Rational, d: BigUint) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() && !d.is_zero() {
            terms.insert(d, q);
        }
        Self { terms }
    }

    /// Builds a value from arbitrary `(q, m)` pairs meaning `Σ q √m`,
    /// extracting square factors from every `m`.
    pub fn from_pairs<I: IntoIterator<Item = (Rational, BigUint)>>(pairs: I) -> Self {
        let mut out = Self::zero();
        for (q, m) in pairs {
            let (outer, core) = squarefree_split(&m, DEFAULT_FACTOR_BOUND);
            out.add_term(q * Rational::from_integer(BigInt::from(outer)), core);
        }
        out
    }

    /// `√r` in canonical form: `√(p/q) = (1/q)·√(pq)`.
    pub fn sqrt(r: &Rational) -> Result<Self> {
        Self::sqrt_with_bound(r, DEFAULT_FACTOR_BOUND)
    }

    pub fn sqrt_with_bound(r: &Rational, bound: u64) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::NegativeSqrt);
        }
        if r.is_zero() {
            return Ok(Self::zero());
        }
        let pq = r.numer().magnitude() * r.denom().magnitude();
        let (outer, core) = squarefree_split(&pq, bound);
        let coeff = Rational::new(BigInt::from(outer), r.denom().clone());
        Ok(Self::from_term(coeff, core))
    }

    fn add_term(&mut self, q: Rational, d: BigUint) {
        if q.is_zero() {
            return;
        }
        let slot = self.terms.entry(d).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|d| d.is_one())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(d, c)| (d.clone(), c * q)).collect(),
        }
    }

    /// Rational enclosure `[lo, hi]` of the value using `bits` fractional bits
    /// for every irrational square root.
    pub fn enclosure(&self, bits: u64) -> (Rational, Rational) {
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        let denom = BigInt::one() << bits;
        for (d, q) in &self.terms {
            if d.is_one() {
                lo += q;
                hi += q;
                continue;
            }
            let s = BigInt::from((d << (2 * bits)).sqrt());
            let a = Rational::new(s.clone(), denom.clone());
            let b = Rational::new(s + 1, denom.clone());
            if q.is_positive() {
                lo += q * a;
                hi += q * b;
            } else {
                lo += q * b;
                hi += q * a;
            }
        }
        (lo, hi)
    }

    /// Exact sign, or an error if the refinement cap is reached.
    pub fn try_sign(&self) -> Result<i8> {
        if self.is_zero() {
            return Ok(0);
        }
        if let Some(q) = self.to_rational() {
            return Ok(if q.is_positive() { 1 } else { -1 });
        }
        let mut bits = SIGN_START_BITS;
        for _ in 0..SIGN_MAX_ROUNDS {
            let (lo, hi) = self.enclosure(bits);
            if lo.is_positive() {
                return Ok(1);
            }
            if hi.is_negative() {
                return Ok(-1);
            }
            bits *= 2;
        }
        Err(Error::PrecisionExhausted)
    }

    /// Exact sign in `{-1, 0, 1}`.
    ///
    /// Panics only if interval refinement is exhausted, which cannot happen
    /// for a structurally nonzero value unless the squarefree assumption on a
    /// residual factor was wrong.
    pub fn sign(&self) -> i8 {
        self.try_sign().expect("radical sign refinement exhausted")
    }

    pub fn is_positive(&self) -> bool {
        self.sign() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.sign() < 0
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        if let Some(q) = self.to_rational() {
            return q.to_f64().unwrap_or(f64::NAN);
        }
        let (lo, hi) = self.enclosure(80);
        ((lo + hi) / int(2)).to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering with `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let value = match self.to_rational() {
            Some(q) => q,
            None => {
                let bits = 4 * digits as u64 + 64;
                let (lo, hi) = self.enclosure(bits);
                (lo + hi) / int(2)
            }
        };
        rational_to_decimal(&value, digits)
    }

    /// Parses the exact rendering produced by `Display`, e.g.
    /// `"1/2+3*sqrt(2)-sqrt(6)"`.
    pub fn parse(text: &str) -> Result<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty radical".into()));
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut depth = 0i32;
        for (i, ch) in text.chars().enumerate() {
            match ch {
                '(' => {
                    depth += 1;
                    current.push(ch);
                }
                ')' => {
                    depth -= 1;
                    current.push(ch);
                }
                '+' | '-' if depth == 0 => {
                    if i > 0 && !current.is_empty() {
                        pieces.push((negative, core::mem::take(&mut current)));
                    } else if i > 0 {
                        return Err(Error::Parse(alloc::format!("dangling sign in {text:?}")));
                    }
                    negative = ch == '-';
                }
                _ => current.push(ch),
            }
        }
        if current.is_empty() {
            return Err(Error::Parse(alloc::format!("trailing sign in {text:?}")));
        }
        pieces.push((negative, current));
        let mut out = Self::zero();
        for (neg, piece) in pieces {
            let (coeff, radicand) = match piece.find("sqrt(") {
                Some(pos) => {
                    let head = &piece[..pos];
                    let inner = piece[pos + 5..]
                        .strip_suffix(')')
                        .ok_or_else(|| Error::Parse(alloc::format!("bad radical {piece:?}")))?;
                    let d = inner
                        .parse::<BigUint>()
                        .map_err(|_| Error::Parse(alloc::format!("bad radicand {inner:?}")))?;
                    let coeff = match head.strip_suffix('*') {
                        Some(c) => parse_rational(c)?,
                        None if head.is_empty() => Rational::one(),
                        None => return Err(Error::Parse(alloc::format!("bad term {piece:?}"))),
                    };
                    (coeff, d)
                }
                None => (parse_rational(&piece)?, BigUint::one()),
            };
            let coeff = if neg { -coeff } else { coeff };
            out += Self::from_pairs([(coeff, radicand)]);
        }
        Ok(out)
    }
}

/// Renders `q` with exactly `digits` fractional digits, rounding half away from zero.
pub fn rational_to_decimal(q: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = q.abs() * Rational::from_integer(scale.clone());
    let rounded = (scaled + rat(1, 2)).floor().to_integer();
    let (whole, frac) = rounded.div_rem(&scale);
    let mut out = String::new();
    if q.is_negative() && !rounded.is_zero() {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if digits > 0 {
        out.push('.');
        let frac = frac.to_string();
        for _ in frac.len()..digits {
            out.push('0');
        }
        out.push_str(&frac);
    }
    out
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, q)) in self.terms.iter().enumerate() {
            let sign = if q.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            let mag = q.abs();
            if d.is_one() {
                write!(f, "{sign}{mag}")?;
            } else {
                write!(f, "{sign}{mag}*sqrt({d})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RadicalScalar({self})")
    }
}

impl From<Rational> for RadicalScalar {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl PartialOrd for RadicalScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RadicalScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl Neg for &RadicalScalar {
    type Output = RadicalScalar;
    fn neg(self) -> RadicalScalar {
        RadicalScalar {
            terms: self.terms.iter().map(|(d, q)| (d.clone(), -q)).collect(),
        }
    }
}

impl Neg for RadicalScalar {
    type Output = RadicalScalar;
    fn neg(mut self) -> RadicalScalar {
        for q in self.terms.values_mut() {
            *q = -core::mem::take(q);
        }
        self
    }
}

impl AddAssign<&RadicalScalar> for RadicalScalar {
    fn add_assign(&mut self, rhs: &RadicalScalar) {
        for (d, q) in &rhs.terms {
            let slot = self.terms.entry(d.clone()).or_insert_with(Rational::zero);
            *slot += q;
        }
        self.terms.retain(|_, v| !v.is_zero());
    }
}

impl AddAssign for RadicalScalar {
    fn add_assign(&mut self, rhs: RadicalScalar) {
        *self += &rhs;
    }
}

impl SubAssign<&RadicalScalar> for RadicalScalar {
    fn sub_assign(&mut self, rhs: &RadicalScalar) {
        for (d, q) in &rhs.terms {
            let slot = self.terms.entry(d.clone()).or_insert_with(Rational::zero);
            *slot -= q;
        }
        self.terms.retain(|_, v| !v.is_zero());
    }
}

impl Add for &RadicalScalar {
    type Output = RadicalScalar;
    fn add(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RadicalScalar {
    type Output = RadicalScalar;
    fn add(mut self, rhs: RadicalScalar) -> RadicalScalar {
        self += &rhs;
        self
    }
}

impl Sub for &RadicalScalar {
    type Output = RadicalScalar;
    fn sub(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for RadicalScalar {
    type Output = RadicalScalar;
    fn sub(mut self, rhs: RadicalScalar) -> RadicalScalar {
        self -= &rhs;
        self
    }
}

impl Mul for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        let mut terms: BTreeMap<BigUint, Rational> = BTreeMap::new();
        for (d1, q1) in &self.terms {
            for (d2, q2) in &rhs.terms {
                let (key, coeff) = if d1.is_one() {
                    (d2.clone(), q1 * q2)
                } else if d2.is_one() {
                    (d1.clone(), q1 * q2)
                } else {
                    let g = d1.gcd(d2);
                    let key = (d1 / &g) * (d2 / &g);
                    let g = Rational::from_integer(BigInt::from_biguint(Sign::Plus, g));
                    (key, q1 * q2 * g)
                };
                let slot = terms.entry(key).or_insert_with(Rational::zero);
                *slot += coeff;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        RadicalScalar { terms }
    }
}

impl Mul for RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: RadicalScalar) -> RadicalScalar {
        &self * &rhs
    }
}

impl Mul<&Rational> for &RadicalScalar {
    type Output = RadicalScalar;
    fn mul(self, rhs: &Rational) -> RadicalScalar {
        self.scale(rhs)
    }
}

impl Zero for RadicalScalar {
    fn zero() -> Self {
        RadicalScalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for RadicalScalar {
    fn one() -> Self {
        RadicalScalar::one()
    }
}

impl core::iter::Sum for RadicalScalar {
    fn sum<I: Iterator<Item = RadicalScalar>>(iter: I) -> Self {
        let mut out = RadicalScalar::zero();
        for x in iter {
            out += &x;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(s: &str) -> RadicalScalar {
        RadicalScalar::parse(s).unwrap()
    }

    #[test]
    fn sqrt_extracts_square_parts() {
        assert_eq!(RadicalScalar::sqrt(&int(8)).unwrap(), r("2*sqrt(2)"));
        assert_eq!(RadicalScalar::sqrt(&rat(1, 2)).unwrap(), r("1/2*sqrt(2)"));
        assert!(RadicalScalar::sqrt(&int(0)).unwrap().is_zero());
        assert_eq!(RadicalScalar::sqrt(&rat(9, 4)).unwrap(), RadicalScalar::from_rational(rat(3, 2)));
        assert_eq!(RadicalScalar::sqrt(&int(-1)), Err(Error::NegativeSqrt));
    }

    #[test]
    fn products_renormalize_radicands() {
        let s2 = RadicalScalar::sqrt(&int(2)).unwrap();
        let s3 = RadicalScalar::sqrt(&int(3)).unwrap();
        assert_eq!(&s2 * &s2, RadicalScalar::from_int(2));
        assert_eq!(&s2 * &s3, RadicalScalar::sqrt(&int(6)).unwrap());
        let a = &RadicalScalar::one() + &s2;
        let b = &RadicalScalar::one() - &s2;
        assert_eq!(&a * &b, RadicalScalar::from_int(-1));
        let s6 = RadicalScalar::sqrt(&int(6)).unwrap();
        assert_eq!(&s6 * &s2, r("2*sqrt(3)"));
    }

    #[test]
    fn signs() {
        assert_eq!(r("-1+sqrt(2)").sign(), 1);
        assert_eq!(RadicalScalar::zero().sign(), 0);
        // 7 - 5√2: 49 < 50, so negative.
        assert_eq!(r("7-5*sqrt(2)").sign(), -1);
        // 99/70 is a very good convergent of √2.
        assert_eq!(r("99/70-sqrt(2)").sign(), 1);
        assert_eq!(r("sqrt(2)+sqrt(3)-sqrt(10)").sign(), -1);
    }

    #[test]
    fn squarefree_split_handles_large_residuals() {
        let m = BigUint::from(2u32 * 2 * 3 * 5 * 5 * 7);
        let (outer, core) = squarefree_split(&m, DEFAULT_FACTOR_BOUND);
        assert_eq!(outer, BigUint::from(10u32));
        assert_eq!(core, BigUint::from(21u32));
        // residual is the square of a prime beyond the bound
        let p = BigUint::from(1_000_003u64);
        let m = &p * &p * 3u32;
        let (outer, core) = squarefree_split(&m, 1000);
        assert_eq!(outer, p);
        assert_eq!(core, BigUint::from(3u32));
    }

    #[test]
    fn display_and_decimal() {
        let x = r("1/2-3*sqrt(2)+sqrt(6)");
        assert_eq!(x.to_string(), "1/2-3*sqrt(2)+1*sqrt(6)");
        assert_eq!(RadicalScalar::parse(&x.to_string()).unwrap(), x);
        assert_eq!(RadicalScalar::sqrt(&int(2)).unwrap().to_decimal(10), "1.4142135624");
        assert_eq!(RadicalScalar::from_rational(rat(-1, 3)).to_decimal(3), "-0.333");
        assert_eq!(RadicalScalar::zero().to_string(), "0");
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| rat(n, d))
    }

    fn radical() -> impl Strategy<Value = RadicalScalar> {
        prop::collection::vec((small_rational(), 1u32..=30), 0..4).prop_map(|pairs| {
            RadicalScalar::from_pairs(pairs.into_iter().map(|(q, m)| (q, BigUint::from(m))))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in radical(), b in radical(), c in radical()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn sign_is_multiplicative(a in radical(), b in radical()) {
            prop_assert_eq!(a.sign() * b.sign(), (&a * &b).sign());
        }

        #[test]
        fn sqrt_squares_back(n in 0i64..500, d in 1i64..50) {
            let q = rat(n, d);
            let s = RadicalScalar::sqrt(&q).unwrap();
            prop_assert_eq!(&s * &s, RadicalScalar::from_rational(q));
        }

        #[test]
        fn canonical_form_is_idempotent(a in radical()) {
            let again = RadicalScalar::from_pairs(a.terms().map(|(d, q)| (q.clone(), d.clone())));
            prop_assert_eq!(again, a.clone());
            prop_assert_eq!(RadicalScalar::parse(&a.to_string()).unwrap(), a);
        }

        #[test]
        fn float_agrees_with_sign(a in radical()) {
            let f = a.to_f64();
            match a.sign() {
                1 => prop_assert!(f > -1e-12),
                -1 => prop_assert!(f < 1e-12),
                _ => prop_assert!(f == 0.0),
            }
        }
    }
}
