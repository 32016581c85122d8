//! Exact arithmetic in the Laurent polynomial ring `Z[v, v^-1]`.
//!
//! A [`LaurentPoly`] is stored densely between its lowest and highest
//! nonzero exponent. Both ends are always nonzero, so two polynomials are
//! equal exactly when their representations are equal.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    /// `c * v^exp`
    pub fn monomial(exp: i32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: exp, coeffs: vec![c] }
    }

    /// `v^exp`
    pub fn v_pow(exp: i32) -> Self {
        Self::monomial(exp, 1)
    }

    pub fn v() -> Self {
        Self::v_pow(1)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out += &Self::monomial(e, c);
        }
        out
    }

    fn from_raw(low: i32, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn min_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        let idx = exp as i64 - self.low as i64;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// If the polynomial is a single term `c v^e`, returns `(e, c)`.
    pub fn as_monomial(&self) -> Option<(i32, &BigInt)> {
        (self.coeffs.len() == 1).then(|| (self.low, &self.coeffs[0]))
    }

    /// Multiplication by `v^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// The ring involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        match self.max_degree() {
            None => Self::zero(),
            Some(hi) => LaurentPoly { low: -hi, coeffs: self.coeffs.iter().rev().cloned().collect() },
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.bar() == *self
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_nonneg(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// The terms of strictly negative exponent.
    pub fn negative_part(&self) -> Self {
        Self::from_raw(
            self.low,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if self.low + (i as i32) < 0 { c.clone() } else { BigInt::zero() })
                .collect(),
        )
    }

    /// True iff the polynomial lies in `v^-1 Z[v^-1]`.
    pub fn in_vinv_z_vinv(&self) -> bool {
        self.max_degree().is_none_or(|d| d < 0)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Exact division; fails unless `self = q * divisor` for some Laurent polynomial `q`.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::DivisionNotExact);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (a_lo, a_hi) = (self.low, self.max_degree().unwrap());
        let (b_lo, b_hi) = (divisor.low, divisor.max_degree().unwrap());
        let (q_lo, q_hi) = (a_lo - b_lo, a_hi - b_hi);
        if q_hi < q_lo {
            return Err(Error::DivisionNotExact);
        }
        let lead = &divisor.coeffs[0];
        let mut rem = self.clone();
        let mut q = vec![BigInt::zero(); (q_hi - q_lo + 1) as usize];
        for k in q_lo..=q_hi {
            let c = rem.coeff(k + b_lo);
            if c.is_zero() {
                continue;
            }
            let (quot, r) = c.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::DivisionNotExact);
            }
            rem -= &divisor.scale(&quot).shift(k);
            q[(k - q_lo) as usize] = quot;
        }
        if !rem.is_zero() {
            return Err(Error::DivisionNotExact);
        }
        Ok(Self::from_raw(q_lo, q))
    }

    /// Quantum integer `[k] = (v^k - v^-k) / (v - v^-1)`.
    pub fn quantum_int(k: i64) -> Self {
        let k32 = k as i32;
        let sign = if k < 0 { -1 } else { 1 };
        let m = k32.abs();
        let mut out = Self::zero();
        for j in 0..m {
            out += &Self::monomial(m - 1 - 2 * j, sign);
        }
        out
    }

    /// Gaussian binomial `[c; a] = prod_{s=1}^{a} (v^{c-s+1} - v^{-c+s-1}) / (v^s - v^-s)`.
    pub fn gauss_binom(c: i64, a: u32) -> Self {
        let mut num = Self::one();
        let mut den = Self::one();
        for s in 1..=a as i64 {
            let e = (c - s + 1) as i32;
            num = &num * &(Self::v_pow(e) - Self::v_pow(-e));
            den = &den * &(Self::v_pow(s as i32) - Self::v_pow(-(s as i32)));
        }
        num.exact_div(&den).expect("Gaussian binomials are Laurent polynomials")
    }

    pub fn to_pairs(&self) -> Vec<(i32, BigInt)> {
        self.terms().map(|(e, c)| (e, c.clone())).collect()
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let lo = self.low.min(rhs.low);
        let hi = self.max_degree().unwrap().max(rhs.max_degree().unwrap());
        if lo < self.low {
            let pad = (self.low - lo) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = lo;
        }
        let len = (hi - lo + 1) as usize;
        self.coeffs.resize(len, BigInt::zero());
        let off = (rhs.low - lo) as usize;
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[off + i] += c;
        }
        self.trim();
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self += &(-rhs);
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_raw(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coeff_shown = !(abs.is_one() && e != 0);
            if coeff_shown {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "v")?,
                _ => write!(f, "v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

fn coeff_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(x) => serde_json::Value::from(x),
        None => serde_json::Value::from(c.to_string()),
    }
}

/// Serialized as `[[exponent, coefficient], ...]` sorted by exponent.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.num_terms()))?;
        for (e, c) in self.terms() {
            seq.serialize_element(&(e, coeff_to_json(c)))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(i32, serde_json::Value)> = Vec::deserialize(deserializer)?;
        let mut out = LaurentPoly::zero();
        for (e, c) in pairs {
            let c: BigInt = match c {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| de::Error::custom("coefficient is not an integer"))?,
                serde_json::Value::String(s) => s.parse().map_err(de::Error::custom)?,
                _ => return Err(de::Error::custom("coefficient must be an integer")),
            };
            out += &LaurentPoly::monomial(e, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: i32) -> LaurentPoly {
        LaurentPoly::v_pow(e)
    }

    #[test]
    fn ring_examples() {
        let one = LaurentPoly::one();
        assert_eq!(&(&v(1) + &one) * &(&v(1) - &one), &v(2) - &one);
        assert_eq!((&v(2) - &one).exact_div(&(&v(1) - &one)).unwrap(), &v(1) + &one);
        assert_eq!((&v(2) + &one).exact_div(&(&v(1) + &one)), Err(Error::DivisionNotExact));
    }

    #[test]
    fn bar_examples() {
        let one = LaurentPoly::one();
        assert_eq!((&v(2) + &one).bar(), &v(-2) + &one);
        assert_eq!(LaurentPoly::constant(3).bar(), LaurentPoly::constant(3));
        let p = &v(3) - &v(1);
        assert_eq!(p.bar().bar(), p);
    }

    #[test]
    fn gauss_binom_examples() {
        assert_eq!(LaurentPoly::gauss_binom(2, 1), &v(1) + &v(-1));
        assert_eq!(LaurentPoly::gauss_binom(5, 0), LaurentPoly::one());
        assert_eq!(LaurentPoly::gauss_binom(-1, 1), LaurentPoly::constant(-1));
    }

    #[test]
    fn nonneg_examples() {
        assert!((&v(1) + &v(-1)).is_nonneg());
        assert!(!(&v(1) - &LaurentPoly::one()).is_nonneg());
        assert!(LaurentPoly::zero().is_nonneg());
    }

    #[test]
    fn gauss_binom_bar_invariant_and_pascal() {
        for c in -8..=8i64 {
            for a in 0..=8u32 {
                assert!(LaurentPoly::gauss_binom(c, a).is_bar_invariant(), "c={c} a={a}");
            }
        }
        for c in 1..=8i64 {
            for a in 1..=c as u32 {
                let lhs = LaurentPoly::gauss_binom(c, a);
                let rhs = &LaurentPoly::gauss_binom(c - 1, a).shift(a as i32)
                    + &LaurentPoly::gauss_binom(c - 1, a - 1).shift(-(c as i32 - a as i32));
                assert_eq!(lhs, rhs, "c={c} a={a}");
            }
        }
    }

    #[test]
    fn quantum_int_matches_binomial() {
        for k in -5..=5 {
            assert_eq!(LaurentPoly::quantum_int(k), LaurentPoly::gauss_binom(k, 1));
        }
    }

    #[test]
    fn canonical_form_after_cancellation() {
        let p = &(&v(3) + &v(-2)) - &v(3);
        assert_eq!(p, v(-2));
        assert_eq!(p.min_degree(), Some(-2));
        assert_eq!(p.max_degree(), Some(-2));
        let z = &p - &v(-2);
        assert!(z.is_zero());
        assert_eq!(z, LaurentPoly::zero());
    }

    #[test]
    fn json_round_trip() {
        let p = LaurentPoly::from_terms([(-1, 2i64), (3, -5)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[[-1,2],[3,-5]]");
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn display() {
        let p = LaurentPoly::from_terms([(-1, 1i64), (0, -1), (2, 3)]);
        assert_eq!(p.to_string(), "3v^2 - 1 + v^-1");
    }

    fn arb_poly() -> impl proptest::strategy::Strategy<Value = LaurentPoly> {
        use proptest::prelude::*;
        proptest::collection::vec((-6i32..=6, -20i64..=20), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(1000))]
        #[test]
        fn bar_is_an_involution(p in arb_poly()) {
            proptest::prop_assert_eq!(p.bar().bar(), p);
        }

        #[test]
        fn bar_is_a_ring_map(p in arb_poly(), q in arb_poly()) {
            proptest::prop_assert_eq!((&p * &q).bar(), &p.bar() * &q.bar());
            proptest::prop_assert_eq!((&p + &q).bar(), &p.bar() + &q.bar());
        }

        #[test]
        fn exact_div_inverts_mul(p in arb_poly(), q in arb_poly()) {
            if !q.is_zero() {
                proptest::prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
            }
        }
    }
}
