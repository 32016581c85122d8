//! The extended affine Hecke algebra `H_Delta(r)` in the basis `{T_w}`.
//!
//! Multiplication runs through reduced words of the right factor. The Bernstein
//! elements `X_j` come from `T_rho = X_1^{-1} T~_1^{-1} ... T~_{r-1}^{-1}` and
//! `X_{j+1} = T~_j X_j T~_j`, where `T~_i = v^{-1} T_i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::afcomb::{enumerate_double_coset, is_min_left, is_min_right, AffinePerm, Composition};
use crate::error::{Error, Result};
use crate::ring::LaurentPoly;

/// Supports larger than this abort multiplication with `ResourceBound`.
pub const DEFAULT_SUPPORT_CAP: usize = 2_000_000;

/// One generator letter of a word acting on the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    /// `T_{s_i}`, `0 <= i < r`.
    T(usize),
    /// `T_{s_i}^{-1}`.
    TInv(usize),
    /// `T_rho^m`.
    Rho(i64),
    /// `X_t^e`, `1 <= t <= r`.
    X(usize, i64),
}

/// A scalar `v^e` followed by letters applied left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub v_exp: i32,
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn new(v_exp: i32, letters: Vec<Letter>) -> Self {
        Word { v_exp, letters }
    }

    pub fn then(mut self, other: &Word) -> Word {
        self.v_exp += other.v_exp;
        self.letters.extend_from_slice(&other.letters);
        self
    }
}

/// `T_w` as a word: `rho^k s_{j_1} ... s_{j_l}`.
pub fn word_of(w: &AffinePerm) -> Word {
    let (k, js) = w.reduced_word();
    let mut letters = Vec::with_capacity(js.len() + 1);
    if k != 0 {
        letters.push(Letter::Rho(k));
    }
    letters.extend(js.into_iter().map(Letter::T));
    Word::new(0, letters)
}

/// `bar(T_w) = T_{w^{-1}}^{-1} = T_rho^k T_{s_{j_1}}^{-1} ... T_{s_{j_l}}^{-1}`.
pub fn bar_word_of(w: &AffinePerm) -> Word {
    let (k, js) = w.reduced_word();
    let mut letters = Vec::with_capacity(js.len() + 1);
    if k != 0 {
        letters.push(Letter::Rho(k));
    }
    letters.extend(js.into_iter().map(Letter::TInv));
    Word::new(0, letters)
}

/// `X_t^{e}` for `e = +1` or `-1`, in terms of `T`, `T^{-1}` and `T_rho` letters.
pub fn x_word(r: usize, t: usize, e: i64) -> Word {
    assert!(1 <= t && t <= r && e.abs() == 1);
    let t_idx = t as i32;
    let r_idx = r as i32;
    let mut letters = Vec::new();
    if e < 0 {
        // T~_{t-1}^{-1} ... T~_1^{-1} . T_rho T~_{r-1} ... T~_1 . T~_1^{-1} ... T~_{t-1}^{-1}
        letters.extend((1..t).rev().map(Letter::TInv));
        letters.push(Letter::Rho(1));
        letters.extend((1..r).rev().map(Letter::T));
        letters.extend((1..t).map(Letter::TInv));
        Word::new(2 * (t_idx - 1) - (r_idx - 1), letters)
    } else {
        // T~_{t-1} ... T~_1 . T~_1^{-1} ... T~_{r-1}^{-1} T_rho^{-1} . T~_1 ... T~_{t-1}
        letters.extend((1..t).rev().map(Letter::T));
        letters.extend((1..r).map(Letter::TInv));
        letters.push(Letter::Rho(-1));
        letters.extend((1..t).map(Letter::T));
        Word::new(-2 * (t_idx - 1) + (r_idx - 1), letters)
    }
}

/// A right module over `H_Delta(r)` on which letters act.
pub trait RightModule: Clone {
    fn zero_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn scaled(&self, c: &LaurentPoly) -> Self;
    fn add_assign_ref(&mut self, other: &Self);
    fn act_letter(&self, letter: Letter) -> Self;

    fn act_word(&self, word: &Word) -> Self {
        let mut cur = self.clone();
        for &l in &word.letters {
            if cur.is_zero() {
                return cur;
            }
            cur = cur.act_letter(l);
        }
        if word.v_exp != 0 {
            cur = cur.scaled(&LaurentPoly::v_pow(word.v_exp));
        }
        cur
    }

    fn act_hecke(&self, h: &HeckeElement) -> Self {
        let mut out = self.zero_like();
        for (w, c) in h.terms() {
            out.add_assign_ref(&self.act_word(&word_of(w)).scaled(c));
        }
        out
    }
}

/// A finite `Z[v, v^-1]`-combination of basis elements `T_w`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HeckeElement {
    r: usize,
    terms: BTreeMap<AffinePerm, LaurentPoly>,
}

impl HeckeElement {
    pub fn zero(r: usize) -> Self {
        HeckeElement { r, terms: BTreeMap::new() }
    }

    pub fn one(r: usize) -> Self {
        Self::t(&AffinePerm::identity(r))
    }

    pub fn t(w: &AffinePerm) -> Self {
        Self::monomial(w, LaurentPoly::one())
    }

    pub fn monomial(w: &AffinePerm, c: LaurentPoly) -> Self {
        let mut out = Self::zero(w.period());
        out.add_term(w.clone(), &c);
        out
    }

    /// `T_{s_i}`.
    pub fn t_simple(r: usize, i: usize) -> Self {
        Self::t(&AffinePerm::simple(r, i))
    }

    /// `T~_i = v^{-1} T_i`.
    pub fn t_tilde(r: usize, i: usize) -> Self {
        Self::monomial(&AffinePerm::simple(r, i), LaurentPoly::v_pow(-1))
    }

    /// `T~_i^{-1} = v T_i^{-1}`.
    pub fn t_tilde_inv(r: usize, i: usize) -> Self {
        Self::one(r).act_letter(Letter::TInv(i)).scaled(&LaurentPoly::v())
    }

    pub fn t_rho(r: usize, m: i64) -> Self {
        Self::t(&AffinePerm::rho_pow(r, m))
    }

    pub fn period(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&AffinePerm, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &AffinePerm) -> LaurentPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, w: AffinePerm, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement> {
        if self.r != other.r {
            return Err(Error::PeriodMismatch(self.r, other.r));
        }
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn sub(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.add(&other.scaled(&LaurentPoly::constant(-1)))
    }

    /// `T_w T_{s_i}`.
    fn mul_simple(&self, i: usize) -> HeckeElement {
        let q = LaurentPoly::v_pow(2);
        let q1 = &q - &LaurentPoly::one();
        let mut out = Self::zero(self.r);
        for (w, c) in &self.terms {
            let ws = w.mul_simple(i);
            if w.has_right_descent(i) {
                out.add_term(w.clone(), &(&q1 * c));
                out.add_term(ws, &(&q * c));
            } else {
                out.add_term(ws, c);
            }
        }
        out
    }

    /// `T_w T_{s_i}^{-1}` with `T_s^{-1} = v^-2 T_s + (v^-2 - 1)`.
    fn mul_simple_inv(&self, i: usize) -> HeckeElement {
        let qi = LaurentPoly::v_pow(-2);
        let qi1 = &qi - &LaurentPoly::one();
        let mut out = self.mul_simple(i).scaled(&qi);
        out.add_assign_ref(&self.scaled(&qi1));
        out
    }

    fn mul_rho(&self, m: i64) -> HeckeElement {
        HeckeElement { r: self.r, terms: self.terms.iter().map(|(w, c)| (w.mul_rho(m), c.clone())).collect() }
    }

    /// Product with a support cap.
    pub fn mul_capped(&self, other: &HeckeElement, cap: usize) -> Result<HeckeElement> {
        if self.r != other.r {
            return Err(Error::PeriodMismatch(self.r, other.r));
        }
        let mut out = Self::zero(self.r);
        for (w, c) in &other.terms {
            let mut cur = self.clone();
            for &l in &word_of(w).letters {
                cur = cur.act_letter(l);
                if cur.len() > cap {
                    return Err(Error::ResourceBound { what: "Hecke product", cap });
                }
            }
            out.add_assign_ref(&cur.scaled(c));
            if out.len() > cap {
                return Err(Error::ResourceBound { what: "Hecke product", cap });
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.mul_capped(other, DEFAULT_SUPPORT_CAP)
    }

    /// `T_w^{-1}`.
    pub fn t_inv(w: &AffinePerm) -> HeckeElement {
        let (k, js) = w.reduced_word();
        let mut out = Self::one(w.period());
        for &j in js.iter().rev() {
            out = out.mul_simple_inv(j);
        }
        out.mul_rho(-k)
    }

    /// The ring involution with `bar(v) = v^{-1}`, `bar(T_w) = T_{w^{-1}}^{-1}`.
    pub fn bar(&self) -> HeckeElement {
        let mut out = Self::zero(self.r);
        for (w, c) in &self.terms {
            let img = Self::one(self.r).act_word(&bar_word_of(w));
            out.add_assign_ref(&img.scaled(&c.bar()));
        }
        out
    }

    /// `X_t^{e}` for any integer `e`.
    pub fn x_power(r: usize, t: usize, e: i64) -> HeckeElement {
        if e == 0 {
            return Self::one(r);
        }
        let base = cached_x(r, t, e.signum());
        let mut out = base.clone();
        for _ in 1..e.abs() {
            out = out.mul(&base).expect("equal periods");
        }
        out
    }

    /// `X_1^{e_1} ... X_r^{e_r}`.
    pub fn x_monomial(exps: &[i64]) -> HeckeElement {
        let r = exps.len();
        let mut out = Self::one(r);
        for (t, &e) in exps.iter().enumerate() {
            if e != 0 {
                out = out.mul(&Self::x_power(r, t + 1, e)).expect("equal periods");
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }
}

type XCache = RwLock<HashMap<(usize, usize, i64), HeckeElement>>;

fn x_cache() -> &'static XCache {
    static CACHE: OnceLock<XCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cached_x(r: usize, t: usize, sign: i64) -> HeckeElement {
    if let Some(h) = x_cache().read().expect("cache lock").get(&(r, t, sign)) {
        return h.clone();
    }
    let h = HeckeElement::one(r).act_word(&x_word(r, t, sign));
    x_cache().write().expect("cache lock").entry((r, t, sign)).or_insert(h).clone()
}

impl RightModule for HeckeElement {
    fn zero_like(&self) -> Self {
        Self::zero(self.r)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn scaled(&self, c: &LaurentPoly) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        HeckeElement { r: self.r, terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    fn add_assign_ref(&mut self, other: &Self) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c);
        }
    }

    fn act_letter(&self, letter: Letter) -> Self {
        match letter {
            Letter::T(i) => self.mul_simple(i),
            Letter::TInv(i) => self.mul_simple_inv(i),
            Letter::Rho(m) => self.mul_rho(m),
            Letter::X(t, e) => self.mul(&HeckeElement::x_power(self.r, t, e)).expect("equal periods"),
        }
    }
}

/// The embedding `H(r') (x) H(r'') -> H(r' + r'')`.
pub fn kappa(rp: usize, rpp: usize, hp: &HeckeElement, hpp: &HeckeElement) -> Result<HeckeElement> {
    if hp.period() != rp {
        return Err(Error::PeriodMismatch(rp, hp.period()));
    }
    if hpp.period() != rpp {
        return Err(Error::PeriodMismatch(rpp, hpp.period()));
    }
    let r = rp + rpp;
    let left = kappa_factor(r, 0, hp)?;
    let right = kappa_factor(r, rp, hpp)?;
    left.mul(&right)
}

/// Image of `h` in `H(r)` when its generators are placed at offset `off`.
fn kappa_factor(r: usize, off: usize, h: &HeckeElement) -> Result<HeckeElement> {
    let rk = h.period();
    if rk == 0 {
        // H(0) is the scalar ring.
        return Ok(HeckeElement::one(r).scaled(&h.coeff(&AffinePerm::identity(0))));
    }
    let last = off + rk - 1;
    // T_rho of the factor: X_{off+1}^{-1} T~_{off+1}^{-1} ... T~_{last}^{-1}
    let mut rho = HeckeElement::x_power(r, off + 1, -1);
    for i in off + 1..=last {
        rho = rho.mul(&HeckeElement::t_tilde_inv(r, i))?;
    }
    let mut rho_inv = HeckeElement::one(r);
    for i in (off + 1..=last).rev() {
        rho_inv = rho_inv.mul(&HeckeElement::t_tilde(r, i))?;
    }
    rho_inv = rho_inv.mul(&HeckeElement::x_power(r, off + 1, 1))?;
    let gen = |i: usize| -> Result<HeckeElement> {
        if i == 0 {
            rho.mul(&HeckeElement::t_simple(r, last))?.mul(&rho_inv)
        } else {
            Ok(HeckeElement::t_simple(r, off + i))
        }
    };
    let mut out = HeckeElement::zero(r);
    for (w, c) in h.terms() {
        let (k, js) = w.reduced_word();
        let mut img = HeckeElement::one(r);
        let step = if k >= 0 { &rho } else { &rho_inv };
        for _ in 0..k.abs() {
            img = img.mul(step)?;
        }
        for j in js {
            img = img.mul(&gen(j)?)?;
        }
        out.add_assign_ref(&img.scaled(c));
    }
    Ok(out)
}

/// `sum_{w in S_lambda d S_mu} T_w`.
pub fn double_coset_sum(lambda: &Composition, d: &AffinePerm, mu: &Composition) -> Result<HeckeElement> {
    if !is_min_left(lambda, d) || !is_min_right(d, mu) {
        return Err(Error::NotMinimalRep);
    }
    let mut out = HeckeElement::zero(d.period());
    for w in enumerate_double_coset(lambda, d, mu)? {
        out.add_term(w, &LaurentPoly::one());
    }
    Ok(out)
}

/// Outcome of the `T_rho` identities at one rank.
#[derive(Clone, Debug, Serialize)]
pub struct TrhoCertificate {
    pub r: usize,
    pub pass: bool,
    /// `(k, lhs, rhs)` for `(T~_{k-1} ... T~_1 X_1)^k = X_1 ... X_k`.
    pub inner: Vec<(usize, bool, serde_json::Value, serde_json::Value)>,
    /// `T_rho^r` and `X_1^{-1} ... X_r^{-1}`.
    pub power: (bool, serde_json::Value, serde_json::Value),
}

/// Checks `(T~_{k-1} ... T~_1 X_1)^k = X_1 ... X_k` for `1 <= k <= r` and `T_rho^r = X_1^{-1} ... X_r^{-1}`.
pub fn check_trho(r: usize) -> Result<TrhoCertificate> {
    let mut inner = Vec::new();
    let mut pass = true;
    for k in 1..=r {
        let mut base = HeckeElement::one(r);
        for i in (1..k).rev() {
            base = base.mul(&HeckeElement::t_tilde(r, i))?;
        }
        base = base.mul(&HeckeElement::x_power(r, 1, 1))?;
        let mut lhs = HeckeElement::one(r);
        for _ in 0..k {
            lhs = lhs.mul(&base)?;
        }
        let mut exps = vec![0i64; r];
        exps[..k].iter_mut().for_each(|e| *e = 1);
        let rhs = HeckeElement::x_monomial(&exps);
        let ok = lhs == rhs;
        pass &= ok;
        inner.push((k, ok, lhs.to_json(), rhs.to_json()));
    }
    let lhs = HeckeElement::t_rho(r, r as i64);
    let rhs = HeckeElement::x_monomial(&vec![-1; r]);
    let ok = lhs == rhs;
    pass &= ok;
    Ok(TrhoCertificate { r, pass, inner, power: (ok, lhs.to_json(), rhs.to_json()) })
}

impl Serialize for HeckeElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            seq.serialize_element(&(w.window(), c))?;
        }
        seq.end()
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("({c})T{w}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(e: i32) -> LaurentPoly {
        LaurentPoly::v_pow(e)
    }

    fn p(w: &[i64]) -> AffinePerm {
        AffinePerm::new(w.to_vec()).unwrap()
    }

    fn x(r: usize, t: usize, e: i64) -> HeckeElement {
        HeckeElement::x_power(r, t, e)
    }

    fn m(a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        a.mul(b).unwrap()
    }

    #[test]
    fn mul_examples() {
        let s = HeckeElement::t_simple(2, 1);
        let expect = HeckeElement::monomial(&p(&[2, 1]), &v(2) - &v(0)).add(&HeckeElement::monomial(&p(&[1, 2]), v(2))).unwrap();
        assert_eq!(m(&s, &s), expect);
        let rho = HeckeElement::t_rho(3, 1);
        let lhs = m(&m(&rho, &HeckeElement::t_simple(3, 1)), &HeckeElement::t_rho(3, -1));
        assert_eq!(lhs, HeckeElement::t_simple(3, 2));
        let h = expect.add(&HeckeElement::t_rho(2, 3)).unwrap();
        assert_eq!(m(&HeckeElement::one(2), &h), h);
        assert_eq!(HeckeElement::one(2).mul(&HeckeElement::one(3)), Err(Error::PeriodMismatch(2, 3)));
    }

    #[test]
    fn x_examples() {
        // X_1^{-1} = T_rho T~_1 at r = 2.
        let expect = HeckeElement::monomial(&AffinePerm::rho_pow(2, 1).mul_simple(1), v(-1));
        assert_eq!(x(2, 1, -1), expect);
        assert_eq!(m(&x(3, 1, 1), &x(3, 1, -1)), HeckeElement::one(3));
        for r in 1..=4 {
            assert_eq!(HeckeElement::x_monomial(&vec![1; r]), HeckeElement::t_rho(r, -(r as i64)));
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(HeckeElement::t_inv(&AffinePerm::identity(2)), HeckeElement::one(2));
        let s = p(&[2, 1]);
        let expect = HeckeElement::monomial(&s, v(-2)).add(&HeckeElement::monomial(&AffinePerm::identity(2), &v(-2) - &v(0))).unwrap();
        assert_eq!(HeckeElement::t_inv(&s), expect);
        assert_eq!(HeckeElement::t_inv(&AffinePerm::rho_pow(2, 1)), HeckeElement::t_rho(2, -1));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(HeckeElement::one(2).bar(), HeckeElement::one(2));
        let s = p(&[2, 1]);
        assert_eq!(HeckeElement::t(&s).bar(), HeckeElement::t_inv(&s));
        let rho = AffinePerm::rho_pow(2, 1);
        assert_eq!(HeckeElement::monomial(&rho, v(1)).bar(), HeckeElement::monomial(&rho, v(-1)));
    }

    #[test]
    fn kappa_examples() {
        let xi = |r, t| x(r, t, -1);
        assert_eq!(kappa(1, 1, &xi(1, 1), &HeckeElement::one(1)).unwrap(), xi(2, 1));
        assert_eq!(kappa(1, 1, &HeckeElement::one(1), &xi(1, 1)).unwrap(), xi(2, 2));
        assert_eq!(kappa(2, 1, &HeckeElement::t_simple(2, 1), &HeckeElement::one(1)).unwrap(), HeckeElement::t_simple(3, 1));
    }

    #[test]
    fn kappa_is_multiplicative_on_generators() {
        for (rp, rpp) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let gens = |r: usize| -> Vec<HeckeElement> {
                let mut g = vec![HeckeElement::t_rho(r, 1), HeckeElement::t_rho(r, -1), x(r, 1, 1)];
                for i in 0..r {
                    if r >= 2 {
                        g.push(HeckeElement::t_simple(r, i));
                    }
                }
                g
            };
            for a1 in gens(rp) {
                for a2 in gens(rp) {
                    for b1 in gens(rpp) {
                        let b2 = HeckeElement::one(rpp);
                        let lhs = kappa(rp, rpp, &m(&a1, &a2), &m(&b1, &b2)).unwrap();
                        let rhs = m(&kappa(rp, rpp, &a1, &b1).unwrap(), &kappa(rp, rpp, &a2, &b2).unwrap());
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn double_coset_sum_examples() {
        let c = |p: &[usize]| Composition::new(p.to_vec());
        let id = AffinePerm::identity(2);
        assert_eq!(double_coset_sum(&c(&[1, 1]), &id, &c(&[1, 1])).unwrap(), HeckeElement::one(2));
        let s = p(&[2, 1]);
        let expect = HeckeElement::one(2).add(&HeckeElement::t(&s)).unwrap();
        assert_eq!(double_coset_sum(&c(&[2, 0]), &id, &c(&[2, 0])).unwrap(), expect);
        assert_eq!(double_coset_sum(&c(&[1, 1]), &s, &c(&[1, 1])).unwrap(), HeckeElement::t(&s));
        assert_eq!(double_coset_sum(&c(&[2, 0]), &s, &c(&[2, 0])), Err(Error::NotMinimalRep));
    }

    #[test]
    fn trho_small_ranks() {
        for r in 1..=3 {
            let cert = check_trho(r).unwrap();
            assert!(cert.pass, "r = {r}");
        }
    }

    #[test]
    fn trho_ranks_four_and_five() {
        for r in 4..=5 {
            assert!(check_trho(r).unwrap().pass, "r = {r}");
        }
    }

    #[test]
    fn bernstein_relations() {
        for r in 2..=4usize {
            for i in 1..=r {
                for j in 1..=r {
                    assert_eq!(m(&x(r, i, 1), &x(r, j, 1)), m(&x(r, j, 1), &x(r, i, 1)));
                }
            }
            for i in 1..r {
                let t = HeckeElement::t_simple(r, i);
                // T_i X_i T_i = v^2 X_{i+1}
                assert_eq!(m(&m(&t, &x(r, i, 1)), &t), x(r, i + 1, 1).scaled(&v(2)));
                for j in (1..=r).filter(|&j| j != i && j != i + 1) {
                    assert_eq!(m(&t, &x(r, j, 1)), m(&x(r, j, 1), &t));
                }
            }
        }
    }

    #[test]
    fn translation_products() {
        // X_1^{-1} ... X_j^{-1} = v^{-l(tau)} T_tau where tau adds r to positions 1..j.
        for r in 1..=4usize {
            for j in 1..=r {
                let mut exps = vec![0i64; r];
                exps[..j].iter_mut().for_each(|e| *e = -1);
                let tau = AffinePerm::new((1..=r as i64).map(|i| if i as usize <= j { i + r as i64 } else { i }).collect()).unwrap();
                let expect = HeckeElement::monomial(&tau, v(-(tau.length() as i32)));
                assert_eq!(HeckeElement::x_monomial(&exps), expect, "r = {r}, j = {j}");
            }
        }
    }

    fn arb_element(r: usize) -> impl Strategy<Value = HeckeElement> {
        proptest::collection::vec((crate::afcomb::tests_support::arb_perm_of(r), -2i32..=2, -2i64..=2), 1..3).prop_map(
            move |terms| {
                let mut h = HeckeElement::zero(r);
                for (w, e, c) in terms {
                    if w.length() <= 4 {
                        h.add_term(w, &LaurentPoly::monomial(e, c));
                    }
                }
                h
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn bar_is_an_algebra_involution(a in arb_element(3), b in arb_element(3)) {
            prop_assert_eq!(a.bar().bar(), a.clone());
            prop_assert_eq!(m(&a, &b).bar(), m(&a.bar(), &b.bar()));
        }

        #[test]
        fn inverse_undoes_multiplication(h in arb_element(3), w in crate::afcomb::tests_support::arb_perm_of(3)) {
            prop_assert_eq!(m(&m(&h, &HeckeElement::t(&w)), &HeckeElement::t_inv(&w)), h);
        }

        #[test]
        fn associativity(a in arb_element(2), b in arb_element(2), c in arb_element(2)) {
            prop_assert_eq!(m(&m(&a, &b), &c), m(&a, &m(&b, &c)));
        }

        #[test]
        fn word_independence(w in crate::afcomb::tests_support::arb_perm_of(3)) {
            // A second reduced word: strip left descents instead of right descents.
            let r = w.period();
            let mut cur = w.clone();
            let mut left = Vec::new();
            'outer: loop {
                for i in 0..r {
                    if cur.has_left_descent(i) {
                        cur = cur.simple_mul(i);
                        left.push(i);
                        continue 'outer;
                    }
                }
                break;
            }
            let k = cur.as_rho_pow().unwrap();
            let mut h = HeckeElement::one(r);
            for &i in &left {
                h = m(&h, &HeckeElement::t_simple(r, i));
            }
            h = m(&h, &HeckeElement::t_rho(r, k));
            prop_assert_eq!(h, HeckeElement::t(&w));
        }
    }
}
