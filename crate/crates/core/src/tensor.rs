//! The tensor space `Omega^{(x) r}` as a right `H_Delta(r)`-module, and the induced-module
//! coordinates `g_lambda T_y` (`y` a shortest coset representative) used by the Schur algebra.
//!
//! `g_lambda = omega_{i_lambda}`, so `x_lambda = v^{l(w_0,lambda)} g_lambda`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use crate::afcomb::{is_min_left, AffinePerm, Composition};
use crate::error::{Error, Result};
use crate::hecke::{bar_word_of, word_of, x_word, HeckeElement, Letter, RightModule};
use crate::ring::LaurentPoly;

/// A Chevalley-type generator of the quantum loop algebra acting on `Omega^{(x) r}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    E(usize),
    F(usize),
    /// `K_i^e`.
    K(usize, i64),
    /// `z_s^+` (true) or `z_s^-` (false).
    Z(u32, bool),
}

fn residue(n: usize, s: i64) -> usize {
    ((s - 1).rem_euclid(n as i64) + 1) as usize
}

fn next_residue(n: usize, i: usize) -> usize {
    i % n + 1
}

/// Exponent of `K~_i = K_i K_{i+1}^{-1}` on `omega_s`.
fn ktilde_exp(n: usize, i: usize, s: i64) -> i32 {
    let res = residue(n, s);
    (res == i) as i32 - (res == next_residue(n, i)) as i32
}

/// A finite combination of `omega_i`, `i in Z^r`.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorVector {
    n: usize,
    r: usize,
    terms: BTreeMap<Vec<i64>, LaurentPoly>,
}

impl TensorVector {
    pub fn zero(n: usize, r: usize) -> Self {
        TensorVector { n, r, terms: BTreeMap::new() }
    }

    /// `omega_{i_1} (x) ... (x) omega_{i_r}`.
    pub fn basis(n: usize, idx: &[i64]) -> Self {
        Self::monomial(n, idx.to_vec(), LaurentPoly::one())
    }

    pub fn monomial(n: usize, idx: Vec<i64>, c: LaurentPoly) -> Self {
        let mut out = Self::zero(n, idx.len());
        out.add_term(idx, &c);
        out
    }

    /// `x_lambda = v^{l(w_0,lambda)} omega_{i_lambda}`.
    pub fn x_vector(lambda: &Composition) -> Self {
        Self::monomial(lambda.n(), lambda.index_vector(), LaurentPoly::v_pow(lambda.longest_length() as i32))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, idx: &[i64]) -> LaurentPoly {
        self.terms.get(idx).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, idx: Vec<i64>, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
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

    pub fn add(&self, other: &TensorVector) -> Result<TensorVector> {
        if self.r != other.r {
            return Err(Error::RankMismatch(self.r, other.r));
        }
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn sub(&self, other: &TensorVector) -> Result<TensorVector> {
        self.add(&other.scaled(&LaurentPoly::constant(-1)))
    }

    /// `self (x) other` in rank `r + r'`.
    pub fn tensor(&self, other: &TensorVector) -> TensorVector {
        let mut out = Self::zero(self.n, self.r + other.r);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                out.add_term(idx, &(c * d));
            }
        }
        out
    }

    pub fn act(&self, h: &HeckeElement) -> Result<TensorVector> {
        if h.period() != self.r {
            return Err(Error::RankMismatch(self.r, h.period()));
        }
        Ok(self.act_hecke(h))
    }

    /// `omega_i . T_k` for `1 <= k < r`: the three-case rule on `I(n, r)`, carried to all of `Z^r`
    /// through `omega_{j + nc} = omega_j X^{-c}` and the Bernstein relation for `X^{-c} T_k`.
    fn act_t(&self, k: usize) -> TensorVector {
        let n = self.n as i64;
        let (p, q) = (k - 1, k);
        let v2 = LaurentPoly::v_pow(2);
        let v2m1 = &v2 - &LaurentPoly::one();
        let mut out = Self::zero(self.n, self.r);
        for (idx, c) in &self.terms {
            let j: Vec<i64> = idx.iter().map(|&x| (x - 1).rem_euclid(n) + 1).collect();
            let a: Vec<i64> = idx.iter().map(|&x| -(x - 1).div_euclid(n)).collect();
            // omega_j T_k, then X^{s_k(a)} moves the swapped offsets back.
            let mut sa = a.clone();
            sa.swap(p, q);
            let shifted = |m: &[i64]| -> Vec<i64> { m.iter().zip(&sa).map(|(&x, &s)| x - s * n).collect() };
            let mut swapped = j.clone();
            swapped.swap(p, q);
            if j[p] == j[q] {
                out.add_term(shifted(&j), &(&v2 * c));
            } else {
                out.add_term(shifted(&swapped), &(&LaurentPoly::v() * c));
                if j[p] > j[q] {
                    out.add_term(shifted(&j), &(&v2m1 * c));
                }
            }
            // (v^2 - 1) sum over the X-monomials between X^a and X^{s_k(a)}.
            let diff = a[q] - a[p];
            let (range, sign) = match diff.cmp(&0) {
                std::cmp::Ordering::Greater => (0..diff, 1),
                std::cmp::Ordering::Less => (diff..0, -1),
                std::cmp::Ordering::Equal => (0..0, 0),
            };
            let corr = &v2m1.scale(&num_bigint::BigInt::from(sign)) * c;
            for e in range {
                let mut b = a.clone();
                b[p] += e;
                b[q] -= e;
                let m: Vec<i64> = j.iter().zip(&b).map(|(&x, &s)| x - s * n).collect();
                out.add_term(m, &corr);
            }
        }
        out
    }

    fn shift_slot(&self, t: usize, by: i64) -> TensorVector {
        let mut out = Self::zero(self.n, self.r);
        for (idx, c) in &self.terms {
            let mut j = idx.clone();
            j[t] += by;
            out.add_term(j, c);
        }
        out
    }

    fn t_tilde_inv(&self, k: usize) -> TensorVector {
        self.act_letter(Letter::TInv(k)).scaled(&LaurentPoly::v())
    }

    fn t_tilde(&self, k: usize) -> TensorVector {
        self.act_t(k).scaled(&LaurentPoly::v_pow(-1))
    }

    /// `zeta_r(g)` applied through the iterated coproduct.
    pub fn act_generator(&self, g: Generator) -> TensorVector {
        let n = self.n;
        let mut out = Self::zero(n, self.r);
        for (idx, c) in &self.terms {
            match g {
                Generator::E(i) => {
                    for t in 0..idx.len() {
                        if residue(n, idx[t]) == next_residue(n, i) {
                            let e: i32 = idx[t + 1..].iter().map(|&s| ktilde_exp(n, i, s)).sum();
                            let mut j = idx.clone();
                            j[t] -= 1;
                            out.add_term(j, &c.shift(e));
                        }
                    }
                }
                Generator::F(i) => {
                    for t in 0..idx.len() {
                        if residue(n, idx[t]) == i {
                            let e: i32 = -idx[..t].iter().map(|&s| ktilde_exp(n, i, s)).sum::<i32>();
                            let mut j = idx.clone();
                            j[t] += 1;
                            out.add_term(j, &c.shift(e));
                        }
                    }
                }
                Generator::K(i, e) => {
                    let count = idx.iter().filter(|&&s| residue(n, s) == i).count() as i64;
                    out.add_term(idx.clone(), &c.shift((e * count) as i32));
                }
                Generator::Z(s, plus) => {
                    let by = if plus { -(s as i64) * n as i64 } else { s as i64 * n as i64 };
                    for t in 0..idx.len() {
                        let mut j = idx.clone();
                        j[t] += by;
                        out.add_term(j, c);
                    }
                }
            }
        }
        out
    }

    /// Coordinates in the induced bases of `Omega^{(x) r}`.
    pub fn to_induced(&self) -> InducedVector {
        let mut out = InducedVector::zero(self.n, self.r);
        for (idx, c) in &self.terms {
            out.add_assign_ref(&omega_to_induced(self.n, idx).scaled(c));
        }
        out
    }

    /// Coordinates with respect to `g_gamma T_{y'} (x) g_delta T_{y''}`.
    pub fn split_coords(&self, rp: usize) -> Result<SplitCoords> {
        if rp > self.r {
            return Err(Error::InvalidInput(format!("cannot split rank {} at {rp}", self.r)));
        }
        let mut out: SplitCoords = BTreeMap::new();
        for (idx, c) in &self.terms {
            let left = omega_to_induced(self.n, &idx[..rp]);
            let right = omega_to_induced(self.n, &idx[rp..]);
            for (kl, cl) in left.terms() {
                let cl = cl * c;
                for (kr, cr) in right.terms() {
                    add_split(&mut out, (kl.clone(), kr.clone()), &(&cl * cr));
                }
            }
        }
        Ok(out)
    }

    /// `self = sum (x_gamma . h') (x) (x_delta . h'')`, one term per basis pair `T_{y'} (x) T_{y''}`.
    pub fn split(&self, rp: usize, rpp: usize) -> Result<Vec<SplitTerm>> {
        if rp + rpp != self.r {
            return Err(Error::RankMismatch(self.r, rp + rpp));
        }
        let coords = self.split_coords(rp)?;
        Ok(coords
            .into_iter()
            .map(|(((gamma, y1), (delta, y2)), c)| {
                let norm = -((gamma.longest_length() + delta.longest_length()) as i32);
                SplitTerm { hp: HeckeElement::t(&y1), hpp: HeckeElement::monomial(&y2, c.shift(norm)), gamma, delta }
            })
            .collect())
    }

    /// Inverse of [`TensorVector::split`].
    pub fn reassemble(n: usize, rp: usize, rpp: usize, terms: &[SplitTerm]) -> Result<TensorVector> {
        let mut out = Self::zero(n, rp + rpp);
        for t in terms {
            let left = Self::x_vector(&t.gamma).act(&t.hp)?;
            let right = Self::x_vector(&t.delta).act(&t.hpp)?;
            out.add_assign_ref(&left.tensor(&right));
        }
        Ok(out)
    }
}

/// One summand `(x_gamma . h') (x) (x_delta . h'')` of a split vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitTerm {
    pub gamma: Composition,
    pub delta: Composition,
    pub hp: HeckeElement,
    pub hpp: HeckeElement,
}

/// Key `((gamma, y'), (delta, y''))` of a split coordinate.
pub type SplitKey = ((Composition, AffinePerm), (Composition, AffinePerm));
pub type SplitCoords = BTreeMap<SplitKey, LaurentPoly>;

pub(crate) fn add_split(map: &mut SplitCoords, key: SplitKey, c: &LaurentPoly) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
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

impl RightModule for TensorVector {
    fn zero_like(&self) -> Self {
        Self::zero(self.n, self.r)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn scaled(&self, c: &LaurentPoly) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        TensorVector { n: self.n, r: self.r, terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect() }
    }

    fn add_assign_ref(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c);
        }
    }

    fn act_letter(&self, letter: Letter) -> Self {
        let r = self.r;
        match letter {
            Letter::T(0) => self.act_letter(Letter::Rho(1)).act_t(r - 1).act_letter(Letter::Rho(-1)),
            Letter::T(k) => self.act_t(k),
            Letter::TInv(k) => {
                let mut out = self.act_letter(Letter::T(k)).scaled(&LaurentPoly::v_pow(-2));
                out.add_assign_ref(&self.scaled(&(&LaurentPoly::v_pow(-2) - &LaurentPoly::one())));
                out
            }
            Letter::Rho(m) => {
                let mut cur = self.clone();
                for _ in 0..m.abs() {
                    if m > 0 {
                        // T_rho = X_1^{-1} T~_1^{-1} ... T~_{r-1}^{-1}
                        cur = cur.shift_slot(0, self.n as i64);
                        for k in 1..r {
                            cur = cur.t_tilde_inv(k);
                        }
                    } else {
                        for k in (1..r).rev() {
                            cur = cur.t_tilde(k);
                        }
                        cur = cur.shift_slot(0, -(self.n as i64));
                    }
                }
                cur
            }
            Letter::X(t, e) => self.shift_slot(t - 1, -e * self.n as i64),
        }
    }
}

impl fmt::Debug for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(k, c)| format!("({c})w{k:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A combination of `g_lambda T_y` with `y` shortest in `S_lambda y`.
#[derive(Clone, PartialEq, Eq)]
pub struct InducedVector {
    n: usize,
    r: usize,
    terms: BTreeMap<(Composition, AffinePerm), LaurentPoly>,
}

impl InducedVector {
    pub fn zero(n: usize, r: usize) -> Self {
        InducedVector { n, r, terms: BTreeMap::new() }
    }

    /// `g_lambda T_e`.
    pub fn generator(lambda: &Composition) -> Self {
        Self::monomial(lambda, &AffinePerm::identity(lambda.sigma()), LaurentPoly::one())
    }

    pub fn monomial(lambda: &Composition, y: &AffinePerm, c: LaurentPoly) -> Self {
        let mut out = Self::zero(lambda.n(), lambda.sigma());
        out.add_term((lambda.clone(), y.clone()), &c);
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Composition, AffinePerm), &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Composition, y: &AffinePerm) -> LaurentPoly {
        self.terms.get(&(lambda.clone(), y.clone())).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, key: (Composition, AffinePerm), c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn act(&self, h: &HeckeElement) -> Result<InducedVector> {
        if h.period() != self.r {
            return Err(Error::RankMismatch(self.r, h.period()));
        }
        Ok(self.act_hecke(h))
    }

    fn act_t(&self, i: usize) -> InducedVector {
        let v2 = LaurentPoly::v_pow(2);
        let v2m1 = &v2 - &LaurentPoly::one();
        let mut out = Self::zero(self.n, self.r);
        for ((lam, y), c) in &self.terms {
            let ys = y.mul_simple(i);
            if y.has_right_descent(i) {
                out.add_term((lam.clone(), y.clone()), &(&v2m1 * c));
                out.add_term((lam.clone(), ys), &(&v2 * c));
            } else if is_min_left(lam, &ys) {
                out.add_term((lam.clone(), ys), c);
            } else {
                out.add_term((lam.clone(), y.clone()), &(&v2 * c));
            }
        }
        out
    }

    /// `psi(g_lambda h) = g_lambda bar(h)`; well defined because `g_lambda T_s = v^2 g_lambda` for `s` in `S_lambda`.
    pub fn bar(&self) -> InducedVector {
        let mut out = Self::zero(self.n, self.r);
        for ((lam, y), c) in &self.terms {
            out.add_assign_ref(&Self::generator(lam).act_word(&bar_word_of(y)).scaled(&c.bar()));
        }
        out
    }

    /// The same vector in the `omega` basis.
    pub fn to_tensor(&self) -> TensorVector {
        let mut out = TensorVector::zero(self.n, self.r);
        for ((lam, y), c) in &self.terms {
            out.add_assign_ref(&induced_to_omega(lam, y).scaled(c));
        }
        out
    }
}

impl RightModule for InducedVector {
    fn zero_like(&self) -> Self {
        Self::zero(self.n, self.r)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn scaled(&self, c: &LaurentPoly) -> Self {
        if c.is_zero() {
            return self.zero_like();
        }
        InducedVector { n: self.n, r: self.r, terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect() }
    }

    fn add_assign_ref(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c);
        }
    }

    fn act_letter(&self, letter: Letter) -> Self {
        match letter {
            Letter::T(i) => self.act_t(i),
            Letter::TInv(i) => {
                let mut out = self.act_t(i).scaled(&LaurentPoly::v_pow(-2));
                out.add_assign_ref(&self.scaled(&(&LaurentPoly::v_pow(-2) - &LaurentPoly::one())));
                out
            }
            Letter::Rho(m) => InducedVector {
                n: self.n,
                r: self.r,
                terms: self.terms.iter().map(|((lam, y), c)| ((lam.clone(), y.mul_rho(m)), c.clone())).collect(),
            },
            Letter::X(t, e) => {
                let w = x_word(self.r, t, e.signum());
                let mut cur = self.clone();
                for _ in 0..e.abs() {
                    cur = cur.act_word(&w);
                }
                cur
            }
        }
    }
}

impl fmt::Debug for InducedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|((l, y), c)| format!("({c})g{l:?}T{y}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

type OmegaCache = RwLock<HashMap<(usize, Vec<i64>), InducedVector>>;
type InducedCache = RwLock<HashMap<(Composition, AffinePerm), TensorVector>>;

fn omega_cache() -> &'static OmegaCache {
    static CACHE: OnceLock<OmegaCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn induced_cache() -> &'static InducedCache {
    static CACHE: OnceLock<InducedCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `omega_idx` as a combination of `g_lambda T_y`.
pub fn omega_to_induced(n: usize, idx: &[i64]) -> InducedVector {
    let key = (n, idx.to_vec());
    if let Some(v) = omega_cache().read().expect("cache lock").get(&key) {
        return v.clone();
    }
    let nn = n as i64;
    let jbar: Vec<i64> = idx.iter().map(|&x| (x - 1).rem_euclid(nn) + 1).collect();
    let shifts: Vec<i64> = idx.iter().map(|&x| (x - 1).div_euclid(nn)).collect();
    let lambda = Composition::weight_of(n, &jbar);
    // Bubble sort jbar; replaying the swaps backwards carries i_lambda to jbar, one factor v per swap.
    let mut cur = jbar.clone();
    let mut swaps = Vec::new();
    let mut changed = true;
    while changed {
        changed = false;
        for k in 1..cur.len() {
            if cur[k - 1] > cur[k] {
                cur.swap(k - 1, k);
                swaps.push(k);
                changed = true;
            }
        }
    }
    let mut out = InducedVector::generator(&lambda);
    for &k in swaps.iter().rev() {
        out = out.act_letter(Letter::T(k));
    }
    out = out.scaled(&LaurentPoly::v_pow(-(swaps.len() as i32)));
    for (t, &c) in shifts.iter().enumerate() {
        if c != 0 {
            out = out.act_letter(Letter::X(t + 1, -c));
        }
    }
    omega_cache().write().expect("cache lock").entry(key).or_insert(out).clone()
}

/// `g_lambda T_y` in the `omega` basis.
pub fn induced_to_omega(lambda: &Composition, y: &AffinePerm) -> TensorVector {
    let key = (lambda.clone(), y.clone());
    if let Some(v) = induced_cache().read().expect("cache lock").get(&key) {
        return v.clone();
    }
    let out = TensorVector::basis(lambda.n(), &lambda.index_vector()).act_word(&word_of(y));
    induced_cache().write().expect("cache lock").entry(key).or_insert(out).clone()
}
