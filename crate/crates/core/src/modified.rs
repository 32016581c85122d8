//! Index bookkeeping for the modified quantum group and its comultiplication constants `h_{A,B,C}`.
//!
//! The modified form is never built as an algebra. `b_A` is known only through its Schur images
//! `theta_{A + mE, sigma(A) + mn}`, and `h` is read from `g` at the forced ranks.

use std::fmt;

use serde::Serialize;

use crate::afcomb::{Composition, PeriodicMatrix, ZVector};
use crate::error::{Error, Result};
use crate::ring::LaurentPoly;
use crate::schur::{canonical_basis, compute_g, delta_theta, SchurElement};

/// An element of `X = Z^n / Z(1, ..., 1)`, stored by its representative with minimum entry 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct XWeight {
    rep: ZVector,
}

impl XWeight {
    pub fn new(v: &ZVector) -> Self {
        let lo = v.parts().iter().copied().min().unwrap_or(0);
        XWeight { rep: ZVector::new(v.parts().iter().map(|x| x - lo).collect()) }
    }

    pub fn of_composition(c: &Composition) -> Self {
        Self::new(&c.to_zvector())
    }

    pub fn n(&self) -> usize {
        self.rep.n()
    }

    /// The normalized representative (all entries `>= 0`, some entry `0`).
    pub fn rep(&self) -> &ZVector {
        &self.rep
    }

    pub fn add(&self, other: &XWeight) -> Result<XWeight> {
        if self.n() != other.n() {
            return Err(Error::PeriodMismatch(self.n(), other.n()));
        }
        Ok(Self::new(&(&self.rep + &other.rep)))
    }

    pub fn sub(&self, other: &XWeight) -> Result<XWeight> {
        if self.n() != other.n() {
            return Err(Error::PeriodMismatch(self.n(), other.n()));
        }
        Ok(Self::new(&(&self.rep - &other.rep)))
    }

    /// `mu . lambda-bar = sum_i lambda_i mu_i` for `mu` in `Y` (entries summing to 0).
    pub fn pair(&self, mu: &ZVector) -> Result<i64> {
        if mu.n() != self.n() {
            return Err(Error::PeriodMismatch(self.n(), mu.n()));
        }
        if mu.sum() != 0 {
            return Err(Error::InvalidInput("Y-vectors have entries summing to zero".into()));
        }
        Ok(self.rep.parts().iter().zip(mu.parts()).map(|(a, b)| a * b).sum())
    }

    /// The unique `alpha` in `Lambda(n, r)` of this class, if any.
    pub fn representative(&self, r: usize) -> Option<Composition> {
        let n = self.n() as i64;
        let rest = r as i64 - self.rep.sum();
        if rest < 0 || rest % n != 0 {
            return None;
        }
        let k = rest / n;
        Some(Composition::new(self.rep.parts().iter().map(|&x| (x + k) as usize).collect()))
    }
}

impl fmt::Debug for XWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}~", self.rep.parts())
    }
}

/// A matrix in `Y(n)` with its row and column classes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SYIndex {
    matrix: PeriodicMatrix,
    ro: XWeight,
    co: XWeight,
}

impl SYIndex {
    pub fn new(matrix: PeriodicMatrix) -> Result<Self> {
        if !matrix.in_sy() {
            return Err(Error::InvalidInput(format!("{} is not in Y(n)", matrix.compact())));
        }
        let ro = XWeight::new(&matrix.row_sums());
        let co = XWeight::new(&matrix.col_sums());
        Ok(SYIndex { matrix, ro, co })
    }

    /// The `Y(n)` index of `A + mE` for any `A` with `A + mE` aperiodic: strip copies of `E`.
    pub fn from_shifted(a: &PeriodicMatrix) -> Result<Self> {
        Self::new(a.strip_e().0)
    }

    pub fn matrix(&self) -> &PeriodicMatrix {
        &self.matrix
    }

    pub fn ro_class(&self) -> &XWeight {
        &self.ro
    }

    pub fn co_class(&self) -> &XWeight {
        &self.co
    }

    pub fn n(&self) -> usize {
        self.matrix.n()
    }

    pub fn sigma(&self) -> usize {
        self.matrix.sigma()
    }
}

impl fmt::Debug for SYIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}", self.matrix.compact())
    }
}

/// The image of `1_lambda-bar` in `S(n, r)`.
pub fn dzr_idempotent(lambda: &XWeight, r: usize) -> SchurElement {
    match lambda.representative(r) {
        Some(alpha) => SchurElement::std(&PeriodicMatrix::diag_of(&alpha)),
        None => SchurElement::zero(lambda.n(), r),
    }
}

/// `m` with `r = sigma(A) + mn`, `m >= 0`.
fn shift_count(sigma: usize, r: usize, n: usize) -> Option<usize> {
    (r >= sigma && (r - sigma).is_multiple_of(n)).then(|| (r - sigma) / n)
}

/// The image of `b_A` in `S(n, r)`.
pub fn schur_image_of_b(a: &SYIndex, r: usize) -> Result<SchurElement> {
    match shift_count(a.sigma(), r, a.n()) {
        Some(m) => canonical_basis(&a.matrix.add_diag(&ZVector::new(vec![m as i64; a.n()]))?),
        None => Ok(SchurElement::zero(a.n(), r)),
    }
}

/// `h_{A,B,C} = g^{sigma(B), sigma(C)}_{A + mE, B, C}`, or 0 when `b_A` dies at rank `sigma(B) + sigma(C)`.
pub fn compute_h(a: &SYIndex, b: &SYIndex, c: &SYIndex) -> Result<LaurentPoly> {
    if a.n() != b.n() || a.n() != c.n() {
        return Err(Error::PeriodMismatch(a.n(), if a.n() != b.n() { b.n() } else { c.n() }));
    }
    if b.ro.add(&c.ro)? != a.ro || b.co.add(&c.co)? != a.co {
        return Err(Error::ClassMismatch);
    }
    let (rp, rpp) = (b.sigma(), c.sigma());
    let Some(m) = shift_count(a.sigma(), rp + rpp, a.n()) else {
        return Ok(LaurentPoly::zero());
    };
    let am = a.matrix.add_diag(&ZVector::new(vec![m as i64; a.n()]))?;
    compute_g(&am, &b.matrix, &c.matrix, rp, rpp)
}

/// `m` with `sigma(B) + sigma(C) = sigma(A) + mn`, if it exists.
pub fn h_shift(a: &SYIndex, b: &SYIndex, c: &SYIndex) -> Option<usize> {
    shift_count(a.sigma(), b.sigma() + c.sigma(), a.n())
}

/// The `Y(n)` index of `E_i^{(a)} 1_lambda-bar`.
pub fn divided_power_index(i: usize, a: u32, lambda: &XWeight) -> Result<SYIndex> {
    let n = lambda.n();
    let upper = PeriodicMatrix::unit(n, i as i64, i as i64 + 1).scale(a);
    let diag = &lambda.rep - &upper.col_sums();
    let lo = diag.parts().iter().copied().min().unwrap_or(0);
    let diag = ZVector::new(diag.parts().iter().map(|x| x - lo).collect());
    SYIndex::new(upper.add_diag(&diag)?)
}

/// One compared coefficient of `Delta(E_i^{(a)} 1_lambda-bar)`.
#[derive(Clone, Debug, Serialize)]
pub struct MonomialDeltaEntry {
    pub b: PeriodicMatrix,
    pub c: PeriodicMatrix,
    pub expected: LaurentPoly,
    pub computed: LaurentPoly,
}

#[derive(Clone, Debug, Serialize)]
pub struct MonomialDeltaCertificate {
    pub n: usize,
    pub i: usize,
    pub a: u32,
    pub lambda: XWeight,
    pub pass: bool,
    pub entries: Vec<MonomialDeltaEntry>,
}

/// Normalized representatives of the classes in `X` with entry sum at most `max_sum`.
pub fn weight_classes(n: usize, max_sum: usize) -> Vec<XWeight> {
    let mut out = std::collections::BTreeSet::new();
    for s in 0..=max_sum {
        for c in crate::afcomb::compositions(n, s) {
            out.insert(XWeight::of_composition(&c));
        }
    }
    out.into_iter().collect()
}

/// Compares `Delta(E_i^{(a)}) = sum_{s+t=a} v^{st} E_i^{(s)} (x) E_i^{(t)} K~_i^s`, projected to
/// `(beta-bar, delta-bar)` with `beta-bar + delta-bar = lambda-bar`, against `compute_h`.
///
/// `K~_i` acts on `1_delta-bar` by `v^{delta_i - delta_{i+1}}`. Pairs `(B, C)` are kept while
/// `sigma(B) + sigma(C) = sigma(A) + mn` with `m <= max_m`. For each kept `(s, t)` the whole block of
/// `Delta_{r',r''}(theta_{A + mE})` with the row and column sums of `(B, C)` is compared, so
/// pairs absent from the expansion are confirmed to vanish.
pub fn monomial_delta_check(n: usize, i: usize, a: u32, lambda: &XWeight, max_m: usize) -> Result<MonomialDeltaCertificate> {
    if lambda.n() != n {
        return Err(Error::PeriodMismatch(n, lambda.n()));
    }
    if i == 0 || i > n {
        return Err(Error::InvalidInput(format!("residue {i} outside 1..={n}")));
    }
    let big_a = divided_power_index(i, a, lambda)?;
    let mut entries = Vec::new();
    let max_total = big_a.sigma() + n * max_m;
    for beta in weight_classes(n, max_total) {
        let delta = lambda.sub(&beta)?;
        for s in 0..=a {
            let t = a - s;
            let b = divided_power_index(i, s, &beta)?;
            let c = divided_power_index(i, t, &delta)?;
            if b.sigma() + c.sigma() > max_total {
                continue;
            }
            let dv = c.matrix.col_sums();
            let exp = (s * t) as i64 + s as i64 * (dv.get(i as i64) - dv.get(i as i64 + 1));
            let expected = LaurentPoly::v_pow(exp as i32);
            let computed = compute_h(&big_a, &b, &c)?;
            entries.push(MonomialDeltaEntry { b: b.matrix.clone(), c: c.matrix.clone(), expected, computed });
            // Everything else in the same weight block must vanish.
            let m = h_shift(&big_a, &b, &c).ok_or_else(|| Error::SolveFailed("class sums disagree".into()))?;
            let am = big_a.matrix.add_diag(&ZVector::new(vec![m as i64; n]))?;
            for ((b2, c2), x) in delta_theta(&am, b.sigma())? {
                let same_block = b2.row_sums() == b.matrix.row_sums()
                    && b2.col_sums() == b.matrix.col_sums()
                    && c2.row_sums() == c.matrix.row_sums()
                    && c2.col_sums() == c.matrix.col_sums();
                if same_block && (b2 != b.matrix || c2 != c.matrix) {
                    entries.push(MonomialDeltaEntry { b: b2, c: c2, expected: LaurentPoly::zero(), computed: x });
                }
            }
        }
    }
    let pass = entries.iter().all(|e| e.expected == e.computed);
    Ok(MonomialDeltaCertificate { n, i, a, lambda: lambda.clone(), pass, entries })
}
