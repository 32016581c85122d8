//! Periodic matrices `A = (a_{i,j})` with `a_{i+n,j+n} = a_{i,j}`, stored as the band of rows `1..=n`.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::composition::{Composition, ZVector};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PeriodicMatrix {
    n: usize,
    entries: BTreeMap<(usize, i64), u32>,
}

/// Number of `p` with `lo <= p <= hi`.
fn count_between(lo: i64, hi: i64) -> i64 {
    (hi - lo + 1).max(0)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

impl PeriodicMatrix {
    pub fn zero(n: usize) -> Self {
        PeriodicMatrix { n, entries: BTreeMap::new() }
    }

    /// Builds from `(i, j, a)` triples with arbitrary integer `i`; entries at periodic copies add up.
    pub fn from_triples<I: IntoIterator<Item = (i64, i64, u32)>>(n: usize, triples: I) -> Self {
        let mut m = Self::zero(n);
        for (i, j, a) in triples {
            m.add_entry(i, j, a);
        }
        m
    }

    /// `E^Delta_{i,j}`.
    pub fn unit(n: usize, i: i64, j: i64) -> Self {
        Self::from_triples(n, [(i, j, 1)])
    }

    pub fn diag(lambda: &[usize]) -> Self {
        let n = lambda.len();
        Self::from_triples(n, lambda.iter().enumerate().map(|(i, &a)| (i as i64 + 1, i as i64 + 1, a as u32)))
    }

    pub fn diag_of(lambda: &Composition) -> Self {
        Self::diag(lambda.parts())
    }

    /// The identity-pattern matrix `E = sum_i E^Delta_{i,i}`.
    pub fn e(n: usize) -> Self {
        Self::diag(&vec![1; n])
    }

    fn add_entry(&mut self, i: i64, j: i64, a: u32) {
        if a == 0 {
            return;
        }
        let n = self.n as i64;
        let i0 = (i - 1).rem_euclid(n) + 1;
        let j0 = j - (i - i0);
        *self.entries.entry((i0 as usize, j0)).or_insert(0) += a;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Nonzero band entries `(i, j, a)` with `1 <= i <= n`, in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, u32)> + '_ {
        self.entries.iter().map(|(&(i, j), &a)| (i, j, a))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: i64, j: i64) -> u32 {
        let n = self.n as i64;
        let i0 = (i - 1).rem_euclid(n) + 1;
        let j0 = j - (i - i0);
        self.entries.get(&(i0 as usize, j0)).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &PeriodicMatrix) -> Result<PeriodicMatrix> {
        if self.n != other.n {
            return Err(Error::PeriodMismatch(self.n, other.n));
        }
        let mut out = self.clone();
        for (i, j, a) in other.entries() {
            out.add_entry(i as i64, j, a);
        }
        Ok(out)
    }

    pub fn scale(&self, k: u32) -> PeriodicMatrix {
        if k == 0 {
            return Self::zero(self.n);
        }
        PeriodicMatrix { n: self.n, entries: self.entries.iter().map(|(&key, &a)| (key, a * k)).collect() }
    }

    /// `A + diag(x)`; `InvalidInput` if a diagonal entry would become negative.
    pub fn add_diag(&self, x: &ZVector) -> Result<PeriodicMatrix> {
        if x.n() != self.n {
            return Err(Error::PeriodMismatch(self.n, x.n()));
        }
        let mut out = self.clone();
        for i in 1..=self.n {
            let new = self.get(i as i64, i as i64) as i64 + x.get(i as i64);
            if new < 0 {
                return Err(Error::InvalidInput(format!("diagonal entry {i} would be {new}")));
            }
            if new == 0 {
                out.entries.remove(&(i, i as i64));
            } else {
                out.entries.insert((i, i as i64), new as u32);
            }
        }
        Ok(out)
    }

    /// The part strictly above the diagonal.
    pub fn upper_part(&self) -> PeriodicMatrix {
        PeriodicMatrix {
            n: self.n,
            entries: self.entries.iter().filter(|(&(i, j), _)| j > i as i64).map(|(&k, &a)| (k, a)).collect(),
        }
    }

    pub fn diagonal(&self) -> ZVector {
        ZVector::new((1..=self.n).map(|i| self.get(i as i64, i as i64) as i64).collect())
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries.keys().all(|&(i, j)| j == i as i64)
    }

    /// Membership in `Theta^+(n)`: `a_{i,j} = 0` whenever `i >= j`.
    pub fn is_upper(&self) -> bool {
        self.entries.keys().all(|&(i, j)| j > i as i64)
    }

    pub fn row_sums(&self) -> ZVector {
        let mut out = vec![0i64; self.n];
        for (i, _, a) in self.entries() {
            out[i - 1] += a as i64;
        }
        ZVector::new(out)
    }

    pub fn col_sums(&self) -> ZVector {
        let mut out = vec![0i64; self.n];
        for (_, j, a) in self.entries() {
            out[(j - 1).rem_euclid(self.n as i64) as usize] += a as i64;
        }
        ZVector::new(out)
    }

    pub fn ro(&self) -> Composition {
        Composition::try_from_zvector(&self.row_sums()).expect("entries are nonnegative")
    }

    pub fn co(&self) -> Composition {
        Composition::try_from_zvector(&self.col_sums()).expect("entries are nonnegative")
    }

    pub fn sigma(&self) -> usize {
        self.entries.values().map(|&a| a as usize).sum()
    }

    /// `d(A)_i = sum_{s <= i, t >= i+1} a_{s,t}`; defined on `Theta^+(n)` only.
    pub fn d_vec(&self) -> Result<ZVector> {
        if !self.is_upper() {
            return Err(Error::NotUpperTriangular);
        }
        let n = self.n as i64;
        let d = (1..=n)
            .map(|i| {
                self.entries()
                    .map(|(s, t, a)| a as i64 * count_between(ceil_div(i + 1 - t, n), (i - s as i64).div_euclid(n)))
                    .sum()
            })
            .collect();
        Ok(ZVector::new(d))
    }

    /// `sum_{s <= i, t >= j} a_{s,t}` over the whole periodic matrix.
    pub fn upper_corner(&self, i: i64, j: i64) -> i64 {
        let n = self.n as i64;
        self.entries()
            .map(|(s, t, a)| a as i64 * count_between(ceil_div(j - t, n), (i - s as i64).div_euclid(n)))
            .sum()
    }

    /// `sum_{s >= i, t <= j} a_{s,t}` over the whole periodic matrix.
    pub fn lower_corner(&self, i: i64, j: i64) -> i64 {
        let n = self.n as i64;
        self.entries()
            .map(|(s, t, a)| a as i64 * count_between(ceil_div(i - s as i64, n), (j - t).div_euclid(n)))
            .sum()
    }

    /// `sum_{1 <= i <= n, j != i}` of corner sums; strictly increasing along `order_leq`.
    pub fn height(&self) -> i64 {
        self.entries()
            .map(|(i, j, a)| {
                let k = (j - i as i64).abs();
                a as i64 * k * (k + 1) / 2
            })
            .sum()
    }

    /// Largest `|j - i|` over nonzero entries.
    pub fn spread(&self) -> i64 {
        self.entries.keys().map(|&(i, j)| (j - i as i64).abs()).max().unwrap_or(0)
    }

    /// Normalization exponent `d_A = sum_{1 <= i <= n, i >= k, j < l} a_{i,j} a_{k,l}`.
    pub fn lusztig_d(&self) -> i64 {
        let n = self.n as i64;
        let mut total = 0i64;
        for (i, j, a) in self.entries() {
            for (k0, l0, b) in self.entries() {
                let hi = (i as i64 - k0 as i64).div_euclid(n);
                let lo = (j - l0).div_euclid(n) + 1;
                total += a as i64 * b as i64 * count_between(lo, hi);
            }
        }
        total
    }

    /// `eta_m(A) = (a_{i, mn + j})`.
    pub fn eta(&self, m: i64) -> PeriodicMatrix {
        let shift = m * self.n as i64;
        PeriodicMatrix { n: self.n, entries: self.entries.iter().map(|(&(i, j), &a)| ((i, j - shift), a)).collect() }
    }

    /// The embedding `Theta(n) -> Theta(N)`, `a~_{k, l + mN} = a_{k, l + mn}` for `1 <= k, l <= n`.
    pub fn tilde(&self, big_n: usize) -> Result<PeriodicMatrix> {
        if big_n < self.n {
            return Err(Error::BadRanks { small: self.n, big: big_n });
        }
        let n = self.n as i64;
        let entries = self
            .entries
            .iter()
            .map(|(&(k, j), &a)| {
                let m = (j - 1).div_euclid(n);
                let l = (j - 1).rem_euclid(n) + 1;
                ((k, l + m * big_n as i64), a)
            })
            .collect();
        Ok(PeriodicMatrix { n: big_n, entries })
    }

    /// For every diagonal `l != 0` some row `1 <= i <= n` has `a_{i,i+l} = 0`.
    pub fn is_aperiodic(&self) -> bool {
        let mut per_diag: BTreeMap<i64, usize> = BTreeMap::new();
        for &(i, j) in self.entries.keys() {
            let l = j - i as i64;
            if l != 0 {
                *per_diag.entry(l).or_insert(0) += 1;
            }
        }
        per_diag.values().all(|&count| count < self.n)
    }

    /// Membership in `Y(n)`: aperiodic and `A - E` is not in `Theta(n)`.
    pub fn in_sy(&self) -> bool {
        self.is_aperiodic() && (1..=self.n as i64).any(|i| self.get(i, i) == 0)
    }

    /// Subtracts `E` as many times as possible; returns `(A - mE, m)`.
    pub fn strip_e(&self) -> (PeriodicMatrix, usize) {
        let m = (1..=self.n as i64).map(|i| self.get(i, i)).min().unwrap_or(0);
        let out = self.add_diag(&ZVector::new(vec![-(m as i64); self.n])).expect("m is the minimal diagonal entry");
        (out, m as usize)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("matrix serializes")
    }

    /// Compact text form used in tables: `i,j:a;...`.
    pub fn compact(&self) -> String {
        let body: Vec<String> = self.entries().map(|(i, j, a)| format!("{i},{j}:{a}")).collect();
        format!("[{}]", body.join(";"))
    }
}

/// The Bruhat-type order: corner sums of `b` are bounded by those of `a`.
pub fn order_leq(b: &PeriodicMatrix, a: &PeriodicMatrix) -> Result<bool> {
    if b.n != a.n {
        return Err(Error::PeriodMismatch(b.n, a.n));
    }
    if b.row_sums() != a.row_sums() || b.col_sums() != a.col_sums() {
        return Err(Error::ProfileMismatch);
    }
    let n = a.n as i64;
    let reach = a.spread().max(b.spread());
    for i in 1..=n {
        for j in i + 1..=i + reach {
            if b.upper_corner(i, j) > a.upper_corner(i, j) {
                return Ok(false);
            }
        }
        for j in i - reach..i {
            if b.lower_corner(i, j) > a.lower_corner(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All of `Theta(n, r)` with nonzero entries in `|j - i| <= spread`, in a fixed order.
pub fn enumerate_theta(n: usize, r: usize, spread: usize) -> Vec<PeriodicMatrix> {
    let s = spread as i64;
    let positions: Vec<(i64, i64)> =
        (1..=n as i64).flat_map(|i| (i - s..=i + s).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    let mut counts = vec![0u32; positions.len()];
    fn rec(
        idx: usize,
        left: usize,
        n: usize,
        positions: &[(i64, i64)],
        counts: &mut Vec<u32>,
        out: &mut Vec<PeriodicMatrix>,
    ) {
        if idx + 1 == positions.len() {
            counts[idx] = left as u32;
            out.push(PeriodicMatrix::from_triples(
                n,
                positions.iter().zip(counts.iter()).map(|(&(i, j), &a)| (i, j, a)),
            ));
            return;
        }
        for a in (0..=left).rev() {
            counts[idx] = a as u32;
            rec(idx + 1, left - a, n, positions, counts, out);
        }
    }
    if n > 0 {
        rec(0, r, n, &positions, &mut counts, &mut out);
    }
    out
}

/// All `A` in `Theta^+(n)` with `sigma(A) <= max_sigma` and every entry within `max_width` of the diagonal.
pub fn enumerate_upper(n: usize, max_sigma: usize, max_width: usize) -> Vec<PeriodicMatrix> {
    let positions: Vec<(i64, i64)> =
        (1..=n as i64).flat_map(|i| (i + 1..=i + max_width as i64).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    fn rec(idx: usize, left: usize, n: usize, positions: &[(i64, i64)], cur: &mut Vec<(i64, i64, u32)>, out: &mut Vec<PeriodicMatrix>) {
        if idx == positions.len() {
            out.push(PeriodicMatrix::from_triples(n, cur.iter().copied()));
            return;
        }
        for a in 0..=left {
            cur.push((positions[idx].0, positions[idx].1, a as u32));
            rec(idx + 1, left - a, n, positions, cur, out);
            cur.pop();
        }
    }
    rec(0, max_sigma, n, &positions, &mut Vec::new(), &mut out);
    out
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<(i64, i64, u32)>,
}

impl Serialize for PeriodicMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson { n: self.n, entries: self.entries().map(|(i, j, a)| (i as i64, j, a)).collect() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PeriodicMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        if raw.n == 0 {
            return Err(serde::de::Error::custom("n must be positive"));
        }
        Ok(PeriodicMatrix::from_triples(raw.n, raw.entries))
    }
}

impl fmt::Debug for PeriodicMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}{}", self.n, self.compact())
    }
}
