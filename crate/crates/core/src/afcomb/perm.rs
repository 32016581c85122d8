//! The extended affine symmetric group in window notation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection `w: Z -> Z` with `w(i + r) = w(i) + r`, stored as `[w(1), ..., w(r)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffinePerm {
    window: Vec<i64>,
}

impl AffinePerm {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let r = window.len() as i64;
        let mut seen = vec![false; window.len()];
        for &x in &window {
            let res = x.rem_euclid(r.max(1)) as usize;
            if seen[res] {
                return Err(Error::InvalidInput(format!("window {window:?} repeats a residue mod {r}")));
            }
            seen[res] = true;
        }
        Ok(AffinePerm { window })
    }

    pub(crate) fn from_window_unchecked(window: Vec<i64>) -> Self {
        AffinePerm { window }
    }

    pub fn identity(r: usize) -> Self {
        AffinePerm { window: (1..=r as i64).collect() }
    }

    /// `rho^m`, the shift `j -> j + m`.
    pub fn rho_pow(r: usize, m: i64) -> Self {
        AffinePerm { window: (1..=r as i64).map(|j| j + m).collect() }
    }

    /// Simple reflection `s_i`, `0 <= i < r`; `s_0` swaps `0` and `1`.
    pub fn simple(r: usize, i: usize) -> Self {
        assert!(r >= 2 && i < r, "s_{i} does not exist for r = {r}");
        Self::identity(r).mul_simple(i)
    }

    pub fn period(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `w(i)` for any integer `i`.
    pub fn apply(&self, i: i64) -> i64 {
        let r = self.window.len() as i64;
        let k = (i - 1).div_euclid(r);
        let idx = (i - 1).rem_euclid(r) as usize;
        self.window[idx] + k * r
    }

    pub fn mul(&self, other: &AffinePerm) -> Result<AffinePerm> {
        if self.period() != other.period() {
            return Err(Error::PeriodMismatch(self.period(), other.period()));
        }
        Ok(AffinePerm { window: other.window.iter().map(|&x| self.apply(x)).collect() })
    }

    pub fn inv(&self) -> AffinePerm {
        let r = self.window.len() as i64;
        let mut out = vec![0i64; self.window.len()];
        for (idx, &x) in self.window.iter().enumerate() {
            let k = (x - 1).div_euclid(r);
            let pos = (x - 1).rem_euclid(r) as usize;
            out[pos] = idx as i64 + 1 - k * r;
        }
        AffinePerm { window: out }
    }

    /// `sum_{1 <= i < j <= r} |floor((w(j) - w(i)) / r)|`.
    pub fn length(&self) -> usize {
        let r = self.window.len() as i64;
        let mut total = 0i64;
        for i in 0..self.window.len() {
            for j in i + 1..self.window.len() {
                total += (self.window[j] - self.window[i]).div_euclid(r).abs();
            }
        }
        total as usize
    }

    /// Right multiplication by `s_i`.
    pub fn mul_simple(&self, i: usize) -> AffinePerm {
        let r = self.window.len();
        let mut w = self.window.clone();
        if i == 0 {
            let (first, last) = (w[0], w[r - 1]);
            w[0] = last - r as i64;
            w[r - 1] = first + r as i64;
        } else {
            w.swap(i - 1, i);
        }
        AffinePerm { window: w }
    }

    /// Left multiplication by `s_i`: swaps the values congruent to `i` and `i + 1`.
    pub fn simple_mul(&self, i: usize) -> AffinePerm {
        let r = self.window.len() as i64;
        let i = i as i64;
        let w = self
            .window
            .iter()
            .map(|&x| {
                let res = x.rem_euclid(r);
                if res == i.rem_euclid(r) {
                    x + 1
                } else if res == (i + 1).rem_euclid(r) {
                    x - 1
                } else {
                    x
                }
            })
            .collect();
        AffinePerm { window: w }
    }

    /// Right multiplication by `rho^m`.
    pub fn mul_rho(&self, m: i64) -> AffinePerm {
        AffinePerm { window: (1..=self.window.len() as i64).map(|j| self.apply(j + m)).collect() }
    }

    /// True iff `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let r = self.window.len();
        if i == 0 {
            self.window[r - 1] - r as i64 > self.window[0]
        } else {
            self.window[i - 1] > self.window[i]
        }
    }

    /// True iff `l(s_i w) < l(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inv();
        inv.has_right_descent(i)
    }

    /// If `l(w) = 0`, the `k` with `w = rho^k`.
    pub fn as_rho_pow(&self) -> Option<i64> {
        let k = self.window.first().map_or(0, |&x| x - 1);
        (*self == Self::rho_pow(self.period(), k)).then_some(k)
    }

    /// A reduced expression `w = rho^k s_{j_1} ... s_{j_l}`, returned as `(k, [j_1, ..., j_l])`.
    pub fn reduced_word(&self) -> (i64, Vec<usize>) {
        let r = self.window.len();
        let mut w = self.clone();
        let mut rev = Vec::new();
        if r >= 2 {
            'outer: loop {
                for i in 0..r {
                    if w.has_right_descent(i) {
                        w = w.mul_simple(i);
                        rev.push(i);
                        continue 'outer;
                    }
                }
                break;
            }
        }
        rev.reverse();
        let k = w.as_rho_pow().expect("descent-free elements have length zero");
        (k, rev)
    }
}

impl fmt::Debug for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.window)
    }
}

impl fmt::Display for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.window)
    }
}
