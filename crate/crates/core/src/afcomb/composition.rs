//! Compositions in `Lambda(n, r)` and integer vectors in `Z^n_Delta`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One period `(lambda_1, ..., lambda_n)` of a periodic composition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition { parts }
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sigma(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Block index `i + kn` of the block `R^lambda_{i+kn}` containing `x`.
    pub fn block_of(&self, x: i64) -> i64 {
        let r = self.sigma() as i64;
        let n = self.n() as i64;
        let k = (x - 1).div_euclid(r);
        let mut rest = (x - 1).rem_euclid(r) as usize;
        for (i, &p) in self.parts.iter().enumerate() {
            if rest < p {
                return i as i64 + 1 + k * n;
            }
            rest -= p;
        }
        unreachable!("x lies in some block")
    }

    /// The positions `R^lambda_{i+kn}` (1-based block index `i + kn`).
    pub fn block(&self, idx: i64) -> std::ops::RangeInclusive<i64> {
        let n = self.n() as i64;
        let r = self.sigma() as i64;
        let k = (idx - 1).div_euclid(n);
        let i = (idx - 1).rem_euclid(n) as usize;
        let start = k * r + self.parts[..i].iter().sum::<usize>() as i64 + 1;
        start..=start + self.parts[i] as i64 - 1
    }

    /// `i_lambda = (1^lambda_1, 2^lambda_2, ..., n^lambda_n)`.
    pub fn index_vector(&self) -> Vec<i64> {
        self.parts.iter().enumerate().flat_map(|(i, &p)| std::iter::repeat_n(i as i64 + 1, p)).collect()
    }

    /// The simple reflections `s_k` (1 <= k < r) generating the Young subgroup `S_lambda`.
    pub fn young_generators(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut pos = 0usize;
        for &p in &self.parts {
            for k in pos + 1..pos + p {
                out.push(k);
            }
            pos += p;
        }
        out
    }

    /// Length of the longest element of `S_lambda`.
    pub fn longest_length(&self) -> usize {
        self.parts.iter().map(|&p| p * p.saturating_sub(1) / 2).sum()
    }

    pub fn to_zvector(&self) -> ZVector {
        ZVector::new(self.parts.iter().map(|&p| p as i64).collect())
    }

    /// Weight of an index vector: `lambda_i = #{t : i_t = i mod n}`.
    pub fn weight_of(n: usize, idx: &[i64]) -> Composition {
        let mut parts = vec![0usize; n];
        for &x in idx {
            parts[(x - 1).rem_euclid(n as i64) as usize] += 1;
        }
        Composition { parts }
    }

    pub fn try_from_zvector(v: &ZVector) -> Option<Composition> {
        v.parts().iter().all(|&x| x >= 0).then(|| Composition::new(v.parts().iter().map(|&x| x as usize).collect()))
    }
}

/// All of `Lambda(n, r)` in lexicographically decreasing order of parts.
pub fn compositions(n: usize, r: usize) -> Vec<Composition> {
    fn rec(n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if cur.len() + 1 == n {
            cur.push(r);
            out.push(Composition::new(cur.clone()));
            cur.pop();
            return;
        }
        for p in (0..=r).rev() {
            cur.push(p);
            rec(n, r - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if r == 0 {
            out.push(Composition::new(Vec::new()));
        }
        return out;
    }
    rec(n, r, &mut Vec::new(), &mut out);
    out
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// One period of an element of `Z^n_Delta`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZVector {
    parts: Vec<i64>,
}

impl ZVector {
    pub fn new(parts: Vec<i64>) -> Self {
        ZVector { parts }
    }

    pub fn zero(n: usize) -> Self {
        ZVector { parts: vec![0; n] }
    }

    /// The unit vector `e_i`, 1-based and read periodically.
    pub fn unit(n: usize, i: i64) -> Self {
        let mut parts = vec![0; n];
        parts[(i - 1).rem_euclid(n as i64) as usize] = 1;
        ZVector { parts }
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Periodic component `lambda_i`.
    pub fn get(&self, i: i64) -> i64 {
        self.parts[(i - 1).rem_euclid(self.n() as i64) as usize]
    }

    pub fn sum(&self) -> i64 {
        self.parts.iter().sum()
    }

    pub fn is_nonneg(&self) -> bool {
        self.parts.iter().all(|&x| x >= 0)
    }

    /// `<lambda, mu> = sum_i lambda_i mu_i - sum_i lambda_i mu_{i+1}`.
    pub fn bilinear(&self, other: &ZVector) -> Result<i64> {
        if self.n() != other.n() {
            return Err(Error::PeriodMismatch(self.n(), other.n()));
        }
        let n = self.n() as i64;
        Ok((1..=n).map(|i| self.get(i) * other.get(i) - self.get(i) * other.get(i + 1)).sum())
    }

    pub fn scale(&self, k: i64) -> ZVector {
        ZVector { parts: self.parts.iter().map(|x| x * k).collect() }
    }
}

impl Add for &ZVector {
    type Output = ZVector;
    fn add(self, rhs: &ZVector) -> ZVector {
        assert_eq!(self.n(), rhs.n(), "period mismatch");
        ZVector { parts: self.parts.iter().zip(&rhs.parts).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &ZVector {
    type Output = ZVector;
    fn sub(self, rhs: &ZVector) -> ZVector {
        assert_eq!(self.n(), rhs.n(), "period mismatch");
        ZVector { parts: self.parts.iter().zip(&rhs.parts).map(|(a, b)| a - b).collect() }
    }
}

impl Neg for &ZVector {
    type Output = ZVector;
    fn neg(self) -> ZVector {
        self.scale(-1)
    }
}

impl fmt::Debug for ZVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn bilinear_examples() {
        let e1 = ZVector::unit(2, 1);
        let e2 = ZVector::unit(2, 2);
        assert_eq!(e1.bilinear(&e1).unwrap(), 1);
        assert_eq!(e1.bilinear(&e2).unwrap(), -1);
        let one = ZVector::new(vec![1, 1]);
        assert_eq!(one.bilinear(&one).unwrap(), 0);
        assert_eq!(one.bilinear(&ZVector::zero(3)), Err(Error::PeriodMismatch(2, 3)));
    }

    #[test]
    fn blocks_partition_a_window() {
        let lam = Composition::new(vec![2, 0, 1]);
        assert_eq!(lam.sigma(), 3);
        let mut seen = Vec::new();
        for idx in -6..=9 {
            for x in lam.block(idx) {
                assert_eq!(lam.block_of(x), idx);
                seen.push(x);
            }
        }
        seen.sort();
        let lo = *lam.block(-6).start();
        let hi = *lam.block(9).end();
        assert_eq!(seen, (lo..=hi).collect::<Vec<_>>());
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(2, 3).len(), 4);
        assert_eq!(compositions(3, 4).len(), 15);
        assert_eq!(compositions(2, 0), vec![Composition::new(vec![0, 0])]);
        for c in compositions(3, 3) {
            assert_eq!(c.sigma(), 3);
        }
    }

    #[test]
    fn young_data() {
        let lam = Composition::new(vec![3, 0, 2]);
        assert_eq!(lam.index_vector(), vec![1, 1, 1, 3, 3]);
        assert_eq!(lam.young_generators(), vec![1, 2, 4]);
        assert_eq!(lam.longest_length(), 4);
    }

    proptest! {
        #[test]
        fn bilinear_is_additive(a in proptest::collection::vec(-5i64..5, 3),
                                b in proptest::collection::vec(-5i64..5, 3),
                                c in proptest::collection::vec(-5i64..5, 3)) {
            let (a, b, c) = (ZVector::new(a), ZVector::new(b), ZVector::new(c));
            prop_assert_eq!((&a + &b).bilinear(&c).unwrap(), a.bilinear(&c).unwrap() + b.bilinear(&c).unwrap());
            prop_assert_eq!(a.bilinear(&(&b + &c)).unwrap(), a.bilinear(&b).unwrap() + a.bilinear(&c).unwrap());
        }
    }
}
