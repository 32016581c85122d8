//! Double cosets of Young subgroups and the bijection `(lambda, d, mu) -> A`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use super::composition::Composition;
use super::matrix::PeriodicMatrix;
use super::perm::AffinePerm;
use crate::error::{Error, Result};

/// Factorization `w = u d sigma` with `u` in `S_lambda`, `sigma` in `S_mu`, `d` minimal, lengths additive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetData {
    pub d: AffinePerm,
    pub u: AffinePerm,
    pub sigma: AffinePerm,
}

/// `y` is the shortest element of `S_lambda y`.
pub fn is_min_left(lambda: &Composition, y: &AffinePerm) -> bool {
    let inv = y.inv();
    lambda.young_generators().into_iter().all(|k| !inv.has_right_descent(k))
}

/// `y` is the shortest element of `y S_mu`.
pub fn is_min_right(y: &AffinePerm, mu: &Composition) -> bool {
    mu.young_generators().into_iter().all(|k| !y.has_right_descent(k))
}

fn check_periods(lambda: &Composition, mu: &Composition, w: &AffinePerm) -> Result<()> {
    if lambda.sigma() != w.period() {
        return Err(Error::PeriodMismatch(lambda.sigma(), w.period()));
    }
    if mu.sigma() != w.period() {
        return Err(Error::PeriodMismatch(mu.sigma(), w.period()));
    }
    Ok(())
}

pub fn coset_data(lambda: &Composition, mu: &Composition, w: &AffinePerm) -> Result<CosetData> {
    check_periods(lambda, mu, w)?;
    let r = w.period();
    let left = lambda.young_generators();
    let right = mu.young_generators();
    let mut d = w.clone();
    let mut u = AffinePerm::identity(r);
    let mut sigma = AffinePerm::identity(r);
    loop {
        if let Some(&k) = left.iter().find(|&&k| d.has_left_descent(k)) {
            d = d.simple_mul(k);
            u = u.mul_simple(k);
            continue;
        }
        if let Some(&k) = right.iter().find(|&&k| d.has_right_descent(k)) {
            d = d.mul_simple(k);
            sigma = sigma.simple_mul(k);
            continue;
        }
        break;
    }
    Ok(CosetData { d, u, sigma })
}

/// All elements of `S_lambda d S_mu`, sorted.
pub fn enumerate_double_coset(lambda: &Composition, d: &AffinePerm, mu: &Composition) -> Result<Vec<AffinePerm>> {
    check_periods(lambda, mu, d)?;
    let left = lambda.young_generators();
    let right = mu.young_generators();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(d.clone());
    queue.push_back(d.clone());
    while let Some(x) = queue.pop_front() {
        let nbrs = left.iter().map(|&k| x.simple_mul(k)).chain(right.iter().map(|&k| x.mul_simple(k)));
        for y in nbrs {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// `A = (|R^lambda_k intersect d R^mu_l|)`.
pub fn jmath(lambda: &Composition, d: &AffinePerm, mu: &Composition) -> Result<PeriodicMatrix> {
    check_periods(lambda, mu, d)?;
    if lambda.n() != mu.n() {
        return Err(Error::PeriodMismatch(lambda.n(), mu.n()));
    }
    if !is_min_left(lambda, d) || !is_min_right(d, mu) {
        return Err(Error::NotMinimalRep);
    }
    Ok(jmath_unchecked(lambda, d, mu))
}

pub(crate) fn jmath_unchecked(lambda: &Composition, d: &AffinePerm, mu: &Composition) -> PeriodicMatrix {
    let r = d.period() as i64;
    let dinv = d.inv();
    PeriodicMatrix::from_triples(lambda.n(), (1..=r).map(|x| (lambda.block_of(x), mu.block_of(dinv.apply(x)), 1)))
}

/// Inverse of [`jmath`]: the order-preserving representative of the double coset indexed by `A`.
pub fn jmath_inv(a: &PeriodicMatrix) -> (Composition, AffinePerm, Composition) {
    let n = a.n() as i64;
    let lambda = a.ro();
    let mu = a.co();
    let r = lambda.sigma();
    // Row chunks: within row k (1..=n) the positions of R^lambda_k are handed to columns in increasing order.
    let mut row_chunk: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    for k in 1..=n {
        let mut next = *lambda.block(k).start();
        for (i, j, c) in a.entries() {
            if i as i64 == k {
                row_chunk.insert((k, j), next);
                next += c as i64;
            }
        }
    }
    let mut window = vec![0i64; r];
    for l in 1..=n {
        // Rows k (all of Z) meeting column l, in increasing order of k.
        let mut rows: Vec<(i64, u32)> = a
            .entries()
            .filter(|&(_, j, _)| (j - l).rem_euclid(n) == 0)
            .map(|(i, j, c)| (i as i64 - (j - l), c))
            .collect();
        rows.sort();
        let mut y = *mu.block(l).start();
        for (k, c) in rows {
            let t = (k - 1).div_euclid(n);
            let k0 = k - t * n;
            let start = row_chunk[&(k0, l - t * n)] + t * r as i64;
            for off in 0..c as i64 {
                window[(y - 1) as usize] = start + off;
                y += 1;
            }
        }
    }
    (lambda, AffinePerm::from_window_unchecked(window), mu)
}
