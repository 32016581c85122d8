//! Canonical basis `theta_{A,r}` by triangular correction over the bar-support closure of `[A]`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::{OnceLock, RwLock};

use super::SchurElement;
use crate::afcomb::{order_leq, PeriodicMatrix};
use crate::error::{Error, Result};
use crate::ring::LaurentPoly;

/// Closures larger than this abort with `ResourceBound`.
const CLOSURE_CAP: usize = 50_000;

type Cache = RwLock<HashMap<PeriodicMatrix, SchurElement>>;

fn bar_cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cb_cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `bar([A])` in standard coordinates.
pub fn bar_std(a: &PeriodicMatrix) -> Result<SchurElement> {
    if let Some(x) = bar_cache().read().expect("cache lock").get(a) {
        return Ok(x.clone());
    }
    let out = SchurElement::std(a).bar()?;
    Ok(bar_cache().write().expect("cache lock").entry(a.clone()).or_insert(out).clone())
}

/// `theta_{A, sigma(A)}`.
pub fn canonical_basis(a: &PeriodicMatrix) -> Result<SchurElement> {
    if let Some(x) = cb_cache().read().expect("cache lock").get(a) {
        return Ok(x.clone());
    }
    let out = compute_canonical(a)?;
    Ok(cb_cache().write().expect("cache lock").entry(a.clone()).or_insert(out).clone())
}

fn compute_canonical(a: &PeriodicMatrix) -> Result<SchurElement> {
    // Bar-support closure and the bar matrix r_{C,B} (coefficient of [C] in bar[B]).
    let mut closure = BTreeSet::new();
    let mut queue = VecDeque::new();
    let mut bars: BTreeMap<PeriodicMatrix, SchurElement> = BTreeMap::new();
    closure.insert(a.clone());
    queue.push_back(a.clone());
    while let Some(b) = queue.pop_front() {
        let bb = bar_std(&b)?;
        if bb.coeff(&b) != LaurentPoly::one() {
            return Err(Error::TriangularityViolation(format!("diagonal entry of bar at {}", b.compact())));
        }
        for (c, _) in bb.terms() {
            if c != &b && !(c.height() < b.height() && order_leq(c, &b)?) {
                return Err(Error::TriangularityViolation(format!("{} appears in bar of {}", c.compact(), b.compact())));
            }
            if closure.insert(c.clone()) {
                if closure.len() > CLOSURE_CAP {
                    return Err(Error::ResourceBound { what: "bar-support closure", cap: CLOSURE_CAP });
                }
                queue.push_back(c.clone());
            }
        }
        bars.insert(b, bb);
    }
    // Process from the top down; every r_{C,B} with B != C has height(B) > height(C).
    let mut order: Vec<&PeriodicMatrix> = closure.iter().collect();
    order.sort_by_key(|m| std::cmp::Reverse(m.height()));
    let mut p: BTreeMap<PeriodicMatrix, LaurentPoly> = BTreeMap::new();
    p.insert(a.clone(), LaurentPoly::one());
    let mut theta = SchurElement::std(a);
    for c in order {
        if c == a {
            continue;
        }
        let mut q = LaurentPoly::zero();
        for (b, pb) in &p {
            let rcb = bars[b].coeff(c);
            if !rcb.is_zero() {
                q += &(&rcb * &pb.bar());
            }
        }
        if q.is_zero() {
            continue;
        }
        if q.bar() != -&q || q.coeff(0) != 0.into() {
            return Err(Error::TriangularityViolation(format!("correction at {} is {q}", c.compact())));
        }
        let pc = q.negative_part();
        theta.add_term(c.clone(), &pc);
        p.insert(c.clone(), pc);
    }
    if theta.bar()? != theta {
        return Err(Error::TriangularityViolation(format!("theta_{} is not bar-invariant", a.compact())));
    }
    Ok(theta)
}

/// Coordinates of `x` in the canonical basis.
pub fn canonical_coords(x: &SchurElement) -> Result<BTreeMap<PeriodicMatrix, LaurentPoly>> {
    let mut rest = x.clone();
    let mut out = BTreeMap::new();
    while let Some(top) = rest.terms().max_by_key(|(m, _)| m.height()).map(|(m, c)| (m.clone(), c.clone())) {
        let (m, c) = top;
        rest = rest.sub(&canonical_basis(&m)?.scaled(&c))?;
        out.insert(m, c);
    }
    Ok(out)
}

/// `sum c_A theta_A` in standard coordinates.
pub fn from_canonical_coords(n: usize, r: usize, coords: &BTreeMap<PeriodicMatrix, LaurentPoly>) -> Result<SchurElement> {
    let mut out = SchurElement::zero(n, r);
    for (a, c) in coords {
        out = out.add(&canonical_basis(a)?.scaled(c))?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::afcomb::{enumerate_theta, AffinePerm};

    fn v(e: i32) -> LaurentPoly {
        LaurentPoly::v_pow(e)
    }

    #[test]
    fn rank_one_example() {
        let a = PeriodicMatrix::unit(2, 1, 2).add(&PeriodicMatrix::unit(2, 2, 1)).unwrap();
        let expect = SchurElement::std(&a).add(&SchurElement::std(&PeriodicMatrix::diag(&[1, 1])).scaled(&v(-1))).unwrap();
        assert_eq!(canonical_basis(&a).unwrap(), expect);
    }

    #[test]
    fn diagonal_and_shift_elements_are_standard() {
        for lam in crate::afcomb::compositions(2, 3) {
            let d = PeriodicMatrix::diag_of(&lam);
            assert_eq!(canonical_basis(&d).unwrap(), SchurElement::std(&d));
            for m in -2..=2 {
                let j = crate::afcomb::jmath(&lam, &AffinePerm::rho_pow(3, 3 * m), &lam).unwrap();
                assert_eq!(j, d.eta(m));
                assert_eq!(canonical_basis(&j).unwrap(), SchurElement::std(&j));
            }
        }
    }

    #[test]
    fn unitriangular_and_bar_invariant() {
        for r in 1..=3 {
            for a in enumerate_theta(2, r, if r == 3 { 1 } else { 2 }) {
                let th = canonical_basis(&a).unwrap();
                assert_eq!(th.bar().unwrap(), th);
                assert_eq!(th.coeff(&a), LaurentPoly::one());
                for (b, c) in th.terms() {
                    if b != &a {
                        assert!(c.in_vinv_z_vinv(), "{c}");
                        assert!(order_leq(b, &a).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_coords_round_trip() {
        let all = enumerate_theta(2, 2, 2);
        let mut x = SchurElement::zero(2, 2);
        for (k, a) in all.iter().enumerate().step_by(2) {
            x = x.add(&SchurElement::std(a).scaled(&LaurentPoly::monomial(k as i32 % 3 - 1, k as i64 + 1))).unwrap();
        }
        let cc = canonical_coords(&x).unwrap();
        assert_eq!(from_canonical_coords(2, 2, &cc).unwrap(), x);
    }
}
