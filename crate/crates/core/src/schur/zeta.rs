//! The representation `zeta_r` of the quantum loop algebra on `Omega^{(x) r}`, read as Schur elements.

use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use serde::Serialize;

use super::{canonical_basis, SchurElement};
use crate::afcomb::{compositions, Composition, PeriodicMatrix};
use crate::error::Result;
use crate::ring::LaurentPoly;
use crate::tensor::{Generator, TensorVector};

type Cache = RwLock<HashMap<(usize, usize, Generator), SchurElement>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `zeta_r(g)` in standard coordinates.
pub fn zeta(n: usize, r: usize, g: Generator) -> Result<SchurElement> {
    if let Some(x) = cache().read().expect("cache lock").get(&(n, r, g)) {
        return Ok(x.clone());
    }
    let mut images = BTreeMap::new();
    for mu in compositions(n, r) {
        let img = TensorVector::basis(n, &mu.index_vector()).act_generator(g).to_induced();
        images.insert(mu, img);
    }
    let out = SchurElement::from_images(n, r, &images)?;
    Ok(cache().write().expect("cache lock").entry((n, r, g)).or_insert(out).clone())
}

/// `zeta_r(theta_A^+) [diag(lambda)] = theta_{A + diag(lambda - co(A)), r}`, or zero.
pub fn zeta_theta_plus(a: &PeriodicMatrix, lambda: &Composition, r: usize) -> Result<SchurElement> {
    let diff = &lambda.to_zvector() - &a.col_sums();
    if !diff.is_nonneg() || lambda.sigma() != r {
        return Ok(SchurElement::zero(a.n(), r));
    }
    canonical_basis(&a.add_diag(&diff)?)
}

/// One checked relation with both sides.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
    pub lhs: serde_json::Value,
    pub rhs: serde_json::Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationCertificate {
    pub n: usize,
    pub r: usize,
    pub pass: bool,
    pub checks: Vec<RelationCheck>,
}

/// Cartan matrix of affine type `A_{n-1}` (`n >= 2`).
pub fn cartan(n: usize, i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if n == 2 {
        -2
    } else if j == i % n + 1 || i == j % n + 1 {
        -1
    } else {
        0
    }
}

fn push(out: &mut Vec<RelationCheck>, name: String, lhs: SchurElement, rhs: SchurElement) {
    let pass = lhs == rhs;
    let (lhs, rhs) = if pass { (serde_json::Value::Null, serde_json::Value::Null) } else { (lhs.to_json(), rhs.to_json()) };
    out.push(RelationCheck { name, pass, lhs, rhs });
}

fn serre(n: usize, r: usize, i: usize, j: usize, f: impl Fn(usize) -> Generator) -> Result<SchurElement> {
    let m = (1 - cartan(n, i, j)) as u32;
    let gi = zeta(n, r, f(i))?;
    let gj = zeta(n, r, f(j))?;
    let one = SchurElement::identity(n, r);
    let mut powers = vec![one];
    for k in 1..=m as usize {
        powers.push(powers[k - 1].mul(&gi)?);
    }
    let mut total = SchurElement::zero(n, r);
    for a in 0..=m {
        let sign = if a % 2 == 0 { 1 } else { -1 };
        let c = LaurentPoly::gauss_binom(m as i64, a).scale(&sign.into());
        let term = powers[a as usize].mul(&gj)?.mul(&powers[(m - a) as usize])?;
        total = total.add(&term.scaled(&c))?;
    }
    Ok(total)
}

/// Checks (QGL1)-(QGL6) for the images `zeta_r(g)`.
pub fn check_generator_relations(n: usize, r: usize) -> Result<RelationCertificate> {
    let z = |g| zeta(n, r, g);
    let v = |e| LaurentPoly::v_pow(e);
    let nxt = |i: usize| i % n + 1;
    let delta = |a: usize, b: usize| (a == b) as i32;
    let mut checks = Vec::new();
    let id = SchurElement::identity(n, r);
    let ktilde = |i: usize, e: i64| -> Result<SchurElement> { z(Generator::K(i, e))?.mul(&z(Generator::K(nxt(i), -e))?) };
    for i in 1..=n {
        push(&mut checks, format!("QGL1 K{i} K{i}^-1"), z(Generator::K(i, 1))?.mul(&z(Generator::K(i, -1))?)?, id.clone());
        for j in 1..=n {
            let (ki, kj) = (z(Generator::K(i, 1))?, z(Generator::K(j, 1))?);
            push(&mut checks, format!("QGL1 K{i} K{j}"), ki.mul(&kj)?, kj.mul(&ki)?);
            let (ej, fj) = (z(Generator::E(j))?, z(Generator::F(j))?);
            let e = delta(i, j) - delta(i, nxt(j));
            push(&mut checks, format!("QGL2 K{i} E{j}"), ki.mul(&ej)?, ej.mul(&ki)?.scaled(&v(e)));
            push(&mut checks, format!("QGL2 K{i} F{j}"), ki.mul(&fj)?, fj.mul(&ki)?.scaled(&v(-e)));
            let ei = z(Generator::E(i))?;
            let lhs = ei.mul(&fj)?.sub(&fj.mul(&ei)?)?.scaled(&(&v(1) - &v(-1)));
            let rhs = if i == j { ktilde(i, 1)?.sub(&ktilde(i, -1)?)? } else { SchurElement::zero(n, r) };
            push(&mut checks, format!("QGL3 E{i} F{j}"), lhs, rhs);
            if i != j {
                push(&mut checks, format!("QGL4 E{i} E{j}"), serre(n, r, i, j, Generator::E)?, SchurElement::zero(n, r));
                push(&mut checks, format!("QGL5 F{i} F{j}"), serre(n, r, i, j, Generator::F)?, SchurElement::zero(n, r));
            }
        }
    }
    let zs = [Generator::Z(1, true), Generator::Z(1, false), Generator::Z(2, true), Generator::Z(2, false)];
    let mut others: Vec<Generator> = zs.to_vec();
    for i in 1..=n {
        others.extend([Generator::E(i), Generator::F(i), Generator::K(i, 1)]);
    }
    for s in zs {
        let zs = z(s)?;
        for &g in &others {
            let zg = z(g)?;
            push(&mut checks, format!("QGL6 {s:?} {g:?}"), zs.mul(&zg)?, zg.mul(&zs)?);
        }
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(RelationCertificate { n, r, pass, checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_small() {
        for (n, r) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
            let cert = check_generator_relations(n, r).unwrap();
            let failed: Vec<_> = cert.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect();
            assert!(failed.is_empty(), "n={n} r={r}: {failed:?}");
        }
    }

    #[test]
    fn theta_plus_examples() {
        let e12 = PeriodicMatrix::unit(2, 1, 2);
        let lam = Composition::new(vec![1, 1]);
        let expect = canonical_basis(&e12.add(&PeriodicMatrix::unit(2, 1, 1)).unwrap()).unwrap();
        assert_eq!(zeta_theta_plus(&e12, &lam, 2).unwrap(), expect);
        assert!(zeta_theta_plus(&e12, &Composition::new(vec![2, 0]), 2).unwrap().is_zero());
        let d = PeriodicMatrix::diag(&[2, 1]);
        assert_eq!(zeta_theta_plus(&PeriodicMatrix::zero(2), &Composition::new(vec![2, 1]), 3).unwrap(), SchurElement::std(&d));
    }

    #[test]
    fn divided_powers_match_theta_plus() {
        // zeta(E_i)^a [diag(lambda)] = [a]! theta_{a E_{i,i+1} + diag(lambda - co)}.
        for n in 2..=3usize {
            for r in 1..=3 {
                for i in 1..=n {
                    let e = zeta(n, r, Generator::E(i)).unwrap();
                    for lam in compositions(n, r) {
                        let mut cur = SchurElement::std(&PeriodicMatrix::diag_of(&lam));
                        let mut fact = LaurentPoly::one();
                        for a in 1..=2u32 {
                            cur = e.mul(&cur).unwrap();
                            fact = &fact * &LaurentPoly::quantum_int(a as i64);
                            let ea = PeriodicMatrix::unit(n, i as i64, i as i64 + 1).scale(a);
                            let expect = zeta_theta_plus(&ea, &lam, r).unwrap().scaled(&fact);
                            assert_eq!(cur, expect, "n={n} r={r} i={i} a={a} lam={lam:?}");
                        }
                    }
                }
            }
        }
    }
}
