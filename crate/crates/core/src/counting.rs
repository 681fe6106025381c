//! Closed-form representation counts.
//!
//! For `R = R_1 + ... + R_n` with `m_i = |M_i|` and `q_i = |R_i/M_i|`, every
//! count factors over the components, and each local factor depends only on
//! `(m_i, q_i)` and on which residue class the local coordinate lies in:
//!
//! * sums of `k` units: `m^(k-1) / q * mu`, with
//!   `mu = (q-1)^k + (-1)^k (q-1)` on `M` and `(q-1)^k + (-1)^(k+1)` off it;
//! * sums of `k` exceptional units: `(-1)^k m^(k-1) / q * rho`, with
//!   `rho = q * sum_{j <= k, j = c mod M} C(k, j) + (2-q)^k - 2^k`;
//! * products of `k` exceptional units: `m^(k-1) / (q-1) * sigma`, with
//!   `sigma = (q-2)^k + (-1)^k (q-2)` on `1 + M` and `(q-2)^k + (-1)^(k+1)`
//!   elsewhere in `R^*`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::binomial;
use crate::count::Count;
use crate::error::{Error, Result};
use crate::ring::{Element, LocalRingSpec, RingSpec};

fn check_k(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::KTooSmall { k, min: 2 });
    }
    Ok(())
}

fn sign(k: u32) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn exact_div(num: BigInt, den: u64) -> Result<BigInt> {
    let den = BigInt::from(den);
    if !(&num % &den).is_zero() {
        return Err(Error::Invariant("non-integral local factor"));
    }
    Ok(num / den)
}

pub fn mu_local(spec: &LocalRingSpec, k: u32, in_max_ideal: bool) -> Result<BigInt> {
    check_k(k)?;
    let q1 = BigInt::from(spec.residue_size() - 1);
    let lead = q1.pow(k);
    Ok(if in_max_ideal {
        lead + sign(k) * q1
    } else {
        lead - sign(k)
    })
}

/// Local factor of the exceptional sum count. `c_residue` is a code in the
/// residue field; the binomial sum runs over `j` whose image `j * 1` equals
/// it, so it is empty when `c_residue` is outside the prime subfield.
pub fn rho_local(spec: &LocalRingSpec, k: u32, c_residue: u64) -> Result<BigInt> {
    check_k(k)?;
    let q = BigInt::from(spec.residue_size());
    let binomials: BigInt = (0..=k)
        .filter(|&j| spec.int_residue(j as u64) == c_residue)
        .map(|j| BigInt::from(binomial(k, j)))
        .sum();
    let two = BigInt::from(2);
    Ok(&q * binomials + (&two - &q).pow(k) - two.pow(k))
}

pub fn sigma_local(spec: &LocalRingSpec, k: u32, in_one_plus_m: bool) -> Result<BigInt> {
    check_k(k)?;
    let q = spec.residue_size();
    if q <= 2 {
        return Err(Error::ResidueFieldTooSmall(q));
    }
    let q2 = BigInt::from(q - 2);
    let lead = q2.pow(k);
    Ok(if in_one_plus_m {
        lead + sign(k) * q2
    } else {
        lead - sign(k)
    })
}

fn m_pow(spec: &LocalRingSpec, k: u32) -> BigInt {
    BigInt::from(spec.max_ideal_size()).pow(k - 1)
}

/// Number of `k`-tuples of units summing to `c`.
pub fn psi(ring: &RingSpec, k: u32, c: &Element) -> Result<Count> {
    psi_with(ring, k, c, mu_local)
}

/// [`psi`] with the local `mu` factor supplied by the caller.
pub fn psi_with<F>(ring: &RingSpec, k: u32, c: &Element, mu: F) -> Result<Count>
where
    F: Fn(&LocalRingSpec, u32, bool) -> Result<BigInt>,
{
    check_k(k)?;
    ring.check(c)?;
    let mut acc = BigInt::one();
    for (spec, &ci) in ring.components().iter().zip(c.coords()) {
        let in_m = spec.residue(ci) == 0;
        let local = exact_div(m_pow(spec, k) * mu(spec, k, in_m)?, spec.residue_size())?;
        if local < BigInt::zero() {
            return Err(Error::Invariant("negative local unit-sum factor"));
        }
        acc *= local;
    }
    Count::try_from_signed(acc)
}

/// `|R^**| = prod m_i (q_i - 2)`.
pub fn exceptional_count(ring: &RingSpec) -> Count {
    ring.components()
        .iter()
        .map(|c| Count::from(c.max_ideal_size()) * Count::from(c.residue_size() - 2))
        .product()
}

/// Number of `k`-tuples of exceptional units summing to `c`.
pub fn phi(ring: &RingSpec, k: u32, c: &Element) -> Result<Count> {
    check_k(k)?;
    ring.check(c)?;
    let mut acc = BigInt::one();
    for (spec, &ci) in ring.components().iter().zip(c.coords()) {
        let rho = rho_local(spec, k, spec.residue(ci))?;
        let local = exact_div(sign(k) * m_pow(spec, k) * rho, spec.residue_size())?;
        if local < BigInt::zero() {
            return Err(Error::Invariant("negative local exceptional-sum factor"));
        }
        acc *= local;
    }
    Count::try_from_signed(acc)
}

/// Number of `k`-tuples of exceptional units whose product is the unit `u`.
pub fn theta(ring: &RingSpec, k: u32, u: &Element) -> Result<Count> {
    check_k(k)?;
    if ring.components().iter().any(|c| c.residue_size() == 2) {
        return Err(Error::NoExceptionalUnits);
    }
    if !ring.is_unit(u)? {
        return Err(Error::NotAUnit);
    }
    let mut acc = BigInt::one();
    for (spec, &ui) in ring.components().iter().zip(u.coords()) {
        let sigma = sigma_local(spec, k, spec.residue(ui) == 1)?;
        let local = exact_div(m_pow(spec, k) * sigma, spec.residue_size() - 1)?;
        if local < BigInt::zero() {
            return Err(Error::Invariant("negative local exceptional-product factor"));
        }
        acc *= local;
    }
    Count::try_from_signed(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn gf(p: u64, d: u32) -> LocalRingSpec {
        LocalRingSpec::gf(p, d).unwrap()
    }

    fn single(c: LocalRingSpec) -> RingSpec {
        RingSpec::new(vec![c]).unwrap()
    }

    fn el(v: &[u64]) -> Element {
        Element::new(v.to_vec())
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu_local(&gf(5, 1), 2, true).unwrap(), BigInt::from(20));
        assert_eq!(mu_local(&gf(2, 1), 2, false).unwrap(), BigInt::from(0));
        assert_eq!(mu_local(&gf(3, 1), 3, true).unwrap(), BigInt::from(6));
        assert_eq!(mu_local(&gf(3, 1), 1, true), Err(Error::KTooSmall { k: 1, min: 2 }));
    }

    #[test]
    fn psi_values() {
        assert_eq!(psi(&single(gf(5, 1)), 2, &el(&[0])).unwrap(), 4);
        let z4 = single(LocalRingSpec::zpe(2, 2).unwrap());
        assert_eq!(psi(&z4, 2, &el(&[0])).unwrap(), 2);
        let z6 = RingSpec::new(vec![LocalRingSpec::zpe(2, 1).unwrap(), gf(3, 1)]).unwrap();
        // 1 in Z/6 is (1, 1)
        assert_eq!(psi(&z6, 2, &el(&[1, 1])).unwrap(), 0);
    }

    #[test]
    fn psi_two_one_is_exceptional_count() {
        for ring in [single(gf(7, 1)), single(LocalRingSpec::zpe(3, 2).unwrap()), single(gf(2, 3))] {
            assert_eq!(psi(&ring, 2, &ring.one()).unwrap(), exceptional_count(&ring));
        }
    }

    #[test]
    fn exceptional_counts() {
        assert_eq!(exceptional_count(&single(gf(7, 1))), 5);
        assert_eq!(exceptional_count(&single(LocalRingSpec::zpe(3, 2).unwrap())), 3);
        let z12 = RingSpec::new(vec![LocalRingSpec::zpe(2, 2).unwrap(), gf(3, 1)]).unwrap();
        assert_eq!(exceptional_count(&z12), 0);
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho_local(&gf(5, 1), 2, 1).unwrap(), BigInt::from(15));
        assert_eq!(rho_local(&gf(3, 1), 3, 0).unwrap(), BigInt::from(-3));
        // `a` in GF(4) is code 2, outside the prime subfield
        assert_eq!(rho_local(&gf(2, 2), 2, 2).unwrap(), BigInt::from(0));
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(&single(gf(5, 1)), 2, &el(&[1])).unwrap(), 3);
        assert_eq!(phi(&single(LocalRingSpec::zpe(3, 2).unwrap()), 2, &el(&[1])).unwrap(), 3);
        assert_eq!(phi(&single(gf(2, 2)), 2, &el(&[0])).unwrap(), 2);
        assert_eq!(phi(&single(gf(2, 2)), 2, &el(&[2])).unwrap(), 0);
        assert_eq!(phi(&single(gf(3, 1)), 3, &el(&[0])).unwrap(), 1);
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma_local(&gf(5, 1), 2, true).unwrap(), BigInt::from(12));
        assert_eq!(sigma_local(&gf(5, 1), 3, false).unwrap(), BigInt::from(28));
        assert_eq!(sigma_local(&gf(3, 1), 2, false).unwrap(), BigInt::from(0));
        assert_eq!(sigma_local(&gf(2, 1), 2, false), Err(Error::ResidueFieldTooSmall(2)));
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta(&single(gf(5, 1)), 2, &el(&[1])).unwrap(), 3);
        assert_eq!(theta(&single(gf(2, 2)), 2, &el(&[1])).unwrap(), 2);
        assert_eq!(theta(&single(gf(5, 1)), 3, &el(&[2])).unwrap(), 7);
        assert_eq!(theta(&single(gf(7, 1)), 3, &el(&[3])).unwrap(), 21);
    }

    #[test]
    fn theta_errors() {
        let z12 = RingSpec::new(vec![LocalRingSpec::zpe(2, 2).unwrap(), gf(3, 1)]).unwrap();
        assert_eq!(theta(&z12, 2, &z12.one()), Err(Error::NoExceptionalUnits));
        assert_eq!(theta(&single(gf(5, 1)), 2, &el(&[0])), Err(Error::NotAUnit));
    }

    #[test]
    fn psi_with_detects_broken_mu() {
        let f5 = single(gf(5, 1));
        let broken = psi_with(&f5, 2, &el(&[0]), |s, k, m| mu_local(s, k, m).map(|v| v + 1));
        assert_eq!(broken, Err(Error::Invariant("non-integral local factor")));
    }
}
