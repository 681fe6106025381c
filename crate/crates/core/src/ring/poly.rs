//! Dense polynomials over F_p, little-endian coefficient vectors.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{distinct_prime_factors, mul_mod, pow_mod};

fn trim(a: &mut Vec<u64>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
}

fn degree(a: &[u64]) -> usize {
    a.iter().rposition(|&c| c != 0).unwrap_or(0)
}

/// Remainder of `a` modulo the monic polynomial `f`.
fn rem_monic(mut a: Vec<u64>, f: &[u64], p: u64) -> Vec<u64> {
    let d = f.len() - 1;
    if a.len() <= d {
        a.resize(d.max(1), 0);
        return a;
    }
    for top in (d..a.len()).rev() {
        let c = a[top];
        if c == 0 {
            continue;
        }
        let neg = p - c;
        for j in 0..d {
            let idx = top - d + j;
            a[idx] = (a[idx] + mul_mod(neg, f[j], p)) % p;
        }
        a[top] = 0;
    }
    a.truncate(d.max(1));
    a
}

fn mul_mod_poly(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    rem_monic(prod, f, p)
}

fn pow_mod_poly(base: &[u64], mut exp: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem_monic(vec![1], f, p);
    let mut base = rem_monic(base.to_vec(), f, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_poly(&acc, &base, f, p);
        }
        exp >>= 1;
        if exp > 0 {
            base = mul_mod_poly(&base, &base, f, p);
        }
    }
    acc
}

fn gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        // make b monic, then a mod b
        let lead = b[degree(&b)];
        let inv = pow_mod(lead, p - 2, p);
        for c in b.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
        b.truncate(degree(&b) + 1);
        let mut r = rem_monic(a, &b, p);
        trim(&mut r);
        a = b;
        b = r;
    }
    a
}

/// Rabin's test: a monic `f` of degree `d` is irreducible over F_p iff
/// `x^(p^d) = x mod f` and `gcd(x^(p^(d/r)) - x, f) = 1` for each prime `r | d`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = rem_monic(vec![0, 1], f, p);
    // frob[i] = x^(p^i) mod f
    let mut frob = Vec::with_capacity(d + 1);
    frob.push(x.clone());
    for i in 0..d {
        let next = pow_mod_poly(&frob[i], p, f, p);
        frob.push(next);
    }
    if frob[d] != x {
        return false;
    }
    distinct_prime_factors(d as u64).into_iter().all(|r| {
        let mut h = frob[d / r as usize].clone();
        h[1] = (h[1] + p - 1) % p;
        let g = gcd(f.to_vec(), h, p);
        degree(&g) == 0
    })
}

/// Smallest monic irreducible polynomial of degree `d` over F_p, where
/// candidates are ordered by the integer `sum c_i p^i` of their lower
/// coefficients.
pub fn smallest_irreducible(p: u64, d: u32) -> Vec<u64> {
    let d = d as usize;
    let mut candidate = vec![0u64; d + 1];
    candidate[d] = 1;
    loop {
        if candidate[0] != 0 && is_irreducible(&candidate, p) {
            return candidate;
        }
        // increment the lower d coefficients as a base-p counter
        let mut i = 0;
        loop {
            candidate[i] += 1;
            if candidate[i] < p {
                break;
            }
            candidate[i] = 0;
            i += 1;
            assert!(i < d, "an irreducible polynomial of every degree exists");
        }
    }
}
