use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::poly::smallest_irreducible;
use crate::arith::{is_prime, mul_mod};
use crate::error::{Error, Result};

const MAX_DIGITS: usize = 64;

/// The three families of finite local rings supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LocalKind {
    /// `Z/p^e`
    Zpe,
    /// `GF(p^d)`
    Gf,
    /// `GF(p^d)[x]/(x^e)`
    NilExt,
}

/// Structured view of a local coordinate.
///
/// `Int` for `Z/p^e`, `Poly` holds the `d` little-endian coefficients of a
/// `GF(p^d)` element, `Nil` holds `e` such coefficient vectors, one for each
/// power `x^0 .. x^(e-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalElement {
    Int(u64),
    Poly(Vec<u64>),
    Nil(Vec<Vec<u64>>),
}

/// One local component `R_i`.
///
/// Elements are stored as integer codes in `[0, size)`: the integer itself
/// for `Z/p^e`, `sum c_j p^j` for `GF(p^d)`, and `sum g_i q^i` over the
/// `GF(q)` codes `g_i` for `GF(q)[x]/(x^e)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocalRingSpec {
    kind: LocalKind,
    p: u64,
    d: u32,
    e: u32,
    q: u64,
    size: u64,
    modulus: Vec<u64>,
}

fn checked_size(p: u64, exponent: u64) -> Result<u64> {
    u32::try_from(exponent)
        .ok()
        .and_then(|x| p.checked_pow(x))
        .filter(|&s| s < 1 << 63)
        .ok_or(Error::TooLarge { base: p, exponent })
}

impl LocalRingSpec {
    pub fn new(kind: LocalKind, p: u64, d: u32, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if d == 0 {
            return Err(Error::InvalidParameter("degree d must be at least 1"));
        }
        if e == 0 {
            return Err(Error::InvalidParameter("exponent e must be at least 1"));
        }
        match kind {
            LocalKind::Zpe if d != 1 => {
                return Err(Error::InvalidParameter("Z/p^e has degree 1"))
            }
            LocalKind::Gf if e != 1 => return Err(Error::InvalidParameter("GF(q) has exponent 1")),
            _ => {}
        }
        let q = checked_size(p, d as u64)?;
        let size = checked_size(p, d as u64 * e as u64)?;
        let modulus = if d == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(p, d)
        };
        Ok(Self { kind, p, d, e, q, size, modulus })
    }

    pub fn zpe(p: u64, e: u32) -> Result<Self> {
        Self::new(LocalKind::Zpe, p, 1, e)
    }

    pub fn gf(p: u64, d: u32) -> Result<Self> {
        Self::new(LocalKind::Gf, p, d, 1)
    }

    pub fn nilext(p: u64, d: u32, e: u32) -> Result<Self> {
        Self::new(LocalKind::NilExt, p, d, e)
    }

    pub fn kind(&self) -> LocalKind {
        self.kind
    }

    pub fn characteristic_prime(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    /// `q = |R/M|`.
    pub fn residue_size(&self) -> u64 {
        self.q
    }

    /// `m = |M|`.
    pub fn max_ideal_size(&self) -> u64 {
        self.size / self.q
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    /// Number of units, `|R| - m`.
    pub fn unit_count(&self) -> u64 {
        self.size - self.max_ideal_size()
    }

    /// Monic modulus of the residue field, little-endian, degree `d`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn contains(&self, a: u64) -> bool {
        a < self.size
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    /// Image of `a` in the residue field `R/M`, as a `GF(q)` code.
    pub fn residue(&self, a: u64) -> u64 {
        match self.kind {
            LocalKind::Zpe => a % self.p,
            LocalKind::Gf => a,
            LocalKind::NilExt => a % self.q,
        }
    }

    /// Image of the integer `j` under `Z -> R/M`.
    pub fn int_residue(&self, j: u64) -> u64 {
        j % self.p
    }

    pub fn is_unit(&self, a: u64) -> bool {
        self.residue(a) != 0
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        match self.kind {
            LocalKind::Zpe => (a + b) % self.size,
            LocalKind::Gf => self.gf_add(a, b),
            LocalKind::NilExt => self.nil_zip(a, b, |x, y| self.gf_add(x, y)),
        }
    }

    pub fn neg(&self, a: u64) -> u64 {
        match self.kind {
            LocalKind::Zpe => (self.size - a) % self.size,
            LocalKind::Gf => self.gf_neg(a),
            LocalKind::NilExt => self.nil_zip(a, 0, |x, _| self.gf_neg(x)),
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match self.kind {
            LocalKind::Zpe => mul_mod(a, b, self.size),
            LocalKind::Gf => self.gf_mul(a, b),
            LocalKind::NilExt => self.nil_mul(a, b),
        }
    }

    pub fn decode(&self, a: u64) -> LocalElement {
        match self.kind {
            LocalKind::Zpe => LocalElement::Int(a),
            LocalKind::Gf => LocalElement::Poly(self.gf_digits(a)),
            LocalKind::NilExt => {
                let mut rest = a;
                let parts = (0..self.e)
                    .map(|_| {
                        let g = rest % self.q;
                        rest /= self.q;
                        self.gf_digits(g)
                    })
                    .collect();
                LocalElement::Nil(parts)
            }
        }
    }

    pub fn encode(&self, element: &LocalElement) -> Result<u64> {
        let out_of_range = |value| Error::CoordinateOutOfRange { component: 0, value, size: self.size };
        match (self.kind, element) {
            (LocalKind::Zpe, LocalElement::Int(v)) => {
                if *v < self.size {
                    Ok(*v)
                } else {
                    Err(out_of_range(*v))
                }
            }
            (LocalKind::Gf, LocalElement::Poly(digits)) => self.gf_encode(digits),
            (LocalKind::NilExt, LocalElement::Nil(parts)) => {
                if parts.len() != self.e as usize {
                    return Err(Error::InvalidParameter("wrong number of x-coefficients"));
                }
                let mut code = 0u64;
                for part in parts.iter().rev() {
                    code = code * self.q + self.gf_encode(part)?;
                }
                Ok(code)
            }
            _ => Err(Error::InvalidParameter("element shape does not match the component kind")),
        }
    }

    fn gf_digits(&self, mut a: u64) -> Vec<u64> {
        (0..self.d)
            .map(|_| {
                let c = a % self.p;
                a /= self.p;
                c
            })
            .collect()
    }

    fn gf_encode(&self, digits: &[u64]) -> Result<u64> {
        if digits.len() != self.d as usize {
            return Err(Error::InvalidParameter("wrong number of field coefficients"));
        }
        let mut code = 0u64;
        for &c in digits.iter().rev() {
            if c >= self.p {
                return Err(Error::CoordinateOutOfRange { component: 0, value: c, size: self.p });
            }
            code = code * self.p + c;
        }
        Ok(code)
    }

    fn gf_add(&self, a: u64, b: u64) -> u64 {
        if self.d == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..self.d {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    fn gf_neg(&self, a: u64) -> u64 {
        if self.d == 1 {
            return (self.p - a) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        for _ in 0..self.d {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    fn gf_mul(&self, a: u64, b: u64) -> u64 {
        let p = self.p;
        if self.d == 1 {
            return mul_mod(a, b, p);
        }
        let d = self.d as usize;
        let mut x = [0u64; MAX_DIGITS];
        let mut y = [0u64; MAX_DIGITS];
        let (mut a, mut b) = (a, b);
        for i in 0..d {
            x[i] = a % p;
            y[i] = b % p;
            a /= p;
            b /= p;
        }
        let mut prod = [0u64; 2 * MAX_DIGITS];
        for i in 0..d {
            if x[i] == 0 {
                continue;
            }
            for j in 0..d {
                prod[i + j] = (prod[i + j] + mul_mod(x[i], y[j], p)) % p;
            }
        }
        for top in (d..2 * d - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            let neg = p - c;
            for j in 0..d {
                prod[top - d + j] = (prod[top - d + j] + mul_mod(neg, self.modulus[j], p)) % p;
            }
        }
        prod[..d].iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    fn nil_zip(&self, a: u64, b: u64, f: impl Fn(u64, u64) -> u64) -> u64 {
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        for _ in 0..self.e {
            out += f(a % self.q, b % self.q) * place;
            a /= self.q;
            b /= self.q;
            place = place.wrapping_mul(self.q);
        }
        out
    }

    fn nil_mul(&self, a: u64, b: u64) -> u64 {
        let e = self.e as usize;
        let mut x = [0u64; MAX_DIGITS];
        let mut y = [0u64; MAX_DIGITS];
        let (mut a, mut b) = (a, b);
        for i in 0..e {
            x[i] = a % self.q;
            y[i] = b % self.q;
            a /= self.q;
            b /= self.q;
        }
        let mut out = [0u64; MAX_DIGITS];
        for i in 0..e {
            if x[i] == 0 {
                continue;
            }
            for j in 0..e - i {
                out[i + j] = self.gf_add(out[i + j], self.gf_mul(x[i], y[j]));
            }
        }
        out[..e].iter().rev().fold(0, |acc, &g| acc * self.q + g)
    }
}

impl fmt::Display for LocalRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            LocalKind::Zpe => write!(f, "Z/{}", self.size),
            LocalKind::Gf => write!(f, "GF({})", self.q),
            LocalKind::NilExt => write!(f, "N({},{})", self.q, self.e),
        }
    }
}
