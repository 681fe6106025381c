//! Multiplicative characters of `F_q^*` and the character-sum evaluation of
//! the number of ways to write a field unit as a product of `k` exceptional
//! units.
//!
//! With a generator `g` and `log` its discrete logarithm, the characters are
//! `chi_t(g^a) = exp(2 pi i t a / (q - 1))`. Writing
//! `S_t = sum over x in F_q^** of chi_t(x)` (so `S_0 = q - 2` and `S_t = -1`
//! otherwise), the count is `(1/(q-1)) sum_t S_t^k chi_t(c^-1)`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul};

use crate::arith::prime_power;
use crate::count::Count;
use crate::error::{Error, Result};
use crate::ring::LocalRingSpec;

/// Tolerance for the orthogonality relations and the `S_t` identities.
pub const ORTHOGONALITY_TOL: f64 = 1e-9;
/// Largest accepted distance between a character-sum count and an integer.
pub const ROUNDING_TOL: f64 = 1e-6;
pub const MAX_FIELD_SIZE: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    /// `exp(i * angle)`.
    pub fn from_angle(angle: f64) -> Self {
        Complex { re: libm::cos(angle), im: libm::sin(angle) }
    }

    pub fn conj(self) -> Self {
        Complex { re: self.re, im: -self.im }
    }

    pub fn abs(self) -> f64 {
        libm::hypot(self.re, self.im)
    }

    pub fn powi(self, k: u32) -> Self {
        (0..k).fold(Complex::ONE, |acc, _| acc * self)
    }

    pub fn scale(self, s: f64) -> Self {
        Complex { re: self.re * s, im: self.im * s }
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, o: Complex) -> Complex {
        Complex { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, o: Complex) -> Complex {
        Complex { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
}

impl core::iter::Sum for Complex {
    fn sum<I: Iterator<Item = Complex>>(iter: I) -> Complex {
        iter.fold(Complex::ZERO, Add::add)
    }
}

/// Discrete logarithm table of `F_q^*` together with its `q - 1` characters.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    field: LocalRingSpec,
    generator: u64,
    /// `log[x]` for nonzero codes `x`; `log[0]` is unused.
    log: Vec<u32>,
}

/// Builds the table for `GF(q)`, `2 <= q <= 64`. For `q = 2` the table is
/// valid but there are no exceptional units; see
/// [`CharacterTable::exceptional_units_empty`].
pub fn build_table(q: u64) -> Result<CharacterTable> {
    if !(2..=MAX_FIELD_SIZE).contains(&q) {
        return Err(Error::FieldSizeOutOfRange(q));
    }
    let (p, d) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
    let field = LocalRingSpec::gf(p, d)?;
    let order = q - 1;
    let generator = (1..q)
        .find(|&g| {
            let mut x = g;
            let mut n = 1;
            while x != 1 {
                x = field.mul(x, g);
                n += 1;
            }
            n == order
        })
        .expect("F_q^* is cyclic");
    let mut log = vec![u32::MAX; q as usize];
    let mut x = 1;
    for a in 0..order {
        log[x as usize] = a as u32;
        x = field.mul(x, generator);
    }
    Ok(CharacterTable { field, generator, log })
}

impl CharacterTable {
    pub fn q(&self) -> u64 {
        self.field.residue_size()
    }

    pub fn field(&self) -> &LocalRingSpec {
        &self.field
    }

    /// Smallest code whose powers exhaust `F_q^*`.
    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn exceptional_units_empty(&self) -> bool {
        self.q() == 2
    }

    pub fn log(&self, x: u64) -> Result<u32> {
        if x == 0 {
            return Err(Error::ZeroArgument);
        }
        Ok(self.log[x as usize])
    }

    /// Number of characters, `q - 1`.
    pub fn character_count(&self) -> u64 {
        self.q() - 1
    }

    /// `chi_t(x)` for `x != 0`.
    pub fn chi(&self, t: u64, x: u64) -> Result<Complex> {
        let a = self.log(x)? as u64;
        let n = self.character_count();
        let angle = 2.0 * core::f64::consts::PI * ((t * a) % n) as f64 / n as f64;
        Ok(Complex::from_angle(angle))
    }

    /// `S_t`, the character sum over the exceptional units `F_q^* \ {1}`.
    pub fn exceptional_char_sum(&self, t: u64) -> Complex {
        (2..self.q()).map(|x| self.chi(t, x).expect("nonzero")).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthogonalityReport {
    /// Max over `t` of `|sum_a chi_t(a) - (q-1)[t = 0]|`.
    pub element_side: f64,
    /// Max over `a` of `|sum_t chi_t(a) - (q-1)[a = 1]|`.
    pub character_side: f64,
}

impl OrthogonalityReport {
    pub fn max_deviation(&self) -> f64 {
        self.element_side.max(self.character_side)
    }
}

pub fn orthogonality_check(table: &CharacterTable) -> OrthogonalityReport {
    let q = table.q();
    let n = table.character_count();
    let full = (q - 1) as f64;
    let element_side = (0..n)
        .map(|t| {
            let s: Complex = (1..q).map(|a| table.chi(t, a).expect("nonzero")).sum();
            let expected = if t == 0 { full } else { 0.0 };
            (s + Complex::new(-expected, 0.0)).abs()
        })
        .fold(0.0, f64::max);
    let character_side = (1..q)
        .map(|a| {
            let s: Complex = (0..n).map(|t| table.chi(t, a).expect("nonzero")).sum();
            let expected = if a == 1 { full } else { 0.0 };
            (s + Complex::new(-expected, 0.0)).abs()
        })
        .fold(0.0, f64::max);
    OrthogonalityReport { element_side, character_side }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CharTheta {
    pub value: Count,
    pub raw: Complex,
    pub residual: f64,
}

/// Product count of exceptional units in `F_q` via characters, rounded to
/// the nearest integer.
pub fn theta_via_chars(table: &CharacterTable, k: u32, c: u64) -> Result<CharTheta> {
    if k < 2 {
        return Err(Error::KTooSmall { k, min: 2 });
    }
    if table.exceptional_units_empty() {
        return Err(Error::ResidueFieldTooSmall(2));
    }
    if c == 0 {
        return Err(Error::ZeroArgument);
    }
    let n = table.character_count();
    let total: Complex = (0..n)
        .map(|t| table.exceptional_char_sum(t).powi(k) * table.chi(t, c).expect("nonzero").conj())
        .sum();
    let raw = total.scale(1.0 / n as f64);
    let rounded = libm::round(raw.re);
    let residual = Complex::new(raw.re - rounded, raw.im).abs();
    if residual >= ROUNDING_TOL || rounded < 0.0 {
        return Err(Error::RoundingResidual { residual });
    }
    Ok(CharTheta { value: Count::from(rounded as u64), raw, residual })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdentityCheck {
    /// `sum over nontrivial t of chi_t(c^-1)`.
    pub char_sum: Complex,
    /// `q - 2` if `c = 1`, else `-1`.
    pub expected: f64,
    /// Max over nontrivial `t` of `|S_t + 1|`, together with `|S_0 - (q-2)|`.
    pub s_deviation: f64,
}

impl IdentityCheck {
    pub fn char_sum_deviation(&self) -> f64 {
        (self.char_sum + Complex::new(-self.expected, 0.0)).abs()
    }

    pub fn holds(&self) -> bool {
        self.char_sum_deviation() < ORTHOGONALITY_TOL && self.s_deviation < ORTHOGONALITY_TOL
    }
}

/// Checks the two identities the closed form rests on:
/// `sum_{t != 0} chi_t(c^-1) = q - 2` or `-1`, and `S_t = -1` for `t != 0`.
pub fn nontrivial_char_sum_identity(table: &CharacterTable, c: u64) -> Result<IdentityCheck> {
    if c == 0 {
        return Err(Error::ZeroArgument);
    }
    let q = table.q();
    let n = table.character_count();
    let mut char_sum = Complex::ZERO;
    for t in 1..n {
        char_sum = char_sum + table.chi(t, c)?.conj();
    }
    let expected = if c == 1 { (q - 2) as f64 } else { -1.0 };
    let trivial = (table.exceptional_char_sum(0) + Complex::new(-((q - 2) as f64), 0.0)).abs();
    let s_deviation = (1..n)
        .map(|t| (table.exceptional_char_sum(t) + Complex::ONE).abs())
        .fold(trivial, f64::max);
    Ok(IdentityCheck { char_sum, expected, s_deviation })
}
