//! Finite commutative rings as ordered direct sums of local rings.

mod local;
mod poly;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

pub use local::{LocalElement, LocalKind, LocalRingSpec};
pub use poly::{is_irreducible, smallest_irreducible};

/// Enumeration cap for single queries.
pub const DEFAULT_CAP: u64 = 1_000_000;

/// An element of `R_1 + ... + R_n`, one integer code per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Vec<u64>);

impl Element {
    pub fn new(coords: Vec<u64>) -> Self {
        Element(coords)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.0
    }
}

impl From<Vec<u64>> for Element {
    fn from(coords: Vec<u64>) -> Self {
        Element(coords)
    }
}

/// `R = R_1 + ... + R_n`. Component order is significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    components: Vec<LocalRingSpec>,
}

impl RingSpec {
    pub fn new(components: Vec<LocalRingSpec>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::NoComponents);
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[LocalRingSpec] {
        &self.components
    }

    pub fn component(&self, i: usize) -> Result<&LocalRingSpec> {
        self.components.get(i).ok_or(Error::ComponentIndex(i))
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn order(&self) -> BigUint {
        self.components.iter().map(|c| BigUint::from(c.size())).product()
    }

    /// `|R|`, saturating at `u128::MAX`.
    pub fn order_saturating(&self) -> u128 {
        self.components
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(c.size() as u128))
    }

    pub fn unit_count(&self) -> BigUint {
        self.components.iter().map(|c| BigUint::from(c.unit_count())).product()
    }

    /// `|R|` as a `usize`, provided it does not exceed `cap`.
    pub fn enumerable(&self, cap: u64) -> Result<usize> {
        let size = self.order_saturating();
        if size > cap as u128 {
            return Err(Error::CapExceeded { size, cap });
        }
        Ok(size as usize)
    }

    pub fn check(&self, a: &Element) -> Result<()> {
        if a.0.len() != self.components.len() {
            return Err(Error::ArityMismatch { expected: self.components.len(), found: a.0.len() });
        }
        for (i, (c, &v)) in self.components.iter().zip(&a.0).enumerate() {
            if !c.contains(v) {
                return Err(Error::CoordinateOutOfRange { component: i, value: v, size: c.size() });
            }
        }
        Ok(())
    }

    pub fn zero(&self) -> Element {
        Element(self.components.iter().map(|c| c.zero()).collect())
    }

    pub fn one(&self) -> Element {
        Element(self.components.iter().map(|c| c.one()).collect())
    }

    fn zip(&self, a: &Element, b: &Element, f: impl Fn(&LocalRingSpec, u64, u64) -> u64) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(Element(
            self.components.iter().zip(a.0.iter().zip(&b.0)).map(|(c, (&x, &y))| f(c, x, y)).collect(),
        ))
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.zip(a, b, LocalRingSpec::add)
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Result<Element> {
        self.zip(a, b, LocalRingSpec::sub)
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.zip(a, b, LocalRingSpec::mul)
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        Ok(Element(self.components.iter().zip(&a.0).map(|(c, &x)| c.neg(x)).collect()))
    }

    pub fn is_unit(&self, a: &Element) -> Result<bool> {
        self.check(a)?;
        Ok(self.components.iter().zip(&a.0).all(|(c, &x)| c.is_unit(x)))
    }

    /// `a` is a unit and so is `1 - a`.
    pub fn is_exceptional_unit(&self, a: &Element) -> Result<bool> {
        let complement = self.sub(&self.one(), a)?;
        Ok(self.is_unit(a)? && self.is_unit(&complement)?)
    }

    /// Image of the local coordinate `a_i` in `R_i / M_i`.
    pub fn residue_index(&self, i: usize, a_i: u64) -> Result<u64> {
        let c = self.component(i)?;
        if !c.contains(a_i) {
            return Err(Error::CoordinateOutOfRange { component: i, value: a_i, size: c.size() });
        }
        Ok(c.residue(a_i))
    }

    /// Image of the integer `j` in `R_i / M_i`.
    pub fn int_residue(&self, i: usize, j: u64) -> Result<u64> {
        Ok(self.component(i)?.int_residue(j))
    }

    /// Position of `a` in enumeration order. Only meaningful for rings that
    /// pass [`RingSpec::enumerable`].
    pub fn index_of(&self, a: &Element) -> usize {
        self.components.iter().zip(&a.0).fold(0usize, |acc, (c, &x)| acc * c.size() as usize + x as usize)
    }

    pub fn element_at(&self, mut index: usize) -> Element {
        let mut coords = alloc::vec![0u64; self.components.len()];
        for (slot, c) in coords.iter_mut().zip(&self.components).rev() {
            let s = c.size() as usize;
            *slot = (index % s) as u64;
            index /= s;
        }
        Element(coords)
    }

    /// All elements in lexicographic order of their coordinate codes.
    pub fn elements(&self, cap: u64) -> Result<impl Iterator<Item = Element> + '_> {
        let size = self.enumerable(cap)?;
        Ok((0..size).map(move |i| self.element_at(i)))
    }

    pub fn units(&self, cap: u64) -> Result<impl Iterator<Item = Element> + '_> {
        Ok(self
            .elements(cap)?
            .filter(move |a| self.components.iter().zip(&a.0).all(|(c, &x)| c.is_unit(x))))
    }

    pub fn exceptional_units(&self, cap: u64) -> Result<impl Iterator<Item = Element> + '_> {
        Ok(self.elements(cap)?.filter(move |a| {
            self.components
                .iter()
                .zip(&a.0)
                .all(|(c, &x)| c.is_unit(x) && c.is_unit(c.sub(c.one(), x)))
        }))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}
