//! Symbolic k-fold sumsets and product sets of `R^*` and `R^**`.
//!
//! Because `R^*` and `R^**` are direct products of their local parts, every
//! k-fold sumset or product set is a direct product of local sets. Each
//! local set is one of a handful of unions of residue classes modulo `M_i`,
//! picked by `q_i` and by `k` modulo 2, 3 or 6.

use alloc::vec::Vec;
use core::fmt;

use crate::count::Count;
use crate::error::{Error, Result};
use crate::ring::{Element, LocalRingSpec, RingSpec};

/// A subset of one local component `R_i`, described through residues mod `M_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComponentSet {
    Whole,
    Empty,
    /// `M`
    MaxIdeal,
    /// `R \ M`
    UnitPart,
    /// `a·1 + M` for `a` in `{1, 2}`
    Coset(u8),
    /// `R^*`
    Units,
    /// `R^* \ (1 + M)`
    UnitsMinusOneCoset,
    /// `M ∪ (1 + M)`
    MUnionOnePlusM,
    /// `R \ (M ∪ (1 + M))`
    ComplMUnionOnePlusM,
}

impl ComponentSet {
    pub fn contains(&self, spec: &LocalRingSpec, x: u64) -> bool {
        let r = spec.residue(x);
        match *self {
            ComponentSet::Whole => true,
            ComponentSet::Empty => false,
            ComponentSet::MaxIdeal => r == 0,
            ComponentSet::UnitPart | ComponentSet::Units => r != 0,
            ComponentSet::Coset(a) => r == spec.int_residue(a as u64),
            ComponentSet::UnitsMinusOneCoset => r != 0 && r != 1,
            ComponentSet::MUnionOnePlusM => r == 0 || r == 1,
            ComponentSet::ComplMUnionOnePlusM => r != 0 && r != 1,
        }
    }

    pub fn cardinality(&self, spec: &LocalRingSpec) -> u64 {
        let (m, q, size) = (spec.max_ideal_size(), spec.residue_size(), spec.size());
        match *self {
            ComponentSet::Whole => size,
            ComponentSet::Empty => 0,
            ComponentSet::MaxIdeal | ComponentSet::Coset(_) => m,
            ComponentSet::UnitPart => size - m,
            ComponentSet::Units => m * (q - 1),
            ComponentSet::UnitsMinusOneCoset => m * (q - 2),
            ComponentSet::MUnionOnePlusM => 2 * m,
            ComponentSet::ComplMUnionOnePlusM => size - 2 * m,
        }
    }

    fn symbol(&self) -> (&'static str, bool) {
        match *self {
            ComponentSet::Whole => ("R", true),
            ComponentSet::Empty => ("∅", true),
            ComponentSet::MaxIdeal => ("M", true),
            ComponentSet::UnitPart => ("R∖M", false),
            ComponentSet::Coset(1) => ("1+M", false),
            ComponentSet::Coset(_) => ("2+M", false),
            ComponentSet::Units => ("R*", true),
            ComponentSet::UnitsMinusOneCoset => ("R*∖(1+M)", false),
            ComponentSet::MUnionOnePlusM => ("M∪1+M", false),
            ComponentSet::ComplMUnionOnePlusM => ("R∖(M∪1+M)", false),
        }
    }
}

/// A direct product of local sets, one per component.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetDescriptor {
    per_component: Vec<ComponentSet>,
}

impl SetDescriptor {
    pub fn new(ring: &RingSpec, per_component: Vec<ComponentSet>) -> Result<Self> {
        if per_component.len() != ring.len() {
            return Err(Error::ArityMismatch { expected: ring.len(), found: per_component.len() });
        }
        if per_component.iter().any(|c| matches!(c, ComponentSet::Coset(a) if *a != 1 && *a != 2)) {
            return Err(Error::InvalidParameter("coset representative must be 1 or 2"));
        }
        Ok(Self { per_component })
    }

    pub fn components(&self) -> &[ComponentSet] {
        &self.per_component
    }

    pub fn contains(&self, ring: &RingSpec, x: &Element) -> Result<bool> {
        ring.check(x)?;
        Ok(self
            .per_component
            .iter()
            .zip(ring.components())
            .zip(x.coords())
            .all(|((set, spec), &xi)| set.contains(spec, xi)))
    }

    pub fn cardinality(&self, ring: &RingSpec) -> Count {
        self.per_component
            .iter()
            .zip(ring.components())
            .map(|(set, spec)| Count::from(set.cardinality(spec)))
            .product()
    }

    /// Members in enumeration order, built as a product of the local member
    /// lists.
    pub fn enumerate(&self, ring: &RingSpec, cap: u64) -> Result<Vec<Element>> {
        ring.enumerable(cap)?;
        let local: Vec<Vec<u64>> = self
            .per_component
            .iter()
            .zip(ring.components())
            .map(|(set, spec)| (0..spec.size()).filter(|&x| set.contains(spec, x)).collect())
            .collect();
        if local.iter().any(Vec::is_empty) {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut cursor = alloc::vec![0usize; local.len()];
        loop {
            out.push(Element::new(cursor.iter().zip(&local).map(|(&i, l)| l[i]).collect()));
            let mut pos = local.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                cursor[pos] += 1;
                if cursor[pos] < local[pos].len() {
                    break;
                }
                cursor[pos] = 0;
            }
        }
    }
}

impl fmt::Display for SetDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let many = self.per_component.len() > 1;
        for (i, set) in self.per_component.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            let (sym, atomic) = set.symbol();
            if many && !atomic {
                write!(f, "({sym})")?;
            } else {
                f.write_str(sym)?;
            }
        }
        Ok(())
    }
}

fn check_k(k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::KTooSmall { k, min: 2 });
    }
    Ok(())
}

fn has_residue_two(ring: &RingSpec) -> bool {
    ring.components().iter().any(|c| c.residue_size() == 2)
}

/// `R^* + ... + R^*` (`k` summands).
pub fn unit_sumset(ring: &RingSpec, k: u32) -> Result<SetDescriptor> {
    check_k(k)?;
    let sets = ring
        .components()
        .iter()
        .map(|c| match (c.residue_size(), k % 2) {
            (2, 0) => ComponentSet::MaxIdeal,
            (2, _) => ComponentSet::UnitPart,
            _ => ComponentSet::Whole,
        })
        .collect();
    SetDescriptor::new(ring, sets)
}

/// `R^** + ... + R^**` (`k` summands).
pub fn exunit_sumset(ring: &RingSpec, k: u32) -> Result<SetDescriptor> {
    check_k(k)?;
    if has_residue_two(ring) {
        return SetDescriptor::new(ring, alloc::vec![ComponentSet::Empty; ring.len()]);
    }
    let sets = ring
        .components()
        .iter()
        .map(|c| match c.residue_size() {
            3 => match k % 3 {
                0 => ComponentSet::MaxIdeal,
                1 => ComponentSet::Coset(2),
                _ => ComponentSet::Coset(1),
            },
            4 if k.is_multiple_of(2) => ComponentSet::MUnionOnePlusM,
            4 => ComponentSet::ComplMUnionOnePlusM,
            _ => ComponentSet::Whole,
        })
        .collect();
    SetDescriptor::new(ring, sets)
}

/// `R^** · ... · R^**` (`k` factors).
pub fn exunit_prodset(ring: &RingSpec, k: u32) -> Result<SetDescriptor> {
    check_k(k)?;
    if has_residue_two(ring) {
        return SetDescriptor::new(ring, alloc::vec![ComponentSet::Empty; ring.len()]);
    }
    let sets = ring
        .components()
        .iter()
        .map(|c| match (c.residue_size(), k % 2) {
            (3, 0) => ComponentSet::Coset(1),
            (3, _) => ComponentSet::UnitsMinusOneCoset,
            _ => ComponentSet::Units,
        })
        .collect();
    SetDescriptor::new(ring, sets)
}

pub fn has_exceptional_units(ring: &RingSpec) -> bool {
    !has_residue_two(ring)
}

/// Every element is a sum of units.
pub fn generated_by_units(ring: &RingSpec) -> bool {
    ring.components().iter().filter(|c| c.residue_size() == 2).count() <= 1
}

/// `R` is generated as a ring by `R^**`: every element is a sum of products
/// of exceptional units.
pub fn generated_by_exceptional_units(ring: &RingSpec) -> bool {
    let q = || ring.components().iter().map(LocalRingSpec::residue_size);
    q().all(|q| q >= 3) && q().filter(|&q| q == 3).count() <= 1
}
