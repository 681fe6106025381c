//! Brute-force ground truth: k-fold additive and multiplicative
//! convolutions over an enumerated ring.
//!
//! Nothing here consults the closed forms; everything is computed from ring
//! arithmetic alone.

use alloc::vec;
use alloc::vec::Vec;

use crate::count::Count;
use crate::error::{Error, Result};
use crate::ring::{Element, RingSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Source {
    Units,
    ExceptionalUnits,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Sum,
    Prod,
}

/// A subset of an enumerated ring, stored as a membership bitmap over
/// element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: Vec<bool>,
}

impl ElementSet {
    pub fn empty(size: usize) -> Self {
        Self { bits: vec![false; size] }
    }

    pub fn full(size: usize) -> Self {
        Self { bits: vec![true; size] }
    }

    pub fn from_elements<'a>(ring: &RingSpec, size: usize, elements: impl IntoIterator<Item = &'a Element>) -> Self {
        let mut set = Self::empty(size);
        for e in elements {
            set.bits[ring.index_of(e)] = true;
        }
        set
    }

    pub fn contains_index(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn insert_index(&mut self, i: usize) -> bool {
        !core::mem::replace(&mut self.bits[i], true)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    pub fn is_full(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    pub fn is_superset(&self, other: &ElementSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(&a, &b)| a || !b)
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn elements<'a>(&'a self, ring: &'a RingSpec) -> impl Iterator<Item = Element> + 'a {
        self.indices().map(move |i| ring.element_at(i))
    }

    fn union_with(&mut self, other: &ElementSet) -> bool {
        let mut grew = false;
        for (a, &b) in self.bits.iter_mut().zip(&other.bits) {
            if b && !*a {
                *a = true;
                grew = true;
            }
        }
        grew
    }
}

/// Distribution of k-fold sums or products: `counts[i]` is the number of
/// tuples landing on the element with index `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorTable {
    ring: RingSpec,
    counts: Vec<Count>,
}

impl IndicatorTable {
    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn get(&self, x: &Element) -> Result<&Count> {
        self.ring.check(x)?;
        Ok(&self.counts[self.ring.index_of(x)])
    }

    pub fn get_index(&self, i: usize) -> &Count {
        &self.counts[i]
    }

    pub fn total(&self) -> Count {
        self.counts.iter().sum()
    }

    pub fn support(&self) -> ElementSet {
        ElementSet { bits: self.counts.iter().map(|c| !c.is_zero()).collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Element, &Count)> + '_ {
        self.counts.iter().enumerate().map(move |(i, c)| (self.ring.element_at(i), c))
    }
}

/// Index-level arithmetic over an enumerated ring.
struct Dense<'a> {
    ring: &'a RingSpec,
    size: usize,
    coords: Vec<u64>,
}

impl<'a> Dense<'a> {
    fn new(ring: &'a RingSpec, cap: u64) -> Result<Self> {
        let size = ring.enumerable(cap)?;
        let mut coords = Vec::with_capacity(size * ring.len());
        for e in ring.elements(cap)? {
            coords.extend_from_slice(e.coords());
        }
        Ok(Self { ring, size, coords })
    }

    fn coords(&self, i: usize) -> &[u64] {
        let n = self.ring.len();
        &self.coords[i * n..(i + 1) * n]
    }

    fn combine(&self, a: usize, b: usize, op: Op) -> usize {
        let (x, y) = (self.coords(a), self.coords(b));
        let mut index = 0usize;
        for (spec, (&xi, &yi)) in self.ring.components().iter().zip(x.iter().zip(y)) {
            let v = match op {
                Op::Sum => spec.add(xi, yi),
                Op::Prod => spec.mul(xi, yi),
            };
            index = index * spec.size() as usize + v as usize;
        }
        index
    }

    fn source(&self, source: Source) -> Vec<usize> {
        let one = self.ring.one();
        (0..self.size)
            .filter(|&i| {
                let x = self.coords(i);
                self.ring.components().iter().zip(x).zip(one.coords()).all(|((spec, &xi), &oi)| {
                    spec.is_unit(xi) && (source == Source::Units || spec.is_unit(spec.sub(oi, xi)))
                })
            })
            .collect()
    }

    fn indicator(&self, members: &[usize]) -> ElementSet {
        let mut set = ElementSet::empty(self.size);
        for &i in members {
            set.bits[i] = true;
        }
        set
    }

    fn convolve_counts(&self, table: &[Count], src: &[usize], op: Op) -> Vec<Count> {
        let mut next = vec![Count::zero(); self.size];
        for (w, c) in table.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &y in src {
                next[self.combine(w, y, op)] += c;
            }
        }
        next
    }

    fn convolve_support(&self, set: &ElementSet, src: &[usize], op: Op) -> ElementSet {
        let mut next = ElementSet::empty(self.size);
        for w in set.indices() {
            for &y in src {
                next.bits[self.combine(w, y, op)] = true;
            }
        }
        next
    }

    fn tables(&self, kmax: u32, src: &[usize], op: Op) -> Vec<IndicatorTable> {
        let mut out = Vec::with_capacity(kmax as usize);
        let mut current: Vec<Count> = (0..self.size).map(|_| Count::zero()).collect();
        for &s in src {
            current[s] = Count::one();
        }
        for k in 1..=kmax {
            if k > 1 {
                current = self.convolve_counts(&current, src, op);
            }
            out.push(IndicatorTable { ring: self.ring.clone(), counts: current.clone() });
        }
        out
    }
}

fn check_k(k: u32) -> Result<()> {
    if k < 1 {
        return Err(Error::KTooSmall { k, min: 1 });
    }
    Ok(())
}

fn require_exceptional(ring: &RingSpec) -> Result<()> {
    if ring.components().iter().any(|c| c.residue_size() == 2) {
        return Err(Error::NoExceptionalUnits);
    }
    Ok(())
}

/// Indices of the source set, in enumeration order.
pub fn source_indices(ring: &RingSpec, source: Source, cap: u64) -> Result<Vec<usize>> {
    Ok(Dense::new(ring, cap)?.source(source))
}

/// Sum distributions for `k = 1..=kmax`.
pub fn sum_tables(ring: &RingSpec, kmax: u32, source: Source, cap: u64) -> Result<Vec<IndicatorTable>> {
    check_k(kmax)?;
    let dense = Dense::new(ring, cap)?;
    let src = dense.source(source);
    Ok(dense.tables(kmax, &src, Op::Sum))
}

/// Number of `k`-tuples from `source` summing to `c`.
pub fn count_sum_tuples(ring: &RingSpec, k: u32, c: &Element, source: Source, cap: u64) -> Result<Count> {
    ring.check(c)?;
    let tables = sum_tables(ring, k, source, cap)?;
    Ok(tables[k as usize - 1].get(c)?.clone())
}

/// Product distributions of exceptional units for `k = 1..=kmax`.
pub fn prod_tables(ring: &RingSpec, kmax: u32, cap: u64) -> Result<Vec<IndicatorTable>> {
    check_k(kmax)?;
    require_exceptional(ring)?;
    let dense = Dense::new(ring, cap)?;
    let src = dense.source(Source::ExceptionalUnits);
    Ok(dense.tables(kmax, &src, Op::Prod))
}

/// Number of `k`-tuples of exceptional units whose product is `u`.
pub fn count_prod_tuples(ring: &RingSpec, k: u32, u: &Element, cap: u64) -> Result<Count> {
    if !ring.is_unit(u)? {
        return Err(Error::NotAUnit);
    }
    let tables = prod_tables(ring, k, cap)?;
    Ok(tables[k as usize - 1].get(u)?.clone())
}

/// Supports of the k-fold sums or products for `k = 1..=kmax`.
pub fn reachable_sets(ring: &RingSpec, kmax: u32, op: Op, source: Source, cap: u64) -> Result<Vec<ElementSet>> {
    check_k(kmax)?;
    let dense = Dense::new(ring, cap)?;
    let src = dense.source(source);
    let mut current = dense.indicator(&src);
    let mut out = Vec::with_capacity(kmax as usize);
    for k in 1..=kmax {
        if k > 1 {
            current = dense.convolve_support(&current, &src, op);
        }
        out.push(current.clone());
    }
    Ok(out)
}

pub fn reachable_set(ring: &RingSpec, k: u32, op: Op, source: Source, cap: u64) -> Result<ElementSet> {
    Ok(reachable_sets(ring, k, op, source, cap)?.pop().expect("k >= 1"))
}

/// Union of the k-fold sumsets of `source` over `k = 1, 2, ...`, stopped once
/// it has not grown for six consecutive `k`.
pub fn sumset_union(ring: &RingSpec, source: Source, cap: u64) -> Result<ElementSet> {
    let dense = Dense::new(ring, cap)?;
    let src = dense.source(source);
    let mut current = dense.indicator(&src);
    let mut union = ElementSet::empty(dense.size);
    let mut unchanged = 0;
    while unchanged < 6 {
        if union.union_with(&current) {
            unchanged = 0;
        } else {
            unchanged += 1;
        }
        current = dense.convolve_support(&current, &src, Op::Sum);
    }
    Ok(union)
}

fn close_under(dense: &Dense<'_>, start: ElementSet, gens: &[usize], op: Op) -> ElementSet {
    let mut closed = start;
    let mut frontier: Vec<usize> = closed.indices().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &w in &frontier {
            for &g in gens {
                let v = dense.combine(w, g, op);
                if closed.insert_index(v) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    closed
}

/// Everything obtainable from `source` by finitely many additions and
/// multiplications: the additive closure of the multiplicative semigroup
/// generated by `source`.
pub fn generation_closure(ring: &RingSpec, source: Source, cap: u64) -> Result<ElementSet> {
    let dense = Dense::new(ring, cap)?;
    let src = dense.source(source);
    let products = close_under(&dense, dense.indicator(&src), &src, Op::Prod);
    let gens: Vec<usize> = products.indices().collect();
    Ok(close_under(&dense, products, &gens, Op::Sum))
}

/// Direct enumeration of all `|source|^k` tuples. Exponential; only for
/// cross-checking the convolution on tiny inputs.
pub fn count_tuples_naive(ring: &RingSpec, k: u32, target: &Element, op: Op, source: Source, cap: u64) -> Result<Count> {
    check_k(k)?;
    ring.check(target)?;
    let dense = Dense::new(ring, cap)?;
    let src = dense.source(source);
    let goal = ring.index_of(target);
    if src.is_empty() {
        return Ok(Count::zero());
    }
    let mut cursor = vec![0usize; k as usize];
    let mut hits = 0u64;
    loop {
        let value = cursor[1..].iter().fold(src[cursor[0]], |acc, &j| dense.combine(acc, src[j], op));
        if value == goal {
            hits += 1;
        }
        let mut pos = cursor.len();
        loop {
            if pos == 0 {
                return Ok(Count::from(hits));
            }
            pos -= 1;
            cursor[pos] += 1;
            if cursor[pos] < src.len() {
                break;
            }
            cursor[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{LocalRingSpec, DEFAULT_CAP};

    fn gf(p: u64, d: u32) -> LocalRingSpec {
        LocalRingSpec::gf(p, d).unwrap()
    }

    fn ring(parts: Vec<LocalRingSpec>) -> RingSpec {
        RingSpec::new(parts).unwrap()
    }

    fn el(v: &[u64]) -> Element {
        Element::new(v.to_vec())
    }

    #[test]
    fn sum_counts() {
        let f5 = ring(vec![gf(5, 1)]);
        assert_eq!(count_sum_tuples(&f5, 2, &el(&[0]), Source::Units, DEFAULT_CAP).unwrap(), 4);
        let z9 = ring(vec![LocalRingSpec::zpe(3, 2).unwrap()]);
        assert_eq!(count_sum_tuples(&z9, 3, &el(&[0]), Source::ExceptionalUnits, DEFAULT_CAP).unwrap(), 9);
        let z12 = ring(vec![LocalRingSpec::zpe(2, 2).unwrap(), gf(3, 1)]);
        let t = sum_tables(&z12, 3, Source::ExceptionalUnits, DEFAULT_CAP).unwrap();
        assert!(t.iter().all(|t| t.total().is_zero()));
        assert!(matches!(
            count_sum_tuples(&f5, 0, &el(&[0]), Source::Units, DEFAULT_CAP),
            Err(Error::KTooSmall { k: 0, min: 1 })
        ));
    }

    #[test]
    fn prod_counts() {
        let f5 = ring(vec![gf(5, 1)]);
        assert_eq!(count_prod_tuples(&f5, 2, &el(&[1]), DEFAULT_CAP).unwrap(), 3);
        let f4 = ring(vec![gf(2, 2)]);
        assert_eq!(count_prod_tuples(&f4, 3, &el(&[2]), DEFAULT_CAP).unwrap(), 3);
        let f3 = ring(vec![gf(3, 1)]);
        assert_eq!(count_prod_tuples(&f3, 4, &el(&[1]), DEFAULT_CAP).unwrap(), 1);
        assert_eq!(count_prod_tuples(&f5, 2, &el(&[0]), DEFAULT_CAP), Err(Error::NotAUnit));
        let z4 = ring(vec![LocalRingSpec::zpe(2, 2).unwrap()]);
        assert_eq!(count_prod_tuples(&z4, 2, &el(&[1]), DEFAULT_CAP), Err(Error::NoExceptionalUnits));
    }

    #[test]
    fn totals_are_source_powers() {
        let r = ring(vec![gf(3, 1), gf(2, 2)]);
        let src = source_indices(&r, Source::ExceptionalUnits, DEFAULT_CAP).unwrap().len() as u64;
        for (k, t) in sum_tables(&r, 4, Source::ExceptionalUnits, DEFAULT_CAP).unwrap().iter().enumerate() {
            assert_eq!(t.total(), Count::from(src).pow(k as u32 + 1));
        }
    }

    #[test]
    fn reachable() {
        let z12 = ring(vec![LocalRingSpec::zpe(2, 2).unwrap(), gf(3, 1)]);
        let s = reachable_set(&z12, 2, Op::Sum, Source::Units, DEFAULT_CAP).unwrap();
        // Z/12 -> (x mod 4, x mod 3); the evens are the elements with even first coordinate
        let evens: Vec<Element> = s.elements(&z12).collect();
        assert_eq!(evens.len(), 6);
        assert!(evens.iter().all(|e| e.coords()[0] % 2 == 0));

        let f4 = ring(vec![gf(2, 2)]);
        let s = reachable_set(&f4, 2, Op::Sum, Source::ExceptionalUnits, DEFAULT_CAP).unwrap();
        assert_eq!(s.elements(&f4).collect::<Vec<_>>(), vec![el(&[0]), el(&[1])]);

        let r = ring(vec![gf(3, 1), gf(5, 1)]);
        let s = reachable_set(&r, 2, Op::Prod, Source::ExceptionalUnits, DEFAULT_CAP).unwrap();
        assert_eq!(s.elements(&r).collect::<Vec<_>>(), vec![el(&[1, 1]), el(&[1, 2]), el(&[1, 3]), el(&[1, 4])]);
    }

    #[test]
    fn closures() {
        let z6 = ring(vec![gf(2, 1), gf(3, 1)]);
        assert!(sumset_union(&z6, Source::Units, DEFAULT_CAP).unwrap().is_full());
        assert!(generation_closure(&z6, Source::Units, DEFAULT_CAP).unwrap().is_full());

        let z2z2 = ring(vec![gf(2, 1), gf(2, 1)]);
        let u = sumset_union(&z2z2, Source::Units, DEFAULT_CAP).unwrap();
        assert_eq!(u.elements(&z2z2).collect::<Vec<_>>(), vec![el(&[0, 0]), el(&[1, 1])]);

        let f3f3 = ring(vec![gf(3, 1), gf(3, 1)]);
        let g = generation_closure(&f3f3, Source::ExceptionalUnits, DEFAULT_CAP).unwrap();
        assert!(!g.is_full());
        assert_eq!(g.len(), 3);
    }

    #[test]
    fn two_residue_four_components_need_products() {
        // Sums of exceptional units of GF(4)+GF(4) never reach (0, a), but
        // sums of products of them reach everything.
        let r = ring(vec![gf(2, 2), gf(2, 2)]);
        let sums = sumset_union(&r, Source::ExceptionalUnits, DEFAULT_CAP).unwrap();
        assert!(!sums.contains_index(r.index_of(&el(&[0, 2]))));
        assert!(generation_closure(&r, Source::ExceptionalUnits, DEFAULT_CAP).unwrap().is_full());
    }

    #[test]
    fn naive_agrees_with_convolution() {
        let r = ring(vec![LocalRingSpec::zpe(3, 2).unwrap()]);
        for c in r.elements(DEFAULT_CAP).unwrap() {
            let fast = count_sum_tuples(&r, 3, &c, Source::ExceptionalUnits, DEFAULT_CAP).unwrap();
            let slow = count_tuples_naive(&r, 3, &c, Op::Sum, Source::ExceptionalUnits, DEFAULT_CAP).unwrap();
            assert_eq!(fast, slow);
        }
    }
}
