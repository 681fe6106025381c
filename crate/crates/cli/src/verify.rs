//! Formula-versus-oracle sweep over a list of rings.

use std::collections::BTreeMap;

use exunit_core::charsum::{self, ORTHOGONALITY_TOL};
use exunit_core::counting::{self, mu_local};
use exunit_core::oracle::{self, ElementSet, Op, Source};
use exunit_core::structure::{self, SetDescriptor};
use exunit_core::{Count, Element, LocalRingSpec, RingSpec};
use rayon::prelude::*;

use crate::literal::format_element;

/// Structure sets are compared for `2 <= k <= STRUCTURE_KMAX`, two full
/// periods modulo 6.
pub const STRUCTURE_KMAX: u32 = 13;
/// Generation predicates are checked on rings up to this size.
pub const GENERATION_LIMIT: u128 = 500;
/// Enumeration cap for sweeps unless overridden.
pub const SWEEP_CAP: u64 = 10_000;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub kmax: u32,
    pub cap: u64,
    /// Added to every local `mu` factor. Nonzero only to confirm that the
    /// sweep notices a broken formula.
    pub mu_offset: i64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { kmax: 5, cap: SWEEP_CAP, mu_offset: 0 }
    }
}

#[derive(Debug, Clone, Default)]
pub struct RingReport {
    pub ring: String,
    pub order: u128,
    /// Checks run, per family.
    pub checks: BTreeMap<&'static str, u64>,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl RingReport {
    pub fn total(&self) -> u64 {
        self.checks.values().sum()
    }

    fn record(&mut self, family: &'static str, ok: bool, describe: impl FnOnce() -> String) {
        *self.checks.entry(family).or_default() += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(format!("{family}: {}", describe()));
            }
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub rings: Vec<RingReport>,
}

impl VerifyReport {
    pub fn total(&self) -> u64 {
        self.rings.iter().map(RingReport::total).sum()
    }

    pub fn failures(&self) -> u64 {
        self.rings.iter().map(|r| r.failures).sum()
    }

    pub fn first_failure(&self) -> Option<(&str, &str)> {
        self.rings.iter().find_map(|r| r.first_failure.as_deref().map(|f| (r.ring.as_str(), f)))
    }
}

fn show(v: &exunit_core::Result<Count>) -> String {
    match v {
        Ok(c) => c.to_string(),
        Err(e) => format!("error ({e})"),
    }
}

fn check_sums(report: &mut RingReport, ring: &RingSpec, opts: &VerifyOptions, source: Source) -> exunit_core::Result<()> {
    let family = match source {
        Source::Units => "psi",
        Source::ExceptionalUnits => "phi",
    };
    let tables = oracle::sum_tables(ring, opts.kmax, source, opts.cap)?;
    for k in 2..=opts.kmax {
        let table = &tables[k as usize - 1];
        for (c, expected) in table.iter() {
            let got = match source {
                Source::Units => counting::psi_with(ring, k, &c, |s, k, m| mu_local(s, k, m).map(|v| v + opts.mu_offset)),
                Source::ExceptionalUnits => counting::phi(ring, k, &c),
            };
            report.record(family, got.as_ref() == Ok(expected), || {
                format!("k={k} c={}: formula {}, oracle {expected}", format_element(ring, &c), show(&got))
            });
        }
    }
    Ok(())
}

fn check_products(report: &mut RingReport, ring: &RingSpec, opts: &VerifyOptions) -> exunit_core::Result<()> {
    let tables = oracle::prod_tables(ring, opts.kmax, opts.cap)?;
    for k in 2..=opts.kmax {
        for u in ring.units(opts.cap)? {
            let expected = tables[k as usize - 1].get(&u)?;
            let got = counting::theta(ring, k, &u);
            report.record("theta", got.as_ref() == Ok(expected), || {
                format!("k={k} u={}: formula {}, oracle {expected}", format_element(ring, &u), show(&got))
            });
        }
    }
    Ok(())
}

type Describe = fn(&RingSpec, u32) -> exunit_core::Result<SetDescriptor>;

fn check_structure(report: &mut RingReport, ring: &RingSpec, cap: u64) -> exunit_core::Result<()> {
    let size = ring.enumerable(cap)?;
    let cases: [(&str, Describe, Op, Source); 3] = [
        ("unit sumset", structure::unit_sumset, Op::Sum, Source::Units),
        ("exceptional sumset", structure::exunit_sumset, Op::Sum, Source::ExceptionalUnits),
        ("exceptional product set", structure::exunit_prodset, Op::Prod, Source::ExceptionalUnits),
    ];
    for (name, describe, op, source) in cases {
        let reached = oracle::reachable_sets(ring, STRUCTURE_KMAX, op, source, cap)?;
        for k in 2..=STRUCTURE_KMAX {
            let descriptor = describe(ring, k)?;
            let members = descriptor.enumerate(ring, cap)?;
            let set = ElementSet::from_elements(ring, size, &members);
            let oracle_set = &reached[k as usize - 1];
            report.record("structure", &set == oracle_set, || {
                format!("{name} k={k}: descriptor {descriptor} has {} elements, oracle set has {}", set.len(), oracle_set.len())
            });
        }
    }
    Ok(())
}

fn check_generation(report: &mut RingReport, ring: &RingSpec, cap: u64) -> exunit_core::Result<()> {
    let by_units = structure::generated_by_units(ring);
    let closure = oracle::generation_closure(ring, Source::Units, cap)?.is_full();
    report.record("generation", by_units == closure, || format!("units: predicate {by_units}, closure {closure}"));
    let sums = oracle::sumset_union(ring, Source::Units, cap)?.is_full();
    report.record("generation", by_units == sums, || format!("units: predicate {by_units}, sumset union {sums}"));
    let by_ex = structure::generated_by_exceptional_units(ring);
    let closure = oracle::generation_closure(ring, Source::ExceptionalUnits, cap)?.is_full();
    report.record("generation", by_ex == closure, || {
        format!("exceptional units: predicate {by_ex}, closure {closure}")
    });
    Ok(())
}

fn check_chars(report: &mut RingReport, field: &LocalRingSpec, opts: &VerifyOptions) -> exunit_core::Result<()> {
    let q = field.residue_size();
    let table = charsum::build_table(q)?;
    let orth = charsum::orthogonality_check(&table);
    report.record("charsum", orth.max_deviation() < ORTHOGONALITY_TOL, || {
        format!("GF({q}) orthogonality residual {:e}", orth.max_deviation())
    });
    let gf = RingSpec::new(vec![table.field().clone()])?;
    let tables = oracle::prod_tables(&gf, opts.kmax, opts.cap)?;
    for c in 1..q {
        let id = charsum::nontrivial_char_sum_identity(&table, c)?;
        report.record("charsum", id.holds(), || format!("GF({q}) c={c}: character identity off by {:e}", id.char_sum_deviation()));
        let u = Element::new(vec![c]);
        for k in 2..=opts.kmax {
            let via_chars = charsum::theta_via_chars(&table, k, c).map(|t| t.value);
            let expected = tables[k as usize - 1].get(&u)?;
            let closed = counting::theta(&gf, k, &u);
            let ok = via_chars.as_ref() == Ok(expected) && closed.as_ref() == Ok(expected);
            report.record("charsum", ok, || {
                format!("GF({q}) k={k} c={c}: characters {}, closed form {}, oracle {expected}", show(&via_chars), show(&closed))
            });
        }
    }
    Ok(())
}

/// Every check family on one ring.
pub fn verify_ring(name: &str, ring: &RingSpec, opts: &VerifyOptions) -> exunit_core::Result<RingReport> {
    let mut report = RingReport { ring: name.to_string(), order: ring.order_saturating(), ..Default::default() };
    ring.enumerable(opts.cap)?;
    check_sums(&mut report, ring, opts, Source::Units)?;
    check_sums(&mut report, ring, opts, Source::ExceptionalUnits)?;
    if structure::has_exceptional_units(ring) {
        check_products(&mut report, ring, opts)?;
    }
    let enumerated = oracle::source_indices(ring, Source::ExceptionalUnits, opts.cap)?.len() as u64;
    let closed = counting::exceptional_count(ring);
    report.record("exceptional count", closed == enumerated, || format!("closed form {closed}, enumerated {enumerated}"));
    check_structure(&mut report, ring, opts.cap)?;
    if report.order <= GENERATION_LIMIT {
        check_generation(&mut report, ring, opts.cap)?;
    }
    let mut seen = Vec::new();
    for c in ring.components() {
        let q = c.residue_size();
        if c.max_ideal_size() == 1 && (3..=charsum::MAX_FIELD_SIZE).contains(&q) && !seen.contains(&q) {
            seen.push(q);
            check_chars(&mut report, c, opts)?;
        }
    }
    Ok(report)
}

/// Runs [`verify_ring`] over the corpus in parallel. Every ring is checked
/// against the cap before any work starts.
pub fn run(corpus: &[(String, RingSpec)], opts: &VerifyOptions) -> exunit_core::Result<VerifyReport> {
    for (_, ring) in corpus {
        ring.enumerable(opts.cap)?;
    }
    let rings = corpus
        .par_iter()
        .map(|(name, ring)| verify_ring(name, ring, opts))
        .collect::<exunit_core::Result<Vec<_>>>()?;
    Ok(VerifyReport { rings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse_ring;

    fn corpus(specs: &[&str]) -> Vec<(String, RingSpec)> {
        specs.iter().map(|s| (s.to_string(), parse_ring(s).unwrap())).collect()
    }

    #[test]
    fn small_corpus_passes() {
        let report = run(&corpus(&["GF(4)", "Z/12", "N(4,2)"]), &VerifyOptions { kmax: 3, ..Default::default() }).unwrap();
        assert_eq!(report.failures(), 0, "{:?}", report.first_failure());
        assert!(report.rings[0].checks.contains_key("charsum"));
        assert!(!report.rings[2].checks.contains_key("charsum"));
    }

    #[test]
    fn mu_offset_is_caught() {
        let opts = VerifyOptions { kmax: 3, mu_offset: 1, ..Default::default() };
        let report = run(&corpus(&["GF(5)"]), &opts).unwrap();
        assert!(report.failures() > 0);
        assert!(report.first_failure().unwrap().1.starts_with("psi"));
    }

    #[test]
    fn cap_is_enforced_up_front() {
        let err = run(&corpus(&["GF(3)", "Z/10^7"]), &VerifyOptions::default()).unwrap_err();
        assert!(matches!(err, exunit_core::Error::CapExceeded { .. }));
    }
}
