//! Exhaustive enumeration of generator triples for a given length.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{Code, CodeError, CodeSpec, DEFAULT_ENUMERATION_CAP};
use crate::constraints::{gc_spectrum, is_rc_closed, is_reversible, ImageMap};
use crate::deletion::{code_similarity_report, Granularity, DEFAULT_PAIR_CAP};
use crate::factor::monic_divisors;
use crate::poly::{PolyError, PolyR, PolyZ4};
use crate::ring::RingElement;

/// Candidate `g2` polynomials paired with each `(g1, g3)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum G2Family {
    /// `0`, `g1`, and every monic divisor of `x^n - 1`.
    #[default]
    Divisors,
    /// Every polynomial of degree at most `max_degree` with coefficients in `coeffs`.
    Bounded {
        max_degree: usize,
        coeffs: Vec<RingElement>,
    },
}

impl G2Family {
    fn candidates(&self, g1: &PolyZ4, divisors: &[PolyZ4]) -> Vec<PolyR> {
        let mut out = match self {
            G2Family::Divisors => {
                let mut v = vec![PolyR::zero(), g1.to_ring()];
                v.extend(divisors.iter().map(PolyZ4::to_ring));
                v
            }
            G2Family::Bounded { max_degree, coeffs } => {
                let mut set = coeffs.clone();
                set.sort();
                set.dedup();
                let mut v = vec![Vec::new()];
                for _ in 0..=*max_degree {
                    v = v
                        .into_iter()
                        .flat_map(|p: Vec<RingElement>| {
                            set.iter().map(move |&c| {
                                let mut q = p.clone();
                                q.push(c);
                                q
                            })
                        })
                        .collect();
                }
                v.into_iter().map(PolyR::new).collect()
            }
        };
        out.sort();
        out.dedup();
        out
    }
}

/// Every valid spec of length `n`: `g1` over the monic divisors of `x^n - 1`,
/// `g3` absent or over the monic divisors of `g1`, `g2` over `family`.
pub fn spec_space(n: usize, family: &G2Family) -> Result<Vec<CodeSpec>, PolyError> {
    let divisors = monic_divisors(n)?;
    let mut specs = Vec::new();
    for g1 in &divisors {
        let mut g3s = vec![None];
        for d in &divisors {
            if d.divides(g1)? {
                g3s.push(Some(d.clone()));
            }
        }
        for g3 in &g3s {
            for g2 in family.candidates(g1, &divisors) {
                let spec = match g3 {
                    None => CodeSpec::single(n, g1.clone(), g2),
                    Some(g3) => CodeSpec::pair(n, g1.clone(), g2, g3.clone()),
                };
                if spec.validate().is_ok() {
                    specs.push(spec);
                }
            }
        }
    }
    Ok(specs)
}

/// Resource bounds shared by the catalog and the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Limits {
    pub max_n: usize,
    pub enum_cap: usize,
    pub pair_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 31,
            enum_cap: DEFAULT_ENUMERATION_CAP,
            pair_cap: DEFAULT_PAIR_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub spec: String,
    pub cardinality: Option<usize>,
    pub min_distance: Option<usize>,
    pub reversible: Option<bool>,
    pub rc_closed: Option<bool>,
    /// GC count of the theta image -> number of words.
    pub gc_spectrum: Option<BTreeMap<usize, usize>>,
    pub d_symbol: Option<i64>,
    pub d_nucleotide: Option<i64>,
    /// Why the entry or its deletion distances were not computed.
    pub skipped: Option<String>,
}

impl CatalogEntry {
    pub fn evaluate(spec: &CodeSpec, limits: &Limits) -> CatalogEntry {
        let mut entry = CatalogEntry {
            spec: spec.to_string(),
            cardinality: None,
            min_distance: None,
            reversible: None,
            rc_closed: None,
            gc_spectrum: None,
            d_symbol: None,
            d_nucleotide: None,
            skipped: None,
        };
        let code = match Code::enumerate(spec, limits.enum_cap) {
            Ok(c) => c,
            Err(e) => {
                entry.skipped = Some(e.to_string());
                return entry;
            }
        };
        entry.cardinality = Some(code.cardinality());
        entry.min_distance = code.min_hamming_distance();
        entry.reversible = Some(is_reversible(&code));
        entry.rc_closed = Some(is_rc_closed(&code));
        entry.gc_spectrum = Some(gc_spectrum(&code, ImageMap::Theta));
        let d = |g| code_similarity_report(&code, g, limits.pair_cap).map(|r| r.deletion_distance);
        match (d(Granularity::Symbol), d(Granularity::Nucleotide)) {
            (Ok(s), Ok(t)) => {
                entry.d_symbol = Some(s);
                entry.d_nucleotide = Some(t);
            }
            (Err(e), _) | (_, Err(e)) => entry.skipped = Some(format!("deletion distance: {e}")),
        }
        entry
    }

    pub fn is_skipped(&self) -> bool {
        self.cardinality.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Catalog {
    pub n: usize,
    pub entries: Vec<CatalogEntry>,
    /// Cardinality -> largest symbol-granularity deletion distance seen.
    pub best_d_by_cardinality: BTreeMap<usize, i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("n = {n} exceeds the configured maximum {max}")]
    LengthAboveLimit { n: usize, max: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

pub fn catalog(n: usize, family: &G2Family, limits: &Limits) -> Result<Catalog, CatalogError> {
    if n > limits.max_n {
        return Err(CatalogError::LengthAboveLimit {
            n,
            max: limits.max_n,
        });
    }
    let specs = spec_space(n, family)?;
    let entries: Vec<CatalogEntry> = specs
        .par_iter()
        .map(|s| CatalogEntry::evaluate(s, limits))
        .collect();
    let mut best = BTreeMap::new();
    for e in &entries {
        if let (Some(k), Some(d)) = (e.cardinality, e.d_symbol) {
            let slot = best.entry(k).or_insert(d);
            *slot = (*slot).max(d);
        }
    }
    Ok(Catalog {
        n,
        entries,
        best_d_by_cardinality: best,
    })
}

/// The coefficient set `{0, 1, 1+u}`.
pub fn small_coefficients() -> Vec<RingElement> {
    vec![RingElement::ZERO, RingElement::ONE, RingElement::ONE_PLUS_U]
}

impl G2Family {
    pub fn bounded(max_degree: usize, coeffs: Vec<RingElement>) -> Self {
        G2Family::Bounded { max_degree, coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_space_length_3_matches_double_loop() {
        let divisors = monic_divisors(3).unwrap();
        let mut count = 0;
        for g1 in &divisors {
            let g3_count = 1 + divisors.iter().filter(|d| d.divides(g1).unwrap()).count();
            let mut g2s: Vec<PolyR> = vec![PolyR::zero(), g1.to_ring()];
            g2s.extend(divisors.iter().map(|d| d.to_ring()));
            g2s.sort();
            g2s.dedup();
            count += g3_count * g2s.len();
        }
        let specs = spec_space(3, &G2Family::Divisors).unwrap();
        assert_eq!(specs.len(), count);
        assert_eq!(count, 65);
        let mut rendered: Vec<String> = specs.iter().map(|s| s.to_string()).collect();
        rendered.sort();
        rendered.dedup();
        assert_eq!(rendered.len(), count);
    }

    #[test]
    fn bounded_family() {
        let g1 = PolyZ4::from_u8s(&[1, 1, 1]);
        let c = G2Family::bounded(2, small_coefficients()).candidates(&g1, &[]);
        assert_eq!(c.len(), 27);
        assert!(c.contains(&PolyR::zero()));
    }

    #[test]
    fn specs_are_valid() {
        for s in spec_space(5, &G2Family::Divisors).unwrap() {
            assert!(s.validate().is_ok());
        }
    }

    #[test]
    fn length_1_catalog() {
        let c = catalog(1, &G2Family::Divisors, &Limits::default()).unwrap();
        assert!(!c.entries.is_empty());
        assert!(c.entries.iter().all(|e| !e.is_skipped()));
    }

    #[test]
    fn length_3_catalog_contains_constant_code() {
        let c = catalog(3, &G2Family::Divisors, &Limits::default()).unwrap();
        let e = c
            .entries
            .iter()
            .find(|e| e.spec == "n=3 g1=[1,1,1] g2=[1,1,1] g3=-")
            .unwrap();
        assert_eq!(e.cardinality, Some(16));
        assert_eq!(e.min_distance, Some(3));
        assert_eq!((e.reversible, e.rc_closed), (Some(true), Some(true)));
        assert_eq!((e.d_symbol, e.d_nucleotide), (Some(2), Some(0)));
        let again = catalog(3, &G2Family::Divisors, &Limits::default()).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn limits() {
        let l = Limits {
            max_n: 3,
            ..Limits::default()
        };
        assert_eq!(
            catalog(5, &G2Family::Divisors, &l).unwrap_err(),
            CatalogError::LengthAboveLimit { n: 5, max: 3 }
        );
    }
}
