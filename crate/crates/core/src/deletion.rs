//! Deletion similarity (longest common subsequence) and the deletion distance
//! of a code.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::code::{Code, Codeword};
use crate::constraints::theta_image;

/// Default bound on the number of unordered word pairs compared per code.
pub const DEFAULT_PAIR_CAP: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeletionError {
    #[error("code has {0} word(s); at least 2 are needed")]
    TooFewWords(usize),
    #[error("{pairs} word pairs exceed the pair cap of {cap}")]
    PairCapExceeded { pairs: usize, cap: usize },
}

/// Length of a longest common subsequence of `x` and `y`.
pub fn deletion_similarity<T: PartialEq>(x: &[T], y: &[T]) -> usize {
    let (long, short) = if x.len() >= y.len() { (x, y) } else { (y, x) };
    let mut prev = vec![0usize; short.len() + 1];
    let mut cur = vec![0usize; short.len() + 1];
    for a in long {
        for (j, b) in short.iter().enumerate() {
            cur[j + 1] = if a == b {
                prev[j] + 1
            } else {
                prev[j + 1].max(cur[j])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[short.len()]
}

/// `E(x, y^rc)`: bonding strength of `x` against the reverse complement of
/// `y`. Equal to `S(x, y)` by definition.
pub fn hybridization_energy<T: PartialEq>(
    x: &[T],
    y_rc: &[T],
    rc: impl Fn(&[T]) -> Vec<T>,
) -> usize {
    deletion_similarity(x, &rc(y_rc))
}

/// One longest common subsequence, as a witness.
pub fn longest_common_subsequence<T: PartialEq + Clone>(x: &[T], y: &[T]) -> Vec<T> {
    let (n, m) = (x.len(), y.len());
    let mut t = vec![vec![0usize; m + 1]; n + 1];
    for i in (0..n).rev() {
        for j in (0..m).rev() {
            t[i][j] = if x[i] == y[j] {
                t[i + 1][j + 1] + 1
            } else {
                t[i + 1][j].max(t[i][j + 1])
            };
        }
    }
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::with_capacity(t[0][0]);
    while i < n && j < m {
        if x[i] == y[j] {
            out.push(x[i].clone());
            i += 1;
            j += 1;
        } else if t[i + 1][j] >= t[i][j + 1] {
            i += 1;
        } else {
            j += 1;
        }
    }
    out
}

pub fn is_subsequence<T: PartialEq>(sub: &[T], seq: &[T]) -> bool {
    let mut it = seq.iter();
    sub.iter().all(|s| it.any(|x| x == s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Granularity {
    /// Codewords compared as strings of ring symbols, length `n`.
    #[default]
    Symbol,
    /// Theta images compared as nucleotide strings, length `2n`.
    Nucleotide,
}

impl Granularity {
    pub fn effective_length(self, n: usize) -> usize {
        match self {
            Granularity::Symbol => n,
            Granularity::Nucleotide => 2 * n,
        }
    }
}

impl fmt::Display for Granularity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Granularity::Symbol => "symbol",
            Granularity::Nucleotide => "nucleotide",
        })
    }
}

impl std::str::FromStr for Granularity {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "symbol" => Ok(Granularity::Symbol),
            "nucleotide" => Ok(Granularity::Nucleotide),
            _ => Err(format!("unknown granularity `{s}` (symbol, nucleotide)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimilarityReport {
    pub granularity: Granularity,
    pub effective_length: usize,
    pub max_similarity: usize,
    /// Rendered as coordinate tuples or DNA strings, by granularity.
    pub pair: (String, String),
    /// `L - 1 - max S`.
    pub deletion_distance: i64,
}

fn render(w: &Codeword, g: Granularity) -> String {
    match g {
        Granularity::Symbol => w.to_string(),
        Granularity::Nucleotide => theta_image(w).to_string(),
    }
}

/// Per-symbol match masks of a sequence of at most 128 symbols below 16.
#[derive(Clone)]
struct MatchMasks {
    masks: [u128; 16],
    len: usize,
}

impl MatchMasks {
    fn new(y: &[u8]) -> Self {
        assert!(y.len() <= 128);
        let mut masks = [0u128; 16];
        for (j, &b) in y.iter().enumerate() {
            masks[b as usize] |= 1 << j;
        }
        MatchMasks {
            masks,
            len: y.len(),
        }
    }

    /// Bit-parallel LCS length of `x` against the masked sequence.
    fn lcs(&self, x: &[u8]) -> usize {
        let full = if self.len == 128 {
            !0
        } else {
            (1u128 << self.len) - 1
        };
        let mut v = full;
        for &a in x {
            let m = self.masks[a as usize];
            let u = v & m;
            v = (v.wrapping_add(u) | (v & !m)) & full;
        }
        self.len - v.count_ones() as usize
    }
}

fn sequence(w: &Codeword, g: Granularity) -> Vec<u8> {
    match g {
        Granularity::Symbol => w.coords().iter().map(|c| c.index() as u8).collect(),
        Granularity::Nucleotide => theta_image(w)
            .as_slice()
            .iter()
            .map(|n| n.to_z4().value())
            .collect(),
    }
}

/// Maximum deletion similarity over distinct codeword pairs. Ties go to the
/// lexicographically first pair of word indices.
pub fn code_similarity_report(
    code: &Code,
    g: Granularity,
    pair_cap: usize,
) -> Result<SimilarityReport, DeletionError> {
    let words = code.words();
    let k = words.len();
    if k < 2 {
        return Err(DeletionError::TooFewWords(k));
    }
    let pairs = k * (k - 1) / 2;
    if pairs > pair_cap {
        return Err(DeletionError::PairCapExceeded {
            pairs,
            cap: pair_cap,
        });
    }
    let seqs: Vec<Vec<u8>> = words.iter().map(|w| sequence(w, g)).collect();
    let masks: Vec<MatchMasks> = seqs.iter().map(|s| MatchMasks::new(s)).collect();
    let (s, i, j) = (0..k)
        .into_par_iter()
        .flat_map_iter(|i| (i + 1..k).map(move |j| (i, j)))
        .map(|(i, j)| (masks[j].lcs(&seqs[i]), i, j))
        .reduce(
            || (0, usize::MAX, usize::MAX),
            |a, b| {
                if a.0 > b.0 || (a.0 == b.0 && (a.1, a.2) < (b.1, b.2)) {
                    a
                } else {
                    b
                }
            },
        );
    let len = g.effective_length(code.n());
    Ok(SimilarityReport {
        granularity: g,
        effective_length: len,
        max_similarity: s,
        pair: (render(&words[i], g), render(&words[j], g)),
        deletion_distance: len as i64 - 1 - s as i64,
    })
}

/// The three defining conditions of an `(n, D)` DNA code, evaluated separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NdVerdict {
    pub d: i64,
    pub granularity: Granularity,
    pub cyclic: bool,
    pub rc_distinct_and_closed: bool,
    pub similarity_bounded: bool,
    pub max_similarity: usize,
    pub holds: bool,
}

pub fn is_nd_dna_code(
    code: &Code,
    d: i64,
    g: Granularity,
    pair_cap: usize,
) -> Result<NdVerdict, DeletionError> {
    let report = code_similarity_report(code, g, pair_cap)?;
    let cyclic = code.is_cyclic();
    let rc = code.words().iter().all(|w| {
        let rc = w.reverse_complement();
        rc != *w && code.contains(&rc)
    });
    let bounded = (report.max_similarity as i64) < report.effective_length as i64 - d;
    Ok(NdVerdict {
        d,
        granularity: g,
        cyclic,
        rc_distinct_and_closed: rc,
        similarity_bounded: bounded,
        max_similarity: report.max_similarity,
        holds: cyclic && rc && bounded,
    })
}

/// Deletion distance of a code next to that of its `(1+u)` subcode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubcodeDistance {
    pub granularity: Granularity,
    pub code_words: usize,
    pub subcode_words: usize,
    pub code_d: i64,
    pub subcode_d: i64,
    pub equal: bool,
}

pub fn subcode_deletion_distance(
    code: &Code,
    g: Granularity,
    pair_cap: usize,
) -> Result<SubcodeDistance, DeletionError> {
    let sub = code.subcode_1pu();
    if sub.cardinality() < 2 {
        return Err(DeletionError::TooFewWords(sub.cardinality()));
    }
    let d = code_similarity_report(code, g, pair_cap)?.deletion_distance;
    let ds = code_similarity_report(&sub, g, pair_cap)?.deletion_distance;
    Ok(SubcodeDistance {
        granularity: g,
        code_words: code.cardinality(),
        subcode_words: sub.cardinality(),
        code_d: d,
        subcode_d: ds,
        equal: d == ds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{CodeSpec, DEFAULT_ENUMERATION_CAP};
    use crate::constraints::DnaString;
    use crate::poly::{PolyR, PolyZ4};
    use crate::ring::Nucleotide;
    use proptest::prelude::*;

    /// Exponential oracle: longest common subsequence by trying every subset of `x`.
    fn lcs_by_subsets(x: &[u8], y: &[u8]) -> usize {
        (0u32..1 << x.len())
            .filter_map(|mask| {
                let sub: Vec<u8> = (0..x.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| x[i])
                    .collect();
                is_subsequence(&sub, y).then_some(sub.len())
            })
            .max()
            .unwrap_or(0)
    }

    fn dna(s: &str) -> Vec<Nucleotide> {
        s.parse::<DnaString>().unwrap().as_slice().to_vec()
    }

    fn constant_code(n: usize) -> Code {
        let g = PolyZ4::new((0..n).map(|_| crate::ring::Z4::ONE).collect());
        Code::enumerate(
            &CodeSpec::single(n, g.clone(), g.to_ring()),
            DEFAULT_ENUMERATION_CAP,
        )
        .unwrap()
    }

    #[test]
    fn small_lcs() {
        assert_eq!(deletion_similarity(&dna("TCAGG"), &dna("TACGT")), 3);
        assert_eq!(deletion_similarity(&dna("ATATAT"), &dna("TATATA")), 5);
        assert_eq!(deletion_similarity::<u8>(&[], &[1, 2]), 0);
        let w = longest_common_subsequence(&dna("TCAGG"), &dna("TACGT"));
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn energy_is_similarity() {
        let x = dna("TCAGG");
        let y = DnaString::new(dna("TACGT"));
        let rc = |s: &[Nucleotide]| {
            DnaString::new(s.to_vec())
                .reverse_complement()
                .as_slice()
                .to_vec()
        };
        let e = hybridization_energy(&x, y.reverse_complement().as_slice(), rc);
        assert_eq!(e, deletion_similarity(&x, y.as_slice()));
    }

    proptest! {
        #[test]
        fn lcs_matches_subset_oracle(x in prop::collection::vec(0u8..4, 0..9), y in prop::collection::vec(0u8..4, 0..9)) {
            let s = deletion_similarity(&x, &y);
            prop_assert_eq!(s, lcs_by_subsets(&x, &y));
            prop_assert_eq!(s, deletion_similarity(&y, &x));
            let w = longest_common_subsequence(&x, &y);
            prop_assert_eq!(w.len(), s);
            prop_assert!(is_subsequence(&w, &x) && is_subsequence(&w, &y));
        }

        #[test]
        fn bit_parallel_matches_dp(x in prop::collection::vec(0u8..16, 0..130), y in prop::collection::vec(0u8..16, 0..=128)) {
            prop_assert_eq!(MatchMasks::new(&y).lcs(&x), deletion_similarity(&x, &y));
        }
    }

    #[test]
    fn constant_code_length_3() {
        let code = constant_code(3);
        let r = code_similarity_report(&code, Granularity::Symbol, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(
            (r.effective_length, r.max_similarity, r.deletion_distance),
            (3, 0, 2)
        );
        let r = code_similarity_report(&code, Granularity::Nucleotide, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!(
            (r.effective_length, r.max_similarity, r.deletion_distance),
            (6, 5, 0)
        );
        assert_eq!(r.pair, ("ATATAT".to_string(), "TATATA".to_string()));
    }

    #[test]
    fn constant_code_length_9() {
        let code = constant_code(9);
        let r = code_similarity_report(&code, Granularity::Symbol, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!((r.max_similarity, r.deletion_distance), (0, 8));
        let v = is_nd_dna_code(&code, 8, Granularity::Symbol, DEFAULT_PAIR_CAP).unwrap();
        assert!(v.cyclic && v.rc_distinct_and_closed && v.similarity_bounded && v.holds);
        assert!(
            !is_nd_dna_code(&code, 9, Granularity::Symbol, DEFAULT_PAIR_CAP)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn report_is_deterministic() {
        let code = constant_code(3);
        let a = code_similarity_report(&code, Granularity::Nucleotide, DEFAULT_PAIR_CAP).unwrap();
        for _ in 0..5 {
            assert_eq!(
                code_similarity_report(&code, Granularity::Nucleotide, DEFAULT_PAIR_CAP).unwrap(),
                a
            );
        }
    }

    #[test]
    fn caps_and_small_codes() {
        let code = constant_code(3);
        assert_eq!(
            code_similarity_report(&code, Granularity::Symbol, 10).unwrap_err(),
            DeletionError::PairCapExceeded {
                pairs: 120,
                cap: 10
            }
        );
        let zero = Code::enumerate(
            &CodeSpec::single(3, PolyZ4::xn_minus_1(3), PolyR::zero()),
            16,
        )
        .unwrap();
        assert_eq!(
            code_similarity_report(&zero, Granularity::Symbol, 10).unwrap_err(),
            DeletionError::TooFewWords(1)
        );
    }

    #[test]
    fn subcode_distance() {
        let g = PolyZ4::from_u8s(&[3, 0, 0, 1]);
        let spec = CodeSpec::pair(3, g.clone(), g.to_ring(), PolyZ4::from_u8s(&[1, 1, 1]));
        let code = Code::enumerate(&spec, DEFAULT_ENUMERATION_CAP).unwrap();
        let r = subcode_deletion_distance(&code, Granularity::Symbol, DEFAULT_PAIR_CAP).unwrap();
        assert_eq!((r.code_words, r.subcode_words), (4, 4));
        assert_eq!((r.code_d, r.subcode_d), (2, 2));
        assert!(r.equal);
    }
}
