//! Cyclic codes over `R` given by generator data `<g1 + (1+u)g2, (1+u)g3>`.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::poly::{PolyError, PolyR, PolyZ4};
use crate::ring::{self, RingElement};

pub const DEFAULT_ENUMERATION_CAP: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecViolation {
    #[error("length must be at least 1")]
    ZeroLength,
    #[error("length {0} is even")]
    EvenLength(usize),
    #[error("g1 = {0} is not monic")]
    G1NotMonic(String),
    #[error("g3 = {0} is not monic")]
    G3NotMonic(String),
    #[error("g1 does not divide x^n - 1 mod 2")]
    G1NotDivisorMod2,
    #[error("g3 does not divide g1 mod 2")]
    G3NotDivisorMod2,
    #[error("g1 does not divide x^n - 1 over Z4")]
    G1NotDivisorZ4,
    #[error("g3 does not divide g1 over Z4")]
    G3NotDivisorZ4,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct SpecError {
    pub violations: Vec<SpecViolation>,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msgs: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "invalid code spec: {}", msgs.join("; "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error("code has more than {cap} codewords")]
    CapExceeded { cap: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Generator data for a cyclic code of odd length `n` over `R`.
///
/// An absent `g3` is the single-generator code `<g1 + (1+u)g2>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CodeSpec {
    pub n: usize,
    pub g1: PolyZ4,
    pub g2: PolyR,
    pub g3: Option<PolyZ4>,
    pub strict_z4_divisibility: bool,
}

impl CodeSpec {
    pub fn single(n: usize, g1: PolyZ4, g2: PolyR) -> Self {
        CodeSpec {
            n,
            g1,
            g2,
            g3: None,
            strict_z4_divisibility: false,
        }
    }

    pub fn pair(n: usize, g1: PolyZ4, g2: PolyR, g3: PolyZ4) -> Self {
        CodeSpec {
            n,
            g1,
            g2,
            g3: Some(g3),
            strict_z4_divisibility: false,
        }
    }

    pub fn strict(mut self, on: bool) -> Self {
        self.strict_z4_divisibility = on;
        self
    }

    pub fn is_single_generator(&self) -> bool {
        self.g3.is_none()
    }

    /// `g3`, reading an absent one as `g1`.
    pub fn effective_g3(&self) -> &PolyZ4 {
        self.g3.as_ref().unwrap_or(&self.g1)
    }

    pub fn validate(&self) -> Result<(), SpecError> {
        let mut violations = Vec::new();
        if self.n == 0 {
            violations.push(SpecViolation::ZeroLength);
        } else if self.n.is_multiple_of(2) {
            violations.push(SpecViolation::EvenLength(self.n));
        }
        if !self.g1.is_monic() {
            violations.push(SpecViolation::G1NotMonic(self.g1.to_bracket_string()));
        }
        if let Some(g3) = &self.g3 {
            if !g3.is_monic() {
                violations.push(SpecViolation::G3NotMonic(g3.to_bracket_string()));
            }
        }
        if self.n > 0 && self.g1.is_monic() {
            let xn = PolyZ4::xn_minus_1(self.n);
            if !self.g1.divides_mod2(&xn).unwrap_or(false) {
                violations.push(SpecViolation::G1NotDivisorMod2);
            }
            if self.strict_z4_divisibility && !self.g1.divides(&xn).unwrap_or(false) {
                violations.push(SpecViolation::G1NotDivisorZ4);
            }
            if let Some(g3) = self.g3.as_ref().filter(|g| g.is_monic()) {
                if !g3.divides_mod2(&self.g1).unwrap_or(false) {
                    violations.push(SpecViolation::G3NotDivisorMod2);
                }
                if self.strict_z4_divisibility && !g3.divides(&self.g1).unwrap_or(false) {
                    violations.push(SpecViolation::G3NotDivisorZ4);
                }
            }
        }
        if violations.is_empty() {
            Ok(())
        } else {
            Err(SpecError { violations })
        }
    }

    /// The generator polynomials over `R`: `g1 + (1+u)g2`, then `(1+u)g3` if present.
    pub fn generators(&self) -> Vec<PolyR> {
        let opu = RingElement::ONE_PLUS_U;
        let mut gens = vec![&self.g1.to_ring() + &self.g2.scale(opu)];
        if let Some(g3) = &self.g3 {
            gens.push(g3.to_ring().scale(opu));
        }
        gens
    }

    /// Generator data of `<(1+u)g3>`, written with `g1 = x^n - 1` and `g2 = 0`.
    pub fn one_plus_u_g3_spec(&self) -> CodeSpec {
        CodeSpec::pair(
            self.n,
            PolyZ4::xn_minus_1(self.n),
            PolyR::zero(),
            self.effective_g3().clone(),
        )
    }
}

impl fmt::Display for CodeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} g1={} g2={}",
            self.n,
            self.g1.to_bracket_string(),
            self.g2.to_bracket_string()
        )?;
        match &self.g3 {
            Some(g3) => write!(f, " g3={}", g3.to_bracket_string()),
            None => write!(f, " g3=-"),
        }
    }
}

/// A word of `R^n`; the derived order is lexicographic on `(a, b)` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Codeword(Vec<RingElement>);

impl Codeword {
    pub fn new(coords: Vec<RingElement>) -> Self {
        Codeword(coords)
    }

    pub fn zero(n: usize) -> Self {
        Codeword(vec![RingElement::ZERO; n])
    }

    pub fn constant(n: usize, c: RingElement) -> Self {
        Codeword(vec![c; n])
    }

    pub fn from_poly(p: &PolyR, n: usize) -> Self {
        Codeword(p.cyclic_coeffs(n))
    }

    pub fn coords(&self) -> &[RingElement] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn distance(&self, other: &Codeword) -> usize {
        self.0.iter().zip(&other.0).filter(|(a, b)| a != b).count()
    }

    /// Cyclic shift `(c0, ..., c_{n-1}) -> (c_{n-1}, c0, ..., c_{n-2})`, i.e. multiplication by `x`.
    pub fn shift(&self) -> Codeword {
        let mut v = self.0.clone();
        v.rotate_right(1);
        Codeword(v)
    }

    pub fn add(&self, other: &Codeword) -> Codeword {
        Codeword(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    pub fn scale(&self, c: RingElement) -> Codeword {
        Codeword(self.0.iter().map(|&a| c * a).collect())
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for Codeword {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A fully enumerated code. Words are kept sorted.
#[derive(Debug)]
pub struct Code {
    n: usize,
    spec: Option<CodeSpec>,
    words: Vec<Codeword>,
    index: HashSet<Codeword>,
    min_distance: OnceLock<Option<usize>>,
    weights: OnceLock<Vec<usize>>,
}

impl Code {
    /// Enumerates the ideal described by a valid spec.
    pub fn enumerate(spec: &CodeSpec, cap: usize) -> Result<Code, CodeError> {
        spec.validate()?;
        let mut code = Code::from_generators(spec.n, &spec.generators(), cap)?;
        code.spec = Some(spec.clone());
        Ok(code)
    }

    /// The `R`-submodule of `R^n` spanned by all cyclic shifts of the generators.
    pub fn from_generators(n: usize, generators: &[PolyR], cap: usize) -> Result<Code, CodeError> {
        if n == 0 {
            return Err(SpecError {
                violations: vec![SpecViolation::ZeroLength],
            }
            .into());
        }
        let mut span: HashSet<Codeword> = HashSet::from([Codeword::zero(n)]);
        for g in generators {
            let mut v = Codeword::from_poly(g, n);
            for _ in 0..n {
                // span is a submodule, so v in span already covers R v
                if !span.contains(&v) {
                    let mut multiples: Vec<Codeword> = ring::all().map(|c| v.scale(c)).collect();
                    multiples.sort();
                    multiples.dedup();
                    let mut next = HashSet::with_capacity(span.len() * 2);
                    for s in &span {
                        for m in &multiples {
                            next.insert(s.add(m));
                            if next.len() > cap {
                                return Err(CodeError::CapExceeded { cap });
                            }
                        }
                    }
                    span = next;
                }
                v = v.shift();
            }
        }
        Ok(Code::from_set(n, None, span))
    }

    fn from_set(n: usize, spec: Option<CodeSpec>, index: HashSet<Codeword>) -> Code {
        let mut words: Vec<Codeword> = index.iter().cloned().collect();
        words.sort();
        Code {
            n,
            spec,
            words,
            index,
            min_distance: OnceLock::new(),
            weights: OnceLock::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spec(&self) -> Option<&CodeSpec> {
        self.spec.as_ref()
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn cardinality(&self) -> usize {
        self.words.len()
    }

    pub fn contains(&self, w: &Codeword) -> bool {
        self.index.contains(w)
    }

    pub fn is_zero_code(&self) -> bool {
        self.words.len() == 1
    }

    /// Minimum weight of a nonzero word; `None` for the zero code.
    pub fn min_hamming_distance(&self) -> Option<usize> {
        *self.min_distance.get_or_init(|| {
            self.words
                .iter()
                .map(Codeword::weight)
                .filter(|&w| w > 0)
                .min()
        })
    }

    /// `A_i` for `i = 0..=n`.
    pub fn weight_enumerator(&self) -> &[usize] {
        self.weights.get_or_init(|| {
            let mut a = vec![0; self.n + 1];
            for w in &self.words {
                a[w.weight()] += 1;
            }
            a
        })
    }

    /// Codewords that are `(1+u)`-multiples, i.e. every coordinate lies in `R(1+u)`.
    pub fn subcode_1pu(&self) -> Code {
        let index: HashSet<Codeword> = self
            .words
            .iter()
            .filter(|w| w.coords().iter().all(|&c| ring::in_ideal_one_plus_u(c)))
            .cloned()
            .collect();
        Code::from_set(self.n, None, index)
    }

    pub fn is_shift_closed(&self) -> bool {
        self.words.iter().all(|w| self.contains(&w.shift()))
    }

    pub fn is_addition_closed(&self) -> bool {
        self.words
            .iter()
            .all(|a| self.words.iter().all(|b| self.contains(&a.add(b))))
    }

    pub fn is_scalar_closed(&self) -> bool {
        self.words
            .iter()
            .all(|w| ring::all().all(|c| self.contains(&w.scale(c))))
    }

    /// Shift-, addition- and scalar-closure, checked exhaustively.
    pub fn is_cyclic(&self) -> bool {
        self.is_shift_closed() && self.is_scalar_closed() && self.is_addition_closed()
    }

    pub fn same_words(&self, other: &Code) -> bool {
        self.words == other.words
    }

    pub fn report(&self, max_listed: Option<usize>) -> CodeReport<'_> {
        CodeReport {
            spec: self.spec.as_ref(),
            n: self.n,
            cardinality: self.cardinality(),
            min_distance: self.min_hamming_distance(),
            weight_enumerator: self.weight_enumerator().to_vec(),
            words: max_listed
                .filter(|&b| self.cardinality() <= b)
                .map(|_| self.words.as_slice()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CodeReport<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<&'a CodeSpec>,
    pub n: usize,
    pub cardinality: usize,
    pub min_distance: Option<usize>,
    pub weight_enumerator: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub words: Option<&'a [Codeword]>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4(v: &[u8]) -> PolyZ4 {
        PolyZ4::from_u8s(v)
    }

    fn f2() -> PolyZ4 {
        z4(&[1, 1, 1])
    }

    fn constant_code_spec() -> CodeSpec {
        CodeSpec::single(3, f2(), f2().to_ring())
    }

    fn x3_spec() -> CodeSpec {
        let g = z4(&[3, 0, 0, 1]);
        CodeSpec::pair(3, g.clone(), g.to_ring(), f2())
    }

    /// Oracle: the sumset `{a g1' + b g3'}` over every pair of multipliers in `R[x]/(x^n-1)`.
    fn sumset_oracle(spec: &CodeSpec) -> Vec<Codeword> {
        let n = spec.n;
        let mults: Vec<PolyR> = (0..16usize.pow(n as u32))
            .map(|mut k| {
                let mut v = Vec::new();
                for _ in 0..n {
                    v.push(RingElement::from_index(k % 16));
                    k /= 16;
                }
                PolyR::new(v)
            })
            .collect();
        let image = |g: &PolyR| -> HashSet<Codeword> {
            mults
                .iter()
                .map(|a| Codeword::from_poly(&(a * g), n))
                .collect()
        };
        let gens = spec.generators();
        let first = image(&gens[0]);
        let second = gens
            .get(1)
            .map(image)
            .unwrap_or_else(|| HashSet::from([Codeword::zero(n)]));
        let mut all: Vec<Codeword> = first
            .iter()
            .flat_map(|a| second.iter().map(move |b| a.add(b)))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        all.sort();
        all
    }

    #[test]
    fn validation() {
        assert!(constant_code_spec().validate().is_ok());
        let two = CodeSpec::pair(3, z4(&[3, 1]) * f2(), (z4(&[3, 1]) * f2()).to_ring(), f2());
        assert!(two.validate().is_ok());
        assert!(two.clone().strict(true).validate().is_ok());
        let even = CodeSpec::single(4, z4(&[3, 1]), PolyR::zero());
        assert_eq!(
            even.validate().unwrap_err().violations,
            vec![SpecViolation::EvenLength(4)]
        );
        // x+1 divides x^3-1 only mod 2
        let loose = CodeSpec::single(3, z4(&[1, 1]), PolyR::zero());
        assert!(loose.validate().is_ok());
        assert_eq!(
            loose.strict(true).validate().unwrap_err().violations,
            vec![SpecViolation::G1NotDivisorZ4]
        );
        let bad = CodeSpec::pair(3, z4(&[1, 2]), PolyR::zero(), z4(&[1, 1, 2]));
        let v = bad.validate().unwrap_err().violations;
        assert_eq!(v.len(), 2);
        assert!(matches!(v[0], SpecViolation::G1NotMonic(_)));
        let chain = CodeSpec::pair(3, z4(&[3, 1]), PolyR::zero(), f2());
        assert_eq!(
            chain.validate().unwrap_err().violations,
            vec![SpecViolation::G3NotDivisorMod2]
        );
    }

    #[test]
    fn constant_code() {
        let code = Code::enumerate(&constant_code_spec(), DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(code.cardinality(), 16);
        let expect: Vec<Codeword> = ring::all()
            .map(|l| Codeword::constant(3, l * RingElement::TWO_PLUS_U))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(code.words(), expect.as_slice());
        assert_eq!(
            code.words(),
            sumset_oracle(&constant_code_spec()).as_slice()
        );
        assert_eq!(code.min_hamming_distance(), Some(3));
        assert_eq!(code.weight_enumerator(), &[1, 0, 0, 15]);
        assert!(code.is_cyclic());
    }

    #[test]
    fn x3_minus_1_generator_collapses() {
        // g1 = g2 = x^3 - 1 vanish mod x^3 - 1; only (1+u)(x^2+x+1) survives
        let spec = x3_spec();
        let code = Code::enumerate(&spec, DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(code.words(), sumset_oracle(&spec).as_slice());
        assert_eq!(code.cardinality(), 4);
        assert_eq!(
            code.weight_enumerator().iter().sum::<usize>(),
            code.cardinality()
        );
        assert_eq!(code.min_hamming_distance(), Some(3));
        assert!(code.is_cyclic());
    }

    #[test]
    fn zero_code() {
        let spec = CodeSpec::single(5, PolyZ4::xn_minus_1(5), PolyR::zero());
        let code = Code::enumerate(&spec, 10).unwrap();
        assert_eq!(code.cardinality(), 1);
        assert!(code.is_zero_code());
        assert_eq!(code.min_hamming_distance(), None);
        assert_eq!(code.weight_enumerator(), &[1, 0, 0, 0, 0, 0]);
        assert!(code.subcode_1pu().is_zero_code());
    }

    #[test]
    fn cap_is_enforced() {
        let spec = CodeSpec::single(3, PolyZ4::one(), PolyR::zero());
        assert_eq!(
            Code::enumerate(&spec, 100).unwrap_err(),
            CodeError::CapExceeded { cap: 100 }
        );
        assert_eq!(Code::enumerate(&spec, 4096).unwrap().cardinality(), 4096);
    }

    #[test]
    fn subcode_matches_one_plus_u_g3() {
        for spec in [constant_code_spec(), x3_spec()] {
            let code = Code::enumerate(&spec, DEFAULT_ENUMERATION_CAP).unwrap();
            let direct =
                Code::enumerate(&spec.one_plus_u_g3_spec(), DEFAULT_ENUMERATION_CAP).unwrap();
            assert!(code.subcode_1pu().same_words(&direct));
            assert_eq!(direct.cardinality(), 4);
        }
    }

    #[test]
    fn random_generators_match_oracle() {
        use proptest::prelude::*;
        use proptest::test_runner::{Config, TestRunner};
        let mut runner = TestRunner::new(Config::with_cases(12));
        let poly = prop::collection::vec(0usize..16, 0..3)
            .prop_map(|v| PolyR::new(v.into_iter().map(RingElement::from_index).collect()));
        runner
            .run(&(poly.clone(), poly), |(a, b)| {
                let code = Code::from_generators(2, &[a.clone(), b.clone()], 1 << 12).unwrap();
                // length 2 keeps the sumset oracle small
                let mut spanned: HashSet<Codeword> = HashSet::new();
                for k in 0..256usize {
                    for j in 0..256usize {
                        let m1 = PolyR::new(vec![
                            RingElement::from_index(k % 16),
                            RingElement::from_index(k / 16),
                        ]);
                        let m2 = PolyR::new(vec![
                            RingElement::from_index(j % 16),
                            RingElement::from_index(j / 16),
                        ]);
                        spanned.insert(Codeword::from_poly(&(&(&m1 * &a) + &(&m2 * &b)), 2));
                    }
                }
                prop_assert_eq!(code.cardinality(), spanned.len());
                prop_assert!(code.words().iter().all(|w| spanned.contains(w)));
                let c = code.cardinality();
                prop_assert!(c.is_power_of_two());
                Ok(())
            })
            .unwrap();
    }

    #[test]
    fn rendering() {
        assert_eq!(
            constant_code_spec().to_string(),
            "n=3 g1=[1,1,1] g2=[1,1,1] g3=-"
        );
        let w = Codeword::new(vec![
            RingElement::ONE,
            RingElement::TWO_PLUS_U,
            RingElement::ZERO,
        ]);
        assert_eq!(w.to_string(), "(1,2+u,0)");
        assert_eq!(w.shift().to_string(), "(0,1,2+u)");
    }
}
