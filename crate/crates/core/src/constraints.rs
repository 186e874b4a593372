//! Reverse, complement and reverse-complement constraints; DNA images of
//! codewords; GC content.
//!
//! Each `check_*` function evaluates the closed-form generator conditions for
//! a constraint and, separately, decides the constraint by brute force on the
//! enumerated code. The two answers are reported side by side and never merged.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::catalog::{spec_space, G2Family};
use crate::code::{Code, CodeError, CodeSpec, Codeword};
use crate::poly::{PolyError, PolyR};
use crate::ring::{Nucleotide, ParseError, RingElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstraintError {
    #[error("this check needs a {expected} spec")]
    WrongArity { expected: &'static str },
    #[error("deg g2 = {deg_g2} exceeds deg g1 = {deg_g1}")]
    DegreeOrder { deg_g1: usize, deg_g2: usize },
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl Codeword {
    pub fn reverse(&self) -> Codeword {
        let mut v = self.coords().to_vec();
        v.reverse();
        Codeword::new(v)
    }

    pub fn complement(&self) -> Codeword {
        Codeword::new(self.coords().iter().map(|c| c.complement()).collect())
    }

    pub fn reverse_complement(&self) -> Codeword {
        Codeword::new(self.coords().iter().rev().map(|c| c.complement()).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DnaString(Vec<Nucleotide>);

impl DnaString {
    pub fn new(seq: Vec<Nucleotide>) -> Self {
        DnaString(seq)
    }

    pub fn as_slice(&self) -> &[Nucleotide] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Letterwise Watson-Crick complement.
    pub fn complement(&self) -> DnaString {
        DnaString(self.0.iter().map(|n| n.complement()).collect())
    }

    pub fn reverse(&self) -> DnaString {
        DnaString(self.0.iter().rev().copied().collect())
    }

    pub fn reverse_complement(&self) -> DnaString {
        DnaString(self.0.iter().rev().map(|n| n.complement()).collect())
    }

    pub fn gc_content(&self) -> usize {
        gc_content(self)
    }
}

impl fmt::Display for DnaString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|n| n.as_char()).collect();
        f.write_str(&s)
    }
}

impl FromStr for DnaString {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .map(Nucleotide::from_char)
            .collect::<Result<_, _>>()
            .map(DnaString)
    }
}

impl Serialize for DnaString {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which map turns a codeword into a DNA string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ImageMap {
    /// Each coordinate becomes its double pair: `a0 b0 a1 b1 ...`.
    Theta,
    /// All `a` parts, then all `b` parts.
    Phi,
}

pub fn theta_image(w: &Codeword) -> DnaString {
    DnaString(
        w.coords()
            .iter()
            .flat_map(|c| {
                let p = c.theta();
                [p.0, p.1]
            })
            .collect(),
    )
}

pub fn phi_image(w: &Codeword) -> DnaString {
    let a = w.coords().iter().map(|c| Nucleotide::from_z4(c.a()));
    let b = w.coords().iter().map(|c| Nucleotide::from_z4(c.b()));
    DnaString(a.chain(b).collect())
}

pub fn image(w: &Codeword, map: ImageMap) -> DnaString {
    match map {
        ImageMap::Theta => theta_image(w),
        ImageMap::Phi => phi_image(w),
    }
}

/// Number of `G`/`C` letters.
pub fn gc_content(d: &DnaString) -> usize {
    d.0.iter().filter(|n| n.is_gc()).count()
}

/// GC count -> number of codewords whose image has that count.
pub fn gc_spectrum(code: &Code, map: ImageMap) -> BTreeMap<usize, usize> {
    let mut spectrum = BTreeMap::new();
    for w in code.words() {
        *spectrum.entry(gc_content(&image(w, map))).or_insert(0) += 1;
    }
    spectrum
}

pub fn is_reversible(code: &Code) -> bool {
    code.words().iter().all(|w| code.contains(&w.reverse()))
}

pub fn is_complement_closed(code: &Code) -> bool {
    code.words().iter().all(|w| code.contains(&w.complement()))
}

pub fn is_rc_closed(code: &Code) -> bool {
    code.words()
        .iter()
        .all(|w| code.contains(&w.reverse_complement()))
}

/// The word with every coordinate `3(1+u)`.
pub fn all_three_one_plus_u(n: usize) -> Codeword {
    Codeword::constant(n, RingElement::THREE_ONE_PLUS_U)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    ReversibleSingleGenerator,
    ReversibleTwoGenerator,
    RcSingleGenerator,
    RcTwoGenerator,
}

impl Criterion {
    pub const ALL: [Criterion; 4] = [
        Criterion::ReversibleSingleGenerator,
        Criterion::ReversibleTwoGenerator,
        Criterion::RcSingleGenerator,
        Criterion::RcTwoGenerator,
    ];

    pub fn applies_to(self, spec: &CodeSpec) -> bool {
        match self {
            Criterion::ReversibleSingleGenerator | Criterion::RcSingleGenerator => {
                spec.is_single_generator()
            }
            Criterion::ReversibleTwoGenerator | Criterion::RcTwoGenerator => {
                !spec.is_single_generator()
            }
        }
    }

    pub fn check(self, spec: &CodeSpec, cap: usize) -> Result<ConstraintVerdict, ConstraintError> {
        match self {
            Criterion::ReversibleSingleGenerator => check_reversible_single(spec, cap),
            Criterion::ReversibleTwoGenerator => check_reversible_pair(spec, cap),
            Criterion::RcSingleGenerator => check_rc_single(spec, cap),
            Criterion::RcTwoGenerator => check_rc_pair(spec, cap),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Criterion::ReversibleSingleGenerator => "reversible_single_generator",
            Criterion::ReversibleTwoGenerator => "reversible_two_generator",
            Criterion::RcSingleGenerator => "rc_single_generator",
            Criterion::RcTwoGenerator => "rc_two_generator",
        }
    }
}

/// Named boolean conditions, serialized as a JSON object in insertion order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Conditions(Vec<(&'static str, bool)>);

impl Conditions {
    fn push(&mut self, name: &'static str, holds: bool) {
        self.0.push((name, holds));
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.0.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, bool)> + '_ {
        self.0.iter().copied()
    }
}

impl Serialize for Conditions {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstraintVerdict {
    pub criterion: Criterion,
    /// Value of `deg g1 - deg g2` used for the reciprocal shift.
    pub shift: usize,
    pub conditions: Conditions,
    /// The conjunction the closed-form criterion asks for.
    pub conditions_hold: bool,
    pub brute_force: bool,
    pub agreement: bool,
}

impl ConstraintVerdict {
    fn new(
        criterion: Criterion,
        shift: usize,
        conditions: Conditions,
        conditions_hold: bool,
        brute_force: bool,
    ) -> Self {
        ConstraintVerdict {
            criterion,
            shift,
            conditions,
            conditions_hold,
            brute_force,
            agreement: conditions_hold == brute_force,
        }
    }
}

/// `deg g1 - deg g2`, and `x^i g2*` (zero when `g2 = 0`).
fn shifted_reciprocal(spec: &CodeSpec) -> Result<(usize, PolyR), ConstraintError> {
    let deg_g1 = spec.g1.degree().ok_or(PolyError::ZeroPolynomial)?;
    match spec.g2.degree() {
        None => Ok((deg_g1, PolyR::zero())),
        Some(deg_g2) if deg_g2 > deg_g1 => Err(ConstraintError::DegreeOrder { deg_g1, deg_g2 }),
        Some(deg_g2) => {
            let i = deg_g1 - deg_g2;
            Ok((i, spec.g2.reciprocal()?.shift(i)))
        }
    }
}

struct SingleConditions {
    shift: usize,
    conditions: Conditions,
    holds: bool,
}

fn single_conditions(spec: &CodeSpec) -> Result<SingleConditions, ConstraintError> {
    if !spec.is_single_generator() {
        return Err(ConstraintError::WrongArity {
            expected: "single-generator",
        });
    }
    spec.validate().map_err(CodeError::from)?;
    let (shift, rec) = shifted_reciprocal(spec)?;
    let g1_sr = spec.g1.is_self_reciprocal()?;
    let fixed = rec == spec.g2;
    let fixed_cyclic = rec.mod_xn_minus_1(spec.n) == spec.g2.mod_xn_minus_1(spec.n);
    let sum = spec.g1.to_ring() == &rec + &spec.g2;
    let mut conditions = Conditions::default();
    conditions.push("g1_self_reciprocal", g1_sr);
    conditions.push("g2_reciprocal_fixed", fixed);
    conditions.push("g2_reciprocal_fixed_cyclic", fixed_cyclic);
    conditions.push("g1_is_reciprocal_sum", sum);
    Ok(SingleConditions {
        shift,
        conditions,
        holds: g1_sr && (fixed || sum),
    })
}

fn pair_conditions(spec: &CodeSpec) -> Result<SingleConditions, ConstraintError> {
    let Some(g3) = &spec.g3 else {
        return Err(ConstraintError::WrongArity {
            expected: "two-generator",
        });
    };
    spec.validate().map_err(CodeError::from)?;
    let (shift, rec) = shifted_reciprocal(spec)?;
    let g1_sr = spec.g1.is_self_reciprocal()?;
    let g3_sr = g3.is_self_reciprocal()?;
    // division in R[x] by the monic g3
    let divides = g3.to_ring().divides(&(&rec - &spec.g2))?;
    let mut conditions = Conditions::default();
    conditions.push("g1_self_reciprocal", g1_sr);
    conditions.push("g3_self_reciprocal", g3_sr);
    conditions.push("g3_divides_reciprocal_difference", divides);
    Ok(SingleConditions {
        shift,
        conditions,
        holds: g1_sr && g3_sr && divides,
    })
}

pub fn check_reversible_single(
    spec: &CodeSpec,
    cap: usize,
) -> Result<ConstraintVerdict, ConstraintError> {
    let c = single_conditions(spec)?;
    let code = Code::enumerate(spec, cap)?;
    Ok(ConstraintVerdict::new(
        Criterion::ReversibleSingleGenerator,
        c.shift,
        c.conditions,
        c.holds,
        is_reversible(&code),
    ))
}

pub fn check_reversible_pair(
    spec: &CodeSpec,
    cap: usize,
) -> Result<ConstraintVerdict, ConstraintError> {
    let c = pair_conditions(spec)?;
    let code = Code::enumerate(spec, cap)?;
    Ok(ConstraintVerdict::new(
        Criterion::ReversibleTwoGenerator,
        c.shift,
        c.conditions,
        c.holds,
        is_reversible(&code),
    ))
}

fn with_membership(
    criterion: Criterion,
    mut c: SingleConditions,
    code: &Code,
) -> ConstraintVerdict {
    let member = code.contains(&all_three_one_plus_u(code.n()));
    c.conditions.push("all_three_one_plus_u_in_code", member);
    ConstraintVerdict::new(
        criterion,
        c.shift,
        c.conditions,
        c.holds && member,
        is_rc_closed(code),
    )
}

pub fn check_rc_single(spec: &CodeSpec, cap: usize) -> Result<ConstraintVerdict, ConstraintError> {
    let c = single_conditions(spec)?;
    let code = Code::enumerate(spec, cap)?;
    Ok(with_membership(Criterion::RcSingleGenerator, c, &code))
}

pub fn check_rc_pair(spec: &CodeSpec, cap: usize) -> Result<ConstraintVerdict, ConstraintError> {
    let c = pair_conditions(spec)?;
    let code = Code::enumerate(spec, cap)?;
    Ok(with_membership(Criterion::RcTwoGenerator, c, &code))
}

/// Counts of (closed-form conditions, brute force) outcomes for one criterion.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CrossTab {
    pub both_true: usize,
    pub both_false: usize,
    pub conditions_only: usize,
    pub brute_force_only: usize,
    /// Specs the criterion applies to but could not evaluate (degree order, cap).
    pub not_evaluated: usize,
}

impl CrossTab {
    pub fn agree(&self) -> usize {
        self.both_true + self.both_false
    }

    pub fn disagree(&self) -> usize {
        self.conditions_only + self.brute_force_only
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub criterion: Criterion,
    pub spec: String,
    pub conditions_hold: bool,
    pub brute_force: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub n: usize,
    pub specs: usize,
    pub tabs: BTreeMap<Criterion, CrossTab>,
    pub disagreements: Vec<Disagreement>,
}

/// Evaluates every applicable criterion on every valid spec of length `n`
/// whose `g2` comes from `family`.
pub fn consistency_sweep(
    n: usize,
    family: &G2Family,
    cap: usize,
) -> Result<SweepReport, ConstraintError> {
    let specs = spec_space(n, family)?;
    let mut tabs: BTreeMap<Criterion, CrossTab> = Criterion::ALL
        .iter()
        .map(|&c| (c, CrossTab::default()))
        .collect();
    let mut disagreements = Vec::new();
    for spec in &specs {
        for criterion in Criterion::ALL.into_iter().filter(|c| c.applies_to(spec)) {
            let tab = tabs.get_mut(&criterion).expect("all criteria present");
            match criterion.check(spec, cap) {
                Ok(v) => {
                    match (v.conditions_hold, v.brute_force) {
                        (true, true) => tab.both_true += 1,
                        (false, false) => tab.both_false += 1,
                        (true, false) => tab.conditions_only += 1,
                        (false, true) => tab.brute_force_only += 1,
                    }
                    if !v.agreement {
                        disagreements.push(Disagreement {
                            criterion,
                            spec: spec.to_string(),
                            conditions_hold: v.conditions_hold,
                            brute_force: v.brute_force,
                        });
                    }
                }
                Err(ConstraintError::DegreeOrder { .. })
                | Err(ConstraintError::Code(CodeError::CapExceeded { .. })) => {
                    tab.not_evaluated += 1
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(SweepReport {
        n,
        specs: specs.len(),
        tabs,
        disagreements,
    })
}
