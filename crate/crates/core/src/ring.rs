//! Arithmetic in `R = Z4 + uZ4` with `u^2 = 1`, the Watson-Crick complement
//! on ring elements, and the correspondence between `R` and DNA double pairs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("invalid residue `{0}` (expected 0, 1, 2 or 3)")]
    Residue(String),
    #[error("invalid ring element `{0}`")]
    Element(String),
    #[error("invalid nucleotide `{0}`")]
    Nucleotide(char),
    #[error("invalid polynomial `{0}`: {1}")]
    Poly(String, String),
}

/// A residue modulo 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Z4(u8);

impl Z4 {
    pub const ZERO: Z4 = Z4(0);
    pub const ONE: Z4 = Z4(1);
    pub const TWO: Z4 = Z4(2);
    pub const THREE: Z4 = Z4(3);

    pub const fn new(v: u8) -> Self {
        Z4(v & 3)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }

    /// Reduction to the binary field.
    pub const fn is_odd(self) -> bool {
        self.0 & 1 == 1
    }
}

impl Add for Z4 {
    type Output = Z4;
    fn add(self, rhs: Z4) -> Z4 {
        Z4::new(self.0 + rhs.0)
    }
}

impl Sub for Z4 {
    type Output = Z4;
    fn sub(self, rhs: Z4) -> Z4 {
        Z4::new(self.0 + 4 - rhs.0)
    }
}

impl Mul for Z4 {
    type Output = Z4;
    fn mul(self, rhs: Z4) -> Z4 {
        Z4::new(self.0 * rhs.0)
    }
}

impl Neg for Z4 {
    type Output = Z4;
    fn neg(self) -> Z4 {
        Z4::new(4 - self.0)
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Z4 {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Err(ParseError::Empty);
        }
        match t.parse::<u8>() {
            Ok(v) if v < 4 => Ok(Z4(v)),
            _ => Err(ParseError::Residue(t.to_string())),
        }
    }
}

/// An element `a + ub` of `R`, stored canonically with `a, b` in `0..4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RingElement {
    a: Z4,
    b: Z4,
}

impl RingElement {
    pub const ZERO: RingElement = RingElement::new(0, 0);
    pub const ONE: RingElement = RingElement::new(1, 0);
    pub const U: RingElement = RingElement::new(0, 1);
    /// `1 + u`, the sum of any element and its complement.
    pub const ONE_PLUS_U: RingElement = RingElement::new(1, 1);
    /// `3(1 + u) = 3 + 3u`, the coordinate of the complemented all-zero word scaled by 3.
    pub const THREE_ONE_PLUS_U: RingElement = RingElement::new(3, 3);
    pub const TWO_PLUS_U: RingElement = RingElement::new(2, 1);
    pub const TWO_ONE_PLUS_U: RingElement = RingElement::new(2, 2);

    pub const fn new(a: u8, b: u8) -> Self {
        RingElement {
            a: Z4::new(a),
            b: Z4::new(b),
        }
    }

    pub const fn from_z4(a: Z4) -> Self {
        RingElement { a, b: Z4::ZERO }
    }

    pub const fn a(self) -> Z4 {
        self.a
    }

    pub const fn b(self) -> Z4 {
        self.b
    }

    /// Dense index `4a + b`, which is also the row of the element in the theta table.
    pub const fn index(self) -> usize {
        (self.a.0 * 4 + self.b.0) as usize
    }

    pub const fn from_index(i: usize) -> Self {
        RingElement::new((i / 4) as u8, (i % 4) as u8)
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// Units of `R` are the elements with exactly one odd component.
    ///
    /// With both components odd, `(a+ub)(a-ub) = a^2 - b^2` is even, so
    /// `1 + u` and friends are zero divisors.
    pub const fn is_unit(self) -> bool {
        self.a.is_odd() != self.b.is_odd()
    }

    /// Watson-Crick complement: `(1 + u) - x`.
    pub fn complement(self) -> Self {
        Self::ONE_PLUS_U - self
    }

    pub fn inverse(self) -> Option<Self> {
        all().find(|&y| self * y == Self::ONE)
    }

    pub fn theta(self) -> DnaPair {
        THETA_TABLE[self.index()]
    }

    pub fn from_theta(pair: DnaPair) -> Self {
        RingElement {
            a: pair.0.to_z4(),
            b: pair.1.to_z4(),
        }
    }

    pub fn as_pair_string(self) -> String {
        format!("({},{})", self.a, self.b)
    }
}

/// All 16 elements in lexicographic `(a, b)` order.
pub fn all() -> impl Iterator<Item = RingElement> + Clone {
    (0..16).map(RingElement::from_index)
}

pub fn units() -> &'static [RingElement] {
    static UNITS: OnceLock<Vec<RingElement>> = OnceLock::new();
    UNITS.get_or_init(|| all().filter(|x| x.is_unit()).collect())
}

/// The principal ideal `R(1+u)`, computed by closure.
pub fn ideal_one_plus_u() -> &'static [RingElement] {
    static IDEAL: OnceLock<Vec<RingElement>> = OnceLock::new();
    IDEAL.get_or_init(|| {
        let mut v: Vec<RingElement> = all().map(|x| x * RingElement::ONE_PLUS_U).collect();
        v.sort();
        v.dedup();
        v
    })
}

pub fn in_ideal_one_plus_u(x: RingElement) -> bool {
    ideal_one_plus_u().binary_search(&x).is_ok()
}

impl Add for RingElement {
    type Output = RingElement;
    fn add(self, rhs: Self) -> Self {
        RingElement {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl Sub for RingElement {
    type Output = RingElement;
    fn sub(self, rhs: Self) -> Self {
        RingElement {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Neg for RingElement {
    type Output = RingElement;
    fn neg(self) -> Self {
        RingElement {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for RingElement {
    type Output = RingElement;
    // (a+ub)(c+ud) = (ac+bd) + u(ad+bc)
    fn mul(self, rhs: Self) -> Self {
        RingElement {
            a: self.a * rhs.a + self.b * rhs.b,
            b: self.a * rhs.b + self.b * rhs.a,
        }
    }
}

impl From<Z4> for RingElement {
    fn from(a: Z4) -> Self {
        RingElement::from_z4(a)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.a.0, self.b.0);
        match (a, b) {
            (0, 0) => write!(f, "0"),
            (_, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "u"),
            (0, _) => write!(f, "{b}u"),
            (_, 1) => write!(f, "{a}+u"),
            _ => write!(f, "{a}+{b}u"),
        }
    }
}

impl Serialize for RingElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for RingElement {
    type Err = ParseError;

    /// Accepts `a+bu` with zero terms elided (`0`, `u`, `3u`, `2+3u`) or the
    /// pair form `(a,b)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(ParseError::Empty);
        }
        let bad = || ParseError::Element(s.trim().to_string());
        if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            let a: Z4 = a.parse().map_err(|_| bad())?;
            let b: Z4 = b.parse().map_err(|_| bad())?;
            return Ok(RingElement { a, b });
        }
        let mut seen_a = false;
        let mut seen_b = false;
        let mut out = RingElement::ZERO;
        for term in t.split('+') {
            if let Some(coef) = term.strip_suffix('u') {
                if seen_b {
                    return Err(bad());
                }
                seen_b = true;
                let b = if coef.is_empty() {
                    Z4::ONE
                } else {
                    coef.parse().map_err(|_| bad())?
                };
                out.b = b;
            } else {
                if seen_a || seen_b {
                    return Err(bad());
                }
                seen_a = true;
                out.a = term.parse().map_err(|_| bad())?;
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Nucleotide {
    A,
    T,
    G,
    C,
}

impl Nucleotide {
    pub const ALL: [Nucleotide; 4] = [Nucleotide::A, Nucleotide::T, Nucleotide::G, Nucleotide::C];

    /// `0 -> A, 1 -> T, 2 -> G, 3 -> C`.
    pub const fn from_z4(x: Z4) -> Self {
        Self::ALL[x.0 as usize]
    }

    pub const fn to_z4(self) -> Z4 {
        match self {
            Nucleotide::A => Z4::ZERO,
            Nucleotide::T => Z4::ONE,
            Nucleotide::G => Z4::TWO,
            Nucleotide::C => Z4::THREE,
        }
    }

    pub const fn complement(self) -> Self {
        match self {
            Nucleotide::A => Nucleotide::T,
            Nucleotide::T => Nucleotide::A,
            Nucleotide::G => Nucleotide::C,
            Nucleotide::C => Nucleotide::G,
        }
    }

    pub const fn is_gc(self) -> bool {
        matches!(self, Nucleotide::G | Nucleotide::C)
    }

    pub const fn as_char(self) -> char {
        match self {
            Nucleotide::A => 'A',
            Nucleotide::T => 'T',
            Nucleotide::G => 'G',
            Nucleotide::C => 'C',
        }
    }

    pub fn from_char(c: char) -> Result<Self, ParseError> {
        match c.to_ascii_uppercase() {
            'A' => Ok(Nucleotide::A),
            'T' => Ok(Nucleotide::T),
            'G' => Ok(Nucleotide::G),
            'C' => Ok(Nucleotide::C),
            _ => Err(ParseError::Nucleotide(c)),
        }
    }
}

impl fmt::Display for Nucleotide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A DNA double pair such as `GC`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DnaPair(pub Nucleotide, pub Nucleotide);

impl DnaPair {
    pub fn complement(self) -> Self {
        DnaPair(self.0.complement(), self.1.complement())
    }
}

impl fmt::Display for DnaPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

impl FromStr for DnaPair {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut it = s.trim().chars();
        match (it.next(), it.next(), it.next()) {
            (Some(x), Some(y), None) => Ok(DnaPair(
                Nucleotide::from_char(x)?,
                Nucleotide::from_char(y)?,
            )),
            _ => Err(ParseError::Element(s.to_string())),
        }
    }
}

use Nucleotide::{A, C, G, T};

/// The theta table, indexed by `4a + b`.
pub const THETA_TABLE: [DnaPair; 16] = [
    DnaPair(A, A),
    DnaPair(A, T),
    DnaPair(A, G),
    DnaPair(A, C),
    DnaPair(T, A),
    DnaPair(T, T),
    DnaPair(T, G),
    DnaPair(T, C),
    DnaPair(G, A),
    DnaPair(G, T),
    DnaPair(G, G),
    DnaPair(G, C),
    DnaPair(C, A),
    DnaPair(C, T),
    DnaPair(C, G),
    DnaPair(C, C),
];

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: u8, b: u8) -> RingElement {
        RingElement::new(a, b)
    }

    #[test]
    fn addition() {
        assert_eq!(r(1, 1) + r(3, 3), RingElement::ZERO);
        assert_eq!(r(2, 3) + r(3, 2), r(1, 1));
        for x in all() {
            assert_eq!(RingElement::ZERO + x, x);
        }
    }

    // Multiplication table oracle: expand (a+ub)(c+ud) over the integers and reduce at the end.
    #[test]
    fn multiplication_matches_integer_expansion() {
        for x in all() {
            for y in all() {
                let (a, b) = (x.a().value() as u32, x.b().value() as u32);
                let (c, d) = (y.a().value() as u32, y.b().value() as u32);
                let expect = r(((a * c + b * d) % 4) as u8, ((a * d + b * c) % 4) as u8);
                assert_eq!(x * y, expect);
            }
        }
        assert_eq!(RingElement::U * RingElement::U, RingElement::ONE);
        assert_eq!(r(1, 1) * r(1, 1), r(2, 2));
        assert_eq!(r(2, 3) * r(3, 2), RingElement::U);
    }

    #[test]
    fn ring_axioms_exhaustive() {
        for x in all() {
            for y in all() {
                assert_eq!(x * y, y * x);
                assert_eq!(x + y, y + x);
                for z in all() {
                    assert_eq!((x * y) * z, x * (y * z));
                    assert_eq!((x + y) + z, x + (y + z));
                    assert_eq!(x * (y + z), x * y + x * z);
                }
            }
        }
    }

    #[test]
    fn units() {
        assert!(r(2, 1).is_unit());
        assert!(!r(2, 2).is_unit());
        assert!(!RingElement::ZERO.is_unit());
        let u = super::units();
        assert_eq!(u.len(), 8);
        for &x in u {
            assert!(x.inverse().is_some());
        }
        // the non-units are exactly the zero divisors
        for x in all().filter(|x| !x.is_unit()) {
            assert!(x.inverse().is_none());
            assert!(all().any(|y| !y.is_zero() && x * y == RingElement::ZERO));
        }
        assert_eq!(all().filter(|x| !x.is_unit() && !x.is_zero()).count(), 7);
    }

    #[test]
    fn complement_basics() {
        assert_eq!(RingElement::ZERO.complement(), r(1, 1));
        assert_eq!(r(2, 3).complement(), r(3, 2));
        for x in all() {
            assert_eq!(x.complement().complement(), x);
            assert_eq!(x + x.complement(), RingElement::ONE_PLUS_U);
        }
    }

    #[test]
    fn complement_identities_exhaustive() {
        let three_opu = RingElement::THREE_ONE_PLUS_U;
        for a in all() {
            assert_eq!(a.complement() + three_opu, r(3, 0) * a);
            for b in all() {
                assert_eq!(
                    (a + b).complement(),
                    a.complement() + b.complement() + three_opu
                );
                assert_eq!(
                    (a + RingElement::ONE_PLUS_U * b).complement(),
                    a.complement() + three_opu * b
                );
            }
        }
    }

    #[test]
    fn theta_table_rows() {
        assert_eq!(r(2, 3).theta().to_string(), "GC");
        assert_eq!(r(1, 2).theta().to_string(), "TG");
        assert_eq!(RingElement::ZERO.theta().to_string(), "AA");
        // every row is the nucleotide image of the (a, b) components
        for x in all() {
            let p = x.theta();
            assert_eq!(
                p,
                DnaPair(Nucleotide::from_z4(x.a()), Nucleotide::from_z4(x.b()))
            );
            assert_eq!(RingElement::from_theta(p), x);
            assert_eq!(x.complement().theta(), p.complement());
        }
        let mut pairs: Vec<_> = THETA_TABLE.to_vec();
        pairs.sort();
        pairs.dedup();
        assert_eq!(pairs.len(), 16);
    }

    #[test]
    fn one_plus_u_ideal() {
        assert_eq!(ideal_one_plus_u(), &[r(0, 0), r(1, 1), r(2, 2), r(3, 3)]);
    }

    #[test]
    fn render_and_parse() {
        let cases = [
            (r(0, 0), "0"),
            (r(0, 1), "u"),
            (r(0, 3), "3u"),
            (r(2, 0), "2"),
            (r(1, 1), "1+u"),
            (r(2, 3), "2+3u"),
        ];
        for (x, s) in cases {
            assert_eq!(x.to_string(), s);
            assert_eq!(s.parse::<RingElement>().unwrap(), x);
        }
        for x in all() {
            assert_eq!(x.as_pair_string().parse::<RingElement>().unwrap(), x);
            assert_eq!(x.to_string().parse::<RingElement>().unwrap(), x);
        }
        assert_eq!(" 2 + 3u ".parse::<RingElement>().unwrap(), r(2, 3));
        assert!("4".parse::<RingElement>().is_err());
        assert!("u+1".parse::<RingElement>().is_err());
        assert!("(1,2,3)".parse::<RingElement>().is_err());
        assert!("".parse::<RingElement>().is_err());
        assert_eq!("GC".parse::<DnaPair>().unwrap(), r(2, 3).theta());
    }
}
