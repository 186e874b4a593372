//! Dense univariate polynomials over `Z4`, `R` and the binary field.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::ring::{self, ParseError, RingElement, Z4};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("divisor {0} is not monic")]
    NonMonicDivisor(String),
    #[error("length {0} is even; only odd lengths are supported")]
    EvenLength(usize),
    #[error("length must be at least 1")]
    ZeroLength,
    #[error("length {0} exceeds the supported maximum {1}")]
    LengthTooLarge(usize, usize),
    #[error("{0} does not divide x^{1}+1 over the binary field")]
    NotAFactor(String, usize),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// Coefficient rings the polynomial code is generic over.
pub trait Coeff:
    Copy
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + Default
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const ZERO: Self;
    const ONE: Self;

    fn is_unit(self) -> bool;

    /// Every unit of the coefficient ring.
    fn units() -> &'static [Self];

    fn parse_coeff(s: &str) -> Result<Self, ParseError>;

    /// Whether rendering this coefficient in front of `x^k` needs parentheses.
    fn compound(self) -> bool {
        false
    }
}

impl Coeff for Z4 {
    const ZERO: Self = Z4::ZERO;
    const ONE: Self = Z4::ONE;

    fn is_unit(self) -> bool {
        Z4::is_unit(self)
    }

    fn units() -> &'static [Self] {
        &[Z4::ONE, Z4::THREE]
    }

    fn parse_coeff(s: &str) -> Result<Self, ParseError> {
        s.parse()
    }
}

impl Coeff for RingElement {
    const ZERO: Self = RingElement::ZERO;
    const ONE: Self = RingElement::ONE;

    fn is_unit(self) -> bool {
        RingElement::is_unit(self)
    }

    fn units() -> &'static [Self] {
        ring::units()
    }

    /// Also accepts a parenthesized element such as `(1+u)`.
    fn parse_coeff(s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        match t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            Some(inner) if !inner.contains(',') => inner.parse(),
            _ => t.parse(),
        }
    }

    fn compound(self) -> bool {
        self.a() != Z4::ZERO && self.b() != Z4::ZERO
    }
}

/// An element of the binary field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gf2(pub bool);

impl Gf2 {
    pub const fn bit(self) -> u8 {
        self.0 as u8
    }
}

// addition is xor, multiplication is and
#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Sub for Gf2 {
    type Output = Gf2;
    fn sub(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Neg for Gf2 {
    type Output = Gf2;
    fn neg(self) -> Gf2 {
        self
    }
}

impl Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

impl Coeff for Gf2 {
    const ZERO: Self = Gf2(false);
    const ONE: Self = Gf2(true);

    fn is_unit(self) -> bool {
        self.0
    }

    fn units() -> &'static [Self] {
        &[Gf2(true)]
    }

    fn parse_coeff(s: &str) -> Result<Self, ParseError> {
        match s.trim() {
            "0" => Ok(Gf2(false)),
            "1" => Ok(Gf2(true)),
            t => Err(ParseError::Residue(t.to_string())),
        }
    }
}

/// Polynomial with ascending coefficients and no trailing zeros.
///
/// The zero polynomial has an empty coefficient vector and no degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type PolyZ4 = Poly<Z4>;
pub type PolyR = Poly<RingElement>;
pub type PolyGf2 = Poly<Gf2>;

impl<T: Coeff> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last() == Some(&T::ZERO) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::ONE)
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: T, k: usize) -> Self {
        let mut v = vec![T::ZERO; k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `x^n - 1`.
    pub fn xn_minus_1(n: usize) -> Self {
        Self::monomial(T::ONE, n) - Self::one()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).copied().unwrap_or(T::ZERO)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<T> {
        self.coeffs.last().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(T::ONE)
    }

    pub fn scale(&self, c: T) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![T::ZERO; k];
        v.extend_from_slice(&self.coeffs);
        Poly { coeffs: v }
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(|&c| f(c)).collect())
    }

    /// Coefficient vector of the residue modulo `x^n - 1`, always of length `n`.
    pub fn cyclic_coeffs(&self, n: usize) -> Vec<T> {
        assert!(n > 0, "cyclic reduction needs n >= 1");
        let mut v = vec![T::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            v[i % n] = v[i % n] + c;
        }
        v
    }

    pub fn mod_xn_minus_1(&self, n: usize) -> Self {
        Self::new(self.cyclic_coeffs(n))
    }

    /// Long division by a monic divisor: `self = q*d + r` with `deg r < deg d`.
    pub fn divmod_monic(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        if !d.is_monic() {
            return Err(PolyError::NonMonicDivisor(d.to_string()));
        }
        let m = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= m {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![T::ZERO; r.len() - m];
        for k in (0..q.len()).rev() {
            let lc = r[k + m];
            if lc == T::ZERO {
                continue;
            }
            q[k] = lc;
            for (j, &dj) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j] - lc * dj;
            }
        }
        r.truncate(m);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Whether the monic `self` divides `f`.
    pub fn divides(&self, f: &Self) -> Result<bool, PolyError> {
        Ok(f.divmod_monic(self)?.1.is_zero())
    }

    /// `x^deg f * f(1/x)`: the coefficient sequence reversed.
    pub fn reciprocal(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut v = self.coeffs.clone();
        v.reverse();
        Ok(Self::new(v))
    }

    /// The unit `m` with `f* = m f`, if one exists.
    pub fn self_reciprocal_unit(&self) -> Result<Option<T>, PolyError> {
        let rec = self.reciprocal()?;
        Ok(T::units().iter().copied().find(|&m| rec == self.scale(m)))
    }

    pub fn is_self_reciprocal(&self) -> Result<bool, PolyError> {
        Ok(self.self_reciprocal_unit()?.is_some())
    }

    pub fn eval(&self, x: T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::ZERO, |acc, &c| acc * x + c)
    }

    /// Bracketed ascending coefficient list, e.g. `[3,1]` for `x + 3`.
    pub fn to_bracket_string(&self) -> String {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", body.join(","))
    }

    /// Parses the bracket grammar. Entries are separated by commas outside parentheses.
    pub fn parse_bracket(s: &str) -> Result<Self, ParseError> {
        let err = |why: &str| ParseError::Poly(s.trim().to_string(), why.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| err("expected `[...]`"))?;
        if inner.trim().is_empty() {
            return Ok(Self::zero());
        }
        let mut parts = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        for (i, ch) in inner.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth < 0 {
                        return Err(err("unbalanced parentheses"));
                    }
                }
                ',' if depth == 0 => {
                    parts.push(&inner[start..i]);
                    start = i + 1;
                }
                _ => {}
            }
        }
        if depth != 0 {
            return Err(err("unbalanced parentheses"));
        }
        parts.push(&inner[start..]);
        let coeffs = parts
            .into_iter()
            .map(|p| T::parse_coeff(p).map_err(|e| err(&e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new(coeffs))
    }
}

impl PolyZ4 {
    pub fn from_u8s(v: &[u8]) -> Self {
        Self::new(v.iter().map(|&c| Z4::new(c)).collect())
    }

    pub fn to_ring(&self) -> PolyR {
        self.map(RingElement::from_z4)
    }

    pub fn reduce_mod2(&self) -> PolyGf2 {
        self.map(|c| Gf2(c.is_odd()))
    }

    /// Divisibility of the mod-2 reductions, over the binary field.
    pub fn divides_mod2(&self, f: &Self) -> Result<bool, PolyError> {
        self.reduce_mod2().divides(&f.reduce_mod2())
    }

    /// Power notation with coefficients in `{-1, 0, 1, 2}`, so `x + 3` renders as `x - 1`.
    pub fn to_signed_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == Z4::ZERO {
                continue;
            }
            let neg = c == Z4::THREE;
            let mag = if neg { 1 } else { c.value() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&term(&mag.to_string(), mag == 1, false, k));
        }
        out
    }
}

impl PolyGf2 {
    pub fn from_bits(bits: &[u8]) -> Self {
        Self::new(bits.iter().map(|&b| Gf2(b & 1 == 1)).collect())
    }

    pub fn lift_z4(&self) -> PolyZ4 {
        self.map(|c| Z4::new(c.bit()))
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            // every nonzero binary polynomial is monic
            let r = a
                .divmod_monic(&b)
                .expect("nonzero binary polynomials are monic")
                .1;
            a = b;
            b = r;
        }
        a
    }

    pub fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        (self * other).divmod_monic(m).expect("modulus is monic").1
    }

    /// Ben-Or irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let Some(d) = self.degree() else {
            return false;
        };
        if d == 0 {
            return false;
        }
        let x = Self::monomial(Gf2(true), 1);
        let mut xp = x.divmod_monic(self).unwrap().1;
        for _ in 1..=d / 2 {
            xp = xp.mul_mod(&xp, self);
            if self.gcd(&(&xp - &x)).degree() != Some(0) {
                return false;
            }
        }
        true
    }
}

fn term(coef: &str, unit: bool, paren: bool, k: usize) -> String {
    let xpart = match k {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{k}"),
    };
    if k == 0 {
        coef.to_string()
    } else if unit {
        xpart
    } else if paren {
        format!("({coef}){xpart}")
    } else {
        format!("{coef}{xpart}")
    }
}

impl<T: Coeff> Display for Poly<T> {
    /// Conventional power notation, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != T::ZERO)
            .map(|(k, &c)| term(&c.to_string(), c == T::ONE, c.compound(), k))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl<T: Coeff> Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_bracket_string())
    }
}

impl<T: Coeff> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_bracket_string())
    }
}

impl<T: Coeff> FromStr for Poly<T> {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_bracket(s)
    }
}

/// Orders by degree first, then by ascending coefficient list.
impl<T: Coeff> Ord for Poly<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl<T: Coeff> PartialOrd for Poly<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![T::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == T::ZERO {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = v[i + j] + a * b;
            }
        }
        Poly::new(v)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        self.map(|c| -c)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
