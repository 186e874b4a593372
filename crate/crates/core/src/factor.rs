//! Factorization of `x^n - 1` over `Z4` for odd `n`.
//!
//! The binary factorization comes from the 2-cyclotomic cosets modulo `n`:
//! each coset `{s, 2s, 4s, ...}` yields the minimal polynomial of `a^s`, where
//! `a` is a primitive `n`-th root of unity in `GF(2^m)`, `m = ord_n(2)`.
//! Each binary factor `f` is then lifted to the unique monic divisor of
//! `x^n - 1` over `Z4` by the Graeffe step `g(x^2) = +-f(x) f(-x)`.

use crate::poly::{Gf2, PolyError, PolyGf2, PolyZ4};

/// Field elements of `GF(2^m)` are stored in a `u64`, which bounds `m` and hence `n`.
pub const MAX_SUPPORTED_LENGTH: usize = 63;

pub fn check_odd_length(n: usize) -> Result<(), PolyError> {
    if n == 0 {
        return Err(PolyError::ZeroLength);
    }
    if n.is_multiple_of(2) {
        return Err(PolyError::EvenLength(n));
    }
    if n > MAX_SUPPORTED_LENGTH {
        return Err(PolyError::LengthTooLarge(n, MAX_SUPPORTED_LENGTH));
    }
    Ok(())
}

/// Smallest `m >= 1` with `2^m = 1 (mod n)`.
pub fn order_of_two(n: usize) -> usize {
    if n == 1 {
        return 1;
    }
    let mut m = 1;
    let mut p = 2 % n;
    while p != 1 {
        p = p * 2 % n;
        m += 1;
    }
    m
}

/// The 2-cyclotomic cosets modulo `n`, each sorted, ordered by smallest member.
pub fn cyclotomic_cosets(n: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut coset = Vec::new();
        let mut j = s;
        while !seen[j] {
            seen[j] = true;
            coset.push(j);
            j = j * 2 % n;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    cosets
}

#[derive(Debug, Clone, Copy)]
struct BinaryField {
    m: u32,
    modulus: u64,
}

impl BinaryField {
    fn new(m: u32) -> Self {
        let modulus = (((1u64 << m) | 1)..)
            .step_by(2)
            .find(|&c| poly_from_mask(c).is_irreducible())
            .expect("irreducible polynomials exist in every degree");
        BinaryField { m, modulus }
    }

    fn mul(&self, mut a: u64, mut b: u64) -> u64 {
        let top = 1u64 << self.m;
        let mut acc = 0;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & top != 0 {
                a ^= self.modulus;
            }
        }
        acc
    }

    fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn group_order(&self) -> u64 {
        (1u64 << self.m) - 1
    }

    /// An element of multiplicative order exactly `n`; `n` must divide `2^m - 1`.
    fn root_of_unity(&self, n: u64) -> u64 {
        let cofactor = self.group_order() / n;
        let primes = prime_factors(n);
        (1..=self.group_order())
            .map(|g| self.pow(g, cofactor))
            .find(|&a| primes.iter().all(|&p| self.pow(a, n / p) != 1))
            .expect("the multiplicative group is cyclic")
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn poly_from_mask(mask: u64) -> PolyGf2 {
    PolyGf2::new((0..64).map(|i| Gf2(mask >> i & 1 == 1)).collect())
}

/// Distinct irreducible factors of `x^n + 1` over the binary field, sorted by
/// degree then coefficients.
pub fn factor_xn_plus_1_mod2(n: usize) -> Result<Vec<PolyGf2>, PolyError> {
    check_odd_length(n)?;
    let m = order_of_two(n) as u32;
    let field = BinaryField::new(m);
    let alpha = field.root_of_unity(n as u64);

    let mut factors = Vec::new();
    for coset in cyclotomic_cosets(n) {
        // prod over the coset of (X + alpha^j), coefficients in GF(2^m)
        let mut coeffs: Vec<u64> = vec![1];
        for &j in &coset {
            let root = field.pow(alpha, j as u64);
            let mut next = vec![0u64; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] ^= c;
                next[i] ^= field.mul(c, root);
            }
            coeffs = next;
        }
        if coeffs.iter().any(|&c| c > 1) {
            return Err(PolyError::Internal(format!(
                "minimal polynomial of coset {coset:?} has coefficients outside the prime field"
            )));
        }
        factors.push(PolyGf2::new(
            coeffs.into_iter().map(|c| Gf2(c == 1)).collect(),
        ));
    }
    factors.sort();

    let product = factors.iter().fold(PolyGf2::one(), |acc, f| &acc * f);
    if product != PolyGf2::xn_minus_1(n) {
        return Err(PolyError::Internal(format!(
            "binary factors of x^{n}+1 do not multiply back"
        )));
    }
    Ok(factors)
}

/// Lifts a binary divisor of `x^n + 1` to the monic divisor of `x^n - 1` over
/// `Z4` congruent to it mod 2.
pub fn hensel_lift(f2: &PolyGf2, n: usize) -> Result<PolyZ4, PolyError> {
    check_odd_length(n)?;
    let d = f2.degree().ok_or(PolyError::ZeroPolynomial)?;
    if !f2.divides(&PolyGf2::xn_minus_1(n))? {
        return Err(PolyError::NotAFactor(f2.to_bracket_string(), n));
    }
    let f = f2.lift_z4();
    let f_neg = PolyZ4::new(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 1 { -c } else { c })
            .collect(),
    );
    // f(x) f(-x) is even; read it as a polynomial in y = x^2
    let prod = &f * &f_neg;
    let mut g = PolyZ4::new(prod.coeffs().iter().step_by(2).copied().collect());
    if d % 2 == 1 {
        g = -&g;
    }
    if !g.is_monic() || g.reduce_mod2() != *f2 || !g.divides(&PolyZ4::xn_minus_1(n))? {
        return Err(PolyError::Internal(format!(
            "Graeffe lift {} of {} is not a divisor of x^{n}-1",
            g.to_bracket_string(),
            f2.to_bracket_string()
        )));
    }
    Ok(g)
}

/// Monic irreducible-mod-2 factors of `x^n - 1` over `Z4`, sorted by degree then coefficients.
pub fn factor_xn_minus_1_z4(n: usize) -> Result<Vec<PolyZ4>, PolyError> {
    let mut lifts = factor_xn_plus_1_mod2(n)?
        .iter()
        .map(|f| hensel_lift(f, n))
        .collect::<Result<Vec<_>, _>>()?;
    lifts.sort();
    let product = lifts.iter().fold(PolyZ4::one(), |acc, f| &acc * f);
    if product != PolyZ4::xn_minus_1(n) {
        return Err(PolyError::Internal(format!(
            "lifted factors of x^{n}-1 do not multiply back"
        )));
    }
    Ok(lifts)
}

/// Every monic divisor of `x^n - 1` over `Z4` (products of subsets of the
/// lifted factors), sorted by degree then coefficients.
pub fn monic_divisors(n: usize) -> Result<Vec<PolyZ4>, PolyError> {
    let factors = factor_xn_minus_1_z4(n)?;
    let mut out: Vec<PolyZ4> = (0u64..1 << factors.len())
        .map(|mask| {
            factors
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(PolyZ4::one(), |acc, (_, f)| &acc * f)
        })
        .collect();
    out.sort();
    Ok(out)
}
