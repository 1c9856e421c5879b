//! Exact arithmetic in `K[x, x⁻¹]` for `K = ℚ` or `K = F_p`.
//!
//! A Laurent polynomial is stored as `x^shift · q(x)` with `q(0) ≠ 0`. Units
//! of `K[x, x⁻¹]` are the nonzero monomials, so the ideal generated by a
//! Laurent polynomial is determined by the monic `q` alone.

mod dense;
pub(crate) mod modp;
mod parse;
mod zassenhaus;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use zassenhaus::MAX_SQUAREFREE_DEGREE;

/// Largest modulus accepted for `F_p`.
pub const MAX_MODULUS: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FieldTag {
    Rationals,
    Prime(u64),
}

impl FieldTag {
    pub fn prime(p: u64) -> Result<FieldTag> {
        if p > MAX_MODULUS || !modp::is_prime_u64(p) {
            return Err(Error::NotPrimeModulus(p));
        }
        Ok(FieldTag::Prime(p))
    }

    /// Parses `Q` or `Fp:<p>`.
    pub fn parse(s: &str) -> Result<FieldTag> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldTag::Rationals);
        }
        let rest = s
            .strip_prefix("Fp:")
            .or_else(|| s.strip_prefix("fp:"))
            .or_else(|| s.strip_prefix("F"))
            .ok_or_else(|| Error::Parse(format!("unknown field `{s}` (expected Q or Fp:<p>)")))?;
        let p: u64 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad modulus in field `{s}`")))?;
        FieldTag::prime(p)
    }

    pub(crate) fn int(self, n: &BigInt) -> BigRational {
        match self {
            FieldTag::Rationals => BigRational::from_integer(n.clone()),
            FieldTag::Prime(p) => BigRational::from_integer(n.mod_floor(&BigInt::from(p))),
        }
    }

    /// Maps a rational into the field; fails over `F_p` when `p` divides the
    /// denominator.
    pub(crate) fn embed(self, x: &BigRational) -> Result<BigRational> {
        match self {
            FieldTag::Rationals => Ok(x.clone()),
            FieldTag::Prime(p) => {
                let pb = BigInt::from(p);
                let den = x.denom().mod_floor(&pb);
                if den.is_zero() {
                    return Err(Error::PolyParse(x.to_string(), format!("denominator divisible by {p}")));
                }
                let num = x.numer().mod_floor(&pb).to_u64().unwrap();
                let z = modp::Zp::new(p);
                let v = z.mul(num, z.inv(den.to_u64().unwrap()));
                Ok(BigRational::from_integer(BigInt::from(v)))
            }
        }
    }

    fn reduce(self, x: BigRational) -> BigRational {
        match self {
            FieldTag::Rationals => x,
            FieldTag::Prime(p) => BigRational::from_integer(x.to_integer().mod_floor(&BigInt::from(p))),
        }
    }

    pub(crate) fn add(self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a + b)
    }

    pub(crate) fn sub(self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a - b)
    }

    pub(crate) fn neg(self, a: &BigRational) -> BigRational {
        self.reduce(-a)
    }

    pub(crate) fn mul(self, a: &BigRational, b: &BigRational) -> BigRational {
        self.reduce(a * b)
    }

    pub(crate) fn inv(self, a: &BigRational) -> BigRational {
        match self {
            FieldTag::Rationals => a.recip(),
            FieldTag::Prime(p) => {
                let z = modp::Zp::new(p);
                let v = z.inv(a.to_integer().to_u64().unwrap());
                BigRational::from_integer(BigInt::from(v))
            }
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rationals => f.write_str("Q"),
            FieldTag::Prime(p) => write!(f, "Fp:{p}"),
        }
    }
}

/// `x^shift · q(x)` with `q(0) ≠ 0`; the zero polynomial has empty `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    field: FieldTag,
    shift: i64,
    q: Vec<BigRational>,
}

impl LaurentPoly {
    /// `x^shift · Σ coeffs[i] x^i`, normalized.
    pub fn new(field: FieldTag, shift: i64, coeffs: Vec<BigRational>) -> Result<LaurentPoly> {
        let coeffs = coeffs.iter().map(|c| field.embed(c)).collect::<Result<Vec<_>>>()?;
        Ok(Self::normalized(field, shift, coeffs))
    }

    pub fn from_ints(field: FieldTag, shift: i64, coeffs: &[i64]) -> LaurentPoly {
        let coeffs = coeffs.iter().map(|&c| field.int(&BigInt::from(c))).collect();
        Self::normalized(field, shift, coeffs)
    }

    fn normalized(field: FieldTag, shift: i64, coeffs: Vec<BigRational>) -> LaurentPoly {
        let coeffs = dense::trim(coeffs);
        match coeffs.iter().position(|c| !c.is_zero()) {
            None => LaurentPoly::zero(field),
            Some(low) => LaurentPoly {
                field,
                shift: shift + low as i64,
                q: coeffs[low..].to_vec(),
            },
        }
    }

    pub fn zero(field: FieldTag) -> LaurentPoly {
        LaurentPoly { field, shift: 0, q: Vec::new() }
    }

    pub fn one(field: FieldTag) -> LaurentPoly {
        LaurentPoly { field, shift: 0, q: vec![BigRational::one()] }
    }

    pub fn x(field: FieldTag) -> LaurentPoly {
        LaurentPoly { field, shift: 1, q: vec![BigRational::one()] }
    }

    pub fn parse(field: FieldTag, s: &str) -> Result<LaurentPoly> {
        parse::parse(field, s)
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Coefficients of `q`, lowest degree first.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_empty()
    }

    /// Degree of `q` (the Laurent span); `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        dense::degree(&self.q)
    }

    pub fn is_unit(&self) -> bool {
        self.q.len() == 1
    }

    pub fn is_monic(&self) -> bool {
        self.q.last().is_some_and(One::is_one)
    }

    /// Monic, shift-free, degree ≥ 1: the form used for ideal components.
    pub fn is_component_canonical(&self) -> bool {
        self.shift == 0 && self.is_monic() && self.q.len() >= 2
    }

    fn check_field(&self, other: &LaurentPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.to_string(), other.field.to_string()));
        }
        Ok(())
    }

    /// Canonical associate keeping the shift: `q` scaled to be monic.
    pub fn canon(&self) -> LaurentPoly {
        LaurentPoly { field: self.field, shift: self.shift, q: dense::monic(self.field, &self.q) }
    }

    /// Canonical generator of the ideal `⟨self⟩`: monic `q` with shift 0.
    pub fn generator(&self) -> LaurentPoly {
        LaurentPoly { field: self.field, shift: 0, q: dense::monic(self.field, &self.q) }
    }

    pub fn same_ideal(&self, other: &LaurentPoly) -> bool {
        self.field == other.field && self.generator() == other.generator()
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_field(other)?;
        Ok(Self::normalized(self.field, self.shift + other.shift, dense::mul(self.field, &self.q, &other.q)))
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_field(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let low = self.shift.min(other.shift);
        let pad = |p: &LaurentPoly| {
            let mut v = vec![BigRational::zero(); (p.shift - low) as usize];
            v.extend(p.q.iter().cloned());
            v
        };
        Ok(Self::normalized(self.field, low, dense::add(self.field, &pad(self), &pad(other))))
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            field: self.field,
            shift: self.shift,
            q: self.q.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.add(&other.neg())
    }

    /// Integer powers; negative exponents only for units.
    pub fn pow(&self, n: i64) -> Result<LaurentPoly> {
        if n < 0 {
            if !self.is_unit() {
                return Err(Error::InvalidArgument("negative power of a non-unit".into()));
            }
            let inv = LaurentPoly {
                field: self.field,
                shift: -self.shift,
                q: vec![self.field.inv(&self.q[0])],
            };
            return inv.pow(-n);
        }
        let n32 = u32::try_from(n).map_err(|_| Error::InvalidArgument("exponent too large".into()))?;
        if self.is_zero() {
            return Ok(if n == 0 { Self::one(self.field) } else { self.clone() });
        }
        Ok(LaurentPoly {
            field: self.field,
            shift: self.shift * n,
            q: dense::pow(self.field, &self.q, n32),
        })
    }

    /// Divisibility in `K[x, x⁻¹]`.
    pub fn divides(&self, other: &LaurentPoly) -> Result<bool> {
        self.check_field(other)?;
        if other.is_zero() {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        Ok(dense::rem(self.field, &other.q, &self.q).is_empty())
    }

    /// Canonical gcd; `⟨f⟩ + ⟨g⟩ = ⟨gcd(f, g)⟩`.
    pub fn gcd(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        Ok(LaurentPoly { field: self.field, shift: 0, q: dense::gcd(self.field, &self.q, &other.q) })
    }

    /// Canonical lcm; `⟨f⟩ ∩ ⟨g⟩ = ⟨lcm(f, g)⟩`.
    pub fn lcm(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(LaurentPoly::zero(self.field));
        }
        let g = dense::gcd(self.field, &self.q, &other.q);
        let prod = dense::mul(self.field, &self.q, &other.q);
        let (l, _) = dense::divrem(self.field, &prod, &g);
        Ok(LaurentPoly { field: self.field, shift: 0, q: dense::monic(self.field, &l) })
    }

    /// Exact quotient of generators: `self / other` up to units. Fails if
    /// `other` does not divide `self`.
    pub fn div_exact(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_field(other)?;
        if other.is_zero() {
            return Err(Error::ZeroPolynomial("division"));
        }
        let (q, r) = dense::divrem(self.field, &self.q, &other.q);
        if !r.is_empty() {
            return Err(Error::InvalidArgument("inexact division".into()));
        }
        Ok(Self::normalized(self.field, self.shift - other.shift, q))
    }

    pub fn derivative_q(&self) -> LaurentPoly {
        Self::normalized(self.field, 0, dense::derivative(self.field, &self.q))
    }

    /// Monic irreducible factors of the generator with multiplicities, sorted.
    /// Units have no factors.
    pub fn factor(&self) -> Result<Vec<(LaurentPoly, u32)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("factor"));
        }
        let mut out: Vec<(LaurentPoly, u32)> = match self.field {
            FieldTag::Prime(p) => {
                let z = modp::Zp::new(p);
                let q: Vec<u64> = self.q.iter().map(|c| c.to_integer().to_u64().unwrap()).collect();
                z.factor(&q)
                    .into_iter()
                    .map(|(g, k)| {
                        let coeffs = g.iter().map(|&c| BigRational::from_integer(c.into())).collect();
                        (LaurentPoly { field: self.field, shift: 0, q: coeffs }, k)
                    })
                    .collect()
            }
            FieldTag::Rationals => self.factor_rational()?,
        };
        out.sort();
        Ok(out)
    }

    fn factor_rational(&self) -> Result<Vec<(LaurentPoly, u32)>> {
        let f = FieldTag::Rationals;
        let mut out = Vec::new();
        for (part, k) in yun_squarefree(&dense::monic(f, &self.q)) {
            let integral = zassenhaus::primitive_part(&part);
            for g in zassenhaus::factor_squarefree_integer(&integral)? {
                let coeffs: Vec<BigRational> = g.into_iter().map(BigRational::from_integer).collect();
                out.push((LaurentPoly { field: f, shift: 0, q: dense::monic(f, &coeffs) }, k));
            }
        }
        Ok(out)
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        let factors = self.factor()?;
        Ok(factors.len() == 1 && factors[0].1 == 1)
    }

    /// Product of the distinct irreducible factors (the generator of the
    /// radical of `⟨self⟩`).
    pub fn squarefree_core(&self) -> Result<LaurentPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("squarefree core"));
        }
        match self.field {
            FieldTag::Rationals => {
                let f = self.field;
                let g = dense::gcd(f, &self.q, &dense::derivative(f, &self.q));
                let (core, _) = dense::divrem(f, &self.q, &g);
                Ok(LaurentPoly { field: f, shift: 0, q: dense::monic(f, &core) })
            }
            FieldTag::Prime(_) => {
                let mut acc = LaurentPoly::one(self.field);
                for (g, _) in self.factor()? {
                    acc = acc.mul(&g)?;
                }
                Ok(acc)
            }
        }
    }

    pub fn eval_constant_term(&self) -> BigRational {
        if self.shift == 0 {
            self.q.first().cloned().unwrap_or_else(BigRational::zero)
        } else if self.shift < 0 && (-self.shift) as usize <= self.q.len() {
            self.q.get((-self.shift) as usize).cloned().unwrap_or_else(BigRational::zero)
        } else {
            BigRational::zero()
        }
    }
}

/// Yun's squarefree decomposition over ℚ of a monic polynomial.
fn yun_squarefree(f: &[BigRational]) -> Vec<(Vec<BigRational>, u32)> {
    let field = FieldTag::Rationals;
    let mut out = Vec::new();
    if f.len() <= 1 {
        return out;
    }
    let df = dense::derivative(field, f);
    let mut a = dense::gcd(field, f, &df);
    let mut b = dense::divrem(field, f, &a).0;
    let mut c = dense::divrem(field, &df, &a).0;
    let mut i = 1;
    loop {
        let d = dense::sub(field, &c, &dense::derivative(field, &b));
        if b.len() <= 1 {
            break;
        }
        a = dense::gcd(field, &b, &d);
        if a.len() > 1 {
            out.push((a.clone(), i));
        }
        b = dense::divrem(field, &b, &a).0;
        c = dense::divrem(field, &d, &a).0;
        i += 1;
    }
    out
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .cmp(&other.field)
            .then_with(|| self.q.len().cmp(&other.q.len()))
            .then_with(|| self.q.iter().rev().cmp(other.q.iter().rev()))
            .then_with(|| self.shift.cmp(&other.shift))
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &BigRational, first: bool, bare: bool) -> fmt::Result {
    let (neg, abs) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
    if neg {
        f.write_str("-")?;
    } else if !first {
        f.write_str("+")?;
    }
    if !(bare && abs.is_one()) {
        write!(f, "{abs}")?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.q.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.shift + i as i64;
            write_coefficient(f, c, first, e != 0)?;
            match e {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{e}")?,
            }
            first = false;
        }
        Ok(())
    }
}
