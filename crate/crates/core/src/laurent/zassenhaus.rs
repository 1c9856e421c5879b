//! Factorization of squarefree primitive integer polynomials: factor modulo a
//! single prime larger than twice the coefficient bound of any factor, then
//! recombine modular factors and keep the combinations that divide over Z.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::dense;
use super::modp::{is_prime_u64, Zp};
use super::FieldTag;
use crate::error::{Error, Result};

/// Degree limit for each squarefree part handed to the recombination search.
pub const MAX_SQUAREFREE_DEGREE: usize = 8;

const PRIME_CEILING: u64 = 1 << 61;

fn to_rational(f: &[BigInt]) -> Vec<BigRational> {
    f.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn content(f: &[BigInt]) -> BigInt {
    f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Primitive integer associate with positive leading coefficient.
pub(crate) fn primitive_part(f: &[BigRational]) -> Vec<BigInt> {
    let denom = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.iter().map(|c| (c * &denom).to_integer()).collect();
    let mut g = content(&ints);
    if ints.last().is_some_and(|c| c.is_negative()) {
        g = -g;
    }
    ints.iter().map(|c| c / &g).collect()
}

fn reduce(f: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    Zp::new(p).trim(f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn symmetric_lift(f: &[u64], p: u64) -> Vec<BigInt> {
    f.iter()
        .map(|&c| if c > p / 2 { BigInt::from(c) - BigInt::from(p) } else { BigInt::from(c) })
        .collect()
}

/// `2 · |lc| · 2^n · ⌈‖f‖₂⌉` bounds twice the coefficients of `lc · g` for
/// every factor `g` of `f`.
fn coefficient_bound(f: &[BigInt]) -> BigInt {
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    let lc = f.last().unwrap().abs();
    BigInt::from(2) * lc * (BigInt::one() << (f.len() - 1)) * norm
}

fn choose_prime(f: &[BigInt]) -> Result<u64> {
    let bound = coefficient_bound(f);
    if bound >= BigInt::from(PRIME_CEILING) {
        return Err(Error::FactorLimit(
            "coefficients too large for single-prime recombination".into(),
        ));
    }
    let mut p = bound.to_u64().unwrap().max(3) | 1;
    let lc = f.last().unwrap();
    loop {
        p += 2;
        if p >= PRIME_CEILING {
            return Err(Error::FactorLimit("no suitable prime below 2^61".into()));
        }
        if !is_prime_u64(p) || (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let z = Zp::new(p);
        let fp = reduce(f, p);
        if z.gcd(&fp, &z.derivative(&fp)).len() == 1 {
            return Ok(p);
        }
    }
}

fn divides_over_q(d: &[BigInt], f: &[BigInt]) -> Option<Vec<BigInt>> {
    let (q, r) = dense::divrem(FieldTag::Rationals, &to_rational(f), &to_rational(d));
    if !r.is_empty() || q.iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(q.iter().map(|c| c.to_integer()).collect())
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Irreducible factors over Z of a squarefree primitive `f` with positive
/// leading coefficient.
pub(crate) fn factor_squarefree_integer(f: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    let deg = f.len() - 1;
    if deg <= 1 {
        return Ok(vec![f.to_vec()]);
    }
    if deg > MAX_SQUAREFREE_DEGREE {
        return Err(Error::FactorLimit(format!(
            "squarefree part of degree {deg} exceeds {MAX_SQUAREFREE_DEGREE}"
        )));
    }
    let p = choose_prime(f)?;
    let z = Zp::new(p);
    let mut modular = z.factor_squarefree(&z.monic(&reduce(f, p)));
    if modular.len() == 1 {
        return Ok(vec![f.to_vec()]);
    }

    let mut rest = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= modular.len() {
        for subset in combinations(modular.len(), size) {
            let lc = reduce(&[rest.last().unwrap().clone()], p);
            let mut prod = lc;
            for &i in &subset {
                prod = z.mul_poly(&prod, &modular[i]);
            }
            let lifted = symmetric_lift(&prod, p);
            let cont = content(&lifted);
            let candidate: Vec<BigInt> = lifted.iter().map(|c| c / &cont).collect();
            if let Some(q) = divides_over_q(&candidate, &rest) {
                let candidate = if candidate.last().unwrap().sign() == Sign::Minus {
                    candidate.iter().map(|c| -c).collect()
                } else {
                    candidate
                };
                found.push(candidate);
                rest = q;
                let g = content(&rest);
                rest = rest.iter().map(|c| c / &g).collect();
                if rest.last().unwrap().is_negative() {
                    rest = rest.iter().map(|c| -c).collect();
                }
                modular = modular
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, g)| g)
                    .collect();
                continue 'outer;
            }
        }
        size += 1;
    }
    if rest.len() > 1 {
        found.push(rest);
    }
    Ok(found)
}
