//! Dense univariate polynomials (low degree first) over a runtime-selected
//! field. Coefficients are rationals; over `F_p` they are kept as integers in
//! `0..p`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::FieldTag;

pub(crate) type Coeffs = Vec<BigRational>;

pub(crate) fn trim(mut a: Coeffs) -> Coeffs {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

pub(crate) fn add(f: FieldTag, a: &[BigRational], b: &[BigRational]) -> Coeffs {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    trim(
        (0..n)
            .map(|i| f.add(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
            .collect(),
    )
}

pub(crate) fn sub(f: FieldTag, a: &[BigRational], b: &[BigRational]) -> Coeffs {
    let neg: Coeffs = b.iter().map(|c| f.neg(c)).collect();
    add(f, a, &neg)
}

pub(crate) fn mul(f: FieldTag, a: &[BigRational], b: &[BigRational]) -> Coeffs {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(out)
}

pub(crate) fn scale(f: FieldTag, a: &[BigRational], c: &BigRational) -> Coeffs {
    trim(a.iter().map(|x| f.mul(x, c)).collect())
}

pub(crate) fn pow(f: FieldTag, a: &[BigRational], mut n: u32) -> Coeffs {
    let mut base = a.to_vec();
    let mut acc = vec![BigRational::one()];
    while n > 0 {
        if n & 1 == 1 {
            acc = mul(f, &acc, &base);
        }
        n >>= 1;
        if n > 0 {
            base = mul(f, &base, &base);
        }
    }
    acc
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(f: FieldTag, a: &[BigRational], b: &[BigRational]) -> (Coeffs, Coeffs) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = a.to_vec();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv_lead = f.inv(b.last().unwrap());
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = f.mul(r.last().unwrap(), &inv_lead);
        for (j, y) in b.iter().enumerate() {
            r[shift + j] = f.sub(&r[shift + j], &f.mul(&c, y));
        }
        q[shift] = c;
        // the leading coefficient is now exactly zero
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn rem(f: FieldTag, a: &[BigRational], b: &[BigRational]) -> Coeffs {
    divrem(f, a, b).1
}

pub(crate) fn monic(f: FieldTag, a: &[BigRational]) -> Coeffs {
    match a.last() {
        None => Vec::new(),
        Some(lead) => scale(f, a, &f.inv(lead)),
    }
}

/// Monic gcd; zero only if both inputs are zero.
pub(crate) fn gcd(f: FieldTag, a: &[BigRational], b: &[BigRational]) -> Coeffs {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub(crate) fn derivative(f: FieldTag, a: &[BigRational]) -> Coeffs {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.int(&BigInt::from(i))))
            .collect(),
    )
}

pub(crate) fn degree(a: &[BigRational]) -> Option<usize> {
    a.len().checked_sub(1)
}
