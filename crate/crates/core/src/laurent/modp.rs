//! Polynomials over `Z/pZ` for primes below 2^62, and their factorization
//! into monic irreducibles (squarefree split, distinct-degree split,
//! Cantor–Zassenhaus equal-degree split).

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub(crate) type Poly = Vec<u64>;

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    let zp = Zp { p: n };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = zp.pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = zp.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Zp {
    pub p: u64,
}

impl Zp {
    pub fn new(p: u64) -> Zp {
        debug_assert!(p < 1 << 62 && is_prime_u64(p));
        Zp { p }
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn trim(self, mut a: Poly) -> Poly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn add_poly(self, a: &[u64], b: &[u64]) -> Poly {
        let n = a.len().max(b.len());
        self.trim(
            (0..n)
                .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
                .collect(),
        )
    }

    pub fn sub_poly(self, a: &[u64], b: &[u64]) -> Poly {
        let n = a.len().max(b.len());
        self.trim(
            (0..n)
                .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
                .collect(),
        )
    }

    pub fn mul_poly(self, a: &[u64], b: &[u64]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        self.trim(out)
    }

    pub fn divrem(self, a: &[u64], b: &[u64]) -> (Poly, Poly) {
        assert!(!b.is_empty(), "division by the zero polynomial");
        let mut r = a.to_vec();
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let inv = self.inv(*b.last().unwrap());
        let mut q = vec![0u64; r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let c = self.mul(*r.last().unwrap(), inv);
            for (j, &y) in b.iter().enumerate() {
                r[shift + j] = self.sub(r[shift + j], self.mul(c, y));
            }
            q[shift] = c;
            r.pop();
            r = self.trim(r);
        }
        (self.trim(q), r)
    }

    pub fn rem(self, a: &[u64], b: &[u64]) -> Poly {
        self.divrem(a, b).1
    }

    pub fn div_exact(self, a: &[u64], b: &[u64]) -> Poly {
        let (q, r) = self.divrem(a, b);
        debug_assert!(r.is_empty());
        q
    }

    pub fn monic(self, a: &[u64]) -> Poly {
        match a.last() {
            None => Vec::new(),
            Some(&lead) => {
                let inv = self.inv(lead);
                a.iter().map(|&c| self.mul(c, inv)).collect()
            }
        }
    }

    pub fn gcd(self, a: &[u64], b: &[u64]) -> Poly {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.monic(&x)
    }

    pub fn derivative(self, a: &[u64]) -> Poly {
        self.trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, i as u64 % self.p))
                .collect(),
        )
    }

    fn mulmod(self, a: &[u64], b: &[u64], m: &[u64]) -> Poly {
        self.rem(&self.mul_poly(a, b), m)
    }

    fn powmod(self, base: &[u64], e: &BigUint, m: &[u64]) -> Poly {
        let mut acc = self.rem(&[1], m);
        let b = self.rem(base, m);
        for i in (0..e.bits()).rev() {
            acc = self.mulmod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mulmod(&acc, &b, m);
            }
        }
        acc
    }

    fn powmod_u64(self, base: &[u64], e: u64, m: &[u64]) -> Poly {
        self.powmod(base, &BigUint::from(e), m)
    }

    fn is_one(a: &[u64]) -> bool {
        a == [1]
    }

    /// Squarefree decomposition of a monic polynomial: pairs `(g, k)` with
    /// `f = ∏ g^k`, each `g` squarefree and monic.
    pub fn squarefree(self, f: &[u64]) -> Vec<(Poly, u32)> {
        let mut out = Vec::new();
        if f.len() <= 1 {
            return out;
        }
        let mut c = self.gcd(f, &self.derivative(f));
        let mut w = self.div_exact(f, &c);
        let mut i = 1u32;
        while !Self::is_one(&w) {
            let y = self.gcd(&w, &c);
            let z = self.div_exact(&w, &y);
            if !Self::is_one(&z) {
                out.push((z, i));
            }
            i += 1;
            w = y;
            c = self.div_exact(&c, &w);
        }
        if !Self::is_one(&c) {
            // c is a p-th power: take the p-th root coefficientwise
            let p = self.p as usize;
            let root: Poly = c.iter().step_by(p).copied().collect();
            for (g, k) in self.squarefree(&root) {
                out.push((g, k * self.p as u32));
            }
        }
        out
    }

    /// Splits a squarefree monic polynomial into products of irreducibles of
    /// equal degree: pairs `(product, degree)`.
    fn distinct_degree(self, f: &[u64]) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        let mut rest = f.to_vec();
        let x = vec![0, 1];
        let mut h = self.rem(&x, &rest);
        let mut d = 1;
        while rest.len() > 2 * d {
            h = self.powmod_u64(&h, self.p, &rest);
            let g = self.gcd(&self.sub_poly(&h, &x), &rest);
            if !Self::is_one(&g) {
                rest = self.div_exact(&rest, &g);
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
            d += 1;
        }
        if rest.len() > 1 {
            let deg = rest.len() - 1;
            out.push((rest, deg));
        }
        out
    }

    fn equal_degree(self, f: &[u64], d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
        let n = f.len() - 1;
        if n == d {
            return vec![f.to_vec()];
        }
        let exponent = if self.p == 2 {
            BigUint::zero()
        } else {
            (BigUint::from(self.p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32)
        };
        loop {
            let a: Poly = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = if self.p == 2 {
                // trace map a + a^2 + ... + a^(2^(d-1))
                let mut t = self.rem(&a, f);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = self.mulmod(&t, &t, f);
                    acc = self.add_poly(&acc, &t);
                }
                acc
            } else {
                self.sub_poly(&self.powmod(&a, &exponent, f), &[1])
            };
            let g = self.gcd(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let h = self.div_exact(f, &g);
                let mut out = self.equal_degree(&g, d, rng);
                out.extend(self.equal_degree(&h, d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a squarefree monic polynomial.
    pub fn factor_squarefree(self, f: &[u64]) -> Vec<Poly> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1ea7_1177 ^ self.p);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, &mut rng));
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Monic irreducible factors with multiplicity of a nonzero polynomial.
    pub fn factor(self, f: &[u64]) -> Vec<(Poly, u32)> {
        let f = self.monic(f);
        let mut out = Vec::new();
        for (g, k) in self.squarefree(&f) {
            for h in self.factor_squarefree(&g) {
                out.push((h, k));
            }
        }
        out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        // a factor can appear from two squarefree layers only if k differs; merge
        let mut merged: Vec<(Poly, u32)> = Vec::new();
        for (h, k) in out {
            match merged.last_mut() {
                Some((last, m)) if *last == h => *m += k,
                _ => merged.push((h, k)),
            }
        }
        merged
    }
}
