//! Brute-force reference implementations for cross-checking the engine.
//!
//! These deliberately avoid the engine's traversal and factoring code: they
//! read only the raw bundle map of a graph and the public ideal operations.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph, Multiplicity, VertexSet};
use crate::ideals::{self, IdealRep};
use crate::lattice::{enumerate_hs, AdmissiblePair};
use crate::laurent::{FieldTag, LaurentPoly};
use crate::theorems::Analysis;

pub const BRUTE_LIMIT: usize = 12;

/// Successor lists with summed multiplicities, built from the bundle map.
fn adjacency(g: &Graph) -> Vec<Vec<(usize, Multiplicity)>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for (&(s, t), &m) in g.bundles() {
        adj[s].push((t, m));
    }
    adj
}

/// Hereditary saturated subsets by filtering every subset.
pub fn brute_hs(g: &Graph) -> Result<Vec<VertexSet>> {
    let n = g.vertex_count();
    if n > BRUTE_LIMIT {
        return Err(Error::Precondition(format!("brute force needs at most {BRUTE_LIMIT} vertices, got {n}")));
    }
    let adj = adjacency(g);
    let mut out = Vec::new();
    for bits in 0u64..(1 << n) {
        let inside = |v: usize| bits >> v & 1 == 1;
        let hereditary = (0..n).filter(|&v| inside(v)).all(|v| adj[v].iter().all(|&(t, _)| inside(t)));
        if !hereditary {
            continue;
        }
        let saturated = (0..n).filter(|&v| !inside(v)).all(|v| {
            let regular = !adj[v].is_empty() && adj[v].iter().all(|&(_, m)| m != Multiplicity::Omega);
            !(regular && adj[v].iter().all(|&(t, _)| inside(t)))
        });
        if saturated {
            out.push(VertexSet::from_bits(bits));
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModelReport {
    pub checks: usize,
    pub mismatches: Vec<String>,
}

impl ModelReport {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.mismatches.push(what());
        }
    }
}

/// Random Laurent polynomials `x^k · q` with `q` of degree 1..=`max_degree`,
/// small integer coefficients and nonzero constant term.
pub fn random_laurent(seed: u64, count: usize, max_degree: usize) -> Vec<LaurentPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=max_degree);
            let mut coeffs: Vec<i64> = (0..=d).map(|_| rng.gen_range(-3..=3)).collect();
            if coeffs[0] == 0 {
                coeffs[0] = 1;
            }
            if coeffs[d] == 0 {
                coeffs[d] = -1;
            }
            LaurentPoly::from_ints(FieldTag::Rationals, rng.gen_range(-2..=2), &coeffs)
        })
        .collect()
}

/// Replays the ideal operations on the single-loop graph against direct
/// arithmetic in `K[x, x⁻¹]`, where an ideal is its monic generator (`0` for
/// the zero ideal, `1` for the whole ring).
pub fn laurent_model(polys: &[LaurentPoly]) -> Result<ModelReport> {
    let g = Graph::new(&["v"], &[("v", "v", Multiplicity::Finite(1))])?;
    let field = polys.first().map_or(FieldTag::Rationals, LaurentPoly::field);
    let a = Analysis::new(g, field)?;
    let g = a.g();
    let c = Cycle::through(g, &[0])?;
    let top = AdmissiblePair::top(g);
    let to_ideal = |f: &LaurentPoly| -> Result<IdealRep> {
        if f.is_zero() {
            Ok(IdealRep::zero())
        } else if f.is_unit() {
            Ok(IdealRep::whole(g))
        } else {
            IdealRep::make(g, AdmissiblePair::BOTTOM, [(c.clone(), f.generator())])
        }
    };

    let mut gens: Vec<LaurentPoly> = vec![LaurentPoly::zero(field), LaurentPoly::one(field)];
    gens.extend(polys.iter().map(LaurentPoly::generator));
    let mut report = ModelReport::default();

    for f in &gens {
        let i = to_ideal(f)?;
        let shown = || f.to_string();
        report.expect(
            i.graded_part() == if f.is_unit() { top } else { AdmissiblePair::BOTTOM },
            || format!("graded part of ⟨{}⟩", shown()),
        );
        let limit = if f.is_unit() { IdealRep::whole(g) } else { IdealRep::zero() };
        report.expect(ideals::limit_power(g, &i) == limit, || format!("limit of ⟨{}⟩", shown()));
        for n in 1..=3u32 {
            let expected = to_ideal(&f.pow(n as i64)?)?;
            report.expect(ideals::power(g, &i, n)? == expected, || format!("⟨{}⟩^{n}", shown()));
        }
        if f.is_unit() {
            continue;
        }
        let irreducible = !f.is_zero() && f.is_irreducible()?;
        let prime = f.is_zero() || irreducible;
        report.expect(ideals::is_prime(g, &a.lattice, &i)?.is_prime() == prime, || {
            format!("primality of ⟨{}⟩", shown())
        });
        report.expect(ideals::is_maximal(g, &a.lattice, &i)? == irreducible, || {
            format!("maximality of ⟨{}⟩", shown())
        });
        let radical = if f.is_zero() { LaurentPoly::zero(field) } else { f.squarefree_core()? };
        let r = a.intersection_of_primes(&i)?;
        report.expect(r.result == to_ideal(&radical)? && r.equals_input == (radical == *f), || {
            format!("intersection of primes over ⟨{}⟩", shown())
        });
        report.expect(a.krull_check(&i)?, || format!("Krull on ⟨{}⟩", shown()));
    }

    for f in &gens {
        for h in &gens {
            let (i, j) = (to_ideal(f)?, to_ideal(h)?);
            let pair = || format!("⟨{f}⟩, ⟨{h}⟩");
            report.expect(ideals::contains(g, &i, &j)? == f.divides(h)?, || format!("containment {}", pair()));
            let lcm = if f.is_zero() || h.is_zero() { LaurentPoly::zero(field) } else { f.lcm(h)? };
            report.expect(ideals::intersect(g, &i, &j)? == to_ideal(&lcm)?, || format!("intersection {}", pair()));
            report.expect(ideals::product(g, &i, &j)? == to_ideal(&f.mul(h)?)?, || format!("product {}", pair()));
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SinkLatticeReport {
    pub sinks: usize,
    pub sets: usize,
    pub holds: bool,
    pub failures: Vec<String>,
}

/// Checks that `T ↦ {v : every sink reachable from v lies in T}` is an order
/// isomorphism from subsets of sinks onto the hereditary saturated sets.
pub fn acyclic_sink_lattice(g: &Graph) -> Result<SinkLatticeReport> {
    let n = g.vertex_count();
    let adj = adjacency(g);
    // reachable sets by depth-first search from each vertex
    let mut below = vec![0u64; n];
    for (v, reach) in below.iter_mut().enumerate() {
        let mut stack = vec![v];
        let mut seen = 1u64 << v;
        while let Some(x) = stack.pop() {
            for &(t, _) in &adj[x] {
                if t == v {
                    return Err(Error::Precondition("the graph has a cycle".into()));
                }
                if seen >> t & 1 == 0 {
                    seen |= 1 << t;
                    stack.push(t);
                }
            }
        }
        *reach = seen;
    }
    let sinks: Vec<usize> = (0..n).filter(|&v| adj[v].is_empty()).collect();
    if sinks.len() > BRUTE_LIMIT {
        return Err(Error::Precondition("too many sinks".into()));
    }
    let sink_mask: u64 = sinks.iter().map(|&s| 1u64 << s).sum();
    let image = |t: u64| -> u64 { (0..n).filter(|&v| below[v] & sink_mask & !t == 0).map(|v| 1u64 << v).sum() };

    let subsets: Vec<u64> = (0u64..1 << sinks.len())
        .map(|k| sinks.iter().enumerate().filter(|(i, _)| k >> i & 1 == 1).map(|(_, &s)| 1u64 << s).sum())
        .collect();
    let images: Vec<u64> = subsets.iter().map(|&t| image(t)).collect();
    let mut failures = Vec::new();

    let distinct: BTreeSet<u64> = images.iter().copied().collect();
    if distinct.len() != images.len() {
        failures.push("the sink map is not injective".to_string());
    }
    let mut expected: Vec<VertexSet> = images.iter().map(|&b| VertexSet::from_bits(b)).collect();
    expected.sort();
    let brute = brute_hs(g)?;
    if expected != brute {
        failures.push(format!(
            "{} sink subsets but {} hereditary saturated sets by brute force",
            expected.len(),
            brute.len()
        ));
    }
    if enumerate_hs(g) != brute {
        failures.push("engine enumeration differs from brute force".to_string());
    }
    for (a, &ta) in subsets.iter().enumerate() {
        for (b, &tb) in subsets.iter().enumerate() {
            let sub_t = ta & !tb == 0;
            let sub_h = images[a] & !images[b] == 0;
            if sub_t != sub_h {
                failures.push(format!("order not preserved between sink subsets {a} and {b}"));
            }
        }
    }
    Ok(SinkLatticeReport { sinks: sinks.len(), sets: brute.len(), holds: failures.is_empty(), failures })
}

/// Monic irreducible factors over `F_p` with multiplicities by trial division
/// with every monic polynomial of degree up to half the remaining degree.
/// Coefficients are lowest degree first.
pub fn trial_division_factor(p: u64, f: &[u64]) -> Vec<(Vec<u64>, u32)> {
    let reduce = |v: &mut Vec<u64>| {
        for c in v.iter_mut() {
            *c %= p;
        }
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    let inv = |a: u64| (1..p).find(|&b| a * b % p == 1).expect("nonzero residue");
    // quotient and remainder by a monic divisor
    let divide = |a: &[u64], d: &[u64]| -> (Vec<u64>, Vec<u64>) {
        let mut r = a.to_vec();
        if r.len() < d.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![0; r.len() - d.len() + 1];
        for k in (0..q.len()).rev() {
            let c = r[k + d.len() - 1] % p;
            q[k] = c;
            for (j, &dj) in d.iter().enumerate() {
                r[k + j] = (r[k + j] + p * p - c * dj % p) % p;
            }
        }
        reduce(&mut r);
        (q, r)
    };

    let mut rest = f.to_vec();
    reduce(&mut rest);
    while rest.first() == Some(&0) {
        rest.remove(0);
    }
    if rest.is_empty() {
        return Vec::new();
    }
    let lc = inv(*rest.last().unwrap());
    for c in rest.iter_mut() {
        *c = *c * lc % p;
    }
    let mut out = Vec::new();
    let mut d = 1;
    while 2 * d < rest.len() {
        let count = p.pow(d as u32);
        for k in 0..count {
            let mut cand: Vec<u64> = (0..d).map(|i| k / p.pow(i as u32) % p).collect();
            cand.push(1);
            let mut mult = 0;
            loop {
                let (q, r) = divide(&rest, &cand);
                if !r.is_empty() {
                    break;
                }
                rest = q;
                mult += 1;
            }
            if mult > 0 {
                out.push((cand, mult));
            }
        }
        d += 1;
    }
    if rest.len() > 1 {
        match out.iter_mut().find(|(g, _)| *g == rest) {
            Some((_, m)) => *m += 1,
            None => out.push((rest, 1)),
        }
    }
    out.sort();
    out
}

/// Engine factorization over `F_p` in the oracle's format.
pub fn engine_factor_mod_p(p: u64, f: &[u64]) -> Result<Vec<(Vec<u64>, u32)>> {
    let field = FieldTag::prime(p)?;
    let coeffs = f.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
    let poly = LaurentPoly::new(field, 0, coeffs)?;
    let mut out: Vec<(Vec<u64>, u32)> = poly
        .factor()?
        .into_iter()
        .map(|(g, k)| {
            let coeffs = g.coeffs().iter().map(|c| c.to_integer().try_into().unwrap()).collect();
            (coeffs, k)
        })
        .collect();
    out.sort();
    Ok(out)
}
