//! Decision procedures and constructors for the structural results on ideals:
//! prime spectra, intersections of primes, factorizations and counting.
//!
//! Statements quantifying over every ideal are tested over the graded lattice
//! plus a sampled family of non-graded ideals (one component per exitless
//! quotient cycle, polynomials from [`TEST_POLYNOMIALS`]).

mod registry;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Check, Cycle, Graph, VertexSet};
use crate::ideals::{self, IdealRep};
use crate::lattice::{enumerate_pairs, quotient, AdmissiblePair, PairLattice};
use crate::laurent::{FieldTag, LaurentPoly};

pub use registry::{find_check, registry, CheckOutcome, TheoremCheck};

pub const TEST_POLYNOMIALS: [&str; 4] = ["1+x", "(1+x)^2", "1+x^2", "(1+x)(1+x^2)"];

/// Graph, field and the derived lattice data shared by all procedures.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub graph: Graph,
    pub field: FieldTag,
    pub lattice: PairLattice,
    prime: Vec<bool>,
    exitless: Vec<Vec<Cycle>>,
    sites: Vec<(AdmissiblePair, Cycle)>,
}

/// All representable primes over an ideal. `families` lists the sites
/// `(H, B_H, c)` where every irreducible `f` gives a prime over the ideal.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrimesOver {
    pub graded: Vec<AdmissiblePair>,
    pub nongraded: Vec<IdealRep>,
    pub families: Vec<(AdmissiblePair, Cycle)>,
}

impl PrimesOver {
    /// Finite members as ideals, graded first.
    pub fn finite_members(&self) -> Vec<IdealRep> {
        self.graded
            .iter()
            .map(|&p| IdealRep::graded(p))
            .chain(self.nongraded.iter().cloned())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIntersection {
    pub result: IdealRep,
    pub equals_input: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KEquivalence {
    pub condition_k: bool,
    pub all_intersections_of_primes: bool,
    pub tested: usize,
    pub counterexample: Option<IdealRep>,
}

impl KEquivalence {
    pub fn agrees(&self) -> bool {
        self.condition_k == self.all_intersections_of_primes
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EverythingPrime {
    pub all_prime: bool,
    pub k_chain_directed: bool,
    pub k_chain: bool,
}

impl EverythingPrime {
    pub fn agrees(&self) -> bool {
        self.all_prime == self.k_chain_directed && self.k_chain_directed == self.k_chain
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealCount {
    Finite(usize),
    /// An exitless quotient cycle carrying the family `⟨g(c)⟩`.
    Infinite(AdmissiblePair, Cycle),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalDecomposition {
    pub blocks: Vec<VertexSet>,
    pub zero_is_meet_of_maximals: bool,
    pub every_ideal_meet_of_maximals: bool,
}

impl Analysis {
    pub fn new(graph: Graph, field: FieldTag) -> Result<Analysis> {
        let lattice = enumerate_pairs(&graph)?;
        let prime = ideals::graded_prime_flags(&graph, &lattice)?;
        let exitless = lattice
            .elements()
            .iter()
            .map(|p| Ok(quotient(&graph, p)?.exitless_cycles()))
            .collect::<Result<Vec<_>>>()?;
        let mut sites = Vec::new();
        for (i, pair) in lattice.elements().iter().enumerate() {
            if i == lattice.top() || Some(pair.s) != lattice.breaking(pair.h) {
                continue;
            }
            if !graph.downward_directed(graph.all().difference(pair.h))?.holds() {
                continue;
            }
            match exitless[i].as_slice() {
                [] => {}
                [c] => sites.push((*pair, c.clone())),
                _ => {
                    return Err(Error::Internal(format!(
                        "downward-directed quotient of {} has several exitless cycles",
                        pair.display(&graph)
                    )))
                }
            }
        }
        Ok(Analysis { graph, field, lattice, prime, exitless, sites })
    }

    pub fn g(&self) -> &Graph {
        &self.graph
    }

    fn poly(&self, s: &str) -> LaurentPoly {
        LaurentPoly::parse(self.field, s).expect("test polynomial parses")
    }

    fn index(&self, pair: &AdmissiblePair) -> Result<usize> {
        self.lattice
            .position(pair)
            .ok_or_else(|| Error::InvalidPair(format!("{} is not admissible", pair.display(&self.graph))))
    }

    pub fn is_graded_prime(&self, pair: &AdmissiblePair) -> Result<bool> {
        Ok(self.prime[self.index(pair)?])
    }

    /// Exitless cycles of `E \ (H, S)`.
    pub fn exitless_cycles(&self, pair: &AdmissiblePair) -> Result<&[Cycle]> {
        Ok(&self.exitless[self.index(pair)?])
    }

    /// Sites `(H, B_H, c)` carrying the non-graded primes `⟨I(H, B_H), f(c)⟩`.
    pub fn prime_sites(&self) -> &[(AdmissiblePair, Cycle)] {
        &self.sites
    }

    fn require_proper(&self, i: &IdealRep) -> Result<()> {
        if i.is_whole(&self.graph) {
            return Err(Error::WholeAlgebra);
        }
        Ok(())
    }

    pub fn graded_primes(&self) -> Vec<AdmissiblePair> {
        let mut out: Vec<AdmissiblePair> = self
            .lattice
            .elements()
            .iter()
            .zip(&self.prime)
            .filter(|(_, &p)| p)
            .map(|(&e, _)| e)
            .collect();
        out.sort();
        out
    }

    /// Every lattice element below the top, then every non-graded ideal with
    /// one test polynomial on one exitless quotient cycle.
    pub fn sample_ideals(&self) -> Result<Vec<IdealRep>> {
        let mut out = Vec::new();
        for (i, pair) in self.lattice.elements().iter().enumerate() {
            if i == self.lattice.top() {
                continue;
            }
            out.push(IdealRep::graded(*pair));
        }
        for (i, pair) in self.lattice.elements().iter().enumerate() {
            for c in &self.exitless[i] {
                for s in TEST_POLYNOMIALS {
                    out.push(IdealRep::make(&self.graph, *pair, [(c.clone(), self.poly(s))])?);
                }
            }
        }
        Ok(out)
    }

    pub fn primes_containing(&self, i: &IdealRep) -> Result<PrimesOver> {
        self.require_proper(i)?;
        let g = &self.graph;
        let mut out = PrimesOver::default();
        for p in self.graded_primes() {
            if ideals::contains(g, &IdealRep::graded(p), i)? {
                out.graded.push(p);
            }
        }
        'sites: for (pair, c) in &self.sites {
            if !i.graded_part().leq(pair) {
                continue;
            }
            let mut pinned = None;
            for (c2, p) in i.components() {
                if c2.vertex_set().is_subset(pair.h) {
                    continue;
                }
                if c2 != c {
                    continue 'sites;
                }
                pinned = Some(p);
            }
            match pinned {
                None => out.families.push((*pair, c.clone())),
                Some(p) => {
                    for (f, _) in p.factor()? {
                        out.nongraded.push(IdealRep::make(g, *pair, [(c.clone(), f)])?);
                    }
                }
            }
        }
        out.nongraded.sort();
        Ok(out)
    }

    /// The intersection of all primes over `I`. Families add nothing beyond
    /// their graded part `I(H, B_H)`, which is itself a listed graded prime.
    pub fn intersection_of_primes(&self, i: &IdealRep) -> Result<PrimeIntersection> {
        let g = &self.graph;
        let primes = self.primes_containing(i)?;
        for (pair, _) in &primes.families {
            if !primes.graded.contains(pair) {
                return Err(Error::Internal(format!(
                    "graded part {} of a prime family is not a listed prime",
                    pair.display(g)
                )));
            }
        }
        let members = primes.finite_members();
        let result = ideals::intersect_all(g, &members)?;
        for p in &members {
            if !ideals::contains(g, p, &result)? {
                return Err(Error::Internal(format!(
                    "intersection {} escapes the prime {}",
                    result.display(g),
                    p.display(g)
                )));
            }
        }
        if !ideals::contains(g, &result, i)? {
            return Err(Error::Internal(format!(
                "{} is not contained in the intersection of its primes",
                i.display(g)
            )));
        }
        let equals_input = result == *i;
        Ok(PrimeIntersection { result, equals_input })
    }

    /// The ideal `(H, S, {(c, (1+x)²)})` at the first quotient with an exitless
    /// cycle; `None` exactly when Condition (K) holds.
    pub fn prime_intersection_counterexample(&self) -> Result<Option<IdealRep>> {
        let k = self.graph.condition_k().holds();
        let square = self.poly("(1+x)^2");
        for (i, pair) in self.lattice.elements().iter().enumerate() {
            if let Some(c) = self.exitless[i].first() {
                if k {
                    return Err(Error::Internal(format!(
                        "Condition (K) holds but {} has an exitless quotient cycle",
                        pair.display(&self.graph)
                    )));
                }
                let ideal = IdealRep::make(&self.graph, *pair, [(c.clone(), square.clone())])?;
                if self.intersection_of_primes(&ideal)?.equals_input {
                    return Err(Error::Internal(format!(
                        "{} is an intersection of primes",
                        ideal.display(&self.graph)
                    )));
                }
                return Ok(Some(ideal));
            }
        }
        if !k {
            return Err(Error::Internal("Condition (K) fails but no quotient has an exitless cycle".into()));
        }
        Ok(None)
    }

    pub fn condition_k_equivalence(&self) -> Result<KEquivalence> {
        let condition_k = self.graph.condition_k().holds();
        let sample = self.sample_ideals()?;
        let mut counterexample = None;
        for i in &sample {
            if !self.intersection_of_primes(i)?.equals_input {
                counterexample = Some(i.clone());
                break;
            }
        }
        Ok(KEquivalence {
            condition_k,
            all_intersections_of_primes: counterexample.is_none(),
            tested: sample.len(),
            counterexample,
        })
    }

    /// Minimal members of a family of ideals under inclusion.
    fn minimal(&self, family: Vec<IdealRep>) -> Result<Vec<IdealRep>> {
        let g = &self.graph;
        let mut out = Vec::new();
        for p in &family {
            let mut minimal = true;
            for q in &family {
                if q != p && ideals::contains(g, p, q)? {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                out.push(p.clone());
            }
        }
        Ok(out)
    }

    pub fn irredundant_prime_intersection(&self, i: &IdealRep) -> Result<Option<Vec<IdealRep>>> {
        let primes = self.primes_containing(i)?;
        let minimal = self.minimal(primes.finite_members())?;
        if ideals::intersect_all(&self.graph, &minimal)? != *i {
            return Ok(None);
        }
        let mut family = prune_redundant(&self.graph, minimal)?;
        family.sort();
        Ok(Some(family))
    }

    /// Whether two irredundant families with equal intersections coincide.
    pub fn uniqueness_check(&self, a: &[IdealRep], b: &[IdealRep]) -> Result<bool> {
        let g = &self.graph;
        for fam in [a, b] {
            if !is_irredundant(g, fam)? {
                return Err(Error::NotIrredundant(format_family(g, fam)));
            }
        }
        if ideals::intersect_all(g, a)? != ideals::intersect_all(g, b)? {
            return Err(Error::Precondition("the families have different intersections".into()));
        }
        let sa: Vec<&IdealRep> = a.iter().sorted().dedup().collect();
        let sb: Vec<&IdealRep> = b.iter().sorted().dedup().collect();
        Ok(sa == sb)
    }

    /// The unique irredundant family of graded primes whose meet (and
    /// product) is the graded ideal `I`.
    pub fn factor_graded(&self, i: &IdealRep) -> Result<Vec<AdmissiblePair>> {
        self.require_proper(i)?;
        if !i.is_graded() {
            return Err(Error::Precondition(format!("{} is not graded", i.display(&self.graph))));
        }
        let g = &self.graph;
        let primes = self.primes_containing(i)?;
        let graded: Vec<IdealRep> = primes.graded.iter().map(|&p| IdealRep::graded(p)).collect();
        let minimal = self.minimal(graded)?;
        if ideals::intersect_all(g, &minimal)? != *i {
            return Err(Error::NoFactorization(i.display(g).to_string()));
        }
        let family = prune_redundant(g, minimal)?;
        let prod = product_of(g, &family)?;
        if prod != *i {
            return Err(Error::Internal(format!(
                "product {} of the factors differs from {}",
                prod.display(g),
                i.display(g)
            )));
        }
        Ok(family.iter().map(IdealRep::graded_part).sorted().collect())
    }

    /// Pairwise non-containment of the factors, after checking the product is
    /// supported.
    pub fn tight_product_check(&self, factors: &[IdealRep]) -> Result<bool> {
        let g = &self.graph;
        product_of(g, factors)?;
        for (a, b) in factors.iter().tuple_combinations() {
            if ideals::contains(g, a, b)? || ideals::contains(g, b, a)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn everything_prime_check(&self) -> Result<EverythingPrime> {
        let g = &self.graph;
        let k = g.condition_k().holds();
        let chain = self.lattice.is_chain();
        let mut all_prime = (0..self.lattice.len()).all(|i| i == self.lattice.top() || self.prime[i]);
        if all_prime {
            for i in self.sample_ideals()? {
                if !i.is_graded() && !ideals::is_prime(g, &self.lattice, &i)?.is_prime() {
                    all_prime = false;
                    break;
                }
            }
        }
        let mut directed = true;
        for (i, pair) in self.lattice.elements().iter().enumerate() {
            if i == self.lattice.top() {
                continue;
            }
            let q = quotient(g, pair)?;
            if !q.graph.downward_directed(q.graph.all())?.holds() {
                directed = false;
            }
        }
        let small_breaking = self.lattice.hereditary_saturated_sets().all(|h| {
            self.lattice.breaking(h).is_some_and(|b| b.len() <= 1)
        });
        Ok(EverythingPrime {
            all_prime,
            k_chain_directed: k && chain && small_breaking && directed,
            k_chain: k && chain,
        })
    }

    /// A prime ideal, which always exists. With Condition (K) the least graded
    /// prime; otherwise `I(H, B_H)` for `H = {u : u does not reach v}` with `v`
    /// the base of exactly one closed path.
    pub fn prime_always_exists(&self) -> Result<AdmissiblePair> {
        let g = &self.graph;
        let pair = match g.condition_k() {
            Check::Holds => *self
                .graded_primes()
                .first()
                .ok_or_else(|| Error::Internal("no graded prime".into()))?,
            Check::Fails(v) => {
                let h: VertexSet = (0..g.vertex_count()).filter(|&u| !g.reaches(u, v)).collect();
                let b = self
                    .lattice
                    .breaking(h)
                    .ok_or_else(|| Error::Internal(format!("{} is not hereditary saturated", g.set_string(h))))?;
                AdmissiblePair { h, s: b }
            }
        };
        if !self.is_graded_prime(&pair)? {
            return Err(Error::Internal(format!("{} is not prime", pair.display(g))));
        }
        Ok(pair)
    }

    pub fn count_ideals(&self) -> Result<IdealCount> {
        if self.graph.condition_k().holds() {
            return Ok(IdealCount::Finite(self.lattice.len()));
        }
        for (i, pair) in self.lattice.elements().iter().enumerate() {
            if let Some(c) = self.exitless[i].first() {
                return Ok(IdealCount::Infinite(*pair, c.clone()));
            }
        }
        Err(Error::Internal("Condition (K) fails but no quotient has an exitless cycle".into()))
    }

    pub fn maximal_decomposition(&self) -> Result<Option<MaximalDecomposition>> {
        if !self.graph.condition_k().holds() {
            return Ok(None);
        }
        let nonempty: Vec<VertexSet> =
            self.lattice.hereditary_saturated_sets().filter(|h| !h.is_empty()).collect();
        let blocks: Vec<VertexSet> = nonempty
            .iter()
            .copied()
            .filter(|&h| !nonempty.iter().any(|&k| k != h && k.is_subset(h)))
            .sorted()
            .collect();
        let union = blocks.iter().fold(VertexSet::EMPTY, |acc, &b| acc.union(b));
        let disjoint = blocks.iter().tuple_combinations().all(|(a, b)| a.is_disjoint(*b));
        if union != self.graph.all() || !disjoint {
            return Ok(None);
        }
        let lat = &self.lattice;
        let maximals: Vec<usize> = (0..lat.len()).filter(|&i| lat.covered_by_top(i)).collect();
        let meet_above = |x: usize| lat.meet_all(maximals.iter().copied().filter(|&m| lat.leq(x, m)));
        Ok(Some(MaximalDecomposition {
            blocks,
            zero_is_meet_of_maximals: lat.meet_all(maximals.iter().copied()) == lat.bottom(),
            every_ideal_meet_of_maximals: (0..lat.len()).all(|x| meet_above(x) == x),
        }))
    }

    /// Whether `⋂ₙ Iⁿ = 0`, which happens exactly when `I` contains no vertex.
    pub fn krull_check(&self, i: &IdealRep) -> Result<bool> {
        let limit = ideals::limit_power(&self.graph, i);
        let verdict = limit.is_zero();
        let no_vertices = i.graded_part().h.is_empty() && i.graded_part().s.is_empty();
        if verdict != no_vertices {
            return Err(Error::Internal(format!("Krull criterion fails on {}", i.display(&self.graph))));
        }
        Ok(verdict)
    }
}

/// Greedy removal in the given order of members whose removal keeps the
/// intersection unchanged.
pub fn prune_redundant(g: &Graph, family: Vec<IdealRep>) -> Result<Vec<IdealRep>> {
    let target = ideals::intersect_all(g, &family)?;
    let mut kept = family;
    let mut k = 0;
    while k < kept.len() {
        let rest: Vec<IdealRep> =
            kept.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, m)| m.clone()).collect();
        if ideals::intersect_all(g, &rest)? == target {
            kept = rest;
        } else {
            k += 1;
        }
    }
    Ok(kept)
}

/// No member contains the intersection of the others.
pub fn is_irredundant(g: &Graph, family: &[IdealRep]) -> Result<bool> {
    for k in 0..family.len() {
        let rest: Vec<IdealRep> =
            family.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, m)| m.clone()).collect();
        if ideals::contains(g, &family[k], &ideals::intersect_all(g, &rest)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Left-to-right product; the empty product is `L`.
pub fn product_of(g: &Graph, factors: &[IdealRep]) -> Result<IdealRep> {
    let Some(first) = factors.first() else {
        return Ok(IdealRep::whole(g));
    };
    factors.iter().skip(1).try_fold(first.clone(), |acc, f| ideals::product(g, &acc, f))
}

pub fn format_family(g: &Graph, family: &[IdealRep]) -> String {
    format!("{{{}}}", family.iter().map(|i| i.display(g).to_string()).join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    const Q: FieldTag = FieldTag::Rationals;

    fn analysis(g: Graph) -> Analysis {
        Analysis::new(g, Q).unwrap()
    }

    fn set(a: &Analysis, names: &[&str]) -> VertexSet {
        a.graph.vertex_set(names).unwrap()
    }

    fn on_loop(a: &Analysis, h: &[&str], v: &str, p: &str) -> IdealRep {
        let g = &a.graph;
        let c = Cycle::through(g, &[g.vertex(v).unwrap()]).unwrap();
        let pair = AdmissiblePair::graded(set(a, h));
        IdealRep::make(g, pair, [(c, LaurentPoly::parse(Q, p).unwrap())]).unwrap()
    }

    #[test]
    fn graded_prime_lists() {
        let t1 = analysis(corpus::t1());
        assert_eq!(t1.graded_primes(), vec![AdmissiblePair::BOTTOM, AdmissiblePair::graded(set(&t1, &["w"]))]);
        let d2 = analysis(corpus::d2());
        assert_eq!(
            d2.graded_primes(),
            vec![AdmissiblePair::graded(set(&d2, &["v1"])), AdmissiblePair::graded(set(&d2, &["v2"]))]
        );
        let l1 = analysis(corpus::l1());
        assert_eq!(l1.graded_primes(), vec![AdmissiblePair::BOTTOM]);
    }

    #[test]
    fn single_loop_square() {
        let l1 = analysis(corpus::l1());
        let sq = on_loop(&l1, &[], "v", "(1+x)^2");
        let primes = l1.primes_containing(&sq).unwrap();
        assert!(primes.graded.is_empty());
        assert_eq!(primes.nongraded, vec![on_loop(&l1, &[], "v", "1+x")]);
        let r = l1.intersection_of_primes(&sq).unwrap();
        assert_eq!(r.result, on_loop(&l1, &[], "v", "1+x"));
        assert!(!r.equals_input);
    }

    #[test]
    fn toeplitz_decomposition() {
        let t1 = analysis(corpus::t1());
        let a = on_loop(&t1, &["w"], "v", "1+x");
        let b = on_loop(&t1, &["w"], "v", "1+x^2");
        let i = on_loop(&t1, &["w"], "v", "(1+x)(1+x^2)");
        let primes = t1.primes_containing(&i).unwrap();
        assert!(primes.graded.is_empty());
        assert_eq!(primes.nongraded, vec![a.clone(), b.clone()]);
        assert!(t1.intersection_of_primes(&i).unwrap().equals_input);
        assert_eq!(t1.irredundant_prime_intersection(&i).unwrap(), Some(vec![a.clone(), b.clone()]));
        assert!(t1.uniqueness_check(&[a.clone(), b.clone()], &[b, a]).unwrap());
    }

    #[test]
    fn counterexamples() {
        let l1 = analysis(corpus::l1());
        assert_eq!(l1.prime_intersection_counterexample().unwrap(), Some(on_loop(&l1, &[], "v", "(1+x)^2")));
        let t1 = analysis(corpus::t1());
        assert_eq!(
            t1.prime_intersection_counterexample().unwrap(),
            Some(on_loop(&t1, &["w"], "v", "(1+x)^2"))
        );
        assert_eq!(analysis(corpus::r2()).prime_intersection_counterexample().unwrap(), None);
        let c2 = analysis(corpus::c2()).condition_k_equivalence().unwrap();
        assert!(c2.condition_k && c2.all_intersections_of_primes);
    }

    #[test]
    fn graded_factorizations() {
        let d2 = analysis(corpus::d2());
        assert_eq!(
            d2.factor_graded(&IdealRep::zero()).unwrap(),
            vec![AdmissiblePair::graded(set(&d2, &["v1"])), AdmissiblePair::graded(set(&d2, &["v2"]))]
        );
        let t1 = analysis(corpus::t1());
        let w = IdealRep::graded(AdmissiblePair::graded(set(&t1, &["w"])));
        assert_eq!(t1.factor_graded(&w).unwrap(), vec![w.graded_part()]);
    }

    #[test]
    fn tightness() {
        let l1 = analysis(corpus::l1());
        let p = on_loop(&l1, &[], "v", "1+x");
        let q = on_loop(&l1, &[], "v", "1+x^2");
        let pq = on_loop(&l1, &[], "v", "(1+x)(1+x^2)");
        assert!(l1.tight_product_check(&[p.clone(), q]).unwrap());
        assert!(!l1.tight_product_check(&[p.clone(), pq]).unwrap());
        assert!(l1.tight_product_check(&[p]).unwrap());
    }

    #[test]
    fn everything_prime() {
        let c2 = analysis(corpus::c2()).everything_prime_check().unwrap();
        assert!(c2.all_prime && c2.k_chain_directed && c2.k_chain);
        for g in [corpus::d2(), corpus::t1()] {
            let r = analysis(g).everything_prime_check().unwrap();
            assert!(!r.all_prime && !r.k_chain_directed && !r.k_chain);
        }
    }

    #[test]
    fn counting_and_decomposition() {
        assert_eq!(analysis(corpus::c2()).count_ideals().unwrap(), IdealCount::Finite(3));
        assert_eq!(analysis(corpus::r2()).count_ideals().unwrap(), IdealCount::Finite(2));
        assert!(matches!(analysis(corpus::l1()).count_ideals().unwrap(), IdealCount::Infinite(..)));

        let rr = analysis(corpus::rr());
        let d = rr.maximal_decomposition().unwrap().unwrap();
        assert_eq!(d.blocks.len(), 2);
        assert!(d.zero_is_meet_of_maximals && d.every_ideal_meet_of_maximals);
        assert_eq!(analysis(corpus::t1()).maximal_decomposition().unwrap(), None);
        let r2 = analysis(corpus::r2());
        assert_eq!(r2.maximal_decomposition().unwrap().unwrap().blocks, vec![r2.graph.all()]);
    }

    #[test]
    fn prime_existence() {
        let l1 = analysis(corpus::l1());
        assert_eq!(l1.prime_always_exists().unwrap(), AdmissiblePair::BOTTOM);
        let t1 = analysis(corpus::t1());
        assert_eq!(t1.prime_always_exists().unwrap(), AdmissiblePair::graded(set(&t1, &["w"])));
    }

    #[test]
    fn krull() {
        let l1 = analysis(corpus::l1());
        assert!(l1.krull_check(&on_loop(&l1, &[], "v", "1+x")).unwrap());
        let t1 = analysis(corpus::t1());
        assert!(!t1.krull_check(&on_loop(&t1, &["w"], "v", "1+x")).unwrap());
        assert!(t1.krull_check(&IdealRep::zero()).unwrap());
    }
}
