//! Two-sided ideals of `L_K(E)` as a graded part plus polynomial generators
//! on exitless cycles of the quotient graph.
//!
//! Containment is decided per cycle: a component `(c, p)` of `J` lies in `I`
//! when `c` has died into `H_I`, or when `I` keeps `c` alive with a component
//! `(c, q)` such that `q | p`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Check, Cycle, Graph, VertexSet};
use crate::lattice::{breaking_vertices, closed_form_meet, quotient, AdmissiblePair, PairLattice};
use crate::laurent::{FieldTag, LaurentPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IdealRep {
    graded: AdmissiblePair,
    components: BTreeMap<Cycle, LaurentPoly>,
}

impl IdealRep {
    /// Validates the pair and the components against `g`.
    pub fn make(
        g: &Graph,
        pair: AdmissiblePair,
        components: impl IntoIterator<Item = (Cycle, LaurentPoly)>,
    ) -> Result<IdealRep> {
        pair.validate(g)?;
        let components: Vec<(Cycle, LaurentPoly)> = components.into_iter().collect();
        if components.is_empty() {
            return Ok(IdealRep::graded(pair));
        }
        let exitless = quotient(g, &pair)?.exitless_cycles();
        let mut map = BTreeMap::new();
        let mut field: Option<FieldTag> = None;
        for (cycle, poly) in components {
            let shown = cycle.display(g).to_string();
            if !exitless.contains(&cycle) {
                return Err(Error::CycleNotExitless(shown));
            }
            if let Some((other, _)) = map.iter().find(|(c, _): &(&Cycle, _)| {
                !c.vertex_set().is_disjoint(cycle.vertex_set())
            }) {
                return Err(Error::CyclesNotDisjoint(other.display(g).to_string(), shown));
            }
            if poly.is_zero() || poly.shift() > 0 {
                return Err(Error::ZeroConstantTerm(poly.to_string()));
            }
            if !poly.is_component_canonical() {
                return Err(Error::NonCanonicalPolynomial(poly.to_string()));
            }
            match field {
                Some(f) if f != poly.field() => {
                    return Err(Error::FieldMismatch(f.to_string(), poly.field().to_string()))
                }
                _ => field = Some(poly.field()),
            }
            map.insert(cycle, poly);
        }
        Ok(IdealRep { graded: pair, components: map })
    }

    pub fn graded(pair: AdmissiblePair) -> IdealRep {
        IdealRep { graded: pair, components: BTreeMap::new() }
    }

    pub fn zero() -> IdealRep {
        IdealRep::graded(AdmissiblePair::BOTTOM)
    }

    pub fn whole(g: &Graph) -> IdealRep {
        IdealRep::graded(AdmissiblePair::top(g))
    }

    /// `gr(I)`, the largest graded ideal inside `I`.
    pub fn graded_part(&self) -> AdmissiblePair {
        self.graded
    }

    pub fn components(&self) -> &BTreeMap<Cycle, LaurentPoly> {
        &self.components
    }

    pub fn is_graded(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_graded() && self.graded == AdmissiblePair::BOTTOM
    }

    pub fn is_whole(&self, g: &Graph) -> bool {
        self.graded.is_top(g)
    }

    pub fn field(&self) -> Option<FieldTag> {
        self.components.values().next().map(LaurentPoly::field)
    }

    pub fn display<'a>(&'a self, g: &'a Graph) -> impl fmt::Display + 'a {
        DisplayIdeal { ideal: self, graph: g }
    }
}

struct DisplayIdeal<'a> {
    ideal: &'a IdealRep,
    graph: &'a Graph,
}

impl fmt::Display for DisplayIdeal<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let IdealRep { graded, components } = self.ideal;
        if graded.is_top(self.graph) {
            return f.write_str("L");
        }
        let mut parts = Vec::new();
        if *graded != AdmissiblePair::BOTTOM || components.is_empty() {
            parts.push(format!("I{}", graded.display(self.graph)));
        }
        for (c, p) in components {
            parts.push(format!("⟨{p} at {}⟩", c.display(self.graph)));
        }
        f.write_str(&parts.join(" + "))
    }
}

fn require_proper(g: &Graph, i: &IdealRep) -> Result<()> {
    if i.is_whole(g) {
        return Err(Error::WholeAlgebra);
    }
    Ok(())
}

/// `J ⊆ I`.
pub fn contains(_g: &Graph, i: &IdealRep, j: &IdealRep) -> Result<bool> {
    if !j.graded.leq(&i.graded) {
        return Ok(false);
    }
    for (c, p) in &j.components {
        if c.vertex_set().is_subset(i.graded.h) {
            continue;
        }
        match i.components.get(c) {
            Some(q) if q.divides(p)? => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

pub fn equal(g: &Graph, i: &IdealRep, j: &IdealRep) -> Result<bool> {
    Ok(contains(g, i, j)? && contains(g, j, i)?)
}

/// Intersection of a finite family; the empty family gives `L`.
///
/// The graded part is the meet of the graded parts. At an exitless cycle `c`
/// of the resulting quotient, the component is the lcm over members keeping
/// `c` alive, and is absent when one of those members has no component there.
pub fn intersect_all(g: &Graph, members: &[IdealRep]) -> Result<IdealRep> {
    let Some(first) = members.first() else {
        return Ok(IdealRep::whole(g));
    };
    let gr = members
        .iter()
        .skip(1)
        .fold(first.graded, |acc, m| closed_form_meet(g, &acc, &m.graded));
    if members.iter().all(IdealRep::is_graded) {
        return Ok(IdealRep::graded(gr));
    }
    let mut comps = Vec::new();
    'cycles: for c in quotient(g, &gr)?.exitless_cycles() {
        let vs = c.vertex_set();
        let mut acc: Option<LaurentPoly> = None;
        for m in members.iter().filter(|m| vs.is_disjoint(m.graded.h)) {
            let Some(p) = m.components.get(&c) else { continue 'cycles };
            acc = Some(match acc {
                None => p.clone(),
                Some(a) => a.lcm(p)?,
            });
        }
        match acc {
            Some(p) => comps.push((c, p)),
            None => return Err(Error::Internal("cycle alive in the meet but in no member".into())),
        }
    }
    IdealRep::make(g, gr, comps)
}

/// `I ∩ J` in the supported configurations: comparable ideals, both graded,
/// or equal graded parts.
pub fn intersect(g: &Graph, i: &IdealRep, j: &IdealRep) -> Result<IdealRep> {
    if contains(g, i, j)? {
        return Ok(j.clone());
    }
    if contains(g, j, i)? {
        return Ok(i.clone());
    }
    if (i.is_graded() && j.is_graded()) || i.graded == j.graded {
        return intersect_all(g, &[i.clone(), j.clone()]);
    }
    Err(Error::UnsupportedConfiguration(format!(
        "intersection of incomparable ideals {} and {} with distinct graded parts",
        i.display(g),
        j.display(g)
    )))
}

/// `I · J` in the supported configurations.
pub fn product(g: &Graph, i: &IdealRep, j: &IdealRep) -> Result<IdealRep> {
    if i.is_graded() && j.is_graded() {
        return Ok(IdealRep::graded(closed_form_meet(g, &i.graded, &j.graded)));
    }
    if i.graded == j.graded {
        let mut comps = Vec::new();
        for (c, p) in &i.components {
            if let Some(q) = j.components.get(c) {
                comps.push((c.clone(), p.mul(q)?));
            }
        }
        return IdealRep::make(g, i.graded, comps);
    }
    if i.is_graded() || j.is_graded() {
        if contains(g, i, j)? {
            return Ok(j.clone());
        }
        if contains(g, j, i)? {
            return Ok(i.clone());
        }
    }
    Err(Error::UnsupportedConfiguration(format!(
        "product of {} and {}",
        i.display(g),
        j.display(g)
    )))
}

pub fn power(g: &Graph, i: &IdealRep, n: u32) -> Result<IdealRep> {
    if n < 1 {
        return Err(Error::InvalidArgument("power exponent must be at least 1".into()));
    }
    let comps = i
        .components
        .iter()
        .map(|(c, p)| Ok((c.clone(), p.pow(n as i64)?)))
        .collect::<Result<Vec<_>>>()?;
    IdealRep::make(g, i.graded, comps)
}

/// `⋂ₙ Iⁿ`, which is `gr(I)`.
pub fn limit_power(_g: &Graph, i: &IdealRep) -> IdealRep {
    IdealRep::graded(i.graded)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NonPrimeReason {
    /// Two quotient vertices with no common lower bound.
    QuotientNotDownwardDirected(usize, usize),
    /// Graded ideals `A, B ⊄ I` with `A ∩ B ⊆ I`.
    LatticeMeetViolation(AdmissiblePair, AdmissiblePair),
    /// The component polynomial has this repeated irreducible factor.
    ReduciblePolynomial(LaurentPoly),
    /// Breaking vertices missing from `S`.
    SNotFull(VertexSet),
    /// Coprime nonunits `a, b` with `f = a · b`.
    ProperFactorizationWitness(LaurentPoly, LaurentPoly),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeWitness {
    Prime,
    NotPrime(NonPrimeReason),
}

impl PrimeWitness {
    pub fn is_prime(&self) -> bool {
        matches!(self, PrimeWitness::Prime)
    }

    pub fn reason(&self) -> Option<&NonPrimeReason> {
        match self {
            PrimeWitness::Prime => None,
            PrimeWitness::NotPrime(r) => Some(r),
        }
    }
}

/// Meet-primeness of lattice element `i`.
fn meet_prime(lattice: &PairLattice, i: usize) -> Option<(usize, usize)> {
    let n = lattice.len();
    for a in 0..n {
        if lattice.leq(a, i) {
            continue;
        }
        for b in a + 1..n {
            if !lattice.leq(b, i) && lattice.leq(lattice.meet(a, b), i) {
                return Some((a, b));
            }
        }
    }
    None
}

fn quotient_downward_directed(g: &Graph, pair: &AdmissiblePair) -> Result<Check<(usize, usize)>> {
    let q = quotient(g, pair)?;
    let all = q.graph.all();
    q.graph.downward_directed(all)
}

/// Primality of the graded ideal at lattice position `i`, with the
/// downward-directedness cross-check.
pub fn graded_prime(g: &Graph, lattice: &PairLattice, i: usize) -> Result<PrimeWitness> {
    let pair = lattice.get(i);
    if pair.is_top(g) {
        return Err(Error::WholeAlgebra);
    }
    let verdict = meet_prime(lattice, i);
    let directed = quotient_downward_directed(g, &pair)?.holds();
    if verdict.is_none() != directed {
        return Err(Error::Internal(format!(
            "meet-primeness ({}) disagrees with downward directedness ({directed}) at {}",
            verdict.is_none(),
            pair.display(g)
        )));
    }
    Ok(match verdict {
        None => PrimeWitness::Prime,
        Some((a, b)) => {
            PrimeWitness::NotPrime(NonPrimeReason::LatticeMeetViolation(lattice.get(a), lattice.get(b)))
        }
    })
}

/// Prime flags for every lattice element (`false` for the top).
pub fn graded_prime_flags(g: &Graph, lattice: &PairLattice) -> Result<Vec<bool>> {
    (0..lattice.len())
        .map(|i| {
            if i == lattice.top() {
                Ok(false)
            } else {
                graded_prime(g, lattice, i).map(|w| w.is_prime())
            }
        })
        .collect()
}

fn position(g: &Graph, lattice: &PairLattice, pair: &AdmissiblePair) -> Result<usize> {
    lattice
        .position(pair)
        .ok_or_else(|| Error::Internal(format!("{} missing from the lattice", pair.display(g))))
}

pub fn is_prime(g: &Graph, lattice: &PairLattice, i: &IdealRep) -> Result<PrimeWitness> {
    require_proper(g, i)?;
    if i.is_graded() {
        return graded_prime(g, lattice, position(g, lattice, &i.graded)?);
    }
    let AdmissiblePair { h, s } = i.graded;
    let b = breaking_vertices(g, h)?;
    if s != b {
        return Ok(PrimeWitness::NotPrime(NonPrimeReason::SNotFull(b.difference(s))));
    }
    if let Check::Fails((u, v)) = g.downward_directed(g.all().difference(h))? {
        return Ok(PrimeWitness::NotPrime(NonPrimeReason::QuotientNotDownwardDirected(u, v)));
    }
    if i.components.len() != 1 {
        return Err(Error::Internal(
            "downward-directed quotient with several exitless cycles".into(),
        ));
    }
    let f = i.components.values().next().unwrap();
    let factors = f.factor()?;
    Ok(match factors.as_slice() {
        [(_, 1)] => PrimeWitness::Prime,
        [(p, _)] => PrimeWitness::NotPrime(NonPrimeReason::ReduciblePolynomial(p.clone())),
        [(p, k), ..] => {
            let a = p.pow(*k as i64)?;
            let b = f.div_exact(&a)?.generator();
            PrimeWitness::NotPrime(NonPrimeReason::ProperFactorizationWitness(a, b))
        }
        [] => return Err(Error::Internal("component polynomial is a unit".into())),
    })
}

/// Maximality among all ideals.
///
/// A graded ideal is maximal when it is covered by `L` in the graded lattice
/// and its quotient graph has no exitless cycle. A non-graded ideal is maximal
/// when its graded part is covered by `L`, it has one component, and that
/// polynomial is irreducible.
pub fn is_maximal(g: &Graph, lattice: &PairLattice, i: &IdealRep) -> Result<bool> {
    require_proper(g, i)?;
    let pos = position(g, lattice, &i.graded)?;
    let covered = lattice.covered_by_top(pos);
    let q = quotient(g, &i.graded)?;
    if i.is_graded() {
        return Ok(covered && q.graph.condition_l().holds());
    }
    let verdict = covered
        && i.components.len() == 1
        && i.components.values().next().unwrap().is_irreducible()?;
    // the narrow criterion: the quotient is exactly the cycle
    let c = i.components.keys().next().unwrap();
    let narrow = i.components.len() == 1
        && q.original_vertices() == c.vertex_set()
        && q.graph.vertex_count() == c.len()
        && i.graded.s == breaking_vertices(g, i.graded.h)?
        && i.components.values().next().unwrap().is_irreducible()?;
    if narrow && !verdict {
        return Err(Error::Internal(format!("maximality criteria disagree on {}", i.display(g))));
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::lattice::enumerate_pairs;

    const Q: FieldTag = FieldTag::Rationals;

    fn poly(s: &str) -> LaurentPoly {
        LaurentPoly::parse(Q, s).unwrap()
    }

    fn loop_at(g: &Graph, v: &str) -> Cycle {
        Cycle::through(g, &[g.vertex(v).unwrap()]).unwrap()
    }

    fn toeplitz_ideal(g: &Graph, p: &str) -> IdealRep {
        let pair = AdmissiblePair::graded(g.vertex_set(&["w"]).unwrap());
        IdealRep::make(g, pair, [(loop_at(g, "v"), poly(p))]).unwrap()
    }

    #[test]
    fn make_validates() {
        let g = corpus::t1();
        let a = toeplitz_ideal(&g, "1+x");
        assert_eq!(a.graded_part().h, g.vertex_set(&["w"]).unwrap());
        let err = IdealRep::make(&g, AdmissiblePair::BOTTOM, [(loop_at(&g, "v"), poly("1+x"))]);
        assert!(matches!(err, Err(Error::CycleNotExitless(_))));
        let pair = AdmissiblePair::graded(g.vertex_set(&["w"]).unwrap());
        let c = loop_at(&g, "v");
        assert!(matches!(
            IdealRep::make(&g, pair, [(c.clone(), poly("x+x^2"))]),
            Err(Error::ZeroConstantTerm(_))
        ));
        assert!(matches!(
            IdealRep::make(&g, pair, [(c.clone(), poly("2+2x"))]),
            Err(Error::NonCanonicalPolynomial(_))
        ));
        assert!(matches!(
            IdealRep::make(&g, pair, [(c, poly("1"))]),
            Err(Error::NonCanonicalPolynomial(_))
        ));
        let l1 = corpus::l1();
        assert!(IdealRep::make(&l1, AdmissiblePair::BOTTOM, []).unwrap().is_zero());
    }

    #[test]
    fn toeplitz_intersection() {
        let g = corpus::t1();
        let a = toeplitz_ideal(&g, "1+x");
        let b = toeplitz_ideal(&g, "1+x^2");
        let i = intersect(&g, &a, &b).unwrap();
        assert_eq!(i, toeplitz_ideal(&g, "(1+x)(1+x^2)"));
        assert!(contains(&g, &a, &i).unwrap());
        assert!(contains(&g, &a, &IdealRep::graded(a.graded_part())).unwrap());
        assert_eq!(intersect(&g, &i, &i).unwrap(), i);
    }

    #[test]
    fn toeplitz_products_and_powers() {
        let g = corpus::t1();
        let a = toeplitz_ideal(&g, "1+x");
        let w = IdealRep::graded(a.graded_part());
        assert_eq!(product(&g, &a, &a).unwrap(), toeplitz_ideal(&g, "(1+x)^2"));
        assert_eq!(product(&g, &a, &w).unwrap(), w);
        assert_eq!(product(&g, &w, &w).unwrap(), w);
        assert_eq!(power(&g, &a, 3).unwrap(), toeplitz_ideal(&g, "(1+x)^3"));
        assert_eq!(power(&g, &w, 5).unwrap(), w);
        assert_eq!(limit_power(&g, &a), w);
        assert!(power(&g, &a, 0).is_err());
    }

    #[test]
    fn unsupported_configurations_are_reported() {
        let g = corpus::d2();
        let c1 = loop_at(&g, "v1");
        let c2 = loop_at(&g, "v2");
        let p1 = AdmissiblePair::graded(g.vertex_set(&["v2"]).unwrap());
        let p2 = AdmissiblePair::graded(g.vertex_set(&["v1"]).unwrap());
        let i = IdealRep::make(&g, p1, [(c1, poly("1+x"))]).unwrap();
        let j = IdealRep::make(&g, p2, [(c2, poly("1+x"))]).unwrap();
        assert!(matches!(intersect(&g, &i, &j), Err(Error::UnsupportedConfiguration(_))));
        assert!(matches!(product(&g, &i, &j), Err(Error::UnsupportedConfiguration(_))));
        let all = intersect_all(&g, &[i, j]).unwrap();
        assert_eq!(all.graded_part(), AdmissiblePair::BOTTOM);
        assert_eq!(all.components().len(), 2);
    }

    #[test]
    fn primality() {
        let l1 = corpus::l1();
        let lat = enumerate_pairs(&l1).unwrap();
        let c = loop_at(&l1, "v");
        let p = IdealRep::make(&l1, AdmissiblePair::BOTTOM, [(c.clone(), poly("1+x"))]).unwrap();
        assert!(is_prime(&l1, &lat, &p).unwrap().is_prime());
        let p2 = IdealRep::make(&l1, AdmissiblePair::BOTTOM, [(c, poly("(1+x)^2"))]).unwrap();
        assert!(matches!(
            is_prime(&l1, &lat, &p2).unwrap(),
            PrimeWitness::NotPrime(NonPrimeReason::ReduciblePolynomial(_))
        ));
        assert!(matches!(is_prime(&l1, &lat, &IdealRep::whole(&l1)), Err(Error::WholeAlgebra)));

        let d2 = corpus::d2();
        let lat = enumerate_pairs(&d2).unwrap();
        match is_prime(&d2, &lat, &IdealRep::zero()).unwrap() {
            PrimeWitness::NotPrime(NonPrimeReason::LatticeMeetViolation(a, b)) => {
                assert_eq!(closed_form_meet(&d2, &a, &b), AdmissiblePair::BOTTOM);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn maximality() {
        let g = corpus::t1();
        let lat = enumerate_pairs(&g).unwrap();
        let a = toeplitz_ideal(&g, "1+x");
        assert!(is_maximal(&g, &lat, &a).unwrap());
        assert!(!is_maximal(&g, &lat, &IdealRep::graded(a.graded_part())).unwrap());
        assert!(!is_maximal(&g, &lat, &toeplitz_ideal(&g, "(1+x)^2")).unwrap());

        let rr = corpus::rr();
        let lat = enumerate_pairs(&rr).unwrap();
        let m = IdealRep::graded(AdmissiblePair::graded(rr.vertex_set(&["r1"]).unwrap()));
        assert!(is_maximal(&rr, &lat, &m).unwrap());
        assert!(!is_maximal(&rr, &lat, &IdealRep::zero()).unwrap());
    }
}
