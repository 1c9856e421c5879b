//! Hereditary saturated sets, breaking vertices, the lattice of admissible
//! pairs and quotient graphs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph, Multiplicity, VertexClass, VertexSet};

pub fn is_hereditary(g: &Graph, h: VertexSet) -> bool {
    h.iter().all(|v| g.successors(v).is_subset(h))
}

/// Every regular vertex whose edges all land in `h` belongs to `h`.
pub fn is_saturated(g: &Graph, h: VertexSet) -> bool {
    (0..g.vertex_count()).all(|v| {
        h.contains(v)
            || g.classify(v) != VertexClass::Regular
            || !g.successors(v).is_subset(h)
    })
}

pub fn is_hereditary_saturated(g: &Graph, h: VertexSet) -> bool {
    g.is_subset_of_vertices(h) && is_hereditary(g, h) && is_saturated(g, h)
}

/// Least hereditary saturated superset of `x`.
pub fn hereditary_saturated_closure(g: &Graph, x: VertexSet) -> VertexSet {
    let mut h = x;
    loop {
        let mut next = h;
        for v in h.iter() {
            next = next.union(g.descendants(v));
        }
        for v in 0..g.vertex_count() {
            if !next.contains(v)
                && g.classify(v) == VertexClass::Regular
                && g.successors(v).is_subset(next)
            {
                next.insert(v);
            }
        }
        if next == h {
            return h;
        }
        h = next;
    }
}

/// All hereditary saturated subsets, sorted. Built as the closure system
/// generated by the closures of singletons.
pub fn enumerate_hs(g: &Graph) -> Vec<VertexSet> {
    let generators: Vec<VertexSet> = (0..g.vertex_count())
        .map(|v| hereditary_saturated_closure(g, VertexSet::singleton(v)))
        .collect();
    let mut found: std::collections::BTreeSet<VertexSet> = std::collections::BTreeSet::new();
    found.insert(VertexSet::EMPTY);
    let mut frontier = vec![VertexSet::EMPTY];
    while let Some(h) = frontier.pop() {
        for &gen in &generators {
            if gen.is_subset(h) {
                continue;
            }
            let next = hereditary_saturated_closure(g, h.union(gen));
            if found.insert(next) {
                frontier.push(next);
            }
        }
    }
    found.into_iter().collect()
}

fn breaking_unchecked(g: &Graph, h: VertexSet) -> VertexSet {
    let outside = g.all().difference(h);
    outside
        .iter()
        .filter(|&w| {
            g.classify(w) == VertexClass::InfiniteEmitter
                && g.multiplicity_into(w, outside).is_finite_nonzero()
        })
        .collect()
}

/// `B_H`: infinite emitters outside `h` with finitely many, but at least
/// one, edges into the complement of `h`.
pub fn breaking_vertices(g: &Graph, h: VertexSet) -> Result<VertexSet> {
    if !is_hereditary_saturated(g, h) {
        return Err(Error::NotHereditarySaturated(g.set_string(h)));
    }
    Ok(breaking_unchecked(g, h))
}

/// `(H, S)` with `H` hereditary saturated and `S ⊆ B_H`; names the graded
/// ideal `I(H, S)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissiblePair {
    pub h: VertexSet,
    pub s: VertexSet,
}

impl AdmissiblePair {
    pub const BOTTOM: AdmissiblePair = AdmissiblePair { h: VertexSet::EMPTY, s: VertexSet::EMPTY };

    pub fn new(g: &Graph, h: VertexSet, s: VertexSet) -> Result<AdmissiblePair> {
        let pair = AdmissiblePair { h, s };
        pair.validate(g)?;
        Ok(pair)
    }

    pub fn graded(h: VertexSet) -> AdmissiblePair {
        AdmissiblePair { h, s: VertexSet::EMPTY }
    }

    pub fn top(g: &Graph) -> AdmissiblePair {
        AdmissiblePair::graded(g.all())
    }

    pub fn is_top(&self, g: &Graph) -> bool {
        *self == AdmissiblePair::top(g)
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        let b = breaking_vertices(g, self.h)?;
        if !self.s.is_subset(b) {
            return Err(Error::InvalidPair(format!(
                "S = {} is not contained in B_H = {}",
                g.set_string(self.s),
                g.set_string(b)
            )));
        }
        Ok(())
    }

    /// `(H1,S1) ≤′ (H2,S2)` iff `H1 ⊆ H2` and `S1 ⊆ H2 ∪ S2`.
    pub fn leq(&self, other: &AdmissiblePair) -> bool {
        self.h.is_subset(other.h) && self.s.is_subset(other.h.union(other.s))
    }

    pub fn display<'a>(&'a self, g: &'a Graph) -> impl fmt::Display + 'a {
        DisplayPair { pair: self, graph: g }
    }
}

struct DisplayPair<'a> {
    pair: &'a AdmissiblePair,
    graph: &'a Graph,
}

impl fmt::Display for DisplayPair<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{})",
            self.graph.set_string(self.pair.h),
            self.graph.set_string(self.pair.s)
        )
    }
}

/// Meet by formula: `H = H1 ∩ H2`, `S = ((S1 ∪ H1) ∩ (S2 ∪ H2)) ∩ B_H`.
pub fn closed_form_meet(g: &Graph, a: &AdmissiblePair, b: &AdmissiblePair) -> AdmissiblePair {
    let h = a.h.intersection(b.h);
    let s = a.s.union(a.h).intersection(b.s.union(b.h)).intersection(breaking_unchecked(g, h));
    AdmissiblePair { h, s }
}

/// All admissible pairs of a graph with the order `≤′` and its meet and join
/// tables.
#[derive(Clone, Debug)]
pub struct PairLattice {
    elements: Vec<AdmissiblePair>,
    index: HashMap<AdmissiblePair, usize>,
    breaking: BTreeMap<VertexSet, VertexSet>,
    leq: Vec<bool>,
    meet: Vec<u32>,
    join: Vec<u32>,
}

fn subsets(b: VertexSet) -> impl Iterator<Item = VertexSet> {
    let bits = b.bits();
    let mut sub = 0u64;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = VertexSet::from_bits(sub);
        if sub == bits {
            done = true;
        } else {
            sub = (sub.wrapping_sub(bits)) & bits;
        }
        Some(out)
    })
}

/// Enumerates the admissible-pair lattice of `g`. Meets and joins are found by
/// search over the order; a missing bound is an internal inconsistency.
pub fn enumerate_pairs(g: &Graph) -> Result<PairLattice> {
    let mut elements = Vec::new();
    let mut breaking = BTreeMap::new();
    for h in enumerate_hs(g) {
        let b = breaking_unchecked(g, h);
        breaking.insert(h, b);
        for s in subsets(b) {
            elements.push(AdmissiblePair { h, s });
        }
    }
    elements.sort();
    let n = elements.len();
    let index = elements.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut leq = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            leq[i * n + j] = elements[i].leq(&elements[j]);
        }
    }
    // (|H|, |S|) strictly increases along ≤′, so it picks the extreme candidate
    let rank: Vec<(usize, usize)> = elements.iter().map(|p| (p.h.len(), p.s.len())).collect();
    let mut meet = vec![0u32; n * n];
    let mut join = vec![0u32; n * n];
    for i in 0..n {
        for j in i..n {
            let lower: Vec<usize> = (0..n).filter(|&k| leq[k * n + i] && leq[k * n + j]).collect();
            let m = *lower.iter().max_by_key(|&&k| rank[k]).ok_or_else(|| {
                Error::Internal(format!("no lower bound for elements {i} and {j}"))
            })?;
            if !lower.iter().all(|&k| leq[k * n + m]) {
                return Err(Error::Internal(format!(
                    "meet of {} and {} does not exist",
                    elements[i].display(g),
                    elements[j].display(g)
                )));
            }
            let upper: Vec<usize> = (0..n).filter(|&k| leq[i * n + k] && leq[j * n + k]).collect();
            let u = *upper.iter().min_by_key(|&&k| rank[k]).ok_or_else(|| {
                Error::Internal(format!("no upper bound for elements {i} and {j}"))
            })?;
            if !upper.iter().all(|&k| leq[u * n + k]) {
                return Err(Error::Internal(format!(
                    "join of {} and {} does not exist",
                    elements[i].display(g),
                    elements[j].display(g)
                )));
            }
            meet[i * n + j] = m as u32;
            meet[j * n + i] = m as u32;
            join[i * n + j] = u as u32;
            join[j * n + i] = u as u32;
        }
    }
    Ok(PairLattice { elements, index, breaking, leq, meet, join })
}

impl PairLattice {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[AdmissiblePair] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> AdmissiblePair {
        self.elements[i]
    }

    pub fn position(&self, p: &AdmissiblePair) -> Option<usize> {
        self.index.get(p).copied()
    }

    fn require(&self, p: &AdmissiblePair) -> Result<usize> {
        self.position(p)
            .ok_or_else(|| Error::InvalidPair("pair is not an element of the lattice".into()))
    }

    /// `B_H` for a hereditary saturated `h` of this graph.
    pub fn breaking(&self, h: VertexSet) -> Option<VertexSet> {
        self.breaking.get(&h).copied()
    }

    pub fn hereditary_saturated_sets(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.breaking.keys().copied()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.len() + j]
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j] as usize
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j] as usize
    }

    pub fn pair_meet(&self, a: &AdmissiblePair, b: &AdmissiblePair) -> Result<AdmissiblePair> {
        Ok(self.elements[self.meet(self.require(a)?, self.require(b)?)])
    }

    pub fn pair_join(&self, a: &AdmissiblePair, b: &AdmissiblePair) -> Result<AdmissiblePair> {
        Ok(self.elements[self.join(self.require(a)?, self.require(b)?)])
    }

    /// Meet of a family; the top element for an empty family.
    pub fn meet_all(&self, items: impl IntoIterator<Item = usize>) -> usize {
        items.into_iter().fold(self.top(), |acc, i| self.meet(acc, i))
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    /// Elements strictly above `i` with nothing in between.
    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        let above: Vec<usize> = (0..self.len()).filter(|&j| j != i && self.leq(i, j)).collect();
        above
            .iter()
            .copied()
            .filter(|&j| !above.iter().any(|&k| k != j && self.leq(k, j)))
            .collect()
    }

    /// Strictly below top with nothing in between.
    pub fn covered_by_top(&self, i: usize) -> bool {
        i != self.top() && self.upper_covers(i) == [self.top()]
    }

    pub fn is_chain(&self) -> bool {
        (0..self.len()).all(|i| (i..self.len()).all(|j| self.leq(i, j) || self.leq(j, i)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Provenance {
    Original(usize),
    Primed(usize),
}

/// `E \ (H, S)`: vertices `(E⁰ \ H) ∪ {v′ : v ∈ B_H \ S}`; edges ending
/// outside `H`, plus copies into `v′` of every bundle ending at
/// `v ∈ B_H \ S`.
#[derive(Clone, Debug)]
pub struct QuotientGraph {
    pub graph: Graph,
    pub provenance: Vec<Provenance>,
    to_quotient: Vec<Option<usize>>,
}

impl QuotientGraph {
    pub fn of_original(&self, v: usize) -> Option<usize> {
        self.to_quotient.get(v).copied().flatten()
    }

    /// Maps a cycle of the quotient back to original vertex indices.
    pub fn lift_cycle(&self, c: &Cycle) -> Cycle {
        c.map_vertices(|v| match self.provenance[v] {
            Provenance::Original(o) => o,
            Provenance::Primed(_) => unreachable!("primed vertices are sinks"),
        })
    }

    /// The quotient's copy of an original cycle, if all its vertices survive.
    pub fn lower_cycle(&self, c: &Cycle) -> Option<Cycle> {
        if c.vertices().any(|v| self.of_original(v).is_none()) {
            return None;
        }
        Some(c.map_vertices(|v| self.of_original(v).unwrap()))
    }

    /// Exitless cycles of the quotient, in original vertex indices.
    pub fn exitless_cycles(&self) -> Vec<Cycle> {
        let mut cycles: Vec<Cycle> =
            self.graph.exitless_cycles().iter().map(|c| self.lift_cycle(c)).collect();
        cycles.sort();
        cycles
    }

    pub fn original_vertices(&self) -> VertexSet {
        self.provenance
            .iter()
            .filter_map(|p| match p {
                Provenance::Original(o) => Some(*o),
                Provenance::Primed(_) => None,
            })
            .collect()
    }
}

pub fn quotient(g: &Graph, pair: &AdmissiblePair) -> Result<QuotientGraph> {
    pair.validate(g)?;
    let b = breaking_unchecked(g, pair.h);
    let primed = b.difference(pair.s);
    let kept = g.all().difference(pair.h);

    let mut taken: std::collections::BTreeSet<String> = g.names().iter().cloned().collect();
    let mut labelled: Vec<(String, Provenance)> =
        kept.iter().map(|v| (g.name(v).to_string(), Provenance::Original(v))).collect();
    for v in primed.iter() {
        let mut name = format!("{}'", g.name(v));
        while taken.contains(&name) {
            name.push('\'');
        }
        taken.insert(name.clone());
        labelled.push((name, Provenance::Primed(v)));
    }
    labelled.sort();
    let names: Vec<String> = labelled.iter().map(|(n, _)| n.clone()).collect();
    let provenance: Vec<Provenance> = labelled.iter().map(|(_, p)| *p).collect();
    let mut to_quotient = vec![None; g.vertex_count()];
    let mut primed_at = vec![None; g.vertex_count()];
    for (i, p) in provenance.iter().enumerate() {
        match *p {
            Provenance::Original(o) => to_quotient[o] = Some(i),
            Provenance::Primed(o) => primed_at[o] = Some(i),
        }
    }

    let mut bundles: BTreeMap<(usize, usize), Multiplicity> = BTreeMap::new();
    for (&(s, t), &m) in g.bundles() {
        if pair.h.contains(t) {
            continue;
        }
        let qs = to_quotient[s].expect("hereditary H keeps sources of surviving edges");
        bundles.insert((qs, to_quotient[t].unwrap()), m);
        if let Some(tp) = primed_at[t] {
            bundles.insert((qs, tp), m);
        }
    }
    Ok(QuotientGraph { graph: Graph::from_parts(names, bundles), provenance, to_quotient })
}

/// Least admissible pair whose ideal contains the vertices `x` and the
/// elements `v^H` for `v ∈ t`.
///
/// An infinite emitter of `t` all of whose edges end in `H` is promoted into
/// `H`, since then `v^H = v`.
pub fn normalize_generators(g: &Graph, x: VertexSet, t: VertexSet) -> Result<AdmissiblePair> {
    if !g.is_subset_of_vertices(x.union(t)) {
        return Err(Error::NotASubset);
    }
    if let Some(v) = t.iter().find(|&v| g.classify(v) != VertexClass::InfiniteEmitter) {
        return Err(Error::InvalidArgument(format!("{} is not an infinite emitter", g.name(v))));
    }
    let mut h = x;
    loop {
        h = hereditary_saturated_closure(g, h);
        let outside = g.all().difference(h);
        let promoted: VertexSet = t
            .difference(h)
            .iter()
            .filter(|&v| g.multiplicity_into(v, outside).is_zero())
            .collect();
        if promoted.is_empty() {
            break;
        }
        h = h.union(promoted);
    }
    let s = t.intersection(breaking_unchecked(g, h)).difference(h);
    Ok(AdmissiblePair { h, s })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn set(g: &Graph, names: &[&str]) -> VertexSet {
        g.vertex_set(names).unwrap()
    }

    fn pair(g: &Graph, h: &[&str], s: &[&str]) -> AdmissiblePair {
        AdmissiblePair::new(g, set(g, h), set(g, s)).unwrap()
    }

    #[test]
    fn closure_examples() {
        let t1 = corpus::t1();
        assert_eq!(hereditary_saturated_closure(&t1, set(&t1, &["w"])), set(&t1, &["w"]));
        let a3 = corpus::a3();
        assert_eq!(hereditary_saturated_closure(&a3, set(&a3, &["w"])), a3.all());
        assert_eq!(hereditary_saturated_closure(&a3, VertexSet::EMPTY), VertexSet::EMPTY);
    }

    #[test]
    fn enumerate_hs_examples() {
        let t1 = corpus::t1();
        assert_eq!(
            enumerate_hs(&t1),
            [VertexSet::EMPTY, set(&t1, &["w"]), t1.all()]
        );
        let c2 = corpus::c2();
        assert_eq!(enumerate_hs(&c2), [VertexSet::EMPTY, set(&c2, &["v1"]), c2.all()]);
        let l1 = corpus::l1();
        assert_eq!(enumerate_hs(&l1), [VertexSet::EMPTY, l1.all()]);
    }

    #[test]
    fn breaking_vertex_examples() {
        let b1 = corpus::b1();
        assert_eq!(breaking_vertices(&b1, set(&b1, &["a"])).unwrap(), set(&b1, &["u"]));
        assert_eq!(breaking_vertices(&b1, set(&b1, &["b"])).unwrap(), VertexSet::EMPTY);
        let t1 = corpus::t1();
        for h in enumerate_hs(&t1) {
            assert!(breaking_vertices(&t1, h).unwrap().is_empty());
        }
        // {v} is not hereditary in T1
        assert!(matches!(
            breaking_vertices(&t1, set(&t1, &["v"])),
            Err(Error::NotHereditarySaturated(_))
        ));
    }

    #[test]
    fn enumerate_pairs_examples() {
        let b1 = corpus::b1();
        let lat = enumerate_pairs(&b1).unwrap();
        let expected = vec![
            pair(&b1, &[], &[]),
            pair(&b1, &["a"], &[]),
            pair(&b1, &["b"], &[]),
            pair(&b1, &["a"], &["u"]),
            pair(&b1, &["a", "b"], &[]),
            AdmissiblePair::top(&b1),
        ];
        let mut sorted = expected.clone();
        sorted.sort();
        assert_eq!(lat.elements(), sorted.as_slice());

        let t1 = enumerate_pairs(&corpus::t1()).unwrap();
        assert_eq!(t1.len(), 3);
        assert!(t1.is_chain());
        assert_eq!(enumerate_pairs(&corpus::l1()).unwrap().len(), 2);
    }

    #[test]
    fn meet_and_join_examples() {
        let b1 = corpus::b1();
        let lat = enumerate_pairs(&b1).unwrap();
        let m = lat
            .pair_meet(&pair(&b1, &["a"], &["u"]), &pair(&b1, &["a", "b"], &[]))
            .unwrap();
        assert_eq!(m, pair(&b1, &["a"], &[]));
        let j = lat.pair_join(&pair(&b1, &["a"], &[]), &pair(&b1, &["b"], &[])).unwrap();
        assert_eq!(j, pair(&b1, &["a", "b"], &[]));

        let t1 = corpus::t1();
        let lat = enumerate_pairs(&t1).unwrap();
        assert_eq!(
            lat.pair_meet(&pair(&t1, &["w"], &[]), &AdmissiblePair::BOTTOM).unwrap(),
            AdmissiblePair::BOTTOM
        );
    }

    #[test]
    fn closed_form_meet_matches_b1_search() {
        let b1 = corpus::b1();
        let lat = enumerate_pairs(&b1).unwrap();
        for a in lat.elements() {
            for b in lat.elements() {
                assert_eq!(closed_form_meet(&b1, a, b), lat.pair_meet(a, b).unwrap());
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let t1 = corpus::t1();
        let q = quotient(&t1, &pair(&t1, &["w"], &[])).unwrap();
        assert_eq!(q.graph, corpus::l1());

        let b1 = corpus::b1();
        let q = quotient(&b1, &pair(&b1, &["a"], &[])).unwrap();
        assert_eq!(q.graph.names(), ["b", "u", "u'"]);
        let u = q.graph.vertex("u").unwrap();
        let b = q.graph.vertex("b").unwrap();
        let up = q.graph.vertex("u'").unwrap();
        assert_eq!(q.graph.bundles().len(), 1);
        assert_eq!(q.graph.multiplicity(u, b), Multiplicity::ONE);
        assert_eq!(q.graph.classify(up), VertexClass::Sink);
        assert_eq!(q.graph.predecessors(up), &[] as &[usize]);

        let q = quotient(&b1, &AdmissiblePair::BOTTOM).unwrap();
        assert_eq!(q.graph, b1);

        assert!(quotient(&b1, &AdmissiblePair { h: set(&b1, &["b"]), s: set(&b1, &["u"]) }).is_err());
    }

    #[test]
    fn quotient_duplicates_bundles_into_primed_vertices() {
        // x -> u (mult 2), u -> a (ω), u -> u (1): with H = {a}, u breaks and x
        // gets a second bundle into u′.
        let g = Graph::new(
            &["a", "u", "x"],
            &[
                ("x", "u", Multiplicity::Finite(2)),
                ("u", "a", Multiplicity::Omega),
                ("u", "u", Multiplicity::ONE),
            ],
        )
        .unwrap();
        let q = quotient(&g, &pair(&g, &["a"], &[])).unwrap();
        let x = q.graph.vertex("x").unwrap();
        let u = q.graph.vertex("u").unwrap();
        let up = q.graph.vertex("u'").unwrap();
        assert_eq!(q.graph.multiplicity(x, up), Multiplicity::Finite(2));
        assert_eq!(q.graph.multiplicity(u, up), Multiplicity::ONE);
        assert_eq!(q.graph.multiplicity(u, u), Multiplicity::ONE);
        let q = quotient(&g, &pair(&g, &["a"], &["u"])).unwrap();
        assert_eq!(q.graph.vertex_count(), 2);
    }

    #[test]
    fn normalize_generators_examples() {
        let b1 = corpus::b1();
        assert_eq!(
            normalize_generators(&b1, set(&b1, &["a"]), set(&b1, &["u"])).unwrap(),
            pair(&b1, &["a"], &["u"])
        );
        assert_eq!(
            normalize_generators(&b1, set(&b1, &["a", "b"]), set(&b1, &["u"])).unwrap(),
            AdmissiblePair::top(&b1)
        );
        assert_eq!(
            normalize_generators(&b1, VertexSet::EMPTY, VertexSet::EMPTY).unwrap(),
            AdmissiblePair::BOTTOM
        );
        assert!(normalize_generators(&b1, VertexSet::EMPTY, set(&b1, &["a"])).is_err());
    }

    #[test]
    fn subsets_enumerates_powerset() {
        let b = VertexSet::from_iter([1, 3, 4]);
        let all: Vec<VertexSet> = subsets(b).collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|s| s.is_subset(b)));
        assert_eq!(subsets(VertexSet::EMPTY).count(), 1);
    }
}
