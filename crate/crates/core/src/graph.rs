//! Finitely presented directed multigraphs and the path, cycle and
//! condition-(L)/(K) decision procedures on them.
//!
//! Parallel edges are stored as bundles `(source, target) -> multiplicity`,
//! where the multiplicity may be [`Multiplicity::Omega`] for an infinite
//! bundle. Vertices are kept in lexicographic order of their identifiers and
//! addressed by index everywhere downstream, so index order is name order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex sets are 64-bit masks.
pub const MAX_VERTICES: usize = 64;

/// Number of parallel edges in a bundle: a finite count or ω.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Multiplicity {
    Finite(u64),
    Omega,
}

impl Multiplicity {
    pub const ZERO: Multiplicity = Multiplicity::Finite(0);
    pub const ONE: Multiplicity = Multiplicity::Finite(1);

    pub fn is_zero(self) -> bool {
        self == Multiplicity::ZERO
    }

    pub fn is_omega(self) -> bool {
        self == Multiplicity::Omega
    }

    pub fn is_finite_nonzero(self) -> bool {
        matches!(self, Multiplicity::Finite(n) if n > 0)
    }
}

impl Add for Multiplicity {
    type Output = Multiplicity;

    fn add(self, rhs: Multiplicity) -> Multiplicity {
        match (self, rhs) {
            (Multiplicity::Finite(a), Multiplicity::Finite(b)) => match a.checked_add(b) {
                Some(n) => Multiplicity::Finite(n),
                None => Multiplicity::Omega,
            },
            _ => Multiplicity::Omega,
        }
    }
}

impl std::iter::Sum for Multiplicity {
    fn sum<I: Iterator<Item = Multiplicity>>(iter: I) -> Multiplicity {
        iter.fold(Multiplicity::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(n) => write!(f, "{n}"),
            Multiplicity::Omega => f.write_str("ω"),
        }
    }
}

/// A set of vertex indices of one graph.
///
/// Ordered by size first, then lexicographically by the ascending index
/// sequence, which is the enumeration order used for every sorted output.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexClass {
    Sink,
    Regular,
    InfiniteEmitter,
}

/// One edge of a bundle: the `index`-th parallel edge from `source` to `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub index: u64,
}

/// A vertex-simple closed path, stored in canonical rotation (starting at its
/// least vertex).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle {
    edges: Vec<Edge>,
}

impl Cycle {
    /// Builds the cycle through `vertices` (in path order) using edge index 0
    /// of each bundle. Fails if a bundle is missing or a vertex repeats.
    pub fn through(graph: &Graph, vertices: &[usize]) -> Result<Cycle> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument("a cycle needs at least one vertex".into()));
        }
        let set: VertexSet = vertices.iter().copied().collect();
        if set.len() != vertices.len() {
            return Err(Error::InvalidArgument("cycle repeats a vertex".into()));
        }
        let n = vertices.len();
        let mut edges = Vec::with_capacity(n);
        for i in 0..n {
            let (s, t) = (vertices[i], vertices[(i + 1) % n]);
            if graph.multiplicity(s, t).is_zero() {
                return Err(Error::InvalidArgument(format!(
                    "no edge {} -> {}",
                    graph.name(s),
                    graph.name(t)
                )));
            }
            edges.push(Edge { source: s, target: t, index: 0 });
        }
        Ok(Cycle::from_edges(edges))
    }

    fn from_edges(mut edges: Vec<Edge>) -> Cycle {
        let start = edges
            .iter()
            .enumerate()
            .min_by_key(|(_, e)| e.source)
            .map(|(i, _)| i)
            .unwrap_or(0);
        edges.rotate_left(start);
        Cycle { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().map(|e| e.source)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn base(&self) -> usize {
        self.edges[0].source
    }

    /// Relabels vertices through an order-preserving map.
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> Cycle {
        Cycle::from_edges(
            self.edges
                .iter()
                .map(|e| Edge { source: f(e.source), target: f(e.target), index: e.index })
                .collect(),
        )
    }

    pub fn display<'a>(&'a self, graph: &'a Graph) -> impl fmt::Display + 'a {
        DisplayCycle { cycle: self, graph }
    }
}

struct DisplayCycle<'a> {
    cycle: &'a Cycle,
    graph: &'a Graph,
}

impl fmt::Display for DisplayCycle<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.cycle.vertices().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.graph.name(v))?;
        }
        f.write_str(")")
    }
}

/// Outcome of a yes/no graph property, carrying a witness when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check<W> {
    Holds,
    Fails(W),
}

impl<W> Check<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Check::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Check::Holds => None,
            Check::Fails(w) => Some(w),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
    bundles: BTreeMap<(usize, usize), Multiplicity>,
    out: Vec<Vec<(usize, Multiplicity)>>,
    inc: Vec<Vec<usize>>,
}

/// Checks the graph invariants on raw input: unique vertex ids, declared
/// endpoints, no zero-multiplicity bundles.
pub fn validate<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, Multiplicity)]) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for v in vertices {
        if !seen.insert(v.as_ref()) {
            return Err(Error::DuplicateVertex(v.as_ref().to_string()));
        }
    }
    if seen.len() > MAX_VERTICES {
        return Err(Error::TooManyVertices(seen.len()));
    }
    for (s, t, m) in edges {
        for end in [s, t] {
            if !seen.contains(end.as_ref()) {
                return Err(Error::UndeclaredEndpoint(end.as_ref().to_string()));
            }
        }
        if m.is_zero() {
            return Err(Error::ZeroMultiplicity(s.as_ref().to_string(), t.as_ref().to_string()));
        }
    }
    Ok(())
}

impl Graph {
    /// Builds a validated graph. Repeated `(source, target)` entries are summed.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S, Multiplicity)]) -> Result<Graph> {
        validate(vertices, edges)?;
        let mut names: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        names.sort();
        let index: BTreeMap<String, usize> =
            names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        let mut bundles: BTreeMap<(usize, usize), Multiplicity> = BTreeMap::new();
        for (s, t, m) in edges {
            let key = (index[s.as_ref()], index[t.as_ref()]);
            let entry = bundles.entry(key).or_insert(Multiplicity::ZERO);
            *entry = *entry + *m;
        }
        Ok(Graph::from_parts(names, bundles))
    }

    pub(crate) fn from_parts(
        names: Vec<String>,
        bundles: BTreeMap<(usize, usize), Multiplicity>,
    ) -> Graph {
        let index = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        let mut out = vec![Vec::new(); names.len()];
        let mut inc = vec![Vec::new(); names.len()];
        for (&(s, t), &m) in &bundles {
            out[s].push((t, m));
            inc[t].push(s);
        }
        Graph { names, index, bundles, out, inc }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.names.len())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn vertex_set<S: AsRef<str>>(&self, names: &[S]) -> Result<VertexSet> {
        names.iter().map(|n| self.vertex(n.as_ref())).collect()
    }

    pub fn bundles(&self) -> &BTreeMap<(usize, usize), Multiplicity> {
        &self.bundles
    }

    pub fn out_bundles(&self, v: usize) -> &[(usize, Multiplicity)] {
        &self.out[v]
    }

    pub fn predecessors(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn multiplicity(&self, s: usize, t: usize) -> Multiplicity {
        self.bundles.get(&(s, t)).copied().unwrap_or(Multiplicity::ZERO)
    }

    pub fn out_multiplicity(&self, v: usize) -> Multiplicity {
        self.out[v].iter().map(|&(_, m)| m).sum()
    }

    /// Total multiplicity of edges from `v` into `targets`.
    pub fn multiplicity_into(&self, v: usize, targets: VertexSet) -> Multiplicity {
        self.out[v]
            .iter()
            .filter(|(t, _)| targets.contains(*t))
            .map(|&(_, m)| m)
            .sum()
    }

    pub fn successors(&self, v: usize) -> VertexSet {
        self.out[v].iter().map(|&(t, _)| t).collect()
    }

    pub fn is_subset_of_vertices(&self, d: VertexSet) -> bool {
        d.is_subset(self.all())
    }

    pub fn classify(&self, v: usize) -> VertexClass {
        match self.out_multiplicity(v) {
            Multiplicity::Omega => VertexClass::InfiniteEmitter,
            m if m.is_zero() => VertexClass::Sink,
            _ => VertexClass::Regular,
        }
    }

    pub fn classify_named(&self, name: &str) -> Result<VertexClass> {
        Ok(self.classify(self.vertex(name)?))
    }

    pub fn sinks(&self) -> VertexSet {
        (0..self.vertex_count()).filter(|&v| self.out[v].is_empty()).collect()
    }

    /// Vertices reachable from `v` (including `v`) by paths whose vertices
    /// all lie in `within`.
    pub fn reach_within(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for &(t, _) in &self.out[x] {
                if within.contains(t) && !seen.contains(t) {
                    seen.insert(t);
                    stack.push(t);
                }
            }
        }
        seen
    }

    pub fn descendants(&self, v: usize) -> VertexSet {
        self.reach_within(v, self.all())
    }

    /// Vertices `u` with `u ≥ v`, including `v`.
    pub fn ancestors(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            for &p in &self.inc[x] {
                if !seen.contains(p) {
                    seen.insert(p);
                    stack.push(p);
                }
            }
        }
        seen
    }

    /// `u ≥ v`: there is a path (possibly of length 0) from `u` to `v`.
    pub fn reaches(&self, u: usize, v: usize) -> bool {
        self.descendants(u).contains(v)
    }

    pub fn reaches_named(&self, u: &str, v: &str) -> Result<bool> {
        Ok(self.reaches(self.vertex(u)?, self.vertex(v)?))
    }

    /// Whether every pair of `d` has a common lower bound in `d`, reachable by
    /// paths inside `d`. Fails with the first offending pair.
    pub fn downward_directed(&self, d: VertexSet) -> Result<Check<(usize, usize)>> {
        if !self.is_subset_of_vertices(d) {
            return Err(Error::NotASubset);
        }
        let members: Vec<usize> = d.iter().collect();
        let below: Vec<VertexSet> = members.iter().map(|&v| self.reach_within(v, d)).collect();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                if below[i].is_disjoint(below[j]) {
                    return Ok(Check::Fails((members[i], members[j])));
                }
            }
        }
        Ok(Check::Holds)
    }

    /// Cycles all of whose vertices have total out-multiplicity exactly one,
    /// sorted by canonical rotation.
    pub fn exitless_cycles(&self) -> Vec<Cycle> {
        let n = self.vertex_count();
        let next: Vec<Option<usize>> = (0..n)
            .map(|v| match self.out[v].as_slice() {
                [(t, Multiplicity::Finite(1))] => Some(*t),
                _ => None,
            })
            .collect();
        // 0 = unvisited, 1 = on current walk, 2 = done
        let mut state = vec![0u8; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if state[start] != 0 {
                continue;
            }
            let mut walk = Vec::new();
            let mut x = start;
            loop {
                if state[x] == 1 {
                    let pos = walk.iter().position(|&w| w == x).unwrap();
                    let edges = walk[pos..]
                        .iter()
                        .map(|&s| Edge { source: s, target: next[s].unwrap(), index: 0 })
                        .collect();
                    cycles.push(Cycle::from_edges(edges));
                    break;
                }
                if state[x] == 2 {
                    break;
                }
                state[x] = 1;
                walk.push(x);
                match next[x] {
                    Some(t) => x = t,
                    None => break,
                }
            }
            for w in walk {
                state[w] = 2;
            }
        }
        cycles.sort();
        cycles
    }

    /// Condition (L): every cycle has an exit.
    pub fn condition_l(&self) -> Check<Cycle> {
        match self.exitless_cycles().into_iter().next() {
            None => Check::Holds,
            Some(c) => Check::Fails(c),
        }
    }

    /// Number of distinct closed simple paths based at `v` (paths returning to
    /// `v` without passing through it in between), saturated at `cap`.
    ///
    /// Parallel edges count separately. Paths may revisit other vertices; as
    /// soon as a revisit happens on a branch that can still return to `v` the
    /// count is unbounded and `cap` is returned.
    pub fn simple_closed_path_count(&self, v: usize, cap: u64) -> Result<u64> {
        if v >= self.vertex_count() {
            return Err(Error::UnknownVertex(format!("#{v}")));
        }
        if cap < 2 {
            return Err(Error::InvalidArgument("cap must be at least 2".into()));
        }
        // vertices other than v that reach v without passing through v
        let mut returns = VertexSet::EMPTY;
        let mut stack: Vec<usize> = self.inc[v].iter().copied().filter(|&p| p != v).collect();
        for &p in &stack {
            returns.insert(p);
        }
        while let Some(x) = stack.pop() {
            for &p in &self.inc[x] {
                if p != v && !returns.contains(p) {
                    returns.insert(p);
                    stack.push(p);
                }
            }
        }
        let mut search = ClosedPathSearch { graph: self, base: v, returns, cap };
        Ok(search.count_from(v, VertexSet::EMPTY))
    }

    /// Condition (K): no vertex is the base of exactly one simple closed path.
    pub fn condition_k(&self) -> Check<usize> {
        for v in 0..self.vertex_count() {
            if self.simple_closed_path_count(v, 2).expect("valid vertex and cap") == 1 {
                return Check::Fails(v);
            }
        }
        Check::Holds
    }

    pub fn is_acyclic(&self) -> bool {
        (0..self.vertex_count()).all(|v| {
            self.out[v]
                .iter()
                .all(|&(t, _)| !self.descendants(t).contains(v))
        })
    }

    pub fn set_string(&self, s: VertexSet) -> String {
        if s.is_empty() {
            return "∅".to_string();
        }
        let parts: Vec<&str> = s.iter().map(|v| self.name(v)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn set_names(&self, s: VertexSet) -> Vec<String> {
        s.iter().map(|v| self.name(v).to_string()).collect()
    }
}

struct ClosedPathSearch<'a> {
    graph: &'a Graph,
    base: usize,
    returns: VertexSet,
    cap: u64,
}

impl ClosedPathSearch<'_> {
    fn scale(&self, m: Multiplicity, paths: u64) -> u64 {
        match m {
            _ if paths == 0 => 0,
            Multiplicity::Omega => self.cap,
            Multiplicity::Finite(k) => k.saturating_mul(paths).min(self.cap),
        }
    }

    fn count_from(&mut self, x: usize, on_path: VertexSet) -> u64 {
        let mut total = 0u64;
        for &(t, m) in self.graph.out_bundles(x) {
            let paths = if t == self.base {
                1
            } else if !self.returns.contains(t) {
                0
            } else if on_path.contains(t) {
                self.cap
            } else {
                self.count_from(t, on_path.with(t))
            };
            total = total.saturating_add(self.scale(m, paths)).min(self.cap);
            if total >= self.cap {
                break;
            }
        }
        total
    }
}
