//! Defining graphs: generalized theta graphs and cycles of them.
//!
//! A generalized theta graph `Θ(n_1, …, n_k)` is two hub vertices joined by
//! `k` branches, branch `b` subdivided by `n_b` extra vertices. A
//! [`ThetaCycle`] glues `N ≥ 3` of them hub to hub around a ring; theta `i`
//! (1-based) sits between hubs `v_i` and `v_{i+1 mod N}`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = Ratio<i64>;

/// A generalized theta graph, identified by its sorted branch subdivision counts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneralizedTheta {
    branches: Vec<u32>,
}

impl GeneralizedTheta {
    /// Builds a theta graph, sorting the branch list. Fails on an empty list.
    pub fn new(mut branches: Vec<u32>) -> Result<Self, GraphError> {
        if branches.is_empty() {
            return Err(GraphError::EmptyTheta);
        }
        branches.sort_unstable();
        Ok(Self { branches })
    }

    pub fn branches(&self) -> &[u32] {
        &self.branches
    }

    pub fn branch_count(&self) -> usize {
        self.branches.len()
    }

    /// Reflection edge count of the branch orbifold for each branch (`n + 2`).
    pub fn reflection_edges(&self) -> impl Iterator<Item = u64> + '_ {
        self.branches.iter().map(|&n| u64::from(n) + 2)
    }
}

impl fmt::Display for GeneralizedTheta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Θ(")?;
        for (idx, n) in self.branches.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, ")")
    }
}

/// Per-branch Euler characteristic entries `(1 - n_b) / 4`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EulerCharVector(pub Vec<Rational>);

impl EulerCharVector {
    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn euler_char_vector(theta: &GeneralizedTheta) -> EulerCharVector {
    EulerCharVector(
        theta
            .branches
            .iter()
            .map(|&n| Rational::new(1 - i64::from(n), 4))
            .collect(),
    )
}

/// Finds the normalized coprime pair `(K, L)`, both positive, with `K·u = L·w`
/// entrywise.
///
/// Vectors of different lengths are never commensurable. Two all-zero vectors
/// give `(1, 1)`. A negative entry ratio has no positive solution and yields
/// `None`.
pub fn vectors_commensurable(u: &EulerCharVector, w: &EulerCharVector) -> Option<(u64, u64)> {
    if u.len() != w.len() || u.is_empty() {
        return None;
    }
    let zero = Rational::from_integer(0);
    // ratio = L / K = u_b / w_b for every nonzero pair
    let mut ratio: Option<Rational> = None;
    for (a, b) in u.0.iter().zip(&w.0) {
        match (*a == zero, *b == zero) {
            (true, true) => continue,
            (true, false) | (false, true) => return None,
            (false, false) => {
                let r = a / b;
                match ratio {
                    None => ratio = Some(r),
                    Some(prev) if prev != r => return None,
                    Some(_) => {}
                }
            }
        }
    }
    match ratio {
        None => Some((1, 1)),
        Some(r) if r > zero => {
            // K·u = L·w  ⇔  u/w = L/K
            let l = *r.numer();
            let k = *r.denom();
            debug_assert_eq!(l.gcd(&k), 1);
            Some((k as u64, l as u64))
        }
        Some(_) => None,
    }
}

/// A cycle of `N ≥ 3` generalized theta graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThetaCycle {
    thetas: Vec<GeneralizedTheta>,
}

impl ThetaCycle {
    /// Strict constructor: `N ≥ 3` and no two cyclically adjacent thetas
    /// both have a single branch.
    pub fn new(thetas: Vec<GeneralizedTheta>) -> Result<Self, GraphError> {
        let cycle = Self::relaxed(thetas)?;
        if let Some(i) = cycle.adjacent_single_branch() {
            return Err(GraphError::AdjacentSingleBranches {
                first: i + 1,
                second: (i + 1) % cycle.len() + 1,
            });
        }
        Ok(cycle)
    }

    /// Only enforces `N ≥ 3`. Used for ring-of-paths fixtures such as
    /// `[Θ(3), Θ(3), Θ(3)]`, which the strict constructor rejects.
    pub fn relaxed(thetas: Vec<GeneralizedTheta>) -> Result<Self, GraphError> {
        if thetas.len() < 3 {
            return Err(GraphError::TooFewThetas(thetas.len()));
        }
        Ok(Self { thetas })
    }

    /// Convenience for literals: `ThetaCycle::from_lists(&[&[2, 2], &[3]])`.
    pub fn from_lists<T: AsRef<[u32]>>(lists: &[T]) -> Result<Self, GraphError> {
        let thetas = lists
            .iter()
            .map(|l| GeneralizedTheta::new(l.as_ref().to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(thetas)
    }

    pub fn from_lists_relaxed<T: AsRef<[u32]>>(lists: &[T]) -> Result<Self, GraphError> {
        let thetas = lists
            .iter()
            .map(|l| GeneralizedTheta::new(l.as_ref().to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::relaxed(thetas)
    }

    /// Zero-based index of the first theta whose successor also has a single branch.
    pub fn adjacent_single_branch(&self) -> Option<usize> {
        let n = self.len();
        (0..n).find(|&i| {
            self.thetas[i].branch_count() == 1 && self.thetas[(i + 1) % n].branch_count() == 1
        })
    }

    /// Number of thetas, `N`.
    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }

    pub fn thetas(&self) -> &[GeneralizedTheta] {
        &self.thetas
    }

    /// Theta by 1-based index, cyclically.
    pub fn theta(&self, index: usize) -> &GeneralizedTheta {
        let n = self.len();
        &self.thetas[(index + n - 1) % n]
    }

    pub fn branch_lists(&self) -> Vec<Vec<u32>> {
        self.thetas.iter().map(|t| t.branches.clone()).collect()
    }

    /// Thetas re-indexed so that new theta `m` (0-based) is old theta `map(m)`.
    pub(crate) fn reindexed(&self, map: impl Fn(usize) -> usize) -> Self {
        Self {
            thetas: (0..self.len()).map(|m| self.thetas[map(m)].clone()).collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphFileRepr {
    thetas: Vec<Vec<u32>>,
}

impl Serialize for ThetaCycle {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        GraphFileRepr { thetas: self.branch_lists() }.serialize(serializer)
    }
}

/// Deserializes through [`ThetaCycle::from_lists_relaxed`]; branch lists are sorted.
impl<'de> Deserialize<'de> for ThetaCycle {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = GraphFileRepr::deserialize(deserializer)?;
        ThetaCycle::from_lists_relaxed(&repr.thetas).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for ThetaCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, t) in self.thetas.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, "]")
    }
}

/// Evidence that `K·ECV(Θ_i) = L·ECV(Θ_k)`; indices are 1-based, `i < k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepetitiveWitness {
    pub i: usize,
    pub k: usize,
    #[serde(rename = "K")]
    pub big_k: u64,
    #[serde(rename = "L")]
    pub big_l: u64,
}

impl RepetitiveWitness {
    pub fn is_strong(&self) -> bool {
        self.big_k == 1 || self.big_l == 1
    }
}

pub fn repetitive_witnesses(graph: &ThetaCycle) -> Vec<RepetitiveWitness> {
    let vectors: Vec<_> = graph.thetas.iter().map(euler_char_vector).collect();
    let mut out = Vec::new();
    for i in 0..vectors.len() {
        for k in i + 1..vectors.len() {
            if let Some((big_k, big_l)) = vectors_commensurable(&vectors[i], &vectors[k]) {
                out.push(RepetitiveWitness { i: i + 1, k: k + 1, big_k, big_l });
            }
        }
    }
    out
}

pub fn is_repetitive(graph: &ThetaCycle) -> bool {
    !repetitive_witnesses(graph).is_empty()
}

pub fn is_strongly_repetitive(graph: &ThetaCycle) -> bool {
    repetitive_witnesses(graph).iter().any(RepetitiveWitness::is_strong)
}

/// A bijection `σ` on theta indices with `Θ'_{σ(i)} ≅ Θ_i`, stored 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThetaBijection(pub Vec<usize>);

impl ThetaBijection {
    /// `σ(i)` for 1-based `i`.
    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j - 1] = i + 1;
        }
        Self(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i + 1 == j)
    }

    /// Whether this is a bijection carrying each theta of `g1` onto an equal theta of `g2`.
    pub fn witnesses(&self, g1: &ThetaCycle, g2: &ThetaCycle) -> bool {
        let n = g1.len();
        if g2.len() != n || self.0.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for (i, &j) in self.0.iter().enumerate() {
            if j == 0 || j > n || seen[j - 1] || g1.thetas[i] != g2.thetas[j - 1] {
                return false;
            }
            seen[j - 1] = true;
        }
        true
    }
}

/// Returns the first permuted-pair bijection (each theta sent to the
/// lowest-indexed unused equal theta), or `None` when the multisets differ.
pub fn is_permuted_pair(g1: &ThetaCycle, g2: &ThetaCycle) -> Option<ThetaBijection> {
    if g1.len() != g2.len() {
        return None;
    }
    let mut used = vec![false; g2.len()];
    let mut sigma = Vec::with_capacity(g1.len());
    for t in &g1.thetas {
        let j = (0..g2.len()).find(|&j| !used[j] && g2.thetas[j] == *t)?;
        used[j] = true;
        sigma.push(j + 1);
    }
    Some(ThetaBijection(sigma))
}

/// Every bijection witnessing the permuted pair, in lexicographic order,
/// stopping after `limit` results.
pub fn permuted_pair_bijections(
    g1: &ThetaCycle,
    g2: &ThetaCycle,
    limit: usize,
) -> Vec<ThetaBijection> {
    fn extend(
        g1: &ThetaCycle,
        g2: &ThetaCycle,
        used: &mut [bool],
        current: &mut Vec<usize>,
        out: &mut Vec<ThetaBijection>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        let i = current.len();
        if i == g1.len() {
            out.push(ThetaBijection(current.clone()));
            return;
        }
        for j in 0..g2.len() {
            if !used[j] && g2.thetas[j] == g1.thetas[i] {
                used[j] = true;
                current.push(j + 1);
                extend(g1, g2, used, current, out, limit);
                current.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    if g1.len() == g2.len() {
        let mut used = vec![false; g2.len()];
        extend(g1, g2, &mut used, &mut Vec::new(), &mut out, limit);
    }
    out
}

/// 3-convex: every branch has at least three subdivision vertices.
pub fn is_three_convex(graph: &ThetaCycle) -> bool {
    graph.thetas.iter().flat_map(|t| t.branches.iter()).all(|&n| n >= 3)
}

/// Plain simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialGraph {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl SimplicialGraph {
    fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.vertex_count];
        for &(a, b) in &self.edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    /// Number of connected components after deleting the given vertices and edge.
    fn components_without(&self, removed_vertex: Option<usize>, removed_edge: Option<usize>) -> usize {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (idx, &(a, b)) in self.edges.iter().enumerate() {
            if Some(idx) == removed_edge || Some(a) == removed_vertex || Some(b) == removed_vertex {
                continue;
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut components = 0;
        for start in 0..self.vertex_count {
            if seen[start] || Some(start) == removed_vertex {
                continue;
            }
            components += 1;
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        components
    }

    /// Brute-force search for a 4-cycle: two distinct vertices sharing two
    /// distinct common neighbours.
    pub fn has_four_cycle(&self) -> bool {
        let adj = self.adjacency();
        for a in 0..self.vertex_count {
            for b in a + 1..self.vertex_count {
                if adj[a].intersection(&adj[b]).nth(1).is_some() {
                    return true;
                }
            }
        }
        false
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count == 0 || self.components_without(None, None) == 1
    }

    pub fn articulation_vertices(&self) -> Vec<usize> {
        let base = self.components_without(None, None);
        (0..self.vertex_count)
            .filter(|&v| self.components_without(Some(v), None) > base)
            .collect()
    }

    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let base = self.components_without(None, None);
        (0..self.edges.len())
            .filter(|&e| self.components_without(None, Some(e)) > base)
            .map(|e| self.edges[e])
            .collect()
    }
}

/// Expands the cycle into its simplicial defining graph. Hubs are vertices
/// `0..N`; subdivision vertices follow in `(theta, branch)` order.
pub fn expand_to_simplicial(graph: &ThetaCycle) -> Result<SimplicialGraph, GraphError> {
    let n = graph.len();
    let mut next = n;
    let mut edges = Vec::new();
    for (i, theta) in graph.thetas.iter().enumerate() {
        let (a, b) = (i, (i + 1) % n);
        if theta.branches.iter().filter(|&&s| s == 0).count() > 1 {
            return Err(GraphError::MultiEdge { theta: i + 1 });
        }
        for &subdivisions in &theta.branches {
            let mut prev = a;
            for _ in 0..subdivisions {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, b));
        }
    }
    Ok(SimplicialGraph { vertex_count: next, edges })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralReport {
    pub square_free: bool,
    pub connected: bool,
    pub has_separating_vertex_or_edge: bool,
}

pub fn structural_report(graph: &ThetaCycle) -> Result<StructuralReport, GraphError> {
    let simplicial = expand_to_simplicial(graph)?;
    Ok(StructuralReport {
        square_free: !simplicial.has_four_cycle(),
        connected: simplicial.is_connected(),
        has_separating_vertex_or_edge: !simplicial.articulation_vertices().is_empty()
            || !simplicial.bridges().is_empty(),
    })
}
