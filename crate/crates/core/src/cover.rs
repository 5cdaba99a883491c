//! Finite covers of the singular set, modeled as edge-labeled multigraphs.
//!
//! A degree-`d` cover has `d` hub vertices and, for every star label
//! `1..=N`, a perfect matching on them. Subdivision vertices (lifts of the
//! order-two points) are suppressed, so every vertex has degree exactly `N`.
//! The bicolored cycles of consecutive labels `{i, i+1}` are the boundary
//! circles that the jester hats over `Θ_i` are glued to.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{CoverError, HatError};
use crate::graph::ThetaCycle;
use crate::orbicomplex::JesterHat;

/// Unchecked cover data as read from or written to a cover file.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RawCover {
    pub n_labels: usize,
    pub degree: usize,
    /// `matchings[l]` holds the pairs of label `l + 1`.
    pub matchings: Vec<Vec<[usize; 2]>>,
}

impl RawCover {
    /// Sorts each pair ascending and each pair list lexicographically.
    pub fn normalized(mut self) -> Self {
        for pairs in &mut self.matchings {
            for p in pairs.iter_mut() {
                p.sort_unstable();
            }
            pairs.sort_unstable();
        }
        self
    }
}

#[derive(Serialize, Deserialize)]
struct CoverFileRepr {
    #[serde(rename = "N")]
    n_labels: usize,
    d: usize,
    matchings: BTreeMap<String, Vec<[usize; 2]>>,
}

impl Serialize for RawCover {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let normal = self.clone().normalized();
        CoverFileRepr {
            n_labels: normal.n_labels,
            d: normal.degree,
            matchings: normal
                .matchings
                .into_iter()
                .enumerate()
                .map(|(l, pairs)| ((l + 1).to_string(), pairs))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RawCover {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CoverFileRepr::deserialize(deserializer)?;
        let mut matchings = vec![Vec::new(); repr.n_labels];
        for (key, pairs) in repr.matchings {
            let label: usize = key
                .parse()
                .map_err(|_| D::Error::custom(format!("matching key {key:?} is not a label")))?;
            if label == 0 || label > repr.n_labels {
                return Err(D::Error::custom(format!("label {label} outside 1..={}", repr.n_labels)));
            }
            matchings[label - 1] = pairs;
        }
        Ok(RawCover { n_labels: repr.n_labels, degree: repr.d, matchings })
    }
}

impl Serialize for SingularCover {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_raw().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SingularCover {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawCover::deserialize(deserializer)?;
        SingularCover::from_raw(&raw).map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<String>,
}

/// Checks every cover invariant and lists all violations found.
pub fn validate_cover(raw: &RawCover, graph: Option<&ThetaCycle>) -> ValidationReport {
    let mut violations = Vec::new();
    let n = raw.n_labels;
    let d = raw.degree;
    if n < 3 {
        violations.push(format!("N = {n}: need at least 3 labels"));
    }
    if d < 2 {
        violations.push(format!("d = {d}: need at least 2 vertices"));
    } else if d % 2 == 1 {
        violations.push(format!("d = {d} is odd: no perfect matching exists"));
    }
    if raw.matchings.len() != n {
        violations.push(format!(
            "expected matchings for labels 1..{n}, found {} labels",
            raw.matchings.len()
        ));
    }
    if let Some(g) = graph {
        if g.len() != n {
            violations.push(format!("cover has N = {n} labels but the graph has {} thetas", g.len()));
        }
    }
    let mut adjacency = vec![Vec::new(); d];
    for (l, pairs) in raw.matchings.iter().enumerate() {
        let label = l + 1;
        if pairs.is_empty() && d > 0 {
            violations.push(format!("label {label}: matching is missing"));
            continue;
        }
        let mut hits = vec![0usize; d];
        for &[a, b] in pairs {
            if a >= d || b >= d {
                violations.push(format!("label {label}: pair ({a}, {b}) has a vertex outside 0..{d}"));
                continue;
            }
            if a == b {
                violations.push(format!("label {label}: loop at vertex {a}"));
            }
            hits[a] += 1;
            hits[b] += 1;
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        for (v, &h) in hits.iter().enumerate() {
            match h {
                0 => violations.push(format!("label {label}: vertex {v} is unmatched")),
                1 => {}
                _ => violations.push(format!("label {label}: vertex {v} is matched {h} times")),
            }
        }
    }
    if d > 0 && count_components(&adjacency, &[]) > 1 {
        violations.push("union of matchings is not connected".to_string());
    }
    ValidationReport { valid: violations.is_empty(), violations }
}

fn count_components(adjacency: &[Vec<usize>], removed: &[usize]) -> usize {
    let mut seen = vec![false; adjacency.len()];
    for &r in removed {
        seen[r] = true;
    }
    let mut components = 0;
    for start in 0..adjacency.len() {
        if seen[start] {
            continue;
        }
        components += 1;
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    components
}

/// A validated cover of the singular set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingularCover {
    /// `partners[l][v]` is the label-`(l+1)` neighbour of `v`.
    partners: Vec<Vec<usize>>,
}

impl SingularCover {
    pub fn from_raw(raw: &RawCover) -> Result<Self, CoverError> {
        let report = validate_cover(raw, None);
        if !report.valid {
            return Err(CoverError::Invalid(report.violations));
        }
        let partners = raw
            .matchings
            .iter()
            .map(|pairs| {
                let mut p = vec![0; raw.degree];
                for &[a, b] in pairs {
                    p[a] = b;
                    p[b] = a;
                }
                p
            })
            .collect();
        Ok(Self { partners })
    }

    /// Builds from pair lists, one list per label.
    pub fn from_pairs(n_labels: usize, degree: usize, matchings: Vec<Vec<[usize; 2]>>) -> Result<Self, CoverError> {
        Self::from_raw(&RawCover { n_labels, degree, matchings })
    }

    /// Builds from partner arrays, validating them.
    pub fn from_partners(partners: Vec<Vec<usize>>) -> Result<Self, CoverError> {
        let cover = Self { partners };
        let report = validate_cover(&cover.to_raw(), None);
        if !report.valid {
            return Err(CoverError::Invalid(report.violations));
        }
        Ok(cover)
    }

    pub(crate) fn from_partners_unchecked(partners: Vec<Vec<usize>>) -> Self {
        let cover = Self { partners };
        debug_assert!(validate_cover(&cover.to_raw(), None).valid);
        cover
    }

    pub fn to_raw(&self) -> RawCover {
        let matchings = self
            .partners
            .iter()
            .map(|p| {
                p.iter()
                    .enumerate()
                    .filter(|&(v, &w)| v < w)
                    .map(|(v, &w)| [v, w])
                    .collect()
            })
            .collect();
        RawCover { n_labels: self.n_labels(), degree: self.degree(), matchings }.normalized()
    }

    pub fn n_labels(&self) -> usize {
        self.partners.len()
    }

    pub fn degree(&self) -> usize {
        self.partners.first().map_or(0, Vec::len)
    }

    /// Partner of `v` under the 1-based `label`.
    pub fn partner(&self, label: usize, v: usize) -> usize {
        self.partners[label - 1][v]
    }

    pub fn partners(&self) -> &[Vec<usize>] {
        &self.partners
    }

    /// Edge count `dN/2`.
    pub fn edge_count(&self) -> usize {
        self.degree() * self.n_labels() / 2
    }

    /// 1-based labels on the edges between `u` and `w`, ascending.
    pub fn labels_between(&self, u: usize, w: usize) -> Vec<usize> {
        (1..=self.n_labels()).filter(|&l| self.partner(l, u) == w).collect()
    }

    /// Copy with vertex `v` renamed to `perm[v]`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Self {
        let partners = self
            .partners
            .iter()
            .map(|p| {
                let mut q = vec![0; p.len()];
                for (v, &w) in p.iter().enumerate() {
                    q[perm[v]] = perm[w];
                }
                q
            })
            .collect();
        Self { partners }
    }

    /// Copy whose label `map[l-1]` carries the matching of this cover's label `l`.
    pub fn relabel_labels(&self, map: &[usize]) -> Self {
        let mut partners = vec![Vec::new(); self.n_labels()];
        for (l, p) in self.partners.iter().enumerate() {
            partners[map[l] - 1] = p.clone();
        }
        Self { partners }
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.degree()];
        for p in &self.partners {
            for (v, &w) in p.iter().enumerate() {
                adj[v].push(w);
            }
        }
        adj
    }
}

/// The double cover: two vertices, every label matched across them.
pub fn double_cover(graph: &ThetaCycle) -> SingularCover {
    SingularCover::from_partners_unchecked(vec![vec![1, 0]; graph.len()])
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BicoloredCycle {
    /// Labels `{pair, pair + 1 mod N}`.
    pub pair: usize,
    /// Vertices in traversal order, starting from the least; the step from
    /// position `t` uses label `pair` for even `t` and `pair + 1` for odd `t`.
    pub vertices: Vec<usize>,
    pub half_length: usize,
}

/// Components of each consecutive-label matching union, ordered by pair then least vertex.
pub fn bicolored_cycles(cover: &SingularCover) -> Vec<BicoloredCycle> {
    let n = cover.n_labels();
    let d = cover.degree();
    let mut out = Vec::new();
    for pair in 1..=n {
        let next = pair % n + 1;
        let mut seen = vec![false; d];
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut vertices = Vec::new();
            let mut v = start;
            loop {
                seen[v] = true;
                vertices.push(v);
                let w = cover.partner(pair, v);
                seen[w] = true;
                vertices.push(w);
                v = cover.partner(next, w);
                if v == start {
                    break;
                }
            }
            let half_length = vertices.len() / 2;
            out.push(BicoloredCycle { pair, vertices, half_length });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HattedCycle {
    pub cycle: BicoloredCycle,
    /// One hat per branch of `Θ_pair`, in branch order.
    pub hats: Vec<JesterHat>,
}

/// A cover of the whole orbicomplex: singular-set cover plus the jester hats
/// glued along every bicolored cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbicomplexCover {
    pub cover: SingularCover,
    pub graph: ThetaCycle,
    pub cycles: Vec<HattedCycle>,
}

/// Glues `j·(r_{i,b} - 3) + 2` cone points over branch `b` to each cycle of
/// pair `i` with half-length `j`.
pub fn attach_hats(cover: &SingularCover, graph: &ThetaCycle) -> Result<OrbicomplexCover, CoverError> {
    if cover.n_labels() != graph.len() {
        return Err(CoverError::LabelCountMismatch { cover: cover.n_labels(), graph: graph.len() });
    }
    let cycles = bicolored_cycles(cover)
        .into_iter()
        .map(|cycle| {
            let j = cycle.half_length as u64;
            let hats = graph
                .theta(cycle.pair)
                .reflection_edges()
                .map(|r| JesterHat { cone_points: hat_cone_points(r, j) })
                .collect();
            HattedCycle { cycle, hats }
        })
        .collect();
    Ok(OrbicomplexCover { cover: cover.clone(), graph: graph.clone(), cycles })
}

// j(r - 3) + 2; unsubdivided branches (r = 2) are outside the formula's domain and clamp at 0.
fn hat_cone_points(r: u64, j: u64) -> u64 {
    (j * r + 2).saturating_sub(3 * j)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HomotopyCertificate {
    pub betti_1: i64,
    /// One sorted cone-count list per bicolored cycle; the outer list is sorted.
    pub hat_inventory: Vec<Vec<u64>>,
}

pub fn homotopy_certificate(x: &OrbicomplexCover) -> HomotopyCertificate {
    let d = x.cover.degree() as i64;
    let e = x.cover.edge_count() as i64;
    let mut hat_inventory: Vec<Vec<u64>> = x
        .cycles
        .iter()
        .map(|c| {
            let mut counts: Vec<u64> = c.hats.iter().map(|h| h.cone_points).collect();
            counts.sort_unstable();
            counts
        })
        .collect();
    hat_inventory.sort();
    HomotopyCertificate { betti_1: e - d + 1, hat_inventory }
}

/// The closed surface obtained by capping every bicolored cycle with a disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceModel {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_char: i64,
    pub orientable: bool,
    /// Present only for orientable surfaces.
    pub genus: Option<i64>,
    pub holes: usize,
}

pub fn surface_model(cover: &SingularCover) -> SurfaceModel {
    let cycles = bicolored_cycles(cover);
    let n = cover.n_labels();
    // edge (label, lo, hi) -> traversals (cycle, lo→hi?)
    let mut traversals: BTreeMap<(usize, usize, usize), Vec<(usize, bool)>> = BTreeMap::new();
    for (idx, c) in cycles.iter().enumerate() {
        let len = c.vertices.len();
        for t in 0..len {
            let (from, to) = (c.vertices[t], c.vertices[(t + 1) % len]);
            let label = if t % 2 == 0 { c.pair } else { c.pair % n + 1 };
            let key = (label, from.min(to), from.max(to));
            traversals.entry(key).or_default().push((idx, from < to));
        }
    }
    // flip[a] ^ flip[b] = 1 ^ dir_a ^ dir_b for the two faces on each edge
    let mut constraints = vec![Vec::new(); cycles.len()];
    for sides in traversals.values() {
        debug_assert_eq!(sides.len(), 2);
        let ((a, da), (b, db)) = (sides[0], sides[1]);
        let parity = !(da ^ db);
        constraints[a].push((b, parity));
        constraints[b].push((a, parity));
    }
    let mut flip: Vec<Option<bool>> = vec![None; cycles.len()];
    let mut orientable = true;
    'outer: for start in 0..cycles.len() {
        if flip[start].is_some() {
            continue;
        }
        flip[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(a) = queue.pop_front() {
            let fa = flip[a].unwrap();
            for &(b, parity) in &constraints[a] {
                let want = fa ^ parity;
                match flip[b] {
                    None => {
                        flip[b] = Some(want);
                        queue.push_back(b);
                    }
                    Some(fb) if fb != want => {
                        orientable = false;
                        break 'outer;
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let vertices = cover.degree();
    let edges = cover.edge_count();
    let faces = cycles.len();
    let euler_char = vertices as i64 - edges as i64 + faces as i64;
    SurfaceModel {
        vertices,
        edges,
        faces,
        euler_char,
        orientable,
        genus: orientable.then_some((2 - euler_char) / 2),
        holes: faces,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenusPolicy {
    /// Gate on orientability only; genus is reported.
    #[default]
    OrientableOnly,
    /// Additionally require genus zero.
    GenusZero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumption1Report {
    pub orientable: bool,
    pub genus: Option<i64>,
    pub holes: usize,
    pub every_boundary_has_hat: bool,
    pub genus_nonzero: bool,
    pub passes: bool,
}

/// Checks that the cover is homotopic to jester hats glued along the
/// boundary of an orientable surface, with a hat on every boundary circle.
pub fn assumption1_check(x: &OrbicomplexCover, policy: GenusPolicy) -> Assumption1Report {
    let surface = surface_model(&x.cover);
    let every_boundary_has_hat = x.cycles.iter().all(|c| !c.hats.is_empty());
    let genus_nonzero = surface.genus.is_some_and(|g| g != 0);
    let mut passes = surface.orientable && every_boundary_has_hat;
    if policy == GenusPolicy::GenusZero {
        passes &= !genus_nonzero;
    }
    Assumption1Report {
        orientable: surface.orientable,
        genus: surface.genus,
        holes: surface.holes,
        every_boundary_has_hat,
        genus_nonzero,
        passes,
    }
}

/// Sorted component counts over all vertex pairs whose removal disconnects the rest.
pub fn cut_pair_statistics(cover: &SingularCover) -> Vec<usize> {
    let adjacency = cover.adjacency();
    let d = cover.degree();
    let mut stats = Vec::new();
    for u in 0..d {
        for w in u + 1..d {
            if d <= 2 {
                continue;
            }
            let components = count_components(&adjacency, &[u, w]);
            if components >= 2 {
                stats.push(components);
            }
        }
    }
    stats.sort_unstable();
    stats
}

/// Vertex bijection `map[v]` from one cover onto another that preserves labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LabelIso(pub Vec<usize>);

impl LabelIso {
    pub fn identity(d: usize) -> Self {
        Self((0..d).collect())
    }

    /// Checks bijectivity and `map(partner_l(v)) = partner_l(map(v))` for every label.
    pub fn verify(&self, a: &SingularCover, b: &SingularCover) -> bool {
        self.verify_with_labels(a, b, |l| l)
    }

    pub(crate) fn verify_with_labels(
        &self,
        a: &SingularCover,
        b: &SingularCover,
        label_map: impl Fn(usize) -> usize,
    ) -> bool {
        let d = a.degree();
        if a.n_labels() != b.n_labels() || d != b.degree() || self.0.len() != d {
            return false;
        }
        let mut hit = vec![false; d];
        for &t in &self.0 {
            if t >= d || hit[t] {
                return false;
            }
            hit[t] = true;
        }
        (1..=a.n_labels()).all(|l| {
            (0..d).all(|v| self.0[a.partner(l, v)] == b.partner(label_map(l), self.0[v]))
        })
    }

    pub fn compose(&self, then: &LabelIso) -> LabelIso {
        LabelIso(self.0.iter().map(|&v| then.0[v]).collect())
    }

    pub fn inverse(&self) -> LabelIso {
        let mut inv = vec![0; self.0.len()];
        for (v, &t) in self.0.iter().enumerate() {
            inv[t] = v;
        }
        LabelIso(inv)
    }
}

/// Propagates `0 ↦ anchor` through the matchings; the image of every
/// label-`l` partner is forced.
fn propagate(
    a: &SingularCover,
    b: &SingularCover,
    anchor: usize,
    label_map: &impl Fn(usize) -> usize,
) -> Option<LabelIso> {
    let d = a.degree();
    let mut map = vec![usize::MAX; d];
    let mut used = vec![false; d];
    map[0] = anchor;
    used[anchor] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for l in 1..=a.n_labels() {
            let pa = a.partner(l, v);
            let pb = b.partner(label_map(l), map[v]);
            if map[pa] == usize::MAX {
                if used[pb] {
                    return None;
                }
                map[pa] = pb;
                used[pb] = true;
                queue.push_back(pa);
            } else if map[pa] != pb {
                return None;
            }
        }
    }
    let iso = LabelIso(map);
    iso.verify_with_labels(a, b, label_map).then_some(iso)
}

/// Label-preserving isomorphism by matching propagation from every anchor.
pub fn find_label_iso(a: &SingularCover, b: &SingularCover) -> Option<LabelIso> {
    if a.n_labels() != b.n_labels() || a.degree() != b.degree() {
        return None;
    }
    (0..b.degree()).find_map(|anchor| propagate(a, b, anchor, &|l| l))
}

/// Every label-preserving isomorphism, ordered by the image of vertex 0.
pub fn all_label_isos(a: &SingularCover, b: &SingularCover) -> Vec<LabelIso> {
    if a.n_labels() != b.n_labels() || a.degree() != b.degree() {
        return Vec::new();
    }
    (0..b.degree()).filter_map(|anchor| propagate(a, b, anchor, &|l| l)).collect()
}

/// Isomorphism allowed to rotate labels cyclically: label `l` of `a` goes to
/// label `l + rotation mod N` of `b`. Tries rotation 0 first.
pub fn find_label_iso_rotated(a: &SingularCover, b: &SingularCover) -> Option<(usize, LabelIso)> {
    let n = a.n_labels();
    if n != b.n_labels() || a.degree() != b.degree() {
        return None;
    }
    (0..n).find_map(|rotation| {
        let label_map = move |l: usize| (l - 1 + rotation) % n + 1;
        (0..b.degree())
            .find_map(|anchor| propagate(a, b, anchor, &label_map))
            .map(|iso| (rotation, iso))
    })
}

/// Canonical code of the label-isomorphism class: the least breadth-first
/// relabeling over all start vertices. Equal codes ⇔ label-isomorphic.
pub fn canonical_code(cover: &SingularCover) -> Vec<u32> {
    let d = cover.degree();
    let n = cover.n_labels();
    let mut best: Option<Vec<u32>> = None;
    for start in 0..d {
        let mut index = vec![usize::MAX; d];
        let mut order = Vec::with_capacity(d);
        index[start] = 0;
        order.push(start);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for l in 1..=n {
                let w = cover.partner(l, v);
                if index[w] == usize::MAX {
                    index[w] = order.len();
                    order.push(w);
                }
            }
        }
        let mut code = Vec::with_capacity(d * n + 2);
        code.push(n as u32);
        code.push(d as u32);
        for &v in &order {
            for l in 1..=n {
                code.push(index[cover.partner(l, v)] as u32);
            }
        }
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomeomorphismVerdict {
    pub homeomorphic: bool,
    pub iso: Option<LabelIso>,
    /// Whether hats agree along the isomorphism; `None` when no isomorphism exists.
    pub hats_match: Option<bool>,
}

/// Homeomorphic iff a label-preserving isomorphism of singular sets exists
/// and carries every cycle's hats onto equal hats.
pub fn homeomorphism_verdict(x1: &OrbicomplexCover, x2: &OrbicomplexCover) -> HomeomorphismVerdict {
    let Some(iso) = find_label_iso(&x1.cover, &x2.cover) else {
        return HomeomorphismVerdict { homeomorphic: false, iso: None, hats_match: None };
    };
    let hats_match = hats_correspond(x1, x2, &iso, 0);
    HomeomorphismVerdict { homeomorphic: hats_match, iso: Some(iso), hats_match: Some(hats_match) }
}

/// Whether `iso` carries each hatted cycle of `x1` onto a cycle of `x2` with
/// the same half-length and hats, pair `i` going to pair `i + rotation mod N`.
pub fn hats_correspond(x1: &OrbicomplexCover, x2: &OrbicomplexCover, iso: &LabelIso, rotation: usize) -> bool {
    let n = x1.cover.n_labels();
    let located: BTreeMap<(usize, usize), &HattedCycle> = x2
        .cycles
        .iter()
        .flat_map(|c| c.cycle.vertices.iter().map(move |&v| ((c.cycle.pair, v), c)))
        .collect();
    x1.cycles.iter().all(|c| {
        let image = iso.0[c.cycle.vertices[0]];
        let pair = (c.cycle.pair - 1 + rotation) % n + 1;
        located.get(&(pair, image)).is_some_and(|other| {
            let mut h1 = c.hats.clone();
            let mut h2 = other.hats.clone();
            h1.sort_unstable();
            h2.sort_unstable();
            other.cycle.half_length == c.cycle.half_length && h1 == h2
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Chamber {
    pub genus: u64,
    pub boundary_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionFreeProfile {
    pub chambers: Vec<Chamber>,
    pub singular_copies: u64,
    pub degree: u64,
}

/// Each hat with `p` cone points lifts to a chamber of genus `p - 3` with four
/// boundary circles in the four-sheeted torsion-free cover.
pub fn torsion_free_cover_profile(x: &OrbicomplexCover) -> Result<TorsionFreeProfile, HatError> {
    let chambers = x
        .cycles
        .iter()
        .flat_map(|c| c.hats.iter())
        .map(|h| {
            if h.cone_points < 3 {
                Err(HatError::DegenerateHat(h.cone_points))
            } else {
                Ok(Chamber { genus: h.cone_points - 3, boundary_count: 4 })
            }
        })
        .collect::<Result<_, _>>()?;
    Ok(TorsionFreeProfile { chambers, singular_copies: 4, degree: 4 })
}
