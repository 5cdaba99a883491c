//! Cycle count vectors, the class 𝒮 of expandable covers, inductive
//! reconstruction of label-preserving isomorphisms, and the pairwise
//! rigidity audit.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cover::{
    all_label_isos, assumption1_check, attach_hats, bicolored_cycles, canonical_code, find_label_iso,
    homeomorphism_verdict, homotopy_certificate, GenusPolicy, HomotopyCertificate, LabelIso, OrbicomplexCover,
    SingularCover,
};
use crate::error::{CoverError, RigidityError};
use crate::graph::{is_three_convex, repetitive_witnesses, ThetaCycle};

/// `x[i-1][j-1]` counts the bicolored cycles of pair `i` with `2j` edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleCountVectors {
    pub n_labels: usize,
    pub degree: usize,
    pub x: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct VectorsRepr {
    #[serde(rename = "N")]
    n_labels: usize,
    d: usize,
    x: Vec<Vec<usize>>,
}

impl Serialize for CycleCountVectors {
    /// Each vector is zero-padded to length `d`.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let x = self
            .x
            .iter()
            .map(|v| {
                let mut v = v.clone();
                v.resize(self.degree, 0);
                v
            })
            .collect();
        VectorsRepr { n_labels: self.n_labels, d: self.degree, x }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycleCountVectors {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = VectorsRepr::deserialize(deserializer)?;
        let len = repr.d / 2;
        let mut x = Vec::with_capacity(repr.x.len());
        for mut v in repr.x {
            if v.len() < len || v[len..].iter().any(|&c| c != 0) {
                return Err(serde::de::Error::custom(format!("cycle vector {v:?} does not fit d = {}", repr.d)));
            }
            v.truncate(len);
            x.push(v);
        }
        Ok(Self { n_labels: repr.n_labels, degree: repr.d, x })
    }
}

pub fn cycle_count_vectors(cover: &SingularCover) -> CycleCountVectors {
    let n = cover.n_labels();
    let d = cover.degree();
    let mut x = vec![vec![0; d / 2]; n];
    for c in bicolored_cycles(cover) {
        x[c.pair - 1][c.half_length - 1] += 1;
    }
    CycleCountVectors { n_labels: n, degree: d, x }
}

/// Four-vertex base cover: the cyclic label arc `arc[0]..=arc[1]` on
/// `{(0,1),(2,3)}`, every other label on `{(1,2),(3,0)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassSBase {
    #[serde(rename = "N")]
    pub n_labels: usize,
    pub arc: [usize; 2],
}

impl ClassSBase {
    pub fn new(n_labels: usize, first: usize, last: usize) -> Result<Self, RigidityError> {
        let base = Self { n_labels, arc: [first, last] };
        base.labels()?;
        Ok(base)
    }

    /// Labels of the arc, in cyclic order.
    pub fn labels(&self) -> Result<Vec<usize>, RigidityError> {
        let n = self.n_labels;
        let [first, last] = self.arc;
        if n < 3 || !(1..=n).contains(&first) || !(1..=n).contains(&last) {
            return Err(RigidityError::EmptyArc);
        }
        let size = (last + n - first) % n + 1;
        if size == n {
            return Err(RigidityError::EmptyArc);
        }
        Ok((0..size).map(|t| (first - 1 + t) % n + 1).collect())
    }

    /// Every admissible base for `n_labels` labels.
    pub fn all(n_labels: usize) -> Vec<Self> {
        (1..=n_labels)
            .flat_map(|first| (0..n_labels - 1).map(move |t| Self { n_labels, arc: [first, (first - 1 + t) % n_labels + 1] }))
            .collect()
    }
}

pub fn class_s_base(base: &ClassSBase) -> Result<SingularCover, RigidityError> {
    let arc = base.labels()?;
    let matchings = (1..=base.n_labels)
        .map(|l| if arc.contains(&l) { vec![[0, 1], [2, 3]] } else { vec![[1, 2], [3, 0]] })
        .collect();
    Ok(SingularCover::from_pairs(base.n_labels, 4, matchings)?)
}

/// Reroutes labels `deleted` of the edge set between `site[0]` and `site[1]`
/// through two new vertices, which are then joined by every other label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExpansionMove {
    pub site: [usize; 2],
    pub deleted: Vec<usize>,
}

/// Appends vertices `d` (next to `site[0]`) and `d + 1` (next to `site[1]`).
pub fn class_s_expand(cover: &SingularCover, mv: &ExpansionMove) -> Result<SingularCover, RigidityError> {
    let n = cover.n_labels();
    let d = cover.degree();
    let [u, w] = mv.site;
    if u >= d || w >= d || u == w {
        return Err(RigidityError::InvalidMove(format!("site ({u}, {w}) on {d} vertices")));
    }
    if mv.deleted.is_empty() {
        return Err(RigidityError::InvalidMove("no labels deleted".into()));
    }
    if let Some(l) = mv.deleted.iter().find(|&&l| l == 0 || l > n) {
        return Err(RigidityError::InvalidMove(format!("label {l} out of range 1..={n}")));
    }
    let present = cover.labels_between(u, w);
    let mut missing: Vec<usize> = mv.deleted.iter().copied().filter(|l| !present.contains(l)).collect();
    if !missing.is_empty() {
        missing.sort_unstable();
        missing.dedup();
        return Err(RigidityError::SiteMissingLabels { u, w, missing });
    }
    let (n1, n2) = (d, d + 1);
    let partners = (1..=n)
        .map(|l| {
            let mut p = cover.partners()[l - 1].clone();
            p.extend([0, 0]);
            if mv.deleted.contains(&l) {
                p[u] = n1;
                p[n1] = u;
                p[w] = n2;
                p[n2] = w;
            } else {
                p[n1] = n2;
                p[n2] = n1;
            }
            p
        })
        .collect();
    Ok(SingularCover::from_partners(partners)?)
}

/// A base plus the moves that rebuild a class-𝒮 cover. With `vertex_map`,
/// replay vertex `v` is renamed `vertex_map[v]` so the replay reproduces the
/// certified cover exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSCertificate {
    pub base: ClassSBase,
    pub moves: Vec<ExpansionMove>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_map: Option<Vec<usize>>,
}

/// Every intermediate cover of the replay, base first; no vertex renaming.
pub fn class_s_replay_steps(base: &ClassSBase, moves: &[ExpansionMove]) -> Result<Vec<SingularCover>, RigidityError> {
    let mut steps = vec![class_s_base(base)?];
    for mv in moves {
        let next = class_s_expand(steps.last().expect("base present"), mv)?;
        steps.push(next);
    }
    Ok(steps)
}

pub fn class_s_replay(cert: &ClassSCertificate) -> Result<SingularCover, RigidityError> {
    let raw = class_s_replay_steps(&cert.base, &cert.moves)?.pop().expect("base present");
    match &cert.vertex_map {
        None => Ok(raw),
        Some(map) if is_permutation(map, raw.degree()) => Ok(raw.relabel_vertices(map)),
        Some(_) => Err(RigidityError::CertificateMismatch),
    }
}

fn is_permutation(map: &[usize], d: usize) -> bool {
    let mut hit = vec![false; d];
    map.len() == d && map.iter().all(|&v| v < d && !std::mem::replace(&mut hit[v], true))
}

/// Isomorphism from the certificate's unrenamed replay onto `cover`.
fn certified_frame(cover: &SingularCover, cert: &ClassSCertificate) -> Result<(Vec<SingularCover>, LabelIso), RigidityError> {
    let steps = class_s_replay_steps(&cert.base, &cert.moves)?;
    let last = steps.last().expect("base present");
    let iso = match &cert.vertex_map {
        Some(map) => Some(LabelIso(map.clone())).filter(|iso| iso.verify(last, cover)),
        None => find_label_iso(last, cover),
    };
    iso.map(|iso| (steps, iso)).ok_or(RigidityError::CertificateMismatch)
}

/// A reverse move at `(u, u2)`: the contracted cover, the surviving vertices
/// in order, the two far endpoints and the rerouted labels.
struct Reduction {
    cover: SingularCover,
    kept: Vec<usize>,
    ends: [usize; 2],
    deleted: Vec<usize>,
}

fn reduce(cover: &SingularCover, u: usize, u2: usize) -> Option<Reduction> {
    let n = cover.n_labels();
    let between = cover.labels_between(u, u2);
    if between.is_empty() || between.len() == n {
        return None;
    }
    let deleted: Vec<usize> = (1..=n).filter(|l| !between.contains(l)).collect();
    let w = cover.partner(deleted[0], u);
    let w2 = cover.partner(deleted[0], u2);
    if w == w2 || deleted.iter().any(|&l| cover.partner(l, u) != w || cover.partner(l, u2) != w2) {
        return None;
    }
    let d = cover.degree();
    let kept: Vec<usize> = (0..d).filter(|&v| v != u && v != u2).collect();
    let mut index = vec![usize::MAX; d];
    for (i, &v) in kept.iter().enumerate() {
        index[v] = i;
    }
    let partners = (1..=n)
        .map(|l| {
            kept.iter()
                .map(|&v| {
                    let p = cover.partner(l, v);
                    if p == u {
                        index[w2]
                    } else if p == u2 {
                        index[w]
                    } else {
                        index[p]
                    }
                })
                .collect()
        })
        .collect();
    Some(Reduction {
        cover: SingularCover::from_partners_unchecked(partners),
        kept,
        ends: [w, w2],
        deleted,
    })
}

/// Ordered pairs `(u, u2)` admitting a reverse move, least first.
fn reductions(cover: &SingularCover) -> impl Iterator<Item = (usize, usize, Reduction)> + '_ {
    let d = cover.degree();
    (0..d)
        .flat_map(move |u| (0..d).filter(move |&u2| u2 != u).map(move |u2| (u, u2)))
        .filter_map(|(u, u2)| reduce(cover, u, u2).map(|r| (u, u2, r)))
}

/// Searches contraction orders for a certificate; the result replays onto
/// `cover` exactly through its `vertex_map`.
pub fn class_s_recognize(cover: &SingularCover) -> Option<ClassSCertificate> {
    let mut failed = HashSet::new();
    let (base, moves) = recognize_unmapped(cover, &mut failed)?;
    let last = class_s_replay_steps(&base, &moves).ok()?.pop()?;
    let iso = find_label_iso(&last, cover)?;
    Some(ClassSCertificate { base, moves, vertex_map: Some(iso.0) })
}

fn recognize_unmapped(
    cover: &SingularCover,
    failed: &mut HashSet<Vec<u32>>,
) -> Option<(ClassSBase, Vec<ExpansionMove>)> {
    let d = cover.degree();
    if d < 4 || d % 2 == 1 {
        return None;
    }
    if d == 4 {
        return ClassSBase::all(cover.n_labels()).into_iter().find_map(|base| {
            let candidate = class_s_base(&base).ok()?;
            find_label_iso(&candidate, cover).map(|_| (base, Vec::new()))
        });
    }
    let code = canonical_code(cover);
    if failed.contains(&code) {
        return None;
    }
    // only unordered pairs: (u2, u) contracts to the same cover
    for (_, _, red) in reductions(cover).filter(|(u, u2, _)| u < u2) {
        let Some((base, mut moves)) = recognize_unmapped(&red.cover, failed) else {
            continue;
        };
        let prev = class_s_replay_steps(&base, &moves).ok()?.pop()?;
        let to_prev = find_label_iso(&prev, &red.cover)?.inverse();
        let at = |v: usize| to_prev.0[red.kept.iter().position(|&k| k == v).expect("kept vertex")];
        moves.push(ExpansionMove { site: [at(red.ends[0]), at(red.ends[1])], deleted: red.deleted });
        return Some((base, moves));
    }
    failed.insert(code);
    None
}

/// Every move sequence from every base up to degree `max_degree`, with the
/// resulting cover. Sites are unordered hub pairs; `deleted` ranges over all
/// nonempty subsets of the labels present at the site.
pub fn enumerate_class_s(n_labels: usize, max_degree: usize) -> Vec<(ClassSCertificate, SingularCover)> {
    let mut out = Vec::new();
    for base in ClassSBase::all(n_labels) {
        let Ok(cover) = class_s_base(&base) else {
            continue;
        };
        extend_all(&base, Vec::new(), cover, max_degree, &mut out);
    }
    out
}

fn extend_all(
    base: &ClassSBase,
    moves: Vec<ExpansionMove>,
    cover: SingularCover,
    max_degree: usize,
    out: &mut Vec<(ClassSCertificate, SingularCover)>,
) {
    let d = cover.degree();
    if d + 2 <= max_degree {
        for mv in available_moves(&cover) {
            let next = class_s_expand(&cover, &mv).expect("enumerated move is valid");
            let mut seq = moves.clone();
            seq.push(mv);
            extend_all(base, seq, next, max_degree, out);
        }
    }
    out.push((ClassSCertificate { base: *base, moves, vertex_map: None }, cover));
}

/// All expansion moves at unordered sites `u < w`.
pub fn available_moves(cover: &SingularCover) -> Vec<ExpansionMove> {
    let d = cover.degree();
    let mut moves = Vec::new();
    for u in 0..d {
        for w in u + 1..d {
            let labels = cover.labels_between(u, w);
            for mask in 1u64..(1 << labels.len()) {
                let deleted = labels.iter().enumerate().filter(|(t, _)| mask >> t & 1 == 1).map(|(_, &l)| l).collect();
                moves.push(ExpansionMove { site: [u, w], deleted });
            }
        }
    }
    moves
}

/// Random class-𝒮 cover: a random base and `depth` random moves.
pub fn random_class_s<R: rand::Rng>(n_labels: usize, depth: usize, rng: &mut R) -> Result<ClassSCertificate, RigidityError> {
    let bases = ClassSBase::all(n_labels);
    if bases.is_empty() {
        return Err(RigidityError::EmptyArc);
    }
    let base = bases[rng.gen_range(0..bases.len())];
    let mut cover = class_s_base(&base)?;
    let mut moves = Vec::with_capacity(depth);
    for _ in 0..depth {
        let options = available_moves(&cover);
        let mv = options[rng.gen_range(0..options.len())].clone();
        cover = class_s_expand(&cover, &mv)?;
        moves.push(mv);
    }
    Ok(ClassSCertificate { base, moves, vertex_map: None })
}

/// Rebuilds a label-preserving isomorphism `a → b` by contracting the last
/// move of `cert_a`, matching it against every compatible reverse move of
/// `b`, recursing and re-extending. The outcome is checked against direct
/// search.
pub fn reconstruct_homeomorphism(
    a: &SingularCover,
    b: &SingularCover,
    cert_a: &ClassSCertificate,
    cert_b: &ClassSCertificate,
) -> Result<Option<LabelIso>, RigidityError> {
    if cycle_count_vectors(a) != cycle_count_vectors(b) {
        return Err(RigidityError::CycleVectorMismatch);
    }
    let (steps, into_a) = certified_frame(a, cert_a)?;
    certified_frame(b, cert_b)?;
    let lifted = lift(&steps, b);
    let iso = lifted.first().map(|f| into_a.inverse().compose(f));
    if iso.as_ref().is_some_and(|iso| !iso.verify(a, b)) || iso.is_some() != find_label_iso(a, b).is_some() {
        return Err(RigidityError::OracleDisagreement);
    }
    Ok(iso)
}

/// Every isomorphism from the last step onto `b`.
fn lift(steps: &[SingularCover], b: &SingularCover) -> Vec<LabelIso> {
    let (a, earlier) = steps.split_last().expect("base present");
    if a.degree() != b.degree() || a.n_labels() != b.n_labels() {
        return Vec::new();
    }
    if earlier.is_empty() {
        return all_label_isos(a, b);
    }
    let d = a.degree();
    let (n1, n2) = (d - 2, d - 1);
    let joined = a.labels_between(n1, n2);
    let target = cycle_count_vectors(earlier.last().expect("nonempty"));
    let mut out = Vec::new();
    for (x, x2, red) in reductions(b) {
        if b.labels_between(x, x2) != joined || cycle_count_vectors(&red.cover) != target {
            continue;
        }
        for g in lift(earlier, &red.cover) {
            let mut f: Vec<usize> = g.0.iter().map(|&v| red.kept[v]).collect();
            f.extend([x, x2]);
            let f = LabelIso(f);
            if f.verify(a, b) && !out.contains(&f) {
                out.push(f);
            }
        }
    }
    out.sort();
    out
}

/// Equal homotopy certificates force equal degree.
pub fn degree_equality_check(x1: &OrbicomplexCover, x2: &OrbicomplexCover) -> bool {
    homotopy_certificate(x1) != homotopy_certificate(x2) || x1.cover.degree() == x2.cover.degree()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditPolicy {
    pub require_three_convex: bool,
    pub require_not_repetitive: bool,
    pub require_class_s: bool,
    /// `None` skips the surface check.
    pub assumption1: Option<GenusPolicy>,
}

impl Default for AuditPolicy {
    fn default() -> Self {
        Self {
            require_three_convex: true,
            require_not_repetitive: true,
            require_class_s: false,
            assumption1: Some(GenusPolicy::OrientableOnly),
        }
    }
}

impl AuditPolicy {
    pub fn unfiltered() -> Self {
        Self { require_three_convex: false, require_not_repetitive: false, require_class_s: false, assumption1: None }
    }
}

#[derive(Debug, Clone)]
pub struct AuditItem {
    pub name: String,
    pub graph: ThetaCycle,
    pub cover: SingularCover,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Excluded {
    pub name: String,
    pub reasons: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditPair {
    pub a: String,
    pub b: String,
    pub certificates_equal: bool,
    pub homeomorphic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Rigid,
    NotRigid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub verdict: Verdict,
    pub policy: AuditPolicy,
    pub included: Vec<String>,
    pub excluded: Vec<Excluded>,
    pub pairs: Vec<AuditPair>,
    pub violations: Vec<AuditPair>,
    /// Equal certificates with unequal degree; always empty when the degree argument holds.
    pub degree_violations: Vec<AuditPair>,
}

fn exclusion_reasons(item: &AuditItem, policy: &AuditPolicy) -> Result<Vec<String>, OrbicomplexCover> {
    let x = match attach_hats(&item.cover, &item.graph) {
        Ok(x) => x,
        Err(CoverError::LabelCountMismatch { cover, graph }) => {
            return Ok(vec![format!("cover has {cover} labels but the graph has {graph} thetas")])
        }
        Err(e) => return Ok(vec![e.to_string()]),
    };
    let mut reasons = Vec::new();
    if policy.require_three_convex && !is_three_convex(&item.graph) {
        reasons.push("graph is not 3-convex".to_string());
    }
    if policy.require_not_repetitive && !repetitive_witnesses(&item.graph).is_empty() {
        reasons.push("graph is repetitive".to_string());
    }
    if policy.require_class_s && class_s_recognize(&item.cover).is_none() {
        reasons.push("cover is not in class S".to_string());
    }
    if let Some(genus) = policy.assumption1 {
        if !assumption1_check(&x, genus).passes {
            reasons.push("surface assumption fails".to_string());
        }
    }
    if reasons.is_empty() {
        Err(x)
    } else {
        Ok(reasons)
    }
}

/// Pairwise certificate and homeomorphism comparison over the items that
/// pass `policy`. Output order follows input order at every `--jobs` level.
pub fn rigidity_audit(corpus: &[AuditItem], policy: &AuditPolicy) -> AuditReport {
    let screened: Vec<_> = corpus.par_iter().map(|item| exclusion_reasons(item, policy)).collect();
    let mut excluded = Vec::new();
    let mut kept: Vec<(&str, OrbicomplexCover, HomotopyCertificate)> = Vec::new();
    for (item, outcome) in corpus.iter().zip(screened) {
        match outcome {
            Ok(reasons) => excluded.push(Excluded { name: item.name.clone(), reasons }),
            Err(x) => {
                let cert = homotopy_certificate(&x);
                kept.push((&item.name, x, cert));
            }
        }
    }
    let index_pairs: Vec<(usize, usize)> =
        (0..kept.len()).flat_map(|i| (i + 1..kept.len()).map(move |j| (i, j))).collect();
    let results: Vec<(AuditPair, bool)> = index_pairs
        .par_iter()
        .map(|&(i, j)| {
            let (na, xa, ca) = &kept[i];
            let (nb, xb, cb) = &kept[j];
            let certificates_equal = ca == cb;
            let homeomorphic = homeomorphism_verdict(xa, xb).homeomorphic;
            let pair = AuditPair { a: na.to_string(), b: nb.to_string(), certificates_equal, homeomorphic };
            (pair, certificates_equal && xa.cover.degree() != xb.cover.degree())
        })
        .collect();
    let violations = results.iter().filter(|(p, _)| p.certificates_equal && !p.homeomorphic).map(|(p, _)| p.clone()).collect::<Vec<_>>();
    let degree_violations = results.iter().filter(|(_, bad)| *bad).map(|(p, _)| p.clone()).collect();
    AuditReport {
        verdict: if violations.is_empty() { Verdict::Rigid } else { Verdict::NotRigid },
        policy: *policy,
        included: kept.iter().map(|(n, _, _)| n.to_string()).collect(),
        excluded,
        pairs: results.into_iter().map(|(p, _)| p).collect(),
        violations,
        degree_violations,
    }
}
