//! Homotopic but non-homeomorphic cover pairs.
//!
//! Two families: pairs over a single strongly repetitive graph (one theta's
//! branch orbifolds are finite covers of another's), and pairs over the two
//! graphs of a permuted pair. Every generated pair is re-verified before it
//! is returned.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cover::{
    attach_hats, bicolored_cycles, cut_pair_statistics, homeomorphism_verdict, homotopy_certificate,
    validate_cover, HomotopyCertificate, RawCover, SingularCover,
};
use crate::error::{CoverError, GeneratorError};
use crate::graph::{
    euler_char_vector, permuted_pair_bijections, repetitive_witnesses, vectors_commensurable,
    RepetitiveWitness, ThetaBijection, ThetaCycle,
};

/// How the generator's working labels map back onto the input graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Working label `l` is input label `l + shift`.
    Rotated,
    /// Working label `l` is input label `shift + 1 - l` (mod N); the ring is traversed backwards.
    Reflected,
}

/// A strongly repetitive witness rotated (or reflected) so that the smaller
/// theta is `Θ_1`, the larger is `Θ_k` with `2 ≤ k ≤ N - 1`, and
/// `r_{k,b} = K(r_{1,b} - 3) + 3` for every branch.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepetitiveGeneratorParams {
    pub graph: ThetaCycle,
    /// The input graph re-indexed into working labels.
    pub working_graph: ThetaCycle,
    pub k: usize,
    #[serde(rename = "K")]
    pub scale: u64,
    pub orientation: Orientation,
    /// Zero-based shift of the label map.
    pub shift: usize,
    /// Radical of `K` (product of its distinct primes).
    pub radical: u64,
    /// Cover degree: 4 when `K = 1`, else `2·radical·K`.
    pub degree: usize,
}

impl RepetitiveGeneratorParams {
    /// Normalizes `witness` against `graph`.
    pub fn normalize(graph: &ThetaCycle, witness: RepetitiveWitness) -> Result<Self, GeneratorError> {
        let n = graph.len();
        let RepetitiveWitness { i, k, big_k, big_l } = witness;
        if i == 0 || k == 0 || i > n || k > n || i == k {
            return Err(GeneratorError::InvalidWitness(format!("indices ({i}, {k}) out of range for N = {n}")));
        }
        if !witness.is_strong() {
            return Err(GeneratorError::NotStronglyRepetitive { i, k, big_k, big_l });
        }
        let holds = vectors_commensurable(
            &euler_char_vector(graph.theta(i)),
            &euler_char_vector(graph.theta(k)),
        ) == Some((big_k, big_l));
        if !holds {
            return Err(GeneratorError::InvalidWitness(format!(
                "K·ECV(Θ_{i}) ≠ L·ECV(Θ_{k}) for K = {big_k}, L = {big_l}"
            )));
        }
        // K·u = L·w with L = 1 makes Θ_k the K-fold larger theta.
        let (mut base, mut big, scale) = if big_l == 1 { (i - 1, k - 1, big_k) } else { (k - 1, i - 1, big_l) };
        let mut offset = (big + n - base) % n;
        if offset == n - 1 && scale == 1 {
            std::mem::swap(&mut base, &mut big);
            offset = (big + n - base) % n;
        }
        let (orientation, shift, working_graph, k_working) = if offset <= n - 2 {
            (Orientation::Rotated, base, graph.reindexed(|m| (base + m) % n), offset + 1)
        } else {
            // Θ_big sits just before Θ_base: traverse the ring backwards.
            (
                Orientation::Reflected,
                base + 2,
                graph.reindexed(|m| (base + n - m % n) % n),
                2,
            )
        };
        if !(2..=n - 1).contains(&k_working) {
            return Err(GeneratorError::WitnessNotNormalizable(format!("k = {k_working} with N = {n}")));
        }
        let small = working_graph.theta(1);
        let large = working_graph.theta(k_working);
        let scaled = small.branch_count() == large.branch_count()
            && small
                .reflection_edges()
                .zip(large.reflection_edges())
                .all(|(r1, rk)| rk + 3 * scale == scale * r1 + 3);
        if !scaled {
            return Err(GeneratorError::InvalidWitness(format!(
                "r_(k,b) ≠ K(r_(1,b) - 3) + 3 for K = {scale}"
            )));
        }
        let radical = radical(scale);
        let degree = if scale == 1 { 4 } else { (2 * radical * scale) as usize };
        Ok(Self {
            graph: graph.clone(),
            working_graph,
            k: k_working,
            scale,
            orientation,
            shift,
            radical,
            degree,
        })
    }

    /// Input label carried by working label `l` (both 1-based).
    pub fn input_label(&self, l: usize) -> usize {
        let n = self.graph.len();
        match self.orientation {
            Orientation::Rotated => (l - 1 + self.shift) % n + 1,
            Orientation::Reflected => (self.shift + 2 * n - l) % n + 1,
        }
    }

    fn to_input_frame(&self, cover: &SingularCover) -> SingularCover {
        let map: Vec<usize> = (1..=self.graph.len()).map(|l| self.input_label(l)).collect();
        cover.relabel_labels(&map)
    }
}

/// Product of the distinct prime factors of `k`.
pub fn radical(mut k: u64) -> u64 {
    let mut out = 1;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            out *= p;
            while k.is_multiple_of(p) {
                k /= p;
            }
        }
        p += 1;
    }
    if k > 1 {
        out *= k;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CounterexampleStatus {
    Counterexample,
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CounterexampleKind {
    StronglyRepetitive,
    PermutedPair,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleReport {
    pub kind: CounterexampleKind,
    pub graph_a: ThetaCycle,
    pub graph_b: ThetaCycle,
    pub cover_a: RawCover,
    pub cover_b: RawCover,
    pub certificate_a: HomotopyCertificate,
    pub certificate_b: HomotopyCertificate,
    pub certificates_equal: bool,
    pub homeomorphic: bool,
    pub cut_stats_a: Vec<usize>,
    pub cut_stats_b: Vec<usize>,
    pub status: CounterexampleStatus,
    pub notes: Vec<String>,
}

impl CounterexampleReport {
    fn assemble(
        kind: CounterexampleKind,
        graph_a: &ThetaCycle,
        cover_a: &SingularCover,
        graph_b: &ThetaCycle,
        cover_b: &SingularCover,
        notes: Vec<String>,
    ) -> Result<Self, CoverError> {
        let xa = attach_hats(cover_a, graph_a)?;
        let xb = attach_hats(cover_b, graph_b)?;
        let certificate_a = homotopy_certificate(&xa);
        let certificate_b = homotopy_certificate(&xb);
        let certificates_equal = certificate_a == certificate_b;
        let homeomorphic = homeomorphism_verdict(&xa, &xb).homeomorphic;
        let status = if certificates_equal && !homeomorphic {
            CounterexampleStatus::Counterexample
        } else {
            CounterexampleStatus::Degenerate
        };
        Ok(Self {
            kind,
            graph_a: graph_a.clone(),
            graph_b: graph_b.clone(),
            cover_a: cover_a.to_raw(),
            cover_b: cover_b.to_raw(),
            certificate_a,
            certificate_b,
            certificates_equal,
            homeomorphic,
            cut_stats_a: cut_pair_statistics(cover_a),
            cut_stats_b: cut_pair_statistics(cover_b),
            status,
            notes,
        })
    }

    /// The same report with the two sides exchanged.
    pub fn swapped(&self) -> Self {
        let mut out = self.clone();
        std::mem::swap(&mut out.graph_a, &mut out.graph_b);
        std::mem::swap(&mut out.cover_a, &mut out.cover_b);
        std::mem::swap(&mut out.certificate_a, &mut out.certificate_b);
        std::mem::swap(&mut out.cut_stats_a, &mut out.cut_stats_b);
        out
    }

    pub fn singular_covers(&self) -> Result<(SingularCover, SingularCover), CoverError> {
        Ok((SingularCover::from_raw(&self.cover_a)?, SingularCover::from_raw(&self.cover_b)?))
    }
}

/// Multiset of `(pair, half_length)` over the bicolored cycles.
pub type CycleInventory = BTreeMap<(usize, usize), usize>;

pub fn cycle_inventory(cover: &SingularCover) -> CycleInventory {
    let mut inv = CycleInventory::new();
    for c in bicolored_cycles(cover) {
        *inv.entry((c.pair, c.half_length)).or_default() += 1;
    }
    inv
}

fn labels_matched(n: usize, d: usize, pairs: impl Fn(usize) -> Vec<[usize; 2]>) -> Result<SingularCover, CoverError> {
    SingularCover::from_pairs(n, d, (1..=n).map(pairs).collect())
}

/// The two working-frame covers `(S̃₁, S̃₂)` for a normalized witness.
pub fn strongly_repetitive_covers(params: &RepetitiveGeneratorParams) -> Result<(SingularCover, SingularCover), CoverError> {
    let n = params.graph.len();
    let k = params.k;
    if params.scale == 1 {
        let outer = vec![[0, 3], [1, 2]];
        let inner = vec![[0, 1], [2, 3]];
        let s1 = labels_matched(n, 4, |l| if l <= k { outer.clone() } else { inner.clone() })?;
        let s2 = labels_matched(n, 4, |l| if l == 1 { outer.clone() } else { inner.clone() })?;
        return Ok((s1, s2));
    }
    let m = params.degree;
    let group = 2 * params.scale as usize;
    // v_i (1-based, cyclic) is vertex i - 1
    let v = |i: usize| (i - 1) % m;
    let odd_pairs: Vec<[usize; 2]> = (1..=m).step_by(2).map(|i| [v(i), v(i + 1)]).collect();
    let even_pairs: Vec<[usize; 2]> = (2..=m).step_by(2).map(|i| [v(i), v(i + 1)]).collect();
    let mut endpoint_pairs: Vec<[usize; 2]> = (0..params.radical as usize)
        .map(|g| [v(g * group + 1), v((g + 1) * group)])
        .collect();
    endpoint_pairs.extend(
        (2..=m)
            .step_by(2)
            .filter(|i| i % group != 0)
            .map(|i| [v(i), v(i + 1)]),
    );
    let s1 = labels_matched(n, m, |l| if (2..=k + 1).contains(&l) { even_pairs.clone() } else { odd_pairs.clone() })?;
    let s2 = labels_matched(n, m, |l| {
        if (2..=k).contains(&l) {
            endpoint_pairs.clone()
        } else if l == k + 1 {
            even_pairs.clone()
        } else {
            odd_pairs.clone()
        }
    })?;
    Ok((s1, s2))
}

/// Expected working-frame cycle inventories of `(S̃₁, S̃₂)`.
pub fn expected_inventories(params: &RepetitiveGeneratorParams) -> (CycleInventory, CycleInventory) {
    let n = params.graph.len();
    let k = params.k;
    let mut a = CycleInventory::new();
    let mut b = CycleInventory::new();
    if params.scale == 1 {
        for pair in 1..=n {
            if pair == k || pair == n {
                a.insert((pair, 2), 1);
            } else {
                a.insert((pair, 1), 2);
            }
            if pair == 1 || pair == n {
                b.insert((pair, 2), 1);
            } else {
                b.insert((pair, 1), 2);
            }
        }
        return (a, b);
    }
    let p = params.radical as usize;
    let q = params.scale as usize;
    for pair in 1..=n {
        if pair == 1 || pair == k + 1 {
            a.insert((pair, p * q), 1);
        } else {
            a.insert((pair, 1), p * q);
        }
        if pair == 1 {
            b.insert((pair, q), p);
        } else if pair == k {
            b.insert((pair, 1), p * q - p);
            b.insert((pair, p), 1);
        } else if pair == k + 1 {
            b.insert((pair, p * q), 1);
        } else {
            b.insert((pair, 1), p * q);
        }
    }
    (a, b)
}

/// Picks the first strong witness of `graph`.
pub fn first_strong_witness(graph: &ThetaCycle) -> Result<RepetitiveWitness, GeneratorError> {
    repetitive_witnesses(graph)
        .into_iter()
        .find(RepetitiveWitness::is_strong)
        .ok_or(GeneratorError::NoWitness)
}

pub fn gen_strongly_repetitive_pair(params: &RepetitiveGeneratorParams) -> Result<CounterexampleReport, GeneratorError> {
    let (s1, s2) = strongly_repetitive_covers(params)?;
    let (want_a, want_b) = expected_inventories(params);
    if cycle_inventory(&s1) != want_a || cycle_inventory(&s2) != want_b {
        return Err(GeneratorError::InvalidWitness("constructed cycle inventory differs from the derived one".into()));
    }
    let cover_a = params.to_input_frame(&s1);
    let cover_b = params.to_input_frame(&s2);
    let mut notes = vec![format!(
        "K = {}, k = {} in working labels ({:?}, shift {}), degree {}",
        params.scale, params.k, params.orientation, params.shift, params.degree
    )];
    if params.scale > 1 {
        notes.push(format!("radical p = {}, Q = K = {}, M = 2pQ = {}", params.radical, params.scale, params.degree));
    }
    let report = CounterexampleReport::assemble(
        CounterexampleKind::StronglyRepetitive,
        &params.graph,
        &cover_a,
        &params.graph,
        &cover_b,
        notes,
    )?;
    Ok(report)
}

/// Builds the four-vertex pair for a permuted pair witnessed by `sigma`.
pub fn gen_permuted_pair_covers(
    g1: &ThetaCycle,
    g2: &ThetaCycle,
    sigma: &ThetaBijection,
) -> Result<CounterexampleReport, GeneratorError> {
    if !sigma.witnesses(g1, g2) {
        return Err(GeneratorError::NotPermutedPair(format!("{:?} does not carry {g1} onto {g2}", sigma.0)));
    }
    let n = g1.len();
    // Θ'_j ≅ Θ_{N-1} and Θ'_k ≅ Θ_N carry the hats of S̃₁'s two four-cycles.
    let (mut j, mut k) = (sigma.image(n - 1), sigma.image(n));
    if j > k {
        std::mem::swap(&mut j, &mut k);
    }
    let first = vec![[0, 1], [2, 3]];
    let second = vec![[1, 2], [0, 3]];
    let s1 = labels_matched(n, 4, |l| if l < n { first.clone() } else { second.clone() })?;
    let s2 = labels_matched(n, 4, |l| if l > j && l <= k { first.clone() } else { second.clone() })?;
    let mut notes = vec![format!("sigma = {:?}, j = {j}, k = {k}", sigma.0)];
    let mut report =
        CounterexampleReport::assemble(CounterexampleKind::PermutedPair, g1, &s1, g2, &s2, Vec::new())?;
    if report.status == CounterexampleStatus::Degenerate {
        notes.push(if report.homeomorphic {
            "the two covers are homeomorphic: sigma realizes the same side partition".to_string()
        } else {
            "certificates differ".to_string()
        });
    }
    report.notes = notes;
    Ok(report)
}

/// Tries every witnessing bijection (up to `limit`) and returns the first
/// genuine counterexample, else the report for the first bijection.
pub fn search_permuted_pair(
    g1: &ThetaCycle,
    g2: &ThetaCycle,
    limit: usize,
) -> Result<CounterexampleReport, GeneratorError> {
    let sigmas = permuted_pair_bijections(g1, g2, limit);
    let mut first = None;
    for sigma in &sigmas {
        let report = gen_permuted_pair_covers(g1, g2, sigma)?;
        if report.status == CounterexampleStatus::Counterexample {
            return Ok(report);
        }
        first.get_or_insert(report);
    }
    first.ok_or_else(|| GeneratorError::NotPermutedPair(format!("{g1} and {g2} use different thetas")))
}

/// Recomputes every derived field of `report` and checks it matches.
pub fn verify_counterexample(report: &CounterexampleReport) -> bool {
    let valid = validate_cover(&report.cover_a, Some(&report.graph_a)).valid
        && validate_cover(&report.cover_b, Some(&report.graph_b)).valid;
    if !valid {
        return false;
    }
    let Ok((a, b)) = report.singular_covers() else {
        return false;
    };
    let Ok(fresh) = CounterexampleReport::assemble(report.kind, &report.graph_a, &a, &report.graph_b, &b, Vec::new())
    else {
        return false;
    };
    fresh.certificate_a == report.certificate_a
        && fresh.certificate_b == report.certificate_b
        && fresh.certificates_equal == report.certificates_equal
        && fresh.homeomorphic == report.homeomorphic
        && fresh.cut_stats_a == report.cut_stats_a
        && fresh.cut_stats_b == report.cut_stats_b
        && fresh.status == report.status
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{find_label_iso, surface_model};
    use crate::orbicomplex::JesterHat;

    fn scaled_graph() -> ThetaCycle {
        ThetaCycle::from_lists(&[&[2, 2][..], &[3], &[4, 4], &[3, 3, 3]]).unwrap()
    }

    #[test]
    fn radicals() {
        assert_eq!(radical(1), 1);
        assert_eq!(radical(3), 3);
        assert_eq!(radical(12), 6);
        assert_eq!(radical(8), 2);
    }

    #[test]
    fn scaled_graph_pair() {
        let g = scaled_graph();
        let params = RepetitiveGeneratorParams::normalize(&g, first_strong_witness(&g).unwrap()).unwrap();
        assert_eq!((params.k, params.scale, params.degree), (3, 3, 18));
        let report = gen_strongly_repetitive_pair(&params).unwrap();
        assert!(report.certificates_equal);
        assert!(!report.homeomorphic);
        assert_eq!(report.status, CounterexampleStatus::Counterexample);
        assert_ne!(report.cut_stats_a, report.cut_stats_b);
        assert!(verify_counterexample(&report));

        let (a, b) = report.singular_covers().unwrap();
        let xa = attach_hats(&a, &g).unwrap();
        let xb = attach_hats(&b, &g).unwrap();
        let long_a = xa.cycles.iter().find(|c| c.cycle.pair == 1).unwrap();
        assert_eq!(long_a.cycle.half_length, 9);
        assert_eq!(long_a.hats, vec![JesterHat { cone_points: 11 }; 2]);
        let short_b = xb.cycles.iter().find(|c| c.cycle.pair == 3 && c.cycle.half_length == 3).unwrap();
        assert_eq!(short_b.hats, vec![JesterHat { cone_points: 11 }; 2]);
    }

    #[test]
    fn k1_pair() {
        let g = ThetaCycle::from_lists(&[&[3, 3][..], &[4], &[3, 3], &[5, 6]]).unwrap();
        let w = first_strong_witness(&g).unwrap();
        let params = RepetitiveGeneratorParams::normalize(&g, w).unwrap();
        assert_eq!((params.k, params.scale, params.degree), (3, 1, 4));
        let report = gen_strongly_repetitive_pair(&params).unwrap();
        assert_eq!(report.status, CounterexampleStatus::Counterexample);
        let (a, b) = report.singular_covers().unwrap();
        assert_eq!(find_label_iso(&a, &b), None);
        for cover in [&a, &b] {
            let s = surface_model(cover);
            assert_eq!((s.genus, s.holes), (Some(0), 6));
        }
    }

    #[test]
    fn k2_inventory_identity() {
        // Θ_1 = Θ(4,4): r = 6; Θ_3 = Θ(7,7): r = 9 = 2(6 - 3) + 3
        let g = ThetaCycle::from_lists(&[&[4, 4][..], &[3], &[7, 7], &[3, 5]]).unwrap();
        let params = RepetitiveGeneratorParams::normalize(&g, first_strong_witness(&g).unwrap()).unwrap();
        assert_eq!((params.radical, params.scale, params.degree), (2, 2, 8));
        let report = gen_strongly_repetitive_pair(&params).unwrap();
        assert_eq!(report.status, CounterexampleStatus::Counterexample);
        // the 8-cone-point hat pair appears pQ = 4 times on each side
        for cert in [&report.certificate_a, &report.certificate_b] {
            assert_eq!(cert.hat_inventory.iter().filter(|h| **h == vec![8, 8]).count(), 4);
        }
    }

    #[test]
    fn reflection_when_large_theta_precedes() {
        // Θ(7,7) at index 4 sits just before Θ(4,4) at index 1 (cyclically)
        let g = ThetaCycle::from_lists(&[&[4, 4][..], &[3], &[3, 5], &[7, 7]]).unwrap();
        let w = first_strong_witness(&g).unwrap();
        assert_eq!((w.i, w.k, w.big_k, w.big_l), (1, 4, 2, 1));
        let params = RepetitiveGeneratorParams::normalize(&g, w).unwrap();
        assert_eq!(params.orientation, Orientation::Reflected);
        assert_eq!(params.k, 2);
        assert_eq!(params.working_graph.theta(1), g.theta(1));
        assert_eq!(params.working_graph.theta(2), g.theta(4));
        let report = gen_strongly_repetitive_pair(&params).unwrap();
        assert_eq!(report.status, CounterexampleStatus::Counterexample);
        assert!(verify_counterexample(&report));
    }

    #[test]
    fn unit_witness_at_wraparound_swaps_roles() {
        let g = ThetaCycle::from_lists(&[&[3, 3][..], &[4], &[3, 5], &[3, 3]]).unwrap();
        let w = first_strong_witness(&g).unwrap();
        assert_eq!((w.i, w.k), (1, 4));
        let params = RepetitiveGeneratorParams::normalize(&g, w).unwrap();
        assert_eq!(params.orientation, Orientation::Rotated);
        assert_eq!(params.k, 2);
        assert_eq!(gen_strongly_repetitive_pair(&params).unwrap().status, CounterexampleStatus::Counterexample);
    }

    #[test]
    fn normalization_errors() {
        let g = ThetaCycle::from_lists(&[&[3, 3][..], &[4], &[3, 3], &[5, 6]]).unwrap();
        let bad = RepetitiveWitness { i: 1, k: 2, big_k: 1, big_l: 1 };
        assert!(matches!(
            RepetitiveGeneratorParams::normalize(&g, bad),
            Err(GeneratorError::InvalidWitness(_))
        ));
        let weak = RepetitiveWitness { i: 1, k: 3, big_k: 2, big_l: 3 };
        assert!(matches!(
            RepetitiveGeneratorParams::normalize(&g, weak),
            Err(GeneratorError::NotStronglyRepetitive { .. })
        ));
    }

    #[test]
    fn permuted_pair_examples() {
        let g1 = ThetaCycle::from_lists(&[&[3, 3][..], &[3, 5], &[4, 4], &[3, 4]]).unwrap();
        let g2 = ThetaCycle::from_lists(&[&[3, 3][..], &[4, 4], &[3, 5], &[3, 4]]).unwrap();
        let sigma = crate::graph::is_permuted_pair(&g1, &g2).unwrap();
        let report = gen_permuted_pair_covers(&g1, &g2, &sigma).unwrap();
        assert!(report.certificates_equal);
        assert!(!report.homeomorphic);
        assert_eq!(report.status, CounterexampleStatus::Counterexample);
        let (a, b) = report.singular_covers().unwrap();
        for cover in [&a, &b] {
            let s = surface_model(cover);
            assert_eq!((s.genus, s.holes), (Some(0), 6));
        }

        let same = gen_permuted_pair_covers(&g1, &g1, &ThetaBijection(vec![1, 2, 3, 4])).unwrap();
        assert_eq!(same.status, CounterexampleStatus::Degenerate);
        assert!(same.homeomorphic);

        let bad = gen_permuted_pair_covers(&g1, &g2, &ThetaBijection(vec![1, 2, 3, 4]));
        assert!(matches!(bad, Err(GeneratorError::NotPermutedPair(_))));
    }

    #[test]
    fn verify_detects_tampering_and_accepts_swap() {
        let g = scaled_graph();
        let params = RepetitiveGeneratorParams::normalize(&g, first_strong_witness(&g).unwrap()).unwrap();
        let report = gen_strongly_repetitive_pair(&params).unwrap();
        assert!(verify_counterexample(&report.swapped()));
        let mut tampered = report.clone();
        tampered.cover_b.matchings[0].swap(0, 1);
        let [a, b] = tampered.cover_b.matchings[0][0];
        tampered.cover_b.matchings[0][0] = [a, b + 1];
        assert!(!verify_counterexample(&tampered));
        let mut flipped = report;
        flipped.homeomorphic = true;
        assert!(!verify_counterexample(&flipped));
    }
}
