//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_FAILURES` still print FAIL; they only affect the
//! exit status if they unexpectedly pass.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use davis_rigidity::counterexample::*;
use davis_rigidity::cover::*;
use davis_rigidity::graph::*;
use davis_rigidity::io::canonical_json;
use davis_rigidity::orbicomplex::*;
use davis_rigidity::rigidity::*;
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KNOWN_FAILURES: &[u32] = &[8];

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self { pass, detail: detail.into() }
    }
}

/// Every orbicomplex cover built by the other criteria, for the degree check.
#[derive(Default)]
struct Corpus {
    covers: Vec<OrbicomplexCover>,
}

impl Corpus {
    fn add(&mut self, graph: &ThetaCycle, cover: &SingularCover) {
        self.covers.push(attach_hats(cover, graph).expect("labels match"));
    }
}

fn scaled_graph() -> ThetaCycle {
    ThetaCycle::from_lists(&[&[2, 2][..], &[3], &[4, 4], &[3, 3, 3]]).unwrap()
}

fn c1_hat_formula() -> Outcome {
    let exact = jester_hat_cover(4, 6).map(|h| h.cone_points) == Ok(5);
    let mut checked = 0;
    let mut bad = Vec::new();
    for r in 3..=10u64 {
        for d in (2..=20u64).step_by(2) {
            let hat = jester_hat_cover(r, d).unwrap();
            let lhs = hat_euler_characteristic(hat);
            let rhs = -Rational::new((d * (r - 3)) as i64, 4);
            checked += 1;
            if lhs != rhs {
                bad.push((r, d));
            }
        }
    }
    Outcome::new(exact && bad.is_empty(), format!("c(4,6)=5: {exact}; closed form on {checked} (r,d), mismatches {bad:?}"))
}

fn c2_scaled_graph() -> Outcome {
    let g = scaled_graph();
    let w1 = euler_char_vector(g.theta(1));
    let w3 = euler_char_vector(g.theta(3));
    let quarter = |n: i64| vec![Rational::new(n, 4); 2];
    let vectors = w1.entries() == quarter(-1).as_slice() && w3.entries() == quarter(-3).as_slice();
    let witness = first_strong_witness(&g).ok();
    let ok = witness.is_some_and(|w| (w.i, w.k, w.big_k, w.big_l) == (1, 3, 3, 1));
    Outcome::new(vectors && ok, format!("w1 = -1/4 (x2), w3 = -3/4 (x2): {vectors}; witness {witness:?}"))
}

fn all_five_cycles(x: &OrbicomplexCover, pair: Option<usize>) -> usize {
    x.cycles
        .iter()
        .filter(|c| pair.is_none_or(|p| c.cycle.pair == p))
        .filter(|c| c.hats.iter().all(|h| h.cone_points == 5))
        .count()
}

fn c3_scaled_pair(corpus: &mut Corpus) -> Outcome {
    let g = scaled_graph();
    let params = RepetitiveGeneratorParams::normalize(&g, first_strong_witness(&g).unwrap()).unwrap();
    let report = gen_strongly_repetitive_pair(&params).unwrap();
    let (a, b) = report.singular_covers().unwrap();
    corpus.add(&g, &a);
    corpus.add(&g, &b);
    let valid = [&report.cover_a, &report.cover_b].iter().all(|c| validate_cover(c, Some(&g)).valid);
    let sheets = a.degree() == 18 && b.degree() == 18;
    let no_iso = find_label_iso(&a, &b).is_none();
    let cuts_differ = report.cut_stats_a != report.cut_stats_b;

    let xa = attach_hats(&a, &g).unwrap();
    let xb = attach_hats(&b, &g).unwrap();
    let eleven = vec![JesterHat { cone_points: 11 }; 2];
    let long_over_1 = xa.cycles.iter().any(|c| c.cycle.pair == 1 && c.cycle.half_length == 9 && c.hats == eleven);
    let short_over_3 = xb.cycles.iter().any(|c| c.cycle.pair == 3 && c.cycle.half_length == 3 && c.hats == eleven);
    let (p, q) = (3, 3);
    let fives_a = all_five_cycles(&xa, None);
    let fives_b = (all_five_cycles(&xb, Some(3)), all_five_cycles(&xb, Some(1)));
    let fives = fives_a == p * q && fives_b == (p * q - p, p) && all_five_cycles(&xb, None) == p * q;

    let pass = valid && sheets && report.certificates_equal && no_iso && cuts_differ && long_over_1 && short_over_3 && fives;
    Outcome::new(
        pass,
        format!(
            "valid {valid}, d=18 {sheets}, certificates equal {}, no iso {no_iso}, cut stats differ {cuts_differ}, \
             11-hats {long_over_1}/{short_over_3}, 5-hat cycles A={fives_a} B={}+{}",
            report.certificates_equal, fives_b.0, fives_b.1
        ),
    )
}

fn random_branches(rng: &mut ChaCha8Rng) -> Vec<u32> {
    let count = rng.gen_range(1..=3);
    (0..count).map(|_| rng.gen_range(1..=9)).collect()
}

fn c4_equal_theta_pairs(corpus: &mut Corpus) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut failures = Vec::new();
    let mut done = 0;
    while done < 20 {
        let n = rng.gen_range(3..=6);
        let mut lists: Vec<Vec<u32>> = (0..n).map(|_| random_branches(&mut rng)).collect();
        let i = rng.gen_range(0..n);
        let k = (i + rng.gen_range(1..n)) % n;
        if lists[i].iter().all(|&b| b == 1) {
            continue;
        }
        lists[k] = lists[i].clone();
        let Ok(graph) = ThetaCycle::from_lists_relaxed(&lists) else { continue };
        let (lo, hi) = (i.min(k) + 1, i.max(k) + 1);
        let witness = repetitive_witnesses(&graph).into_iter().find(|w| w.i == lo && w.k == hi).unwrap();
        let params = RepetitiveGeneratorParams::normalize(&graph, witness).unwrap();
        let report = gen_strongly_repetitive_pair(&params).unwrap();
        let (a, b) = report.singular_covers().unwrap();
        corpus.add(&graph, &a);
        corpus.add(&graph, &b);
        let surfaces_ok = [&a, &b].iter().all(|c| {
            let s = surface_model(c);
            s.genus == Some(0) && s.holes == 2 * n - 2
        });
        let ok = a.degree() == 4 && report.certificates_equal && !report.homeomorphic && surfaces_ok;
        if !ok {
            failures.push(lists);
        }
        done += 1;
    }
    Outcome::new(failures.is_empty(), format!("{done} graphs, failures {failures:?}"))
}

fn c5_permuted_pair(corpus: &mut Corpus) -> Outcome {
    let g1 = ThetaCycle::from_lists(&[&[3, 3][..], &[3, 5], &[4], &[3, 4]]).unwrap();
    let g2 = ThetaCycle::from_lists(&[&[3, 3][..], &[4], &[3, 5], &[3, 4]]).unwrap();
    let distinct = g1.thetas().iter().collect::<BTreeSet<_>>().len() == 4;
    let convex = is_three_convex(&g1) && is_three_convex(&g2);
    let report = match search_permuted_pair(&g1, &g2, 1000) {
        Ok(report) => report,
        Err(e) => return Outcome::new(false, e.to_string()),
    };
    let (a, b) = report.singular_covers().unwrap();
    corpus.add(&g1, &a);
    corpus.add(&g2, &b);
    let holes: Vec<_> = [&a, &b].iter().map(|c| surface_model(c)).map(|s| (s.genus, s.holes)).collect();
    let spheres = holes.iter().all(|&h| h == (Some(0), 6));
    let pass = distinct && convex && report.certificates_equal && !report.homeomorphic && spheres;
    Outcome::new(
        pass,
        format!(
            "distinct {distinct}, 3-convex {convex}, certificates equal {}, homeomorphic {}, (genus, holes) {holes:?}",
            report.certificates_equal, report.homeomorphic
        ),
    )
}

fn perfect_matchings(d: usize) -> Vec<Vec<[usize; 2]>> {
    fn go(free: &[usize], acc: &mut Vec<[usize; 2]>, out: &mut Vec<Vec<[usize; 2]>>) {
        let Some((&first, rest)) = free.split_first() else {
            out.push(acc.clone());
            return;
        };
        for (i, &other) in rest.iter().enumerate() {
            acc.push([first, other]);
            let remaining: Vec<usize> = rest.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect();
            go(&remaining, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(&(0..d).collect::<Vec<_>>(), &mut Vec::new(), &mut out);
    out
}

fn naive_isomorphic(a: &SingularCover, b: &SingularCover) -> bool {
    let d = a.degree();
    if d != b.degree() || a.n_labels() != b.n_labels() {
        return false;
    }
    (0..d).permutations(d).any(|pi| {
        (0..a.n_labels()).all(|l| (0..d).all(|v| b.partners()[l][pi[v]] == pi[a.partners()[l][v]]))
    })
}

const PAIR_CAP: usize = 100_000;

/// Every pair in small groups; in large groups all pairs within buckets of
/// equal cycle vectors (where isomorphic pairs live) up to half the budget,
/// the rest drawn uniformly.
fn oracle_pairs(covers: &[SingularCover], budget: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let all = covers.len() * (covers.len() + 1) / 2;
    if all <= budget {
        return (0..covers.len()).flat_map(|i| (i..covers.len()).map(move |j| (i, j))).collect();
    }
    let mut buckets: BTreeMap<CycleCountVectors, Vec<usize>> = BTreeMap::new();
    for (i, c) in covers.iter().enumerate() {
        buckets.entry(cycle_count_vectors(c)).or_default().push(i);
    }
    let mut within: Vec<(usize, usize)> =
        buckets.values().flat_map(|m| m.iter().tuple_combinations().map(|(&i, &j)| (i, j)).collect::<Vec<_>>()).collect();
    within.shuffle(rng);
    within.truncate(budget / 2);
    let mut pairs: BTreeSet<(usize, usize)> = within.into_iter().collect();
    while pairs.len() < budget {
        let i = rng.gen_range(0..covers.len());
        let j = rng.gen_range(0..covers.len());
        pairs.insert((i.min(j), i.max(j)));
    }
    pairs.into_iter().collect()
}

fn c6_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut groups = Vec::new();
    for n in 3..=4usize {
        for d in [2usize, 4, 6] {
            let matchings = perfect_matchings(d);
            let covers: Vec<SingularCover> = (0..n)
                .map(|_| matchings.iter())
                .multi_cartesian_product()
                .filter_map(|system| SingularCover::from_pairs(n, d, system.into_iter().cloned().collect()).ok())
                .collect();
            groups.push(((n, d), covers));
        }
    }
    let small: usize = groups.iter().map(|(_, c)| c.len() * (c.len() + 1) / 2).filter(|&p| p <= 10_000).sum();
    let large = groups.iter().filter(|(_, c)| c.len() * (c.len() + 1) / 2 > 10_000).count();
    let per_large = (PAIR_CAP - small) / large.max(1);

    let mut total = 0;
    let mut positives = 0;
    let mut disagreements = Vec::new();
    let mut sizes = Vec::new();
    for ((n, d), covers) in &groups {
        let budget = if covers.len() * (covers.len() + 1) / 2 <= 10_000 { usize::MAX } else { per_large };
        let pairs = oracle_pairs(covers, budget, &mut rng);
        sizes.push(format!("N={n},d={d}: {} covers/{} pairs", covers.len(), pairs.len()));
        for (i, j) in pairs {
            let (a, b) = (&covers[i], &covers[j]);
            let fast = find_label_iso(a, b);
            let slow = naive_isomorphic(a, b);
            let sound = fast.as_ref().is_none_or(|iso| iso.verify(a, b));
            if fast.is_some() != slow || !sound {
                disagreements.push((n, d, i, j));
            }
            positives += usize::from(slow);
            total += 1;
        }
    }
    Outcome::new(
        disagreements.is_empty() && total <= PAIR_CAP,
        format!("{total} pairs ({positives} isomorphic) [{}], disagreements {disagreements:?}", sizes.join("; ")),
    )
}

fn c7_degree(corpus: &Corpus) -> Outcome {
    let mut degrees: BTreeMap<HomotopyCertificate, BTreeSet<usize>> = BTreeMap::new();
    for x in &corpus.covers {
        degrees.entry(homotopy_certificate(x)).or_default().insert(x.cover.degree());
    }
    let bad = degrees.values().filter(|d| d.len() > 1).count();
    let betti = corpus.covers.iter().all(|x| {
        let (n, d) = (x.cover.n_labels() as i64, x.cover.degree() as i64);
        homotopy_certificate(x).betti_1 == d * (n - 2) / 2 + 1
    });
    let audit = rigidity_audit(
        &corpus
            .covers
            .iter()
            .enumerate()
            .map(|(i, x)| AuditItem { name: i.to_string(), graph: x.graph.clone(), cover: x.cover.clone() })
            .collect::<Vec<_>>(),
        &AuditPolicy::unfiltered(),
    );
    Outcome::new(
        bad == 0 && betti && audit.degree_violations.is_empty(),
        format!(
            "{} covers, {} certificates, mixed-degree certificates {bad}, betti formula {betti}, audit degree violations {}",
            corpus.covers.len(),
            degrees.len(),
            audit.degree_violations.len()
        ),
    )
}

fn c8_class_s(corpus: &mut Corpus) -> Outcome {
    let g = ThetaCycle::from_lists(&[&[3, 3][..], &[3, 5], &[4], &[3, 4]]).unwrap();
    let graph_ok = is_three_convex(&g) && !is_repetitive(&g);
    let all = enumerate_class_s(4, 8);

    let mut classes: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for (i, (_, cover)) in all.iter().enumerate() {
        classes.entry(canonical_code(cover)).or_default().push(i);
    }
    let reps: Vec<usize> = classes.values().map(|m| m[0]).collect();
    for &r in &reps {
        corpus.add(&g, &all[r].1);
    }

    // distinct classes: never isomorphic, so vectors must differ
    let vectors: Vec<CycleCountVectors> = reps.iter().map(|&r| cycle_count_vectors(&all[r].1)).collect();
    let mut class_pairs = 0;
    let mut collisions = 0;
    let mut recon_checked = 0;
    let mut recon_bad = 0;
    for (x, y) in (0..reps.len()).tuple_combinations() {
        class_pairs += 1;
        let (a, b) = (&all[reps[x]], &all[reps[y]]);
        if find_label_iso(&a.1, &b.1).is_some() {
            recon_bad += 1;
        }
        if vectors[x] == vectors[y] {
            collisions += 1;
            recon_checked += 1;
            match reconstruct_homeomorphism(&a.1, &b.1, &a.0, &b.0) {
                Ok(None) => {}
                _ => recon_bad += 1,
            }
        }
    }
    // same class: isomorphic, vectors equal, reconstruction must succeed
    let mut member_pairs = 0;
    let mut member_bad = 0;
    for members in classes.values() {
        let rep = &all[members[0]];
        for &m in &members[1..] {
            member_pairs += 1;
            recon_checked += 1;
            let other = &all[m];
            let vectors_equal = cycle_count_vectors(&rep.1) == cycle_count_vectors(&other.1);
            let rebuilt = matches!(
                reconstruct_homeomorphism(&rep.1, &other.1, &rep.0, &other.0),
                Ok(Some(ref iso)) if iso.verify(&rep.1, &other.1)
            );
            if !vectors_equal || !rebuilt || find_label_iso(&rep.1, &other.1).is_none() {
                member_bad += 1;
            }
        }
    }

    let items: Vec<AuditItem> = reps
        .iter()
        .map(|&r| AuditItem { name: format!("class{r}"), graph: g.clone(), cover: all[r].1.clone() })
        .collect();
    let policy = AuditPolicy { require_class_s: true, ..AuditPolicy::default() };
    let audit = rigidity_audit(&items, &policy);

    let complete = collisions == 0 && member_bad == 0;
    let reconstruction_agrees = recon_bad == 0 && member_bad == 0;
    let rigid = audit.verdict == Verdict::Rigid;
    Outcome::new(
        graph_ok && complete && reconstruction_agrees && rigid,
        format!(
            "{} sequences, {} classes; vectors equal on {collisions}/{class_pairs} non-isomorphic class pairs; \
             {member_pairs} isomorphic pairs ({member_bad} bad); reconstruction agrees with oracle on {recon_checked} pairs: \
             {reconstruction_agrees}; audit {:?} with {} violations over {} included",
            all.len(),
            classes.len(),
            audit.verdict,
            audit.violations.len(),
            audit.included.len()
        ),
    )
}

fn c9_torus() -> Outcome {
    let matchings = (0..3).map(|l| (0..3).map(|i| [i, 3 + (i + l) % 3]).collect()).collect();
    let cover = SingularCover::from_pairs(3, 6, matchings).unwrap();
    let single_cycles = (1..=3).all(|p| bicolored_cycles(&cover).iter().filter(|c| c.pair == p).count() == 1);
    let s = surface_model(&cover);
    Outcome::new(
        single_cycles && s.euler_char == 0 && s.orientable && s.genus == Some(1),
        format!("single 6-cycles {single_cycles}, chi {}, orientable {}, genus {:?}", s.euler_char, s.orientable, s.genus),
    )
}

fn cli(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_davis-rigidity")).args(args).output().expect("binary runs");
    (out.status.code(), out.stdout)
}

/// Runs a fixed session in `root`, returning every stdout, exit code and
/// written file with `root` masked out.
fn cli_session(root: &Path, jobs: &str) -> Vec<(String, String)> {
    fs::create_dir_all(root).unwrap();
    let p = |name: &str| root.join(name).display().to_string();
    fs::write(root.join("fig2.json"), r#"{"thetas": [[2,2],[3],[4,4],[3,3,3]]}"#).unwrap();
    fs::write(root.join("a.json"), r#"{"thetas": [[3,3],[3,5],[4],[3,4]]}"#).unwrap();
    fs::write(root.join("b.json"), r#"{"thetas": [[3,3],[4],[3,5],[3,4]]}"#).unwrap();
    let commands: Vec<Vec<String>> = vec![
        vec!["analyze".into(), "--graph".into(), p("fig2.json")],
        vec!["compare".into(), "--graph-a".into(), p("a.json"), "--graph-b".into(), p("b.json")],
        vec!["gen".into(), "double".into(), "--graph".into(), p("a.json"), "--out".into(), p("double")],
        vec!["gen".into(), "repetitive-pair".into(), "--graph".into(), p("fig2.json"), "--out".into(), p("rep")],
        vec!["gen".into(), "permuted-pair".into(), "--graph-a".into(), p("a.json"), "--graph-b".into(), p("b.json"), "--out".into(), p("perm")],
        vec!["gen".into(), "class-s".into(), "--graph".into(), p("a.json"), "--exhaustive".into(), "--max-degree".into(), "6".into(), "--out".into(), p("cls")],
        vec!["gen".into(), "class-s".into(), "--graph".into(), p("a.json"), "--random".into(), "--seed".into(), "7".into(), "--depth".into(), "3".into(), "--out".into(), p("rnd")],
        vec!["validate".into(), "--graph".into(), p("rep/graph_a.json"), "--cover".into(), p("rep/cover_a.json")],
        vec!["invariant".into(), "--graph".into(), p("rep/graph_b.json"), "--cover".into(), p("rep/cover_b.json")],
        vec!["certificate".into(), "--graph".into(), p("perm/graph_a.json"), "--cover".into(), p("perm/cover_a.json")],
        vec!["homeo".into(), "--graph-a".into(), p("rep/graph_a.json"), "--cover-a".into(), p("rep/cover_a.json"), "--graph-b".into(), p("rep/graph_b.json"), "--cover-b".into(), p("rep/cover_b.json")],
        vec!["audit".into(), "--corpus".into(), p("cls")],
        vec!["audit".into(), "--corpus".into(), p("rep"), "--no-filters".into()],
        vec!["--format".into(), "text".into(), "audit".into(), "--corpus".into(), p("perm"), "--no-filters".into()],
    ];
    let mask = root.display().to_string();
    let mut log = Vec::new();
    for (i, command) in commands.iter().enumerate() {
        let mut args = vec!["--jobs", jobs];
        args.extend(command.iter().map(String::as_str));
        let (code, stdout) = cli(&args);
        log.push((format!("cmd{i} exit {code:?}"), String::from_utf8_lossy(&stdout).replace(&mask, "<root>")));
    }
    let mut files: Vec<_> = walk(root);
    files.sort();
    for file in files {
        let body = String::from_utf8_lossy(&fs::read(&file).unwrap()).replace(&mask, "<root>");
        log.push((file.strip_prefix(root).unwrap().display().to_string(), body));
    }
    log
}

fn walk(dir: &Path) -> Vec<std::path::PathBuf> {
    let mut out = Vec::new();
    for entry in fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.is_dir() {
            out.extend(walk(&path));
        } else {
            out.push(path);
        }
    }
    out
}

fn round_trips(root: &Path) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for file in walk(root) {
        let name = file.file_name().unwrap().to_string_lossy().into_owned();
        if matches!(name.as_str(), "fig2.json" | "a.json" | "b.json") {
            continue;
        }
        let bytes = fs::read(&file).unwrap();
        let value: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
        let mut ok = canonical_json(&value).into_bytes() == bytes;
        if name.contains("cover") {
            let raw: RawCover = serde_json::from_slice(&bytes).unwrap();
            ok &= canonical_json(&raw).into_bytes() == bytes;
        } else if name.contains("graph") {
            let graph: ThetaCycle = serde_json::from_slice(&bytes).unwrap();
            ok &= canonical_json(&graph).into_bytes() == bytes;
        } else if name.contains("certificate") {
            let cert: ClassSCertificate = serde_json::from_slice(&bytes).unwrap();
            ok &= canonical_json(&cert).into_bytes() == bytes;
        }
        checked += 1;
        if !ok {
            bad.push(name);
        }
    }
    (checked, bad)
}

fn c10_determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let first = cli_session(&dir.path().join("one"), "1");
    let second = cli_session(&dir.path().join("two"), "1");
    let parallel = cli_session(&dir.path().join("four"), "4");
    let stable = first == second && first == parallel;
    let exits: Vec<&str> = first.iter().filter(|(k, _)| k.starts_with("cmd")).map(|(k, _)| k.as_str()).collect();
    let (checked, bad) = round_trips(&dir.path().join("one"));
    Outcome::new(
        stable && bad.is_empty() && checked > 0,
        format!("{} outputs byte-stable across runs and --jobs: {stable}; {checked} files round-trip, bad {bad:?}; {}", first.len(), exits.join(", ")),
    )
}

fn main() {
    let mut corpus = Corpus::default();
    type Criterion<'a> = (u32, &'a str, Duration, Box<dyn FnOnce(&mut Corpus) -> Outcome + 'a>);
    let criteria: Vec<Criterion> = vec![
        (1, "jester-hat formula", Duration::from_secs(1), Box::new(|_| c1_hat_formula())),
        (2, "scaled-graph vectors and witness", Duration::from_secs(1), Box::new(|_| c2_scaled_graph())),
        (3, "strongly repetitive pair, K = 3", Duration::from_secs(5), Box::new(c3_scaled_pair)),
        (4, "strongly repetitive pairs, K = 1", Duration::from_secs(10), Box::new(c4_equal_theta_pairs)),
        (5, "permuted pair", Duration::from_secs(2), Box::new(c5_permuted_pair)),
        (6, "isomorphism oracle", Duration::from_secs(120), Box::new(|_| c6_oracle())),
        (8, "class S completeness", Duration::from_secs(300), Box::new(c8_class_s)),
        (7, "equal certificates force equal degree", Duration::from_secs(60), Box::new(|c| c7_degree(c))),
        (9, "torus fixture", Duration::from_secs(1), Box::new(|_| c9_torus())),
        (10, "determinism and round-trip", Duration::from_secs(60), Box::new(|_| c10_determinism())),
    ];
    let mut results = Vec::new();
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run(&mut corpus);
        let elapsed = start.elapsed();
        let in_time = elapsed <= limit;
        let pass = outcome.pass && in_time;
        let known = KNOWN_FAILURES.contains(&id);
        let tag = match (pass, known) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (false, true) => "FAIL (known)",
            (true, true) => "PASS (unexpected)",
        };
        println!(
            "criterion {id:>2} {tag:<17} {name} [{:.2}s / {}s] {}",
            elapsed.as_secs_f64(),
            limit.as_secs(),
            outcome.detail
        );
        results.push((id, pass, known));
    }
    results.sort();
    let passed = results.iter().filter(|r| r.1).count();
    let unexpected: Vec<u32> = results.iter().filter(|r| r.1 == r.2).map(|r| r.0).collect();
    println!("{passed}/{} criteria pass; unexpected outcomes: {unexpected:?}", results.len());
    if !unexpected.is_empty() {
        std::process::exit(1);
    }
}
