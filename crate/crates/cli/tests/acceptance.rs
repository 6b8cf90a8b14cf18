//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use simatroid::dirac::{check_chordal_graph, simplicial_faces};
use simatroid::matroid::verify_full_duality;
use simatroid::{
    check_basic_linear_sequence, check_superdense, check_supersolvable, find_dperfect_sequence, gen_non_strong,
    gen_projective_plane, is_strongly_triangulable_brute, is_triangulable, with_field, DPerfectCertificate, Face,
    Field, FieldSpec, HypercliqueComplex, PrimeField, Rationals, SearchStrategy, SimplicialMatroid,
    StrongDecomposer,
};
use simatroid_cli::{gen_random, parse_certificates, parse_instance, run_command, Command, Density, Options};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn faces(list: &str) -> Vec<Face> {
    list.split_whitespace().map(|s| s.parse().unwrap()).collect()
}

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

const NINE: &str = "\
9 3
1 2 3
1 2 4
1 2 5
1 4 5
2 4 5
1 3 6
1 3 7
1 6 7
3 6 7
2 3 8
2 3 9
2 8 9
3 8 9
";

const NINE_SEQUENCE: &str = "45 67 89 15 14 16 17 28 29 12";
const NINE_FACETS: &str = "18 19 26 27 34 35 46 47 48 49 56 57 58 59 68 69 78 79 123 1245 1367 2389";

fn dperfect_from_sequence(c: &HypercliqueComplex, seq: &[Face]) -> DPerfectCertificate {
    let mut cur = c.clone();
    let peeled = seq
        .iter()
        .map(|&v| {
            let s = cur.star(v);
            cur = cur.star_delete(v);
            s
        })
        .collect();
    DPerfectCertificate { sequence: seq.to_vec(), peeled }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let inst = parse_instance(NINE).map_err(|e| e.to_string())?;
    let c = inst.complex().map_err(|e| e.to_string())?;
    ensure(c.generators().len() == 13, || "expected 13 triples".into())?;
    ensure(c.skeleton(4) == faces("1245 1367 2389"), || format!("4-faces {:?}", c.skeleton(4)))?;
    ensure(c.skeleton(5).is_empty(), || "5-faces present".into())?;
    let mut facets = c.facets().to_vec();
    facets.sort();
    let mut expected = faces(NINE_FACETS);
    expected.sort();
    ensure(facets == expected, || format!("facets {facets:?}"))?;
    let seq = faces(NINE_SEQUENCE);
    let cert = dperfect_from_sequence(&c, &seq);
    for spec in [FieldSpec::gf2(), FieldSpec::Rationals] {
        with_field!(spec, |f| {
            let m = SimplicialMatroid::new(c.clone(), f).map_err(|e| e.to_string())?;
            ensure(m.rank() == 10, || format!("rank {} over {spec}", m.rank()))?;
            ensure(check_basic_linear_sequence(&m, &seq), || format!("not basic linear over {spec}"))?;
            cert.verify(&c, &f).map_err(|e| format!("over {spec}: {e}"))?;
        });
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("rank 10, 22 facets, sequence verified in {:?}", start.elapsed()))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let c = gen_projective_plane();
    ensure(c.generators().len() == 10, || "expected 10 faces".into())?;
    ensure(simplicial_faces(&c).is_empty(), || "found a simplicial 2-face".into())?;
    let q = SimplicialMatroid::new(c.clone(), Rationals::new()).map_err(|e| e.to_string())?;
    ensure(find_dperfect_sequence(&q, SearchStrategy::Backtracking).unwrap().is_none(), || "D-perfect".into())?;
    ensure(q.rank() == 10, || format!("rank {} over q", q.rank()))?;
    ensure(q.circuits_brute(10).unwrap().is_empty(), || "circuits over q".into())?;
    ensure(check_supersolvable(&q), || "not supersolvable over q".into())?;
    let m2 = SimplicialMatroid::new(c, gf(2)).map_err(|e| e.to_string())?;
    ensure(m2.rank() == 9, || format!("rank {} over GF(2)", m2.rank()))?;
    let circ = m2.circuits_brute(10).unwrap();
    ensure(circ.len() == 1 && circ[0].len() == 10, || format!("circuits {circ:?}"))?;
    ensure(!is_triangulable(&m2), || "triangulable over GF(2)".into())?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("rank 10 over q, rank 9 with one 10-circuit over GF(2), in {:?}", start.elapsed()))
}

/// 500 graphs, `n` in 4..=8, densities 0.3 to 0.9.
fn graph_corpus() -> Vec<HypercliqueComplex> {
    let densities = ["3/10", "9/20", "3/5", "3/4", "9/10"];
    (0..500u64)
        .map(|seed| {
            let n = 4 + (seed % 5) as usize;
            let d: Density = densities[(seed / 5 % 5) as usize].parse().unwrap();
            gen_random(n, 2, d, seed).unwrap().complex().unwrap()
        })
        .collect()
}

/// 200 triple systems, `n` in 5..=7.
fn triple_corpus() -> Vec<HypercliqueComplex> {
    let densities = ["2/5", "11/20", "7/10", "17/20"];
    (0..200u64)
        .map(|seed| {
            let n = 5 + (seed % 3) as usize;
            let d: Density = densities[(seed / 3 % 4) as usize].parse().unwrap();
            gen_random(n, 3, d, 10_000 + seed).unwrap().complex().unwrap()
        })
        .collect()
}

fn criterion_3(graphs: &[HypercliqueComplex]) -> Check {
    let start = Instant::now();
    let mut chordal = 0;
    for c in graphs {
        let m = SimplicialMatroid::new(c.clone(), gf(2)).unwrap();
        let dp = find_dperfect_sequence(&m, SearchStrategy::Backtracking).unwrap().is_some();
        let ch = check_chordal_graph(c.generators(), c.n());
        ensure(dp == ch, || format!("disagreement on {:?} (n = {})", c.generators(), c.n()))?;
        chordal += ch as usize;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("{} graphs agree ({chordal} chordal) in {:?}", graphs.len(), start.elapsed()))
}

fn criterion_4(graphs: &[HypercliqueComplex], triples: &[HypercliqueComplex]) -> Check {
    let start = Instant::now();
    let mut positive = 0;
    for c in graphs.iter().chain(triples) {
        let m = SimplicialMatroid::new(c.clone(), gf(2)).unwrap();
        let dp = find_dperfect_sequence(&m, SearchStrategy::Backtracking).unwrap().is_some();
        let sd = check_superdense(&m).unwrap().is_some();
        ensure(dp == sd, || format!("disagreement on {:?}", c.generators()))?;
        positive += dp as usize;
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "{} instances agree ({positive} D-perfect) in {:?}",
        graphs.len() + triples.len(),
        start.elapsed()
    ))
}

/// Decomposes every circuit; `None` when enumeration exceeds its budget.
fn decompose_all<F: Field>(m: &SimplicialMatroid<F>) -> Result<Option<usize>, String> {
    let Some(cert) = find_dperfect_sequence(m, SearchStrategy::Backtracking).unwrap() else {
        return Ok(Some(0));
    };
    let dec = StrongDecomposer::new(m, &cert).map_err(|e| e.to_string())?;
    let circuits = match m.circuits(1e7) {
        Ok(c) => c,
        Err(_) => return Ok(None),
    };
    for &c in &circuits {
        let d = m.circuit_vector(c).unwrap();
        let t = dec.decompose(&d).map_err(|e| format!("{:?}: {e}", m.faces_of(c)))?;
        t.verify(m.complex()).map_err(|e| e.to_string())?;
    }
    Ok(Some(circuits.len()))
}

fn criterion_5(graphs: &[HypercliqueComplex], triples: &[HypercliqueComplex]) -> Check {
    let (mut circuits, mut skipped) = (0, 0);
    for c in graphs.iter().chain(triples) {
        let q = SimplicialMatroid::new(c.clone(), Rationals::new()).unwrap();
        let two = SimplicialMatroid::new(c.clone(), gf(2)).unwrap();
        for r in [decompose_all(&q)?, decompose_all(&two)?] {
            match r {
                Some(n) => circuits += n,
                None => skipped += 1,
            }
        }
    }
    Ok(format!("{circuits} circuits decomposed over q and GF(2); {skipped} runs over the enumeration budget"))
}

fn criterion_6(graphs: &[HypercliqueComplex], triples: &[HypercliqueComplex]) -> Check {
    let (mut checked, mut circuits) = (0, 0);
    for c in graphs.iter().chain(triples).filter(|c| c.generators().len() <= 18) {
        let k = c.k();
        let m = SimplicialMatroid::new(c.clone(), gf(2)).unwrap();
        let all = m.circuits_brute(m.ground().len()).unwrap();
        ensure(all.iter().all(|s| s.len() > k), || format!("circuit below k+1 in {:?}", c.generators()))?;
        let small: BTreeSet<Vec<Face>> = all.iter().filter(|s| s.len() == k + 1).map(|&s| m.faces_of(s)).collect();
        let expected: BTreeSet<Vec<Face>> = m.small_circuits().into_iter().map(|s| s.members).collect();
        ensure(small == expected, || format!("(k+1)-circuits differ on {:?}", c.generators()))?;
        checked += 1;
        circuits += all.len();
    }
    Ok(format!("{checked} instances, {circuits} circuits, zero violations"))
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let mut cases = 0;
    for n in 4..=6 {
        for k in 2..=n - 2 {
            for p in [2, 3] {
                ensure(verify_full_duality(n, k, &gf(p)).unwrap(), || format!("n={n} k={k} GF({p})"))?;
                cases += 1;
            }
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!("{cases} cases in {:?}", start.elapsed()))
}

fn criterion_8() -> Check {
    for (n, k) in [(5, 2), (6, 3), (7, 2), (7, 3), (7, 4)] {
        let c = gen_non_strong(n, k).unwrap();
        ensure(simplicial_faces(&c).is_empty(), || format!("({n},{k}) has a simplicial face"))?;
        let m = SimplicialMatroid::new(c, gf(2)).unwrap();
        ensure(is_triangulable(&m), || format!("({n},{k}) not triangulable"))?;
        let strong = is_strongly_triangulable_brute(&m, 1e8).map_err(|e| format!("({n},{k}): {e}"))?;
        ensure(!strong, || format!("({n},{k}) strongly triangulable"))?;
    }
    Ok("5 parameter pairs: triangulable, not strongly, no simplicial face".into())
}

fn criterion_9() -> Check {
    for seed in 0..100u64 {
        let n = 4 + (seed % 6) as usize;
        let c = gen_random(n, 2, "1/2".parse().unwrap(), 50_000 + seed).unwrap().complex().unwrap();
        let ranks: Vec<usize> = [2, 3, 5]
            .into_iter()
            .map(|p| SimplicialMatroid::new(c.clone(), gf(p)).unwrap().rank())
            .chain([SimplicialMatroid::new(c.clone(), Rationals::new()).unwrap().rank()])
            .collect();
        ensure(ranks.iter().all(|&r| r == ranks[0]), || format!("ranks {ranks:?} on {:?}", c.generators()))?;
    }
    let pp = gen_projective_plane();
    let r2 = SimplicialMatroid::new(pp.clone(), gf(2)).unwrap().rank();
    let rq = SimplicialMatroid::new(pp, Rationals::new()).unwrap().rank();
    ensure((r2, rq) == (9, 10), || format!("projective plane ranks {r2} vs {rq}"))?;
    Ok("100 graphs field-independent; projective plane 9 vs 10".into())
}

fn criterion_10(graphs: &[HypercliqueComplex], triples: &[HypercliqueComplex]) -> Check {
    let mut verified = 0;
    let small = graphs.iter().step_by(5).chain(triples.iter().step_by(2));
    for (i, c) in small.enumerate() {
        let text = simatroid_cli::Instance::from_complex(c, None).to_text();
        for (cmd, field) in [(Command::Perfect, "2"), (Command::Superdense, "q"), (Command::Decompose, "3")] {
            let opts = Options { field: Some(field.parse().unwrap()), ..Options::default() };
            let out = run_command(cmd, Some(&text), &format!("corpus-{i}"), &opts).map_err(|e| e.to_string())?;
            // Only the serialized report crosses this line.
            for cert in parse_certificates(&out.text).map_err(|e| e.to_string())? {
                cert.verify().map_err(|e| format!("corpus-{i} {cmd}: {e}"))?;
                verified += 1;
            }
        }
    }
    ensure(verified > 0, || "no certificates emitted".into())?;
    Ok(format!("{verified} certificates re-verified from text"))
}

fn main() -> ExitCode {
    let graphs = graph_corpus();
    let triples = triple_corpus();
    let results: Vec<(&str, Check)> = vec![
        ("1 nine-vertex example", criterion_1()),
        ("2 projective plane", criterion_2()),
        ("3 chordal iff D-perfect", criterion_3(&graphs)),
        ("4 D-perfect iff superdense", criterion_4(&graphs, &triples)),
        ("5 strong decomposition", criterion_5(&graphs, &triples)),
        ("6 circuit sizes", criterion_6(&graphs, &triples)),
        ("7 full duality", criterion_7()),
        ("8 non-strong family", criterion_8()),
        ("9 field independence for graphs", criterion_9()),
        ("10 certificate round trip", criterion_10(&graphs, &triples)),
    ];
    let mut failed = 0;
    for (name, r) in &results {
        match r {
            Ok(msg) => println!("PASS criterion {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name}: {msg}");
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
