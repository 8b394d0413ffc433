//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use common::{
    all_bodies, geometric_vertices_edges, integer_rows3, random_config, random_degenerate_rank3,
    random_uniform_config,
};
use om_core::arrangement::{read_rank1, read_rank2, represent_rank1, represent_rank2};
use om_core::chirotope::check_chirotope;
use om_core::covector::{face_census, topes, FaceCensus};
use om_core::fm::fm_realizable_topes;
use om_core::hyperline::{
    check_hyperline, from_chirotope, from_sign_map, hls_equal, to_chirotope, Rank1, Rank2,
    Representative,
};
use om_core::{Chirotope, Hls, SignMap, SignedElement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || {
        format!("{what} took {t:.2?}, limit {limit:?}")
    })?;
    Ok(t)
}

fn om(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_om"))
        .args(args)
        .env_remove("OM_SIZE_OVERRIDE")
        .output()
        .expect("run om")
}

/// Chirotopes of random full-rank integer configurations, entries in
/// [-5, 5], n <= 7, r <= 4.
fn roundtrip_corpus() -> Vec<Chirotope> {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    (0..220)
        .map(|_| {
            let r = rng.gen_range(1..=4);
            let n = rng.gen_range(r..=7);
            random_config(&mut rng, n, r, -5, 5).chirotope().unwrap()
        })
        .collect()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let mut accepted = BTreeSet::new();
    let mut via_hls = BTreeSet::new();
    for body in all_bodies(6, false) {
        let m = SignMap::standard(4, 2, body.clone()).unwrap();
        if check_chirotope(&m).unwrap().is_valid() {
            accepted.insert(body.clone());
        }
        if let Ok(x) = from_sign_map(&m, Representative::Smallest) {
            let bases: BTreeSet<_> = m.bases().into_iter().collect();
            if check_hyperline(&x).unwrap().is_valid() && x.bases() == bases {
                via_hls.insert(body);
            }
        }
    }
    let t = within(start, Duration::from_secs(10), "729 sign maps")?;
    ensure(accepted == via_hls, || {
        let diff: Vec<_> = accepted.symmetric_difference(&via_hls).take(3).collect();
        format!("sets differ, e.g. {diff:?}")
    })?;
    Ok(format!(
        "729 sign maps, {} chirotopes in both sets, {t:.2?}",
        accepted.len()
    ))
}

fn criterion_2(corpus: &[Chirotope]) -> Check {
    let start = Instant::now();
    for chi in corpus {
        let back = to_chirotope(&from_chirotope(chi).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure(
            back.values() == chi.values() && back.labels() == chi.labels(),
            || format!("roundtrip changed {}", chi.body_string()),
        )?;
    }
    let t = within(start, Duration::from_secs(60), "roundtrips")?;
    Ok(format!(
        "{} roundtrips, 0 mismatches, {t:.2?}",
        corpus.len()
    ))
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let count = 520;
    for _ in 0..count {
        let r = rng.gen_range(1..=4);
        let n = rng.gen_range(r..=7);
        let v = random_config(&mut rng, n, r, -5, 5);
        let report = check_chirotope(v.chirotope().unwrap().as_map()).unwrap();
        ensure(
            report.violations.is_empty() && report.notes.is_empty(),
            || format!("{:?}: {report}", v.rows()),
        )?;
    }
    Ok(format!("{count} realizations, all reports empty"))
}

fn criterion_4() -> Check {
    let mut counts = Vec::new();
    for r in 1..=4 {
        let o = om(&["enumerate", &r.to_string(), &r.to_string()]);
        let text = String::from_utf8_lossy(&o.stdout).to_string();
        ensure(o.status.success() && text == "2\n", || {
            format!("r={r}: {text:?}")
        })?;
        counts.push(2);
    }
    Ok(format!("enumerate(r,r) for r=1..4: {counts:?}"))
}

fn criterion_5() -> Check {
    let start = Instant::now();
    for sign in [1, -1] {
        let c = face_census(&Chirotope::coordinate(2, sign)).map_err(|e| e.to_string())?;
        ensure(
            c == FaceCensus {
                vertices: 6,
                edges: 12,
                faces: 8,
                euler: 2,
            },
            || format!("coordinate arrangement: {c}"),
        )?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut uniform = 0;
    for n in 4..=6 {
        for _ in 0..5 {
            let v = random_uniform_config(&mut rng, n, 3, 6);
            let c = face_census(&v.chirotope().unwrap()).map_err(|e| e.to_string())?;
            let want = FaceCensus {
                vertices: n * (n - 1),
                edges: 2 * n * (n - 1),
                faces: n * (n - 1) + 2,
                euler: 2,
            };
            ensure(c == want, || format!("uniform n={n}: {c}"))?;
            uniform += 1;
        }
    }
    let mut degenerate = 0;
    while degenerate < 60 {
        let n = rng.gen_range(4..=6);
        let v = random_degenerate_rank3(&mut rng, n);
        let c = face_census(&v.chirotope().unwrap()).map_err(|e| e.to_string())?;
        let (vertices, edges) = geometric_vertices_edges(&integer_rows3(&v));
        let faces = fm_realizable_topes(&v).map_err(|e| e.to_string())?.len();
        ensure(
            (c.vertices, c.edges, c.faces, c.euler) == (vertices, edges, faces, 2),
            || {
                format!(
                    "{:?}: {c}, oracle V={vertices} E={edges} F={faces}",
                    v.rows()
                )
            },
        )?;
        degenerate += 1;
    }
    let t = within(start, Duration::from_secs(60), "census")?;
    Ok(format!(
        "octahedron x2, {uniform} uniform (n=4..6), {degenerate} non-uniform vs geometry+FM, {t:.2?}"
    ))
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut done = [0usize; 2];
    for (slot, r, count) in [(0, 3, 110), (1, 2, 30)] {
        for _ in 0..count {
            let n = rng.gen_range(r..=6);
            let v = random_config(&mut rng, n, r, -4, 4);
            let ours = topes(&v.chirotope().unwrap()).map_err(|e| e.to_string())?;
            let fm = fm_realizable_topes(&v).map_err(|e| e.to_string())?;
            ensure(ours == fm, || {
                format!("{:?}: {} vs {} topes", v.rows(), ours.len(), fm.len())
            })?;
            done[slot] += 1;
        }
    }
    Ok(format!(
        "{} rank-3 and {} rank-2 configs agree",
        done[0], done[1]
    ))
}

fn criterion_7(corpus: &[Chirotope]) -> Check {
    let (mut contractions, mut deletions) = (0, 0);
    for chi in corpus {
        for &e in chi.labels() {
            if let Ok(c) = chi.contract(&[e]) {
                ensure(check_chirotope(&c).unwrap().is_valid(), || {
                    format!("{} / {e} fails", chi.body_string())
                })?;
                contractions += 1;
            }
        }
        if chi.n() > chi.rank() {
            let e = chi.find_deletable().map_err(|e| e.to_string())?;
            let d = chi.delete(&[e]).map_err(|e| e.to_string())?;
            ensure(d.is_valid() && d.map.rank() == chi.rank(), || {
                format!("{} \\ {e} fails", chi.body_string())
            })?;
            deletions += 1;
        }
    }
    Ok(format!(
        "{contractions} contractions and {deletions} deletions valid, 0 failures"
    ))
}

fn subsets_of(n: u32) -> Vec<Vec<u32>> {
    (1u32..1 << n)
        .map(|mask| (1..=n).filter(|e| mask & (1 << (e - 1)) != 0).collect())
        .collect()
}

/// Ordered partitions of `elems` into nonempty blocks.
fn ordered_partitions(elems: &[u32]) -> Vec<Vec<Vec<u32>>> {
    let Some((&first, rest)) = elems.split_first() else {
        return vec![vec![]];
    };
    let mut out = Vec::new();
    for p in ordered_partitions(rest) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].push(first);
            out.push(q);
        }
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, vec![first]);
            out.push(q);
        }
    }
    out
}

fn criterion_8() -> Check {
    let mut rank1 = 0;
    for n in 1..=4 {
        for ground in subsets_of(n) {
            for signs in 0u32..1 << ground.len() {
                let x = Rank1::from_chosen(
                    ground
                        .iter()
                        .enumerate()
                        .map(|(i, &e)| SignedElement::new(e, signs & (1 << i) != 0)),
                );
                let back = read_rank1(&represent_rank1(&x));
                ensure(hls_equal(&Hls::Rank1(back), &Hls::Rank1(x.clone())), || {
                    format!("rank 1: {x:?}")
                })?;
                rank1 += 1;
            }
        }
    }
    let mut bodies = BTreeSet::new();
    for ground in subsets_of(5) {
        for blocks in ordered_partitions(&ground) {
            for signs in 0u32..1 << ground.len() {
                let bar = |e: u32| signs & (1 << (e - 1)) != 0;
                let half: Vec<BTreeSet<SignedElement>> = blocks
                    .iter()
                    .map(|b| b.iter().map(|&e| SignedElement::new(e, bar(e))).collect())
                    .collect();
                let mut atoms = half.clone();
                atoms.extend(
                    half.iter()
                        .map(|a| a.iter().map(|s| s.involute()).collect()),
                );
                bodies.insert(Rank2::from_atoms(atoms));
            }
        }
    }
    for x in &bodies {
        let back = read_rank2(&represent_rank2(x).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure(hls_equal(&Hls::Rank2(back), &Hls::Rank2(x.clone())), || {
            format!("rank 2: {x:?}")
        })?;
    }
    Ok(format!(
        "{rank1} rank-1 bodies (n<=4), {} distinct rank-2 bodies (n<=5), all identical",
        bodies.len()
    ))
}

fn criterion_9() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut files = 0;
    for i in 0..12 {
        let r = rng.gen_range(1..=4);
        let n = rng.gen_range(r..=6);
        let chi = random_config(&mut rng, n, r, -4, 4).chirotope().unwrap();
        let path = dir.path().join(format!("c{i}.chi"));
        std::fs::write(&path, om_core::io::chi::serialize(chi.as_map())).unwrap();
        let p = path.to_str().unwrap();
        let a = om(&["convert", p, "--to", "hls"]);
        let b = om(&["convert", p, "--to", "hls"]);
        ensure(a.status.success() && a.stdout == b.stdout, || {
            format!("convert {p} differs")
        })?;
        let json = dir.path().join(format!("c{i}.json"));
        std::fs::write(&json, &a.stdout).unwrap();
        let c = om(&["convert", json.to_str().unwrap(), "--to", "chi"]);
        let d = om(&["convert", json.to_str().unwrap(), "--to", "chi"]);
        ensure(
            c.stdout == d.stdout && c.stdout == std::fs::read(&path).unwrap(),
            || format!("convert back {p} differs"),
        )?;
        files += 1;
    }
    let mut runs = 0;
    for args in [["5", "2"], ["4", "3"], ["5", "3"]] {
        let base = om(&["enumerate", args[0], args[1], "--list"]);
        ensure(base.status.success(), || {
            format!("enumerate {args:?} failed")
        })?;
        for jobs in ["1", "2", "4", "8"] {
            let o = om(&["enumerate", args[0], args[1], "--list", "--jobs", jobs]);
            ensure(o.stdout == base.stdout, || {
                format!("enumerate {args:?} --jobs {jobs} differs")
            })?;
            runs += 1;
        }
    }
    Ok(format!(
        "{files} convert pairs and {runs} sharded enumerations byte-identical"
    ))
}

fn main() {
    let corpus = roundtrip_corpus();
    let criteria: Vec<Criterion> = vec![
        (
            "exhaustive n=4 r=2 chirotope/hyperline equivalence",
            Box::new(criterion_1),
        ),
        ("roundtrip identity", Box::new(|| criterion_2(&corpus))),
        ("realization soundness", Box::new(criterion_3)),
        ("exactly two chirotopes with n = r", Box::new(criterion_4)),
        (
            "Euler characteristic of rank-3 censuses",
            Box::new(criterion_5),
        ),
        (
            "topes agree with the Fourier-Motzkin oracle",
            Box::new(criterion_6),
        ),
        ("minor coherence", Box::new(|| criterion_7(&corpus))),
        ("rank <= 2 represent/read roundtrip", Box::new(criterion_8)),
        (
            "byte determinism of convert and enumerate",
            Box::new(criterion_9),
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = match catch_unwind(AssertUnwindSafe(run)) {
            Ok(r) => r,
            Err(p) => Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into())),
        };
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
