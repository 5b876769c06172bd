//! Acceptance gate. Each criterion runs under a wall-clock limit and prints
//! one PASS/FAIL line; any failure makes the target exit nonzero.

use std::collections::BTreeSet;
use std::fs;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use simplicia::io::{from_json_str, to_json_string};
use simplicia::rational::{pow, ratio};
use simplicia::verify::oracle::scan_carrier;
use simplicia::verify::{
    brute_mesh, check_contraction, check_star_lemma, check_star_lemma_with, fault_cases, realization_equal,
    run_property_suite, Corpus,
};
use simplicia::{
    barycentric_flags, barycentric_subdivide, barycentric_subdivide_n, contraction_factor, induced_subdivision,
    is_subdivision, star_inclusion_vertices, subdivide_skeletonwise, subdivisions_needed, verify::corpus, Barycenter,
    GeometricComplex, MetricKind, Point, SubdivisionCheck,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Maximal edges of `k` lying on the segment `[a, b]`.
fn edges_on_segment(k: &GeometricComplex, a: &Point, b: &Point) -> usize {
    let on = |p: &Point| {
        let (d, e) = (b.sub(a), p.sub(a));
        let cross = &d[0] * &e[1] - &d[1] * &e[0];
        let dot = &d[0] * &e[0] + &d[1] * &e[1];
        let len = &d[0] * &d[0] + &d[1] * &d[1];
        cross == ratio(0, 1) && dot >= ratio(0, 1) && dot <= len
    };
    k.maximal().iter().filter(|s| s.len() == 2 && k.points_of(s).into_iter().all(on)).count()
}

fn subdivision_counts() -> Outcome {
    let t = corpus::triangle();
    let once = barycentric_subdivide_n(&t, 1).simplices_of_dim(2).len();
    let twice = barycentric_subdivide_n(&t, 2).simplices_of_dim(2).len();
    ensure(once == 6 && twice == 36, || format!("triangles: {once}, {twice}"))?;

    let k = corpus::triangle_with_tail();
    let (v0, w) = (k.point(k.vertex_by_label("v0").unwrap()), k.point(k.vertex_by_label("w").unwrap()));
    let tail: Vec<usize> = (1..=2).map(|n| edges_on_segment(&barycentric_subdivide_n(&k, n), v0, w)).collect();
    ensure(tail == [2, 4], || format!("tail edges: {tail:?}"))?;
    Ok("6 and 36 triangles, 2 and 4 tail edges".into())
}

fn low_dim(corpus: &Corpus, max: usize) -> impl Iterator<Item = (&str, &GeometricComplex)> {
    corpus.fixtures().iter().filter(move |f| f.complex.dim() <= max).map(|f| (f.name.as_str(), &f.complex))
}

fn oracle_equivalence() -> Outcome {
    let corpus = Corpus::shipped();
    let mut n = 0;
    for (name, k) in low_dim(&corpus, 3) {
        let direct = barycentric_subdivide(k).0;
        let reference = direct.geometric_signature();
        ensure(barycentric_flags(k).geometric_signature() == reference, || format!("{name}: flags differ"))?;
        let skeletal = subdivide_skeletonwise(k, &Barycenter).map_err(|e| format!("{name}: {e}"))?.0;
        ensure(skeletal.geometric_signature() == reference, || format!("{name}: skeletonwise differs"))?;
        n += 1;
    }
    Ok(format!("{n} fixtures"))
}

fn realization() -> Outcome {
    let corpus = Corpus::shipped();
    let mut pairs: Vec<(String, GeometricComplex, GeometricComplex)> = Vec::new();
    for f in corpus.fixtures() {
        pairs.push((format!("Bsd({})", f.name), barycentric_subdivide_n(&f.complex, 1), f.complex.clone()));
        pairs.push((format!("Bsd²({})", f.name), barycentric_subdivide_n(&f.complex, 2), f.complex.clone()));
    }
    pairs.push(("split-triangle".into(), corpus::split_triangle(), corpus::triangle()));
    pairs.push(("coned-triangle".into(), corpus::coned_triangle(), corpus::star_triangle()));
    for (name, l, k) in &pairs {
        let v = realization_equal(l, k, 300);
        ensure(v.passed(), || format!("{name}: {v}"))?;
    }
    Ok(format!("{} pairs", pairs.len()))
}

fn subdivision_relation() -> Outcome {
    let corpus = Corpus::shipped();
    let mut n = 0;
    for f in corpus.fixtures() {
        let chain: Vec<GeometricComplex> = (0..=2).map(|j| barycentric_subdivide_n(&f.complex, j)).collect();
        for j in 1..=2 {
            for i in 0..j {
                let check = is_subdivision(&chain[j], &chain[i]).map_err(|e| format!("{}: {e}", f.name))?;
                ensure(check.holds(), || format!("{}: Bsd^{j} vs Bsd^{i}: {:?}", f.name, check.refutation()))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} pairs"))
}

fn star_inclusion() -> Outcome {
    let corpus = Corpus::shipped();
    let mut n = 0;
    for (name, k) in low_dim(&corpus, 2) {
        let v = check_star_lemma(k).map_err(|e| format!("{name}: {e}"))?;
        ensure(v.passed() && v.note.is_none(), || format!("{name}: {v}"))?;
        n += 1;
    }
    let (k, fine) = (corpus::star_triangle(), corpus::coned_triangle());
    let witness = match is_subdivision(&fine, &k).map_err(|e| e.to_string())? {
        SubdivisionCheck::Holds(w) => w,
        SubdivisionCheck::Refuted(r) => return Err(r.to_string()),
    };
    let d = fine.vertex_by_label("D").unwrap();
    let found = star_inclusion_vertices(d, &fine, &witness).map_err(|e| e.to_string())?;
    let labels: BTreeSet<&str> = found.iter().map(|&v| fine.label(v)).collect();
    ensure(labels == BTreeSet::from(["A", "B", "C"]), || format!("coned apex: {labels:?}"))?;
    let carrier = scan_carrier(&k, fine.point(d)).ok_or("apex outside")?;
    ensure(carrier.len() == 3, || "apex carrier is not the triangle".into())?;
    let v = check_star_lemma_with(&k, &fine, &witness).map_err(|e| e.to_string())?;
    ensure(v.passed(), || format!("coned triangle: {v}"))?;
    Ok(format!("{n} fixtures, apex D -> {{A,B,C}}"))
}

fn mesh_contraction() -> Outcome {
    let corpus = Corpus::shipped();
    let mut n = 0;
    for f in corpus.fixtures().iter().filter(|f| (1..=3).contains(&f.complex.dim())) {
        let v = check_contraction(&f.complex, 4);
        ensure(v.passed(), || format!("{}: {v}", f.name))?;
        n += 1;
    }

    let k = corpus::standard_simplex(2);
    let eps = ratio(1, 10);
    ensure(brute_mesh(&k, MetricKind::Linf).exact() == Some(ratio(1, 1)), || "mesh of the standard triangle".into())?;
    let c = contraction_factor(2);
    ensure(c == ratio(2, 3), || "factor".into())?;
    ensure(pow(&c, 6) < eps && eps <= pow(&c, 5), || "(2/3)^6 < 1/10 <= (2/3)^5".into())?;
    let count = subdivisions_needed(&k, &eps, MetricKind::Linf).map_err(|e| e.to_string())?;
    ensure(count.bound == 6, || format!("N_bound = {}", count.bound))?;
    let measured = brute_mesh(&barycentric_subdivide_n(&k, count.actual), MetricKind::Linf);
    ensure(measured == count.certified_mesh && measured.less_than(&eps), || {
        format!("mesh after {} steps is {}", count.actual, measured.to_exact_string())
    })?;
    let before = brute_mesh(&barycentric_subdivide_n(&k, count.actual - 1), MetricKind::Linf);
    ensure(!before.less_than(&eps), || "N_actual is not minimal".into())?;
    Ok(format!("{n} fixtures to m = 4; N_bound = 6, N_actual = {}", count.actual))
}

fn induced_example() -> Outcome {
    let l = induced_subdivision(&corpus::split_triangle(), &corpus::edge(), &corpus::triangle())
        .map_err(|e| e.to_string())?;
    let got: BTreeSet<String> = l.simplices().map(|s| l.display(s)).collect();
    let want: BTreeSet<String> = ["[A]", "[B]", "[D]", "[A,D]", "[B,D]"].map(String::from).into();
    ensure(got == want, || format!("{got:?}"))?;
    Ok("{A, B, D, [AD], [BD]}".into())
}

fn property_suite() -> Outcome {
    let report = run_property_suite(&Corpus::shipped());
    let failures: Vec<String> = report.failures().map(|e| format!("{}/{}", e.fixture, e.property)).collect();
    ensure(failures.is_empty(), || format!("failed: {failures:?}"))?;
    let faults = fault_cases().map_err(|e| e.to_string())?;
    let missed: Vec<String> =
        faults.iter().filter(|f| f.verdict.passed()).map(|f| format!("{}/{}", f.checker, f.fault)).collect();
    ensure(missed.is_empty(), || format!("undetected faults: {missed:?}"))?;
    Ok(format!("{} entries, {} faults caught", report.entries.len(), faults.len()))
}

fn simplicia(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_simplicia")).args(args).output().map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr)))?;
    Ok(out.stdout)
}

fn cli_determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("simplicia-acceptance-{}", std::process::id()));
    fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let triangle = corpus::triangle();
    fs::write(path("triangle.json"), to_json_string(&triangle)).map_err(|e| e.to_string())?;

    let mut svgs = Vec::new();
    for run in 0..2 {
        let fine = path(&format!("bsd2-{run}.json"));
        simplicia(&["bsd", &path("triangle.json"), "-n", "2", "--out", &fine])?;
        svgs.push(simplicia(&["export", &fine, "--format", "svg"])?);
    }
    ensure(svgs[0] == svgs[1], || "svg differs between runs".into())?;
    ensure(fs::read(path("bsd2-0.json")).ok() == fs::read(path("bsd2-1.json")).ok(), || "json differs".into())?;

    let text = fs::read_to_string(path("bsd2-0.json")).map_err(|e| e.to_string())?;
    let loaded = from_json_str(&text).map_err(|e| e.to_string())?;
    ensure(loaded == barycentric_subdivide_n(&triangle, 2), || "loaded complex differs".into())?;
    ensure(to_json_string(&loaded) == text, || "serialization is not a fixed point".into())?;
    let closed = simplicia(&["closure", &path("bsd2-0.json")])?;
    ensure(closed == text.as_bytes(), || "closure output differs".into())?;
    let _ = fs::remove_dir_all(Path::new(&dir));
    Ok(format!("{} bytes of svg", svgs[0].len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 triangle and tail counts", Duration::from_secs(1), subdivision_counts),
        ("2 construction equivalence", Duration::from_secs(10), oracle_equivalence),
        ("3 realization preserved", Duration::from_secs(30), realization),
        ("4 subdivision chains", Duration::from_secs(30), subdivision_relation),
        ("5 star inclusion", Duration::from_secs(10), star_inclusion),
        ("6 mesh contraction", Duration::from_secs(60), mesh_contraction),
        ("7 induced subdivision", Duration::from_secs(1), induced_example),
        ("8 property suite", Duration::from_secs(120), property_suite),
        ("9 cli determinism", Duration::from_secs(5), cli_determinism),
    ];
    let mut failed = 0;
    for (name, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match verdict {
            Ok(detail) => println!("PASS  {name}  ({elapsed:.2?})  {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}  ({elapsed:.2?})  {why}");
            }
        }
    }
    println!("{} of 9 criteria passed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
