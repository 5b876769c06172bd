//! Runs every invariant over a corpus and collects a report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::checks::*;
use super::corpus::{self, Corpus, Fixture};
use crate::carrier::barycentric_coordinates;
use crate::complex::{ComplexBuilder, GeometricComplex};
use crate::error::Result;
use crate::io::{from_json_str, to_json_string, to_json_value};
use crate::metric::{diameter, MetricKind};
use crate::point::Point;
use crate::rational::{ratio, Rational};
use crate::subdivision::{barycentric_subdivide, is_subdivision, subdivide_skeletonwise, SkewedApex, SubdivisionCheck};
use crate::validate::validate_complex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub fixture: String,
    pub property: String,
    pub status: Status,
    /// The fixture, in the JSON complex format, when the property fails.
    pub counterexample: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SuiteReport {
    pub entries: Vec<SuiteEntry>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// Probe budget for the realization checker.
const SAMPLES: usize = 300;

/// Subdivision depth for the contraction property, by dimension.
fn contraction_depth(dim: usize) -> usize {
    if dim <= 3 {
        4
    } else {
        2
    }
}

/// Runs each property on each fixture, in fixture-name order. A fixture
/// that is not a valid complex gets a single failing `valid` entry.
pub fn run_property_suite(corpus: &Corpus) -> SuiteReport {
    let mut entries = Vec::new();
    for fixture in corpus.fixtures() {
        let k = &fixture.complex;
        let mut record = |property: &str, outcome: Result<Verdict>| {
            let (status, detail) = match outcome {
                Ok(v) if v.passed() => (Status::Pass, v.note),
                Ok(v) => (Status::Fail, v.failure),
                Err(e) => (Status::Fail, Some(e.to_string())),
            };
            let counterexample = (status == Status::Fail).then(|| to_json_value(k));
            entries.push(SuiteEntry {
                fixture: fixture.name.clone(),
                property: property.to_string(),
                status,
                counterexample,
                detail,
            });
        };

        let report = validate_complex(k);
        if !report.is_valid() {
            record("valid", Ok(Verdict::fail(report.to_string().trim_end().to_string())));
            continue;
        }
        record("valid", Ok(Verdict::pass(1)));

        let (bsd, witness) = barycentric_subdivide(k);
        let bsd2 = barycentric_subdivide(&bsd).0;

        record("carrier-unique", check_carrier_uniqueness(k));
        record("barycentric-round-trip", Ok(check_round_trip(k, &fixture.name)));
        record("skeleton-composition", Ok(check_skeletons(k)));
        record("json-round-trip", check_json(k));
        record("constructions-valid", check_constructions(k, &bsd));
        record("oracle-equivalence", check_oracle_equivalence(k));
        record("witness-volume", Ok(check_witness_volumes(&bsd, k, &witness)));
        record(
            "realization",
            Ok(first_failure([realization_equal(&bsd, k, SAMPLES), realization_equal(&bsd2, k, SAMPLES)])),
        );
        record("transitivity", check_chain(&[k.clone(), bsd.clone(), bsd2.clone()]));
        if let Some(v) = check_counts(k, &bsd, &bsd2) {
            record("simplex-count", Ok(v));
        }
        record("star-membership", check_star_membership(k));
        record("star-lemma", check_star_lemma_with(k, &bsd, &witness));
        record("mesh-contraction", Ok(check_contraction(k, contraction_depth(k.dim()))));
        record("diameter-invariance", Ok(check_diameters(k)));
    }
    SuiteReport { entries }
}

fn first_failure<const N: usize>(verdicts: [Verdict; N]) -> Verdict {
    let mut checked = 0;
    for v in verdicts {
        if !v.passed() {
            return v;
        }
        checked += v.checked;
    }
    Verdict::pass(checked)
}

/// Weights recovered from `Σ λᵢ vᵢ` equal `λ`, for seeded random `λ`.
fn check_round_trip(k: &GeometricComplex, name: &str) -> Verdict {
    let seed = name.bytes().fold(0u64, |h, b| h.wrapping_mul(31).wrapping_add(u64::from(b)));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0;
    for s in k.simplices() {
        for _ in 0..3 {
            let raw: Vec<i64> = (0..s.len()).map(|_| rng.gen_range(1..=20)).collect();
            let total: i64 = raw.iter().sum();
            let lambda: Vec<Rational> = raw.iter().map(|&r| ratio(r, total)).collect();
            let x = Point::affine_combination(&k.points_of(s), &lambda);
            match barycentric_coordinates(k, s, &x) {
                Ok(Some(c)) if c.weights == lambda => checked += 1,
                _ => return Verdict::fail(format!("weights of {x} in {} do not round-trip", k.display(s))),
            }
        }
    }
    Verdict::pass(checked)
}

fn check_skeletons(k: &GeometricComplex) -> Verdict {
    let top = k.dim() + 1;
    for p in 0..=top {
        for q in 0..=top {
            if k.skeleton(p).skeleton(q) != k.skeleton(p.min(q)) {
                return Verdict::fail(format!("skeleton({p}) then skeleton({q}) differs from skeleton({})", p.min(q)));
            }
            let closed = GeometricComplex::face_closure(k.skeleton(p).simplices());
            if GeometricComplex::closure_gap(&closed).is_some() || closed.len() != k.skeleton(p).len() {
                return Verdict::fail(format!("skeleton({p}) is not face-closed"));
            }
        }
    }
    Verdict::pass((top + 1) * (top + 1))
}

fn check_json(k: &GeometricComplex) -> Result<Verdict> {
    let text = to_json_string(k);
    let back = from_json_str(&text)?;
    if back != *k || to_json_string(&back) != text {
        return Ok(Verdict::fail("JSON round trip changed the complex"));
    }
    Ok(Verdict::pass(1))
}

/// Outputs of the constructions are valid complexes, and the off-center
/// starring subdivides `k`.
fn check_constructions(k: &GeometricComplex, bsd: &GeometricComplex) -> Result<Verdict> {
    let (skewed, _) = subdivide_skeletonwise(k, &SkewedApex)?;
    for (name, l) in [("barycentric", bsd), ("skewed", &skewed)] {
        let report = validate_complex(l);
        if !report.is_valid() {
            return Ok(Verdict::fail(format!("{name} subdivision is invalid: {report}")));
        }
    }
    if let SubdivisionCheck::Refuted(r) = is_subdivision(&skewed, k)? {
        return Ok(Verdict::fail(format!("skewed starring is not a subdivision: {r}")));
    }
    Ok(Verdict::pass(3))
}

/// For a single `n`-simplex, `Bsd^m` has `((n+1)!)^m` top simplices.
fn check_counts(k: &GeometricComplex, bsd: &GeometricComplex, bsd2: &GeometricComplex) -> Option<Verdict> {
    let n = k.dim();
    if n == 0 || k.maximal().len() != 1 {
        return None;
    }
    let f: usize = (1..=n + 1).product();
    for (m, l) in [(1, bsd), (2, bsd2)] {
        let found = l.simplices_of_dim(n).len();
        if found != f.pow(m) {
            return Some(Verdict::fail(format!("Bsd^{m} has {found} top simplices, expected {}", f.pow(m))));
        }
    }
    Some(Verdict::pass(2))
}

/// Diameters survive a translation of all coordinates and a reversal of
/// each simplex's vertex order.
fn check_diameters(k: &GeometricComplex) -> Verdict {
    let offset: Vec<Rational> = (0..k.ambient_dim()).map(|i| ratio(2 * i as i64 - 3, 7)).collect();
    let mut b = ComplexBuilder::new(k.ambient_dim());
    for v in k.vertex_ids() {
        b.add_vertex(k.label(v), k.point(v).translate(&offset)).expect("copied vertex");
    }
    for s in k.maximal() {
        b.add_simplex_by_labels(&k.labels_of(s)).expect("copied simplex");
    }
    let moved = b.build();
    let mut checked = 0;
    for metric in [MetricKind::Linf, MetricKind::L2] {
        for s in k.simplices() {
            let d = diameter(k, s, metric);
            let shifted = moved.simplex_by_labels(&k.labels_of(s)).expect("same labels");
            let mut reversed: Vec<&Point> = k.points_of(s);
            reversed.reverse();
            let by_pairs = reversed
                .iter()
                .enumerate()
                .flat_map(|(i, p)| reversed[i + 1..].iter().map(move |q| crate::metric::distance(p, q, metric)))
                .max()
                .unwrap_or_else(|| crate::metric::Length::zero(metric));
            if diameter(&moved, &shifted, metric) != d || by_pairs != d {
                return Verdict::fail(format!("{metric} diameter of {} is not invariant", k.display(s)));
            }
            checked += 1;
        }
    }
    Verdict::pass(checked)
}

/// Complexes that are deliberately not valid.
pub fn broken_fixtures() -> Vec<Fixture> {
    let mut missing = ComplexBuilder::new(2);
    for (l, c) in [("A", [0, 0]), ("B", [1, 0]), ("C", [0, 1])] {
        missing.add_vertex(l, Point::from_ints(&c)).expect("fresh");
    }
    missing.add_simplex_by_labels(&["A", "B", "C"]).expect("known");
    missing.add_simplex_by_labels(&["A", "B"]).expect("known");
    missing.add_simplex_by_labels(&["A", "C"]).expect("known");
    vec![
        Fixture::new("broken-missing-face", missing.build_unclosed()),
        Fixture::new(
            "broken-overlap",
            corpus::from_table(
                2,
                &[
                    ("A", &["0", "0"]),
                    ("B", &["2", "0"]),
                    ("C", &["0", "2"]),
                    ("P", &["1/2", "1/2"]),
                    ("Q", &["3", "1/2"]),
                    ("R", &["1/2", "3"]),
                ],
                &[&["A", "B", "C"], &["P", "Q", "R"]],
            ),
        ),
        Fixture::new(
            "broken-collinear",
            corpus::from_table(2, &[("A", &["0", "0"]), ("B", &["1", "1"]), ("C", &["2", "2"])], &[&["A", "B", "C"]]),
        ),
    ]
}

/// A checker run on input built to violate what it checks.
#[derive(Clone, Debug)]
pub struct FaultCase {
    pub checker: &'static str,
    pub fault: &'static str,
    pub verdict: Verdict,
}

/// Runs every checker on a corrupted input. Each verdict should be a
/// failure.
pub fn fault_cases() -> Result<Vec<FaultCase>> {
    let mut cases = Vec::new();
    let mut push = |checker, fault, verdict| cases.push(FaultCase { checker, fault, verdict });

    for f in broken_fixtures() {
        let report = validate_complex(&f.complex);
        let verdict = if report.is_valid() { Verdict::pass(1) } else { Verdict::fail(report.to_string()) };
        push(
            "validate",
            if f.name == "broken-overlap" {
                "improper intersection"
            } else if f.name == "broken-missing-face" {
                "missing face"
            } else {
                "affine dependence"
            },
            verdict,
        );
    }

    let triangle = corpus::triangle();
    let split = corpus::split_triangle();
    let holed = split.restrict(split.simplices().filter(|s| split.labels_of(s) != ["B", "C", "D"]));
    let refuted = |check: SubdivisionCheck| match check {
        SubdivisionCheck::Holds(_) => Verdict::pass(1),
        SubdivisionCheck::Refuted(r) => Verdict::fail(r.to_string()),
    };
    push("is_subdivision", "piece removed", refuted(is_subdivision(&holed, &triangle)?));
    let mut stray = ComplexBuilder::new(2);
    stray.add_vertex("A", Point::from_ints(&[0, 0]))?;
    stray.add_vertex("Z", Point::from_ints(&[2, 0]))?;
    stray.add_simplex_by_labels(&["A", "Z"])?;
    push("is_subdivision", "piece outside", refuted(is_subdivision(&stray.build(), &triangle)?));

    let (bsd, witness) = barycentric_subdivide(&triangle);
    let first_top = bsd.simplices_of_dim(2)[0].clone();
    let punctured = bsd.restrict(bsd.simplices().filter(|s| **s != first_top));
    push("realization_equal", "piece removed", realization_equal(&punctured, &triangle, 10_000));

    let mut nudged = ComplexBuilder::new(2);
    for v in bsd.vertex_ids() {
        let p =
            if bsd.label(v) == "b(A,B,C)" { Point::new(vec![ratio(1, 2), ratio(1, 5)]) } else { bsd.point(v).clone() };
        nudged.add_vertex(bsd.label(v), p)?;
    }
    for s in bsd.maximal() {
        nudged.add_simplex_by_labels(&bsd.labels_of(s))?;
    }
    let nudged = nudged.build();
    push(
        "check_chain",
        "perturbed step",
        check_chain(&[triangle.clone(), bsd.clone(), barycentric_subdivide(&nudged).0])?,
    );

    let mut bad_witness = witness.clone();
    let apex = bsd.vertex_by_label("b(A,B,C)").expect("barycenter vertex");
    let wrong = triangle.simplex_by_labels(&["A", "B"])?;
    bad_witness.refinement.insert(crate::complex::Simplex::vertex(apex), wrong);
    push("check_star_lemma_with", "wrong carrier", check_star_lemma_with(&triangle, &bsd, &bad_witness)?);

    let mut thin_witness = witness.clone();
    let top = triangle.maximal()[0].clone();
    thin_witness.covering.get_mut(&top).expect("covering of the triangle").pop();
    push("check_witness_volumes", "piece dropped", check_witness_volumes(&bsd, &triangle, &thin_witness));

    push("check_contraction_pair", "no refinement", check_contraction_pair(&triangle, &triangle, 1, MetricKind::Linf));

    let skewed = subdivide_skeletonwise(&triangle, &SkewedApex)?.0;
    let same = skewed.geometric_signature() == bsd.geometric_signature();
    push(
        "geometric equality",
        "different apexes",
        if same { Verdict::pass(1) } else { Verdict::fail("geometry differs") },
    );

    let overlap = &broken_fixtures()[1].complex;
    push("check_carrier_uniqueness", "overlapping triangles", check_carrier_uniqueness_unchecked(overlap));
    Ok(cases)
}

/// Carrier multiplicity alone; the engine locator needs a valid complex.
fn check_carrier_uniqueness_unchecked(k: &GeometricComplex) -> Verdict {
    let index = super::oracle::ScanIndex::new(k);
    for x in probe_points(k) {
        let n = index.carriers(&x).len();
        if n != 1 {
            return Verdict::fail(format!("{x} has {n} carriers"));
        }
    }
    Verdict::pass(1)
}
