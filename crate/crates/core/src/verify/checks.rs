//! Checkers for subdivision properties, each returning a [`Verdict`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num::integer::Integer;
use num::{BigInt, One, Zero};

use super::oracle::{cramer_weights, in_open_simplex, relative_volume, ScanIndex};
use crate::complex::{GeometricComplex, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::metric::{contraction_factor, Length, MetricKind};
use crate::point::Point;
use crate::rational::{format_rational, pow, Rational};
use crate::stars::star_inclusion_vertices;
use crate::subdivision::{
    barycentric_flags, barycentric_subdivide, barycentric_subdivide_n, is_subdivision, subdivide_skeletonwise,
    Barycenter, SubdivisionCheck, SubdivisionWitness,
};

/// Outcome of one checker: how many individual facts were confirmed, or
/// the first one that failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub checked: usize,
    pub failure: Option<String>,
    pub note: Option<String>,
}

impl Verdict {
    pub fn pass(checked: usize) -> Self {
        Verdict { checked, failure: None, note: None }
    }

    pub fn fail(message: impl Into<String>) -> Self {
        Verdict { checked: 0, failure: Some(message.into()), note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "pass ({} checks)", self.checked)?,
            Some(msg) => write!(f, "fail: {msg}")?,
        }
        if let Some(note) = &self.note {
            write!(f, " [{note}]")?;
        }
        Ok(())
    }
}

/// Deterministic probe points of a complex: barycenters of every simplex,
/// and for each maximal simplex the barycenters of the pieces its
/// barycentric subdivision would cut it into.
pub fn probe_points(k: &GeometricComplex) -> BTreeSet<Point> {
    let mut probes: BTreeSet<Point> = k.simplices().map(|s| k.barycenter(s)).collect();
    for s in k.maximal().iter().filter(|s| s.len() > 1) {
        for order in s.vertices().iter().permutations(s.len()) {
            let chain: Vec<Point> = (1..=order.len())
                .map(|i| Point::barycenter(&order[..i].iter().map(|&&v| k.point(v)).collect::<Vec<_>>()))
                .collect();
            probes.insert(Point::barycenter(&chain.iter().collect::<Vec<_>>()));
        }
    }
    probes
}

/// Every `⌈len/samples⌉`-th element, so at most about `samples` remain.
fn thin<T: Clone>(items: &[T], samples: usize) -> Vec<T> {
    if samples == 0 || items.len() <= samples {
        return items.to_vec();
    }
    let stride = items.len().div_ceil(samples);
    items.iter().step_by(stride).cloned().collect()
}

/// The `i`-th ordering of `items` (mod `len!`) in Lehmer order.
fn nth_permutation<T: Copy>(items: &[T], mut i: usize) -> Vec<T> {
    let mut pool = items.to_vec();
    let mut out = Vec::with_capacity(pool.len());
    while !pool.is_empty() {
        let j = i % pool.len();
        i /= pool.len();
        out.push(pool.remove(j));
    }
    out
}

/// Like [`probe_points`] but bounded: barycenters of about `samples`
/// simplices, and about `samples` piece barycenters cycling through the
/// vertex orders of the maximal simplices.
pub fn sampled_probe_points(k: &GeometricComplex, samples: usize) -> BTreeSet<Point> {
    let all: Vec<&Simplex> = k.simplices().collect();
    let mut probes: BTreeSet<Point> = thin(&all, samples).into_iter().map(|s| k.barycenter(s)).collect();
    let tops: Vec<&Simplex> = k.maximal().iter().filter(|s| s.len() > 1).collect();
    let orders: usize = tops.iter().map(|s| (1..=s.len()).product::<usize>()).sum();
    for (i, s) in thin(&tops, samples).into_iter().enumerate() {
        let count = if orders <= samples { (1..=s.len()).product() } else { 1 };
        for j in 0..count {
            let order = nth_permutation(s.vertices(), if count == 1 { i } else { j });
            let chain: Vec<Point> = (1..=order.len())
                .map(|m| Point::barycenter(&order[..m].iter().map(|&v| k.point(v)).collect::<Vec<_>>()))
                .collect();
            probes.insert(Point::barycenter(&chain.iter().collect::<Vec<_>>()));
        }
    }
    probes
}

/// Checks `|l| = |k|`.
///
/// Volumes: each maximal `m`-simplex of `l` must sit inside a maximal
/// `m`-simplex of `k`, and the pieces in each maximal simplex of `k` must
/// add up to its full volume. Probes: about `samples` probe points of each
/// complex must have a carrier in the other.
pub fn realization_equal(l: &GeometricComplex, k: &GeometricComplex, samples: usize) -> Verdict {
    if l.ambient_dim() != k.ambient_dim() {
        return Verdict::fail(format!("ambient dimensions {} and {} differ", l.ambient_dim(), k.ambient_dim()));
    }
    let k_index = ScanIndex::new(k);
    let l_index = ScanIndex::new(l);
    let k_tops: BTreeSet<&Simplex> = k.maximal().iter().collect();
    let mut tally: BTreeMap<Simplex, Rational> = BTreeMap::new();
    let mut checked = 0;
    for tau in l.maximal() {
        let tau_points = l.points_of(tau);
        let Some(sigma) = k_index.carrier(&l.barycenter(tau)) else {
            return Verdict::fail(format!("{} lies outside |K|", l.display(tau)));
        };
        if sigma.dim() != tau.dim() || !k_tops.contains(&sigma) {
            return Verdict::fail(format!(
                "maximal {} lies in {} of another dimension or not maximal",
                l.display(tau),
                k.display(&sigma)
            ));
        }
        let sigma_points = k.points_of(&sigma);
        if !tau_points
            .iter()
            .all(|p| cramer_weights(&sigma_points, p).is_some_and(|w| w.iter().all(|x| *x >= Rational::zero())))
        {
            return Verdict::fail(format!("{} is not inside {}", l.display(tau), k.display(&sigma)));
        }
        let r = relative_volume(&tau_points, &sigma_points).expect("same dimension, same hull");
        *tally.entry(sigma).or_insert_with(Rational::zero) += r;
        checked += 1;
    }
    for sigma in k.maximal() {
        let covered = tally.get(sigma).cloned().unwrap_or_else(Rational::zero);
        if !covered.is_one() {
            return Verdict::fail(format!(
                "pieces cover {} of the volume of {}",
                format_rational(&covered),
                k.display(sigma)
            ));
        }
        checked += 1;
    }

    let from_k: Vec<Point> = sampled_probe_points(k, samples).into_iter().collect();
    let from_l: Vec<Point> = sampled_probe_points(l, samples).into_iter().collect();
    for x in thin(&from_k, samples) {
        if l_index.carrier(&x).is_none() {
            return Verdict::fail(format!("probe {x} lies in |K| but not in |L|"));
        }
        checked += 1;
    }
    for x in thin(&from_l, samples) {
        if k_index.carrier(&x).is_none() {
            return Verdict::fail(format!("probe {x} lies in |L| but not in |K|"));
        }
        checked += 1;
    }
    Verdict::pass(checked)
}

/// Checks that each complex in `chain` subdivides every earlier one.
pub fn check_chain(chain: &[GeometricComplex]) -> Result<Verdict> {
    let mut checked = 0;
    for j in 1..chain.len() {
        for i in 0..j {
            if let SubdivisionCheck::Refuted(r) = is_subdivision(&chain[j], &chain[i])? {
                return Ok(Verdict::fail(format!("step {j} does not subdivide step {i}: {r}")));
            }
            checked += 1;
        }
    }
    Ok(Verdict::pass(checked))
}

/// `K, Bsd K, …, Bsd^chain_len K`, checked pairwise.
pub fn check_transitivity(k: &GeometricComplex, chain_len: usize) -> Result<Verdict> {
    if chain_len < 2 {
        return Err(Error::InvalidArgument(format!("chain length must be at least 2, got {chain_len}")));
    }
    let mut chain = vec![k.clone()];
    for _ in 0..chain_len {
        let next = barycentric_subdivide(chain.last().expect("nonempty")).0;
        chain.push(next);
    }
    check_chain(&chain)
}

/// Star inclusion for `Bsd K` with its own witness.
pub fn check_star_lemma(k: &GeometricComplex) -> Result<Verdict> {
    let (fine, witness) = barycentric_subdivide(k);
    check_star_lemma_with(k, &fine, &witness)
}

/// Dimension up to which the converse direction is checked.
pub const STAR_CONVERSE_MAX_DIM: usize = 2;

/// For every vertex `w` of `fine`, compares the vertices reported by
/// [`star_inclusion_vertices`] with the carrier of `w` found by scanning
/// `k`, then tests `St(w, fine) ⊂ St(v, k)` directly on probe points for
/// every vertex `v` of `k`: it must hold exactly for the reported ones.
///
/// Probes for each piece `τ` of the star are `w`, the barycenter of `τ`,
/// and points on the segment from `w` toward that barycenter.
pub fn check_star_lemma_with(
    k: &GeometricComplex,
    fine: &GeometricComplex,
    witness: &SubdivisionWitness,
) -> Result<Verdict> {
    let converse = k.dim() <= STAR_CONVERSE_MAX_DIM;
    let k_index = ScanIndex::new(k);
    let mut checked = 0;
    for w in fine.vertex_ids() {
        let claimed = star_inclusion_vertices(w, fine, witness)?;
        let center = fine.point(w);
        let Some(carrier) = k_index.carrier(center) else {
            return Ok(Verdict::fail(format!("vertex {} lies outside |K|", fine.label(w))));
        };
        let expected: BTreeSet<VertexId> = carrier.vertices().iter().copied().collect();
        if claimed != expected {
            return Ok(Verdict::fail(format!(
                "for {} the reported vertices differ from those of its carrier {}",
                fine.label(w),
                k.display(&carrier)
            )));
        }

        let mut probes = vec![center.clone()];
        for tau in fine.simplices().filter(|s| s.contains(w) && s.len() > 1) {
            let b = fine.barycenter(tau);
            for t in [Rational::one(), Rational::new(1.into(), 2.into()), Rational::new(1.into(), 16.into())] {
                let weights = [Rational::one() - &t, t];
                probes.push(Point::affine_combination(&[center, &b], &weights));
            }
        }
        let carriers: Vec<Option<Simplex>> = probes.iter().map(|x| k_index.carrier(x)).collect();
        for v in k.vertex_ids() {
            let included = carriers.iter().all(|c| c.as_ref().is_some_and(|c| c.contains(v)));
            if claimed.contains(&v) && !included {
                return Ok(Verdict::fail(format!(
                    "St({}) is not inside St({}) although {} is a carrier vertex",
                    fine.label(w),
                    k.label(v),
                    k.label(v)
                )));
            }
            if converse && !claimed.contains(&v) && included {
                return Ok(Verdict::fail(format!(
                    "St({}) looks inside St({}), which is not a carrier vertex",
                    fine.label(w),
                    k.label(v)
                )));
            }
            checked += 1;
        }
    }
    let verdict = Verdict::pass(checked);
    Ok(if converse {
        verdict
    } else {
        verdict.with_note(format!("converse not checked above dimension {STAR_CONVERSE_MAX_DIM}"))
    })
}

/// Barycentric subdivision, the flag construction and skeletonwise starring
/// from barycenters must give the same geometry.
pub fn check_oracle_equivalence(k: &GeometricComplex) -> Result<Verdict> {
    let direct = barycentric_subdivide(k).0;
    let flags = barycentric_flags(k);
    let (skeletal, _) = subdivide_skeletonwise(k, &Barycenter)?;
    let reference = direct.geometric_signature();
    if flags.geometric_signature() != reference {
        return Ok(Verdict::fail("flag construction differs from barycentric subdivision"));
    }
    if skeletal.geometric_signature() != reference {
        return Ok(Verdict::fail("skeletonwise construction differs from barycentric subdivision"));
    }
    Ok(Verdict::pass(reference.len()))
}

/// Largest vertex-pair distance over the maximal simplices, computed on
/// coordinates scaled to integers by the least common denominator.
pub fn brute_mesh(k: &GeometricComplex, metric: MetricKind) -> Length {
    let scale = k
        .vertex_ids()
        .flat_map(|v| k.point(v).coords().iter().map(|c| c.denom().clone()))
        .fold(BigInt::one(), |acc, d| acc.lcm(&d));
    let scaled: Vec<Vec<BigInt>> =
        k.vertex_ids().map(|v| k.point(v).coords().iter().map(|c| (c * &scale).to_integer()).collect()).collect();
    let mut best = BigInt::zero();
    for s in k.maximal() {
        for (a, b) in s.vertices().iter().tuple_combinations() {
            let (p, q) = (&scaled[a.index()], &scaled[b.index()]);
            let d: BigInt = match metric {
                MetricKind::Linf => {
                    p.iter().zip(q).map(|(x, y)| if x > y { x - y } else { y - x }).max().unwrap_or_default()
                }
                MetricKind::L2 => p.iter().zip(q).map(|(x, y)| (x - y).pow(2)).sum(),
            };
            best = best.max(d);
        }
    }
    let unit = match metric {
        MetricKind::Linf => scale,
        MetricKind::L2 => scale.pow(2),
    };
    Length::from_raw(metric, Rational::new(best, unit))
}

/// `mesh(l) ≤ c^steps · mesh(k)`, with `c` the factor for `dim k`.
pub fn check_contraction_pair(k: &GeometricComplex, l: &GeometricComplex, steps: usize, metric: MetricKind) -> Verdict {
    contraction_step(&brute_mesh(k, metric), &brute_mesh(l, metric), k.dim(), steps)
}

fn contraction_step(before: &Length, after: &Length, dim: usize, steps: usize) -> Verdict {
    let bound = before.scaled(&pow(&contraction_factor(dim), steps as u32));
    if *after <= bound {
        Verdict::pass(1)
    } else {
        Verdict::fail(format!(
            "{} mesh {} after {steps} steps exceeds the bound {}",
            before.metric(),
            after.to_exact_string(),
            bound.to_exact_string()
        ))
    }
}

/// Contraction of the mesh over `Bsd^m K` for `m ≤ max_steps`, both metrics,
/// against the initial mesh and step by step. The mesh must also drop at
/// every step unless `K` is a set of points.
pub fn check_contraction(k: &GeometricComplex, max_steps: usize) -> Verdict {
    let metrics = [MetricKind::Linf, MetricKind::L2];
    let mut meshes = vec![metrics.map(|m| brute_mesh(k, m))];
    let mut current = k.clone();
    for _ in 0..max_steps {
        current = barycentric_subdivide_n(&current, 1);
        meshes.push(metrics.map(|m| brute_mesh(&current, m)));
    }
    let mut checked = 0;
    for (i, metric) in metrics.into_iter().enumerate() {
        for m in 1..meshes.len() {
            let (initial, before, after) = (&meshes[0][i], &meshes[m - 1][i], &meshes[m][i]);
            for v in [contraction_step(initial, after, k.dim(), m), contraction_step(before, after, k.dim(), 1)] {
                if !v.passed() {
                    return v;
                }
                checked += 1;
            }
            let strict = k.dim() > 0;
            if (strict && after >= before) || (!strict && after != before) {
                return Verdict::fail(format!("{metric} mesh is not monotone at step {m}"));
            }
            checked += 1;
        }
    }
    Verdict::pass(checked)
}

/// Each coarse simplex's covering pieces, measured by the independent
/// volume routine, must fill it exactly.
pub fn check_witness_volumes(
    fine: &GeometricComplex,
    coarse: &GeometricComplex,
    witness: &SubdivisionWitness,
) -> Verdict {
    for sigma in coarse.simplices() {
        let outer = coarse.points_of(sigma);
        let pieces = witness.covering.get(sigma).map_or(&[][..], Vec::as_slice);
        let mut total = Rational::zero();
        for tau in pieces {
            match relative_volume(&fine.points_of(tau), &outer) {
                Some(r) => total += r,
                None => {
                    return Verdict::fail(format!("{} is not a piece of {}", fine.display(tau), coarse.display(sigma)))
                }
            }
        }
        if !total.is_one() {
            return Verdict::fail(format!(
                "covering of {} has volume fraction {}",
                coarse.display(sigma),
                format_rational(&total)
            ));
        }
    }
    Verdict::pass(coarse.len())
}

/// Every probe point has exactly one carrier, and the engine agrees.
pub fn check_carrier_uniqueness(k: &GeometricComplex) -> Result<Verdict> {
    let index = ScanIndex::new(k);
    let locator = crate::carrier::CarrierLocator::new(k)?;
    let mut probes = probe_points(k);
    for e in k.simplices_of_dim(1) {
        let [a, b] = [k.point(e.vertices()[0]), k.point(e.vertices()[1])];
        probes.insert(Point::affine_combination(
            &[a, b],
            &[Rational::new(1.into(), 3.into()), Rational::new(2.into(), 3.into())],
        ));
    }
    for x in &probes {
        let found = index.carriers(x);
        if found.len() != 1 {
            return Ok(Verdict::fail(format!("{x} has {} carriers", found.len())));
        }
        if locator.carrier(x)?.as_ref() != Some(&found[0]) {
            return Ok(Verdict::fail(format!("engine carrier of {x} disagrees with the scan")));
        }
    }
    Ok(Verdict::pass(probes.len()))
}

/// `x ∈ St(v,K)` by definition (interior of a simplex containing `v`)
/// agrees with `v ∈ carrier(x)`.
pub fn check_star_membership(k: &GeometricComplex) -> Result<Verdict> {
    let locator = crate::carrier::CarrierLocator::new(k)?;
    let probes = probe_points(k);
    let mut checked = 0;
    for v in k.vertex_ids() {
        let pieces: Vec<&Simplex> = k.simplices().filter(|s| s.contains(v)).collect();
        for x in &probes {
            let by_definition = pieces.iter().any(|s| in_open_simplex(&k.points_of(s), x));
            let by_carrier = locator.carrier(x)?.is_some_and(|c| c.contains(v));
            if by_definition != by_carrier {
                return Ok(Verdict::fail(format!("membership of {x} in St({}) is inconsistent", k.label(v))));
            }
            checked += 1;
        }
    }
    Ok(Verdict::pass(checked))
}
