use std::collections::HashMap;

use num::Zero;

use super::{derived_label, star_from_point, ApexChooser, SubdivisionWitness};
use crate::complex::{ComplexBuilder, GeometricComplex, Simplex};
use crate::error::{Error, Result};
use crate::linalg::{all_positive, AffineFrame};
use crate::point::Point;

/// Subdivides `k` one skeleton at a time.
///
/// Stage 0 is the vertex set of `k`. To pass from stage `p` to `p + 1`, each
/// `(p+1)`-simplex `σ` gets an apex from `chooser`, and the part of stage `p`
/// lying in the boundary of `σ` is coned from it. The apex must lie in the
/// relative interior of `σ`.
pub fn subdivide_skeletonwise(
    k: &GeometricComplex,
    chooser: &dyn ApexChooser,
) -> Result<(GeometricComplex, SubdivisionWitness)> {
    // Face of `k` that each stage vertex was generated in, by label.
    let mut origin: HashMap<String, (Point, Simplex)> = HashMap::new();
    let mut b = ComplexBuilder::new(k.ambient_dim());
    for v in k.vertex_ids() {
        b.add_vertex(k.label(v), k.point(v).clone())?;
        origin.insert(k.label(v).to_string(), (k.point(v).clone(), Simplex::vertex(v)));
    }
    let mut stage = b.build();

    for p in 0..k.dim() {
        let mut next = builder_from(&stage)?;
        for sigma in k.simplices_of_dim(p + 1) {
            let points = k.points_of(sigma);
            let frame = AffineFrame::new(&points).ok_or_else(|| Error::Degenerate(k.display(sigma)))?;
            let apex = chooser.choose(&points);
            if !frame.weights(&apex).is_some_and(|w| all_positive(&w)) {
                return Err(Error::ApexNotInterior(k.display(sigma)));
            }
            let label = fresh_label(&origin, derived_label(chooser.tag(), &k.labels_of(sigma)), &apex);
            origin.insert(label.clone(), (apex.clone(), sigma.clone()));

            let boundary = restrict_to_boundary(&stage, &frame, sigma, &origin);
            let cone = star_from_point(&label, &apex, &boundary)?;
            merge(&mut next, &cone)?;
        }
        stage = next.build();
    }

    let by_vertex: Vec<Simplex> = stage.vertex_ids().map(|v| origin[stage.label(v)].1.clone()).collect();
    let witness = SubdivisionWitness::from_origins(&stage, |v| by_vertex[v.index()].clone());
    Ok((stage, witness))
}

/// The simplices of `stage` whose realization lies in the boundary of `σ`.
///
/// Candidates are those generated inside a proper face of `σ`; each is then
/// confirmed exactly: a convex set lies in the boundary of a simplex iff all
/// its vertices share a zero barycentric weight and none is negative.
fn restrict_to_boundary(
    stage: &GeometricComplex,
    frame: &AffineFrame,
    sigma: &Simplex,
    origin: &HashMap<String, (Point, Simplex)>,
) -> GeometricComplex {
    let inside_face = |v| origin[stage.label(v)].1.is_face_of(sigma) && origin[stage.label(v)].1 != *sigma;
    let weights: HashMap<_, _> = stage
        .vertex_ids()
        .filter(|&v| inside_face(v))
        .filter_map(|v| frame.weights(stage.point(v)).map(|w| (v, w)))
        .collect();
    let kept: Vec<&Simplex> = stage
        .simplices()
        .filter(|tau| {
            let Some(ws) = tau.vertices().iter().map(|v| weights.get(v)).collect::<Option<Vec<_>>>() else {
                return false;
            };
            let nonneg = ws.iter().all(|w| w.iter().all(|x| !num::Signed::is_negative(x)));
            let shared_zero = (0..sigma.len()).any(|i| ws.iter().all(|w| w[i].is_zero()));
            nonneg && shared_zero
        })
        .collect();
    stage.restrict(kept)
}

fn builder_from(k: &GeometricComplex) -> Result<ComplexBuilder> {
    let mut b = ComplexBuilder::new(k.ambient_dim());
    merge(&mut b, k)?;
    Ok(b)
}

fn merge(b: &mut ComplexBuilder, k: &GeometricComplex) -> Result<()> {
    let ids = k.vertex_ids().map(|v| b.add_vertex(k.label(v), k.point(v).clone())).collect::<Result<Vec<_>>>()?;
    for s in k.maximal() {
        let mapped: Vec<_> = s.vertices().iter().map(|v| ids[v.index()]).collect();
        b.add_simplex(&mapped)?;
    }
    Ok(())
}

fn fresh_label(origin: &HashMap<String, (Point, Simplex)>, label: String, point: &Point) -> String {
    let mut candidate = label.clone();
    let mut n = 1;
    while origin.get(&candidate).is_some_and(|(p, _)| p != point) {
        n += 1;
        candidate = format!("{label}#{n}");
    }
    candidate
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{ratio, Rational};
    use crate::subdivision::{barycentric_subdivide, is_subdivision, FnChooser, SkewedApex};
    use crate::verify::corpus;
    use num::Signed;

    fn shoelace(points: &[&Point]) -> Rational {
        let (a, b, c) = (points[0].coords(), points[1].coords(), points[2].coords());
        ((&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0])).abs() / ratio(2, 1)
    }

    #[test]
    fn single_vertex_is_unchanged() {
        let k = corpus::single_vertex();
        let (l, _) = subdivide_skeletonwise(&k, &crate::subdivision::Barycenter).unwrap();
        assert_eq!(l, k);
    }

    #[test]
    fn barycenters_reproduce_barycentric_subdivision() {
        for k in [corpus::triangle(), corpus::triangle_with_tail(), corpus::standard_simplex(3)] {
            let (l, w) = subdivide_skeletonwise(&k, &crate::subdivision::Barycenter).unwrap();
            let (bsd, bw) = barycentric_subdivide(&k);
            assert_eq!(l.label_signature(), bsd.label_signature());
            assert!(l.geometrically_equal(&bsd));
            assert_eq!(w, bw);
        }
    }

    #[test]
    fn off_center_apexes_still_subdivide() {
        let k = corpus::triangle();
        let (l, w) = subdivide_skeletonwise(&k, &SkewedApex).unwrap();
        assert_eq!(l.simplices_of_dim(2).len(), 6);
        assert!(!l.geometrically_equal(&barycentric_subdivide(&k).0));
        let total: Rational = l.simplices_of_dim(2).iter().map(|s| shoelace(&l.points_of(s))).sum();
        assert_eq!(total, shoelace(&k.points_of(&k.maximal()[0])));
        assert_eq!(is_subdivision(&l, &k).unwrap().witness(), Some(w));
    }

    #[test]
    fn boundary_apex_is_rejected() {
        let k = corpus::triangle();
        let corner = FnChooser::new("c", |points: &[&Point]| points[0].clone());
        assert_eq!(subdivide_skeletonwise(&k, &corner).unwrap_err(), Error::ApexNotInterior("[A,B]".into()));
        let off = FnChooser::new("o", |points: &[&Point]| {
            let b = Point::barycenter(points);
            b.translate(&vec![ratio(1, 1000); b.dim()])
        });
        assert_eq!(subdivide_skeletonwise(&k, &off).unwrap_err(), Error::ApexNotInterior("[A,B]".into()));
    }
}
