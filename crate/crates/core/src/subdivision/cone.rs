use crate::complex::{ComplexBuilder, GeometricComplex};
use crate::error::{Error, Result};
use crate::linalg::affinely_independent;
use crate::point::Point;

/// The cone `w ∗ boundary`: every simplex of `boundary`, the apex `w`
/// (labelled `label`), and `[w ∪ τ]` with all its faces for each `τ`.
///
/// Fails with [`Error::ConeDegenerate`] if `w` is affinely dependent on
/// some maximal `τ`; independence then holds for all faces too.
pub fn star_from_point(label: &str, w: &Point, boundary: &GeometricComplex) -> Result<GeometricComplex> {
    let mut b = ComplexBuilder::new(boundary.ambient_dim());
    for v in boundary.vertex_ids() {
        b.add_vertex(boundary.label(v), boundary.point(v).clone())?;
    }
    let apex = b.add_vertex(label, w.clone())?;
    for tau in boundary.maximal() {
        let mut points = boundary.points_of(tau);
        points.push(w);
        if !affinely_independent(&points) {
            return Err(Error::ConeDegenerate(boundary.display(tau)));
        }
        let mut ids: Vec<_> =
            tau.vertices().iter().map(|&v| b.vertex(boundary.label(v)).expect("copied above")).collect();
        ids.push(apex);
        b.add_simplex(&ids)?;
    }
    Ok(b.build())
}
