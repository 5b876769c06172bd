//! Open stars of vertices and their behaviour under subdivision.

use std::collections::BTreeSet;

use crate::carrier::CarrierLocator;
use crate::complex::{GeometricComplex, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::point::Point;
use crate::subdivision::SubdivisionWitness;

/// The open star of a vertex, kept as the simplices whose relative
/// interiors make it up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpenStar {
    pub center: VertexId,
    pub pieces: BTreeSet<Simplex>,
}

impl OpenStar {
    /// `x` is in the star iff the center is a vertex of `x`'s carrier.
    pub fn contains(&self, locator: &CarrierLocator<'_>, x: &Point) -> Result<bool> {
        Ok(locator.carrier(x)?.is_some_and(|c| c.contains(self.center)))
    }
}

fn check_vertex(k: &GeometricComplex, v: VertexId) -> Result<()> {
    if v.index() < k.vertex_count() {
        Ok(())
    } else {
        Err(Error::NotInComplex(format!("vertex #{}", v.index())))
    }
}

/// All simplices of `k` having `v` as a vertex.
pub fn open_star(k: &GeometricComplex, v: VertexId) -> Result<OpenStar> {
    check_vertex(k, v)?;
    let pieces = k.simplices().filter(|s| s.contains(v)).cloned().collect();
    Ok(OpenStar { center: v, pieces })
}

/// The vertices `v` of `k` with `St(w, fine) ⊂ St(v, k)`: exactly the
/// vertices of the carrier of `w` in `k`, read off the witness.
pub fn star_inclusion_vertices(
    w: VertexId,
    fine: &GeometricComplex,
    witness: &SubdivisionWitness,
) -> Result<BTreeSet<VertexId>> {
    check_vertex(fine, w)?;
    let carrier = witness.carrier_of_vertex(w).ok_or_else(|| Error::MissingWitness(fine.label(w).to_string()))?;
    Ok(carrier.vertices().iter().copied().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ComplexBuilder;
    use crate::rational::ratio;
    use crate::subdivision::{is_subdivision, star_from_point};

    fn triangle() -> GeometricComplex {
        let mut b = ComplexBuilder::new(2);
        b.add_vertex("A", Point::from_ints(&[0, 0])).unwrap();
        b.add_vertex("B", Point::from_ints(&[1, 0])).unwrap();
        b.add_vertex("C", Point::new(vec![ratio(1, 4), ratio(17, 20)])).unwrap();
        b.add_simplex_by_labels(&["A", "B", "C"]).unwrap();
        b.build()
    }

    fn labels(k: &GeometricComplex, star: &OpenStar) -> Vec<String> {
        star.pieces.iter().map(|s| k.display(s)).collect()
    }

    #[test]
    fn star_of_a_corner() {
        let k = triangle();
        let star = open_star(&k, k.vertex_by_label("A").unwrap()).unwrap();
        assert_eq!(labels(&k, &star), ["[A]", "[A,B]", "[A,C]", "[A,B,C]"]);
    }

    #[test]
    fn star_of_the_coned_apex() {
        let k = triangle();
        let d = k.barycenter(&k.maximal()[0]);
        let coned = star_from_point("D", &d, &k.skeleton(1)).unwrap();
        let star = open_star(&coned, coned.vertex_by_label("D").unwrap()).unwrap();
        assert_eq!(labels(&coned, &star), ["[D]", "[A,D]", "[B,D]", "[C,D]", "[A,B,D]", "[A,C,D]", "[B,C,D]"]);

        let witness = is_subdivision(&coned, &k).unwrap().witness().unwrap();
        let vs = star_inclusion_vertices(coned.vertex_by_label("D").unwrap(), &coned, &witness).unwrap();
        let names: Vec<&str> = vs.iter().map(|&v| k.label(v)).collect();
        assert_eq!(names, ["A", "B", "C"]);
        let va = star_inclusion_vertices(coned.vertex_by_label("A").unwrap(), &coned, &witness).unwrap();
        assert_eq!(va.iter().map(|&v| k.label(v)).collect::<Vec<_>>(), ["A"]);
    }

    #[test]
    fn star_membership_by_carrier() {
        let k = triangle();
        let a = k.vertex_by_label("A").unwrap();
        let star = open_star(&k, a).unwrap();
        let locator = CarrierLocator::new(&k).unwrap();
        let bc = k.simplex_by_labels(&["B", "C"]).unwrap();
        assert!(star.contains(&locator, k.point(a)).unwrap());
        assert!(star.contains(&locator, &k.barycenter(&k.maximal()[0])).unwrap());
        assert!(!star.contains(&locator, &k.barycenter(&bc)).unwrap());
        assert!(!star.contains(&locator, &Point::from_ints(&[5, 5])).unwrap());
    }

    #[test]
    fn single_vertex_and_unknown_vertex() {
        let mut b = ComplexBuilder::new(1);
        let v = b.add_vertex("v", Point::from_ints(&[0])).unwrap();
        let k = b.build();
        assert_eq!(open_star(&k, v).unwrap().pieces.len(), 1);
        assert!(open_star(&triangle(), VertexId::from_index(9)).is_err());
    }
}
