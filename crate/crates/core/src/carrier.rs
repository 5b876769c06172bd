//! Barycentric coordinates and point location (carriers).

use num::{One, Signed, Zero};

use crate::complex::{GeometricComplex, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::intersect::BoundingBox;
use crate::linalg::{all_nonnegative, AffineFrame};
use crate::point::Point;
use crate::rational::Rational;

/// Exact weights of a point relative to the vertices of a simplex, in the
/// simplex's vertex order. They always sum to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarycentricCoords {
    pub weights: Vec<Rational>,
}

impl BarycentricCoords {
    /// In the closed simplex.
    pub fn in_closed(&self) -> bool {
        all_nonnegative(&self.weights)
    }

    /// In the relative interior.
    pub fn in_interior(&self) -> bool {
        self.weights.iter().all(Signed::is_positive)
    }
}

/// Weights of `x` relative to `simplex`, or `Ok(None)` when `x` is off the
/// simplex's affine hull.
pub fn barycentric_coordinates(
    k: &GeometricComplex,
    simplex: &Simplex,
    x: &Point,
) -> Result<Option<BarycentricCoords>> {
    if x.dim() != k.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: k.ambient_dim(), found: x.dim() });
    }
    let frame = AffineFrame::new(&k.points_of(simplex)).ok_or_else(|| Error::Degenerate(k.display(simplex)))?;
    Ok(frame.weights(x).map(|weights| BarycentricCoords { weights }))
}

/// Where a point sits in a complex: its carrier and its positive weights on
/// the carrier's vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Located {
    pub carrier: Simplex,
    pub weights: Vec<(VertexId, Rational)>,
}

impl Located {
    /// Weight on `v`, zero off the carrier.
    pub fn weight(&self, v: VertexId) -> Rational {
        self.weights.iter().find(|(u, _)| *u == v).map_or_else(Rational::zero, |(_, w)| w.clone())
    }
}

struct Cell {
    simplex: Simplex,
    bbox: BoundingBox,
    frame: AffineFrame,
}

/// Point location over the maximal simplices of a complex, filtered by
/// bounding boxes.
///
/// A point in a closed maximal simplex lies in the relative interior of the
/// face spanned by its positive weights; properness of the complex makes
/// that face the unique carrier.
pub struct CarrierLocator<'a> {
    complex: &'a GeometricComplex,
    cells: Vec<Cell>,
}

impl<'a> CarrierLocator<'a> {
    pub fn new(complex: &'a GeometricComplex) -> Result<Self> {
        let cells = complex
            .maximal()
            .iter()
            .map(|s| {
                let points = complex.points_of(s);
                let frame = AffineFrame::new(&points).ok_or_else(|| Error::Degenerate(complex.display(s)))?;
                Ok(Cell { simplex: s.clone(), bbox: BoundingBox::of(&points), frame })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CarrierLocator { complex, cells })
    }

    pub fn complex(&self) -> &GeometricComplex {
        self.complex
    }

    pub fn locate(&self, x: &Point) -> Result<Option<Located>> {
        if x.dim() != self.complex.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.complex.ambient_dim(), found: x.dim() });
        }
        for cell in &self.cells {
            if !cell.bbox.contains(x) {
                continue;
            }
            let Some(weights) = cell.frame.weights(x) else {
                continue;
            };
            if !all_nonnegative(&weights) {
                continue;
            }
            let support: Vec<(VertexId, Rational)> = cell
                .simplex
                .vertices()
                .iter()
                .zip(weights)
                .filter(|(_, w)| w.is_positive())
                .map(|(v, w)| (*v, w))
                .collect();
            debug_assert_eq!(support.iter().map(|(_, w)| w).sum::<Rational>(), Rational::one());
            let carrier = Simplex::new(support.iter().map(|(v, _)| *v)).expect("support is a set");
            return Ok(Some(Located { carrier, weights: support }));
        }
        Ok(None)
    }

    pub fn carrier(&self, x: &Point) -> Result<Option<Simplex>> {
        Ok(self.locate(x)?.map(|l| l.carrier))
    }
}

/// The simplex whose relative interior contains `x`, or `None` outside `|K|`.
pub fn carrier(k: &GeometricComplex, x: &Point) -> Result<Option<Simplex>> {
    CarrierLocator::new(k)?.carrier(x)
}
