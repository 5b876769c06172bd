//! Finite geometric simplicial complexes with exact rational coordinates,
//! and their subdivisions.
//!
//! Complexes are built with [`ComplexBuilder`] or loaded from JSON, checked
//! with [`validate_complex`], and refined by [`barycentric_subdivide`] or the
//! general [`subdivide_skeletonwise`]. [`is_subdivision`] decides the
//! subdivision relation between two complexes. The [`verify`] module holds
//! independent oracles and a property suite over a fixture corpus.

mod carrier;
mod complex;
mod error;
mod intersect;
pub mod io;
pub mod linalg;
mod lp;
mod metric;
mod ops;
mod point;
pub mod rational;
mod stars;
pub mod subdivision;
mod validate;
pub mod verify;

pub use carrier::{barycentric_coordinates, carrier, BarycentricCoords, CarrierLocator, Located};
pub use complex::{ComplexBuilder, GeometricComplex, Simplex, Vertex, VertexId};
pub use error::{Error, Result};
pub use metric::{
    bound_after, contraction_factor, diameter, distance, mesh, mesh_value, subdivisions_needed, Length, MeshReport,
    MetricKind, RefinementCount,
};
pub use ops::{intersect_subcomplexes, union_complexes};
pub use point::Point;
pub use rational::Rational;
pub use stars::{open_star, star_inclusion_vertices, OpenStar};
pub use subdivision::{
    barycentric_flags, barycentric_subdivide, barycentric_subdivide_n, induced_subdivision, induced_subdivision_with,
    is_subdivision, star_from_point, subdivide_skeletonwise, ApexChooser, Barycenter, Flag, Refutation, SkewedApex,
    SubdivisionCheck, SubdivisionWitness,
};
pub use validate::{validate_complex, ValidationReport, Violation};
