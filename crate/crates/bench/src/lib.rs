//! Workloads shared by the benchmarks.

use simplicia::verify::corpus;
use simplicia::GeometricComplex;

/// Named inputs of increasing size.
pub fn workloads() -> Vec<(&'static str, GeometricComplex)> {
    vec![
        ("triangle", corpus::triangle()),
        ("random-strip", corpus::random_strip(7, 3)),
        ("standard-3", corpus::standard_simplex(3)),
        ("random-tet-pair", corpus::random_tet_pair(11)),
    ]
}
