use std::fmt;

use crate::complex::{GeometricComplex, Simplex};
use crate::intersect::{meet_properly, Prepared};
use crate::linalg::affinely_independent;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `face` is missing although `simplex` is present.
    MissingFace {
        simplex: String,
        face: String,
    },
    AffinelyDependent {
        simplex: String,
    },
    /// The realizations meet outside their common face.
    ImproperIntersection {
        first: String,
        second: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingFace { simplex, face } => write!(f, "face {face} of {simplex} is missing"),
            Violation::AffinelyDependent { simplex } => write!(f, "{simplex} is affinely dependent"),
            Violation::ImproperIntersection { first, second } => {
                write!(f, "{first} and {second} intersect improperly")
            }
        }
    }
}

/// Every way a complex fails to be a geometric simplicial complex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks face closure, affine independence and pairwise properness.
///
/// Properness is only tested between maximal simplices: if two maximal
/// simplices meet in their common face, so do all of their faces. Pairs are
/// swept along the first axis of their bounding boxes; the remaining cost is
/// quadratic in the number of overlapping maximal simplices.
pub fn validate_complex(k: &GeometricComplex) -> ValidationReport {
    let mut violations = Vec::new();

    for s in k.simplices() {
        for f in s.facets() {
            if !k.contains(&f) {
                violations.push(Violation::MissingFace { simplex: k.display(s), face: k.display(&f) });
            }
        }
    }

    let mut healthy: Vec<&Simplex> = Vec::new();
    for s in k.maximal() {
        if affinely_independent(&k.points_of(s)) {
            healthy.push(s);
        } else {
            violations.push(Violation::AffinelyDependent { simplex: k.display(s) });
        }
    }

    let prepared: Vec<Prepared<'_>> = healthy.iter().map(|s| Prepared::new(k.points_of(s))).collect();
    let mut order: Vec<usize> = (0..healthy.len()).collect();
    if k.ambient_dim() > 0 {
        order.sort_by(|&a, &b| prepared[a].bbox.lo[0].cmp(&prepared[b].bbox.lo[0]));
    }
    let mut improper = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            if k.ambient_dim() > 0 && prepared[j].bbox.lo[0] > prepared[i].bbox.hi[0] {
                break;
            }
            let (a, b) = (healthy[i], healthy[j]);
            if !meet_properly(&prepared[i], &prepared[j], &a.shared_mask(b), &b.shared_mask(a)) {
                improper.push(if a < b { (a, b) } else { (b, a) });
            }
        }
    }
    improper.sort();
    violations.extend(
        improper
            .into_iter()
            .map(|(a, b)| Violation::ImproperIntersection { first: k.display(a), second: k.display(b) }),
    );

    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ComplexBuilder;
    use crate::point::Point;
    use crate::rational::parse_rational;

    fn pt(x: &str, y: &str) -> Point {
        Point::new(vec![parse_rational(x).unwrap(), parse_rational(y).unwrap()])
    }

    fn triangle_builder() -> ComplexBuilder {
        let mut b = ComplexBuilder::new(2);
        b.add_vertex("A", pt("0", "0")).unwrap();
        b.add_vertex("B", pt("1", "0")).unwrap();
        b.add_vertex("C", pt("0.2", "0.9")).unwrap();
        b
    }

    #[test]
    fn triangle_is_valid() {
        let mut b = triangle_builder();
        b.add_simplex_by_labels(&["A", "B", "C"]).unwrap();
        assert!(validate_complex(&b.build()).is_valid());
    }

    #[test]
    fn missing_edge_is_reported() {
        let mut b = triangle_builder();
        for s in [&["A", "B", "C"][..], &["A", "B"], &["A", "C"]] {
            b.add_simplex_by_labels(s).unwrap();
        }
        let report = validate_complex(&b.build_unclosed());
        assert_eq!(report.violations, vec![Violation::MissingFace { simplex: "[A,B,C]".into(), face: "[B,C]".into() }]);
    }

    #[test]
    fn half_shared_edge_is_improper() {
        // [A,B,C] and [M,E,F] overlap along [M,B], half of [A,B].
        let mut b = ComplexBuilder::new(2);
        b.add_vertex("A", pt("0", "0")).unwrap();
        b.add_vertex("B", pt("2", "0")).unwrap();
        b.add_vertex("C", pt("0", "2")).unwrap();
        b.add_vertex("M", pt("1", "0")).unwrap();
        b.add_vertex("E", pt("3", "0")).unwrap();
        b.add_vertex("F", pt("2", "-2")).unwrap();
        b.add_simplex_by_labels(&["A", "B", "C"]).unwrap();
        b.add_simplex_by_labels(&["M", "E", "F"]).unwrap();
        let report = validate_complex(&b.build());
        assert!(report
            .violations
            .contains(&Violation::ImproperIntersection { first: "[A,B,C]".into(), second: "[E,F,M]".into() }));
    }

    #[test]
    fn collinear_triangle_is_dependent() {
        let mut b = ComplexBuilder::new(2);
        b.add_vertex("A", pt("0", "0")).unwrap();
        b.add_vertex("B", pt("1", "1")).unwrap();
        b.add_vertex("C", pt("2", "2")).unwrap();
        b.add_simplex_by_labels(&["A", "B", "C"]).unwrap();
        let report = validate_complex(&b.build());
        assert_eq!(report.violations, vec![Violation::AffinelyDependent { simplex: "[A,B,C]".into() }]);
    }
}
