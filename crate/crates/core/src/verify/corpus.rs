//! Named fixture complexes.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{ComplexBuilder, GeometricComplex};
use crate::point::Point;
use crate::rational::{parse_rational, ratio, Rational};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub complex: GeometricComplex,
}

impl Fixture {
    pub fn new(name: impl Into<String>, complex: GeometricComplex) -> Self {
        Fixture { name: name.into(), complex }
    }
}

/// A list of fixtures, kept sorted by name.
#[derive(Clone, Debug, Default)]
pub struct Corpus {
    fixtures: Vec<Fixture>,
}

impl Corpus {
    pub fn new(mut fixtures: Vec<Fixture>) -> Self {
        fixtures.sort_by(|a, b| a.name.cmp(&b.name));
        Corpus { fixtures }
    }

    /// The fixtures shipped with the library: small hand-built complexes, standard
    /// simplices up to dimension 4, and a few seeded random complexes.
    pub fn shipped() -> Self {
        let mut fixtures = vec![
            Fixture::new("triangle", triangle()),
            Fixture::new("split-triangle", split_triangle()),
            Fixture::new("edge", edge()),
            Fixture::new("star-triangle", star_triangle()),
            Fixture::new("coned-triangle", coned_triangle()),
            Fixture::new("segment", segment()),
            Fixture::new("labelled-triangle", labelled_triangle()),
            Fixture::new("triangle-with-tail", triangle_with_tail()),
            Fixture::new("point", single_vertex()),
            Fixture::new("random-strip", random_strip(7, 3)),
            Fixture::new("random-tet-pair", random_tet_pair(11)),
            Fixture::new("random-polyline", random_polyline(5, 4)),
        ];
        for n in 1..=4 {
            fixtures.push(Fixture::new(format!("standard-{n}"), standard_simplex(n)));
        }
        Corpus::new(fixtures)
    }

    pub fn fixtures(&self) -> &[Fixture] {
        &self.fixtures
    }

    pub fn get(&self, name: &str) -> Option<&GeometricComplex> {
        self.fixtures.iter().find(|f| f.name == name).map(|f| &f.complex)
    }

    pub fn push(&mut self, fixture: Fixture) {
        self.fixtures.push(fixture);
        self.fixtures.sort_by(|a, b| a.name.cmp(&b.name));
    }

    pub fn is_empty(&self) -> bool {
        self.fixtures.is_empty()
    }

    pub fn len(&self) -> usize {
        self.fixtures.len()
    }
}

fn q(text: &str) -> Rational {
    parse_rational(text).expect("fixture coordinate")
}

fn pt(coords: &[&str]) -> Point {
    Point::new(coords.iter().map(|c| q(c)).collect())
}

/// Builds a complex from `(label, coordinates)` pairs and label lists.
pub fn from_table(dim: usize, vertices: &[(&str, &[&str])], simplices: &[&[&str]]) -> GeometricComplex {
    let mut b = ComplexBuilder::new(dim);
    for (label, coords) in vertices {
        b.add_vertex(*label, pt(coords)).expect("fixture vertex");
    }
    for s in simplices {
        b.add_simplex_by_labels(s).expect("fixture simplex");
    }
    b.build()
}

/// `A(0,0)`, `B(1,0)`, `C(0.2,0.9)`.
pub fn triangle() -> GeometricComplex {
    from_table(2, &[("A", &["0", "0"]), ("B", &["1", "0"]), ("C", &["0.2", "0.9"])], &[&["A", "B", "C"]])
}

/// [`triangle`] split at the midpoint `D` of `[A,B]`.
pub fn split_triangle() -> GeometricComplex {
    from_table(
        2,
        &[("A", &["0", "0"]), ("B", &["1", "0"]), ("C", &["0.2", "0.9"]), ("D", &["1/2", "0"])],
        &[&["A", "D", "C"], &["B", "D", "C"]],
    )
}

/// The edge `[A,B]` of [`triangle`], as a subcomplex.
pub fn edge() -> GeometricComplex {
    from_table(2, &[("A", &["0", "0"]), ("B", &["1", "0"])], &[&["A", "B"]])
}

/// `A(0,0)`, `B(1,0)`, `C(0.25,0.85)`.
pub fn star_triangle() -> GeometricComplex {
    from_table(2, &[("A", &["0", "0"]), ("B", &["1", "0"]), ("C", &["0.25", "0.85"])], &[&["A", "B", "C"]])
}

/// [`star_triangle`] coned from its barycenter `D`.
pub fn coned_triangle() -> GeometricComplex {
    let d = ["5/12", "17/60"];
    from_table(
        2,
        &[("A", &["0", "0"]), ("B", &["1", "0"]), ("C", &["0.25", "0.85"]), ("D", &d)],
        &[&["D", "A", "B"], &["D", "B", "C"], &["D", "C", "A"]],
    )
}

/// The segment from `(0,0)` to `(3,0)`.
pub fn segment() -> GeometricComplex {
    from_table(2, &[("A", &["0", "0"]), ("B", &["3", "0"])], &[&["A", "B"]])
}

/// `v0(0,0)`, `v1(1,0)`, `v2(0.25,0.85)`.
pub fn labelled_triangle() -> GeometricComplex {
    from_table(2, &[("v0", &["0", "0"]), ("v1", &["1", "0"]), ("v2", &["0.25", "0.85"])], &[&["v0", "v1", "v2"]])
}

/// A triangle with an edge `[v0,w]` hanging off one corner.
pub fn triangle_with_tail() -> GeometricComplex {
    from_table(
        2,
        &[("v0", &["0", "0"]), ("v1", &["1", "0"]), ("v2", &["0.2", "0.85"]), ("w", &["-0.55", "-0.05"])],
        &[&["v0", "v1", "v2"], &["v0", "w"]],
    )
}

pub fn single_vertex() -> GeometricComplex {
    from_table(2, &[("P", &["1/3", "2/3"])], &[])
}

/// The origin and the unit vectors of `R^n`, as one `n`-simplex.
pub fn standard_simplex(n: usize) -> GeometricComplex {
    let mut b = ComplexBuilder::new(n);
    let mut ids = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut c = vec![0; n];
        if i > 0 {
            c[i - 1] = 1;
        }
        ids.push(b.add_vertex(format!("e{i}"), Point::from_ints(&c)).expect("fresh label"));
    }
    b.add_simplex(&ids).expect("distinct vertices");
    b.build()
}

/// Jitter in `[-1/4, 1/4]` on a grid of eighths.
fn jitter(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-2..=2), 8)
}

/// A row of `cells` quadrilaterals between a lower and an upper polyline,
/// each cut into two triangles. Columns sit at integer `x`, so the cells
/// are convex whatever the vertical jitter.
pub fn random_strip(seed: u64, cells: usize) -> GeometricComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = ComplexBuilder::new(2);
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for i in 0..=cells {
        let x = ratio(i as i64, 1);
        lower.push(b.add_vertex(format!("l{i}"), Point::new(vec![x.clone(), jitter(&mut rng)])).expect("fresh"));
        upper.push(b.add_vertex(format!("u{i}"), Point::new(vec![x, ratio(1, 1) + jitter(&mut rng)])).expect("fresh"));
    }
    for i in 0..cells {
        b.add_simplex(&[lower[i], lower[i + 1], upper[i]]).expect("distinct");
        b.add_simplex(&[lower[i + 1], upper[i + 1], upper[i]]).expect("distinct");
    }
    b.build()
}

/// Two tetrahedra glued along a triangle in the plane `z = 0`, with apexes
/// on opposite sides above and below it.
pub fn random_tet_pair(seed: u64) -> GeometricComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = ComplexBuilder::new(3);
    let base = [[0, 0], [4, 0], [0, 4]];
    let mut ids = Vec::new();
    for (i, [x, y]) in base.into_iter().enumerate() {
        let p = Point::new(vec![ratio(x, 1) + jitter(&mut rng), ratio(y, 1) + jitter(&mut rng), ratio(0, 1)]);
        ids.push(b.add_vertex(format!("p{i}"), p).expect("fresh"));
    }
    let apex = |rng: &mut ChaCha8Rng, z: i64| {
        Point::new(vec![ratio(1, 1) + jitter(rng), ratio(1, 1) + jitter(rng), ratio(z, 1) + jitter(rng)])
    };
    let top = b.add_vertex("top", apex(&mut rng, 2)).expect("fresh");
    let bottom = b.add_vertex("bottom", apex(&mut rng, -2)).expect("fresh");
    b.add_simplex(&[ids[0], ids[1], ids[2], top]).expect("distinct");
    b.add_simplex(&[ids[0], ids[1], ids[2], bottom]).expect("distinct");
    b.build()
}

/// A path through `R^3` with strictly increasing `x`, so segments only
/// meet at shared endpoints.
pub fn random_polyline(seed: u64, segments: usize) -> GeometricComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = ComplexBuilder::new(3);
    let mut ids = Vec::new();
    for i in 0..=segments {
        let p = Point::new(vec![ratio(i as i64, 1), ratio(rng.gen_range(-3..=3), 2), ratio(rng.gen_range(-3..=3), 2)]);
        ids.push(b.add_vertex(format!("q{i}"), p).expect("fresh"));
    }
    for w in ids.windows(2) {
        b.add_simplex(w).expect("distinct");
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::validate_complex;

    #[test]
    fn shipped_fixtures_are_valid() {
        let corpus = Corpus::shipped();
        assert_eq!(corpus.len(), 16);
        for f in corpus.fixtures() {
            let report = validate_complex(&f.complex);
            assert!(report.is_valid(), "{}: {report}", f.name);
        }
    }

    #[test]
    fn coned_apex_is_the_barycenter() {
        let k = star_triangle();
        let d = coned_triangle();
        assert_eq!(&k.barycenter(&k.maximal()[0]), d.point(d.vertex_by_label("D").unwrap()));
    }

    #[test]
    fn random_fixtures_are_reproducible() {
        assert_eq!(random_strip(7, 3), random_strip(7, 3));
        assert_ne!(random_strip(7, 3), random_strip(8, 3));
        assert_eq!(random_tet_pair(11).facet_census().get(&3), Some(&2));
    }
}
