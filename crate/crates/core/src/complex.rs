//! Geometric simplicial complexes over a labelled vertex table.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::point::Point;

/// Handle of a vertex inside one particular complex.
///
/// Handles are ranks in the label-sorted vertex table, so they are only
/// meaningful together with the complex that issued them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_index(i: usize) -> Self {
        VertexId(u32::try_from(i).expect("vertex table overflow"))
    }
}

/// A simplex as the sorted set of its vertex handles.
///
/// Ordered by dimension first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Simplex(SmallVec<[VertexId; 4]>);

impl Ord for Simplex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Simplex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Simplex {
    /// Sorts the handles; fails on an empty or repeating list.
    pub fn new<I: IntoIterator<Item = VertexId>>(vertices: I) -> Result<Self> {
        let mut v: SmallVec<[VertexId; 4]> = vertices.into_iter().collect();
        if v.is_empty() {
            return Err(Error::EmptySimplex);
        }
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            let ids: Vec<String> = v.iter().map(|x| x.0.to_string()).collect();
            return Err(Error::RepeatedVertex(format!("[{}]", ids.join(","))));
        }
        Ok(Simplex(v))
    }

    pub fn vertex(v: VertexId) -> Self {
        Simplex(smallvec::smallvec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// Face relation (not necessarily proper).
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v: SmallVec<[VertexId; 4]> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    /// Vertices shared with `other`, as a mask over `self`'s vertices.
    pub fn shared_mask(&self, other: &Simplex) -> Vec<bool> {
        self.0.iter().map(|v| other.contains(*v)).collect()
    }

    /// Codimension-one faces; empty for a vertex.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n)
            .map(move |skip| Simplex(self.0.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| *v).collect()))
    }

    /// All nonempty faces, including `self`.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        assert!(n < 32, "simplex too large to enumerate faces");
        (1u32..(1 << n))
            .map(|mask| {
                Simplex(self.0.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, v)| *v).collect())
            })
            .collect()
    }

    /// Nonempty faces other than `self`.
    pub fn proper_faces(&self) -> Vec<Simplex> {
        let mut faces = self.faces();
        faces.pop();
        faces
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub label: String,
    pub point: Point,
}

/// A finite, face-indexed set of simplices over a labelled vertex table.
///
/// Every vertex in the table is a 0-simplex of the complex. Simplices are
/// stored per dimension in sorted order, together with the maximal ones.
/// Structural consistency is enforced on construction; geometric validity
/// (closure, affine independence, proper intersections) is checked by
/// [`crate::validate_complex`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricComplex {
    ambient_dim: usize,
    vertices: Vec<Vertex>,
    by_label: HashMap<String, VertexId>,
    simplices: Vec<Vec<Simplex>>,
    maximal: Vec<Simplex>,
}

impl GeometricComplex {
    pub fn empty(ambient_dim: usize) -> Self {
        ComplexBuilder::new(ambient_dim).build()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Largest simplex dimension; 0 for the empty complex.
    pub fn dim(&self) -> usize {
        self.simplices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Total number of simplices.
    pub fn len(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId::from_index)
    }

    pub fn vertex(&self, v: VertexId) -> &Vertex {
        &self.vertices[v.index()]
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.vertices[v.index()].label
    }

    pub fn point(&self, v: VertexId) -> &Point {
        &self.vertices[v.index()].point
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.by_label.get(label).copied()
    }

    /// All simplices, by increasing dimension.
    pub fn simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter().flatten()
    }

    pub fn simplices_of_dim(&self, k: usize) -> &[Simplex] {
        self.simplices.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn maximal(&self) -> &[Simplex] {
        &self.maximal
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.get(s.dim()).is_some_and(|bucket| bucket.binary_search(s).is_ok())
    }

    /// Number of simplices per dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    /// Number of maximal simplices per dimension.
    pub fn facet_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for s in &self.maximal {
            *census.entry(s.dim()).or_insert(0) += 1;
        }
        census
    }

    pub fn points_of(&self, s: &Simplex) -> Vec<&Point> {
        s.vertices().iter().map(|&v| self.point(v)).collect()
    }

    pub fn labels_of(&self, s: &Simplex) -> Vec<&str> {
        s.vertices().iter().map(|&v| self.label(v)).collect()
    }

    /// `[A,B,C]`-style rendering.
    pub fn display(&self, s: &Simplex) -> String {
        format!("[{}]", self.labels_of(s).join(","))
    }

    pub fn barycenter(&self, s: &Simplex) -> Point {
        Point::barycenter(&self.points_of(s))
    }

    /// Looks a simplex up by vertex labels (any order).
    pub fn simplex_by_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Simplex> {
        let shown = || format!("[{}]", labels.iter().map(AsRef::as_ref).collect::<Vec<_>>().join(","));
        let ids = labels
            .iter()
            .map(|l| {
                self.vertex_by_label(l.as_ref())
                    .ok_or_else(|| Error::UnknownVertex { simplex: shown(), vertex: l.as_ref().to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        let s = Simplex::new(ids).map_err(|_| Error::RepeatedVertex(shown()))?;
        if self.contains(&s) {
            Ok(s)
        } else {
            Err(Error::NotInComplex(shown()))
        }
    }

    /// The simplices of `self` as sorted vertex-point tuples; equal for
    /// complexes with the same geometry whatever their labels.
    pub fn geometric_signature(&self) -> BTreeSet<Vec<Point>> {
        self.simplices()
            .map(|s| {
                let mut pts: Vec<Point> = self.points_of(s).into_iter().cloned().collect();
                pts.sort();
                pts
            })
            .collect()
    }

    pub fn geometrically_equal(&self, other: &GeometricComplex) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.f_vector() == other.f_vector()
            && self.geometric_signature() == other.geometric_signature()
    }

    /// Simplices as sorted label lists.
    pub fn label_signature(&self) -> BTreeSet<Vec<String>> {
        self.simplices().map(|s| self.labels_of(s).into_iter().map(str::to_string).collect()).collect()
    }

    /// Every nonempty face of every simplex in `simplices`.
    pub fn face_closure<'a, I>(simplices: I) -> BTreeSet<Simplex>
    where
        I: IntoIterator<Item = &'a Simplex>,
    {
        simplices.into_iter().flat_map(Simplex::faces).collect()
    }

    /// First `(simplex, missing face)` pair if `selection` is not closed.
    pub fn closure_gap(selection: &BTreeSet<Simplex>) -> Option<(Simplex, Simplex)> {
        selection.iter().find_map(|s| s.facets().find(|f| !selection.contains(f)).map(|f| (s.clone(), f)))
    }

    /// The subcomplex of simplices of dimension `≤ p`.
    pub fn skeleton(&self, p: usize) -> GeometricComplex {
        if p >= self.dim() {
            return self.clone();
        }
        self.restrict(self.simplices.iter().take(p + 1).flatten())
    }

    /// Builds the complex spanned by a subset of `self`'s simplices,
    /// keeping labels and points; the vertex table shrinks to the vertices
    /// used. The subset is taken as given (no closure is added).
    pub fn restrict<'a, I>(&self, simplices: I) -> GeometricComplex
    where
        I: IntoIterator<Item = &'a Simplex>,
    {
        let mut b = ComplexBuilder::new(self.ambient_dim);
        let mut map: HashMap<VertexId, VertexId> = HashMap::new();
        let mut chosen = Vec::new();
        for s in simplices {
            let ids: SmallVec<[VertexId; 4]> = s
                .vertices()
                .iter()
                .map(|&v| {
                    *map.entry(v).or_insert_with(|| b.push_vertex(self.label(v).to_string(), self.point(v).clone()))
                })
                .collect();
            chosen.push(ids);
        }
        for ids in chosen {
            b.push_simplex(ids);
        }
        b.build_unclosed()
    }

    /// Checks that `selection` is a face-closed subset of `self`.
    pub fn check_selection(&self, selection: &BTreeSet<Simplex>) -> Result<()> {
        if let Some(s) = selection.iter().find(|s| !self.contains(s)) {
            return Err(Error::NotInComplex(format!("{s:?}")));
        }
        if let Some((s, f)) = Self::closure_gap(selection) {
            return Err(Error::NotFaceClosed { simplex: self.display(&s), face: self.display(&f) });
        }
        Ok(())
    }

    /// Maps each simplex of `sub` to `self` by label, requiring identical
    /// vertex positions.
    pub fn embed(&self, sub: &GeometricComplex) -> Result<BTreeSet<Simplex>> {
        if sub.ambient_dim != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: sub.ambient_dim });
        }
        let mut map = Vec::with_capacity(sub.vertex_count());
        for v in sub.vertex_ids() {
            let label = sub.label(v);
            let mine = self.vertex_by_label(label).ok_or_else(|| Error::NotInComplex(format!("[{label}]")))?;
            if self.point(mine) != sub.point(v) {
                return Err(Error::LabelConflict(label.to_string()));
            }
            map.push(mine);
        }
        sub.simplices()
            .map(|s| {
                let image = Simplex::new(s.vertices().iter().map(|v| map[v.index()]))?;
                if self.contains(&image) {
                    Ok(image)
                } else {
                    Err(Error::NotInComplex(sub.display(s)))
                }
            })
            .collect()
    }
}

/// Incremental construction of a [`GeometricComplex`].
///
/// Vertices are keyed by label; re-adding a label at the same point returns
/// the existing handle. Handles issued by the builder are renumbered by
/// label order when the complex is built.
#[derive(Clone, Debug)]
pub struct ComplexBuilder {
    ambient_dim: usize,
    vertices: Vec<Vertex>,
    by_label: HashMap<String, VertexId>,
    simplices: Vec<SmallVec<[VertexId; 4]>>,
}

impl ComplexBuilder {
    pub fn new(ambient_dim: usize) -> Self {
        ComplexBuilder { ambient_dim, vertices: Vec::new(), by_label: HashMap::new(), simplices: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn add_vertex(&mut self, label: impl Into<String>, point: Point) -> Result<VertexId> {
        let label = label.into();
        if point.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: point.dim() });
        }
        if let Some(&id) = self.by_label.get(&label) {
            return if self.vertices[id.index()].point == point { Ok(id) } else { Err(Error::LabelConflict(label)) };
        }
        Ok(self.push_vertex(label, point))
    }

    /// Adds a vertex under `label`, or under a suffixed variant if the label
    /// is already taken by a different point.
    pub fn add_derived_vertex(&mut self, label: String, point: Point) -> VertexId {
        let mut candidate = label.clone();
        let mut n = 1;
        loop {
            match self.add_vertex(candidate.clone(), point.clone()) {
                Ok(id) => return id,
                Err(Error::LabelConflict(_)) => {
                    n += 1;
                    candidate = format!("{label}#{n}");
                }
                Err(e) => panic!("derived vertex: {e}"),
            }
        }
    }

    fn push_vertex(&mut self, label: String, point: Point) -> VertexId {
        let id = VertexId::from_index(self.vertices.len());
        self.by_label.insert(label.clone(), id);
        self.vertices.push(Vertex { label, point });
        id
    }

    pub fn vertex(&self, label: &str) -> Option<VertexId> {
        self.by_label.get(label).copied()
    }

    pub fn label(&self, v: VertexId) -> &str {
        &self.vertices[v.index()].label
    }

    pub fn point(&self, v: VertexId) -> &Point {
        &self.vertices[v.index()].point
    }

    pub fn add_simplex(&mut self, vertices: &[VertexId]) -> Result<()> {
        let s = Simplex::new(vertices.iter().copied())?;
        if let Some(v) = s.vertices().iter().find(|v| v.index() >= self.vertices.len()) {
            return Err(Error::UnknownVertex { simplex: format!("{vertices:?}"), vertex: format!("#{}", v.0) });
        }
        self.simplices.push(s.0);
        Ok(())
    }

    pub fn add_simplex_by_labels<S: AsRef<str>>(&mut self, labels: &[S]) -> Result<()> {
        let shown = || format!("[{}]", labels.iter().map(AsRef::as_ref).collect::<Vec<_>>().join(","));
        let ids = labels
            .iter()
            .map(|l| {
                self.vertex(l.as_ref())
                    .ok_or_else(|| Error::UnknownVertex { simplex: shown(), vertex: l.as_ref().to_string() })
            })
            .collect::<Result<Vec<_>>>()?;
        self.add_simplex(&ids).map_err(|e| match e {
            Error::RepeatedVertex(_) => Error::RepeatedVertex(shown()),
            other => other,
        })
    }

    pub(crate) fn push_simplex(&mut self, mut ids: SmallVec<[VertexId; 4]>) {
        ids.sort_unstable();
        self.simplices.push(ids);
    }

    /// Builds the face closure of everything added.
    pub fn build(self) -> GeometricComplex {
        self.build_with_map().0
    }

    /// Like [`build`](Self::build), also returning the final handle of each
    /// builder handle.
    pub fn build_with_map(self) -> (GeometricComplex, Vec<VertexId>) {
        self.finish(true)
    }

    /// Keeps exactly the simplices added (plus all vertices), without
    /// closing under faces.
    pub fn build_unclosed(self) -> GeometricComplex {
        self.finish(false).0
    }

    fn finish(self, close: bool) -> (GeometricComplex, Vec<VertexId>) {
        let ComplexBuilder { ambient_dim, vertices, simplices, .. } = self;
        let mut order: Vec<usize> = (0..vertices.len()).collect();
        order.sort_by(|&a, &b| vertices[a].label.cmp(&vertices[b].label));
        let mut remap = vec![VertexId(0); vertices.len()];
        for (rank, &old) in order.iter().enumerate() {
            remap[old] = VertexId::from_index(rank);
        }
        let mut slots: Vec<Option<Vertex>> = vertices.into_iter().map(Some).collect();
        let vertices: Vec<Vertex> = order.iter().map(|&i| slots[i].take().expect("vertex moved twice")).collect();
        let by_label = vertices.iter().enumerate().map(|(i, v)| (v.label.clone(), VertexId::from_index(i))).collect();

        let mut buckets: Vec<Vec<Simplex>> =
            vec![(0..vertices.len()).map(|i| Simplex::vertex(VertexId::from_index(i))).collect()];
        for ids in simplices {
            let mut mapped: SmallVec<[VertexId; 4]> = ids.iter().map(|v| remap[v.index()]).collect();
            mapped.sort_unstable();
            if mapped.len() > 1 {
                push_bucket(&mut buckets, Simplex(mapped));
            }
        }
        for bucket in &mut buckets {
            bucket.sort_unstable();
            bucket.dedup();
        }
        let maximal = if close { close_downward(&mut buckets) } else { maximal_simplices(&buckets) };
        while buckets.len() > 1 && buckets.last().is_some_and(Vec::is_empty) {
            buckets.pop();
        }
        if buckets.len() == 1 && buckets[0].is_empty() {
            buckets.clear();
        }
        (GeometricComplex { ambient_dim, vertices, by_label, simplices: buckets, maximal }, remap)
    }
}

/// Adds all faces to sorted, deduplicated buckets, one dimension at a time
/// from the top, and returns the maximal simplices: those that are not a
/// facet of anything one dimension up.
fn close_downward(buckets: &mut [Vec<Simplex>]) -> Vec<Simplex> {
    let mut maximal_by_dim = vec![Vec::new(); buckets.len()];
    let mut from_above: Vec<Simplex> = Vec::new();
    for k in (0..buckets.len()).rev() {
        let given = std::mem::take(&mut buckets[k]);
        let mut merged = Vec::with_capacity(given.len() + from_above.len());
        let mut above = from_above.into_iter().peekable();
        for s in given {
            while above.next_if(|a| *a < s).map(|a| merged.push(a)).is_some() {}
            if above.next_if(|a| *a == s).is_none() {
                maximal_by_dim[k].push(s.clone());
            }
            merged.push(s);
        }
        merged.extend(above);
        from_above = if k > 0 { merged.iter().flat_map(Simplex::facets).collect() } else { Vec::new() };
        from_above.sort_unstable();
        from_above.dedup();
        buckets[k] = merged;
    }
    maximal_by_dim.into_iter().flatten().collect()
}

fn push_bucket(buckets: &mut Vec<Vec<Simplex>>, s: Simplex) {
    let k = s.dim();
    if buckets.len() <= k {
        buckets.resize_with(k + 1, Vec::new);
    }
    buckets[k].push(s);
}

/// Simplices of a possibly unclosed set that are not a proper face of
/// another member.
fn maximal_simplices(buckets: &[Vec<Simplex>]) -> Vec<Simplex> {
    let mut covered: Vec<Vec<bool>> = buckets.iter().map(|b| vec![false; b.len()]).collect();
    for bucket in buckets.iter().skip(1) {
        for s in bucket {
            for f in s.proper_faces() {
                let fk = f.dim();
                if let Ok(i) = buckets[fk].binary_search(&f) {
                    covered[fk][i] = true;
                }
            }
        }
    }
    buckets
        .iter()
        .zip(&covered)
        .flat_map(|(b, c)| b.iter().zip(c).filter(|(_, &c)| !c).map(|(s, _)| s.clone()))
        .collect()
}

impl fmt::Display for GeometricComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.simplices().map(|s| self.display(s)).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
