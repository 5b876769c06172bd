use std::collections::HashMap;

use itertools::Itertools;
use smallvec::SmallVec;

use super::{derived_label, SubdivisionWitness};
use crate::complex::{ComplexBuilder, GeometricComplex, Simplex, VertexId};

/// First barycentric subdivision, with the witness that it subdivides `k`.
///
/// Each ordering `v₀, v₁, …, v_p` of a maximal simplex contributes the
/// simplex on the barycenters of `{v₀}, {v₀,v₁}, …, {v₀,…,v_p}`. Original
/// vertices keep their labels; a barycenter is labelled `b(…)` after its face.
pub fn barycentric_subdivide(k: &GeometricComplex) -> (GeometricComplex, SubdivisionWitness) {
    let (fine, origin) = subdivide(k);
    let witness = SubdivisionWitness::from_origins(&fine, |v| origin[v.index()].clone());
    (fine, witness)
}

/// The subdivision plus, per fine vertex, the face of `k` it was built from.
fn subdivide(k: &GeometricComplex) -> (GeometricComplex, Vec<Simplex>) {
    let mut b = ComplexBuilder::new(k.ambient_dim());
    let mut memo: HashMap<Simplex, VertexId> = HashMap::new();
    let mut origin: Vec<Simplex> = Vec::new();

    let mut vertex_for = |face: Simplex, b: &mut ComplexBuilder| -> VertexId {
        if let Some(&id) = memo.get(&face) {
            return id;
        }
        let label = derived_label("b", &k.labels_of(&face));
        let id = b.add_derived_vertex(label, k.barycenter(&face));
        if origin.len() <= id.index() {
            origin.resize(id.index() + 1, face.clone());
        }
        origin[id.index()] = face.clone();
        memo.insert(face, id);
        id
    };

    for v in k.vertex_ids() {
        vertex_for(Simplex::vertex(v), &mut b);
    }
    for sigma in k.maximal() {
        if sigma.len() == 1 {
            continue;
        }
        for order in sigma.vertices().iter().copied().permutations(sigma.len()) {
            let mut chain: SmallVec<[VertexId; 4]> = SmallVec::new();
            for i in 1..=order.len() {
                let face = Simplex::new(order[..i].iter().copied()).expect("prefix of a permutation");
                chain.push(vertex_for(face, &mut b));
            }
            b.push_simplex(chain);
        }
    }

    let (fine, remap) = b.build_with_map();
    let mut by_final = vec![Simplex::vertex(VertexId::from_index(0)); fine.vertex_count()];
    for (old, face) in origin.into_iter().enumerate() {
        by_final[remap[old].index()] = face;
    }
    (fine, by_final)
}

/// `n`-fold barycentric subdivision; `n = 0` returns a copy of `k`.
pub fn barycentric_subdivide_n(k: &GeometricComplex, n: usize) -> GeometricComplex {
    let mut current = k.clone();
    for _ in 0..n {
        current = subdivide(&current).0;
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subdivision::is_subdivision;
    use crate::verify::corpus;

    #[test]
    fn edge_gains_its_midpoint() {
        let k = corpus::edge();
        let (l, _) = barycentric_subdivide(&k);
        let names: Vec<String> = l.simplices().map(|s| l.display(s)).collect();
        assert_eq!(names, ["[A]", "[B]", "[b(A,B)]", "[A,b(A,B)]", "[B,b(A,B)]"]);
        assert_eq!(l.point(l.vertex_by_label("b(A,B)").unwrap()).to_strings(), ["1/2", "0"]);
    }

    #[test]
    fn triangle_counts() {
        let (l, w) = barycentric_subdivide(&corpus::triangle());
        assert_eq!(l.f_vector(), vec![7, 12, 6]);
        assert_eq!(is_subdivision(&l, &corpus::triangle()).unwrap().witness(), Some(w));
    }

    #[test]
    fn tail_is_split_once_then_twice() {
        let k = corpus::triangle_with_tail();
        let tail = k.simplex_by_labels(&["v0", "w"]).unwrap();
        let (l, w) = barycentric_subdivide(&k);
        assert_eq!(l.facet_census().into_iter().collect::<Vec<_>>(), vec![(1, 2), (2, 6)]);
        let on_tail = |w: &SubdivisionWitness| w.covering[&tail].len();
        assert_eq!(on_tail(&w), 2);
        assert!(l.vertex_by_label("b(v0,w)").is_some());

        let l2 = barycentric_subdivide_n(&k, 2);
        let w2 = is_subdivision(&l2, &k).unwrap().witness().unwrap();
        assert_eq!(on_tail(&w2), 4);
        assert_eq!(l2.simplices_of_dim(2).len(), 36);
    }

    #[test]
    fn zero_iterations_is_identity() {
        let k = corpus::triangle();
        assert_eq!(barycentric_subdivide_n(&k, 0), k);
    }

    #[test]
    fn isolated_vertex_survives() {
        let k = corpus::single_vertex();
        let (l, w) = barycentric_subdivide(&k);
        assert_eq!(l, k);
        assert_eq!(w.refinement.len(), 1);
    }
}
