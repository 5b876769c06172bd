use std::collections::HashMap;

use smallvec::SmallVec;

use super::derived_label;
use crate::complex::{ComplexBuilder, GeometricComplex, Simplex, VertexId};
use crate::error::{Error, Result};

/// A strictly decreasing chain of faces `σ₁ > σ₂ > ⋯ > σₙ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flag {
    chain: Vec<Simplex>,
}

impl Flag {
    /// Checks that every link is a proper face of its predecessor and that
    /// the chain is nonempty and lives in `k`.
    pub fn new(k: &GeometricComplex, chain: Vec<Simplex>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::InvalidArgument("empty flag".into()));
        }
        if let Some(s) = chain.iter().find(|s| !k.contains(s)) {
            return Err(Error::NotInComplex(format!("{s:?}")));
        }
        if let Some(w) = chain.windows(2).find(|w| !(w[1].len() < w[0].len() && w[1].is_face_of(&w[0]))) {
            return Err(Error::InvalidArgument(format!(
                "{} is not a proper face of {}",
                k.display(&w[1]),
                k.display(&w[0])
            )));
        }
        Ok(Flag { chain })
    }

    pub fn chain(&self) -> &[Simplex] {
        &self.chain
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }
}

/// Every flag of `k`, by depth-first search down the face poset.
pub fn enumerate_flags(k: &GeometricComplex) -> Vec<Flag> {
    let mut out = Vec::new();
    let mut chain = Vec::new();
    for s in k.simplices() {
        chain.push(s.clone());
        extend(k, &mut chain, &mut out);
        chain.pop();
    }
    out
}

fn extend(k: &GeometricComplex, chain: &mut Vec<Simplex>, out: &mut Vec<Flag>) {
    out.push(Flag { chain: chain.clone() });
    let last = chain.last().expect("chain is nonempty").clone();
    for face in last.proper_faces() {
        if k.contains(&face) {
            chain.push(face);
            extend(k, chain, out);
            chain.pop();
        }
    }
}

/// The complex of simplices `[b_σ₁, …, b_σₙ]` over all flags of `k`.
///
/// Built straight from the flags, without face closure: a subchain of a flag
/// is again a flag, so the result is closed on its own.
pub fn barycentric_flags(k: &GeometricComplex) -> GeometricComplex {
    let mut b = ComplexBuilder::new(k.ambient_dim());
    let mut ids: HashMap<Simplex, VertexId> = HashMap::new();
    for s in k.simplices() {
        let label = derived_label("b", &k.labels_of(s));
        ids.insert(s.clone(), b.add_derived_vertex(label, k.barycenter(s)));
    }
    for flag in enumerate_flags(k) {
        if flag.len() > 1 {
            b.push_simplex(flag.chain.iter().map(|s| ids[s]).collect::<SmallVec<[VertexId; 4]>>());
        }
    }
    b.build_unclosed()
}
