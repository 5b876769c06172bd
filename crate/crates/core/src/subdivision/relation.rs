use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed};

use crate::carrier::{CarrierLocator, Located};
use crate::complex::{GeometricComplex, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::linalg::determinant;
use crate::rational::{format_rational, sqrt_exact, Rational};

/// Evidence that a fine complex `L` subdivides a coarse complex `K`.
///
/// `refinement` sends every simplex of `L` to the smallest simplex of `K`
/// containing it. `covering` sends every simplex `σ` of `K` to the simplices
/// of `L` of the same dimension whose union is `σ`. Keys on each side are
/// handles of the respective complex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubdivisionWitness {
    pub refinement: BTreeMap<Simplex, Simplex>,
    pub covering: BTreeMap<Simplex, Vec<Simplex>>,
}

impl SubdivisionWitness {
    /// Builds both maps from the coarse simplex each fine vertex was
    /// generated in. A fine simplex lies in the simplex spanned by the union
    /// of its vertices' origins, and fills it when the dimensions agree.
    pub fn from_origins(fine: &GeometricComplex, origin: impl Fn(VertexId) -> Simplex) -> Self {
        let origins: Vec<Simplex> = fine.vertex_ids().map(origin).collect();
        let mut witness = SubdivisionWitness::default();
        for s in fine.simplices() {
            let carrier = s
                .vertices()
                .iter()
                .skip(1)
                .fold(origins[s.vertices()[0].index()].clone(), |acc, v| acc.union(&origins[v.index()]));
            if carrier.dim() == s.dim() {
                witness.covering.entry(carrier.clone()).or_default().push(s.clone());
            }
            witness.refinement.insert(s.clone(), carrier);
        }
        witness
    }

    /// Carrier of a fine vertex.
    pub fn carrier_of_vertex(&self, v: VertexId) -> Option<&Simplex> {
        self.refinement.get(&Simplex::vertex(v))
    }
}

/// Why `L` fails to subdivide `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// A fine simplex lies in no coarse simplex.
    NotContained { fine: Simplex, shown: String },
    /// The fine simplices inside a coarse simplex cover only the fraction
    /// `covered` of its volume.
    NotCovered { coarse: Simplex, shown: String, covered: Rational },
}

impl Refutation {
    /// Exact volume left uncovered, when that volume is rational.
    pub fn volume_deficit(&self, k: &GeometricComplex) -> Option<Rational> {
        match self {
            Refutation::NotContained { .. } => None,
            Refutation::NotCovered { coarse, covered, .. } => {
                let volume = sqrt_exact(&crate::linalg::squared_volume(&k.points_of(coarse)))?;
                Some(volume * (Rational::one() - covered))
            }
        }
    }
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refutation::NotContained { shown, .. } => {
                write!(f, "condition 1 fails: {shown} lies in no simplex of the coarse complex")
            }
            Refutation::NotCovered { shown, covered, .. } => {
                write!(f, "condition 2 fails: fine simplices cover {} of {shown}", format_rational(covered))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubdivisionCheck {
    Holds(SubdivisionWitness),
    Refuted(Refutation),
}

impl SubdivisionCheck {
    pub fn holds(&self) -> bool {
        matches!(self, SubdivisionCheck::Holds(_))
    }

    pub fn witness(self) -> Option<SubdivisionWitness> {
        match self {
            SubdivisionCheck::Holds(w) => Some(w),
            SubdivisionCheck::Refuted(_) => None,
        }
    }

    pub fn refutation(&self) -> Option<&Refutation> {
        match self {
            SubdivisionCheck::Holds(_) => None,
            SubdivisionCheck::Refuted(r) => Some(r),
        }
    }
}

/// Decides whether `fine` subdivides `coarse`, both assumed valid.
///
/// Containment: each fine vertex is located in `coarse`; a fine simplex is
/// contained in some coarse simplex exactly when the union of its vertices'
/// carriers is itself a coarse simplex, which is then its carrier.
///
/// Coverage: the fine simplices carried by a `k`-simplex `σ` with dimension
/// `k` have pairwise disjoint interiors, so they cover `σ` exactly when
/// their volumes, taken relative to `σ`, sum to one. A relative volume is
/// the determinant of the vertices' barycentric weights in `σ`.
pub fn is_subdivision(fine: &GeometricComplex, coarse: &GeometricComplex) -> Result<SubdivisionCheck> {
    if fine.ambient_dim() != coarse.ambient_dim() {
        return Err(Error::DimensionMismatch { expected: coarse.ambient_dim(), found: fine.ambient_dim() });
    }
    let locator = CarrierLocator::new(coarse)?;
    let mut located: Vec<Located> = Vec::with_capacity(fine.vertex_count());
    for v in fine.vertex_ids() {
        match locator.locate(fine.point(v))? {
            Some(l) => located.push(l),
            None => {
                let s = Simplex::vertex(v);
                return Ok(SubdivisionCheck::Refuted(Refutation::NotContained { shown: fine.display(&s), fine: s }));
            }
        }
    }

    let mut witness = SubdivisionWitness::default();
    for s in fine.simplices() {
        let vs = s.vertices();
        let carrier = vs[1..]
            .iter()
            .fold(located[vs[0].index()].carrier.clone(), |acc, v| acc.union(&located[v.index()].carrier));
        if !coarse.contains(&carrier) {
            return Ok(SubdivisionCheck::Refuted(Refutation::NotContained { fine: s.clone(), shown: fine.display(s) }));
        }
        if carrier.dim() == s.dim() {
            witness.covering.entry(carrier.clone()).or_default().push(s.clone());
        }
        witness.refinement.insert(s.clone(), carrier);
    }

    for sigma in coarse.simplices() {
        let pieces = witness.covering.get(sigma).map_or(&[][..], Vec::as_slice);
        let covered: Rational = pieces
            .iter()
            .map(|tau| {
                let rows: Vec<Vec<Rational>> = tau
                    .vertices()
                    .iter()
                    .map(|w| sigma.vertices().iter().map(|&u| located[w.index()].weight(u)).collect())
                    .collect();
                determinant(&rows).abs()
            })
            .sum();
        if covered != Rational::one() {
            return Ok(SubdivisionCheck::Refuted(Refutation::NotCovered {
                coarse: sigma.clone(),
                shown: coarse.display(sigma),
                covered,
            }));
        }
    }
    Ok(SubdivisionCheck::Holds(witness))
}
