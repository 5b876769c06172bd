use super::{is_subdivision, SubdivisionCheck, SubdivisionWitness};
use crate::complex::GeometricComplex;
use crate::error::{Error, Result};

/// The simplices of the subdivision `fine` of `k` that lie in the
/// subcomplex `k0`, given as its own complex with labels and points
/// matching `k`.
///
/// A fine simplex lies in `|k0|` exactly when its carrier in `k` belongs to
/// `k0`, so the witness's refinement map decides membership.
pub fn induced_subdivision_with(
    fine: &GeometricComplex,
    k0: &GeometricComplex,
    k: &GeometricComplex,
    witness: &SubdivisionWitness,
) -> Result<GeometricComplex> {
    let sub = k.embed(k0)?;
    k.check_selection(&sub)?;
    let kept = fine
        .simplices()
        .map(|s| {
            witness
                .refinement
                .get(s)
                .map(|carrier| (s, sub.contains(carrier)))
                .ok_or_else(|| Error::MissingWitness(fine.display(s)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(fine.restrict(kept.into_iter().filter(|(_, keep)| *keep).map(|(s, _)| s)))
}

/// [`induced_subdivision_with`], computing the witness first.
pub fn induced_subdivision(
    fine: &GeometricComplex,
    k0: &GeometricComplex,
    k: &GeometricComplex,
) -> Result<GeometricComplex> {
    match is_subdivision(fine, k)? {
        SubdivisionCheck::Holds(w) => induced_subdivision_with(fine, k0, k, &w),
        SubdivisionCheck::Refuted(r) => Err(Error::NotASubdivision(r.to_string())),
    }
}
