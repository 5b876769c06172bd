//! Intersections and unions of complexes.

use std::collections::BTreeSet;

use crate::complex::{ComplexBuilder, GeometricComplex, Simplex};
use crate::error::{Error, Result};
use crate::intersect::{meet_properly, Prepared};

/// Intersection of face-closed selections of `k`; always a subcomplex.
/// With no selections this is `k` itself.
pub fn intersect_subcomplexes(k: &GeometricComplex, selections: &[BTreeSet<Simplex>]) -> Result<GeometricComplex> {
    for sel in selections {
        k.check_selection(sel)?;
    }
    let Some((first, rest)) = selections.split_first() else {
        return Ok(k.clone());
    };
    let common: Vec<&Simplex> = first.iter().filter(|s| rest.iter().all(|r| r.contains(*s))).collect();
    Ok(k.restrict(common))
}

/// Union of complexes whose pairwise overlaps are common subcomplexes.
///
/// Vertices are identified by label. Every pair of maximal simplices taken
/// from different parts must meet in a common face; the first pair that
/// does not is reported as [`Error::IncompatibleUnion`].
pub fn union_complexes(parts: &[GeometricComplex]) -> Result<GeometricComplex> {
    let Some(first) = parts.first() else {
        return Err(Error::InvalidArgument("union of no complexes".into()));
    };
    let d = first.ambient_dim();
    let mut builder = ComplexBuilder::new(d);
    for part in parts {
        if part.ambient_dim() != d {
            return Err(Error::DimensionMismatch { expected: d, found: part.ambient_dim() });
        }
        for v in part.vertex_ids() {
            builder.add_vertex(part.label(v), part.point(v).clone()).map_err(|e| match e {
                Error::LabelConflict(label) => {
                    Error::IncompatibleUnion { first: format!("[{label}]"), second: format!("[{label}]") }
                }
                other => other,
            })?;
        }
        for s in part.simplices() {
            builder.add_simplex_by_labels(&part.labels_of(s))?;
        }
    }
    let merged = builder.build();

    let tops: Vec<Vec<(usize, Simplex)>> = parts
        .iter()
        .enumerate()
        .map(|(i, part)| {
            part.maximal()
                .iter()
                .map(|s| Ok((i, merged.simplex_by_labels(&part.labels_of(s))?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    for (i, left) in tops.iter().enumerate() {
        for right in &tops[i + 1..] {
            for (_, a) in left {
                let pa = Prepared::new(merged.points_of(a));
                for (_, b) in right {
                    let pb = Prepared::new(merged.points_of(b));
                    if !meet_properly(&pa, &pb, &a.shared_mask(b), &b.shared_mask(a)) {
                        return Err(Error::IncompatibleUnion { first: merged.display(a), second: merged.display(b) });
                    }
                }
            }
        }
    }
    Ok(merged)
}
