use serde::Serialize;

use super::{image_basis, pivot_columns, solve, spans_contain, RatMatrix, Rational};
use crate::error::{Error, Result};

/// A subquotient `Z / B` of `ℚ^ambient_dim`, with `B ⊆ Z`.
///
/// All three bases are stored as matrix columns. `representatives` lifts a
/// basis of `Z / B`; together with `boundaries` it is a basis of `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Subquotient {
    ambient_dim: usize,
    cycle_basis: RatMatrix,
    boundary_basis: RatMatrix,
    representative_basis: RatMatrix,
}

/// Builds `span(cycles) / span(boundaries)`. Inputs are spanning sets; they
/// need not be independent.
pub fn subquotient(cycles: &RatMatrix, boundaries: &RatMatrix) -> Result<Subquotient> {
    if cycles.rows() != boundaries.rows() {
        return Err(Error::Shape(format!(
            "cycles live in dimension {}, boundaries in {}",
            cycles.rows(),
            boundaries.rows()
        )));
    }
    let ambient = cycles.rows();
    let cycle_basis = image_basis(cycles);
    let boundary_basis = image_basis(boundaries);
    if !spans_contain(&cycle_basis, &boundary_basis) {
        return Err(Error::ContainmentViolation);
    }
    // Extend the boundary basis greedily by cycle columns.
    let joined = boundary_basis.hstack(&cycle_basis)?;
    let nb = boundary_basis.cols();
    let reps: Vec<usize> = pivot_columns(&joined)
        .into_iter()
        .filter(|&j| j >= nb)
        .collect();
    let representative_basis = joined.select_columns(&reps);
    debug_assert_eq!(representative_basis.rows(), ambient);
    Ok(Subquotient {
        ambient_dim: ambient,
        cycle_basis,
        boundary_basis,
        representative_basis,
    })
}

impl Subquotient {
    /// The zero subquotient of `ℚ^ambient`.
    pub fn zero(ambient: usize) -> Self {
        Subquotient {
            ambient_dim: ambient,
            cycle_basis: RatMatrix::zeros(ambient, 0),
            boundary_basis: RatMatrix::zeros(ambient, 0),
            representative_basis: RatMatrix::zeros(ambient, 0),
        }
    }

    pub fn dim(&self) -> usize {
        self.representative_basis.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn cycle_basis(&self) -> &RatMatrix {
        &self.cycle_basis
    }

    pub fn boundary_basis(&self) -> &RatMatrix {
        &self.boundary_basis
    }

    pub fn representative_basis(&self) -> &RatMatrix {
        &self.representative_basis
    }

    fn reps_then_boundaries(&self) -> RatMatrix {
        self.representative_basis
            .hstack(&self.boundary_basis)
            .expect("same ambient")
    }

    /// Coordinates of the classes of the columns of `vs` in the
    /// representative basis. `None` if some column is not a cycle.
    pub fn coordinates(&self, vs: &RatMatrix) -> Option<RatMatrix> {
        let full = solve(&self.reps_then_boundaries(), vs)?;
        Some(full.block(0, 0, self.dim(), vs.cols()))
    }

    /// Coordinates of a single cycle.
    pub fn class_of(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let m = RatMatrix::from_columns(self.ambient_dim, &[v.to_vec()]);
        self.coordinates(&m).map(|c| c.column(0))
    }

    /// True iff `v` lies in the boundary span.
    pub fn is_boundary(&self, v: &[Rational]) -> bool {
        let m = RatMatrix::from_columns(self.ambient_dim, &[v.to_vec()]);
        spans_contain(&self.boundary_basis, &m)
    }
}

/// Matrix of the map `source → target` induced by `f` on representative
/// bases. Checks that `f` maps cycles to cycles and boundaries to boundaries.
pub fn induced_map(f: &RatMatrix, source: &Subquotient, target: &Subquotient) -> Result<RatMatrix> {
    if f.cols() != source.ambient_dim || f.rows() != target.ambient_dim {
        return Err(Error::Shape(format!(
            "map is {}x{}, subquotients live in {} and {}",
            f.rows(),
            f.cols(),
            source.ambient_dim,
            target.ambient_dim
        )));
    }
    let fb = f * &source.boundary_basis;
    if !spans_contain(&target.boundary_basis, &fb) {
        return Err(Error::NotChainCompatible(
            "boundaries are not mapped into boundaries".into(),
        ));
    }
    let fr = f * &source.representative_basis;
    target
        .coordinates(&fr)
        .ok_or_else(|| Error::NotChainCompatible("cycles are not mapped into cycles".into()))
}
