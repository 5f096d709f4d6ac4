//! Parity-preserving linear maps between graded coordinate spaces.

use crate::error::{Error, Result};
use crate::exactlin::field::{Field, Scalar};
use crate::exactlin::matrix::{row_times_matrix, Matrix};
use crate::exactlin::subspace::{GradedDim, GradedSubspace, Parity};
use crate::superalg::algebra::SuperAlgebra;

/// A graded linear map given by a matrix acting on row vectors: row i is the
/// image of the i-th source basis vector. Gradedness means the matrix is
/// block-diagonal with respect to the even/odd splits of source and target,
/// which `new` enforces.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedLinearMap {
    source: GradedDim,
    target: GradedDim,
    matrix: Matrix,
}

impl GradedLinearMap {
    pub fn new(source: GradedDim, target: GradedDim, matrix: Matrix) -> Result<GradedLinearMap> {
        if matrix.rows() != source.total() || matrix.cols() != target.total() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for map {} -> {}",
                matrix.rows(),
                matrix.cols(),
                source,
                target
            )));
        }
        let f = matrix.field();
        for i in 0..matrix.rows() {
            let pi = Parity::of_index(source, i);
            for j in 0..matrix.cols() {
                if Parity::of_index(target, j) != pi && !f.is_zero(&matrix[(i, j)]) {
                    return Err(Error::NotGradedMap(format!(
                        "entry ({i},{j}) mixes parities"
                    )));
                }
            }
        }
        Ok(GradedLinearMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(field: Field, dim: GradedDim) -> GradedLinearMap {
        GradedLinearMap {
            source: dim,
            target: dim,
            matrix: Matrix::identity(field, dim.total()),
        }
    }

    pub fn field(&self) -> Field {
        self.matrix.field()
    }

    pub fn source(&self) -> GradedDim {
        self.source
    }

    pub fn target(&self) -> GradedDim {
        self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        row_times_matrix(self.field(), v, &self.matrix)
    }

    /// Composition: first self, then other.
    pub fn then(&self, other: &GradedLinearMap) -> Result<GradedLinearMap> {
        if self.target != other.source {
            return Err(Error::DimensionMismatch(format!(
                "composition {} -> {} with {} -> {}",
                self.source, self.target, other.source, other.target
            )));
        }
        GradedLinearMap::new(self.source, other.target, self.matrix.mul(&other.matrix)?)
    }

    pub fn inverse(&self) -> Result<GradedLinearMap> {
        if self.source != self.target {
            return Err(Error::Singular(format!(
                "only endomaps invert; this is {} -> {}",
                self.source, self.target
            )));
        }
        GradedLinearMap::new(self.target, self.source, self.matrix.inverse()?)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_bijective(&self) -> bool {
        self.source == self.target && self.matrix.rank() == self.matrix.rows()
    }

    /// Kernel as a graded subspace of the source.
    pub fn kernel(&self) -> GradedSubspace {
        let null = self.matrix.transpose().kernel();
        GradedSubspace::from_rows(self.field(), self.source, &null.row_vecs())
            .expect("kernel of a graded map is graded")
    }

    /// Image as a graded subspace of the target.
    pub fn image(&self) -> GradedSubspace {
        GradedSubspace::from_rows(self.field(), self.target, &self.matrix.row_vecs())
            .expect("image of a graded map is graded")
    }

    /// Image of a graded subspace of the source.
    pub fn image_of(&self, u: &GradedSubspace) -> Result<GradedSubspace> {
        if u.ambient() != self.source {
            return Err(Error::DimensionMismatch(format!(
                "subspace ambient {} vs map source {}",
                u.ambient(),
                self.source
            )));
        }
        let rows: Vec<Vec<Scalar>> = u.basis().row_vecs().iter().map(|r| self.apply(r)).collect();
        GradedSubspace::from_rows(self.field(), self.target, &rows)
    }

    /// Does this map send brackets to brackets on every basis pair?
    pub fn is_homomorphism(&self, source: &SuperAlgebra, target: &SuperAlgebra) -> Result<bool> {
        self.check_algebras(source, target)?;
        let d = source.total_dim();
        for i in 0..d {
            for j in 0..d {
                let lhs = self.apply(source.bracket_basis(i, j));
                let rhs = target.bracket(self.matrix.row(i), self.matrix.row(j))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_isomorphism(&self, source: &SuperAlgebra, target: &SuperAlgebra) -> Result<bool> {
        Ok(self.is_bijective() && self.is_homomorphism(source, target)?)
    }

    fn check_algebras(&self, source: &SuperAlgebra, target: &SuperAlgebra) -> Result<()> {
        if source.field() != target.field() || source.field() != self.field() {
            return Err(Error::FieldMismatch(
                source.field().describe(),
                target.field().describe(),
            ));
        }
        if source.dim() != self.source || target.dim() != self.target {
            return Err(Error::DimensionMismatch(format!(
                "map {} -> {} between algebras {} and {}",
                self.source,
                self.target,
                source.dim(),
                target.dim()
            )));
        }
        Ok(())
    }
}
