//! Lie superalgebras presented by graded structure constants.
//!
//! An algebra of graded dimension (m|n) stores the full bracket tensor
//! c[i][j][k] over its field, with basis indices 0..m even and m..m+n odd.
//! Validation checks the three axioms exhaustively on basis tuples:
//! compatibility of the bracket with the grading, graded skew-symmetry, and
//! the graded Jacobi identity. Construction never rejects an axiom failure;
//! it records the violations and marks the algebra as flagged, so defective
//! inputs can still be analyzed deliberately.

use crate::error::{Error, Result};
use crate::exactlin::field::{Field, Scalar};
use crate::exactlin::matrix::{
    row_times_matrix, unit_vec, vec_add, vec_is_zero, vec_scale, zero_vec, Matrix,
};
use crate::exactlin::subspace::{parity_sign, GradedDim, GradedSubspace, Parity};
use crate::superalg::maps::GradedLinearMap;

#[derive(Clone, Debug, PartialEq)]
pub struct GradingViolation {
    pub left: usize,
    pub right: usize,
    pub out: usize,
    pub value: Scalar,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SkewViolation {
    pub left: usize,
    pub right: usize,
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JacobiViolation {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub residual: Vec<Scalar>,
}

/// Exhaustive axiom check results. Empty lists mean a valid Lie superalgebra.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct ValidationReport {
    pub grading_violations: Vec<GradingViolation>,
    pub skew_violations: Vec<SkewViolation>,
    pub jacobi_violations: Vec<JacobiViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.grading_violations.is_empty()
            && self.skew_violations.is_empty()
            && self.jacobi_violations.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct SuperAlgebra {
    field: Field,
    dim: GradedDim,
    names: Vec<String>,
    /// c[i][j][k] at (i*d + j)*d + k, d = dim.total()
    constants: Vec<Scalar>,
    validation: ValidationReport,
    flagged: bool,
}

impl PartialEq for SuperAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.names == other.names
            && self.constants == other.constants
    }
}

/// Quotient algebra with the attendant maps. The quotient basis is the
/// deterministic complement of the ideal in the full space, so its basis
/// vectors are the standard basis vectors outside the ideal's pivot columns.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: SuperAlgebra,
    /// L -> L/I, kernel is the ideal
    pub projection: GradedLinearMap,
    /// L/I -> L, the canonical section; projection after section is identity
    pub section: GradedLinearMap,
    pub ideal: GradedSubspace,
}

/// Direct sum with its two embeddings.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub algebra: SuperAlgebra,
    pub left: GradedLinearMap,
    pub right: GradedLinearMap,
}

impl DirectSum {
    /// Sum coordinate of the i-th left summand basis vector.
    pub fn left_index(&self, i: usize) -> usize {
        embedding_pivot(self.left.matrix(), i)
    }

    /// Sum coordinate of the j-th right summand basis vector.
    pub fn right_index(&self, j: usize) -> usize {
        embedding_pivot(self.right.matrix(), j)
    }
}

/// Rows of a direct-sum embedding are unit vectors; the pivot of row i is
/// where basis vector i lands in the sum.
fn embedding_pivot(embedding: &Matrix, i: usize) -> usize {
    let f = embedding.field();
    embedding
        .row(i)
        .iter()
        .position(|x| !f.is_zero(x))
        .expect("embedding rows are unit vectors")
}

/// A bracket-closed graded subspace turned into an algebra of its own.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: SuperAlgebra,
    /// coordinates of the subalgebra -> ambient algebra
    pub inclusion: GradedLinearMap,
}

pub fn standard_names(d: usize) -> Vec<String> {
    (1..=d).map(|i| format!("e{i}")).collect()
}

impl SuperAlgebra {
    /// Builds from a full structure-constant tensor and validates it.
    pub fn from_constants(
        field: Field,
        dim: GradedDim,
        names: Vec<String>,
        constants: Vec<Scalar>,
    ) -> Result<SuperAlgebra> {
        Self::new_raw(field, dim, names, constants, false)
    }

    fn new_raw(
        field: Field,
        dim: GradedDim,
        names: Vec<String>,
        constants: Vec<Scalar>,
        inherit_flagged: bool,
    ) -> Result<SuperAlgebra> {
        let d = dim.total();
        if names.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "{} names for dimension {d}",
                names.len()
            )));
        }
        if constants.len() != d * d * d {
            return Err(Error::DimensionMismatch(format!(
                "{} constants, expected {}",
                constants.len(),
                d * d * d
            )));
        }
        let mut alg = SuperAlgebra {
            field,
            dim,
            names,
            constants,
            validation: ValidationReport::default(),
            flagged: false,
        };
        alg.validation = alg.run_validation();
        alg.flagged = inherit_flagged || !alg.validation.is_valid();
        Ok(alg)
    }

    /// Builds from sparse bracket entries on pairs (i, j) with i <= j; the
    /// remaining entries follow from graded skew-symmetry. A diagonal entry
    /// i = j is only meaningful for odd i (for even i skew forces [x,x] = 0)
    /// and is rejected otherwise.
    pub fn from_bracket_entries(
        field: Field,
        dim: GradedDim,
        names: Vec<String>,
        entries: &[(usize, usize, Vec<(usize, Scalar)>)],
    ) -> Result<SuperAlgebra> {
        let d = dim.total();
        let mut constants = vec![field.zero(); d * d * d];
        for (i, j, value) in entries {
            let (i, j) = (*i, *j);
            if i >= d || j >= d {
                return Err(Error::Parse(format!(
                    "bracket index ({i},{j}) out of range for dimension {d}"
                )));
            }
            if i > j {
                return Err(Error::Parse(format!(
                    "bracket entry ({i},{j}) must have left <= right"
                )));
            }
            if i == j && Parity::of_index(dim, i) == Parity::Even {
                return Err(Error::Parse(format!(
                    "diagonal bracket ({i},{i}) on an even index is forced to zero"
                )));
            }
            let sign = field.neg(&parity_sign(
                field,
                Parity::of_index(dim, i),
                Parity::of_index(dim, j),
            ));
            for (k, c) in value {
                if *k >= d {
                    return Err(Error::Parse(format!(
                        "bracket target {k} out of range for dimension {d}"
                    )));
                }
                constants[(i * d + j) * d + k] = c.clone();
                if i != j {
                    constants[(j * d + i) * d + k] = field.mul(&sign, c);
                }
            }
        }
        Self::new_raw(field, dim, names, constants, false)
    }

    /// The abelian algebra of the given graded dimension.
    pub fn abelian(field: Field, dim: GradedDim, names: Option<Vec<String>>) -> SuperAlgebra {
        let names = names.unwrap_or_else(|| standard_names(dim.total()));
        Self::from_bracket_entries(field, dim, names, &[]).expect("abelian is well formed")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> GradedDim {
        self.dim
    }

    pub fn total_dim(&self) -> usize {
        self.dim.total()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn parity(&self, i: usize) -> Parity {
        Parity::of_index(self.dim, i)
    }

    pub fn validation(&self) -> &ValidationReport {
        &self.validation
    }

    pub fn is_valid(&self) -> bool {
        self.validation.is_valid()
    }

    /// True when this algebra fails validation or was derived from one that did.
    pub fn flagged(&self) -> bool {
        self.flagged
    }

    pub(crate) fn with_inherited_flag(mut self, inherited: bool) -> SuperAlgebra {
        self.flagged = self.flagged || inherited;
        self
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let d = self.dim.total();
        &self.constants[(i * d + j) * d + k]
    }

    /// [b_i, b_j] as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let d = self.dim.total();
        &self.constants[(i * d + j) * d..(i * d + j + 1) * d]
    }

    /// Bilinear bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>> {
        let d = self.dim.total();
        if x.len() != d || y.len() != d {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of length {}/{} in dimension {d}",
                x.len(),
                y.len()
            )));
        }
        let f = self.field;
        let mut out = zero_vec(f, d);
        for i in 0..d {
            if f.is_zero(&x[i]) {
                continue;
            }
            for j in 0..d {
                if f.is_zero(&y[j]) {
                    continue;
                }
                let coeff = f.mul(&x[i], &y[j]);
                let row = self.bracket_basis(i, j);
                for k in 0..d {
                    if !f.is_zero(&row[k]) {
                        let t = f.mul(&coeff, &row[k]);
                        out[k] = f.add(&out[k], &t);
                    }
                }
            }
        }
        Ok(out)
    }

    /// The matrix of ad(v): row j is [v, b_j].
    pub fn ad_of_vector(&self, v: &[Scalar]) -> Matrix {
        let d = self.dim.total();
        let f = self.field;
        let mut rows = Vec::with_capacity(d);
        for j in 0..d {
            let mut row = zero_vec(f, d);
            for i in 0..d {
                if f.is_zero(&v[i]) {
                    continue;
                }
                let bracket = self.bracket_basis(i, j);
                for k in 0..d {
                    if !f.is_zero(&bracket[k]) {
                        let t = f.mul(&v[i], &bracket[k]);
                        row[k] = f.add(&row[k], &t);
                    }
                }
            }
            rows.push(row);
        }
        Matrix::from_rows(f, d, &rows).unwrap()
    }

    fn run_validation(&self) -> ValidationReport {
        let d = self.dim.total();
        let f = self.field;
        let mut report = ValidationReport::default();

        for i in 0..d {
            for j in 0..d {
                let expected = self.parity(i).add(self.parity(j));
                for k in 0..d {
                    let c = self.constant(i, j, k);
                    if !f.is_zero(c) && self.parity(k) != expected {
                        report.grading_violations.push(GradingViolation {
                            left: i,
                            right: j,
                            out: k,
                            value: c.clone(),
                        });
                    }
                }
            }
        }

        for i in 0..d {
            for j in i..d {
                // residual = c[j][i] + (-1)^{|i||j|} c[i][j]
                let sign = parity_sign(f, self.parity(i), self.parity(j));
                let residual = vec_add(
                    f,
                    self.bracket_basis(j, i),
                    &vec_scale(f, &sign, self.bracket_basis(i, j)),
                );
                if !vec_is_zero(f, &residual) {
                    report.skew_violations.push(SkewViolation {
                        left: i,
                        right: j,
                        residual,
                    });
                }
            }
        }

        for x in 0..d {
            for y in 0..d {
                for z in 0..d {
                    let residual = self.jacobi_residual(x, y, z);
                    if !vec_is_zero(f, &residual) {
                        report.jacobi_violations.push(JacobiViolation {
                            x,
                            y,
                            z,
                            residual,
                        });
                    }
                }
            }
        }
        report
    }

    /// Direct tensor-contraction evaluation of the graded Jacobi sum
    /// (-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]
    /// at basis indices.
    pub fn jacobi_residual(&self, x: usize, y: usize, z: usize) -> Vec<Scalar> {
        let d = self.dim.total();
        let f = self.field;
        let (px, py, pz) = (self.parity(x), self.parity(y), self.parity(z));
        let mut out = zero_vec(f, d);
        let mut add_term = |outer: usize, inner: &[Scalar], sign: Scalar| {
            for l in 0..d {
                if f.is_zero(&inner[l]) {
                    continue;
                }
                let coeff = f.mul(&sign, &inner[l]);
                let row = self.bracket_basis(outer, l);
                for k in 0..d {
                    if !f.is_zero(&row[k]) {
                        let t = f.mul(&coeff, &row[k]);
                        out[k] = f.add(&out[k], &t);
                    }
                }
            }
        };
        add_term(x, self.bracket_basis(y, z), parity_sign(f, px, pz));
        add_term(y, self.bracket_basis(z, x), parity_sign(f, py, px));
        add_term(z, self.bracket_basis(x, y), parity_sign(f, pz, py));
        out
    }

    pub fn full_space(&self) -> GradedSubspace {
        GradedSubspace::full(self.field, self.dim)
    }

    /// The center {v : [v, L] = 0}, computed as the kernel of the stacked
    /// ad-matrices and regraded parity-wise.
    pub fn center(&self) -> GradedSubspace {
        let d = self.dim.total();
        let f = self.field;
        // A[i][(j,k)] = c[i][j][k]; v.A = 0 iff [v, b_j] = 0 for all j
        let mut stacked = Matrix::zero(f, d, d * d);
        for i in 0..d {
            for j in 0..d {
                let row = self.bracket_basis(i, j);
                for k in 0..d {
                    stacked[(i, j * d + k)] = row[k].clone();
                }
            }
        }
        let null = stacked.transpose().kernel();
        GradedSubspace::from_rows(f, self.dim, &null.row_vecs())
            .expect("center of a grading-compatible tensor is graded")
    }

    /// The derived subalgebra [L, L], spanned by all basis brackets.
    pub fn derived(&self) -> GradedSubspace {
        let d = self.dim.total();
        let mut rows = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let row = self.bracket_basis(i, j);
                if !vec_is_zero(self.field, row) {
                    rows.push(row.to_vec());
                }
            }
        }
        GradedSubspace::from_rows(self.field, self.dim, &rows)
            .expect("brackets of homogeneous elements are homogeneous")
    }

    /// Span of all brackets [u, v] with u, v running over the given bases.
    pub fn bracket_span(&self, u: &GradedSubspace, v: &GradedSubspace) -> Result<GradedSubspace> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        let ub = u.basis();
        let vb = v.basis();
        let mut rows = Vec::new();
        for a in 0..ub.rows() {
            for b in 0..vb.rows() {
                let w = self.bracket(ub.row(a), vb.row(b))?;
                if !vec_is_zero(self.field, &w) {
                    rows.push(w);
                }
            }
        }
        GradedSubspace::from_rows(self.field, self.dim, &rows)
    }

    /// Does [U, L] land back inside U (with U graded and inside this algebra)?
    pub fn is_graded_ideal(&self, u: &GradedSubspace) -> Result<bool> {
        self.check_subspace(u)?;
        let basis = u.basis();
        let d = self.dim.total();
        for a in 0..basis.rows() {
            for j in 0..d {
                let v = self.bracket(basis.row(a), &unit_vec(self.field, d, j))?;
                if !u.contains_vector(&v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn check_subspace(&self, u: &GradedSubspace) -> Result<()> {
        if u.field() != self.field {
            return Err(Error::FieldMismatch(
                self.field.describe(),
                u.field().describe(),
            ));
        }
        if u.ambient() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "subspace ambient {} vs algebra dimension {}",
                u.ambient(),
                self.dim
            )));
        }
        Ok(())
    }

    /// Quotient by a graded ideal, on the deterministic complement basis.
    pub fn quotient(&self, ideal: &GradedSubspace) -> Result<Quotient> {
        if !self.is_graded_ideal(ideal)? {
            return Err(Error::NotAnIdeal(format!(
                "quotient by a {} subspace that is not an ideal",
                ideal.graded_dim()
            )));
        }
        let f = self.field;
        let d = self.dim.total();
        let w = ideal.complement_in(&self.full_space())?;
        let qdim = w.graded_dim();
        let q = qdim.total();
        let section_rows = w.basis();
        let decomposition = ideal.basis().vstack(&section_rows)?;
        let ideal_rank = ideal.basis().rows();

        let tail = |v: &[Scalar]| -> Vec<Scalar> {
            let coords = crate::exactlin::matrix::coords_in_rows(&decomposition, v)
                .expect("ideal + complement spans everything");
            coords[ideal_rank..].to_vec()
        };

        let mut constants = vec![f.zero(); q * q * q];
        for a in 0..q {
            for b in 0..q {
                let v = self.bracket(section_rows.row(a), section_rows.row(b))?;
                let coords = tail(&v);
                for (k, c) in coords.into_iter().enumerate() {
                    constants[(a * q + b) * q + k] = c;
                }
            }
        }

        let names: Vec<String> = (0..q)
            .map(|a| {
                let row = section_rows.row(a);
                let pivot = row.iter().position(|x| !f.is_zero(x)).expect("basis row");
                self.names[pivot].clone()
            })
            .collect();

        let algebra = SuperAlgebra::new_raw(f, qdim, names, constants, self.flagged)?;

        let mut proj_rows = Vec::with_capacity(d);
        for i in 0..d {
            proj_rows.push(tail(&unit_vec(f, d, i)));
        }
        let projection =
            GradedLinearMap::new(self.dim, qdim, Matrix::from_rows(f, q, &proj_rows)?)?;
        let section = GradedLinearMap::new(qdim, self.dim, section_rows)?;
        Ok(Quotient {
            algebra,
            projection,
            section,
            ideal: ideal.clone(),
        })
    }

    /// Quotient by the center.
    pub fn central_quotient(&self) -> Quotient {
        self.quotient(&self.center())
            .expect("the center is always a graded ideal")
    }

    /// Direct sum, with even coordinates of both summands first.
    pub fn direct_sum(&self, other: &SuperAlgebra) -> Result<DirectSum> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.describe(),
                other.field.describe(),
            ));
        }
        let f = self.field;
        let dim = self.dim.plus(&other.dim);
        let d = dim.total();

        let map_left = |i: usize| -> usize {
            if i < self.dim.even {
                i
            } else {
                self.dim.even + other.dim.even + (i - self.dim.even)
            }
        };
        let map_right = |j: usize| -> usize {
            if j < other.dim.even {
                self.dim.even + j
            } else {
                self.dim.even + other.dim.even + self.dim.odd + (j - other.dim.even)
            }
        };

        let mut names = vec![String::new(); d];
        for (i, n) in self.names.iter().enumerate() {
            names[map_left(i)] = n.clone();
        }
        for (j, n) in other.names.iter().enumerate() {
            let mut candidate = n.clone();
            while names.contains(&candidate) {
                candidate.push('\'');
            }
            names[map_right(j)] = candidate;
        }

        let mut constants = vec![f.zero(); d * d * d];
        let da = self.dim.total();
        let db = other.dim.total();
        for i in 0..da {
            for j in 0..da {
                let row = self.bracket_basis(i, j);
                for k in 0..da {
                    if !f.is_zero(&row[k]) {
                        constants[(map_left(i) * d + map_left(j)) * d + map_left(k)] =
                            row[k].clone();
                    }
                }
            }
        }
        for i in 0..db {
            for j in 0..db {
                let row = other.bracket_basis(i, j);
                for k in 0..db {
                    if !f.is_zero(&row[k]) {
                        constants[(map_right(i) * d + map_right(j)) * d + map_right(k)] =
                            row[k].clone();
                    }
                }
            }
        }

        let algebra =
            SuperAlgebra::new_raw(f, dim, names, constants, self.flagged || other.flagged)?;

        let mut left_rows = Vec::with_capacity(da);
        for i in 0..da {
            left_rows.push(unit_vec(f, d, map_left(i)));
        }
        let mut right_rows = Vec::with_capacity(db);
        for j in 0..db {
            right_rows.push(unit_vec(f, d, map_right(j)));
        }
        let left = GradedLinearMap::new(self.dim, dim, Matrix::from_rows(f, d, &left_rows)?)?;
        let right = GradedLinearMap::new(other.dim, dim, Matrix::from_rows(f, d, &right_rows)?)?;
        Ok(DirectSum {
            algebra,
            left,
            right,
        })
    }

    /// Turns a bracket-closed graded subspace into an algebra on its canonical
    /// basis. Errors when the subspace is not closed under the bracket.
    pub fn subalgebra_on(&self, u: &GradedSubspace) -> Result<Subalgebra> {
        self.check_subspace(u)?;
        let f = self.field;
        let basis = u.basis();
        let q = basis.rows();
        let qdim = u.graded_dim();
        let mut constants = vec![f.zero(); q * q * q];
        for a in 0..q {
            for b in 0..q {
                let v = self.bracket(basis.row(a), basis.row(b))?;
                let coords = u.coords_of(&v).ok_or_else(|| {
                    Error::Incompatible(format!(
                        "subspace of dimension {} is not bracket-closed",
                        u.graded_dim()
                    ))
                })?;
                for (k, c) in coords.into_iter().enumerate() {
                    constants[(a * q + b) * q + k] = c;
                }
            }
        }
        let names: Vec<String> = (0..q)
            .map(|a| {
                let row = basis.row(a);
                let pivot = row.iter().position(|x| !f.is_zero(x)).expect("basis row");
                self.names[pivot].clone()
            })
            .collect();
        let algebra = SuperAlgebra::new_raw(f, qdim, names, constants, self.flagged)?;
        let inclusion = GradedLinearMap::new(qdim, self.dim, basis)?;
        Ok(Subalgebra { algebra, inclusion })
    }

    /// The derived subalgebra as an algebra, with its inclusion.
    pub fn derived_subalgebra(&self) -> Subalgebra {
        self.subalgebra_on(&self.derived())
            .expect("the derived subspace is bracket-closed")
    }

    /// Re-expresses the algebra in a new basis. Row i of `p` is the i-th new
    /// basis vector in old coordinates; `p` must be graded and invertible.
    pub fn transform_basis(&self, p: &GradedLinearMap) -> Result<SuperAlgebra> {
        if p.source() != self.dim || p.target() != self.dim {
            return Err(Error::DimensionMismatch(
                "basis transform must be an endomap of the algebra's dimension".into(),
            ));
        }
        let inv = p.inverse()?;
        let d = self.dim.total();
        let f = self.field;
        let mut constants = vec![f.zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                let v = self.bracket(p.matrix().row(i), p.matrix().row(j))?;
                let coords = row_times_matrix(f, &v, inv.matrix());
                for (k, c) in coords.into_iter().enumerate() {
                    constants[(i * d + j) * d + k] = c;
                }
            }
        }
        SuperAlgebra::new_raw(f, self.dim, self.names.clone(), constants, self.flagged)
    }
}
