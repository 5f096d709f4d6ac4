//! Z2-graded dimensions, parities and graded subspaces.
//!
//! A graded subspace of an (m|n)-dimensional ambient space stores one RREF
//! basis per parity, both in full ambient coordinates: even basis rows have
//! zero odd coordinates and odd basis rows zero even coordinates. The first m
//! ambient coordinates are even, the remaining n odd.
//!
//! Complements are deterministic: the complement of U in V is spanned by the
//! RREF rows of V whose pivot columns are not pivot columns of U (per
//! parity). Since every pivot column of a subspace is a pivot column of any
//! space containing it, this always yields a direct complement.

use crate::error::{Error, Result};
use crate::exactlin::field::{Field, Scalar};
use crate::exactlin::matrix::{coords_in_rows, row_times_matrix, vec_is_zero, Matrix};
use rand::Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GradedDim {
    pub even: usize,
    pub odd: usize,
}

impl GradedDim {
    pub fn new(even: usize, odd: usize) -> GradedDim {
        GradedDim { even, odd }
    }

    pub fn total(&self) -> usize {
        self.even + self.odd
    }

    pub fn plus(&self, other: &GradedDim) -> GradedDim {
        GradedDim::new(self.even + other.even, self.odd + other.odd)
    }

    /// Componentwise <=.
    pub fn fits_in(&self, other: &GradedDim) -> bool {
        self.even <= other.even && self.odd <= other.odd
    }
}

impl std::fmt::Display for GradedDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}|{})", self.even, self.odd)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_index(dim: GradedDim, i: usize) -> Parity {
        assert!(i < dim.total(), "index {i} out of range for {dim}");
        if i < dim.even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(&self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn add(&self, other: Parity) -> Parity {
        if *self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Sign (-1)^{|a||b|} as a field element.
pub fn parity_sign(field: Field, a: Parity, b: Parity) -> Scalar {
    if a == Parity::Odd && b == Parity::Odd {
        field.from_i64(-1)
    } else {
        field.one()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedSubspace {
    field: Field,
    ambient: GradedDim,
    even: Matrix, // RREF rows supported on even coordinates
    odd: Matrix,  // RREF rows supported on odd coordinates
}

impl GradedSubspace {
    pub fn zero(field: Field, ambient: GradedDim) -> GradedSubspace {
        let n = ambient.total();
        GradedSubspace {
            field,
            ambient,
            even: Matrix::zero(field, 0, n),
            odd: Matrix::zero(field, 0, n),
        }
    }

    pub fn full(field: Field, ambient: GradedDim) -> GradedSubspace {
        let n = ambient.total();
        let id = Matrix::identity(field, n);
        let even_rows: Vec<Vec<Scalar>> = (0..ambient.even).map(|i| id.row(i).to_vec()).collect();
        let odd_rows: Vec<Vec<Scalar>> =
            (ambient.even..n).map(|i| id.row(i).to_vec()).collect();
        GradedSubspace {
            field,
            ambient,
            even: Matrix::from_rows(field, n, &even_rows).unwrap(),
            odd: Matrix::from_rows(field, n, &odd_rows).unwrap(),
        }
    }

    /// Span of arbitrary ambient rows, split into parity components. Errors
    /// when the span is not graded, i.e. when it is not the direct sum of its
    /// intersections with the even and odd coordinate subspaces.
    pub fn from_rows(field: Field, ambient: GradedDim, rows: &[Vec<Scalar>]) -> Result<GradedSubspace> {
        let n = ambient.total();
        let m = Matrix::from_rows(field, n, rows)?;
        let (basis, _) = m.rref();
        let even_part = pure_parity_part(&basis, ambient, Parity::Even);
        let odd_part = pure_parity_part(&basis, ambient, Parity::Odd);
        if even_part.rows() + odd_part.rows() != basis.rows() {
            return Err(Error::NotGraded(format!(
                "span has dimension {} but graded part only ({}|{})",
                basis.rows(),
                even_part.rows(),
                odd_part.rows()
            )));
        }
        Ok(GradedSubspace {
            field,
            ambient,
            even: even_part,
            odd: odd_part,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> GradedDim {
        self.ambient
    }

    pub fn graded_dim(&self) -> GradedDim {
        GradedDim::new(self.even.rows(), self.odd.rows())
    }

    pub fn even_basis(&self) -> &Matrix {
        &self.even
    }

    pub fn odd_basis(&self) -> &Matrix {
        &self.odd
    }

    /// Even basis rows stacked over odd basis rows; the canonical ordered
    /// basis of the subspace.
    pub fn basis(&self) -> Matrix {
        self.even.vstack(&self.odd).expect("same ambient width")
    }

    pub fn is_zero_space(&self) -> bool {
        self.even.rows() == 0 && self.odd.rows() == 0
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.coords_of(v).is_some()
    }

    /// Coordinates of v relative to `basis()` rows; None outside the span.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if vec_is_zero(self.field, v) {
            return Some(vec![self.field.zero(); self.basis().rows()]);
        }
        coords_in_rows(&self.basis(), v)
    }

    pub fn contains(&self, other: &GradedSubspace) -> bool {
        let b = other.basis();
        (0..b.rows()).all(|i| self.contains_vector(b.row(i)))
    }

    pub fn sum(&self, other: &GradedSubspace) -> Result<GradedSubspace> {
        self.check_compatible(other)?;
        let even = self.even.vstack(&other.even)?.rref().0;
        let odd = self.odd.vstack(&other.odd)?.rref().0;
        Ok(GradedSubspace {
            field: self.field,
            ambient: self.ambient,
            even,
            odd,
        })
    }

    pub fn intersect(&self, other: &GradedSubspace) -> Result<GradedSubspace> {
        self.check_compatible(other)?;
        Ok(GradedSubspace {
            field: self.field,
            ambient: self.ambient,
            even: intersect_row_spaces(&self.even, &other.even),
            odd: intersect_row_spaces(&self.odd, &other.odd),
        })
    }

    /// Deterministic complement of self inside `within`: per parity, the RREF
    /// rows of `within` whose pivots are not pivots of self.
    pub fn complement_in(&self, within: &GradedSubspace) -> Result<GradedSubspace> {
        self.check_compatible(within)?;
        if !within.contains(self) {
            return Err(Error::NotContained(
                "complement_in: subspace exceeds the enclosing space".into(),
            ));
        }
        Ok(GradedSubspace {
            field: self.field,
            ambient: self.ambient,
            even: complement_rows(&self.even, &within.even),
            odd: complement_rows(&self.odd, &within.odd),
        })
    }

    /// A seeded random complement of self inside `within`: the deterministic
    /// complement with each basis row perturbed by a random element of self
    /// of the same parity. Any such perturbation is again a complement.
    pub fn random_complement_in<R: Rng>(
        &self,
        within: &GradedSubspace,
        rng: &mut R,
    ) -> Result<GradedSubspace> {
        let base = self.complement_in(within)?;
        let f = self.field;
        let mut perturb = |comp: &Matrix, own: &Matrix| -> Matrix {
            let mut rows = Vec::with_capacity(comp.rows());
            for i in 0..comp.rows() {
                let mut v = comp.row(i).to_vec();
                for j in 0..own.rows() {
                    let c = random_scalar(f, rng);
                    for (vk, ok) in v.iter_mut().zip(own.row(j)) {
                        let t = f.mul(&c, ok);
                        *vk = f.add(vk, &t);
                    }
                }
                rows.push(v);
            }
            Matrix::from_rows(f, comp.cols(), &rows).unwrap()
        };
        let even = perturb(&base.even, &self.even);
        let odd = perturb(&base.odd, &self.odd);
        // not RREF in general; rebuild through from_rows to canonicalize
        let all: Vec<Vec<Scalar>> = even.row_vecs().into_iter().chain(odd.row_vecs()).collect();
        GradedSubspace::from_rows(f, self.ambient, &all)
    }

    fn check_compatible(&self, other: &GradedSubspace) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.describe(),
                other.field.describe(),
            ));
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

fn random_scalar<R: Rng>(field: Field, rng: &mut R) -> Scalar {
    match field {
        Field::Rationals => field.from_i64(rng.gen_range(-2..=2)),
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p.min(64)) as i64),
    }
}

/// Rows of `basis`'s row space supported purely on the given parity's
/// coordinates, i.e. the intersection with that coordinate subspace.
fn pure_parity_part(basis: &Matrix, ambient: GradedDim, parity: Parity) -> Matrix {
    let field = basis.field();
    let n = ambient.total();
    if basis.rows() == 0 {
        return Matrix::zero(field, 0, n);
    }
    // columns of the opposite parity must vanish
    let other_cols: Vec<usize> = (0..n)
        .filter(|&i| Parity::of_index(ambient, i) != parity)
        .collect();
    let restricted = basis.select_columns(&other_cols);
    // {x : x . restricted = 0}
    let coeffs = restricted.transpose().kernel();
    let mut rows = Vec::with_capacity(coeffs.rows());
    for i in 0..coeffs.rows() {
        rows.push(row_times_matrix(field, coeffs.row(i), basis));
    }
    Matrix::from_rows(field, n, &rows).unwrap().rref().0
}

/// Intersection of two row spaces given by independent rows (RREF not needed).
fn intersect_row_spaces(a: &Matrix, b: &Matrix) -> Matrix {
    let field = a.field();
    if a.rows() == 0 || b.rows() == 0 {
        return Matrix::zero(field, 0, a.cols());
    }
    let stacked = a.vstack(b).unwrap();
    // (x | y) with x.a + y.b = 0  =>  x.a lies in both row spaces
    let null = stacked.transpose().kernel();
    let mut rows = Vec::new();
    for i in 0..null.rows() {
        let x = &null.row(i)[..a.rows()];
        rows.push(row_times_matrix(field, x, a));
    }
    Matrix::from_rows(field, a.cols(), &rows).unwrap().rref().0
}

/// RREF rows of `within` whose pivot columns are not pivot columns of `sub`.
/// Requires sub's row space to be inside within's; then pivots(sub) is a
/// subset of pivots(within) and the selected rows span a direct complement.
fn complement_rows(sub: &Matrix, within: &Matrix) -> Matrix {
    let (sub_r, sub_pivots) = sub.rref();
    debug_assert_eq!(sub_r.rows(), sub.rows(), "sub expected in RREF");
    let (win_r, win_pivots) = within.rref();
    let keep: Vec<Vec<Scalar>> = win_pivots
        .iter()
        .enumerate()
        .filter(|(_, p)| !sub_pivots.contains(p))
        .map(|(i, _)| win_r.row(i).to_vec())
        .collect();
    Matrix::from_rows(within.field(), within.cols(), &keep).unwrap()
}
