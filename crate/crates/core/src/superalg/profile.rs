//! Basis-independent structural invariants of a superalgebra.
//!
//! Every entry here is preserved by graded isomorphisms, so unequal profiles
//! certify non-isomorphism. The converse fails: equal profiles decide
//! nothing.

use crate::exactlin::field::Scalar;
use crate::exactlin::matrix::coords_in_rows;
use crate::exactlin::subspace::{GradedDim, GradedSubspace, Parity};
use crate::superalg::algebra::SuperAlgebra;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantProfile {
    pub field: String,
    pub dim: GradedDim,
    pub center_dim: GradedDim,
    pub derived_dim: GradedDim,
    pub central_quotient_dim: GradedDim,
    /// dims of L = L^1 >= L^2 = [L, L^1] >= ... until stable
    pub lower_central_dims: Vec<GradedDim>,
    /// dims of Z_1 = Z(L) <= Z_2 <= ... until stable, where
    /// Z_{k+1} = {x : [x, L] inside Z_k}
    pub upper_central_dims: Vec<GradedDim>,
    /// dims of L = D^0 >= D^1 = [D^0, D^0] >= ... until stable
    pub derived_series_dims: Vec<GradedDim>,
    pub even_even_span: GradedDim,
    pub even_odd_span: GradedDim,
    pub odd_odd_span: GradedDim,
}

impl InvariantProfile {
    pub fn of(a: &SuperAlgebra) -> InvariantProfile {
        let full = a.full_space();
        let center = a.center();
        let derived = a.derived();

        let mut lower_central_dims = vec![a.dim()];
        let mut current = full.clone();
        loop {
            let next = a.bracket_span(&full, &current).expect("same ambient");
            if next.graded_dim() == current.graded_dim() {
                break;
            }
            lower_central_dims.push(next.graded_dim());
            current = next;
        }

        let mut derived_series_dims = vec![a.dim()];
        let mut current = full.clone();
        loop {
            let next = a.bracket_span(&current, &current).expect("same ambient");
            if next.graded_dim() == current.graded_dim() {
                break;
            }
            derived_series_dims.push(next.graded_dim());
            current = next;
        }

        let mut upper_central_dims = vec![center.graded_dim()];
        let mut current = center.clone();
        loop {
            let next = centralizer_mod(a, &current);
            if next.graded_dim() == current.graded_dim() {
                break;
            }
            upper_central_dims.push(next.graded_dim());
            current = next;
        }

        let even_part = parity_part(a, Parity::Even);
        let odd_part = parity_part(a, Parity::Odd);
        let span_dim = |u: &GradedSubspace, v: &GradedSubspace| {
            a.bracket_span(u, v).expect("same ambient").graded_dim()
        };

        InvariantProfile {
            field: a.field().describe(),
            dim: a.dim(),
            center_dim: center.graded_dim(),
            derived_dim: derived.graded_dim(),
            central_quotient_dim: GradedDim::new(
                a.dim().even - center.graded_dim().even,
                a.dim().odd - center.graded_dim().odd,
            ),
            lower_central_dims,
            upper_central_dims,
            derived_series_dims,
            even_even_span: span_dim(&even_part, &even_part),
            even_odd_span: span_dim(&even_part, &odd_part),
            odd_odd_span: span_dim(&odd_part, &odd_part),
        }
    }

    /// Key/value rendering for reports.
    pub fn entries(&self) -> Vec<(String, String)> {
        let dims = |v: &[GradedDim]| {
            v.iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        vec![
            ("field".into(), self.field.clone()),
            ("dim".into(), self.dim.to_string()),
            ("center_dim".into(), self.center_dim.to_string()),
            ("derived_dim".into(), self.derived_dim.to_string()),
            (
                "central_quotient_dim".into(),
                self.central_quotient_dim.to_string(),
            ),
            (
                "lower_central_dims".into(),
                dims(&self.lower_central_dims),
            ),
            (
                "upper_central_dims".into(),
                dims(&self.upper_central_dims),
            ),
            (
                "derived_series_dims".into(),
                dims(&self.derived_series_dims),
            ),
            ("even_even_span".into(), self.even_even_span.to_string()),
            ("even_odd_span".into(), self.even_odd_span.to_string()),
            ("odd_odd_span".into(), self.odd_odd_span.to_string()),
        ]
    }
}

/// The full homogeneous part of one parity, as a graded subspace.
fn parity_part(a: &SuperAlgebra, parity: Parity) -> GradedSubspace {
    let d = a.total_dim();
    let f = a.field();
    let rows: Vec<Vec<Scalar>> = (0..d)
        .filter(|&i| a.parity(i) == parity)
        .map(|i| crate::exactlin::matrix::unit_vec(f, d, i))
        .collect();
    GradedSubspace::from_rows(f, a.dim(), &rows).unwrap()
}

/// {x : [x, b_j] inside S for all j}, the next step of the upper central
/// series when S is a term of it.
fn centralizer_mod(a: &SuperAlgebra, s: &GradedSubspace) -> GradedSubspace {
    let f = a.field();
    let d = a.total_dim();
    let w = s.complement_in(&a.full_space()).expect("S sits in the full space");
    let decomposition = s.basis().vstack(&w.basis()).expect("same width");
    let r = s.basis().rows();
    let t = d - r;
    if t == 0 {
        return a.full_space();
    }
    // condition matrix: v * m = 0 iff every [v, b_j] has zero complement part
    let mut m = crate::exactlin::matrix::Matrix::zero(f, d, d * t);
    for i in 0..d {
        for j in 0..d {
            let coords =
                coords_in_rows(&decomposition, a.bracket_basis(i, j)).expect("full span");
            for k in 0..t {
                m[(i, j * t + k)] = coords[r + k].clone();
            }
        }
    }
    let null = m.transpose().kernel();
    GradedSubspace::from_rows(f, a.dim(), &null.row_vecs())
        .expect("centralizer conditions are parity-wise")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactlin::field::Field;
    use crate::exactlin::matrix::Matrix;
    use crate::superalg::algebra::SuperAlgebra;
    use crate::superalg::maps::GradedLinearMap;

    fn dims(v: &[(usize, usize)]) -> Vec<GradedDim> {
        v.iter().map(|&(e, o)| GradedDim::new(e, o)).collect()
    }

    #[test]
    fn heisenberg_series() {
        let h = catalog::get("heisenberg-1-0").unwrap();
        let p = InvariantProfile::of(&h);
        assert_eq!(p.lower_central_dims, dims(&[(3, 0), (1, 0), (0, 0)]));
        assert_eq!(p.derived_series_dims, dims(&[(3, 0), (1, 0), (0, 0)]));
        assert_eq!(p.upper_central_dims, dims(&[(1, 0), (3, 0)]));
        assert_eq!(p.center_dim, GradedDim::new(1, 0));
    }

    #[test]
    fn sl2_series_stay_put() {
        let l = catalog::get("sl2").unwrap();
        let p = InvariantProfile::of(&l);
        assert_eq!(p.lower_central_dims, dims(&[(3, 0)]));
        assert_eq!(p.derived_series_dims, dims(&[(3, 0)]));
        assert_eq!(p.upper_central_dims, dims(&[(0, 0)]));
    }

    #[test]
    fn parity_pair_spans_of_odd_heisenberg() {
        let h = catalog::get("heisenberg-0-1").unwrap();
        let p = InvariantProfile::of(&h);
        assert_eq!(p.even_even_span, GradedDim::new(0, 0));
        assert_eq!(p.even_odd_span, GradedDim::new(0, 0));
        assert_eq!(p.odd_odd_span, GradedDim::new(1, 0));
    }

    #[test]
    fn profile_separates_structures_of_equal_dimension() {
        let h = catalog::get("heisenberg-0-1").unwrap();
        let a = SuperAlgebra::abelian(h.field(), h.dim(), None);
        assert_ne!(InvariantProfile::of(&h), InvariantProfile::of(&a));
    }

    #[test]
    fn profile_is_basis_independent() {
        let l = catalog::get("heisenberg-1-1").unwrap();
        let f = l.field();
        let fv = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let p = GradedLinearMap::new(
            l.dim(),
            l.dim(),
            Matrix::from_rows(
                f,
                4,
                &[
                    fv(&[1, 2, 0, 0]),
                    fv(&[0, 1, 1, 0]),
                    fv(&[0, 0, 2, 0]),
                    fv(&[0, 0, 0, 3]),
                ],
            )
            .unwrap(),
        )
        .unwrap();
        let t = l.transform_basis(&p).unwrap();
        assert_eq!(InvariantProfile::of(&l), InvariantProfile::of(&t));
    }

    #[test]
    fn gf5_profiles_match_rational_counterparts_dimensionally() {
        let q = InvariantProfile::of(&catalog::get("heisenberg-0-2").unwrap());
        let p = InvariantProfile::of(&catalog::get("gf5-heisenberg-0-2").unwrap());
        assert_eq!(q.dim, p.dim);
        assert_eq!(q.lower_central_dims, p.lower_central_dims);
        assert_ne!(q.field, p.field);
    }

    #[test]
    fn flagged_inputs_still_profile() {
        let l = catalog::get("paper-L").unwrap();
        let p = InvariantProfile::of(&l);
        assert_eq!(p.center_dim, GradedDim::new(0, 0));
        assert_eq!(p.derived_dim, GradedDim::new(2, 0));
        let m = catalog::get("paper-M").unwrap();
        let pm = InvariantProfile::of(&m);
        assert_eq!(pm.center_dim, GradedDim::new(1, 0));
        assert_eq!(pm.derived_dim, GradedDim::new(2, 0));
    }

    #[test]
    fn field_enters_profile_equality() {
        let a = SuperAlgebra::abelian(Field::Rationals, GradedDim::new(1, 1), None);
        let b = SuperAlgebra::abelian(Field::prime(5).unwrap(), GradedDim::new(1, 1), None);
        assert_ne!(InvariantProfile::of(&a), InvariantProfile::of(&b));
    }
}
