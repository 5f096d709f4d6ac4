//! Factor sets: the bilinear data gluing an algebra back together from its
//! center and central quotient.
//!
//! A factor set over (Q, Z) assigns to each pair of Q basis classes a vector
//! of Z subject to parity, graded skew-symmetry, and a cocycle identity.
//! `reconstruct` builds the algebra on Z + Q with bracket
//! [(x1, a), (x2, b)] = (r(a, b), [a, b]); `factor_set_from_section` extracts
//! r from an algebra and a graded complement of its center, and the two are
//! mutually inverse up to the explicit isomorphism (x, a) -> x + T(a).
//! `transport` moves a factor set along an isoclinism of stem algebras, and
//! `glue_isomorphism` turns a compatible (mu, nu, delta) triple into an
//! isomorphism of reconstructions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::field::{Field, Scalar};
use crate::exactlin::matrix::{
    coords_in_rows, row_times_matrix, vec_add, vec_is_zero, vec_scale, vec_sub,
    zero_vec, Matrix,
};
use crate::exactlin::subspace::{parity_sign, GradedDim, GradedSubspace, Parity};
use crate::isoclinism::{is_stem, IsoclinismWitness};
use crate::superalg::algebra::SuperAlgebra;
use crate::superalg::json::{algebra_from_doc, algebra_to_doc, AlgebraDoc};
use crate::superalg::maps::GradedLinearMap;

/// A factor set over an explicit quotient presentation Q and abelian center
/// space Z. `values` holds r(a, b) in Z coordinates for each ordered pair of
/// Q basis indices, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorSet {
    pub quotient: SuperAlgebra,
    pub center_space: SuperAlgebra,
    values: Vec<Vec<Scalar>>,
}

impl FactorSet {
    pub fn new(
        quotient: SuperAlgebra,
        center_space: SuperAlgebra,
        values: Vec<Vec<Scalar>>,
    ) -> Result<FactorSet> {
        if quotient.field() != center_space.field() {
            return Err(Error::FieldMismatch(
                quotient.field().describe(),
                center_space.field().describe(),
            ));
        }
        if !center_space.derived().is_zero_space() {
            return Err(Error::Incompatible(
                "the center space of a factor set must be abelian".into(),
            ));
        }
        let q = quotient.total_dim();
        let z = center_space.total_dim();
        if values.len() != q * q || values.iter().any(|v| v.len() != z) {
            return Err(Error::DimensionMismatch(format!(
                "factor set values for quotient dimension {q} and center dimension {z}"
            )));
        }
        Ok(FactorSet {
            quotient,
            center_space,
            values,
        })
    }

    pub fn zero(quotient: SuperAlgebra, center_space: SuperAlgebra) -> Result<FactorSet> {
        let q = quotient.total_dim();
        let z = center_space.total_dim();
        let zero = zero_vec(quotient.field(), z);
        FactorSet::new(quotient, center_space, vec![zero; q * q])
    }

    pub fn field(&self) -> Field {
        self.quotient.field()
    }

    /// r on the (i, j)-th quotient basis pair, in center coordinates.
    pub fn value(&self, i: usize, j: usize) -> &[Scalar] {
        &self.values[i * self.quotient.total_dim() + j]
    }

    pub fn values(&self) -> &[Vec<Scalar>] {
        &self.values
    }

    /// Bilinear extension of r to arbitrary quotient coordinate vectors.
    pub fn evaluate(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let mut acc = zero_vec(f, self.center_space.total_dim());
        for (i, ca) in a.iter().enumerate() {
            if f.is_zero(ca) {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if f.is_zero(cb) {
                    continue;
                }
                let c = f.mul(ca, cb);
                acc = vec_add(f, &acc, &vec_scale(f, &c, self.value(i, j)));
            }
        }
        acc
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParityViolation {
    pub left: usize,
    pub right: usize,
    pub value: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SkewViolation {
    pub left: usize,
    pub right: usize,
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CocycleViolation {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub residual: Vec<Scalar>,
}

/// Exhaustive factor-set axiom check results.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FactorSetReport {
    pub parity_violations: Vec<ParityViolation>,
    pub skew_violations: Vec<SkewViolation>,
    pub cocycle_violations: Vec<CocycleViolation>,
}

impl FactorSetReport {
    pub fn is_valid(&self) -> bool {
        self.parity_violations.is_empty()
            && self.skew_violations.is_empty()
            && self.cocycle_violations.is_empty()
    }
}

/// Checks the three factor-set axioms on all basis pairs and triples:
/// r(a, b) lands in the parity-(|a|+|b|) part of Z; graded skew
/// r(a, b) = -(-1)^{|a||b|} r(b, a); and the cocycle identity
/// r([a, b], c) = r(a, [b, c]) - (-1)^{|a||b|} r(b, [a, c]).
pub fn validate_factor_set(r: &FactorSet) -> FactorSetReport {
    let f = r.field();
    let q = r.quotient.total_dim();
    let qdim = r.quotient.dim();
    let zdim = r.center_space.dim();
    let mut report = FactorSetReport::default();

    for i in 0..q {
        for j in 0..q {
            let target = Parity::of_index(qdim, i).add(Parity::of_index(qdim, j));
            let v = r.value(i, j);
            let off_parity = v
                .iter()
                .enumerate()
                .any(|(k, c)| !f.is_zero(c) && Parity::of_index(zdim, k) != target);
            if off_parity {
                report.parity_violations.push(ParityViolation {
                    left: i,
                    right: j,
                    value: v.to_vec(),
                });
            }
        }
    }

    for i in 0..q {
        for j in i..q {
            let sign = parity_sign(f, Parity::of_index(qdim, i), Parity::of_index(qdim, j));
            let residual = vec_add(f, r.value(i, j), &vec_scale(f, &sign, r.value(j, i)));
            if !vec_is_zero(f, &residual) {
                report.skew_violations.push(SkewViolation {
                    left: i,
                    right: j,
                    residual,
                });
            }
        }
    }

    // r extended linearly through the quotient bracket in either slot
    let left_slot = |a: usize, b: usize, c: usize| -> Vec<Scalar> {
        let mut acc = zero_vec(f, r.center_space.total_dim());
        for (k, cc) in r.quotient.bracket_basis(a, b).iter().enumerate() {
            if !f.is_zero(cc) {
                acc = vec_add(f, &acc, &vec_scale(f, cc, r.value(k, c)));
            }
        }
        acc
    };
    let right_slot = |a: usize, b: usize, c: usize| -> Vec<Scalar> {
        let mut acc = zero_vec(f, r.center_space.total_dim());
        for (k, cc) in r.quotient.bracket_basis(b, c).iter().enumerate() {
            if !f.is_zero(cc) {
                acc = vec_add(f, &acc, &vec_scale(f, cc, r.value(a, k)));
            }
        }
        acc
    };
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let sign = parity_sign(f, Parity::of_index(qdim, a), Parity::of_index(qdim, b));
                let mut residual = vec_sub(f, &left_slot(a, b, c), &right_slot(a, b, c));
                residual = vec_sub(
                    f,
                    &residual,
                    &vec_scale(f, &sign, &right_slot(b, a, c)),
                );
                if !vec_is_zero(f, &residual) {
                    report.cocycle_violations.push(CocycleViolation {
                        x: a,
                        y: b,
                        z: c,
                        residual,
                    });
                }
            }
        }
    }
    report
}

/// Abelian algebra standing in for the center, with its own coordinate names.
fn center_space_algebra(f: Field, dim: GradedDim) -> SuperAlgebra {
    let names = (1..=dim.total()).map(|i| format!("z{i}")).collect();
    SuperAlgebra::abelian(f, dim, Some(names))
}

/// Extracts the factor set of L relative to a graded complement K of its
/// center: the section T sends the class of k + z to k, and
/// r(a, b) = [T(a), T(b)] - T([a, b]).
pub fn factor_set_from_section(
    l: &SuperAlgebra,
    k: &GradedSubspace,
) -> Result<(FactorSet, GradedLinearMap)> {
    let f = l.field();
    let z = l.center();
    if !k.intersect(&z)?.is_zero_space() || k.graded_dim().plus(&z.graded_dim()) != l.dim() {
        return Err(Error::NotAComplement(format!(
            "a {} subspace cannot complement a {} center in dimension {}",
            k.graded_dim(),
            z.graded_dim(),
            l.dim()
        )));
    }
    let ql = l.central_quotient();
    let q = ql.algebra.total_dim();

    // split each canonical section vector as k-part + z-part; T keeps the k-part
    let split = k.basis().vstack(&z.basis())?;
    let k_rank = k.basis().rows();
    let mut t_rows = Vec::with_capacity(q);
    for a in 0..q {
        let u = ql.section.matrix().row(a);
        let coords = coords_in_rows(&split, u).expect("K + Z(L) spans L");
        t_rows.push(row_times_matrix(f, &coords[..k_rank], &k.basis()));
    }
    let t = GradedLinearMap::new(
        ql.algebra.dim(),
        l.dim(),
        Matrix::from_rows(f, l.total_dim(), &t_rows)?,
    )?;

    let mut values = Vec::with_capacity(q * q);
    for a in 0..q {
        for b in 0..q {
            let lifted = l.bracket(t.matrix().row(a), t.matrix().row(b))?;
            let through = row_times_matrix(f, ql.algebra.bracket_basis(a, b), t.matrix());
            let diff = vec_sub(f, &lifted, &through);
            let coords = z.coords_of(&diff).ok_or_else(|| {
                Error::Defect("a factor set value escaped the center".into())
            })?;
            values.push(coords);
        }
    }
    let r = FactorSet::new(ql.algebra, center_space_algebra(f, z.graded_dim()), values)?;
    Ok((r, t))
}

/// The algebra rebuilt from a factor set, on center-block + quotient-block
/// coordinates.
#[derive(Clone, Debug)]
pub struct ReconstructionResult {
    pub algebra: SuperAlgebra,
    /// the central copy {(x, 0)}, image of the center block
    pub center_copy: GradedSubspace,
    /// coordinate embedding of the center space
    pub center_embed: GradedLinearMap,
    /// coordinate embedding of the quotient (a section, not a homomorphism
    /// unless the relevant values vanish)
    pub quotient_embed: GradedLinearMap,
}

/// Builds the algebra Z + Q with bracket
/// [(x1, a), (x2, b)] = (r(a, b), [a, b]). Requires a valid factor set; the
/// layout matches `direct_sum(center_space, quotient)`, so r = 0 reproduces
/// the direct sum exactly.
pub fn reconstruct(r: &FactorSet) -> Result<ReconstructionResult> {
    let report = validate_factor_set(r);
    if !report.is_valid() {
        return Err(Error::InvalidFactorSet(format!(
            "{} parity, {} skew, {} cocycle violations",
            report.parity_violations.len(),
            report.skew_violations.len(),
            report.cocycle_violations.len()
        )));
    }
    let f = r.field();
    let ds = r.center_space.direct_sum(&r.quotient)?;
    let d = ds.algebra.total_dim();
    let q = r.quotient.total_dim();
    let z = r.center_space.total_dim();

    let mut constants = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                constants.push(ds.algebra.constant(i, j, k).clone());
            }
        }
    }
    for a in 0..q {
        for b in 0..q {
            let (ia, ib) = (ds.right_index(a), ds.right_index(b));
            for m in 0..z {
                let c = &r.value(a, b)[m];
                if !f.is_zero(c) {
                    constants[(ia * d + ib) * d + ds.left_index(m)] = c.clone();
                }
            }
        }
    }
    let algebra = SuperAlgebra::from_constants(
        f,
        ds.algebra.dim(),
        ds.algebra.names().to_vec(),
        constants,
    )?
    .with_inherited_flag(r.quotient.flagged() || r.center_space.flagged());

    Ok(ReconstructionResult {
        center_copy: ds.left.image(),
        center_embed: ds.left,
        quotient_embed: ds.right,
        algebra,
    })
}

/// The isomorphism (x, a) -> x + T(a) from the reconstruction of r back to L,
/// for r built from (L, K). Verified before returning.
pub fn reconstruction_isomorphism(
    l: &SuperAlgebra,
    k: &GradedSubspace,
    t: &GradedLinearMap,
    r: &FactorSet,
) -> Result<GradedLinearMap> {
    let (expected_r, expected_t) = factor_set_from_section(l, k)?;
    if expected_r != *r || expected_t.matrix() != t.matrix() {
        return Err(Error::Incompatible(
            "the factor set was not built from this algebra and section".into(),
        ));
    }
    let f = l.field();
    let z = l.center();
    let rec = reconstruct(r)?;
    let total = rec.algebra.total_dim();

    let mut rows = vec![Vec::new(); total];
    for m in 0..z.basis().rows() {
        rows[embed_pivot(&rec.center_embed, m)] = z.basis().row(m).to_vec();
    }
    for a in 0..r.quotient.total_dim() {
        rows[embed_pivot(&rec.quotient_embed, a)] = t.matrix().row(a).to_vec();
    }
    let theta = GradedLinearMap::new(
        rec.algebra.dim(),
        l.dim(),
        Matrix::from_rows(f, l.total_dim(), &rows)?,
    )?;
    if !theta.is_isomorphism(&rec.algebra, l)? {
        return Err(Error::Defect(
            "the reconstruction isomorphism failed verification".into(),
        ));
    }
    Ok(theta)
}

fn embed_pivot(embed: &GradedLinearMap, i: usize) -> usize {
    let f = embed.field();
    embed
        .matrix()
        .row(i)
        .iter()
        .position(|x| !f.is_zero(x))
        .expect("embedding rows are unit vectors")
}

/// Transports a factor set s over M back to L along an isoclinism witness
/// (phi, theta): r(a, b) = theta^{-1}(s(phi(a), phi(b))). Both algebras must
/// be stem, so that their centers sit inside the derived subalgebras where
/// theta acts; theta must restrict to a bijection of the centers (checked).
/// Returns r together with the verified pairing isomorphism
/// (x, a) -> (theta(x), phi(a)) between the two reconstructions.
pub fn transport(
    s: &FactorSet,
    w: &IsoclinismWitness,
) -> Result<(FactorSet, GradedLinearMap)> {
    let l = &w.source;
    let m = &w.target;
    let f = l.field();
    if !is_stem(l) || !is_stem(m) {
        return Err(Error::Incompatible(
            "transport requires stem algebras on both ends".into(),
        ));
    }
    if s.quotient != m.central_quotient().algebra
        || s.center_space.dim() != m.center().graded_dim()
    {
        return Err(Error::Incompatible(
            "the factor set is not in the canonical coordinates of the witness target".into(),
        ));
    }

    let zl = l.center();
    let zm = m.center();
    if zl.graded_dim() != zm.graded_dim() {
        return Err(Error::Incompatible(
            "theta cannot be center-bijective: the centers have different dimensions".into(),
        ));
    }
    let dl = l.derived_subalgebra();
    let dm = m.derived_subalgebra();
    let mut theta_z_rows = Vec::with_capacity(zl.basis().rows());
    for i in 0..zl.basis().rows() {
        let in_derived = coords_in_rows(dl.inclusion.matrix(), zl.basis().row(i))
            .expect("the center of a stem algebra sits inside the derived subalgebra");
        let ambient = row_times_matrix(f, &w.theta.apply(&in_derived), dm.inclusion.matrix());
        let coords = zm.coords_of(&ambient).ok_or_else(|| {
            Error::Incompatible("theta does not carry the center into the center".into())
        })?;
        theta_z_rows.push(coords);
    }
    let theta_z = GradedLinearMap::new(
        zl.graded_dim(),
        zm.graded_dim(),
        Matrix::from_rows(f, zm.basis().rows(), &theta_z_rows)?,
    )?;
    let theta_z_inv = theta_z
        .inverse()
        .map_err(|_| Error::Incompatible("theta is not center-bijective".into()))?;

    let ql = l.central_quotient();
    let q = ql.algebra.total_dim();
    let mut values = Vec::with_capacity(q * q);
    for a in 0..q {
        for b in 0..q {
            let sv = s.evaluate(w.phi.matrix().row(a), w.phi.matrix().row(b));
            values.push(theta_z_inv.apply(&sv));
        }
    }
    let r = FactorSet::new(
        ql.algebra,
        center_space_algebra(f, zl.graded_dim()),
        values,
    )?;

    // pairing (x, a) -> (theta(x), phi(a)) between the reconstructions
    let rec_r = reconstruct(&r)?;
    let rec_s = reconstruct(s)?;
    let total = rec_r.algebra.total_dim();
    let mut rows = vec![Vec::new(); total];
    for i in 0..zl.basis().rows() {
        rows[embed_pivot(&rec_r.center_embed, i)] =
            rec_s.center_embed.apply(theta_z.matrix().row(i));
    }
    for a in 0..q {
        rows[embed_pivot(&rec_r.quotient_embed, a)] =
            rec_s.quotient_embed.apply(w.phi.matrix().row(a));
    }
    let pairing = GradedLinearMap::new(
        rec_r.algebra.dim(),
        rec_s.algebra.dim(),
        Matrix::from_rows(f, rec_s.algebra.total_dim(), &rows)?,
    )?;
    if !pairing.is_isomorphism(&rec_r.algebra, &rec_s.algebra)? {
        return Err(Error::Incompatible(
            "the transported pairing fails to verify; the witness does not certify an isoclinism"
                .into(),
        ));
    }
    Ok((r, pairing))
}

/// Entry (i, j) of nu(r(a_i, a_j) + delta([a_i, a_j])) - s(mu(a_i), mu(a_j)),
/// in center coordinates, flattened row-major like factor-set values. The
/// zero tensor is exactly the compatibility needed by `glue_isomorphism`.
pub fn compatibility_residual(
    r: &FactorSet,
    s: &FactorSet,
    mu: &GradedLinearMap,
    nu: &GradedLinearMap,
    delta: &GradedLinearMap,
) -> Result<Vec<Vec<Scalar>>> {
    if r.quotient != s.quotient || r.center_space != s.center_space {
        return Err(Error::Incompatible(
            "the factor sets live over different presentations".into(),
        ));
    }
    let f = r.field();
    let qdim = r.quotient.dim();
    let zdim = r.center_space.dim();
    if mu.source() != qdim || mu.target() != qdim {
        return Err(Error::DimensionMismatch(format!(
            "mu must act on the quotient, got {} -> {}",
            mu.source(),
            mu.target()
        )));
    }
    if !mu.is_isomorphism(&r.quotient, &r.quotient)? {
        return Err(Error::Incompatible(
            "mu is not an automorphism of the quotient".into(),
        ));
    }
    if nu.source() != zdim || nu.target() != zdim || !nu.is_bijective() {
        return Err(Error::Incompatible(
            "nu is not an automorphism of the center space".into(),
        ));
    }
    if delta.source() != qdim || delta.target() != zdim {
        return Err(Error::DimensionMismatch(format!(
            "delta must map the quotient into the center, got {} -> {}",
            delta.source(),
            delta.target()
        )));
    }

    let q = r.quotient.total_dim();
    let mut residual = Vec::with_capacity(q * q);
    for i in 0..q {
        for j in 0..q {
            let shifted = vec_add(
                f,
                r.value(i, j),
                &delta.apply(r.quotient.bracket_basis(i, j)),
            );
            let transported = s.evaluate(mu.matrix().row(i), mu.matrix().row(j));
            residual.push(vec_sub(f, &nu.apply(&shifted), &transported));
        }
    }
    Ok(residual)
}

/// The glued map (x, a) -> (nu(x + delta(a)), mu(a)) between reconstructions,
/// defined exactly when the compatibility residual vanishes; it is verified
/// as an isomorphism and carries the central copy onto the central copy.
pub fn glue_isomorphism(
    r: &FactorSet,
    s: &FactorSet,
    mu: &GradedLinearMap,
    nu: &GradedLinearMap,
    delta: &GradedLinearMap,
) -> Result<GradedLinearMap> {
    let residual = compatibility_residual(r, s, mu, nu, delta)?;
    let f = r.field();
    let q = r.quotient.total_dim();
    if let Some(idx) = residual.iter().position(|v| !vec_is_zero(f, v)) {
        return Err(Error::NonzeroResidual(format!(
            "compatibility fails at quotient pair ({}, {})",
            idx / q,
            idx % q
        )));
    }

    let rec_r = reconstruct(r)?;
    let rec_s = reconstruct(s)?;
    let total = rec_r.algebra.total_dim();
    let z = r.center_space.total_dim();
    let mut rows = vec![Vec::new(); total];
    for m in 0..z {
        rows[embed_pivot(&rec_r.center_embed, m)] =
            rec_s.center_embed.apply(nu.matrix().row(m));
    }
    for a in 0..q {
        let central = rec_s.center_embed.apply(&nu.apply(delta.matrix().row(a)));
        let along = rec_s.quotient_embed.apply(mu.matrix().row(a));
        rows[embed_pivot(&rec_r.quotient_embed, a)] = vec_add(f, &central, &along);
    }
    let lambda = GradedLinearMap::new(
        rec_r.algebra.dim(),
        rec_s.algebra.dim(),
        Matrix::from_rows(f, rec_s.algebra.total_dim(), &rows)?,
    )?;
    if !lambda.is_isomorphism(&rec_r.algebra, &rec_s.algebra)? {
        return Err(Error::Defect(
            "the glued map failed isomorphism verification despite a zero residual".into(),
        ));
    }
    Ok(lambda)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorValueDoc {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorSetDoc {
    pub quotient: AlgebraDoc,
    pub center: AlgebraDoc,
    pub values: Vec<FactorValueDoc>,
}

pub fn factor_set_to_doc(r: &FactorSet) -> Result<FactorSetDoc> {
    let f = r.field();
    let q = r.quotient.total_dim();
    let mut values = Vec::new();
    for i in 0..q {
        for j in 0..q {
            let v = r.value(i, j);
            let coeffs: BTreeMap<usize, String> = v
                .iter()
                .enumerate()
                .filter(|(_, c)| !f.is_zero(c))
                .map(|(k, c)| (k, f.format_scalar(c)))
                .collect();
            if !coeffs.is_empty() {
                values.push(FactorValueDoc { i, j, coeffs });
            }
        }
    }
    Ok(FactorSetDoc {
        quotient: algebra_to_doc("quotient", &r.quotient)?,
        center: algebra_to_doc("center", &r.center_space)?,
        values,
    })
}

pub fn factor_set_to_json(r: &FactorSet) -> Result<String> {
    let doc = factor_set_to_doc(r)?;
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Parse(e.to_string()))
}

pub fn factor_set_from_doc(doc: &FactorSetDoc) -> Result<FactorSet> {
    let (_, quotient) = algebra_from_doc(&doc.quotient)?;
    let (_, center) = algebra_from_doc(&doc.center)?;
    let f = quotient.field();
    let q = quotient.total_dim();
    let z = center.total_dim();
    let mut values = vec![zero_vec(f, z); q * q];
    let mut seen = std::collections::BTreeSet::new();
    for entry in &doc.values {
        if entry.i >= q || entry.j >= q {
            return Err(Error::Parse(format!(
                "factor set pair ({}, {}) out of range for quotient dimension {q}",
                entry.i, entry.j
            )));
        }
        if !seen.insert((entry.i, entry.j)) {
            return Err(Error::Parse(format!(
                "duplicate factor set pair ({}, {})",
                entry.i, entry.j
            )));
        }
        for (k, c) in &entry.coeffs {
            if *k >= z {
                return Err(Error::Parse(format!(
                    "factor set coordinate {k} out of range for center dimension {z}"
                )));
            }
            values[entry.i * q + entry.j][*k] = f.parse_scalar(c)?;
        }
    }
    FactorSet::new(quotient, center, values)
}

pub fn factor_set_from_json(s: &str) -> Result<FactorSet> {
    let doc: FactorSetDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    factor_set_from_doc(&doc)
}
