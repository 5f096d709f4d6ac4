//! Isoclinism: witnesses, constructions, stem decomposition, and the
//! decision procedure.
//!
//! An isoclinism from L to K is a pair of isomorphisms phi: L/Z(L) -> K/Z(K)
//! and theta: L' -> K' such that theta([x, y]) = [u, v] whenever u lifts
//! phi(x + Z(L)) and v lifts phi(y + Z(L)). The bracket of lifts does not
//! depend on the lift choice (central shifts vanish under the bracket), so
//! the commuting square is checked on the canonical sections.
//!
//! The decision procedure splits each algebra as stem + abelian and reduces
//! isoclinism to isomorphism of the stem parts; the returned witness is the
//! composite of the explicit witnesses along that route and is re-verified
//! before it is handed out.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::matrix::{coords_in_rows, row_times_matrix, unit_vec, Matrix};
use crate::exactlin::subspace::GradedSubspace;
use crate::superalg::algebra::{DirectSum, Quotient, Subalgebra, SuperAlgebra};
use crate::superalg::json::{
    algebra_from_doc, algebra_to_doc, map_from_doc, map_to_doc, AlgebraDoc, MapDoc,
};
use crate::superalg::maps::GradedLinearMap;
use crate::superalg::profile::InvariantProfile;
use crate::superalg::search::{find_isomorphism, Budget, IsomorphismOutcome};

/// A candidate isoclinism from `source` to `target`. `phi` acts on the
/// canonical central-quotient coordinates, `theta` on the canonical
/// derived-subalgebra coordinates, as produced by `central_quotient` and
/// `derived_subalgebra`.
#[derive(Clone, Debug)]
pub struct IsoclinismWitness {
    pub source: SuperAlgebra,
    pub target: SuperAlgebra,
    pub phi: GradedLinearMap,
    pub theta: GradedLinearMap,
}

/// Verifies a witness: phi and theta must be algebra isomorphisms of the
/// central quotients and derived subalgebras, and the bracket square must
/// commute on every pair of quotient basis classes.
pub fn check_witness(w: &IsoclinismWitness) -> Result<bool> {
    if w.source.field() != w.target.field() {
        return Err(Error::FieldMismatch(
            w.source.field().describe(),
            w.target.field().describe(),
        ));
    }
    let f = w.source.field();
    let ql = w.source.central_quotient();
    let qk = w.target.central_quotient();
    let dl = w.source.derived_subalgebra();
    let dk = w.target.derived_subalgebra();

    if w.phi.source() != ql.algebra.dim()
        || w.phi.target() != qk.algebra.dim()
        || w.theta.source() != dl.algebra.dim()
        || w.theta.target() != dk.algebra.dim()
    {
        return Ok(false);
    }
    if !w.phi.is_isomorphism(&ql.algebra, &qk.algebra)?
        || !w.theta.is_isomorphism(&dl.algebra, &dk.algebra)?
    {
        return Ok(false);
    }

    let q = ql.algebra.total_dim();
    for a in 0..q {
        for b in 0..q {
            let u = w
                .source
                .bracket(ql.section.matrix().row(a), ql.section.matrix().row(b))?;
            let coords = coords_in_rows(dl.inclusion.matrix(), &u)
                .expect("a bracket lies in the derived subalgebra");
            let lhs = row_times_matrix(f, &w.theta.apply(&coords), dk.inclusion.matrix());
            let ia = w.phi.apply(&unit_vec(f, q, a));
            let ib = w.phi.apply(&unit_vec(f, q, b));
            let rhs = w
                .target
                .bracket(&qk.section.apply(&ia), &qk.section.apply(&ib))?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The two coherence identities tying phi and theta together on the overlap:
/// phi agrees with theta on classes of derived elements, and theta intertwines
/// bracketing by x with bracketing by any lift of phi's image class.
pub fn witness_coherence_check(w: &IsoclinismWitness) -> Result<bool> {
    let f = w.source.field();
    let ql = w.source.central_quotient();
    let qk = w.target.central_quotient();
    let dl = w.source.derived_subalgebra();
    let dk = w.target.derived_subalgebra();
    let q = ql.algebra.total_dim();
    let t = dl.algebra.total_dim();

    if w.phi.source() != ql.algebra.dim()
        || w.phi.target() != qk.algebra.dim()
        || w.theta.source() != dl.algebra.dim()
        || w.theta.target() != dk.algebra.dim()
    {
        return Ok(false);
    }

    for i in 0..t {
        let x = dl.inclusion.matrix().row(i);
        let theta_x =
            row_times_matrix(f, &w.theta.apply(&unit_vec(f, t, i)), dk.inclusion.matrix());

        // phi(x + Z(L)) = theta(x) + Z(K) for x in L'
        let lhs = w.phi.apply(&ql.projection.apply(x));
        let rhs = qk.projection.apply(&theta_x);
        if lhs != rhs {
            return Ok(false);
        }

        // theta([x, y]) = [theta(x), v] for any v lifting phi(y + Z(L));
        // central summands of y drop out of both sides, so section lifts
        // of the quotient basis classes cover all y.
        for b in 0..q {
            let y = ql.section.matrix().row(b);
            let u = w.source.bracket(x, y)?;
            let coords = coords_in_rows(dl.inclusion.matrix(), &u)
                .expect("a bracket lies in the derived subalgebra");
            let lhs = row_times_matrix(f, &w.theta.apply(&coords), dk.inclusion.matrix());
            let v = qk.section.apply(&w.phi.apply(&unit_vec(f, q, b)));
            let rhs = w.target.bracket(&theta_x, &v)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every algebra is isoclinic to itself.
pub fn identity_witness(l: &SuperAlgebra) -> IsoclinismWitness {
    let f = l.field();
    let qdim = l.central_quotient().algebra.dim();
    let ddim = l.derived_subalgebra().algebra.dim();
    IsoclinismWitness {
        source: l.clone(),
        target: l.clone(),
        phi: GradedLinearMap::identity(f, qdim),
        theta: GradedLinearMap::identity(f, ddim),
    }
}

pub fn invert_witness(w: &IsoclinismWitness) -> Result<IsoclinismWitness> {
    Ok(IsoclinismWitness {
        source: w.target.clone(),
        target: w.source.clone(),
        phi: w.phi.inverse()?,
        theta: w.theta.inverse()?,
    })
}

/// Composes witnesses L -> M and M -> K. The middle algebras must be the
/// same presentation (same constants and names), since phi and theta live in
/// its canonical quotient and derived coordinates.
pub fn compose_witnesses(
    first: &IsoclinismWitness,
    second: &IsoclinismWitness,
) -> Result<IsoclinismWitness> {
    if first.target != second.source {
        return Err(Error::Incompatible(
            "witness endpoints do not match: the first target differs from the second source"
                .into(),
        ));
    }
    Ok(IsoclinismWitness {
        source: first.source.clone(),
        target: second.target.clone(),
        phi: first.phi.then(&second.phi)?,
        theta: first.theta.then(&second.theta)?,
    })
}

/// An isomorphism g: L -> K induces an isoclinism: phi is g on central
/// quotients, theta is g on derived subalgebras.
pub fn witness_from_isomorphism(
    g: &GradedLinearMap,
    l: &SuperAlgebra,
    k: &SuperAlgebra,
) -> Result<IsoclinismWitness> {
    if !g.is_isomorphism(l, k)? {
        return Err(Error::Incompatible(
            "the supplied map is not an algebra isomorphism".into(),
        ));
    }
    let ql = l.central_quotient();
    let qk = k.central_quotient();
    let dl = l.derived_subalgebra();
    let dk = k.derived_subalgebra();
    induced_pair(g, l, k, &ql, &qk, &dl, &dk)
}

/// A surjective homomorphism f: X -> Y whose kernel misses X' induces an
/// isoclinism X ~ Y: theta is f restricted to X' (injective by the kernel
/// condition, onto Y' by surjectivity) and phi is induced on the central
/// quotients.
pub fn witness_from_surjection(
    f_map: &GradedLinearMap,
    x: &SuperAlgebra,
    y: &SuperAlgebra,
) -> Result<IsoclinismWitness> {
    if f_map.source() != x.dim() || f_map.target() != y.dim() {
        return Err(Error::DimensionMismatch(format!(
            "map {} -> {} between algebras of dimension {} and {}",
            f_map.source(),
            f_map.target(),
            x.dim(),
            y.dim()
        )));
    }
    if !f_map.is_homomorphism(x, y)? {
        return Err(Error::Incompatible("the map is not a homomorphism".into()));
    }
    if f_map.rank() != y.total_dim() {
        return Err(Error::Incompatible("the map is not onto".into()));
    }
    if !f_map.kernel().intersect(&x.derived())?.is_zero_space() {
        return Err(Error::Incompatible(
            "the kernel meets the derived subalgebra".into(),
        ));
    }
    let qx = x.central_quotient();
    let qy = y.central_quotient();
    let dx = x.derived_subalgebra();
    let dy = y.derived_subalgebra();
    induced_pair(f_map, x, y, &qx, &qy, &dx, &dy)
}

/// Shared assembly of (phi, theta) from a map g: X -> Y that carries X' onto
/// Y' and descends to the central quotients.
fn induced_pair(
    g: &GradedLinearMap,
    x: &SuperAlgebra,
    y: &SuperAlgebra,
    qx: &Quotient,
    qy: &Quotient,
    dx: &Subalgebra,
    dy: &Subalgebra,
) -> Result<IsoclinismWitness> {
    let f = x.field();
    let q = qx.algebra.total_dim();
    let mut phi_rows = Vec::with_capacity(q);
    for a in 0..q {
        phi_rows.push(qy.projection.apply(&g.apply(qx.section.matrix().row(a))));
    }
    let phi = GradedLinearMap::new(
        qx.algebra.dim(),
        qy.algebra.dim(),
        Matrix::from_rows(f, qy.algebra.total_dim(), &phi_rows)?,
    )?;

    let t = dx.algebra.total_dim();
    let mut theta_rows = Vec::with_capacity(t);
    for i in 0..t {
        let image = g.apply(dx.inclusion.matrix().row(i));
        let coords = coords_in_rows(dy.inclusion.matrix(), &image).ok_or_else(|| {
            Error::Defect("the map does not carry the derived subalgebra into the target's".into())
        })?;
        theta_rows.push(coords);
    }
    let theta = GradedLinearMap::new(
        dx.algebra.dim(),
        dy.algebra.dim(),
        Matrix::from_rows(f, dy.algebra.total_dim(), &theta_rows)?,
    )?;

    Ok(IsoclinismWitness {
        source: x.clone(),
        target: y.clone(),
        phi,
        theta,
    })
}

/// L is isoclinic to L + A for abelian A: project away the abelian summand.
/// Returns the sum and a witness from L to it.
pub fn witness_abelian_sum(
    l: &SuperAlgebra,
    a: &SuperAlgebra,
) -> Result<(DirectSum, IsoclinismWitness)> {
    if !a.derived().is_zero_space() {
        return Err(Error::Incompatible(
            "the second summand is not abelian".into(),
        ));
    }
    let ds = l.direct_sum(a)?;
    // the left embedding has unit rows, so its transpose projects the sum
    // back onto l and kills the abelian block
    let proj = GradedLinearMap::new(ds.algebra.dim(), l.dim(), ds.left.matrix().transpose())?;
    let onto_l = witness_from_surjection(&proj, &ds.algebra, l)?;
    let w = invert_witness(&onto_l)?;
    Ok((ds, w))
}

/// L/I is isoclinic to L/(I n L') for any graded ideal I: the natural map
/// L/(I n L') -> L/I is onto with kernel I/(I n L'), which misses the
/// derived subalgebra. Returns both quotients and a witness from L/I to
/// L/(I n L').
pub fn witness_quotient(
    l: &SuperAlgebra,
    ideal: &GradedSubspace,
) -> Result<(Quotient, Quotient, IsoclinismWitness)> {
    let cap = ideal.intersect(&l.derived())?;
    let q_full = l.quotient(ideal)?;
    let q_cap = l.quotient(&cap)?;
    let g = q_cap.section.then(&q_full.projection)?;
    let onto = witness_from_surjection(&g, &q_cap.algebra, &q_full.algebra)?;
    let w = invert_witness(&onto)?;
    Ok((q_full, q_cap, w))
}

/// Stem algebras have their center inside their derived subalgebra; they are
/// the minimal-dimension members of an isoclinism family.
pub fn is_stem(l: &SuperAlgebra) -> bool {
    l.derived().contains(&l.center())
}

/// L split as T + A with T stem and A abelian, together with the explicit
/// isomorphism realizing the split.
#[derive(Clone, Debug)]
pub struct StemDecomposition {
    /// the stem part T, living inside L
    pub stem: Subalgebra,
    /// abelian algebra on a complement of Z(L) n L' inside Z(L)
    pub abelian: SuperAlgebra,
    /// T + A with its embeddings
    pub sum: DirectSum,
    /// isomorphism L -> T + A
    pub iso: GradedLinearMap,
}

/// Splits any algebra as stem + abelian: pick a complement M of Z(L) n L'
/// inside Z(L), then a complement W of L' + M in L; the stem part lives on
/// L' + W and M carries the abelian part. Every bracket of L lands in L'
/// because M is central, so Z(T) sits inside T' = L' and T is stem.
pub fn stem_decompose(l: &SuperAlgebra) -> Result<StemDecomposition> {
    let f = l.field();
    let z = l.center();
    let d = l.derived();
    let zd = z.intersect(&d)?;
    let mc = zd.complement_in(&z)?;
    let covered = d.sum(&mc)?;
    let w = covered.complement_in(&l.full_space())?;
    let k = d.sum(&w)?;
    let stem = l.subalgebra_on(&k)?;

    let names = (1..=mc.graded_dim().total())
        .map(|i| format!("a{i}"))
        .collect();
    let abelian = SuperAlgebra::abelian(f, mc.graded_dim(), Some(names));
    let sum = stem.algebra.direct_sum(&abelian)?;

    let total = l.total_dim();
    if sum.algebra.total_dim() != total {
        return Err(Error::Defect(format!(
            "stem decomposition dimensions do not add up: {} + {} vs {}",
            stem.algebra.dim(),
            abelian.dim(),
            l.dim()
        )));
    }

    // arranged basis: sum coordinate -> ambient vector of L
    let mut rows = vec![Vec::new(); total];
    for i in 0..stem.algebra.total_dim() {
        rows[sum.left_index(i)] = stem.inclusion.matrix().row(i).to_vec();
    }
    for j in 0..abelian.total_dim() {
        rows[sum.right_index(j)] = mc.basis().row(j).to_vec();
    }
    let arranged = Matrix::from_rows(f, total, &rows)?;
    let iso = GradedLinearMap::new(l.dim(), sum.algebra.dim(), arranged.inverse()?)?;

    if !iso.is_isomorphism(l, &sum.algebra)? {
        return Err(Error::Defect(
            "the arranged-basis map is not an isomorphism onto stem + abelian".into(),
        ));
    }
    if !is_stem(&stem.algebra) {
        return Err(Error::Defect("the stem part is not stem".into()));
    }

    Ok(StemDecomposition {
        stem,
        abelian,
        sum,
        iso,
    })
}

struct StemRoute {
    dec: StemDecomposition,
    /// witness L -> stem part
    to_stem: IsoclinismWitness,
}

/// L ~ T + A ~ T with explicit witnesses.
fn stem_route(l: &SuperAlgebra) -> Result<StemRoute> {
    let dec = stem_decompose(l)?;
    let to_sum = witness_from_isomorphism(&dec.iso, l, &dec.sum.algebra)?;
    let (ds, stem_to_sum) = witness_abelian_sum(&dec.stem.algebra, &dec.abelian)?;
    if ds.algebra != dec.sum.algebra {
        return Err(Error::Defect(
            "direct sum construction is not reproducible".into(),
        ));
    }
    let to_stem = compose_witnesses(&to_sum, &invert_witness(&stem_to_sum)?)?;
    Ok(StemRoute { dec, to_stem })
}

#[derive(Clone, Debug)]
pub enum IsoclinismOutcome {
    Witness(IsoclinismWitness),
    NotIsoclinic(String),
    Unknown(String),
}

impl IsoclinismOutcome {
    pub fn witness(&self) -> Option<&IsoclinismWitness> {
        match self {
            IsoclinismOutcome::Witness(w) => Some(w),
            _ => None,
        }
    }
}

/// Decides isoclinism of two algebras over the same field.
///
/// Quick rejection compares invariant profiles of the central quotients and
/// derived subalgebras (isoclinic algebras have isomorphic ones). Otherwise
/// both algebras are split as stem + abelian and the stem parts are searched
/// for an isomorphism; a found isomorphism is lifted back through the split
/// witnesses and the composite is re-verified. `NotIsoclinic` from the stem
/// search is definitive, since it only arises from complete exhaustion or an
/// invariant mismatch.
pub fn find_isoclinism(
    l: &SuperAlgebra,
    k: &SuperAlgebra,
    budget: Budget,
) -> Result<IsoclinismOutcome> {
    if l.field() != k.field() {
        return Err(Error::FieldMismatch(
            l.field().describe(),
            k.field().describe(),
        ));
    }

    let ql = l.central_quotient().algebra;
    let qk = k.central_quotient().algebra;
    if let Some(diff) = profile_difference(&ql, &qk) {
        return Ok(IsoclinismOutcome::NotIsoclinic(format!(
            "central quotients differ at {diff}"
        )));
    }
    let dl = l.derived_subalgebra().algebra;
    let dk = k.derived_subalgebra().algebra;
    if let Some(diff) = profile_difference(&dl, &dk) {
        return Ok(IsoclinismOutcome::NotIsoclinic(format!(
            "derived subalgebras differ at {diff}"
        )));
    }

    let route_l = stem_route(l)?;
    let route_k = stem_route(k)?;
    match find_isomorphism(
        &route_l.dec.stem.algebra,
        &route_k.dec.stem.algebra,
        budget,
    )? {
        IsomorphismOutcome::Witness(g) => {
            let middle = witness_from_isomorphism(
                &g,
                &route_l.dec.stem.algebra,
                &route_k.dec.stem.algebra,
            )?;
            let w = compose_witnesses(
                &compose_witnesses(&route_l.to_stem, &middle)?,
                &invert_witness(&route_k.to_stem)?,
            )?;
            if !check_witness(&w)? {
                return Err(Error::Defect(
                    "assembled isoclinism witness failed re-verification".into(),
                ));
            }
            Ok(IsoclinismOutcome::Witness(w))
        }
        IsomorphismOutcome::NotIsomorphic(reason) => Ok(IsoclinismOutcome::NotIsoclinic(format!(
            "stem parts are not isomorphic: {reason}"
        ))),
        IsomorphismOutcome::Unknown(reason) => Ok(IsoclinismOutcome::Unknown(reason)),
    }
}

fn profile_difference(a: &SuperAlgebra, b: &SuperAlgebra) -> Option<String> {
    let pa = InvariantProfile::of(a);
    let pb = InvariantProfile::of(b);
    if pa == pb {
        return None;
    }
    Some(
        pa.entries()
            .into_iter()
            .zip(pb.entries())
            .find(|(x, y)| x.1 != y.1)
            .map(|((name, va), (_, vb))| format!("{name}: {va} vs {vb}"))
            .unwrap_or_else(|| "structure".into()),
    )
}

/// Isomorphism test for algebras of the same graded dimension, routed through
/// the stem parts: isoclinic algebras of equal dimension have isomorphic stem
/// parts and abelian parts, and a stem isomorphism extends blockwise to the
/// whole algebra. The assembled map is re-verified before being returned.
pub fn same_dim_isomorphism(
    l: &SuperAlgebra,
    k: &SuperAlgebra,
    budget: Budget,
) -> Result<IsomorphismOutcome> {
    if l.field() != k.field() {
        return Err(Error::FieldMismatch(
            l.field().describe(),
            k.field().describe(),
        ));
    }
    if l.dim() != k.dim() {
        return Err(Error::DimensionMismatch(format!(
            "same-dimension routine on {} vs {}",
            l.dim(),
            k.dim()
        )));
    }

    let dec_l = stem_decompose(l)?;
    let dec_k = stem_decompose(k)?;
    match find_isomorphism(&dec_l.stem.algebra, &dec_k.stem.algebra, budget)? {
        IsomorphismOutcome::Witness(sigma) => {
            if dec_l.abelian.dim() != dec_k.abelian.dim() {
                return Err(Error::Defect(
                    "isomorphic stem parts but mismatched abelian parts at equal total dimension"
                        .into(),
                ));
            }
            let f = l.field();
            let total = dec_l.sum.algebra.total_dim();
            let mut rows = vec![Vec::new(); total];
            for i in 0..dec_l.stem.algebra.total_dim() {
                rows[dec_l.sum.left_index(i)] =
                    row_times_matrix(f, sigma.matrix().row(i), dec_k.sum.left.matrix());
            }
            for j in 0..dec_l.abelian.total_dim() {
                rows[dec_l.sum.right_index(j)] = dec_k.sum.right.matrix().row(j).to_vec();
            }
            let bridge = GradedLinearMap::new(
                dec_l.sum.algebra.dim(),
                dec_k.sum.algebra.dim(),
                Matrix::from_rows(f, total, &rows)?,
            )?;
            let g = dec_l.iso.then(&bridge)?.then(&dec_k.iso.inverse()?)?;
            if !g.is_isomorphism(l, k)? {
                return Err(Error::Defect(
                    "assembled same-dimension isomorphism failed re-verification".into(),
                ));
            }
            Ok(IsomorphismOutcome::Witness(g))
        }
        IsomorphismOutcome::NotIsomorphic(reason) => Ok(IsomorphismOutcome::NotIsomorphic(
            format!("stem parts are not isomorphic: {reason}"),
        )),
        IsomorphismOutcome::Unknown(reason) => Ok(IsomorphismOutcome::Unknown(reason)),
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessDoc {
    pub source: AlgebraDoc,
    pub target: AlgebraDoc,
    pub phi: MapDoc,
    pub theta: MapDoc,
}

pub fn witness_to_doc(w: &IsoclinismWitness) -> Result<WitnessDoc> {
    Ok(WitnessDoc {
        source: algebra_to_doc("source", &w.source)?,
        target: algebra_to_doc("target", &w.target)?,
        phi: map_to_doc(&w.phi),
        theta: map_to_doc(&w.theta),
    })
}

pub fn witness_to_json(w: &IsoclinismWitness) -> Result<String> {
    let doc = witness_to_doc(w)?;
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses and re-verifies a witness; loading fails if the maps no longer
/// certify an isoclinism.
pub fn witness_from_json(s: &str) -> Result<IsoclinismWitness> {
    let doc: WitnessDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let (_, source) = algebra_from_doc(&doc.source)?;
    let (_, target) = algebra_from_doc(&doc.target)?;
    let f = source.field();
    let w = IsoclinismWitness {
        phi: map_from_doc(f, &doc.phi)?,
        theta: map_from_doc(f, &doc.theta)?,
        source,
        target,
    };
    if !check_witness(&w)? {
        return Err(Error::Incompatible(
            "the stored witness fails verification".into(),
        ));
    }
    Ok(w)
}
