//! Scalar 2-cocycles, coboundaries, the multiplier, and stem covers.
//!
//! The multiplier is computed per parity as scalar-valued graded 2-cocycles
//! modulo coboundaries. A cover of L is the central extension on L + M whose
//! bracket is twisted by a full set of multiplier representatives; different
//! representative choices are expected to give isomorphic covers, and
//! `covers_isomorphic` checks exactly that with an explicit witness.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactlin::field::{Field, Scalar};
use crate::exactlin::matrix::{vec_is_zero, zero_vec, Matrix};
use crate::exactlin::subspace::{parity_sign, GradedDim, GradedSubspace, Parity};
use crate::superalg::algebra::SuperAlgebra;
use crate::superalg::json::{
    algebra_from_doc, algebra_to_doc, map_from_doc, map_to_doc, AlgebraDoc, MapDoc,
};
use crate::superalg::maps::GradedLinearMap;
use crate::superalg::search::{
    find_isomorphism, raw_search, Budget, IsomorphismOutcome, RawOutcome, RowConstraint,
};

/// A scalar-valued graded 2-form on L of homogeneous parity; entry (i, j) is
/// the value on the (i, j)-th basis pair.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalarCocycle2 {
    pub parity: Parity,
    coefficients: Matrix,
}

impl ScalarCocycle2 {
    pub fn coefficients(&self) -> &Matrix {
        &self.coefficients
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.coefficients.row(i)[j]
    }

    /// Bilinear evaluation on coordinate vectors.
    pub fn evaluate(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let f = self.coefficients.field();
        let mut acc = f.zero();
        for (i, a) in x.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if f.is_zero(b) {
                    continue;
                }
                acc = f.add(&acc, &f.mul(&f.mul(a, b), self.entry(i, j)));
            }
        }
        acc
    }
}

fn parity_label(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

/// Canonical coordinates for parity-sigma graded 2-forms: one slot per pair
/// i < j with matching parity sum, plus the odd diagonal when sigma is even;
/// graded skew fills in everything else.
struct SlotSpace {
    ldim: GradedDim,
    sigma: Parity,
    pairs: Vec<(usize, usize)>,
}

impl SlotSpace {
    fn new(ldim: GradedDim, sigma: Parity) -> SlotSpace {
        let d = ldim.total();
        let mut pairs = Vec::new();
        for i in 0..d {
            for j in i..d {
                let pi = Parity::of_index(ldim, i);
                let pj = Parity::of_index(ldim, j);
                if pi.add(pj) != sigma {
                    continue;
                }
                if i == j && pi == Parity::Even {
                    continue;
                }
                pairs.push((i, j));
            }
        }
        SlotSpace { ldim, sigma, pairs }
    }

    fn len(&self) -> usize {
        self.pairs.len()
    }

    /// Which slot the (i, j) entry reads from, and with which sign; None
    /// means the entry is forced to zero.
    fn entry_coeff(&self, f: Field, i: usize, j: usize) -> Option<(usize, Scalar)> {
        let pi = Parity::of_index(self.ldim, i);
        let pj = Parity::of_index(self.ldim, j);
        if pi.add(pj) != self.sigma {
            return None;
        }
        if i == j && pi == Parity::Even {
            return None;
        }
        if i <= j {
            let s = self.pairs.iter().position(|&p| p == (i, j))?;
            Some((s, f.one()))
        } else {
            let s = self.pairs.iter().position(|&p| p == (j, i))?;
            Some((s, f.neg(&parity_sign(f, pi, pj))))
        }
    }

    fn to_cocycle(&self, f: Field, slots: &[Scalar]) -> ScalarCocycle2 {
        let d = self.ldim.total();
        let mut rows = vec![zero_vec(f, d); d];
        for i in 0..d {
            for j in 0..d {
                if let Some((s, c)) = self.entry_coeff(f, i, j) {
                    rows[i][j] = f.mul(&c, &slots[s]);
                }
            }
        }
        ScalarCocycle2 {
            parity: self.sigma,
            coefficients: Matrix::from_rows(f, d, &rows).expect("square coefficient matrix"),
        }
    }
}

/// Rows are the cocycle identity residuals over all basis triples, expressed
/// in slot coordinates; the kernel is the cocycle space.
fn cocycle_equations(l: &SuperAlgebra, space: &SlotSpace) -> Result<Matrix> {
    let f = l.field();
    let d = l.total_dim();
    let n = space.len();
    let mut rows = Vec::new();
    let add_term = |row: &mut Vec<Scalar>, i: usize, j: usize, w: &Scalar| {
        if let Some((s, c)) = space.entry_coeff(f, i, j) {
            row[s] = f.add(&row[s], &f.mul(w, &c));
        }
    };
    for x in 0..d {
        for y in 0..d {
            let sxy = parity_sign(
                f,
                Parity::of_index(l.dim(), x),
                Parity::of_index(l.dim(), y),
            );
            for z in 0..d {
                let mut row = zero_vec(f, n);
                // c([x,y], z) - c(x, [y,z]) + (-1)^{|x||y|} c(y, [x,z])
                for (k, c) in l.bracket_basis(x, y).iter().enumerate() {
                    if !f.is_zero(c) {
                        add_term(&mut row, k, z, c);
                    }
                }
                for (k, c) in l.bracket_basis(y, z).iter().enumerate() {
                    if !f.is_zero(c) {
                        add_term(&mut row, x, k, &f.neg(c));
                    }
                }
                for (k, c) in l.bracket_basis(x, z).iter().enumerate() {
                    if !f.is_zero(c) {
                        add_term(&mut row, y, k, &f.mul(&sxy, c));
                    }
                }
                if !vec_is_zero(f, &row) {
                    rows.push(row);
                }
            }
        }
    }
    Matrix::from_rows(f, n, &rows)
}

struct ParityData {
    space: SlotSpace,
    /// echelonized cocycle basis in slot coordinates
    cocycles: Matrix,
    /// echelonized coboundary basis in slot coordinates
    coboundaries: Matrix,
    /// representatives of cocycles modulo coboundaries, in slot coordinates
    representatives: Matrix,
}

fn parity_data(l: &SuperAlgebra, sigma: Parity) -> Result<ParityData> {
    let f = l.field();
    let space = SlotSpace::new(l.dim(), sigma);
    let n = space.len();
    let cocycles = cocycle_equations(l, &space)?.kernel();

    // coboundaries c(x, y) = g([x, y]) for coordinate functionals g of the
    // right parity
    let mut gen_rows = Vec::new();
    for k in 0..l.total_dim() {
        if Parity::of_index(l.dim(), k) != sigma {
            continue;
        }
        let row: Vec<Scalar> = space
            .pairs
            .iter()
            .map(|&(i, j)| l.bracket_basis(i, j)[k].clone())
            .collect();
        gen_rows.push(row);
    }
    let coboundaries = Matrix::from_rows(f, n, &gen_rows)?.rref().0;

    let ambient = GradedDim::new(n, 0);
    let z_space = GradedSubspace::from_rows(f, ambient, &cocycles.row_vecs())?;
    let b_space = GradedSubspace::from_rows(f, ambient, &coboundaries.row_vecs())?;
    let reps = b_space.complement_in(&z_space).map_err(|_| {
        Error::InvalidAlgebra(
            "coboundaries escape the cocycle space; the bracket violates the graded Jacobi identity"
                .into(),
        )
    })?;
    Ok(ParityData {
        representatives: reps.basis(),
        space,
        cocycles,
        coboundaries,
    })
}

/// Echelonized basis of the parity-sigma cocycles.
pub fn cocycle_space(l: &SuperAlgebra, sigma: Parity) -> Result<Vec<ScalarCocycle2>> {
    let data = parity_data(l, sigma)?;
    Ok(data
        .cocycles
        .row_vecs()
        .iter()
        .map(|v| data.space.to_cocycle(l.field(), v))
        .collect())
}

/// Echelonized basis of the parity-sigma coboundaries.
pub fn coboundary_space(l: &SuperAlgebra, sigma: Parity) -> Result<Vec<ScalarCocycle2>> {
    let data = parity_data(l, sigma)?;
    Ok(data
        .coboundaries
        .row_vecs()
        .iter()
        .map(|v| data.space.to_cocycle(l.field(), v))
        .collect())
}

/// Cocycles modulo coboundaries, by parity of the form.
#[derive(Clone, Debug)]
pub struct MultiplierResult {
    pub even_basis: Vec<ScalarCocycle2>,
    pub odd_basis: Vec<ScalarCocycle2>,
    pub graded_dim: GradedDim,
}

pub fn multiplier(l: &SuperAlgebra) -> Result<MultiplierResult> {
    let even = parity_data(l, Parity::Even)?;
    let odd = parity_data(l, Parity::Odd)?;
    let f = l.field();
    let even_basis: Vec<ScalarCocycle2> = even
        .representatives
        .row_vecs()
        .iter()
        .map(|v| even.space.to_cocycle(f, v))
        .collect();
    let odd_basis: Vec<ScalarCocycle2> = odd
        .representatives
        .row_vecs()
        .iter()
        .map(|v| odd.space.to_cocycle(f, v))
        .collect();
    Ok(MultiplierResult {
        graded_dim: GradedDim::new(even_basis.len(), odd_basis.len()),
        even_basis,
        odd_basis,
    })
}

/// A named, deterministic way of picking multiplier representatives: an
/// invertible recombination per parity plus a coboundary shift added to each
/// representative. Shapes are checked against L when the choice is used.
#[derive(Clone, Debug, PartialEq)]
pub struct RepresentativeChoice {
    pub label: String,
    pub even_transform: Matrix,
    pub odd_transform: Matrix,
    pub even_shift: Matrix,
    pub odd_shift: Matrix,
}

fn zero_matrix(f: Field, rows: usize, cols: usize) -> Matrix {
    Matrix::from_rows(f, cols, &vec![zero_vec(f, cols); rows]).expect("zero matrix")
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

impl RepresentativeChoice {
    pub fn canonical(l: &SuperAlgebra) -> Result<RepresentativeChoice> {
        let f = l.field();
        let even = parity_data(l, Parity::Even)?;
        let odd = parity_data(l, Parity::Odd)?;
        let (re, be) = (even.representatives.rows(), even.coboundaries.rows());
        let (ro, bo) = (odd.representatives.rows(), odd.coboundaries.rows());
        Ok(RepresentativeChoice {
            label: "canonical".into(),
            even_transform: Matrix::identity(f, re),
            odd_transform: Matrix::identity(f, ro),
            even_shift: zero_matrix(f, re, be),
            odd_shift: zero_matrix(f, ro, bo),
        })
    }

    /// Deterministic non-canonical choice: diagonal scalings away from 1,
    /// adjacent transpositions, and 0/1 coboundary shifts, all driven by k.
    /// Over the rationals the scaling units are 2 and 1/2 so that witnesses
    /// between variant and canonical covers stay inside the bounded
    /// coefficient box of the isomorphism search.
    pub fn variant(l: &SuperAlgebra, k: u64) -> Result<RepresentativeChoice> {
        let f = l.field();
        let units: Vec<Scalar> = match f {
            Field::Rationals => vec![f.from_i64(2), f.inv(&f.from_i64(2))],
            Field::Prime(p) => (2..p).map(|u| f.from_i64(u as i64)).collect(),
        };
        let mut state = k.wrapping_mul(0x2545f4914f6cdd1d).wrapping_add(1);
        let mut base = RepresentativeChoice::canonical(l)?;
        base.label = format!("variant:{k}");
        base.even_transform = scramble_transform(f, &base.even_transform, &units, &mut state);
        base.odd_transform = scramble_transform(f, &base.odd_transform, &units, &mut state);
        base.even_shift = scramble_shift(f, &base.even_shift, &mut state);
        base.odd_shift = scramble_shift(f, &base.odd_shift, &mut state);
        Ok(base)
    }
}

fn scramble_transform(f: Field, identity: &Matrix, units: &[Scalar], state: &mut u64) -> Matrix {
    let n = identity.rows();
    let mut rows = identity.row_vecs();
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = units[(splitmix(state) % units.len() as u64) as usize].clone();
    }
    for i in 1..n {
        if splitmix(state) & 1 == 1 {
            rows.swap(i - 1, i);
        }
    }
    Matrix::from_rows(f, n, &rows).expect("scrambled transform")
}

fn scramble_shift(f: Field, zero: &Matrix, state: &mut u64) -> Matrix {
    let mut rows = zero.row_vecs();
    for row in rows.iter_mut() {
        for x in row.iter_mut() {
            if splitmix(state) & 1 == 1 {
                *x = f.one();
            }
        }
    }
    Matrix::from_rows(f, zero.cols(), &rows).expect("scrambled shift")
}

/// Applies a representative choice to one parity: transform * representatives
/// + shift * coboundaries, returned as cocycles.
fn chosen_representatives(
    l: &SuperAlgebra,
    sigma: Parity,
    transform: &Matrix,
    shift: &Matrix,
) -> Result<Vec<ScalarCocycle2>> {
    let f = l.field();
    let data = parity_data(l, sigma)?;
    let r = data.representatives.rows();
    let nb = data.coboundaries.rows();
    if transform.rows() != r || transform.cols() != r || transform.rank() != r {
        return Err(Error::InvalidRepresentativeChoice(format!(
            "the {} transform must be an invertible {r} by {r} matrix",
            parity_label(sigma)
        )));
    }
    if shift.rows() != r || shift.cols() != nb {
        return Err(Error::InvalidRepresentativeChoice(format!(
            "the {} shift must be {r} by {nb}",
            parity_label(sigma)
        )));
    }
    let combined = transform
        .mul(&data.representatives)?
        .add(&shift.mul(&data.coboundaries)?)?;
    Ok((0..r)
        .map(|t| data.space.to_cocycle(f, combined.row(t)))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtensionTag {
    Central,
    Stem,
    StemCover,
}

impl ExtensionTag {
    pub fn label(&self) -> &'static str {
        match self {
            ExtensionTag::Central => "central",
            ExtensionTag::Stem => "stem",
            ExtensionTag::StemCover => "stem_cover",
        }
    }

    fn from_label(s: &str) -> Option<ExtensionTag> {
        match s {
            "central" => Some(ExtensionTag::Central),
            "stem" => Some(ExtensionTag::Stem),
            "stem_cover" => Some(ExtensionTag::StemCover),
            _ => None,
        }
    }
}

/// A central extension of `base`: `project` is onto with central kernel equal
/// to the image of `embed`. The tags record what `verify_extension`
/// established.
#[derive(Clone, Debug)]
pub struct CentralExtension {
    pub base: SuperAlgebra,
    pub total: SuperAlgebra,
    pub embed: GradedLinearMap,
    pub project: GradedLinearMap,
    pub kind: BTreeSet<ExtensionTag>,
}

/// Builds the cover of L for one representative choice: total space L + M
/// with M of the multiplier's dimension, bracket
/// [(x, m), (y, n)] = ([x, y], c(x, y)) with c assembling the chosen
/// representatives coordinate-wise. Tags are recomputed from the result, not
/// assumed; a choice whose shifts break the stem property is reported through
/// the missing tags.
pub fn build_cover(
    l: &SuperAlgebra,
    choice: &RepresentativeChoice,
) -> Result<CentralExtension> {
    if !l.is_valid() {
        return Err(Error::InvalidAlgebra(
            "cover construction requires a valid algebra".into(),
        ));
    }
    let f = l.field();
    let even = chosen_representatives(l, Parity::Even, &choice.even_transform, &choice.even_shift)?;
    let odd = chosen_representatives(l, Parity::Odd, &choice.odd_transform, &choice.odd_shift)?;
    let mdim = GradedDim::new(even.len(), odd.len());
    let names = (1..=mdim.total()).map(|i| format!("m{i}")).collect();
    let m_alg = SuperAlgebra::abelian(f, mdim, Some(names));
    let ds = l.direct_sum(&m_alg)?;
    let d = ds.algebra.total_dim();

    let mut constants = Vec::with_capacity(d * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                constants.push(ds.algebra.constant(i, j, k).clone());
            }
        }
    }
    for (t, c) in even.iter().chain(odd.iter()).enumerate() {
        let m_coord = ds.right_index(t);
        for i in 0..l.total_dim() {
            for j in 0..l.total_dim() {
                let v = c.entry(i, j);
                if !f.is_zero(v) {
                    let slot = (ds.left_index(i) * d + ds.left_index(j)) * d + m_coord;
                    constants[slot] = f.add(&constants[slot], v);
                }
            }
        }
    }
    let total = SuperAlgebra::from_constants(
        f,
        ds.algebra.dim(),
        ds.algebra.names().to_vec(),
        constants,
    )?;
    if !total.is_valid() {
        return Err(Error::Defect(
            "the twisted bracket violates the algebra axioms".into(),
        ));
    }
    let project = GradedLinearMap::new(total.dim(), l.dim(), ds.left.matrix().transpose())?;
    let mut ext = CentralExtension {
        base: l.clone(),
        total,
        embed: ds.right,
        project,
        kind: BTreeSet::new(),
    };
    ext.kind = verify_extension(&ext);
    Ok(ext)
}

/// Bounded deterministic retry over coboundary shift patterns when a choice
/// fails the stem check; the first stem cover found wins.
pub fn build_cover_retrying(
    l: &SuperAlgebra,
    choice: &RepresentativeChoice,
    attempts: u64,
) -> Result<CentralExtension> {
    let first = build_cover(l, choice)?;
    if first.kind.contains(&ExtensionTag::StemCover) {
        return Ok(first);
    }
    for k in 0..attempts {
        let mut retry = RepresentativeChoice::variant(l, k)?;
        retry.label = format!("{}+retry:{k}", choice.label);
        retry.even_transform = choice.even_transform.clone();
        retry.odd_transform = choice.odd_transform.clone();
        let ext = build_cover(l, &retry)?;
        if ext.kind.contains(&ExtensionTag::StemCover) {
            return Ok(ext);
        }
    }
    Ok(first)
}

/// Recomputes every tag from scratch. An object that is not even a central
/// extension (projection not onto, kernel not the embedded copy, embedding
/// not injective) gets the empty set.
pub fn verify_extension(ext: &CentralExtension) -> BTreeSet<ExtensionTag> {
    let mut tags = BTreeSet::new();
    if ext.project.source() != ext.total.dim()
        || ext.project.target() != ext.base.dim()
        || ext.embed.target() != ext.total.dim()
    {
        return tags;
    }
    match ext.project.is_homomorphism(&ext.total, &ext.base) {
        Ok(true) => {}
        _ => return tags,
    }
    if ext.project.matrix().rank() != ext.base.total_dim() {
        return tags;
    }
    if ext.embed.matrix().rank() != ext.embed.source().total() {
        return tags;
    }
    let kernel = ext.project.kernel();
    let image = ext.embed.image();
    if !(kernel.contains(&image) && image.contains(&kernel)) {
        return tags;
    }
    if !ext.total.center().contains(&image) {
        return tags;
    }
    tags.insert(ExtensionTag::Central);
    if !ext.total.derived().contains(&image) {
        return tags;
    }
    tags.insert(ExtensionTag::Stem);
    if ext.base.is_valid() {
        if let Ok(m) = multiplier(&ext.base) {
            if m.graded_dim == ext.embed.source() {
                tags.insert(ExtensionTag::StemCover);
            }
        }
    }
    tags
}

/// True iff g is a homomorphism of the total algebras commuting with both
/// projections to the shared base.
pub fn extension_homomorphism_check(
    ext1: &CentralExtension,
    ext2: &CentralExtension,
    g: &GradedLinearMap,
) -> Result<bool> {
    if ext1.base != ext2.base {
        return Err(Error::Incompatible(
            "the extensions have different base algebras".into(),
        ));
    }
    if g.source() != ext1.total.dim() || g.target() != ext2.total.dim() {
        return Err(Error::DimensionMismatch(format!(
            "a map {} -> {} cannot compare extensions of total dimensions {} and {}",
            g.source(),
            g.target(),
            ext1.total.dim(),
            ext2.total.dim()
        )));
    }
    if !g.is_homomorphism(&ext1.total, &ext2.total)? {
        return Ok(false);
    }
    let composed = g.then(&ext2.project)?;
    Ok(composed.matrix() == ext1.project.matrix())
}

/// Builds the covers for both choices and searches for an isomorphism between
/// them. Base-compatible images are tried first: pinning each basis vector's
/// image to project to the same base vector makes any hit an extension
/// isomorphism; if that exhausts, the unconstrained search has the last word.
/// NotIsomorphic on two verified stem covers would falsify the uniqueness
/// claim and is passed through for the caller to report.
pub fn covers_isomorphic(
    l: &SuperAlgebra,
    choice1: &RepresentativeChoice,
    choice2: &RepresentativeChoice,
    budget: Budget,
) -> Result<IsomorphismOutcome> {
    let e1 = build_cover(l, choice1)?;
    let e2 = build_cover(l, choice2)?;
    if !e1.kind.contains(&ExtensionTag::StemCover) || !e2.kind.contains(&ExtensionTag::StemCover) {
        return Err(Error::Incompatible(
            "both representative choices must produce stem covers".into(),
        ));
    }
    let p2 = e2.project.matrix();
    let constraints: Vec<Option<RowConstraint>> = (0..e1.total.total_dim())
        .map(|i| {
            Some(RowConstraint {
                matrix: p2.clone(),
                rhs: e1.project.matrix().row(i).to_vec(),
            })
        })
        .collect();
    if let RawOutcome::Found(g) = raw_search(&e1.total, &e2.total, budget, Some(&constraints))? {
        if !g.is_isomorphism(&e1.total, &e2.total)?
            || !extension_homomorphism_check(&e1, &e2, &g)?
        {
            return Err(Error::Defect(
                "the constrained cover search returned a non-witness".into(),
            ));
        }
        return Ok(IsomorphismOutcome::Witness(g));
    }
    find_isomorphism(&e1.total, &e2.total, budget)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDoc {
    pub base: AlgebraDoc,
    pub total: AlgebraDoc,
    pub embed: MapDoc,
    pub project: MapDoc,
    pub tags: Vec<String>,
}

pub fn extension_to_doc(ext: &CentralExtension) -> Result<ExtensionDoc> {
    Ok(ExtensionDoc {
        base: algebra_to_doc("base", &ext.base)?,
        total: algebra_to_doc("total", &ext.total)?,
        embed: map_to_doc(&ext.embed),
        project: map_to_doc(&ext.project),
        tags: ext.kind.iter().map(|t| t.label().to_string()).collect(),
    })
}

pub fn extension_to_json(ext: &CentralExtension) -> Result<String> {
    let doc = extension_to_doc(ext)?;
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Parse(e.to_string()))
}

/// Rebuilds an extension and re-verifies it; stored tags must match what
/// verification finds.
pub fn extension_from_doc(doc: &ExtensionDoc) -> Result<CentralExtension> {
    let (_, base) = algebra_from_doc(&doc.base)?;
    let (_, total) = algebra_from_doc(&doc.total)?;
    if base.field() != total.field() {
        return Err(Error::FieldMismatch(
            base.field().describe(),
            total.field().describe(),
        ));
    }
    let f = total.field();
    let embed = map_from_doc(f, &doc.embed)?;
    let project = map_from_doc(f, &doc.project)?;
    let mut claimed = BTreeSet::new();
    for t in &doc.tags {
        claimed.insert(
            ExtensionTag::from_label(t)
                .ok_or_else(|| Error::Parse(format!("unknown extension tag {t:?}")))?,
        );
    }
    let ext = CentralExtension {
        base,
        total,
        embed,
        project,
        kind: claimed.clone(),
    };
    let recomputed = verify_extension(&ext);
    if recomputed != claimed {
        return Err(Error::Parse(
            "stored extension tags disagree with re-verification".into(),
        ));
    }
    Ok(ext)
}

pub fn extension_from_json(s: &str) -> Result<CentralExtension> {
    let doc: ExtensionDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    extension_from_doc(&doc)
}
