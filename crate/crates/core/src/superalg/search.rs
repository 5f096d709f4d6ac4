//! Backtracking search for graded isomorphisms.
//!
//! The search assigns images to source basis vectors one at a time, most
//! bracket-constrained indices first, and propagates bracket equations after
//! every assignment: an equation whose unknown images are all assigned is
//! checked outright, and one with exactly a single unknown forces it. Over a
//! prime field the candidate images for each row run through the entire
//! parity block (these stay small here), so an exhausted search proves
//! non-isomorphism; over the rationals coefficients come from a fixed finite
//! box and exhaustion is merely inconclusive. Any witness found is
//! re-verified mechanically before it is returned.

use crate::error::{Error, Result};
use crate::exactlin::field::{Field, Scalar};
use crate::exactlin::matrix::{vec_is_zero, vec_scale, vec_sub, zero_vec, Matrix};
use crate::exactlin::subspace::Parity;
use crate::superalg::algebra::SuperAlgebra;
use crate::superalg::maps::GradedLinearMap;
use crate::superalg::profile::InvariantProfile;

/// Node allowance for one search; a node is one candidate image attempt.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_nodes: 10_000_000,
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Budget {
        Budget { max_nodes }
    }
}

#[derive(Clone, Debug)]
pub enum IsomorphismOutcome {
    Witness(GradedLinearMap),
    NotIsomorphic(String),
    Unknown(String),
}

impl IsomorphismOutcome {
    pub fn witness(&self) -> Option<&GradedLinearMap> {
        match self {
            IsomorphismOutcome::Witness(m) => Some(m),
            _ => None,
        }
    }
}

/// Affine side condition on the image v of one source basis vector:
/// v * matrix = rhs.
#[derive(Clone, Debug)]
pub struct RowConstraint {
    pub matrix: Matrix,
    pub rhs: Vec<Scalar>,
}

pub(crate) enum RawOutcome {
    Found(GradedLinearMap),
    /// `complete` means the candidate sets covered every graded possibility,
    /// so exhaustion disproves existence.
    Exhausted {
        complete: bool,
        nodes: u64,
    },
    OutOfBudget {
        nodes: u64,
    },
}

/// Searches for a graded algebra isomorphism from `a` to `b`.
pub fn find_isomorphism(
    a: &SuperAlgebra,
    b: &SuperAlgebra,
    budget: Budget,
) -> Result<IsomorphismOutcome> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(
            a.field().describe(),
            b.field().describe(),
        ));
    }
    let pa = InvariantProfile::of(a);
    let pb = InvariantProfile::of(b);
    if pa != pb {
        let mismatch = pa
            .entries()
            .into_iter()
            .zip(pb.entries())
            .find(|(x, y)| x.1 != y.1)
            .map(|((name, va), (_, vb))| format!("{name}: {va} vs {vb}"))
            .unwrap_or_else(|| "structure".into());
        return Ok(IsomorphismOutcome::NotIsomorphic(format!(
            "invariant profiles differ at {mismatch}"
        )));
    }
    match raw_search(a, b, budget, None)? {
        RawOutcome::Found(m) => Ok(IsomorphismOutcome::Witness(m)),
        RawOutcome::Exhausted {
            complete: true,
            nodes,
        } => Ok(IsomorphismOutcome::NotIsomorphic(format!(
            "all graded basis assignments fail the bracket equations ({nodes} nodes)"
        ))),
        RawOutcome::Exhausted {
            complete: false,
            nodes,
        } => Ok(IsomorphismOutcome::Unknown(format!(
            "bounded coefficient search exhausted without a witness ({nodes} nodes)"
        ))),
        RawOutcome::OutOfBudget { nodes } => Ok(IsomorphismOutcome::Unknown(format!(
            "node budget exhausted after {nodes} nodes"
        ))),
    }
}

/// Core search. `constraints`, when present, restricts the image of each
/// source basis vector by an affine condition; exhaustion then only refutes
/// constrained witnesses.
pub(crate) fn raw_search(
    a: &SuperAlgebra,
    b: &SuperAlgebra,
    budget: Budget,
    constraints: Option<&[Option<RowConstraint>]>,
) -> Result<RawOutcome> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(
            a.field().describe(),
            b.field().describe(),
        ));
    }
    if a.dim() != b.dim() {
        return Ok(RawOutcome::Exhausted {
            complete: true,
            nodes: 0,
        });
    }
    if let Some(cs) = constraints {
        if cs.len() != a.total_dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} row constraints for dimension {}",
                cs.len(),
                a.total_dim()
            )));
        }
    }
    let d = a.total_dim();
    if d == 0 {
        return Ok(RawOutcome::Found(GradedLinearMap::identity(
            a.field(),
            a.dim(),
        )));
    }

    let (even_cands, even_complete) = build_candidates(b, Parity::Even);
    let (odd_cands, odd_complete) = build_candidates(b, Parity::Odd);
    let complete = even_complete && odd_complete;

    let src_ranks: Vec<(usize, usize)> = (0..d)
        .map(|i| {
            let mut v = zero_vec(a.field(), d);
            v[i] = a.field().one();
            ad_rank_pair(a, &v)
        })
        .collect();

    let mut state = SearchState {
        a,
        b,
        f: a.field(),
        d,
        schedule: schedule(a),
        images: vec![None; d],
        span: IncrementalSpan::new(a.field(), d),
        nodes: 0,
        max_nodes: budget.max_nodes,
        constraints,
        src_ranks,
        even_cands,
        odd_cands,
    };

    match state.extend(0) {
        Step::Found(m) => Ok(RawOutcome::Found(m)),
        Step::Fail => Ok(RawOutcome::Exhausted {
            complete,
            nodes: state.nodes,
        }),
        Step::Budget => Ok(RawOutcome::OutOfBudget { nodes: state.nodes }),
    }
}

enum Step {
    Found(GradedLinearMap),
    Fail,
    Budget,
}

struct SearchState<'a> {
    a: &'a SuperAlgebra,
    b: &'a SuperAlgebra,
    f: Field,
    d: usize,
    schedule: Vec<usize>,
    images: Vec<Option<Vec<Scalar>>>,
    span: IncrementalSpan,
    nodes: u64,
    max_nodes: u64,
    constraints: Option<&'a [Option<RowConstraint>]>,
    src_ranks: Vec<(usize, usize)>,
    even_cands: Vec<Candidate>,
    odd_cands: Vec<Candidate>,
}

struct Candidate {
    vec: Vec<Scalar>,
    ranks: (usize, usize),
}

impl<'a> SearchState<'a> {
    fn extend(&mut self, mut pos: usize) -> Step {
        while pos < self.d && self.images[self.schedule[pos]].is_some() {
            pos += 1;
        }
        if pos == self.d {
            return self.try_finish();
        }
        let i = self.schedule[pos];
        let parity = self.a.parity(i);
        let n_cands = match parity {
            Parity::Even => self.even_cands.len(),
            Parity::Odd => self.odd_cands.len(),
        };
        for c in 0..n_cands {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Step::Budget;
            }
            let cand = match parity {
                Parity::Even => &self.even_cands[c],
                Parity::Odd => &self.odd_cands[c],
            };
            if cand.ranks != self.src_ranks[i] {
                continue;
            }
            let v = cand.vec.clone();
            if !self.constraint_ok(i, &v) {
                continue;
            }
            let snap_images = self.images.clone();
            let snap_span = self.span.clone();
            if self.assign_and_propagate(i, v) {
                match self.extend(pos + 1) {
                    Step::Fail => {}
                    other => return other,
                }
            }
            self.images = snap_images;
            self.span = snap_span;
        }
        Step::Fail
    }

    fn constraint_ok(&self, i: usize, v: &[Scalar]) -> bool {
        match self.constraints.and_then(|cs| cs[i].as_ref()) {
            None => true,
            Some(rc) => {
                let lhs = crate::exactlin::matrix::row_times_matrix(self.f, v, &rc.matrix);
                lhs == rc.rhs
            }
        }
    }

    /// Assigns image v to source index i and closes under bracket equations.
    /// Returns false when a check fails; the caller restores the snapshots.
    fn assign_and_propagate(&mut self, i: usize, v: Vec<Scalar>) -> bool {
        if !self.span.insert(&v) {
            return false;
        }
        self.images[i] = Some(v);
        loop {
            let mut changed = false;
            for x in 0..self.d {
                if self.images[x].is_none() {
                    continue;
                }
                for y in 0..self.d {
                    if self.images[y].is_none() {
                        continue;
                    }
                    match self.process_equation(x, y) {
                        EquationState::Violated => return false,
                        EquationState::Forced => changed = true,
                        EquationState::Settled | EquationState::Open => {}
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// One bracket equation f([b_x, b_y]) = [f b_x, f b_y] with both images
    /// assigned. The left side is a combination of basis images; zero or one
    /// unknown among them is decidable now.
    fn process_equation(&mut self, x: usize, y: usize) -> EquationState {
        let f = self.f;
        let coeffs = self.a.bracket_basis(x, y);
        let mut unknown: Option<usize> = None;
        for (k, c) in coeffs.iter().enumerate() {
            if !f.is_zero(c) && self.images[k].is_none() {
                if unknown.is_some() {
                    return EquationState::Open;
                }
                unknown = Some(k);
            }
        }
        let rhs = self
            .b
            .bracket(
                self.images[x].as_ref().unwrap(),
                self.images[y].as_ref().unwrap(),
            )
            .expect("image vectors have target length");
        let mut assigned_part = zero_vec(f, self.d);
        for (k, c) in coeffs.iter().enumerate() {
            if f.is_zero(c) || Some(k) == unknown {
                continue;
            }
            let img = self.images[k].as_ref().unwrap();
            let term = vec_scale(f, c, img);
            assigned_part = crate::exactlin::matrix::vec_add(f, &assigned_part, &term);
        }
        match unknown {
            None => {
                if assigned_part == rhs {
                    EquationState::Settled
                } else {
                    EquationState::Violated
                }
            }
            Some(k0) => {
                let inv = f.inv(&coeffs[k0]);
                let w = vec_scale(f, &inv, &vec_sub(f, &rhs, &assigned_part));
                if !self.forced_image_ok(k0, &w) {
                    return EquationState::Violated;
                }
                if !self.span.insert(&w) {
                    return EquationState::Violated;
                }
                self.images[k0] = Some(w);
                EquationState::Forced
            }
        }
    }

    fn forced_image_ok(&self, k: usize, w: &[Scalar]) -> bool {
        let parity = self.a.parity(k);
        for (j, c) in w.iter().enumerate() {
            if self.b.parity(j) != parity && !self.f.is_zero(c) {
                return false;
            }
        }
        if vec_is_zero(self.f, w) {
            return false;
        }
        if ad_rank_pair(self.b, w) != self.src_ranks[k] {
            return false;
        }
        self.constraint_ok(k, w)
    }

    fn try_finish(&mut self) -> Step {
        let rows: Vec<Vec<Scalar>> = (0..self.d)
            .map(|i| self.images[i].clone().unwrap())
            .collect();
        let matrix = match Matrix::from_rows(self.f, self.d, &rows) {
            Ok(m) => m,
            Err(_) => return Step::Fail,
        };
        let map = match GradedLinearMap::new(self.a.dim(), self.b.dim(), matrix) {
            Ok(m) => m,
            Err(_) => return Step::Fail,
        };
        match map.is_isomorphism(self.a, self.b) {
            Ok(true) => Step::Found(map),
            _ => Step::Fail,
        }
    }
}

enum EquationState {
    Settled,
    Forced,
    Violated,
    Open,
}

/// Rank of ad(v) restricted to even and to odd arguments; both are preserved
/// by graded bijective homomorphisms, so they prune candidate images.
fn ad_rank_pair(alg: &SuperAlgebra, v: &[Scalar]) -> (usize, usize) {
    let ad = alg.ad_of_vector(v);
    let d = alg.total_dim();
    let even = alg.dim().even;
    let rows = ad.row_vecs();
    let even_rows: Vec<Vec<Scalar>> = rows[..even].to_vec();
    let odd_rows: Vec<Vec<Scalar>> = rows[even..d].to_vec();
    let re = Matrix::from_rows(alg.field(), d, &even_rows).unwrap().rank();
    let ro = Matrix::from_rows(alg.field(), d, &odd_rows).unwrap().rank();
    (re, ro)
}

/// Static assignment order: start from the index with the most nonzero
/// bracket partners, then repeatedly take the index with the most links to
/// already placed ones, so propagation sees equations early.
fn schedule(a: &SuperAlgebra) -> Vec<usize> {
    let d = a.total_dim();
    let f = a.field();
    let linked = |i: usize, j: usize| {
        !vec_is_zero(f, a.bracket_basis(i, j)) || !vec_is_zero(f, a.bracket_basis(j, i))
    };
    let degree: Vec<usize> = (0..d)
        .map(|i| (0..d).filter(|&j| linked(i, j)).count())
        .collect();
    let mut placed = vec![false; d];
    let mut order = Vec::with_capacity(d);
    for _ in 0..d {
        let mut best: Option<(usize, usize, usize)> = None;
        for i in 0..d {
            if placed[i] {
                continue;
            }
            let links = order.iter().filter(|&&j| linked(i, j)).count();
            let key = (links, degree[i], d - i);
            if best.map(|b| key > (b.0, b.1, b.2)).unwrap_or(true) {
                best = Some(key);
            }
        }
        let (_, _, rev) = best.unwrap();
        let i = d - rev;
        placed[i] = true;
        order.push(i);
    }
    order
}

const CANDIDATE_CAP: u128 = 200_000;

/// All candidate images of one parity, sorted simplest first (fewest nonzero
/// coefficients, then smallest coefficients). The bool reports completeness:
/// over GF(p) the full block is enumerated when it fits the cap; over Q a
/// finite coefficient box can never be complete.
fn build_candidates(b: &SuperAlgebra, parity: Parity) -> (Vec<Candidate>, bool) {
    let f = b.field();
    let d = b.total_dim();
    let block: Vec<usize> = (0..d).filter(|&j| b.parity(j) == parity).collect();
    let w = block.len();

    // digit pool, ordered by preference; index into it is the complexity key
    let (pool, complete): (Vec<Scalar>, bool) = match f {
        Field::Prime(p) => {
            let digits: Vec<Scalar> = (0..p as i64).map(|v| f.from_i64(v)).collect();
            (digits, true)
        }
        Field::Rationals => {
            let digits = [(0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)]
                .iter()
                .map(|&(n, den)| f.div(&f.from_i64(n), &f.from_i64(den)))
                .collect();
            (digits, false)
        }
    };
    let s = pool.len() as u128;
    let full = s.checked_pow(w as u32).map(|n| n <= CANDIDATE_CAP) == Some(true);

    let mut tuples: Vec<Vec<usize>> = Vec::new();
    if full {
        let total = s.pow(w as u32);
        for mut t in 0..total {
            let mut digits = vec![0usize; w];
            for slot in digits.iter_mut() {
                *slot = (t % s) as usize;
                t /= s;
            }
            tuples.push(digits);
        }
    } else {
        // fallback: at most two nonzero coefficients
        for i in 0..w {
            for a in 1..pool.len() {
                let mut digits = vec![0usize; w];
                digits[i] = a;
                tuples.push(digits.clone());
                for j in (i + 1)..w {
                    for c in 1..pool.len() {
                        let mut two = digits.clone();
                        two[j] = c;
                        tuples.push(two);
                    }
                }
            }
        }
    }

    tuples.retain(|t| t.iter().any(|&x| x != 0));
    tuples.sort_by_key(|t| {
        (
            t.iter().filter(|&&x| x != 0).count(),
            t.iter().sum::<usize>(),
            t.clone(),
        )
    });
    tuples.dedup();

    let candidates = tuples
        .into_iter()
        .map(|t| {
            let mut vec = zero_vec(f, d);
            for (slot, &digit) in t.iter().enumerate() {
                vec[block[slot]] = pool[digit].clone();
            }
            let ranks = ad_rank_pair(b, &vec);
            Candidate { vec, ranks }
        })
        .collect();
    (candidates, complete && full)
}

/// Row-reduced spanning set with cheap cloning, for independence checks
/// during the search.
#[derive(Clone)]
struct IncrementalSpan {
    field: Field,
    rows: Vec<Vec<Scalar>>,
}

impl IncrementalSpan {
    fn new(field: Field, _width: usize) -> IncrementalSpan {
        IncrementalSpan {
            field,
            rows: Vec::new(),
        }
    }

    /// Reduces v against the stored rows; inserts and reports true when it
    /// adds rank.
    fn insert(&mut self, v: &[Scalar]) -> bool {
        let f = self.field;
        let mut w = v.to_vec();
        for row in &self.rows {
            let p = row.iter().position(|x| !f.is_zero(x)).unwrap();
            if !f.is_zero(&w[p]) {
                let factor = w[p].clone();
                let scaled = vec_scale(f, &factor, row);
                w = vec_sub(f, &w, &scaled);
            }
        }
        if vec_is_zero(f, &w) {
            return false;
        }
        let p = w.iter().position(|x| !f.is_zero(x)).unwrap();
        let inv = f.inv(&w[p]);
        let w = vec_scale(f, &inv, &w);
        self.rows.push(w);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactlin::subspace::GradedDim;

    #[test]
    fn identity_like_case_is_fast() {
        let h = catalog::get("heisenberg-1-1").unwrap();
        match find_isomorphism(&h, &h, Budget::default()).unwrap() {
            IsomorphismOutcome::Witness(m) => {
                assert!(m.is_isomorphism(&h, &h).unwrap());
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn scaled_basis_is_recognized() {
        let h = catalog::get("heisenberg-1-0").unwrap();
        let f = h.field();
        let fv = |xs: &[i64]| xs.iter().map(|&x| f.from_i64(x)).collect::<Vec<_>>();
        let p = GradedLinearMap::new(
            h.dim(),
            h.dim(),
            Matrix::from_rows(f, 3, &[fv(&[2, 0, 0]), fv(&[0, 1, 1]), fv(&[0, 0, 2])]).unwrap(),
        )
        .unwrap();
        let t = h.transform_basis(&p).unwrap();
        let w = find_isomorphism(&h, &t, Budget::default()).unwrap();
        let m = w.witness().expect("scaled copy is isomorphic");
        assert!(m.is_isomorphism(&h, &t).unwrap());
    }

    #[test]
    fn profile_mismatch_is_reported_without_search() {
        let h = catalog::get("heisenberg-0-1").unwrap();
        let a = SuperAlgebra::abelian(h.field(), h.dim(), None);
        match find_isomorphism(&h, &a, Budget::nodes(1)).unwrap() {
            IsomorphismOutcome::NotIsomorphic(reason) => {
                assert!(reason.contains("invariant profiles differ"));
            }
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn gf_exhaustion_refutes() {
        // same profile-relevant dims would be needed to reach the search;
        // build two valid GF(5) algebras with equal profiles but different
        // structure is hard at tiny dims, so instead verify the complete
        // search on a self-pair with an unsatisfiable constraint refuses
        // rather than reporting unknown
        let h = catalog::get("gf5-heisenberg-1-0").unwrap();
        let f = h.field();
        let d = h.total_dim();
        // demand that e1's image be zero on every coordinate: impossible
        let rc = RowConstraint {
            matrix: Matrix::identity(f, d),
            rhs: zero_vec(f, d),
        };
        let mut constraints: Vec<Option<RowConstraint>> = vec![None; d];
        constraints[0] = Some(rc);
        match raw_search(&h, &h, Budget::default(), Some(&constraints)).unwrap() {
            RawOutcome::Exhausted { complete, .. } => assert!(complete),
            _ => panic!("constrained search should exhaust"),
        }
    }

    #[test]
    fn budget_exhaustion_reports_unknown() {
        let l = catalog::get("gf5-solvable-2-1").unwrap();
        let m = catalog::get("gf5-solvable-2-1").unwrap();
        match find_isomorphism(&l, &m, Budget::nodes(0)).unwrap() {
            IsomorphismOutcome::Unknown(reason) => assert!(reason.contains("budget")),
            other => panic!("expected unknown, got {other:?}"),
        }
    }

    #[test]
    fn zero_dimensional_algebras_are_isomorphic() {
        let f = Field::Rationals;
        let a = SuperAlgebra::abelian(f, GradedDim::new(0, 0), Some(vec![]));
        let b = SuperAlgebra::abelian(f, GradedDim::new(0, 0), Some(vec![]));
        assert!(matches!(
            find_isomorphism(&a, &b, Budget::default()).unwrap(),
            IsomorphismOutcome::Witness(_)
        ));
    }

    #[test]
    fn rational_box_failure_is_unknown_not_refutation() {
        // x -> 5x on the line needs coefficient 5, outside the search box;
        // [h, x] = 5x vs [h, x] = x share every profile entry
        let f = Field::Rationals;
        let dim = GradedDim::new(2, 0);
        let names = crate::superalg::algebra::standard_names(2);
        let a = SuperAlgebra::from_bracket_entries(
            f,
            dim,
            names.clone(),
            &[(0, 1, vec![(1, f.from_i64(1))])],
        )
        .unwrap();
        let b = SuperAlgebra::from_bracket_entries(
            f,
            dim,
            names,
            &[(0, 1, vec![(1, f.from_i64(1))])],
        )
        .unwrap();
        // these are actually isomorphic and the box finds the identity;
        // the unknown path needs a genuinely out-of-box pair, exercised by
        // scaling: [e1, e2] = 25 e2 forces eigenvalue scaling by 25
        let c = SuperAlgebra::from_bracket_entries(
            f,
            dim,
            crate::superalg::algebra::standard_names(2),
            &[(0, 1, vec![(1, f.from_i64(25))])],
        )
        .unwrap();
        assert!(matches!(
            find_isomorphism(&a, &b, Budget::default()).unwrap(),
            IsomorphismOutcome::Witness(_)
        ));
        match find_isomorphism(&a, &c, Budget::default()).unwrap() {
            IsomorphismOutcome::Unknown(reason) => {
                assert!(reason.contains("exhausted"));
            }
            IsomorphismOutcome::Witness(m) => {
                // a and c are isomorphic, but only via f(e1) = e1/25 + ...,
                // whose coefficient lies outside the search box
                panic!("unexpected witness {m:?}");
            }
            IsomorphismOutcome::NotIsomorphic(r) => {
                panic!("rational search must not claim refutation: {r}");
            }
        }
    }
}
