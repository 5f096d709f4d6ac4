//! Randomized invariants over the catalog: section round trips through
//! arbitrary complements, witness group laws, stem decomposition shape,
//! multiplier basis independence, and a brute-force isomorphism oracle
//! over GF(5).

use proptest::prelude::*;
use superiso::catalog;
use superiso::cohomcover::multiplier;
use superiso::factorset::{
    factor_set_from_section, glue_isomorphism, reconstruct, reconstruction_isomorphism,
    validate_factor_set, FactorSet,
};
use superiso::isoclinism::{
    check_witness, compose_witnesses, find_isoclinism, invert_witness, is_stem, stem_decompose,
    witness_coherence_check, witness_from_isomorphism,
};
use superiso::random::{random_graded_automorphism, seeded_rng};
use superiso::superalg::search::{find_isomorphism, Budget, IsomorphismOutcome};
use superiso::{Field, GradedDim, GradedLinearMap, Matrix, SuperAlgebra};

fn cat(name: &str) -> SuperAlgebra {
    catalog::get(name).unwrap()
}

fn valid_names() -> Vec<&'static str> {
    catalog::names()
        .into_iter()
        .filter(|n| catalog::get(n).unwrap().is_valid())
        .collect()
}

fn valid_algebra() -> impl Strategy<Value = SuperAlgebra> {
    proptest::sample::select(valid_names()).prop_map(cat)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, .. ProptestConfig::default() })]

    // any graded complement of the center serves as a section; the factor
    // set it produces is valid and rebuilds the algebra on the nose
    #[test]
    fn randomized_complements_round_trip(l in valid_algebra(), seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let k = l
            .center()
            .random_complement_in(&l.full_space(), &mut rng)
            .unwrap();
        let (r, t) = factor_set_from_section(&l, &k).unwrap();
        prop_assert!(validate_factor_set(&r).is_valid());

        let theta = reconstruction_isomorphism(&l, &k, &t, &r).unwrap();
        let rec = reconstruct(&r).unwrap();
        prop_assert!(theta.is_isomorphism(&rec.algebra, &l).unwrap());

        // the rebuilt center copy sits inside the center, with equality
        // exactly on stem algebras
        let rebuilt_center = rec.algebra.center();
        prop_assert!(rebuilt_center.contains(&rec.center_copy));
        if is_stem(&l) {
            prop_assert_eq!(&rebuilt_center, &rec.center_copy);
        }
    }

    // witnesses made from isomorphisms verify, invert, and cancel
    #[test]
    fn automorphism_witnesses_obey_the_group_laws(l in valid_algebra(), seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let p = random_graded_automorphism(l.field(), l.dim(), &mut rng);
        let moved = l.transform_basis(&p).unwrap();
        let g = p.inverse().unwrap();

        let w = witness_from_isomorphism(&g, &l, &moved).unwrap();
        prop_assert!(check_witness(&w).unwrap());
        prop_assert!(witness_coherence_check(&w).unwrap());

        let back = invert_witness(&w).unwrap();
        prop_assert!(check_witness(&back).unwrap());
        prop_assert!(witness_coherence_check(&back).unwrap());

        let round = compose_witnesses(&w, &back).unwrap();
        prop_assert!(round.phi.matrix().is_identity());
        prop_assert!(round.theta.matrix().is_identity());
        prop_assert!(check_witness(&round).unwrap());
    }

    // stem + abelian decomposition: dimensions add up, the stem part is
    // stem, and decomposing again strips nothing further
    #[test]
    fn stem_decomposition_shape(l in valid_algebra()) {
        let dec = stem_decompose(&l).unwrap();
        let t = &dec.stem.algebra;
        prop_assert_eq!(t.dim().plus(&dec.abelian.dim()), l.dim());
        prop_assert!(dec.abelian.derived().is_zero_space());
        prop_assert!(is_stem(t));
        prop_assert!(dec.iso.is_isomorphism(&l, &dec.sum.algebra).unwrap());

        let again = stem_decompose(t).unwrap();
        prop_assert_eq!(again.abelian.dim(), GradedDim::new(0, 0));
    }

    // the multiplier dimension does not see the choice of basis
    #[test]
    fn multiplier_dimension_is_a_basis_invariant(l in valid_algebra(), seed in any::<u64>()) {
        let mut rng = seeded_rng(seed);
        let p = random_graded_automorphism(l.field(), l.dim(), &mut rng);
        let moved = l.transform_basis(&p).unwrap();
        prop_assert_eq!(
            multiplier(&l).unwrap().graded_dim,
            multiplier(&moved).unwrap().graded_dim
        );
    }
}

// every padded member of a family is isoclinic to the stem algebra, and the
// stem member alone attains the minimal total dimension
#[test]
fn families_minimize_total_dimension_at_the_stem_member() {
    let pads = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];
    for name in ["heisenberg-1-0", "heisenberg-0-1", "solvable-2-1", "sl2"] {
        let t = cat(name);
        assert!(is_stem(&t), "{name} is a stem algebra");
        let mut totals = Vec::new();
        for (m, n) in pads {
            let a = SuperAlgebra::abelian(t.field(), GradedDim::new(m, n), None);
            let member = t.direct_sum(&a).unwrap().algebra;
            let outcome = find_isoclinism(&member, &t, Budget::default()).unwrap();
            let w = outcome
                .witness()
                .unwrap_or_else(|| panic!("{name} plus abelian ({m}|{n}) is isoclinic to {name}"));
            assert!(check_witness(w).unwrap());
            assert!(witness_coherence_check(w).unwrap());
            totals.push(member.total_dim());
        }
        let min = *totals.iter().min().unwrap();
        assert_eq!(totals[0], min);
        assert_eq!(
            totals.iter().filter(|d| **d == min).count(),
            1,
            "only the unpadded member of the {name} family has minimal dimension"
        );
    }
}

// all k x k invertible matrices over GF(5)
fn invertibles_gf5(k: usize) -> Vec<Matrix> {
    let f = Field::prime(5).unwrap();
    let mut out = Vec::new();
    let cells = k * k;
    let total = 5usize.pow(cells as u32);
    for code in 0..total {
        let mut c = code;
        let mut rows = vec![vec![f.zero(); k]; k];
        for cell in 0..cells {
            rows[cell / k][cell % k] = f.from_i64((c % 5) as i64);
            c /= 5;
        }
        let m = Matrix::from_rows(f, k, &rows).unwrap();
        if m.rank() == k {
            out.push(m);
        }
    }
    out
}

// all graded bijections for a graded dimension over GF(5), as full matrices
fn graded_bijections_gf5(dim: GradedDim) -> Vec<GradedLinearMap> {
    let f = Field::prime(5).unwrap();
    let (m, n) = (dim.even, dim.odd);
    let d = m + n;
    let mut out = Vec::new();
    for even in invertibles_gf5(m) {
        for odd in invertibles_gf5(n) {
            let mut rows = vec![vec![f.zero(); d]; d];
            for i in 0..m {
                rows[i][..m].clone_from_slice(even.row(i));
            }
            for i in 0..n {
                rows[m + i][m..].clone_from_slice(odd.row(i));
            }
            let matrix = Matrix::from_rows(f, d, &rows).unwrap();
            out.push(GradedLinearMap::new(dim, dim, matrix).unwrap());
        }
    }
    out
}

// exhaustive enumeration over GF(5) agrees with the backtracking search on
// both the positive and the negative answer, and the search never gives up
#[test]
fn gf5_search_matches_the_exhaustive_oracle() {
    let names = [
        "gf5-abelian-1-1",
        "gf5-heisenberg-0-1",
        "gf5-heisenberg-1-0",
        "gf5-solvable-2-1",
        "gf5-abelian-2-1",
        "gf5-affine-2-0",
    ];
    for (i, a_name) in names.iter().enumerate() {
        for b_name in names.iter().skip(i) {
            let a = cat(a_name);
            let b = cat(b_name);
            if a.dim() != b.dim() {
                continue;
            }
            let exists = graded_bijections_gf5(a.dim())
                .iter()
                .any(|g| g.is_homomorphism(&a, &b).unwrap());
            match find_isomorphism(&a, &b, Budget::default()).unwrap() {
                IsomorphismOutcome::Witness(w) => {
                    assert!(exists, "search found an isomorphism {a_name} -> {b_name} that brute force missed");
                    assert!(w.is_isomorphism(&a, &b).unwrap());
                }
                IsomorphismOutcome::NotIsomorphic(_) => {
                    assert!(!exists, "brute force found an isomorphism {a_name} -> {b_name} that search missed");
                }
                IsomorphismOutcome::Unknown(why) => {
                    panic!("search gave up on {a_name} vs {b_name}: {why}");
                }
            }
        }
    }
}

// gluing with (mu, nu, delta) produces a map whose center block is nu and
// whose induced quotient map is mu
#[test]
fn glue_restricts_to_nu_and_mu() {
    let l = cat("heisenberg-1-0");
    let f = l.field();
    let k = l.center().complement_in(&l.full_space()).unwrap();
    let (r, _) = factor_set_from_section(&l, &k).unwrap();
    let qdim = r.quotient.dim();
    let zdim = r.center_space.dim();
    let two = f.from_i64(2);

    // two compatible pairs: scaling one quotient coordinate scales the
    // factor set by the determinant, and scaling the values directly is
    // matched by the same scaling of the center
    let diag = GradedLinearMap::new(
        qdim,
        qdim,
        Matrix::from_rows(f, 2, &[vec![f.one(), f.zero()], vec![f.zero(), two.clone()]]).unwrap(),
    )
    .unwrap();
    let id_q = GradedLinearMap::identity(f, qdim);
    let nu = GradedLinearMap::new(zdim, zdim, Matrix::from_rows(f, 1, &[vec![two.clone()]]).unwrap())
        .unwrap();
    let delta =
        GradedLinearMap::new(qdim, zdim, Matrix::from_rows(f, 1, &[vec![f.zero()], vec![f.zero()]]).unwrap())
            .unwrap();
    let scaled: Vec<Vec<_>> = r
        .values()
        .iter()
        .map(|v| superiso::exactlin::matrix::vec_scale(f, &two, v))
        .collect();
    let s = FactorSet::new(r.quotient.clone(), r.center_space.clone(), scaled).unwrap();

    for (target, mu) in [(r.clone(), diag), (s, id_q)] {
        let lambda = glue_isomorphism(&r, &target, &mu, &nu, &delta).unwrap();
        let rec_r = reconstruct(&r).unwrap();
        let rec_t = reconstruct(&target).unwrap();

        let on_center = rec_r.center_embed.then(&lambda).unwrap();
        let nu_embedded = nu.then(&rec_t.center_embed).unwrap();
        assert_eq!(on_center.matrix(), nu_embedded.matrix());

        let project = GradedLinearMap::new(
            rec_t.algebra.dim(),
            qdim,
            rec_t.quotient_embed.matrix().transpose(),
        )
        .unwrap();
        let induced = rec_r.quotient_embed.then(&lambda).unwrap().then(&project).unwrap();
        assert_eq!(induced.matrix(), mu.matrix());
    }
}
