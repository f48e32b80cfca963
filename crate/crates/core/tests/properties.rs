mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sextic_core::classify::{e8_perturbation_census, sigma2_census};
use sextic_core::cmap::{canonical_code, Orientation};
use sextic_core::fpgroup::abelian::mat_mul;
use sextic_core::fpgroup::{
    abelian_invariants, artin_action, braid_bracket, braid_word, coset_enumerate, group_order,
    regular_rep, smith_normal_form, Letter, Presentation, Word,
};
use sextic_core::vankampen::{standard_group, SexticGroupSpec};

use common::*;

fn word_strategy(rank: u32, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        (0..rank, any::<bool>()).prop_map(|(g, i)| Letter::new(g, i)),
        0..max_len,
    )
}

/// Free reduction by repeated deletion of adjacent inverse pairs.
fn naive_reduce(mut v: Vec<Letter>) -> Vec<Letter> {
    loop {
        let Some(i) = v.windows(2).position(|w| w[0] == w[1].inv()) else {
            return v;
        };
        v.drain(i..i + 2);
    }
}

proptest! {
    #[test]
    fn words_are_freely_reduced(letters in word_strategy(3, 40)) {
        let w = Word::from_letters(letters.clone());
        let expected = naive_reduce(letters);
        prop_assert_eq!(w.letters(), expected.as_slice());
        prop_assert!((&w * &w.inverse()).is_empty());
    }

    #[test]
    fn exponent_sums_are_additive(a in word_strategy(3, 20), b in word_strategy(3, 20)) {
        let (wa, wb) = (Word::from_letters(a), Word::from_letters(b));
        let sum: Vec<i64> = wa.exponent_sums(3).iter().zip(wb.exponent_sums(3)).map(|(x, y)| x + y).collect();
        prop_assert_eq!((&wa * &wb).exponent_sums(3), sum);
    }

    #[test]
    fn braid_relation_holds_for_artin_action(letters in word_strategy(3, 12)) {
        let w = Word::from_letters(letters);
        prop_assert_eq!(
            artin_action(&braid_word(&[1, 2, 1]), &w),
            artin_action(&braid_word(&[2, 1, 2]), &w)
        );
        prop_assert_eq!(artin_action(&braid_word(&[1, -1, 2, -2]), &w), w.clone());
        // the product x1 x2 x3 is fixed by the full braid group
        let x = Word::from_powers(&[(0, 1), (1, 1), (2, 1)]);
        prop_assert_eq!(artin_action(&braid_word(&[1, 2, -1]), &x), x);
    }

    #[test]
    fn smith_form_is_valid(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let s = smith_normal_form(&a, cols);
        let wide: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        prop_assert_eq!(mat_mul(&mat_mul(&s.u, &wide, rows), &s.v, cols), s.d.clone());
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    prop_assert_eq!(s.d[i][j], 0);
                }
            }
        }
        let diag: Vec<i128> = (0..rows.min(cols)).map(|i| s.d[i][i]).collect();
        prop_assert!(diag.iter().all(|&x| x >= 0));
        for w in diag.windows(2) {
            prop_assert!(w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0), "{:?}", diag);
        }
        // the product of the invariant factors of a square matrix is |det|
        if rows == 3 && cols == 3 {
            let by_minors = abelianization_order_by_minors(&a);
            let prod: i128 = diag.iter().product();
            prop_assert_eq!(by_minors.map(|x| x as i128), (prod != 0).then_some(prod));
        }
    }

    #[test]
    fn abelianization_matches_minors(seed in any::<u64>()) {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rels: Vec<Word> = (0..rng.gen_range(3..6))
            .map(|_| Word::from_powers(&(0..4).map(|_| (rng.gen_range(0..3), rng.gen_range(-4..=4))).collect::<Vec<_>>()))
            .collect();
        let p = Presentation::new(3, rels);
        let inv = abelian_invariants(&p);
        let order = if inv.contains(&0) { None } else { Some(inv.iter().product::<u64>()) };
        prop_assert_eq!(order, abelianization_order_by_minors(&p.exponent_matrix()));
    }

    #[test]
    fn two_brackets_reduce_to_their_gcd(m in 1u32..=6, n in 1u32..=6) {
        let (a, b) = (Word::gen(0), Word::gen(1));
        let involutions = [a.pow(2), b.pow(2)];
        let both = Presentation::new(2, involutions.iter().cloned().chain([braid_bracket(&a, &b, m), braid_bracket(&a, &b, n)]));
        let g = gcd(m as i64, n as i64) as usize;
        // dihedral group of order 2g
        prop_assert_eq!(group_order(&both, 10_000), Ok(2 * g));
    }

    #[test]
    fn canonical_code_agrees_with_brute_force(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_skeleton(&mut rng, 12);
        let b = random_skeleton(&mut rng, 12);
        let a2 = relabel(&a, &random_permutation(&mut rng, a.darts()));
        prop_assert_eq!(canonical_code(&a, Orientation::Preserve), canonical_code(&a2, Orientation::Preserve));
        prop_assert!(isomorphic_brute_force(&a, &a2));
        let same_code = canonical_code(&a, Orientation::Preserve) == canonical_code(&b, Orientation::Preserve);
        prop_assert_eq!(same_code, isomorphic_brute_force(&a, &b));
        // either-orientation codes agree with isomorphism to the map or its mirror
        let either = canonical_code(&a, Orientation::Either) == canonical_code(&b, Orientation::Either);
        prop_assert_eq!(either, isomorphic_brute_force(&a, &b) || isomorphic_brute_force(&a.mirror(), &b));
    }
}

#[test]
fn census_skeletons_conserve_corners() {
    let maps = sigma2_census()
        .into_iter()
        .map(|s| s.map)
        .chain(e8_perturbation_census().into_iter().map(|p| p.map));
    for m in maps.filter(|m| !m.is_circle()) {
        assert!(m.corners_conserved());
        let (v, e, f) = (
            m.vertex_count() as i64,
            m.edge_count() as i64,
            m.face_count() as i64,
        );
        assert_eq!(v - e + f, 2, "Euler characteristic");
    }
}

#[test]
fn census_codes_are_relabel_invariant() {
    let census = sigma2_census();
    for seed in 0..100 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for sk in census.iter().filter(|s| !s.map.is_circle()) {
            let m = &sk.map;
            let r = relabel(m, &random_permutation(&mut rng, m.darts()));
            assert_eq!(
                canonical_code(m, Orientation::Preserve),
                canonical_code(&r, Orientation::Preserve)
            );
        }
    }
}

#[test]
fn census_entries_are_pairwise_non_isomorphic() {
    let census: Vec<_> = sigma2_census()
        .into_iter()
        .filter(|s| !s.map.is_circle())
        .collect();
    for (i, a) in census.iter().enumerate() {
        for b in &census[i + 1..] {
            assert!(!isomorphic_brute_force(&a.map, &b.map));
        }
    }
}

#[test]
fn regular_representation_is_faithful() {
    for (l, m, n) in [(5, 4, 3), (0, 0, 1), (3, 0, 0), (7, 6, 0)] {
        let t = coset_enumerate(
            &standard_group(&SexticGroupSpec::lmn(l, m, n)),
            &[],
            100_000,
        )
        .unwrap();
        let g = regular_rep(&t).unwrap();
        assert_eq!(g.degree(), t.index());
        assert_eq!(g.order(), t.index() as u128, "({l},{m},{n})");
    }
    let q = standard_group(&SexticGroupSpec::lmn(4, 3, 0).mod_alpha2_cubed());
    let t = coset_enumerate(&q, &[], 100_000).unwrap();
    assert_eq!(regular_rep(&t).unwrap().order(), 1800);
}
