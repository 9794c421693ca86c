use std::collections::BTreeMap;

use nsring_core::ci3::{
    canonical_decomposition, detect_ci3, frobenius_ci3, n_a_general, n_values_ci3,
    CiEdim3Structure,
};
use nsring_core::corpus;
use nsring_core::family::{build_hna, hna_generators, GluedSemigroup};
use nsring_core::index::{index, n_value_apery, n_value_direct, n_value_ord_formula, Method};
use nsring_core::oracle::{frobenius_by_sieve, membership_sieve};
use nsring_core::NumericalSemigroup;
use num_integer::Integer;
use proptest::prelude::*;

fn semigroup(max_gen: u64, max_len: usize) -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2..=max_gen, 1..=max_len).prop_filter_map("gcd must be 1", |g| {
        NumericalSemigroup::new(&g).ok()
    })
}

/// All representations of `w`, by exhaustive recursion; returns the largest
/// coefficient sum.
fn max_representation(w: u64, gens: &[u64]) -> Option<u32> {
    if w == 0 {
        return Some(0);
    }
    let (&g, rest) = gens.split_first()?;
    (0..=w / g)
        .filter_map(|k| max_representation(w - k * g, rest).map(|o| o + k as u32))
        .max()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn apery_table_invariants(h in semigroup(25, 4), pick in 0usize..40) {
        let f = h.frobenius();
        let candidates: Vec<u64> = (1..=(f + h.multiplicity() as i64) as u64)
            .filter(|&w| h.contains(w))
            .collect();
        let s = candidates[pick % candidates.len()];
        let t = h.apery_set(s).unwrap();
        prop_assert_eq!(t.entries.len() as u64, s);
        prop_assert_eq!(t.entries[0].element, 0);
        prop_assert_eq!(t.entries[0].order, 0);
        for (r, e) in t.entries.iter().enumerate() {
            prop_assert_eq!(e.element % s, r as u64);
            prop_assert!(h.contains(e.element));
            prop_assert!(e.element < s || !h.contains(e.element - s));
        }
        prop_assert_eq!(t.max_element() as i64, f + s as i64);
    }

    #[test]
    fn membership_matches_sieve(h in semigroup(30, 5)) {
        let bound = (h.frobenius() + 2 * h.max_generator() as i64) as u64;
        let sieve = membership_sieve(h.generators(), bound);
        for w in 0..=bound {
            prop_assert_eq!(h.contains(w), sieve[w as usize], "w = {}", w);
        }
        prop_assert_eq!(Some(h.frobenius()), frobenius_by_sieve(h.generators(), 1_000_000));
    }

    #[test]
    fn gaps_end_at_frobenius(h in semigroup(30, 4)) {
        let gaps = h.gaps().unwrap();
        prop_assert_eq!(gaps.last().map(|&g| g as i64).unwrap_or(-1), h.frobenius());
        prop_assert_eq!(gaps.len() as u64, h.gap_count().unwrap());
    }

    #[test]
    fn order_matches_enumeration(h in semigroup(20, 4)) {
        for w in 0..=60u64 {
            let expected = max_representation(w, h.generators());
            let got = h.order(w).ok();
            prop_assert_eq!(got, expected, "w = {}", w);
        }
    }

    #[test]
    fn order_is_superadditive(h in semigroup(20, 4), u in 0u64..80, v in 0u64..80) {
        prop_assume!(h.contains(u) && h.contains(v));
        prop_assert!(h.order(u + v).unwrap() >= h.order(u).unwrap() + h.order(v).unwrap());
    }

    #[test]
    fn symmetry_matches_definition(h in semigroup(25, 4)) {
        let f = h.frobenius();
        let by_definition = (0..=f.max(-1)).all(|s| {
            h.contains(s as u64) != h.contains((f - s) as u64)
        });
        prop_assert_eq!(h.is_symmetric(), by_definition);
    }

    #[test]
    fn oracles_agree(h in semigroup(20, 4)) {
        for &s in h.generators() {
            prop_assert_eq!(n_value_apery(&h, s).unwrap(), n_value_direct(&h, s).unwrap());
        }
    }

    #[test]
    fn n_is_antimonotone(h in semigroup(15, 3), s in 1u64..40, u in 1u64..40) {
        prop_assume!(h.contains(s) && h.contains(u));
        prop_assert!(n_value_apery(&h, s + u).unwrap() >= n_value_apery(&h, s).unwrap());
    }

    #[test]
    fn index_is_min_over_all_elements(h in semigroup(15, 3)) {
        let report = index(&h, Method::Apery).unwrap();
        let bound = (h.frobenius() + 2 * h.max_generator() as i64) as u64;
        let min_all = (1..=bound)
            .filter(|&w| h.contains(w))
            .map(|w| n_value_apery(&h, w).unwrap())
            .min()
            .unwrap();
        prop_assert_eq!(report.index, min_all);
        prop_assert_eq!(report.index == 1, h.is_regular());
    }

    #[test]
    fn hypersurface_index_is_multiplicity(a in 2u64..60, b in 2u64..200) {
        prop_assume!(a < b && a.gcd(&b) == 1);
        let h = NumericalSemigroup::new(&[a, b]).unwrap();
        prop_assert_eq!(index(&h, Method::Direct).unwrap().index as u64, a);
    }

    #[test]
    fn ci_detection_iff_symmetric(h in semigroup(40, 3)) {
        prop_assume!(h.embedding_dimension() == 3);
        prop_assert_eq!(!detect_ci3(&h).unwrap().is_empty(), h.is_symmetric());
    }

    #[test]
    fn n_a_independent_of_decomposition(x in 2u64..15, y in 3u64..20, a1 in 0u64..20, a2 in 0u64..40) {
        prop_assume!(x < y && x.gcd(&y) == 1 && a1 + a2 > 0);
        let a = a1 * x + a2 * y;
        let (c1, c2) = canonical_decomposition(a, x, y).unwrap();
        prop_assert!(c2 < x);
        prop_assert_eq!(n_a_general(x, y, a1, a2), n_a_general(x, y, c1, c2));
    }
}

fn ci3_sample() -> Vec<(NumericalSemigroup, CiEdim3Structure)> {
    corpus::ci3_corpus(99, 150)
}

#[test]
fn closed_forms_match_frobenius_and_structures_agree() {
    let mut multi = 0;
    for (h, _) in ci3_sample() {
        let structures = detect_ci3(&h).unwrap();
        let first: BTreeMap<u64, u32> = n_values_ci3(&structures[0]).unwrap();
        for s in &structures {
            assert_eq!(frobenius_ci3(s), h.frobenius(), "{h} {s:?}");
            assert_eq!(n_values_ci3(s).unwrap(), first, "{h}");
        }
        multi += usize::from(structures.len() > 1);
    }
    // the sample must exercise the multi-structure path
    assert!(multi > 0);
    let four_ten_fifteen = NumericalSemigroup::new(&[4, 10, 15]).unwrap();
    assert_eq!(detect_ci3(&four_ten_fifteen).unwrap().len(), 2);
}

fn symmetric_sample() -> Vec<NumericalSemigroup> {
    let mut out: Vec<NumericalSemigroup> = corpus::gluing_corpus(5, 40)
        .into_iter()
        .map(|g| g.semigroup)
        .collect();
    out.extend(ci3_sample().into_iter().take(40).map(|(h, _)| h));
    out
}

#[test]
fn ord_formula_holds_on_symmetric_semigroups() {
    for h in symmetric_sample() {
        assert!(h.is_symmetric(), "{h}");
        // every element up to a small bound, then generators and f + a_1
        let top = (h.frobenius() + h.multiplicity() as i64) as u64;
        let mut elements: Vec<u64> = (1..=top.min(400)).filter(|&s| h.contains(s)).collect();
        elements.extend(h.generators());
        elements.push(top);
        for s in elements {
            assert_eq!(
                n_value_ord_formula(&h, s).unwrap(),
                n_value_apery(&h, s).unwrap(),
                "{h}, s = {s}"
            );
        }
    }
}

#[test]
fn ding_gap_nonnegative_on_symmetric() {
    for h in symmetric_sample() {
        let r = index(&h, Method::OrdFormula).unwrap();
        assert!(r.ding_gap >= 0, "{h}: {}", r.ding_gap);
    }
}

#[test]
fn gluing_recurrence_and_symmetry() {
    for g in corpus::gluing_corpus(11, 60) {
        let h = &g.semigroup;
        assert!(h.is_symmetric(), "{h}");
        assert_eq!(g.frobenius_by_recurrence().unwrap(), h.frobenius(), "{h}");
        if h.frobenius() <= 1_000_000 {
            assert_eq!(
                frobenius_by_sieve(h.generators(), 10_000_000),
                Some(h.frobenius())
            );
        }
    }
}

#[test]
fn hna_closed_form_generators() {
    for n in 1..=12u32 {
        for a in (1..=15u64).step_by(2) {
            let built = build_hna(n, a).unwrap();
            let closed = hna_generators(n, a, u64::MAX).unwrap();
            assert_eq!(built.semigroup.generators(), closed.as_slice(), "n={n} a={a}");
            assert_eq!(built.chain.len() as u32, n - 1);
        }
    }
}

#[test]
fn hna_index_by_ord_formula() {
    for n in 1..=10u32 {
        for a in (1..=15u64).step_by(2) {
            let h = build_hna(n, a).unwrap().semigroup;
            assert_eq!(index(&h, Method::OrdFormula).unwrap().index, n + 1, "n={n} a={a}");
        }
    }
}

#[test]
fn glued_from_root_chain_matches_direct_gluing() {
    let root = NumericalSemigroup::new(&[2, 3]).unwrap();
    let g = GluedSemigroup::root(root).glue(4, 5).unwrap().glue(25, 3).unwrap();
    assert_eq!(g.semigroup.generators(), &[12, 25, 30, 45]);
    assert_eq!(g.frobenius_by_recurrence().unwrap(), 3 * 21 + 2 * 25);
    assert_eq!(g.semigroup.frobenius(), 113);
}

#[test]
fn corrected_a_prime_zero_example() {
    // a = 10 = 0·3 + 2·5 with p = 3: ⟨9, 10, 15⟩
    let h = NumericalSemigroup::new(&[9, 10, 15]).unwrap();
    let s = detect_ci3(&h).unwrap();
    let s = s.iter().find(|s| s.roles.a == 10).unwrap();
    assert_eq!((s.a_prime, s.a_dprime, s.p), (0, 2, 3));
    let n = n_values_ci3(s).unwrap();
    assert_eq!(n[&9], 6);
    assert_eq!(n_value_direct(&h, 9).unwrap(), 6);
    assert_eq!(n_value_apery(&h, 9).unwrap(), 6);
}
