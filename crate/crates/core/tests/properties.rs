use std::sync::Arc;

use dkp_core::qarith::{q_binomial, q_int, QFraction};
use dkp_core::rootdata::{root_system, Series};
use dkp_core::strata::{double_bruhat_stratum_dim, kernel_lattice_basis, stratum_dimension};
use dkp_core::weyl::{bruhat_interval, bruhat_leq, element_from_word, longest_element};
use dkp_core::{stratification_report, RootSystem, WeylElement};
use proptest::prelude::*;

fn systems() -> Vec<Arc<RootSystem>> {
    [
        (Series::A, 3),
        (Series::B, 3),
        (Series::C, 3),
        (Series::D, 4),
        (Series::G, 2),
        (Series::F, 4),
    ]
    .into_iter()
    .map(|(s, r)| Arc::new(root_system(s, r).unwrap()))
    .collect()
}

fn system_and_word(max_len: usize) -> impl Strategy<Value = (Arc<RootSystem>, Vec<usize>)> {
    (0..systems().len()).prop_flat_map(move |k| {
        let rs = systems()[k].clone();
        let rank = rs.rank();
        (Just(rs), prop::collection::vec(1..=rank, 0..=max_len))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn word_times_reverse_is_identity((rs, word) in system_and_word(12)) {
        let mut full = word.clone();
        full.extend(word.iter().rev());
        prop_assert!(element_from_word(&rs, &full).unwrap().is_identity());
    }

    #[test]
    fn length_is_inversion_count((rs, word) in system_and_word(12)) {
        let w = element_from_word(&rs, &word).unwrap();
        prop_assert_eq!(w.length(), w.inversion_count());
        prop_assert!(w.length() <= word.len());
        prop_assert_eq!(w.length() % 2, word.len() % 2);
        prop_assert_eq!(w.inverse().length(), w.length());
    }

    #[test]
    fn subwords_lie_below((rs, word) in system_and_word(10), mask in any::<u16>()) {
        let w = element_from_word(&rs, &word).unwrap();
        let sub: Vec<usize> = word.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s).collect();
        let y = element_from_word(&rs, &sub).unwrap();
        // every subword of a word whose product is reduced lies below
        if w.length() == word.len() {
            prop_assert!(bruhat_leq(&y, &w).unwrap());
        }
        prop_assert!(bruhat_leq(&WeylElement::identity(&rs), &w).unwrap());
        prop_assert!(bruhat_leq(&w, &longest_element(&rs)).unwrap());
    }

    #[test]
    fn report_rows_are_consistent((rs, word) in system_and_word(7)) {
        let w = element_from_word(&rs, &word).unwrap();
        let interval = bruhat_interval(&w, 16).unwrap();
        let records = stratification_report(&w, 16).unwrap();
        prop_assert_eq!(records.len(), interval.len());
        for rec in &records {
            prop_assert!(rec.check().is_ok());
            prop_assert_eq!(rec.stratum_dim, stratum_dimension(&w, &rec.y).unwrap());
            prop_assert_eq!(&rec.lattice_basis, &kernel_lattice_basis(&rec.y, &w).unwrap());
            prop_assert_eq!(rec.double_dim, double_bruhat_stratum_dim(&rec.y, &w).unwrap());
            prop_assert!(rec.stratum_dim + rec.double_dim <= rs.rank());
        }
        // the top row is y = w with everything zero
        let top = records.last().unwrap();
        prop_assert_eq!(&top.y, &w);
        prop_assert_eq!((top.stratum_dim, top.leaf_dim), (0, 0));
    }

    #[test]
    fn q_binomial_symmetry(n in 0u32..10, k in 0i64..10, d in 1u32..4) {
        prop_assume!(k <= i64::from(n));
        prop_assert_eq!(q_binomial(n, k, d), q_binomial(n, i64::from(n) - k, d));
    }

    #[test]
    fn q_int_product_rule(a in 1u32..8, b in 1u32..8) {
        // [a+b] = q^{-b}[a] + q^{a}[b]
        let lhs = q_int(a + b, 1);
        let rhs = &q_int(a, 1).shift(-i64::from(b)) + &q_int(b, 1).shift(i64::from(a));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fraction_division_inverts(a in 1u32..6, b in 1u32..6) {
        let x = QFraction::from_poly(q_int(a, 1));
        let y = QFraction::from_poly(q_int(b, 2));
        let back = &(&x / &y) * &y;
        prop_assert_eq!(back, x);
    }
}

#[test]
fn unknown_series_is_rejected() {
    assert!("X3".parse::<RootSystem>().is_err());
    assert!("A0".parse::<RootSystem>().is_err());
    assert!("D3".parse::<RootSystem>().is_err());
    assert!("E9".parse::<RootSystem>().is_err());
}
