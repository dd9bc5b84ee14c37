use proptest::prelude::*;

use cellhecke::coeff::{FiniteField, FractionField, IntegerLaurent, Laurent, Monomial, RatFunc, Ring};
use cellhecke::hecke::{Elem, Hecke};
use cellhecke::heckeclifford::{HCElem, HeckeClifford};
use cellhecke::symgroup::{compositions, Perm, SymGroup};
use cellhecke::tableau::row_standard;

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((0u32..3, -3i32..4, -5i128..6), 0..5)
        .prop_map(|ts| Laurent::from_terms(ts.into_iter().map(|(a, q, c)| (Monomial::new(a, q), c))))
}

fn nonzero_laurent() -> impl Strategy<Value = Laurent> {
    laurent().prop_filter("nonzero", |x| !x.is_zero())
}

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(|v| Perm::from_one_line(&v).unwrap())
}

fn hecke_elem(h: &Hecke<IntegerLaurent>) -> impl Strategy<Value = Elem<IntegerLaurent>> {
    let h = h.clone();
    let order = h.dim() as u32;
    prop::collection::vec((0..order, laurent()), 0..4)
        .prop_map(move |ts| h.from_terms(ts.into_iter().map(|(k, c)| (h.group().perm(k).clone(), c))).unwrap())
}

fn hc_elem(hc: &HeckeClifford<IntegerLaurent>, n: usize) -> impl Strategy<Value = HCElem<IntegerLaurent>> {
    let hc = hc.clone();
    let order = (1..=n as u32).product::<u32>();
    prop::collection::vec((0..1u32 << n, 0..order, laurent()), 0..4)
        .prop_map(move |ts| ts.into_iter().fold(hc.zero(), |acc, (mask, w, c)| hc.add(&acc, &hc.scale(&c, &hc.basis_element(mask, w)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(x in laurent(), y in laurent(), z in laurent()) {
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn laurent_exact_division(x in laurent(), y in nonzero_laurent()) {
        prop_assert_eq!(x.mul(&y).div_exact(&y), Some(x));
    }

    #[test]
    fn fractions_invert(x in laurent(), y in nonzero_laurent(), z in nonzero_laurent()) {
        let f = FractionField;
        let r = RatFunc::new(x, y.clone());
        let s = RatFunc::new(z, y);
        let back = f.mul(&f.mul(&r, &s), &f.inv(&s).unwrap());
        prop_assert!(f.is_zero(&f.sub(&back, &r)));
        prop_assert!(f.is_zero(&f.sub(&f.mul(&r, &RatFunc::from_poly(r.den().clone())), &RatFunc::from_poly(r.num().clone()))));
    }

    #[test]
    fn finite_field_inverses(p in prop::sample::select(vec![3u64, 5, 7, 101, 65_537]), x in 1i64..1_000_000) {
        let f = FiniteField::new(p, 2, 1);
        let e = f.from_int(x);
        prop_assume!(!f.is_zero(&e));
        prop_assert!(f.is_one(&f.mul(&e, &f.inv(&e).unwrap())));
    }

    #[test]
    fn reduced_words(w in (1usize..7).prop_flat_map(perm)) {
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Perm::from_word(w.n(), &word), w.clone());
        prop_assert_eq!(w.inverse().length(), w.length());
        prop_assert_eq!(w.compose(&w.inverse()), Perm::identity(w.n()));
    }

    #[test]
    fn descents_change_length((w, i) in (2usize..7).prop_flat_map(|n| (perm(n), 1..n))) {
        let ws = w.right_s(i);
        prop_assert_eq!(ws.length().abs_diff(w.length()), 1);
        prop_assert_eq!(w.has_right_descent(i), ws.length() < w.length());
    }

    #[test]
    fn row_standard_tableaux_count_cosets(n in 1usize..6, k in 0usize..16) {
        let all = compositions(n);
        let lambda = &all[k % all.len()];
        let g = SymGroup::get(n);
        prop_assert_eq!(row_standard(lambda).len(), g.min_left_coset_reps(lambda).len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hecke_is_associative(
        (x, y, z) in {
            let h = Hecke::new(IntegerLaurent, 4);
            (hecke_elem(&h), hecke_elem(&h), hecke_elem(&h))
        }
    ) {
        let h = Hecke::new(IntegerLaurent, 4);
        let l = h.mul(&h.mul(&x, &y).unwrap(), &z).unwrap();
        let r = h.mul(&x, &h.mul(&y, &z).unwrap()).unwrap();
        prop_assert!(h.equal(&l, &r));
        let d = h.mul(&x, &h.add(&y, &z)).unwrap();
        prop_assert!(h.equal(&d, &h.add(&h.mul(&x, &y).unwrap(), &h.mul(&x, &z).unwrap())));
    }

    #[test]
    fn hecke_clifford_is_associative(
        (x, y, z) in {
            let hc = HeckeClifford::new(IntegerLaurent, 3);
            (hc_elem(&hc, 3), hc_elem(&hc, 3), hc_elem(&hc, 3))
        }
    ) {
        let hc = HeckeClifford::new(IntegerLaurent, 3);
        let l = hc.mul(&hc.mul(&x, &y).unwrap(), &z).unwrap();
        let r = hc.mul(&x, &hc.mul(&y, &z).unwrap()).unwrap();
        prop_assert!(hc.equal(&l, &r));
    }

    #[test]
    fn hecke_clifford_normal_forms_round_trip(
        x in {
            let hc = HeckeClifford::new(IntegerLaurent, 3);
            hc_elem(&hc, 3)
        }
    ) {
        let hc = HeckeClifford::new(IntegerLaurent, 3);
        prop_assert!(hc.equal(&hc.from_t_first(&hc.to_t_first(&x).unwrap()).unwrap(), &x));
    }
}
